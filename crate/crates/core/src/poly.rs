//! Tropical Laurent polynomials: finite maps from integer exponent vectors
//! to exact rational coefficients. The empty map is the polynomial `-inf`.
//!
//! Inserting a term whose exponent is already present keeps the larger
//! coefficient; idempotence of ⊕ makes that the unique normal form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::dot_i64;
use crate::scalar::{Rat, TropScalar};

/// A single tropical monomial `c ⊙ X^⊙m` with finite coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub exp: Vec<i64>,
    pub coeff: Rat,
}

impl Monomial {
    pub fn new(coeff: Rat, exp: Vec<i64>) -> Self {
        Monomial { exp, coeff }
    }

    /// Value `c + m·x` at a rational point.
    pub fn value_at(&self, x: &[Rat]) -> Rat {
        &self.coeff + dot_i64(x, &self.exp)
    }

    /// The lifted vector `(c; m)` in Q^{n+1}, as used by t-admissible
    /// matrices.
    pub fn lift(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(self.exp.len() + 1);
        v.push(self.coeff.clone());
        v.extend(self.exp.iter().map(|&e| Rat::from_integer(BigInt::from(e))));
        v
    }
}

/// Tropical Laurent polynomial in `vars` variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TropPoly {
    vars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl TropPoly {
    /// The polynomial `-inf`.
    pub fn neg_inf(vars: usize) -> Self {
        TropPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Constant polynomial with the given finite coefficient.
    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], c);
        TropPoly { vars, terms }
    }

    /// The multiplicative identity, i.e. the constant 0.
    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::zero())
    }

    /// The monomial `0 ⊙ X_i`.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exp = vec![0; vars];
        exp[i] = 1;
        Self::monomial(vars, Rat::zero(), exp)
    }

    pub fn monomial(vars: usize, coeff: Rat, exp: Vec<i64>) -> Self {
        assert_eq!(exp.len(), vars, "exponent length must equal variable count");
        let mut terms = BTreeMap::new();
        terms.insert(exp, coeff);
        TropPoly { vars, terms }
    }

    /// Builds a polynomial from monomials, max-merging duplicate exponents.
    pub fn from_monomials(vars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = TropPoly::neg_inf(vars);
        for m in monomials {
            if m.exp.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    found: m.exp.len(),
                });
            }
            p.insert_term(m.exp, m.coeff);
        }
        Ok(p)
    }

    fn insert_term(&mut self, exp: Vec<i64>, coeff: Rat) {
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                if coeff > *e.get() {
                    e.insert(coeff);
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_neg_inf(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial {
            exp: e.clone(),
            coeff: c.clone(),
        })
    }

    /// The single monomial, if this polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() == 1 {
            self.monomials().next()
        } else {
            None
        }
    }

    fn check_same_vars(&self, other: &TropPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        Ok(())
    }

    /// Evaluation at a rational point: the maximum of `c + m·x` over all
    /// stored terms, `-inf` for the empty polynomial.
    pub fn eval(&self, x: &[Rat]) -> Result<TropScalar> {
        if x.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: x.len(),
            });
        }
        let mut best: Option<Rat> = None;
        for (exp, coeff) in &self.terms {
            let v = coeff + dot_i64(x, exp);
            best = Some(match best {
                None => v,
                Some(b) => b.max(v),
            });
        }
        Ok(match best {
            None => TropScalar::NegInf,
            Some(v) => TropScalar::Finite(v),
        })
    }

    /// Tropical sum: term-wise max-merge.
    pub fn add(&self, other: &TropPoly) -> Result<TropPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.insert_term(exp.clone(), coeff.clone());
        }
        Ok(out)
    }

    /// Tropical product: full convolution with max-merge.
    pub fn mul(&self, other: &TropPoly) -> Result<TropPoly> {
        self.check_same_vars(other)?;
        let mut out = TropPoly::neg_inf(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(exp, c1 + c2);
            }
        }
        Ok(out)
    }

    /// Tropical power. Negative exponents are only defined for monomials;
    /// `k = 0` yields the multiplicative identity.
    pub fn pow(&self, k: i64) -> Result<TropPoly> {
        if k == 0 {
            return Ok(TropPoly::one(self.vars));
        }
        if k < 0 {
            let Some(m) = self.as_monomial() else {
                return Err(Error::NegativePowerOfPolynomial);
            };
            let exp: Vec<i64> = m.exp.iter().map(|e| e * k).collect();
            let coeff = m.coeff * Rat::from_integer(BigInt::from(k));
            return Ok(TropPoly::monomial(self.vars, coeff, exp));
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Every stored coefficient replaced by 0; `-inf` maps to `-inf`.
    pub fn booleanize(&self) -> TropPoly {
        TropPoly {
            vars: self.vars,
            terms: self
                .terms
                .keys()
                .map(|e| (e.clone(), Rat::zero()))
                .collect(),
        }
    }

    /// Bend relations: one pair `(f, f with term m removed)` per stored term.
    pub fn bend_generators(&self) -> Vec<(TropPoly, TropPoly)> {
        self.terms
            .keys()
            .map(|exp| {
                let mut removed = self.clone();
                removed.terms.remove(exp);
                (self.clone(), removed)
            })
            .collect()
    }

    /// Substitution `X_i ↦ a_i ⊙ X_i`, i.e. `f(x) ↦ f(x + a)`; translates the
    /// congruence variety of any pair involving `f` by `-a`.
    pub fn translate_args(&self, shift: &[Rat]) -> Result<TropPoly> {
        if shift.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: shift.len(),
            });
        }
        Ok(TropPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c + dot_i64(shift, e)))
                .collect(),
        })
    }

    /// Restricts to the given exponent set (used by term filters).
    pub(crate) fn restrict_to(&self, keep: &[Vec<i64>]) -> TropPoly {
        TropPoly {
            vars: self.vars,
            terms: keep
                .iter()
                .filter_map(|e| self.terms.get(e).map(|c| (e.clone(), c.clone())))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    /// `(-1)⊙X ⊕ X^⊙(-1) ⊕ 0` in one variable.
    fn interval_poly() -> TropPoly {
        TropPoly::from_monomials(
            1,
            [
                Monomial::new(rat_int(-1), vec![1]),
                Monomial::new(rat_int(0), vec![-1]),
                Monomial::new(rat_int(0), vec![0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn eval_of_neg_inf_is_neg_inf() {
        let f = TropPoly::neg_inf(1);
        assert_eq!(f.eval(&pt(&[0])).unwrap(), TropScalar::NegInf);
    }

    #[test]
    fn eval_interval_poly_at_one_half() {
        // max(-1 + 1/2, -1/2, 0) = 0.
        let f = interval_poly();
        assert_eq!(
            f.eval(&[rat(1, 2)]).unwrap(),
            TropScalar::Finite(Rat::zero())
        );
    }

    #[test]
    fn eval_two_vars() {
        // X1 ⊕ 3⊙X2^⊙2 at (0,0): max(0, 3) = 3.
        let f = TropPoly::from_monomials(
            2,
            [
                Monomial::new(rat_int(0), vec![1, 0]),
                Monomial::new(rat_int(3), vec![0, 2]),
            ],
        )
        .unwrap();
        assert_eq!(f.eval(&pt(&[0, 0])).unwrap(), TropScalar::from_int(3));
    }

    #[test]
    fn add_with_neg_inf_is_identity() {
        let f = interval_poly();
        assert_eq!(f.add(&TropPoly::neg_inf(1)).unwrap(), f);
    }

    #[test]
    fn binomial_square() {
        // (0 ⊕ X)⊙(0 ⊕ X) = 0 ⊕ X ⊕ X^⊙2.
        let f = TropPoly::one(1).add(&TropPoly::var(1, 0)).unwrap();
        let sq = f.mul(&f).unwrap();
        let expected = TropPoly::from_monomials(
            1,
            [
                Monomial::new(rat_int(0), vec![0]),
                Monomial::new(rat_int(0), vec![1]),
                Monomial::new(rat_int(0), vec![2]),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn monomial_inverse_cancels() {
        let x = TropPoly::var(1, 0);
        let xinv = x.pow(-1).unwrap();
        assert_eq!(x.mul(&xinv).unwrap(), TropPoly::one(1));
    }

    #[test]
    fn negative_power_of_polynomial_rejected() {
        let f = TropPoly::one(1).add(&TropPoly::var(1, 0)).unwrap();
        assert!(matches!(
            f.pow(-1),
            Err(Error::NegativePowerOfPolynomial)
        ));
    }

    #[test]
    fn duplicate_exponents_merge_by_max() {
        let f = TropPoly::from_monomials(
            1,
            [
                Monomial::new(rat_int(1), vec![2]),
                Monomial::new(rat_int(3), vec![2]),
                Monomial::new(rat_int(2), vec![2]),
            ],
        )
        .unwrap();
        assert_eq!(f.term_count(), 1);
        assert_eq!(f.as_monomial().unwrap().coeff, rat_int(3));
    }

    #[test]
    fn booleanize_examples() {
        assert!(TropPoly::neg_inf(2).booleanize().is_neg_inf());
        let f = interval_poly();
        let fb = f.booleanize();
        assert!(fb.monomials().all(|m| m.coeff.is_zero()));
        assert_eq!(fb.term_count(), 3);
        let g = TropPoly::monomial(1, rat_int(3), vec![2]);
        assert_eq!(g.booleanize(), TropPoly::monomial(1, rat_int(0), vec![2]));
    }

    #[test]
    fn bend_generator_counts() {
        let f = TropPoly::from_monomials(
            2,
            [
                Monomial::new(rat_int(0), vec![1, 0]),
                Monomial::new(rat_int(0), vec![0, 1]),
                Monomial::new(rat_int(0), vec![0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(f.bend_generators().len(), 3);

        let m = TropPoly::monomial(1, rat_int(2), vec![1]);
        let bends = m.bend_generators();
        assert_eq!(bends.len(), 1);
        assert!(bends[0].1.is_neg_inf());

        assert!(TropPoly::neg_inf(1).bend_generators().is_empty());
    }

    #[test]
    fn translate_args_shifts_coefficients() {
        // f(1 ⊙ X) for f = X^⊙2 ⊕ 0 gives 2⊙X^⊙2 ⊕ 0.
        let f = TropPoly::monomial(1, rat_int(0), vec![2])
            .add(&TropPoly::one(1))
            .unwrap();
        let g = f.translate_args(&[rat_int(1)]).unwrap();
        let expected = TropPoly::from_monomials(
            1,
            [
                Monomial::new(rat_int(2), vec![2]),
                Monomial::new(rat_int(0), vec![0]),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
    }
}
