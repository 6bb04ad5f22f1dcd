//! The fraction semifield over the tropical Laurent polynomial semiring:
//! formal quotients `num/den` with `den != -inf`, added and multiplied by
//! the usual fraction formulas (no reduction to lowest terms).

use crate::error::{Error, Result};
use crate::poly::{Monomial, TropPoly};
use crate::scalar::{Rat, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropRat {
    num: TropPoly,
    den: TropPoly,
}

impl TropRat {
    pub fn new(num: TropPoly, den: TropPoly) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::DimensionMismatch {
                expected: num.vars(),
                found: den.vars(),
            });
        }
        if den.is_neg_inf() {
            return Err(Error::NegInfDenominator);
        }
        Ok(TropRat { num, den })
    }

    /// Embeds a polynomial as `f / 0`.
    pub fn from_poly(num: TropPoly) -> Self {
        let den = TropPoly::one(num.vars());
        TropRat { num, den }
    }

    pub fn zero(vars: usize) -> Self {
        TropRat::from_poly(TropPoly::neg_inf(vars))
    }

    pub fn num(&self) -> &TropPoly {
        &self.num
    }

    pub fn den(&self) -> &TropPoly {
        &self.den
    }

    pub fn vars(&self) -> usize {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_neg_inf()
    }

    fn check_same_vars(&self, other: &TropRat) -> Result<()> {
        if self.vars() != other.vars() {
            return Err(Error::DimensionMismatch {
                expected: self.vars(),
                found: other.vars(),
            });
        }
        Ok(())
    }

    /// `(n1/d1) ⊕ (n2/d2) = (n1⊙d2 ⊕ n2⊙d1) / (d1⊙d2)`.
    pub fn add(&self, other: &TropRat) -> Result<TropRat> {
        self.check_same_vars(other)?;
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        let den = self.den.mul(&other.den)?;
        TropRat::new(num, den)
    }

    pub fn mul(&self, other: &TropRat) -> Result<TropRat> {
        self.check_same_vars(other)?;
        TropRat::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    /// Swaps numerator and denominator; fails on the zero element.
    pub fn inv(&self) -> Result<TropRat> {
        if self.num.is_neg_inf() {
            return Err(Error::InvertZero);
        }
        Ok(TropRat {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// `num(x) - den(x)` when the numerator is finite at `x`, else `-inf`.
    pub fn eval(&self, x: &[Rat]) -> Result<TropScalar> {
        let n = self.num.eval(x)?;
        let d = self.den.eval(x)?;
        match (n, d) {
            (TropScalar::NegInf, _) => Ok(TropScalar::NegInf),
            (TropScalar::Finite(n), TropScalar::Finite(d)) => Ok(TropScalar::Finite(n - d)),
            (_, TropScalar::NegInf) => Err(Error::NegInfDenominator),
        }
    }

    pub fn booleanize(&self) -> TropRat {
        TropRat {
            num: self.num.booleanize(),
            den: self.den.booleanize(),
        }
    }
}

/// Clears denominators of a pair of tropical rational functions: the pair
/// `(p.num ⊙ q.den, q.num ⊙ p.den)` of polynomials has the same congruence
/// variety as `(p, q)`.
pub fn clear_denominators(p: &TropRat, q: &TropRat) -> Result<(TropPoly, TropPoly)> {
    if p.vars() != q.vars() {
        return Err(Error::DimensionMismatch {
            expected: p.vars(),
            found: q.vars(),
        });
    }
    Ok((p.num.mul(&q.den)?, q.num.mul(&p.den)?))
}

/// The rational function `f_z` that attains its maximum value zero at `z`
/// and only there: the tropical inverse of `⊕_i ((-z_i)⊙X_i ⊕ z_i⊙X_i^⊙(-1))`.
pub fn point_indicator(z: &[Rat]) -> TropRat {
    let n = z.len();
    let mut monomials = Vec::with_capacity(2 * n);
    for (i, zi) in z.iter().enumerate() {
        let mut up = vec![0i64; n];
        up[i] = 1;
        let mut down = vec![0i64; n];
        down[i] = -1;
        monomials.push(Monomial::new(-zi, up));
        monomials.push(Monomial::new(zi.clone(), down));
    }
    let den = TropPoly::from_monomials(n, monomials).expect("exponent lengths match");
    TropRat {
        num: TropPoly::one(n),
        den,
    }
}
