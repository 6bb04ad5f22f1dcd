//! Rational polyhedral sets `{x in Q^n : Ax >= b}` and the exact
//! computations the variety machinery needs: emptiness, dimension via
//! implicit equalities, recession cones, relative-interior points,
//! affine-hull direction bases, linear optimization, and the cell-wise
//! function-equality test for tropical polynomials.
//!
//! A set with no rows denotes the whole space; rational feasibility equals
//! real feasibility for rational data, so emptiness over Q decides emptiness
//! over R.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::canon::canonicalize;
use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::lp::{self, LpOutcome};
use crate::poly::TropPoly;
use crate::scalar::Rat;

/// Value of a linear optimum over a polyhedral set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extended {
    NegInf,
    Finite(Rat),
    PosInf,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyhedralSet {
    n: usize,
    /// Rows `(a, b)` meaning `a·x >= b`.
    rows: Vec<(Vec<Rat>, Rat)>,
}

impl PolyhedralSet {
    /// `R^n`, the system with no constraints.
    pub fn full_space(n: usize) -> Self {
        PolyhedralSet { n, rows: Vec::new() }
    }

    pub fn from_rows(n: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Result<Self> {
        for (a, _) in &rows {
            if a.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: a.len(),
                });
            }
        }
        Ok(PolyhedralSet { n, rows })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    fn matrix(&self) -> Vec<Vec<Rat>> {
        self.rows.iter().map(|(a, _)| a.clone()).collect()
    }

    fn rhs(&self) -> Vec<Rat> {
        self.rows.iter().map(|(_, b)| b.clone()).collect()
    }

    pub fn contains_point(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self.rows.iter().all(|(a, b)| dot(a, x) >= *b))
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.feasible_point()?.is_none())
    }

    pub fn feasible_point(&self) -> Result<Option<Vec<Rat>>> {
        if self.rows.is_empty() {
            return Ok(Some(vec![Rat::zero(); self.n]));
        }
        lp::feasible_point(&self.matrix(), &self.rhs())
    }

    /// For nonempty sets, which rows hold with equality on the whole set.
    /// Returns `None` when the set is empty.
    pub fn implicit_rows(&self) -> Result<Option<Vec<bool>>> {
        let Some(x0) = self.feasible_point()? else {
            return Ok(None);
        };
        let a = self.matrix();
        let b = self.rhs();
        let mut implicit = vec![false; self.rows.len()];
        for (i, (ai, bi)) in self.rows.iter().enumerate() {
            // A row with slack at any feasible point is not implicit.
            if dot(ai, &x0) > *bi {
                continue;
            }
            implicit[i] = match lp::maximize(&a, &b, ai)? {
                LpOutcome::Optimal { value, .. } => value == *bi,
                LpOutcome::Unbounded { .. } => false,
                LpOutcome::Infeasible { .. } => {
                    return Err(Error::Internal("implicit test on empty set".into()))
                }
            };
        }
        Ok(Some(implicit))
    }

    /// `-inf` (None) for the empty set, otherwise `n - rank(implicit rows)`.
    pub fn dimension(&self) -> Result<Option<usize>> {
        let Some(implicit) = self.implicit_rows()? else {
            return Ok(None);
        };
        let eq_rows: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .zip(&implicit)
            .filter(|(_, &imp)| imp)
            .map(|((a, _), _)| a.clone())
            .collect();
        Ok(Some(self.n - linalg::rank(&eq_rows)))
    }

    /// `{x : Ax >= 0}`; defined for nonempty sets.
    pub fn recession_cone(&self) -> Result<PolyhedralSet> {
        if self.is_empty()? {
            return Err(Error::EmptySet);
        }
        Ok(self.recession_cone_unchecked())
    }

    /// The cone `{x : Ax >= 0}` read off the rows without the emptiness
    /// precondition (Booleanized cells use this form directly).
    pub fn recession_cone_unchecked(&self) -> PolyhedralSet {
        PolyhedralSet {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|(a, _)| (a.clone(), Rat::zero()))
                .collect(),
        }
    }

    pub fn intersect(&self, other: &PolyhedralSet) -> Result<PolyhedralSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(PolyhedralSet { n: self.n, rows })
    }

    /// A point satisfying every non-implicit row strictly and every implicit
    /// row with equality: maximize a uniform slack capped at 1.
    pub fn relative_interior_point(&self) -> Result<Vec<Rat>> {
        let Some(implicit) = self.implicit_rows()? else {
            return Err(Error::EmptySet);
        };
        if self.rows.is_empty() {
            return Ok(vec![Rat::zero(); self.n]);
        }
        // Variables (x, s).
        let mut a = Vec::with_capacity(self.rows.len() + 1);
        let mut b = Vec::with_capacity(self.rows.len() + 1);
        for ((ai, bi), imp) in self.rows.iter().zip(&implicit) {
            let mut row = ai.clone();
            row.push(if *imp { Rat::zero() } else { -Rat::one() });
            a.push(row);
            b.push(bi.clone());
        }
        let mut cap = vec![Rat::zero(); self.n];
        cap.push(-Rat::one());
        a.push(cap);
        b.push(-Rat::one());
        let mut c = vec![Rat::zero(); self.n];
        c.push(Rat::one());
        match lp::maximize(&a, &b, &c)? {
            LpOutcome::Optimal { mut point, value } => {
                if !value.is_positive() {
                    return Err(Error::Internal(
                        "relative interior slack not positive on nonempty set".into(),
                    ));
                }
                point.pop();
                Ok(point)
            }
            _ => Err(Error::Internal("slack LP must have an optimum".into())),
        }
    }

    /// Primitive integer basis of the direction space of the affine hull;
    /// its length equals the dimension.
    pub fn affine_hull_directions(&self) -> Result<Vec<Vec<i64>>> {
        let Some(implicit) = self.implicit_rows()? else {
            return Err(Error::EmptySet);
        };
        let eq_rows: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .zip(&implicit)
            .filter(|(_, &imp)| imp)
            .map(|((a, _), _)| a.clone())
            .collect();
        let basis = linalg::kernel_basis(&eq_rows, self.n);
        Ok(basis
            .iter()
            .map(|v| linalg::primitive_integer(v).expect("kernel basis vector is nonzero"))
            .collect())
    }

    /// Supremum of `c·x + c0` over the set.
    pub fn max_linear(&self, c: &[Rat], c0: &Rat) -> Result<Extended> {
        if c.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: c.len(),
            });
        }
        match lp::maximize(&self.matrix(), &self.rhs(), c)? {
            LpOutcome::Infeasible { .. } => Ok(Extended::NegInf),
            LpOutcome::Unbounded { .. } => Ok(Extended::PosInf),
            LpOutcome::Optimal { value, .. } => Ok(Extended::Finite(value + c0)),
        }
    }

    /// Bounded iff the recession cone is the origin; defined for nonempty
    /// sets.
    pub fn is_bounded(&self) -> Result<bool> {
        if self.is_empty()? {
            return Err(Error::EmptySet);
        }
        Ok(self.recession_cone_unchecked().dimension()? == Some(0))
    }

    /// Is `self` a subset of `other`? Decided row by row: `a·x >= b` holds on
    /// `self` iff the minimum of `a·x` over `self` is at least `b`.
    pub fn is_subset_of(&self, other: &PolyhedralSet) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.is_empty()? {
            return Ok(true);
        }
        for (a, b) in &other.rows {
            let neg: Vec<Rat> = a.iter().map(|v| -v).collect();
            match self.max_linear(&neg, &Rat::zero())? {
                Extended::PosInf => return Ok(false),
                Extended::Finite(v) => {
                    if -v < *b {
                        return Ok(false);
                    }
                }
                Extended::NegInf => unreachable!("nonempty set"),
            }
        }
        Ok(true)
    }

    pub fn set_eq(&self, other: &PolyhedralSet) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Canonical form: rows scaled to primitive integer normals by positive
    /// factors, deduplicated, sorted; trivial rows dropped. The point set is
    /// unchanged, and equal canonical forms give a cheap syntactic identity.
    pub fn canonical(&self) -> PolyhedralSet {
        let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(self.rows.len());
        for (a, b) in &self.rows {
            if a.iter().all(|v| v.is_zero()) {
                if b.is_positive() {
                    // Unsatisfiable marker row, normalized.
                    rows.push((vec![Rat::zero(); self.n], Rat::one()));
                }
                continue;
            }
            let mut lcm = BigInt::one();
            for v in a {
                lcm = lcm.lcm(v.denom());
            }
            let ints: Vec<BigInt> = a.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            let mut gcd = BigInt::zero();
            for v in &ints {
                gcd = gcd.gcd(v);
            }
            // Positive scale factor lcm/gcd keeps the inequality direction.
            let scale = Rat::new(lcm, gcd);
            let row: Vec<Rat> = a.iter().map(|v| v * &scale).collect();
            rows.push((row, b * &scale));
        }
        rows.sort();
        rows.dedup();
        PolyhedralSet { n: self.n, rows }
    }
}

/// Does `f(x) = g(x)` hold at every point of `p`? Decided exactly: for each
/// essential term `s` of one side, maximize `s(x) - z` subject to `x in p`
/// and `z >= t(x)` for every term `t` of the other side; all suprema must be
/// nonpositive in both directions.
pub fn equal_on(f: &TropPoly, g: &TropPoly, p: &PolyhedralSet) -> Result<bool> {
    if f.vars() != g.vars() {
        return Err(Error::DimensionMismatch {
            expected: f.vars(),
            found: g.vars(),
        });
    }
    if f.vars() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: f.vars(),
        });
    }
    match (f.is_neg_inf(), g.is_neg_inf()) {
        (true, true) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        _ => {}
    }
    if f == g {
        return Ok(true);
    }
    let fc = canonicalize(f)?;
    let gc = canonicalize(g)?;
    Ok(sup_side_nonpositive(&fc, &gc, p)? && sup_side_nonpositive(&gc, &fc, p)?)
}

/// Checks `sup_{x in p} (f(x) - g(x)) <= 0`, assuming both sides finite.
fn sup_side_nonpositive(f: &TropPoly, g: &TropPoly, p: &PolyhedralSet) -> Result<bool> {
    let n = p.ambient_dim();
    // Variables (x, z); constraints: p rows, and z >= t(x) per term t of g.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(p.row_count() + g.term_count());
    let mut b: Vec<Rat> = Vec::with_capacity(p.row_count() + g.term_count());
    for (ai, bi) in p.rows() {
        let mut row = ai.clone();
        row.push(Rat::zero());
        a.push(row);
        b.push(bi.clone());
    }
    for t in g.monomials() {
        let mut row: Vec<Rat> = t
            .exp
            .iter()
            .map(|&e| Rat::from_integer(BigInt::from(-e)))
            .collect();
        row.push(Rat::one());
        a.push(row);
        b.push(t.coeff.clone());
    }
    for s in f.monomials() {
        let mut c: Vec<Rat> = s
            .exp
            .iter()
            .map(|&e| Rat::from_integer(BigInt::from(e)))
            .collect();
        c.push(-Rat::one());
        match lp::maximize(&a, &b, &c)? {
            LpOutcome::Infeasible { .. } => return Ok(true), // p empty: vacuous
            LpOutcome::Unbounded { .. } => return Ok(false),
            LpOutcome::Optimal { value, .. } => {
                if (value + &s.coeff).is_positive() {
                    return Ok(false);
                }
            }
        }
        let _ = n;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::scalar::{rat, rat_int};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn set(n: usize, rows: &[(&[i64], i64)]) -> PolyhedralSet {
        PolyhedralSet::from_rows(
            n,
            rows.iter()
                .map(|(a, b)| (rv(a), rat_int(*b)))
                .collect(),
        )
        .unwrap()
    }

    fn interval01() -> PolyhedralSet {
        set(1, &[(&[1], 0), (&[-1], -1)])
    }

    #[test]
    fn emptiness() {
        assert!(set(1, &[(&[1], 0), (&[-1], 1)]).is_empty().unwrap());
        assert!(!PolyhedralSet::full_space(2).is_empty().unwrap());
        // The documented 2-variable ray cell is nonempty.
        let cell = set(
            2,
            &[(&[1, -2], 3), (&[2, -1], -2), (&[-1, 0], 2), (&[1, 0], -2)],
        );
        assert!(!cell.is_empty().unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(set(1, &[(&[1], 0), (&[-1], 1)]).dimension().unwrap(), None);
        assert_eq!(interval01().dimension().unwrap(), Some(1));
        assert_eq!(set(1, &[(&[1], 0), (&[-1], 0)]).dimension().unwrap(), Some(0));
        assert_eq!(PolyhedralSet::full_space(3).dimension().unwrap(), Some(3));
    }

    #[test]
    fn recession_cones() {
        let cone = interval01().recession_cone().unwrap();
        assert_eq!(cone.dimension().unwrap(), Some(0));

        let ray_cell = set(
            2,
            &[(&[1, -2], 3), (&[2, -1], -2), (&[-1, 0], 2), (&[1, 0], -2)],
        );
        let cone = ray_cell.recession_cone().unwrap();
        assert_eq!(cone.dimension().unwrap(), Some(1));
        assert!(!ray_cell.is_bounded().unwrap());

        let rn = PolyhedralSet::full_space(2).recession_cone().unwrap();
        assert_eq!(rn.dimension().unwrap(), Some(2));

        assert!(set(1, &[(&[1], 0), (&[-1], 1)]).recession_cone().is_err());
    }

    #[test]
    fn intersections() {
        let p = set(1, &[(&[1], 0)]);
        let q = set(1, &[(&[-1], 0)]);
        let both = p.intersect(&q).unwrap();
        assert_eq!(both.dimension().unwrap(), Some(0));
        assert!(p
            .intersect(&PolyhedralSet::full_space(1))
            .unwrap()
            .set_eq(&p)
            .unwrap());
        // Two parallel disjoint lines.
        let l1 = set(2, &[(&[0, 1], 0), (&[0, -1], 0)]);
        let l2 = set(2, &[(&[0, 1], 1), (&[0, -1], -1)]);
        assert!(l1.intersect(&l2).unwrap().is_empty().unwrap());
    }

    #[test]
    fn relative_interior() {
        let x = set(1, &[(&[1], 0), (&[-1], 0)]).relative_interior_point().unwrap();
        assert_eq!(x, rv(&[0]));

        let x = interval01().relative_interior_point().unwrap();
        assert!(x[0] > rat_int(0) && x[0] < rat_int(1));

        let x = set(1, &[(&[1], 0)]).relative_interior_point().unwrap();
        assert!(x[0] > rat_int(0));
    }

    #[test]
    fn affine_hulls() {
        assert!(set(1, &[(&[1], 0), (&[-1], 0)])
            .affine_hull_directions()
            .unwrap()
            .is_empty());
        assert_eq!(interval01().affine_hull_directions().unwrap(), vec![vec![1]]);
        // {(x,x,x) : x >= 0} as an explicit system.
        let diag = set(
            3,
            &[
                (&[1, -1, 0], 0),
                (&[-1, 1, 0], 0),
                (&[0, 1, -1], 0),
                (&[0, -1, 1], 0),
                (&[1, 0, 0], 0),
            ],
        );
        assert_eq!(diag.affine_hull_directions().unwrap(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn linear_optimization() {
        assert_eq!(
            interval01().max_linear(&rv(&[1]), &rat_int(0)).unwrap(),
            Extended::Finite(rat_int(1))
        );
        assert_eq!(
            set(1, &[(&[1], 0)]).max_linear(&rv(&[1]), &rat_int(0)).unwrap(),
            Extended::PosInf
        );
        assert_eq!(
            set(1, &[(&[1], 0), (&[-1], 1)])
                .max_linear(&rv(&[1]), &rat_int(0))
                .unwrap(),
            Extended::NegInf
        );
    }

    #[test]
    fn boundedness() {
        assert!(interval01().is_bounded().unwrap());
        assert!(set(1, &[(&[1], 0), (&[-1], 0)]).is_bounded().unwrap());
        assert!(!set(1, &[(&[1], 0)]).is_bounded().unwrap());
    }

    #[test]
    fn equal_on_cells() {
        let f = TropPoly::from_monomials(
            1,
            [
                Monomial::new(rat_int(-1), vec![1]),
                Monomial::new(rat_int(0), vec![-1]),
                Monomial::new(rat_int(0), vec![0]),
            ],
        )
        .unwrap();
        let zero = TropPoly::one(1);
        assert!(equal_on(&f, &f, &interval01()).unwrap());
        assert!(equal_on(&f, &zero, &interval01()).unwrap());
        let x = TropPoly::var(1, 0);
        assert!(!equal_on(&x, &zero, &interval01()).unwrap());
        // -inf handling.
        let ninf = TropPoly::neg_inf(1);
        assert!(equal_on(&ninf, &ninf, &interval01()).unwrap());
        assert!(!equal_on(&ninf, &zero, &interval01()).unwrap());
    }

    #[test]
    fn subset_and_canonical() {
        let p = interval01();
        let q = set(1, &[(&[2], -1)]); // x >= -1/2
        assert!(p.is_subset_of(&q).unwrap());
        assert!(!q.is_subset_of(&p).unwrap());
        let canon = q.canonical();
        assert_eq!(canon.rows(), &[(rv(&[1]), rat(-1, 2))]);
    }
}
