//! Prime congruences through t-admissible matrices.
//!
//! An `l×(n+1)` rational matrix `U` with sign-normalized first column and
//! linearly independent rows orders monomials by the lexicographic
//! comparison of `U·(coeff; exponent)`. Two polynomials are congruent
//! modulo `P(U)` exactly when their maximal `U`-values agree. The `l = 0`
//! matrix is a first-class value encoding the maximal proper congruence:
//! all non-`-inf` elements are identified.
//!
//! For rational matrices, row irredundancy over `R × Z^n` coincides with
//! linear independence: the kernel of the preceding rows is a rational
//! subspace, rational points are dense in it, and integer exponent parts
//! are reached by clearing denominators.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::poly::{Monomial, TropPoly};
use crate::scalar::{rat_sign, Rat};
use crate::variety::{boolean_variety_essential, variety_of_basis, Variety};

/// Lexicographically compared value `U·(c; m)` of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UValue(pub Vec<Rat>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TAdmissibleMatrix {
    vars: usize,
    rows: Vec<Vec<Rat>>,
}

/// Checks the two t-admissibility conditions on raw rows, each of length
/// `n + 1`: the first column is zero or its first nonzero entry is
/// positive, and the rows are linearly independent.
pub fn is_t_admissible(rows: &[Vec<Rat>]) -> bool {
    if let Some(first) = rows.iter().map(|r| &r[0]).find(|v| !v.is_zero()) {
        if first.is_negative() {
            return false;
        }
    }
    linalg::rank(rows) == rows.len()
}

impl TAdmissibleMatrix {
    pub fn new(vars: usize, rows: Vec<Vec<Rat>>) -> Result<Self> {
        for r in &rows {
            if r.len() != vars + 1 {
                return Err(Error::DimensionMismatch {
                    expected: vars + 1,
                    found: r.len(),
                });
            }
        }
        if rows.len() > vars + 1 {
            return Err(Error::NotTAdmissible(format!(
                "{} rows exceed n + 1 = {}",
                rows.len(),
                vars + 1
            )));
        }
        if !is_t_admissible(&rows) {
            return Err(Error::NotTAdmissible(
                "first-column sign condition or row independence fails".into(),
            ));
        }
        Ok(TAdmissibleMatrix { vars, rows })
    }

    /// The `l = 0` matrix: `P(U(0))`, the maximal proper congruence.
    pub fn rank_zero(vars: usize) -> Self {
        TAdmissibleMatrix {
            vars,
            rows: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Theorem-level fact: the Krull dimension of the quotient by `P(U)`
    /// equals the rank of `U`, which is the row count.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The truncation `U(i)`: the first `i` rows.
    pub fn truncate(&self, i: usize) -> TAdmissibleMatrix {
        TAdmissibleMatrix {
            vars: self.vars,
            rows: self.rows[..i].to_vec(),
        }
    }

    pub fn u_value(&self, m: &Monomial) -> Result<UValue> {
        if m.exp.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: m.exp.len(),
            });
        }
        let lift = m.lift();
        Ok(UValue(self.rows.iter().map(|r| dot(r, &lift)).collect()))
    }

    /// The set of maximal terms `M_U(f)` with respect to the term order.
    pub fn max_terms(&self, f: &TropPoly) -> Result<Vec<Monomial>> {
        if f.is_neg_inf() {
            return Err(Error::NegInfOperand);
        }
        let mut best: Option<UValue> = None;
        let mut out: Vec<Monomial> = Vec::new();
        for m in f.monomials() {
            let v = self.u_value(&m)?;
            match &best {
                None => {
                    best = Some(v);
                    out.push(m);
                }
                Some(b) => {
                    if v > *b {
                        best = Some(v);
                        out.clear();
                        out.push(m);
                    } else if v == *b {
                        out.push(m);
                    }
                }
            }
        }
        Ok(out)
    }

    fn max_value(&self, f: &TropPoly) -> Result<Option<UValue>> {
        let mut best: Option<UValue> = None;
        for m in f.monomials() {
            let v = self.u_value(&m)?;
            best = Some(match best {
                None => v,
                Some(b) => b.max(v),
            });
        }
        Ok(best)
    }

    /// Membership `(f, g) ∈ P(U)`: both `-inf`, or both finite with equal
    /// maximal U-values. For `l = 0` every pair of finite elements is
    /// congruent.
    pub fn pair_in_prime(&self, f: &TropPoly, g: &TropPoly) -> Result<bool> {
        if f.vars() != g.vars() {
            return Err(Error::DimensionMismatch {
                expected: f.vars(),
                found: g.vars(),
            });
        }
        Ok(self.max_value(f)? == self.max_value(g)?)
    }

    pub fn basis_in_prime(&self, pairs: &[(TropPoly, TropPoly)]) -> Result<bool> {
        for (f, g) in pairs {
            if !self.pair_in_prime(f, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplies row `k` by a positive rational; `P(U)` is unchanged.
    pub fn scale_row(&self, k: usize, eps: &Rat) -> Result<TAdmissibleMatrix> {
        if !eps.is_positive() {
            return Err(Error::InvalidRowTransform(
                "scale factor must be positive".into(),
            ));
        }
        if k >= self.rows.len() {
            return Err(Error::InvalidRowTransform(format!(
                "row {k} out of range"
            )));
        }
        let mut rows = self.rows.clone();
        for v in rows[k].iter_mut() {
            *v = &*v * eps;
        }
        TAdmissibleMatrix::new(self.vars, rows)
    }

    /// Adds `lambda` times row `k` to a lower row `j > k`; `P(U)` is
    /// unchanged.
    pub fn add_row_downward(&self, k: usize, j: usize, lambda: &Rat) -> Result<TAdmissibleMatrix> {
        if j <= k {
            return Err(Error::InvalidRowTransform(
                "target row must lie strictly below the source row".into(),
            ));
        }
        if j >= self.rows.len() {
            return Err(Error::InvalidRowTransform(format!(
                "row {j} out of range"
            )));
        }
        let mut rows = self.rows.clone();
        let src = rows[k].clone();
        for (t, s) in rows[j].iter_mut().zip(&src) {
            *t = &*t + lambda * s;
        }
        TAdmissibleMatrix::new(self.vars, rows)
    }
}

/// One link of the chain `P(U(0)) ⊋ P(U(1)) ⊋ … ⊋ P(U)`.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub matrix: TAdmissibleMatrix,
    /// A pair in `P(U(i))` but not in `P(U(i+1))`; absent on the last step.
    pub separating_pair: Option<(TropPoly, TropPoly)>,
}

/// The full chain of primes above `P(U)` with separating pairs.
///
/// For each `i < l` a monomial pair `(m1 ⊕ m2, m1)` is produced whose lift
/// difference lies in the kernel of `U(i)` but pairs negatively with row
/// `i + 1`, so the two sides share their maximal value under `U(i)` and
/// differ under `U(i+1)`.
pub fn prime_chain(u: &TAdmissibleMatrix) -> Result<Vec<ChainStep>> {
    let n = u.vars();
    let l = u.rank();
    let mut steps = Vec::with_capacity(l + 1);
    for i in 0..l {
        let prefix: Vec<Vec<Rat>> = u.rows()[..i].to_vec();
        let kernel = linalg::kernel_basis(&prefix, n + 1);
        let next_row = &u.rows()[i];
        let mut delta = kernel
            .into_iter()
            .find(|v| !dot(next_row, v).is_zero())
            .ok_or_else(|| {
                Error::Internal("independent row must see the kernel of its prefix".into())
            })?;
        // Orient so the new row drops: then m2 beats m1 under U(i+1).
        if dot(next_row, &delta).is_positive() {
            for v in delta.iter_mut() {
                *v = -v.clone();
            }
        }
        // Scale so the exponent part is integral.
        let mut denom_lcm = BigInt::one();
        for v in &delta[1..] {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, v.denom());
        }
        let scale = Rat::from_integer(denom_lcm);
        let m1 = Monomial::new(Rat::zero(), vec![0; n]);
        let exp: Vec<i64> = delta[1..]
            .iter()
            .map(|v| {
                let x = -(v * &scale);
                debug_assert!(x.denom().is_one());
                i64::try_from(x.numer()).expect("chain exponent fits i64")
            })
            .collect();
        let m2 = Monomial::new(-(&delta[0] * &scale), exp);
        let lhs = TropPoly::from_monomials(
            n,
            [m1.clone(), m2],
        )?;
        let rhs = TropPoly::from_monomials(n, [m1])?;
        steps.push(ChainStep {
            matrix: u.truncate(i),
            separating_pair: Some((lhs, rhs)),
        });
    }
    steps.push(ChainStep {
        matrix: u.clone(),
        separating_pair: None,
    });
    Ok(steps)
}

/// Witness for the `dim V + 1` half of the dimension formula: a t-admissible
/// matrix with first column `e1` and rank `dim V(T) + 1` whose prime
/// contains the basis. Fails when the variety is empty, where no such
/// matrix exists.
pub fn witness_prime(n: usize, pairs: &[(TropPoly, TropPoly)]) -> Result<TAdmissibleMatrix> {
    let v = variety_of_basis(n, pairs)?;
    witness_prime_of_variety(&v, pairs)
}

pub fn witness_prime_of_variety(
    v: &Variety,
    pairs: &[(TropPoly, TropPoly)],
) -> Result<TAdmissibleMatrix> {
    let n = v.ambient_dim();
    let Some(dim) = v.dimension()? else {
        return Err(Error::EmptyVariety);
    };
    let cell = max_dim_cell(v, dim)?;
    let w = cell.relative_interior_point()?;
    let dirs = cell.affine_hull_directions()?;
    debug_assert_eq!(dirs.len(), dim);

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    let mut first = vec![Rat::one()];
    first.extend(w.iter().cloned());
    rows.push(first);
    for d in &dirs {
        let mut row = vec![Rat::zero()];
        row.extend(d.iter().map(|&x| Rat::from_integer(BigInt::from(x))));
        rows.push(row);
    }
    let staircase = TAdmissibleMatrix::new(n, rows)?;

    // Deterministic perturbation schedule: check membership on the
    // transformed matrix with rows (1, w + sum delta_j u_j), delta_j = K^-j.
    // Row transforms leave membership invariant, so the staircase form is
    // returned once a schedule accepts.
    let mut k = Rat::from_integer(BigInt::from(2));
    for _ in 0..10 {
        let perturbed = staircase_to_perturbed(&staircase, &k)?;
        if perturbed.basis_in_prime(pairs)? {
            return Ok(staircase);
        }
        k = k * Rat::from_integer(BigInt::from(2));
    }
    Err(Error::Internal(
        "perturbation schedule exhausted without membership".into(),
    ))
}

/// Witness for the `dim V_B` half: a zero-first-column t-admissible matrix
/// of rank `dim V(T_B)` whose prime contains the Booleanized basis (hence
/// the basis itself, coefficients being invisible to a zero first column).
pub fn witness_boolean_prime(
    n: usize,
    pairs: &[(TropPoly, TropPoly)],
) -> Result<TAdmissibleMatrix> {
    let vb = boolean_variety_essential(n, pairs)?;
    witness_boolean_prime_of_variety(&vb, pairs)
}

pub fn witness_boolean_prime_of_variety(
    vb: &Variety,
    pairs: &[(TropPoly, TropPoly)],
) -> Result<TAdmissibleMatrix> {
    let n = vb.ambient_dim();
    let Some(dim) = vb.dimension()? else {
        return Err(Error::EmptyVariety);
    };
    if dim == 0 {
        return Ok(TAdmissibleMatrix::rank_zero(n));
    }
    let cell = max_dim_cell(vb, dim)?;
    let w = cell.relative_interior_point()?;
    let dirs = cell.affine_hull_directions()?;

    // Order the direction basis so a relative-interior direction comes
    // first; staircase boxes from the origin then stay inside the cone.
    let ordered: Vec<Vec<i64>> = match linalg::primitive_integer(&w) {
        Some(lead) => {
            let mut chosen = vec![lead];
            for d in &dirs {
                if chosen.len() == dim {
                    break;
                }
                let mut cand: Vec<Vec<Rat>> = chosen
                    .iter()
                    .map(|v| v.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
                    .collect();
                cand.push(d.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect());
                if linalg::rank(&cand) == cand.len() {
                    chosen.push(d.clone());
                }
            }
            if chosen.len() != dim {
                return Err(Error::Internal(
                    "could not extend interior direction to a basis".into(),
                ));
            }
            chosen
        }
        // The cone is a linear subspace; any basis of it works.
        None => dirs,
    };

    let rows: Vec<Vec<Rat>> = ordered
        .iter()
        .map(|d| {
            let mut row = vec![Rat::zero()];
            row.extend(d.iter().map(|&x| Rat::from_integer(BigInt::from(x))));
            row
        })
        .collect();
    let u = TAdmissibleMatrix::new(n, rows)?;
    if !u.basis_in_prime(pairs)? {
        return Err(Error::Internal(
            "boolean witness rejected its basis".into(),
        ));
    }
    Ok(u)
}

fn max_dim_cell(v: &Variety, dim: usize) -> Result<crate::polyhedron::PolyhedralSet> {
    for cell in v.cells() {
        if cell.dimension()? == Some(dim) {
            return Ok(cell.clone());
        }
    }
    Err(Error::Internal("variety lost its maximal cell".into()))
}

fn staircase_to_perturbed(u: &TAdmissibleMatrix, k: &Rat) -> Result<TAdmissibleMatrix> {
    let rows = u.rows();
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows.len());
    let mut acc = rows[0].clone();
    out.push(acc.clone());
    let mut delta = Rat::one();
    for row in &rows[1..] {
        delta = &delta / k;
        for (t, s) in acc.iter_mut().zip(row) {
            *t = &*t + &delta * s;
        }
        out.push(acc.clone());
    }
    TAdmissibleMatrix::new(u.vars(), out)
}

/// Convenience check used across tests: sign of the first nonzero entry of
/// `U·delta`, with 0 for the zero vector.
pub fn lex_sign(u: &TAdmissibleMatrix, delta: &[Rat]) -> i32 {
    for row in u.rows() {
        let v = dot(row, delta);
        let s = rat_sign(&v);
        if s != 0 {
            return s;
        }
    }
    0
}
