//! Essential-term computation for tropical Laurent polynomials.
//!
//! A term is *essential* when it is uniquely maximal at some point of `R^n`;
//! the essential terms determine the polynomial as a function on `R^n`
//! (regions of linearity), so `canonicalize` keeps exactly those.
//! `weakly_essential` keeps the terms that achieve the maximum anywhere, ties
//! included; this is the filter cell enumeration uses, since a term that
//! never achieves the maximum contributes no cell and only redundant rows.
//!
//! Both filters recurse on halves for large inputs: a term (uniquely)
//! maximal in `f` is (uniquely) maximal in any subpolynomial containing it,
//! so filtering halves first only discards terms that could never survive,
//! and a final direct pass over the survivors is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lp::{self, LpOutcome};
use crate::poly::{Monomial, TropPoly};
use crate::scalar::Rat;

const DIRECT_PASS_LIMIT: usize = 48;

/// Keeps exactly the terms that are uniquely maximal somewhere on `R^n`.
pub fn canonicalize(f: &TropPoly) -> Result<TropPoly> {
    filter_terms(f, true)
}

/// Keeps exactly the terms that achieve the maximum somewhere on `R^n`.
pub fn weakly_essential(f: &TropPoly) -> Result<TropPoly> {
    filter_terms(f, false)
}

/// Functional equality on `R^n`: canonical forms agree term for term.
pub fn func_eq(f: &TropPoly, g: &TropPoly) -> Result<bool> {
    if f.vars() != g.vars() {
        return Err(Error::DimensionMismatch {
            expected: f.vars(),
            found: g.vars(),
        });
    }
    Ok(canonicalize(f)? == canonicalize(g)?)
}

fn filter_terms(f: &TropPoly, strict: bool) -> Result<TropPoly> {
    if f.term_count() <= 1 {
        return Ok(f.clone());
    }
    let monomials: Vec<Monomial> = f.monomials().collect();
    let survivors = if monomials.len() <= DIRECT_PASS_LIMIT {
        direct_pass(&monomials, strict)?
    } else {
        let mid = monomials.len() / 2;
        let lo = TropPoly::from_monomials(f.vars(), monomials[..mid].iter().cloned())?;
        let hi = TropPoly::from_monomials(f.vars(), monomials[mid..].iter().cloned())?;
        let merged = filter_terms(&lo, strict)?.add(&filter_terms(&hi, strict)?)?;
        direct_pass(&merged.monomials().collect::<Vec<_>>(), strict)?
    };
    let keep: Vec<Vec<i64>> = survivors.iter().map(|m| m.exp.clone()).collect();
    Ok(f.restrict_to(&keep))
}

fn direct_pass(monomials: &[Monomial], strict: bool) -> Result<Vec<Monomial>> {
    let checks: Vec<Result<bool>> = monomials
        .par_iter()
        .enumerate()
        .map(|(i, m)| term_survives(monomials, i, m, strict))
        .collect();
    let mut out = Vec::new();
    for (m, keep) in monomials.iter().zip(checks) {
        if keep? {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// Strict: does `s(x) > t(x)` for all other terms hold somewhere (decided by
/// maximizing a margin capped at 1)? Weak: is `{x : s(x) >= t(x) for all t}`
/// nonempty?
fn term_survives(monomials: &[Monomial], i: usize, s: &Monomial, strict: bool) -> Result<bool> {
    if monomials.len() == 1 {
        return Ok(true);
    }
    let n = s.exp.len();
    let cols = if strict { n + 1 } else { n };
    let mut a = Vec::with_capacity(monomials.len());
    let mut b = Vec::with_capacity(monomials.len());
    for (j, t) in monomials.iter().enumerate() {
        if j == i {
            continue;
        }
        let mut row: Vec<Rat> = (0..n)
            .map(|k| Rat::from_integer(BigInt::from(s.exp[k] - t.exp[k])))
            .collect();
        if strict {
            row.push(-Rat::one());
        }
        a.push(row);
        b.push(&t.coeff - &s.coeff);
    }
    if strict {
        // Margin cap keeps the LP bounded.
        let mut cap = vec![Rat::zero(); n];
        cap.push(-Rat::one());
        a.push(cap);
        b.push(-Rat::one());
        let mut c = vec![Rat::zero(); n];
        c.push(Rat::one());
        match lp::maximize(&a, &b, &c)? {
            LpOutcome::Optimal { value, .. } => Ok(value.is_positive()),
            LpOutcome::Infeasible { .. } => Ok(false),
            LpOutcome::Unbounded { .. } => {
                Err(Error::Internal("capped margin LP cannot be unbounded".into()))
            }
        }
    } else {
        let _ = cols;
        Ok(lp::feasible_point(&a, &b)?.is_some())
    }
}
