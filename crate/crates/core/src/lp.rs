//! Exact rational linear programming over systems `Ax >= b` with free
//! variables.
//!
//! `maximize` solves `max c·x  s.t.  Ax >= b` and returns a certified
//! outcome: an optimal point whose value matches the dual bound, a feasible
//! point plus an improving recession direction, or a Farkas certificate of
//! infeasibility (`y >= 0`, `yᵀA = 0`, `yᵀb > 0`). Every certificate is
//! re-checked in exact arithmetic before being returned.
//!
//! The variable count is tiny (ambient dimension plus at most one auxiliary
//! variable) while the row count can reach the hundreds, so the simplex runs
//! on the dual: `min (-b)ᵀy  s.t.  (-Aᵀ)y = c, y >= 0`, a tableau with one
//! row per primal variable. Bland's rule guarantees termination.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// No rational (equivalently, no real) point satisfies the system.
    Infeasible { farkas: Vec<Rat> },
    /// Feasible, and the objective is unbounded above along `direction`.
    Unbounded { point: Vec<Rat>, direction: Vec<Rat> },
    /// Both the point and the optimal value are exact.
    Optimal { point: Vec<Rat>, value: Rat },
}

/// Maximize `c·x` over `{x : Ax >= b}`.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Result<LpOutcome> {
    let n = c.len();
    let l = a.len();
    debug_assert_eq!(b.len(), l);
    debug_assert!(a.iter().all(|row| row.len() == n));

    if n == 0 {
        // Constraints read `0 >= b_j`.
        if let Some(j) = (0..l).find(|&j| b[j].is_positive()) {
            let mut farkas = vec![Rat::zero(); l];
            farkas[j] = Rat::one();
            return Ok(LpOutcome::Infeasible { farkas });
        }
        return Ok(LpOutcome::Optimal {
            point: Vec::new(),
            value: Rat::zero(),
        });
    }

    if l == 0 {
        let point = vec![Rat::zero(); n];
        if c.iter().all(|v| v.is_zero()) {
            return Ok(LpOutcome::Optimal {
                point,
                value: Rat::zero(),
            });
        }
        return certify_unbounded(a, b, c, point, c.to_vec());
    }

    match solve_dual(a, b, c)? {
        DualOutcome::Optimal { point, value } => {
            if !is_feasible(a, b, &point) {
                return Err(Error::Internal("LP optimum fails primal feasibility".into()));
            }
            if dot(c, &point) != value {
                return Err(Error::Internal("LP optimum fails strong duality".into()));
            }
            Ok(LpOutcome::Optimal { point, value })
        }
        DualOutcome::UnboundedBelow { ray } => {
            // Dual ray == Farkas certificate: primal infeasible.
            certify_infeasible(a, b, ray)
        }
        DualOutcome::Infeasible => {
            // Primal is unbounded or infeasible; decide with a feasibility LP.
            match solve_dual(a, b, &vec![Rat::zero(); n])? {
                DualOutcome::UnboundedBelow { ray } => certify_infeasible(a, b, ray),
                DualOutcome::Optimal { point, .. } => {
                    if !is_feasible(a, b, &point) {
                        return Err(Error::Internal(
                            "feasibility LP returned infeasible point".into(),
                        ));
                    }
                    let direction = improving_direction(a, c)?;
                    certify_unbounded(a, b, c, point, direction)
                }
                DualOutcome::Infeasible => Err(Error::Internal(
                    "feasibility dual cannot be infeasible".into(),
                )),
            }
        }
    }
}

/// Convenience wrapper: is `{x : Ax >= b}` nonempty?
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let n = a.first().map_or(0, |r| r.len());
    match maximize(a, b, &vec![Rat::zero(); n])? {
        LpOutcome::Infeasible { .. } => Ok(None),
        LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Ok(Some(point)),
    }
}

pub fn is_feasible(a: &[Vec<Rat>], b: &[Rat], x: &[Rat]) -> bool {
    a.iter().zip(b).all(|(row, bb)| dot(row, x) >= *bb)
}

fn certify_infeasible(a: &[Vec<Rat>], b: &[Rat], farkas: Vec<Rat>) -> Result<LpOutcome> {
    let n = a.first().map_or(0, |r| r.len());
    if farkas.iter().any(|v| v.is_negative()) {
        return Err(Error::Internal("Farkas certificate has negative entry".into()));
    }
    for j in 0..n {
        let mut s = Rat::zero();
        for (i, row) in a.iter().enumerate() {
            s += &farkas[i] * &row[j];
        }
        if !s.is_zero() {
            return Err(Error::Internal("Farkas certificate not in left kernel".into()));
        }
    }
    if !dot(&farkas, b).is_positive() {
        return Err(Error::Internal("Farkas certificate has nonpositive value".into()));
    }
    Ok(LpOutcome::Infeasible { farkas })
}

fn certify_unbounded(
    a: &[Vec<Rat>],
    b: &[Rat],
    c: &[Rat],
    point: Vec<Rat>,
    direction: Vec<Rat>,
) -> Result<LpOutcome> {
    if !is_feasible(a, b, &point) {
        return Err(Error::Internal("unbounded certificate point infeasible".into()));
    }
    if a.iter().any(|row| dot(row, &direction).is_negative()) {
        return Err(Error::Internal("unbounded direction leaves the set".into()));
    }
    if !dot(c, &direction).is_positive() {
        return Err(Error::Internal("unbounded direction does not improve".into()));
    }
    Ok(LpOutcome::Unbounded { point, direction })
}

/// Finds `d` with `Ad >= 0` and `c·d = 1`, assuming one exists.
fn improving_direction(a: &[Vec<Rat>], c: &[Rat]) -> Result<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = a.to_vec();
    rows.push(c.iter().map(|v| -v).collect());
    let mut rhs = vec![Rat::zero(); a.len()];
    rhs.push(-Rat::one());
    match maximize(&rows, &rhs, c)? {
        LpOutcome::Optimal { point, value } if value.is_positive() => Ok(point),
        _ => Err(Error::Internal(
            "expected a positive improving direction".into(),
        )),
    }
}

enum DualOutcome {
    Optimal { point: Vec<Rat>, value: Rat },
    /// The dual ray doubles as a Farkas certificate for the primal.
    UnboundedBelow { ray: Vec<Rat> },
    Infeasible,
}

/// Two-phase Bland simplex on `min q·y  s.t.  M y = d, y >= 0` with
/// `M = -Aᵀ` (n rows, l columns), `d = c`, `q = -b`. Returns the primal
/// point as the vector of simplex multipliers.
fn solve_dual(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Result<DualOutcome> {
    let n = c.len();
    let l = a.len();

    // Working rows: [M | I | rhs], sign-flipped so rhs >= 0.
    // `flip[i]` records the sign applied to original row i.
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut flip: Vec<bool> = Vec::with_capacity(n);
    for i in 0..n {
        let neg = c[i].is_negative();
        flip.push(neg);
        let mut row: Vec<Rat> = Vec::with_capacity(l + n + 1);
        for j in 0..l {
            let v = -&a[j][i];
            row.push(if neg { -v } else { v });
        }
        for k in 0..n {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if neg { -&c[i] } else { c[i].clone() });
        tab.push(row);
    }
    let rhs_col = l + n;
    let q: Vec<Rat> = b.iter().map(|v| -v).collect();

    // Row i of the tableau corresponds to original dual row `orig[i]`.
    let mut orig: Vec<usize> = (0..n).collect();
    let mut basis: Vec<usize> = (n..2 * n).map(|k| k - n + l).collect(); // artificials

    // Phase 1 cost: 1 on artificial columns.
    let phase1_cost = |j: usize| -> Rat {
        if j >= l {
            Rat::one()
        } else {
            Rat::zero()
        }
    };
    if let Stopped::Unbounded { .. } =
        run_simplex(&mut tab, &mut basis, l + n, rhs_col, &phase1_cost)?
    {
        return Err(Error::Internal("phase-1 objective cannot be unbounded".into()));
    }
    let infeas: Rat = basis
        .iter()
        .enumerate()
        .filter(|(_, &bj)| bj >= l)
        .map(|(i, _)| tab[i][rhs_col].clone())
        .sum();
    if !infeas.is_zero() {
        return Ok(DualOutcome::Infeasible);
    }

    // Evict artificials stuck in the basis at level zero; drop rows that are
    // structurally redundant (zero over all structural columns).
    let mut r = 0;
    while r < tab.len() {
        if basis[r] >= l {
            debug_assert!(tab[r][rhs_col].is_zero());
            if let Some(j) = (0..l).find(|&j| !tab[r][j].is_zero()) {
                pivot(&mut tab, &mut basis, r, j);
                r += 1;
            } else {
                tab.remove(r);
                basis.remove(r);
                orig.remove(r);
            }
        } else {
            r += 1;
        }
    }

    // Phase 2: artificial columns are priced out by restricting to 0..l.
    let phase2_cost = |j: usize| -> Rat {
        if j < l {
            q[j].clone()
        } else {
            // Never re-enter an artificial.
            Rat::one()
        }
    };
    if let Stopped::Unbounded { entering } =
        run_simplex(&mut tab, &mut basis, l, rhs_col, &phase2_cost)?
    {
        let mut ray = vec![Rat::zero(); l];
        ray[entering] = Rat::one();
        for (i, &bj) in basis.iter().enumerate() {
            if bj < l {
                ray[bj] = -&tab[i][entering];
            }
        }
        return Ok(DualOutcome::UnboundedBelow { ray });
    }

    // Multipliers: pi'ᵀ = q_B · B^{-1}; the artificial block holds B^{-1}
    // for the flipped rows. Dropped rows contribute zero.
    let mut point = vec![Rat::zero(); n];
    for &io in orig.iter() {
        let mut acc = Rat::zero();
        for (i, &bj) in basis.iter().enumerate() {
            if bj < l && !q[bj].is_zero() {
                acc += &q[bj] * &tab[i][l + io];
            }
        }
        point[io] = if flip[io] { -acc } else { acc };
    }
    let mut value = Rat::zero();
    for (i, &bj) in basis.iter().enumerate() {
        if bj < l {
            value += &q[bj] * &tab[i][rhs_col];
        }
    }
    Ok(DualOutcome::Optimal { point, value })
}

enum Stopped {
    Optimal,
    Unbounded { entering: usize },
}

/// Bland-rule simplex sweep over columns `0..ncols` of the tableau.
fn run_simplex<F>(
    tab: &mut Vec<Vec<Rat>>,
    basis: &mut Vec<usize>,
    ncols: usize,
    rhs_col: usize,
    cost: &F,
) -> Result<Stopped>
where
    F: Fn(usize) -> Rat,
{
    let mut guard = 0usize;
    let iter_cap = 20_000 + 50 * (ncols + 1) * (tab.len() + 1);
    loop {
        guard += 1;
        if guard > iter_cap {
            return Err(Error::Internal("simplex iteration cap exceeded".into()));
        }
        // Entering column: smallest index with negative reduced cost.
        let mut entering = None;
        'cols: for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost(j);
            for (i, &bj) in basis.iter().enumerate() {
                let cb = cost(bj);
                if !cb.is_zero() && !tab[i][j].is_zero() {
                    red -= cb * &tab[i][j];
                }
            }
            if red.is_negative() {
                entering = Some(j);
                break 'cols;
            }
        }
        let Some(j) = entering else {
            return Ok(Stopped::Optimal);
        };
        // Leaving row: min ratio, ties by smallest basis variable (Bland).
        let mut best: Option<(Rat, usize, usize)> = None; // (ratio, basis var, row)
        for i in 0..tab.len() {
            if tab[i][j].is_positive() {
                let ratio = &tab[i][rhs_col] / &tab[i][j];
                let key = (ratio, basis[i], i);
                best = match best {
                    None => Some(key),
                    Some(cur) => {
                        if (key.0.clone(), key.1) < (cur.0.clone(), cur.1) {
                            Some(key)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
        }
        let Some((_, _, row)) = best else {
            return Ok(Stopped::Unbounded { entering: j });
        };
        pivot(tab, basis, row, j);
    }
}

fn pivot(tab: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for v in tab[row].iter_mut() {
        if !v.is_zero() {
            *v = &*v * &inv;
        }
    }
    tab[row][col] = Rat::one();
    for i in 0..tab.len() {
        if i != row && !tab[i][col].is_zero() {
            let factor = std::mem::replace(&mut tab[i][col], Rat::zero());
            for j in 0..tab[i].len() {
                if j != col && !tab[row][j].is_zero() {
                    let sub = &factor * &tab[row][j];
                    tab[i][j] = &tab[i][j] - sub;
                }
            }
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn interval_maximum() {
        // {x >= 0, -x >= -1} = [0, 1]; max x = 1.
        let a = vec![rv(&[1]), rv(&[-1])];
        let b = rv(&[0, -1]);
        match maximize(&a, &b, &rv(&[1])).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat_int(1));
                assert_eq!(point, rv(&[1]));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn halfline_unbounded() {
        let a = vec![rv(&[1])];
        let b = rv(&[0]);
        match maximize(&a, &b, &rv(&[1])).unwrap() {
            LpOutcome::Unbounded { point, direction } => {
                assert!(is_feasible(&a, &b, &point));
                assert!(dot(&rv(&[1]), &direction).is_positive());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_with_farkas() {
        // x >= 0 and -x >= 1 cannot hold together.
        let a = vec![rv(&[1]), rv(&[-1])];
        let b = rv(&[0, 1]);
        match maximize(&a, &b, &rv(&[1])).unwrap() {
            LpOutcome::Infeasible { farkas } => {
                assert!(dot(&farkas, &b).is_positive());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn two_dimensional_vertex() {
        // Triangle x >= 0, y >= 0, -x - y >= -2; max x + 2y at (0, 2).
        let a = vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[-1, -1])];
        let b = rv(&[0, 0, -2]);
        match maximize(&a, &b, &rv(&[1, 2])).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat_int(4));
                assert_eq!(point, rv(&[0, 2]));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn rational_data() {
        // x >= 1/2, -x >= -5/2; max 3x = 15/2 at x = 5/2.
        let a = vec![rv(&[1]), rv(&[-1])];
        let b = vec![rat(1, 2), rat(-5, 2)];
        match maximize(&a, &b, &rv(&[3])).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(15, 2));
                assert_eq!(point, vec![rat(5, 2)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn full_space_and_redundant_rows() {
        // No constraints: maximizing 0 gives the origin.
        match maximize(&[], &[], &rv(&[0, 0])).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(point, rv(&[0, 0]));
                assert!(value.is_zero());
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        // Duplicate constraints must not confuse the solver.
        let a = vec![rv(&[1, 1]), rv(&[2, 2]), rv(&[-1, 0])];
        let b = rv(&[0, 0, -3]);
        match maximize(&a, &b, &rv(&[1, 0])).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(3)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_objective_on_line() {
        // {x - y >= 0}: maximize x + y is unbounded.
        let a = vec![rv(&[1, -1])];
        let b = rv(&[0]);
        match maximize(&a, &b, &rv(&[1, 1])).unwrap() {
            LpOutcome::Unbounded { direction, .. } => {
                assert!(!dot(&rv(&[1, -1]), &direction).is_negative());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }
}
