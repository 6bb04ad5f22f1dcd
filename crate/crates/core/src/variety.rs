//! Congruence varieties as explicit finite unions of rational polyhedral
//! cells.
//!
//! A pair `(f, g)` of tropical Laurent polynomials defines one cell per
//! choice of a term `s` of `f` and a term `t` of `g`: the points where `s`
//! achieves the maximum of `f`, `t` achieves the maximum of `g`, and
//! `s = t`. The union over all choices is exactly `{x : f(x) = g(x)}`.
//! Terms that never achieve the maximum contribute only empty cells, so
//! enumeration first drops them (`weakly_essential`); the remaining
//! dominance rows imply the dropped ones, which keeps each cell the same
//! point set.
//!
//! Cells may overlap; no common refinement is computed. Cell lists are
//! stored in canonical form, deduplicated and sorted, so equal varieties
//! built in different orders print identically.

use rayon::prelude::*;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::canon::{canonicalize, weakly_essential};
use crate::error::{Error, Result};
use crate::poly::{Monomial, TropPoly};
use crate::polyhedron::{equal_on, PolyhedralSet};
use crate::rat::TropRat;
use crate::scalar::Rat;

#[derive(Clone, Debug)]
pub struct Variety {
    n: usize,
    cells: Vec<PolyhedralSet>,
    basis: Vec<(TropPoly, TropPoly)>,
}

/// A maximal family of unbounded one-dimensional cells sharing one
/// geometric ray: equal primitive direction and pairwise unbounded overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayGroup {
    pub direction: Vec<i64>,
    /// Indices into the variety's cell list.
    pub cells: Vec<usize>,
}

impl Variety {
    fn new(n: usize, mut cells: Vec<PolyhedralSet>, basis: Vec<(TropPoly, TropPoly)>) -> Self {
        cells = cells.into_iter().map(|c| c.canonical()).collect();
        cells.sort();
        cells.dedup();
        Variety { n, cells, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[PolyhedralSet] {
        &self.cells
    }

    pub fn basis(&self) -> &[(TropPoly, TropPoly)] {
        &self.basis
    }

    pub fn is_empty_set(&self) -> bool {
        self.cells.is_empty()
    }

    /// Maximum cell dimension; `None` encodes dimension `-inf` (no cells).
    pub fn dimension(&self) -> Result<Option<usize>> {
        let dims: Vec<Result<Option<usize>>> =
            self.cells.par_iter().map(|c| c.dimension()).collect();
        let mut best: Option<usize> = None;
        for d in dims {
            let d = d?.ok_or_else(|| Error::Internal("stored cell is empty".into()))?;
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        Ok(best)
    }

    pub fn contains_point(&self, x: &[Rat]) -> Result<bool> {
        for c in &self.cells {
            if c.contains_point(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Is the union of cells contained in the variety of `pairs`? Decided
    /// symbolically: every pair must be an identity on every cell.
    pub fn contained_in_variety_of(&self, pairs: &[(TropPoly, TropPoly)]) -> Result<bool> {
        for (f, g) in pairs {
            if f.vars() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: f.vars(),
                });
            }
            for cell in &self.cells {
                if !equal_on(f, g, cell)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn set_equals(&self, other: &Variety) -> Result<bool> {
        Ok(self.contained_in_variety_of(&other.basis)?
            && other.contained_in_variety_of(&self.basis)?)
    }

    /// Partition of the cells by connectivity of the intersection graph.
    /// Cells are convex, so two cells lie in the same connected component of
    /// the union iff they are linked by a chain of pairwise-intersecting
    /// cells.
    pub fn connected_components(&self) -> Result<Vec<Variety>> {
        let k = self.cells.len();
        let mut dsu = Dsu::new(k);
        let mut checks = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                checks.push((i, j));
            }
        }
        let nonempty: Vec<Result<bool>> = checks
            .par_iter()
            .map(|&(i, j)| {
                let meet = self.cells[i].intersect(&self.cells[j])?;
                Ok(!meet.is_empty()?)
            })
            .collect();
        for (&(i, j), res) in checks.iter().zip(nonempty) {
            if res? {
                dsu.union(i, j);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut rep_to_group: std::collections::BTreeMap<usize, usize> =
            std::collections::BTreeMap::new();
        for i in 0..k {
            let r = dsu.find(i);
            let gi = *rep_to_group.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[gi].push(i);
        }
        Ok(groups
            .into_iter()
            .map(|idxs| Variety {
                n: self.n,
                cells: idxs.iter().map(|&i| self.cells[i].clone()).collect(),
                basis: self.basis.clone(),
            })
            .collect())
    }

    /// Groups the unbounded one-dimensional cells into geometric rays.
    /// Requires dimension at most one. A full line contributes two rays with
    /// opposite primitive directions.
    pub fn rays(&self) -> Result<Vec<RayGroup>> {
        if let Some(d) = self.dimension()? {
            if d > 1 {
                return Err(Error::NotACurve(d as i64));
            }
        }
        // Germs: (cell index, outward primitive direction).
        let mut germs: Vec<(usize, Vec<i64>)> = Vec::new();
        for (i, cell) in self.cells.iter().enumerate() {
            let cone = cell.recession_cone_unchecked();
            if cone.dimension()? != Some(1) {
                continue; // bounded cell
            }
            let dirs = cone.affine_hull_directions()?;
            debug_assert_eq!(dirs.len(), 1);
            let d = dirs.into_iter().next().unwrap();
            let neg: Vec<i64> = d.iter().map(|v| -v).collect();
            if cone_contains_direction(&cone, &d)? {
                germs.push((i, d.clone()));
            }
            if cone_contains_direction(&cone, &neg)? {
                germs.push((i, neg));
            }
        }
        let mut dsu = Dsu::new(germs.len());
        for a in 0..germs.len() {
            for b in (a + 1)..germs.len() {
                if germs[a].1 != germs[b].1 {
                    continue;
                }
                let meet = self.cells[germs[a].0].intersect(&self.cells[germs[b].0])?;
                if !meet.is_empty()? && !meet.is_bounded()? {
                    dsu.union(a, b);
                }
            }
        }
        let mut by_rep: std::collections::BTreeMap<usize, RayGroup> =
            std::collections::BTreeMap::new();
        for (g, germ) in germs.iter().enumerate() {
            let r = dsu.find(g);
            let entry = by_rep.entry(r).or_insert_with(|| RayGroup {
                direction: germ.1.clone(),
                cells: Vec::new(),
            });
            entry.cells.push(germ.0);
        }
        let mut out: Vec<RayGroup> = by_rep.into_values().collect();
        for g in &mut out {
            g.cells.sort();
            g.cells.dedup();
        }
        out.sort_by(|a, b| (&a.direction, &a.cells).cmp(&(&b.direction, &b.cells)));
        Ok(out)
    }

    /// True iff two distinct ray groups share a primitive direction.
    pub fn has_duplicate_parallel_rays(&self) -> Result<bool> {
        let rays = self.rays()?;
        let mut dirs: Vec<&Vec<i64>> = rays.iter().map(|g| &g.direction).collect();
        let before = dirs.len();
        dirs.sort();
        dirs.dedup();
        Ok(dirs.len() != before)
    }
}

fn cone_contains_direction(cone: &PolyhedralSet, d: &[i64]) -> Result<bool> {
    let x: Vec<Rat> = d.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect();
    cone.contains_point(&x)
}

/// The cells of a single defining pair.
pub fn cells_of_pair(f: &TropPoly, g: &TropPoly) -> Result<Variety> {
    if f.vars() != g.vars() {
        return Err(Error::DimensionMismatch {
            expected: f.vars(),
            found: g.vars(),
        });
    }
    let n = f.vars();
    let basis = vec![(f.clone(), g.clone())];
    match (f.is_neg_inf(), g.is_neg_inf()) {
        (true, true) => {
            return Ok(Variety::new(n, vec![PolyhedralSet::full_space(n)], basis))
        }
        (true, false) | (false, true) => return Ok(Variety::new(n, Vec::new(), basis)),
        _ => {}
    }
    let fw = weakly_essential(f)?;
    let gw = weakly_essential(g)?;
    let fm: Vec<Monomial> = fw.monomials().collect();
    let gm: Vec<Monomial> = gw.monomials().collect();
    let mut candidates = Vec::with_capacity(fm.len() * gm.len());
    for s in &fm {
        for t in &gm {
            candidates.push(pair_cell(n, s, &fm, t, &gm));
        }
    }
    let cells = prune_empty(candidates)?;
    Ok(Variety::new(n, cells, basis))
}

/// The cell where `s` is maximal in `f`, `t` is maximal in `g`, and `s = t`.
fn pair_cell(n: usize, s: &Monomial, fm: &[Monomial], t: &Monomial, gm: &[Monomial]) -> PolyhedralSet {
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(fm.len() + gm.len());
    for s2 in fm {
        if s2.exp != s.exp {
            rows.push(dominance_row(s, s2));
        }
    }
    for t2 in gm {
        if t2.exp != t.exp {
            rows.push(dominance_row(t, t2));
        }
    }
    rows.push(dominance_row(s, t));
    rows.push(dominance_row(t, s));
    PolyhedralSet::from_rows(n, rows).expect("row lengths match ambient dimension")
}

/// Row for `a(x) >= b(x)`: `(exp_a - exp_b)·x >= coeff_b - coeff_a`.
fn dominance_row(a: &Monomial, b: &Monomial) -> (Vec<Rat>, Rat) {
    let row: Vec<Rat> = a
        .exp
        .iter()
        .zip(&b.exp)
        .map(|(x, y)| Rat::from_integer(BigInt::from(x - y)))
        .collect();
    (row, &b.coeff - &a.coeff)
}

fn prune_empty(candidates: Vec<PolyhedralSet>) -> Result<Vec<PolyhedralSet>> {
    let keep: Vec<Result<bool>> = candidates
        .par_iter()
        .map(|c| {
            // Cheap membership tests before the LP.
            let origin = vec![Rat::zero(); c.ambient_dim()];
            if c.contains_point(&origin)? {
                return Ok(true);
            }
            Ok(!c.is_empty()?)
        })
        .collect();
    let mut out = Vec::new();
    for (c, k) in candidates.into_iter().zip(keep) {
        if k? {
            out.push(c);
        }
    }
    Ok(out)
}

/// The congruence variety of a finite basis: the intersection of the
/// per-pair varieties, realized as all pairwise cell intersections. An
/// empty basis denotes the trivial congruence, whose variety is `R^n`
/// (ambient dimension must then be supplied by the caller).
pub fn variety_of_basis(n: usize, pairs: &[(TropPoly, TropPoly)]) -> Result<Variety> {
    for (f, g) in pairs {
        if f.vars() != n || g.vars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: f.vars().max(g.vars()),
            });
        }
    }
    let mut current = vec![PolyhedralSet::full_space(n)];
    for (f, g) in pairs {
        let next = cells_of_pair(f, g)?;
        let mut candidates = Vec::with_capacity(current.len() * next.cells().len());
        for a in &current {
            for b in next.cells() {
                candidates.push(a.intersect(b)?);
            }
        }
        let mut cells: Vec<PolyhedralSet> = prune_empty(candidates)?
            .into_iter()
            .map(|c| c.canonical())
            .collect();
        cells.sort();
        cells.dedup();
        current = cells;
        if current.is_empty() {
            break;
        }
    }
    Ok(Variety::new(n, current, pairs.to_vec()))
}

/// The variety of the Booleanized pairs. Every coefficient becomes 0, so
/// every cell is a cone `{Ax >= 0}` (each contains the origin), including
/// the cones whose original cells were empty.
pub fn boolean_variety(n: usize, pairs: &[(TropPoly, TropPoly)]) -> Result<Variety> {
    let b: Vec<(TropPoly, TropPoly)> = pairs
        .iter()
        .map(|(f, g)| (f.booleanize(), g.booleanize()))
        .collect();
    variety_of_basis(n, &b)
}

/// Set-equal to `boolean_variety` but enumerated from essential terms only;
/// far fewer cells, same union. Use for dimensions and witnesses.
pub fn boolean_variety_essential(n: usize, pairs: &[(TropPoly, TropPoly)]) -> Result<Variety> {
    let b: Vec<(TropPoly, TropPoly)> = pairs
        .iter()
        .map(|(f, g)| {
            Ok((
                canonicalize(&f.booleanize())?,
                canonicalize(&g.booleanize())?,
            ))
        })
        .collect::<Result<_>>()?;
    variety_of_basis(n, &b)
}

/// The tropical hypersurface of `F`: points where at least two terms
/// achieve the maximum. One cell per unordered pair of distinct terms.
/// Its defining basis is the bend-relation family of `F`.
pub fn hypersurface(f: &TropPoly) -> Result<Variety> {
    let n = f.vars();
    let basis = if f.is_neg_inf() {
        // No bend pairs exist; (0, -inf) pins the empty variety.
        vec![(TropPoly::one(n), TropPoly::neg_inf(n))]
    } else {
        f.bend_generators()
    };
    let fw = weakly_essential(f)?;
    let fm: Vec<Monomial> = fw.monomials().collect();
    let mut candidates = Vec::new();
    for i in 0..fm.len() {
        for j in (i + 1)..fm.len() {
            let s = &fm[i];
            let t = &fm[j];
            let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(fm.len() + 1);
            for u in &fm {
                if u.exp != s.exp {
                    rows.push(dominance_row(s, u));
                }
            }
            rows.push(dominance_row(t, s));
            candidates.push(PolyhedralSet::from_rows(n, rows)?);
        }
    }
    let cells = prune_empty(candidates)?;
    Ok(Variety::new(n, cells, basis))
}

/// Builds a defining pair for a finite union of nonempty cells: per cell
/// `f_i = (⊕_j b_ij ⊙ X^⊙(-a_ij)) ⊕ 0` vanishes exactly on the cell, and
/// `F = (⊕_i f_i^⊙(-1))^⊙(-1)` pairs with 0 to cut out the union. The
/// Booleanization of the cleared pair cuts out the union of the recession
/// cones.
pub fn variety_to_pair(cells: &[PolyhedralSet]) -> Result<(TropRat, TropRat)> {
    if cells.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = cells[0].ambient_dim();
    let mut inv_sum: Option<TropRat> = None;
    for (i, cell) in cells.iter().enumerate() {
        if cell.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: cell.ambient_dim(),
            });
        }
        if cell.is_empty()? {
            return Err(Error::EmptyCellInput(i));
        }
        let fi = cell_cut_poly(&cell.canonical());
        let inv = TropRat::from_poly(fi).inv()?;
        inv_sum = Some(match inv_sum {
            None => inv,
            Some(acc) => acc.add(&inv)?,
        });
    }
    let f = inv_sum.expect("at least one cell").inv()?;
    Ok((f, TropRat::from_poly(TropPoly::one(n))))
}

/// `f_i(x) = max(max_j (b_j - a_j·x), 0)`: nonnegative everywhere, zero
/// exactly on `{Ax >= b}`. Canonical cells have integer rows, so the
/// exponents `-a_j` are integral.
fn cell_cut_poly(cell: &PolyhedralSet) -> TropPoly {
    let n = cell.ambient_dim();
    let mut monomials = vec![Monomial::new(Rat::zero(), vec![0; n])];
    for (a, b) in cell.rows() {
        let exp: Vec<i64> = a
            .iter()
            .map(|v| {
                debug_assert!(v.denom() == &BigInt::from(1));
                let neg = -v.numer();
                i64::try_from(&neg).expect("canonical row entry fits i64")
            })
            .collect();
        monomials.push(Monomial::new(b.clone(), exp));
    }
    TropPoly::from_monomials(n, monomials).expect("exponent lengths match")
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(k: usize) -> Self {
        Dsu {
            parent: (0..k).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // Smaller root wins, keeping representatives deterministic.
            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn poly(n: usize, terms: &[(i64, &[i64])]) -> TropPoly {
        TropPoly::from_monomials(
            n,
            terms
                .iter()
                .map(|(c, e)| Monomial::new(rat_int(*c), e.to_vec())),
        )
        .unwrap()
    }

    /// `(X1 ⊕ 3⊙X2^⊙2, 2⊙X1^⊙2 ⊕ X2)`: four ray cells.
    fn two_rays_pair() -> (TropPoly, TropPoly) {
        (
            poly(2, &[(0, &[1, 0]), (3, &[0, 2])]),
            poly(2, &[(2, &[2, 0]), (0, &[0, 1])]),
        )
    }

    /// `((-1)⊙X ⊕ X^⊙(-1) ⊕ 0, 0)`: variety `[0, 1]`.
    fn interval_pair() -> (TropPoly, TropPoly) {
        (
            poly(1, &[(-1, &[1]), (0, &[-1]), (0, &[0])]),
            TropPoly::one(1),
        )
    }

    #[test]
    fn cells_of_two_rays_pair() {
        let (f, g) = two_rays_pair();
        let v = cells_of_pair(&f, &g).unwrap();
        assert_eq!(v.cells().len(), 4);
        // Every cell is a one-dimensional unbounded ray.
        for cell in v.cells() {
            assert_eq!(cell.dimension().unwrap(), Some(1));
            assert!(!cell.is_bounded().unwrap());
        }
        assert_eq!(v.dimension().unwrap(), Some(1));
        // The documented cell appears (up to canonical form).
        let documented = PolyhedralSet::from_rows(
            2,
            vec![
                (rv(&[1, -2]), rat_int(3)),
                (rv(&[2, -1]), rat_int(-2)),
                (rv(&[-1, 0]), rat_int(2)),
                (rv(&[1, 0]), rat_int(-2)),
            ],
        )
        .unwrap()
        .canonical();
        assert!(v.cells().iter().any(|c| c == &documented));
    }

    #[test]
    fn interval_variety_and_boolean() {
        let (f, g) = interval_pair();
        let v = cells_of_pair(&f, &g).unwrap();
        assert_eq!(v.dimension().unwrap(), Some(1));
        // Union equals [0, 1]: check a few sample points both ways.
        for (x, inside) in [
            (rat_int(0), true),
            (rat(1, 2), true),
            (rat_int(1), true),
            (rat(-1, 4), false),
            (rat(5, 4), false),
        ] {
            assert_eq!(v.contains_point(&[x]).unwrap(), inside);
        }
        let vb = boolean_variety(1, v.basis()).unwrap();
        assert_eq!(vb.dimension().unwrap(), Some(0));
        assert!(vb.contains_point(&[rat_int(0)]).unwrap());
        assert!(!vb.contains_point(&[rat(1, 10)]).unwrap());
    }

    #[test]
    fn trivial_pairs() {
        let ninf = TropPoly::neg_inf(2);
        let v = cells_of_pair(&ninf, &ninf).unwrap();
        assert_eq!(v.cells().len(), 1);
        assert_eq!(v.dimension().unwrap(), Some(2));

        let v = cells_of_pair(&ninf, &TropPoly::one(2)).unwrap();
        assert!(v.is_empty_set());

        let zero = TropPoly::one(2);
        let v = cells_of_pair(&zero, &zero).unwrap();
        assert_eq!(v.cells().len(), 1);
        assert_eq!(v.dimension().unwrap(), Some(2));
    }

    #[test]
    fn empty_basis_is_full_space() {
        let v = variety_of_basis(3, &[]).unwrap();
        assert_eq!(v.dimension().unwrap(), Some(3));
    }

    #[test]
    fn boolean_of_two_rays_is_recession_fan() {
        let (f, g) = two_rays_pair();
        let v = cells_of_pair(&f, &g).unwrap();
        let vb = boolean_variety(2, v.basis()).unwrap();
        assert_eq!(vb.dimension().unwrap(), Some(1));
        // Each original cell's cone occurs among the boolean cells.
        for cell in v.cells() {
            let cone = cell.recession_cone_unchecked().canonical();
            let found = vb
                .cells()
                .iter()
                .any(|c| c.set_eq(&cone).unwrap());
            assert!(found, "missing recession cone {cone:?}");
        }
    }

    #[test]
    fn containment_checks() {
        let (f, g) = interval_pair();
        let v = cells_of_pair(&f, &g).unwrap();
        assert!(v.contained_in_variety_of(v.basis()).unwrap());
        // x = 0 fails on [0, 1] at x = 1.
        let x = TropPoly::var(1, 0);
        assert!(!v
            .contained_in_variety_of(&[(x, TropPoly::one(1))])
            .unwrap());
    }

    #[test]
    fn components_and_rays() {
        // {0} ∪ {1} built through the inverse construction.
        let p0 = PolyhedralSet::from_rows(1, vec![(rv(&[1]), rat_int(0)), (rv(&[-1]), rat_int(0))])
            .unwrap();
        let p1 = PolyhedralSet::from_rows(1, vec![(rv(&[1]), rat_int(1)), (rv(&[-1]), rat_int(-1))])
            .unwrap();
        let (f, g) = variety_to_pair(&[p0, p1]).unwrap();
        let (a, b) = crate::rat::clear_denominators(&f, &g).unwrap();
        let v = cells_of_pair(&a, &b).unwrap();
        assert_eq!(v.connected_components().unwrap().len(), 2);
        assert!(v.rays().unwrap().is_empty());
        assert_eq!(v.dimension().unwrap(), Some(0));

        // Two parallel half-lines: two rays in the same direction.
        let h0 = PolyhedralSet::from_rows(
            2,
            vec![
                (rv(&[0, 1]), rat_int(0)),
                (rv(&[0, -1]), rat_int(0)),
                (rv(&[1, 0]), rat_int(0)),
            ],
        )
        .unwrap();
        let h1 = PolyhedralSet::from_rows(
            2,
            vec![
                (rv(&[0, 1]), rat_int(1)),
                (rv(&[0, -1]), rat_int(-1)),
                (rv(&[1, 0]), rat_int(0)),
            ],
        )
        .unwrap();
        let (f, g) = variety_to_pair(&[h0, h1]).unwrap();
        let (a, b) = crate::rat::clear_denominators(&f, &g).unwrap();
        let v = cells_of_pair(&a, &b).unwrap();
        let rays = v.rays().unwrap();
        assert_eq!(rays.len(), 2);
        assert!(rays.iter().all(|r| r.direction == vec![1, 0]));
        assert!(v.has_duplicate_parallel_rays().unwrap());
        assert_eq!(v.connected_components().unwrap().len(), 2);
    }

    #[test]
    fn full_line_counts_two_rays() {
        let line = PolyhedralSet::from_rows(
            2,
            vec![(rv(&[0, 1]), rat_int(0)), (rv(&[0, -1]), rat_int(0))],
        )
        .unwrap();
        let (f, g) = variety_to_pair(&[line]).unwrap();
        let (a, b) = crate::rat::clear_denominators(&f, &g).unwrap();
        let v = cells_of_pair(&a, &b).unwrap();
        let rays = v.rays().unwrap();
        assert_eq!(rays.len(), 2);
        let dirs: Vec<&Vec<i64>> = rays.iter().map(|r| &r.direction).collect();
        assert_eq!(dirs, vec![&vec![-1, 0], &vec![1, 0]]);
        assert!(!v.has_duplicate_parallel_rays().unwrap());
    }

    #[test]
    fn hypersurface_of_tropical_line() {
        let f = poly(2, &[(0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])]);
        let v = hypersurface(&f).unwrap();
        assert_eq!(v.cells().len(), 3);
        assert_eq!(v.dimension().unwrap(), Some(1));
        // Union is the classical tropical line with vertex at the origin.
        assert!(v.contains_point(&rv(&[0, 0])).unwrap());
        assert!(v.contains_point(&rv(&[2, 2])).unwrap());
        assert!(v.contains_point(&rv(&[-3, 0])).unwrap());
        assert!(!v.contains_point(&rv(&[1, 2])).unwrap());

        let m = TropPoly::monomial(2, rat_int(5), vec![1, 1]);
        assert!(hypersurface(&m).unwrap().is_empty_set());
    }

    #[test]
    fn variety_to_pair_halfline() {
        // {x >= 0}: f_1 = 0⊙X^⊙(-1) ⊕ 0, cleared pair vanishing on it.
        let h = PolyhedralSet::from_rows(1, vec![(rv(&[1]), rat_int(0))]).unwrap();
        let (f, g) = variety_to_pair(&[h.clone()]).unwrap();
        let (a, b) = crate::rat::clear_denominators(&f, &g).unwrap();
        let v = cells_of_pair(&a, &b).unwrap();
        assert!(v.contains_point(&[rat_int(0)]).unwrap());
        assert!(v.contains_point(&[rat_int(7)]).unwrap());
        assert!(!v.contains_point(&[rat(-1, 3)]).unwrap());

        assert!(matches!(
            variety_to_pair(&[PolyhedralSet::from_rows(
                1,
                vec![(rv(&[1]), rat_int(1)), (rv(&[-1]), rat_int(0))]
            )
            .unwrap()]),
            Err(Error::EmptyCellInput(0))
        ));
    }
}
