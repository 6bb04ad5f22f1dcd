//! Dense exact-rational linear algebra: rank, kernel bases, and primitive
//! integer scaling of rational vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;

/// Reduced row echelon form, in place. Returns the pivot column of each
/// produced row (rows processed top to bottom, pivot columns increasing).
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let sub = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the null space `{v : Mv = 0}` of a matrix with `ncols` columns.
///
/// Deterministic: one basis vector per free column, in column order, with a 1
/// in the free coordinate.
pub fn kernel_basis(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales a nonzero rational vector to a primitive integer vector: clear
/// denominators, divide by the gcd, and make the first nonzero entry positive.
pub fn primitive_integer(v: &[Rat]) -> Option<Vec<i64>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    let mut ints: Vec<BigInt> = ints.into_iter().map(|x| x / &gcd).collect();
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Some(
        ints.into_iter()
            .map(|x| i64::try_from(&x).expect("primitive direction entry exceeds i64"))
            .collect(),
    )
}

/// Dot product of rational slices of equal length.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_i64(a: &[Rat], b: &[i64]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * Rat::from_integer(BigInt::from(*y));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![rv(&[1, 2]), rv(&[2, 4]), rv(&[0, 1])];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn kernel_of_single_row() {
        // x + 2y = 0 has kernel spanned by (-2, 1).
        let k = kernel_basis(&[rv(&[1, 2])], 2);
        assert_eq!(k, vec![vec![rat_int(-2), rat_int(1)]]);
    }

    #[test]
    fn kernel_of_empty_matrix_is_standard_basis() {
        let k = kernel_basis(&[], 2);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], rv(&[1, 0]));
        assert_eq!(k[1], rv(&[0, 1]));
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(
            primitive_integer(&[rat(1, 2), rat(-3, 4)]),
            Some(vec![2, -3])
        );
        assert_eq!(primitive_integer(&[rat_int(0), rat_int(-2)]), Some(vec![0, 1]));
        assert_eq!(primitive_integer(&[rat_int(0), rat_int(0)]), None);
        assert_eq!(primitive_integer(&[rat_int(-4), rat_int(6)]), Some(vec![2, -3]));
    }
}
