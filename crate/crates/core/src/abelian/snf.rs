//! Smith normal form of integer matrices.
//!
//! Only the diagonal is needed here (it gives the invariant factors of the
//! cokernel), so the unimodular transforms are not tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Returns the Smith diagonal `d_1 | d_2 | … | d_k` of `matrix`, with
/// `k = min(rows, cols)`, entries non-negative. Trailing entries may be 0.
pub fn smith_diagonal(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let k = rows.min(cols);

    for t in 0..k {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; bring it in
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    (0..k).map(|i| a[i][i].abs()).collect()
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut consider = |i: usize, j: usize| {
        let v = &a[i][j];
        if !v.is_zero() && v.abs() < a[best.0][best.1].abs() {
            best = (i, j);
        }
    };
    for i in t + 1..a.len() {
        consider(i, t);
    }
    for j in t + 1..a[t].len() {
        consider(t, j);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn diag(d: &[i64]) -> Vec<BigInt> {
        d.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn known_forms() {
        assert_eq!(smith_diagonal(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), diag(&[2, 6, 12]));
        assert_eq!(smith_diagonal(&m(&[&[6, 0], &[0, 4]])), diag(&[2, 12]));
        assert_eq!(smith_diagonal(&m(&[&[2, 2]])), diag(&[2]));
        assert_eq!(smith_diagonal(&m(&[&[0, 0], &[0, 0]])), diag(&[0, 0]));
        assert_eq!(smith_diagonal(&m(&[])), diag(&[]));
    }

    /// Determinantal divisors: d_1⋯d_i = gcd of all i×i minors.
    fn gcd_of_minors(a: &[Vec<BigInt>], size: usize) -> BigInt {
        fn det(mat: Vec<Vec<BigInt>>) -> BigInt {
            let n = mat.len();
            if n == 0 {
                return BigInt::from(1);
            }
            let mut total = BigInt::zero();
            for (j, v) in mat[0].iter().enumerate() {
                let minor: Vec<Vec<BigInt>> = mat[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = v * det(minor);
                if j % 2 == 0 { total += term } else { total -= term }
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (0..n)
                .flat_map(|i| subsets(i, k - 1).into_iter().map(move |mut s| { s.push(i); s }))
                .collect()
        }
        let mut g = BigInt::zero();
        for rs in subsets(a.len(), size) {
            for cs in subsets(a[0].len(), size) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect()).collect();
                g = g.gcd(&det(sub));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            rows in 1usize..4, cols in 1usize..4,
            vals in proptest::collection::vec(-12i64..12, 9)
        ) {
            let a: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| (0..cols).map(|j| BigInt::from(vals[i * 3 + j])).collect())
                .collect();
            let d = smith_diagonal(&a);
            for i in 0..d.len() {
                if i + 1 < d.len() && !d[i].is_zero() {
                    prop_assert!(d[i + 1].is_multiple_of(&d[i]));
                }
                let prod: BigInt = d[..=i].iter().product();
                prop_assert_eq!(prod, gcd_of_minors(&a, i + 1));
            }
        }
    }
}
