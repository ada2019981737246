//! Exact integer linear algebra: fraction-free (Bareiss) elimination and
//! canonical bases of row spaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Bareiss elimination in place. Returns the rank; when the matrix is square
/// and of full rank, the last pivot is the determinant up to the returned
/// row-swap sign.
fn bareiss(rows: &mut [Vec<BigInt>]) -> (usize, bool) {
    let m = rows.len();
    if m == 0 {
        return (0, false);
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut swapped = false;
    for col in 0..cols {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            rows.swap(pivot, rank);
            swapped = !swapped;
        }
        for r in rank + 1..m {
            for c in col + 1..cols {
                let val = &rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = val / &prev;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    (rank, swapped)
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut work = rows.to_vec();
    bareiss(&mut work).0
}

pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut work = matrix.to_vec();
    let (rank, swapped) = bareiss(&mut work);
    if rank < n {
        return BigInt::zero();
    }
    // With full rank and no column skipped, the pivots sit on the diagonal.
    let det = work[n - 1][n - 1].clone();
    if swapped {
        -det
    } else {
        det
    }
}

pub fn determinant_i64(matrix: &[Vec<i64>]) -> BigInt {
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    determinant(&big)
}

/// Divides out the content and makes the leading nonzero entry positive.
/// Returns `None` for the zero vector.
pub fn primitive(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let lead_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if lead_negative { -g } else { g };
    Some(v.iter().map(|x| x / &g).collect())
}

/// Canonical integer basis of the row space: the reduced row echelon form
/// with each row scaled to a primitive integer vector. Two row lists span the
/// same space iff their canonical bases are equal.
pub fn canonical_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows.iter().filter_map(|r| primitive(r)).collect();
    if work.is_empty() {
        return work;
    }
    let cols = work[0].len();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..work.len()).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(p, r);
        // Clear the column in every other row using integer cross-multiplication.
        for i in 0..work.len() {
            if i == r || work[i][col].is_zero() {
                continue;
            }
            let a = work[r][col].clone();
            let b = work[i][col].clone();
            let row: Vec<BigInt> = work[i]
                .iter()
                .zip(&work[r])
                .map(|(x, y)| &a * x - &b * y)
                .collect();
            work[i] = primitive(&row).unwrap_or_else(|| vec![BigInt::zero(); cols]);
        }
        r += 1;
        if r == work.len() {
            break;
        }
    }
    work.truncate(r);
    work.into_iter().filter_map(|row| primitive(&row)).collect()
}
