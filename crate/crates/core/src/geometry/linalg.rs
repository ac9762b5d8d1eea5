//! Small dense exact linear algebra over [`Rational`], plus fraction-free
//! integer determinants.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Determinant by Gaussian elimination with exact pivots.
pub fn det_gauss(mut m: Matrix) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

/// Bareiss fraction-free determinant with checked `i128` arithmetic.
/// `None` on overflow.
pub fn det_bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| m[r][k] != 0) else {
            return Some(0);
        };
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = m[i][j].checked_mul(m[k][k])?;
                let y = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        return Some(1);
    }
    sign.checked_mul(m[n - 1][n - 1])
}

/// Bareiss fraction-free determinant over big integers.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by cofactor expansion along the first row, skipping zero
/// entries. Exponential; only meant for the tiny matrices of the oracle.
pub fn det_laplace(m: &[Vec<Rational>]) -> Rational {
    let cols: Vec<usize> = (0..m.len()).collect();
    laplace(m, 0, &cols)
}

fn laplace(m: &[Vec<Rational>], row: usize, cols: &[usize]) -> Rational {
    match cols.len() {
        0 => Rational::one(),
        1 => m[row][cols[0]].clone(),
        _ => {
            let mut acc = Rational::zero();
            for (j, &c) in cols.iter().enumerate() {
                let entry = &m[row][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * &laplace(m, row + 1, &rest);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Row rank by Gaussian elimination.
pub fn rank(mut rows: Matrix) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot, rank);
        let p = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            for c in col..ncols {
                let sub = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
