//! Fraction-free elimination and exact interpolation.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Row rank by Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact in any integral domain. Over `Poly` this is the
/// rank over the fraction field of `Q[X]`.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    bareiss(m.to_rows(), m.cols()).0
}

/// Determinant by Bareiss elimination.
pub fn determinant<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(S::one());
    }
    let (r, last, negate) = bareiss(m.to_rows(), n);
    if r < n {
        return Ok(S::zero());
    }
    Ok(if negate { -last } else { last })
}

/// Returns (rank, last pivot, odd number of row swaps).
fn bareiss<S: Scalar>(mut a: Vec<Vec<S>>, cols: usize) -> (usize, S, bool) {
    let rows = a.len();
    let mut prev = S::one();
    let mut r = 0;
    let mut swaps = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(r, p);
            swaps = !swaps;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone();
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotient is exact in an integral domain");
            }
            a[i][c] = S::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, prev, swaps)
}

/// Solves `b_j = sum_i c_i * x_i^j` for `j = 1..=n`.
///
/// The nodes must be pairwise distinct and nonzero; a zero node makes the
/// system singular because `0^j = 0` for every `j >= 1`.
pub fn vandermonde_solve(xs: &[BigRational], bs: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = xs.len();
    if bs.len() != n {
        return Err(Error::DimensionMismatch(format!("{n} nodes, {} values", bs.len())));
    }
    for i in 0..n {
        if xs[i + 1..].contains(&xs[i]) {
            return Err(Error::DuplicateNode);
        }
    }
    if xs.iter().any(Zero::is_zero) {
        return Err(Error::SingularSystem("zero interpolation node".into()));
    }
    // Augmented system: row j is (x_1^{j+1}, ..., x_n^{j+1} | b_{j+1}).
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut powers = xs.to_vec();
    for b in bs {
        let mut row = powers.clone();
        row.push(b.clone());
        a.push(row);
        for (p, x) in powers.iter_mut().zip(xs) {
            *p = &*p * x;
        }
    }
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .ok_or_else(|| Error::SingularSystem("vanishing pivot".into()))?;
        a.swap(c, p);
        let inv = BigRational::one() / &a[c][c];
        for v in a[c].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}
