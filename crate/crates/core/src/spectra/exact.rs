//! Exact eigenvalue counting for integer matrices.
//!
//! The characteristic polynomial is computed in big integers
//! (Faddeev–LeVerrier, where every division is exact), and since a symmetric
//! matrix has only real eigenvalues, Descartes' rule of signs counts the
//! positive ones exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Graph;

/// Coefficients of `det(xI − M)`, highest degree first.
pub fn charpoly_integer(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let matmul = |a: &[Vec<BigInt>], b: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                            .map(|k| &a[i][k] * &b[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigInt::one()];
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(m, &acc);
        let c_prev = coeffs.last().unwrap().clone();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        let am = matmul(m, &next);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -trace / BigInt::from(k);
        coeffs.push(c);
        acc = next;
    }
    coeffs
}

/// Number of positive roots of a real-rooted polynomial (highest degree
/// first), counted with multiplicity.
pub fn positive_roots_real_rooted(coeffs: &[BigInt]) -> usize {
    let mut end = coeffs.len();
    while end > 1 && coeffs[end - 1].is_zero() {
        end -= 1;
    }
    let signs: Vec<bool> = coeffs[..end]
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exact number of adjacency eigenvalues of `g` strictly greater than
/// `threshold`.
pub fn eigenvalues_above(g: &Graph, threshold: &BigRational) -> usize {
    matrix_eigenvalues_above(&adjacency_integer(g), threshold)
}

/// Exact number of adjacency eigenvalues of `g` strictly less than
/// `threshold`.
pub fn eigenvalues_below(g: &Graph, threshold: &BigRational) -> usize {
    matrix_eigenvalues_below(&adjacency_integer(g), threshold)
}

/// Eigenvalues of an integer matrix with real spectrum (symmetric, or
/// similar to a symmetric matrix) strictly greater than `threshold`.
pub fn matrix_eigenvalues_above(m: &[Vec<BigInt>], threshold: &BigRational) -> usize {
    // eigenvalues of qM − pI are q·θ − p, positive iff θ > p/q
    positive_eigenvalues_of_shift(m, threshold.numer(), threshold.denom())
}

/// Eigenvalues of an integer matrix with real spectrum strictly less than
/// `threshold`.
pub fn matrix_eigenvalues_below(m: &[Vec<BigInt>], threshold: &BigRational) -> usize {
    positive_eigenvalues_of_shift(m, &-threshold.numer(), &-threshold.denom())
}

fn adjacency_integer(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect()
}

/// Positive eigenvalues of `qM − pI`.
fn positive_eigenvalues_of_shift(m: &[Vec<BigInt>], p: &BigInt, q: &BigInt) -> usize {
    let shifted: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { q * x - p } else { q * x })
                .collect()
        })
        .collect();
    positive_roots_real_rooted(&charpoly_integer(&shifted))
}
