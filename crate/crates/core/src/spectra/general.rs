//! Eigenvalues of small, possibly non-symmetric real matrices.
//!
//! Dimension ≤ 4 goes through the characteristic polynomial (Faddeev–LeVerrier)
//! and simultaneous root iteration; larger matrices use a shifted complex QR
//! iteration on the upper Hessenberg form.

use num_complex::Complex64;

const CHARPOLY_MAX_DIM: usize = 4;

/// Eigenvalues of a square matrix given as rows, sorted by descending real part
/// (ties by descending imaginary part).
pub fn eig_general(rows: &[Vec<f64>]) -> Vec<Complex64> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut ev = if n == 0 {
        Vec::new()
    } else if n <= CHARPOLY_MAX_DIM {
        polynomial_roots(&charpoly(rows))
    } else {
        hessenberg_qr(rows)
    };
    ev.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    ev
}

/// Coefficients of `det(xI − A)`, highest degree first (monic).
pub(crate) fn charpoly(rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.len();
    let matmul = |a: &[Vec<f64>], b: &[Vec<f64>]| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![1.0];
    let mut m = vec![vec![0.0; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(rows, &m);
        let c_prev = *coeffs.last().unwrap();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += c_prev;
        }
        let am = matmul(rows, &next);
        let trace: f64 = (0..n).map(|i| am[i][i]).sum();
        coeffs.push(-trace / k as f64);
        m = next;
    }
    coeffs
}

/// Roots of a monic polynomial (highest degree first) by Durand–Kerner
/// iteration followed by Newton polishing.
pub(crate) fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let deriv = |z: Complex64| {
        coeffs[..deg]
            .iter()
            .enumerate()
            .fold(Complex64::new(0.0, 0.0), |acc, (i, &c)| {
                acc * z + c * (deg - i) as f64
            })
    };
    let bound = 1.0 + coeffs[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|i| seed.powu(i as u32) * bound).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..deg {
            let zi = roots[i];
            let denom = (0..deg)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zi - roots[j]));
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    for r in &mut roots {
        for _ in 0..3 {
            let d = deriv(*r);
            if d.norm() < 1e-300 {
                break;
            }
            let step = eval(*r) / d;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *r -= step;
        }
    }
    roots
}

fn hessenberg_qr(rows: &[Vec<f64>]) -> Vec<Complex64> {
    let n = rows.len();
    let mut h: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        .collect();
    reduce_to_hessenberg(&mut h);

    let mut eigen = vec![Complex64::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut stalled = 0;
    loop {
        if hi == 0 {
            eigen[0] = h[0][0];
            break;
        }
        // find the start of the active unreduced block
        let mut lo = hi;
        while lo > 0 {
            let scale = h[lo][lo].norm() + h[lo - 1][lo - 1].norm();
            let scale = if scale == 0.0 { 1.0 } else { scale };
            if h[lo][lo - 1].norm() <= f64::EPSILON * scale {
                h[lo][lo - 1] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigen[hi] = h[hi][hi];
            hi -= 1;
            stalled = 0;
            continue;
        }
        stalled += 1;
        assert!(stalled < 1000, "Hessenberg QR failed to converge");
        let shift = if stalled % 11 == 10 {
            // exceptional shift to break cycles
            h[hi][hi] + h[hi][hi - 1].norm() * 0.75
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        qr_step(&mut h, lo, hi, shift);
    }
    eigen
}

fn reduce_to_hessenberg(h: &mut [Vec<Complex64>]) {
    let n = h.len();
    for col in 0..n.saturating_sub(2) {
        for row in (col + 2)..n {
            if h[row][col].norm() == 0.0 {
                continue;
            }
            let (c, s) = givens(h[col + 1][col], h[row][col]);
            rotate_rows(h, col + 1, row, c, s, 0, n);
            rotate_cols(h, col + 1, row, c, s, 0, n);
        }
    }
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr * 0.25 - det).sqrt();
    let l1 = tr * 0.5 + disc;
    let l2 = tr * 0.5 - disc;
    if (l1 - d).norm() < (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Returns `(c, s)` such that `[[c̄, s̄], [−s, c]] · [x; y] = [r; 0]`.
fn givens(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    } else {
        (x / r, y / r)
    }
}

fn rotate_rows(
    h: &mut [Vec<Complex64>],
    p: usize,
    q: usize,
    c: Complex64,
    s: Complex64,
    from: usize,
    to: usize,
) {
    for j in from..to {
        let (x, y) = (h[p][j], h[q][j]);
        h[p][j] = c.conj() * x + s.conj() * y;
        h[q][j] = -s * x + c * y;
    }
}

fn rotate_cols(
    h: &mut [Vec<Complex64>],
    p: usize,
    q: usize,
    c: Complex64,
    s: Complex64,
    from: usize,
    to: usize,
) {
    // right-multiply by the adjoint rotation
    for row in h.iter_mut().take(to).skip(from) {
        let (x, y) = (row[p], row[q]);
        row[p] = x * c + y * s;
        row[q] = -x * s.conj() + y * c.conj();
    }
}

fn qr_step(h: &mut [Vec<Complex64>], lo: usize, hi: usize, shift: Complex64) {
    for i in lo..=hi {
        h[i][i] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[k][k], h[k + 1][k]);
        rotate_rows(h, k, k + 1, c, s, lo, hi + 1);
        rotations.push((k, c, s));
    }
    for (k, c, s) in rotations {
        rotate_cols(h, k, k + 1, c, s, lo, hi + 1);
    }
    for i in lo..=hi {
        h[i][i] += shift;
    }
}
