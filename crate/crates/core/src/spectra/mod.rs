//! Real-symmetric eigenvalues and the spectral quantities built on them.

mod eigen;
pub mod exact;
mod general;

pub use eigen::eig_symmetric;
pub use general::eig_general;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

/// Default eigenvalue grouping tolerance before norm scaling.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-8;

/// Largest tolerated asymmetry `|a_ij − a_ji|` when building a [`SymMatrix`].
pub const ASYMMETRY_TOL: f64 = 1e-12;

/// A dense real symmetric matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from `f(i, j)` evaluated on the lower triangle and mirrored.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Validates squareness, finiteness and symmetry (up to
    /// [`ASYMMETRY_TOL`]); tolerated asymmetry is averaged out.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix is not square"));
        }
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let (a, b) = (rows[i][j], rows[j][i]);
                if !a.is_finite() || !b.is_finite() {
                    return Err(Error::invalid(format!("non-finite entry at ({i}, {j})")));
                }
                if (a - b).abs() > ASYMMETRY_TOL {
                    return Err(Error::invalid(format!(
                        "matrix not symmetric at ({i}, {j}): {a} vs {b}"
                    )));
                }
                m.set(i, j, 0.5 * (a + b));
            }
        }
        Ok(m)
    }

    pub fn adjacency(g: &Graph) -> Self {
        SymMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn norm_inf(&self) -> f64 {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Eigenvalues sorted descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        eig_symmetric(self)
    }

    pub fn spectrum(&self) -> Spectrum {
        let tol = DEFAULT_GROUPING_TOL * self.norm_inf().max(1.0);
        Spectrum::from_eigenvalues(&self.eigenvalues(), tol)
    }
}

/// One eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped by multiplicity, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<Eigenvalue>,
    pub tolerance: f64,
}

impl Spectrum {
    /// Groups eigenvalues whose consecutive (sorted) gaps are at most `tol`;
    /// each group reports its mean.
    pub fn from_eigenvalues(values: &[f64], tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<Vec<f64>> = Vec::new();
        for v in sorted {
            match groups.last_mut() {
                Some(g) if g.last().unwrap() - v <= tol => g.push(v),
                _ => groups.push(vec![v]),
            }
        }
        let eigenvalues = groups
            .into_iter()
            .map(|g| Eigenvalue {
                value: g.iter().sum::<f64>() / g.len() as f64,
                multiplicity: g.len(),
            })
            .collect();
        Spectrum {
            eigenvalues,
            tolerance: tol,
        }
    }

    /// Builds from explicit `(value, multiplicity)` pairs, merging values
    /// within `tol` of each other.
    pub fn from_pairs(pairs: &[(f64, usize)], tol: f64) -> Self {
        let expanded: Vec<f64> = pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        Spectrum::from_eigenvalues(&expanded, tol)
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0].value
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues.last().unwrap().value
    }

    /// Second largest eigenvalue counted with multiplicity.
    pub fn second_largest(&self) -> Option<f64> {
        self.expanded().get(1).copied()
    }

    /// Multiplicity of the group within `tol` of `value`, or 0.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Elementwise comparison of the expanded lists.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let (a, b) = (self.expanded(), other.expanded());
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serialization cannot fail")
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|e| format!("[{}]^{}", fmt_value(e.value), e.multiplicity))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn fmt_value(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-9 {
        format!("{}", r as i64)
    } else {
        format!("{v:.10}")
    }
}

/// Adjacency eigenvalues of `g`, descending.
pub fn eigenvalues(g: &Graph) -> Vec<f64> {
    eig_symmetric(&SymMatrix::adjacency(g))
}

pub fn spectrum(g: &Graph) -> Spectrum {
    SymMatrix::adjacency(g).spectrum()
}

pub fn lambda_max(g: &Graph) -> f64 {
    eigenvalues(g)[0]
}

pub fn lambda_min(g: &Graph) -> f64 {
    *eigenvalues(g).last().unwrap()
}

/// `λ₂(g)` counted with multiplicity; `None` for a single vertex.
pub fn second_largest(g: &Graph) -> Option<f64> {
    eigenvalues(g).get(1).copied()
}

/// Closed-form spectrum of the `q`-coclique extension: every eigenvalue is
/// scaled by `q`, plus `0` with multiplicity `(q − 1)·base_order`.
pub fn coclique_extension_spectrum(s: &Spectrum, base_order: usize, q: usize) -> Result<Spectrum> {
    if q == 0 {
        return Err(Error::invalid("coclique extension needs q >= 1"));
    }
    if s.dimension() != base_order {
        return Err(Error::invalid(format!(
            "spectrum has {} eigenvalues but base order is {base_order}",
            s.dimension()
        )));
    }
    let mut pairs: Vec<(f64, usize)> = s
        .eigenvalues
        .iter()
        .map(|e| (e.value * q as f64, e.multiplicity))
        .collect();
    if q > 1 {
        pairs.push((0.0, (q - 1) * base_order));
    }
    Ok(Spectrum::from_pairs(&pairs, s.tolerance * q as f64))
}

/// The quotient matrix of a vertex partition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientMatrix {
    /// `entries[i][j]` = average number of neighbours in part `j` of a vertex
    /// in part `i`.
    pub entries: Vec<Vec<f64>>,
    pub part_sizes: Vec<usize>,
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Eigenvalues via the small general eigensolver.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        eig_general(&self.entries)
    }

    /// Eigenvalues via the symmetric similarity `D^{1/2} B D^{-1/2}`, with
    /// `D` the diagonal of part sizes. Quotient matrices always admit it
    /// because `|Pᵢ|·Bᵢⱼ` counts edges between parts and is symmetric.
    pub fn symmetrized_eigenvalues(&self) -> Vec<f64> {
        let s = &self.part_sizes;
        let m = SymMatrix::from_fn(s.len(), |i, j| {
            self.entries[i][j] * (s[i] as f64).sqrt() / (s[j] as f64).sqrt()
        });
        m.eigenvalues()
    }
}

pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = g.order();
    let mut part_of = vec![usize::MAX; n];
    for (p, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::invalid(format!("part {p} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            if part_of[v] != usize::MAX {
                return Err(Error::invalid(format!("vertex {v} appears in two parts")));
            }
            part_of[v] = p;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::invalid(format!("vertex {v} is not covered by the partition")));
    }
    let k = partition.len();
    let mut entries = vec![vec![0.0; k]; k];
    let mut equitable = true;
    for (i, part) in partition.iter().enumerate() {
        let counts: Vec<Vec<usize>> = part
            .iter()
            .map(|&v| {
                let mut c = vec![0usize; k];
                for u in g.neighbors(v) {
                    c[part_of[u]] += 1;
                }
                c
            })
            .collect();
        for j in 0..k {
            let total: usize = counts.iter().map(|c| c[j]).sum();
            entries[i][j] = total as f64 / part.len() as f64;
            if counts.iter().any(|c| c[j] != counts[0][j]) {
                equitable = false;
            }
        }
    }
    Ok(QuotientMatrix {
        entries,
        part_sizes: partition.iter().map(Vec::len).collect(),
        equitable,
    })
}

/// Cauchy interlacing between two descending eigenvalue lists:
/// `outer[i] ≥ inner[i] ≥ outer[n − m + i]`.
pub fn interlaces(outer: &[f64], inner: &[f64], tol: f64) -> bool {
    let (n, m) = (outer.len(), inner.len());
    m <= n
        && inner
            .iter()
            .enumerate()
            .all(|(i, &mu)| outer[i] + tol >= mu && mu + tol >= outer[n - m + i])
}

/// Checks that the spectrum of the subgraph induced on `subset` interlaces
/// the spectrum of `g`.
pub fn interlacing_check(g: &Graph, subset: &[usize]) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::invalid("interlacing check needs a nonempty subset"));
    }
    if let Some(&v) = subset.iter().find(|&&v| v >= g.order()) {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    let outer = eigenvalues(g);
    let inner = eigenvalues(&g.induced_subgraph(subset));
    let tol = 1e-9 * (1.0 + outer[0].abs());
    Ok(interlaces(&outer, &inner, tol))
}
