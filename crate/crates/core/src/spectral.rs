//! Dense symmetric eigenvalues.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and then runs implicitly shifted QL sweeps on the tridiagonal
//! pair. Only eigenvalues are computed. Everything is `O(n³)`, allocation is
//! `O(n²)`, and the result is a deterministic function of the input.

use std::ops::{Add, Index};

use thiserror::Error;

use crate::graph::Graph;

/// Absolute accuracy target for eigenvalues of matrices with entries of
/// magnitude at most `1e3`.
pub const TAU_EIG: f64 = 1e-9;

/// Tolerance for grouping eigenvalues into multiplicities, and for deciding
/// whether an eigenvalue equals `-1`.
pub const TAU_GROUP: f64 = 1e-6;

const MAX_QL_SWEEPS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("matrix must have order at least 1")]
    Empty,
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("eigenvalue index out of range: i = {i}, j = {j}, order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("QL iteration failed to converge")]
    NoConvergence,
}

/// A real symmetric matrix stored densely in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::diagonal(&vec![1.0; order])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &x) in values.iter().enumerate() {
            m.entries[i * m.order + i] = x;
        }
        m
    }

    /// Builds the matrix from `f(i, j)` evaluated on the upper triangle
    /// `i ≤ j`; the lower triangle mirrors it.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                let x = f(i, j);
                m.entries[i * order + j] = x;
                m.entries[j * order + i] = x;
            }
        }
        m
    }

    /// `A(G)`.
    pub fn adjacency(g: &Graph) -> Self {
        Self::from_upper(g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(|row| row.iter().sum())
            .collect()
    }

    pub fn scale(&self, factor: f64) -> Self {
        SymMatrix {
            order: self.order,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0.0)
    }

    /// Graph on `0..order` with `i ~ j` whenever the off-diagonal entry is
    /// nonzero. Used for irreducibility checks.
    pub fn support_graph(&self) -> Graph {
        Graph::from_fn(self.order, |i, j| self[(i, j)] != 0.0)
    }
}

impl Index<(usize, usize)> for SymMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.order + j]
    }
}

impl Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.order, rhs.order, "order mismatch in matrix sum");
        SymMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Eigenvalues of a symmetric matrix, sorted in descending order, with a
/// multiplicity grouping at tolerance [`TAU_GROUP`].
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    grouped: Vec<(f64, usize)>,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let mut grouped: Vec<(f64, usize, f64)> = Vec::new();
        let mut prev = f64::NAN;
        for &x in &eigenvalues {
            match grouped.last_mut() {
                Some((_, count, sum)) if (prev - x).abs() <= TAU_GROUP => {
                    *count += 1;
                    *sum += x;
                }
                _ => grouped.push((x, 1, x)),
            }
            prev = x;
        }
        let grouped = grouped
            .into_iter()
            .map(|(_, count, sum)| (sum / count as f64, count))
            .collect();
        Spectrum {
            eigenvalues,
            grouped,
        }
    }

    /// `λ_1 ≥ … ≥ λ_n`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Distinct eigenvalues (descending) with multiplicities.
    pub fn grouped(&self) -> &[(f64, usize)] {
        &self.grouped
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `λ_i`, 1-indexed.
    pub fn lambda(&self, i: usize) -> f64 {
        self.eigenvalues[i - 1]
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum of an empty matrix")
    }

    /// Number of eigenvalues farther than [`TAU_GROUP`] from `-1`.
    pub fn count_not_minus_one(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&x| (x + 1.0).abs() > TAU_GROUP)
            .count()
    }

    /// Multiplicity of `value`, counting eigenvalues within [`TAU_GROUP`].
    pub fn multiplicity(&self, value: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&x| (x - value).abs() <= TAU_GROUP)
            .count()
    }
}

/// All eigenvalues of `m`.
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Spectrum, SpectralError> {
    let n = m.order;
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    for i in 0..n {
        for j in 0..n {
            if !m[(i, j)].is_finite() {
                return Err(SpectralError::NonFinite(i, j));
            }
        }
    }
    let (mut diag, mut off) = tridiagonalize(m);
    ql_implicit(&mut diag, &mut off)?;
    Ok(Spectrum::from_eigenvalues(diag))
}

/// Householder reduction to tridiagonal form. Returns the diagonal and the
/// sub-diagonal (`off[i]` couples `i` and `i + 1`; `off[n-1] = 0`).
fn tridiagonalize(m: &SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.order;
    let mut a = m.entries.clone();
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i * n + k].powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] -= alpha;
        let vtv: f64 = (k + 1..n).map(|i| v[i] * v[i]).sum();
        if vtv == 0.0 {
            off[k] = x0;
            continue;
        }
        let beta = 2.0 / vtv;

        // p = β S v, then q = p - (β vᵀp / 2) v and S ← S - v qᵀ - q vᵀ.
        for i in k + 1..n {
            p[i] = beta * (k + 1..n).map(|j| a[i * n + j] * v[j]).sum::<f64>();
        }
        let kappa = 0.5 * beta * (k + 1..n).map(|i| v[i] * p[i]).sum::<f64>();
        for i in k + 1..n {
            p[i] -= kappa * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] -= v[i] * p[j] + p[i] * v[j];
            }
        }
        off[k] = alpha;
        for i in k + 1..n {
            a[i * n + k] = 0.0;
            a[k * n + i] = 0.0;
        }
        a[(k + 1) * n + k] = alpha;
        a[k * n + k + 1] = alpha;
    }
    if n >= 2 {
        off[n - 2] = a[(n - 1) * n + n - 2];
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    (diag, off)
}

/// Implicitly shifted QL on a symmetric tridiagonal matrix; on return `d`
/// holds the eigenvalues (unsorted).
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectralError> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(SpectralError::NoConvergence);
            }

            // Wilkinson shift from the leading 2×2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Spectrum of `A(G)`.
pub fn graph_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    sym_eigenvalues(&SymMatrix::adjacency(g))
}

/// `ρ(G) = λ_1(A(G))`.
pub fn spectral_radius(g: &Graph) -> Result<f64, SpectralError> {
    Ok(graph_spectrum(g)?.largest())
}

/// `λ_n(A(G))`.
pub fn lambda_min(g: &Graph) -> Result<f64, SpectralError> {
    Ok(graph_spectrum(g)?.smallest())
}

/// Number of adjacency eigenvalues that are not `-1`.
pub fn count_not_minus_one(g: &Graph) -> Result<usize, SpectralError> {
    Ok(graph_spectrum(g)?.count_not_minus_one())
}

/// Outcome of the two eigenvalue-sum inequalities for one index pair; an
/// entry is `None` when its index condition does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeylCheck {
    /// `λ_i(A+B) ≤ λ_j(A) + λ_{i+1−j}(B)`, for `j ≤ i`.
    pub upper: Option<bool>,
    /// `λ_i(A+B) ≥ λ_j(A) + λ_{i+n−j}(B)`, for `i ≤ j`.
    pub lower: Option<bool>,
}

/// Checks Weyl's inequalities for indices `i`, `j` (1-indexed) within
/// [`TAU_EIG`] slack.
pub fn check_weyl(
    a: &SymMatrix,
    b: &SymMatrix,
    i: usize,
    j: usize,
) -> Result<WeylCheck, SpectralError> {
    let n = a.order();
    if b.order() != n {
        return Err(SpectralError::OrderMismatch(n, b.order()));
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(SpectralError::IndexOutOfRange { i, j, n });
    }
    let sa = sym_eigenvalues(a)?;
    let sb = sym_eigenvalues(b)?;
    let sum = sym_eigenvalues(&(a + b))?;
    let upper = (j <= i).then(|| sum.lambda(i) <= sa.lambda(j) + sb.lambda(i + 1 - j) + TAU_EIG);
    let lower = (i <= j).then(|| sum.lambda(i) >= sa.lambda(j) + sb.lambda(i + n - j) - TAU_EIG);
    Ok(WeylCheck { upper, lower })
}

/// Maximum row sum of a nonnegative matrix.
pub fn max_row_sum(m: &SymMatrix) -> Result<f64, SpectralError> {
    for row in 0..m.order() {
        for col in 0..m.order() {
            let value = m[(row, col)];
            if value < 0.0 {
                return Err(SpectralError::NegativeEntry { row, col, value });
            }
        }
    }
    Ok(m.row_sums().into_iter().fold(0.0, f64::max))
}
