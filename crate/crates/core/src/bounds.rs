//! Spectral bounds on clique partitions and edge-disjoint clique packings.
//!
//! Every bound is reported as a [`BoundReport`]: the real value, its
//! integer strengthening, and (when something was checked) an equality
//! diagnosis with a certificate.
//!
//! | name                     | quantity | value                                              |
//! |--------------------------|----------|----------------------------------------------------|
//! | `hoffman_eigencount`     | cp       | `(-1 + √(8q+1)) / 2`, `q` = #eigenvalues `≠ -1`    |
//! | `hoffman_min_eigenvalue` | cp       | `-λ_min`                                           |
//! | `cp_t_lower`             | cp_t     | `ρ - t + 1 + ⌈δ/(t-1)⌉`                            |
//! | `cp_lower`               | cp       | `cp_t_lower` at `t = ω`                            |
//! | `pi_t_lower`             | pi_t     | `ρ + (n - t + 1)⌈δ/(t-1)⌉`                         |
//! | `pi_lower`               | pi       | `pi_t_lower` at `t = ω`                            |
//! | `cp_via_pi`              | cp       | `pi_lower / ω`                                     |
//! | `kt_upper`               | k_t      | `(2m - ρ - (n - t + 1)⌈δ/(t-1)⌉) / (t(t-2))`       |

use serde::Serialize;
use thiserror::Error;

use crate::cliques::clique_number;
use crate::designs::{decomposition_to_design, Design, DesignJson};
use crate::graph::{DegreeProfile, Graph};
use crate::partition::{
    find_kt_decomposition_with, solve_cp, solve_cp_t, solve_kt, solve_pi, solve_pi_t,
    CliquePartition, DecompositionOutcome, DecompositionQuery, PartitionJson, SolveError,
    SolveOptions, SolveResult,
};
use crate::spectral::{graph_spectrum, SpectralError, Spectrum, TAU_EIG, TAU_GROUP};

/// Node budget for the decomposition searches behind equality diagnoses.
pub const CERTIFICATE_NODE_LIMIT: u64 = 5_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("graph has no edges")]
    NoEdges,
    #[error("t = {t} is below the minimum {min} for this bound")]
    InvalidT { t: usize, min: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    HoffmanEigencount,
    HoffmanMinEigenvalue,
    CpTLower,
    CpLower,
    PiTLower,
    PiLower,
    CpViaPi,
    KtUpper,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::HoffmanEigencount => "hoffman_eigencount",
            BoundName::HoffmanMinEigenvalue => "hoffman_min_eigenvalue",
            BoundName::CpTLower => "cp_t_lower",
            BoundName::CpLower => "cp_lower",
            BoundName::PiTLower => "pi_t_lower",
            BoundName::PiLower => "pi_lower",
            BoundName::CpViaPi => "cp_via_pi",
            BoundName::KtUpper => "kt_upper",
        }
    }

    pub fn quantity(self) -> Quantity {
        match self {
            BoundName::HoffmanEigencount
            | BoundName::HoffmanMinEigenvalue
            | BoundName::CpLower
            | BoundName::CpViaPi => Quantity::Cp,
            BoundName::CpTLower => Quantity::CpT,
            BoundName::PiTLower => Quantity::PiT,
            BoundName::PiLower => Quantity::Pi,
            BoundName::KtUpper => Quantity::Kt,
        }
    }

    pub fn is_upper(self) -> bool {
        self == BoundName::KtUpper
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Cp,
    CpT,
    Pi,
    PiT,
    Kt,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Cp => "cp",
            Quantity::CpT => "cp_t",
            Quantity::Pi => "pi",
            Quantity::PiT => "pi_t",
            Quantity::Kt => "k_t",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityDiagnosis {
    AttainedWithCertificate,
    NotAttained,
    Undecided,
}

impl EqualityDiagnosis {
    pub fn as_str(self) -> &'static str {
        match self {
            EqualityDiagnosis::AttainedWithCertificate => "attained-with-certificate",
            EqualityDiagnosis::NotAttained => "not-attained",
            EqualityDiagnosis::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Design(Design),
    Partition(CliquePartition),
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum CertificateJson {
    Design(DesignJson),
    Partition(PartitionJson),
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Certificate::Design(d) => CertificateJson::Design(d.to_json()),
            Certificate::Partition(p) => CertificateJson::Partition(p.to_json()),
        }
        .serialize(s)
    }
}

/// One evaluated bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub quantity: Quantity,
    pub params: BoundParams,
    pub raw: f64,
    /// `⌈raw - τ⌉` for lower bounds, `⌊raw + τ⌋` for upper bounds.
    pub strengthened: i64,
    /// Exact value of the bounded quantity, when a solver computed it.
    pub exact: Option<usize>,
    pub equality_diagnosis: EqualityDiagnosis,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl BoundReport {
    fn new(name: BoundName, params: BoundParams, raw: f64) -> Self {
        let strengthened = if name.is_upper() {
            (raw + TAU_EIG).floor() as i64
        } else {
            (raw - TAU_EIG).ceil() as i64
        };
        BoundReport {
            name,
            quantity: name.quantity(),
            params,
            raw,
            strengthened,
            exact: None,
            equality_diagnosis: EqualityDiagnosis::Undecided,
            certificate: None,
        }
    }

    pub fn is_lower(&self) -> bool {
        !self.name.is_upper()
    }

    /// Whether the bound holds against `exact` after strengthening.
    pub fn is_sound_for(&self, exact: usize) -> bool {
        if self.is_lower() {
            self.strengthened <= exact as i64
        } else {
            self.strengthened >= exact as i64
        }
    }

    /// Records a solver value and diagnoses equality against it.
    fn attach_exact(&mut self, result: &SolveResult) {
        self.exact = Some(result.optimum);
        if (self.raw - result.optimum as f64).abs() <= TAU_EIG {
            self.equality_diagnosis = EqualityDiagnosis::AttainedWithCertificate;
            self.certificate = result.witness.as_partition().cloned().map(Certificate::Partition);
        } else {
            self.equality_diagnosis = EqualityDiagnosis::NotAttained;
        }
    }
}

/// Spectral and combinatorial data shared by all bounds of one graph.
#[derive(Clone, Debug)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub profile: DegreeProfile,
    pub spectrum: Spectrum,
    pub omega: usize,
}

impl GraphFacts {
    pub fn compute(g: &Graph) -> Result<Self, BoundError> {
        Ok(GraphFacts {
            n: g.n(),
            m: g.m(),
            profile: g.degree_profile(),
            spectrum: graph_spectrum(g)?,
            omega: clique_number(g),
        })
    }

    pub fn rho(&self) -> f64 {
        self.spectrum.largest()
    }

    fn require_connected(&self) -> Result<(), BoundError> {
        if !self.profile.is_connected {
            Err(BoundError::Disconnected)
        } else if self.m == 0 {
            Err(BoundError::NoEdges)
        } else {
            Ok(())
        }
    }

    /// `⌈δ / (t - 1)⌉`.
    fn min_q_degree(&self, t: usize) -> usize {
        self.profile.min_degree.div_ceil(t - 1)
    }
}

fn check_t(t: usize, min: usize) -> Result<(), BoundError> {
    if t < min {
        Err(BoundError::InvalidT { t, min })
    } else {
        Ok(())
    }
}

pub fn hoffman_eigencount_with(f: &GraphFacts) -> Result<BoundReport, BoundError> {
    if f.profile.has_isolated_vertex {
        return Err(BoundError::IsolatedVertex);
    }
    let q = f.spectrum.count_not_minus_one() as f64;
    let raw = (-1.0 + (8.0 * q + 1.0).sqrt()) / 2.0;
    Ok(BoundReport::new(BoundName::HoffmanEigencount, BoundParams::default(), raw))
}

pub fn hoffman_min_eigenvalue_with(f: &GraphFacts) -> Result<BoundReport, BoundError> {
    // `+ 0.0` turns the -0.0 of an edgeless graph into 0.0.
    let raw = -f.spectrum.smallest() + 0.0;
    Ok(BoundReport::new(BoundName::HoffmanMinEigenvalue, BoundParams::default(), raw))
}

fn cp_t_raw(f: &GraphFacts, t: usize) -> f64 {
    f.rho() - t as f64 + 1.0 + f.min_q_degree(t) as f64
}

fn pi_t_raw(f: &GraphFacts, t: usize) -> f64 {
    f.rho() + ((f.n + 1 - t) * f.min_q_degree(t)) as f64
}

pub fn cp_t_lower_bound_with(f: &GraphFacts, t: usize) -> Result<BoundReport, BoundError> {
    check_t(t, 2)?;
    f.require_connected()?;
    let params = BoundParams { t: Some(t), omega: None };
    Ok(BoundReport::new(BoundName::CpTLower, params, cp_t_raw(f, t)))
}

pub fn cp_lower_bound_with(f: &GraphFacts) -> Result<BoundReport, BoundError> {
    f.require_connected()?;
    let params = BoundParams { t: None, omega: Some(f.omega) };
    Ok(BoundReport::new(BoundName::CpLower, params, cp_t_raw(f, f.omega)))
}

pub fn pi_t_lower_bound_with(f: &GraphFacts, t: usize) -> Result<BoundReport, BoundError> {
    check_t(t, 2)?;
    f.require_connected()?;
    let params = BoundParams { t: Some(t), omega: None };
    Ok(BoundReport::new(BoundName::PiTLower, params, pi_t_raw(f, t)))
}

pub fn pi_lower_bound_with(f: &GraphFacts) -> Result<BoundReport, BoundError> {
    f.require_connected()?;
    let params = BoundParams { t: None, omega: Some(f.omega) };
    Ok(BoundReport::new(BoundName::PiLower, params, pi_t_raw(f, f.omega)))
}

pub fn cp_via_pi_bound_with(f: &GraphFacts) -> Result<BoundReport, BoundError> {
    f.require_connected()?;
    let params = BoundParams { t: None, omega: Some(f.omega) };
    let raw = pi_t_raw(f, f.omega) / f.omega as f64;
    Ok(BoundReport::new(BoundName::CpViaPi, params, raw))
}

pub fn kt_upper_bound_with(f: &GraphFacts, t: usize) -> Result<BoundReport, BoundError> {
    check_t(t, 3)?;
    f.require_connected()?;
    let params = BoundParams { t: Some(t), omega: None };
    let raw = (2.0 * f.m as f64 - pi_t_raw(f, t)) / (t * (t - 2)) as f64;
    Ok(BoundReport::new(BoundName::KtUpper, params, raw))
}

/// Requires a graph without isolated vertices.
pub fn hoffman_q_bound(g: &Graph) -> Result<BoundReport, BoundError> {
    hoffman_eigencount_with(&GraphFacts::compute(g)?)
}

pub fn hoffman_lambda_bound(g: &Graph) -> Result<BoundReport, BoundError> {
    hoffman_min_eigenvalue_with(&GraphFacts::compute(g)?)
}

pub fn cp_t_lower_bound(g: &Graph, t: usize) -> Result<BoundReport, BoundError> {
    cp_t_lower_bound_with(&GraphFacts::compute(g)?, t)
}

pub fn cp_lower_bound(g: &Graph) -> Result<BoundReport, BoundError> {
    cp_lower_bound_with(&GraphFacts::compute(g)?)
}

pub fn pi_t_lower_bound(g: &Graph, t: usize) -> Result<BoundReport, BoundError> {
    pi_t_lower_bound_with(&GraphFacts::compute(g)?, t)
}

pub fn pi_lower_bound(g: &Graph) -> Result<BoundReport, BoundError> {
    pi_lower_bound_with(&GraphFacts::compute(g)?)
}

pub fn cp_via_pi_bound(g: &Graph) -> Result<BoundReport, BoundError> {
    cp_via_pi_bound_with(&GraphFacts::compute(g)?)
}

pub fn kt_upper_bound(g: &Graph, t: usize) -> Result<BoundReport, BoundError> {
    kt_upper_bound_with(&GraphFacts::compute(g)?, t)
}

/// Which equality characterization to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityTarget {
    /// `cp^(t)` bound: equality iff `G` is the block graph of a Steiner 2-design.
    CliqueCount,
    /// `π_t` bound: equality iff `G` is regular with a `K_t`-decomposition.
    TotalSize,
    /// `k_t` bound: same characterization as `TotalSize`.
    Packing,
}

/// Expected grouped spectrum `δ (×1), t-1-k (×v-1), -k (×n-v)` of an
/// extremal graph, with zero multiplicities dropped.
pub fn extremal_spectrum_pattern(n: usize, t: usize, k: usize, v: usize) -> Vec<(f64, usize)> {
    let delta = ((t - 1) * k) as f64;
    let pattern = [
        (delta, 1),
        (t as f64 - 1.0 - k as f64, v - 1),
        (-(k as f64), n - v),
    ];
    pattern.into_iter().filter(|&(_, mult)| mult > 0).collect()
}

fn spectrum_matches(spectrum: &Spectrum, pattern: &[(f64, usize)]) -> bool {
    pattern.iter().map(|&(_, m)| m).sum::<usize>() == spectrum.len()
        && pattern
            .iter()
            .all(|&(value, mult)| spectrum.multiplicity(value) == mult)
}

/// Evaluates the bound for `target` and decides whether `g` attains it,
/// using the structural characterization and, when the graph is within the
/// solver's size guard, an exact solve as confirmation.
pub fn classify_equality(
    g: &Graph,
    t: usize,
    target: EqualityTarget,
    opts: &SolveOptions,
) -> Result<BoundReport, BoundError> {
    let facts = GraphFacts::compute(g)?;
    let mut report = match target {
        EqualityTarget::CliqueCount => cp_t_lower_bound_with(&facts, t)?,
        EqualityTarget::TotalSize => pi_t_lower_bound_with(&facts, t)?,
        EqualityTarget::Packing => kt_upper_bound_with(&facts, t)?,
    };
    let within_guard = opts.force || g.m() <= opts.edge_limit;

    let structural = match target {
        EqualityTarget::CliqueCount => clique_count_certificate(g, &facts, t)?,
        EqualityTarget::TotalSize | EqualityTarget::Packing => regular_decomposition(g, &facts, t)?,
    };
    match structural {
        Structural::Fails => report.equality_diagnosis = EqualityDiagnosis::NotAttained,
        Structural::Unknown => report.equality_diagnosis = EqualityDiagnosis::Undecided,
        Structural::Certified { partition, certificate } => {
            let achieved = match target {
                EqualityTarget::CliqueCount | EqualityTarget::Packing => partition.size(),
                EqualityTarget::TotalSize => partition.total_size(),
            };
            report.equality_diagnosis = if (report.raw - achieved as f64).abs() <= TAU_EIG {
                report.certificate = Some(certificate);
                EqualityDiagnosis::AttainedWithCertificate
            } else {
                EqualityDiagnosis::NotAttained
            };
        }
    }

    if within_guard {
        let exact = match target {
            EqualityTarget::CliqueCount => solve_cp_t(g, t, opts)?,
            EqualityTarget::TotalSize => solve_pi_t(g, t, opts)?,
            EqualityTarget::Packing => solve_kt(g, t, opts)?,
        };
        report.exact = Some(exact.optimum);
        let attained = (report.raw - exact.optimum as f64).abs() <= TAU_EIG;
        match report.equality_diagnosis {
            EqualityDiagnosis::AttainedWithCertificate if !attained => {
                unreachable!("certificate attains a bound the exact solver exceeds")
            }
            EqualityDiagnosis::Undecided if !attained => {
                report.equality_diagnosis = EqualityDiagnosis::NotAttained;
            }
            _ => {}
        }
    }
    Ok(report)
}

enum Structural {
    Fails,
    Unknown,
    Certified {
        partition: CliquePartition,
        certificate: Certificate,
    },
}

fn search_decomposition(
    g: &Graph,
    t: usize,
    pairwise_intersecting: bool,
) -> Result<Option<DecompositionOutcome>, BoundError> {
    let query = DecompositionQuery {
        t,
        pairwise_intersecting,
        node_limit: Some(CERTIFICATE_NODE_LIMIT),
    };
    Ok(Some(find_kt_decomposition_with(g, query)?))
}

fn clique_count_certificate(g: &Graph, f: &GraphFacts, t: usize) -> Result<Structural, BoundError> {
    if !f.profile.is_regular {
        return Ok(Structural::Fails);
    }
    let d = f.profile.min_degree;
    if !d.is_multiple_of(t - 1) || !(d / (t - 1) * f.n).is_multiple_of(t) {
        return Ok(Structural::Fails);
    }
    let k = d / (t - 1);
    let v = k * f.n / t;
    if v == 0 || v > f.n || !spectrum_matches(&f.spectrum, &extremal_spectrum_pattern(f.n, t, k, v)) {
        return Ok(Structural::Fails);
    }
    match search_decomposition(g, t, true)? {
        Some(DecompositionOutcome::Found(partition)) => {
            let certificate = if partition.size() == 1 {
                Certificate::Partition(partition.clone())
            } else {
                match decomposition_to_design(g, &partition) {
                    Ok(design) => Certificate::Design(design),
                    Err(_) => return Ok(Structural::Fails),
                }
            };
            Ok(Structural::Certified { partition, certificate })
        }
        Some(DecompositionOutcome::BudgetExceeded) => Ok(Structural::Unknown),
        _ => Ok(Structural::Fails),
    }
}

fn regular_decomposition(g: &Graph, f: &GraphFacts, t: usize) -> Result<Structural, BoundError> {
    if !f.profile.is_regular {
        return Ok(Structural::Fails);
    }
    match search_decomposition(g, t, false)? {
        Some(DecompositionOutcome::Found(partition)) => Ok(Structural::Certified {
            certificate: Certificate::Partition(partition.clone()),
            partition,
        }),
        Some(DecompositionOutcome::BudgetExceeded) => Ok(Structural::Unknown),
        _ => Ok(Structural::Fails),
    }
}

/// What the dashboard evaluates beyond the size bounds.
#[derive(Clone, Debug, Default)]
pub struct DashboardOptions {
    /// Also evaluate the `t`-restricted bounds.
    pub t: Option<usize>,
    /// Run exact solvers (subject to the size guard in `solve`).
    pub exact: bool,
    pub solve: SolveOptions,
}

pub type BoundEntry = (BoundName, Result<BoundReport, BoundError>);

/// Every applicable bound, each evaluated independently so that one failed
/// precondition does not hide the others.
pub fn bound_entries(
    g: &Graph,
    opts: &DashboardOptions,
) -> Result<Vec<BoundEntry>, BoundError> {
    let facts = GraphFacts::compute(g)?;
    let mut entries = vec![
        (BoundName::CpLower, cp_lower_bound_with(&facts)),
        (BoundName::CpViaPi, cp_via_pi_bound_with(&facts)),
        (BoundName::HoffmanEigencount, hoffman_eigencount_with(&facts)),
        (BoundName::HoffmanMinEigenvalue, hoffman_min_eigenvalue_with(&facts)),
        (BoundName::PiLower, pi_lower_bound_with(&facts)),
    ];
    if let Some(t) = opts.t {
        entries.push((BoundName::CpTLower, cp_t_lower_bound_with(&facts, t)));
        entries.push((BoundName::PiTLower, pi_t_lower_bound_with(&facts, t)));
        if t > 2 {
            entries.push((BoundName::KtUpper, kt_upper_bound_with(&facts, t)));
        }
    }

    let runnable = opts.exact
        && g.m() > 0
        && facts.profile.is_connected
        && (opts.solve.force || g.m() <= opts.solve.edge_limit);
    if runnable {
        let cp = solve_cp(g, &opts.solve)?;
        let pi = solve_pi(g, &opts.solve)?;
        let by_t = match opts.t {
            Some(t) if t >= 2 => Some((
                solve_cp_t(g, t, &opts.solve)?,
                solve_pi_t(g, t, &opts.solve)?,
                if t > 2 { Some(solve_kt(g, t, &opts.solve)?) } else { None },
            )),
            _ => None,
        };
        for (_, entry) in entries.iter_mut() {
            let Ok(report) = entry else { continue };
            let result = match report.quantity {
                Quantity::Cp => Some(&cp),
                Quantity::Pi => Some(&pi),
                Quantity::CpT => by_t.as_ref().map(|b| &b.0),
                Quantity::PiT => by_t.as_ref().map(|b| &b.1),
                Quantity::Kt => by_t.as_ref().and_then(|b| b.2.as_ref()),
            };
            if let Some(result) = result {
                if report.quantity == Quantity::Kt {
                    attach_packing(report, result, g);
                } else {
                    report.attach_exact(result);
                }
            }
        }
    }
    Ok(entries)
}

fn attach_packing(report: &mut BoundReport, result: &SolveResult, g: &Graph) {
    report.exact = Some(result.optimum);
    if (report.raw - result.optimum as f64).abs() <= TAU_EIG {
        report.equality_diagnosis = EqualityDiagnosis::AttainedWithCertificate;
        report.certificate = CliquePartition::new(g.clone(), result.witness.cliques().to_vec())
            .ok()
            .map(Certificate::Partition);
    } else {
        report.equality_diagnosis = EqualityDiagnosis::NotAttained;
    }
}

/// All bounds for a connected graph without isolated vertices, sharing one
/// spectral computation.
pub fn bound_dashboard(g: &Graph, opts: &DashboardOptions) -> Result<Vec<BoundReport>, BoundError> {
    bound_entries(g, opts)?
        .into_iter()
        .map(|(_, r)| r)
        .collect()
}

/// `true` when every grouped eigenvalue is within [`TAU_GROUP`] of an
/// integer. Handy for reporting integral spectra.
pub fn has_integral_spectrum(s: &Spectrum) -> bool {
    s.grouped().iter().all(|&(x, _)| (x - x.round()).abs() <= TAU_GROUP)
}
