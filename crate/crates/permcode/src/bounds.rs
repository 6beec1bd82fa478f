//! Every size bound on permutation codes this crate knows how to evaluate:
//! the Gilbert-Varshamov and sphere-packing bounds, the folklore degree
//! bound, the triangle-free and few-triangles independence bounds, and the
//! edge-counting machinery behind them — the clamped ceiling, the profile
//! product g(s,t,m,r), the constrained quadruple sum bounding the
//! neighborhood edge count, its maximizer, the entropy-slack margin check,
//! and the Delta^2/E log ratio.
//!
//! Counts are exact `BigUint`s end to end. Only the final logarithmic
//! comparisons (and the floor of the locally-sparse bounds, which divides an
//! exact integer by a 2^63-scaled parenthetical) go through `f64`, with
//! absolute error far below 1e-9.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::{
    binary_entropy, binomial, derangements, factorial, ln_of_count, log2_of_count,
    sphere_volume, CombTable,
};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("invalid code parameters n = {n}, d = {d}: need n >= 2 and 1 <= d <= n")]
    InvalidParameters { n: u32, d: u32 },
    #[error("epsilon = {0} outside the open interval (0, 1/6)")]
    EpsilonOutOfRange(f64),
    #[error(transparent)]
    Profile(#[from] ProfileViolation),
}

/// Which of the four profile constraints a candidate (s, t, m, r) breaks.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ProfileViolation {
    #[error("s = {s} outside 1..={d}")]
    SOutOfRange { s: u32, d: u32 },
    #[error("t = {t} outside 1..={d}")]
    TOutOfRange { t: u32, d: u32 },
    #[error("m = {m} outside {lo}..={hi} for s = {s}, t = {t}, d = {d}")]
    MOutOfRange { m: u32, lo: u32, hi: u32, s: u32, t: u32, d: u32 },
    #[error("r = {r} outside {lo}..={hi} for s = {s}, t = {t}, m = {m}, d = {d}")]
    ROutOfRange { r: u32, lo: u32, hi: u32, s: u32, t: u32, m: u32, d: u32 },
}

/// A code length `n` and designed minimum distance `d`, with 2 <= d <= n.
///
/// Distance 1 is impossible between distinct permutations, so `d = 1` is
/// accepted and normalized to the equivalent full-space case `d = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParameters {
    n: u32,
    d: u32,
}

impl CodeParameters {
    pub fn new(n: u32, d: u32) -> Result<Self, BoundsError> {
        if n < 2 || d < 1 || d > n {
            return Err(BoundsError::InvalidParameters { n, d });
        }
        Ok(CodeParameters { n, d: d.max(2) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// The rate parameter d/n as an exact rational.
    pub fn delta(&self) -> Ratio<u64> {
        Ratio::new(self.d as u64, self.n as u64)
    }
}

impl std::fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n = {}, d = {})", self.n, self.d)
    }
}

/// A constrained quadruple (s, t, m, r) indexing one term of the edge bound:
/// `s` and `t` are the distances of the two endpoints from the identity, `m`
/// counts positions both endpoints derange, and `r` counts deranged positions
/// where they agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeProfile {
    pub s: u32,
    pub t: u32,
    pub m: u32,
    pub r: u32,
}

impl EdgeProfile {
    pub fn new(s: u32, t: u32, m: u32, r: u32) -> Self {
        EdgeProfile { s, t, m, r }
    }

    /// Checks the four box constraints against `params`, reporting the first
    /// one violated.
    pub fn validate(&self, params: &CodeParameters) -> Result<(), ProfileViolation> {
        let d = params.d;
        let EdgeProfile { s, t, m, r } = *self;
        if s < 1 || s > d {
            return Err(ProfileViolation::SOutOfRange { s, d });
        }
        if t < 1 || t > d {
            return Err(ProfileViolation::TOutOfRange { t, d });
        }
        let (m_lo, m_hi) = m_range(s, t, d);
        if m < m_lo || m > m_hi {
            return Err(ProfileViolation::MOutOfRange { m, lo: m_lo, hi: m_hi, s, t, d });
        }
        let (r_lo, r_hi) = r_range(s, t, m, d);
        if r < r_lo || r > r_hi {
            return Err(ProfileViolation::ROutOfRange { r, lo: r_lo, hi: r_hi, s, t, m, d });
        }
        Ok(())
    }
}

impl std::fmt::Display for EdgeProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(s = {}, t = {}, m = {}, r = {})", self.s, self.t, self.m, self.r)
    }
}

/// The smallest nonnegative integer at or above `x`.
pub fn ceil_plus(x: Ratio<i64>) -> u64 {
    let c = x.ceil().to_integer();
    if c < 0 {
        0
    } else {
        c as u64
    }
}

fn m_range(s: u32, t: u32, d: u32) -> (u32, u32) {
    let lo = ceil_plus(Ratio::new(s as i64 + t as i64 - d as i64, 2)) as u32;
    (lo, s.min(t))
}

fn r_range(s: u32, t: u32, m: u32, d: u32) -> (u32, u32) {
    let lo = ceil_plus(Ratio::from_integer(
        s as i64 + t as i64 - m as i64 - d as i64,
    )) as u32;
    (lo, m)
}

/// ceil(n! / V(n, d-1)): the Gilbert-Varshamov lower bound on M(n, d),
/// sharpened to the next integer since M(n, d) is one.
pub fn gv_lower(params: &CodeParameters) -> BigUint {
    let total = factorial(params.n as u64);
    let vol = sphere_volume(params.n as u64, params.d as i64 - 1);
    div_ceil(&total, &vol)
}

/// floor(n! / V(n, floor((d-1)/2))): the sphere-packing upper bound.
pub fn sphere_packing_upper(params: &CodeParameters) -> BigUint {
    let total = factorial(params.n as u64);
    let radius = (params.d as i64 - 1).div_euclid(2);
    total / sphere_volume(params.n as u64, radius)
}

/// ceil(|V| / (max_degree + 1)): the folklore independence bound for any
/// graph; on the distance graph it recovers the GV bound exactly.
pub fn folklore_lower(vertex_count: &BigUint, max_degree: &BigUint) -> BigUint {
    div_ceil(vertex_count, &(max_degree + 1u32))
}

/// The degree proxy used by the edge-counting chain: the sphere sum taken up
/// to distance d rather than d-1, i.e. V(n, d) - 1.
pub fn paper_delta(params: &CodeParameters) -> BigUint {
    sphere_volume(params.n as u64, params.d as i64) - 1u32
}

/// The exact common degree of the distance graph: V(n, d-1) - 1.
pub fn true_max_degree(params: &CodeParameters) -> BigUint {
    sphere_volume(params.n as u64, params.d as i64 - 1) - 1u32
}

/// The profile product
/// g(s,t,m,r) = C(n,s) D_s C(s,m) C(m,r) C(n-s, t-m) (t-r)!,
/// the number of ordered endpoint pairs compatible with the profile
/// (an overcount by design).
pub fn g(params: &CodeParameters, profile: &EdgeProfile) -> Result<BigUint, BoundsError> {
    profile.validate(params)?;
    let n = params.n as u64;
    let EdgeProfile { s, t, m, r } = *profile;
    let (s, t, m, r) = (s as u64, t as u64, m as u64, r as u64);
    Ok(binomial(n, s as i64)
        * derangements(s)
        * binomial(s, m as i64)
        * binomial(m, r as i64)
        * binomial(n - s, t as i64 - m as i64)
        * factorial(t - r))
}

fn g_from_table(table: &CombTable, n: u64, s: u64, t: u64, m: u64, r: u64) -> BigUint {
    table.choose(n, s as i64)
        * table.der(s)
        * table.choose(s, m as i64)
        * table.choose(m, r as i64)
        * table.choose(n - s, t as i64 - m as i64)
        * table.fact(t - r)
}

/// Sum, maximum, and lexicographically-smallest argmax of g over all valid
/// profiles, collected in one pass.
struct ProfileScan {
    sum: BigUint,
    max: BigUint,
    argmax: EdgeProfile,
}

impl ProfileScan {
    fn merge(self, other: ProfileScan) -> ProfileScan {
        let (max, argmax) = match self.max.cmp(&other.max) {
            std::cmp::Ordering::Greater => (self.max, self.argmax),
            std::cmp::Ordering::Less => (other.max, other.argmax),
            std::cmp::Ordering::Equal => {
                // Ties resolve to the lexicographically smaller profile, so
                // the merge order (and hence the worker count) cannot matter.
                if self.argmax <= other.argmax {
                    (self.max, self.argmax)
                } else {
                    (other.max, other.argmax)
                }
            }
        };
        ProfileScan { sum: self.sum + other.sum, max, argmax }
    }
}

/// Scans every valid profile for one value of s.
fn scan_one_s(table: &CombTable, n: u64, d: u32, s: u32) -> ProfileScan {
    let mut sum = BigUint::zero();
    let mut max = BigUint::zero();
    let mut argmax = None;
    for t in 1..=d {
        let (m_lo, m_hi) = m_range(s, t, d);
        for m in m_lo..=m_hi {
            let (r_lo, r_hi) = r_range(s, t, m, d);
            for r in r_lo..=r_hi {
                let value = g_from_table(table, n, s as u64, t as u64, m as u64, r as u64);
                if argmax.is_none() || value > max {
                    max = value.clone();
                    argmax = Some(EdgeProfile::new(s, t, m, r));
                }
                sum += value;
            }
        }
    }
    ProfileScan {
        sum,
        max,
        argmax: argmax.expect("every s has at least one valid profile"),
    }
}

fn profile_scan_seq(params: &CodeParameters) -> ProfileScan {
    let (n, d) = (params.n as u64, params.d);
    let table = CombTable::new(n, d as u64);
    (1..=d)
        .map(|s| scan_one_s(&table, n, d, s))
        .reduce(ProfileScan::merge)
        .expect("d >= 2")
}

#[cfg(feature = "parallel")]
fn profile_scan(params: &CodeParameters) -> ProfileScan {
    let (n, d) = (params.n as u64, params.d);
    let table = CombTable::new(n, d as u64);
    (1..=d)
        .into_par_iter()
        .map(|s| scan_one_s(&table, n, d, s))
        .reduce_with(ProfileScan::merge)
        .expect("d >= 2")
}

#[cfg(not(feature = "parallel"))]
fn profile_scan(params: &CodeParameters) -> ProfileScan {
    profile_scan_seq(params)
}

/// The quadruple-sum upper bound on the number of edges in the neighborhood
/// graph of the identity: sum of g over all valid profiles.
pub fn e_upper_bound(params: &CodeParameters) -> BigUint {
    profile_scan(params).sum
}

/// Sequential twin of [`e_upper_bound`]; bit-identical output.
pub fn e_upper_bound_sequential(params: &CodeParameters) -> BigUint {
    profile_scan_seq(params).sum
}

/// Maximum of g over valid profiles and the lexicographically smallest
/// profile attaining it.
pub fn g_max(params: &CodeParameters) -> (BigUint, EdgeProfile) {
    let scan = profile_scan(params);
    (scan.max, scan.argmax)
}

/// Sequential twin of [`g_max`]; bit-identical output.
pub fn g_max_sequential(params: &CodeParameters) -> (BigUint, EdgeProfile) {
    let scan = profile_scan_seq(params);
    (scan.max, scan.argmax)
}

/// A lower bound on an independence number, or a marker that the evaluated
/// formula carries no information at these arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaBound {
    Value(BigUint),
    Vacuous,
}

impl AlphaBound {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            AlphaBound::Value(v) => Some(v),
            AlphaBound::Vacuous => None,
        }
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, AlphaBound::Vacuous)
    }
}

/// floor(|V| * factor / (divisor * degree)) with `factor` a positive real
/// held in f64. The factor is scaled by 2^63 and the division done on exact
/// integers, so counts of any magnitude stay exact up to the f64 factor's
/// own error (relative ~1e-12, well inside the 1e-9 contract).
fn floor_scaled(vertex_count: &BigUint, factor: f64, degree: &BigUint, divisor: u32) -> BigUint {
    debug_assert!(factor > 0.0 && factor.is_finite());
    const SCALE_BITS: u32 = 63;
    let scaled = (factor * (1u128 << SCALE_BITS) as f64).round() as u128;
    let numerator = vertex_count * BigUint::from(scaled);
    let denominator = (degree * divisor) << SCALE_BITS;
    numerator / denominator
}

/// The triangle-free independence bound: floor(|V| log2(degree) / (8 degree)).
/// Vacuous when the degree is at most 1.
pub fn triangle_free_lower(vertex_count: &BigUint, max_degree: &BigUint) -> AlphaBound {
    if max_degree.is_zero() || max_degree.is_one() {
        return AlphaBound::Vacuous;
    }
    let bits = log2_of_count(max_degree).expect("degree >= 2");
    AlphaBound::Value(floor_scaled(vertex_count, bits, max_degree, 8))
}

/// The locally-sparse independence bound driven by a per-vertex neighborhood
/// edge budget E: floor(|V|/(10 degree) * (ln degree - 0.5 ln(E/3))).
///
/// `E = 0` means every neighborhood is an independent set, i.e. the graph is
/// triangle-free, and the dedicated triangle-free bound applies instead.
/// Vacuous when the parenthetical factor is nonpositive (or the degree is 0,
/// where the folklore bound is the right tool).
pub fn aks_corollary_lower(
    vertex_count: &BigUint,
    max_degree: &BigUint,
    edge_bound: &BigUint,
) -> AlphaBound {
    if max_degree.is_zero() {
        return AlphaBound::Vacuous;
    }
    if edge_bound.is_zero() {
        return triangle_free_lower(vertex_count, max_degree);
    }
    // Vacuous iff ln(degree) <= 0.5 ln(E/3), i.e. 3 degree^2 <= E: decide
    // that on the exact integers so the boundary case is not left to
    // floating-point noise.
    if &(max_degree * max_degree * 3u32) <= edge_bound {
        return AlphaBound::Vacuous;
    }
    let ln_degree = ln_of_count(max_degree).expect("degree >= 1");
    let ln_edges_over_3 = ln_of_count(edge_bound).expect("edges >= 1") - 3f64.ln();
    let parenthetical = ln_degree - 0.5 * ln_edges_over_3;
    if parenthetical <= 0.0 {
        // Mathematically positive but below f64 resolution; 0 is still a
        // valid floor.
        return AlphaBound::Value(BigUint::zero());
    }
    AlphaBound::Value(floor_scaled(vertex_count, parenthetical, max_degree, 10))
}

/// The few-triangles independence bound:
/// floor(|V|/(10 degree) * (ln degree - 0.5 ln(T/|V|))), with T = 0 handled
/// by the triangle-free bound.
pub fn triangle_lemma_lower(
    vertex_count: &BigUint,
    max_degree: &BigUint,
    triangle_count: &BigUint,
) -> AlphaBound {
    if max_degree.is_zero() {
        return AlphaBound::Vacuous;
    }
    if triangle_count.is_zero() {
        return triangle_free_lower(vertex_count, max_degree);
    }
    // Vacuous iff degree^2 |V| <= T, decided exactly as in the edge variant.
    if &(max_degree * max_degree * vertex_count) <= triangle_count {
        return AlphaBound::Vacuous;
    }
    let ln_degree = ln_of_count(max_degree).expect("degree >= 1");
    let ln_t_over_v =
        ln_of_count(triangle_count).expect("T >= 1") - ln_of_count(vertex_count).expect("|V| >= 1");
    let parenthetical = ln_degree - 0.5 * ln_t_over_v;
    if parenthetical <= 0.0 {
        return AlphaBound::Value(BigUint::zero());
    }
    AlphaBound::Value(floor_scaled(vertex_count, parenthetical, max_degree, 10))
}

/// log2(Delta^2 / E) with Delta the distance-d degree proxy and E the
/// quadruple-sum edge bound. Negative values at small n are expected.
pub fn log_ratio(params: &CodeParameters) -> f64 {
    let delta = paper_delta(params);
    let e = e_upper_bound(params);
    log_ratio_from_parts(&delta, &e)
}

fn log_ratio_from_parts(delta: &BigUint, e: &BigUint) -> f64 {
    2.0 * log2_of_count(delta).expect("delta >= 1") - log2_of_count(e).expect("E >= 1")
}

/// Margin check report: how close the worst profile comes to the entropy
/// slack 3n h2(3 eps), minimized over all valid profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma7Report {
    pub params: CodeParameters,
    pub epsilon: f64,
    pub min_margin: f64,
    pub argmin_profile: EdgeProfile,
    pub violated: bool,
}

fn entropy_slack(params: &CodeParameters, epsilon: f64) -> Result<f64, BoundsError> {
    if !(epsilon > 0.0 && epsilon < 1.0 / 6.0) {
        return Err(BoundsError::EpsilonOutOfRange(epsilon));
    }
    let h = binary_entropy(3.0 * epsilon).expect("3 eps < 1/2");
    Ok(3.0 * params.n as f64 * h)
}

/// Margin of one profile: log2(g(d,d,d,0) / g(profile)) + 3n h2(3 eps).
/// Profiles whose g vanishes constrain nothing and report +infinity.
pub fn lemma7_margin(
    params: &CodeParameters,
    profile: &EdgeProfile,
    epsilon: f64,
) -> Result<f64, BoundsError> {
    let slack = entropy_slack(params, epsilon)?;
    let value = g(params, profile)?;
    if value.is_zero() {
        return Ok(f64::INFINITY);
    }
    let reference = g(params, &reference_profile(params))?;
    Ok(log2_of_count(&reference).expect(">= 1") - log2_of_count(&value).expect(">= 1") + slack)
}

fn reference_profile(params: &CodeParameters) -> EdgeProfile {
    EdgeProfile::new(params.d, params.d, params.d, 0)
}

struct MarginScan {
    min_margin: f64,
    argmin: EdgeProfile,
}

impl MarginScan {
    fn merge(self, other: MarginScan) -> MarginScan {
        // Total order on (margin, profile); ties on the float resolve by
        // profile so the reduction is merge-order independent.
        if (self.min_margin, self.argmin) <= (other.min_margin, other.argmin) {
            self
        } else {
            other
        }
    }
}

fn margin_scan_one_s(
    table: &CombTable,
    n: u64,
    d: u32,
    s: u32,
    reference_log2: f64,
    slack: f64,
) -> Option<MarginScan> {
    let mut best: Option<MarginScan> = None;
    for t in 1..=d {
        let (m_lo, m_hi) = m_range(s, t, d);
        for m in m_lo..=m_hi {
            let (r_lo, r_hi) = r_range(s, t, m, d);
            for r in r_lo..=r_hi {
                let value = g_from_table(table, n, s as u64, t as u64, m as u64, r as u64);
                if value.is_zero() {
                    continue;
                }
                let margin = reference_log2 - log2_of_count(&value).expect(">= 1") + slack;
                let candidate = MarginScan { min_margin: margin, argmin: EdgeProfile::new(s, t, m, r) };
                best = Some(match best {
                    None => candidate,
                    Some(current) => current.merge(candidate),
                });
            }
        }
    }
    best
}

fn lemma7_scan_seq(params: &CodeParameters, slack: f64) -> MarginScan {
    let (n, d) = (params.n as u64, params.d);
    let table = CombTable::new(n, d as u64);
    let reference = g_from_table(&table, n, d as u64, d as u64, d as u64, 0);
    let reference_log2 = log2_of_count(&reference).expect("reference profile count is positive");
    (1..=d)
        .filter_map(|s| margin_scan_one_s(&table, n, d, s, reference_log2, slack))
        .reduce(MarginScan::merge)
        .expect("reference profile always scans")
}

#[cfg(feature = "parallel")]
fn lemma7_scan(params: &CodeParameters, slack: f64) -> MarginScan {
    let (n, d) = (params.n as u64, params.d);
    let table = CombTable::new(n, d as u64);
    let reference = g_from_table(&table, n, d as u64, d as u64, d as u64, 0);
    let reference_log2 = log2_of_count(&reference).expect("reference profile count is positive");
    (1..=d)
        .into_par_iter()
        .filter_map(|s| margin_scan_one_s(&table, n, d, s, reference_log2, slack))
        .reduce_with(MarginScan::merge)
        .expect("reference profile always scans")
}

#[cfg(not(feature = "parallel"))]
fn lemma7_scan(params: &CodeParameters, slack: f64) -> MarginScan {
    lemma7_scan_seq(params, slack)
}

/// Scans all valid profiles for the minimum margin
/// log2(g(d,d,d,0)/g(s,t,m,r)) + 3n h2(3 eps).
///
/// This is a finite-n diagnostic: the inequality is only claimed for all
/// sufficiently large n, so `violated = true` at small n is legal output,
/// not an error.
pub fn lemma7_check(params: &CodeParameters, epsilon: f64) -> Result<Lemma7Report, BoundsError> {
    let slack = entropy_slack(params, epsilon)?;
    let scan = lemma7_scan(params, slack);
    Ok(Lemma7Report {
        params: *params,
        epsilon,
        min_margin: scan.min_margin,
        argmin_profile: scan.argmin,
        violated: scan.min_margin < 0.0,
    })
}

/// Sequential twin of [`lemma7_check`]; bit-identical output.
pub fn lemma7_check_sequential(
    params: &CodeParameters,
    epsilon: f64,
) -> Result<Lemma7Report, BoundsError> {
    let slack = entropy_slack(params, epsilon)?;
    let scan = lemma7_scan_seq(params, slack);
    Ok(Lemma7Report {
        params: *params,
        epsilon,
        min_margin: scan.min_margin,
        argmin_profile: scan.argmin,
        violated: scan.min_margin < 0.0,
    })
}

/// How much the locally-sparse chain improves on Gilbert-Varshamov:
/// the sparse bound (fed with the distance-d degree proxy) over gv_lower.
/// `None` when the sparse bound is vacuous.
pub fn improvement_ratio(params: &CodeParameters) -> Option<f64> {
    let vertices = factorial(params.n as u64);
    let delta = paper_delta(params);
    let e = e_upper_bound(params);
    match aks_corollary_lower(&vertices, &delta, &e) {
        AlphaBound::Vacuous => None,
        AlphaBound::Value(v) => Some(ratio_of_counts(&v, &gv_lower(params))),
    }
}

fn ratio_of_counts(numerator: &BigUint, denominator: &BigUint) -> f64 {
    if numerator.is_zero() {
        return 0.0;
    }
    let diff = log2_of_count(numerator).expect(">= 1") - log2_of_count(denominator).expect(">= 1");
    diff.exp2()
}

/// Everything this module can say about one (n, d), with both degree
/// variants of the locally-sparse bound reported side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub params: CodeParameters,
    pub gv_lower: BigUint,
    pub sphere_packing_upper: BigUint,
    /// Degree proxy summed up to distance d (V(n,d) - 1).
    pub paper_delta: BigUint,
    /// Exact common degree of the distance graph (V(n,d-1) - 1).
    pub true_max_degree: BigUint,
    pub e_upper: BigUint,
    pub g_max: BigUint,
    pub g_argmax: EdgeProfile,
    /// Locally-sparse bound fed with `paper_delta`.
    pub aks_lower_paper_delta: AlphaBound,
    /// Locally-sparse bound fed with `true_max_degree`.
    pub aks_lower_true_degree: AlphaBound,
    pub log_ratio: f64,
    /// `None` marks the vacuous case.
    pub improvement_ratio: Option<f64>,
}

/// Computes the full report, sharing one profile scan across the fields.
pub fn bound_report(params: &CodeParameters) -> BoundReport {
    let vertices = factorial(params.n as u64);
    let gv = gv_lower(params);
    let sp = sphere_packing_upper(params);
    let delta = paper_delta(params);
    let degree = true_max_degree(params);
    let scan = profile_scan(params);
    let aks_paper = aks_corollary_lower(&vertices, &delta, &scan.sum);
    let aks_true = aks_corollary_lower(&vertices, &degree, &scan.sum);
    let log_ratio = log_ratio_from_parts(&delta, &scan.sum);
    let improvement = match &aks_paper {
        AlphaBound::Vacuous => None,
        AlphaBound::Value(v) => Some(ratio_of_counts(v, &gv)),
    };
    BoundReport {
        params: *params,
        gv_lower: gv,
        sphere_packing_upper: sp,
        paper_delta: delta,
        true_max_degree: degree,
        e_upper: scan.sum,
        g_max: scan.max,
        g_argmax: scan.argmax,
        aks_lower_paper_delta: aks_paper,
        aks_lower_true_degree: aks_true,
        log_ratio,
        improvement_ratio: improvement,
    }
}

fn div_ceil(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}

// ------------------------------------------------------------------------
