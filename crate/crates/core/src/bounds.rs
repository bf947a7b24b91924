//! Spectral upper bounds on conditional excess, degree diameter and
//! conditional Wiener index, each checked against the exact oracle value.

use serde::{Deserialize, Serialize};

use crate::altpoly::{values_at_one, Mesh};
use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::oracles::ExactInvariants;
use crate::scalar::Real;
use crate::spectral::degree_adjacency_spectrum;

/// Added before flooring so that solver noise cannot push an integral bound
/// one unit down.
pub const FLOOR_GUARD: f64 = 1e-9;

/// Relative margin a value must clear above a strict threshold.
pub const THRESHOLD_MARGIN: f64 = 1e-9;

/// Largest order [`verify_all`] accepts.
pub const MAX_VERIFY_ORDER: usize = 64;

/// Largest degree threshold enumerated by [`verify_all`].
pub const MAX_VERIFY_DEGREE: usize = 12;

fn guarded_floor(x: f64) -> u64 {
    (x + FLOOR_GUARD).floor().max(0.0) as u64
}

/// `floor( 2m(2m - d_u) / (beta [d_u P_k(1)^2 + 2m - d_u]) )`.
pub fn excess_bound<T: Real>(m: usize, deg_u: usize, pk_at_1: T, beta: usize) -> Result<u64> {
    if beta < 1 {
        return domain("excess bound needs beta >= 1");
    }
    let two_m = (2 * m) as f64;
    let d = deg_u as f64;
    let p = pk_at_1.to_f64_lossy();
    let value = two_m * (two_m - d) / (beta as f64 * (d * p * p + two_m - d));
    Ok(guarded_floor(value))
}

/// `floor( n(n-1) / (P_k(1)^2 + n - 1) )` for a regular graph.
pub fn excess_bound_regular<T: Real>(g: &Graph, pk_at_1: T) -> Result<u64> {
    if !g.is_regular() {
        return domain("the regular excess bound needs a regular graph");
    }
    Ok(regular_excess_value(g.order(), pk_at_1.to_f64_lossy()))
}

fn regular_excess_value(n: usize, p: f64) -> u64 {
    let nf = n as f64;
    guarded_floor(nf * (nf - 1.0) / (p * p + nf - 1.0))
}

/// `sqrt((2m/alpha - 1)(2m/beta - 1))`.
pub fn degree_diameter_threshold(m: usize, alpha: usize, beta: usize) -> f64 {
    let two_m = (2 * m) as f64;
    ((two_m / alpha as f64 - 1.0) * (two_m / beta as f64 - 1.0)).sqrt()
}

/// Strict `value > threshold`, requiring a relative margin of
/// [`THRESHOLD_MARGIN`] so a value equal to the threshold up to solver noise
/// never passes.
pub fn passes_threshold(value: f64, threshold: f64) -> bool {
    value > threshold + THRESHOLD_MARGIN * threshold.abs().max(1.0)
}

fn first_passing<T: Real>(values: &[T], threshold: f64) -> Option<usize> {
    values.iter().position(|v| passes_threshold(v.to_f64_lossy(), threshold))
}

/// Smallest `k` with `P_k(1) > sqrt((2m/alpha - 1)(2m/beta - 1))`; when it
/// exists, `D^(alpha,beta) <= k`.
pub fn degree_diameter_bound<T: Real>(m: usize, values: &[T], alpha: usize, beta: usize) -> Option<usize> {
    first_passing(values, degree_diameter_threshold(m, alpha, beta))
}

/// Smallest `k` with `P_k(1) > 2m/beta - 1`, bounding `D^(beta,beta)`.
pub fn beta_diameter_bound<T: Real>(m: usize, values: &[T], beta: usize) -> Option<usize> {
    first_passing(values, (2 * m) as f64 / beta as f64 - 1.0)
}

/// Smallest `k` with `P_k(1) > 2m/delta - 1`, bounding the diameter.
pub fn diameter_bound<T: Real>(g: &Graph, values: &[T]) -> Option<usize> {
    beta_diameter_bound(g.size(), values, g.degree_profile().delta_min)
}

/// Smallest `k` with `P_k(1) > n - 1`, bounding the diameter of a regular graph.
pub fn diameter_bound_regular<T: Real>(g: &Graph, values: &[T]) -> Result<Option<usize>> {
    if !g.is_regular() {
        return domain("the regular diameter bound needs a regular graph");
    }
    Ok(first_passing(values, g.order() as f64 - 1.0))
}

/// `(x/2) sum_{l<k} floor( 2m(2m - beta) / (beta (beta P_l(1)^2 + 2m - beta)) )`
/// at the smallest `k` with `P_k(1) > 2m/beta - 1`; `None` when no `k` passes.
pub fn conditional_wiener_bound<T: Real>(m: usize, x: usize, values: &[T], beta: usize) -> Option<f64> {
    let k = beta_diameter_bound(m, values, beta)?;
    let two_m = (2 * m) as f64;
    let b = beta as f64;
    let sum: u64 = values[..k]
        .iter()
        .map(|p| {
            let p = p.to_f64_lossy();
            guarded_floor(two_m * (two_m - b) / (b * (b * p * p + two_m - b)))
        })
        .sum();
    Some(x as f64 / 2.0 * sum as f64)
}

/// `(n/2) sum_{l<k} floor( n(n-1) / (P_l(1)^2 + n - 1) )` at the smallest `k`
/// with `P_k(1) > n - 1`, for a regular graph.
pub fn wiener_bound_regular<T: Real>(g: &Graph, values: &[T]) -> Result<Option<f64>> {
    let Some(k) = diameter_bound_regular(g, values)? else {
        return Ok(None);
    };
    let n = g.order();
    let sum: u64 = values[..k].iter().map(|p| regular_excess_value(n, p.to_f64_lossy())).sum();
    Ok(Some(n as f64 / 2.0 * sum as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `e_k^beta(u)` from `P_k(1)`, `m` and `deg(u)`.
    ConditionalExcess,
    /// `e_k` of a regular graph.
    RegularExcess,
    /// `D^(alpha,beta)`.
    DegreeDiameter,
    /// `D(G)` via `P_k(1) > 2m/delta - 1`.
    Diameter,
    /// `D(G)` of a regular graph via `P_k(1) > n - 1`.
    RegularDiameter,
    /// `W_beta`.
    ConditionalWiener,
    /// `W` of a regular graph.
    RegularWiener,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub vertex: Option<usize>,
    pub k: Option<usize>,
    pub alpha: Option<usize>,
    pub beta: Option<usize>,
}

/// A bound compared with the oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundKind,
    pub params: BoundParams,
    /// `None` when the bound draws no conclusion (see `not_applicable`).
    pub bound_value: Option<f64>,
    pub exact_value: u64,
    /// Count of vertices with degree `>= beta`, for the Wiener bounds.
    pub qualifying_vertices: Option<usize>,
    pub sound: bool,
    pub tight: bool,
    pub not_applicable: Option<String>,
}

impl BoundReport {
    fn compare(bound: BoundKind, params: BoundParams, value: f64, exact: u64) -> Self {
        Self {
            bound,
            params,
            bound_value: Some(value),
            exact_value: exact,
            qualifying_vertices: None,
            sound: exact as f64 <= value,
            tight: exact as f64 == value,
            not_applicable: None,
        }
    }

    fn compare_optional(bound: BoundKind, params: BoundParams, value: Option<f64>, exact: u64) -> Self {
        match value {
            Some(v) => Self::compare(bound, params, v, exact),
            None => Self {
                bound,
                params,
                bound_value: None,
                exact_value: exact,
                qualifying_vertices: None,
                sound: true,
                tight: false,
                not_applicable: Some("no k in the mesh range passes the threshold".into()),
            },
        }
    }
}

/// Cached spectral and exact data for one graph.
#[derive(Debug, Clone)]
pub struct BoundContext<T> {
    pub graph: Graph,
    pub mesh: Mesh<T>,
    /// `P_k(1)` for `k = 0..b`.
    pub values: Vec<T>,
    pub exact: ExactInvariants,
}

impl<T: Real> BoundContext<T> {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_no_isolated()?;
        let exact = ExactInvariants::new(g)?;
        let mesh = Mesh::from_spectrum(&degree_adjacency_spectrum(g)?)?;
        let values = values_at_one(&mesh)?;
        Ok(Self { graph: g.clone(), mesh, values, exact })
    }

    fn degree_range(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.graph.degree_profile().delta_max.min(MAX_VERIFY_DEGREE)
    }

    /// Conditional-excess reports over every `(u, k, beta)`, in that order.
    pub fn excess_reports(&self) -> Result<Vec<BoundReport>> {
        let m = self.graph.size();
        let mut out = Vec::new();
        for u in 0..self.graph.order() {
            for (k, &p) in self.values.iter().enumerate() {
                for beta in self.degree_range() {
                    let bound = excess_bound(m, self.graph.degree(u), p, beta)?;
                    let exact = self.exact.conditional_excess(u, k, beta) as u64;
                    let params = BoundParams { vertex: Some(u), k: Some(k), beta: Some(beta), alpha: None };
                    out.push(BoundReport::compare(BoundKind::ConditionalExcess, params, bound as f64, exact));
                }
            }
        }
        Ok(out)
    }

    pub fn degree_diameter_reports(&self) -> Vec<BoundReport> {
        let m = self.graph.size();
        let mut out = Vec::new();
        for alpha in self.degree_range() {
            for beta in self.degree_range() {
                let exact =
                    self.exact.degree_diameter(alpha, beta).expect("thresholds up to the max degree always qualify");
                let bound = degree_diameter_bound(m, &self.values, alpha, beta).map(|k| k as f64);
                let params = BoundParams { alpha: Some(alpha), beta: Some(beta), ..Default::default() };
                out.push(BoundReport::compare_optional(BoundKind::DegreeDiameter, params, bound, exact as u64));
            }
        }
        let bound = diameter_bound(&self.graph, &self.values).map(|k| k as f64);
        let delta = self.graph.degree_profile().delta_min;
        let params = BoundParams { beta: Some(delta), ..Default::default() };
        out.push(BoundReport::compare_optional(BoundKind::Diameter, params, bound, self.exact.diameter as u64));
        out
    }

    pub fn wiener_reports(&self) -> Vec<BoundReport> {
        let m = self.graph.size();
        self.degree_range()
            .map(|beta| {
                let x = self.exact.qualifying_count(beta);
                let bound = conditional_wiener_bound(m, x, &self.values, beta);
                let exact = self.exact.conditional_wiener(beta);
                let params = BoundParams { beta: Some(beta), ..Default::default() };
                let mut r = BoundReport::compare_optional(BoundKind::ConditionalWiener, params, bound, exact);
                r.qualifying_vertices = Some(x);
                r
            })
            .collect()
    }

    /// Bounds specific to regular graphs; empty for non-regular input.
    pub fn regular_reports(&self) -> Result<Vec<BoundReport>> {
        let g = &self.graph;
        if !g.is_regular() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (k, &p) in self.values.iter().enumerate() {
            let bound = excess_bound_regular(g, p)?;
            let exact = self.exact.graph_excess(k) as u64;
            let params = BoundParams { k: Some(k), ..Default::default() };
            out.push(BoundReport::compare(BoundKind::RegularExcess, params, bound as f64, exact));
        }
        let d = diameter_bound_regular(g, &self.values)?.map(|k| k as f64);
        out.push(BoundReport::compare_optional(
            BoundKind::RegularDiameter,
            BoundParams::default(),
            d,
            self.exact.diameter as u64,
        ));
        let w = wiener_bound_regular(g, &self.values)?;
        let mut r =
            BoundReport::compare_optional(BoundKind::RegularWiener, BoundParams::default(), w, self.exact.wiener);
        r.qualifying_vertices = Some(g.order());
        out.push(r);
        Ok(out)
    }

    pub fn all_reports(&self) -> Result<Vec<BoundReport>> {
        let mut out = self.excess_reports()?;
        out.extend(self.degree_diameter_reports());
        out.extend(self.wiener_reports());
        out.extend(self.regular_reports()?);
        Ok(out)
    }
}

/// Every bound report for `g`, in deterministic order: conditional excess by
/// `(u, k, beta)`, degree diameter by `(alpha, beta)` then the plain
/// diameter, conditional Wiener by `beta`, then the regular-graph bounds.
pub fn verify_all<T: Real>(g: &Graph) -> Result<Vec<BoundReport>> {
    if g.order() > MAX_VERIFY_ORDER {
        return domain(format!("verification grid supports n <= {MAX_VERIFY_ORDER}, got {}", g.order()));
    }
    BoundContext::<T>::new(g)?.all_reports()
}
