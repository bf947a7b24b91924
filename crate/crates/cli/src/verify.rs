//! The `verify` subcommand: full invariant suite plus every bound.

use std::fmt::Write as _;

use anyhow::{bail, Context};
use degspec::suite::{run_suite, CheckOutcome};
use degspec::{random_connected_graphs, BoundKind, BoundReport, Family, Graph};
use serde::Serialize;

use crate::report::bound_row;

pub const FAMILY_NAMES: [&str; 6] = ["path", "cycle", "star", "complete", "complete_bipartite", "c4_pendant"];

/// Instances of a named family whose orders lie in `orders`.
/// `complete_bipartite` enumerates `K_{p,s-p}` for `p <= s/2`; `c4_pendant`
/// has a single member.
pub fn family_members(name: &str, orders: std::ops::RangeInclusive<usize>) -> anyhow::Result<Vec<Family>> {
    let out: Vec<Family> = match name {
        "path" => orders.map(Family::Path).collect(),
        "cycle" => orders.map(Family::Cycle).collect(),
        "star" => orders.map(Family::Star).collect(),
        "complete" => orders.map(Family::Complete).collect(),
        "complete_bipartite" => {
            orders.flat_map(|s| (1..=s / 2).map(move |p| Family::CompleteBipartite(p, s - p))).collect()
        }
        "c4_pendant" => vec![Family::C4Pendant],
        other => bail!("unknown family {other:?}; expected one of {}", FAMILY_NAMES.join(", ")),
    };
    if out.is_empty() {
        bail!("the size range selects no {name} graphs");
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct GraphVerdict {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub checks: usize,
    pub bound_reports: usize,
    /// Per-family equality assertions, listed whether or not they pass.
    pub fixture_checks: Vec<CheckOutcome>,
    pub failed_checks: Vec<CheckOutcome>,
    pub unsound_bounds: Vec<BoundReport>,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: usize,
    pub bound_reports: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub results: Vec<GraphVerdict>,
    pub summary: VerifySummary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Equalities the pendant example must attain at the degree-1 vertex:
/// `(k, beta=2)` gives bounds 4, 3, 1.
fn pendant_equalities(bounds: &[BoundReport]) -> Vec<CheckOutcome> {
    [(0, 4.0), (1, 3.0), (2, 1.0)]
        .into_iter()
        .map(|(k, want)| {
            let r = bounds.iter().find(|r| {
                r.bound == BoundKind::ConditionalExcess
                    && r.params.vertex == Some(4)
                    && r.params.k == Some(k)
                    && r.params.beta == Some(2)
            });
            let passed = r.is_some_and(|r| r.tight && r.bound_value == Some(want));
            CheckOutcome {
                name: format!("pendant_excess_equality:k={k},beta=2"),
                passed,
                detail: r.map_or("missing report".into(), |r| {
                    format!("bound {:?}, exact {}, expected {want}", r.bound_value, r.exact_value)
                }),
            }
        })
        .collect()
}

pub fn verify_graph(label: String, g: &Graph, pendant: bool) -> anyhow::Result<GraphVerdict> {
    let mut result = run_suite(g).with_context(|| format!("{label}: cannot run the suite"))?;
    let fixture_checks = if pendant { pendant_equalities(&result.bounds) } else { Vec::new() };
    result.checks.extend(fixture_checks.iter().cloned());
    let failed_checks: Vec<CheckOutcome> = result.failures().cloned().collect();
    let unsound_bounds: Vec<BoundReport> = result.unsound().cloned().collect();
    Ok(GraphVerdict {
        graph: label,
        n: g.order(),
        m: g.size(),
        checks: result.checks.len(),
        bound_reports: result.bounds.len(),
        passed: failed_checks.is_empty() && unsound_bounds.is_empty(),
        fixture_checks,
        failed_checks,
        unsound_bounds,
    })
}

pub fn verify_families(members: &[Family]) -> anyhow::Result<VerifyReport> {
    let mut results = Vec::new();
    for &f in members {
        let g = f.build()?;
        results.push(verify_graph(f.to_string(), &g, f == Family::C4Pendant)?);
    }
    Ok(collect(results))
}

pub fn verify_random(seed: u64, orders: std::ops::RangeInclusive<usize>, count: usize) -> anyhow::Result<VerifyReport> {
    let graphs = random_connected_graphs(seed, orders, count)?;
    let mut results = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        results.push(verify_graph(format!("random(seed={seed},#{i},n={})", g.order()), g, false)?);
    }
    Ok(collect(results))
}

fn collect(results: Vec<GraphVerdict>) -> VerifyReport {
    let passed = results.iter().filter(|r| r.passed).count();
    let summary = VerifySummary {
        graphs: results.len(),
        passed,
        failed: results.len() - passed,
        checks: results.iter().map(|r| r.checks).sum(),
        bound_reports: results.iter().map(|r| r.bound_reports).sum(),
    };
    VerifyReport { results, summary }
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    for v in &r.results {
        let _ = writeln!(
            out,
            "{} {} (n={}, m={}): {} checks, {} bound reports",
            if v.passed { "PASS" } else { "FAIL" },
            v.graph,
            v.n,
            v.m,
            v.checks,
            v.bound_reports
        );
        for c in v.fixture_checks.iter().filter(|c| c.passed) {
            let _ = writeln!(out, "  holds {}: {}", c.name, c.detail);
        }
        for c in &v.failed_checks {
            let _ = writeln!(out, "  failed check {}: {}", c.name, c.detail);
        }
        for b in &v.unsound_bounds {
            let _ = writeln!(out, "  unsound {}", bound_row(b));
        }
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "{} graphs: {} passed, {} failed ({} checks, {} bound reports)",
        s.graphs, s.passed, s.failed, s.checks, s.bound_reports
    );
    out
}
