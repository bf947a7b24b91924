//! Per-graph analysis report.

use std::fmt::Write as _;

use degspec::{
    bounds::BoundContext, char_poly_from_spectrum, degree_adjacency_spectrum, randic_bounds, standard_eigenvalues,
    structural_coefficients, weight_regular, AlternatingPolynomial, BoundReport, Graph, RandicReport,
    StructuralCoefficients,
};
use serde::Serialize;

use crate::output::{list, num};

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Smallest degree above 1.
    pub delta_star: Option<usize>,
    pub regular: bool,
    pub bipartite: bool,
    pub components: usize,
    /// Common edge weight `1/sqrt(d_i d_j)` of a weight-regular graph.
    pub weight_regular: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Spectra {
    pub degree_adjacency: Vec<f64>,
    pub standard: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct CharPoly {
    /// `c_1..c_n` from the degree-adjacency spectrum.
    pub spectral: Vec<f64>,
    pub structural: StructuralCoefficients<f64>,
}

#[derive(Debug, Serialize)]
pub struct PolynomialRow {
    pub k: usize,
    pub value_at_1: f64,
    pub sup_norm_on_mesh: f64,
    pub coefficients: Vec<f64>,
}

impl From<AlternatingPolynomial<f64>> for PolynomialRow {
    fn from(p: AlternatingPolynomial<f64>) -> Self {
        Self { k: p.k, value_at_1: p.value_at_1, sup_norm_on_mesh: p.sup_norm_on_mesh, coefficients: p.coefficients }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundSummary {
    pub reports: usize,
    pub unsound: usize,
    pub tight: usize,
    pub not_applicable: usize,
}

impl BoundSummary {
    pub fn of(reports: &[BoundReport]) -> Self {
        Self {
            reports: reports.len(),
            unsound: reports.iter().filter(|r| !r.sound).count(),
            tight: reports.iter().filter(|r| r.tight).count(),
            not_applicable: reports.iter().filter(|r| r.not_applicable.is_some()).count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub spectra: Spectra,
    pub char_poly: CharPoly,
    pub randic: RandicReport,
    /// Absent for disconnected graphs.
    pub mesh: Option<Vec<f64>>,
    pub alternating_polynomials: Option<Vec<PolynomialRow>>,
    pub bound_summary: Option<BoundSummary>,
    pub bounds: Option<Vec<BoundReport>>,
    pub notes: Vec<String>,
}

pub fn summarize(g: &Graph) -> degspec::Result<GraphSummary> {
    let p = g.degree_profile();
    Ok(GraphSummary {
        n: g.order(),
        m: g.size(),
        min_degree: p.delta_min,
        max_degree: p.delta_max,
        delta_star: p.delta_star,
        regular: g.is_regular(),
        bipartite: g.is_bipartite(),
        components: g.connected_components().len(),
        weight_regular: if g.size() == 0 { None } else { weight_regular::<f64>(g)? },
    })
}

pub fn spectra(g: &Graph) -> degspec::Result<Spectra> {
    Ok(Spectra {
        degree_adjacency: degree_adjacency_spectrum::<f64>(g)?.values,
        standard: standard_eigenvalues::<f64>(g)?.values,
    })
}

pub fn analyze(g: &Graph) -> degspec::Result<AnalysisReport> {
    let graph = summarize(g)?;
    let ds = degree_adjacency_spectrum::<f64>(g)?;
    let ss = standard_eigenvalues::<f64>(g)?;
    let structural = structural_coefficients::<f64>(g)?;
    let randic = randic_bounds(g, &ds, &ss, &structural)?;
    let char_poly = CharPoly { spectral: char_poly_from_spectrum(&ds).c, structural };

    let mut notes = Vec::new();
    let (mesh, alternating_polynomials, bound_summary, bounds) = if g.is_connected() {
        let ctx = BoundContext::<f64>::new(g)?;
        let polys = (0..ctx.mesh.len())
            .map(|k| degspec::alternating_polynomial_lp(&ctx.mesh, k).map(PolynomialRow::from))
            .collect::<degspec::Result<Vec<_>>>()?;
        if g.degree_profile().delta_max > degspec::bounds::MAX_VERIFY_DEGREE {
            notes.push(format!("degree thresholds alpha, beta capped at {}", degspec::bounds::MAX_VERIFY_DEGREE));
        }
        let reports = ctx.all_reports()?;
        (Some(ctx.mesh.points().to_vec()), Some(polys), Some(BoundSummary::of(&reports)), Some(reports))
    } else {
        notes.push(format!(
            "graph has {} components; mesh, polynomials and distance bounds need a connected graph",
            graph.components
        ));
        (None, None, None, None)
    };
    Ok(AnalysisReport {
        graph,
        spectra: Spectra { degree_adjacency: ds.values, standard: ss.values },
        char_poly,
        randic,
        mesh,
        alternating_polynomials,
        bound_summary,
        bounds,
        notes,
    })
}

pub fn summary_text(out: &mut String, s: &GraphSummary) {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let _ = writeln!(out, "graph");
    let _ = writeln!(out, "  n = {}, m = {}, components = {}", s.n, s.m, s.components);
    let _ = writeln!(
        out,
        "  min degree = {}, max degree = {}, smallest degree > 1 = {}",
        s.min_degree,
        s.max_degree,
        opt(s.delta_star)
    );
    let _ = writeln!(
        out,
        "  regular = {}, bipartite = {}, weight-regular = {}",
        s.regular,
        s.bipartite,
        s.weight_regular.map_or("no".to_string(), |w| format!("yes (weight {})", num(w)))
    );
}

pub fn spectra_text(out: &mut String, s: &Spectra) {
    let _ = writeln!(out, "spectra");
    let _ = writeln!(out, "  degree-adjacency: {}", list(&s.degree_adjacency));
    let _ = writeln!(out, "  standard:         {}", list(&s.standard));
}

pub fn polynomials_text(out: &mut String, rows: &[PolynomialRow]) {
    let _ = writeln!(out, "  {:>3}  {:>16}  {:>10}  coefficients (ascending)", "k", "P_k(1)", "sup norm");
    for r in rows {
        let _ = writeln!(
            out,
            "  {:>3}  {:>16}  {:>10}  {}",
            r.k,
            num(r.value_at_1),
            num(r.sup_norm_on_mesh),
            list(&r.coefficients)
        );
    }
}

pub fn bound_row(r: &BoundReport) -> String {
    let p = &r.params;
    let mut params = Vec::new();
    for (label, v) in [("u", p.vertex), ("k", p.k), ("alpha", p.alpha), ("beta", p.beta)] {
        if let Some(v) = v {
            params.push(format!("{label}={v}"));
        }
    }
    let verdict = match (r.sound, r.tight, &r.not_applicable) {
        (_, _, Some(why)) => format!("no conclusion ({why})"),
        (false, _, _) => "UNSOUND".to_string(),
        (true, true, _) => "tight".to_string(),
        (true, false, _) => "sound".to_string(),
    };
    format!(
        "{:<20} {:<28} bound {:>8}  exact {:>6}  {verdict}",
        format!("{:?}", r.bound),
        params.join(" "),
        r.bound_value.map_or("-".to_string(), num),
        r.exact_value
    )
}

pub fn bounds_text(out: &mut String, reports: &[BoundReport]) {
    let s = BoundSummary::of(reports);
    let _ = writeln!(
        out,
        "  {} reports: {} unsound, {} tight, {} without conclusion",
        s.reports, s.unsound, s.tight, s.not_applicable
    );
    for r in reports {
        let _ = writeln!(out, "  {}", bound_row(r));
    }
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    summary_text(&mut out, &r.graph);
    spectra_text(&mut out, &r.spectra);
    let _ = writeln!(out, "characteristic polynomial");
    let _ = writeln!(out, "  c_1..c_n (spectral): {}", list(&r.char_poly.spectral));
    let s = &r.char_poly.structural;
    let _ = writeln!(out, "  c_1, c_2, c_3 (structural): {}", list(&[s.c1, s.c2, s.c3]));
    let _ = writeln!(out, "randic indices");
    let rd = &r.randic;
    let _ = writeln!(
        out,
        "  R = {}, R0 = {}, zagreb2 = {}, phi = {}",
        num(rd.randic),
        num(rd.zeroth_order),
        num(rd.zagreb2),
        num(rd.phi)
    );
    for (t, v) in &rd.higher_order {
        let _ = writeln!(out, "  R^({t}) = {}", num(*v));
    }
    for (a, v) in &rd.generalized {
        let _ = writeln!(out, "  R_{a} = {}", num(*v));
    }
    for c in &rd.bound_checks {
        let state = match &c.not_applicable {
            Some(why) => format!("skipped: {why}"),
            None => format!(
                "{} <= {}  {}{}",
                num(c.lhs),
                num(c.rhs),
                if c.holds { "holds" } else { "VIOLATED" },
                if c.tight { ", tight" } else { "" }
            ),
        };
        let _ = writeln!(out, "  {:<16} {state}", c.name);
    }
    if let (Some(mesh), Some(polys)) = (&r.mesh, &r.alternating_polynomials) {
        let _ = writeln!(out, "mesh ({} points): {}", mesh.len(), list(mesh));
        polynomials_text(&mut out, polys);
    }
    if let Some(b) = &r.bounds {
        let _ = writeln!(out, "bounds");
        bounds_text(&mut out, b);
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}
