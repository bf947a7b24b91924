//! Randić index family and the inequalities relating it to the degree-adjacency
//! spectrum.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::scalar::Real;
use crate::spectral::{Spectrum, StructuralCoefficients};

/// Tightness tolerance (absolute) for bound checks.
pub const TIGHT_TOL: f64 = 1e-8;

/// `sum over edges of 1/sqrt(d_i d_j)`.
pub fn randic_index<T: Real>(g: &Graph) -> Result<T> {
    g.require_no_isolated()?;
    let d = g.degrees();
    Ok(g.edges().iter().map(|&(u, v)| T::of_usize(d[u] * d[v]).sqrt().recip()).sum())
}

/// `sum over vertices of 1/sqrt(d_v)`.
pub fn zeroth_order<T: Real>(g: &Graph) -> Result<T> {
    g.require_no_isolated()?;
    Ok(g.degrees().into_iter().map(|d| T::of_usize(d).sqrt().recip()).sum())
}

/// `R_alpha = sum over edges of (d_i d_j)^alpha`, `alpha != 0`.
pub fn generalized_randic<T: Real>(g: &Graph, alpha: T) -> Result<T> {
    if alpha == T::zero() {
        return domain("generalized Randić index needs a nonzero exponent");
    }
    let d = g.degrees();
    Ok(g.edges().iter().map(|&(u, v)| T::of_usize(d[u] * d[v]).powf(alpha)).sum())
}

/// Second Zagreb index `R_1`.
pub fn second_zagreb<T: Real>(g: &Graph) -> T {
    let d = g.degrees();
    g.edges().iter().map(|&(u, v)| T::of_usize(d[u] * d[v])).sum()
}

/// `R^(t)`: sum over simple paths with `t` edges of `1/sqrt(prod of degrees)`.
///
/// Paths are enumerated by depth-limited search from every start vertex and
/// kept only when `start < end`, so each unordered path is counted once.
pub fn higher_order_randic<T: Real>(g: &Graph, t: usize) -> Result<T> {
    if t < 1 {
        return domain("higher-order Randić index needs t >= 1");
    }
    g.require_no_isolated()?;
    let d: Vec<T> = g.degrees().into_iter().map(T::of_usize).collect();
    let mut total = T::zero();
    let mut on_path = vec![false; g.order()];
    for start in 0..g.order() {
        on_path[start] = true;
        extend_paths(g, &d, start, start, t, d[start], &mut on_path, &mut total);
        on_path[start] = false;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn extend_paths<T: Real>(
    g: &Graph,
    d: &[T],
    start: usize,
    at: usize,
    remaining: usize,
    product: T,
    on_path: &mut [bool],
    total: &mut T,
) {
    if remaining == 0 {
        if start < at {
            *total = *total + product.sqrt().recip();
        }
        return;
    }
    for &w in g.neighbors(at) {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        extend_paths(g, d, start, w, remaining - 1, product * d[w], on_path, total);
        on_path[w] = false;
    }
}

/// `phi = (sum sqrt(d_i))^2 / 2m`.
pub fn phi<T: Real>(g: &Graph) -> T {
    let s: T = g.degrees().into_iter().map(|d| T::of_usize(d).sqrt()).sum();
    s * s / T::of_usize(2 * g.size())
}

/// One evaluated inequality `lhs <= rhs` (or identity `lhs = rhs`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub tight: bool,
    pub not_applicable: Option<String>,
}

impl BoundCheck {
    fn le<T: Real>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let (l, r) = (lhs.to_f64_lossy(), rhs.to_f64_lossy());
        let slack = 1e-9 * l.abs().max(r.abs()).max(1.0);
        Self {
            name: name.into(),
            lhs: l,
            rhs: r,
            holds: l <= r + slack,
            tight: (l - r).abs() <= TIGHT_TOL,
            not_applicable: None,
        }
    }

    fn identity<T: Real>(name: impl Into<String>, lhs: T, rhs: T, tol: f64) -> Self {
        let (l, r) = (lhs.to_f64_lossy(), rhs.to_f64_lossy());
        let eq = (l - r).abs() <= tol;
        Self { name: name.into(), lhs: l, rhs: r, holds: eq, tight: eq, not_applicable: None }
    }

    fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { name: name.into(), lhs: 0.0, rhs: 0.0, holds: true, tight: false, not_applicable: Some(reason.into()) }
    }

    pub fn is_applicable(&self) -> bool {
        self.not_applicable.is_none()
    }
}

/// Exponent pairs `(a1, a2)`, `a1 < a2`, for the power-mean comparison.
pub const POWER_MEAN_PAIRS: [(f64, f64); 4] = [(-2.0, 1.0), (1.0, 2.0), (-2.0, -1.0), (-0.5, 0.5)];

/// Exponents for the `m^{a+1} / |c_2|^a` comparison.
pub const C2_POWER_EXPONENTS: [f64; 3] = [-0.5, -0.75, 2.0];

/// Randić family values plus every evaluated inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandicReport {
    pub randic: f64,
    pub zeroth_order: f64,
    /// Keyed by the exponent rendered as text.
    pub generalized: BTreeMap<String, f64>,
    pub higher_order: BTreeMap<usize, f64>,
    pub zagreb2: f64,
    pub phi: f64,
    pub bound_checks: Vec<BoundCheck>,
}

impl RandicReport {
    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.bound_checks.iter().find(|c| c.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bound_checks.iter().filter(|c| !c.holds)
    }
}

/// Evaluates every Randić-family inequality on `g`.
///
/// `degree_spectrum` and `standard_spectrum` must both be sorted descending;
/// `coeffs` supplies `c_2`.
pub fn randic_bounds<T: Real>(
    g: &Graph,
    degree_spectrum: &Spectrum<T>,
    standard_spectrum: &Spectrum<T>,
    coeffs: &StructuralCoefficients<T>,
) -> Result<RandicReport> {
    g.require_no_isolated()?;
    let n = g.order();
    let m = g.size();
    let profile = g.degree_profile();
    let connected = g.is_connected();
    let regular = profile.delta_min == profile.delta_max;

    let r: T = randic_index(g)?;
    let r0: T = zeroth_order(g)?;
    let r2: T = higher_order_randic(g, 2)?;
    let zagreb: T = second_zagreb(g);

    let mut generalized = BTreeMap::new();
    for a in [-1.0, -0.75, -0.5, 0.5, 1.0, 2.0, -2.0] {
        generalized.insert(format!("{a}"), generalized_randic(g, T::of(a))?.to_f64_lossy());
    }
    let mut higher_order = BTreeMap::new();
    for t in 1..=3 {
        higher_order.insert(t, higher_order_randic::<T>(g, t)?.to_f64_lossy());
    }

    let mut checks = Vec::new();
    if m == 0 {
        let reason = "graph has no edges";
        for name in [
            "c2_range",
            "edge_range",
            "order_range",
            "zagreb_edge_bound",
            "inverse_index_identity",
            "c2_cauchy",
            "zeroth_squared",
            "power_mean",
            "c2_power",
            "spectral_pairing",
            "second_order",
        ] {
            checks.push(BoundCheck::skipped(name, reason));
        }
    } else {
        let nf = T::of_usize(n);
        let mf = T::of_usize(m);
        let dmin = T::of_usize(profile.delta_min);
        let dmax = T::of_usize(profile.delta_max);
        let c2 = coeffs.c2;
        let abs_c2 = c2.abs();

        checks.push(BoundCheck::le("c2_range_lower", mf / (dmax * dmax), -c2));
        checks.push(BoundCheck::le("c2_range_upper", -c2, mf / (dmin * dmin)));
        checks.push(BoundCheck::le("edge_range_lower", mf / dmax, r));
        checks.push(BoundCheck::le("edge_range_upper", r, mf / dmin));
        if connected {
            checks.push(BoundCheck::le("order_range_lower", (nf - T::one()).sqrt(), r));
        } else {
            checks.push(BoundCheck::skipped("order_range_lower", "graph is disconnected"));
        }
        checks.push(BoundCheck::le("order_range_upper", r, nf / T::of(2.0)));
        checks.push(BoundCheck::le("zeroth_range_lower", nf / dmax.sqrt(), r0));
        checks.push(BoundCheck::le("zeroth_range_upper", r0, nf / dmin.sqrt()));
        let root = ((T::of(8.0) * mf + T::one()).sqrt() - T::one()) / T::of(2.0);
        checks.push(BoundCheck::le("zagreb_edge_bound", zagreb, mf * root * root));
        let r_minus_one = generalized_randic(g, -T::one())?;
        checks.push(BoundCheck::identity("inverse_index_identity", r_minus_one, abs_c2, 1e-10));
        checks.push(BoundCheck::le("c2_cauchy", r, (mf * abs_c2).sqrt()));
        checks.push(BoundCheck::le("zeroth_squared", nf * nf * nf / (T::of(2.0) * mf), r0 * r0));

        for (a1, a2) in POWER_MEAN_PAIRS {
            let (a1, a2) = (T::of(a1), T::of(a2));
            let ra1 = generalized_randic(g, a1)?;
            let ra2 = generalized_randic(g, a2)?;
            let left = ra1.powf(a2) * mf.powf(a1);
            let right = ra2.powf(a1) * mf.powf(a2);
            let name = format!("power_mean[{a1},{a2}]");
            if a1 * a2 > T::zero() {
                checks.push(BoundCheck::le(name, left, right));
            } else {
                checks.push(BoundCheck::le(name, right, left));
            }
        }

        for a in C2_POWER_EXPONENTS {
            let af = T::of(a);
            let ra = generalized_randic(g, af)?;
            let closed = mf.powf(af + T::one()) / abs_c2.powf(af);
            let name = format!("c2_power[{a}]");
            if a > -1.0 && a < 0.0 {
                checks.push(BoundCheck::le(name, ra, closed));
            } else {
                checks.push(BoundCheck::le(name, closed, ra));
            }
        }

        let pair_sum: T =
            degree_spectrum.values.iter().zip(&standard_spectrum.values).map(|(&l, &t)| (l * t).abs()).sum();
        checks.push(BoundCheck::le("spectral_pairing", r, pair_sum / T::of(2.0)));

        let upper = dmax.sqrt() * (nf / T::of(2.0) + c2);
        if connected {
            checks.push(BoundCheck::le("second_order_upper", r2, upper));
        } else {
            checks.push(BoundCheck::skipped("second_order_upper", "graph is disconnected"));
        }
        match (connected, regular, profile.delta_star) {
            (false, _, _) => checks.push(BoundCheck::skipped("second_order_lower", "graph is disconnected")),
            (_, true, _) => checks.push(BoundCheck::skipped("second_order_lower", "graph is regular")),
            (_, _, None) => checks.push(BoundCheck::skipped("second_order_lower", "no vertex of degree > 1")),
            (true, false, Some(ds)) => {
                let ph = phi::<T>(g);
                let gap = T::of(2.0) * r - ph;
                let lower = (gap * gap / (T::of(2.0) * (nf - ph)) + ph / T::of(2.0) + c2) * T::of_usize(ds).sqrt();
                checks.push(BoundCheck::le("second_order_lower", lower, r2));
            }
        }
    }

    Ok(RandicReport {
        randic: r.to_f64_lossy(),
        zeroth_order: r0.to_f64_lossy(),
        generalized,
        higher_order,
        zagreb2: zagreb.to_f64_lossy(),
        phi: if m == 0 { 0.0 } else { phi::<T>(g).to_f64_lossy() },
        bound_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::spectral::{degree_adjacency_spectrum, standard_eigenvalues, structural_coefficients};

    fn g(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn report(h: &Graph) -> RandicReport {
        randic_bounds(
            h,
            &degree_adjacency_spectrum::<f64>(h).unwrap(),
            &standard_eigenvalues(h).unwrap(),
            &structural_coefficients(h).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn randic_fixtures() {
        let r: f64 = randic_index(&g(Family::Star(4))).unwrap();
        assert!((r - 3f64.sqrt()).abs() < 1e-14);
        let r: f64 = randic_index(&g(Family::Cycle(4))).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
        // pendant edge 1/sqrt3, two hub edges 1/sqrt6, two cycle edges 1/2
        let expected = 2.0 / 6f64.sqrt() + 1.0 / 3f64.sqrt() + 1.0;
        let r: f64 = randic_index(&g(Family::C4Pendant)).unwrap();
        assert!((r - expected).abs() < 1e-14);
        assert!((r - 2.3938).abs() < 1e-4);
    }

    #[test]
    fn zeroth_order_fixtures() {
        let r: f64 = zeroth_order(&g(Family::Star(4))).unwrap();
        assert!((r - (3.0 + 1.0 / 3f64.sqrt())).abs() < 1e-14);
        let r: f64 = zeroth_order(&g(Family::Cycle(4))).unwrap();
        assert!((r - 4.0 / 2f64.sqrt()).abs() < 1e-14);
        assert!((r * r - 8.0).abs() < 1e-12);
        let r: f64 = zeroth_order(&g(Family::Complete(5))).unwrap();
        assert!((r - 5.0 / 2.0).abs() < 1e-14);
    }

    #[test]
    fn generalized_fixtures() {
        let r: f64 = generalized_randic(&g(Family::Cycle(4)), -1.0).unwrap();
        assert!((r - 1.0).abs() < 1e-15);
        let r: f64 = generalized_randic(&g(Family::Complete(3)), 1.0).unwrap();
        assert_eq!(r, 12.0);
        assert!(generalized_randic(&g(Family::Cycle(4)), 0.0f64).is_err());
    }

    #[test]
    fn higher_order_fixtures() {
        for f in [Family::C4Pendant, Family::Complete(5), Family::Path(6)] {
            let h = g(f);
            let a: f64 = higher_order_randic(&h, 1).unwrap();
            let b: f64 = randic_index(&h).unwrap();
            assert!((a - b).abs() < 1e-14);
        }
        let r: f64 = higher_order_randic(&g(Family::Star(4)), 2).unwrap();
        assert!((r - 3f64.sqrt()).abs() < 1e-14);
        let r: f64 = higher_order_randic(&g(Family::Cycle(4)), 2).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
        assert!(higher_order_randic::<f64>(&g(Family::Cycle(4)), 0).is_err());
        // path P5 has a single path of length 4
        let r: f64 = higher_order_randic(&g(Family::Path(5)), 4).unwrap();
        assert!((r - 1.0 / 8f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn c4_bound_tightness() {
        let rep = report(&g(Family::Cycle(4)));
        let c2_cauchy = rep.check("c2_cauchy").unwrap();
        assert!(c2_cauchy.tight && (c2_cauchy.rhs - 2.0).abs() < 1e-12);
        assert!(rep.check("zeroth_squared").unwrap().tight);
        assert!(rep.check("order_range_upper").unwrap().tight);
        assert_eq!(rep.check("second_order_lower").unwrap().not_applicable.as_deref(), Some("graph is regular"));
        assert_eq!(rep.violations().count(), 0);
    }

    #[test]
    fn star_theorem6_tight_both_sides() {
        let rep = report(&g(Family::Star(4)));
        let up = rep.check("second_order_upper").unwrap();
        let low = rep.check("second_order_lower").unwrap();
        let r3 = 3f64.sqrt();
        assert!((up.rhs - r3).abs() < 1e-8 && up.tight);
        assert!((low.lhs - r3).abs() < 1e-8 && low.tight);
        assert!((rep.phi - (3.0 + r3).powi(2) / 6.0).abs() < 1e-12);
        assert!(rep.check("order_range_lower").unwrap().tight);
        assert!(rep.check("spectral_pairing").unwrap().tight);
        assert_eq!(rep.violations().count(), 0);
    }

    #[test]
    fn pendant_graph_all_hold() {
        let rep = report(&g(Family::C4Pendant));
        assert_eq!(rep.violations().count(), 0, "{:?}", rep.violations().collect::<Vec<_>>());
        assert!(!rep.check("spectral_pairing").unwrap().tight);
    }
}
