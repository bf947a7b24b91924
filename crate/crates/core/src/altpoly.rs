//! k-alternating polynomials on an eigenvalue mesh.
//!
//! For a mesh `mu_1 > ... > mu_b` and `0 <= k <= b - 1`, `P_k` is the
//! polynomial of degree at most `k` with `max_i |P(mu_i)| <= 1` that is
//! largest at points above the mesh. Everything here evaluates at 1.
//!
//! Two independent routes are provided: a linear program over monomial
//! coefficients, and an exhaustive search over equioscillating interpolants.

use qd::Quad;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::simplex::{maximize, Constraint, LpOutcome, Relation};
use crate::spectral::Spectrum;

/// Largest mesh the alternation oracle will enumerate.
pub const ORACLE_MAX_POINTS: usize = 25;

/// Strictly descending points, all below 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh<T> {
    points: Vec<T>,
}

impl<T: Real> Mesh<T> {
    /// Validates an explicit point list.
    pub fn new(points: Vec<T>) -> Result<Self> {
        if points.is_empty() {
            return domain("mesh needs at least one point");
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return domain(format!("mesh point {p} is not finite"));
        }
        for w in points.windows(2) {
            if !(w[0] > w[1]) || w[0].clusters_with(w[1]) {
                return domain(format!(
                    "mesh must be strictly descending with distinct points ({} then {})",
                    w[0], w[1]
                ));
            }
        }
        if points[0] >= T::one() || points[0].clusters_with(T::one()) {
            return domain(format!("mesh points must lie below 1 (got {})", points[0]));
        }
        Ok(Self { points })
    }

    /// Distinct degree-adjacency eigenvalues below the Perron value.
    pub fn from_spectrum(s: &Spectrum<T>) -> Result<Self> {
        let clusters = s.clusters();
        let perron = clusters.iter().filter(|(v, _)| v.clusters_with(T::one())).map(|c| c.1).sum::<usize>();
        if perron != 1 {
            return domain(format!("Perron eigenvalue 1 has multiplicity {perron}; the mesh needs a connected graph"));
        }
        let points: Vec<T> = clusters.into_iter().map(|c| c.0).filter(|v| !v.clusters_with(T::one())).collect();
        if points.is_empty() {
            return domain("spectrum has no eigenvalue below the Perron value");
        }
        Self::new(points)
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    /// Number of points `b`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k + 1 > self.points.len() {
            return domain(format!(
                "k = {k} is out of range; valid k is 0..={} for a mesh of {} points",
                self.points.len() - 1,
                self.points.len()
            ));
        }
        Ok(())
    }
}

/// Shorthand for [`Mesh::from_spectrum`].
pub fn mesh_from_spectrum<T: Real>(s: &Spectrum<T>) -> Result<Mesh<T>> {
    Mesh::from_spectrum(s)
}

/// An extremal polynomial together with its values of interest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternatingPolynomial<T> {
    pub k: usize,
    /// Ascending powers, length `k + 1`.
    pub coefficients: Vec<T>,
    pub value_at_1: T,
    pub sup_norm_on_mesh: T,
}

impl<T: Real> AlternatingPolynomial<T> {
    /// Values at 1 and on the mesh are evaluated in double-double: once
    /// `P_k(1)` passes ~1e8, plain Horner loses the digits that decide
    /// whether `|P| <= 1` holds on the mesh.
    fn from_coefficients(k: usize, coefficients: Vec<T>, mesh: &Mesh<T>) -> Self {
        let value_at_1 = T::of(accurate_horner(&coefficients, T::one()));
        let sup_norm_on_mesh =
            T::of(mesh.points.iter().map(|&x| accurate_horner(&coefficients, x).abs()).fold(0.0, f64::max));
        Self { k, coefficients, value_at_1, sup_norm_on_mesh }
    }

    /// Like [`Self::from_coefficients`], but divides by the sup norm when
    /// solver rounding left it above 1.
    fn feasible(k: usize, mut coefficients: Vec<T>, mesh: &Mesh<T>) -> Self {
        let mut p = Self::from_coefficients(k, coefficients.clone(), mesh);
        for _ in 0..2 {
            if p.sup_norm_on_mesh <= T::one() {
                break;
            }
            let scale = p.sup_norm_on_mesh.recip();
            coefficients.iter_mut().for_each(|a| *a = *a * scale);
            p = Self::from_coefficients(k, coefficients.clone(), mesh);
        }
        p
    }

    pub fn evaluate(&self, x: T) -> T {
        horner(&self.coefficients, x)
    }

    pub fn leading_coefficient(&self) -> T {
        *self.coefficients.last().expect("non-empty")
    }

    /// Longest run of mesh points (in mesh order) where the polynomial hits
    /// `+-1` within `tol` with alternating signs.
    pub fn alternation_count(&self, mesh: &Mesh<T>, tol: T) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for &x in &mesh.points {
            let v = self.evaluate(x);
            if (v.abs() - T::one()).abs() <= tol {
                let positive = v > T::zero();
                if last != Some(positive) {
                    count += 1;
                    last = Some(positive);
                }
            }
        }
        count
    }
}

fn horner<T: Real>(coeffs: &[T], x: T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}

fn accurate_horner<T: Real>(coeffs: &[T], x: T) -> f64 {
    let x = Quad::from(x.to_f64_lossy());
    let v = coeffs.iter().rev().fold(Quad::ZERO, |acc, &c| acc * x + Quad::from(c.to_f64_lossy()));
    v.0 + v.1
}

/// `P_k` by linear programming: maximize `sum_j a_j` subject to
/// `-1 <= sum_j a_j mu_i^j <= 1` for every mesh point.
pub fn alternating_polynomial_lp<T: Real>(mesh: &Mesh<T>, k: usize) -> Result<AlternatingPolynomial<T>> {
    mesh.check_k(k)?;
    if k == 0 {
        return Ok(AlternatingPolynomial::from_coefficients(0, vec![T::one()], mesh));
    }
    let width = k + 1;
    // a_j = x_j - x_{width + j}
    let mut objective = vec![T::one(); width];
    objective.extend(std::iter::repeat_n(-T::one(), width));
    let mut constraints = Vec::with_capacity(2 * mesh.len());
    for &mu in &mesh.points {
        let powers: Vec<T> = (0..width).map(|j| mu.powi(j as i32)).collect();
        let mut row = powers.clone();
        row.extend(powers.iter().map(|&p| -p));
        constraints.push(Constraint { coeffs: row.clone(), relation: Relation::Le, rhs: T::one() });
        constraints.push(Constraint {
            coeffs: row.iter().map(|&v| -v).collect(),
            relation: Relation::Le,
            rhs: T::one(),
        });
    }
    match maximize(&objective, &constraints) {
        Some(LpOutcome::Optimal { x, .. }) => {
            let coeffs = (0..width).map(|j| x[j] - x[width + j]).collect();
            Ok(AlternatingPolynomial::feasible(k, coeffs, mesh))
        }
        Some(other) => Err(Error::Internal(format!("alternating-polynomial LP reported {other:?}"))),
        None => Err(Error::Internal("alternating-polynomial LP exceeded its pivot budget".into())),
    }
}

/// `P_k` by exhaustive search over `(k+1)`-subsets of mesh points and both
/// alternating sign patterns; keeps the feasible interpolant largest at 1.
pub fn alternating_polynomial_oracle<T: Real>(mesh: &Mesh<T>, k: usize) -> Result<AlternatingPolynomial<T>> {
    mesh.check_k(k)?;
    let b = mesh.len();
    if b > ORACLE_MAX_POINTS {
        return Err(Error::OracleScale { points: b, max: ORACLE_MAX_POINTS });
    }
    let feasible = T::one() + T::of(1e-9);
    let pts = &mesh.points;
    let mut best: Option<(T, Vec<usize>, bool)> = None;
    let mut subset: Vec<usize> = (0..=k).collect();
    loop {
        let nodes: Vec<T> = subset.iter().map(|&i| pts[i]).collect();
        let weights = barycentric_weights(&nodes);
        for plus_first in [true, false] {
            let values: Vec<T> =
                (0..=k).map(|i| if (i % 2 == 0) == plus_first { T::one() } else { -T::one() }).collect();
            let ok = pts.iter().all(|&x| barycentric_eval(&nodes, &weights, &values, x).abs() <= feasible);
            if ok {
                let at_one = barycentric_eval(&nodes, &weights, &values, T::one());
                if best.as_ref().is_none_or(|(v, _, _)| at_one > *v) {
                    best = Some((at_one, subset.clone(), plus_first));
                }
            }
        }
        if !next_combination(&mut subset, b) {
            break;
        }
    }
    let (_, subset, plus_first) = best.ok_or_else(|| Error::Internal("no feasible alternating interpolant".into()))?;
    let nodes: Vec<T> = subset.iter().map(|&i| pts[i]).collect();
    let values: Vec<T> = (0..=k).map(|i| if (i % 2 == 0) == plus_first { T::one() } else { -T::one() }).collect();
    let coefficients = interpolating_coefficients(&nodes, &values)?;
    Ok(AlternatingPolynomial::feasible(k, coefficients, mesh))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn barycentric_weights<T: Real>(nodes: &[T]) -> Vec<T> {
    (0..nodes.len())
        .map(|j| {
            nodes.iter().enumerate().filter(|&(i, _)| i != j).fold(T::one(), |w, (_, &x)| w * (nodes[j] - x)).recip()
        })
        .collect()
}

fn barycentric_eval<T: Real>(nodes: &[T], weights: &[T], values: &[T], x: T) -> T {
    let mut num = T::zero();
    let mut den = T::zero();
    for ((&xj, &wj), &yj) in nodes.iter().zip(weights).zip(values) {
        let diff = x - xj;
        if diff == T::zero() {
            return yj;
        }
        let t = wj / diff;
        num = num + t * yj;
        den = den + t;
    }
    num / den
}

fn interpolating_coefficients<T: Real>(nodes: &[T], values: &[T]) -> Result<Vec<T>> {
    let n = nodes.len();
    let mut v = Matrix::zeros(n, n);
    for (i, &x) in nodes.iter().enumerate() {
        for j in 0..n {
            v[(i, j)] = x.powi(j as i32);
        }
    }
    v.solve(values).ok_or_else(|| Error::Internal("singular Vandermonde system".into()))
}

/// `P_1(x) = (2x - mu_1 - mu_b) / (mu_1 - mu_b)`.
pub fn p1_closed_form<T: Real>(mesh: &Mesh<T>) -> Result<AlternatingPolynomial<T>> {
    if mesh.len() < 2 {
        return domain("P_1 needs a mesh of at least two points");
    }
    let hi = mesh.points[0];
    let lo = *mesh.points.last().expect("non-empty");
    let span = hi - lo;
    let coefficients = vec![-(hi + lo) / span, T::of(2.0) / span];
    Ok(AlternatingPolynomial::from_coefficients(1, coefficients, mesh))
}

/// `P_k(1)` for every `k` in `0..b`.
pub fn values_at_one<T: Real>(mesh: &Mesh<T>) -> Result<Vec<T>> {
    (0..mesh.len()).map(|k| alternating_polynomial_lp(mesh, k).map(|p| p.value_at_1)).collect()
}
