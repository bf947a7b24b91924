//! Degree-adjacency matrix, spectra and characteristic-polynomial coefficients.
//!
//! The degree-adjacency matrix has `a_ij = 1 / sqrt(d_i d_j)` on every edge and
//! zeros elsewhere, i.e. `D^{-1/2} A D^{-1/2}`. Its Perron vector is
//! `nu_i = sqrt(d_i)` with eigenvalue 1.

use qd::Quad;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::linalg::{symmetric_eigen, Matrix, SymmetricEigen};
use crate::scalar::Real;

/// Which matrix a [`Spectrum`] was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    DegreeAdjacency,
    StandardAdjacency,
}

/// Degree-adjacency matrix of a graph without isolated vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeAdjacencyMatrix<T> {
    matrix: Matrix<T>,
    perron: Vec<T>,
}

impl<T: Real> DegreeAdjacencyMatrix<T> {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_no_isolated()?;
        let n = g.order();
        let degrees: Vec<T> = g.degrees().into_iter().map(T::of_usize).collect();
        let mut matrix = Matrix::zeros(n, n);
        for &(u, v) in g.edges() {
            let w = (degrees[u] * degrees[v]).sqrt().recip();
            matrix[(u, v)] = w;
            matrix[(v, u)] = w;
        }
        let perron = degrees.iter().map(|d| d.sqrt()).collect();
        Ok(Self { matrix, perron })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `nu = (sqrt(d_1), ..., sqrt(d_n))`, fixed by the matrix.
    pub fn perron_vector(&self) -> &[T] {
        &self.perron
    }

    /// `max_i |(A nu)_i - nu_i|`.
    pub fn perron_residual(&self) -> T {
        self.matrix.mul_vec(&self.perron).iter().zip(&self.perron).map(|(&a, &b)| (a - b).abs()).fold(T::zero(), T::max)
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.matrix.mul_vec(x)
    }
}

/// Shorthand for [`DegreeAdjacencyMatrix::new`].
pub fn degree_adjacency<T: Real>(g: &Graph) -> Result<DegreeAdjacencyMatrix<T>> {
    DegreeAdjacencyMatrix::new(g)
}

/// 0/1 adjacency matrix.
pub fn adjacency_matrix<T: Real>(g: &Graph) -> Matrix<T> {
    let n = g.order();
    let mut a = Matrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = T::one();
        a[(v, u)] = T::one();
    }
    a
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum<T> {
    pub values: Vec<T>,
    pub kind: SpectrumKind,
}

impl<T: Real> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Groups the values into `(representative, multiplicity)` clusters using
    /// [`Real::clusters_with`] between neighbors in sorted order.
    pub fn clusters(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize, T)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((_, count, last)) if last.clusters_with(v) => {
                    *count += 1;
                    *last = v;
                }
                _ => out.push((v, 1, v)),
            }
        }
        out.into_iter().map(|(v, c, _)| (v, c)).collect()
    }

    /// Number of eigenvalues clustering with `target`.
    pub fn multiplicity_of(&self, target: T) -> usize {
        self.values.iter().filter(|v| v.clusters_with(target)).count()
    }

    pub fn contains(&self, target: T) -> bool {
        self.multiplicity_of(target) > 0
    }

    pub fn trace(&self) -> T {
        self.values.iter().copied().sum()
    }

    /// Largest `|lambda_i + lambda_{n+1-i}|`; zero for a spectrum symmetric about 0.
    pub fn symmetry_defect(&self) -> T {
        let n = self.values.len();
        (0..n).map(|i| (self.values[i] + self.values[n - 1 - i]).abs()).fold(T::zero(), T::max)
    }
}

/// Eigen-decomposition of the degree-adjacency matrix.
pub fn degree_adjacency_eigen<T: Real>(mat: &DegreeAdjacencyMatrix<T>) -> Result<SymmetricEigen<T>> {
    symmetric_eigen(mat.matrix())
}

/// Degree-adjacency spectrum.
pub fn eigenvalues<T: Real>(mat: &DegreeAdjacencyMatrix<T>) -> Result<Spectrum<T>> {
    let e = degree_adjacency_eigen(mat)?;
    Ok(Spectrum { values: e.values, kind: SpectrumKind::DegreeAdjacency })
}

/// Spectrum of an arbitrary symmetric matrix, tagged with `kind`.
pub fn matrix_eigenvalues<T: Real>(m: &Matrix<T>, kind: SpectrumKind) -> Result<Spectrum<T>> {
    Ok(Spectrum { values: symmetric_eigen(m)?.values, kind })
}

pub fn degree_adjacency_spectrum<T: Real>(g: &Graph) -> Result<Spectrum<T>> {
    eigenvalues(&DegreeAdjacencyMatrix::new(g)?)
}

/// Spectrum of the 0/1 adjacency matrix.
pub fn standard_eigenvalues<T: Real>(g: &Graph) -> Result<Spectrum<T>> {
    matrix_eigenvalues(&adjacency_matrix(g), SpectrumKind::StandardAdjacency)
}

/// Coefficients `c_1..c_n` of the monic `det(lambda I - A) = lambda^n + c_1 lambda^{n-1} + ... + c_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharPolyCoefficients<T> {
    pub c: Vec<T>,
}

impl<T: Real> CharPolyCoefficients<T> {
    /// `c_r`, 1-based; `c_0 = 1`.
    pub fn get(&self, r: usize) -> T {
        if r == 0 {
            T::one()
        } else {
            self.c.get(r - 1).copied().unwrap_or_else(T::zero)
        }
    }

    pub fn degree(&self) -> usize {
        self.c.len()
    }

    pub fn evaluate(&self, x: T) -> T {
        self.c.iter().fold(T::one(), |acc, &c| acc * x + c)
    }

    /// Coefficients in ascending powers, ending with the leading 1.
    pub fn ascending(&self) -> Vec<T> {
        let mut v: Vec<T> = self.c.iter().rev().copied().collect();
        v.push(T::one());
        v
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let len = self.c.len().max(other.c.len());
        (1..=len).map(|r| (self.get(r) - other.get(r)).abs()).fold(T::zero(), T::max)
    }
}

/// `c_r = (-1)^r e_r(lambda_1, ..., lambda_n)`, obtained by expanding
/// `prod (x - lambda_i)`.
pub fn char_poly_from_spectrum<T: Real>(s: &Spectrum<T>) -> CharPolyCoefficients<T> {
    // descending powers with leading 1
    let mut coeffs = vec![T::one()];
    for &lambda in &s.values {
        coeffs.push(T::zero());
        for r in (1..coeffs.len()).rev() {
            coeffs[r] = coeffs[r] - lambda * coeffs[r - 1];
        }
    }
    CharPolyCoefficients { c: coeffs[1..].to_vec() }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StructuralCoefficients<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
}

/// `c_1, c_2, c_3` from principal minors: `c_1 = 0`,
/// `c_2 = -sum_edges 1/(d_i d_j)`, `c_3 = -2 sum_triangles 1/(d_i d_j d_k)`.
pub fn structural_coefficients<T: Real>(g: &Graph) -> Result<StructuralCoefficients<T>> {
    g.require_no_isolated()?;
    let d: Vec<T> = g.degrees().into_iter().map(T::of_usize).collect();
    let c2 = -g.edges().iter().map(|&(u, v)| (d[u] * d[v]).recip()).sum::<T>();
    let mut c3 = T::zero();
    for &(u, v) in g.edges() {
        for &w in g.neighbors(u) {
            if w > v && g.has_edge(v, w) {
                c3 = c3 - T::of(2.0) / (d[u] * d[v] * d[w]);
            }
        }
    }
    Ok(StructuralCoefficients { c1: T::zero(), c2, c3 })
}

/// Characteristic polynomial of the path `P_n` through the recurrence
/// `Phi_n = -x Phi_{n-1} - Phi_{n-2} / 4`, `Phi_2 = -x`, `Phi_3 = x^2 - 1/2`,
/// `Psi_n = x Phi_n + Phi_{n-1} / 2`.
///
/// The recurrence output carries the sign `(-1)^{n+1}`; the result is
/// normalized to the monic `det(x I - A)`.
pub fn path_char_poly<T: Real>(n: usize) -> Result<CharPolyCoefficients<T>> {
    if n < 3 {
        return domain(format!("path recurrence needs n >= 3, got {n}"));
    }
    let half = T::of(0.5);
    let quarter = T::of(0.25);
    // ascending-power polynomials
    let mut prev = vec![T::zero(), -T::one()]; // Phi_2
    let mut cur = vec![-half, T::zero(), T::one()]; // Phi_3
    for _ in 4..=n {
        let mut next = vec![T::zero(); cur.len() + 1];
        for (j, &c) in cur.iter().enumerate() {
            next[j + 1] = next[j + 1] - c;
        }
        for (j, &c) in prev.iter().enumerate() {
            next[j] = next[j] - quarter * c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    let mut psi = vec![T::zero(); cur.len() + 1];
    for (j, &c) in cur.iter().enumerate() {
        psi[j + 1] = psi[j + 1] + c;
    }
    for (j, &c) in prev.iter().enumerate() {
        psi[j] = psi[j] + half * c;
    }
    let lead = *psi.last().expect("non-empty");
    if lead.abs() != T::one() {
        return Err(Error::Internal(format!("path recurrence leading coefficient {lead}")));
    }
    // descending, drop the leading 1
    let c = psi.iter().rev().skip(1).map(|&x| x / lead).collect();
    Ok(CharPolyCoefficients { c })
}

/// `|det(A_deg - x I) * prod d_j - det(A - x D)|`.
pub fn det_identity_residual<T: Real>(g: &Graph, x: T) -> Result<T> {
    let (lhs, rhs) = det_identity_sides(g, x)?;
    Ok((lhs - rhs).abs())
}

/// Both sides of `det(A_deg - x I) * prod d_j = det(A - x D)`.
pub fn det_identity_sides<T: Real>(g: &Graph, x: T) -> Result<(T, T)> {
    let deg = DegreeAdjacencyMatrix::<T>::new(g)?;
    let n = g.order();
    let d: Vec<T> = g.degrees().into_iter().map(T::of_usize).collect();
    let ones = vec![T::one(); n];
    let prod: T = d.iter().fold(T::one(), |p, &v| p * v);
    let lhs = deg.matrix().shifted(x, &ones).determinant() * prod;
    let rhs = adjacency_matrix::<T>(g).shifted(x, &d).determinant();
    Ok((lhs, rhs))
}

/// [`det_identity_residual`] evaluated in double-double arithmetic.
///
/// Both sides scale like `prod d_j`, which reaches `1e18` on `K_16`; at that
/// size one `f64` rounding step is already ~`1e2`, so the absolute residual
/// is only meaningful with about 32 significant digits.
pub fn det_identity_residual_extended(g: &Graph, x: f64) -> Result<f64> {
    g.require_no_isolated()?;
    let n = g.order();
    let d: Vec<Quad> = g.degrees().into_iter().map(|v| Quad::from(v as f64)).collect();
    let x = Quad::from(x);
    let mut normalized = vec![vec![Quad::ZERO; n]; n];
    let mut weighted = vec![vec![Quad::ZERO; n]; n];
    for &(u, v) in g.edges() {
        let w = (d[u] * d[v]).sqrt().recip();
        normalized[u][v] = w;
        normalized[v][u] = w;
        weighted[u][v] = Quad::ONE;
        weighted[v][u] = Quad::ONE;
    }
    for i in 0..n {
        normalized[i][i] -= x;
        weighted[i][i] -= x * d[i];
    }
    let prod = d.iter().fold(Quad::ONE, |p, &v| p * v);
    let residual = quad_determinant(normalized) * prod - quad_determinant(weighted);
    Ok(residual.abs().0)
}

fn quad_determinant(mut a: Vec<Vec<Quad>>) -> Quad {
    let n = a.len();
    let mut det = Quad::ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p][col].abs().partial_cmp(a[q][col].abs()).expect("finite"))
            .expect("non-empty range");
        if a[pivot][col] == Quad::ZERO {
            return Quad::ZERO;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            for c in col..n {
                a[r][c] = a[r][c] - f * a[col][c];
            }
        }
    }
    det
}

/// Common Randić weight `1/sqrt(d_i d_j)` when every edge carries the same one.
pub fn weight_regular<T: Real>(g: &Graph) -> Result<Option<T>> {
    if g.size() == 0 {
        return domain("weight-regularity needs at least one edge");
    }
    g.require_no_isolated()?;
    let d = g.degrees();
    let weight = |&(u, v): &(usize, usize)| T::of_usize(d[u] * d[v]).sqrt().recip();
    let first = weight(&g.edges()[0]);
    let tol = T::of(1e-12);
    Ok(g.edges().iter().all(|e| (weight(e) - first).abs() <= tol).then_some(first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn g(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn k2_and_star_matrices() {
        let k2 = DegreeAdjacencyMatrix::<f64>::new(&g(Family::Path(2))).unwrap();
        assert_eq!(*k2.matrix(), Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]));
        let s = DegreeAdjacencyMatrix::<f64>::new(&g(Family::Star(4))).unwrap();
        let w = 1.0 / 3f64.sqrt();
        for leaf in 1..4 {
            assert!((s.matrix()[(0, leaf)] - w).abs() < 1e-15);
            for other in 1..4 {
                assert_eq!(s.matrix()[(leaf, other)], 0.0);
            }
        }
        assert!(s.perron_residual() < 1e-12);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let h = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(DegreeAdjacencyMatrix::<f64>::new(&h).unwrap_err(), Error::IsolatedVertex(2));
        assert!(structural_coefficients::<f64>(&h).is_err());
        assert!(det_identity_residual(&h, 0.0f64).is_err());
    }

    #[test]
    fn fixture_spectra() {
        for f in [Family::Cycle(4), Family::Star(4)] {
            let s = degree_adjacency_spectrum::<f64>(&g(f)).unwrap();
            assert_close(&s.values, &[1.0, 0.0, 0.0, -1.0], 1e-9);
        }
        let r = 6f64.sqrt() / 6.0;
        let s = degree_adjacency_spectrum::<f64>(&g(Family::C4Pendant)).unwrap();
        assert_close(&s.values, &[1.0, r, 0.0, -r, -1.0], 1e-9);
    }

    #[test]
    fn standard_spectra() {
        let c4 = standard_eigenvalues::<f64>(&g(Family::Cycle(4))).unwrap();
        assert_close(&c4.values, &[2.0, 0.0, 0.0, -2.0], 1e-9);
        let r3 = 3f64.sqrt();
        let star = standard_eigenvalues::<f64>(&g(Family::Star(4))).unwrap();
        assert_close(&star.values, &[r3, 0.0, 0.0, -r3], 1e-9);
        let k3 = standard_eigenvalues::<f64>(&g(Family::Complete(3))).unwrap();
        assert_close(&k3.values, &[2.0, -1.0, -1.0], 1e-9);
    }

    #[test]
    fn char_poly_expansion() {
        let s = Spectrum { values: vec![1.0, 0.0, 0.0, -1.0], kind: SpectrumKind::DegreeAdjacency };
        assert_close(&char_poly_from_spectrum(&s).c, &[0.0, -1.0, 0.0, 0.0], 1e-15);
        let z = Spectrum { values: vec![0.0; 5], kind: SpectrumKind::DegreeAdjacency };
        assert!(char_poly_from_spectrum(&z).c.iter().all(|&c| c == 0.0));
        let k3 = Spectrum { values: vec![1.0, -0.5, -0.5], kind: SpectrumKind::DegreeAdjacency };
        assert_close(&char_poly_from_spectrum(&k3).c, &[0.0, -0.75, -0.25], 1e-15);
    }

    #[test]
    fn structural_fixtures() {
        let k3 = structural_coefficients::<f64>(&g(Family::Complete(3))).unwrap();
        assert_close(&[k3.c1, k3.c2, k3.c3], &[0.0, -0.75, -0.25], 1e-15);
        let c4 = structural_coefficients::<f64>(&g(Family::Cycle(4))).unwrap();
        assert_close(&[c4.c2, c4.c3], &[-1.0, 0.0], 1e-15);
        let p = structural_coefficients::<f64>(&g(Family::C4Pendant)).unwrap();
        assert_eq!(p.c3, 0.0);
    }

    #[test]
    fn path_recurrence_small_cases() {
        let p3 = path_char_poly::<f64>(3).unwrap();
        assert_close(&p3.c, &[0.0, -1.0, 0.0], 1e-15);
        // P4 by hand: x^4 - (1/2 + 1/4 + 1/2) x^2 + (1/2)(1/2)
        let p4 = path_char_poly::<f64>(4).unwrap();
        assert_close(&p4.c, &[0.0, -1.25, 0.0, 0.25], 1e-15);
        let spectral = char_poly_from_spectrum(&degree_adjacency_spectrum::<f64>(&g(Family::Path(4))).unwrap());
        assert!(p4.max_abs_diff(&spectral) < 1e-8);
        assert!(path_char_poly::<f64>(2).is_err());
    }

    #[test]
    fn det_identity_fixtures() {
        assert!(det_identity_residual(&g(Family::Cycle(4)), 0.0f64).unwrap() <= 1e-9);
        assert!(det_identity_residual(&g(Family::Star(4)), 0.37f64).unwrap() <= 1e-9);
        assert!(det_identity_residual(&g(Family::C4Pendant), -0.5f64).unwrap() <= 1e-9);
    }

    #[test]
    fn extended_determinant_identity_on_large_degree_products() {
        let k16 = g(Family::Complete(16));
        assert!(det_identity_residual_extended(&k16, 0.41).unwrap() <= 1e-8);
        // 15^16 is far past f64's exact-integer range
        assert!(det_identity_residual(&k16, 0.41f64).unwrap() > 1e-8);
        let small = det_identity_residual(&g(Family::C4Pendant), -0.37f64).unwrap();
        let extended = det_identity_residual_extended(&g(Family::C4Pendant), -0.37).unwrap();
        assert!(small <= 1e-12 && extended <= 1e-20);
        assert!(det_identity_residual_extended(&Graph::from_edges(3, [(0, 1)]).unwrap(), 0.0).is_err());
    }

    #[test]
    fn weight_regularity() {
        let w = weight_regular::<f64>(&g(Family::Star(4))).unwrap().unwrap();
        assert!((w - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        let w = weight_regular::<f64>(&g(Family::Cycle(7))).unwrap().unwrap();
        assert!((w - 0.5).abs() < 1e-15);
        assert_eq!(weight_regular::<f64>(&g(Family::C4Pendant)).unwrap(), None);
        assert!(weight_regular::<f64>(&Graph::from_edges(2, []).unwrap()).is_err());
    }

    #[test]
    fn clusters_and_multiplicity() {
        let s = degree_adjacency_spectrum::<f64>(&g(Family::Cycle(4))).unwrap();
        let c = s.clusters();
        assert_eq!(c.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(s.multiplicity_of(1.0), 1);
        assert!(s.contains(-1.0));
        assert!(s.symmetry_defect() < 1e-12);
    }

    #[test]
    fn f32_spectrum() {
        let s = degree_adjacency_spectrum::<f32>(&g(Family::Cycle(4))).unwrap();
        assert!((s.values[0] - 1.0).abs() < 1e-5);
        assert!((s.values[3] + 1.0).abs() < 1e-5);
    }
}
