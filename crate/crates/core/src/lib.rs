//! Degree-adjacency spectra of simple graphs and the invariants they bound.
//!
//! The degree-adjacency matrix of a graph has entry `1/sqrt(d_i d_j)` on each
//! edge. This crate computes its spectrum and characteristic polynomial, the
//! Randić index family, k-alternating polynomials on the eigenvalue mesh, and
//! the resulting upper bounds on conditional excess, degree diameter and
//! conditional Wiener index. Every bound can be compared with an exact
//! breadth-first-search oracle.
//!
//! Numerical code is generic over [`Real`] (`f64` and `f32`); the aliases at
//! the crate root fix the scalar for everyday use.
//!
//! ```
//! use degspec::{Family, Mesh64, alternating_polynomial_lp, degree_adjacency_spectrum};
//!
//! let g = Family::C4Pendant.build().unwrap();
//! let spectrum = degree_adjacency_spectrum::<f64>(&g).unwrap();
//! let mesh = Mesh64::from_spectrum(&spectrum).unwrap();
//! let p1 = alternating_polynomial_lp(&mesh, 1).unwrap();
//! assert!((p1.value_at_1 - 1.8404).abs() < 1e-3);
//! ```

pub mod altpoly;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracles;
pub mod randic;
pub mod scalar;
pub mod simplex;
pub mod spectral;
pub mod suite;

pub use altpoly::{
    alternating_polynomial_lp, alternating_polynomial_oracle, mesh_from_spectrum, p1_closed_form, values_at_one,
    AlternatingPolynomial, Mesh, ORACLE_MAX_POINTS,
};
pub use bounds::{
    conditional_wiener_bound, degree_diameter_bound, excess_bound, excess_bound_regular, verify_all, BoundContext,
    BoundKind, BoundParams, BoundReport,
};
pub use error::{Error, Result};
pub use graph::{build_family, parse_edge_list, random_connected_graphs, DegreeProfile, Family, Graph};
pub use oracles::{
    all_pairs_distances, conditional_excess, conditional_wiener, degree_diameter, graph_excess, ExactInvariants,
};
pub use randic::{
    generalized_randic, higher_order_randic, randic_bounds, randic_index, second_zagreb, zeroth_order, BoundCheck,
    RandicReport,
};
pub use scalar::Real;
pub use spectral::{
    char_poly_from_spectrum, degree_adjacency, degree_adjacency_spectrum, det_identity_residual,
    det_identity_residual_extended, eigenvalues, path_char_poly, standard_eigenvalues, structural_coefficients,
    weight_regular, CharPolyCoefficients, DegreeAdjacencyMatrix, Spectrum, SpectrumKind, StructuralCoefficients,
};

pub type Matrix64 = linalg::Matrix<f64>;
pub type Matrix32 = linalg::Matrix<f32>;
pub type DegreeAdjacency64 = DegreeAdjacencyMatrix<f64>;
pub type DegreeAdjacency32 = DegreeAdjacencyMatrix<f32>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type CharPoly64 = CharPolyCoefficients<f64>;
pub type CharPoly32 = CharPolyCoefficients<f32>;
pub type Mesh64 = Mesh<f64>;
pub type Mesh32 = Mesh<f32>;
pub type AltPoly64 = AlternatingPolynomial<f64>;
pub type AltPoly32 = AlternatingPolynomial<f32>;
pub type BoundContext64 = BoundContext<f64>;
