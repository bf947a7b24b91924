//! Scalar abstraction shared by the numerical modules.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real floating point scalar used by the eigensolver, the simplex solver and
/// every bound evaluation.
///
/// The tolerance hooks are per-type because the clustering and convergence
/// thresholds that make sense for `f64` sit below the resolution of `f32`.
pub trait Real: Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    /// Relative gap under which two computed eigenvalues are one cluster.
    const CLUSTER_TOL: f64;
    /// Jacobi stops once the off-diagonal Frobenius norm drops below this
    /// fraction of the full Frobenius norm.
    const JACOBI_TOL: f64;
    /// Pivot / reduced-cost threshold inside the simplex tableau.
    const PIVOT_TOL: f64;

    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// True when `a` and `b` fall in one eigenvalue cluster.
    #[inline]
    fn clusters_with(self, other: Self) -> bool {
        let scale = Self::one().max(self.abs());
        (self - other).abs() <= Self::of(Self::CLUSTER_TOL) * scale
    }
}

impl Real for f64 {
    const CLUSTER_TOL: f64 = 1e-8;
    const JACOBI_TOL: f64 = 1e-12;
    const PIVOT_TOL: f64 = 1e-11;
}

impl Real for f32 {
    const CLUSTER_TOL: f64 = 1e-4;
    const JACOBI_TOL: f64 = 1e-6;
    const PIVOT_TOL: f64 = 1e-5;
}
