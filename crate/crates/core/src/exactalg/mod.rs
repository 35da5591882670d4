//! Exact linear algebra over the Gaussian rationals `ℚ(i)`.

mod gaussian;
mod matrix;
mod poly;
mod quotient;
mod roots;
mod spectral;

pub use gaussian::{rat, GaussianRational, Rational};
pub use matrix::{echelonize, rref, solve_linear, LinearSolution, Matrix, Rref, Vector};
pub use poly::{char_poly, Poly};
pub use quotient::Quotient;
pub use roots::{gaussian_roots, root_multiplicity};
pub use spectral::{
    centralizer_basis, char_eigenvalues, generalized_eigendecomposition, jordan_type,
    nilpotency_index, nilpotent_partition, GeneralizedEigenspace,
};
