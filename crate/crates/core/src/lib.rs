//! Exact computations with linear differential systems
//! `dY/dz = A(z) Y`, `A(z) = S + Σ_t Σ_j A_{t,j} (z − t)^{−j}`, over `ℚ(i)`.
//!
//! The crate covers canonical realizations `Q (z − T)^{−1} P`, the Harnad
//! duality exchanging `(V, S)` and `(W, T)`, middle convolution with an
//! irregular parameter, Hukuhara–Turrittin–Levelt normal forms, rigidity
//! indices and Katz-style rank reduction. All arithmetic is exact.

pub mod datum;
pub mod error;
pub mod exactalg;
pub mod functors;
pub mod normalform;
pub mod rigidity;
pub mod sample;
pub mod systems;

pub use error::{Error, Result};
pub use exactalg::{GaussianRational, Matrix};
