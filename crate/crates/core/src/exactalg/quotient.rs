//! Concrete quotient spaces `U / K`.
//!
//! The quotient is identified with the span of the standard basis vectors at
//! the coordinates that are *not* pivots of the reduced echelon basis of `K`.
//! Those vectors form a complement of `K`, which gives a fixed section and a
//! fixed projection.

use super::gaussian::GaussianRational;
use super::matrix::{echelonize, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    ambient: usize,
    kept: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl Quotient {
    /// Quotient of `ℚ(i)^ambient` by the span of `subspace`.
    pub fn new(ambient: usize, subspace: &[Vector]) -> Self {
        let basis = echelonize(subspace, ambient);
        let pivots: Vec<usize> = basis
            .iter()
            .map(|v| {
                v.iter()
                    .position(|x| !x.is_zero())
                    .expect("echelon rows are nonzero")
            })
            .collect();
        let kept: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        // π(w) = (w − Σ_i w_{p_i} k_i) restricted to the kept coordinates.
        let mut projection = Matrix::zeros(kept.len(), ambient);
        for (r, &j) in kept.iter().enumerate() {
            projection.set(r, j, GaussianRational::one());
            for (k, &p) in basis.iter().zip(&pivots) {
                projection.set(r, p, -&k[j]);
            }
        }
        let mut section = Matrix::zeros(ambient, kept.len());
        for (c, &j) in kept.iter().enumerate() {
            section.set(j, c, GaussianRational::one());
        }
        Self {
            ambient,
            kept,
            projection,
            section,
        }
    }

    /// Quotient of the source of `m` by `Ker m`.
    pub fn by_kernel(m: &Matrix) -> Self {
        Self::new(m.cols(), &m.kernel())
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `U → U/K`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `U/K → U`, a right inverse of the projection.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Matrix of the endomorphism of `U/K` induced by `m` (which must map `K`
    /// into itself).
    pub fn induced(&self, m: &Matrix) -> Matrix {
        &(&self.projection * m) * &self.section
    }
}
