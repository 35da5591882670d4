//! Seeded random generators for systems, gauges and data with small
//! Gaussian-integer entries. The same seed always yields the same stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datum::{canonical_datum, Datum};
use crate::exactalg::{GaussianRational, Matrix};
use crate::systems::{is_irreducible, residue_at_infinity, PrincipalPart, System, TruncatedGauge};

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Entries are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Probability (in percent) that a scalar gets a nonzero imaginary part.
    pub complex_percent: u32,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: 2,
            complex_percent: 0,
        }
    }

    pub fn with_complex(mut self, percent: u32) -> Self {
        self.complex_percent = percent;
        self
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn chance(&mut self, percent: u32) -> bool {
        self.rng.gen_range(0..100) < percent
    }

    pub fn scalar(&mut self) -> GaussianRational {
        let re = self.int();
        let im = if self.chance(self.complex_percent) {
            self.int()
        } else {
            0
        };
        GaussianRational::int_pair(re, im)
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let data = (0..rows * cols).map(|_| self.scalar()).collect();
        Matrix::from_vec(rows, cols, data)
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// `n` distinct integer points.
    pub fn points(&mut self, n: usize) -> Vec<GaussianRational> {
        let mut out: Vec<GaussianRational> = Vec::new();
        while out.len() < n {
            let t = GaussianRational::from_int(self.rng.gen_range(-4..=4));
            if !out.contains(&t) {
                out.push(t);
            }
        }
        out
    }

    /// A part of exact capacity `k` with nonzero leading coefficient.
    pub fn principal_part(&mut self, point: GaussianRational, n: usize, k: usize) -> PrincipalPart {
        let mut coefficients: Vec<Matrix> = (0..k).map(|_| self.matrix(n, n)).collect();
        while n > 0 && coefficients[k - 1].is_zero() {
            coefficients[k - 1] = self.matrix(n, n);
        }
        PrincipalPart {
            point,
            coefficients,
        }
    }

    /// A system of rank `n` with up to `max_poles` poles of order at most
    /// `max_order`; the constant term is included when `with_constant`.
    pub fn system(
        &mut self,
        n: usize,
        max_poles: usize,
        max_order: usize,
        with_constant: bool,
    ) -> System {
        let poles = self.range(1, max_poles);
        let parts = self
            .points(poles)
            .into_iter()
            .map(|t| {
                let k = self.range(1, max_order);
                self.principal_part(t, n, k)
            })
            .collect();
        let constant = if with_constant {
            self.matrix(n, n)
        } else {
            Matrix::zeros(n, n)
        };
        System::new(n, constant, parts).expect("sampled system is well formed")
    }

    /// A system in `𝒟⁰`: zero constant, residues summing to zero.
    pub fn d0_system(&mut self, n: usize, poles: usize, max_order: usize) -> System {
        let mut sys = self.system(n, poles, max_order, false);
        let defect = residue_at_infinity(&sys);
        let last = sys.parts.last_mut().expect("at least one pole");
        last.coefficients[0] = &last.coefficients[0] + &defect;
        sys
    }

    /// Rejection-samples an irreducible system from `draw`.
    pub fn irreducible(&mut self, mut draw: impl FnMut(&mut Self) -> System) -> System {
        loop {
            let s = draw(self);
            if is_irreducible(&s) {
                return s;
            }
        }
    }

    /// An irreducible Fuchsian pair in `𝒟⁰` with `poles` poles.
    pub fn irreducible_fuchsian(&mut self, n: usize, poles: usize) -> System {
        self.irreducible(|s| s.d0_system(n, poles, 1))
    }

    /// An element of `G_k(V)` at `point`.
    pub fn gauge(&mut self, point: GaussianRational, n: usize, k: usize) -> TruncatedGauge {
        let mut coefficients = vec![self.invertible(n)];
        coefficients.extend((1..k).map(|_| self.matrix(n, n)));
        TruncatedGauge::new(point, coefficients).expect("leading coefficient is invertible")
    }

    /// A stable datum, realized as the canonical datum of a random system.
    pub fn stable_datum(&mut self, n: usize, max_poles: usize, max_order: usize) -> Datum {
        loop {
            let d = canonical_datum(&self.system(n, max_poles, max_order, false));
            if d.dim_w() > 0 {
                return d;
            }
        }
    }

    /// One invertible matrix per block of `d`.
    pub fn block_conjugation(&mut self, d: &Datum) -> Vec<Matrix> {
        d.blocks.iter().map(|b| self.invertible(b.w())).collect()
    }
}
