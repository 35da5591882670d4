//! Hukuhara–Turrittin–Levelt normal forms of principal parts and the
//! dimension counts built on them.
//!
//! A normal form is `Λ(z) = ⊕_λ (λ(z) I + Γ_λ / z)` where each spectrum
//! `λ(z) = Σ_{i≥2} λ_i z^{−i}` is residue-free. It is computed by splitting
//! along the eigenspaces of a semisimple leading coefficient, one gauge
//! degree at a time, and recursing into the diagonal blocks.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::datum::hat_matrix;
use crate::error::{Error, Result};
use crate::exactalg::{char_eigenvalues, jordan_type, GaussianRational, Matrix, Quotient};
use crate::systems::{gauge_coadjoint, order, PrincipalPart, TruncatedGauge};

/// One summand `λ(z) I + Γ_λ / z` of a normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// `lambda[i]` is the coefficient of `z^{−(i+2)}`; no trailing zeros.
    pub lambda: Vec<GaussianRational>,
    pub dim: usize,
    pub gamma: Matrix,
}

impl Spectrum {
    /// `λ_i` for `i ≥ 2`.
    pub fn coefficient(&self, i: usize) -> GaussianRational {
        self.lambda.get(i - 2).cloned().unwrap_or_default()
    }

    pub fn is_zero_spectrum(&self) -> bool {
        self.lambda.is_empty()
    }

    /// `d_λ = ord(λ(z) + Γ_λ / z)`.
    pub fn order(&self) -> usize {
        match self.lambda.len() {
            0 => usize::from(!self.gamma.is_zero()),
            l => l + 1,
        }
    }
}

/// A normal form at a pole, with the capacity `k` of the part it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub point: GaussianRational,
    pub k: usize,
    pub spectra: Vec<Spectrum>,
}

impl NormalForm {
    pub fn dim(&self) -> usize {
        self.spectra.iter().map(|s| s.dim).sum()
    }

    /// `Λ(z)` as a principal part of capacity `k`, blocks in spectra order.
    pub fn assembled(&self) -> PrincipalPart {
        let coefficients = (1..=self.k)
            .map(|j| {
                let blocks: Vec<Matrix> = self
                    .spectra
                    .iter()
                    .map(|s| {
                        if j == 1 {
                            s.gamma.clone()
                        } else {
                            Matrix::scalar(s.dim, &s.coefficient(j))
                        }
                    })
                    .collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        PrincipalPart {
            point: self.point.clone(),
            coefficients,
        }
    }

    /// Equality up to reordering the spectra and conjugating each `Γ_λ`.
    pub fn equivalent_to(&self, other: &NormalForm) -> Result<bool> {
        if self.point != other.point || self.spectra.len() != other.spectra.len() {
            return Ok(false);
        }
        for s in &self.spectra {
            let Some(t) = other.spectra.iter().find(|t| t.lambda == s.lambda) else {
                return Ok(false);
            };
            if s.dim != t.dim || jordan_type(&s.gamma)? != jordan_type(&t.gamma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Per-spectrum data feeding the dimension formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSummary {
    pub k: usize,
    pub entries: Vec<SummaryEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryEntry {
    /// `(λ_2, …, λ_k)`, zero-padded to length `k − 1`.
    pub lambda: Vec<GaussianRational>,
    pub dim: usize,
    /// `d_λ`.
    pub order: usize,
    /// Eigenvalues of `Γ_λ` with their Jordan block sizes.
    pub jordan: Vec<(GaussianRational, Vec<usize>)>,
}

impl SpectralSummary {
    pub fn new(nf: &NormalForm, k: usize) -> Result<Self> {
        let entries = nf
            .spectra
            .iter()
            .map(|s| {
                Ok(SummaryEntry {
                    lambda: (2..=k).map(|i| s.coefficient(i)).collect(),
                    dim: s.dim,
                    order: s.order(),
                    jordan: jordan_type(&s.gamma)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { k, entries })
    }
}

/// Computes the normal form of `part`.
///
/// Fails with [`Error::NoNormalForm`] when a leading coefficient met during
/// the recursion is not semisimple, and with [`Error::IrrationalSpectrum`]
/// when its eigenvalues leave `ℚ(i)`.
pub fn compute_normal_form(part: &PrincipalPart) -> Result<NormalForm> {
    normal_form_with_gauge(part).map(|(nf, _)| nf)
}

/// The normal form together with a gauge `g` such that
/// `gauge_coadjoint(g, part) = nf.assembled()`.
pub fn normal_form_with_gauge(part: &PrincipalPart) -> Result<(NormalForm, TruncatedGauge)> {
    let (spectra, coefficients) = reduce(part)?;
    let gauge = TruncatedGauge::new(part.point.clone(), coefficients)?;
    Ok((
        NormalForm {
            point: part.point.clone(),
            k: part.k(),
            spectra,
        },
        gauge,
    ))
}

fn identity_series(n: usize, k: usize) -> Vec<Matrix> {
    let mut g = vec![Matrix::zeros(n, n); k];
    g[0] = Matrix::identity(n);
    g
}

/// Product of two gauge series truncated to `k` terms.
fn series_mul(a: &[Matrix], b: &[Matrix], k: usize) -> Vec<Matrix> {
    let n = a[0].rows();
    (0..k)
        .map(|m| {
            (0..=m).fold(Matrix::zeros(n, n), |acc, i| {
                match (a.get(i), b.get(m - i)) {
                    (Some(x), Some(y)) if !x.is_zero() && !y.is_zero() => &acc + &(x * y),
                    _ => acc,
                }
            })
        })
        .collect()
}

fn reduce(part: &PrincipalPart) -> Result<(Vec<Spectrum>, Vec<Matrix>)> {
    let n = part.dim();
    let k = part.k();
    let d = order(part);
    if d <= 1 {
        let spectrum = Spectrum {
            lambda: Vec::new(),
            dim: n,
            gamma: part.coefficient(1),
        };
        return Ok((vec![spectrum], identity_series(n, k)));
    }
    let lead = part.coefficient(d);
    let mut eigen = Vec::new();
    let mut columns = Vec::new();
    for (mu, _) in char_eigenvalues(&lead)? {
        let vecs = (&lead - &Matrix::scalar(n, &mu)).kernel();
        eigen.push((mu, vecs.len()));
        columns.extend(vecs);
    }
    if columns.len() < n {
        return Err(Error::NoNormalForm(format!(
            "leading coefficient of order {d} at {} is not semisimple",
            part.point
        )));
    }
    let c = Matrix::from_columns(&columns, n);
    let c_inv = c
        .inverse()
        .ok_or_else(|| Error::Internal("eigenbasis is singular".into()))?;
    let mut total = vec![Matrix::zeros(n, n); k];
    total[0] = c_inv.clone();
    let mut cur = gauge_coadjoint(&TruncatedGauge::constant(part.point.clone(), c_inv)?, part)?;

    let offsets: Vec<usize> = eigen
        .iter()
        .scan(0, |acc, (_, m)| {
            let o = *acc;
            *acc += m;
            Some(o)
        })
        .collect();
    let block_of: Vec<usize> = eigen
        .iter()
        .enumerate()
        .flat_map(|(b, (_, m))| std::iter::repeat(b).take(*m))
        .collect();

    if eigen.len() > 1 {
        for m in 1..d {
            let a = cur.coefficient(d - m);
            let mut x = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let (bi, bj) = (block_of[i], block_of[j]);
                    if bi != bj && !a.get(i, j).is_zero() {
                        x.set(i, j, a.get(i, j) / &(&eigen[bi].0 - &eigen[bj].0));
                    }
                }
            }
            if x.is_zero() {
                continue;
            }
            let mut step = identity_series(n, k);
            step[m] = x;
            cur = gauge_coadjoint(
                &TruncatedGauge::new(part.point.clone(), step.clone())?,
                &cur,
            )?;
            total = series_mul(&step, &total, k);
        }
    }

    let mut spectra = Vec::new();
    let mut block_gauges = Vec::new();
    for ((mu, m), &o) in eigen.iter().zip(&offsets) {
        let coefficients = (1..=k)
            .map(|j| {
                let sub = cur.coefficient(j).submatrix(o, o, *m, *m);
                if j == d {
                    &sub - &Matrix::scalar(*m, mu)
                } else {
                    sub
                }
            })
            .collect();
        let sub = PrincipalPart {
            point: part.point.clone(),
            coefficients,
        };
        let (sub_spectra, sub_gauge) = reduce(&sub)?;
        for mut s in sub_spectra {
            if s.lambda.len() < d - 1 {
                s.lambda.resize(d - 1, GaussianRational::zero());
            }
            s.lambda[d - 2] = &s.lambda[d - 2] + mu;
            while s.lambda.last().is_some_and(GaussianRational::is_zero) {
                s.lambda.pop();
            }
            spectra.push(s);
        }
        block_gauges.push(sub_gauge);
    }
    let diag: Vec<Matrix> = (0..k)
        .map(|i| {
            Matrix::block_diag(
                &block_gauges
                    .iter()
                    .map(|g| g[i].clone())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    Ok((spectra, series_mul(&diag, &total, k)))
}

/// How [`stabilizer_dim`] is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerMode {
    /// Kernel of the infinitesimal coadjoint action on `𝔤_k(V)`.
    Linear,
    /// Closed formula in terms of the normal form.
    Formula,
}

/// Matrix of `ξ ↦ ξA − Aξ` in row-major coordinates.
fn ad_matrix(a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for l in 0..n {
                let x = a.get(l, j);
                if !x.is_zero() {
                    let v = m.get(row, i * n + l) + x;
                    m.set(row, i * n + l, v);
                }
                let y = a.get(i, l);
                if !y.is_zero() {
                    let v = m.get(row, l * n + j) - y;
                    m.set(row, l * n + j, v);
                }
            }
        }
    }
    m
}

/// Dimension of the stabilizer of `part` in the truncated gauge group of
/// capacity `part.k()`.
pub fn stabilizer_dim(part: &PrincipalPart, mode: StabilizerMode) -> Result<usize> {
    let n = part.dim();
    let k = part.k();
    match mode {
        StabilizerMode::Linear => {
            let nn = n * n;
            // Σ_{m=0}^{k−j} [ξ_m, A_{j+m}] = 0 for j = 1..k.
            let mut eqs = Matrix::zeros(k * nn, k * nn);
            for j in 1..=k {
                for m in 0..=(k - j) {
                    let a = part.coefficient(j + m);
                    if !a.is_zero() {
                        eqs.paste((j - 1) * nn, m * nn, &ad_matrix(&a));
                    }
                }
            }
            Ok(k * nn - eqs.rank())
        }
        StabilizerMode::Formula => {
            let summary = SpectralSummary::new(&compute_normal_form(part)?, k)?;
            Ok(centralizer_formula(&summary))
        }
    }
}

fn centralizer_formula(summary: &SpectralSummary) -> usize {
    let mut total = 0;
    for e in &summary.entries {
        for (_, blocks) in &e.jordan {
            let longest = blocks.iter().copied().max().unwrap_or(0);
            for j in 1..=longest {
                let at_least = blocks.iter().filter(|&&b| b >= j).count();
                total += at_least * at_least;
            }
        }
    }
    for i in 2..=summary.k {
        let mut groups: BTreeMap<&[GaussianRational], usize> = BTreeMap::new();
        for e in &summary.entries {
            *groups.entry(&e.lambda[i - 2..]).or_default() += e.dim;
        }
        total += groups.values().map(|d| d * d).sum::<usize>();
    }
    total
}

/// How [`hat_kernel_dim`] is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMode {
    /// Rank of `Â − α̂ I` directly.
    Direct,
    /// Sum of simultaneous eigenspace dimensions read off the normal form.
    Eigenspace,
}

/// `dim Ker(Â − α̂)`, where `alpha` lists `α_1, α_2, …`. The Toeplitz
/// matrices are built with capacity `max(k, alpha.len())`.
pub fn hat_kernel_dim(
    part: &PrincipalPart,
    alpha: &[GaussianRational],
    mode: KernelMode,
) -> Result<usize> {
    let n = part.dim();
    let kk = part.k().max(alpha.len()).max(1);
    let alpha_at = |i: usize| alpha.get(i - 1).cloned().unwrap_or_default();
    match mode {
        KernelMode::Direct => {
            let shifted = PrincipalPart {
                point: part.point.clone(),
                coefficients: (1..=kk)
                    .map(|j| &part.coefficient(j) - &Matrix::scalar(n, &alpha_at(j)))
                    .collect(),
            };
            Ok(n * kk - hat_matrix(&shifted, kk).rank())
        }
        KernelMode::Eigenspace => {
            let summary = SpectralSummary::new(&compute_normal_form(part)?, kk)?;
            let tail: Vec<GaussianRational> = (2..=kk).map(alpha_at).collect();
            let mut total = 0;
            for e in &summary.entries {
                for i in 2..=kk {
                    if e.lambda[i - 2..] == tail[i - 2..] {
                        total += e.dim;
                    }
                }
                if e.lambda == tail {
                    total += e
                        .jordan
                        .iter()
                        .find(|(ev, _)| *ev == alpha_at(1))
                        .map_or(0, |(_, blocks)| blocks.len());
                }
            }
            Ok(total)
        }
    }
}

/// Lexicographic comparison with the highest-order coefficient first.
fn cmp_high_first(a: &[GaussianRational], b: &[GaussianRational]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Scalar principal part `α` maximizing `dim Ker(Â − α̂)` among
/// `λ(z)` and `λ(z) + λ_1/z` for the spectra `λ` and eigenvalues `λ_1` of
/// `Γ_λ`. Ties go to the lexicographically smallest coefficient vector,
/// highest order first, comparing `(re, im)`.
pub fn select_alpha(part: &PrincipalPart) -> Result<PrincipalPart> {
    let nf = compute_normal_form(part)?;
    let k = part.k();
    let mut best: Option<(usize, Vec<GaussianRational>)> = None;
    for s in &nf.spectra {
        let base: Vec<GaussianRational> = std::iter::once(GaussianRational::zero())
            .chain((2..=k).map(|i| s.coefficient(i)))
            .collect();
        let mut candidates = vec![base.clone()];
        for (ev, _) in char_eigenvalues(&s.gamma)? {
            let mut c = base.clone();
            c[0] = ev;
            candidates.push(c);
        }
        for c in candidates {
            let dim = hat_kernel_dim(part, &c, KernelMode::Direct)?;
            let better = match &best {
                None => true,
                Some((bd, bc)) => {
                    dim > *bd || (dim == *bd && cmp_high_first(&c, bc) == Ordering::Less)
                }
            };
            if better {
                best = Some((dim, c));
            }
        }
    }
    let (_, coefficients) = best.expect("a normal form has at least one spectrum");
    Ok(PrincipalPart::scalar(part.point.clone(), &coefficients))
}

/// Normal form predicted for the output of a middle convolution at the same
/// pole, given the input normal form, `β = Res_{ζ=∞} α` of the convolution
/// parameter and the output rank.
///
/// Nonzero spectra keep their dimension with `Γ_λ ↦ Γ_λ − d_λ β`. The zero
/// spectrum absorbs the remaining dimension; its residue is represented as
/// `Q'P'` where `P'Q' = P_0Q_0 − β` on `W_0 = V_0 / Ker Γ_0`.
pub fn predicted_spectra(
    nf: &NormalForm,
    alpha_residue: &GaussianRational,
    new_rank: usize,
) -> Result<NormalForm> {
    let mut spectra = Vec::new();
    let mut carried = 0;
    let mut gamma0 = Matrix::zeros(0, 0);
    for s in &nf.spectra {
        if s.is_zero_spectrum() {
            gamma0 = s.gamma.clone();
            continue;
        }
        let shift = alpha_residue * &GaussianRational::from_int(s.order() as i64);
        spectra.push(Spectrum {
            lambda: s.lambda.clone(),
            dim: s.dim,
            gamma: &s.gamma - &Matrix::scalar(s.dim, &shift),
        });
        carried += s.dim;
    }
    let m = new_rank.checked_sub(carried).ok_or_else(|| {
        Error::InconsistentRank(format!(
            "rank {new_rank} is below the carried dimension {carried}"
        ))
    })?;
    let quo = Quotient::by_kernel(&gamma0);
    let r = quo.dim();
    let x = &(&(quo.projection() * &gamma0) * quo.section()) - &Matrix::scalar(r, alpha_residue);
    let complement = Quotient::new(r, &x.image());
    let c = complement.dim();
    if m < r + c {
        return Err(Error::InconsistentRank(format!(
            "zero spectrum needs dimension at least {} but only {m} remains",
            r + c
        )));
    }
    if m > 0 {
        let mut gamma = Matrix::zeros(m, m);
        gamma.paste(0, 0, &x);
        gamma.paste(0, r, complement.section());
        spectra.push(Spectrum {
            lambda: Vec::new(),
            dim: m,
            gamma,
        });
    }
    Ok(NormalForm {
        point: nf.point.clone(),
        k: nf.k,
        spectra,
    })
}
