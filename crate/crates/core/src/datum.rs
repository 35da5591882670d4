//! Realizations `A(z) = Q (z − T)^{−1} P` of principal parts.
//!
//! A [`Datum`] stores `(V, W, T, Q, P)` split along the poles: each
//! [`Block`] carries `W_t`, the nilpotent part `N_t` of `T|_{W_t} = t + N_t`,
//! and the restrictions `Q_t`, `P_t`. [`canonical`] builds the stable
//! realization from the block-Toeplitz matrix `Â_t`; [`psi`] reads a
//! [`HarnadDatum`] from the other side, producing the dual system on `W`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactalg::{
    centralizer_basis, generalized_eigendecomposition, nilpotency_index, GaussianRational,
    GeneralizedEigenspace, Matrix, Quotient,
};
use crate::systems::{is_irreducible, PrincipalPart, System, TruncatedGauge};

/// The part of a datum living over one pole `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub point: GaussianRational,
    /// `N_t` on `W_t`.
    pub nilpotent: Matrix,
    /// `Q_t : W_t → V`.
    pub q: Matrix,
    /// `P_t : V → W_t`.
    pub p: Matrix,
}

impl Block {
    pub fn new(point: GaussianRational, nilpotent: Matrix, q: Matrix, p: Matrix) -> Result<Self> {
        let w = nilpotent.rows();
        if !nilpotent.is_square() || q.cols() != w || p.rows() != w || q.rows() != p.cols() {
            return Err(Error::DimensionMismatch(format!(
                "inconsistent block shapes at {point}"
            )));
        }
        nilpotency_index(&nilpotent)?;
        Ok(Self {
            point,
            nilpotent,
            q,
            p,
        })
    }

    /// `dim W_t`.
    pub fn w(&self) -> usize {
        self.nilpotent.rows()
    }

    /// Smallest `k ≥ 1` with `N_t^k = 0`.
    pub fn depth(&self) -> usize {
        nilpotency_index(&self.nilpotent)
            .expect("validated nilpotent")
            .max(1)
    }
}

/// A datum `(V, W, T, Q, P)` in pole-blocked form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Datum {
    pub dim_v: usize,
    pub blocks: Vec<Block>,
}

impl Datum {
    pub fn new(dim_v: usize, blocks: Vec<Block>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.q.rows() != dim_v {
                return Err(Error::DimensionMismatch(format!(
                    "block at {} maps into the wrong V",
                    b.point
                )));
            }
            if !seen.insert(b.point.clone()) {
                return Err(Error::InvalidSystem(format!(
                    "duplicate block point {}",
                    b.point
                )));
            }
        }
        Ok(Self { dim_v, blocks })
    }

    pub fn zero(dim_v: usize) -> Self {
        Self {
            dim_v,
            blocks: Vec::new(),
        }
    }

    /// `dim W`.
    pub fn dim_w(&self) -> usize {
        self.blocks.iter().map(Block::w).sum()
    }

    pub fn block_at(&self, t: &GaussianRational) -> Option<&Block> {
        self.blocks.iter().find(|b| &b.point == t)
    }

    /// `T = ⊕_t (t + N_t)`.
    pub fn assembled_t(&self) -> Matrix {
        let parts: Vec<Matrix> = self
            .blocks
            .iter()
            .map(|b| &Matrix::scalar(b.w(), &b.point) + &b.nilpotent)
            .collect();
        Matrix::block_diag(&parts)
    }

    /// `Q : W → V`.
    pub fn assembled_q(&self) -> Matrix {
        self.blocks
            .iter()
            .fold(Matrix::zeros(self.dim_v, 0), |acc, b| acc.hstack(&b.q))
    }

    /// `P : V → W`.
    pub fn assembled_p(&self) -> Matrix {
        self.blocks
            .iter()
            .fold(Matrix::zeros(0, self.dim_v), |acc, b| acc.vstack(&b.p))
    }

    /// Applies a change of basis `c_t` on each `W_t` (given in block order):
    /// `N ↦ cNc^{−1}`, `Q ↦ Qc^{−1}`, `P ↦ cP`.
    pub fn transform(&self, cs: &[Matrix]) -> Result<Datum> {
        if cs.len() != self.blocks.len() {
            return Err(Error::DimensionMismatch(
                "one change of basis per block is required".into(),
            ));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(cs)
            .map(|(b, c)| {
                let c_inv = c.inverse().ok_or(Error::SingularGauge)?;
                Ok(Block {
                    point: b.point.clone(),
                    nilpotent: &(c * &b.nilpotent) * &c_inv,
                    q: &b.q * &c_inv,
                    p: c * &b.p,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Datum {
            dim_v: self.dim_v,
            blocks,
        })
    }
}

/// `(Q, P) ↦ Q (z − T)^{−1} P`, i.e. `A_{t,j} = Q_t N_t^{j−1} P_t`, with zero
/// constant term.
pub fn phi(d: &Datum) -> System {
    let n = d.dim_v;
    let parts = d
        .blocks
        .iter()
        .map(|b| {
            let mut coefficients = Vec::new();
            let mut qn = b.q.clone();
            for _ in 0..b.depth() {
                coefficients.push(&qn * &b.p);
                qn = &qn * &b.nilpotent;
            }
            PrincipalPart {
                point: b.point.clone(),
                coefficients,
            }
        })
        .collect();
    System {
        dimension: n,
        constant: Matrix::zeros(n, n),
        parts,
        exponents: None,
    }
}

/// The block upper-triangular Toeplitz matrix `Â` on `V^{⊕k}` whose first
/// block row is `(A_k, A_{k−1}, …, A_1)`.
pub fn hat_matrix(part: &PrincipalPart, k: usize) -> Matrix {
    let n = part.dim();
    let mut a_hat = Matrix::zeros(n * k, n * k);
    for r in 0..k {
        for c in r..k {
            a_hat.paste(r * n, c * n, &part.coefficient(k - (c - r)));
        }
    }
    a_hat
}

/// Canonical block over one principal part, or `None` when `Â_t = 0`.
fn canonical_block(part: &PrincipalPart) -> Option<Block> {
    let n = part.dim();
    let k = part.k();
    let big = n * k;
    let a_hat = hat_matrix(part, k);
    if a_hat.is_zero() {
        return None;
    }
    let mut q_hat = Matrix::zeros(n, big);
    for b in 0..k {
        q_hat.paste(0, b * n, &part.coefficient(k - b));
    }
    let mut p_hat = Matrix::zeros(big, n);
    p_hat.paste((k - 1) * n, 0, &Matrix::identity(n));
    let mut n_hat = Matrix::zeros(big, big);
    for b in 0..k.saturating_sub(1) {
        n_hat.paste(b * n, (b + 1) * n, &Matrix::identity(n));
    }
    let quotient = Quotient::by_kernel(&a_hat);
    Some(Block {
        point: part.point.clone(),
        nilpotent: quotient.induced(&n_hat),
        q: &q_hat * quotient.section(),
        p: quotient.projection() * &p_hat,
    })
}

/// The canonical datum of the principal parts of a system (its constant term
/// is ignored). Parts with `Â_t = 0` contribute no block.
pub fn canonical_datum(sys: &System) -> Datum {
    Datum {
        dim_v: sys.dimension,
        blocks: sys.parts.iter().filter_map(canonical_block).collect(),
    }
}

/// `κ(V, A)`: the canonical datum together with `S`.
pub fn canonical(sys: &System) -> HarnadDatum {
    HarnadDatum::new(
        canonical_datum(sys),
        sys.constant.clone(),
        sys.exponents.clone(),
    )
}

/// Stability: `Ker Q_t ∩ Ker N_t = 0` and `Im P_t + Im N_t = W_t` at each block.
pub fn is_stable(d: &Datum) -> Result<bool> {
    if d.dim_v == 0 {
        return Err(Error::EmptyV);
    }
    Ok(d.blocks.iter().all(|b| {
        let w = b.w();
        b.q.vstack(&b.nilpotent).rank() == w && b.p.hstack(&b.nilpotent).rank() == w
    }))
}

/// Action of a truncated gauge at one pole:
/// `Q_t ↦ Σ_m g_m Q_t N_t^m`, `P_t ↦ Σ_m N_t^m P_t (g^{−1})_m`.
pub fn gk_action(g: &TruncatedGauge, d: &Datum) -> Result<Datum> {
    let idx = d
        .blocks
        .iter()
        .position(|b| b.point == g.point)
        .ok_or_else(|| Error::PoleMismatch(format!("no block at {}", g.point)))?;
    if g.dim() != d.dim_v {
        return Err(Error::DimensionMismatch("gauge does not act on V".into()));
    }
    let b = &d.blocks[idx];
    let k = b.depth();
    let h = g.inverse_series(k);
    let mut q = Matrix::zeros(b.q.rows(), b.q.cols());
    let mut p = Matrix::zeros(b.p.rows(), b.p.cols());
    let mut n_pow = Matrix::identity(b.w());
    for (m, h_m) in h.iter().enumerate() {
        q = &q + &(&(&g.coefficient(m) * &b.q) * &n_pow);
        p = &p + &(&(&n_pow * &b.p) * h_m);
        n_pow = &n_pow * &b.nilpotent;
    }
    let mut out = d.clone();
    out.blocks[idx] = Block { q, p, ..b.clone() };
    Ok(out)
}

/// Moment value at one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentBlock {
    pub point: GaussianRational,
    /// `−P_t Q_t`.
    pub value: Matrix,
    /// `tr(−P_t Q_t · X_i)` over [`centralizer_basis`]`(N_t)`.
    pub pairings: Vec<GaussianRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentValue {
    pub blocks: Vec<MomentBlock>,
}

/// The moment map: `−PQ` paired against the centralizer of `T`, blockwise.
pub fn moment_mu(d: &Datum) -> MomentValue {
    let blocks = d
        .blocks
        .iter()
        .map(|b| {
            let value = -&(&b.p * &b.q);
            let pairings = pair_with(&value, &centralizer_basis(&b.nilpotent));
            MomentBlock {
                point: b.point.clone(),
                value,
                pairings,
            }
        })
        .collect();
    MomentValue { blocks }
}

/// `tr(m · X_i)` for each `X_i` in `basis`.
pub fn pair_with(m: &Matrix, basis: &[Matrix]) -> Vec<GaussianRational> {
    basis.iter().map(|x| (m * x).trace()).collect()
}

/// An isomorphism `f : W → W'` with `Q' f = Q`, `f P = P'`, `f T = T' f`,
/// between stable data, as one matrix with columns indexed by the blocks of
/// `d1` and rows by the blocks of `d2`. `None` when no isomorphism exists.
pub fn datum_isomorphism(d1: &Datum, d2: &Datum) -> Result<Option<Matrix>> {
    if d1.dim_v != d2.dim_v {
        return Err(Error::DimensionMismatch(format!(
            "dim V {} versus {}",
            d1.dim_v, d2.dim_v
        )));
    }
    if !is_stable(d1)? || !is_stable(d2)? {
        return Err(Error::NotStable);
    }
    let nonzero = |d: &Datum| -> BTreeSet<GaussianRational> {
        d.blocks
            .iter()
            .filter(|b| b.w() > 0)
            .map(|b| b.point.clone())
            .collect()
    };
    if nonzero(d1) != nonzero(d2) || d1.dim_w() != d2.dim_w() {
        return Ok(None);
    }
    let offsets = |d: &Datum| -> Vec<usize> {
        d.blocks
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.w();
                Some(o)
            })
            .collect()
    };
    let (off1, off2) = (offsets(d1), offsets(d2));
    let mut f = Matrix::zeros(d2.dim_w(), d1.dim_w());
    for (i1, b1) in d1.blocks.iter().enumerate() {
        if b1.w() == 0 {
            continue;
        }
        let i2 = d2
            .blocks
            .iter()
            .position(|b| b.point == b1.point)
            .expect("same nonzero points");
        let b2 = &d2.blocks[i2];
        match block_isomorphism(b1, b2) {
            Some(ft) => f.paste(off2[i2], off1[i1], &ft),
            None => return Ok(None),
        }
    }
    Ok(f.is_invertible().then_some(f))
}

fn block_isomorphism(b1: &Block, b2: &Block) -> Option<Matrix> {
    let (w1, w2) = (b1.w(), b2.w());
    if w1 != w2 {
        return None;
    }
    let n = b1.q.rows();
    let unknowns = w2 * w1;
    let var = |i: usize, j: usize| i * w1 + j;
    let rows = unknowns + w2 * n + n * w1;
    let mut sys = Matrix::zeros(rows, unknowns);
    let mut rhs = vec![GaussianRational::zero(); rows];
    let add = |m: &mut Matrix, r: usize, c: usize, v: &GaussianRational| {
        if !v.is_zero() {
            let cur = m.get(r, c) + v;
            m.set(r, c, cur);
        }
    };
    // f N1 − N2 f = 0
    for i in 0..w2 {
        for j in 0..w1 {
            let r = i * w1 + j;
            for k in 0..w1 {
                add(&mut sys, r, var(i, k), b1.nilpotent.get(k, j));
            }
            for k in 0..w2 {
                add(&mut sys, r, var(k, j), &-b2.nilpotent.get(i, k));
            }
        }
    }
    // f P1 = P2
    for i in 0..w2 {
        for a in 0..n {
            let r = unknowns + i * n + a;
            for j in 0..w1 {
                add(&mut sys, r, var(i, j), b1.p.get(j, a));
            }
            rhs[r] = b2.p.get(i, a).clone();
        }
    }
    // Q2 f = Q1
    for a in 0..n {
        for j in 0..w1 {
            let r = unknowns + w2 * n + a * w1 + j;
            for i in 0..w2 {
                add(&mut sys, r, var(i, j), b2.q.get(a, i));
            }
            rhs[r] = b1.q.get(a, j).clone();
        }
    }
    let sol = sys.solve(&rhs).particular?;
    let f = Matrix::from_vec(w2, w1, sol);
    f.is_invertible().then_some(f)
}

/// A datum together with the constant term `S` on `V` (and an optional
/// exponent declaration for `S`). The splitting of `V` into generalized
/// eigenspaces of `S` is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct HarnadDatum {
    pub datum: Datum,
    pub s_matrix: Matrix,
    pub exponents: Option<Vec<(GaussianRational, usize)>>,
    s_blocking: OnceLock<Result<Vec<GeneralizedEigenspace>>>,
}

impl PartialEq for HarnadDatum {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum
            && self.s_matrix == other.s_matrix
            && self.exponents == other.exponents
    }
}

impl Eq for HarnadDatum {}

impl HarnadDatum {
    pub fn new(
        datum: Datum,
        s_matrix: Matrix,
        exponents: Option<Vec<(GaussianRational, usize)>>,
    ) -> Self {
        Self {
            datum,
            s_matrix,
            exponents,
            s_blocking: OnceLock::new(),
        }
    }

    /// Generalized eigenspaces of `S`.
    pub fn s_blocking(&self) -> Result<&[GeneralizedEigenspace]> {
        match self
            .s_blocking
            .get_or_init(|| generalized_eigendecomposition(&self.s_matrix))
        {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// `Φ(h)`: the pair `(V, S + Q (z − T)^{−1} P)`.
    pub fn phi(&self) -> System {
        let mut s = phi(&self.datum);
        s.constant = self.s_matrix.clone();
        s.exponents = self.exponents.clone();
        s
    }
}

/// Irreducibility of a Harnad datum: stability plus irreducibility of
/// `Φ(h)`; with `W = 0` only `dim V = 1` qualifies.
pub fn harnad_irreducible(h: &HarnadDatum) -> Result<bool> {
    if h.datum.dim_v == 0 {
        return Err(Error::EmptyV);
    }
    if h.datum.dim_w() == 0 {
        return Ok(h.datum.dim_v == 1);
    }
    Ok(is_stable(&h.datum)? && is_irreducible(&h.phi()))
}

/// The dual pair `(W, T + P (ζ − S)^{−1} Q)`.
///
/// At each eigenvalue `s` of `S`, with `S = s + M_s` on the generalized
/// eigenspace `V_s`, the coefficient of `(ζ − s)^{−j}` is
/// `P_s M_s^{j−1} Q_s`.
pub fn psi(h: &HarnadDatum) -> Result<System> {
    let d = &h.datum;
    let w = d.dim_w();
    if w == 0 {
        return Ok(System::zero_pair());
    }
    let n = d.dim_v;
    let spaces = h.s_blocking()?;
    let basis: Vec<_> = spaces
        .iter()
        .flat_map(|s| s.basis.iter().cloned())
        .collect();
    let c = Matrix::from_columns(&basis, n);
    let c_inv = c
        .inverse()
        .ok_or_else(|| Error::Internal("generalized eigenbasis is singular".into()))?;
    let s_new = &(&c_inv * &h.s_matrix) * &c;
    let q_new = &c_inv * &d.assembled_q();
    let p_new = &d.assembled_p() * &c;
    let declared = |s: &GaussianRational| -> usize {
        h.exponents
            .as_ref()
            .and_then(|e| e.iter().find(|(x, _)| x == s).map(|(_, l)| *l))
            .unwrap_or(1)
    };
    let mut parts = Vec::new();
    let mut offset = 0;
    for space in spaces {
        let m = space.basis.len();
        let ms = &s_new.submatrix(offset, offset, m, m) - &Matrix::scalar(m, &space.eigenvalue);
        let qs = q_new.submatrix(offset, 0, m, w);
        let ps = p_new.submatrix(0, offset, w, m);
        let l = nilpotency_index(&ms)?
            .max(1)
            .max(declared(&space.eigenvalue));
        let mut coefficients = Vec::with_capacity(l);
        let mut pm = ps;
        for _ in 0..l {
            coefficients.push(&pm * &qs);
            pm = &pm * &ms;
        }
        parts.push(PrincipalPart {
            point: space.eigenvalue.clone(),
            coefficients,
        });
        offset += m;
    }
    let exponents = d
        .blocks
        .iter()
        .map(|b| (b.point.clone(), b.depth()))
        .collect();
    Ok(System {
        dimension: w,
        constant: d.assembled_t(),
        parts,
        exponents: Some(exponents),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn rank_one_block() -> Block {
        Block::new(
            g(0),
            Matrix::jordan_block(2),
            Matrix::from_ints(&[[2, 3]]),
            Matrix::from_ints(&[[0], [1]]),
        )
        .unwrap()
    }

    fn scalar_system(coeffs: &[i64]) -> System {
        let c: Vec<_> = coeffs.iter().map(|&x| g(x)).collect();
        System::new(
            1,
            Matrix::zeros(1, 1),
            vec![PrincipalPart::scalar(g(0), &c)],
        )
        .unwrap()
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&Datum::zero(2)).parts.is_empty());
        let d = Datum::new(1, vec![rank_one_block()]).unwrap();
        assert!(phi(&d).agrees_with(&scalar_system(&[3, 2])));
    }

    #[test]
    fn canonical_examples() {
        let d = canonical_datum(&scalar_system(&[3, 2]));
        assert_eq!(d.blocks, vec![rank_one_block()]);
        assert!(canonical_datum(&scalar_system(&[0, 0])).blocks.is_empty());

        let s = System::fuchsian(2, vec![(g(0), Matrix::unit(2, 0, 0))]).unwrap();
        let d = canonical_datum(&s);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].q, Matrix::from_ints(&[[1], [0]]));
        assert_eq!(d.blocks[0].p, Matrix::from_ints(&[[1, 0]]));
    }

    #[test]
    fn canonical_ignores_padding() {
        let padded = scalar_system(&[3, 2, 0, 0]);
        assert_eq!(
            canonical_datum(&padded),
            canonical_datum(&scalar_system(&[3, 2]))
        );
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&Datum::zero(2)).unwrap());
        assert_eq!(is_stable(&Datum::zero(0)), Err(Error::EmptyV));
        let bad = Block::new(
            g(0),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::from_ints(&[[1]]),
        )
        .unwrap();
        assert!(!is_stable(&Datum::new(1, vec![bad]).unwrap()).unwrap());
        assert!(is_stable(&Datum::new(1, vec![rank_one_block()]).unwrap()).unwrap());
    }

    #[test]
    fn gauge_action_examples() {
        let d = Datum::new(1, vec![rank_one_block()]).unwrap();
        let gauge =
            TruncatedGauge::new(g(0), vec![Matrix::identity(1), Matrix::identity(1)]).unwrap();
        let out = gk_action(&gauge, &d).unwrap();
        assert_eq!(out.blocks[0].q, Matrix::from_ints(&[[2, 5]]));

        let a = Matrix::from_ints(&[[3]]);
        let out = gk_action(&TruncatedGauge::constant(g(0), a).unwrap(), &d).unwrap();
        assert_eq!(out.blocks[0].q, Matrix::from_ints(&[[6, 9]]));
        assert_eq!(out.blocks[0].p.get(1, 0), &GaussianRational::frac(1, 3));
    }

    #[test]
    fn moment_examples() {
        let d = Datum::new(1, vec![rank_one_block()]).unwrap();
        let mu = moment_mu(&d);
        assert_eq!(mu.blocks[0].value, Matrix::from_ints(&[[0, 0], [-2, -3]]));
        let basis = [Matrix::identity(2), Matrix::jordan_block(2)];
        assert_eq!(pair_with(&mu.blocks[0].value, &basis), vec![g(-3), g(-2)]);
        let z = Block::new(
            g(0),
            Matrix::jordan_block(2),
            Matrix::zeros(1, 2),
            Matrix::zeros(2, 1),
        )
        .unwrap();
        let mu = moment_mu(&Datum::new(1, vec![z]).unwrap());
        assert!(mu.blocks[0].pairings.iter().all(GaussianRational::is_zero));
    }

    #[test]
    fn isomorphism_examples() {
        let d = Datum::new(1, vec![rank_one_block()]).unwrap();
        assert_eq!(
            datum_isomorphism(&d, &d).unwrap(),
            Some(Matrix::identity(2))
        );
        let c = Matrix::from_ints(&[[1, 2], [0, 1]]);
        let d2 = d.transform(&[c.clone()]).unwrap();
        assert_eq!(datum_isomorphism(&d, &d2).unwrap(), Some(c));
    }

    #[test]
    fn harnad_irreducibility() {
        let s = System::fuchsian(
            2,
            vec![(g(0), Matrix::unit(2, 0, 1)), (g(1), Matrix::unit(2, 1, 0))],
        )
        .unwrap();
        assert!(harnad_irreducible(&canonical(&s)).unwrap());
        let zq = Block::new(
            g(0),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::from_ints(&[[1]]),
        )
        .unwrap();
        let h = HarnadDatum::new(Datum::new(1, vec![zq]).unwrap(), Matrix::zeros(1, 1), None);
        assert!(!harnad_irreducible(&h).unwrap());
        let h = HarnadDatum::new(Datum::zero(1), Matrix::from_ints(&[[4]]), None);
        assert!(harnad_irreducible(&h).unwrap());
    }

    #[test]
    fn psi_examples() {
        let s = System::fuchsian(
            2,
            vec![(g(0), Matrix::unit(2, 0, 1)), (g(1), Matrix::unit(2, 1, 0))],
        )
        .unwrap();
        let h = canonical(&s);
        let dual = psi(&h).unwrap();
        let d = &h.datum;
        assert_eq!(dual.constant, d.assembled_t());
        assert_eq!(
            dual.coefficient(&g(0), 1),
            &d.assembled_p() * &d.assembled_q()
        );
        assert!(
            psi(&HarnadDatum::new(Datum::zero(2), Matrix::zeros(2, 2), None))
                .unwrap()
                .is_zero_pair()
        );
    }
}
