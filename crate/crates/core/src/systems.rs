//! Pairs `(V, A)` with `A(z) = S + Σ_t Σ_j A_{t,j} (z − t)^{−j}`, the
//! truncated gauge groups acting on principal parts, and the equivalence and
//! irreducibility tests for pairs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, Matrix, Vector};

/// The principal part `Σ_{j=1}^{k} A_j (z − t)^{−j}` at a pole `t`.
///
/// `coefficients[j − 1]` multiplies `(z − t)^{−j}`. Trailing zero
/// coefficients are allowed: `k` is storage capacity, [`order`] the actual
/// pole order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPart {
    pub point: GaussianRational,
    pub coefficients: Vec<Matrix>,
}

impl PrincipalPart {
    pub fn new(point: GaussianRational, coefficients: Vec<Matrix>) -> Result<Self> {
        let Some(first) = coefficients.first() else {
            return Err(Error::InvalidSystem(
                "a principal part needs at least one coefficient".into(),
            ));
        };
        let n = first.rows();
        if coefficients.iter().any(|c| c.rows() != n || c.cols() != n) {
            return Err(Error::DimensionMismatch(
                "principal part coefficients differ in shape".into(),
            ));
        }
        Ok(Self {
            point,
            coefficients,
        })
    }

    /// Rank-one principal part with the given scalar coefficients
    /// `α_1, …, α_k`.
    pub fn scalar(point: GaussianRational, coefficients: &[GaussianRational]) -> Self {
        let coefficients = if coefficients.is_empty() {
            vec![Matrix::zeros(1, 1)]
        } else {
            coefficients.iter().map(|c| Matrix::scalar(1, c)).collect()
        };
        Self {
            point,
            coefficients,
        }
    }

    /// Zero principal part of capacity `k`.
    pub fn zero(point: GaussianRational, dim: usize, k: usize) -> Self {
        Self {
            point,
            coefficients: vec![Matrix::zeros(dim, dim); k.max(1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.coefficients[0].rows()
    }

    /// Storage capacity `k_t`.
    pub fn k(&self) -> usize {
        self.coefficients.len()
    }

    /// `A_j`, zero beyond the stored capacity.
    pub fn coefficient(&self, j: usize) -> Matrix {
        assert!(j >= 1, "coefficients are indexed from 1");
        self.coefficients
            .get(j - 1)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(), self.dim()))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Matrix::is_zero)
    }

    /// Copy with capacity exactly `k` (padding with zeros or dropping
    /// coefficients beyond `k`).
    pub fn with_capacity(&self, k: usize) -> Self {
        let coefficients = (1..=k.max(1)).map(|j| self.coefficient(j)).collect();
        Self {
            point: self.point.clone(),
            coefficients,
        }
    }

    /// Scalar coefficients of a rank-one part.
    pub fn scalar_coefficients(&self) -> Vec<GaussianRational> {
        self.coefficients
            .iter()
            .map(|c| c.get(0, 0).clone())
            .collect()
    }

    pub fn conjugate(&self, c: &Matrix, c_inv: &Matrix) -> Self {
        Self {
            point: self.point.clone(),
            coefficients: self.coefficients.iter().map(|a| &(c * a) * c_inv).collect(),
        }
    }
}

/// Pole order: the largest `j` with `A_j ≠ 0`, or 0 for a zero part.
pub fn order(part: &PrincipalPart) -> usize {
    part.coefficients
        .iter()
        .rposition(|c| !c.is_zero())
        .map_or(0, |j| j + 1)
}

/// A pair `(V, A)`: constant term `S` plus principal parts at distinct
/// points, optionally with a declared exponent vector `(s, l_s)` demanding
/// `Π_s (S − s)^{l_s} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System {
    pub dimension: usize,
    pub constant: Matrix,
    pub parts: Vec<PrincipalPart>,
    pub exponents: Option<Vec<(GaussianRational, usize)>>,
}

impl System {
    pub fn new(dimension: usize, constant: Matrix, parts: Vec<PrincipalPart>) -> Result<Self> {
        if constant.rows() != dimension || constant.cols() != dimension {
            return Err(Error::DimensionMismatch(format!(
                "constant is {}x{}, expected {dimension}x{dimension}",
                constant.rows(),
                constant.cols()
            )));
        }
        let mut seen = BTreeSet::new();
        for p in &parts {
            if p.coefficients.is_empty() {
                return Err(Error::InvalidSystem("empty principal part".into()));
            }
            if p.dim() != dimension || p.coefficients.iter().any(|c| !c.is_square()) {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient at pole {} has wrong size",
                    p.point
                )));
            }
            if !seen.insert(p.point.clone()) {
                return Err(Error::InvalidSystem(format!("duplicate pole {}", p.point)));
            }
        }
        Ok(Self {
            dimension,
            constant,
            parts,
            exponents: None,
        })
    }

    /// Fuchsian system `Σ_t R_t / (z − t)` with zero constant.
    pub fn fuchsian(dimension: usize, residues: Vec<(GaussianRational, Matrix)>) -> Result<Self> {
        let parts = residues
            .into_iter()
            .map(|(t, r)| PrincipalPart::new(t, vec![r]))
            .collect::<Result<_>>()?;
        Self::new(dimension, Matrix::zeros(dimension, dimension), parts)
    }

    /// The zero pair `(0, 0)`.
    pub fn zero_pair() -> Self {
        Self {
            dimension: 0,
            constant: Matrix::zeros(0, 0),
            parts: Vec::new(),
            exponents: None,
        }
    }

    pub fn is_zero_pair(&self) -> bool {
        self.dimension == 0
    }

    /// Attaches an exponent declaration, checking `Π_s (S − s)^{l_s} = 0`.
    pub fn with_exponents(mut self, exponents: Vec<(GaussianRational, usize)>) -> Result<Self> {
        let n = self.dimension;
        let mut prod = Matrix::identity(n);
        let mut seen = BTreeSet::new();
        for (s, l) in &exponents {
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidSystem(format!(
                    "duplicate exponent point {s}"
                )));
            }
            prod = &prod * &(&self.constant - &Matrix::scalar(n, s)).pow(*l);
        }
        if !prod.is_zero() {
            return Err(Error::InvalidSystem(
                "constant term violates the declared exponent condition".into(),
            ));
        }
        self.exponents = Some(exponents);
        Ok(self)
    }

    pub fn part_at(&self, t: &GaussianRational) -> Option<&PrincipalPart> {
        self.parts.iter().find(|p| &p.point == t)
    }

    pub fn points(&self) -> Vec<GaussianRational> {
        self.parts.iter().map(|p| p.point.clone()).collect()
    }

    /// `A_{t,j}`, zero when absent.
    pub fn coefficient(&self, t: &GaussianRational, j: usize) -> Matrix {
        self.part_at(t).map_or_else(
            || Matrix::zeros(self.dimension, self.dimension),
            |p| p.coefficient(j),
        )
    }

    /// Same rational function: equal constants and equal coefficients at
    /// every pole, ignoring capacities, zero parts and declarations.
    pub fn agrees_with(&self, other: &System) -> bool {
        if self.dimension != other.dimension || self.constant != other.constant {
            return false;
        }
        let points: BTreeSet<_> = self.points().into_iter().chain(other.points()).collect();
        points.iter().all(|t| {
            let k = self
                .part_at(t)
                .map_or(0, PrincipalPart::k)
                .max(other.part_at(t).map_or(0, PrincipalPart::k));
            (1..=k).all(|j| self.coefficient(t, j) == other.coefficient(t, j))
        })
    }

    /// Drops trailing zero coefficients and zero parts.
    pub fn trimmed(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .filter_map(|p| {
                let d = order(p);
                (d > 0).then(|| p.with_capacity(d))
            })
            .collect();
        Self {
            parts,
            ..self.clone()
        }
    }

    pub fn is_fuchsian(&self) -> bool {
        self.constant.is_zero() && self.parts.iter().all(|p| order(p) <= 1)
    }

    /// Zero constant term and zero residue at infinity.
    pub fn in_d0(&self) -> bool {
        self.constant.is_zero() && residue_at_infinity(self).is_zero()
    }

    /// Simultaneous conjugation `X ↦ c X c^{−1}` of every matrix.
    pub fn conjugate(&self, c: &Matrix) -> Result<Self> {
        let c_inv = c.inverse().ok_or(Error::SingularGauge)?;
        Ok(Self {
            dimension: self.dimension,
            constant: &(c * &self.constant) * &c_inv,
            parts: self.parts.iter().map(|p| p.conjugate(c, &c_inv)).collect(),
            exponents: self.exponents.clone(),
        })
    }

    /// Replaces (or inserts) the principal part at `part.point`.
    pub fn with_part(&self, part: PrincipalPart) -> Self {
        let mut out = self.clone();
        match out.parts.iter_mut().find(|p| p.point == part.point) {
            Some(slot) => *slot = part,
            None => out.parts.push(part),
        }
        out
    }

    /// Maximal pole order over all parts.
    pub fn max_order(&self) -> usize {
        self.parts.iter().map(order).max().unwrap_or(0)
    }
}

/// A rank-one pair used as a parameter `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSystem(System);

impl ScalarSystem {
    pub fn new(system: System) -> Result<Self> {
        if system.dimension != 1 {
            return Err(Error::DimensionMismatch(format!(
                "parameter has rank {}, expected 1",
                system.dimension
            )));
        }
        Ok(Self(system))
    }

    /// `c + Σ_t Σ_j α_{t,j} (z − t)^{−j}` from scalar data.
    pub fn from_terms(
        constant: GaussianRational,
        terms: &[(GaussianRational, Vec<GaussianRational>)],
    ) -> Result<Self> {
        let parts = terms
            .iter()
            .map(|(t, c)| PrincipalPart::scalar(t.clone(), c))
            .collect();
        Ok(Self(System::new(1, Matrix::scalar(1, &constant), parts)?))
    }

    /// `λ / (z − t)`.
    pub fn simple_pole(t: GaussianRational, lambda: GaussianRational) -> Self {
        Self::from_terms(GaussianRational::zero(), &[(t, vec![lambda])])
            .expect("well-formed rank-one system")
    }

    pub fn zero() -> Self {
        Self::from_terms(GaussianRational::zero(), &[]).expect("well-formed rank-one system")
    }

    pub fn system(&self) -> &System {
        &self.0
    }

    pub fn into_system(self) -> System {
        self.0
    }

    pub fn constant(&self) -> GaussianRational {
        self.0.constant.get(0, 0).clone()
    }

    /// `Res_{z=∞} α = −Σ_t α_{t,1}`.
    pub fn residue_at_infinity(&self) -> GaussianRational {
        residue_at_infinity(&self.0).get(0, 0).clone()
    }

    /// Pointwise sum `α + β`.
    pub fn add(&self, other: &ScalarSystem) -> ScalarSystem {
        ScalarSystem(add_scalar(&self.0, other))
    }

    pub fn negate(&self) -> ScalarSystem {
        let s = &self.0;
        let minus = GaussianRational::from_int(-1);
        ScalarSystem(System {
            dimension: 1,
            constant: s.constant.scale(&minus),
            parts: s
                .parts
                .iter()
                .map(|p| PrincipalPart {
                    point: p.point.clone(),
                    coefficients: p.coefficients.iter().map(|c| c.scale(&minus)).collect(),
                })
                .collect(),
            exponents: None,
        })
    }

    /// Points at which `α` has a pole of positive order.
    pub fn pole_points(&self) -> Vec<GaussianRational> {
        self.0
            .parts
            .iter()
            .filter(|p| order(p) > 0)
            .map(|p| p.point.clone())
            .collect()
    }
}

/// `Res_{z=∞} A = −Σ_t A_{t,1}`.
pub fn residue_at_infinity(sys: &System) -> Matrix {
    let n = sys.dimension;
    let mut acc = Matrix::zeros(n, n);
    for p in &sys.parts {
        acc = &acc - &p.coefficients[0];
    }
    acc
}

/// `A(z) + α(z)·I`, merging poles and enlarging capacities as needed.
pub fn add_scalar(sys: &System, alpha: &ScalarSystem) -> System {
    let n = sys.dimension;
    let a = alpha.system();
    let mut out = sys.clone();
    out.exponents = None;
    out.constant = &sys.constant + &Matrix::scalar(n, &alpha.constant());
    for q in &a.parts {
        let existing = out
            .part_at(&q.point)
            .cloned()
            .unwrap_or_else(|| PrincipalPart::zero(q.point.clone(), n, 1));
        let k = existing.k().max(q.k());
        let coefficients = (1..=k)
            .map(|j| &existing.coefficient(j) + &Matrix::scalar(n, q.coefficient(j).get(0, 0)))
            .collect();
        out = out.with_part(PrincipalPart {
            point: q.point.clone(),
            coefficients,
        });
    }
    out
}

/// Element `g(z) = Σ_{m<k} g_m (z − t)^m` of the truncated gauge group at `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedGauge {
    pub point: GaussianRational,
    pub coefficients: Vec<Matrix>,
}

impl TruncatedGauge {
    pub fn new(point: GaussianRational, coefficients: Vec<Matrix>) -> Result<Self> {
        let Some(g0) = coefficients.first() else {
            return Err(Error::SingularGauge);
        };
        if !g0.is_invertible() {
            return Err(Error::SingularGauge);
        }
        let n = g0.rows();
        if coefficients.iter().any(|c| c.rows() != n || c.cols() != n) {
            return Err(Error::DimensionMismatch(
                "gauge coefficients differ in shape".into(),
            ));
        }
        Ok(Self {
            point,
            coefficients,
        })
    }

    /// Constant gauge `a`.
    pub fn constant(point: GaussianRational, a: Matrix) -> Result<Self> {
        Self::new(point, vec![a])
    }

    pub fn identity(point: GaussianRational, n: usize) -> Self {
        Self {
            point,
            coefficients: vec![Matrix::identity(n)],
        }
    }

    pub fn dim(&self) -> usize {
        self.coefficients[0].rows()
    }

    /// `g_m`, zero beyond the stored length.
    pub fn coefficient(&self, m: usize) -> Matrix {
        self.coefficients
            .get(m)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(), self.dim()))
    }

    /// Coefficients of `g(z)^{−1} mod z^k`.
    pub fn inverse_series(&self, k: usize) -> Vec<Matrix> {
        let g0_inv = self.coefficients[0]
            .inverse()
            .expect("leading gauge coefficient is invertible");
        let mut h: Vec<Matrix> = vec![g0_inv.clone()];
        for m in 1..k {
            let mut acc = Matrix::zeros(self.dim(), self.dim());
            for j in 1..=m {
                acc = &acc + &(&self.coefficient(j) * &h[m - j]);
            }
            h.push(-&(&g0_inv * &acc));
        }
        h
    }

    /// Product `self(z) · other(z)` truncated to the longer of the two lengths.
    pub fn compose(&self, other: &TruncatedGauge) -> Result<TruncatedGauge> {
        if self.point != other.point {
            return Err(Error::PoleMismatch(
                "gauges live at different points".into(),
            ));
        }
        let k = self.coefficients.len().max(other.coefficients.len());
        let coefficients = (0..k)
            .map(|m| {
                (0..=m).fold(Matrix::zeros(self.dim(), self.dim()), |acc, a| {
                    &acc + &(&self.coefficient(a) * &other.coefficient(m - a))
                })
            })
            .collect();
        TruncatedGauge::new(self.point.clone(), coefficients)
    }
}

/// Principal part of `g(z) A(z) g(z)^{−1}`, keeping the capacity of `part`.
pub fn gauge_coadjoint(g: &TruncatedGauge, part: &PrincipalPart) -> Result<PrincipalPart> {
    if g.point != part.point {
        return Err(Error::PoleMismatch(format!(
            "gauge at {} acting on part at {}",
            g.point, part.point
        )));
    }
    if g.dim() != part.dim() {
        return Err(Error::DimensionMismatch(
            "gauge and principal part differ in size".into(),
        ));
    }
    let k = part.k();
    let n = part.dim();
    let h = g.inverse_series(k);
    // Coefficient of z^{−j}: Σ_{a + c = b − j} g_a A_b h_c.
    let coefficients = (1..=k)
        .map(|j| {
            let mut acc = Matrix::zeros(n, n);
            for b in j..=k {
                let ab = &part.coefficients[b - 1];
                if ab.is_zero() {
                    continue;
                }
                for a in 0..=(b - j) {
                    let ga = g.coefficient(a);
                    if ga.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(&ga * ab) * &h[b - j - a]);
                }
            }
            acc
        })
        .collect();
    Ok(PrincipalPart {
        point: part.point.clone(),
        coefficients,
    })
}

/// Incrementally maintained echelon basis of a subspace of `ℚ(i)^dim`.
#[derive(Clone, Debug)]
pub(crate) struct SpanBuilder {
    rows: Vec<(usize, Vector)>,
}

impl SpanBuilder {
    pub(crate) fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub(crate) fn insert(&mut self, mut v: Vector) -> bool {
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push((p, v));
        true
    }
}

/// Whether `V` has no proper nonzero subspace invariant under `S` and every
/// `A_{t,j}`: by Burnside, whether the generated algebra is all of `End V`.
pub fn is_irreducible(sys: &System) -> bool {
    let n = sys.dimension;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut generators: Vec<Matrix> = Vec::new();
    if !sys.constant.is_zero() {
        generators.push(sys.constant.clone());
    }
    for p in &sys.parts {
        generators.extend(p.coefficients.iter().filter(|c| !c.is_zero()).cloned());
    }
    let mut span = SpanBuilder::new();
    let id = Matrix::identity(n);
    span.insert(id.flatten());
    let mut queue = vec![id];
    while let Some(b) = queue.pop() {
        for g in &generators {
            let w = &b * g;
            if span.insert(w.flatten()) {
                if span.dim() == n * n {
                    return true;
                }
                queue.push(w);
            }
        }
    }
    span.dim() == n * n
}

/// Decides `a ∼ b` for irreducible pairs: returns an invertible `f` with
/// `f S_a = S_b f` and `f A_{t,j} = B_{t,j} f` for all poles, or `None`.
///
/// By Schur's lemma the intertwiners form a space of dimension at most one,
/// so a single kernel vector decides. Reducible inputs are refused with
/// [`Error::InconclusiveEquivalence`].
pub fn equivalent(a: &System, b: &System) -> Result<Option<Matrix>> {
    if a.dimension != b.dimension {
        return Err(Error::DimensionMismatch(format!(
            "ranks {} and {}",
            a.dimension, b.dimension
        )));
    }
    let n = a.dimension;
    if n == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    if !is_irreducible(a) || !is_irreducible(b) {
        return Err(Error::InconclusiveEquivalence);
    }
    let mut pairs = vec![(a.constant.clone(), b.constant.clone())];
    let points: BTreeSet<_> = a.points().into_iter().chain(b.points()).collect();
    for t in &points {
        let k = a
            .part_at(t)
            .map_or(0, PrincipalPart::k)
            .max(b.part_at(t).map_or(0, PrincipalPart::k));
        for j in 1..=k {
            pairs.push((a.coefficient(t, j), b.coefficient(t, j)));
        }
    }
    let f = intertwiner_kernel(n, n, &pairs);
    Ok(f.into_iter().next().filter(Matrix::is_invertible))
}

/// Basis of `{f : f X = Y f for every (X, Y)}` with `f` of shape
/// `rows × cols`, `X` of size `cols`, `Y` of size `rows`.
pub(crate) fn intertwiner_kernel(
    rows: usize,
    cols: usize,
    pairs: &[(Matrix, Matrix)],
) -> Vec<Matrix> {
    let unknowns = rows * cols;
    let mut eqs = Matrix::zeros(pairs.len() * unknowns, unknowns);
    for (e, (x, y)) in pairs.iter().enumerate() {
        for i in 0..rows {
            for j in 0..cols {
                let row = e * unknowns + i * cols + j;
                // (fX)_{ij} = Σ_k f_{ik} X_{kj};  (Yf)_{ij} = Σ_k Y_{ik} f_{kj}
                for k in 0..cols {
                    let v = x.get(k, j);
                    if !v.is_zero() {
                        let cur = eqs.get(row, i * cols + k) + v;
                        eqs.set(row, i * cols + k, cur);
                    }
                }
                for k in 0..rows {
                    let v = y.get(i, k);
                    if !v.is_zero() {
                        let cur = eqs.get(row, k * cols + j) - v;
                        eqs.set(row, k * cols + j, cur);
                    }
                }
            }
        }
    }
    eqs.kernel()
        .into_iter()
        .map(|v| Matrix::from_vec(rows, cols, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn e(i: usize, j: usize) -> Matrix {
        Matrix::unit(2, i, j)
    }

    #[test]
    fn orders() {
        let z = Matrix::zeros(2, 2);
        let a = Matrix::identity(2);
        assert_eq!(
            order(&PrincipalPart::new(g(0), vec![z.clone(), z.clone()]).unwrap()),
            0
        );
        assert_eq!(
            order(&PrincipalPart::new(g(0), vec![a, z.clone()]).unwrap()),
            1
        );
        let d = Matrix::from_ints(&[[1, 0], [0, 2]]);
        assert_eq!(order(&PrincipalPart::new(g(0), vec![z, d]).unwrap()), 2);
    }

    #[test]
    fn residues_at_infinity() {
        let s = System::fuchsian(2, vec![(g(0), e(0, 0))]).unwrap();
        assert_eq!(
            residue_at_infinity(&s),
            Matrix::from_ints(&[[-1, 0], [0, 0]])
        );
        let s = System::fuchsian(2, vec![(g(0), e(0, 1)), (g(1), -&e(0, 1))]).unwrap();
        assert!(residue_at_infinity(&s).is_zero());
        assert!(s.in_d0());
    }

    #[test]
    fn adding_scalars() {
        let zero = System::new(2, Matrix::zeros(2, 2), vec![]).unwrap();
        let three = ScalarSystem::simple_pole(g(0), g(3));
        assert_eq!(
            add_scalar(&zero, &three).coefficient(&g(0), 1),
            Matrix::scalar(2, &g(3))
        );
        let s = System::fuchsian(2, vec![(g(0), e(0, 1))]).unwrap();
        let out = add_scalar(&s, &ScalarSystem::simple_pole(g(0), g(1)));
        assert_eq!(
            out.coefficient(&g(0), 1),
            Matrix::from_ints(&[[1, 1], [0, 1]])
        );
        assert!(add_scalar(&s, &ScalarSystem::zero()).agrees_with(&s));
    }

    #[test]
    fn coadjoint_examples() {
        let x = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let gamma = Matrix::from_ints(&[[0, 1], [5, 2]]);
        let gauge = TruncatedGauge::new(g(0), vec![Matrix::identity(2), x.clone()]).unwrap();
        let fuchs = PrincipalPart::new(g(0), vec![gamma.clone()]).unwrap();
        assert_eq!(gauge_coadjoint(&gauge, &fuchs).unwrap(), fuchs);

        let lambda = Matrix::from_ints(&[[1, 0], [0, 2]]);
        let part = PrincipalPart::new(g(0), vec![Matrix::zeros(2, 2), lambda.clone()]).unwrap();
        let out = gauge_coadjoint(&gauge, &part).unwrap();
        assert_eq!(out.coefficients, vec![x.commutator(&lambda), lambda]);

        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let c = TruncatedGauge::constant(g(0), a.clone()).unwrap();
        let out = gauge_coadjoint(&c, &fuchs).unwrap();
        assert_eq!(out.coefficients[0], &(&a * &gamma) * &a.inverse().unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        let s = System::fuchsian(2, vec![(g(0), e(0, 1)), (g(1), e(1, 0))]).unwrap();
        assert!(is_irreducible(&s));
        let s = System::fuchsian(2, vec![(g(0), e(0, 0)), (g(1), e(1, 0))]).unwrap();
        assert!(!is_irreducible(&s));
        let s = System::fuchsian(1, vec![(g(0), Matrix::zeros(1, 1))]).unwrap();
        assert!(is_irreducible(&s));
    }

    #[test]
    fn equivalence_examples() {
        let a = System::fuchsian(2, vec![(g(0), e(0, 1)), (g(1), e(1, 0))]).unwrap();
        let f = equivalent(&a, &a).unwrap().unwrap();
        assert_eq!(f, Matrix::identity(2));

        let c = Matrix::from_ints(&[[1, 2], [1, 3]]);
        let b = a.conjugate(&c).unwrap();
        let f = equivalent(&a, &b).unwrap().unwrap();
        let f_inv = f.inverse().unwrap();
        assert_eq!(
            &(&f * &a.coefficient(&g(0), 1)) * &f_inv,
            b.coefficient(&g(0), 1)
        );

        let swapped = System::fuchsian(2, vec![(g(1), e(0, 1)), (g(0), e(1, 0))]).unwrap();
        let permuted = System::fuchsian(2, vec![(g(0), e(0, 1)), (g(2), e(1, 0))]).unwrap();
        assert_eq!(equivalent(&a, &permuted).unwrap(), None);
        // conjugating by the coordinate flip exchanges E12 and E21
        assert!(equivalent(&a, &swapped).unwrap().is_some());

        let red = System::fuchsian(2, vec![(g(0), e(0, 0))]).unwrap();
        assert_eq!(equivalent(&red, &red), Err(Error::InconclusiveEquivalence));
    }

    #[test]
    fn gauge_composition_is_an_action() {
        let g1 =
            TruncatedGauge::new(g(0), vec![Matrix::from_ints(&[[1, 1], [0, 1]]), e(1, 0)]).unwrap();
        let g2 =
            TruncatedGauge::new(g(0), vec![Matrix::from_ints(&[[2, 0], [1, 1]]), e(0, 1)]).unwrap();
        let part =
            PrincipalPart::new(g(0), vec![e(0, 1), Matrix::from_ints(&[[1, 0], [0, 3]])]).unwrap();
        let lhs = gauge_coadjoint(&g1.compose(&g2).unwrap(), &part).unwrap();
        let rhs = gauge_coadjoint(&g1, &gauge_coadjoint(&g2, &part).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
