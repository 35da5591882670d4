//! Harnad duality, middle convolution and related constructions on pairs.
//!
//! A *pair* is just a [`System`]; the zero pair has dimension 0.

use std::collections::BTreeSet;

use crate::datum::{canonical, phi, psi, Block, Datum};
use crate::error::{Error, Result};
use crate::exactalg::{
    char_eigenvalues, generalized_eigendecomposition, GaussianRational, Matrix, Quotient,
};
use crate::systems::{add_scalar, equivalent, is_irreducible, PrincipalPart, ScalarSystem, System};

/// Harnad dual `HD = Φ ∘ σ ∘ κ`: `(V, S + Q(z − T)^{−1}P) ↦ (W, T + P(ζ − S)^{−1}Q)`
/// computed through the canonical datum.
pub fn hd(p: &System) -> Result<System> {
    if p.is_zero_pair() {
        return Ok(System::zero_pair());
    }
    psi(&canonical(p))
}

/// Exponent points `E` of a pair: the declared ones, else the spectrum of `S`.
fn exponent_points(p: &System) -> Result<BTreeSet<GaussianRational>> {
    match &p.exponents {
        Some(e) => Ok(e.iter().map(|(s, _)| s.clone()).collect()),
        None => Ok(char_eigenvalues(&p.constant)?
            .into_iter()
            .map(|(s, _)| s)
            .collect()),
    }
}

/// Middle convolution `mc_α = HD ∘ add_α ∘ HD`.
///
/// The parameter `α` must have zero constant term and poles only at the
/// exponent points of `p` (declared, or else the eigenvalues of `S`).
pub fn mc(p: &System, alpha: &ScalarSystem) -> Result<System> {
    if !alpha.constant().is_zero() {
        return Err(Error::TranslationParameter);
    }
    if p.is_zero_pair() {
        return Ok(System::zero_pair());
    }
    let e = exponent_points(p)?;
    if let Some(bad) = alpha.pole_points().into_iter().find(|s| !e.contains(s)) {
        return Err(Error::PoleMismatch(format!(
            "parameter pole {bad} is not an exponent of the constant term"
        )));
    }
    let dual = hd(p)?;
    if dual.is_zero_pair() {
        return Ok(System::zero_pair());
    }
    let mut out = hd(&add_scalar(&dual, alpha))?;
    if out.is_zero_pair() {
        return Ok(out);
    }
    let mut exps = out.exponents.take().unwrap_or_default();
    for s in e {
        if !exps.iter().any(|(x, _)| *x == s) {
            exps.push((s, 1));
        }
    }
    exps.sort();
    out.exponents = Some(exps);
    Ok(out)
}

/// Classical middle convolution of a Fuchsian pair with parameter `λ`:
/// `W = ⊕_t V / Ker A_t`, then `V^λ = W / Ker(PQ + λ)`.
pub fn dr_middle_convolution(p: &System, lambda: &GaussianRational) -> Result<System> {
    if !p.is_fuchsian() {
        return Err(Error::NotFuchsian);
    }
    let n = p.dimension;
    let mut qs = Vec::new();
    let mut ps = Vec::new();
    for part in &p.parts {
        let a = &part.coefficients[0];
        let quo = Quotient::by_kernel(a);
        qs.push(a * quo.section());
        ps.push(quo.projection().clone());
    }
    let q = qs.iter().fold(Matrix::zeros(n, 0), |acc, m| acc.hstack(m));
    let pm = ps.iter().fold(Matrix::zeros(0, n), |acc, m| acc.vstack(m));
    let w = q.cols();
    let shifted = &(&pm * &q) + &Matrix::scalar(w, lambda);
    let quo = Quotient::by_kernel(&shifted);
    let dim = quo.dim();
    if dim == 0 {
        return Ok(System::zero_pair());
    }
    let q_l = quo.projection();
    let p_l = &shifted * quo.section();
    let mut offset = 0;
    let mut parts = Vec::new();
    for (part, qt) in p.parts.iter().zip(&qs) {
        let wt = qt.cols();
        let coefficient = &q_l.submatrix(0, offset, dim, wt) * &p_l.submatrix(offset, 0, wt, dim);
        parts.push(PrincipalPart {
            point: part.point.clone(),
            coefficients: vec![coefficient],
        });
        offset += wt;
    }
    System::new(dim, Matrix::zeros(dim, dim), parts)
}

/// An Okubo system `(z − T) du/dz = R u` on `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkuboTriple {
    pub dim_w: usize,
    pub t_matrix: Matrix,
    pub r_matrix: Matrix,
}

impl OkuboTriple {
    pub fn new(t_matrix: Matrix, r_matrix: Matrix) -> Result<Self> {
        let w = t_matrix.rows();
        if !t_matrix.is_square() || r_matrix.rows() != w || r_matrix.cols() != w {
            return Err(Error::DimensionMismatch(
                "T and R must be square of the same size".into(),
            ));
        }
        Ok(Self {
            dim_w: w,
            t_matrix,
            r_matrix,
        })
    }
}

/// Factors `R = PQ` through `V = W / Ker R` and returns `(V, Q (z − T)^{−1} P)`.
pub fn okubo_to_pair(o: &OkuboTriple) -> Result<System> {
    let quo = Quotient::by_kernel(&o.r_matrix);
    let n = quo.dim();
    if n == 0 {
        return Ok(System::zero_pair());
    }
    let q = quo.projection().clone();
    let p = &o.r_matrix * quo.section();
    let spaces = generalized_eigendecomposition(&o.t_matrix)?;
    let basis: Vec<_> = spaces
        .iter()
        .flat_map(|s| s.basis.iter().cloned())
        .collect();
    let c = Matrix::from_columns(&basis, o.dim_w);
    let c_inv = c
        .inverse()
        .ok_or_else(|| Error::Internal("generalized eigenbasis is singular".into()))?;
    let t_new = &(&c_inv * &o.t_matrix) * &c;
    let q_new = &q * &c;
    let p_new = &c_inv * &p;
    let mut blocks = Vec::new();
    let mut offset = 0;
    for s in &spaces {
        let m = s.basis.len();
        let nil = &t_new.submatrix(offset, offset, m, m) - &Matrix::scalar(m, &s.eigenvalue);
        blocks.push(Block::new(
            s.eigenvalue.clone(),
            nil,
            q_new.submatrix(0, offset, n, m),
            p_new.submatrix(offset, 0, m, n),
        )?);
        offset += m;
    }
    Ok(phi(&Datum::new(n, blocks)?))
}

/// `HD(HD(p))` together with an invertible `f` witnessing `HD(HD(p)) ∼ p`
/// (`f A_{HD∘HD} = A_p f`).
pub fn hd_double(p: &System) -> Result<(System, Matrix)> {
    if p.is_zero_pair() {
        return Err(Error::Exceptional);
    }
    if !is_irreducible(p) {
        return Err(Error::Reducible);
    }
    let dual = hd(p)?;
    if dual.is_zero_pair() {
        return Err(Error::Exceptional);
    }
    let back = hd(&dual)?;
    match equivalent(&back, p)? {
        Some(f) => Ok((back, f)),
        None => Err(Error::Internal(
            "double dual is not equivalent to the input".into(),
        )),
    }
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

    fn example_pair() -> System {
        System::fuchsian(2, vec![(g(0), e(0, 1)), (g(1), e(1, 0))]).unwrap()
    }

    fn scalar(constant: i64, point: i64, coeffs: &[i64]) -> System {
        let c: Vec<_> = coeffs.iter().map(|&x| g(x)).collect();
        ScalarSystem::from_terms(g(constant), &[(g(point), c)])
            .unwrap()
            .into_system()
    }

    #[test]
    fn hd_rank_one() {
        // (C, s + α) with α = 2/(z-1) + 5/(z-1)^2 + 7/(z-1)^3, s = 4
        let p = scalar(4, 1, &[2, 5, 7]);
        let out = hd(&p).unwrap();
        assert_eq!(out.dimension, 3);
        let t = &Matrix::scalar(3, &g(1)) + &Matrix::jordan_block(3);
        assert_eq!(out.constant, t);
        let r = Matrix::from_ints(&[[0, 0, 0], [0, 0, 0], [7, 5, 2]]);
        assert!(out.agrees_with(
            &System::new(3, t, vec![PrincipalPart::new(g(4), vec![r]).unwrap()]).unwrap()
        ));
    }

    #[test]
    fn hd_of_constant_is_zero() {
        let p = System::new(2, Matrix::from_ints(&[[1, 2], [0, 3]]), vec![]).unwrap();
        assert!(hd(&p).unwrap().is_zero_pair());
    }

    #[test]
    fn hd_fuchsian_example() {
        let out = hd(&example_pair()).unwrap();
        let expect = System::new(
            2,
            Matrix::from_ints(&[[0, 0], [0, 1]]),
            vec![PrincipalPart::new(g(0), vec![Matrix::from_ints(&[[0, 1], [1, 0]])]).unwrap()],
        )
        .unwrap();
        assert!(out.agrees_with(&expect));
    }

    #[test]
    fn mc_entry_formula_instance() {
        let p = scalar(0, 0, &[1, 1]);
        let out = mc(&p, &ScalarSystem::simple_pole(g(0), g(1))).unwrap();
        let a1 = Matrix::from_ints(&[[1, 0], [1, 2]]);
        let a2 = Matrix::from_ints(&[[1, 2], [0, 0]]);
        let expect = System::new(
            2,
            Matrix::zeros(2, 2),
            vec![PrincipalPart::new(g(0), vec![a1, a2]).unwrap()],
        )
        .unwrap();
        assert!(out.agrees_with(&expect), "{out:?}");
    }

    #[test]
    fn mc_zero_is_identity() {
        let p = example_pair();
        let out = mc(&p, &ScalarSystem::zero()).unwrap();
        assert!(equivalent(&out, &p).unwrap().is_some());
    }

    #[test]
    fn mc_matches_dr() {
        let p = example_pair();
        let target = System::fuchsian(
            1,
            vec![(g(0), Matrix::identity(1)), (g(1), Matrix::identity(1))],
        )
        .unwrap();
        let dr = dr_middle_convolution(&p, &g(1)).unwrap();
        assert!(dr.agrees_with(&target));
        let m = mc(&p, &ScalarSystem::simple_pole(g(0), g(1))).unwrap();
        assert!(equivalent(&m, &target).unwrap().is_some());
        assert!(equivalent(&dr_middle_convolution(&p, &g(0)).unwrap(), &p)
            .unwrap()
            .is_some());
    }

    #[test]
    fn mc_rejects_bad_parameters() {
        let p = example_pair();
        let shifted = ScalarSystem::from_terms(g(1), &[]).unwrap();
        assert_eq!(mc(&p, &shifted), Err(Error::TranslationParameter));
        let off = ScalarSystem::simple_pole(g(5), g(1));
        assert!(matches!(mc(&p, &off), Err(Error::PoleMismatch(_))));
    }

    #[test]
    fn dr_rejects_irregular() {
        assert_eq!(
            dr_middle_convolution(&scalar(0, 0, &[1, 1]), &g(1)),
            Err(Error::NotFuchsian)
        );
    }

    #[test]
    fn dr_dimension_count() {
        // PQ + 5 invertible: dim V^λ = Σ rank A_t = 2
        let out = dr_middle_convolution(&example_pair(), &g(5)).unwrap();
        assert_eq!(out.dimension, 2);
    }

    #[test]
    fn okubo_examples() {
        let o = OkuboTriple::new(Matrix::zeros(2, 2), Matrix::zeros(2, 2)).unwrap();
        assert!(okubo_to_pair(&o).unwrap().is_zero_pair());
        let o = OkuboTriple::new(
            Matrix::from_ints(&[[0, 0], [0, 1]]),
            Matrix::from_ints(&[[1, 1], [1, 1]]),
        )
        .unwrap();
        let target = System::fuchsian(
            1,
            vec![(g(0), Matrix::identity(1)), (g(1), Matrix::identity(1))],
        )
        .unwrap();
        assert!(okubo_to_pair(&o).unwrap().agrees_with(&target));
        let r = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let o = OkuboTriple::new(Matrix::from_ints(&[[0, 0], [0, 1]]), r).unwrap();
        assert_eq!(okubo_to_pair(&o).unwrap().dimension, 2);
    }

    #[test]
    fn double_dual_round_trips() {
        let (back, f) = hd_double(&example_pair()).unwrap();
        assert!(f.is_invertible());
        assert_eq!(back.dimension, 2);
        let (_, f) = hd_double(&scalar(0, 0, &[3, 2])).unwrap();
        assert!(f.is_invertible());
        let constant = System::new(1, Matrix::from_ints(&[[7]]), vec![]).unwrap();
        assert_eq!(hd_double(&constant), Err(Error::Exceptional));
    }
}
