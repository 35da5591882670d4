//! Orbit dimensions, the rigidity index and Katz-style rank reduction.

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::functors::{hd, mc};
use crate::normalform::{select_alpha, stabilizer_dim, StabilizerMode};
use crate::systems::{add_scalar, is_irreducible, ScalarSystem, System};

/// `Σ_t (k_t n² − dim Z(A_t))`, with `k_t` the stored capacity at `t`.
pub fn orbit_dim(sys: &System) -> Result<usize> {
    let nn = sys.dimension * sys.dimension;
    sys.parts.iter().try_fold(0, |acc, part| {
        Ok(acc + part.k() * nn - stabilizer_dim(part, StabilizerMode::Linear)?)
    })
}

/// `dim 𝕆 − 2n² + 2` for an irreducible pair in `𝒟⁰`; zero means naively
/// rigid. Trailing zero coefficients are dropped before counting, so the
/// index depends only on the rational function.
pub fn rigidity_index(p: &System) -> Result<i64> {
    if !p.in_d0() {
        return Err(Error::NotInD0);
    }
    if !is_irreducible(p) {
        return Err(Error::Reducible);
    }
    let n = p.dimension as i64;
    Ok(orbit_dim(&p.trimmed())? as i64 - 2 * n * n + 2)
}

/// `add_α ∘ mc_{λ/ζ} ∘ add_α` with `λ = Res_{z=∞} α`.
pub fn katz_step(p: &System, alpha: &ScalarSystem) -> Result<System> {
    if !p.in_d0() {
        return Err(Error::NotInD0);
    }
    if let Some(bad) = alpha
        .pole_points()
        .into_iter()
        .find(|t| p.part_at(t).is_none())
    {
        return Err(Error::PoleMismatch(format!(
            "parameter pole {bad} is not a pole of the system"
        )));
    }
    let lambda = alpha.residue_at_infinity();
    let shifted = add_scalar(p, alpha);
    if lambda.is_zero() && !shifted.is_zero_pair() && hd(&shifted)?.is_zero_pair() {
        return Err(Error::ZeroLambda);
    }
    let convolved = mc(
        &shifted,
        &ScalarSystem::simple_pole(GaussianRational::zero(), lambda),
    )?;
    if convolved.is_zero_pair() {
        return Ok(convolved);
    }
    Ok(add_scalar(&convolved, alpha))
}

/// One recorded application of [`katz_step`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub alpha: ScalarSystem,
    pub lambda: GaussianRational,
    pub rank_before: usize,
    pub rank_after: usize,
    pub result: System,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn final_rank(&self) -> Option<usize> {
        self.steps.last().map(|s| s.rank_after)
    }
}

/// The parameter used by [`katz_reduce`]: minus the sum of the per-pole
/// maximizers returned by [`select_alpha`].
pub fn katz_parameter(p: &System) -> Result<ScalarSystem> {
    let terms = p
        .parts
        .iter()
        .map(|part| {
            Ok((
                part.point.clone(),
                select_alpha(part)?.scalar_coefficients(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScalarSystem::from_terms(GaussianRational::zero(), &terms)?.negate())
}

/// Repeats [`katz_step`] with [`katz_parameter`] until the rank drops below 2.
pub fn katz_reduce(p: &System) -> Result<ReductionTrace> {
    let mut trace = ReductionTrace::default();
    let mut current = p.clone();
    let cap = p.dimension;
    while current.dimension >= 2 {
        if trace.steps.len() >= cap {
            return Err(Error::Internal(format!(
                "no rank-one pair reached within {cap} steps"
            )));
        }
        let alpha = katz_parameter(&current)?;
        let lambda = alpha.residue_at_infinity();
        let next = katz_step(&current, &alpha)?;
        let (before, after) = (current.dimension, next.dimension);
        if after >= before {
            return Err(match rigidity_index(&current)? {
                0 => Error::Internal(format!("rigid pair of rank {before} did not reduce")),
                index => Error::NotRigid(index),
            });
        }
        trace.steps.push(ReductionStep {
            alpha,
            lambda,
            rank_before: before,
            rank_after: after,
            result: next.clone(),
        });
        current = next;
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Matrix;
    use crate::systems::equivalent;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn triple() -> System {
        let e12 = Matrix::unit(2, 0, 1);
        let e21 = Matrix::unit(2, 1, 0);
        let third = (&e12 + &e21).scale(&g(-1));
        System::fuchsian(2, vec![(g(0), e12), (g(1), e21), (g(-1), third)]).unwrap()
    }

    fn quadruple() -> System {
        let r0 = Matrix::from_ints(&[[1, 0], [0, 0]]);
        let r1 = Matrix::from_ints(&[[0, 1], [0, 1]]);
        let r2 = Matrix::from_ints(&[[0, 0], [2, 1]]);
        let r3 = Matrix::from_ints(&[[-1, -1], [-2, -2]]);
        System::fuchsian(2, vec![(g(0), r0), (g(1), r1), (g(2), r2), (g(3), r3)]).unwrap()
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_dim(&System::fuchsian(2, vec![]).unwrap()).unwrap(), 0);
        assert_eq!(orbit_dim(&triple()).unwrap(), 6);
        let rank_one =
            ScalarSystem::from_terms(g(0), &[(g(0), vec![g(1), g(2)]), (g(1), vec![g(-1)])])
                .unwrap();
        assert_eq!(orbit_dim(rank_one.system()).unwrap(), 0);
    }

    #[test]
    fn index_examples() {
        assert_eq!(rigidity_index(&triple()).unwrap(), 0);
        assert_eq!(rigidity_index(&quadruple()).unwrap(), 2);
        let rank_one =
            ScalarSystem::from_terms(g(0), &[(g(0), vec![g(1)]), (g(1), vec![g(-1)])]).unwrap();
        assert_eq!(rigidity_index(rank_one.system()).unwrap(), 0);
        let off = ScalarSystem::simple_pole(g(0), g(1));
        assert_eq!(rigidity_index(off.system()), Err(Error::NotInD0));
    }

    #[test]
    fn zero_parameter_step_is_identity() {
        let p = triple();
        let out = katz_step(&p, &ScalarSystem::zero()).unwrap();
        assert!(equivalent(&out, &p).unwrap().is_some());
    }

    #[test]
    fn triple_reduces_in_one_step() {
        let trace = katz_reduce(&triple()).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.final_rank(), Some(1));
        assert!(trace.steps[0].result.in_d0());
    }

    #[test]
    fn quadruple_is_not_rigid() {
        let p = quadruple();
        let step = katz_step(&p, &katz_parameter(&p).unwrap()).unwrap();
        assert_eq!(step.dimension, 2);
        assert_eq!(katz_reduce(&p), Err(Error::NotRigid(2)));
    }

    #[test]
    fn rank_one_trace_is_empty() {
        let p = ScalarSystem::from_terms(g(0), &[(g(0), vec![g(1)]), (g(1), vec![g(-1)])]).unwrap();
        assert!(katz_reduce(p.system()).unwrap().steps.is_empty());
    }
}
