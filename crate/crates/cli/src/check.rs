//! The invariant suite behind `midconv check`.
//!
//! Each check runs `trials` times against the input system and seeded random
//! gauges, conjugations and parameters. Checks whose hypotheses the input
//! does not meet are reported as skipped.

use midconv::datum::{
    canonical_datum, datum_isomorphism, gk_action, hat_matrix, is_stable, moment_mu, phi,
};
use midconv::exactalg::{GaussianRational, Matrix};
use midconv::functors::{dr_middle_convolution, hd, mc};
use midconv::normalform::{
    compute_normal_form, hat_kernel_dim, select_alpha, stabilizer_dim, KernelMode, StabilizerMode,
};
use midconv::rigidity::{orbit_dim, rigidity_index};
use midconv::sample::Sampler;
use midconv::systems::{
    add_scalar, equivalent, gauge_coadjoint, is_irreducible, order, residue_at_infinity,
    ScalarSystem, System,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: &'static str,
    pub detail: String,
}

enum Verdict {
    Pass,
    Skip(String),
    Fail(String),
}

type Check = fn(&System, &mut Sampler) -> Result<Verdict, midconv::Error>;

fn expect(cond: bool, msg: &str) -> Verdict {
    if cond {
        Verdict::Pass
    } else {
        Verdict::Fail(msg.to_string())
    }
}

fn section(sys: &System, _: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let plain = System {
        constant: Matrix::zeros(sys.dimension, sys.dimension),
        exponents: None,
        ..sys.clone()
    };
    let d = canonical_datum(&plain);
    if !phi(&d).agrees_with(&plain) {
        return Ok(Verdict::Fail(
            "phi of the canonical datum differs from the input".into(),
        ));
    }
    for (b, part) in d.blocks.iter().zip(&plain.parts) {
        if b.w() != hat_matrix(part, part.k()).rank() {
            return Ok(Verdict::Fail(format!(
                "block dimension at {} differs from the Toeplitz rank",
                b.point
            )));
        }
    }
    Ok(expect(is_stable(&d)?, "canonical datum is not stable"))
}

fn padding(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let extra = s.range(1, 2);
    let padded = System {
        parts: sys
            .parts
            .iter()
            .map(|p| p.with_capacity(p.k() + extra))
            .collect(),
        ..sys.clone()
    };
    Ok(expect(
        datum_isomorphism(&canonical_datum(sys), &canonical_datum(&padded))?.is_some(),
        "padding changed the canonical datum",
    ))
}

fn equivariance(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let d = canonical_datum(sys);
    let Some(block) = d.blocks.iter().find(|b| b.w() > 0).cloned() else {
        return Ok(Verdict::Skip("no poles".into()));
    };
    let gauge = s.gauge(block.point.clone(), sys.dimension, block.depth());
    let moved = gk_action(&gauge, &d)?;
    let before = phi(&d);
    let part = before.part_at(&block.point).expect("block has a part");
    let expected = before.with_part(gauge_coadjoint(&gauge, part)?);
    if !phi(&moved).agrees_with(&expected) {
        return Ok(Verdict::Fail(
            "phi does not intertwine the gauge action".into(),
        ));
    }
    let pairings = |m: midconv::datum::MomentValue| {
        m.blocks.into_iter().map(|b| b.pairings).collect::<Vec<_>>()
    };
    Ok(expect(
        pairings(moment_mu(&moved)) == pairings(moment_mu(&d)),
        "moment map changed under the gauge action",
    ))
}

fn gauge_group(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    for part in &sys.parts {
        let (n, k) = (part.dim(), part.k());
        let a = s.gauge(part.point.clone(), n, k);
        let b = s.gauge(part.point.clone(), n, k);
        let composed = gauge_coadjoint(&a.compose(&b)?, part)?;
        let stepwise = gauge_coadjoint(&a, &gauge_coadjoint(&b, part)?)?;
        if composed != stepwise {
            return Ok(Verdict::Fail(format!(
                "action is not a group action at {}",
                part.point
            )));
        }
        if order(&composed) != order(part) {
            return Ok(Verdict::Fail(format!(
                "pole order changed at {}",
                part.point
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn conjugation(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let c = s.invertible(sys.dimension);
    Ok(expect(
        is_irreducible(sys) == is_irreducible(&sys.conjugate(&c)?),
        "irreducibility changed under conjugation",
    ))
}

fn residue_additivity(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let alpha = ScalarSystem::new(s.system(1, 2, 2, true))?;
    let lhs = residue_at_infinity(&add_scalar(sys, &alpha));
    let rhs =
        &residue_at_infinity(sys) + &Matrix::scalar(sys.dimension, &alpha.residue_at_infinity());
    Ok(expect(lhs == rhs, "residue at infinity is not additive"))
}

fn duality(sys: &System, _: &mut Sampler) -> Result<Verdict, midconv::Error> {
    if !is_irreducible(sys) {
        return Ok(Verdict::Skip("input is reducible".into()));
    }
    let dual = match hd(sys) {
        Ok(d) => d,
        Err(midconv::Error::IrrationalSpectrum) => {
            return Ok(Verdict::Skip(
                "constant term has irrational spectrum".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    if dual.is_zero_pair() {
        return Ok(Verdict::Skip("input is exceptional".into()));
    }
    if !is_irreducible(&dual) {
        return Ok(Verdict::Fail("dual is reducible".into()));
    }
    Ok(expect(
        equivalent(&hd(&dual)?, sys)?.is_some(),
        "double dual is not equivalent to the input",
    ))
}

fn classical(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    if !sys.is_fuchsian() || !is_irreducible(sys) {
        return Ok(Verdict::Skip("needs an irreducible Fuchsian input".into()));
    }
    let lambda = GaussianRational::from_int([1, -1, 2, 3, -2][s.range(0, 4)]);
    let ours = mc(
        sys,
        &ScalarSystem::simple_pole(GaussianRational::zero(), lambda.clone()),
    )?;
    let oracle = dr_middle_convolution(sys, &lambda)?;
    let same = if ours.is_zero_pair() || oracle.is_zero_pair() {
        ours.is_zero_pair() && oracle.is_zero_pair()
    } else {
        equivalent(&ours, &oracle)?.is_some()
    };
    Ok(expect(
        same,
        "convolution disagrees with the classical construction",
    ))
}

fn normal_forms(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    let mut any = false;
    for part in &sys.parts {
        let nf = match compute_normal_form(part) {
            Ok(nf) => nf,
            Err(midconv::Error::NoNormalForm(_) | midconv::Error::IrrationalSpectrum) => continue,
            Err(e) => return Err(e),
        };
        any = true;
        let linear = stabilizer_dim(part, StabilizerMode::Linear)?;
        if linear != stabilizer_dim(part, StabilizerMode::Formula)? {
            return Ok(Verdict::Fail(format!(
                "stabilizer modes disagree at {}",
                part.point
            )));
        }
        let best = select_alpha(part)?.scalar_coefficients();
        let kernel = hat_kernel_dim(part, &best, KernelMode::Direct)?;
        if kernel != hat_kernel_dim(part, &best, KernelMode::Eigenspace)? {
            return Ok(Verdict::Fail(format!(
                "kernel modes disagree at {}",
                part.point
            )));
        }
        if linear > part.dim() * kernel {
            return Ok(Verdict::Fail(format!(
                "stabilizer bound violated at {}",
                part.point
            )));
        }
        let moved = gauge_coadjoint(&s.gauge(part.point.clone(), part.dim(), part.k()), part)?;
        if !compute_normal_form(&moved)?.equivalent_to(&nf)? {
            return Ok(Verdict::Fail(format!(
                "normal form not gauge invariant at {}",
                part.point
            )));
        }
    }
    Ok(if any {
        Verdict::Pass
    } else {
        Verdict::Skip("no pole admits a normal form".into())
    })
}

fn rigidity(sys: &System, s: &mut Sampler) -> Result<Verdict, midconv::Error> {
    if !sys.in_d0() || !is_irreducible(sys) {
        return Ok(Verdict::Skip(
            "needs an irreducible input without singularity at infinity".into(),
        ));
    }
    let c = s.invertible(sys.dimension);
    if rigidity_index(sys)? != rigidity_index(&sys.conjugate(&c)?)? {
        return Ok(Verdict::Fail(
            "rigidity index changed under conjugation".into(),
        ));
    }
    if let Some(part) = sys.parts.first() {
        let moved = sys.with_part(gauge_coadjoint(
            &s.gauge(part.point.clone(), part.dim(), part.k()),
            part,
        )?);
        if orbit_dim(&moved)? != orbit_dim(sys)? {
            return Ok(Verdict::Fail(
                "orbit dimension changed under a gauge".into(),
            ));
        }
    }
    if sys.dimension >= 1 && hd(sys)?.dimension < 2 * sys.dimension {
        return Ok(Verdict::Fail("dual rank is below twice the rank".into()));
    }
    Ok(Verdict::Pass)
}

const CHECKS: [(&str, Check); 10] = [
    ("section", section),
    ("padding", padding),
    ("equivariance", equivariance),
    ("gauge-group", gauge_group),
    ("conjugation", conjugation),
    ("residue-additivity", residue_additivity),
    ("duality", duality),
    ("classical-convolution", classical),
    ("normal-forms", normal_forms),
    ("rigidity", rigidity),
];

pub fn run_checks(sys: &System, seed: u64, trials: usize) -> Vec<CheckOutcome> {
    let mut sampler = Sampler::new(seed);
    CHECKS
        .iter()
        .map(|(name, check)| {
            let mut status = "pass";
            let mut detail = String::new();
            for trial in 0..trials.max(1) {
                match check(sys, &mut sampler) {
                    Ok(Verdict::Pass) => {}
                    Ok(Verdict::Skip(why)) => {
                        status = "skipped";
                        detail = why;
                        break;
                    }
                    Ok(Verdict::Fail(why)) => {
                        status = "fail";
                        detail = format!("trial {trial}: {why}");
                        break;
                    }
                    Err(e) => {
                        status = "fail";
                        detail = format!("trial {trial}: {}: {e}", e.name());
                        break;
                    }
                }
            }
            CheckOutcome {
                name,
                status,
                detail,
            }
        })
        .collect()
}
