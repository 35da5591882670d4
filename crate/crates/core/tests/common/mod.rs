#![allow(dead_code)]

use midconv::exactalg::{GaussianRational, Matrix};
use midconv::sample::Sampler;
use midconv::systems::{gauge_coadjoint, PrincipalPart, System, TruncatedGauge};

pub fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

pub fn ints(rows: &[[i64; 2]; 2]) -> Matrix {
    Matrix::from_ints(rows)
}

/// Rank-2 irreducible Fuchsian triple with nilpotent residues.
pub fn nilpotent_triple() -> System {
    let e12 = Matrix::unit(2, 0, 1);
    let e21 = Matrix::unit(2, 1, 0);
    let third = (&e12 + &e21).scale(&g(-1));
    System::fuchsian(2, vec![(g(0), e12), (g(1), e21), (g(-1), third)]).unwrap()
}

/// Residues with two distinct integer eigenvalues each, summing to zero.
pub fn semisimple_triple() -> System {
    System::fuchsian(
        2,
        vec![
            (g(0), ints(&[[2, 0], [0, 0]])),
            (g(1), ints(&[[-3, -3], [-2, -2]])),
            (g(-1), ints(&[[1, 3], [2, 2]])),
        ],
    )
    .unwrap()
}

pub fn semisimple_quadruple() -> System {
    System::fuchsian(
        2,
        vec![
            (g(0), ints(&[[1, 0], [0, 0]])),
            (g(1), ints(&[[0, 1], [0, 1]])),
            (g(2), ints(&[[0, 0], [2, 1]])),
            (g(3), ints(&[[-1, -1], [-2, -2]])),
        ],
    )
    .unwrap()
}

/// A rank-2 part of order `d ≥ 2` at `point` whose normal form is diagonal
/// with leading eigenvalues `lead`, and whose residue equals `residue`.
///
/// Built as `g · Λ` with `g = I + X z + … + U z^{d−1}`: the residue of
/// `g · Λ` is `Λ_1 + [U, Λ_d] + (terms free of Λ_1 and U)`, so `Λ_1` fixes
/// the diagonal and `U` the off-diagonal entries.
pub fn irregular_part(point: i64, d: usize, lead: (i64, i64), residue: &Matrix) -> PrincipalPart {
    assert!(d >= 2 && lead.0 != lead.1);
    let t = g(point);
    let mut lambda = vec![Matrix::zeros(2, 2); d];
    lambda[d - 1] = Matrix::from_ints(&[[lead.0, 0], [0, lead.1]]);
    for (j, slot) in lambda.iter_mut().enumerate().take(d - 1).skip(1) {
        *slot = Matrix::from_ints(&[[j as i64, 0], [0, -(j as i64) - 1]]);
    }
    let mut gauge = vec![Matrix::identity(2)];
    for m in 1..d - 1 {
        gauge.push(Matrix::from_ints(&[[0, 1], [m as i64, 1]]));
    }
    gauge.push(Matrix::zeros(2, 2));
    let apply = |lambda: &[Matrix], gauge: &[Matrix]| {
        let g = TruncatedGauge::new(t.clone(), gauge.to_vec()).unwrap();
        gauge_coadjoint(&g, &PrincipalPart::new(t.clone(), lambda.to_vec()).unwrap()).unwrap()
    };
    let defect = residue - &apply(&lambda, &gauge).coefficient(1);
    let mut l1 = Matrix::zeros(2, 2);
    let mut u = Matrix::zeros(2, 2);
    let gap = &g(lead.1) - &g(lead.0);
    for i in 0..2 {
        l1.set(i, i, defect.get(i, i).clone());
    }
    u.set(0, 1, defect.get(0, 1) / &gap);
    u.set(1, 0, defect.get(1, 0) / &(-&gap));
    lambda[0] = l1;
    gauge[d - 1] = u;
    let part = apply(&lambda, &gauge);
    assert_eq!(&part.coefficient(1), residue);
    part
}

/// Rank-2 pair in `𝒟⁰` realizing the pole-order vector `orders` (zero
/// entries are omitted points), with semisimple leading terms throughout.
pub fn rank_two_fixture(orders: &[usize]) -> System {
    let fuchsian = [
        ints(&[[-3, -3], [-2, -2]]),
        ints(&[[1, 3], [2, 2]]),
        ints(&[[2, 0], [0, 0]]),
    ];
    let leads = [(1, -1), (2, 1), (1, 3)];
    if orders.iter().all(|&d| d <= 1) {
        return match orders.iter().filter(|&&d| d == 1).count() {
            3 => semisimple_triple(),
            4 => semisimple_quadruple(),
            n => panic!("no Fuchsian fixture with {n} poles"),
        };
    }
    let mut parts = Vec::new();
    let mut total = Matrix::zeros(2, 2);
    let mut fuchsian_used = 0;
    let last_irregular = orders.iter().rposition(|&d| d >= 2).unwrap();
    for (i, &d) in orders.iter().enumerate() {
        let t = g(i as i64);
        match d {
            0 => {}
            1 => {
                let r = fuchsian[fuchsian_used].clone();
                fuchsian_used += 1;
                total = &total + &r;
                parts.push(PrincipalPart::new(t, vec![r]).unwrap());
            }
            _ if i == last_irregular => {}
            _ => {
                let r = ints(&[[1, 2], [-1, 0]]);
                total = &total + &r;
                parts.push(irregular_part(i as i64, d, leads[i], &r));
            }
        }
    }
    let closing = total.scale(&g(-1));
    parts.push(irregular_part(
        last_irregular as i64,
        orders[last_irregular],
        leads[last_irregular],
        &closing,
    ));
    System::new(2, Matrix::zeros(2, 2), parts).unwrap()
}

/// A part whose normal form has the given spectra, hidden by a random gauge.
/// Each spectrum is `(λ_2, …, λ_k)` with a residue block `Γ`.
pub fn gauged_normal_form(
    s: &mut Sampler,
    point: GaussianRational,
    spectra: &[(Vec<i64>, Matrix)],
    k: usize,
) -> PrincipalPart {
    let n: usize = spectra.iter().map(|(_, gm)| gm.rows()).sum();
    let coefficients = (1..=k)
        .map(|j| {
            let blocks: Vec<Matrix> = spectra
                .iter()
                .map(|(l, gm)| {
                    if j == 1 {
                        gm.clone()
                    } else {
                        Matrix::scalar(gm.rows(), &g(l.get(j - 2).copied().unwrap_or(0)))
                    }
                })
                .collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let lambda = PrincipalPart::new(point.clone(), coefficients).unwrap();
    let gauge = s.gauge(point, n, k);
    gauge_coadjoint(&gauge, &lambda).unwrap()
}

/// An upper-triangular `m × m` matrix with eigenvalues drawn from a small set,
/// so repeated eigenvalues and nontrivial Jordan blocks occur.
pub fn triangular(s: &mut Sampler, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for i in 0..m {
        out.set(i, i, g(s.range(0, 1) as i64));
        for j in i + 1..m {
            out.set(i, j, g(s.int()));
        }
    }
    out
}
