//! Eigenvalues, Jordan data, generalized eigenspaces and centralizers.

use super::gaussian::GaussianRational;
use super::matrix::{Matrix, Vector};
use super::poly::char_poly;
use super::roots::{gaussian_roots, root_multiplicity};
use crate::error::{Error, Result};

/// Eigenvalues of `m` with algebraic multiplicities, sorted lexicographically.
///
/// Fails with [`Error::IrrationalSpectrum`] unless the characteristic
/// polynomial splits over `ℚ(i)`.
pub fn char_eigenvalues(m: &Matrix) -> Result<Vec<(GaussianRational, usize)>> {
    if m.rows() == 0 {
        return Ok(Vec::new());
    }
    let p = char_poly(m);
    let out: Vec<_> = gaussian_roots(&p)
        .into_iter()
        .map(|r| {
            let k = root_multiplicity(&p, &r);
            (r, k)
        })
        .collect();
    if out.iter().map(|(_, k)| k).sum::<usize>() != m.rows() {
        return Err(Error::IrrationalSpectrum);
    }
    Ok(out)
}

/// Smallest `k ≥ 0` with `N^k = 0`.
pub fn nilpotency_index(n: &Matrix) -> Result<usize> {
    let mut p = Matrix::identity(n.rows());
    for k in 0..=n.rows() {
        if p.is_zero() {
            return Ok(k);
        }
        p = &p * n;
    }
    Err(Error::NotNilpotent)
}

/// Jordan block sizes of a nilpotent matrix, in decreasing order.
///
/// The number of blocks of size at least `j` is `rank N^{j−1} − rank N^j`.
pub fn nilpotent_partition(n: &Matrix) -> Result<Vec<usize>> {
    nilpotency_index(n)?;
    Ok(partition_from_powers(n))
}

fn partition_from_powers(n: &Matrix) -> Vec<usize> {
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut p = Matrix::identity(dim);
    while *ranks.last().expect("nonempty") > 0 {
        p = &p * n;
        let r = p.rank();
        if r == *ranks.last().expect("nonempty") {
            break;
        }
        ranks.push(r);
    }
    // at_least[j-1] = #blocks of size >= j
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for j in 0..at_least.len() {
        let next = at_least.get(j + 1).copied().unwrap_or(0);
        for _ in 0..(at_least[j] - next) {
            parts.push(j + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Jordan type of `m`: each eigenvalue with the partition of its Jordan
/// blocks. Two matrices over `ℚ(i)` with split spectra are conjugate exactly
/// when their Jordan types agree.
pub fn jordan_type(m: &Matrix) -> Result<Vec<(GaussianRational, Vec<usize>)>> {
    let n = m.rows();
    char_eigenvalues(m)?
        .into_iter()
        .map(|(lambda, _)| {
            let shifted = m - &Matrix::scalar(n, &lambda);
            (lambda, partition_from_powers(&shifted))
        })
        .map(|(l, p)| Ok((l, p)))
        .collect()
}

/// One generalized eigenspace: the eigenvalue and an echelon basis of
/// `Ker (M − λ)^{dim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedEigenspace {
    pub eigenvalue: GaussianRational,
    pub basis: Vec<Vector>,
}

/// Splits the space into generalized eigenspaces of `m`, ordered like
/// [`char_eigenvalues`]. The bases concatenate to an invertible matrix.
pub fn generalized_eigendecomposition(m: &Matrix) -> Result<Vec<GeneralizedEigenspace>> {
    let n = m.rows();
    char_eigenvalues(m)?
        .into_iter()
        .map(|(eigenvalue, mult)| {
            let shifted = m - &Matrix::scalar(n, &eigenvalue);
            let basis = shifted.pow(mult).kernel();
            debug_assert_eq!(basis.len(), mult);
            Ok(GeneralizedEigenspace { eigenvalue, basis })
        })
        .collect()
}

/// Basis of the commutant `{X : XN = NX}`, i.e. the kernel of `X ↦ XN − NX`
/// written in row-major coordinates of `X`.
pub fn centralizer_basis(n: &Matrix) -> Vec<Matrix> {
    let d = n.rows();
    let mut sys = Matrix::zeros(d * d, d * d);
    // (XN − NX)_{ij} = Σ_k X_{ik} N_{kj} − N_{ik} X_{kj}
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            for k in 0..d {
                let a = n.get(k, j);
                if !a.is_zero() {
                    let v = sys.get(row, i * d + k) + a;
                    sys.set(row, i * d + k, v);
                }
                let b = n.get(i, k);
                if !b.is_zero() {
                    let v = sys.get(row, k * d + j) - b;
                    sys.set(row, k * d + j, v);
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| Matrix::from_vec(d, d, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn eigenvalues_examples() {
        assert_eq!(
            char_eigenvalues(&Matrix::from_ints(&[[1, 0], [0, 2]])).unwrap(),
            vec![(g(1), 1), (g(2), 1)]
        );
        let mut swap = char_eigenvalues(&Matrix::from_ints(&[[0, -1], [-1, 0]])).unwrap();
        swap.sort();
        assert_eq!(swap, vec![(g(-1), 1), (g(1), 1)]);
        let rot = char_eigenvalues(&Matrix::from_ints(&[[0, -1], [1, 0]])).unwrap();
        assert_eq!(
            rot,
            vec![
                (GaussianRational::int_pair(0, -1), 1),
                (GaussianRational::i(), 1)
            ]
        );
        assert_eq!(
            char_eigenvalues(&Matrix::from_ints(&[[0, 2], [1, 0]])),
            Err(Error::IrrationalSpectrum)
        );
    }

    #[test]
    fn partitions() {
        assert_eq!(
            nilpotent_partition(&Matrix::zeros(3, 3)).unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(
            nilpotent_partition(&Matrix::jordan_block(2)).unwrap(),
            vec![2]
        );
        let n = Matrix::block_diag(&[Matrix::jordan_block(2), Matrix::zeros(1, 1)]);
        assert_eq!(nilpotent_partition(&n).unwrap(), vec![2, 1]);
        assert_eq!(
            nilpotent_partition(&Matrix::identity(2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn generalized_eigenspaces() {
        let d = generalized_eigendecomposition(&Matrix::from_ints(&[[0, 0], [0, 1]])).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].eigenvalue.clone(), d[0].basis.len()), (g(0), 1));
        assert_eq!((d[1].eigenvalue.clone(), d[1].basis.len()), (g(1), 1));
        let d = generalized_eigendecomposition(&Matrix::from_ints(&[[1, 1], [0, 1]])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].basis.len(), 2);
        let d = generalized_eigendecomposition(&Matrix::zeros(2, 2)).unwrap();
        assert_eq!(d[0].basis, vec![vec![g(1), g(0)], vec![g(0), g(1)]]);
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_basis(&Matrix::zeros(2, 2)).len(), 4);
        let j = Matrix::jordan_block(2);
        let c = centralizer_basis(&j);
        assert_eq!(c.len(), 2);
        let span = Matrix::from_rows(c.iter().map(Matrix::flatten).collect(), 4);
        let with = span.vstack(&Matrix::from_rows(
            vec![Matrix::identity(2).flatten(), j.flatten()],
            4,
        ));
        assert_eq!(with.rank(), 2);
        let c = centralizer_basis(&Matrix::from_ints(&[[1, 0], [0, 2]]));
        assert_eq!(c, vec![Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1)]);
    }

    #[test]
    fn jordan_types() {
        let m = Matrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 5]]);
        assert_eq!(
            jordan_type(&m).unwrap(),
            vec![(g(2), vec![2]), (g(5), vec![1])]
        );
    }
}
