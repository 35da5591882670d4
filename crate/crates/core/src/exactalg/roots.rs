//! Roots in `ℚ(i)` of polynomials over `ℚ(i)`.
//!
//! After passing to the squarefree part and clearing denominators, every root
//! in `ℚ(i)` becomes a Gaussian integer `a + bi` of bounded size. The two
//! embeddings `i ↦ ±ι` into `ℤ/p^e` (for a prime `p ≡ 1 mod 4` with
//! `ι² ≡ −1`) send that root to `a ± bι`; Hensel lifting recovers both
//! residues and hence `a` and `b`. Every candidate is checked exactly, so the
//! modular stage only has to be complete, never correct.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gaussian::{GaussianRational, Rational};
use super::poly::Poly;

/// Distinct roots of `p` lying in `ℚ(i)`, sorted lexicographically.
pub fn gaussian_roots(p: &Poly) -> Vec<GaussianRational> {
    let g = p.squarefree();
    let n = match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    if n == 1 {
        return vec![-g.coeffs()[0].clone()];
    }
    let m = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    // h(x) = m^n g(x/m) is monic with Gaussian-integer coefficients.
    let h: Vec<(BigInt, BigInt)> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let s = Rational::from_integer(num_traits::pow(m.clone(), n - k));
            let re = &c.re * &s;
            let im = &c.im * &s;
            debug_assert!(re.is_integer() && im.is_integer());
            (re.to_integer(), im.to_integer())
        })
        .collect();
    let bound = BigInt::one()
        + h[..n]
            .iter()
            .map(|(a, b)| a.abs() + b.abs())
            .max()
            .unwrap_or_else(BigInt::zero);

    let (prime, iota) = choose_prime(&h);
    let pb = BigInt::from(prime);
    let mut modulus = pb.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &pb;
    }
    let phi = &modulus / &pb * (&pb - 1u32);
    let iota_e = hensel_lift(
        &[BigInt::one(), BigInt::zero(), BigInt::one()],
        BigInt::from(iota),
        &modulus,
        &phi,
    );

    let f_plus = embed(&h, &iota_e, &modulus);
    let f_minus = embed(&h, &(&modulus - &iota_e), &modulus);
    let lift_all = |f: &[BigInt]| -> Vec<BigInt> {
        let small: Vec<u64> = f
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect();
        roots_mod_prime(&small, prime)
            .into_iter()
            .map(|r| hensel_lift(f, BigInt::from(r), &modulus, &phi))
            .collect()
    };
    let plus = lift_all(&f_plus);
    let minus = lift_all(&f_minus);

    let inv2 = mod_inv(&BigInt::from(2), &modulus, &phi);
    let inv2iota = mod_inv(&(&iota_e * 2u32), &modulus, &phi);
    let m_rat = GaussianRational::real(Rational::from_integer(m));
    let mut found = Vec::new();
    for r1 in &plus {
        for r2 in &minus {
            let a = symmetric((r1 + r2) * &inv2, &modulus);
            let b = symmetric((r1 - r2) * &inv2iota, &modulus);
            if a.abs() > bound || b.abs() > bound {
                continue;
            }
            let rho = GaussianRational::new(Rational::from_integer(a), Rational::from_integer(b));
            let root = &rho / &m_rat;
            if g.eval(&root).is_zero() && !found.contains(&root) {
                found.push(root);
            }
        }
    }
    found.sort();
    found
}

/// Multiplicity of `x` as a root of `p` (zero when it is not a root).
pub fn root_multiplicity(p: &Poly, x: &GaussianRational) -> usize {
    let lin = Poly::new(vec![-x.clone(), GaussianRational::one()]);
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() {
        let (quot, rem) = q.div_rem(&lin);
        if !rem.is_zero() {
            break;
        }
        q = quot;
        k += 1;
    }
    k
}

fn symmetric(x: BigInt, modulus: &BigInt) -> BigInt {
    let r = x.mod_floor(modulus);
    if &r * 2u32 > *modulus {
        r - modulus
    } else {
        r
    }
}

fn mod_inv(a: &BigInt, modulus: &BigInt, phi: &BigInt) -> BigInt {
    a.mod_floor(modulus).modpow(&(phi - 1u32), modulus)
}

fn embed(h: &[(BigInt, BigInt)], iota: &BigInt, modulus: &BigInt) -> Vec<BigInt> {
    h.iter()
        .map(|(a, b)| (a + b * iota).mod_floor(modulus))
        .collect()
}

fn eval_mod(f: &[BigInt], x: &BigInt, modulus: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(modulus))
}

fn deriv(f: &[BigInt]) -> Vec<BigInt> {
    f.iter().enumerate().skip(1).map(|(k, c)| c * k).collect()
}

/// Newton iteration from a simple root modulo `p` to a root modulo `modulus`.
fn hensel_lift(f: &[BigInt], mut r: BigInt, modulus: &BigInt, phi: &BigInt) -> BigInt {
    let df = deriv(f);
    for _ in 0..128 {
        let v = eval_mod(f, &r, modulus);
        if v.is_zero() {
            break;
        }
        let d = eval_mod(&df, &r, modulus);
        r = (r - v * mod_inv(&d, modulus, phi)).mod_floor(modulus);
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Picks the smallest prime `p ≡ 1 (mod 4)` for which both embeddings of `h`
/// stay squarefree modulo `p`, together with a square root of `−1`.
fn choose_prime(h: &[(BigInt, BigInt)]) -> (u64, u64) {
    let mut p = 5u64;
    loop {
        if is_prime(p) {
            let iota = (2..p)
                .find(|x| (x * x + 1) % p == 0)
                .expect("p ≡ 1 mod 4 has a square root of -1");
            let pb = BigInt::from(p);
            let ok = [iota, p - iota].iter().all(|&io| {
                let f: Vec<u64> = h
                    .iter()
                    .map(|(a, b)| (a + b * io).mod_floor(&pb).to_u64().expect("residue fits"))
                    .collect();
                squarefree_mod(&f, p)
            });
            if ok {
                return (p, iota);
            }
        }
        p += 4;
    }
}

fn pmod(x: u64, p: u64) -> u64 {
    x % p
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = inv_mod_p(b[db], p);
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r[r.len() - 1] * inv % p;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] = pmod(r[shift + k] + p * p - f * c % p, p);
        }
        r = trim(r);
    }
    r
}

fn squarefree_mod(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let df: Vec<u64> = trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * (k as u64 % p) % p)
            .collect(),
    );
    if df.is_empty() {
        return false;
    }
    let (mut a, mut b) = (f, df);
    while !b.is_empty() {
        let r = rem_mod_p(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn roots_mod_prime(f: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gaussian::rat;

    fn poly_from_roots(roots: &[GaussianRational]) -> Poly {
        let mut c = vec![GaussianRational::one()];
        for r in roots {
            let mut next = vec![GaussianRational::zero(); c.len() + 1];
            for (k, x) in c.iter().enumerate() {
                next[k + 1] += x;
                next[k] -= &(x * r);
            }
            c = next;
        }
        Poly::new(c)
    }

    #[test]
    fn finds_gaussian_roots_with_multiplicity() {
        let roots = vec![
            GaussianRational::new(rat(3, 2), rat(-1, 3)),
            GaussianRational::new(rat(3, 2), rat(-1, 3)),
            GaussianRational::int_pair(0, 1),
            GaussianRational::frac(-7, 5),
        ];
        let p = poly_from_roots(&roots);
        let mut expect = roots.clone();
        expect.sort();
        expect.dedup();
        assert_eq!(gaussian_roots(&p), expect);
        assert_eq!(root_multiplicity(&p, &roots[0]), 2);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        // x^2 - 2
        let p = Poly::new(vec![
            GaussianRational::from_int(-2),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]);
        assert!(gaussian_roots(&p).is_empty());
    }

    #[test]
    fn large_roots() {
        let roots = vec![
            GaussianRational::int_pair(123456, -98765),
            GaussianRational::frac(1, 1000),
        ];
        let mut expect = roots.clone();
        expect.sort();
        assert_eq!(gaussian_roots(&poly_from_roots(&roots)), expect);
    }
}
