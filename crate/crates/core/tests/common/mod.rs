//! Seeded generators shared by the integration and acceptance suites.
#![allow(dead_code)]

use affine_frames::{
    check_regular, validate_generic, AffineElement, GroupElement, PolyVector, Polynomial, QMatrix,
    Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational: numerator in [-4, 4], denominator in {1, 2, 3}.
pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = *[1, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Polynomial of degree exactly `deg`; each lower coefficient is zero with
/// probability `sparsity`.
pub fn poly(rng: &mut ChaCha8Rng, deg: usize, sparsity: f64) -> Polynomial {
    let mut c: Vec<Rational> = (0..deg)
        .map(|_| {
            if rng.gen_bool(sparsity) {
                Rational::zero()
            } else {
                rational(rng)
            }
        })
        .collect();
    c.push(nonzero_rational(rng));
    Polynomial::new(c)
}

/// Vector of degree exactly `d`, with a random mix of component degrees and
/// sparse coefficients so non-generic pivot profiles occur.
pub fn vector(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PolyVector {
    let top = rng.gen_range(0..n);
    let sparsity = if rng.gen_bool(0.5) { 0.4 } else { 0.1 };
    PolyVector::new(
        (0..n)
            .map(|i| {
                if i == top {
                    poly(rng, d, sparsity)
                } else if rng.gen_bool(0.15) {
                    Polynomial::zero()
                } else {
                    let deg = rng.gen_range(0..=d);
                    poly(rng, deg, sparsity)
                }
            })
            .collect(),
    )
}

/// Vector with `gcd = 1` and degree in `1..=max_d`.
pub fn coprime_vector(rng: &mut ChaCha8Rng, n: usize, max_d: usize) -> PolyVector {
    loop {
        let d = rng.gen_range(1..=max_d);
        let v = vector(rng, n, d);
        if v.gcd().is_ok_and(|g| g == Polynomial::one()) {
            return v;
        }
    }
}

/// Regular vector: `gcd = 1`, independent components, `n <= deg <= max_d`.
pub fn regular_vector(rng: &mut ChaCha8Rng, n: usize, max_d: usize) -> PolyVector {
    assert!(max_d >= n);
    loop {
        let d = rng.gen_range(n..=max_d);
        let v = vector(rng, n, d);
        if check_regular(&v).is_ok() {
            return v;
        }
    }
}

/// Generic curve with zero constant term, `n < deg <= max_deg`.
pub fn generic_curve(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> PolyVector {
    assert!(max_deg > n);
    loop {
        let d = rng.gen_range(n + 1..=max_deg);
        let c = vector(rng, n, d);
        if validate_generic(&c).is_ok() {
            return c;
        }
    }
}

/// Random element of `SL_n(Q)`: lower and upper unitriangular factors, a
/// determinant-1 diagonal and a signed permutation.
pub fn sl(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut lower = QMatrix::identity(n);
    let mut upper = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(0.6) {
                lower.set(i, j, rational(rng));
            }
            if rng.gen_bool(0.6) {
                upper.set(j, i, rational(rng));
            }
        }
    }
    let mut diag = QMatrix::identity(n);
    let a = nonzero_rational(rng);
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    diag.set(i, i, a.clone());
    diag.set(j, j, a.recip());

    let mut perm: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        perm.swap(k, rng.gen_range(0..=k));
    }
    let mut p = QMatrix::zeros(n, n);
    for (r, &c) in perm.iter().enumerate() {
        p.set(r, c, Rational::one());
    }
    let det = p.det().unwrap();
    p.scale_column(0, &det);

    let m = &(&(&lower * &upper) * &diag) * &p;
    debug_assert!(m.det().unwrap().is_one());
    m
}

pub fn group(rng: &mut ChaCha8Rng, n: usize) -> GroupElement {
    let l = sl(rng, n);
    GroupElement::new(l, rational(rng)).unwrap()
}

pub fn affine(rng: &mut ChaCha8Rng, n: usize) -> AffineElement {
    let l = sl(rng, n);
    let a = (0..n).map(|_| rational(rng)).collect();
    AffineElement::new(l, a, rational(rng)).unwrap()
}
