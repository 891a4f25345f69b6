//! Minimal-degree Bezout vectors and degree-ordered mu-bases, both read off
//! the reduced Sylvester system, plus a brute-force Bezout-degree oracle.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::qmatrix::QMatrix;
use crate::rational::Rational;
use crate::sylvester::{build_sylvester, flat, SylvesterSystem};
use crate::vector::{outer_product, PolyVector};

/// A normalized Bezout vector: `<v, b> = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutVector {
    pub b: PolyVector,
    pub degree: usize,
}

/// A degree-ordered mu-basis with `outer_product(elements) = lambda * v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuBasis {
    pub elements: Vec<PolyVector>,
    pub lambda: Rational,
}

impl MuBasis {
    pub fn degrees(&self) -> Vec<Degree> {
        self.elements.iter().map(PolyVector::degree).collect()
    }

    /// The same basis with the last element divided by `lambda`, so the outer
    /// product equals `v` exactly.
    pub fn normalized(&self) -> Vec<PolyVector> {
        let mut out = self.elements.clone();
        if let Some(last) = out.last_mut() {
            *last = last.scale(&self.lambda.recip());
        }
        out
    }
}

/// The pivot-supported solution of `A x = e_1`, which has minimal degree
/// among all Bezout vectors of `v`.
pub fn minimal_bezout(v: &PolyVector) -> Result<BezoutVector> {
    bezout_from_system(&build_sylvester(v).map_err(|_| Error::NoBezoutVector)?)
}

pub fn bezout_from_system(sys: &SylvesterSystem) -> Result<BezoutVector> {
    let x = sys.pivot_solution().ok_or(Error::NoBezoutVector)?;
    let b = flat(&x, sys.n(), sys.d())?;
    let degree = b.degree().finite().expect("Bezout vector is nonzero");
    Ok(BezoutVector { b, degree })
}

/// One syzygy per basic non-pivot column of `A`, in ascending column order
/// (hence ascending degree).
pub fn mu_basis(v: &PolyVector) -> Result<MuBasis> {
    mu_basis_from_system(&build_sylvester(v).map_err(|_| Error::NoBezoutVector)?)
}

pub fn mu_basis_from_system(sys: &SylvesterSystem) -> Result<MuBasis> {
    if !sys.is_full_rank() {
        return Err(Error::NoBezoutVector);
    }
    let elements = sys
        .basic_nonpivot_cols()
        .into_iter()
        .map(|j| flat(&sys.kernel_vector(j), sys.n(), sys.d()))
        .collect::<Result<Vec<_>>>()?;
    let lambda = proportionality(&outer_product(&elements)?, sys.vector())
        .expect("outer product of a mu-basis is a nonzero multiple of v");
    Ok(MuBasis { elements, lambda })
}

/// `Some(lambda)` with `w = lambda * v` and `lambda != 0`.
fn proportionality(w: &PolyVector, v: &PolyVector) -> Option<Rational> {
    let i = v.components().iter().position(|p| !p.is_zero())?;
    let lambda = w.get(i).leading_coeff()? / v.get(i).leading_coeff()?;
    (v.scale(&lambda) == *w).then_some(lambda)
}

/// Smallest `e` such that some `b` with `deg b <= e` satisfies `<v, b> = 1`.
///
/// Independent of the Sylvester machinery: for each `e` the linear system in
/// the coefficients of `b` is assembled from the products `t^j v_i` and its
/// feasibility decided by comparing ranks with and without the right-hand side.
pub fn bezout_degree_oracle(v: &PolyVector) -> Result<usize> {
    if v.gcd()? != Polynomial::one() {
        return Err(Error::NoBezoutVector);
    }
    let d = v.degree().finite().expect("nonzero");
    let n = v.len();
    for e in 0.. {
        let rows = d + e + 1;
        let mut cols = Vec::with_capacity(n * (e + 1) + 1);
        for j in 0..=e {
            for p in v.components() {
                let shifted = p * &Polynomial::monomial(Rational::one(), j);
                cols.push((0..rows).map(|r| shifted.coeff(r)).collect::<Vec<_>>());
            }
        }
        let system = QMatrix::from_columns(&cols);
        let mut rhs = vec![Rational::zero(); rows];
        rhs[0] = Rational::one();
        cols.push(rhs);
        if system.rank() == QMatrix::from_columns(&cols).rank() {
            return Ok(e);
        }
    }
    unreachable!("a Bezout vector of degree < deg v exists when gcd is 1")
}
