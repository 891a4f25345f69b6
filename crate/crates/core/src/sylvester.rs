//! The Sylvester-type matrix `A` of a polynomial vector and the sharp/flat
//! isomorphism between `K[t]^n_{<=d}` and `K^{n(d+1)}`.
//!
//! `A` is `(2d+1) x n(d+1)`. Its `j`-th block of `n` columns holds the
//! transposed coefficient matrix `V^T`, shifted down by `j` rows, so that
//! `flat(A sharp(h)) = <v, h>`.
//!
//! Column indices of `A` reported by the accessors are **1-based**. Columns of
//! a coefficient matrix `V` elsewhere in the crate are 0-based (column `j`
//! holds the `t^j` coefficients).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::qmatrix::QMatrix;
use crate::rational::Rational;
use crate::vector::PolyVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterSystem {
    v: PolyVector,
    d: usize,
    a: QMatrix,
    /// Reduced row-echelon form of `[A | e_1]`.
    augmented: QMatrix,
    /// 0-based pivots of `A` (never includes the augmented column).
    pivots: Vec<usize>,
    /// Whether `A x = e_1` is solvable.
    consistent: bool,
}

/// Builds `A` and eliminates `[A | e_1]` once; both the Bezout vector and the
/// mu-basis are read off this single reduced form.
pub fn build_sylvester(v: &PolyVector) -> Result<SylvesterSystem> {
    let d = v.degree().finite().ok_or(Error::ZeroVector)?;
    let n = v.len();
    let mut a = QMatrix::zeros(2 * d + 1, n * (d + 1));
    for block in 0..=d {
        for (i, p) in v.components().iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                a.set(block + k, block * n + i, c.clone());
            }
        }
    }
    let mut e1 = QMatrix::zeros(2 * d + 1, 1);
    e1.set(0, 0, Rational::one());
    let rref = a.hstack(&e1).rref();
    let cols = a.cols();
    let consistent = rref.pivots.last() != Some(&cols);
    let pivots = rref.pivots.into_iter().filter(|&p| p < cols).collect();
    Ok(SylvesterSystem {
        v: v.clone(),
        d,
        a,
        augmented: rref.matrix,
        pivots,
        consistent,
    })
}

impl SylvesterSystem {
    pub fn vector(&self) -> &PolyVector {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.a
    }

    /// The reduced row-echelon form of `A`.
    pub fn rref(&self) -> QMatrix {
        let keep: Vec<usize> = (0..self.a.cols()).collect();
        self.augmented.select_columns(&keep)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Whether `gcd(v) = 1`, i.e. `A` has full row rank `2d + 1`.
    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.a.rows()
    }

    /// Pivot columns `p`, 1-based, ascending.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p + 1).collect()
    }

    /// Non-pivot columns `q`, 1-based, ascending.
    pub fn nonpivot_cols(&self) -> Vec<usize> {
        (0..self.a.cols())
            .filter(|c| !self.pivots.contains(c))
            .map(|c| c + 1)
            .collect()
    }

    /// Basic non-pivot columns: the smallest element of `q` in each residue
    /// class mod `n`, 1-based, ascending.
    pub fn basic_nonpivot_cols(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for j in self.nonpivot_cols() {
            let class = (j - 1) % n;
            if !seen[class] {
                seen[class] = true;
                out.push(j);
            }
        }
        out
    }

    /// `A h`.
    pub fn apply(&self, h: &[Rational]) -> Result<Vec<Rational>> {
        if h.len() != self.a.cols() {
            return Err(Error::LengthMismatch {
                len: h.len(),
                n: self.n(),
                d: self.d,
            });
        }
        self.a.mul_vec(h)
    }

    /// The solution of `A x = e_1` supported on pivot columns, or `None` when
    /// the system is inconsistent (gcd of `v` is not 1).
    pub fn pivot_solution(&self) -> Option<Vec<Rational>> {
        if !self.consistent {
            return None;
        }
        let last = self.a.cols();
        let mut x = vec![Rational::zero(); last];
        for (r, &p) in self.pivots.iter().enumerate() {
            x[p] = self.augmented.get(r, last).clone();
        }
        Some(x)
    }

    /// Kernel vector of `A` attached to the non-pivot column `j` (1-based):
    /// `e_j` minus the RREF entries of column `j` placed at the pivots.
    pub fn kernel_vector(&self, j: usize) -> Vec<Rational> {
        let col = j - 1;
        let mut x = vec![Rational::zero(); self.a.cols()];
        x[col] = Rational::one();
        for (r, &p) in self.pivots.iter().enumerate() {
            if p < col {
                x[p] = -self.augmented.get(r, col);
            }
        }
        x
    }
}

/// Stacks the coefficient columns of `h` (column `j` holds the `t^j`
/// coefficients), giving a vector of length `n(d+1)`.
pub fn sharp(h: &PolyVector, n: usize, d: usize) -> Result<Vec<Rational>> {
    if h.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.len(),
        });
    }
    if let Some(deg) = h.degree().finite().filter(|&deg| deg > d) {
        return Err(Error::DegreeExceeds {
            degree: deg,
            bound: d,
        });
    }
    Ok((0..=d)
        .flat_map(|j| h.components().iter().map(move |p| p.coeff(j)))
        .collect())
}

/// Inverse of [`sharp`] for `n >= 2`.
pub fn flat(h: &[Rational], n: usize, d: usize) -> Result<PolyVector> {
    check_len(h, n, d)?;
    PolyVector::try_new(
        (0..n)
            .map(|i| Polynomial::new((0..=d).map(|j| h[j * n + i].clone()).collect()))
            .collect(),
    )
}

/// [`flat`] with `n = 1`: reads `h` as the coefficients of one polynomial.
pub fn flat_scalar(h: &[Rational], d: usize) -> Result<Polynomial> {
    check_len(h, 1, d)?;
    Ok(Polynomial::new(h.to_vec()))
}

fn check_len(h: &[Rational], n: usize, d: usize) -> Result<()> {
    if h.len() != n * (d + 1) {
        return Err(Error::LengthMismatch { len: h.len(), n, d });
    }
    Ok(())
}
