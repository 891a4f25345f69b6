//! Polynomial vectors: elements of `K[t]^n` with `n >= 2`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{Degree, Polynomial};
use crate::qmatrix::QMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyVector {
    components: Vec<Polynomial>,
}

impl PolyVector {
    /// Panics if fewer than two components are given; see [`PolyVector::try_new`].
    pub fn new(components: Vec<Polynomial>) -> Self {
        Self::try_new(components).expect("polynomial vector needs at least 2 components")
    }

    pub fn try_new(components: Vec<Polynomial>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::TooShort(components.len()));
        }
        Ok(Self { components })
    }

    /// Integer coefficients, ascending powers, one slice per component.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| Polynomial::from_ints(r)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Polynomial::zero(); n])
    }

    /// The `i`-th standard unit vector (0-based), as constant polynomials.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = vec![Polynomial::zero(); n];
        c[i] = Polynomial::one();
        Self::new(c)
    }

    /// Constant vector.
    pub fn constant(values: &[Rational]) -> Self {
        Self::new(values.iter().cloned().map(Polynomial::constant).collect())
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Maximum of the component degrees.
    pub fn degree(&self) -> Degree {
        self.components
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// The `n x (d+1)` coefficient matrix with columns indexed from 0 (the
    /// constant terms) to `d`.
    pub fn coefficient_matrix_with(&self, d: usize) -> QMatrix {
        QMatrix::from_rows(
            self.components
                .iter()
                .map(|p| (0..=d).map(|k| p.coeff(k)).collect())
                .collect(),
        )
    }

    /// Coefficient matrix padded to the vector's own degree (degree 0 for
    /// the zero vector).
    pub fn coefficient_matrix(&self) -> QMatrix {
        self.coefficient_matrix_with(self.degree().finite().unwrap_or(0))
    }

    /// Inverse of [`PolyVector::coefficient_matrix`].
    pub fn from_coefficient_matrix(m: &QMatrix) -> Self {
        Self::new(
            (0..m.rows())
                .map(|i| Polynomial::new(m.row(i).to_vec()))
                .collect(),
        )
    }

    /// Monic gcd of all components.
    pub fn gcd(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::GcdUndefined);
        }
        Ok(self
            .components
            .iter()
            .fold(Polynomial::zero(), |g, p| g.gcd(p)))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            components: self.components.iter().map(f).collect(),
        }
    }

    /// `v(t + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        self.map(|p| p.shift(s))
    }

    pub fn derivative(&self) -> Self {
        self.map(Polynomial::derivative)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        self.map(|p| p * f)
    }

    pub fn checked_add(&self, other: &PolyVector) -> Result<Self> {
        self.same_len(other)?;
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &PolyVector) -> Result<Self> {
        self.same_len(other)?;
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Adds a constant vector (translation).
    pub fn translate(&self, a: &[Rational]) -> Result<Self> {
        self.checked_add(&Self::constant(a))
    }

    /// `L v` for a constant `n x n` matrix `L`.
    pub fn left_mul(&self, l: &QMatrix) -> Result<Self> {
        if l.cols() != self.len() || l.rows() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: l.cols(),
                found: self.len(),
            });
        }
        Ok(Self {
            components: (0..l.rows())
                .map(|i| {
                    l.row(i)
                        .iter()
                        .zip(&self.components)
                        .filter(|(c, _)| !c.is_zero())
                        .fold(Polynomial::zero(), |acc, (c, p)| acc + p.scale(c))
                })
                .collect(),
        })
    }

    pub fn eval(&self, x: &Rational) -> Vec<Rational> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }

    fn same_len(&self, other: &PolyVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `sum_i v_i w_i`.
pub fn scalar_product(v: &PolyVector, w: &PolyVector) -> Result<Polynomial> {
    v.same_len(w)?;
    Ok(v.components
        .iter()
        .zip(&w.components)
        .fold(Polynomial::zero(), |acc, (a, b)| acc + a * b))
}

/// Outer product of `n - 1` vectors of length `n`: component `i` (1-based) is
/// `(-1)^(i+1)` times the determinant of `[u_1 ... u_{n-1}]` with row `i`
/// removed. Satisfies `<w, u_1 ^ ... ^ u_{n-1}> = det [w u_1 ... u_{n-1}]`.
pub fn outer_product(us: &[PolyVector]) -> Result<PolyVector> {
    let n = us.len() + 1;
    if us.is_empty() {
        return Err(Error::WrongCount {
            expected: 1,
            found: 0,
        });
    }
    if let Some(bad) = us.iter().find(|u| u.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let u = PolyMatrix::from_columns(us);
    let comps = (0..n)
        .map(|i| {
            let keep: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let det = u.select_rows(&keep).determinant()?;
            Ok(if i % 2 == 0 { det } else { -det })
        })
        .collect::<Result<Vec<_>>>()?;
    PolyVector::try_new(comps)
}
