//! Polynomial matrices and their exact determinants.

use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::qmatrix::QMatrix;
use crate::rational::Rational;
use crate::vector::PolyVector;

/// Above this size the determinant falls back to cofactor expansion.
const BAREISS_MAX_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_constant(&QMatrix::identity(n))
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Panics if the columns differ in length.
    pub fn from_columns(cols: &[PolyVector]) -> Self {
        let r = cols.first().map_or(0, PolyVector::len);
        let mut m = Self::zeros(r, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, p) in col.components().iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn from_constant(m: &QMatrix) -> Self {
        Self::from_rows(
            m.to_rows()
                .into_iter()
                .map(|row| row.into_iter().map(Polynomial::constant).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as a vector. Panics if the matrix has fewer than 2 rows.
    pub fn column(&self, j: usize) -> PolyVector {
        PolyVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<PolyVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn column_degrees(&self) -> Vec<Degree> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).degree())
                    .max()
                    .unwrap_or(Degree::NegInfinity)
            })
            .collect()
    }

    /// Sum of the column degrees.
    pub fn degree(&self) -> Degree {
        self.column_degrees().into_iter().sum()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise `W(t + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        self.map(|p| p.shift(s))
    }

    pub fn scale_column(&mut self, j: usize, c: &Rational) {
        for i in 0..self.rows {
            let p = self.get(i, j).scale(c);
            self.set(i, j, p);
        }
    }

    /// `L W` for a constant matrix `L`.
    pub fn left_mul(&self, l: &QMatrix) -> Result<Self> {
        if l.cols() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: l.cols(),
                found: self.rows,
            });
        }
        let mut out = Self::zeros(l.rows(), self.cols);
        for i in 0..l.rows() {
            for k in 0..self.rows {
                let c = l.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let p = out.get(i, j) + self.get(k, j).scale(c);
                    out.set(i, j, p);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &PolyMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let p = (0..self.cols).fold(Polynomial::zero(), |acc, k| {
                    acc + self.get(i, k) * rhs.get(k, j)
                });
                out.set(i, j, p);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: &Rational) -> QMatrix {
        QMatrix::from_rows(
            (0..self.rows)
                .map(|i| self.row(i).iter().map(|p| p.eval(x)).collect())
                .collect(),
        )
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant: fraction-free Bareiss elimination over `K[t]` up to
    /// 6x6, cofactor expansion beyond.
    pub fn determinant(&self) -> Result<Polynomial> {
        self.require_square()?;
        if self.rows <= BAREISS_MAX_DIM {
            Ok(self.det_bareiss())
        } else {
            Ok(self.det_cofactor())
        }
    }

    pub(crate) fn det_bareiss(&self) -> Polynomial {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one();
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Polynomial::zero();
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
                }
                m[i][k] = Polynomial::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub(crate) fn det_cofactor(&self) -> Polynomial {
        let n = self.rows;
        match n {
            0 => Polynomial::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                (0..n)
                    .filter(|&j| !self.get(0, j).is_zero())
                    .fold(Polynomial::zero(), |acc, j| {
                        let term = self.get(0, j) * self.minor(0, j).det_cofactor();
                        if j % 2 == 0 {
                            acc + term
                        } else {
                            acc - term
                        }
                    })
            }
        }
    }

    /// The submatrix with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        Self::from_rows(
            (0..self.rows)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..self.cols)
                        .filter(|&c| c != j)
                        .map(|c| self.get(r, c).clone())
                        .collect()
                })
                .collect(),
        )
    }

    /// Adjugate (transposed cofactor matrix): `A adj(A) = det(A) I`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).determinant()?;
                adj.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        Ok(adj)
    }

    /// Inverse of a unimodular matrix (nonzero constant determinant).
    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant()?;
        match det.as_constant() {
            Some(c) if !c.is_zero() => {
                let inv = c.recip();
                Ok(self.adjugate()?.map(|p| p.scale(&inv)))
            }
            _ => Err(Error::NotUnimodular {
                det: det.to_string(),
            }),
        }
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;

    /// Panics on incompatible shapes; see [`PolyMatrix::checked_mul`].
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_mul(rhs).expect("incompatible shapes")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn frame_f() -> PolyMatrix {
        PolyMatrix::from_rows(vec![
            vec![p(&[1]), p(&[]), p(&[])],
            vec![p(&[0, 2]), p(&[2]), p(&[])],
            vec![p(&[0, 0, 0, 4]), p(&[]), Polynomial::constant(q(1, 2))],
        ])
    }

    #[test]
    fn degree_is_sum_of_column_degrees() {
        assert_eq!(frame_f().degree(), Degree::Finite(3));
        let mut g = frame_f();
        g.set(2, 1, Polynomial::monomial(qi(1), 2023));
        assert_eq!(g.degree(), Degree::Finite(2026));
        assert_eq!(PolyMatrix::identity(3).degree(), Degree::Finite(0));
        assert_eq!(PolyMatrix::zeros(2, 2).degree(), Degree::NegInfinity);
    }

    #[test]
    fn determinant_examples() {
        let m1 = PolyMatrix::from_rows(vec![
            vec![p(&[1, 0, 0, 0, 0, 0, 1]), p(&[]), p(&[0, 0, 0, 1])],
            vec![p(&[0, 0, 0, 1]), p(&[]), p(&[1])],
            vec![p(&[0, 1]), p(&[-1]), p(&[])],
        ]);
        assert_eq!(m1.determinant().unwrap(), Polynomial::one());
        assert_eq!(
            PolyMatrix::identity(4).determinant().unwrap(),
            Polynomial::one()
        );
        assert_eq!(frame_f().determinant().unwrap(), Polynomial::one());

        let c = PolyVector::from_ints(&[&[1, 1], &[0, 3], &[2]]);
        let twin = PolyMatrix::from_columns(&[c.clone(), PolyVector::unit(3, 1), c]);
        assert!(twin.determinant().unwrap().is_zero());
        assert!(PolyMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0]), p(&[1, 1]), p(&[2]), p(&[0, 0, 1])],
            vec![p(&[3, 0, 1]), p(&[0]), p(&[1, -1]), p(&[5])],
            vec![p(&[1]), p(&[2, 2]), p(&[0]), p(&[0, 1])],
            vec![p(&[0, 1]), p(&[1]), p(&[4, 0, 1]), p(&[-2])],
        ]);
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }

    #[test]
    fn inverse_of_unimodular() {
        let q_mat = PolyMatrix::from_rows(vec![
            vec![p(&[1]), p(&[]), p(&[0, 1])],
            vec![p(&[0, 0, 0, -1]), p(&[-1]), p(&[0, 0, 0, 0, -1])],
            vec![p(&[]), p(&[0, 0, 1]), p(&[-1])],
        ]);
        let inv = q_mat.inverse().unwrap();
        assert_eq!(&q_mat * &inv, PolyMatrix::identity(3));
        let not_unimodular =
            PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[])], vec![p(&[]), p(&[1])]]);
        assert!(matches!(
            not_unimodular.inverse(),
            Err(Error::NotUnimodular { .. })
        ));
    }
}
