//! Matrix completions: square polynomial matrices with a prescribed first
//! column and determinant 1.

use num_traits::{One, Zero};

use crate::bezout::{bezout_degree_oracle, minimal_bezout, mu_basis};
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{Degree, Polynomial};
use crate::rational::Rational;
use crate::vector::PolyVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub m: PolyMatrix,
    /// Degree of the Bezout vector the completion was built from.
    pub bezout_degree: usize,
}

impl Completion {
    pub fn degree(&self) -> Degree {
        self.m.degree()
    }
}

/// Outcome of [`verify_completion`]; one flag per check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    pub shape_ok: bool,
    pub first_column_ok: bool,
    pub det_one: bool,
    pub degree: Degree,
    /// `deg v + bezout_degree_oracle(v)`, when the oracle applies.
    pub minimal_degree: Option<usize>,
    pub minimal: bool,
}

impl CompletionReport {
    /// Whether the matrix is a completion of `v` at all.
    pub fn is_completion(&self) -> bool {
        self.shape_ok && self.first_column_ok && self.det_one
    }
}

/// `[v | mu-basis of b]` with the last column divided by the determinant.
/// Requires `<v, b> = 1`.
fn complete_with_bezout(v: &PolyVector, b: &PolyVector) -> Result<PolyMatrix> {
    let mut cols = vec![v.clone()];
    cols.extend(mu_basis(b)?.elements);
    let mut m = PolyMatrix::from_columns(&cols);
    let det = m
        .determinant()?
        .as_constant()
        .filter(|c| !c.is_zero())
        .expect("determinant of [v | mu-basis of b] is a nonzero constant");
    let last = m.cols() - 1;
    m.scale_column(last, &det.recip());
    Ok(m)
}

/// Minimal-degree completion: `deg M = deg v + deg b` for a minimal Bezout
/// vector `b` of `v`.
pub fn minimal_matrix_completion(v: &PolyVector) -> Result<Completion> {
    let bz = minimal_bezout(v).map_err(|_| Error::NotCompletable)?;
    Ok(Completion {
        m: complete_with_bezout(v, &bz.b)?,
        bezout_degree: bz.degree,
    })
}

/// Checks shape, first column, `det M = 1`, and whether `deg M` attains the
/// minimum `deg v + bezout_degree_oracle(v)`.
pub fn verify_completion(m: &PolyMatrix, v: &PolyVector) -> CompletionReport {
    let n = v.len();
    let shape_ok = m.rows() == n && m.cols() == n;
    let first_column_ok = shape_ok && (0..n).all(|i| m.get(i, 0) == v.get(i));
    let det_one = shape_ok && m.determinant().is_ok_and(|d| d == Polynomial::one());
    let degree = m.degree();
    let minimal_degree = match (v.degree().finite(), bezout_degree_oracle(v)) {
        (Some(d), Ok(e)) => Some(d + e),
        _ => None,
    };
    let minimal = minimal_degree.is_some_and(|md| degree == Degree::Finite(md));
    CompletionReport {
        shape_ok,
        first_column_ok,
        det_one,
        degree,
        minimal_degree,
        minimal,
    }
}

/// `Q = [b | u_1 ... u_{n-1}]` with `b` a minimal Bezout vector of `v` and
/// `(u_i)` the normalized mu-basis of `v` itself, so `v^T Q = e_1^T` and
/// `Q^{-T}` is a completion of `v`.
pub fn quillen_suslin(v: &PolyVector) -> Result<PolyMatrix> {
    let bz = minimal_bezout(v)?;
    let mut cols = vec![bz.b];
    cols.extend(mu_basis(v)?.normalized());
    Ok(PolyMatrix::from_columns(&cols))
}

/// A completion that is not minimal in general: the Bezout vector is
/// perturbed to `b + t^{deg v_1} w_{n-1}`, where `w_{n-1}` is the last
/// element of the (unnormalized) mu-basis of `v`.
pub fn nonminimal_completion(v: &PolyVector) -> Result<Completion> {
    let k = v
        .get(0)
        .degree()
        .finite()
        .ok_or(Error::ZeroFirstComponent)?;
    let bz = minimal_bezout(v).map_err(|_| Error::NotCompletable)?;
    let w = mu_basis(v)?;
    let last = w.elements.last().expect("n >= 2");
    let b_hat =
        bz.b.checked_add(&last.mul_poly(&Polynomial::monomial(Rational::one(), k)))?;
    let degree = b_hat.degree().finite().expect("<v, b_hat> = 1");
    Ok(Completion {
        m: complete_with_bezout(v, &b_hat)?,
        bezout_degree: degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn ex_bez() -> PolyVector {
        PolyVector::from_ints(&[&[1, 0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[0, 1]])
    }

    #[test]
    fn mmc_golden() {
        let v = PolyVector::new(vec![
            Polynomial::new(vec![q(-1, 3), qi(1)]),
            Polynomial::new(vec![q(-1, 27), qi(0), qi(0), qi(1)]),
            Polynomial::new(vec![q(325, 81), qi(0), q(25, 3), qi(0), qi(5)]),
        ]);
        let c = minimal_matrix_completion(&v).unwrap();
        assert_eq!(c.bezout_degree, 1);
        assert_eq!(c.degree(), Degree::Finite(5));
        let expected = PolyMatrix::from_rows(vec![
            vec![
                v.get(0).clone(),
                Polynomial::constant(q(27, 80)),
                Polynomial::new(vec![qi(0), qi(-1)]),
            ],
            vec![
                v.get(1).clone(),
                Polynomial::constant(q(-9, 16)),
                Polynomial::new(vec![q(16, 27), q(5, 3)]),
            ],
            vec![v.get(2).clone(), Polynomial::one(), Polynomial::zero()],
        ]);
        assert_eq!(c.m, expected);
        assert!(verify_completion(&c.m, &v).minimal);
    }

    #[test]
    fn example_degrees_and_witnesses() {
        let v = ex_bez();
        let c = minimal_matrix_completion(&v).unwrap();
        assert_eq!(c.degree(), Degree::Finite(9));
        let report = verify_completion(&c.m, &v);
        assert!(report.is_completion() && report.minimal);

        let m1 = PolyMatrix::from_rows(vec![
            vec![v.get(0).clone(), p(&[]), p(&[0, 0, 0, 1])],
            vec![v.get(1).clone(), p(&[]), p(&[1])],
            vec![v.get(2).clone(), p(&[-1]), p(&[])],
        ]);
        let r1 = verify_completion(&m1, &v);
        assert!(r1.is_completion() && r1.minimal);

        let m3 = PolyMatrix::from_rows(vec![
            vec![v.get(0).clone(), p(&[1]), p(&[0, 0, 0, 1])],
            vec![v.get(1).clone(), p(&[]), p(&[1])],
            vec![v.get(2).clone(), p(&[-1, 1]), p(&[])],
        ]);
        let r3 = verify_completion(&m3, &v);
        assert!(r3.is_completion());
        assert_eq!(r3.degree, Degree::Finite(10));
        assert!(!r3.minimal);

        let e1 = PolyVector::unit(3, 0);
        let id = minimal_matrix_completion(&e1).unwrap();
        assert_eq!(id.degree(), Degree::Finite(0));
        assert!(verify_completion(&PolyMatrix::identity(3), &e1).minimal);
    }

    #[test]
    fn quillen_suslin_example() {
        let v = ex_bez();
        let qs = quillen_suslin(&v).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![p(&[1]), p(&[]), p(&[0, 1])],
            vec![p(&[0, 0, 0, -1]), p(&[-1]), p(&[0, 0, 0, 0, -1])],
            vec![p(&[]), p(&[0, 0, 1]), p(&[-1])],
        ]);
        assert_eq!(qs, expected);
        let vt = PolyMatrix::from_columns(std::slice::from_ref(&v)).transpose();
        assert_eq!(
            &vt * &qs,
            PolyMatrix::from_rows(vec![vec![p(&[1]), p(&[]), p(&[])]])
        );
        let dual = qs.inverse().unwrap().transpose();
        let report = verify_completion(&dual, &v);
        assert!(report.is_completion());
        assert_eq!(report.degree, Degree::Finite(14));
        assert!(!report.minimal);

        let e1 = PolyVector::unit(3, 0);
        let q_e1 = quillen_suslin(&e1).unwrap();
        assert_eq!(q_e1.column(0), e1);
    }

    #[test]
    fn nonminimal_fixture() {
        let v = PolyVector::from_ints(&[&[0, 0, 0, 1], &[0, 1], &[1]]);
        let n = nonminimal_completion(&v).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![p(&[0, 0, 0, 1]), p(&[0, 0, 1]), p(&[-1])],
            vec![p(&[0, 1]), p(&[1]), p(&[])],
            vec![p(&[1]), p(&[]), p(&[0, 0, 0, -1])],
        ]);
        assert_eq!(n.m, expected);
        assert_eq!(n.degree(), Degree::Finite(8));
        let minimal = minimal_matrix_completion(&v).unwrap();
        assert!(n.degree() > minimal.degree());

        let zero_first = PolyVector::from_ints(&[&[], &[1], &[0, 1]]);
        assert_eq!(
            nonminimal_completion(&zero_first),
            Err(Error::ZeroFirstComponent)
        );
        let not_coprime = PolyVector::from_ints(&[&[0, 1], &[0, 0, 1]]);
        assert_eq!(
            minimal_matrix_completion(&not_coprime),
            Err(Error::NotCompletable)
        );
    }
}
