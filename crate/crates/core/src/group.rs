//! The group `SL_n(K) x K` acting by `(L, s) . W(t) = L W(t + s)`, and its
//! affine extension acting on curves.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::qmatrix::QMatrix;
use crate::rational::{format_rational, Rational};
use crate::vector::PolyVector;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    l: QMatrix,
    s: Rational,
}

impl GroupElement {
    /// Rejects `L` unless it is square with determinant exactly 1.
    pub fn new(l: QMatrix, s: Rational) -> Result<Self> {
        let det = l.det()?;
        if !det.is_one() {
            return Err(Error::NotSpecialLinear {
                det: format_rational(&det),
            });
        }
        Ok(Self { l, s })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            l: QMatrix::identity(n),
            s: Rational::zero(),
        }
    }

    pub fn l(&self) -> &QMatrix {
        &self.l
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.l.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero() && self.l == QMatrix::identity(self.n())
    }

    /// `self * other = (L1 L2, s1 + s2)`.
    pub fn compose(&self, other: &GroupElement) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            l: &self.l * &other.l,
            s: &self.s + &other.s,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            l: self.l.inverse().expect("det 1 matrices are invertible"),
            s: -&self.s,
        }
    }

    pub fn act_vector(&self, v: &PolyVector) -> Result<PolyVector> {
        v.shift(&self.s).left_mul(&self.l)
    }

    pub fn act_matrix(&self, w: &PolyMatrix) -> Result<PolyMatrix> {
        w.shift(&self.s).left_mul(&self.l)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    l: QMatrix,
    a: Vec<Rational>,
    s: Rational,
}

impl AffineElement {
    pub fn new(l: QMatrix, a: Vec<Rational>, s: Rational) -> Result<Self> {
        let g = GroupElement::new(l, s)?;
        if a.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: a.len(),
            });
        }
        Ok(Self { l: g.l, a, s: g.s })
    }

    pub fn l(&self) -> &QMatrix {
        &self.l
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// The `(L, s)` part, which is how the element acts on tangents and frames.
    pub fn linear_part(&self) -> GroupElement {
        GroupElement {
            l: self.l.clone(),
            s: self.s.clone(),
        }
    }

    /// `L c(t + s) + a`.
    pub fn act(&self, c: &PolyVector) -> Result<PolyVector> {
        self.linear_part().act_vector(c)?.translate(&self.a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn g() -> GroupElement {
        let l = QMatrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 0], &[3, 6, 1]]);
        GroupElement::new(l, q(-2, 3)).unwrap()
    }

    #[test]
    fn rejects_non_special_linear() {
        let l = QMatrix::from_int_rows(&[&[2, 0], &[0, 1]]);
        assert!(matches!(
            GroupElement::new(l, qi(0)),
            Err(Error::NotSpecialLinear { .. })
        ));
        assert!(GroupElement::new(QMatrix::zeros(2, 3), qi(0)).is_err());
    }

    #[test]
    fn action_axioms() {
        let v = PolyVector::from_ints(&[&[1, 0, 2, 1, 1], &[2, 0, 3, 1, 2], &[3, 5, 4, 1, 3]]);
        assert_eq!(GroupElement::identity(3).act_vector(&v).unwrap(), v);
        let w = g().act_vector(&v).unwrap();
        assert_eq!(w.degree(), v.degree());
        assert_eq!(g().inverse().act_vector(&w).unwrap(), v);

        let h = GroupElement::new(
            QMatrix::from_int_rows(&[&[0, 0, -1], &[0, 1, 0], &[1, 0, 0]]),
            q(5, 2),
        )
        .unwrap();
        let gh = g().compose(&h).unwrap();
        assert_eq!(
            gh.act_vector(&v).unwrap(),
            g().act_vector(&h.act_vector(&v).unwrap()).unwrap()
        );
        assert!(g().act_vector(&PolyVector::zero(2)).is_err());
    }

    #[test]
    fn affine_action_and_chain_rule() {
        let c = PolyVector::from_ints(&[&[0, 1], &[0, 0, 1], &[1, 0, 0, 0, 1]]);
        let aff = AffineElement::new(
            g().l().clone(),
            vec![qi(1), q(1, 2), qi(-7)],
            g().s().clone(),
        )
        .unwrap();
        let moved = aff.act(&c).unwrap();
        assert_eq!(
            moved.derivative(),
            aff.linear_part().act_vector(&c.derivative()).unwrap()
        );
        let shift_only =
            AffineElement::new(QMatrix::identity(3), vec![qi(1), qi(2), qi(3)], qi(0)).unwrap();
        assert_eq!(
            shift_only.act(&c).unwrap(),
            c.translate(&[qi(1), qi(2), qi(3)]).unwrap()
        );
    }
}
