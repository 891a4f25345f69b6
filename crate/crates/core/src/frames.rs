//! Equi-affine minimal-degree moving frames of generic polynomial curves.

use std::fmt;

use crate::completion::minimal_matrix_completion;
use crate::equivariance::section;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::matrix::PolyMatrix;
use crate::poly::{Degree, Polynomial};
use crate::vector::PolyVector;

/// A condition a generic curve must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    /// `gcd(c') != 1`: the tangent vanishes somewhere over the closure.
    VanishingTangent,
    /// The non-constant coefficient columns do not span `K^n`.
    AffineSubspace { rank: usize },
    /// `deg c <= n`.
    DegreeTooLow { degree: Degree, n: usize },
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::VanishingTangent => f.write_str("vanishing tangent: gcd of c' is not 1"),
            Condition::AffineSubspace { rank } => {
                write!(f, "lies in a proper affine subspace: rank {rank}")
            }
            Condition::DegreeTooLow { degree, n } => {
                write!(f, "degree too low: {degree} <= n = {n}")
            }
        }
    }
}

/// Every failed condition of a non-generic curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub failed: Vec<Condition>,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.failed.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// A curve that passed [`validate_generic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericCurve {
    c: PolyVector,
}

impl GenericCurve {
    pub fn curve(&self) -> &PolyVector {
        &self.c
    }

    pub fn into_curve(self) -> PolyVector {
        self.c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameResult {
    pub frame: PolyMatrix,
    pub section: GroupElement,
    pub canonical_tangent: PolyVector,
    pub bezout_degree: usize,
}

pub fn validate_generic(c: &PolyVector) -> std::result::Result<GenericCurve, Rejection> {
    let n = c.len();
    let mut failed = Vec::new();
    let tangent = c.derivative();
    if tangent.gcd().map_or(true, |g| g != Polynomial::one()) {
        failed.push(Condition::VanishingTangent);
    }
    let rank = match c.degree().finite() {
        Some(d) if d >= 1 => {
            let cols: Vec<usize> = (1..=d).collect();
            c.coefficient_matrix().select_columns(&cols).rank()
        }
        _ => 0,
    };
    if rank < n {
        failed.push(Condition::AffineSubspace { rank });
    }
    if c.degree() <= Degree::Finite(n) {
        failed.push(Condition::DegreeTooLow {
            degree: c.degree(),
            n,
        });
    }
    if failed.is_empty() {
        Ok(GenericCurve { c: c.clone() })
    } else {
        Err(Rejection { failed })
    }
}

pub fn derivative(c: &GenericCurve) -> PolyVector {
    c.c.derivative()
}

/// The frame `F = (L, s) . MMC(canonical(c'))` with `(L, s) = es(c')`.
pub fn eamfm(c: &GenericCurve) -> Result<FrameResult> {
    let v = derivative(c);
    let sec = section(&v)?;
    let inner = minimal_matrix_completion(&sec.canonical)?;
    Ok(FrameResult {
        frame: sec.section.act_matrix(&inner.m)?,
        section: sec.section,
        canonical_tangent: sec.canonical,
        bezout_degree: inner.bezout_degree,
    })
}

/// Validates `c` and computes its frame.
pub fn frame_of(c: &PolyVector) -> Result<FrameResult> {
    eamfm(&validate_generic(c).map_err(Error::NotGeneric)?)
}
