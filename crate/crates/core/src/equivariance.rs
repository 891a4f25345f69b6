//! The explicit `SL_n(K) x K`-equivariant section of regular vectors, the
//! induced canonical forms, and equivariantization of completion maps.
//!
//! Coefficient-matrix columns are 0-based here (column `j` holds the `t^j`
//! coefficients); rows in messages are 1-based.

use num_traits::{One, Zero};

use crate::completion::{minimal_matrix_completion, Completion};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::poly::Polynomial;
use crate::qmatrix::QMatrix;
use crate::rational::{format_rational, Rational};
use crate::vector::PolyVector;

/// Column indices of the rightmost rank-`n` submatrix `V_bar` of the
/// coefficient matrix, with the gap index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotProfile {
    /// `i_1 < ... < i_n`, with `i_n = d`.
    pub indices: Vec<usize>,
    /// The rightmost column not in `indices`; `None` when every column is
    /// selected (`deg v = n - 1`).
    pub k: Option<usize>,
    pub det_vbar: Rational,
}

impl PivotProfile {
    pub fn d(&self) -> usize {
        *self.indices.last().expect("n >= 2")
    }

    /// 0-based row of `V` holding the coefficient that determines the shift:
    /// `n - (d - k - 1)` in 1-based numbering.
    pub fn shift_row(&self) -> Option<usize> {
        let n = self.indices.len();
        self.k.map(|k| n + k - self.d())
    }
}

/// A section value `(L, s)` with the canonical form it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionResult {
    pub section: GroupElement,
    pub canonical: PolyVector,
    pub profile: PivotProfile,
}

/// Greedy right-to-left selection of columns that raise the rank.
pub fn pivot_profile(v: &PolyVector) -> Result<PivotProfile> {
    let n = v.len();
    let cm = v.coefficient_matrix();
    let mut picked: Vec<usize> = Vec::with_capacity(n);
    for c in (0..cm.cols()).rev() {
        let mut trial = picked.clone();
        trial.push(c);
        if cm.select_columns(&trial).rank() == trial.len() {
            picked = trial;
            if picked.len() == n {
                break;
            }
        }
    }
    if picked.len() < n {
        return Err(Error::LinearlyDependent {
            rank: picked.len(),
            n,
        });
    }
    picked.reverse();
    let d = cm.cols() - 1;
    let run = picked
        .iter()
        .rev()
        .zip((0..=d).rev())
        .take_while(|(i, c)| *i == c)
        .count();
    let k = d.checked_sub(run);
    let det_vbar = cm.select_columns(&picked).det()?;
    Ok(PivotProfile {
        indices: picked,
        k,
        det_vbar,
    })
}

fn rho1(v: &PolyVector) -> Result<(QMatrix, PivotProfile)> {
    let profile = pivot_profile(v)?;
    let mut l = v.coefficient_matrix().select_columns(&profile.indices);
    let last = l.cols() - 1;
    l.scale_column(last, &profile.det_vbar.recip());
    Ok((l, profile))
}

/// `V_bar` with its last column divided by `det V_bar`; lies in `SL_n`.
pub fn es1(v: &PolyVector) -> Result<QMatrix> {
    Ok(rho1(v)?.0)
}

/// Checks `gcd(v) = 1`, linear independence of the components and
/// `deg v >= n`.
pub fn check_regular(v: &PolyVector) -> Result<PivotProfile> {
    if v.gcd()? != Polynomial::one() {
        return Err(Error::NotCoprime);
    }
    let profile = pivot_profile(v)?;
    if profile.d() < v.len() {
        return Err(Error::ParameterSectionUndefined {
            degree: profile.d() as i64,
            n: v.len(),
        });
    }
    Ok(profile)
}

/// The parameter section: `coeff(w_r, k) / ((k+1) coeff(w_r, k+1))` where
/// `w = es1(v)^{-1} v` and `r` is the shift row of the pivot profile.
pub fn es2(v: &PolyVector) -> Result<Rational> {
    check_regular(v)?;
    let (l, profile) = rho1(v)?;
    let w = v.left_mul(&l.inverse()?)?;
    let k = profile.k.expect("deg v >= n leaves a gap column");
    let row = w.get(profile.shift_row().expect("k exists"));
    let denom = row.coeff(k + 1) * Rational::from_integer((k + 1).into());
    Ok(row.coeff(k) / denom)
}

/// `(es1(v(t - s)), s)` with `s = es2(v)`.
pub fn es(v: &PolyVector) -> Result<GroupElement> {
    let s = es2(v)?;
    let l = es1(&v.shift(&-&s))?;
    GroupElement::new(l, s)
}

/// `es(v)` together with `canonical(v)` and the pivot profile of `v`.
pub fn section(v: &PolyVector) -> Result<SectionResult> {
    let g = es(v)?;
    let canonical = g.inverse().act_vector(v)?;
    let profile = pivot_profile(v)?;
    Ok(SectionResult {
        section: g,
        canonical,
        profile,
    })
}

/// `es(v)^{-1} . v`, the representative of the orbit of `v`.
pub fn canonical(v: &PolyVector) -> Result<PolyVector> {
    Ok(section(v)?.canonical)
}

/// Lists every way the coefficient matrix of `w` departs from the canonical
/// staircase; empty when `w` is a canonical form.
pub fn canonical_shape_violations(w: &PolyVector) -> Vec<String> {
    let profile = match pivot_profile(w) {
        Ok(p) => p,
        Err(e) => return vec![e.to_string()],
    };
    let cm = w.coefficient_matrix();
    let n = w.len();
    let d = profile.d();
    let mut out = Vec::new();
    let mut expect = |r: usize, c: usize, value: &Rational, what: &str| {
        let got = cm.get(r, c);
        if got != value {
            out.push(format!(
                "entry ({}, {c}) is {}, expected {what} {}",
                r + 1,
                format_rational(got),
                format_rational(value)
            ));
        }
    };
    let zero = Rational::zero();
    for (j, &col) in profile.indices.iter().enumerate() {
        let diag = if j + 1 == n {
            profile.det_vbar.clone()
        } else {
            Rational::one()
        };
        for r in 0..n {
            if r == j {
                expect(r, col, &diag, "step value");
            } else {
                expect(r, col, &zero, "step column zero");
            }
        }
    }
    for c in 0..=d {
        let step = profile
            .indices
            .iter()
            .position(|&i| i >= c)
            .expect("i_n = d");
        for r in 0..step {
            expect(r, c, &zero, "staircase zero");
        }
    }
    if let (Some(k), Some(r)) = (profile.k, profile.shift_row()) {
        expect(r, k, &zero, "gap zero");
    }
    out
}

/// `(L, s) . f(canonical(v))` with `(L, s) = es(v)`; turns any completion
/// map into an equivariant one.
pub fn equivariantize<F>(v: &PolyVector, f: F) -> Result<Completion>
where
    F: FnOnce(&PolyVector) -> Result<Completion>,
{
    check_regular(v)?;
    let sec = section(v)?;
    let inner = f(&sec.canonical)?;
    Ok(Completion {
        m: sec.section.act_matrix(&inner.m)?,
        bezout_degree: inner.bezout_degree,
    })
}

/// The equivariant minimal-degree completion map.
pub fn emcm(v: &PolyVector) -> Result<Completion> {
    equivariantize(v, minimal_matrix_completion)
}
