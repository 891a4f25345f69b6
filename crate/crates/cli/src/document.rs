//! JSON documents. Every rational is an exact `"p/q"` or integer string and
//! every polynomial is a list of coefficients in ascending powers.

use affine_frames::rational::{format_rational, parse_rational};
use affine_frames::{GroupElement, PolyMatrix, PolyVector, Polynomial, QMatrix, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub type PolyDoc = Vec<String>;
pub type VectorDoc = Vec<PolyDoc>;
pub type MatrixDoc = Vec<Vec<PolyDoc>>;
pub type ConstMatrixDoc = Vec<Vec<String>>;

/// Input: a polynomial vector of length `n`. Rows may have different
/// lengths; missing high coefficients are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub n: usize,
    pub coeffs: VectorDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl CurveDocument {
    pub fn from_vector(v: &PolyVector, label: Option<String>) -> Self {
        Self {
            n: v.len(),
            coeffs: vector_doc(v),
            label,
        }
    }

    pub fn vector(&self) -> Result<PolyVector, CliError> {
        if self.n < 2 {
            return Err(CliError::Input(format!(
                "n must be at least 2, found {}",
                self.n
            )));
        }
        if self.coeffs.len() != self.n {
            return Err(CliError::Input(format!(
                "coeffs has {} rows, expected n = {}",
                self.coeffs.len(),
                self.n
            )));
        }
        parse_vector(&self.coeffs, "coeffs")
    }
}

/// Parses and validates a curve document, reporting JSON syntax errors by
/// line and column and bad coefficients by field path.
pub fn parse_curve(text: &str) -> Result<CurveDocument, CliError> {
    let doc: CurveDocument = serde_json::from_str(text).map_err(json_error)?;
    doc.vector()?;
    Ok(doc)
}

pub fn parse_result(text: &str) -> Result<ResultDocument, CliError> {
    serde_json::from_str(text).map_err(json_error)
}

pub(crate) fn json_error(e: serde_json::Error) -> CliError {
    CliError::Input(format!("line {}, column {}: {}", e.line(), e.column(), e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionDoc {
    #[serde(rename = "L")]
    pub l: ConstMatrixDoc,
    pub s: String,
}

impl SectionDoc {
    pub fn from_group(g: &GroupElement) -> Self {
        Self {
            l: qmatrix_doc(g.l()),
            s: format_rational(g.s()),
        }
    }

    pub fn group(&self) -> Result<GroupElement, CliError> {
        let l = parse_qmatrix(&self.l, "section.L")?;
        let s = parse_field(&self.s, "section.s")?;
        GroupElement::new(l, s).map_err(|e| CliError::Input(format!("section: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub indices: Vec<usize>,
    pub k: Option<usize>,
    pub det_vbar: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

/// Kind-specific results, tagged by `kind` with the data under `payload`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Frame {
        frame: MatrixDoc,
        section: SectionDoc,
        canonical_tangent: VectorDoc,
        bezout_degree: usize,
    },
    Completion {
        matrix: MatrixDoc,
        bezout_degree: usize,
    },
    Bezout {
        b: VectorDoc,
        degree: usize,
    },
    Mubasis {
        elements: Vec<VectorDoc>,
        lambda: String,
    },
    Section {
        section: SectionDoc,
        canonical: VectorDoc,
        profile: ProfileDoc,
    },
    Canonical {
        canonical: VectorDoc,
    },
    Sylvester {
        matrix: ConstMatrixDoc,
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pivots: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nonpivots: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        basic_nonpivots: Option<Vec<usize>>,
    },
    Verify {
        verified_kind: String,
        passed: bool,
    },
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Frame { .. } => "frame",
            Payload::Completion { .. } => "completion",
            Payload::Bezout { .. } => "bezout",
            Payload::Mubasis { .. } => "mubasis",
            Payload::Section { .. } => "section",
            Payload::Canonical { .. } => "canonical",
            Payload::Sylvester { .. } => "sylvester",
            Payload::Verify { .. } => "verify",
        }
    }
}

/// Degrees are `null` for the zero object (degree minus infinity).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub input_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bezout_degree: Option<usize>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(flatten)]
    pub payload: Payload,
    pub input: CurveDocument,
    pub metadata: Metadata,
}

impl ResultDocument {
    pub fn kind(&self) -> &'static str {
        self.payload.kind()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.metadata.checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON with a trailing newline; field order is fixed by the types.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

pub fn poly_doc(p: &Polynomial) -> PolyDoc {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn vector_doc(v: &PolyVector) -> VectorDoc {
    v.components().iter().map(poly_doc).collect()
}

pub fn matrix_doc(m: &PolyMatrix) -> MatrixDoc {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(poly_doc).collect())
        .collect()
}

pub fn qmatrix_doc(m: &QMatrix) -> ConstMatrixDoc {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn degree_doc(d: affine_frames::Degree) -> Option<i64> {
    d.finite().map(|d| d as i64)
}

pub(crate) fn parse_field(s: &str, path: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

pub fn parse_poly(p: &PolyDoc, path: &str) -> Result<Polynomial, CliError> {
    p.iter()
        .enumerate()
        .map(|(j, c)| parse_field(c, &format!("{path}[{j}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::new)
}

pub fn parse_vector(v: &VectorDoc, path: &str) -> Result<PolyVector, CliError> {
    let comps = v
        .iter()
        .enumerate()
        .map(|(i, p)| parse_poly(p, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    PolyVector::try_new(comps).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

pub fn parse_matrix(m: &MatrixDoc, path: &str) -> Result<PolyMatrix, CliError> {
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, p)| parse_poly(p, &format!("{path}[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Input(format!("{path}: ragged matrix")));
    }
    Ok(PolyMatrix::from_rows(rows))
}

pub fn parse_qmatrix(m: &ConstMatrixDoc, path: &str) -> Result<QMatrix, CliError> {
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, c)| parse_field(c, &format!("{path}[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Input(format!("{path}: ragged matrix")));
    }
    Ok(QMatrix::from_rows(rows))
}
