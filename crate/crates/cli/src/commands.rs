//! Dispatch from subcommands to the pipeline, and replay verification.

use affine_frames::{
    bezout_degree_oracle, build_sylvester, canonical, canonical_shape_violations, check_regular,
    es, frame_of, minimal_bezout, minimal_matrix_completion, mu_basis, outer_product,
    scalar_product, section, verify_completion, Degree, Error, PolyVector, Polynomial,
};

use crate::document::{
    degree_doc, matrix_doc, parse_field, parse_matrix, parse_qmatrix, parse_vector, poly_doc,
    qmatrix_doc, vector_doc, Check, CurveDocument, Metadata, Payload, ProfileDoc, ResultDocument,
    SectionDoc,
};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Frame,
    Complete,
    Bezout,
    Mubasis,
    Section,
    Canonical,
    Sylvester,
}

impl Command {
    /// The command that produces a result of the given kind.
    pub fn for_kind(kind: &str) -> Option<Self> {
        Some(match kind {
            "frame" => Command::Frame,
            "completion" => Command::Complete,
            "bezout" => Command::Bezout,
            "mubasis" => Command::Mubasis,
            "section" => Command::Section,
            "canonical" => Command::Canonical,
            "sylvester" => Command::Sylvester,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub dump_pivots: bool,
}

fn core_error(e: Error) -> CliError {
    match e {
        Error::NotGeneric(_)
        | Error::NotCoprime
        | Error::LinearlyDependent { .. }
        | Error::ParameterSectionUndefined { .. }
        | Error::NoBezoutVector
        | Error::NotCompletable
        | Error::ZeroVector
        | Error::ZeroFirstComponent
        | Error::GcdUndefined
        | Error::TooShort(_) => CliError::Rejected(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

pub fn run_command(
    cmd: Command,
    input: &CurveDocument,
    opts: Options,
) -> Result<ResultDocument, CliError> {
    let v = input.vector()?;
    if cmd != Command::Frame && cmd != Command::Sylvester {
        check_regular(&v).map_err(core_error)?;
    }
    let mut meta = Metadata {
        input_degree: degree_doc(v.degree()),
        ..Metadata::default()
    };

    let payload = match cmd {
        Command::Frame => {
            let fr = frame_of(&v).map_err(core_error)?;
            let det = fr.frame.determinant().map_err(core_error)?;
            meta.output_degree = degree_doc(fr.frame.degree());
            meta.determinant = Some(poly_doc(&det));
            meta.section = Some(SectionDoc::from_group(&fr.section));
            meta.bezout_degree = Some(fr.bezout_degree);
            let tangent = v.derivative();
            meta.checks = completion_checks(&fr.frame, &tangent);
            Payload::Frame {
                frame: matrix_doc(&fr.frame),
                section: SectionDoc::from_group(&fr.section),
                canonical_tangent: vector_doc(&fr.canonical_tangent),
                bezout_degree: fr.bezout_degree,
            }
        }
        Command::Complete => {
            let c = minimal_matrix_completion(&v).map_err(core_error)?;
            let det = c.m.determinant().map_err(core_error)?;
            meta.output_degree = degree_doc(c.degree());
            meta.determinant = Some(poly_doc(&det));
            meta.bezout_degree = Some(c.bezout_degree);
            meta.checks = completion_checks(&c.m, &v);
            Payload::Completion {
                matrix: matrix_doc(&c.m),
                bezout_degree: c.bezout_degree,
            }
        }
        Command::Bezout => {
            let bz = minimal_bezout(&v).map_err(core_error)?;
            meta.output_degree = Some(bz.degree as i64);
            meta.bezout_degree = Some(bz.degree);
            meta.checks = bezout_checks(&v, &bz.b, bz.degree);
            Payload::Bezout {
                b: vector_doc(&bz.b),
                degree: bz.degree,
            }
        }
        Command::Mubasis => {
            let mb = mu_basis(&v).map_err(core_error)?;
            meta.checks = mu_basis_checks(&v, &mb.elements, &mb.lambda);
            Payload::Mubasis {
                elements: mb.elements.iter().map(vector_doc).collect(),
                lambda: affine_frames::rational::format_rational(&mb.lambda),
            }
        }
        Command::Section => {
            let sec = section(&v).map_err(core_error)?;
            meta.section = Some(SectionDoc::from_group(&sec.section));
            meta.output_degree = degree_doc(sec.canonical.degree());
            meta.checks = section_checks(&v, &sec.section, &sec.canonical);
            Payload::Section {
                section: SectionDoc::from_group(&sec.section),
                canonical: vector_doc(&sec.canonical),
                profile: ProfileDoc {
                    indices: sec.profile.indices.clone(),
                    k: sec.profile.k,
                    det_vbar: affine_frames::rational::format_rational(&sec.profile.det_vbar),
                },
            }
        }
        Command::Canonical => {
            let z = canonical(&v).map_err(core_error)?;
            meta.output_degree = degree_doc(z.degree());
            meta.checks = canonical_checks(&z);
            Payload::Canonical {
                canonical: vector_doc(&z),
            }
        }
        Command::Sylvester => {
            let sys = build_sylvester(&v).map_err(core_error)?;
            meta.checks = vec![Check::with_detail(
                "full_rank",
                sys.is_full_rank(),
                format!("rank {} of {} rows", sys.rank(), sys.matrix().rows()),
            )];
            let dump = |x: Vec<usize>| opts.dump_pivots.then_some(x);
            Payload::Sylvester {
                matrix: qmatrix_doc(sys.matrix()),
                rank: sys.rank(),
                pivots: dump(sys.pivot_cols()),
                nonpivots: dump(sys.nonpivot_cols()),
                basic_nonpivots: dump(sys.basic_nonpivot_cols()),
            }
        }
    };

    Ok(ResultDocument {
        payload,
        input: input.clone(),
        metadata: meta,
    })
}

fn completion_checks(m: &affine_frames::PolyMatrix, v: &PolyVector) -> Vec<Check> {
    let report = verify_completion(m, v);
    let degree = match report.minimal_degree {
        Some(md) => format!("degree {} (minimum {md})", report.degree),
        None => format!("degree {} (no minimum)", report.degree),
    };
    vec![
        Check::new("square", report.shape_ok),
        Check::new("first_column", report.first_column_ok),
        Check::new("det_one", report.det_one),
        Check::with_detail("minimal_degree", report.minimal, degree),
    ]
}

fn bezout_checks(v: &PolyVector, b: &PolyVector, degree: usize) -> Vec<Check> {
    let pairing = scalar_product(v, b).is_ok_and(|p| p == Polynomial::one());
    let oracle = bezout_degree_oracle(v);
    vec![
        Check::new("pairing_is_one", pairing),
        Check::new("degree_matches", b.degree() == Degree::Finite(degree)),
        Check::with_detail(
            "minimal_degree",
            oracle == Ok(degree),
            match oracle {
                Ok(e) => format!("oracle {e}"),
                Err(e) => e.to_string(),
            },
        ),
    ]
}

fn mu_basis_checks(
    v: &PolyVector,
    elements: &[PolyVector],
    lambda: &affine_frames::Rational,
) -> Vec<Check> {
    let syzygy = elements
        .iter()
        .all(|u| scalar_product(v, u).is_ok_and(|p| p.is_zero()));
    let degrees: Vec<Degree> = elements.iter().map(PolyVector::degree).collect();
    let ordered = degrees.windows(2).all(|w| w[0] <= w[1]);
    let sum = degrees.iter().copied().sum::<Degree>() == v.degree();
    let outer = !num_traits::Zero::is_zero(lambda)
        && outer_product(elements).is_ok_and(|w| w == v.scale(lambda));
    vec![
        Check::new("count", elements.len() + 1 == v.len()),
        Check::new("syzygy", syzygy),
        Check::new("degree_ordered", ordered),
        Check::new("degree_sum", sum),
        Check::new("outer_product", outer),
    ]
}

fn section_checks(v: &PolyVector, g: &affine_frames::GroupElement, z: &PolyVector) -> Vec<Check> {
    let maps = g.inverse().act_vector(v).is_ok_and(|w| &w == z);
    let mut checks = vec![Check::new("section_maps_to_canonical", maps)];
    checks.extend(canonical_checks(z));
    checks
}

fn canonical_checks(z: &PolyVector) -> Vec<Check> {
    let violations = canonical_shape_violations(z);
    let fixed = es(z).is_ok_and(|g| g.is_identity());
    vec![
        Check::with_detail(
            "canonical_shape",
            violations.is_empty(),
            if violations.is_empty() {
                "ok".to_string()
            } else {
                violations.join("; ")
            },
        ),
        Check::new("section_of_canonical_is_identity", fixed),
    ]
}

/// Replays the command that produced `doc`, compares the payload exactly and
/// re-checks the invariants of the stored data without trusting the replay.
pub fn verify(doc: &ResultDocument) -> Result<ResultDocument, CliError> {
    let kind = doc.kind();
    let cmd = Command::for_kind(kind)
        .ok_or_else(|| CliError::Input(format!("cannot verify a document of kind {kind}")))?;
    let v = doc.input.vector()?;
    let mut checks = Vec::new();

    let dump_pivots = matches!(
        &doc.payload,
        Payload::Sylvester {
            pivots: Some(_),
            ..
        }
    );
    match run_command(cmd, &doc.input, Options { dump_pivots }) {
        Ok(replay) => {
            checks.push(Check::new("replay_payload", replay.payload == doc.payload));
            checks.push(Check::new(
                "replay_metadata",
                replay.metadata == doc.metadata,
            ));
        }
        Err(e) => checks.push(Check::with_detail("replay", false, e.to_string())),
    }

    match &doc.payload {
        Payload::Frame {
            frame,
            section,
            canonical_tangent,
            bezout_degree,
        } => {
            let f = parse_matrix(frame, "payload.frame")?;
            let g = section.group()?;
            let z = parse_vector(canonical_tangent, "payload.canonical_tangent")?;
            let tangent = v.derivative();
            checks.extend(completion_checks(&f, &tangent));
            checks.push(Check::new(
                "bezout_degree",
                bezout_degree_oracle(&tangent) == Ok(*bezout_degree),
            ));
            checks.extend(section_checks(&tangent, &g, &z));
            let rebuilt = minimal_matrix_completion(&z)
                .map_err(core_error)
                .and_then(|c| g.act_matrix(&c.m).map_err(core_error));
            checks.push(Check::new(
                "frame_is_section_times_canonical_completion",
                rebuilt.is_ok_and(|m| m == f),
            ));
        }
        Payload::Completion { matrix, .. } => {
            let m = parse_matrix(matrix, "payload.matrix")?;
            checks.extend(completion_checks(&m, &v));
        }
        Payload::Bezout { b, degree } => {
            let b = parse_vector(b, "payload.b")?;
            checks.extend(bezout_checks(&v, &b, *degree));
        }
        Payload::Mubasis { elements, lambda } => {
            let us = elements
                .iter()
                .enumerate()
                .map(|(i, u)| parse_vector(u, &format!("payload.elements[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let lambda = parse_field(lambda, "payload.lambda")?;
            checks.extend(mu_basis_checks(&v, &us, &lambda));
        }
        Payload::Section {
            section, canonical, ..
        } => {
            let g = section.group()?;
            let z = parse_vector(canonical, "payload.canonical")?;
            checks.extend(section_checks(&v, &g, &z));
        }
        Payload::Canonical { canonical: z } => {
            let z = parse_vector(z, "payload.canonical")?;
            checks.push(Check::new(
                "invariant_of_input",
                canonical(&v).is_ok_and(|w| w == z),
            ));
            checks.extend(canonical_checks(&z));
        }
        Payload::Sylvester { matrix, rank, .. } => {
            let a = parse_qmatrix(matrix, "payload.matrix")?;
            let d = v.degree().finite().unwrap_or(0);
            checks.push(Check::new(
                "shape",
                a.rows() == 2 * d + 1 && a.cols() == v.len() * (d + 1),
            ));
            checks.push(Check::new("rank", a.rank() == *rank));
        }
        Payload::Verify { .. } => unreachable!("rejected above"),
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(ResultDocument {
        payload: Payload::Verify {
            verified_kind: kind.to_string(),
            passed,
        },
        input: doc.input.clone(),
        metadata: Metadata {
            input_degree: degree_doc(v.degree()),
            checks,
            ..Metadata::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(rows: &[&[i64]]) -> CurveDocument {
        CurveDocument::from_vector(&PolyVector::from_ints(rows), None)
    }

    #[test]
    fn every_command_passes_its_own_checks() {
        let doc = curve(&[&[0, 1], &[0, 0, 1], &[1, 0, 0, 0, 1]]);
        for cmd in [Command::Frame, Command::Sylvester] {
            let r = run_command(cmd, &doc, Options::default()).unwrap();
            assert!(r.all_checks_pass(), "{cmd:?}: {:?}", r.metadata.checks);
        }
        let v = curve(&[&[1, 0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[0, 1]]);
        for cmd in [
            Command::Complete,
            Command::Bezout,
            Command::Mubasis,
            Command::Section,
            Command::Canonical,
        ] {
            let r = run_command(cmd, &v, Options::default()).unwrap();
            assert!(r.all_checks_pass(), "{cmd:?}: {:?}", r.metadata.checks);
            let checked = verify(&r).unwrap();
            assert!(
                checked.all_checks_pass(),
                "{cmd:?}: {:?}",
                checked.metadata.checks
            );
        }
    }

    #[test]
    fn rejections_are_classified() {
        let line = curve(&[&[0, 1], &[0, 2]]);
        assert!(matches!(
            run_command(Command::Frame, &line, Options::default()),
            Err(CliError::Rejected(_))
        ));
        let common = curve(&[&[0, 1], &[0, 0, 1]]);
        assert!(matches!(
            run_command(Command::Bezout, &common, Options::default()),
            Err(CliError::Rejected(_))
        ));
        let zero = curve(&[&[0], &[0]]);
        assert!(matches!(
            run_command(Command::Sylvester, &zero, Options::default()),
            Err(CliError::Rejected(_))
        ));
    }

    #[test]
    fn tampered_frame_fails_verification() {
        let doc = curve(&[&[0, 1], &[0, 0, 0, 1]]);
        let mut r = run_command(Command::Frame, &doc, Options::default()).unwrap();
        assert!(verify(&r).unwrap().all_checks_pass());
        if let Payload::Frame { frame, .. } = &mut r.payload {
            frame[1][1] = vec!["2".to_string()];
        }
        let checked = verify(&r).unwrap();
        assert!(!checked.all_checks_pass());
        assert!(matches!(
            checked.payload,
            Payload::Verify { passed: false, .. }
        ));
    }
}
