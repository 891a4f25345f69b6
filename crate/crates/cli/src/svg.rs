//! Static SVG figures of a frame along a curve. All evaluation is exact;
//! values become `f64` only when written as coordinates.

use std::fmt::Write as _;

use affine_frames::rational::format_rational;
use affine_frames::{PolyMatrix, PolyVector, Rational};
use num_traits::ToPrimitive;

use crate::document::{parse_matrix, CurveDocument, Payload, ResultDocument};
use crate::CliError;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;
const SAMPLES: i64 = 200;
const PALETTE: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

struct Arrow {
    column: usize,
    from: (f64, f64),
    dir: (f64, f64),
}

struct Anchor {
    t: Rational,
    at: (f64, f64),
    arrows: Vec<Arrow>,
}

/// Renders the projection of `curve` onto axes `(i, j)` with the columns of
/// the frame drawn as arrows at each parameter in `params`.
pub fn plot_svg(
    curve: &CurveDocument,
    frame: &ResultDocument,
    params: &[Rational],
    projection: (usize, usize),
) -> Result<String, CliError> {
    let c = curve.vector()?;
    let n = c.len();
    let (i, j) = projection;
    if i == j || i >= n || j >= n {
        return Err(CliError::Input(format!(
            "projection axes must be distinct and below n = {n}, found {i},{j}"
        )));
    }
    if params.is_empty() {
        return Err(CliError::Input("parameter list is empty".to_string()));
    }
    let Payload::Frame { frame: f, .. } = &frame.payload else {
        return Err(CliError::Input(format!(
            "expected a frame document, found kind {}",
            frame.kind()
        )));
    };
    if frame.input.vector()? != c {
        return Err(CliError::Input(
            "frame document belongs to a different curve".to_string(),
        ));
    }
    let f = parse_matrix(f, "payload.frame")?;
    if f.rows() != n || f.cols() != n {
        return Err(CliError::Input(format!("frame is not {n}x{n}")));
    }

    let polyline = sample(&c, params, (i, j));
    let anchors = anchors(&c, &f, params, (i, j));
    Ok(render(curve.label.as_deref(), &polyline, &anchors))
}

fn sample(c: &PolyVector, params: &[Rational], (i, j): (usize, usize)) -> Vec<(f64, f64)> {
    let lo = params.iter().min().expect("nonempty");
    let hi = params.iter().max().expect("nonempty");
    let pad = (hi - lo) / Rational::from_integer(4.into()) + Rational::new(1.into(), 2.into());
    let (lo, hi) = (lo - &pad, hi + &pad);
    let step = (&hi - &lo) / Rational::from_integer(SAMPLES.into());
    (0..=SAMPLES)
        .map(|k| {
            let t = &lo + &step * Rational::from_integer(k.into());
            (to_f64(&c.get(i).eval(&t)), to_f64(&c.get(j).eval(&t)))
        })
        .collect()
}

fn anchors(
    c: &PolyVector,
    f: &PolyMatrix,
    params: &[Rational],
    (i, j): (usize, usize),
) -> Vec<Anchor> {
    params
        .iter()
        .map(|t| {
            let p = c.eval(t);
            let m = f.eval(t);
            let at = (to_f64(&p[i]), to_f64(&p[j]));
            let arrows = (0..f.cols())
                .map(|col| Arrow {
                    column: col,
                    from: at,
                    dir: (to_f64(m.get(i, col)), to_f64(m.get(j, col))),
                })
                .collect();
            Anchor {
                t: t.clone(),
                at,
                arrows,
            }
        })
        .collect()
}

fn render(label: Option<&str>, polyline: &[(f64, f64)], anchors: &[Anchor]) -> String {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in polyline.iter().chain(anchors.iter().map(|a| &a.at)) {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let extent = (xmax - xmin).max(ymax - ymin).max(1e-9);

    // One scale for every arrow so relative lengths stay meaningful.
    let longest = anchors
        .iter()
        .flat_map(|a| &a.arrows)
        .map(|ar| ar.dir.0.hypot(ar.dir.1))
        .fold(0.0, f64::max);
    let arrow_scale = if longest > 0.0 {
        0.2 * extent / longest
    } else {
        0.0
    };

    let cx = (xmin + xmax) / 2.0;
    let cy = (ymin + ymax) / 2.0;
    let k = (SIZE - 2.0 * MARGIN) / (1.2 * extent);
    let map = |(x, y): (f64, f64)| (SIZE / 2.0 + k * (x - cx), SIZE / 2.0 - k * (y - cy));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<title>{}</title>", escape(label.unwrap_or("curve")));
    out.push_str("<defs>\n");
    for (idx, color) in PALETTE.iter().enumerate() {
        let _ = writeln!(
            out,
            "<marker id=\"head{idx}\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{color}\"/></marker>"
        );
    }
    out.push_str("</defs>\n");
    let _ = writeln!(
        out,
        "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>"
    );

    let points: Vec<String> = polyline
        .iter()
        .map(|&p| {
            let (x, y) = map(p);
            format!("{x:.4},{y:.4}")
        })
        .collect();
    let _ = writeln!(
        out,
        "<polyline class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"{}\"/>",
        points.join(" ")
    );

    for a in anchors {
        let _ = writeln!(
            out,
            "<g class=\"frame\" data-t=\"{}\">",
            format_rational(&a.t)
        );
        let (ax, ay) = map(a.at);
        let _ = writeln!(
            out,
            "<circle class=\"anchor\" cx=\"{ax:.4}\" cy=\"{ay:.4}\" r=\"3\"/>"
        );
        for ar in &a.arrows {
            let tip = (
                ar.from.0 + arrow_scale * ar.dir.0,
                ar.from.1 + arrow_scale * ar.dir.1,
            );
            let (x1, y1) = map(ar.from);
            let (x2, y2) = map(tip);
            let color_idx = ar.column % PALETTE.len();
            let _ = writeln!(
                out,
                "<line class=\"arrow\" data-column=\"{}\" x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" stroke=\"{}\" stroke-width=\"2\" marker-end=\"url(#head{color_idx})\"/>",
                ar.column + 1,
                PALETTE[color_idx]
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::{run_command, Command, Options};
    use affine_frames::rational::qi;

    #[test]
    fn rejects_bad_requests() {
        let doc =
            CurveDocument::from_vector(&PolyVector::from_ints(&[&[0, 1], &[0, 0, 0, 1]]), None);
        let fr = run_command(Command::Frame, &doc, Options::default()).unwrap();
        assert!(plot_svg(&doc, &fr, &[], (0, 1)).is_err());
        assert!(plot_svg(&doc, &fr, &[qi(0)], (1, 1)).is_err());
        assert!(plot_svg(&doc, &fr, &[qi(0)], (0, 2)).is_err());

        let other =
            CurveDocument::from_vector(&PolyVector::from_ints(&[&[0, 1], &[0, 0, 0, 0, 1]]), None);
        assert!(plot_svg(&other, &fr, &[qi(0)], (0, 1)).is_err());
    }

    #[test]
    fn escapes_labels() {
        assert_eq!(escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
    }
}
