use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use affine_frames::rational::parse_rational;
use affine_frames::Rational;
use affine_frames_cli::{
    parse_curve, parse_result, plot_svg, run_command, verify, CliError, Command, CurveDocument,
    Options, Payload,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "affine-frames",
    version,
    about = "Exact equi-affine moving frames of polynomial curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct Io {
    /// Input JSON document.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Equi-affine minimal-degree moving frame of a generic curve.
    Frame(Io),
    /// Minimal-degree matrix completion of a vector.
    Complete(Io),
    /// Minimal-degree Bezout vector.
    Bezout(Io),
    /// Mu-basis of the syzygy module.
    Mubasis(Io),
    /// Equivariant section and canonical form.
    Section(Io),
    /// Canonical form only.
    Canonical(Io),
    /// Sylvester coefficient matrix.
    Sylvester {
        #[command(flatten)]
        io: Io,
        /// Include pivot and non-pivot columns (1-based).
        #[arg(long)]
        dump_pivots: bool,
    },
    /// Replay a result document and re-check its invariants.
    Verify(Io),
    /// SVG of the frame along the curve. Accepts a curve or a frame result.
    Plot {
        #[command(flatten)]
        io: Io,
        /// Comma-separated parameters, e.g. -1,0,1/2.
        #[arg(
            long,
            value_name = "LIST",
            allow_hyphen_values = true,
            default_value = "0"
        )]
        params: String,
        /// Projection axes, 0-based.
        #[arg(long, value_name = "I,J", default_value = "0,1")]
        project: String,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| {
        CliError::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn write(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_rational(p.trim()).map_err(|e| CliError::Input(format!("--params: {e}"))))
        .collect()
}

fn parse_projection(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("--project expects I,J, found {s:?}"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

fn run_simple(cmd: Command, io: &Io, opts: Options) -> Result<(), CliError> {
    let doc = parse_curve(&read(&io.input)?)?;
    let result = run_command(cmd, &doc, opts)?;
    write(io.out.as_deref(), &result.to_json())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let none = Options::default();
    match cli.command {
        Cmd::Frame(io) => run_simple(Command::Frame, &io, none),
        Cmd::Complete(io) => run_simple(Command::Complete, &io, none),
        Cmd::Bezout(io) => run_simple(Command::Bezout, &io, none),
        Cmd::Mubasis(io) => run_simple(Command::Mubasis, &io, none),
        Cmd::Section(io) => run_simple(Command::Section, &io, none),
        Cmd::Canonical(io) => run_simple(Command::Canonical, &io, none),
        Cmd::Sylvester { io, dump_pivots } => {
            run_simple(Command::Sylvester, &io, Options { dump_pivots })
        }
        Cmd::Verify(io) => {
            let doc = parse_result(&read(&io.input)?)?;
            let report = verify(&doc)?;
            write(io.out.as_deref(), &report.to_json())?;
            match report.payload {
                Payload::Verify { passed: true, .. } => Ok(()),
                _ => {
                    let failed: Vec<&str> = report
                        .metadata
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.name.as_str())
                        .collect();
                    Err(CliError::VerifyFailed(failed.join(", ")))
                }
            }
        }
        Cmd::Plot {
            io,
            params,
            project,
        } => {
            let text = read(&io.input)?;
            let frame = match parse_result(&text) {
                Ok(doc) => doc,
                Err(_) => run_command(Command::Frame, &parse_curve(&text)?, none)?,
            };
            let curve: CurveDocument = frame.input.clone();
            let svg = plot_svg(
                &curve,
                &frame,
                &parse_params(&params)?,
                parse_projection(&project)?,
            )?;
            write(io.out.as_deref(), &svg)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
