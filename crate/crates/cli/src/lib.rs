//! The `amalgam` command line.
//!
//! Exit codes: 0 success, 1 a `verify` check failed, 2 input error,
//! 3 resource limit reached.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use amalgam_core::decomp::{decompose_with, DecomposeOptions, DecompositionReport, LatticeOutcome};
use amalgam_core::format::{
    knot_report_to_json, order_summary_to_json, parse_input, report_to_json, to_canonical_string,
    Input,
};
use amalgam_core::knot::analyze_knot;
use amalgam_core::present::{order_with, unimodular_scramble, OrderOptions, DEFAULT_MAX_MINORS};
use amalgam_core::{
    decomp::DEFAULT_MAX_STEPS, CanonicalForm, Error, IntMatrix, LambdaPresentation, LaurentPoly,
};
use clap::{Parser, Subcommand};
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "amalgam", version, about = "Orders and lattice decompositions of Z[t, t^-1]-modules")]
struct Cli {
    /// Emit canonical JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Also check that the order is unchanged under a seeded unimodular scramble
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Cap on the number of maximal minors enumerated
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MINORS)]
    max_minors: u64,

    /// Cap on reduction iterations
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the order, its degree, coefficients and content
    Order { file: PathBuf },
    /// Print the full decomposition report
    Decompose { file: PathBuf },
    /// Run the decomposition and fail (exit 1) if any check is false
    Verify { file: PathBuf },
    /// Alexander polynomial and monic screen for a Seifert matrix
    Knot {
        file: PathBuf,
        /// Attach the decomposition report
        #[arg(long)]
        decompose: bool,
    },
}

/// Failure of a subcommand, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyMinors { .. } | Error::StepLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(path: &Path, message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {message}", path.display()),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_failure(path, e))?;
    parse_input(&text).map_err(|e| input_failure(path, e))
}

fn decompose_options(cli: &Cli) -> DecomposeOptions {
    DecomposeOptions {
        max_minors: cli.max_minors,
        max_steps: cli.max_steps,
    }
}

fn scramble_check(
    cli: &Cli,
    pres: &LambdaPresentation,
    order: &LaurentPoly,
) -> Result<Option<bool>, Failure> {
    let Some(seed) = cli.seed else {
        return Ok(None);
    };
    let opts = OrderOptions {
        max_minors: cli.max_minors,
    };
    let scrambled = order_with(&unimodular_scramble(pres, seed), opts)?;
    Ok(Some(scrambled.associate(order)))
}

fn with_scramble(mut v: Value, check: Option<bool>) -> Value {
    if let (Some(c), Value::Object(obj)) = (check, &mut v) {
        obj.insert("scramble_invariant".into(), Value::Bool(c));
    }
    v
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("writing output: {e}"),
    })
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Order { file } => {
            let pres = read_input(file)?.to_presentation();
            let order = order_with(
                &pres,
                OrderOptions {
                    max_minors: cli.max_minors,
                },
            )?;
            let check = scramble_check(cli, &pres, &order)?;
            if cli.json {
                let v = with_scramble(order_summary_to_json(&order), check);
                emit(out, &to_canonical_string(&v))?;
            } else {
                emit(out, &order_text(&order, check))?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { file } | Command::Verify { file } => {
            let pres = read_input(file)?.to_presentation();
            let report = decompose_with(&pres, decompose_options(cli))?;
            let check = scramble_check(cli, &pres, &report.order)?;
            if cli.json {
                let v = with_scramble(report_to_json(&report), check);
                emit(out, &to_canonical_string(&v))?;
            } else {
                emit(out, &report_text(&report, check))?;
            }
            let verifying = matches!(cli.command, Command::Verify { .. });
            let pass = report.checks.all_pass() && check != Some(false);
            Ok(if verifying && !pass {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Knot { file, decompose } => {
            let Input::Seifert(s) = read_input(file)? else {
                return Err(input_failure(file, "`knot` expects a {\"seifert\": ...} file"));
            };
            let report = analyze_knot(&s, *decompose, decompose_options(cli))?;
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if cli.json {
                emit(out, &to_canonical_string(&knot_report_to_json(&report)))?;
            } else {
                let mut text = format!(
                    "alexander: {}\ngenus: {}\nmonic: {}\npalindromic: {}\ncontent: {}",
                    report.alexander, report.genus, report.monic, report.palindromic, report.content
                );
                if let Some(d) = &report.decomposition {
                    text.push_str("\n\n");
                    text.push_str(&report_text(d, None));
                }
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn coefficients(order: &LaurentPoly) -> String {
    match (order.ord(), order.deg()) {
        (Some(lo), Some(hi)) => (lo..=hi)
            .map(|e| order.coeff(e).to_string())
            .collect::<Vec<_>>()
            .join(" "),
        _ => "-".into(),
    }
}

fn order_text(order: &LaurentPoly, scramble: Option<bool>) -> String {
    let degree = order.span().map_or("-".into(), |d| d.to_string());
    let mut s = format!(
        "order: {order}\ndegree: {degree}\ncoefficients (c0 .. cd): {}\ncontent: {}",
        coefficients(order),
        order.content()
    );
    if let Some(c) = scramble {
        s.push_str(&format!("\nscramble_invariant: {c}"));
    }
    s
}

fn show(v: Option<impl std::fmt::Display>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

fn list_text<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix_text(m: &IntMatrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| list_text(r)).collect();
    format!("[{}]", rows.join(", "))
}

/// `Z^2 + Z/2 + Z/6` style summary.
fn group_text(c: &CanonicalForm) -> String {
    let mut parts = Vec::new();
    match c.free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        n => parts.push(format!("Z^{n}")),
    }
    parts.extend(c.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "trivial".into()
    } else {
        format!("isomorphic to {}", parts.join(" + "))
    }
}

fn report_text(r: &DecompositionReport, scramble: Option<bool>) -> String {
    let mut lines = vec![
        format!("order: {}", r.order),
        format!("degree: {}", show(r.degree)),
        format!("c0: {}  cd: {}  content: {}", show(r.c0.as_ref()), show(r.cd.as_ref()), r.content),
        format!("B: {} generators, {}", r.amalgam.b.gens(), group_text(&r.b_form)),
        format!("U: {} generators, {}", r.amalgam.u.gens(), group_text(&r.u_form)),
        format!("reduction steps: {}", r.amalgam.reduction_steps),
        format!("q (minimal generators of U): {}", r.q),
        format!("amalgam order: {}", r.amalgam_order),
    ];
    match &r.lattice {
        LatticeOutcome::Present(l) => {
            lines.push(format!("lattice pair: d = {}", l.d));
            lines.push(format!("  F = {}", matrix_text(&l.f)));
            lines.push(format!("  G = {}", matrix_text(&l.g)));
            lines.push(format!("  det(tG - F) = {}", show(r.char_poly.as_ref())));
            lines.push(format!(
                "  index f = {}, index g = {}",
                show(r.index_f.as_ref()),
                show(r.index_g.as_ref())
            ));
        }
        LatticeOutcome::Absent(e) => lines.push(format!("lattice pair: absent ({e})")),
    }
    lines.push("checks:".into());
    for (name, v) in r.checks.named() {
        lines.push(format!("  {name}: {}", v.map_or("n/a".into(), |b| b.to_string())));
    }
    if let Some(c) = scramble {
        lines.push(format!("  scramble_invariant: {c}"));
    }
    lines.join("\n")
}
