//! Command-line front end. [`run`] does all the work and returns the exit code with
//! the text destined for stdout and stderr, so the binary stays a thin wrapper.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::closed::{stirling_series_closed, zetastar_series_closed, ClosedFormOutput};
use crate::error::Error;
use crate::exact::{format_rat, interp_at, interp_trunc, parse_rat, zt_trunc, zts_trunc, Rat};
use crate::identities::{catalogue, verify, verify_all, VerificationReport};
use crate::index::IndexWord;
use crate::numeric::{series_s_direct, xi_numeric, ZetaPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mzvkit", version, about = "Truncated multiple zeta values, identity checks and zeta series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a single value.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        args: ComputeArgs,
    },
    /// Verify one catalogue identity, or `all`, over its grid.
    Verify {
        id: String,
        /// Grid entries overriding the default, e.g. "N<=15,r<=2".
        #[arg(long)]
        grid: Option<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List catalogue identities with their default grids.
    List {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum What {
    Ztrunc,
    Zstar,
    Interp,
    Series,
    Xi,
    Closed,
    Reduce,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long = "N")]
    n: Option<u64>,
    /// Comma-separated index word, e.g. "2,1,1".
    #[arg(long, allow_hyphen_values = true)]
    index: Option<String>,
    #[arg(long)]
    star: bool,
    #[arg(long)]
    l1: Option<usize>,
    #[arg(long)]
    l2: Option<usize>,
    #[arg(long)]
    r1: Option<u32>,
    #[arg(long)]
    r2: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Rational "p/q".
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, env = "MZVKIT_DIGITS", default_value_t = 12)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PrecisionUnreachable(_) => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> crate::Result<T> {
    v.clone().ok_or_else(|| usage(format!("missing --{flag}")))
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Parses `args` (the first item is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_USAGE, text) } else { Outcome::ok(text) };
        }
    };
    match cli.command {
        Command::Compute { what, args } => match compute(what, &args) {
            Ok(out) => Outcome::ok(out),
            Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
        },
        Command::Verify { id, grid, out, format } => run_verify(&id, grid.as_deref(), out, format),
        Command::List { format } => Outcome::ok(list(format)),
    }
}

fn word(args: &ComputeArgs) -> crate::Result<IndexWord> {
    need(&args.index, "index")?.parse()
}

fn render(format: Format, input: Value, value: Value, text: String) -> String {
    match format {
        Format::Json => pretty(&json!({ "input": input, "value": value })),
        Format::Text => text + "\n",
    }
}

fn compute(what: What, a: &ComputeArgs) -> crate::Result<String> {
    let digits = a.digits;
    if digits == 0 {
        return Err(usage("--digits must be positive"));
    }
    match what {
        What::Ztrunc | What::Zstar => {
            let (n, w) = (need(&a.n, "N")?, word(a)?);
            let star = a.star || what == What::Zstar;
            let v = if star { zts_trunc(n, &w) } else { zt_trunc(n, &w) };
            let s = format_rat(&v);
            Ok(render(a.format, json!({ "N": n, "index": w, "star": star }), json!(s), s))
        }
        What::Interp => {
            let (n, w) = (need(&a.n, "N")?, word(a)?);
            if w.parts().iter().any(|&x| x != 1) {
                return Err(usage("interp takes an all-ones word, e.g. --index 1,1,1"));
            }
            let k = w.depth() as u32;
            match &a.t {
                Some(t) => {
                    let t: Rat = parse_rat(t)?;
                    let s = format_rat(&interp_at(n, k, &t));
                    Ok(render(a.format, json!({ "N": n, "index": w, "t": format_rat(&t) }), json!(s), s))
                }
                None => {
                    let p = interp_trunc(n, k).to_string();
                    Ok(render(a.format, json!({ "N": n, "index": w }), json!(p), format!("{p}  (coefficients of t^0, t^1, ...)")))
                }
            }
        }
        What::Series => {
            let (l1, l2) = (a.l1.unwrap_or(0), a.l2.unwrap_or(0));
            let (r1, r2) = (need(&a.r1, "r1")?, need(&a.r2, "r2")?);
            let v = series_s_direct(l1, l2, r1, r2, digits)?;
            let input = json!({ "l1": l1, "l2": l2, "r1": r1, "r2": r2, "digits": digits });
            Ok(render(a.format, input, serde_json::to_value(&v).expect("serializable"), v.to_string()))
        }
        What::Xi => {
            let (w, s) = (word(a)?, need(&a.s, "s")?);
            let v = xi_numeric(&w, s, digits)?;
            let input = json!({ "index": w, "s": s, "digits": digits });
            Ok(render(a.format, input, serde_json::to_value(&v).expect("serializable"), v.to_string()))
        }
        What::Closed => {
            let (l1, l2) = (a.l1.unwrap_or(0), a.l2.unwrap_or(0));
            let (r1, r2) = (need(&a.r1, "r1")?, need(&a.r2, "r2")?);
            let poly = match (l1, l2) {
                (0, _) => stirling_series_closed(l2, r1, r2)?,
                (_, 0) => zetastar_series_closed(l1, r1, r2)?,
                _ => return Err(usage("closed forms need --l1 0 or --l2 0")),
            };
            let out = ClosedFormOutput::new(poly, digits)?;
            let input = json!({ "l1": l1, "l2": l2, "r1": r1, "r2": r2, "digits": digits });
            Ok(render(a.format, input, serde_json::to_value(&out).expect("serializable"), closed_text(&out)))
        }
        What::Reduce => {
            let w = word(a)?;
            if !w.is_admissible() {
                return Err(Error::NotAdmissible(w.to_string()));
            }
            let poly = if a.star { ZetaPoly::zeta_star(w.clone()) } else { ZetaPoly::zeta(w.clone()) };
            let out = ClosedFormOutput::new(poly, digits)?;
            let input = json!({ "index": w, "star": a.star, "digits": digits });
            Ok(render(a.format, input, serde_json::to_value(&out).expect("serializable"), closed_text(&out)))
        }
    }
}

fn closed_text(out: &ClosedFormOutput) -> String {
    let mut s = format!("{}\n  = {}\n  ≈ {}", out.poly, out.reduced, out.numeric);
    if !out.flagged.is_empty() {
        let names: Vec<String> = out.flagged.iter().map(|f| f.to_string()).collect();
        let _ = write!(s, "\n  irreducible: {}", names.join(", "));
    }
    s
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!(
        "{:<20} {:>6} cases  {:>4} failed  {:>6} ms  [{}]",
        r.identity, r.cases_total, r.cases_failed, r.elapsed_ms, r.grid
    );
    if let Some(f) = &r.first_failure {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = write!(s, "\n    first failure at {}: {} != {}", params.join(", "), f.lhs, f.rhs);
    }
    s
}

fn run_verify(id: &str, grid: Option<&str>, out: Option<PathBuf>, format: Format) -> Outcome {
    let reports = if id == "all" {
        if grid.is_some() {
            return Outcome::fail(EXIT_USAGE, "error: --grid applies to a single identity\n".into());
        }
        verify_all()
    } else {
        verify(id, grid).map(|r| vec![r])
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    };
    let failed: usize = reports.iter().map(|r| r.cases_failed).sum();
    let body = match (format, id == "all") {
        (Format::Json, false) => pretty(&reports[0]),
        (Format::Json, true) => pretty(&json!({
            "identity": "all",
            "cases_total": reports.iter().map(|r| r.cases_total).sum::<usize>(),
            "cases_failed": failed,
            "reports": reports,
        })),
        (Format::Text, _) => reports.iter().map(report_text).collect::<Vec<_>>().join("\n") + "\n",
    };
    let code = if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED };
    match out {
        Some(path) => match std::fs::write(&path, &body) {
            Ok(()) => Outcome { code, stdout: format!("report written to {}\n", path.display()), stderr: String::new() },
            Err(e) => Outcome::fail(EXIT_USAGE, format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

fn list(format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = catalogue()
                .iter()
                .map(|i| json!({ "id": i.id, "anchor": i.anchor, "default_grid": i.default_grid }))
                .collect();
            pretty(&items)
        }
        Format::Text => catalogue()
            .iter()
            .map(|i| format!("{:<20} {:<40} {}\n", i.id, i.default_grid, i.anchor))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("mzvkit").chain(args.iter().copied()))
    }

    #[test]
    fn compute_exact_values() {
        let o = go(&["compute", "ztrunc", "--N", "4", "--index", "1,1", "--format", "text"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "35/24\n"));
        let o = go(&["compute", "ztrunc", "--N", "4", "--index", "1,1"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["value"], "35/24");
        assert_eq!(v["input"]["index"], "1,1");
        let star = go(&["compute", "ztrunc", "--star", "--N", "3", "--index", "2", "--format", "text"]);
        let zstar = go(&["compute", "zstar", "--N", "3", "--index", "2", "--format", "text"]);
        assert_eq!(star.stdout, zstar.stdout);
        let o = go(&["compute", "interp", "--N", "2", "--index", "1,1", "--t", "1/2", "--format", "text"]);
        // ζ_2(1,1) + ζ_2(2)/2 = 1/2 + 5/8
        assert_eq!(o.stdout, "9/8\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&["compute", "ztrunc", "--index", "1"]).code, 2);
        assert_eq!(go(&["compute", "ztrunc", "--N", "3", "--index", "0,1"]).code, 2);
        assert_eq!(go(&["compute", "nonsense"]).code, 2);
        assert_eq!(go(&["compute", "interp", "--N", "3", "--index", "2"]).code, 2);
        assert_eq!(go(&["verify", "no-such-id"]).code, 2);
        assert_eq!(go(&["verify", "all", "--grid", "N<=2"]).code, 2);
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn list_and_verify() {
        let o = go(&["list"]);
        let v: Vec<Value> = serde_json::from_str(&o.stdout).unwrap();
        assert!(v.len() >= 13);
        assert!(o.stdout.contains("thm2-trunc") && o.stdout.contains("hoffman-ihara-half"));
        let o = go(&["verify", "lem7-findiff", "--grid", "m<=3"]);
        assert_eq!(o.code, 0);
        let r: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(r["cases_failed"], 0);
    }
}
