//! The `qsnake` command line. [`run`] does all the work so it can be driven
//! from tests without spawning a process.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::json;

use crate::error::CfError;
use crate::kasteleyn::{fibonacci_kasteleyn_rescaled, verify_kasteleyn};
use crate::laurent::LaurentPoly;
use crate::matching::{enumerate_matchings, matching_stat};
use crate::qrational::{
    fibonacci, fibonacci_denominators, fibonacci_numerators, q_cf_eval, q_continuant, q_map_general, q_matrix_eval,
    q_rational, ContinuedFraction, QRational,
};
use crate::render;
use crate::snake::{snake_graph, Edge};
use crate::verify::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qsnake", version, about = "q-deformed rationals, snake graphs and Kasteleyn determinants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print [r/s]_q.
    Compute {
        r: u64,
        s: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Compute by all four routes and check they agree.
        #[arg(long)]
        all_routes: bool,
    },
    /// Draw the weighted snake graph of r/s.
    Snake {
        r: u64,
        s: u64,
        #[arg(long, value_enum, default_value_t = RenderKind::Ascii)]
        render: RenderKind,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the perfect matchings of the snake of r/s as JSON.
    Matchings { r: u64, s: u64 },
    /// Kasteleyn matrix, determinant and verdict for r/s as JSON.
    Kasteleyn { r: u64, s: u64 },
    /// Table of [F_{k+1}/F_k]_q for k = 1..=n.
    Fibonacci {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=90))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every identity on all coprime pairs 1 <= s < r <= max-r.
    Verify {
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(2..))]
        max_r: u64,
        #[arg(long, env = "QSNAKE_JOBS", default_value_t = default_jobs())]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderKind {
    Ascii,
    Svg,
    Tikz,
    Json,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<CfError> for Failure {
    fn from(e: CfError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let display_only = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if display_only {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Compute {
            r,
            s,
            format,
            all_routes,
        } => compute(r, s, format, all_routes, out),
        Command::Snake { r, s, render, out: path } => snake(r, s, render, path, out),
        Command::Matchings { r, s } => matchings(r, s, out),
        Command::Kasteleyn { r, s } => kasteleyn(r, s, out),
        Command::Fibonacci { n, format } => fibonacci_table(n as usize, format, out),
        Command::Verify { max_r, jobs, format } => {
            let summary = sweep(max_r, jobs);
            match format {
                Format::Text => write!(out, "{summary}")?,
                Format::Json => print_json(out, &summary)?,
            }
            Ok(summary.all_passed())
        }
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}")
}

fn compute(r: u64, s: u64, format: Format, all_routes: bool, out: &mut dyn Write) -> Outcome {
    let cf = ContinuedFraction::expand(r, s)?;
    let value = q_matrix_eval(&cf);
    if !all_routes {
        match format {
            Format::Text => writeln!(out, "[{r}/{s}]_q = {value}")?,
            Format::Json => print_json(
                out,
                &json!({"r": r, "s": s, "cf": cf, "num": value.num(), "den": value.den()}),
            )?,
        }
        return Ok(true);
    }
    let by_cf = q_cf_eval(&cf);
    let continuant = q_continuant(&cf);
    let modular = QRational::from_fraction(q_map_general(Rational64::new(r as i64, s as i64)));
    let agree = by_cf == value && continuant == *value.num() && modular == value;
    match format {
        Format::Text => {
            writeln!(out, "{:<20}{value}", "matrix:")?;
            writeln!(out, "{:<20}{by_cf}", "continued fraction:")?;
            writeln!(out, "{:<20}R = {continuant}", "continuant:")?;
            writeln!(out, "{:<20}{modular}", "modular map:")?;
            writeln!(out, "routes agree: {}", if agree { "yes" } else { "NO" })?;
        }
        Format::Json => print_json(
            out,
            &json!({
                "r": r,
                "s": s,
                "cf": cf,
                "num": value.num(),
                "den": value.den(),
                "routes": {
                    "matrix": {"num": value.num(), "den": value.den()},
                    "continued_fraction": {"num": by_cf.num(), "den": by_cf.den()},
                    "continuant": {"num": continuant},
                    "modular": {"num": modular.num(), "den": modular.den()},
                },
                "agree": agree,
            }),
        )?,
    }
    Ok(agree)
}

fn snake(r: u64, s: u64, kind: RenderKind, path: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    let g = snake_graph(&ContinuedFraction::expand(r, s)?);
    let text = match kind {
        RenderKind::Ascii => render::render_ascii(&g),
        RenderKind::Svg => render::render_svg(&g),
        RenderKind::Tikz => render::render_tikz(&g),
        RenderKind::Json => render::render_json(&g),
    };
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(true)
}

#[derive(Serialize)]
struct MatchingJson {
    edges: Vec<Edge>,
    weight_exp: i64,
}

fn matchings(r: u64, s: u64, out: &mut dyn Write) -> Outcome {
    let cf = ContinuedFraction::expand(r, s)?;
    let g = snake_graph(&cf);
    let all: Vec<MatchingJson> = enumerate_matchings(&g)
        .into_iter()
        .map(|m| MatchingJson {
            weight_exp: m.weight_exp(&g),
            edges: m.edges,
        })
        .collect();
    let statistic = matching_stat(&g);
    let n = cf.scalar_exponent();
    let numerator = q_rational(r, s)?.num().clone();
    let holds = statistic.shift(n) == numerator;
    print_json(
        out,
        &json!({
            "r": r,
            "s": s,
            "cf": cf,
            "count": all.len(),
            "matchings": all,
            "statistic": statistic,
            "n": n,
            "numerator": numerator,
            "theorem_holds": holds,
        }),
    )?;
    Ok(holds)
}

fn kasteleyn(r: u64, s: u64, out: &mut dyn Write) -> Outcome {
    let report = verify_kasteleyn(r, s)?;
    print_json(out, &report)?;
    Ok(report.pass)
}

#[derive(Serialize)]
struct FibonacciRow {
    k: usize,
    r: u64,
    s: u64,
    num: LaurentPoly,
    den: LaurentPoly,
    /// Recurrence values equal `q_rational(F_{k+1}, F_k)`.
    matches_q_rational: bool,
    /// `F̃_{k+1}(q) = q^{k-1} F_{k+1}(q^-1)`.
    mirror: bool,
    /// Rescaled Fibonacci Kasteleyn determinant equals the numerator
    /// (absent for `k = 1`).
    kasteleyn: Option<bool>,
}

fn fibonacci_table(n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let nums = fibonacci_numerators(n + 1);
    let dens = fibonacci_denominators(n + 1);
    let rows: Vec<FibonacciRow> = (1..=n)
        .map(|k| {
            let (r, s) = (fibonacci(k + 1), fibonacci(k));
            let expected = q_rational(r, s).expect("consecutive Fibonacci numbers are coprime");
            let num = nums[k + 1].clone();
            let den = dens[k].clone();
            FibonacciRow {
                k,
                r,
                s,
                matches_q_rational: *expected.num() == num && *expected.den() == den,
                mirror: num == dens[k + 1].mirror(k as i64 - 1),
                kasteleyn: (k >= 2).then(|| fibonacci_kasteleyn_rescaled(k) == num),
                num,
                den,
            }
        })
        .collect();
    let ok = rows
        .iter()
        .all(|row| row.matches_q_rational && row.mirror && row.kasteleyn.unwrap_or(true));
    match format {
        Format::Json => print_json(out, &rows)?,
        Format::Text => {
            for row in &rows {
                let mark = |b: bool| if b { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{:>3}  {}/{}  num: {}  den: {}  [{} mirror {} kasteleyn {}]",
                    row.k,
                    row.r,
                    row.s,
                    row.num,
                    row.den,
                    mark(row.matches_q_rational),
                    mark(row.mirror),
                    row.kasteleyn.map_or("-", mark),
                )?;
            }
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qsnake").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text() {
        let (code, out, _) = call(&["compute", "5", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[5/2]_q = (1 + 2q + q^2 + q^3)/(1 + q)\n");
        assert_eq!(call(&["compute", "1", "1"]).1, "[1/1]_q = 1/1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["compute", "4", "2"]).0, 2);
        assert_eq!(call(&["compute", "3", "0"]).0, 2);
        assert_eq!(call(&["snake", "5", "2", "--render", "png"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn fibonacci_rows() {
        let (code, out, _) = call(&["fibonacci", "7"]);
        assert_eq!(code, 0);
        let last = out.lines().last().unwrap();
        assert!(last.contains("21/13  num: 1 + 3q + 4q^2 + 5q^3 + 4q^4 + 3q^5 + q^6"), "{last}");
        let (code, out, _) = call(&["fibonacci", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("  1  1/1  num: 1  den: 1"), "{out}");
    }
}
