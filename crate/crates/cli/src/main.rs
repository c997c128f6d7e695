//! `durfee`: compute, verify and export generating-function data for
//! partitions by Durfee triangle size.
//!
//! Exit status: 0 success, 1 verification failure or I/O error, 2 usage
//! error, 3 structure violation, 4 quasi-polynomial fit mismatch.

mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use durfee_core::cfinite::{format_poly_in_m, rk_eventual_period_mod, rk_quasipolynomial, rk_sequence};
use durfee_core::codec::write_bfile;
use durfee_core::durfee::phi_poly;
use durfee_core::polyring::IntPolynomial;
use durfee_core::qseries::{ad_series_dp, alpha_poly, check_alpha_structure};
use durfee_core::Error;

#[derive(Parser)]
#[command(name = "durfee", version, about = "Partitions by Durfee triangle size: exact generating functions and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// a_d(0..=order): weak compositions with steps of at most +1
    Ad {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Numerator alpha_d of A_d = alpha_d / (q;q)_d, with a structure report
    Alpha {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Numerator phi_k of F_k = phi_k / (q;q)_k, with a structure report
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// R_k(0..=n_max): partitions of n with Durfee triangle of size k
    Rk {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Quasi-polynomial for R_k(n), n > k^2
    Quasipoly {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Eventual period of R_k(n) modulo M
    Period {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        modulus: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the cross-check battery
    Verify {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 10)]
        d_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Bfile,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Directory that relative `--output` paths are resolved against
    #[arg(long, env = "DURFEE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// First index emitted for sequences
    #[arg(long, default_value_t = 0)]
    offset: usize,
}

enum Failure {
    Usage(String),
    Verify(String),
    Io(io::Error),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verify(_) | Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Core(Error::StructureViolation { .. }) => 3,
            Failure::Core(Error::FitMismatch { .. }) => 4,
            Failure::Core(Error::Domain(_) | Error::TooLarge { .. }) => 2,
            Failure::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Verify(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl OutputArgs {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()?;
            }
            Some(path) => {
                let path = match &self.out_dir {
                    Some(dir) if path.is_relative() => dir.join(path),
                    _ => path.clone(),
                };
                fs::write(path, text)?;
            }
        }
        Ok(())
    }

    fn reject_bfile(&self, what: &str) -> Result<(), Failure> {
        if self.format == Format::Bfile {
            return Err(Failure::Usage(format!("bfile output is only available for sequences, not {what}")));
        }
        Ok(())
    }

    /// `values[i]` is the term at index `i`; terms before `offset` are dropped.
    fn emit_sequence(&self, values: &[BigInt]) -> Result<(), Failure> {
        let tail = values.get(self.offset..).unwrap_or(&[]);
        let text = match self.format {
            Format::Bfile => write_bfile(self.offset, tail),
            Format::Json => {
                let vals: Vec<String> = tail.iter().map(|v| v.to_string()).collect();
                json_line(&json!({ "offset": self.offset, "values": vals }))
            }
            Format::Text => {
                let vals: Vec<String> = tail.iter().map(|v| v.to_string()).collect();
                format!("{}\n", vals.join(" "))
            }
        };
        self.emit(&text)
    }
}

fn json_line(v: &Value) -> String {
    format!("{}\n", to_json(v))
}

fn to_json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("output types always serialise")
}

fn emit_poly_with_report(
    out: &OutputArgs,
    name: &str,
    poly: &IntPolynomial,
    report: Vec<(&str, Value)>,
) -> Result<(), Failure> {
    out.reject_bfile(name)?;
    let text = match out.format {
        Format::Json => {
            let report: serde_json::Map<String, Value> = report.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            format!("{{\"poly\":{},\"report\":{}}}\n", to_json(poly), to_json(&report))
        }
        _ => {
            let mut s = format!("{name} = {poly}\n");
            for (key, value) in report {
                let shown = match value {
                    Value::String(x) => x,
                    other => other.to_string(),
                };
                s.push_str(&format!("  {key}: {shown}\n"));
            }
            s
        }
    };
    out.emit(&text)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ad { d, order, out } => out.emit_sequence(ad_series_dp(d, order).coeffs()),
        Command::Alpha { d, out } => {
            let d = d as usize;
            let alpha = alpha_poly(d)?;
            let r = check_alpha_structure(d);
            let report = vec![
                ("degree", json!(alpha.degree())),
                ("leading_coeff", json!(alpha.leading_coeff().to_string())),
                ("value_at_1", json!(r.value_at_1.to_string())),
                ("value_at_minus1", json!(r.value_at_minus1.to_string())),
                ("coprime_to_pochhammer", json!(r.reduced())),
                ("minus1_pattern_conjectural", json!(r.minus1_matches_conjecture)),
            ];
            emit_poly_with_report(&out, &format!("alpha_{d}"), &alpha, report)
        }
        Command::Phi { k, out } => {
            let k = k as usize;
            let phi = phi_poly(k)?;
            let at_minus1 = phi.eval_i64(-1);
            let conj = if k % 2 == 1 {
                at_minus1.is_zero()
            } else {
                at_minus1 == BigInt::from(-2).pow(k as u32 / 2)
            };
            let report = vec![
                ("degree", json!(phi.degree())),
                ("leading_coeff", json!(phi.leading_coeff().to_string())),
                ("value_at_1", json!(phi.eval_i64(1).to_string())),
                ("value_at_minus1", json!(at_minus1.to_string())),
                ("constant_term_is_1", json!(phi.constant_term().is_one())),
                ("minus1_pattern_conjectural", json!(conj)),
            ];
            emit_poly_with_report(&out, &format!("phi_{k}"), &phi, report)
        }
        Command::Rk { k, n_max, out } => out.emit_sequence(&rk_sequence(k as usize, n_max)?),
        Command::Quasipoly { k, out } => {
            out.reject_bfile("quasi-polynomials")?;
            let qp = rk_quasipolynomial(k as usize)?;
            let text = match out.format {
                Format::Json => format!("{}\n", to_json(&qp)),
                _ => {
                    let mut s = format!("R_{k}(n), n >= {}, period {}\n", qp.valid_from, qp.period);
                    for (nu, poly) in qp.polys.iter().enumerate() {
                        s.push_str(&format!("  n = {}m + {nu}: {}\n", qp.period, format_poly_in_m(poly)));
                    }
                    s
                }
            };
            out.emit(&text)
        }
        Command::Period { k, modulus, out } => {
            out.reject_bfile("periods")?;
            let r = rk_eventual_period_mod(k as usize, modulus)?;
            let text = match out.format {
                Format::Json => format!("{}\n", to_json(&r)),
                _ => format!(
                    "{}\n  R_{k} mod {modulus}, confirmed on n in [{}, {})\n",
                    r.period, r.window_start, r.window_end
                ),
            };
            out.emit(&text)
        }
        Command::Verify { k_max, d_max, out } => {
            out.reject_bfile("verification reports")?;
            if k_max == 0 || d_max == 0 {
                return Err(Failure::Usage("--k-max and --d-max must be positive".into()));
            }
            let report = verify::run(k_max, d_max);
            let text = match out.format {
                Format::Json => json_line(&report.to_json()),
                _ => report.to_text(),
            };
            out.emit(&text)?;
            if report.all_hard_pass() {
                Ok(())
            } else {
                Err(Failure::Verify("one or more hard checks failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("durfee: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
