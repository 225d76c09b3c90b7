//! Command-line front end.
//!
//! [`run`] renders everything into an [`Outcome`] so the binary stays a thin
//! wrapper and the commands can be tested in-process.

pub mod parse;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::analysis::{report, search_codes, Predicate, ReportRecord};
use crate::code::{
    cardinality, code_type, enumerate_codewords, gray_map, spanning_set, Caps, CyclicCodeSpec,
    DEFAULT_AMBIENT_CAP, DEFAULT_ENUMERATION_CAP,
};
use crate::dual::dual_generators;
use crate::{Error, Result};

pub use parse::{parse_binpoly, parse_coeffs, parse_quatpoly, parse_spec, SpecFields};
pub use verify::{verify, Check};

pub const DEFAULT_SEED: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Construct, dualize and verify Z2Z4-additive cyclic codes.
#[derive(Debug, Clone, Parser)]
#[command(name = "z2z4", version)]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,
    /// Spec file with alpha=, beta=, b=, ell=, f=, h= lines.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    #[arg(long, global = true)]
    pub alpha: Option<usize>,
    #[arg(long, global = true)]
    pub beta: Option<usize>,
    #[arg(long, global = true)]
    pub b: Option<String>,
    #[arg(long, global = true)]
    pub ell: Option<String>,
    #[arg(long, global = true)]
    pub f: Option<String>,
    #[arg(long, global = true)]
    pub h: Option<String>,
    /// Product fh, accepted in place of h.
    #[arg(long, global = true)]
    pub fh: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest code that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    /// Largest ambient space that may be scanned.
    #[arg(long, global = true, default_value_t = DEFAULT_AMBIENT_CAP)]
    pub ambient_cap: u64,
    /// Seed for the randomized checks of `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Type, size, distance and structural flags.
    Info,
    /// Generator tuple of the dual code.
    Dual,
    /// Spanning-set rows.
    Matrix,
    /// All codewords.
    Enumerate,
    /// Gray images of all codewords.
    Gray,
    /// Check closed forms against brute force.
    Verify,
    /// Scan all codes of small length.
    Search {
        #[arg(long)]
        alpha_max: usize,
        /// Comma-separated odd lengths of the quaternary part.
        #[arg(long, value_delimiter = ',', required = true)]
        beta_set: Vec<usize>,
        /// self-dual, mdss or separable.
        #[arg(long)]
        predicate: Predicate,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Command {
    pub fn caps(&self) -> Caps {
        Caps {
            enumeration: self.cap,
            ambient: self.ambient_cap,
        }
    }

    /// The spec from `--spec`, with inline flags taking precedence.
    pub fn load_spec(&self) -> Result<CyclicCodeSpec> {
        let mut fields = match &self.spec {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                SpecFields::from_text(&text)?
            }
            None => SpecFields::default(),
        };
        fields.alpha = self.alpha.or(fields.alpha);
        fields.beta = self.beta.or(fields.beta);
        for (dst, src) in [
            (&mut fields.b, &self.b),
            (&mut fields.ell, &self.ell),
            (&mut fields.f, &self.f),
            (&mut fields.h, &self.h),
            (&mut fields.fh, &self.fh),
        ] {
            if src.is_some() {
                *dst = src.clone();
            }
        }
        fields.build()
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match render(cmd) {
        Ok((status, stdout)) => Outcome {
            status,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn render(cmd: &Command) -> Result<(i32, String)> {
    let caps = cmd.caps();
    if let Verb::Search {
        alpha_max,
        beta_set,
        predicate,
    } = &cmd.verb
    {
        let hits = search_codes(*alpha_max, beta_set, *predicate, &caps)?;
        let records: Vec<ReportRecord> = hits
            .into_iter()
            .map(|h| ReportRecord::new(&h.spec, h.report))
            .collect();
        if cmd.json {
            return Ok((EXIT_OK, to_text(&json!(records))));
        }
        let mut out = String::new();
        for r in &records {
            out.push_str(&r.to_lines());
            out.push('\n');
        }
        let _ = writeln!(out, "{} {predicate} codes", records.len());
        return Ok((EXIT_OK, out));
    }

    let spec = cmd.load_spec()?;
    let mut out = String::new();
    match &cmd.verb {
        Verb::Info => {
            let size = cardinality(&spec);
            let rec = ReportRecord::new(&spec, report(&spec, &caps)?);
            if cmd.json {
                let mut v = rec.to_json();
                v["size"] = json!(size.to_string());
                v["size_log2"] = json!(size.log2());
                out = to_text(&v);
            } else {
                let _ = writeln!(out, "type {}", rec.report.code_type);
                let _ = writeln!(out, "|C|={size} (2^{})", size.log2());
                out.push_str(&rec.to_lines());
            }
        }
        Verb::Dual => {
            let d = dual_generators(&spec)?;
            let t = code_type(&d.spec);
            let mu =
                d.mu.as_ref()
                    .map(|m| (m.rho.to_string(), m.mu1.to_string(), m.mu2.to_string()));
            if cmd.json {
                out = to_text(&json!({
                    "b_bar": d.b_bar().to_string(),
                    "ell_bar": d.ell_bar().to_string(),
                    "f_bar": d.f_bar().to_string(),
                    "h_bar": d.h_bar().to_string(),
                    "g_bar": d.g_bar().to_string(),
                    "type": t,
                    "mu": mu.map(|(rho, mu1, mu2)| json!({"rho": rho, "mu1": mu1, "mu2": mu2})),
                }));
            } else {
                let _ = writeln!(out, "b_bar={}", d.b_bar());
                let _ = writeln!(out, "ell_bar={}", d.ell_bar());
                let _ = writeln!(out, "f_bar={}", d.f_bar());
                let _ = writeln!(out, "h_bar={}", d.h_bar());
                let _ = writeln!(out, "g_bar={}", d.g_bar());
                if let Some((rho, mu1, mu2)) = mu {
                    let _ = writeln!(out, "rho={rho} mu1={mu1} mu2={mu2}");
                }
                let _ = writeln!(out, "type {t}");
            }
        }
        Verb::Matrix => {
            let rows = spanning_set(&spec);
            if cmd.json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|r| json!({"block": r.block.to_string(), "shift": r.shift, "word": r.word.to_string()}))
                    .collect();
                out = to_text(&json!(v));
            } else {
                for r in &rows {
                    let _ = writeln!(out, "{}[{}]  {}", r.block, r.shift, r.word);
                }
            }
        }
        Verb::Enumerate | Verb::Gray => {
            let gray = matches!(cmd.verb, Verb::Gray);
            let set = enumerate_codewords(&spec, &caps)?;
            let image = |w: &crate::code::Codeword| -> String {
                gray_map(w).iter().map(|b| char::from(b'0' + b)).collect()
            };
            if cmd.json {
                let words: Vec<_> = set
                    .iter()
                    .map(|w| {
                        if gray {
                            json!({"codeword": w.to_string(), "gray": image(w)})
                        } else {
                            json!(w.to_string())
                        }
                    })
                    .collect();
                out = to_text(&json!({"count": set.len(), "codewords": words}));
            } else {
                for w in &set {
                    if gray {
                        let _ = writeln!(out, "{w}  ->  {}", image(w));
                    } else {
                        let _ = writeln!(out, "{w}");
                    }
                }
                let _ = writeln!(out, "{} codewords", set.len());
            }
        }
        Verb::Verify => {
            let checks = verify(&spec, &caps, cmd.seed)?;
            let passed = checks.iter().all(|c| c.passed);
            if cmd.json {
                out = to_text(&json!({"passed": passed, "checks": checks}));
            } else {
                for c in &checks {
                    let _ = writeln!(
                        out,
                        "{} {}",
                        if c.passed { "ok  " } else { "FAIL" },
                        c.detail
                    );
                }
                let failed = checks.iter().filter(|c| !c.passed).count();
                let _ = writeln!(out, "{} checks, {failed} failed", checks.len());
            }
            return Ok((if passed { EXIT_OK } else { EXIT_VERIFY_FAILED }, out));
        }
        Verb::Search { .. } => unreachable!("handled above"),
    }
    Ok((EXIT_OK, out))
}
