//! Job dispatch and report rendering behind the `quasihilb` binary.
//!
//! JSON is the canonical format (`"schema": "quasihilb/1"`). Every rational is
//! written as an exact `"p/q"` string; floats appear only for numeric root data
//! and deviations.

pub mod fuzz;
pub mod parse;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::exactalg::{Rat, RatPoly};
use crate::genfun::{interpolate_constituents, series_prefix, split_numerator, GenFun};
use crate::quasipoly::{constituents_closed_form, factor_constituent};
use crate::rootcert::{generate_unit_circle_family, verify_theorem_suite, AlphaSpec, SuiteReport};
use crate::serial;

pub use fuzz::{fuzz_campaign, FuzzBounds, FuzzSummary};
pub use parse::{parse_numerator, serialize_numerator};

pub const SCHEMA: &str = "quasihilb/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Expand,
    Constituents,
    Factor,
    Certify,
    Fuzz,
    Generate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// One CLI invocation. The numerator stays as raw text so that parse errors
/// land in the report like any other failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobSpec {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_terms: Option<usize>,
    #[serde(serialize_with = "serial::float")]
    pub tol: f64,
    pub format: Format,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<FuzzBounds>,
    /// Class index for `generate`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alphas: Vec<AlphaSpec>,
    /// Leading scalar `c` for `generate`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            numerator: None,
            k: None,
            d: None,
            n_terms: None,
            tol: crate::rootcert::DEFAULT_TOL,
            format: Format::Json,
            seed: 0,
            trials: None,
            bounds: None,
            class: None,
            alphas: Vec::new(),
            scale: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorEntry {
    pub class: usize,
    pub empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cofactor: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trivial_roots: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outcome {
    Expand {
        #[serde(serialize_with = "serial::rats")]
        values: Vec<Rat>,
    },
    Constituents {
        k: usize,
        #[serde(serialize_with = "serial::polys")]
        constituents: Vec<RatPoly>,
        oracle_agrees: bool,
    },
    Factor {
        classes: Vec<FactorEntry>,
    },
    Certify(SuiteReport),
    Fuzz(FuzzSummary),
    Generate {
        numerator: String,
        k: usize,
        d: usize,
        class: usize,
        q: usize,
        certify_command: String,
    },
    Error {
        error: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub job: JobSpec,
    pub result: Outcome,
    pub verdict: Verdict,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::TheoremViolation(_) => EXIT_VIOLATION,
        Error::RootFindingDiverged { .. } => EXIT_NUMERIC,
        _ => EXIT_USAGE,
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Usage(format!("missing required flag {flag}")))
}

fn job_genfun(job: &JobSpec) -> Result<GenFun, Error> {
    let text = job
        .numerator
        .as_deref()
        .ok_or_else(|| Error::Usage("missing required flag -U/--numerator".into()))?;
    let u = parse_numerator(text)?;
    GenFun::new(u, require(job.k, "-k")?, require(job.d, "-d")?)
}

fn dispatch(job: &JobSpec) -> Result<(Outcome, Option<String>), Error> {
    if job.format == Format::Csv && job.command != Command::Expand {
        return Err(Error::Usage(
            "csv output is only available for expand".into(),
        ));
    }
    if !(job.tol > 0.0 && job.tol.is_finite()) {
        return Err(Error::Usage(format!(
            "--tol must be positive, got {}",
            job.tol
        )));
    }
    match job.command {
        Command::Expand => {
            let f = job_genfun(job)?;
            let n = require(job.n_terms, "-N")?;
            if n == 0 {
                return Err(Error::Usage("-N must be at least 1".into()));
            }
            Ok((
                Outcome::Expand {
                    values: series_prefix(&f, n).values,
                },
                None,
            ))
        }
        Command::Constituents => {
            let f = job_genfun(job)?;
            let q = constituents_closed_form(&f);
            let oracle = interpolate_constituents(&series_prefix(&f, f.k() * f.d()), f.k(), f.d())?;
            let agrees = q == oracle;
            let msg = (!agrees).then(|| "closed form disagrees with the series oracle".to_string());
            Ok((
                Outcome::Constituents {
                    k: q.k(),
                    constituents: q.constituents().to_vec(),
                    oracle_agrees: agrees,
                },
                msg,
            ))
        }
        Command::Factor => {
            let f = job_genfun(job)?;
            let split = split_numerator(&f);
            let mut classes = Vec::new();
            for (i, part) in split.parts.iter().enumerate() {
                if part.is_empty() {
                    classes.push(FactorEntry {
                        class: i,
                        empty: true,
                        q: None,
                        scale: None,
                        trivial: None,
                        cofactor: None,
                        trivial_roots: Vec::new(),
                    });
                    continue;
                }
                let fc = factor_constituent(&f, i)?;
                classes.push(FactorEntry {
                    class: i,
                    empty: false,
                    q: Some(fc.q),
                    scale: Some(serial::rat_string(&fc.scale)),
                    trivial: Some(serial::poly_strings(&fc.trivial)),
                    cofactor: Some(serial::poly_strings(&fc.cofactor)),
                    trivial_roots: fc.trivial_roots(),
                });
            }
            Ok((Outcome::Factor { classes }, None))
        }
        Command::Certify => {
            let f = job_genfun(job)?;
            let suite = verify_theorem_suite(&f, job.tol)?;
            let msg = (!suite.passed).then(|| suite.violations().join("; "));
            Ok((Outcome::Certify(suite), msg))
        }
        Command::Fuzz => {
            let trials = require(job.trials, "--trials")?;
            let bounds = job.bounds.unwrap_or_default();
            let forced = match job.numerator {
                Some(_) => Some(job_genfun(job)?),
                None => None,
            };
            let summary = fuzz_campaign(job.seed, trials, &bounds, forced.as_ref())?;
            let msg = (summary.failed > 0).then(|| format!("{} trial(s) failed", summary.failed));
            Ok((Outcome::Fuzz(summary), msg))
        }
        Command::Generate => {
            let k = require(job.k, "-k")?;
            let d = require(job.d, "-d")?;
            let i = job.class.unwrap_or(0);
            let c = match &job.scale {
                Some(s) => parse_scalar(s)?,
                None => Rat::from_integer(1.into()),
            };
            let f = generate_unit_circle_family(k, d, i, &job.alphas, &c)?;
            let numerator = serialize_numerator(f.numerator());
            let q = split_numerator(&f)
                .part(i)
                .q
                .expect("generated class is nonempty");
            let certify_command = format!("quasihilb certify -U \"{numerator}\" -k {k} -d {d}");
            Ok((
                Outcome::Generate {
                    numerator,
                    k,
                    d,
                    class: i,
                    q,
                    certify_command,
                },
                None,
            ))
        }
    }
}

fn parse_scalar(s: &str) -> Result<Rat, Error> {
    let p = parse_numerator(s)?;
    match p.degree() {
        Some(0) => Ok(p.coeff(0)),
        _ => Err(Error::Usage(format!(
            "--scale must be a single rational, got {s:?}"
        ))),
    }
}

/// Executes a job. The exit code is carried in the report's verdict.
pub fn run(job: &JobSpec) -> Report {
    let (result, verdict) = match dispatch(job) {
        Ok((outcome, None)) => (
            outcome,
            Verdict {
                ok: true,
                exit_code: EXIT_OK,
                message: None,
            },
        ),
        Ok((outcome, Some(msg))) => (
            outcome,
            Verdict {
                ok: false,
                exit_code: EXIT_VIOLATION,
                message: Some(msg),
            },
        ),
        Err(e) => (
            Outcome::Error {
                error: e.to_string(),
            },
            Verdict {
                ok: false,
                exit_code: exit_code_for(&e),
                message: Some(e.to_string()),
            },
        ),
    };
    Report {
        schema: SCHEMA,
        job: job.clone(),
        result,
        verdict,
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
        Format::Text => render_text(report),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Outcome::Expand { values } => {
            out.push_str("n,H\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        other => {
            let _ = writeln!(
                out,
                "error,{:?}",
                report
                    .verdict
                    .message
                    .clone()
                    .unwrap_or_else(|| format!("{other:?}"))
            );
        }
    }
    out
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Outcome::Expand { values } => {
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "H({n}) = {v}");
            }
        }
        Outcome::Constituents {
            constituents,
            oracle_agrees,
            ..
        } => {
            for (i, h) in constituents.iter().enumerate() {
                let _ = writeln!(out, "H_{i}(n) = {h}");
            }
            let _ = writeln!(out, "series oracle agrees: {oracle_agrees}");
        }
        Outcome::Factor { classes } => {
            for c in classes {
                if c.empty {
                    let _ = writeln!(out, "class {}: U_{} = 0", c.class, c.class);
                    continue;
                }
                let _ = writeln!(
                    out,
                    "class {}: q = {}, scale = {}, trivial = {:?}, cofactor = {:?}, forced roots {:?}",
                    c.class,
                    c.q.unwrap_or_default(),
                    c.scale.as_deref().unwrap_or(""),
                    c.trivial.as_deref().unwrap_or_default(),
                    c.cofactor.as_deref().unwrap_or_default(),
                    c.trivial_roots
                );
            }
        }
        Outcome::Certify(suite) => {
            for c in &suite.classes {
                if c.empty {
                    let _ = writeln!(out, "class {}: empty", c.class);
                    continue;
                }
                let line = c
                    .certificate
                    .as_ref()
                    .map(|cert| {
                        format!(
                            "abscissa {}, forced roots {:?}, line {:?}",
                            cert.critical_abscissa, cert.trivial_roots_verified, cert.line_status
                        )
                    })
                    .unwrap_or_default();
                let hyp = c.unit_circle.as_ref().is_some_and(|u| u.hypothesis_holds);
                let _ = writeln!(
                    out,
                    "class {}: unit-circle hypothesis {hyp}; {line}",
                    c.class
                );
            }
            let _ = writeln!(out, "global: {:?}", suite.global.status);
        }
        Outcome::Fuzz(s) => {
            let _ = writeln!(
                out,
                "seed {}: {} trials, {} passed, {} failed, {} with global check",
                s.seed, s.trials, s.passed, s.failed, s.global_checked
            );
            for f in &s.failures {
                let _ = writeln!(
                    out,
                    "  trial {}: -U \"{}\" -k {} -d {}: {}",
                    f.trial,
                    f.numerator,
                    f.k,
                    f.d,
                    f.failure.as_deref().unwrap_or("")
                );
            }
        }
        Outcome::Generate {
            certify_command, ..
        } => {
            let _ = writeln!(out, "{certify_command}");
        }
        Outcome::Error { error } => {
            let _ = writeln!(out, "error: {error}");
        }
    }
    let _ = writeln!(
        out,
        "verdict: {} (exit {})",
        if report.verdict.ok { "ok" } else { "FAILED" },
        report.verdict.exit_code
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(cmd: Command, u: &str, k: usize, d: usize) -> JobSpec {
        let mut j = JobSpec::new(cmd);
        j.numerator = Some(u.into());
        j.k = Some(k);
        j.d = Some(d);
        j
    }

    #[test]
    fn expand_example() {
        let mut j = job(Command::Expand, "1", 2, 2);
        j.n_terms = Some(6);
        let r = run(&j);
        assert_eq!(r.exit_code(), 0);
        let v: serde_json::Value = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(v["schema"], "quasihilb/1");
        assert_eq!(
            v["result"]["values"],
            serde_json::json!(["1", "0", "2", "0", "3", "0"])
        );
    }

    #[test]
    fn constituents_example() {
        let r = run(&job(Command::Constituents, "1,1", 2, 2));
        let v: serde_json::Value = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(
            v["result"]["constituents"],
            serde_json::json!([["1", "1/2"], ["1/2", "1/2"]])
        );
        assert_eq!(v["result"]["oracle_agrees"], true);
    }

    #[test]
    fn certify_example() {
        let r = run(&job(Command::Certify, "1,0,1", 2, 3));
        assert_eq!(r.exit_code(), 0);
        let v: serde_json::Value = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        let c0 = &v["result"]["classes"][0]["certificate"];
        assert_eq!(c0["line_status"]["status"], "ExactCertified");
        assert_eq!(c0["critical_abscissa"], "-2");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run(&job(Command::Expand, "1", 2, 2)).exit_code(),
            EXIT_USAGE
        );
        assert_eq!(
            run(&job(Command::Factor, "0,0", 2, 2)).exit_code(),
            EXIT_USAGE
        );
        assert_eq!(
            run(&job(Command::Factor, "1,1,1", 1, 2)).exit_code(),
            EXIT_USAGE
        );
        let mut j = JobSpec::new(Command::Fuzz);
        j.trials = Some(0);
        assert_eq!(run(&j).exit_code(), EXIT_USAGE);
        let mut j = job(Command::Factor, "1", 1, 1);
        j.format = Format::Csv;
        assert_eq!(run(&j).exit_code(), EXIT_USAGE);
    }

    #[test]
    fn generate_reports_reproducible_spec() {
        let mut j = JobSpec::new(Command::Generate);
        j.k = Some(2);
        j.d = Some(4);
        j.class = Some(1);
        j.alphas = vec![AlphaSpec::new(1, 2), AlphaSpec::new(1, 4)];
        let r = run(&j);
        match &r.result {
            Outcome::Generate { numerator, q, .. } => {
                assert_eq!(numerator, "0,1,0,1,0,1,0,1");
                assert_eq!(*q, 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn csv_expand() {
        let mut j = job(Command::Expand, "1,1", 1, 2);
        j.n_terms = Some(3);
        j.format = Format::Csv;
        assert_eq!(render(&run(&j), Format::Csv), "n,H\n0,1\n1,3\n2,5\n");
    }
}
