//! `skeinstrip`: run one strip computation or verification job and write a
//! JSON artifact.
//!
//! Exit status: 0 on success or a passing verification, 1 on a failing
//! verification, 2 on malformed input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use skeinstrip::partitions::Partition;
use skeinstrip::qdiff::{verify_annihilation, verify_log_reduce};
use skeinstrip::report::{CoefficientTable, Report};
use skeinstrip::scalars::{Monomial, Numeric, QMode, Symbolic};
use skeinstrip::skein::{verify_dilog_recurrence, xi, Direction};
use skeinstrip::vertex::{
    closed_form, glue_strip, mirror_and_quantum, verify_strip_closed_form, verify_two_leg_vertex,
    z_open, Branes, StripGeometry, Traversal, CALIBRATED,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    Vertex,
    Partition,
    ClosedForm,
    VerifyDilog,
    #[value(name = "verify-prop52")]
    #[serde(rename = "verify-prop52")]
    VerifyTwoLegVertex,
    #[value(name = "verify-thm53")]
    #[serde(rename = "verify-thm53")]
    VerifyStripClosedForm,
    VerifyQuantumCurve,
    MirrorCurve,
}

impl Command {
    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "skeinstrip",
    version,
    about = "Open partition functions of toric strips"
)]
struct Args {
    /// Job description in JSON.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    command: Option<Command>,
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Truncation order; overrides `truncation` in the job file.
    #[arg(long)]
    cap: Option<usize>,
    /// Work at this rational value of q (a rational square); overrides the job file.
    #[arg(long = "numeric-q", value_name = "P/Q")]
    numeric_q: Option<String>,
    /// Vertex type word such as `ABA`; overrides the job file.
    #[arg(long)]
    types: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
enum QModeName {
    #[default]
    Symbolic,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
enum BraneName {
    One,
    #[default]
    Two,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobSpec {
    types: Option<String>,
    truncation: Option<usize>,
    #[serde(default)]
    q_mode: QModeName,
    q_value: Option<String>,
    #[serde(default)]
    branes: BraneName,
    command: Option<Command>,
    out: Option<PathBuf>,
}

const DEFAULT_CAP: usize = 4;

/// Input problems; always exit status 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Job {
    command: Command,
    types: Option<String>,
    cap: usize,
    numeric: Option<Numeric>,
    branes: Branes,
    out: Option<PathBuf>,
}

impl Job {
    fn from_args(args: Args) -> Result<Self, InputError> {
        let mut spec = match &args.spec {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                serde_json::from_str::<JobSpec>(&text)
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?
            }
            None => JobSpec::default(),
        };
        if args.numeric_q.is_some() {
            spec.q_mode = QModeName::Numeric;
            spec.q_value = args.numeric_q;
        }
        let command = args
            .command
            .or(spec.command)
            .ok_or_else(|| InputError("no command given".into()))?;
        let numeric = match spec.q_mode {
            QModeName::Symbolic => None,
            QModeName::Numeric => {
                let raw = spec
                    .q_value
                    .ok_or_else(|| InputError("numeric q_mode needs a q_value".into()))?;
                let q = BigRational::from_str(raw.trim())
                    .map_err(|e| InputError(format!("q_value {raw:?}: {e}")))?;
                Some(Numeric::with_q(&q)?)
            }
        };
        Ok(Job {
            command,
            types: args.types.or(spec.types),
            cap: args.cap.or(spec.truncation).unwrap_or(DEFAULT_CAP),
            numeric,
            branes: match spec.branes {
                BraneName::One => Branes::One,
                BraneName::Two => Branes::Two,
            },
            out: args.out.or(spec.out),
        })
    }

    fn strip(&self) -> Result<StripGeometry, InputError> {
        let word = self
            .types
            .as_deref()
            .ok_or_else(|| InputError("this command needs a types word".into()))?;
        Ok(StripGeometry::parse(word)?)
    }

    fn mode_label(&self) -> String {
        match &self.numeric {
            Some(n) => n.label(),
            None => Symbolic.label(),
        }
    }
}

/// JSON artifact and whether it counts as a pass.
struct Outcome {
    body: Value,
    pass: bool,
}

fn computed(body: Value) -> Outcome {
    Outcome { body, pass: true }
}

fn verified(reports: Vec<Report>) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let body = serde_json::to_value(&reports).expect("reports serialize");
    Outcome {
        body: json!({"pass": pass, "reports": body}),
        pass,
    }
}

fn vertex_tables<M: QMode>(
    strip: &StripGeometry,
    cap: usize,
    mode: &M,
) -> Result<Value, InputError> {
    let mut vertices = Vec::new();
    for (k, t) in strip.types().iter().enumerate() {
        let mut rows = Vec::new();
        for left in Partition::enumerate(cap) {
            for right in Partition::enumerate(cap - left.size()) {
                let v = mode.lift(&CALIBRATED.vertex_value(strip, k, &left, &right))?;
                rows.push(json!([left, right, v.to_string()]));
            }
        }
        vertices.push(json!({"index": k + 1, "type": format!("{t:?}"), "rows": rows}));
    }
    Ok(Value::Array(vertices))
}

fn run_in<M: QMode>(job: &Job, mode: &M) -> Result<Outcome, InputError> {
    let cap = job.cap;
    Ok(match job.command {
        Command::Vertex => computed(json!({"vertices": vertex_tables(&job.strip()?, cap, mode)?})),
        Command::Partition => {
            let z = glue_strip(
                &job.strip()?,
                job.branes,
                cap,
                &CALIBRATED,
                Traversal::LeftToRight,
                mode,
            )?;
            let open = z_open(&z)?;
            computed(
                json!({"z": CoefficientTable::from_tensor(&z), "z_open": CoefficientTable::from_tensor(&open)}),
            )
        }
        Command::ClosedForm => computed(
            json!({"z_open": CoefficientTable::from_tensor(&closed_form(&job.strip()?, job.branes, cap, mode)?)}),
        ),
        Command::VerifyStripClosedForm => verified(vec![verify_strip_closed_form(
            &job.strip()?,
            job.branes,
            cap,
            mode,
        )?]),
        Command::VerifyQuantumCurve => {
            let strip = job.strip()?;
            verified(vec![
                verify_log_reduce(&strip, cap, mode)?,
                verify_annihilation(&strip, cap, mode)?,
            ])
        }
        Command::VerifyDilog => {
            let x = Monomial::var(&xi());
            verified(
                [Direction::Forward, Direction::Inverse]
                    .into_iter()
                    .map(|d| verify_dilog_recurrence(&x, cap, d, false))
                    .collect(),
            )
        }
        Command::VerifyTwoLegVertex => verified(vec![verify_two_leg_vertex(cap)]),
        Command::MirrorCurve => computed(mirror_and_quantum(&job.strip()?).to_json()),
    })
}

fn run(job: &Job) -> Result<Outcome, InputError> {
    let mut out = match &job.numeric {
        Some(n) => run_in(job, n)?,
        None => run_in(job, &Symbolic)?,
    };
    if let Value::Object(map) = &mut out.body {
        map.insert("command".into(), json!(job.command.name()));
        map.insert("cap".into(), json!(job.cap));
        map.insert("q_mode".into(), json!(job.mode_label()));
        if let Some(t) = &job.types {
            map.insert("types".into(), json!(t));
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let job = match Job::from_args(Args::parse()) {
        Ok(job) => job,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = match run(&job) {
        Ok(o) => o,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&outcome.body).expect("values serialize") + "\n";
    match &job.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
