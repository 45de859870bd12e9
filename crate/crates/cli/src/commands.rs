use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use supertrop::determinant::{adjoint, det_expand, AUTO_BRUTE_MAX};
use supertrop::digraph::{digraph_of, max_multicycle_weight};
use supertrop::inverse::{is_pseudo_unit, pseudo_inverse};
use supertrop::linsys::{find_pure_real_solution, LinearSystem, PureRealOutcome, SolutionReport};
use supertrop::rank::{dependence_witness, is_dependent, max_nonsingular_minor, square_witness};
use supertrop::{det, DependenceWitness, DetMethod, TropError, TropMatrix, TropScalar};

use crate::bench::{render_table, run_bench};
use crate::check::run_check;
use crate::document::{parse_matrix, render_plain, structured, MatrixDocument};
use crate::report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "supertrop", version, about = "Exact supertropical matrix algebra")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Determinant algorithm.
    #[arg(long, global = true, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for the `check` and `bench` corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest matrix size to accept or generate.
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Expand,
    Fast,
    Auto,
}

impl From<Method> for DetMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Brute => DetMethod::Brute,
            Method::Expand => DetMethod::Expand,
            Method::Fast => DetMethod::Fast,
            Method::Auto => DetMethod::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Args, Debug)]
struct Input {
    /// Matrix file in `.trop` or structured JSON form; `-` reads stdin.
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant.
    Det(Input),
    /// Adjoint matrix.
    Adjoint(Input),
    /// Canonical pseudo inverse.
    Pinv(Input),
    /// Tropical rank and a maximal nonsingular minor.
    Rank(Input),
    /// Location and determinant of a maximal nonsingular minor.
    MinorMax(Input),
    /// Whether the rows are tropically dependent.
    Depend(Input),
    /// Dependence witness for the rows of a singular square matrix.
    Witness(Input),
    /// Pure-real solution of the homogeneous system with this coefficient matrix.
    Solve(Input),
    /// Edge list of the weighted digraph.
    Digraph {
        #[command(flatten)]
        input: Input,
        /// Keep only the `0` and `0^ν` edges.
        #[arg(long)]
        zero: bool,
        /// Also report the largest k-multicycle weight.
        #[arg(long)]
        multicycle: Option<usize>,
    },
    /// Cross-validation over a seeded random corpus.
    Check {
        /// Matrices per size.
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Brute versus fast determinant timings.
    Bench {
        /// Repetitions per size.
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Det(_) => "det",
            Command::Adjoint(_) => "adjoint",
            Command::Pinv(_) => "pinv",
            Command::Rank(_) => "rank",
            Command::MinorMax(_) => "minor-max",
            Command::Depend(_) => "depend",
            Command::Witness(_) => "witness",
            Command::Solve(_) => "solve",
            Command::Digraph { .. } => "digraph",
            Command::Check { .. } => "check",
            Command::Bench { .. } => "bench",
        }
    }
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    Parse = 2,
    Domain = 3,
    Validation = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// The outcome of one invocation: what to print and how to exit.
#[derive(Clone, Debug)]
pub struct Execution {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

struct Failure {
    status: ExitStatus,
    message: String,
}

impl From<TropError> for Failure {
    fn from(e: TropError) -> Self {
        let status = match e {
            TropError::Validation(_) => ExitStatus::Validation,
            TropError::ParseScalar { .. } => ExitStatus::Parse,
            _ => ExitStatus::Domain,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

/// Output of a command before it is wrapped in a report.
struct Output {
    plain: String,
    result: Value,
    validation: BTreeMap<String, bool>,
}

impl Output {
    fn new(plain: String, result: Value) -> Self {
        Output {
            plain,
            result,
            validation: BTreeMap::new(),
        }
    }

    fn check(mut self, name: &str, ok: bool) -> Self {
        self.validation.insert(name.to_string(), ok);
        self
    }
}

fn read_input(input: &Input, max_n: Option<usize>) -> Result<MatrixDocument, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map(|_| buf)
    } else {
        std::fs::read_to_string(&input.file)
    }
    .map_err(|e| Failure {
        status: ExitStatus::Parse,
        message: format!("cannot read {}: {e}", input.file.display()),
    })?;
    let doc = parse_matrix(&text).map_err(|e| Failure {
        status: ExitStatus::Parse,
        message: format!("{}: {e}", input.file.display()),
    })?;
    if let Some(limit) = max_n {
        let (m, n) = doc.shape();
        if m.max(n) > limit {
            return Err(TropError::SizeGuard {
                op: "--max-n",
                size: m.max(n),
                limit,
            }
            .into());
        }
    }
    Ok(doc)
}

fn scalar(x: &TropScalar) -> Value {
    Value::String(x.to_string())
}

fn witness_output(w: &DependenceWitness, a: &TropMatrix) -> (String, Value, bool) {
    let ok = w.validate(&a.row_vectors());
    let sums = w.combination(&a.row_vectors()).expect("shape");
    let value = json!({
        "coefficients": w.coefficients.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "route": w.route.to_string(),
        "combination": sums.entries().iter().map(scalar).collect::<Vec<_>>(),
    });
    (w.to_string(), value, ok)
}

fn solution_value(r: &SolutionReport) -> Value {
    json!({
        "point": r.point.entries().iter().map(scalar).collect::<Vec<_>>(),
        "kind": r.kind.to_string(),
        "values": r.values.iter().map(scalar).collect::<Vec<_>>(),
        "solves": r.solves,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn execute(command: &Command, common: &Common) -> Result<(Option<String>, Output), Failure> {
    let method = DetMethod::from(common.method);
    let load = |input: &Input| read_input(input, common.max_n);
    let with_digest = |doc: &MatrixDocument, out: Output| Ok((Some(doc.digest()), out));
    match command {
        Command::Det(input) => {
            let doc = load(input)?;
            let a = &doc.matrix;
            let d = det(a, method)?;
            let mut out = Output::new(format!("{d}\n"), json!({ "determinant": scalar(&d) }));
            if a.rows() <= AUTO_BRUTE_MAX {
                let agree = det(a, DetMethod::Brute)? == d
                    && (a.rows() < 2 || (1..=a.rows()).all(|i| det_expand(a, i).is_ok_and(|e| e == d)));
                out = out.check("methods_agree", agree);
            }
            with_digest(&doc, out)
        }
        Command::Adjoint(input) => {
            let doc = load(input)?;
            let adj = adjoint(&doc.matrix)?;
            with_digest(&doc, Output::new(render_plain(&adj), json!({ "adjoint": structured(&adj) })))
        }
        Command::Pinv(input) => {
            let doc = load(input)?;
            let a = &doc.matrix;
            let inv = pseudo_inverse(a)?;
            let left = is_pseudo_unit(&a.mat_mul(&inv)?)?.verdict;
            let right = is_pseudo_unit(&inv.mat_mul(a)?)?.verdict;
            let plain = format!(
                "{}A*B pseudo unit: {left}\nB*A pseudo unit: {right}\n",
                render_plain(&inv)
            );
            let out = Output::new(plain, json!({ "pseudo_inverse": structured(&inv) }))
                .check("left_pseudo_unit", left)
                .check("right_pseudo_unit", right);
            with_digest(&doc, out)
        }
        Command::Rank(input) => {
            let doc = load(input)?;
            let loc = max_nonsingular_minor(&doc.matrix)?;
            let k = loc.as_ref().map_or(0, |l| l.size);
            let plain = match &loc {
                Some(l) => format!("{k}\nminor {l}\n"),
                None => format!("{k}\nminor none\n"),
            };
            let minor = loc.as_ref().map(|l| json!({ "rows": l.rows, "cols": l.cols, "size": l.size }));
            with_digest(&doc, Output::new(plain, json!({ "rank": k, "minor": minor })))
        }
        Command::MinorMax(input) => {
            let doc = load(input)?;
            let Some(loc) = max_nonsingular_minor(&doc.matrix)? else {
                return with_digest(&doc, Output::new("none\n".into(), json!({ "minor": null })));
            };
            let sub = loc.extract(&doc.matrix)?;
            let d = det(&sub, method)?;
            let plain = format!("{loc}\nsize {}\ndet {d}\n{}", loc.size, render_plain(&sub));
            let result = json!({
                "minor": { "rows": loc.rows, "cols": loc.cols, "size": loc.size },
                "determinant": scalar(&d),
                "submatrix": structured(&sub),
            });
            with_digest(&doc, Output::new(plain, result).check("minor_nonsingular", d.is_real()))
        }
        Command::Depend(input) => {
            let doc = load(input)?;
            let rows = doc.matrix.row_vectors();
            if !is_dependent(&rows)? {
                return with_digest(&doc, Output::new("false\n".into(), json!({ "dependent": false })));
            }
            let w = dependence_witness(&rows)?;
            let (text, mut value, ok) = witness_output(&w, &doc.matrix);
            value["dependent"] = Value::Bool(true);
            let plain = format!("true\ncoefficients {text}\nvalidation: {}\n", verdict(ok));
            with_digest(&doc, Output::new(plain, value).check("witness", ok))
        }
        Command::Witness(input) => {
            let doc = load(input)?;
            let w = square_witness(&doc.matrix)?;
            let (text, value, ok) = witness_output(&w, &doc.matrix);
            let plain = format!("{text}\nvalidation: {}\n", verdict(ok));
            with_digest(&doc, Output::new(plain, value).check("witness", ok))
        }
        Command::Solve(input) => {
            let doc = load(input)?;
            let outcome = find_pure_real_solution(&LinearSystem::new(doc.matrix.clone()))?;
            let out = match &outcome {
                PureRealOutcome::Found(r) => Output::new(
                    format!("{r}\n"),
                    json!({ "pure_real": true, "solution": solution_value(r) }),
                )
                .check("solution", r.solves),
                PureRealOutcome::Nonsingular => Output::new(
                    "no pure-real solution: coefficient matrix is nonsingular\n".into(),
                    json!({ "pure_real": false, "reason": "nonsingular" }),
                ),
                PureRealOutcome::Unattainable { fallback, reason } => Output::new(
                    format!("no pure-real solution: {reason}\nfallback\n{fallback}\n"),
                    json!({ "pure_real": false, "reason": reason, "fallback": solution_value(fallback) }),
                )
                .check("fallback_solution", fallback.solves),
            };
            with_digest(&doc, out)
        }
        Command::Digraph {
            input,
            zero,
            multicycle,
        } => {
            let doc = load(input)?;
            let mut g = digraph_of(&doc.matrix)?;
            if *zero {
                g = g.reduced_zero_graph();
            }
            let mut plain = g.to_edge_list();
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .map(|e| {
                    json!({
                        "source": e.source,
                        "target": e.target,
                        "weight": scalar(&e.weight),
                        "multiplicity": e.multiplicity,
                    })
                })
                .collect();
            let mut result = json!({ "vertices": g.vertex_count(), "edges": edges });
            if let Some(k) = multicycle {
                let w = max_multicycle_weight(&doc.matrix, *k)?;
                plain.push_str(&format!("multicycle {k} weight {w}\n"));
                result["multicycle"] = json!({ "k": k, "weight": scalar(&w) });
            }
            with_digest(&doc, Output::new(plain, result))
        }
        Command::Check { count } => {
            let summary = run_check(common.seed, common.max_n.unwrap_or(5), *count);
            let mut plain = format!("seed {} matrices {}\n", summary.seed, summary.matrices);
            let mut out_props = Vec::new();
            let mut validation = BTreeMap::new();
            for p in &summary.properties {
                plain.push_str(&format!("{}: {} passed, {} failed\n", p.name, p.passed, p.failed));
                out_props.push(json!({ "name": p.name, "passed": p.passed, "failed": p.failed }));
                validation.insert(p.name.to_string(), p.failed == 0);
            }
            let result = json!({ "seed": summary.seed, "matrices": summary.matrices, "properties": out_props });
            Ok((None, Output { plain, result, validation }))
        }
        Command::Bench { reps } => {
            let rows = run_bench(common.seed, common.max_n.unwrap_or(8), *reps);
            let result: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "brute_ms": r.brute.map(|d| d.as_secs_f64() * 1e3),
                        "fast_ms": r.fast.as_secs_f64() * 1e3,
                    })
                })
                .collect();
            Ok((None, Output::new(render_table(&rows), json!({ "rows": result }))))
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution {
                    status: ExitStatus::Usage,
                    stdout: String::new(),
                    stderr: text,
                    report: None,
                }
            } else {
                Execution {
                    status: ExitStatus::Success,
                    stdout: text,
                    stderr: String::new(),
                    report: None,
                }
            };
        }
    };

    let start = Instant::now();
    let (digest, out) = match execute(&cli.command, &cli.common) {
        Ok(done) => done,
        Err(f) => {
            return Execution {
                status: f.status,
                stdout: String::new(),
                stderr: format!("error: {}\n", f.message),
                report: None,
            }
        }
    };
    let report = RunReport {
        command: cli.command.name().to_string(),
        input_digest: digest,
        result: out.result,
        validation: out.validation,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let (status, stderr) = if report.validated() {
        (ExitStatus::Success, String::new())
    } else {
        let failed: Vec<&str> = report
            .validation
            .iter()
            .filter(|(_, ok)| !**ok)
            .map(|(name, _)| name.as_str())
            .collect();
        (ExitStatus::Validation, format!("validation failed: {}\n", failed.join(", ")))
    };
    let stdout = match cli.common.format {
        Format::Plain => out.plain,
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("serializable");
            text.push('\n');
            text
        }
    };
    Execution {
        status,
        stdout,
        stderr,
        report: Some(report),
    }
}
