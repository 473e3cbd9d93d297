//! Command-line surface and the exhaustive sweeps.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification or property
//! failure, 3 internal invariant breach (e.g. an exhausted square search).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::alexander::{braid_poly, burau_poly, tree_poly, SkeinOracle};
use crate::braid::{parse_letter_list, PositiveBraidWord};
use crate::error::Error;
use crate::laurent::{ConwayParity, HalfLaurent};
use crate::membership::{certify_braid, certify_tree, ito_summand_check, verify, PCertificate};
use crate::satellite::{krishna_check, obstruction, satellite_poly, SatellitePattern};
use crate::tree::PlaneTree;

pub const OUTPUT_SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "braidalex",
    version,
    about = "Alexander polynomials of positive braids and Hopf plumbings"
)]
pub struct Cli {
    /// Emit structured JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial and its leading data.
    Poly {
        #[command(subcommand)]
        input: PolyInput,
    },
    /// Build a membership certificate.
    Certify {
        #[command(subcommand)]
        input: CertifyInput,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Verify a certificate file (`-` for stdin).
    VerifyCert { path: String },
    /// Satellite polynomial and the sign obstruction.
    Satellite {
        #[arg(long, allow_hyphen_values = true)]
        winding: i64,
        /// Text form (`t - 1 + t^-1`) or JSON pairs.
        #[arg(long, allow_hyphen_values = true)]
        pattern_poly: String,
        /// Companion braid, e.g. `2: 1 1 1`.
        #[arg(long)]
        companion: String,
    },
    /// The (n,1)-cable of a positive braid knot.
    Cable {
        n: i64,
        #[arg(long)]
        companion: String,
    },
    /// Exhaustive desk-scale checks.
    Sweep(SweepArgs),
    /// -β against the number of prime summands of a connected sum.
    ItoCheck {
        /// Summand braid, e.g. `2: 1 1 1`; repeatable.
        #[arg(long)]
        summand: Vec<String>,
        /// Torus knot summand `p,q`; repeatable.
        #[arg(long)]
        torus: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(long, requires = "word")]
    pub strands: Option<usize>,
    /// Comma-separated generator indices.
    #[arg(long, requires = "strands", allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Whole word as `n: l1 l2 ...`.
    #[arg(long, conflicts_with_all = ["strands", "word"])]
    pub braid: Option<String>,
}

impl BraidArgs {
    fn resolve(&self) -> Result<PositiveBraidWord, Error> {
        match (&self.braid, self.strands, &self.word) {
            (Some(text), _, _) => text.parse(),
            (None, Some(n), Some(letters)) => {
                PositiveBraidWord::new(n, parse_letter_list(letters)?)
            }
            _ => Err(Error::InvalidArgument(
                "give either --braid or both --strands and --word".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Seifert,
    Skein,
    Burau,
}

#[derive(Debug, Subcommand)]
pub enum PolyInput {
    Braid {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, value_enum, default_value = "seifert")]
        method: Method,
    },
    Tree {
        #[arg(long)]
        tree: String,
    },
    Torus {
        p: usize,
        q: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyInput {
    Braid {
        #[command(flatten)]
        braid: BraidArgs,
    },
    Tree {
        #[arg(long)]
        tree: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Theorem1,
    Skein,
    Methods,
    Ito,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: SweepMode,
    #[arg(long, default_value_t = 4)]
    pub max_strands: usize,
    #[arg(long, default_value_t = 8)]
    pub max_len: usize,
    #[arg(long, default_value_t = 8)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Sort failures so output bytes do not depend on `--jobs`.
    #[arg(long)]
    pub sorted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub max_strands: usize,
    pub max_len: usize,
    pub max_vertices: usize,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(mode: SweepMode, max_strands: usize, max_len: usize, max_vertices: usize) -> Self {
        Self {
            mode,
            max_strands,
            max_len,
            max_vertices,
            jobs: 1,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn validate(&self) -> Result<(), Error> {
        if self.max_strands < 1 || self.max_len < 1 || self.max_vertices < 1 || self.jobs < 1 {
            return Err(Error::InvalidArgument(
                "sweep bounds and jobs must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SweepFailure {
    pub input: String,
    pub property: String,
    pub observed: String,
    /// An internal invariant broke rather than a checked property.
    pub internal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub mode: SweepMode,
    pub cases_run: usize,
    pub failures: Vec<SweepFailure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures.iter().any(|f| f.internal) {
            EXIT_INTERNAL
        } else if !self.failures.is_empty() {
            EXIT_FAILURE
        } else {
            EXIT_OK
        }
    }
}

#[derive(Debug, Clone)]
enum Case {
    Word(PositiveBraidWord),
    Tree(PlaneTree),
    Summands(Vec<PositiveBraidWord>),
}

impl Case {
    fn label(&self) -> String {
        match self {
            Case::Word(w) => w.to_string(),
            Case::Tree(t) => t.to_string(),
            Case::Summands(ws) => ws
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" # "),
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn sweep_cases(cfg: &SweepConfig) -> Vec<Case> {
    let words = || PositiveBraidWord::enumerate(cfg.max_strands, cfg.max_len).map(Case::Word);
    match cfg.mode {
        SweepMode::Theorem1 => words()
            .chain(
                (1..=cfg.max_vertices)
                    .flat_map(PlaneTree::enumerate)
                    .map(Case::Tree),
            )
            .collect(),
        SweepMode::Skein | SweepMode::Methods => words().collect(),
        SweepMode::Ito => {
            let primes = [
                PositiveBraidWord::torus(2, 3).expect("valid torus word"),
                PositiveBraidWord::torus(2, 5).expect("valid torus word"),
                PositiveBraidWord::torus(3, 4).expect("valid torus word"),
            ];
            let mut out = Vec::new();
            for k in 1..=3 {
                multisets(primes.len(), k, 0, &mut Vec::new(), &mut |idx| {
                    out.push(Case::Summands(
                        idx.iter().map(|&i| primes[i].clone()).collect(),
                    ));
                });
            }
            out
        }
    }
}

fn multisets(
    n: usize,
    k: usize,
    from: usize,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == k {
        emit(cur);
        return;
    }
    for i in from..n {
        cur.push(i);
        multisets(n, k, i, cur, emit);
        cur.pop();
    }
}

struct Worker {
    oracle: SkeinOracle,
    failures: Vec<SweepFailure>,
}

impl Worker {
    fn fail(&mut self, case: &Case, property: &str, observed: impl Into<String>) {
        self.failures.push(SweepFailure {
            input: case.label(),
            property: property.to_string(),
            observed: observed.into(),
            internal: false,
        });
    }

    fn internal(&mut self, case: &Case, err: &Error) {
        self.failures.push(SweepFailure {
            input: case.label(),
            property: "internal".into(),
            observed: err.to_string(),
            internal: matches!(err, Error::SearchExhausted(_)),
        });
    }

    fn check_parity(&mut self, case: &Case, delta: &HalfLaurent, components: usize) {
        let parity = delta.conway_parity();
        if parity != ConwayParity::Zero
            && parity != ConwayParity::expected_for_components(components)
        {
            self.fail(
                case,
                "conway_parity",
                format!("{parity:?} for {components} components: {delta}"),
            );
        }
    }

    fn run(&mut self, mode: SweepMode, case: &Case) {
        match (mode, case) {
            (SweepMode::Theorem1, Case::Word(w)) => {
                if w.factor_single_occurrence()
                    .map(|f| f.is_empty())
                    .unwrap_or(false)
                {
                    // unknot closures are outside the certified family
                    return;
                }
                self.check_parity(case, &braid_poly(w), w.closure_components());
                match certify_braid(w) {
                    Ok(cert) => self.check_certificate(case, &cert),
                    Err(e) => self.internal(case, &e),
                }
            }
            (SweepMode::Theorem1, Case::Tree(t)) => match certify_tree(t) {
                Ok(cert) => self.check_certificate(case, &cert),
                Err(e) => self.internal(case, &e),
            },
            (SweepMode::Methods, Case::Word(w)) => {
                let seifert = braid_poly(w);
                self.check_parity(case, &seifert, w.closure_components());
                match self.oracle.eval(w) {
                    Ok(skein) if skein == seifert => {}
                    Ok(skein) => self.fail(
                        case,
                        "seifert_equals_skein",
                        format!("{seifert} vs {skein}"),
                    ),
                    Err(e) => self.internal(case, &e),
                }
                match burau_poly(w) {
                    Ok(burau) if burau == seifert => {}
                    Ok(burau) => self.fail(
                        case,
                        "seifert_equals_burau",
                        format!("{seifert} vs {burau}"),
                    ),
                    Err(e) => self.internal(case, &e),
                }
            }
            (SweepMode::Skein, Case::Word(w)) => {
                let plus = braid_poly(w);
                self.check_parity(case, &plus, w.closure_components());
                for j in 0..w.len().saturating_sub(1) {
                    if w.letters()[j] != w.letters()[j + 1] {
                        continue;
                    }
                    let minus = braid_poly(&w.without_pair(j));
                    let zero = braid_poly(&w.without(j));
                    if plus != &minus + &(&HalfLaurent::skein_factor() * &zero) {
                        self.fail(
                            case,
                            "skein_identity",
                            format!("square at {}: {plus} vs {minus} + u*({zero})", j + 1),
                        );
                    }
                }
            }
            (SweepMode::Ito, Case::Summands(ws)) => match ito_summand_check(ws) {
                Ok(r) if r.holds => self.check_parity(case, &r.polynomial, 1),
                Ok(r) => self.fail(
                    case,
                    "summand_count",
                    format!("beta = {} for {} summands", r.beta, r.summands),
                ),
                Err(e) => self.internal(case, &e),
            },
            _ => {}
        }
    }

    fn check_certificate(&mut self, case: &Case, cert: &PCertificate) {
        let report = verify(cert);
        if !report.valid {
            let at = report
                .failure
                .map(|f| format!("{} at {}", f.check, f.path))
                .unwrap_or_default();
            self.fail(case, "certificate_verifies", at);
        } else if report.alpha != 1 || report.beta > -1 {
            self.fail(
                case,
                "root_coefficients",
                format!("alpha={} beta={}", report.alpha, report.beta),
            );
        }
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let start = Instant::now();
    let cases = sweep_cases(cfg);
    let jobs = cfg.jobs;
    let mut shards: Vec<Vec<&Case>> = vec![Vec::new(); jobs];
    for case in &cases {
        let shard = (fnv1a(&case.label()) % jobs as u64) as usize;
        shards[shard].push(case);
    }
    let run_shard = |shard: &[&Case]| {
        let mut worker = Worker {
            oracle: SkeinOracle::new(),
            failures: Vec::new(),
        };
        for case in shard {
            worker.run(cfg.mode, case);
        }
        worker.failures
    };
    let failures: Vec<SweepFailure> = if jobs == 1 {
        run_shard(&shards[0])
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = shards
                .iter()
                .map(|s| scope.spawn(|| run_shard(s)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    Ok(SweepReport {
        mode: cfg.mode,
        cases_run: cases.len(),
        failures,
        wall_time: start.elapsed(),
    })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::SearchExhausted(_) | Error::NonExactDivision(_) | Error::NoUnitNormalization(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_USAGE,
    }
}

fn poly_json(input: &str, delta: &HalfLaurent) -> serde_json::Value {
    let s = delta.summarize();
    json!({
        "schema": OUTPUT_SCHEMA,
        "input": input,
        "polynomial": delta,
        "text": delta.to_string(),
        "degree_doubled": s.degree_doubled,
        "alpha": s.alpha,
        "beta": s.beta,
        "is_zero": s.is_zero,
    })
}

fn poly_text(delta: &HalfLaurent) -> String {
    format!("{delta}\n{}\n", delta.summarize())
}

fn verdict_word(fires: bool) -> &'static str {
    if fires {
        "NOT_IN_P"
    } else {
        "NO_OBSTRUCTION"
    }
}

fn parse_torus_spec(s: &str) -> Result<PositiveBraidWord, Error> {
    let nums = parse_letter_list(s)?;
    match nums.as_slice() {
        [p, q] => PositiveBraidWord::torus(*p, *q),
        _ => Err(Error::InvalidArgument(format!(
            "torus spec '{s}' must be 'p,q'"
        ))),
    }
}

/// Output of one command: what to print and the exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn render(json_mode: bool, value: serde_json::Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn execute(cli: &Cli, stderr: &mut dyn Write) -> Result<Outcome, Error> {
    let json_mode = cli.json;
    match &cli.command {
        Command::Poly { input } => {
            let (label, delta) = match input {
                PolyInput::Braid { braid, method } => {
                    let word = braid.resolve()?;
                    let delta = match method {
                        Method::Seifert => braid_poly(&word),
                        Method::Skein => SkeinOracle::new().eval(&word)?,
                        Method::Burau => burau_poly(&word)?,
                    };
                    (word.to_string(), delta)
                }
                PolyInput::Tree { tree } => {
                    let tree: PlaneTree = tree.parse()?;
                    (tree.to_string(), tree_poly(&tree))
                }
                PolyInput::Torus { p, q } => {
                    let word = PositiveBraidWord::torus(*p, *q)?;
                    (word.to_string(), braid_poly(&word))
                }
            };
            Ok(Outcome::ok(render(
                json_mode,
                poly_json(&label, &delta),
                poly_text(&delta),
            )))
        }
        Command::Certify { input, output } => {
            let cert = match input {
                CertifyInput::Braid { braid } => certify_braid(&braid.resolve()?)?,
                CertifyInput::Tree { tree } => certify_tree(&tree.parse()?)?,
            };
            let mut text = cert.to_json();
            text.push('\n');
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| {
                        Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
                    })?;
                    let _ = writeln!(stderr, "wrote {} ({} nodes)", path.display(), cert.size());
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::VerifyCert { path } => {
            let mut text = String::new();
            let read = if path == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|s| text = s)
            };
            read.map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
            let cert = PCertificate::from_json(&text).map_err(|e| {
                Error::parse(
                    e.column(),
                    format!("malformed certificate (line {}): {e}", e.line()),
                )
            })?;
            let report = verify(&cert);
            let human = match &report.failure {
                None => format!("valid {}\n", report.polynomial.summarize()),
                Some(f) => format!("invalid at {}: {}\n", f.path, f.check),
            };
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            value["schema"] = json!(OUTPUT_SCHEMA);
            Ok(Outcome {
                stdout: render(json_mode, value, human),
                code: if report.valid { EXIT_OK } else { EXIT_FAILURE },
            })
        }
        Command::Satellite {
            winding,
            pattern_poly,
            companion,
        } => {
            let pattern = SatellitePattern::new(*winding, HalfLaurent::parse_any(pattern_poly)?)?;
            let word: PositiveBraidWord = companion.parse()?;
            if word.closure_components() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "companion {word} does not close to a knot"
                )));
            }
            let companion_poly = braid_poly(&word);
            let delta = satellite_poly(&pattern, &companion_poly);
            let verdict = obstruction(&pattern);
            let mut value = poly_json(&word.to_string(), &delta);
            value["winding"] = json!(winding);
            value["companion_polynomial"] = json!(companion_poly);
            value["obstruction"] = json!(verdict);
            value["verdict"] = json!(verdict_word(verdict.fires));
            let text = format!("{}{}\n", poly_text(&delta), verdict_word(verdict.fires));
            Ok(Outcome::ok(render(json_mode, value, text)))
        }
        Command::Cable { n, companion } => {
            let word: PositiveBraidWord = companion.parse()?;
            let report = krishna_check(*n, &word)?;
            let mut value = poly_json(&word.to_string(), &report.cable_poly);
            value["n"] = json!(n);
            value["companion_polynomial"] = json!(report.companion_poly);
            value["obstruction"] = json!(report.verdict);
            value["verdict"] = json!(verdict_word(report.not_in_p));
            let text = format!(
                "{}{}\n",
                poly_text(&report.cable_poly),
                verdict_word(report.not_in_p)
            );
            Ok(Outcome::ok(render(json_mode, value, text)))
        }
        Command::Sweep(args) => {
            let cfg = SweepConfig {
                mode: args.mode,
                max_strands: args.max_strands,
                max_len: args.max_len,
                max_vertices: args.max_vertices,
                jobs: args.jobs,
            };
            let mut report = run_sweep(&cfg)?;
            if args.sorted {
                report.failures.sort();
            }
            let _ = writeln!(stderr, "wall time: {:.3}s", report.wall_time.as_secs_f64());
            let mut text = format!(
                "mode={:?} cases={} failures={}\n",
                cfg.mode,
                report.cases_run,
                report.failures.len()
            )
            .to_lowercase();
            for f in &report.failures {
                let _ = writeln!(text, "FAIL {} [{}]: {}", f.input, f.property, f.observed);
            }
            let value = json!({
                "schema": OUTPUT_SCHEMA,
                "config": cfg,
                "cases_run": report.cases_run,
                "failures": report.failures,
            });
            Ok(Outcome {
                stdout: render(json_mode, value, text),
                code: report.exit_code(),
            })
        }
        Command::ItoCheck { summand, torus } => {
            let mut words = summand
                .iter()
                .map(|s| s.parse::<PositiveBraidWord>())
                .collect::<Result<Vec<_>, _>>()?;
            for t in torus {
                words.push(parse_torus_spec(t)?);
            }
            let report = ito_summand_check(&words)?;
            let text = format!(
                "{}\n{}\nsummands={} -beta={} {}\n",
                report.word,
                report.polynomial,
                report.summands,
                -report.beta,
                if report.holds { "OK" } else { "MISMATCH" }
            );
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            value["schema"] = json!(OUTPUT_SCHEMA);
            Ok(Outcome {
                stdout: render(json_mode, value, text),
                code: if report.holds { EXIT_OK } else { EXIT_FAILURE },
            })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, stderr) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            error_code(&e)
        }
    }
}
