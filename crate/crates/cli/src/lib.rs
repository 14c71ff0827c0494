//! Command-line front end: fixture loading, command dispatch and reports.

pub mod fixture;
mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use omega_core::cotorsion::{analyze, Universe};
use omega_core::decision::Decision;
use omega_core::homotopy::homotopy_table;
use omega_core::model::{check_exactness, factorize_cofib_trivfib, factorize_trivcofib_fib, ModelContext};
use omega_core::module::enumerate_indecomposables;
use omega_core::verifier::{roundtrip_correspondence, verify_axioms, MorphismPool, Verdict, VerifyCaps};
use omega_core::{ModMorphism, SubcatSpec};
use serde::Serialize;
use serde_json::{json, Value};

use fixture::{load, validate_fixture, Loaded, MorphismSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "omega", version, about = "Decide and verify omega-model structures on module categories")]
pub struct Cli {
    /// Fixture file describing the algebra, modules and subcategories.
    #[arg(short, long, global = true)]
    pub fixture: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub report: Format,
    /// Seed for the sampled part of the morphism pool.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Override a budget or verifier cap, e.g. `--budget m_max=4`.
    #[arg(long, global = true, value_name = "KEY=VAL")]
    pub budget: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Exit with status 3 when any verdict is undecided.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Cotorsion pair for commands that need one, e.g. `--pair C,C`.
    #[arg(long, global = true, value_name = "X,Y")]
    pub pair: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    TrivcofibFib,
    CofibTrivfib,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orthogonality, completeness, heredity and core finiteness of (X, Y).
    CheckCotorsion { x: String, y: String },
    /// Membership of a morphism in every class, with witnesses.
    ClassifyMorphism {
        /// A fixture morphism name or an inline JSON morphism.
        morphism: String,
    },
    /// Run the two factorization constructions on a morphism.
    Factorize {
        morphism: String,
        #[arg(long, value_enum, default_value_t = Kind::Both)]
        kind: Kind,
    },
    /// Check the model-structure axioms over the morphism pool.
    VerifyAxioms { x: String, y: String },
    /// Stable Hom dimensions between the generators of X.
    HomotopyTable { x: String, y: String },
    /// Ext^1 and Ext^2 dimensions between universe members.
    ExtTable,
    /// Indecomposables up to a dimension vector, e.g. `--cap 1,1,1`.
    EnumerateIndecomposables {
        #[arg(long, value_delimiter = ',')]
        cap: Option<Vec<usize>>,
    },
    /// Whether the model structure is exact, with a witness if not.
    CheckExactness { x: Option<String>, y: Option<String> },
    /// Report every problem with the fixture.
    Validate,
}

impl Command {
    fn echo(&self) -> String {
        match self {
            Command::CheckCotorsion { x, y } => format!("check-cotorsion {x} {y}"),
            Command::ClassifyMorphism { morphism } => format!("classify-morphism {morphism}"),
            Command::Factorize { morphism, kind } => format!("factorize {morphism} --kind {}", kind_name(*kind)),
            Command::VerifyAxioms { x, y } => format!("verify-axioms {x} {y}"),
            Command::HomotopyTable { x, y } => format!("homotopy-table {x} {y}"),
            Command::ExtTable => "ext-table".into(),
            Command::EnumerateIndecomposables { cap } => match cap {
                Some(c) => format!(
                    "enumerate-indecomposables --cap {}",
                    c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                ),
                None => "enumerate-indecomposables".into(),
            },
            Command::CheckExactness { x, y } => match (x, y) {
                (Some(x), Some(y)) => format!("check-exactness {x} {y}"),
                _ => "check-exactness".into(),
            },
            Command::Validate => "validate".into(),
        }
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::TrivcofibFib => "trivcofib-fib",
        Kind::CofibTrivfib => "cofib-trivfib",
        Kind::Both => "both",
    }
}

/// Error that aborts a command before it produces an outcome.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read fixture {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("fixture has {} problem(s)", .0.len())]
    Fixture(Vec<fixture::Diagnostic>),
}

/// What a command produced: the JSON payload, its text rendering, and the
/// verdict flags that decide the exit status.
pub struct Outcome {
    pub payload: Value,
    pub text: String,
    pub failed: bool,
    pub undecided: bool,
}

#[derive(Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    command: String,
    fixture_sha256: &'a str,
    budget: &'a omega_core::Budget,
    outcome: &'a Value,
}

fn parse_overrides(cli: &Cli) -> Result<(Vec<(String, u64)>, VerifyCaps), InputError> {
    let mut budget = Vec::new();
    let mut caps = VerifyCaps::default();
    for kv in &cli.budget {
        let (k, v) =
            kv.split_once('=').ok_or_else(|| InputError::Usage(format!("--budget expects KEY=VAL, got `{kv}`")))?;
        let v: u64 =
            v.parse().map_err(|_| InputError::Usage(format!("--budget {k}: `{v}` is not a non-negative integer")))?;
        match k {
            "composable_pairs" => caps.composable_pairs = v as usize,
            "retract_pairs" => caps.retract_pairs = v as usize,
            "squares" => caps.squares = v as usize,
            "beta_directions" => caps.beta_directions = v as usize,
            _ => budget.push((k.to_string(), v)),
        }
    }
    if let Some(seed) = cli.seed {
        budget.push(("seed".into(), seed));
    }
    Ok((budget, caps))
}

struct Session {
    loaded: Loaded,
    caps: VerifyCaps,
    pair: Option<(String, String)>,
}

impl Session {
    fn subcat(&self, name: &str) -> Result<SubcatSpec, InputError> {
        self.loaded.subcat(name).ok_or_else(|| InputError::Usage(format!("unknown subcategory `{name}`")))
    }

    fn context(&self, x: &str, y: &str) -> Result<ModelContext, InputError> {
        let (xs, ys) = (self.subcat(x)?, self.subcat(y)?);
        ModelContext::new(self.loaded.universe.fresh(), xs, ys).map_err(|e| InputError::Usage(e.to_string()))
    }

    fn pair_context(&self, x: Option<&String>, y: Option<&String>) -> Result<ModelContext, InputError> {
        match (x, y) {
            (Some(x), Some(y)) => self.context(x, y),
            (None, None) => match &self.pair {
                Some((x, y)) => self.context(x, y),
                None => Err(InputError::Usage(
                    "no cotorsion pair: pass X Y, --pair X,Y, or add `pair` to the fixture".into(),
                )),
            },
            _ => Err(InputError::Usage("give both X and Y".into())),
        }
    }

    fn morphism(&self, spec: &str) -> Result<(String, ModMorphism), InputError> {
        if spec.trim_start().starts_with('{') {
            let m: MorphismSpec =
                serde_json::from_str(spec).map_err(|e| InputError::Usage(format!("inline morphism: {e}")))?;
            let module = |n: &str| {
                self.loaded.module(n).ok_or_else(|| InputError::Usage(format!("inline morphism: unknown module `{n}`")))
            };
            let (s, t) = (module(&m.source)?, module(&m.target)?);
            let field = self.loaded.algebra.field();
            if m.maps.len() != s.dims().len() {
                return Err(InputError::Usage("inline morphism: one matrix per vertex expected".into()));
            }
            let comps = m
                .maps
                .iter()
                .enumerate()
                .map(|(v, rows)| {
                    if rows.iter().all(Vec::is_empty) && t.dims()[v] * s.dims()[v] == 0 {
                        Ok(omega_core::Matrix::zeros(field, t.dims()[v], s.dims()[v]))
                    } else if rows.len() == t.dims()[v] && rows.iter().all(|r| r.len() == s.dims()[v]) {
                        Ok(omega_core::Matrix::from_rows(field, rows))
                    } else {
                        Err(InputError::Usage(format!("inline morphism: component {v} has the wrong shape")))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let f = ModMorphism::new(s, t, comps).map_err(|e| InputError::Usage(format!("inline morphism: {e}")))?;
            return Ok(("inline".into(), f));
        }
        self.loaded
            .morphisms
            .get(spec)
            .map(|f| (spec.to_string(), f.clone()))
            .ok_or_else(|| InputError::Usage(format!("unknown morphism `{spec}`")))
    }
}

/// Whether any decision inside `v` serialized as `"undecided"`.
fn any_undecided(v: &Value) -> bool {
    match v {
        Value::String(s) => s == "undecided",
        Value::Array(a) => a.iter().any(any_undecided),
        Value::Object(o) => o.values().any(any_undecided),
        _ => false,
    }
}

fn execute(cli: &Cli, session: &Session) -> Result<Outcome, InputError> {
    let u = &session.loaded.universe;
    Ok(match &cli.command {
        Command::CheckCotorsion { x, y } => {
            let report =
                analyze(&session.subcat(x)?, &session.subcat(y)?, u).map_err(|e| InputError::Usage(e.to_string()))?;
            let payload = serde_json::to_value(&report).expect("serializable");
            Outcome {
                text: text::cotorsion(&report),
                failed: !report.is_cotorsion_pair(),
                undecided: report.completeness.verdict == Decision::Undecided,
                payload,
            }
        }
        Command::ClassifyMorphism { morphism } => {
            let ctx = session.pair_context(None, None)?;
            let (name, f) = session.morphism(morphism)?;
            let c = ctx.classify(&f);
            let payload = json!({
                "morphism": name,
                "source": ctx.describe(f.source()),
                "target": ctx.describe(f.target()),
                "classification": &*c,
            });
            let undecided = any_undecided(&payload["classification"]);
            Outcome { text: text::classification(&name, &f, &c, &ctx), failed: false, undecided, payload }
        }
        Command::Factorize { morphism, kind } => {
            let ctx = session.pair_context(None, None)?;
            let (name, f) = session.morphism(morphism)?;
            let mut entries = Vec::new();
            let (mut failed, mut undecided) = (false, false);
            let mut lines = Vec::new();
            if matches!(kind, Kind::TrivcofibFib | Kind::Both) {
                let fac = factorize_trivcofib_fib(&f, &ctx);
                let check = fac.check(&f, &ctx);
                failed |= check.verdict() == Decision::No;
                undecided |= check.verdict() == Decision::Undecided;
                lines.push(text::factorization(&fac, &check, &ctx));
                entries.push(json!({"factorization": fac, "check": check, "verdict": check.verdict()}));
            }
            if matches!(kind, Kind::CofibTrivfib | Kind::Both) {
                match factorize_cofib_trivfib(&f, &ctx) {
                    Ok(fac) => {
                        let check = fac.check(&f, &ctx);
                        failed |= check.verdict() == Decision::No;
                        undecided |= check.verdict() == Decision::Undecided;
                        lines.push(text::factorization(&fac, &check, &ctx));
                        entries.push(json!({"factorization": fac, "check": check, "verdict": check.verdict()}));
                    }
                    Err(e) => {
                        failed = true;
                        lines.push(format!("cofib_then_trivfib: {e}"));
                        entries.push(json!({"kind": "cofib_then_trivfib", "error": e.to_string()}));
                    }
                }
            }
            Outcome {
                payload: json!({"morphism": name, "factorizations": entries}),
                text: lines.join("\n"),
                failed,
                undecided,
            }
        }
        Command::VerifyAxioms { x, y } => {
            let ctx = session.context(x, y)?;
            let pool = MorphismPool::build(&ctx);
            let report = verify_axioms(&pool, &ctx, &session.caps);
            let round = roundtrip_correspondence(&ctx);
            Outcome {
                text: text::axioms(&report, &round),
                failed: report.has_fail() || round.verdict == Verdict::Fail,
                undecided: report.has_undecided() || round.verdict == Verdict::Undecided,
                payload: json!({"axioms": report, "roundtrip": round, "caps": session.caps}),
            }
        }
        Command::HomotopyTable { x, y } => {
            let ctx = session.context(x, y)?;
            let table = homotopy_table(&ctx);
            Outcome {
                text: text::homotopy(&table),
                payload: serde_json::to_value(&table).expect("serializable"),
                failed: false,
                undecided: false,
            }
        }
        Command::ExtTable => {
            let n = u.len();
            let ext1: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| u.ext1(i, j)).collect()).collect();
            let ext2: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| u.ext2(i, j)).collect()).collect();
            Outcome {
                text: text::ext_table(u.labels(), &ext1, &ext2),
                payload: json!({"labels": u.labels(), "ext1": ext1, "ext2": ext2}),
                failed: false,
                undecided: false,
            }
        }
        Command::EnumerateIndecomposables { cap } => {
            let cap = match (cap, &session.loaded.dim_cap) {
                (Some(c), _) => c.clone(),
                (None, Some(c)) => c.clone(),
                (None, None) => return Err(InputError::Usage("--cap is required for an explicit universe".into())),
            };
            let alg = &session.loaded.algebra;
            let mods = enumerate_indecomposables(alg, &cap, &session.loaded.budget)
                .map_err(|e| InputError::Usage(e.to_string()))?;
            let labelled =
                Universe::enumerate(alg, &cap, &session.loaded.budget).map_err(|e| InputError::Usage(e.to_string()))?;
            let entries: Vec<Value> = mods
                .iter()
                .zip(labelled.labels())
                .map(|(m, l)| json!({"label": l, "dims": m.dims(), "module": m}))
                .collect();
            Outcome {
                text: text::indecomposables(labelled.labels(), &mods),
                payload: json!({"cap": cap, "count": mods.len(), "indecomposables": entries}),
                failed: false,
                undecided: false,
            }
        }
        Command::CheckExactness { x, y } => {
            let ctx = session.pair_context(x.as_ref(), y.as_ref())?;
            let r = check_exactness(&ctx);
            Outcome {
                text: text::exactness(&r, &ctx),
                payload: serde_json::to_value(&r).expect("serializable"),
                failed: false,
                undecided: false,
            }
        }
        Command::Validate => unreachable!("handled before loading"),
    })
}

fn read_fixture(cli: &Cli) -> Result<(PathBuf, Vec<u8>), InputError> {
    let path = cli.fixture.clone().ok_or_else(|| InputError::Usage("--fixture PATH is required".into()))?;
    let bytes = std::fs::read(&path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    Ok((path, bytes))
}

fn emit(cli: &Cli, body: &str, out: &mut dyn Write) -> Result<(), InputError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|source| InputError::Io { path: path.display().to_string(), source })
        }
        None => out.write_all(body.as_bytes()).map_err(|source| InputError::Io { path: "<stdout>".into(), source }),
    }
}

fn run_cli(cli: &Cli, out: &mut dyn Write) -> Result<i32, InputError> {
    let start = Instant::now();
    let (overrides, caps) = parse_overrides(cli)?;
    let (_, bytes) = read_fixture(cli)?;
    if let Command::Validate = cli.command {
        let diags = validate_fixture(&bytes);
        let body = match cli.report {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&json!({
                    "fixture_sha256": fixture::sha256_hex(&bytes),
                    "diagnostics": diags,
                }))
                .expect("serializable");
                s.push('\n');
                s
            }
            Format::Text if diags.is_empty() => "fixture is valid\n".into(),
            Format::Text => diags.iter().map(|d| format!("{d}\n")).collect(),
        };
        emit(cli, &body, out)?;
        return Ok(if diags.is_empty() { EXIT_OK } else { EXIT_INPUT });
    }
    let loaded = load(&bytes, &overrides).map_err(InputError::Fixture)?;
    let pair = match &cli.pair {
        Some(p) => {
            let (x, y) =
                p.split_once(',').ok_or_else(|| InputError::Usage(format!("--pair expects X,Y, got `{p}`")))?;
            Some((x.to_string(), y.to_string()))
        }
        None => loaded.pair.as_ref().map(|p| (p.x.clone(), p.y.clone())),
    };
    let session = Session { loaded, caps, pair };
    let outcome = execute(cli, &session)?;
    let body = match cli.report {
        Format::Json => {
            let report = Report {
                tool: "omega",
                version: env!("CARGO_PKG_VERSION"),
                command: cli.command.echo(),
                fixture_sha256: &session.loaded.sha256,
                budget: &session.loaded.budget,
                outcome: &outcome.payload,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => format!(
            "{}\n{}\nelapsed: {} ms\n",
            cli.command.echo(),
            outcome.text.trim_end(),
            start.elapsed().as_millis()
        ),
    };
    emit(cli, &body, out)?;
    Ok(if outcome.failed {
        EXIT_FAIL
    } else if outcome.undecided && cli.strict {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    })
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match run_cli(&cli, out) {
        Ok(code) => code,
        Err(InputError::Fixture(diags)) => {
            for d in &diags {
                let _ = writeln!(err, "error: {d}");
            }
            EXIT_INPUT
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
