//! The `actlog` command line.
//!
//! Exit status: 0 success (or an applied update), 1 unreadable or invalid
//! input, 2 update rejected by the semantics, 3 precondition violated,
//! 4 evaluation failed (enumeration cap, inconsistent model), 5 selftest
//! failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::{fs, io};

use actlog_core::{
    compare, ground_with, models, rewrite_bm, rewrite_st, run, well_founded, Database, EngineError,
    EnumerationConfig, GroundProgram, GroundingMode, RunConfig, RunStatus, SelectionPolicy, SemanticsId,
    StandardProgram, UpdateProgram,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{format, report, selftest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_EVALUATION: i32 = 4;
pub const EXIT_SELFTEST: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "actlog", version, about = "Declarative semantics for active database rules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the rewritten standard program.
    Rewrite(Inputs),
    /// Print the ground program.
    Ground {
        #[command(flatten)]
        inputs: Inputs,
        /// Only instantiate rules whose positive body can hold.
        #[arg(long)]
        relevant: bool,
    },
    /// Print the well-founded model.
    Wf(Inputs),
    /// List every P-stable model with its classes.
    Models {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        eval: Eval,
    },
    /// Apply the update program to the database under one semantics.
    Apply {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        eval: Eval,
        #[arg(long, default_value = "ws")]
        semantics: SemanticsId,
        /// How nondeterministic semantics pick a model.
        #[arg(long, value_enum, default_value_t = Choose::Lex)]
        choose: Choose,
        /// Seed for `--choose random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the output database to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all nine semantics and compare their outputs.
    Compare {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        eval: Eval,
    },
    /// Run the fixture corpus and the random property suites.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Program file (.adl).
    #[arg(short, long)]
    pub program: PathBuf,
    /// Database file (.adb); empty when omitted.
    #[arg(short, long)]
    pub db: Option<PathBuf>,
    /// Update set file (.adu); empty when omitted.
    #[arg(short = 'u', long)]
    pub delta: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::St)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct Eval {
    /// Largest number of atoms left undefined by the well-founded model
    /// that enumeration accepts.
    #[arg(long, default_value_t = EnumerationConfig::default().cap)]
    pub cap: usize,
    /// Print a JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Guarded rewriting.
    St,
    /// Complementary-literal rewriting.
    Bm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Choose {
    Lex,
    Random,
}

/// A failed command: message and exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::NonTotalInput { .. } => EXIT_PRECONDITION,
            EngineError::Ground(_) => EXIT_INPUT,
            _ => EXIT_EVALUATION,
        };
        Self { code, message: e.to_string() }
    }
}

fn at(path: &Path, e: format::FormatError) -> Failure {
    Failure::input(format!("{}:{e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_optional(path: Option<&Path>) -> Result<String, Failure> {
    path.map_or(Ok(String::new()), read)
}

struct Loaded {
    up: UpdateProgram,
    db: Database,
    mode: Mode,
}

impl Inputs {
    fn load(&self) -> Result<Loaded, Failure> {
        let program_src = read(&self.program)?;
        let delta_src = read_optional(self.delta.as_deref())?;
        let db_src = read_optional(self.db.as_deref())?;
        let program = format::parse_program(&program_src).map_err(|e| at(&self.program, e))?;
        let delta = match &self.delta {
            Some(p) => format::parse_delta(&delta_src).map_err(|e| at(p, e))?,
            None => Default::default(),
        };
        let db = match &self.db {
            Some(p) => format::parse_database(&db_src).map_err(|e| at(p, e))?,
            None => Database::new(),
        };
        let up = UpdateProgram::new(delta, program).map_err(Failure::input)?;
        Ok(Loaded { up, db, mode: self.mode })
    }
}

impl Loaded {
    fn rewritten(&self) -> StandardProgram {
        match self.mode {
            Mode::St => rewrite_st(&self.up),
            Mode::Bm => rewrite_bm(&self.up),
        }
    }

    fn ground(&self, grounding: GroundingMode) -> Result<GroundProgram, Failure> {
        ground_with(&self.rewritten().embed(&self.db), grounding).map_err(Failure::input)
    }
}

/// Output of a successful command: text for stdout and exit status.
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn done(stdout: String) -> Result<Output, Failure> {
    Ok(Output { stdout, code: EXIT_OK })
}

pub fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Rewrite(inputs) => done(inputs.load()?.rewritten().to_string()),
        Command::Ground { inputs, relevant } => {
            let mode = if *relevant { GroundingMode::Relevant } else { GroundingMode::Full };
            done(inputs.load()?.ground(mode)?.to_string())
        }
        Command::Wf(inputs) => {
            let m = well_founded(&inputs.load()?.ground(GroundingMode::Full)?);
            done(format!("{m}\n"))
        }
        Command::Models { inputs, eval } => {
            let p = inputs.load()?.ground(GroundingMode::Full)?;
            let family = models(&p, &EnumerationConfig { cap: eval.cap }).map_err(EngineError::from)?;
            if eval.json {
                return done(report::to_json(&report::family_doc(&family)));
            }
            let mut out = String::new();
            for (i, r) in family.iter().enumerate() {
                let flags: Vec<&str> = r.flags.labels().collect();
                let _ = writeln!(out, "% model {}: {}", i + 1, if flags.is_empty() { "-".to_string() } else { flags.join(", ") });
                let _ = writeln!(out, "{}", r.model);
            }
            done(out)
        }
        Command::Apply { inputs, eval, semantics, choose, seed, out } => {
            let loaded = inputs.load()?;
            let policy = match choose {
                Choose::Lex => SelectionPolicy::Lexicographic,
                Choose::Random => SelectionPolicy::Seeded(*seed),
            };
            let cfg = RunConfig {
                enumeration: EnumerationConfig { cap: eval.cap },
                ..RunConfig::new(*semantics).with_policy(policy)
            };
            let r = run(&loaded.up, &loaded.db, &cfg)?;
            if let Some(path) = out {
                fs::write(path, r.output_db.to_string())
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            }
            let stdout = if eval.json {
                report::to_json(&report::RunDoc::of(&r))
            } else {
                let mut s = format!("% semantics: {}\n% status: {}\n", r.semantics, report::status_name(r.status));
                if let SelectionPolicy::Seeded(seed) = r.policy {
                    let _ = writeln!(s, "% seed: {seed}");
                }
                s.push_str(&r.output_db.to_string());
                s
            };
            let code = match r.status {
                RunStatus::Applied => EXIT_OK,
                RunStatus::RejectedUnchanged => EXIT_REJECTED,
            };
            Ok(Output { stdout, code })
        }
        Command::Compare { inputs, eval } => {
            let loaded = inputs.load()?;
            let base = RunConfig { enumeration: EnumerationConfig { cap: eval.cap }, ..RunConfig::new(SemanticsId::Ws) };
            let c = compare(&loaded.up, &loaded.db, &base);
            if eval.json {
                return done(report::to_json(&report::ComparisonDoc::of(&c)));
            }
            done(compare_text(&c))
        }
        Command::Selftest { seed } => {
            let suites = selftest::all(*seed);
            let mut out = String::new();
            for s in &suites {
                let _ = writeln!(out, "{}", s.summary());
            }
            for s in &suites {
                if let Some(first) = s.failures.first() {
                    let _ = writeln!(out, "first {} failure:\n{first}", s.name);
                }
            }
            let code = if suites.iter().all(selftest::SuiteResult::ok) { EXIT_OK } else { EXIT_SELFTEST };
            Ok(Output { stdout: out, code })
        }
    }
}

fn compare_text(c: &actlog_core::Comparison) -> String {
    let mut out = String::new();
    for row in &c.rows {
        match &row.result {
            Ok(r) => {
                let _ = writeln!(out, "% {}: {}", row.semantics, report::status_name(r.status));
                for line in r.output_db.to_string().lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
            Err(e) => {
                let _ = writeln!(out, "% {}: error: {e}", row.semantics);
            }
        }
    }
    let _ = writeln!(out, "% below (row output is at most as informative as column output)");
    let names: Vec<&str> = c.rows.iter().map(|r| r.semantics.as_str()).collect();
    let _ = writeln!(out, "{:>6} {}", "", names.iter().map(|n| format!("{n:>6}")).collect::<String>());
    for (name, row) in names.iter().zip(&c.leq) {
        let cells: String = row
            .iter()
            .map(|x| match x {
                Some(true) => format!("{:>6}", "yes"),
                Some(false) => format!("{:>6}", "no"),
                None => format!("{:>6}", "-"),
            })
            .collect();
        let _ = writeln!(out, "{name:>6} {cells}");
    }
    out
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(out) => {
            use io::Write;
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
