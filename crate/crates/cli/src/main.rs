//! `ltlfrag`: decide in which temporal fragments an LTL formula is expressible.
//!
//! Exit codes: 0 expressible (or success), 1 not expressible (or a failed
//! self-test), 2 error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ltlfrag::decider::{Analysis, DecideOptions, Verdict};
use ltlfrag::efgame::{report, Moves};
use ltlfrag::gcma::{fixtures, Gcma, DEFAULT_MAX_SUB};
use ltlfrag::looplang::DEFAULT_MAX_SEMIGROUP;
use ltlfrag::ltl::{parse, Alphabet, Formula, Fragment, UPWord};
use ltlfrag::quotient::QuotientAutomaton;
use ltlfrag::selftest::{self, SelftestConfig};

#[derive(Parser)]
#[command(
    name = "ltlfrag",
    version,
    about = "Fragment expressibility for future LTL formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide expressibility in one fragment, or in all of them
    Check {
        #[command(flatten)]
        input: Input,
        /// Operator set such as `F`, `X,F` or `U`; all fragments when omitted
        #[arg(long)]
        fragment: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        #[command(flatten)]
        guards: Guards,
    },
    /// Export the tableau automaton, its trimmed form or its quotient
    Show {
        #[command(flatten)]
        input: Input,
        /// Show the built-in four-state fixture instead of a formula
        #[arg(long, conflicts_with_all = ["formula", "file"])]
        fixture: bool,
        #[arg(long, value_enum, default_value = "trimmed")]
        what: Show,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        #[arg(long, default_value_t = DEFAULT_MAX_SUB)]
        max_sub: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SEMIGROUP)]
        max_semigroup: usize,
    },
    /// Print a pair of words that separates the formula but not the fragment
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        fragment: String,
        #[command(flatten)]
        guards: Guards,
    },
    /// Solve the Ehrenfeucht-Fraïssé game on two ultimately periodic words
    Efgame {
        #[arg(long)]
        alphabet: String,
        /// First word, written `x(y)` for x·y^ω
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        /// Allowed moves, e.g. `X`, `F`, `SF` or `X,F`
        #[arg(long, default_value = "X,F")]
        moves: String,
        #[arg(long, default_value_t = 6)]
        rounds: usize,
    },
    /// Run the bounded oracle suites on sampled formulas
    Selftest {
        #[arg(long, default_value = "a,b")]
        alphabet: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled formulas
        #[arg(long, default_value_t = 50)]
        depth: usize,
        /// Corrupt one transition of every automaton in the anchor suite
        #[arg(long)]
        inject_fault: bool,
        #[command(flatten)]
        guards: Guards,
    },
}

#[derive(Args)]
struct Input {
    /// Comma-separated letters; a file may give them in an `alphabet:` header
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long, conflicts_with = "file")]
    formula: Option<String>,
    /// One formula per line after the alphabet header; `#` starts a comment
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Guards {
    #[arg(long, default_value_t = DEFAULT_MAX_SUB)]
    max_sub: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_SEMIGROUP)]
    max_semigroup: usize,
    #[arg(long, default_value_t = 6)]
    game_depth: usize,
    /// Report every failed condition instead of the first
    #[arg(long)]
    all_reasons: bool,
}

impl Guards {
    fn options(self) -> Result<DecideOptions> {
        if self.max_sub == 0 || self.max_semigroup == 0 || self.game_depth == 0 {
            bail!("guards must be positive");
        }
        Ok(DecideOptions {
            max_sub: self.max_sub,
            max_semigroup: self.max_semigroup,
            game_depth: self.game_depth,
            all_reasons: self.all_reasons,
            ..DecideOptions::default()
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    /// Full powerset tableau
    Gcma,
    Trimmed,
    Quotient,
    /// Per-class loop-language report
    Loops,
}

impl Input {
    fn load(&self) -> Result<(Alphabet, Vec<(String, Formula)>)> {
        let mut alphabet = self.alphabet.as_deref().map(Alphabet::parse).transpose()?;
        let lines: Vec<String> = match (&self.formula, &self.file) {
            (Some(f), None) => vec![f.clone()],
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let mut lines = Vec::new();
                for line in text.lines().map(str::trim) {
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    if let Some(spec) = line.strip_prefix("alphabet:") {
                        alphabet = Some(Alphabet::parse(spec)?);
                    } else {
                        lines.push(line.to_string());
                    }
                }
                lines
            }
            _ => bail!("give exactly one of --formula and --file"),
        };
        let alphabet = alphabet.context("no alphabet: pass --alphabet or an `alphabet:` header")?;
        let formulas = lines
            .into_iter()
            .map(|text| {
                let f = parse(&text, &alphabet).with_context(|| format!("parsing `{text}`"))?;
                Ok((text, f))
            })
            .collect::<Result<_>>()?;
        Ok((alphabet, formulas))
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = format!(
        "{} in {}: {}\n",
        v.formula,
        v.fragment,
        if v.expressible {
            "expressible"
        } else {
            "not expressible"
        }
    );
    for r in &v.reasons {
        out.push_str(&format!("  reason: {}\n", r.detail(&v.alphabet)));
    }
    for n in &v.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    if let Some(w) = &v.witness {
        out.push_str(&format!(
            "  witness ({}): {} vs {}\n",
            w.relation,
            w.w1.to_text(&v.alphabet),
            w.w2.to_text(&v.alphabet)
        ));
    }
    out
}

fn check(input: &Input, fragment: Option<&str>, emit: Emit, guards: Guards) -> Result<ExitCode> {
    let options = guards.options()?;
    let fragment = fragment.map(Fragment::parse).transpose()?;
    let (alphabet, formulas) = input.load()?;
    let mut all_yes = true;
    let mut results = Vec::new();
    let mut text = String::new();
    for (_, phi) in &formulas {
        let analysis = Analysis::new(phi, &alphabet, options)?;
        let verdicts: Vec<Verdict> = match fragment {
            Some(f) => vec![analysis.decide(f)?],
            None => analysis.decide_all()?.into_values().collect(),
        };
        all_yes &= verdicts.iter().all(|v| v.expressible);
        for v in &verdicts {
            text.push_str(&verdict_text(v));
        }
        results.push(match fragment {
            Some(_) => verdicts[0].to_json(),
            None => Value::Object(
                verdicts
                    .iter()
                    .map(|v| (v.fragment.name().to_string(), v.to_json()))
                    .collect(),
            ),
        });
    }
    match emit {
        Emit::Json if input.file.is_some() => {
            println!("{}", serde_json::to_string_pretty(&results)?)
        }
        Emit::Json => println!("{}", serde_json::to_string_pretty(&results[0])?),
        Emit::Text => print!("{text}"),
        Emit::Dot => bail!("check emits json or text"),
    }
    Ok(if all_yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn show_automaton(g: &Gcma, what: Show, emit: Emit, max_semigroup: usize) -> Result<String> {
    Ok(match (what, emit) {
        (Show::Gcma | Show::Trimmed, Emit::Json) => serde_json::to_string_pretty(&g.to_json())?,
        (Show::Gcma | Show::Trimmed, Emit::Dot) => g.to_dot(),
        (Show::Gcma | Show::Trimmed, Emit::Text) => {
            let mut out = String::new();
            for q in g.states() {
                let finals: Vec<usize> = (0..g.num_final_sets())
                    .filter(|&f| g.in_final(f, q))
                    .collect();
                out.push_str(&format!(
                    "q{q} {}{} final sets {finals:?}\n",
                    g.label(q),
                    if g.is_initial(q) { " initial" } else { "" }
                ));
                for a in g.alphabet().letters() {
                    out.push_str(&format!(
                        "  {}·q{q} = q{}\n",
                        g.alphabet().name(a),
                        g.step(a, q)
                    ));
                }
            }
            out
        }
        (Show::Quotient, Emit::Json) => {
            serde_json::to_string_pretty(&QuotientAutomaton::of(g).to_json(g))?
        }
        (Show::Quotient, Emit::Dot) => QuotientAutomaton::of(g).to_dot(g),
        (Show::Quotient, Emit::Text) => {
            let qa = QuotientAutomaton::of(g);
            let mut out = String::new();
            for c in qa.classes() {
                let labels: Vec<&str> = qa.members(c).iter().map(|&q| g.label(q)).collect();
                out.push_str(&format!(
                    "C{c} scc {} {}: {}\n",
                    qa.scc_of(c),
                    if qa.is_initial(c) { "initial" } else { "" },
                    labels.join(" ")
                ));
            }
            out
        }
        (Show::Loops, Emit::Dot) => bail!("loop reports are json or text"),
        (Show::Loops, _) => {
            let qa = QuotientAutomaton::of(g);
            let loops = ltlfrag::looplang::LoopAnalysis::new(g, &qa)?;
            let reports = loops.report(max_semigroup)?;
            let json: Vec<Value> = reports.iter().map(|r| r.to_json(g.alphabet())).collect();
            serde_json::to_string_pretty(&json)?
        }
    })
}

fn show(
    input: &Input,
    fixture: bool,
    what: Show,
    emit: Emit,
    max_sub: usize,
    max_semigroup: usize,
) -> Result<ExitCode> {
    let mut out = String::new();
    if fixture {
        out = show_automaton(&fixtures::four_state(), what, emit, max_semigroup)?;
    } else {
        let (alphabet, formulas) = input.load()?;
        for (_, phi) in &formulas {
            let built = ltlfrag::gcma::build_gcma(
                &ltlfrag::ltl::to_nnf(phi, &alphabet),
                &alphabet,
                max_sub,
            )?;
            let g = if what == Show::Gcma {
                built
            } else {
                built.trim()
            };
            out.push_str(&show_automaton(&g, what, emit, max_semigroup)?);
        }
    }
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(input: &Input, fragment: &str, guards: Guards) -> Result<ExitCode> {
    let fragment = Fragment::parse(fragment)?;
    let (alphabet, formulas) = input.load()?;
    let mut found = false;
    let mut results = Vec::new();
    for (_, phi) in &formulas {
        let v = Analysis::new(phi, &alphabet, guards.options()?)?.decide(fragment)?;
        found |= !v.expressible;
        results.push(json!({
            "formula": v.formula,
            "fragment": v.fragment.name(),
            "expressible": v.expressible,
            "witness": v.witness.as_ref().map(|w| w.to_json(&alphabet)),
            "notes": v.notes,
        }));
    }
    if input.file.is_some() {
        println!("{}", serde_json::to_string_pretty(&results)?);
    } else {
        println!("{}", serde_json::to_string_pretty(&results[0])?);
    }
    Ok(if found {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            input,
            fragment,
            emit,
            guards,
        } => check(&input, fragment.as_deref(), emit, guards),
        Command::Show {
            input,
            fixture,
            what,
            emit,
            max_sub,
            max_semigroup,
        } => show(&input, fixture, what, emit, max_sub, max_semigroup),
        Command::Witness {
            input,
            fragment,
            guards,
        } => witness(&input, &fragment, guards),
        Command::Efgame {
            alphabet,
            w1,
            w2,
            moves,
            rounds,
        } => {
            let alphabet = Alphabet::parse(&alphabet)?;
            let u = UPWord::parse(&w1, &alphabet)?;
            let v = UPWord::parse(&w2, &alphabet)?;
            let moves = Moves::parse(&moves)?;
            let r = report(&alphabet, &u, &v, &moves, rounds);
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest {
            alphabet,
            seed,
            depth,
            inject_fault,
            guards,
        } => {
            let config = SelftestConfig {
                seed,
                samples: depth,
                options: guards.options()?,
                inject_fault,
                ..SelftestConfig::default()
            };
            let r = selftest::run(&config, &Alphabet::parse(&alphabet)?);
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
