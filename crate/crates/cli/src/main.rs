//! `twohead`: command-line front end.
//!
//! Exit codes: 0 success, accepted or property holds; 1 rejected or property
//! fails; 2 usage error; 3 invalid input file; 4 budget exceeded.

mod input;

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twohead_core::analyze::{
    check_backward_deterministic, check_complete, check_deterministic, check_one_limited, check_reversible,
    classify_states, graph_analysis, Property,
};
use twohead_core::corpus;
use twohead_core::format::AutomatonDocument;
use twohead_core::grammar::{check_ldlg, generate, grammar_to_automaton, serialize_grammar};
use twohead_core::oracle::{
    language_equal, search_automata, semantic_backward_oracle, semantic_completeness_oracle,
    semantic_determinism_oracle, OracleError, PredecessorMode, SearchConfig,
};
use twohead_core::simulate::{accepts, enumerate_language, run_deterministic};
use twohead_core::transform::{complement_complete, eliminate_lambda_pairs, reverse};
use twohead_core::words::render;
use twohead_core::{serialize_automaton, Automaton, PropertyReport, Word};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Doc,
}

#[derive(Parser)]
#[command(name = "twohead", version, about = "Two-head finite automata toolkit")]
struct Cli {
    /// Output style: plain text or a JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a machine on one word.
    Run {
        file: String,
        word: Option<String>,
        /// Print the computation step by step.
        #[arg(long)]
        trace: bool,
        /// Use the empty word.
        #[arg(long)]
        empty: bool,
    },
    /// Structural checks; without --property, print the full report.
    Check {
        file: String,
        /// det, bdet, rev, 1lim, complete, classify, graph, or one of the
        /// bounded oracles det-oracle, bdet-oracle, complete-oracle.
        #[arg(long)]
        property: Option<String>,
        /// Word bound for the oracle properties.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Oracle predecessors only from configurations reachable on the input.
        #[arg(long)]
        reachable: bool,
    },
    /// List accepted words up to a length, in length-lexicographic order.
    Enum {
        file: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Compare two languages on every word up to a length.
    Compare {
        a: String,
        b: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Interchange the heads.
    Reverse(TransformArgs),
    /// Complement a complete reversible machine.
    Complement(TransformArgs),
    /// Remove (λ,λ) transitions.
    ElimLambda(TransformArgs),
    /// Left deterministic linear grammars.
    Grammar {
        #[command(subcommand)]
        command: GrammarCommand,
    },
    /// Exhaustive search for small machines agreeing with a language.
    Search {
        /// builtin:NAME
        #[arg(long)]
        target: String,
        #[arg(long)]
        states: usize,
        #[arg(long)]
        max_len: usize,
        /// Comma-separated: det, bdet, rev, 1lim, complete.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Maximum number of machines to examine.
        #[arg(long, env = "TWOHEAD_BUDGET")]
        budget: Option<u64>,
    },
    /// Built-in witness machines.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Args)]
struct TransformArgs {
    file: String,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum GrammarCommand {
    /// Check the left deterministic linear form.
    Check { file: String },
    /// List derivable words up to a length.
    Generate {
        file: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Compile to a deterministic machine.
    Compile {
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    List,
    Show { name: String },
}

/// What a command produced: text for stdout and the exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn new(text: impl Into<String>, ok: bool) -> Self {
        Outcome {
            text: text.into(),
            code: if ok { 0 } else { 1 },
        }
    }
}

fn doc(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn report_out(report: &PropertyReport, format: Format) -> Outcome {
    let text = match format {
        Format::Text => report.to_string(),
        Format::Doc => doc(serde_json::to_value(report.to_document()).expect("serializable")),
    };
    Outcome::new(text, report.verdict)
}

fn words_out(words: &[Word], format: Format) -> String {
    match format {
        Format::Text => words.iter().map(|w| render(w) + "\n").collect(),
        Format::Doc => doc(json!(words
            .iter()
            .map(|w| w.iter().collect::<String>())
            .collect::<Vec<_>>())),
    }
}

fn run(file: &str, word: Option<&str>, trace: bool, empty: bool, format: Format) -> Result<Outcome, Failure> {
    let a = input::automaton(file)?;
    let w = input::word(word, empty, a.alphabet())?;
    match run_deterministic(&a, &w) {
        Ok(t) => {
            let ok = t.verdict.is_accepted();
            let text = match format {
                Format::Doc => doc(json!({
                    "word": w.iter().collect::<String>(),
                    "verdict": t.verdict.label(),
                    "steps": t.steps.iter().map(|s| json!({
                        "state": a.state_name(s.config.state),
                        "left": s.config.left,
                        "right": s.config.right,
                        "read": s.transition.map(|t| t.read.to_string()),
                    })).collect::<Vec<_>>(),
                })),
                Format::Text if trace => t.render(&a),
                Format::Text => format!("{}\n", t.verdict.label()),
            };
            Ok(Outcome::new(text, ok))
        }
        Err(_) => {
            // nondeterministic machine: no single trace exists
            let ok = accepts(&a, &w);
            let label = if ok { "accepted" } else { "rejected" };
            let text = match format {
                Format::Doc => {
                    doc(json!({ "word": w.iter().collect::<String>(), "verdict": label, "steps": null }))
                }
                Format::Text if trace => {
                    format!("no trace: the machine is not deterministic\nverdict: {label}\n")
                }
                Format::Text => format!("{label}\n"),
            };
            Ok(Outcome::new(text, ok))
        }
    }
}

fn full_report(a: &Automaton, format: Format) -> Outcome {
    let mut reports = vec![
        check_deterministic(a),
        check_backward_deterministic(a),
        check_reversible(a),
        check_one_limited(a),
    ];
    let mut skipped = Vec::new();
    match check_complete(a) {
        Ok(r) => reports.push(r),
        Err(e) => skipped.push(e.to_string()),
    }
    match classify_states(a) {
        Ok(c) => reports.push(c.report),
        Err(e) => skipped.push(e.to_string()),
    }
    reports.push(graph_analysis(a).report);
    let text = match format {
        Format::Text => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            for k in &skipped {
                s.push_str(k);
                s.push('\n');
            }
            s
        }
        Format::Doc => doc(json!({
            "reports": reports.iter().map(|r| r.to_document()).collect::<Vec<_>>(),
            "not_applicable": skipped,
        })),
    };
    Outcome::new(text, true)
}

fn check(
    file: &str,
    property: Option<&str>,
    max_len: usize,
    reachable: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let a = input::automaton(file)?;
    let Some(p) = property else {
        return Ok(full_report(&a, format));
    };
    let not_applicable = |e: twohead_core::AnalysisError| Outcome::new(format!("{e}\n"), false);
    let mode = if reachable {
        PredecessorMode::Reachable
    } else {
        PredecessorMode::Unrestricted
    };
    Ok(match p {
        "classify" => match classify_states(&a) {
            Ok(c) => report_out(&c.report, format),
            Err(e) => not_applicable(e),
        },
        "graph" => {
            let g = graph_analysis(&a);
            report_out(&g.report, format)
        }
        "det-oracle" => report_out(&semantic_determinism_oracle(&a, max_len), format),
        "bdet-oracle" => report_out(&semantic_backward_oracle(&a, max_len, mode), format),
        "complete-oracle" => report_out(&semantic_completeness_oracle(&a, max_len), format),
        other => match other.parse::<Property>().map_err(Failure::Usage)? {
            Property::Deterministic => report_out(&check_deterministic(&a), format),
            Property::BackwardDeterministic => report_out(&check_backward_deterministic(&a), format),
            Property::Reversible => report_out(&check_reversible(&a), format),
            Property::OneLimited => report_out(&check_one_limited(&a), format),
            Property::Complete => match check_complete(&a) {
                Ok(r) => report_out(&r, format),
                Err(e) => not_applicable(e),
            },
        },
    })
}

fn write_automaton(a: &Automaton, output: Option<&str>) -> Result<Outcome, Failure> {
    let text = serialize_automaton(a);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            Ok(Outcome::new("", true))
        }
        None => Ok(Outcome::new(text, true)),
    }
}

fn search(
    target: &str,
    states: usize,
    max_len: usize,
    filter: &[String],
    budget: Option<u64>,
    format: Format,
) -> Result<Outcome, Failure> {
    let name = target
        .strip_prefix("builtin:")
        .ok_or_else(|| Failure::Usage("search target must be builtin:NAME".into()))?;
    let entry = corpus::builtin(name).map_err(|e| Failure::Usage(e.to_string()))?;
    let filters: BTreeSet<Property> = filter
        .iter()
        .filter(|f| !f.is_empty())
        .map(|f| f.parse::<Property>())
        .collect::<Result<_, _>>()
        .map_err(Failure::Usage)?;
    let mut config = SearchConfig::new(states, max_len, filters);
    config.budget = budget;
    let report = search_automata(&entry.predicate, &config).map_err(|e| match e {
        OracleError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        other => Failure::Usage(other.to_string()),
    })?;
    let text = match format {
        Format::Text => report.render(),
        Format::Doc => doc(serde_json::to_value(report.to_document()).expect("serializable")),
    };
    Ok(Outcome::new(text, report.is_exhausted()))
}

fn corpus_command(command: &CorpusCommand, format: Format) -> Result<Outcome, Failure> {
    let profile = |e: &corpus::CorpusEntry| {
        e.profile
            .iter()
            .map(|(p, v)| format!("{}{}", if *v { "" } else { "¬" }, p))
            .collect::<Vec<_>>()
            .join(" ∧ ")
    };
    match command {
        CorpusCommand::List => {
            let entries = corpus::all();
            let text = match format {
                Format::Text => entries
                    .iter()
                    .map(|e| format!("{:<9} {:<12} {}\n", e.name, e.predicate.name(), profile(e)))
                    .collect(),
                Format::Doc => doc(json!(entries
                    .iter()
                    .map(|e| json!({ "name": e.name, "language": e.predicate.name(), "profile": profile(e), "note": e.note }))
                    .collect::<Vec<_>>())),
            };
            Ok(Outcome::new(text, true))
        }
        CorpusCommand::Show { name } => {
            let e = corpus::builtin(name).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = match format {
                Format::Text => {
                    let mut s = format!(
                        "{}: {}\nlanguage: {}\nprofile: {}\n",
                        e.name,
                        e.note,
                        e.predicate.name(),
                        profile(&e)
                    );
                    s.push_str(&serialize_automaton(&e.automaton));
                    if let Some(g) = &e.grammar {
                        s.push_str("grammar:\n");
                        s.push_str(&g.to_string());
                    }
                    s
                }
                Format::Doc => doc(json!({
                    "name": e.name,
                    "note": e.note,
                    "language": e.predicate.name(),
                    "profile": profile(&e),
                    "automaton": AutomatonDocument::from_automaton(&e.automaton),
                    "grammar": e.grammar.as_ref().map(|g| serde_json::from_str::<Value>(&serialize_grammar(g)).expect("valid json")),
                })),
            };
            Ok(Outcome::new(text, true))
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Run {
            file,
            word,
            trace,
            empty,
        } => run(&file, word.as_deref(), trace, empty, format),
        Command::Check {
            file,
            property,
            max_len,
            reachable,
        } => check(&file, property.as_deref(), max_len, reachable, format),
        Command::Enum { file, max_len } => {
            let a = input::automaton(&file)?;
            Ok(Outcome::new(
                words_out(&enumerate_language(&a, max_len), format),
                true,
            ))
        }
        Command::Compare { a, b, max_len } => {
            let (x, y) = (input::subject(&a)?, input::subject(&b)?);
            let report = language_equal(x.as_language(), y.as_language(), max_len)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(report_out(&report, format))
        }
        Command::Reverse(t) => write_automaton(&reverse(&input::automaton(&t.file)?), t.output.as_deref()),
        Command::Complement(t) => match complement_complete(&input::automaton(&t.file)?) {
            Ok(c) => write_automaton(&c, t.output.as_deref()),
            Err(e) => Ok(Outcome::new(format!("{e}\n"), false)),
        },
        Command::ElimLambda(t) => {
            let e = eliminate_lambda_pairs(&input::automaton(&t.file)?);
            for n in &e.notes {
                eprintln!("note: {n}");
            }
            write_automaton(&e.automaton, t.output.as_deref())
        }
        Command::Grammar { command } => match command {
            GrammarCommand::Check { file } => Ok(report_out(&check_ldlg(&input::grammar(&file)?), format)),
            GrammarCommand::Generate { file, max_len } => {
                let g = input::grammar(&file)?;
                let words = generate(&g, max_len).map_err(|e| Failure::Input(e.to_string()))?;
                Ok(Outcome::new(words_out(&words, format), true))
            }
            GrammarCommand::Compile { file, output } => {
                let g = input::grammar(&file)?;
                let a = grammar_to_automaton(&g).map_err(|e| Failure::Input(e.to_string()))?;
                write_automaton(&a, output.as_deref())
            }
        },
        Command::Search {
            target,
            states,
            max_len,
            filter,
            budget,
        } => search(&target, states, max_len, &filter, budget, format),
        Command::Corpus { command } => corpus_command(&command, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
