use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use automata::closure::{self, ClosureKind};
use automata::error::AutomatonError;
use automata::json::{dfa_from_json, nfa_from_json, nfa_to_json};
use automata::nfa::{word_from_names, word_to_string, Nfa};
use automata::reductions::{self, ReductionCertificate};
use automata::report::{OutputFormat, RunConfig};
use automata::subset::{
    determinize, enumerate_max_blowup, minimize, shortest_rejected, state_complexity, universal,
    EnumerationMode,
};
use automata::unary::unary_asf_analyze;
use automata::witness::{self, check_fooling_set, find_fooling_set, FoolingBudget, FoolingSet};
use automata::{experiments, Dfa};

/// Measurements and constructions for NFAs with all states final, initial,
/// or both.
#[derive(Parser)]
#[command(name = "automata", version, max_term_width = 100)]
struct Cli {
    /// Report output format.
    #[arg(long, global = true, default_value = "md", value_parser = parse_format)]
    format: OutputFormat,

    /// Seed for every randomized sample.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Budget cap for exhaustive enumeration and fooling-set search nodes.
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::parse(s).ok_or_else(|| format!("unknown format {s:?} (expected md, csv, json)"))
}

#[derive(Subcommand)]
enum Command {
    /// Generate a member of a named automaton family as JSON.
    Gen {
        /// all-final, asif, asi, suff, fact, jiraskova, or jiraskova-asf.
        family: String,
        n: usize,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a measurement on an automaton file.
    Analyze {
        file: PathBuf,
        /// sc, universal, shortest-rejected, determinize, minimize, closed,
        /// closure, unary, or accepts.
        analysis: String,
        /// Closure kind for `closed` / `closure`: prefix, suffix, or factor.
        #[arg(long)]
        kind: Option<String>,
        /// Word (symbol names) for `accepts`.
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        word: Vec<String>,
    },
    /// Run a named experiment suite (or `all`) and print its report.
    Verify {
        experiment_id: String,
        /// Override the per-experiment sample count.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Apply a universality-preserving reduction or augmentation.
    Reduce {
        /// asf, asif, recode4to2, asf3-asif2, augment-asf, or augment-asif.
        name: String,
        file: PathBuf,
        /// Also check universality on both sides and emit a certificate.
        #[arg(long)]
        check: bool,
    },
    /// Exhaustively enumerate a restricted class and report the maximum
    /// state complexity.
    Enumerate {
        n: usize,
        alphabet_size: usize,
        /// asf, asi, asif, or unary-asf.
        mode: String,
    },
    /// Search for a fooling set of the given size for the language of a DFA.
    Fooling {
        file: PathBuf,
        target_size: usize,
        #[arg(long, default_value_t = 5)]
        max_word_len: usize,
        /// Check an existing fooling set (JSON file) instead of searching.
        #[arg(long)]
        check: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                AutomatonError::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> automata::Result<ExitCode> {
    match &cli.command {
        Command::Gen { family, n, out } => cmd_gen(family, *n, out.as_deref()),
        Command::Analyze {
            file,
            analysis,
            kind,
            word,
        } => cmd_analyze(file, analysis, kind.as_deref(), word),
        Command::Verify {
            experiment_id,
            samples,
        } => cmd_verify(cli, experiment_id, *samples),
        Command::Reduce { name, file, check } => cmd_reduce(name, file, *check),
        Command::Enumerate {
            n,
            alphabet_size,
            mode,
        } => cmd_enumerate(cli, *n, *alphabet_size, mode),
        Command::Fooling {
            file,
            target_size,
            max_word_len,
            check,
        } => cmd_fooling(cli, file, *target_size, *max_word_len, check.as_deref()),
    }
}

fn cmd_gen(family: &str, n: usize, out: Option<&std::path::Path>) -> automata::Result<ExitCode> {
    let m: Nfa = match family {
        "all-final" => witness::witness_all_final(n)?,
        "asif" => witness::witness_asif(n)?,
        "asi" => witness::witness_asi(n)?,
        "suff" => witness::witness_suff(n)?.as_nfa(),
        "fact" => witness::witness_fact(n)?.as_nfa(),
        "jiraskova" => witness::jiraskova_nfa(n)?,
        "jiraskova-asf" => witness::jiraskova_asf_modified(n)?,
        other => {
            return Err(AutomatonError::precondition(format!(
                "unknown family {other:?} (expected all-final, asif, asi, suff, fact, jiraskova, jiraskova-asf)"
            )))
        }
    };
    let text = nfa_to_json(&m);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_dfa(file: &std::path::Path) -> automata::Result<Dfa> {
    dfa_from_json(&std::fs::read_to_string(file)?)
}

fn cmd_analyze(
    file: &std::path::Path,
    analysis: &str,
    kind: Option<&str>,
    word: &[String],
) -> automata::Result<ExitCode> {
    let text = std::fs::read_to_string(file)?;
    let m = nfa_from_json(&text)?;
    match analysis {
        "sc" => println!("{}", state_complexity(&m)),
        "universal" => println!("{}", universal(&m)),
        "shortest-rejected" => match shortest_rejected(&m) {
            Some(w) => println!("{}", word_to_string(m.alphabet(), &w)),
            None => println!("universal"),
        },
        "determinize" => {
            let trace = determinize(&m);
            println!("{}", nfa_to_json(&trace.dfa.as_nfa()));
            println!("{}", trace.subset_map_json());
        }
        "minimize" => println!("{}", nfa_to_json(&minimize(&determinize(&m).dfa).as_nfa())),
        "closed" => {
            let kind = ClosureKind::parse(kind.ok_or_else(|| {
                AutomatonError::precondition("`closed` needs --kind prefix|suffix|factor")
            })?)?;
            let d = dfa_from_json(&text)?;
            let r = closure::is_closed(&d, kind)?;
            match r.witness {
                Some(w) => println!("{} witness={}", r.closed, word_to_string(d.alphabet(), &w)),
                None => println!("{}", r.closed),
            }
        }
        "closure" => {
            let kind = ClosureKind::parse(kind.ok_or_else(|| {
                AutomatonError::precondition("`closure` needs --kind prefix|suffix|factor")
            })?)?;
            let d = dfa_from_json(&text)?;
            let out = match kind {
                ClosureKind::Prefix => closure::pref_dfa(&d).as_nfa(),
                ClosureKind::Suffix => closure::suff_nfa(&d),
                ClosureKind::Factor => closure::fact_nfa(&d),
            };
            println!("{}", nfa_to_json(&out));
        }
        "unary" => {
            let r = unary_asf_analyze(&m)?;
            println!("{}", serde_json::to_string(&r)?);
        }
        "accepts" => {
            let w = word_from_names(m.alphabet(), word)?;
            println!("{}", m.accepts(&w)?);
        }
        other => {
            return Err(AutomatonError::precondition(format!(
                "unknown analysis {other:?}"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_config(cli: &Cli, samples: Option<usize>) -> RunConfig {
    let mut config = RunConfig {
        seed: cli.seed,
        samples,
        ..Default::default()
    };
    if let Some(b) = cli.budget {
        config.enumeration_budget = b;
        config.fooling_budget.max_nodes = b;
    }
    config
}

fn cmd_verify(cli: &Cli, experiment_id: &str, samples: Option<usize>) -> automata::Result<ExitCode> {
    let config = run_config(cli, samples);
    let ids: Vec<&str> = if experiment_id == "all" {
        experiments::EXPERIMENT_IDS.to_vec()
    } else {
        vec![experiment_id]
    };
    let mut any_fail = false;
    let mut any_skip = false;
    for id in ids {
        let report = experiments::run(id, &config)?;
        print!("{}", report.render(cli.format));
        any_fail |= report
            .rows
            .iter()
            .any(|r| r.verdict == automata::Verdict::Fail);
        any_skip |= report.any_skipped();
    }
    Ok(if any_fail {
        ExitCode::from(1)
    } else if any_skip {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_reduce(name: &str, file: &std::path::Path, check: bool) -> automata::Result<ExitCode> {
    let m = nfa_from_json(&std::fs::read_to_string(file)?)?;
    let out = match name {
        "asf" => reductions::asf_reduction(&m)?,
        "asif" => reductions::asif_reduction(&m)?,
        "recode4to2" => reductions::recode_4_to_2(&m)?,
        "asf3-asif2" => reductions::asf3_to_asif2(&m)?,
        "augment-asf" => reductions::augment_hash_asf(&m)?,
        "augment-asif" => reductions::augment_hash_asif(&m)?,
        other => {
            return Err(AutomatonError::precondition(format!(
                "unknown reduction {other:?} (expected asf, asif, recode4to2, asf3-asif2, augment-asf, augment-asif)"
            )))
        }
    };
    if check {
        let cert = ReductionCertificate::check(&m, &out);
        let payload = serde_json::json!({
            "automaton": serde_json::from_str::<serde_json::Value>(&nfa_to_json(&out))?,
            "certificate": cert,
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
        if !cert.holds() {
            return Ok(ExitCode::from(1));
        }
    } else {
        println!("{}", nfa_to_json(&out));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(cli: &Cli, n: usize, alphabet_size: usize, mode: &str) -> automata::Result<ExitCode> {
    let mode = EnumerationMode::parse(mode)?;
    let budget = cli.budget.unwrap_or(1 << 24);
    let r = enumerate_max_blowup(n, alphabet_size, mode, budget)?;
    let payload = serde_json::json!({
        "max_complexity": r.max_complexity,
        "total_enumerated": r.total_enumerated,
        "witness": serde_json::from_str::<serde_json::Value>(&nfa_to_json(&r.witness))?,
    });
    println!("{}", serde_json::to_string_pretty(&payload)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_fooling(
    cli: &Cli,
    file: &std::path::Path,
    target_size: usize,
    max_word_len: usize,
    check: Option<&std::path::Path>,
) -> automata::Result<ExitCode> {
    let d = load_dfa(file)?;
    if let Some(fs_path) = check {
        let fs: FoolingSet = serde_json::from_str(&std::fs::read_to_string(fs_path)?)?;
        let ok = check_fooling_set(&d, &fs)?;
        println!("{ok}");
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let mut budget = FoolingBudget::default();
    if let Some(b) = cli.budget {
        budget.max_nodes = b;
    }
    match find_fooling_set(&d, target_size, max_word_len, budget)? {
        Some(fs) => {
            println!("{}", serde_json::to_string_pretty(&fs)?);
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("no fooling set of size {target_size} found within the budget");
            Ok(ExitCode::from(1))
        }
    }
}
