use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use seqinv_core::analysis::{
    count_outputs, family_eval, is_synchronizing, max_runs, probe_conjectures, progression_automaton,
    shortest_sync_words, structure_report, transition_bipartite, verify_statement, Statement, WordFamily,
};
use seqinv_core::dfao::{kernel_machine, Dfao, SynthesisOptions};
use seqinv_core::field::Prime;
use seqinv_core::sequences::{c_terms, inverse_terms, sw_terms, terms, Method, SequenceId, TermBlock};
use seqinv_cli::config::RunConfig;
use seqinv_cli::oeis::{compare_oeis, read_bfile};
use seqinv_cli::reproduce::{all_hard_pass, Context as Suite, CRITERIA};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "seqinv", version, about = "Automatic sequences from algebraic power series over F_p")]
struct Cli {
    /// Plain `key = value` configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// CSV instead of JSON, where a table makes sense.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Terms {
        #[arg(long)]
        seq: SequenceId,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Synthesize the automaton of a sequence and print it.
    Automaton {
        #[arg(long)]
        seq: SequenceId,
        /// Term budget; defaults to the configured one for the prime.
        #[arg(long)]
        budget: Option<usize>,
        /// Recode to base p^j.
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Properties of a stored automaton.
    Analyze(Analyze),
    /// Decide a statement on product machines.
    Verify {
        /// Statement text, or `@path` to read it from a file.
        #[arg(long)]
        statement: String,
        /// `[NAME=]PATH`; unnamed machines bind to the statement's sequences in order.
        #[arg(long, required = true)]
        machine: Vec<String>,
        /// Also check by brute force for n below this.
        #[arg(long)]
        brute_below: Option<u64>,
    },
    /// Outputs along a pumped family of inputs, for every pump count.
    Family {
        #[arg(long)]
        machine: PathBuf,
        /// Most-significant-first pattern `HEAD,PUMP,TAIL`.
        #[arg(long, conflicts_with = "affine")]
        msd: Option<String>,
        /// `A,E,S,B` for `A·p^(E·k+S) + B`.
        #[arg(long, allow_hyphen_values = true)]
        affine: Option<String>,
        /// Offsets `i` of `a(f(k) + i)`, as `FROM..TO` (exclusive).
        #[arg(long, default_value = "0..1")]
        offsets: String,
    },
    /// Exact letter counts below a bound.
    Count {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long)]
        bound: u128,
    },
    /// Empirical checks of the open claims for a prime above 3.
    Probe {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        below: Option<u64>,
        #[arg(long)]
        terms: Option<usize>,
        /// Also try to build and describe the machine.
        #[arg(long)]
        with_machine: bool,
    },
    /// Compare an OEIS b-file with a sequence.
    Oeis {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        seq: SequenceId,
    },
    /// Convert a stored automaton between JSON and DOT.
    Export {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the whole reproduction suite and print one row per claim.
    ReproducePaper {
        /// Run only these criteria, e.g. `1,4,6`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Args)]
struct Analyze {
    #[arg(value_enum)]
    what: AnalyzeKind,
    /// Stored automaton (for sync, structure, bipartite).
    #[arg(long)]
    machine: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// Sequence scanned for runs.
    #[arg(long)]
    seq: Option<SequenceId>,
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeKind {
    Sync,
    Structure,
    Bipartite,
    Runs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recurrence,
    Newton,
    ReferenceInverse,
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

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            RunConfig::parse(&text)?
        }
        None => RunConfig::default(),
    };
    cfg.csv |= cli.csv;
    match cli.command {
        Command::Terms { seq, count, method } => {
            let t = term_block(seq, count, method)?;
            if cfg.csv {
                print!("{}", t.to_series().to_csv());
            } else {
                println!("{}", serde_json::to_string(&t.values)?);
            }
        }
        Command::Automaton { seq, budget, power, format, out } => {
            let p = seq.modulus();
            let mut opts = SynthesisOptions::for_prime(p)
                .with_budget(budget.unwrap_or(if p.get() == 5 { cfg.term_budget_p5 } else { cfg.term_budget }));
            opts.verify_below = cfg.verify_below.min(opts.term_budget as u64);
            let cert = kernel_machine(seq, &opts)?;
            eprintln!("{seq}: {} states, {}", cert.machine.len(), cert.construction);
            let a = if power > 1 { cert.machine.power_alphabet(power)? } else { cert.machine };
            emit(&render(&a, format), out.as_deref())?;
        }
        Command::Analyze(args) => analyze(args, &cfg)?,
        Command::Verify { statement, machine, brute_below } => {
            let text = match statement.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
                None => statement,
            };
            let s = Statement::parse(&text)?;
            let machines = bind_machines(&s, &machine)?;
            let verdict = verify_statement(&s, &machines)?;
            let brute = match brute_below {
                Some(upto) => Some(brute_check(&s, &machines, upto)?),
                None => None,
            };
            eprintln!("{}", if verdict.holds { "TRUE" } else { "FALSE" });
            #[derive(Serialize)]
            struct Out<'a> {
                statement: String,
                #[serde(flatten)]
                verdict: &'a seqinv_core::analysis::Verdict,
                brute_force_counterexample: Option<Option<u64>>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Out { statement: s.to_string(), verdict: &verdict, brute_force_counterexample: brute })?
            );
        }
        Command::Family { machine, msd, affine, offsets } => {
            let a = load_machine(&machine)?;
            let f = match (msd, affine) {
                (Some(m), None) => {
                    let parts: Vec<&str> = m.split(',').collect();
                    let [head, pump, tail] = parts[..] else { bail!("--msd expects HEAD,PUMP,TAIL") };
                    WordFamily::msd(a.radix(), head, pump, tail)?
                }
                (None, Some(s)) => {
                    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
                    let [x, e, s, b] = parts[..] else { bail!("--affine expects A,E,S,B") };
                    WordFamily::affine(a.radix(), x.parse()?, e.parse()?, s.parse()?, b.parse()?)?
                }
                _ => bail!("give exactly one of --msd and --affine"),
            };
            let (from, to) = offsets.split_once("..").context("--offsets expects FROM..TO")?;
            let (from, to): (i64, i64) = (from.trim().parse()?, to.trim().parse()?);
            #[derive(Serialize)]
            struct Row {
                offset: i64,
                #[serde(flatten)]
                verdict: seqinv_core::analysis::FamilyVerdict,
                constant: Option<u32>,
            }
            let mut rows = Vec::new();
            for i in from..to {
                let shifted = progression_automaton(&a, 1, i)?;
                let verdict = family_eval(&shifted.machine, &f)?;
                rows.push(Row { offset: i, constant: verdict.constant(), verdict });
            }
            if cfg.csv {
                let mut s = String::from("offset,preperiod,period,constant\n");
                for r in &rows {
                    let c = r.constant.map(|c| c.to_string()).unwrap_or_default();
                    writeln!(s, "{},{},{},{c}", r.offset, r.verdict.preperiod, r.verdict.period)?;
                }
                print!("{s}");
            } else {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            }
        }
        Command::Count { machine, bound } => {
            let a = load_machine(&machine)?;
            let counts: Vec<String> = count_outputs(&a, bound).iter().map(|c| c.to_string()).collect();
            if cfg.csv {
                print!("letter,count\n{}", counts.iter().enumerate().map(|(l, c)| format!("{l},{c}\n")).collect::<String>());
            } else {
                println!("{}", serde_json::json!({ "bound": bound.to_string(), "counts": counts }));
            }
        }
        Command::Probe { p, below, terms, with_machine } => {
            let p = Prime::new(p)?;
            let opts = SynthesisOptions::for_prime(p);
            let r = probe_conjectures(
                p,
                below.unwrap_or(cfg.probe_below),
                terms.unwrap_or(cfg.scan_terms),
                with_machine.then_some(&opts),
            )?;
            println!("{}", serde_json::to_string_pretty(&r)?);
        }
        Command::Oeis { bfile, seq } => {
            let b = read_bfile(&bfile)?;
            let count = b.entries.last().map_or(0, |&(i, _)| i as usize + 1);
            let cmp = compare_oeis(&b, &terms(seq, count)?);
            println!("{}", serde_json::to_string_pretty(&cmp)?);
            if !cmp.full_agreement() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Export { machine, format, out } => {
            let a = load_machine(&machine)?;
            emit(&render(&a, format), out.as_deref())?;
        }
        Command::ReproducePaper { only } => {
            let criteria: Vec<usize> = if only.is_empty() { (1..=CRITERIA).collect() } else { only };
            if let Some(&bad) = criteria.iter().find(|&&i| i == 0 || i > CRITERIA) {
                bail!("no criterion {bad}; they run from 1 to {CRITERIA}");
            }
            let csv = cfg.csv;
            let suite = Suite::new(cfg);
            let mut outcomes = Vec::new();
            for i in criteria {
                let o = suite.run(i);
                eprintln!("{}", o.line());
                outcomes.push(o);
            }
            if csv {
                let mut s = String::from("criterion,claim,hard,status,seconds\n");
                for o in &outcomes {
                    writeln!(s, "{},{},{},{},{:.2}", o.criterion, o.claim, o.hard, o.status, o.seconds)?;
                }
                print!("{s}");
            } else {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            }
            if !all_hard_pass(&outcomes) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn term_block(seq: SequenceId, count: usize, method: Option<MethodArg>) -> anyhow::Result<TermBlock> {
    Ok(match (seq, method) {
        (_, None) => terms(seq, count)?,
        (SequenceId::S(p), Some(MethodArg::Recurrence)) => sw_terms(p, count).0,
        (SequenceId::W(p), Some(MethodArg::Recurrence)) => sw_terms(p, count).1,
        (SequenceId::C(p), Some(MethodArg::Recurrence)) => c_terms(p, count, Method::Recurrence)?,
        (SequenceId::U | SequenceId::V, Some(MethodArg::ReferenceInverse)) => {
            inverse_terms(seq, count, Method::ReferenceInverse)?
        }
        (_, Some(MethodArg::Newton)) => terms(seq, count)?,
        (_, Some(_)) => bail!("that method does not produce {seq}"),
    })
}

fn analyze(args: Analyze, cfg: &RunConfig) -> anyhow::Result<()> {
    if let AnalyzeKind::Runs = args.what {
        let seq = args.seq.context("runs needs --seq")?;
        let t = terms(seq, args.count.unwrap_or(cfg.scan_terms))?;
        let stats = max_runs(&t.values, seq.modulus().get());
        if cfg.csv {
            let mut s = String::from("letter,length,first_at\n");
            for (l, r) in stats.letters.iter().enumerate() {
                writeln!(s, "{l},{},{}", r.length, r.first_at.map(|x| x.to_string()).unwrap_or_default())?;
            }
            print!("{s}");
        } else {
            println!("{}", serde_json::to_string_pretty(&stats)?);
        }
        return Ok(());
    }
    let a = load_machine(args.machine.as_deref().context("this analysis needs --machine")?)?;
    let json = match args.what {
        AnalyzeKind::Sync => serde_json::json!({
            "certificate": is_synchronizing(&a),
            "shortest": shortest_sync_words(&a, args.max_len),
        }),
        AnalyzeKind::Structure => {
            let r = structure_report(&a);
            serde_json::json!({ "level_sizes": r.level_sizes(), "report": r })
        }
        AnalyzeKind::Bipartite => match transition_bipartite(&a) {
            Some(b) => serde_json::json!({ "bipartite": true, "sizes": b.sizes, "initial_side": b.initial_side, "side": b.side }),
            None => serde_json::json!({ "bipartite": false }),
        },
        AnalyzeKind::Runs => unreachable!("handled above"),
    };
    println!("{}", serde_json::to_string_pretty(&json)?);
    Ok(())
}

fn load_machine(path: &Path) -> anyhow::Result<Dfao> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let a = if path.extension().is_some_and(|e| e == "dot") { Dfao::from_dot(&text) } else { Dfao::from_json(&text) };
    a.with_context(|| format!("parsing {}", path.display()))
}

fn render(a: &Dfao, format: Format) -> String {
    match format {
        Format::Json => a.to_json(),
        Format::Dot => a.to_dot(),
    }
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn bind_machines(s: &Statement, specs: &[String]) -> anyhow::Result<BTreeMap<String, Dfao>> {
    let mut names: Vec<String> = Vec::new();
    for t in s.terms()? {
        if !names.contains(&t.seq) {
            names.push(t.seq);
        }
    }
    let mut unbound = names.iter();
    let mut machines = BTreeMap::new();
    for spec in specs {
        let (name, path) = match spec.split_once('=') {
            Some((n, p)) => (n.to_string(), p),
            None => (unbound.next().context("more machines than sequences in the statement")?.clone(), spec.as_str()),
        };
        machines.insert(name, load_machine(Path::new(path))?);
    }
    if let Some(missing) = names.iter().find(|n| !machines.contains_key(*n)) {
        bail!("no machine for sequence `{missing}`");
    }
    Ok(machines)
}

/// Brute force with the machines themselves as oracles.
fn brute_check(s: &Statement, machines: &BTreeMap<String, Dfao>, upto: u64) -> anyhow::Result<Option<u64>> {
    let span = s.terms()?.iter().map(|t| t.multiplier.max(0) as u64 * upto + t.offset.max(0) as u64 + 1).max().unwrap_or(0);
    let oracles = machines
        .iter()
        .map(|(k, a)| {
            let values = (0..span as u128).map(|n| a.evaluate(n).value()).collect();
            (k.clone(), (values, a.modulus().get()))
        })
        .collect();
    Ok(seqinv_core::analysis::brute_force(s, &oracles, upto)?)
}
