//! Command line front end.
//!
//! One thin binary wraps the library: every subcommand parses
//! arguments, calls one library entry point, and renders rows or a
//! report. Exit code 0 means the run found no violations, 1 means a
//! scan reported violations (or an extraction failed verification),
//! and 2 means the invocation itself failed.
//!
//! Relative paths passed to `--out`, `--save-checkpoint` and
//! `--resume` are resolved against the directory named by the
//! `TWINWALK_OUT_DIR` environment variable when it is set.

pub mod checkpoint;
pub mod format;

use std::env;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    find_fundamental_points, records_coincide, segment_stats, verify_atilde_lemmas,
    verify_conjecture, verify_minor_tail_bounds, verify_observation, StandardClassifier,
};
use crate::arith::is_twin_greater;
use crate::error::{Error, Result};
use crate::fastwalk::{fast_events, verify_fast_equivalence, verify_lemma_deltas};
use crate::postulate::{minimal_witnesses_all, verify_witness_inequality, WitnessSearch};
use crate::report::Report;
use crate::sequences::{generate, EventStream, ParamParity, SequenceRule};
use crate::twinrule::{is_twin_greater_by_criterion_with, twin_from_m_with};
use checkpoint::Checkpoint;
use format::{write_event, write_event_header, write_value_line, OutputFormat};

/// Environment variable naming the base directory for relative output
/// and checkpoint paths.
pub const OUT_DIR_ENV: &str = "TWINWALK_OUT_DIR";

/// All ids accepted by `verify`, in the order `verify all` runs them.
pub const ALL_CHECKS: [&str; 13] = [
    "obs1",
    "obs2",
    "obs3",
    "obs4",
    "obs5",
    "obs6",
    "conj1",
    "conj2",
    "tail-bounds",
    "atilde-lemmas",
    "walk-deltas",
    "fast-oracle",
    "coincide",
];

#[derive(Debug, Parser)]
#[command(
    name = "twinwalk",
    version,
    about = "Gcd-driven recurrences, their increment structure, and twin prime extraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqArg {
    Ctilde,
    C,
    F,
    G,
    H,
    I,
    Atilde,
    /// Parameterized family; requires --m.
    CtildeParam,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    /// gcd(n, .) couples to even n; the exact-criterion convention.
    EvenN,
    /// gcd(n, .) couples to odd n; the extraction convention.
    OddN,
}

impl From<ParityArg> for ParamParity {
    fn from(p: ParityArg) -> ParamParity {
        match p {
            ParityArg::EvenN => ParamParity::EvenN,
            ParityArg::OddN => ParamParity::OddN,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct RuleArgs {
    /// Sequence family to run.
    #[arg(long, value_enum)]
    seq: Option<SeqArg>,
    /// Parameter for the parameterized family.
    #[arg(long)]
    m: Option<u64>,
    /// Parity convention for the parameterized family.
    #[arg(long, value_enum)]
    parity: Option<ParityArg>,
}

impl RuleArgs {
    /// The rule these arguments name, if any were given.
    fn rule(&self) -> Result<Option<SequenceRule>> {
        let Some(seq) = self.seq else {
            if self.m.is_some() || self.parity.is_some() {
                return Err(Error::Usage(
                    "--m and --parity need --seq ctilde-param".into(),
                ));
            }
            return Ok(None);
        };
        if seq != SeqArg::CtildeParam && (self.m.is_some() || self.parity.is_some()) {
            return Err(Error::Usage(
                "--m and --parity only apply to --seq ctilde-param".into(),
            ));
        }
        Ok(Some(match seq {
            SeqArg::Ctilde => SequenceRule::ctilde(),
            SeqArg::C => SequenceRule::c(),
            SeqArg::F => SequenceRule::f(),
            SeqArg::G => SequenceRule::g(),
            SeqArg::H => SequenceRule::h(),
            SeqArg::I => SequenceRule::i(),
            SeqArg::Atilde => SequenceRule::atilde(),
            SeqArg::CtildeParam => {
                let m = self.m.ok_or_else(|| {
                    Error::Usage("--seq ctilde-param requires --m".into())
                })?;
                let parity = self.parity.map_or_else(ParamParity::default, Into::into);
                SequenceRule::ctilde_param_with(m, parity)?
            }
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessMode {
    /// Deciding divisor exactly the prime.
    Exact,
    /// Deciding divisor at least the prime.
    Geq,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream a sequence as classified increment events or plain values.
    Gen {
        #[command(flatten)]
        rule: RuleArgs,
        /// Last index to generate.
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Write rows here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a resumable checkpoint after the run.
        #[arg(long)]
        save_checkpoint: Option<PathBuf>,
        /// Continue from a checkpoint written by an earlier run.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Stream record increments (each strictly above all earlier ones).
    Records {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        max: u64,
        /// Only print records at least this large.
        #[arg(long, default_value_t = 1)]
        min_delta: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        save_checkpoint: Option<PathBuf>,
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// List fundamental points and their twin prime candidates.
    Fundamentals {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-segment minor increment statistics between fundamental points.
    Segments {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run falsification scans: obs1..obs6, conj1, conj2, tail-bounds,
    /// atilde-lemmas, walk-deltas, fast-oracle, coincide, or all.
    Verify {
        /// Check id, or `all`.
        target: String,
        /// Scan ceiling.
        #[arg(long, default_value_t = 100_000)]
        max: u64,
        /// Run independent checks on separate threads.
        #[arg(long)]
        parallel: bool,
    },
    /// Stream nontrivial atilde events from the accelerated walk.
    Fast {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Instead of streaming, replay the naive sequence and report
        /// any divergence.
        #[arg(long)]
        oracle: bool,
    },
    /// Extract a twin prime candidate from one parameter.
    TwinFrom {
        m: u64,
        /// Parity convention; defaults to odd-n, the extraction
        /// convention.
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        /// Output style.
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Decide twin primality of (m - 2, m) from the increment pattern.
    Criterion {
        m: u64,
        /// Parity convention; defaults to even-n, under which the
        /// verdict is exact.
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
    },
    /// Minimal witnesses for the least-prime-divisor partition.
    Postulate {
        /// Largest prime to find witnesses for.
        #[arg(long, default_value_t = 47)]
        limit_p: u64,
        #[arg(long, value_enum, default_value_t = WitnessMode::Exact)]
        mode: WitnessMode,
        /// Largest even number the searches may examine.
        #[arg(long, default_value_t = 4_000_000)]
        search_limit: u64,
        /// Also verify max(N1, N2) < min(N1, N2)^2 for every prime and
        /// exit nonzero on failure.
        #[arg(long)]
        check_inequality: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the records above 7 of ctilde and f.
    Coincide {
        #[arg(long, default_value_t = 100_000)]
        max: u64,
    },
}

/// Parses arguments and runs; the binary's whole main function.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(base) = env::var_os(OUT_DIR_ENV) {
            return PathBuf::from(base).join(path);
        }
    }
    path.to_path_buf()
}

fn out_writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => {
            let resolved = resolve_path(path);
            let file = fs::File::create(&resolved).map_err(|source| Error::Io {
                path: resolved,
                source,
            })?;
            Ok(Box::new(io::BufWriter::new(file)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout().lock()))),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<output>"),
        source: e,
    }
}

/// A classified stream plus the running state a checkpoint persists.
struct OpenStream {
    stream: EventStream<StandardClassifier>,
    record_max: u64,
    /// False when resuming: the cold-start header and seed line were
    /// already written by the run that made the checkpoint.
    cold: bool,
}

fn open_stream(rule_args: &RuleArgs, resume: &Option<PathBuf>, max: u64) -> Result<OpenStream> {
    match resume {
        Some(path) => {
            let cp = Checkpoint::load(&resolve_path(path))?;
            let rule = cp.rule.to_rule()?;
            if let Some(requested) = rule_args.rule()? {
                if requested != rule {
                    return Err(Error::CheckpointRuleMismatch {
                        found: rule.to_string(),
                        requested: requested.to_string(),
                    });
                }
            }
            let classifier = StandardClassifier::with_state(rule, cp.last_fundamental);
            Ok(OpenStream {
                stream: EventStream::resume(rule, cp.n, cp.value, max, classifier),
                record_max: cp.record_max,
                cold: false,
            })
        }
        None => {
            let rule = rule_args.rule()?.ok_or_else(|| {
                Error::Usage("--seq is required unless --resume is given".into())
            })?;
            Ok(OpenStream {
                stream: generate(rule, max),
                record_max: 0,
                cold: true,
            })
        }
    }
}

fn save_checkpoint(path: &Path, open: &OpenStream) -> Result<()> {
    let (n, value) = open.stream.position();
    Checkpoint::capture(
        open.stream.rule(),
        n,
        value,
        open.record_max,
        open.stream.classifier().last_fundamental(),
    )
    .save(&resolve_path(path))
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Gen {
            rule,
            max,
            format,
            out,
            save_checkpoint: save,
            resume,
        } => cmd_gen(&rule, max, format, &out, &save, &resume),
        Command::Records {
            rule,
            max,
            min_delta,
            format,
            out,
            save_checkpoint: save,
            resume,
        } => cmd_records(&rule, max, min_delta, format, &out, &save, &resume),
        Command::Fundamentals {
            rule,
            max,
            format,
            out,
        } => cmd_fundamentals(&rule, max, format, &out),
        Command::Segments {
            rule,
            max,
            format,
            out,
        } => cmd_segments(&rule, max, format, &out),
        Command::Verify {
            target,
            max,
            parallel,
        } => cmd_verify(&target, max, parallel),
        Command::Fast {
            max,
            format,
            out,
            oracle,
        } => cmd_fast(max, format, &out, oracle),
        Command::TwinFrom { m, parity, format } => cmd_twin_from(m, parity, format),
        Command::Criterion { m, parity } => cmd_criterion(m, parity),
        Command::Postulate {
            limit_p,
            mode,
            search_limit,
            check_inequality,
            format,
            out,
        } => cmd_postulate(limit_p, mode, search_limit, check_inequality, format, &out),
        Command::Coincide { max } => cmd_coincide(max),
    }
}

fn cmd_gen(
    rule_args: &RuleArgs,
    max: u64,
    format: OutputFormat,
    out: &Option<PathBuf>,
    save: &Option<PathBuf>,
    resume: &Option<PathBuf>,
) -> Result<u8> {
    let mut open = open_stream(rule_args, resume, max)?;
    let mut w = out_writer(out)?;
    if open.cold {
        write_event_header(&mut w, format).map_err(io_err)?;
        if format == OutputFormat::Bfile {
            let rule = open.stream.rule();
            if rule.start_index() <= max {
                write_value_line(&mut w, rule.start_index(), rule.start_value())
                    .map_err(io_err)?;
            }
        }
    }
    while let Some(e) = open.stream.next() {
        open.record_max = open.record_max.max(e.delta);
        write_event(&mut w, &e, format).map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    if let Some(path) = save {
        save_checkpoint(path, &open)?;
    }
    Ok(0)
}

fn cmd_records(
    rule_args: &RuleArgs,
    max: u64,
    min_delta: u64,
    format: OutputFormat,
    out: &Option<PathBuf>,
    save: &Option<PathBuf>,
    resume: &Option<PathBuf>,
) -> Result<u8> {
    if format == OutputFormat::Bfile {
        return Err(Error::Usage("records are not a plain value stream".into()));
    }
    let mut open = open_stream(rule_args, resume, max)?;
    let mut w = out_writer(out)?;
    if open.cold && format == OutputFormat::Csv {
        writeln!(w, "n,delta,twin_greater").map_err(io_err)?;
    }
    while let Some(e) = open.stream.next() {
        if e.delta <= open.record_max {
            continue;
        }
        open.record_max = e.delta;
        if e.delta < min_delta {
            continue;
        }
        let twin = is_twin_greater(e.delta);
        match format {
            OutputFormat::Csv => writeln!(w, "{},{},{}", e.n, e.delta, twin).map_err(io_err)?,
            OutputFormat::Jsonl => writeln!(
                w,
                "{}",
                serde_json::json!({ "n": e.n, "delta": e.delta, "twin_greater": twin })
            )
            .map_err(io_err)?,
            OutputFormat::Bfile => unreachable!(),
        }
    }
    w.flush().map_err(io_err)?;
    if let Some(path) = save {
        save_checkpoint(path, &open)?;
    }
    Ok(0)
}

fn cmd_fundamentals(
    rule_args: &RuleArgs,
    max: u64,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<u8> {
    let rule = rule_args
        .rule()?
        .ok_or_else(|| Error::Usage("--seq is required".into()))?;
    let points = find_fundamental_points(rule, max)?;
    let mut w = out_writer(out)?;
    match format {
        OutputFormat::Csv => {
            writeln!(w, "m,twin_lo,twin_hi,twin_verified").map_err(io_err)?;
            for p in points {
                writeln!(
                    w,
                    "{},{},{},{}",
                    p.m, p.twin_candidate.0, p.twin_candidate.1, p.twin_verified
                )
                .map_err(io_err)?;
            }
        }
        OutputFormat::Jsonl => {
            for p in points {
                writeln!(
                    w,
                    "{}",
                    serde_json::json!({
                        "m": p.m,
                        "twin_candidate": [p.twin_candidate.0, p.twin_candidate.1],
                        "twin_verified": p.twin_verified,
                    })
                )
                .map_err(io_err)?;
            }
        }
        OutputFormat::Bfile => {
            return Err(Error::Usage(
                "fundamental points are not a plain value stream".into(),
            ))
        }
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}

fn cmd_segments(
    rule_args: &RuleArgs,
    max: u64,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<u8> {
    let rule = rule_args
        .rule()?
        .ok_or_else(|| Error::Usage("--seq is required".into()))?;
    let segments = segment_stats(rule, max)?;
    let mut w = out_writer(out)?;
    match format {
        OutputFormat::Csv => {
            writeln!(w, "m_lo,m_hi,minor_count,minor_sum,offsets").map_err(io_err)?;
            for s in segments {
                let offsets = s
                    .offsets
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    s.m_lo, s.m_hi, s.minor_count, s.minor_sum, offsets
                )
                .map_err(io_err)?;
            }
        }
        OutputFormat::Jsonl => {
            for s in segments {
                writeln!(
                    w,
                    "{}",
                    serde_json::json!({
                        "m_lo": s.m_lo,
                        "m_hi": s.m_hi,
                        "minor_count": s.minor_count,
                        "minor_sum": s.minor_sum,
                        "offsets": s.offsets,
                    })
                )
                .map_err(io_err)?;
            }
        }
        OutputFormat::Bfile => {
            return Err(Error::Usage("segments are not a plain value stream".into()))
        }
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}

/// Runs one named check. The ids mirror [`ALL_CHECKS`].
pub fn run_check(id: &str, max: u64) -> Result<Report> {
    match id {
        "obs1" => verify_observation(1, max),
        "obs2" => verify_observation(2, max),
        "obs3" => verify_observation(3, max),
        "obs4" => verify_observation(4, max),
        "obs5" => verify_observation(5, max),
        "obs6" => verify_observation(6, max),
        "conj1" => verify_conjecture(1, max),
        "conj2" => verify_conjecture(2, max),
        "tail-bounds" => verify_minor_tail_bounds(max),
        "atilde-lemmas" => Ok(verify_atilde_lemmas(max)),
        "walk-deltas" => Ok(verify_lemma_deltas(max)),
        "fast-oracle" => Ok(verify_fast_equivalence(max)),
        "coincide" => Ok(records_coincide(max)),
        other => Err(Error::UnknownCheck { id: other.into() }),
    }
}

fn cmd_verify(target: &str, max: u64, parallel: bool) -> Result<u8> {
    let targets: Vec<&str> = if target == "all" {
        ALL_CHECKS.to_vec()
    } else if ALL_CHECKS.contains(&target) {
        vec![target]
    } else {
        return Err(Error::UnknownCheck { id: target.into() });
    };

    let reports: Vec<Result<Report>> = if parallel && targets.len() > 1 {
        thread::scope(|scope| {
            let handles: Vec<_> = targets
                .iter()
                .map(|&id| scope.spawn(move || run_check(id, max)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check thread panicked"))
                .collect()
        })
    } else {
        targets.iter().map(|&id| run_check(id, max)).collect()
    };

    let mut clean = true;
    let stdout = io::stdout();
    let mut w = stdout.lock();
    for report in reports {
        let report = report?;
        clean &= report.is_clean();
        writeln!(w, "{report}").map_err(io_err)?;
    }
    writeln!(
        w,
        "overall: {}",
        if clean { "clean" } else { "violations found" }
    )
    .map_err(io_err)?;
    Ok(u8::from(!clean))
}

fn cmd_fast(max: u64, format: OutputFormat, out: &Option<PathBuf>, oracle: bool) -> Result<u8> {
    if oracle {
        let report = verify_fast_equivalence(max);
        println!("{report}");
        return Ok(u8::from(!report.is_clean()));
    }
    if format == OutputFormat::Bfile {
        return Err(Error::Usage(
            "the accelerated walk emits events, not a plain value stream".into(),
        ));
    }
    let mut w = out_writer(out)?;
    write_event_header(&mut w, format).map_err(io_err)?;
    for e in fast_events(max) {
        write_event(&mut w, &e, format).map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}

fn cmd_twin_from(m: u64, parity: Option<ParityArg>, format: TextOrJson) -> Result<u8> {
    let parity = parity.map_or_else(ParamParity::default, Into::into);
    let t = twin_from_m_with(m, parity)?;
    if format == TextOrJson::Json {
        println!(
            "{}",
            serde_json::json!({
                "m": t.m,
                "n_star": t.n_star,
                "value": t.value,
                "pair": [t.pair.0, t.pair.1],
                "verified": t.verified,
            })
        );
    } else {
        println!(
            "m = {}: last nontrivial increment at n = {} reaching {}, pair ({}, {}), verified: {}",
            t.m, t.n_star, t.value, t.pair.0, t.pair.1, t.verified
        );
    }
    Ok(u8::from(!t.verified))
}

fn cmd_criterion(m: u64, parity: Option<ParityArg>) -> Result<u8> {
    let parity = parity.map_or(ParamParity::EvenN, Into::into);
    let verdict = is_twin_greater_by_criterion_with(m, parity)?;
    println!("{verdict}");
    Ok(0)
}

fn cmd_postulate(
    limit_p: u64,
    mode: WitnessMode,
    search_limit: u64,
    check_inequality: bool,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<u8> {
    if format == OutputFormat::Bfile {
        return Err(Error::Usage("witnesses are not a plain value stream".into()));
    }
    let exact = mode == WitnessMode::Exact;
    let searches = minimal_witnesses_all(limit_p, exact, search_limit)?;
    let mut w = out_writer(out)?;
    if format == OutputFormat::Csv {
        writeln!(w, "p,n1,n2,inequality_holds").map_err(io_err)?;
    }
    let cell = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
    for search in &searches {
        match *search {
            WitnessSearch::Found(wit) => match format {
                OutputFormat::Csv => writeln!(
                    w,
                    "{},{},{},{}",
                    wit.p, wit.n1, wit.n2, wit.inequality_holds
                )
                .map_err(io_err)?,
                OutputFormat::Jsonl => writeln!(
                    w,
                    "{}",
                    serde_json::json!({
                        "p": wit.p,
                        "n1": wit.n1,
                        "n2": wit.n2,
                        "inequality_holds": wit.inequality_holds,
                    })
                )
                .map_err(io_err)?,
                OutputFormat::Bfile => unreachable!(),
            },
            WitnessSearch::Exhausted { p, n1, n2, .. } => match format {
                OutputFormat::Csv => {
                    writeln!(w, "{},{},{},", p, cell(n1), cell(n2)).map_err(io_err)?
                }
                OutputFormat::Jsonl => writeln!(
                    w,
                    "{}",
                    serde_json::json!({ "p": p, "n1": n1, "n2": n2, "inequality_holds": null })
                )
                .map_err(io_err)?,
                OutputFormat::Bfile => unreachable!(),
            },
        }
    }
    w.flush().map_err(io_err)?;
    if check_inequality {
        let report = verify_witness_inequality(limit_p, exact, search_limit)?;
        println!("{report}");
        return Ok(u8::from(!report.is_clean()));
    }
    Ok(0)
}

fn cmd_coincide(max: u64) -> Result<u8> {
    let report = records_coincide(max);
    println!("{report}");
    Ok(u8::from(!report.is_clean()))
}
