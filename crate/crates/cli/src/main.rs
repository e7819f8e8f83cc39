use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use seqlab::analysis::{expression_prime_search, lipschitz_probe, lucky_cancellations, FunctionId};
use seqlab::concat::{
    g_addon, power_and_2p_scan, prime_digital_stream, prime_rank_scan, GeneratorSpec, HitClass,
};
use seqlab::dynamics::{census, census_with_jobs, orbit, MapKind, MapSpec};
use seqlab::numerics::{DigitString, PrimalityConfig, DEFAULT_ROUNDS, DEFAULT_SEED};
use seqlab::progressions::{erdos_smarandache, nap_sequence, nary_sieve, SieveSchedule};
use seqlab::spds::{pattern_search, spds_enumerate};
use seqlab::verify::{run_suite, Suite};
use seqlab_cli::bfile::format_bfile;

#[derive(Parser)]
#[command(
    name = "seqlab",
    version,
    about = "Integer sequences, digit maps and their censuses"
)]
struct Cli {
    /// Seed for probabilistic primality rounds.
    #[arg(long, global = true, env = "SEQLAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for censuses and scans (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bfile,
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the first terms of a sequence.
    Gen(GenArgs),
    /// Orbit of one start value under a digit map.
    Orbit(OrbitArgs),
    /// Classify every start in a range by the cycle it falls into.
    Census(CensusArgs),
    /// Searches over sequences and expressions.
    Search {
        #[command(subcommand)]
        what: Search,
    },
    /// Check published values and brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    OddAddon,
    EvenAddon,
    PrimeAddon,
    PrimeDigital,
    Nap,
    NarySieve,
    ErdosSmarandache,
    Spds,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleArg {
    KeepKDropOne,
    KeepKSkipBlock,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// Forbidden progression length for `nap`.
    #[arg(long, default_value_t = 3)]
    t: usize,
    #[arg(long, value_enum, default_value_t = ScheduleArg::KeepKDropOne)]
    schedule: ScheduleArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    ReverseSubtract,
    SubtractConst,
    DigitMultiply,
    MixedCompose,
}

impl From<MapArg> for MapKind {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::ReverseSubtract => MapKind::ReverseSubtract,
            MapArg::SubtractConst => MapKind::SubtractConst,
            MapArg::DigitMultiply => MapKind::DigitMultiply,
            MapArg::MixedCompose => MapKind::MixedCompose,
        }
    }
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(value_enum)]
    map: MapArg,
    #[arg(long)]
    start: String,
    /// Digit width; defaults to the length of --start as written.
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    c: Option<u64>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(value_enum)]
    map: MapArg,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    c: Option<u64>,
    /// Defaults to the smallest value with `width` digits.
    #[arg(long)]
    lo: Option<u64>,
    #[arg(long)]
    hi: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AddonFamily {
    Odd,
    Even,
    Prime,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionArg {
    S1,
    S2,
    S3,
    Fs,
    Theta,
    ThetaBar,
}

#[derive(Subcommand)]
enum Search {
    /// Ranks of prime or probable-prime add-on terms.
    AddonPrimes {
        #[arg(long, value_enum, default_value_t = AddonFamily::Odd)]
        family: AddonFamily,
        #[arg(long, default_value_t = 200)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_ROUNDS)]
        rounds: u32,
    },
    /// Perfect powers and 2p forms among even add-on terms.
    EvenForms {
        #[arg(long, default_value_t = 200)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_ROUNDS)]
        rounds: u32,
    },
    /// Primes of the form x1^x2 + x2^x3 + … + xn^x1.
    ExpressionPrimes {
        #[arg(long, default_value_t = 10)]
        max_base: u64,
        #[arg(long, default_value_t = 2)]
        length: usize,
        #[arg(long, default_value_t = DEFAULT_ROUNDS)]
        rounds: u32,
    },
    /// Two-digit fractions that survive a wrong digit cancellation.
    LuckyFractions,
    /// Square-partitionable squares containing a digit pattern.
    SpdsPattern {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 1000)]
        root_limit: u64,
    },
    /// Largest jump |f(n+1) − f(n)| over a range.
    Lipschitz {
        #[arg(long, value_enum)]
        function: FunctionArg,
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
    Oracles,
    All,
}

/// Errors here become exit code 2; a failed verification is exit code 1.
enum Outcome {
    Done,
    VerifyFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerifyFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("seqlab: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, v: &Value) -> anyhow::Result<()> {
    emit(cli, &(serde_json::to_string_pretty(v)? + "\n"))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .context("starting worker threads")?;
    }
    match &cli.cmd {
        Command::Gen(a) => gen(cli, a)?,
        Command::Orbit(a) => orbit_cmd(cli, a)?,
        Command::Census(a) => census_cmd(cli, a)?,
        Command::Search { what } => search(cli, what)?,
        Command::Verify { suite } => return verify(cli, *suite),
    }
    Ok(Outcome::Done)
}

fn generate(a: &GenArgs) -> anyhow::Result<Vec<BigUint>> {
    let n = a.count;
    if n == 0 {
        bail!("--count must be at least 1");
    }
    let small = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect::<Vec<_>>();
    Ok(match a.family {
        Family::OddAddon => g_addon(&GeneratorSpec::Odd, n)?,
        Family::EvenAddon => g_addon(&GeneratorSpec::Even, n)?,
        Family::PrimeAddon => g_addon(&GeneratorSpec::Prime, n)?,
        Family::PrimeDigital => prime_digital_stream(n)?,
        Family::Nap => small(nap_sequence(a.t, n)?),
        Family::NarySieve => {
            let schedule = match a.schedule {
                ScheduleArg::KeepKDropOne => SieveSchedule::KeepKDropOne,
                ScheduleArg::KeepKSkipBlock => SieveSchedule::KeepKSkipBlock,
            };
            small(nary_sieve(n, schedule)?)
        }
        Family::ErdosSmarandache => {
            // the density is high, so a couple of doublings suffice
            let mut limit = 2 * n as u64 + 16;
            loop {
                let v = erdos_smarandache(limit)?;
                if v.len() >= n {
                    break small(v[..n].to_vec());
                }
                limit *= 2;
            }
        }
        Family::Spds => {
            let mut roots = 64u64.max(8 * n as u64);
            loop {
                let v = spds_enumerate(roots)?;
                if v.len() >= n {
                    break v[..n].to_vec();
                }
                roots *= 2;
            }
        }
    })
}

fn gen(cli: &Cli, a: &GenArgs) -> anyhow::Result<()> {
    let terms = generate(a)?;
    let family = a
        .family
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let text = match cli.format.unwrap_or(Format::Bfile) {
        Format::Bfile => format_bfile(&terms),
        Format::Csv => {
            let mut s = String::from("index,value\n");
            for (i, t) in terms.iter().enumerate() {
                s.push_str(&format!("{},{t}\n", i + 1));
            }
            s
        }
        Format::Text => {
            terms
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        }
        Format::Json => {
            let terms: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            serde_json::to_string_pretty(
                &json!({ "family": family, "count": terms.len(), "terms": terms }),
            )? + "\n"
        }
    };
    emit(cli, &text)
}

fn map_spec(map: MapArg, width: Option<usize>, c: Option<u64>) -> anyhow::Result<MapSpec> {
    let kind = MapKind::from(map);
    let width = match (kind, width) {
        (MapKind::MixedCompose, None) => 2,
        (_, Some(w)) => w,
        (_, None) => bail!("--width is required for {kind}"),
    };
    Ok(MapSpec::new(kind, width, c)?)
}

fn orbit_cmd(cli: &Cli, a: &OrbitArgs) -> anyhow::Result<()> {
    let digits = DigitString::parse(&a.start)?;
    let width = a.width.unwrap_or(digits.width());
    let m = map_spec(a.map, Some(width), a.c)?;
    let start = DigitString::from_value(digits.value(), width)?;
    let r = orbit(&m, &start)?;
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => emit_json(
            cli,
            &json!({
                "map": m,
                "start": r.start,
                "tail_len": r.tail_len,
                "cycle": r.cycle,
                "cycle_len": r.cycle_len(),
                "steps": r.steps,
                "terminated_zero": r.terminated_zero,
            }),
        ),
        Format::Text => {
            let padded: Vec<String> = r.steps.iter().map(|v| format!("{v:0width$}")).collect();
            emit(
                cli,
                &format!(
                    "{}\ntail {} cycle {:?}\n",
                    padded.join(" "),
                    r.tail_len,
                    r.cycle
                ),
            )
        }
        _ => bail!("orbit supports --format json or text"),
    }
}

fn census_cmd(cli: &Cli, a: &CensusArgs) -> anyhow::Result<()> {
    let m = map_spec(a.map, a.width, a.c)?;
    let (min, max) = m.value_bounds();
    let first_full = match m.kind() {
        MapKind::MixedCompose => min,
        _ => 10u64.pow(m.width() as u32 - 1).max(min),
    };
    let lo = a.lo.unwrap_or(first_full);
    let hi = a.hi.unwrap_or(max);
    let rep = match cli.jobs {
        Some(j) => census_with_jobs(&m, lo, hi, j as usize)?,
        None => census(&m, lo, hi)?,
    };
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut v = serde_json::to_value(&rep)?;
            // orbit length up to and including the first repeated term
            if let (Some((terms, start)), Some(obj)) = (rep.longest_transient(), v.as_object_mut())
            {
                obj.insert(
                    "longest_transient".into(),
                    json!({ "terms": terms, "start": start }),
                );
            }
            emit_json(cli, &v)
        }
        Format::Text => {
            let mut s = format!(
                "{m} on {lo}..={hi}: {} starts, {} reach 0\n",
                rep.total, rep.zero_count
            );
            for c in &rep.classes {
                s.push_str(&format!(
                    "  len {:>3}  members {:>7}  max tail {:>3} at {}  {:?}\n",
                    c.cycle.len(),
                    c.members,
                    c.max_tail,
                    c.max_tail_start,
                    c.cycle
                ));
            }
            emit(cli, &s)
        }
        _ => bail!("census supports --format json or text"),
    }
}

fn hit_json(class: &HitClass) -> Value {
    match class {
        HitClass::Prime => json!({ "kind": "prime" }),
        HitClass::ProbablePrime => json!({ "kind": "probable-prime" }),
        HitClass::PerfectPower { base, exponent } => {
            json!({ "kind": "perfect-power", "base": base.to_string(), "exponent": exponent })
        }
        HitClass::TwoP { q_kind } => json!({ "kind": "two-p", "q": q_kind }),
    }
}

fn search(cli: &Cli, what: &Search) -> anyhow::Result<()> {
    let v = match what {
        Search::AddonPrimes {
            family,
            limit,
            rounds,
        } => {
            let g = match family {
                AddonFamily::Odd => GeneratorSpec::Odd,
                AddonFamily::Even => GeneratorSpec::Even,
                AddonFamily::Prime => GeneratorSpec::Prime,
            };
            let rep = prime_rank_scan(&g, *limit, &PrimalityConfig::new(*rounds, cli.seed))?;
            json!({
                "family": g.name(),
                "limit": limit,
                "rounds": rounds,
                "seed": cli.seed,
                "hits": rep.hits.iter().map(|h| json!({
                    "rank": h.rank, "digits": h.digits, "class": hit_json(&h.class)
                })).collect::<Vec<_>>(),
            })
        }
        Search::EvenForms { limit, rounds } => {
            let rep = power_and_2p_scan(*limit, &PrimalityConfig::new(*rounds, cli.seed))?;
            json!({
                "limit": limit,
                "hits": rep.hits.iter().map(|h| json!({
                    "rank": h.rank, "digits": h.digits, "class": hit_json(&h.class)
                })).collect::<Vec<_>>(),
            })
        }
        Search::ExpressionPrimes {
            max_base,
            length,
            rounds,
        } => {
            let hits = expression_prime_search(
                *max_base,
                *length,
                &PrimalityConfig::new(*rounds, cli.seed),
            )?;
            json!({
                "max_base": max_base,
                "length": length,
                "hits": hits.iter().map(|h| json!({
                    "xs": h.xs, "value": h.value.to_string(), "verdict": h.verdict.kind
                })).collect::<Vec<_>>(),
            })
        }
        Search::LuckyFractions => {
            let v = lucky_cancellations(2)?;
            json!(v
                .iter()
                .map(|f| json!({ "a": f.a, "b": f.b, "reduced": f.reduced.to_string() }))
                .collect::<Vec<_>>())
        }
        Search::SpdsPattern {
            pattern,
            root_limit,
        } => {
            let v = pattern_search(pattern, *root_limit)?;
            json!(v.iter().map(|n| n.to_string()).collect::<Vec<_>>())
        }
        Search::Lipschitz { function, lo, hi } => {
            let f = match function {
                FunctionArg::S1 => FunctionId::S1,
                FunctionArg::S2 => FunctionId::S2,
                FunctionArg::S3 => FunctionId::S3,
                FunctionArg::Fs => FunctionId::Fs,
                FunctionArg::Theta => FunctionId::Theta,
                FunctionArg::ThetaBar => FunctionId::ThetaBar,
            };
            let p = lipschitz_probe(f, *lo, *hi)?;
            json!({ "max_diff": p.max_diff.to_string(), "argmax": p.argmax })
        }
    };
    emit_json(cli, &v)
}

fn verify(cli: &Cli, suite: SuiteArg) -> anyhow::Result<Outcome> {
    let suite = match suite {
        SuiteArg::Paper => Suite::Paper,
        SuiteArg::Oracles => Suite::Oracles,
        SuiteArg::All => Suite::All,
    };
    let report = run_suite(suite, &PrimalityConfig::new(DEFAULT_ROUNDS, cli.seed))?;
    match cli.format.unwrap_or(Format::Text) {
        Format::Json => emit_json(cli, &serde_json::to_value(&report)?)?,
        _ => emit(cli, &format!("{report}\n"))?,
    }
    Ok(if report.passed() {
        Outcome::Done
    } else {
        Outcome::VerifyFailed
    })
}
