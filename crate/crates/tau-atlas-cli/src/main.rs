use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};
use serde_json::{json, Value};

use tau_atlas::gamma::{build_image, gamma_records, GammaContext};
use tau_atlas::ideal::{ideal_of_gen_word, ideal_summands, tilt_enumerate_threads};
use tau_atlas::rep::IsoOptions;
use tau_atlas::stt::{describe_pair, enumerate_stt, StructuralAtlas};
use tau_atlas::symgroup::{canonical_reduced_word, evaluate_word, parse_permutation, parse_word, weak_left_hasse};
use tau_atlas::verify::{verify_all, VerifyOptions};
use tau_atlas::{build_auslander, AtlasError, GenWord, HassePoset, Permutation};

#[derive(Parser)]
#[command(
    name = "tau-atlas",
    version,
    about = "Tilting and support tau-tilting modules over the Auslander algebra of K[x]/(x^n)"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Nilpotency index of x.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Field size (prime).
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the sampled isomorphism search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "TAU_ATLAS_THREADS", default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordKind {
    Word,
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Poset {
    Weak,
    Tilt,
    Stt,
    Gamma,
}

#[derive(Args)]
struct WordArg {
    /// Comma-separated letters such as 1,2,1, or a permutation such as [3,1,2].
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long = "as", value_enum, default_value_t = WordKind::Word)]
    kind: WordKind,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate tilting modules I(w), w in S_n.
    Tilt,
    /// Enumerate support tau-tilting pairs.
    Stt,
    /// The ideal I(w) for w in S_n.
    Ideal(WordArg),
    /// The support tau-tilting pair I(w) for w in S_{n+1}.
    SttOf(WordArg),
    /// A Hasse quiver on its own.
    Hasse {
        #[arg(long, value_enum, default_value_t = Poset::Stt)]
        of: Poset,
    },
    /// Images over the preprojective algebra.
    Gamma,
    /// Run the invariant suites.
    Verify {
        /// Rerun over the other of F_2, F_3 and compare.
        #[arg(long)]
        p2p3: bool,
        /// Skip the independent enumeration over the preprojective algebra.
        #[arg(long)]
        no_gamma_bfs: bool,
    },
}

/// Failed checks exit with 1, bad input with 2.
enum Failure {
    Check(String),
    Input(String),
}

impl From<AtlasError> for Failure {
    fn from(e: AtlasError) -> Self {
        match e {
            AtlasError::InvalidPermutation(_)
            | AtlasError::LetterOutOfRange { .. }
            | AtlasError::DegreeMismatch(..)
            | AtlasError::Parse(_)
            | AtlasError::InvalidSize(_)
            | AtlasError::NotPrime(_) => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(format!("i/o: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    let started = Instant::now();
    let result = run(&cli);
    info!("done in {:.2}s", started.elapsed().as_secs_f64());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            log::error!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            log::error!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    if c.threads == 0 {
        return Err(Failure::Input("--threads must be at least 1".into()));
    }
    match &cli.command {
        Command::Tilt => cmd_tilt(c),
        Command::Stt => cmd_stt(c),
        Command::Ideal(w) => cmd_ideal(c, w),
        Command::SttOf(w) => cmd_stt_of(c, w),
        Command::Hasse { of } => cmd_hasse(c, *of),
        Command::Gamma => cmd_gamma(c),
        Command::Verify { p2p3, no_gamma_bfs } => cmd_verify(c, *p2p3, !*no_gamma_bfs),
    }
}

fn emit(c: &Common, text: &str) -> Outcome {
    match &c.out {
        Some(path) => {
            fs::write(path, text)?;
            info!("wrote {}", path.display());
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn emit_json(c: &Common, v: &Value) -> Outcome {
    let mut text = serde_json::to_string_pretty(v).map_err(|e| Failure::Check(e.to_string()))?;
    text.push('\n');
    emit(c, &text)
}

fn json_only(c: &Common, command: &str) -> Outcome {
    if c.format == Format::Dot {
        return Err(Failure::Input(format!("{command} has no DOT output")));
    }
    Ok(())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check_count(what: &str, found: usize, expected: usize) -> Outcome {
    if found == expected {
        info!("{what}: {found}");
        Ok(())
    } else {
        Err(Failure::Check(format!("{what}: found {found}, expected {expected}")))
    }
}

fn parse_element(arg: &WordArg, degree: usize) -> Result<(GenWord, Permutation), Failure> {
    match arg.kind {
        WordKind::Word => {
            let word = parse_word(&arg.word)?;
            let w = evaluate_word(&word, degree)?;
            Ok((word, w))
        }
        WordKind::Perm => {
            let w = parse_permutation(&arg.word)?;
            if w.degree() != degree {
                return Err(AtlasError::DegreeMismatch(w.degree(), degree).into());
            }
            Ok((canonical_reduced_word(&w), w))
        }
    }
}

fn structural(c: &Common) -> Result<StructuralAtlas, Failure> {
    let alg = build_auslander(c.n, c.p)?;
    Ok(StructuralAtlas::build(&alg, c.threads, IsoOptions { seed: c.seed })?)
}

fn poset_output(
    c: &Common,
    name: &str,
    poset: &HassePoset<Permutation>,
    extra: impl Fn(usize) -> Option<String>,
) -> Outcome {
    match c.format {
        Format::Dot => emit(c, &poset.to_dot_with(name, extra)),
        Format::Json => emit_json(c, &poset.to_json_value(extra)),
    }
}

fn cmd_tilt(c: &Common) -> Outcome {
    let alg = build_auslander(c.n, c.p)?;
    let tilt = tilt_enumerate_threads(&alg, c.threads)?;
    check_count("tilting modules", tilt.len(), factorial(c.n))?;
    let hasse = tilt.hasse()?;
    let labels: Vec<String> = tilt
        .entries
        .iter()
        .map(|e| {
            ideal_summands(&e.ideal).iter().map(|m| m.fingerprint().loewy_string()).collect::<Vec<_>>().join(" | ")
        })
        .collect();
    let extra = |k: usize| Some(labels[k].clone());
    match c.format {
        Format::Dot => emit(c, &hasse.to_dot_with("tilt", extra)),
        Format::Json => emit_json(
            c,
            &json!({
                "n": c.n,
                "p": c.p,
                "count": tilt.len(),
                "tilting": tilt.records(),
                "hasse": hasse.to_json_value(extra),
            }),
        ),
    }
}

fn cmd_stt(c: &Common) -> Outcome {
    let s = structural(c)?;
    let atlas = s.atlas()?;
    let graph = enumerate_stt(&s.catalog, c.threads)?;
    let expected = factorial(c.n + 1);
    check_count("support tau-tilting pairs", graph.len(), expected)?;
    if atlas.relabel(&graph).is_none() {
        return Err(Failure::Check("enumerated pairs outside the image of I".into()));
    }
    atlas.check_keys(&s.catalog)?;
    let labels: Vec<String> = atlas.pairs.iter().map(|p| describe_pair(&s.catalog, p)).collect();
    let extra = |k: usize| Some(labels[k].clone());
    match c.format {
        Format::Dot => emit(c, &atlas.hasse.to_dot_with("stt", extra)),
        Format::Json => emit_json(
            c,
            &json!({
                "n": c.n,
                "p": c.p,
                "count": atlas.len(),
                "pairs": atlas.records(&s.catalog),
                "hasse": atlas.hasse.to_json_value(extra),
            }),
        ),
    }
}

fn cmd_ideal(c: &Common, arg: &WordArg) -> Outcome {
    json_only(c, "ideal")?;
    let alg = build_auslander(c.n, c.p)?;
    let (word, w) = parse_element(arg, c.n)?;
    let reduced = canonical_reduced_word(&w);
    if reduced.len() != word.len() {
        warn!("word {word} is not reduced; I(w) is computed from the product as given");
    }
    let t = ideal_of_gen_word(&alg, &word)?;
    let summands = ideal_summands(&t);
    emit_json(
        c,
        &json!({
            "word": word,
            "perm": w,
            "ideal_dim": t.dim(),
            "summands": summands.iter().map(|m| m.descriptor()).collect::<Vec<_>>(),
            "loewy": summands.iter().map(|m| m.fingerprint().loewy_string()).collect::<Vec<_>>(),
        }),
    )
}

fn cmd_stt_of(c: &Common, arg: &WordArg) -> Outcome {
    json_only(c, "stt-of")?;
    let (_, w) = parse_element(arg, c.n + 1)?;
    let s = structural(c)?;
    let atlas = s.atlas()?;
    let pair = s.stt_of_word(&w)?;
    let k = atlas.find(&pair).ok_or_else(|| Failure::Check("pair missing from the atlas".into()))?;
    let record = atlas.records(&s.catalog).swap_remove(k);
    emit_json(
        c,
        &json!({
            "record": record,
            "reduced_word": canonical_reduced_word(&w),
            "description": describe_pair(&s.catalog, &pair),
        }),
    )
}

fn cmd_hasse(c: &Common, of: Poset) -> Outcome {
    match of {
        Poset::Weak => poset_output(c, "weak", &weak_left_hasse(c.n), |_| None),
        Poset::Tilt => {
            let tilt = tilt_enumerate_threads(&build_auslander(c.n, c.p)?, c.threads)?;
            poset_output(c, "tilt", &tilt.hasse()?, |_| None)
        }
        Poset::Stt => {
            let atlas = structural(c)?.atlas()?;
            poset_output(c, "stt", &atlas.hasse, |_| None)
        }
        Poset::Gamma => {
            let s = structural(c)?;
            let atlas = s.atlas()?;
            let ctx = GammaContext::new(s.catalog.algebra())?;
            let image = build_image(&ctx, &s, &atlas, IsoOptions { seed: c.seed })?;
            let labels: Vec<String> = image.pairs.iter().map(|p| describe_pair(&image.catalog, p)).collect();
            poset_output(c, "gamma", &atlas.hasse, |k| Some(labels[k].clone()))
        }
    }
}

fn cmd_gamma(c: &Common) -> Outcome {
    let s = structural(c)?;
    let atlas = s.atlas()?;
    let ctx = GammaContext::new(s.catalog.algebra())?;
    let image = build_image(&ctx, &s, &atlas, IsoOptions { seed: c.seed })?;
    let records = gamma_records(&image, &s, &atlas);
    let distinct: std::collections::BTreeSet<&str> = records.iter().map(|r| r.key.as_str()).collect();
    check_count("distinct images over the preprojective algebra", distinct.len(), factorial(c.n + 1))?;
    let labels: Vec<String> = image.pairs.iter().map(|p| describe_pair(&image.catalog, p)).collect();
    let extra = |k: usize| Some(labels[k].clone());
    match c.format {
        Format::Dot => emit(c, &atlas.hasse.to_dot_with("gamma", extra)),
        Format::Json => emit_json(
            c,
            &json!({
                "n": c.n,
                "p": c.p,
                "gamma_dim": ctx.gamma.dim(),
                "count": records.len(),
                "pairs": records,
                "hasse": atlas.hasse.to_json_value(extra),
            }),
        ),
    }
}

fn cmd_verify(c: &Common, p2p3: bool, gamma_bfs: bool) -> Outcome {
    json_only(c, "verify")?;
    let opts = VerifyOptions { threads: c.threads, seed: c.seed, p2p3, gamma_bfs };
    let report = verify_all(c.n, c.p, &opts)?;
    eprint!("{report}");
    let failures = report.failures().len();
    emit_json(
        c,
        &json!({
            "n": c.n,
            "p": c.p,
            "passed": report.passed(),
            "total": report.checks.len(),
            "failed": failures,
            "checks": report.checks,
        }),
    )?;
    if failures > 0 {
        return Err(Failure::Check(format!("{failures} of {} checks failed", report.checks.len())));
    }
    info!("all {} checks passed", report.checks.len());
    Ok(())
}
