//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tau_atlas::gamma::{gamma_tau_rigidity_check, verify_gamma_bijection};
use tau_atlas::ideal::{check_semigroup_relations, ideal_component, tilt_enumerate_threads};
use tau_atlas::rep::{find_isomorphism, IsoOptions, IsoVerdict};
use tau_atlas::stt::{
    enumerate_stt, tau_rigidity_report, verify_anti_isomorphism, verify_engine_agreement, verify_mutation_relations,
    StructuralAtlas,
};
use tau_atlas::symgroup::weak_left_hasse;
use tau_atlas::verify::{field_independence, homological_suite, Atlas};
use tau_atlas::{build_auslander, QuiverRep, Report, Result};

const TILT_BUDGET: Duration = Duration::from_secs(60);
const STT_BUDGET: Duration = Duration::from_secs(300);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[Report]) -> Self {
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().into_iter().map(move |c| format!("{}: {}", r.suite, c.name)))
            .collect();
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        if failures.is_empty() {
            Outcome { passed: true, detail: format!("{total} checks") }
        } else {
            Outcome { passed: false, detail: failures.join("; ") }
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn tilt_counts() -> Result<Outcome> {
    let mut counts = Vec::new();
    let mut last = Duration::ZERO;
    for n in 1..=5 {
        let alg = build_auslander(n, 2)?;
        let start = Instant::now();
        let cat = tilt_enumerate_threads(&alg, 1)?;
        last = start.elapsed();
        counts.push(cat.len());
    }
    let want: Vec<usize> = (1..=5).map(factorial).collect();
    Ok(Outcome {
        passed: counts == want && last < TILT_BUDGET,
        detail: format!("counts {counts:?}, n=5 in {}", secs(last)),
    })
}

fn stt_counts() -> Result<Outcome> {
    let mut counts = Vec::new();
    let mut last = Duration::ZERO;
    for n in 1..=4 {
        let alg = build_auslander(n, 2)?;
        let start = Instant::now();
        let s = StructuralAtlas::build(&alg, 1, IsoOptions::default())?;
        let graph = enumerate_stt(&s.catalog, 1)?;
        last = start.elapsed();
        counts.push(graph.len());
    }
    let want: Vec<usize> = (2..=5).map(factorial).collect();
    Ok(Outcome {
        passed: counts == want && last < STT_BUDGET,
        detail: format!("counts {counts:?}, n=4 in {}", secs(last)),
    })
}

fn examples(atlases: &[Atlas]) -> Outcome {
    let results = [
        ("tilt n=2", common::check_tilt_example(&common::TILT_N2, &common::TILT_N2_ARROWS)),
        ("tilt n=3", common::check_tilt_example(&common::TILT_N3, &common::TILT_N3_ARROWS)),
        ("stt n=2", common::check_stt_example(&atlases[1], &common::STT_N2, &common::STT_N2_ARROWS)),
        ("stt n=3", common::check_stt_example(&atlases[2], &common::STT_N3, &common::STT_N3_ARROWS)),
        ("mu chain n=4", common::check_mu_chain(&atlases[3].structural)),
    ];
    let failures: Vec<String> =
        results.iter().filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}"))).collect();
    Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() { "5 quivers".into() } else { failures.join("; ") },
    }
}

fn semigroup() -> Result<Outcome> {
    let reports = (1..=5).map(|n| check_semigroup_relations(&build_auslander(n, 2)?)).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::from_reports(&reports))
}

/// Tilting side for n ≤ 5 from the tilt catalog alone, pair side from the atlases.
fn anti_isomorphism(atlases: &[Atlas]) -> Result<Outcome> {
    let mut reports = Vec::new();
    for n in 1..=5 {
        let tilt = tilt_enumerate_threads(&build_auslander(n, 2)?, 1)?;
        let weak = weak_left_hasse(n);
        let phi: Option<Vec<usize>> = weak.vertices.iter().map(|w| tilt.find_perm(w)).collect();
        let hasse = tilt.hasse()?;
        let mut r = Report::new(format!("tilt n={n}"));
        r.check("anti-isomorphic", phi.is_some_and(|phi| weak.is_anti_isomorphic_via(&hasse, &phi)), "");
        reports.push(r);
    }
    for a in atlases {
        reports.push(verify_anti_isomorphism(&a.structural, &a.stt, &a.graph)?);
    }
    Ok(Outcome::from_reports(&reports))
}

fn engine_agreement(atlases: &[Atlas]) -> Result<Outcome> {
    let reports =
        atlases.iter().map(|a| verify_engine_agreement(&a.structural, &a.stt, &a.graph)).collect::<Result<Vec<_>>>()?;
    let mut out = Outcome::from_reports(&reports);
    if out.passed {
        out.detail = format!("{}; exhaustive for n ≤ 4", out.detail);
    }
    Ok(out)
}

fn homological(atlases: &[Atlas]) -> Result<Outcome> {
    let reports = atlases.iter().map(|a| homological_suite(a, 0)).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::from_reports(&reports))
}

fn tau_rigidity(atlases: &[Atlas]) -> Outcome {
    let mut reports = Vec::new();
    for a in atlases {
        reports.push(tau_rigidity_report(&a.structural.catalog, &a.stt.pairs, "lambda"));
        reports.push(tau_rigidity_report(&a.structural.catalog, &a.graph.pairs, "lambda enumerated"));
        reports.push(gamma_tau_rigidity_check(&a.gamma_image));
    }
    Outcome::from_reports(&reports)
}

fn tensor_bijection(atlases: &[Atlas]) -> Result<Outcome> {
    let reports = atlases
        .iter()
        .map(|a| verify_gamma_bijection(&a.gamma, &a.structural, &a.stt, &a.gamma_image, true, 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::from_reports(&reports))
}

fn regularity() -> Result<Outcome> {
    let mut reports = Vec::new();
    for n in 1..=5 {
        let alg = build_auslander(n, 2)?;
        let tilt = tilt_enumerate_threads(&alg, 1)?;
        let hasse = tilt.hasse()?;
        let pn = QuiverRep::projective(&alg, n - 1);
        let mut r = Report::new(format!("n={n}"));
        r.check("n-1 mutations each", hasse.degrees().iter().all(|&d| d == n - 1), "");
        let summand = tilt.entries.iter().all(|e| {
            find_isomorphism(&pn, &ideal_component(&e.ideal, n - 1), &IsoOptions::default()).0 == IsoVerdict::Isomorphic
        });
        r.check("P_n summand", summand, "");
        reports.push(r);
    }
    Ok(Outcome::from_reports(&reports))
}

fn fields(atlases: &[Atlas]) -> Result<Outcome> {
    let mut reports = Vec::new();
    for a in atlases {
        let other = Atlas::build(a.alg.n(), 3, 1, 0)?;
        reports.push(field_independence(a, &other));
    }
    Ok(Outcome::from_reports(&reports))
}

fn mutation_relations(atlases: &[Atlas]) -> Result<Outcome> {
    let reports = atlases.iter().map(|a| verify_mutation_relations(&a.graph)).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::from_reports(&reports))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let atlases: Vec<Atlas> = match (1..=4).map(|n| Atlas::build(n, 2, 1, 0)).collect() {
        Ok(a) => a,
        Err(e) => {
            println!("FAIL setup: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<(&str, Result<Outcome>)> = vec![
        ("1 tilting counts n=1..5", tilt_counts()),
        ("2 support tau-tilting counts n=1..4", stt_counts()),
        ("3 worked quivers and mu chain", Ok(examples(&atlases))),
        ("4 semigroup relations n<=5", semigroup()),
        ("5 anti-isomorphism with the weak order", anti_isomorphism(&atlases)),
        ("6 mutation engine agreement", engine_agreement(&atlases)),
        ("7 homological suites n<=4", homological(&atlases)),
        ("8 tau-rigidity over Lambda and Gamma n<=4", Ok(tau_rigidity(&atlases))),
        ("9 tensor bijection onto Gamma", tensor_bijection(&atlases)),
        ("10 regularity and P_n summand n<=5", regularity()),
        ("11 field independence p=2 vs p=3 n<=4", fields(&atlases)),
        ("12 mutation relations n<=4", mutation_relations(&atlases)),
    ];
    let mut all = true;
    for (name, outcome) in criteria {
        let (passed, detail) = match outcome {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= passed;
        println!("{} {name} ({detail})", if passed { "PASS" } else { "FAIL" });
    }
    println!("acceptance finished in {}", secs(start.elapsed()));
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
