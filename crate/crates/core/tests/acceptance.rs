//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rees_cm::field::{FieldKind, Rationals};
use rees_cm::groebner::is_groebner_basis;
use rees_cm::pipeline::{random_suite, staircase_suite, verify, RandomSuiteOptions, VerificationReport, VerifyOptions};
use rees_cm::rees::Instance;
use rees_cm::ring::PolyRing;
use rees_cm::squarefree::{betti_numbers, BettiEntry, SquareFreeIdeal};
use rees_cm::variable::Variable;

const ORACLE_LIMIT: Duration = Duration::from_secs(120);
const SKIP_ORACLE_LIMIT: Duration = Duration::from_secs(20 * 60);
const STAIRCASE_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_LIMIT: Duration = Duration::from_secs(5 * 60);
const KERNEL_LIMIT: Duration = Duration::from_secs(5);

const INSTANCES: [[usize; 6]; 3] = [[2, 2, 2, 2, 2, 2], [2, 3, 2, 2, 2, 2], [2, 3, 2, 3, 2, 2]];
/// Dual degree `mn - 1 + t1 - (s1 - 1) + t2 - (s2 - 1)` per instance above,
/// after the exchange that makes (2,3,2,3,2,2) into (2,3,2,2,2,3).
const EXPECTED_DEGREE: [usize; 3] = [5, 7, 8];

struct Run {
    label: String,
    report: VerificationReport,
    elapsed: Duration,
    limit: Duration,
}

fn run(p: [usize; 6], skip_oracle: bool) -> Run {
    let inst = Instance { m: p[0], n: p[1], s1: p[2], t1: p[3], s2: p[4], t2: p[5] };
    let options = VerifyOptions { skip_oracle, ..Default::default() };
    let t = Instant::now();
    let report = verify(inst, &options).expect("pipeline runs");
    Run {
        label: format!("{p:?}{}", if skip_oracle { " skip-oracle" } else { "" }),
        report,
        elapsed: t.elapsed(),
        limit: if skip_oracle { SKIP_ORACLE_LIMIT } else { ORACLE_LIMIT },
    }
}

fn line(ok: bool, number: usize, text: String) -> bool {
    println!("criterion {number}: {} {text}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn criterion_1(runs: &[Run]) -> bool {
    let mut notes = Vec::new();
    let ok = runs.iter().all(|r| {
        let s = &r.report.stages;
        let oracle = &s.gb_membership.detail["oracle"];
        let oracle_ok = if r.label.ends_with("skip-oracle") { oracle == "skipped" } else { oracle["routes_agree"] == true };
        let good = s.buchberger_ok.verdict.is_verified()
            && s.gb_membership.verdict.is_verified()
            && oracle_ok
            && r.elapsed < r.limit;
        notes.push(format!("{} {:.2}s", r.label, r.elapsed.as_secs_f64()));
        good
    });
    line(ok, 1, format!("Groebner certification and oracle membership [{}]", notes.join(", ")))
}

fn criterion_2(runs: &[Run]) -> bool {
    let ok = runs.iter().all(|r| {
        let s = &r.report.stages.initial_ideal_match;
        s.verdict.is_verified() && s.detail["basis_vs_families"]["missing_count"] == 0
    });
    let sizes: Vec<String> =
        runs.iter().map(|r| r.report.stages.initial_ideal_match.detail["predicted_generators"].to_string()).collect();
    line(ok, 2, format!("in(G) equals the union of the monomial families [generators {}]", sizes.join(", ")))
}

fn criterion_3(runs: &[Run]) -> bool {
    let mut notes = Vec::new();
    let ok = runs.iter().zip(EXPECTED_DEGREE.iter().chain(EXPECTED_DEGREE.last())).all(|(r, &want)| {
        let s = &r.report.stages;
        let matches = s.dual_degree.detail["matches"].as_str().unwrap_or("?").to_string();
        notes.push(format!("{} degree {} ({matches})", r.label, s.dual_degree.detail["degrees"]));
        s.dual_degree.detail["degrees"] == serde_json::json!([want])
            && s.dual_regularity.detail["regularity"] == want
            && s.dual_degree.verdict.is_verified()
            && s.dual_regularity.verdict.is_verified()
    });
    line(ok, 3, format!("dual degree and regularity [{}]", notes.join(", ")))
}

fn criterion_4(runs: &[Run]) -> bool {
    let ok = runs.iter().all(|r| {
        let s = &r.report.stages;
        r.report.field == "QQ"
            && s.eagon_reiner_cm.verdict.is_verified()
            && s.reisner_cm.verdict.is_verified()
            && s.final_cm_verdict.verdict.is_verified()
            && r.report.exit_code() == 0
    });
    line(ok, 4, "Eagon-Reiner and Reisner agree on CM over QQ; final verdict verified".into())
}

fn criterion_5() -> bool {
    let t = Instant::now();
    let reports = staircase_suite(3, 5, FieldKind::Rationals, 24).expect("staircase suite runs");
    let elapsed = t.elapsed();
    let expected_cases = (2..=5).count() + 2 * (3..=5).count();
    let ok = reports.len() == expected_cases && reports.iter().all(|r| r.verified) && elapsed < STAIRCASE_LIMIT;
    line(ok, 5, format!("staircase duals, linearity and regularity [{} cases, {:.2}s]", reports.len(), elapsed.as_secs_f64()))
}

fn criterion_6() -> bool {
    let t = Instant::now();
    let options = RandomSuiteOptions::default();
    let report = random_suite(&options).expect("random suite runs");
    let elapsed = t.elapsed();
    let tallies = [
        report.involution,
        report.dual_matches_intersection,
        report.dual_generators_are_minimal_covers,
        report.terai,
        report.eagon_reiner_matches_reisner,
    ];
    let ok = options.count == 200
        && options.max_vertices <= 8
        && tallies.iter().all(|t| t.passed == 200 && t.failed == 0)
        && elapsed < RANDOM_LIMIT;
    line(
        ok,
        6,
        format!(
            "duality suite [seed {}, 200 ideals, {} CM, {:.2}s]",
            options.seed,
            report.cohen_macaulay,
            elapsed.as_secs_f64()
        ),
    )
}

fn koszul_ok(k: usize) -> bool {
    let vs: Vec<Variable> = (1..=k).map(|j| Variable::x(1, j)).collect();
    let gens: Vec<Vec<Variable>> = vs.iter().map(|&v| vec![v]).collect();
    let ideal = SquareFreeIdeal::from_generators(&vs, &gens).unwrap();
    let table = betti_numbers(&ideal, FieldKind::Rationals).unwrap();
    let binomial = |n: usize, r: usize| (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    let want: Vec<BettiEntry> = (0..k).map(|i| BettiEntry { i, j: i + 1, rank: binomial(k, i + 1) }).collect();
    table.entries() == want
}

fn criterion_7() -> bool {
    let t = Instant::now();
    let vars: Vec<Variable> = (1..=2).flat_map(|i| (1..=3).map(move |j| Variable::x(i, j))).collect();
    let ring = PolyRing::matrix_lex(Rationals, &vars).unwrap();
    let minors: Vec<_> = [
        "x[1,1]x[2,2] - x[1,2]x[2,1]",
        "x[1,1]x[2,3] - x[1,3]x[2,1]",
        "x[1,2]x[2,3] - x[1,3]x[2,2]",
    ]
    .iter()
    .map(|s| ring.parse(s).unwrap())
    .collect();
    let gb = is_groebner_basis(&ring, &minors).is_gb;
    let koszul = koszul_ok(2) && koszul_ok(3);
    let elapsed = t.elapsed();
    line(
        gb && koszul && elapsed < KERNEL_LIMIT,
        7,
        format!("2x2 minors of a generic 2x3 matrix form a Groebner basis; Koszul tables [{:.3}s]", elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let mut runs: Vec<Run> = INSTANCES.iter().map(|&p| run(p, false)).collect();
    runs.push(run(INSTANCES[2], true));
    let results = [
        criterion_1(&runs),
        criterion_2(&runs[..3]),
        criterion_3(&runs),
        criterion_4(&runs),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
