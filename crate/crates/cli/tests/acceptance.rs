//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p warpdeg-cli --test acceptance -- --nocapture` to see them.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use warpdeg::analysis::{
    builtin_records, e_torus, e_upper_bound, lemma_suite, reproduce_table, Property, RowStatus,
    VerificationReport,
};
use warpdeg::generators::{canonical_word_count, random_word, validate_torus};
use warpdeg::{
    diagram_to_dt, dt_to_diagram, format_gauss, parse_gauss, torus_diagram, warping_degree,
    BasePoint,
};

fn verdict(id: &str, title: &str, ok: bool, detail: String) {
    println!(
        "[{}] {id} {title}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{id} {title}: {detail}");
}

fn warpdeg(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_warpdeg"))
        .args(args)
        .env_remove("WARPDEG_DATA")
        .output()
        .expect("run warpdeg");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        start.elapsed(),
    )
}

fn coprime_pairs(max_q: u32) -> Vec<(u32, u32)> {
    (2..max_q)
        .flat_map(|p| (p + 1..=max_q).map(move |q| (p, q)))
        .filter(|&(p, q)| validate_torus(p, q).is_ok())
        .collect()
}

/// Single-threaded n <= 6 run, shared by criteria 3, 4 and 5.
fn suite() -> &'static (VerificationReport, Duration) {
    static SUITE: OnceLock<(VerificationReport, Duration)> = OnceLock::new();
    SUITE.get_or_init(|| {
        let start = Instant::now();
        let r = lemma_suite(6, 1).expect("suite runs");
        (r, start.elapsed())
    })
}

#[test]
fn ac1_table_reproduction() {
    let start = Instant::now();
    let table = reproduce_table(&builtin_records()).unwrap();
    let elapsed = start.elapsed();
    let spot = [
        ("3_1", [1, 1]),
        ("4_1", [1, 2]),
        ("7_7", [2, 4]),
        ("8_18", [2, 5]),
        ("8_19", [3, 3]),
        ("8_20", [2, 3]),
        ("8_21", [2, 2]),
        ("9_47", [2, 5]),
        ("9_48", [2, 3]),
    ];
    let spot_ok = spot.iter().all(|(name, pair)| {
        table
            .row(name)
            .is_some_and(|r| r.computed == *pair && r.status == RowStatus::Match)
    });
    let sums_ok = table.rows.iter().all(|r| {
        let sum = r.computed[0] + r.computed[1];
        if r.alternating {
            sum + 1 == r.crossings
        } else {
            sum + 2 <= r.crossings
        }
    });
    let (code, stdout, cli_time) = warpdeg(&["table", "--check"]);
    let ok = table.rows.len() == 84
        && table.unexplained() == 0
        && spot_ok
        && sums_ok
        && code == 0
        && stdout.contains("84 rows, 84 match, 0 flagged, 0 unexplained mismatches")
        && elapsed < Duration::from_secs(1);
    verdict(
        "AC1",
        "table reproduction",
        ok,
        format!(
            "{} rows, {} match, {} flagged, {} unexplained; spot rows {spot_ok}; sum identities {sums_ok}; \
             `table --check` exit {code}; {elapsed:.2?} (cli {cli_time:.2?})",
            table.rows.len(),
            table.matches(),
            table.flagged(),
            table.unexplained()
        ),
    );
}

#[test]
fn ac2_torus_formulas() {
    let start = Instant::now();
    let pairs = coprime_pairs(8);
    let bad: Vec<_> = pairs
        .iter()
        .filter(|&&(p, q)| {
            let d = torus_diagram(p, q).unwrap();
            let c = d.crossing_count();
            let (a, b) = (warping_degree(&d), warping_degree(&d.reverse()));
            let half = ((p - 1) * (q - 1) / 2) as usize;
            !(a == half && b == half && c - a - b == (p - 1) as usize)
        })
        .collect();
    let elapsed = start.elapsed();
    verdict(
        "AC2",
        "torus formulas",
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!(
            "{} coprime pairs, failures {bad:?}, {elapsed:.2?}",
            pairs.len()
        ),
    );
}

#[test]
fn ac3_exhaustive_lemma_suite() {
    let (single, single_time) = suite();
    let start = Instant::now();
    let (code, stdout, _) = warpdeg(&["verify", "--max-crossings", "6", "--jobs", "8", "--json"]);
    let parallel_time = start.elapsed();
    let parallel: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let same = parallel == serde_json::to_value(single).unwrap();
    let expected_words: u64 = (1..=6).map(canonical_word_count).sum();
    let families = [
        Property::Complement,
        Property::SignCriterion,
        Property::StepLaw,
        Property::SpanBound,
        Property::MainInequality,
    ];
    let all_zero = families.iter().all(|&p| single.tally(p).failed == 0);
    let ok = single.words_by_crossings[5] == (6, 665_280)
        && single.words_checked == expected_words
        && all_zero
        && single.counterexamples.is_empty()
        && code == 0
        && same
        && *single_time < Duration::from_secs(600)
        && parallel_time < Duration::from_secs(120);
    let counts: Vec<String> = families
        .iter()
        .map(|&p| {
            let t = single.tally(p);
            format!("{} {}/{}", p, t.checked - t.failed, t.checked)
        })
        .collect();
    verdict(
        "AC3",
        "exhaustive lemma suite",
        ok,
        format!(
            "{} words; {}; 1 job {single_time:.2?}, `verify --jobs 8` {parallel_time:.2?} exit {code}, identical {same}",
            single.words_checked,
            counts.join(", ")
        ),
    );
}

#[test]
fn ac4_alternating_minimizer() {
    let (r, _) = suite();
    let t = r.tally(Property::AlternatingMinimizer);
    // alternating canonical words: n! odd-even matchings times 2 starting passes
    let expected: u64 = (1..=6u64).map(|n| 2 * (1..=n).product::<u64>()).sum();
    verdict(
        "AC4",
        "minimum attained before every over pass of alternating words",
        t.failed == 0 && t.checked == expected,
        format!(
            "{} alternating words, {} counterexamples",
            t.checked, t.failed
        ),
    );
}

#[test]
fn ac5_mirror_identity() {
    let (r, _) = suite();
    let t = r.tally(Property::MirrorIdentity);
    verdict(
        "AC5",
        "mirror identity d(D*) = d(-D)",
        t.failed == 0 && t.checked == r.words_checked,
        format!("{} words, {} counterexamples", t.checked, t.failed),
    );
}

#[test]
fn ac6_e_arithmetic() {
    let pairs = coprime_pairs(10);
    let bad: Vec<_> = pairs
        .iter()
        .filter(|&&(p, q)| {
            let e = ((p - 1) * (q - 1)) as u64;
            let bound = e_upper_bound(&[torus_diagram(p, q).unwrap()]).unwrap() as u64;
            e_torus(p, q).ok() != Some((e, (p - 1) as u64)) || bound != e
        })
        .collect();
    let witnesses: Vec<u64> = (1..=5u32)
        .map(|n| e_torus(n + 1, n + 2).unwrap().1)
        .collect();
    verdict(
        "AC6",
        "e(K) torus arithmetic",
        bad.is_empty() && witnesses == vec![1, 2, 3, 4, 5],
        format!(
            "{} coprime pairs, failures {bad:?}; gaps for (n+1,n+2), n=1..5: {witnesses:?}",
            pairs.len()
        ),
    );
}

#[test]
fn ac7_codec_round_trips() {
    let mut gauss_bad = Vec::new();
    for seed in 0..1000u64 {
        let n = (seed % 8) as usize + 1;
        let d = random_word(n, seed).unwrap();
        if parse_gauss(&format_gauss(&d)).ok().as_ref() != Some(&d) {
            gauss_bad.push(seed);
        }
    }
    let records = builtin_records();
    let dt_bad: Vec<_> = records
        .iter()
        .filter(|r| {
            diagram_to_dt(&dt_to_diagram(&r.dt), BasePoint(0))
                .ok()
                .as_ref()
                != Some(&r.dt)
        })
        .map(|r| r.name.clone())
        .collect();
    verdict(
        "AC7",
        "codec round trips",
        gauss_bad.is_empty() && dt_bad.is_empty(),
        format!(
            "Gauss: 1000 random words, failures {gauss_bad:?}; DT: {} table entries, failures {dt_bad:?}",
            records.len()
        ),
    );
}
