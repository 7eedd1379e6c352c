//! Structural invariants of the verification report: complete per-ring
//! coverage, consistent counts, recorded modes, and the fixture rows.

use ringlab::corpus::load_dir;
use ringlab::ring::Caps;
use ringlab::theorems::{run_suite, SuiteConfig, Verdict, CHECK_IDS};
use std::path::PathBuf;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn every_corpus_ring_appears_exactly_once_per_check() {
    let corpus = load_dir(&corpus_dir(), &Caps::default()).unwrap();
    let report = run_suite(&corpus, &SuiteConfig::default()).unwrap();
    assert_eq!(report.checks.len(), CHECK_IDS.len());
    let names: Vec<&str> = corpus.entries.iter().map(|e| e.name.as_str()).collect();
    for check in &report.checks {
        for name in &names {
            let occurrences = check.rows.iter().filter(|r| r.ring == *name).count();
            assert_eq!(occurrences, 1, "{} in {}", name, check.id);
        }
        // fixture rows are the only extras and carry a fixture note
        for row in &check.rows {
            if !names.contains(&row.ring.as_str()) {
                assert_eq!(row.note.as_deref(), Some("fixture"), "{}", row.ring);
            }
        }
    }

    // summary counts equal the rendered row verdicts
    let (pass, fail, skip) = report.counts();
    let text = report.render();
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("CHECK ")).collect();
    assert_eq!(rows.len(), pass + fail + skip);
    assert_eq!(rows.iter().filter(|l| l.contains(" PASS")).count(), pass);
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with(&format!("SUMMARY pass={pass} fail={fail} skip={skip}")));
}

#[test]
fn expected_fixture_rows_are_present() {
    let corpus = load_dir(&corpus_dir(), &Caps::default()).unwrap();
    let report = run_suite(&corpus, &SuiteConfig::default()).unwrap();
    let row = |id: &str, ring: &str| -> Verdict {
        report
            .checks
            .iter()
            .find(|c| c.id == id)
            .unwrap()
            .rows
            .iter()
            .find(|r| r.ring == ring)
            .unwrap_or_else(|| panic!("missing row {id}/{ring}"))
            .verdict
            .clone()
    };
    assert_eq!(row("T2.9", "pow(Z4,id,3)"), Verdict::Pass);
    assert_eq!(row("P3.8", "dor(Z2,xcube)"), Verdict::Pass);
    assert_eq!(row("C3.9", "pow(GF4,frob,2)"), Verdict::Pass);
    assert_eq!(row("E2.4", "M2Z4"), Verdict::Pass);
    assert_eq!(row("E2.6", "U3Z2"), Verdict::Pass);
    // matrix parts of the four named fixture rings all ran
    for name in ["Z2", "Z4", "Z6", "T2Z2"] {
        let check = report.checks.iter().find(|c| c.id == "T3.1").unwrap();
        let r = check.rows.iter().find(|r| r.ring == name).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(
            r.note.as_deref().unwrap_or("").contains("matrix=checked"),
            "{name}: {:?}",
            r.note
        );
    }
}

#[test]
fn sampled_and_exact_modes_are_recorded() {
    let corpus = load_dir(&corpus_dir(), &Caps::default()).unwrap();
    let report = run_suite(&corpus, &SuiteConfig::default()).unwrap();
    let t22 = report.checks.iter().find(|c| c.id == "T2.2").unwrap();
    let note = |ring: &str| -> String {
        t22.rows
            .iter()
            .find(|r| r.ring == ring)
            .unwrap()
            .note
            .clone()
            .unwrap_or_default()
    };
    assert!(note("Z8").contains("subsets=exact"));
    assert!(note("GF4").contains("subsets=exact"));
    assert!(note("M2Z4").contains("subsets=sampled(200)"));
    assert!(note("Z12").contains("subsets=sampled(200)"));
}

#[test]
fn seed_changes_the_report_only_in_recorded_configuration() {
    // all corpus profiles agree regardless of the sampling seed; the rendered
    // verdicts must match line for line once config lines are stripped
    let corpus = load_dir(&corpus_dir(), &Caps::default()).unwrap();
    let a = run_suite(
        &corpus,
        &SuiteConfig {
            seed: 1,
            ..SuiteConfig::default()
        },
    )
    .unwrap();
    let b = run_suite(
        &corpus,
        &SuiteConfig {
            seed: 2,
            ..SuiteConfig::default()
        },
    )
    .unwrap();
    let verdicts = |text: String| -> Vec<String> {
        text.lines()
            .filter(|l| l.starts_with("CHECK "))
            .map(|s| s.to_string())
            .collect()
    };
    assert_eq!(verdicts(a.render()), verdicts(b.render()));
    assert!(a.render().contains("seed=1"));
    assert!(b.render().contains("seed=2"));
}

#[test]
fn duplicate_ring_names_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let text = "ring DUP\norders 2\none 1\nmul 1 1 : 1\nend\n";
    std::fs::write(dir.path().join("a.ring"), text).unwrap();
    std::fs::write(dir.path().join("b.ring"), text).unwrap();
    assert!(matches!(
        load_dir(dir.path(), &Caps::default()),
        Err(ringlab::RingError::DuplicateRing(name)) if name == "DUP"
    ));
}
