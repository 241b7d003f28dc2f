use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use coxcarpet::cli::family::{all_families, FAMILIES};
use coxcarpet::cli::report::parse_report;
use coxcarpet::cli::{emit_report, make_family, parse_document, parse_system, ReportFormat, SystemDocument};
use coxcarpet::coxeter::Exponent;
use coxcarpet::decider::{classify_boundary, Mode};
use proptest::prelude::*;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/goldens")
}

/// Systems with checked-in JSON verdicts.
fn golden_cases() -> Vec<(String, Option<usize>)> {
    let mut v: Vec<(String, Option<usize>)> = Vec::new();
    v.extend((4..=9).map(|n| ("cycle".to_owned(), Some(n))));
    v.extend((5..=9).map(|n| ("wheel".to_owned(), Some(n))));
    v.extend((1..=5).map(|n| ("simplex".to_owned(), Some(n))));
    v.push(("octahedron".into(), None));
    v.push(("antiprism".into(), Some(5)));
    v
}

fn golden_name(family: &str, n: Option<usize>) -> String {
    match n {
        Some(n) => format!("{family}_{n}.json"),
        None => format!("{family}.json"),
    }
}

#[test]
fn json_goldens() {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    for (family, n) in golden_cases() {
        let v = classify_boundary(&make_family(&family, n).unwrap(), Mode::Theorem2);
        let json = emit_report(&v, ReportFormat::Json);
        let path = golden_dir().join(golden_name(&family, n));
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &json).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(json, want, "{family} {n:?}");
    }
}

#[test]
fn reports_round_trip_byte_identically() {
    for (name, m) in all_families(8) {
        for mode in [Mode::Theorem2, Mode::Conjectural] {
            let json = emit_report(&classify_boundary(&m, mode), ReportFormat::Json);
            let again = emit_report(&parse_report(&json).unwrap(), ReportFormat::Json);
            assert_eq!(again, json, "{name}");
        }
    }
}

#[test]
fn family_text_reparses_to_the_family() {
    for (family, min) in FAMILIES {
        let params: Vec<Option<usize>> = match min {
            Some(lo) => (lo..=12).map(Some).collect(),
            None => vec![None],
        };
        for n in params {
            let m = make_family(family, n).unwrap();
            let doc = SystemDocument::from_matrix(family, &m);
            assert_eq!(parse_system(&doc.to_text()).unwrap(), m, "{family} {n:?}");
            assert_eq!(parse_system(&doc.to_json()).unwrap(), m, "{family} {n:?}");
        }
    }
}

fn arb_document() -> impl Strategy<Value = SystemDocument> {
    (1usize..7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(0u8..7, k), any::<bool>())
    })
    .prop_map(|(n, pairs, labels, racg)| {
        let generators: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let name = |i: usize| generators[i].clone();
        let mut doc = SystemDocument { name: "random".into(), generators: generators.clone(), ..Default::default() };
        if racg {
            doc.racg_edges =
                Some(pairs.iter().zip(&labels).filter(|(_, &l)| l % 2 == 0).map(|(&(i, j), _)| (name(i), name(j))).collect());
        } else {
            for (&(i, j), &l) in pairs.iter().zip(&labels) {
                let m = if l == 6 { Exponent::Infinite } else { Exponent::Finite(l as u32 + 2) };
                doc.relations.push(coxcarpet::cli::format::Relation { s: name(i), t: name(j), m });
            }
        }
        doc
    })
}

proptest! {
    #[test]
    fn documents_round_trip(doc in arb_document()) {
        let json = doc.to_json();
        prop_assert_eq!(parse_document(&json).unwrap().to_json(), json.clone());
        prop_assert_eq!(parse_document(&doc.to_text()).unwrap(), doc.clone());
        prop_assert_eq!(parse_system(&json).unwrap(), parse_system(&doc.to_text()).unwrap());
    }
}

fn run_bin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coxcarpet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_exit_codes() {
    let (_, antiprism, _) = run_bin(&["family", "antiprism", "5"], "");
    let (code, out, _) = run_bin(&["check"], &antiprism);
    assert_eq!(code, 0);
    assert!(out.starts_with("boundary: SIERPINSKI_CARPET\n"));
    let (code, out, _) = run_bin(&["check-racg", "--format", "json"], "racg: a-b b-c c-d d-a");
    assert_eq!(code, 1);
    assert!(out.contains("\"kind\": \"EMPTY_SQUARE\""));
    let (code, out, _) = run_bin(&["check", "--conjectural", "--format", "json"], "racg: a-b b-c c-d d-a");
    assert_eq!(code, 1);
    assert!(out.contains("\"boundary\": \"CIRCLE\"") && out.contains("\"conjectural\": true"));
    let (code, _, err) = run_bin(&["check"], "gens: a; rel: a a 2");
    assert_eq!(code, 2);
    assert!(err.contains("diagonal relation"));
    let (code, _, _) = run_bin(&["check", "/nonexistent/system.txt"], "");
    assert_eq!(code, 2);
    let (code, _, _) = run_bin(&["check-racg"], "gens: a b; rel: a b 3");
    assert_eq!(code, 2);
    let (code, _, _) = run_bin(&["family", "torus", "3"], "");
    assert_eq!(code, 2);
    let (code, out, _) = run_bin(&["family", "antiprism", "5", "--label", "t1,t2=3", "--format", "json"], "");
    assert_eq!(code, 0);
    let (code, _, _) = run_bin(&["check"], &out);
    assert_eq!(code, 0);
    let (code, out, _) = run_bin(&["nerve", "--format", "json"], "racg: a-b b-c c-a");
    assert_eq!(code, 0);
    assert!(out.contains("\"faces\""));
    let (code, out, _) = run_bin(&["oracle", "--suite", "racg"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("ok"));
}
