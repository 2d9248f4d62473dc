//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always show up in `cargo test` output.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use decorated_cospans::circuits::{behavior, behavior_equivalent};
use decorated_cospans::report::LawReport;
use decorated_cospans::suites::{self, PLANTED};
use decorated_cospans::{fixtures, DecoratedCategory, Graphs, RatSubspace, Rational};
use serde_json::Value;

type Verdict = Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict, Duration);

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs a suite at an explicit case count and insists that every law named
/// in `laws` appears in some report and that nothing failed.
fn suite(name: &str, cases: usize, reports_expected: &[&str], laws: &[&str]) -> Verdict {
    let reports = suites::run(name, 42, Some(cases)).ok_or_else(|| format!("no suite {name}"))?;
    let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
    check(names == reports_expected, || format!("{name}: reports {names:?}"))?;
    for r in &reports {
        check(r.cases == cases, || format!("{}: ran {} cases", r.suite, r.cases))?;
        for law in laws {
            check(r.law(law).is_some(), || format!("{}: missing law {law}", r.suite))?;
        }
        if let Some(l) = r.failures().next() {
            return Err(format!("{}/{} failed: {:?}", r.suite, l.law, l.counterexample));
        }
    }
    Ok(())
}

const DECORATED: &[&str] = &[
    "representation-independence",
    "associativity",
    "identities",
    "empty-decoration",
    "embedding-functorial",
    "interchange",
    "braiding-natural",
    "unitors-natural",
    "associator-natural",
];

const INDUCED: &[&str] = &["identities", "composition", "coherence", "monoidality", "frobenius", "dagger"];

fn intro_composite() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_decospan"))
        .arg("compose")
        .arg(fixture("gluing_first.json"))
        .arg(fixture("gluing_second.json"))
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let golden = std::fs::read(fixture("gluing_composite.json")).map_err(|e| e.to_string())?;
    check(out.stdout == golden, || "output differs from golden file".into())?;

    // apex A B C D; x goes to A, z0 to D, z1 to B
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    check(doc["apex"] == 4, || format!("apex {}", doc["apex"]))?;
    check(doc["left_leg"] == serde_json::json!([0]), || format!("left leg {}", doc["left_leg"]))?;
    check(doc["right_leg"] == serde_json::json!([3, 1]), || format!("right leg {}", doc["right_leg"]))?;
    let edges = doc["decoration"]["edges"].as_array().ok_or("no edges")?;
    let labels: Vec<&str> = edges.iter().filter_map(|e| e[2].as_str()).collect();
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    let mut expected = vec!["1/5", "13/10", "4/5", "2", "17/10", "3/10"];
    expected.sort_unstable();
    check(sorted == expected, || format!("labels {labels:?}"))
}

fn decorated_suites() -> Verdict {
    suite("decorated-graph", 200, &["decorated-graph", "induced-graph-to-linsub"], &[])?;
    suite("decorated-linsub", 200, &["decorated-linsub", "induced-linsub-to-linsub"], &[])?;
    for name in ["decorated-graph", "decorated-linsub"] {
        let reports = suites::run(name, 42, Some(1)).unwrap();
        let present = |wanted: &[&str], r: &LawReport| wanted.iter().all(|l| r.law(l).is_some());
        check(present(DECORATED, &reports[0]) && present(INDUCED, &reports[1]), || format!("{name}: laws missing"))?;
    }
    Ok(())
}

fn hypergraph() -> Verdict {
    suite(
        "hypergraph",
        200,
        &["hypergraph-cospan", "hypergraph-graph", "hypergraph-linsub"],
        &[
            "monoid",
            "comonoid",
            "commutative",
            "frobenius",
            "special",
            "compatibility",
            "snake",
            "dual-of-generators",
            "dagger-involution",
            "dagger-contravariant",
            "dual-is-dagger",
        ],
    )
}

fn functor_harness() -> Verdict {
    let functor_laws = ["identity", "composition", "tensor-naturality", "associativity", "left-unit", "right-unit", "symmetry"];
    suite("graph-functor", 500, &["graph-functor"], &functor_laws)?;
    suite("linsub-functor", 500, &["linsub-functor"], &functor_laws)?;
    suite("res-transformation", 300, &["graph-to-linsub"], &["naturality", "monoidality", "unit"])?;

    let planted = suites::run(PLANTED, 42, None).unwrap();
    let mut caught = BTreeSet::new();
    for r in &planted {
        for l in r.failures() {
            let cx = l.counterexample.as_ref().ok_or_else(|| format!("{}/{}: no counterexample", r.suite, l.law))?;
            // both planted harnesses generate at GRAPH_SIZES
            let bound = suites::GRAPH_SIZES;
            let within = cx.max_set <= bound.max_set && cx.max_decoration <= bound.max_decoration;
            let smaller = cx.max_set < bound.max_set || cx.max_decoration < bound.max_decoration;
            check(within && smaller, || {
                format!("{}/{}: counterexample not shrunk: {cx:?}", r.suite, l.law)
            })?;
            caught.insert(r.suite.clone());
        }
    }
    check(caught.len() == planted.len(), || format!("only caught {caught:?}"))
}

fn initial_decoration() -> Verdict {
    suite(
        "initial-decoration",
        200,
        &["initial-decoration"],
        &["composition", "identity", "tensor", "dagger", "frobenius", "isomorphism"],
    )
}

fn semantics() -> Verdict {
    suite("semantics", 300, &["semantics"], &["behavior-matches-oracle", "series", "parallel", "triangle", "wire"])?;
    let graphs = Graphs::new();
    let cat = DecoratedCategory::new(&graphs);
    let (a, b) = fixtures::series(q(1, 1), q(2, 1));
    let series = cat.compose(&a, &b).map_err(|e| e.to_string())?;
    let same = |x: &fixtures::Circuit, y: &fixtures::Circuit| behavior_equivalent(x, y).map_err(|e| e.to_string());
    check(same(&series, &fixtures::single_edge(q(3, 1)))?, || "series(1, 2) is not 3".into())?;
    check(same(&fixtures::parallel(q(1, 1), q(1, 1)), &fixtures::single_edge(q(1, 2)))?, || {
        "parallel(1, 1) is not 1/2".into()
    })?;
    check(same(&fixtures::unit_triangle(), &fixtures::single_edge(q(2, 3)))?, || "triangle is not 2/3".into())?;
    // ψ_X = ψ_Y and κ_X + κ_Y = 0
    let wire = RatSubspace::span_rows(4, vec![vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)], vec![q(0, 1), q(0, 1), q(1, 1), q(-1, 1)]])
        .map_err(|e| e.to_string())?;
    check(behavior(&fixtures::wire()).map_err(|e| e.to_string())? == wire, || "wire behavior".into())
}

fn res_functor() -> Verdict {
    suite("res-functor", 200, &["induced-graph-to-linsub"], INDUCED)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("intro composite is byte-identical", intro_composite, Duration::from_secs(1)),
        ("decorated-cospan law suites, 200 cases per instance", decorated_suites, Duration::from_secs(60)),
        ("hypergraph axioms in cospans and each decorated category", hypergraph, Duration::from_secs(60)),
        ("functor and transformation laws, planted faults caught", functor_harness, Duration::from_secs(60)),
        ("identity decorations reproduce plain cospans", initial_decoration, Duration::from_secs(60)),
        ("behavior matches nodal oracle, circuit fixtures", semantics, Duration::from_secs(30)),
        ("Res preserves the hypergraph structure", res_functor, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        let verdict = verdict.and_then(|()| check(took < limit, || format!("took {took:.2?}, limit {limit:?}")));
        match verdict {
            Ok(()) => println!("criterion {}: PASS  {name} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
