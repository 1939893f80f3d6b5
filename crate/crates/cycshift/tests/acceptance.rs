//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; a failed criterion panics
//! with the same line).

use std::collections::BTreeSet;
use std::process::Command;

use cycshift::coxeter::{CoxeterDatum, DiagramAutomorphism, Elt, SimpleSubset, WeylGroup};
use cycshift::shift_graph::build_graph;
use cycshift::{decomposition, parabolic, suites};

fn group(ty: &str) -> WeylGroup {
    WeylGroup::build(CoxeterDatum::new(ty.parse().unwrap())).unwrap()
}

fn id(g: &WeylGroup) -> DiagramAutomorphism {
    DiagramAutomorphism::identity(g.rank())
}

fn criterion(n: usize, name: &str, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {n} ({name}): {status} — {detail}");
    assert!(passed, "criterion {n} ({name}): FAIL — {detail}");
}

fn run_suite(n: usize, name: &str, suite_name: &str, types: &[&str]) {
    let suite = suites::find(suite_name).expect("registered suite");
    let types: Vec<_> = types.iter().map(|t| t.parse().unwrap()).collect();
    let outcomes = suite.run(&types).expect("suite runs to completion");
    let failed: Vec<&suites::CheckOutcome> =
        outcomes.iter().filter(|o| !o.passed).collect();
    let detail = if failed.is_empty() {
        format!("{} checks", outcomes.len())
    } else {
        failed
            .iter()
            .map(|o| format!("{}: {}", o.label, o.detail))
            .collect::<Vec<_>>()
            .join("; ")
    };
    criterion(n, name, failed.is_empty(), &detail);
}

#[test]
fn criterion_1_example_component() {
    let g = group("A3");
    let d = id(&g);
    let graph = build_graph(&g, &d, g.full_set());
    let w = g.elt(&[1, 2, 3]);
    let mut expected = vec![
        g.elt(&[1, 2, 3]),
        g.elt(&[2, 1, 3]),
        g.elt(&[1, 3, 2]),
        g.elt(&[3, 2, 1]),
        g.elt(&[1, 2, 1, 3, 2]),
        g.elt(&[2, 3, 2, 1, 2]),
    ];
    expected.sort();
    let component_ok = graph.weak_component_of(w) == expected;

    let scc_short = graph.scc_of(w);
    let long_a = g.elt(&[1, 2, 1, 3, 2]);
    let long_b = g.elt(&[2, 3, 2, 1, 2]);
    let scc_ok = scc_short.len() == 4 && graph.scc_of(long_a) == {
        let mut pair = vec![long_a, long_b];
        pair.sort();
        pair
    };

    // frozen edge set of the component: triples (from, label, to)
    let mut edges: Vec<(Elt, usize, Elt)> = Vec::new();
    for &v in &expected {
        for &(s, to) in graph.edges(v) {
            if expected.binary_search(&to).is_ok() {
                edges.push((v, s.label(), to));
            }
        }
    }
    edges.sort();
    let mut frozen: Vec<(Elt, usize, Elt)> = vec![
        (g.elt(&[1, 2, 3]), 1, g.elt(&[2, 1, 3])),
        (g.elt(&[1, 2, 3]), 3, g.elt(&[1, 3, 2])),
        (g.elt(&[2, 1, 3]), 1, g.elt(&[1, 2, 3])),
        (g.elt(&[2, 1, 3]), 2, g.elt(&[1, 3, 2])),
        (g.elt(&[2, 1, 3]), 3, g.elt(&[3, 2, 1])),
        (g.elt(&[1, 3, 2]), 3, g.elt(&[1, 2, 3])),
        (g.elt(&[1, 3, 2]), 2, g.elt(&[2, 1, 3])),
        (g.elt(&[1, 3, 2]), 1, g.elt(&[3, 2, 1])),
        (g.elt(&[3, 2, 1]), 1, g.elt(&[1, 3, 2])),
        (g.elt(&[3, 2, 1]), 3, g.elt(&[2, 1, 3])),
        // the length-5 layer maps down by s2 and swaps under s1 and s3
        (long_a, 1, long_b),
        (long_a, 3, long_b),
        (long_a, 2, g.elt(&[1, 2, 3])),
        (long_b, 1, long_a),
        (long_b, 3, long_a),
        (long_b, 2, g.elt(&[3, 2, 1])),
    ];
    frozen.sort();
    let edges_ok = edges == frozen;

    criterion(
        1,
        "example component",
        component_ok && scc_ok && edges_ok,
        "6 vertices, SCC sizes 4 and 2, 16 labeled edges",
    );
}

#[test]
fn criterion_2_hasse_figure() {
    let g = group("A3");
    let d = id(&g);
    let j = SimpleSubset::parse("3", g.rank()).unwrap();
    let reps = parabolic::j_w(&g, j);
    let reps_ok = reps.len() == 12;

    // Bruhat Hasse diagram restricted to ʲW: transitive reduction of the
    // restricted Bruhat order
    let mut bruhat_covers: BTreeSet<(Elt, Elt)> = BTreeSet::new();
    for &a in &reps {
        for &b in &reps {
            if a == b || !g.bruhat_leq(a, b) {
                continue;
            }
            let middle = reps
                .iter()
                .any(|&c| c != a && c != b && g.bruhat_leq(a, c) && g.bruhat_leq(c, b));
            if !middle {
                bruhat_covers.insert((a, b));
            }
        }
    }

    let covers: BTreeSet<(Elt, Elt)> = decomposition::hasse(&g, j, &d)
        .unwrap()
        .into_iter()
        .collect();
    let mut expected = bruhat_covers.clone();
    expected.insert((g.elt(&[1, 2, 3]), g.elt(&[2, 1, 3, 2])));
    let covers_ok = covers == expected;

    criterion(
        2,
        "Hasse figure",
        reps_ok && covers_ok,
        "12 representatives; Bruhat covers plus the single extra cover",
    );
}

#[test]
fn criterion_3_iota_example() {
    let g = group("A4");
    let d = id(&g);
    let j = SimpleSubset::parse("1,3", g.rank()).unwrap();
    let w = g.elt(&[1, 2, 1, 3, 2, 4]);
    let (image, cert) = decomposition::iota(&g, j, &d, w).unwrap();
    let ok = image == g.elt(&[2, 1, 3, 2, 4, 3])
        && cert.u == g.identity()
        && image != g.inv(w);
    criterion(3, "iota example", ok, "value, u = e, and distinct from the inverse");
}

#[test]
fn criterion_4_decomposition_suite() {
    run_suite(
        4,
        "decomposition suite",
        "prop-w",
        &["A1", "A2", "A3", "A4", "B2", "B3", "G2"],
    );
}

#[test]
fn criterion_5_limit_subgroup_suite() {
    run_suite(
        5,
        "limit subgroup suite",
        "lemma-j-inf",
        &["A1", "A2", "A3", "A4", "B2", "B3", "G2"],
    );
}

#[test]
fn criterion_6_certificate_suite() {
    run_suite(6, "certificate suite", "thm-cyc", &["A3", "B2", "G2"]);
}

#[test]
fn criterion_7_swap_closure() {
    // equality with the swap closure holds for the identity automorphism;
    // for the flip the closure is strictly coarser (the whole-element swap
    // reaches δ(w) while single steps need not), so the suite checks
    // refinement there — the counterexample is frozen in the library tests
    run_suite(7, "swap closure", "broue-michel", &["A3", "B2"]);
}

#[test]
fn criterion_8_iota_bijection_suite() {
    run_suite(8, "iota bijection suite", "iota-bijection", &["A3", "B3"]);
}

#[test]
fn criterion_9_cli_determinism() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["graph", "--type", "A3", "--w", "1,2,3", "--component", "--format", "dot"],
        vec!["graph", "--type", "A3", "--J", "3", "--format", "json"],
        vec!["decompose", "--type", "A2", "--J", "1", "--format", "json"],
        vec!["decompose", "--type", "B2", "--J", "1,2", "--format", "table"],
        vec!["hasse", "--type", "A3", "--J", "3", "--format", "dot"],
        vec!["hasse", "--type", "B2", "--J", "1", "--format", "json"],
        vec!["iota", "--type", "A4", "--J", "1,3", "--w", "1,2,1,3,2,4", "--format", "json"],
        vec!["iota", "--type", "A3", "--J", "3", "--full", "--format", "table"],
        vec!["certificate", "--type", "A3", "--J", "1,3", "--w", "2,1,3,2", "--K", "1,3", "--format", "json"],
        vec!["datum", "--type", "A3", "--J", "", "--Jprime", "3", "--w", "1,2,3", "--format", "json"],
        vec!["verify", "--suite", "fig1-1"],
    ];
    let mut checked = 0;
    for args in &invocations {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_cycshift"))
                .args(args)
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        assert!(
            first.status.success(),
            "cycshift {args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        let identical = first.stdout == second.stdout
            && first.stderr == second.stderr
            && first.status.code() == second.status.code();
        if !identical {
            criterion(9, "CLI determinism", false, &format!("{args:?} differs between runs"));
        }
        checked += 1;
    }
    criterion(
        9,
        "CLI determinism",
        true,
        &format!("{checked} invocations byte-identical across two runs"),
    );
}
