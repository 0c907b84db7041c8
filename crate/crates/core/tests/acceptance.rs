//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cayley_sum_core::codes::{
    enumerate_codes, is_perfect_code, lemma_subgroup_restriction, CodeWitness,
};
use cayley_sum_core::corpus::corpus_up_to;
use cayley_sum_core::families::{dihedral, v8n};
use cayley_sum_core::subgroup::generated;
use cayley_sum_core::suites::{run_suite, Suite, SuiteOutcome};
use cayley_sum_core::v8n::{
    census, classes_match_table, coset_formula_check, example_code_claims, CosetForm,
};
use cayley_sum_core::{CayleySumGraph, CodeKind, CodeScope, ConnectionSet, ElementSet, Group};

use common::naive_codes;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// The D12 example drawing: each vertex with the later vertices it is joined to.
const D12_DRAWING: &[(&str, &[&str])] = &[
    ("1", &["a", "a^5", "ab", "a^3b", "a^5b"]),
    ("a^3", &["a^4", "b", "a^2b", "a^4b", "a^2"]),
    ("a", &["a^4", "b", "a^2b", "a^4b"]),
    ("a^5", &["b", "a^2b", "a^4b", "a^2"]),
    ("ab", &["a^4", "b", "a^2b", "a^2"]),
    ("a^3b", &["a^4", "a^2b", "a^4b", "a^2"]),
    ("a^5b", &["a^4", "b", "a^4b", "a^2"]),
];

/// The drawing of its restriction to <a>.
const RESTRICTED_DRAWING: &[(&str, &str)] = &[
    ("1", "a"),
    ("1", "a^5"),
    ("a", "a^4"),
    ("a^5", "a^2"),
    ("a^3", "a^2"),
    ("a^3", "a^4"),
];

fn edge_set(g: &Group, pairs: impl IntoIterator<Item = (String, String)>) -> BTreeSet<(usize, usize)> {
    pairs
        .into_iter()
        .map(|(u, v)| {
            let (u, v) = (g.parse_element(&u).unwrap(), g.parse_element(&v).unwrap());
            (u.min(v), u.max(v))
        })
        .collect()
}

fn figure1_x(g: &Group) -> ElementSet {
    g.parse_set("a,a^5,ab,a^3b,a^5b").unwrap()
}

fn ac1() -> Outcome {
    let g = dihedral(12).unwrap();
    let cs = CayleySumGraph::build(&g, figure1_x(&g), false).unwrap();
    let drawn = edge_set(
        &g,
        D12_DRAWING
            .iter()
            .flat_map(|(u, vs)| vs.iter().map(move |v| (u.to_string(), v.to_string()))),
    );
    let computed: BTreeSet<_> = cs.edges().collect();
    let na = cs.neighborhood(g.parse_element("a").unwrap()).clone();
    let code = is_perfect_code(&cs, &g.parse_set("1,a^3").unwrap());
    let pass = computed == drawn && na == g.parse_set("1,a^4,b,a^2b,a^4b").unwrap() && code;
    check(
        pass,
        format!(
            "{} computed edges, {} drawn edges, edge sets equal: {}, N(a) = {}, {{1, a^3}} perfect: {code}",
            computed.len(),
            drawn.len(),
            computed == drawn,
            g.format_set(&na)
        ),
    )
}

fn ac2() -> Outcome {
    let g = dihedral(12).unwrap();
    let h = generated(&g, &g.parse_set("a^3").unwrap());
    let k = generated(&g, &g.parse_set("a").unwrap());
    let w = CodeWitness {
        subgroup: h.clone(),
        kind: CodeKind::Perfect,
        connection_set: ConnectionSet::new(&g, figure1_x(&g), false).unwrap(),
        verified: true,
    };
    let r = lemma_subgroup_restriction(&g, &h, &k, &w).unwrap();
    let (kg, embed) = cayley_sum_core::subgroup::subgroup_as_group(&g, &k).unwrap();
    let local: ElementSet = ElementSet::from_elements(
        kg.order(),
        r.restricted.iter().map(|x| embed.iter().position(|&e| e == x).unwrap()),
    );
    let cs = CayleySumGraph::build(&kg, local, false).unwrap();
    let drawn = edge_set(
        &kg,
        RESTRICTED_DRAWING.iter().map(|(u, v)| (u.to_string(), v.to_string())),
    );
    let computed: BTreeSet<_> = cs.edges().collect();
    let cycle = cs.is_connected() && (0..kg.order()).all(|v| cs.degree(v) == 2);
    let code = is_perfect_code(&cs, &kg.parse_set("1,a^3").unwrap());
    check(
        r.holds() && r.restricted == g.parse_set("a,a^5").unwrap() && computed == drawn && cycle && code,
        format!(
            "X ∩ <a> = {}, 6-cycle: {cycle}, edges match the drawing: {}, {{1, a^3}} perfect: {code}",
            g.format_set(&r.restricted),
            computed == drawn
        ),
    )
}

fn corpus_groups(max_order: usize) -> Vec<Group> {
    corpus_up_to(max_order)
        .iter()
        .map(|s| s.build().unwrap())
        .collect()
}

fn run_over(suite: Suite, groups: &[Group]) -> SuiteOutcome {
    let mut total = SuiteOutcome {
        exhaustive: true,
        ..Default::default()
    };
    for g in groups {
        total.merge(run_suite(suite, g).unwrap());
    }
    total
}

fn suite_outcome(name: &str, r: SuiteOutcome) -> Outcome {
    let mut detail = format!("{name}: {} cases, {} failures", r.cases, r.failures.len());
    if !r.exhaustive {
        detail.push_str(" (normal subsets sampled for large class counts)");
    }
    for f in r.failures.iter().take(10) {
        detail.push_str("\n      ");
        detail.push_str(f);
    }
    check(r.passed() && r.cases > 0, detail)
}

fn ac3() -> Outcome {
    let groups: Vec<Group> = corpus_groups(32).into_iter().filter(|g| g.is_abelian()).collect();
    let r = run_over(Suite::Abelian, &groups);
    suite_outcome(&format!("{} abelian groups", groups.len()), r)
}

fn ac_suite(suite: Suite) -> Outcome {
    let groups = corpus_groups(usize::MAX);
    let r = run_over(suite, &groups);
    suite_outcome(&format!("{} groups", groups.len()), r)
}

fn ac_graph_suite(suite: Suite) -> Outcome {
    let mut groups = corpus_groups(usize::MAX);
    groups.push(v8n(1).unwrap());
    groups.push(v8n(3).unwrap());
    let r = run_over(suite, &groups);
    suite_outcome(&format!("{} groups incl. the V8/V24 census space", groups.len()), r)
}

fn ac9() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in [1, 3, 5] {
        let g = v8n(n).unwrap();
        if !classes_match_table(&g).unwrap() {
            bad.push(format!("n={n}: class list differs"));
        }
        for form in CosetForm::all(n) {
            let r = coset_formula_check(&g, form).unwrap();
            checked += r.checked;
            bad.extend(r.mismatches.into_iter().map(|m| format!("n={n} {form:?}: {m}")));
        }
    }
    check(
        bad.is_empty(),
        format!("{checked} tabulated cosets, mismatches: {:?}", bad),
    )
}

fn ac10() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for n in [1, 3] {
        let g = v8n(n).unwrap();
        for c in example_code_claims(&g).unwrap() {
            total += 1;
            if !c.holds() {
                bad.push(format!(
                    "n={n} {} {} stated {} (perfect: {}, total: {})",
                    c.graph.label(),
                    c.subgroup_label,
                    c.claimed.as_str(),
                    c.is_perfect,
                    c.is_total
                ));
            }
        }
    }
    let mut detail = format!("{total} stated assignments, {} fail at graph level", bad.len());
    for b in &bad {
        detail.push_str("\n      ");
        detail.push_str(b);
    }
    check(bad.is_empty(), detail)
}

fn ac11() -> Outcome {
    let mut pass = true;
    let mut lines = Vec::new();
    for n in [1, 3] {
        let g = v8n(n).unwrap();
        for kind in [CodeKind::Perfect, CodeKind::TotalPerfect] {
            let r = census(&g, kind, false).unwrap();
            let ok = r.matches() && r.excluded_found.is_empty();
            pass &= ok;
            let found: Vec<_> = r.found_subgroups.iter().map(|h| g.format_set(h)).collect();
            lines.push(format!(
                "n={n} {}: {} connected graphs, found {} of expected {}{}, excluded found {:?}, found {:?}",
                kind.as_str(),
                r.connected_graph_count,
                r.found_subgroups.len(),
                r.expected.len(),
                if r.matches() { " (exact)" } else { " (MISMATCH)" },
                r.excluded_found.iter().map(|h| g.format_set(h)).collect::<Vec<_>>(),
                found
            ));
        }
    }
    check(pass, format!("census\n      {}", lines.join("\n      ")))
}

fn ac12() -> Outcome {
    let mut graphs = 0;
    let mut bad = Vec::new();
    for spec in corpus_up_to(12) {
        let g = spec.build().unwrap();
        for allow in [false, true] {
            for x in cayley_sum_core::enumerate::normal_subsets(&g, allow).sets {
                let cs = CayleySumGraph::build(&g, x.clone(), allow).unwrap();
                graphs += 1;
                for (kind, total) in [(CodeKind::Perfect, false), (CodeKind::TotalPerfect, true)] {
                    let fast = enumerate_codes(&cs, kind, CodeScope::AllSubsets).unwrap();
                    if fast != naive_codes(&g, &x, total) {
                        bad.push(format!("{} X = {} {}", g.family(), g.format_set(&x), kind.as_str()));
                    }
                }
            }
        }
    }
    check(
        bad.is_empty() && graphs > 0,
        format!("{graphs} graphs x 2 kinds, mismatches: {:?}", bad),
    )
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("D12 example graph reproduction", Duration::from_secs(1), ac1),
        ("restriction to <a>", Duration::from_secs(1), ac2),
        ("abelian completeness", Duration::from_secs(30), ac3),
        ("xh equivalence", Duration::from_secs(300), || ac_suite(Suite::Xh)),
        ("invariant-coset equivalence and final statement", Duration::from_secs(300), || {
            ac_suite(Suite::InvariantCoset)
        }),
        ("quotient implications", Duration::from_secs(300), || ac_suite(Suite::Quotient)),
        ("connectivity lemma", Duration::from_secs(120), || ac_graph_suite(Suite::Connectivity)),
        ("regularity criterion", Duration::from_secs(120), || ac_graph_suite(Suite::Regularity)),
        ("V8n class and coset tables", Duration::from_secs(10), ac9),
        ("V8n example graph claims", Duration::from_secs(10), ac10),
        ("V8n classification census", Duration::from_secs(600), ac11),
        ("branch-and-bound vs naive code enumeration", Duration::from_secs(60), ac12),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= *limit;
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "AC{:02} {} {name} [{:.2?} / limit {:?}{}] {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            took,
            limit,
            if in_time { "" } else { ", TIME LIMIT EXCEEDED" },
            out.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
