//! The groups `V_8n` (`n` odd): named normal sets, the five example graphs,
//! the class and coset tables, and the classification censuses.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::codes::{is_perfect_code, is_total_perfect_code, CodeKind};
use crate::error::{Error, Result};
use crate::families::{v8n_element, word_name};
use crate::graph::CayleySumGraph;
use crate::group::{Element, FamilyTag, Group};
use crate::set::ElementSet;
use crate::subgroup::{all_subgroups, generated, left_cosets, Subgroup};

/// Census sizes run without an explicit override.
pub const DEFAULT_CENSUS_N: [usize; 2] = [1, 3];

/// The `n` of a group built by [`crate::families::v8n`].
pub fn parameter(g: &Group) -> Result<usize> {
    match g.family() {
        FamilyTag::V8n(n) => Ok(*n),
        other => Err(Error::InvalidParameter(format!("expected a V8n group, got {other}"))),
    }
}

fn el(n: usize, i: i64, j: i64) -> Element {
    v8n_element(n, i, j)
}

fn set_of(n: usize, pairs: impl IntoIterator<Item = (i64, i64)>) -> ElementSet {
    ElementSet::from_elements(8 * n, pairs.into_iter().map(|(i, j)| el(n, i, j)))
}

fn cyclic_of(g: &Group, n: usize, i: i64, j: i64) -> Subgroup {
    generated(g, &ElementSet::singleton(g.order(), el(n, i, j)))
}

fn odd_exponents(n: usize) -> impl Iterator<Item = i64> {
    (1..2 * n as i64).step_by(2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct V8nNamedSets {
    pub n: usize,
    /// All `a^i b` and `a^i b^3`.
    pub x0: ElementSet,
    /// `a^i b`, `a^i b^3` with `i` odd.
    pub y1: ElementSet,
    /// `a^i b`, `a^i b^3` with `i` even.
    pub y2: ElementSet,
    /// `a^i`, `a^i b^2` with `i` odd.
    pub z: ElementSet,
    /// `a^i`, `a^i b^2` with `i` even and nonzero, together with `b^2`.
    pub z_prime: ElementSet,
}

impl V8nNamedSets {
    /// Broken cardinality, union or normality invariants, as messages.
    pub fn violations(&self, g: &Group) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        let sizes = [
            ("X", &self.x0, 4 * n),
            ("Y1", &self.y1, 2 * n),
            ("Y2", &self.y2, 2 * n),
            ("Z", &self.z, 2 * n),
            ("Z'", &self.z_prime, 2 * n - 1),
        ];
        for (name, set, size) in sizes {
            if set.len() != size {
                out.push(format!("|{name}| = {}, expected {size}", set.len()));
            }
            if !crate::classes::is_normal(g, set) {
                out.push(format!("{name} is not normal"));
            }
            if set.contains(g.identity()) {
                out.push(format!("{name} contains the identity"));
            }
        }
        if self.x0 != self.y1.union(&self.y2) {
            out.push("X is not Y1 ∪ Y2".into());
        }
        out
    }
}

pub fn named_sets(g: &Group) -> Result<V8nNamedSets> {
    let n = parameter(g)?;
    let m = 2 * n as i64;
    let sets = V8nNamedSets {
        n,
        x0: set_of(n, (0..m).flat_map(|i| [(i, 1), (i, 3)])),
        y1: set_of(n, odd_exponents(n).flat_map(|i| [(i, 1), (i, 3)])),
        y2: set_of(n, (0..m).step_by(2).flat_map(|i| [(i, 1), (i, 3)])),
        z: set_of(n, odd_exponents(n).flat_map(|i| [(i, 0), (i, 2)])),
        z_prime: set_of(
            n,
            (2..m)
                .step_by(2)
                .flat_map(|i| [(i, 0), (i, 2)])
                .chain([(0, 2)]),
        ),
    };
    let bad = sets.violations(g);
    if !bad.is_empty() {
        return Err(Error::InvalidParameter(bad.join("; ")));
    }
    Ok(sets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExampleGraph {
    /// `CS(V_8n, X)`, complete bipartite.
    Gamma0,
    /// `CS(V_8n, Y1 ∪ Z)`.
    Gamma1,
    /// `CS(V_8n, Y1 ∪ Z')`.
    Gamma1Prime,
    /// `CS(V_8n, Y2 ∪ Z)`.
    Gamma2,
    /// `CS(V_8n, Y2 ∪ Z')`.
    Gamma2Prime,
}

impl ExampleGraph {
    pub const ALL: [ExampleGraph; 5] = [
        ExampleGraph::Gamma0,
        ExampleGraph::Gamma1,
        ExampleGraph::Gamma1Prime,
        ExampleGraph::Gamma2,
        ExampleGraph::Gamma2Prime,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ExampleGraph::Gamma0 => "Gamma0",
            ExampleGraph::Gamma1 => "Gamma1",
            ExampleGraph::Gamma1Prime => "Gamma1'",
            ExampleGraph::Gamma2 => "Gamma2",
            ExampleGraph::Gamma2Prime => "Gamma2'",
        }
    }

    pub fn connection_set(self, s: &V8nNamedSets) -> ElementSet {
        match self {
            ExampleGraph::Gamma0 => s.x0.clone(),
            ExampleGraph::Gamma1 => s.y1.union(&s.z),
            ExampleGraph::Gamma1Prime => s.y1.union(&s.z_prime),
            ExampleGraph::Gamma2 => s.y2.union(&s.z),
            ExampleGraph::Gamma2Prime => s.y2.union(&s.z_prime),
        }
    }
}

pub fn example_graphs(g: &Group) -> Result<Vec<(ExampleGraph, CayleySumGraph<'_>)>> {
    let sets = named_sets(g)?;
    ExampleGraph::ALL
        .iter()
        .map(|&e| Ok((e, CayleySumGraph::build(g, e.connection_set(&sets), false)?)))
        .collect()
}

/// `<a^n>`, `<a^n b^2>`, then `<a^j b>`, `<a^j b^3>` for odd `j` in ascending `j`.
pub fn classified_subgroups(g: &Group) -> Result<Vec<(String, Subgroup)>> {
    let n = parameter(g)?;
    let ni = n as i64;
    let mut out = alloc::vec![
        (format!("<{}>", word_name(n, 0)), cyclic_of(g, n, ni, 0)),
        (format!("<{}>", word_name(n, 2)), cyclic_of(g, n, ni, 2)),
    ];
    for j in odd_exponents(n) {
        for k in [1, 3] {
            out.push((
                format!("<{}>", word_name(j as usize, k as usize)),
                cyclic_of(g, n, j, k),
            ));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub graph: ExampleGraph,
    pub subgroup_label: String,
    pub subgroup: ElementSet,
    pub claimed: CodeKind,
    pub is_perfect: bool,
    pub is_total: bool,
}

impl ClaimCheck {
    pub fn holds(&self) -> bool {
        match self.claimed {
            CodeKind::Perfect => self.is_perfect,
            CodeKind::TotalPerfect => self.is_total,
        }
    }
}

/// The stated code kind of each classified subgroup in each example graph.
pub fn claimed_kind(graph: ExampleGraph, rotation_like: bool) -> Option<CodeKind> {
    use CodeKind::*;
    match (graph, rotation_like) {
        (ExampleGraph::Gamma0, true) => None,
        (ExampleGraph::Gamma0, false) => Some(TotalPerfect),
        (ExampleGraph::Gamma1, _) => Some(TotalPerfect),
        (ExampleGraph::Gamma1Prime, true) => Some(Perfect),
        (ExampleGraph::Gamma1Prime, false) => Some(TotalPerfect),
        (ExampleGraph::Gamma2, true) => Some(TotalPerfect),
        (ExampleGraph::Gamma2, false) => Some(Perfect),
        (ExampleGraph::Gamma2Prime, _) => Some(Perfect),
    }
}

/// Evaluates every stated code assignment for the five example graphs.
/// `<a^n>` and `<a^n b^2>` are the "rotation-like" subgroups.
pub fn example_code_claims(g: &Group) -> Result<Vec<ClaimCheck>> {
    let subs = classified_subgroups(g)?;
    let mut out = Vec::new();
    for (graph_id, graph) in example_graphs(g)? {
        for (idx, (label, h)) in subs.iter().enumerate() {
            let Some(claimed) = claimed_kind(graph_id, idx < 2) else {
                continue;
            };
            out.push(ClaimCheck {
                graph: graph_id,
                subgroup_label: label.clone(),
                subgroup: h.carrier().clone(),
                claimed,
                is_perfect: is_perfect_code(&graph, h.carrier()),
                is_total: is_total_perfect_code(&graph, h.carrier()),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SmallSubgroups {
    /// Subgroups of order 2 or 3 from the full lattice.
    pub computed: Vec<Subgroup>,
    /// `<a^(2n/3)>` (when `3 | n`), `<a^n>`, `<a^n b^2>`, `<b^2>`, `<a^j b>`, `<a^j b^3>`.
    pub forms: Vec<(String, Subgroup)>,
}

impl SmallSubgroups {
    pub fn matches(&self) -> bool {
        let a: BTreeSet<_> = self.computed.iter().map(|h| h.carrier().clone()).collect();
        let b: BTreeSet<_> = self.forms.iter().map(|(_, h)| h.carrier().clone()).collect();
        a == b && b.len() == self.forms.len()
    }
}

pub fn small_subgroups(g: &Group) -> Result<SmallSubgroups> {
    let n = parameter(g)?;
    let ni = n as i64;
    let computed = all_subgroups(g)?
        .into_iter()
        .filter(|h| h.order() == 2 || h.order() == 3)
        .collect();
    let mut forms = Vec::new();
    if n % 3 == 0 {
        let k = 2 * n / 3;
        forms.push((format!("<{}>", word_name(k, 0)), cyclic_of(g, n, k as i64, 0)));
    }
    forms.push((format!("<{}>", word_name(n, 0)), cyclic_of(g, n, ni, 0)));
    forms.push((format!("<{}>", word_name(n, 2)), cyclic_of(g, n, ni, 2)));
    forms.push((format!("<{}>", word_name(0, 2)), cyclic_of(g, n, 0, 2)));
    for j in odd_exponents(n) {
        for k in [1, 3] {
            forms.push((
                format!("<{}>", word_name(j as usize, k as usize)),
                cyclic_of(g, n, j, k),
            ));
        }
    }
    Ok(SmallSubgroups { computed, forms })
}

/// The five subgroup shapes with tabulated left cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetForm {
    /// `<a^n>`
    AN,
    /// `<a^n b^2>`
    ANB2,
    /// `<b^2>`
    B2,
    /// `<a^j b>`, `j` odd
    AJB(i64),
    /// `<a^j b^3>`, `j` odd
    AJB3(i64),
}

impl CosetForm {
    pub fn all(n: usize) -> Vec<CosetForm> {
        let mut v = alloc::vec![CosetForm::AN, CosetForm::ANB2, CosetForm::B2];
        v.extend(odd_exponents(n).map(CosetForm::AJB));
        v.extend(odd_exponents(n).map(CosetForm::AJB3));
        v
    }

    fn generator(self, n: i64) -> (i64, i64) {
        match self {
            CosetForm::AN => (n, 0),
            CosetForm::ANB2 => (n, 2),
            CosetForm::B2 => (0, 2),
            CosetForm::AJB(j) => (j, 1),
            CosetForm::AJB3(j) => (j, 3),
        }
    }

    /// Tabulated `(representative, coset)` pairs, as exponent pairs `(i, j)`
    /// for `a^i b^j`.
    pub fn table(self, n: usize) -> Vec<((i64, i64), [(i64, i64); 2])> {
        let n = n as i64;
        let mut t = Vec::new();
        match self {
            CosetForm::AN => {
                for i in 1..2 * n {
                    t.push(((i, 0), [(i, 0), (n + i, 0)]));
                    t.push(((i, 1), [(i, 1), (i - n, 3)]));
                    t.push(((i, 2), [(i, 2), (i + n, 2)]));
                    t.push(((i, 3), [(i - n, 1), (i, 3)]));
                }
                t.push(((0, 1), [(0, 1), (-n, 3)]));
                t.push(((0, 2), [(0, 2), (n, 2)]));
                t.push(((0, 3), [(0, 3), (-n, 1)]));
            }
            CosetForm::ANB2 => {
                for i in 1..2 * n {
                    t.push(((i, 0), [(i, 0), (n + i, 2)]));
                    t.push(((i, 1), [(i, 1), (i - n, 1)]));
                    t.push(((i, 2), [(i + n, 0), (i, 2)]));
                    t.push(((i, 3), [(i, 3), (i - n, 3)]));
                }
                t.push(((0, 1), [(0, 1), (-n, 1)]));
                t.push(((0, 2), [(0, 2), (n, 0)]));
                t.push(((0, 3), [(0, 3), (-n, 3)]));
            }
            CosetForm::B2 => {
                for i in 1..2 * n {
                    t.push(((i, 0), [(i, 0), (i, 2)]));
                    t.push(((i, 1), [(i, 1), (i, 3)]));
                    t.push(((i, 3), [(i, 1), (i, 3)]));
                    t.push(((i, 2), [(i, 0), (i, 2)]));
                }
                t.push(((0, 1), [(0, 1), (0, 3)]));
                t.push(((0, 3), [(0, 1), (0, 3)]));
            }
            CosetForm::AJB(j) => {
                for i in 1..2 * n {
                    t.push(((i, 0), [(i, 0), (i + j, 1)]));
                    t.push(((i, 1), [(i - j, 0), (i, 1)]));
                    t.push(((i, 2), [(i, 2), (i + j, 3)]));
                    t.push(((i, 3), [(i - j, 2), (i, 3)]));
                }
                t.push(((0, 1), [(-j, 0), (0, 1)]));
                t.push(((0, 2), [(0, 2), (j, 3)]));
                t.push(((0, 3), [(0, 3), (-j, 2)]));
            }
            CosetForm::AJB3(j) => {
                for i in 1..2 * n {
                    t.push(((i, 0), [(i, 0), (i + j, 3)]));
                    t.push(((i, 1), [(i, 1), (i - j, 2)]));
                    t.push(((i, 2), [(i + j, 1), (i, 2)]));
                    t.push(((i, 3), [(i - j, 0), (i, 3)]));
                }
                t.push(((0, 1), [(0, 1), (-j, 2)]));
                t.push(((0, 2), [(0, 2), (j, 1)]));
                t.push(((0, 3), [(-j, 0), (0, 3)]));
            }
        }
        t
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CosetCheck {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// Compares every tabulated coset `rH` with the computed left coset of `r`.
pub fn coset_formula_check(g: &Group, form: CosetForm) -> Result<CosetCheck> {
    let n = parameter(g)?;
    if let CosetForm::AJB(j) | CosetForm::AJB3(j) = form {
        if j % 2 == 0 || j < 1 || j >= 2 * n as i64 {
            return Err(Error::InvalidParameter(format!(
                "j must be odd with 1 <= j < {}, got {j}",
                2 * n
            )));
        }
    }
    let (gi, gj) = form.generator(n as i64);
    let h = cyclic_of(g, n, gi, gj);
    let cosets = left_cosets(g, &h);
    let mut report = CosetCheck::default();
    for ((ri, rj), members) in form.table(n) {
        let rep = el(n, ri, rj);
        let expected = set_of(n, members);
        let actual = cosets.iter().find(|c| c.contains(rep)).unwrap();
        report.checked += 1;
        if *actual != expected {
            report.mismatches.push(format!(
                "{}H: tabulated {}, computed {}",
                g.name(rep),
                g.format_set(&expected),
                g.format_set(actual)
            ));
        }
    }
    Ok(report)
}

/// The tabulated conjugacy classes, as sets of element names.
pub fn tabulated_classes(n: usize) -> Vec<BTreeSet<String>> {
    let ni = n as i64;
    let m = 2 * ni;
    let name = |i: i64, j: i64| word_name(i.rem_euclid(m) as usize, j.rem_euclid(4) as usize);
    let set = |pairs: &[(i64, i64)]| pairs.iter().map(|&(i, j)| name(i, j)).collect::<BTreeSet<_>>();
    let mut out = alloc::vec![set(&[(0, 0)]), set(&[(0, 2)])];
    for r in 0..ni {
        out.push(set(&[(2 * r + 1, 0), (-2 * r - 1, 2)]));
    }
    for s in 1..=(ni - 1) / 2 {
        out.push(set(&[(2 * s, 0), (-2 * s, 0)]));
        out.push(set(&[(2 * s, 2), (-2 * s, 2)]));
    }
    for parity in [0, 1] {
        let pairs: Vec<_> = (0..m)
            .filter(|j| j % 2 == parity)
            .flat_map(|j| [(j, 1), (j, 3)])
            .collect();
        out.push(set(&pairs));
    }
    out
}

/// Computed conjugacy classes equal [`tabulated_classes`] as a set of name sets.
pub fn classes_match_table(g: &Group) -> Result<bool> {
    let n = parameter(g)?;
    let computed: BTreeSet<BTreeSet<String>> = g
        .classes()
        .classes()
        .iter()
        .map(|c| c.iter().map(|x| String::from(g.name(x))).collect())
        .collect();
    let tabulated = tabulated_classes(n);
    let len = tabulated.len();
    let tabulated: BTreeSet<_> = tabulated.into_iter().collect();
    Ok(tabulated.len() == len && computed == tabulated)
}

/// One connection set of the census space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusGraph {
    /// Ids of the conjugacy classes making up the connection set.
    pub classes: Vec<usize>,
    pub connection_set: ElementSet,
    pub connected: bool,
    /// Nontrivial subgroups that are codes of this graph (connected graphs only).
    pub codes: Vec<ElementSet>,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub kind: CodeKind,
    pub connected_graph_count: usize,
    pub found_subgroups: Vec<ElementSet>,
    pub expected: Vec<ElementSet>,
    pub per_graph: Vec<CensusGraph>,
    /// Subgroups whose presence would contradict the classification proofs
    /// (`<b^2>`, `<a^(2n/3)>` when `3 | n`, and the whole group) that were found.
    pub excluded_found: Vec<ElementSet>,
    /// Connected connection sets containing neither `Y1` nor `Y2`.
    pub missing_reflection_class: Vec<ElementSet>,
}

impl CensusReport {
    pub fn matches(&self) -> bool {
        self.found_subgroups == self.expected
    }

    /// `matches()` plus the exclusion and structural checks.
    pub fn all_checks_pass(&self) -> bool {
        self.matches() && self.excluded_found.is_empty() && self.missing_reflection_class.is_empty()
    }
}

/// Exhaustive census over every identity-free normal subset of `V_8n`.
///
/// `n` outside [`DEFAULT_CENSUS_N`] is refused unless `allow_large`.
pub fn census(g: &Group, kind: CodeKind, allow_large: bool) -> Result<CensusReport> {
    let n = parameter(g)?;
    if !allow_large && !DEFAULT_CENSUS_N.contains(&n) {
        return Err(Error::SearchBound(format!(
            "census for n = {n} needs an explicit override"
        )));
    }
    let ni = n as i64;
    let sets = named_sets(g)?;
    let classes = g.classes();
    let class_ids: Vec<usize> = (0..classes.len())
        .filter(|&c| c != classes.class_of(g.identity()))
        .collect();
    if class_ids.len() >= 24 {
        return Err(Error::SearchBound(format!(
            "{} classes give too many connection sets",
            class_ids.len()
        )));
    }
    let candidates: Vec<Subgroup> = all_subgroups(g)?
        .into_iter()
        .filter(|h| h.order() > 1)
        .collect();

    let mut per_graph = Vec::new();
    let mut found = BTreeSet::new();
    let mut missing_reflection_class = Vec::new();
    for mask in 0u32..(1 << class_ids.len()) {
        let chosen: Vec<usize> = class_ids
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        let x = classes.union_of(chosen.iter().copied());
        let graph = CayleySumGraph::build(g, x.clone(), false)?;
        let connected = graph.is_connected();
        let mut codes = Vec::new();
        if connected {
            if !sets.y1.is_subset(&x) && !sets.y2.is_subset(&x) {
                missing_reflection_class.push(x.clone());
            }
            for h in &candidates {
                let ok = match kind {
                    CodeKind::Perfect => is_perfect_code(&graph, h.carrier()),
                    CodeKind::TotalPerfect => is_total_perfect_code(&graph, h.carrier()),
                };
                if ok {
                    codes.push(h.carrier().clone());
                    found.insert(h.carrier().clone());
                }
            }
        }
        per_graph.push(CensusGraph {
            classes: chosen,
            connection_set: x,
            connected,
            codes,
        });
    }
    per_graph.sort_by(|a, b| a.connection_set.cmp(&b.connection_set));

    let mut expected: Vec<ElementSet> = classified_subgroups(g)?
        .into_iter()
        .map(|(_, h)| h.carrier().clone())
        .collect();
    expected.sort();
    expected.dedup();

    let mut excluded = alloc::vec![cyclic_of(g, n, 0, 2).carrier().clone(), g.full_set()];
    if n % 3 == 0 {
        excluded.push(cyclic_of(g, n, 2 * ni / 3, 0).carrier().clone());
    }
    let excluded_found = excluded.into_iter().filter(|e| found.contains(e)).collect();

    Ok(CensusReport {
        n,
        kind,
        connected_graph_count: per_graph.iter().filter(|p| p.connected).count(),
        found_subgroups: found.into_iter().collect(),
        expected,
        per_graph,
        excluded_found,
        missing_reflection_class,
    })
}

/// Groups the subgroups found by a census by order, for summaries.
pub fn found_by_order(report: &CensusReport) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for h in &report.found_subgroups {
        *m.entry(h.len()).or_insert(0) += 1;
    }
    m
}
