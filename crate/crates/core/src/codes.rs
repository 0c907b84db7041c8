//! Perfect and total perfect codes.
//!
//! Graph-level predicates ([`is_perfect_code`], [`is_total_perfect_code`])
//! are the ground truth. Subgroup codes are searched at group level as an
//! exact cover of the left cosets of `H` by conjugacy classes, and every
//! witness found is re-checked against the graph-level predicate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::classes::{center, commutator_set, is_normal, require_normal, squares_in};
use crate::error::{Error, Result};
use crate::exact_cover::{ColumnChoice, ExactCover};
use crate::graph::{CayleySumGraph, ConnectionSet};
use crate::group::{Element, Group};
use crate::quotient::quotient;
use crate::set::ElementSet;
use crate::subgroup::{
    all_subgroups, coset_index, is_left_transversal, left_cosets, subgroup_as_group, Subgroup,
};

/// Graphs with more vertices are rejected by [`CodeScope::AllSubsets`].
pub const MAX_SUBSET_SEARCH_VERTICES: usize = 24;
/// Groups with more conjugacy classes are rejected by the witness search.
pub const MAX_WITNESS_CLASSES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeKind {
    Perfect,
    TotalPerfect,
}

impl CodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Perfect => "perfect",
            CodeKind::TotalPerfect => "total",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeScope {
    SubgroupsOnly,
    AllSubsets,
}

/// How "`H ∩ Y` contains precisely one unique element which is a nonsquare
/// of `H`" is read in the total-code criterion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TotalReading {
    /// `H ∩ Y` is a single element, and it is a nonsquare of `H`.
    #[default]
    SingleNonsquare,
    /// `H ∩ Y` contains exactly one nonsquare of `H` (squares allowed besides).
    ExactlyOneNonsquare,
}

/// A connection set certifying that a subgroup is a code of kind `kind`.
#[derive(Clone, Debug)]
pub struct CodeWitness {
    pub subgroup: Subgroup,
    pub kind: CodeKind,
    pub connection_set: ConnectionSet,
    /// Result of the graph-level predicate on `CS(G, connection_set)`.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub holds: bool,
    pub witness_x: Option<Element>,
    pub witness_coset: Option<ElementSet>,
    pub detail: String,
}

/// No two members of `c` are adjacent and every other vertex has exactly
/// one neighbor in `c`.
pub fn is_perfect_code(graph: &CayleySumGraph<'_>, c: &ElementSet) -> bool {
    (0..graph.vertex_count()).all(|v| {
        let hits = graph.neighborhood(v).intersection_len(c);
        if c.contains(v) {
            hits == 0
        } else {
            hits == 1
        }
    })
}

/// Every vertex, members of `c` included, has exactly one neighbor in `c`.
pub fn is_total_perfect_code(graph: &CayleySumGraph<'_>, c: &ElementSet) -> bool {
    (0..graph.vertex_count()).all(|v| graph.neighborhood(v).intersection_len(c) == 1)
}

pub fn is_code(graph: &CayleySumGraph<'_>, c: &ElementSet, kind: CodeKind) -> bool {
    match kind {
        CodeKind::Perfect => is_perfect_code(graph, c),
        CodeKind::TotalPerfect => is_total_perfect_code(graph, c),
    }
}

/// All codes of `kind` in `graph` within `scope`, in ascending set order.
///
/// `AllSubsets` branches on the lowest-index vertex not yet dominated,
/// choosing which closed (perfect) or open (total) neighborhood covers it.
pub fn enumerate_codes(
    graph: &CayleySumGraph<'_>,
    kind: CodeKind,
    scope: CodeScope,
) -> Result<Vec<ElementSet>> {
    let g = graph.group();
    let mut out = match scope {
        CodeScope::SubgroupsOnly => all_subgroups(g)?
            .into_iter()
            .map(|h| h.carrier().clone())
            .filter(|c| is_code(graph, c, kind))
            .collect(),
        CodeScope::AllSubsets => {
            let n = graph.vertex_count();
            if n > MAX_SUBSET_SEARCH_VERTICES {
                return Err(Error::SearchBound(format!(
                    "subset enumeration supports at most {MAX_SUBSET_SEARCH_VERTICES} vertices, got {n}"
                )));
            }
            let mut ec = ExactCover::new(n);
            for v in 0..n {
                let mut ball = graph.neighborhood(v).clone();
                if kind == CodeKind::Perfect {
                    ball.insert(v);
                }
                ec.add_row(ball.iter());
            }
            ec.all_solutions(ColumnChoice::FirstUncovered)
                .into_iter()
                .map(|rows| ElementSet::from_elements(n, rows))
                .collect::<Vec<_>>()
        }
    };
    out.sort();
    Ok(out)
}

/// `X` is normal, avoids the identity, and `X ∪ {1}` is a left transversal of `H`.
pub fn perfect_transversal_condition(g: &Group, h: &Subgroup, x: &ElementSet) -> bool {
    if x.contains(g.identity()) || !is_normal(g, x) {
        return false;
    }
    let mut t = x.clone();
    t.insert(g.identity());
    is_left_transversal(g, h, &t)
}

/// `Y` is normal, a left transversal of `H`, and meets `H` as `reading` requires.
pub fn total_transversal_condition(
    g: &Group,
    h: &Subgroup,
    y: &ElementSet,
    reading: TotalReading,
) -> bool {
    if !is_normal(g, y) || !is_left_transversal(g, h, y) {
        return false;
    }
    let squares = squares_in(g, h);
    let meet = y.intersection(h.carrier());
    let nonsquares = meet.iter().filter(|&x| !squares.contains(x)).count();
    match reading {
        TotalReading::SingleNonsquare => meet.len() == 1 && nonsquares == 1,
        TotalReading::ExactlyOneNonsquare => nonsquares == 1,
    }
}

pub fn subgroup_code_witness(
    g: &Group,
    h: &Subgroup,
    kind: CodeKind,
) -> Result<Option<CodeWitness>> {
    subgroup_code_witness_with(g, h, kind, TotalReading::default())
}

/// Searches for a normal connection set making `h` a code of `kind`.
///
/// Columns are the left cosets of `h`; each non-identity conjugacy class
/// meeting every coset at most once is a row. For perfect codes the coset
/// `H` itself is pre-covered by the identity and classes meeting `H` are
/// excluded. `Ok(None)` means no witness exists.
pub fn subgroup_code_witness_with(
    g: &Group,
    h: &Subgroup,
    kind: CodeKind,
    reading: TotalReading,
) -> Result<Option<CodeWitness>> {
    g.check_set(h.carrier())?;
    let classes = g.classes();
    if classes.len() > MAX_WITNESS_CLASSES {
        return Err(Error::SearchBound(format!(
            "witness search supports at most {MAX_WITNESS_CLASSES} conjugacy classes, got {}",
            classes.len()
        )));
    }
    let coset_of = coset_index(g, h);
    let ncosets = h.index_in(g);
    let home = coset_of[g.identity()];
    let squares = squares_in(g, h);
    let identity_class = classes.class_of(g.identity());

    let mut ec = ExactCover::new(ncosets);
    let mut row_class = Vec::new();
    'classes: for (id, class) in classes.classes().iter().enumerate() {
        if id == identity_class {
            continue;
        }
        let mut hit = ElementSet::empty(ncosets);
        for x in class.iter() {
            let c = coset_of[x];
            if hit.contains(c) {
                continue 'classes;
            }
            hit.insert(c);
        }
        if hit.contains(home) {
            match kind {
                CodeKind::Perfect => continue,
                CodeKind::TotalPerfect => {
                    let x = class.intersection(h.carrier()).first().unwrap();
                    if reading == TotalReading::SingleNonsquare && squares.contains(x) {
                        continue;
                    }
                }
            }
        }
        ec.add_row(hit.iter());
        row_class.push(id);
    }
    if kind == CodeKind::Perfect {
        ec.precover(home);
    }

    let mut found = None;
    ec.for_each_solution(ColumnChoice::MostConstrained, |rows| {
        let x = classes.union_of(rows.iter().map(|&r| row_class[r]));
        let ok = match kind {
            CodeKind::Perfect => perfect_transversal_condition(g, h, &x),
            CodeKind::TotalPerfect => total_transversal_condition(g, h, &x, reading),
        };
        if ok {
            found = Some(x);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let Some(x) = found else {
        return Ok(None);
    };
    let connection_set = ConnectionSet::new(g, x, false)?;
    let graph = CayleySumGraph::new(g, connection_set.clone());
    let verified = is_code(&graph, h.carrier(), kind);
    Ok(Some(CodeWitness {
        subgroup: h.clone(),
        kind,
        connection_set,
        verified,
    }))
}

fn require_normal_subgroup(g: &Group, h: &Subgroup) -> Result<()> {
    require_normal(g, h.carrier())
}

/// For every `x` with `[x, G] ⊆ H` some `xh` (`h` in `H`) is central.
///
/// When this fails, `witness_x` is the least `x` with `[x, G] ⊆ H` and
/// `xH ∩ Z(G) = ∅`, and `witness_coset` is `xH`.
pub fn condition_xh(g: &Group, h: &Subgroup) -> Result<CriterionReport> {
    require_normal_subgroup(g, h)?;
    let z = center(g);
    for x in g.elements() {
        if !commutator_set(g, x).is_subset(h.carrier()) {
            continue;
        }
        if !h.iter().any(|y| z.contains(g.mul(x, y))) {
            let coset = ElementSet::from_elements(g.order(), h.iter().map(|y| g.mul(x, y)));
            return Ok(CriterionReport {
                holds: false,
                witness_x: Some(x),
                detail: format!(
                    "[{0}, G] lies in H but {0}H = {1} contains no central element",
                    g.name(x),
                    g.format_set(&coset)
                ),
                witness_coset: Some(coset),
            });
        }
    }
    Ok(CriterionReport {
        holds: true,
        witness_x: None,
        witness_coset: None,
        detail: "every x with [x, G] in H has a central element in xH".into(),
    })
}

/// Some left coset `xH` is invariant under conjugation by all of `G` and
/// contains no central element. Holding means `H` is *not* a perfect code.
///
/// Coset invariance is checked directly on the set `g^-1 L g`; `witness_x`
/// is the least element of the reported coset.
pub fn condition_invariant_coset(g: &Group, h: &Subgroup) -> Result<CriterionReport> {
    require_normal_subgroup(g, h)?;
    let z = center(g);
    for coset in left_cosets(g, h) {
        if !coset.is_disjoint(z.carrier()) {
            continue;
        }
        let invariant = g.elements().all(|k| {
            ElementSet::from_elements(g.order(), coset.iter().map(|x| g.conjugate(x, k))) == coset
        });
        if invariant {
            return Ok(CriterionReport {
                holds: true,
                witness_x: coset.first(),
                detail: format!(
                    "coset {} is conjugation invariant and avoids Z(G)",
                    g.format_set(&coset)
                ),
                witness_coset: Some(coset),
            });
        }
    }
    Ok(CriterionReport {
        holds: false,
        witness_x: None,
        witness_coset: None,
        detail: "every conjugation-invariant coset meets Z(G)".into(),
    })
}

/// Truth values behind the two implications relating `H`, `N` and `H/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTheoremReport {
    pub h_is_code: bool,
    pub quotient_is_code: bool,
    pub n_is_code: bool,
    /// `H` code of `G` implies `H/N` code of `G/N`.
    pub part_i: bool,
    /// `N` code of `G` and `H/N` code of `G/N` imply `H` code of `G`.
    pub part_ii: bool,
}

impl QuotientTheoremReport {
    pub fn holds(&self) -> bool {
        self.part_i && self.part_ii
    }
}

pub fn verify_quotient_theorem(
    g: &Group,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<QuotientTheoremReport> {
    require_normal_subgroup(g, n)?;
    require_normal_subgroup(g, h)?;
    if !n.is_subgroup_of(h) {
        return Err(Error::NotContained(format!(
            "{} is not contained in {}",
            g.format_set(n.carrier()),
            g.format_set(h.carrier())
        )));
    }
    let q = quotient(g, n)?;
    let hq = q.project_subgroup(h);
    let h_is_code = subgroup_code_witness(g, h, CodeKind::Perfect)?.is_some();
    let n_is_code = subgroup_code_witness(g, n, CodeKind::Perfect)?.is_some();
    let quotient_is_code = subgroup_code_witness(&q.quotient, &hq, CodeKind::Perfect)?.is_some();
    Ok(QuotientTheoremReport {
        h_is_code,
        quotient_is_code,
        n_is_code,
        part_i: !h_is_code || quotient_is_code,
        part_ii: !(n_is_code && quotient_is_code) || h_is_code,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionReport {
    /// `X ∩ K`, as elements of `G`.
    pub restricted: ElementSet,
    /// `(X ∩ K) ∪ {1}` is a left transversal of `H` in `K`.
    pub transversal: bool,
    /// `H` is a perfect code of `CS(K, X ∩ K)`.
    pub graph_level: bool,
}

impl RestrictionReport {
    pub fn holds(&self) -> bool {
        self.transversal && self.graph_level
    }
}

/// Restricts a perfect-code witness for `H` in `G` to an intermediate
/// subgroup `H ⊆ K ⊆ G`.
pub fn lemma_subgroup_restriction(
    g: &Group,
    h: &Subgroup,
    k: &Subgroup,
    witness: &CodeWitness,
) -> Result<RestrictionReport> {
    if !h.is_subgroup_of(k) {
        return Err(Error::NotContained(format!(
            "{} is not contained in {}",
            g.format_set(h.carrier()),
            g.format_set(k.carrier())
        )));
    }
    if witness.subgroup.carrier() != h.carrier() || witness.kind != CodeKind::Perfect {
        return Err(Error::InvalidParameter(
            "witness must certify H as a perfect code".into(),
        ));
    }
    let restricted = witness.connection_set.set().intersection(k.carrier());
    let (kg, embed) = subgroup_as_group(g, k)?;
    let mut local = alloc::vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let to_local = |s: &ElementSet| ElementSet::from_elements(kg.order(), s.iter().map(|x| local[x]));
    let h_local = Subgroup::new(&kg, to_local(h.carrier()))?;
    let x_local = to_local(&restricted);
    let mut t = x_local.clone();
    t.insert(kg.identity());
    let transversal = is_left_transversal(&kg, &h_local, &t);
    let graph_level = match CayleySumGraph::build(&kg, x_local, false) {
        Ok(cs) => is_perfect_code(&cs, h_local.carrier()),
        Err(_) => false,
    };
    Ok(RestrictionReport {
        restricted,
        transversal,
        graph_level,
    })
}
