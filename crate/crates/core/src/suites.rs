//! Per-group property suites checking the structural theorems.
//!
//! Each suite evaluates one statement on every applicable case of a single
//! group and lists the cases where the statement fails. Drivers run the
//! suites over a corpus, possibly in parallel across groups.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classes::{center, commutator_set};
use crate::codes::{
    condition_invariant_coset, condition_xh, lemma_subgroup_restriction,
    subgroup_code_witness, subgroup_code_witness_with, verify_quotient_theorem, CodeKind,
    TotalReading,
};
use crate::enumerate::normal_subsets;
use crate::error::Result;
use crate::graph::{connectivity_criterion, regularity_criterion, CayleySumGraph};
use crate::group::Group;
use crate::subgroup::{all_subgroups, is_normal_subgroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// `[x,G] ⊆ H ⇒ xH ∩ Z(G) ≠ ∅` for all `x` iff a normal `H` is a perfect code.
    Xh,
    /// An invariant coset avoiding `Z(G)` exists iff a normal `H` is not a
    /// perfect code; if not a code, some `x ∉ H` has `[x,G] ⊆ H`, `xH ∩ Z(G) = ∅`.
    InvariantCoset,
    /// Both implications between `H`, `N` and `H/N`.
    Quotient,
    /// Perfect-code witnesses restrict to intermediate subgroups.
    Restriction,
    /// BFS connectivity equals the generation and index criterion.
    Connectivity,
    /// Degree regularity equals the square-free-or-all-squares criterion.
    Regularity,
    /// Every subgroup of an abelian group is a perfect code.
    Abelian,
    /// Both readings of the total-code criterion agree.
    TotalReading,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Xh,
        Suite::InvariantCoset,
        Suite::Quotient,
        Suite::Restriction,
        Suite::Connectivity,
        Suite::Regularity,
        Suite::Abelian,
        Suite::TotalReading,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Xh => "xh",
            Suite::InvariantCoset => "xH",
            Suite::Quotient => "quotient",
            Suite::Restriction => "restriction",
            Suite::Connectivity => "connectivity",
            Suite::Regularity => "regularity",
            Suite::Abelian => "abelian",
            Suite::TotalReading => "total-reading",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
    /// Whether every case of the statement was covered (normal subsets may be sampled).
    pub exhaustive: bool,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: SuiteOutcome) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.exhaustive &= other.exhaustive;
    }
}

fn label(g: &Group) -> String {
    format!("{}", g.family())
}

fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g)?
        .into_iter()
        .filter(|h| is_normal_subgroup(g, h))
        .collect())
}

/// Some `x ∉ H` with `[x,G] ⊆ H` and `xH ∩ Z(G) = ∅`.
fn escaping_element(g: &Group, h: &Subgroup) -> Option<usize> {
    let z = center(g);
    g.elements().find(|&x| {
        !h.contains(x)
            && commutator_set(g, x).is_subset(h.carrier())
            && h.iter().all(|y| !z.contains(g.mul(x, y)))
    })
}

pub fn run_suite(suite: Suite, g: &Group) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome {
        exhaustive: true,
        ..SuiteOutcome::default()
    };
    let name = label(g);
    let fail = |out: &mut SuiteOutcome, msg: String| out.failures.push(format!("{name}: {msg}"));
    match suite {
        Suite::Xh | Suite::InvariantCoset => {
            for h in normal_subgroups(g)? {
                out.cases += 1;
                let hs = g.format_set(h.carrier());
                let w = subgroup_code_witness(g, &h, CodeKind::Perfect)?;
                if w.as_ref().is_some_and(|w| !w.verified) {
                    fail(&mut out, format!("H = {hs}: witness fails the graph check"));
                }
                if suite == Suite::Xh {
                    let c = condition_xh(g, &h)?;
                    if c.holds != w.is_some() {
                        fail(
                            &mut out,
                            format!(
                                "H = {hs}: condition {} but witness {}; {}",
                                if c.holds { "holds" } else { "fails" },
                                if w.is_some() { "exists" } else { "absent" },
                                c.detail
                            ),
                        );
                    }
                } else {
                    let c = condition_invariant_coset(g, &h)?;
                    if c.holds != w.is_none() {
                        fail(
                            &mut out,
                            format!(
                                "H = {hs}: condition {} but witness {}; {}",
                                if c.holds { "holds" } else { "fails" },
                                if w.is_some() { "exists" } else { "absent" },
                                c.detail
                            ),
                        );
                    }
                    if w.is_none() && escaping_element(g, &h).is_none() {
                        fail(
                            &mut out,
                            format!(
                                "H = {hs}: no perfect code, yet every x with [x,G] in H \
                                 has a central element in xH"
                            ),
                        );
                    }
                }
            }
        }
        Suite::Quotient => {
            let normals = normal_subgroups(g)?;
            for n in &normals {
                for h in normals.iter().filter(|h| n.is_subgroup_of(h)) {
                    out.cases += 1;
                    let r = verify_quotient_theorem(g, n, h)?;
                    if !r.holds() {
                        fail(
                            &mut out,
                            format!(
                                "N = {}, H = {}: {r:?}",
                                g.format_set(n.carrier()),
                                g.format_set(h.carrier())
                            ),
                        );
                    }
                }
            }
        }
        Suite::Restriction => {
            let subs = all_subgroups(g)?;
            for h in &subs {
                let Some(w) = subgroup_code_witness(g, h, CodeKind::Perfect)? else {
                    continue;
                };
                for k in subs.iter().filter(|k| h.is_subgroup_of(k)) {
                    out.cases += 1;
                    let r = lemma_subgroup_restriction(g, h, k, &w)?;
                    if !r.holds() {
                        fail(
                            &mut out,
                            format!(
                                "H = {}, K = {}, X = {}: {r:?}",
                                g.format_set(h.carrier()),
                                g.format_set(k.carrier()),
                                g.format_set(w.connection_set.set())
                            ),
                        );
                    }
                }
            }
        }
        Suite::Connectivity | Suite::Regularity => {
            for include_identity in [false, true] {
                let subsets = normal_subsets(g, include_identity);
                out.exhaustive &= subsets.exhaustive;
                for x in subsets.sets {
                    out.cases += 1;
                    let cs = CayleySumGraph::build(g, x.clone(), include_identity)?;
                    let (graph_side, criterion) = if suite == Suite::Connectivity {
                        (cs.is_connected(), connectivity_criterion(g, &x))
                    } else {
                        (cs.regularity().regular, regularity_criterion(g, &x))
                    };
                    if graph_side != criterion {
                        fail(
                            &mut out,
                            format!(
                                "X = {}: graph says {graph_side}, criterion says {criterion}",
                                g.format_set(&x)
                            ),
                        );
                    }
                }
            }
        }
        Suite::Abelian => {
            if g.is_abelian() {
                for h in all_subgroups(g)? {
                    out.cases += 1;
                    match subgroup_code_witness(g, &h, CodeKind::Perfect)? {
                        Some(w) if w.verified => {}
                        Some(_) => fail(
                            &mut out,
                            format!("H = {}: witness fails the graph check", g.format_set(h.carrier())),
                        ),
                        None => fail(
                            &mut out,
                            format!("H = {}: no perfect-code witness", g.format_set(h.carrier())),
                        ),
                    }
                }
            }
        }
        Suite::TotalReading => {
            for h in all_subgroups(g)? {
                out.cases += 1;
                let a = subgroup_code_witness_with(g, &h, CodeKind::TotalPerfect, TotalReading::SingleNonsquare)?;
                let b = subgroup_code_witness_with(g, &h, CodeKind::TotalPerfect, TotalReading::ExactlyOneNonsquare)?;
                let unsound = [&a, &b].iter().any(|w| w.as_ref().is_some_and(|w| !w.verified));
                if a.is_some() != b.is_some() || unsound {
                    fail(
                        &mut out,
                        format!(
                            "H = {}: single-nonsquare {}, exactly-one-nonsquare {}",
                            g.format_set(h.carrier()),
                            a.is_some(),
                            b.is_some()
                        ),
                    );
                }
            }
        }
    }
    Ok(out)
}
