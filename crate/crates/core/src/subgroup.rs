//! Subgroups, the subgroup lattice, cosets and transversals.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, FamilyTag, Group};
use crate::set::ElementSet;

/// Largest group order accepted by [`all_subgroups`].
pub const MAX_LATTICE_ORDER: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    carrier: ElementSet,
    generators: ElementSet,
}

impl Subgroup {
    /// Validates that `set` is a subgroup of `g`.
    pub fn new(g: &Group, set: ElementSet) -> Result<Subgroup> {
        g.check_set(&set)?;
        if !set.contains(g.identity()) {
            return Err(Error::NotSubgroup(format!(
                "{} does not contain the identity",
                g.format_set(&set)
            )));
        }
        for x in set.iter() {
            if !set.contains(g.inv(x)) {
                return Err(Error::NotSubgroup(format!(
                    "{} is missing the inverse of {}",
                    g.format_set(&set),
                    g.name(x)
                )));
            }
            for y in set.iter() {
                if !set.contains(g.mul(x, y)) {
                    return Err(Error::NotSubgroup(format!(
                        "{} is not closed: {}*{} = {}",
                        g.format_set(&set),
                        g.name(x),
                        g.name(y),
                        g.name(g.mul(x, y))
                    )));
                }
            }
        }
        debug_assert_eq!(g.order() % set.len(), 0);
        Ok(Subgroup::from_closed_set(set))
    }

    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_closed_set(carrier: ElementSet) -> Subgroup {
        Subgroup {
            generators: carrier.clone(),
            carrier,
        }
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup::from_closed_set(ElementSet::singleton(g.order(), g.identity()))
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup::from_closed_set(g.full_set())
    }

    pub fn carrier(&self) -> &ElementSet {
        &self.carrier
    }

    /// A generating set; informative only.
    pub fn generators(&self) -> &ElementSet {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.carrier.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.carrier.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.carrier.is_subset(&other.carrier)
    }

    pub fn index_in(&self, g: &Group) -> usize {
        g.order() / self.order()
    }
}

/// Right-multiplication closure of `start` under `gens`.
fn closure(g: &Group, start: &ElementSet, gens: &[Element]) -> ElementSet {
    let mut set = start.clone();
    let mut queue: Vec<Element> = set.to_vec();
    while let Some(y) = queue.pop() {
        for &s in gens {
            let z = g.mul(y, s);
            if !set.contains(z) {
                set.insert(z);
                queue.push(z);
            }
        }
    }
    set
}

/// The subgroup generated by `gens`; the trivial subgroup for an empty set.
pub fn generated(g: &Group, gens: &ElementSet) -> Subgroup {
    let start = ElementSet::singleton(g.order(), g.identity());
    let carrier = closure(g, &start, &gens.to_vec());
    Subgroup {
        carrier,
        generators: gens.clone(),
    }
}

/// Every subgroup of `g`, sorted by order and then by carrier.
///
/// Seeds with the cyclic subgroups and joins each known subgroup with each
/// cyclic subgroup until no new subgroup appears.
pub fn all_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    if g.order() > MAX_LATTICE_ORDER {
        return Err(Error::SearchBound(format!(
            "subgroup lattice is only enumerated up to order {MAX_LATTICE_ORDER}, \
             got {}; enumerate subgroups of a fixed order instead",
            g.order()
        )));
    }
    let mut cyclic: BTreeMap<ElementSet, Element> = BTreeMap::new();
    for x in g.elements() {
        let s = generated(g, &ElementSet::singleton(g.order(), x));
        cyclic.entry(s.carrier).or_insert(x);
    }
    let cyclic_gens: Vec<(ElementSet, Element)> = cyclic.into_iter().collect();

    let mut known: BTreeMap<ElementSet, Vec<Element>> = BTreeMap::new();
    let mut work: Vec<ElementSet> = Vec::new();
    for (carrier, x) in &cyclic_gens {
        let gens = if *x == g.identity() { Vec::new() } else { alloc::vec![*x] };
        known.insert(carrier.clone(), gens);
        work.push(carrier.clone());
    }
    while let Some(s) = work.pop() {
        let base_gens = known[&s].clone();
        for (c, x) in &cyclic_gens {
            if c.is_subset(&s) {
                continue;
            }
            let mut gens = base_gens.clone();
            gens.push(*x);
            let joined = closure(g, &s, &gens);
            if !known.contains_key(&joined) {
                known.insert(joined.clone(), gens);
                work.push(joined);
            }
        }
    }
    let mut out: Vec<Subgroup> = known
        .into_iter()
        .map(|(carrier, gens)| Subgroup {
            generators: ElementSet::from_elements(g.order(), gens),
            carrier,
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.carrier.cmp(&b.carrier)));
    Ok(out)
}

pub fn is_normal_subgroup(g: &Group, h: &Subgroup) -> bool {
    crate::classes::is_normal(g, h.carrier())
}

/// Left cosets `xH` of `h` in `g`, ordered by their minimal element.
pub fn left_cosets(g: &Group, h: &Subgroup) -> Vec<ElementSet> {
    let mut covered = g.empty_set();
    let mut out = Vec::new();
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let coset = ElementSet::from_elements(g.order(), h.iter().map(|y| g.mul(x, y)));
        covered.union_with(&coset);
        out.push(coset);
    }
    out
}

/// For each element, the position of its left coset in [`left_cosets`] order.
pub fn coset_index(g: &Group, h: &Subgroup) -> Vec<usize> {
    let mut idx = alloc::vec![0; g.order()];
    for (i, c) in left_cosets(g, h).iter().enumerate() {
        for x in c.iter() {
            idx[x] = i;
        }
    }
    idx
}

/// `t` meets every left coset of `h` in exactly one element.
pub fn is_left_transversal(g: &Group, h: &Subgroup, t: &ElementSet) -> bool {
    let cosets = left_cosets(g, h);
    t.len() == cosets.len() && cosets.iter().all(|c| c.intersection_len(t) == 1)
}

/// The subgroup as a group in its own right, with the embedding into `g`
/// (new index -> old index). Names and generators lying in `h` carry over.
pub fn subgroup_as_group(g: &Group, h: &Subgroup) -> Result<(Group, Vec<Element>)> {
    let embed: Vec<Element> = h.iter().collect();
    let mut local = alloc::vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let mut table = Vec::with_capacity(embed.len() * embed.len());
    for &x in &embed {
        for &y in &embed {
            let z = local[g.mul(x, y)];
            if z == usize::MAX {
                return Err(Error::NotSubgroup(g.format_set(h.carrier())));
            }
            table.push(z as u16);
        }
    }
    let names = embed.iter().map(|&x| g.name(x).into()).collect();
    let gens = g
        .generator_pairs()
        .iter()
        .filter(|(_, x)| h.contains(*x))
        .map(|&(c, x)| (c, local[x]))
        .collect();
    let sub = Group::assemble(table, names, gens, FamilyTag::Table)?;
    Ok((sub, embed))
}
