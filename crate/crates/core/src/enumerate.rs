//! Enumeration of normal subsets (unions of conjugacy classes).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::Group;
use crate::set::ElementSet;

/// Up to this many candidate classes every union is listed.
pub const EXHAUSTIVE_CLASS_LIMIT: usize = 12;
/// Number of random unions drawn above the limit.
pub const SAMPLE_SIZE: usize = 2048;

#[derive(Clone, Debug)]
pub struct NormalSubsets {
    /// Distinct normal subsets in ascending set order.
    pub sets: Vec<ElementSet>,
    /// Whether `sets` is every normal subset (as opposed to a sample).
    pub exhaustive: bool,
}

/// Normal subsets of `g`, with or without the identity.
///
/// Exhaustive up to [`EXHAUSTIVE_CLASS_LIMIT`] candidate classes; otherwise a
/// deterministic sample of [`SAMPLE_SIZE`] unions seeded from the group order,
/// always including the empty set and the union of all candidate classes.
pub fn normal_subsets(g: &Group, include_identity: bool) -> NormalSubsets {
    let classes = g.classes();
    let id_class = classes.class_of(g.identity());
    let ids: Vec<usize> = (0..classes.len())
        .filter(|&c| include_identity || c != id_class)
        .collect();
    let union = |mask: &dyn Fn(usize) -> bool| {
        classes.union_of(ids.iter().enumerate().filter(|(b, _)| mask(*b)).map(|(_, &c)| c))
    };
    if ids.len() <= EXHAUSTIVE_CLASS_LIMIT {
        let mut sets: Vec<ElementSet> = (0u32..1 << ids.len())
            .map(|m| union(&|b| m >> b & 1 == 1))
            .collect();
        sets.sort();
        return NormalSubsets {
            sets,
            exhaustive: true,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ g.order() as u64 ^ (ids.len() as u64) << 32);
    let mut seen = BTreeSet::new();
    seen.insert(union(&|_| false));
    seen.insert(union(&|_| true));
    while seen.len() < SAMPLE_SIZE {
        let bits: Vec<bool> = (0..ids.len()).map(|_| rng.random_bool(0.5)).collect();
        seen.insert(union(&|b| bits[b]));
    }
    NormalSubsets {
        sets: seen.into_iter().collect(),
        exhaustive: false,
    }
}
