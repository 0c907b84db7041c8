//! Naive reference implementations shared by the integration tests.
//!
//! Everything here works from `Group::mul` / `Group::inv` and plain vectors
//! only, so it shares no code path with the library's search routines.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cayley_sum_core::{ElementSet, Group, GroupSpec};

pub fn small_specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::Cyclic { order: 1 },
        GroupSpec::Cyclic { order: 2 },
        GroupSpec::Cyclic { order: 5 },
        GroupSpec::Cyclic { order: 6 },
        GroupSpec::Cyclic { order: 8 },
        GroupSpec::Dihedral { order: 6 },
        GroupSpec::Dihedral { order: 8 },
        GroupSpec::Dihedral { order: 12 },
        GroupSpec::quaternion(),
        GroupSpec::V8n { n: 1 },
        GroupSpec::Alternating { k: 4 },
        GroupSpec::Product(vec![
            GroupSpec::Cyclic { order: 2 },
            GroupSpec::Cyclic { order: 4 },
        ]),
    ]
}

pub fn set_from_mask(g: &Group, mask: u64) -> ElementSet {
    ElementSet::from_elements(g.order(), (0..g.order()).filter(|&x| mask >> x & 1 == 1))
}

/// Neighbors of `v` straight from the definition `vu ∈ X`, `u ≠ v`.
pub fn naive_neighbors(g: &Group, x: &ElementSet, v: usize) -> Vec<usize> {
    (0..g.order())
        .filter(|&u| u != v && x.contains(g.mul(v, u)))
        .collect()
}

pub fn naive_is_perfect(g: &Group, x: &ElementSet, c: &ElementSet) -> bool {
    (0..g.order()).all(|v| {
        let hits = naive_neighbors(g, x, v).iter().filter(|&&u| c.contains(u)).count();
        if c.contains(v) {
            hits == 0
        } else {
            hits == 1
        }
    })
}

pub fn naive_is_total(g: &Group, x: &ElementSet, c: &ElementSet) -> bool {
    (0..g.order()).all(|v| naive_neighbors(g, x, v).iter().filter(|&&u| c.contains(u)).count() == 1)
}

/// All `2^|G|` subsets passing the definition, in ascending set order.
/// Neighborhoods are taken from [`naive_neighbors`] as bitmasks.
pub fn naive_codes(g: &Group, x: &ElementSet, total: bool) -> Vec<ElementSet> {
    assert!(g.order() <= 16);
    let nbr: Vec<u64> = (0..g.order())
        .map(|v| naive_neighbors(g, x, v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let mut out: Vec<ElementSet> = (0u64..1 << g.order())
        .filter(|&c| {
            nbr.iter().enumerate().all(|(v, &n)| {
                let hits = (n & c).count_ones();
                if total || c >> v & 1 == 0 {
                    hits == 1
                } else {
                    hits == 0
                }
            })
        })
        .map(|c| set_from_mask(g, c))
        .collect();
    out.sort();
    out
}

/// Every subset closed under products and containing the identity.
pub fn naive_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    assert!(g.order() <= 16);
    (0u64..1 << g.order())
        .filter(|m| m >> g.identity() & 1 == 1)
        .map(|m| (0..g.order()).filter(|&x| m >> x & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b)))))
        .collect()
}

pub fn naive_center(g: &Group) -> Vec<usize> {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|y| g.mul(z, y) == g.mul(y, z)))
        .collect()
}

/// Conjugation orbits `{y^-1 x y}`.
pub fn naive_classes(g: &Group) -> BTreeSet<Vec<usize>> {
    (0..g.order())
        .map(|x| {
            let orbit: BTreeSet<usize> = (0..g.order())
                .map(|y| g.mul(g.mul(g.inv(y), x), y))
                .collect();
            orbit.into_iter().collect()
        })
        .collect()
}

/// Breadth-first connectivity on the naive neighbor lists.
pub fn naive_connected(g: &Group, x: &ElementSet) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in naive_neighbors(g, x, v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Union of the chosen conjugacy classes, drawn from the naive partition.
pub fn union_of_classes(g: &Group, classes: &[Vec<usize>], mask: u64) -> ElementSet {
    ElementSet::from_elements(
        g.order(),
        classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter().copied()),
    )
}
