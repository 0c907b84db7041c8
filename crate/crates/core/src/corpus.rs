//! The default family corpus for corpus-wide suites.

use alloc::vec::Vec;

use crate::families::{product_spec, GroupSpec};

/// Largest product order in the corpus.
pub const MAX_PRODUCT_ORDER: usize = 32;

fn order_of(spec: &GroupSpec) -> usize {
    match spec {
        GroupSpec::Cyclic { order } | GroupSpec::Dihedral { order } | GroupSpec::Dicyclic { order } => {
            *order
        }
        GroupSpec::V8n { n } => 8 * n,
        GroupSpec::Symmetric { k } => (1..=*k).product(),
        GroupSpec::Alternating { k } => (1..=*k).product::<usize>() / 2,
        GroupSpec::Product(f) => f.iter().map(order_of).product(),
        GroupSpec::Table { mul, .. } => mul.len(),
    }
}

/// Nontrivial building blocks: cyclic up to 24, dihedral up to 24, `V_8`,
/// `V_24`, `Q_8`, `S_3`, `S_4` and `A_4`.
pub fn base_groups() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = (2..=24).map(|order| GroupSpec::Cyclic { order }).collect();
    v.extend((4..=24).step_by(2).map(|order| GroupSpec::Dihedral { order }));
    v.push(GroupSpec::V8n { n: 1 });
    v.push(GroupSpec::V8n { n: 3 });
    v.push(GroupSpec::quaternion());
    v.push(GroupSpec::Symmetric { k: 3 });
    v.push(GroupSpec::Symmetric { k: 4 });
    v.push(GroupSpec::Alternating { k: 4 });
    v
}

/// The trivial group, the base groups, all pairwise products of base groups
/// of order at most [`MAX_PRODUCT_ORDER`], and a few elementary abelian and
/// three-factor products.
pub fn default_corpus() -> Vec<GroupSpec> {
    let base = base_groups();
    let mut out = alloc::vec![GroupSpec::Cyclic { order: 1 }];
    out.extend(base.iter().cloned());
    for (i, x) in base.iter().enumerate() {
        for y in &base[i..] {
            if order_of(x) * order_of(y) <= MAX_PRODUCT_ORDER {
                out.push(product_spec([x.clone(), y.clone()]));
            }
        }
    }
    let z = |order| GroupSpec::Cyclic { order };
    let triples = [
        alloc::vec![z(2), z(2), z(2)],
        alloc::vec![z(2), z(2), z(3)],
        alloc::vec![z(2), z(2), z(4)],
        alloc::vec![z(2), z(2), z(6)],
        alloc::vec![z(2), z(2), z(8)],
        alloc::vec![z(2), z(4), z(4)],
        alloc::vec![z(3), z(3), z(3)],
        alloc::vec![z(2), z(2), GroupSpec::Dihedral { order: 8 }],
        alloc::vec![z(2), z(2), GroupSpec::quaternion()],
        alloc::vec![z(2), z(2), z(2), z(2)],
        alloc::vec![z(2), z(2), z(2), z(2), z(2)],
    ];
    out.extend(triples.into_iter().map(product_spec));
    out
}

/// Corpus members of order at most `max_order`.
pub fn corpus_up_to(max_order: usize) -> Vec<GroupSpec> {
    default_corpus()
        .into_iter()
        .filter(|s| order_of(s) <= max_order)
        .collect()
}
