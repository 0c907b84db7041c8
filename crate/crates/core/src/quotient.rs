//! Quotient groups by normal subgroups.

use alloc::format;
use alloc::vec::Vec;

use crate::classes::require_normal;
use crate::error::Result;
use crate::group::{Element, FamilyTag, Group};
use crate::set::ElementSet;
use crate::subgroup::{left_cosets, Subgroup};

/// `G/N` together with the projection and the coset of each quotient element.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: Group,
    /// `projection[x]` is the quotient element containing `x`.
    pub projection: Vec<Element>,
    /// `lifts[q]` is the coset `xN` represented by `q`.
    pub lifts: Vec<ElementSet>,
}

impl QuotientResult {
    /// Image of a set under the projection.
    pub fn project(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.quotient.order(), s.iter().map(|x| self.projection[x]))
    }

    /// Image of a subgroup containing `N`.
    pub fn project_subgroup(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_closed_set(self.project(h.carrier()))
    }
}

/// Builds `G/N`. Quotient elements are the cosets of `n` ordered by minimal
/// representative and named `[x]` after that representative.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<QuotientResult> {
    require_normal(g, n.carrier())?;
    let lifts = left_cosets(g, n);
    let mut projection = alloc::vec![0; g.order()];
    for (q, c) in lifts.iter().enumerate() {
        for x in c.iter() {
            projection[x] = q;
        }
    }
    let reps: Vec<Element> = lifts.iter().map(|c| c.first().unwrap()).collect();
    let k = lifts.len();
    let mut table = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            table.push(projection[g.mul(x, y)] as u16);
        }
    }
    let names = reps.iter().map(|&x| format!("[{}]", g.name(x))).collect();
    let quotient = Group::assemble(table, names, Vec::new(), FamilyTag::Table)?;
    Ok(QuotientResult {
        quotient,
        projection,
        lifts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::{cyclic, dihedral, v8n};
    use crate::subgroup::generated;

    fn assert_homomorphism(g: &Group, q: &QuotientResult) {
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(
                    q.projection[g.mul(x, y)],
                    q.quotient.mul(q.projection[x], q.projection[y])
                );
            }
        }
    }

    #[test]
    fn cyclic_quotient() {
        let g = cyclic(8).unwrap();
        let n = generated(&g, &g.parse_set("4").unwrap());
        let q = quotient(&g, &n).unwrap();
        assert_eq!(q.quotient.order(), 4);
        assert!(q.quotient.is_abelian());
        let gen = q.projection[1];
        assert_eq!(q.quotient.element_order(gen), 4);
        assert_homomorphism(&g, &q);
    }

    #[test]
    fn dihedral_quotient_is_nonabelian_of_order_6() {
        let g = dihedral(12).unwrap();
        let n = generated(&g, &g.parse_set("a^3").unwrap());
        let q = quotient(&g, &n).unwrap();
        assert_eq!(q.quotient.order(), 6);
        assert!(!q.quotient.is_abelian());
        assert_homomorphism(&g, &q);
        assert_eq!(q.quotient.order() * n.order(), g.order());
        for (i, c) in q.lifts.iter().enumerate() {
            assert!(c.iter().all(|x| q.projection[x] == i));
        }
    }

    #[test]
    fn v24_quotient_is_homomorphic() {
        let g = v8n(3).unwrap();
        let n = generated(&g, &g.parse_set("a^2").unwrap());
        let q = quotient(&g, &n).unwrap();
        assert_eq!(q.quotient.order(), 8);
        assert!(!q.quotient.is_abelian());
        assert_homomorphism(&g, &q);
    }

    #[test]
    fn rejects_non_normal() {
        let g = dihedral(12).unwrap();
        let n = generated(&g, &g.parse_set("b").unwrap());
        assert!(matches!(quotient(&g, &n), Err(Error::NotNormal { .. })));
    }
}
