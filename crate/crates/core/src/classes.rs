//! Conjugacy classes, center, squares and normal subsets.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::set::ElementSet;
use crate::subgroup::Subgroup;

/// Partition of a group into conjugacy classes, sorted by minimal element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<ElementSet>,
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub(crate) fn compute(g: &Group) -> Self {
        let n = g.order();
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut classes = Vec::new();
        // ascending scan, so each class is discovered at its minimal element
        for x in g.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = ElementSet::empty(n);
            for h in g.elements() {
                let y = g.conjugate(x, h);
                class.insert(y);
                class_of[y] = id;
            }
            classes.push(class);
        }
        ConjugacyPartition { classes, class_of }
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, id: usize) -> &ElementSet {
        &self.classes[id]
    }

    /// Union of the classes with the given ids.
    pub fn union_of<I: IntoIterator<Item = usize>>(&self, ids: I) -> ElementSet {
        let mut out = ElementSet::empty(self.class_of.len());
        for id in ids {
            out.union_with(&self.classes[id]);
        }
        out
    }
}

/// Elements commuting with every element of `g`.
pub fn center(g: &Group) -> Subgroup {
    let carrier = ElementSet::from_elements(
        g.order(),
        g.elements()
            .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x))),
    );
    Subgroup::from_closed_set(carrier)
}

/// `{y^2 : y in G}`.
pub fn squares(g: &Group) -> ElementSet {
    ElementSet::from_elements(g.order(), g.elements().map(|y| g.mul(y, y)))
}

/// `{y^2 : y in H}`; squares taken inside the subgroup.
pub fn squares_in(g: &Group, h: &Subgroup) -> ElementSet {
    ElementSet::from_elements(g.order(), h.iter().map(|y| g.mul(y, y)))
}

/// Normality by class membership: `s` is a union of conjugacy classes.
pub fn is_normal(g: &Group, s: &ElementSet) -> bool {
    let p = g.classes();
    s.iter().all(|x| p.class(p.class_of(x)).is_subset(s))
}

/// Normality by direct conjugation: `h^-1 s h = s` for every `h`.
pub fn is_normal_by_conjugation(g: &Group, s: &ElementSet) -> bool {
    normality_violation(g, s).is_none()
}

/// First `(x, h)` in index order with `x in s` and `h^-1 x h` outside `s`.
pub fn normality_violation(g: &Group, s: &ElementSet) -> Option<(Element, Element)> {
    for h in g.elements() {
        for x in s.iter() {
            if !s.contains(g.conjugate(x, h)) {
                return Some((x, h));
            }
        }
    }
    None
}

pub(crate) fn require_normal(g: &Group, s: &ElementSet) -> Result<()> {
    g.check_set(s)?;
    match normality_violation(g, s) {
        None => Ok(()),
        Some((x, h)) => Err(Error::NotNormal {
            element: g.name(x).into(),
            by: g.name(h).into(),
            image: g.name(g.conjugate(x, h)).into(),
        }),
    }
}

/// `[x, G] = {[x, g] : g in G}`.
pub fn commutator_set(g: &Group, x: Element) -> ElementSet {
    ElementSet::from_elements(g.order(), g.elements().map(|y| g.commutator(x, y)))
}
