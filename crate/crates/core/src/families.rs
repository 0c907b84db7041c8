//! Group families built from descriptors.
//!
//! Generator-based families index `a^i b^j` as `j * |a| + i`, so the powers
//! of `a` come first and the identity is element 0.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, FamilyTag, Group, MAX_ORDER};

/// Descriptor of a group to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of the given order, written additively (`0, 1, ...`).
    Cyclic { order: usize },
    /// Dihedral group of the given (even) order `2m`:
    /// `<a, b | a^m = b^2 = 1, b^-1 a b = a^-1>`.
    Dihedral { order: usize },
    /// Dicyclic group of order `4m`, `m >= 2`:
    /// `<a, b | a^2m = 1, b^2 = a^m, b^-1 a b = a^-1>`.
    Dicyclic { order: usize },
    /// `<a, b | a^2n = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b>`, `n` odd.
    V8n { n: usize },
    Symmetric { k: usize },
    Alternating { k: usize },
    /// Direct product; elements are tuples in lexicographic order.
    Product(Vec<GroupSpec>),
    Table {
        mul: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn quaternion() -> Self {
        GroupSpec::Dicyclic { order: 8 }
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic { order } => cyclic(*order),
            GroupSpec::Dihedral { order } => dihedral(*order),
            GroupSpec::Dicyclic { order } => dicyclic(*order),
            GroupSpec::V8n { n } => v8n(*n),
            GroupSpec::Symmetric { k } => permutations(*k, false),
            GroupSpec::Alternating { k } => permutations(*k, true),
            GroupSpec::Product(factors) => {
                let groups = factors
                    .iter()
                    .map(GroupSpec::build)
                    .collect::<Result<Vec<_>>>()?;
                product(&groups)
            }
            GroupSpec::Table { mul, names } => Group::from_table(mul, names.clone()),
        }
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        Err(Error::InvalidParameter(format!(
            "group order {order} outside 1..={MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

/// Display name of `a^i b^j` in the `a^i*b^j` grammar.
pub fn word_name(i: usize, j: usize) -> String {
    let part = |g: char, e: usize| match e {
        0 => String::new(),
        1 => format!("{g}"),
        _ => format!("{g}^{e}"),
    };
    match (i, j) {
        (0, 0) => "1".into(),
        (_, 0) => part('a', i),
        (0, _) => part('b', j),
        _ => format!("{}*{}", part('a', i), part('b', j)),
    }
}

/// Builds a two-generator group on `a^i b^j` (`i < m`, `j < k`) from a
/// product rule on exponent pairs.
fn two_generator<F>(m: usize, k: usize, family: FamilyTag, rule: F) -> Result<Group>
where
    F: Fn((usize, usize), (usize, usize)) -> (usize, usize),
{
    let order = m * k;
    check_order(order)?;
    let index = |(i, j): (usize, usize)| j * m + i;
    let pairs: Vec<(usize, usize)> = (0..order).map(|x| (x % m, x / m)).collect();
    let mut table = Vec::with_capacity(order * order);
    for &p in &pairs {
        for &q in &pairs {
            table.push(index(rule(p, q)) as u16);
        }
    }
    let names = pairs.iter().map(|&(i, j)| word_name(i, j)).collect();
    let mut gens = Vec::new();
    if m > 1 {
        gens.push(('a', index((1, 0))));
    }
    if k > 1 {
        gens.push(('b', index((0, 1))));
    }
    Group::assemble(table, names, gens, family)
}

pub fn cyclic(order: usize) -> Result<Group> {
    check_order(order)?;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            table.push(((x + y) % order) as u16);
        }
    }
    let names = (0..order).map(|x| format!("{x}")).collect();
    let gens = if order > 1 { alloc::vec![('a', 1)] } else { Vec::new() };
    Group::assemble(table, names, gens, FamilyTag::Cyclic(order))
}

pub fn dihedral(order: usize) -> Result<Group> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    let m = order / 2;
    // b^j a^k = a^{(-1)^j k} b^j
    two_generator(m, 2, FamilyTag::Dihedral(order), |(i, j), (k, l)| {
        let k = if j == 1 { (m - k) % m } else { k };
        ((i + k) % m, (j + l) % 2)
    })
}

pub fn dicyclic(order: usize) -> Result<Group> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::InvalidParameter(format!(
            "dicyclic order must be a multiple of 4 and at least 8, got {order}"
        )));
    }
    let m2 = order / 2;
    let m = order / 4;
    two_generator(m2, 2, FamilyTag::Dicyclic(order), |(i, j), (k, l)| {
        let k = if j == 1 { (m2 - k) % m2 } else { k };
        let mut e = i + k;
        if j == 1 && l == 1 {
            e += m;
        }
        (e % m2, (j + l) % 2)
    })
}

/// The group `V_{8n}`, `n` odd.
///
/// Products use the normal form `a^i b^j`: `b^2` is central, and for odd
/// `j`, `b^j a^k = a^-k b^(j + 2[k odd])`.
pub fn v8n(n: usize) -> Result<Group> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "V8n requires a positive odd n, got {n}"
        )));
    }
    let m = 2 * n;
    two_generator(m, 4, FamilyTag::V8n(n), |(i, j), (k, l)| {
        if j % 2 == 0 {
            ((i + k) % m, (j + l) % 4)
        } else {
            ((i + m - k) % m, (j + l + 2 * (k % 2)) % 4)
        }
    })
}

/// Index of `a^i b^j` in [`v8n`]`(n)`; exponents are reduced.
pub fn v8n_element(n: usize, i: i64, j: i64) -> Element {
    let m = 2 * n as i64;
    (j.rem_euclid(4) * m + i.rem_euclid(m)) as Element
}

fn permutations(k: usize, even_only: bool) -> Result<Group> {
    if k == 0 || k > 7 {
        return Err(Error::InvalidParameter(format!(
            "permutation groups are supported for 1 <= k <= 7, got {k}"
        )));
    }
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut p: Vec<u8> = (0..k as u8).collect();
    loop {
        if !even_only || is_even(&p) {
            perms.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    let order = perms.len();
    let mut lookup = alloc::collections::BTreeMap::new();
    for (i, q) in perms.iter().enumerate() {
        lookup.insert(q.clone(), i);
    }
    // (p*q)(x) = q(p(x)): apply p first.
    let mut table = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            let r: Vec<u8> = p.iter().map(|&x| q[x as usize]).collect();
            table.push(lookup[&r] as u16);
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let family = if even_only {
        FamilyTag::Alternating(k)
    } else {
        FamilyTag::Symmetric(k)
    };
    Group::assemble(table, names, Vec::new(), family)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`; identity is `1`.
fn cycle_name(p: &[u8]) -> String {
    let mut out = String::new();
    let mut seen = alloc::vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&format!("{}", x + 1));
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Direct product of the given groups.
pub fn product(factors: &[Group]) -> Result<Group> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("product needs at least one factor".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
        .unwrap_or(usize::MAX);
    check_order(order)?;
    let decompose = |mut x: usize| -> Vec<usize> {
        let mut parts = alloc::vec![0; factors.len()];
        for (f, g) in factors.iter().enumerate().rev() {
            parts[f] = x % g.order();
            x /= g.order();
        }
        parts
    };
    let compose = |parts: &[usize]| -> usize {
        parts
            .iter()
            .zip(factors)
            .fold(0, |acc, (&p, g)| acc * g.order() + p)
    };
    let tuples: Vec<Vec<usize>> = (0..order).map(decompose).collect();
    let mut table = Vec::with_capacity(order * order);
    let mut scratch = alloc::vec![0; factors.len()];
    for x in &tuples {
        for y in &tuples {
            for (f, g) in factors.iter().enumerate() {
                scratch[f] = g.mul(x[f], y[f]);
            }
            table.push(compose(&scratch) as u16);
        }
    }
    let names = tuples
        .iter()
        .map(|t| {
            let inner: Vec<&str> = t.iter().zip(factors).map(|(&x, g)| g.name(x)).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let tag = FamilyTag::Product(factors.iter().map(|g| g.family().clone()).collect());
    Group::assemble(table, names, Vec::new(), tag)
}

/// Convenience for the corpus: a product of descriptors.
pub fn product_spec(factors: impl IntoIterator<Item = GroupSpec>) -> GroupSpec {
    GroupSpec::Product(factors.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group_axioms(g: &Group) {
        let e = g.identity();
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), e);
            assert_eq!(g.mul(g.inv(x), x), e);
            for y in g.elements() {
                for z in g.elements() {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
        for (i, n) in g.names().iter().enumerate() {
            assert_eq!(g.parse_element(n).unwrap(), i, "name {n}");
        }
    }

    #[test]
    fn families_satisfy_group_axioms() {
        for spec in [
            GroupSpec::Cyclic { order: 7 },
            GroupSpec::Dihedral { order: 12 },
            GroupSpec::quaternion(),
            GroupSpec::Dicyclic { order: 12 },
            GroupSpec::V8n { n: 1 },
            GroupSpec::V8n { n: 3 },
            GroupSpec::Symmetric { k: 4 },
            GroupSpec::Alternating { k: 4 },
            product_spec([GroupSpec::Cyclic { order: 2 }, GroupSpec::Symmetric { k: 3 }]),
        ] {
            let g = spec.build().unwrap();
            assert_group_axioms(&g);
        }
    }

    #[test]
    fn dihedral_relations() {
        let g = dihedral(12).unwrap();
        let a = g.parse_element("a").unwrap();
        let b = g.parse_element("b").unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.element_order(a), 6);
        assert_eq!(g.power(a, 6), g.identity());
        assert_eq!(g.mul(g.mul(b, a), b), g.inv(a));
        assert_eq!(g.conjugate(a, b), g.parse_element("a^5").unwrap());
    }

    #[test]
    fn v8n_defining_relations() {
        for n in [1, 3, 5, 7] {
            let g = v8n(n).unwrap();
            assert_eq!(g.order(), 8 * n);
            let a = g.parse_element("a").unwrap();
            let b = g.parse_element("b").unwrap();
            let e = g.identity();
            assert_eq!(g.power(a, 2 * n as i64), e);
            assert_eq!(g.power(b, 4), e);
            assert_eq!(g.element_order(a), 2 * n);
            assert_eq!(g.element_order(b), 4);
            // ba = a^-1 b^-1
            assert_eq!(g.mul(b, a), g.mul(g.inv(a), g.inv(b)));
            // b^-1 a = a^-1 b
            assert_eq!(g.mul(g.inv(b), a), g.mul(g.inv(a), b));
            // normal forms are unique
            for i in 0..2 * n as i64 {
                for j in 0..4 {
                    let x = g.mul(g.power(a, i), g.power(b, j));
                    assert_eq!(x, v8n_element(n, i, j));
                }
            }
        }
    }

    #[test]
    fn v8n_swap_rules_match_element_relations() {
        // a^i b^j rewritten with b on the left, by parity of i and j
        for n in [1, 3, 5] {
            let g = v8n(n).unwrap();
            let a = v8n_element(n, 1, 0);
            let b = v8n_element(n, 0, 1);
            for i in 0..2 * n as i64 {
                for j in 0..4i64 {
                    let lhs = g.mul(g.power(a, i), g.power(b, j));
                    let rhs = match (i % 2, j % 2) {
                        (1, 0) => g.mul(g.power(b, -j), g.power(a, i)),
                        (1, 1) => g.mul(g.power(b, -j), g.power(a, -i)),
                        (0, 0) => g.mul(g.power(b, j), g.power(a, i)),
                        _ => g.mul(g.power(b, j), g.power(a, -i)),
                    };
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn v8_small_product() {
        // ba = a b^3 in V_8
        let g = v8n(1).unwrap();
        let ba = g.mul(g.parse_element("b").unwrap(), g.parse_element("a").unwrap());
        assert_eq!(ba, g.parse_element("a*b^3").unwrap());
        assert_eq!(g.name(ba), "a*b^3");
        assert_eq!(g.parse_element("ab^3").unwrap(), ba);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(v8n(2), Err(Error::InvalidParameter(_))));
        assert!(v8n(0).is_err());
        assert!(dihedral(7).is_err());
        assert!(dicyclic(6).is_err());
        assert!(cyclic(0).is_err());
        assert!(cyclic(MAX_ORDER + 1).is_err());
        assert!(permutations(8, false).is_err());
    }

    #[test]
    fn permutation_names() {
        let s3 = permutations(3, false).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.name(0), "1");
        assert!(s3.names().iter().any(|n| n == "(1,2,3)"));
        assert_eq!(permutations(4, true).unwrap().order(), 12);
        let t = s3.parse_set("(1,2), (1,3)").unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn product_names_and_order() {
        let g = GroupSpec::Product(alloc::vec![
            GroupSpec::Cyclic { order: 2 },
            GroupSpec::Cyclic { order: 3 }
        ])
        .build()
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(0), "(0,0)");
        assert!(g.is_abelian());
        assert_eq!(g.parse_set("(1,0),(0,2)").unwrap().len(), 2);
    }
}
