//! Finite groups as materialized multiplication tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::ConjugacyPartition;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Index of a group element, `0..order`.
pub type Element = usize;

/// Largest order for which a multiplication table is materialized.
pub const MAX_ORDER: usize = 10_000;

/// Tables up to this order are checked for associativity on every triple;
/// larger tables on a fixed pseudo-random sample.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
const SAMPLED_TRIPLES: usize = 20_000;

/// Where a group came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Cyclic(usize),
    /// Dihedral group of the given order `2m`.
    Dihedral(usize),
    /// Dicyclic group of the given order `4m`; order 8 is the quaternion group.
    Dicyclic(usize),
    V8n(usize),
    Symmetric(usize),
    Alternating(usize),
    Product(Vec<FamilyTag>),
    Table,
}

impl core::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FamilyTag::Cyclic(n) => write!(f, "Z{n}"),
            FamilyTag::Dihedral(n) => write!(f, "D{n}"),
            FamilyTag::Dicyclic(8) => write!(f, "Q8"),
            FamilyTag::Dicyclic(n) => write!(f, "Dic{n}"),
            FamilyTag::V8n(n) => write!(f, "V{}", 8 * n),
            FamilyTag::Symmetric(k) => write!(f, "S{k}"),
            FamilyTag::Alternating(k) => write!(f, "A{k}"),
            FamilyTag::Product(factors) => {
                for (i, t) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            FamilyTag::Table => f.write_str("table"),
        }
    }
}

/// Element arithmetic selectable at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arith {
    Multiply,
    /// Inverse of the first operand; the second is ignored.
    Inverse,
    /// Integer power of the first operand; the second is ignored.
    Power(i64),
    /// `h^-1 g h`.
    Conjugate,
    /// `[g, h] = g^-1 h^-1 g h`.
    Commutator,
}

/// A finite group with a full multiplication table.
///
/// Immutable after construction; conjugacy classes are computed once when
/// the group is built.
#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    identity: Element,
    names: Vec<String>,
    lookup: BTreeMap<String, Element>,
    generators: Vec<(char, Element)>,
    family: FamilyTag,
    classes: ConjugacyPartition,
}

impl Group {
    /// Builds a group from an explicit table, `mul[x][y] = x*y`.
    ///
    /// Names default to `g0, g1, ...`.
    pub fn from_table(mul: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Group> {
        let order = mul.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidTable(format!(
                "order must be in 1..={MAX_ORDER}, got {order}"
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry {v} in row {i} is out of range"
                    )));
                }
                flat.push(v as u16);
            }
        }
        let names = names.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        Group::assemble(flat, names, Vec::new(), FamilyTag::Table)
    }

    /// Validates a row-major table and derives identity, inverses and classes.
    pub(crate) fn assemble(
        table: Vec<u16>,
        names: Vec<String>,
        generators: Vec<(char, Element)>,
        family: FamilyTag,
    ) -> Result<Group> {
        let order = names.len();
        if order == 0 || order > MAX_ORDER || table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table of {} entries does not match {order} names",
                table.len()
            )));
        }
        let at = |x: usize, y: usize| table[x * order + y] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let mut seen = ElementSet::empty(order);
            let mut seen_col = ElementSet::empty(order);
            for y in 0..order {
                seen.insert(at(x, y));
                seen_col.insert(at(y, x));
            }
            if seen.len() != order || seen_col.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row or column of `{}` is not a permutation",
                    names[x]
                )));
            }
            let y = (0..order).find(|&y| at(x, y) == identity).unwrap();
            if at(y, x) != identity {
                return Err(Error::InvalidTable(format!(
                    "`{}` has no two-sided inverse",
                    names[x]
                )));
            }
            inv.push(y as u16);
        }

        let fail = |x: usize, y: usize, z: usize| Error::NotAssociative {
            x: names[x].clone(),
            y: names[y].clone(),
            z: names[z].clone(),
        };
        if order <= EXHAUSTIVE_ASSOCIATIVITY {
            for x in 0..order {
                for y in 0..order {
                    let xy = at(x, y);
                    for z in 0..order {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(fail(x, y, z));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (x, y, z) = (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                );
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(fail(x, y, z));
                }
            }
        }

        let mut lookup = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || lookup.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidTable(format!("duplicate or empty name `{n}`")));
            }
        }

        let mut g = Group {
            order,
            table,
            inv,
            identity,
            names,
            lookup,
            generators,
            family,
            classes: ConjugacyPartition::default(),
        };
        g.classes = ConjugacyPartition::compute(&g);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y] as Element
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inv[x] as Element
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, g] = x^-1 g^-1 x g`.
    #[inline]
    pub fn commutator(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(self.inv(x), self.inv(g)), self.mul(x, g))
    }

    pub fn power(&self, x: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(x) } else { x };
        let ord = self.element_order(x) as u64;
        let mut e = k.unsigned_abs() % ord;
        let mut acc = self.identity;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Element) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Range-checked arithmetic.
    pub fn arith(&self, op: Arith, g: Element, h: Element) -> Result<Element> {
        self.check(g)?;
        if !matches!(op, Arith::Inverse | Arith::Power(_)) {
            self.check(h)?;
        }
        Ok(match op {
            Arith::Multiply => self.mul(g, h),
            Arith::Inverse => self.inv(g),
            Arith::Power(k) => self.power(g, k),
            Arith::Conjugate => self.conjugate(g, h),
            Arith::Commutator => self.commutator(g, h),
        })
    }

    pub fn check(&self, x: Element) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn check_set(&self, s: &ElementSet) -> Result<()> {
        if s.universe() == self.order {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                expected: self.order,
                found: s.universe(),
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn family(&self) -> &FamilyTag {
        &self.family
    }

    pub(crate) fn generator_pairs(&self) -> &[(char, Element)] {
        &self.generators
    }

    pub fn classes(&self) -> &ConjugacyPartition {
        &self.classes
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> core::ops::Range<Element> {
        0..self.order
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Row-major copy of the table as nested vectors.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// Resolves an element name.
    ///
    /// Exact display names win. Otherwise `1` / `e` denote the identity and
    /// words over the family generators are evaluated, e.g. `a^3*b`, `ab^2`,
    /// `b*a^-1`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        if let Some(&x) = self.lookup.get(text) {
            return Ok(x);
        }
        if text == "1" || text == "e" {
            return Ok(self.identity);
        }
        self.parse_word(text)
            .ok_or_else(|| Error::UnknownElement(text.to_string()))
    }

    fn parse_word(&self, text: &str) -> Option<Element> {
        if self.generators.is_empty() || text.is_empty() {
            return None;
        }
        let bytes = text.as_bytes();
        let mut acc = self.identity;
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c == '*' || c.is_whitespace() {
                i += 1;
                continue;
            }
            let &(_, gen) = self.generators.iter().find(|(g, _)| *g == c)?;
            i += 1;
            let mut exp: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = text[start..i].parse().ok()?;
            }
            acc = self.mul(acc, self.power(gen, exp));
        }
        Some(acc)
    }

    /// Parses a comma-separated list of element names. Commas nested inside
    /// parentheses (product-group tuples, permutation cycles) do not split.
    /// Surrounding braces, as written by [`Group::format_set`], are accepted.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let text = text.trim();
        let text = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        let mut set = self.empty_set();
        for item in split_top_level(text) {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            set.insert(self.parse_element(item)?);
        }
        Ok(set)
    }

    pub fn format_set(&self, s: &ElementSet) -> String {
        let mut out = String::from("{");
        for (i, x) in s.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(self.name(x));
        }
        out.push('}');
        out
    }
}

/// Splits on commas that are not nested inside parentheses.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}
