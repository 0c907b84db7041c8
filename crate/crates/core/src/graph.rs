//! Cayley sum graphs `CS(G, X)`: vertices are group elements, and `g ~ h`
//! exactly when `gh` lies in the normal connection set `X` and `g != h`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::classes::{require_normal, squares};
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::set::ElementSet;
use crate::subgroup::generated;

/// A normal subset of a group, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    set: ElementSet,
    contains_identity: bool,
}

impl ConnectionSet {
    /// Rejects non-normal sets, and sets containing the identity unless
    /// `allow_identity` is given.
    pub fn new(g: &Group, set: ElementSet, allow_identity: bool) -> Result<ConnectionSet> {
        require_normal(g, &set)?;
        let contains_identity = set.contains(g.identity());
        if contains_identity && !allow_identity {
            return Err(Error::IdentityInConnectionSet);
        }
        Ok(ConnectionSet {
            set,
            contains_identity,
        })
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn contains_identity(&self) -> bool {
        self.contains_identity
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CayleySumGraph<'g> {
    group: &'g Group,
    x: ConnectionSet,
    adjacency: Vec<Vec<Element>>,
    rows: Vec<ElementSet>,
}

/// Degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    /// degree -> number of vertices with that degree
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl<'g> CayleySumGraph<'g> {
    /// Validates `x` and builds `CS(g, x)`.
    pub fn build(g: &'g Group, x: ElementSet, allow_identity: bool) -> Result<Self> {
        Ok(Self::new(g, ConnectionSet::new(g, x, allow_identity)?))
    }

    pub fn new(g: &'g Group, x: ConnectionSet) -> Self {
        let n = g.order();
        let mut rows = alloc::vec![ElementSet::empty(n); n];
        for u in 0..n {
            for v in 0..n {
                if u != v && x.set.contains(g.mul(u, v)) {
                    rows[u].insert(v);
                }
            }
        }
        let adjacency = rows.iter().map(ElementSet::to_vec).collect();
        let graph = CayleySumGraph {
            group: g,
            x,
            adjacency,
            rows,
        };
        debug_assert!(graph.is_symmetric());
        graph
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.x
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Element) -> &[Element] {
        &self.adjacency[v]
    }

    /// Neighborhood of `v` as a set.
    pub fn neighborhood(&self, v: Element) -> &ElementSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Element) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Element, v: Element) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.vertex_count()).all(|u| self.adjacency[u].iter().all(|&v| self.has_edge(v, u)))
    }

    pub fn is_loop_free(&self) -> bool {
        (0..self.vertex_count()).all(|u| !self.has_edge(u, u))
    }

    /// Breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = ElementSet::singleton(n, 0);
        let mut queue = alloc::collections::VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.push_back(v);
                }
            }
        }
        seen.len() == n
    }

    pub fn regularity(&self) -> Regularity {
        let mut degree_histogram = BTreeMap::new();
        for ns in &self.adjacency {
            *degree_histogram.entry(ns.len()).or_insert(0) += 1;
        }
        Regularity {
            regular: degree_histogram.len() <= 1,
            degree_histogram,
        }
    }

    /// The bipartition `(A, B)` if the graph is complete bipartite with both
    /// parts nonempty; `A` holds vertex 0.
    pub fn complete_bipartite(&self) -> Option<(ElementSet, ElementSet)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = alloc::vec![None; n];
        let mut a = ElementSet::empty(n);
        let mut b = ElementSet::empty(n);
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = alloc::vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                b.insert(v);
            } else {
                a.insert(v);
            }
        }
        if a.is_empty() || b.is_empty() || self.edge_count() != a.len() * b.len() {
            return None;
        }
        Some((a, b))
    }

    /// Graphviz DOT text. Vertices appear in index order labeled by element
    /// name; each edge is listed once with the lower index first.
    pub fn to_dot(&self, highlight: Option<&ElementSet>) -> String {
        let g = self.group;
        let mut out = String::new();
        let _ = writeln!(out, "graph \"CS({}, {})\" {{", g.family(), escape(&g.format_set(self.x.set())));
        for v in g.elements() {
            let _ = write!(out, "  n{v} [label=\"{}\"", escape(g.name(v)));
            if highlight.is_some_and(|h| h.contains(v)) {
                out.push_str(", style=filled, fillcolor=\"#f4a261\"");
            }
            out.push_str("];\n");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  n{u} -- n{v};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Closed-form neighborhood: `X g^-1` when `g^2` is not in `X`, otherwise
/// `(X \ {g^2}) g^-1`.
pub fn neighborhood_formula(g: &Group, x: &ElementSet, v: Element) -> ElementSet {
    let sq = g.mul(v, v);
    let vinv = g.inv(v);
    ElementSet::from_elements(
        g.order(),
        x.iter().filter(|&y| y != sq).map(|y| g.mul(y, vinv)),
    )
}

/// `G = <X>` and `<x^-1 y : x, y in X>` has index at most 2.
pub fn connectivity_criterion(g: &Group, x: &ElementSet) -> bool {
    if generated(g, x).order() != g.order() {
        return false;
    }
    let mut diffs = g.empty_set();
    for a in x.iter() {
        let ainv = g.inv(a);
        for b in x.iter() {
            diffs.insert(g.mul(ainv, b));
        }
    }
    let h = generated(g, &diffs);
    g.order() / h.order() <= 2
}

/// `X` contains no square, or `X` contains every square.
pub fn regularity_criterion(g: &Group, x: &ElementSet) -> bool {
    let sq = squares(g);
    x.is_disjoint(&sq) || sq.is_subset(x)
}
