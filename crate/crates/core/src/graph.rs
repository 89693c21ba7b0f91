//! Graph carriers and the line-oriented graph text format.
//!
//! ```text
//! n directed|undirected
//! u v
//! ...
//! ```
//!
//! Loops `u u` are accepted only for directed graphs. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt;

use crate::error::{Error, Result};

/// Directed graph on `0..order` with loops allowed and no parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(order: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); order],
        }
    }

    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::new(order);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Build the functional digraph `v -> succ[v]`.
    pub fn from_successors(succ: &[usize]) -> Result<Self> {
        Digraph::from_arcs(succ.len(), succ.iter().copied().enumerate())
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    /// Adds `(u, v)`; adding an existing arc is a no-op.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if let Err(pos) = self.out[u].binary_search(&v) {
            self.out[u].insert(pos, v);
        }
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out
            .get(u)
            .is_some_and(|row| row.binary_search(&v).is_ok())
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn outdegree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&u| self.has_arc(u, v)).collect()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Induced subdigraph on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Digraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &v in &self.out[u] {
                if index[v] != usize::MAX {
                    g.out[i].push(index[v]);
                }
            }
            g.out[i].sort_unstable();
        }
        g
    }

    /// Image under the vertex permutation `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        let mut g = Digraph::new(self.order());
        for (u, v) in self.arcs() {
            g.out[perm[u]].push(perm[v]);
        }
        for row in &mut g.out {
            row.sort_unstable();
        }
        g
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); order],
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 0..order {
            let v = (u + 1) % order;
            if u != v {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 1..order {
            g.insert(u - 1, u);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = SimpleGraph::new(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut g = SimpleGraph::new(10);
        for i in 0..5 {
            g.insert(i, (i + 1) % 5);
            g.insert(i, i + 5);
            g.insert(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
        }
        if let Err(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(pos, u);
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopInSimpleGraph(u));
        }
        self.insert(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
        }
        if let Ok(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].remove(pos);
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|row| row.binary_search(&v).is_ok())
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common degree, if the graph is regular (the empty graph has none).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|row| row.len() == d).then_some(d)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            !a.iter().any(|w| b.binary_search(w).is_ok())
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.order();
        let mut g = SimpleGraph::new(shift + other.order());
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        for (u, v) in other.edges() {
            g.insert(u + shift, v + shift);
        }
        g
    }

    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.order());
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        g
    }

    /// Adjacency rows as bitmasks; requires `order() <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "bitmask view needs order <= 64");
        self.adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    pub fn is_forest(&self) -> bool {
        crate::digraph::weak_components_simple(self).count + self.edge_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_forest() && self.edge_count() + 1 == self.order()
    }
}

/// Cayley multigraph with colored arcs; colors are element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredMultiDigraph {
    order: usize,
    arcs: Vec<(usize, usize, usize)>,
}

impl ColoredMultiDigraph {
    /// `arcs` are `(source, target, color)` triples; stored sorted.
    pub fn new(order: usize, mut arcs: Vec<(usize, usize, usize)>) -> Self {
        arcs.sort_unstable();
        ColoredMultiDigraph { order, arcs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arcs(&self) -> &[(usize, usize, usize)] {
        &self.arcs
    }

    /// Forget colors and multiplicities.
    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.order);
        for &(u, v, _) in &self.arcs {
            g.out[u].push(v);
        }
        for row in &mut g.out {
            row.sort_unstable();
            row.dedup();
        }
        g
    }
}

/// Either carrier, as read from or written to the graph text format.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Graph {
    Directed(Digraph),
    Undirected(SimpleGraph),
}

impl Graph {
    pub fn order(&self) -> usize {
        match self {
            Graph::Directed(g) => g.order(),
            Graph::Undirected(g) => g.order(),
        }
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n directed|undirected`".into(),
        })?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(parts.next(), hline, "order")?;
        let directed = match parts.next() {
            Some("directed") => true,
            Some("undirected") => false,
            other => {
                return Err(Error::Parse {
                    line: hline,
                    message: format!("expected `directed` or `undirected`, found {other:?}"),
                })
            }
        };
        if let Some(extra) = parts.next() {
            return Err(Error::Parse {
                line: hline,
                message: format!("unexpected token `{extra}` in header"),
            });
        }

        let mut arcs = Vec::new();
        for (line, l) in lines {
            let mut parts = l.split_whitespace();
            let u: usize = parse_field(parts.next(), line, "source vertex")?;
            let v: usize = parse_field(parts.next(), line, "target vertex")?;
            if let Some(extra) = parts.next() {
                return Err(Error::Parse {
                    line,
                    message: format!("unexpected token `{extra}`"),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex out of range for order {n}"),
                });
            }
            if !directed && u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("loop `{u} {u}` in an undirected graph"),
                });
            }
            arcs.push((u, v));
        }
        Ok(if directed {
            Graph::Directed(Digraph::from_arcs(n, arcs)?)
        } else {
            Graph::Undirected(SimpleGraph::from_edges(n, arcs)?)
        })
    }
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{tok}`"),
    })
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} directed", self.order())?;
        for (u, v) in self.arcs() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} undirected", self.order())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph::Directed(g) => g.fmt(f),
            Graph::Undirected(g) => g.fmt(f),
        }
    }
}
