//! Structural algorithms shared by the other modules: components,
//! connectivity, canonical forms and small-order enumeration.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::graph::{Digraph, Graph, SimpleGraph};

/// Component id per vertex, ids dense in `0..count` and numbered by first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub id: Vec<usize>,
    pub count: usize,
}

impl ComponentDecomposition {
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.id.len()).filter(|&v| self.id[v] == c).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.id {
            sizes[c] += 1;
        }
        sizes
    }
}

fn components_from_lists(lists: &[Vec<usize>]) -> ComponentDecomposition {
    let n = lists.len();
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        id[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &lists[v] {
                if id[w] == usize::MAX {
                    id[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentDecomposition { id, count }
}

pub fn weak_components(g: &Digraph) -> ComponentDecomposition {
    let mut lists = vec![Vec::new(); g.order()];
    for (u, v) in g.arcs() {
        lists[u].push(v);
        lists[v].push(u);
    }
    components_from_lists(&lists)
}

pub fn weak_components_simple(g: &SimpleGraph) -> ComponentDecomposition {
    let lists: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    components_from_lists(&lists)
}

fn reach(n: usize, next: impl Fn(usize) -> Vec<usize>) -> usize {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut rev = vec![Vec::new(); n];
    for (u, v) in g.arcs() {
        rev[v].push(u);
    }
    reach(n, |v| g.out_neighbors(v).to_vec()) == n && reach(n, |v| rev[v].clone()) == n
}

/// Max number of internally vertex-disjoint `s -> t` paths, found by unit
/// capacity flow on the vertex-split network.
fn local_connectivity(n: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> usize {
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add_edge(2 * v, 2 * v + 1, cap);
    }
    for &(u, v) in arcs {
        if u != v {
            net.add_edge(2 * u + 1, 2 * v, INF);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, n as i64) as usize
}

/// Minimum size of a directed vertex cut, or `n - 1` when no arc is missing.
pub fn strong_connectivity(g: &Digraph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameters("order must be at least 2".into()));
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let arcs: Vec<(usize, usize)> = g.arcs().collect();
    let mut best = n - 1;
    for s in 0..n {
        for t in 0..n {
            if s != t && !g.has_arc(s, t) {
                best = best.min(local_connectivity(n, &arcs, s, t));
            }
        }
    }
    Ok(best)
}

/// Exact vertex connectivity; `n - 1` for complete graphs, 0 if disconnected.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameters("order must be at least 2".into()));
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)))
        .collect();
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(n, &arcs, s, t));
            }
        }
    }
    Ok(best)
}

/// Default order cap for [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Colour refinement; returns canonical colour ids (ranks of sorted signatures).
fn refine(initial: Vec<usize>, out: &[Vec<usize>], inn: &[Vec<usize>]) -> Vec<usize> {
    let mut colors = initial;
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colors.len())
            .map(|v| {
                let mut o: Vec<usize> = out[v].iter().map(|&w| colors[w]).collect();
                let mut i: Vec<usize> = inn[v].iter().map(|&w| colors[w]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (colors[v], o, i)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(r, s)| (s, r))
            .collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let next_classes = ranks.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

/// Calls `visit` with every vertex ordering that lists the cells in order
/// and permutes vertices only within a cell.
fn for_each_cell_ordering(cells: &[Vec<usize>], visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        cells: &[Vec<usize>],
        ci: usize,
        work: &mut Vec<usize>,
        order: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if ci == cells.len() {
            visit(order);
            return;
        }
        if work.is_empty() {
            work.extend_from_slice(&cells[ci]);
        }
        permute(cells, ci, work, 0, order, visit);
    }
    fn permute(
        cells: &[Vec<usize>],
        ci: usize,
        work: &mut Vec<usize>,
        k: usize,
        order: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == work.len() {
            let len = order.len();
            order.extend_from_slice(work);
            let mut next = Vec::new();
            rec(cells, ci + 1, &mut next, order, visit);
            order.truncate(len);
            return;
        }
        for i in k..work.len() {
            work.swap(k, i);
            permute(cells, ci, work, k + 1, order, visit);
            work.swap(k, i);
        }
    }
    let mut work = Vec::new();
    let mut order = Vec::new();
    rec(cells, 0, &mut work, &mut order, visit);
}

fn cells_of(colors: &[usize]) -> Vec<Vec<usize>> {
    let k = colors.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// Six-bit printable packing used by the graph6/digraph6 formats.
fn pack6(n: usize, bits: impl Iterator<Item = bool>, prefix: Option<u8>) -> Vec<u8> {
    let mut out: Vec<u8> = prefix.into_iter().collect();
    out.push(63 + n as u8);
    let bits: Vec<bool> = bits.collect();
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(63 + byte);
    }
    out
}

/// graph6 string of `g` under the given vertex ordering.
fn graph6_bits(masks: &[u64], order: &[usize]) -> u128 {
    let mut key = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            key = (key << 1) | ((masks[order[i]] >> order[j]) & 1) as u128;
        }
    }
    key
}

fn digraph6_bits(masks: &[u64], order: &[usize]) -> u128 {
    let mut key = 0u128;
    for &u in order {
        for &v in order {
            key = (key << 1) | ((masks[u] >> v) & 1) as u128;
        }
    }
    key
}

fn key_bits(key: u128, len: usize) -> impl Iterator<Item = bool> {
    (0..len).map(move |i| (key >> (len - 1 - i)) & 1 == 1)
}

/// Vertex ordering realising the canonical form of a simple graph.
fn canonical_order_simple(g: &SimpleGraph) -> (u128, Vec<usize>) {
    let n = g.order();
    let lists: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let colors = refine(vec![0; n], &lists, &lists);
    let masks = g.adjacency_masks();
    let mut best: Option<(u128, Vec<usize>)> = None;
    for_each_cell_ordering(&cells_of(&colors), &mut |ord| {
        let key = graph6_bits(&masks, ord);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, ord.to_vec()));
        }
    });
    best.unwrap_or((0, Vec::new()))
}

fn digraph_masks(g: &Digraph) -> Vec<u64> {
    (0..g.order())
        .map(|u| g.out_neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect()
}

fn canonical_order_digraph(g: &Digraph) -> (u128, Vec<usize>) {
    let n = g.order();
    let out: Vec<Vec<usize>> = (0..n).map(|v| g.out_neighbors(v).to_vec()).collect();
    let mut inn = vec![Vec::new(); n];
    for (u, v) in g.arcs() {
        inn[v].push(u);
    }
    let initial = (0..n).map(|v| usize::from(g.has_arc(v, v))).collect();
    let colors = refine(initial, &out, &inn);
    let masks = digraph_masks(g);
    let mut best: Option<(u128, Vec<usize>)> = None;
    for_each_cell_ordering(&cells_of(&colors), &mut |ord| {
        let key = digraph6_bits(&masks, ord);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, ord.to_vec()));
        }
    });
    best.unwrap_or((0, Vec::new()))
}

/// Canonical graph6 string of a simple graph: the lexicographically least
/// upper-triangle bit string over all vertex orderings that respect the
/// colour-refinement partition.
pub fn canonical_form_simple(g: &SimpleGraph) -> Result<Vec<u8>> {
    canonical_form_simple_capped(g, CANONICAL_CAP)
}

pub fn canonical_form_simple_capped(g: &SimpleGraph, cap: usize) -> Result<Vec<u8>> {
    let n = g.order();
    if n > cap.min(16) {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let (key, _) = canonical_order_simple(g);
    Ok(pack6(n, key_bits(key, n * (n - 1) / 2), None))
}

/// Canonical digraph6 string (prefixed `&`), loops included on the diagonal.
pub fn canonical_form_digraph(g: &Digraph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > CANONICAL_CAP.min(11) {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: CANONICAL_CAP,
        });
    }
    let (key, _) = canonical_order_digraph(g);
    Ok(pack6(n, key_bits(key, n * n), Some(b'&')))
}

/// Canonical string of either carrier.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    match g {
        Graph::Directed(d) => canonical_form_digraph(d),
        Graph::Undirected(u) => canonical_form_simple(u),
    }
}

/// Relabel `g` into its canonical representative.
pub fn canonical_simple(g: &SimpleGraph) -> SimpleGraph {
    let (_, ord) = canonical_order_simple(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in ord.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

pub fn canonical_digraph(g: &Digraph) -> Digraph {
    let (_, ord) = canonical_order_digraph(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in ord.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// Decode a graph6 string produced by [`canonical_form_simple`].
pub fn decode_graph6(s: &[u8]) -> Result<SimpleGraph> {
    let bad = || Error::Parse {
        line: 1,
        message: "malformed graph6 string".into(),
    };
    let (&first, rest) = s.split_first().ok_or_else(bad)?;
    let n = first.checked_sub(63).ok_or_else(bad)? as usize;
    let bits: Vec<bool> = rest
        .iter()
        .flat_map(|&b| (0..6).map(move |i| ((b - 63) >> (5 - i)) & 1 == 1))
        .collect();
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if *bits.get(k).ok_or_else(bad)? {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Orbits of the automorphism group on vertices, as orbit ids (least member
/// first). Returns `None` above the canonical-form cap.
pub fn automorphism_orbits_simple(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return None;
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let colors = refine(vec![0; n], &lists, &lists);
    let masks = g.adjacency_masks();
    orbits_from(n, &colors, |sigma| {
        (0..n).all(|u| (0..n).all(|v| ((masks[u] >> v) & 1) == ((masks[sigma[u]] >> sigma[v]) & 1)))
    })
}

pub fn automorphism_orbits_digraph(g: &Digraph) -> Option<Vec<usize>> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return None;
    }
    let out: Vec<Vec<usize>> = (0..n).map(|v| g.out_neighbors(v).to_vec()).collect();
    let mut inn = vec![Vec::new(); n];
    for (u, v) in g.arcs() {
        inn[v].push(u);
    }
    let initial = (0..n).map(|v| usize::from(g.has_arc(v, v))).collect();
    let colors = refine(initial, &out, &inn);
    let masks = digraph_masks(g);
    orbits_from(n, &colors, |sigma| {
        (0..n).all(|u| (0..n).all(|v| ((masks[u] >> v) & 1) == ((masks[sigma[u]] >> sigma[v]) & 1)))
    })
}

/// Enumerates colour-preserving permutations `sigma` and merges orbits of
/// those accepted by `is_aut`.
fn orbits_from(
    n: usize,
    colors: &[usize],
    is_aut: impl Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let cells = cells_of(colors);
    // ordering lists cells in order; map base ordering position -> vertex
    let base: Vec<usize> = cells.iter().flatten().copied().collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut sigma = vec![0; n];
    for_each_cell_ordering(&cells, &mut |ord| {
        for (p, &v) in base.iter().enumerate() {
            sigma[v] = ord[p];
        }
        if is_aut(&sigma) {
            for (v, &w) in sigma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    });
    Some((0..n).map(|v| find(&mut parent, v)).collect())
}

/// Which graphs [`enumerate_graphs`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    /// Simple undirected graphs, `n <= 7`.
    Simple,
    /// Digraphs with loops allowed and minimum outdegree at least 1, `n <= 4`.
    DigraphMinOutdeg1,
    /// All digraphs with loops allowed, `n <= 4`.
    Digraph,
    /// Digraphs in which every vertex has the same outdegree `k >= 1`, `n <= 4`.
    Outregular,
    /// Functional digraphs (outdegree exactly 1), `n <= 7`.
    OneOutregular,
    /// Free trees, `n <= 10`.
    Tree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumerated {
    Simple(Vec<SimpleGraph>),
    Directed(Vec<Digraph>),
}

impl EnumMode {
    pub fn cap(self) -> usize {
        match self {
            EnumMode::Simple => 7,
            EnumMode::DigraphMinOutdeg1 | EnumMode::Digraph | EnumMode::Outregular => 4,
            EnumMode::OneOutregular => 7,
            EnumMode::Tree => 10,
        }
    }
}

/// One canonical representative per isomorphism class, sorted by canonical string.
pub fn enumerate_graphs(n: usize, mode: EnumMode) -> Result<Enumerated> {
    if n > mode.cap() {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: mode.cap(),
        });
    }
    Ok(match mode {
        EnumMode::Simple => Enumerated::Simple(enumerate_bounded_degree(n, usize::MAX)),
        EnumMode::Tree => Enumerated::Simple(enumerate_trees(n)),
        EnumMode::Digraph => Enumerated::Directed(enumerate_digraphs(n, |_| true)),
        EnumMode::DigraphMinOutdeg1 => {
            Enumerated::Directed(enumerate_digraphs(n, |g| g.min_outdegree() >= 1))
        }
        EnumMode::Outregular => Enumerated::Directed(enumerate_digraphs(n, |g| {
            g.min_outdegree() >= 1 && g.min_outdegree() == g.max_outdegree()
        })),
        EnumMode::OneOutregular => Enumerated::Directed(enumerate_functional(n)),
    })
}

fn dedup_simple(graphs: impl IntoIterator<Item = SimpleGraph>) -> Vec<SimpleGraph> {
    let mut reps: BTreeMap<u128, SimpleGraph> = BTreeMap::new();
    for g in graphs {
        let (key, ord) = canonical_order_simple(&g);
        reps.entry(key).or_insert_with(|| {
            let mut perm = vec![0; g.order()];
            for (pos, &v) in ord.iter().enumerate() {
                perm[v] = pos;
            }
            g.permuted(&perm)
        });
    }
    reps.into_values().collect()
}

/// Simple graphs of order `n` with maximum degree at most `max_degree`,
/// by vertex augmentation; `n <= 9`.
pub fn enumerate_bounded_degree(n: usize, max_degree: usize) -> Vec<SimpleGraph> {
    assert!(n <= 9, "augmentation enumeration is limited to order 9");
    let mut level = vec![SimpleGraph::new(n.min(1))];
    for m in 2..=n {
        let mut next = Vec::new();
        for g in &level {
            let open: Vec<usize> = (0..m - 1).filter(|&v| g.degree(v) < max_degree).collect();
            for subset in 0u32..(1 << open.len()) {
                if subset.count_ones() as usize > max_degree {
                    continue;
                }
                let mut h = SimpleGraph::new(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("in range");
                }
                for (i, &v) in open.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        h.add_edge(v, m - 1).expect("in range");
                    }
                }
                next.push(h);
            }
        }
        level = dedup_simple(next);
    }
    if n == 0 {
        return vec![SimpleGraph::new(0)];
    }
    level
}

/// Free trees of order `n` by leaf augmentation.
pub fn enumerate_trees(n: usize) -> Vec<SimpleGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![SimpleGraph::new(1)];
    for m in 2..=n {
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut h = SimpleGraph::new(m);
                for (a, b) in t.edges() {
                    h.add_edge(a, b).expect("in range");
                }
                h.add_edge(v, m - 1).expect("in range");
                next.push(h);
            }
        }
        level = dedup_simple(next);
    }
    level
}

fn dedup_digraphs(graphs: impl IntoIterator<Item = Digraph>) -> Vec<Digraph> {
    let mut reps: BTreeMap<u128, Digraph> = BTreeMap::new();
    for g in graphs {
        let (key, ord) = canonical_order_digraph(&g);
        reps.entry(key).or_insert_with(|| {
            let mut perm = vec![0; g.order()];
            for (pos, &v) in ord.iter().enumerate() {
                perm[v] = pos;
            }
            g.permuted(&perm)
        });
    }
    reps.into_values().collect()
}

fn enumerate_digraphs(n: usize, keep: impl Fn(&Digraph) -> bool) -> Vec<Digraph> {
    let cells = n * n;
    let labeled = (0u64..(1u64 << cells)).filter_map(|bits| {
        let arcs = (0..cells)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| (i / n, i % n));
        let g = Digraph::from_arcs(n, arcs).expect("in range");
        keep(&g).then_some(g)
    });
    dedup_digraphs(labeled)
}

fn enumerate_functional(n: usize) -> Vec<Digraph> {
    let total = n.pow(n as u32);
    let labeled = (0..total).map(|mut code| {
        let succ: Vec<usize> = (0..n)
            .map(|_| {
                let s = code % n;
                code /= n;
                s
            })
            .collect();
        Digraph::from_successors(&succ).expect("in range")
    });
    dedup_digraphs(labeled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_c5() -> SimpleGraph {
        SimpleGraph::complete(4).disjoint_union(&SimpleGraph::cycle(5))
    }

    #[test]
    fn components() {
        let d = weak_components_simple(&k4_c5());
        assert_eq!(d.count, 2);
        assert_eq!(d.sizes(), vec![4, 5]);
        assert_eq!(weak_components_simple(&SimpleGraph::new(4)).count, 4);
        assert_eq!(weak_components_simple(&SimpleGraph::path(5)).count, 1);
        let g = Digraph::from_arcs(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(weak_components(&g).count, 1);
    }

    #[test]
    fn strong_connectivity_examples() {
        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        assert!(is_strongly_connected(&c3));
        assert_eq!(strong_connectivity(&c3).unwrap(), 1);
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(!is_strongly_connected(&arc));
        assert_eq!(strong_connectivity(&arc), Err(Error::NotStronglyConnected));
        let k3 = Digraph::from_arcs(3, (0..3).flat_map(|u| (0..3).map(move |v| (u, v)))).unwrap();
        assert_eq!(strong_connectivity(&k3).unwrap(), 2);
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(vertex_connectivity(&SimpleGraph::path(3)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&SimpleGraph::complete(4)).unwrap(), 3);
        assert_eq!(vertex_connectivity(&SimpleGraph::petersen()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&k4_c5()).unwrap(), 0);
    }

    #[test]
    fn canonical_forms() {
        let c5 = SimpleGraph::cycle(5);
        let relabel = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(
            canonical_form_simple(&c5).unwrap(),
            canonical_form_simple(&relabel).unwrap()
        );
        assert_ne!(
            canonical_form_simple(&c5).unwrap(),
            canonical_form_simple(&SimpleGraph::path(5)).unwrap()
        );
        let s = canonical_form_simple(&c5).unwrap();
        let back = decode_graph6(&s).unwrap();
        assert_eq!(canonical_form_simple(&back).unwrap(), s);
        assert!(canonical_form_simple(&SimpleGraph::new(11)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |n, mode| match enumerate_graphs(n, mode).unwrap() {
            Enumerated::Simple(v) => v.len(),
            Enumerated::Directed(v) => v.len(),
        };
        assert_eq!(count(3, EnumMode::Simple), 4);
        assert_eq!(count(4, EnumMode::Simple), 11);
        assert_eq!(count(5, EnumMode::Simple), 34);
        assert_eq!(count(6, EnumMode::Tree), 6);
        assert_eq!(count(7, EnumMode::Tree), 11);
        // functional digraphs: OEIS A001372
        assert_eq!(count(3, EnumMode::OneOutregular), 7);
        assert_eq!(count(4, EnumMode::OneOutregular), 19);
        // digraphs with loops on 2 vertices: OEIS A000595
        assert_eq!(count(2, EnumMode::Digraph), 10);
        assert_eq!(count(3, EnumMode::Digraph), 104);
        assert!(enumerate_graphs(8, EnumMode::Simple).is_err());
    }

    #[test]
    fn orbits() {
        let orb = automorphism_orbits_simple(&k4_c5()).unwrap();
        let classes: BTreeSet<usize> = orb.iter().copied().collect();
        assert_eq!(classes.len(), 2);
        let orb = automorphism_orbits_simple(&SimpleGraph::path(4)).unwrap();
        assert_eq!(orb, vec![0, 1, 1, 0]);
    }
}
