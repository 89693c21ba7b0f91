//! Generators for the named graph families, each checking the properties
//! claimed for it.
//!
//! Numbering conventions:
//! - `G_{k,l}`: layer-major. `(0, j)` is vertex `j` for `j < k^2`, and
//!   `(i, j)` with `i >= 1` is vertex `k^2 + (i - 1) k + j`.
//! - `G_{k,l,kappa}`: the merged classes of layer 0 come first, ordered by their
//!   least member, then layers `1..l` in the same order as in `G_{k,l}`.
//! - Threshold graphs: vertex `i` is the `i`-th created vertex, `0` the seed.
//! - `K4 ∪ C_l`: the clique on `0..4`, the cycle on `4..4+l`.
//! - Perfect `k`-ary trees: breadth-first, root `0`.
//! - `T+_{k,h}`: `T_{k,h}` plus a last vertex hanging from the least vertex at
//!   depth `h - 1`.
//! - The three-vertex digraph: `x = 0`, `y = 1`, `z = 2`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{ConnectionSet, MulTable};
use crate::digraph::is_strongly_connected;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, SimpleGraph};
use crate::witness::{CayleyWitness, WitnessMode};

fn layer_index(k: usize, i: usize, j: usize) -> usize {
    if i == 0 {
        j
    } else {
        k * k + (i - 1) * k + j
    }
}

/// `G_{k,l}`: layer 0 has `k^2` vertices, layers `1..l` have `k` each; every
/// vertex points to all of the next layer, and `(l-1, j1) -> (0, j2)` when
/// `j1 = floor(j2 / k)`.
pub fn gen_gkl(k: usize, ell: usize) -> Result<Digraph> {
    if k < 1 || ell < 1 {
        return Err(Error::InvalidParameters("need k >= 1 and l >= 1".into()));
    }
    let size = |i: usize| if i == 0 { k * k } else { k };
    let n = k * k + (ell - 1) * k;
    let mut g = Digraph::new(n);
    for i1 in 0..ell {
        for j1 in 0..size(i1) {
            let u = layer_index(k, i1, j1);
            if i1 + 1 < ell {
                for j2 in 0..size(i1 + 1) {
                    g.add_arc(u, layer_index(k, i1 + 1, j2))?;
                }
            }
            if i1 == ell - 1 {
                for j2 in (0..k * k).filter(|&j2| j2 / k == j1) {
                    g.add_arc(u, layer_index(k, 0, j2))?;
                }
            }
        }
    }
    Ok(g)
}

/// Whether `(0, j1)` and `(0, j2)` are merged.
pub fn kappa_related(k: usize, kappa: usize, j1: usize, j2: usize) -> bool {
    if j1 % k != j2 % k {
        return false;
    }
    let block = k * kappa;
    let (b1, b2) = (j1 / block, j2 / block);
    let top = (k * k - 1) / block;
    let adjacent_top = |lo: usize, hi: usize| lo + 1 == hi && hi == top;
    b1 == b2 || (!k.is_multiple_of(kappa) && (adjacent_top(b1, b2) || adjacent_top(b2, b1)))
}

/// `G_{k,l,kappa}` with its layer sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedFamily {
    pub graph: Digraph,
    /// Vertices per layer `V_0, ..., V_{l-1}`.
    pub layer_sizes: Vec<usize>,
    /// The representative `j` of each merged class in layer 0.
    pub classes: Vec<usize>,
}

/// `G_{k,l}` with the classes of the relation on layer 0 merged, keeping the
/// least member of each class. Checks k-outregularity, strong connectivity
/// (for `l >= 2`) and `|V_0| = floor(k / kappa) k`.
pub fn gen_gklk(k: usize, ell: usize, kappa: usize) -> Result<MergedFamily> {
    if k < 2 || ell < 2 || kappa < 1 {
        return Err(Error::InvalidParameters(
            "need k > 1, l >= 2, kappa >= 1".into(),
        ));
    }
    let base = gen_gkl(k, ell)?;
    let mut class_of = vec![usize::MAX; k * k];
    let mut classes = Vec::new();
    for j in 0..k * k {
        if class_of[j] != usize::MAX {
            continue;
        }
        let id = classes.len();
        classes.push(j);
        for (j2, slot) in class_of.iter_mut().enumerate().skip(j) {
            if kappa_related(k, kappa, j, j2) {
                if *slot != usize::MAX {
                    return Err(Error::Verification("relation is not transitive".into()));
                }
                *slot = id;
            }
        }
    }
    // the relation must be an equivalence; membership is checked pairwise
    for j1 in 0..k * k {
        for j2 in 0..k * k {
            if kappa_related(k, kappa, j1, j2) != (class_of[j1] == class_of[j2]) {
                return Err(Error::Verification("relation is not an equivalence".into()));
            }
        }
    }
    let v0 = classes.len();
    let map = |v: usize| {
        if v < k * k {
            class_of[v]
        } else {
            v - k * k + v0
        }
    };
    let n = v0 + (ell - 1) * k;
    let graph = Digraph::from_arcs(n, base.arcs().map(|(u, v)| (map(u), map(v))))?;

    let expect_v0 = (k / kappa) * k;
    if v0 != expect_v0 {
        return Err(Error::Verification(format!(
            "|V_0| = {v0}, expected {expect_v0}"
        )));
    }
    if let Some(v) = (0..n).find(|&v| graph.outdegree(v) != k) {
        return Err(Error::Verification(format!(
            "vertex {v} has outdegree {}",
            graph.outdegree(v)
        )));
    }
    if !is_strongly_connected(&graph) {
        return Err(Error::Verification("not strongly connected".into()));
    }
    let mut layer_sizes = vec![v0];
    layer_sizes.extend(std::iter::repeat_n(k, ell - 1));
    Ok(MergedFamily {
        graph,
        layer_sizes,
        classes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThresholdStep {
    Isolated,
    Dominating,
}

impl FromStr for ThresholdStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "isolated" => Ok(ThresholdStep::Isolated),
            "d" | "dominating" => Ok(ThresholdStep::Dominating),
            other => Err(Error::InvalidParameters(format!(
                "threshold step must be `i` or `d`, got `{other}`"
            ))),
        }
    }
}

impl fmt::Display for ThresholdStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThresholdStep::Isolated => "i",
            ThresholdStep::Dominating => "d",
        })
    }
}

/// Threshold graph from a creation sequence, with a monoid witness: the new
/// vertex `x` absorbs everything (`xv = vx = x^2 = x`) and joins the connection
/// set when it is dominating. The seed monoid is trivial with `C = {e}`.
pub fn gen_threshold(seq: &[ThresholdStep]) -> Result<(SimpleGraph, CayleyWitness)> {
    let n = seq.len() + 1;
    let mut g = SimpleGraph::new(n);
    let mut connection = vec![0];
    for (i, step) in seq.iter().enumerate() {
        let x = i + 1;
        if *step == ThresholdStep::Dominating {
            for v in 0..x {
                g.add_edge(v, x)?;
            }
            connection.push(x);
        }
    }
    // with the absorbing order, a*b is the later-created of a, b unless one is e
    let table = MulTable::from_fn(n, Some(0), |a, b| match (a, b) {
        (0, b) => b,
        (a, 0) => a,
        (a, b) => a.max(b),
    })?;
    let w = CayleyWitness::identity_labelled(
        WitnessMode::MonoidGraph,
        table,
        ConnectionSet::new(connection)?,
    );
    let check = w.verify(&Graph::Undirected(g.clone()));
    if !check.all_ok() {
        return Err(Error::Verification(format!("{:?}", check.failures())));
    }
    Ok((g, w))
}

pub fn gen_k4_cl(ell: usize) -> Result<SimpleGraph> {
    if ell < 3 {
        return Err(Error::InvalidParameters(
            "cycle length must be at least 3".into(),
        ));
    }
    Ok(SimpleGraph::complete(4).disjoint_union(&SimpleGraph::cycle(ell)))
}

/// Perfect `k`-ary tree of height `h`, breadth-first, root `0`.
pub fn gen_perfect_kary(k: usize, h: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(Error::InvalidParameters("need k >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut next_id = 1;
    for _ in 0..h {
        let mut next = Vec::with_capacity(frontier.len() * k);
        for &p in &frontier {
            for _ in 0..k {
                edges.push((p, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    SimpleGraph::from_edges(next_id, edges)
}

/// `T_{k,h}` plus one leaf at depth `h`.
pub fn gen_tplus(k: usize, h: usize) -> Result<SimpleGraph> {
    if h < 1 {
        return Err(Error::InvalidParameters("need h >= 1".into()));
    }
    let t = gen_perfect_kary(k, h)?;
    let n = t.order();
    // breadth-first numbering: the first vertex at depth h-1 is sum_{i<h-1} k^i
    let anchor: usize = (0..h - 1).map(|i| k.pow(i as u32)).sum();
    let mut g = SimpleGraph::new(n + 1);
    for (u, v) in t.edges() {
        g.add_edge(u, v)?;
    }
    g.add_edge(anchor, n)?;
    Ok(g)
}

/// Arcs `{(x,x),(x,y),(y,x),(y,z),(z,y),(z,z)}` with `x, y, z = 0, 1, 2`.
pub fn fig2_digraph() -> Digraph {
    Digraph::from_arcs(3, [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]).expect("fixed arcs")
}

/// The smallest tree that is not a generated monoid graph (order 7): centre 0
/// with leaves 1, 2, 3 and the path 0-4-5-6.
pub fn smallest_tree() -> SimpleGraph {
    SimpleGraph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6)])
        .expect("fixed edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::underlying_graph;
    use crate::digraph::{canonical_form_digraph, strong_connectivity};

    #[test]
    fn gkl_counts() {
        let g = gen_gkl(4, 5).unwrap();
        assert_eq!(g.order(), 32);
        assert!((0..32).all(|v| g.outdegree(v) == 4));
        let g = gen_gkl(2, 2).unwrap();
        assert_eq!(g.order(), 6);
        assert!((0..6).all(|v| g.outdegree(v) == 2));
    }

    #[test]
    fn gklk_merges() {
        let m1 = gen_gklk(4, 5, 1).unwrap();
        let base = gen_gkl(4, 5).unwrap();
        assert_eq!(m1.graph, base);
        assert_eq!(
            canonical_form_digraph(&m1.graph).ok(),
            canonical_form_digraph(&base).ok()
        );

        let m2 = gen_gklk(4, 5, 2).unwrap();
        assert_eq!(m2.layer_sizes, vec![8, 4, 4, 4, 4]);
        assert_eq!(m2.graph.order(), 24);
        assert_eq!(strong_connectivity(&m2.graph).unwrap(), 2);

        // kappa does not divide k: the top partial block joins the one below
        let m = gen_gklk(6, 4, 4).unwrap();
        assert_eq!(m.layer_sizes[0], 6);
        assert!(kappa_related(6, 4, 0, 30));
        assert!(!kappa_related(6, 4, 0, 31));
    }

    #[test]
    fn threshold_witnesses() {
        use ThresholdStep::*;
        let (g, w) = gen_threshold(&[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(w.table, MulTable::trivial());
        let (g, w) = gen_threshold(&[Dominating]).unwrap();
        assert_eq!(g, SimpleGraph::path(2));
        assert_eq!(w.table.order(), 2);
        let (g, w) = gen_threshold(&[Dominating, Isolated, Dominating]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(w.verify(&Graph::Undirected(g)).all_ok());
    }

    #[test]
    fn trees() {
        assert_eq!(gen_perfect_kary(3, 3).unwrap().order(), 40);
        assert_eq!(gen_perfect_kary(1, 4).unwrap(), SimpleGraph::path(5));
        assert_eq!(gen_perfect_kary(2, 0).unwrap().order(), 1);
        assert_eq!(gen_tplus(1, 1).unwrap().edge_count(), 2);
        assert_eq!(gen_tplus(1, 1).unwrap().max_degree(), 2);
        let tp = gen_tplus(3, 3).unwrap();
        assert_eq!(tp.order(), 41);
        assert!(tp.is_tree());
        // the extra leaf hangs from the first depth-2 vertex
        assert_eq!(tp.neighbors(40), &[4]);
    }

    #[test]
    fn k4_cl_and_fig2() {
        let g = gen_k4_cl(5).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 11));
        assert_eq!(gen_k4_cl(6).unwrap().order(), 10);
        assert!(gen_k4_cl(2).is_err());
        let f = fig2_digraph();
        assert!((0..3).all(|v| f.outdegree(v) == 2));
        assert_eq!(underlying_graph(&f), SimpleGraph::path(3));
    }

    #[test]
    fn smallest_tree_is_no() {
        use crate::trees::{classify_tree, TreeStatus};
        let t = smallest_tree();
        assert!(t.is_tree());
        assert_eq!(classify_tree(&t).unwrap().status, TreeStatus::No);
    }
}
