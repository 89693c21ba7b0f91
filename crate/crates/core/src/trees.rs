//! Generated monoid trees: trees `T = Cay(M, C)` (underlying graph) with
//! `<C> = M`.
//!
//! For a root `e`, `b_e(x)` counts the neighbours of `x` one step farther from
//! `e`, and the branch of a neighbour `c` of `e` is the set of vertices closer
//! to `c` than to `e`. A monotone `b_e` (deeper never has more successors)
//! yields a witness; two necessary conditions and the degree window
//! `Δ-1 <= deg(e) <= Δ` rule trees out.

use std::collections::VecDeque;

use crate::algebra::{cayley_colored, ConnectionSet, MulTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, SimpleGraph};
use crate::recognize::{recognize_monoid_graph, SearchOptions, SearchOutcome, SearchStatus};
use crate::witness::{CayleyWitness, WitnessMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTreeAnalysis {
    pub tree: SimpleGraph,
    pub root: usize,
    pub depth: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    /// Successor counts `b_e`.
    pub successors: Vec<usize>,
    /// The neighbour of the root whose branch contains the vertex.
    pub branch: Vec<Option<usize>>,
    /// Children ordered by subtree size (descending), then vertex id.
    pub children: Vec<Vec<usize>>,
}

pub fn analyze(t: &SimpleGraph, e: usize) -> Result<RootedTreeAnalysis> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if e >= n {
        return Err(Error::VertexOutOfRange {
            vertex: e,
            order: n,
        });
    }
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut branch = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([e]);
    depth[e] = 0;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in t.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some(x);
                branch[y] = if x == e { Some(y) } else { branch[x] };
                queue.push_back(y);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &x in order.iter().rev() {
        if let Some(p) = parent[x] {
            size[p] += size[x];
        }
    }
    let children: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut ch: Vec<usize> = t
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| parent[y] == Some(x))
                .collect();
            ch.sort_by_key(|&y| (std::cmp::Reverse(size[y]), y));
            ch
        })
        .collect();
    let successors = children.iter().map(Vec::len).collect();
    Ok(RootedTreeAnalysis {
        tree: t.clone(),
        root: e,
        depth,
        parent,
        successors,
        branch,
        children,
    })
}

/// Deeper vertices never have more successors.
pub fn sufficient_check(a: &RootedTreeAnalysis) -> bool {
    let n = a.depth.len();
    (0..n).all(|x| (0..n).all(|y| a.depth[x] <= a.depth[y] || a.successors[x] <= a.successors[y]))
}

impl RootedTreeAnalysis {
    /// Colour `i` moves `x` to its `i`-th child, to its last child when it has
    /// fewer, and nowhere when `x` is a leaf.
    fn step(&self, x: usize, colour: usize) -> usize {
        let ch = &self.children[x];
        if ch.is_empty() {
            x
        } else {
            ch[colour.min(ch.len() - 1)]
        }
    }

    /// Colour indices along the path from the root to `v`.
    pub fn word(&self, v: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut x = v;
        while let Some(p) = self.parent[x] {
            w.push(
                self.children[p]
                    .iter()
                    .position(|&c| c == x)
                    .expect("child"),
            );
            x = p;
        }
        w.reverse();
        w
    }

    pub fn walk(&self, x: usize, word: &[usize]) -> usize {
        word.iter().fold(x, |v, &c| self.step(v, c))
    }
}

/// Witness on the vertex set: `u * v` walks the root-to-`v` word from `u`.
pub fn construct_generated_witness(a: &RootedTreeAnalysis) -> Result<CayleyWitness> {
    if !sufficient_check(a) {
        return Err(Error::ConditionFails(
            "successor counts are not monotone in depth".into(),
        ));
    }
    let n = a.depth.len();
    let e = a.root;
    let words: Vec<Vec<usize>> = (0..n).map(|v| a.word(v)).collect();
    let table = MulTable::from_fn(n, Some(e), |u, v| a.walk(u, &words[v]))?;
    let gens = &a.children[e];
    // a single vertex has no neighbours; C = {e} draws only a loop
    let connection = if gens.is_empty() {
        ConnectionSet::new([e])?
    } else {
        ConnectionSet::new(gens.iter().copied())?
    };
    let w = CayleyWitness::identity_labelled(WitnessMode::GeneratedMonoidTree, table, connection);
    let check = w.verify(&Graph::Undirected(a.tree.clone()));
    if !check.all_ok() {
        return Err(Error::Verification(format!("{:?}", check.failures())));
    }
    // colour i arcs are exactly the labelled tree's colour i arcs
    if !gens.is_empty() {
        let col = cayley_colored(&w.table, &w.connection)?;
        let colour_of = |c: usize| gens.iter().position(|&g| g == c).expect("generator");
        if col
            .arcs()
            .iter()
            .any(|&(x, y, c)| a.step(x, colour_of(c)) != y)
        {
            return Err(Error::Verification("coloured Cayley graph differs".into()));
        }
    }
    Ok(w)
}

/// The first violated necessary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryFailure {
    /// No vertex one level up has at least as many successors as `x`.
    Part1 { x: usize },
    /// No vertex of the branch of `c` is shallow enough with few enough successors.
    Part2 { x: usize, c: usize },
}

pub fn necessary_check(
    a: &RootedTreeAnalysis,
    symmetry_free: bool,
) -> std::result::Result<(), NecessaryFailure> {
    let n = a.depth.len();
    let (d, b) = (&a.depth, &a.successors);
    for x in (0..n).filter(|&x| x != a.root) {
        if !(0..n).any(|y| d[y] + 1 == d[x] && b[x] <= b[y]) {
            return Err(NecessaryFailure::Part1 { x });
        }
    }
    if symmetry_free {
        let gens = &a.children[a.root];
        for x in 0..n {
            let eps = if x == a.root || gens.contains(&x) {
                0
            } else {
                1
            };
            for &c in gens {
                let ok = (0..n)
                    .any(|y| a.branch[y] == Some(c) && d[y] <= d[x] + 1 && b[y] <= b[x] + eps);
                if !ok {
                    return Err(NecessaryFailure::Part2 { x, c });
                }
            }
        }
    }
    Ok(())
}

/// Vertices whose degree is `Δ - 1` or `Δ`.
pub fn neutral_candidates(t: &SimpleGraph) -> Vec<usize> {
    let max = t.max_degree();
    (0..t.order()).filter(|&v| t.degree(v) + 1 >= max).collect()
}

/// AHU code of the subtree at `root` when `blocked` is removed.
fn rooted_code(t: &SimpleGraph, root: usize, blocked: usize) -> String {
    fn rec(t: &SimpleGraph, x: usize, from: usize, blocked: usize) -> String {
        let mut codes: Vec<String> = t
            .neighbors(x)
            .iter()
            .filter(|&&y| y != from && y != blocked)
            .map(|&y| rec(t, y, x, blocked))
            .collect();
        codes.sort();
        format!("({})", codes.concat())
    }
    rec(t, root, usize::MAX, blocked)
}

/// A neighbour `c` of `e` such that some automorphism swaps `e` and `c`.
pub fn swapping_neighbor(t: &SimpleGraph, e: usize) -> Option<usize> {
    t.neighbors(e)
        .iter()
        .copied()
        .find(|&c| rooted_code(t, e, c) == rooted_code(t, c, e))
}

/// Whether the second necessary condition applies at `e`. A nontrivial left
/// multiplication that is an automorphism of a generated monoid tree comes
/// from an involution `c` in `C`, which swaps `e` and `c`; without an
/// automorphism swapping `e` with a neighbour, none can exist.
pub fn symmetry_condition(t: &SimpleGraph, e: usize) -> bool {
    swapping_neighbor(t, e).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub e: usize,
    pub sufficient: bool,
    pub part2_applied: bool,
    pub necessary: std::result::Result<(), NecessaryFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeStatus {
    Yes(Box<CayleyWitness>),
    No,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVerdict {
    pub status: TreeStatus,
    pub candidates: Vec<CandidateReport>,
}

impl TreeVerdict {
    pub fn label(&self) -> &'static str {
        match self.status {
            TreeStatus::Yes(_) => "yes",
            TreeStatus::No => "no",
            TreeStatus::Undecided => "undecided",
        }
    }
}

/// Yes when some candidate root has monotone successor counts, No when every
/// candidate fails a necessary condition, Undecided otherwise.
pub fn classify_tree(t: &SimpleGraph) -> Result<TreeVerdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut candidates = Vec::new();
    let mut witness = None;
    for e in neutral_candidates(t) {
        let a = analyze(t, e)?;
        let sufficient = sufficient_check(&a);
        let part2_applied = symmetry_condition(t, e);
        let necessary = necessary_check(&a, part2_applied);
        if sufficient && necessary.is_err() {
            return Err(Error::Verification(format!(
                "root {e}: sufficient condition holds but {necessary:?}"
            )));
        }
        if sufficient && witness.is_none() {
            witness = Some(construct_generated_witness(&a)?);
        }
        candidates.push(CandidateReport {
            e,
            sufficient,
            part2_applied,
            necessary,
        });
    }
    let status = match witness {
        Some(w) => TreeStatus::Yes(Box::new(w)),
        None if candidates.iter().all(|c| c.necessary.is_err()) => TreeStatus::No,
        None => TreeStatus::Undecided,
    };
    Ok(TreeVerdict { status, candidates })
}

/// Like [`classify_tree`], but an Undecided tree goes to the table search
/// with the generation requirement. The outcome of that search is returned
/// alongside the verdict.
pub fn classify_tree_escalated(
    t: &SimpleGraph,
    opts: &SearchOptions,
) -> Result<(TreeVerdict, Option<SearchOutcome>)> {
    let mut verdict = classify_tree(t)?;
    if verdict.status != TreeStatus::Undecided {
        return Ok((verdict, None));
    }
    let opts = SearchOptions {
        generated: true,
        ..*opts
    };
    let outcome = recognize_monoid_graph(t, &opts)?;
    verdict.status = match &outcome.status {
        SearchStatus::Witness(w) => TreeStatus::Yes(w.clone()),
        SearchStatus::ExhaustedNo => TreeStatus::No,
        SearchStatus::BudgetExceeded => TreeStatus::Undecided,
    };
    Ok((verdict, Some(outcome)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{generated_closure, validate_table};
    use crate::families::{gen_perfect_kary, gen_tplus};

    #[test]
    fn analysis_examples() {
        let a = analyze(&SimpleGraph::star(3), 0).unwrap();
        assert_eq!(a.successors, vec![3, 0, 0, 0]);
        let a = analyze(&SimpleGraph::path(3), 0).unwrap();
        assert_eq!(a.successors, vec![1, 1, 0]);
        let t = gen_perfect_kary(3, 3).unwrap();
        let a = analyze(&t, 0).unwrap();
        assert!((0..40).all(|v| a.successors[v] == if a.depth[v] < 3 { 3 } else { 0 }));
        assert!(analyze(&SimpleGraph::cycle(3), 0).is_err());
    }

    #[test]
    fn sufficient_examples() {
        assert!(sufficient_check(
            &analyze(&gen_perfect_kary(2, 3).unwrap(), 0).unwrap()
        ));
        assert!(!sufficient_check(
            &analyze(&gen_tplus(3, 2).unwrap(), 0).unwrap()
        ));
        assert!(sufficient_check(&analyze(&SimpleGraph::new(1), 0).unwrap()));
    }

    #[test]
    fn witnesses() {
        for (t, e, order) in [
            (SimpleGraph::path(2), 0, 2),
            (SimpleGraph::path(2), 1, 2),
            (SimpleGraph::star(3), 0, 4),
            (gen_perfect_kary(2, 2).unwrap(), 0, 7),
            (SimpleGraph::new(1), 0, 1),
        ] {
            let a = analyze(&t, e).unwrap();
            let w = construct_generated_witness(&a).unwrap();
            assert_eq!(w.table.order(), order);
            assert!(validate_table(&w.table).is_ok());
            assert_eq!(
                generated_closure(&w.table, w.connection.elements()).len(),
                order
            );
        }
        // K2: the leaf squares to itself
        let w = construct_generated_witness(&analyze(&SimpleGraph::path(2), 0).unwrap()).unwrap();
        assert_eq!(w.table.mul(1, 1), 1);
    }

    #[test]
    fn necessary_examples() {
        let tp = gen_tplus(3, 2).unwrap();
        for e in neutral_candidates(&tp) {
            let a = analyze(&tp, e).unwrap();
            assert!(
                necessary_check(&a, symmetry_condition(&tp, e)).is_err(),
                "root {e}"
            );
        }
        let t = gen_perfect_kary(3, 2).unwrap();
        assert!(necessary_check(&analyze(&t, 0).unwrap(), true).is_ok());
        assert!(necessary_check(&analyze(&SimpleGraph::path(4), 0).unwrap(), true).is_ok());
    }

    #[test]
    fn candidates_and_symmetry() {
        assert_eq!(neutral_candidates(&SimpleGraph::star(4)), vec![0]);
        assert_eq!(neutral_candidates(&SimpleGraph::star(2)), vec![0, 1, 2]);
        assert_eq!(
            neutral_candidates(&SimpleGraph::path(5)),
            vec![0, 1, 2, 3, 4]
        );
        assert!(!symmetry_condition(&SimpleGraph::path(2), 0));
        assert!(symmetry_condition(&SimpleGraph::path(3), 1));
        // P4: the middle edge swaps its ends
        assert!(!symmetry_condition(&SimpleGraph::path(4), 1));
        let tp = gen_tplus(3, 3).unwrap();
        assert!(neutral_candidates(&tp)
            .iter()
            .all(|&e| symmetry_condition(&tp, e)));
    }

    #[test]
    fn classify_examples() {
        assert!(matches!(
            classify_tree(&gen_tplus(3, 2).unwrap()).unwrap().status,
            TreeStatus::No
        ));
        assert!(matches!(
            classify_tree(&gen_perfect_kary(3, 2).unwrap())
                .unwrap()
                .status,
            TreeStatus::Yes(_)
        ));
    }
}

#[cfg(test)]
mod census {
    use super::*;
    use crate::digraph::enumerate_trees;

    fn counts(n: usize) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for t in enumerate_trees(n) {
            let v = classify_tree(&t).unwrap();
            counts[match v.status {
                TreeStatus::Yes(_) => 0,
                TreeStatus::No => 1,
                TreeStatus::Undecided => 2,
            }] += 1;
        }
        counts
    }

    #[test]
    fn escalation_decides_order_eight() {
        for t in enumerate_trees(8) {
            let (v, out) = classify_tree_escalated(&t, &SearchOptions::default()).unwrap();
            if let Some(out) = out {
                assert_ne!(
                    v.status,
                    TreeStatus::Undecided,
                    "{t:?} {}",
                    out.nodes_explored
                );
            }
        }
    }

    #[test]
    fn small_orders() {
        let upto7: Vec<[usize; 3]> = (1..=7).map(counts).collect();
        assert!(upto7.iter().all(|c| c[2] == 0));
        assert_eq!(upto7.iter().map(|c| c[1]).sum::<usize>(), 1);
        assert!(counts(8)[2] >= 1);
    }
}
