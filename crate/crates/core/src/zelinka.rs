//! 1-outregular digraphs: the cycle/depth profile, the monoid and semigroup
//! decision rules, and the explicit table constructions.
//!
//! Every component of a 1-outregular digraph is a single cycle with in-trees
//! hanging off it. For a component `C` write `z(C)` for the cycle length and
//! `l(C)` for the largest distance of a vertex to the cycle. The digraph is a
//! monoid digraph iff some component `C` has `z(D) | z(C)` and `l(D) <= l(C)`
//! for every component `D`; for semigroups the depth condition relaxes to
//! `l(D) <= l(C) + 1`.

use crate::algebra::{ConnectionSet, MulTable};
use crate::digraph::weak_components_simple;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, SimpleGraph};
use crate::witness::{CayleyWitness, WitnessMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub vertices: Vec<usize>,
    /// Cycle vertices in walk order, starting at the least one.
    pub cycle: Vec<usize>,
    pub cycle_length: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutregularProfile {
    pub successor: Vec<usize>,
    pub component_of: Vec<usize>,
    /// Distance of each vertex to the cycle of its component.
    pub depth: Vec<usize>,
    pub components: Vec<ComponentProfile>,
}

impl OutregularProfile {
    /// End vertex of the walk of length `k` from `x`.
    pub fn walk(&self, x: usize, k: usize) -> usize {
        let pre = k.min(self.depth[x]);
        let mut v = x;
        for _ in 0..pre {
            v = self.successor[v];
        }
        let z = self.components[self.component_of[x]].cycle_length;
        for _ in 0..(k - pre) % z {
            v = self.successor[v];
        }
        v
    }

    /// Length of the directed path from `x` to `y`, if `y` is reachable.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        if self.component_of[x] != self.component_of[y] {
            return None;
        }
        let c = &self.components[self.component_of[x]];
        let mut v = x;
        for d in 0..=self.depth[x] + c.cycle_length {
            if v == y {
                return Some(d);
            }
            v = self.successor[v];
        }
        None
    }

    fn vertex_at_max_depth(&self, component: usize) -> usize {
        let c = &self.components[component];
        *c.vertices
            .iter()
            .find(|&&v| self.depth[v] == c.depth)
            .expect("a deepest vertex exists")
    }
}

pub fn profile(g: &Digraph) -> Result<OutregularProfile> {
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| g.outdegree(v) != 1) {
        return Err(Error::NotOneOutregular {
            vertex: v,
            outdegree: g.outdegree(v),
        });
    }
    let successor: Vec<usize> = (0..n).map(|v| g.out_neighbors(v)[0]).collect();

    // x is on a cycle iff some walk of length <= n from x returns to x
    let on_cycle: Vec<bool> = (0..n)
        .map(|x| {
            let mut v = successor[x];
            for _ in 0..n {
                if v == x {
                    return true;
                }
                v = successor[v];
            }
            false
        })
        .collect();
    let depth: Vec<usize> = (0..n)
        .map(|x| {
            let mut v = x;
            let mut d = 0;
            while !on_cycle[v] {
                v = successor[v];
                d += 1;
            }
            d
        })
        .collect();

    let undirected = SimpleGraph::from_edges(
        n,
        (0..n)
            .filter(|&v| successor[v] != v)
            .map(|v| (v, successor[v])),
    )?;
    let comps = weak_components_simple(&undirected);
    let components = (0..comps.count)
        .map(|c| {
            let vertices = comps.members(c);
            let start = *vertices
                .iter()
                .find(|&&v| on_cycle[v])
                .expect("each component has a cycle");
            let mut cycle = vec![start];
            let mut v = successor[start];
            while v != start {
                cycle.push(v);
                v = successor[v];
            }
            let depth = vertices.iter().map(|&v| depth[v]).max().unwrap_or(0);
            ComponentProfile {
                cycle_length: cycle.len(),
                cycle,
                depth,
                vertices,
            }
        })
        .collect();
    Ok(OutregularProfile {
        successor,
        component_of: comps.id,
        depth,
        components,
    })
}

fn first_dominating(p: &OutregularProfile, slack: usize) -> Option<usize> {
    (0..p.components.len()).find(|&c| {
        let main = &p.components[c];
        p.components.iter().all(|d| {
            main.cycle_length.is_multiple_of(d.cycle_length) && d.depth <= main.depth + slack
        })
    })
}

/// Index of the least component witnessing the monoid condition.
pub fn decide_monoid(p: &OutregularProfile) -> Option<usize> {
    first_dominating(p, 0)
}

/// Index of the least component witnessing the semigroup condition.
pub fn decide_semigroup(p: &OutregularProfile) -> Option<usize> {
    first_dominating(p, 1)
}

/// The monoid with identity `e` whose Cayley digraph with respect to
/// `{successor(e)}` is the profiled digraph. `e` must be a deepest vertex of a
/// component satisfying the monoid condition.
fn monoid_at(p: &OutregularProfile, e: usize) -> Result<MulTable> {
    let n = p.successor.len();
    let comp = p.component_of[e];
    let main = &p.components[comp];
    let omega = p.walk(e, main.depth + main.cycle_length - 1);
    let d_e = p.distance(e, omega).expect("omega lies on the cycle of e");
    let mut r = vec![usize::MAX; n];
    for &v in &main.vertices {
        r[v] = d_e
            - p.distance(v, omega)
                .expect("cycle reachable within the component");
    }
    MulTable::from_fn(n, Some(e), |x, y| {
        if x == e {
            y
        } else if p.component_of[y] == comp {
            p.walk(x, r[y])
        } else {
            y
        }
    })
}

/// Monoid table with `cayley_digraph(table, {a}) == g` on the same labelling.
pub fn construct_monoid(g: &Digraph) -> Result<CayleyWitness> {
    let p = profile(g)?;
    let comp = decide_monoid(&p).ok_or_else(|| {
        Error::ConditionFails("no component dominates all cycle lengths and depths".into())
    })?;
    let e = p.vertex_at_max_depth(comp);
    let table = monoid_at(&p, e)?;
    let a = p.successor[e];
    Ok(CayleyWitness::identity_labelled(
        WitnessMode::MonoidDigraph,
        table,
        ConnectionSet::new([a])?,
    ))
}

/// Identity-free table with `cayley_digraph(table, {a}) == g`, obtained by
/// adding a source `u -> v` above a deepest vertex `v`, building the monoid
/// with identity `u`, and deleting `u`.
pub fn construct_semigroup(g: &Digraph) -> Result<CayleyWitness> {
    let p = profile(g)?;
    let comp = decide_semigroup(&p).ok_or_else(|| {
        Error::ConditionFails("no component satisfies the semigroup condition".into())
    })?;
    let n = g.order();
    let v = p.vertex_at_max_depth(comp);
    let mut succ = p.successor.clone();
    succ.push(v);
    let augmented = profile(&Digraph::from_successors(&succ)?)?;
    let u = n;
    let table = monoid_at(&augmented, u)?;
    // the source u has no in-arcs, so it must never be a product of old elements
    for x in 0..n {
        for y in 0..n {
            if table.mul(x, y) == u {
                return Err(Error::Verification(format!(
                    "vertex set not closed: {x}*{y} is the adjoined identity"
                )));
            }
        }
    }
    let keep: Vec<usize> = (0..n).collect();
    let table = table.restrict(&keep, None)?;
    Ok(CayleyWitness::identity_labelled(
        WitnessMode::SemigroupDigraph,
        table,
        ConnectionSet::new([v])?,
    ))
}

/// Monoid witness with `|C| = 1` for a forest: edges are directed towards the
/// least vertex of each component, which gets a loop.
pub fn forest_witness(f: &SimpleGraph) -> Result<CayleyWitness> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = f.order();
    let mut succ = vec![usize::MAX; n];
    for root in 0..n {
        if succ[root] != usize::MAX {
            continue;
        }
        succ[root] = root;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in f.neighbors(x) {
                if succ[y] == usize::MAX {
                    succ[y] = x;
                    stack.push(y);
                }
            }
        }
    }
    let mut w = construct_monoid(&Digraph::from_successors(&succ)?)?;
    w.mode = WitnessMode::MonoidGraph;
    let check = w.verify(&Graph::Undirected(f.clone()));
    if !check.all_ok() {
        return Err(Error::Verification(format!("{:?}", check.failures())));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_table;

    fn functional(succ: &[usize]) -> Digraph {
        Digraph::from_successors(succ).unwrap()
    }

    /// 4-cycle 0..4, plus 2-cycle {4,5} with tail 6 -> 4.
    fn four_two_tail() -> Digraph {
        functional(&[1, 2, 3, 0, 5, 4, 4])
    }

    #[test]
    fn profile_examples() {
        let p = profile(&functional(&[0])).unwrap();
        assert_eq!(p.components[0].cycle_length, 1);
        assert_eq!(p.components[0].depth, 0);

        let p = profile(&functional(&[1, 2, 2])).unwrap();
        assert_eq!(p.components[0].cycle_length, 1);
        assert_eq!(p.components[0].depth, 2);
        assert_eq!(p.depth[0], 2);

        let p = profile(&four_two_tail()).unwrap();
        let zl: Vec<(usize, usize)> = p
            .components
            .iter()
            .map(|c| (c.cycle_length, c.depth))
            .collect();
        assert_eq!(zl, vec![(4, 0), (2, 1)]);

        let bad = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            profile(&bad),
            Err(Error::NotOneOutregular {
                vertex: 1,
                outdegree: 0
            })
        );
    }

    #[test]
    fn decisions() {
        // (z=1,l=1) and (z=1,l=2)
        let p = profile(&functional(&[1, 1, 3, 4, 4])).unwrap();
        assert_eq!(decide_monoid(&p), Some(1));
        // (z=3,l=0) and (z=2,l=0)
        let p = profile(&functional(&[1, 2, 0, 4, 3])).unwrap();
        assert_eq!(decide_monoid(&p), None);
        let p = profile(&four_two_tail()).unwrap();
        assert_eq!(decide_monoid(&p), None);
        assert_eq!(decide_semigroup(&p), Some(0));
        // (z=1,l=0) and (z=1,l=2): the deeper one dominates
        let p = profile(&functional(&[0, 2, 3, 3])).unwrap();
        assert_eq!(decide_monoid(&p), Some(1));
        assert_eq!(decide_semigroup(&p), Some(1));
        // (z=2,l=0) and (z=3,l=0)
        let p = profile(&functional(&[1, 0, 3, 4, 2])).unwrap();
        assert_eq!(decide_semigroup(&p), None);
    }

    #[test]
    fn construct_small_monoids() {
        let g = functional(&[1, 1]);
        let w = construct_monoid(&g).unwrap();
        assert_eq!(w.table.identity(), Some(0));
        assert_eq!(w.connection.elements(), &[1]);
        assert_eq!(w.table.mul(1, 1), 1);
        assert!(w.verify(&Graph::Directed(g)).all_ok());

        let w = construct_monoid(&functional(&[0])).unwrap();
        assert_eq!(w.table, MulTable::trivial());
    }

    #[test]
    fn construct_semigroup_on_four_two_tail() {
        let g = four_two_tail();
        assert!(construct_monoid(&g).is_err());
        let w = construct_semigroup(&g).unwrap();
        assert_eq!(w.table.order(), 7);
        assert!(validate_table(&w.table).is_ok());
        assert!(w.verify(&Graph::Directed(g)).all_ok());

        let w = construct_semigroup(&functional(&[0])).unwrap();
        assert_eq!(w.table.order(), 1);
        assert_eq!(w.table.identity(), None);
    }

    #[test]
    fn forests() {
        let w = forest_witness(&SimpleGraph::new(1)).unwrap();
        assert_eq!(w.table.order(), 1);
        let p4 = SimpleGraph::path(4);
        let w = forest_witness(&p4).unwrap();
        assert_eq!(w.connection.len(), 1);
        assert!(w.verify(&Graph::Undirected(p4)).all_ok());
        assert_eq!(
            forest_witness(&SimpleGraph::cycle(3)),
            Err(Error::NotAForest)
        );
    }
}
