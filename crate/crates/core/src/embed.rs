//! Transition-monoid embeddings: every sink-free digraph is a union of
//! components of a monoid digraph.
//!
//! Given maps `f_1..f_k` on the vertex set `V` that together cover the arcs,
//! the set `M = V ⊔ <F>` carries the product
//!
//! ```text
//! x * y = y        (x, y in V)
//! x * f = f(x)     (x in V, f in <F>)
//! f * x = x        (f in <F>, x in V)
//! f * g = g ∘ f    (f, g in <F>)
//! ```
//!
//! with the identity map as neutral element, and `Cay(M, F)` minus the
//! component of the identity is the original digraph.

use std::collections::HashMap;

use crate::algebra::{ConnectionSet, MulTable};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, SimpleGraph};
use crate::invariants;
use crate::witness::{CayleyWitness, WitnessMode};

/// Default cap on `|<F>|`.
pub const CLOSURE_BUDGET: usize = 1_000_000;
/// Largest monoid the embedding will tabulate (the table is dense).
pub const TABLE_CAP: usize = 8_000;

/// Endofunctions of a common ground set `0..ground`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionFamily {
    pub ground: usize,
    pub maps: Vec<Vec<usize>>,
}

impl FunctionFamily {
    /// Checks that every `(v, f(v))` is an arc and every arc is some `(v, f(v))`.
    pub fn check_against(&self, g: &Digraph) -> Result<()> {
        if self.ground != g.order() {
            return Err(Error::InvalidFamily(
                "ground set differs from vertex set".into(),
            ));
        }
        for (i, f) in self.maps.iter().enumerate() {
            if f.len() != self.ground {
                return Err(Error::InvalidFamily(format!("map {i} has wrong length")));
            }
            if let Some(v) = (0..self.ground).find(|&v| !g.has_arc(v, f[v])) {
                return Err(Error::InvalidFamily(format!(
                    "map {i} sends {v} to {}, which is not an arc",
                    f[v]
                )));
            }
        }
        if let Some((u, v)) = g
            .arcs()
            .find(|&(u, v)| !self.maps.iter().any(|f| f[u] == v))
        {
            return Err(Error::InvalidFamily(format!(
                "arc ({u}, {v}) is not covered"
            )));
        }
        Ok(())
    }
}

/// Covers the arcs of `g` by `k` spanning 1-outregular subdigraphs, greedily
/// in vertex order, reusing an already covered arc once all are covered.
pub fn greedy_cover(g: &Digraph, k: usize) -> Result<FunctionFamily> {
    let n = g.order();
    for v in 0..n {
        let d = g.outdegree(v);
        if d == 0 {
            return Err(Error::Sink(v));
        }
        if d > k {
            return Err(Error::OutdegreeTooLarge {
                vertex: v,
                outdegree: d,
                bound: k,
            });
        }
    }
    let mut maps = vec![vec![0; n]; k];
    for v in 0..n {
        let out = g.out_neighbors(v);
        for (i, map) in maps.iter_mut().enumerate() {
            // arcs are taken in lexicographic order; once exhausted, repeat the last
            map[v] = out[i.min(out.len() - 1)];
        }
    }
    Ok(FunctionFamily { ground: n, maps })
}

/// The transformation monoid `<F>` (identity first, then BFS order over
/// right-composition by generators).
pub fn closure(fam: &FunctionFamily, budget: usize) -> Result<Vec<Vec<usize>>> {
    let identity: Vec<usize> = (0..fam.ground).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        for f in &fam.maps {
            // f after the current element
            let next: Vec<usize> = elems[head].iter().map(|&x| f[x]).collect();
            if !index.contains_key(&next) {
                if elems.len() >= budget {
                    return Err(Error::BudgetExceeded(format!("closure of {budget} maps")));
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        head += 1;
    }
    Ok(elems)
}

/// The embedding witness for `g` and a covering family. Elements `0..n` are
/// the vertices, `n..` the maps of `<F>` with the identity map at `n`.
pub fn embed_monoid(g: &Digraph, fam: &FunctionFamily) -> Result<CayleyWitness> {
    fam.check_against(g)?;
    embed_with_budget(g, fam, CLOSURE_BUDGET)
}

fn embed_with_budget(g: &Digraph, fam: &FunctionFamily, budget: usize) -> Result<CayleyWitness> {
    let n = g.order();
    let maps = closure(fam, budget)?;
    if n + maps.len() > TABLE_CAP {
        return Err(Error::BudgetExceeded(format!(
            "monoid of order {} exceeds the table cap {TABLE_CAP}",
            n + maps.len()
        )));
    }
    let index: HashMap<&[usize], usize> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), n + i))
        .collect();
    let total = n + maps.len();
    let table = MulTable::from_fn(total, Some(n), |a, b| match (a < n, b < n) {
        (true, true) => b,
        (true, false) => maps[b - n][a],
        (false, true) => b,
        (false, false) => {
            let (f, h) = (&maps[a - n], &maps[b - n]);
            let comp: Vec<usize> = f.iter().map(|&x| h[x]).collect();
            index[comp.as_slice()]
        }
    })?;
    let connection = ConnectionSet::new(fam.maps.iter().map(|m| index[m.as_slice()]))?;
    Ok(CayleyWitness {
        mode: WitnessMode::Embedding,
        table,
        connection,
        vertex_to_element: (0..n).collect(),
    })
}

/// Orientation of `g` with outdegree at most `p(g)` and no sinks: a sink
/// takes an extra arc back along one of its edges. Isolated vertices are
/// rejected.
pub fn sink_free_orientation(g: &SimpleGraph) -> Result<Digraph> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let k = invariants::pseudoarboricity(g);
    let mut d = invariants::orientation_with_outdegree(g, k)
        .map_err(|_| Error::Verification("orientation at the pseudoarboricity failed".into()))?;
    for v in 0..g.order() {
        if d.outdegree(v) == 0 {
            d.add_arc(v, g.neighbors(v)[0])?;
        }
    }
    Ok(d)
}

/// Witness with `|C| = p(g)` such that `g` is the underlying graph of
/// `Cay(M, C)` minus the component of the identity.
pub fn embed_undirected(g: &SimpleGraph) -> Result<CayleyWitness> {
    let d = sink_free_orientation(g)?;
    let k = invariants::pseudoarboricity(g);
    let fam = greedy_cover(&d, k)?;
    let w = embed_monoid(&d, &fam)?;
    let check = w.verify(&Graph::Undirected(g.clone()));
    if !check.all_ok() {
        return Err(Error::Verification(format!("{:?}", check.failures())));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_table;

    #[test]
    fn greedy_cover_examples() {
        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        let fam = greedy_cover(&c3, 1).unwrap();
        assert_eq!(fam.maps, vec![vec![1, 2, 0]]);

        let k2 = Digraph::from_arcs(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let fam = greedy_cover(&k2, 2).unwrap();
        assert_eq!(fam.maps.len(), 2);
        fam.check_against(&k2).unwrap();

        let fig2 = Digraph::from_arcs(3, [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]).unwrap();
        let fam = greedy_cover(&fig2, 2).unwrap();
        fam.check_against(&fig2).unwrap();

        assert_eq!(
            greedy_cover(&Digraph::from_arcs(2, [(0, 1)]).unwrap(), 1),
            Err(Error::Sink(1))
        );
        assert!(matches!(
            greedy_cover(&k2, 1),
            Err(Error::OutdegreeTooLarge { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let id = FunctionFamily {
            ground: 3,
            maps: vec![vec![0, 1, 2]],
        };
        assert_eq!(closure(&id, 10).unwrap().len(), 1);
        let rot = FunctionFamily {
            ground: 3,
            maps: vec![vec![1, 2, 0]],
        };
        assert_eq!(closure(&rot, 10).unwrap().len(), 3);
        let konst = FunctionFamily {
            ground: 2,
            maps: vec![vec![1, 1]],
        };
        assert_eq!(closure(&konst, 10).unwrap(), vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(closure(&rot, 2), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn embed_examples() {
        let lp = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        let fam = greedy_cover(&lp, 1).unwrap();
        let w = embed_monoid(&lp, &fam).unwrap();
        assert_eq!(w.table.order(), 2);
        assert!(w.verify(&Graph::Directed(lp)).all_ok());

        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        let w = embed_monoid(&c3, &greedy_cover(&c3, 1).unwrap()).unwrap();
        assert_eq!(w.table.order(), 6);
        assert!(validate_table(&w.table).is_ok());
        assert_eq!(w.identity_component(), vec![3, 4, 5]);
        assert!(w.verify(&Graph::Directed(c3)).all_ok());

        let bad = FunctionFamily {
            ground: 3,
            maps: vec![vec![2, 2, 0]],
        };
        assert!(matches!(
            embed_monoid(&Digraph::from_successors(&[1, 2, 0]).unwrap(), &bad),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn embed_undirected_examples() {
        let w = embed_undirected(&SimpleGraph::cycle(5)).unwrap();
        assert_eq!(w.connection.len(), 1);
        let w = embed_undirected(&SimpleGraph::complete(4)).unwrap();
        assert_eq!(w.connection.len(), 2);
        let w = embed_undirected(&SimpleGraph::path(2)).unwrap();
        assert_eq!(w.connection.len(), 1);
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(embed_undirected(&g), Err(Error::IsolatedVertex(2)));
        assert!(embed_undirected(&SimpleGraph::new(2)).is_err());
        // a star: the centre keeps one arc and the leaves point back
        let w = embed_undirected(&SimpleGraph::star(4)).unwrap();
        assert_eq!(w.connection.len(), 1);
    }
}
