//! Cayley witnesses and their mechanical verification.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    cayley_digraph_unchecked, generated_closure, underlying_graph, validate_table, ConnectionSet,
    MulTable, Validation,
};
use crate::digraph::weak_components;
use crate::error::Error;
use crate::graph::{Digraph, Graph, SimpleGraph};

/// What a witness claims about its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessMode {
    /// `G = Cay(M, C)` for a monoid `M`.
    MonoidDigraph,
    /// `G` is the underlying simple graph of `Cay(M, C)`.
    MonoidGraph,
    /// `G = Cay(S, C)` for a semigroup `S`.
    SemigroupDigraph,
    /// Monoid graph with `<C> = M`.
    GeneratedMonoidTree,
    /// `G` is `Cay(M, C)` (or its underlying graph) minus the component of the identity.
    Embedding,
}

impl WitnessMode {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessMode::MonoidDigraph => "monoid-digraph",
            WitnessMode::MonoidGraph => "monoid-graph",
            WitnessMode::SemigroupDigraph => "semigroup-digraph",
            WitnessMode::GeneratedMonoidTree => "generated-monoid-tree",
            WitnessMode::Embedding => "embedding",
        }
    }
}

impl fmt::Display for WitnessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WitnessMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "monoid-digraph" => WitnessMode::MonoidDigraph,
            "monoid-graph" => WitnessMode::MonoidGraph,
            "semigroup-digraph" => WitnessMode::SemigroupDigraph,
            "generated-monoid-tree" => WitnessMode::GeneratedMonoidTree,
            "embedding" => WitnessMode::Embedding,
            other => {
                return Err(Error::InvalidParameters(format!(
                    "unknown witness mode `{other}`"
                )))
            }
        })
    }
}

/// A multiplication table, a connection set and a vertex-to-element map
/// certifying a Cayley representation of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyWitness {
    pub mode: WitnessMode,
    pub table: MulTable,
    pub connection: ConnectionSet,
    /// `vertex_to_element[v]` is the element representing vertex `v`.
    pub vertex_to_element: Vec<usize>,
}

/// Named boolean checks re-derived from a witness and its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<(&'static str, bool)>,
}

impl Verification {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, b)| b)
    }
}

impl CayleyWitness {
    /// Witness on the identity vertex labelling.
    pub fn identity_labelled(
        mode: WitnessMode,
        table: MulTable,
        connection: ConnectionSet,
    ) -> Self {
        let n = table.order();
        CayleyWitness {
            mode,
            table,
            connection,
            vertex_to_element: (0..n).collect(),
        }
    }

    /// Elements of the component of the identity in `Cay(M, C)` (embedding mode).
    pub fn identity_component(&self) -> Vec<usize> {
        let Some(e) = self.table.identity() else {
            return Vec::new();
        };
        let cay = cayley_digraph_unchecked(&self.table, self.connection.elements());
        let comps = weak_components(&cay);
        comps.members(comps.id[e])
    }

    pub fn verify(&self, graph: &Graph) -> Verification {
        let t = &self.table;
        let n = t.order();
        let mut checks = Vec::new();

        let validation = validate_table(t);
        checks.push((
            "associative",
            !matches!(validation, Validation::NotAssociative { .. }),
        ));
        let wants_identity = self.mode != WitnessMode::SemigroupDigraph;
        if wants_identity {
            checks.push((
                "identity",
                t.identity().is_some() && validation == Validation::Ok,
            ));
        }
        let in_range = self.connection.elements().iter().all(|&c| c < n);
        checks.push(("connection_in_range", in_range));

        let mut inverse = vec![usize::MAX; n];
        let mut injective = self.vertex_to_element.len() == graph.order();
        for (v, &x) in self.vertex_to_element.iter().enumerate() {
            if x >= n || inverse[x] != usize::MAX {
                injective = false;
                break;
            }
            inverse[x] = v;
        }
        let bijective = injective && (self.mode == WitnessMode::Embedding || graph.order() == n);
        checks.push(("bijection", bijective));
        if !(bijective && in_range) {
            checks.push(("graph_equal", false));
            return Verification { checks };
        }

        let cay = cayley_digraph_unchecked(t, self.connection.elements());
        let relabel = |d: &Digraph, keep: &[usize]| -> Digraph {
            let arcs = d
                .arcs()
                .filter(|&(x, y)| inverse[x] != usize::MAX && inverse[y] != usize::MAX)
                .map(|(x, y)| (inverse[x], inverse[y]));
            Digraph::from_arcs(keep.len(), arcs).expect("in range")
        };
        let directed_equal = |target: &Digraph| relabel(&cay, &self.vertex_to_element) == *target;
        let undirected_equal = |target: &SimpleGraph| {
            underlying_graph(&relabel(&cay, &self.vertex_to_element)) == *target
        };

        match self.mode {
            WitnessMode::MonoidDigraph | WitnessMode::SemigroupDigraph => {
                let ok = matches!(graph, Graph::Directed(g) if directed_equal(g));
                checks.push(("graph_equal", ok));
            }
            WitnessMode::MonoidGraph => {
                let ok = matches!(graph, Graph::Undirected(g) if undirected_equal(g));
                checks.push(("graph_equal", ok));
            }
            WitnessMode::GeneratedMonoidTree => {
                let ok = matches!(graph, Graph::Undirected(g) if undirected_equal(g));
                checks.push(("graph_equal", ok));
                let gen = generated_closure(t, self.connection.elements());
                checks.push(("generated", gen.len() == n));
            }
            WitnessMode::Embedding => {
                // the identity component is removed; what is left must be exactly the image
                let removed = self.identity_component();
                let mut rest = vec![true; n];
                for &x in &removed {
                    rest[x] = false;
                }
                let image_ok = (0..n).all(|x| rest[x] == (inverse[x] != usize::MAX));
                checks.push(("component_partition", image_ok));
                let ok = image_ok
                    && match graph {
                        Graph::Directed(g) => directed_equal(g),
                        Graph::Undirected(g) => undirected_equal(g),
                    };
                checks.push(("graph_equal", ok));
            }
        }
        Verification { checks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_witnesses() {
        let t = MulTable::cyclic_group(2);
        let w = CayleyWitness::identity_labelled(
            WitnessMode::MonoidDigraph,
            t.clone(),
            ConnectionSet::new([0, 1]).unwrap(),
        );
        let k2 = Digraph::from_arcs(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(w.verify(&Graph::Directed(k2.clone())).all_ok());
        let loops = Digraph::from_arcs(2, [(0, 0), (1, 1)]).unwrap();
        let v = w.verify(&Graph::Directed(loops));
        assert_eq!(v.failures(), vec!["graph_equal"]);

        let w = CayleyWitness::identity_labelled(
            WitnessMode::MonoidGraph,
            t,
            ConnectionSet::new([1]).unwrap(),
        );
        assert!(w.verify(&Graph::Undirected(SimpleGraph::path(2))).all_ok());
    }

    #[test]
    fn relabelled_witness() {
        // Z3 with C = {1}, presented on the cycle 0 -> 2 -> 1 -> 0
        let t = MulTable::cyclic_group(3);
        let g = Digraph::from_successors(&[2, 0, 1]).unwrap();
        let w = CayleyWitness {
            mode: WitnessMode::MonoidDigraph,
            table: t,
            connection: ConnectionSet::new([1]).unwrap(),
            vertex_to_element: vec![0, 2, 1],
        };
        assert!(w.verify(&Graph::Directed(g)).all_ok());
    }
}
