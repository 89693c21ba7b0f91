//! Witness records: a line-oriented, sectioned text file holding a graph, a
//! witness for it and the verification transcript.
//!
//! ```text
//! [mode]
//! monoid-graph
//! [graph]
//! 2 undirected
//! 0 1
//! [table]
//! 2 0
//! 0 1
//! 1 0
//! [connection]
//! 1
//! [bijection]
//! 0 1
//! [verification]
//! associative true
//! ...
//! ```
//!
//! Embedding records add a `[components]` section listing the elements of
//! the removed component of the identity.

use std::fmt;

use crate::algebra::{ConnectionSet, MulTable};
use crate::error::{Error, Result};
use crate::graph::{parse_field, Graph};
use crate::witness::{CayleyWitness, Verification, WitnessMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub graph: Graph,
    pub witness: CayleyWitness,
    /// The transcript as written; re-derived by [`WitnessRecord::verify`].
    pub transcript: Vec<(String, bool)>,
}

impl WitnessRecord {
    /// Builds a record, running the verification now.
    pub fn new(graph: Graph, witness: CayleyWitness) -> Self {
        let transcript = witness
            .verify(&graph)
            .checks
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        WitnessRecord {
            graph,
            witness,
            transcript,
        }
    }

    /// Re-derives every check from the graph and witness.
    pub fn verify(&self) -> Verification {
        self.witness.verify(&self.graph)
    }

    /// Whether the stored transcript matches the re-derived one.
    pub fn transcript_matches(&self, v: &Verification) -> bool {
        self.transcript.len() == v.checks.len()
            && self
                .transcript
                .iter()
                .zip(&v.checks)
                .all(|((k, b), (k2, b2))| k == k2 && b == b2)
    }

    pub fn parse(text: &str) -> Result<WitnessRecord> {
        let sections = split_sections(text)?;
        let get = |name: &str| -> Result<&Section> {
            sections
                .iter()
                .find(|s| s.name == name)
                .ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("missing section [{name}]"),
                })
        };
        let mode_s = get("mode")?;
        let mode: WitnessMode = mode_s
            .text()
            .trim()
            .parse()
            .map_err(|e: Error| mode_s.error(1, e.to_string()))?;
        let graph_s = get("graph")?;
        let graph = Graph::parse(&graph_s.text()).map_err(|e| graph_s.shift(e))?;
        let table_s = get("table")?;
        let table = MulTable::parse(&table_s.text()).map_err(|e| table_s.shift(e))?;
        let conn_s = get("connection")?;
        let connection = ConnectionSet::new(conn_s.numbers("connection element")?)
            .map_err(|e| conn_s.error(1, e.to_string()))?;
        let bij_s = get("bijection")?;
        let vertex_to_element = bij_s.numbers("element")?;
        let witness = CayleyWitness {
            mode,
            table,
            connection,
            vertex_to_element,
        };
        if mode == WitnessMode::Embedding {
            let comp_s = get("components")?;
            let listed = comp_s.numbers("element")?;
            if listed != witness.identity_component() {
                return Err(comp_s.error(
                    1,
                    "listed component differs from the component of the identity".into(),
                ));
            }
        }
        let mut transcript = Vec::new();
        if let Some(ver) = sections.iter().find(|s| s.name == "verification") {
            for (i, line) in ver.lines.iter().enumerate() {
                let mut parts = line.split_whitespace();
                let Some(key) = parts.next() else { continue };
                let value: bool = parse_field(parts.next(), ver.start + i + 1, "boolean")?;
                transcript.push((key.to_string(), value));
            }
        }
        Ok(WitnessRecord {
            graph,
            witness,
            transcript,
        })
    }
}

impl fmt::Display for WitnessRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "[mode]\n{}", w.mode)?;
        write!(f, "[graph]\n{}", self.graph)?;
        write!(f, "[table]\n{}", w.table)?;
        writeln!(f, "[connection]\n{}", join(w.connection.elements()))?;
        writeln!(f, "[bijection]\n{}", join(&w.vertex_to_element))?;
        if w.mode == WitnessMode::Embedding {
            writeln!(f, "[components]\n{}", join(&w.identity_component()))?;
        }
        writeln!(f, "[verification]")?;
        for (k, v) in &self.transcript {
            writeln!(f, "{k} {v}")?;
        }
        Ok(())
    }
}

struct Section {
    name: String,
    /// Line number of the header.
    start: usize,
    lines: Vec<String>,
}

impl Section {
    fn text(&self) -> String {
        self.lines.iter().map(|l| format!("{l}\n")).collect()
    }

    fn error(&self, offset: usize, message: String) -> Error {
        Error::Parse {
            line: self.start + offset,
            message: format!("[{}] {message}", self.name),
        }
    }

    fn shift(&self, e: Error) -> Error {
        match e {
            Error::Parse { line, message } => self.error(line, message),
            other => self.error(1, other.to_string()),
        }
    }

    fn numbers(&self, what: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, line) in self.lines.iter().enumerate() {
            for tok in line.split_whitespace() {
                out.push(parse_field(Some(tok), self.start + i + 1, what)?);
            }
        }
        Ok(out)
    }
}

/// Splits into `[name]` sections; each body keeps its lines verbatim so that
/// line numbers stay aligned with the file.
fn split_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if sections.iter().any(|s| s.name == name) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("duplicate section [{name}]"),
                });
            }
            sections.push(Section {
                name: name.to_string(),
                start: i + 1,
                lines: Vec::new(),
            });
        } else if let Some(s) = sections.last_mut() {
            s.lines.push(line.to_string());
        } else if !line.is_empty() && !line.starts_with('#') {
            return Err(Error::Parse {
                line: i + 1,
                message: "content before the first section".into(),
            });
        }
    }
    Ok(sections)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{embed_monoid, greedy_cover};
    use crate::graph::{Digraph, SimpleGraph};

    #[test]
    fn round_trip() {
        let t = MulTable::cyclic_group(2);
        let w = CayleyWitness::identity_labelled(
            WitnessMode::MonoidGraph,
            t,
            ConnectionSet::new([1]).unwrap(),
        );
        let rec = WitnessRecord::new(Graph::Undirected(SimpleGraph::path(2)), w);
        let text = rec.to_string();
        let back = WitnessRecord::parse(&text).unwrap();
        assert_eq!(back, rec);
        let v = back.verify();
        assert!(v.all_ok());
        assert!(back.transcript_matches(&v));
    }

    #[test]
    fn embedding_round_trip() {
        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        let w = embed_monoid(&c3, &greedy_cover(&c3, 1).unwrap()).unwrap();
        let rec = WitnessRecord::new(Graph::Directed(c3), w);
        let text = rec.to_string();
        assert!(text.contains("[components]\n3 4 5\n"));
        assert_eq!(WitnessRecord::parse(&text).unwrap(), rec);
    }

    #[test]
    fn errors_carry_file_lines() {
        let text = "[mode]\nmonoid-graph\n[graph]\n2 undirected\n0 x\n";
        match WitnessRecord::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            WitnessRecord::parse("[mode]\nmonoid-graph\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn tampered_connection_fails() {
        let t = MulTable::cyclic_group(2);
        let w = CayleyWitness::identity_labelled(
            WitnessMode::MonoidGraph,
            t,
            ConnectionSet::new([1]).unwrap(),
        );
        let rec = WitnessRecord::new(Graph::Undirected(SimpleGraph::path(2)), w);
        let text = rec
            .to_string()
            .replace("[connection]\n1\n", "[connection]\n0\n");
        let back = WitnessRecord::parse(&text).unwrap();
        let v = back.verify();
        assert!(!v.all_ok());
        assert!(!back.transcript_matches(&v));
    }
}
