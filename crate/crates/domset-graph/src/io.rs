//! Benchmark ingestion.
//!
//! Two on-disk formats are supported:
//! - edge lists (SNAP style): `#` or `%` comment lines, two whitespace
//!   separated non-negative integer ids per data line;
//! - METIS adjacency (DIMACS10 style): header `n m [fmt]`, then one line of
//!   1-based neighbor ids per vertex.
//!
//! Both loaders normalize the input to a simple undirected [`Graph`]:
//! directed files are symmetrized, duplicate edges collapse, and self-loops
//! are dropped. Edge-list ids are remapped to a dense `[0, n)` range in
//! first-appearance order; the remap table is returned alongside the graph.

use std::collections::HashMap;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, Node};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("input describes an empty graph")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A loaded graph together with its provenance metadata.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Dense id -> id used in the source file.
    pub original_ids: Vec<u64>,
    /// Non-fatal findings, e.g. a METIS header whose declared edge count
    /// disagrees with the parsed one.
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Parse {
        line,
        message: message.into(),
    }
}

fn is_comment(line: &str) -> bool {
    matches!(line.trim_start().chars().next(), Some('#') | Some('%'))
}

/// Loads a SNAP-style edge list.
///
/// Ids are remapped densely in first-appearance order; a vertex appearing
/// only on dropped lines (self-loops) is still kept.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph, LoadError> {
    let mut remap: HashMap<u64, Node> = HashMap::new();
    let mut original_ids: Vec<u64> = Vec::new();
    let mut edges: Vec<(Node, Node)> = Vec::new();
    let mut intern = |id: u64, original_ids: &mut Vec<u64>| -> Node {
        *remap.entry(id).or_insert_with(|| {
            original_ids.push(id);
            (original_ids.len() - 1) as Node
        })
    };
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() || is_comment(&line) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(parse_err(lineno, "expected two vertex ids"));
        };
        if tokens.next().is_some() {
            return Err(parse_err(lineno, "expected exactly two vertex ids"));
        }
        let a: u64 = a
            .parse()
            .map_err(|_| parse_err(lineno, format!("malformed vertex id {a:?}")))?;
        let b: u64 = b
            .parse()
            .map_err(|_| parse_err(lineno, format!("malformed vertex id {b:?}")))?;
        let u = intern(a, &mut original_ids);
        let v = intern(b, &mut original_ids);
        if u != v {
            edges.push((u, v));
        }
    }
    if original_ids.is_empty() {
        return Err(LoadError::Empty);
    }
    let graph = Graph::from_edges(original_ids.len(), edges)
        .expect("interned ids are dense by construction");
    Ok(LoadedGraph {
        graph,
        original_ids,
        warnings: Vec::new(),
    })
}

/// Loads a METIS adjacency file (unweighted variant only).
///
/// A mismatch between the declared and parsed edge count is recorded as a
/// warning, not an error: published DIMACS10 files contain discrepancies
/// once the adjacency is symmetrized and deduplicated.
pub fn load_metis<R: BufRead>(reader: R) -> Result<LoadedGraph, LoadError> {
    let mut lines = reader.lines().enumerate();
    let mut next_data = || -> Result<Option<(usize, String)>, LoadError> {
        for (idx, line) in lines.by_ref() {
            let line = line?;
            if is_comment(&line) {
                continue;
            }
            return Ok(Some((idx + 1, line)));
        }
        Ok(None)
    };

    let Some((header_line, header)) = next_data()? else {
        return Err(LoadError::Empty);
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() < 2 || fields.len() > 3 {
        return Err(parse_err(header_line, "header must be \"n m [fmt]\""));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(header_line, "malformed vertex count"))?;
    let declared_m: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(header_line, "malformed edge count"))?;
    if let Some(fmt) = fields.get(2) {
        let code: u32 = fmt
            .parse()
            .map_err(|_| parse_err(header_line, "malformed fmt field"))?;
        if code != 0 {
            return Err(parse_err(
                header_line,
                format!("weighted METIS format {code} is not supported"),
            ));
        }
    }
    if n == 0 {
        return Err(LoadError::Empty);
    }

    let mut edges: Vec<(Node, Node)> = Vec::new();
    for vertex in 0..n {
        let Some((lineno, line)) = next_data()? else {
            return Err(parse_err(
                0,
                format!("file truncated: expected {n} adjacency lines, got {vertex}"),
            ));
        };
        for token in line.split_whitespace() {
            let id: usize = token
                .parse()
                .map_err(|_| parse_err(lineno, format!("malformed neighbor id {token:?}")))?;
            if id < 1 || id > n {
                return Err(parse_err(
                    lineno,
                    format!("neighbor id {id} outside [1, {n}]"),
                ));
            }
            if id - 1 != vertex {
                edges.push((vertex as Node, (id - 1) as Node));
            }
        }
    }
    while let Some((lineno, line)) = next_data()? {
        if !line.trim().is_empty() {
            return Err(parse_err(lineno, "unexpected data after adjacency lines"));
        }
    }

    let graph = Graph::from_edges(n, edges).expect("ids validated against header");
    let mut warnings = Vec::new();
    if graph.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, parsed {} after normalization",
            graph.edge_count()
        ));
    }
    Ok(LoadedGraph {
        graph,
        original_ids: (1..=n as u64).collect(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basic() {
        let loaded = load_edge_list("0 1\n1 2".as_bytes()).unwrap();
        assert_eq!(loaded.graph.vertex_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert!(loaded.graph.has_edge(0, 1));
        assert!(loaded.graph.has_edge(1, 2));
    }

    #[test]
    fn edge_list_remaps_and_drops_loops() {
        let loaded = load_edge_list("5 5\n5 7".as_bytes()).unwrap();
        assert_eq!(loaded.graph.vertex_count(), 2);
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.original_ids, vec![5, 7]);
    }

    #[test]
    fn edge_list_comments_dedup_and_symmetry() {
        let text = "# comment\n% more\n10 20\n20 10\n10 20\n";
        let loaded = load_edge_list(text.as_bytes()).unwrap();
        assert_eq!(loaded.graph.edge_count(), 1);
        assert!(loaded.graph.is_well_formed());
    }

    #[test]
    fn edge_list_errors() {
        let err = load_edge_list("0 1\nx 2".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 2, .. }));
        let err = load_edge_list("0 1 2".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 1, .. }));
        let err = load_edge_list("# nothing\n".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Empty));
    }

    #[test]
    fn metis_path_graph() {
        let loaded = load_metis("3 2\n2\n1 3\n2\n".as_bytes()).unwrap();
        assert_eq!(loaded.graph.vertex_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert!(loaded.graph.has_edge(0, 1));
        assert!(loaded.graph.has_edge(1, 2));
        assert!(loaded.warnings.is_empty());
    }

    #[test]
    fn metis_single_edge() {
        let loaded = load_metis("2 1\n2\n1\n".as_bytes()).unwrap();
        assert_eq!(loaded.graph.edge_count(), 1);
    }

    #[test]
    fn metis_count_mismatch_warns() {
        let loaded = load_metis("3 5\n2\n1 3\n2\n".as_bytes()).unwrap();
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.warnings.len(), 1);
        assert!(loaded.warnings[0].contains("declares 5"));
    }

    #[test]
    fn metis_errors() {
        let err = load_metis("3 2\n2\n1 4\n2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 3, .. }));
        let err = load_metis("3 2\n2\n1 3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Parse { .. }));
        let err = load_metis("2 1 1\n2\n1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 1, .. }));
    }

    #[test]
    fn metis_isolated_vertex_line() {
        let loaded = load_metis("3 1\n2\n1\n\n".as_bytes()).unwrap();
        assert_eq!(loaded.graph.degree(2), 0);
        assert!(loaded.warnings.is_empty());
    }
}
