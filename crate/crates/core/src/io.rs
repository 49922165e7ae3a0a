//! Graph interchange formats.
//!
//! Edge list:
//!
//! ```text
//! n m directed:{0|1}
//! u v
//! ...            (m lines)
//! ```
//!
//! Bracelet file (TOML), which keeps the part structure:
//!
//! ```text
//! format = "bracelet"
//! version = 1
//! directed = false
//! part_sizes = [2, 5, 2, 2]
//! ```

use serde::{Deserialize, Serialize};

use crate::bracelet::{build_any_bracelet, AnyBracelet, BraceletSpec};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, AnyGraph, Digraph, Graph};

pub const BRACELET_FORMAT_VERSION: u32 = 1;

pub fn write_edge_list<G: Adjacency + ?Sized>(g: &G) -> String {
    let edges = g.edges();
    let mut out = format!("{} {} directed:{}\n", g.vertex_count(), edges.len(), u8::from(g.is_directed()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<AnyGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let bad_header = || Error::Parse { line: hline, msg: format!("expected `n m directed:{{0|1}}`, got `{header}`") };
    if fields.len() != 3 {
        return Err(bad_header());
    }
    let n: usize = fields[0].parse().map_err(|_| bad_header())?;
    let m: usize = fields[1].parse().map_err(|_| bad_header())?;
    let directed = match fields[2] {
        "directed:0" => false,
        "directed:1" => true,
        _ => return Err(bad_header()),
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse { line, msg: format!("expected `u v`, got `{l}`") }),
        }
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header promises {m} edges, found {}", edges.len()) });
    }
    Ok(if directed {
        AnyGraph::Directed(Digraph::new(n, edges)?)
    } else {
        AnyGraph::Undirected(Graph::new(n, edges)?)
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct BraceletFile {
    format: String,
    version: u32,
    directed: bool,
    part_sizes: Vec<usize>,
}

pub fn write_bracelet(spec: &BraceletSpec, directed: bool) -> String {
    let file = BraceletFile {
        format: "bracelet".into(),
        version: BRACELET_FORMAT_VERSION,
        directed,
        part_sizes: spec.part_sizes().to_vec(),
    };
    toml::to_string(&file).expect("bracelet file serialises")
}

pub fn parse_bracelet(text: &str) -> Result<AnyBracelet> {
    let file: BraceletFile =
        toml::from_str(text).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    if file.format != "bracelet" {
        return Err(Error::Parse { line: 0, msg: format!("unknown format `{}`", file.format) });
    }
    if file.version != BRACELET_FORMAT_VERSION {
        return Err(Error::Parse { line: 0, msg: format!("unsupported version {}", file.version) });
    }
    let spec = BraceletSpec::new(file.part_sizes)?;
    Ok(build_any_bracelet(&spec, file.directed))
}

/// Reads either format, telling them apart by the first non-blank line.
pub fn parse_any(text: &str) -> Result<AnyGraph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.contains('=')) {
        Ok(match parse_bracelet(text)? {
            AnyBracelet::Undirected(b) => AnyGraph::Undirected(b.into_graph()),
            AnyBracelet::Directed(b) => AnyGraph::Directed(b.into_graph()),
        })
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracelet::build_bracelet;
    use proptest::prelude::*;

    #[test]
    fn edge_list_header() {
        let g = Graph::cycle(4).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("4 4 directed:0\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), AnyGraph::Undirected(g));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 1 undirected\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 2 directed:0\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1 directed:0\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1 directed:0\n0 0\n"), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn bracelet_file_keeps_parts() {
        let spec = BraceletSpec::new(vec![2, 5, 2, 2]).unwrap();
        let text = write_bracelet(&spec, false);
        match parse_bracelet(&text).unwrap() {
            AnyBracelet::Undirected(b) => {
                assert_eq!(b.spec(), &spec);
                assert_eq!(b, build_bracelet(&spec));
            }
            AnyBracelet::Directed(_) => panic!("expected undirected bracelet"),
        }
        assert!(parse_bracelet("format = \"bracelet\"\nversion = 9\ndirected = false\npart_sizes = [1,1,1]\n").is_err());
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 2usize..9, directed: bool, bits in proptest::collection::vec(any::<bool>(), 64)) {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in 0..n {
                    if u == v || (!directed && v < u) { continue; }
                    if bits[idx % bits.len()] { edges.push((u, v)); }
                    idx += 1;
                }
            }
            let g: AnyGraph = if directed {
                Digraph::new(n, edges).unwrap().into()
            } else {
                Graph::new(n, edges).unwrap().into()
            };
            let text = write_edge_list(g.as_dyn());
            prop_assert_eq!(parse_any(&text).unwrap(), g);
        }

        #[test]
        fn bracelet_round_trip(sizes in proptest::collection::vec(1usize..5, 3..8), directed: bool) {
            let spec = BraceletSpec::new(sizes).unwrap();
            let parsed = parse_bracelet(&write_bracelet(&spec, directed)).unwrap();
            prop_assert_eq!(parsed.spec(), &spec);
            prop_assert_eq!(parsed.is_directed(), directed);
        }
    }
}
