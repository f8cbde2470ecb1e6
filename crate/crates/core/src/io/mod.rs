//! Reading and writing graphs: graph6 (bit-exact), DIMACS and edge lists.

mod graph6;
mod stream;
mod text;

use std::fmt;
use std::str::FromStr;

pub use graph6::{parse_graph6, write_graph6, HEADER as GRAPH6_HEADER};
pub use stream::{read_all, GraphStream};
pub use text::{parse_dimacs, parse_dimacs_or_edgelist, parse_edge_list};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl FromStr for Format {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(crate::Error::MalformedInput(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edgelist",
        })
    }
}

impl Format {
    /// Guesses a format from a file extension, defaulting to graph6.
    pub fn from_extension(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => Format::Dimacs,
            Some("edges" | "txt" | "el") => Format::EdgeList,
            _ => Format::Graph6,
        }
    }
}
