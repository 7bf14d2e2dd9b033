//! Graph arguments given on the command line: a graph6 string, or a file
//! holding graph6 or the `n m` edge-list format.

use std::path::Path;

use lptlab_core::graph6::parse_graph6;
use lptlab_core::Graph;

use crate::Result;

pub fn read_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_graph_text(&text);
    }
    Ok(parse_graph6(arg.trim())?)
}

/// Edge-list text if its first meaningful line is numeric, graph6 otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let numeric = !first.is_empty() && first.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit()));
    if numeric {
        Ok(Graph::parse_edge_list(text)?)
    } else {
        let body = first.strip_prefix(">>graph6<<").unwrap_or(first);
        Ok(parse_graph6(body)?)
    }
}
