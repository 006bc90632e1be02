//! Turning command-line arguments into graphs and subgraph selections.

use std::path::Path;

use magnitude_core::dsl::parse_expr;
use magnitude_core::graph::parse_edge_list;
use magnitude_core::{Graph, SubgraphSelection};

use crate::error::{CliError, CliResult};

/// An existing file is read as an edge list; anything else is parsed as a
/// graph expression.
pub fn load_graph(arg: &str) -> CliResult<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        return parse_edge_list(&text).map_err(|e| CliError::Usage(format!("{arg}: {e}")));
    }
    Ok(parse_expr(arg)?.build()?)
}

fn parse_index(s: &str) -> CliResult<usize> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("expected a vertex index, found {s:?}")))
}

/// Parses `"0,1,2"` (the induced subgraph) or `"0,1,2;0-1,1-2"` (vertices
/// and an explicit edge list, possibly empty).
pub fn parse_selection<'g>(host: &'g Graph, spec: &str) -> CliResult<SubgraphSelection<'g>> {
    let (vpart, epart) = match spec.split_once(';') {
        Some((v, e)) => (v, Some(e)),
        None => (spec, None),
    };
    let vertices = vpart
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_index)
        .collect::<CliResult<Vec<_>>>()?;
    let selection = match epart {
        None => SubgraphSelection::induced(host, &vertices),
        Some(e) => {
            let edges = e
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|pair| {
                    let (u, v) = pair.split_once('-').ok_or_else(|| {
                        CliError::Usage(format!("expected an edge u-v, found {pair:?}"))
                    })?;
                    Ok((parse_index(u)?, parse_index(v)?))
                })
                .collect::<CliResult<Vec<_>>>()?;
            SubgraphSelection::new(host, &vertices, &edges)
        }
    };
    Ok(selection?)
}
