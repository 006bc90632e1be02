//! Plain-text edge lists:
//!
//! ```text
//! # a triangle
//! n 3
//! 0 1
//! 1 2
//! 2 0
//! ```

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertex_count = None;
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (vertex_count, fields.as_slice()) {
            (None, ["n", count]) => {
                vertex_count = Some(
                    count
                        .parse::<usize>()
                        .map_err(|_| err("bad vertex count"))?,
                );
            }
            (None, _) => return Err(err("expected `n <vertex_count>` header")),
            (Some(_), [u, v]) => {
                let u = u.parse::<usize>().map_err(|_| err("bad vertex index"))?;
                let v = v.parse::<usize>().map_err(|_| err("bad vertex index"))?;
                pairs.push((u, v));
            }
            (Some(_), _) => return Err(err("expected `<u> <v>`")),
        }
    }
    let n = vertex_count.ok_or_else(|| Error::Parse("missing `n <vertex_count>` header".into()))?;
    Graph::from_edge_list(n, &pairs)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# tri\n\nn 3\n0 1 # first\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Family::Cycle(3).build().unwrap());
    }

    #[test]
    fn round_trip() {
        let p = Family::Petersen.build().unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&p)).unwrap(), p);
    }

    #[test]
    fn errors() {
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("n 2\n0 2\n").is_err());
        assert!(parse_edge_list("n 2\n0 0\n").is_err());
        assert!(parse_edge_list("n 2\n0 1 2\n").is_err());
        assert!(parse_edge_list("n x\n").is_err());
    }
}
