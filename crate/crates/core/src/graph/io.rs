//! Text edge-list format: first line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`, LF line endings.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::parse("edge list", "missing header line"))?;
    let mut it = header.split_whitespace();
    let n: usize = next_num(&mut it, "n")?;
    let m: usize = next_num(&mut it, "m")?;
    let mut g = Graph::new(n);
    let mut count = 0usize;
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = next_num(&mut it, "u")?;
        let v: usize = next_num(&mut it, "v")?;
        if u >= v {
            return Err(Error::parse(
                "edge list",
                format!("edge {u} {v} must satisfy u < v"),
            ));
        }
        g.add_edge(u, v)
            .map_err(|e| Error::parse("edge list", e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(
            "edge list",
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_edge_list(&text)
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_edge_list(g)).map_err(|e| Error::io(path.display().to_string(), e))
}

fn next_num<'a>(it: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<usize> {
    it.next()
        .ok_or_else(|| Error::parse("edge list", format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::parse("edge list", format!("bad {what}: {e}")))
}
