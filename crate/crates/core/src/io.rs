//! Edge-list ingest and plain-text emission.
//!
//! The wire format is one link per line, two whitespace-separated
//! non-negative integers. Blank lines and lines starting with `#` are
//! skipped. Self-loops are dropped (their endpoint still becomes a node)
//! and repeated links, in either order, collapse to one; both events are
//! counted so noisy registry dumps can be audited after the fact.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::Error;
use crate::graph::{Graph, GraphBuilder};

/// Provenance and cleanup accounting for one parsed edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    /// Where the text came from; `None` when parsed from memory.
    pub source_path: Option<PathBuf>,
    /// Links surviving cleanup, equal to the graph's edge count.
    pub parsed_edges: usize,
    pub dropped_self_loops: usize,
    pub collapsed_duplicates: usize,
}

/// Parses an edge list from text. Malformed lines fail the whole parse with
/// a 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<(Graph, EdgeListDocument), Error> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (parse_label(a, i + 1)?, parse_label(b, i + 1)?),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected two fields, got {:?}", line),
                })
            }
        };
        b.add_edge(u, v);
    }
    let doc = EdgeListDocument {
        source_path: None,
        parsed_edges: 0,
        dropped_self_loops: b.dropped_self_loops(),
        collapsed_duplicates: b.collapsed_duplicates(),
    };
    let g = b.build();
    let doc = EdgeListDocument {
        parsed_edges: g.edge_count(),
        ..doc
    };
    Ok((g, doc))
}

fn parse_label(field: &str, line: usize) -> Result<u32, Error> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid node id {:?}", field),
    })
}

/// Reads and parses an edge-list file, recording the path in the document.
pub fn read_edge_list_file<P: AsRef<Path>>(path: P) -> Result<(Graph, EdgeListDocument), Error> {
    let text = fs::read_to_string(&path)?;
    let (g, doc) = parse_edge_list(&text)?;
    Ok((
        g,
        EdgeListDocument {
            source_path: Some(path.as_ref().to_path_buf()),
            ..doc
        },
    ))
}

/// Canonical text form: one `u v` line per link with `u < v`, lines sorted.
/// Parsing the output reproduces the graph exactly.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

pub fn write_edge_list_file<P: AsRef<Path>>(g: &Graph, path: P) -> Result<(), Error> {
    fs::write(path, write_edge_list(g))?;
    Ok(())
}

/// Writes a CSV table with a trailing newline on the last row. Fields
/// containing a comma, quote, or newline are quoted with doubled inner
/// quotes; everything this crate emits is plain numbers, but callers can
/// pass arbitrary strings.
pub fn write_curve_csv<W: Write>(
    mut w: W,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), Error> {
    let emit = |w: &mut W, fields: &mut dyn Iterator<Item = &str>| -> Result<(), Error> {
        let line = fields.map(csv_field).collect::<Vec<_>>().join(",");
        writeln!(w, "{}", line)?;
        Ok(())
    };
    emit(&mut w, &mut header.iter().copied())?;
    for row in rows {
        emit(&mut w, &mut row.iter().map(String::as_str))?;
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
