//! Edge-list and coloring text files.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment line, and an
//! optional first line `p <n> <m>` fixes the vertex and edge counts.
//! Without it, `n` is the largest index plus one.
//!
//! Coloring: one `u v c` triple per line, colors starting at 1, covering
//! every edge of the graph exactly once.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rainbow_core::verify::Color;
use rainbow_core::{EdgeColoring, Graph, GraphError, Vertex, VerifyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Coloring(#[from] VerifyError),
    #[error("{0}")]
    Usage(String),
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, InputError> {
    tok.parse().map_err(|_| InputError::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

fn arity(fields: &[&str], want: usize, line: usize) -> Result<(), InputError> {
    if fields.len() != want {
        return Err(InputError::Parse {
            line,
            msg: format!("expected {want} fields, found {}", fields.len()),
        });
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, (line, fields)) in data_lines(text).enumerate() {
        if fields[0] == "p" {
            if idx != 0 {
                return Err(InputError::Parse {
                    line,
                    msg: "the `p` line must come before any edge".into(),
                });
            }
            arity(&fields, 3, line)?;
            header = Some((number(fields[1], line)?, number(fields[2], line)?, line));
            continue;
        }
        arity(&fields, 2, line)?;
        edges.push((number(fields[0], line)?, number(fields[1], line)?));
    }
    let n = match header {
        Some((n, m, line)) => {
            if m != edges.len() {
                return Err(InputError::Parse {
                    line,
                    msg: format!("header announces {m} edges, file has {}", edges.len()),
                });
            }
            n
        }
        None => edges.iter().map(|&(u, w)| u.max(w) + 1).max().unwrap_or(0),
    };
    Ok(Graph::new(n, edges)?)
}

pub fn write_edge_list(g: &Graph, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for &(u, w) in g.edges() {
        let _ = writeln!(out, "{u} {w}");
    }
    out
}

pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring, InputError> {
    let mut triples: Vec<(Vertex, Vertex, Color)> = Vec::new();
    for (line, fields) in data_lines(text) {
        arity(&fields, 3, line)?;
        triples.push((
            number(fields[0], line)?,
            number(fields[1], line)?,
            number(fields[2], line)?,
        ));
    }
    Ok(EdgeColoring::from_triples(g, &triples)?)
}

pub fn write_coloring(g: &Graph, col: &EdgeColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# n={} m={} colors={}",
        g.n(),
        g.m(),
        col.colors_used()
    );
    for (u, w, c) in col.triples(g) {
        let _ = writeln!(out, "{u} {w} {c}");
    }
    out
}

pub fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &Path, contents: &str) -> Result<(), InputError> {
    fs::write(path, contents).map_err(|source| InputError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, InputError> {
    parse_edge_list(&read(path)?)
}
