//! Reading and writing graphs: whitespace edge lists and Matrix Market files.

use std::path::Path;

use thiserror::Error;

use crate::graph::Graph;

/// How vertex ids in an edge-list file map to internal ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Indexing {
    Zero,
    One,
    /// One-indexed iff the minimum id seen is 1 and 0 never appears.
    #[default]
    Auto,
}

/// Parse result: the graph plus counters for silently dropped input.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed entry {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: negative vertex id {text}")]
    NegativeId { line: usize, text: String },
    #[error("line {line}: vertex id 0 in one-indexed input")]
    ZeroInOneIndexed { line: usize },
    #[error("line {line}: vertex id {id} outside declared range 1..={bound}")]
    EntryOutOfBounds { line: usize, id: usize, bound: usize },
    #[error("unsupported matrix market format: {0}")]
    UnsupportedFormat(String),
    #[error("expected {expected} matrix entries, found {found}")]
    EntryCountMismatch { expected: usize, found: usize },
}

fn is_comment(line: &str) -> bool {
    matches!(line.bytes().next(), Some(b'#') | Some(b'%'))
}

/// Parses a whitespace-separated edge list, one `u v` pair per line.
///
/// Blank lines and lines starting with `#` or `%` are skipped; a comment of
/// the form `# nodes <n>` declares the vertex count, which otherwise defaults
/// to one past the largest id seen. The directive is written by
/// [`to_edge_list`] and marks the file as zero-indexed, so under
/// [`Indexing::Auto`] it disables the one-indexing heuristic. A third token
/// per line (a weight) is ignored. Self-loops and duplicate edges are dropped
/// and counted.
pub fn parse_edge_list(text: &str, indexing: Indexing) -> Result<ParsedGraph, ParseError> {
    let mut entries: Vec<(usize, usize, usize)> = Vec::new(); // (line, u, v)
    let mut declared_n: Option<usize> = None;
    let mut min_id = usize::MAX;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if is_comment(trimmed) {
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() == 3 && tokens[0] == "#" && tokens[1] == "nodes" {
                if let Ok(n) = tokens[2].parse::<usize>() {
                    declared_n = Some(n);
                }
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 && tokens.len() != 3 {
            return Err(ParseError::Malformed {
                line,
                text: trimmed.to_string(),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            if tok.starts_with('-') {
                return Err(ParseError::NegativeId {
                    line,
                    text: tok.to_string(),
                });
            }
            *slot = tok.parse().map_err(|_| ParseError::Malformed {
                line,
                text: tok.to_string(),
            })?;
        }
        min_id = min_id.min(ids[0]).min(ids[1]);
        entries.push((line, ids[0], ids[1]));
    }

    let one_indexed = match indexing {
        Indexing::Zero => false,
        Indexing::One => true,
        Indexing::Auto => declared_n.is_none() && min_id == 1,
    };
    if one_indexed {
        for &(line, u, v) in &entries {
            if u == 0 || v == 0 {
                return Err(ParseError::ZeroInOneIndexed { line });
            }
        }
    }
    let shift = usize::from(one_indexed);
    let max_id = entries
        .iter()
        .map(|&(_, u, v)| u.max(v) - shift)
        .max();
    let n = match (declared_n, max_id) {
        (Some(d), Some(m)) => d.max(m + 1),
        (Some(d), None) => d,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    let (graph, dropped) = Graph::from_edges_counted(
        n,
        entries.iter().map(|&(_, u, v)| (u - shift, v - shift)),
    );
    Ok(ParsedGraph {
        graph,
        self_loops_dropped: dropped.self_loops,
        duplicates_dropped: dropped.duplicates,
    })
}

/// Parses a Matrix Market file as an unweighted undirected graph.
///
/// Only `matrix coordinate <field> symmetric` is accepted; anything else
/// (dense `array` layout, `general` symmetry) is an unsupported format. The
/// vertex count is the declared row count, entry values are discarded, and
/// diagonal entries are dropped as self-loops.
pub fn parse_matrix_market(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::UnsupportedFormat("empty file".to_string()))?;
    let tokens: Vec<String> = header.split_whitespace().map(str::to_lowercase).collect();
    if tokens.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(ParseError::UnsupportedFormat(format!(
            "missing %%MatrixMarket header, got {header:?}"
        )));
    }
    let object = tokens.get(1).map(String::as_str).unwrap_or("");
    let format = tokens.get(2).map(String::as_str).unwrap_or("");
    let symmetry = tokens.last().map(String::as_str).unwrap_or("");
    if object != "matrix" {
        return Err(ParseError::UnsupportedFormat(format!("object {object:?}")));
    }
    if format != "coordinate" {
        return Err(ParseError::UnsupportedFormat(format!(
            "{format:?} layout (only coordinate is supported)"
        )));
    }
    if symmetry != "symmetric" {
        return Err(ParseError::UnsupportedFormat(format!(
            "{symmetry:?} symmetry (only symmetric is supported)"
        )));
    }

    let mut size: Option<(usize, usize, usize)> = None;
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if size.is_none() {
            if tokens.len() != 3 {
                return Err(ParseError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            }
            let mut dims = [0usize; 3];
            for (slot, tok) in dims.iter_mut().zip(&tokens) {
                *slot = tok.parse().map_err(|_| ParseError::Malformed {
                    line,
                    text: tok.to_string(),
                })?;
            }
            if dims[0] != dims[1] {
                return Err(ParseError::UnsupportedFormat(format!(
                    "non-square matrix {}x{}",
                    dims[0], dims[1]
                )));
            }
            size = Some((dims[0], dims[1], dims[2]));
            continue;
        }
        // entry line: two ids, then an optional value which is discarded
        if tokens.len() < 2 {
            return Err(ParseError::Malformed {
                line,
                text: trimmed.to_string(),
            });
        }
        let (rows, _, _) = size.unwrap();
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            if tok.starts_with('-') {
                return Err(ParseError::NegativeId {
                    line,
                    text: tok.to_string(),
                });
            }
            *slot = tok.parse().map_err(|_| ParseError::Malformed {
                line,
                text: tok.to_string(),
            })?;
        }
        for id in ids {
            if id == 0 || id > rows {
                return Err(ParseError::EntryOutOfBounds {
                    line,
                    id,
                    bound: rows,
                });
            }
        }
        entries.push((ids[0] - 1, ids[1] - 1));
    }
    let (rows, _, nnz) =
        size.ok_or_else(|| ParseError::UnsupportedFormat("missing size line".to_string()))?;
    if entries.len() != nnz {
        return Err(ParseError::EntryCountMismatch {
            expected: nnz,
            found: entries.len(),
        });
    }
    let (graph, dropped) = Graph::from_edges_counted(rows, entries);
    Ok(ParsedGraph {
        graph,
        self_loops_dropped: dropped.self_loops,
        duplicates_dropped: dropped.duplicates,
    })
}

/// Canonical zero-indexed edge-list serialization.
///
/// Starts with a `# nodes <n>` comment so isolated vertices survive a round
/// trip, then one sorted `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# nodes {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Input file formats the loader understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    EdgeList,
    MatrixMarket,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: ParseError,
    },
}

/// Reads a graph file, picking the parser by extension (`.mtx` is Matrix
/// Market, everything else an edge list) unless a format is forced.
pub fn load_graph(path: &Path, format: Option<FileFormat>) -> Result<ParsedGraph, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let format = format.unwrap_or_else(|| {
        match path.extension().and_then(|e| e.to_str()) {
            Some("mtx") => FileFormat::MatrixMarket,
            _ => FileFormat::EdgeList,
        }
    });
    let parsed = match format {
        FileFormat::EdgeList => parse_edge_list(&text, Indexing::Auto),
        FileFormat::MatrixMarket => parse_matrix_market(&text),
    };
    parsed.map_err(|source| LoadError::Parse {
        path: path.display().to_string(),
        source,
    })
}
