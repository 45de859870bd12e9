//! Matrix files: the plain `.trop` format and the structured JSON format.
//!
//! Plain text starts with a `m n` header line followed by `m` rows of `n`
//! scalar tokens. Blank lines and lines starting with `#` are skipped.
//! Structured input is a JSON object whose `"rows"` hold cells of the form
//! `{"v": "3/2", "g": false}` or `{"neginf": true}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use supertrop::{TropMatrix, TropScalar};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SourceFormat {
    Plain,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: TropMatrix,
    pub format: SourceFormat,
}

impl MatrixDocument {
    pub fn shape(&self) -> (usize, usize) {
        self.matrix.shape()
    }

    /// Renders in the document's own format.
    pub fn render(&self) -> String {
        match self.format {
            SourceFormat::Plain => render_plain(&self.matrix),
            SourceFormat::Structured => {
                let mut text = serde_json::to_string(&structured(&self.matrix)).expect("serializable");
                text.push('\n');
                text
            }
        }
    }

    /// SHA-256 of the canonical plain rendering, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(render_plain(&self.matrix).as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

/// Detects the format from the first non-blank character.
pub fn parse_matrix(text: &str) -> Result<MatrixDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        parse_plain(text)
    }
}

pub fn parse_plain(text: &str) -> Result<MatrixDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let (header_line, header) = lines.next().ok_or_else(|| fail(1, 1, "missing `m n` header"))?;
    let dims = tokens(header);
    if dims.len() != 2 {
        return Err(fail(header_line, 1, "header must be `m n`"));
    }
    let dim = |(col, tok): (usize, &str)| -> Result<usize, ParseError> {
        match tok.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(fail(header_line, col, format!("bad dimension {tok:?}"))),
        }
    };
    let (m, n) = (dim(dims[0])?, dim(dims[1])?);

    let mut rows = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == m {
            return Err(fail(line_no, 1, format!("more than {m} rows")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            return Err(fail(
                line_no,
                col,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        let row = toks
            .into_iter()
            .map(|(col, tok)| tok.parse::<TropScalar>().map_err(|e| fail(line_no, col, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() < m {
        return Err(fail(last_line + 1, 1, format!("expected {m} rows, found {}", rows.len())));
    }
    let matrix = TropMatrix::from_rows(rows).map_err(|e| fail(header_line, 1, e.to_string()))?;
    Ok(MatrixDocument {
        matrix,
        format: SourceFormat::Plain,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Structured {
    rows: Vec<Vec<Cell>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Cell {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    g: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    neginf: Option<bool>,
}

fn cell_value(cell: &Cell) -> Result<TropScalar, String> {
    match (cell.neginf, &cell.v) {
        (Some(true), None) if cell.g.is_none() => Ok(TropScalar::NegInf),
        (None | Some(false), Some(v)) => {
            let magnitude = supertrop::semiring::parse_rational(v).map_err(|e| e.to_string())?;
            Ok(if cell.g.unwrap_or(false) {
                TropScalar::Ghost(magnitude)
            } else {
                TropScalar::Real(magnitude)
            })
        }
        _ => Err("a cell is either {\"v\": ..., \"g\": ...} or {\"neginf\": true}".into()),
    }
}

pub fn parse_structured(text: &str) -> Result<MatrixDocument, ParseError> {
    let doc: Structured =
        serde_json::from_str(text).map_err(|e| fail(e.line(), e.column(), e.to_string()))?;
    let n = doc.rows.first().map_or(0, Vec::len);
    let mut rows = Vec::with_capacity(doc.rows.len());
    for (r, row) in doc.rows.iter().enumerate() {
        if row.len() != n {
            return Err(fail(1, 1, format!("row {} has {} entries, expected {n}", r + 1, row.len())));
        }
        let values = row
            .iter()
            .enumerate()
            .map(|(c, cell)| cell_value(cell).map_err(|e| fail(1, 1, format!("row {} entry {}: {e}", r + 1, c + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(values);
    }
    let matrix = TropMatrix::from_rows(rows).map_err(|e| fail(1, 1, e.to_string()))?;
    Ok(MatrixDocument {
        matrix,
        format: SourceFormat::Structured,
    })
}

pub fn render_plain(a: &TropMatrix) -> String {
    format!("{} {}\n{a}\n", a.rows(), a.cols())
}

pub fn structured_scalar(x: &TropScalar) -> Value {
    let cell = match x {
        TropScalar::NegInf => Cell {
            v: None,
            g: None,
            neginf: Some(true),
        },
        TropScalar::Real(_) | TropScalar::Ghost(_) => Cell {
            v: Some(x.realize().to_string()),
            g: Some(x.is_ghost()),
            neginf: None,
        },
    };
    serde_json::to_value(cell).expect("serializable")
}

/// The structured form of a matrix, as a JSON value.
pub fn structured(a: &TropMatrix) -> Value {
    let rows: Vec<Value> = a
        .row_vectors()
        .iter()
        .map(|row| Value::Array(row.entries().iter().map(structured_scalar).collect()))
        .collect();
    serde_json::json!({ "rows": rows })
}
