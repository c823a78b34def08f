//! Reading Cayley tables from text files.
//!
//! Grammar: lines whose first non-blank character is `#` are comments; the
//! first significant token is the order `n`; exactly `n²` whitespace-separated
//! integers in `[0, n)` follow, row-major. Indices are 0-based.

use std::path::Path;

use sgkit::table::{CayleyTable, MAX_ORDER};
use thiserror::Error;

/// A syntax or range problem, located by source line and column (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected an integer, found `{0}`")]
    MalformedToken(String),

    #[error("missing table order")]
    MissingOrder,

    #[error("order must be positive")]
    ZeroOrder,

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("expected {expected} entries for order {order}, found only {got}")]
    NotEnoughEntries {
        order: usize,
        expected: usize,
        got: usize,
    },

    #[error("unexpected trailing token `{0}` after the table")]
    TrailingToken(String),

    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        value: usize,
        row: usize,
        col: usize,
        order: usize,
    },
}

struct Token<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokenize(src: &str) -> (Vec<Token<'_>>, (usize, usize)) {
    let mut tokens = Vec::new();
    let mut end = (1, 1);
    for (line_idx, line) in src.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut col = 0;
        for chunk in line.split_whitespace() {
            // Locate the chunk to report accurate columns.
            let at = line[col..].find(chunk).expect("chunk comes from line") + col;
            tokens.push(Token {
                line: line_idx + 1,
                col: at + 1,
                text: chunk,
            });
            col = at + chunk.len();
        }
        end = (line_idx + 1, line.chars().count() + 1);
    }
    (tokens, end)
}

fn parse_usize(token: &Token<'_>) -> Result<usize, ParseError> {
    token.text.parse().map_err(|_| ParseError {
        line: token.line,
        col: token.col,
        kind: ParseErrorKind::MalformedToken(token.text.to_string()),
    })
}

/// Parses a table from source text and validates associativity immediately.
pub fn parse_table_str(src: &str) -> Result<CayleyTable, ParseError> {
    let (tokens, end) = tokenize(src);
    let mut tokens = tokens.into_iter();

    let order_token = tokens.next().ok_or(ParseError {
        line: end.0,
        col: end.1,
        kind: ParseErrorKind::MissingOrder,
    })?;
    let order = parse_usize(&order_token)?;
    if order == 0 {
        return Err(ParseError {
            line: order_token.line,
            col: order_token.col,
            kind: ParseErrorKind::ZeroOrder,
        });
    }
    if order > MAX_ORDER {
        return Err(ParseError {
            line: order_token.line,
            col: order_token.col,
            kind: ParseErrorKind::OrderTooLarge {
                order,
                max: MAX_ORDER,
            },
        });
    }

    let expected = order * order;
    let mut entries = Vec::with_capacity(expected);
    for token in tokens.by_ref() {
        if entries.len() == expected {
            return Err(ParseError {
                line: token.line,
                col: token.col,
                kind: ParseErrorKind::TrailingToken(token.text.to_string()),
            });
        }
        let value = parse_usize(&token)?;
        if value >= order {
            return Err(ParseError {
                line: token.line,
                col: token.col,
                kind: ParseErrorKind::EntryOutOfRange {
                    value,
                    row: entries.len() / order,
                    col: entries.len() % order,
                    order,
                },
            });
        }
        entries.push(value);
    }
    if entries.len() < expected {
        return Err(ParseError {
            line: end.0,
            col: end.1,
            kind: ParseErrorKind::NotEnoughEntries {
                order,
                expected,
                got: entries.len(),
            },
        });
    }

    let table = CayleyTable::from_entries(order, &entries)
        .expect("entries are range-checked during parsing");
    Ok(table.into_validated())
}

/// A parse error with the offending path attached.
#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
}

/// Reads and parses a table file.
pub fn parse_table_file(path: &Path) -> Result<CayleyTable, FileError> {
    let display = path.display().to_string();
    let src = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: display.clone(),
        source,
    })?;
    parse_table_str(&src).map_err(|source| FileError::Parse {
        path: display,
        source,
    })
}
