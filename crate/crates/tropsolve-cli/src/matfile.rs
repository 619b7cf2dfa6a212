//! The on-disk matrix format: a `rows cols` header followed by exactly
//! rows × cols whitespace-separated scalar tokens.
//!
//! Tokens use the scalar text syntax — a reduced integer, a fraction `p/q`,
//! or `-inf` — and may be broken across lines freely. Everything from `#` to
//! the end of a line is a comment. Trailing tokens beyond the announced count
//! are rejected, so a file describes exactly one matrix.
//!
//! [`render_matrix`] prints the same format back; parsing its output yields
//! an identical matrix.

use std::fmt;
use std::str::FromStr;

use tropsolve_core::{Matrix, TropMatrix, TropScalar, TropVector, Vector};

/// A parse failure with the 1-based position of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line of the rejected token (or the end of input).
    pub line: usize,
    /// 1-based column of the rejected token (or the end of input).
    pub column: usize,
    /// Human-readable description of the problem.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

/// Splits the input into whitespace-separated tokens with 1-based positions,
/// dropping `#` comments.
fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        let mut start: Option<(usize, usize)> = None;
        let mut column = 0;
        for (byte, c) in line.char_indices() {
            column += 1;
            if c.is_whitespace() {
                if let Some((begin, at)) = start.take() {
                    tokens.push(Token {
                        line: lineno + 1,
                        column: at,
                        text: &line[begin..byte],
                    });
                }
            } else if start.is_none() {
                start = Some((byte, column));
            }
        }
        if let Some((begin, at)) = start {
            tokens.push(Token {
                line: lineno + 1,
                column: at,
                text: &line[begin..],
            });
        }
    }
    tokens
}

/// Position just past the final token, for "ran out of input" diagnostics.
fn end_position(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.lines().collect();
    match lines.last() {
        Some(last) => (lines.len(), last.chars().count() + 1),
        None => (1, 1),
    }
}

fn err_at(token: &Token<'_>, message: String) -> ParseError {
    ParseError {
        line: token.line,
        column: token.column,
        message,
    }
}

fn err_at_end(text: &str, message: String) -> ParseError {
    let (line, column) = end_position(text);
    ParseError {
        line,
        column,
        message,
    }
}

fn parse_count(token: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    let value: usize = token
        .text
        .parse()
        .map_err(|_| err_at(token, format!("invalid {what} `{}`", token.text)))?;
    if value == 0 {
        return Err(err_at(token, format!("the {what} must be positive")));
    }
    Ok(value)
}

/// Parses a matrix file.
///
/// # Errors
///
/// Reports the 1-based line and column of the first offending token: a
/// malformed or missing header, a token that is not a valid scalar, fewer
/// entries than the header announces, or trailing tokens beyond them.
pub fn parse_matrix(text: &str) -> Result<TropMatrix, ParseError> {
    let tokens = tokenize(text);
    let mut iter = tokens.iter();
    let rows_token = iter
        .next()
        .ok_or_else(|| err_at_end(text, "expected a `rows cols` header".to_owned()))?;
    let rows = parse_count(rows_token, "row count")?;
    let cols_token = iter
        .next()
        .ok_or_else(|| err_at_end(text, "expected a column count after the row count".to_owned()))?;
    let cols = parse_count(cols_token, "column count")?;
    let need = rows
        .checked_mul(cols)
        .ok_or_else(|| err_at(cols_token, format!("{rows}x{cols} overflows the entry count")))?;

    let mut data = Vec::with_capacity(need);
    for token in iter.by_ref() {
        if data.len() == need {
            return Err(err_at(
                token,
                format!("unexpected trailing token `{}` after {need} entries", token.text),
            ));
        }
        let scalar = TropScalar::from_str(token.text)
            .map_err(|e| err_at(token, e.to_string()))?;
        data.push(scalar);
    }
    if data.len() < need {
        return Err(err_at_end(
            text,
            format!("expected {need} matrix entries, found {}", data.len()),
        ));
    }
    Ok(Matrix::new(rows, cols, data))
}

/// Prints a matrix in the file format: the header line, then one line per
/// row of space-separated scalar tokens.
#[must_use]
pub fn render_matrix(m: &TropMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses command-line scalar tokens into a vector.
///
/// # Errors
///
/// Rejects an empty token list and any token that is not a valid scalar; the
/// reported column is the 1-based position of the token in the list.
pub fn parse_vector_args(tokens: &[String]) -> Result<TropVector, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "expected at least one vector entry".to_owned(),
        });
    }
    let mut data = Vec::with_capacity(tokens.len());
    for (k, token) in tokens.iter().enumerate() {
        let scalar = TropScalar::from_str(token).map_err(|e| ParseError {
            line: 1,
            column: k + 1,
            message: e.to_string(),
        })?;
        data.push(scalar);
    }
    Ok(Vector::new(data))
}
