//! Element handles and their structured forms.
//!
//! A ring stores elements as dense indices. Every construction also records a
//! [`Form`] per element: the structured value (integer, tuple, matrix, symbolic
//! sum) used for labels, witness reports and element literals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an element in its ring's tables.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_idx(i: usize) -> Self {
        Elem(i as u32)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Structured value of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Int(i64),
    Sym(String),
    Tuple(Vec<Form>),
    Matrix(Vec<Vec<Form>>),
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Int(n) => write!(f, "{n}"),
            Form::Sym(s) => f.write_str(s),
            Form::Tuple(items) => {
                f.write_str("(")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            Form::Matrix(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    for (j, x) in row.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{x}")?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl Form {
    /// Parses a complete element literal such as `[[0,0],[3,1]]`, `(1,a+b)` or `7`.
    pub fn parse(text: &str) -> Result<Form> {
        let (form, end) = Form::parse_prefix(text, 0)?;
        let rest = &text[end..];
        if !rest.trim().is_empty() {
            return Err(Error::Parse {
                pos: end + (rest.len() - rest.trim_start().len()),
                msg: "trailing input after element literal".into(),
            });
        }
        Ok(form)
    }

    /// Parses one literal starting at byte `pos`; returns the form and the end offset.
    pub fn parse_prefix(text: &str, pos: usize) -> Result<(Form, usize)> {
        let bytes = text.as_bytes();
        let mut i = skip_ws(bytes, pos);
        if i >= bytes.len() {
            return Err(Error::Parse { pos: i, msg: "expected element literal".into() });
        }
        match bytes[i] {
            b'(' => {
                let (items, end) = parse_list(text, i + 1, b')', false)?;
                Ok((Form::Tuple(items), end))
            }
            b'[' => {
                let (items, end) = parse_list(text, i + 1, b']', true)?;
                let mut rows = Vec::with_capacity(items.len());
                for item in items {
                    match item {
                        Form::Matrix(mut r) if r.len() == 1 => rows.push(r.remove(0)),
                        _ => {
                            return Err(Error::Parse {
                                pos: i,
                                msg: "matrix literal must be a list of rows".into(),
                            })
                        }
                    }
                }
                if let Some(w) = rows.first().map(Vec::len) {
                    if rows.iter().any(|r| r.len() != w) {
                        return Err(Error::Parse { pos: i, msg: "ragged matrix literal".into() });
                    }
                }
                Ok((Form::Matrix(rows), end))
            }
            _ => {
                let start = i;
                while i < bytes.len() && !matches!(bytes[i], b',' | b')' | b']' | b'}' | b'(' | b'[')
                    && !bytes[i].is_ascii_whitespace()
                {
                    i += 1;
                }
                if i == start {
                    return Err(Error::Parse { pos: start, msg: "expected element literal".into() });
                }
                let tok = &text[start..i];
                let form = match tok.parse::<i64>() {
                    Ok(n) => Form::Int(n),
                    Err(_) => Form::Sym(tok.to_string()),
                };
                Ok((form, i))
            }
        }
    }
}

// Inside brackets, a nested bracket list is a row; rows are wrapped as 1-row
// matrices so the caller can distinguish them from scalars.
fn parse_list(text: &str, pos: usize, close: u8, rows: bool) -> Result<(Vec<Form>, usize)> {
    let bytes = text.as_bytes();
    let mut items = Vec::new();
    let mut i = skip_ws(bytes, pos);
    if i < bytes.len() && bytes[i] == close {
        return Ok((items, i + 1));
    }
    loop {
        i = skip_ws(bytes, i);
        let (item, end) = if rows && i < bytes.len() && bytes[i] == b'[' {
            let (row, end) = parse_list(text, i + 1, b']', false)?;
            (Form::Matrix(vec![row]), end)
        } else if rows {
            return Err(Error::Parse { pos: i, msg: "matrix rows must be bracketed".into() });
        } else {
            Form::parse_prefix(text, i)?
        };
        items.push(item);
        i = skip_ws(bytes, end);
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(&c) if c == close => return Ok((items, i + 1)),
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("expected `,` or `{}`", close as char),
                })
            }
        }
    }
}

fn skip_ws(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_matrix_literal() {
        let f = Form::parse("[[0,0],[3,1]]").unwrap();
        assert_eq!(
            f,
            Form::Matrix(vec![
                vec![Form::Int(0), Form::Int(0)],
                vec![Form::Int(3), Form::Int(1)]
            ])
        );
        assert_eq!(f.to_string(), "[[0,0],[3,1]]");
    }

    #[test]
    fn parses_tuple_with_symbols() {
        let f = Form::parse(" (1, a+b) ").unwrap();
        assert_eq!(f, Form::Tuple(vec![Form::Int(1), Form::Sym("a+b".into())]));
    }

    #[test]
    fn rejects_ragged_and_trailing() {
        assert!(Form::parse("[[1,2],[3]]").is_err());
        assert!(Form::parse("3 4").is_err());
        assert!(Form::parse("[1,2]").is_err());
    }
}
