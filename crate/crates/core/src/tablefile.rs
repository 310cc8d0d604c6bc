//! Text formats for ring tables and Cayley tables.
//!
//! Both formats are TOML documents. The loader accepts any TOML layout; the
//! writer emits one canonical layout, so saving a loaded canonical document
//! reproduces it byte for byte.
//!
//! ```text
//! order = 2
//! one = 1
//! labels = ["0", "1"]
//! add = [
//!   [0, 1],
//!   [1, 0],
//! ]
//! mul = [
//!   [0, 0],
//!   [0, 1],
//! ]
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ring::{build_table_ring, FiniteRing};

/// Contents of a ring-table document, before axiom verification.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingTable {
    pub order: usize,
    #[serde(default)]
    pub one: Option<usize>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

/// A finite binary operation, used for semigroup and group rings.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyTable {
    pub order: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

impl RingTable {
    pub fn parse(text: &str) -> Result<RingTable> {
        let t: RingTable = toml::from_str(text).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        if t.add.len() != t.order || t.mul.len() != t.order {
            return Err(Error::Shape(format!("order {} does not match table sizes", t.order)));
        }
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<RingTable> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        RingTable::parse(&text)
    }

    pub fn from_ring(ring: &FiniteRing, with_labels: bool) -> RingTable {
        let (add, mul) = ring.table_rows();
        RingTable {
            order: ring.order(),
            one: ring.one().map(|e| e.idx()),
            labels: with_labels.then(|| ring.labels().to_vec()),
            add,
            mul,
        }
    }

    pub fn to_ring(&self) -> Result<FiniteRing> {
        build_table_ring(&self.add, &self.mul, self.one, self.labels.clone())
    }

    /// Canonical serialization.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "order = {}", self.order).unwrap();
        if let Some(one) = self.one {
            writeln!(out, "one = {one}").unwrap();
        }
        if let Some(labels) = &self.labels {
            render_labels(&mut out, labels);
        }
        render_matrix(&mut out, "add", &self.add);
        render_matrix(&mut out, "mul", &self.mul);
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

impl CayleyTable {
    pub fn parse(text: &str) -> Result<CayleyTable> {
        let t: CayleyTable = toml::from_str(text).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        if t.table.len() != t.order || t.table.iter().any(|r| r.len() != t.order || r.iter().any(|&x| x >= t.order))
        {
            return Err(Error::Shape(format!("Cayley table does not match order {}", t.order)));
        }
        if let Some(l) = &t.labels {
            if l.len() != t.order {
                return Err(Error::Shape("label count differs from order".into()));
            }
        }
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<CayleyTable> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        CayleyTable::parse(&text)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "order = {}", self.order).unwrap();
        if let Some(labels) = &self.labels {
            render_labels(&mut out, labels);
        }
        render_matrix(&mut out, "table", &self.table);
        out
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("s{i}"),
        }
    }

    /// Cyclic group of order `n` with elements `e, g, g^2, …`.
    pub fn cyclic_group(n: usize) -> CayleyTable {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        CayleyTable { order: n, labels: Some(labels), table: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect() }
    }

    /// The semigroup `{a, b}` with `xy = x`.
    pub fn left_zero_pair() -> CayleyTable {
        CayleyTable {
            order: 2,
            labels: Some(vec!["a".into(), "b".into()]),
            table: vec![vec![0, 0], vec![1, 1]],
        }
    }
}

fn render_labels(out: &mut String, labels: &[String]) {
    out.push_str("labels = [");
    for (i, l) in labels.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&toml::Value::String(l.clone()).to_string());
    }
    out.push_str("]\n");
}

fn render_matrix(out: &mut String, key: &str, rows: &[Vec<usize>]) {
    writeln!(out, "{key} = [").unwrap();
    for row in rows {
        out.push_str("  [");
        for (j, x) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            write!(out, "{x}").unwrap();
        }
        out.push_str("],\n");
    }
    out.push_str("]\n");
}
