//! The ring-construction expression language.
//!
//! ```text
//! expr := "Z" int | "GF" prime
//!       | "M(" int "," expr ")" | "U(" … | "D(" … | "V(" …
//!       | "prod(" expr {"," expr} ")" | "quot(" expr "," gens ")"
//!       | "corner(" expr "," elem ")" | "S(" expr ")"
//!       | "dorroh(" expr "," algebra ")" | "sgring(" expr "," name ")"
//!       | "grpring(" expr "," name ")" | "H3(" int "," expr ")"
//!       | "Hst(" elem "," elem "," expr ")" | "K(" elem "," expr ")"
//!       | "table(" path ")" | "freealg16"
//! gens  := "{" [elem {"," elem}] "}" | "delta" | "soc" | "J"
//! algebra := name | "ideal{" [elem {"," elem}] "}"
//! ```
//!
//! Element literals use the structured notation of the ring they belong to.

use std::fmt;

use crate::element::Form;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Full,
    Upper,
    ConstDiagonal,
    Toeplitz,
}

impl MatrixKind {
    fn keyword(self) -> &'static str {
        match self {
            MatrixKind::Full => "M",
            MatrixKind::Upper => "U",
            MatrixKind::ConstDiagonal => "D",
            MatrixKind::Toeplitz => "V",
        }
    }
}

/// Generators of the ideal in a quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gens {
    /// The two-sided ideal generated by the listed elements.
    Elems(Vec<Form>),
    Delta,
    Soc,
    Jacobson,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraRef {
    Named(String),
    /// A two-sided ideal of the base ring with multiplication as the actions.
    Ideal(Vec<Form>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Z(usize),
    GF(usize),
    Matrix { kind: MatrixKind, n: usize, base: Box<RingExpr> },
    Prod(Vec<RingExpr>),
    Quot(Box<RingExpr>, Gens),
    Corner(Box<RingExpr>, Form),
    S(Box<RingExpr>),
    Dorroh(Box<RingExpr>, AlgebraRef),
    SgRing(Box<RingExpr>, String),
    GrpRing(Box<RingExpr>, String),
    H3(usize, Box<RingExpr>),
    Hst(Form, Form, Box<RingExpr>),
    K(Form, Box<RingExpr>),
    Table(String),
    FreeAlg16,
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Form]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Z(n) => write!(f, "Z{n}"),
            RingExpr::GF(p) => write!(f, "GF{p}"),
            RingExpr::Matrix { kind, n, base } => write!(f, "{}({n},{base})", kind.keyword()),
            RingExpr::Prod(items) => {
                f.write_str("prod(")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            RingExpr::Quot(e, g) => {
                write!(f, "quot({e},")?;
                match g {
                    Gens::Elems(items) => write_list(f, items)?,
                    Gens::Delta => f.write_str("delta")?,
                    Gens::Soc => f.write_str("soc")?,
                    Gens::Jacobson => f.write_str("J")?,
                }
                f.write_str(")")
            }
            RingExpr::Corner(e, x) => write!(f, "corner({e},{x})"),
            RingExpr::S(e) => write!(f, "S({e})"),
            RingExpr::Dorroh(e, a) => {
                write!(f, "dorroh({e},")?;
                match a {
                    AlgebraRef::Named(n) => f.write_str(n)?,
                    AlgebraRef::Ideal(items) => {
                        f.write_str("ideal")?;
                        write_list(f, items)?;
                    }
                }
                f.write_str(")")
            }
            RingExpr::SgRing(e, n) => write!(f, "sgring({e},{n})"),
            RingExpr::GrpRing(e, n) => write!(f, "grpring({e},{n})"),
            RingExpr::H3(m, e) => write!(f, "H3({m},{e})"),
            RingExpr::Hst(s, t, e) => write!(f, "Hst({s},{t},{e})"),
            RingExpr::K(s, e) => write!(f, "K({s},{e})"),
            RingExpr::Table(p) => write!(f, "table(\"{p}\")"),
            RingExpr::FreeAlg16 => f.write_str("freealg16"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_') {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a name");
        }
        Ok(&self.src[start..self.pos])
    }

    fn int(&mut self) -> Result<usize> {
        self.ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn positive(&mut self, what: &str) -> Result<usize> {
        let at = self.pos;
        let n = self.int()?;
        if n == 0 {
            return Err(Error::Semantic(format!("{what} must be positive (at {at})")));
        }
        Ok(n)
    }

    fn elem(&mut self) -> Result<Form> {
        let (form, end) = Form::parse_prefix(self.src, self.pos)?;
        self.pos = end;
        Ok(form)
    }

    fn elem_set(&mut self) -> Result<Vec<Form>> {
        self.expect(b'{')?;
        let mut items = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.elem()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return self.err("expected `,` or `}`"),
            }
        }
    }

    fn path(&mut self) -> Result<String> {
        if self.peek() == Some(b'"') {
            let rest = &self.src[self.pos..];
            let end = rest[1..].find('"').ok_or_else(|| Error::Parse { pos: self.pos, msg: "unterminated path".into() })?;
            self.pos += end + 2;
            Ok(rest[1..end + 1].to_string())
        } else {
            let rest = &self.src[self.pos..];
            let end = rest.find(')').unwrap_or(rest.len());
            let p = rest[..end].trim().to_string();
            if p.is_empty() {
                return self.err("expected a file path");
            }
            self.pos += end;
            Ok(p)
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let at = {
            self.ws();
            self.pos
        };
        let name = self.ident()?;
        let sub = |p: &mut Self| p.expr().map(Box::new);
        if let Some(digits) = name.strip_prefix('Z').filter(|d| !d.is_empty()) {
            return self.modulus(digits, at, RingExpr::Z);
        }
        if let Some(digits) = name.strip_prefix("GF").filter(|d| !d.is_empty()) {
            return self.modulus(digits, at, RingExpr::GF);
        }
        let e = match name {
            "Z" => RingExpr::Z(self.positive("modulus")?),
            "GF" => RingExpr::GF(self.positive("field order")?),
            "freealg16" => RingExpr::FreeAlg16,
            "M" | "U" | "D" | "V" => {
                let kind = match name {
                    "M" => MatrixKind::Full,
                    "U" => MatrixKind::Upper,
                    "D" => MatrixKind::ConstDiagonal,
                    _ => MatrixKind::Toeplitz,
                };
                self.expect(b'(')?;
                let n = self.positive("matrix size")?;
                self.expect(b',')?;
                let base = sub(self)?;
                self.expect(b')')?;
                RingExpr::Matrix { kind, n, base }
            }
            "prod" => {
                self.expect(b'(')?;
                let mut items = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    items.push(self.expr()?);
                }
                self.expect(b')')?;
                RingExpr::Prod(items)
            }
            "quot" => {
                self.expect(b'(')?;
                let base = sub(self)?;
                self.expect(b',')?;
                let gens = if self.peek() == Some(b'{') {
                    Gens::Elems(self.elem_set()?)
                } else {
                    let k = self.pos;
                    match self.ident()? {
                        "delta" => Gens::Delta,
                        "soc" => Gens::Soc,
                        "J" => Gens::Jacobson,
                        other => return Err(Error::Semantic(format!("unknown ideal keyword `{other}` at {k}"))),
                    }
                };
                self.expect(b')')?;
                RingExpr::Quot(base, gens)
            }
            "corner" => {
                self.expect(b'(')?;
                let base = sub(self)?;
                self.expect(b',')?;
                let e = self.elem()?;
                self.expect(b')')?;
                RingExpr::Corner(base, e)
            }
            "S" => {
                self.expect(b'(')?;
                let base = sub(self)?;
                self.expect(b')')?;
                RingExpr::S(base)
            }
            "dorroh" => {
                self.expect(b'(')?;
                let base = sub(self)?;
                self.expect(b',')?;
                let name = self.ident()?;
                let alg = if name == "ideal" && self.peek() == Some(b'{') {
                    AlgebraRef::Ideal(self.elem_set()?)
                } else {
                    AlgebraRef::Named(name.to_string())
                };
                self.expect(b')')?;
                RingExpr::Dorroh(base, alg)
            }
            "sgring" | "grpring" => {
                self.expect(b'(')?;
                let base = sub(self)?;
                self.expect(b',')?;
                let t = self.ident()?.to_string();
                self.expect(b')')?;
                if name == "sgring" {
                    RingExpr::SgRing(base, t)
                } else {
                    RingExpr::GrpRing(base, t)
                }
            }
            "H3" => {
                self.expect(b'(')?;
                let m = self.positive("H3 modulus")?;
                self.expect(b',')?;
                let base = sub(self)?;
                self.expect(b')')?;
                RingExpr::H3(m, base)
            }
            "Hst" => {
                self.expect(b'(')?;
                let s = self.elem()?;
                self.expect(b',')?;
                let t = self.elem()?;
                self.expect(b',')?;
                let base = sub(self)?;
                self.expect(b')')?;
                RingExpr::Hst(s, t, base)
            }
            "K" => {
                self.expect(b'(')?;
                let s = self.elem()?;
                self.expect(b',')?;
                let base = sub(self)?;
                self.expect(b')')?;
                RingExpr::K(s, base)
            }
            "table" => {
                self.expect(b'(')?;
                let p = self.path()?;
                self.expect(b')')?;
                RingExpr::Table(p)
            }
            other => return Err(Error::Semantic(format!("unknown construction `{other}` at {at}"))),
        };
        Ok(e)
    }

    fn modulus(&mut self, digits: &str, at: usize, make: fn(usize) -> RingExpr) -> Result<RingExpr> {
        let n: usize = digits
            .parse()
            .map_err(|_| Error::Parse { pos: at, msg: format!("malformed modulus `{digits}`") })?;
        if n == 0 {
            return Err(Error::Semantic(format!("modulus must be positive (at {at})")));
        }
        Ok(make(n))
    }
}

/// Parses a complete ring expression.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input after expression");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let e = parse_ring_expr("M(2, Z4)").unwrap();
        assert_eq!(e, RingExpr::Matrix { kind: MatrixKind::Full, n: 2, base: Box::new(RingExpr::Z(4)) });
        assert_eq!(e.to_string(), "M(2,Z4)");
        assert_eq!(parse_ring_expr("K(0, Z7)").unwrap().to_string(), "K(0,Z7)");
        assert_eq!(
            parse_ring_expr("dorroh(Z2, sgT)").unwrap(),
            RingExpr::Dorroh(Box::new(RingExpr::Z(2)), AlgebraRef::Named("sgT".into()))
        );
        assert_eq!(parse_ring_expr("Z 16").unwrap(), RingExpr::Z(16));
    }

    #[test]
    fn round_trips() {
        for text in [
            "quot(U(2,Z2),delta)",
            "quot(Z16,{2})",
            "quot(Z16,{})",
            "corner(M(2,Z4),[[1,0],[0,0]])",
            "S(U(2,Z2))",
            "dorroh(Z4,ideal{2})",
            "grpring(Z3,C2)",
            "sgring(Z2,LZ2)",
            "H3(4,Z4)",
            "Hst(1,3,Z4)",
            "prod(Z2,GF3,V(3,Z2),D(3,Z2))",
            "table(\"rings/x y.toml\")",
            "freealg16",
            "quot(freealg16,soc)",
            "quot(Z8,J)",
        ] {
            let e = parse_ring_expr(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
        assert_eq!(parse_ring_expr("table(a/b.toml)").unwrap(), RingExpr::Table("a/b.toml".into()));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ring_expr("M(2 Z4)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ring_expr("W(2,Z4)"), Err(Error::Semantic(_))));
        assert!(matches!(parse_ring_expr("Z0"), Err(Error::Semantic(_))));
        assert!(matches!(parse_ring_expr("M(0,Z2)"), Err(Error::Semantic(_))));
        assert!(matches!(parse_ring_expr("Z4 Z4"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring_expr("quot(Z4,{2)"), Err(Error::Parse { .. })));
    }
}
