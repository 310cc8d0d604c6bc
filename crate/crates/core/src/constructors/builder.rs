use std::collections::HashMap;

use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::ring::{Coords, FiniteRing, Limits, RingParts, Shape};

type BinOp<'a> = Box<dyn Fn(&[Elem], &[Elem], &mut Vec<Elem>) + 'a>;

pub(crate) type IndexFn<'a> = Box<dyn Fn(&[Elem]) -> Option<usize> + 'a>;
pub(crate) type FormFn<'a> = Box<dyn Fn(&[Elem]) -> Form + 'a>;

/// A ring described by coordinate vectors and coordinatewise formulas.
///
/// Every element is listed up front; `index` maps a coordinate vector back
/// to its position (or `None` when it lies outside the carrier).
pub(crate) struct Carrier<'a> {
    pub shape: Shape,
    pub elements: Vec<Vec<Elem>>,
    pub index: IndexFn<'a>,
    pub add: BinOp<'a>,
    pub mul: BinOp<'a>,
    pub one: Option<Vec<Elem>>,
    pub form: FormFn<'a>,
    pub aliases: Vec<(Form, Elem)>,
}

impl<'a> Carrier<'a> {
    pub fn build(self, limits: &Limits) -> Result<FiniteRing> {
        let n = limits.check_order(self.elements.len() as u128)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut buf = Vec::new();
        for x in &self.elements {
            for y in &self.elements {
                buf.clear();
                (self.add)(x, y, &mut buf);
                let s = (self.index)(&buf).ok_or_else(|| not_closed("addition", &self, x, y))?;
                add.push(Elem::from_idx(s));
                buf.clear();
                (self.mul)(x, y, &mut buf);
                let p = (self.index)(&buf).ok_or_else(|| not_closed("multiplication", &self, x, y))?;
                mul.push(Elem::from_idx(p));
            }
        }
        let one = match &self.one {
            Some(o) => Some(Elem::from_idx(
                (self.index)(o).ok_or_else(|| Error::Invalid("identity lies outside the carrier".into()))?,
            )),
            None => None,
        };
        let forms: Vec<Form> = self.elements.iter().map(|c| (self.form)(c)).collect();
        let data: Vec<Elem> = self.elements.iter().flatten().copied().collect();
        FiniteRing::assemble(RingParts {
            order: n,
            add,
            mul,
            one,
            forms,
            labels: None,
            coords: Some(Coords::new(self.shape, data)),
            aliases: self.aliases,
        })
    }
}

fn not_closed(op: &str, c: &Carrier<'_>, x: &[Elem], y: &[Elem]) -> Error {
    Error::Invalid(format!("carrier is not closed under {op}: {} and {}", (c.form)(x), (c.form)(y)))
}

/// Mixed-radix enumeration of all coordinate vectors with the given per-position radices.
pub(crate) fn all_tuples(radices: &[usize]) -> Vec<Vec<Elem>> {
    let total: usize = radices.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![Elem(0); radices.len()];
    for _ in 0..total {
        out.push(cur.clone());
        for k in (0..radices.len()).rev() {
            cur[k].0 += 1;
            if cur[k].idx() < radices[k] {
                break;
            }
            cur[k] = Elem(0);
        }
    }
    out
}

/// Mixed-radix index of the coordinates at `positions`.
pub(crate) fn radix_index(coords: &[Elem], positions: &[usize], radices: &[usize]) -> usize {
    let mut idx = 0usize;
    for (&p, &r) in positions.iter().zip(radices) {
        idx = idx * r + coords[p].idx();
    }
    idx
}

/// Index lookup through a hash map, for carriers without a closed-form index.
pub(crate) fn hashed_index<'a>(elements: &[Vec<Elem>]) -> IndexFn<'a> {
    let map: HashMap<Vec<Elem>, usize> = elements.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    Box::new(move |c: &[Elem]| map.get(c).copied())
}

/// Estimated order of a product of sizes, for cap checks before allocation.
pub(crate) fn product_order(sizes: impl IntoIterator<Item = usize>) -> u128 {
    sizes.into_iter().fold(1u128, |acc, s| acc.saturating_mul(s as u128))
}

pub(crate) fn atom_form(s: &str) -> Form {
    match s.parse::<i64>() {
        Ok(n) => Form::Int(n),
        Err(_) => Form::Sym(s.to_string()),
    }
}

/// Square matrix helpers over a base ring, row-major.
pub(crate) struct MatOps<'r> {
    pub base: &'r FiniteRing,
    pub n: usize,
}

impl MatOps<'_> {
    pub fn add(&self, a: &[Elem], b: &[Elem], out: &mut Vec<Elem>) {
        out.extend(a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)));
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem], out: &mut Vec<Elem>) {
        let n = self.n;
        let r = self.base;
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    acc = r.add(acc, r.mul(a[i * n + k], b[k * n + j]));
                }
                out.push(acc);
            }
        }
    }

    pub fn identity(&self) -> Result<Vec<Elem>> {
        let one = self.base.unit()?;
        let n = self.n;
        Ok((0..n * n).map(|p| if p / n == p % n { one } else { self.base.zero() }).collect())
    }

    pub fn form(&self, a: &[Elem]) -> Form {
        let n = self.n;
        Form::Matrix((0..n).map(|i| (0..n).map(|j| self.base.form(a[i * n + j]).clone()).collect()).collect())
    }
}
