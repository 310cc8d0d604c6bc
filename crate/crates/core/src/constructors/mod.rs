//! Finite ring constructions with structured element encodings.
//!
//! Every constructor materializes full operation tables (bounded by
//! [`Limits::max_order`]) and runs the complete axiom verification of
//! [`FiniteRing::assemble`]. Structured rings record per-element coordinates
//! (matrix entries, tuple components, coefficients) for decoding.

mod builder;
mod dorroh;
mod matrix;
mod semigroup;
mod special;
mod sub;

pub use dorroh::{dorroh, BimoduleAlgebra};
pub use matrix::{h3, hst, ks, matrix_d, matrix_full, matrix_upper, matrix_v};
pub use semigroup::{group_ring, semigroup_ring};
pub use special::{free_algebra_example, matrix_semigroup_algebra, semigroup_algebra_t4};
pub use sub::{corner, pair_subring_s, quotient, subring, Quotient, Subring};

use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits, RingParts, Shape};
use builder::{all_tuples, product_order, Carrier};

/// The ring of integers modulo `n`.
pub fn zmod(n: usize, limits: &Limits) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::Invalid("modulus must be positive".into()));
    }
    let n = limits.check_order(n as u128)?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            add.push(Elem::from_idx((i + j) % n));
            mul.push(Elem::from_idx((i * j) % n));
        }
    }
    FiniteRing::assemble(RingParts {
        order: n,
        add,
        mul,
        one: Some(Elem::from_idx(1 % n)),
        forms: (0..n).map(|i| Form::Int(i as i64)).collect(),
        labels: None,
        coords: None,
        aliases: Vec::new(),
    })
}

/// The prime field with `p` elements.
pub fn gf(p: usize, limits: &Limits) -> Result<FiniteRing> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Invalid(format!("GF({p}) needs a prime order")));
    }
    zmod(p, limits)
}

/// Componentwise product of a nonempty list of rings.
pub fn direct_product(rings: &[&FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(Error::Invalid("direct product of an empty list".into()));
    }
    limits.check_order(product_order(rings.iter().map(|r| r.order())))?;
    let radices: Vec<usize> = rings.iter().map(|r| r.order()).collect();
    let positions: Vec<usize> = (0..rings.len()).collect();
    let one = rings.iter().map(|r| r.one()).collect::<Option<Vec<Elem>>>();
    let r2 = radices.clone();
    Carrier {
        shape: Shape::Tuple(rings.len()),
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(builder::radix_index(c, &positions, &r2))),
        add: Box::new(|a, b, out| out.extend(rings.iter().enumerate().map(|(i, r)| r.add(a[i], b[i])))),
        mul: Box::new(|a, b, out| out.extend(rings.iter().enumerate().map(|(i, r)| r.mul(a[i], b[i])))),
        one,
        form: Box::new(|c| Form::Tuple(rings.iter().enumerate().map(|(i, r)| r.form(c[i]).clone()).collect())),
        aliases: Vec::new(),
    }
    .build(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::exhaustive_axiom_check;

    const L: Limits = Limits::DEFAULT;

    fn exhaustive_ok(r: &FiniteRing) -> bool {
        let (a, m) = r.table_rows();
        exhaustive_axiom_check(&a, &m, r.one().map(|e| e.idx())).is_none()
    }

    #[test]
    fn zmod_basics() {
        let z2 = zmod(2, &L).unwrap();
        assert_eq!(z2.order(), 2);
        let z16 = zmod(16, &L).unwrap();
        assert_eq!(z16.order(), 16);
        assert_eq!(zmod(4, &L).unwrap().characteristic(), Some(4));
        assert_eq!(zmod(1, &L).unwrap().order(), 1);
        assert!(gf(4, &L).is_err());
        assert!(gf(7, &L).is_ok());
        assert!(matches!(zmod(5000, &L), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn products() {
        let z2 = zmod(2, &L).unwrap();
        let z3 = zmod(3, &L).unwrap();
        let p = direct_product(&[&z2, &z2], &L).unwrap();
        assert_eq!(p.order(), 4);
        let dd = direct_product(&[&z3, &z3], &L).unwrap();
        assert_eq!(dd.order(), 9);
        assert!(exhaustive_ok(&dd));
        let e = dd.parse_elem("(1,2)").unwrap();
        assert_eq!(dd.coords_of(e).unwrap(), &[Elem(1), Elem(2)]);
        for x in dd.elements() {
            assert_eq!(dd.elem_from_form(dd.form(x)), Some(x));
        }
    }
}
