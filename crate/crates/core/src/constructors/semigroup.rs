use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits, Shape};
use crate::tablefile::CayleyTable;

use super::builder::{all_tuples, atom_form, product_order, radix_index, Carrier};

/// Formal `F`-linear combinations over a finite semigroup with convolution product.
///
/// The result has an identity exactly when the semigroup has a two-sided
/// identity and `F` is unital.
pub fn semigroup_ring(f: &FiniteRing, s: &CayleyTable, limits: &Limits) -> Result<FiniteRing> {
    if !f.is_commutative() {
        return Err(Error::Invalid("coefficient ring must be commutative".into()));
    }
    let k = s.order;
    if k == 0 {
        return Err(Error::Invalid("empty semigroup".into()));
    }
    let op = |i: usize, j: usize| s.table[i][j];
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if op(op(i, j), l) != op(i, op(j, l)) {
                    return Err(Error::NonAssociativeTable([i, j, l]));
                }
            }
        }
    }
    limits.check_order(product_order(std::iter::repeat_n(f.order(), k)))?;
    let identity = (0..k).find(|&u| (0..k).all(|x| op(u, x) == x && op(x, u) == x));
    let one = match (identity, f.one()) {
        (Some(u), Some(o)) => Some((0..k).map(|i| if i == u { o } else { f.zero() }).collect()),
        _ => None,
    };
    let radices = vec![f.order(); k];
    let positions: Vec<usize> = (0..k).collect();
    let labels: Vec<String> = (0..k).map(|i| s.label(i)).collect();
    Carrier {
        shape: Shape::Tuple(k),
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(radix_index(c, &positions, &radices))),
        add: Box::new(|a, b, out| out.extend(a.iter().zip(b).map(|(&x, &y)| f.add(x, y)))),
        mul: Box::new(move |a, b, out| {
            let start = out.len();
            out.extend(std::iter::repeat_n(f.zero(), k));
            for i in 0..k {
                if a[i] == f.zero() {
                    continue;
                }
                for j in 0..k {
                    let slot = &mut out[start + op(i, j)];
                    *slot = f.add(*slot, f.mul(a[i], b[j]));
                }
            }
        }),
        one,
        form: Box::new(move |c| combination_form(f, &labels, c)),
        aliases: Vec::new(),
    }
    .build(limits)
}

/// The group ring `F[G]`; fails unless the table is a group.
pub fn group_ring(f: &FiniteRing, g: &CayleyTable, limits: &Limits) -> Result<FiniteRing> {
    let k = g.order;
    let op = |i: usize, j: usize| g.table[i][j];
    let e = (0..k)
        .find(|&u| (0..k).all(|x| op(u, x) == x && op(x, u) == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    if let Some(x) = (0..k).find(|&x| !(0..k).any(|y| op(x, y) == e && op(y, x) == e)) {
        return Err(Error::NotAGroup(format!("{} has no inverse", g.label(x))));
    }
    semigroup_ring(f, g, limits)
}

/// Renders a coefficient vector as `c₁s₁+c₂s₂+…`, omitting unit coefficients.
pub(crate) fn combination_form(f: &FiniteRing, basis: &[String], c: &[Elem]) -> Form {
    let mut terms = Vec::new();
    for (i, &x) in c.iter().enumerate() {
        if x == f.zero() {
            continue;
        }
        if Some(x) == f.one() {
            terms.push(basis[i].clone());
        } else {
            terms.push(format!("{}{}", f.label(x), basis[i]));
        }
    }
    if terms.is_empty() {
        return Form::Int(0);
    }
    atom_form(&terms.join("+"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::zmod;

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn group_rings() {
        let z3 = zmod(3, &L).unwrap();
        let z2 = zmod(2, &L).unwrap();
        let r = group_ring(&z3, &CayleyTable::cyclic_group(2), &L).unwrap();
        assert_eq!(r.order(), 9);
        assert_eq!(r.label(r.one().unwrap()), "e");
        let x = r.parse_elem("2e+g").unwrap();
        assert_eq!(r.mul(x, x), x);
        let y = r.parse_elem("e+g").unwrap();
        assert_eq!(r.label(r.mul(y, y)), "2e+2g");
        assert_eq!(group_ring(&z2, &CayleyTable::cyclic_group(2), &L).unwrap().order(), 4);
        assert_eq!(group_ring(&z2, &CayleyTable::cyclic_group(3), &L).unwrap().order(), 8);
        assert!(matches!(
            group_ring(&z2, &CayleyTable::left_zero_pair(), &L),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn left_zero_semigroup_ring() {
        let z2 = zmod(2, &L).unwrap();
        let t = semigroup_ring(&z2, &CayleyTable::left_zero_pair(), &L).unwrap();
        assert!(!t.is_unital());
        let (a, b) = (t.parse_elem("a").unwrap(), t.parse_elem("b").unwrap());
        assert_eq!(t.mul(a, b), a);
        assert_eq!(t.mul(b, a), b);
        assert_eq!(t.label(t.add(a, b)), "a+b");
    }

    #[test]
    fn rejects_non_associative_table() {
        let z2 = zmod(2, &L).unwrap();
        // x·y = 1 - x on two points is not associative.
        let bad = CayleyTable { order: 2, labels: None, table: vec![vec![1, 1], vec![0, 0]] };
        assert!(matches!(semigroup_ring(&z2, &bad, &L), Err(Error::NonAssociativeTable(_))));
    }
}
