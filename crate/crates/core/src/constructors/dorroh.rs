use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits, Shape};
use crate::subset::{ElementSubset, TwoSidedIdeal};

use super::builder::{all_tuples, product_order, radix_index, Carrier};
use super::sub::subring;

/// A ring `T` (identity not required) with compatible left and right actions of a base ring `R`.
#[derive(Debug, Clone)]
pub struct BimoduleAlgebra {
    pub algebra: FiniteRing,
    base_order: usize,
    left: Vec<Elem>,
    right: Vec<Elem>,
}

impl BimoduleAlgebra {
    /// Wraps explicit action tables: `left[a·|T| + t] = at` and `right[t·|R| + a] = ta`.
    ///
    /// Every bimodule law is verified exhaustively.
    pub fn from_tables(base: &FiniteRing, algebra: FiniteRing, left: Vec<Elem>, right: Vec<Elem>) -> Result<Self> {
        let (nr, nt) = (base.order(), algebra.order());
        if left.len() != nr * nt || right.len() != nr * nt {
            return Err(Error::Shape("action tables do not match |R|·|T|".into()));
        }
        if left.iter().chain(&right).any(|t| t.idx() >= nt) {
            return Err(Error::Shape("action value out of range".into()));
        }
        let m = BimoduleAlgebra { algebra, base_order: nr, left, right };
        m.verify(base)?;
        Ok(m)
    }

    /// `R = Z_n` acting on `T` through integer multiples.
    pub fn scalar(base: &FiniteRing, algebra: FiniteRing) -> Result<Self> {
        let ints: Vec<i64> = base
            .elements()
            .map(|a| match base.form(a) {
                Form::Int(k) => Ok(*k),
                _ => Err(Error::Invalid("scalar actions need a base ring of residues".into())),
            })
            .collect::<Result<_>>()?;
        let nt = algebra.order();
        let mut left = Vec::with_capacity(ints.len() * nt);
        for &k in &ints {
            left.extend(algebra.elements().map(|t| algebra.smul(k, t)));
        }
        let mut right = Vec::with_capacity(ints.len() * nt);
        for t in algebra.elements() {
            right.extend(ints.iter().map(|&k| algebra.smul(k, t)));
        }
        Self::from_tables(base, algebra, left, right)
    }

    /// A two-sided ideal of `R` with the multiplication of `R` as both actions.
    pub fn ideal(base: &FiniteRing, ideal: &TwoSidedIdeal) -> Result<Self> {
        Self::from_overring(base, base, ideal.as_subset(), &base.elements().collect::<Vec<_>>())
    }

    /// `T` given by a carrier inside an overring `A`, with `R` acting through the
    /// map `embed: R → A` and the multiplication of `A`.
    pub fn from_overring(base: &FiniteRing, over: &FiniteRing, carrier: &ElementSubset, embed: &[Elem]) -> Result<Self> {
        if embed.len() != base.order() {
            return Err(Error::Shape("embedding must list one image per base element".into()));
        }
        let sub = subring(over, carrier, None)?;
        let t = sub.ring;
        let mut pos = vec![None; over.order()];
        for (k, &x) in sub.embedding.iter().enumerate() {
            pos[x.idx()] = Some(Elem::from_idx(k));
        }
        let locate = |v: Elem, a: Elem, x: Elem, side: &str| {
            pos[v.idx()].ok_or_else(|| Error::ActionIncompatibility {
                law: format!("closure of the {side} action"),
                witness: format!("a={}, t={}", base.label(a), over.label(x)),
            })
        };
        let mut left = Vec::with_capacity(base.order() * t.order());
        for a in base.elements() {
            for &x in &sub.embedding {
                left.push(locate(over.mul(embed[a.idx()], x), a, x, "left")?);
            }
        }
        let mut right = Vec::with_capacity(base.order() * t.order());
        for &x in &sub.embedding {
            for a in base.elements() {
                right.push(locate(over.mul(x, embed[a.idx()]), a, x, "right")?);
            }
        }
        Self::from_tables(base, t, left, right)
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    #[inline]
    pub fn act_left(&self, a: Elem, t: Elem) -> Elem {
        self.left[a.idx() * self.algebra.order() + t.idx()]
    }

    #[inline]
    pub fn act_right(&self, t: Elem, a: Elem) -> Elem {
        self.right[t.idx() * self.base_order + a.idx()]
    }

    fn verify(&self, r: &FiniteRing) -> Result<()> {
        let t = &self.algebra;
        let fail = |law: &str, w: String| Err(Error::ActionIncompatibility { law: law.into(), witness: w });
        let (l, rt) = (|a, x| self.act_left(a, x), |x, a| self.act_right(x, a));
        for a in r.elements() {
            for b in r.elements() {
                for x in t.elements() {
                    let w = || format!("a={}, b={}, t={}", r.label(a), r.label(b), t.label(x));
                    if l(r.add(a, b), x) != t.add(l(a, x), l(b, x)) {
                        return fail("(a+b)t = at+bt", w());
                    }
                    if rt(x, r.add(a, b)) != t.add(rt(x, a), rt(x, b)) {
                        return fail("t(a+b) = ta+tb", w());
                    }
                    if l(r.mul(a, b), x) != l(a, l(b, x)) {
                        return fail("(ab)t = a(bt)", w());
                    }
                    if rt(x, r.mul(a, b)) != rt(rt(x, a), b) {
                        return fail("t(ab) = (ta)b", w());
                    }
                    if rt(l(a, x), b) != l(a, rt(x, b)) {
                        return fail("(at)b = a(tb)", w());
                    }
                }
            }
        }
        for a in r.elements() {
            for x in t.elements() {
                for y in t.elements() {
                    let w = || format!("a={}, t={}, s={}", r.label(a), t.label(x), t.label(y));
                    if l(a, t.add(x, y)) != t.add(l(a, x), l(a, y)) {
                        return fail("a(t+s) = at+as", w());
                    }
                    if rt(t.add(x, y), a) != t.add(rt(x, a), rt(y, a)) {
                        return fail("(t+s)a = ta+sa", w());
                    }
                    if l(a, t.mul(x, y)) != t.mul(l(a, x), y) {
                        return fail("a(ts) = (at)s", w());
                    }
                    if t.mul(x, l(a, y)) != t.mul(rt(x, a), y) {
                        return fail("t(as) = (ta)s", w());
                    }
                    if rt(t.mul(x, y), a) != t.mul(x, rt(y, a)) {
                        return fail("(ts)a = t(sa)", w());
                    }
                }
            }
        }
        if let Some(one) = r.one() {
            if let Some(x) = t.elements().find(|&x| l(one, x) != x || rt(x, one) != x) {
                return fail("1t = t = t1", format!("t={}", t.label(x)));
            }
        }
        Ok(())
    }
}

/// The Dorroh extension `D(R, T)` on `R × T` with
/// `(a₁,t₁)(a₂,t₂) = (a₁a₂, a₁t₂ + t₁a₂ + t₁t₂)` and identity `(1, 0)`.
pub fn dorroh(r: &FiniteRing, t: &BimoduleAlgebra, limits: &Limits) -> Result<FiniteRing> {
    if t.base_order != r.order() {
        return Err(Error::Mismatch(format!(
            "algebra was verified over a ring of order {}, not {}",
            t.base_order,
            r.order()
        )));
    }
    let alg = &t.algebra;
    limits.check_order(product_order([r.order(), alg.order()]))?;
    let radices = [r.order(), alg.order()];
    let one = r.unit()?;
    Carrier {
        shape: Shape::Tuple(2),
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(radix_index(c, &[0, 1], &radices))),
        add: Box::new(|x, y, out| out.extend([r.add(x[0], y[0]), alg.add(x[1], y[1])])),
        mul: Box::new(|x, y, out| {
            let (a1, t1, a2, t2) = (x[0], x[1], y[0], y[1]);
            let s = alg.add(alg.add(t.act_left(a1, t2), t.act_right(t1, a2)), alg.mul(t1, t2));
            out.extend([r.mul(a1, a2), s]);
        }),
        one: Some(vec![one, alg.zero()]),
        form: Box::new(|c| Form::Tuple(vec![r.form(c[0]).clone(), alg.form(c[1]).clone()])),
        aliases: Vec::new(),
    }
    .build(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_full, semigroup_algebra_t4, zmod};

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn dorroh_of_t4_lists_eight_elements() {
        let z2 = zmod(2, &L).unwrap();
        let t = BimoduleAlgebra::scalar(&z2, semigroup_algebra_t4(&L).unwrap()).unwrap();
        let d = dorroh(&z2, &t, &L).unwrap();
        assert_eq!(d.order(), 8);
        let mut labels: Vec<&str> = d.elements().map(|x| d.label(x)).collect();
        labels.sort();
        assert_eq!(labels, ["(0,0)", "(0,a)", "(0,a+b)", "(0,b)", "(1,0)", "(1,a)", "(1,a+b)", "(1,b)"]);
        assert_eq!(d.label(d.one().unwrap()), "(1,0)");
    }

    #[test]
    fn dorroh_of_zero_algebra_is_base() {
        let z3 = zmod(3, &L).unwrap();
        let zero = z3.as_two_sided(&z3.zero_set()).unwrap();
        let t = BimoduleAlgebra::ideal(&z3, &zero).unwrap();
        let d = dorroh(&z3, &t, &L).unwrap();
        assert_eq!(d.order(), 3);
        let x = d.parse_elem("(2,0)").unwrap();
        assert_eq!(d.label(d.mul(x, x)), "(1,0)");
    }

    #[test]
    fn non_ideal_subring_has_no_matrix_action() {
        let z2 = zmod(2, &L).unwrap();
        let m = matrix_full(2, &z2, &L).unwrap();
        let carrier = ElementSubset::from_elems(
            m.order(),
            ["[[0,0],[0,0]]", "[[1,1],[1,1]]", "[[1,1],[0,0]]", "[[0,0],[1,1]]"].map(|s| m.parse_elem(s).unwrap()),
        );
        let ids: Vec<Elem> = m.elements().collect();
        let err = BimoduleAlgebra::from_overring(&m, &m, &carrier, &ids).unwrap_err();
        assert!(matches!(err, Error::ActionIncompatibility { .. }), "{err:?}");
    }

    #[test]
    fn broken_action_is_reported() {
        let z2 = zmod(2, &L).unwrap();
        let t4 = semigroup_algebra_t4(&L).unwrap();
        let n = t4.order();
        // 1 acts as zero on the left.
        let left = vec![Elem(0); 2 * n];
        let right: Vec<Elem> = t4.elements().flat_map(|x| [Elem(0), x]).collect();
        let err = BimoduleAlgebra::from_tables(&z2, t4, left, right).unwrap_err();
        assert!(matches!(err, Error::ActionIncompatibility { .. }));
    }
}
