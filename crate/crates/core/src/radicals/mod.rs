//! The Zhou radical `δ(R)`, the Jacobson radical and the right socle.
//!
//! `δ(R)` is computed by four independent routes over the right-ideal
//! lattice, plus a lattice-free route for large unital rings. With no
//! essential maximal right ideals, `δ(R) = R`.

pub mod lattice;

use std::sync::Arc;

use crate::constructors::quotient;
use crate::element::Elem;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits};
use crate::subset::{ElementSubset, RightIdeal, TwoSidedIdeal};

pub use lattice::RightIdealLattice;

/// The cached right-ideal lattice of `r`, built on first use.
pub fn right_ideal_lattice(r: &FiniteRing, limits: &Limits) -> Result<Arc<RightIdealLattice>> {
    r.lattice_cell()
        .get_or_init(|| RightIdealLattice::build(r, limits.lattice_cap).map(Arc::new))
        .clone()
}

/// Every right ideal of `r`.
pub fn all_right_ideals(r: &FiniteRing, limits: &Limits) -> Result<Vec<RightIdeal>> {
    let l = right_ideal_lattice(r, limits)?;
    Ok((0..l.len()).map(|i| l.right_ideal(i)).collect())
}

fn uses_lattice(r: &FiniteRing, limits: &Limits) -> bool {
    !r.is_unital() || r.order() <= limits.lattice_order
}

/// `I` meets `aR` nontrivially for every nonzero `a`.
pub fn is_essential(r: &FiniteRing, i: &ElementSubset) -> bool {
    r.elements()
        .filter(|&a| a != r.zero())
        .all(|a| r.cyclic_right_ideal(a).intersection_count(i) > 1)
}

pub fn maximal_right_ideals(r: &FiniteRing, limits: &Limits) -> Result<Vec<RightIdeal>> {
    let l = right_ideal_lattice(r, limits)?;
    Ok(l.maximal_ids().map(|i| l.right_ideal(i)).collect())
}

pub fn minimal_right_ideals(r: &FiniteRing, limits: &Limits) -> Result<Vec<RightIdeal>> {
    let l = right_ideal_lattice(r, limits)?;
    Ok(l.minimal_ids().map(|i| l.right_ideal(i)).collect())
}

fn intersect_all(r: &FiniteRing, sets: impl Iterator<Item = ElementSubset>) -> ElementSubset {
    sets.fold(r.full_set(), |mut acc, s| {
        acc.intersect_with(&s);
        acc
    })
}

fn sum_all(r: &FiniteRing, sets: impl Iterator<Item = ElementSubset>) -> ElementSubset {
    sets.fold(r.zero_set(), |acc, s| r.subgroup_sum(&acc, &s))
}

/// `Soc(R_R)`, the sum of the minimal right ideals.
pub fn socle(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    if !uses_lattice(r, limits) {
        return Ok(socle_from_cyclic(r));
    }
    let l = right_ideal_lattice(r, limits)?;
    Ok(RightIdeal::new_unchecked(sum_all(r, l.minimal_ids().map(|i| l.ideal(i).clone()))))
}

/// `Soc(R_R)` from the cyclic right ideals alone: a cyclic ideal `aR` is
/// minimal exactly when every nonzero `y ∈ aR` generates all of it.
pub fn socle_from_cyclic(r: &FiniteRing) -> RightIdeal {
    let cyc: Vec<RightIdeal> = r.elements().map(|a| r.cyclic_right_ideal(a)).collect();
    let size: Vec<usize> = cyc.iter().map(|c| c.len()).collect();
    let mut soc = r.zero_set();
    for a in r.elements() {
        if a == r.zero() || cyc[a.idx()].is_subset(&soc) {
            continue;
        }
        let c = &cyc[a.idx()];
        if c.iter().all(|y| y == r.zero() || size[y.idx()] == size[a.idx()]) {
            soc = r.subgroup_sum(&soc, c);
        }
    }
    RightIdeal::new_unchecked(soc)
}

/// `J(R)`, the intersection of the maximal right ideals.
pub fn jacobson(r: &FiniteRing, limits: &Limits) -> Result<TwoSidedIdeal> {
    if !uses_lattice(r, limits) {
        return jacobson_quasi_regular(r);
    }
    let l = right_ideal_lattice(r, limits)?;
    let j = intersect_all(r, l.maximal_ids().map(|i| l.ideal(i).clone()));
    r.as_two_sided(&j)
}

/// `J(R) = {x : 1 + xr is a unit for every r}` (needs an identity).
pub fn jacobson_quasi_regular(r: &FiniteRing) -> Result<TwoSidedIdeal> {
    let one = r.unit()?;
    let n = r.order();
    // In a finite ring a one-sided inverse is two-sided.
    let mut unit = vec![false; n];
    for x in r.elements() {
        if unit[x.idx()] {
            continue;
        }
        if let Some(y) = r.elements().find(|&y| r.mul(x, y) == one) {
            unit[x.idx()] = true;
            unit[y.idx()] = true;
        }
    }
    let j = ElementSubset::from_predicate(n, |x| r.elements().all(|y| unit[r.add(one, r.mul(x, y)).idx()]));
    r.as_two_sided(&j)
}

/// `δ(R)`: route (1) over the lattice, or the quasi-regular socle lift for
/// unital rings above [`Limits::lattice_order`].
pub fn delta(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    if uses_lattice(r, limits) {
        delta_via_essential_maximal(r, limits)
    } else {
        delta_quasi_regular(r)
    }
}

/// Route (1): intersection of the essential maximal right ideals.
pub fn delta_via_essential_maximal(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    let l = right_ideal_lattice(r, limits)?;
    let d = intersect_all(r, l.maximal_ids().filter(|&i| l.is_essential(i)).map(|i| l.ideal(i).clone()));
    Ok(RightIdeal::new_unchecked(d))
}

/// Route (3): `x ∈ δ(R)` iff every right ideal `K` with `xR + K = R` is a direct summand.
pub fn delta_via_summand(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    let l = right_ideal_lattice(r, limits)?;
    let full = l.full_id();
    let d = ElementSubset::from_predicate(r.order(), |x| {
        (0..l.len()).all(|k| l.sum_with_cyclic(k, x) != full || l.is_direct_summand(k))
    });
    Ok(RightIdeal::new_unchecked(d))
}

/// Route (5): `x ∈ δ(R)` iff for every `y`, `(1 + xy)R` has a semisimple complement.
pub fn delta_via_semisimple_complement(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    let one = r.unit()?;
    let l = right_ideal_lattice(r, limits)?;
    let d = ElementSubset::from_predicate(r.order(), |x| {
        r.elements().all(|y| l.has_semisimple_complement(l.cyclic_id(r.add(one, r.mul(x, y)))))
    });
    Ok(RightIdeal::new_unchecked(d))
}

/// Preimage of `J(R/Soc(R_R))` under the projection, with both factors over lattices.
pub fn delta_via_socle_lift(r: &FiniteRing, limits: &Limits) -> Result<RightIdeal> {
    let l = right_ideal_lattice(r, limits)?;
    let soc = sum_all(r, l.minimal_ids().map(|i| l.ideal(i).clone()));
    let q = quotient(r, &r.as_two_sided(&soc)?)?;
    let ql = RightIdealLattice::build(&q.ring, limits.lattice_cap)?;
    let j = intersect_all(&q.ring, ql.maximal_ids().map(|i| ql.ideal(i).clone()));
    Ok(RightIdeal::new_unchecked(q.preimage(&j)))
}

/// Lattice-free socle lift: minimal cyclic ideals for the socle and
/// quasi-regularity for the Jacobson radical of the quotient.
pub fn delta_quasi_regular(r: &FiniteRing) -> Result<RightIdeal> {
    let soc = socle_from_cyclic(r);
    let q = quotient(r, &r.as_two_sided(&soc)?)?;
    let j = jacobson_quasi_regular(&q.ring)?;
    Ok(RightIdeal::new_unchecked(q.preimage(&j)))
}

/// `N` is δ-small: `N + K ≠ R` for every proper essential right ideal `K`.
pub fn is_delta_small(r: &FiniteRing, n: &ElementSubset, limits: &Limits) -> Result<bool> {
    let l = right_ideal_lattice(r, limits)?;
    let order = r.order();
    let small = l
        .essential_ids()
        .filter(|&k| l.is_proper(k))
        .all(|k| n.len() * l.size(k) != order * n.intersection_count(l.ideal(k)));
    Ok(small)
}

/// `δ(I)` for a right ideal `I` viewed as a right module: the intersection of
/// the maximal submodules of `I` that are essential in `I`, or `I` when none exist.
pub fn delta_of_right_ideal_as_module(r: &FiniteRing, i: &ElementSubset, limits: &Limits) -> Result<ElementSubset> {
    let l = right_ideal_lattice(r, limits)?;
    let top = l.id_of(i).ok_or_else(|| Error::Invalid("subset is not a right ideal".into()))?;
    let inside: Vec<usize> = l.generators().iter().copied().filter(|&g| g != 0 && l.ideal(g).is_subset(i)).collect();
    let mut d = i.clone();
    for m in (0..l.len()).filter(|&m| m != top && l.ideal(m).is_subset(i)) {
        let maximal = inside.iter().all(|&g| {
            let s = l.sum_with_generator(m, g);
            s == m || s == top
        });
        let essential = inside.iter().all(|&g| l.ideal(m).intersection_count(l.ideal(g)) > 1);
        if maximal && essential {
            d.intersect_with(l.ideal(m));
        }
    }
    Ok(d)
}

/// First `a ∉ I` with `aRa ⊆ I`, if any.
pub fn semiprime_witness(r: &FiniteRing, i: &ElementSubset) -> Option<Elem> {
    r.elements()
        .filter(|&a| !i.contains(a))
        .find(|&a| r.elements().all(|x| i.contains(r.mul3(a, x, a))))
}

/// `aRa ⊆ I` implies `a ∈ I`.
pub fn is_semiprime_ideal(r: &FiniteRing, i: &TwoSidedIdeal) -> bool {
    semiprime_witness(r, i).is_none()
}

/// Some right ideal `L` satisfies `K + L = R` and `K ∩ L = 0`.
pub fn is_direct_summand(r: &FiniteRing, k: &ElementSubset, limits: &Limits) -> Result<bool> {
    let l = right_ideal_lattice(r, limits)?;
    let id = l.id_of(k).ok_or_else(|| Error::Invalid("subset is not a right ideal".into()))?;
    Ok(l.is_direct_summand(id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_full, matrix_upper, zmod};

    const L: Limits = Limits::DEFAULT;

    fn gen(r: &FiniteRing, a: u32) -> ElementSubset {
        r.cyclic_right_ideal(Elem(a)).into_subset()
    }

    fn ints(s: &ElementSubset) -> Vec<u32> {
        s.iter().map(|e| e.0).collect()
    }

    #[test]
    fn z16() {
        let z = zmod(16, &L).unwrap();
        let d = delta(&z, &L).unwrap();
        assert_eq!(ints(&d), [0, 2, 4, 6, 8, 10, 12, 14]);
        assert_eq!(ints(&delta_of_right_ideal_as_module(&z, &gen(&z, 4), &L).unwrap()), [0, 8]);
        assert_eq!(ints(&socle(&z, &L).unwrap()), [0, 8]);
        assert!(is_delta_small(&z, &d, &L).unwrap());
        let four = z.as_two_sided(&gen(&z, 4)).unwrap();
        assert_eq!(semiprime_witness(&z, &four), Some(Elem(2)));
        assert!(is_semiprime_ideal(&z, &z.as_two_sided(&d).unwrap()));
    }

    #[test]
    fn z12() {
        let z = zmod(12, &L).unwrap();
        assert!(is_essential(&z, &gen(&z, 2)));
        assert!(!is_essential(&z, &gen(&z, 3)));
        assert!(is_direct_summand(&z, &gen(&z, 4), &L).unwrap());
        assert_eq!(ints(&socle(&z, &L).unwrap()), [0, 2, 4, 6, 8, 10]);
        let d = delta(&z, &L).unwrap();
        assert_eq!(ints(&d), [0, 2, 4, 6, 8, 10]);
        for route in [delta_via_summand, delta_via_semisimple_complement, delta_via_socle_lift] {
            assert_eq!(route(&z, &L).unwrap(), d);
        }
        assert!(is_delta_small(&z, &gen(&z, 4), &L).unwrap());
        // 6Z₁₂ is simple: no essential maximal submodule, so δ is the module itself.
        assert_eq!(ints(&delta_of_right_ideal_as_module(&z, &gen(&z, 6), &L).unwrap()), [0, 6]);
        assert_eq!(ints(&delta_of_right_ideal_as_module(&z, &z.zero_set(), &L).unwrap()), [0]);
    }

    #[test]
    fn small_rings() {
        let z4 = zmod(4, &L).unwrap();
        assert_eq!(ints(&jacobson(&z4, &L).unwrap()), [0, 2]);
        assert!(!is_delta_small(&z4, &z4.full_set(), &L).unwrap());
        let z2 = zmod(2, &L).unwrap();
        assert!(delta(&z2, &L).unwrap().is_full());
        let m = matrix_full(2, &z2, &L).unwrap();
        assert!(delta(&m, &L).unwrap().is_full());
        assert_eq!(jacobson(&m, &L).unwrap().len(), 1);
        assert!(delta_via_summand(&m, &L).unwrap().is_full());
        let u = matrix_upper(2, &z2, &L).unwrap();
        let d = delta(&u, &L).unwrap();
        let mut labels = u.labels_of(&d);
        labels.sort();
        assert_eq!(labels, ["[[0,0],[0,0]]", "[[0,0],[0,1]]", "[[0,1],[0,0]]", "[[0,1],[0,1]]"]);
        assert_eq!(delta_quasi_regular(&u).unwrap(), d);
    }
}
