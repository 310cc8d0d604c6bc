use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::radicals;
use crate::ring::{Coords, FiniteRing, Limits, RingParts, Shape};
use crate::subset::{ElementSubset, TwoSidedIdeal};

use super::builder::{hashed_index, Carrier};

/// A quotient ring `R/I` together with the projection from `R`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// `projection[x]` is the coset of `x`.
    pub projection: Vec<Elem>,
    /// Smallest-index representative of each coset.
    pub representatives: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x.idx()]
    }

    pub fn image(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_elems(self.ring.order(), s.iter().map(|x| self.project(x)))
    }

    pub fn preimage(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_predicate(self.projection.len(), |x| s.contains(self.project(x)))
    }
}

/// A subring together with its inclusion into the parent ring.
#[derive(Debug, Clone)]
pub struct Subring {
    pub ring: FiniteRing,
    /// `embedding[x]` is the parent element corresponding to `x`.
    pub embedding: Vec<Elem>,
    parent_order: usize,
}

impl Subring {
    pub fn embed(&self, x: Elem) -> Elem {
        self.embedding[x.idx()]
    }

    /// The carrier as a subset of the parent.
    pub fn carrier(&self) -> ElementSubset {
        ElementSubset::from_elems(self.parent_order, self.embedding.iter().copied())
    }

    pub fn image(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_elems(self.parent_order, s.iter().map(|x| self.embed(x)))
    }

    /// Elements of the subring whose image lies in `s`.
    pub fn pullback(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_predicate(self.ring.order(), |x| s.contains(self.embed(x)))
    }
}

/// The coset ring `R/I`.
pub fn quotient(r: &FiniteRing, ideal: &TwoSidedIdeal) -> Result<Quotient> {
    let n = r.order();
    let members: Vec<Elem> = ideal.iter().collect();
    let mut projection = vec![Elem(u32::MAX); n];
    let mut reps = Vec::new();
    for x in r.elements() {
        if projection[x.idx()].0 != u32::MAX {
            continue;
        }
        let k = Elem::from_idx(reps.len());
        reps.push(x);
        for &i in &members {
            projection[r.add(x, i).idx()] = k;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(projection[r.add(a, b).idx()]);
            mul.push(projection[r.mul(a, b).idx()]);
        }
    }
    let forms: Vec<Form> = reps.iter().map(|&x| r.form(x).clone()).collect();
    let labels = reps.iter().map(|&x| r.label(x).to_string()).collect();
    let aliases = r.elements().map(|x| (r.form(x).clone(), projection[x.idx()])).collect();
    let ring = FiniteRing::assemble(RingParts {
        order: m,
        add,
        mul,
        one: r.one().map(|o| projection[o.idx()]),
        forms,
        labels: Some(labels),
        coords: None,
        aliases,
    })?;
    Ok(Quotient { ring, projection, representatives: reps })
}

/// The subring on `carrier`, with identity `one` when given.
pub fn subring(r: &FiniteRing, carrier: &ElementSubset, one: Option<Elem>) -> Result<Subring> {
    let elems: Vec<Elem> = carrier.iter().collect();
    if !carrier.contains(r.zero()) {
        return Err(Error::Invalid("subring carrier must contain zero".into()));
    }
    if let Some(o) = one {
        if !carrier.contains(o) {
            return Err(Error::Invalid("subring identity lies outside the carrier".into()));
        }
    }
    let mut pos = vec![u32::MAX; r.order()];
    for (k, &x) in elems.iter().enumerate() {
        pos[x.idx()] = k as u32;
    }
    let m = elems.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            for (table, v) in [(&mut add, r.add(a, b)), (&mut mul, r.mul(a, b))] {
                let p = pos[v.idx()];
                if p == u32::MAX {
                    return Err(Error::Invalid(format!(
                        "subset is not closed: {} and {} give {}",
                        r.label(a),
                        r.label(b),
                        r.label(v)
                    )));
                }
                table.push(Elem(p));
            }
        }
    }
    let coords = r.coords().map(|c| {
        let data = elems.iter().flat_map(|&x| c.of(x).iter().copied()).collect();
        Coords::new(c.shape, data)
    });
    let ring = FiniteRing::assemble(RingParts {
        order: m,
        add,
        mul,
        one: one.map(|o| Elem(pos[o.idx()])),
        forms: elems.iter().map(|&x| r.form(x).clone()).collect(),
        labels: Some(elems.iter().map(|&x| r.label(x).to_string()).collect()),
        coords,
        aliases: Vec::new(),
    })?;
    Ok(Subring { ring, embedding: elems, parent_order: r.order() })
}

/// The corner ring `eRe`, with identity `e`.
pub fn corner(r: &FiniteRing, e: Elem) -> Result<Subring> {
    if e == r.zero() {
        return Err(Error::NotIdempotent(format!("{} (zero)", r.label(e))));
    }
    r.check_idempotent(e)?;
    let carrier = ElementSubset::from_elems(r.order(), r.elements().map(|x| r.mul3(e, x, e)));
    subring(r, &carrier, Some(e))
}

/// `S = {(r, s) ∈ R × R : r − s ∈ δ(R)}`.
pub fn pair_subring_s(r: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let d = radicals::delta(r, limits)?;
    let mut elements = Vec::new();
    for a in r.elements() {
        for dd in d.iter() {
            elements.push(vec![a, r.sub(a, dd)]);
        }
    }
    elements.sort();
    let index = hashed_index(&elements);
    Carrier {
        shape: Shape::Tuple(2),
        elements,
        index,
        add: Box::new(|a, b, out| out.extend([r.add(a[0], b[0]), r.add(a[1], b[1])])),
        mul: Box::new(|a, b, out| out.extend([r.mul(a[0], b[0]), r.mul(a[1], b[1])])),
        one: r.one().map(|o| vec![o, o]),
        form: Box::new(|c| Form::Tuple(vec![r.form(c[0]).clone(), r.form(c[1]).clone()])),
        aliases: Vec::new(),
    }
    .build(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_full, matrix_upper, zmod};

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn quotients() {
        let z16 = zmod(16, &L).unwrap();
        let two = z16.two_sided_closure(&ElementSubset::from_elems(16, [Elem(2)]));
        let q = quotient(&z16, &two).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(q.ring.parse_elem("7").unwrap(), q.ring.one().unwrap());
        let all = z16.two_sided_closure(&z16.full_set());
        let zero = quotient(&z16, &all).unwrap();
        assert_eq!(zero.ring.order(), 1);
    }

    #[test]
    fn corners() {
        let z4 = zmod(4, &L).unwrap();
        let m = matrix_full(2, &z4, &L).unwrap();
        let e11 = m.parse_elem("[[1,0],[0,0]]").unwrap();
        let c = corner(&m, e11).unwrap();
        assert_eq!(c.ring.order(), 4);
        assert_eq!(c.ring.characteristic(), Some(4));
        let z2 = zmod(2, &L).unwrap();
        let u = matrix_upper(2, &z2, &L).unwrap();
        let e22 = u.parse_elem("[[0,0],[0,1]]").unwrap();
        assert_eq!(corner(&u, e22).unwrap().ring.order(), 2);
        assert_eq!(corner(&u, u.one().unwrap()).unwrap().ring.order(), 8);
        let e12 = u.parse_elem("[[0,1],[0,0]]").unwrap();
        assert!(matches!(corner(&u, e12), Err(Error::NotIdempotent(_))));
        assert!(matches!(corner(&u, u.zero()), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn non_subring_is_rejected() {
        let z4 = zmod(4, &L).unwrap();
        let s = ElementSubset::from_elems(4, [Elem(0), Elem(1)]);
        assert!(subring(&z4, &s, None).is_err());
    }
}
