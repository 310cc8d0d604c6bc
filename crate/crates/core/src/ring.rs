//! Finite rings given by operation tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::element::{Elem, Form};
use crate::error::{Axiom, Error, Result};
use crate::radicals::lattice::RightIdealLattice;
use crate::subset::{ElementSubset, LeftIdeal, RightIdeal, TwoSidedIdeal};

/// Resource limits shared by constructions, lattice enumeration and predicate loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order that may be materialized.
    pub max_order: usize,
    /// Largest number of right ideals enumerated before giving up.
    pub lattice_cap: usize,
    /// Unital rings above this order use the quasi-regularity routes for `J` and `δ`
    /// instead of enumerating the right-ideal lattice.
    pub lattice_order: usize,
    /// Loop bound `|R|^k` allowed for ordinary predicate evaluation.
    pub budget: u128,
    /// Loop bound for the five-quantifier `weakly_symmetric` predicate.
    pub deep_budget: u128,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_order: 4096,
        lattice_cap: 1 << 20,
        lattice_order: 256,
        budget: 1 << 27,
        deep_budget: 1 << 25,
    };

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    /// Fails with [`Error::CapExceeded`] when `order` is above `max_order`.
    pub fn check_order(&self, order: u128) -> Result<usize> {
        if order == 0 || order > self.max_order as u128 {
            return Err(Error::CapExceeded { order, cap: self.max_order });
        }
        Ok(order as usize)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

/// Layout of the per-element coordinate vectors of a structured ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Tuple of components (products, Dorroh pairs, group-ring coefficients).
    Tuple(usize),
    /// Matrix with entries in a base ring, stored row-major.
    Matrix { rows: usize, cols: usize },
}

impl Shape {
    pub fn arity(self) -> usize {
        match self {
            Shape::Tuple(k) => k,
            Shape::Matrix { rows, cols } => rows * cols,
        }
    }
}

/// Decoded coordinates of every element: flat storage of `arity` indices per element.
#[derive(Debug, Clone)]
pub struct Coords {
    pub shape: Shape,
    data: Vec<Elem>,
}

impl Coords {
    pub fn new(shape: Shape, data: Vec<Elem>) -> Self {
        Coords { shape, data }
    }

    pub fn of(&self, e: Elem) -> &[Elem] {
        let k = self.shape.arity();
        &self.data[e.idx() * k..(e.idx() + 1) * k]
    }
}

/// Raw ingredients of a ring before verification.
pub struct RingParts {
    pub order: usize,
    pub add: Vec<Elem>,
    pub mul: Vec<Elem>,
    pub one: Option<Elem>,
    pub forms: Vec<Form>,
    pub labels: Option<Vec<String>>,
    pub coords: Option<Coords>,
    /// Extra literal spellings resolving to elements (e.g. every representative of a coset).
    pub aliases: Vec<(Form, Elem)>,
}

/// A finite associative ring, possibly without identity, given by verified tables.
///
/// `one` is `None` for non-unital rings; operations needing an identity
/// return [`Error::NotUnital`] on those.
pub struct FiniteRing {
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Option<Elem>,
    char: Option<u64>,
    forms: Vec<Form>,
    labels: Vec<String>,
    lookup: HashMap<Form, Elem>,
    coords: Option<Coords>,
    add_gens: Vec<Elem>,
    name: Option<String>,
    lattice: OnceLock<Result<Arc<RightIdealLattice>>>,
}

/// Alias kept for signatures that accept rings without identity.
pub type NonunitalFiniteRing = FiniteRing;

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("unital", &self.one.is_some())
            .finish()
    }
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            order: self.order,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            char: self.char,
            forms: self.forms.clone(),
            labels: self.labels.clone(),
            lookup: self.lookup.clone(),
            coords: self.coords.clone(),
            add_gens: self.add_gens.clone(),
            name: self.name.clone(),
            lattice: OnceLock::new(),
        }
    }
}

/// Builds a ring from raw tables, exhaustively validating every ring law.
///
/// `add` and `mul` are row-major `n × n` tables of element indices. Without
/// `one` the result is a non-unital ring.
pub fn build_table_ring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    one: Option<usize>,
    labels: Option<Vec<String>>,
) -> Result<FiniteRing> {
    let n = add.len();
    if n == 0 {
        return Err(Error::Shape("ring must have at least one element".into()));
    }
    if mul.len() != n {
        return Err(Error::Shape(format!("add has {n} rows but mul has {}", mul.len())));
    }
    let mut flat_add = Vec::with_capacity(n * n);
    let mut flat_mul = Vec::with_capacity(n * n);
    for (name, table, flat) in [("add", add, &mut flat_add), ("mul", mul, &mut flat_mul)] {
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("{name} row {i} has {} entries, expected {n}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::Shape(format!("{name} entry {x} out of range in row {i}")));
                }
                flat.push(Elem::from_idx(x));
            }
        }
    }
    if let Some(o) = one {
        if o >= n {
            return Err(Error::Shape(format!("identity index {o} out of range")));
        }
    }
    if let Some(l) = &labels {
        if l.len() != n {
            return Err(Error::Shape(format!("{} labels for {n} elements", l.len())));
        }
    }
    let forms = match &labels {
        Some(l) => l.iter().map(|s| Form::parse(s).unwrap_or_else(|_| Form::Sym(s.clone()))).collect(),
        None => (0..n).map(|i| Form::Int(i as i64)).collect(),
    };
    FiniteRing::assemble(RingParts {
        order: n,
        add: flat_add,
        mul: flat_mul,
        one: one.map(Elem::from_idx),
        forms,
        labels,
        coords: None,
        aliases: Vec::new(),
    })
}

impl FiniteRing {
    /// Verifies the parts and produces a ring. All axioms are checked.
    pub fn assemble(parts: RingParts) -> Result<FiniteRing> {
        let n = parts.order;
        if parts.add.len() != n * n || parts.mul.len() != n * n || parts.forms.len() != n {
            return Err(Error::Shape("table sizes disagree with order".into()));
        }
        let checked = verify_tables(n, &parts.add, &parts.mul, parts.one)?;
        let labels = parts
            .labels
            .unwrap_or_else(|| parts.forms.iter().map(|f| f.to_string()).collect());
        let mut lookup = HashMap::with_capacity(n + parts.aliases.len());
        for (f, e) in parts.aliases {
            lookup.insert(f, e);
        }
        for (i, f) in parts.forms.iter().enumerate() {
            lookup.insert(f.clone(), Elem::from_idx(i));
        }
        let mut ring = FiniteRing {
            order: n,
            add: parts.add,
            mul: parts.mul,
            neg: checked.neg,
            zero: checked.zero,
            one: parts.one,
            char: None,
            forms: parts.forms,
            labels,
            lookup,
            coords: parts.coords,
            add_gens: checked.add_gens,
            name: None,
            lattice: OnceLock::new(),
        };
        if let Some(one) = ring.one {
            let mut k = 1u64;
            let mut x = one;
            while x != ring.zero {
                x = ring.add(x, one);
                k += 1;
            }
            ring.char = Some(k);
        }
        Ok(ring)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    pub fn unit(&self) -> Result<Elem> {
        self.one.ok_or(Error::NotUnital)
    }

    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    /// Additive order of the identity (`None` for non-unital rings).
    pub fn characteristic(&self) -> Option<u64> {
        self.char
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a.idx() * self.order + b.idx()]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a.idx() * self.order + b.idx()]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a.idx()]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    /// `k·a` for an integer `k` (negative values use the additive inverse).
    pub fn smul(&self, k: i64, a: Elem) -> Elem {
        let base = if k < 0 { self.neg(a) } else { a };
        let mut acc = self.zero;
        let mut p = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, p);
            }
            p = self.add(p, p);
            k >>= 1;
        }
        acc
    }

    /// `a^k` for `k ≥ 1` (and `k = 0` in unital rings).
    pub fn pow(&self, a: Elem, k: u64) -> Result<Elem> {
        if k == 0 {
            return self.unit();
        }
        let mut acc: Option<Elem> = None;
        let mut p = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => p,
                    Some(x) => self.mul(x, p),
                });
            }
            p = self.mul(p, p);
            k >>= 1;
        }
        Ok(acc.expect("k >= 1"))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().filter(|b| *b > a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn form(&self, e: Elem) -> &Form {
        &self.forms[e.idx()]
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.idx()]
    }

    /// Explicitly supplied labels (for the ring-table file format).
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elem_from_form(&self, form: &Form) -> Option<Elem> {
        self.lookup.get(form).copied()
    }

    /// Resolves an element literal in this ring's structured notation.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let form = Form::parse(text)?;
        self.resolve_form(&form).ok_or_else(|| Error::UnknownElement(text.trim().to_string()))
    }

    /// [`Self::elem_from_form`], also reading an integer as that multiple of the
    /// identity in rings whose elements are not written as integers.
    pub fn resolve_form(&self, form: &Form) -> Option<Elem> {
        self.elem_from_form(form).or_else(|| match (form, self.one) {
            (Form::Int(k), Some(one)) if !matches!(self.form(self.zero()), Form::Int(_)) => Some(self.smul(*k, one)),
            _ => None,
        })
    }

    pub fn coords(&self) -> Option<&Coords> {
        self.coords.as_ref()
    }

    pub fn coords_of(&self, e: Elem) -> Option<&[Elem]> {
        self.coords.as_ref().map(|c| c.of(e))
    }

    /// Entry `(i, j)` of a matrix-shaped element, as an index into the base ring.
    pub fn entry(&self, e: Elem, i: usize, j: usize) -> Option<Elem> {
        let c = self.coords.as_ref()?;
        match c.shape {
            Shape::Matrix { rows, cols } if i < rows && j < cols => Some(c.of(e)[i * cols + j]),
            _ => None,
        }
    }

    /// Generators of the additive group found during verification.
    pub fn additive_generators(&self) -> &[Elem] {
        &self.add_gens
    }

    pub fn labels_of(&self, set: &ElementSubset) -> Vec<String> {
        set.iter().map(|e| self.label(e).to_string()).collect()
    }

    pub fn raw_add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn raw_mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub(crate) fn lattice_cell(&self) -> &OnceLock<Result<Arc<RightIdealLattice>>> {
        &self.lattice
    }

    pub fn full_set(&self) -> ElementSubset {
        ElementSubset::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSubset {
        ElementSubset::from_elems(self.order, [self.zero])
    }

    /// Returns `e` when it is a nonzero idempotent, and an error otherwise.
    pub fn check_idempotent(&self, e: Elem) -> Result<Elem> {
        if self.mul(e, e) != e {
            return Err(Error::NotIdempotent(self.label(e).to_string()));
        }
        Ok(e)
    }

    // ----- distinguished element sets -----

    /// Elements whose power sequence reaches zero.
    pub fn nilpotent_elements(&self) -> ElementSubset {
        let n = self.order;
        let mut stamp = vec![u32::MAX; n];
        ElementSubset::from_predicate(n, |a| {
            let mut p = a;
            for _ in 0..n {
                if p == self.zero {
                    return true;
                }
                if stamp[p.idx()] == a.0 {
                    return false;
                }
                stamp[p.idx()] = a.0;
                p = self.mul(p, a);
            }
            p == self.zero
        })
    }

    /// Least `k ≥ 1` with `a^k = 0`, if any.
    pub fn nilpotency_index(&self, a: Elem) -> Option<u64> {
        let mut p = a;
        for k in 1..=self.order as u64 {
            if p == self.zero {
                return Some(k);
            }
            p = self.mul(p, a);
        }
        None
    }

    pub fn idempotent_elements(&self) -> ElementSubset {
        ElementSubset::from_predicate(self.order, |e| self.mul(e, e) == e)
    }

    /// Nonzero idempotents in index order.
    pub fn nonzero_idempotents(&self) -> Vec<Elem> {
        self.idempotent_elements().iter().filter(|&e| e != self.zero).collect()
    }

    pub fn units(&self) -> Result<ElementSubset> {
        let one = self.unit()?;
        Ok(ElementSubset::from_predicate(self.order, |x| {
            self.elements().any(|y| self.mul(x, y) == one && self.mul(y, x) == one)
        }))
    }

    /// Two-sided inverse of `x`, if it exists.
    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        let one = self.one?;
        self.elements().find(|&y| self.mul(x, y) == one && self.mul(y, x) == one)
    }

    pub fn center(&self) -> ElementSubset {
        ElementSubset::from_predicate(self.order, |c| {
            self.elements().all(|r| self.mul(c, r) == self.mul(r, c))
        })
    }

    pub fn is_central(&self, c: Elem) -> bool {
        self.elements().all(|r| self.mul(c, r) == self.mul(r, c))
    }

    // ----- ideals -----

    /// The right ideal generated by `a`: `aR` for unital rings, the closure of `{a}` otherwise.
    pub fn cyclic_right_ideal(&self, a: Elem) -> RightIdeal {
        if self.one.is_some() {
            let set = ElementSubset::from_elems(self.order, self.elements().map(|r| self.mul(a, r)));
            RightIdeal::new_unchecked(set)
        } else {
            self.right_ideal_closure(&ElementSubset::from_elems(self.order, [a]))
        }
    }

    pub fn cyclic_left_ideal(&self, a: Elem) -> LeftIdeal {
        if self.one.is_some() {
            let set = ElementSubset::from_elems(self.order, self.elements().map(|r| self.mul(r, a)));
            LeftIdeal::new_unchecked(set)
        } else {
            self.left_ideal_closure(&ElementSubset::from_elems(self.order, [a]))
        }
    }

    /// Smallest right ideal containing `s`.
    pub fn right_ideal_closure(&self, s: &ElementSubset) -> RightIdeal {
        RightIdeal::new_unchecked(self.closure(s, true, false))
    }

    pub fn left_ideal_closure(&self, s: &ElementSubset) -> LeftIdeal {
        LeftIdeal::new_unchecked(self.closure(s, false, true))
    }

    pub fn two_sided_closure(&self, s: &ElementSubset) -> TwoSidedIdeal {
        TwoSidedIdeal::new_unchecked(self.closure(s, true, true))
    }

    /// Smallest additive subgroup containing `s`.
    pub fn additive_closure(&self, s: &ElementSubset) -> ElementSubset {
        self.closure(s, false, false)
    }

    // Worklist closure: each element that enlarges the subgroup queues its
    // products with every ring element on the requested sides.
    fn closure(&self, s: &ElementSubset, right: bool, left: bool) -> ElementSubset {
        let mut set = self.zero_set();
        let mut members = vec![self.zero];
        let mut pending: Vec<Elem> = s.iter().collect();
        while let Some(x) = pending.pop() {
            if set.contains(x) {
                continue;
            }
            self.extend_subgroup(&mut set, &mut members, x);
            for r in self.elements() {
                if right {
                    let y = self.mul(x, r);
                    if !set.contains(y) {
                        pending.push(y);
                    }
                }
                if left {
                    let y = self.mul(r, x);
                    if !set.contains(y) {
                        pending.push(y);
                    }
                }
            }
        }
        set
    }

    /// Grows the subgroup `set` (listed in `members`) to the one generated with `x`.
    pub(crate) fn extend_subgroup(&self, set: &mut ElementSubset, members: &mut Vec<Elem>, x: Elem) {
        let base = members.len();
        let mut y = x;
        while !set.contains(y) {
            for k in 0..base {
                let z = self.add(members[k], y);
                set.insert(z);
                members.push(z);
            }
            y = self.add(y, x);
        }
    }

    /// Sum `{i + j}` of two subsets.
    pub fn subset_sum(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let bs: Vec<Elem> = b.iter().collect();
        let mut out = ElementSubset::empty(self.order);
        for i in a.iter() {
            for &j in &bs {
                out.insert(self.add(i, j));
            }
        }
        out
    }

    /// Sum of two additive subgroups, computed by coset extension.
    pub fn subgroup_sum(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let mut set = a.clone();
        let mut members = a.to_vec();
        for x in b.iter() {
            if !set.contains(x) {
                self.extend_subgroup(&mut set, &mut members, x);
            }
        }
        set
    }

    pub fn subset_intersect(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        a.intersect(b)
    }

    /// `{x·y : x ∈ a, y ∈ b}` (the set of products, not the ideal product).
    pub fn product_set(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let bs: Vec<Elem> = b.iter().collect();
        let mut out = ElementSubset::empty(self.order);
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn is_additive_subgroup(&self, s: &ElementSubset) -> bool {
        s.contains(self.zero)
            && s.iter().all(|x| s.contains(self.neg(x)) && s.iter().all(|y| s.contains(self.add(x, y))))
    }

    pub fn is_right_ideal(&self, s: &ElementSubset) -> bool {
        self.is_additive_subgroup(s) && s.iter().all(|x| self.elements().all(|r| s.contains(self.mul(x, r))))
    }

    pub fn is_left_ideal(&self, s: &ElementSubset) -> bool {
        self.is_additive_subgroup(s) && s.iter().all(|x| self.elements().all(|r| s.contains(self.mul(r, x))))
    }

    pub fn is_two_sided(&self, s: &ElementSubset) -> bool {
        self.is_right_ideal(s) && s.iter().all(|x| self.elements().all(|r| s.contains(self.mul(r, x))))
    }

    pub fn as_right_ideal(&self, s: &ElementSubset) -> Option<RightIdeal> {
        self.is_right_ideal(s).then(|| RightIdeal::new_unchecked(s.clone()))
    }

    pub fn as_two_sided(&self, s: &ElementSubset) -> Result<TwoSidedIdeal> {
        if self.is_two_sided(s) {
            Ok(TwoSidedIdeal::new_unchecked(s.clone()))
        } else {
            Err(Error::NotTwoSided)
        }
    }

    /// The set of elements `x·e` for a fixed `e` and `x` ranging over `s`.
    pub fn right_translate(&self, s: &ElementSubset, e: Elem) -> ElementSubset {
        ElementSubset::from_elems(self.order, s.iter().map(|x| self.mul(x, e)))
    }

    pub fn left_translate(&self, e: Elem, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_elems(self.order, s.iter().map(|x| self.mul(e, x)))
    }

    /// The opposite ring, with multiplication `a ∘ b = b·a` on the same carrier.
    pub fn opposite(&self) -> FiniteRing {
        let n = self.order;
        let mut mul = vec![Elem(0); n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        FiniteRing {
            order: n,
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            char: self.char,
            forms: self.forms.clone(),
            labels: self.labels.clone(),
            lookup: self.lookup.clone(),
            coords: self.coords.clone(),
            add_gens: self.add_gens.clone(),
            name: self.name.as_ref().map(|s| format!("op({s})")),
            lattice: OnceLock::new(),
        }
    }

    /// Labels of a subset, formatted as `{a,b,…}`.
    pub fn format_set(&self, s: &ElementSubset) -> String {
        let mut out = String::from("{");
        for (i, e) in s.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(self.label(e));
        }
        out.push('}');
        out
    }
}

struct Checked {
    zero: Elem,
    neg: Vec<Elem>,
    add_gens: Vec<Elem>,
}

fn violation(axiom: Axiom, w: &[usize]) -> Error {
    Error::AxiomViolation { axiom, witness: w.iter().map(|&i| Elem::from_idx(i)).collect() }
}

// Complete axiom check in O(n² log n): associativity and distributivity are
// verified on a magma generating set of (R, +), which implies the laws for all
// triples (Light's test for addition, additivity of translations and
// trilinearity for multiplication).
fn verify_tables(n: usize, add: &[Elem], mul: &[Elem], one: Option<Elem>) -> Result<Checked> {
    let a = |x: usize, y: usize| add[x * n + y].idx();
    let m = |x: usize, y: usize| mul[x * n + y].idx();

    let z = (0..n)
        .find(|&c| a(0, c) == 0)
        .filter(|&c| (0..n).all(|x| a(c, x) == x && a(x, c) == x))
        .ok_or_else(|| violation(Axiom::AdditiveIdentity, &[]))?;

    for x in 0..n {
        for y in x + 1..n {
            if a(x, y) != a(y, x) {
                return Err(violation(Axiom::AdditiveCommutativity, &[x, y]));
            }
        }
    }

    let mut neg = vec![Elem(0); n];
    for x in 0..n {
        let y = (0..n).find(|&y| a(x, y) == z).ok_or_else(|| violation(Axiom::AdditiveInverse, &[x]))?;
        neg[x] = Elem::from_idx(y);
    }

    // Greedy magma generating set of (R, +).
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            if inside[y] {
                continue;
            }
            inside[y] = true;
            members.push(y);
            for k in 0..members.len() {
                let w = members[k];
                for s in [a(w, y), a(y, w)] {
                    if !inside[s] {
                        queue.push(s);
                    }
                }
            }
        }
    }

    for &s in &gens {
        for x in 0..n {
            let xs = a(x, s);
            for y in 0..n {
                if a(xs, y) != a(x, a(s, y)) {
                    return Err(violation(Axiom::AdditiveAssociativity, &[x, s, y]));
                }
            }
        }
    }

    for x in 0..n {
        for b in 0..n {
            for &s in &gens {
                if m(x, a(b, s)) != a(m(x, b), m(x, s)) {
                    return Err(violation(Axiom::LeftDistributivity, &[x, b, s]));
                }
            }
        }
    }
    for x in 0..n {
        for b in 0..n {
            for &s in &gens {
                if m(a(b, s), x) != a(m(b, x), m(s, x)) {
                    return Err(violation(Axiom::RightDistributivity, &[b, s, x]));
                }
            }
        }
    }

    for &x in &gens {
        for &y in &gens {
            for &w in &gens {
                if m(m(x, y), w) != m(x, m(y, w)) {
                    return Err(violation(Axiom::MultiplicativeAssociativity, &[x, y, w]));
                }
            }
        }
    }

    if let Some(o) = one {
        let o = o.idx();
        if let Some(x) = (0..n).find(|&x| m(o, x) != x || m(x, o) != x) {
            return Err(violation(Axiom::Identity, &[o, x]));
        }
    }

    Ok(Checked { zero: Elem::from_idx(z), neg, add_gens: gens.into_iter().map(Elem::from_idx).collect() })
}

/// Brute-force `O(n³)` check of every ring law over all element triples.
///
/// Independent of the generator-based verification used by constructors;
/// returns the first failing law.
pub fn exhaustive_axiom_check(add: &[Vec<usize>], mul: &[Vec<usize>], one: Option<usize>) -> Option<Axiom> {
    let n = add.len();
    let z = (0..n).find(|&c| (0..n).all(|x| add[c][x] == x && add[x][c] == x));
    let Some(z) = z else { return Some(Axiom::AdditiveIdentity) };
    for x in 0..n {
        for y in 0..n {
            if add[x][y] != add[y][x] {
                return Some(Axiom::AdditiveCommutativity);
            }
        }
    }
    if (0..n).any(|x| !(0..n).any(|y| add[x][y] == z)) {
        return Some(Axiom::AdditiveInverse);
    }
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                if add[add[x][y]][w] != add[x][add[y][w]] {
                    return Some(Axiom::AdditiveAssociativity);
                }
                if mul[x][add[y][w]] != add[mul[x][y]][mul[x][w]] {
                    return Some(Axiom::LeftDistributivity);
                }
                if mul[add[x][y]][w] != add[mul[x][w]][mul[y][w]] {
                    return Some(Axiom::RightDistributivity);
                }
                if mul[mul[x][y]][w] != mul[x][mul[y][w]] {
                    return Some(Axiom::MultiplicativeAssociativity);
                }
            }
        }
    }
    if let Some(o) = one {
        if (0..n).any(|x| mul[o][x] != x || mul[x][o] != x) {
            return Some(Axiom::Identity);
        }
    }
    None
}

impl FiniteRing {
    /// Tables as nested vectors of indices (for files and the exhaustive checker).
    pub fn table_rows(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.order;
        let rows = |t: &[Elem]| (0..n).map(|i| (0..n).map(|j| t[i * n + j].idx()).collect()).collect();
        (rows(&self.add), rows(&self.mul))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let mul = (0..n).map(|i| (0..n).map(|j| (i * j) % n).collect()).collect();
        (add, mul)
    }

    #[test]
    fn z2_builds() {
        let (add, mul) = zn_tables(2);
        let r = build_table_ring(&add, &mul, Some(1), None).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.characteristic(), Some(2));
    }

    #[test]
    fn broken_identity_is_reported() {
        let (add, _) = zn_tables(2);
        let mul = vec![vec![0, 0], vec![0, 0]];
        let err = build_table_ring(&add, &mul, Some(1), None).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::Identity, .. }), "{err:?}");
    }

    #[test]
    fn shape_errors() {
        let (add, mul) = zn_tables(3);
        assert!(matches!(build_table_ring(&add, &mul[..2], None, None), Err(Error::Shape(_))));
        let mut bad = add.clone();
        bad[1][2] = 7;
        assert!(matches!(build_table_ring(&bad, &mul, None, None), Err(Error::Shape(_))));
    }

    #[test]
    fn semigroup_ring_without_identity() {
        // 0, a, b, a+b with xy = x on {a, b}.
        let add = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        let mul = vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0], vec![0, 2, 2, 0], vec![0, 3, 3, 0]];
        let labels = ["0", "a", "b", "a+b"].map(String::from).to_vec();
        let t = build_table_ring(&add, &mul, None, Some(labels)).unwrap();
        assert!(!t.is_unital());
        assert_eq!(t.order(), 4);
        assert_eq!(t.parse_elem("a+b").unwrap(), Elem(3));
    }

    #[test]
    fn generator_check_matches_exhaustive_on_perturbed_tables() {
        let (add, mul) = zn_tables(6);
        for i in 0..6 {
            for j in 0..6 {
                for v in 0..6 {
                    let mut m2 = mul.clone();
                    m2[i][j] = v;
                    let fast = build_table_ring(&add, &m2, Some(1), None).err().map(|e| match e {
                        Error::AxiomViolation { .. } => true,
                        _ => false,
                    });
                    let slow = exhaustive_axiom_check(&add, &m2, Some(1));
                    assert_eq!(fast.is_some(), slow.is_some(), "cell ({i},{j}) = {v}");
                }
            }
        }
    }
}
