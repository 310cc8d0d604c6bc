//! Bounded computations in skew polynomial rings `R[x; σ]`.
//!
//! The ring `R[x; σ]` is infinite, so it is never materialized; only
//! polynomial arithmetic, bounded nilpotency tests and bounded searches are offered.

use crate::element::Elem;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits, Shape};

/// A verified ring automorphism, stored as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAutomorphism {
    map: Vec<Elem>,
}

impl RingAutomorphism {
    /// Checks bijectivity and preservation of addition, multiplication and identity.
    pub fn new(r: &FiniteRing, map: Vec<Elem>) -> Result<Self> {
        let n = r.order();
        if map.len() != n || map.iter().any(|x| x.idx() >= n) {
            return Err(Error::Shape("automorphism must map every element into the ring".into()));
        }
        let mut hit = vec![false; n];
        for x in &map {
            if std::mem::replace(&mut hit[x.idx()], true) {
                return Err(Error::Invalid("map is not a bijection".into()));
            }
        }
        let s = |x: Elem| map[x.idx()];
        for a in r.elements() {
            for b in r.elements() {
                if s(r.add(a, b)) != r.add(s(a), s(b)) || s(r.mul(a, b)) != r.mul(s(a), s(b)) {
                    return Err(Error::Invalid(format!(
                        "map is not a ring homomorphism at ({}, {})",
                        r.label(a),
                        r.label(b)
                    )));
                }
            }
        }
        if let Some(o) = r.one() {
            if s(o) != o {
                return Err(Error::Invalid("map does not fix the identity".into()));
            }
        }
        Ok(RingAutomorphism { map })
    }

    pub fn identity(r: &FiniteRing) -> Self {
        RingAutomorphism { map: r.elements().collect() }
    }

    /// `(a, b) ↦ (b, a)` on a product of two equal factors.
    pub fn coordinate_swap(r: &FiniteRing) -> Result<Self> {
        let c = r.coords().filter(|c| c.shape == Shape::Tuple(2)).ok_or_else(|| {
            Error::Invalid("coordinate swap needs a ring of pairs".into())
        })?;
        let map = r
            .elements()
            .map(|x| {
                let p = c.of(x);
                r.elements()
                    .find(|&y| c.of(y) == [p[1], p[0]])
                    .ok_or_else(|| Error::Invalid("swapped pair lies outside the ring".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, map)
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x.idx()]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, x)| x.idx() == i)
    }
}

/// A polynomial `Σ aᵢxⁱ` with trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPolynomial {
    coeffs: Vec<Elem>,
}

impl SkewPolynomial {
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<Elem> {
        self.coeffs.get(i).copied()
    }
}

/// Arithmetic context for `R[x; σ]`, with `xa = σ(a)x`.
#[derive(Debug, Clone)]
pub struct SkewPolyRing<'r> {
    pub ring: &'r FiniteRing,
    pub sigma: RingAutomorphism,
    // sigma_pows[i] = σⁱ, up to the order of σ.
    sigma_pows: Vec<Vec<Elem>>,
}

impl<'r> SkewPolyRing<'r> {
    pub fn new(ring: &'r FiniteRing, sigma: RingAutomorphism) -> Self {
        let mut sigma_pows = vec![ring.elements().collect::<Vec<_>>()];
        loop {
            let next: Vec<Elem> = sigma_pows.last().unwrap().iter().map(|&x| sigma.apply(x)).collect();
            if next.iter().enumerate().all(|(i, x)| x.idx() == i) {
                break;
            }
            sigma_pows.push(next);
        }
        SkewPolyRing { ring, sigma, sigma_pows }
    }

    /// The ordinary polynomial ring `R[x]`.
    pub fn ordinary(ring: &'r FiniteRing) -> Self {
        Self::new(ring, RingAutomorphism::identity(ring))
    }

    fn trim(&self, mut c: Vec<Elem>) -> SkewPolynomial {
        while c.last() == Some(&self.ring.zero()) {
            c.pop();
        }
        SkewPolynomial { coeffs: c }
    }

    pub fn poly(&self, coeffs: &[Elem]) -> Result<SkewPolynomial> {
        if coeffs.iter().any(|c| c.idx() >= self.ring.order()) {
            return Err(Error::Mismatch("coefficient outside the coefficient ring".into()));
        }
        Ok(self.trim(coeffs.to_vec()))
    }

    /// Parses coefficient literals, lowest degree first.
    pub fn parse(&self, coeffs: &[&str]) -> Result<SkewPolynomial> {
        let c = coeffs.iter().map(|s| self.ring.parse_elem(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.trim(c))
    }

    pub fn zero(&self) -> SkewPolynomial {
        SkewPolynomial { coeffs: Vec::new() }
    }

    fn sigma_pow(&self, i: usize, b: Elem) -> Elem {
        self.sigma_pows[i % self.sigma_pows.len()][b.idx()]
    }

    pub fn add(&self, f: &SkewPolynomial, g: &SkewPolynomial) -> SkewPolynomial {
        let r = self.ring;
        let len = f.coeffs.len().max(g.coeffs.len());
        let c = (0..len)
            .map(|i| r.add(f.coeff(i).unwrap_or(r.zero()), g.coeff(i).unwrap_or(r.zero())))
            .collect();
        self.trim(c)
    }

    /// Coefficient of `x^k` in `fg` is `Σ_{i+j=k} aᵢ σⁱ(b_j)`.
    pub fn mul(&self, f: &SkewPolynomial, g: &SkewPolynomial) -> SkewPolynomial {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let r = self.ring;
        let mut c = vec![r.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a == r.zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                c[i + j] = r.add(c[i + j], r.mul(a, self.sigma_pow(i, b)));
            }
        }
        self.trim(c)
    }

    /// Least `m ≤ max_power` with `f^m = 0`.
    pub fn nilpotency_index(&self, f: &SkewPolynomial, max_power: usize) -> Option<usize> {
        if f.is_zero() {
            return Some(1);
        }
        let mut p = f.clone();
        for m in 1..=max_power {
            if p.is_zero() {
                return Some(m);
            }
            if m < max_power {
                p = self.mul(&p, f);
            }
        }
        None
    }

    pub fn is_nilpotent_poly(&self, f: &SkewPolynomial, max_power: usize) -> bool {
        self.nilpotency_index(f, max_power).is_some()
    }

    /// Default power bound `(deg f + 1)·|R|`.
    pub fn default_power_bound(&self, f: &SkewPolynomial) -> usize {
        (f.degree().unwrap_or(0) + 1) * self.ring.order()
    }

    /// Coefficient labels, lowest degree first.
    pub fn render(&self, f: &SkewPolynomial) -> String {
        let parts: Vec<&str> = f.coeffs.iter().map(|&c| self.ring.label(c)).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Every polynomial of degree at most `d`, in coefficient-index order.
    pub fn all_up_to_degree(&self, d: usize) -> impl Iterator<Item = SkewPolynomial> + '_ {
        let n = self.ring.order();
        let total = n.pow(d as u32 + 1);
        (0..total).map(move |mut k| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..=d {
                c.push(Elem::from_idx(k % n));
                k /= n;
            }
            self.trim(c)
        })
    }
}

/// Polynomials with `fg = 0` but `a_i b_j ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArmendarizWitness {
    pub f: SkewPolynomial,
    pub g: SkewPolynomial,
    pub i: usize,
    pub j: usize,
}

fn search_budget(n: usize, exponent: u32, limits: &Limits) -> Result<()> {
    let bound = (n as u128).saturating_pow(exponent);
    if bound > limits.budget {
        return Err(Error::ComplexityRefusal { bound, budget: limits.budget });
    }
    Ok(())
}

/// Searches ordinary polynomials of degree at most `d` for an Armendariz violation.
///
/// `None` only means no witness exists at degree `≤ d`.
pub fn armendariz_witness(r: &FiniteRing, d: usize, limits: &Limits) -> Result<Option<ArmendarizWitness>> {
    search_budget(r.order(), 2 * d as u32 + 2, limits)?;
    let px = SkewPolyRing::ordinary(r);
    let polys: Vec<SkewPolynomial> = px.all_up_to_degree(d).filter(|f| !f.is_zero()).collect();
    for f in &polys {
        for g in &polys {
            if !px.mul(f, g).is_zero() {
                continue;
            }
            for (i, &a) in f.coeffs.iter().enumerate() {
                for (j, &b) in g.coeffs.iter().enumerate() {
                    if r.mul(a, b) != r.zero() {
                        return Ok(Some(ArmendarizWitness { f: f.clone(), g: g.clone(), i, j }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// For commutative `R`: every polynomial of degree `≤ d` is nilpotent (within
/// `max(d,1)·|R|` powers) exactly when all its coefficients are nilpotent.
pub fn poly_nilpotent_coefficient_check(r: &FiniteRing, d: usize, limits: &Limits) -> Result<bool> {
    if !r.is_commutative() {
        return Err(Error::Invalid("coefficient ring must be commutative".into()));
    }
    search_budget(r.order(), d as u32 + 2, limits)?;
    let px = SkewPolyRing::ordinary(r);
    let nil = r.nilpotent_elements();
    let bound = d.max(1) * r.order();
    let agrees = px
        .all_up_to_degree(d)
        .all(|f| px.is_nilpotent_poly(&f, bound) == f.coeffs().iter().all(|&c| nil.contains(c)));
    Ok(agrees)
}
