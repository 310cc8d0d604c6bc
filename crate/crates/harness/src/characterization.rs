//! Element-wise characterizations of N, δ and Id in structured matrix rings,
//! compared against brute force on every element.

use std::fmt;
use std::str::FromStr;

use zhou_core::constructors::{h3, hst, ks};
use zhou_core::{radicals, Elem, ElementSubset, Error, FiniteRing, Limits, Result};

use crate::report::{Instance, Scope, TheoremReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characterization {
    /// `H_(1,1)(R)`: nilpotent iff the diagonal entries are.
    H11Nilpotent,
    /// `H_(1,1)(R)`: in δ iff the diagonal entries are in δ(R).
    H11Delta,
    /// `H_(1,1)(R)`: idempotent iff the diagonal entries are.
    H11Idempotent,
    /// `K_0(R)`: nilpotent iff both diagonal entries are.
    K0Nilpotent,
    /// `K_0(R)`: in δ iff both diagonal entries are in δ(R).
    K0Delta,
    /// `K_0(R)`: idempotent elements have idempotent diagonal entries.
    K0Idempotent,
    /// `K_0(R)`: the converse of the above; expected to fail for some rings.
    K0IdempotentConverse,
    /// `H_3(Z_m, R)`: nilpotent iff `n ∈ N(Z_m)` and `a₃ ∈ N(R)`.
    H3Nilpotent,
}

impl Characterization {
    pub const ALL: [Characterization; 8] = [
        Characterization::H11Nilpotent,
        Characterization::H11Delta,
        Characterization::H11Idempotent,
        Characterization::K0Nilpotent,
        Characterization::K0Delta,
        Characterization::K0Idempotent,
        Characterization::K0IdempotentConverse,
        Characterization::H3Nilpotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Characterization::H11Nilpotent => "h11-nilpotent",
            Characterization::H11Delta => "h11-delta",
            Characterization::H11Idempotent => "h11-idempotent",
            Characterization::K0Nilpotent => "k0-nilpotent",
            Characterization::K0Delta => "k0-delta",
            Characterization::K0Idempotent => "k0-idempotent",
            Characterization::K0IdempotentConverse => "k0-idempotent-converse",
            Characterization::H3Nilpotent => "h3-nilpotent",
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Characterization::H11Nilpotent => "in H_(1,1)(R), A is nilpotent iff a, d, g are nilpotent",
            Characterization::H11Delta => "in H_(1,1)(R), A lies in δ iff a, d, g lie in δ(R)",
            Characterization::H11Idempotent => "in H_(1,1)(R), A is idempotent iff a, d, g are idempotent",
            Characterization::K0Nilpotent => "in K_0(R), A is nilpotent iff both diagonal entries are nilpotent",
            Characterization::K0Delta => "in K_0(R), A lies in δ iff both diagonal entries lie in δ(R)",
            Characterization::K0Idempotent => "in K_0(R), every idempotent has idempotent diagonal entries",
            Characterization::K0IdempotentConverse => {
                "in K_0(R), idempotent diagonal entries need not give an idempotent"
            }
            Characterization::H3Nilpotent => "in H_3(Z_m, R), A is nilpotent iff n is nilpotent in Z_m and the middle entry is nilpotent",
        }
    }
}

impl fmt::Display for Characterization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Characterization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Characterization> {
        Characterization::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown characterization `{s}`")))
    }
}

enum Kind {
    Nil,
    Delta,
    Idem,
}

/// Compares the characterization with direct computation on every element of the
/// construction over `base`. For `h3-nilpotent`, `m` is the characteristic of `base`.
pub fn verify_characterization(c: Characterization, base: &FiniteRing, limits: &Limits) -> Result<TheoremReport> {
    use Characterization as C;
    let base_name = base.name().unwrap_or("R").to_string();
    let one = base.unit()?;
    let (ring, name, diagonal): (FiniteRing, String, Vec<(usize, usize)>) = match c {
        C::H11Nilpotent | C::H11Delta | C::H11Idempotent => {
            (hst(one, one, base, limits)?, format!("Hst(1,1,{base_name})"), vec![(0, 0), (1, 1), (2, 2)])
        }
        C::K0Nilpotent | C::K0Delta | C::K0Idempotent | C::K0IdempotentConverse => {
            (ks(base.zero(), base, limits)?, format!("K(0,{base_name})"), vec![(0, 0), (1, 1)])
        }
        C::H3Nilpotent => {
            let m = base.characteristic().unwrap_or(1) as usize;
            (h3(m, base, limits)?, format!("H3({m},{base_name})"), Vec::new())
        }
    };
    let kind = match c {
        C::H11Nilpotent | C::K0Nilpotent | C::H3Nilpotent => Kind::Nil,
        C::H11Delta | C::K0Delta => Kind::Delta,
        _ => Kind::Idem,
    };
    let (truth, base_set) = match kind {
        Kind::Nil => (ring.nilpotent_elements(), base.nilpotent_elements()),
        Kind::Delta => {
            (radicals::delta(&ring, limits)?.into_subset(), radicals::delta(base, limits)?.into_subset())
        }
        Kind::Idem => (ring.idempotent_elements(), base.idempotent_elements()),
    };
    let criterion = |x: Elem| -> bool {
        if c == C::H3Nilpotent {
            let co = ring.coords_of(x).expect("tuple coordinates");
            return nilpotent_mod(co[0].idx() as u64, m_of(&ring)) && base_set.contains(co[3]);
        }
        diagonal.iter().all(|&(i, j)| base_set.contains(ring.entry(x, i, j).expect("matrix entry")))
    };
    let mut rep = TheoremReport::new(
        c.name(),
        c.statement(),
        if c == C::K0IdempotentConverse { Scope::Existential } else { Scope::Universal },
    );
    let mut mismatches: Vec<Elem> = Vec::new();
    for x in ring.elements() {
        let ok = match c {
            C::K0Idempotent => !truth.contains(x) || criterion(x),
            C::K0IdempotentConverse => !criterion(x) || truth.contains(x),
            _ => truth.contains(x) == criterion(x),
        };
        if !ok {
            mismatches.push(x);
        }
    }
    let n = ring.order();
    if c == C::K0IdempotentConverse {
        match mismatches.first() {
            Some(&x) => rep.push(
                Instance::new(&name, Verdict::Confirmed, format!("{} of {n} elements have idempotent diagonal but are not idempotent", mismatches.len()))
                    .witness(vec![("A".into(), ring.label(x).into()), ("A^2".into(), ring.label(ring.mul(x, x)).into())]),
            ),
            None => rep.push(Instance::new(&name, Verdict::Counterexample, "the converse holds on every element")),
        }
        return Ok(rep.finish());
    }
    let detail = format!("{} of {n} elements agree", n - mismatches.len());
    let mut inst = Instance::check(&name, mismatches.is_empty(), Verdict::Counterexample, detail);
    if let Some(&x) = mismatches.first() {
        inst = inst.witness(vec![("A".into(), ring.label(x).into())]);
    }
    rep.push(inst);
    Ok(rep.finish())
}

/// The modulus of the `Z_m` coordinate of an `H_3` ring.
fn m_of(ring: &FiniteRing) -> u64 {
    ring.elements().filter_map(|x| ring.coords_of(x).map(|c| c[0].idx() as u64)).max().unwrap_or(0) + 1
}

/// `n^k ≡ 0 (mod m)` for some `k`.
pub fn nilpotent_mod(n: u64, m: u64) -> bool {
    let mut p = n % m;
    for _ in 0..64 {
        if p == 0 {
            return true;
        }
        p = p * (n % m) % m;
    }
    false
}

/// `{x : diagonal entries in s}` helper for formula comparisons.
pub fn diagonal_set(ring: &FiniteRing, positions: &[(usize, usize)], s: &ElementSubset) -> ElementSubset {
    ElementSubset::from_predicate(ring.order(), |x| {
        positions.iter().all(|&(i, j)| ring.entry(x, i, j).is_some_and(|v| s.contains(v)))
    })
}
