//! Naive oracle over raw operation tables: every subset of a ring of order ≤ 16
//! is tested for being a right ideal. Shares no code with the library's lattice.
#![allow(dead_code)]

use zhou_core::{ElementSubset, FiniteRing, Limits, Registry};

pub struct Tables {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
}

impl Tables {
    pub fn of(r: &FiniteRing) -> Tables {
        let (add, mul) = r.table_rows();
        let n = add.len();
        let zero = (0..n).find(|&z| (0..n).all(|x| add[z][x] == x)).expect("additive identity");
        Tables { n, add, mul, zero }
    }

    fn contains(m: u32, x: usize) -> bool {
        m >> x & 1 == 1
    }

    pub fn is_right_ideal(&self, m: u32) -> bool {
        if !Self::contains(m, self.zero) {
            return false;
        }
        let elems: Vec<usize> = (0..self.n).filter(|&x| Self::contains(m, x)).collect();
        for &a in &elems {
            if (0..self.n).any(|r| !Self::contains(m, self.mul[a][r])) {
                return false;
            }
            if elems.iter().any(|&b| !Self::contains(m, self.add[a][b])) {
                return false;
            }
        }
        true
    }

    pub fn right_ideals(&self) -> Vec<u32> {
        assert!(self.n <= 16, "oracle limited to order 16");
        (0u32..1 << self.n).filter(|&m| self.is_right_ideal(m)).collect()
    }

    pub fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn maximal(&self, ideals: &[u32]) -> Vec<u32> {
        let full = self.full();
        let proper: Vec<u32> = ideals.iter().copied().filter(|&m| m != full).collect();
        proper.iter().copied().filter(|&m| !proper.iter().any(|&k| k != m && k & m == m)).collect()
    }

    pub fn essential(&self, ideals: &[u32], m: u32) -> bool {
        let z = 1u32 << self.zero;
        ideals.iter().all(|&k| k == z || (k & m) != z)
    }

    /// Intersection of the essential maximal right ideals (the whole ring if none).
    pub fn delta(&self) -> u32 {
        let ideals = self.right_ideals();
        self.maximal(&ideals).into_iter().filter(|&m| self.essential(&ideals, m)).fold(self.full(), |a, m| a & m)
    }

    pub fn jacobson(&self) -> u32 {
        let ideals = self.right_ideals();
        self.maximal(&ideals).into_iter().fold(self.full(), |a, m| a & m)
    }

    /// Smallest right ideal containing every minimal one.
    pub fn socle(&self) -> u32 {
        let ideals = self.right_ideals();
        let z = 1u32 << self.zero;
        let nonzero: Vec<u32> = ideals.iter().copied().filter(|&m| m != z).collect();
        let minimal = nonzero.iter().copied().filter(|&m| !nonzero.iter().any(|&k| k != m && k & m == k));
        let union = minimal.fold(z, |a, m| a | m);
        ideals.iter().copied().filter(|&k| k & union == union).min_by_key(|k| k.count_ones()).expect("R contains all")
    }

    pub fn nilpotents(&self) -> u32 {
        let mut out = 0;
        for a in 0..self.n {
            let mut p = a;
            for _ in 0..=self.n {
                if p == self.zero {
                    out |= 1 << a;
                    break;
                }
                p = self.mul[p][a];
            }
        }
        out
    }

    pub fn idempotents(&self) -> u32 {
        (0..self.n).filter(|&a| self.mul[a][a] == a).fold(0, |m, a| m | 1 << a)
    }
}

pub fn mask(s: &ElementSubset) -> u32 {
    s.iter().fold(0, |m, e| m | 1 << e.idx())
}

pub fn ring(text: &str) -> FiniteRing {
    let l = Limits::DEFAULT;
    Registry::with_builtins(&l).unwrap().eval_str(text, &l).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Rings of order ≤ 16 covering every constructor family.
pub const SMALL: &[&str] = &[
    "Z2", "Z3", "Z4", "Z6", "Z8", "Z12", "Z16", "GF5", "prod(Z2,Z2)", "prod(Z2,Z4)", "U(2,Z2)", "D(3,Z2)",
    "V(3,Z2)", "M(2,Z2)", "freealg16", "dorroh(Z2,sgT)", "dorroh(Z2,matT)", "dorroh(Z4,ideal{2})",
    "grpring(Z3,C2)", "grpring(Z2,C3)", "grpring(Z2,C2)", "sgring(Z2,LZ2)", "Hst(1,1,Z2)", "K(0,Z2)", "S(Z2)",
    "S(Z4)", "S(Z3)", "quot(Z16,{4})", "quot(U(2,Z2),delta)", "corner(M(2,Z2),[[1,0],[0,0]])",
    "quot(freealg16,soc)",
];
