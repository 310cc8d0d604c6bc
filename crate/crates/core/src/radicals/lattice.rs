//! The lattice of right ideals, enumerated as sums of cyclic right ideals.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::element::Elem;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::subset::{ElementSubset, RightIdeal};

/// Every right ideal of a ring, with cached structural flags.
///
/// Ideal `0` is `{0}`. Generators are the distinct cyclic right ideals; the
/// sum table records `I + g` for every ideal `I` and generator `g`, which is
/// all the maximality and summand tests need.
#[derive(Debug)]
pub struct RightIdealLattice {
    order: usize,
    ideals: Vec<ElementSubset>,
    sizes: Vec<usize>,
    index: HashMap<ElementSubset, usize>,
    gens: Vec<usize>,
    gen_pos: Vec<Option<usize>>,
    cyclic: Vec<usize>,
    sums: Vec<u32>,
    full: usize,
    maximal: Vec<bool>,
    minimal: Vec<bool>,
    essential: Vec<bool>,
    semisimple: Vec<bool>,
    complements: OnceLock<Vec<Complement>>,
}

#[derive(Debug, Clone, Copy, Default)]
struct Complement {
    any: bool,
    semisimple: bool,
}

impl RightIdealLattice {
    pub(crate) fn build(r: &FiniteRing, cap: usize) -> Result<Self> {
        let n = r.order();
        let mut ideals: Vec<ElementSubset> = Vec::new();
        let mut index: HashMap<ElementSubset, usize> = HashMap::new();
        let mut intern = |s: ElementSubset, ideals: &mut Vec<ElementSubset>| -> Result<usize> {
            if let Some(&i) = index.get(&s) {
                return Ok(i);
            }
            if ideals.len() >= cap {
                return Err(Error::LatticeExplosion { cap });
            }
            ideals.push(s.clone());
            index.insert(s, ideals.len() - 1);
            Ok(ideals.len() - 1)
        };

        intern(r.zero_set(), &mut ideals)?;
        let mut cyclic = Vec::with_capacity(n);
        for a in r.elements() {
            cyclic.push(intern(r.cyclic_right_ideal(a).into_subset(), &mut ideals)?);
        }
        let mut gens: Vec<usize> = cyclic.clone();
        gens.sort_unstable();
        gens.dedup();
        let mut gen_pos = vec![None; ideals.len()];
        for (k, &g) in gens.iter().enumerate() {
            gen_pos[g] = Some(k);
        }

        let m = gens.len();
        let mut sums: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < ideals.len() {
            for &g in &gens {
                let s = if ideals[g].is_subset(&ideals[i]) {
                    i
                } else {
                    let sum = r.subgroup_sum(&ideals[i], &ideals[g]);
                    intern(sum, &mut ideals)?
                };
                sums.push(s as u32);
            }
            i += 1;
        }
        gen_pos.resize(ideals.len(), None);

        let full = index[&r.full_set()];
        let sizes: Vec<usize> = ideals.iter().map(|s| s.len()).collect();
        let row = |i: usize| &sums[i * m..(i + 1) * m];

        let maximal = (0..ideals.len())
            .map(|i| i != full && row(i).iter().all(|&s| s as usize == i || s as usize == full))
            .collect();
        let minimal: Vec<bool> = (0..ideals.len())
            .map(|i| {
                i != 0 && gen_pos[i].is_some() && ideals[i].iter().all(|a| a == r.zero() || cyclic[a.idx()] == i)
            })
            .collect();
        let nonzero_gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let essential = ideals
            .iter()
            .map(|s| nonzero_gens.iter().all(|&g| s.intersection_count(&ideals[g]) > 1))
            .collect();
        let minimal_ids: Vec<usize> = (0..ideals.len()).filter(|&i| minimal[i]).collect();
        let semisimple = (0..ideals.len())
            .map(|i| {
                let mut cur = 0usize;
                for &mi in &minimal_ids {
                    if ideals[mi].is_subset(&ideals[i]) {
                        cur = sums[cur * m + gen_pos[mi].unwrap()] as usize;
                    }
                }
                cur == i
            })
            .collect();

        Ok(RightIdealLattice {
            order: n,
            ideals,
            sizes,
            index,
            gens,
            gen_pos,
            cyclic,
            sums,
            full,
            maximal,
            minimal,
            essential,
            semisimple,
            complements: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, i: usize) -> &ElementSubset {
        &self.ideals[i]
    }

    pub fn right_ideal(&self, i: usize) -> RightIdeal {
        RightIdeal::new_unchecked(self.ideals[i].clone())
    }

    pub fn ideals(&self) -> &[ElementSubset] {
        &self.ideals
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn id_of(&self, s: &ElementSubset) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn full_id(&self) -> usize {
        self.full
    }

    /// Id of the cyclic right ideal generated by `a`.
    pub fn cyclic_id(&self, a: Elem) -> usize {
        self.cyclic[a.idx()]
    }

    /// Ids of the distinct cyclic right ideals.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Id of `I + aR` (with the closure of `{a}` in place of `aR` without identity).
    pub fn sum_with_cyclic(&self, i: usize, a: Elem) -> usize {
        self.sum_with_generator(i, self.cyclic[a.idx()])
    }

    /// Id of `I + G` for a cyclic ideal `G`.
    pub fn sum_with_generator(&self, i: usize, g: usize) -> usize {
        let k = self.gen_pos[g].expect("not a cyclic ideal");
        self.sums[i * self.gens.len() + k] as usize
    }

    pub fn is_proper(&self, i: usize) -> bool {
        i != self.full
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.minimal[i]
    }

    /// Meets every nonzero cyclic right ideal nontrivially.
    pub fn is_essential(&self, i: usize) -> bool {
        self.essential[i]
    }

    /// Equal to the sum of the minimal right ideals it contains.
    pub fn is_semisimple(&self, i: usize) -> bool {
        self.semisimple[i]
    }

    pub fn maximal_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.maximal[i])
    }

    pub fn minimal_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.minimal[i])
    }

    pub fn essential_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.essential[i])
    }

    /// Some right ideal `L` satisfies `I ⊕ L = R`.
    pub fn is_direct_summand(&self, i: usize) -> bool {
        self.complements()[i].any
    }

    /// Some semisimple right ideal `Y` satisfies `I ⊕ Y = R`.
    pub fn has_semisimple_complement(&self, i: usize) -> bool {
        self.complements()[i].semisimple
    }

    // `K ∩ L = 0` and `|K|·|L| = |R|` force `K + L = R`.
    fn complements(&self) -> &[Complement] {
        self.complements.get_or_init(|| {
            let mut by_size: HashMap<usize, Vec<usize>> = HashMap::new();
            for (j, &s) in self.sizes.iter().enumerate() {
                by_size.entry(s).or_default().push(j);
            }
            (0..self.len())
                .map(|i| {
                    let mut c = Complement::default();
                    if !self.order.is_multiple_of(self.sizes[i]) {
                        return c;
                    }
                    for &j in by_size.get(&(self.order / self.sizes[i])).map(Vec::as_slice).unwrap_or(&[]) {
                        if self.ideals[i].intersection_count(&self.ideals[j]) == 1 {
                            c.any = true;
                            if self.semisimple[j] {
                                c.semisimple = true;
                                break;
                            }
                        }
                    }
                    c
                })
                .collect()
        })
    }
}
