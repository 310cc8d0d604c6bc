//! Named auxiliary objects and evaluation of ring expressions.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::constructors::{self as c, BimoduleAlgebra};
use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::expr::{parse_ring_expr, AlgebraRef, Gens, MatrixKind, RingExpr};
use crate::radicals;
use crate::ring::{FiniteRing, Limits};
use crate::subset::ElementSubset;
use crate::tablefile::{CayleyTable, RingTable};

/// How a named algebra is acted on by the base ring of a Dorroh extension.
#[derive(Debug, Clone)]
pub enum AlgebraSpec {
    /// A base ring of residues acting by integer multiples.
    Scalar(FiniteRing),
    /// A subset of `over`; the base ring must be `over` itself, acting by multiplication.
    Overring { over: FiniteRing, carrier: ElementSubset },
}

/// Cayley tables and algebras referenced by name in expressions.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    tables: BTreeMap<String, CayleyTable>,
    algebras: BTreeMap<String, AlgebraSpec>,
    base_dir: Option<PathBuf>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default)]
    cayley: BTreeMap<String, String>,
    #[serde(default)]
    algebras: BTreeMap<String, String>,
}

impl Registry {
    /// Registry with `C<n>` cyclic groups, `LZ2`, `sgT`, `matT` and `matT_M2`.
    pub fn with_builtins(limits: &Limits) -> Result<Registry> {
        let mut r = Registry::default();
        r.register_table("LZ2", CayleyTable::left_zero_pair());
        r.register_algebra("sgT", AlgebraSpec::Scalar(c::semigroup_algebra_t4(limits)?));
        let mat_t = c::matrix_semigroup_algebra(limits)?;
        r.register_algebra("matT", AlgebraSpec::Scalar(mat_t.clone()));
        let z2 = c::zmod(2, limits)?;
        let m2 = c::matrix_full(2, &z2, limits)?;
        let carrier = ElementSubset::from_elems(
            m2.order(),
            mat_t.elements().map(|x| m2.elem_from_form(mat_t.form(x)).expect("matrix literal")),
        );
        r.register_algebra("matT_M2", AlgebraSpec::Overring { over: m2, carrier });
        Ok(r)
    }

    pub fn register_table(&mut self, name: &str, t: CayleyTable) {
        self.tables.insert(name.to_string(), t);
    }

    pub fn register_algebra(&mut self, name: &str, a: AlgebraSpec) {
        self.algebras.insert(name.to_string(), a);
    }

    /// Directory against which relative `table(…)` paths resolve.
    pub fn set_base_dir(&mut self, dir: impl Into<PathBuf>) {
        self.base_dir = Some(dir.into());
    }

    /// Loads a manifest with `[cayley]` and `[algebras]` tables mapping names to
    /// Cayley-table and ring-table files (paths relative to the manifest).
    pub fn load_manifest(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let m: Manifest = toml::from_str(&text).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        let dir = path.parent().unwrap_or(Path::new("."));
        for (name, file) in m.cayley {
            self.register_table(&name, CayleyTable::load(&dir.join(file))?);
        }
        for (name, file) in m.algebras {
            let ring = RingTable::load(&dir.join(file))?.to_ring()?;
            self.register_algebra(&name, AlgebraSpec::Scalar(ring));
        }
        Ok(())
    }

    pub fn cayley(&self, name: &str) -> Result<CayleyTable> {
        if let Some(t) = self.tables.get(name) {
            return Ok(t.clone());
        }
        if let Some(n) = name.strip_prefix('C').and_then(|d| d.parse::<usize>().ok()).filter(|&n| n > 0) {
            return Ok(CayleyTable::cyclic_group(n));
        }
        Err(Error::Semantic(format!("unknown Cayley table `{name}`")))
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraSpec> {
        self.algebras.get(name).ok_or_else(|| Error::Semantic(format!("unknown algebra `{name}`")))
    }

    pub fn names(&self) -> (Vec<String>, Vec<String>) {
        (self.tables.keys().cloned().collect(), self.algebras.keys().cloned().collect())
    }

    pub fn eval_str(&self, text: &str, limits: &Limits) -> Result<FiniteRing> {
        self.eval(&parse_ring_expr(text)?, limits)
    }

    /// Builds the ring denoted by `e`, named by its printed expression.
    pub fn eval(&self, e: &RingExpr, limits: &Limits) -> Result<FiniteRing> {
        let ring = self.eval_inner(e, limits)?;
        Ok(ring.with_name(e.to_string()))
    }

    fn eval_inner(&self, e: &RingExpr, limits: &Limits) -> Result<FiniteRing> {
        let sub = |x: &RingExpr| self.eval(x, limits);
        match e {
            RingExpr::Z(n) => c::zmod(*n, limits),
            RingExpr::GF(p) => c::gf(*p, limits),
            RingExpr::Matrix { kind, n, base } => {
                let b = sub(base)?;
                match kind {
                    MatrixKind::Full => c::matrix_full(*n, &b, limits),
                    MatrixKind::Upper => c::matrix_upper(*n, &b, limits),
                    MatrixKind::ConstDiagonal => c::matrix_d(*n, &b, limits),
                    MatrixKind::Toeplitz => c::matrix_v(*n, &b, limits),
                }
            }
            RingExpr::Prod(items) => {
                let rings = items.iter().map(sub).collect::<Result<Vec<_>>>()?;
                c::direct_product(&rings.iter().collect::<Vec<_>>(), limits)
            }
            RingExpr::Quot(base, gens) => {
                let r = sub(base)?;
                let ideal = match gens {
                    Gens::Elems(items) => r.two_sided_closure(&elems(&r, items)?),
                    Gens::Delta => r.as_two_sided(radicals::delta(&r, limits)?.as_subset())?,
                    Gens::Soc => r.as_two_sided(radicals::socle(&r, limits)?.as_subset())?,
                    Gens::Jacobson => radicals::jacobson(&r, limits)?,
                };
                Ok(c::quotient(&r, &ideal)?.ring)
            }
            RingExpr::Corner(base, x) => {
                let r = sub(base)?;
                let e = elem(&r, x)?;
                Ok(c::corner(&r, e)?.ring)
            }
            RingExpr::S(base) => c::pair_subring_s(&sub(base)?, limits),
            RingExpr::Dorroh(base, alg) => {
                let r = sub(base)?;
                let t = match alg {
                    AlgebraRef::Ideal(items) => BimoduleAlgebra::ideal(&r, &r.two_sided_closure(&elems(&r, items)?))?,
                    AlgebraRef::Named(name) => match self.algebra(name)? {
                        AlgebraSpec::Scalar(t) => BimoduleAlgebra::scalar(&r, t.clone())?,
                        AlgebraSpec::Overring { over, carrier } => {
                            if over.raw_add_table() != r.raw_add_table() || over.raw_mul_table() != r.raw_mul_table() {
                                return Err(Error::Mismatch(format!("`{name}` is defined inside a different ring")));
                            }
                            BimoduleAlgebra::from_overring(&r, over, carrier, &r.elements().collect::<Vec<_>>())?
                        }
                    },
                };
                c::dorroh(&r, &t, limits)
            }
            RingExpr::SgRing(base, name) => c::semigroup_ring(&sub(base)?, &self.cayley(name)?, limits),
            RingExpr::GrpRing(base, name) => c::group_ring(&sub(base)?, &self.cayley(name)?, limits),
            RingExpr::H3(m, base) => c::h3(*m, &sub(base)?, limits),
            RingExpr::Hst(s, t, base) => {
                let r = sub(base)?;
                c::hst(elem(&r, s)?, elem(&r, t)?, &r, limits)
            }
            RingExpr::K(s, base) => {
                let r = sub(base)?;
                c::ks(elem(&r, s)?, &r, limits)
            }
            RingExpr::Table(path) => {
                let p = match &self.base_dir {
                    Some(d) if Path::new(path).is_relative() => d.join(path),
                    _ => PathBuf::from(path),
                };
                let ring = RingTable::load(&p)?.to_ring()?;
                limits.check_order(ring.order() as u128)?;
                Ok(ring)
            }
            RingExpr::FreeAlg16 => c::free_algebra_example(limits),
        }
    }
}

fn elem(r: &FiniteRing, f: &Form) -> Result<Elem> {
    r.resolve_form(f).ok_or_else(|| Error::UnknownElement(f.to_string()))
}

fn elems(r: &FiniteRing, items: &[Form]) -> Result<ElementSubset> {
    let list = items.iter().map(|f| elem(r, f)).collect::<Result<Vec<_>>>()?;
    Ok(ElementSubset::from_elems(r.order(), list))
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: Limits = Limits::DEFAULT;

    fn eval(text: &str) -> Result<FiniteRing> {
        Registry::with_builtins(&L).unwrap().eval_str(text, &L)
    }

    #[test]
    fn evaluates_catalog_expressions() {
        for (text, order) in [
            ("Z16", 16),
            ("M(2,Z4)", 256),
            ("U(3,Z2)", 64),
            ("dorroh(Z2,sgT)", 8),
            ("dorroh(Z2,matT)", 8),
            ("grpring(Z3,C2)", 9),
            ("grpring(Z2,C3)", 8),
            ("quot(U(2,Z2),delta)", 2),
            ("quot(Z16,{2})", 2),
            ("corner(M(2,Z4),[[1,0],[0,0]])", 4),
            ("S(Z4)", 8),
            ("S(Z2)", 4),
            ("S(U(2,Z2))", 32),
            ("Hst(1,1,Z2)", 8),
            ("K(0,Z2)", 16),
            ("freealg16", 16),
            ("dorroh(Z4,ideal{2})", 8),
        ] {
            let r = eval(text).unwrap_or_else(|e| panic!("{text}: {e}"));
            assert_eq!(r.order(), order, "{text}");
            assert_eq!(r.name(), Some(text));
        }
    }

    #[test]
    fn evaluation_errors() {
        assert!(matches!(eval("dorroh(M(2,Z2),matT_M2)"), Err(Error::ActionIncompatibility { .. })));
        assert!(matches!(eval("dorroh(Z2,matT_M2)"), Err(Error::Mismatch(_))));
        assert!(matches!(eval("grpring(Z2,nope)"), Err(Error::Semantic(_))));
        assert!(matches!(eval("corner(Z4,7)"), Err(Error::UnknownElement(_))));
        assert!(matches!(eval("GF4"), Err(Error::Invalid(_))));
        assert!(matches!(eval("M(3,Z4)"), Err(Error::CapExceeded { .. })));
        assert!(matches!(eval("table(\"/nonexistent.toml\")"), Err(Error::Io(_))));
    }
}
