use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::graph::{Path, RationalInfinitePath};
use crate::lpa::{Element, LeavittAlgebra, LpaError, Monomial};
use crate::scalars::{Residue, Scalar};

use super::{RepError, SfcElement, SfcSpec};

/// The span of the infinite paths tail-equivalent to `c^∞`.
#[derive(Debug, PartialEq, Eq)]
pub struct ChenModule {
    alg: Arc<LeavittAlgebra>,
    base: RationalInfinitePath,
}

impl ChenModule {
    pub fn new(alg: &Arc<LeavittAlgebra>, c: &Path) -> Result<Arc<ChenModule>, RepError> {
        let base = RationalInfinitePath::periodic(alg.graph(), c.clone())?;
        Ok(Arc::new(ChenModule {
            alg: alg.clone(),
            base,
        }))
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.alg
    }

    pub fn base_path(&self) -> &RationalInfinitePath {
        &self.base
    }

    pub fn zero(self: &Arc<Self>) -> ChenElement {
        ChenElement {
            module: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a tail-equivalent path.
    pub fn basis(self: &Arc<Self>, p: RationalInfinitePath) -> Result<ChenElement, RepError> {
        if !p.tail_equivalent(&self.base) {
            return Err(RepError::NotTailEquivalent(self.alg.graph().fmt_infinite(&p)));
        }
        let mut m = self.zero();
        m.terms.insert(p, self.alg.field().one());
        Ok(m)
    }

    /// `r·m` via `v·q = [v = s(q)] q`, `e·q = eq`, `e*·q = τ_{>1}(q)` or `0`.
    pub fn act(self: &Arc<Self>, r: &Element, m: &ChenElement) -> Result<ChenElement, RepError> {
        if **r.algebra() != *self.alg {
            return Err(LpaError::SessionMismatch.into());
        }
        if !Arc::ptr_eq(self, &m.module) {
            return Err(RepError::ModuleMismatch);
        }
        let mut out = self.zero();
        for (mono, c) in r.terms() {
            for (q, a) in &m.terms {
                if let Some(p) = self.act_monomial(mono, q) {
                    out.insert(p, c * a);
                }
            }
        }
        Ok(out)
    }

    fn act_monomial(&self, mono: &Monomial, q: &RationalInfinitePath) -> Option<RationalInfinitePath> {
        let g = self.alg.graph();
        if q.source() != mono.ghost.source() {
            return None;
        }
        let mut cur = q.clone();
        for &e in mono.ghost.edges() {
            cur = cur.strip_first(g, e)?;
        }
        cur.with_prefix(g, &mono.real)
    }
}

#[derive(Debug, Clone)]
pub struct ChenElement {
    module: Arc<ChenModule>,
    terms: BTreeMap<RationalInfinitePath, Scalar>,
}

impl PartialEq for ChenElement {
    fn eq(&self, other: &Self) -> bool {
        *self.module == *other.module && self.terms == other.terms
    }
}

impl Eq for ChenElement {}

impl ChenElement {
    fn insert(&mut self, p: RationalInfinitePath, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&p) {
            None => {
                self.terms.insert(p, c);
            }
            Some(prev) => {
                let sum = &prev + &c;
                if !sum.is_zero() {
                    self.terms.insert(p, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RationalInfinitePath, &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for ChenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.module.alg.graph();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("[{}]({})", g.fmt_infinite(p), c))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `α·u·z ↦ u·[α c^∞]`; meaningful only when `f = 1 − x`, where every residue
/// is a constant.
fn to_chen(chen: &Arc<ChenModule>, m: &SfcElement) -> Result<ChenElement, RepError> {
    let spec = m.spec();
    let g = spec.algebra().graph();
    let mut out = chen.zero();
    for (alpha, u) in m.terms() {
        let p = RationalInfinitePath::new(g, alpha.clone(), spec.cycle().clone())?;
        out.insert(p, u.value().coeff(0));
    }
    Ok(out)
}

/// Canonical indices `α` with `r(α) = v` of length at most `max_len`.
fn indices(spec: &SfcSpec, max_len: usize) -> Vec<Path> {
    let g = spec.algebra().graph();
    let mut layer = vec![Path::vertex(spec.base())];
    let mut all = layer.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for e in g.edge_ids().filter(|&e| g.range(e) == p.source()) {
                let q = g.edge_path(e).concat(p).expect("r(e) = s(p)");
                next.push(q);
            }
        }
        all.extend(next.iter().filter(|q| !q.has_suffix(spec.cycle())).cloned());
        layer = next;
    }
    all
}

/// Checks that `α·z ↔ αc^∞` intertwines the two actions for every generator
/// on every canonical index of length at most `max_len`.
pub fn sfc_to_chen_compat_check(spec: &Arc<SfcSpec>, max_len: usize) -> Result<bool, RepError> {
    if !spec.modulus().is_one_minus_x() {
        return Err(RepError::NotOneMinusX);
    }
    let alg = spec.algebra();
    let g = alg.graph();
    let chen = ChenModule::new(alg, spec.cycle())?;
    let mut generators: Vec<Element> = g.vertex_ids().map(|v| Element::vertex(alg, v)).collect();
    generators.extend(g.edge_ids().map(|e| Element::edge(alg, e)));
    generators.extend(g.edge_ids().map(|e| Element::ghost(alg, e)));
    let one = Residue::one(spec.modulus().clone());
    for alpha in indices(spec, max_len) {
        let m = spec.basis(alpha, one.clone())?;
        let image = to_chen(&chen, &m)?;
        for r in &generators {
            let lhs = to_chen(&chen, &spec.act(r, &m)?)?;
            let rhs = chen.act(r, &image)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, IrrPoly, Poly};
    use crate::text::parse_element;

    fn r2() -> Arc<LeavittAlgebra> {
        LeavittAlgebra::rose(2, Field::Rational).unwrap()
    }

    #[test]
    fn periodic_path_actions() {
        let alg = r2();
        let c = alg.graph().path_from_names("e2").unwrap();
        let chen = ChenModule::new(&alg, &c).unwrap();
        let base = chen.basis(chen.base_path().clone()).unwrap();
        let act = |s: &str| chen.act(&parse_element(s, &alg).unwrap(), &base).unwrap();
        assert_eq!(act("e2"), base);
        assert_eq!(act("e2'"), base);
        assert!(act("e1'").is_zero());
        assert_eq!(act("e1").to_string(), "[e1*(e2)^inf](1)");
        assert_eq!(act("e1*e1'"), chen.zero());
    }

    #[test]
    fn compatibility_with_sfc() {
        let alg = r2();
        for c in ["e2", "e1 e2"] {
            let c = alg.graph().path_from_names(c).unwrap();
            let f = IrrPoly::new(Poly::parse("1 - x", Field::Rational).unwrap()).unwrap();
            let spec = SfcSpec::new(&alg, c, f).unwrap();
            assert_eq!(sfc_to_chen_compat_check(&spec, 4), Ok(true));
        }
        let c = alg.graph().path_from_names("e2").unwrap();
        let f = IrrPoly::new(Poly::parse("1 - x - x^2", Field::Rational).unwrap()).unwrap();
        let spec = SfcSpec::new(&alg, c, f).unwrap();
        assert_eq!(sfc_to_chen_compat_check(&spec, 4), Err(RepError::NotOneMinusX));
    }

    #[test]
    fn rejects_other_tails() {
        let alg = r2();
        let c = alg.graph().path_from_names("e2").unwrap();
        let chen = ChenModule::new(&alg, &c).unwrap();
        let other =
            RationalInfinitePath::periodic(alg.graph(), alg.graph().path_from_names("e1").unwrap())
                .unwrap();
        assert!(matches!(chen.basis(other), Err(RepError::NotTailEquivalent(_))));
    }
}
