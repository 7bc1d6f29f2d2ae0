use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::graph::{EdgeId, Path, VertexId};
use crate::lpa::{Element, LeavittAlgebra, LpaError, Monomial};
use crate::morphisms::{build_anick, GenMap};
use crate::scalars::{IrrPoly, Residue};

use super::RepError;

/// The data `(c, f)` of the module generated by `z` with `f(c)·z = 0`.
#[derive(Debug)]
pub struct SfcSpec {
    alg: Arc<LeavittAlgebra>,
    c: Path,
    f: Arc<IrrPoly>,
    f1: Residue,
}

impl SfcSpec {
    pub fn new(alg: &Arc<LeavittAlgebra>, c: Path, f: IrrPoly) -> Result<Arc<SfcSpec>, RepError> {
        let g = alg.graph();
        if !g.is_simple_closed(&c) {
            return Err(RepError::NotSimpleClosed(g.fmt_path(&c)));
        }
        if f.field() != alg.field() {
            return Err(RepError::FieldMismatch(
                f.field().to_string(),
                alg.field().to_string(),
            ));
        }
        let f = Arc::new(f);
        let f1 = Residue::new(f.f1(), f.clone());
        Ok(Arc::new(SfcSpec {
            alg: alg.clone(),
            c,
            f,
            f1,
        }))
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.alg
    }

    pub fn cycle(&self) -> &Path {
        &self.c
    }

    pub fn base(&self) -> VertexId {
        self.c.source()
    }

    pub fn modulus(&self) -> &Arc<IrrPoly> {
        &self.f
    }

    /// `f(c)` as an algebra element.
    pub fn f_of_c(&self) -> Element {
        Element::eval_poly_at_cycle(&self.alg, self.f.poly(), &self.c)
            .expect("c is closed")
    }

    /// The residue `u(x̄)` as the algebra element `u(c)`.
    pub fn residue_at_cycle(&self, u: &Residue) -> Element {
        Element::eval_poly_at_cycle(&self.alg, u.value(), &self.c).expect("c is closed")
    }

    pub fn zero(self: &Arc<Self>) -> SfcElement {
        SfcElement {
            spec: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The generator `z`.
    pub fn generator(self: &Arc<Self>) -> SfcElement {
        let mut m = self.zero();
        m.terms.insert(Path::vertex(self.base()), Residue::one(self.f.clone()));
        m
    }

    /// `α·u(c)·z`.
    pub fn basis(self: &Arc<Self>, alpha: Path, u: Residue) -> Result<SfcElement, RepError> {
        self.canonicalize([(alpha, u)])
    }

    /// Strips trailing copies of `c` from every index, multiplying by `x̄`
    /// once per copy, and merges like indices.
    pub fn canonicalize(
        self: &Arc<Self>,
        raw: impl IntoIterator<Item = (Path, Residue)>,
    ) -> Result<SfcElement, RepError> {
        let mut m = self.zero();
        for (alpha, u) in raw {
            if alpha.range() != self.base() {
                return Err(RepError::RangeMismatch(self.alg.graph().fmt_path(&alpha)));
            }
            if u.modulus().poly() != self.f.poly() {
                return Err(RepError::Scalar(crate::scalars::ScalarError::ModulusMismatch));
            }
            m.insert(alpha, u);
        }
        Ok(m)
    }

    fn strip_cycles(&self, mut alpha: Path, mut u: Residue) -> (Path, Residue) {
        let x = Residue::x(self.f.clone());
        while let Some(rest) = alpha.strip_suffix(&self.c) {
            alpha = rest;
            u = u.mul(&x);
        }
        (alpha, u)
    }

    fn check_session(&self, r: &Element) -> Result<(), RepError> {
        if **r.algebra() == *self.alg {
            Ok(())
        } else {
            Err(LpaError::SessionMismatch.into())
        }
    }

    /// `r·m`.
    pub fn act(self: &Arc<Self>, r: &Element, m: &SfcElement) -> Result<SfcElement, RepError> {
        self.check_session(r)?;
        if !Arc::ptr_eq(self, &m.spec) {
            return Err(RepError::ModuleMismatch);
        }
        let mut out = self.zero();
        for (mono, coeff) in r.terms() {
            for (alpha, u) in &m.terms {
                if let Some((idx, res)) = self.act_monomial(mono, alpha, u) {
                    out.insert(idx, res.scale(coeff));
                }
            }
        }
        Ok(out)
    }

    /// `p q*` applied to `α·u(c)·z`, before merging.
    fn act_monomial(&self, mono: &Monomial, alpha: &Path, u: &Residue) -> Option<(Path, Residue)> {
        if alpha.source() != mono.ghost.source() {
            return None;
        }
        let mut idx = alpha.clone();
        let mut res = u.clone();
        // q* = e_k*⋯e_1*, so e_1* acts first
        for &e in mono.ghost.edges() {
            if idx.is_vertex() {
                // u(c)z = c·(u f_1)(c)·z, then e* c = c' when c = e c'
                if self.c.first_edge() != Some(e) {
                    return None;
                }
                let head = self.alg.graph().edge_path(e);
                idx = self.c.strip_prefix(&head)?;
                res = res.mul(&self.f1);
            } else {
                let head = self.alg.graph().edge_path(e);
                idx = idx.strip_prefix(&head)?;
            }
        }
        let idx = mono.real.concat(&idx).ok()?;
        Some((idx, res))
    }

    /// Whether `r·z = 0`, i.e. `r ∈ L_K(E)·f(c)` for `r` with `r v = r`.
    pub fn annihilates(self: &Arc<Self>, r: &Element) -> Result<bool, RepError> {
        Ok(self.act(r, &self.generator())?.is_zero())
    }

    /// `p ≡ q` modulo `L_K(R_n)·f(c)`, for `p, q` in `A(e1, e2)`.
    pub fn equiv(self: &Arc<Self>, p: &Element, q: &Element) -> Result<bool, RepError> {
        for x in [p, q] {
            if !x.in_a_subalgebra()? {
                return Err(RepError::NotInSubalgebra(x.to_string()));
            }
        }
        self.annihilates(&p.checked_sub(q)?)
    }

    /// The endomorphism `z ↦ u(c)·z` applied to `m`.
    pub fn endo(self: &Arc<Self>, u: &Residue, m: &SfcElement) -> Result<SfcElement, RepError> {
        if u.modulus().poly() != self.f.poly() {
            return Err(RepError::Scalar(crate::scalars::ScalarError::ModulusMismatch));
        }
        let mut out = self.zero();
        for (alpha, w) in &m.terms {
            out.insert(alpha.clone(), w.mul(u));
        }
        Ok(out)
    }

    /// An `r` with `r·y = z`.
    ///
    /// Let `β` be the smallest index of `y`. The infinite paths `β_i c^∞` of
    /// the indices are pairwise distinct, so for some `l ≥ 0` the path
    /// `γ = β c^l` is a prefix of `βc^∞` only. Then `γ*·y = ρ(c)·z` with
    /// `ρ ≠ 0`, and `r = ρ⁻¹(c)·γ*`.
    pub fn witness(self: &Arc<Self>, y: &SfcElement) -> Result<Element, RepError> {
        if !Arc::ptr_eq(self, &y.spec) {
            return Err(RepError::ModuleMismatch);
        }
        let beta = y
            .terms
            .keys()
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges().cmp(b.edges())))
            .ok_or(RepError::ZeroElement)?;
        let z = self.generator();
        let longest = y.terms.keys().map(Path::len).max().unwrap_or(0);
        let bound = longest / self.c.len() + 2;
        for l in 0..=bound {
            let gamma = beta
                .concat(&self.c.power(l))
                .expect("r(β) = s(c)");
            let gstar = Element::ghost_path(&self.alg, &gamma);
            let image = self.act(&gstar, y)?;
            let Some((idx, rho)) = image.as_single_term() else {
                continue;
            };
            if !idx.is_vertex() {
                continue;
            }
            let h = rho.inverse()?;
            let r = &self.residue_at_cycle(&h) * &gstar;
            if self.act(&r, y)? == z {
                return Ok(r);
            }
        }
        Err(RepError::WitnessFailed)
    }
}

/// `Σ α·u(c)·z` in canonical coordinates.
#[derive(Debug, Clone)]
pub struct SfcElement {
    spec: Arc<SfcSpec>,
    terms: BTreeMap<Path, Residue>,
}

impl PartialEq for SfcElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) && self.terms == other.terms
    }
}

impl Eq for SfcElement {}

impl SfcElement {
    fn insert(&mut self, alpha: Path, u: Residue) {
        if u.is_zero() {
            return;
        }
        let (alpha, u) = self.spec.strip_cycles(alpha, u);
        match self.terms.remove(&alpha) {
            None => {
                self.terms.insert(alpha, u);
            }
            Some(prev) => {
                let sum = prev.add(&u);
                if !sum.is_zero() {
                    self.terms.insert(alpha, sum);
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<SfcSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Residue)> {
        self.terms.iter()
    }

    pub fn as_single_term(&self) -> Option<(&Path, &Residue)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn add(&self, other: &SfcElement) -> Result<SfcElement, RepError> {
        if !Arc::ptr_eq(&self.spec, &other.spec) {
            return Err(RepError::ModuleMismatch);
        }
        let mut out = self.clone();
        for (a, u) in &other.terms {
            out.insert(a.clone(), u.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &crate::scalars::Scalar) -> SfcElement {
        let mut out = self.spec.zero();
        for (a, u) in &self.terms {
            out.insert(a.clone(), u.scale(c));
        }
        out
    }

    /// Terms ordered by index length, then edge names.
    pub fn display_terms(&self) -> Vec<(&Path, &Residue)> {
        let g = self.spec.alg.graph();
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by_key(|(a, _)| {
            (
                a.len(),
                a.edges().iter().map(|e| g.edge_name(*e).to_string()).collect::<Vec<_>>(),
            )
        });
        out
    }
}

impl fmt::Display for SfcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.spec.alg.graph();
        let parts: Vec<String> = self
            .display_terms()
            .into_iter()
            .map(|(a, u)| format!("[{}]({})", g.fmt_path(a), u))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The twisted module: `r ∗ m = σ_p(r)·m` on a rose with `c ∈ C_s(R_n)` and
/// `p ∈ A(e1, e2)`.
#[derive(Debug, Clone)]
pub struct SfcTwist {
    spec: Arc<SfcSpec>,
    p: Element,
    sigma: GenMap,
    sigma_inv: GenMap,
}

impl SfcTwist {
    pub fn new(spec: &Arc<SfcSpec>, p: &Element) -> Result<SfcTwist, RepError> {
        let alg = spec.algebra();
        let (e1, e2): (EdgeId, EdgeId) = alg.rose_pair()?;
        if !alg.graph().in_cs(spec.cycle())? {
            return Err(RepError::NotInCs(alg.graph().fmt_path(spec.cycle())));
        }
        if **p.algebra() != **alg {
            return Err(LpaError::SessionMismatch.into());
        }
        if !p.in_anick_subalgebra(e1, e2) {
            return Err(RepError::NotInSubalgebra(p.to_string()));
        }
        let (sigma, sigma_inv) = build_anick(p, e1, e2)?;
        Ok(SfcTwist {
            spec: spec.clone(),
            p: p.clone(),
            sigma,
            sigma_inv,
        })
    }

    pub fn spec(&self) -> &Arc<SfcSpec> {
        &self.spec
    }

    pub fn twist(&self) -> &Element {
        &self.p
    }

    pub fn sigma(&self) -> &GenMap {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> &GenMap {
        &self.sigma_inv
    }

    /// `r ∗ m = σ_p(r)·m`.
    pub fn act(&self, r: &Element, m: &SfcElement) -> Result<SfcElement, RepError> {
        let image = self.sigma.apply(r)?;
        self.spec.act(&image, m)
    }
}
