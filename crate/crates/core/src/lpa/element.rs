use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::graph::{EdgeId, Path, VertexId};
use crate::scalars::{Poly, Scalar};

use super::normal::{accumulate, multiply_monomials, reduce_monomial};
use super::{LeavittAlgebra, LpaError, Monomial, SpecialEdges};

/// A finite linear combination of junction-free monomials with nonzero
/// coefficients. Two elements are equal iff their coefficient maps are.
#[derive(Clone)]
pub struct Element {
    alg: Arc<LeavittAlgebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for Element {}

fn same_algebra(a: &Arc<LeavittAlgebra>, b: &Arc<LeavittAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Element {
    pub fn zero(alg: &Arc<LeavittAlgebra>) -> Element {
        Element {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `1 = Σ_v v`.
    pub fn one(alg: &Arc<LeavittAlgebra>) -> Element {
        Element::scalar(alg, alg.field().one())
    }

    pub fn scalar(alg: &Arc<LeavittAlgebra>, c: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        for v in alg.graph().vertex_ids() {
            accumulate(&mut terms, Monomial::vertex(v), c.clone());
        }
        Element {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn vertex(alg: &Arc<LeavittAlgebra>, v: VertexId) -> Element {
        Element::from_monomial(alg, Monomial::vertex(v))
    }

    pub fn edge(alg: &Arc<LeavittAlgebra>, e: EdgeId) -> Element {
        Element::path(alg, &alg.graph().edge_path(e))
    }

    /// The ghost edge `e*`.
    pub fn ghost(alg: &Arc<LeavittAlgebra>, e: EdgeId) -> Element {
        Element::ghost_path(alg, &alg.graph().edge_path(e))
    }

    /// A real path `p`; always junction-free.
    pub fn path(alg: &Arc<LeavittAlgebra>, p: &Path) -> Element {
        Element::from_monomial(
            alg,
            Monomial {
                real: p.clone(),
                ghost: Path::vertex(p.range()),
            },
        )
    }

    /// `q*` for a real path `q`.
    pub fn ghost_path(alg: &Arc<LeavittAlgebra>, q: &Path) -> Element {
        Element::path(alg, q).star()
    }

    fn from_monomial(alg: &Arc<LeavittAlgebra>, m: Monomial) -> Element {
        let mut out = Element::zero(alg);
        out.add_monomial(&alg.field().one(), m);
        out
    }

    /// `c·p·q*` in normal form.
    pub fn monomial(
        alg: &Arc<LeavittAlgebra>,
        c: Scalar,
        real: Path,
        ghost: Path,
    ) -> Result<Element, LpaError> {
        Element::normal_form(alg, [(c, real, ghost)])
    }

    /// Normal form of a raw linear combination of `p·q*` monomials.
    pub fn normal_form(
        alg: &Arc<LeavittAlgebra>,
        raw: impl IntoIterator<Item = (Scalar, Path, Path)>,
    ) -> Result<Element, LpaError> {
        let mut out = Element::zero(alg);
        for (c, real, ghost) in raw {
            let Some(m) = Monomial::new(real, ghost) else {
                return Err(LpaError::RangeMismatch(String::from("p q*")));
            };
            for e in m.real.edges().iter().chain(m.ghost.edges()) {
                if e.0 >= alg.graph().edge_count() {
                    return Err(LpaError::Graph(crate::graph::GraphError::UnknownEdge(
                        format!("#{}", e.0),
                    )));
                }
            }
            out.add_monomial(&c, m);
        }
        Ok(out)
    }

    fn add_monomial(&mut self, c: &Scalar, m: Monomial) {
        let g = self.alg.graph.clone();
        reduce_monomial(&g, &self.alg.special, c, m.real, m.ghost, &mut self.terms);
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.alg
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.alg.field().zero())
    }

    /// If the element is `c·m` for a single monomial, returns it.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Scalar)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    fn check(&self, other: &Element) -> Result<(), LpaError> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(LpaError::SessionMismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, LpaError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Element {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, LpaError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, LpaError> {
        self.check(other)?;
        let mut out = Element::zero(&self.alg);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = multiply_monomials(a, b) {
                    out.add_monomial(&(ca * cb), m);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Element {
        self.scale(&-self.alg.field().one())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.alg);
        }
        Element {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Element {
        (0..k).fold(Element::one(&self.alg), |acc, _| &acc * self)
    }

    /// The involution: `K`-linear with `(p q*)* = q p*`.
    pub fn star(&self) -> Element {
        Element {
            alg: self.alg.clone(),
            // the junction condition is symmetric in p and q
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.star(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous components by `|p| − |q|`.
    pub fn graded_parts(&self) -> BTreeMap<i64, Element> {
        let mut parts: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| Element::zero(&self.alg))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    /// The degree when the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let parts = self.graded_parts();
        (parts.len() == 1).then(|| *parts.keys().next().unwrap())
    }

    /// `a_0·base + a_1·x + ⋯ + a_n·x^n`.
    pub fn eval_poly(f: &Poly, x: &Element, base: &Element) -> Element {
        let mut acc = Element::zero(&x.alg);
        let mut power = base.clone();
        for (i, a) in f.coeffs().iter().enumerate() {
            if i > 0 {
                power = &power * x;
            }
            if !a.is_zero() {
                acc = &acc + &power.scale(a);
            }
        }
        acc
    }

    /// `f(c) = a_0 v + a_1 c + ⋯ + a_n c^n` for a closed path `c` based at `v`.
    pub fn eval_poly_at_cycle(
        alg: &Arc<LeavittAlgebra>,
        f: &Poly,
        c: &Path,
    ) -> Result<Element, LpaError> {
        if !c.is_closed() {
            return Err(LpaError::NotClosed(alg.graph().fmt_path(c)));
        }
        let v = Element::vertex(alg, c.source());
        Ok(Element::eval_poly(f, &Element::path(alg, c), &v))
    }

    /// Coordinates of this element in the junction-free basis of another
    /// special-edge table.
    pub fn expand_in(&self, special: &SpecialEdges) -> BTreeMap<Monomial, Scalar> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            reduce_monomial(
                self.alg.graph(),
                special,
                c,
                m.real.clone(),
                m.ghost.clone(),
                &mut out,
            );
        }
        out
    }

    /// Membership in `A_E(e1, e2)`, the subalgebra generated by the vertices,
    /// `E^1 ∖ {e2}` and the ghosts of `E^1 ∖ {e1}`.
    ///
    /// With `γ_{s(e2)} = e2` the monomials `p q*` where `p` avoids `e2` and `q`
    /// avoids `e1` are junction-free basis elements spanning `A_E(e1, e2)`, so
    /// membership is read off the coordinates in that basis.
    pub fn in_anick_subalgebra(&self, e1: EdgeId, e2: EdgeId) -> bool {
        let g = self.alg.graph();
        let table = SpecialEdges::with_overrides(g, &[e2]);
        self.expand_in(&table).keys().all(|m| {
            !m.real.edges().contains(&e2) && !m.ghost.edges().contains(&e1)
        })
    }

    /// Membership in `A_{R_n}(e1, e2)` for a rose session.
    pub fn in_a_subalgebra(&self) -> Result<bool, LpaError> {
        let (e1, e2) = self.alg.rose_pair()?;
        Ok(self.in_anick_subalgebra(e1, e2))
    }

    /// Terms in display order: total length, then edge names of `p`, then of `q`.
    pub fn display_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let g = self.alg.graph();
        let names = |p: &Path| -> Vec<&str> { p.edges().iter().map(|e| g.edge_name(*e)).collect() };
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| {
            a.total_len()
                .cmp(&b.total_len())
                .then_with(|| names(&a.real).cmp(&names(&b.real)))
                .then_with(|| names(&a.ghost).cmp(&names(&b.ghost)))
                .then_with(|| g.vertex_name(a.real.source()).cmp(g.vertex_name(b.real.source())))
                .then_with(|| g.vertex_name(a.ghost.source()).cmp(g.vertex_name(b.ghost.source())))
        });
        out
    }

    /// `e1*e2'` for `e1 e2*`; ghost parts are written reversed with postfix `'`.
    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let g = self.alg.graph();
        if m.real.is_vertex() && m.ghost.is_vertex() {
            return g.vertex_name(m.real.source()).to_string();
        }
        let mut factors: Vec<String> = m.real.edges().iter().map(|e| g.edge_name(*e).to_string()).collect();
        factors.extend(m.ghost.edges().iter().rev().map(|e| format!("{}'", g.edge_name(*e))));
        factors.join("*")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{}", self.fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", mag, self.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("elements of the same algebra")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("elements of the same algebra")
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("elements of the same algebra")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}
