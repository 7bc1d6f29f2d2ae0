//! Endomorphisms of `L_K(E)` given by generator images.
//!
//! A [`GenMap`] lists an image for every vertex, edge and ghost edge. Only a
//! map whose images satisfy the defining relations extends to a homomorphism,
//! so [`GenMap::apply`] refuses maps that have not passed
//! [`GenMap::check_relations`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeId, VertexId};
use crate::lpa::{Element, LeavittAlgebra, LpaError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("matrix sizes {0} and {1} do not match")]
    SizeMismatch(usize, usize),
    #[error("matrix has {0} entries, expected {1}")]
    NotSquare(usize, usize),
    #[error("generator map has not been verified")]
    Unverified,
    #[error("P and Q do not satisfy wP = Pw, wQ = Qw, wPQ = wQP = wI at the range vertex")]
    InvalidPair,
    #[error("edges must be distinct with a common source and range")]
    BadEdges,
    #[error("p does not commute with the range vertex")]
    NotCorner,
    #[error("p is not in the subalgebra A(e1, e2)")]
    NotInSubalgebra,
    #[error("the generator images violate {0} relation instance(s)")]
    RelationsViolated(usize),
    #[error("the two maps are not mutually inverse")]
    NotInverse,
    #[error(transparent)]
    Lpa(#[from] LpaError),
}

/// A square matrix over `L_K(E)`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgMatrix {
    n: usize,
    entries: Vec<Element>,
}

impl AlgMatrix {
    pub fn new(n: usize, entries: Vec<Element>) -> Result<AlgMatrix, MorphismError> {
        if entries.len() != n * n || n == 0 {
            return Err(MorphismError::NotSquare(entries.len(), n * n));
        }
        let alg = entries[0].algebra().clone();
        if entries.iter().any(|x| **x.algebra() != *alg) {
            return Err(LpaError::SessionMismatch.into());
        }
        Ok(AlgMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<AlgMatrix, MorphismError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MorphismError::NotSquare(rows.iter().map(Vec::len).sum(), n * n));
        }
        AlgMatrix::new(n, rows.into_iter().flatten().collect())
    }

    /// The identity with `1 = Σ v` on the diagonal.
    pub fn identity(alg: &Arc<LeavittAlgebra>, n: usize) -> AlgMatrix {
        AlgMatrix::diagonal(n, &Element::one(alg))
    }

    pub fn diagonal(n: usize, d: &Element) -> AlgMatrix {
        let zero = Element::zero(d.algebra());
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { d.clone() } else { zero.clone() })
            .collect();
        AlgMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        self.entries[0].algebra()
    }

    pub fn mul(&self, other: &AlgMatrix) -> Result<AlgMatrix, MorphismError> {
        if self.n != other.n {
            return Err(MorphismError::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Element::zero(self.algebra());
                for k in 0..n {
                    acc = acc.checked_add(&self.get(i, k).checked_mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(AlgMatrix { n, entries })
    }

    pub fn add(&self, other: &AlgMatrix) -> Result<AlgMatrix, MorphismError> {
        if self.n != other.n {
            return Err(MorphismError::SizeMismatch(self.n, other.n));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        Ok(AlgMatrix { n: self.n, entries })
    }

    /// `x·A`, entrywise.
    pub fn left_mul(&self, x: &Element) -> AlgMatrix {
        AlgMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| x * a).collect(),
        }
    }

    /// `A·x`, entrywise.
    pub fn right_mul(&self, x: &Element) -> AlgMatrix {
        AlgMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * x).collect(),
        }
    }
}

/// Whether `wP = Pw`, `wQ = Qw` and `wPQ = wQP = wI_n`.
pub fn validate_pq(p: &AlgMatrix, q: &AlgMatrix, w: VertexId) -> bool {
    if p.size() != q.size() || *p.algebra() != *q.algebra() {
        return false;
    }
    let wv = Element::vertex(p.algebra(), w);
    let wi = AlgMatrix::diagonal(p.size(), &wv);
    let (Ok(pq), Ok(qp)) = (p.mul(q), q.mul(p)) else {
        return false;
    };
    p.left_mul(&wv) == p.right_mul(&wv)
        && q.left_mul(&wv) == q.right_mul(&wv)
        && pq.left_mul(&wv) == wi
        && qp.left_mul(&wv) == wi
}

/// One failed instance of a defining relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which of the four defining relations failed.
    pub relation: u8,
    pub instance: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation ({}): {}", self.relation, self.instance)
    }
}

/// Images of all generators, with a flag recording a passed relation check.
#[derive(Debug, Clone)]
pub struct GenMap {
    alg: Arc<LeavittAlgebra>,
    vertices: Vec<Element>,
    edges: Vec<Element>,
    ghosts: Vec<Element>,
    verified: bool,
}

/// Equality of normalized generator images.
impl PartialEq for GenMap {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.ghosts == other.ghosts
    }
}

impl Eq for GenMap {}

impl GenMap {
    /// The identity map, verified.
    pub fn identity(alg: &Arc<LeavittAlgebra>) -> GenMap {
        let g = alg.graph();
        GenMap {
            alg: alg.clone(),
            vertices: g.vertex_ids().map(|v| Element::vertex(alg, v)).collect(),
            edges: g.edge_ids().map(|e| Element::edge(alg, e)).collect(),
            ghosts: g.edge_ids().map(|e| Element::ghost(alg, e)).collect(),
            verified: true,
        }
    }

    /// Overrides generator images of the identity; the result is unverified.
    pub fn with_images(
        alg: &Arc<LeavittAlgebra>,
        vertices: impl IntoIterator<Item = (VertexId, Element)>,
        edges: impl IntoIterator<Item = (EdgeId, Element)>,
        ghosts: impl IntoIterator<Item = (EdgeId, Element)>,
    ) -> Result<GenMap, MorphismError> {
        let mut m = GenMap::identity(alg);
        m.verified = false;
        for (v, x) in vertices {
            m.check_session(&x)?;
            m.vertices[v.0] = x;
        }
        for (e, x) in edges {
            m.check_session(&x)?;
            m.edges[e.0] = x;
        }
        for (e, x) in ghosts {
            m.check_session(&x)?;
            m.ghosts[e.0] = x;
        }
        Ok(m)
    }

    fn check_session(&self, x: &Element) -> Result<(), LpaError> {
        if **x.algebra() == *self.alg {
            Ok(())
        } else {
            Err(LpaError::SessionMismatch)
        }
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.alg
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn vertex_image(&self, v: VertexId) -> &Element {
        &self.vertices[v.0]
    }

    pub fn edge_image(&self, e: EdgeId) -> &Element {
        &self.edges[e.0]
    }

    pub fn ghost_image(&self, e: EdgeId) -> &Element {
        &self.ghosts[e.0]
    }

    pub fn is_identity(&self) -> bool {
        *self == GenMap::identity(&self.alg)
    }

    /// Every violated instance of the defining relations among the images.
    pub fn check_relations(&self) -> Vec<Violation> {
        let g = self.alg.graph();
        let mut out = Vec::new();
        let zero = Element::zero(&self.alg);
        let vname = |v: VertexId| g.vertex_name(v).to_string();
        let ename = |e: EdgeId| g.edge_name(e).to_string();

        for v in g.vertex_ids() {
            for w in g.vertex_ids() {
                let lhs = &self.vertices[v.0] * &self.vertices[w.0];
                let rhs = if v == w { &self.vertices[v.0] } else { &zero };
                if lhs != *rhs {
                    out.push(Violation {
                        relation: 1,
                        instance: format!("phi({})phi({})", vname(v), vname(w)),
                    });
                }
            }
        }
        for e in g.edge_ids() {
            let (s, r) = (g.source(e), g.range(e));
            let (fe, fg) = (&self.edges[e.0], &self.ghosts[e.0]);
            let (fs, fr) = (&self.vertices[s.0], &self.vertices[r.0]);
            let checks = [
                (&(fs * fe) == fe, format!("phi({})phi({}) = phi({1})", vname(s), ename(e))),
                (&(fe * fr) == fe, format!("phi({})phi({}) = phi({0})", ename(e), vname(r))),
                (&(fg * fs) == fg, format!("phi({}')phi({}) = phi({0}')", ename(e), vname(s))),
                (&(fr * fg) == fg, format!("phi({})phi({}') = phi({1}')", vname(r), ename(e))),
            ];
            for (ok, instance) in checks {
                if !ok {
                    out.push(Violation { relation: 2, instance });
                }
            }
        }
        for e in g.edge_ids() {
            for f in g.edge_ids() {
                let lhs = &self.ghosts[e.0] * &self.edges[f.0];
                let rhs = if e == f {
                    &self.vertices[g.range(e).0]
                } else {
                    &zero
                };
                if lhs != *rhs {
                    out.push(Violation {
                        relation: 3,
                        instance: format!("phi({}')phi({})", ename(e), ename(f)),
                    });
                }
            }
        }
        for v in g.vertex_ids().filter(|&v| g.is_regular(v)) {
            let mut sum = Element::zero(&self.alg);
            for &e in g.out_edges(v) {
                sum = &sum + &(&self.edges[e.0] * &self.ghosts[e.0]);
            }
            if sum != self.vertices[v.0] {
                out.push(Violation {
                    relation: 4,
                    instance: format!("phi({}) = sum phi(e)phi(e')", vname(v)),
                });
            }
        }
        out
    }

    /// Runs [`GenMap::check_relations`] and sets the flag accordingly.
    pub fn verify(mut self) -> (GenMap, Vec<Violation>) {
        let report = self.check_relations();
        self.verified = report.is_empty();
        (self, report)
    }

    /// The homomorphic extension of the generator images.
    pub fn apply(&self, x: &Element) -> Result<Element, MorphismError> {
        if !self.verified {
            return Err(MorphismError::Unverified);
        }
        self.check_session(x)?;
        let mut acc = Element::zero(&self.alg);
        for (m, c) in x.terms() {
            let mut img = if m.real.is_vertex() && m.ghost.is_vertex() {
                self.vertices[m.real.source().0].clone()
            } else {
                let mut img: Option<Element> = None;
                let factors = m
                    .real
                    .edges()
                    .iter()
                    .map(|e| &self.edges[e.0])
                    .chain(m.ghost.edges().iter().rev().map(|e| &self.ghosts[e.0]));
                for f in factors {
                    img = Some(match img {
                        None => f.clone(),
                        Some(acc) => &acc * f,
                    });
                }
                img.unwrap()
            };
            img = img.scale(c);
            acc = &acc + &img;
        }
        Ok(acc)
    }

    /// `self ∘ other`, re-verified.
    pub fn compose(&self, other: &GenMap) -> Result<GenMap, MorphismError> {
        if *self.alg != *other.alg {
            return Err(LpaError::SessionMismatch.into());
        }
        if !self.verified || !other.verified {
            return Err(MorphismError::Unverified);
        }
        let map = |xs: &[Element]| -> Result<Vec<Element>, MorphismError> {
            xs.iter().map(|x| self.apply(x)).collect()
        };
        let composed = GenMap {
            alg: self.alg.clone(),
            vertices: map(&other.vertices)?,
            edges: map(&other.edges)?,
            ghosts: map(&other.ghosts)?,
            verified: false,
        };
        Ok(composed.verify().0)
    }
}

impl fmt::Display for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.alg.graph();
        for v in g.vertex_ids() {
            writeln!(f, "vertex {} = {}", g.vertex_name(v), self.vertices[v.0])?;
        }
        for e in g.edge_ids() {
            writeln!(f, "edge {} = {}", g.edge_name(e), self.edges[e.0])?;
        }
        for e in g.edge_ids() {
            writeln!(f, "ghost {} = {}", g.edge_name(e), self.ghosts[e.0])?;
        }
        Ok(())
    }
}

fn common_endpoints(alg: &LeavittAlgebra, edges: &[EdgeId]) -> Result<(VertexId, VertexId), MorphismError> {
    let g = alg.graph();
    let Some(&first) = edges.first() else {
        return Err(MorphismError::BadEdges);
    };
    let (v, w) = (g.source(first), g.range(first));
    for (i, &e) in edges.iter().enumerate() {
        if e.0 >= g.edge_count() || g.source(e) != v || g.range(e) != w || edges[..i].contains(&e) {
            return Err(MorphismError::BadEdges);
        }
    }
    Ok((v, w))
}

/// `φ_{P,Q}`: fixes vertices and unlisted edges, with
/// `φ(e_i) = Σ_k e_k p_{k,i}` and `φ(e_i*) = Σ_k q_{i,k} e_k*`.
pub fn build_phi_pq(
    edges: &[EdgeId],
    p: &AlgMatrix,
    q: &AlgMatrix,
) -> Result<GenMap, MorphismError> {
    let alg = p.algebra().clone();
    let (_, w) = common_endpoints(&alg, edges)?;
    let n = edges.len();
    if p.size() != n || q.size() != n {
        return Err(MorphismError::SizeMismatch(p.size(), n));
    }
    if !validate_pq(p, q, w) {
        return Err(MorphismError::InvalidPair);
    }
    let edge_images = (0..n).map(|i| {
        let img = (0..n).fold(Element::zero(&alg), |acc, k| {
            &acc + &(&Element::edge(&alg, edges[k]) * p.get(k, i))
        });
        (edges[i], img)
    });
    let ghost_images = (0..n).map(|i| {
        let img = (0..n).fold(Element::zero(&alg), |acc, k| {
            &acc + &(q.get(i, k) * &Element::ghost(&alg, edges[k]))
        });
        (edges[i], img)
    });
    let edge_images: Vec<_> = edge_images.collect();
    let ghost_images: Vec<_> = ghost_images.collect();
    let (m, report) = GenMap::with_images(&alg, [], edge_images, ghost_images)?.verify();
    if !report.is_empty() {
        return Err(MorphismError::RelationsViolated(report.len()));
    }
    Ok(m)
}

/// Whether `wφ(p_{ij}) = w p_{ij}` for all entries of `P`, or the same for `Q`.
pub fn iso_condition(
    m: &GenMap,
    p: &AlgMatrix,
    q: &AlgMatrix,
    w: VertexId,
) -> Result<bool, MorphismError> {
    let wv = Element::vertex(m.algebra(), w);
    let fixes = |a: &AlgMatrix| -> Result<bool, MorphismError> {
        for x in a.entries() {
            if &wv * &m.apply(x)? != &wv * x {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(fixes(p)? || fixes(q)?)
}

/// The pair of matrices `[[w, p], [0, w]]` and `[[w, -p], [0, w]]`.
pub fn anick_matrices(p: &Element, w: VertexId) -> (AlgMatrix, AlgMatrix) {
    let alg = p.algebra();
    let wv = Element::vertex(alg, w);
    let zero = Element::zero(alg);
    let make = |x: Element| AlgMatrix {
        n: 2,
        entries: vec![wv.clone(), x, zero.clone(), wv.clone()],
    };
    (make(p.clone()), make(-p))
}

/// `(σ_p, σ_p⁻¹)` with `σ_p(e2) = e2 + e1 p` and `σ_p(e1*) = e1* − p e2*`,
/// all other generators fixed.
pub fn build_anick(
    p: &Element,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<(GenMap, GenMap), MorphismError> {
    let alg = p.algebra();
    if e1 == e2 {
        return Err(MorphismError::BadEdges);
    }
    let (_, w) = common_endpoints(alg, &[e1, e2])?;
    let wv = Element::vertex(alg, w);
    if &wv * p != p * &wv {
        return Err(MorphismError::NotCorner);
    }
    if !p.in_anick_subalgebra(e1, e2) {
        return Err(MorphismError::NotInSubalgebra);
    }
    let (pm, qm) = anick_matrices(p, w);
    let sigma = build_phi_pq(&[e1, e2], &pm, &qm)?;
    let inverse = build_phi_pq(&[e1, e2], &qm, &pm)?;
    if !sigma.compose(&inverse)?.is_identity() || !inverse.compose(&sigma)?.is_identity() {
        return Err(MorphismError::NotInverse);
    }
    Ok((sigma, inverse))
}
