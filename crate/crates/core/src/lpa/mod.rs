//! The Leavitt path algebra `L_K(E)` of a finite graph.
//!
//! Elements are stored in the basis of monomials `p·q*` (`r(p) = r(q)`) that
//! avoid a *special junction*: for every regular vertex `w` one out-edge `γ_w`
//! is designated special, and a monomial whose real and ghost parts both end
//! in `γ_w` is rewritten with
//!
//! ```text
//! γ_w γ_w* = w − Σ_{e ∈ s⁻¹(w), e ≠ γ_w} e e*
//! ```
//!
//! Every other defining relation is absorbed by the multiplication rule on
//! monomials, so the rewritten form is unique and equality of elements is
//! equality of coefficient maps.

mod element;
mod normal;

use std::cmp::Ordering;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, Path, VertexId};
use crate::scalars::{Field, ScalarError};

pub use element::Element;
pub use normal::{multiply_monomials, reduce_monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpaError {
    #[error("elements belong to different algebras")]
    SessionMismatch,
    #[error("monomial {0} has r(p) != r(q)")]
    RangeMismatch(String),
    #[error("path {0} is not closed")]
    NotClosed(String),
    #[error("special edge {0} does not leave vertex {1}")]
    BadSpecialEdge(String, String),
    #[error("the algebra is not over a rose with at least two petals")]
    NotARose,
    #[error("edges {0} and {1} must be distinct with common source and range")]
    BadEdgePair(String, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The designated special edge `γ_w` of each regular vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecialEdges(Vec<Option<EdgeId>>);

impl SpecialEdges {
    /// The last-declared out-edge of each regular vertex (the default).
    pub fn last_declared(graph: &Graph) -> SpecialEdges {
        SpecialEdges(
            graph
                .vertex_ids()
                .map(|v| graph.out_edges(v).last().copied())
                .collect(),
        )
    }

    pub fn first_declared(graph: &Graph) -> SpecialEdges {
        SpecialEdges(
            graph
                .vertex_ids()
                .map(|v| graph.out_edges(v).first().copied())
                .collect(),
        )
    }

    /// Default table with `γ_{s(e)} = e` for each listed edge.
    pub fn with_overrides(graph: &Graph, overrides: &[EdgeId]) -> SpecialEdges {
        let mut table = SpecialEdges::last_declared(graph);
        for &e in overrides {
            table.0[graph.source(e).0] = Some(e);
        }
        table
    }

    pub fn get(&self, v: VertexId) -> Option<EdgeId> {
        self.0[v.0]
    }

    pub fn is_special(&self, graph: &Graph, e: EdgeId) -> bool {
        self.get(graph.source(e)) == Some(e)
    }
}

/// A session: graph, coefficient field and special-edge table. Shared by
/// every [`Element`] through an `Arc` and never mutated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeavittAlgebra {
    graph: Arc<Graph>,
    field: Field,
    special: SpecialEdges,
}

impl LeavittAlgebra {
    pub fn new(graph: Arc<Graph>, field: Field) -> Arc<LeavittAlgebra> {
        let special = SpecialEdges::last_declared(&graph);
        Arc::new(LeavittAlgebra {
            graph,
            field,
            special,
        })
    }

    pub fn with_special(
        graph: Arc<Graph>,
        field: Field,
        special: SpecialEdges,
    ) -> Result<Arc<LeavittAlgebra>, LpaError> {
        for v in graph.vertex_ids() {
            let ok = match special.get(v) {
                Some(e) => graph.source(e) == v,
                None => !graph.is_regular(v),
            };
            if !ok {
                return Err(LpaError::BadSpecialEdge(
                    special
                        .get(v)
                        .map(|e| graph.edge_name(e).to_string())
                        .unwrap_or_default(),
                    graph.vertex_name(v).to_string(),
                ));
            }
        }
        Ok(Arc::new(LeavittAlgebra {
            graph,
            field,
            special,
        }))
    }

    /// `L_K(R_n)`.
    pub fn rose(n: usize, field: Field) -> Result<Arc<LeavittAlgebra>, LpaError> {
        Ok(LeavittAlgebra::new(Arc::new(Graph::rose(n)?), field))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn special(&self) -> &SpecialEdges {
        &self.special
    }

    /// `(e1, e2)` of the rose, i.e. its first two declared loops.
    pub fn rose_pair(&self) -> Result<(EdgeId, EdgeId), LpaError> {
        match self.graph.rose_petals() {
            Some(n) if n >= 2 => Ok((EdgeId(0), EdgeId(1))),
            _ => Err(LpaError::NotARose),
        }
    }
}

/// `p·q*` with `r(p) = r(q)`. A vertex is the monomial with both parts of
/// length zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub real: Path,
    pub ghost: Path,
}

impl Monomial {
    pub fn new(real: Path, ghost: Path) -> Option<Monomial> {
        (real.range() == ghost.range()).then_some(Monomial { real, ghost })
    }

    pub fn vertex(v: VertexId) -> Monomial {
        Monomial {
            real: Path::vertex(v),
            ghost: Path::vertex(v),
        }
    }

    pub fn total_len(&self) -> usize {
        self.real.len() + self.ghost.len()
    }

    /// `|p| − |q|`.
    pub fn degree(&self) -> i64 {
        self.real.len() as i64 - self.ghost.len() as i64
    }

    pub fn star(&self) -> Monomial {
        Monomial {
            real: self.ghost.clone(),
            ghost: self.real.clone(),
        }
    }

    pub fn has_junction(&self, graph: &Graph, special: &SpecialEdges) -> bool {
        match (self.real.last_edge(), self.ghost.last_edge()) {
            (Some(a), Some(b)) => a == b && special.is_special(graph, a),
            _ => false,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_len()
            .cmp(&other.total_len())
            .then_with(|| self.real.edges().cmp(other.real.edges()))
            .then_with(|| self.ghost.edges().cmp(other.ghost.edges()))
            .then_with(|| self.real.source().cmp(&other.real.source()))
            .then_with(|| self.ghost.source().cmp(&other.ghost.source()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
