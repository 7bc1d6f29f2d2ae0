//! Reduction of words in the generators by the defining relations, applied
//! anywhere in the word rather than only at the seam of `p q*`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::lpa::{Element, LeavittAlgebra, SpecialEdges};
use crate::scalars::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Vertex(VertexId),
    Edge(EdgeId),
    Ghost(EdgeId),
}

pub type Word = Vec<Gen>;

/// A linear combination of words, unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawExpr {
    pub terms: Vec<(Scalar, Word)>,
}

impl RawExpr {
    pub fn fmt_with(&self, graph: &Graph) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, w)| format!("({})*{}", c, fmt_word(graph, w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Evaluates the words through [`Element`] multiplication.
    pub fn to_element(&self, alg: &Arc<LeavittAlgebra>) -> Element {
        let mut acc = Element::zero(alg);
        for (c, w) in &self.terms {
            let mut prod = gen_element(alg, w[0]);
            for &g in &w[1..] {
                prod = &prod * &gen_element(alg, g);
            }
            acc = &acc + &prod.scale(c);
        }
        acc
    }
}

fn gen_element(alg: &Arc<LeavittAlgebra>, g: Gen) -> Element {
    match g {
        Gen::Vertex(v) => Element::vertex(alg, v),
        Gen::Edge(e) => Element::edge(alg, e),
        Gen::Ghost(e) => Element::ghost(alg, e),
    }
}

pub fn fmt_word(graph: &Graph, w: &[Gen]) -> String {
    w.iter()
        .map(|g| match *g {
            Gen::Vertex(v) => graph.vertex_name(v).to_string(),
            Gen::Edge(e) => graph.edge_name(e).to_string(),
            Gen::Ghost(e) => format!("{}'", graph.edge_name(e)),
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// The words of an element: `p q*` becomes `p_1⋯p_k q_l*⋯q_1*`.
pub fn element_words(x: &Element) -> RawExpr {
    let terms = x
        .terms()
        .map(|(m, c)| {
            let word: Word = if m.real.is_vertex() && m.ghost.is_vertex() {
                vec![Gen::Vertex(m.real.source())]
            } else {
                m.real
                    .edges()
                    .iter()
                    .map(|&e| Gen::Edge(e))
                    .chain(m.ghost.edges().iter().rev().map(|&e| Gen::Ghost(e)))
                    .collect()
            };
            (c.clone(), word)
        })
        .collect();
    RawExpr { terms }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost redex first, terms processed depth-first, merged at the end.
    LeftmostDepthFirst,
    /// Rightmost redex first, all terms advanced together and merged each round.
    RightmostBreadthFirst,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::LeftmostDepthFirst => write!(f, "leftmost"),
            Strategy::RightmostBreadthFirst => write!(f, "rightmost"),
        }
    }
}

enum Step {
    Zero,
    Replace(Vec<(bool, Word)>),
}

/// The result of rewriting the redex at `i, i+1`, or `None` if there is none.
/// Replacement words carry a sign flag (true for negative).
fn rewrite_at(graph: &Graph, special: &SpecialEdges, w: &[Gen], i: usize) -> Option<Step> {
    use Gen::*;
    let (a, b) = (w[i], w[i + 1]);
    let splice = |mid: &[Gen]| -> Word {
        let mut out = w[..i].to_vec();
        out.extend_from_slice(mid);
        out.extend_from_slice(&w[i + 2..]);
        out
    };
    let keep = |g: Gen, ok: bool| -> Step {
        if ok {
            Step::Replace(vec![(false, splice(&[g]))])
        } else {
            Step::Zero
        }
    };
    Some(match (a, b) {
        (Vertex(u), Vertex(v)) => keep(Vertex(u), u == v),
        (Vertex(u), Edge(e)) => keep(Edge(e), graph.source(e) == u),
        (Edge(e), Vertex(u)) => keep(Edge(e), graph.range(e) == u),
        (Vertex(u), Ghost(e)) => keep(Ghost(e), graph.range(e) == u),
        (Ghost(e), Vertex(u)) => keep(Ghost(e), graph.source(e) == u),
        (Ghost(e), Edge(f)) => keep(Vertex(graph.range(e)), e == f),
        (Edge(e), Edge(f)) if graph.range(e) != graph.source(f) => Step::Zero,
        (Ghost(e), Ghost(f)) if graph.source(e) != graph.range(f) => Step::Zero,
        (Edge(e), Ghost(f)) if graph.range(e) != graph.range(f) => Step::Zero,
        (Edge(e), Ghost(f)) if e == f && special.is_special(graph, e) => {
            let u = graph.source(e);
            let mut out = vec![(false, splice(&[Vertex(u)]))];
            for &d in graph.out_edges(u) {
                if d != e {
                    out.push((true, splice(&[Edge(d), Ghost(d)])));
                }
            }
            Step::Replace(out)
        }
        _ => return None,
    })
}

fn find_redex(graph: &Graph, special: &SpecialEdges, w: &[Gen], rightmost: bool) -> Option<Step> {
    let n = w.len();
    if n < 2 {
        return None;
    }
    if rightmost {
        (0..n - 1).rev().find_map(|i| rewrite_at(graph, special, w, i))
    } else {
        (0..n - 1).find_map(|i| rewrite_at(graph, special, w, i))
    }
}

fn add_to(out: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(w);
    match entry {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + &c;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

/// Fully reduced words with their coefficients; the empty map is zero.
pub fn reduce(
    graph: &Graph,
    special: &SpecialEdges,
    expr: &RawExpr,
    strategy: Strategy,
) -> BTreeMap<Word, Scalar> {
    let mut out = BTreeMap::new();
    match strategy {
        Strategy::LeftmostDepthFirst => {
            let mut stack: Vec<(Scalar, Word)> = expr.terms.clone();
            while let Some((c, w)) = stack.pop() {
                match find_redex(graph, special, &w, false) {
                    None => add_to(&mut out, w, c),
                    Some(Step::Zero) => {}
                    Some(Step::Replace(ws)) => {
                        for (neg, w2) in ws {
                            stack.push((if neg { -&c } else { c.clone() }, w2));
                        }
                    }
                }
            }
        }
        Strategy::RightmostBreadthFirst => {
            let mut layer: BTreeMap<Word, Scalar> = BTreeMap::new();
            for (c, w) in &expr.terms {
                add_to(&mut layer, w.clone(), c.clone());
            }
            while !layer.is_empty() {
                let mut next = BTreeMap::new();
                for (w, c) in layer {
                    match find_redex(graph, special, &w, true) {
                        None => add_to(&mut out, w, c),
                        Some(Step::Zero) => {}
                        Some(Step::Replace(ws)) => {
                            for (neg, w2) in ws {
                                add_to(&mut next, w2, if neg { -&c } else { c.clone() });
                            }
                        }
                    }
                }
                layer = next;
            }
        }
    }
    out
}
