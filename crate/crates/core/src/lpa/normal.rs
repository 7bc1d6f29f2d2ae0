use std::collections::BTreeMap;

use crate::graph::{Graph, Path};
use crate::scalars::Scalar;

use super::{Monomial, SpecialEdges};

/// Adds `coeff·m` to `out`, dropping the entry if it cancels.
pub(crate) fn accumulate(out: &mut BTreeMap<Monomial, Scalar>, m: Monomial, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match out.entry(m) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + &coeff;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

/// Rewrites `coeff·p·q*` into junction-free monomials and adds them to `out`.
///
/// Each step peels one special pair `γγ*` off the seam: the non-special
/// replacement terms `p'e e* q'*` are already junction-free, and the remaining
/// `p' q'*` is two edges shorter, so the loop ends after at most
/// `min(|p|, |q|)` steps.
pub fn reduce_monomial(
    graph: &Graph,
    special: &SpecialEdges,
    coeff: &Scalar,
    real: Path,
    ghost: Path,
    out: &mut BTreeMap<Monomial, Scalar>,
) {
    debug_assert_eq!(real.range(), ghost.range());
    let mut current = Monomial { real, ghost };
    while current.has_junction(graph, special) {
        let gamma = current.real.last_edge().unwrap();
        let w = graph.source(gamma);
        let tail = graph.edge_path(gamma);
        let real = current.real.strip_suffix(&tail).unwrap();
        let ghost = current.ghost.strip_suffix(&tail).unwrap();
        let neg = -coeff;
        for &e in graph.out_edges(w) {
            if e == gamma {
                continue;
            }
            let step = graph.edge_path(e);
            let m = Monomial {
                real: real.concat(&step).unwrap(),
                ghost: ghost.concat(&step).unwrap(),
            };
            accumulate(out, m, neg.clone());
        }
        current = Monomial { real, ghost };
    }
    accumulate(out, current, coeff.clone());
}

/// `(p q*)(r s*)` before junction rewriting: `q* r` cancels to a path
/// remainder via `e* f = δ_{e,f} r(e)`, or vanishes.
pub fn multiply_monomials(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if a.ghost.source() != b.real.source() {
        return None;
    }
    if let Some(rest) = b.real.strip_prefix(&a.ghost) {
        // q is a prefix of r: p·(r∖q)·s*
        let real = a.real.concat(&rest).ok()?;
        return Some(Monomial {
            real,
            ghost: b.ghost.clone(),
        });
    }
    if let Some(rest) = a.ghost.strip_prefix(&b.real) {
        // r is a prefix of q: p·(s·(q∖r))*
        let ghost = b.ghost.concat(&rest).ok()?;
        return Some(Monomial {
            real: a.real.clone(),
            ghost,
        });
    }
    None
}
