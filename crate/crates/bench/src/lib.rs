//! Fixed workloads shared by the benchmarks.

use std::sync::Arc;

use lpa_core::morphisms::build_anick;
use lpa_core::oracle::{random_combination, random_module_element, rng_for};
use lpa_core::{parse_element, Element, Field, GenMap, IrrPoly, LeavittAlgebra, Poly, SfcElement, SfcSpec};

pub fn rose(n: usize) -> Arc<LeavittAlgebra> {
    LeavittAlgebra::rose(n, Field::Rational).expect("n > 0")
}

/// `count` random combinations of monomials of length at most `max_len`.
pub fn elements(alg: &Arc<LeavittAlgebra>, count: usize, max_len: usize, seed: u64) -> Vec<Element> {
    let mut rng = rng_for(seed);
    (0..count).map(|_| random_combination(alg, max_len, 4, &mut rng)).collect()
}

/// The automorphism of the two-petal rose with twist `p`.
pub fn anick(alg: &Arc<LeavittAlgebra>, p: &str) -> GenMap {
    let g = alg.graph();
    let p = parse_element(p, alg).expect("valid expression");
    build_anick(&p, g.edge_id("e1").unwrap(), g.edge_id("e2").unwrap())
        .expect("p in the subalgebra")
        .0
}

pub fn module(alg: &Arc<LeavittAlgebra>, c: &str, f: &str) -> Arc<SfcSpec> {
    let c = alg.graph().path_from_names(c).expect("valid path");
    let f = IrrPoly::new(Poly::parse(f, alg.field()).expect("valid polynomial")).expect("irreducible");
    SfcSpec::new(alg, c, f).expect("simple closed path")
}

/// Nonzero random module elements.
pub fn vectors(spec: &Arc<SfcSpec>, count: usize, seed: u64) -> Vec<SfcElement> {
    let mut rng = rng_for(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let y = random_module_element(spec, 4, &mut rng);
        if !y.is_zero() {
            out.push(y);
        }
    }
    out
}
