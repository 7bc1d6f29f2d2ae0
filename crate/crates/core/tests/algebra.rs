use std::sync::Arc;

use lpa_core::oracle::{element_words, reduce, Gen, RawExpr, Strategy as Rewrite};
use lpa_core::oracle::{cross_check_element, random_combination, rng_for, shipped_graphs};
use lpa_core::{parse_element, Element, Field, Graph, LeavittAlgebra, RationalInfinitePath, SpecialEdges};
use proptest::prelude::*;

fn rose(n: usize) -> Arc<LeavittAlgebra> {
    LeavittAlgebra::rose(n, Field::Rational).unwrap()
}

fn algebras() -> Vec<Arc<LeavittAlgebra>> {
    shipped_graphs()
        .into_iter()
        .map(|(_, g)| LeavittAlgebra::new(Arc::new(g), Field::Rational))
        .collect()
}

fn sample(alg: &Arc<LeavittAlgebra>, seed: u64) -> Element {
    random_combination(alg, 5, 4, &mut rng_for(seed))
}

fn el(alg: &Arc<LeavittAlgebra>, s: &str) -> Element {
    parse_element(s, alg).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_idempotent(which in 0usize..4, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let x = sample(alg, seed);
        let raw = x.terms().map(|(m, c)| (c.clone(), m.real.clone(), m.ghost.clone()));
        prop_assert_eq!(Element::normal_form(alg, raw).unwrap(), x.clone());
        prop_assert!(cross_check_element(&x));
    }

    #[test]
    fn multiplication_is_associative(which in 0usize..4, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let (x, y, z) = (sample(alg, seed), sample(alg, seed ^ 1), sample(alg, seed ^ 2));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn star_is_an_involution(which in 0usize..4, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let (x, y) = (sample(alg, seed), sample(alg, seed ^ 7));
        prop_assert_eq!(x.star().star(), x.clone());
        prop_assert_eq!((&x * &y).star(), &y.star() * &x.star());
    }

    #[test]
    fn degree_is_additive(which in 0usize..4, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let (x, y) = (sample(alg, seed), sample(alg, seed ^ 3));
        for (dx, px) in x.graded_parts() {
            for (dy, py) in y.graded_parts() {
                let prod = &px * &py;
                prop_assert!(prod.is_zero() || prod.homogeneous_degree() == Some(dx + dy));
            }
        }
    }

    #[test]
    fn printing_round_trips(which in 0usize..4, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let x = sample(alg, seed);
        prop_assert_eq!(parse_element(&x.to_string(), alg).unwrap(), x);
    }
}

#[test]
fn defining_relations_hold_on_every_shipped_graph() {
    for alg in algebras() {
        let g = alg.graph();
        let one = Element::one(&alg);
        let vertices: Vec<_> = g.vertex_ids().map(|v| Element::vertex(&alg, v)).collect();
        let sum: Element = vertices.iter().fold(Element::zero(&alg), |a, b| &a + b);
        assert_eq!(sum, one);
        for e in g.edge_ids() {
            let (s, r) = (Element::vertex(&alg, g.source(e)), Element::vertex(&alg, g.range(e)));
            let (x, xs) = (Element::edge(&alg, e), Element::ghost(&alg, e));
            assert_eq!(&s * &x, x);
            assert_eq!(&x * &r, x);
            assert_eq!(&r * &xs, xs);
            assert_eq!(&xs * &s, xs);
            for f in g.edge_ids() {
                let lhs = &xs * &Element::edge(&alg, f);
                assert_eq!(lhs, if e == f { r.clone() } else { Element::zero(&alg) });
            }
        }
        for v in g.vertex_ids().filter(|&v| g.is_regular(v)) {
            let ck = g.out_edges(v).iter().fold(Element::zero(&alg), |a, &e| {
                &a + &(&Element::edge(&alg, e) * &Element::ghost(&alg, e))
            });
            assert_eq!(ck, Element::vertex(&alg, v));
        }
    }
}

#[test]
fn special_edge_rewrite() {
    let alg = rose(2);
    let x = el(&alg, "e2*e2'");
    assert_eq!(x, el(&alg, "v - e1*e1'"));
    // Adding e1e1* back must give v by the Cuntz-Krieger relation at v.
    let g = alg.graph();
    let e1 = g.edge_id("e1").unwrap();
    let mut words = element_words(&x);
    words.terms.push((Field::Rational.one(), vec![Gen::Edge(e1), Gen::Ghost(e1)]));
    words.terms.push((Field::Rational.from_i64(-1), vec![Gen::Vertex(g.vertex_id("v").unwrap())]));
    for table in [SpecialEdges::last_declared(g), SpecialEdges::first_declared(g)] {
        assert!(reduce(g, &table, &words, Rewrite::LeftmostDepthFirst).is_empty());
    }
}

#[test]
fn product_of_sums() {
    let alg = rose(2);
    let x = el(&alg, "(e1+e2)*(e1'+e2')");
    assert_eq!(x.to_string(), "v + e1*e2' + e2*e1'");
    let expanded = el(&alg, "e1*e1' + e1*e2' + e2*e1' + e2*e2'");
    assert_eq!(x, expanded);
    assert!(el(&alg, "e1'*e2").is_zero());
}

#[test]
fn grading_of_a_mixed_monomial() {
    let alg = rose(2);
    let parts = el(&alg, "e1*e2'").graded_parts();
    assert_eq!(parts.len(), 1);
    assert!(parts.contains_key(&0));
    let parts = el(&alg, "e1 + v + e2'*e1'").graded_parts();
    assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![-2, 0, 1]);
}

#[test]
fn rewriting_strategies_agree_on_expressions() {
    let alg = rose(3);
    let g = alg.graph();
    let v = g.vertex_id("v").unwrap();
    let e: Vec<_> = ["e1", "e2", "e3"].iter().map(|n| g.edge_id(n).unwrap()).collect();
    let expr = RawExpr {
        terms: vec![
            (Field::Rational.one(), vec![Gen::Edge(e[2]), Gen::Ghost(e[2]), Gen::Edge(e[0])]),
            (Field::Rational.one(), vec![Gen::Ghost(e[1]), Gen::Edge(e[1]), Gen::Vertex(v)]),
        ],
    };
    let tables = [SpecialEdges::last_declared(g), SpecialEdges::first_declared(g)];
    let results: Vec<_> = tables
        .iter()
        .flat_map(|t| {
            [Rewrite::LeftmostDepthFirst, Rewrite::RightmostBreadthFirst]
                .map(|s| reduce(g, t, &expr, s))
        })
        .collect();
    assert_eq!(results[0], results[1]);
    assert_eq!(results[2], results[3]);
    assert!(cross_check_element(&expr.to_element(&alg)));
}

#[test]
fn rotations_of_a_three_cycle() {
    let g = Graph::rose(3).unwrap();
    let c = g.path_from_names("e1 e2 e3").unwrap();
    let names: Vec<String> = g.rotations(&c).unwrap().iter().map(|p| g.fmt_path(p)).collect();
    assert_eq!(names, ["e1*e2*e3", "e2*e3*e1", "e3*e1*e2"]);
    let square = g.path_from_names("e1 e2 e1 e2").unwrap();
    assert_eq!(g.rotations(&square).unwrap().len(), 2);
    assert!(!g.is_simple_closed(&square));
    assert!(g.is_simple_closed(&c));
}

#[test]
fn infinite_paths() {
    let g = Graph::rose(2).unwrap();
    let p = |s: &str| g.path_from_names(s).unwrap();
    let a = RationalInfinitePath::periodic(&g, p("e1 e2")).unwrap();
    let b = RationalInfinitePath::periodic(&g, p("e2 e1")).unwrap();
    assert!(a.tail_equivalent(&b));
    assert_eq!(a.truncate(&g, 1).1, b);
    let (head, tail) = a.truncate(&g, 3);
    assert_eq!(head, p("e1 e2 e1"));
    assert_eq!(tail, b);
    let e2 = RationalInfinitePath::periodic(&g, p("e2")).unwrap();
    assert_eq!(e2.prepend(&g, g.edge_id("e2").unwrap()).unwrap(), e2);
    let shifted = e2.prepend(&g, g.edge_id("e1").unwrap()).unwrap();
    assert_eq!(g.fmt_infinite(&shifted), "e1*(e2)^inf");
    assert!(shifted.tail_equivalent(&e2));
    assert!(!a.tail_equivalent(&e2));
}

#[test]
fn field_characteristic_is_respected() {
    let alg = LeavittAlgebra::rose(2, Field::Prime(3)).unwrap();
    let x = el(&alg, "e1 + e1 + e1");
    assert!(x.is_zero());
    assert_eq!(el(&alg, "2*e1 + 2*e1").to_string(), "e1");
}

#[test]
fn thousand_elements_print_and_parse_back() {
    let cfg = lpa_core::oracle::SampleConfig::default();
    for alg in algebras() {
        for x in lpa_core::oracle::random_elements(&alg, &cfg) {
            assert_eq!(parse_element(&x.to_string(), &alg).unwrap(), x);
        }
    }
}
