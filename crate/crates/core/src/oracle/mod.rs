//! Randomized cross-checks.
//!
//! Every sample is drawn from its own ChaCha stream seeded with
//! `seed + index`, so a failure line reproduces from its printed seed alone.

mod words;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::lpa::{Element, LeavittAlgebra, SpecialEdges};
use crate::morphisms::GenMap;
use crate::repmod::{SfcElement, SfcSpec, SfcTwist};
use crate::scalars::{Field, Residue, Scalar};

pub use words::{element_words, fmt_word, reduce, Gen, RawExpr, Strategy, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("suite `{0}` needs {1}")]
    SubjectMismatch(String, String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub max_len: usize,
    pub samples: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 42,
            max_len: 6,
            samples: 1000,
        }
    }
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_coeff(field: Field, rng: &mut impl Rng) -> Scalar {
    let n = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    let c = field.from_i64(n);
    if c.is_zero() {
        field.one()
    } else {
        c
    }
}

/// A path ending at `end`, grown backwards, with at most `len` edges.
fn random_path_into(graph: &Graph, end: VertexId, len: usize, rng: &mut impl Rng) -> Path {
    let mut edges: Vec<EdgeId> = Vec::new();
    let mut cur = end;
    for _ in 0..len {
        let incoming: Vec<EdgeId> = graph.edge_ids().filter(|&e| graph.range(e) == cur).collect();
        let Some(&e) = incoming.choose(rng) else {
            break;
        };
        edges.push(e);
        cur = graph.source(e);
    }
    edges.reverse();
    if edges.is_empty() {
        Path::vertex(end)
    } else {
        graph.path(&edges).expect("walk is connected")
    }
}

/// `p q*` with `|p| + |q| ≤ max_len`, as a raw (possibly non-normal) element.
pub fn random_monomial(alg: &Arc<LeavittAlgebra>, max_len: usize, rng: &mut impl Rng) -> Element {
    let g = alg.graph();
    let end = VertexId(rng.gen_range(0..g.vertex_count()));
    let lp = rng.gen_range(0..=max_len);
    let lq = rng.gen_range(0..=max_len - lp);
    let p = random_path_into(g, end, lp, rng);
    let q = random_path_into(g, end, lq, rng);
    Element::monomial(alg, alg.field().one(), p, q).expect("common range")
}

/// A signed combination of one to `max_terms` random monomials.
pub fn random_combination(
    alg: &Arc<LeavittAlgebra>,
    max_len: usize,
    max_terms: usize,
    rng: &mut impl Rng,
) -> Element {
    let mut acc = Element::zero(alg);
    if max_terms == 0 {
        return acc;
    }
    let k = rng.gen_range(1..=max_terms);
    for _ in 0..k {
        let c = random_coeff(alg.field(), rng);
        acc = &acc + &random_monomial(alg, max_len, rng).scale(&c);
    }
    acc
}

/// A combination of at most four monomials, reproducible from `cfg.seed`;
/// zero when `cfg.samples` is zero.
pub fn random_element(alg: &Arc<LeavittAlgebra>, cfg: &SampleConfig) -> Element {
    let mut rng = rng_for(cfg.seed);
    random_combination(alg, cfg.max_len, cfg.samples.min(4), &mut rng)
}

/// `cfg.samples` elements, the `i`-th seeded with `cfg.seed + i`.
pub fn random_elements(alg: &Arc<LeavittAlgebra>, cfg: &SampleConfig) -> Vec<Element> {
    (0..cfg.samples as u64)
        .map(|i| {
            let mut rng = rng_for(cfg.seed.wrapping_add(i));
            random_combination(alg, cfg.max_len, 4, &mut rng)
        })
        .collect()
}

/// A monomial `p q*` of the subalgebra `A_{R_n}(e1, e2)`: `p` avoids `e2` and
/// `q` avoids `e1`.
pub fn random_a_monomial(alg: &Arc<LeavittAlgebra>, max_len: usize, rng: &mut impl Rng) -> Element {
    let g = alg.graph();
    let n = g.edge_count();
    let real_letters: Vec<EdgeId> = (0..n).filter(|&i| i != 1).map(EdgeId).collect();
    let ghost_letters: Vec<EdgeId> = (1..n).map(EdgeId).collect();
    let lp = rng.gen_range(0..=max_len);
    let lq = rng.gen_range(0..=max_len - lp);
    let word = |letters: &[EdgeId], len: usize, rng: &mut dyn rand::RngCore| -> Path {
        let edges: Vec<EdgeId> = (0..len).map(|_| *letters.choose(rng).unwrap()).collect();
        if edges.is_empty() {
            Path::vertex(VertexId(0))
        } else {
            g.path(&edges).expect("loops compose")
        }
    };
    let p = word(&real_letters, lp, rng);
    let q = word(&ghost_letters, lq, rng);
    Element::monomial(alg, alg.field().one(), p, q).expect("loops share the vertex")
}

/// A combination of up to `max_terms` monomials of `A_{R_n}(e1, e2)`.
pub fn random_a_element(
    alg: &Arc<LeavittAlgebra>,
    max_len: usize,
    max_terms: usize,
    rng: &mut impl Rng,
) -> Element {
    let k = rng.gen_range(1..=max_terms.max(1));
    let mut acc = Element::zero(alg);
    for _ in 0..k {
        let c = random_coeff(alg.field(), rng);
        acc = &acc + &random_a_monomial(alg, max_len, rng).scale(&c);
    }
    acc
}

/// A word following the graph most of the time, with an occasional random
/// generator so that vanishing products also occur.
pub fn random_word(graph: &Graph, max_len: usize, rng: &mut impl Rng) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut cur = VertexId(rng.gen_range(0..graph.vertex_count()));
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        if rng.gen_bool(0.1) || graph.edge_count() == 0 {
            let k = rng.gen_range(0..graph.vertex_count() + 2 * graph.edge_count());
            let g = if k < graph.vertex_count() {
                Gen::Vertex(VertexId(k))
            } else if k < graph.vertex_count() + graph.edge_count() {
                Gen::Edge(EdgeId(k - graph.vertex_count()))
            } else {
                Gen::Ghost(EdgeId(k - graph.vertex_count() - graph.edge_count()))
            };
            out.push(g);
            cur = match g {
                Gen::Vertex(v) => v,
                Gen::Edge(e) => graph.range(e),
                Gen::Ghost(e) => graph.source(e),
            };
            continue;
        }
        let forward: Vec<EdgeId> = graph.out_edges(cur).to_vec();
        let backward: Vec<EdgeId> = graph.edge_ids().filter(|&e| graph.range(e) == cur).collect();
        let go_forward = !forward.is_empty() && (backward.is_empty() || rng.gen_bool(0.5));
        if go_forward {
            let e = *forward.choose(rng).unwrap();
            out.push(Gen::Edge(e));
            cur = graph.range(e);
        } else if let Some(&e) = backward.choose(rng) {
            out.push(Gen::Ghost(e));
            cur = graph.source(e);
        } else {
            out.push(Gen::Vertex(cur));
        }
    }
    out
}

/// A raw expression for the confluence check. One third are sums of random
/// words, one third are instances of `a·(Σ e e*)·b − a·u·b` (always zero),
/// and the rest add the two.
pub fn random_raw_expr(alg: &Arc<LeavittAlgebra>, max_len: usize, rng: &mut impl Rng) -> RawExpr {
    let g = alg.graph();
    let field = alg.field();
    let kind = rng.gen_range(0..3);
    let mut terms = Vec::new();
    if kind != 1 {
        for _ in 0..rng.gen_range(1..=4) {
            terms.push((random_coeff(field, rng), random_word(g, max_len, rng)));
        }
    }
    if kind != 0 {
        let regular: Vec<VertexId> = g.vertex_ids().filter(|&v| g.is_regular(v)).collect();
        if let Some(&u) = regular.choose(rng) {
            let budget = max_len.saturating_sub(2).max(1);
            let a = random_word(g, budget, rng);
            let b = random_word(g, budget, rng);
            let split = rng.gen_range(0..=a.len().min(budget));
            let (a, _) = a.split_at(split);
            let c = random_coeff(field, rng);
            for &e in g.out_edges(u) {
                let mut w = a.to_vec();
                w.push(Gen::Edge(e));
                w.push(Gen::Ghost(e));
                w.extend_from_slice(&b);
                terms.push((c.clone(), w));
            }
            let mut w = a.to_vec();
            w.push(Gen::Vertex(u));
            w.extend_from_slice(&b);
            terms.push((-&c, w));
        }
    }
    RawExpr { terms }
}

/// Zero-ness of one reduction route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    pub name: String,
    pub zero: bool,
}

/// Reduces `expr` through [`Element`] arithmetic and through word rewriting
/// with both strategies and both the last- and first-declared special tables.
pub fn cross_check_routes(alg: &Arc<LeavittAlgebra>, expr: &RawExpr) -> Vec<Route> {
    let g = alg.graph();
    let mut routes = vec![Route {
        name: "multiply".into(),
        zero: expr.to_element(alg).is_zero(),
    }];
    let tables = [
        ("last", SpecialEdges::last_declared(g)),
        ("first", SpecialEdges::first_declared(g)),
    ];
    for (tname, table) in &tables {
        for s in [Strategy::LeftmostDepthFirst, Strategy::RightmostBreadthFirst] {
            routes.push(Route {
                name: format!("{s}/{tname}"),
                zero: reduce(g, table, expr, s).is_empty(),
            });
        }
    }
    routes
}

/// Whether every route agrees on whether `expr` is zero.
pub fn cross_check_zero(alg: &Arc<LeavittAlgebra>, expr: &RawExpr) -> bool {
    let routes = cross_check_routes(alg, expr);
    routes.iter().all(|r| r.zero == routes[0].zero)
}

/// The same check for an element given in normal form, which the
/// first-declared table rewrites afresh.
pub fn cross_check_element(x: &Element) -> bool {
    cross_check_zero(x.algebra(), &element_words(x))
}

/// Whether word rewriting with the session's own table reproduces the
/// element's normal form exactly.
pub fn words_match_element(alg: &Arc<LeavittAlgebra>, expr: &RawExpr) -> bool {
    let x = expr.to_element(alg);
    let ours: BTreeMap<Word, Scalar> = element_words(&x)
        .terms
        .into_iter()
        .map(|(c, w)| (w, c))
        .collect();
    [Strategy::LeftmostDepthFirst, Strategy::RightmostBreadthFirst]
        .into_iter()
        .all(|s| reduce(alg.graph(), alg.special(), expr, s) == ours)
}

/// The five-vertex test graph: a sink, parallel edges, a two-cycle and a loop.
pub const MIXED5: &str = "\
vertex a
vertex b
vertex c
vertex d
vertex w
edge f1 a b
edge f2 a c
edge f3 a c
edge g2 c d
edge h1 d w
edge h2 w d
edge h3 w w
";

/// `R_2`, `R_3`, `R_4` and the mixed graph.
pub fn shipped_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (2..=4)
        .map(|n| (format!("R{n}"), Graph::rose(n).expect("n >= 1")))
        .collect();
    out.push(("mixed5".into(), Graph::parse(MIXED5).expect("valid graph")));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Assoc,
    Relations,
    Module,
    Hom,
}

impl SuiteKind {
    pub fn parse(s: &str) -> Result<SuiteKind, OracleError> {
        match s {
            "assoc" => Ok(SuiteKind::Assoc),
            "relations" => Ok(SuiteKind::Relations),
            "module" => Ok(SuiteKind::Module),
            "hom" => Ok(SuiteKind::Hom),
            _ => Err(OracleError::UnknownSuite(s.into())),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteKind::Assoc => "assoc",
            SuiteKind::Relations => "relations",
            SuiteKind::Module => "module",
            SuiteKind::Hom => "hom",
        })
    }
}

pub enum Subject<'a> {
    Session(&'a Arc<LeavittAlgebra>),
    Hom(&'a GenMap),
    Module(&'a Arc<SfcSpec>, Option<&'a SfcTwist>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub seed: u64,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: SuiteKind,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fail in &self.failures {
            writeln!(f, "FAIL {} seed={} case={}", self.suite, fail.seed, fail.case)?;
        }
        Ok(())
    }
}

/// Runs `check` on every sample index in parallel and collects the failures
/// in seed order.
fn run_samples<F>(cfg: &SampleConfig, check: F) -> Vec<Failure>
where
    F: Fn(u64, &mut ChaCha8Rng) -> Option<String> + Sync,
{
    let mut out: Vec<Failure> = (0..cfg.samples as u64)
        .into_par_iter()
        .filter_map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let mut rng = rng_for(seed);
            check(seed, &mut rng).map(|case| Failure { seed, case })
        })
        .collect();
    out.sort_by_key(|f| f.seed);
    out
}

/// Runs the invariant battery for `kind` on `subject`.
pub fn check_suite(kind: SuiteKind, cfg: &SampleConfig, subject: Subject<'_>) -> Result<Report, OracleError> {
    let failures = match (kind, subject) {
        (SuiteKind::Relations, Subject::Session(alg)) => relations_suite(alg, cfg),
        (SuiteKind::Assoc, Subject::Session(alg)) => assoc_suite(alg, cfg),
        (SuiteKind::Hom, Subject::Hom(m)) => hom_suite(m, cfg),
        (SuiteKind::Module, Subject::Module(spec, twist)) => module_suite(spec, twist, cfg),
        (SuiteKind::Hom, _) => {
            return Err(OracleError::SubjectMismatch(kind.to_string(), "a generator map".into()))
        }
        (SuiteKind::Module, _) => {
            return Err(OracleError::SubjectMismatch(kind.to_string(), "a module".into()))
        }
        (_, _) => return Err(OracleError::SubjectMismatch(kind.to_string(), "a session".into())),
    };
    Ok(Report {
        suite: kind,
        checked: cfg.samples,
        failures,
    })
}

/// Every instance of the four defining relations among the generators
/// (reported with seed 0), then confluence and idempotence on samples.
pub fn relations_suite(alg: &Arc<LeavittAlgebra>, cfg: &SampleConfig) -> Vec<Failure> {
    let mut out: Vec<Failure> = GenMap::identity(alg)
        .check_relations()
        .into_iter()
        .map(|v| Failure {
            seed: 0,
            case: v.to_string(),
        })
        .collect();
    for v in alg.graph().vertex_ids() {
        if Element::vertex(alg, v).is_zero() {
            out.push(Failure {
                seed: 0,
                case: format!("vertex {} is zero", alg.graph().vertex_name(v)),
            });
        }
    }
    let g = alg.graph();
    out.extend(run_samples(cfg, |_, rng| {
        let expr = random_raw_expr(alg, cfg.max_len, rng);
        let x = expr.to_element(alg);
        let again = Element::normal_form(
            alg,
            x.terms().map(|(m, c)| (c.clone(), m.real.clone(), m.ghost.clone())),
        )
        .ok()?;
        if again != x {
            return Some(format!("normal form not idempotent on {}", expr.fmt_with(g)));
        }
        if !cross_check_zero(alg, &expr) || !words_match_element(alg, &expr) {
            return Some(format!("routes disagree on {}", expr.fmt_with(g)));
        }
        None
    }));
    out
}

/// Associativity, grading and involution laws on random monomial triples.
pub fn assoc_suite(alg: &Arc<LeavittAlgebra>, cfg: &SampleConfig) -> Vec<Failure> {
    let len = cfg.max_len.min(4);
    run_samples(cfg, |_, rng| {
        let a = random_monomial(alg, len, rng);
        let b = random_monomial(alg, len, rng);
        let c = random_monomial(alg, len, rng);
        let case = || format!("a={a} b={b} c={c}");
        if &(&a * &b) * &c != &a * &(&b * &c) {
            return Some(format!("associativity {}", case()));
        }
        if (&a * &b).star() != &b.star() * &a.star() {
            return Some(format!("involution {}", case()));
        }
        let (da, db) = (a.homogeneous_degree(), b.homogeneous_degree());
        if let (Some(da), Some(db)) = (da, db) {
            if (&a * &b).terms().any(|(m, _)| m.degree() != da + db) {
                return Some(format!("grading {}", case()));
            }
            if a.star().homogeneous_degree() != Some(-da) {
                return Some(format!("degree of star {}", case()));
            }
        }
        let x = random_combination(alg, len, 3, rng);
        let parts = x.graded_parts();
        let sum = parts.values().fold(Element::zero(alg), |acc, p| &acc + p);
        if sum != x || x.star().star() != x {
            return Some(format!("grading sum or star on {x}"));
        }
        None
    })
}

/// Multiplicativity and additivity of a verified map on random pairs.
pub fn hom_suite(m: &GenMap, cfg: &SampleConfig) -> Vec<Failure> {
    if !m.is_verified() {
        return vec![Failure {
            seed: 0,
            case: "map is not verified".into(),
        }];
    }
    let alg = m.algebra();
    let len = cfg.max_len.min(4);
    run_samples(cfg, |_, rng| {
        let x = random_combination(alg, len, 2, rng);
        let y = random_combination(alg, len, 2, rng);
        let fx = m.apply(&x).ok()?;
        let fy = m.apply(&y).ok()?;
        if m.apply(&(&x * &y)).ok()? != &fx * &fy {
            return Some(format!("multiplicative x={x} y={y}"));
        }
        if m.apply(&(&x + &y)).ok()? != &fx + &fy {
            return Some(format!("additive x={x} y={y}"));
        }
        None
    })
}

/// A random module element: random combinations applied to `z`.
pub fn random_module_element(spec: &Arc<SfcSpec>, max_len: usize, rng: &mut impl Rng) -> SfcElement {
    let alg = spec.algebra();
    let r = random_combination(alg, max_len, 3, rng);
    spec.act(&r, &spec.generator()).expect("same session")
}

/// A random residue of degree below `deg f`, with small coefficients.
pub fn random_residue(spec: &SfcSpec, rng: &mut impl Rng) -> Residue {
    let f = spec.modulus();
    let field = f.field();
    let coeffs: Vec<Scalar> = (0..f.degree())
        .map(|_| field.from_i64(rng.gen_range(-4..=4)))
        .collect();
    Residue::new(&crate::scalars::Poly::from_coeffs(field, coeffs), f.clone())
}

/// Module axioms, the defining relation of `z`, witness soundness and
/// centrality of the residue endomorphisms; for a twist, the twisted axioms
/// and `f(σ_p⁻¹(c)) ∗ z = 0`.
pub fn module_suite(spec: &Arc<SfcSpec>, twist: Option<&SfcTwist>, cfg: &SampleConfig) -> Vec<Failure> {
    let alg = spec.algebra();
    let z = spec.generator();
    let mut out = Vec::new();
    if !spec.annihilates(&spec.f_of_c()).unwrap_or(false) {
        out.push(Failure {
            seed: 0,
            case: "f(c) z != 0".into(),
        });
    }
    if let Some(tw) = twist {
        let c = Element::path(alg, spec.cycle());
        let pulled = tw.sigma_inverse().apply(&c).ok();
        let ok = pulled.is_some_and(|c2| {
            let fc = Element::eval_poly(spec.modulus().poly(), &c2, &Element::one(alg));
            tw.act(&fc, &z).is_ok_and(|m| m.is_zero())
        });
        if !ok {
            out.push(Failure {
                seed: 0,
                case: "f(sigma^-1(c)) * z != 0".into(),
            });
        }
    }
    let len = cfg.max_len.min(3);
    out.extend(run_samples(cfg, |_, rng| {
        let r = random_monomial(alg, len, rng);
        let s = random_monomial(alg, len, rng);
        let m = random_module_element(spec, len, rng);
        let n = random_module_element(spec, len, rng);
        let act = |x: &Element, y: &SfcElement| match twist {
            Some(tw) => tw.act(x, y),
            None => spec.act(x, y),
        };
        let lhs = act(&(&r * &s), &m).ok()?;
        let rhs = act(&r, &act(&s, &m).ok()?).ok()?;
        if lhs != rhs {
            return Some(format!("composition r={r} s={s} m={m}"));
        }
        let sum = act(&r, &m.add(&n).ok()?).ok()?;
        if sum != act(&r, &m).ok()?.add(&act(&r, &n).ok()?).ok()? {
            return Some(format!("linearity r={r} m={m} n={n}"));
        }
        if twist.is_none() {
            let u = random_residue(spec, rng);
            let a = spec.endo(&u, &spec.act(&r, &m).ok()?).ok()?;
            let b = spec.act(&r, &spec.endo(&u, &m).ok()?).ok()?;
            if a != b {
                return Some(format!("endomorphism u={u} r={r} m={m}"));
            }
            if !m.is_zero() {
                let ok = spec
                    .witness(&m)
                    .ok()
                    .and_then(|w| spec.act(&w, &m).ok())
                    .is_some_and(|y| y == z);
                if !ok {
                    return Some(format!("witness m={m}"));
                }
            }
        }
        None
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::build_anick;
    use crate::scalars::{IrrPoly, Poly};
    use crate::text::parse_element;

    fn quick() -> SampleConfig {
        SampleConfig {
            seed: 7,
            max_len: 5,
            samples: 60,
        }
    }

    #[test]
    fn deterministic_sampling() {
        let alg = LeavittAlgebra::rose(2, Field::Rational).unwrap();
        let cfg = SampleConfig {
            seed: 1,
            max_len: 2,
            samples: 5,
        };
        assert_eq!(random_element(&alg, &cfg), random_element(&alg, &cfg));
        assert_eq!(random_elements(&alg, &cfg), random_elements(&alg, &cfg));
        let none = SampleConfig { samples: 0, ..cfg };
        assert!(random_element(&alg, &none).is_zero());
    }

    #[test]
    fn cross_check_examples() {
        let alg = LeavittAlgebra::rose(2, Field::Rational).unwrap();
        let x = parse_element("v", &alg).unwrap();
        assert!(cross_check_element(&x));
        let g = alg.graph();
        let e = |i| Gen::Edge(EdgeId(i));
        let gh = |i| Gen::Ghost(EdgeId(i));
        let q = Field::Rational;
        let expr = RawExpr {
            terms: vec![
                (q.one(), vec![e(0), gh(0)]),
                (q.one(), vec![e(1), gh(1)]),
                (q.from_i64(-1), vec![Gen::Vertex(VertexId(0))]),
            ],
        };
        assert!(cross_check_zero(&alg, &expr));
        assert!(cross_check_routes(&alg, &expr).iter().all(|r| r.zero));
        assert!(!cross_check_routes(&alg, &element_words(&x)).iter().any(|r| r.zero));
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn suites_are_clean_on_shipped_graphs() {
        for (_, g) in shipped_graphs() {
            let alg = LeavittAlgebra::new(Arc::new(g), Field::Rational);
            for kind in [SuiteKind::Relations, SuiteKind::Assoc] {
                let report = check_suite(kind, &quick(), Subject::Session(&alg)).unwrap();
                assert!(report.is_clean(), "{report}");
            }
        }
    }

    #[test]
    fn hom_and_module_suites() {
        let alg = LeavittAlgebra::rose(2, Field::Rational).unwrap();
        let p = parse_element("e1", &alg).unwrap();
        let (s, _) = build_anick(&p, EdgeId(0), EdgeId(1)).unwrap();
        let report = check_suite(SuiteKind::Hom, &quick(), Subject::Hom(&s)).unwrap();
        assert!(report.is_clean(), "{report}");

        let c = alg.graph().path_from_names("e2").unwrap();
        let f = IrrPoly::new(Poly::parse("1 - x", Field::Rational).unwrap()).unwrap();
        let spec = SfcSpec::new(&alg, c, f).unwrap();
        let report = check_suite(SuiteKind::Module, &quick(), Subject::Module(&spec, None)).unwrap();
        assert!(report.is_clean(), "{report}");
        let tw = SfcTwist::new(&spec, &p).unwrap();
        let report = check_suite(SuiteKind::Module, &quick(), Subject::Module(&spec, Some(&tw))).unwrap();
        assert!(report.is_clean(), "{report}");

        assert!(matches!(
            check_suite(SuiteKind::Hom, &quick(), Subject::Session(&alg)),
            Err(OracleError::SubjectMismatch(..))
        ));
    }

    #[test]
    fn failures_are_reported() {
        let alg = LeavittAlgebra::rose(2, Field::Rational).unwrap();
        let v = parse_element("v", &alg).unwrap();
        let broken = GenMap::with_images(&alg, [], [(EdgeId(0), v)], []).unwrap();
        let report = check_suite(SuiteKind::Hom, &quick(), Subject::Hom(&broken)).unwrap();
        assert_eq!(report.to_string(), "FAIL hom seed=0 case=map is not verified\n");
    }
}
