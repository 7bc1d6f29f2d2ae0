//! Finite directed graphs, finite paths and eventually periodic infinite paths.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid name '{0}'")]
    InvalidName(String),
    #[error("duplicate name '{0}'")]
    DuplicateName(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown edge '{0}'")]
    UnknownEdge(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("a rose needs at least one petal")]
    ZeroPetals,
    #[error("paths do not compose: {0} ends at {1}, next starts at {2}")]
    Mismatch(String, String, String),
    #[error("path {0} is not closed")]
    NotClosed(String),
    #[error("graph is not a rose with at least two petals")]
    NotARose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
}

/// A generator name resolved against a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// `E = (E^0, E^1, s, r)` with declaration order preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    names: HashMap<String, Symbol>,
    out: Vec<Vec<EdgeId>>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    pub fn new() -> Graph {
        Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            names: HashMap::new(),
            out: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        self.claim(name)?;
        let id = VertexId(self.vertices.len());
        self.vertices.push(name.to_string());
        self.out.push(Vec::new());
        self.names.insert(name.to_string(), Symbol::Vertex(id));
        Ok(id)
    }

    pub fn add_edge(&mut self, name: &str, source: &str, range: &str) -> Result<EdgeId, GraphError> {
        let s = self
            .vertex_id(source)
            .ok_or_else(|| GraphError::UnknownVertex(source.to_string()))?;
        let r = self
            .vertex_id(range)
            .ok_or_else(|| GraphError::UnknownVertex(range.to_string()))?;
        self.claim(name)?;
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            name: name.to_string(),
            source: s,
            range: r,
        });
        self.out[s.0].push(id);
        self.names.insert(name.to_string(), Symbol::Edge(id));
        Ok(id)
    }

    fn claim(&self, name: &str) -> Result<(), GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.names.contains_key(name) {
            return Err(GraphError::DuplicateName(name.to_string()));
        }
        Ok(())
    }

    /// Reads the line-based graph format:
    ///
    /// ```text
    /// # comment
    /// vertex v
    /// edge e1 v v
    /// ```
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let syntax = |message: &str| GraphError::Syntax {
                line: i + 1,
                message: message.to_string(),
            };
            match words.as_slice() {
                ["vertex", name] => {
                    g.add_vertex(name)?;
                }
                ["edge", name, s, r] => {
                    g.add_edge(name, s, r)?;
                }
                ["vertex", ..] => return Err(syntax("expected `vertex <name>`")),
                ["edge", ..] => return Err(syntax("expected `edge <name> <src> <dst>`")),
                [other, ..] => return Err(syntax(&format!("unknown directive '{other}'"))),
                [] => unreachable!(),
            }
        }
        if g.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        Ok(g)
    }

    /// The rose `R_n`: one vertex `v` with loops `e1, …, en`.
    pub fn rose(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroPetals);
        }
        let mut g = Graph::new();
        g.add_vertex("v")?;
        for i in 1..=n {
            g.add_edge(&format!("e{i}"), "v", "v")?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].range
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    /// `s^{-1}(v)` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.0]
    }

    /// Finite graphs have no infinite emitters, so regular means "not a sink".
    pub fn is_regular(&self, v: VertexId) -> bool {
        !self.out[v.0].is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names.get(name).copied()
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        match self.lookup(name) {
            Some(Symbol::Vertex(v)) => Some(v),
            _ => None,
        }
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        match self.lookup(name) {
            Some(Symbol::Edge(e)) => Some(e),
            _ => None,
        }
    }

    /// Number of petals if the graph is a rose (one vertex, only loops).
    pub fn rose_petals(&self) -> Option<usize> {
        (self.vertices.len() == 1 && !self.edges.is_empty()).then_some(self.edges.len())
    }

    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path::vertex(v)
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        let edge = self.edge(e);
        Path {
            start: edge.source,
            end: edge.range,
            edges: vec![e],
        }
    }

    /// Validates `r(e_i) = s(e_{i+1})`. The empty sequence is rejected since a
    /// length-zero path needs a vertex; use [`Path::vertex`].
    pub fn path(&self, edges: &[EdgeId]) -> Result<Path, GraphError> {
        let (first, rest) = edges
            .split_first()
            .ok_or_else(|| GraphError::UnknownEdge(String::new()))?;
        let mut p = self.edge_path(*first);
        for &e in rest {
            p = p.concat(&self.edge_path(e)).map_err(|_| {
                GraphError::Mismatch(
                    self.edge_name(p.last_edge().unwrap()).to_string(),
                    self.vertex_name(p.range()).to_string(),
                    self.vertex_name(self.source(e)).to_string(),
                )
            })?;
        }
        Ok(p)
    }

    /// Path from space- or `*`-separated edge names, or a single vertex name.
    pub fn path_from_names(&self, text: &str) -> Result<Path, GraphError> {
        let names: Vec<&str> = text
            .split(|c: char| c == '*' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if let [single] = names.as_slice() {
            if let Some(v) = self.vertex_id(single) {
                return Ok(Path::vertex(v));
            }
        }
        let ids = names
            .iter()
            .map(|n| {
                self.edge_id(n)
                    .ok_or_else(|| GraphError::UnknownEdge(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&ids)
    }

    pub fn concat_paths(&self, a: &Path, b: &Path) -> Result<Path, GraphError> {
        a.concat(b).map_err(|_| {
            GraphError::Mismatch(
                self.fmt_path(a),
                self.vertex_name(a.range()).to_string(),
                self.vertex_name(b.source()).to_string(),
            )
        })
    }

    /// Closed, nonempty and not a proper power `d^k`, `k ≥ 2`.
    pub fn is_simple_closed(&self, c: &Path) -> bool {
        c.is_closed() && c.primitive_root().1 == 1
    }

    /// Cyclic rotations `c_1 = c, c_2 = e_2⋯e_te_1, …`, one per shift of the
    /// primitive root, so a proper power yields no duplicates.
    pub fn rotations(&self, c: &Path) -> Result<Vec<Path>, GraphError> {
        if !c.is_closed() {
            return Err(GraphError::NotClosed(self.fmt_path(c)));
        }
        let period = c.primitive_root().0.len();
        Ok((0..period).map(|i| self.rotate_left(c, i)).collect())
    }

    /// `c` shifted left by `k` edges.
    pub fn rotate_left(&self, c: &Path, k: usize) -> Path {
        debug_assert!(c.is_closed());
        let k = k % c.len();
        if k == 0 {
            return c.clone();
        }
        let start = self.source(c.edges[k]);
        let mut edges = c.edges[k..].to_vec();
        edges.extend_from_slice(&c.edges[..k]);
        Path {
            start,
            end: start,
            edges,
        }
    }

    /// Whether `c` lies in `C_s(R_n)`: `c = e_{k_1}⋯e_{k_m}` with
    /// `k_i ∈ {1, 3, …, n}` for `i < m` and `k_m = 2`.
    pub fn in_cs(&self, c: &Path) -> Result<bool, GraphError> {
        match self.rose_petals() {
            Some(n) if n >= 2 => {}
            _ => return Err(GraphError::NotARose),
        }
        let Some((last, init)) = c.edges.split_last() else {
            return Ok(false);
        };
        Ok(*last == EdgeId(1) && init.iter().all(|e| *e != EdgeId(1)))
    }

    /// `e1*e2*e3`, or the vertex name for a path of length zero.
    pub fn fmt_path(&self, p: &Path) -> String {
        if p.edges.is_empty() {
            return self.vertex_name(p.start).to_string();
        }
        p.edges
            .iter()
            .map(|e| self.edge_name(*e))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn fmt_infinite(&self, p: &RationalInfinitePath) -> String {
        let period = format!("({})^inf", self.fmt_path(&p.period));
        if p.prefix.is_vertex() {
            period
        } else {
            format!("{}*{}", self.fmt_path(&p.prefix), period)
        }
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

/// A finite path. Length-zero paths are vertices; both endpoints are stored so
/// concatenation and prefix/suffix arithmetic need no graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    edges: Vec<EdgeId>,
    start: VertexId,
    end: VertexId,
}

impl Path {
    pub fn vertex(v: VertexId) -> Path {
        Path {
            edges: Vec::new(),
            start: v,
            end: v,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.start
    }

    pub fn range(&self) -> VertexId {
        self.end
    }

    pub fn first_edge(&self) -> Option<EdgeId> {
        self.edges.first().copied()
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    pub fn is_closed(&self) -> bool {
        !self.edges.is_empty() && self.start == self.end
    }

    /// Fails unless `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Result<Path, (VertexId, VertexId)> {
        if self.end != other.start {
            return Err((self.end, other.start));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Path {
            edges,
            start: self.start,
            end: other.end,
        })
    }

    pub fn has_prefix(&self, prefix: &Path) -> bool {
        self.start == prefix.start && self.edges.starts_with(&prefix.edges)
    }

    pub fn has_suffix(&self, suffix: &Path) -> bool {
        self.end == suffix.end && self.edges.ends_with(&suffix.edges)
    }

    /// The `r` with `self = prefix·r`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        self.has_prefix(prefix).then(|| Path {
            edges: self.edges[prefix.len()..].to_vec(),
            start: prefix.end,
            end: self.end,
        })
    }

    /// The `r` with `self = r·suffix`.
    pub fn strip_suffix(&self, suffix: &Path) -> Option<Path> {
        self.has_suffix(suffix).then(|| Path {
            edges: self.edges[..self.len() - suffix.len()].to_vec(),
            start: self.start,
            end: suffix.start,
        })
    }

    /// `self^k` for a closed path; `k = 0` gives the base vertex.
    pub fn power(&self, k: usize) -> Path {
        debug_assert!(k <= 1 || self.start == self.end);
        Path {
            edges: self.edges.repeat(k),
            start: self.start,
            end: if k == 0 { self.start } else { self.end },
        }
    }

    /// `(d, k)` with `self = d^k` and `k` maximal. For non-closed or empty
    /// paths this is `(self, 1)`.
    pub fn primitive_root(&self) -> (Path, usize) {
        let n = self.len();
        if n == 0 || self.start != self.end {
            return (self.clone(), 1);
        }
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            if (d..n).all(|i| self.edges[i] == self.edges[i - d]) {
                let root = Path {
                    edges: self.edges[..d].to_vec(),
                    start: self.start,
                    end: self.start,
                };
                return (root, n / d);
            }
        }
        unreachable!("d = n always qualifies")
    }
}

/// `β·c^∞` in canonical form: the period is primitive and the prefix is as
/// short as possible (its last edge never equals the period's last edge).
/// Two values are equal exactly when they denote the same infinite path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalInfinitePath {
    prefix: Path,
    period: Path,
}

impl RationalInfinitePath {
    pub fn new(graph: &Graph, prefix: Path, period: Path) -> Result<Self, GraphError> {
        if !period.is_closed() {
            return Err(GraphError::NotClosed(graph.fmt_path(&period)));
        }
        if prefix.range() != period.source() {
            return Err(GraphError::Mismatch(
                graph.fmt_path(&prefix),
                graph.vertex_name(prefix.range()).to_string(),
                graph.vertex_name(period.source()).to_string(),
            ));
        }
        Ok(Self::normalized(graph, prefix, period.primitive_root().0))
    }

    /// `c^∞`.
    pub fn periodic(graph: &Graph, period: Path) -> Result<Self, GraphError> {
        let base = Path::vertex(period.source());
        Self::new(graph, base, period)
    }

    fn normalized(graph: &Graph, mut prefix: Path, mut period: Path) -> Self {
        while let Some(last) = prefix.last_edge() {
            if Some(last) != period.last_edge() {
                break;
            }
            prefix.edges.pop();
            prefix.end = graph.source(last);
            period = graph.rotate_left(&period, period.len() - 1);
        }
        RationalInfinitePath { prefix, period }
    }

    pub fn prefix(&self) -> &Path {
        &self.prefix
    }

    pub fn period(&self) -> &Path {
        &self.period
    }

    pub fn source(&self) -> VertexId {
        self.prefix.source()
    }

    pub fn first_edge(&self) -> EdgeId {
        self.prefix
            .first_edge()
            .or(self.period.first_edge())
            .expect("period is nonempty")
    }

    /// The `i`-th edge (0-based) of the infinite path.
    pub fn edge_at(&self, i: usize) -> EdgeId {
        if i < self.prefix.len() {
            self.prefix.edges[i]
        } else {
            self.period.edges[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// `e·self`, or `None` when `r(e) ≠ s(self)`.
    pub fn prepend(&self, graph: &Graph, e: EdgeId) -> Option<Self> {
        let prefix = graph.edge_path(e).concat(&self.prefix).ok()?;
        Some(Self::normalized(graph, prefix, self.period.clone()))
    }

    /// `τ_{>1}(self)` when the path starts with `e`, else `None`.
    pub fn strip_first(&self, graph: &Graph, e: EdgeId) -> Option<Self> {
        if self.first_edge() != e {
            return None;
        }
        Some(self.truncate(graph, 1).1)
    }

    /// `(τ_{≤n}(p), τ_{>n}(p))`.
    pub fn truncate(&self, graph: &Graph, n: usize) -> (Path, Self) {
        let head = if n == 0 {
            Path::vertex(self.source())
        } else {
            let edges: Vec<EdgeId> = (0..n).map(|i| self.edge_at(i)).collect();
            graph.path(&edges).expect("edges of an infinite path compose")
        };
        let tail = if n <= self.prefix.len() {
            let rest = self
                .prefix
                .strip_prefix(&head)
                .expect("head is a prefix of the finite part");
            Self::normalized(graph, rest, self.period.clone())
        } else {
            let shift = (n - self.prefix.len()) % self.period.len();
            let period = graph.rotate_left(&self.period, shift);
            RationalInfinitePath {
                prefix: Path::vertex(period.source()),
                period,
            }
        };
        (head, tail)
    }

    /// Tail equivalence: primitive periods are rotations of one another.
    pub fn tail_equivalent(&self, other: &Self) -> bool {
        let (a, b) = (&self.period.edges, &other.period.edges);
        a.len() == b.len() && (0..a.len()).any(|k| (0..a.len()).all(|i| a[(i + k) % a.len()] == b[i]))
    }

    /// Concatenation `prefix·self`.
    pub fn with_prefix(&self, graph: &Graph, prefix: &Path) -> Option<Self> {
        let p = prefix.concat(&self.prefix).ok()?;
        Some(Self::normalized(graph, p, self.period.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Graph {
        Graph::rose(n).unwrap()
    }

    fn path(g: &Graph, s: &str) -> Path {
        g.path_from_names(s).unwrap()
    }

    #[test]
    fn parse_rose_two() {
        let g = Graph::parse("vertex v\nedge e1 v v\nedge e2 v v").unwrap();
        assert_eq!(g, r(2));
        assert_eq!(g.edge_name(EdgeId(0)), "e1");
    }

    #[test]
    fn parse_rose_one_with_comments() {
        let g = Graph::parse("# R_1\n\nvertex v   # the vertex\nedge e v v\n").unwrap();
        assert_eq!(g.rose_petals(), Some(1));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Graph::parse("edge e a b"),
            Err(GraphError::UnknownVertex("a".into()))
        );
        assert_eq!(Graph::parse("# nothing\n"), Err(GraphError::Empty));
        assert_eq!(
            Graph::parse("vertex v\nvertex v"),
            Err(GraphError::DuplicateName("v".into()))
        );
        assert_eq!(
            Graph::parse("vertex v\nedge v v v"),
            Err(GraphError::DuplicateName("v".into()))
        );
        assert!(matches!(
            Graph::parse("vertex 1v"),
            Err(GraphError::InvalidName(_))
        ));
        assert!(matches!(
            Graph::parse("vertex v\nloop e v"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn rose_construction() {
        let g = r(2);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 2));
        assert_eq!(r(1).rose_petals(), Some(1));
        assert_eq!(Graph::rose(0), Err(GraphError::ZeroPetals));
    }

    #[test]
    fn concatenation() {
        let g = r(2);
        let e1 = path(&g, "e1");
        let e2 = path(&g, "e2");
        assert_eq!(g.concat_paths(&e1, &e2).unwrap(), path(&g, "e1*e2"));
        let v = path(&g, "v");
        assert_eq!(g.concat_paths(&v, &e1).unwrap(), e1);

        let h = Graph::parse("vertex a\nvertex b\nedge f a b\nedge g a a").unwrap();
        let f = path(&h, "f");
        let gg = path(&h, "g");
        assert!(matches!(
            h.concat_paths(&f, &gg),
            Err(GraphError::Mismatch(..))
        ));
        assert!(h.path_from_names("f g").is_err());
    }

    #[test]
    fn simple_closed_paths() {
        let g = r(2);
        assert!(g.is_simple_closed(&path(&g, "e1 e2")));
        assert!(!g.is_simple_closed(&path(&g, "e1 e1")));
        assert!(g.is_simple_closed(&path(&g, "e2")));
        assert!(!g.is_simple_closed(&path(&g, "v")));
        assert!(!g.is_simple_closed(&path(&g, "e1 e2 e1 e2")));
    }

    #[test]
    fn rotation_lists() {
        let g = r(2);
        assert_eq!(
            g.rotations(&path(&g, "e1 e2")).unwrap(),
            vec![path(&g, "e1 e2"), path(&g, "e2 e1")]
        );
        assert_eq!(g.rotations(&path(&g, "e2")).unwrap(), vec![path(&g, "e2")]);
        let g3 = r(3);
        assert_eq!(
            g3.rotations(&path(&g3, "e1 e2 e3")).unwrap(),
            vec![path(&g3, "e1 e2 e3"), path(&g3, "e2 e3 e1"), path(&g3, "e3 e1 e2")]
        );
        // proper power: duplicates removed
        assert_eq!(g.rotations(&path(&g, "e1 e2 e1 e2")).unwrap().len(), 2);
        let h = Graph::parse("vertex a\nvertex b\nedge f a b").unwrap();
        assert!(h.rotations(&path(&h, "f")).is_err());
    }

    #[test]
    fn tail_equivalence() {
        let g = r(2);
        let inf = |s: &str| RationalInfinitePath::periodic(&g, path(&g, s)).unwrap();
        assert!(inf("e1 e2").tail_equivalent(&inf("e2 e1")));
        assert!(!inf("e1").tail_equivalent(&inf("e2")));
        assert!(inf("e1 e2").tail_equivalent(&inf("e1 e2 e1 e2")));
        // c^∞ = (c^2)^∞ as infinite paths
        assert_eq!(inf("e1 e2"), inf("e1 e2 e1 e2"));
    }

    #[test]
    fn truncation() {
        let g = r(2);
        let inf = |s: &str| RationalInfinitePath::periodic(&g, path(&g, s)).unwrap();
        let (head, tail) = inf("e2").truncate(&g, 2);
        assert_eq!(head, path(&g, "e2 e2"));
        assert_eq!(tail, inf("e2"));
        let p = inf("e1 e2");
        let (head, tail) = p.truncate(&g, 0);
        assert_eq!(head, path(&g, "v"));
        assert_eq!(tail, p);
        let (head, tail) = p.truncate(&g, 3);
        assert_eq!(head, path(&g, "e1 e2 e1"));
        assert_eq!(tail, inf("e2 e1"));
    }

    #[test]
    fn normalization_strips_trailing_period() {
        let g = r(2);
        let p = RationalInfinitePath::new(&g, path(&g, "e1 e2 e2"), path(&g, "e2")).unwrap();
        assert_eq!(p.prefix(), &path(&g, "e1"));
        // partial copies rotate into the period
        let q = RationalInfinitePath::new(&g, path(&g, "e1"), path(&g, "e2 e1")).unwrap();
        assert_eq!(q.prefix(), &path(&g, "v"));
        assert_eq!(q.period(), &path(&g, "e1 e2"));
    }

    #[test]
    fn cs_membership() {
        let g = r(2);
        assert!(g.in_cs(&path(&g, "e2")).unwrap());
        assert!(g.in_cs(&path(&g, "e1 e2")).unwrap());
        assert!(!g.in_cs(&path(&g, "e2 e1")).unwrap());
        assert!(!g.in_cs(&path(&g, "e2 e2")).unwrap());
        let g3 = r(3);
        assert!(g3.in_cs(&path(&g3, "e3 e1 e2")).unwrap());
        assert_eq!(r(1).in_cs(&path(&r(1), "e1")), Err(GraphError::NotARose));
    }
}
