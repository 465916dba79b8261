//! Acyclic planar networks with ordered boundary sources and sinks.
//!
//! The clockwise boundary order `s_1, ..., s_m, t_m, ..., t_1` is taken on
//! trust from the declared `sources` and `sinks`; no planar embedding is
//! computed. A wrong declaration shows up as a disagreement between the
//! determinant route and [`oracle_nonintersecting_sum`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use crate::subset::SubsetIndex;

/// Brute-force oracles refuse instances with more candidate tuples than this.
pub const ORACLE_CAPACITY: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub weight: Rational,
}

impl Edge {
    pub fn new(from: impl Into<String>, to: impl Into<String>, weight: Rational) -> Self {
        Edge {
            from: from.into(),
            to: to.into(),
            weight,
        }
    }
}

/// Unvalidated network data.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NetworkSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(String),
    UnknownEdgeEndpoint { edge: usize, vertex: String },
    UnknownBoundaryVertex(String),
    RepeatedBoundaryVertex(String),
    BoundaryCountMismatch { sources: usize, sinks: usize },
    SourceIndegree { vertex: String, indegree: usize },
    SinkOutdegree { vertex: String, outdegree: usize },
    SourceSinkOverlap(String),
    Cycle(Vec<String>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex(v) => write!(f, "vertex `{v}` declared twice"),
            Violation::UnknownEdgeEndpoint { edge, vertex } => {
                write!(f, "edge {edge} uses unknown vertex `{vertex}`")
            }
            Violation::UnknownBoundaryVertex(v) => {
                write!(f, "boundary vertex `{v}` is not declared")
            }
            Violation::RepeatedBoundaryVertex(v) => write!(f, "boundary vertex `{v}` listed twice"),
            Violation::BoundaryCountMismatch { sources, sinks } => {
                write!(f, "{sources} sources but {sinks} sinks")
            }
            Violation::SourceIndegree { vertex, indegree } => {
                write!(f, "source `{vertex}` has indegree {indegree}")
            }
            Violation::SinkOutdegree { vertex, outdegree } => {
                write!(f, "sink `{vertex}` has outdegree {outdegree}")
            }
            Violation::SourceSinkOverlap(v) => write!(f, "`{v}` is both a source and a sink"),
            Violation::Cycle(vs) => write!(f, "directed cycle through {}", vs.join(", ")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_cycle(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::Cycle(_)))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl NetworkSpec {
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                violations.push(Violation::DuplicateVertex(v.clone()));
            }
        }
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut outdegree = vec![0usize; n];
        let mut adjacency = vec![Vec::new(); n];
        for (e, edge) in self.edges.iter().enumerate() {
            let from = index.get(edge.from.as_str()).copied();
            let to = index.get(edge.to.as_str()).copied();
            for (endpoint, name) in [(from, &edge.from), (to, &edge.to)] {
                if endpoint.is_none() {
                    violations.push(Violation::UnknownEdgeEndpoint {
                        edge: e,
                        vertex: name.clone(),
                    });
                }
            }
            if let (Some(a), Some(b)) = (from, to) {
                outdegree[a] += 1;
                indegree[b] += 1;
                adjacency[a].push(b);
            }
        }
        if self.sources.len() != self.sinks.len() {
            violations.push(Violation::BoundaryCountMismatch {
                sources: self.sources.len(),
                sinks: self.sinks.len(),
            });
        }
        for list in [&self.sources, &self.sinks] {
            let mut seen = BTreeSet::new();
            for v in list.iter() {
                if !index.contains_key(v.as_str()) {
                    violations.push(Violation::UnknownBoundaryVertex(v.clone()));
                }
                if !seen.insert(v) {
                    violations.push(Violation::RepeatedBoundaryVertex(v.clone()));
                }
            }
        }
        for v in &self.sources {
            if let Some(&i) = index.get(v.as_str()) {
                if indegree[i] > 0 {
                    violations.push(Violation::SourceIndegree {
                        vertex: v.clone(),
                        indegree: indegree[i],
                    });
                }
            }
        }
        for v in &self.sinks {
            if let Some(&i) = index.get(v.as_str()) {
                if outdegree[i] > 0 {
                    violations.push(Violation::SinkOutdegree {
                        vertex: v.clone(),
                        outdegree: outdegree[i],
                    });
                }
            }
        }
        // The identity network G^0 is the one permitted overlap.
        let degenerate = self.edges.is_empty() && self.sources == self.sinks;
        if !degenerate {
            let sinks: BTreeSet<&String> = self.sinks.iter().collect();
            for v in &self.sources {
                if sinks.contains(v) {
                    violations.push(Violation::SourceSinkOverlap(v.clone()));
                }
            }
        }
        if let Err(stuck) = kahn_order(&self.vertices, &adjacency) {
            violations.push(Violation::Cycle(stuck));
        }
        ValidationReport { violations }
    }

    pub fn build(self) -> Result<PlanarNetwork> {
        PlanarNetwork::new(self)
    }
}

/// Kahn's algorithm with ties broken by vertex id; on a cycle returns the
/// ids of the vertices that never became ready.
fn kahn_order(
    names: &[String],
    adjacency: &[Vec<usize>],
) -> std::result::Result<Vec<usize>, Vec<String>> {
    let n = names.len();
    let mut indegree = vec![0usize; n];
    for targets in adjacency {
        for &t in targets {
            indegree[t] += 1;
        }
    }
    let mut ready: BTreeSet<(&str, usize)> = (0..n)
        .filter(|&v| indegree[v] == 0)
        .map(|v| (names[v].as_str(), v))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(first) = ready.pop_first() {
        let v = first.1;
        order.push(v);
        for &t in &adjacency[v] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.insert((names[t].as_str(), t));
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        let placed: BTreeSet<usize> = order.into_iter().collect();
        let mut stuck: Vec<String> = (0..n)
            .filter(|v| !placed.contains(v))
            .map(|v| names[v].clone())
            .collect();
        stuck.sort();
        Err(stuck)
    }
}

/// A directed path; `edges` index into [`PlanarNetwork::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn weight(&self, net: &PlanarNetwork) -> Rational {
        self.edges
            .iter()
            .map(|&e| net.edges()[e].weight.clone())
            .product()
    }

    /// Vertex indices visited, in order.
    pub fn vertices(&self, net: &PlanarNetwork) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.edges.len() + 1);
        out.push(self.start);
        for &e in &self.edges {
            out.push(net.edge_endpoints[e].1);
        }
        out
    }
}

/// A tuple of paths; weight is the product of the path weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTuple {
    pub paths: Vec<Path>,
}

impl PathTuple {
    pub fn weight(&self, net: &PlanarNetwork) -> Rational {
        self.paths.iter().map(|p| p.weight(net)).product()
    }

    /// Pairwise vertex-disjoint.
    pub fn is_non_intersecting(&self, net: &PlanarNetwork) -> bool {
        let mut seen = vec![false; net.vertex_count()];
        for p in &self.paths {
            for v in p.vertices(net) {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// A validated acyclic network.
#[derive(Debug, Clone)]
pub struct PlanarNetwork {
    spec: NetworkSpec,
    index: HashMap<String, usize>,
    edge_endpoints: Vec<(usize, usize)>,
    outgoing: Vec<Vec<usize>>,
    topo: Vec<usize>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
}

impl PartialEq for PlanarNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl PlanarNetwork {
    pub fn new(spec: NetworkSpec) -> Result<Self> {
        let report = spec.validate();
        if !report.is_valid() {
            return Err(Error::InvalidNetwork(report));
        }
        let index: HashMap<String, usize> = spec
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let edge_endpoints: Vec<(usize, usize)> = spec
            .edges
            .iter()
            .map(|e| (index[&e.from], index[&e.to]))
            .collect();
        let mut outgoing = vec![Vec::new(); spec.vertices.len()];
        let mut adjacency = vec![Vec::new(); spec.vertices.len()];
        for (e, &(a, b)) in edge_endpoints.iter().enumerate() {
            outgoing[a].push(e);
            adjacency[a].push(b);
        }
        let topo = kahn_order(&spec.vertices, &adjacency).expect("validated acyclic");
        let sources = spec.sources.iter().map(|v| index[v]).collect();
        let sinks = spec.sinks.iter().map(|v| index[v]).collect();
        Ok(PlanarNetwork {
            spec,
            index,
            edge_endpoints,
            outgoing,
            topo,
            sources,
            sinks,
        })
    }

    pub fn spec(&self) -> &NetworkSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[String] {
        &self.spec.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.spec.edges
    }

    pub fn sources(&self) -> &[String] {
        &self.spec.sources
    }

    pub fn sinks(&self) -> &[String] {
        &self.spec.sinks
    }

    /// Number of boundary pairs `m`.
    pub fn boundary_size(&self) -> usize {
        self.sources.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.spec.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Vertex ids in topological order, ties broken lexicographically by id.
    pub fn topological_order(&self) -> Vec<&str> {
        self.topo
            .iter()
            .map(|&v| self.spec.vertices[v].as_str())
            .collect()
    }

    /// Edge count of the longest directed path.
    pub fn longest_chain(&self) -> usize {
        let mut depth = vec![0usize; self.vertex_count()];
        for &v in &self.topo {
            for &e in &self.outgoing[v] {
                let t = self.edge_endpoints[e].1;
                depth[t] = depth[t].max(depth[v] + 1);
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// Weighted path sums from one vertex to every vertex.
    fn path_sums_from(&self, start: usize) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.vertex_count()];
        acc[start] = Rational::one();
        for &v in &self.topo {
            if acc[v].is_zero() {
                continue;
            }
            let here = acc[v].clone();
            for &e in &self.outgoing[v] {
                let t = self.edge_endpoints[e].1;
                acc[t] += &here * &self.spec.edges[e].weight;
            }
        }
        acc
    }

    /// Unweighted path counts from one vertex, saturating.
    fn path_counts_from(&self, start: usize) -> Vec<u128> {
        let mut acc = vec![0u128; self.vertex_count()];
        acc[start] = 1;
        for &v in &self.topo {
            if acc[v] == 0 {
                continue;
            }
            for &e in &self.outgoing[v] {
                let t = self.edge_endpoints[e].1;
                acc[t] = acc[t].saturating_add(acc[v]);
            }
        }
        acc
    }

    /// `(P_G)_{i,j}` is the weighted sum of all paths `s_i -> t_j`.
    pub fn path_matrix(&self) -> ExactMatrix {
        let m = self.boundary_size();
        let mut out = ExactMatrix::zeros(m, m);
        for (i, &s) in self.sources.iter().enumerate() {
            let sums = self.path_sums_from(s);
            for (j, &t) in self.sinks.iter().enumerate() {
                out.set(i, j, sums[t].clone());
            }
        }
        out
    }

    /// `n` copies glued sink-to-source. Boundary vertices between copy `i`
    /// and `i + 1` are named `b{i}_{j}` (so sources are `b0_*` and sinks
    /// `b{n}_*`); other vertices of copy `i` become `c{i}_{v}`.
    pub fn glue_power(&self, n: usize) -> PlanarNetwork {
        let m = self.boundary_size();
        let boundary = |layer: usize, j: usize| format!("b{layer}_{}", j + 1);
        let mut spec = NetworkSpec::default();
        spec.vertices.extend((0..m).map(|j| boundary(0, j)));
        let mut role: HashMap<usize, (bool, usize)> = HashMap::new();
        for (j, &s) in self.sources.iter().enumerate() {
            role.insert(s, (true, j));
        }
        for (j, &t) in self.sinks.iter().enumerate() {
            role.insert(t, (false, j));
        }
        for copy in 1..=n {
            let rename = |v: usize| match role.get(&v) {
                Some(&(true, j)) => boundary(copy - 1, j),
                Some(&(false, j)) => boundary(copy, j),
                None => format!("c{copy}_{}", self.spec.vertices[v]),
            };
            for (v, _) in self.spec.vertices.iter().enumerate() {
                if !role.contains_key(&v) {
                    spec.vertices.push(rename(v));
                }
            }
            spec.vertices.extend((0..m).map(|j| boundary(copy, j)));
            for (e, edge) in self.spec.edges.iter().enumerate() {
                let (a, b) = self.edge_endpoints[e];
                spec.edges
                    .push(Edge::new(rename(a), rename(b), edge.weight.clone()));
            }
        }
        spec.sources = (0..m).map(|j| boundary(0, j)).collect();
        spec.sinks = (0..m).map(|j| boundary(n, j)).collect();
        PlanarNetwork::new(spec).expect("gluing preserves validity")
    }

    /// All directed paths `from -> to` in depth-first order, following
    /// out-edges in declaration order.
    pub fn enumerate_paths(&self, from: &str, to: &str) -> Result<Vec<Path>> {
        let a = self.vertex_index(from)?;
        let b = self.vertex_index(to)?;
        Ok(self.paths_between(a, b))
    }

    fn paths_between(&self, from: usize, to: usize) -> Vec<Path> {
        let reaches = self.reaches(to);
        let mut out = Vec::new();
        if !reaches[from] {
            return out;
        }
        let mut stack = Vec::new();
        self.dfs(from, to, &reaches, &mut stack, &mut out, from);
        out
    }

    fn dfs(
        &self,
        v: usize,
        to: usize,
        reaches: &[bool],
        stack: &mut Vec<usize>,
        out: &mut Vec<Path>,
        start: usize,
    ) {
        if v == to {
            out.push(Path {
                start,
                edges: stack.clone(),
            });
            return;
        }
        for &e in &self.outgoing[v] {
            let t = self.edge_endpoints[e].1;
            if reaches[t] {
                stack.push(e);
                self.dfs(t, to, reaches, stack, out, start);
                stack.pop();
            }
        }
    }

    /// Vertices with a directed path to `target`.
    fn reaches(&self, target: usize) -> Vec<bool> {
        let mut reach = vec![false; self.vertex_count()];
        reach[target] = true;
        for &v in self.topo.iter().rev() {
            if self.outgoing[v]
                .iter()
                .any(|&e| reach[self.edge_endpoints[e].1])
            {
                reach[v] = true;
            }
        }
        reach
    }

    fn boundary_pairs(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<Vec<(usize, usize)>> {
        if i.len() != j.len() {
            return Err(Error::SubsetSizeMismatch {
                left: i.len(),
                right: j.len(),
            });
        }
        let m = self.boundary_size();
        for subset in [i, j] {
            if let Some(&bad) = subset.elements().iter().find(|&&e| e > m) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    bound: m,
                });
            }
        }
        Ok(i.zero_based()
            .zip(j.zero_based())
            .map(|(a, b)| (self.sources[a], self.sinks[b]))
            .collect())
    }

    /// Visits every non-intersecting tuple `(s_{i_1},...,s_{i_k}) -> (t_{j_1},...,t_{j_k})`.
    ///
    /// Refuses instances whose Cartesian product of per-pair path lists
    /// exceeds [`ORACLE_CAPACITY`].
    pub fn for_each_non_intersecting<F>(
        &self,
        i: &SubsetIndex,
        j: &SubsetIndex,
        mut visit: F,
    ) -> Result<()>
    where
        F: FnMut(&[Path]),
    {
        let pairs = self.boundary_pairs(i, j)?;
        let mut candidates: u128 = 1;
        for &(s, t) in &pairs {
            candidates = candidates.saturating_mul(self.path_counts_from(s)[t]);
        }
        if candidates > ORACLE_CAPACITY {
            return Err(Error::CapacityExceeded {
                requested: candidates,
                limit: ORACLE_CAPACITY,
            });
        }
        let lists: Vec<Vec<(Path, Vec<usize>)>> = pairs
            .iter()
            .map(|&(s, t)| {
                self.paths_between(s, t)
                    .into_iter()
                    .map(|p| {
                        let vs = p.vertices(self);
                        (p, vs)
                    })
                    .collect()
            })
            .collect();
        let mut used = vec![false; self.vertex_count()];
        let mut chosen: Vec<Path> = Vec::with_capacity(lists.len());
        self.backtrack(&lists, 0, &mut used, &mut chosen, &mut visit);
        Ok(())
    }

    fn backtrack<F>(
        &self,
        lists: &[Vec<(Path, Vec<usize>)>],
        depth: usize,
        used: &mut [bool],
        chosen: &mut Vec<Path>,
        visit: &mut F,
    ) where
        F: FnMut(&[Path]),
    {
        if depth == lists.len() {
            visit(chosen);
            return;
        }
        for (path, vertices) in &lists[depth] {
            if vertices.iter().any(|&v| used[v]) {
                continue;
            }
            for &v in vertices {
                used[v] = true;
            }
            chosen.push(path.clone());
            self.backtrack(lists, depth + 1, used, chosen, visit);
            chosen.pop();
            for &v in vertices {
                used[v] = false;
            }
        }
    }
}

/// Brute-force weighted count of non-intersecting tuples `(s_I) -> (t_J)`.
pub fn oracle_nonintersecting_sum(
    net: &PlanarNetwork,
    i: &SubsetIndex,
    j: &SubsetIndex,
) -> Result<Rational> {
    let mut total = Rational::zero();
    net.for_each_non_intersecting(i, j, |paths| {
        let w: Rational = paths.iter().map(|p| p.weight(net)).product();
        total += w;
    })?;
    Ok(total)
}
