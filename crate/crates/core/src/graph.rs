//! Simple undirected graphs over dense vertex ids and the certificate types
//! that travel with them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, which makes neighbourhood tests a binary
/// search and gives every traversal a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let pos = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(pos);
        self.m -= 1;
        Ok(())
    }

    /// Appends `count` isolated vertices and returns the id of the first one.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.n();
        self.adj.resize(first + count, Vec::new());
        first
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The common degree if the graph is regular (`None` for the empty graph).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|ns| ns.len() == d).then_some(d)
    }

    pub fn require_regular(&self, p: usize) -> Result<()> {
        match self.adj.iter().position(|ns| ns.len() != p) {
            None => Ok(()),
            Some(v) => Err(Error::NotRegular {
                expected: p,
                vertex: v,
                degree: self.degree(v),
            }),
        }
    }

    /// Connected in the usual sense; the graphs on zero or one vertex count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }
}

/// Identifies `v` with `w`.
///
/// The merged vertex is joined to `(N(v) ∪ N(w)) \ {v, w}`; an edge between
/// `v` and `w` disappears and a shared neighbour yields a single edge. Ids
/// are re-compacted to `0..n-1`: the larger of the two ids is removed, the
/// merged vertex takes the smaller id, and every id above the removed one
/// shifts down by one. The returned map sends each old id to its new id.
pub fn identify_vertices(g: &Graph, v: usize, w: usize) -> Result<(Graph, Vec<usize>)> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::SameVertex(v));
    }
    let (keep, gone) = (v.min(w), v.max(w));
    let relabel: Vec<usize> = (0..g.n())
        .map(|x| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(a, b)| !(a == keep && b == gone))
        .map(|(a, b)| {
            let (a, b) = (relabel[a], relabel[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let out = Graph::from_edges(g.n() - 1, edges)?;
    Ok((out, relabel))
}

/// A cycle given by its vertex sequence `(v_0, …, v_{k-1})`; the closing edge
/// `{v_{k-1}, v_0}` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleCert(pub Vec<usize>);

impl CycleCert {
    pub fn new(order: Vec<usize>) -> Self {
        CycleCert(order)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Consecutive pairs including the closing one.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    /// Rotated to start at the smallest vertex, oriented so that the smaller
    /// of its two cycle neighbours comes second.
    pub fn canonical(&self) -> CycleCert {
        let k = self.0.len();
        if k < 3 {
            return self.clone();
        }
        let start = (0..k).min_by_key(|&i| self.0[i]).unwrap();
        let next = self.0[(start + 1) % k];
        let prev = self.0[(start + k - 1) % k];
        let order = if next <= prev {
            (0..k).map(|i| self.0[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| self.0[(start + k - i) % k]).collect()
        };
        CycleCert(order)
    }

    /// Checks that this is a Hamiltonian cycle of `g`.
    pub fn require_hamiltonian(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.0.len() != n || n < 3 {
            return Err(Error::InvalidCertificate(format!(
                "cycle has {} vertices, graph has {n}",
                self.0.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &self.0 {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCertificate(format!("vertex {v} repeated")));
            }
        }
        for (a, b) in self.edges() {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCertificate(format!(
                    "consecutive vertices {a}, {b} are not adjacent"
                )));
            }
        }
        Ok(())
    }
}

/// A set of vertex-disjoint cycles covering all vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoFactorCert {
    pub cycles: Vec<CycleCert>,
}

impl TwoFactorCert {
    pub fn new(cycles: Vec<CycleCert>) -> Self {
        TwoFactorCert { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Index of the cycle containing each vertex, or an error if the cycles
    /// are not a valid 2-factor of `g`.
    pub fn cycle_index(&self, g: &Graph) -> Result<Vec<usize>> {
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (i, c) in self.cycles.iter().enumerate() {
            if c.len() < 3 {
                return Err(Error::InvalidCertificate(format!(
                    "cycle {i} has fewer than 3 vertices"
                )));
            }
            for &v in c.vertices() {
                g.check_vertex(v)?;
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidCertificate(format!(
                        "vertex {v} lies on two cycles"
                    )));
                }
                owner[v] = i;
            }
            for (a, b) in c.edges() {
                if !g.has_edge(a, b) {
                    return Err(Error::InvalidCertificate(format!(
                        "cycle {i} uses non-edge {{{a}, {b}}}"
                    )));
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidCertificate(format!("vertex {v} is uncovered")));
        }
        Ok(owner)
    }
}

/// A total map from vertices to colours `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring(pub Vec<u8>);

impl Coloring {
    pub fn color(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No monochromatic edge and every colour in `1..=3`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.0.len() == g.n()
            && self.0.iter().all(|c| (1..=3).contains(c))
            && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }
}
