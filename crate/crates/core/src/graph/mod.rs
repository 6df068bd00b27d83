//! Multigraphs with loops and parallel edges, and the constructions the
//! partition-function identities are stated over.

mod canon;
mod labeled;
mod partition;
pub mod text;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use labeled::{glue, LabeledGraph};
pub use partition::VertexPartition;

pub type Vertex = usize;

/// Undirected multigraph on vertices `0..vertex_count`.
///
/// Edges are keyed by `(min, max)` with a multiplicity, so a loop is
/// `(v, v)` and parallel edges share a key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    vertex_count: usize,
    edges: BTreeMap<(Vertex, Vertex), usize>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Multigraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    pub fn add_edges(&mut self, u: Vertex, v: Vertex, mult: usize) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::BadParameter(format!(
                "edge {u}-{v} outside {} vertices",
                self.vertex_count
            )));
        }
        if mult > 0 {
            *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Appends an isolated vertex and returns it.
    pub fn add_vertex(&mut self) -> Vertex {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    /// Distinct edges as `(u, v, multiplicity)` with `u <= v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, usize)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Every edge occurrence, parallel edges repeated.
    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.edges()
            .flat_map(|(u, v, m)| std::iter::repeat_n((u, v), m))
            .collect()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges()
            .map(|(a, b, m)| if a == v && b == v { 2 * m } else if a == v || b == v { m } else { 0 })
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for (u, v, m) in self.edges() {
            deg[u] += m;
            deg[v] += m;
        }
        deg
    }

    pub fn has_loops(&self) -> bool {
        self.edges().any(|(u, v, _)| u == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges().any(|(_, _, m)| m > 1)
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    /// Neighbours with multiplicity, a loop listing `v` twice.
    fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (u, v, m) in self.edges() {
            for _ in 0..m {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        adj
    }

    /// Replaces every edge by `p` parallel copies.
    pub fn thicken(&self, p: usize) -> Result<Multigraph> {
        if p == 0 {
            return Err(Error::BadParameter("thickening factor must be positive".into()));
        }
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|(&k, &m)| (k, m * p)).collect(),
        })
    }

    /// Replaces every edge occurrence by a path of length `p` through
    /// `p - 1` fresh vertices, appended in edge order. A loop becomes a
    /// closed walk of length `p`.
    pub fn stretch(&self, p: usize) -> Result<Multigraph> {
        if p == 0 {
            return Err(Error::BadParameter("stretching factor must be positive".into()));
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let mut g = Multigraph::new(self.vertex_count);
        for (u, v) in self.edge_list() {
            let mut prev = u;
            for _ in 0..p - 1 {
                let fresh = g.add_vertex();
                g.add_edge(prev, fresh)?;
                prev = fresh;
            }
            g.add_edge(prev, v)?;
        }
        Ok(g)
    }

    /// `G/P`: one vertex per block, every edge occurrence kept.
    pub fn quotient(&self, partition: &VertexPartition) -> Result<Multigraph> {
        let class = partition.class_map(self.vertex_count)?;
        let mut g = Multigraph::new(partition.len());
        for (u, v, m) in self.edges() {
            g.add_edges(class[u], class[v], m)?;
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let mut g = self.clone();
        g.vertex_count += other.vertex_count;
        for (u, v, m) in other.edges() {
            *g.edges.entry((u + shift, v + shift)).or_insert(0) += m;
        }
        g
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Multigraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Multigraph::new(vertices.len());
        for (u, v, m) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                *g.edges.entry((index[u].min(index[v]), index[u].max(index[v]))).or_insert(0) += m;
            }
        }
        g
    }

    /// Connected components ordered by smallest vertex, each with its
    /// sorted vertex set and induced subgraph.
    pub fn components(&self) -> Vec<(Vec<Vertex>, Multigraph)> {
        self.component_sets()
            .into_iter()
            .map(|vs| {
                let g = self.induced(&vs);
                (vs, g)
            })
            .collect()
    }

    pub fn component_sets(&self) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_sets().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// A proper 2-colouring as (colour-0 vertices, colour-1 vertices), the
    /// smallest vertex of each component coloured 0. `None` if some
    /// component has an odd cycle or a loop.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let colour = self.two_colouring()?;
        let (left, right): (Vec<Vertex>, Vec<Vertex>) =
            (0..self.vertex_count).partition(|&v| colour[v] == 0);
        Some((left, right))
    }

    pub(crate) fn two_colouring(&self) -> Option<Vec<u8>> {
        if self.has_loops() {
            return None;
        }
        let adj = self.adjacency();
        let mut colour = vec![u8::MAX; self.vertex_count];
        for s in 0..self.vertex_count {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        queue.push_back(y);
                    } else if colour[y] == colour[x] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Removes one occurrence of the edge `{u, v}`.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Multigraph> {
        let key = (u.min(v), u.max(v));
        let mut g = self.clone();
        match g.edges.get_mut(&key) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                g.edges.remove(&key);
            }
            None => return Err(Error::BadParameter(format!("no edge {u}-{v}"))),
        }
        Ok(g)
    }

    /// Contracts one occurrence of `{u, v}`: the edge is removed and its
    /// endpoints merged. The larger endpoint disappears and later vertices
    /// shift down by one; remaining parallel copies become loops.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Multigraph> {
        let g = self.delete_edge(u, v)?;
        if u == v {
            return Ok(g);
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let rename = |x: Vertex| match x {
            x if x == gone => keep,
            x if x > gone => x - 1,
            x => x,
        };
        let mut out = Multigraph::new(self.vertex_count - 1);
        for (a, b, m) in g.edges() {
            out.add_edges(rename(a), rename(b), m)?;
        }
        Ok(out)
    }

    /// Whether deleting one occurrence of `{u, v}` disconnects its endpoints.
    pub fn is_bridge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v || self.multiplicity(u, v) != 1 {
            return false;
        }
        let Ok(g) = self.delete_edge(u, v) else {
            return false;
        };
        let adj = g.adjacency();
        let mut seen = vec![false; g.vertex_count];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        !seen[v]
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Multigraph {
        let mut g = Multigraph::new(self.vertex_count);
        for (u, v, m) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            *g.edges.entry((a.min(b), a.max(b))).or_insert(0) += m;
        }
        g
    }

    // Named graphs used throughout the examples and tests.

    pub fn empty(n: usize) -> Multigraph {
        Multigraph::new(n)
    }

    pub fn path(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i).expect("in range");
        }
        g
    }

    pub fn cycle(n: usize) -> Multigraph {
        let mut g = Multigraph::path(n);
        if n >= 1 {
            g.add_edge(n - 1, 0).expect("in range");
        }
        g
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j).expect("in range");
            }
        }
        g
    }

    pub fn single_loop() -> Multigraph {
        Multigraph::from_edges(1, &[(0, 0)]).expect("in range")
    }
}

/// Directed multigraph; edge `(u, v)` points from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    vertex_count: usize,
    edges: BTreeMap<(Vertex, Vertex), usize>,
}

impl DirectedGraph {
    pub fn new(vertex_count: usize) -> Self {
        DirectedGraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = DirectedGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::BadParameter(format!("arc {u}->{v} out of range")));
        }
        *self.edges.entry((u, v)).or_insert(0) += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, usize)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Forgets orientations.
    pub fn underlying(&self) -> Multigraph {
        let mut g = Multigraph::new(self.vertex_count);
        for (u, v, m) in self.edges() {
            g.add_edges(u, v, m).expect("in range");
        }
        g
    }
}

/// `r`-uniform hypergraph without parallel hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    arity: usize,
    edges: BTreeSet<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::BadParameter("hypergraph arity must be at least 1".into()));
        }
        Ok(Hypergraph {
            vertex_count,
            arity,
            edges: BTreeSet::new(),
        })
    }

    /// Adds the hyperedge on `vertices`; returns `false` if already present.
    pub fn add_edge(&mut self, vertices: &[Vertex]) -> Result<bool> {
        let mut e = vertices.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.len() != self.arity || vertices.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: e.len(),
            });
        }
        if e.iter().any(|&v| v >= self.vertex_count) {
            return Err(Error::BadParameter("hyperedge vertex out of range".into()));
        }
        Ok(self.edges.insert(e))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn edges(&self) -> impl Iterator<Item = &[Vertex]> {
        self.edges.iter().map(Vec::as_slice)
    }
}

/// Partial assignment of spins to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Pinning {
    assignments: BTreeMap<Vertex, usize>,
}

impl Pinning {
    pub fn new() -> Self {
        Pinning::default()
    }

    pub fn from_pairs(pairs: &[(Vertex, usize)]) -> Self {
        Pinning {
            assignments: pairs.iter().copied().collect(),
        }
    }

    pub fn pin(&mut self, v: Vertex, spin: usize) {
        self.assignments.insert(v, spin);
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.assignments.get(&v).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.assignments.iter().map(|(&v, &s)| (v, s))
    }

    /// Spins composed with `map`, e.g. a twin-resolution map.
    pub fn map_spins(&self, map: &[usize]) -> Pinning {
        Pinning {
            assignments: self.iter().map(|(v, s)| (v, map[s])).collect(),
        }
    }

    /// Dense per-vertex view, checked against the graph and spin count.
    pub fn to_slots(&self, vertex_count: usize, spins: usize) -> Result<Vec<Option<usize>>> {
        let mut slots = vec![None; vertex_count];
        for (v, s) in self.iter() {
            if v >= vertex_count {
                return Err(Error::BadParameter(format!("pinned vertex {v} out of range")));
            }
            if s >= spins {
                return Err(Error::DimensionMismatch(format!(
                    "pinned spin {s} at vertex {v} outside {spins} spins"
                )));
            }
            slots[v] = Some(s);
        }
        Ok(slots)
    }
}
