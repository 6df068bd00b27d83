//! Exhaustive families of small matrices and graphs used by the verification
//! suites.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fastpath::{classify, Verdict};
use crate::graph::Multigraph;
use crate::rings::Matrix;

/// Every symmetric `n x n` integer matrix with entries in `lo..=hi`, for
/// `n = 1..=max_dim`, in lexicographic order of the upper triangle.
pub fn symmetric_matrices(max_dim: usize, lo: i64, hi: i64) -> Vec<Matrix<BigInt>> {
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    for n in 1..=max_dim {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let mut upper = vec![lo; cells.len()];
        loop {
            let mut m = Matrix::from_fn(n, n, |_, _| BigInt::from(0));
            for (&(i, j), &x) in cells.iter().zip(&upper) {
                m.set(i, j, BigInt::from(x));
                m.set(j, i, BigInt::from(x));
            }
            out.push(m);
            let Some(pos) = upper.iter().rposition(|&x| x < hi) else { break };
            upper[pos] += 1;
            for x in &mut upper[pos + 1..] {
                *x = lo;
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

fn row_major(m: &Matrix<BigInt>) -> Vec<BigInt> {
    m.entries().cloned().collect()
}

/// One representative per orbit of `matrices` under simultaneous row and
/// column permutation, the least in row-major order. Order of first
/// appearance is kept.
pub fn permutation_orbits(matrices: &[Matrix<BigInt>]) -> Vec<Matrix<BigInt>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut perms: Vec<Vec<Vec<usize>>> = Vec::new();
    for m in matrices {
        let n = m.rows();
        while perms.len() <= n {
            perms.push(permutations(perms.len()));
        }
        let key = perms[n].iter().map(|p| row_major(&m.permuted(p))).min().unwrap_or_default();
        if seen.insert((n, key)) {
            out.push(m.clone());
        }
    }
    out
}

/// Symmetric non-negative matrices up to `max_dim` with entries at most
/// `max_entry` that the classifier calls tractable.
pub fn tractable_matrices(max_dim: usize, max_entry: i64) -> Result<Vec<Matrix<BigInt>>> {
    let mut out = Vec::new();
    for a in symmetric_matrices(max_dim, 0, max_entry) {
        if classify(&a, true)?.verdict == Verdict::Tractable {
            out.push(a);
        }
    }
    Ok(out)
}

/// All symmetric 0-1 matrices of dimension exactly `n`.
pub fn zero_one_matrices(n: usize) -> Vec<Matrix<BigInt>> {
    symmetric_matrices(n, 0, 1).into_iter().filter(|m| m.rows() == n).collect()
}

/// The graph whose adjacency matrix is the 0-1 matrix `a`: a loop for each
/// nonzero diagonal entry.
pub fn graph_of_zero_one(a: &Matrix<BigInt>) -> Multigraph {
    let n = a.rows();
    let mut h = Multigraph::new(n);
    for i in 0..n {
        for j in i..n {
            if a.get(i, j) != &BigInt::from(0) {
                h.add_edge(i, j).expect("in range");
            }
        }
    }
    h
}

const MAX_GRAPH_VERTICES: usize = 7;
const MAX_GRAPH_EDGES: usize = 10;

fn check_graph_bounds(max_vertices: usize, max_edges: usize) -> Result<()> {
    if max_vertices > MAX_GRAPH_VERTICES || max_edges > MAX_GRAPH_EDGES {
        return Err(Error::TooLarge(format!(
            "graph corpus bounded by {MAX_GRAPH_VERTICES} vertices and {MAX_GRAPH_EDGES} edges"
        )));
    }
    Ok(())
}

fn insert_class(level: &mut BTreeSet<Vec<(usize, usize, usize)>>, g: &Multigraph) {
    level.insert(g.canonical_form(0).edges().collect());
}

fn from_class(n: usize, edges: &[(usize, usize, usize)]) -> Multigraph {
    let mut g = Multigraph::new(n);
    for &(u, v, m) in edges {
        g.add_edges(u, v, m).expect("in range");
    }
    g
}

/// One representative of each isomorphism class of connected multigraphs
/// (loops allowed) with `1..=max_vertices` vertices and at most `max_edges`
/// edge occurrences, ordered by vertex count, then edge count.
///
/// A connected graph either has an edge whose removal keeps it connected, or
/// is a tree with a leaf; so every class on `n` vertices and `e` edges is
/// reached from one with `e - 1` edges by adding an edge, or from one on
/// `n - 1` vertices by attaching a pendant vertex.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Result<Vec<Multigraph>> {
    connected_filtered(max_vertices, max_edges, true)
}

/// As [`connected_multigraphs`], restricted to simple graphs.
pub fn connected_simple_graphs(max_vertices: usize) -> Result<Vec<Multigraph>> {
    let max_edges = max_vertices * max_vertices.saturating_sub(1) / 2;
    connected_filtered(max_vertices, max_edges.min(MAX_GRAPH_EDGES), false)
}

fn connected_filtered(max_vertices: usize, max_edges: usize, multi: bool) -> Result<Vec<Multigraph>> {
    check_graph_bounds(max_vertices, max_edges)?;
    // classes[n][e], n counted from 1
    let mut classes: Vec<Vec<BTreeSet<Vec<(usize, usize, usize)>>>> = Vec::new();
    for n in 1..=max_vertices {
        let mut by_edges: Vec<BTreeSet<_>> = vec![BTreeSet::new(); max_edges + 1];
        if n == 1 {
            by_edges[0].insert(Vec::new());
        }
        for e in 1..=max_edges {
            let mut level = BTreeSet::new();
            if n > 1 {
                for class in &classes[n - 2][e - 1] {
                    let h = from_class(n, class);
                    for u in 0..n - 1 {
                        let mut g = h.clone();
                        g.add_edge(u, n - 1).expect("in range");
                        insert_class(&mut level, &g);
                    }
                }
            }
            for class in &by_edges[e - 1] {
                let h = from_class(n, class);
                for u in 0..n {
                    for v in u..n {
                        if !multi && (u == v || h.multiplicity(u, v) > 0) {
                            continue;
                        }
                        let mut g = h.clone();
                        g.add_edge(u, v).expect("in range");
                        insert_class(&mut level, &g);
                    }
                }
            }
            by_edges[e] = level;
        }
        classes.push(by_edges);
    }
    let mut out = Vec::new();
    for (i, by_edges) in classes.iter().enumerate() {
        for level in by_edges {
            out.extend(level.iter().map(|c| from_class(i + 1, c)));
        }
    }
    Ok(out)
}

/// Isomorphism classes of all multigraphs, connected or not, with at most
/// `max_vertices` vertices and `max_edges` edge occurrences, including the
/// empty graph. Built as multisets of connected classes.
pub fn multigraphs(max_vertices: usize, max_edges: usize) -> Result<Vec<Multigraph>> {
    let connected = connected_multigraphs(max_vertices, max_edges)?;
    let mut out = Vec::new();
    let mut chosen = Multigraph::new(0);
    union_of(&connected, 0, &mut chosen, max_vertices, max_edges, &mut out);
    Ok(out)
}

/// Isomorphism classes of simple graphs on at most `max_vertices` vertices,
/// including the empty graph.
pub fn simple_graphs(max_vertices: usize) -> Result<Vec<Multigraph>> {
    let connected = connected_simple_graphs(max_vertices)?;
    let mut out = Vec::new();
    let mut chosen = Multigraph::new(0);
    union_of(&connected, 0, &mut chosen, max_vertices, usize::MAX, &mut out);
    Ok(out)
}

fn union_of(
    parts: &[Multigraph],
    from: usize,
    acc: &mut Multigraph,
    max_vertices: usize,
    max_edges: usize,
    out: &mut Vec<Multigraph>,
) {
    out.push(acc.clone());
    for (i, p) in parts.iter().enumerate().skip(from) {
        if acc.vertex_count() + p.vertex_count() <= max_vertices && acc.edge_count() + p.edge_count() <= max_edges {
            let mut next = acc.disjoint_union(p);
            std::mem::swap(acc, &mut next);
            union_of(parts, i, acc, max_vertices, max_edges, out);
            std::mem::swap(acc, &mut next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_counts() {
        assert_eq!(symmetric_matrices(3, 0, 3).len(), 4 + 64 + 4096);
        assert_eq!(zero_one_matrices(4).len(), 1024);
        // Burnside: orbits of 2x2 under the swap are (4^3 + 4^2) / 2.
        let two: Vec<_> = symmetric_matrices(2, 0, 3).into_iter().filter(|m| m.rows() == 2).collect();
        assert_eq!(permutation_orbits(&two).len(), 40);
        // 3x3: (4^6 + 3 * 4^4 + 2 * 4^2) / 6.
        let three: Vec<_> = symmetric_matrices(3, 0, 3).into_iter().filter(|m| m.rows() == 3).collect();
        assert_eq!(permutation_orbits(&three).len(), 816);
    }

    #[test]
    fn graph_counts() {
        // Connected simple graphs on 1..=5 vertices: 1, 1, 2, 6, 21.
        let simple = connected_simple_graphs(5).unwrap();
        let by_n: Vec<usize> = (1..=5).map(|n| simple.iter().filter(|g| g.vertex_count() == n).count()).collect();
        assert_eq!(by_n, vec![1, 1, 2, 6, 21]);
        // One vertex with 0..=3 loops; on two vertices 1, 2 and 4 classes
        // with 1, 2 and 3 edges.
        let multi = connected_multigraphs(2, 3).unwrap();
        assert_eq!(multi.len(), 4 + 1 + 2 + 4);
        assert_eq!(simple_graphs(4).unwrap().iter().filter(|g| g.vertex_count() == 4).count(), 11);
        // Simple graphs on 4 vertices: 11.
        let all = multigraphs(4, 6).unwrap();
        let simple4 = all.iter().filter(|g| g.vertex_count() == 4 && g.is_simple()).count();
        assert_eq!(simple4, 11);
        assert!(connected_multigraphs(8, 3).is_err());
    }

    #[test]
    fn classes_are_distinct_and_connected() {
        let gs = connected_multigraphs(4, 4).unwrap();
        let mut forms = BTreeSet::new();
        for g in &gs {
            assert!(g.is_connected());
            assert!(forms.insert((g.vertex_count(), g.canonical_form(0).edges().collect::<Vec<_>>())));
        }
    }
}
