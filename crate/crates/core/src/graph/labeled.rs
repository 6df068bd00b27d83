use super::{Multigraph, Vertex};
use crate::error::{Error, Result};

/// A multigraph with `k` distinguished vertices; `labels[i]` carries label `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    graph: Multigraph,
    labels: Vec<Vertex>,
}

impl LabeledGraph {
    pub fn new(graph: Multigraph, labels: Vec<Vertex>) -> Result<Self> {
        for (i, &v) in labels.iter().enumerate() {
            if v >= graph.vertex_count() {
                return Err(Error::BadParameter(format!("label {i} on missing vertex {v}")));
            }
            if labels[..i].contains(&v) {
                return Err(Error::BadParameter(format!("vertex {v} carries two labels")));
            }
        }
        Ok(LabeledGraph { graph, labels })
    }

    /// Labels the first `k` vertices in order.
    pub fn with_prefix_labels(graph: Multigraph, k: usize) -> Result<Self> {
        LabeledGraph::new(graph, (0..k).collect())
    }

    /// The edgeless graph on exactly `k` labeled vertices, the unit of gluing.
    pub fn unit(k: usize) -> Self {
        LabeledGraph {
            graph: Multigraph::new(k),
            labels: (0..k).collect(),
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }
}

/// `(G, phi) . (H, psi)`: the disjoint union with `phi(i)` identified with
/// `psi(i)`. The vertices of `G` keep their numbers; unlabeled vertices of
/// `H` are appended in increasing order.
pub fn glue(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    if g.arity() != h.arity() {
        return Err(Error::LabelMismatch(g.arity(), h.arity()));
    }
    let hn = h.graph.vertex_count();
    let mut map = vec![usize::MAX; hn];
    for (i, &v) in h.labels.iter().enumerate() {
        map[v] = g.labels[i];
    }
    let mut graph = g.graph.clone();
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = graph.add_vertex();
        }
    }
    for (u, v, m) in h.graph.edges() {
        graph.add_edges(map[u], map[v], m)?;
    }
    Ok(LabeledGraph {
        graph,
        labels: g.labels.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_labeled_at_zero() -> LabeledGraph {
        LabeledGraph::with_prefix_labels(Multigraph::path(2), 1).unwrap()
    }

    #[test]
    fn zero_labels_give_disjoint_union() {
        let g = LabeledGraph::with_prefix_labels(Multigraph::path(2), 0).unwrap();
        let h = LabeledGraph::with_prefix_labels(Multigraph::cycle(3), 0).unwrap();
        let glued = glue(&g, &h).unwrap();
        assert_eq!(glued.graph(), &Multigraph::path(2).disjoint_union(&Multigraph::cycle(3)));
    }

    #[test]
    fn two_edges_at_a_label_make_a_path() {
        let e = edge_labeled_at_zero();
        let glued = glue(&e, &e).unwrap();
        assert_eq!(glued.graph(), &Multigraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert_eq!(glued.labels(), &[0]);
    }

    #[test]
    fn unit_is_neutral() {
        let g = LabeledGraph::new(Multigraph::cycle(4), vec![2, 0]).unwrap();
        assert_eq!(glue(&g, &LabeledGraph::unit(2)).unwrap(), g);
    }

    #[test]
    fn arities_must_match() {
        let g = LabeledGraph::unit(1);
        let h = LabeledGraph::unit(2);
        assert_eq!(glue(&g, &h), Err(Error::LabelMismatch(1, 2)));
    }

    #[test]
    fn labels_are_injective() {
        assert!(LabeledGraph::new(Multigraph::path(2), vec![0, 0]).is_err());
        assert!(LabeledGraph::new(Multigraph::path(2), vec![2]).is_err());
    }
}
