use serde_json::{json, Value};

use super::Verdict;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Structure of one connected component of a 0-1 target graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Complete graph with a loop at every vertex.
    ReflexiveComplete,
    /// Complete bipartite, including `K1` and the edgeless single vertex.
    CompleteBipartite,
    Other,
}

impl Shape {
    fn as_str(self) -> &'static str {
        match self {
            Shape::ReflexiveComplete => "reflexive-complete",
            Shape::CompleteBipartite => "complete-bipartite",
            Shape::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralClassification {
    pub verdict: Verdict,
    pub components: Vec<(Vec<usize>, Shape)>,
}

impl StructuralClassification {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "certificate": {
                "components": self.components.iter().map(|(vs, s)| json!({
                    "vertices": vs,
                    "shape": s.as_str(),
                })).collect::<Vec<_>>(),
            },
        })
    }
}

fn shape(h: &Multigraph) -> Shape {
    let n = h.vertex_count();
    if (0..n).all(|i| (i..n).all(|j| h.multiplicity(i, j) == 1)) {
        return Shape::ReflexiveComplete;
    }
    match h.bipartition() {
        Some((l, r)) if l.iter().all(|&i| r.iter().all(|&j| h.multiplicity(i, j) == 1)) => {
            Shape::CompleteBipartite
        }
        _ => Shape::Other,
    }
}

/// Counting homomorphisms into `H` is tractable iff every component of `H`
/// is reflexive complete or complete bipartite.
pub fn classify01(h: &Multigraph) -> Result<StructuralClassification> {
    if h.has_parallel_edges() {
        return Err(Error::ParallelEdges);
    }
    let components: Vec<(Vec<usize>, Shape)> = h
        .components()
        .into_iter()
        .map(|(vs, sub)| {
            let s = shape(&sub);
            (vs, s)
        })
        .collect();
    let verdict = if components.iter().all(|(_, s)| *s != Shape::Other) {
        Verdict::Tractable
    } else {
        Verdict::SharpPHard
    };
    Ok(StructuralClassification { verdict, components })
}
