use std::collections::BTreeMap;

use super::{add_into, check_budget};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rings::Scalar;

/// An edge model: `F` maps the colour profile `t(tau, v)` of the edges at a
/// vertex to a weight. Tabulated for all profiles of total at most
/// `max_degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeModel<S> {
    spins: usize,
    max_degree: usize,
    table: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> EdgeModel<S> {
    pub fn from_fn(spins: usize, max_degree: usize, f: impl Fn(&[usize]) -> S) -> Result<Self> {
        if spins == 0 {
            return Err(Error::BadParameter("an edge model needs at least one colour".into()));
        }
        let mut table = BTreeMap::new();
        let mut t = vec![0; spins];
        fn fill<S>(i: usize, left: usize, t: &mut Vec<usize>, f: &dyn Fn(&[usize]) -> S, out: &mut BTreeMap<Vec<usize>, S>) {
            if i == t.len() {
                out.insert(t.clone(), f(t));
                return;
            }
            for c in 0..=left {
                t[i] = c;
                fill(i + 1, left - c, t, f, out);
            }
            t[i] = 0;
        }
        fill(0, max_degree, &mut t, &f, &mut table);
        Ok(EdgeModel { spins, max_degree, table })
    }

    /// `F(t) = 1` iff exactly one incident edge has colour 1: `Z` counts
    /// perfect matchings.
    pub fn perfect_matchings(max_degree: usize) -> Self {
        EdgeModel::from_fn(2, max_degree, |t| if t[1] == 1 { S::one() } else { S::zero() })
            .expect("two colours")
    }

    pub fn spins(&self) -> usize {
        self.spins
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn get(&self, profile: &[usize]) -> Option<&S> {
        self.table.get(profile)
    }
}

/// `Z~_F(G) = sum over tau: E -> [n] of prod over v of F(t(tau, v))`, where
/// `t(tau, v)_i` counts edge occurrences at `v` coloured `i`. A loop is one
/// edge incident to its vertex and contributes once.
pub fn z_edge_model<S: Scalar>(f: &EdgeModel<S>, g: &Multigraph, budget: u64) -> Result<S> {
    let edges = g.edge_list();
    let n = g.vertex_count();
    let mut incident = vec![0usize; n];
    for &(u, v) in &edges {
        incident[u] += 1;
        if u != v {
            incident[v] += 1;
        }
    }
    if let Some(d) = incident.iter().copied().max().filter(|&d| d > f.max_degree()) {
        return Err(Error::BadParameter(format!(
            "edge model tabulated up to degree {}, graph has degree {d}",
            f.max_degree()
        )));
    }
    check_budget(f.spins(), edges.len(), budget)?;
    // Vertices whose last incident edge is edges[i] are settled after it.
    let mut settle: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    let mut base = S::one();
    for v in 0..n {
        match edges.iter().rposition(|&(a, b)| a == v || b == v) {
            Some(i) => settle[i].push(v),
            None => base = base * f.get(&vec![0; f.spins()]).expect("tabulated").clone(),
        }
    }
    let mut total = S::zero();
    if base.is_zero() {
        return Ok(total);
    }
    let mut profile = vec![vec![0usize; f.spins()]; n];

    struct Walk<'a, S> {
        f: &'a EdgeModel<S>,
        edges: &'a [(usize, usize)],
        settle: &'a [Vec<usize>],
    }
    fn rec<S: Scalar>(w: &Walk<S>, i: usize, acc: &S, profile: &mut [Vec<usize>], total: &mut S) {
        if i == w.edges.len() {
            add_into(total, acc);
            return;
        }
        let (u, v) = w.edges[i];
        for c in 0..w.f.spins() {
            profile[u][c] += 1;
            if u != v {
                profile[v][c] += 1;
            }
            let mut next = acc.clone();
            for &x in &w.settle[i] {
                next = next * w.f.get(&profile[x]).expect("degree checked").clone();
            }
            if !next.is_zero() {
                rec(w, i + 1, &next, profile, total);
            }
            profile[u][c] -= 1;
            if u != v {
                profile[v][c] -= 1;
            }
        }
    }
    let walk = Walk { f, edges: &edges, settle: &settle };
    rec(&walk, 0, &base, &mut profile, &mut total);
    Ok(total)
}
