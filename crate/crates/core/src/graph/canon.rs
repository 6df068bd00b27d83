use super::{Multigraph, Vertex};

impl Multigraph {
    /// A canonical representative of the isomorphism class of `self` under
    /// permutations that fix vertices `0..fixed`.
    ///
    /// Free vertices are first ordered by a refinement-invariant key, then
    /// every ordering within equal keys is tried; the lexicographically least
    /// edge list wins. Exponential in the size of the largest key class, so
    /// meant for small graphs.
    pub fn canonical_form(&self, fixed: usize) -> Multigraph {
        let n = self.vertex_count();
        let fixed = fixed.min(n);
        let key = |v: Vertex| {
            let mut nbr: Vec<usize> = (fixed..n).filter(|&u| u != v).map(|u| self.multiplicity(u, v)).collect();
            nbr.sort_unstable();
            (
                self.degree(v),
                self.multiplicity(v, v),
                (0..fixed).map(|u| self.multiplicity(u, v)).collect::<Vec<_>>(),
                nbr,
            )
        };
        let mut free: Vec<(_, Vertex)> = (fixed..n).map(|v| (key(v), v)).collect();
        free.sort();
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        for (i, (k, v)) in free.iter().enumerate() {
            if i > 0 && free[i - 1].0 == *k {
                groups.last_mut().unwrap().push(*v);
            } else {
                groups.push(vec![*v]);
            }
        }

        let mut best: Option<Vec<(Vertex, Vertex, usize)>> = None;
        let mut order: Vec<Vertex> = (0..fixed).collect();
        search(self, &groups, 0, &mut order, &mut best);
        let edges = best.unwrap();
        let mut g = Multigraph::new(n);
        for (u, v, m) in edges {
            g.add_edges(u, v, m).expect("vertices in range");
        }
        g
    }
}

fn search(
    g: &Multigraph,
    groups: &[Vec<Vertex>],
    gi: usize,
    order: &mut Vec<Vertex>,
    best: &mut Option<Vec<(Vertex, Vertex, usize)>>,
) {
    if gi == groups.len() {
        // order[new] = old
        let mut perm = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let edges: Vec<_> = g.relabel(&perm).edges().collect();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    permute(g, groups, gi, groups[gi].clone(), 0, order, best);
}

fn permute(
    g: &Multigraph,
    groups: &[Vec<Vertex>],
    gi: usize,
    mut items: Vec<Vertex>,
    i: usize,
    order: &mut Vec<Vertex>,
    best: &mut Option<Vec<(Vertex, Vertex, usize)>>,
) {
    if i == items.len() {
        let len = order.len();
        order.extend_from_slice(&items);
        search(g, groups, gi + 1, order, best);
        order.truncate(len);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        permute(g, groups, gi, items.clone(), i + 1, order, best);
        items.swap(i, j);
    }
}
