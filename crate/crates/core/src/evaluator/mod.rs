//! Brute-force evaluation of every partition-function flavour.
//!
//! Configurations are enumerated depth-first with vertices in ascending
//! order and spins in ascending order. Each edge is charged at its larger
//! endpoint, so a prefix whose product is already zero is skipped whole.

mod edge_model;
mod small;
mod tensor;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Multigraph, Pinning};
use crate::rings::{Matrix, RingValue, Scalar};
use crate::tagged::{unify, DiagonalWeights, WeightMatrix};

pub use edge_model::{z_edge_model, EdgeModel};
pub use tensor::{z_hypergraph, SymmetricTensor};

/// Fails unless `spins^free` configurations fit in the budget.
pub fn check_budget(spins: usize, free: usize, budget: u64) -> Result<u64> {
    let needed = num_traits::pow(BigInt::from(spins), free);
    match u64::try_from(&needed) {
        Ok(n) if n <= budget => Ok(n),
        _ => Err(Error::BudgetExceeded {
            needed: needed.to_string(),
            budget,
        }),
    }
}

/// Depth-first walk over all spin assignments consistent with `slots`.
///
/// `factor(v, spins)` is the weight contributed when vertex `v` receives
/// `spins[v]`, given the spins of all earlier vertices. `visit` receives each
/// leaf product with a multiplicity; a zero prefix is reported once with the
/// number of completions it stands for.
pub(crate) fn walk<S: Scalar>(
    slots: &[Option<usize>],
    spins: usize,
    factor: &dyn Fn(usize, &[usize]) -> S,
    visit: &mut dyn FnMut(&S, u64),
) {
    let n = slots.len();
    // completions[d] = number of assignments of vertices d..n.
    let mut completions = vec![1u64; n + 1];
    for d in (0..n).rev() {
        let choices = if slots[d].is_some() { 1 } else { spins as u64 };
        completions[d] = completions[d + 1].saturating_mul(choices);
    }
    let mut sigma = vec![0usize; n];
    let mut prefix: Vec<S> = vec![S::one(); n + 1];
    fn rec<S: Scalar>(
        d: usize,
        slots: &[Option<usize>],
        spins: usize,
        completions: &[u64],
        sigma: &mut [usize],
        prefix: &mut [S],
        factor: &dyn Fn(usize, &[usize]) -> S,
        visit: &mut dyn FnMut(&S, u64),
    ) {
        if d == slots.len() {
            visit(&prefix[d], 1);
            return;
        }
        let range = match slots[d] {
            Some(s) => s..s + 1,
            None => 0..spins,
        };
        for s in range {
            sigma[d] = s;
            let w = prefix[d].clone() * factor(d, sigma);
            if w.is_zero() {
                visit(&w, completions[d + 1]);
                continue;
            }
            prefix[d + 1] = w;
            rec(d + 1, slots, spins, completions, sigma, prefix, factor, visit);
        }
    }
    rec(0, slots, spins, &completions, &mut sigma, &mut prefix, factor, visit);
}

pub(crate) fn add_into<S: Scalar>(acc: &mut S, w: &S) {
    let a = std::mem::replace(acc, S::zero());
    *acc = a + w.clone();
}

/// Entrywise powers `A^(k)` for every multiplicity `k` occurring in `g`.
fn power_tables<S: Scalar>(a: &Matrix<S>, mults: impl Iterator<Item = usize>) -> BTreeMap<usize, Matrix<S>> {
    let mut tables = BTreeMap::new();
    for k in mults {
        tables
            .entry(k)
            .or_insert_with(|| a.map(|x| x.pow(k as u32)));
    }
    tables
}

fn check_square<S: Scalar>(a: &Matrix<S>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} weight matrix", a.rows(), a.cols())));
    }
    Ok(a.rows())
}

fn check_weights<S: Scalar>(m: usize, d: Option<&[S]>) -> Result<()> {
    match d {
        Some(d) if d.len() != m => Err(Error::DimensionMismatch(format!(
            "{} vertex weights for a {m}x{m} matrix",
            d.len()
        ))),
        _ => Ok(()),
    }
}

/// The weight of one configuration: the edge product times the vertex
/// weights of unpinned vertices.
pub fn config_weight<S: Scalar>(
    a: &Matrix<S>,
    d: Option<&[S]>,
    pinning: &Pinning,
    g: &Multigraph,
    sigma: &[usize],
) -> Result<S> {
    let m = check_square(a)?;
    check_weights(m, d)?;
    if sigma.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "configuration of length {} for {} vertices",
            sigma.len(),
            g.vertex_count()
        )));
    }
    if let Some(&s) = sigma.iter().find(|&&s| s >= m) {
        return Err(Error::DimensionMismatch(format!("spin {s} outside {m} spins")));
    }
    pinning.to_slots(g.vertex_count(), m)?;
    if let Some((v, _)) = pinning.iter().find(|&(v, s)| sigma[v] != s) {
        return Err(Error::PinningConflict(v));
    }
    let mut w = S::one();
    for (u, v, k) in g.edges() {
        w = w * a.get(sigma[u], sigma[v]).pow(k as u32);
    }
    if let Some(d) = d {
        for (v, &s) in sigma.iter().enumerate() {
            if pinning.get(v).is_none() {
                w = w * d[s].clone();
            }
        }
    }
    Ok(w)
}

struct Prepared<'a, S> {
    matrix: &'a Matrix<S>,
    slots: Vec<Option<usize>>,
    spins: usize,
    // back[v] = (earlier-or-equal neighbour, multiplicity)
    back: Vec<Vec<(usize, usize)>>,
    powers: BTreeMap<usize, Matrix<S>>,
    weights: Option<Vec<S>>,
}

impl<'a, S: Scalar> Prepared<'a, S> {
    fn new(a: &'a Matrix<S>, d: Option<&[S]>, pinning: &Pinning, g: &Multigraph, budget: u64) -> Result<Self> {
        let m = check_square(a)?;
        a.ensure_symmetric()?;
        check_weights(m, d)?;
        let slots = pinning.to_slots(g.vertex_count(), m)?;
        check_budget(m, slots.iter().filter(|s| s.is_none()).count(), budget)?;
        let mut back = vec![Vec::new(); g.vertex_count()];
        for (u, v, k) in g.edges() {
            back[v].push((u, k));
        }
        Ok(Prepared {
            matrix: a,
            slots,
            spins: m,
            back,
            powers: power_tables(a, g.edges().map(|(_, _, k)| k)),
            weights: d.map(<[S]>::to_vec),
        })
    }

    fn factor(&self, v: usize, sigma: &[usize]) -> S {
        let mut w = match (&self.weights, self.slots[v]) {
            (Some(d), None) => d[sigma[v]].clone(),
            _ => S::one(),
        };
        for &(u, k) in &self.back[v] {
            w = w * self.powers[&k].get(sigma[u], sigma[v]).clone();
            if w.is_zero() {
                break;
            }
        }
        w
    }

    fn sum(&self) -> S {
        if let Some(fast) = small::Small::new(self.matrix, self.weights.as_deref(), &self.slots, &self.back) {
            if let Some(total) = fast.sum() {
                return S::from_integer(total);
            }
        }
        let mut total = S::zero();
        walk(&self.slots, self.spins, &|v, s| self.factor(v, s), &mut |w, _| {
            if !w.is_zero() {
                add_into(&mut total, w);
            }
        });
        total
    }
}

/// `Z_{A,D}(phi, G)`: the sum of [`config_weight`] over every configuration
/// extending the pinning.
pub fn z_brute<S: Scalar>(
    a: &Matrix<S>,
    d: Option<&[S]>,
    pinning: &Pinning,
    g: &Multigraph,
    budget: u64,
) -> Result<S> {
    Ok(Prepared::new(a, d, pinning, g, budget)?.sum())
}

/// Shorthand for `z_brute` without vertex weights or pinnings.
pub fn z<S: Scalar>(a: &Matrix<S>, g: &Multigraph) -> Result<S> {
    z_brute(a, None, &Pinning::new(), g, crate::DEFAULT_BUDGET)
}

/// `Z_A(D)` for a directed graph, `A` indexed by (tail, head).
pub fn z_directed<S: Scalar>(a: &Matrix<S>, g: &DirectedGraph, budget: u64) -> Result<S> {
    let m = check_square(a)?;
    let n = g.vertex_count();
    check_budget(m, n, budget)?;
    // back[v] = (other endpoint, multiplicity, v is the head)
    let mut back = vec![Vec::new(); n];
    for (u, v, k) in g.edges() {
        if u <= v {
            back[v].push((u, k, true));
        } else {
            back[u].push((v, k, false));
        }
    }
    let powers = power_tables(a, g.edges().map(|(_, _, k)| k));
    let factor = |v: usize, sigma: &[usize]| {
        back[v].iter().fold(S::one(), |w, &(u, k, head)| {
            let (i, j) = if head { (sigma[u], sigma[v]) } else { (sigma[v], sigma[u]) };
            w * powers[&k].get(i, j).clone()
        })
    };
    let mut total = S::zero();
    walk(&vec![None; n], m, &factor, &mut |w, _| {
        if !w.is_zero() {
            add_into(&mut total, w);
        }
    });
    Ok(total)
}

/// A superset of the weights any configuration can have: every product of
/// `|E|` entries of `A`, taken with repetition. Sorted by display form for
/// determinism.
pub fn potential_weights<S: Scalar>(a: &Matrix<S>, g: &Multigraph) -> Vec<S> {
    let mut distinct: Vec<S> = Vec::new();
    for x in a.entries() {
        if !distinct.contains(x) {
            distinct.push(x.clone());
        }
    }
    // Multisets of size |E| over `distinct`, built by non-decreasing index.
    let mut frontier: Vec<(usize, S)> = vec![(0, S::one())];
    for _ in 0..g.edge_count() {
        let mut next = Vec::new();
        for (start, w) in &frontier {
            for (i, x) in distinct.iter().enumerate().skip(*start) {
                next.push((i, w.clone() * x.clone()));
            }
        }
        frontier = next;
    }
    let mut current: Vec<S> = Vec::new();
    for (_, w) in frontier {
        if !current.contains(&w) {
            current.push(w);
        }
    }
    current.sort_by_cached_key(|w| w.to_string());
    current
}

/// `N_A(G, phi, w)`: configurations extending the pinning whose edge
/// product equals `w` exactly.
pub fn count_configs<S: Scalar>(a: &Matrix<S>, g: &Multigraph, pinning: &Pinning, w: &S, budget: u64) -> Result<BigInt> {
    Ok(weight_histogram(a, g, pinning, budget)?
        .into_iter()
        .find(|(v, _)| v == w)
        .map_or_else(BigInt::zero, |(_, c)| c))
}

/// Every weight that occurs, with the number of configurations having it.
pub fn weight_histogram<S: Scalar>(a: &Matrix<S>, g: &Multigraph, pinning: &Pinning, budget: u64) -> Result<Vec<(S, BigInt)>> {
    let p = Prepared::new(a, None, pinning, g, budget)?;
    let mut hist: Vec<(S, BigInt)> = Vec::new();
    walk(&p.slots, p.spins, &|v, s| p.factor(v, s), &mut |w, count| {
        match hist.iter_mut().find(|(v, _)| v == w) {
            Some((_, c)) => *c += count,
            None => hist.push((w.clone(), BigInt::from(count))),
        }
    });
    Ok(hist)
}

/// Tagged front end: promotes `A` and `D` to a common ring first.
pub fn z_value(
    a: &WeightMatrix,
    d: Option<&DiagonalWeights>,
    pinning: &Pinning,
    g: &Multigraph,
    budget: u64,
) -> Result<RingValue> {
    let (a, d) = unify(a, d)?;
    match (&a, &d) {
        (WeightMatrix::Int(m), Some(DiagonalWeights::Int(d))) => Ok(z_brute(m, Some(d), pinning, g, budget)?.into_value()),
        (WeightMatrix::Rat(m), Some(DiagonalWeights::Rat(d))) => Ok(z_brute(m, Some(d), pinning, g, budget)?.into_value()),
        (WeightMatrix::Poly(m), Some(DiagonalWeights::Poly(d))) => Ok(z_brute(m, Some(d), pinning, g, budget)?.into_value()),
        (a, None) => crate::with_matrix!(a, m => Ok(z_brute(m, None, pinning, g, budget)?.into_value())),
        _ => unreachable!("unify returns a common ring"),
    }
}

#[cfg(test)]
mod tests;
