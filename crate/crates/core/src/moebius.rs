//! The partition lattice: enumeration, its Möbius function, and injective
//! partition functions obtained by Möbius inversion over quotients.
//!
//! `Q <= P` means `Q` refines `P`; the bottom element is the partition into
//! singletons.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::evaluator::{add_into, check_budget, z_brute};
use crate::graph::{Multigraph, Pinning, VertexPartition};
use crate::rings::{Matrix, Poly, Scalar};

/// Largest ground set accepted by the lattice operations (Bell(12) = 4213597).
pub const MAX_GROUND: usize = 12;

fn guard(k: usize) -> Result<()> {
    if k > MAX_GROUND {
        return Err(Error::TooLarge(format!("{k} elements; the limit is {MAX_GROUND}")));
    }
    Ok(())
}

/// Calls `f` on every restricted-growth string of length `k`, in
/// lexicographic order.
pub fn for_each_rgs(k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        f(&[]);
        return;
    }
    let mut a = vec![0usize; k];
    // max_prefix[i] = max(a[0..i]).
    let mut max_prefix = vec![0usize; k + 1];
    loop {
        for i in 1..=k {
            max_prefix[i] = max_prefix[i - 1].max(a[i - 1]);
        }
        f(&a);
        // Rightmost position that can grow.
        let Some(i) = (1..k).rev().find(|&i| a[i] <= max_prefix[i]) else {
            return;
        };
        a[i] += 1;
        for x in &mut a[i + 1..] {
            *x = 0;
        }
    }
}

/// All partitions of `{0, ..., k-1}`.
pub fn enumerate_partitions(k: usize) -> Result<Vec<VertexPartition>> {
    guard(k)?;
    let mut out = Vec::new();
    for_each_rgs(k, |rgs| out.push(VertexPartition::from_rgs(rgs)));
    Ok(out)
}

/// Integer partitions of `n` as non-increasing sequences.
fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Number of set partitions of an `n`-set with block sizes `shape`.
fn shape_count(shape: &[usize]) -> BigInt {
    let n: usize = shape.iter().sum();
    let mut denom: BigInt = shape.iter().map(|&p| factorial(p)).product();
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in shape {
        *mult.entry(p).or_default() += 1;
    }
    for &m in mult.values() {
        denom *= factorial(m);
    }
    factorial(n) / denom
}

/// The Möbius function of the partition lattice on `k` elements,
/// `mu(P) = mu(bottom, P)`, stored by block-size multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    k: usize,
    by_shape: BTreeMap<Vec<usize>, BigInt>,
}

impl MobiusTable {
    pub fn ground_size(&self) -> usize {
        self.k
    }

    pub fn value(&self, p: &VertexPartition) -> &BigInt {
        &self.by_shape[&p.shape()]
    }

    /// Values keyed by shape (block sizes, non-increasing).
    pub fn shapes(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.by_shape.iter().map(|(s, v)| (s.as_slice(), v))
    }

    /// Every partition with its value, in enumeration order.
    pub fn entries(&self) -> Vec<(VertexPartition, BigInt)> {
        let mut out = Vec::new();
        for_each_rgs(self.k, |rgs| {
            let p = VertexPartition::from_rgs(rgs);
            let v = self.value(&p).clone();
            out.push((p, v));
        });
        out
    }
}

/// Solves `sum_{Q <= P} mu(Q) = [P is the bottom]` shape by shape, finest
/// shapes first. A refinement of `P` partitions each block independently,
/// so the number of refinements of a given shape is a product of
/// set-partition counts.
pub fn mobius(k: usize) -> Result<MobiusTable> {
    guard(k)?;
    let mut shapes = integer_partitions(k);
    shapes.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut by_shape: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for lambda in shapes {
        if lambda.iter().all(|&b| b == 1) {
            by_shape.insert(lambda, BigInt::one());
            continue;
        }
        // Distribute: one integer partition per block of lambda.
        let options: Vec<Vec<Vec<usize>>> = lambda.iter().map(|&b| integer_partitions(b)).collect();
        let mut acc = BigInt::zero();
        let mut choice = vec![0usize; lambda.len()];
        loop {
            let proper = choice.iter().zip(&options).any(|(&c, o)| o[c].len() > 1);
            if proper {
                let mut nu: Vec<usize> = choice.iter().zip(&options).flat_map(|(&c, o)| o[c].clone()).collect();
                nu.sort_unstable_by(|a, b| b.cmp(a));
                let count: BigInt = choice.iter().zip(&options).map(|(&c, o)| shape_count(&o[c])).product();
                acc += count * &by_shape[&nu];
            }
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        by_shape.insert(lambda, -acc);
    }
    Ok(MobiusTable { k, by_shape })
}

/// `prod over blocks b of (-1)^(|b|-1) (|b|-1)!`.
pub fn closed_form(p: &VertexPartition) -> BigInt {
    p.blocks()
        .iter()
        .map(|b| {
            let f = factorial(b.len() - 1);
            if b.len() % 2 == 0 {
                -f
            } else {
                f
            }
        })
        .product()
}

/// First partition `P` of a `k`-set at which `sum_{Q <= P} mu(Q)`, summed
/// over explicitly enumerated refinements, differs from `[P is the bottom]`.
pub fn defining_sum_failure(table: &MobiusTable) -> Option<VertexPartition> {
    let k = table.ground_size();
    let mut parts: Vec<(Vec<usize>, usize, BigInt)> = Vec::new();
    for_each_rgs(k, |rgs| {
        let p = VertexPartition::from_rgs(rgs);
        parts.push((rgs.to_vec(), p.len(), table.value(&p).clone()));
    });
    // With restricted-growth strings the first element of block c is the
    // first position holding c.
    let firsts: Vec<Vec<usize>> = parts
        .iter()
        .map(|(rgs, len, _)| (0..*len).map(|c| rgs.iter().position(|&x| x == c).unwrap()).collect())
        .collect();
    for (rgs_p, len_p, _) in &parts {
        let mut sum = BigInt::zero();
        for ((rgs_q, len_q, mu), first_q) in parts.iter().zip(&firsts) {
            if len_q >= len_p && (0..k).all(|i| rgs_p[i] == rgs_p[first_q[rgs_q[i]]]) {
                sum += mu;
            }
        }
        let expected = if *len_p == k { BigInt::one() } else { BigInt::zero() };
        if sum != expected {
            return Some(VertexPartition::from_rgs(rgs_p));
        }
    }
    None
}

/// Both sides of `sum_P mu(P) X^|P| = X (X - 1) ... (X - k + 1)`, the left
/// summed over explicit partitions.
pub fn falling_factorial_sides(table: &MobiusTable) -> (Poly, Poly) {
    let k = table.ground_size();
    let mut coefficients = vec![BigInt::zero(); k + 1];
    for (p, mu) in table.entries() {
        coefficients[p.len()] += mu;
    }
    let lhs = Poly::new(coefficients.into_iter().map(BigRational::from_integer).collect());
    let rhs = (0..k as i64).fold(Poly::one(), |acc, i| acc * Poly::from_integers([-i, 1]));
    (lhs, rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YMode {
    /// Direct sum over injective maps.
    Brute,
    /// `sum_P mu(P) Z_A(G/P)`.
    Inversion,
}

/// `Y_A(G)`: the partition function restricted to injective configurations.
pub fn y_injective<S: Scalar>(a: &Matrix<S>, g: &Multigraph, mode: YMode, budget: u64) -> Result<S> {
    match mode {
        YMode::Brute => y_brute(a, g, budget),
        YMode::Inversion => schrijver_condition(a, g, budget),
    }
}

fn y_brute<S: Scalar>(a: &Matrix<S>, g: &Multigraph, budget: u64) -> Result<S> {
    a.ensure_symmetric()?;
    let m = a.rows();
    let n = g.vertex_count();
    if n > m {
        return Ok(S::zero());
    }
    check_budget(m, n, budget)?;
    let mut back = vec![Vec::new(); n];
    for (u, v, k) in g.edges() {
        back[v].push((u, k as u32));
    }
    struct St<'a, S> {
        a: &'a Matrix<S>,
        back: &'a [Vec<(usize, u32)>],
        sigma: Vec<usize>,
        used: Vec<bool>,
        total: S,
    }
    fn rec<S: Scalar>(st: &mut St<S>, d: usize, acc: S) {
        if d == st.sigma.len() {
            add_into(&mut st.total, &acc);
            return;
        }
        for s in 0..st.a.rows() {
            if st.used[s] {
                continue;
            }
            st.sigma[d] = s;
            let w = st.back[d].iter().fold(acc.clone(), |w, &(u, k)| w * st.a.get(st.sigma[u], s).pow(k));
            if w.is_zero() {
                continue;
            }
            st.used[s] = true;
            rec(st, d + 1, w);
            st.used[s] = false;
        }
    }
    let mut st = St {
        a,
        back: &back,
        sigma: vec![0; n],
        used: vec![false; m],
        total: S::zero(),
    };
    rec(&mut st, 0, S::one());
    Ok(st.total)
}

/// `sum_P mu(P) Z_A(G/P)`. This equals `Y_A(G)` and so vanishes whenever
/// `G` has more vertices than `A` has rows.
pub fn schrijver_condition<S: Scalar>(a: &Matrix<S>, g: &Multigraph, budget: u64) -> Result<S> {
    let table = mobius(g.vertex_count())?;
    let mut total = S::zero();
    let mut failure = None;
    for_each_rgs(g.vertex_count(), |rgs| {
        if failure.is_some() {
            return;
        }
        let p = VertexPartition::from_rgs(rgs);
        let mu = table.value(&p);
        let q = g.quotient(&p).expect("partition of V(G)");
        match z_brute(a, None, &Pinning::new(), &q, budget) {
            Ok(z) => add_into(&mut total, &(S::from_integer(mu.clone()) * z)),
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Both sides of `Z_A(G) = sum_P Y_A(G/P)`.
pub fn zeta_check<S: Scalar>(a: &Matrix<S>, g: &Multigraph, budget: u64) -> Result<(S, S)> {
    guard(g.vertex_count())?;
    let lhs = z_brute(a, None, &Pinning::new(), g, budget)?;
    let mut rhs = S::zero();
    for p in enumerate_partitions(g.vertex_count())? {
        let y = y_brute(a, &g.quotient(&p)?, budget)?;
        add_into(&mut rhs, &y);
    }
    Ok((lhs, rhs))
}

/// Quotients of a fixed list of graphs, grouped by isomorphism class, for
/// evaluating the inversion and zeta sums of many matrices at once.
#[derive(Debug, Clone)]
pub struct QuotientPlan {
    graphs: Vec<Multigraph>,
    classes: Vec<Multigraph>,
    // per graph: (class, sum of mu over partitions with that quotient class)
    mu_terms: Vec<Vec<(usize, BigInt)>>,
    // per graph: (class, number of partitions with that quotient class)
    zeta_terms: Vec<Vec<(usize, u64)>>,
}

impl QuotientPlan {
    pub fn new(graphs: &[Multigraph]) -> Result<Self> {
        let mut ids: std::collections::HashMap<Multigraph, usize> = std::collections::HashMap::new();
        let mut classes = Vec::new();
        let mut mu_terms = Vec::with_capacity(graphs.len());
        let mut zeta_terms = Vec::with_capacity(graphs.len());
        let mut tables: BTreeMap<usize, MobiusTable> = BTreeMap::new();
        for g in graphs {
            let n = g.vertex_count();
            if !tables.contains_key(&n) {
                tables.insert(n, mobius(n)?);
            }
            let table = &tables[&n];
            let mut mu: BTreeMap<usize, BigInt> = BTreeMap::new();
            let mut count: BTreeMap<usize, u64> = BTreeMap::new();
            for p in enumerate_partitions(n)? {
                let q = g.quotient(&p)?.canonical_form(0);
                let id = *ids.entry(q.clone()).or_insert_with(|| {
                    classes.push(q);
                    classes.len() - 1
                });
                *mu.entry(id).or_default() += table.value(&p);
                *count.entry(id).or_default() += 1;
            }
            mu_terms.push(mu.into_iter().filter(|(_, v)| !v.is_zero()).collect());
            zeta_terms.push(count.into_iter().collect());
        }
        Ok(QuotientPlan {
            graphs: graphs.to_vec(),
            classes,
            mu_terms,
            zeta_terms,
        })
    }

    pub fn graphs(&self) -> &[Multigraph] {
        &self.graphs
    }

    /// Quotient classes, each evaluated once per matrix.
    pub fn classes(&self) -> &[Multigraph] {
        &self.classes
    }

    /// `sum_P mu(P) Z_A(G/P)` for every graph.
    pub fn inversion<S: Scalar>(&self, a: &Matrix<S>, budget: u64) -> Result<Vec<S>> {
        let z = self
            .classes
            .iter()
            .map(|q| z_brute(a, None, &Pinning::new(), q, budget))
            .collect::<Result<Vec<S>>>()?;
        Ok(self
            .mu_terms
            .iter()
            .map(|terms| terms.iter().fold(S::zero(), |acc, (c, mu)| acc + S::from_integer(mu.clone()) * z[*c].clone()))
            .collect())
    }

    /// `sum_P Y_A(G/P)` for every graph, with `Y` by direct enumeration.
    pub fn zeta<S: Scalar>(&self, a: &Matrix<S>, budget: u64) -> Result<Vec<S>> {
        let y = self
            .classes
            .iter()
            .map(|q| y_brute(a, q, budget))
            .collect::<Result<Vec<S>>>()?;
        Ok(self
            .zeta_terms
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .fold(S::zero(), |acc, &(c, n)| acc + S::from_integer(n.into()) * y[c].clone())
            })
            .collect())
    }
}
