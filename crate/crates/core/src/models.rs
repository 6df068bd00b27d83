//! Named weight matrices from the worked examples, each with a direct
//! combinatorial oracle that never goes through a partition function.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::evaluator::{check_budget, z_brute};
use crate::graph::{Multigraph, Pinning};
use crate::rings::{Matrix, Poly, Scalar};
use crate::tagged::{DiagonalWeights, WeightMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedModel {
    IndepSet,
    WeightedIndepSet,
    Coloring(usize),
    Euler,
    EvenSubgraph,
    MaxCut,
    TutteMatrix { n: usize, r: BigRational, s: BigRational },
    Flow(usize),
    Ising,
    Potts { n: usize, v: BigRational },
}

/// `A(n, r, s)`: diagonal `r`, off-diagonal `s`.
pub fn constant_diagonal<S: Scalar>(n: usize, r: S, s: S) -> Matrix<S> {
    Matrix::from_fn(n, n, |i, j| if i == j { r.clone() } else { s.clone() })
}

fn x_matrix(diagonal: Poly, off: Poly) -> Matrix<Poly> {
    constant_diagonal(2, diagonal, off)
}

/// The weight matrix (and vertex weights, where the example has them).
pub fn matrix_of(model: &NamedModel) -> Result<(WeightMatrix, Option<DiagonalWeights>)> {
    let positive = |k: usize, what: &str| {
        if k == 0 {
            Err(Error::BadParameter(format!("{what} must be at least 1")))
        } else {
            Ok(())
        }
    };
    Ok(match model {
        NamedModel::IndepSet => (WeightMatrix::from_i64(&[&[1, 1], &[1, 0]]), None),
        NamedModel::WeightedIndepSet => (WeightMatrix::from_i64(&[&[1, 2], &[2, 0]]), None),
        NamedModel::Coloring(k) => {
            positive(*k, "number of colours")?;
            let m = constant_diagonal(*k, BigInt::zero(), BigInt::one());
            (WeightMatrix::from_matrix(m), None)
        }
        NamedModel::Euler => (WeightMatrix::from_i64(&[&[1, -1], &[-1, 1]]), None),
        NamedModel::EvenSubgraph => (WeightMatrix::from_i64(&[&[1, 1], &[1, -1]]), None),
        NamedModel::MaxCut => (WeightMatrix::from_matrix(x_matrix(Poly::one(), Poly::x())), None),
        NamedModel::TutteMatrix { n, r, s } => {
            positive(*n, "matrix size")?;
            (WeightMatrix::from_matrix(constant_diagonal(*n, r.clone(), s.clone())), None)
        }
        NamedModel::Flow(k) => {
            positive(*k, "flow modulus")?;
            let a = flow_matrix(*k);
            let d = vec![BigRational::new(BigInt::one(), BigInt::from(*k)); *k];
            (WeightMatrix::from_matrix(a), Some(DiagonalWeights::from_vec(d)))
        }
        NamedModel::Ising => (WeightMatrix::from_matrix(x_matrix(Poly::x(), Poly::one())), None),
        NamedModel::Potts { n, v } => {
            positive(*n, "number of states")?;
            let a = constant_diagonal(*n, v + BigRational::one(), BigRational::one());
            (WeightMatrix::from_matrix(a), None)
        }
    })
}

/// `A(k, k-1, -1)`.
pub fn flow_matrix(k: usize) -> Matrix<BigRational> {
    let k1 = BigRational::from_integer(BigInt::from(k) - 1);
    constant_diagonal(k, k1, -BigRational::one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    IndependentSets,
    /// Independent sets `S` weighted by `2^(edges leaving S)`.
    WeightedIndependentSets,
    ProperColorings(usize),
    EvenInducedSubgraphs,
    NowhereZeroFlows(usize),
    OrderedMaxCuts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantCount {
    Count(BigInt),
    /// Largest cut weight and the number of `sigma: V -> [2]` attaining it.
    MaxCut { weight: usize, count: BigInt },
}

fn subsets(n: usize, budget: u64) -> Result<u64> {
    check_budget(2, n, budget)
}

fn edges_within(g: &Multigraph, mask: u64) -> usize {
    g.edges()
        .filter(|&(u, v, _)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .map(|(_, _, m)| m)
        .sum()
}

fn edges_leaving(g: &Multigraph, mask: u64) -> usize {
    g.edges()
        .filter(|&(u, v, _)| (mask >> u & 1) != (mask >> v & 1))
        .map(|(_, _, m)| m)
        .sum()
}

/// Counts by direct enumeration of the defining objects.
pub fn count_invariant(kind: InvariantKind, g: &Multigraph, budget: u64) -> Result<InvariantCount> {
    let n = g.vertex_count();
    let count = |pred: &dyn Fn(u64) -> bool| -> Result<BigInt> {
        let total = subsets(n, budget)?;
        Ok(BigInt::from((0..total).filter(|&m| pred(m)).count()))
    };
    Ok(match kind {
        InvariantKind::IndependentSets => InvariantCount::Count(count(&|s| edges_within(g, s) == 0)?),
        InvariantKind::WeightedIndependentSets => {
            let total = subsets(n, budget)?;
            let sum: BigInt = (0..total)
                .filter(|&s| edges_within(g, s) == 0)
                .map(|s| BigInt::one() << edges_leaving(g, s))
                .sum();
            InvariantCount::Count(sum)
        }
        InvariantKind::EvenInducedSubgraphs => InvariantCount::Count(count(&|s| edges_within(g, s) % 2 == 0)?),
        InvariantKind::ProperColorings(k) => InvariantCount::Count(proper_colorings(g, k, budget)?),
        InvariantKind::NowhereZeroFlows(k) => InvariantCount::Count(nowhere_zero_flows(g, k, budget)?),
        InvariantKind::OrderedMaxCuts => {
            let total = subsets(n, budget)?;
            let mut best = 0;
            let mut hits = BigInt::zero();
            for s in 0..total {
                let w = edges_leaving(g, s);
                if w > best {
                    best = w;
                    hits = BigInt::zero();
                }
                if w == best {
                    hits += 1;
                }
            }
            InvariantCount::MaxCut { weight: best, count: hits }
        }
    })
}

fn proper_colorings(g: &Multigraph, k: usize, budget: u64) -> Result<BigInt> {
    let n = g.vertex_count();
    check_budget(k, n, budget)?;
    if g.has_loops() {
        return Ok(BigInt::zero());
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let mut colour = vec![0usize; n];
    let mut found = 0u64;
    // Odometer over all colourings, filtered afterwards.
    loop {
        if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
            found += 1;
        }
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(BigInt::from(if k == 0 && n > 0 { 0 } else { found }))
}

/// Nowhere-zero `Z_k`-flows of a simple graph: every edge `u < v` carries a
/// nonzero value `f(u, v)`, `f(v, u) = -f(u, v)`, and the values leaving each
/// vertex sum to zero.
fn nowhere_zero_flows(g: &Multigraph, k: usize, budget: u64) -> Result<BigInt> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if k == 0 {
        return Err(Error::BadParameter("flow modulus must be at least 1".into()));
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let m = edges.len();
    if k == 1 {
        return Ok(BigInt::from(u8::from(m == 0)));
    }
    check_budget(k - 1, m, budget)?;
    let mut value = vec![1usize; m];
    let mut found = 0u64;
    loop {
        let mut net = vec![0usize; g.vertex_count()];
        for (&(u, v), &f) in edges.iter().zip(&value) {
            net[u] = (net[u] + f) % k;
            net[v] = (net[v] + k - f) % k;
        }
        if net.iter().all(|&x| x == 0) {
            found += 1;
        }
        let mut i = 0;
        while i < m {
            value[i] += 1;
            if value[i] < k {
                break;
            }
            value[i] = 1;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    Ok(BigInt::from(found))
}

fn union_find_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut q = n;
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            q -= 1;
        }
    }
    q
}

fn rpow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), e.unsigned_abs() as usize)
    }
}

/// `T(G; x, y)` by the subset expansion over edge occurrences.
pub fn tutte_eval_brute(g: &Multigraph, x: &BigRational, y: &BigRational, budget: u64) -> Result<BigRational> {
    let edges = g.edge_list();
    let total = check_budget(2, edges.len(), budget)?;
    let n = g.vertex_count() as i64;
    let q_all = g.component_count() as i64;
    let (x1, y1) = (x - BigRational::one(), y - BigRational::one());
    let mut sum = BigRational::zero();
    for mask in 0..total {
        let chosen = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let f = mask.count_ones() as i64;
        let q = union_find_components(g.vertex_count(), chosen) as i64;
        sum += rpow(&x1, q - q_all) * rpow(&y1, f - n + q);
    }
    Ok(sum)
}

/// `T(G; x, y)` by the contraction-deletion recursion, as a cross-check.
pub fn tutte_contraction_deletion(g: &Multigraph, x: &BigRational, y: &BigRational) -> BigRational {
    let Some((u, v, _)) = g.edges().next() else {
        return BigRational::one();
    };
    let rest = g.delete_edge(u, v).expect("edge exists");
    if u == v {
        y * tutte_contraction_deletion(&rest, x, y)
    } else if g.is_bridge(u, v) {
        x * tutte_contraction_deletion(&rest, x, y)
    } else {
        let contracted = g.contract_edge(u, v).expect("edge exists");
        tutte_contraction_deletion(&rest, x, y) + tutte_contraction_deletion(&contracted, x, y)
    }
}

/// Both sides of `T(G;x,y) = (y-1)^(Q-N) n^(-Q) Z_{A(n,y,1)}(G)` with
/// `n = (x-1)(y-1)`.
pub fn tutte_identity_sides(
    g: &Multigraph,
    x: &BigRational,
    y: &BigRational,
    budget: u64,
) -> Result<(BigRational, BigRational)> {
    let n = (x - BigRational::one()) * (y - BigRational::one());
    let spins = match (n.is_integer() && n.is_positive()).then(|| n.to_integer().to_usize()).flatten() {
        Some(s) => s,
        None => return Err(Error::BadParameter(format!("(x-1)(y-1) = {n} is not a positive integer"))),
    };
    let lhs = tutte_eval_brute(g, x, y, budget)?;
    let a = constant_diagonal(spins, y.clone(), BigRational::one());
    let z = z_brute(&a, None, &Pinning::new(), g, budget)?;
    let q = g.component_count() as i64;
    let big_n = g.vertex_count() as i64;
    let rhs = rpow(&(y - BigRational::one()), q - big_n) * rpow(&n, -q) * z;
    Ok((lhs, rhs))
}

pub fn verify_tutte_identity(g: &Multigraph, x: &BigRational, y: &BigRational, budget: u64) -> Result<bool> {
    let (l, r) = tutte_identity_sides(g, x, y, budget)?;
    Ok(l == r)
}

/// `sum_sigma prod_{uv in E} (1 + v [sigma(u) = sigma(v)])`.
pub fn potts_partition(g: &Multigraph, n: usize, v: &BigRational, budget: u64) -> Result<BigRational> {
    let vertices = g.vertex_count();
    let total = check_budget(n, vertices, budget)?;
    let edges: Vec<(usize, usize, usize)> = g.edges().collect();
    let one_plus_v = v + BigRational::one();
    let mut sum = BigRational::zero();
    let mut sigma = vec![0usize; vertices];
    for _ in 0..total {
        let same: usize = edges.iter().filter(|&&(a, b, _)| sigma[a] == sigma[b]).map(|&(_, _, m)| m).sum();
        sum += num_traits::pow(one_plus_v.clone(), same);
        for s in sigma.iter_mut() {
            *s += 1;
            if *s < n {
                break;
            }
            *s = 0;
        }
    }
    Ok(sum)
}

/// `Z_{[[X,1],[1,X]]}(G)` over `Q[X]`.
pub fn ising_polynomial(g: &Multigraph, budget: u64) -> Result<Poly> {
    z_brute(&x_matrix(Poly::x(), Poly::one()), None, &Pinning::new(), g, budget)
}

/// The flow count through partition functions: `(k^-N Z_{A(k,k-1,-1)}(G),
/// Z_{A,D}(G))` with `D = diag(1/k)`.
pub fn flow_partition_values(g: &Multigraph, k: usize, budget: u64) -> Result<(BigRational, BigRational)> {
    if k == 0 {
        return Err(Error::BadParameter("flow modulus must be at least 1".into()));
    }
    let a = flow_matrix(k);
    let plain = z_brute(&a, None, &Pinning::new(), g, budget)?;
    let kq = BigRational::from_integer(BigInt::from(k));
    let scaled = plain * rpow(&kq, -(g.vertex_count() as i64));
    let d = vec![kq.recip(); k];
    let weighted = z_brute(&a, Some(&d), &Pinning::new(), g, budget)?;
    Ok((scaled, weighted))
}

/// Result of the `invariant` command: a partition-function value next to
/// its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub z: String,
    pub oracle: String,
    pub agree: bool,
}

impl InvariantReport {
    fn of<T: PartialEq + ToString>(z: T, oracle: T) -> Self {
        InvariantReport {
            agree: z == oracle,
            z: z.to_string(),
            oracle: oracle.to_string(),
        }
    }
}

/// Names accepted by [`invariant_report`], with their parameter lists.
pub const INVARIANT_NAMES: &[(&str, &str)] = &[
    ("independent-sets", ""),
    ("weighted-independent-sets", ""),
    ("colorings", "k"),
    ("euler", ""),
    ("even-subgraphs", ""),
    ("max-cut", ""),
    ("flows", "k"),
    ("tutte", "x,y"),
    ("potts", "n,v"),
    ("ising", "v"),
];

fn param_usize(params: &[BigRational], i: usize, name: &str) -> Result<usize> {
    let p = params
        .get(i)
        .ok_or_else(|| Error::BadParameter(format!("missing parameter {name}")))?;
    if !p.is_integer() || p.is_negative() {
        return Err(Error::BadParameter(format!("{name} = {p} is not a non-negative integer")));
    }
    p.to_integer()
        .to_usize()
        .ok_or_else(|| Error::BadParameter(format!("{name} = {p} is too large")))
}

fn param(params: &[BigRational], i: usize, name: &str) -> Result<BigRational> {
    params
        .get(i)
        .cloned()
        .ok_or_else(|| Error::BadParameter(format!("missing parameter {name}")))
}

fn count_of(c: InvariantCount) -> BigInt {
    match c {
        InvariantCount::Count(c) => c,
        InvariantCount::MaxCut { count, .. } => count,
    }
}

/// Evaluates the named model on `g` and its oracle.
pub fn invariant_report(name: &str, params: &[BigRational], g: &Multigraph, budget: u64) -> Result<InvariantReport> {
    let z_int = |model: NamedModel| -> Result<BigInt> {
        let (a, _) = matrix_of(&model)?;
        let a = a.as_int().expect("integer model").clone();
        z_brute(&a, None, &Pinning::new(), g, budget)
    };
    let oracle = |kind| count_invariant(kind, g, budget).map(count_of);
    Ok(match name {
        "independent-sets" => InvariantReport::of(z_int(NamedModel::IndepSet)?, oracle(InvariantKind::IndependentSets)?),
        "weighted-independent-sets" => InvariantReport::of(
            z_int(NamedModel::WeightedIndepSet)?,
            oracle(InvariantKind::WeightedIndependentSets)?,
        ),
        "colorings" => {
            let k = param_usize(params, 0, "k")?;
            InvariantReport::of(z_int(NamedModel::Coloring(k))?, oracle(InvariantKind::ProperColorings(k))?)
        }
        "euler" => {
            let even = g.degrees().iter().all(|d| d % 2 == 0);
            let expected = if even { BigInt::one() << g.vertex_count() } else { BigInt::zero() };
            InvariantReport::of(z_int(NamedModel::Euler)?, expected)
        }
        "even-subgraphs" => {
            let z = z_int(NamedModel::EvenSubgraph)?;
            let n = g.vertex_count();
            // (1/2) Z_B + 2^(N-1), kept exact for N = 0.
            let value = BigRational::new(z + (BigInt::one() << n), BigInt::from(2));
            let count = BigRational::from_integer(oracle(InvariantKind::EvenInducedSubgraphs)?);
            InvariantReport::of(value, count)
        }
        "max-cut" => {
            let (a, _) = matrix_of(&NamedModel::MaxCut)?;
            let z = z_brute(a.as_poly().expect("polynomial model"), None, &Pinning::new(), g, budget)?;
            let InvariantCount::MaxCut { weight, count } = count_invariant(InvariantKind::OrderedMaxCuts, g, budget)?
            else {
                unreachable!("max-cut oracle")
            };
            let leading = Poly::monomial(BigRational::from_integer(count), weight);
            let lead_of_z = z
                .degree()
                .map(|d| Poly::monomial(z.leading_coefficient().unwrap().clone(), d))
                .unwrap_or_else(Poly::zero);
            InvariantReport {
                agree: lead_of_z == leading,
                z: z.to_string(),
                oracle: leading.to_string(),
            }
        }
        "flows" => {
            let k = param_usize(params, 0, "k")?;
            let (scaled, weighted) = flow_partition_values(g, k, budget)?;
            let count = BigRational::from_integer(oracle(InvariantKind::NowhereZeroFlows(k))?);
            InvariantReport {
                agree: scaled == count && weighted == count,
                z: weighted.to_string(),
                oracle: count.to_string(),
            }
        }
        "tutte" => {
            let (x, y) = (param(params, 0, "x")?, param(params, 1, "y")?);
            let (t, via_z) = tutte_identity_sides(g, &x, &y, budget)?;
            InvariantReport::of(via_z, t)
        }
        "potts" => {
            let n = param_usize(params, 0, "n")?;
            let v = param(params, 1, "v")?;
            let (a, _) = matrix_of(&NamedModel::Potts { n, v: v.clone() })?;
            let z = z_brute(a.as_rat().expect("rational model"), None, &Pinning::new(), g, budget)?;
            InvariantReport::of(z, potts_partition(g, n, &v, budget)?)
        }
        "ising" => {
            let v = param(params, 0, "v")?;
            let z = ising_polynomial(g, budget)?.eval(&(&v + BigRational::one()));
            InvariantReport::of(z, potts_partition(g, 2, &v, budget)?)
        }
        other => return Err(Error::BadParameter(format!("unknown invariant {other}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::z;
    use crate::rings::{int, rat};
    use crate::testutil::{multigraph, simple_graph};
    use proptest::prelude::*;

    const BUDGET: u64 = 10_000_000;

    fn zi(model: NamedModel, g: &Multigraph) -> BigInt {
        let (a, _) = matrix_of(&model).unwrap();
        z(a.as_int().unwrap(), g).unwrap()
    }

    fn count(kind: InvariantKind, g: &Multigraph) -> BigInt {
        count_of(count_invariant(kind, g, BUDGET).unwrap())
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(matrix_of(&NamedModel::IndepSet).unwrap().0, WeightMatrix::from_i64(&[&[1, 1], &[1, 0]]));
        let (c, d) = matrix_of(&NamedModel::MaxCut).unwrap();
        assert!(d.is_none());
        assert_eq!(c.as_poly().unwrap().get(0, 1), &Poly::x());
        assert_eq!(c.as_poly().unwrap().get(1, 1), &Poly::one());
        let (f, d) = matrix_of(&NamedModel::Flow(2)).unwrap();
        assert_eq!(f.as_rat().unwrap(), &Matrix::from_rows(vec![vec![rat(1, 1), rat(-1, 1)], vec![rat(-1, 1), rat(1, 1)]]).unwrap());
        assert_eq!(d.unwrap().to_scalars::<BigRational>().unwrap(), vec![rat(1, 2), rat(1, 2)]);
        assert!(matrix_of(&NamedModel::Coloring(0)).is_err());
        assert!(matrix_of(&NamedModel::Potts { n: 0, v: rat(1, 1) }).is_err());
    }

    #[test]
    fn worked_values() {
        assert_eq!(zi(NamedModel::IndepSet, &Multigraph::path(3)), int(5));
        assert_eq!(zi(NamedModel::Coloring(3), &Multigraph::complete(3)), int(6));
        assert_eq!(zi(NamedModel::Euler, &Multigraph::cycle(3)), int(8));
        assert_eq!(zi(NamedModel::Euler, &Multigraph::path(2)), int(0));
        assert_eq!(zi(NamedModel::EvenSubgraph, &Multigraph::path(2)), int(2));
        let (c, _) = matrix_of(&NamedModel::MaxCut).unwrap();
        assert_eq!(z(c.as_poly().unwrap(), &Multigraph::path(2)).unwrap(), Poly::from_integers([2, 2]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count(InvariantKind::IndependentSets, &Multigraph::path(3)), int(5));
        assert_eq!(count(InvariantKind::ProperColorings(3), &Multigraph::complete(3)), int(6));
        assert_eq!(count(InvariantKind::NowhereZeroFlows(2), &Multigraph::path(2)), int(0));
        assert_eq!(count(InvariantKind::NowhereZeroFlows(3), &Multigraph::cycle(3)), int(2));
        assert_eq!(count(InvariantKind::NowhereZeroFlows(2), &Multigraph::complete(4)), int(0));
        assert_eq!(
            count_invariant(InvariantKind::OrderedMaxCuts, &Multigraph::complete(3), BUDGET).unwrap(),
            InvariantCount::MaxCut { weight: 2, count: int(6) }
        );
        assert_eq!(
            count_invariant(InvariantKind::NowhereZeroFlows(2), &Multigraph::single_loop(), BUDGET),
            Err(Error::NotSimple)
        );
        assert!(matches!(
            count_invariant(InvariantKind::IndependentSets, &Multigraph::empty(40), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn tutte_examples() {
        let two = rat(2, 1);
        assert_eq!(tutte_eval_brute(&Multigraph::path(2), &two, &two, BUDGET).unwrap(), two);
        assert_eq!(tutte_eval_brute(&Multigraph::single_loop(), &two, &two, BUDGET).unwrap(), two);
        assert_eq!(tutte_eval_brute(&Multigraph::empty(3), &rat(7, 3), &two, BUDGET).unwrap(), rat(1, 1));
        // T(K3) = x^2 + x + y.
        assert_eq!(tutte_eval_brute(&Multigraph::complete(3), &rat(3, 1), &two, BUDGET).unwrap(), rat(14, 1));
        // 0^0 = 1 at x = 1: T(K2; 1, y) = 1.
        assert_eq!(tutte_eval_brute(&Multigraph::path(2), &rat(1, 1), &two, BUDGET).unwrap(), rat(1, 1));

        assert!(verify_tutte_identity(&Multigraph::path(2), &two, &two, BUDGET).unwrap());
        assert!(verify_tutte_identity(&Multigraph::complete(3), &rat(3, 1), &two, BUDGET).unwrap());
        assert!(verify_tutte_identity(&Multigraph::empty(2), &rat(5, 1), &rat(3, 2), BUDGET).unwrap());
        assert!(matches!(
            verify_tutte_identity(&Multigraph::path(2), &rat(3, 2), &two, BUDGET),
            Err(Error::BadParameter(_))
        ));
        assert!(verify_tutte_identity(&Multigraph::path(2), &rat(3, 2), &rat(3, 1), BUDGET).unwrap());
    }

    #[test]
    fn potts_examples() {
        assert_eq!(potts_partition(&Multigraph::path(2), 2, &rat(1, 1), BUDGET).unwrap(), rat(6, 1));
        assert_eq!(potts_partition(&Multigraph::complete(3), 3, &rat(0, 1), BUDGET).unwrap(), rat(27, 1));
        assert_eq!(potts_partition(&Multigraph::path(2), 1, &rat(1, 1), BUDGET).unwrap(), rat(2, 1));
    }

    #[test]
    fn report_examples() {
        let r = invariant_report("independent-sets", &[], &Multigraph::path(3), BUDGET).unwrap();
        assert_eq!(r, InvariantReport { z: "5".into(), oracle: "5".into(), agree: true });
        let m = invariant_report("max-cut", &[], &Multigraph::complete(3), BUDGET).unwrap();
        assert!(m.agree);
        for (name, params) in INVARIANT_NAMES {
            let args: Vec<BigRational> = match *params {
                "" => vec![],
                "k" => vec![rat(3, 1)],
                "x,y" => vec![rat(3, 1), rat(2, 1)],
                "n,v" => vec![rat(3, 1), rat(-1, 2)],
                _ => vec![rat(1, 3)],
            };
            let r = invariant_report(name, &args, &Multigraph::cycle(4), BUDGET).unwrap();
            assert!(r.agree, "{name}: {r:?}");
        }
        assert!(invariant_report("colorings", &[], &Multigraph::path(2), BUDGET).is_err());
        assert!(invariant_report("nope", &[], &Multigraph::path(2), BUDGET).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn independent_sets(g in multigraph(6, 8)) {
            prop_assert_eq!(zi(NamedModel::IndepSet, &g), count(InvariantKind::IndependentSets, &g));
            prop_assert_eq!(zi(NamedModel::WeightedIndepSet, &g), count(InvariantKind::WeightedIndependentSets, &g));
        }

        #[test]
        fn colorings(g in multigraph(5, 7), k in 2usize..=3) {
            prop_assert_eq!(zi(NamedModel::Coloring(k), &g), count(InvariantKind::ProperColorings(k), &g));
        }

        #[test]
        fn euler(g in multigraph(6, 8)) {
            let even = g.degrees().iter().all(|d| d % 2 == 0);
            let expected = if even { BigInt::one() << g.vertex_count() } else { BigInt::zero() };
            prop_assert_eq!(zi(NamedModel::Euler, &g), expected);
        }

        #[test]
        fn even_subgraphs(g in multigraph(5, 7)) {
            let lhs = zi(NamedModel::EvenSubgraph, &g) + (BigInt::one() << g.vertex_count());
            prop_assert_eq!(lhs, count(InvariantKind::EvenInducedSubgraphs, &g) * 2);
        }

        #[test]
        fn max_cut(g in multigraph(5, 7)) {
            prop_assume!(g.edge_count() > 0);
            let (c, _) = matrix_of(&NamedModel::MaxCut).unwrap();
            let p = z(c.as_poly().unwrap(), &g).unwrap();
            let InvariantCount::MaxCut { weight, count } =
                count_invariant(InvariantKind::OrderedMaxCuts, &g, BUDGET).unwrap() else { unreachable!() };
            prop_assert_eq!(p.degree(), Some(weight));
            prop_assert_eq!(p.leading_coefficient().unwrap(), &BigRational::from_integer(count));
        }

        #[test]
        fn flows(g in simple_graph(5), k in 2usize..=3) {
            let (scaled, weighted) = flow_partition_values(&g, k, BUDGET).unwrap();
            let c = BigRational::from_integer(count(InvariantKind::NowhereZeroFlows(k), &g));
            prop_assert_eq!(&scaled, &c);
            prop_assert_eq!(&weighted, &c);
        }

        #[test]
        fn tutte_subset_vs_recursion(g in multigraph(5, 7), x in -2i64..=4, y in -2i64..=4) {
            let (x, y) = (rat(x, 1), rat(y, 1));
            prop_assert_eq!(tutte_eval_brute(&g, &x, &y, BUDGET).unwrap(), tutte_contraction_deletion(&g, &x, &y));
        }

        #[test]
        fn tutte_identity(g in multigraph(5, 7), which in 0usize..4) {
            let (x, y) = [(2, 2), (3, 2), (2, 3), (5, 2)][which];
            prop_assert!(verify_tutte_identity(&g, &rat(x, 1), &rat(y, 1), BUDGET).unwrap());
        }

        #[test]
        fn potts_and_ising(g in multigraph(4, 6), n in 1usize..=3, which in 0usize..3) {
            let v = [rat(0, 1), rat(1, 1), rat(-1, 2)][which].clone();
            let a = constant_diagonal(n, &v + BigRational::one(), BigRational::one());
            prop_assert_eq!(potts_partition(&g, n, &v, BUDGET).unwrap(), z(&a, &g).unwrap());
            let ising = ising_polynomial(&g, BUDGET).unwrap().eval(&(&v + BigRational::one()));
            prop_assert_eq!(ising, potts_partition(&g, 2, &v, BUDGET).unwrap());
        }
    }
}
