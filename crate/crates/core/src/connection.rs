//! Finite principal submatrices of connection matrices, with exact PSD and
//! rank tests.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::evaluator::z_brute;
use crate::graph::{glue, LabeledGraph, Multigraph, Pinning};
use crate::rings::{linalg, Matrix, Scalar};
use crate::tagged::WeightMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBasis {
    pub k: usize,
    pub graphs: Vec<LabeledGraph>,
}

impl GraphBasis {
    pub fn new(k: usize, graphs: Vec<LabeledGraph>) -> Result<Self> {
        if let Some(g) = graphs.iter().find(|g| g.arity() != k) {
            return Err(Error::LabelMismatch(k, g.arity()));
        }
        Ok(GraphBasis { k, graphs })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// The basis restricted to the given positions.
    pub fn select(&self, idx: &[usize]) -> GraphBasis {
        GraphBasis {
            k: self.k,
            graphs: idx.iter().map(|&i| self.graphs[i].clone()).collect(),
        }
    }
}

/// Calls `f` on every multiset of at most `max_edges` vertex pairs over
/// `0..n`, loops included, in lexicographic order of pair index sequences.
fn for_each_edge_multiset(n: usize, max_edges: usize, f: &mut dyn FnMut(&[(usize, usize)])) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        f: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        f(cur);
        if left == 0 {
            return;
        }
        for i in start..pairs.len() {
            cur.push(pairs[i]);
            rec(pairs, i, left - 1, cur, f);
            cur.pop();
        }
    }
    rec(&pairs, 0, max_edges, &mut Vec::new(), f);
}

/// All multigraphs on `k..=max_vertices` vertices with at most `max_edges`
/// edges, the first `k` vertices labeled in order.
///
/// Graphs are listed by vertex count, then edge count, then edge sequence.
/// Of two graphs related by a permutation of the unlabeled vertices only the
/// first is kept.
pub fn enumerate_klabeled(k: usize, max_vertices: usize, max_edges: usize) -> Result<GraphBasis> {
    if k > max_vertices {
        return Err(Error::BadParameter(format!("{k} labels on at most {max_vertices} vertices")));
    }
    if max_vertices > 6 || max_edges > 6 {
        return Err(Error::TooLarge(format!(
            "basis with {max_vertices} vertices and {max_edges} edges; the limits are 6 and 6"
        )));
    }
    let mut graphs = Vec::new();
    for n in k..=max_vertices {
        let mut found: Vec<Multigraph> = Vec::new();
        for_each_edge_multiset(n, max_edges, &mut |edges| {
            found.push(Multigraph::from_edges(n, edges).expect("pairs in range"));
        });
        found.sort_by_key(|g| g.edge_count());
        let mut seen = HashSet::new();
        for g in found {
            if seen.insert(g.canonical_form(k)) {
                graphs.push(LabeledGraph::with_prefix_labels(g, k)?);
            }
        }
    }
    Ok(GraphBasis { k, graphs })
}

/// `entries[i][j] = f(G_i . G_j)`, evaluated once per unordered pair.
pub fn gram_of<S: Clone>(basis: &GraphBasis, f: &mut dyn FnMut(&Multigraph) -> Result<S>) -> Result<Matrix<S>> {
    let n = basis.len();
    let mut rows: Vec<Vec<Option<S>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i..n {
            let glued = glue(&basis.graphs[i], &basis.graphs[j])?;
            let v = f(glued.graph())?;
            rows[j][i] = Some(v.clone());
            rows[i][j] = Some(v);
        }
    }
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect()).collect())
}

/// Precomputed gluings of a basis for building connection matrices of many
/// weight matrices over one basis.
///
/// Each glued graph is split into connected components, and components are
/// grouped by isomorphism class, so every class is evaluated once per weight
/// matrix and entries are products over components.
#[derive(Debug, Clone)]
pub struct GluePlan {
    basis: GraphBasis,
    components: Vec<Multigraph>,
    products: Vec<Vec<usize>>,
    index: Vec<Vec<usize>>,
}

impl GluePlan {
    pub fn new(basis: &GraphBasis) -> Result<Self> {
        let n = basis.len();
        let mut component_ids: HashMap<Multigraph, usize> = HashMap::new();
        let mut product_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut components = Vec::new();
        let mut products = Vec::new();
        let mut index = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let glued = glue(&basis.graphs[i], &basis.graphs[j])?;
                let mut factors: Vec<usize> = glued
                    .graph()
                    .components()
                    .into_iter()
                    .map(|(_, c)| {
                        let canon = c.canonical_form(0);
                        *component_ids.entry(canon.clone()).or_insert_with(|| {
                            components.push(canon);
                            components.len() - 1
                        })
                    })
                    .collect();
                factors.sort_unstable();
                let p = *product_ids.entry(factors.clone()).or_insert_with(|| {
                    products.push(factors);
                    products.len() - 1
                });
                index[i][j] = p;
                index[j][i] = p;
            }
        }
        Ok(GluePlan {
            basis: basis.clone(),
            components,
            products,
            index,
        })
    }

    pub fn basis(&self) -> &GraphBasis {
        &self.basis
    }

    /// Connected glued components, up to isomorphism.
    pub fn components(&self) -> &[Multigraph] {
        &self.components
    }

    /// Entries from precomputed `Z_A` values of [`GluePlan::components`].
    pub fn matrix_from<S: Scalar>(&self, component_values: &[S]) -> Matrix<S> {
        let values: Vec<S> = self
            .products
            .iter()
            .map(|f| f.iter().fold(S::one(), |acc, &c| acc * component_values[c].clone()))
            .collect();
        let n = self.basis.len();
        Matrix::from_fn(n, n, |i, j| values[self.index[i][j]].clone())
    }

    pub fn matrix<S: Scalar>(&self, a: &Matrix<S>, budget: u64) -> Result<Matrix<S>> {
        a.ensure_symmetric()?;
        let values = self
            .components
            .iter()
            .map(|g| z_brute(a, None, &Pinning::new(), g, budget))
            .collect::<Result<Vec<S>>>()?;
        Ok(self.matrix_from(&values))
    }
}

/// Several plans evaluating each component class once across all of them.
#[derive(Debug, Clone)]
pub struct PlanSet {
    plans: Vec<GluePlan>,
    components: Vec<Multigraph>,
    // maps[p][c]: position in `components` of component c of plan p
    maps: Vec<Vec<usize>>,
}

impl PlanSet {
    pub fn new(plans: Vec<GluePlan>) -> Self {
        let mut ids: HashMap<Multigraph, usize> = HashMap::new();
        let mut components = Vec::new();
        let maps = plans
            .iter()
            .map(|plan| {
                plan.components()
                    .iter()
                    .map(|c| {
                        *ids.entry(c.clone()).or_insert_with(|| {
                            components.push(c.clone());
                            components.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        PlanSet { plans, components, maps }
    }

    pub fn plans(&self) -> &[GluePlan] {
        &self.plans
    }

    /// One matrix per plan.
    pub fn matrices<S: Scalar>(&self, a: &Matrix<S>, budget: u64) -> Result<Vec<Matrix<S>>> {
        a.ensure_symmetric()?;
        let values = self
            .components
            .iter()
            .map(|g| z_brute(a, None, &Pinning::new(), g, budget))
            .collect::<Result<Vec<S>>>()?;
        Ok(self
            .plans
            .iter()
            .zip(&self.maps)
            .map(|(plan, map)| plan.matrix_from(&map.iter().map(|&i| values[i].clone()).collect::<Vec<_>>()))
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionMatrix {
    pub basis: GraphBasis,
    pub entries: Matrix<BigRational>,
}

impl ConnectionMatrix {
    pub fn rank(&self) -> usize {
        symmetric_rank(&self.entries).expect("connection matrices are symmetric")
    }

    pub fn is_psd(&self) -> bool {
        is_psd(&self.entries).expect("connection matrices are symmetric")
    }

    /// `(psd, rank)` with a single elimination when the matrix is PSD.
    pub fn psd_and_rank(&self) -> (bool, usize) {
        match psd_rank(&self.entries).expect("connection matrices are symmetric") {
            Some(r) => (true, r),
            None => (false, self.rank()),
        }
    }

    /// JSON report; `n` is the dimension of the weight matrix.
    pub fn report(&self, n: usize) -> Value {
        let (psd, rank) = self.psd_and_rank();
        let bound = BigInt::from(n).pow(self.basis.k as u32);
        json!({
            "k": self.basis.k,
            "basis": self.basis.graphs.iter().map(describe).collect::<Vec<_>>(),
            "entries": (0..self.entries.rows())
                .map(|i| self.entries.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "psd": psd,
            "rank": rank,
            "bound": bound.to_string(),
            "rank_within_bound": BigInt::from(rank) <= bound,
        })
    }
}

fn describe(g: &LabeledGraph) -> Value {
    json!({
        "vertices": g.graph().vertex_count(),
        "edges": g.graph().edges().map(|(u, v, m)| json!([u, v, m])).collect::<Vec<_>>(),
        "labels": g.labels(),
    })
}

/// `M(Z_A, k)` restricted to `basis`.
pub fn connection_matrix(a: &WeightMatrix, basis: &GraphBasis, budget: u64) -> Result<ConnectionMatrix> {
    let entries = match a {
        WeightMatrix::Int(m) => connection_entries(m, basis, budget)?.map(|x| BigRational::from_integer(x.clone())),
        WeightMatrix::Rat(m) => connection_entries(m, basis, budget)?,
        WeightMatrix::Poly(_) => return Err(Error::RingUnsupported(a.kind())),
    };
    Ok(ConnectionMatrix {
        basis: basis.clone(),
        entries,
    })
}

pub fn connection_entries<S: Scalar>(a: &Matrix<S>, basis: &GraphBasis, budget: u64) -> Result<Matrix<S>> {
    a.ensure_symmetric()?;
    gram_of(basis, &mut |g| z_brute(a, None, &Pinning::new(), g, budget))
}

/// Exact positive-semidefiniteness.
///
/// The matrix is scaled to integers and eliminated symmetrically, always
/// pivoting on a positive diagonal entry. Each step divides exactly by the
/// previous pivot, so the surviving entries are principal-minor multiples of
/// the Schur complement with the same signs.
pub fn is_psd(m: &Matrix<BigRational>) -> Result<bool> {
    Ok(psd_rank(m)?.is_some())
}

/// `Some(rank)` if `m` is PSD, `None` otherwise.
pub fn psd_rank(m: &Matrix<BigRational>) -> Result<Option<usize>> {
    m.ensure_symmetric()?;
    let mut a = reduce_proportional(integer_rows(m));
    Ok(psd_integer(&mut a))
}

/// [`psd_rank`] for an integer matrix.
pub fn psd_rank_integer(m: &Matrix<BigInt>) -> Result<Option<usize>> {
    m.ensure_symmetric()?;
    let mut a = reduce_proportional(m.to_rows());
    Ok(psd_integer(&mut a))
}

/// Exact rank of a symmetric rational matrix.
pub fn symmetric_rank(m: &Matrix<BigRational>) -> Result<usize> {
    m.ensure_symmetric()?;
    let a = reduce_proportional(integer_rows(m));
    Ok(linalg::rank(&Matrix::from_rows(a)?))
}

pub fn integer_rows(m: &Matrix<BigRational>) -> Vec<Vec<BigInt>> {
    if m.entries().all(|x| x.is_integer()) {
        return (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.numer().clone()).collect()).collect();
    }
    let lcm = m.entries().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
        .collect()
}

/// Keeps one row and column out of each family of rows that are
/// non-negative multiples of each other.
///
/// If row `j` is `c` times row `r` with `c >= 0`, symmetry gives
/// `M = C M[R,R] C^T` where `C` has full column rank, so the principal
/// submatrix on the kept indices `R` has the same rank and is PSD exactly
/// when `M` is.
pub fn reduce_proportional(a: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let keep = match to_machine(&a) {
        Some(small) => kept_rows(&small, 0i128),
        None => kept_rows(&a, BigInt::zero()),
    };
    keep.iter().map(|&i| keep.iter().map(|&j| a[i][j].clone()).collect()).collect()
}

fn to_machine(a: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    a.iter()
        .map(|row| row.iter().map(|x| i64::try_from(x).ok().map(i128::from)).collect())
        .collect()
}

fn kept_rows<T>(a: &[Vec<T>], zero: T) -> Vec<usize>
where
    T: Integer + Clone + std::hash::Hash,
    for<'x> &'x T: std::ops::Div<&'x T, Output = T>,
{
    let mut seen: HashSet<Vec<T>> = HashSet::new();
    let mut keep = Vec::new();
    for (i, row) in a.iter().enumerate() {
        let g = row.iter().fold(zero.clone(), |g, x| g.gcd(x));
        let primitive: Vec<T> = if g.is_zero() { row.clone() } else { row.iter().map(|x| x / &g).collect() };
        if seen.insert(primitive) {
            keep.push(i);
        }
    }
    keep
}

/// Symmetric Bareiss elimination state: entries, indices not yet pivoted
/// on, previous pivot, pivots so far.
struct Elimination<T> {
    a: Vec<Vec<T>>,
    active: Vec<usize>,
    prev: T,
    pivots: usize,
}

enum Step {
    Done(Option<usize>),
    Continue,
}

impl<T: Clone + Zero> Elimination<T> {
    /// Chooses the next pivot, or decides the outcome.
    fn next_pivot(&mut self, negative: impl Fn(&T) -> bool, positive: impl Fn(&T) -> bool) -> std::result::Result<usize, Step> {
        let a = &self.a;
        if self.active.iter().any(|&i| negative(&a[i][i])) {
            return Err(Step::Done(None));
        }
        match self.active.iter().position(|&i| positive(&a[i][i])) {
            Some(pos) => Ok(self.active.swap_remove(pos)),
            None => {
                let zero = self.active.iter().all(|&i| self.active.iter().all(|&j| a[i][j].is_zero()));
                Err(Step::Done(zero.then_some(self.pivots)))
            }
        }
    }
}

fn eliminate_machine(e: &mut Elimination<i128>) -> Option<Step> {
    let p = match e.next_pivot(|x| *x < 0, |x| *x > 0) {
        Ok(p) => p,
        Err(step) => return Some(step),
    };
    let app = e.a[p][p];
    let mut updated = Vec::with_capacity(e.active.len() * e.active.len() / 2);
    for &i in &e.active {
        for &j in &e.active {
            if j < i {
                continue;
            }
            let num = app.checked_mul(e.a[i][j])?.checked_sub(e.a[i][p].checked_mul(e.a[p][j])?)?;
            updated.push((i, j, num / e.prev));
        }
    }
    for (i, j, v) in updated {
        e.a[i][j] = v;
        e.a[j][i] = v;
    }
    e.prev = app;
    e.pivots += 1;
    Some(Step::Continue)
}

fn eliminate_big(e: &mut Elimination<BigInt>) -> Step {
    let p = match e.next_pivot(BigInt::is_negative, BigInt::is_positive) {
        Ok(p) => p,
        Err(step) => return step,
    };
    let app = e.a[p][p].clone();
    for ii in 0..e.active.len() {
        for jj in ii..e.active.len() {
            let (i, j) = (e.active[ii], e.active[jj]);
            let v = (&app * &e.a[i][j] - &e.a[i][p] * &e.a[p][j]) / &e.prev;
            e.a[j][i] = v.clone();
            e.a[i][j] = v;
        }
    }
    e.prev = app;
    e.pivots += 1;
    Step::Continue
}

/// Runs in `i128` while the minors fit, then continues exactly in `BigInt`
/// from the last completed step.
fn psd_integer(a: &mut [Vec<BigInt>]) -> Option<usize> {
    let n = a.len();
    let mut big = match to_machine(a) {
        Some(small) => {
            let mut e = Elimination { a: small, active: (0..n).collect(), prev: 1i128, pivots: 0 };
            loop {
                let snapshot = (e.active.clone(), e.pivots);
                match eliminate_machine(&mut e) {
                    Some(Step::Done(result)) => return result,
                    Some(Step::Continue) => {}
                    None => {
                        // Overflow mid-step: nothing was written, but the pivot was taken.
                        e.active = snapshot.0;
                        break Elimination {
                            a: e.a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
                            active: e.active,
                            prev: BigInt::from(e.prev),
                            pivots: e.pivots,
                        };
                    }
                }
            }
        }
        None => Elimination { a: a.to_vec(), active: (0..n).collect(), prev: BigInt::one(), pivots: 0 },
    };
    loop {
        if let Step::Done(result) = eliminate_big(&mut big) {
            return result;
        }
    }
}

/// `rank(M) <= n^k`.
pub fn rank_bound_check(m: &ConnectionMatrix, n: usize, k: usize) -> bool {
    rank_within(m.psd_and_rank().1, n, k)
}

pub fn rank_within(rank: usize, n: usize, k: usize) -> bool {
    BigInt::from(rank) <= BigInt::from(n).pow(k as u32)
}

/// Searches for a principal submatrix of `f`'s connection matrix on `basis`
/// that is not PSD: first all 1x1 and 2x2 ones, then the whole matrix.
/// Returns the chosen basis positions and that submatrix.
pub fn find_non_psd(
    basis: &GraphBasis,
    f: &mut dyn FnMut(&Multigraph) -> Result<BigInt>,
) -> Result<Option<(Vec<usize>, Matrix<BigInt>)>> {
    let full = gram_of(basis, f)?;
    let rational = |idx: &[usize]| {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| BigRational::from_integer(full.get(idx[i], idx[j]).clone()))
    };
    let n = basis.len();
    for i in 0..n {
        for j in i..n {
            let idx = if i == j { vec![i] } else { vec![i, j] };
            if !is_psd(&rational(&idx))? {
                let sub = Matrix::from_fn(idx.len(), idx.len(), |a, b| full.get(idx[a], idx[b]).clone());
                return Ok(Some((idx, sub)));
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    if !is_psd(&rational(&all))? {
        return Ok(Some((all, full)));
    }
    Ok(None)
}
