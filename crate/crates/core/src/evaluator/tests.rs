use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::graph::{Hypergraph, Multigraph, Pinning};
use crate::rings::{int, rat, Matrix, Poly};
use crate::testutil::{int_matrix, multigraph, pinning, symmetric_int};

const BUDGET: u64 = 1_000_000;

/// Oracle: odometer over all maps, product over the flat edge list.
fn naive<S: Scalar>(a: &Matrix<S>, g: &Multigraph) -> S {
    let n = g.vertex_count();
    let m = a.rows();
    let mut sigma = vec![0; n];
    let mut total = S::zero();
    loop {
        let w = g
            .edge_list()
            .iter()
            .fold(S::one(), |w, &(u, v)| w * a.get(sigma[u], sigma[v]).clone());
        total = total + w;
        let mut i = 0;
        while i < n {
            sigma[i] += 1;
            if sigma[i] < m {
                break;
            }
            sigma[i] = 0;
            i += 1;
        }
        if i == n {
            return total;
        }
    }
}

fn max_cut() -> Matrix<Poly> {
    Matrix::from_rows(vec![vec![Poly::one(), Poly::x()], vec![Poly::x(), Poly::one()]]).unwrap()
}

fn indep() -> Matrix<BigInt> {
    int_matrix(&[&[1, 1], &[1, 0]])
}

#[test]
fn config_weight_examples() {
    let id: Matrix<BigInt> = Matrix::identity(2);
    let k2 = Multigraph::path(2);
    let none = Pinning::new();
    assert_eq!(config_weight(&id, None, &none, &k2, &[0, 0]).unwrap(), int(1));
    let k3 = int_matrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
    assert_eq!(config_weight(&k3, None, &none, &k2, &[0, 0]).unwrap(), int(0));
    assert_eq!(config_weight(&max_cut(), None, &none, &k2, &[0, 1]).unwrap(), Poly::x());
    let pin = Pinning::from_pairs(&[(0, 1)]);
    assert_eq!(config_weight(&id, None, &pin, &k2, &[0, 0]), Err(Error::PinningConflict(0)));
    assert!(matches!(config_weight(&id, None, &none, &k2, &[0]), Err(Error::DimensionMismatch(_))));
}

#[test]
fn pinned_vertices_carry_no_vertex_weight() {
    let id: Matrix<BigInt> = Matrix::identity(2);
    let d = [int(5), int(7)];
    let k1 = Multigraph::empty(1);
    let pin = Pinning::from_pairs(&[(0, 1)]);
    assert_eq!(config_weight(&id, Some(&d), &pin, &k1, &[1]).unwrap(), int(1));
    assert_eq!(z_brute(&id, Some(&d), &pin, &k1, BUDGET).unwrap(), int(1));
    assert_eq!(z_brute(&id, Some(&d), &Pinning::new(), &k1, BUDGET).unwrap(), int(12));
}

#[test]
fn z_brute_examples() {
    assert_eq!(z(&indep(), &Multigraph::path(3)).unwrap(), int(5));
    let k3 = int_matrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
    assert_eq!(z(&k3, &Multigraph::complete(3)).unwrap(), int(6));
    let u = int_matrix(&[&[1, -1], &[-1, 1]]);
    assert_eq!(z(&u, &Multigraph::cycle(3)).unwrap(), int(8));
    assert_eq!(z(&u, &Multigraph::empty(0)).unwrap(), int(1));
}

#[test]
fn budget_is_enforced_before_enumeration() {
    let g = Multigraph::empty(30);
    let err = z_brute(&indep(), None, &Pinning::new(), &g, BUDGET).unwrap_err();
    assert_eq!(
        err,
        Error::BudgetExceeded {
            needed: "1073741824".into(),
            budget: BUDGET
        }
    );
    // Pinning all but a few vertices brings it back within budget.
    let pairs: Vec<_> = (0..25).map(|v| (v, 0)).collect();
    let pinned = z_brute(&indep(), None, &Pinning::from_pairs(&pairs), &g, BUDGET).unwrap();
    assert_eq!(pinned, int(32));
}

#[test]
fn mismatched_inputs_are_rejected() {
    let g = Multigraph::path(2);
    let pin = Pinning::from_pairs(&[(0, 2)]);
    assert!(matches!(z_brute(&indep(), None, &pin, &g, BUDGET), Err(Error::DimensionMismatch(_))));
    let d = [int(1)];
    assert!(matches!(z_brute(&indep(), Some(&d), &Pinning::new(), &g, BUDGET), Err(Error::DimensionMismatch(_))));
    let asym = int_matrix(&[&[0, 1], &[0, 0]]);
    assert_eq!(z(&asym, &g), Err(Error::NotSymmetric));
}

#[test]
fn directed_examples() {
    let a = int_matrix(&[&[0, 1], &[0, 0]]);
    let e = DirectedGraph::from_edges(2, &[(0, 1)]).unwrap();
    assert_eq!(z_directed(&a, &e, BUDGET).unwrap(), int(1));
    let back = DirectedGraph::from_edges(2, &[(1, 0)]).unwrap();
    assert_eq!(z_directed(&a, &back, BUDGET).unwrap(), int(1));
    let path = DirectedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(z_directed(&a, &path, BUDGET).unwrap(), int(0));
    assert_eq!(z_directed(&a, &DirectedGraph::new(0), BUDGET).unwrap(), int(1));
}

#[test]
fn hypergraph_examples() {
    let k2 = int_matrix(&[&[0, 1], &[1, 0]]);
    let t = SymmetricTensor::from_fn(2, 2, |i| k2.get(i[0], i[1]).clone()).unwrap();
    let mut h = Hypergraph::new(2, 2).unwrap();
    h.add_edge(&[0, 1]).unwrap();
    assert_eq!(z_hypergraph(&t, &h, BUDGET).unwrap(), int(2));

    let ones = SymmetricTensor::from_fn(2, 3, |_| int(1)).unwrap();
    let mut h3 = Hypergraph::new(3, 3).unwrap();
    h3.add_edge(&[0, 1, 2]).unwrap();
    assert_eq!(z_hypergraph(&ones, &h3, BUDGET).unwrap(), int(8));
    assert_eq!(z_hypergraph(&ones, &Hypergraph::new(4, 3).unwrap(), BUDGET).unwrap(), int(16));
    assert!(matches!(z_hypergraph(&ones, &h, BUDGET), Err(Error::ArityMismatch { .. })));
    assert_eq!(
        SymmetricTensor::new(2, 2, vec![int(0), int(1), int(0), int(0)]),
        Err(Error::AsymmetricTensor)
    );
}

#[test]
fn edge_model_counts_perfect_matchings() {
    let f: EdgeModel<BigInt> = EdgeModel::perfect_matchings(4);
    assert_eq!(z_edge_model(&f, &Multigraph::path(2), BUDGET).unwrap(), int(1));
    assert_eq!(z_edge_model(&f, &Multigraph::path(3), BUDGET).unwrap(), int(0));
    assert_eq!(z_edge_model(&f, &Multigraph::cycle(4), BUDGET).unwrap(), int(2));
    assert_eq!(z_edge_model(&f, &Multigraph::complete(4), BUDGET).unwrap(), int(3));
    assert_eq!(z_edge_model(&f, &Multigraph::empty(0), BUDGET).unwrap(), int(1));
    assert_eq!(z_edge_model(&f, &Multigraph::empty(1), BUDGET).unwrap(), int(0));
    let small: EdgeModel<BigInt> = EdgeModel::perfect_matchings(1);
    assert!(z_edge_model(&small, &Multigraph::path(3), BUDGET).is_err());
}

#[test]
fn potential_weight_examples() {
    let k2 = Multigraph::path(2);
    assert_eq!(potential_weights(&indep(), &k2), vec![int(0), int(1)]);
    assert_eq!(potential_weights(&max_cut(), &k2), vec![Poly::one(), Poly::x()]);
    assert_eq!(potential_weights(&indep(), &Multigraph::empty(3)), vec![int(1)]);
    let j = int_matrix(&[&[1, 2], &[2, 0]]);
    assert_eq!(potential_weights(&j, &Multigraph::path(3)), vec![int(0), int(1), int(2), int(4)]);
}

#[test]
fn count_config_examples() {
    let k2 = Multigraph::path(2);
    let none = Pinning::new();
    assert_eq!(count_configs(&indep(), &k2, &none, &int(1), BUDGET).unwrap(), BigInt::from(3));
    assert_eq!(count_configs(&indep(), &k2, &none, &int(0), BUDGET).unwrap(), BigInt::from(1));
    assert_eq!(count_configs(&indep(), &k2, &none, &int(7), BUDGET).unwrap(), BigInt::zero());
    // Zero-weight prefixes are counted with their completions.
    let p4 = Multigraph::path(4);
    let total: BigInt = weight_histogram(&indep(), &p4, &none, BUDGET).unwrap().into_iter().map(|(_, c)| c).sum();
    assert_eq!(total, BigInt::from(16));
}

#[test]
fn tagged_front_end_promotes() {
    let a = WeightMatrix::from_i64(&[&[1, -1], &[-1, 1]]);
    let d = DiagonalWeights::Rat(vec![rat(1, 2), rat(1, 2)]);
    // The flow count of a triangle for k = 2 is 1.
    let v = z_value(&a, Some(&d), &Pinning::new(), &Multigraph::cycle(3), BUDGET).unwrap();
    assert_eq!(v, RingValue::Rat(BigRational::one()));
}

fn edges_between(g: &Multigraph, inside: &[bool]) -> (usize, usize) {
    let (mut within, mut across) = (0, 0);
    for (u, v, m) in g.edges() {
        match (inside[u], inside[v]) {
            (true, true) => within += m,
            (true, false) | (false, true) => across += m,
            _ => {}
        }
    }
    (within, across)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |s| (0..n).map(|i| s >> i & 1 == 1).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_naive_enumeration(a in symmetric_int(3, -2, 3), g in multigraph(4, 6)) {
        prop_assert_eq!(z(&a, &g).unwrap(), naive(&a, &g));
    }

    #[test]
    fn multiplicative_over_disjoint_union(a in symmetric_int(3, -2, 3), g in multigraph(4, 4), h in multigraph(4, 4)) {
        prop_assert_eq!(z(&a, &g.disjoint_union(&h)).unwrap(), z(&a, &g).unwrap() * z(&a, &h).unwrap());
    }

    #[test]
    fn tensor_product_multiplies(a in symmetric_int(2, -2, 2), b in symmetric_int(2, -2, 2), g in multigraph(4, 5)) {
        prop_assert_eq!(z(&a.tensor(&b), &g).unwrap(), z(&a, &g).unwrap() * z(&b, &g).unwrap());
    }

    #[test]
    fn weighted_independent_sets(g in multigraph(5, 7)) {
        let j = int_matrix(&[&[1, 2], &[2, 0]]);
        let n = g.vertex_count();
        // Spin 1 marks the independent set S; each S-to-rest edge weighs 2.
        let oracle: BigInt = subsets(n)
            .map(|s| edges_between(&g, &s))
            .filter(|&(within, _)| within == 0)
            .map(|(_, across)| BigInt::from(2).pow(across as u32))
            .sum();
        prop_assert_eq!(z(&j, &g).unwrap(), oracle);
    }

    #[test]
    fn even_induced_subgraphs(g in multigraph(5, 7)) {
        let b = int_matrix(&[&[1, 1], &[1, -1]]);
        let n = g.vertex_count();
        let even = subsets(n).filter(|s| edges_between(&g, s).0 % 2 == 0).count();
        let lhs = BigRational::from_integer(z(&b, &g).unwrap()) / BigRational::from_integer(int(2))
            + BigRational::new(int(1) << n, int(2));
        prop_assert_eq!(lhs, BigRational::from_integer(BigInt::from(even)));
    }

    #[test]
    fn sum_over_weight_classes(a in symmetric_int(3, 0, 3), g in multigraph(4, 5), seed in pinning(4, 3)) {
        let pin = Pinning::from_pairs(&seed.iter().filter(|&(v, s)| v < g.vertex_count() && s < a.rows()).collect::<Vec<_>>());
        let total = z_brute(&a, None, &pin, &g, BUDGET).unwrap();
        let mut recombined = BigInt::zero();
        for w in potential_weights(&a, &g) {
            recombined += &w * count_configs(&a, &g, &pin, &w, BUDGET).unwrap();
        }
        prop_assert_eq!(total, recombined);
    }

    #[test]
    fn symmetric_directed_equals_undirected(a in symmetric_int(3, -1, 2), es in prop::collection::vec((0usize..4, 0usize..4), 0..6)) {
        let d = DirectedGraph::from_edges(4, &es).unwrap();
        prop_assert_eq!(z_directed(&a, &d, BUDGET).unwrap(), z(&a, &d.underlying()).unwrap());
    }

    #[test]
    fn binary_tensor_matches_matrix(a in symmetric_int(3, -1, 2), g in crate::testutil::simple_graph(4)) {
        let t = SymmetricTensor::from_fn(a.rows(), 2, |i| a.get(i[0], i[1]).clone()).unwrap();
        let mut h = Hypergraph::new(g.vertex_count(), 2).unwrap();
        for (u, v, _) in g.edges() {
            h.add_edge(&[u, v]).unwrap();
        }
        prop_assert_eq!(z_hypergraph(&t, &h, BUDGET).unwrap(), z(&a, &g).unwrap());
    }
}

#[test]
fn overflowing_machine_arithmetic_falls_back() {
    let big = BigInt::from(1u64 << 40);
    let a = Matrix::from_rows(vec![vec![big.clone(), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(0)]]).unwrap();
    let g = Multigraph::complete(4);
    // All-zero-spin configuration alone contributes 2^240.
    let expected: BigInt = (0..1u32 << 4)
        .map(|mask| {
            let sigma: Vec<usize> = (0..4).map(|v| (mask >> v & 1) as usize).collect();
            config_weight(&a, None, &Pinning::new(), &g, &sigma).unwrap()
        })
        .sum();
    assert!(expected > BigInt::from(i128::MAX));
    assert_eq!(z(&a, &g).unwrap(), expected);
    let huge = Matrix::from_rows(vec![vec![BigInt::from(u64::MAX)]]).unwrap();
    assert_eq!(z(&huge, &Multigraph::path(2)).unwrap(), BigInt::from(u64::MAX));
}
