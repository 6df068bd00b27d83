//! Shared proptest strategies for unit tests.

use num_bigint::BigInt;
use proptest::prelude::*;

use crate::graph::{Multigraph, Pinning};
use crate::rings::{Matrix, Poly};

/// Multigraph with loops and parallel edges.
pub fn multigraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges)
            .prop_map(move |es| Multigraph::from_edges(n, &es).unwrap())
    })
}

pub fn simple_graph(max_vertices: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let es: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Multigraph::from_edges(n, &es).unwrap()
        })
    })
}

pub fn symmetric_int(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<BigInt>> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(lo..=hi, n * (n + 1) / 2).prop_map(move |v| symmetric_from_upper(n, &v))
    })
}

pub fn symmetric_from_upper(n: usize, upper: &[i64]) -> Matrix<BigInt> {
    let mut m = Matrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            m.set(i, j, BigInt::from(upper[k]));
            m.set(j, i, BigInt::from(upper[k]));
            k += 1;
        }
    }
    m
}

/// Symmetric matrices whose entries are small polynomials with
/// non-negative integer coefficients.
pub fn symmetric_poly(max_dim: usize) -> impl Strategy<Value = Matrix<Poly>> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0i64..=2, 0..=2), n * (n + 1) / 2).prop_map(move |v| {
            let mut m = Matrix::zeros(n, n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    let p = Poly::from_integers(v[k].clone());
                    m.set(i, j, p.clone());
                    m.set(j, i, p);
                    k += 1;
                }
            }
            m
        })
    })
}

/// A pinning of some vertices of an `n`-vertex graph into `m` spins.
pub fn pinning(n: usize, m: usize) -> impl Strategy<Value = Pinning> {
    prop::collection::vec(prop::option::of(0..m), n).prop_map(|slots| {
        let pairs: Vec<(usize, usize)> = slots.iter().enumerate().filter_map(|(v, s)| s.map(|s| (v, s))).collect();
        Pinning::from_pairs(&pairs)
    })
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_i64(rows)
}
