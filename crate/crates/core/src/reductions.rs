//! Matrix transformations paired with graph constructions, and recovery of
//! configuration counts from evaluation oracles by interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::evaluator::potential_weights;
use crate::graph::{Multigraph, Pinning};
use crate::rings::{vandermonde_solve, Matrix, Poly, RingKind, RingValue, Scalar};
use crate::tagged::{DiagonalWeights, WeightMatrix};
use crate::with_matrix;

fn positive(p: usize) -> Result<u32> {
    match u32::try_from(p) {
        Ok(p) if p >= 1 => Ok(p),
        _ => Err(Error::BadParameter(format!("exponent {p} must be a positive 32-bit integer"))),
    }
}

/// `A^(p)`: every entry raised to the `p`-th power.
pub fn thicken_matrix<S: Scalar>(a: &Matrix<S>, p: usize) -> Result<Matrix<S>> {
    let p = positive(p)?;
    Ok(a.map(|x| x.pow(p)))
}

/// `A^p`, the ordinary matrix power.
pub fn stretch_matrix<S: Scalar>(a: &Matrix<S>, p: usize) -> Result<Matrix<S>> {
    let p = positive(p)?;
    a.pow(p)
}

pub fn matrix_thicken(a: &WeightMatrix, p: usize) -> Result<WeightMatrix> {
    with_matrix!(a, m => thicken_matrix(m, p).map(WeightMatrix::from_matrix))
}

pub fn matrix_stretch(a: &WeightMatrix, p: usize) -> Result<WeightMatrix> {
    with_matrix!(a, m => stretch_matrix(m, p).map(WeightMatrix::from_matrix))
}

/// The twin resolvent of a matrix together with the class map and summed
/// vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twins<S> {
    pub resolvent: Matrix<S>,
    pub weights: Vec<S>,
    /// `tau[i]` is the class of row `i`.
    pub tau: Vec<usize>,
}

impl<S: Scalar> Twins<S> {
    /// `tau . phi`.
    pub fn map_pinning(&self, phi: &Pinning) -> Pinning {
        phi.map_spins(&self.tau)
    }
}

/// Groups equal rows in order of first occurrence. Missing vertex weights
/// count as 1 each, so the summed weights are the class sizes.
pub fn twins<S: Scalar>(a: &Matrix<S>, d: Option<&[S]>) -> Result<Twins<S>> {
    a.ensure_symmetric()?;
    let m = a.rows();
    if let Some(d) = d {
        if d.len() != m {
            return Err(Error::DimensionMismatch(format!("{} vertex weights for {m} rows", d.len())));
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut tau = vec![0; m];
    for i in 0..m {
        match reps.iter().position(|&r| a.row(r) == a.row(i)) {
            Some(c) => tau[i] = c,
            None => {
                tau[i] = reps.len();
                reps.push(i);
            }
        }
    }
    let mut weights = vec![S::zero(); reps.len()];
    for i in 0..m {
        let w = d.map_or_else(S::one, |d| d[i].clone());
        let acc = std::mem::replace(&mut weights[tau[i]], S::zero());
        weights[tau[i]] = acc + w;
    }
    Ok(Twins {
        resolvent: a.submatrix(&reps, &reps),
        weights,
        tau,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinResolution {
    pub resolvent: WeightMatrix,
    pub weights: DiagonalWeights,
    pub tau: Vec<usize>,
}

pub fn twin_resolvent(a: &WeightMatrix, d: Option<&DiagonalWeights>) -> Result<TwinResolution> {
    let (a, d) = crate::tagged::unify(a, d)?;
    with_matrix!(&a, m => {
        let d = d.as_ref().map(DiagonalWeights::to_scalars).transpose()?;
        let t = twins(m, d.as_deref())?;
        Ok(TwinResolution {
            resolvent: WeightMatrix::from_matrix(t.resolvent),
            weights: DiagonalWeights::from_vec(t.weights),
            tau: t.tau,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Modulus {
    Prime(BigInt),
    /// The monomial `X`, for polynomial matrices.
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeMode {
    /// `a |-> p^(v_p(a))` on nonzero entries.
    Filter,
    /// Entries divisible by `p` become zero.
    Eliminate,
}

fn is_prime(p: &BigInt) -> bool {
    if p < &BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// `p`-adic valuation of a nonzero integer.
fn valuation(a: &BigInt, p: &BigInt) -> usize {
    let mut a = a.clone();
    let mut k = 0;
    loop {
        let (q, r) = a.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        a = q;
        k += 1;
    }
}

pub fn prime_transform_int(a: &Matrix<BigInt>, p: &BigInt, mode: PrimeMode) -> Result<Matrix<BigInt>> {
    if !is_prime(p) {
        return Err(Error::UnsupportedModulus(p.to_string()));
    }
    Ok(a.map(|x| {
        if x.is_zero() {
            return BigInt::zero();
        }
        match mode {
            PrimeMode::Filter => num_traits::pow(p.clone(), valuation(x, p)),
            PrimeMode::Eliminate if (x % p).is_zero() => BigInt::zero(),
            PrimeMode::Eliminate => x.clone(),
        }
    }))
}

pub fn prime_transform_poly(a: &Matrix<Poly>, mode: PrimeMode) -> Matrix<Poly> {
    a.map(|x| match (x.x_valuation(), mode) {
        (None, _) => Poly::zero(),
        (Some(k), PrimeMode::Filter) => Poly::monomial(BigRational::one(), k),
        (Some(0), PrimeMode::Eliminate) => x.clone(),
        (Some(_), PrimeMode::Eliminate) => Poly::zero(),
    })
}

pub fn prime_transform(a: &WeightMatrix, p: &Modulus, mode: PrimeMode) -> Result<WeightMatrix> {
    match (a, p) {
        (WeightMatrix::Int(m), Modulus::Prime(p)) => Ok(WeightMatrix::Int(prime_transform_int(m, p, mode)?)),
        (WeightMatrix::Poly(m), Modulus::X) => Ok(WeightMatrix::Poly(prime_transform_poly(m, mode))),
        (_, Modulus::Prime(p)) => Err(Error::UnsupportedModulus(format!("{p} over the {} ring", a.kind()))),
        (_, Modulus::X) => Err(Error::UnsupportedModulus(format!("X over the {} ring", a.kind()))),
    }
}

/// Substitutes `q` for `X` in a matrix whose nonzero entries are powers of
/// `X`.
pub fn rename(a: &Matrix<Poly>, q: &Poly) -> Result<Matrix<Poly>> {
    a.try_map(|x| {
        if x.is_zero() {
            return Ok(Poly::zero());
        }
        match x.as_x_power() {
            Some(l) => Ok(q.pow(l as u32)),
            None => Err(Error::NotPowerMatrix),
        }
    })
}

/// `Z_A(phi, G)` as returned by an evaluation oracle.
pub type ZOracle<'a> = dyn FnMut(&Pinning, &Multigraph) -> Result<RingValue> + 'a;

/// Searches `a = 1, 2, ...` up to `bound` for a point at which the weights
/// are pairwise distinct and nonzero.
pub fn separating_point(weights: &[Poly], bound: u64) -> Result<BigRational> {
    for a in 1..=bound {
        let a = BigRational::from_integer(BigInt::from(a));
        let values: Vec<BigRational> = weights.iter().map(|w| w.eval(&a)).collect();
        let distinct = (0..values.len()).all(|i| values[i + 1..].iter().all(|v| v != &values[i]));
        if distinct && values.iter().all(|v| !v.is_zero()) {
            return Ok(a);
        }
    }
    Err(Error::DegeneratePoint(bound.to_string()))
}

/// `C(|W|+1, 2) * (1 + max deg w)` for the nonzero weights `W`.
pub fn point_bound(weights: &[Poly]) -> u64 {
    let w = weights.len() as u64;
    let delta = 1 + weights.iter().filter_map(Poly::degree).max().unwrap_or(0) as u64;
    (w + 1) * w / 2 * delta
}

/// `N_A(G, phi, w)` for every potential weight `w`, from the values
/// `Z_A(phi, G^(t))` for `t = 1..=|nonzero weights|`.
pub fn recover_counts(
    oracle: &mut ZOracle<'_>,
    a: &WeightMatrix,
    g: &Multigraph,
    phi: &Pinning,
) -> Result<Vec<(RingValue, BigInt)>> {
    with_matrix!(a, m => recover_generic(oracle, m, g, phi))
}

fn recover_generic<S: Scalar>(
    oracle: &mut ZOracle<'_>,
    a: &Matrix<S>,
    g: &Multigraph,
    phi: &Pinning,
) -> Result<Vec<(RingValue, BigInt)>> {
    let spins = a.rows();
    let slots = phi.to_slots(g.vertex_count(), spins)?;
    let free = slots.iter().filter(|s| s.is_none()).count();
    let total = num_traits::pow(BigInt::from(spins), free);
    let weights = potential_weights(a, g);
    let nonzero: Vec<S> = weights.iter().filter(|w| !w.is_zero()).cloned().collect();

    // Interpolation nodes and the matching evaluation of each oracle answer.
    let point = match S::KIND {
        RingKind::Poly if !nonzero.is_empty() => {
            let polys: Vec<Poly> = nonzero.iter().map(|w| Poly::from_value(w.clone().into_value())).collect::<Result<_>>()?;
            Some(separating_point(&polys, point_bound(&polys))?)
        }
        _ => None,
    };
    let at = |v: RingValue| -> Result<BigRational> {
        let v = S::from_value(v).map_err(|e| Error::OracleFailure(format!("oracle returned a foreign value: {e}")))?;
        Ok(match &point {
            Some(p) => v.evaluate_at(p),
            None => v.evaluate_at(&BigRational::zero()),
        })
    };
    let nodes: Vec<BigRational> = nonzero
        .iter()
        .map(|w| match &point {
            Some(p) => w.evaluate_at(p),
            None => w.evaluate_at(&BigRational::zero()),
        })
        .collect();
    let mut values = Vec::with_capacity(nodes.len());
    for t in 1..=nodes.len() {
        let gt = g.thicken(t)?;
        values.push(at(oracle(phi, &gt)?)?);
    }
    let solved = if nodes.is_empty() { Vec::new() } else { vandermonde_solve(&nodes, &values)? };

    let mut counts: Vec<BigInt> = Vec::with_capacity(solved.len());
    for c in solved {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::OracleFailure(format!("recovered count {c} is not a non-negative integer")));
        }
        counts.push(c.to_integer());
    }
    let nonzero_total: BigInt = counts.iter().sum();
    if nonzero_total > total {
        return Err(Error::OracleFailure(format!("{nonzero_total} configurations out of {total}")));
    }
    let mut out = Vec::with_capacity(weights.len());
    let mut it = counts.into_iter();
    for w in weights {
        let c = if w.is_zero() { &total - &nonzero_total } else { it.next().expect("one count per nonzero weight") };
        out.push((w.into_value(), c));
    }
    Ok(out)
}

/// An oracle backed by brute-force evaluation of `a`.
pub fn brute_oracle(a: &WeightMatrix, budget: u64) -> impl FnMut(&Pinning, &Multigraph) -> Result<RingValue> + '_ {
    move |phi, g| crate::evaluator::z_value(a, None, phi, g, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::{count_configs, weight_histogram, z, z_brute};
    use crate::rings::{int, rat};
    use crate::testutil::{int_matrix, multigraph, pinning, symmetric_int, symmetric_poly};
    use proptest::prelude::*;

    const BUDGET: u64 = 10_000_000;

    fn poly_matrix(rows: &[&[Poly]]) -> Matrix<Poly> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn thicken_and_stretch_examples() {
        let a = WeightMatrix::from_i64(&[&[1, 2], &[2, 0]]);
        assert_eq!(matrix_thicken(&a, 2).unwrap(), WeightMatrix::from_i64(&[&[1, 4], &[4, 0]]));
        assert_eq!(matrix_thicken(&a, 1).unwrap(), a);
        assert!(matrix_thicken(&a, 0).is_err());
        let x = Poly::x();
        let ising = poly_matrix(&[&[x.clone(), Poly::one()], &[Poly::one(), x.clone()]]);
        let x3 = x.pow(3);
        assert_eq!(thicken_matrix(&ising, 3).unwrap(), poly_matrix(&[&[x3.clone(), Poly::one()], &[Poly::one(), x3]]));

        assert_eq!(
            matrix_stretch(&WeightMatrix::from_i64(&[&[0, 1], &[1, 0]]), 2).unwrap(),
            WeightMatrix::from_i64(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(matrix_stretch(&a, 1).unwrap(), a);
        assert_eq!(
            matrix_stretch(&WeightMatrix::from_i64(&[&[1, 1], &[1, 1]]), 2).unwrap(),
            WeightMatrix::from_i64(&[&[2, 2], &[2, 2]])
        );
    }

    #[test]
    fn twin_examples() {
        let t = twins(&int_matrix(&[&[1, 1], &[1, 1]]), None).unwrap();
        assert_eq!(t.resolvent, int_matrix(&[&[1]]));
        assert_eq!(t.weights, vec![int(2)]);
        assert_eq!(t.tau, vec![0, 0]);
        assert_eq!(z(&int_matrix(&[&[1, 1], &[1, 1]]), &Multigraph::path(2)).unwrap(), int(4));
        assert_eq!(
            z_brute(&t.resolvent, Some(&t.weights), &Pinning::new(), &Multigraph::path(2), BUDGET).unwrap(),
            int(4)
        );

        let free = int_matrix(&[&[1, 2], &[2, 0]]);
        let t = twins(&free, Some(&[int(3), int(5)])).unwrap();
        assert_eq!(t.resolvent, free);
        assert_eq!(t.weights, vec![int(3), int(5)]);
        assert_eq!(t.tau, vec![0, 1]);

        let r = twin_resolvent(&WeightMatrix::from_i64(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]), None).unwrap();
        assert_eq!(r.resolvent, WeightMatrix::from_i64(&[&[1, 0], &[0, 1]]));
        assert_eq!(r.weights, DiagonalWeights::from_vec(vec![int(2), int(1)]));

        assert_eq!(twins(&int_matrix(&[&[1, 2], &[3, 4]]), None), Err(Error::NotSymmetric));
    }

    #[test]
    fn prime_examples() {
        let a = WeightMatrix::from_i64(&[&[1, 6], &[6, 4]]);
        let two = Modulus::Prime(int(2));
        assert_eq!(prime_transform(&a, &two, PrimeMode::Filter).unwrap(), WeightMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(prime_transform(&a, &two, PrimeMode::Eliminate).unwrap(), WeightMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(matches!(prime_transform(&a, &Modulus::Prime(int(4)), PrimeMode::Filter), Err(Error::UnsupportedModulus(_))));
        assert!(matches!(prime_transform(&a, &Modulus::X, PrimeMode::Filter), Err(Error::UnsupportedModulus(_))));

        let x = Poly::x();
        let x2x = Poly::from_integers([0, 1, 1]);
        let p = poly_matrix(&[&[Poly::one(), x2x.clone()], &[x2x, x.pow(3)]]);
        let filtered = prime_transform(&WeightMatrix::Poly(p), &Modulus::X, PrimeMode::Filter).unwrap();
        assert_eq!(filtered, WeightMatrix::Poly(poly_matrix(&[&[Poly::one(), x.clone()], &[x.clone(), x.pow(3)]])));
    }

    #[test]
    fn rename_examples() {
        let x = Poly::x();
        let c = poly_matrix(&[&[Poly::one(), x.clone()], &[x.clone(), Poly::one()]]);
        let two = Poly::from_integers([2]);
        assert_eq!(rename(&c, &two).unwrap(), poly_matrix(&[&[Poly::one(), two.clone()], &[two, Poly::one()]]));
        let sq = poly_matrix(&[&[x.pow(2), Poly::one()], &[Poly::one(), x.pow(2)]]);
        let x1 = Poly::from_integers([1, 1]);
        assert_eq!(
            rename(&sq, &x1).unwrap(),
            poly_matrix(&[&[x1.pow(2), Poly::one()], &[Poly::one(), x1.pow(2)]])
        );
        assert_eq!(rename(&sq, &x).unwrap(), sq);
        let bad = poly_matrix(&[&[Poly::from_integers([1, 1])]]);
        assert_eq!(rename(&bad, &x), Err(Error::NotPowerMatrix));
    }

    #[test]
    fn recover_examples() {
        let i = WeightMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        let k2 = Multigraph::path(2);
        let got = recover_counts(&mut brute_oracle(&i, BUDGET), &i, &k2, &Pinning::new()).unwrap();
        assert!(got.contains(&(RingValue::Int(int(1)), int(3))));
        assert!(got.contains(&(RingValue::Int(int(0)), int(1))));

        let (c, _) = crate::models::matrix_of(&crate::models::NamedModel::MaxCut).unwrap();
        let got = recover_counts(&mut brute_oracle(&c, BUDGET), &c, &k2, &Pinning::new()).unwrap();
        assert_eq!(
            got,
            vec![(RingValue::Poly(Poly::one()), int(2)), (RingValue::Poly(Poly::x()), int(2))]
        );
        let weights = [Poly::one(), Poly::x()];
        assert_eq!(separating_point(&weights, point_bound(&weights)).unwrap(), rat(2, 1));

        let empty = Multigraph::empty(3);
        let got = recover_counts(&mut brute_oracle(&i, BUDGET), &i, &empty, &Pinning::from_pairs(&[(0, 1)])).unwrap();
        assert_eq!(got, vec![(RingValue::Int(int(1)), int(4))]);

        // A lying oracle is caught.
        let mut liar = |_: &Pinning, _: &Multigraph| Ok(RingValue::Int(int(-7)));
        assert!(matches!(recover_counts(&mut liar, &i, &k2, &Pinning::new()), Err(Error::OracleFailure(_))));
    }

    #[test]
    fn degenerate_points_are_reported() {
        // X and X^2 agree at 1 and X - X^2 has no other positive root; with
        // the bound forced to 1 no point exists.
        assert!(matches!(separating_point(&[Poly::x(), Poly::x().pow(2)], 1), Err(Error::DegeneratePoint(_))));
    }

    fn x_power_matrix(max: usize) -> impl Strategy<Value = Matrix<Poly>> {
        (1usize..=3).prop_flat_map(move |n| {
            prop::collection::vec(prop::option::weighted(0.8, 0..=max), n * (n + 1) / 2).prop_map(move |v| {
                let mut it = v.into_iter();
                let mut m = Matrix::from_fn(n, n, |_, _| Poly::zero());
                for i in 0..n {
                    for j in i..n {
                        let e = it.next().unwrap().map_or_else(Poly::zero, |k| Poly::x().pow(k as u32));
                        m.set(i, j, e.clone());
                        m.set(j, i, e);
                    }
                }
                m
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn thickening_identity(a in symmetric_int(3, -1, 3), g in multigraph(4, 5), p in 1usize..=3, phi in pinning(4, 3)) {
            prop_assume!(phi.iter().all(|(v, s)| v < g.vertex_count() && s < a.rows()));
            let lhs = z_brute(&thicken_matrix(&a, p).unwrap(), None, &phi, &g, BUDGET).unwrap();
            let rhs = z_brute(&a, None, &phi, &g.thicken(p).unwrap(), BUDGET).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn stretching_identity(a in symmetric_int(3, -1, 3), g in multigraph(4, 4), p in 1usize..=3, phi in pinning(4, 3)) {
            prop_assume!(phi.iter().all(|(v, s)| v < g.vertex_count() && s < a.rows()));
            let lhs = z_brute(&stretch_matrix(&a, p).unwrap(), None, &phi, &g, BUDGET).unwrap();
            let rhs = z_brute(&a, None, &phi, &g.stretch(p).unwrap(), BUDGET).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn twin_resolution_preserves_z(
            a in symmetric_int(4, 0, 1),
            d in prop::collection::vec(1i64..=3, 4),
            g in multigraph(4, 5),
            phi in pinning(4, 4),
        ) {
            prop_assume!(phi.iter().all(|(v, s)| v < g.vertex_count() && s < a.rows()));
            let d: Vec<BigInt> = d[..a.rows()].iter().map(|&x| int(x)).collect();
            let t = twins(&a, Some(&d)).unwrap();
            prop_assert!((0..a.rows()).all(|i| (0..a.rows()).all(|j| t.resolvent.get(t.tau[i], t.tau[j]) == a.get(i, j))));
            let lhs = z_brute(&a, Some(&d), &phi, &g, BUDGET).unwrap();
            let rhs = z_brute(&t.resolvent, Some(&t.weights), &t.map_pinning(&phi), &g, BUDGET).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prime_filter_and_elimination(a in symmetric_int(3, 0, 12), g in multigraph(4, 4), which in 0usize..3) {
            let p = int([2, 3, 5][which]);
            let hist = weight_histogram(&a, &g, &Pinning::new(), BUDGET).unwrap();
            let filtered = prime_transform_int(&a, &p, PrimeMode::Filter).unwrap();
            let expect: BigInt = hist.iter().map(|(w, n)| {
                let w = Matrix::from_rows(vec![vec![w.clone()]]).unwrap();
                prime_transform_int(&w, &p, PrimeMode::Filter).unwrap().get(0, 0) * n
            }).sum();
            prop_assert_eq!(z(&filtered, &g).unwrap(), expect);
            let eliminated = prime_transform_int(&a, &p, PrimeMode::Eliminate).unwrap();
            let expect: BigInt = hist.iter().filter(|(w, _)| !(w % &p).is_zero()).map(|(w, n)| w * n).sum();
            prop_assert_eq!(z(&eliminated, &g).unwrap(), expect);
        }

        #[test]
        fn rename_commutes_with_z(a in x_power_matrix(3), g in multigraph(4, 4), q in prop::collection::vec(-2i64..=2, 1..=3)) {
            let q = Poly::from_integers(q);
            prop_assert_eq!(z(&rename(&a, &q).unwrap(), &g).unwrap(), z(&a, &g).unwrap().compose(&q));
        }

        #[test]
        fn recovered_counts_match(a in symmetric_int(3, -1, 3), g in multigraph(4, 4), phi in pinning(4, 3)) {
            prop_assume!(phi.iter().all(|(v, s)| v < g.vertex_count() && s < a.rows()));
            let w = WeightMatrix::from_matrix(a.clone());
            for (value, n) in recover_counts(&mut brute_oracle(&w, BUDGET), &w, &g, &phi).unwrap() {
                let RingValue::Int(v) = value else { unreachable!() };
                prop_assert_eq!(n, count_configs(&a, &g, &phi, &v, BUDGET).unwrap());
            }
        }

        #[test]
        fn recovered_counts_match_for_polynomials(a in x_power_matrix(2), g in multigraph(4, 3)) {
            let w = WeightMatrix::Poly(a.clone());
            for (value, n) in recover_counts(&mut brute_oracle(&w, BUDGET), &w, &g, &Pinning::new()).unwrap() {
                let RingValue::Poly(v) = value else { unreachable!() };
                prop_assert_eq!(n, count_configs(&a, &g, &Pinning::new(), &v, BUDGET).unwrap());
            }
        }

        #[test]
        fn recovered_counts_for_general_polynomials(a in symmetric_poly(2), g in multigraph(3, 3)) {
            let w = WeightMatrix::Poly(a.clone());
            for (value, n) in recover_counts(&mut brute_oracle(&w, BUDGET), &w, &g, &Pinning::new()).unwrap() {
                let RingValue::Poly(v) = value else { unreachable!() };
                prop_assert_eq!(n, count_configs(&a, &g, &Pinning::new(), &v, BUDGET).unwrap());
            }
        }

        #[test]
        fn permutability(a in symmetric_int(4, -1, 3), g in multigraph(4, 5), perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
            let perm: Vec<usize> = perm.into_iter().filter(|&i| i < a.rows()).collect();
            prop_assert_eq!(z(&a.permuted(&perm), &g).unwrap(), z(&a, &g).unwrap());
        }
    }
}
