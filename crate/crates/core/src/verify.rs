//! Exhaustive property suites over small corpora, each property reporting
//! its first counterexample.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::connection::{enumerate_klabeled, find_non_psd, psd_rank_integer, rank_within, GluePlan, PlanSet};
use crate::corpus;
use crate::error::{Error, Result};
use crate::evaluator::{count_configs, weight_histogram, z_brute, z_edge_model, EdgeModel};
use crate::fastpath::{classify, classify01, z_fast};
use crate::graph::text::{to_json as graph_to_json, GraphFile};
use crate::graph::{Multigraph, Pinning};
use crate::models::{invariant_report, matrix_of, tutte_contraction_deletion, tutte_eval_brute, verify_tutte_identity, NamedModel};
use crate::moebius::{
    closed_form, defining_sum_failure, falling_factorial_sides, mobius, schrijver_condition, y_injective, zeta_check,
    YMode,
};
use crate::reductions::{
    brute_oracle, prime_transform_int, rename, stretch_matrix, thicken_matrix, twins, PrimeMode,
};
use crate::rings::{Matrix, Poly, RingValue, Scalar};
use crate::tagged::WeightMatrix;

/// Largest `--max-vertices` accepted.
pub const MAX_VERTICES: usize = 6;

/// Largest Möbius ground set checked, independent of `--max-vertices`.
const MOBIUS_K: usize = 8;

/// Cases whose brute-force evaluation would enumerate more configurations
/// than this are skipped by the stretching property.
const STRETCH_CAP: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Moebius,
    Tutte,
    Flows,
    Reductions,
    Connection,
    Models,
    Fastpath,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Moebius,
        Suite::Tutte,
        Suite::Flows,
        Suite::Reductions,
        Suite::Connection,
        Suite::Models,
        Suite::Fastpath,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Moebius => "moebius",
            Suite::Tutte => "tutte",
            Suite::Flows => "flows",
            Suite::Reductions => "reductions",
            Suite::Connection => "connection",
            Suite::Models => "models",
            Suite::Fastpath => "fastpath",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s}")))
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..7].to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub property: &'static str,
    pub cases: u64,
    pub counterexample: Option<Value>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "suite": self.suite,
            "property": self.property,
            "passed": self.passed(),
            "cases": self.cases,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.clone();
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: Suite,
    pub max_vertices: usize,
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "max_vertices": self.max_vertices,
            "passed": self.passed(),
            "properties": self.properties.iter().map(PropertyResult::to_json).collect::<Vec<_>>(),
        })
    }
}

fn graph_json(g: &Multigraph) -> Value {
    graph_to_json(&GraphFile::plain(g.clone()))
}

fn matrix_json<S: Scalar>(a: &Matrix<S>) -> Value {
    WeightMatrix::from_matrix(a.clone()).to_json()
}

fn pinning_json(phi: &Pinning) -> Value {
    json!(phi.iter().map(|(v, s)| json!([v, s])).collect::<Vec<_>>())
}

fn sides<T: ToString>(lhs: &T, rhs: &T) -> Value {
    json!({"lhs": lhs.to_string(), "rhs": rhs.to_string()})
}

fn differ<T: PartialEq + ToString>(lhs: T, rhs: T) -> Option<Value> {
    (lhs != rhs).then(|| sides(&lhs, &rhs))
}

struct Runner {
    suite: &'static str,
    out: Vec<PropertyResult>,
}

impl Runner {
    /// Runs `f` on every case until the first failure. `Ok(Some(detail))`
    /// and errors are failures.
    fn property<T>(
        &mut self,
        property: &'static str,
        cases: impl IntoIterator<Item = T>,
        describe: impl Fn(&T) -> Value,
        mut f: impl FnMut(&T) -> Result<Option<Value>>,
    ) {
        let mut count = 0;
        let mut counterexample = None;
        for case in cases {
            count += 1;
            let failure = match f(&case) {
                Ok(None) => continue,
                Ok(Some(detail)) => json!({"case": describe(&case), "detail": detail}),
                Err(e) => json!({"case": describe(&case), "error": e.to_string()}),
            };
            counterexample = Some(failure);
            break;
        }
        self.out.push(PropertyResult {
            suite: self.suite,
            property,
            cases: count,
            counterexample,
        });
    }
}

/// Shared corpora for one run.
struct Corpora {
    n: usize,
    budget: u64,
    /// Isomorphism classes with at most `n` vertices and `n` edges.
    graphs: Vec<Multigraph>,
    /// Connected classes with at most `n` vertices and `n + 2` edges.
    connected: Vec<Multigraph>,
    simple: Vec<Multigraph>,
    /// Symmetric integer matrices up to permutation: entries in `-1..=2` up
    /// to 2x2, and 0-1 matrices of size 3.
    ints: Vec<Matrix<BigInt>>,
    /// Up to 2x2 with entries `0`, `1`, `X`, `X^2`, plus the max-cut and
    /// Ising matrices.
    polys: Vec<Matrix<Poly>>,
}

impl Corpora {
    fn new(n: usize, budget: u64) -> Result<Self> {
        let mut ints = corpus::permutation_orbits(&corpus::symmetric_matrices(2, -1, 2));
        ints.extend(corpus::permutation_orbits(&corpus::zero_one_matrices(3)));
        let exponents = corpus::permutation_orbits(&corpus::symmetric_matrices(2, -1, 2));
        let mut polys: Vec<Matrix<Poly>> = exponents
            .iter()
            .map(|m| {
                m.map(|e| match e.to_string().parse::<i64>().expect("small") {
                    -1 => Poly::zero(),
                    k => Poly::x().pow(k as u32),
                })
            })
            .collect();
        for model in [NamedModel::MaxCut, NamedModel::Ising] {
            if let (WeightMatrix::Poly(m), _) = matrix_of(&model)? {
                polys.push(m);
            }
        }
        Ok(Corpora {
            n,
            budget,
            graphs: corpus::multigraphs(n, n)?,
            connected: corpus::connected_multigraphs(n, n + 2)?,
            simple: corpus::simple_graphs(n)?,
            ints,
            polys,
        })
    }

    fn int_pairs(&self) -> impl Iterator<Item = (&Matrix<BigInt>, &Multigraph)> {
        self.ints.iter().flat_map(move |a| self.graphs.iter().map(move |g| (a, g)))
    }

    /// The empty pinning and each spin at vertex 0.
    fn pinnings(g: &Multigraph, spins: usize) -> Vec<Pinning> {
        let mut out = vec![Pinning::new()];
        if g.vertex_count() > 0 {
            out.extend((0..spins).map(|s| Pinning::from_pairs(&[(0, s)])));
        }
        out
    }
}

fn describe_ag<S: Scalar>((a, g): &(&Matrix<S>, &Multigraph)) -> Value {
    json!({"matrix": matrix_json(*a), "graph": graph_json(g)})
}

/// Runs `suite` with graphs of at most `max_vertices` vertices.
pub fn run(suite: Suite, max_vertices: usize, budget: u64) -> Result<Report> {
    if max_vertices == 0 || max_vertices > MAX_VERTICES {
        return Err(Error::BadParameter(format!("max vertices must be in 1..={MAX_VERTICES}")));
    }
    let c = Corpora::new(max_vertices, budget)?;
    let mut properties = Vec::new();
    for s in suite.members() {
        let mut r = Runner {
            suite: s.name(),
            out: Vec::new(),
        };
        match s {
            Suite::Moebius => moebius_suite(&mut r, &c),
            Suite::Tutte => tutte_suite(&mut r, &c),
            Suite::Flows => flows_suite(&mut r, &c),
            Suite::Reductions => reductions_suite(&mut r, &c),
            Suite::Connection => connection_suite(&mut r, &c),
            Suite::Models => models_suite(&mut r, &c),
            Suite::Fastpath => fastpath_suite(&mut r, &c),
            Suite::All => unreachable!("expanded by members"),
        }
        properties.append(&mut r.out);
    }
    Ok(Report {
        suite,
        max_vertices,
        properties,
    })
}

fn moebius_suite(r: &mut Runner, c: &Corpora) {
    let ks = 0..=MOBIUS_K;
    r.property("defining-sum", ks.clone(), |k| json!({"k": k}), |&k| {
        Ok(defining_sum_failure(&mobius(k)?).map(|p| json!({"partition": p.blocks()})))
    });
    r.property("closed-form", ks.clone(), |k| json!({"k": k}), |&k| {
        Ok(mobius(k)?
            .entries()
            .into_iter()
            .find(|(p, v)| &closed_form(p) != v)
            .map(|(p, v)| json!({"partition": p.blocks(), "table": v.to_string(), "closed_form": closed_form(&p).to_string()})))
    });
    r.property("falling-factorial", ks, |k| json!({"k": k}), |&k| {
        let (l, rhs) = falling_factorial_sides(&mobius(k)?);
        Ok(differ(l, rhs))
    });
    let budget = c.budget;
    r.property("injective-inversion", c.int_pairs(), describe_ag, |(a, g)| {
        Ok(differ(
            y_injective(*a, g, YMode::Brute, budget)?,
            y_injective(*a, g, YMode::Inversion, budget)?,
        ))
    });
    r.property("zeta", c.int_pairs(), describe_ag, |(a, g)| {
        let (l, rhs) = zeta_check(*a, g, budget)?;
        Ok(differ(l, rhs))
    });
    r.property(
        "vanishing-beyond-dimension",
        c.int_pairs().filter(|(a, g)| g.vertex_count() > a.rows()),
        describe_ag,
        |(a, g)| Ok(differ(schrijver_condition(*a, g, budget)?, BigInt::zero())),
    );
}

fn small_rationals(values: &[(i64, i64)]) -> Vec<BigRational> {
    values.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect()
}

fn tutte_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let points: Vec<(BigRational, BigRational)> = [(2, 2), (3, 2), (2, 3), (5, 2)]
        .iter()
        .map(|&(x, y)| (BigRational::from_integer(x.into()), BigRational::from_integer(y.into())))
        .collect();
    let cases = || c.connected.iter().flat_map(|g| points.iter().map(move |p| (g, p)));
    let describe = |(g, (x, y)): &(&Multigraph, &(BigRational, BigRational))| {
        json!({"graph": graph_json(g), "x": x.to_string(), "y": y.to_string()})
    };
    r.property("tutte-identity", cases(), describe, |(g, (x, y))| {
        Ok((!verify_tutte_identity(g, x, y, budget)?).then(|| json!("identity sides differ")))
    });
    r.property("contraction-deletion", cases(), describe, |(g, (x, y))| {
        Ok(differ(tutte_eval_brute(g, x, y, budget)?, tutte_contraction_deletion(g, x, y)))
    });
    let vs = small_rationals(&[(0, 1), (1, 1), (-1, 2)]);
    let vs = &vs;
    let potts_cases = c
        .graphs
        .iter()
        .flat_map(|g| (1..=3usize).flat_map(move |n| vs.iter().map(move |v| (g, n, v.clone()))));
    r.property(
        "potts",
        potts_cases,
        |(g, n, v)| json!({"graph": graph_json(g), "n": n, "v": v.to_string()}),
        |(g, n, v)| {
            let rep = invariant_report("potts", &[BigRational::from_integer((*n).into()), v.clone()], g, budget)?;
            Ok((!rep.agree).then(|| json!({"z": rep.z, "oracle": rep.oracle})))
        },
    );
    let ising_cases = c.graphs.iter().flat_map(|g| vs.iter().map(move |v| (g, v.clone())));
    r.property(
        "ising",
        ising_cases,
        |(g, v)| json!({"graph": graph_json(g), "v": v.to_string()}),
        |(g, v)| {
            let rep = invariant_report("ising", std::slice::from_ref(v), g, budget)?;
            Ok((!rep.agree).then(|| json!({"z": rep.z, "oracle": rep.oracle})))
        },
    );
}

fn flows_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let cases = c.simple.iter().flat_map(|g| [2usize, 3].map(|k| (g, k)));
    r.property(
        "flow-identity",
        cases,
        |(g, k)| json!({"graph": graph_json(g), "k": k}),
        |(g, k)| {
            let rep = invariant_report("flows", &[BigRational::from_integer((*k).into())], g, budget)?;
            Ok((!rep.agree).then(|| json!({"z": rep.z, "oracle": rep.oracle})))
        },
    );
}

fn reductions_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let with_pins = || {
        c.int_pairs().flat_map(|(a, g)| Corpora::pinnings(g, a.rows()).into_iter().map(move |phi| (a, g, phi)))
    };
    let describe = |(a, g, phi): &(&Matrix<BigInt>, &Multigraph, Pinning)| {
        json!({"matrix": matrix_json(*a), "graph": graph_json(g), "pinning": pinning_json(phi)})
    };
    let with_p = || with_pins().flat_map(|(a, g, phi)| (1..=3usize).map(move |p| (a, g, phi.clone(), p)));
    let describe_p = |(a, g, phi, p): &(&Matrix<BigInt>, &Multigraph, Pinning, usize)| {
        let mut v = describe(&(*a, *g, phi.clone()));
        v["p"] = json!(p);
        v
    };
    r.property("thickening", with_p(), describe_p, |(a, g, phi, p)| {
        Ok(differ(
            z_brute(&thicken_matrix(a, *p)?, None, phi, g, budget)?,
            z_brute(*a, None, phi, &g.thicken(*p)?, budget)?,
        ))
    });
    let small_stretch = |(a, g, _, p): &(&Matrix<BigInt>, &Multigraph, Pinning, usize)| {
        let vertices = g.vertex_count() + g.edge_count() * (p - 1);
        (a.rows() as u64).checked_pow(vertices as u32).is_some_and(|x| x <= STRETCH_CAP)
    };
    r.property("stretching", with_p().filter(small_stretch), describe_p, |(a, g, phi, p)| {
        Ok(differ(
            z_brute(&stretch_matrix(a, *p)?, None, phi, g, budget)?,
            z_brute(*a, None, phi, &g.stretch(*p)?, budget)?,
        ))
    });
    r.property("twin-resolution", with_pins(), describe, |(a, g, phi)| {
        let d: Vec<BigInt> = (1..=a.rows()).map(BigInt::from).collect();
        let t = twins(*a, Some(&d))?;
        Ok(differ(
            z_brute(*a, Some(&d), phi, g, budget)?,
            z_brute(&t.resolvent, Some(&t.weights), &t.map_pinning(phi), g, budget)?,
        ))
    });
    r.property("permutation-invariance", c.int_pairs(), describe_ag, |(a, g)| {
        let z = z_brute(*a, None, &Pinning::new(), g, budget)?;
        for perm in permutations(a.rows()) {
            let zp = z_brute(&a.permuted(&perm), None, &Pinning::new(), g, budget)?;
            if zp != z {
                return Ok(Some(json!({"permutation": perm, "lhs": z.to_string(), "rhs": zp.to_string()})));
            }
        }
        Ok(None)
    });
    r.property("recover-counts-int", with_pins(), describe, |(a, g, phi)| {
        let w = WeightMatrix::from_matrix((*a).clone());
        recovered_mismatch(&w, a, g, phi, budget)
    });
    let poly_pairs = c.polys.iter().flat_map(|a| c.graphs.iter().map(move |g| (a, g)));
    r.property("recover-counts-poly", poly_pairs, describe_ag, |(a, g)| {
        let w = WeightMatrix::Poly((*a).clone());
        recovered_mismatch(&w, a, g, &Pinning::new(), budget)
    });

    let nonneg = corpus::permutation_orbits(&corpus::symmetric_matrices(2, 0, 4));
    let prime_cases = nonneg
        .iter()
        .flat_map(|a| c.graphs.iter().flat_map(move |g| [2i64, 3].map(|p| (a, g, BigInt::from(p)))));
    r.property(
        "prime-filter-and-elimination",
        prime_cases,
        |(a, g, p)| json!({"matrix": matrix_json(*a), "graph": graph_json(g), "p": p.to_string()}),
        |(a, g, p)| {
            let hist = weight_histogram(*a, g, &Pinning::new(), budget)?;
            let filter = |w: &BigInt| -> Result<BigInt> {
                Ok(prime_transform_int(&Matrix::from_rows(vec![vec![w.clone()]])?, p, PrimeMode::Filter)?
                    .get(0, 0)
                    .clone())
            };
            let mut expected = BigInt::zero();
            for (w, n) in &hist {
                expected += filter(w)? * n;
            }
            let filtered = prime_transform_int(a, p, PrimeMode::Filter)?;
            if let Some(d) = differ(z_brute(&filtered, None, &Pinning::new(), g, budget)?, expected) {
                return Ok(Some(json!({"mode": "filter", "sides": d})));
            }
            let expected: BigInt = hist.iter().filter(|(w, _)| !w.is_multiple_of(p)).map(|(w, n)| w * n).sum();
            let eliminated = prime_transform_int(a, p, PrimeMode::Eliminate)?;
            Ok(differ(z_brute(&eliminated, None, &Pinning::new(), g, budget)?, expected)
                .map(|d| json!({"mode": "eliminate", "sides": d})))
        },
    );
    let qs = [Poly::from_integers([2]), Poly::from_integers([1, 1]), Poly::from_integers([-1, 0, 1])];
    let qs = &qs;
    let rename_cases = c
        .polys
        .iter()
        .filter(|a| a.entries().all(|x| x.is_zero() || x.as_x_power().is_some()))
        .flat_map(|a| c.graphs.iter().flat_map(move |g| qs.iter().map(move |q| (a, g, q))));
    r.property(
        "rename",
        rename_cases,
        |(a, g, q)| json!({"matrix": matrix_json(*a), "graph": graph_json(g), "q": q.to_string()}),
        |(a, g, q)| {
            Ok(differ(
                z_brute(&rename(a, q)?, None, &Pinning::new(), g, budget)?,
                z_brute(*a, None, &Pinning::new(), g, budget)?.compose(q),
            ))
        },
    );
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn recovered_mismatch<S: Scalar>(
    w: &WeightMatrix,
    a: &Matrix<S>,
    g: &Multigraph,
    phi: &Pinning,
    budget: u64,
) -> Result<Option<Value>> {
    let mut oracle = brute_oracle(w, budget);
    for (value, n) in crate::reductions::recover_counts(&mut oracle, w, g, phi)? {
        let weight = S::from_value(value.clone())?;
        let direct = count_configs(a, g, phi, &weight, budget)?;
        if direct != n {
            return Ok(Some(json!({"weight": value.to_string(), "recovered": n.to_string(), "direct": direct.to_string()})));
        }
    }
    Ok(None)
}

fn connection_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let n = c.n;
    let plans: Result<Vec<GluePlan>> = (0..=2usize)
        .map(|k| GluePlan::new(&enumerate_klabeled(k, n.max(k), n)?))
        .collect();
    let plans = match plans {
        Ok(p) => PlanSet::new(p),
        Err(e) => {
            r.property("psd-and-rank-bound", [()], |_| json!(null), |_| Err(e.clone()));
            return;
        }
    };
    let matrices = corpus::permutation_orbits(&corpus::symmetric_matrices(2, 0, 3));
    r.property(
        "psd-and-rank-bound",
        matrices.iter(),
        |a| json!({"matrix": matrix_json(*a)}),
        |a| {
            for (k, m) in plans.matrices(*a, budget)?.iter().enumerate() {
                match psd_rank_integer(m)? {
                    None => return Ok(Some(json!({"k": k, "failure": "not positive semidefinite"}))),
                    Some(rank) if !rank_within(rank, a.rows(), k) => {
                        return Ok(Some(json!({"k": k, "rank": rank, "failure": "rank above n^k"})))
                    }
                    Some(_) => {}
                }
            }
            Ok(None)
        },
    );
    r.property(
        "perfect-matchings-not-reflection-positive",
        [1usize],
        |k| json!({"k": k, "max_vertices": n, "max_edges": n}),
        |&k| {
            let basis = enumerate_klabeled(k, n, n)?;
            let max_degree = 2 * n;
            let model = EdgeModel::perfect_matchings(max_degree);
            let witness = find_non_psd(&basis, &mut |g| z_edge_model(&model, g, budget))?;
            Ok(witness.is_none().then(|| json!("every principal submatrix searched is PSD")))
        },
    );
}

fn models_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let named: [(&str, Option<i64>); 7] = [
        ("independent-sets", None),
        ("weighted-independent-sets", None),
        ("colorings", Some(2)),
        ("colorings", Some(3)),
        ("euler", None),
        ("even-subgraphs", None),
        ("max-cut", None),
    ];
    let cases = c.graphs.iter().flat_map(|g| named.iter().map(move |m| (g, m)));
    r.property(
        "named-invariants",
        cases,
        |(g, (name, k))| json!({"graph": graph_json(g), "name": name, "params": k}),
        |(g, (name, k))| {
            let params: Vec<BigRational> = k.iter().map(|&k| BigRational::from_integer(k.into())).collect();
            let rep = invariant_report(name, &params, g, budget)?;
            Ok((!rep.agree).then(|| json!({"z": rep.z, "oracle": rep.oracle})))
        },
    );
    let worked: Vec<(&str, NamedModel, Multigraph, RingValue)> = vec![
        ("Z_I(P3)", NamedModel::IndepSet, Multigraph::path(3), RingValue::Int(5.into())),
        ("Z_K3(K3)", NamedModel::Coloring(3), Multigraph::complete(3), RingValue::Int(6.into())),
        ("Z_U(C3)", NamedModel::Euler, Multigraph::cycle(3), RingValue::Int(8.into())),
        ("Z_U(K2)", NamedModel::Euler, Multigraph::path(2), RingValue::Int(0.into())),
        ("Z_B(K2)", NamedModel::EvenSubgraph, Multigraph::path(2), RingValue::Int(2.into())),
        ("Z_C(K2)", NamedModel::MaxCut, Multigraph::path(2), RingValue::Poly(Poly::from_integers([2, 2]))),
    ];
    r.property(
        "worked-values",
        worked.iter(),
        |(name, ..)| json!(name),
        |(_, model, g, expected)| {
            let (a, d) = matrix_of(model)?;
            let z = crate::evaluator::z_value(&a, d.as_ref(), &Pinning::new(), g, budget)?;
            Ok(differ(z, expected.clone()))
        },
    );
}

fn fastpath_suite(r: &mut Runner, c: &Corpora) {
    let budget = c.budget;
    let tractable = match corpus::tractable_matrices(3, 3) {
        Ok(t) => t,
        Err(e) => {
            r.property("fast-equals-brute", [()], |_| json!(null), |_| Err(e.clone()));
            return;
        }
    };
    let pairs = tractable.iter().flat_map(|a| c.connected.iter().map(move |g| (a, g)));
    r.property("fast-equals-brute", pairs, describe_ag, |(a, g)| {
        Ok(differ(z_fast(*a, g)?, z_brute(*a, None, &Pinning::new(), g, budget)?))
    });
    let zero_one: Vec<Matrix<BigInt>> = (1..=c.n.min(4)).flat_map(corpus::zero_one_matrices).collect();
    r.property(
        "classify-matches-structure",
        zero_one.iter(),
        |a| json!({"matrix": matrix_json(*a)}),
        |a| {
            let general = classify(*a, true)?.verdict;
            let structural = classify01(&corpus::graph_of_zero_one(a))?.verdict;
            Ok((general != structural).then(|| json!({"classify": general.as_str(), "classify01": structural.as_str()})))
        },
    );
}
