use super::{add_into, check_budget, walk};
use crate::error::{Error, Result};
use crate::graph::Hypergraph;
use crate::rings::Scalar;

/// A function `[n]^r -> S` invariant under permuting its arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTensor<S> {
    spins: usize,
    arity: usize,
    data: Vec<S>,
}

impl<S: Scalar> SymmetricTensor<S> {
    /// `data` lists values in row-major order of the index tuple.
    pub fn new(spins: usize, arity: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != spins.pow(arity as u32) {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a tensor of shape {spins}^{arity}",
                data.len()
            )));
        }
        let t = SymmetricTensor { spins, arity, data };
        let mut idx = vec![0; arity];
        for flat in 0..t.data.len() {
            t.unflatten(flat, &mut idx);
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            if t.data[flat] != *t.get(&sorted) {
                return Err(Error::AsymmetricTensor);
            }
        }
        Ok(t)
    }

    pub fn from_fn(spins: usize, arity: usize, f: impl Fn(&[usize]) -> S) -> Result<Self> {
        let mut idx = vec![0; arity];
        let size = spins.pow(arity as u32);
        let mut data = Vec::with_capacity(size);
        let probe = SymmetricTensor { spins, arity, data: Vec::<S>::new() };
        for flat in 0..size {
            probe.unflatten(flat, &mut idx);
            data.push(f(&idx));
        }
        SymmetricTensor::new(spins, arity, data)
    }

    fn unflatten(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.spins;
            flat /= self.spins;
        }
    }

    pub fn spins(&self) -> usize {
        self.spins
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        let flat = idx.iter().fold(0, |acc, &i| acc * self.spins + i);
        &self.data[flat]
    }
}

/// `Z_A(H) = sum over sigma of prod over hyperedges e of A(sigma(e))`.
pub fn z_hypergraph<S: Scalar>(a: &SymmetricTensor<S>, h: &Hypergraph, budget: u64) -> Result<S> {
    if a.arity() != h.arity() {
        return Err(Error::ArityMismatch {
            expected: a.arity(),
            found: h.arity(),
        });
    }
    let n = h.vertex_count();
    check_budget(a.spins(), n, budget)?;
    // Each hyperedge is charged at its largest vertex.
    let mut at: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges() {
        at[*e.last().expect("arity >= 1")].push(e);
    }
    let factor = |v: usize, sigma: &[usize]| {
        let mut idx = vec![0; a.arity()];
        at[v].iter().fold(S::one(), |w, e| {
            for (slot, &u) in idx.iter_mut().zip(e.iter()) {
                *slot = sigma[u];
            }
            w * a.get(&idx).clone()
        })
    };
    let mut total = S::zero();
    walk(&vec![None; n], a.spins(), &factor, &mut |w, _| {
        if !w.is_zero() {
            add_into(&mut total, w);
        }
    });
    Ok(total)
}
