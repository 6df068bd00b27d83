//! Machine-integer evaluation for integer matrices with small entries.
//!
//! Same enumeration as the generic walk, in checked `i128`; any overflow
//! abandons the attempt and the caller falls back to arbitrary precision.

use num_bigint::BigInt;

use crate::rings::{Matrix, RingKind, RingValue, Scalar};

fn to_i64<S: Scalar>(x: &S) -> Option<i64> {
    match x.clone().into_value() {
        RingValue::Int(b) => i64::try_from(&b).ok(),
        _ => None,
    }
}

pub(super) struct Small {
    m: usize,
    slots: Vec<Option<usize>>,
    // back[v] = (neighbour u <= v, index into powers)
    back: Vec<Vec<(usize, usize)>>,
    // powers[p][s * m + t] = A[s][t]^k for the p-th multiplicity k
    powers: Vec<Vec<i128>>,
    weights: Option<Vec<i128>>,
}

impl Small {
    pub(super) fn new<S: Scalar>(
        a: &Matrix<S>,
        d: Option<&[S]>,
        slots: &[Option<usize>],
        back: &[Vec<(usize, usize)>],
    ) -> Option<Self> {
        if S::KIND != RingKind::Int {
            return None;
        }
        let m = a.rows();
        let base: Vec<i128> = a.entries().map(|x| to_i64(x).map(i128::from)).collect::<Option<_>>()?;
        let weights = match d {
            Some(d) => Some(d.iter().map(|x| to_i64(x).map(i128::from)).collect::<Option<Vec<_>>>()?),
            None => None,
        };
        let mut mults: Vec<usize> = back.iter().flatten().map(|&(_, k)| k).collect();
        mults.sort_unstable();
        mults.dedup();
        let mut powers = Vec::new();
        for &k in &mults {
            let table = base
                .iter()
                .map(|&x| {
                    let k = u32::try_from(k).ok()?;
                    x.checked_pow(k)
                })
                .collect::<Option<Vec<_>>>()?;
            powers.push(table);
        }
        let back = back
            .iter()
            .map(|b| b.iter().map(|&(u, k)| (u, mults.binary_search(&k).unwrap())).collect())
            .collect();
        Some(Small {
            m,
            slots: slots.to_vec(),
            back,
            powers,
            weights,
        })
    }

    pub(super) fn sum(&self) -> Option<BigInt> {
        let mut sigma = vec![0usize; self.slots.len()];
        let mut total: i128 = 0;
        self.rec(0, 1, &mut sigma, &mut total)?;
        Some(BigInt::from(total))
    }

    fn rec(&self, d: usize, prefix: i128, sigma: &mut [usize], total: &mut i128) -> Option<()> {
        if d == self.slots.len() {
            *total = total.checked_add(prefix)?;
            return Some(());
        }
        let range = match self.slots[d] {
            Some(s) => s..s + 1,
            None => 0..self.m,
        };
        for s in range {
            sigma[d] = s;
            let mut w = prefix;
            if let (Some(dw), None) = (&self.weights, self.slots[d]) {
                w = w.checked_mul(dw[s])?;
            }
            for &(u, p) in &self.back[d] {
                if w == 0 {
                    break;
                }
                w = w.checked_mul(self.powers[p][sigma[u] * self.m + s])?;
            }
            if w != 0 {
                self.rec(d + 1, w, sigma, total)?;
            }
        }
        Some(())
    }
}
