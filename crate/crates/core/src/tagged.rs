//! Run-time tagged matrices and vertex weights, with their JSON formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::{Matrix, Poly, RingKind, RingValue, Scalar};

/// A square weight matrix over a ring chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightMatrix {
    Int(Matrix<BigInt>),
    Rat(Matrix<BigRational>),
    Poly(Matrix<Poly>),
}

/// The diagonal of a vertex-weight matrix `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagonalWeights {
    Int(Vec<BigInt>),
    Rat(Vec<BigRational>),
    Poly(Vec<Poly>),
}

/// Calls a generic function on the concrete matrix inside a [`WeightMatrix`].
#[macro_export]
macro_rules! with_matrix {
    ($w:expr, $m:ident => $body:expr) => {
        match $w {
            $crate::tagged::WeightMatrix::Int($m) => $body,
            $crate::tagged::WeightMatrix::Rat($m) => $body,
            $crate::tagged::WeightMatrix::Poly($m) => $body,
        }
    };
}

fn convert<S: Scalar, T: Scalar>(v: &S) -> Result<T> {
    T::from_value(v.clone().into_value())
}

impl WeightMatrix {
    pub fn from_matrix<S: Scalar>(m: Matrix<S>) -> WeightMatrix {
        let out = match S::KIND {
            RingKind::Int => m.try_map(convert).map(WeightMatrix::Int),
            RingKind::Rat => m.try_map(convert).map(WeightMatrix::Rat),
            RingKind::Poly => m.try_map(convert).map(WeightMatrix::Poly),
        };
        out.expect("conversion within the same ring")
    }

    /// Builds from a matrix of tagged values, promoting everything to the
    /// largest ring present.
    pub fn from_values(m: Matrix<RingValue>) -> Result<WeightMatrix> {
        let kind = m.entries().map(RingValue::kind).max().unwrap_or(RingKind::Int);
        Ok(match kind {
            RingKind::Int => WeightMatrix::Int(m.try_map(|v| BigInt::from_value(v.clone()))?),
            RingKind::Rat => WeightMatrix::Rat(m.try_map(|v| BigRational::from_value(v.clone()))?),
            RingKind::Poly => WeightMatrix::Poly(m.try_map(|v| Poly::from_value(v.clone()))?),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> WeightMatrix {
        WeightMatrix::Int(Matrix::from_i64(rows))
    }

    pub fn kind(&self) -> RingKind {
        match self {
            WeightMatrix::Int(_) => RingKind::Int,
            WeightMatrix::Rat(_) => RingKind::Rat,
            WeightMatrix::Poly(_) => RingKind::Poly,
        }
    }

    pub fn dim(&self) -> usize {
        with_matrix!(self, m => m.rows())
    }

    pub fn get(&self, i: usize, j: usize) -> RingValue {
        with_matrix!(self, m => m.get(i, j).clone().into_value())
    }

    pub fn is_symmetric(&self) -> bool {
        with_matrix!(self, m => m.is_symmetric())
    }

    pub fn promote(&self, target: RingKind) -> Result<WeightMatrix> {
        if target < self.kind() {
            return Err(Error::RingMismatch(self.kind(), target));
        }
        Ok(match target {
            RingKind::Int => self.clone(),
            RingKind::Rat => WeightMatrix::Rat(with_matrix!(self, m => m.try_map(convert)?)),
            RingKind::Poly => WeightMatrix::Poly(with_matrix!(self, m => m.try_map(convert)?)),
        })
    }

    pub fn as_int(&self) -> Option<&Matrix<BigInt>> {
        match self {
            WeightMatrix::Int(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_rat(&self) -> Option<&Matrix<BigRational>> {
        match self {
            WeightMatrix::Rat(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Matrix<Poly>> {
        match self {
            WeightMatrix::Poly(m) => Some(m),
            _ => None,
        }
    }

    /// `{"ring": "int"|"rat"|"poly", "n": m, "entries": [[...], ...]}`
    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let entries: Vec<Vec<Value>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).to_json()).collect())
            .collect();
        json!({ "ring": self.kind(), "n": n, "entries": entries })
    }

    pub fn from_json(value: &Value) -> Result<WeightMatrix> {
        let bad = |m: &str| Error::Parse(format!("matrix JSON: {m}"));
        let kind: RingKind = serde_json::from_value(value.get("ring").cloned().ok_or_else(|| bad("missing \"ring\""))?)
            .map_err(|e| bad(&e.to_string()))?;
        let rows = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"entries\" array"))?;
        let n = rows.len();
        if let Some(declared) = value.get("n") {
            if declared.as_u64() != Some(n as u64) {
                return Err(bad("\"n\" disagrees with the number of rows"));
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("row must be an array"))?;
            if row.len() != n {
                return Err(bad("matrix must be square"));
            }
            for entry in row {
                data.push(RingValue::from_json(entry, kind)?);
            }
        }
        let m = Matrix::new(n, n, data)?;
        Ok(match kind {
            RingKind::Int => WeightMatrix::Int(m.try_map(|v| BigInt::from_value(v.clone()))?),
            RingKind::Rat => WeightMatrix::Rat(m.try_map(|v| BigRational::from_value(v.clone()))?),
            RingKind::Poly => WeightMatrix::Poly(m.try_map(|v| Poly::from_value(v.clone()))?),
        })
    }
}

impl DiagonalWeights {
    pub fn from_vec<S: Scalar>(d: Vec<S>) -> DiagonalWeights {
        let out = match S::KIND {
            RingKind::Int => d.iter().map(convert).collect::<Result<_>>().map(DiagonalWeights::Int),
            RingKind::Rat => d.iter().map(convert).collect::<Result<_>>().map(DiagonalWeights::Rat),
            RingKind::Poly => d.iter().map(convert).collect::<Result<_>>().map(DiagonalWeights::Poly),
        };
        out.expect("conversion within the same ring")
    }

    pub fn from_values(values: Vec<RingValue>) -> Result<DiagonalWeights> {
        let kind = values.iter().map(RingValue::kind).max().unwrap_or(RingKind::Int);
        let values = values.into_iter();
        Ok(match kind {
            RingKind::Int => DiagonalWeights::Int(values.map(BigInt::from_value).collect::<Result<_>>()?),
            RingKind::Rat => DiagonalWeights::Rat(values.map(BigRational::from_value).collect::<Result<_>>()?),
            RingKind::Poly => DiagonalWeights::Poly(values.map(Poly::from_value).collect::<Result<_>>()?),
        })
    }

    pub fn kind(&self) -> RingKind {
        match self {
            DiagonalWeights::Int(_) => RingKind::Int,
            DiagonalWeights::Rat(_) => RingKind::Rat,
            DiagonalWeights::Poly(_) => RingKind::Poly,
        }
    }

    pub fn len(&self) -> usize {
        self.values().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> Vec<RingValue> {
        match self {
            DiagonalWeights::Int(d) => d.iter().cloned().map(RingValue::Int).collect(),
            DiagonalWeights::Rat(d) => d.iter().cloned().map(RingValue::Rat).collect(),
            DiagonalWeights::Poly(d) => d.iter().cloned().map(RingValue::Poly).collect(),
        }
    }

    /// The diagonal in a concrete ring, promoting as needed.
    pub fn to_scalars<S: Scalar>(&self) -> Result<Vec<S>> {
        self.values().into_iter().map(S::from_value).collect()
    }

    /// `{"ring": ..., "diag": [...]}`
    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.kind(),
            "diag": self.values().iter().map(RingValue::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<DiagonalWeights> {
        let bad = |m: &str| Error::Parse(format!("weights JSON: {m}"));
        let kind: RingKind = serde_json::from_value(value.get("ring").cloned().ok_or_else(|| bad("missing \"ring\""))?)
            .map_err(|e| bad(&e.to_string()))?;
        let diag = value
            .get("diag")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"diag\" array"))?;
        let values = diag
            .iter()
            .map(|v| RingValue::from_json(v, kind))
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Ok(match kind {
                RingKind::Int => DiagonalWeights::Int(vec![]),
                RingKind::Rat => DiagonalWeights::Rat(vec![]),
                RingKind::Poly => DiagonalWeights::Poly(vec![]),
            });
        }
        DiagonalWeights::from_values(values)
    }
}

/// Promotes a matrix and optional weights to their common ring.
pub fn unify(a: &WeightMatrix, d: Option<&DiagonalWeights>) -> Result<(WeightMatrix, Option<DiagonalWeights>)> {
    let kind = d.map_or(a.kind(), |d| a.kind().join(d.kind()));
    let a = a.promote(kind)?;
    let d = match d {
        None => None,
        Some(d) => Some(match kind {
            RingKind::Int => DiagonalWeights::Int(d.to_scalars()?),
            RingKind::Rat => DiagonalWeights::Rat(d.to_scalars()?),
            RingKind::Poly => DiagonalWeights::Poly(d.to_scalars()?),
        }),
    };
    Ok((a, d))
}
