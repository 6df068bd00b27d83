use std::fmt;

use crate::error::{Error, Result};

/// A set partition of `0..n`, stored canonically: each block sorted and
/// blocks ordered by their smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::BadPartition("empty block".into()));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        let n = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != n {
            return Err(Error::BadPartition("blocks overlap".into()));
        }
        Ok(VertexPartition { blocks })
    }

    /// The partition into singletons, written `T_V` in the literature.
    pub fn trivial(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// A single block holding everything (no block when `n = 0`).
    pub fn full(n: usize) -> Self {
        VertexPartition {
            blocks: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// From a restricted-growth string: `rgs[v]` is the block of `v`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in rgs.iter().enumerate() {
            blocks[b].push(v);
        }
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Block sizes in decreasing order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Block index of every element of `0..n`; fails unless the blocks
    /// cover exactly `0..n`.
    pub fn class_map(&self, n: usize) -> Result<Vec<usize>> {
        let mut class = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(Error::BadPartition(format!("element {v} outside 0..{n}")));
                }
                class[v] = i;
            }
        }
        if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
            return Err(Error::BadPartition(format!("element {v} not covered")));
        }
        Ok(class)
    }

    /// Whether `self` refines `other`: every block of `self` lies inside a
    /// block of `other`.
    pub fn refines(&self, other: &VertexPartition) -> bool {
        let n = other.ground_size();
        let Ok(class) = other.class_map(n) else {
            return false;
        };
        self.ground_size() == n
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&v| v < n && class[v] == class[b[0]]))
    }
}

impl fmt::Debug for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b:?}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = VertexPartition::new(vec![vec![2], vec![1, 0]]).unwrap();
        assert_eq!(a.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(a, VertexPartition::from_rgs(&[0, 0, 1]));
        assert!(VertexPartition::new(vec![vec![0], vec![0]]).is_err());
        assert!(VertexPartition::new(vec![vec![]]).is_err());
    }

    #[test]
    fn refinement() {
        let t = VertexPartition::trivial(3);
        let f = VertexPartition::full(3);
        let m = VertexPartition::from_rgs(&[0, 0, 1]);
        assert!(t.refines(&m) && m.refines(&f) && t.refines(&f));
        assert!(!f.refines(&m));
        assert!(m.refines(&m));
    }
}
