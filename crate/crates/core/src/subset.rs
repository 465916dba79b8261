//! Subsets of `[m] = {1, ..., m}` used to index rows and columns of
//! compound and adjugate matrices.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex {
    elements: Vec<usize>,
    ambient: usize,
}

impl SubsetIndex {
    /// Elements must be strictly increasing and lie in `1..=ambient`.
    pub fn new(elements: Vec<usize>, ambient: usize) -> Result<Self> {
        for window in elements.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::InvalidSubset(format!(
                    "elements {elements:?} are not strictly increasing"
                )));
            }
        }
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > ambient) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: ambient,
            });
        }
        Ok(SubsetIndex { elements, ambient })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut elements: Vec<usize>, ambient: usize) -> Result<Self> {
        elements.sort_unstable();
        let before = elements.len();
        elements.dedup();
        if elements.len() != before {
            return Err(Error::InvalidSubset("repeated element".into()));
        }
        Self::new(elements, ambient)
    }

    pub fn full(ambient: usize) -> Self {
        SubsetIndex {
            elements: (1..=ambient).collect(),
            ambient,
        }
    }

    pub fn empty(ambient: usize) -> Self {
        SubsetIndex {
            elements: Vec::new(),
            ambient,
        }
    }

    /// `{1, ..., k}` inside `[ambient]`.
    pub fn initial(k: usize, ambient: usize) -> Result<Self> {
        if k > ambient {
            return Err(Error::KOutOfRange { k, max: ambient });
        }
        Ok(SubsetIndex {
            elements: (1..=k).collect(),
            ambient,
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// σ(I), the sum of the elements.
    pub fn sigma(&self) -> usize {
        self.elements.iter().sum()
    }

    pub fn complement(&self) -> Self {
        let mut elements = Vec::with_capacity(self.ambient - self.len());
        let mut it = self.elements.iter().peekable();
        for v in 1..=self.ambient {
            if it.peek() == Some(&&v) {
                it.next();
            } else {
                elements.push(v);
            }
        }
        SubsetIndex {
            elements,
            ambient: self.ambient,
        }
    }

    /// Zero-based element positions.
    pub(crate) fn zero_based(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|e| e - 1)
    }

    /// Position of this subset among all `len()`-subsets of `[ambient]` in
    /// lexicographic order.
    pub fn lex_rank(&self) -> usize {
        let m = self.ambient;
        let k = self.len();
        let mut rank = 0usize;
        let mut prev = 0usize;
        for (pos, &e) in self.elements.iter().enumerate() {
            for skipped in (prev + 1)..e {
                rank += binomial(m - skipped, k - pos - 1);
            }
            prev = e;
        }
        rank
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `k`-subsets of `[m]` in lexicographic order.
pub fn k_subsets(m: usize, k: usize) -> Vec<SubsetIndex> {
    let mut out = Vec::with_capacity(binomial(m, k));
    if k > m {
        return out;
    }
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SubsetIndex {
            elements: current.clone(),
            ambient: m,
        });
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&i| current[i] < m - (k - 1 - i)) else {
            break;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let subs: Vec<Vec<usize>> = k_subsets(4, 2).into_iter().map(|s| s.elements).collect();
        assert_eq!(
            subs,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(k_subsets(3, 0).len(), 1);
        assert_eq!(k_subsets(0, 0).len(), 1);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn rank_matches_enumeration() {
        for m in 0..7 {
            for k in 0..=m {
                for (i, s) in k_subsets(m, k).iter().enumerate() {
                    assert_eq!(s.lex_rank(), i);
                }
            }
        }
    }

    #[test]
    fn complement_and_sigma() {
        let s = SubsetIndex::new(vec![1, 3], 4).unwrap();
        assert_eq!(s.complement().elements(), &[2, 4]);
        assert_eq!(s.sigma(), 4);
        assert_eq!(SubsetIndex::empty(3).complement(), SubsetIndex::full(3));
    }

    #[test]
    fn rejects_bad_subsets() {
        assert!(SubsetIndex::new(vec![2, 1], 3).is_err());
        assert!(SubsetIndex::new(vec![1, 1], 3).is_err());
        assert!(matches!(
            SubsetIndex::new(vec![4], 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(SubsetIndex::new(vec![0], 3).is_err());
    }
}
