//! Integer partitions and skew shapes.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are dropped on input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} has an interior zero"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn single_row(m: usize) -> Self {
        Partition {
            parts: if m == 0 { Vec::new() } else { vec![m] },
        }
    }

    pub fn single_column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` (1-based); zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `μ ⊆ λ` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                go(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(
            outer: &[usize],
            row: usize,
            max: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if row == outer.len() {
                return;
            }
            for p in 1..=outer[row].min(max) {
                prefix.push(p);
                go(outer, row + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }

    /// Cells `(row, col)`, 1-based, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|i| ((self.inner.part(i) + 1)..=self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Every skew shape `λ/μ` with `|λ| <= max_size`.
    pub fn all_up_to(max_size: usize) -> Vec<SkewShape> {
        (0..=max_size)
            .flat_map(Partition::all_of_size)
            .flat_map(|outer| {
                outer
                    .subpartitions()
                    .into_iter()
                    .map(move |inner| SkewShape {
                        outer: outer.clone(),
                        inner,
                    })
            })
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::staircase(4).parts(), &[3, 2, 1]);
        assert!(Partition::staircase(1).is_empty());
        assert_eq!(p(&[3, 3, 1]).size(), 7);
    }

    #[test]
    fn transposes() {
        assert_eq!(p(&[3, 3, 1]).transpose(), p(&[3, 2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[1, 1, 1, 1]).transpose(), p(&[4]));
        for n in 0..=7 {
            for lambda in Partition::all_of_size(n) {
                assert_eq!(lambda.transpose().transpose(), lambda);
            }
        }
    }

    #[test]
    fn enumerations() {
        let counts: Vec<usize> = (0..=7).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
        assert_eq!(SkewShape::all_up_to(2).len(), 1 + 2 + 3 + 3);
    }

    #[test]
    fn skew_shapes() {
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(
            s.transpose(),
            SkewShape::new(p(&[2, 2, 1]), p(&[1])).unwrap()
        );
        assert_eq!(s.to_string(), "(3,2)/(1)");
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
    }
}
