//! Dense matrices over [`Rational`].

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, sign_power, Rational};
use crate::subset::{k_subsets, SubsetIndex};

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Rational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Zero-based access.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[Rational]>::to_vec)
            .collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                "cannot add matrices of different shapes".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, factor: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn trace(&self) -> Result<Rational> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i).clone()).sum())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `M^n` by repeated squaring; `M^0 = I`.
    pub fn pow(&self, mut n: u64) -> Result<ExactMatrix> {
        let size = self.require_square()?;
        let mut acc = Self::identity(size);
        let mut square = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&square)?;
            }
            n >>= 1;
            if n > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(acc)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators; the integer
    /// determinant is divided by the product of those scales at the end.
    /// The determinant of the 0x0 matrix is 1.
    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = &self.entries[r * n..(r + 1) * n];
            let lcm = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            a.push(row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect());
            scale *= lcm;
        }
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let value = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = value / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if negate {
            det = -det;
        }
        Ok(Rational::new(det, scale))
    }

    /// `M[I, J]`, keeping the order of `I` and `J`.
    pub fn submatrix(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> Result<ExactMatrix> {
        for (subset, bound) in [(rows, self.rows), (cols, self.cols)] {
            if let Some(&bad) = subset.elements().iter().find(|&&e| e > bound) {
                return Err(Error::IndexOutOfRange { index: bad, bound });
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.zero_based() {
            for c in cols.zero_based() {
                entries.push(self.get(r, c).clone());
            }
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        })
    }

    /// The `k`th compound matrix: all `k x k` minors, subsets in lexicographic order.
    pub fn compound(&self, k: usize) -> Result<ExactMatrix> {
        let m = self.require_square()?;
        if k > m {
            return Err(Error::KOutOfRange { k, max: m });
        }
        let subsets = k_subsets(m, k);
        let size = subsets.len();
        let mut entries = Vec::with_capacity(size * size);
        for i in &subsets {
            for j in &subsets {
                entries.push(self.submatrix(i, j)?.det()?);
            }
        }
        Ok(ExactMatrix {
            rows: size,
            cols: size,
            entries,
        })
    }

    /// The `k`th adjugate: entry `(I, J)` is `(-1)^{σ(I)+σ(J)} det M[J^c, I^c]`.
    pub fn adjugate(&self, k: usize) -> Result<ExactMatrix> {
        let m = self.require_square()?;
        if k > m {
            return Err(Error::KOutOfRange { k, max: m });
        }
        let subsets = k_subsets(m, k);
        let size = subsets.len();
        let mut entries = Vec::with_capacity(size * size);
        for i in &subsets {
            for j in &subsets {
                let minor = self.submatrix(&j.complement(), &i.complement())?.det()?;
                entries.push(sign_power(i.sigma() + j.sigma()) * minor);
            }
        }
        Ok(ExactMatrix {
            rows: size,
            cols: size,
            entries,
        })
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;

    fn index(&self, (row, col): (usize, usize)) -> &Rational {
        self.get(row, col)
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(format_rational).collect();
        let mut widths = vec![0usize; self.cols];
        for (idx, cell) in cells.iter().enumerate() {
            let c = idx % self.cols;
            widths[c] = widths[c].max(cell.len());
        }
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c], width = widths[c]))
                .collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}
