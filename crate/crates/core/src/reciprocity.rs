//! Counting functions `f(I, J; n)` of glued powers through compound-matrix
//! powers, their negative extension through adjugate powers, and the
//! complement-reciprocity check.

use std::cell::OnceCell;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::network::PlanarNetwork;
use crate::poly::char_poly;
use crate::rational::{format_rational, pow_i64, sign_power, Rational};
use crate::recurrence::LinearRecurrence;
use crate::subset::SubsetIndex;

/// Caches the path matrix, its determinant, and the compound / inverse
/// compound matrices per subset size.
#[derive(Debug)]
pub struct Engine {
    name: String,
    path_matrix: ExactMatrix,
    det: Rational,
    compounds: Vec<OnceCell<ExactMatrix>>,
    inverse_compounds: Vec<OnceCell<ExactMatrix>>,
}

impl Engine {
    pub fn new(net: &PlanarNetwork) -> Self {
        Self::from_path_matrix(net.path_matrix()).expect("path matrices are square")
    }

    pub fn from_path_matrix(path_matrix: ExactMatrix) -> Result<Self> {
        let det = path_matrix.det()?;
        let m = path_matrix.rows();
        Ok(Engine {
            name: "network".into(),
            path_matrix,
            det,
            compounds: (0..=m).map(|_| OnceCell::new()).collect(),
            inverse_compounds: (0..=m).map(|_| OnceCell::new()).collect(),
        })
    }

    /// Label used in reports.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn path_matrix(&self) -> &ExactMatrix {
        &self.path_matrix
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn boundary_size(&self) -> usize {
        self.path_matrix.rows()
    }

    pub fn is_singular(&self) -> bool {
        self.det.is_zero()
    }

    pub fn compound(&self, k: usize) -> Result<&ExactMatrix> {
        let m = self.boundary_size();
        let cell = self
            .compounds
            .get(k)
            .ok_or(Error::KOutOfRange { k, max: m })?;
        if let Some(c) = cell.get() {
            return Ok(c);
        }
        let c = self.path_matrix.compound(k)?;
        Ok(cell.get_or_init(|| c))
    }

    /// `com_k(P)^{-1} = adj_k(P) / det(P)`.
    pub fn inverse_compound(&self, k: usize) -> Result<&ExactMatrix> {
        let m = self.boundary_size();
        let cell = self
            .inverse_compounds
            .get(k)
            .ok_or(Error::KOutOfRange { k, max: m })?;
        if let Some(c) = cell.get() {
            return Ok(c);
        }
        if self.is_singular() {
            return Err(Error::SingularPathMatrix);
        }
        let c = self.path_matrix.adjugate(k)?.scale(&self.det.recip());
        Ok(cell.get_or_init(|| c))
    }

    fn check_pair(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<()> {
        let m = self.boundary_size();
        for s in [i, j] {
            if s.ambient() != m {
                return Err(Error::DimensionMismatch(format!(
                    "subset {s} lives in [{}] but the network has {m} sources",
                    s.ambient()
                )));
            }
        }
        if i.len() != j.len() {
            return Err(Error::SubsetSizeMismatch {
                left: i.len(),
                right: j.len(),
            });
        }
        Ok(())
    }

    /// Row `I` of `base^n`, read at column `J`.
    fn power_entry(base: &ExactMatrix, i: &SubsetIndex, j: &SubsetIndex, n: u64) -> Rational {
        let size = base.rows();
        let mut row = vec![Rational::zero(); size];
        row[i.lex_rank()] = Rational::one();
        for _ in 0..n {
            let mut next = vec![Rational::zero(); size];
            for (r, value) in row.iter().enumerate() {
                if value.is_zero() {
                    continue;
                }
                for (c, slot) in next.iter_mut().enumerate() {
                    let entry = base.get(r, c);
                    if !entry.is_zero() {
                        *slot += value * entry;
                    }
                }
            }
            row = next;
        }
        row.swap_remove(j.lex_rank())
    }

    /// `f(I, J; n) = (com_k(P)^n)_{I,J}` for `n >= 0`.
    pub fn f_value(&self, i: &SubsetIndex, j: &SubsetIndex, n: u64) -> Result<Rational> {
        self.check_pair(i, j)?;
        Ok(Self::power_entry(self.compound(i.len())?, i, j, n))
    }

    /// `f(I, J; -n) = (com_k(P)^{-n})_{I,J}` for `n >= 1`.
    pub fn f_negative(&self, i: &SubsetIndex, j: &SubsetIndex, n: u64) -> Result<Rational> {
        self.check_pair(i, j)?;
        Ok(Self::power_entry(self.inverse_compound(i.len())?, i, j, n))
    }

    /// `f(I, J; n)` for any integer `n`.
    pub fn f_at(&self, i: &SubsetIndex, j: &SubsetIndex, n: i64) -> Result<Rational> {
        if n >= 0 {
            self.f_value(i, j, n as u64)
        } else {
            self.f_negative(i, j, n.unsigned_abs())
        }
    }

    /// Recurrence of order `C(m, k)` from the characteristic polynomial of
    /// `com_k(P)`, seeded with `f(I, J; 0..C(m, k))`.
    pub fn f_recurrence(&self, i: &SubsetIndex, j: &SubsetIndex) -> Result<LinearRecurrence> {
        self.check_pair(i, j)?;
        if self.is_singular() {
            return Err(Error::SingularPathMatrix);
        }
        let compound = self.compound(i.len())?;
        let p = char_poly(compound)?;
        let order = compound.rows();
        let initial = (0..order as u64)
            .map(|n| Self::power_entry(compound, i, j, n))
            .collect();
        LinearRecurrence::from_char_poly(&p, initial)
    }

    /// Compares `f(I, J; -n)` with `(-1)^{σ(I)+σ(J)} det(P)^{-n} f(J^c, I^c; n)`
    /// for `n = 1..=n_max`.
    pub fn check_reciprocity(
        &self,
        i: &SubsetIndex,
        j: &SubsetIndex,
        n_max: u64,
    ) -> Result<ReciprocityReport> {
        self.check_pair(i, j)?;
        if self.is_singular() {
            return Err(Error::SingularPathMatrix);
        }
        let sign = sign_power(i.sigma() + j.sigma());
        let (ic, jc) = (i.complement(), j.complement());
        let mut records = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            let lhs = self.f_negative(i, j, n)?;
            let det_power = pow_i64(&self.det, -(n as i64))?;
            let complementary = self.f_value(&jc, &ic, n)?;
            let rhs = &sign * &det_power * &complementary;
            records.push(ReciprocityRecord {
                n,
                pass: lhs == rhs,
                lhs,
                sign: sign.clone(),
                det_power,
                complementary,
                rhs,
            });
        }
        Ok(ReciprocityReport {
            network: self.name.clone(),
            i: i.clone(),
            j: j.clone(),
            n_max,
            records,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityRecord {
    pub n: u64,
    /// `f(I, J; -n)`.
    pub lhs: Rational,
    /// `(-1)^{σ(I)+σ(J)}`.
    pub sign: Rational,
    /// `det(P)^{-n}`.
    pub det_power: Rational,
    /// `f(J^c, I^c; n)`.
    pub complementary: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub network: String,
    pub i: SubsetIndex,
    pub j: SubsetIndex,
    pub n_max: u64,
    pub records: Vec<ReciprocityRecord>,
}

impl ReciprocityReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}

impl fmt::Display for ReciprocityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "network {}  I = {}  J = {}",
            self.network, self.i, self.j
        )?;
        let rows: Vec<[String; 6]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    format_rational(&r.lhs),
                    format_rational(&r.sign),
                    format_rational(&r.det_power),
                    format_rational(&r.complementary),
                    if r.pass { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let header = ["n", "f(I,J;-n)", "sign", "det^-n", "f(Jc,Ic;n)", "status"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        for row in std::iter::once(&header).chain(rows.iter()) {
            let line: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn f_value(net: &PlanarNetwork, i: &SubsetIndex, j: &SubsetIndex, n: u64) -> Result<Rational> {
    Engine::new(net).f_value(i, j, n)
}

pub fn f_negative(
    net: &PlanarNetwork,
    i: &SubsetIndex,
    j: &SubsetIndex,
    n: u64,
) -> Result<Rational> {
    Engine::new(net).f_negative(i, j, n)
}

pub fn f_recurrence(
    net: &PlanarNetwork,
    i: &SubsetIndex,
    j: &SubsetIndex,
) -> Result<LinearRecurrence> {
    Engine::new(net).f_recurrence(i, j)
}

pub fn check_reciprocity(
    net: &PlanarNetwork,
    i: &SubsetIndex,
    j: &SubsetIndex,
    n_max: u64,
) -> Result<ReciprocityReport> {
    Engine::new(net).check_reciprocity(i, j, n_max)
}
