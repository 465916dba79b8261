//! Univariate polynomials over [`Rational`] and the characteristic polynomial.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::{format_rational, int, Rational};

/// Dense polynomial; `coefficients()[i]` is the coefficient of `x^i`.
/// The zero polynomial has no coefficients and the leading one is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coefficients
            .get(i)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coefficients.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes a square matrix, Horner style.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coefficients.iter().rev() {
            acc = acc.mul(m)?.add(&ExactMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..len)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out =
            vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Keeps only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coefficients.iter().take(len).cloned().collect())
    }

    /// `x^d p(1/x)`; `degree` must be at least the degree of `self`.
    pub fn reversed(&self, degree: usize) -> Self {
        let mut out = vec![Rational::zero(); degree + 1];
        for (i, c) in self.coefficients.iter().enumerate() {
            out[degree - i] = c.clone();
        }
        Self::new(out)
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// `(x, y)` pairs; distinct abscissae required.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        let mut result = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::InvalidPolynomial(
                        "repeated interpolation node".into(),
                    ));
                }
                basis = basis.mul(&Self::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
            result = result.add(&basis.scale(&(yi / denom)));
        }
        Ok(result)
    }
}

/// First `terms` Taylor coefficients of `numerator / denominator`;
/// the denominator must have a nonzero constant term.
pub fn series_quotient(
    numerator: &RationalPolynomial,
    denominator: &RationalPolynomial,
    terms: usize,
) -> Result<Vec<Rational>> {
    let q0 = denominator.coefficient(0);
    if q0.is_zero() {
        return Err(Error::InvalidPolynomial(
            "series denominator has zero constant term".into(),
        ));
    }
    let mut out: Vec<Rational> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut acc = numerator.coefficient(n);
        for i in 1..=n.min(denominator.coefficients.len().saturating_sub(1)) {
            acc -= denominator.coefficient(i) * &out[n - i];
        }
        out.push(acc / &q0);
    }
    Ok(out)
}

/// `det(xI - M)` by the Faddeev–LeVerrier iteration.
pub fn char_poly(m: &ExactMatrix) -> Result<RationalPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    // coeffs[i] is the coefficient of x^i
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let identity = ExactMatrix::identity(n);
    let mut aux = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        aux = m.mul(&aux)?.add(&identity.scale(&coeffs[n - k + 1]))?;
        let trace = m.mul(&aux)?.trace()?;
        coeffs[n - k] = -trace / int(k as i64);
    }
    Ok(RationalPolynomial::new(coeffs))
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let coef = format_rational(&magnitude);
            match (i, magnitude.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = RationalPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RationalPolynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn char_poly_examples() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(
            char_poly(&i2).unwrap(),
            RationalPolynomial::from_i64(&[1, -2, 1])
        );
        let fib = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 2]]);
        assert_eq!(
            char_poly(&fib).unwrap(),
            RationalPolynomial::from_i64(&[1, -3, 1])
        );
        assert_eq!(
            char_poly(&ExactMatrix::from_i64_rows(&[&[2]])).unwrap(),
            RationalPolynomial::from_i64(&[-2, 1])
        );
        assert!(matches!(
            char_poly(&ExactMatrix::zeros(0, 0)),
            Err(Error::EmptyMatrix)
        ));
        assert!(char_poly(&ExactMatrix::zeros(2, 1)).is_err());
    }

    #[test]
    fn cayley_hamilton_on_a_fixed_matrix() {
        let m = ExactMatrix::from_rows(vec![
            vec![frac(1, 2), int(3), int(0)],
            vec![int(-1), int(2), frac(5, 7)],
            vec![int(4), int(0), int(1)],
        ])
        .unwrap();
        let p = char_poly(&m).unwrap();
        assert!(p.eval_matrix(&m).unwrap().is_zero());
        assert_eq!(p.coefficient(0), -m.det().unwrap());
    }

    #[test]
    fn evaluation_and_arithmetic() {
        let p = RationalPolynomial::from_i64(&[1, -3, 1]);
        assert_eq!(p.eval(&int(3)), int(1));
        let q = RationalPolynomial::from_i64(&[-1, 1]);
        assert_eq!(p.mul(&q), RationalPolynomial::from_i64(&[-1, 4, -4, 1]));
        assert_eq!(p.add(&q), RationalPolynomial::from_i64(&[0, -2, 1]));
        assert_eq!(p.to_string(), "x^2 - 3*x + 1");
        assert_eq!(
            RationalPolynomial::new(vec![frac(-1, 2), int(0), int(2)]).to_string(),
            "2*x^2 - 1/2"
        );
    }

    #[test]
    fn series_of_a_quotient() {
        // x / (1 - x - x^2)
        let s = series_quotient(
            &RationalPolynomial::from_i64(&[0, 1]),
            &RationalPolynomial::from_i64(&[1, -1, -1]),
            8,
        )
        .unwrap();
        assert_eq!(s, [0, 1, 1, 2, 3, 5, 8, 13].map(int).to_vec());
        assert!(series_quotient(
            &RationalPolynomial::one(),
            &RationalPolynomial::from_i64(&[0, 1]),
            3
        )
        .is_err());
    }

    #[test]
    fn interpolation_recovers_a_cubic() {
        let p = RationalPolynomial::new(vec![int(2), frac(1, 3), int(0), int(-1)]);
        let points: Vec<_> = (0..4).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(RationalPolynomial::interpolate(&points).unwrap(), p);
    }
}
