//! Linear recurrences with constant coefficients
//! `f(n+d) + a_1 f(n+d-1) + ... + a_d f(n) = 0`, their backward extension to
//! negative indices, and their rational generating functions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{series_quotient, RationalPolynomial};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    /// `a_1, ..., a_d`; `a_d != 0` when `d >= 1`.
    coefficients: Vec<Rational>,
    /// `f(0), ..., f(d-1)`.
    initial: Vec<Rational>,
}

/// `F(x) = P(x) / Q(x)` with `Q(0) = 1` and `deg P < deg Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: RationalPolynomial,
    pub denominator: RationalPolynomial,
}

impl RationalGF {
    pub fn series(&self, terms: usize) -> Vec<Rational> {
        series_quotient(&self.numerator, &self.denominator, terms).expect("Q(0) = 1")
    }

    /// Coefficients of `x^1, ..., x^terms` in the expansion of `-F(1/x)`.
    ///
    /// Numerator and denominator are multiplied by `x^{deg Q}`; the new
    /// denominator has constant term `a_d != 0` and the new numerator has
    /// no constant term because `deg P < deg Q`.
    pub fn negative_series(&self, terms: usize) -> Vec<Rational> {
        let d = self.denominator.degree().unwrap_or(0);
        let numerator = self.numerator.reversed(d).scale(&-Rational::one());
        let denominator = self.denominator.reversed(d);
        let series = series_quotient(&numerator, &denominator, terms + 1).expect("a_d != 0");
        series.into_iter().skip(1).collect()
    }
}

impl LinearRecurrence {
    pub fn new(coefficients: Vec<Rational>, initial: Vec<Rational>) -> Result<Self> {
        if coefficients.len() != initial.len() {
            return Err(Error::InvalidRecurrence(format!(
                "order {} needs {} initial values, got {}",
                coefficients.len(),
                coefficients.len(),
                initial.len()
            )));
        }
        if coefficients.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidRecurrence(
                "last coefficient a_d must be nonzero".into(),
            ));
        }
        Ok(LinearRecurrence {
            coefficients,
            initial,
        })
    }

    /// The identically-zero function.
    pub fn zero_order() -> Self {
        LinearRecurrence {
            coefficients: Vec::new(),
            initial: Vec::new(),
        }
    }

    /// Reads `a_i` as the coefficient of `x^{d-i}` of a monic `p`.
    pub fn from_char_poly(p: &RationalPolynomial, initial: Vec<Rational>) -> Result<Self> {
        let Some(d) = p.degree() else {
            return Err(Error::InvalidPolynomial("zero polynomial".into()));
        };
        if !p.is_monic() {
            return Err(Error::InvalidPolynomial(format!("`{p}` is not monic")));
        }
        if d >= 1 && p.coefficient(0).is_zero() {
            return Err(Error::InvalidRecurrence(
                "p(0) = 0, so a_d would vanish".into(),
            ));
        }
        let coefficients = (1..=d).map(|i| p.coefficient(d - i)).collect();
        Self::new(coefficients, initial)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn initial_values(&self) -> &[Rational] {
        &self.initial
    }

    /// `x^d + a_1 x^{d-1} + ... + a_d`.
    pub fn char_poly(&self) -> RationalPolynomial {
        let d = self.order();
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        for (i, a) in self.coefficients.iter().enumerate() {
            coeffs[d - 1 - i] = a.clone();
        }
        RationalPolynomial::new(coeffs)
    }

    /// `f(0), ..., f(len-1)`.
    pub fn forward_terms(&self, len: usize) -> Vec<Rational> {
        let d = self.order();
        if d == 0 {
            return vec![Rational::zero(); len];
        }
        let mut values: Vec<Rational> = self.initial.iter().take(len).cloned().collect();
        while values.len() < len {
            let n = values.len();
            let next: Rational = self
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, a)| a * &values[n - 1 - i])
                .sum();
            values.push(-next);
        }
        values
    }

    pub fn eval_forward(&self, n: u64) -> Rational {
        let d = self.order();
        if d == 0 {
            return Rational::zero();
        }
        let n = usize::try_from(n).expect("index fits in memory");
        if n < d {
            return self.initial[n].clone();
        }
        // sliding window of the last d values
        let mut window: Vec<Rational> = self.initial.clone();
        for _ in d..=n {
            let next: Rational = self
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, a)| a * &window[d - 1 - i])
                .sum();
            window.remove(0);
            window.push(-next);
        }
        window.pop().expect("d >= 1")
    }

    /// `f(-1), ..., f(-len)` by running the recurrence backwards.
    pub fn backward_terms(&self, len: usize) -> Result<Vec<Rational>> {
        let d = self.order();
        if d == 0 {
            return Err(Error::InvalidRecurrence(
                "order 0 has no backward extension".into(),
            ));
        }
        let last = &self.coefficients[d - 1];
        // window[t] = f(low + t), starting with low = 0
        let mut window: Vec<Rational> = self.initial.clone();
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            // f(low - 1) = -(f(low - 1 + d) + a_1 f(low - 2 + d) + ... + a_{d-1} f(low)) / a_d
            let mut acc = window[d - 1].clone();
            for i in 1..d {
                acc += &self.coefficients[i - 1] * &window[d - 1 - i];
            }
            let value = -acc / last;
            window.pop();
            window.insert(0, value.clone());
            out.push(value);
        }
        Ok(out)
    }

    pub fn extend_negative(&self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::InvalidRecurrence(
                "extend_negative needs n >= 1".into(),
            ));
        }
        let n = usize::try_from(n).expect("index fits in memory");
        Ok(self.backward_terms(n)?.pop().expect("n >= 1"))
    }

    /// `f(n)` for any integer `n`.
    pub fn value(&self, n: i64) -> Result<Rational> {
        if n >= 0 {
            Ok(self.eval_forward(n as u64))
        } else {
            self.extend_negative(n.unsigned_abs())
        }
    }

    pub fn generating_function(&self) -> Result<RationalGF> {
        let d = self.order();
        if d == 0 {
            return Err(Error::InvalidRecurrence(
                "order 0 has no proper generating function".into(),
            ));
        }
        let mut q = vec![Rational::one()];
        q.extend(self.coefficients.iter().cloned());
        let denominator = RationalPolynomial::new(q);
        let initial = RationalPolynomial::new(self.initial.clone());
        let numerator = denominator.mul(&initial).truncate(d);
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    /// Compares the expansion of `-F(1/x)` with the backward iteration.
    pub fn negative_series_check(&self, terms: usize) -> Result<bool> {
        let gf = self.generating_function()?;
        Ok(gf.negative_series(terms) == self.backward_terms(terms)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    fn fibonacci() -> LinearRecurrence {
        LinearRecurrence::new(ints(&[-1, -1]), ints(&[0, 1])).unwrap()
    }

    fn dyck_one_one() -> LinearRecurrence {
        LinearRecurrence::from_char_poly(&RationalPolynomial::from_i64(&[1, -3, 1]), ints(&[1, 1]))
            .unwrap()
    }

    #[test]
    fn from_char_poly_examples() {
        let r = dyck_one_one();
        assert_eq!(r.coefficients(), ints(&[-3, 1]).as_slice());
        assert_eq!(r.eval_forward(2), int(2));
        assert_eq!(r.forward_terms(5), ints(&[1, 1, 2, 5, 13]));
        let c = LinearRecurrence::from_char_poly(
            &RationalPolynomial::from_i64(&[-1, 1]),
            vec![frac(7, 3)],
        )
        .unwrap();
        assert_eq!(c.eval_forward(9), frac(7, 3));
        let g =
            LinearRecurrence::from_char_poly(&RationalPolynomial::from_i64(&[-2, 1]), ints(&[1]))
                .unwrap();
        assert_eq!(g.eval_forward(10), int(1024));
    }

    #[test]
    fn from_char_poly_errors() {
        let vanishing = RationalPolynomial::from_i64(&[0, -3, 1]);
        assert!(matches!(
            LinearRecurrence::from_char_poly(&vanishing, ints(&[1, 1])),
            Err(Error::InvalidRecurrence(_))
        ));
        let p = RationalPolynomial::from_i64(&[1, -3, 1]);
        assert!(LinearRecurrence::from_char_poly(&p, ints(&[1])).is_err());
        assert!(LinearRecurrence::from_char_poly(
            &RationalPolynomial::from_i64(&[1, 2]),
            ints(&[1])
        )
        .is_err());
    }

    #[test]
    fn forward_examples() {
        assert_eq!(fibonacci().eval_forward(10), int(55));
        assert_eq!(LinearRecurrence::zero_order().eval_forward(5), int(0));
    }

    #[test]
    fn backward_examples() {
        let f = fibonacci();
        assert_eq!(f.backward_terms(3).unwrap(), ints(&[1, -1, 2]));
        let g = LinearRecurrence::new(ints(&[-2]), ints(&[1])).unwrap();
        assert_eq!(g.extend_negative(3).unwrap(), frac(1, 8));
        let d = dyck_one_one();
        assert_eq!(d.extend_negative(1).unwrap(), int(2));
        assert_eq!(d.extend_negative(2).unwrap(), int(5));
        assert!(LinearRecurrence::zero_order().extend_negative(1).is_err());
        assert_eq!(d.value(-2).unwrap(), int(5));
        assert_eq!(d.value(4).unwrap(), int(13));
    }

    #[test]
    fn generating_functions() {
        let c = LinearRecurrence::new(ints(&[-1]), ints(&[4])).unwrap();
        let gf = c.generating_function().unwrap();
        assert_eq!(gf.numerator, RationalPolynomial::from_i64(&[4]));
        assert_eq!(gf.denominator, RationalPolynomial::from_i64(&[1, -1]));
        let fib = fibonacci().generating_function().unwrap();
        assert_eq!(fib.numerator, RationalPolynomial::from_i64(&[0, 1]));
        assert_eq!(fib.denominator, RationalPolynomial::from_i64(&[1, -1, -1]));
        assert_eq!(fib.series(6), ints(&[0, 1, 1, 2, 3, 5]));
        let d = dyck_one_one().generating_function().unwrap();
        assert_eq!(d.numerator, RationalPolynomial::from_i64(&[1, -2]));
        assert_eq!(d.denominator, RationalPolynomial::from_i64(&[1, -3, 1]));
        assert_eq!(d.series(5), ints(&[1, 1, 2, 5, 13]));
        assert!(LinearRecurrence::zero_order()
            .generating_function()
            .is_err());
    }

    #[test]
    fn negative_series() {
        assert!(fibonacci().negative_series_check(6).unwrap());
        let g = LinearRecurrence::new(ints(&[-2]), ints(&[1])).unwrap();
        assert!(g.negative_series_check(4).unwrap());
        assert_eq!(
            g.generating_function().unwrap().negative_series(2),
            vec![frac(1, 2), frac(1, 4)]
        );
        let c = LinearRecurrence::new(ints(&[-1]), ints(&[3])).unwrap();
        assert!(c.negative_series_check(3).unwrap());
        assert_eq!(c.backward_terms(3).unwrap(), ints(&[3, 3, 3]));
    }

    #[test]
    fn annihilator_choice_does_not_matter() {
        // Fibonacci also satisfies (x^2 - x - 1)(x + 2)
        let p =
            RationalPolynomial::from_i64(&[-1, -1, 1]).mul(&RationalPolynomial::from_i64(&[2, 1]));
        let wider = LinearRecurrence::from_char_poly(&p, ints(&[0, 1, 1])).unwrap();
        assert_eq!(wider.forward_terms(12), fibonacci().forward_terms(12));
        assert_eq!(
            wider.backward_terms(10).unwrap(),
            fibonacci().backward_terms(10).unwrap()
        );
    }
}
