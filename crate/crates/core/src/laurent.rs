//! Sparse Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// `Σ c_n tⁿ` over a finite set of integer exponents; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Scalar> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn monomial(c: T, n: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(n, c);
        p
    }

    /// Ordinary polynomial `c[0] + c[1] t + ...`.
    pub fn from_coeffs(c: &[T]) -> Self {
        let mut p = Self::zero();
        for (n, a) in c.iter().enumerate() {
            p.add_term(n as i64, a.clone());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (n, a) in terms {
            p.add_term(n, a);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: i64) -> T {
        self.coeffs.get(&n).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient of `t⁻¹`.
    pub fn residue(&self) -> T {
        self.coeff(-1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, n: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, c.clone() * s.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (n, a) in self.terms() {
            for (m, b) in other.terms() {
                out.add_term(n + m, a.clone() * b.clone());
            }
        }
        out
    }

    /// Multiplication by `tᵏ`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(n, c)| (n + k, c.clone())).collect(),
        }
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(n, c)| (n - 1, c.clone() * T::from_int(n))))
    }

    pub fn eval(&self, t: &T) -> T {
        let mut acc = T::zero();
        for (n, c) in self.terms() {
            let mut p = T::one();
            if n >= 0 {
                for _ in 0..n {
                    p = p * t.clone();
                }
            } else {
                for _ in 0..(-n) {
                    p = p / t.clone();
                }
            }
            acc = acc + c.clone() * p;
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    /// Descending powers, e.g. `t^2 - 4t + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.clone() < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag_s = mag.to_string();
            let var = match *n {
                0 => String::new(),
                1 => "t".to_string(),
                n => format!("t^{n}"),
            };
            if var.is_empty() {
                f.write_str(&mag_s)?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else if mag_s.contains('/') {
                write!(f, "{mag_s} {var}")?;
            } else {
                write!(f, "{mag_s}{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = LaurentPoly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn derivative_and_residue() {
        // t^-2 + 3t^-1 + t^2
        let p = P::from_terms([(-2, q(1)), (-1, q(3)), (2, q(1))]);
        assert_eq!(p.residue(), q(3));
        let d = p.derivative();
        assert_eq!(d, P::from_terms([(-3, q(-2)), (-2, q(-3)), (1, q(2))]));
        // derivative of a Laurent polynomial never has a residue
        assert!(d.residue() == q(0));
    }

    #[test]
    fn product_cancels_to_zero() {
        let a = P::from_coeffs(&[q(1), q(1)]);
        let b = P::from_coeffs(&[q(1), q(-1)]);
        let c = a.mul(&b);
        assert_eq!(c, P::from_coeffs(&[q(1), q(0), q(-1)]));
        assert!(c.sub(&c).is_zero());
    }

    #[test]
    fn display() {
        let p = P::from_coeffs(&[q(4), q(-4), q(1)]);
        assert_eq!(p.to_string(), "t^2 - 4t + 4");
        let h = P::from_terms([(0, BigRational::new(1.into(), 4.into())), (1, q(-1)), (2, q(1))]);
        assert_eq!(h.to_string(), "t^2 - t + 1/4");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::monomial(q(-2), -1).to_string(), "-2t^-1");
    }
}
