//! Sparse univariate polynomials in the formal variable `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{format_magnitude, Scalar};

/// Polynomial in `y`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct YPolynomial<T> {
    coeffs: BTreeMap<u32, T>,
}

impl<T: Scalar> Default for YPolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> YPolynomial<T> {
    pub fn zero() -> Self {
        YPolynomial { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(value: T) -> Self {
        Self::monomial(0, value)
    }

    pub fn monomial(exponent: u32, value: T) -> Self {
        let mut coeffs = BTreeMap::new();
        if !value.is_zero() {
            coeffs.insert(exponent, value);
        }
        YPolynomial { coeffs }
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::monomial(1, T::one())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, T)>) -> Self {
        let mut out = Self::zero();
        for (exponent, value) in terms {
            out.add_term(exponent, value);
        }
        out
    }

    /// Builds from a dense coefficient list, index = exponent.
    pub fn from_dense(values: impl IntoIterator<Item = T>) -> Self {
        Self::from_terms(values.into_iter().enumerate().map(|(i, v)| (i as u32, v)))
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::from_dense(values.iter().map(|&v| T::from_i64(v)))
    }

    pub fn add_term(&mut self, exponent: u32, value: T) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.remove(&exponent) {
            Some(existing) => {
                let sum = existing + value;
                if !sum.is_zero() {
                    self.coeffs.insert(exponent, sum);
                }
            }
            None => {
                self.coeffs.insert(exponent, value);
            }
        }
    }

    pub fn coeff(&self, exponent: u32) -> T {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> + '_ {
        self.coeffs.iter().map(|(&e, v)| (e, v))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(e, v)| (e, v.clone() * factor.clone())))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = &out * self;
        }
        out
    }

    /// The polynomial of degree `< points.len()` through the given `(y, value)`
    /// pairs, by Newton divided differences. Nodes must be distinct.
    pub fn interpolate(points: &[(T, T)]) -> Self {
        let m = points.len();
        if m == 0 {
            return Self::zero();
        }
        let nodes: Vec<T> = points.iter().map(|(y, _)| y.clone()).collect();
        let mut diffs: Vec<T> = points.iter().map(|(_, v)| v.clone()).collect();
        for level in 1..m {
            for i in (level..m).rev() {
                diffs[i] = (diffs[i].clone() - diffs[i - 1].clone()) / (nodes[i].clone() - nodes[i - level].clone());
            }
        }
        let mut out = Self::constant(diffs[m - 1].clone());
        for i in (0..m - 1).rev() {
            let linear = &Self::y() - &Self::constant(nodes[i].clone());
            out = &(&out * &linear) + &Self::constant(diffs[i].clone());
        }
        out
    }

    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        let mut last = self.degree().unwrap_or(0);
        for (e, v) in self.coeffs.iter().rev() {
            for _ in *e..last {
                acc = acc * at.clone();
            }
            acc = acc + v.clone();
            last = *e;
        }
        for _ in 0..last {
            acc = acc * at.clone();
        }
        acc
    }

    /// Drops every term of degree `>= precision` (reduction mod `y^precision`).
    pub fn truncate(&self, precision: u32) -> Self {
        YPolynomial {
            coeffs: self
                .coeffs
                .range(..precision)
                .map(|(&e, v)| (e, v.clone()))
                .collect(),
        }
    }

    /// Multiplies by `y^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        YPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Divides by `y^k`; fails unless every exponent is at least `k`.
    pub fn shift_down(&self, k: u32) -> Option<Self> {
        if self.coeffs.keys().any(|&e| e < k) {
            return None;
        }
        Some(YPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e - k, v.clone())).collect(),
        })
    }

    /// `y^bound * p(1/y)`, i.e. the coefficient list reversed about `bound`.
    pub fn reciprocal(&self, bound: u32) -> Result<Self> {
        match self.degree() {
            Some(degree) if degree > bound => Err(Error::DegreeTooLarge { degree, bound }),
            _ => Ok(YPolynomial {
                coeffs: self.coeffs.iter().map(|(&e, v)| (bound - e, v.clone())).collect(),
            }),
        }
    }

    /// Re-expands around `y = -1`: returns `q` with `q(u) = p(u - 1)`, so the
    /// coefficient of `u^i` in `q` is the i-th Taylor coefficient at `y = -1`.
    pub fn taylor_at_minus_one(&self) -> Self {
        // p(u - 1) = sum_e c_e sum_i C(e, i) u^i (-1)^(e - i)
        let mut out = Self::zero();
        for (e, v) in self.terms() {
            let mut binom = BigInt::from(1);
            for i in 0..=e {
                let sign = if (e - i) % 2 == 0 { T::one() } else { -T::one() };
                out.add_term(i, v.clone() * T::from_bigint(&binom) * sign);
                binom = binom * BigInt::from(e - i) / BigInt::from(i + 1);
            }
        }
        out
    }

    /// Substitutes `y -> -y^2`.
    pub fn substitute_neg_y_squared(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, v)| {
            let value = if e % 2 == 0 { v.clone() } else { -v.clone() };
            (2 * e, value)
        }))
    }

    /// Inverse modulo `y^precision`; needs a nonzero constant term.
    pub fn inverse_mod(&self, precision: u32) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::NonInvertibleConstant);
        }
        let inv0 = T::one() / c0;
        let mut out: Vec<T> = Vec::with_capacity(precision as usize);
        for k in 0..precision {
            if k == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = T::zero();
            for (e, v) in self.coeffs.range(1..=k) {
                acc = acc + v.clone() * out[(k - e) as usize].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self::from_dense(out))
    }
}

impl<'a, T: Scalar> Add<&'a YPolynomial<T>> for &'a YPolynomial<T> {
    type Output = YPolynomial<T>;

    fn add(self, rhs: &'a YPolynomial<T>) -> YPolynomial<T> {
        let mut out = self.clone();
        for (e, v) in rhs.terms() {
            out.add_term(e, v.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Sub<&'a YPolynomial<T>> for &'a YPolynomial<T> {
    type Output = YPolynomial<T>;

    fn sub(self, rhs: &'a YPolynomial<T>) -> YPolynomial<T> {
        let mut out = self.clone();
        for (e, v) in rhs.terms() {
            out.add_term(e, -v.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Mul<&'a YPolynomial<T>> for &'a YPolynomial<T> {
    type Output = YPolynomial<T>;

    fn mul(self, rhs: &'a YPolynomial<T>) -> YPolynomial<T> {
        let mut out = YPolynomial::zero();
        for (a, va) in self.terms() {
            for (b, vb) in rhs.terms() {
                out.add_term(a + b, va.clone() * vb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Add for YPolynomial<T> {
    type Output = YPolynomial<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for YPolynomial<T> {
    type Output = YPolynomial<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for YPolynomial<T> {
    type Output = YPolynomial<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for YPolynomial<T> {
    type Output = YPolynomial<T>;
    fn neg(self) -> Self {
        YPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, v)| (e, -v)).collect(),
        }
    }
}

impl<T: Scalar> Neg for &YPolynomial<T> {
    type Output = YPolynomial<T>;
    fn neg(self) -> YPolynomial<T> {
        -self.clone()
    }
}

impl<T: Scalar> fmt::Display for YPolynomial<T> {
    /// Ascending powers, e.g. `(1/2) - (1/2)*y + y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, v)) in self.terms().enumerate() {
            let negative = v.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = v.abs();
            let var = match e {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{e}"),
            };
            if var.is_empty() {
                f.write_str(&format_magnitude(&magnitude))?;
            } else if magnitude.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", format_magnitude(&magnitude), var)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = YPolynomial<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = P::from_integers(&[1, 0, 2, 0]);
        assert_eq!(p.terms().count(), 2);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(P::from_integers(&[1, -1, 1]).to_string(), "1 - y + y^2");
        let p = P::from_dense([q(1, 2), q(-1, 2)]);
        assert_eq!(p.to_string(), "(1/2) - (1/2)*y");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_integers(&[0, 0, -3]).to_string(), "-3*y^2");
    }

    #[test]
    fn taylor_shift_matches_substitution() {
        // 1 - y + y^2 at y = u - 1 is 3 - 3u + u^2
        let p = P::from_integers(&[1, -1, 1]);
        assert_eq!(p.taylor_at_minus_one(), P::from_integers(&[3, -3, 1]));
    }

    #[test]
    fn reciprocal_and_errors() {
        let p = P::from_integers(&[2, -20, 2]);
        assert_eq!(p.reciprocal(2).unwrap(), p);
        assert_eq!(
            P::from_integers(&[1, 2]).reciprocal(3).unwrap(),
            P::from_integers(&[0, 0, 2, 1])
        );
        assert!(P::from_integers(&[0, 0, 1]).reciprocal(1).is_err());
    }

    #[test]
    fn inverse_mod_y_power() {
        let p = P::from_integers(&[1, 1]);
        let inv = p.inverse_mod(5).unwrap();
        assert_eq!(inv, P::from_integers(&[1, -1, 1, -1, 1]));
        assert_eq!((&p * &inv).truncate(5), P::one());
        assert!(P::y().inverse_mod(3).is_err());
    }

    #[test]
    fn eval_and_substitution() {
        let p = P::from_integers(&[1, -2, 1]);
        assert_eq!(p.eval(&q(3, 1)), q(4, 1));
        assert_eq!(p.substitute_neg_y_squared(), P::from_integers(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = YPolynomial::<Rational>::from_integers(&[3, 0, -2, 5]);
        let points: Vec<_> = (0..4).map(|j| (Rational::from_i64(j), p.eval(&Rational::from_i64(j)))).collect();
        assert_eq!(YPolynomial::interpolate(&points), p);
        assert!(YPolynomial::<Rational>::interpolate(&[]).is_zero());
    }
}
