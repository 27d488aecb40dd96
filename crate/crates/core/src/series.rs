//! Truncated power series in a formal variable `x` with `y`-polynomial coefficients.
//!
//! Binary operations carry the minimum order of the operands. Inversion and
//! logarithm need a unit constant term; what counts as a unit depends on the
//! [`CoefficientMode`].

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::ypoly::YPolynomial;

/// How `y`-polynomial coefficients are inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientMode {
    /// Coefficients live in `Q[y]`; the only units are nonzero constants.
    Exact,
    /// Coefficients live in `Q[y] / (y^precision)`; any polynomial with a
    /// nonzero constant coefficient is a unit. Every result is reduced.
    YAdic { precision: u32 },
}

impl CoefficientMode {
    fn reduce<T: Scalar>(self, p: YPolynomial<T>) -> YPolynomial<T> {
        match self {
            CoefficientMode::Exact => p,
            CoefficientMode::YAdic { precision } => p.truncate(precision),
        }
    }

    fn invert<T: Scalar>(self, p: &YPolynomial<T>) -> Result<YPolynomial<T>> {
        match self {
            CoefficientMode::Exact => {
                if p.is_zero() || !p.is_constant() {
                    return Err(Error::NonInvertibleConstant);
                }
                Ok(YPolynomial::constant(T::one() / p.coeff(0)))
            }
            CoefficientMode::YAdic { precision } => p.inverse_mod(precision),
        }
    }
}

/// Operation selector for [`series_arith`].
#[derive(Clone, Copy, Debug)]
pub enum SeriesOp<'a, T> {
    Add(&'a TruncatedSeries<T>),
    Mul(&'a TruncatedSeries<T>),
    InvertUnit,
    Exp,
    LogUnit,
}

/// Single entry point over the series operations, in the given coefficient mode.
pub fn series_arith<T: Scalar>(
    a: &TruncatedSeries<T>,
    op: SeriesOp<'_, T>,
    mode: CoefficientMode,
) -> Result<TruncatedSeries<T>> {
    match op {
        SeriesOp::Add(b) => Ok(a.add(b).reduce(mode)),
        SeriesOp::Mul(b) => Ok(a.mul(b).reduce(mode)),
        SeriesOp::InvertUnit => a.inverse(mode),
        SeriesOp::Exp => a.exp(mode),
        SeriesOp::LogUnit => a.log(mode),
    }
}

/// `sum_{k < order} coefficients[k] * x^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coefficients: Vec<YPolynomial<T>>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads with zeros or cuts `coefficients` to exactly `order` entries.
    pub fn new(mut coefficients: Vec<YPolynomial<T>>, order: usize) -> Self {
        coefficients.resize(order, YPolynomial::zero());
        TruncatedSeries { coefficients }
    }

    pub fn from_scalars(values: impl IntoIterator<Item = T>, order: usize) -> Self {
        Self::new(values.into_iter().map(YPolynomial::constant).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![YPolynomial::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![YPolynomial::zero(), YPolynomial::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[YPolynomial<T>] {
        &self.coefficients
    }

    pub fn coeff(&self, k: usize) -> YPolynomial<T> {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> YPolynomial<T> {
        self.coeff(0)
    }

    /// Re-truncates to a lower (or equal) order.
    pub fn truncated(&self, order: usize) -> Self {
        Self::new(self.coefficients.clone(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..order).map(|k| &self.coefficients[k] + &other.coefficients[k]).collect(),
            order,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![YPolynomial::zero(); order];
        for (i, a) in self.coefficients.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TruncatedSeries { coefficients: out }
    }

    pub fn scale(&self, factor: &T) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Multiplies every coefficient by a `y`-polynomial.
    pub fn mul_coefficient(&self, factor: &YPolynomial<T>) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    /// Reduces each coefficient according to `mode`.
    pub fn reduce(&self, mode: CoefficientMode) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| mode.reduce(c.clone())).collect(),
        }
    }

    /// Divides by `x^k`. The first `k` coefficients must vanish; the order drops by `k`.
    pub fn divide_by_x_power(&self, k: usize) -> Result<Self> {
        if self.coefficients.iter().take(k).any(|c| !c.is_zero()) || k > self.order() {
            return Err(Error::NotDivisibleByX(k));
        }
        Ok(TruncatedSeries {
            coefficients: self.coefficients[k..].to_vec(),
        })
    }

    /// Substitutes `x -> factor * x`.
    pub fn rescale_variable(&self, factor: &T) -> Self {
        let mut power = T::one();
        let mut coefficients = Vec::with_capacity(self.order());
        for c in &self.coefficients {
            coefficients.push(c.scale(&power));
            power = power * factor.clone();
        }
        TruncatedSeries { coefficients }
    }

    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::new(
            (1..self.order())
                .map(|k| self.coefficients[k].scale(&T::from_i64(k as i64)))
                .collect(),
            order,
        )
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut coefficients = Vec::with_capacity(self.order() + 1);
        coefficients.push(YPolynomial::zero());
        for (k, c) in self.coefficients.iter().enumerate() {
            coefficients.push(c.scale(&(T::one() / T::from_i64(k as i64 + 1))));
        }
        TruncatedSeries { coefficients }
    }

    /// Multiplicative inverse; the constant term must be a unit in `mode`.
    pub fn inverse(&self, mode: CoefficientMode) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let inv0 = mode.invert(&self.coefficients[0])?;
        let mut out: Vec<YPolynomial<T>> = Vec::with_capacity(order);
        out.push(inv0.clone());
        for k in 1..order {
            let mut acc = YPolynomial::zero();
            for j in 1..=k {
                let a = &self.coefficients[j];
                if !a.is_zero() {
                    acc = &acc + &(a * &out[k - j]);
                }
            }
            out.push(mode.reduce(-(&acc * &inv0)));
        }
        Ok(TruncatedSeries { coefficients: out })
    }

    /// Logarithm of a series with constant term exactly 1.
    pub fn log(&self, mode: CoefficientMode) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        if self.coefficients[0] != YPolynomial::one() {
            return Err(Error::LogConstantNotOne);
        }
        // log u = integral(u' / u)
        let inverse = self.inverse(mode)?;
        let quotient = self.derivative().mul(&inverse).reduce(mode);
        Ok(quotient.integral().truncated(self.order()))
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self, mode: CoefficientMode) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !self.coefficients[0].is_zero() {
            return Err(Error::ExpConstantNonzero);
        }
        // k e_k = sum_{j=1}^{k} j g_j e_{k-j}
        let mut out: Vec<YPolynomial<T>> = Vec::with_capacity(order);
        out.push(YPolynomial::one());
        for k in 1..order {
            let mut acc = YPolynomial::zero();
            for j in 1..=k {
                let g = &self.coefficients[j];
                if !g.is_zero() {
                    acc = &acc + &(g * &out[k - j]).scale(&T::from_i64(j as i64));
                }
            }
            out.push(mode.reduce(acc.scale(&(T::one() / T::from_i64(k as i64)))));
        }
        Ok(TruncatedSeries { coefficients: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(YPolynomial::is_zero)
    }
}

impl<T: Scalar> TruncatedSeries<T> {
    /// `e^{-x}` to the given order.
    pub fn exp_neg_x(order: usize) -> Self {
        let mut coefficients = Vec::with_capacity(order);
        let mut term = T::one();
        for k in 0..order {
            if k > 0 {
                term = term / T::from_i64(-(k as i64));
            }
            coefficients.push(YPolynomial::constant(term.clone()));
        }
        TruncatedSeries { coefficients }
    }
}
