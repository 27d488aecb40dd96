//! Formal linear combinations of Chern monomials and concrete Chern numbers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{format_magnitude, Scalar};
use crate::ypoly::YPolynomial;

/// `sum_I coeff_I(y) * c_I` over partitions `I`.
///
/// When `grade` is set every stored partition has that weight. Equality
/// compares terms only.
#[derive(Clone, Debug)]
pub struct ChernPolynomial<T> {
    terms: BTreeMap<Partition, YPolynomial<T>>,
    grade: Option<u32>,
}

impl<T: Scalar> PartialEq for ChernPolynomial<T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<T: Scalar> ChernPolynomial<T> {
    pub fn zero(grade: Option<u32>) -> Self {
        ChernPolynomial { terms: BTreeMap::new(), grade }
    }

    /// The constant `1` (empty monomial), grade 0.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), YPolynomial::one())
    }

    pub fn monomial(partition: Partition, coefficient: YPolynomial<T>) -> Self {
        let grade = Some(partition.weight());
        let mut out = Self::zero(grade);
        out.add_term(partition, coefficient);
        out
    }

    /// `value * c_I` with a scalar coefficient.
    pub fn scalar_monomial(partition: Partition, value: T) -> Self {
        Self::monomial(partition, YPolynomial::constant(value))
    }

    /// The Chern class `c_k`.
    pub fn chern_class(k: u32) -> Self {
        Self::scalar_monomial(Partition::single(k), T::one())
    }

    /// Builds from `(parts, value)` pairs with scalar coefficients.
    pub fn from_scalar_terms<I, P>(grade: Option<u32>, terms: I) -> Self
    where
        I: IntoIterator<Item = (P, T)>,
        P: IntoIterator<Item = u32>,
    {
        let mut out = Self::zero(grade);
        for (parts, value) in terms {
            out.add_term(Partition::new(parts), YPolynomial::constant(value));
        }
        out
    }

    pub fn grade(&self) -> Option<u32> {
        self.grade
    }

    /// Grade if set, otherwise the common weight of all terms when there is one.
    pub fn common_weight(&self) -> Option<u32> {
        if self.grade.is_some() {
            return self.grade;
        }
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn with_grade(mut self, grade: Option<u32>) -> Self {
        if let Some(g) = grade {
            assert!(
                self.terms.keys().all(|p| p.weight() == g),
                "terms do not all have weight {g}"
            );
        }
        self.grade = grade;
        self
    }

    pub fn add_term(&mut self, partition: Partition, coefficient: YPolynomial<T>) {
        if let Some(g) = self.grade {
            assert_eq!(partition.weight(), g, "partition {partition} has wrong weight");
        }
        if coefficient.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&partition) {
            Some(existing) => &existing + &coefficient,
            None => coefficient,
        };
        if !sum.is_zero() {
            self.terms.insert(partition, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &YPolynomial<T>)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, partition: &Partition) -> YPolynomial<T> {
        self.terms.get(partition).cloned().unwrap_or_default()
    }

    /// Scalar coefficient of `c_I`; the coefficient must not depend on `y`.
    pub fn scalar_coefficient(&self, partition: &Partition) -> T {
        let c = self.coefficient(partition);
        debug_assert!(c.is_constant(), "coefficient of {partition} depends on y");
        c.coeff(0)
    }

    pub fn is_y_free(&self) -> bool {
        self.terms.values().all(YPolynomial::is_constant)
    }

    fn merged_grade(&self, other: &Self) -> Option<u32> {
        match (self.grade, other.grade) {
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(a), None) if other.is_zero() => Some(a),
            (None, Some(b)) if self.is_zero() => Some(b),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.grade = self.merged_grade(other);
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map_coefficients(|c| c.scale(factor))
    }

    pub fn scale_poly(&self, factor: &YPolynomial<T>) -> Self {
        self.map_coefficients(|c| c * factor)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients(&self, mut f: impl FnMut(&YPolynomial<T>) -> YPolynomial<T>) -> Self {
        let mut out = Self::zero(self.grade);
        for (p, c) in self.terms() {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with every monomial of weight above `max_weight` discarded.
    pub fn mul_truncated(&self, other: &Self, max_weight: u32) -> Self {
        let grade = match (self.grade, other.grade) {
            (Some(a), Some(b)) if a + b <= max_weight => Some(a + b),
            _ => None,
        };
        let mut out = Self::zero(grade);
        for (pa, ca) in self.terms() {
            for (pb, cb) in other.terms() {
                if pa.weight() + pb.weight() > max_weight {
                    continue;
                }
                out.add_term(pa.merge(pb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }

    /// The weight-`w` part, graded `w`.
    pub fn component(&self, weight: u32) -> Self {
        let mut out = Self::zero(Some(weight));
        for (p, c) in self.terms() {
            if p.weight() == weight {
                out.add_term(p.clone(), c.clone());
            }
        }
        out
    }

    /// Reduces coefficients mod `y^precision`.
    pub fn truncate_y(&self, precision: u32) -> Self {
        self.map_coefficients(|c| c.truncate(precision))
    }

    /// Evaluates at concrete Chern numbers; every monomial must have weight `chern.dimension()`.
    pub fn evaluate(&self, chern: &ChernNumbers) -> Result<YPolynomial<T>> {
        let n = chern.dimension();
        if self.grade.is_some_and(|g| g != n) || self.terms.keys().any(|p| p.weight() != n) {
            return Err(Error::GradeMismatch { formula: self.common_weight(), dimension: n });
        }
        let mut out = YPolynomial::zero();
        for (p, c) in self.terms() {
            let value = chern.get(p);
            if value != 0 {
                out = &out + &c.scale(&T::from_i64(value));
            }
        }
        Ok(out)
    }
}

impl<T: Scalar> fmt::Display for ChernPolynomial<T> {
    /// Canonical text form: largest partition first, e.g. `(7/6)*c4 + (1/12)*c1*c3`.
    /// Coefficients that depend on `y` are bracketed: `((1/2) - (1/2)*y)*c1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().rev().enumerate() {
            let label = p.monomial_label();
            if c.is_constant() {
                let value = c.coeff(0);
                let negative = value.is_negative();
                match (i, negative) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                let magnitude = value.abs();
                if p.is_empty() {
                    f.write_str(&format_magnitude(&magnitude))?;
                } else if magnitude.is_one() {
                    f.write_str(&label)?;
                } else {
                    write!(f, "{}*{}", format_magnitude(&magnitude), label)?;
                }
            } else {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                if p.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{label}")?;
                }
            }
        }
        Ok(())
    }
}

/// Integer values of the Chern numbers `c_I[M]` for a fixed complex dimension.
/// Missing partitions read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumbers {
    dimension: u32,
    values: BTreeMap<Partition, i64>,
}

impl ChernNumbers {
    pub fn new(dimension: u32) -> Self {
        ChernNumbers { dimension, values: BTreeMap::new() }
    }

    pub fn from_values(
        dimension: u32,
        values: impl IntoIterator<Item = (Partition, i64)>,
    ) -> Result<Self> {
        let mut out = Self::new(dimension);
        for (p, v) in values {
            out.insert(p, v)?;
        }
        Ok(out)
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn insert(&mut self, partition: Partition, value: i64) -> Result<()> {
        let weight = partition.weight();
        if weight != self.dimension {
            return Err(Error::PartitionWeight {
                partition: partition.key(),
                weight,
                expected: self.dimension,
            });
        }
        if value == 0 {
            self.values.remove(&partition);
        } else {
            self.values.insert(partition, value);
        }
        Ok(())
    }

    pub fn get(&self, partition: &Partition) -> i64 {
        self.values.get(partition).copied().unwrap_or(0)
    }

    /// Nonzero entries in graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.values.iter().map(|(p, &v)| (p, v))
    }

    /// `c_1 c_{n-1}` (which is `c_1^2` when `n = 2`); `None` for `n = 0`.
    pub fn c1_cn1(&self) -> Option<i64> {
        (self.dimension >= 1).then(|| self.get(&Partition::new([1, self.dimension - 1])))
    }

    /// `c_2 c_{n-2}`; `None` for `n < 2`.
    pub fn c2_cn2(&self) -> Option<i64> {
        (self.dimension >= 2).then(|| self.get(&Partition::new([2, self.dimension - 2])))
    }

    pub fn top(&self) -> i64 {
        self.get(&Partition::single(self.dimension))
    }
}
