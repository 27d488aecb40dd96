//! Symmetric-function conversions and multiplicative-genus expansion.
//!
//! Chern classes are the elementary symmetric functions of the Chern roots,
//! so a Chern monomial `c_I` is the elementary monomial `e_I`.

use std::collections::BTreeMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::ChernPolynomial;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::series::{CoefficientMode, TruncatedSeries};
use crate::ypoly::YPolynomial;

type IntegerTerms = BTreeMap<Partition, BigInt>;

/// `NEWTON[k - 1]` holds the power sum `p_k` in the elementary basis.
static NEWTON: RwLock<Vec<IntegerTerms>> = RwLock::new(Vec::new());

fn add_into(target: &mut IntegerTerms, partition: Partition, value: BigInt) {
    if value.is_zero() {
        return;
    }
    let entry = target.entry(partition).or_insert_with(BigInt::zero);
    *entry += value;
    if entry.is_zero() {
        target.retain(|_, v| !v.is_zero());
    }
}

fn power_sum_terms(k: u32) -> IntegerTerms {
    assert!(k >= 1, "power sums start at p_1");
    if let Some(terms) = NEWTON.read().expect("newton cache poisoned").get(k as usize - 1) {
        return terms.clone();
    }
    let mut cache = NEWTON.write().expect("newton cache poisoned");
    while cache.len() < k as usize {
        let m = cache.len() as u32 + 1;
        // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
        let mut terms = IntegerTerms::new();
        for i in 1..m {
            let sign = if (i - 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let e_i = Partition::single(i);
            for (p, v) in &cache[(m - i) as usize - 1] {
                add_into(&mut terms, p.merge(&e_i), &sign * v);
            }
        }
        let sign: i64 = if (m - 1) % 2 == 0 { 1 } else { -1 };
        add_into(&mut terms, Partition::single(m), BigInt::from(sign * m as i64));
        cache.push(terms);
    }
    cache[k as usize - 1].clone()
}

/// The power sum `p_k = sum_i x_i^k` written in Chern (elementary) monomials.
/// Coefficients are integers; the result has grade `k`.
pub fn power_sum_in_elementary<T: Scalar>(k: u32) -> ChernPolynomial<T> {
    let mut out = ChernPolynomial::zero(Some(k));
    for (p, v) in power_sum_terms(k) {
        out.add_term(p, YPolynomial::constant(T::from_bigint(&v)));
    }
    out
}

/// Degree-`n` part of `prod_{i=1}^{n} factor(x_i)`, written in Chern monomials.
///
/// The factor is normalised to constant term 1, its logarithm `sum_k g_k x^k`
/// turns the product into `exp(sum_k g_k p_k)`, which is exponentiated in the
/// ring of Chern polynomials truncated at weight `n`.
///
/// A constant term that is a nonzero rational is inverted exactly. A constant
/// term that is a genuine `y`-polynomial (such as `1 + y`) is inverted
/// `y`-adically to a precision at which the final, polynomial, answer is exact.
pub fn genus_expand<T: Scalar>(factor: &TruncatedSeries<T>, n: u32) -> Result<ChernPolynomial<T>> {
    let required = n as usize + 1;
    if factor.order() < required {
        return Err(Error::OrderTooSmall { required, actual: factor.order() });
    }
    let factor = factor.truncated(required);
    let constant = factor.constant_term();
    if constant.coeff(0).is_zero() {
        return Err(Error::NonInvertibleConstant);
    }
    let mode = if constant.is_constant() {
        CoefficientMode::Exact
    } else {
        // The answer has y-degree at most n times the largest coefficient degree.
        let spread = factor
            .coefficients()
            .iter()
            .filter_map(YPolynomial::degree)
            .max()
            .unwrap_or(0);
        CoefficientMode::YAdic { precision: n * spread + 1 }
    };
    let reduce = |p: ChernPolynomial<T>| match mode {
        CoefficientMode::Exact => p,
        CoefficientMode::YAdic { precision } => p.truncate_y(precision),
    };

    let inv_constant = match mode {
        CoefficientMode::Exact => YPolynomial::constant(T::one() / constant.coeff(0)),
        CoefficientMode::YAdic { precision } => constant.inverse_mod(precision)?,
    };
    let unit = factor.mul_coefficient(&inv_constant).reduce(mode);
    let log = unit.log(mode)?;

    // weight-k part of sum_i log(factor(x_i)/constant) is g_k p_k
    let generators: Vec<ChernPolynomial<T>> = (1..=n)
        .map(|k| power_sum_in_elementary::<T>(k).scale_poly(log.coefficients().get(k as usize).unwrap()))
        .collect();

    // E = exp(G) graded by weight: w E_w = sum_{k=1}^{w} k G_k E_{w-k}
    let mut components: Vec<ChernPolynomial<T>> = vec![ChernPolynomial::one()];
    for w in 1..=n {
        let mut acc = ChernPolynomial::zero(Some(w));
        for k in 1..=w {
            let g = &generators[k as usize - 1];
            if g.is_zero() {
                continue;
            }
            let term = g.mul(&components[(w - k) as usize]).scale(&T::from_i64(k as i64));
            acc = acc.add(&term);
        }
        components.push(reduce(acc.scale(&(T::one() / T::from_i64(w as i64)))));
    }

    let top = components.pop().expect("at least the weight-0 component");
    Ok(reduce(top.scale_poly(&constant.pow(n))).with_grade(Some(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type C = ChernPolynomial<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn newton_small_cases() {
        assert_eq!(power_sum_in_elementary::<Rational>(1), C::chern_class(1));
        let p2 = C::from_scalar_terms(Some(2), [(vec![1, 1], q(1, 1)), (vec![2], q(-2, 1))]);
        assert_eq!(power_sum_in_elementary::<Rational>(2), p2);
        let p3 = C::from_scalar_terms(
            Some(3),
            [(vec![1, 1, 1], q(1, 1)), (vec![2, 1], q(-3, 1)), (vec![3], q(3, 1))],
        );
        assert_eq!(power_sum_in_elementary::<Rational>(3), p3);
    }

    #[test]
    fn total_chern_class_factor() {
        let factor = TruncatedSeries::<Rational>::from_scalars([q(1, 1), q(1, 1)], 4);
        assert_eq!(genus_expand(&factor, 3).unwrap(), C::chern_class(3));
    }

    #[test]
    fn trivial_factor_has_no_top_part() {
        let factor = TruncatedSeries::<Rational>::one(3);
        let out = genus_expand(&factor, 2).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.grade(), Some(2));
    }

    #[test]
    fn expand_errors() {
        let short = TruncatedSeries::<Rational>::one(2);
        assert_eq!(
            genus_expand(&short, 2),
            Err(Error::OrderTooSmall { required: 3, actual: 2 })
        );
        let no_unit = TruncatedSeries::<Rational>::x(4);
        assert_eq!(genus_expand(&no_unit, 2), Err(Error::NonInvertibleConstant));
    }

    #[test]
    fn scaled_constant_term() {
        // prod 2(1 + x_i) has degree-2 part 4 c2
        let factor = TruncatedSeries::<Rational>::from_scalars([q(2, 1), q(2, 1)], 3);
        let out = genus_expand(&factor, 2).unwrap();
        assert_eq!(out, C::chern_class(2).scale(&q(4, 1)));
    }

    #[test]
    fn float_scalar_agrees() {
        let factor = TruncatedSeries::<f64>::from_scalars([1.0, 1.0], 5);
        let out = genus_expand(&factor, 4).unwrap();
        assert_eq!(out.len(), 1);
        assert!((out.scalar_coefficient(&Partition::single(4)) - 1.0).abs() < 1e-12);
    }
}
