//! The chi_y-genus as a polynomial in Chern numbers, its Taylor coefficients
//! at `y = -1`, and the power moments `h(p^m)` derived from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::{ChernNumbers, ChernPolynomial};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::series::{CoefficientMode, TruncatedSeries};
use crate::symmetric::genus_expand;
use crate::ypoly::YPolynomial;

/// The one-variable factor `x (1 + y e^{-x}) / (1 - e^{-x})` to the given order.
pub fn chi_y_factor<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let e = TruncatedSeries::<T>::exp_neg_x(order + 1);
    let shifted = TruncatedSeries::one(order + 1)
        .sub(&e)
        .divide_by_x_power(1)
        .expect("1 - e^{-x} vanishes at x = 0");
    let todd = shifted
        .inverse(CoefficientMode::Exact)
        .expect("(1 - e^{-x})/x has constant term 1");
    let twist = TruncatedSeries::one(order).add(&e.truncated(order).mul_coefficient(&YPolynomial::y()));
    todd.mul(&twist)
}

/// `chi_y` of an `n`-dimensional almost-complex manifold as a grade-`n`
/// Chern polynomial with `y`-polynomial coefficients.
///
/// Every coefficient has `y`-degree at most `n`, so the genus is expanded
/// with scalar coefficients at `y = 0, 1, ..., n` and interpolated. This is
/// much cheaper than expanding once with `y`-adic coefficients, which
/// [`genus_expand`] would also do correctly.
pub fn hrr_genus_formula<T: Scalar>(n: u32) -> ChernPolynomial<T> {
    let factor = chi_y_factor::<T>(n as usize + 1);
    let nodes: Vec<T> = (0..=n).map(|j| T::from_i64(j as i64)).collect();
    let samples: Vec<ChernPolynomial<T>> = nodes
        .iter()
        .map(|y| {
            let at_y = factor.coefficients().iter().map(|c| YPolynomial::constant(c.eval(y))).collect();
            genus_expand(&TruncatedSeries::new(at_y, factor.order()), n)
                .expect("constant term 1 + y is nonzero for y >= 0")
        })
        .collect();
    let mut out = ChernPolynomial::zero(Some(n));
    for partition in Partition::all_of(n) {
        let points: Vec<(T, T)> = nodes
            .iter()
            .zip(&samples)
            .map(|(y, s)| (y.clone(), s.coefficient(&partition).coeff(0)))
            .collect();
        out.add_term(partition, YPolynomial::interpolate(&points));
    }
    out
}

/// Pairs a formula with concrete Chern numbers.
pub fn evaluate_genus<T: Scalar>(
    formula: &ChernPolynomial<T>,
    chern: &ChernNumbers,
) -> Result<YPolynomial<T>> {
    formula.evaluate(chern)
}

/// Taylor coefficients `a_0 ... a_k` of `chi_y` at `y = -1`:
/// `chi_y = sum_i a_i (1 + y)^i`.
#[derive(Clone, Debug)]
pub struct TaylorCoefficients<T> {
    pub dimension: u32,
    pub coefficients: Vec<ChernPolynomial<T>>,
}

impl<T: Scalar> PartialEq for TaylorCoefficients<T> {
    fn eq(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.coefficients == other.coefficients
    }
}

impl<T: Scalar> TaylorCoefficients<T> {
    pub fn get(&self, i: usize) -> Option<&ChernPolynomial<T>> {
        self.coefficients.get(i)
    }
}

fn check_depth(n: u32, depth: u32) -> Result<()> {
    if depth > n {
        return Err(Error::DepthOutOfRange { depth, dimension: n });
    }
    Ok(())
}

/// Re-expands [`hrr_genus_formula`] around `y = -1` and returns `a_0 ..= a_depth`.
pub fn taylor_at_minus_one<T: Scalar>(n: u32, depth: u32) -> Result<TaylorCoefficients<T>> {
    check_depth(n, depth)?;
    Ok(taylor_of_formula(&hrr_genus_formula::<T>(n), n, depth))
}

pub(crate) fn taylor_of_formula<T: Scalar>(
    formula: &ChernPolynomial<T>,
    n: u32,
    depth: u32,
) -> TaylorCoefficients<T> {
    let mut coefficients = vec![ChernPolynomial::zero(Some(n)); depth as usize + 1];
    for (partition, coefficient) in formula.terms() {
        let shifted = coefficient.taylor_at_minus_one();
        for (i, value) in shifted.terms() {
            if i <= depth {
                coefficients[i as usize].add_term(partition.clone(), YPolynomial::constant(value.clone()));
            }
        }
    }
    TaylorCoefficients { dimension: n, coefficients }
}

/// The moments `h(p^0) ... h(p^k)` as Chern polynomials.
#[derive(Clone, Debug)]
pub struct PowerMoments<T> {
    pub dimension: u32,
    pub moments: Vec<ChernPolynomial<T>>,
}

impl<T: Scalar> PartialEq for PowerMoments<T> {
    fn eq(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.moments == other.moments
    }
}

impl<T: Scalar> PowerMoments<T> {
    pub fn get(&self, i: usize) -> Option<&ChernPolynomial<T>> {
        self.moments.get(i)
    }
}

/// Stirling numbers of the second kind `S(m, i)` for `0 <= i <= m`.
pub fn stirling_second_kind(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for r in 1..=m {
        let mut next = vec![BigInt::zero(); r as usize + 1];
        for i in 1..=r as usize {
            let carry = if i < row.len() { &row[i] * BigInt::from(i) } else { BigInt::zero() };
            next[i] = carry + &row[i - 1];
        }
        row = next;
    }
    row
}

/// Converts Taylor coefficients into power moments via
/// `h(p^m) = sum_i S(m, i) i! (-1)^i a_i`.
pub fn moments_from_taylor<T: Scalar>(taylor: &TaylorCoefficients<T>) -> PowerMoments<T> {
    let n = taylor.dimension;
    let moments = (0..taylor.coefficients.len() as u32)
        .map(|m| {
            let stirling = stirling_second_kind(m);
            let mut factorial = BigInt::one();
            let mut acc = ChernPolynomial::zero(Some(n));
            for (i, s) in stirling.iter().enumerate() {
                if i > 0 {
                    factorial *= BigInt::from(i);
                }
                if s.is_zero() {
                    continue;
                }
                let mut weight = s * &factorial;
                if i % 2 == 1 {
                    weight = -weight;
                }
                acc = acc.add(&taylor.coefficients[i].scale(&T::from_bigint(&weight)));
            }
            acc
        })
        .collect();
    PowerMoments { dimension: n, moments }
}

pub fn chern_power_moments<T: Scalar>(n: u32, depth: u32) -> Result<PowerMoments<T>> {
    Ok(moments_from_taylor(&taylor_at_minus_one::<T>(n, depth)?))
}

/// `chi_y - (-y)^n chi_{1/y}` as a Chern polynomial; identically zero when
/// the expansion pipeline is correct.
pub fn duality_residual<T: Scalar>(n: u32) -> ChernPolynomial<T> {
    let formula = hrr_genus_formula::<T>(n);
    let sign = if n % 2 == 0 { T::one() } else { -T::one() };
    formula.map_coefficients(|c| {
        // y^n * residual = y^n chi_y - (-1)^n y^{2n} chi_{1/y}
        let lifted = c.shift_up(n);
        let mirrored = c.reciprocal(2 * n).expect("chi_y has y-degree at most n").scale(&sign);
        (&lifted - &mirrored)
            .shift_down(n)
            .expect("residual is a polynomial when chi_y has y-degree at most n")
    })
}

/// Taylor coefficients at `y = -1` of `sum_p (-1)^p b_{2p} y^p`, i.e. the
/// `a_i` that an even Betti vector forces when `chi_{-y^2} = P_y`:
/// `a_i = (-1)^i sum_p C(p, i) b_{2p}`.
pub fn taylor_from_even_betti(even_betti: &[i64], depth: u32) -> Vec<crate::Rational> {
    let chi = YPolynomial::<crate::Rational>::from_terms(
        even_betti.iter().enumerate().map(|(p, &b)| {
            let value = crate::Rational::from_i64(if p % 2 == 0 { b } else { -b });
            (p as u32, value)
        }),
    );
    let shifted = chi.taylor_at_minus_one();
    (0..=depth).map(|i| shifted.coeff(i)).collect()
}

/// Monomials `c_n`, `c_1 c_{n-1}` used by the closed-form checks.
pub fn top_class(n: u32) -> Partition {
    Partition::single(n)
}

pub fn c1_cn1(n: u32) -> Partition {
    Partition::new([1, n.saturating_sub(1)])
}
