//! Betti-number bounds and residuals on Chern numbers of Kaehler and
//! hyperKaehler manifolds, and the consistency battery linking a Hodge
//! diamond to Chern numbers through the power moments `h(p^i)`.

use crate::chern::ChernNumbers;
use crate::error::{Error, Result};
use crate::genus::chern_power_moments;
use crate::hodge::{BettiVector, HodgeDiamond, MomentSpec};
use crate::report::ConstraintReport;
use crate::scalar::Scalar;
use crate::Rational;

pub const SALAMON: &str = "salamon";
pub const BOUND_C1CN1: &str = "bound.c1cn1";
pub const CALABI_YAU: &str = "calabi-yau";
pub const BOUND_C2CN2: &str = "bound.c2cn2";
pub const MINUS_ONE: &str = "minus-one";

fn check_length(betti: &BettiVector, n: u32) -> Result<()> {
    let expected = 2 * n as usize + 1;
    let actual = betti.entries().len();
    if actual != expected {
        return Err(Error::BettiLength { expected, actual });
    }
    Ok(())
}

fn check_even(n: u32) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    Ok(())
}

fn q(value: i128) -> Rational {
    Rational::from_integer(value.into())
}

/// `sum_i (-1)^i b_i [3 i^2 - n(3n + 1/2)]`. Equals `c_1 c_{n-1}` for
/// mirror-symmetric Kaehler data and vanishes for hyperKaehler data.
pub fn salamon_residual(betti: &BettiVector, n: u32) -> Result<Rational> {
    check_even(n)?;
    check_length(betti, n)?;
    let n = n as i128;
    // scaled by 2 to stay integral: 6 i^2 - n(6n + 1)
    let twice: i128 = betti
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let i = i as i128;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * b as i128 * (6 * i * i - n * (6 * n + 1))
        })
        .sum();
    Ok(q(twice) / q(2))
}

/// Even/odd split sum `sum_{i even} b_i [A i^k - c] - sum_{i odd} b_i [B i^k - c]`.
fn split_sum(betti: &BettiVector, power: u32, even: i128, odd: i128, shift: i128) -> i128 {
    betti
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let ik = (i as i128).pow(power);
            if i % 2 == 0 {
                b as i128 * (even * ik - shift)
            } else {
                -(b as i128) * (odd * ik - shift)
            }
        })
        .sum()
}

/// Lower bound for `c_1 c_{n-1}` of a compact Kaehler `n`-fold:
/// `1/2 { sum_{i even} b_i [3i^2 - n(3n+1)] - sum_{i odd} b_i [9i^2 - n(3n+1)] }`.
pub fn c1cn1_lower_bound(betti: &BettiVector, n: u32) -> Result<Rational> {
    check_length(betti, n)?;
    let n = n as i128;
    Ok(q(split_sum(betti, 2, 3, 9, n * (3 * n + 1))) / q(2))
}

/// `sum_{i odd} b_i [9i^2 - n(3n+1)] - sum_{i even} b_i [3i^2 - n(3n+1)]`;
/// nonnegative whenever `c_1 c_{n-1} = 0`, zero exactly for pure type.
pub fn calabi_yau_residual(betti: &BettiVector, n: u32) -> Result<Rational> {
    check_length(betti, n)?;
    let n = n as i128;
    Ok(-q(split_sum(betti, 2, 3, 9, n * (3 * n + 1))))
}

/// Lower bound for `c_2 c_{n-2}` of a hyperKaehler `n`-fold:
/// `1/24 { sum_{i even} b_i [75 i^4 - s] - sum_{i odd} b_i [165 i^4 - s] }`
/// with `s = n(75n^3 + 90n^2 + 5n - 2)`. Never attained.
pub fn c2cn2_lower_bound(betti: &BettiVector, n: u32) -> Result<Rational> {
    check_even(n)?;
    check_length(betti, n)?;
    let n = n as i128;
    let shift = n * (75 * n * n * n + 90 * n * n + 5 * n - 2);
    Ok(q(split_sum(betti, 4, 75, 165, shift)) / q(24))
}

/// Compares `c_1 c_{n-1}` with its Betti lower bound. With a purity flag the
/// equality case must match it exactly.
pub fn check_c1cn1(betti: &BettiVector, n: u32, c1cn1: i64, pure: Option<bool>) -> Result<ConstraintReport> {
    let bound = c1cn1_lower_bound(betti, n)?;
    Ok(ConstraintReport::lower_bound(BOUND_C1CN1, Rational::from_i64(c1cn1), bound, pure))
}

/// Calabi-Yau inequality: residual `>= 0`, zero exactly for pure type.
pub fn check_calabi_yau(betti: &BettiVector, n: u32, pure: Option<bool>) -> Result<ConstraintReport> {
    let residual = calabi_yau_residual(betti, n)?;
    Ok(ConstraintReport::lower_bound(CALABI_YAU, residual, Rational::from_i64(0), pure))
}

/// HyperKaehler bound on `c_2 c_{n-2}`; equality is never possible. Odd `n`
/// reports not-applicable.
pub fn check_c2cn2(betti: &BettiVector, n: u32, c2cn2: i64) -> Result<ConstraintReport> {
    match c2cn2_lower_bound(betti, n) {
        Ok(bound) => Ok(ConstraintReport::lower_bound(
            BOUND_C2CN2,
            Rational::from_i64(c2cn2),
            bound,
            Some(false),
        )),
        Err(Error::OddDimension(n)) => Ok(ConstraintReport::not_applicable(
            BOUND_C2CN2,
            format!("hyperkaehler bound needs even dimension, got {n}"),
        )),
        Err(e) => Err(e),
    }
}

/// Salamon relation: the residual must equal `expected` (`c_1 c_{n-1}` for
/// mirror data, `0` for hyperKaehler data). Odd `n` reports not-applicable.
pub fn check_salamon(betti: &BettiVector, n: u32, expected: i64) -> Result<ConstraintReport> {
    match salamon_residual(betti, n) {
        Ok(residual) => Ok(ConstraintReport::equality(SALAMON, residual, Rational::from_i64(expected))),
        Err(Error::OddDimension(n)) => Ok(ConstraintReport::not_applicable(
            SALAMON,
            format!("mirror relation needs even dimension, got {n}"),
        )),
        Err(e) => Err(e),
    }
}

/// For each `i <= depth`, compares the diamond moment `h(p^i)` with the
/// Chern-number expression for `h(p^i)`.
pub fn minus_one_consistency(
    diamond: &HodgeDiamond,
    chern: &ChernNumbers,
    depth: u32,
) -> Result<Vec<ConstraintReport>> {
    let n = diamond.dimension();
    if chern.dimension() != n {
        return Err(Error::DimensionMismatch { what: "chern numbers", expected: n, found: chern.dimension() });
    }
    let moments = chern_power_moments::<Rational>(n, depth)?;
    moments
        .moments
        .iter()
        .enumerate()
        .map(|(i, formula)| {
            let left = diamond.h_moment(&MomentSpec::p_pow(i as u32));
            let right = formula.evaluate(chern)?.coeff(0);
            Ok(ConstraintReport::equality(format!("{MINUS_ONE}.h{i}"), left, right))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::report::Status;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn k3() -> BettiVector {
        BettiVector::new(vec![1, 0, 22, 0, 1])
    }

    fn plane() -> BettiVector {
        BettiVector::new(vec![1, 0, 1, 0, 1])
    }

    fn zero() -> BettiVector {
        BettiVector::new(vec![0; 5])
    }

    #[test]
    fn salamon_examples() {
        assert_eq!(salamon_residual(&k3(), 2).unwrap(), r(0));
        assert_eq!(salamon_residual(&plane(), 2).unwrap(), r(21));
        assert_eq!(salamon_residual(&zero(), 2).unwrap(), r(0));
        assert_eq!(salamon_residual(&BettiVector::new(vec![1, 0, 1]), 1), Err(Error::OddDimension(1)));
        assert!(matches!(salamon_residual(&BettiVector::new(vec![1, 0, 1]), 2), Err(Error::BettiLength { .. })));
    }

    #[test]
    fn c1cn1_examples() {
        assert_eq!(c1cn1_lower_bound(&plane(), 2).unwrap(), r(9));
        assert_eq!(c1cn1_lower_bound(&k3(), 2).unwrap(), r(-12));
        assert_eq!(c1cn1_lower_bound(&zero(), 2).unwrap(), r(0));
        assert_eq!(check_c1cn1(&plane(), 2, 9, Some(true)).unwrap().status, Status::EqualityAttained);
        assert_eq!(check_c1cn1(&k3(), 2, 0, Some(false)).unwrap().status, Status::Satisfied);
        assert_eq!(check_c1cn1(&k3(), 2, -13, None).unwrap().status, Status::Violated);
    }

    #[test]
    fn calabi_yau_examples() {
        assert_eq!(calabi_yau_residual(&k3(), 2).unwrap(), r(24));
        assert_eq!(calabi_yau_residual(&zero(), 2).unwrap(), r(0));
        // pure diamond whose bound is zero: residual vanishes
        let enriques_like = BettiVector::new(vec![1, 0, 10, 0, 1]);
        assert_eq!(calabi_yau_residual(&enriques_like, 2).unwrap(), r(0));
        assert_eq!(check_calabi_yau(&enriques_like, 2, Some(true)).unwrap().status, Status::EqualityAttained);
        assert_eq!(check_calabi_yau(&k3(), 2, Some(false)).unwrap().status, Status::Satisfied);
    }

    #[test]
    fn c2cn2_examples() {
        assert_eq!(c2cn2_lower_bound(&k3(), 2).unwrap(), r(-36));
        assert_eq!(c2cn2_lower_bound(&zero(), 2).unwrap(), r(0));
        for b in [0i64, 1, 10, 22, 40] {
            let bound = c2cn2_lower_bound(&BettiVector::new(vec![1, 0, b, 0, 1]), 2).unwrap();
            assert_eq!(bound, (r(15328) - r(736) * r(b)) / r(24));
        }
        assert_eq!(check_c2cn2(&k3(), 2, 24).unwrap().status, Status::Satisfied);
        assert_eq!(check_c2cn2(&BettiVector::new(vec![1, 0, 1]), 1, 2).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn minus_one_examples() {
        let plane = HodgeDiamond::pure(&[1, 1, 1]);
        let chern = ChernNumbers::from_values(2, [(Partition::new([1, 1]), 9), (Partition::single(2), 3)]).unwrap();
        let reports = minus_one_consistency(&plane, &chern, 2).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Satisfied));
        assert_eq!(reports[2].left, r(5).into());

        let k3 = HodgeDiamond::from_rows(&[vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]]).unwrap();
        let chern = ChernNumbers::from_values(2, [(Partition::single(2), 24)]).unwrap();
        let reports = minus_one_consistency(&k3, &chern, 2).unwrap();
        assert_eq!(reports[0].left, r(24).into());
        assert!(reports.iter().all(|r| r.status == Status::Satisfied));

        let perturbed = ChernNumbers::from_values(2, [(Partition::single(2), 3)]).unwrap();
        let reports = minus_one_consistency(&plane, &perturbed, 2).unwrap();
        assert_eq!(reports[2].status, Status::Violated);
        assert_eq!(reports[2].right, (r(7) / r(2)).into());

        assert!(minus_one_consistency(&plane, &ChernNumbers::new(3), 2).is_err());
    }
}
