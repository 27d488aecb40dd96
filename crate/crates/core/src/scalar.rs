use std::fmt;

use num_bigint::BigInt;
use num_traits::{Num, Signed, ToPrimitive};

use crate::Rational;

/// Coefficient field for the algebraic kernel.
///
/// Implementors must behave like a field for `+ - * /`. Only [`Rational`]
/// is exact; the constraint checkers never use anything else.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + Num + Signed + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// True when `+ - * /` never round.
    fn is_exact() -> bool;
}

impl Scalar for Rational {
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        false
    }
}

/// Parse "p", "-p" or "p/q" into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Renders a coefficient magnitude, parenthesised unless it is a bare integer.
pub(crate) fn format_magnitude<T: Scalar>(value: &T) -> String {
    let text = value.to_string();
    if text.contains(['/', '.', 'e', 'E']) {
        format!("({text})")
    } else {
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3"), Some(Rational::from_integer(3.into())));
        assert_eq!(parse_rational("-6/4"), Some(Rational::new((-3).into(), 2.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let r = Rational::ratio(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
