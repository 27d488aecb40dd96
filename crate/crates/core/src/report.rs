use std::fmt;

use crate::ypoly::YPolynomial;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Satisfied,
    Violated,
    EqualityAttained,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Satisfied => "satisfied",
            Status::Violated => "violated",
            Status::EqualityAttained => "equality-attained",
            Status::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Number(Rational),
    Polynomial(YPolynomial<Rational>),
    Absent,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Number(r) => write!(f, "{r}"),
            Quantity::Polynomial(p) => write!(f, "{p}"),
            Quantity::Absent => f.write_str("-"),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(value: Rational) -> Self {
        Quantity::Number(value)
    }
}

impl From<YPolynomial<Rational>> for Quantity {
    fn from(value: YPolynomial<Rational>) -> Self {
        Quantity::Polynomial(value)
    }
}

/// Outcome of one exact check. Status is always derived from comparing
/// `left` and `right`; there is no tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintReport {
    pub id: String,
    pub status: Status,
    pub left: Quantity,
    pub right: Quantity,
    pub detail: Option<String>,
}

impl ConstraintReport {
    /// `left == right`.
    pub fn equality(id: impl Into<String>, left: impl Into<Quantity>, right: impl Into<Quantity>) -> Self {
        let (left, right) = (left.into(), right.into());
        let status = if left == right { Status::Satisfied } else { Status::Violated };
        ConstraintReport { id: id.into(), status, left, right, detail: None }
    }

    /// `value >= bound`, where equality must coincide with `equality_expected`
    /// when that is known (`Some(true)`: equality required, `Some(false)`: strict required).
    pub fn lower_bound(
        id: impl Into<String>,
        value: Rational,
        bound: Rational,
        equality_expected: Option<bool>,
    ) -> Self {
        let status = if value < bound {
            Status::Violated
        } else {
            let equal = value == bound;
            match (equal, equality_expected) {
                (true, Some(false)) | (false, Some(true)) => Status::Violated,
                (true, _) => Status::EqualityAttained,
                (false, _) => Status::Satisfied,
            }
        };
        ConstraintReport {
            id: id.into(),
            status,
            left: Quantity::Number(value),
            right: Quantity::Number(bound),
            detail: None,
        }
    }

    pub fn not_applicable(id: impl Into<String>, reason: impl Into<String>) -> Self {
        ConstraintReport {
            id: id.into(),
            status: Status::NotApplicable,
            left: Quantity::Absent,
            right: Quantity::Absent,
            detail: Some(reason.into()),
        }
    }

    pub fn violated(id: impl Into<String>, detail: impl Into<String>) -> Self {
        ConstraintReport {
            id: id.into(),
            status: Status::Violated,
            left: Quantity::Absent,
            right: Quantity::Absent,
            detail: Some(detail.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }
}

impl fmt::Display for ConstraintReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} left={} right={}", self.id, self.status, self.left, self.right)?;
        if let Some(detail) = &self.detail {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn lower_bound_statuses() {
        assert_eq!(ConstraintReport::lower_bound("b", q(9), q(9), None).status, Status::EqualityAttained);
        assert_eq!(ConstraintReport::lower_bound("b", q(0), q(-12), None).status, Status::Satisfied);
        assert_eq!(ConstraintReport::lower_bound("b", q(-13), q(-12), None).status, Status::Violated);
        assert_eq!(ConstraintReport::lower_bound("b", q(9), q(9), Some(false)).status, Status::Violated);
        assert_eq!(ConstraintReport::lower_bound("b", q(10), q(9), Some(true)).status, Status::Violated);
    }

    #[test]
    fn display_line() {
        let r = ConstraintReport::equality("x", q(5), q(5));
        assert_eq!(r.to_string(), "x satisfied left=5 right=5");
    }
}
