//! Fixed-point formulas for torus actions with isolated fixed points.
//!
//! Each fixed point contributes `(-y)^{d}` to `chi_y` and `y^{2d}` to the
//! Poincare polynomial, where `d` counts the negative weights there. The
//! obstruction report compares those sums with each other and with any
//! Hodge or Chern data supplied alongside.

use num_traits::{Signed, Zero};

use crate::chern::ChernNumbers;
use crate::error::{Error, Result};
use crate::genus::{c1_cn1, taylor_at_minus_one, taylor_from_even_betti};
use crate::hodge::{BettiVector, HodgeDiamond};
use crate::report::{ConstraintReport, Quantity};
use crate::scalar::Scalar;
use crate::ypoly::YPolynomial;
use crate::Rational;

/// Depth of the Betti/Chern comparison by default.
pub const DEFAULT_DEPTH: u32 = 4;

pub const DUALITY: &str = "hamiltonian.duality";
pub const CHI_POINCARE: &str = "hamiltonian.chi-poincare";
pub const SIGNATURE: &str = "hamiltonian.signature";
pub const CHERN_TOP: &str = "hamiltonian.chern.cn";
pub const CHERN_C1CN1: &str = "hamiltonian.chern.c1cn1";
pub const CHERN_TAYLOR: &str = "hamiltonian.chern.a";
pub const DIAMOND_BETTI: &str = "hamiltonian.diamond-betti";

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoint {
    weights: Option<Vec<Rational>>,
    index: u32,
}

impl FixedPoint {
    /// From the rotation weights; the index is the number of negative weights.
    /// Zero weights are rejected when the point is added to [`FixedPointData`].
    pub fn from_weights(weights: Vec<Rational>) -> Self {
        let index = weights.iter().filter(|w| w.is_negative()).count() as u32;
        FixedPoint { weights: Some(weights), index }
    }

    pub fn from_index(index: u32) -> Self {
        FixedPoint { weights: None, index }
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

/// Nonempty list of isolated fixed points of an action on a complex `n`-dimensional manifold.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointData {
    dimension: u32,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    pub fn new(dimension: u32, points: Vec<FixedPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NoFixedPoints);
        }
        for (i, point) in points.iter().enumerate() {
            if let Some(weights) = &point.weights {
                if weights.len() != dimension as usize {
                    return Err(Error::WeightCount { point: i, expected: dimension, found: weights.len() });
                }
                if let Some(slot) = weights.iter().position(|w| w.is_zero()) {
                    return Err(Error::ZeroWeight { point: i, slot });
                }
            }
            if point.index > dimension {
                return Err(Error::IndexOutOfRange { point: i, index: point.index, dimension });
            }
        }
        Ok(FixedPointData { dimension, points })
    }

    pub fn from_indices(dimension: u32, indices: &[u32]) -> Result<Self> {
        Self::new(dimension, indices.iter().map(|&d| FixedPoint::from_index(d)).collect())
    }

    pub fn from_weights(dimension: u32, weights: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(dimension, weights.into_iter().map(FixedPoint::from_weights).collect())
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }
}

/// `d_P` for every fixed point; the Morse index of the moment map there is `2 d_P`.
pub fn morse_indices(data: &FixedPointData) -> Vec<u32> {
    data.points.iter().map(FixedPoint::index).collect()
}

/// Both localized forms of `chi_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedChiY {
    /// `sum_P (-y)^{d_P}`
    pub primary: YPolynomial<Rational>,
    /// `sum_P (-y)^{n - d_P}`
    pub dual: YPolynomial<Rational>,
}

fn neg_y_power(d: u32) -> (u32, Rational) {
    (d, Rational::from_i64(if d % 2 == 0 { 1 } else { -1 }))
}

pub fn localized_chi_y(data: &FixedPointData) -> LocalizedChiY {
    let n = data.dimension;
    let primary = YPolynomial::from_terms(data.points.iter().map(|p| neg_y_power(p.index)));
    let dual = YPolynomial::from_terms(data.points.iter().map(|p| neg_y_power(n - p.index)));
    LocalizedChiY { primary, dual }
}

/// `sum_P y^{2 d_P}`. Only even powers appear, so integral homology of a
/// Hamiltonian manifold with isolated fixed points has no odd part and no torsion.
pub fn localized_poincare(data: &FixedPointData) -> YPolynomial<Rational> {
    YPolynomial::from_terms(data.points.iter().map(|p| (2 * p.index, Rational::from_i64(1))))
}

/// Betti vector of length `2n + 1` read off the localized Poincare polynomial.
pub fn localized_betti(data: &FixedPointData) -> BettiVector {
    let mut entries = vec![0i64; 2 * data.dimension as usize + 1];
    for p in &data.points {
        entries[2 * p.index as usize] += 1;
    }
    BettiVector::new(entries)
}

/// Runs the obstruction battery for a Hamiltonian torus action with
/// isolated fixed points, in order:
///
/// 1. localization duality `sum (-y)^d = sum (-y)^{n-d}`;
/// 2. `chi_{-y^2} = P_y`;
/// 3. signature `chi_1 = sum_i (-1)^i b_{2i}`;
/// 4. Chern numbers determined by Betti numbers (needs `chern`), through
///    the Taylor coefficients `a_0 ..= a_depth` and the closed forms for
///    `c_n` and `c_1 c_{n-1}`;
/// 5. agreement of the diamond's Betti numbers with the localized ones (needs `diamond`).
///
/// The Betti numbers used in 2-4 come from the diamond when one is given,
/// otherwise from the localized Poincare polynomial. Checks whose inputs are
/// missing are reported as not-applicable.
pub fn hamiltonian_obstruction_report(
    data: &FixedPointData,
    diamond: Option<&HodgeDiamond>,
    chern: Option<&ChernNumbers>,
    depth: u32,
) -> Result<Vec<ConstraintReport>> {
    let n = data.dimension;
    if let Some(d) = diamond {
        if d.dimension() != n {
            return Err(Error::DimensionMismatch { what: "hodge diamond", expected: n, found: d.dimension() });
        }
    }
    if let Some(c) = chern {
        if c.dimension() != n {
            return Err(Error::DimensionMismatch { what: "chern numbers", expected: n, found: c.dimension() });
        }
    }

    let chi = localized_chi_y(data);
    let local_betti = localized_betti(data);
    let betti = diamond.map(HodgeDiamond::betti).unwrap_or_else(|| local_betti.clone());
    let poincare = betti.poincare_polynomial();
    let mut out = Vec::new();

    out.push(
        ConstraintReport::equality(DUALITY, chi.primary.clone(), chi.dual.clone())
            .with_detail("sum (-y)^d vs sum (-y)^(n-d)"),
    );

    out.push(
        ConstraintReport::equality(CHI_POINCARE, chi.primary.substitute_neg_y_squared(), poincare)
            .with_detail("chi_{-y^2} vs P_y"),
    );

    let signature = chi.primary.eval(&Rational::from_i64(1));
    let alternating: i64 = betti
        .even_entries()
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b } else { -b })
        .sum();
    out.push(
        ConstraintReport::equality(SIGNATURE, signature, Rational::from_i64(alternating))
            .with_detail("chi_1 vs sum (-1)^i b_2i"),
    );

    match chern {
        Some(chern) => out.extend(betti_chern_checks(&betti, chern, depth)?),
        None => out.push(ConstraintReport::not_applicable(
            CHERN_TAYLOR,
            "unverifiable: no chern numbers supplied",
        )),
    }

    match diamond {
        Some(d) => out.push(
            ConstraintReport::equality(DIAMOND_BETTI, d.betti().poincare_polynomial(), local_betti.poincare_polynomial())
                .with_detail("diamond P_y vs localized P_y"),
        ),
        None => out.push(ConstraintReport::not_applicable(DIAMOND_BETTI, "unverifiable: no diamond supplied")),
    }
    Ok(out)
}

fn betti_chern_checks(betti: &BettiVector, chern: &ChernNumbers, depth: u32) -> Result<Vec<ConstraintReport>> {
    let n = chern.dimension();
    let even = betti.even_entries();
    let total: i64 = even.iter().sum();
    let mut out = vec![ConstraintReport::equality(
        CHERN_TOP,
        Rational::from_i64(chern.top()),
        Rational::from_i64(total),
    )
    .with_detail("c_n vs sum b_2i")];

    if n >= 1 {
        // c_1 c_{n-1} = 6 sum i(i-1) b_2i - n(3n-5)/2 sum b_2i
        let weighted: i64 = even.iter().enumerate().map(|(i, &b)| (i * i.saturating_sub(1)) as i64 * b).sum();
        let n_i = n as i64;
        let predicted = Rational::from_i64(6 * weighted) - Rational::ratio(n_i * (3 * n_i - 5), 2) * Rational::from_i64(total);
        let supplied = chern.get(&c1_cn1(n));
        out.push(
            ConstraintReport::equality(CHERN_C1CN1, Rational::from_i64(supplied), predicted)
                .with_detail("c_1c_{n-1} vs 6 sum i(i-1) b_2i - n(3n-5)/2 sum b_2i"),
        );
    }

    let depth = depth.min(n);
    let from_betti = taylor_from_even_betti(&even, depth);
    let taylor = taylor_at_minus_one::<Rational>(n, depth)?;
    for (i, formula) in taylor.coefficients.iter().enumerate() {
        let from_chern = formula.evaluate(chern)?.coeff(0);
        out.push(ConstraintReport {
            id: format!("{CHERN_TAYLOR}{i}"),
            ..ConstraintReport::equality("", Quantity::Number(from_chern), Quantity::Number(from_betti[i].clone()))
        });
    }
    Ok(out)
}
