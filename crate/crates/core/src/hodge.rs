//! Hodge diamonds, Betti vectors and their alternating moment functionals.
//!
//! `HodgeDiamond::get(p, q)` is `h^{p,q}`. The text and JSON row layouts list
//! rows `q = 0..=n`, each row holding `h^{0,q} ... h^{n,q}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::ypoly::YPolynomial;
use crate::Rational;

/// Validation level, matching the structure a diamond claims to carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    /// Nonnegative integers only.
    Raw,
    /// Serre duality, conjugation symmetry and a positive diagonal.
    Kaehler,
    /// Kaehler plus `h^{p,q} = h^{p,n-q}` in even dimension.
    Mirror,
}

/// One failed identity with its `(p, q)` witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Negative { p: usize, q: usize, value: i64 },
    Serre { p: usize, q: usize },
    Conjugation { p: usize, q: usize },
    EmptyDiagonal { p: usize },
    Mirror { p: usize, q: usize },
    OddDimension { n: u32 },
}

impl Violation {
    pub fn id(&self) -> &'static str {
        match self {
            Violation::Negative { .. } => "hodge.nonnegative",
            Violation::Serre { .. } => "hodge.serre",
            Violation::Conjugation { .. } => "hodge.conjugation",
            Violation::EmptyDiagonal { .. } => "hodge.diagonal",
            Violation::Mirror { .. } => "hodge.mirror",
            Violation::OddDimension { .. } => "hodge.mirror.parity",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Negative { p, q, value } => write!(f, "h^{{{p},{q}}} = {value} is negative"),
            Violation::Serre { p, q } => write!(f, "h^{{{p},{q}}} != h^{{n-{p},n-{q}}}"),
            Violation::Conjugation { p, q } => write!(f, "h^{{{p},{q}}} != h^{{{q},{p}}}"),
            Violation::EmptyDiagonal { p } => write!(f, "h^{{{p},{p}}} < 1"),
            Violation::Mirror { p, q } => write!(f, "h^{{{p},{q}}} != h^{{{p},n-{q}}}"),
            Violation::OddDimension { n } => write!(f, "mirror symmetry needs even dimension, got {n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondPredicates {
    pub is_pure: bool,
    pub is_mirror: bool,
    pub is_kaehler_symmetric: bool,
}

/// `chi^p = sum_q (-1)^q h^{p,q}` and the assembled `chi_y = sum_p chi^p y^p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiProfile {
    pub chi: Vec<i64>,
    pub chi_y: YPolynomial<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    dimension: u32,
    /// `entries[p][q] = h^{p,q}`
    entries: Vec<Vec<i64>>,
}

impl HodgeDiamond {
    /// Rows indexed by `q`, columns by `p`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MalformedDiamond("no rows".into()));
        }
        let size = rows.len();
        if let Some((q, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(Error::MalformedDiamond(format!(
                "row {q} has {} entries, expected {size}",
                row.len()
            )));
        }
        Ok(Self::from_fn(size as u32 - 1, |p, q| rows[q][p]))
    }

    pub fn from_fn(n: u32, mut value: impl FnMut(usize, usize) -> i64) -> Self {
        let size = n as usize + 1;
        let entries = (0..size).map(|p| (0..size).map(|q| value(p, q)).collect()).collect();
        HodgeDiamond { dimension: n, entries }
    }

    /// Diamond of pure type with the given diagonal `h^{p,p}`.
    pub fn pure(diagonal: &[i64]) -> Self {
        assert!(!diagonal.is_empty(), "diagonal needs at least one entry");
        Self::from_fn(diagonal.len() as u32 - 1, |p, q| if p == q { diagonal[p] } else { 0 })
    }

    pub fn zero(n: u32) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    /// Parses the text format: one row per `q`, whitespace-separated integers.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::MalformedDiamond(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }

    pub fn to_text(&self) -> String {
        self.rows()
            .iter()
            .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Rows indexed by `q`.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        let size = self.size();
        (0..size).map(|q| (0..size).map(|p| self.entries[p][q]).collect()).collect()
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    fn size(&self) -> usize {
        self.dimension as usize + 1
    }

    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.entries[p][q]
    }

    pub fn set(&mut self, p: usize, q: usize, value: i64) {
        self.entries[p][q] = value;
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let size = self.size();
        (0..size).flat_map(move |p| (0..size).map(move |q| (p, q, self.entries[p][q])))
    }

    /// Every identity the tier requires that fails; empty means valid.
    pub fn validate(&self, tier: Tier) -> Vec<Violation> {
        let n = self.size() - 1;
        let mut out = Vec::new();
        for (p, q, value) in self.cells() {
            if value < 0 {
                out.push(Violation::Negative { p, q, value });
            }
        }
        if tier >= Tier::Kaehler {
            for (p, q, value) in self.cells() {
                // report each unordered pair once
                if (p, q) < (n - p, n - q) && value != self.entries[n - p][n - q] {
                    out.push(Violation::Serre { p, q });
                }
                if p < q && value != self.entries[q][p] {
                    out.push(Violation::Conjugation { p, q });
                }
            }
            for p in 0..=n {
                if self.entries[p][p] < 1 {
                    out.push(Violation::EmptyDiagonal { p });
                }
            }
        }
        if tier >= Tier::Mirror {
            if self.dimension % 2 == 1 {
                out.push(Violation::OddDimension { n: self.dimension });
            }
            for (p, q, value) in self.cells() {
                if q < n - q && value != self.entries[p][n - q] {
                    out.push(Violation::Mirror { p, q });
                }
            }
        }
        out
    }

    /// `b_i = sum_{p+q=i} h^{p,q}`, length `2n + 1`.
    pub fn betti(&self) -> BettiVector {
        let mut entries = vec![0i64; 2 * self.size() - 1];
        for (p, q, value) in self.cells() {
            entries[p + q] += value;
        }
        BettiVector::new(entries)
    }

    pub fn chi_profile(&self) -> ChiProfile {
        let chi: Vec<i64> = (0..self.size())
            .map(|p| {
                (0..self.size())
                    .map(|q| if q % 2 == 0 { self.entries[p][q] } else { -self.entries[p][q] })
                    .sum()
            })
            .collect();
        let chi_y = YPolynomial::from_integers(&chi);
        ChiProfile { chi, chi_y }
    }

    /// `h(x) = sum_{p,q} (-1)^{p+q} h^{p,q} x(p, q)`.
    pub fn h_moment(&self, spec: &MomentSpec) -> Rational {
        let mut acc = Rational::from_i64(0);
        for (p, q, value) in self.cells() {
            if value == 0 {
                continue;
            }
            let signed = if (p + q) % 2 == 0 { value } else { -value };
            acc += spec.eval(p as i64, q as i64) * Rational::from_i64(signed);
        }
        acc
    }

    pub fn predicates(&self) -> DiamondPredicates {
        let n = self.size() - 1;
        let is_pure = self.cells().all(|(p, q, v)| p == q || v == 0);
        let is_mirror = self.cells().all(|(p, q, v)| v == self.entries[p][n - q]);
        let is_kaehler_symmetric = self
            .cells()
            .all(|(p, q, v)| v == self.entries[q][p] && v == self.entries[n - p][n - q]);
        DiamondPredicates { is_pure, is_mirror, is_kaehler_symmetric }
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Betti numbers `b_0 ... b_k`. For a complex `n`-fold, `k = 2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector {
    entries: Vec<i64>,
    poincare: bool,
}

impl BettiVector {
    pub fn new(entries: Vec<i64>) -> Self {
        BettiVector { entries, poincare: false }
    }

    /// Flags the vector as Poincare symmetric, checking `b_i = b_{k-i}`.
    pub fn poincare(entries: Vec<i64>) -> Result<Self> {
        let k = entries.len().saturating_sub(1);
        if let Some(i) = (0..entries.len()).find(|&i| entries[i] != entries[k - i]) {
            return Err(Error::NotPoincareSymmetric(i));
        }
        Ok(BettiVector { entries, poincare: true })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_poincare(&self) -> bool {
        self.poincare
    }

    /// Top index `k`.
    pub fn top_degree(&self) -> u32 {
        self.entries.len().saturating_sub(1) as u32
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries.get(i).copied().unwrap_or(0)
    }

    /// `f(i) = sum_p (-1)^p b_p p^i`.
    pub fn f_moment(&self, i: u32) -> Rational {
        let total: i128 = self
            .entries
            .iter()
            .enumerate()
            .map(|(p, &b)| {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                sign * b as i128 * (p as i128).pow(i)
            })
            .sum();
        Rational::from_integer(total.into())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(p, &b)| if p % 2 == 0 { b } else { -b })
            .sum()
    }

    /// `sum_i b_i i^power` (no sign).
    pub fn weighted_sum(&self, power: u32) -> Rational {
        let total: i128 = self
            .entries
            .iter()
            .enumerate()
            .map(|(p, &b)| b as i128 * (p as i128).pow(power))
            .sum();
        Rational::from_integer(total.into())
    }

    /// `P_y = sum_i b_i y^i`.
    pub fn poincare_polynomial(&self) -> YPolynomial<Rational> {
        YPolynomial::from_integers(&self.entries)
    }

    /// `P_y - y^k P_{1/y}`; zero exactly for Poincare-symmetric vectors.
    pub fn poincare_residual(&self) -> YPolynomial<Rational> {
        let p = self.poincare_polynomial();
        let mirrored = p.reciprocal(self.top_degree()).expect("degree never exceeds k");
        &p - &mirrored
    }

    /// `b_0, b_2, b_4, ...`
    pub fn even_entries(&self) -> Vec<i64> {
        self.entries.iter().step_by(2).copied().collect()
    }

    pub fn scaled(&self, factor: i64) -> Self {
        BettiVector {
            entries: self.entries.iter().map(|b| b * factor).collect(),
            poincare: self.poincare,
        }
    }
}

/// The polynomial `x(p, q) = sum coefficient * p^i q^j` fed to [`HodgeDiamond::h_moment`].
#[derive(Clone, Debug, PartialEq, Default)]
pub struct MomentSpec {
    pub terms: Vec<(u32, u32, Rational)>,
}

impl MomentSpec {
    pub fn monomial(i: u32, j: u32) -> Self {
        MomentSpec { terms: vec![(i, j, Rational::from_i64(1))] }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `p^i`
    pub fn p_pow(i: u32) -> Self {
        Self::monomial(i, 0)
    }

    pub fn with_term(mut self, i: u32, j: u32, coefficient: Rational) -> Self {
        self.terms.push((i, j, coefficient));
        self
    }

    pub fn eval(&self, p: i64, q: i64) -> Rational {
        self.terms.iter().fold(Rational::from_i64(0), |acc, (i, j, c)| {
            let value = (p as i128).pow(*i) * (q as i128).pow(*j);
            acc + c * Rational::from_integer(value.into())
        })
    }
}
