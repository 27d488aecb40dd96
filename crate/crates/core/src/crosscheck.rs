//! Brute-force reference computations that share no code path with the
//! log/exp pipeline: explicit multivariate expansion over `n` symbolic Chern
//! roots, reduction to elementary monomials by leading-term elimination, and
//! projective-space Chern numbers from `(1 + h)^{n+1}`.

use std::collections::BTreeMap;

use crate::chern::{ChernNumbers, ChernPolynomial};
use crate::partition::Partition;
use crate::series::TruncatedSeries;
use crate::ypoly::YPolynomial;
use crate::Rational;

type Exponents = Vec<u32>;

/// Polynomial in `x_1 .. x_n` with `y`-polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Exponents, YPolynomial<Rational>>,
}

impl MultiPoly {
    pub fn one(vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], YPolynomial::one());
        MultiPoly { vars, terms }
    }

    fn add_term(&mut self, exponents: Exponents, coefficient: YPolynomial<Rational>) {
        if coefficient.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exponents) {
            Some(existing) => &existing + &coefficient,
            None => coefficient,
        };
        if !sum.is_zero() {
            self.terms.insert(exponents, sum);
        }
    }

    fn mul_truncated(&self, other: &MultiPoly, max_degree: u32) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars, terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                if da + eb.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn homogeneous_part(&self, degree: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Elementary symmetric polynomial `e_k` in `vars` variables.
    pub fn elementary(vars: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        for mask in 0u64..(1u64 << vars) {
            if mask.count_ones() == k {
                let e = (0..vars).map(|i| ((mask >> i) & 1) as u32).collect();
                out.add_term(e, YPolynomial::one());
            }
        }
        out
    }
}

/// `prod_{i=1}^{n} factor(x_i)` expanded over explicit variables, up to total degree `n`.
pub fn expand_product(factor: &TruncatedSeries<Rational>, n: u32) -> MultiPoly {
    let vars = n as usize;
    let mut acc = MultiPoly::one(vars);
    for i in 0..vars {
        let mut single = MultiPoly { vars, terms: BTreeMap::new() };
        for (k, c) in factor.coefficients().iter().enumerate().take(n as usize + 1) {
            let mut e = vec![0; vars];
            e[i] = k as u32;
            single.add_term(e, c.clone());
        }
        acc = acc.mul_truncated(&single, n);
    }
    acc
}

/// Writes a symmetric polynomial in elementary monomials by repeatedly
/// cancelling its lex-leading term. Returns `None` if the input is not symmetric.
pub fn to_elementary(poly: &MultiPoly) -> Option<ChernPolynomial<Rational>> {
    let vars = poly.vars;
    let elementary: Vec<MultiPoly> = (0..=vars as u32).map(|k| MultiPoly::elementary(vars, k)).collect();
    let mut rest = poly.clone();
    let mut out = ChernPolynomial::zero(None);
    while let Some((lead, coefficient)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        // x^lead leads e_1^{a1-a2} e_2^{a2-a3} ... e_n^{an}
        let mut parts = Vec::new();
        let mut product = MultiPoly::one(vars);
        for j in 0..vars {
            let next = if j + 1 < vars { lead[j + 1] } else { 0 };
            for _ in 0..lead[j] - next {
                parts.push(j as u32 + 1);
                product = product.mul_truncated(&elementary[j + 1], u32::MAX);
            }
        }
        for (e, c) in product.terms {
            rest.add_term(e, -(&c * &coefficient));
        }
        out.add_term(Partition::new(parts), coefficient);
    }
    Some(out)
}

/// Reference for the degree-`n` part of `prod factor(x_i)` in Chern monomials.
pub fn brute_force_genus(factor: &TruncatedSeries<Rational>, n: u32) -> ChernPolynomial<Rational> {
    let top = expand_product(factor, n).homogeneous_part(n);
    to_elementary(&top).expect("a product over all roots is symmetric").with_grade(Some(n))
}

/// Chern numbers of complex projective `n`-space, from the total Chern class
/// `(1 + h)^{n+1}` truncated at `h^{n+1} = 0` and `int h^n = 1`.
pub fn projective_space_chern_numbers(n: u32) -> ChernNumbers {
    // total[k] = coefficient of h^k in (1 + h)^{n+1}
    let mut total = vec![0i64; n as usize + 1];
    total[0] = 1;
    for _ in 0..=n {
        for k in (1..total.len()).rev() {
            total[k] += total[k - 1];
        }
    }
    let values = Partition::all_of(n)
        .into_iter()
        .map(|p| {
            let value = p.parts().iter().map(|&k| total[k as usize]).product();
            (p, value)
        });
    ChernNumbers::from_values(n, values).expect("partitions of n have weight n")
}
