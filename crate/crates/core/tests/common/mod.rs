//! Independent helpers shared by the integration tests: seeded diamond
//! generators, an exact linear solver, a numeric substitution oracle and the
//! closed forms for the Taylor coefficients and power moments.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use chiy_core::{ChernNumbers, ChernPolynomial, HodgeDiamond, Partition, Rational, Scalar, TruncatedSeries, YPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn qr(num: i64, den: i64) -> Rational {
    Rational::ratio(num, den)
}

fn part(parts: &[u32]) -> Vec<u32> {
    parts.iter().copied().filter(|&p| p > 0).collect()
}

fn poly(n: u32, terms: Vec<(Vec<u32>, Rational)>) -> ChernPolynomial<Rational> {
    ChernPolynomial::from_scalar_terms(Some(n), terms)
}

/// Closed forms for `a_0 .. a_4` for `n >= 4`.
pub fn closed_form_taylor(n: u32) -> Vec<ChernPolynomial<Rational>> {
    assert!(n >= 4);
    let m = n as i64;
    let cn = part(&[n]);
    let c1 = part(&[1, n - 1]);
    let c11 = part(&[1, 1, n - 2]);
    let c2 = part(&[2, n - 2]);
    let c111 = part(&[1, 1, 1, n - 3]);
    let c12 = part(&[1, 2, n - 3]);
    let c3 = part(&[3, n - 3]);
    let k = qr(1, 5760);
    vec![
        poly(n, vec![(cn.clone(), q(1))]),
        poly(n, vec![(cn.clone(), qr(-m, 2))]),
        poly(n, vec![(cn.clone(), qr(m * (3 * m - 5), 24)), (c1.clone(), qr(1, 12))]),
        poly(
            n,
            vec![
                (cn.clone(), qr(-m * (m - 2) * (m - 3), 48)),
                (c1.clone(), qr(-(m - 2), 24)),
            ],
        ),
        poly(
            n,
            vec![
                (cn, k.clone() * q(m * (15 * m * m * m - 150 * m * m + 485 * m - 502))),
                (c1, k.clone() * q(4 * (15 * m * m - 85 * m + 108))),
                (c11, k.clone() * q(8)),
                (c2, k.clone() * q(24)),
                (c111, k.clone() * q(-8)),
                (c12, k.clone() * q(24)),
                (c3, k * q(-24)),
            ],
        ),
    ]
}

/// Closed forms for `h(1) .. h(p^4)` for `n >= 4`.
pub fn closed_form_moments(n: u32) -> Vec<ChernPolynomial<Rational>> {
    assert!(n >= 4);
    let m = n as i64;
    let cn = part(&[n]);
    let c1 = part(&[1, n - 1]);
    let c11 = part(&[1, 1, n - 2]);
    let c2 = part(&[2, n - 2]);
    let c111 = part(&[1, 1, 1, n - 3]);
    let c12 = part(&[1, 2, n - 3]);
    let c3 = part(&[3, n - 3]);
    vec![
        poly(n, vec![(cn.clone(), q(1))]),
        poly(n, vec![(cn.clone(), qr(m, 2))]),
        poly(n, vec![(cn.clone(), qr(m * (3 * m + 1), 12)), (c1.clone(), qr(1, 6))]),
        poly(n, vec![(cn.clone(), qr(m * m * (m + 1), 8)), (c1.clone(), qr(m, 4))]),
        poly(
            n,
            vec![
                (cn, qr(m * (15 * m * m * m + 30 * m * m + 5 * m - 2), 240)),
                (c1, qr(15 * m * m + 5 * m - 2, 60)),
                (c11, qr(1, 30)),
                (c2, qr(3, 30)),
                (c111, qr(-1, 30)),
                (c12, qr(3, 30)),
                (c3, qr(-3, 30)),
            ],
        ),
    ]
}

type Cell = (usize, usize);
type CellMap<'a> = &'a dyn Fn(Cell) -> Cell;

/// Orbit of `(p, q)` under the given involutions of the index square.
fn orbit(start: Cell, maps: &[CellMap<'_>]) -> BTreeSet<Cell> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(cell) = stack.pop() {
        for f in maps {
            let next = f(cell);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}

fn symmetric_diamond(n: u32, rng: &mut ChaCha8Rng, pure: bool, mirror: bool) -> HodgeDiamond {
    let size = n as usize;
    let conj = |(p, q): (usize, usize)| (q, p);
    let serre = move |(p, q): (usize, usize)| (size - p, size - q);
    let flip = move |(p, q): (usize, usize)| (p, size - q);
    let mut maps: Vec<CellMap<'_>> = vec![&conj, &serre];
    if mirror {
        maps.push(&flip);
    }
    let mut d = HodgeDiamond::zero(n);
    let mut done = BTreeSet::new();
    for p in 0..=size {
        for qi in 0..=size {
            if done.contains(&(p, qi)) {
                continue;
            }
            let cells = orbit((p, qi), &maps);
            let diagonal = cells.iter().any(|&(a, b)| a == b);
            let value = if diagonal {
                rng.gen_range(1..=6)
            } else if pure && !mirror {
                0
            } else {
                rng.gen_range(0..=4)
            };
            for &(a, b) in &cells {
                d.set(a, b, value);
                done.insert((a, b));
            }
        }
    }
    d
}

/// Kaehler-valid diamond of dimension `1 ..= max_n`; roughly a third are pure.
pub fn random_kaehler_diamond(seed: u64, max_n: u32) -> HodgeDiamond {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let pure = rng.gen_bool(0.35);
    symmetric_diamond(n, &mut rng, pure, false)
}

/// Mirror-valid diamond of even dimension `2 ..= max_n`.
pub fn random_mirror_diamond(seed: u64, max_n: u32) -> HodgeDiamond {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * rng.gen_range(1..=max_n / 2);
    symmetric_diamond(n, &mut rng, false, true)
}

/// Exact solution of `sum_j x_j * columns[j] = target`.
pub struct SpanSolution {
    /// One solution, with free variables set to zero.
    pub values: Vec<Rational>,
    /// Whether the columns are independent, i.e. the solution is the only one.
    pub unique: bool,
}

/// Gauss-Jordan elimination over the rationals; each vector is a map from
/// coordinate to value. `None` if `target` is outside the span.
pub fn solve_span<K: Ord + Clone>(columns: &[BTreeMap<K, Rational>], target: &BTreeMap<K, Rational>) -> Option<SpanSolution> {
    let keys: BTreeSet<K> = columns.iter().flat_map(|c| c.keys().cloned()).chain(target.keys().cloned()).collect();
    let zero = q(0);
    let width = columns.len();
    let mut rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|k| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c.get(k).cloned().unwrap_or_else(|| zero.clone())).collect();
            row.push(target.get(k).cloned().unwrap_or_else(|| zero.clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..width {
        let found = (pivot_row..rows.len()).find(|&r| rows[r][col] != zero);
        let Some(r) = found else {
            continue;
        };
        pivots.push(col);
        rows.swap(pivot_row, r);
        let pivot = rows[pivot_row][col].clone();
        for v in rows[pivot_row].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        for other in 0..rows.len() {
            if other != pivot_row && rows[other][col] != zero {
                let factor = rows[other][col].clone();
                for c in 0..=width {
                    let delta = factor.clone() * rows[pivot_row][c].clone();
                    rows[other][c] = rows[other][c].clone() - delta;
                }
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| r[width] != zero) {
        return None;
    }
    let mut values = vec![zero; width];
    for (r, &col) in pivots.iter().enumerate() {
        values[col] = rows[r][width].clone();
    }
    Some(SpanSolution { unique: pivots.len() == width, values })
}

/// Coordinates of a `y`-free Chern polynomial.
pub fn coordinates(p: &ChernPolynomial<Rational>) -> BTreeMap<Partition, Rational> {
    p.terms().map(|(k, c)| {
        assert!(c.is_constant());
        (k.clone(), c.coeff(0))
    })
    .collect()
}

/// Elementary symmetric values `e_0 .. e_m` of integer roots.
pub fn elementary_values(roots: &[i64]) -> Vec<i64> {
    let mut e = vec![0i64; roots.len() + 1];
    e[0] = 1;
    for &x in roots {
        for k in (1..e.len()).rev() {
            e[k] += e[k - 1] * x;
        }
    }
    e
}

/// Chern numbers obtained by reading `c_k = e_k(roots)`.
pub fn chern_from_roots(roots: &[i64]) -> ChernNumbers {
    let n = roots.len() as u32;
    let e = elementary_values(roots);
    let values = Partition::all_of(n)
        .into_iter()
        .map(|p| {
            let v = p.parts().iter().map(|&k| e[k as usize]).product();
            (p, v)
        });
    ChernNumbers::from_values(n, values).unwrap()
}

/// Degree-`n` coefficient of `prod_i factor(x_i t)` with concrete roots,
/// computed by plain series multiplication.
pub fn substituted_product(factor: &TruncatedSeries<Rational>, roots: &[i64]) -> YPolynomial<Rational> {
    let n = roots.len();
    let mut acc = TruncatedSeries::one(n + 1);
    for &x in roots {
        acc = acc.mul(&factor.truncated(n + 1).rescale_variable(&q(x)));
    }
    acc.coeff(n)
}
