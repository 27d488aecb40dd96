//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//! Runs without the libtest harness so the lines are always printed.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chiy_core::constraints::{
    c1cn1_lower_bound, c2cn2_lower_bound, calabi_yau_residual, check_c1cn1, check_c2cn2, check_calabi_yau,
    salamon_residual,
};
use chiy_core::crosscheck::{brute_force_genus, projective_space_chern_numbers};
use chiy_core::genus::{
    chern_power_moments, chi_y_factor, duality_residual, evaluate_genus, hrr_genus_formula, taylor_at_minus_one,
};
use chiy_core::localization::{localized_chi_y, DUALITY};
use chiy_core::symmetric::genus_expand;
use chiy_core::{
    BettiVector, ChernNumbers, CoefficientMode, FixedPointData, HodgeDiamond, MomentSpec, Partition, Rational,
    Status, TruncatedSeries, YPolynomial,
};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_tables() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 4..=10u32 {
        let start = Instant::now();
        let taylor = taylor_at_minus_one::<Rational>(n, 4).map_err(|e| e.to_string())?;
        let moments = chern_power_moments::<Rational>(n, 4).map_err(|e| e.to_string())?;
        slowest = slowest.max(start.elapsed());
        let expected_a = closed_form_taylor(n);
        let expected_h = closed_form_moments(n);
        for i in 0..=4 {
            ensure(taylor.coefficients[i] == expected_a[i], || {
                format!("n={n} a_{i}: got {} expected {}", taylor.coefficients[i], expected_a[i])
            })?;
            ensure(moments.moments[i] == expected_h[i], || {
                format!("n={n} h(p^{i}): got {} expected {}", moments.moments[i], expected_h[i])
            })?;
        }
    }
    ensure(slowest < Duration::from_secs(1), || format!("slowest n took {slowest:?}"))?;
    Ok(format!("n=4..10, a_0..a_4 and h(1)..h(p^4) exact; slowest n {slowest:.2?}"))
}

fn duality() -> Outcome {
    for n in 0..=8 {
        let r = duality_residual::<Rational>(n);
        ensure(r.is_zero(), || format!("n={n}: residual {r}"))?;
    }
    Ok("residual identically zero for n=0..8".into())
}

fn projective_spaces() -> Outcome {
    for n in 0..=6u32 {
        let chi = evaluate_genus(&hrr_genus_formula::<Rational>(n), &projective_space_chern_numbers(n))
            .map_err(|e| e.to_string())?;
        let alternating = YPolynomial::from_terms((0..=n).map(|p| (p, q(if p % 2 == 0 { 1 } else { -1 }))));
        let indices: Vec<u32> = (0..=n).collect();
        let local = localized_chi_y(&FixedPointData::from_indices(n, &indices).unwrap()).primary;
        ensure(chi == alternating && local == alternating, || {
            format!("n={n}: genus {chi}, sum {alternating}, localized {local}")
        })?;
    }
    Ok("n=0..6 genus = sum (-y)^p = localized sum".into())
}

fn k3_battery() -> Outcome {
    let d = HodgeDiamond::from_rows(&[vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]]).unwrap();
    let b = d.betti();
    let n = 2;
    ensure(salamon_residual(&b, n) == Ok(q(0)), || "salamon residual".into())?;
    let h_p2 = chern_power_moments::<Rational>(2, 2)
        .unwrap()
        .moments[2]
        .evaluate(&ChernNumbers::from_values(2, [(Partition::single(2), 24)]).unwrap())
        .unwrap()
        .coeff(0);
    let h_pq = d.h_moment(&MomentSpec::monomial(1, 1));
    ensure(h_p2 == q(28) && h_pq == q(24), || format!("h(p^2)={h_p2}, h(pq)={h_pq}"))?;
    ensure(b.f_moment(2) == q(104) && q(2) * h_p2 + q(2) * h_pq == q(104), || "f(2) != 104".into())?;
    ensure(c1cn1_lower_bound(&b, n) == Ok(q(-12)), || "c1cn1 bound".into())?;
    let r = check_c1cn1(&b, n, 0, Some(false)).unwrap();
    ensure(r.status == Status::Satisfied, || format!("c1cn1 status {}", r.status))?;
    ensure(c2cn2_lower_bound(&b, n) == Ok(q(-36)), || "c2cn2 bound".into())?;
    let r = check_c2cn2(&b, n, 24).unwrap();
    ensure(r.status == Status::Satisfied, || format!("c2cn2 status {}", r.status))?;
    ensure(calabi_yau_residual(&b, n) == Ok(q(24)), || "calabi-yau residual".into())?;
    let r = check_calabi_yau(&b, n, Some(false)).unwrap();
    ensure(r.status == Status::Satisfied, || format!("calabi-yau status {}", r.status))?;
    Ok("salamon 0, f(2)=104=2*28+2*24, bounds -12 < 0 and -36 < 24, residual 24".into())
}

fn plain_moment(b: &BettiVector, k: u32) -> Rational {
    b.entries().iter().enumerate().fold(q(0), |acc, (i, &v)| acc + q(v) * q((i as i64).pow(k)))
}

fn purity() -> Outcome {
    let (mut pure, mut mixed) = (0, 0);
    for seed in 0..200u64 {
        let d = random_kaehler_diamond(seed, 4);
        ensure(d.validate(chiy_core::Tier::Kaehler).is_empty(), || format!("seed {seed} not Kaehler"))?;
        let b = d.betti();
        let is_pure = d.predicates().is_pure;
        let quad = (q(4) * d.h_moment(&MomentSpec::monomial(1, 1)), plain_moment(&b, 2));
        let quart = (q(16) * d.h_moment(&MomentSpec::monomial(2, 2)), plain_moment(&b, 4));
        for (label, (lhs, rhs)) in [("quadratic", quad), ("quartic", quart)] {
            ensure(lhs <= rhs && (lhs == rhs) == is_pure, || {
                format!("seed {seed} {label}: {lhs} vs {rhs}, pure={is_pure}")
            })?;
        }
        if is_pure {
            pure += 1;
        } else {
            mixed += 1;
        }
    }
    ensure(pure > 0 && mixed > 0, || format!("degenerate sample: {pure} pure, {mixed} mixed"))?;
    Ok(format!("200 diamonds ({pure} pure, {mixed} mixed); equality exactly on pure"))
}

fn run_manifest(text: &str, command: &str) -> i32 {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, text).unwrap();
    chiy_cli::run(["chiy", command, path.to_str().unwrap()]).code
}

fn hamiltonian_battery() -> Outcome {
    let spheres = r#"{"dimension":2,"chern":{"1,1":8,"2":4},"fixed_points":{"indices":[0,1,1,2]}}"#;
    let plane = r#"{"dimension":2,"chern":{"1,1":9,"2":3},"fixed_points":{"indices":[0,1,2]}}"#;
    let bad = r#"{"dimension":1,"fixed_points":{"indices":[0,0,1]}}"#;
    let codes = [run_manifest(spheres, "localize"), run_manifest(plane, "localize"), run_manifest(bad, "localize")];
    ensure(codes == [0, 0, 1], || format!("exit codes {codes:?}"))?;
    let data = FixedPointData::from_indices(1, &[0, 0, 1]).unwrap();
    let report = chiy_core::localization::hamiltonian_obstruction_report(&data, None, None, 1).unwrap();
    let duality = report.iter().find(|r| r.id == DUALITY).unwrap();
    ensure(duality.status == Status::Violated, || "duality not violated".into())?;
    Ok("{0,1,1,2} and {0,1,2} exit 0; {0,0,1} fails duality, exit 1".into())
}

fn odd_reduction() -> Outcome {
    for n in 1..=8u32 {
        let moments = chern_power_moments::<Rational>(n, n).map_err(|e| e.to_string())?;
        let mut i = 0;
        while 2 * i < n {
            let basis: Vec<_> = (0..=i).map(|j| coordinates(&moments.moments[2 * j as usize])).collect();
            let target = coordinates(&moments.moments[2 * i as usize + 1]);
            let solution = solve_span(&basis, &target).ok_or_else(|| format!("n={n} i={i}: not in span"))?;
            ensure(solution.unique, || format!("n={n} i={i}: even moments dependent"))?;
            let lead = qr(2 * i as i64 + 1, 2) * q(n as i64);
            ensure(solution.values[i as usize] == lead, || {
                format!("n={n} i={i}: leading {} expected {lead}", solution.values[i as usize])
            })?;
            i += 1;
        }
    }
    Ok("n=1..8, unique solve, leading coefficient (i+1/2)n".into())
}

fn brute_force() -> Outcome {
    let order = 7;
    let one_plus_x = TruncatedSeries::from_scalars([q(1), q(1)], order);
    let exp_x = TruncatedSeries::x(order).exp(CoefficientMode::Exact).unwrap();
    let todd = TruncatedSeries::<Rational>::one(order + 1)
        .sub(&TruncatedSeries::exp_neg_x(order + 1))
        .divide_by_x_power(1)
        .unwrap()
        .inverse(CoefficientMode::Exact)
        .unwrap();
    let mut factors = vec![
        ("1+x", one_plus_x.clone()),
        ("(1+x)^2", one_plus_x.mul(&one_plus_x)),
        ("e^x", exp_x),
        ("todd", todd),
        ("chi_y", chi_y_factor(order)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..4 {
        let coeffs: Vec<Rational> = (0..order)
            .map(|j| if j == 0 { q(1) } else { qr(rng.gen_range(-5..=5), rng.gen_range(1..=3)) })
            .collect();
        factors.push((["random0", "random1", "random2", "random3"][k], TruncatedSeries::from_scalars(coeffs, order)));
    }
    let mut checked = 0;
    for (name, f) in &factors {
        for n in 0..=5u32 {
            let fast = genus_expand(f, n).map_err(|e| format!("{name} n={n}: {e}"))?;
            let slow = brute_force_genus(f, n);
            ensure(fast == slow, || format!("{name} n={n}: {fast} vs {slow}"))?;
            checked += 1;
        }
    }
    Ok(format!("{} factors x n=0..5 ({checked} cases) agree", factors.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden tables", golden_tables),
        ("duality", duality),
        ("projective spaces", projective_spaces),
        ("K3 battery", k3_battery),
        ("purity equalities", purity),
        ("hamiltonian battery", hamiltonian_battery),
        ("odd reduction", odd_reduction),
        ("brute-force equivalence", brute_force),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS {} {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
