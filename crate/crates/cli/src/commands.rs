//! Command dispatch.

use std::path::Path;

use chiy_core::constraints::{
    c1cn1_lower_bound, c2cn2_lower_bound, calabi_yau_residual, check_c1cn1, check_c2cn2, check_calabi_yau,
    check_salamon, minus_one_consistency, salamon_residual, BOUND_C1CN1, BOUND_C2CN2, CALABI_YAU, SALAMON,
};
use chiy_core::crosscheck::{brute_force_genus, projective_space_chern_numbers};
use chiy_core::genus::{
    chern_power_moments, chi_y_factor, evaluate_genus, hrr_genus_formula, taylor_at_minus_one, taylor_from_even_betti,
};
use chiy_core::localization::{
    hamiltonian_obstruction_report, localized_chi_y, localized_poincare, morse_indices, DEFAULT_DEPTH,
};
use chiy_core::{
    BettiVector, ConstraintReport, HodgeDiamond, MomentSpec, Quantity, Rational, Scalar, Status,
    Tier, YPolynomial,
};
use serde_json::{json, Value};

use crate::manifest::ManifoldManifest;
use crate::render::{self, TableRow};
use crate::{Cli, Command, Outcome, EXIT_OK, EXIT_VIOLATION};

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Formula { n } => formula(cli, *n),
        Command::Taylor { n, k } => taylor(cli, *n, *k),
        Command::Moments { n, k } => moments(cli, *n, *k),
        Command::Check { file } => load(file).and_then(|m| check(cli, &m)),
        Command::Bounds { file } => load(file).and_then(|m| bounds(cli, &m)),
        Command::Localize { file } => load(file).and_then(|m| localize(cli, &m)),
    };
    result.unwrap_or_else(Outcome::input_error)
}

fn load(path: &Path) -> Result<ManifoldManifest, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}\n", path.display()))?;
    ManifoldManifest::parse(&text).map_err(|e| format!("{}: {e}\n", path.display()))
}

fn core_err(e: chiy_core::Error) -> String {
    format!("{e}\n")
}

fn verdict(id: &str, ok: bool, left: Quantity, right: Quantity, detail: &str) -> ConstraintReport {
    ConstraintReport {
        id: id.to_string(),
        status: if ok { Status::Satisfied } else { Status::Violated },
        left,
        right,
        detail: Some(detail.to_string()),
    }
}

fn exit_code(reports: &[ConstraintReport]) -> i32 {
    if reports.iter().any(ConstraintReport::is_violated) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn sum_neg_y_powers(n: u32) -> YPolynomial<Rational> {
    YPolynomial::from_terms((0..=n).map(|p| (p, Rational::from_i64(if p % 2 == 0 { 1 } else { -1 }))))
}

/// Renders a formula table plus optional oracle reports.
fn table_outcome(cli: &Cli, command: &str, n: u32, depth: Option<u32>, rows: Vec<TableRow>, oracle: Vec<ConstraintReport>) -> Outcome {
    let stdout = if cli.json {
        let mut v = render::table_json(command, n, depth, &rows);
        if cli.oracle {
            v["oracle"] = Value::Array(oracle.iter().map(render::report_json).collect());
        }
        render::to_pretty(&v)
    } else {
        let mut s = render::table_text(&rows);
        if cli.oracle {
            s.push_str(&render::reports_text(&oracle));
        }
        s
    };
    Outcome { stdout, stderr: String::new(), code: exit_code(&oracle) }
}

fn formula(cli: &Cli, n: u32) -> Result<Outcome, String> {
    let formula = hrr_genus_formula::<Rational>(n);
    let mut oracle = Vec::new();
    if cli.oracle {
        if n <= 5 {
            let brute = brute_force_genus(&chi_y_factor(n as usize + 1), n);
            oracle.push(verdict(
                "oracle.expansion",
                brute == formula,
                Quantity::Absent,
                Quantity::Absent,
                "log/exp expansion vs explicit expansion over n roots",
            ));
        }
        let chi = evaluate_genus(&formula, &projective_space_chern_numbers(n)).map_err(core_err)?;
        oracle.push(ConstraintReport::equality("oracle.projective-space", chi, sum_neg_y_powers(n)));
    }
    let rows = vec![TableRow { label: "chi_y".into(), formula }];
    Ok(table_outcome(cli, "formula", n, None, rows, oracle))
}

fn taylor(cli: &Cli, n: u32, k: u32) -> Result<Outcome, String> {
    let taylor = taylor_at_minus_one::<Rational>(n, k).map_err(core_err)?;
    let mut oracle = Vec::new();
    if cli.oracle {
        let chern = projective_space_chern_numbers(n);
        let expected = taylor_from_even_betti(&vec![1; n as usize + 1], k);
        for (i, f) in taylor.coefficients.iter().enumerate() {
            let value = f.evaluate(&chern).map_err(core_err)?.coeff(0);
            oracle.push(ConstraintReport::equality(
                format!("oracle.projective-space.a{i}"),
                value,
                expected[i].clone(),
            ));
        }
    }
    let rows = taylor
        .coefficients
        .into_iter()
        .enumerate()
        .map(|(i, formula)| TableRow { label: format!("a_{i}"), formula })
        .collect();
    Ok(table_outcome(cli, "taylor", n, Some(k), rows, oracle))
}

fn moment_label(i: usize) -> String {
    match i {
        0 => "h(1)".into(),
        1 => "h(p)".into(),
        _ => format!("h(p^{i})"),
    }
}

fn moments(cli: &Cli, n: u32, k: u32) -> Result<Outcome, String> {
    let moments = chern_power_moments::<Rational>(n, k).map_err(core_err)?;
    let mut oracle = Vec::new();
    if cli.oracle {
        let chern = projective_space_chern_numbers(n);
        let diamond = HodgeDiamond::pure(&vec![1; n as usize + 1]);
        for (i, f) in moments.moments.iter().enumerate() {
            let value = f.evaluate(&chern).map_err(core_err)?.coeff(0);
            let direct = diamond.h_moment(&MomentSpec::p_pow(i as u32));
            oracle.push(ConstraintReport::equality(format!("oracle.projective-space.h{i}"), value, direct));
        }
    }
    let rows = moments
        .moments
        .into_iter()
        .enumerate()
        .map(|(i, formula)| TableRow { label: moment_label(i), formula })
        .collect();
    Ok(table_outcome(cli, "moments", n, Some(k), rows, oracle))
}

fn depth(cli: &Cli, n: u32) -> u32 {
    cli.depth.unwrap_or(DEFAULT_DEPTH).min(n)
}

fn manifest_outcome(cli: &Cli, command: &str, m: &ManifoldManifest, extra: Value, extra_text: String, reports: Vec<ConstraintReport>) -> Outcome {
    let code = exit_code(&reports);
    let stdout = if cli.json {
        let mut v = json!({
            "command": command,
            "name": m.name,
            "dimension": m.dimension,
        });
        if let Value::Object(fields) = extra {
            for (k, value) in fields {
                v[k] = value;
            }
        }
        v["reports"] = Value::Array(reports.iter().map(render::report_json).collect());
        v["violated"] = json!(code == EXIT_VIOLATION);
        render::to_pretty(&v)
    } else {
        let title = m.name.as_deref().unwrap_or("manifest");
        let mut s = format!("{command} {title} (dimension {})\n", m.dimension);
        s.push_str(&extra_text);
        s.push_str(&render::reports_text(&reports));
        s.push_str(&render::summary(&reports));
        s.push('\n');
        s
    };
    Outcome { stdout, stderr: String::new(), code }
}

fn tier_name(t: Tier) -> &'static str {
    match t {
        Tier::Raw => "raw",
        Tier::Kaehler => "kaehler",
        Tier::Mirror => "mirror",
    }
}

fn check(cli: &Cli, m: &ManifoldManifest) -> Result<Outcome, String> {
    let n = m.dimension;
    let mut reports = Vec::new();
    if let Some(d) = &m.hodge {
        let tier = cli.tier.map(Tier::from).unwrap_or_else(|| m.effective_structure().tier());
        let violations = d.validate(tier);
        if violations.is_empty() {
            reports.push(verdict("hodge.valid", true, Quantity::Absent, Quantity::Absent, tier_name(tier)));
        }
        reports.extend(violations.iter().map(|v| ConstraintReport::violated(v.id(), v.to_string())));
    }
    if let (Some(b), None) = (&m.betti, &m.hodge) {
        reports.push(
            ConstraintReport::equality("betti.poincare", b.poincare_residual(), YPolynomial::zero())
                .with_detail("P_y - y^k P_(1/y)"),
        );
    }
    if let Some(chern) = &m.chern {
        if let Some(b) = m.effective_betti() {
            reports.push(
                ConstraintReport::equality(
                    "euler",
                    Rational::from_i64(chern.top()),
                    Rational::from_i64(b.euler_characteristic()),
                )
                .with_detail("c_n vs sum (-1)^i b_i"),
            );
        }
        if let Some(d) = &m.hodge {
            let chi = evaluate_genus(&hrr_genus_formula::<Rational>(n), chern).map_err(core_err)?;
            reports.push(
                ConstraintReport::equality("chi-y", chi, d.chi_profile().chi_y)
                    .with_detail("chi_y from chern numbers vs sum chi^p y^p"),
            );
            reports.extend(minus_one_consistency(d, chern, depth(cli, n)).map_err(core_err)?);
        }
    }
    if m.effective_betti().is_some() {
        reports.extend(bound_reports(m)?);
    }
    Ok(manifest_outcome(cli, "check", m, json!({}), String::new(), reports))
}

fn bound_reports(m: &ManifoldManifest) -> Result<Vec<ConstraintReport>, String> {
    let n = m.dimension;
    let structure = m.effective_structure();
    let Some(betti) = m.effective_betti() else {
        return Ok(Vec::new());
    };
    if !structure.is_kaehler() {
        return Ok(vec![ConstraintReport::not_applicable(
            BOUND_C1CN1,
            format!("bounds need a Kaehler structure, manifest claims {structure}"),
        )]);
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pure = m.hodge.as_ref().map(|d| d.predicates().is_pure);
    let c1cn1 = m.chern.as_ref().and_then(|c| c.c1_cn1());
    let mut out = Vec::new();
    out.push(match c1cn1 {
        Some(v) => check_c1cn1(&betti, n, v, pure).map_err(core_err)?,
        None => ConstraintReport::not_applicable(BOUND_C1CN1, "unverifiable: no chern numbers supplied"),
    });
    use crate::Structure::*;
    if matches!(structure, CalabiYau | HyperKaehler) || c1cn1 == Some(0) {
        out.push(check_calabi_yau(&betti, n, pure).map_err(core_err)?);
    }
    match structure {
        Mirror => out.push(match c1cn1 {
            Some(v) => check_salamon(&betti, n, v).map_err(core_err)?,
            None => ConstraintReport::not_applicable(SALAMON, "unverifiable: no chern numbers supplied"),
        }),
        HyperKaehler => out.push(check_salamon(&betti, n, 0).map_err(core_err)?),
        _ => {}
    }
    if structure == HyperKaehler {
        out.push(match m.chern.as_ref().and_then(|c| c.c2_cn2()) {
            Some(v) => check_c2cn2(&betti, n, v).map_err(core_err)?,
            None => ConstraintReport::not_applicable(BOUND_C2CN2, "unverifiable: no chern numbers supplied"),
        });
    }
    if structure == CalabiYau {
        if let Some(v) = c1cn1 {
            out.push(
                ConstraintReport::equality(format!("{CALABI_YAU}.c1"), Rational::from_i64(v), Rational::from_i64(0))
                    .with_detail("c_1 = 0 forces c_1 c_(n-1) = 0"),
            );
        }
    }
    Ok(out)
}

fn bound_values(betti: &BettiVector, n: u32) -> Result<Vec<(&'static str, Rational)>, String> {
    let mut values = vec![
        ("c1cn1-lower-bound", c1cn1_lower_bound(betti, n).map_err(core_err)?),
        ("calabi-yau-residual", calabi_yau_residual(betti, n).map_err(core_err)?),
    ];
    if n % 2 == 0 {
        values.push(("salamon-residual", salamon_residual(betti, n).map_err(core_err)?));
        values.push(("c2cn2-lower-bound", c2cn2_lower_bound(betti, n).map_err(core_err)?));
    }
    Ok(values)
}

fn bounds(cli: &Cli, m: &ManifoldManifest) -> Result<Outcome, String> {
    let betti = m
        .effective_betti()
        .ok_or_else(|| "bounds need betti numbers or a hodge diamond\n".to_string())?;
    let values = bound_values(&betti, m.dimension)?;
    let text: String = values.iter().map(|(k, v)| format!("{k} = {v}\n")).collect();
    let json_values: serde_json::Map<String, Value> =
        values.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
    let reports = bound_reports(m)?;
    Ok(manifest_outcome(cli, "bounds", m, json!({ "values": json_values }), text, reports))
}

fn localize(cli: &Cli, m: &ManifoldManifest) -> Result<Outcome, String> {
    let data = m
        .fixed_points
        .as_ref()
        .ok_or_else(|| "localize needs fixed_points\n".to_string())?;
    let reports = hamiltonian_obstruction_report(data, m.hodge.as_ref(), m.chern.as_ref(), depth(cli, m.dimension))
        .map_err(core_err)?;
    let indices = morse_indices(data);
    let chi = localized_chi_y(data).primary;
    let poincare = localized_poincare(data);
    let mut text = format!(
        "indices = {indices:?}\nlocalized chi_y = {chi}\nlocalized P_y = {poincare}\n"
    );
    let realizable = !reports.iter().any(ConstraintReport::is_violated);
    if !realizable {
        text.push_str("not realizable by a Hamiltonian action with isolated fixed points\n");
    }
    let extra = json!({
        "indices": indices,
        "chi_y": chi.to_string(),
        "poincare": poincare.to_string(),
        "realizable": realizable,
    });
    Ok(manifest_outcome(cli, "localize", m, extra, text, reports))
}
