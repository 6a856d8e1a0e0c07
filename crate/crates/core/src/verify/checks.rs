use std::collections::HashMap;

use super::smooth::smooth_finding;
use super::{run_check, CheckOutcome, Finding, VerifyConfig};
use super::{BLOWUP, BLOWUP_FLAT, COMPONENTS, FLAT, KOTTWITZ_WEDGE, RAW_EQUIV, SMOOTH};
use crate::chart::{
    bilinear, blocks, build_blowup_patch, build_parametrization, build_raw_chart, build_rees_presentation,
    build_simplified_chart, chart_ring, entry_name, patch_pivot, q_form, t_name, v_name, z2_column, z_name,
    ChartKind, ChartSpec, MatrixExpr,
};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Ring, PI};

fn var(ring: &Ring, name: &str) -> Result<Polynomial> {
    Polynomial::var(ring, name)
}

/// `None` when `a = b`, otherwise a line naming a generator on one side
/// that the other side misses.
fn compare(a: &Ideal, a_name: &str, b: &Ideal, b_name: &str) -> Result<Option<String>> {
    if let Some(g) = b.first_non_member(a)? {
        return Ok(Some(format!("{a_name} has {g}, not in {b_name}")));
    }
    if let Some(g) = a.first_non_member(b)? {
        return Ok(Some(format!("{b_name} has {g}, not in {a_name}")));
    }
    Ok(None)
}

fn flat_finding(ideal: &Ideal) -> Result<Finding> {
    let pi = var(ideal.ring(), PI)?;
    let saturated = ideal.saturate(&pi)?;
    Ok(match ideal.first_non_member(&saturated)? {
        None => Finding::pass(vec!["I : pi^inf = I".into()]),
        Some(g) => Finding::fail(vec![format!("pi-torsion element {g}")]),
    })
}

/// Passes iff `pi` is a nonzerodivisor modulo `ideal`.
pub fn check_flat(ideal: &Ideal, instance: &str) -> CheckOutcome {
    run_check(FLAT, instance, || flat_finding(ideal))
}

/// `I + (pi)`.
pub fn special_fiber(ideal: &Ideal) -> Result<Ideal> {
    let pi = var(ideal.ring(), PI)?;
    ideal.with_generators(&[pi])
}

fn fiber_base(ring: &Ring, spec: &ChartSpec) -> Result<Vec<Polynomial>> {
    Ok(vec![
        &var(ring, &v_name(spec.i0))? - &Polynomial::one(ring),
        var(ring, PI)?,
    ])
}

/// Named special-fiber components of the chart `spec`, each including
/// `v_{i0} - 1` and `pi`. Kind A: `J1 = (Z2)`,
/// `J2 = (∧²[V2 | HZ2], Z2ᵗV2, V2ᵗHV2, Z2ᵗHZ2)`, `J3 = (V2)` (omitted when it
/// is the unit ideal); kind B: `(u)` and `(V2ᵗHV2)`.
pub fn components_of(spec: &ChartSpec, ring: &Ring) -> Result<Vec<(String, Ideal)>> {
    let base = fiber_base(ring, spec)?;
    let b = blocks(ring, spec)?;
    let q = bilinear(&b.v2, &b.h, &b.v2)?;
    let make = |extra: Vec<Polynomial>| {
        let mut gens = base.clone();
        gens.extend(extra);
        Ideal::new(ring, gens)
    };
    if spec.kind == ChartKind::SimplifiedB {
        return Ok(vec![
            ("(u)".into(), make(vec![var(ring, "u")?])?),
            ("(V2'HV2)".into(), make(vec![q])?),
        ]);
    }
    let z2 = z2_column(ring, spec);
    let mut j2 = b.v2.hstack(&b.h.mul(&z2)?)?.wedge2();
    j2.push(bilinear(&z2, &MatrixExpr::identity(ring, z2.rows()), &b.v2)?);
    j2.push(q);
    j2.push(bilinear(&z2, &b.h, &z2)?);
    let mut out = vec![
        ("J1".to_string(), make(z2.entries().to_vec())?),
        ("J2".to_string(), make(j2)?),
    ];
    if spec.unit_in_first_block() {
        out.push(("J3".into(), make(b.v2.entries().to_vec())?));
    }
    Ok(out)
}

fn intersect_all(parts: &[&Ideal]) -> Result<Ideal> {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = acc.intersect(p)?;
    }
    Ok(acc)
}

fn components_finding(spec: &ChartSpec, chart: &Ideal, comps: &[(String, Ideal)], config: &VerifyConfig) -> Result<Finding> {
    let n = spec.n;
    let fiber = special_fiber(chart)?;
    let comps: Vec<(String, Ideal)> = comps
        .iter()
        .map(|(name, c)| (name.clone(), c.clone().with_budget(config.budget)))
        .collect();
    let names: Vec<&str> = comps.iter().map(|(n, _)| n.as_str()).collect();
    let meet_name = names.join(" ∩ ");
    let meet = intersect_all(&comps.iter().map(|(_, c)| c).collect::<Vec<_>>())?;
    let mut witness = Vec::new();
    if let Some(diff) = compare(&fiber, "I+(pi)", &meet, &meet_name)? {
        return Ok(Finding::fail(vec![diff]));
    }
    witness.push(format!("I+(pi) = {meet_name}"));
    let mut pass = true;
    let mut dim_line = |label: &str, ideal: &Ideal, want: usize| -> Result<()> {
        let d = ideal.dimension()?;
        pass &= d == want;
        witness.push(format!("dim {label} = {d} (expected {want})"));
        Ok(())
    };
    dim_line("I", chart, n)?;
    dim_line("I+(pi)", &fiber, n - 1)?;
    for (name, c) in &comps {
        dim_line(name, c, n - 1)?;
    }
    if spec.kind == ChartKind::SimplifiedB {
        let both = comps[0].1.sum(&comps[1].1)?;
        let line = stratum_finding("(u) + (V2'HV2)", &both, n - 2, config)?;
        pass &= line.pass;
        witness.extend(line.witness);
        for (name, c) in &comps {
            let sf = smooth_finding(c, None, config.max_minors)?;
            pass &= sf.pass;
            witness.push(if sf.pass { format!("{name} smooth") } else { format!("{name} singular: {}", sf.witness.join("; ")) });
        }
        return Ok(Finding { pass, witness });
    }
    witness.push("reducedness conditional on J2 prime; irreducibility of V(J2) not certified".into());
    Ok(Finding { pass, witness })
}

/// Special-fiber decomposition of the chart `spec` against its named
/// components, with dimension checks (and smoothness for kind B).
pub fn check_components(spec: &ChartSpec, chart: &Ideal, config: &VerifyConfig) -> CheckOutcome {
    run_check(COMPONENTS, &spec.to_string(), || {
        let comps = components_of(spec, chart.ring())?;
        components_finding(spec, chart, &comps, config)
    })
}

/// [`check_components`] against caller-supplied components.
pub fn check_components_with(
    spec: &ChartSpec,
    chart: &Ideal,
    comps: &[(String, Ideal)],
    config: &VerifyConfig,
) -> CheckOutcome {
    run_check(COMPONENTS, &spec.to_string(), || components_finding(spec, chart, comps, config))
}

/// Jacobian checks on the special-fiber components: for kind A, `J2` is
/// singular exactly along `(V2, Z2)` and the linear components are smooth;
/// for kind B both components and their intersection are smooth.
pub fn check_smoothness(spec: &ChartSpec, config: &VerifyConfig) -> CheckOutcome {
    run_check(SMOOTH, &spec.to_string(), || {
        let ring = chart_ring(spec)?;
        let comps = components_of(spec, &ring)?;
        let mut finding = Finding::pass(Vec::new());
        let mut parts: Vec<(String, Ideal, Option<Ideal>)> = Vec::new();
        if spec.kind == ChartKind::SimplifiedB {
            let both = comps[0].1.sum(&comps[1].1)?;
            parts.extend(comps.into_iter().map(|(n, c)| (n, c, None)));
            parts.push(("(u) + (V2'HV2)".into(), both, None));
        } else {
            for (name, c) in comps {
                let expected = if name == "J2" && spec.unit_in_first_block() {
                    let b = blocks(&ring, spec)?;
                    let mut gens = fiber_base(&ring, spec)?;
                    gens.extend(b.v2.entries().iter().cloned());
                    gens.extend(z2_column(&ring, spec).entries().iter().cloned());
                    Some(Ideal::new(&ring, gens)?)
                } else {
                    None
                };
                parts.push((name, c, expected));
            }
        }
        for (name, c, expected) in parts {
            let c = c.with_budget(config.budget);
            finding.merge(&name, smooth_finding(&c, expected.as_ref(), config.max_minors)?);
        }
        Ok(finding)
    })
}

/// `(t + pi)^(n-1)·(t - pi)`, lowest degree first.
fn kottwitz_target(ring: &Ring, n: usize) -> Result<Vec<Polynomial>> {
    let pi = var(ring, PI)?;
    let mut roots = vec![-&pi; n - 1];
    roots.push(pi);
    Ok(MatrixExpr::poly_from_roots(ring, &roots))
}

fn kottwitz_finding(spec: &ChartSpec, chart: &Ideal) -> Result<Finding> {
    let ring = chart.ring().clone();
    let param = build_parametrization(spec)?;
    let n = spec.n;
    let pi = var(&ring, PI)?;
    let pi_i = MatrixExpr::scalar(&ring, n, &pi);
    let gb = chart.groebner(MonomialOrder::GRevLex)?;
    let nf = |p: Polynomial| crate::poly::reduce(&p, &gb, MonomialOrder::GRevLex);
    let target = kottwitz_target(&ring, n)?;
    let mut witness = Vec::new();
    for (label, m) in [("Y", param.y.embed(&ring)?), ("X", param.x.embed(&ring)?)] {
        let wedge = m.add(&pi_i)?.wedge2();
        let syntactic = wedge.iter().filter(|p| p.is_zero()).count();
        for (k, p) in wedge.iter().enumerate() {
            let r = nf(p.clone())?;
            if !r.is_zero() {
                return Ok(Finding::fail(vec![format!("wedge^2({label}+pi) entry {k} reduces to {r}")]));
            }
        }
        witness.push(format!(
            "wedge^2({label}+pi): {} entries, {syntactic} identically zero, all in I",
            wedge.len()
        ));
        let cp = m.char_poly_with(&nf)?;
        for (k, (c, t)) in cp.iter().zip(&target).enumerate() {
            let r = nf(c - t)?;
            if !r.is_zero() {
                return Ok(Finding::fail(vec![format!(
                    "char poly of {label}: coefficient of t^{k} differs from (t+pi)^{}(t-pi) by {r}",
                    n - 1
                )]));
            }
        }
        witness.push(format!("char poly of {label} = (t+pi)^{}(t-pi) mod I", n - 1));
        let det = m.sub(&pi_i)?.determinant_with(&nf)?;
        if !det.is_zero() {
            return Ok(Finding::fail(vec![format!("det({label}-pi) reduces to {det}")]));
        }
        witness.push(format!("det({label}-pi) in I"));
    }
    // the printed variants with pi in place of pi^2 are recorded, not required
    let (a, b) = (0..2 * spec.l, 2 * spec.l..n);
    let x1y1 = param.x.submatrix(a.clone(), a.clone()).mul(&param.y.submatrix(a.clone(), a))?;
    let x4 = param.x.submatrix(b.clone(), b.clone());
    let y4 = param.y.submatrix(b.clone(), b);
    let y4x4 = y4.mul(&x4)?;
    for (label, m, size) in [("X1Y1", x1y1, 2 * spec.l), ("Y4X4", y4x4, n - 2 * spec.l)] {
        let m = m.embed(&ring)?;
        let square = m.sub(&MatrixExpr::scalar(&ring, size, &pi.pow(2)))?;
        let linear = m.sub(&MatrixExpr::scalar(&ring, size, &pi))?;
        let in_ideal = |mm: &MatrixExpr| -> Result<bool> {
            for p in mm.entries() {
                if !nf(p.clone())?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        witness.push(format!(
            "{label} - pi^2 I in I: {}; {label} - pi I in I: {}",
            in_ideal(&square)?,
            in_ideal(&linear)?
        ));
    }
    Ok(Finding::pass(witness))
}

/// Implied conditions on the parametrized matrices: `∧²(Y+pi)`, `∧²(X+pi)`,
/// characteristic polynomials `(t+pi)^(n-1)(t-pi)` and `det(Y-pi)`,
/// `det(X-pi)`, all modulo `chart`.
pub fn check_kottwitz_wedge(spec: &ChartSpec, chart: &Ideal) -> CheckOutcome {
    run_check(KOTTWITZ_WEDGE, &spec.to_string(), || kottwitz_finding(spec, chart))
}

fn raw_equiv_finding(spec: &ChartSpec, raw: &Ideal, simplified: &Ideal) -> Result<Finding> {
    let n = spec.n;
    let mut order: Vec<String> = Vec::new();
    for p in ['y', 'x'] {
        for i in 1..=n {
            for j in 1..=n {
                order.push(entry_name(p, n, i, j));
            }
        }
    }
    let names: Vec<&str> = order.iter().map(String::as_str).collect();
    let lin = raw.eliminate_linear(Some(&names))?;
    if lin.solved.len() != names.len() {
        let solved: Vec<&str> = lin.solved.iter().map(|(v, _)| v.as_str()).collect();
        let missing: Vec<&&str> = names.iter().filter(|v| !solved.contains(v)).collect();
        return Ok(Finding::fail(vec![format!("not determined linearly: {missing:?}")]));
    }
    let residual = lin.ideal;
    let mut witness = vec![format!(
        "raw chart: {} generators; X, Y solved linearly; residual: {} generators in {} variables",
        raw.generators().len(),
        residual.generators().len(),
        residual.ring().len()
    )];
    let param = build_parametrization(spec)?;
    let (lhs, ring) = if spec.kind == ChartKind::SimplifiedB {
        let (ring, _) = residual.ring().extend(&["u"])?;
        let u = var(&ring, "u")?;
        let link = &u - &var(&ring, &z_name(spec.mirror(spec.i0)))?;
        let lhs = residual.embed(&ring)?.with_generators(&[link])?;
        (lhs, ring)
    } else {
        (residual.clone(), residual.ring().clone())
    };
    let mut rhs_gens: Vec<Polynomial> = simplified
        .generators()
        .iter()
        .map(|g| g.embed(&ring))
        .collect::<Result<_>>()?;
    for i in 0..2 * spec.l {
        rhs_gens.push(&var(&ring, &z_name(i + 1))? - &param.z1.get(i, 0).embed(&ring)?);
    }
    if spec.kind == ChartKind::SimplifiedB {
        for (k, i) in spec.second_block().enumerate() {
            rhs_gens.push(&var(&ring, &z_name(i))? - &param.z2.get(k, 0).embed(&ring)?);
        }
    }
    let rhs = Ideal::new(&ring, rhs_gens)?.with_budget(raw.budget());
    let rhs_name = if spec.kind == ChartKind::SimplifiedB {
        "reduced chart + (Z2 - uHV2, Z1 - (a - pi u)JV1)"
    } else {
        "reduced chart + (Z1 + (a/2)JV1)"
    };
    if let Some(diff) = compare(&lhs, "eliminated raw chart", &rhs, rhs_name)? {
        witness.push(diff);
        return Ok(Finding::fail(witness));
    }
    witness.push(format!("eliminated raw chart = {rhs_name}"));
    Ok(Finding::pass(witness))
}

/// Eliminates `Y` and `X` from the raw chart of `(n, l, i0)` and compares
/// the residual ideal in `V, Z, pi` with the simplified chart plus the
/// parametrization of `Z1` (and of `Z2` through `u` for kind B).
pub fn check_raw_equiv(spec: &ChartSpec, config: &VerifyConfig) -> CheckOutcome {
    let base = if spec.kind == ChartKind::Raw { spec.simplified_base() } else { *spec };
    run_check(RAW_EQUIV, &spec.to_string(), || {
        let raw = build_raw_chart(&base.with_kind(ChartKind::Raw))?.with_budget(config.budget);
        let simplified = build_simplified_chart(&base)?;
        raw_equiv_finding(&base, &raw, &simplified)
    })
}

/// [`check_raw_equiv`] with explicit raw and simplified ideals.
pub fn check_raw_equiv_with(spec: &ChartSpec, raw: &Ideal, simplified: &Ideal) -> CheckOutcome {
    run_check(RAW_EQUIV, &spec.to_string(), || raw_equiv_finding(spec, raw, simplified))
}

fn patches(spec: &ChartSpec, j: Option<usize>) -> Vec<usize> {
    match j {
        Some(j) => vec![j],
        None => spec.second_block().collect(),
    }
}

fn blowup_flat_finding(spec: &ChartSpec, config: &VerifyConfig) -> Result<Finding> {
    if !spec.unit_in_first_block() {
        let chart = build_simplified_chart(spec)?.with_budget(config.budget);
        let mut f = flat_finding(&chart)?;
        f.witness.insert(0, "blow-up is the chart itself".into());
        return Ok(f);
    }
    let mut finding = Finding::pass(Vec::new());
    for j in patches(spec, None) {
        let patch = build_blowup_patch(&spec.with_kind(ChartKind::BlowupPatch(j)))?.with_budget(config.budget);
        finding.merge(&format!("j={j}"), flat_finding(&patch)?);
    }
    Ok(finding)
}

/// Flatness of every affine patch of the blow-up.
pub fn check_blowup_flat(spec: &ChartSpec, config: &VerifyConfig) -> CheckOutcome {
    run_check(BLOWUP_FLAT, &spec.to_string(), || blowup_flat_finding(spec, config))
}

/// [`check_blowup_flat`] on explicit `(j, patch)` ideals.
pub fn check_blowup_flat_with(spec: &ChartSpec, patches: &[(usize, Ideal)]) -> CheckOutcome {
    run_check(BLOWUP_FLAT, &spec.to_string(), || {
        let mut finding = Finding::pass(Vec::new());
        for (j, patch) in patches {
            finding.merge(&format!("j={j}"), flat_finding(patch)?);
        }
        Ok(finding)
    })
}

/// `t_j - 1`, `z_i - z_j t_i` for `i ≠ j`, in the blow-up ring.
fn patch_linear(ring: &Ring, spec: &ChartSpec, j: usize) -> Result<Vec<Polynomial>> {
    let zj = var(ring, &z_name(j))?;
    let mut gens = vec![&var(ring, &t_name(j))? - &Polynomial::one(ring)];
    for i in spec.second_block().filter(|&i| i != j) {
        gens.push(&var(ring, &z_name(i))? - &(&zj * &var(ring, &t_name(i))?));
    }
    Ok(gens)
}

fn oracle_patch(spec: &ChartSpec, chart: &Ideal, ring: &Ring, j: usize) -> Result<Ideal> {
    let mut gens: Vec<Polynomial> = chart.generators().iter().map(|g| g.embed(ring)).collect::<Result<_>>()?;
    gens.extend(patch_linear(ring, spec, j)?);
    let zj = var(ring, &z_name(j))?;
    Ideal::new(ring, gens)?.with_budget(chart.budget()).saturate(&zj)
}

fn patch_fiber_finding(spec: &ChartSpec, patch: &Ideal, j: usize, config: &VerifyConfig) -> Result<Finding> {
    let ring = patch.ring().clone();
    let n = spec.n;
    let m = patch_pivot(spec, j);
    let mut lin = vec![
        &var(&ring, &v_name(spec.i0))? - &Polynomial::one(&ring),
        var(&ring, PI)?,
    ];
    lin.extend(patch_linear(&ring, spec, j)?);
    let vm = var(&ring, &v_name(m))?;
    for k in spec.second_block().filter(|&k| k != m) {
        lin.push(&var(&ring, &v_name(k))? - &(&var(&ring, &t_name(spec.mirror(k)))? * &vm));
    }
    let tj = ring.require(&t_name(j))?;
    let q = q_form(&ring, spec)?.substitute_indexed(&HashMap::from([(tj, Polynomial::one(&ring))]), &ring)?;
    let factors = [
        (format!("(v{m})"), vm.clone()),
        (format!("(z{j})"), var(&ring, &z_name(j))?),
        ("(q)".to_string(), q),
    ];
    let comps: Vec<(String, Ideal)> = factors
        .iter()
        .map(|(name, f)| {
            let mut gens = lin.clone();
            gens.push(f.clone());
            Ok((name.clone(), Ideal::new(&ring, gens)?.with_budget(config.budget)))
        })
        .collect::<Result<_>>()?;
    let fiber = special_fiber(patch)?;
    let meet = intersect_all(&comps.iter().map(|(_, c)| c).collect::<Vec<_>>())?;
    let meet_name = format!("{} ∩ {} ∩ {}", comps[0].0, comps[1].0, comps[2].0);
    if let Some(diff) = compare(&fiber, "patch+(pi)", &meet, &meet_name)? {
        return Ok(Finding::fail(vec![diff]));
    }
    let mut finding = Finding::pass(vec![format!("patch+(pi) = {meet_name}")]);
    for a in 0..3 {
        for b in a + 1..3 {
            if comps[a].1.equal(&comps[b].1)? {
                finding.pass = false;
                finding.witness.push(format!("components {} and {} coincide", comps[a].0, comps[b].0));
            }
        }
    }
    let mut strata: Vec<(String, Ideal, usize)> = comps.iter().map(|(nm, c)| (nm.clone(), c.clone(), n - 1)).collect();
    for a in 0..3 {
        for b in a + 1..3 {
            strata.push((format!("{} + {}", comps[a].0, comps[b].0), comps[a].1.sum(&comps[b].1)?, n - 2));
        }
    }
    strata.push(("triple".into(), comps[0].1.sum(&comps[1].1)?.sum(&comps[2].1)?, n - 3));
    for (name, ideal, want) in strata {
        let line = stratum_finding(&name, &ideal, want, config)?;
        finding.pass &= line.pass;
        finding.witness.extend(line.witness);
    }
    Ok(finding)
}

/// One line `name: dim d, smooth` for a stratum expected smooth of
/// dimension `want`.
fn stratum_finding(name: &str, ideal: &Ideal, want: usize, config: &VerifyConfig) -> Result<Finding> {
    let d = ideal.dimension()?;
    let sf = smooth_finding(ideal, None, config.max_minors)?;
    let mut line = format!("{name}: dim {d}");
    if d != want {
        line.push_str(&format!(" (expected {want})"));
    }
    if sf.pass {
        line.push_str(", smooth");
    } else {
        line.push_str(&format!(", singular: {}", sf.witness.join("; ")));
    }
    Ok(Finding { pass: d == want && sf.pass, witness: vec![line] })
}

fn blowup_patch_finding(spec: &ChartSpec, chart: &Ideal, patch: &Ideal, j: usize, config: &VerifyConfig) -> Result<Finding> {
    let ring = patch.ring().clone();
    let oracle = oracle_patch(spec, chart, &ring, j)?;
    if let Some(diff) = compare(&oracle, "saturated oracle", patch, "patch presentation")? {
        return Ok(Finding::fail(vec![diff]));
    }
    let mut witness = vec!["saturated oracle = patch presentation".to_string()];
    let rees = build_rees_presentation(&spec.with_kind(ChartKind::ReesProj))?.embed(&ring)?;
    let zj = var(&ring, &z_name(j))?;
    let tj = &var(&ring, &t_name(j))? - &Polynomial::one(&ring);
    let dehom = rees.with_budget(config.budget).with_generators(&[tj])?.saturate(&zj)?;
    if let Some(diff) = compare(&oracle, "saturated oracle", &dehom, "dehomogenized Rees presentation")? {
        return Ok(Finding::fail(vec![diff]));
    }
    witness.push("saturated oracle = dehomogenized Rees presentation".into());
    let mut finding = Finding::pass(witness);
    let fiber = patch_fiber_finding(spec, patch, j, config)?;
    finding.pass &= fiber.pass;
    finding.witness.extend(fiber.witness);
    Ok(finding)
}

fn blowup_identity_finding(spec: &ChartSpec, chart: &Ideal) -> Result<Finding> {
    let ring = chart.ring().clone();
    let param = build_parametrization(spec)?;
    let z2: Vec<Polynomial> = param.z2.entries().iter().map(|p| p.embed(&ring)).collect::<Result<_>>()?;
    let u = var(&ring, "u")?;
    let centre = chart.with_generators(&z2)?;
    let principal = chart.with_generators(std::slice::from_ref(&u))?;
    if let Some(diff) = compare(&centre, "I + (Z2)", &principal, "I + (u)")? {
        return Ok(Finding::fail(vec![diff]));
    }
    let saturated = chart.saturate(&u)?;
    if let Some(g) = chart.first_non_member(&saturated)? {
        return Ok(Finding::fail(vec![format!("u is a zero divisor: {g} is u-torsion")]));
    }
    Ok(Finding::pass(vec![
        "I + (Z2) = I + (u)".into(),
        "u is a nonzerodivisor; the blow-up is the chart itself".into(),
    ]))
}

/// Blow-up of the chart along `(Z2)` on patch `j` (all patches when `None`):
/// the saturated oracle agrees with the patch presentation and with the
/// dehomogenized Rees presentation, and the special fiber is a normal
/// crossings union of three smooth components. For kind B the centre is
/// principal and the blow-up is the identity.
pub fn check_blowup(spec: &ChartSpec, j: Option<usize>, config: &VerifyConfig) -> CheckOutcome {
    match build_simplified_chart(spec) {
        Ok(chart) => check_blowup_using(spec, j, &chart.with_budget(config.budget), None, config),
        Err(e) => run_check(BLOWUP, &spec.to_string(), || Err(e)),
    }
}

/// [`check_blowup`] with an explicit chart ideal and, for a single patch,
/// an explicit patch ideal.
pub fn check_blowup_using(
    spec: &ChartSpec,
    j: Option<usize>,
    chart: &Ideal,
    patch: Option<&Ideal>,
    config: &VerifyConfig,
) -> CheckOutcome {
    run_check(BLOWUP, &spec.to_string(), || {
        if !spec.unit_in_first_block() {
            return blowup_identity_finding(&spec.simplified_base(), chart);
        }
        let mut finding = Finding::pass(Vec::new());
        for j in patches(spec, j) {
            let built;
            let patch = match patch {
                Some(p) => p,
                None => {
                    built = build_blowup_patch(&spec.with_kind(ChartKind::BlowupPatch(j)))?.with_budget(config.budget);
                    &built
                }
            };
            finding.merge(&format!("j={j}"), blowup_patch_finding(spec, chart, patch, j, config)?);
        }
        Ok(finding)
    })
}

/// [`check_blowup`] for one patch with explicit chart and patch ideals.
pub fn check_blowup_with(spec: &ChartSpec, j: usize, chart: &Ideal, patch: &Ideal, config: &VerifyConfig) -> CheckOutcome {
    check_blowup_using(spec, Some(j), chart, Some(patch), config)
}
