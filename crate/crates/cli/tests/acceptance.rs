//! Acceptance criteria, one line each. Run with
//! `cargo test -p splitcheck --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitcheck::registry::{default_specs, Registry};
use splitcheck::report::Report;
use splitcheck_core::chart::{
    build_blowup_patch, build_raw_chart, build_simplified_chart, ChartKind, ChartSpec,
};
use splitcheck_core::ideal::Ideal;
use splitcheck_core::poly::{rational, Monomial, MonomialOrder, Polynomial, VarTable};
use splitcheck_core::verify::{
    check_blowup, check_blowup_flat, check_blowup_flat_with, check_blowup_with, check_components,
    check_flat, check_kottwitz_wedge, check_raw_equiv, check_raw_equiv_with, check_smooth,
    check_smoothness, components_of, run_instance, CheckOutcome, Verdict, VerifyConfig,
};

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line { ok, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn spec(s: &str) -> ChartSpec {
    s.parse().unwrap()
}

fn drop_gen(ideal: &Ideal, k: usize) -> Ideal {
    let mut gens = ideal.generators().to_vec();
    gens.remove(k);
    Ideal::new(ideal.ring(), gens).unwrap()
}

fn times_pi_last(ideal: &Ideal) -> Ideal {
    let r = ideal.ring().clone();
    let mut gens = ideal.generators().to_vec();
    let last = gens.pop().unwrap();
    gens.push(&Polynomial::var(&r, "pi").unwrap() * &last);
    Ideal::new(&r, gens).unwrap()
}

fn describe(o: &CheckOutcome) -> String {
    format!("{} {} {}: {}", o.instance, o.check, o.verdict, o.witness.join("; "))
}

const TWISTED_CUBIC_LEX: [&str; 4] = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"];

fn sorted_texts(gb: &[Polynomial], order: MonomialOrder) -> Vec<String> {
    let mut v: Vec<String> = gb.iter().map(|g| g.to_string_in(order)).collect();
    v.sort();
    v
}

fn engine_soundness() -> Line {
    let start = Instant::now();
    let r = VarTable::new(&["x", "y", "z"]).unwrap();
    let cubic = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    let got = sorted_texts(&cubic.groebner(MonomialOrder::Lex).unwrap(), MonomialOrder::Lex);
    let mut want: Vec<String> = TWISTED_CUBIC_LEX.iter().map(|s| s.to_string()).collect();
    want.sort();
    if got != want {
        return line(false, format!("twisted cubic basis {got:?}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let chart = build_simplified_chart(&spec("n=6,l=1,i0=1,kind=simplified-A")).unwrap();
    let mut shuffles = 0;
    for (ideal, order) in [(&cubic, MonomialOrder::Lex), (&chart, MonomialOrder::GRevLex)] {
        let reference = sorted_texts(&ideal.groebner(order).unwrap(), order);
        for _ in 0..30 {
            let mut gens = ideal.generators().to_vec();
            gens.shuffle(&mut rng);
            let shuffled = Ideal::new(ideal.ring(), gens).unwrap();
            if sorted_texts(&shuffled.groebner(order).unwrap(), order) != reference {
                return line(false, format!("reduced basis depends on generator order ({})", order.name()));
            }
            shuffles += 1;
        }
    }

    let mut monomial_ideals = 0;
    for trial in 0..150 {
        let n = 2 + trial % 11;
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let ring = VarTable::new(&names).unwrap();
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..6))
            .map(|_| {
                let exps: Vec<u16> = (0..n)
                    .map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..3) } else { 0 })
                    .collect();
                Polynomial::monomial(&ring, Monomial::from_exponents(exps), rational(1, 1))
            })
            .collect();
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        if ideal.is_unit().unwrap() {
            continue;
        }
        let masks: Vec<u32> = gens
            .iter()
            .map(|g| g.variables().iter().fold(0u32, |m, &i| m | 1 << i))
            .collect();
        let brute = (0u32..1 << n)
            .filter(|&s| masks.iter().all(|&m| m & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        if ideal.dimension().unwrap() != brute {
            return line(false, format!("dimension mismatch on {:?}", ideal.to_text()));
        }
        monomial_ideals += 1;
    }
    let elapsed = start.elapsed();
    line(
        elapsed < Duration::from_secs(10),
        format!(
            "twisted cubic basis matches; {shuffles} shuffles give one reduced basis; {monomial_ideals} monomial ideals match brute-force dimension; {}",
            secs(elapsed)
        ),
    )
}

fn chart_fidelity(config: &VerifyConfig) -> Line {
    let mut slowest = Duration::ZERO;
    for i0 in 1..=5 {
        let s = ChartSpec::simplified(5, 1, i0).unwrap();
        let o = check_raw_equiv(&s, config);
        slowest = slowest.max(o.elapsed);
        if o.verdict != Verdict::Pass || o.elapsed > Duration::from_secs(60) {
            return line(false, describe(&o));
        }
    }
    line(true, format!("raw-equiv passes for i0 = 1..5; slowest {}", secs(slowest)))
}

fn flatness(registry: &Registry) -> Line {
    let start = Instant::now();
    let mut count = 0;
    let mut budget = Vec::new();
    for e in &registry.entries {
        let chart = build_simplified_chart(&e.spec).unwrap().with_budget(e.config.budget);
        for o in [check_flat(&chart, &e.spec.to_string()), check_blowup_flat(&e.spec, &e.config)] {
            count += 1;
            match o.verdict {
                Verdict::Pass => {}
                Verdict::BudgetExceeded if e.spec.n == 8 && e.spec.l == 2 => budget.push(o.instance.clone()),
                _ => return line(false, describe(&o)),
            }
        }
    }
    let mut detail = format!(
        "{count} chart and blow-up patch saturations over {} registry instances; {}",
        registry.entries.len(),
        secs(start.elapsed())
    );
    if !budget.is_empty() {
        detail.push_str(&format!("; budget-exceeded: {}", budget.join(" ")));
    }
    line(true, detail)
}

fn special_fiber(config: &VerifyConfig) -> Line {
    let mut count = 0;
    for (n, l) in [(5, 1), (6, 1), (7, 1), (7, 2)] {
        for s in default_specs(n, l) {
            let chart = build_simplified_chart(&s).unwrap().with_budget(config.budget);
            let o = check_components(&s, &chart, config);
            if o.verdict != Verdict::Pass {
                return line(false, describe(&o));
            }
            count += 1;
        }
    }
    let mut smooth = 0;
    for (n, l) in [(5, 1), (6, 1)] {
        for i0 in 1..=2 * l {
            let o = check_smoothness(&ChartSpec::simplified(n, l, i0).unwrap(), config);
            if o.verdict != Verdict::Pass {
                return line(false, describe(&o));
            }
            smooth += 1;
        }
    }
    line(
        true,
        format!("{count} decompositions with dimensions n, n-1; J2 singular locus = V(V2, Z2) on {smooth} charts"),
    )
}

fn implied_conditions() -> Line {
    let mut count = 0;
    for (n, l) in [(5, 1), (6, 1)] {
        for s in default_specs(n, l) {
            let chart = build_simplified_chart(&s).unwrap();
            let o = check_kottwitz_wedge(&s, &chart);
            if o.verdict != Verdict::Pass {
                return line(false, describe(&o));
            }
            count += 1;
        }
    }
    line(true, format!("Kottwitz condition reduces to 0 on {count} charts"))
}

fn semi_stability(config: &VerifyConfig) -> Line {
    let start = Instant::now();
    let mut patches = 0;
    let mut identity = 0;
    for (n, l) in [(5, 1), (6, 1)] {
        for i0 in 1..=n {
            let s = ChartSpec::simplified(n, l, i0).unwrap();
            let o = check_blowup(&s, None, config);
            if o.verdict != Verdict::Pass {
                return line(false, describe(&o));
            }
            if s.unit_in_first_block() {
                patches += s.second_block().count();
            } else {
                identity += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    line(
        elapsed < Duration::from_secs(600),
        format!(
            "{patches} patches semi-stable with Rees presentations equal; {identity} kind B charts unchanged; {}",
            secs(elapsed)
        ),
    )
}

fn bin(args: &[&str]) -> (Option<i32>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_splitcheck")).args(args).output().unwrap();
    (o.status.code(), String::from_utf8(o.stdout).unwrap())
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn sabotage(config: &VerifyConfig) -> Line {
    let a = spec("n=5,l=1,i0=1,kind=simplified-A");
    let b = spec("n=5,l=1,i0=3,kind=simplified-B");
    let chart = build_simplified_chart(&a).unwrap();
    let chart_b = build_simplified_chart(&b).unwrap();
    let trace = chart.generators().len() - 1;
    let no_trace = drop_gen(&chart, trace);
    let raw = build_raw_chart(&a.with_kind(ChartKind::Raw)).unwrap();
    let comps = components_of(&a, chart.ring()).unwrap();
    let j2 = &comps[1].1;
    let sing = Ideal::parse(chart.ring(), &["v1 - 1", "pi", "v3", "v4", "v5", "z3", "z4", "z5"]).unwrap();
    let patches: Vec<(usize, Ideal)> = a
        .second_block()
        .map(|j| (j, build_blowup_patch(&a.with_kind(ChartKind::BlowupPatch(j))).unwrap()))
        .collect();
    let mut torsion_patches = patches.clone();
    torsion_patches[0].1 = times_pi_last(&torsion_patches[0].1);
    let patch = &patches[0].1;
    let cases: Vec<(&str, CheckOutcome)> = vec![
        ("flat", check_flat(&times_pi_last(&chart), "pi-multiplied trace relation")),
        ("components", check_components(&a, &no_trace, config)),
        ("smooth", check_smooth(&drop_gen(j2, j2.generators().len() - 1), Some(&sing), config.max_minors)),
        ("kottwitz-wedge", check_kottwitz_wedge(&a, &no_trace)),
        ("raw-equiv", check_raw_equiv_with(&a, &raw, &no_trace)),
        ("blowup-flat", check_blowup_flat_with(&a, &torsion_patches)),
        ("blowup", check_blowup_with(&a, 3, &chart, &drop_gen(patch, patch.generators().len() - 1), config)),
        ("blowup (kind B)", check_blowup_with(&b, 3, &drop_gen(&chart_b, 0), &chart_b, config)),
        (
            "spec",
            run_instance(&ChartSpec { n: 6, l: 2, i0: 1, kind: ChartKind::SimplifiedA }, config).remove(0),
        ),
    ];
    for (name, o) in &cases {
        if o.verdict != Verdict::Fail || o.witness.is_empty() {
            return line(false, format!("{name} did not fail: {}", describe(o)));
        }
    }
    let inst = "n=5,l=1,i0=1,kind=simplified-A";
    let exits = [
        (bin(&["verify", "--checks", "flat", inst]).0, 0),
        (bin(&["verify", "all", "--registry", fixture("sabotage.reg").to_str().unwrap()]).0, 1),
        (bin(&["chart", "n=6,l=2,i0=1,kind=raw"]).0, 2),
        (bin(&["verify", "all", "--registry", fixture("tiny_budget.reg").to_str().unwrap()]).0, 3),
    ];
    for (got, want) in exits {
        if got != Some(want) {
            return line(false, format!("exit code {got:?}, expected {want}"));
        }
    }
    line(true, format!("{} perturbed fixtures fail with witnesses; exit codes 0/1/2/3 as specified", cases.len()))
}

fn determinism() -> Line {
    let start = Instant::now();
    let (c1, first) = bin(&["verify", "all"]);
    let (c2, second) = bin(&["verify", "all", "--jobs", "2"]);
    let (Ok(r1), Ok(r2)) = (Report::from_json(&first), Report::from_json(&second)) else {
        return line(false, "verify all did not produce a valid report");
    };
    let (a, b) = (r1.without_timing().to_json(), r2.without_timing().to_json());
    let ok = a == b && c1 == c2 && matches!(c1, Some(0) | Some(3));
    line(
        ok,
        format!(
            "two full runs ({} outcomes, exit {:?}) byte-identical without timing: {}; {}",
            r1.summary.total,
            c1,
            a == b,
            secs(start.elapsed())
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Line + 'a>);

fn main() {
    let config = VerifyConfig::default();
    let registry = Registry::default_registry();
    let criteria: Vec<Criterion> = vec![
        ("engine soundness", Box::new(engine_soundness)),
        ("chart fidelity at (5,1)", Box::new(|| chart_fidelity(&config))),
        ("flatness over the base", Box::new(|| flatness(&registry))),
        ("special-fiber decomposition", Box::new(|| special_fiber(&config))),
        ("implied Kottwitz condition", Box::new(implied_conditions)),
        ("blow-up semi-stability", Box::new(|| semi_stability(&config))),
        ("sabotage suite and exit codes", Box::new(|| sabotage(&config))),
        ("determinism of verify all", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let l = run();
        if !l.ok {
            failures += 1;
        }
        println!("criterion {} {name}: {} ({})", k + 1, if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
