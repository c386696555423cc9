//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! Exits 0 after printing the report. Set `ACCEPTANCE_STRICT=1` to exit 1
//! when any criterion fails.

mod common;

use std::time::Instant;

use common::*;
use hyperfield::counting::{
    explicit_formula_check, logderiv_integral_check, omega_one_closed, omega_partial, soule_zeta_limit, CountingFn,
};
use hyperfield::exactmath::{Combine, IntPoly};
use hyperfield::hypercore::{check_canonical_hypergroup, check_hyperring, FiniteGroup, HyperTable};
use hyperfield::quotients::{kg_hyperfield, quotient_hyperring, FiniteRing};
use hyperfield::rconvex::{c_add, c_add_membership_oracle, sg_matches_rconvex, theta_int, theta_set, Atom, OracleVerdict};
use hyperfield::spec_k::{
    brute_oracle_fiber0, brute_oracle_fiberp, char_p_identities, spec_add, spec_mul, HyperResult, Op, SpecKPoint,
};
use hyperfield::spec_s::{eps_oracle, glue_build, probe_polynomials, s_add, s_mul, SignPoint};
use hyperfield::{Rational, Zeros};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(limit: Option<f64>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let secs = start.elapsed().as_secs_f64();
    match limit {
        Some(l) => {
            o.detail = format!("{}; {secs:.2}s (limit {l}s)", o.detail);
            o.pass &= secs < l;
        }
        None => o.detail = format!("{}; {secs:.2}s", o.detail),
    }
    o
}

fn axiom_suite() -> Outcome {
    let z2 = FiniteGroup::cyclic(2);
    let field_quotient = |p: u64, k: usize| -> HyperTable {
        let r = FiniteRing::field(p, k).expect("field");
        quotient_hyperring(&r, &r.prime_units()).expect("quotient").table
    };
    let rings: Vec<(&str, Result<HyperTable, String>)> = vec![
        ("K", Ok(HyperTable::krasner())),
        ("S", Ok(HyperTable::signs())),
        ("K[Z/3]", kg_hyperfield(&FiniteGroup::cyclic(3)).map_err(|e| e.to_string())),
        ("K[Z/2xZ/2]", kg_hyperfield(&FiniteGroup::product(&z2, &z2)).map_err(|e| e.to_string())),
        ("F_9/F_3^x", Ok(field_quotient(3, 2))),
        ("F_25/F_5^x", Ok(field_quotient(5, 2))),
        ("F_27/F_3^x", Ok(field_quotient(3, 3))),
    ];
    let mut failed = Vec::new();
    for (name, t) in rings {
        match t {
            Ok(t) => {
                let r = check_hyperring(&t);
                if !r.passed {
                    failed.push(format!("{name}: {}", r.summary()));
                }
            }
            Err(e) => failed.push(format!("{name}: {e}")),
        }
    }
    match glue_build(&FiniteGroup::cyclic(6), &[0, 2, 4]) {
        Ok(g) => {
            let r = check_canonical_hypergroup(&g.table);
            if !r.passed {
                failed.push(format!("glue(Z/6,{{0,2,4}}): {}", r.summary()));
            }
        }
        Err(e) => failed.push(format!("glue: {e}")),
    }
    if failed.is_empty() {
        outcome(true, "8/8 structures pass")
    } else {
        outcome(false, format!("{}/8 pass; {}", 8 - failed.len(), failed.join("; ")))
    }
}

fn polys(r: &HyperResult) -> Option<Vec<IntPoly>> {
    match r {
        HyperResult::Finite(v) => v
            .iter()
            .map(|x| match x {
                SpecKPoint::Closed0(q) => Some(q.clone()),
                _ => None,
            })
            .collect(),
        _ => None,
    }
}

fn fiber0_oracle() -> Outcome {
    let mut rng = rng(201);
    let (mut checked, mut bad) = (0, Vec::new());
    for _ in 0..50 {
        let (f, g) = (random_irreducible(&mut rng, 4, 10), random_irreducible(&mut rng, 4, 10));
        let (x, y) = (SpecKPoint::closed0(&f).unwrap(), SpecKPoint::closed0(&g).unwrap());
        let mut ops = vec![(Op::Sum, spec_add(&x, &y))];
        if !x.is_zero_point() && !y.is_zero_point() {
            ops.push((Op::Product, spec_mul(&x, &y)));
        }
        for (op, got) in ops {
            checked += 1;
            let got = got.ok().as_ref().and_then(polys);
            match brute_oracle_fiber0(&f, &g, op) {
                Ok(want) if got.as_ref() == Some(&want) => {}
                Ok(_) => bad.push(format!("{f} {op:?} {g}")),
                Err(e) => bad.push(format!("{f} {op:?} {g}: oracle {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/{checked} operations match{}", checked - bad.len(), list(&bad)))
}

fn list(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!(" [{}]", bad.iter().take(5).cloned().collect::<Vec<_>>().join(", "))
    }
}

fn fiberp_oracle() -> Outcome {
    let mut rng = rng(202);
    let (mut checked, mut bad) = (0, Vec::new());
    for p in [2, 3, 5] {
        for _ in 0..15 {
            let (a, b) = (random_irreducible_fp(&mut rng, p, 3), random_irreducible_fp(&mut rng, p, 3));
            let (x, y) = (SpecKPoint::closed_p(&a).unwrap(), SpecKPoint::closed_p(&b).unwrap());
            for (op, got) in [(Op::Sum, spec_add(&x, &y)), (Op::Product, spec_mul(&x, &y))] {
                checked += 1;
                let want = brute_oracle_fiberp(&a, &b, op).map(|ms| {
                    let mut v: Vec<SpecKPoint> = ms.into_iter().map(|m| SpecKPoint::ClosedP(p, m)).collect();
                    v.sort();
                    HyperResult::Finite(v)
                });
                if got.ok() != want.ok() {
                    bad.push(format!("{a} {op:?} {b} mod {p}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/{checked} operations match{}", checked - bad.len(), list(&bad)))
}

fn generic_rows() -> Outcome {
    let d = SpecKPoint::Generic0;
    let pt = |c: &[i64]| SpecKPoint::closed0(&IntPoly::from_i64s(c)).unwrap();
    let (sqrt2, half, silver, omega, zero) =
        (pt(&[-2, 0, 1]), pt(&[-1, 2]), pt(&[-1, -2, 1]), pt(&[1, 1, 1]), pt(&[0, 1]));
    let gen = HyperResult::Finite(vec![SpecKPoint::Generic0]);
    // Expected shapes from the irrationality and root-of-unity facts of
    // each witness: √2, 1/2, 1 + √2, a primitive cube root of 1, and 0.
    let rows: Vec<(&str, HyperResult, HyperResult)> = vec![
        ("d+d", spec_add(&d, &d).unwrap(), HyperResult::Fiber0All),
        ("d+sqrt2", spec_add(&d, &sqrt2).unwrap(), HyperResult::Fiber0All),
        ("d+omega", spec_add(&d, &omega).unwrap(), HyperResult::Fiber0All),
        ("d+1/2", spec_add(&d, &half).unwrap(), gen.clone()),
        ("d+0", spec_add(&d, &zero).unwrap(), gen.clone()),
        ("d*d", spec_mul(&d, &d).unwrap(), HyperResult::Fiber0NonZero),
        ("d*sqrt2", spec_mul(&d, &sqrt2).unwrap(), gen.clone()),
        ("d*omega", spec_mul(&d, &omega).unwrap(), gen.clone()),
        ("d*1/2", spec_mul(&d, &half).unwrap(), gen),
        ("d*(1+sqrt2)", spec_mul(&d, &silver).unwrap(), HyperResult::Fiber0NonZero),
        ("d*0", spec_mul(&d, &zero).unwrap(), HyperResult::Finite(vec![zero.clone()])),
    ];
    let bad: Vec<String> = rows.iter().filter(|(_, g, w)| g != w).map(|(n, g, _)| format!("{n} gave {g}")).collect();
    // α ∈ δ − β but β ∉ δ − α, for α = 1 and β = √2.
    let one = pt(&[-1, 1]);
    let forward = spec_add(&d, &sqrt2.negate()).unwrap().contains(&one);
    let backward = spec_add(&d, &one.negate()).unwrap();
    let reversibility_fails = forward && !backward.contains(&sqrt2) && backward == HyperResult::Finite(vec![SpecKPoint::Generic0]);
    let mut detail = format!("{}/{} rows", rows.len() - bad.len(), rows.len());
    if !reversibility_fails {
        detail += "; reversibility witness not reproduced";
    }
    outcome(bad.is_empty() && reversibility_fails, detail + &list(&bad))
}

fn char_p() -> Outcome {
    let mut rng = rng(205);
    let mut bad = Vec::new();
    for p in [2, 3, 5] {
        for _ in 0..20 {
            let a = random_irreducible_fp(&mut rng, p, 4);
            match char_p_identities(&a) {
                Ok(r) if r.all_hold() => {}
                Ok(_) => bad.push(format!("{a} mod {p}")),
                Err(e) => bad.push(format!("{a} mod {p}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/60 irreducibles{}", 60 - bad.len(), list(&bad)))
}

fn samples_of(rng: &mut TestRng, set: &hyperfield::RatSet) -> Vec<Rational> {
    let mut out = Vec::new();
    for atom in set.atoms() {
        match atom {
            Atom::Point(p) => out.push(p.clone()),
            Atom::Open(lo, hi) => {
                let (lo, hi) = (lo.finite(), hi.finite());
                out.extend(samples_between(rng, lo, hi, 4));
                // Also probe just outside finite ends, where mistakes live.
                for b in [lo, hi].into_iter().flatten() {
                    out.push(b + ratio(1, 97));
                    out.push(b - ratio(1, 97));
                }
            }
        }
    }
    out
}

fn rconvex_criterion() -> Outcome {
    let mut rng = rng(206);
    let mut bad = Vec::new();
    let (mut sound, mut complete) = (0usize, 0usize);
    for _ in 0..500 {
        let (x, y) = random_pair(&mut rng);
        let table = c_add(&x, &y);
        for z in samples_of(&mut rng, &table) {
            let member = matches!(c_add_membership_oracle(&x, &y, &z, 200), OracleVerdict::Member { .. });
            if member {
                sound += 1;
                if !table.contains(&z) {
                    bad.push(format!("oracle {z} in {x}+{y}"));
                }
            }
            if table.contains(&z) && z.denom() <= &50.into() {
                complete += 1;
                if !member {
                    bad.push(format!("table {z} in {x}+{y}"));
                }
            }
        }
    }
    let mut alg = 0;
    for _ in 0..200 {
        let (x, y) = random_pair(&mut rng);
        let a = random_rational(&mut rng);
        if c_add(&x, &y).scale(&a) != c_add(&(&a * &x), &(&a * &y)) {
            bad.push(format!("distributivity {a}({x}+{y})"));
        }
        for l in [2, 3, -1] {
            if l == -1 && (x == ratio(0, 1) || y == ratio(0, 1)) {
                continue;
            }
            let lhs = theta_set(l, &c_add(&x, &y)).unwrap();
            let rhs = c_add(&theta_int(l, &x).unwrap(), &theta_int(l, &y).unwrap());
            if lhs != rhs {
                bad.push(format!("theta_{l}({x}+{y})"));
            }
        }
        alg += 1;
    }
    let sg = sg_matches_rconvex(1000, 207);
    if !sg.all_agree() {
        bad.push(format!("S(Q>0): {sg}"));
    }
    outcome(
        bad.is_empty(),
        format!(
            "500 pairs: {sound} oracle members, {complete} table samples; {alg} algebraic pairs; S(Q>0) {}/{} agree{}",
            sg.agreed,
            sg.pairs,
            list(&bad)
        ),
    )
}

fn vectors(v: &[SignPoint], probes: &[IntPoly]) -> std::collections::BTreeSet<Vec<i8>> {
    v.iter().map(|z| probes.iter().map(|p| z.eval(p)).collect()).collect()
}

fn spec_s_criterion() -> Outcome {
    let mut rng = rng(207);
    let mut bad = Vec::new();
    for _ in 0..100 {
        let (x, y) = (random_sign_point(&mut rng, 3), random_sign_point(&mut rng, 3));
        for (op, got) in [(Combine::Sum, s_add(&x, &y)), (Combine::Product, s_mul(&x, &y))] {
            let got = match got {
                Ok(g) => g,
                Err(e) => {
                    bad.push(format!("{x} {op:?} {y}: {e}"));
                    continue;
                }
            };
            let (ax, ay) = (x.finite_re().unwrap(), y.finite_re().unwrap());
            if !got.iter().all(|z| re_matches(z.finite_re().unwrap(), ax, ay, op)) {
                bad.push(format!("Re of {x} {op:?} {y}"));
            }
            let probes = probe_polynomials(got[0].finite_re().unwrap());
            match eps_oracle(&x, &y, op, &probes) {
                Ok(want) if want == vectors(&got, &probes) => {}
                Ok(_) => bad.push(format!("{x} {op:?} {y} differs from the eps oracle")),
                Err(e) => bad.push(format!("{x} {op:?} {y}: oracle {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/200 operations agree{}", 200 - bad.len(), list(&bad)))
}

fn omega_criterion(z: &Zeros) -> Outcome {
    let w = omega_one_closed::<f64>();
    let errs: Vec<f64> = [100, 1000, 10_000].iter().map(|&m| (omega_partial(1.0, m, z).unwrap() - w).abs()).collect();
    let monotone = errs.windows(2).all(|p| p[1] < p[0]);
    outcome(
        monotone && errs[2] <= 1e-2,
        format!("errors {:.3e}, {:.3e}, {:.3e} at m = 1e2, 1e3, 1e4 (limit 1e-2)", errs[0], errs[1], errs[2]),
    )
}

fn explicit_criterion(z: &Zeros) -> Outcome {
    match explicit_formula_check(10.5, 10_000, z) {
        Ok(r) => outcome(r.abs() <= 0.5, format!("residual {r:.4} at x = 10.5, m = 1e4 (limit 0.5)")),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn soule_criterion() -> Outcome {
    let q = 1.0 + 1e-5;
    let mut parts = Vec::new();
    let mut pass = true;
    for s in [2.0, 3.0, 4.0] {
        let v = soule_zeta_limit(&CountingFn::P1, s, q).unwrap_or(f64::NAN);
        let err = (v - 1.0 / (s * (s - 1.0))).abs();
        pass &= err <= 1e-3;
        parts.push(format!("s={s}: {err:.1e}"));
    }
    let r = logderiv_integral_check(&CountingFn::P1, 3.0).unwrap_or(f64::NAN);
    pass &= r.abs() <= 1e-6;
    outcome(pass, format!("{} (limit 1e-3); logderiv residual {:.1e} (limit 1e-6)", parts.join(", "), r.abs()))
}

fn main() {
    let zeros = Zeros::bundled();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("axiom suite", timed(Some(5.0), axiom_suite)),
        ("Spec K fiber 0 oracle", timed(Some(30.0), fiber0_oracle)),
        ("Spec K fiber p oracle", timed(Some(10.0), fiberp_oracle)),
        ("generic-point tables", timed(None, generic_rows)),
        ("char-p identities", timed(None, char_p)),
        ("R^convex", timed(Some(20.0), rconvex_criterion)),
        ("Spec S tables", timed(None, spec_s_criterion)),
        ("omega(1)", timed(Some(10.0), || omega_criterion(&zeros))),
        ("explicit formula", timed(None, || explicit_criterion(&zeros))),
        ("Soule limit", timed(None, soule_criterion)),
    ];
    let mut passed = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        passed += o.pass as usize;
    }
    // Recorded alongside the criteria: the tolerance at x = 100.3 is a stated
    // property, not an acceptance criterion.
    if let Ok(r) = explicit_formula_check(100.3, 10_000, &zeros) {
        println!(
            "INFO    explicit formula at x = 100.3: residual {r:.4} (stated bound 2.0; ringing from the jump 101 log 101 at the next prime)"
        );
    }
    println!("{passed}/{} criteria pass", criteria.len());
    if passed < criteria.len() && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
