//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use codegree_cli::{default_manifest, run_suite, GroupSpec, RunOptions};
use codegree_core::classifier::NotStarReason;
use codegree_core::codegree::{cod_all, cod_nonlinear};
use codegree_core::oracles::Status;
use codegree_core::{character_table, classify, classify_with_table, prime_graph, Branch, Group, DEFAULT_ORDER_BOUND};

type Check = Result<String, String>;

fn set(xs: &[u64]) -> BTreeSet<u64> {
    xs.iter().copied().collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn build(text: &str) -> Group {
    GroupSpec::parse(text).unwrap().build(DEFAULT_ORDER_BOUND).unwrap()
}

fn data(file: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(file);
    format!("file {}", p.display())
}

fn order_480_example() -> Check {
    let g = build(&data("sg480_1188.gens"));
    ensure(g.order() == 480, || format!("order {}", g.order()))?;
    let t = character_table(&g).map_err(|e| e.to_string())?;
    let rel = cod_nonlinear(&t).map_err(|e| e.to_string())?;
    let mut all = cod_all(&t).map_err(|e| e.to_string())?;
    ensure(rel == set(&[5, 15, 32]), || format!("cod(G|G') = {rel:?}"))?;
    all.remove(&1);
    ensure(all == set(&[2, 3, 5, 6, 15, 32]), || format!("cod(G) minus 1 = {all:?}"))?;
    let (gr, ga) = (prime_graph(&rel).num_components(), prime_graph(&all).num_components());
    ensure(gr == 2 && ga == 1, || format!("components {gr} and {ga}"))?;
    Ok(format!("cod(G|G')={rel:?}, cod(G)\\{{1}}={all:?}, components 2/1"))
}

/// `S_4` characters from its actions: sign, fixed points minus one, and the
/// action on the three pairings of four points.
fn s4_oracle_codegrees(g: &Group) -> BTreeSet<(u64, u64)> {
    let sign = |x: usize| {
        if g.element(x).cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0 { 1 } else { -1 }
    };
    let fixed = |x: usize| (0..4).filter(|&i| g.element(x).image(i) == i).count() as i64;
    let pairing_fixed = |x: usize| {
        let p = g.element(x);
        let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
        pairings
            .iter()
            .filter(|pr| {
                let img = |(a, b): (usize, usize)| {
                    let (c, d) = (p.image(a), p.image(b));
                    (c.min(d), c.max(d))
                };
                let mut moved = [img(pr[0]), img(pr[1])];
                moved.sort();
                moved == **pr
            })
            .count() as i64
    };
    let chars: [&dyn Fn(usize) -> i64; 5] = [
        &|_| 1,
        &sign,
        &|x| fixed(x) - 1,
        &|x| sign(x) * (fixed(x) - 1),
        &|x| pairing_fixed(x) - 1,
    ];
    chars
        .iter()
        .map(|chi| {
            let d = chi(0);
            let kernel = (0..g.order()).filter(|&x| chi(x) == d).count();
            (d as u64, (g.order() / kernel) as u64 / d as u64)
        })
        .collect()
}

fn two_frobenius_formula() -> Check {
    let g = build("symmetric 4");
    let c = classify(&g).map_err(|e| e.to_string())?;
    ensure(c.branch == Branch::TwoFrobenius, || format!("branch {:?}", c.branch))?;
    let d = c.two_frobenius.clone().ok_or("no witness")?;
    ensure((d.p, d.k_order, d.r0_order) == (3, 4, 2), || format!("witness {d:?}"))?;
    ensure(c.cod_nonlinear == set(&[3, 8]), || format!("cod {:?}", c.cod_nonlinear))?;
    ensure(set(&[d.p, d.k_order as u64 * d.r0_order as u64]) == c.cod_nonlinear, || "formula mismatch".into())?;
    let oracle: BTreeSet<u64> = s4_oracle_codegrees(&g).into_iter().filter(|&(d, _)| d > 1).map(|(_, c)| c).collect();
    ensure(oracle == c.cod_nonlinear, || format!("oracle {oracle:?}"))?;
    Ok("cod(G|G')={3,8}={p,|K||R0|} with p=3,|K|=4,|R0|=2; action-character oracle agrees".into())
}

/// Codegrees of `λ^G` for the linear characters `λ` of the translation
/// subgroup of an affine group on `p^2` points, computed numerically from the
/// induction formula.
fn induced_codegrees(g: &Group, p: usize) -> BTreeSet<u64> {
    let n = p * p;
    let translations: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let e = g.element(x);
            let v = e.image(0);
            (0..n).all(|pt| e.image(pt) == (pt % p + v % p) % p + p * ((pt / p + v / p) % p))
        })
        .collect();
    assert_eq!(translations.len(), n);
    let vector = |x: usize| {
        let v = g.element(x).image(0);
        (v % p, v / p)
    };
    let mut out = BTreeSet::new();
    for a in 1..n {
        let (a0, a1) = (a % p, a / p);
        let lambda = |x: usize| {
            let (v0, v1) = vector(x);
            let phase = 2.0 * PI * ((a0 * v0 + a1 * v1) % p) as f64 / p as f64;
            (phase.cos(), phase.sin())
        };
        let chi: Vec<(f64, f64)> = (0..g.order())
            .map(|y| {
                let mut acc = (0.0, 0.0);
                for x in 0..g.order() {
                    let c = g.conjugate(y, x);
                    if translations.binary_search(&c).is_ok() {
                        let l = lambda(c);
                        acc = (acc.0 + l.0, acc.1 + l.1);
                    }
                }
                (acc.0 / n as f64, acc.1 / n as f64)
            })
            .collect();
        let norm: f64 = chi.iter().map(|(r, i)| r * r + i * i).sum::<f64>() / g.order() as f64;
        assert!((norm - 1.0).abs() < 1e-6, "induced character is irreducible");
        let degree = chi[0].0;
        let kernel = chi.iter().filter(|(r, i)| (r - degree).abs() < 1e-6 && i.abs() < 1e-6).count();
        out.insert(((g.order() / kernel) as f64 / degree).round() as u64);
    }
    // nonlinear characters with the translations in their kernel come from Q_8: 8/2
    out.insert(4);
    out
}

fn frobenius_branch() -> Check {
    let mut parts = Vec::new();
    for p in [3u64, 5, 7] {
        let g = build(&format!("cpk_q8 {p} 2 builtin"));
        let c = classify(&g).map_err(|e| e.to_string())?;
        ensure(c.branch == Branch::FrobeniusCpkQ8, || format!("p={p}: branch {:?}", c.branch))?;
        let f = c.frobenius.clone().ok_or("no witness")?;
        ensure((f.p, f.k) == (p, 2) && f.complement_is_q8, || format!("witness {f:?}"))?;
        ensure(c.cod_nonlinear == set(&[4, p * p]), || format!("p={p}: cod {:?}", c.cod_nonlinear))?;
        let oracle = induced_codegrees(&g, p as usize);
        ensure(oracle == c.cod_nonlinear, || format!("p={p}: oracle {oracle:?}"))?;
        ensure(prime_graph(&c.cod_nonlinear).num_components() == 2, || "components".into())?;
        parts.push(format!("p={p}:{{4,{}}}", p * p));
    }
    Ok(parts.join(" "))
}

fn negative_battery() -> Check {
    let cases = [
        ("quaternion 4", "Q16", &[4u64, 8][..]),
        ("direct [cyclic 3] [quaternion 3]", "C3xQ8", &[4, 12][..]),
        ("dihedral 15", "D30", &[3, 5, 15][..]),
        (&data("sg480_1188.gens") as &str, "SmallGroup(480,1188)", &[5, 15, 32][..]),
    ];
    let mut parts = Vec::new();
    for (text, name, cod) in cases {
        let g = build(text);
        let t = character_table(&g).map_err(|e| e.to_string())?;
        let c = classify_with_table(&t).map_err(|e| e.to_string())?;
        ensure(!c.is_star && c.branch == Branch::NotStar, || format!("{name} classified as star"))?;
        ensure(c.not_star_reason == Some(NotStarReason::SharedPrime), || format!("{name}: {:?}", c.not_star_reason))?;
        ensure(c.cod_nonlinear == set(cod), || format!("{name}: cod {:?}", c.cod_nonlinear))?;
        match name {
            "C3xQ8" => ensure(c.structure.nilpotent, || "C3xQ8 not nilpotent".into())?,
            "D30" => ensure(c.structure.mixed_frobenius_kernel, || "D30 kernel not mixed".into())?,
            _ => {}
        }
        ensure(c.failure_reason.is_none(), || format!("{name}: {:?}", c.failure_reason))?;
        parts.push(format!("{name}:SHARED_PRIME"));
    }
    Ok(parts.join(" "))
}

fn table_validity(report: &codegree_cli::RunReport) -> Check {
    let bad: Vec<String> = report
        .groups
        .iter()
        .filter(|g| g.error.is_some() || !g.table_violations.is_empty())
        .map(|g| format!("{}: {:?} {:?}", g.name, g.error, g.table_violations))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} tables exact", report.groups.len()))
}

fn oracle_battery(report: &codegree_cli::RunReport) -> Check {
    let wanted = [
        "subnormal_divisibility",
        "abelian_kernel_divisibility",
        "sylow_frobenius_action",
        "solvability",
        "nq_count",
        "direct_product_ratio",
    ];
    let mut checked = 0;
    for g in report.groups.iter().filter(|g| g.order.is_some_and(|o| o <= 200)) {
        for o in &g.oracles {
            if o.status == Status::Fail {
                return Err(format!("{}: {} {:?}", g.name, o.oracle, o.detail));
            }
            if o.status == Status::Pass && wanted.contains(&o.oracle.as_str()) {
                checked += 1;
            }
        }
    }
    for w in wanted {
        let t = &report.summary.oracles[w];
        ensure(t.pass > 0, || format!("{w} never applied"))?;
    }
    Ok(format!("{checked} passing oracle results, 0 violations"))
}

fn soundness(report: &codegree_cli::RunReport) -> Check {
    let s = &report.summary;
    ensure(s.classification_violations == 0 && s.converse_violations == 0, || {
        format!("{} / {} violations", s.classification_violations, s.converse_violations)
    })?;
    for g in &report.groups {
        let c = g.certificate.as_ref().ok_or_else(|| format!("{}: no certificate", g.name))?;
        if c.is_star {
            let one_branch = match c.branch {
                Branch::FrobeniusCpkQ8 => c.frobenius.as_ref().is_some_and(|f| f.complement_is_q8 && f.k >= 2) && c.two_frobenius.is_none(),
                Branch::TwoFrobenius => c.two_frobenius.is_some() && c.frobenius.is_none(),
                Branch::NotStar => false,
            };
            ensure(one_branch && c.failed_checks.is_empty(), || format!("{}: {:?}", g.name, c.branch))?;
        }
    }
    Ok(format!("{} star groups, each in one branch", s.star_groups))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut line = |n: usize, title: &str, limit: Duration, elapsed: Duration, result: Check| {
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {n} [{status}] {title} ({:.2}s): {detail}", elapsed.as_secs_f64());
    };
    let timed = |f: &dyn Fn() -> Check| {
        let start = Instant::now();
        let r = f();
        (start.elapsed(), r)
    };

    let (t, r) = timed(&order_480_example);
    line(1, "order-480 example codegree sets and graphs", Duration::from_secs(60), t, r);
    let (t, r) = timed(&two_frobenius_formula);
    line(2, "2-Frobenius codegree formula on S4", Duration::from_secs(5), t, r);
    let (t, r) = timed(&frobenius_branch);
    line(3, "Frobenius branch C_p^2:Q8, p = 3, 5, 7", Duration::from_secs(30), t, r);
    let (t, r) = timed(&negative_battery);
    line(4, "negative battery", Duration::from_secs(60), t, r);

    let start = Instant::now();
    let report = run_suite(&default_manifest(), &RunOptions { jobs: 4, ..Default::default() });
    let suite_time = start.elapsed();
    match report {
        Ok(report) => {
            line(5, "character-table validity on the default manifest", Duration::from_secs(600), suite_time, table_validity(&report));
            line(6, "oracle battery on manifest groups of order <= 200", Duration::from_secs(600), suite_time, oracle_battery(&report));
            line(7, "global soundness sweep", Duration::from_secs(600), suite_time, soundness(&report));
        }
        Err(e) => {
            for (n, title) in [(5, "table validity"), (6, "oracle battery"), (7, "soundness")] {
                line(n, title, Duration::from_secs(600), suite_time, Err(e.to_string()));
            }
        }
    }
    println!("acceptance: {} of 7 criteria passed", 7 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
