//! Acceptance gate. Prints one line per criterion and exits non-zero if
//! any criterion is red. All tolerances are exact integer equality.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use hookbias::hook_gf::{SeriesCache, SeriesName};
use hookbias::injections::maps::{phi1, phi2, phi3, phi4, phi_total, psi2, psi3, psi4};
use hookbias::injections::{verify_injection, MapId};
use hookbias::theorems::{self, Formulas, Identity, TheoremCheck};
use hookbias::Partition;

type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn pairs(c: &TheoremCheck) -> String {
    let v: Vec<String> = c
        .witness_pairs()
        .iter()
        .map(|(t, n)| format!("({t},{n})"))
        .collect();
    format!("{{{}}}", v.join(","))
}

fn ac1(cache: &SeriesCache) -> Verdict {
    let published =
        theorems::run_oracle_crosscheck(2, 6, 40, &[1, 2, 3], Formulas::Published, cache).unwrap();
    let exact =
        theorems::run_oracle_crosscheck(2, 6, 40, &[1, 2, 3], Formulas::Exact, cache).unwrap();
    let m = &published.mismatches;
    let outside = m.iter().filter(|x| !(x.t == 2 && x.k == Some(3))).count();
    let first = m
        .first()
        .map(|x| {
            format!(
                "first at t={} k=3 n={}: series {} vs enumerated {}",
                x.t, x.n, x.left, x.right
            )
        })
        .unwrap_or_default();
    verdict(
        published.passed(),
        format!(
            "published formulas: {} mismatches ({} outside t=2,k=3){}{}; corrected b_(t,3): {} mismatches",
            m.len(),
            outside,
            if first.is_empty() { "" } else { ", " },
            first,
            exact.mismatches.len()
        ),
    )
}

fn ac2(cache: &SeriesCache) -> Verdict {
    let abc = theorems::run_identity(Identity::Abc, 2, 6, 200, cache).unwrap();
    let def = theorems::run_identity(Identity::Def, 2, 6, 200, cache).unwrap();
    verdict(
        abc.passed() && def.passed(),
        format!(
            "-A+B+C: {} mismatches, D+E+F vs published bt2-bt3: {} mismatches",
            abc.mismatches.len(),
            def.mismatches.len()
        ),
    )
}

fn ac3(cache: &SeriesCache) -> Verdict {
    let c = theorems::run_bias23(10, 60, cache).unwrap();
    verdict(
        c.passed(),
        format!(
            "failures {} expected {{(t,3): 3<=t<=10}}, {} series/enumeration mismatches for n<=40",
            pairs(&c),
            c.mismatches.len()
        ),
    )
}

fn ac4(cache: &SeriesCache) -> Verdict {
    let c = theorems::run_bias21(2, 3100, false, cache).unwrap();
    verdict(
        c.passed() && c.n_min == 2990,
        format!(
            "negatives in 2990..=3100: {}; {}",
            c.witnesses.len(),
            c.notes.join("; ")
        ),
    )
}

fn ac5(cache: &SeriesCache) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, name) in [
        ("D", SeriesName::D),
        ("E", SeriesName::E),
        ("F", SeriesName::F),
    ] {
        let c = theorems::run_sign_check(name, 2, 4, 200, cache).unwrap();
        ok &= c.passed();
        let expected: Vec<String> = c
            .expected
            .iter()
            .map(|(t, n)| format!("({t},{n})"))
            .collect();
        parts.push(format!(
            "{label} {} {} (stated {{{}}})",
            if c.passed() { "ok" } else { "MISMATCH" },
            pairs(&c),
            expected.join(",")
        ));
    }
    verdict(ok, parts.join("; "))
}

fn ac6() -> Verdict {
    let mut plan: Vec<(MapId, u32, std::ops::RangeInclusive<usize>)> = Vec::new();
    for map in [
        MapId::Phi1,
        MapId::Phi2,
        MapId::Phi3,
        MapId::Phi4,
        MapId::PhiTotal,
    ] {
        plan.push((map, 2, 0..=60));
        plan.push((map, 3, 0..=45));
        plan.push((map, 4, 0..=45));
    }
    for map in [
        MapId::Gamma1,
        MapId::Gamma2,
        MapId::Gamma3,
        MapId::GammaTotal,
    ] {
        plan.push((map, 4, 0..=40));
        plan.push((map, 5, 0..=40));
    }
    plan.push((MapId::Epsilon, 2, 7..=60));
    for t in 3..=5 {
        plan.push((MapId::Tau, t, 4..=45));
        plan.push((MapId::Eta, t, 4..=45));
    }
    let results: Vec<(MapId, u32, usize, usize, Option<String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = plan
            .iter()
            .map(|(map, t, range)| {
                let (map, t, range) = (*map, *t, range.clone());
                s.spawn(move || {
                    let (mut domain, mut failed, mut first) = (0, 0, None);
                    for n in range {
                        let r = verify_injection(map, t, n).unwrap();
                        domain += r.domain_size;
                        if !r.passed {
                            failed += 1;
                            first.get_or_insert_with(|| {
                                format!("{map} t={t} n={n}: {:?}", r.violations.first())
                            });
                        }
                    }
                    (map, t, domain, failed, first)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut per_map: BTreeMap<MapId, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for (map, _, domain, failed, first) in &results {
        *per_map.entry(*map).or_default() += domain;
        if *failed > 0 {
            failures.push(first.clone().unwrap_or_default());
        }
    }
    let vacuous: Vec<String> = per_map
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(m, _)| m.to_string())
        .collect();
    let total: usize = per_map.values().sum();
    let pass = failures.is_empty() && vacuous.is_empty();
    let mut detail = format!(
        "{} (map, t) runs, {} inputs certified",
        results.len(),
        total
    );
    if !failures.is_empty() {
        detail += &format!("; failing: {}", failures.join(" | "));
    }
    if !vacuous.is_empty() {
        detail += &format!("; vacuous: {}", vacuous.join(","));
    }
    verdict(pass, detail)
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ac7() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut check =
        |label: &str, got: Partition, want: &str, back: Option<Partition>, input: &str| {
            let want = p(want);
            let forward = got == want;
            let inverse = back.is_none_or(|b| b == p(input));
            if !(forward && inverse) {
                ok = false;
                notes.push(format!(
                    "{label}: got {got}, printed {want}, inverse ok={inverse}"
                ));
            }
        };

    let l1 = "17,15,13,10,7,5,3,2,1^3";
    let m1 = phi1(&p(l1), 4).unwrap();
    check(
        "phi1 t=4 n=65",
        m1.clone(),
        "15,13,10,9,8,5,3,2,1^3",
        None,
        l1,
    );

    let l2 = "137,33,29,11,5,3,1^3";
    let m2 = phi2(&p(l2), 4).unwrap();
    check(
        "phi2 t=4 n=221",
        m2.clone(),
        "33,29,17^7,11,9,8,5,3,1^4",
        psi2(&m2, 4).ok(),
        l2,
    );
    let l2b = "157,34,29,11,5,3,1^3";
    let m2b = phi2(&p(l2b), 4).unwrap();
    check(
        "phi2 t=4 n=242",
        m2b.clone(),
        "34,29,17^6,11,9^6,5,3,1^4",
        psi2(&m2b, 4).ok(),
        l2b,
    );

    let l3 = "17,13,11,9,3^25,1^3";
    let m3 = phi3(&p(l3), 4).unwrap();
    check(
        "phi3 t=4 n=128",
        m3.clone(),
        "25,25,17,13,11,9,9,9,1^10",
        psi3(&m3, 4).ok(),
        l3,
    );

    let l4 = "13,7,6,2,2,1^55";
    let m4 = phi4(&p(l4), 4).unwrap();
    check(
        "phi4 t=4 n=85",
        m4.clone(),
        "33,13,9,9,7,6,2,2,1^4",
        psi4(&m4, 4).ok(),
        l4,
    );
    if phi_total(&p(l4), 4).ok() != Some(m4) {
        ok = false;
        notes.push("phi routes the n=85 example elsewhere".into());
    }

    // Hook table of (5,3,3,2,1,1), row by row.
    let figure: [&[u32]; 6] = [
        &[10, 7, 5, 2, 1],
        &[7, 4, 2],
        &[6, 3, 1],
        &[4, 1],
        &[2],
        &[1],
    ];
    let mut want: BTreeMap<u32, usize> = BTreeMap::new();
    for h in figure.iter().flat_map(|r| r.iter()) {
        *want.entry(*h).or_default() += 1;
    }
    let got: BTreeMap<u32, usize> = p("5,3,3,2,1,1").hook_multiset().iter().collect();
    if got != want {
        ok = false;
        notes.push(format!("figure hooks differ: {got:?}"));
    }

    let detail = if notes.is_empty() {
        "5 map examples and the figure hook multiset reproduced".to_string()
    } else {
        let lw = p(l1).weight();
        format!(
            "{}; the printed phi1 input has weight {lw}",
            notes.join("; ")
        )
    };
    verdict(ok, detail)
}

fn ac8() -> Verdict {
    let q = theorems::run_q_concavity(4, 200).unwrap();
    let r = theorems::run_remainder_t2(200).unwrap();
    verdict(
        q.passed() && r.passed(),
        format!(
            "concavity violations in 4..=200: {}; remainder negatives {} (stated {{(2,3),(2,6)}}); {}",
            q.witnesses.len(),
            pairs(&r),
            r.notes.first().cloned().unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let cache = SeriesCache::new();
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "oracle equivalence t=2..6 k=1..3 n<=40, exact",
            Box::new(|| ac1(&cache)),
        ),
        (
            "AC2",
            "series identities t=2..6 order 200, exact",
            Box::new(|| ac2(&cache)),
        ),
        (
            "AC3",
            "b_(t,2)>=b_(t,3) fails exactly at (t,3), t=2..10 n<=60",
            Box::new(|| ac3(&cache)),
        ),
        (
            "AC4",
            "b_(2,2)-b_(2,1)>=0 for 2990<=n<=3100",
            Box::new(|| ac4(&cache)),
        ),
        (
            "AC5",
            "sign exceptions D, E (n>=4), F over t=2..4 order 200",
            Box::new(|| ac5(&cache)),
        ),
        ("AC6", "injection certification", Box::new(ac6)),
        ("AC7", "worked examples reproduced exactly", Box::new(ac7)),
        (
            "AC8",
            "Q(n) inequality 4..200 and t=2 remainder signs",
            Box::new(ac8),
        ),
    ];
    let mut red = 0;
    for (id, title, run) in &criteria {
        let start = Instant::now();
        let v = run();
        if !v.pass {
            red += 1;
        }
        println!(
            "{id} {} [{title}] {} ({:.1}s)",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria green",
        criteria.len() - red,
        criteria.len()
    );
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
