use hookbias::hook_gf::{Prefactors, SeriesName, SetId};
use hookbias::injections::families::{
    classify_o, classify_r, in_a, in_b, in_c, in_d1, in_d2, in_o, in_r, in_s, o_items, r_items,
    Classification,
};
use hookbias::injections::maps::{eta, o5_max_weight, phi_total, phi_total_inv, tau};
use hookbias::injections::{o5_weight_bound, verify_injection, MapId};
use hookbias::partition::{partitions_with, t_regular_partitions};
use hookbias::{Error, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Members of `O_t`: random non-unit parts, sometimes one part repeated
/// `6t+1` times, and an odd number of ones.
fn o_member() -> impl Strategy<Value = (u32, Partition)> {
    (2u32..5)
        .prop_flat_map(|t| {
            (
                Just(t),
                prop::collection::vec(2u32..150, 0..12),
                prop::option::of(2u32..12),
                0u32..40,
            )
        })
        .prop_map(|(t, mut parts, heavy, j)| {
            if let Some(l) = heavy {
                parts.extend(std::iter::repeat_n(l, 6 * t as usize + 1));
            }
            parts.retain(|m| m % t != 0);
            parts.extend(std::iter::repeat_n(1, 2 * j as usize + 1));
            (t, Partition::from_parts(&parts).unwrap())
        })
}

/// Members of `C_t` of weight at least 4.
fn c_member() -> impl Strategy<Value = (u32, Partition)> {
    (3u32..8, prop::collection::vec(2u32..30, 0..12), 0u32..6).prop_map(|(t, mut parts, j)| {
        parts.retain(|m| m % t != 0);
        let ones = if parts.is_empty() {
            6 * j + 9
        } else {
            6 * j + 3
        };
        parts.extend(std::iter::repeat_n(1, ones as usize));
        (t, Partition::from_parts(&parts).unwrap())
    })
}

proptest! {
    #[test]
    fn phi_round_trips_or_rejects_o5((t, p) in o_member()) {
        prop_assert!(in_o(&p, t));
        match phi_total(&p, t) {
            Ok(mu) => {
                prop_assert_eq!(mu.weight(), p.weight());
                prop_assert!(in_r(&mu, t));
                prop_assert_eq!(classify_r(&mu, t).index(), classify_o(&p, t).index());
                prop_assert_eq!(phi_total_inv(&mu, t).unwrap(), p);
            }
            Err(Error::OutsideDomain { .. }) => {
                prop_assert_eq!(classify_o(&p, t).index(), Some(5));
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn tau_round_trips((t, p) in c_member()) {
        prop_assert!(in_c(&p, t));
        let mu = tau(&p, t).unwrap();
        prop_assert_eq!(mu.weight(), p.weight());
        prop_assert!(in_b(&mu, t));
        prop_assert_eq!(eta(&mu, t).unwrap(), p);
    }
}

#[test]
fn o_conditions_partition_o_and_r_conditions_are_disjoint() {
    for t in 2..=4u32 {
        for n in 0..=30 {
            let mut sizes = [0usize; 5];
            let mut total = 0;
            for p in t_regular_partitions(n, t).unwrap().filter(|p| in_o(p, t)) {
                let labels = o_items(&p, t);
                assert_eq!(labels.len(), 1, "{p} t={t}");
                sizes[labels[0].index().unwrap() as usize - 1] += 1;
                total += 1;
            }
            assert_eq!(sizes.iter().sum::<usize>(), total);
            for p in partitions_with(n, |m| m % t != 0 || m == 2 * t).filter(|p| in_r(p, t)) {
                assert!(r_items(&p, t).len() <= 1, "{p} t={t}");
            }
        }
    }
}

type Counter = Box<dyn Fn(usize) -> BigInt>;

fn count(n: usize, universe: impl Fn(u32) -> bool, pred: impl Fn(&Partition) -> bool) -> BigInt {
    BigInt::from(partitions_with(n, universe).filter(|p| pred(p)).count())
}

#[test]
fn family_sizes_match_their_series() {
    let order = 28;
    for t in 2..=5u32 {
        let f = Prefactors::new(t, order).unwrap();
        let reg = move |m: u32| !m.is_multiple_of(t);
        let checks: Vec<(SetId, Counter)> = vec![
            (SetId::O, Box::new(move |n| count(n, reg, |p| in_o(p, t)))),
            (
                SetId::R,
                Box::new(move |n| count(n, move |m| m % t != 0 || m == 2 * t, |p| in_r(p, t))),
            ),
            (SetId::S, Box::new(move |n| count(n, reg, |p| in_s(p, t)))),
            (SetId::B, Box::new(move |n| count(n, reg, |p| in_b(p, t)))),
            (SetId::C, Box::new(move |n| count(n, reg, |p| in_c(p, t)))),
        ];
        for (set, counter) in &checks {
            let s = f.set_series(*set).unwrap();
            for n in 0..=order {
                assert_eq!(s.coeff(n), &counter(n), "{set:?} t={t} n={n}");
            }
        }
        if t != 3 {
            let s = f.set_series(SetId::A).unwrap();
            for n in 0..=order {
                assert_eq!(s.coeff(n), &count(n, reg, |p| in_a(p, t)), "A t={t} n={n}");
            }
        }
    }
    let f = Prefactors::new(2, 60).unwrap();
    let d1 = f.set_series(SetId::D1).unwrap();
    let d2 = f.set_series(SetId::D2).unwrap();
    for n in 0..=40 {
        assert_eq!(d1.coeff(n), &count(n, |m| m % 2 != 0, in_d1), "n={n}");
        assert_eq!(d2.coeff(n), &count(n, |m| m % 2 != 0, in_d2), "n={n}");
    }
    assert!(Prefactors::new(3, 10)
        .unwrap()
        .set_series(SetId::D1)
        .is_err());
}

#[test]
fn o_count_is_the_a_series() {
    for t in 2..=4u32 {
        let a = Prefactors::new(t, 30).unwrap().build(SeriesName::A);
        for n in 0..=30 {
            let o = t_regular_partitions(n, t)
                .unwrap()
                .filter(|p| in_o(p, t))
                .count();
            assert_eq!(a.coeff(n), &BigInt::from(o));
        }
    }
}

#[test]
fn gamma_and_epsilon_cardinalities() {
    for t in 4..=6u32 {
        for n in 0..=40 {
            let a = t_regular_partitions(n, t)
                .unwrap()
                .filter(|p| in_a(p, t))
                .count();
            let s = t_regular_partitions(n, t)
                .unwrap()
                .filter(|p| in_s(p, t))
                .count();
            assert!(a <= s, "t={t} n={n}: |A|={a} |S|={s}");
        }
    }
    let f = Prefactors::new(2, 60).unwrap();
    let (d1, d2) = (
        f.set_series(SetId::D1).unwrap(),
        f.set_series(SetId::D2).unwrap(),
    );
    for n in 7..=60 {
        assert!(d2.coeff(n) <= d1.coeff(n), "n={n}");
    }
}

#[test]
fn certification_at_moderate_sizes() {
    let cases = [
        (MapId::Phi1, 3, 30),
        (MapId::Phi2, 2, 40),
        (MapId::Phi3, 2, 40),
        (MapId::Phi4, 2, 35),
        (MapId::PhiTotal, 4, 30),
        (MapId::Gamma3, 4, 30),
        (MapId::GammaTotal, 5, 30),
        (MapId::Epsilon, 2, 40),
        (MapId::Tau, 4, 30),
        (MapId::Eta, 5, 30),
    ];
    for (map, t, n) in cases {
        let r = verify_injection(map, t, n).unwrap();
        assert!(r.passed, "{map} t={t} n={n}: {:?}", r.violations.first());
        assert!(r.domain_size > 0, "{map} t={t} n={n} is vacuous");
    }
}

#[test]
fn o5_members_stay_under_the_bound() {
    for n in 0..=60 {
        for p in t_regular_partitions(n, 2).unwrap() {
            if matches!(classify_o(&p, 2), Classification::Member(l) if l.index() == Some(5)) {
                assert!(p.weight() as u64 <= o5_weight_bound(2));
            }
        }
    }
    for t in 2..=50 {
        assert!(o5_max_weight(t) <= o5_weight_bound(t));
    }
}
