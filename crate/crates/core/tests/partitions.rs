use std::collections::BTreeMap;

use hookbias::partition::{partitions_of, t_regular_partitions};
use hookbias::qseries::t_regular_gf;
use hookbias::Partition;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Hook lengths straight from the definition: arm + leg + 1 per cell.
fn naive_hooks(parts: &[u32]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            *out.entry(arm + leg + 1).or_insert(0) += 1;
        }
    }
    out
}

/// p(n) for n ≤ max by Euler's recurrence over generalized pentagonal
/// numbers.
fn euler_p(max: usize) -> Vec<u128> {
    let mut p = vec![0u128; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2] as i128;
            }
        }
        p[n] = acc as u128;
    }
    p
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..16, 0..14).prop_map(|v| Partition::from_parts(&v).unwrap())
}

proptest! {
    #[test]
    fn hooks_match_definition(p in partition()) {
        let fast: BTreeMap<u32, usize> = p.hook_multiset().iter().collect();
        prop_assert_eq!(fast, naive_hooks(&p.to_vec()));
    }

    #[test]
    fn one_hook_per_cell(p in partition()) {
        prop_assert_eq!(p.hook_multiset().total(), p.weight());
        // Corners are exactly the last rows of each run of equal parts.
        prop_assert_eq!(p.count_hooks(1).unwrap(), p.distinct_parts().count());
        if let Some(l1) = p.largest() {
            let h = p.hook_multiset().max().unwrap();
            prop_assert_eq!(h as usize, l1 as usize + p.len() - 1);
        }
    }

    #[test]
    fn text_round_trip(p in partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn union_then_difference(a in partition(), b in partition()) {
        let u = a.union(&b);
        prop_assert_eq!(u.weight(), a.weight() + b.weight());
        prop_assert_eq!(u.difference(&b).unwrap(), a.clone());
        prop_assert_eq!(u.difference(&a).unwrap(), b.clone());
        if !b.is_empty() {
            prop_assert!(a.difference(&a.union(&b)).is_err());
        }
    }

    #[test]
    fn order_is_lexicographic_on_parts(a in partition(), b in partition()) {
        prop_assert_eq!(a.cmp(&b), a.to_vec().cmp(&b.to_vec()));
    }
}

#[test]
fn enumeration_counts_match_euler() {
    let p = euler_p(45);
    for (n, &expected) in p.iter().enumerate() {
        assert_eq!(partitions_of(n).count() as u128, expected, "n={n}");
    }
}

#[test]
fn enumeration_is_strictly_descending_and_well_formed() {
    for n in 0..=22 {
        let all: Vec<Partition> = partitions_of(n).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]), "n={n}");
        assert!(all.iter().all(|p| p.weight() == n));
    }
}

#[test]
fn regular_partitions_match_series_and_glaisher() {
    for t in 2..=6u32 {
        let gf = t_regular_gf(t, 30).unwrap();
        for n in 0..=30 {
            let regular = t_regular_partitions(n, t).unwrap().count();
            assert_eq!(BigInt::from(regular), *gf.coeff(n), "t={t} n={n}");
            // No part repeated t or more times.
            let few_repeats = partitions_of(n)
                .filter(|p| p.freq_desc().all(|(_, m)| m < t))
                .count();
            assert_eq!(regular, few_repeats, "t={t} n={n}");
        }
    }
}
