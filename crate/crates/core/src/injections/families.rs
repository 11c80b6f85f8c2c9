//! Membership predicates and subset classifiers.
//!
//! The `*_items` functions evaluate each subset's defining condition on its
//! own, so a partition can collect zero, one, or several labels. The
//! `classify_*` functions instead walk a decision chain and return at most
//! one label. Certification compares the two.

use crate::partition::Partition;

use super::{Family, SubsetLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Not in the enclosing family at all.
    NotMember,
    /// In the family but in none of the listed subsets.
    Unlisted,
    Member(SubsetLabel),
}

impl Classification {
    pub fn label(&self) -> Option<SubsetLabel> {
        match self {
            Classification::Member(l) => Some(*l),
            _ => None,
        }
    }

    pub fn index(&self) -> Option<u8> {
        self.label().and_then(|l| l.index())
    }
}

fn ones(p: &Partition) -> u32 {
    p.frequency(1)
}

fn residue(x: u32, m: u32) -> u32 {
    x % m
}

/// `x ≡ -r (mod m)`
fn is_neg_residue(x: u32, r: u32, m: u32) -> bool {
    (x as u64 + r as u64).is_multiple_of(m as u64)
}

/// The values `k ≥ 1` such that `2kt+1` is a part.
pub fn one_mod_2t_indices(p: &Partition, t: u32) -> impl Iterator<Item = u32> + '_ {
    p.distinct_parts()
        .filter(move |&m| m > 1 && (m - 1) % (2 * t) == 0)
        .map(move |m| (m - 1) / (2 * t))
}

/// `O_t`: `t`-regular with an odd number of 1s.
pub fn in_o(p: &Partition, t: u32) -> bool {
    p.is_t_regular(t) && ones(p) % 2 == 1
}

/// `R_t`: no part is a multiple of `t` other than `2t`, and `2t+1` appears.
pub fn in_r(p: &Partition, t: u32) -> bool {
    p.distinct_parts().all(|m| m % t != 0 || m == 2 * t) && p.contains(2 * t + 1)
}

/// `S_t`: `t`-regular with `f(1) ≡ 2` or `4 (mod 6)`.
pub fn in_s(p: &Partition, t: u32) -> bool {
    p.is_t_regular(t) && matches!(residue(ones(p), 6), 2 | 4)
}

/// `A_t`: `t`-regular, no part 3, `f(1) ≡ -2 (mod 2t)`.
pub fn in_a(p: &Partition, t: u32) -> bool {
    p.is_t_regular(t) && !p.contains(3) && is_neg_residue(ones(p), 2, 2 * t)
}

/// `B_t`: `t`-regular with `f(1) ≡ 2` or `5 (mod 6)`.
pub fn in_b(p: &Partition, t: u32) -> bool {
    p.is_t_regular(t) && matches!(residue(ones(p), 6), 2 | 5)
}

/// `C_t`: `t`-regular with `f(1) ≡ 3 (mod 6)`.
pub fn in_c(p: &Partition, t: u32) -> bool {
    p.is_t_regular(t) && residue(ones(p), 6) == 3
}

/// `D_1`: 2-regular with `f(1) ≡ 4 (mod 12)`.
pub fn in_d1(p: &Partition) -> bool {
    p.is_t_regular(2) && residue(ones(p), 12) == 4
}

/// `D_2`: 2-regular with `f(1) ≡ 6 (mod 12)`.
pub fn in_d2(p: &Partition) -> bool {
    p.is_t_regular(2) && residue(ones(p), 12) == 6
}

fn big_part_bound(t: u32) -> u32 {
    8 * t * t + 1
}

fn has_heavy_part(p: &Partition, t: u32) -> bool {
    p.freq_desc().any(|(l, m)| l >= 2 && m > 6 * t)
}

/// The `O^i` conditions evaluated independently, for `p ∈ O_t`.
pub fn o_items(p: &Partition, t: u32) -> Vec<SubsetLabel> {
    if !in_o(p, t) {
        return Vec::new();
    }
    let first = one_mod_2t_indices(p, t).next().is_some();
    let rest = !first;
    let big = p.largest().unwrap_or(0) >= big_part_bound(t);
    let heavy = has_heavy_part(p, t);
    let f1 = ones(p);
    let conditions = [
        first,
        rest && big,
        rest && !big && heavy,
        rest && !big && !heavy && f1 >= 12 * t + 3,
        rest && !big && !heavy && f1 <= 12 * t + 2,
    ];
    labels(Family::O, &conditions)
}

/// The `R^i` conditions evaluated independently, for `p ∈ R_t`.
pub fn r_items(p: &Partition, t: u32) -> Vec<SubsetLabel> {
    if !in_r(p, t) {
        return Vec::new();
    }
    let ks: Vec<u32> = one_mod_2t_indices(p, t).collect();
    let only = |allowed: &[u32]| ks.iter().all(|k| allowed.contains(k));
    let odd = ones(p) % 2 == 1;
    let conditions = [
        odd,
        !odd && p.frequency(4 * t + 1) + p.frequency(2 * t + 1) >= 2 && only(&[1, 2]),
        !odd && p.contains(6 * t + 1) && only(&[1, 3]),
        !odd && p.contains(8 * t + 1) && only(&[1, 4]),
    ];
    labels(Family::R, &conditions)
}

/// The `A^i` conditions, for `p ∈ A_t`.
pub fn a_items(p: &Partition, t: u32) -> Vec<SubsetLabel> {
    if !in_a(p, t) {
        return Vec::new();
    }
    let r = residue(ones(p), 6);
    labels(Family::A, &[r == 2, r == 4, r == 0])
}

/// The `S^i` conditions, for `p ∈ S_t`.
pub fn s_items(p: &Partition, t: u32) -> Vec<SubsetLabel> {
    if !in_s(p, t) {
        return Vec::new();
    }
    let f1 = ones(p);
    let r = residue(f1, 6);
    labels(
        Family::S,
        &[
            r == 2,
            r == 4 && is_neg_residue(f1, 2, 2 * t),
            r == 4 && is_neg_residue(f1, 4, 2 * t),
        ],
    )
}

fn labels(family: Family, conditions: &[bool]) -> Vec<SubsetLabel> {
    conditions
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| SubsetLabel::indexed(family, i as u8 + 1))
        .collect()
}

/// Places `p ∈ O_t` in exactly one of `O^1..O^5`: a part `2kt+1` gives
/// `O^1`; otherwise `λ₁ ≥ 8t²+1` gives `O^2`; otherwise a part `l ≥ 2`
/// with `f(l) ≥ 6t+1` gives `O^3`; otherwise `f(1) ≥ 12t+3` gives `O^4`;
/// everything left is `O^5`.
pub fn classify_o(p: &Partition, t: u32) -> Classification {
    if !in_o(p, t) {
        return Classification::NotMember;
    }
    let index = if one_mod_2t_indices(p, t).next().is_some() {
        1
    } else if p.largest().unwrap_or(0) >= big_part_bound(t) {
        2
    } else if has_heavy_part(p, t) {
        3
    } else if ones(p) >= 12 * t + 3 {
        4
    } else {
        5
    };
    Classification::Member(SubsetLabel::indexed(Family::O, index))
}

/// First of `R^1..R^4` that `p` satisfies. The four subsets do not cover
/// `R_t`, so members outside them come back as [`Classification::Unlisted`].
pub fn classify_r(p: &Partition, t: u32) -> Classification {
    if !in_r(p, t) {
        return Classification::NotMember;
    }
    match r_items(p, t).first() {
        Some(l) => Classification::Member(*l),
        None => Classification::Unlisted,
    }
}

/// `A^1..A^3` by `f(1) mod 6`; these cover `A_t`.
pub fn classify_a(p: &Partition, t: u32) -> Classification {
    if !in_a(p, t) {
        return Classification::NotMember;
    }
    let index = match residue(ones(p), 6) {
        2 => 1,
        4 => 2,
        _ => 3,
    };
    Classification::Member(SubsetLabel::indexed(Family::A, index))
}

pub fn classify_s(p: &Partition, t: u32) -> Classification {
    if !in_s(p, t) {
        return Classification::NotMember;
    }
    match s_items(p, t).first() {
        Some(l) => Classification::Member(*l),
        None => Classification::Unlisted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn o(i: u8) -> Classification {
        Classification::Member(SubsetLabel::indexed(Family::O, i))
    }

    fn r(i: u8) -> Classification {
        Classification::Member(SubsetLabel::indexed(Family::R, i))
    }

    #[test]
    fn classify_o_worked_examples() {
        assert_eq!(classify_o(&p("17,15,13,10,7,5,3,2,1^3"), 4), o(1));
        assert_eq!(classify_o(&p("13,7,6,2,2,1^55"), 4), o(4));
        // 157 ≢ 1 (mod 8) and no other part is 1 mod 8
        assert_eq!(classify_o(&p("157,34,29,11,5,3,1^3"), 4), o(2));
    }

    #[test]
    fn parts_congruent_to_one_win_over_size() {
        // 137 = 2·17·4 + 1 and 33 = 2·4·4 + 1, so this lands in O^1 even
        // though λ₁ ≥ 8t²+1.
        let lambda = p("137,33,29,11,5,3,1^3");
        assert_eq!(one_mod_2t_indices(&lambda, 4).collect::<Vec<_>>(), [17, 4]);
        assert_eq!(classify_o(&lambda, 4), o(1));
        // Same story for 17 and 9 beside 3^25.
        assert_eq!(classify_o(&p("17,13,11,9,3^25,1^3"), 4), o(1));
    }

    #[test]
    fn classify_o_rejects_non_members() {
        assert_eq!(classify_o(&p("4,1"), 4), Classification::NotMember);
        assert_eq!(classify_o(&p("3,1^2"), 4), Classification::NotMember);
        assert_eq!(
            classify_o(&Partition::empty(), 2),
            Classification::NotMember
        );
        assert_eq!(classify_o(&p("1^5"), 2), o(5));
    }

    #[test]
    fn classify_r_worked_examples() {
        assert_eq!(classify_r(&p("15,13,10,9,8,5,3,2,1^3"), 4), r(1));
        assert_eq!(classify_r(&p("33,13,9,9,7,6,2,2,1^4"), 4), r(4));
        // 33 (k = 4) next to 17 (k = 2) rules out both R^2 and R^4.
        assert_eq!(
            classify_r(&p("33,29,17^7,11,9,8,5,3,1^4"), 4),
            Classification::Unlisted
        );
        assert_eq!(classify_r(&p("34,29,17^6,11,9^6,5,3,1^4"), 4), r(2));
        // Carries both 17 (k = 2) and 25 (k = 3), which R^2 and R^3 each
        // forbid.
        assert_eq!(
            classify_r(&p("25,25,17,13,11,9,9,9,1^10"), 4),
            Classification::Unlisted
        );
        assert_eq!(classify_r(&p("25,9,1^2"), 4), r(3));
        assert_eq!(classify_r(&p("12,9"), 4), Classification::NotMember);
        assert_eq!(classify_r(&p("8,1"), 4), Classification::NotMember);
    }

    #[test]
    fn independent_items_agree_with_chain() {
        for (s, t) in [
            ("1^5", 2),
            ("13,7,6,2,2,1^55", 4),
            ("3^13,1", 2),
            ("35,1", 2),
        ] {
            let q = p(s);
            assert_eq!(o_items(&q, t).len(), 1, "{s}");
            assert_eq!(Some(o_items(&q, t)[0]), classify_o(&q, t).label());
        }
    }

    #[test]
    fn a_and_s_classes() {
        let lambda = p("1^6");
        assert!(in_a(&lambda, 4));
        assert_eq!(classify_a(&lambda, 4).index(), Some(3));
        let mu = p("2,1^4");
        assert_eq!(classify_s(&mu, 4).index(), Some(3));
        assert_eq!(classify_s(&p("1^2"), 4).index(), Some(1));
        assert_eq!(classify_s(&p("1^3"), 4), Classification::NotMember);
        assert!(!in_a(&p("3,1^6"), 4));
    }

    #[test]
    fn tau_families() {
        assert!(in_c(&p("1^9"), 3));
        assert!(in_b(&p("5,2,1^2"), 3));
        assert!(!in_b(&p("3,1^2"), 3));
        assert!(in_d2(&p("3,1^6")));
        assert!(in_d1(&p("5,1^4")));
        assert!(!in_d1(&p("4,1^4")));
    }
}
