//! The injections and their inverses.
//!
//! Each map validates the local conditions its formula relies on and
//! otherwise applies the formula as written. The combined maps
//! [`phi_total`] and [`gamma`] dispatch on the subset classifiers.

use std::fmt;
use std::str::FromStr;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;

use super::families::{
    classify_a, classify_o, classify_r, classify_s, in_b, in_c, in_d1, in_d2, in_o, in_r,
    one_mod_2t_indices, Classification,
};
use super::InjectionCase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapId {
    Phi1,
    Phi2,
    Phi3,
    Phi4,
    #[serde(rename = "phi")]
    PhiTotal,
    Gamma1,
    Gamma2,
    Gamma3,
    #[serde(rename = "gamma")]
    GammaTotal,
    Epsilon,
    Tau,
    Eta,
}

impl MapId {
    pub const ALL: [MapId; 12] = [
        MapId::Phi1,
        MapId::Phi2,
        MapId::Phi3,
        MapId::Phi4,
        MapId::PhiTotal,
        MapId::Gamma1,
        MapId::Gamma2,
        MapId::Gamma3,
        MapId::GammaTotal,
        MapId::Epsilon,
        MapId::Tau,
        MapId::Eta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapId::Phi1 => "phi1",
            MapId::Phi2 => "phi2",
            MapId::Phi3 => "phi3",
            MapId::Phi4 => "phi4",
            MapId::PhiTotal => "phi",
            MapId::Gamma1 => "gamma1",
            MapId::Gamma2 => "gamma2",
            MapId::Gamma3 => "gamma3",
            MapId::GammaTotal => "gamma",
            MapId::Epsilon => "epsilon",
            MapId::Tau => "tau",
            MapId::Eta => "eta",
        }
    }

    /// Applies the map.
    pub fn apply(self, p: &Partition, t: u32) -> Result<Partition> {
        match self {
            MapId::Phi1 => phi1(p, t),
            MapId::Phi2 => phi2(p, t),
            MapId::Phi3 => phi3(p, t),
            MapId::Phi4 => phi4(p, t),
            MapId::PhiTotal => phi_total(p, t),
            MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => gamma(p, t),
            MapId::Epsilon => epsilon(p),
            MapId::Tau => tau(p, t),
            MapId::Eta => eta(p, t),
        }
    }

    /// Applies the declared inverse.
    pub fn invert(self, p: &Partition, t: u32) -> Result<Partition> {
        match self {
            MapId::Phi1 => phi1_inv(p, t),
            MapId::Phi2 => psi2(p, t),
            MapId::Phi3 => psi3(p, t),
            MapId::Phi4 => psi4(p, t),
            MapId::PhiTotal => phi_total_inv(p, t),
            MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => gamma_inv(p, t),
            MapId::Epsilon => epsilon_inv(p),
            MapId::Tau => eta(p, t),
            MapId::Eta => tau(p, t),
        }
    }

    /// Which branch of the map `p` goes through.
    pub fn case_of(self, p: &Partition, t: u32) -> Result<InjectionCase> {
        let case = match self {
            MapId::Phi2 => Some(phi2_case(p, t)?),
            MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => {
                Some(gamma_case(p, t)?)
            }
            MapId::Epsilon => Some(epsilon_case(p)?),
            MapId::Tau => Some(tau_case(p, t)?),
            MapId::Eta => Some(eta_case(p, t)?),
            MapId::PhiTotal => classify_o(p, t).index(),
            _ => {
                self.apply(p, t)?;
                None
            }
        };
        Ok(InjectionCase { map: self, case })
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapId::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown map {s:?}")))
    }
}

fn require(ok: bool, map: &'static str, input: &Partition, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition {
            map,
            input: input.clone(),
            reason: reason.to_string(),
        })
    }
}

fn multiset(pairs: &[(u32, u32)]) -> Partition {
    Partition::from_freq(pairs.iter().copied()).expect("map formulas only use positive parts")
}

/// `λ ∖ (2kt+1) ∪ (2t+1, (2t)^{k-1})` for the least `k ≥ 1` with `2kt+1`
/// a part.
pub fn phi1(lambda: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(in_o(lambda, t), "phi1", lambda, "not in O_t")?;
    let k = one_mod_2t_indices(lambda, t).min();
    let Some(k) = k else {
        return Err(Error::Precondition {
            map: "phi1",
            input: lambda.clone(),
            reason: "no part of the form 2kt+1 with k >= 1".into(),
        });
    };
    lambda.replace(
        &multiset(&[(2 * k * t + 1, 1)]),
        &multiset(&[(2 * t + 1, 1), (2 * t, k - 1)]),
    )
}

/// Recovers `k = 1 + f(2t)` and undoes [`phi1`].
pub fn phi1_inv(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(in_r(mu, t), "phi1_inv", mu, "not in R_t")?;
    require(mu.frequency(1) % 2 == 1, "phi1_inv", mu, "f(1) is even")?;
    let f2t = mu.frequency(2 * t);
    let k = 1 + f2t;
    mu.replace(
        &multiset(&[(2 * t + 1, 1), (2 * t, f2t)]),
        &multiset(&[(2 * k * t + 1, 1)]),
    )
}

/// The solution of `λ₁ - 1 = x(2t+1) + y(4t+1)` with `0 ≤ y ≤ 2t`.
///
/// Since `4t+1 ≡ -1 (mod 2t+1)`, `y` is the negated residue of `λ₁ - 1`.
/// `x ≥ 0` holds whenever `λ₁ - 1` exceeds the Frobenius number
/// `8t² - 1` of the pair, which `λ₁ ≥ 8t²+1` guarantees.
pub fn phi2_split(lambda1: u32, t: u32) -> Option<(u32, u32)> {
    let (a, b) = (2 * t + 1, 4 * t + 1);
    let m = lambda1.checked_sub(1)?;
    let y = (a - m % a) % a;
    let x = m.checked_sub(y * b)? / a;
    Some((x, y))
}

/// 1 when `x ≠ 0`, 2 when `x = 0`.
pub fn phi2_case(lambda: &Partition, t: u32) -> Result<u8> {
    check_modulus(t)?;
    require(in_o(lambda, t), "phi2", lambda, "not in O_t")?;
    let lambda1 = lambda.largest().unwrap_or(0);
    require(
        lambda1 > 8 * t * t,
        "phi2",
        lambda,
        "largest part is below 8t^2+1",
    )?;
    match phi2_split(lambda1, t) {
        Some((0, _)) => Ok(2),
        Some(_) => Ok(1),
        None => Err(Error::Precondition {
            map: "phi2",
            input: lambda.clone(),
            reason: "largest part has no (x, y) decomposition".into(),
        }),
    }
}

pub fn phi2(lambda: &Partition, t: u32) -> Result<Partition> {
    let case = phi2_case(lambda, t)?;
    let lambda1 = lambda.largest().unwrap_or(0);
    let (x, y) = phi2_split(lambda1, t).expect("checked by phi2_case");
    let added = if case == 1 {
        multiset(&[(4 * t + 1, y), (2 * t + 1, x), (1, 1)])
    } else {
        multiset(&[(4 * t + 1, y - 1), (2 * t + 1, 1), (2 * t, 1), (1, 1)])
    };
    lambda.replace(&multiset(&[(lambda1, 1)]), &added)
}

/// Gathers `2t`, `2t+1`, `4t+1` and one 1 back into a single part
/// `l = 1 + 2t·f(2t) + (2t+1)·f(2t+1) + (4t+1)·f(4t+1)`.
pub fn psi2(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(in_r(mu, t), "psi2", mu, "not in R_t")?;
    require(
        mu.frequency(2 * t) <= 1,
        "psi2",
        mu,
        "2t appears more than once",
    )?;
    require(mu.contains(1), "psi2", mu, "no part 1")?;
    let (a, b, c) = (
        mu.frequency(2 * t),
        mu.frequency(2 * t + 1),
        mu.frequency(4 * t + 1),
    );
    let l = 1 + 2 * t * a + (2 * t + 1) * b + (4 * t + 1) * c;
    mu.replace(
        &multiset(&[(2 * t, a), (2 * t + 1, b), (4 * t + 1, c), (1, 1)]),
        &multiset(&[(l, 1)]),
    )
}

/// `λ ∖ (l^{6t+1}) ∪ ((6t+1)^{l-1}, (2t+1)², 1^{2t-1})` for the least
/// `l ≥ 2` with `f(l) ≥ 6t+1`.
pub fn phi3(lambda: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(in_o(lambda, t), "phi3", lambda, "not in O_t")?;
    let heavy = 6 * t + 1;
    let l = lambda
        .freq_desc()
        .filter(|&(l, m)| l >= 2 && m >= heavy)
        .map(|(l, _)| l)
        .min();
    let Some(l) = l else {
        return Err(Error::Precondition {
            map: "phi3",
            input: lambda.clone(),
            reason: "no part l >= 2 occurs 6t+1 times".into(),
        });
    };
    lambda.replace(
        &multiset(&[(l, heavy)]),
        &multiset(&[(heavy, l - 1), (2 * t + 1, 2), (1, 2 * t - 1)]),
    )
}

pub fn psi3(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    let heavy = 6 * t + 1;
    let f = mu.frequency(heavy);
    require(f >= 1, "psi3", mu, "6t+1 is not a part")?;
    // Images of O^3 carry exactly two copies of 2t+1; accepting more lets
    // psi3 also undo phi3 on inputs that already contain 2t+1.
    require(mu.frequency(2 * t + 1) >= 2, "psi3", mu, "f(2t+1) < 2")?;
    require(
        mu.frequency(1) >= 2 * t - 1,
        "psi3",
        mu,
        "fewer than 2t-1 ones",
    )?;
    mu.replace(
        &multiset(&[(heavy, f), (2 * t + 1, 2), (1, 2 * t - 1)]),
        &multiset(&[(f + 1, heavy)]),
    )
}

/// `λ ∖ (1^{12t+3}) ∪ (8t+1, (2t+1)²)`.
pub fn phi4(lambda: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(in_o(lambda, t), "phi4", lambda, "not in O_t")?;
    require(
        lambda.frequency(1) >= 12 * t + 3,
        "phi4",
        lambda,
        "fewer than 12t+3 ones",
    )?;
    lambda.replace(
        &multiset(&[(1, 12 * t + 3)]),
        &multiset(&[(8 * t + 1, 1), (2 * t + 1, 2)]),
    )
}

pub fn psi4(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(mu.frequency(2 * t + 1) == 2, "psi4", mu, "f(2t+1) != 2")?;
    require(mu.frequency(8 * t + 1) == 1, "psi4", mu, "f(8t+1) != 1")?;
    mu.replace(
        &multiset(&[(8 * t + 1, 1), (2 * t + 1, 2)]),
        &multiset(&[(1, 12 * t + 3)]),
    )
}

/// `Φ`: sends `O^i` into `R^i` through `φ_i` for `i ≤ 4`.
pub fn phi_total(lambda: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    match classify_o(lambda, t).index() {
        Some(1) => phi1(lambda, t),
        Some(2) => phi2(lambda, t),
        Some(3) => phi3(lambda, t),
        Some(4) => phi4(lambda, t),
        Some(_) => Err(Error::OutsideDomain {
            map: "phi",
            input: lambda.clone(),
        }),
        None => Err(Error::Precondition {
            map: "phi",
            input: lambda.clone(),
            reason: "not in O_t".into(),
        }),
    }
}

/// Inverts [`phi_total`] by reading off the `R` subset.
pub fn phi_total_inv(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    match classify_r(mu, t).index() {
        Some(1) => phi1_inv(mu, t),
        Some(2) => psi2(mu, t),
        Some(3) => psi3(mu, t),
        Some(4) => psi4(mu, t),
        _ => Err(Error::Precondition {
            map: "phi_inv",
            input: mu.clone(),
            reason: "not in any of R^1..R^4".into(),
        }),
    }
}

/// The `A` subset index of `λ`, which selects `γ_1`, `γ_2` or `γ_3`.
pub fn gamma_case(lambda: &Partition, t: u32) -> Result<u8> {
    check_modulus(t)?;
    match classify_a(lambda, t) {
        Classification::Member(l) => Ok(l.index().expect("A labels are indexed")),
        _ => Err(Error::Precondition {
            map: "gamma",
            input: lambda.clone(),
            reason: "not in A_t".into(),
        }),
    }
}

/// `Γ`: identity on `A^1` and `A^2`, `λ ∖ (1²) ∪ (2)` on `A^3`.
///
/// Only `t ≥ 4` keeps the image `t`-regular; smaller `t` is accepted with
/// a warning.
pub fn gamma(lambda: &Partition, t: u32) -> Result<Partition> {
    let case = gamma_case(lambda, t)?;
    if t < 4 {
        warn!("gamma applied with t = {t}; the image may contain a multiple of t");
    }
    if case == 3 {
        lambda.replace(&multiset(&[(1, 2)]), &multiset(&[(2, 1)]))
    } else {
        Ok(lambda.clone())
    }
}

/// `δ₃ = γ₃⁻¹`: `μ ∖ (2) ∪ (1²)`.
pub fn delta3(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    require(mu.contains(2), "delta3", mu, "2 is not a part")?;
    require(!mu.contains(3), "delta3", mu, "3 is a part")?;
    mu.replace(&multiset(&[(2, 1)]), &multiset(&[(1, 2)]))
}

pub fn gamma_inv(mu: &Partition, t: u32) -> Result<Partition> {
    check_modulus(t)?;
    match classify_s(mu, t).index() {
        Some(1 | 2) => Ok(mu.clone()),
        Some(_) => delta3(mu, t),
        None => Err(Error::Precondition {
            map: "gamma_inv",
            input: mu.clone(),
            reason: "not in any of S^1..S^3".into(),
        }),
    }
}

/// 1 when `λ₁ ≥ 3`, 2 when `λ = 1^{12k+6}`.
pub fn epsilon_case(lambda: &Partition) -> Result<u8> {
    require(in_d2(lambda), "epsilon", lambda, "not in D_2")?;
    require(lambda.weight() >= 7, "epsilon", lambda, "weight below 7")?;
    Ok(if lambda.largest() >= Some(3) { 1 } else { 2 })
}

/// `ε: D_2(n) → D_1(n)` for `t = 2`, `n ≥ 7`.
pub fn epsilon(lambda: &Partition) -> Result<Partition> {
    if epsilon_case(lambda)? == 1 {
        let l1 = lambda.largest().expect("nonempty");
        lambda.replace(&multiset(&[(l1, 1), (1, 2)]), &multiset(&[(l1 + 2, 1)]))
    } else {
        let k = (lambda.frequency(1) - 6) / 12;
        Ok(multiset(&[(6 * k + 1, 2), (1, 4)]))
    }
}

pub fn epsilon_inv(mu: &Partition) -> Result<Partition> {
    require(in_d1(mu), "epsilon_inv", mu, "not in D_1")?;
    let m1 = mu.largest().unwrap_or(0);
    if mu.second() == Some(m1) {
        let shape = mu.len() == 6 && mu.frequency(1) == 4 && m1 > 1 && (m1 - 1).is_multiple_of(6);
        require(
            shape,
            "epsilon_inv",
            mu,
            "equal leading parts but not ((6k+1)^2, 1^4)",
        )?;
        return Ok(multiset(&[(1, mu.weight() as u32)]));
    }
    require(m1 >= 5, "epsilon_inv", mu, "largest part below 5")?;
    mu.replace(&multiset(&[(m1, 1)]), &multiset(&[(m1 - 2, 1), (1, 2)]))
}

fn require_tau_modulus(t: u32, map: &'static str, p: &Partition) -> Result<()> {
    check_modulus(t)?;
    require(t >= 3, map, p, "defined for t >= 3 only")
}

/// Case 1: 2 is a part. Case 2: `λ₁ ≥ 3`, `λ₁ ≢ -1 (mod t)`. Case 3:
/// `λ₁ ≥ 3`, `λ₁ ≡ -1 (mod t)`. Case 4: `λ = 1^{6k+3}` with `k ≥ 1`.
pub fn tau_case(lambda: &Partition, t: u32) -> Result<u8> {
    require_tau_modulus(t, "tau", lambda)?;
    require(in_c(lambda, t), "tau", lambda, "not in C_t")?;
    let l1 = lambda.largest().expect("C_t members have ones");
    if lambda.contains(2) {
        Ok(1)
    } else if l1 >= 2 {
        Ok(if !(l1 + 1).is_multiple_of(t) { 2 } else { 3 })
    } else {
        require(lambda.weight() >= 9, "tau", lambda, "1^3 has no image")?;
        Ok(4)
    }
}

/// `τ: C_t(n) → B_t(n)`.
pub fn tau(lambda: &Partition, t: u32) -> Result<Partition> {
    let case = tau_case(lambda, t)?;
    let l1 = lambda.largest().expect("nonempty");
    match case {
        1 => lambda.replace(&multiset(&[(2, 1)]), &multiset(&[(1, 2)])),
        2 => lambda.replace(&multiset(&[(l1, 1), (1, 1)]), &multiset(&[(l1 + 1, 1)])),
        3 => lambda.replace(
            &multiset(&[(l1, 1), (1, 1)]),
            &multiset(&[(l1 - 1, 1), (2, 1)]),
        ),
        _ => {
            let k = (lambda.frequency(1) - 3) / 6;
            Ok(if t >= 5 {
                multiset(&[(3, 1), (2, 3 * k - 1), (1, 2)])
            } else {
                multiset(&[(5, 1), (2, 3 * k - 2), (1, 2)])
            })
        }
    }
}

/// Whether `μ` is `(3, 2^{3k-1}, 1²)` (`t ≥ 5`) or `(5, 2^{3k-2}, 1²)`
/// (`t = 3, 4`) for some `k ≥ 1`.
fn is_tau_case4_image(mu: &Partition, t: u32) -> bool {
    let (top, offset) = if t >= 5 { (3, 1) } else { (5, 2) };
    let twos = mu.frequency(2);
    mu.frequency(1) == 2
        && mu.frequency(top) == 1
        && twos + offset >= 3
        && (twos + offset).is_multiple_of(3)
        && mu.len() as u32 == twos + 3
}

/// Which case of [`tau`] produced `μ`.
pub fn eta_case(mu: &Partition, t: u32) -> Result<u8> {
    require_tau_modulus(t, "eta", mu)?;
    require(in_b(mu, t), "eta", mu, "not in B_t")?;
    if mu.frequency(1) % 6 == 5 {
        Ok(1)
    } else if is_tau_case4_image(mu, t) {
        Ok(4)
    } else if !mu.contains(2) {
        require(mu.largest() >= Some(2), "eta", mu, "all parts are 1")?;
        Ok(2)
    } else {
        Ok(3)
    }
}

/// `η`, the left inverse of [`tau`].
pub fn eta(mu: &Partition, t: u32) -> Result<Partition> {
    let case = eta_case(mu, t)?;
    match case {
        1 => mu.replace(&multiset(&[(1, 2)]), &multiset(&[(2, 1)])),
        2 => {
            let m1 = mu.largest().expect("nonempty");
            mu.replace(&multiset(&[(m1, 1)]), &multiset(&[(m1 - 1, 1), (1, 1)]))
        }
        3 => {
            let target = mu.parts().find(|&m| (m + 2) % t == 0);
            let Some(m) = target else {
                return Err(Error::Precondition {
                    map: "eta",
                    input: mu.clone(),
                    reason: "no part congruent to -2 mod t".into(),
                });
            };
            mu.replace(
                &multiset(&[(m, 1), (2, 1)]),
                &multiset(&[(m + 1, 1), (1, 1)]),
            )
        }
        _ => Ok(multiset(&[(1, mu.weight() as u32)])),
    }
}

/// `192t⁵ − 192t⁴ − 24t³ + 24t² + 6t + 1`, the stated ceiling on the
/// weight of any member of `O^5`.
pub fn o5_weight_bound(t: u32) -> u64 {
    let t = t as u64;
    let t2 = t * t;
    192 * t2 * t2 * t - 192 * t2 * t2 - 24 * t2 * t + 24 * t2 + 6 * t + 1
}

/// `6t Σ_{n=2}^{8t²} n − 6t Σ_{n=1}^{8t} nt + (12t+1)`, evaluated term by
/// term. It simplifies to `192t⁵ − 192t⁴ + 6t + 1`, not to
/// [`o5_weight_bound`].
pub fn o5_sum_side(t: u32) -> u64 {
    let t = t as u64;
    let first: u64 = (2..=8 * t * t).sum();
    let second: u64 = (1..=8 * t).map(|n| n * t).sum();
    6 * t * first - 6 * t * second + 12 * t + 1
}

/// The exact largest weight of a member of `O^5`: every admissible part
/// `2 ≤ l ≤ 8t²` (not a multiple of `t`, not `≡ 1 mod 2t`) taken `6t`
/// times, plus `12t+1` ones.
pub fn o5_max_weight(t: u32) -> u64 {
    let t = t as u64;
    let parts: u64 = (2..=8 * t * t)
        .filter(|l| l % t != 0 && l % (2 * t) != 1)
        .sum();
    6 * t * parts + 12 * t + 1
}

/// The partition attaining [`o5_max_weight`].
pub fn o5_extremal(t: u32) -> Partition {
    let pairs = (2..=8 * t * t)
        .filter(|l| l % t != 0 && l % (2 * t) != 1)
        .map(|l| (l, 6 * t))
        .chain([(1, 12 * t + 1)]);
    Partition::from_freq(pairs).expect("positive parts")
}
