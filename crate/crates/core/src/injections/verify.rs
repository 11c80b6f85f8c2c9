//! Exhaustive certification of a map at a fixed `(t, n)`.

use std::collections::HashMap;

use log::info;
use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::partition::{t_regular_partitions, Partition};

use super::families::{
    classify_a, classify_o, in_a, in_b, in_c, in_d1, in_d2, in_o, in_r, o_items, r_items, s_items,
    Classification,
};
use super::maps::{tau, MapId};
use super::{Family, SubsetLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NotInCodomain,
    Collision,
    InverseMismatch,
    ClassificationGap,
    ClassificationOverlap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub input: Partition,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub map: MapId,
    pub t: u32,
    pub n: usize,
    pub domain_size: usize,
    pub image_size: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Domain of each map, as a filter over `t`-regular partitions.
fn in_domain(map: MapId, p: &Partition, t: u32) -> bool {
    let a_index = || classify_a(p, t).index();
    match map {
        MapId::Phi1 | MapId::Phi2 | MapId::Phi3 | MapId::Phi4 => {
            let i = map as u8 - MapId::Phi1 as u8 + 1;
            classify_o(p, t).index() == Some(i)
        }
        MapId::PhiTotal => matches!(classify_o(p, t).index(), Some(1..=4)),
        MapId::Gamma1 => a_index() == Some(1),
        MapId::Gamma2 => a_index() == Some(2),
        MapId::Gamma3 => a_index() == Some(3),
        MapId::GammaTotal => in_a(p, t),
        MapId::Epsilon => in_d2(p),
        MapId::Tau => in_c(p, t),
        MapId::Eta => unreachable!("eta's domain is the image of tau"),
    }
}

/// The subset label an image must carry, given the input.
fn expected_codomain(map: MapId, input: &Partition, t: u32) -> Option<SubsetLabel> {
    match map {
        MapId::Phi1 | MapId::Phi2 | MapId::Phi3 | MapId::Phi4 | MapId::PhiTotal => {
            let i = classify_o(input, t).index()?;
            Some(SubsetLabel::indexed(Family::R, i))
        }
        MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => {
            let i = classify_a(input, t).index()?;
            Some(SubsetLabel::indexed(Family::S, i))
        }
        _ => None,
    }
}

fn in_codomain(map: MapId, input: &Partition, image: &Partition, t: u32) -> bool {
    match map {
        MapId::Phi1 | MapId::Phi2 | MapId::Phi3 | MapId::Phi4 | MapId::PhiTotal => {
            in_r(image, t)
                && expected_codomain(map, input, t).is_some_and(|l| r_items(image, t).contains(&l))
        }
        MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => {
            expected_codomain(map, input, t).is_some_and(|l| s_items(image, t).contains(&l))
        }
        MapId::Epsilon => in_d1(image),
        MapId::Tau => in_b(image, t),
        MapId::Eta => in_c(image, t),
    }
}

fn check_defined(map: MapId, t: u32) -> Result<()> {
    check_modulus(t)?;
    match map {
        MapId::Epsilon if t != 2 => Err(Error::Unsupported(format!(
            "epsilon is defined for t = 2 only, got t = {t}"
        ))),
        MapId::Tau | MapId::Eta if t < 3 => Err(Error::Unsupported(format!(
            "{map} is defined for t >= 3 only, got t = {t}"
        ))),
        _ => Ok(()),
    }
}

fn domain(map: MapId, t: u32, n: usize) -> Result<Vec<Partition>> {
    let all = t_regular_partitions(n, t)?;
    Ok(if map == MapId::Eta {
        let mut images: Vec<Partition> = all
            .filter(|p| in_c(p, t))
            .filter_map(|p| tau(&p, t).ok())
            .collect();
        images.sort();
        images.dedup();
        images
    } else {
        all.filter(|p| in_domain(map, p, t)).collect()
    })
}

/// Checks the subset classifications the map depends on: every member of
/// `O_t(n)` satisfies exactly one `O^i` condition and no member of
/// `R_t(n)` (or `S_t(n)`) satisfies two of the `R^i` (`S^i`) conditions.
fn classification_violations(map: MapId, t: u32, n: usize) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let overlap = |p: &Partition, labels: &[SubsetLabel]| Violation {
        input: p.clone(),
        kind: ViolationKind::ClassificationOverlap,
        detail: format!(
            "satisfies {}",
            labels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    };
    match map {
        MapId::Phi1 | MapId::Phi2 | MapId::Phi3 | MapId::Phi4 | MapId::PhiTotal => {
            // R_t allows the part 2t, so it is enumerated over all
            // partitions whose parts avoid the other multiples of t.
            let r_universe = crate::partition::partitions_with(n, |m| m % t != 0 || m == 2 * t);
            for p in r_universe.filter(|p| in_r(p, t)) {
                let labels = r_items(&p, t);
                if labels.len() > 1 {
                    out.push(overlap(&p, &labels));
                }
            }
            for p in t_regular_partitions(n, t)?.filter(|p| in_o(p, t)) {
                let labels = o_items(&p, t);
                let chain = classify_o(&p, t).label();
                match labels.len() {
                    0 => out.push(Violation {
                        input: p.clone(),
                        kind: ViolationKind::ClassificationGap,
                        detail: "satisfies none of O^1..O^5".into(),
                    }),
                    1 if Some(labels[0]) != chain => out.push(Violation {
                        input: p.clone(),
                        kind: ViolationKind::ClassificationGap,
                        detail: format!(
                            "conditions give {}, decision chain gives {chain:?}",
                            labels[0]
                        ),
                    }),
                    1 => {}
                    _ => out.push(overlap(&p, &labels)),
                }
            }
        }
        MapId::Gamma1 | MapId::Gamma2 | MapId::Gamma3 | MapId::GammaTotal => {
            for p in t_regular_partitions(n, t)? {
                let labels = s_items(&p, t);
                if labels.len() > 1 {
                    out.push(overlap(&p, &labels));
                }
                if in_a(&p, t) && matches!(classify_a(&p, t), Classification::Unlisted) {
                    out.push(Violation {
                        input: p.clone(),
                        kind: ViolationKind::ClassificationGap,
                        detail: "satisfies none of A^1..A^3".into(),
                    });
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Enumerates the domain of `map` at `(t, n)` and checks that the map is
/// defined, weight-preserving, lands in its codomain, is collision-free,
/// and is undone by its declared inverse. Maps built on subset
/// classifications also get those classifications checked.
///
/// Fails only when the map is undefined for `t`; every mathematical
/// failure is recorded in the report.
pub fn verify_injection(map: MapId, t: u32, n: usize) -> Result<VerificationReport> {
    check_defined(map, t)?;
    let inputs = domain(map, t, n)?;
    let mut violations = Vec::new();
    let mut seen: HashMap<Partition, Partition> = HashMap::with_capacity(inputs.len());

    for lambda in &inputs {
        let mu = match map.apply(lambda, t) {
            Ok(mu) => mu,
            Err(e) => {
                violations.push(Violation {
                    input: lambda.clone(),
                    kind: ViolationKind::NotInCodomain,
                    detail: format!("map undefined: {e}"),
                });
                continue;
            }
        };
        if mu.weight() != lambda.weight() {
            violations.push(Violation {
                input: lambda.clone(),
                kind: ViolationKind::NotInCodomain,
                detail: format!("weight changed to {} ({mu})", mu.weight()),
            });
        } else if !in_codomain(map, lambda, &mu, t) {
            violations.push(Violation {
                input: lambda.clone(),
                kind: ViolationKind::NotInCodomain,
                detail: format!("image {mu} is outside the codomain"),
            });
        }
        match map.invert(&mu, t) {
            Ok(back) if &back == lambda => {}
            Ok(back) => violations.push(Violation {
                input: lambda.clone(),
                kind: ViolationKind::InverseMismatch,
                detail: format!("image {mu} inverts to {back}"),
            }),
            Err(e) => violations.push(Violation {
                input: lambda.clone(),
                kind: ViolationKind::InverseMismatch,
                detail: format!("inverse failed on {mu}: {e}"),
            }),
        }
        if let Some(other) = seen.get(&mu) {
            violations.push(Violation {
                input: lambda.clone(),
                kind: ViolationKind::Collision,
                detail: format!("shares image {mu} with {other}"),
            });
        } else {
            seen.insert(mu, lambda.clone());
        }
    }

    violations.extend(classification_violations(map, t, n)?);
    violations.sort_by(|a, b| {
        (a.input.to_string(), a.kind, &a.detail).cmp(&(b.input.to_string(), b.kind, &b.detail))
    });
    let domain_size = inputs.len();
    let image_size = seen.len();
    info!(
        "{map} t={t} n={n}: {domain_size} inputs, {} violations",
        violations.len()
    );
    Ok(VerificationReport {
        map,
        t,
        n,
        domain_size,
        image_size,
        passed: violations.is_empty() && image_size == domain_size,
        violations,
    })
}
