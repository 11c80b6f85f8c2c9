//! Theorem-level checks: sign scans of the difference series against
//! their stated exception sets, coefficient identities, and the bridge
//! between enumeration and generating functions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::hook_gf::{
    bigint_string, hook_totals_enum, t2_remainder_series, SeriesCache, SeriesName,
};
use crate::injections::o5_weight_bound;
use crate::qseries::{t_regular_gf, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `b_{t,2}(n) ≥ b_{t,1}(n)` beyond `N(t) = o5_weight_bound(t) + 1`.
    Bias21,
    /// `b_{t,2}(n) ≥ b_{t,3}(n)` unless `t ≥ 3` and `n = 3`.
    Bias23,
    SignD,
    SignE,
    SignF,
    IdentityAbc,
    IdentityDef,
    OracleCrossCheck,
    /// `2Q(n) ≤ Q(n-1) + Q(n+1)` for distinct-part counts `Q`.
    QConcavity,
    /// Sign pattern of the `t = 2` remainder series.
    RemainderT2,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::Bias21 => "bias21",
            TheoremId::Bias23 => "bias23",
            TheoremId::SignD => "sign_d",
            TheoremId::SignE => "sign_e",
            TheoremId::SignF => "sign_f",
            TheoremId::IdentityAbc => "identity_abc",
            TheoremId::IdentityDef => "identity_def",
            TheoremId::OracleCrossCheck => "oracle_cross_check",
            TheoremId::QConcavity => "q_concavity",
            TheoremId::RemainderT2 => "remainder_t2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The outcome reflects the scan.
    Asserting,
    /// The scan ran but the range lies outside what the statement covers.
    Informational,
}

/// A coefficient that violates the sign condition being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub t: u32,
    pub n: usize,
    #[serde(with = "bigint_string")]
    pub value: BigInt,
}

/// Two computations that should agree but do not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub t: u32,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(with = "bigint_string")]
    pub left: BigInt,
    #[serde(with = "bigint_string")]
    pub right: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub which: TheoremId,
    pub t_min: u32,
    pub t_max: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub outcome: Outcome,
    /// Every sign violation found in range.
    pub witnesses: Vec<Witness>,
    /// The `(t, n)` pairs the statement allows to be negative.
    pub expected: Vec<(u32, usize)>,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
}

impl TheoremCheck {
    fn new(which: TheoremId, t: (u32, u32), n: (usize, usize)) -> Self {
        Self {
            which,
            t_min: t.0,
            t_max: t.1,
            n_min: n.0,
            n_max: n.1,
            mode: Mode::Asserting,
            outcome: Outcome::Fail,
            witnesses: Vec::new(),
            expected: Vec::new(),
            mismatches: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Witness pairs equal the expected set and nothing mismatched.
    fn settle(mut self) -> Self {
        let found: BTreeSet<(u32, usize)> = self.witnesses.iter().map(|w| (w.t, w.n)).collect();
        let expected: BTreeSet<(u32, usize)> = self.expected.iter().copied().collect();
        let ok = found == expected && self.mismatches.is_empty();
        self.outcome = if ok || self.mode == Mode::Informational {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// The `(t, n)` pairs of the witnesses.
    pub fn witness_pairs(&self) -> Vec<(u32, usize)> {
        self.witnesses.iter().map(|w| (w.t, w.n)).collect()
    }
}

fn check_range(t_min: u32, t_max: u32) -> Result<()> {
    check_modulus(t_min)?;
    if t_max < t_min {
        return Err(Error::Unsupported(format!(
            "empty t range {t_min}..={t_max}"
        )));
    }
    Ok(())
}

fn negatives(s: &Series, t: u32, from: usize) -> impl Iterator<Item = Witness> + '_ {
    (from..=s.order())
        .filter(move |&n| s.coeff(n).is_negative())
        .map(move |n| Witness {
            t,
            n,
            value: s.coeff(n).clone(),
        })
}

/// Scans `b_{t,2} - b_{t,1}` up to `order`. Asserting for `t = 2`, or for
/// any `t` when `full` is set; otherwise the scan is reported but never
/// fails.
pub fn run_bias21(t: u32, order: usize, full: bool, cache: &SeriesCache) -> Result<TheoremCheck> {
    check_modulus(t)?;
    let bound = (o5_weight_bound(t) + 1) as usize;
    let diff = cache.get(SeriesName::DiffBt2Bt1, t, order)?;
    let mut check = TheoremCheck::new(TheoremId::Bias21, (t, t), (bound, order));
    if !(t == 2 || full) {
        check.mode = Mode::Informational;
    }
    check.witnesses = negatives(&diff, t, bound).collect();
    let below: Vec<usize> = (0..bound.min(order + 1))
        .filter(|&n| diff.coeff(n).is_negative())
        .collect();
    check.notes.push(format!("bound N({t}) = {bound}"));
    if order < bound {
        check.notes.push(format!(
            "order {order} is below the bound; nothing in range"
        ));
    }
    match below.last() {
        Some(last) => check.notes.push(format!(
            "{} negative coefficients below the bound, the last at n = {last}",
            below.len()
        )),
        None => check
            .notes
            .push("no negative coefficients below the bound".into()),
    }
    Ok(check.settle())
}

/// Compares `b_{t,2}` with `b_{t,3}` for `2 ≤ t ≤ t_max`, `n ≤ n_max`, and
/// cross-checks both series against enumeration for `n ≤ 40`.
pub fn run_bias23(t_max: u32, n_max: usize, cache: &SeriesCache) -> Result<TheoremCheck> {
    check_range(2, t_max)?;
    let mut check = TheoremCheck::new(TheoremId::Bias23, (2, t_max), (0, n_max));
    let enum_max = n_max.min(40);
    for t in 2..=t_max {
        let diff = cache.get(SeriesName::DiffBt2Bt3, t, n_max)?;
        check.witnesses.extend(negatives(&diff, t, 0));
        if t >= 3 && n_max >= 3 {
            check.expected.push((t, 3));
        }
        let b2 = cache.get(SeriesName::Bt2, t, n_max)?;
        let b3 = cache.get(SeriesName::Bt3Exact, t, n_max)?;
        for n in 0..=enum_max {
            let totals = hook_totals_enum(t, n)?;
            for (k, s) in [(2, &b2), (3, &b3)] {
                let counted = BigInt::from(totals.get(k).copied().unwrap_or(0));
                if &counted != s.coeff(n) {
                    check.mismatches.push(Mismatch {
                        t,
                        n,
                        k: Some(k as u32),
                        left: s.coeff(n).clone(),
                        right: counted,
                    });
                }
            }
        }
    }
    check.notes.push(format!(
        "series checked against enumeration for n <= {enum_max}"
    ));
    Ok(check.settle())
}

/// The stated exceptions and starting index for each sign theorem.
fn sign_theorem(name: SeriesName) -> Result<(TheoremId, usize, &'static [usize])> {
    match name {
        SeriesName::D => Ok((TheoremId::SignD, 0, &[6])),
        SeriesName::E => Ok((TheoremId::SignE, 4, &[9])),
        SeriesName::F => Ok((TheoremId::SignF, 0, &[5, 8, 11, 14])),
        other => Err(Error::Unsupported(format!(
            "no sign theorem for series {other}"
        ))),
    }
}

/// Finds every negative coefficient of `D`, `E` or `F` for `t` in range,
/// from the theorem's starting `n` up to `order`. All stated exceptions
/// have `t = 2`.
pub fn run_sign_check(
    name: SeriesName,
    t_min: u32,
    t_max: u32,
    order: usize,
    cache: &SeriesCache,
) -> Result<TheoremCheck> {
    check_range(t_min, t_max)?;
    let (which, n_min, exceptions) = sign_theorem(name)?;
    let mut check = TheoremCheck::new(which, (t_min, t_max), (n_min, order));
    if t_min == 2 {
        check.expected = exceptions
            .iter()
            .filter(|&&n| n >= n_min && n <= order)
            .map(|&n| (2, n))
            .collect();
    }
    for t in t_min..=t_max {
        let s = cache.get(name, t, order)?;
        check.witnesses.extend(negatives(&s, t, n_min));
        let early: Vec<String> = (0..n_min.min(order + 1))
            .filter(|&n| s.coeff(n).is_negative())
            .map(|n| format!("({t},{n})"))
            .collect();
        if !early.is_empty() {
            check.notes.push(format!(
                "also negative before n = {n_min}: {}",
                early.join(", ")
            ));
        }
    }
    Ok(check.settle())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// `-A + B + C = b_{t,2} - b_{t,1}`
    Abc,
    /// `D + E + F = b_{t,2} - b_{t,3}`, using the published `b_{t,3}`.
    Def,
}

fn first_difference(a: &Series, b: &Series) -> Option<usize> {
    (0..=a.order().min(b.order())).find(|&n| a.coeff(n) != b.coeff(n))
}

/// Checks a decomposition identity coefficient by coefficient.
pub fn run_identity(
    which: Identity,
    t_min: u32,
    t_max: u32,
    order: usize,
    cache: &SeriesCache,
) -> Result<TheoremCheck> {
    check_range(t_min, t_max)?;
    let id = match which {
        Identity::Abc => TheoremId::IdentityAbc,
        Identity::Def => TheoremId::IdentityDef,
    };
    let mut check = TheoremCheck::new(id, (t_min, t_max), (0, order));
    for t in t_min..=t_max {
        let get = |name| cache.get(name, t, order);
        let (lhs, rhs) = match which {
            Identity::Abc => (
                &(&*get(SeriesName::B)? + &*get(SeriesName::C)?) - &*get(SeriesName::A)?,
                &*get(SeriesName::Bt2)? - &*get(SeriesName::Bt1)?,
            ),
            Identity::Def => (
                &(&*get(SeriesName::D)? + &*get(SeriesName::E)?) + &*get(SeriesName::F)?,
                &*get(SeriesName::Bt2)? - &*get(SeriesName::Bt3)?,
            ),
        };
        for n in 0..=order {
            if lhs.coeff(n) != rhs.coeff(n) {
                check.mismatches.push(Mismatch {
                    t,
                    n,
                    k: None,
                    left: lhs.coeff(n).clone(),
                    right: rhs.coeff(n).clone(),
                });
            }
        }
        if which == Identity::Def {
            let exact = get(SeriesName::DiffBt2Bt3)?;
            if let Some(n) = first_difference(&lhs, &exact) {
                check.notes.push(format!(
                    "t = {t}: D+E+F departs from the enumerated b_{{t,2}} - b_{{t,3}} from n = {n}"
                ));
            }
        }
    }
    Ok(check.settle())
}

/// Which `b_{t,3}` series the oracle cross-check compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formulas {
    /// The three published formulas.
    Published,
    /// The published `b_{t,1}`, `b_{t,2}` and the corrected `b_{t,3}`.
    Exact,
}

/// Compares enumerated `b_{t,k}(n)` against generating-function
/// coefficients over the whole grid.
pub fn run_oracle_crosscheck(
    t_min: u32,
    t_max: u32,
    n_max: usize,
    ks: &[u32],
    formulas: Formulas,
    cache: &SeriesCache,
) -> Result<TheoremCheck> {
    check_range(t_min, t_max)?;
    let mut names = Vec::with_capacity(ks.len());
    for &k in ks {
        let name = match (k, formulas) {
            (1, _) => SeriesName::Bt1,
            (2, _) => SeriesName::Bt2,
            (3, Formulas::Published) => SeriesName::Bt3,
            (3, Formulas::Exact) => SeriesName::Bt3Exact,
            (0, _) => return Err(Error::InvalidHookLength(0)),
            _ => {
                return Err(Error::Unsupported(format!(
                    "no generating function for hook length {k}"
                )))
            }
        };
        names.push((k, name));
    }
    let mut check = TheoremCheck::new(TheoremId::OracleCrossCheck, (t_min, t_max), (0, n_max));
    for t in t_min..=t_max {
        let series: Vec<_> = names
            .iter()
            .map(|&(k, name)| cache.get(name, t, n_max).map(|s| (k, s)))
            .collect::<Result<_>>()?;
        for n in 0..=n_max {
            let totals = hook_totals_enum(t, n)?;
            for (k, s) in &series {
                let counted = BigInt::from(totals.get(*k as usize).copied().unwrap_or(0));
                if &counted != s.coeff(n) {
                    check.mismatches.push(Mismatch {
                        t,
                        n,
                        k: Some(*k),
                        left: s.coeff(n).clone(),
                        right: counted,
                    });
                }
            }
        }
    }
    check.notes.push(format!(
        "left = generating function ({}), right = enumeration",
        match formulas {
            Formulas::Published => "published formulas",
            Formulas::Exact => "corrected b_{t,3}",
        }
    ));
    Ok(check.settle())
}

/// Checks `2Q(n) ≤ Q(n-1) + Q(n+1)` for `n_min ≤ n ≤ n_max`. A witness
/// carries `Q(n-1) + Q(n+1) - 2Q(n)`.
pub fn run_q_concavity(n_min: usize, n_max: usize) -> Result<TheoremCheck> {
    if n_min == 0 {
        return Err(Error::Unsupported("n_min must be at least 1".into()));
    }
    let q = t_regular_gf(2, n_max + 1)?;
    let mut check = TheoremCheck::new(TheoremId::QConcavity, (2, 2), (n_min, n_max));
    for n in n_min..=n_max {
        let gap: BigInt = q.coeff(n - 1) + q.coeff(n + 1) - q.coeff(n) * 2;
        if gap.is_negative() {
            check.witnesses.push(Witness {
                t: 2,
                n,
                value: gap,
            });
        }
    }
    Ok(check.settle())
}

/// Negative coefficients of the `t = 2` remainder, expected at `n = 3`
/// and `n = 6` only.
pub fn run_remainder_t2(order: usize) -> Result<TheoremCheck> {
    let s = t2_remainder_series(order);
    let mut check = TheoremCheck::new(TheoremId::RemainderT2, (2, 2), (0, order));
    check.witnesses = negatives(&s, 2, 0).collect();
    check.expected = [3, 6]
        .into_iter()
        .filter(|&n| n <= order)
        .map(|n| (2, n))
        .collect();
    let shown: Vec<String> = [3, 6, 24, 27]
        .into_iter()
        .filter(|&n| n <= order)
        .map(|n| format!("q^{n}: {}", s.coeff(n)))
        .collect();
    if !shown.is_empty() {
        check.notes.push(shown.join(", "));
    }
    let zeros = (0..=order).filter(|&n| s.coeff(n).is_zero()).count();
    check
        .notes
        .push(format!("{zeros} zero coefficients up to order {order}"));
    Ok(check.settle())
}
