//! Generating functions for `b_{t,k}(n)` and the decomposition series built
//! from them, plus the diagram-walking oracle they are checked against.
//!
//! Every series here is a product of the `t`-regular prefactor
//! `(q^t;q^t)_∞/(q;q)_∞` (or the same with the `1 - q` factor removed from
//! the denominator) with a rational function whose denominator is a single
//! `1 - q^k`. Those denominators are applied with
//! [`Series::mul_geometric`]; the only true series inversion is the one
//! inside [`t_regular_gf`].
//!
//! [`btk_enum`] never touches this machinery: it enumerates partitions and
//! walks their diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::partition::{for_each_hook, t_regular_partitions};
use crate::qseries::{t_regular_gf, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    GeneratingFunction,
}

/// `b_{t,k}(n)` together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookCount {
    pub t: u32,
    pub k: u32,
    pub n: usize,
    #[serde(with = "bigint_string")]
    pub value: BigInt,
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeriesName {
    Bt1,
    Bt2,
    /// The published three-term formula for `b_{t,3}`. It is exact for
    /// `t ≥ 3` but overcounts at `t = 2` from `n = 6` on; use
    /// [`SeriesName::Bt3Exact`] for counts.
    Bt3,
    /// Generating function of `b_{t,3}(n)` valid for every `t ≥ 2`.
    Bt3Exact,
    A,
    B,
    C,
    D,
    E,
    F,
    DiffBt2Bt1,
    /// `b_{t,2}(n) - b_{t,3}(n)`, built from [`SeriesName::Bt3Exact`].
    DiffBt2Bt3,
}

impl SeriesName {
    pub const ALL: [SeriesName; 12] = [
        SeriesName::Bt1,
        SeriesName::Bt2,
        SeriesName::Bt3,
        SeriesName::Bt3Exact,
        SeriesName::A,
        SeriesName::B,
        SeriesName::C,
        SeriesName::D,
        SeriesName::E,
        SeriesName::F,
        SeriesName::DiffBt2Bt1,
        SeriesName::DiffBt2Bt3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::Bt1 => "bt1",
            SeriesName::Bt2 => "bt2",
            SeriesName::Bt3 => "bt3",
            SeriesName::Bt3Exact => "bt3-exact",
            SeriesName::A => "A",
            SeriesName::B => "B",
            SeriesName::C => "C",
            SeriesName::D => "D",
            SeriesName::E => "E",
            SeriesName::F => "F",
            SeriesName::DiffBt2Bt1 => "bt2-bt1",
            SeriesName::DiffBt2Bt3 => "bt2-bt3",
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown series name {s:?}")))
    }
}

/// A series tagged with the name and modulus it was built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSeries {
    name: SeriesName,
    t: u32,
    series: Series,
}

impl NamedSeries {
    pub fn name(&self) -> SeriesName {
        self.name
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn into_series(self) -> Series {
        self.series
    }
}

/// The two prefactors every named series is built from.
#[derive(Clone, Debug)]
pub struct Prefactors {
    t: u32,
    /// `(q^t;q^t)_∞ / (q;q)_∞`
    regular: Series,
    /// `(q^t;q^t)_∞ / (q^2;q)_∞`, the same without parts equal to 1.
    no_ones: Series,
}

impl Prefactors {
    pub fn new(t: u32, order: usize) -> Result<Self> {
        let regular = t_regular_gf(t, order)?;
        let no_ones = &regular * &Series::polynomial(&[(0, 1), (1, -1)], order);
        Ok(Self {
            t,
            regular,
            no_ones,
        })
    }

    pub fn order(&self) -> usize {
        self.regular.order()
    }

    pub fn regular(&self) -> &Series {
        &self.regular
    }

    pub fn no_ones(&self) -> &Series {
        &self.no_ones
    }

    fn poly(&self, terms: &[(usize, i64)]) -> Series {
        Series::polynomial(terms, self.order())
    }

    /// `base · (Π numerators) / (1 - q^k)`
    fn term(&self, base: &Series, numerators: &[&[(usize, i64)]], k: usize) -> Series {
        let mut acc = base.clone();
        for num in numerators {
            acc = &acc * &self.poly(num);
        }
        acc.mul_geometric(k).expect("denominator step is positive")
    }

    pub fn build(&self, name: SeriesName) -> Series {
        let t = self.t as usize;
        let p = &self.regular;
        let p2 = &self.no_ones;
        match name {
            SeriesName::Bt1 => &self.term(p, &[&[(1, 1)]], 1) - &self.term(p, &[&[(t, 1)]], t),
            SeriesName::Bt2 => {
                let s = &self.term(p, &[&[(2, 2)]], 2) - &self.term(p, &[&[(t, 1)]], t);
                &s + &self.term(p, &[&[(2 * t - 1, 1), (2 * t, -1), (2 * t + 1, 1)]], 2 * t)
            }
            SeriesName::Bt3 => self.bt3_published(),
            SeriesName::Bt3Exact if t == 2 => {
                // Odd parts only. A 3-hook sits on a part m ≥ 3 with m-2
                // absent (arm 2), on the second-to-last copy of a repeated
                // m ≥ 3 (arm 1, leg 1), or at the end of the third-from-last row
                // of a run of length ≥ 3 (leg 2).
                let s = &self.term(p, &[&[(3, 1)]], 2) - &self.term(p, &[&[(4, 1)]], 4);
                let s = &s + &self.term(p, &[&[(6, 1)]], 4);
                &s + &self.term(p, &[&[(3, 1)]], 6)
            }
            SeriesName::Bt3Exact => self.bt3_published(),
            SeriesName::A => self.term(p2, &[&[(1, 1)]], 2),
            SeriesName::B => self.term(p2, &[&[(2 * t - 1, 1)]], 2 * t),
            SeriesName::C => self.term(p, &[&[(2 * t + 1, 1)]], 2 * t),
            SeriesName::D => &self.s_set() - &self.a_set(),
            SeriesName::E => self.term(p2, &[&[(2, 1), (3, -1), (5, 1)]], 6),
            SeriesName::F => self.term(
                p,
                &[
                    &[(3 * t - 3, 1)],
                    &[(0, 1), (3, 1)],
                    &[(0, 1), (1, -1)],
                    &[(0, 1), (2, -1)],
                ],
                3 * t,
            ),
            SeriesName::DiffBt2Bt1 => &self.build(SeriesName::Bt2) - &self.build(SeriesName::Bt1),
            SeriesName::DiffBt2Bt3 => {
                &self.build(SeriesName::Bt2) - &self.build(SeriesName::Bt3Exact)
            }
        }
    }

    fn bt3_published(&self) -> Series {
        let t = self.t as usize;
        let p = &self.regular;
        let s = &self.term(p, &[&[(3, 3)]], 3) - &self.term(p, &[&[(t, 1)]], t);
        let s = &s + &self.term(p, &[&[(2 * t - 2, 1), (2 * t, -1), (2 * t + 2, 1)]], 2 * t);
        let tail = [
            (3 * t - 3, 1),
            (3 * t - 2, -1),
            (3 * t - 1, -1),
            (3 * t, 2),
            (3 * t + 1, -1),
            (3 * t + 2, -1),
            (3 * t + 3, 1),
        ];
        &s - &self.term(p, &[&tail], 3 * t)
    }

    fn s_set(&self) -> Series {
        self.term(&self.no_ones, &[&[(2, 1), (4, 1)]], 6)
    }

    fn a_set(&self) -> Series {
        let t = self.t as usize;
        self.term(
            &self.regular,
            &[&[(2 * t - 2, 1)], &[(0, 1), (1, -1)], &[(0, 1), (3, -1)]],
            2 * t,
        )
    }

    pub fn set_series(&self, set: SetId) -> Result<Series> {
        let p2 = &self.no_ones;
        Ok(match set {
            SetId::O => self.build(SeriesName::A),
            SetId::R => self.build(SeriesName::C),
            SetId::S => self.s_set(),
            SetId::A => self.a_set(),
            SetId::B => self.term(p2, &[&[(2, 1), (5, 1)]], 6),
            SetId::C => self.term(p2, &[&[(3, 1)]], 6),
            SetId::D1 | SetId::D2 if self.t != 2 => {
                return Err(Error::Unsupported(format!(
                    "{set:?} is only defined for t = 2, got t = {}",
                    self.t
                )))
            }
            SetId::D1 => self.term(p2, &[&[(4, 1)]], 12),
            SetId::D2 => self.term(p2, &[&[(6, 1)]], 12),
        })
    }
}

/// Partition families with a known counting series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetId {
    /// `t`-regular, `f(1)` odd.
    O,
    /// No part `kt` except `2t`; `2t+1` present.
    R,
    /// `t`-regular, `f(1) ≡ 2, 4 (mod 6)`.
    S,
    /// `t`-regular, `f(3) = 0`, `f(1) ≡ -2 (mod 2t)`. Counted correctly
    /// only when 3 is an allowed part, i.e. `t ≠ 3`.
    A,
    /// `t`-regular, `f(1) ≡ 2, 5 (mod 6)`.
    B,
    /// `t`-regular, `f(1) ≡ 3 (mod 6)`.
    C,
    /// 2-regular, `f(1) ≡ 4 (mod 12)`.
    D1,
    /// 2-regular, `f(1) ≡ 6 (mod 12)`.
    D2,
}

pub fn named_series(name: SeriesName, t: u32, order: usize) -> Result<NamedSeries> {
    let factors = Prefactors::new(t, order)?;
    Ok(NamedSeries {
        name,
        t,
        series: factors.build(name),
    })
}

pub fn bt1_series(t: u32, order: usize) -> Result<NamedSeries> {
    named_series(SeriesName::Bt1, t, order)
}

pub fn bt2_series(t: u32, order: usize) -> Result<NamedSeries> {
    named_series(SeriesName::Bt2, t, order)
}

/// The published formula; see [`SeriesName::Bt3`].
pub fn bt3_series(t: u32, order: usize) -> Result<NamedSeries> {
    named_series(SeriesName::Bt3, t, order)
}

pub fn bt3_exact_series(t: u32, order: usize) -> Result<NamedSeries> {
    named_series(SeriesName::Bt3Exact, t, order)
}

/// One of the decomposition series `A` through `F`.
pub fn decomposition_series(name: SeriesName, t: u32, order: usize) -> Result<NamedSeries> {
    match name {
        SeriesName::A
        | SeriesName::B
        | SeriesName::C
        | SeriesName::D
        | SeriesName::E
        | SeriesName::F => named_series(name, t, order),
        other => Err(Error::Unsupported(format!(
            "{other} is not a decomposition series"
        ))),
    }
}

pub fn set_cardinality_series(set: SetId, t: u32, order: usize) -> Result<Series> {
    Prefactors::new(t, order)?.set_series(set)
}

/// `(q^2-q^3)(1-q)(q^2;q^2)_∞/(q;q)_∞`, the `t = 2` remainder whose
/// negative coefficients sit at `n = 3` and `n = 6` only.
pub fn t2_remainder_series(order: usize) -> Series {
    let p = t_regular_gf(2, order).expect("t = 2 is valid");
    let num = Series::polynomial(&[(2, 1), (3, -1)], order);
    let one_minus_q = Series::polynomial(&[(0, 1), (1, -1)], order);
    &(&p * &num) * &one_minus_q
}

/// `(q^3;q^3)_∞/(q^2;q)_∞ · (q^2+q^7)/(1-q^6)`, the closed form of `D` at
/// `t = 3`.
pub fn d_closed_form_t3(order: usize) -> Series {
    let f = Prefactors::new(3, order).expect("t = 3 is valid");
    f.term(&f.no_ones, &[&[(2, 1), (7, 1)]], 6)
}

/// `Q(n)`, the number of partitions of `n` into distinct parts, read off
/// the 2-regular generating function.
pub fn distinct_partition_count(n: usize) -> BigInt {
    t_regular_gf(2, n).expect("t = 2 is valid").coeff(n).clone()
}

/// `Σ_λ (cells of λ with hook length h)` over `t`-regular `λ ⊢ n`, indexed
/// by `h` in `0..=n` (index 0 is always zero).
pub fn hook_totals_enum(t: u32, n: usize) -> Result<Vec<u64>> {
    let mut totals = vec![0u64; n + 1];
    let mut stream = t_regular_partitions(n, t)?;
    while let Some(rows) = stream.next_parts() {
        for_each_hook(rows, |h| totals[h as usize] += 1);
    }
    Ok(totals)
}

/// `b_{t,k}(n)` by walking the diagram of every `t`-regular partition of
/// `n`. Any `k ≥ 1` is accepted.
pub fn btk_enum(t: u32, k: u32, n: usize) -> Result<HookCount> {
    check_modulus(t)?;
    if k < 1 {
        return Err(Error::InvalidHookLength(k));
    }
    let totals = hook_totals_enum(t, n)?;
    Ok(HookCount {
        t,
        k,
        n,
        value: BigInt::from(totals.get(k as usize).copied().unwrap_or(0)),
        method: Method::Enumeration,
    })
}

/// Series name holding `b_{t,k}` for `k ∈ {1, 2, 3}`.
pub fn series_for_hook_length(k: u32) -> Result<SeriesName> {
    match k {
        1 => Ok(SeriesName::Bt1),
        2 => Ok(SeriesName::Bt2),
        3 => Ok(SeriesName::Bt3Exact),
        0 => Err(Error::InvalidHookLength(0)),
        _ => Err(Error::Unsupported(format!(
            "no generating function for hook length {k}; use enumeration"
        ))),
    }
}

/// `b_{t,k}(n)` as the `q^n` coefficient of its generating function.
pub fn btk_gf(t: u32, k: u32, n: usize) -> Result<HookCount> {
    let name = series_for_hook_length(k)?;
    let s = named_series(name, t, n)?;
    Ok(HookCount {
        t,
        k,
        n,
        value: s.series().coeff(n).clone(),
        method: Method::GeneratingFunction,
    })
}

type CacheKey = (SeriesName, u32, usize);

/// Memoizes named series per `(name, t, order)` and prefactors per
/// `(t, order)`. Lookups and inserts go through a mutex, so one cache can be
/// shared across threads; a series is built outside the lock and the first
/// insert wins.
#[derive(Default)]
pub struct SeriesCache {
    prefactors: Mutex<HashMap<(u32, usize), Arc<Prefactors>>>,
    series: Mutex<HashMap<CacheKey, Arc<Series>>>,
}

impl SeriesCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn prefactors(&self, t: u32, order: usize) -> Result<Arc<Prefactors>> {
        if let Some(hit) = self.prefactors.lock().unwrap().get(&(t, order)) {
            return Ok(hit.clone());
        }
        let built = Arc::new(Prefactors::new(t, order)?);
        Ok(self
            .prefactors
            .lock()
            .unwrap()
            .entry((t, order))
            .or_insert(built)
            .clone())
    }

    pub fn get(&self, name: SeriesName, t: u32, order: usize) -> Result<Arc<Series>> {
        let key = (name, t, order);
        if let Some(hit) = self.series.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        log::info!("building {name} t={t} to order {order}");
        let built = Arc::new(self.prefactors(t, order)?.build(name));
        Ok(self
            .series
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(built)
            .clone())
    }

    pub fn len(&self) -> usize {
        self.series.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
