//! Integer partitions in frequency form, their enumeration, and hook lengths.
//!
//! A [`Partition`] stores `f(k)`, the multiplicity of each part `k`, rather
//! than a list of parts. Every map on partitions used elsewhere in the crate
//! is phrased in terms of multiplicities, and the multiset operations
//! [`Partition::union`] and [`Partition::difference`] are the building blocks
//! for all of them.
//!
//! Text form is descending with a caret for multiplicity, e.g.
//! `6,5^2,2^4,1^5`. The empty partition prints as `()`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_modulus, Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    freq: BTreeMap<u32, u32>,
    weight: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let mut p = Self::empty();
        for &part in parts {
            p.add(part, 1)?;
        }
        Ok(p)
    }

    /// Builds a partition from `(part, multiplicity)` pairs. Pairs with
    /// multiplicity zero are skipped; repeated parts accumulate.
    pub fn from_freq<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut p = Self::empty();
        for (part, mult) in pairs {
            p.add(part, mult)?;
        }
        Ok(p)
    }

    fn add(&mut self, part: u32, mult: u32) -> Result<()> {
        if part == 0 {
            return Err(Error::NonPositive {
                what: "part",
                got: 0,
            });
        }
        if mult > 0 {
            *self.freq.entry(part).or_insert(0) += mult;
            self.weight += part as usize * mult as usize;
        }
        Ok(())
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `ℓ(λ)`, the number of parts counted with multiplicity.
    pub fn len(&self) -> usize {
        self.freq.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// `λ₁`, or `None` for the empty partition.
    pub fn largest(&self) -> Option<u32> {
        self.freq.keys().next_back().copied()
    }

    /// The second part `λ₂` counted with multiplicity.
    pub fn second(&self) -> Option<u32> {
        self.parts().nth(1)
    }

    /// `f_λ(k)`; zero when `k` is not a part.
    pub fn frequency(&self, k: u32) -> u32 {
        self.freq.get(&k).copied().unwrap_or(0)
    }

    pub fn contains(&self, k: u32) -> bool {
        self.freq.contains_key(&k)
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn freq_desc(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.freq.iter().rev().map(|(&p, &m)| (p, m))
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.freq.keys().rev().copied()
    }

    /// All parts with repetition, in non-increasing order.
    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.freq_desc()
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.parts().collect()
    }

    pub fn is_t_regular(&self, t: u32) -> bool {
        self.freq.keys().all(|&p| p % t != 0)
    }

    /// `λ ∪ μ`: multiplicities add.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut freq = self.freq.clone();
        for (&p, &m) in &other.freq {
            *freq.entry(p).or_insert(0) += m;
        }
        Partition {
            freq,
            weight: self.weight + other.weight,
        }
    }

    /// `λ ∖ μ`: multiplicities subtract. Fails unless `f_μ(k) ≤ f_λ(k)` for
    /// every `k`.
    pub fn difference(&self, other: &Partition) -> Result<Partition> {
        let mut freq = self.freq.clone();
        for (&p, &m) in &other.freq {
            match freq.get_mut(&p) {
                Some(have) if *have > m => *have -= m,
                Some(have) if *have == m => {
                    freq.remove(&p);
                }
                _ => {
                    return Err(Error::NotSubmultiset {
                        whole: self.clone(),
                        sub: other.clone(),
                    })
                }
            }
        }
        Ok(Partition {
            freq,
            weight: self.weight - other.weight,
        })
    }

    /// `self ∖ remove ∪ insert`, the shape of every map on partitions here.
    pub fn replace(&self, remove: &Partition, insert: &Partition) -> Result<Partition> {
        Ok(self.difference(remove)?.union(insert))
    }

    pub fn hook_multiset(&self) -> HookMultiset {
        let mut counts = BTreeMap::new();
        for_each_hook(&self.to_vec(), |h| *counts.entry(h).or_insert(0) += 1);
        HookMultiset { counts }
    }

    /// Number of cells whose hook length is exactly `k`.
    pub fn count_hooks(&self, k: u32) -> Result<usize> {
        if k < 1 {
            return Err(Error::InvalidHookLength(k));
        }
        Ok(self.hook_multiset().count(k))
    }
}

impl Ord for Partition {
    /// Lexicographic on the non-increasing part sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts().cmp(other.parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, (p, m)) in self.freq_desc().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() || body == "∅" {
            return Ok(Partition::empty());
        }
        let mut p = Partition::empty();
        for token in body.split(',') {
            let token = token.trim();
            let (part, mult) = match token.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (token, "1"),
            };
            let part: u32 = part
                .parse()
                .map_err(|_| err("part is not a positive integer"))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| err("multiplicity is not a positive integer"))?;
            if part == 0 {
                return Err(err("parts must be positive"));
            }
            if mult == 0 {
                return Err(err("multiplicities must be positive"));
            }
            p.add(part, mult)?;
        }
        Ok(p)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiset of hook lengths of a Young diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HookMultiset {
    counts: BTreeMap<u32, usize>,
}

impl HookMultiset {
    pub fn count(&self, hook: u32) -> usize {
        self.counts.get(&hook).copied().unwrap_or(0)
    }

    /// Number of cells, which equals the weight of the source partition.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// `(hook length, cells)` pairs, longest hook first.
    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().rev().map(|(&h, &c)| (h, c))
    }
}

/// Calls `visit` with the hook length of every cell of the diagram whose
/// rows are `rows` (non-increasing). Uses row lengths and column heights
/// only; the diagram itself is never built.
pub fn for_each_hook(rows: &[u32], mut visit: impl FnMut(u32)) {
    let Some(&width) = rows.first() else { return };
    let mut heights = vec![0u32; width as usize];
    for &r in rows {
        for h in &mut heights[..r as usize] {
            *h += 1;
        }
    }
    for (i, &r) in rows.iter().enumerate() {
        for (j, &height) in heights[..r as usize].iter().enumerate() {
            let arm = r - j as u32 - 1;
            let leg = height - i as u32 - 1;
            visit(arm + leg + 1);
        }
    }
}

/// Streams the partitions of `n` whose parts all pass a filter, in
/// descending lexicographic order: `(n)` first, `(1^n)` last among the
/// unrestricted ones. The current partition is kept as a part stack that
/// is edited in place, so memory stays `O(n)`.
pub struct Partitions {
    allowed: Vec<u32>,
    parts: Vec<u32>,
    slots: Vec<usize>,
    remaining: usize,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(n: usize, filter: impl Fn(u32) -> bool) -> Self {
        let top = u32::try_from(n).expect("partition weight exceeds u32");
        Self {
            allowed: (1..=top).rev().filter(|&p| filter(p)).collect(),
            parts: Vec::new(),
            slots: Vec::new(),
            remaining: n,
            started: false,
            done: false,
        }
    }

    /// Greedily completes the stack with the largest admissible parts,
    /// starting at slot `from`. Returns false on a dead end.
    fn fill(&mut self, mut from: usize) -> bool {
        while self.remaining > 0 {
            let Some(offset) = self.allowed[from..]
                .iter()
                .position(|&p| p as usize <= self.remaining)
            else {
                return false;
            };
            from += offset;
            self.push(from);
        }
        true
    }

    fn push(&mut self, slot: usize) {
        let part = self.allowed[slot];
        self.parts.push(part);
        self.slots.push(slot);
        self.remaining -= part as usize;
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            if self.fill(0) {
                return true;
            }
        }
        while let Some(slot) = self.slots.pop() {
            let part = self.parts.pop().unwrap();
            self.remaining += part as usize;
            let next = slot + 1;
            if next < self.allowed.len() {
                self.push(next);
                if self.fill(next) {
                    return true;
                }
            }
        }
        false
    }

    /// Advances and lends the parts of the next partition without
    /// allocating.
    pub fn next_parts(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(&self.parts)
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.next_parts()?;
        Some(Partition::from_parts(parts).expect("enumerated parts are positive"))
    }
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions::new(n, |_| true)
}

/// Partitions of `n` with every part satisfying `filter`.
pub fn partitions_with(n: usize, filter: impl Fn(u32) -> bool) -> Partitions {
    Partitions::new(n, filter)
}

/// Partitions of `n` with no part divisible by `t`.
pub fn t_regular_partitions(n: usize, t: u32) -> Result<Partitions> {
    check_modulus(t)?;
    Ok(Partitions::new(n, move |p| p % t != 0))
}
