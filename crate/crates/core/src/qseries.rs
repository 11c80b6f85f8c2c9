//! Truncated formal power series with exact big-integer coefficients.
//!
//! A [`Series`] of order `N` holds the coefficients of `q^0 ..= q^N`.
//! Binary operations on series of different orders truncate to the
//! smaller order. Everything is exact; there is no floating point here.

use std::io::{self, Write};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_modulus, Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c·q^e`, or zero when `e` exceeds the order.
    pub fn monomial(c: i64, e: usize, order: usize) -> Self {
        Self::polynomial(&[(e, c)], order)
    }

    /// Sum of `c·q^e` over `terms`; exponents past the order are dropped.
    pub fn polynomial(terms: &[(usize, i64)], order: usize) -> Self {
        let mut s = Self::zero(order);
        for &(e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// Wraps coefficients `c_0 ..= c_N`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Series {
        let mut out = Series::zero(self.order());
        for (i, c) in self
            .coeffs
            .iter()
            .enumerate()
            .take(self.coeffs.len().saturating_sub(k))
        {
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: i64) -> Series {
        let c = BigInt::from(c);
        Series {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiplies by `1/(1 - q^k)`, i.e. by [`geometric`]`(k)`, in linear
    /// time via the running sum `c_i += c_{i-k}`.
    pub fn mul_geometric(&self, k: usize) -> Result<Series> {
        if k == 0 {
            return Err(Error::NonPositive {
                what: "geometric step",
                got: 0,
            });
        }
        let mut out = self.clone();
        for i in k..out.coeffs.len() {
            let (lo, hi) = out.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
        Ok(out)
    }

    /// Multiplies by the single factor `1 - q^e` in place.
    fn mul_one_minus(&mut self, e: usize) {
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
    }

    /// Exact quotient `self / divisor`. The divisor's constant term must be
    /// `±1`, which keeps every coefficient integral.
    pub fn div_unit(&self, divisor: &Series) -> Result<Series> {
        let lead = divisor.coeff(0);
        if !(lead.is_one() || (-lead).is_one()) {
            return Err(Error::NonUnitConstant(lead.to_string()));
        }
        let negate = lead.is_negative();
        let order = self.order().min(divisor.order());
        let support: Vec<usize> = (1..=order)
            .filter(|&j| !divisor.coeffs[j].is_zero())
            .collect();
        let mut quot = Series::zero(order);
        for i in 0..=order {
            let mut acc = self.coeffs[i].clone();
            for &j in support.iter().take_while(|&&j| j <= i) {
                acc -= &divisor.coeffs[j] * &quot.coeffs[i - j];
            }
            quot.coeffs[i] = if negate { -acc } else { acc };
        }
        Ok(quot)
    }

    /// Indices with a strictly negative coefficient.
    pub fn negative_indices(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, _)| i)
            .collect()
    }

    /// Writes a `n,coefficient` header followed by one row per coefficient.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "n,coefficient")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(out, "{n},{c}")?;
        }
        Ok(())
    }
}

impl Add<&Series> for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;

    /// Schoolbook Cauchy product truncated at the smaller order. Zero
    /// coefficients are skipped, so sparse factors such as q-Pochhammer
    /// truncations multiply in near-linear time.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let rhs_support: Vec<usize> = (0..=order).filter(|&j| !rhs.coeffs[j].is_zero()).collect();
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &j in rhs_support.iter().take_while(|&&j| i + j <= order) {
                out.coeffs[i + j] += a * &rhs.coeffs[j];
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

/// `1/(1 - q^k) = Σ_j q^{jk}` truncated at `order`.
pub fn geometric(k: u32, order: usize) -> Result<Series> {
    if k < 1 {
        return Err(Error::NonPositive {
            what: "geometric step",
            got: k,
        });
    }
    let mut s = Series::zero(order);
    for i in (0..=order).step_by(k as usize) {
        s.coeffs[i] = BigInt::one();
    }
    Ok(s)
}

/// `(q^a; q^b)_∞ = Π_{i≥0} (1 - q^{a+ib})` truncated at `order`. Factors
/// whose exponent exceeds the order contribute nothing and are skipped.
pub fn pochhammer_inf(a: u32, b: u32, order: usize) -> Result<Series> {
    if a < 1 {
        return Err(Error::NonPositive {
            what: "start",
            got: a,
        });
    }
    if b < 1 {
        return Err(Error::NonPositive {
            what: "step",
            got: b,
        });
    }
    let mut s = Series::one(order);
    let mut e = a as usize;
    while e <= order {
        s.mul_one_minus(e);
        e += b as usize;
    }
    Ok(s)
}

/// `(q^t; q^t)_∞ / (q; q)_∞`, whose `q^n` coefficient is the number of
/// `t`-regular partitions of `n`.
pub fn t_regular_gf(t: u32, order: usize) -> Result<Series> {
    check_modulus(t)?;
    pochhammer_inf(t, t, order)?.div_unit(&pochhammer_inf(1, 1, order)?)
}
