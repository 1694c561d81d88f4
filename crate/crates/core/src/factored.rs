//! Positive rationals kept in fully factored form.
//!
//! Products of exponent spectra across direct powers reach sizes like
//! `2^365·3^105·7^104`, so values are never expanded: a [`FactoredValue`] is
//! the map `prime → signed exponent` and all arithmetic is exponent
//! bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;

/// A positive rational `∏ p^{k_p}` with `k_p ∈ ℤ \ {0}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FactoredValue {
    factors: BTreeMap<u64, i64>,
}

impl FactoredValue {
    pub fn one() -> Self {
        FactoredValue::default()
    }

    /// Factors a positive integer.
    pub fn from_integer(n: u64) -> Self {
        assert!(n >= 1, "factored values are positive");
        FactoredValue {
            factors: arith::factorize(n)
                .into_iter()
                .map(|(p, e)| (p, i64::from(e)))
                .collect(),
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut out = FactoredValue::one();
        for (p, k) in factors {
            out.mul_prime_power(p, k);
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// True when every exponent is non-negative, i.e. the value is an integer.
    pub fn is_integral(&self) -> bool {
        self.factors.values().all(|&k| k >= 0)
    }

    pub fn exponent_of(&self, p: u64) -> i64 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&p, &k)| (p, k))
    }

    pub fn mul_prime_power(&mut self, p: u64, k: i64) {
        if k == 0 {
            return;
        }
        let entry = self.factors.entry(p).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.factors.remove(&p);
        }
    }

    /// `self *= other^k`.
    pub fn mul_pow_assign(&mut self, other: &FactoredValue, k: i64) {
        for (p, e) in other.factors() {
            self.mul_prime_power(p, e * k);
        }
    }

    pub fn mul(&self, other: &FactoredValue) -> FactoredValue {
        let mut out = self.clone();
        out.mul_pow_assign(other, 1);
        out
    }

    pub fn pow(&self, k: i64) -> FactoredValue {
        let mut out = FactoredValue::one();
        out.mul_pow_assign(self, k);
        out
    }

    pub fn inverse(&self) -> FactoredValue {
        self.pow(-1)
    }

    /// Expands back to an integer when the value is a small one.
    pub fn to_integer(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for (p, k) in self.factors() {
            if k < 0 {
                return None;
            }
            for _ in 0..k {
                acc = acc.checked_mul(p)?;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for FactoredValue {
    /// `1` for the empty product, otherwise `p^k` terms joined by `·`,
    /// e.g. `2^365·3^105·7^104`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, k) in self.factors() {
            if !first {
                write!(f, "·")?;
            }
            write!(f, "{p}^{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FactoredValue {
    /// Serializes as a sorted array of `[prime, exponent]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.factors())
    }
}

impl<'de> Deserialize<'de> for FactoredValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(u64, i64)>::deserialize(deserializer)?;
        for &(p, _) in &pairs {
            if arith::factorize(p) != vec![(p, 1)] {
                return Err(D::Error::custom(format!("{p} is not prime")));
            }
        }
        Ok(FactoredValue::from_factors(pairs))
    }
}
