//! Multiplicative Möbius inversion of exponent spectra.
//!
//! The revolved spectrum of a group is `r(n) = ∏_{d|n} e(n/d)^{μ(d)}`, a
//! positive rational per divisor of the exponent and `1` everywhere else.
//! Unlike the exponent spectrum itself it is multiplicative across direct
//! products, so taking prime valuations turns products of groups into sums
//! of sparse integer vectors — the raw material for the linear search.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::factored::FactoredValue;
use crate::spectra::ExponentSpectrum;

/// `n ↦ r(n)` on the divisors of the exponent, in factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevolvedSpectrum {
    exponent: u64,
    values: BTreeMap<u64, FactoredValue>,
}

impl RevolvedSpectrum {
    pub fn from_exponent_spectrum(spectrum: &ExponentSpectrum) -> Self {
        let exponent = spectrum.exponent();
        let values = arith::divisors(exponent)
            .into_iter()
            .map(|n| (n, revolved_value_at(spectrum, n)))
            .collect();
        RevolvedSpectrum { exponent, values }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn values(&self) -> &BTreeMap<u64, FactoredValue> {
        &self.values
    }

    /// `r(n)`, which is `1` whenever `n` does not divide the exponent.
    pub fn value_at(&self, n: u64) -> FactoredValue {
        self.values.get(&n).cloned().unwrap_or_else(FactoredValue::one)
    }
}

/// Evaluates the inversion product `∏_{d|n} e(n/d)^{μ(d)}` at any `n`,
/// resolving the spectrum through gcd evaluation. Off the divisors of the
/// exponent this collapses to `1`.
pub fn revolved_value_at(spectrum: &ExponentSpectrum, n: u64) -> FactoredValue {
    let mut out = FactoredValue::one();
    for d in arith::divisors(n) {
        let mu = arith::mobius(d);
        if mu != 0 {
            out.mul_pow_assign(&FactoredValue::from_integer(spectrum.eval(n / d)), mu);
        }
    }
    out
}

/// Sparse map `(n, p) ↦` exponent of the prime `p` in `r(n)`; only nonzero
/// entries are stored. Additive under direct products.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValuationVector {
    entries: BTreeMap<(u64, u64), i64>,
}

impl ValuationVector {
    pub fn from_revolved(revolved: &RevolvedSpectrum) -> Self {
        let mut entries = BTreeMap::new();
        for (&n, value) in revolved.values() {
            for (p, k) in value.factors() {
                entries.insert((n, p), k);
            }
        }
        ValuationVector { entries }
    }

    pub fn of_spectrum(spectrum: &ExponentSpectrum) -> Self {
        Self::from_revolved(&RevolvedSpectrum::from_exponent_spectrum(spectrum))
    }

    pub fn from_entries(
        entries: impl IntoIterator<Item = ((u64, u64), i64)>,
    ) -> Self {
        let mut out = ValuationVector::default();
        for ((n, p), k) in entries {
            out.add_entry(n, p, k);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted lexicographically by `(n, p)`.
    pub fn entries(&self) -> &BTreeMap<(u64, u64), i64> {
        &self.entries
    }

    pub fn get(&self, n: u64, p: u64) -> i64 {
        self.entries.get(&(n, p)).copied().unwrap_or(0)
    }

    pub fn add_entry(&mut self, n: u64, p: u64, k: i64) {
        if k == 0 {
            return;
        }
        let slot = self.entries.entry((n, p)).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.entries.remove(&(n, p));
        }
    }

    /// `self += k · other`, the linear structure underlying direct products.
    pub fn add_scaled(&mut self, other: &ValuationVector, k: i64) {
        for (&(n, p), &v) in other.entries() {
            self.add_entry(n, p, v * k);
        }
    }
}

impl Serialize for ValuationVector {
    /// Serializes as a sorted array of `[n, p, k]` triples.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|(&(n, p), &k)| (n, p, k)))
    }
}

impl<'de> Deserialize<'de> for ValuationVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let triples = Vec::<(u64, u64, i64)>::deserialize(deserializer)?;
        let mut out = ValuationVector::default();
        for (n, p, k) in triples {
            if arith::factorize(p) != vec![(p, 1)] {
                return Err(D::Error::custom(format!("{p} is not prime")));
            }
            out.add_entry(n, p, k);
        }
        Ok(out)
    }
}
