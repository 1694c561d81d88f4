//! Order spectra, exponent spectra, and Möbius inversion between them.
//!
//! For a finite group `G`, the order spectrum sends `n` to the number of
//! elements of order exactly `n`, and the exponent spectrum sends `n` to the
//! number of solutions of `g^n = 1`. They determine each other through
//! divisor sums: `e(n) = Σ_{d|n} o(d)` and `o(n) = Σ_{d|n} μ(d)·e(n/d)`.
//! An exponent spectrum is stored only on the divisors of the group exponent
//! `E`; every other argument evaluates through `e(n) = e(gcd(n, E))`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith;
use crate::factored::FactoredValue;
use crate::group::FiniteGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("an order spectrum needs exactly one element of order 1, found {count}")]
    BadIdentityCount { count: u64 },
    #[error("exponent spectrum must be defined exactly on the divisors of {exponent}")]
    BadSupport { exponent: u64 },
    #[error("exponent spectrum must have e(1) = 1, found {value}")]
    BadUnit { value: u64 },
    #[error("exponent spectrum must be monotone under divisibility: e({small}) > e({large})")]
    NotMonotone { small: u64, large: u64 },
    #[error("Möbius inversion produced the negative count {value} at n = {n}")]
    NegativeCount { n: u64, value: i64 },
}

/// Map `n ↦` number of elements of order exactly `n`; zero counts omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    /// Counts element orders over the whole group.
    pub fn of_group(group: &FiniteGroup) -> Self {
        let mut counts = BTreeMap::new();
        for e in group.elements() {
            *counts.entry(e.order()).or_insert(0) += 1;
        }
        OrderSpectrum { counts }
    }

    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Result<Self, SpectraError> {
        let ones = counts.get(&1).copied().unwrap_or(0);
        if ones != 1 {
            return Err(SpectraError::BadIdentityCount { count: ones });
        }
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        Ok(OrderSpectrum { counts })
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, n: u64) -> u64 {
        self.counts.get(&n).copied().unwrap_or(0)
    }

    /// Total number of elements counted, i.e. the group order.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Lcm of the occurring orders, i.e. the group exponent.
    pub fn exponent(&self) -> u64 {
        self.counts.keys().fold(1, |acc, &n| arith::lcm(acc, n))
    }
}

/// Map `n ↦` number of solutions of `g^n = 1`, stored on divisors of the
/// group exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSpectrum {
    exponent: u64,
    values: BTreeMap<u64, u64>,
}

impl ExponentSpectrum {
    /// Divisor-sums an order spectrum: `e(n) = Σ_{d|n} o(d)`.
    pub fn from_order_spectrum(orders: &OrderSpectrum) -> Self {
        let exponent = orders.exponent();
        let values = arith::divisors(exponent)
            .into_iter()
            .map(|n| {
                let e = orders
                    .counts()
                    .iter()
                    .filter(|&(&d, _)| n % d == 0)
                    .map(|(_, &c)| c)
                    .sum();
                (n, e)
            })
            .collect();
        ExponentSpectrum { exponent, values }
    }

    pub fn of_group(group: &FiniteGroup) -> Self {
        Self::from_order_spectrum(&OrderSpectrum::of_group(group))
    }

    /// Builds a spectrum from raw values, checking support, `e(1) = 1`, and
    /// monotonicity under divisibility.
    pub fn from_parts(exponent: u64, values: BTreeMap<u64, u64>) -> Result<Self, SpectraError> {
        let divisors = arith::divisors(exponent);
        if values.len() != divisors.len() || !divisors.iter().all(|d| values.contains_key(d)) {
            return Err(SpectraError::BadSupport { exponent });
        }
        if values[&1] != 1 {
            return Err(SpectraError::BadUnit { value: values[&1] });
        }
        for &n in &divisors {
            for &m in &divisors {
                if m % n == 0 && values[&n] > values[&m] {
                    return Err(SpectraError::NotMonotone { small: n, large: m });
                }
            }
        }
        Ok(ExponentSpectrum { exponent, values })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Values on the divisors of the exponent.
    pub fn values(&self) -> &BTreeMap<u64, u64> {
        &self.values
    }

    /// Evaluation at arbitrary `n` through `e(n) = e(gcd(n, E))`.
    pub fn eval(&self, n: u64) -> u64 {
        self.values[&arith::gcd(n, self.exponent)]
    }

    /// Möbius inversion back to an order spectrum:
    /// `o(n) = Σ_{d|n} μ(d)·e(n/d)`. A negative count means the input was
    /// not the exponent spectrum of any group.
    pub fn order_spectrum(&self) -> Result<OrderSpectrum, SpectraError> {
        let mut counts = BTreeMap::new();
        for &n in self.values.keys() {
            let mut count: i64 = 0;
            for d in arith::divisors(n) {
                let mu = arith::mobius(d);
                if mu != 0 {
                    count += mu * self.values[&(n / d)] as i64;
                }
            }
            if count < 0 {
                return Err(SpectraError::NegativeCount { n, value: count });
            }
            if count > 0 {
                counts.insert(n, count as u64);
            }
        }
        OrderSpectrum::from_counts(counts)
    }
}

/// Group exponent: lcm of all element orders.
pub fn group_exponent(group: &FiniteGroup) -> u64 {
    group
        .elements()
        .iter()
        .fold(1, |acc, e| arith::lcm(acc, e.order()))
}

/// The pointwise product `∏_i e_i(gcd(n, E_i))^{k_i}` at a single `n` — the
/// number of solutions of `g^n = 1` in the direct product of group powers,
/// in factored form.
pub fn spectrum_product_value(entries: &[(&ExponentSpectrum, u64)], n: u64) -> FactoredValue {
    let mut value = FactoredValue::one();
    for &(spectrum, multiplicity) in entries {
        value.mul_pow_assign(
            &FactoredValue::from_integer(spectrum.eval(n)),
            multiplicity as i64,
        );
    }
    value
}

/// Pointwise product of exponent spectra across direct powers, tabulated on
/// every divisor of the joint exponent (the lcm of the entry exponents).
pub fn spectrum_power_product(
    entries: &[(&ExponentSpectrum, u64)],
) -> BTreeMap<u64, FactoredValue> {
    let joint = entries
        .iter()
        .fold(1, |acc, (e, _)| arith::lcm(acc, e.exponent()));
    arith::divisors(joint)
        .into_iter()
        .map(|n| (n, spectrum_product_value(entries, n)))
        .collect()
}
