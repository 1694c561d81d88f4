//! Multiplicity certificates and their verification.
//!
//! A certificate claims that two disjoint multisets of catalog groups have
//! equal exponent-type products, with every group on side A solvable and at
//! least one group on side B not. Verification recomputes both products from
//! scratch through `spectrum_power_product` — deliberately bypassing the
//! revolved/valuation machinery that produced the certificate — and checks
//! the solvability claims on freshly enumerated groups.

use num::{BigInt, BigRational, Integer, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::solve::SolutionSpace;
use crate::arith;
use crate::catalog::{build_group_capped, Catalog, GroupId};
use crate::factored::FactoredValue;
use crate::group::GroupError;
use crate::spectra::{spectrum_product_value, ExponentSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub id: GroupId,
    pub mult: u64,
}

/// Two multisets of groups claimed to share an exponent-type product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityCertificate {
    pub side_a: Vec<CertificateEntry>,
    pub side_b: Vec<CertificateEntry>,
    pub verified: bool,
    pub joint_exponent: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("solution is identically zero but the target is not")]
    AllZeroSolution,
    #[error("solution has no positive coefficients, so the solvable side would be empty")]
    EmptySolvableSide,
    #[error("certificate multiplicity overflows u64")]
    MultiplicityOverflow,
    #[error("certificate id {id} is not in the catalog")]
    Unresolvable { id: GroupId },
    #[error("building group {id}: {source}")]
    Group {
        id: GroupId,
        #[source]
        source: GroupError,
    },
}

/// Converts an exact solution into an integer certificate.
///
/// The particular solution is scaled by the lcm of its denominators;
/// positive coefficients become side A, negated negative ones join the
/// target (at its scaled multiplicity) on side B, zeros are dropped.
pub fn to_certificate(
    space: &SolutionSpace,
    col_index: &[GroupId],
    target: GroupId,
    target_multiplicity: u64,
) -> Result<MultiplicityCertificate, CertificateError> {
    assert_eq!(space.particular.len(), col_index.len());
    if space.particular.iter().all(Zero::is_zero) {
        return Err(CertificateError::AllZeroSolution);
    }
    let scale = space
        .particular
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = space
        .particular
        .iter()
        .map(|x| {
            let value = x * BigRational::from_integer(scale.clone());
            debug_assert!(value.is_integer());
            value.to_integer()
        })
        .collect();

    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for (c, coefficient) in scaled.iter().enumerate() {
        if coefficient.is_zero() {
            continue;
        }
        let mult = coefficient
            .abs()
            .to_u64()
            .ok_or(CertificateError::MultiplicityOverflow)?;
        let entry = CertificateEntry {
            id: col_index[c],
            mult,
        };
        if coefficient.is_positive() {
            side_a.push(entry);
        } else {
            side_b.push(entry);
        }
    }
    if side_a.is_empty() {
        return Err(CertificateError::EmptySolvableSide);
    }
    let scaled_target = scale
        .to_u64()
        .and_then(|s| s.checked_mul(target_multiplicity))
        .ok_or(CertificateError::MultiplicityOverflow)?;
    side_b.push(CertificateEntry {
        id: target,
        mult: scaled_target,
    });

    Ok(MultiplicityCertificate {
        side_a,
        side_b,
        verified: false,
        joint_exponent: 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The factored product of both sides at one divisor of the joint exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorValue {
    pub n: u64,
    pub side_a: FactoredValue,
    pub side_b: FactoredValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub joint_exponent: u64,
    pub values: Vec<DivisorValue>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

struct ResolvedSide {
    spectra: Vec<(ExponentSpectrum, u64)>,
    solvable: Vec<(GroupId, bool)>,
}

fn resolve_side(
    entries: &[CertificateEntry],
    catalog: &Catalog,
    cap: usize,
) -> Result<ResolvedSide, CertificateError> {
    let mut spectra = Vec::new();
    let mut solvable = Vec::new();
    for entry in entries {
        let descriptor = catalog
            .get(entry.id)
            .ok_or(CertificateError::Unresolvable { id: entry.id })?;
        let group = build_group_capped(descriptor, cap).map_err(|source| {
            CertificateError::Group {
                id: entry.id,
                source,
            }
        })?;
        spectra.push((ExponentSpectrum::of_group(&group), entry.mult));
        solvable.push((entry.id, group.is_solvable()));
    }
    Ok(ResolvedSide { spectra, solvable })
}

/// Recomputes both sides of a certificate and reports every check.
pub fn verify_certificate(
    certificate: &MultiplicityCertificate,
    catalog: &Catalog,
    cap: usize,
) -> Result<VerificationReport, CertificateError> {
    let side_a = resolve_side(&certificate.side_a, catalog, cap)?;
    let side_b = resolve_side(&certificate.side_b, catalog, cap)?;
    let mut checks = Vec::new();

    let bad_mult: Vec<String> = certificate
        .side_a
        .iter()
        .chain(&certificate.side_b)
        .filter(|e| e.mult == 0)
        .map(|e| e.id.to_string())
        .collect();
    checks.push(CheckResult {
        name: "multiplicities_positive".into(),
        pass: bad_mult.is_empty(),
        detail: if bad_mult.is_empty() {
            format!(
                "{} + {} entries",
                certificate.side_a.len(),
                certificate.side_b.len()
            )
        } else {
            format!("zero multiplicity at {}", bad_mult.join(", "))
        },
    });

    let overlap: Vec<String> = certificate
        .side_a
        .iter()
        .filter(|a| certificate.side_b.iter().any(|b| b.id == a.id))
        .map(|e| e.id.to_string())
        .collect();
    checks.push(CheckResult {
        name: "sides_disjoint".into(),
        pass: overlap.is_empty(),
        detail: if overlap.is_empty() {
            "no shared ids".into()
        } else {
            format!("shared ids: {}", overlap.join(", "))
        },
    });

    let unsolvable_a: Vec<String> = side_a
        .solvable
        .iter()
        .filter(|(_, s)| !s)
        .map(|(id, _)| id.to_string())
        .collect();
    checks.push(CheckResult {
        name: "side_a_solvable".into(),
        pass: unsolvable_a.is_empty(),
        detail: if unsolvable_a.is_empty() {
            "all solvable".into()
        } else {
            format!("not solvable: {}", unsolvable_a.join(", "))
        },
    });

    let witness_b = side_b.solvable.iter().find(|(_, s)| !s).map(|(id, _)| *id);
    checks.push(CheckResult {
        name: "side_b_nonsolvable".into(),
        pass: witness_b.is_some(),
        detail: match witness_b {
            Some(id) => format!("witness {id}"),
            None => "every side B group is solvable".into(),
        },
    });

    let joint_exponent = side_a
        .spectra
        .iter()
        .chain(&side_b.spectra)
        .fold(1, |acc, (e, _)| arith::lcm(acc, e.exponent()));
    let entries_a: Vec<(&ExponentSpectrum, u64)> =
        side_a.spectra.iter().map(|(e, k)| (e, *k)).collect();
    let entries_b: Vec<(&ExponentSpectrum, u64)> =
        side_b.spectra.iter().map(|(e, k)| (e, *k)).collect();
    let mut values = Vec::new();
    let mut first_mismatch = None;
    for n in arith::divisors(joint_exponent) {
        let value_a = spectrum_product_value(&entries_a, n);
        let value_b = spectrum_product_value(&entries_b, n);
        if value_a != value_b && first_mismatch.is_none() {
            first_mismatch = Some(n);
        }
        values.push(DivisorValue {
            n,
            side_a: value_a,
            side_b: value_b,
        });
    }
    checks.push(CheckResult {
        name: "exponent_products_equal".into(),
        pass: first_mismatch.is_none(),
        detail: match first_mismatch {
            None => format!("equal at all {} divisors of {joint_exponent}", values.len()),
            Some(n) => format!("mismatch at n = {n}"),
        },
    });

    Ok(VerificationReport {
        checks,
        joint_exponent,
        values,
    })
}
