//! End-to-end certificate search for one target group.
//!
//! Pipeline: build the valuation vectors of the solvable corpus, assemble
//! `Vx = t·v_target`, screen numerically, solve exactly, convert to a
//! certificate, verify by direct recomputation.

use thiserror::Error;

use super::certificate::{
    to_certificate, verify_certificate, CertificateError, MultiplicityCertificate,
    VerificationReport,
};
use super::screen::{least_squares_screen, ScreenResult};
use super::solve::{solve_exact, InfeasibilityWitness, SolveOutcome};
use super::system::{build_system, SystemError};
use crate::catalog::{build_group_capped, Catalog, GroupDescriptor, GroupId};
use crate::group::GroupError;
use crate::revolved::ValuationVector;
use crate::spectra::ExponentSpectrum;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Bound on the target multiplicity `t` retried by the search.
    pub max_multiplicity: u64,
    /// Cap passed to group enumeration.
    pub enum_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_multiplicity: 8,
            enum_cap: crate::group::DEFAULT_ENUM_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("target {id} is not in the catalog")]
    UnknownTarget { id: GroupId },
    #[error("target {id} is itself solvable; the search only concerns non-solvable targets")]
    SolvableTarget { id: GroupId },
    #[error("building group {id}: {source}")]
    Group {
        id: GroupId,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("no usable certificate up to target multiplicity {bound}: {last}")]
    Exhausted {
        bound: u64,
        #[source]
        last: CertificateError,
    },
    #[error(transparent)]
    Certificate(CertificateError),
}

#[derive(Debug)]
pub enum SearchOutcome {
    /// An integer certificate that passed every verification check.
    Verified {
        certificate: MultiplicityCertificate,
        report: VerificationReport,
        screen: ScreenResult,
        multiplicity_used: u64,
    },
    /// A certificate was constructed but failed verification; this signals
    /// a bug or corrupted input, never a mathematical near-miss.
    VerificationFailed {
        certificate: MultiplicityCertificate,
        report: VerificationReport,
    },
    /// The system has no rational solution; the witness proves it.
    Infeasible {
        witness: InfeasibilityWitness,
        row_index: Vec<(u64, u64)>,
        screen: ScreenResult,
    },
}

/// Valuation vector of a catalog entry, recomputed from its generators.
pub fn valuation_of_descriptor(
    descriptor: &GroupDescriptor,
    enum_cap: usize,
) -> Result<ValuationVector, SearchError> {
    let group = build_group_capped(descriptor, enum_cap).map_err(|source| SearchError::Group {
        id: descriptor.id,
        source,
    })?;
    Ok(ValuationVector::of_spectrum(&ExponentSpectrum::of_group(
        &group,
    )))
}

/// The solvable table entries, minus the target, as `(id, vector)` columns
/// in catalog order.
pub fn corpus_vectors(
    catalog: &Catalog,
    exclude: GroupId,
    enum_cap: usize,
) -> Result<Vec<(GroupId, ValuationVector)>, SearchError> {
    catalog
        .solvable_table_entries()
        .filter(|entry| entry.id != exclude)
        .map(|entry| Ok((entry.id, valuation_of_descriptor(entry, enum_cap)?)))
        .collect()
}

/// Builds the system for a target and reports the least-squares residual
/// without solving exactly. Works for solvable targets too.
pub fn screen_target(
    catalog: &Catalog,
    target: GroupId,
    options: SearchOptions,
) -> Result<(ScreenResult, usize, usize), SearchError> {
    let descriptor = catalog
        .get(target)
        .ok_or(SearchError::UnknownTarget { id: target })?;
    let corpus = corpus_vectors(catalog, target, options.enum_cap)?;
    let vector = valuation_of_descriptor(descriptor, options.enum_cap)?;
    let system = build_system(&corpus, &vector, 1)?;
    Ok((least_squares_screen(&system), system.rows(), system.cols()))
}

pub fn search(
    catalog: &Catalog,
    target: GroupId,
    options: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    let descriptor = catalog
        .get(target)
        .ok_or(SearchError::UnknownTarget { id: target })?;
    if descriptor.solvable {
        return Err(SearchError::SolvableTarget { id: target });
    }
    let corpus = corpus_vectors(catalog, target, options.enum_cap)?;
    let vector = valuation_of_descriptor(descriptor, options.enum_cap)?;

    let mut screen = None;
    let mut last_error = None;
    for multiplicity in 1..=options.max_multiplicity.max(1) {
        let system = build_system(&corpus, &vector, multiplicity)?;
        let screen_result = *screen.get_or_insert_with(|| least_squares_screen(&system));
        match solve_exact(&system) {
            SolveOutcome::Infeasible(witness) => {
                // scaling the right-hand side cannot make the system
                // feasible, so one infeasibility settles every multiplicity
                return Ok(SearchOutcome::Infeasible {
                    witness,
                    row_index: system.row_index().to_vec(),
                    screen: screen_result,
                });
            }
            SolveOutcome::Feasible(space) => {
                match to_certificate(&space, system.col_index(), target, multiplicity) {
                    Ok(mut certificate) => {
                        let report = verify_certificate(&certificate, catalog, options.enum_cap)
                            .map_err(SearchError::Certificate)?;
                        certificate.verified = report.all_passed();
                        certificate.joint_exponent = report.joint_exponent;
                        if certificate.verified {
                            return Ok(SearchOutcome::Verified {
                                certificate,
                                report,
                                screen: screen_result,
                                multiplicity_used: multiplicity,
                            });
                        }
                        return Ok(SearchOutcome::VerificationFailed {
                            certificate,
                            report,
                        });
                    }
                    Err(err) => last_error = Some(err),
                }
            }
        }
    }
    Err(SearchError::Exhausted {
        bound: options.max_multiplicity,
        last: last_error.unwrap_or(CertificateError::AllZeroSolution),
    })
}
