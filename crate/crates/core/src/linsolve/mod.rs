//! Linear algebra over valuation vectors: assemble the sparse matrix whose
//! columns are the valuation vectors of a solvable corpus, screen a target
//! numerically, solve `Vx = t·v_target` exactly over the rationals, and turn
//! solutions into verified multiplicity certificates.

mod certificate;
mod screen;
mod search;
mod solve;
mod system;

pub use certificate::{
    to_certificate, verify_certificate, CertificateEntry, CertificateError, CheckResult,
    DivisorValue, MultiplicityCertificate, VerificationReport,
};
pub use screen::{least_squares_screen, ScreenResult};
pub use search::{
    corpus_vectors, screen_target, search, valuation_of_descriptor, SearchError, SearchOptions,
    SearchOutcome,
};
pub use solve::{solve_exact, InfeasibilityWitness, SolutionSpace, SolveOutcome};
pub use system::{build_system, LinearSystem, SystemError};
