//! Shared fixtures for the pipeline benchmarks.

use ordertype::catalog::{build_group, Catalog, GroupId};
use ordertype::linsolve::{build_system, corpus_vectors, valuation_of_descriptor, LinearSystem};
use ordertype::FiniteGroup;

pub const GL32: GroupId = GroupId(168, 42);

pub fn catalog() -> Catalog {
    Catalog::bundled()
}

/// The largest catalog group, order 336 on 31 points.
pub fn largest_group(catalog: &Catalog) -> FiniteGroup {
    build_group(catalog.get(GroupId(336, 36)).unwrap()).unwrap()
}

/// The 78×35 system for the GL(3,2) target at multiplicity 3.
pub fn gl32_system(catalog: &Catalog) -> LinearSystem {
    let corpus = corpus_vectors(catalog, GL32, 10_000).unwrap();
    let target = valuation_of_descriptor(catalog.get(GL32).unwrap(), 10_000).unwrap();
    build_system(&corpus, &target, 3).unwrap()
}
