//! The sparse rational system `Vx = rhs`.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use crate::catalog::GroupId;
use crate::revolved::ValuationVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("corpus must not be empty")]
    EmptyCorpus,
    #[error("duplicate corpus id {id}")]
    DuplicateCorpusId { id: GroupId },
}

/// Sparse matrix with rows indexed by `(n, prime)` pairs in lexicographic
/// order, columns indexed by corpus group ids in corpus order, plus a
/// right-hand side. Entries are exact rationals.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    row_index: Vec<(u64, u64)>,
    col_index: Vec<GroupId>,
    /// Per-column nonzero entries, sorted by row.
    cols: Vec<Vec<(usize, BigRational)>>,
    rhs: Vec<BigRational>,
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Assembles the system for `target_multiplicity · target` against a corpus
/// of valuation vectors. The row list covers the union of the supports of
/// every column and of the target, so infeasibility shows up as a nonzero
/// right-hand side on an all-zero row rather than being silently truncated.
pub fn build_system(
    corpus: &[(GroupId, ValuationVector)],
    target: &ValuationVector,
    target_multiplicity: u64,
) -> Result<LinearSystem, SystemError> {
    if corpus.is_empty() {
        return Err(SystemError::EmptyCorpus);
    }
    let mut seen = std::collections::HashSet::new();
    for (id, _) in corpus {
        if !seen.insert(*id) {
            return Err(SystemError::DuplicateCorpusId { id: *id });
        }
    }

    let mut rows: std::collections::BTreeSet<(u64, u64)> = std::collections::BTreeSet::new();
    for (_, vector) in corpus {
        rows.extend(vector.entries().keys().copied());
    }
    rows.extend(target.entries().keys().copied());
    let row_index: Vec<(u64, u64)> = rows.into_iter().collect();
    let row_of: std::collections::HashMap<(u64, u64), usize> = row_index
        .iter()
        .enumerate()
        .map(|(i, &np)| (np, i))
        .collect();

    let col_index: Vec<GroupId> = corpus.iter().map(|&(id, _)| id).collect();
    let cols = corpus
        .iter()
        .map(|(_, vector)| {
            vector
                .entries()
                .iter()
                .map(|(np, &k)| (row_of[np], rat(k)))
                .collect()
        })
        .collect();

    let mut rhs = vec![BigRational::zero(); row_index.len()];
    for (np, &k) in target.entries() {
        rhs[row_of[np]] = rat(k) * rat(target_multiplicity as i64);
    }

    Ok(LinearSystem {
        row_index,
        col_index,
        cols,
        rhs,
    })
}

impl LinearSystem {
    pub fn rows(&self) -> usize {
        self.row_index.len()
    }

    pub fn cols(&self) -> usize {
        self.col_index.len()
    }

    pub fn row_index(&self) -> &[(u64, u64)] {
        &self.row_index
    }

    pub fn col_index(&self) -> &[GroupId] {
        &self.col_index
    }

    pub fn rhs(&self) -> &[BigRational] {
        &self.rhs
    }

    pub fn column(&self, c: usize) -> &[(usize, BigRational)] {
        &self.cols[c]
    }

    pub fn nonzeros(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Dense row-major copy of the matrix.
    pub fn dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.cols()]; self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, value) in col {
                out[*r][c] = value.clone();
            }
        }
        out
    }

    /// `V x`.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols());
        let mut out = vec![BigRational::zero(); self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            if x[c].is_zero() {
                continue;
            }
            for (r, value) in col {
                out[*r] += value * &x[c];
            }
        }
        out
    }

    /// True when `V x = rhs` holds exactly.
    pub fn is_solution(&self, x: &[BigRational]) -> bool {
        self.apply(x) == self.rhs
    }

    /// True when `yᵀ V = 0` and `yᵀ rhs ≠ 0`, i.e. `y` certifies that no
    /// solution can exist.
    pub fn is_infeasibility_witness(&self, y: &[BigRational]) -> bool {
        assert_eq!(y.len(), self.rows());
        for col in &self.cols {
            let mut dot = BigRational::zero();
            for (r, value) in col {
                dot += value * &y[*r];
            }
            if !dot.is_zero() {
                return false;
            }
        }
        let mut dot = BigRational::zero();
        for (r, value) in self.rhs.iter().enumerate() {
            dot += value * &y[r];
        }
        !dot.is_zero()
    }
}
