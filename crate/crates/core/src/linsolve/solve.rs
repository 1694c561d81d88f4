//! Exact Gauss–Jordan elimination over arbitrary-precision rationals.
//!
//! Pivoting is deterministic and sparse-friendly: each step picks the
//! unused column with the fewest nonzeros among the still-active rows (ties
//! to the earlier corpus column) and pivots on its first active row, rows
//! being pre-sorted lexicographically by `(n, p)`. Row operations are
//! tracked so that an inconsistent row yields a verifiable certificate of
//! infeasibility rather than a bare failure flag.

use num::{BigRational, One, Zero};

use super::system::LinearSystem;

/// A solved system: one particular solution (free variables at zero), a
/// basis of the nullspace, and the matrix rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<BigRational>,
    pub nullspace_basis: Vec<Vec<BigRational>>,
    pub rank: usize,
}

/// A rational row combination `y` with `yᵀV = 0` and `yᵀ·rhs ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityWitness {
    pub coefficients: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Feasible(SolutionSpace),
    Infeasible(InfeasibilityWitness),
}

pub fn solve_exact(system: &LinearSystem) -> SolveOutcome {
    let m = system.rows();
    let n = system.cols();
    let mut a = system.dense();
    let mut rhs = system.rhs().to_vec();
    // tracker[i] expresses the current row i as a combination of originals
    let mut tracker: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); m];
            row[i] = BigRational::one();
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut col_used = vec![false; n];
    let mut rank = 0;

    loop {
        // column with fewest nonzeros in the active rows, earliest on ties
        let mut best: Option<(usize, usize)> = None; // (count, col)
        for c in 0..n {
            if col_used[c] {
                continue;
            }
            let count = (rank..m).filter(|&r| !a[r][c].is_zero()).count();
            if count == 0 {
                continue;
            }
            if best.map_or(true, |(bc, _)| count < bc) {
                best = Some((count, c));
            }
        }
        let Some((_, c)) = best else { break };
        let r = (rank..m)
            .find(|&r| !a[r][c].is_zero())
            .expect("column has an active nonzero");

        a.swap(rank, r);
        rhs.swap(rank, r);
        tracker.swap(rank, r);

        let inv = a[rank][c].recip();
        for value in a[rank].iter_mut() {
            *value *= &inv;
        }
        rhs[rank] *= &inv;
        for value in tracker[rank].iter_mut() {
            *value *= &inv;
        }

        for i in 0..m {
            if i == rank || a[i][c].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut a[i][c], BigRational::zero());
            for j in 0..n {
                if !a[rank][j].is_zero() {
                    let delta = &a[rank][j] * &factor;
                    a[i][j] -= delta;
                }
            }
            let delta = &rhs[rank] * &factor;
            rhs[i] -= delta;
            for j in 0..m {
                if !tracker[rank][j].is_zero() {
                    let delta = &tracker[rank][j] * &factor;
                    tracker[i][j] -= delta;
                }
            }
        }

        pivots.push((rank, c));
        col_used[c] = true;
        rank += 1;
    }

    // every row below the rank is now all-zero on the matrix side
    for i in rank..m {
        if !rhs[i].is_zero() {
            let witness = InfeasibilityWitness {
                coefficients: tracker[i].clone(),
            };
            debug_assert!(system.is_infeasibility_witness(&witness.coefficients));
            return SolveOutcome::Infeasible(witness);
        }
    }

    let mut particular = vec![BigRational::zero(); n];
    for &(r, c) in &pivots {
        particular[c] = rhs[r].clone();
    }
    debug_assert!(system.is_solution(&particular));

    let mut nullspace_basis = Vec::new();
    for f in 0..n {
        if col_used[f] {
            continue;
        }
        let mut vector = vec![BigRational::zero(); n];
        vector[f] = BigRational::one();
        for &(r, c) in &pivots {
            vector[c] = -a[r][f].clone();
        }
        debug_assert!(system
            .apply(&vector)
            .iter()
            .all(num::Zero::is_zero));
        nullspace_basis.push(vector);
    }

    SolveOutcome::Feasible(SolutionSpace {
        particular,
        nullspace_basis,
        rank,
    })
}
