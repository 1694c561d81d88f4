//! Floating-point least-squares screen.
//!
//! Conjugate gradient on the normal equations `VᵀV x = Vᵀ·rhs`, the one
//! place in the pipeline where floating point is allowed. A small residual
//! suggests the target is in the span and worth an exact solve; a residual
//! bounded away from zero rules it out cheaply.

use num::ToPrimitive;

use super::system::LinearSystem;

/// Tolerance on the normal-equations residual `‖Vᵀ(rhs − Vx)‖`.
const NORMAL_EQUATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScreenResult {
    /// Euclidean norm of `Vx − rhs` at the final iterate. When the method
    /// did not converge within the budget this is still a valid upper bound
    /// on the least-squares distance, just not a tight one.
    pub residual: f64,
    pub converged: bool,
    pub iterations: usize,
}

fn to_f64(value: &num::BigRational) -> f64 {
    value.to_f64().expect("system entries fit in f64")
}

pub fn least_squares_screen(system: &LinearSystem) -> ScreenResult {
    let m = system.rows();
    let n = system.cols();
    let budget = 10 * (m + n);

    let cols: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|c| {
            system
                .column(c)
                .iter()
                .map(|(r, v)| (*r, to_f64(v)))
                .collect()
        })
        .collect();
    let b: Vec<f64> = system.rhs().iter().map(to_f64).collect();

    let apply = |x: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; m];
        for (c, col) in cols.iter().enumerate() {
            if x[c] != 0.0 {
                for &(r, v) in col {
                    out[r] += v * x[c];
                }
            }
        }
        out
    };
    let apply_t = |y: &[f64]| -> Vec<f64> {
        cols.iter()
            .map(|col| col.iter().map(|&(r, v)| v * y[r]).sum())
            .collect()
    };
    let norm2 = |v: &[f64]| -> f64 { v.iter().map(|x| x * x).sum() };

    let mut x = vec![0.0; n];
    let mut r = b.clone();
    let mut s = apply_t(&r);
    let mut p = s.clone();
    let mut gamma = norm2(&s);
    let mut converged = gamma.sqrt() <= NORMAL_EQUATION_TOL;
    let mut iterations = 0;

    while !converged && iterations < budget {
        let q = apply(&p);
        let qq = norm2(&q);
        if qq == 0.0 {
            converged = true;
            break;
        }
        let alpha = gamma / qq;
        for i in 0..n {
            x[i] += alpha * p[i];
        }
        for i in 0..m {
            r[i] -= alpha * q[i];
        }
        s = apply_t(&r);
        let gamma_next = norm2(&s);
        if gamma_next.sqrt() <= NORMAL_EQUATION_TOL {
            converged = true;
            iterations += 1;
            break;
        }
        for i in 0..n {
            p[i] = s[i] + (gamma_next / gamma) * p[i];
        }
        gamma = gamma_next;
        iterations += 1;
    }

    let final_residual = {
        let ax = apply(&x);
        (0..m).map(|i| (b[i] - ax[i]).powi(2)).sum::<f64>().sqrt()
    };
    ScreenResult {
        residual: final_residual,
        converged,
        iterations,
    }
}
