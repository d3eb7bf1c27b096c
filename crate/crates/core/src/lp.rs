//! Dense exact-rational simplex for small covering programs:
//! maximise c.x subject to A x <= b, x >= 0, with b >= 0 so the slack
//! basis is immediately feasible. Bland's rule guarantees termination.
//! No floating point anywhere; every comparison is an exact rational one.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("right-hand side must be non-negative for the slack basis")]
    NegativeRhs,
    #[error("objective is unbounded above")]
    Unbounded,
    #[error("dimension mismatch between objective, matrix and rhs")]
    DimensionMismatch,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub value: Rat,
    /// optimal structural variables
    pub x: Vec<Rat>,
    /// dual values, one per constraint row
    pub duals: Vec<Rat>,
}

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(n.into())
}

pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(num.into(), den.into())
}

/// Simplex over the tableau [A | I], slack-variable starting basis.
pub fn maximise(c: &[Rat], a: &[Vec<Rat>], b: &[Rat]) -> Result<LpSolution, LpError> {
    let m = a.len();
    let n = c.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(LpError::DimensionMismatch);
    }
    if b.iter().any(|v| *v < Rat::zero()) {
        return Err(LpError::NegativeRhs);
    }

    let total = n + m;
    // tableau rows in basis-canonical form; rhs kept separately
    let mut table: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full = row.clone();
            full.extend((0..m).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            full
        })
        .collect();
    let mut rhs: Vec<Rat> = b.to_vec();
    let mut basis: Vec<usize> = (n..total).collect();
    let cost = |j: usize| -> Rat {
        if j < n {
            c[j].clone()
        } else {
            Rat::zero()
        }
    };

    loop {
        // reduced costs r_j = c_j - c_B . column_j, recomputed each round
        let reduced = |j: usize| -> Rat {
            let mut r = cost(j);
            for (i, &bi) in basis.iter().enumerate() {
                let cb = cost(bi);
                if !cb.is_zero() && !table[i][j].is_zero() {
                    r -= cb * &table[i][j];
                }
            }
            r
        };

        // Bland: entering variable is the smallest index improving one
        let entering = (0..total).find(|&j| reduced(j) > Rat::zero());
        let Some(enter) = entering else {
            let value = basis
                .iter()
                .enumerate()
                .map(|(i, &bi)| cost(bi) * &rhs[i])
                .fold(Rat::zero(), |acc, t| acc + t);
            let mut x = vec![Rat::zero(); n];
            for (i, &bi) in basis.iter().enumerate() {
                if bi < n {
                    x[bi] = rhs[i].clone();
                }
            }
            // dual of row i = -reduced cost of its slack variable
            let duals = (0..m).map(|i| -reduced(n + i)).collect();
            return Ok(LpSolution { value, x, duals });
        };

        // ratio test; Bland ties by smallest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if table[i][enter] > Rat::zero() {
                let ratio = &rhs[i] / &table[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) if ratio < *b => true,
                    Some(b) if ratio == *b => basis[i] < basis[leave.unwrap()],
                    _ => false,
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(pivot_row) = leave else {
            return Err(LpError::Unbounded);
        };

        // pivot
        let pivot = table[pivot_row][enter].clone();
        for val in table[pivot_row].iter_mut() {
            *val /= &pivot;
        }
        rhs[pivot_row] /= &pivot;
        for i in 0..m {
            if i != pivot_row && !table[i][enter].is_zero() {
                let factor = table[i][enter].clone();
                for j in 0..total {
                    let delta = &factor * &table[pivot_row][j];
                    table[i][j] -= delta;
                }
                let delta = &factor * &rhs[pivot_row];
                rhs[i] -= delta;
            }
        }
        basis[pivot_row] = enter;
    }
}
