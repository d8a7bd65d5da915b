//! Adjacent Independent Row (AIR) matrices.
//!
//! An `(m, n)` AIR matrix is an `m x n` 0/1 matrix in which any `n` cyclically
//! adjacent rows are linearly independent over every field. The construction
//! repeatedly tiles the unfilled part of the matrix:
//!
//! 1. write `m = q n + r`; fill the next `q n` rows with `q` stacked `n x n`
//!    identities; stop if `r = 0`;
//! 2. write `n = q' r + r'`; fill the next `q' r` columns of the remaining
//!    `r` rows with `q'` identities placed side by side; stop if `r' = 0`;
//! 3. continue with the `r x r'` block that is still empty.
//!
//! The sizes of the tiles follow a Euclid-like remainder chain, exposed as
//! [`LambdaChain`].

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::FieldMatrix;

/// Remainder chain describing the block layout of an `(m, n)` AIR matrix.
///
/// `lambdas[0]` is `n`, `lambdas[1]` is `m - n`, and each later entry is the
/// remainder of dividing the entry two places back by the previous one:
/// `lambdas[i] = betas[i] * lambdas[i + 1] + lambdas[i + 2]`, ending when the
/// remainder reaches zero (the final zero is not stored).
///
/// `betas[0]` is zero when `m >= 2n`; every later beta is positive.
/// When `m == n` the chain is degenerate: `lambdas = [n, 0]`, no betas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChain {
    pub lambdas: Vec<usize>,
    pub betas: Vec<usize>,
}

impl LambdaChain {
    /// Index of the last nonzero lambda (counting `m - n` as index 0), or
    /// `None` for the degenerate square case.
    pub fn depth(&self) -> Option<usize> {
        self.betas.len().checked_sub(1)
    }

    pub fn is_degenerate(&self) -> bool {
        self.betas.is_empty()
    }

    /// Checks the recurrence and the strict decrease of the tail.
    pub fn is_consistent(&self) -> bool {
        if self.is_degenerate() {
            return self.lambdas.len() == 2 && self.lambdas[1] == 0;
        }
        if self.lambdas.len() != self.betas.len() + 1 {
            return false;
        }
        let lam = |i: usize| self.lambdas.get(i).copied().unwrap_or(0);
        let recurrence = (0..self.betas.len()).all(|i| {
            (i == 0 || self.betas[i] >= 1) && lam(i) == self.betas[i] * lam(i + 1) + lam(i + 2)
        });
        let first = self.betas[0] >= 1 || self.lambdas[1] > self.lambdas[0];
        let decreasing = self.lambdas[1..].windows(2).all(|w| w[1] < w[0]);
        recurrence && first && decreasing && self.lambdas.iter().all(|&l| l > 0)
    }
}

pub fn lambda_chain(m: usize, n: usize) -> Result<LambdaChain> {
    check_dims(m, n)?;
    if m == n {
        return Ok(LambdaChain {
            lambdas: vec![n, 0],
            betas: Vec::new(),
        });
    }
    let mut lambdas = vec![n, m - n];
    let mut betas = Vec::new();
    loop {
        let len = lambdas.len();
        let (prev, cur) = (lambdas[len - 2], lambdas[len - 1]);
        betas.push(prev / cur);
        let rem = prev % cur;
        if rem == 0 {
            break;
        }
        lambdas.push(rem);
    }
    Ok(LambdaChain { lambdas, betas })
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if n == 0 || n > m {
        return Err(Error::InvalidAirDimensions { rows: m, cols: n });
    }
    Ok(())
}

/// Builds the `m x n` AIR matrix over `GF(2)`.
///
/// The entries are 0/1, so the result can be read in any other prime field
/// with [`FieldMatrix::reinterpret`], or built there directly with
/// [`air_matrix_in`].
pub fn air_matrix(m: usize, n: usize) -> Result<FieldMatrix> {
    air_matrix_in(PrimeField::GF2, m, n)
}

pub fn air_matrix_in(field: PrimeField, m: usize, n: usize) -> Result<FieldMatrix> {
    check_dims(m, n)?;
    let mut out = FieldMatrix::zeros(field, m, n);

    // The unfilled region is always the rectangle with top-left corner
    // (row, col) extending to the bottom-right corner of the matrix.
    let (mut row, mut col) = (0, 0);
    loop {
        let (height, width) = (m - row, n - col);

        // Stacked identities, row-wise.
        let q = height / width;
        for i in 0..q * width {
            out.set_raw(row + i, col + i % width, 1);
        }
        row += q * width;
        let r = height % width;
        if r == 0 {
            break;
        }

        // Side-by-side identities, column-wise, over the remaining r rows.
        let q2 = width / r;
        for j in 0..q2 * r {
            out.set_raw(row + j % r, col + j, 1);
        }
        col += q2 * r;
        if width % r == 0 {
            break;
        }
    }
    Ok(out)
}

/// True iff every one of the `m` cyclic windows of `n` adjacent rows of the
/// `(m, n)` AIR matrix has full rank in each of `fields`.
pub fn verify_air(m: usize, n: usize, fields: &[PrimeField]) -> Result<bool> {
    let base = air_matrix(m, n)?;
    Ok(fields.iter().all(|&f| is_air(&base.reinterpret(f), n)))
}

/// The window check on an arbitrary matrix, in its own field.
pub fn is_air(matrix: &FieldMatrix, width: usize) -> bool {
    (0..matrix.rows()).all(|s| matrix.cyclic_window_independent(s, width))
}
