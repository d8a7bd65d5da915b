//! Dense matrices over a prime field.
//!
//! Entries are held as canonical residues (`u32`) next to the field they
//! belong to. Elimination always picks the first nonzero entry in column
//! order as the pivot, so [`FieldMatrix::solve`] is reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod `q`.
    /// All rows must have the same length.
    pub fn from_rows<R: AsRef<[u64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&v| field.element(v).value()));
        }
        Ok(FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.raw(r, c) as u64)
    }

    #[inline]
    pub(crate) fn raw(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: FieldElement) -> Result<()> {
        if value.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: value.field().modulus(),
            });
        }
        self.data[r * self.cols + c] = value.value();
        Ok(())
    }

    #[inline]
    pub(crate) fn set_raw(&mut self, r: usize, c: usize, value: u32) {
        self.data[r * self.cols + c] = value;
    }

    /// Row `r` as raw residues.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rows as plain integers, convenient for comparisons against printed matrices.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// The same integer entries read in another field.
    pub fn reinterpret(&self, field: PrimeField) -> FieldMatrix {
        FieldMatrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&v| field.element(v as u64).value())
                .collect(),
        }
    }

    /// Stacks the listed rows, in order, into a new matrix.
    pub fn select_rows(&self, indices: &[usize]) -> FieldMatrix {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &r in indices {
            data.extend_from_slice(self.row(r));
        }
        FieldMatrix {
            field: self.field,
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set_raw(c, r, self.raw(r, c));
            }
        }
        t
    }

    /// `self * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let x = self.raw_vector(x, self.cols, "vector length must equal column count")?;
        Ok(self
            .mul_vec_raw(&x)
            .into_iter()
            .map(|v| self.field.element(v as u64))
            .collect())
    }

    pub(crate) fn mul_vec_raw(&self, x: &[u32]) -> Vec<u32> {
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| f.add_raw(acc, f.mul_raw(a, b)))
            })
            .collect()
    }

    /// `x * self` for a row vector `x`.
    pub fn vec_mul(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let x = self.raw_vector(x, self.rows, "vector length must equal row count")?;
        Ok(self
            .vec_mul_raw(&x)
            .into_iter()
            .map(|v| self.field.element(v as u64))
            .collect())
    }

    pub(crate) fn vec_mul_raw(&self, x: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &coef) in x.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(r)) {
                *o = f.add_raw(*o, f.mul_raw(coef, a));
            }
        }
        out
    }

    fn raw_vector(&self, x: &[FieldElement], len: usize, what: &str) -> Result<Vec<u32>> {
        if x.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "{what} ({} != {len})",
                x.len()
            )));
        }
        x.iter()
            .map(|e| {
                if e.field() == self.field {
                    Ok(e.value())
                } else {
                    Err(Error::FieldMismatch {
                        left: self.field.modulus(),
                        right: e.field().modulus(),
                    })
                }
            })
            .collect()
    }

    /// Rank over the matrix's field, by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        reduce(self.field, &mut work, self.rows, self.cols, self.cols).len()
    }

    /// Solves `self * x = b`.
    ///
    /// Returns `Ok(None)` when the system is inconsistent. When it is
    /// underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        let b = self.raw_vector(b, self.rows, "right-hand side length must equal row count")?;
        Ok(self.solve_raw(&b).map(|x| {
            x.into_iter()
                .map(|v| self.field.element(v as u64))
                .collect()
        }))
    }

    pub(crate) fn solve_raw(&self, b: &[u32]) -> Option<Vec<u32>> {
        debug_assert_eq!(b.len(), self.rows);
        let width = self.cols + 1;
        let mut work = Vec::with_capacity(self.rows * width);
        for (r, &rhs) in b.iter().enumerate() {
            work.extend_from_slice(self.row(r));
            work.push(rhs);
        }
        let pivots = reduce(self.field, &mut work, self.rows, width, self.cols);
        // A zero coefficient row with a nonzero right-hand side means no solution.
        for r in pivots.len()..self.rows {
            if work[r * width + self.cols] != 0 {
                return None;
            }
        }
        let mut x = vec![0u32; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = work[r * width + self.cols];
        }
        Some(x)
    }

    /// True iff the `width` rows starting at `start`, wrapping past the last
    /// row, are linearly independent. False if `width` exceeds the row count.
    pub fn cyclic_window_independent(&self, start: usize, width: usize) -> bool {
        if width > self.rows {
            return false;
        }
        if width == 0 {
            return true;
        }
        let idx: Vec<usize> = (0..width).map(|i| (start + i) % self.rows).collect();
        self.select_rows(&idx).rank() == width
    }

    /// One row per line, entries in base 10 separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format written by [`FieldMatrix::to_text`]. Blank lines are skipped.
    pub fn parse_text(field: PrimeField, text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    let v: u64 = t.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("`{t}` is not a nonnegative integer"),
                    })?;
                    if v >= field.modulus() as u64 {
                        return Err(Error::Parse {
                            line: i + 1,
                            message: format!(
                                "entry {v} is not below the modulus {}",
                                field.modulus()
                            ),
                        });
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<u64>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("expected {} entries, found {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        FieldMatrix::from_rows(field, &rows)
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Reduced row echelon form in place over the first `pivot_cols` columns of a
/// row-major `rows x width` buffer. Returns the pivot column of each leading row.
fn reduce(
    f: PrimeField,
    m: &mut [u32],
    rows: usize,
    width: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i * width + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..width {
                m.swap(p * width + j, r * width + j);
            }
        }
        let inv = f.inv_raw(m[r * width + c]);
        if inv != 1 {
            for j in c..width {
                m[r * width + j] = f.mul_raw(m[r * width + j], inv);
            }
        }
        for i in 0..rows {
            let factor = m[i * width + c];
            if i == r || factor == 0 {
                continue;
            }
            for j in c..width {
                let sub = f.mul_raw(factor, m[r * width + j]);
                m[i * width + j] = f.sub_raw(m[i * width + j], sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
