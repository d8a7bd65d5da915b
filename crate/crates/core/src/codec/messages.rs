use std::collections::BTreeMap;

use rand_core::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::problem::ProblemParams;

/// The `K` message vectors, each of `u_a` symbols, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageBlock {
    params: ProblemParams,
    field: PrimeField,
    dimension: usize,
    symbols: Vec<u32>,
}

impl MessageBlock {
    pub fn zeros(params: ProblemParams, field: PrimeField) -> Self {
        let dimension = params.derive().dimension;
        MessageBlock {
            params,
            field,
            dimension,
            symbols: vec![0; params.messages() * dimension],
        }
    }

    /// One row per message. Values must already be below `q`.
    pub fn from_rows<R: AsRef<[u64]>>(
        params: ProblemParams,
        field: PrimeField,
        rows: &[R],
    ) -> Result<Self> {
        let mut block = Self::zeros(params, field);
        if rows.len() != params.messages() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} message vectors, found {}",
                params.messages(),
                rows.len()
            )));
        }
        for (k, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != block.dimension {
                return Err(Error::DimensionMismatch(format!(
                    "message {k} has {} symbols, expected {}",
                    row.len(),
                    block.dimension
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= field.modulus() as u64 {
                    return Err(Error::DimensionMismatch(format!(
                        "symbol x{k},{} = {v} is not below {}",
                        c + 1,
                        field.modulus()
                    )));
                }
                block.symbols[k * block.dimension + c] = v as u32;
            }
        }
        Ok(block)
    }

    /// Uniform random messages drawn with [`uniform_symbol`], message by
    /// message and component by component.
    pub fn random<R: Rng + ?Sized>(params: ProblemParams, field: PrimeField, rng: &mut R) -> Self {
        let mut block = Self::zeros(params, field);
        for v in block.symbols.iter_mut() {
            *v = uniform_symbol(rng, field);
        }
        block
    }

    pub fn params(&self) -> ProblemParams {
        self.params
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, message: usize, component: usize) -> FieldElement {
        self.field.element(self.raw(message, component) as u64)
    }

    #[inline]
    pub(crate) fn raw(&self, message: usize, component: usize) -> u32 {
        self.symbols[message * self.dimension + component]
    }

    pub(crate) fn raw_symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn vector(&self, message: usize) -> Vec<FieldElement> {
        (0..self.dimension).map(|c| self.get(message, c)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.symbols
            .chunks(self.dimension)
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// The message vectors receiver `k` holds as side-information.
    pub fn side_information(&self, k: usize) -> Result<BTreeMap<usize, Vec<FieldElement>>> {
        Ok(self
            .params
            .side_info(k)?
            .into_iter()
            .map(|m| (m, self.vector(m)))
            .collect())
    }
}

/// Draws one element of `GF(q)` uniformly.
///
/// Takes 64-bit outputs from `rng`, discards any value below
/// `2^64 mod q`, and returns the first accepted value reduced mod `q`.
pub fn uniform_symbol<R: Rng + ?Sized>(rng: &mut R, field: PrimeField) -> u32 {
    let q = field.modulus() as u64;
    let threshold = q.wrapping_neg() % q;
    loop {
        let v = rng.next_u64();
        if v >= threshold {
            return (v % q) as u32;
        }
    }
}
