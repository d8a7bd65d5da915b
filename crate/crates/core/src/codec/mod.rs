//! Construction and encoding of the vector linear index code.
//!
//! With `a = gcd(K, D - U, U + 1)` every message is a vector of
//! `u_a = (U + 1) / a` symbols. Consecutive runs of `a` message symbols are
//! summed into extended symbols
//!
//! ```text
//! z[s][c] = x[a s][c] + x[a s + 1][c] + ... + x[a s + a - 1][c]
//! ```
//!
//! and the extended symbols are folded diagonally into `K_a = K / a` scalars
//!
//! ```text
//! y[s] = z[s][0] + z[s - 1][1] + ... + z[s - u_a + 1][u_a - 1]     (mod K_a)
//! ```
//!
//! The broadcast is `c = sum_s y[s] * L[s]`, where `L` is the
//! `K_a x (K_a - delta)` AIR matrix. The same code can be written as
//! `x * E` for a flattened message row vector `x` and the stacked encoding
//! matrix `E` built in [`build_code`].
//!
//! Component indices are 0-based throughout the API; `c` here is component
//! `c + 1` in the usual one-based message-symbol notation.

mod decode;
mod messages;
mod plan;

use std::collections::BTreeMap;
use std::fmt;

pub use decode::{
    oracle_decode, receiver_decode, receiver_decode_traced, DecodeStep, SideInformation,
};
pub use messages::{uniform_symbol, MessageBlock};
pub use plan::{decoding_plan, DecodingPlan, PlanEntry};

use crate::air::{air_matrix_in, is_air};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::FieldMatrix;
use crate::problem::{DerivedParams, ProblemParams};

/// One message symbol `x[message][component]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MessageSymbol {
    pub message: usize,
    pub component: usize,
}

impl MessageSymbol {
    pub fn new(message: usize, component: usize) -> Self {
        MessageSymbol { message, component }
    }
}

impl fmt::Display for MessageSymbol {
    /// `x<message>,<component + 1>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{},{}", self.message, self.component + 1)
    }
}

/// A linear combination of message symbols with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    terms: BTreeMap<MessageSymbol, u32>,
}

impl LinearForm {
    pub fn terms(&self) -> impl Iterator<Item = (MessageSymbol, u32)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn coefficient(&self, symbol: MessageSymbol) -> u32 {
        self.terms.get(&symbol).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, field: PrimeField, symbol: MessageSymbol, coef: u32) {
        let entry = self.terms.entry(symbol).or_insert(0);
        *entry = field.add_raw(*entry, coef);
        if *entry == 0 {
            self.terms.remove(&symbol);
        }
    }

    /// Builds a form with unit coefficients; repeated symbols accumulate.
    pub fn from_symbols(
        field: PrimeField,
        symbols: impl IntoIterator<Item = MessageSymbol>,
    ) -> Self {
        let mut form = LinearForm::default();
        for s in symbols {
            form.add_term(field, s, 1);
        }
        form
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A fully constructed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    params: ProblemParams,
    derived: DerivedParams,
    field: PrimeField,
    air: FieldMatrix,
    encoding: FieldMatrix,
}

/// Builds the code for `params` over `field`.
///
/// The AIR matrix is `K_a x N` with `N` the code length, and the encoding
/// matrix stacks, for each `s`, `a` copies of the `u_a` AIR rows
/// `L[s], L[s + 1], ..., L[s + u_a - 1]` (indices mod `K_a`). Row
/// `k * u_a + c` of the encoding matrix is therefore `L[k / a + c]`.
pub fn build_code(params: ProblemParams, field: PrimeField) -> Result<CodeSpec> {
    let derived = params.derive();
    let air = air_matrix_in(field, derived.k_a, derived.length)?;
    if !is_air(&air, derived.length) {
        return Err(Error::AirViolation {
            rows: derived.k_a,
            cols: derived.length,
            modulus: field.modulus(),
        });
    }
    let order: Vec<usize> = (0..params.messages())
        .flat_map(|k| (0..derived.dimension).map(move |c| (k / derived.a + c) % derived.k_a))
        .collect();
    let encoding = air.select_rows(&order);
    Ok(CodeSpec {
        params,
        derived,
        field,
        air,
        encoding,
    })
}

impl CodeSpec {
    pub fn params(&self) -> ProblemParams {
        self.params
    }

    pub fn derived(&self) -> DerivedParams {
        self.derived
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn air(&self) -> &FieldMatrix {
        &self.air
    }

    pub fn encoding_matrix(&self) -> &FieldMatrix {
        &self.encoding
    }

    pub fn dimension(&self) -> usize {
        self.derived.dimension
    }

    /// Number of broadcast symbols.
    pub fn length(&self) -> usize {
        self.derived.length
    }

    /// The `a` message symbols summed into `z[s][component]`.
    pub fn z_symbols(&self, s: usize, component: usize) -> Vec<MessageSymbol> {
        let a = self.derived.a;
        (0..a)
            .map(|j| MessageSymbol::new(a * s + j, component))
            .collect()
    }

    /// The `U + 1` message symbols summed into `y[s]`.
    pub fn y_symbols(&self, s: usize) -> Vec<MessageSymbol> {
        let DerivedParams { a, dimension, .. } = self.derived;
        let k = self.params.messages();
        let mut out = Vec::with_capacity(a * dimension);
        for c in 0..dimension {
            for j in 0..a {
                // a (s + 1 - i) + j with i = c + 1, reduced mod K.
                let m = (a * s + j + k * dimension - a * c) % k;
                out.push(MessageSymbol::new(m, c));
            }
        }
        out
    }

    /// Broadcast symbol `j` expanded over message symbols, built from the
    /// AIR rows and the `y` sums.
    pub fn code_symbol_form(&self, j: usize) -> LinearForm {
        let mut form = LinearForm::default();
        for s in 0..self.derived.k_a {
            let coef = self.air.raw(s, j);
            if coef == 0 {
                continue;
            }
            for sym in self.y_symbols(s) {
                form.add_term(self.field, sym, coef);
            }
        }
        form
    }

    fn check_messages(&self, messages: &MessageBlock) -> Result<()> {
        if messages.params() != self.params || messages.field() != self.field {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }
}

/// Extended symbols `z[s][c]` and folded symbols `y[s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedSymbols {
    field: PrimeField,
    dimension: usize,
    z: Vec<u32>,
    y: Vec<u32>,
}

impl ExtendedSymbols {
    pub fn z(&self, s: usize, component: usize) -> FieldElement {
        self.field
            .element(self.z[s * self.dimension + component] as u64)
    }

    pub fn y(&self, s: usize) -> FieldElement {
        self.field.element(self.y[s] as u64)
    }

    pub fn y_values(&self) -> Vec<FieldElement> {
        self.y
            .iter()
            .map(|&v| self.field.element(v as u64))
            .collect()
    }
}

/// Computes `z` and `y` from the messages.
pub fn extended(messages: &MessageBlock) -> ExtendedSymbols {
    let params = messages.params();
    let derived = params.derive();
    let DerivedParams {
        a, dimension, k_a, ..
    } = derived;
    let f = messages.field();

    let mut z = vec![0u32; k_a * dimension];
    for s in 0..k_a {
        for c in 0..dimension {
            z[s * dimension + c] =
                (0..a).fold(0, |acc, j| f.add_raw(acc, messages.raw(a * s + j, c)));
        }
    }
    let y = (0..k_a)
        .map(|s| {
            (0..dimension).fold(0, |acc, c| {
                let src = (s + k_a * dimension - c) % k_a;
                f.add_raw(acc, z[src * dimension + c])
            })
        })
        .collect();
    ExtendedSymbols {
        field: f,
        dimension,
        z,
        y,
    }
}

/// `c = sum_s y[s] * L[s]`.
pub fn encode(messages: &MessageBlock, spec: &CodeSpec) -> Result<Vec<FieldElement>> {
    spec.check_messages(messages)?;
    let ext = extended(messages);
    Ok(to_elements(spec.field, spec.air.vec_mul_raw(&ext.y)))
}

/// The same codeword via the flattened message vector times the encoding matrix.
pub fn encode_with_matrix(messages: &MessageBlock, spec: &CodeSpec) -> Result<Vec<FieldElement>> {
    spec.check_messages(messages)?;
    Ok(to_elements(
        spec.field,
        spec.encoding.vec_mul_raw(messages.raw_symbols()),
    ))
}

fn to_elements(field: PrimeField, raw: Vec<u32>) -> Vec<FieldElement> {
    raw.into_iter().map(|v| field.element(v as u64)).collect()
}
