//! Per-position decoding sums.
//!
//! For each position `s` we look for broadcast weights `w` such that
//!
//! ```text
//! sum_j w[j] c[j] = y[s] + b1 y[s + o1] + ... + bd y[s + od],   1 <= o1 < ... < od <= span
//! ```
//!
//! Since `c = y L`, the left side equals `sum_t (L w)[t] y[t]`, so `w` must
//! make `L w` vanish on every row outside the window `s ..= s + span` and be 1
//! at row `s`. Those constraints pick out `N` cyclically adjacent AIR rows
//! (`s + span + 1, ..., s - 1, s`), so the system is square and nonsingular.

use serde::{Deserialize, Serialize};

use super::CodeSpec;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// The decoding sum for one position `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanEntry {
    pub position: usize,
    /// Weight of each broadcast symbol, as residues.
    pub weights: Vec<u32>,
    /// `(offset, coefficient)` of every other `y` the sum touches, offsets
    /// strictly increasing within `1 ..= span`. The coefficient of `y[s]`
    /// itself is always 1 and is not listed.
    pub window: Vec<(usize, u32)>,
}

impl PlanEntry {
    /// Indices of the broadcast symbols with nonzero weight.
    pub fn broadcast_set(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// `(position, coefficient)` pairs of the `y` terms, starting with `(s, 1)`,
    /// positions reduced mod `k_a`.
    pub fn y_terms(&self, k_a: usize) -> Vec<(usize, u32)> {
        std::iter::once((self.position, 1))
            .chain(
                self.window
                    .iter()
                    .map(|&(o, b)| ((self.position + o) % k_a, b)),
            )
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodingPlan {
    pub field: PrimeField,
    pub k_a: usize,
    pub span: usize,
    pub entries: Vec<PlanEntry>,
}

impl DecodingPlan {
    pub fn entry(&self, s: usize) -> &PlanEntry {
        &self.entries[s % self.k_a]
    }
}

pub fn decoding_plan(spec: &CodeSpec) -> Result<DecodingPlan> {
    let k_a = spec.derived.k_a;
    let n = spec.derived.length;
    let span = spec.derived.span();
    let field = spec.field;

    let mut entries = Vec::with_capacity(k_a);
    for s in 0..k_a {
        let rows: Vec<usize> = (span + 1..=k_a).map(|t| (s + t) % k_a).collect();
        debug_assert_eq!(rows.len(), n);
        debug_assert_eq!(*rows.last().unwrap(), s);
        let system = spec.air.select_rows(&rows);
        if system.rank() != n {
            return Err(Error::SingularPlanSystem { position: s });
        }
        let mut rhs = vec![0u32; n];
        rhs[n - 1] = 1;
        let weights = system
            .solve_raw(&rhs)
            .ok_or(Error::SingularPlanSystem { position: s })?;

        let combo = spec.air.mul_vec_raw(&weights);
        let window = (1..=span)
            .filter_map(|o| {
                let b = combo[(s + o) % k_a];
                (b != 0).then_some((o, b))
            })
            .collect();
        entries.push(PlanEntry {
            position: s,
            weights,
            window,
        });
    }
    Ok(DecodingPlan {
        field,
        k_a,
        span,
        entries,
    })
}
