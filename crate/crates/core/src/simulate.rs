//! Randomized end-to-end rounds: draw messages, broadcast, decode everywhere.
//!
//! Messages come from SplitMix64 seeded with the given seed (state = seed,
//! increment `0x9e3779b97f4a7c15`, the standard output mixer). Symbols are
//! drawn with [`uniform_symbol`](crate::codec::uniform_symbol) in trial order,
//! then message order, then component order. Any implementation of that
//! generator and rejection rule reproduces the same message blocks.

use std::fmt::Write as _;

use rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::codec::{
    build_code, decoding_plan, encode, oracle_decode, receiver_decode, MessageBlock,
};
use crate::error::Result;
use crate::field::{FieldElement, PrimeField};
use crate::problem::{ProblemParams, Rate};

/// One receiver that did not get its planted message back, or whose two
/// decoders disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub receiver: usize,
    pub expected: Vec<u32>,
    /// Output of the successive decoder, if it produced one.
    pub got: Option<Vec<u32>>,
    /// Output of the oracle, if it produced one.
    pub oracle: Option<Vec<u32>>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub k: usize,
    pub d: usize,
    pub u: usize,
    pub q: u32,
    pub trials: usize,
    pub seed: u64,
    pub code_length: usize,
    pub rate: Rate,
    pub capacity: Rate,
    pub decoded: usize,
    pub failures: Vec<Failure>,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "k = {}", self.k);
        let _ = writeln!(s, "d = {}", self.d);
        let _ = writeln!(s, "u = {}", self.u);
        let _ = writeln!(s, "q = {}", self.q);
        let _ = writeln!(s, "trials = {}", self.trials);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "code_length = {}", self.code_length);
        let _ = writeln!(s, "rate = {}", self.rate);
        let _ = writeln!(s, "capacity = {}", self.capacity);
        let _ = writeln!(s, "decoded = {}", self.decoded);
        let _ = writeln!(s, "failures = {}", self.failures.len());
        for f in &self.failures {
            let show =
                |v: &Option<Vec<u32>>| v.as_ref().map_or("-".to_string(), |v| format!("{v:?}"));
            let _ = writeln!(
                s,
                "failure = trial {} receiver {} expected {:?} got {} oracle {}: {}",
                f.trial,
                f.receiver,
                f.expected,
                show(&f.got),
                show(&f.oracle),
                f.reason
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }
}

fn values(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|e| e.value()).collect()
}

/// Runs `trials` rounds and decodes at every receiver with both decoders.
pub fn simulate(
    params: ProblemParams,
    field: PrimeField,
    trials: usize,
    seed: u64,
) -> Result<SimulationReport> {
    let spec = build_code(params, field)?;
    let plan = decoding_plan(&spec)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut decoded = 0;

    for trial in 0..trials {
        let messages = MessageBlock::random(params, field, &mut rng);
        let codeword = encode(&messages, &spec)?;
        for k in 0..params.messages() {
            let known = messages.side_information(k)?;
            let expected = values(&messages.vector(k));
            let got = receiver_decode(k, &codeword, &known, &spec, &plan);
            let oracle = oracle_decode(k, &codeword, &known, &spec);
            let reason = match (&got, &oracle) {
                (Err(e), _) => Some(format!("receiver decoder: {e}")),
                (_, Err(e)) => Some(format!("oracle: {e}")),
                (Ok(g), _) if values(g) != expected => {
                    Some("receiver decoder output differs".to_string())
                }
                (_, Ok(o)) if values(o) != expected => Some("oracle output differs".to_string()),
                _ => None,
            };
            match reason {
                None => decoded += 1,
                Some(reason) => failures.push(Failure {
                    trial,
                    receiver: k,
                    expected,
                    got: got.ok().map(|v| values(&v)),
                    oracle: oracle.ok().map(|v| values(&v)),
                    reason,
                }),
            }
        }
    }

    let derived = params.derive();
    Ok(SimulationReport {
        k: params.messages(),
        d: params.after(),
        u: params.before(),
        q: field.modulus(),
        trials,
        seed,
        code_length: derived.length,
        rate: derived.rate(),
        capacity: params.capacity(),
        decoded,
        failures,
    })
}
