//! Receiver-side decoding.
//!
//! [`receiver_decode`] is the successive cancellation decoder: receiver `k`
//! with `s = k / a` recovers its components last to first. Component `c` sits
//! in `z[s][c]`, which appears in `y[s + c]`, so the decoder evaluates the
//! planned sum for position `s + c`, cancels every term it already knows
//! (side-information and the components decoded in earlier steps), reads off
//! `z[s][c]`, and strips the other `a - 1` known symbols inside it.
//!
//! [`oracle_decode`] ignores all of that structure and solves the broadcast
//! equations for the unknown message symbols directly.

use std::collections::BTreeMap;

use super::{CodeSpec, DecodingPlan};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::FieldMatrix;

/// Message vectors a receiver already holds, keyed by message index.
pub type SideInformation = BTreeMap<usize, Vec<FieldElement>>;

/// One step of the successive decoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeStep {
    /// 0-based component recovered in this step.
    pub component: usize,
    /// Position of the decoding sum used.
    pub sum_position: usize,
    /// Broadcast symbols combined.
    pub broadcast: Vec<usize>,
    pub value: FieldElement,
}

/// Dense view of a receiver's side-information, validated against the
/// problem's side-information set.
struct Known {
    values: Vec<Option<Vec<u32>>>,
}

impl Known {
    fn new(k: usize, known: &SideInformation, spec: &CodeSpec) -> Result<Known> {
        let params = spec.params;
        let dimension = spec.derived.dimension;
        let expected = params.side_info(k)?;
        if let Some(&message) = expected.iter().find(|m| !known.contains_key(m)) {
            return Err(Error::MissingSideInformation {
                receiver: k,
                message,
            });
        }
        if let Some(&message) = known.keys().find(|m| !expected.contains(m)) {
            return Err(Error::UnexpectedSideInformation {
                receiver: k,
                message,
            });
        }
        let mut values = vec![None; params.messages()];
        for (&m, vector) in known {
            if vector.len() != dimension {
                return Err(Error::DimensionMismatch(format!(
                    "side-information x{m} has {} symbols, expected {dimension}",
                    vector.len()
                )));
            }
            let raw = vector
                .iter()
                .map(|e| {
                    if e.field() == spec.field {
                        Ok(e.value())
                    } else {
                        Err(Error::FieldMismatch {
                            left: spec.field.modulus(),
                            right: e.field().modulus(),
                        })
                    }
                })
                .collect::<Result<Vec<u32>>>()?;
            values[m] = Some(raw);
        }
        Ok(Known { values })
    }

    fn get(&self, message: usize, component: usize) -> Option<u32> {
        self.values[message].as_ref().map(|v| v[component])
    }

    fn contains(&self, message: usize) -> bool {
        self.values[message].is_some()
    }

    fn raw_codeword(field: PrimeField, codeword: &[FieldElement]) -> Result<Vec<u32>> {
        codeword
            .iter()
            .map(|e| {
                if e.field() == field {
                    Ok(e.value())
                } else {
                    Err(Error::FieldMismatch {
                        left: field.modulus(),
                        right: e.field().modulus(),
                    })
                }
            })
            .collect()
    }
}

/// Recovers `x_k` with the successive cancellation decoder.
pub fn receiver_decode(
    k: usize,
    codeword: &[FieldElement],
    known: &SideInformation,
    spec: &CodeSpec,
    plan: &DecodingPlan,
) -> Result<Vec<FieldElement>> {
    let steps = receiver_decode_traced(k, codeword, known, spec, plan)?;
    let mut out = vec![spec.field.zero(); spec.derived.dimension];
    for step in steps {
        out[step.component] = step.value;
    }
    Ok(out)
}

/// Like [`receiver_decode`], returning the steps in decoding order
/// (last component first).
pub fn receiver_decode_traced(
    k: usize,
    codeword: &[FieldElement],
    known: &SideInformation,
    spec: &CodeSpec,
    plan: &DecodingPlan,
) -> Result<Vec<DecodeStep>> {
    let f = spec.field;
    let d = spec.derived;
    if codeword.len() != d.length {
        return Err(Error::DimensionMismatch(format!(
            "codeword has {} symbols, expected {}",
            codeword.len(),
            d.length
        )));
    }
    if plan.k_a != d.k_a || plan.field != f {
        return Err(Error::ParamsMismatch);
    }
    let known = Known::new(k, known, spec)?;
    let cw = Known::raw_codeword(f, codeword)?;

    let s = k / d.a;
    let r = k % d.a;
    let mut decoded_z: Vec<Option<u32>> = vec![None; d.dimension];
    let mut steps = Vec::with_capacity(d.dimension);

    for component in (0..d.dimension).rev() {
        let t = (s + component) % d.k_a;
        let entry = plan.entry(t);
        let mut acc = entry
            .weights
            .iter()
            .zip(&cw)
            .fold(0, |acc, (&w, &c)| f.add_raw(acc, f.mul_raw(w, c)));

        for (pos, coef) in entry.y_terms(d.k_a) {
            for (c2, slot) in decoded_z.iter().enumerate() {
                let sigma = (pos + d.k_a * d.dimension - c2) % d.k_a;
                if sigma == s {
                    if c2 == component {
                        debug_assert_eq!(coef, 1);
                        continue;
                    }
                    // Interference from the receiver's own extended vector.
                    let z = slot.ok_or(Error::Interference {
                        receiver: k,
                        component,
                        message: k,
                        index: c2 + 1,
                    })?;
                    acc = f.sub_raw(acc, f.mul_raw(coef, z));
                } else {
                    for sym in spec.z_symbols(sigma, c2) {
                        let v = known.get(sym.message, c2).ok_or(Error::Interference {
                            receiver: k,
                            component,
                            message: sym.message,
                            index: c2 + 1,
                        })?;
                        acc = f.sub_raw(acc, f.mul_raw(coef, v));
                    }
                }
            }
        }
        decoded_z[component] = Some(acc);

        // z[s][c] = x_k[c] + the other a - 1 symbols of the block.
        let mut x = acc;
        for j in (0..d.a).filter(|&j| j != r) {
            let v = known
                .get(d.a * s + j, component)
                .ok_or(Error::Interference {
                    receiver: k,
                    component,
                    message: d.a * s + j,
                    index: component + 1,
                })?;
            x = f.sub_raw(x, v);
        }
        steps.push(DecodeStep {
            component,
            sum_position: t,
            broadcast: entry.broadcast_set(),
            value: f.element(x as u64),
        });
    }
    Ok(steps)
}

/// Recovers `x_k` by solving the broadcast equations over all unknown
/// message symbols, treating side-information as constants.
///
/// `codeword` may be a prefix of the full codeword; only the symbols present
/// are used as equations.
pub fn oracle_decode(
    k: usize,
    codeword: &[FieldElement],
    known: &SideInformation,
    spec: &CodeSpec,
) -> Result<Vec<FieldElement>> {
    let f = spec.field;
    let dimension = spec.derived.dimension;
    let n = codeword.len();
    if n > spec.derived.length {
        return Err(Error::DimensionMismatch(format!(
            "codeword has {n} symbols, code length is {}",
            spec.derived.length
        )));
    }
    let known = Known::new(k, known, spec)?;
    let cw = Known::raw_codeword(f, codeword)?;
    let e = &spec.encoding;

    let unknown: Vec<usize> = (0..spec.params.messages())
        .filter(|&m| !known.contains(m))
        .collect();
    let vars = unknown.len() * dimension;
    let var_of = |m: usize, c: usize| {
        unknown
            .iter()
            .position(|&u| u == m)
            .map(|p| p * dimension + c)
    };

    let mut system = FieldMatrix::zeros(f, n, vars);
    let mut rhs = cw.clone();
    for (j, rhs_j) in rhs.iter_mut().enumerate() {
        for m in 0..spec.params.messages() {
            for c in 0..dimension {
                let coef = e.raw(m * dimension + c, j);
                if coef == 0 {
                    continue;
                }
                match known.get(m, c) {
                    Some(v) => *rhs_j = f.sub_raw(*rhs_j, f.mul_raw(coef, v)),
                    None => system.set_raw(j, var_of(m, c).expect("unknown message"), coef),
                }
            }
        }
    }

    let solution = system
        .solve_raw(&rhs)
        .ok_or(Error::NotDecodable { receiver: k })?;
    let rank = system.rank();
    let mut out = Vec::with_capacity(dimension);
    for c in 0..dimension {
        let v = var_of(k, c).expect("wanted message is unknown");
        // x_k[c] is pinned down iff the unit vector e_v lies in the row space.
        let mut probe = FieldMatrix::zeros(f, n + 1, vars);
        for j in 0..n {
            for col in 0..vars {
                probe.set_raw(j, col, system.raw(j, col));
            }
        }
        probe.set_raw(n, v, 1);
        if probe.rank() != rank {
            return Err(Error::NotDecodable { receiver: k });
        }
        out.push(f.element(solution[v] as u64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use rand_core::SeedableRng;
    use rand_xoshiro::SplitMix64;

    use super::*;
    use crate::codec::{build_code, decoding_plan, encode, MessageBlock, MessageSymbol};
    use crate::problem::ProblemParams;

    fn setup(
        k: usize,
        d: usize,
        u: usize,
        q: u32,
        seed: u64,
    ) -> (CodeSpec, DecodingPlan, MessageBlock, Vec<FieldElement>) {
        let params = ProblemParams::new(k, d, u).unwrap();
        let field = PrimeField::new(q).unwrap();
        let spec = build_code(params, field).unwrap();
        let plan = decoding_plan(&spec).unwrap();
        let mut rng = SplitMix64::seed_from_u64(seed);
        let msgs = MessageBlock::random(params, field, &mut rng);
        let cw = encode(&msgs, &spec).unwrap();
        (spec, plan, msgs, cw)
    }

    #[test]
    fn receiver_fourteen_uses_sums_eight_then_seven() {
        let (spec, plan, msgs, cw) = setup(22, 7, 3, 2, 11);
        let known = msgs.side_information(14).unwrap();
        let steps = receiver_decode_traced(14, &cw, &known, &spec, &plan).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!((steps[0].component, steps[0].sum_position), (1, 8));
        assert_eq!((steps[1].component, steps[1].sum_position), (0, 7));
        assert_eq!(steps[0].value, msgs.get(14, 1));
        assert_eq!(steps[1].value, msgs.get(14, 0));
    }

    #[test]
    fn receiver_zero_k8() {
        let (spec, plan, msgs, cw) = setup(8, 2, 1, 2, 3);
        let known = msgs.side_information(0).unwrap();
        let steps = receiver_decode_traced(0, &cw, &known, &spec, &plan).unwrap();
        assert_eq!(steps[0].sum_position, 1);
        assert_eq!(steps[0].broadcast, vec![1, 2]);
        assert_eq!(steps[1].sum_position, 0);
        assert_eq!(
            receiver_decode(0, &cw, &known, &spec, &plan).unwrap(),
            msgs.vector(0)
        );
    }

    #[test]
    fn scalar_one_sided_matches_oracle() {
        for seed in 0..20 {
            let (spec, plan, msgs, cw) = setup(4, 1, 0, 2, seed);
            for k in 0..4 {
                let known = msgs.side_information(k).unwrap();
                let got = receiver_decode(k, &cw, &known, &spec, &plan).unwrap();
                assert_eq!(got, msgs.vector(k));
                assert_eq!(oracle_decode(k, &cw, &known, &spec).unwrap(), got);
            }
        }
    }

    #[test]
    fn oracle_recovers_every_receiver_over_gf3() {
        let (spec, _, msgs, cw) = setup(8, 2, 1, 3, 5);
        for k in 0..8 {
            let known = msgs.side_information(k).unwrap();
            assert_eq!(
                oracle_decode(k, &cw, &known, &spec).unwrap(),
                msgs.vector(k)
            );
        }
    }

    #[test]
    fn truncated_codeword_is_not_decodable_somewhere() {
        let (spec, _, msgs, cw) = setup(8, 2, 1, 3, 5);
        let short = &cw[..cw.len() - 1];
        let failures = (0..8)
            .filter(|&k| {
                let known = msgs.side_information(k).unwrap();
                matches!(oracle_decode(k, short, &known, &spec), Err(Error::NotDecodable { receiver }) if receiver == k)
            })
            .count();
        assert!(failures > 0);
    }

    #[test]
    fn missing_and_extra_side_information() {
        let (spec, plan, msgs, cw) = setup(8, 2, 1, 2, 1);
        let mut known = msgs.side_information(0).unwrap();
        known.remove(&2);
        assert_eq!(
            receiver_decode(0, &cw, &known, &spec, &plan),
            Err(Error::MissingSideInformation {
                receiver: 0,
                message: 2
            })
        );
        let mut known = msgs.side_information(0).unwrap();
        known.insert(0, msgs.vector(0));
        assert_eq!(
            oracle_decode(0, &cw, &known, &spec),
            Err(Error::UnexpectedSideInformation {
                receiver: 0,
                message: 0
            })
        );
    }

    #[test]
    fn wrong_codeword_length_rejected() {
        let (spec, plan, msgs, cw) = setup(8, 2, 1, 2, 1);
        let known = msgs.side_information(0).unwrap();
        assert!(matches!(
            receiver_decode(0, &cw[..6], &known, &spec, &plan),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn side_information_covers_interference() {
        for (k, d, u) in [
            (8, 2, 1),
            (22, 7, 3),
            (24, 11, 2),
            (27, 8, 5),
            (12, 5, 3),
            (11, 5, 2),
            (3, 1, 1),
        ] {
            let (spec, _, _, _) = setup(k, d, u, 2, 0);
            let params = spec.params();
            let der = spec.derived();
            for r in 0..k {
                let s = r / der.a;
                let si = params.side_info(r).unwrap();
                let foreign = |sym: &MessageSymbol| sym.message != r;
                for sym in spec.y_symbols(s).iter().filter(|x| foreign(x)) {
                    assert!(si.contains(&sym.message), "obs 1: K={k} r={r} {sym}");
                }
                for off in 1..=der.span() {
                    for sym in spec
                        .y_symbols((s + off) % der.k_a)
                        .iter()
                        .filter(|x| foreign(x))
                    {
                        assert!(si.contains(&sym.message), "obs 2: K={k} r={r} {sym}");
                    }
                }
            }
        }
    }
}
