//! Reference corpus of known-good artifacts.
//!
//! Hand-checked AIR matrices, stacked encoding matrices, broadcast symbol
//! listings, decoding-sum tables, successive decoding traces and parameter
//! values, stored as plain data. [`verify`] rebuilds each one from scratch
//! and compares exactly.
//!
//! Four entries differ from the listings they were transcribed from, which
//! contain typos:
//!
//! - the 6x5 AIR matrix had an extra all-zero row; it is stored as six rows
//!   (identity, then all ones);
//! - in the `K=22, D=7, U=3` listing, `y10` inside `c1, c3, c5, c7` read
//!   `x20,1 + x21,1 + x0,2 + x1,2`; it is stored as `x20,1 + x21,1 + x18,2 + x19,2`;
//! - the `K_a=11` decoding table had `S0 = y0 + y3`; `c0 + c2` is `y0 + y2`;
//! - in the `K=11, D=5, U=2` listing, the last `y10` term of `c7` read
//!   `x9,3`; it is stored as `x8,3`.
//!
//! The corpus is a value, so tests can perturb entries and check that
//! verification notices.

use std::fmt;

use crate::air::air_matrix;
use crate::codec::{build_code, decoding_plan, LinearForm, MessageSymbol};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::problem::{ProblemParams, Rate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AirGolden {
    pub label: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingGolden {
    pub label: &'static str,
    pub params: (usize, usize, usize),
    pub matrix: Vec<Vec<u32>>,
}

/// Broadcast symbols written as sums of message symbols, e.g. `x0,1 + x7,2`.
/// Scalar codes may omit the component: `x0 + x5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListingGolden {
    pub label: &'static str,
    pub params: (usize, usize, usize),
    pub symbols: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanRow {
    pub position: usize,
    /// Broadcast symbols combined.
    pub tau: Vec<usize>,
    /// Positions of the `y` terms in the resulting sum.
    pub sum: Vec<usize>,
}

/// A decoding-sum table over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanTableGolden {
    pub label: &'static str,
    pub params: (usize, usize, usize),
    pub rows: Vec<PlanRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub receiver: usize,
    /// 1-based component.
    pub component: usize,
    pub sum_position: usize,
    /// The sum expanded over message symbols.
    pub expansion: String,
}

/// Which sum each receiver uses for each component, in decoding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceGolden {
    pub label: &'static str,
    pub params: (usize, usize, usize),
    pub rows: Vec<TraceRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamsGolden {
    pub label: &'static str,
    pub params: (usize, usize, usize),
    pub a: usize,
    pub dimension: usize,
    pub delta: usize,
    pub k_a: usize,
    pub length: usize,
    pub capacity: Rate,
    pub minimality_certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub air: Vec<AirGolden>,
    pub encoding: Vec<EncodingGolden>,
    pub listings: Vec<ListingGolden>,
    pub plans: Vec<PlanTableGolden>,
    pub traces: Vec<TraceGolden>,
    pub params: Vec<ParamsGolden>,
}

/// Outcome of one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.label)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn bits(rows: &[&str]) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| r.bytes().map(|b| (b - b'0') as u32).collect())
        .collect()
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn plan_rows(rows: &[(usize, &[usize], &[usize])]) -> Vec<PlanRow> {
    rows.iter()
        .map(|&(position, tau, sum)| PlanRow {
            position,
            tau: tau.to_vec(),
            sum: sum.to_vec(),
        })
        .collect()
}

impl Corpus {
    pub fn standard() -> Corpus {
        Corpus {
            air: air_corpus(),
            encoding: encoding_corpus(),
            listings: listing_corpus(),
            plans: plan_corpus(),
            traces: trace_corpus(),
            params: params_corpus(),
        }
    }
}

fn air_corpus() -> Vec<AirGolden> {
    let entry = |label, rows, cols, m: &[&str]| AirGolden {
        label,
        rows,
        cols,
        matrix: bits(m),
    };
    vec![
        entry(
            "air 8x7",
            8,
            7,
            &[
                "1000000", "0100000", "0010000", "0001000", "0000100", "0000010", "0000001",
                "1111111",
            ],
        ),
        entry(
            "air 11x9",
            11,
            9,
            &[
                "100000000",
                "010000000",
                "001000000",
                "000100000",
                "000010000",
                "000001000",
                "000000100",
                "000000010",
                "000000001",
                "101010101",
                "010101011",
            ],
        ),
        entry(
            "air 8x5",
            8,
            5,
            &[
                "10000", "01000", "00100", "00010", "00001", "10010", "01001", "00111",
            ],
        ),
        entry(
            "air 7x6",
            7,
            6,
            &[
                "100000", "010000", "001000", "000100", "000010", "000001", "111111",
            ],
        ),
        entry(
            "air 11x8",
            11,
            8,
            &[
                "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010",
                "00000001", "10010010", "01001001", "00100111",
            ],
        ),
        entry(
            "air 7x5",
            7,
            5,
            &[
                "10000", "01000", "00100", "00010", "00001", "10101", "01011",
            ],
        ),
        entry(
            "air 6x5 (corrected)",
            6,
            5,
            &["10000", "01000", "00100", "00010", "00001", "11111"],
        ),
        entry(
            "air 9x8",
            9,
            8,
            &[
                "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010",
                "00000001", "11111111",
            ],
        ),
    ]
}

fn encoding_corpus() -> Vec<EncodingGolden> {
    vec![
        EncodingGolden {
            label: "encoding 16x7 K=8 D=2 U=1",
            params: (8, 2, 1),
            matrix: bits(&[
                "1000000", "0100000", "0100000", "0010000", "0010000", "0001000", "0001000",
                "0000100", "0000100", "0000010", "0000010", "0000001", "0000001", "1111111",
                "1111111", "1000000",
            ]),
        },
        EncodingGolden {
            label: "encoding 44x9 K=22 D=7 U=3",
            params: (22, 7, 3),
            matrix: bits(&[
                "100000000",
                "010000000",
                "100000000",
                "010000000",
                "010000000",
                "001000000",
                "010000000",
                "001000000",
                "001000000",
                "000100000",
                "001000000",
                "000100000",
                "000100000",
                "000010000",
                "000100000",
                "000010000",
                "000010000",
                "000001000",
                "000010000",
                "000001000",
                "000001000",
                "000000100",
                "000001000",
                "000000100",
                "000000100",
                "000000010",
                "000000100",
                "000000010",
                "000000010",
                "000000001",
                "000000010",
                "000000001",
                "000000001",
                "101010101",
                "000000001",
                "101010101",
                "101010101",
                "010101011",
                "101010101",
                "010101011",
                "010101011",
                "100000000",
                "010101011",
                "100000000",
            ]),
        },
        EncodingGolden {
            label: "encoding 24x5 K=24 D=11 U=2",
            params: (24, 11, 2),
            matrix: bits(&[
                "10000", "10000", "10000", "01000", "01000", "01000", "00100", "00100", "00100",
                "00010", "00010", "00010", "00001", "00001", "00001", "10010", "10010", "10010",
                "01001", "01001", "01001", "00111", "00111", "00111",
            ]),
        },
    ]
}

fn listing_corpus() -> Vec<ListingGolden> {
    vec![
        ListingGolden {
            label: "listing K=8 D=2 U=1",
            params: (8, 2, 1),
            symbols: strings(&[
                "x0,1 + x7,2 + x7,1 + x6,2",
                "x1,1 + x0,2 + x7,1 + x6,2",
                "x2,1 + x1,2 + x7,1 + x6,2",
                "x3,1 + x2,2 + x7,1 + x6,2",
                "x4,1 + x3,2 + x7,1 + x6,2",
                "x5,1 + x4,2 + x7,1 + x6,2",
                "x6,1 + x5,2 + x7,1 + x6,2",
            ]),
        },
        ListingGolden {
            label: "listing K=22 D=7 U=3 (y10 corrected)",
            params: (22, 7, 3),
            symbols: strings(&[
                "x0,1 + x1,1 + x20,2 + x21,2 + x18,1 + x19,1 + x16,2 + x17,2",
                "x2,1 + x3,1 + x0,2 + x1,2 + x20,1 + x21,1 + x18,2 + x19,2",
                "x4,1 + x5,1 + x2,2 + x3,2 + x18,1 + x19,1 + x16,2 + x17,2",
                "x6,1 + x7,1 + x4,2 + x5,2 + x20,1 + x21,1 + x18,2 + x19,2",
                "x8,1 + x9,1 + x6,2 + x7,2 + x18,1 + x19,1 + x16,2 + x17,2",
                "x10,1 + x11,1 + x8,2 + x9,2 + x20,1 + x21,1 + x18,2 + x19,2",
                "x12,1 + x13,1 + x10,2 + x11,2 + x18,1 + x19,1 + x16,2 + x17,2",
                "x14,1 + x15,1 + x12,2 + x13,2 + x20,1 + x21,1 + x18,2 + x19,2",
                "x16,1 + x17,1 + x14,2 + x15,2 + x18,1 + x19,1 + x16,2 + x17,2 + x20,1 + x21,1 + x18,2 + x19,2",
            ]),
        },
        ListingGolden {
            label: "listing K=24 D=11 U=2",
            params: (24, 11, 2),
            symbols: strings(&[
                "x0 + x1 + x2 + x15 + x16 + x17",
                "x3 + x4 + x5 + x18 + x19 + x20",
                "x6 + x7 + x8 + x21 + x22 + x23",
                "x9 + x10 + x11 + x15 + x16 + x17 + x21 + x22 + x23",
                "x12 + x13 + x14 + x18 + x19 + x20 + x21 + x22 + x23",
            ]),
        },
        ListingGolden {
            label: "listing K=14 D=3 U=1",
            params: (14, 3, 1),
            symbols: strings(&[
                "x0 + x1 + x12 + x13",
                "x2 + x3 + x12 + x13",
                "x4 + x5 + x12 + x13",
                "x6 + x7 + x12 + x13",
                "x8 + x9 + x12 + x13",
                "x10 + x11 + x12 + x13",
            ]),
        },
        ListingGolden {
            label: "listing K=11 D=5 U=2 (c7 corrected)",
            params: (11, 5, 2),
            symbols: strings(&[
                "x0,1 + x10,2 + x9,3 + x8,1 + x7,2 + x6,3",
                "x1,1 + x0,2 + x10,3 + x9,1 + x8,2 + x7,3",
                "x2,1 + x1,2 + x0,3 + x10,1 + x9,2 + x8,3",
                "x3,1 + x2,2 + x1,3 + x8,1 + x7,2 + x6,3",
                "x4,1 + x3,2 + x2,3 + x9,1 + x8,2 + x7,3",
                "x5,1 + x4,2 + x3,3 + x10,1 + x9,2 + x8,3",
                "x6,1 + x5,2 + x4,3 + x8,1 + x7,2 + x6,3 + x10,1 + x9,2 + x8,3",
                "x7,1 + x6,2 + x5,3 + x9,1 + x8,2 + x7,3 + x10,1 + x9,2 + x8,3",
            ]),
        },
        ListingGolden {
            label: "listing K=7 D=2 U=0",
            params: (7, 2, 0),
            symbols: strings(&["x0 + x5", "x1 + x6", "x2 + x5", "x3 + x6", "x4 + x5 + x6"]),
        },
    ]
}

fn plan_corpus() -> Vec<PlanTableGolden> {
    vec![
        PlanTableGolden {
            label: "plan K=8 D=2 U=1",
            params: (8, 2, 1),
            rows: plan_rows(&[
                (0, &[0, 1], &[0, 1]),
                (1, &[1, 2], &[1, 2]),
                (2, &[2, 3], &[2, 3]),
                (3, &[3, 4], &[3, 4]),
                (4, &[4, 5], &[4, 5]),
                (5, &[5, 6], &[5, 6]),
                (6, &[6], &[6, 7]),
                (7, &[0], &[7, 0]),
            ]),
        },
        PlanTableGolden {
            label: "plan K=22 D=7 U=3 (S0 corrected)",
            params: (22, 7, 3),
            rows: plan_rows(&[
                (0, &[0, 2], &[0, 2]),
                (1, &[1, 3], &[1, 3]),
                (2, &[2, 4], &[2, 4]),
                (3, &[3, 5], &[3, 5]),
                (4, &[4, 6], &[4, 6]),
                (5, &[5, 7], &[5, 7]),
                (6, &[6, 7, 8], &[6, 7, 8]),
                (7, &[7, 8], &[7, 8, 9]),
                (8, &[8], &[8, 9, 10]),
                (9, &[0], &[0, 9]),
                (10, &[1], &[1, 10]),
            ]),
        },
    ]
}

fn trace_corpus() -> Vec<TraceGolden> {
    let row = |receiver, component, sum_position, expansion: &str| TraceRow {
        receiver,
        component,
        sum_position,
        expansion: expansion.to_string(),
    };
    vec![
        TraceGolden {
            label: "trace K=8 D=2 U=1 every receiver",
            params: (8, 2, 1),
            rows: vec![
                row(0, 2, 1, "x1,1 + x0,2 + x2,1 + x1,2"),
                row(0, 1, 0, "x0,1 + x7,2 + x1,1 + x0,2"),
                row(1, 2, 2, "x2,1 + x1,2 + x3,1 + x2,2"),
                row(1, 1, 1, "x1,1 + x0,2 + x2,1 + x1,2"),
                row(2, 2, 3, "x3,1 + x2,2 + x4,1 + x3,2"),
                row(2, 1, 2, "x2,1 + x1,2 + x3,1 + x2,2"),
                row(3, 2, 4, "x4,1 + x3,2 + x5,1 + x4,2"),
                row(3, 1, 3, "x3,1 + x2,2 + x4,1 + x3,2"),
                row(4, 2, 5, "x5,1 + x4,2 + x6,1 + x5,2"),
                row(4, 1, 4, "x4,1 + x3,2 + x5,1 + x4,2"),
                row(5, 2, 6, "x6,1 + x5,2 + x7,1 + x6,2"),
                row(5, 1, 5, "x5,1 + x4,2 + x6,1 + x5,2"),
                row(6, 2, 7, "x7,1 + x6,2 + x0,1 + x7,2"),
                row(6, 1, 6, "x6,1 + x5,2 + x7,1 + x6,2"),
                row(7, 2, 0, "x0,1 + x7,2 + x1,1 + x0,2"),
                row(7, 1, 7, "x7,1 + x6,2 + x0,1 + x7,2"),
            ],
        },
        TraceGolden {
            label: "trace K=22 D=7 U=3 receiver 14",
            params: (22, 7, 3),
            rows: vec![
                row(
                    14,
                    2,
                    8,
                    "x16,1 + x17,1 + x14,2 + x15,2 + x18,1 + x19,1 + x16,2 + x17,2 + x20,1 + x21,1 + x18,2 + x19,2",
                ),
                row(
                    14,
                    1,
                    7,
                    "x14,1 + x15,1 + x12,2 + x13,2 + x16,1 + x17,1 + x14,2 + x15,2 + x18,1 + x19,1 + x16,2 + x17,2",
                ),
            ],
        },
    ]
}

fn params_corpus() -> Vec<ParamsGolden> {
    let entry =
        |label, params, a, dimension, delta, k_a, length, capacity: (usize, usize), minimal| {
            ParamsGolden {
                label,
                params,
                a,
                dimension,
                delta,
                k_a,
                length,
                capacity: Rate::new(capacity.0, capacity.1),
                minimality_certified: minimal,
            }
        };
    vec![
        entry("params K=8 D=2 U=1", (8, 2, 1), 1, 2, 1, 8, 7, (2, 7), true),
        entry(
            "params K=22 D=7 U=3",
            (22, 7, 3),
            2,
            2,
            2,
            11,
            9,
            (4, 18),
            true,
        ),
        entry(
            "params K=24 D=11 U=2",
            (24, 11, 2),
            3,
            1,
            3,
            8,
            5,
            (3, 15),
            true,
        ),
        entry(
            "params K=14 D=3 U=1",
            (14, 3, 1),
            2,
            1,
            1,
            7,
            6,
            (2, 12),
            true,
        ),
        entry(
            "params K=11 D=5 U=2",
            (11, 5, 2),
            1,
            3,
            3,
            11,
            8,
            (3, 8),
            true,
        ),
        entry("params K=7 D=2 U=0", (7, 2, 0), 1, 1, 2, 7, 5, (1, 5), true),
        entry(
            "params K=12 D=5 U=3",
            (12, 5, 3),
            2,
            2,
            1,
            6,
            5,
            (4, 10),
            true,
        ),
        entry(
            "params K=27 D=8 U=5",
            (27, 8, 5),
            3,
            2,
            1,
            9,
            8,
            (6, 24),
            false,
        ),
    ]
}

/// Parses `x3,2 + x5,1` (or `x3 + x5` for component 1) into a form over `field`.
pub fn parse_expression(field: PrimeField, text: &str) -> Result<LinearForm> {
    let symbols = text
        .split('+')
        .map(|term| {
            let term = term.trim();
            let bad = || Error::Parse {
                line: 0,
                message: format!("bad message symbol `{term}`"),
            };
            let body = term.strip_prefix('x').ok_or_else(bad)?;
            let (m, i) = match body.split_once(',') {
                Some((m, i)) => (m, i),
                None => (body, "1"),
            };
            let message: usize = m.parse().map_err(|_| bad())?;
            let index: usize = i.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            Ok(MessageSymbol::new(message, index - 1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearForm::from_symbols(field, symbols))
}

fn problem(params: (usize, usize, usize)) -> Result<ProblemParams> {
    ProblemParams::new(params.0, params.1, params.2)
}

fn outcome(label: &str, result: Result<Option<String>>) -> Check {
    match result {
        Ok(None) => Check {
            label: label.to_string(),
            passed: true,
            detail: String::new(),
        },
        Ok(Some(detail)) => Check {
            label: label.to_string(),
            passed: false,
            detail,
        },
        Err(e) => Check {
            label: label.to_string(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn first_row_mismatch(got: &[Vec<u32>], want: &[Vec<u32>]) -> Option<String> {
    if got.len() != want.len() {
        return Some(format!("expected {} rows, built {}", want.len(), got.len()));
    }
    got.iter()
        .zip(want)
        .position(|(g, w)| g != w)
        .map(|r| format!("row {r}: expected {:?}, built {:?}", want[r], got[r]))
}

fn check_air(g: &AirGolden) -> Result<Option<String>> {
    let built = air_matrix(g.rows, g.cols)?;
    Ok(first_row_mismatch(&built.to_rows(), &g.matrix))
}

fn check_encoding(g: &EncodingGolden) -> Result<Option<String>> {
    let spec = build_code(problem(g.params)?, PrimeField::GF2)?;
    Ok(first_row_mismatch(
        &spec.encoding_matrix().to_rows(),
        &g.matrix,
    ))
}

fn check_listing(g: &ListingGolden) -> Result<Option<String>> {
    // GF(3) so that a doubled term shows up instead of cancelling.
    let field = PrimeField::new(3)?;
    let spec = build_code(problem(g.params)?, field)?;
    if spec.length() != g.symbols.len() {
        return Ok(Some(format!(
            "expected {} broadcast symbols, built {}",
            g.symbols.len(),
            spec.length()
        )));
    }
    for (j, text) in g.symbols.iter().enumerate() {
        let want = parse_expression(field, text)?;
        let got = spec.code_symbol_form(j);
        if got != want {
            return Ok(Some(format!("c{j}: expected {want}, built {got}")));
        }
    }
    Ok(None)
}

fn check_plan(g: &PlanTableGolden) -> Result<Option<String>> {
    let spec = build_code(problem(g.params)?, PrimeField::GF2)?;
    let plan = decoding_plan(&spec)?;
    let k_a = spec.derived().k_a;
    if g.rows.len() != k_a {
        return Ok(Some(format!(
            "expected {} rows, code has {k_a} positions",
            g.rows.len()
        )));
    }
    for row in &g.rows {
        let entry = plan.entry(row.position);
        let tau = entry.broadcast_set();
        if tau != row.tau {
            return Ok(Some(format!(
                "tau_{}: expected {:?}, built {tau:?}",
                row.position, row.tau
            )));
        }
        let mut sum: Vec<usize> = entry.y_terms(k_a).into_iter().map(|(p, _)| p).collect();
        let mut want = row.sum.clone();
        sum.sort_unstable();
        want.sort_unstable();
        if sum != want {
            return Ok(Some(format!(
                "S_{}: expected y{want:?}, built y{sum:?}",
                row.position
            )));
        }
    }
    Ok(None)
}

fn check_trace(g: &TraceGolden) -> Result<Option<String>> {
    let field = PrimeField::GF2;
    let spec = build_code(problem(g.params)?, field)?;
    let plan = decoding_plan(&spec)?;
    let d = spec.derived();
    for row in &g.rows {
        // The decoder recovers component c of receiver k from the sum at k / a + c.
        let position = (row.receiver / d.a + row.component - 1) % d.k_a;
        if position != row.sum_position {
            return Ok(Some(format!(
                "receiver {} component {}: expected S_{}, decoder uses S_{position}",
                row.receiver, row.component, row.sum_position
            )));
        }
        let mut got = LinearForm::default();
        for (p, coef) in plan.entry(position).y_terms(d.k_a) {
            for sym in spec.y_symbols(p) {
                got.add_term(field, sym, coef);
            }
        }
        let want = parse_expression(field, &row.expansion)?;
        if got != want {
            return Ok(Some(format!("S_{position}: expected {want}, built {got}")));
        }
    }
    Ok(None)
}

fn check_params(g: &ParamsGolden) -> Result<Option<String>> {
    let p = problem(g.params)?;
    let d = p.derive();
    let got = (d.a, d.dimension, d.delta, d.k_a, d.length);
    let want = (g.a, g.dimension, g.delta, g.k_a, g.length);
    if got != want {
        return Ok(Some(format!(
            "(a, u_a, delta, K_a, N): expected {want:?}, derived {got:?}"
        )));
    }
    if p.capacity() != g.capacity || d.rate() != g.capacity {
        return Ok(Some(format!(
            "capacity {} and rate {} should both be {}",
            p.capacity(),
            d.rate(),
            g.capacity
        )));
    }
    if p.minimality_certified() != g.minimality_certified {
        return Ok(Some(format!(
            "minimality certificate: expected {}, got {}",
            g.minimality_certified,
            p.minimality_certified()
        )));
    }
    Ok(None)
}

/// Rebuilds every corpus entry and reports one [`Check`] per entry.
pub fn verify(corpus: &Corpus) -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(corpus.air.iter().map(|g| outcome(g.label, check_air(g))));
    out.extend(
        corpus
            .encoding
            .iter()
            .map(|g| outcome(g.label, check_encoding(g))),
    );
    out.extend(
        corpus
            .listings
            .iter()
            .map(|g| outcome(g.label, check_listing(g))),
    );
    out.extend(corpus.plans.iter().map(|g| outcome(g.label, check_plan(g))));
    out.extend(
        corpus
            .traces
            .iter()
            .map(|g| outcome(g.label, check_trace(g))),
    );
    out.extend(
        corpus
            .params
            .iter()
            .map(|g| outcome(g.label, check_params(g))),
    );
    out
}
