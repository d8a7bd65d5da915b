//! Stable serializations of problem summaries and full code descriptions.
//!
//! The text form is a flat list of `key = value` lines in a fixed order.
//! Matrices are written one row per key (`air[3] = 1 0 0 1`) and plan
//! windows as `offset:coefficient` pairs. The JSON form has the same fields.
//! Both forms parse back to an equal value, and parsing then re-serializing
//! reproduces the input.

use serde::{Deserialize, Serialize};

use crate::codec::{build_code, decoding_plan, CodeSpec, DecodingPlan, PlanEntry};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::FieldMatrix;
use crate::problem::{ProblemParams, Rate};

pub const BOUNDARY_WARNING: &str =
    "U+D = K-1: every other message is side-information, so the code is uncoded transmission at rate 1";

/// Parameters, rate and certificate for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub k: usize,
    pub d: usize,
    pub u: usize,
    pub a: usize,
    pub dimension: usize,
    pub delta: usize,
    pub k_a: usize,
    pub length: usize,
    pub capacity: Rate,
    pub rate: Rate,
    pub minimality_certified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl Summary {
    pub fn new(params: ProblemParams) -> Summary {
        let d = params.derive();
        Summary {
            k: params.messages(),
            d: params.after(),
            u: params.before(),
            a: d.a,
            dimension: d.dimension,
            delta: d.delta,
            k_a: d.k_a,
            length: d.length,
            capacity: params.capacity(),
            rate: d.rate(),
            minimality_certified: params.minimality_certified(),
            warning: params.is_boundary().then(|| BOUNDARY_WARNING.to_string()),
        }
    }

    pub fn params(&self) -> Result<ProblemParams> {
        ProblemParams::new(self.k, self.d, self.u)
    }

    pub fn to_text(&self) -> String {
        let mut w = Writer::default();
        self.write(&mut w);
        w.0
    }

    pub fn parse_text(text: &str) -> Result<Summary> {
        let mut r = Reader::new(text)?;
        let summary = Summary::read(&mut r)?;
        r.finish()?;
        Ok(summary)
    }

    fn write(&self, w: &mut Writer) {
        w.put("k", self.k);
        w.put("d", self.d);
        w.put("u", self.u);
        w.put("a", self.a);
        w.put("dimension", self.dimension);
        w.put("delta", self.delta);
        w.put("k_a", self.k_a);
        w.put("length", self.length);
        w.put("capacity", self.capacity);
        w.put("rate", self.rate);
        w.put("minimality_certified", self.minimality_certified);
        if let Some(warning) = &self.warning {
            w.put("warning", warning);
        }
    }

    fn read(r: &mut Reader) -> Result<Summary> {
        Ok(Summary {
            k: r.parse("k")?,
            d: r.parse("d")?,
            u: r.parse("u")?,
            a: r.parse("a")?,
            dimension: r.parse("dimension")?,
            delta: r.parse("delta")?,
            k_a: r.parse("k_a")?,
            length: r.parse("length")?,
            capacity: r.parse("capacity")?,
            rate: r.parse("rate")?,
            minimality_certified: r.parse("minimality_certified")?,
            warning: r.optional("warning").map(str::to_string),
        })
    }
}

/// Everything needed to encode and decode: parameters, field, AIR matrix,
/// encoding matrix, broadcast symbols and per-position decoding plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescription {
    #[serde(flatten)]
    pub summary: Summary,
    pub q: u32,
    /// Each broadcast symbol as a sum of message symbols.
    pub symbols: Vec<String>,
    pub air: Vec<Vec<u32>>,
    pub encoding: Vec<Vec<u32>>,
    pub plan: Vec<PlanEntry>,
}

impl CodeDescription {
    pub fn new(spec: &CodeSpec, plan: &DecodingPlan) -> CodeDescription {
        CodeDescription {
            summary: Summary::new(spec.params()),
            q: spec.field().modulus(),
            symbols: (0..spec.length())
                .map(|j| spec.code_symbol_form(j).to_string())
                .collect(),
            air: spec.air().to_rows(),
            encoding: spec.encoding_matrix().to_rows(),
            plan: plan.entries.clone(),
        }
    }

    /// Builds the code for `(K, D, U)` over `field` and describes it.
    pub fn generate(params: ProblemParams, field: PrimeField) -> Result<CodeDescription> {
        let spec = build_code(params, field)?;
        let plan = decoding_plan(&spec)?;
        Ok(CodeDescription::new(&spec, &plan))
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.q)
    }

    pub fn air_matrix(&self) -> Result<FieldMatrix> {
        FieldMatrix::from_rows(self.field()?, &widen(&self.air))
    }

    pub fn encoding_matrix(&self) -> Result<FieldMatrix> {
        FieldMatrix::from_rows(self.field()?, &widen(&self.encoding))
    }

    pub fn to_text(&self) -> String {
        let mut w = Writer::default();
        self.summary.write(&mut w);
        w.put("q", self.q);
        w.put("symbols", self.symbols.len());
        for (j, s) in self.symbols.iter().enumerate() {
            w.put(&format!("c[{j}]"), s);
        }
        w.matrix("air", &self.air);
        w.matrix("encoding", &self.encoding);
        for e in &self.plan {
            let s = e.position;
            w.put(&format!("plan[{s}].weights"), join(&e.weights));
            let window: Vec<String> = e.window.iter().map(|(o, b)| format!("{o}:{b}")).collect();
            w.put(&format!("plan[{s}].window"), window.join(" "));
        }
        w.0
    }

    pub fn parse_text(text: &str) -> Result<CodeDescription> {
        let mut r = Reader::new(text)?;
        let summary = Summary::read(&mut r)?;
        let q = r.parse("q")?;
        let count: usize = r.parse("symbols")?;
        let symbols = (0..count)
            .map(|j| r.take(&format!("c[{j}]")).map(str::to_string))
            .collect::<Result<Vec<_>>>()?;
        let air = r.matrix("air")?;
        let encoding = r.matrix("encoding")?;
        let plan = (0..summary.k_a)
            .map(|s| {
                let weights = r.numbers(&format!("plan[{s}].weights"))?;
                let key = format!("plan[{s}].window");
                let line = r.line;
                let window = r
                    .take(&key)?
                    .split_whitespace()
                    .map(|pair| {
                        let parsed = pair
                            .split_once(':')
                            .and_then(|(o, b)| Some((o.parse().ok()?, b.parse().ok()?)));
                        parsed.ok_or_else(|| Error::Parse {
                            line,
                            message: format!("`{pair}` is not an offset:coefficient pair"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(PlanEntry {
                    position: s,
                    weights,
                    window,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        r.finish()?;
        Ok(CodeDescription {
            summary,
            q,
            symbols,
            air,
            encoding,
            plan,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptions always serialize") + "\n"
    }

    pub fn parse_json(text: &str) -> Result<CodeDescription> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

fn widen(rows: &[Vec<u32>]) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| v as u64).collect())
        .collect()
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Default)]
struct Writer(String);

impl Writer {
    fn put(&mut self, key: &str, value: impl std::fmt::Display) {
        let value = value.to_string();
        if value.is_empty() {
            self.0.push_str(&format!("{key} =\n"));
        } else {
            self.0.push_str(&format!("{key} = {value}\n"));
        }
    }

    fn matrix(&mut self, name: &str, rows: &[Vec<u32>]) {
        self.put(&format!("{name}.rows"), rows.len());
        self.put(&format!("{name}.cols"), rows.first().map_or(0, Vec::len));
        for (i, row) in rows.iter().enumerate() {
            self.put(&format!("{name}[{i}]"), join(row));
        }
    }
}

/// Consumes `key = value` lines in the order the writer produced them.
struct Reader<'a> {
    entries: Vec<(usize, &'a str, &'a str)>,
    next: usize,
    line: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let (key, value) = raw.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: "expected `key = value`".to_string(),
            })?;
            entries.push((i + 1, key.trim(), value.trim()));
        }
        Ok(Reader {
            entries,
            next: 0,
            line: 0,
        })
    }

    fn take(&mut self, key: &str) -> Result<&'a str> {
        match self.entries.get(self.next) {
            Some(&(line, k, v)) if k == key => {
                self.next += 1;
                self.line = line;
                Ok(v)
            }
            Some(&(line, k, _)) => Err(Error::Parse {
                line,
                message: format!("expected key `{key}`, found `{k}`"),
            }),
            None => Err(Error::Parse {
                line: self.line + 1,
                message: format!("missing key `{key}`"),
            }),
        }
    }

    fn optional(&mut self, key: &str) -> Option<&'a str> {
        match self.entries.get(self.next) {
            Some(&(_, k, _)) if k == key => self.take(key).ok(),
            _ => None,
        }
    }

    fn parse<T: std::str::FromStr>(&mut self, key: &str) -> Result<T> {
        let value = self.take(key)?;
        value.parse().map_err(|_| Error::Parse {
            line: self.line,
            message: format!("bad value `{value}` for `{key}`"),
        })
    }

    fn numbers(&mut self, key: &str) -> Result<Vec<u32>> {
        let value = self.take(key)?;
        value
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: self.line,
                    message: format!("`{t}` in `{key}` is not a nonnegative integer"),
                })
            })
            .collect()
    }

    fn matrix(&mut self, name: &str) -> Result<Vec<Vec<u32>>> {
        let rows: usize = self.parse(&format!("{name}.rows"))?;
        let cols: usize = self.parse(&format!("{name}.cols"))?;
        (0..rows)
            .map(|i| {
                let row = self.numbers(&format!("{name}[{i}]"))?;
                if row.len() != cols {
                    return Err(Error::Parse {
                        line: self.line,
                        message: format!("{name}[{i}] has {} entries, expected {cols}", row.len()),
                    });
                }
                Ok(row)
            })
            .collect()
    }

    fn finish(&self) -> Result<()> {
        match self.entries.get(self.next) {
            None => Ok(()),
            Some(&(line, k, _)) => Err(Error::Parse {
                line,
                message: format!("unexpected key `{k}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn describe(k: usize, d: usize, u: usize, q: u32) -> CodeDescription {
        CodeDescription::generate(
            ProblemParams::new(k, d, u).unwrap(),
            PrimeField::new(q).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn scalar_one_sided_symbols() {
        let desc = describe(7, 2, 0, 2);
        assert_eq!(desc.summary.length, 5);
        assert_eq!(
            desc.symbols,
            [
                "x0,1 + x5,1",
                "x1,1 + x6,1",
                "x2,1 + x5,1",
                "x3,1 + x6,1",
                "x4,1 + x5,1 + x6,1"
            ]
        );
        assert_eq!(desc.air.len(), 7);
    }

    #[test]
    fn summary_text() {
        let s = Summary::new(ProblemParams::new(8, 2, 1).unwrap());
        let text = s.to_text();
        assert!(text.starts_with("k = 8\nd = 2\nu = 1\n"));
        assert!(text.contains("capacity = 2/7\n"));
        assert!(text.contains("minimality_certified = true\n"));
        assert!(!text.contains("warning"));
        assert_eq!(Summary::parse_text(&text).unwrap(), s);
    }

    #[test]
    fn boundary_has_warning() {
        let desc = describe(3, 1, 1, 2);
        assert_eq!(desc.summary.rate, Rate::new(1, 1));
        assert!(desc.summary.warning.is_some());
        let text = desc.to_text();
        assert_eq!(CodeDescription::parse_text(&text).unwrap().to_text(), text);
    }

    #[test]
    fn text_and_json_round_trip() {
        for (k, d, u, q) in [
            (8, 2, 1, 2),
            (22, 7, 3, 3),
            (24, 11, 2, 5),
            (1, 0, 0, 2),
            (5, 2, 2, 2),
        ] {
            let desc = describe(k, d, u, q);
            let text = desc.to_text();
            let parsed = CodeDescription::parse_text(&text).unwrap();
            assert_eq!(parsed, desc);
            assert_eq!(parsed.to_text(), text);
            let json = desc.to_json();
            let parsed = CodeDescription::parse_json(&json).unwrap();
            assert_eq!(parsed, desc);
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn matrices_rebuild() {
        let desc = describe(8, 2, 1, 2);
        let spec = build_code(ProblemParams::new(8, 2, 1).unwrap(), PrimeField::GF2).unwrap();
        assert_eq!(&desc.encoding_matrix().unwrap(), spec.encoding_matrix());
        assert_eq!(&desc.air_matrix().unwrap(), spec.air());
    }

    #[test]
    fn parse_errors() {
        let text = describe(8, 2, 1, 2).to_text();
        let swapped = text.replacen("d = 2\nu = 1", "u = 1\nd = 2", 1);
        assert!(CodeDescription::parse_text(&swapped).is_err());
        let extra = format!("{text}extra = 1\n");
        assert!(CodeDescription::parse_text(&extra).is_err());
        let short = text.replacen("air[2] = 0 0 1 0 0 0 0", "air[2] = 0 0 1", 1);
        assert!(matches!(
            CodeDescription::parse_text(&short),
            Err(Error::Parse { .. })
        ));
        assert!(CodeDescription::parse_text("k 8").is_err());
    }
}
