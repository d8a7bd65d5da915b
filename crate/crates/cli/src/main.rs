//! `sncs`: build, run and check index codes for symmetric neighboring
//! consecutive side-information.
//!
//! Exit status is 0 on success, 1 for usage and input errors, and 2 when a
//! verification (AIR check, decode check, simulation, golden corpus) fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sncs_core::air::{air_matrix_in, verify_air};
use sncs_core::codec::{
    build_code, decoding_plan, encode, oracle_decode, receiver_decode, SideInformation,
};
use sncs_core::describe::{CodeDescription, Summary};
use sncs_core::field::PrimeField;
use sncs_core::formats::{CodewordFile, Header, MessageFile};
use sncs_core::golden::{verify, Corpus};
use sncs_core::problem::ProblemParams;
use sncs_core::simulate::simulate;

const USAGE_ERROR: u8 = 1;
const VERIFICATION_FAILED: u8 = 2;

#[derive(Parser)]
#[command(
    name = "sncs",
    version,
    about = "Vector linear index codes for symmetric neighboring consecutive side-information"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Capacity, derived parameters and minimality certificate.
    Capacity {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an AIR matrix, optionally checking its adjacent-row property.
    Air {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Field to print the matrix in.
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Check that every `cols` cyclically adjacent rows are independent.
        #[arg(long)]
        verify: bool,
        /// Fields to check, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        fields: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Describe the code: matrices, broadcast symbols and decoding plan.
    Generate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Encode a message file into a codeword file.
    Encode {
        /// Message file: header `q K D U`, then one line of values per message.
        #[arg(long)]
        messages: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Decode a codeword at the receivers whose side-information is known.
    ///
    /// Unknown messages are written `*` in the message file. Without
    /// `--receiver`, every receiver whose side-information is fully known is
    /// decoded and the result is written as a message file; a decoded value
    /// that contradicts a known line is a verification failure.
    Decode {
        #[arg(long)]
        codeword: PathBuf,
        #[arg(long)]
        known: PathBuf,
        /// Decode only this receiver.
        #[arg(long)]
        receiver: Option<usize>,
        /// Use the linear-algebra oracle instead of the successive decoder.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Random broadcast rounds decoded at every receiver by both decoders.
    Simulate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rebuild every worked example and compare with the transcribed values.
    VerifyExamples {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Number of messages and receivers.
    #[arg(long)]
    k: usize,
    /// Messages known after the wanted one.
    #[arg(long)]
    d: usize,
    /// Messages known before the wanted one.
    #[arg(long)]
    u: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<ProblemParams> {
        Ok(ProblemParams::new(self.k, self.d, self.u)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Either plain output or a verification failure carrying its output.
enum Outcome {
    Ok(String),
    Failed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            ExitCode::from(VERIFICATION_FAILED)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn field(q: u32) -> Result<PrimeField> {
    PrimeField::new(q).with_context(|| format!("--q {q}"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Writes to `output` if given, otherwise returns the text for stdout.
fn emit(text: String, output: Option<&Path>) -> Result<String> {
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn json_line(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Capacity { params, format } => {
            let summary = Summary::new(params.params()?);
            Ok(Outcome::Ok(match format {
                Format::Text => summary.to_text(),
                Format::Json => json_line(serde_json::to_value(&summary)?),
            }))
        }
        Command::Air {
            rows,
            cols,
            q,
            verify,
            fields,
            format,
        } => air(rows, cols, q, verify.then_some(fields.as_slice()), format),
        Command::Generate {
            params,
            q,
            format,
            output,
        } => {
            let desc = CodeDescription::generate(params.params()?, field(q)?)?;
            if let Some(warning) = &desc.summary.warning {
                eprintln!("warning: {warning}");
            }
            let text = match format {
                Format::Text => desc.to_text(),
                Format::Json => desc.to_json(),
            };
            Ok(Outcome::Ok(emit(text, output.as_deref())?))
        }
        Command::Encode { messages, output } => {
            let file = MessageFile::parse(&read(&messages)?)?;
            let block = file.to_block()?;
            let spec = build_code(file.header.params, file.header.field)?;
            let codeword = encode(&block, &spec)?;
            let text = CodewordFile::new(file.header, &codeword).to_text();
            Ok(Outcome::Ok(emit(text, output.as_deref())?))
        }
        Command::Decode {
            codeword,
            known,
            receiver,
            oracle,
            format,
            output,
        } => {
            let codeword = CodewordFile::parse(&read(&codeword)?)?;
            let known = MessageFile::parse(&read(&known)?)?;
            decode(
                &codeword,
                &known,
                receiver,
                oracle,
                format,
                output.as_deref(),
            )
        }
        Command::Simulate {
            params,
            q,
            trials,
            seed,
            format,
        } => {
            let report = simulate(params.params()?, field(q)?, trials, seed)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            Ok(if report.passed() {
                Outcome::Ok(text)
            } else {
                Outcome::Failed(text)
            })
        }
        Command::VerifyExamples { format } => {
            let checks = verify(&Corpus::standard());
            let failed = checks.iter().filter(|c| !c.passed).count();
            let text = match format {
                Format::Text => {
                    let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                    s.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
                    s
                }
                Format::Json => json_line(json!({
                    "checks": checks
                        .iter()
                        .map(|c| json!({"label": c.label, "passed": c.passed, "detail": c.detail}))
                        .collect::<Vec<_>>(),
                    "failed": failed,
                })),
            };
            Ok(if failed == 0 {
                Outcome::Ok(text)
            } else {
                Outcome::Failed(text)
            })
        }
    }
}

fn air(
    rows: usize,
    cols: usize,
    q: u32,
    verify_fields: Option<&[u32]>,
    format: Format,
) -> Result<Outcome> {
    let matrix = air_matrix_in(field(q)?, rows, cols)?;
    let verdict = match verify_fields {
        Some(qs) => {
            let fields = qs.iter().map(|&q| field(q)).collect::<Result<Vec<_>>>()?;
            Some(verify_air(rows, cols, &fields)?)
        }
        None => None,
    };
    let fields = verify_fields.unwrap_or(&[]);
    let text = match format {
        Format::Text => {
            let mut s = matrix.to_text();
            if let Some(ok) = verdict {
                let names: Vec<String> = fields.iter().map(|q| format!("GF({q})")).collect();
                let word = if ok { "pass" } else { "fail" };
                s.push_str(&format!("verify: {word} over {}\n", names.join(", ")));
            }
            s
        }
        Format::Json => json_line(json!({
            "rows": rows,
            "cols": cols,
            "q": q,
            "matrix": matrix.to_rows(),
            "verified": verdict,
            "fields": verdict.map(|_| fields),
        })),
    };
    Ok(match verdict {
        Some(false) => Outcome::Failed(text),
        _ => Outcome::Ok(text),
    })
}

/// Side-information for receiver `k`, if every message it needs is known.
fn side_information(known: &MessageFile, k: usize) -> Result<Option<SideInformation>> {
    let mut map = SideInformation::new();
    let field = known.header.field;
    for m in known.header.params.side_info(k)? {
        match &known.rows[m] {
            Some(values) => {
                map.insert(m, values.iter().map(|&v| field.element(v as u64)).collect());
            }
            None => return Ok(None),
        }
    }
    Ok(Some(map))
}

fn decode(
    codeword: &CodewordFile,
    known: &MessageFile,
    receiver: Option<usize>,
    use_oracle: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<Outcome> {
    let header: Header = codeword.header;
    if header != known.header {
        bail!(
            "codeword header `{}` does not match message header `{}`",
            header.to_line(),
            known.header.to_line()
        );
    }
    let spec = build_code(header.params, header.field)?;
    let plan = decoding_plan(&spec)?;
    let symbols = codeword.codeword();
    let decode_one = |k: usize, side: &SideInformation| -> Result<Vec<u32>> {
        let values = if use_oracle {
            oracle_decode(k, &symbols, side, &spec)?
        } else {
            receiver_decode(k, &symbols, side, &spec, &plan)?
        };
        Ok(values.iter().map(|e| e.value()).collect())
    };

    if let Some(k) = receiver {
        let side = side_information(known, k)?
            .with_context(|| format!("side-information of receiver {k} is incomplete"))?;
        let values = match decode_one(k, &side) {
            Ok(v) => v,
            Err(e) => {
                let text = match format {
                    Format::Text => format!("receiver {k}: not decoded: {e:#}\n"),
                    Format::Json => json_line(
                        json!({"receiver": k, "decoded": null, "error": format!("{e:#}")}),
                    ),
                };
                return Ok(Outcome::Failed(text));
            }
        };
        let text = match format {
            Format::Text => {
                let line: Vec<String> = values.iter().map(u32::to_string).collect();
                line.join(" ") + "\n"
            }
            Format::Json => json_line(json!({"receiver": k, "decoded": values})),
        };
        let text = emit(text, output)?;
        return Ok(match &known.rows[k] {
            Some(expected) if *expected != values => Outcome::Failed(
                text + &format!("receiver {k}: decoded {values:?}, file has {expected:?}\n"),
            ),
            _ => Outcome::Ok(text),
        });
    }

    let mut rows = Vec::with_capacity(known.rows.len());
    let mut problems = Vec::new();
    for k in 0..header.params.messages() {
        let Some(side) = side_information(known, k)? else {
            rows.push(None);
            continue;
        };
        match decode_one(k, &side) {
            Ok(values) => {
                if let Some(expected) = &known.rows[k] {
                    if *expected != values {
                        problems.push(format!(
                            "receiver {k}: decoded {values:?}, file has {expected:?}"
                        ));
                    }
                }
                rows.push(Some(values));
            }
            Err(e) => {
                problems.push(format!("receiver {k}: {e:#}"));
                rows.push(None);
            }
        }
    }
    let decoded = MessageFile { header, rows };
    let text = match format {
        Format::Text => decoded.to_text(),
        Format::Json => json_line(json!({
            "decoded": decoded.rows,
            "problems": problems,
        })),
    };
    let text = emit(text, output)?;
    if problems.is_empty() {
        Ok(Outcome::Ok(text))
    } else {
        if format == Format::Text {
            for p in &problems {
                eprintln!("{p}");
            }
        }
        Ok(Outcome::Failed(text))
    }
}
