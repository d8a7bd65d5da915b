//! Flat-file formats for messages and codewords.
//!
//! Both start with a header line `q K D U`. A message file then has `K`
//! lines of `u_a` space-separated values, one per message; a line holding a
//! single `*` marks a message that is not known. A codeword file has one line
//! of `N` values.

use std::fmt::Write as _;

use crate::codec::MessageBlock;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::problem::ProblemParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub field: PrimeField,
    pub params: ProblemParams,
}

impl Header {
    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {}",
            self.field.modulus(),
            self.params.messages(),
            self.params.after(),
            self.params.before()
        )
    }
}

/// A message file, possibly with unknown lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageFile {
    pub header: Header,
    pub rows: Vec<Option<Vec<u32>>>,
}

impl MessageFile {
    pub fn from_block(block: &MessageBlock) -> MessageFile {
        MessageFile {
            header: Header {
                field: block.field(),
                params: block.params(),
            },
            rows: block.rows().into_iter().map(Some).collect(),
        }
    }

    /// The full block; fails if any line is unknown.
    pub fn to_block(&self) -> Result<MessageBlock> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(k, r)| {
                r.as_ref()
                    .map(|r| r.iter().map(|&v| v as u64).collect::<Vec<_>>())
                    .ok_or_else(|| Error::Parse {
                        line: k + 2,
                        message: format!("message x{k} is unknown"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        MessageBlock::from_rows(self.header.params, self.header.field, &rows)
    }

    /// Values of every known message, as field elements.
    pub fn known(&self) -> impl Iterator<Item = (usize, Vec<FieldElement>)> + '_ {
        let field = self.header.field;
        self.rows.iter().enumerate().filter_map(move |(k, r)| {
            r.as_ref()
                .map(|r| (k, r.iter().map(|&v| field.element(v as u64)).collect()))
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = self.header.to_line();
        s.push('\n');
        for row in &self.rows {
            match row {
                Some(values) => s.push_str(&join(values)),
                None => s.push('*'),
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<MessageFile> {
        let mut lines = content_lines(text);
        let header = parse_header(lines.next())?;
        let dimension = header.params.derive().dimension;
        let mut rows = Vec::new();
        for (line, content) in lines.by_ref() {
            if rows.len() == header.params.messages() {
                return Err(Error::Parse {
                    line,
                    message: format!("more than {} message lines", header.params.messages()),
                });
            }
            if content == "*" {
                rows.push(None);
                continue;
            }
            let values = parse_values(line, content, header.field)?;
            if values.len() != dimension {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {dimension} values, found {}", values.len()),
                });
            }
            rows.push(Some(values));
        }
        if rows.len() != header.params.messages() {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "expected {} message lines, found {}",
                    header.params.messages(),
                    rows.len()
                ),
            });
        }
        Ok(MessageFile { header, rows })
    }
}

/// A broadcast codeword with its header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordFile {
    pub header: Header,
    pub symbols: Vec<u32>,
}

impl CodewordFile {
    pub fn new(header: Header, codeword: &[FieldElement]) -> CodewordFile {
        CodewordFile {
            header,
            symbols: codeword.iter().map(|e| e.value()).collect(),
        }
    }

    pub fn codeword(&self) -> Vec<FieldElement> {
        self.symbols
            .iter()
            .map(|&v| self.header.field.element(v as u64))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.header.to_line());
        let _ = writeln!(s, "{}", join(&self.symbols));
        s
    }

    /// Parses a codeword file. The length is not checked against the code,
    /// so truncated codewords can be fed to the decoders.
    pub fn parse(text: &str) -> Result<CodewordFile> {
        let mut lines = content_lines(text);
        let header = parse_header(lines.next())?;
        let symbols = match lines.next() {
            Some((line, content)) => parse_values(line, content, header.field)?,
            None => Vec::new(),
        };
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "a codeword file has a single line of symbols".to_string(),
            });
        }
        Ok(CodewordFile { header, symbols })
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(line: Option<(usize, &str)>) -> Result<Header> {
    let (line, content) = line.ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header `q K D U`".to_string(),
    })?;
    let nums = content
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .ok()
        .filter(|n| n.len() == 4)
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("header `{content}` is not `q K D U`"),
        })?;
    let q = u32::try_from(nums[0]).map_err(|_| Error::Parse {
        line,
        message: format!("modulus {} is too large", nums[0]),
    })?;
    Ok(Header {
        field: PrimeField::new(q)?,
        params: ProblemParams::new(nums[1], nums[2], nums[3])?,
    })
}

fn parse_values(line: usize, content: &str, field: PrimeField) -> Result<Vec<u32>> {
    content
        .split_whitespace()
        .map(|t| match t.parse::<u32>() {
            Ok(v) if v < field.modulus() => Ok(v),
            Ok(v) => Err(Error::Parse {
                line,
                message: format!("value {v} is not below the modulus {}", field.modulus()),
            }),
            Err(_) => Err(Error::Parse {
                line,
                message: format!("`{t}` is not a nonnegative integer"),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const MESSAGES: &str = "3 4 1 0\n0\n1\n2\n1\n";

    #[test]
    fn message_round_trip() {
        let file = MessageFile::parse(MESSAGES).unwrap();
        assert_eq!(file.to_text(), MESSAGES);
        let block = file.to_block().unwrap();
        assert_eq!(block.rows(), vec![vec![0], vec![1], vec![2], vec![1]]);
        assert_eq!(MessageFile::from_block(&block), file);
    }

    #[test]
    fn unknown_lines() {
        let text = "2 8 2 1\n0 1\n*\n1 1\n0 0\n1 0\n0 1\n1 1\n0 0\n";
        let file = MessageFile::parse(text).unwrap();
        assert_eq!(file.rows[1], None);
        assert_eq!(file.known().count(), 7);
        assert!(file.to_block().is_err());
        assert_eq!(file.to_text(), text);
    }

    #[test]
    fn message_errors() {
        assert!(MessageFile::parse("").is_err());
        assert!(MessageFile::parse("4 4 1 0\n0\n0\n0\n0\n").is_err());
        assert!(MessageFile::parse("3 4 1 0\n0\n1\n2\n").is_err());
        assert!(MessageFile::parse("3 4 1 0\n0\n1\n3\n1\n").is_err());
        assert!(MessageFile::parse("3 4 1 0\n0 1\n1\n2\n1\n").is_err());
        assert!(MessageFile::parse("3 4 2 2\n0\n1\n2\n1\n").is_err());
        assert!(MessageFile::parse("3 4 1 0\n0\n1\n2\n1\n1\n").is_err());
    }

    #[test]
    fn codeword_round_trip() {
        let text = "2 8 2 1\n1 0 1 1 0 0 1\n";
        let file = CodewordFile::parse(text).unwrap();
        assert_eq!(file.symbols.len(), 7);
        assert_eq!(file.to_text(), text);
        assert!(CodewordFile::parse("2 8 2 1\n1 0\n1\n").is_err());
        assert!(CodewordFile::parse("2 8 2 1\n1 2\n").is_err());
    }
}
