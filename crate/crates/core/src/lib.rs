//! Vector linear index codes for symmetric neighboring consecutive
//! side-information.
//!
//! `K` receivers each want one of `K` messages and already hold the `U`
//! messages before theirs and the `D` after it, cyclically. This crate builds
//! codes that reach the symmetric capacity of that problem, encodes message
//! blocks, and decodes them at every receiver, either by successive
//! cancellation or by brute-force linear algebra.
//!
//! ```
//! use sncs_core::codec::{build_code, decoding_plan, encode, receiver_decode, MessageBlock};
//! use sncs_core::field::PrimeField;
//! use sncs_core::problem::ProblemParams;
//!
//! let p = ProblemParams::new(8, 2, 1)?;
//! let spec = build_code(p, PrimeField::GF2)?;
//! let plan = decoding_plan(&spec)?;
//! let rows: Vec<[u64; 2]> = (0..8).map(|k| [k % 2, 1]).collect();
//! let messages = MessageBlock::from_rows(p, PrimeField::GF2, &rows)?;
//! let c = encode(&messages, &spec)?;
//! assert_eq!(c.len(), 7);
//! for k in 0..8 {
//!     let known = messages.side_information(k)?;
//!     assert_eq!(receiver_decode(k, &c, &known, &spec, &plan)?, messages.vector(k));
//! }
//! # Ok::<(), sncs_core::error::Error>(())
//! ```
//!
//! The guide in `book/` walks through each module.

pub mod air;
pub mod codec;
pub mod describe;
pub mod error;
pub mod field;
pub mod formats;
pub mod golden;
pub mod linalg;
pub mod problem;
pub mod simulate;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields-and-matrices.md")]
    mod fields_and_matrices {}
    #[doc = include_str!("../../../book/src/air-matrices.md")]
    mod air_matrices {}
    #[doc = include_str!("../../../book/src/problems.md")]
    mod problems {}
    #[doc = include_str!("../../../book/src/encoding.md")]
    mod encoding {}
    #[doc = include_str!("../../../book/src/decoding.md")]
    mod decoding {}
    #[doc = include_str!("../../../book/src/cli-and-simulation.md")]
    mod cli_and_simulation {}
}
