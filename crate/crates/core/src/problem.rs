//! Problem instances with symmetric neighboring consecutive side-information.
//!
//! There are `K` messages and `K` receivers. Receiver `k` wants `x_k` and
//! already holds the `U` messages before it and the `D` messages after it,
//! indices taken mod `K`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The triple `(K, D, U)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProblemParams {
    k: usize,
    d: usize,
    u: usize,
}

impl ProblemParams {
    /// Validates `0 <= U <= D` and `U + D <= K - 1`.
    pub fn new(k: usize, d: usize, u: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidParams { k, d, u, reason };
        if k == 0 {
            return Err(invalid("need at least one message"));
        }
        if u > d {
            return Err(invalid("need U <= D"));
        }
        if u + d > k - 1 {
            return Err(invalid("need U + D <= K - 1"));
        }
        Ok(ProblemParams { k, d, u })
    }

    pub fn messages(&self) -> usize {
        self.k
    }

    pub fn after(&self) -> usize {
        self.d
    }

    pub fn before(&self) -> usize {
        self.u
    }

    /// `U + D = K - 1`: every receiver knows every other message and the
    /// capacity is 1.
    pub fn is_boundary(&self) -> bool {
        self.u + self.d + 1 == self.k
    }

    /// Derived code parameters.
    ///
    /// Away from the boundary the code length is `(K - D + U) / a`. On the
    /// boundary `U + D = K - 1` (where `a` is always 1) the length drops to
    /// the dimension, giving rate 1.
    pub fn derive(&self) -> DerivedParams {
        let (k, d, u) = (self.k, self.d, self.u);
        let a = gcd(gcd(k, d - u), u + 1);
        let dimension = (u + 1) / a;
        let length = if self.is_boundary() {
            dimension
        } else {
            (k - d + u) / a
        };
        DerivedParams {
            a,
            dimension,
            delta: (d - u) / a,
            k_a: k / a,
            length,
        }
    }

    pub fn capacity(&self) -> Rate {
        if self.is_boundary() {
            Rate::new(1, 1)
        } else {
            Rate::new(self.u + 1, self.k - self.d + self.u)
        }
    }

    /// Indices of the messages receiver `k` knows.
    pub fn side_info(&self, k: usize) -> Result<BTreeSet<usize>> {
        if k >= self.k {
            return Err(Error::ReceiverOutOfRange { k, count: self.k });
        }
        let before = (1..=self.u).map(|t| (k + self.k - t) % self.k);
        let after = (1..=self.d).map(|t| (k + t) % self.k);
        Ok(before.chain(after).collect())
    }

    pub fn knows(&self, receiver: usize, message: usize) -> bool {
        let ahead = (message + self.k - receiver) % self.k;
        let behind = (receiver + self.k - message) % self.k;
        (ahead >= 1 && ahead <= self.d) || (behind >= 1 && behind <= self.u)
    }

    /// True when `gcd(K - D + U, U + 1) == gcd(K, D - U, U + 1)`, which
    /// certifies that no capacity-achieving vector linear code of smaller
    /// dimension exists.
    pub fn minimality_certified(&self) -> bool {
        let (k, d, u) = (self.k, self.d, self.u);
        gcd(k - d + u, u + 1) == self.derive().a
    }
}

impl fmt::Display for ProblemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K={} D={} U={}", self.k, self.d, self.u)
    }
}

/// Quantities derived from `a = gcd(K, D - U, U + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivedParams {
    /// Number of consecutive messages folded into one extended symbol.
    pub a: usize,
    /// Code dimension `(U + 1) / a`: symbols per message vector.
    pub dimension: usize,
    /// `(D - U) / a`.
    pub delta: usize,
    /// `K / a`, the number of extended positions.
    pub k_a: usize,
    /// Number of broadcast symbols; `K_a - delta` except on the boundary.
    pub length: usize,
}

impl DerivedParams {
    /// How many positions past `s` a decoding sum for `y_s` may reach:
    /// `K_a - length`. Equal to `delta` except on the boundary.
    pub fn span(&self) -> usize {
        self.k_a - self.length
    }

    pub fn rate(&self) -> Rate {
        Rate::new(self.dimension, self.length)
    }
}

/// A positive rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Rate {
    numerator: usize,
    denominator: usize,
}

impl Rate {
    /// Reduces `numerator / denominator`. Both must be positive.
    pub fn new(numerator: usize, denominator: usize) -> Self {
        assert!(numerator > 0 && denominator > 0, "rates are positive");
        let g = gcd(numerator, denominator);
        Rate {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> usize {
        self.numerator
    }

    pub fn denominator(&self) -> usize {
        self.denominator
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Rate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("`{s}` is not a rate like 2/7"),
        };
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let d: usize = d.trim().parse().map_err(|_| bad())?;
        if n == 0 || d == 0 {
            return Err(bad());
        }
        Ok(Rate::new(n, d))
    }
}

impl TryFrom<String> for Rate {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Rate> for String {
    fn from(r: Rate) -> String {
        r.to_string()
    }
}
