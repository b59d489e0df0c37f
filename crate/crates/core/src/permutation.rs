//! Permutations of `1..=n` in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1, ..., n}` stored as `[π(1), π(2), ..., π(n)]`.
///
/// Every constructor checks the bijection property, so a `Permutation` in
/// hand is always well formed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct Permutation {
    image: Vec<usize>,
}

/// Wire form: `{"n":5,"image":[1,5,4,3,2]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawPermutation {
    pub n: usize,
    pub image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        check_bijection(&image)?;
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Caller guarantees `image` is a bijection on `1..=image.len()`.
    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(check_bijection(&image).is_ok());
        Permutation { image }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `π(k)` for `1 <= k <= n`.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    /// Position-value sums `k + π(k)`, in position order.
    pub fn sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().enumerate().map(|(i, &v)| i + 1 + v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| self.image[v - 1] == i + 1)
    }
}

/// Checks that `image` contains each of `1..=image.len()` exactly once.
pub fn check_bijection(image: &[usize]) -> Result<()> {
    let n = image.len();
    let mut seen = vec![false; n];
    for (i, &v) in image.iter().enumerate() {
        if v == 0 || v > n {
            return Err(Error::MalformedPermutation(format!(
                "entry {v} at position {} is outside 1..={n}",
                i + 1
            )));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::MalformedPermutation(format!(
                "entry {v} appears more than once"
            )));
        }
    }
    Ok(())
}

/// Parses comma-separated integers without checking the bijection property.
/// Whitespace around entries is ignored and an empty string is the empty
/// sequence.
pub fn parse_one_line(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|field| {
            let field = field.trim();
            field
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{field}` is not a nonnegative integer")))
        })
        .collect()
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        if raw.n != raw.image.len() {
            return Err(Error::MalformedPermutation(format!(
                "n = {} but image has {} entries",
                raw.n,
                raw.image.len()
            )));
        }
        Permutation::new(raw.image)
    }
}

impl From<Permutation> for RawPermutation {
    fn from(p: Permutation) -> Self {
        RawPermutation {
            n: p.n(),
            image: p.image,
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_one_line(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
