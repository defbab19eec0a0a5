//! Compressed vertex labels.
//!
//! A vertex of `H_n` is a disc configuration `d_1 d_2 ... d_n` over the pegs
//! `{0, 1, 2}` (the peg of the largest disc first). The compressed label drops
//! all but one digit of the trailing run of equal digits, so the three corner
//! vertices become `0`, `1`, `2`, the six vertices joining the top-level copies
//! get two-digit labels, and every label ends in two distinct digits once it
//! has length two or more.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Peg index, always in `0..3`.
pub type Peg = u8;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(Vec<Peg>);

/// Collapses the trailing run of identical digits to a single digit.
pub fn compress_label(raw: &str) -> Result<VertexLabel> {
    if raw.is_empty() {
        return Err(Error::InvalidLabel {
            label: raw.to_string(),
            reason: "empty label",
        });
    }
    let digits = raw
        .bytes()
        .map(|b| match b {
            b'0'..=b'2' => Ok(b - b'0'),
            _ => Err(Error::InvalidLabel {
                label: raw.to_string(),
                reason: "digits must be 0, 1 or 2",
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexLabel::from_raw_digits(digits))
}

impl VertexLabel {
    /// Builds a label from an uncompressed digit sequence.
    ///
    /// Panics if a digit is not a peg or the sequence is empty.
    pub fn from_raw_digits(mut digits: Vec<Peg>) -> Self {
        assert!(!digits.is_empty(), "labels are non-empty");
        assert!(digits.iter().all(|&d| d < 3), "digits are pegs");
        while digits.len() >= 2 && digits[digits.len() - 1] == digits[digits.len() - 2] {
            digits.pop();
        }
        VertexLabel(digits)
    }

    /// Label of the vertex whose raw configuration is the base-3 expansion of
    /// `index` with `n` digits (most significant digit first).
    pub fn from_raw_index(index: usize, n: u32) -> Self {
        let mut digits = vec![0; n as usize];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % 3) as Peg;
            rest /= 3;
        }
        Self::from_raw_digits(digits)
    }

    pub fn outmost(peg: Peg) -> Self {
        assert!(peg < 3);
        VertexLabel(vec![peg])
    }

    pub fn digits(&self) -> &[Peg] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Peg {
        self.0[0]
    }

    /// The label without its leading digit, i.e. the label of the same vertex
    /// inside its top-level copy. `None` for the corner vertices, whose local
    /// label is the corner itself.
    pub fn tail(&self) -> Option<VertexLabel> {
        (self.0.len() >= 2).then(|| VertexLabel(self.0[1..].to_vec()))
    }

    /// Prepends a copy prefix and re-applies compression.
    pub fn prefixed(&self, peg: Peg) -> VertexLabel {
        let mut digits = Vec::with_capacity(self.0.len() + 1);
        digits.push(peg);
        digits.extend_from_slice(&self.0);
        Self::from_raw_digits(digits)
    }

    pub fn permuted(&self, sigma: PegPermutation) -> VertexLabel {
        VertexLabel(self.0.iter().map(|&d| sigma.apply(d)).collect())
    }

    pub fn classify(&self) -> VertexClass {
        classify_vertex(self)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            write!(f, "{}", d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexLabel({})", self)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        compress_label(s)
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Corner vertex carrying the given peg; degree 2.
    Outmost(Peg),
    /// Vertex `from to` joining top-level copy `from` to copy `to`.
    Connecting {
        from: Peg,
        to: Peg,
    },
    Interior,
}

pub fn classify_vertex(label: &VertexLabel) -> VertexClass {
    match *label.digits() {
        [p] => VertexClass::Outmost(p),
        [a, b] => VertexClass::Connecting { from: a, to: b },
        _ => VertexClass::Interior,
    }
}

/// A permutation of the three pegs, acting digit-wise on labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PegPermutation([Peg; 3]);

impl PegPermutation {
    pub const IDENTITY: PegPermutation = PegPermutation([0, 1, 2]);

    pub fn new(images: [Peg; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &p in &images {
            if p >= 3 || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        Some(PegPermutation(images))
    }

    pub fn all() -> [PegPermutation; 6] {
        [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
        .map(PegPermutation)
    }

    /// Transposition of two pegs (identity when `a == b`).
    pub fn swap(a: Peg, b: Peg) -> Self {
        let mut images = [0, 1, 2];
        images.swap(a as usize, b as usize);
        PegPermutation(images)
    }

    /// The permutation sending peg 0 to `a` and peg 1 to `b` (`a != b`).
    pub fn sending_01_to(a: Peg, b: Peg) -> Self {
        assert!(a != b && a < 3 && b < 3);
        PegPermutation([a, b, 3 - a - b])
    }

    pub fn apply(&self, peg: Peg) -> Peg {
        self.0[peg as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0; 3];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as Peg;
        }
        PegPermutation(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> VertexLabel {
        s.parse().unwrap()
    }

    #[test]
    fn compression_examples() {
        assert_eq!(compress_label("0100").unwrap().to_string(), "010");
        assert_eq!(compress_label("000").unwrap().to_string(), "0");
        assert_eq!(compress_label("010").unwrap().to_string(), "010");
        assert_eq!(compress_label("2").unwrap().to_string(), "2");
    }

    #[test]
    fn compression_rejects_bad_input() {
        assert!(matches!(
            compress_label(""),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            compress_label("013"),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            compress_label("0a"),
            Err(Error::InvalidLabel { .. })
        ));
    }

    #[test]
    fn classification_by_length() {
        assert_eq!(classify_vertex(&label("0")), VertexClass::Outmost(0));
        assert_eq!(
            classify_vertex(&label("01")),
            VertexClass::Connecting { from: 0, to: 1 }
        );
        assert_eq!(classify_vertex(&label("010")), VertexClass::Interior);
    }

    #[test]
    fn raw_index_round_trip() {
        // 0*9 + 1*3 + 1 = 4 -> "011" -> "01"
        assert_eq!(VertexLabel::from_raw_index(4, 3).to_string(), "01");
        assert_eq!(VertexLabel::from_raw_index(26, 3).to_string(), "2");
        assert_eq!(VertexLabel::from_raw_index(5, 3).to_string(), "012");
    }

    #[test]
    fn permutation_helpers() {
        let s = PegPermutation::sending_01_to(2, 0);
        assert_eq!(s.apply(0), 2);
        assert_eq!(s.apply(1), 0);
        assert_eq!(s.apply(2), 1);
        assert_eq!(s.inverse().apply(2), 0);
        assert_eq!(
            label("012")
                .permuted(PegPermutation::swap(0, 2))
                .to_string(),
            "210"
        );
        assert!(PegPermutation::new([0, 0, 1]).is_none());
    }

    #[test]
    fn prefixing_compresses_once() {
        assert_eq!(label("1").prefixed(1).to_string(), "1");
        assert_eq!(label("1").prefixed(0).to_string(), "01");
        assert_eq!(label("10").prefixed(0).to_string(), "010");
    }
}
