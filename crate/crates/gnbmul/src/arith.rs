//! Reference normal-basis arithmetic, the functional oracle for every
//! synthesized circuit.
//!
//! An [`Element`] is a k-bit coordinate vector over the normal basis;
//! coordinate i multiplies the basis element β_i. Addition is bitwise XOR,
//! squaring is a cyclic shift of coordinates, and multiplication evaluates
//! the shifted multiplication-matrix views directly. Elements serialize as
//! hex with coordinate 0 in the least-significant bit.

use std::fmt;

use rand::Rng;

use crate::matrix::MultMatrix;

/// A field element: k coordinates packed little-endian into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    k: usize,
    words: Vec<u64>,
}

/// Invalid hex input for an element of a given width.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElementError {
    #[error("invalid hex digit {0:?}")]
    BadDigit(char),
    #[error("empty hex string")]
    Empty,
    #[error("value does not fit in {k} coordinates")]
    OutOfRange { k: usize },
}

impl Element {
    fn words_for(k: usize) -> usize {
        k.div_ceil(64)
    }

    /// The zero element.
    pub fn zero(k: usize) -> Element {
        assert!(k >= 1);
        Element {
            k,
            words: vec![0; Self::words_for(k)],
        }
    }

    /// The all-ones element: the multiplicative identity, since the basis
    /// elements sum to 1.
    pub fn one(k: usize) -> Element {
        let mut e = Element::zero(k);
        for i in 0..k {
            e.set(i, true);
        }
        e
    }

    /// The basis element β_i as a coordinate vector.
    pub fn unit(k: usize, i: usize) -> Element {
        let mut e = Element::zero(k);
        e.set(i, true);
        e
    }

    /// Element from an integer index, bit i of `value` becoming coordinate i.
    /// Handy for exhaustive small-field enumeration.
    pub fn from_index(k: usize, value: u64) -> Element {
        assert!(k <= 64);
        assert!(k == 64 || value < (1u64 << k), "value out of range");
        Element {
            k,
            words: vec![value],
        }
    }

    /// Uniformly random element.
    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Element {
        let mut e = Element::zero(k);
        for w in e.words.iter_mut() {
            *w = rng.random();
        }
        e.mask_top();
        e
    }

    fn mask_top(&mut self) {
        let used = self.k % 64;
        if used != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    /// Number of coordinates k.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.k, "coordinate {i} out of range");
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.k, "coordinate {i} out of range");
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Field addition: coordinate-wise XOR. Panics on mismatched widths.
    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.k, other.k, "mismatched element widths");
        Element {
            k: self.k,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Field squaring: the cyclic coordinate shift `result[i] = self[i-1]`.
    pub fn square(&self) -> Element {
        let mut out = Element::zero(self.k);
        for i in 0..self.k {
            out.set(i, self.get((i + self.k - 1) % self.k));
        }
        out
    }

    /// Parses a hex string, coordinate 0 in the least-significant bit.
    pub fn from_hex(k: usize, s: &str) -> Result<Element, ElementError> {
        if s.is_empty() {
            return Err(ElementError::Empty);
        }
        let mut e = Element::zero(k);
        for (pos, c) in s.chars().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or(ElementError::BadDigit(c))? as u64;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let i = pos * 4 + b;
                    if i >= k {
                        return Err(ElementError::OutOfRange { k });
                    }
                    e.set(i, true);
                }
            }
        }
        Ok(e)
    }

    /// Lowercase hex, fixed width of ⌈k/4⌉ digits, coordinate 0 = LSB.
    pub fn to_hex(&self) -> String {
        let digits = self.k.div_ceil(4);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let mut nibble = 0u64;
            for b in 0..4 {
                let i = d * 4 + b;
                if i < self.k && self.get(i) {
                    nibble |= 1 << b;
                }
            }
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Normal-basis multiplication through the matrix `M_0`:
/// `c_l = Σ a_{(i+l) mod k} · b_{(j+l) mod k}` over the 1-cells `(i, j)`.
pub fn gf_mult(m0: &MultMatrix, a: &Element, b: &Element) -> Element {
    let k = m0.k();
    assert_eq!(a.k(), k, "mismatched element widths");
    assert_eq!(b.k(), k, "mismatched element widths");
    let a_lanes: Vec<u64> = (0..k).map(|i| a.get(i) as u64).collect();
    let b_lanes: Vec<u64> = (0..k).map(|i| b.get(i) as u64).collect();
    let c_lanes = gf_mult_lanes(m0, &a_lanes, &b_lanes);
    let mut c = Element::zero(k);
    for (l, &lane) in c_lanes.iter().enumerate() {
        c.set(l, lane & 1 == 1);
    }
    c
}

/// Bit-sliced form of [`gf_mult`]: `a[i]` carries 64 parallel values of
/// coordinate i, and the result carries the 64 products coordinate-wise.
pub fn gf_mult_lanes(m0: &MultMatrix, a: &[u64], b: &[u64]) -> Vec<u64> {
    let k = m0.k();
    assert_eq!(a.len(), k, "mismatched element widths");
    assert_eq!(b.len(), k, "mismatched element widths");
    let ones = m0.ones();
    (0..k)
        .map(|l| {
            let mut acc = 0u64;
            for &(i, j) in &ones {
                acc ^= a[(i + l) % k] & b[(j + l) % k];
            }
            acc
        })
        .collect()
}
