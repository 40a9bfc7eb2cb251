use std::fmt;

use serde::{Serialize, Serializer};

/// A point `d = (d1, ..., dn)` of `{0,1}^n`.
///
/// Totally ordered by the integer `sum d_i 2^(i-1)` (`d1` least
/// significant), which is also its position in every enumeration of
/// `{0,1}^n` in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitVector {
    // `bits` first so the derived order is the integer order for fixed n.
    bits: u32,
    n: u8,
}

impl BitVector {
    pub fn new(n: usize, bits: u32) -> Self {
        assert!(n <= 31, "bit vector too long");
        assert!(bits < (1u32 << n), "bits out of range for length {n}");
        BitVector { bits, n: n as u8 }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let v = bits
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &b)| acc | (u32::from(b & 1) << i));
        Self::new(bits.len(), v)
    }

    /// All of `{0,1}^n`, starting at the zero vector.
    pub fn all(n: usize) -> impl Iterator<Item = BitVector> {
        (0..(1u32 << n)).map(move |b| BitVector::new(n, b))
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// `d_{i+1}` (zero-based index).
    pub fn get(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Zero-based index of the first nonzero coordinate.
    pub fn min_index(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.get(i))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl Serialize for BitVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
