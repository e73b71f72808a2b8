use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error};

/// A point of `{0,1}^N`, stored one byte per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Solution(Vec<u8>);

impl Solution {
    pub fn new(bits: Vec<u8>) -> Result<Self, Error> {
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(invalid(
                "solution",
                format!("coordinate {pos} is {}", bits[pos]),
            ));
        }
        Ok(Self(bits))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// Coordinates set by the bits of `mask`; coordinate `i` is bit `i`. Requires `n <= 64`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n <= 64);
        Self((0..n).map(|i| ((mask >> i) & 1) as u8).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.0[i] ^= 1;
    }

    /// Copy with coordinate `i` flipped.
    pub fn flipped(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.flip(i);
        out
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub(crate) fn bits_mut(&mut self) -> &mut [u8] {
        &mut self.0
    }
}

impl TryFrom<Vec<u8>> for Solution {
    type Error = Error;

    fn try_from(bits: Vec<u8>) -> Result<Self, Error> {
        Self::new(bits)
    }
}

impl From<Solution> for Vec<u8> {
    fn from(s: Solution) -> Self {
        s.0
    }
}

impl From<&[bool]> for Solution {
    fn from(bits: &[bool]) -> Self {
        Self(bits.iter().map(|&b| b as u8).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_binary() {
        assert!(Solution::new(vec![0, 1, 2]).is_err());
        assert!(Solution::new(vec![0, 1, 1]).is_ok());
    }

    #[test]
    fn mask_and_flip() {
        let s = Solution::from_mask(0b101, 3);
        assert_eq!(s.as_slice(), &[1, 0, 1]);
        assert_eq!(s.count_ones(), 2);
        assert_eq!(s.flipped(1).count_ones(), 3);
    }
}
