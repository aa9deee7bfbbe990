//! Braid words over the standard generators `τ_1..τ_{n-1}` of `B_n`.
//!
//! A letter `i > 0` is `τ_i`, `-i` is its inverse. Extended indices are read
//! mod `n`, with `τ_0 = δ τ_{n-1} δ⁻¹` for `δ = τ_1 ⋯ τ_{n-1}`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(n)?;
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::IndexOutOfRange { n, index: l as i64 });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Builds a word from extended indices; `0` and anything outside
    /// `1..n` are rewritten through [`generator`].
    pub fn from_extended(n: usize, indices: &[i64]) -> Result<Self> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for &k in indices {
            if k == 0 {
                letters.extend(generator(n, 0)?.letters);
            } else {
                let g = generator(n, k.abs())?;
                if k > 0 {
                    letters.extend(g.letters);
                } else {
                    letters.extend(g.inverse().letters);
                }
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Sum of the letter signs; a homomorphism `B_n → Z`.
    pub fn exponent(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Cancels adjacent `τ_i τ_i⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    /// Concatenation; panics on mismatched strand counts, use
    /// [`BraidWord::try_concat`] when that can happen.
    pub fn concat(&self, other: &BraidWord) -> Self {
        self.try_concat(other).expect("strand counts differ")
    }

    pub fn try_concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "B_{} word times B_{} word",
                self.n, other.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Shifts every index by `offset`, viewing the word inside `B_m`.
    pub fn shifted(&self, m: usize, offset: usize) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        BraidWord::new(m, letters)
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    Ok(())
}

fn check_min(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidStrandCount(n));
    }
    Ok(())
}

/// `δ = τ_1 τ_2 ⋯ τ_{n-1}`.
pub fn flip_delta(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    BraidWord::new(n, (1..n as i32).collect())
}

/// `τ_k` with `k` read mod `n`; the class `0` expands to `δ τ_{n-1} δ⁻¹`.
pub fn generator(n: usize, k: i64) -> Result<BraidWord> {
    check_min(n, 3)?;
    let r = k.rem_euclid(n as i64);
    if r == 0 {
        let d = flip_delta(n)?;
        let last = BraidWord::new(n, vec![n as i32 - 1])?;
        Ok(&(&d * &last) * &d.inverse())
    } else {
        BraidWord::new(n, vec![r as i32])
    }
}

/// `Δ_n = τ_1 (τ_2 τ_1) ⋯ (τ_{n-1} ⋯ τ_1)`.
pub fn garside(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    BraidWord::new(n, letters)
}

/// `γ_i = τ_i τ_{i+1} τ_i τ_{i+2} τ_{i+1} τ_i` with indices read mod `n`.
/// Conjugation by it carries `τ_i` to `τ_{i+2}`.
pub fn gamma(n: usize, i: i64) -> Result<BraidWord> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidStrandCount(n));
    }
    if i.rem_euclid(2) == 0 || i < 1 || i >= n as i64 {
        return Err(Error::IndexOutOfRange { n, index: i });
    }
    BraidWord::from_extended(n, &[i, i + 1, i, i + 2, i + 1, i])
}
