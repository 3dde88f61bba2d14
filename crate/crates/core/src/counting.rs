//! The total row count `2^n` (sankhya) and the cumulative count
//! `2 + 4 + ... + 2^n` (adhvayoga).
//!
//! [`sankhya_pingala`] is the binary method: reduce `n` to zero, halving
//! (token `2`) when even and subtracting one (token `0`) when odd, then
//! replay the tokens last-emitted first from 1, doubling on `0` and squaring
//! on `2`.

use std::fmt;

use num_traits::One;

use crate::binomial::lagakriya;
use crate::error::{Error, Result};
use crate::types::Natural;

/// A reduction step and the replay action it schedules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SankhyaToken {
    /// `n` was even and halved; replays as a squaring. Written `2`.
    Halve,
    /// `n` was odd and decremented; replays as a doubling. Written `0`.
    DecrementOne,
}

impl SankhyaToken {
    pub fn symbol(self) -> char {
        match self {
            SankhyaToken::Halve => '2',
            SankhyaToken::DecrementOne => '0',
        }
    }
}

impl fmt::Display for SankhyaToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Values the replay can run over.
///
/// [`Natural`] computes the power itself; [`Exponent`] tracks only `log2`
/// of it, which lets the same replay run cheaply for very large `n`.
pub trait PowerDomain: Clone {
    fn identity() -> Self;
    fn double(&self) -> Self;
    fn square(&self) -> Self;
}

impl PowerDomain for Natural {
    fn identity() -> Natural {
        Natural::one()
    }

    fn double(&self) -> Natural {
        self << 1u32
    }

    fn square(&self) -> Natural {
        self * self
    }
}

/// `log2` of a power of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(pub u64);

impl PowerDomain for Exponent {
    fn identity() -> Exponent {
        Exponent(0)
    }

    fn double(&self) -> Exponent {
        Exponent(self.0 + 1)
    }

    fn square(&self) -> Exponent {
        Exponent(self.0 * 2)
    }
}

/// Both phases of the binary method for one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SankhyaTrace<T = Natural> {
    pub input: u64,
    /// Value remaining after each reduction step, paired with `tokens`.
    pub reductions: Vec<u64>,
    /// Tokens in emission order.
    pub tokens: Vec<SankhyaToken>,
    /// Value after each replay step; consumes `tokens` in reverse.
    pub replay: Vec<T>,
    pub result: T,
}

impl<T> SankhyaTrace<T> {
    /// Doublings plus squarings performed during the replay.
    pub fn multiplications(&self) -> usize {
        self.replay.len()
    }
}

/// Reduction phase: tokens in emission order and the value after each.
pub fn sankhya_tokens(n: u64) -> (Vec<SankhyaToken>, Vec<u64>) {
    let mut tokens = Vec::new();
    let mut reductions = Vec::new();
    let mut m = n;
    while m > 0 {
        if m.is_multiple_of(2) {
            tokens.push(SankhyaToken::Halve);
            m /= 2;
        } else {
            tokens.push(SankhyaToken::DecrementOne);
            m -= 1;
        }
        reductions.push(m);
    }
    (tokens, reductions)
}

/// Runs both phases over an arbitrary [`PowerDomain`].
pub fn sankhya_trace<T: PowerDomain>(n: u64) -> SankhyaTrace<T> {
    let (tokens, reductions) = sankhya_tokens(n);
    let mut value = T::identity();
    let mut replay = Vec::with_capacity(tokens.len());
    for token in tokens.iter().rev() {
        value = match token {
            SankhyaToken::DecrementOne => value.double(),
            SankhyaToken::Halve => value.square(),
        };
        replay.push(value.clone());
    }
    SankhyaTrace {
        input: n,
        reductions,
        tokens,
        replay,
        result: value,
    }
}

/// `2^n` by the binary method, with the full trace. `n = 0` gives 1.
pub fn sankhya_pingala(n: u64) -> SankhyaTrace<Natural> {
    sankhya_trace(n)
}

/// `2^n` as the sum of the staircase terminals `C(n, 0) + ... + C(n, n)`.
pub fn sankhya_kedara_lagakriya(n: u32) -> Result<Natural> {
    Ok(lagakriya(n)?.into_iter().sum())
}

/// `2^n` as `1 + 2 + 4 + ... + 2^(n-1)`, plus one.
pub fn sankhya_kedara_uddishta(n: u32) -> Result<Natural> {
    if n == 0 {
        return Err(Error::InvalidArgs("n must be at least 1".into()));
    }
    let mut weight = Natural::one();
    let mut sum = Natural::ZERO;
    for _ in 0..n {
        sum += &weight;
        weight <<= 1;
    }
    Ok(sum + 1u32)
}

/// `2 + 4 + ... + 2^n`, computed as `2 * 2^n - 2`.
pub fn adhvayoga(n: u64) -> Result<Natural> {
    if n == 0 {
        return Err(Error::InvalidArgs("n must be at least 1".into()));
    }
    Ok((sankhya_pingala(n).result << 1u32) - 2u32)
}
