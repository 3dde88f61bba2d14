//! Unranking (nashtam: row number to sequence) and ranking (uddishtam:
//! sequence to row number), with the positional generalization to any base.

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::types::{GlSequence, Natural, RowIndex, Syllable};

/// Recovers row `k` of the `n`-syllable prastara.
///
/// Starting from `k`, an even value emits laghu and is halved; an odd value
/// emits guru and becomes `(v + 1) / 2`. Exactly `n` syllables are emitted.
pub fn nashtam(k: &RowIndex, n: usize) -> Result<GlSequence> {
    if n == 0 {
        return Err(Error::InvalidArgs("n must be at least 1".into()));
    }
    let rows = Natural::one() << n;
    if *k.value() > rows {
        return Err(Error::IndexOutOfRange {
            row: k.to_string(),
            n: n as u32,
        });
    }
    let mut value = k.value().clone();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        if value.is_even() {
            out.push(Syllable::Laghu);
            value >>= 1;
        } else {
            out.push(Syllable::Guru);
            value += 1u32;
            value >>= 1;
        }
    }
    GlSequence::new(out)
}

/// Ranks by scanning right to left from the rightmost laghu.
///
/// `S` starts at 1; every syllable from the rightmost laghu leftwards doubles
/// it, and a guru then subtracts one. A row without laghu is row 1.
pub fn uddishtam_pingala(seq: &GlSequence) -> RowIndex {
    let syllables = seq.as_slice();
    let Some(last_laghu) = syllables.iter().rposition(|s| s.is_laghu()) else {
        return RowIndex::first();
    };
    let mut s = Natural::one();
    for syllable in syllables[..=last_laghu].iter().rev() {
        s <<= 1;
        if *syllable == Syllable::Guru {
            s -= 1u32;
        }
    }
    RowIndex::new(s).expect("rank is positive")
}

/// Ranks by writing doubling weights 1, 2, 4, ... over the syllables and
/// adding one to the sum of the weights over laghus.
pub fn uddishtam_kedara(seq: &GlSequence) -> RowIndex {
    let mut weight = Natural::one();
    let mut sum = Natural::ZERO;
    for syllable in seq {
        if syllable.is_laghu() {
            sum += &weight;
        }
        weight <<= 1;
    }
    RowIndex::new(sum + 1u32).expect("rank is positive")
}

/// Digits in base `B`, most significant first. Leading zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseBNumeral {
    base: u32,
    digits: Vec<u32>,
}

impl BaseBNumeral {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<BaseBNumeral> {
        if base < 2 {
            return Err(Error::InvalidBase(base));
        }
        if digits.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((index, &digit)) = digits.iter().enumerate().find(|(_, d)| **d >= base) {
            return Err(Error::DigitOutOfRange { index, digit, base });
        }
        Ok(BaseBNumeral { base, digits })
    }

    /// Parses `0-9` then `a-z` (either case), for bases up to 36.
    pub fn parse(text: &str, base: u32) -> Result<BaseBNumeral> {
        if !(2..=36).contains(&base) {
            return Err(Error::InvalidBase(base));
        }
        let digits = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(36).ok_or(Error::InvalidCharacter {
                    position: i + 1,
                    found: c,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BaseBNumeral::new(base, digits)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// `(B - 1) - d` for the digit at `index`.
    pub fn complement(&self, index: usize) -> u32 {
        self.base - 1 - self.digits[index]
    }
}

impl fmt::Display for BaseBNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            let c = char::from_digit(*d, 36).unwrap_or('?');
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Position of `num` in the place-value enumeration where 0 is first.
///
/// `S = 1`, then for each digit from the most significant:
/// `S = B*S - complement(d)`. The result is always `value(num) + 1`.
pub fn rank_base_b(num: &BaseBNumeral) -> Natural {
    rank_base_b_steps(num)
        .pop()
        .expect("numerals have at least one digit")
}

/// Every intermediate `S`, one per digit consumed.
///
/// Entry `m - 1` is the rank of the `m`-digit prefix.
pub fn rank_base_b_steps(num: &BaseBNumeral) -> Vec<Natural> {
    let mut s = Natural::one();
    let mut steps = Vec::with_capacity(num.digits.len());
    for index in 0..num.digits.len() {
        s = s * num.base - num.complement(index);
        steps.push(s.clone());
    }
    steps
}
