//! Modern reference computations used to cross-check the historical
//! routines: textbook binary conversion, factorial binomials, repeated
//! doubling, direct sums and brute-force scans.
//!
//! Nothing here calls into `indexing`, `binomial`, `counting` or `pataka`.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::indexing::BaseBNumeral;
use crate::prastara::prastara_stream;
use crate::types::{GlSequence, Natural, RowIndex, Syllable};

/// Binary digits of `v`, most significant first, padded to `width`.
///
/// Repeated division by two, remainders read in reverse.
pub fn modern_to_binary(v: &Natural, width: usize) -> Result<Vec<u8>> {
    let two = Natural::from(2u32);
    let mut remainders = Vec::new();
    let mut q = v.clone();
    while q > Natural::ZERO {
        let (next, rem) = q.div_rem(&two);
        remainders.push(if rem.is_one() { 1 } else { 0 });
        q = next;
    }
    if remainders.len() > width {
        return Err(Error::Overflow {
            value: v.to_string(),
            width,
        });
    }
    remainders.resize(width, 0);
    remainders.reverse();
    Ok(remainders)
}

/// Value of a most-significant-first bit list.
pub fn binary_to_modern(bits: &[u8]) -> Natural {
    bits.iter()
        .fold(Natural::ZERO, |acc, &b| acc * 2u32 + u32::from(b))
}

/// Reverses the sequence and writes guru as 0, laghu as 1.
pub fn mirror_bridge(seq: &GlSequence) -> Vec<u8> {
    seq.iter()
        .rev()
        .map(|s| match s {
            Syllable::Guru => 0,
            Syllable::Laghu => 1,
        })
        .collect()
}

/// Row `k` of the `n`-syllable table via ordinary binary counting of `k - 1`.
pub fn counting_row(k: &RowIndex, n: usize) -> Result<GlSequence> {
    let bits = modern_to_binary(&(k.value() - 1u32), n).map_err(|_| Error::IndexOutOfRange {
        row: k.to_string(),
        n: n as u32,
    })?;
    GlSequence::new(
        bits.iter()
            .rev()
            .map(|&b| {
                if b == 1 {
                    Syllable::Laghu
                } else {
                    Syllable::Guru
                }
            })
            .collect(),
    )
}

/// Row number of `seq` via its mirrored binary value plus one.
pub fn counting_rank(seq: &GlSequence) -> RowIndex {
    RowIndex::new(binary_to_modern(&mirror_bridge(seq)) + 1u32).expect("positive")
}

/// Ordinary positional value of a numeral.
pub fn positional_value(num: &BaseBNumeral) -> Natural {
    num.digits()
        .iter()
        .fold(Natural::ZERO, |acc, &d| acc * num.base() + d)
}

pub fn factorial(n: u64) -> Natural {
    (2..=n).fold(Natural::one(), |acc, k| acc * k)
}

/// `n! / (r! (n - r)!)`.
pub fn ncr_factorial(n: u64, r: u64) -> Result<Natural> {
    if r > n {
        return Err(Error::InvalidArgs(format!("r = {r} exceeds n = {n}")));
    }
    Ok(factorial(n) / (factorial(r) * factorial(n - r)))
}

/// `2^n` by adding a value to itself `n` times.
pub fn pow2_doubling(n: u64) -> Natural {
    let mut v = Natural::one();
    for _ in 0..n {
        v = &v + &v;
    }
    v
}

/// `2^1 + 2^2 + ... + 2^n`, term by term.
pub fn geometric_sum(n: u64) -> Natural {
    let mut term = Natural::one();
    let mut sum = Natural::ZERO;
    for _ in 0..n {
        term = &term + &term;
        sum += &term;
    }
    sum
}

/// Rows (ascending) of the `n`-syllable table with exactly `r` laghus,
/// found by walking every row.
pub fn brute_positions(n: usize, r: usize) -> Vec<RowIndex> {
    prastara_stream(n)
        .zip(1u64..)
        .filter(|(s, _)| s.iter().filter(|x| **x == Syllable::Laghu).count() == r)
        .map(|(_, k)| RowIndex::from(k))
        .collect()
}
