//! Full enumeration of the `2^n` laghu/guru rows of `n` syllables.
//!
//! Two independent constructions are provided. [`pingala_prastara`] builds
//! the table recursively: the table for `n` syllables is the table for
//! `n - 1` with a guru column appended, stacked over the same table with a
//! laghu column appended. [`kedara_prastara`] starts from the all-guru row
//! and applies [`kedara_successor`] until every syllable is laghu.
//! [`prastara_stream`] yields the same rows lazily.

use std::iter::FusedIterator;

use crate::error::{Error, Result};
use crate::types::{GlSequence, Syllable};

/// Largest `n` materialized by default (about a million rows).
pub const DEFAULT_GUARD: u32 = 20;

/// Upper bound on `n` for operations that materialize `2^n` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationGuard(u32);

impl EnumerationGuard {
    pub const fn new(max_n: u32) -> EnumerationGuard {
        EnumerationGuard(max_n)
    }

    pub fn max_n(self) -> u32 {
        self.0
    }

    /// Checks `1 <= n <= max_n`. Also refuses `n >= 64`, where `2^n` rows
    /// cannot be addressed at all.
    pub fn check(self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgs("n must be at least 1".into()));
        }
        if n > self.0 || n >= 64 {
            return Err(Error::GuardExceeded { n, guard: self.0 });
        }
        Ok(())
    }
}

impl Default for EnumerationGuard {
    fn default() -> EnumerationGuard {
        EnumerationGuard(DEFAULT_GUARD)
    }
}

/// Materialized `2^n x n` table, rows stored contiguously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prastara {
    n: usize,
    cells: Vec<Syllable>,
}

impl Prastara {
    fn from_cells(n: usize, cells: Vec<Syllable>) -> Prastara {
        debug_assert_eq!(cells.len(), n << n);
        Prastara { n, cells }
    }

    /// Syllables per row.
    pub fn width(&self) -> usize {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.cells.len() / self.n
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, Syllable> {
        self.cells.chunks_exact(self.n)
    }

    /// Row `k`, counted from 1.
    pub fn row(&self, k: usize) -> Option<&[Syllable]> {
        let start = k.checked_sub(1)?.checked_mul(self.n)?;
        self.cells.get(start..start + self.n)
    }

    pub fn to_sequences(&self) -> Vec<GlSequence> {
        self.rows()
            .map(|r| GlSequence::from_slice(r).expect("rows are non-empty"))
            .collect()
    }
}

/// Recursive construction: `A(n) = [A(n-1) G ; A(n-1) L]`, `A(1) = [G ; L]`.
pub fn pingala_prastara(n: u32, guard: EnumerationGuard) -> Result<Prastara> {
    guard.check(n)?;
    Ok(Prastara::from_cells(n as usize, mix(n as usize)))
}

fn mix(n: usize) -> Vec<Syllable> {
    if n == 1 {
        return vec![Syllable::Guru, Syllable::Laghu];
    }
    let prev = mix(n - 1);
    let mut out = Vec::with_capacity(n << n);
    for last in [Syllable::Guru, Syllable::Laghu] {
        for row in prev.chunks_exact(n - 1) {
            out.extend_from_slice(row);
            out.push(last);
        }
    }
    out
}

/// Next row: laghu under the first guru, gurus to its left, the rest copied.
///
/// Returns `None` once every syllable is laghu.
pub fn kedara_successor(seq: &GlSequence) -> Option<GlSequence> {
    let mut next = seq.as_slice().to_vec();
    if advance(&mut next) {
        Some(GlSequence::new(next).expect("length preserved"))
    } else {
        None
    }
}

fn advance(row: &mut [Syllable]) -> bool {
    match row.iter().position(|s| *s == Syllable::Guru) {
        Some(first_guru) => {
            row[..first_guru].fill(Syllable::Guru);
            row[first_guru] = Syllable::Laghu;
            true
        }
        None => false,
    }
}

/// Iterative construction from the all-guru row.
pub fn kedara_prastara(n: u32, guard: EnumerationGuard) -> Result<Prastara> {
    guard.check(n)?;
    let n = n as usize;
    let mut cells = Vec::with_capacity(n << n);
    let mut row = vec![Syllable::Guru; n];
    loop {
        cells.extend_from_slice(&row);
        if !advance(&mut row) {
            break;
        }
    }
    Ok(Prastara::from_cells(n, cells))
}

/// Lazily yields the rows of the `n`-syllable prastara.
///
/// No guard applies; the caller decides how much to consume.
pub fn prastara_stream(n: usize) -> PrastaraStream {
    assert!(n > 0, "sequences have at least one syllable");
    PrastaraStream {
        next: Some(GlSequence::all_guru(n)),
    }
}

#[derive(Debug, Clone)]
pub struct PrastaraStream {
    next: Option<GlSequence>,
}

impl Iterator for PrastaraStream {
    type Item = GlSequence;

    fn next(&mut self) -> Option<GlSequence> {
        let current = self.next.take()?;
        self.next = kedara_successor(&current);
        Some(current)
    }
}

impl FusedIterator for PrastaraStream {}
