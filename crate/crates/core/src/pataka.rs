//! Positions of the rows with exactly `r` laghus, found without writing out
//! the prastara.
//!
//! Column 0 holds row 1. Each entry of column `j` is `1` plus a sum of `j`
//! distinct powers of two; column `j + 1` extends every entry, in order, by
//! each strictly larger power not yet used in it, smallest power first.
//! Extending only by larger powers is what skips sums that already occur
//! elsewhere in the matrix.

use crate::error::{Error, Result};
use crate::prastara::EnumerationGuard;
use crate::types::RowIndex;

/// Ragged matrix: column `r` lists the rows holding `r` laghus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatakaMatrix {
    n: u32,
    columns: Vec<Vec<RowIndex>>,
}

impl PatakaMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn columns(&self) -> &[Vec<RowIndex>] {
        &self.columns
    }

    pub fn column(&self, r: usize) -> Option<&[RowIndex]> {
        self.columns.get(r).map(Vec::as_slice)
    }

    pub fn into_columns(self) -> Vec<Vec<RowIndex>> {
        self.columns
    }
}

/// A position together with the exponent of the next power it may take.
#[derive(Clone, Copy)]
struct Entry {
    row: u64,
    next_power: u32,
}

fn build_columns(n: u32, upto: u32) -> Vec<Vec<RowIndex>> {
    let mut current = vec![Entry {
        row: 1,
        next_power: 0,
    }];
    let mut columns = Vec::with_capacity(upto as usize + 1);
    for _ in 0..upto {
        let next: Vec<Entry> = current
            .iter()
            .flat_map(|e| {
                (e.next_power..n).map(move |p| Entry {
                    row: e.row + (1u64 << p),
                    next_power: p + 1,
                })
            })
            .collect();
        columns.push(std::mem::replace(&mut current, next));
    }
    columns.push(current);
    columns
        .into_iter()
        .map(|col| col.into_iter().map(|e| RowIndex::from(e.row)).collect())
        .collect()
}

/// All `n + 1` columns for the `n`-syllable prastara.
pub fn pataka(n: u32, guard: EnumerationGuard) -> Result<PatakaMatrix> {
    guard.check(n)?;
    Ok(PatakaMatrix {
        n,
        columns: build_columns(n, n),
    })
}

/// Column `r` alone; the construction stops after column `r`.
pub fn pataka_column(n: u32, r: u32, guard: EnumerationGuard) -> Result<Vec<RowIndex>> {
    guard.check(n)?;
    if r > n {
        return Err(Error::InvalidArgs(format!("r = {r} exceeds n = {n}")));
    }
    Ok(build_columns(n, r).pop().expect("column r was built"))
}
