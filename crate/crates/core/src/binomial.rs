//! Binomial coefficients by three constructions: the staircase table
//! (laga-kriya), the meru pyramid, and the multiplicative recursion
//! `C(n, r + 1) = C(n, r) * (n - r) / (r + 1)`.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::types::Natural;

/// Staircase table for `n` syllables.
///
/// Row `i` has `n + 1 - i` entries. The top row and the left column are all
/// ones; every other entry is the sum of the entry above and the entry to
/// its left. The last entry of row `i` is `C(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagakriyaTable {
    n: u32,
    rows: Vec<Vec<Natural>>,
}

impl LagakriyaTable {
    pub fn build(n: u32) -> Result<LagakriyaTable> {
        if n == 0 {
            return Err(Error::InvalidArgs("n must be at least 1".into()));
        }
        let width = n as usize + 1;
        let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(width);
        rows.push(vec![Natural::one(); width]);
        for i in 1..width {
            let above = &rows[i - 1];
            let mut row = Vec::with_capacity(width - i);
            row.push(Natural::one());
            for j in 1..width - i {
                let left: &Natural = &row[j - 1];
                let sum = &above[j] + left;
                row.push(sum);
            }
            rows.push(row);
        }
        Ok(LagakriyaTable { n, rows })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Natural>] {
        &self.rows
    }

    /// The anti-diagonal `[C(n,0), C(n,1), ..., C(n,n)]`.
    pub fn terminals(&self) -> Vec<Natural> {
        self.rows
            .iter()
            .map(|row| row.last().expect("rows are non-empty").clone())
            .collect()
    }
}

/// Number of rows with exactly `r` laghus, for each `r` in `0..=n`.
pub fn lagakriya(n: u32) -> Result<Vec<Natural>> {
    Ok(LagakriyaTable::build(n)?.terminals())
}

/// Triangle whose far cells are ones and whose inner cells are the sum of
/// the two cells above. Row `i` (from 0) has `i + 1` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeruPyramid {
    rows: Vec<Vec<Natural>>,
}

impl MeruPyramid {
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Natural>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Option<&[Natural]> {
        self.rows.get(i).map(Vec::as_slice)
    }
}

/// Builds a meru with `depth` rows; the apex alone is depth 1.
pub fn meru(depth: usize) -> Result<MeruPyramid> {
    if depth == 0 {
        return Err(Error::InvalidArgs("depth must be at least 1".into()));
    }
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(depth);
    rows.push(vec![Natural::one()]);
    for i in 1..depth {
        let above = &rows[i - 1];
        let mut row = Vec::with_capacity(i + 1);
        row.push(Natural::one());
        for j in 1..i {
            row.push(&above[j - 1] + &above[j]);
        }
        row.push(Natural::one());
        rows.push(row);
    }
    Ok(MeruPyramid { rows })
}

/// `C(n, r)` by the multiplicative recursion, multiplying before dividing.
pub fn bhaskara_ncr(n: u64, r: u64) -> Result<Natural> {
    if r > n {
        return Err(Error::InvalidArgs(format!("r = {r} exceeds n = {n}")));
    }
    Ok(bhaskara_steps(n, r)
        .pop()
        .expect("C(n, 0) is always present"))
}

/// `[C(n,0), ..., C(n,n)]` by the same recursion.
pub fn bhaskara_row(n: u64) -> Vec<Natural> {
    bhaskara_steps(n, n)
}

fn bhaskara_steps(n: u64, upto: u64) -> Vec<Natural> {
    let mut c = Natural::one();
    let mut out = Vec::with_capacity(upto as usize + 1);
    out.push(c.clone());
    for r in 0..upto {
        let (q, rem) = (c * (n - r)).div_rem(&Natural::from(r + 1));
        assert!(
            rem == Natural::ZERO,
            "C({n},{r}) * {} not divisible by {}",
            n - r,
            r + 1
        );
        c = q;
        out.push(c.clone());
    }
    out
}
