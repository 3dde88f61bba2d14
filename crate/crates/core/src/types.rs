//! Syllables, sequences and the bridge between G/L notation and binary values.
//!
//! A sequence is written left to right, position 1 first. Position `i`
//! carries place value `2^(i-1)`, so the higher place values sit to the
//! right. Guru is the digit 0 and Laghu the digit 1. Rows of a prastara
//! are counted from 1, so the row index of a sequence is its value plus one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Unbounded non-negative integer used for every count, index and power.
pub type Natural = BigUint;

/// A long (guru) or short (laghu) syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    Guru,
    Laghu,
}

impl Syllable {
    pub fn digit(self) -> u8 {
        match self {
            Syllable::Guru => 0,
            Syllable::Laghu => 1,
        }
    }

    pub fn from_digit(digit: u8) -> Option<Syllable> {
        match digit {
            0 => Some(Syllable::Guru),
            1 => Some(Syllable::Laghu),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Syllable::Guru => 'G',
            Syllable::Laghu => 'L',
        }
    }

    pub fn is_laghu(self) -> bool {
        self == Syllable::Laghu
    }
}

/// Textual notation for a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Notation {
    /// `G`/`L` letters, case-insensitive on input, uppercase on output.
    #[default]
    Gl,
    /// `0`/`1` digits in the same position order (not mirrored).
    Binary01,
}

/// A non-empty laghu/guru sequence; one row of a prastara.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlSequence(Vec<Syllable>);

impl GlSequence {
    pub fn new(syllables: Vec<Syllable>) -> Result<GlSequence> {
        if syllables.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(GlSequence(syllables))
    }

    pub fn from_slice(syllables: &[Syllable]) -> Result<GlSequence> {
        GlSequence::new(syllables.to_vec())
    }

    /// The sequence of `n` gurus (row 1). Panics if `n == 0`.
    pub fn all_guru(n: usize) -> GlSequence {
        assert!(n > 0, "sequences have at least one syllable");
        GlSequence(vec![Syllable::Guru; n])
    }

    /// The sequence of `n` laghus (row 2^n). Panics if `n == 0`.
    pub fn all_laghu(n: usize) -> GlSequence {
        assert!(n > 0, "sequences have at least one syllable");
        GlSequence(vec![Syllable::Laghu; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Syllable] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Syllable> {
        self.0
    }

    /// Syllable at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<Syllable> {
        position.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn laghu_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_laghu()).count()
    }

    pub fn is_all_laghu(&self) -> bool {
        self.0.iter().all(|s| s.is_laghu())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Syllable> {
        self.0.iter()
    }

    pub fn render(&self, notation: Notation) -> String {
        render_syllables(&self.0, notation)
    }

    pub fn parse(text: &str, notation: Notation) -> Result<GlSequence> {
        parse_sequence(text, notation)
    }
}

impl fmt::Display for GlSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Gl))
    }
}

impl FromStr for GlSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<GlSequence> {
        parse_sequence(s, Notation::Gl)
    }
}

impl AsRef<[Syllable]> for GlSequence {
    fn as_ref(&self) -> &[Syllable] {
        &self.0
    }
}

impl<'a> IntoIterator for &'a GlSequence {
    type Item = &'a Syllable;
    type IntoIter = std::slice::Iter<'a, Syllable>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Renders a row in the given notation without any separator.
pub fn render_syllables(syllables: &[Syllable], notation: Notation) -> String {
    syllables
        .iter()
        .map(|s| match notation {
            Notation::Gl => s.letter(),
            Notation::Binary01 => char::from(b'0' + s.digit()),
        })
        .collect()
}

/// 1-based position of a row within a prastara.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowIndex(Natural);

impl RowIndex {
    /// Returns `None` for zero; row counting starts at 1.
    pub fn new(k: Natural) -> Option<RowIndex> {
        if k == BigUint::ZERO {
            None
        } else {
            Some(RowIndex(k))
        }
    }

    pub fn first() -> RowIndex {
        RowIndex(Natural::one())
    }

    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_natural(self) -> Natural {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for RowIndex {
    /// Panics on zero.
    fn from(k: u64) -> RowIndex {
        assert!(k > 0, "row indices start at 1");
        RowIndex(Natural::from(k))
    }
}

impl fmt::Display for RowIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for RowIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<RowIndex> {
        let k: Natural = s
            .parse()
            .map_err(|_| Error::InvalidArgs(format!("{s:?} is not a row number")))?;
        RowIndex::new(k).ok_or_else(|| Error::InvalidArgs("row numbers start at 1".into()))
    }
}

/// Binary value of a sequence: the sum of `2^(i-1)` over laghu positions `i`.
pub fn to_modern_value(seq: &GlSequence) -> Natural {
    let mut value = Natural::ZERO;
    for (i, s) in seq.iter().enumerate() {
        if s.is_laghu() {
            value.set_bit(i as u64, true);
        }
    }
    value
}

/// Row of `seq` within its prastara: binary value plus one.
pub fn to_row_index(seq: &GlSequence) -> RowIndex {
    RowIndex(to_modern_value(seq) + 1u32)
}

/// Parses a sequence, keeping the left-to-right character order as positions.
///
/// Error positions are 1-based character positions.
pub fn parse_sequence(text: &str, notation: Notation) -> Result<GlSequence> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let syllables = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            let s = match (notation, c) {
                (Notation::Gl, 'G' | 'g') => Some(Syllable::Guru),
                (Notation::Gl, 'L' | 'l') => Some(Syllable::Laghu),
                (Notation::Binary01, '0') => Some(Syllable::Guru),
                (Notation::Binary01, '1') => Some(Syllable::Laghu),
                _ => None,
            };
            s.ok_or(Error::InvalidCharacter {
                position: i + 1,
                found: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GlSequence::new(syllables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> GlSequence {
        s.parse().unwrap()
    }

    #[test]
    fn modern_value_examples() {
        assert_eq!(to_modern_value(&seq("GGL")), Natural::from(4u32));
        assert_eq!(to_modern_value(&seq("GGG")), Natural::from(0u32));
        assert_eq!(to_modern_value(&seq("LLL")), Natural::from(7u32));
    }

    #[test]
    fn row_index_examples() {
        assert_eq!(to_row_index(&seq("GGL")), RowIndex::from(5));
        assert_eq!(to_row_index(&seq("GGG")), RowIndex::from(1));
        assert_eq!(to_row_index(&seq("GLG")), RowIndex::from(3));
    }

    #[test]
    fn parse_examples() {
        use Syllable::*;
        assert_eq!(
            parse_sequence("GLG", Notation::Gl).unwrap().as_slice(),
            &[Guru, Laghu, Guru]
        );
        assert_eq!(
            parse_sequence("010", Notation::Binary01)
                .unwrap()
                .as_slice(),
            &[Guru, Laghu, Guru]
        );
        assert_eq!(
            parse_sequence("GLX", Notation::Gl),
            Err(Error::InvalidCharacter {
                position: 3,
                found: 'X'
            })
        );
    }

    #[test]
    fn parse_rejects_empty_and_cross_notation() {
        assert_eq!(parse_sequence("", Notation::Gl), Err(Error::EmptyInput));
        assert_eq!(
            parse_sequence("", Notation::Binary01),
            Err(Error::EmptyInput)
        );
        assert!(matches!(
            parse_sequence("0G", Notation::Gl),
            Err(Error::InvalidCharacter { position: 1, .. })
        ));
        assert!(matches!(
            parse_sequence("01g", Notation::Binary01),
            Err(Error::InvalidCharacter { position: 3, .. })
        ));
        assert_eq!(GlSequence::new(vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn gl_parsing_is_case_insensitive_and_output_uppercase() {
        let s = parse_sequence("gLl", Notation::Gl).unwrap();
        assert_eq!(s.to_string(), "GLL");
        assert_eq!(s.render(Notation::Binary01), "011");
    }

    #[test]
    fn row_index_rejects_zero() {
        assert!(RowIndex::new(Natural::ZERO).is_none());
        assert!("0".parse::<RowIndex>().is_err());
        assert_eq!("12".parse::<RowIndex>().unwrap(), RowIndex::from(12));
    }

    #[test]
    fn exhaustive_row_index_matches_bit_layout() {
        for n in 1..=16usize {
            for v in 0u32..(1 << n) {
                let syllables = (0..n)
                    .map(|i| Syllable::from_digit(((v >> i) & 1) as u8).unwrap())
                    .collect();
                let s = GlSequence::new(syllables).unwrap();
                assert_eq!(to_row_index(&s), RowIndex::from(v as u64 + 1));
            }
        }
    }

    fn arb_sequence() -> impl Strategy<Value = GlSequence> {
        prop::collection::vec(
            prop_oneof![Just(Syllable::Guru), Just(Syllable::Laghu)],
            1..64,
        )
        .prop_map(|v| GlSequence::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn parse_inverts_render(s in arb_sequence()) {
            for notation in [Notation::Gl, Notation::Binary01] {
                prop_assert_eq!(parse_sequence(&s.render(notation), notation).unwrap(), s.clone());
            }
        }
    }
}
