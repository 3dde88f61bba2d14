//! Combinatorial algorithms of classical Indian prosody.
//!
//! A *prastara* lists all `2^n` sequences of `n` long (guru, `G`) and short
//! (laghu, `L`) syllables. This crate builds it recursively and iteratively,
//! converts between rows and row numbers in both directions, counts rows by
//! laghu content with three binomial constructions, computes `2^n` by the
//! binary method and locates every row with a given number of laghus.
//! The [`oracle`] module holds modern reference computations for
//! cross-checking all of the above.
//!
//! ```
//! use chandas::{nashtam, uddishtam_pingala, GlSequence, RowIndex};
//!
//! let row = nashtam(&RowIndex::from(5), 3).unwrap();
//! assert_eq!(row.to_string(), "GGL");
//! assert_eq!(uddishtam_pingala(&"GLG".parse::<GlSequence>().unwrap()), RowIndex::from(3));
//! ```

pub mod binomial;
pub mod counting;
pub mod error;
pub mod indexing;
pub mod oracle;
pub mod pataka;
pub mod prastara;
pub mod types;

pub use binomial::{bhaskara_ncr, bhaskara_row, lagakriya, meru, LagakriyaTable, MeruPyramid};
pub use counting::{
    adhvayoga, sankhya_kedara_lagakriya, sankhya_kedara_uddishta, sankhya_pingala, sankhya_tokens,
    sankhya_trace, Exponent, PowerDomain, SankhyaToken, SankhyaTrace,
};
pub use error::{Error, Result};
pub use indexing::{
    nashtam, rank_base_b, rank_base_b_steps, uddishtam_kedara, uddishtam_pingala, BaseBNumeral,
};
pub use pataka::{pataka, pataka_column, PatakaMatrix};
pub use prastara::{
    kedara_prastara, kedara_successor, pingala_prastara, prastara_stream, EnumerationGuard,
    Prastara, PrastaraStream, DEFAULT_GUARD,
};
pub use types::{
    parse_sequence, render_syllables, to_modern_value, to_row_index, GlSequence, Natural, Notation,
    RowIndex, Syllable,
};
