use std::fmt;

/// Errors returned by the enumeration, ranking and counting routines.
///
/// Out-of-range inputs are always rejected, never clamped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text or digit list was empty.
    EmptyInput,
    /// Character at the given 1-based position is not valid for the notation.
    InvalidCharacter { position: usize, found: char },
    /// Materializing a table of `n` syllables would exceed the enumeration guard.
    GuardExceeded { n: u32, guard: u32 },
    /// Row index outside `1..=2^n`.
    IndexOutOfRange { row: String, n: u32 },
    /// Digit at the given 0-based index is not in `[0, base - 1]`.
    DigitOutOfRange { index: usize, digit: u32, base: u32 },
    /// Radix below 2 (or above 36 for textual numerals).
    InvalidBase(u32),
    /// Value does not fit into the requested number of bits.
    Overflow { value: String, width: usize },
    /// Argument combination outside the operation's domain, e.g. `r > n`.
    InvalidArgs(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "empty input"),
            Error::InvalidCharacter { position, found } => {
                write!(f, "invalid character {found:?} at position {position}")
            }
            Error::GuardExceeded { n, guard } => write!(
                f,
                "n = {n} exceeds the enumeration guard of {guard} (2^{n} rows)"
            ),
            Error::IndexOutOfRange { row, n } => {
                write!(f, "row {row} is outside 1..=2^{n}")
            }
            Error::DigitOutOfRange { index, digit, base } => write!(
                f,
                "digit {digit} at index {index} is out of range for base {base}"
            ),
            Error::InvalidBase(base) => write!(f, "invalid base {base}"),
            Error::Overflow { value, width } => {
                write!(f, "{value} does not fit in {width} bits")
            }
            Error::InvalidArgs(msg) => write!(f, "invalid arguments: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
