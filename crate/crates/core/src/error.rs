use core::fmt;

/// Errors reported by the exact-computation layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sequence that is not weakly decreasing with positive parts was
    /// offered as a partition.
    InvalidPartition,
    /// An inner shape sticks out of its outer shape.
    InvalidSkewShape,
    /// A part index outside the sequence was requested.
    IndexOutOfRange { index: usize, len: usize },
    /// A part was asked to shrink below zero.
    PartTooSmall { part: u32, decrement: u32 },
    /// Two objects that must partition the same integer do not.
    SizeMismatch { left: u32, right: u32 },
    /// The hook-sum character is only defined for n >= 1.
    GammaUndefinedForEmpty,
    /// A checked integer operation left the representable range.
    Overflow,
    /// Inner-product decomposition produced a non-integer multiplicity,
    /// which means the input table was not a virtual character.
    NonIntegerMultiplicity,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition => {
                write!(f, "parts must be weakly decreasing and positive")
            }
            Error::InvalidSkewShape => {
                write!(f, "inner shape is not contained in outer shape")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "part index {index} out of range for length {len}")
            }
            Error::PartTooSmall { part, decrement } => {
                write!(f, "cannot decrement part {part} by {decrement}")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} != {right}")
            }
            Error::GammaUndefinedForEmpty => {
                write!(f, "the hook-sum character is undefined for n = 0")
            }
            Error::Overflow => write!(f, "exact integer overflow"),
            Error::NonIntegerMultiplicity => {
                write!(f, "non-integer multiplicity: table is not a virtual character")
            }
        }
    }
}

impl core::error::Error for Error {}
