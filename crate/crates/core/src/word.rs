//! Machine words that carry residues modulo `2^m`.
//!
//! Every operation in `Z_{2^m}` is wrapping machine arithmetic followed by a
//! mask, because `2^m` divides `2^BITS`. That is what lets the whole crate be
//! generic over the word width.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned, WrappingAdd, WrappingMul, WrappingNeg, WrappingSub};

/// An unsigned machine word usable as the residue type of `Z_{2^m}`.
pub trait Word:
    PrimInt
    + Unsigned
    + WrappingAdd
    + WrappingSub
    + WrappingMul
    + WrappingNeg
    + Debug
    + Display
    + Hash
    + Default
    + Send
    + Sync
    + 'static
{
    /// Bit width of the word.
    const BITS: u32;

    /// Truncating conversion from `u64`.
    fn from_u64_wrapping(x: u64) -> Self;

    /// Lossless widening to `u64`.
    fn as_u64(self) -> u64;
}

macro_rules! impl_word {
    ($($t:ty),*) => {$(
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;

            #[inline]
            fn from_u64_wrapping(x: u64) -> Self {
                x as $t
            }

            #[inline]
            fn as_u64(self) -> u64 {
                self as u64
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64);
