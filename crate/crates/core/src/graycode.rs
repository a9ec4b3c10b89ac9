//! The reflected Gray code as a ranking map: ξ_n sends a vertex of Q_n to a
//! label in 1..2^n so that consecutive labels differ in exactly one bit.

use crate::error::{Error, Result};
use crate::hypercube::{CubeVertex, VertexSubset};

/// A Gray-code rank in 1..=2^n. Coincides with host labels on cylinders.
pub type GrayLabel = u64;

/// ξ_n(u): one plus the integer whose bits are the prefix parities of u.
pub fn gray_rank(u: CubeVertex) -> GrayLabel {
    u64::from(gray_rank_bits(u.bits())) + 1
}

/// Prefix-xor from the most significant bit: bit i of the result is
/// u_1 ⊕ … ⊕ u_i. Inverse of `v ^ (v >> 1)`.
pub(crate) fn gray_rank_bits(bits: u32) -> u32 {
    let mut x = bits;
    x ^= x >> 1;
    x ^= x >> 2;
    x ^= x >> 4;
    x ^= x >> 8;
    x ^= x >> 16;
    x
}

/// ξ_n^{-1}(label).
pub fn gray_unrank(n: u32, label: GrayLabel) -> Result<CubeVertex> {
    if label < 1 || label > 1u64 << n {
        return Err(Error::Label {
            label,
            max: 1u64 << n,
        });
    }
    let rank = (label - 1) as u32;
    CubeVertex::new(n, rank ^ (rank >> 1))
}

/// g_i^n: the Type of the i-th Gray segment, for 1 ≤ i ≤ 2^{n-1}.
///
/// For n ≥ 3 this follows the piecewise formula (ramp up to 2^{n-3}, ramp
/// down, then periodic with period 2^{n-2}); for n = 2 both segments have
/// Type 0, computed directly since 2^{n-3} is fractional there.
pub fn g_value(n: u32, i: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Dimension { n, min: 2, max: 32 });
    }
    if i < 1 || i > 1u64 << (n - 1) {
        return Err(Error::Index {
            what: "gray segment",
            index: i,
            min: 1,
            max: 1u64 << (n - 1),
        });
    }
    if n == 2 {
        return Ok(0);
    }
    let period = 1u64 << (n - 2);
    let ramp = 1u64 << (n - 3);
    let j = (i - 1) % period + 1;
    Ok(if j <= ramp { j - 1 } else { period - (j - 1) })
}

/// G_i = ξ_n^{-1}({i, …, i + 2^{n-1} − 1}): the preimage of a window of
/// 2^{n-1} consecutive labels.
pub fn segment_set(n: u32, i: u64) -> Result<VertexSubset> {
    let half = 1u64 << (n - 1);
    if i < 1 || i > half {
        return Err(Error::Index {
            what: "gray segment",
            index: i,
            min: 1,
            max: half,
        });
    }
    let mut s = VertexSubset::empty(n)?;
    for label in i..i + half {
        s.insert(gray_unrank(n, label)?.bits());
    }
    Ok(s)
}
