//! Wire-label algebra: offset matrices, value encoding and pointer bits.
//!
//! A label is a k-bit string (k = kappa + nbar, one 128-bit block by
//! default). The label encoding value `x` on a wire is the wire's zero label
//! XORed with the x-selected combination of that width's offset columns. The
//! bottom `n` bits of every offset column form an identity block, so the
//! bottom bits of a label always reveal `value XOR lsb(zero label)` — the
//! pointer bits used for point-and-permute.

use rand::RngCore;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("wire width {width} out of range 1..={max}")]
    WidthOutOfRange { width: u8, max: u8 },
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: u8, right: u8 },
    #[error("value {value:#x} does not fit in {width} bits")]
    ValueTooWide { value: u64, width: u8 },
}

/// Global scheme parameters. `kappa` security bits plus `nbar` pointer bits
/// must fit the 128-bit block of the hash permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeParams {
    pub kappa: u16,
    pub nbar: u8,
    pub seed: Option<u64>,
}

impl Default for SchemeParams {
    fn default() -> Self {
        SchemeParams { kappa: 120, nbar: 8, seed: None }
    }
}

impl SchemeParams {
    pub fn with_seed(seed: u64) -> Self {
        SchemeParams { seed: Some(seed), ..Self::default() }
    }

    /// Label length in bits.
    pub fn k(&self) -> u16 {
        self.kappa + self.nbar as u16
    }

    pub fn validate(&self) -> Result<(), LabelError> {
        if self.nbar == 0 || self.nbar > 8 {
            return Err(LabelError::WidthOutOfRange { width: self.nbar, max: 8 });
        }
        assert!(self.k() <= 128, "labels must fit one 128-bit block");
        Ok(())
    }

    /// Mask selecting the kappa + width semantic bits of a label.
    pub fn label_mask(&self, width: u8) -> u128 {
        let bits = self.kappa as u32 + width as u32;
        if bits >= 128 {
            u128::MAX
        } else {
            (1u128 << bits) - 1
        }
    }

    /// Serialized size of one table row for an m-bit output wire, in bits.
    pub fn row_bits(&self, m: u8) -> usize {
        self.kappa as usize + m as usize
    }
}

/// A k-bit wire label tagged with the semantic width of its wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label {
    pub bits: u128,
    pub width: u8,
}

impl Label {
    pub fn new(bits: u128, width: u8) -> Self {
        Label { bits, width }
    }

    pub fn zero(width: u8) -> Self {
        Label { bits: 0, width }
    }

    /// The bottom `n` bits as an integer (bit 0 least significant).
    pub fn lsb(&self, n: u8) -> Result<u64, LabelError> {
        if n > self.width {
            return Err(LabelError::WidthMismatch { left: n, right: self.width });
        }
        Ok((self.bits & ((1u128 << n) - 1)) as u64)
    }

    /// Pointer bits: the bottom `width` bits.
    pub fn pointer(&self) -> u64 {
        (self.bits & ((1u128 << self.width) - 1)) as u64
    }

    pub fn xor(&self, other: &Label) -> Result<Label, LabelError> {
        if self.width != other.width {
            return Err(LabelError::WidthMismatch { left: self.width, right: other.width });
        }
        Ok(Label { bits: self.bits ^ other.bits, width: self.width })
    }
}

/// The offset matrix R_n for one wire width: n columns of kappa + n bits,
/// identity in the bottom n bits, uniform above. One matrix is shared by all
/// wires of that width within a garbling session.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetMatrix {
    width: u8,
    cols: Vec<u128>,
}

impl OffsetMatrix {
    pub fn width(&self) -> u8 {
        self.width
    }

    /// Column `i` (0-based: the offset for value bit `i`).
    pub fn column(&self, i: usize) -> u128 {
        self.cols[i]
    }

    /// The linear combination selected by the bits of `x`.
    pub fn combine(&self, x: u64) -> u128 {
        let mut acc = 0u128;
        for (i, &col) in self.cols.iter().enumerate() {
            if (x >> i) & 1 == 1 {
                acc ^= col;
            }
        }
        acc
    }
}

/// Draw the offset matrix for width `n`: identity bottom block, uniform top
/// kappa bits. Deterministic for a seeded rng.
pub fn gen_offsets(
    n: u8,
    params: &SchemeParams,
    rng: &mut impl RngCore,
) -> Result<OffsetMatrix, LabelError> {
    if n == 0 || n > params.nbar {
        return Err(LabelError::WidthOutOfRange { width: n, max: params.nbar });
    }
    let cols = (0..n)
        .map(|i| {
            let top = random_block(rng) & params.label_mask(n);
            // clear the bottom n bits, then set the identity bit
            let top = top & !((1u128 << n) - 1);
            top | (1u128 << i)
        })
        .collect();
    Ok(OffsetMatrix { width: n, cols })
}

/// Encode the n-bit value `x` relative to `zero_label`:
/// `W^x = W^0 xor x . R_n`.
pub fn encode_value(
    zero_label: &Label,
    x: u64,
    offsets: &OffsetMatrix,
) -> Result<Label, LabelError> {
    if zero_label.width != offsets.width {
        return Err(LabelError::WidthMismatch { left: zero_label.width, right: offsets.width });
    }
    let n = offsets.width;
    if n < 64 && x >> n != 0 {
        return Err(LabelError::ValueTooWide { value: x, width: n });
    }
    Ok(Label { bits: zero_label.bits ^ offsets.combine(x), width: n })
}

pub(crate) fn random_block(rng: &mut impl RngCore) -> u128 {
    let mut buf = [0u8; 16];
    rng.fill_bytes(&mut buf);
    u128::from_le_bytes(buf)
}

/// Draw a fresh zero label for a wire of width `n`.
pub fn random_label(n: u8, params: &SchemeParams, rng: &mut impl RngCore) -> Label {
    Label { bits: random_block(rng) & params.label_mask(n), width: n }
}
