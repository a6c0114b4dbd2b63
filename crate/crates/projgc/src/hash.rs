//! The tweakable hash used to encrypt projection-table rows.
//!
//! `H(x, t) = pi(pi(x) ^ t) ^ pi(x)` over a pluggable 128-bit permutation,
//! by default AES-128 under the fixed all-zero key. The narrow variant for an
//! m-bit output wire truncates the digest to kappa + m bits.
//!
//! Tweaks are partitioned into namespaces so that garbling, authenticity
//! digests and stream digests never collide: gate tweaks use the low 62-bit
//! space, stream digests live at 2^62, authenticity digests at 2^63.

use aes::cipher::{BlockEncrypt, KeyInit};
use aes::Aes128;

use crate::labels::Label;

/// Base tweak for framed-stream digests.
pub const DIGEST_TWEAK_BASE: u128 = 1 << 62;
/// Base tweak for authenticity-mode output digests.
pub const AUTH_TWEAK_BASE: u128 = 1 << 63;

/// Map a gate's output wire index into the tweak space. Injective; the index
/// is written into the low 64 bits little-endian.
pub fn tweak_of(gate_index: u64) -> u128 {
    gate_index as u128
}

/// A public fixed 128-bit permutation.
pub trait Permutation128: Send + Sync {
    fn apply(&self, block: u128) -> u128;
}

/// AES-128 under a fixed, publicly known key (all zero).
pub struct FixedKeyAes {
    cipher: Aes128,
}

impl FixedKeyAes {
    pub fn new() -> Self {
        FixedKeyAes { cipher: Aes128::new(&[0u8; 16].into()) }
    }
}

impl Default for FixedKeyAes {
    fn default() -> Self {
        Self::new()
    }
}

impl Permutation128 for FixedKeyAes {
    fn apply(&self, block: u128) -> u128 {
        let mut b = block.to_le_bytes().into();
        self.cipher.encrypt_block(&mut b);
        u128::from_le_bytes(b.into())
    }
}

/// The identity permutation; only useful for algebraic tests, where
/// `H(x, t) = t`.
pub struct IdentityPermutation;

impl Permutation128 for IdentityPermutation {
    fn apply(&self, block: u128) -> u128 {
        block
    }
}

/// The tweakable hash H: {0,1}^128 x {0,1}^128 -> {0,1}^128.
pub struct TweakableHash<P: Permutation128 = FixedKeyAes> {
    perm: P,
}

impl TweakableHash<FixedKeyAes> {
    pub fn new() -> Self {
        TweakableHash { perm: FixedKeyAes::new() }
    }
}

impl Default for TweakableHash<FixedKeyAes> {
    fn default() -> Self {
        Self::new()
    }
}

impl<P: Permutation128> TweakableHash<P> {
    pub fn with_permutation(perm: P) -> Self {
        TweakableHash { perm }
    }

    /// Full-width digest.
    pub fn hash(&self, input: u128, tweak: u128) -> u128 {
        let y = self.perm.apply(input);
        self.perm.apply(y ^ tweak) ^ y
    }

    /// Digest of a label (zero-padded to the block size), truncated to
    /// kappa + m bits for an m-bit output wire.
    pub fn hash_label(&self, label: &Label, tweak: u128, out_mask: u128) -> u128 {
        self.hash(label.bits, tweak) & out_mask
    }

    /// Digest of a byte stream under a reserved tweak namespace; used for
    /// circuit and frame digests, not for row encryption.
    pub fn digest_bytes(&self, data: &[u8]) -> u128 {
        let mut state = (data.len() as u128).wrapping_mul(0x9E3779B97F4A7C15);
        for (i, chunk) in data.chunks(16).enumerate() {
            let mut block = [0u8; 16];
            block[..chunk.len()].copy_from_slice(chunk);
            let tweak = DIGEST_TWEAK_BASE + i as u128;
            state = self.hash(state ^ u128::from_le_bytes(block), tweak);
        }
        state
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let h = TweakableHash::new();
        assert_eq!(h.hash(12345, 678), h.hash(12345, 678));
    }

    #[test]
    fn identity_permutation_collapses_to_tweak() {
        // with pi = id: H(x, t) = (x ^ t) ^ x = t
        let h = TweakableHash::with_permutation(IdentityPermutation);
        for (x, t) in [(0u128, 0u128), (7, 9), (u128::MAX, 3)] {
            assert_eq!(h.hash(x, t), t);
        }
    }

    #[test]
    fn zero_input_known_answer() {
        // pi(0) under zero-key AES-128, frozen from an independent AES
        // implementation; H(0,0) = pi(pi(0)) ^ pi(0).
        let p = FixedKeyAes::new();
        let pi0 = p.apply(0);
        assert_eq!(
            pi0.to_le_bytes(),
            [
                0x66, 0xe9, 0x4b, 0xd4, 0xef, 0x8a, 0x2c, 0x3b, 0x88, 0x4c, 0xfa, 0x59, 0xca,
                0x34, 0x2b, 0x2e
            ]
        );
        let h = TweakableHash::new();
        assert_eq!(h.hash(0, 0), p.apply(pi0) ^ pi0);
    }

    #[test]
    fn tweak_encoding() {
        assert_eq!(tweak_of(5).to_le_bytes()[0], 5);
        assert_eq!(&tweak_of(5).to_le_bytes()[1..], &[0u8; 15]);
        assert_eq!(tweak_of(0), 0);
        assert_ne!(tweak_of(1), tweak_of(2));
    }

    #[test]
    fn narrow_variant_is_truncation() {
        let h = TweakableHash::new();
        let label = Label::new(0xDEADBEEF, 4);
        let mask = (1u128 << 124) - 1;
        assert_eq!(h.hash_label(&label, 7, mask), h.hash(label.bits, 7) & mask);
    }

    #[test]
    fn avalanche_smoke() {
        use rand::{Rng, SeedableRng};
        let h = TweakableHash::new();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(99);
        let mut total = 0u32;
        let trials = 1000;
        for _ in 0..trials {
            let x: u128 = rng.gen();
            let bit = rng.gen_range(0..128);
            let d = h.hash(x, 0) ^ h.hash(x ^ (1 << bit), 0);
            total += d.count_ones();
        }
        let avg = total as f64 / trials as f64;
        assert!(avg >= 32.0, "average flipped bits {avg} below 25% of 128");
    }

    #[test]
    fn tweak_separation_no_collisions() {
        use std::collections::HashSet;
        let h = TweakableHash::new();
        let label = 0x0123456789ABCDEFu128;
        let mut seen = HashSet::new();
        for t in 0..100_000u128 {
            assert!(seen.insert(h.hash(label, t)), "collision at tweak {t}");
        }
    }
}
