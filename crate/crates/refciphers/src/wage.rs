//! The WAGE permutation: 37 cells of 7 bits, updated 111 times.

use crate::gf::{gf128_mul, gf128_pow};

/// Welch-Gong permutation over GF(2^7) mod x^7+x^3+x^2+x+1, decimation 13,
/// in the reversed-bit basis used by the cipher's tables.
pub fn wgp_table() -> [u8; 128] {
    fn rev7(x: u8) -> u8 {
        let mut out = 0u8;
        for i in 0..7 {
            out |= ((x >> i) & 1) << (6 - i);
        }
        out
    }
    let mut t = [0u8; 128];
    for (x, e) in t.iter_mut().enumerate() {
        let y = gf128_pow(rev7(x as u8), 13) ^ 1;
        let q = y
            ^ gf128_pow(y, 33)
            ^ gf128_pow(y, 39)
            ^ gf128_pow(y, 41)
            ^ gf128_pow(y, 104)
            ^ 1;
        *e = rev7(q);
    }
    t
}

/// The lightweight 7-bit S-box.
pub const SB: [u8; 128] = [
    0x2E, 0x1C, 0x6D, 0x2B, 0x35, 0x07, 0x7F, 0x3B, 0x28, 0x08, 0x0B, 0x5F, 0x31, 0x11, 0x1B,
    0x4D, 0x6E, 0x54, 0x0D, 0x09, 0x1F, 0x45, 0x75, 0x53, 0x6A, 0x5D, 0x61, 0x00, 0x04, 0x78,
    0x06, 0x1E, 0x37, 0x6F, 0x2F, 0x49, 0x64, 0x34, 0x7D, 0x19, 0x39, 0x33, 0x43, 0x57, 0x60,
    0x62, 0x13, 0x05, 0x77, 0x47, 0x4F, 0x4B, 0x1D, 0x2D, 0x24, 0x48, 0x74, 0x58, 0x25, 0x5E,
    0x5A, 0x76, 0x41, 0x42, 0x27, 0x3E, 0x6C, 0x01, 0x2C, 0x3C, 0x4E, 0x1A, 0x21, 0x2A, 0x0A,
    0x55, 0x3A, 0x38, 0x18, 0x7E, 0x0C, 0x63, 0x67, 0x56, 0x50, 0x7C, 0x32, 0x7A, 0x68, 0x02,
    0x6B, 0x17, 0x7B, 0x59, 0x71, 0x0F, 0x30, 0x10, 0x22, 0x3D, 0x40, 0x69, 0x52, 0x14, 0x36,
    0x44, 0x46, 0x03, 0x16, 0x65, 0x66, 0x72, 0x12, 0x0E, 0x29, 0x4A, 0x4C, 0x70, 0x15, 0x26,
    0x79, 0x51, 0x23, 0x3F, 0x73, 0x5B, 0x20, 0x5C,
];

pub const ROUNDS: usize = 111;

/// Per-round constant pairs (rc0, rc1) from successive states of a 7-bit
/// multiplicative generator over GF(2^7) mod x^7+x^3+1, seeded all-ones.
pub fn round_constants() -> Vec<(u8, u8)> {
    fn step(x: u8) -> u8 {
        let mut y = x << 1;
        if y & 0x80 != 0 {
            y ^= 0x89; // x^7 + x^3 + 1
        }
        y & 0x7F
    }
    let mut s = 0x7Fu8;
    (0..ROUNDS)
        .map(|_| {
            let rc0 = s;
            s = step(s);
            let rc1 = s;
            s = step(s);
            (rc0, rc1)
        })
        .collect()
}

/// Apply the full 111-round permutation to a 37-cell state (cell 0 first).
pub fn permute(state: &[u8; 37]) -> [u8; 37] {
    let wgp = wgp_table();
    let rcs = round_constants();
    let mut s = *state;
    for &(rc0, rc1) in rcs.iter() {
        let fb = s[31]
            ^ s[30]
            ^ s[26]
            ^ s[24]
            ^ s[19]
            ^ s[13]
            ^ s[12]
            ^ s[8]
            ^ s[6]
            ^ gf128_mul(2, s[0])
            ^ wgp[s[36] as usize]
            ^ rc1;
        s[5] ^= SB[s[8] as usize];
        s[11] ^= SB[s[15] as usize];
        s[19] ^= wgp[s[18] as usize] ^ rc0;
        s[24] ^= SB[s[27] as usize];
        s[30] ^= SB[s[34] as usize];
        let mut next = [0u8; 37];
        next[..36].copy_from_slice(&s[1..37]);
        next[36] = fb;
        s = next;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_bijections() {
        let wgp = wgp_table();
        let mut seen = [false; 128];
        for &v in wgp.iter() {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
        assert_eq!(
            &wgp[..16],
            &[0x00, 0x12, 0x0a, 0x4b, 0x66, 0x0c, 0x48, 0x73, 0x79, 0x3e, 0x61, 0x51, 0x01, 0x15, 0x17, 0x0e]
        );
        let mut seen = [false; 128];
        for &v in SB.iter() {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
    }

    #[test]
    fn permutation_changes_state() {
        let out = permute(&[0u8; 37]);
        assert_ne!(out, [0u8; 37]);
        let out2 = permute(&out);
        assert_ne!(out2, out);
    }
}
