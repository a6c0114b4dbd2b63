//! One round of the Fides permutation on a 4x8 grid of 5-bit (Fides-80) or
//! 6-bit (Fides-96) cells: SubCells, ShiftRows, MixColumns, round constant.

/// The 5-bit almost-bent S-box (bit 0 = least significant).
pub fn s5_table() -> [u8; 32] {
    let mut t = [0u8; 32];
    for (v, e) in t.iter_mut().enumerate() {
        let b = |i: usize| ((v >> i) & 1) as u8;
        let (x0, x1, x2, x3, x4) = (b(0), b(1), b(2), b(3), b(4));
        let a = x0 & x2;
        let bb = x1 & x4;
        let c = x2 & x3;
        let d = x0 & x4;
        let e2 = x2 & x4;
        let f = x1 & x2;
        let y0 = (x0 ^ x3 ^ bb ^ a) ^ 1;
        let y1 = x4 ^ c ^ d ^ e2 ^ (x0 & x1);
        let y2 = x3 ^ x4 ^ a ^ d ^ f ^ (x3 & x4);
        let y3 = x1 ^ x4 ^ a ^ c ^ f ^ (x1 & x3);
        let y4 = x1 ^ x2 ^ x3 ^ bb ^ e2 ^ f ^ (x0 & x3);
        *e = y0 | (y1 << 1) | (y2 << 2) | (y3 << 3) | (y4 << 4);
    }
    t
}

/// The 6-bit S-box: the APN permutation in dimension six.
pub const S6: [u8; 64] = [
    0, 54, 48, 13, 15, 18, 53, 35, 25, 63, 45, 52, 3, 20, 41, 33, 59, 36, 2, 34, 10, 8, 57, 37,
    60, 19, 42, 14, 50, 26, 58, 24, 39, 27, 21, 17, 16, 29, 1, 62, 47, 40, 51, 56, 7, 43, 44, 38,
    31, 11, 4, 28, 61, 46, 5, 49, 9, 6, 23, 32, 30, 12, 55, 22,
];

/// Row rotation offsets for the 4x8 grid.
pub const SHIFTS: [usize; 4] = [0, 1, 2, 7];

/// One round on a 32-cell state (row-major: cell = 8*row + col).
pub fn round(state: &[u8; 32], cell_bits: u8, round_index: u8) -> [u8; 32] {
    let s5;
    let sbox: &[u8] = if cell_bits == 5 {
        s5 = s5_table();
        &s5
    } else {
        &S6
    };
    let mask = (1u8 << cell_bits) - 1;
    let mut s = *state;
    for c in s.iter_mut() {
        *c = sbox[*c as usize];
    }
    // ShiftRows: row r rotated left by SHIFTS[r]
    let old = s;
    for row in 0..4 {
        for col in 0..8 {
            s[8 * row + col] = old[8 * row + (col + SHIFTS[row]) % 8];
        }
    }
    // MixColumns with the binary almost-MDS matrix circ(0,1,1,1)
    let old = s;
    for col in 0..8 {
        let c = [old[col], old[col + 8], old[col + 16], old[col + 24]];
        s[col] = c[1] ^ c[2] ^ c[3];
        s[col + 8] = c[0] ^ c[2] ^ c[3];
        s[col + 16] = c[0] ^ c[1] ^ c[3];
        s[col + 24] = c[0] ^ c[1] ^ c[2];
    }
    // round constant into the first column
    for row in 0..4 {
        s[8 * row] ^= (round_index.wrapping_add(row as u8 + 1)) & mask;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s5_matches_published_table() {
        let want: [u8; 32] = [
            0x01, 0x00, 0x19, 0x1a, 0x11, 0x1d, 0x15, 0x1b, 0x14, 0x05, 0x04, 0x17, 0x0e, 0x12,
            0x02, 0x1c, 0x0f, 0x08, 0x06, 0x03, 0x0d, 0x07, 0x18, 0x10, 0x1e, 0x09, 0x1f, 0x0a,
            0x16, 0x0c, 0x0b, 0x13,
        ];
        assert_eq!(s5_table(), want);
    }

    #[test]
    fn s6_is_apn_permutation() {
        let mut seen = [false; 64];
        for &v in S6.iter() {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
        for a in 1..64usize {
            let mut count = [0u8; 64];
            for x in 0..64usize {
                count[(S6[x ^ a] ^ S6[x]) as usize] += 1;
            }
            assert!(count.iter().all(|&c| c <= 2), "derivative {a} not 2-to-1");
        }
    }

    #[test]
    fn round_is_a_permutation_of_states() {
        let a = round(&[0u8; 32], 5, 0);
        let b = round(&[1u8; 32], 5, 0);
        assert_ne!(a, b);
    }
}
