//! Midori64. State cells are numbered column-major; round constants are the
//! leading fraction bits of pi, one 4x4 bit matrix per round.

pub const SB0: [u8; 16] = [
    0xc, 0xa, 0xd, 0x3, 0xe, 0xb, 0xf, 0x7, 0x8, 0x9, 0x1, 0x5, 0x0, 0x2, 0x4, 0x6,
];

/// ShuffleCell: output cell i is input cell SHUFFLE[i].
pub const SHUFFLE: [usize; 16] = [0, 10, 5, 15, 14, 4, 11, 1, 9, 3, 12, 6, 7, 13, 2, 8];

const PI_HEX: [u8; 60] = *b"243F6A8885A308D313198A2E03707344A4093822299F31D0082EFA98EC4E";

/// Round-constant bit for cell `cell` of round `r`: read 16 bits per round
/// row-major from the pi fraction (cell index is column-major).
pub fn beta(r: usize, cell: usize) -> u8 {
    let row = cell % 4;
    let col = cell / 4;
    let bit_index = 16 * r + 4 * row + col;
    let hex = PI_HEX[bit_index / 4];
    let v = (hex as char).to_digit(16).unwrap() as u8;
    (v >> (3 - (bit_index % 4))) & 1
}

fn mix_column(s: &mut [u8; 16]) {
    for col in 0..4 {
        let c: [u8; 4] = s[4 * col..4 * col + 4].try_into().unwrap();
        s[4 * col] = c[1] ^ c[2] ^ c[3];
        s[4 * col + 1] = c[0] ^ c[2] ^ c[3];
        s[4 * col + 2] = c[0] ^ c[1] ^ c[3];
        s[4 * col + 3] = c[0] ^ c[1] ^ c[2];
    }
}

/// Encrypt a 64-bit block; cell i of the state is nibble i of the value,
/// leftmost nibble first.
pub fn encrypt(pt: u64, key: &[u8; 16]) -> u64 {
    let cells = |v: u64| -> [u8; 16] { std::array::from_fn(|i| ((v >> (4 * (15 - i))) & 0xF) as u8) };
    let k0 = cells(u64::from_be_bytes(key[..8].try_into().unwrap()));
    let k1 = cells(u64::from_be_bytes(key[8..].try_into().unwrap()));
    let wk: [u8; 16] = std::array::from_fn(|i| k0[i] ^ k1[i]);

    let mut s = cells(pt);
    for i in 0..16 {
        s[i] ^= wk[i];
    }
    for r in 0..15 {
        for c in s.iter_mut() {
            *c = SB0[*c as usize];
        }
        let old = s;
        for i in 0..16 {
            s[i] = old[SHUFFLE[i]];
        }
        mix_column(&mut s);
        let rk = if r % 2 == 0 { &k0 } else { &k1 };
        for i in 0..16 {
            s[i] ^= rk[i] ^ beta(r, i);
        }
    }
    for c in s.iter_mut() {
        *c = SB0[*c as usize];
    }
    let mut out = 0u64;
    for i in 0..16 {
        out |= ((s[i] ^ wk[i]) as u64) << (4 * (15 - i));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midori64_vectors() {
        assert_eq!(encrypt(0, &[0u8; 16]), 0x3c9cceda2bbd449a);
        let key: [u8; 16] = [
            0x68, 0x7d, 0xed, 0x3b, 0x3c, 0x85, 0xb3, 0xf3, 0x5b, 0x10, 0x09, 0x86, 0x3e, 0x2a,
            0x8c, 0xbf,
        ];
        assert_eq!(encrypt(0x42c20fd3b586879e, &key), 0x66bcdc6270d901cd);
    }

    #[test]
    fn sb0_is_involution() {
        for x in 0..16usize {
            assert_eq!(SB0[SB0[x] as usize] as usize, x);
        }
    }
}
