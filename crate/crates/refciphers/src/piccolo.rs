//! Piccolo-80 and Piccolo-128, a 4-branch Feistel network with 16-bit F
//! functions over GF(2^4).

use crate::gf::gf16_mul;

pub const SBOX: [u8; 16] = [
    0xe, 0x4, 0xb, 0x2, 0x3, 0x8, 0x0, 0x9, 0x1, 0xa, 0x7, 0xf, 0x6, 0xc, 0x5, 0xd,
];

const M: [[u8; 4]; 4] = [[2, 3, 1, 1], [1, 2, 3, 1], [1, 1, 2, 3], [3, 1, 1, 2]];

/// The 16-bit F function: S layer, mixing matrix over GF(2^4), S layer.
pub fn f(x: u16) -> u16 {
    let mut n = [
        ((x >> 12) & 0xF) as u8,
        ((x >> 8) & 0xF) as u8,
        ((x >> 4) & 0xF) as u8,
        (x & 0xF) as u8,
    ];
    for v in n.iter_mut() {
        *v = SBOX[*v as usize];
    }
    let mut m = [0u8; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i] ^= gf16_mul(M[i][j], n[j]);
        }
    }
    for v in m.iter_mut() {
        *v = SBOX[*v as usize];
    }
    ((m[0] as u16) << 12) | ((m[1] as u16) << 8) | ((m[2] as u16) << 4) | m[3] as u16
}

fn con_word(c: u32, xor: u32) -> u32 {
    ((c << 27) | (c << 17) | (c << 10) | c) ^ xor
}

pub struct Keys {
    pub wk: [u16; 4],
    pub rk: Vec<u16>,
    pub rounds: usize,
}

fn hi_lo(a: u16, b: u16) -> u16 {
    (a & 0xFF00) | (b & 0x00FF)
}

pub fn key_schedule_80(key: &[u8; 10]) -> Keys {
    let k: Vec<u16> = (0..5).map(|i| u16::from_be_bytes([key[2 * i], key[2 * i + 1]])).collect();
    let wk = [hi_lo(k[0], k[1]), hi_lo(k[1], k[0]), hi_lo(k[4], k[3]), hi_lo(k[3], k[4])];
    let mut rk = Vec::with_capacity(50);
    for i in 0..25u32 {
        let con = con_word(i + 1, 0x0F1E2D3C);
        let (a, b) = match i % 5 {
            0 | 2 => (k[2], k[3]),
            1 | 4 => (k[0], k[1]),
            _ => (k[4], k[4]),
        };
        rk.push((con >> 16) as u16 ^ a);
        rk.push(con as u16 ^ b);
    }
    Keys { wk, rk, rounds: 25 }
}

pub fn key_schedule_128(key: &[u8; 16]) -> Keys {
    let mut k: Vec<u16> = (0..8).map(|i| u16::from_be_bytes([key[2 * i], key[2 * i + 1]])).collect();
    let wk = [hi_lo(k[0], k[1]), hi_lo(k[1], k[0]), hi_lo(k[4], k[7]), hi_lo(k[7], k[4])];
    let mut rk = Vec::with_capacity(62);
    for i in 0..31u32 {
        let con = con_word(i + 1, 0x6547A98B);
        let cons = [(con >> 16) as u16, con as u16];
        for (j, &c) in cons.iter().enumerate() {
            let idx = 2 * i as usize + j;
            if (idx + 2) % 8 == 0 {
                k = vec![k[2], k[1], k[6], k[7], k[0], k[3], k[4], k[5]];
            }
            rk.push(k[(idx + 2) % 8] ^ c);
        }
    }
    Keys { wk, rk, rounds: 31 }
}

/// Byte permutation applied between rounds: output byte i is input byte RP[i].
pub const RP: [usize; 8] = [2, 7, 4, 1, 6, 3, 0, 5];

pub fn encrypt(pt: u64, keys: &Keys) -> u64 {
    let mut x = [
        (pt >> 48) as u16,
        (pt >> 32) as u16,
        (pt >> 16) as u16,
        pt as u16,
    ];
    x[0] ^= keys.wk[0];
    x[2] ^= keys.wk[1];
    for i in 0..keys.rounds {
        x[1] ^= f(x[0]) ^ keys.rk[2 * i];
        x[3] ^= f(x[2]) ^ keys.rk[2 * i + 1];
        if i != keys.rounds - 1 {
            let mut b = [0u8; 8];
            for j in 0..4 {
                b[2 * j] = (x[j] >> 8) as u8;
                b[2 * j + 1] = x[j] as u8;
            }
            let nb: Vec<u8> = RP.iter().map(|&j| b[j]).collect();
            for j in 0..4 {
                x[j] = u16::from_be_bytes([nb[2 * j], nb[2 * j + 1]]);
            }
        }
    }
    x[0] ^= keys.wk[2];
    x[2] ^= keys.wk[3];
    ((x[0] as u64) << 48) | ((x[1] as u64) << 32) | ((x[2] as u64) << 16) | x[3] as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piccolo80_vector() {
        let key = [0x00, 0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77, 0x88, 0x99];
        assert_eq!(encrypt(0x0123456789abcdef, &key_schedule_80(&key)), 0x8d2bff9935f84056);
    }

    #[test]
    fn piccolo128_vector() {
        let key: [u8; 16] = std::array::from_fn(|i| (i as u8) * 0x11);
        assert_eq!(encrypt(0x0123456789abcdef, &key_schedule_128(&key)), 0x5ec42cea657b89ff);
    }
}
