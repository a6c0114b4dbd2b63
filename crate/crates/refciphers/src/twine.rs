//! TWINE-80 and TWINE-128, a 16-branch type-2 generalized Feistel network.

pub const SBOX: [u8; 16] = [
    0xC, 0x0, 0xF, 0xA, 0x2, 0xB, 0x9, 0x5, 0x8, 0x3, 0xD, 0x7, 0x1, 0xE, 0x6, 0x4,
];

/// Nibble shuffle: output position PI[i] receives input nibble i.
pub const PI: [usize; 16] = [5, 0, 1, 4, 7, 12, 3, 8, 13, 6, 9, 2, 15, 10, 11, 14];

/// 6-bit round constants: powers of x in GF(2^6) mod x^6 + x + 1.
pub fn round_constants() -> [u8; 35] {
    let mut out = [0u8; 35];
    let mut x = 1u8;
    for e in out.iter_mut() {
        *e = x;
        x <<= 1;
        if x & 0x40 != 0 {
            x = (x & 0x3F) ^ 0x03;
        }
    }
    out
}

fn sub_block_rot(wk: &mut [u8]) {
    // rotate the first 16-bit sub-block by one nibble, then the whole key
    // register by four nibbles
    let first = wk[0];
    wk.copy_within(1..4, 0);
    wk[3] = first;
    wk.rotate_left(4);
}

/// 36 round keys of 8 nibbles each from a 20-nibble key.
pub fn key_schedule_80(key: &[u8; 20]) -> [[u8; 8]; 36] {
    let con = round_constants();
    let mut wk = *key;
    let mut rks = [[0u8; 8]; 36];
    for (r, rk) in rks.iter_mut().enumerate() {
        *rk = [wk[1], wk[3], wk[4], wk[6], wk[13], wk[14], wk[15], wk[16]];
        if r == 35 {
            break;
        }
        wk[1] ^= SBOX[wk[0] as usize];
        wk[4] ^= SBOX[wk[16] as usize];
        wk[7] ^= con[r] >> 3;
        wk[19] ^= con[r] & 0x7;
        sub_block_rot(&mut wk);
    }
    rks
}

/// 36 round keys of 8 nibbles each from a 32-nibble key.
pub fn key_schedule_128(key: &[u8; 32]) -> [[u8; 8]; 36] {
    let con = round_constants();
    let mut wk = *key;
    let mut rks = [[0u8; 8]; 36];
    for (r, rk) in rks.iter_mut().enumerate() {
        *rk = [wk[2], wk[3], wk[12], wk[15], wk[17], wk[18], wk[28], wk[31]];
        if r == 35 {
            break;
        }
        wk[1] ^= SBOX[wk[0] as usize];
        wk[4] ^= SBOX[wk[16] as usize];
        wk[23] ^= SBOX[wk[30] as usize];
        wk[7] ^= con[r] >> 3;
        wk[19] ^= con[r] & 0x7;
        sub_block_rot(&mut wk);
    }
    rks
}

/// Encrypt 16 nibbles (nibble 0 = leftmost) under precomputed round keys.
pub fn encrypt(pt: &[u8; 16], rks: &[[u8; 8]; 36]) -> [u8; 16] {
    let mut x = *pt;
    for (r, rk) in rks.iter().enumerate() {
        for j in 0..8 {
            x[2 * j + 1] ^= SBOX[(x[2 * j] ^ rk[j]) as usize];
        }
        if r != 35 {
            let mut y = [0u8; 16];
            for (i, &v) in x.iter().enumerate() {
                y[PI[i]] = v;
            }
            x = y;
        }
    }
    x
}

pub fn nibbles(data: &[u8]) -> Vec<u8> {
    data.iter().flat_map(|b| [b >> 4, b & 0xF]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twine80_vector() {
        let key: [u8; 20] = nibbles(&[0x00, 0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77, 0x88, 0x99])
            .try_into()
            .unwrap();
        let pt: [u8; 16] = nibbles(&0x0123456789abcdefu64.to_be_bytes()).try_into().unwrap();
        let ct = encrypt(&pt, &key_schedule_80(&key));
        let v = ct.iter().fold(0u64, |a, &n| (a << 4) | n as u64);
        assert_eq!(v, 0x7c1f0f80b1df9c28);
    }

    #[test]
    fn twine128_vector() {
        let kb: Vec<u8> = (0..16).map(|i| (i as u8) * 0x11).collect();
        let key: [u8; 32] = nibbles(&kb).try_into().unwrap();
        let pt: [u8; 16] = nibbles(&0x0123456789abcdefu64.to_be_bytes()).try_into().unwrap();
        let ct = encrypt(&pt, &key_schedule_128(&key));
        let v = ct.iter().fold(0u64, |a, &n| (a << 4) | n as u64);
        assert_eq!(v, 0x979ff9b379b5a9b8);
    }
}
