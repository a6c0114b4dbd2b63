//! AES-128 (FIPS 197). The S-box is computed from field inversion plus the
//! affine map rather than stored, so the table in the engine's data files has
//! an independent origin to be checked against.

use crate::gf::{gf256_inv, gf256_mul};

pub fn sbox() -> [u8; 256] {
    let mut t = [0u8; 256];
    for (x, e) in t.iter_mut().enumerate() {
        let i = gf256_inv(x as u8);
        *e = i ^ i.rotate_left(1) ^ i.rotate_left(2) ^ i.rotate_left(3) ^ i.rotate_left(4) ^ 0x63;
    }
    t
}

/// Round keys as 11 blocks of 16 bytes.
pub fn key_schedule(key: &[u8; 16]) -> [[u8; 16]; 11] {
    let s = sbox();
    let mut w = [[0u8; 4]; 44];
    for i in 0..4 {
        w[i].copy_from_slice(&key[4 * i..4 * i + 4]);
    }
    let mut rcon = 1u8;
    for i in 4..44 {
        let mut t = w[i - 1];
        if i % 4 == 0 {
            t = [s[t[1] as usize], s[t[2] as usize], s[t[3] as usize], s[t[0] as usize]];
            t[0] ^= rcon;
            rcon = gf256_mul(2, rcon as u16);
        }
        for j in 0..4 {
            w[i][j] = w[i - 4][j] ^ t[j];
        }
    }
    let mut rk = [[0u8; 16]; 11];
    for r in 0..11 {
        for c in 0..4 {
            rk[r][4 * c..4 * c + 4].copy_from_slice(&w[4 * r + c]);
        }
    }
    rk
}

fn sub_bytes(st: &mut [u8; 16], s: &[u8; 256]) {
    for b in st.iter_mut() {
        *b = s[*b as usize];
    }
}

fn shift_rows(st: &mut [u8; 16]) {
    // state is column-major: byte index = 4*col + row
    let old = *st;
    for row in 0..4 {
        for col in 0..4 {
            st[4 * col + row] = old[4 * ((col + row) % 4) + row];
        }
    }
}

fn mix_columns(st: &mut [u8; 16]) {
    for col in 0..4 {
        let c: [u8; 4] = st[4 * col..4 * col + 4].try_into().unwrap();
        let d = |x| gf256_mul(2, x as u16);
        st[4 * col] = d(c[0]) ^ d(c[1]) ^ c[1] ^ c[2] ^ c[3];
        st[4 * col + 1] = c[0] ^ d(c[1]) ^ d(c[2]) ^ c[2] ^ c[3];
        st[4 * col + 2] = c[0] ^ c[1] ^ d(c[2]) ^ d(c[3]) ^ c[3];
        st[4 * col + 3] = d(c[0]) ^ c[0] ^ c[1] ^ c[2] ^ d(c[3]);
    }
}

fn add_round_key(st: &mut [u8; 16], rk: &[u8; 16]) {
    for (b, k) in st.iter_mut().zip(rk) {
        *b ^= k;
    }
}

pub fn encrypt(block: &[u8; 16], key: &[u8; 16]) -> [u8; 16] {
    let s = sbox();
    let rk = key_schedule(key);
    let mut st = *block;
    add_round_key(&mut st, &rk[0]);
    for r in 1..10 {
        sub_bytes(&mut st, &s);
        shift_rows(&mut st);
        mix_columns(&mut st);
        add_round_key(&mut st, &rk[r]);
    }
    sub_bytes(&mut st, &s);
    shift_rows(&mut st);
    add_round_key(&mut st, &rk[10]);
    st
}

/// One middle round (SubBytes, ShiftRows, MixColumns) without key addition;
/// used to cross-check the doubling rewrite of the mixing step.
pub fn round_no_key(block: &[u8; 16]) -> [u8; 16] {
    let s = sbox();
    let mut st = *block;
    sub_bytes(&mut st, &s);
    shift_rows(&mut st);
    mix_columns(&mut st);
    st
}
