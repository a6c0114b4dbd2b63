//! CRAFT, a tweakable cipher with involutory components. Thirty full rounds
//! (each ending in the S-box layer) followed by one final linear round.

pub const SBOX: [u8; 16] = crate::midori64::SB0;

/// PermuteNibbles (an involution): output cell i is input cell PN[i].
pub const PN: [usize; 16] = [15, 12, 13, 14, 10, 9, 8, 11, 6, 5, 4, 7, 1, 2, 3, 0];
/// Tweak permutation Q: output cell i is input cell Q[i].
pub const Q: [usize; 16] = [12, 10, 15, 5, 14, 8, 9, 2, 11, 3, 7, 4, 6, 0, 1, 13];

pub const FULL_ROUNDS: usize = 30;

fn cells(v: u64) -> [u8; 16] {
    std::array::from_fn(|i| ((v >> (4 * (15 - i))) & 0xF) as u8)
}

fn value(c: &[u8; 16]) -> u64 {
    c.iter().fold(0u64, |a, &n| (a << 4) | n as u64)
}

/// Round constants: a 4-bit and a 3-bit LFSR clocked once per round.
pub fn round_constants(rounds: usize) -> Vec<(u8, u8)> {
    let mut a = 0x1u8; // x^4 + x + 1
    let mut b = 0x1u8; // x^3 + x + 1
    (0..rounds)
        .map(|_| {
            let out = (a, b);
            a = (a >> 1) | (((a ^ (a >> 1)) & 1) << 3);
            b = (b >> 1) | (((b ^ (b >> 1)) & 1) << 2);
            out
        })
        .collect()
}

fn mix_columns(s: &mut [u8; 16]) {
    for col in 0..4 {
        s[col] ^= s[col + 8] ^ s[col + 12];
        s[col + 4] ^= s[col + 12];
    }
}

/// The four round tweakeys derived from (key0, key1, tweak).
pub fn tweakeys(k0: u64, k1: u64, tweak: u64) -> [[u8; 16]; 4] {
    let t = cells(tweak);
    let qt: [u8; 16] = std::array::from_fn(|i| t[Q[i]]);
    let k0c = cells(k0);
    let k1c = cells(k1);
    [
        std::array::from_fn(|i| k0c[i] ^ t[i]),
        std::array::from_fn(|i| k1c[i] ^ t[i]),
        std::array::from_fn(|i| k0c[i] ^ qt[i]),
        std::array::from_fn(|i| k1c[i] ^ qt[i]),
    ]
}

pub fn encrypt(pt: u64, k0: u64, k1: u64, tweak: u64) -> u64 {
    let tk = tweakeys(k0, k1, tweak);
    let rcs = round_constants(FULL_ROUNDS + 1);
    let mut s = cells(pt);
    for r in 0..=FULL_ROUNDS {
        mix_columns(&mut s);
        s[4] ^= rcs[r].0;
        s[5] ^= rcs[r].1;
        for i in 0..16 {
            s[i] ^= tk[r % 4][i];
        }
        if r < FULL_ROUNDS {
            let old = s;
            for i in 0..16 {
                s[i] = old[PN[i]];
            }
            for c in s.iter_mut() {
                *c = SBOX[*c as usize];
            }
        }
    }
    value(&s)
}

pub fn decrypt(ct: u64, k0: u64, k1: u64, tweak: u64) -> u64 {
    let tk = tweakeys(k0, k1, tweak);
    let rcs = round_constants(FULL_ROUNDS + 1);
    let inv_pn: [usize; 16] = {
        let mut q = [0usize; 16];
        for (i, &v) in PN.iter().enumerate() {
            q[v] = i;
        }
        q
    };
    let mut s = cells(ct);
    for r in (0..=FULL_ROUNDS).rev() {
        if r < FULL_ROUNDS {
            for c in s.iter_mut() {
                *c = SBOX[*c as usize];
            }
            let old = s;
            for i in 0..16 {
                s[i] = old[inv_pn[i]];
            }
        }
        for i in 0..16 {
            s[i] ^= tk[r % 4][i];
        }
        s[4] ^= rcs[r].0;
        s[5] ^= rcs[r].1;
        mix_columns(&mut s);
    }
    value(&s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decrypt_inverts_encrypt() {
        for (pt, k0, k1, t) in [
            (0u64, 0u64, 0u64, 0u64),
            (0x0123456789abcdef, 0x1111222233334444, 0x5555666677778888, 0x99aabbccddeeff00),
        ] {
            let ct = encrypt(pt, k0, k1, t);
            assert_eq!(decrypt(ct, k0, k1, t), pt);
        }
    }

    #[test]
    fn pn_is_involution() {
        for i in 0..16 {
            assert_eq!(PN[PN[i]], i);
        }
    }

    #[test]
    fn mix_columns_is_involution() {
        let mut s: [u8; 16] = std::array::from_fn(|i| (i as u8 * 7 + 3) & 0xF);
        let orig = s;
        mix_columns(&mut s);
        mix_columns(&mut s);
        assert_eq!(s, orig);
    }
}
