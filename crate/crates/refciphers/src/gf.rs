//! Small binary-field helpers shared by the cipher references.

/// Multiplication in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1 (the AES field).
pub fn gf256_mul(mut a: u16, mut b: u16) -> u8 {
    let mut p = 0u16;
    while b != 0 {
        if b & 1 != 0 {
            p ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x100 != 0 {
            a ^= 0x11B;
        }
    }
    p as u8
}

/// Multiplicative inverse in the AES field; inv(0) = 0 by convention.
pub fn gf256_inv(a: u8) -> u8 {
    if a == 0 {
        return 0;
    }
    // a^254
    let mut r = 1u8;
    for _ in 0..254 {
        r = gf256_mul(r as u16, a as u16);
    }
    r
}

/// Multiplication in GF(2^4) modulo x^4 + x + 1 (the Piccolo field).
pub fn gf16_mul(mut a: u8, mut b: u8) -> u8 {
    let mut p = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            p ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0x13;
        }
    }
    p & 0xF
}

/// Multiplication in GF(2^7) modulo x^7 + x^3 + x^2 + x + 1 (the WAGE field).
pub fn gf128_mul(mut a: u8, mut b: u8) -> u8 {
    let mut p = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            p ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x80 != 0 {
            a ^= 0x8F;
        }
    }
    p & 0x7F
}

pub fn gf128_pow(mut a: u8, mut e: u32) -> u8 {
    let mut r = 1u8;
    while e != 0 {
        if e & 1 != 0 {
            r = gf128_mul(r, a);
        }
        a = gf128_mul(a, a);
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aes_field_doubling() {
        assert_eq!(gf256_mul(2, 0x80), 0x1B);
        assert_eq!(gf256_mul(2, 0x01), 0x02);
        assert_eq!(gf256_mul(0x53, 0xCA), 0x01); // known inverse pair
    }

    #[test]
    fn piccolo_field_doubling() {
        assert_eq!(gf16_mul(2, 0x8), 0x3);
        assert_eq!(gf16_mul(2, 0x1), 0x2);
    }
}
