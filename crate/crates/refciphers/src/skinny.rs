//! The SKINNY tweakable block cipher family, cell-generic over 4- and 8-bit
//! cells and one to three tweakey arrays.

pub const S4: [u8; 16] = [
    0xc, 0x6, 0x9, 0x0, 0x1, 0xa, 0x2, 0xb, 0x3, 0x8, 0x5, 0xd, 0x4, 0xe, 0x7, 0xf,
];

/// The 8-bit S-box, generated from its NOR/XOR ladder description.
pub fn s8_table() -> [u8; 256] {
    let mut t = [0u8; 256];
    for (v, e) in t.iter_mut().enumerate() {
        let mut x = v as u8;
        for i in 0..4 {
            let x4 = (x >> 4) & 1;
            let x0 = x & 1;
            let x4n = x4 ^ (((x >> 7) | (x >> 6)) & 1) ^ 1;
            let x0n = x0 ^ (((x >> 3) | (x >> 2)) & 1) ^ 1;
            x = (x & !0x11) | (x4n << 4) | x0n;
            let b = |k: u8| (x >> k) & 1;
            x = if i < 3 {
                // bits (x7..x0) <- (x2, x1, x7, x6, x4, x0, x3, x5)
                b(5) | (b(3) << 1) | (b(0) << 2) | (b(4) << 3)
                    | (b(6) << 4) | (b(7) << 5) | (b(1) << 6) | (b(2) << 7)
            } else {
                (x & !0x06) | ((x & 0x02) << 1) | ((x & 0x04) >> 1)
            };
        }
        *e = x;
    }
    t
}

const PT: [usize; 16] = [9, 15, 8, 13, 10, 14, 12, 11, 0, 1, 2, 3, 4, 5, 6, 7];

fn lfsr_tk2(cell: u8, bits: u8) -> u8 {
    if bits == 4 {
        ((cell << 1) & 0xE) | (((cell >> 3) ^ (cell >> 2)) & 1)
    } else {
        ((cell << 1) & 0xFF) | (((cell >> 7) ^ (cell >> 5)) & 1)
    }
}

fn lfsr_tk3(cell: u8, bits: u8) -> u8 {
    if bits == 4 {
        (cell >> 1) | (((cell ^ (cell >> 3)) & 1) << 3)
    } else {
        (cell >> 1) | (((cell ^ (cell >> 6)) & 1) << 7)
    }
}

pub fn rounds_for(cell_bits: u8, tweakeys: usize) -> usize {
    match (cell_bits, tweakeys) {
        (4, 1) => 32,
        (4, 2) => 36,
        (4, 3) => 40,
        (8, 1) => 40,
        (8, 2) => 48,
        (8, 3) => 56,
        _ => panic!("unsupported SKINNY variant"),
    }
}

/// The 6-bit round-constant LFSR, one value per round, starting from zero.
pub fn round_constants(rounds: usize) -> Vec<u8> {
    let mut rc = 0u8;
    (0..rounds)
        .map(|_| {
            rc = ((rc << 1) & 0x3F) | ((((rc >> 5) ^ (rc >> 4)) & 1) ^ 1);
            rc
        })
        .collect()
}

/// Encrypt one block given as 16 cells (row-major, cell 0 first). Tweakey
/// arrays are given in the same cell order.
pub fn encrypt_cells(pt: &[u8; 16], tweakeys: &[[u8; 16]], cell_bits: u8) -> [u8; 16] {
    let rounds = rounds_for(cell_bits, tweakeys.len());
    let s8;
    let sbox: &[u8] = if cell_bits == 4 {
        &S4
    } else {
        s8 = s8_table();
        &s8
    };
    let mut st = *pt;
    let mut tks: Vec<[u8; 16]> = tweakeys.to_vec();
    let mut rc = 0u8;
    for _ in 0..rounds {
        rc = ((rc << 1) & 0x3F) | ((((rc >> 5) ^ (rc >> 4)) & 1) ^ 1);
        for c in st.iter_mut() {
            *c = sbox[*c as usize];
        }
        st[0] ^= rc & 0xF;
        st[4] ^= rc >> 4;
        st[8] ^= 0x2;
        for tk in &tks {
            for i in 0..8 {
                st[i] ^= tk[i];
            }
        }
        // ShiftRows: row r rotated right by r
        let old = st;
        for row in 0..4 {
            for col in 0..4 {
                st[4 * row + (col + row) % 4] = old[4 * row + col];
            }
        }
        // MixColumns
        let old = st;
        for col in 0..4 {
            let (c0, c1, c2, c3) = (old[col], old[col + 4], old[col + 8], old[col + 12]);
            st[col] = c0 ^ c2 ^ c3;
            st[col + 4] = c0;
            st[col + 8] = c1 ^ c2;
            st[col + 12] = c0 ^ c2;
        }
        // tweakey update
        for (z, tk) in tks.iter_mut().enumerate() {
            let old = *tk;
            for i in 0..16 {
                tk[i] = old[PT[i]];
            }
            if z >= 1 {
                for cell in tk.iter_mut().take(8) {
                    *cell = if z == 1 {
                        lfsr_tk2(*cell, cell_bits)
                    } else {
                        lfsr_tk3(*cell, cell_bits)
                    };
                }
            }
        }
    }
    st
}

pub fn cells_from_bytes(data: &[u8], cell_bits: u8) -> Vec<[u8; 16]> {
    let per = if cell_bits == 4 { 8 } else { 16 };
    data.chunks(per)
        .map(|chunk| {
            let mut cells = [0u8; 16];
            if cell_bits == 4 {
                for (i, b) in chunk.iter().enumerate() {
                    cells[2 * i] = b >> 4;
                    cells[2 * i + 1] = b & 0xF;
                }
            } else {
                cells.copy_from_slice(chunk);
            }
            cells
        })
        .collect()
}

pub fn bytes_from_cells(cells: &[u8; 16], cell_bits: u8) -> Vec<u8> {
    if cell_bits == 4 {
        (0..8).map(|i| (cells[2 * i] << 4) | cells[2 * i + 1]).collect()
    } else {
        cells.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(cell_bits: u8, key: &str, pt: &str, ct: &str) {
        let kb: Vec<u8> = (0..key.len() / 2)
            .map(|i| u8::from_str_radix(&key[2 * i..2 * i + 2], 16).unwrap())
            .collect();
        let pb: Vec<u8> = (0..pt.len() / 2)
            .map(|i| u8::from_str_radix(&pt[2 * i..2 * i + 2], 16).unwrap())
            .collect();
        let tks = cells_from_bytes(&kb, cell_bits);
        let mut ptc = [0u8; 16];
        ptc.copy_from_slice(&cells_from_bytes(&pb, cell_bits)[0]);
        let out = encrypt_cells(&ptc, &tks, cell_bits);
        let hex: String = bytes_from_cells(&out, cell_bits)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(hex, ct);
    }

    #[test]
    fn skinny64_vectors() {
        run(4, "f5269826fc681238", "06034f957724d19d", "bb39dfb2429b8ac7");
        run(4, "9eb93640d088da6376a39d1c8bea71e1", "cf16cfe8fd0f98aa", "6ceda1f43de92b9e");
        run(
            4,
            "ed00c85b120d68618753e24bfd908f60b2dbb41b422dfcd0",
            "530c61d35e8663c3",
            "dd2cf1a8f330303c",
        );
    }

    #[test]
    fn skinny128_vectors() {
        run(
            8,
            "4f55cfb0520cac52fd92c15f37073e93",
            "f20adb0eb08b648a3b2eeed1f0adda14",
            "22ff30d498ea62d7e45b476e33675b74",
        );
        run(
            8,
            "009cec81605d4ac1d2ae9e3085d7a1f31ac123ebfc00fddcf01046ceeddfcab3",
            "3a0c47767a26a68dd382a695e7022e25",
            "b731d98a4bde147a7ed4a6f16b9b587f",
        );
        run(
            8,
            "df889548cfc7ea52d296339301797449ab588a34a47f1ab2dfe9c8293fbea9a5ab1afac2611012cd8cef952618c3ebe8",
            "a3994b66ad85a3459f44e92b08f550cb",
            "94ecf589e2017c601b38c6346a10dcfa",
        );
    }

    #[test]
    fn s8_is_bijective() {
        let t = s8_table();
        let mut seen = [false; 256];
        for &v in t.iter() {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
        assert_eq!(&t[..4], &[0x65, 0x4c, 0x6a, 0x42]);
    }
}
