//! Projective garbled circuits with multi-bit wires.
//!
//! Every wire in a circuit carries an `n`-bit string encoded in a single
//! 128-bit label. XOR of equal-width wires is free, and any n-to-m-bit
//! function is evaluated as one projection gate: a garbled lookup table that
//! costs the evaluator a single hash call regardless of `n`.
//!
//! The crate is organized as a library; see the `examples/` directory for
//! runnable walkthroughs of each capability and `src/bin/projgc.rs` for the
//! command-line front end.
//!
//! ```
//! use projgc::circuit::CircuitBuilder;
//! use projgc::garble::{garble, encode, eval, decode};
//! use projgc::labels::SchemeParams;
//!
//! // f(x) = popcount(x) on a 4-bit wire, as one projection gate
//! let mut b = CircuitBuilder::new();
//! let x = b.add_input(4).unwrap();
//! let y = b.add_proj_fn(x, 3, |v| v.count_ones() as u64).unwrap();
//! b.mark_output(y);
//! let circuit = b.build().unwrap();
//!
//! let params = SchemeParams::with_seed(7);
//! let (gc, enc, dec) = garble(&circuit, &params).unwrap();
//! let labels = encode(&enc, &[0b1011]).unwrap();
//! let out = eval(&gc, &labels).unwrap();
//! assert_eq!(decode(&dec, &out.outputs).unwrap(), vec![3]);
//! ```

pub mod circuit;
pub mod garble;
pub mod hash;
pub mod labels;
pub mod proto;
pub mod spn;

pub use circuit::{Circuit, CircuitBuilder, CostReport, ProjectionTable};
pub use garble::{decode, decode_auth, encode, eval, garble, GarbledCircuit};
pub use labels::{Label, OffsetMatrix, SchemeParams};
