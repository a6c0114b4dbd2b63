//! Reference implementations of the SPN primitives used as independent test
//! oracles. Everything here is written directly against the published cipher
//! specifications, with no shared code with the garbling engine.

pub mod aes128;
pub mod craft;
pub mod fides;
pub mod gf;
pub mod mantis;
pub mod midori64;
pub mod piccolo;
pub mod skinny;
pub mod twine;
pub mod wage;
