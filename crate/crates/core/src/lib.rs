//! Twin-group words, the deformed Tits representation over `Z[x]`, and the
//! polynomial invariant of oriented doodles built from it.
//!
//! The crate is `no_std` and only needs `alloc`. File IO and the command-line
//! front end live in the `doodle-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod invariant;
pub mod markov;
pub mod notation;
pub mod poly;
pub mod rep;
pub mod suites;
pub mod table;
pub mod twin;

pub use error::{Error, Result};
pub use invariant::{canonical_invariant, f_invariant, p_poly, InvariantValue};
pub use markov::{Direction, MarkovMove};
pub use notation::{format_word, parse_word, parse_word_on};
pub use poly::IntPoly;
pub use rep::{psi, PolyMatrix, Side};
pub use table::{EntryReport, MatchState, TableEntry};
pub use twin::{Permutation, TwinWord};
