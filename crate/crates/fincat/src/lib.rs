//! A computational category theory engine at finite scale.
//!
//! Everything is an explicit index table: categories, functors, natural
//! transformations, finite sets and functions. Constructions (limits,
//! Kan extensions, adjunctions, the Yoneda embedding, topos structure on
//! finite sets) are verified against exhaustive brute-force oracles, and
//! a symbolic universe-level constraint solver reproduces the classical
//! smallness/largeness phenomena of proof-assistant formalizations.
//!
//! See the `examples/` directory for one runnable example per major
//! capability, and the `fincat` binary for the file-driven CLI.

pub mod adjunctions;
pub mod algebra;
pub mod cat;
pub mod cli;
pub mod corpus;
pub mod finset;
pub mod kan;
pub mod limits;
pub mod parse;
pub mod report;
pub mod universes;
pub mod yoneda;

pub use cat::{CatRef, FinCat, Functor, MorId, NatTrans, ObjId};
pub use finset::{Diagram, FinFn, FinSetObj};
