//! Exact combinatorics of Iwahori-Hecke algebras of type B.
//!
//! Everything here is exact integer / Laurent-polynomial arithmetic over
//! bipartitions: residues and blocks, Kleshchev's recursive classification,
//! the Fock-space action with divided powers, canonical-basis candidates,
//! Jantzen sum-formula coefficients, the Maya-diagram (path sequence)
//! calculus, decomposition matrices for the finite-type regime, and the
//! closed-form representation-type decision n < min{e, 2f+4}.

pub mod core;
pub mod decomp;
pub mod fixtures;
pub mod fock;
pub mod jantzen;
pub mod kleshchev;
pub mod maya;
pub mod reptype;

use thiserror::Error;

/// Crate-wide error type. Domain errors (bad parameters, inputs outside a
/// theorem's regime) are distinguished from `Internal`, which flags a broken
/// invariant that should be unreachable from any valid input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("out of scope: e = {0} corresponds to q = \u{b1}1, which this library does not handle")]
    UnsupportedOrder(u64),
    #[error("charge f0 = {f0} out of range for e = {e}")]
    ChargeOutOfRange { f0: u32, e: String },
    #[error("size mismatch: |a| = {0} but |b| = {1}")]
    SizeMismatch(u32, u32),
    #[error("node ({0},{1},{2}) is not in the diagram")]
    NotInDiagram(u32, u32, u8),
    #[error("enumeration bound exceeded: n = {n} > {bound}")]
    EnumerationBound { n: u32, bound: u32 },
    #[error("malformed bipartition literal: {0}")]
    ParseLiteral(String),
    #[error("malformed parameter: {0}")]
    ParseParam(String),
    #[error("malformed F-word: {0}")]
    ParseWord(String),
    #[error("unbalanced path sequence")]
    Unbalanced,
    #[error("path sequence has {0} A-columns, expected exactly one")]
    NotOneA(usize),
    #[error("inexact Laurent division")]
    InexactDivision,
    #[error("division by zero Laurent polynomial")]
    DivisionByZero,
    #[error("Jantzen valuation needs n < e, got n = {n} with e = {e}")]
    ValuationRange { n: u32, e: u32 },
    #[error("block is outside the finite-type regime n < min{{e, 2f+4}}")]
    OutOfRegime,
    #[error("the multiplicity window check needs an even order, got e = {0}")]
    OddOrder(u32),
    #[error("fixture {tag} is not defined at these parameters: {reason}")]
    FixtureParams { tag: String, reason: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
