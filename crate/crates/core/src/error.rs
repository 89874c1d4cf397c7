//! Error type shared by all validators and checkers.
//!
//! Every failure carries a witness rendered with element labels, so that
//! corpus sweeps and CLI runs print counterexamples rather than bare
//! booleans.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("order is not antisymmetric: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),

    #[error("not a lattice: no {kind} for `{a}` and `{b}`")]
    NotALattice {
        kind: &'static str,
        a: String,
        b: String,
    },

    #[error("not distributive: a=`{a}`, b=`{b}`, c=`{c}`")]
    NotDistributive { a: String, b: String, c: String },

    #[error("not a boolean algebra: {reason} (witness `{witness}`)")]
    NotBooleanAlgebra { reason: &'static str, witness: String },

    #[error("interior operator violates {axiom} at `{witness}`")]
    KuratowskiViolation {
        axiom: &'static str,
        witness: String,
    },

    #[error("not a topology: {reason} (witness {witness})")]
    NotATopology { reason: &'static str, witness: String },

    #[error("not sober: {0}")]
    NotSober(String),

    #[error("not a boolean homomorphism: {law} fails at {witness}")]
    NotBooleanHom { law: &'static str, witness: String },

    #[error("not an MT-morphism: f([]a) <= []f(a) fails at `{0}`")]
    NotMtMorphism(String),

    #[error("not a frame homomorphism: {law} fails at {witness}")]
    NotFrameHom { law: &'static str, witness: String },

    #[error(
        "size guard exceeded: {what} enumerates subsets of a {universe}-element universe \
         (bound {bound}); set MTLAB_SIZE_GUARD to raise the bound"
    )]
    SizeGuardExceeded {
        what: &'static str,
        universe: usize,
        bound: usize,
    },

    #[error("bijection failure in {place}: {witness}")]
    BijectionFailure { place: &'static str, witness: String },

    #[error("hypothesis not met for {check}: {hypothesis}")]
    HypothesisNotMet {
        check: &'static str,
        hypothesis: String,
    },

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("{0}")]
    Shape(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
