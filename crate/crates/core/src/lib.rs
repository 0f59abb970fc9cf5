//! Exact computation toolkit for zero-sum problems over `Z_p` and the plane
//! `Z_p ⊕ Z_p`.
//!
//! The crate is organized around five concerns:
//!
//! * [`group`] — modular arithmetic, the `p + 1` order-`p` subgroups of the
//!   plane, canonical projections, coset profiles, and the concentration
//!   statistic `M(A)`.
//! * [`sumset`] — bit-vector subset-sum dynamic programming (`Σ(A)`,
//!   `Σ_k(A)`, `A + B`), zero-sum detection with verified witnesses, exact
//!   zero-sum subset counting, and verifiers for the Dias da Silva–Hamidoune,
//!   Cauchy–Davenport, and Olson subset-sum bounds.
//! * [`criteria`] — the combinatorial and analytic sufficient conditions for
//!   a set to contain a zero-sum: the projection/weight criterion, the two
//!   profile conditions (subset-sum cover and cosine-product decay), the
//!   character-sum count of zero-sum subsets, the `log cos` integral, the
//!   `n² < base^n` growth threshold, and a numeric audit of every inequality
//!   threshold the proofs rely on.
//! * [`search`] — pruned exhaustive search for Olson constants of small
//!   cyclic groups and tiny planes, extremal-set enumeration up to group
//!   automorphisms, lower-bound witness constructions, and structure
//!   classification of zero-sum-free sets.
//! * [`sweep`] — seeded and exhaustive verification sweeps tying the above
//!   together (lemma verifiers over random corpora, criteria soundness
//!   checks, threshold audits).
//!
//! All types are immutable values after construction and all operations are
//! pure, so everything here is safe to call concurrently.

pub mod bits;
pub mod criteria;
pub mod group;
pub mod search;
pub mod sumset;
pub mod sweep;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("duplicate element in set")]
    DuplicateElement,
    #[error("cardinality {k} out of range for a set of size {size}")]
    CardinalityOutOfRange { k: usize, size: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("soundness contradiction: {0}")]
    SoundnessViolation(String),
    #[error("quadrature failed to converge")]
    QuadratureNonConvergence,
    #[error("set is not zero-sum free")]
    NotZeroSumFree,
}

pub type Result<T> = std::result::Result<T, Error>;
