//! # weak-sperner
//!
//! Exact computations around the weak order on the symmetric group:
//!
//! - [`permutations`]: one-line permutations, lengths, Lehmer codes, weak and
//!   strong covers.
//! - [`poset`]: ranked posets, the weak order `W_n`, transitive closure, DOT.
//! - [`sl2`]: the operators `U`, `D`, `H`, exact verification of the `sl2`
//!   relations, raising-power blocks and the weight-space decomposition.
//! - [`exactlinalg`]: sparse big-integer matrices, Bareiss determinants and
//!   modular nonsingularity certificates.
//! - [`sperner`]: maximum unions of `k` antichains by min-cost flow, a
//!   brute-force oracle, and Sperner/Peck certificates.
//! - [`coxeter`]: finite Coxeter groups by exact matrices and their weak orders.
//! - [`cli`]: the command layer behind the `weak-sperner` binary.
//!
//! ## Running the examples
//!
//! ```bash
//! cargo run --release --example weighted_hasse
//! cargo run --release --example sl2_relations -- 6
//! cargo run --release --example coxeter_conjecture
//! ```

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod exactlinalg;
pub mod permutations;
pub mod poset;
pub mod sl2;
pub mod sperner;

pub use error::{Error, Result};
pub use exactlinalg::IntMatrix;
pub use permutations::Permutation;
pub use poset::{build_weak_order, RankProfile, RankedPoset, WeakOrder};
pub use sl2::Sl2Triple;
pub use sperner::SpernerCertificate;

pub(crate) fn serialize_bigint<S: serde::Serializer>(
    v: &num_bigint::BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
