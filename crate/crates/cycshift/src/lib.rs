//! Cyclic shift classes of elements and combinatorial pieces in finite Weyl
//! groups with diagram automorphisms.
//!
//! The library enumerates a finite Weyl group from its Cartan type, then
//! provides partial (twisted) conjugation machinery on top of it: minimal
//! coset representatives, the shift graph and its strongly connected
//! components, combinatorial pieces `(w, K)` and their cyclic shift relation,
//! partial-conjugation decompositions with canonical certificates, and the
//! left-right symmetry bijection. Every production algorithm has an
//! independent brute-force counterpart in [`oracle`] used by the test and
//! verification suites.

mod error;

pub mod coxeter;
pub mod decomposition;
pub mod oracle;
pub mod output;
pub mod parabolic;
pub mod pieces;
pub mod shift_graph;
pub mod suites;

pub use coxeter::{
    CartanType, CoxeterDatum, DiagramAutomorphism, Elt, Gen, Side, SimpleSubset, WeylGroup, Word,
};
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
