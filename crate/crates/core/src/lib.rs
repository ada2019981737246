//! Exact combinatorics of finite crystallographic root systems.
//!
//! The crate generates positive roots from Cartan data, counts the roots of
//! full support by brute force, and evaluates the product formulas that
//! predict those counts (in total and split by root length) together with
//! every intermediate quantity relating them: exponents, Coxeter number,
//! Weyl group order, the characteristic polynomial of a restricted Coxeter
//! arrangement and the normalizer index of a reflection subgroup.
//!
//! The [`oracle`] module recomputes the last two from scratch (explicit
//! Weyl group, intersection poset) so that the formulas can be checked
//! rather than trusted.
//!
//! ```
//! use fullsupport::{cartan::RootSystem, counting};
//!
//! let f4 = RootSystem::from_type("F4".parse().unwrap());
//! let report = counting::full_census(&f4).unwrap();
//! assert_eq!((report.brute_long, report.brute_short), (5, 5));
//! assert!(report.agree);
//! ```

pub mod cartan;
pub mod counting;
pub mod exact;
pub mod invariants;
pub mod oracle;
mod polynomial;
pub mod poset;

pub use cartan::{
    admissible_types, CartanError, CartanMatrix, CartanType, Family, LengthClass, Root, RootSystem,
};
pub use counting::{CensusReport, CountingError, IntPolynomial};
pub use invariants::{ExponentVector, GroupInvariants, InvariantError};
pub use oracle::{Arrangement, OracleError, WeylGroupElement};
pub use poset::{OrderIdeal, PosetError, RootPoset};
