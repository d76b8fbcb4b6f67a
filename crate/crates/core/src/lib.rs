//! Dessins d'enfants for Lamé operators with octahedral and icosahedral
//! projective monodromy.
//!
//! The crate has four layers:
//!
//! * [`hypermap`] — dessins as transitive permutation pairs, passports,
//!   genus, equivalence and canonical forms;
//! * [`fuchsian`] — exact exponent-difference bookkeeping for rational
//!   pull-backs of hypergeometric operators;
//! * [`tables`] — ramification tables derived from that bookkeeping;
//! * [`generators`] and [`enumerator`] — explicit dessins realizing the
//!   tables for every parameter, and an exhaustive search used as an oracle
//!   at small degree.
//!
//! [`validation`] chains all checks together and [`document`] handles the
//! on-disk format.

pub mod document;
pub mod enumerator;
pub mod fuchsian;
pub mod generators;
pub mod hypermap;
pub mod perm;
pub mod tables;
pub mod validation;

pub use fuchsian::{LameSignature, Rational, SchwarzSignature, SingularityProfile};
pub use hypermap::{Dessin, Feature, FeatureKind, MarkLabel, MarkedDessin, Passport};
pub use perm::{Partition, Permutation};
pub use tables::{CaseId, RamificationTable};
