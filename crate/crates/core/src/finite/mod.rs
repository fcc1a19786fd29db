//! Finite verification models: permutation groups, quandle tables,
//! homomorphism counting, bounded enumeration of presented quandles, and
//! enveloping groups.

pub mod enumerate;
pub mod env;
pub mod group;
pub mod hom;
pub mod quandle;
