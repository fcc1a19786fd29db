//! Presentations of Dehn quandles from presentations of their underlying
//! groups and monoids, along two routes:
//!
//! * the Garside/Gaussian route — word reversing over a complemented
//!   monoid presentation computes the conjugation data and emits a finite
//!   quandle presentation;
//! * the centralizer route — a group presentation together with centralizer
//!   generating sets and conjugator words emits one relation per relator,
//!   centralizer word and conjugacy-tree edge.
//!
//! Everything emitted can be cross-checked against independently built
//! finite models: conjugation quandles of permutation groups, dihedral
//! quandles, coloring counts and bounded enumeration of the presented
//! quandle itself.

pub mod catalog;
pub mod centralizer;
pub mod conditions;
pub mod divisors;
pub mod error;
pub mod finite;
pub mod format;
pub mod garside;
pub mod presentation;
pub mod reversing;
pub mod simplify;
pub mod term;
pub mod words;

pub use error::{Error, Result};
pub use presentation::{Complement, GroupPresentation, MonoidPresentation, QuandlePresentation};
pub use term::{conjugation_to_term, rewrite_left_associated, QuandleRelation, QuandleTerm, TermExpr};
pub use words::{free_reduce, Gen, GroupWord, Letter, PositiveWord, Sign, Symbols};
