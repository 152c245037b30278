//! Finite groups of small order as Cayley tables.
//!
//! Groups come from presentations (Todd–Coxeter enumeration) or from
//! direct and semidirect product constructions. On top of the table sit
//! subgroup and quotient machinery, invariants, isomorphism testing, and
//! verified catalogs of the groups of order 8 and 16.
//!
//! ```
//! use fingroup::presentation::{coset_enumerate, parse_presentation};
//! use fingroup::invariants::center;
//!
//! let p = parse_presentation("x^8=y^2=e, yx=x^7y").unwrap();
//! let g = coset_enumerate(&p).unwrap();
//! assert_eq!(g.order(), 16);
//! assert_eq!(center(&g).order(), 2);
//! ```

pub mod classification;
pub mod constructors;
pub mod error;
pub mod group;
pub mod invariants;
pub mod isomorphism;
pub mod presentation;
pub mod set;

pub use error::{Error, Result};
pub use group::{validate_table, CayleyTable, ElementId, GroupHom, SubgroupMask, IDENTITY};
pub use presentation::{coset_enumerate, parse_presentation, Presentation};
pub use set::ElementSet;
