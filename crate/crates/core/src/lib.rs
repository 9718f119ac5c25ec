//! Poset ideals of `Hom(P, N)`, letterplace and co-letterplace monomial ideals,
//! P-stable and strongly stable ideals, and the staircase determinantal ideals
//! whose initial ideals are letterplace ideals.

pub mod determinantal;
pub mod error;
pub mod groebner;
pub mod homset;
pub mod letterplace;
pub mod monomial;
pub mod poset;
pub mod pstable;
pub mod quotient;
pub mod stronglystable;

pub use error::{Error, Result};
pub use homset::{HomIdeal, HomRepr, IsotoneMap, Marker};
pub use monomial::{Monomial, MonomialIdeal, VarIndex};
pub use poset::{Direction, ElemSet, Poset, Subset, SubsetKind};
