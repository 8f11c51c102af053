//! Exact computation of q-derivative polynomials of the q-tangent and
//! q-secant, their combinatorial models, and checks of the identities
//! relating them.

pub mod error;
pub mod poly;
pub mod series;
pub mod permstats;
pub mod tcomb;
pub mod derivtables;
pub mod special;
pub mod verify;
