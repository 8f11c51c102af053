//! t-compositions, t-permutations, the insertion bijections `Δ*` and `*Δ`,
//! and the composition-counting triangle.

mod composition;
mod counting;
mod tperm;

pub use composition::{enumerate_t_compositions, filter_by_mu, s_compositions, TComposition};
pub use counting::{alpha, alpha_table, beta, fibonacci_polys};
pub use tperm::{cut, enumerate_t_permutations, InsertionKind, TPermutation, TStats};

/// Default upper bound on `n` for brute-force enumeration.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 8;
