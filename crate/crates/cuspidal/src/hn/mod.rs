//! Hamburger-Noether pairs of a cusp and its numerical invariants.

mod cusp_type;
mod expand;
mod invariants;
mod pairs;

pub use cusp_type::{CuspRecord, CuspType};
pub use expand::{chain_of_pair, expand, Expansion};
pub use invariants::{
    b0_delta_formula, delta_minus_info, i_of, ind_formula, is_semi_ordinary, lambda_formula, m_of, mult_sequence, nu,
    pairs_from_tree, r_formula, s_formula, tau_of, tree_invariants, TreeInvariants,
};
pub use pairs::{steps, HnPair, HnSeq};
