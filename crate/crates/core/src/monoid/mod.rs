//! Elements of the rook and symplectic Renner monoids.

mod context;
mod perm;

pub use context::{MonoidContext, NormalForm};
pub use perm::{
    all_partial_perms, all_perms, bar, is_admissible, is_symplectic, is_symplectic_by_matrix,
    is_symplectic_by_sets, PartialPerm,
};
