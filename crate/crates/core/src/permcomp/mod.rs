//! Symmetric-group combinatorics: permutations in one-line notation,
//! compositions of `n` with `d` parts, and characters of `(Z/dZ)^n` with the
//! permutation action `w(χ)(t_i) = χ(t_{w⁻¹(i)})`.

mod character;
mod composition;
mod perm;

pub use character::Character;
pub use composition::Composition;
pub use perm::{all_perms, Perm};
