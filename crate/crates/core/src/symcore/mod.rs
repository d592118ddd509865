//! Permutations, partitions, tableaux, characters and the group algebra ℂS_∞.

pub mod central;
pub mod character;
pub mod groupalg;
pub mod partition;
pub mod perm;
pub mod tableau;

pub use central::{
    central_basis, central_decompose, is_central, jucys_murphy, stabilizer_idempotent, CentralKind,
    JmKind,
};
pub use character::{character, character_of_type, chi_apply};
pub use groupalg::{GAElem, GroupAlg};
pub use partition::Partition;
pub use perm::Perm;
pub use tableau::{std_tableaux, Tableau};
