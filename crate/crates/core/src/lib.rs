//! Exact computation with extended tensor algebras, symmetric group algebras,
//! immanants and quantum immanants.

pub mod envelope;
pub mod error;
pub mod extalg;
pub mod immanant;
pub mod linalg;
pub mod rat;
pub mod ring;
pub mod symcore;
pub mod weylreal;
pub mod youngrep;

pub use error::{Error, Result};
pub use rat::Rat;
pub use ring::Ring;
pub use symcore::{GAElem, Partition, Perm, Tableau};
