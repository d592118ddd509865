//! Extended tensor algebras, the operator algebra 𝓛(V) and a small exterior algebra.

pub mod exterior;
pub mod ops;
pub mod slice;
pub mod tvw;

pub use exterior::{ext_pair, tau, tau_divided, ExtElem, Gen};
pub use ops::{
    bracket, bracket_lambda, conjugation_sum_apply, conjugation_sum_operator, covector_word,
    derivation_apply, diamond, euler, euler_higher, euler_higher_apply, l_covector, l_e, l_estar,
    l_group, l_perm, l_vector, lop_apply, lop_apply_stepwise, pairing, polarization,
    quotient_project, vector_word, words, LOp, QuotientImage, QuotientKind, TBar,
};
pub use slice::Slice;
pub use tvw::{Pairing, Tvw, Word};
