//! The Weyl algebra on ℂ^n ⊗ ℂ^{n'}, the realizations π of U(gl_n), and the
//! verifiers for the Capelli-type and commutant theorems.

pub mod capelli;
pub mod commutant;
pub mod realize;
pub mod report;
pub mod weyl;

pub use capelli::{verify_capelli_t, verify_higher_capelli_t, verify_higher_capelli_weyl, Mode};
pub use commutant::{
    fft_generators, sl_invariants, verify_fft_sl, verify_howe, verify_schur_weyl, RankField,
};
pub use realize::{
    d_matrix, letter, matrixize_ga_lop, matrixize_lop, matrixize_right, pi_poly, pi_tensor,
    x_matrix, y_matrix, z_matrix, zstar_matrix, PolySlice,
};
pub use report::{Check, Report};
pub use weyl::WeylElem;
