//! The universal enveloping algebra U(gl_n): PBW normal form, Capelli elements,
//! quantum immanants and Harish-Chandra eigenvalues.

pub mod center;
pub mod pbw;
pub mod qimm;

use crate::symcore::GroupAlg;

pub use center::{content_sum_eval, hc_eigenvalue, is_central_ga, is_central_u, Convention};
pub use pbw::{Gen, Monomial, Pbw};
pub use qimm::{
    capelli, capelli_det_r, capelli_exterior, chi_apply_u, e_matrix, gamma_star, quantum_immanant,
    quantum_immanant_weak, quantum_preimmanant, quantum_preimmanant_expr, xi, PreimmExpr,
    PreimmVariant, QimmVariant,
};

/// Element of ℂS_p ⊗ U(gl_n), group part outermost.
pub type GaPbw = GroupAlg<Pbw>;
