//! The verification suites. Each turns a configuration into independent cases.

pub mod center;
pub mod duality;
pub mod immanant;
pub mod tensor;
pub mod young;

use crate::harness::{Case, ParamError, Suite, SuiteConfig};

/// Validates the parameters for `suite` and builds its cases.
pub fn cases(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    match suite {
        Suite::Ccr => tensor::ccr(cfg),
        Suite::Pairing => tensor::pairing_suite(cfg),
        Suite::Euler => tensor::euler_suite(cfg),
        Suite::SchurWeyl => duality::schur_weyl(cfg),
        Suite::Howe => duality::howe(cfg),
        Suite::CapelliT => duality::capelli_t(cfg),
        Suite::FftSl => duality::fft_sl(cfg),
        Suite::ImmanantIdentities => immanant::identities(cfg),
        Suite::PreimmExpansions => immanant::preimm_expansions(cfg),
        Suite::JmSpectrum => young::jm(cfg),
        Suite::Centrality => center::centrality(cfg),
        Suite::QimmEqualities => center::qimm_equalities(cfg),
        Suite::Eigenvalues => center::eigenvalues(cfg),
        Suite::HigherCapelliWeyl => duality::higher_capelli_weyl(cfg),
        Suite::HigherCapelliT => duality::higher_capelli_t(cfg),
        Suite::All => Err(ParamError("`all` is expanded by the harness".into())),
    }
}
