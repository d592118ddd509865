//! Jucys–Murphy spectra and characters of the seminormal representations.

use std::time::Instant;

use capelli_core::rat;
use capelli_core::symcore::{character, jucys_murphy, JmKind};
use capelli_core::weylreal::Report;
use capelli_core::youngrep::{basis, jm_spectrum, rho, rho_elem, rho_gen};
use capelli_core::{GAElem, Partition, Perm, Ring};

use crate::harness::{case, pick, Case, ParamError, SuiteConfig};

pub fn jm(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let shapes: Vec<Partition> = match &cfg.lambda {
        Some(l) if (1..=6).contains(&l.weight()) => vec![l.clone()],
        Some(_) => return Err(ParamError("jm-spectrum needs 1 <= |lambda| <= 6".into())),
        None => pick("p", cfg.p, 1..=5, 1..=6)?
            .into_iter()
            .flat_map(Partition::all)
            .collect(),
    };
    Ok(shapes
        .into_iter()
        .map(|l| case(format!("jm-spectrum lambda={l}"), move || jm_case(&l)))
        .collect())
}

fn jm_case(l: &Partition) -> capelli_core::Result<Report> {
    let start = Instant::now();
    let p = l.weight();
    let mut r = Report::new("Jucys-Murphy spectrum").param("lambda", l.to_string());
    let tabs = basis(l);
    r.dim("rho", tabs.len());

    let spec = jm_spectrum(l)?;
    let contents = tabs
        .iter()
        .all(|t| (1..=p).all(|i| t.content(i).ok() == spec.get(&(t.clone(), i)).copied()));
    r.check("rho(x_i) v_T = c_T(i) v_T", contents);

    // x_{i+1} = s_i x_i s_i + s_i, in the group algebra and under ρ_λ
    let (mut in_algebra, mut in_rep) = (true, true);
    for i in 1..p {
        let s = GAElem::perm(Perm::s(i));
        let xi = jucys_murphy(JmKind::X, i, p)?;
        let next = jucys_murphy(JmKind::X, i + 1, p)?;
        in_algebra &= next == s.times(&xi).times(&s).plus(&s);
        let (rs, rx) = (rho_gen(l, i)?, rho_elem(l, &xi)?);
        in_rep &= rho_elem(l, &next)? == rs.mul(&rx).mul(&rs).add(&rs);
    }
    r.check("x_(i+1) = s_i x_i s_i + s_i", in_algebra);
    r.check(
        "rho(x_(i+1)) = rho(s_i) rho(x_i) rho(s_i) + rho(s_i)",
        in_rep,
    );

    let mut traces = true;
    for s in Perm::all(p) {
        traces &= rho(l, &s)?.trace() == rat::int(character(l, &s)?);
    }
    r.check("trace rho(sigma) = chi(sigma)", traces);
    Ok(r.finish(start))
}
