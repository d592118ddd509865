//! Commutant theorems and Capelli type identities on tensors and polynomials.

use capelli_core::weylreal::{
    verify_capelli_t, verify_fft_sl, verify_higher_capelli_t, verify_higher_capelli_weyl,
    verify_howe, verify_schur_weyl, Mode, RankField,
};
use capelli_core::Partition;

use crate::harness::{case, pick, Case, ParamError, SuiteConfig};

fn fixed_or(
    list: &[(usize, usize, usize)],
    cfg_vals: [Option<usize>; 3],
) -> Vec<(usize, usize, usize)> {
    if cfg_vals.iter().all(Option::is_none) {
        return list.to_vec();
    }
    let [a, b, c] = cfg_vals;
    // unspecified coordinates take the first default
    let d = list[0];
    vec![(a.unwrap_or(d.0), b.unwrap_or(d.1), c.unwrap_or(d.2))]
}

fn limit(name: &str, v: usize, max: usize) -> Result<(), ParamError> {
    if v > max {
        return Err(ParamError(format!(
            "{name} = {v} exceeds the supported bound {max}"
        )));
    }
    Ok(())
}

pub fn schur_weyl(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let list = fixed_or(
        &[(2, 2, 0), (2, 2, 1), (2, 1, 2), (3, 2, 0)],
        [cfg.n, cfg.p, cfg.q],
    );
    let mut out = Vec::new();
    for (n, p, q) in list {
        if n == 0 {
            return Err(ParamError("schur-weyl needs n >= 1".into()));
        }
        limit("p + q", p + q, 4)?;
        limit(
            "dim T^(q)_p",
            n.pow(p as u32) * (p + 1..=p + q).product::<usize>(),
            64,
        )?;
        out.push(case(format!("schur-weyl n={n} p={p} q={q}"), move || {
            verify_schur_weyl(n, p, q)
        }));
    }
    Ok(out)
}

pub fn howe(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let p_default = [(2usize, 2usize, 2usize, 0usize), (2, 2, 2, 1)];
    let list: Vec<(usize, usize, usize, usize)> = if [cfg.n, cfg.nprime, cfg.p, cfg.q]
        .iter()
        .all(Option::is_none)
    {
        p_default.to_vec()
    } else {
        let d = p_default[0];
        vec![(
            cfg.n.unwrap_or(d.0),
            cfg.nprime.unwrap_or(d.1),
            cfg.p.unwrap_or(d.2),
            cfg.q.unwrap_or(d.3),
        )]
    };
    let field = if cfg.modular {
        RankField::Modular
    } else {
        RankField::Rational
    };
    let mut out = Vec::new();
    for (n, np, p, q) in list {
        if n == 0 || np == 0 {
            return Err(ParamError("howe needs n, n' >= 1".into()));
        }
        limit("p + q", p + q, 3)?;
        limit(
            "dim T^(q)_p",
            (n * np).pow(p as u32) * (p + 1..=p + q).product::<usize>(),
            48,
        )?;
        out.push(case(format!("howe n={n} n'={np} p={p} q={q}"), move || {
            verify_howe(n, np, p, q, field)
        }));
    }
    Ok(out)
}

pub fn capelli_t(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ns = pick("n", cfg.n, 1..=2, 1..=3)?;
    let nps = pick("nprime", cfg.nprime, 1..=2, 1..=3)?;
    let ps = pick("p", cfg.p, 1..=3, 1..=3)?;
    if let (Some(r), Some(p)) = (cfg.r, cfg.p) {
        if r < 1 || r > p {
            return Err(ParamError(format!(
                "capelli-t needs 1 <= r <= p, got r = {r}, p = {p}"
            )));
        }
    }
    let rs = pick("r", cfg.r, 1..=3, 1..=3)?;
    let mut out = Vec::new();
    for &n in &ns {
        for &np in &nps {
            limit("n n'", n * np, 4)?;
            for &p in &ps {
                for &r in rs.iter().filter(|&&r| r <= p) {
                    out.push(case(
                        format!("capelli-t n={n} n'={np} p={p} r={r}"),
                        move || verify_capelli_t(n, np, p, r),
                    ));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(ParamError("capelli-t needs r <= p".into()));
    }
    Ok(out)
}

pub fn fft_sl(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let list = fixed_or(
        &[(2, 1, 2), (2, 2, 2), (2, 2, 4)],
        [cfg.n, cfg.nprime, cfg.p],
    );
    let mut out = Vec::new();
    for (n, np, p) in list {
        if n == 0 || np == 0 {
            return Err(ParamError("fft-sl needs n, n' >= 1".into()));
        }
        limit("(n n')^p", (n * np).pow(p as u32), 256)?;
        out.push(case(format!("fft-sl n={n} n'={np} p={p}"), move || {
            verify_fft_sl(n, np, p)
        }));
    }
    Ok(out)
}

/// --lambda selects one immanant; --p selects all of weight p plus the preimmanant.
fn modes(
    cfg: &SuiteConfig,
    default_p: std::ops::RangeInclusive<usize>,
    max_p: usize,
) -> Result<Vec<Mode>, ParamError> {
    if let Some(l) = &cfg.lambda {
        if l.weight() == 0 || l.weight() > max_p {
            return Err(ParamError(format!("|lambda| must be in 1..={max_p}")));
        }
        return Ok(vec![Mode::Immanant(l.clone())]);
    }
    let ps = pick("p", cfg.p, default_p, 1..=max_p)?;
    let mut out = Vec::new();
    for p in ps {
        out.extend(Partition::all(p).into_iter().map(Mode::Immanant));
        out.push(Mode::Preimmanant(p));
    }
    Ok(out)
}

fn mode_label(m: &Mode) -> String {
    match m {
        Mode::Immanant(l) => format!("lambda={l}"),
        Mode::Preimmanant(p) => format!("preimm p={p}"),
    }
}

pub fn higher_capelli_weyl(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ms = modes(cfg, 1..=3, 3)?;
    let ns = pick("n", cfg.n, 1..=2, 1..=3)?;
    let nps = pick("nprime", cfg.nprime, 1..=2, 1..=3)?;
    let mut out = Vec::new();
    for m in &ms {
        for &n in &ns {
            for &np in &nps {
                let m = m.clone();
                out.push(case(
                    format!("higher-capelli-weyl {} n={n} n'={np}", mode_label(&m)),
                    move || verify_higher_capelli_weyl(&m, n, np),
                ));
            }
        }
    }
    Ok(out)
}

pub fn higher_capelli_t(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ms = modes(cfg, 1..=2, 3)?;
    let ns = pick("n", cfg.n, [2], 1..=2)?;
    let nps = pick("nprime", cfg.nprime, [2], 1..=2)?;
    let mut out = Vec::new();
    for mode in &ms {
        let p = mode.p();
        let mlist = match cfg.m {
            Some(m) if m < p || m > p + 1 => {
                return Err(ParamError(format!(
                    "higher-capelli-t needs p <= m <= p + 1, got m = {m}, p = {p}"
                )));
            }
            Some(m) => vec![m],
            None => (p..=p + 1).collect(),
        };
        for &n in &ns {
            for &np in &nps {
                for &m in &mlist {
                    let mode = mode.clone();
                    out.push(case(
                        format!("higher-capelli-t {} n={n} n'={np} m={m}", mode_label(&mode)),
                        move || verify_higher_capelli_t(&mode, n, np, m),
                    ));
                }
            }
        }
    }
    Ok(out)
}
