//! The `compute` subcommand: canonical text for single objects.

use std::collections::BTreeMap;

use capelli_core::envelope::{
    capelli, hc_eigenvalue, quantum_immanant, quantum_preimmanant, Pbw, PreimmVariant, QimmVariant,
};
use capelli_core::immanant::{imm, preimm_p, ImmKind, PreimmKind, RingMatrix};
use capelli_core::rat::{self, Rat};
use capelli_core::symcore::{character, character_of_type};
use capelli_core::{Error, Partition, Perm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::suites::immanant::rat_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    Character,
    Capelli,
    QuantumImmanant,
    QuantumPreimmanant,
    Immanant,
    PreimmP,
    HcEigenvalue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Variant {
    #[value(name = "g")]
    G,
    #[value(name = "gprime")]
    GPrime,
    #[value(name = "gcirc")]
    GCirc,
    #[value(name = "gcircprime")]
    GCircPrime,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    #[default]
    Column,
    Row,
    Double,
    Symm,
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub mu: Option<Partition>,
    /// Cycle type, padded with fixed points up to |lambda|.
    #[arg(long)]
    pub cycle: Option<Partition>,
    /// A permutation in cycle notation, e.g. "(1 2)(3 4)".
    #[arg(long)]
    pub perm: Option<Perm>,
    /// capelli:R, g:LAMBDA, gprime:LAMBDA, gcirc:LAMBDA, gcircprime:LAMBDA, or a PBW expression.
    #[arg(long)]
    pub element: Option<String>,
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value = "column")]
    pub kind: Kind,
    /// Use the ° version of a preimmanant.
    #[arg(long)]
    pub circ: bool,
    /// Rows separated by ';', entries by ',', e.g. "1,2;3,1/2". Default: a seeded random matrix.
    #[arg(long)]
    pub matrix: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Error> {
    v.clone()
        .ok_or_else(|| Error::Invalid(format!("--{flag} is required")))
}

fn qimm_variant(v: Variant) -> QimmVariant {
    match v {
        Variant::G => QimmVariant::G,
        Variant::GPrime => QimmVariant::GPrime,
        Variant::GCirc => QimmVariant::GCirc,
        Variant::GCircPrime => QimmVariant::GCircPrime,
    }
}

pub fn parse_matrix(s: &str) -> Result<RingMatrix<Rat>, Error> {
    let rows: Vec<Vec<Rat>> = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    rat::parse_rat(x.trim())
                        .ok_or_else(|| Error::Parse(format!("bad rational {x:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    RingMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
}

fn matrix(args: &ComputeArgs, size: usize) -> Result<RingMatrix<Rat>, Error> {
    match &args.matrix {
        Some(m) => parse_matrix(m),
        None => Ok(rat_matrix(
            &mut ChaCha8Rng::seed_from_u64(args.seed),
            size,
            size,
        )),
    }
}

fn element(spec: &str, n: usize) -> Result<Pbw, Error> {
    let Some((head, arg)) = spec.split_once(':') else {
        return Pbw::parse(spec);
    };
    let variant = match head.trim() {
        "capelli" => {
            let r = arg
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank {arg:?}")))?;
            return capelli(r, n);
        }
        "g" => QimmVariant::G,
        "gprime" => QimmVariant::GPrime,
        "gcirc" => QimmVariant::GCirc,
        "gcircprime" => QimmVariant::GCircPrime,
        other => return Err(Error::Parse(format!("unknown element kind {other:?}"))),
    };
    quantum_immanant(variant, &arg.parse()?, n, None)
}

/// The value as canonical text, plus the parameters it depends on.
pub fn compute(what: What, args: &ComputeArgs) -> Result<(String, BTreeMap<String, Value>), Error> {
    let mut params = BTreeMap::new();
    let mut put = |k: &str, v: Value| {
        params.insert(k.to_string(), v);
    };
    let value = match what {
        What::Character => {
            let l = need(&args.lambda, "lambda")?;
            put("lambda", json!(l.to_string()));
            match (&args.cycle, &args.perm) {
                (Some(c), None) => {
                    if c.weight() > l.weight() {
                        return Err(Error::Size(format!(
                            "cycle type {c} does not fit in S_{}",
                            l.weight()
                        )));
                    }
                    let mut parts = c.parts().to_vec();
                    parts.extend(std::iter::repeat_n(1, l.weight() - c.weight()));
                    let mu = Partition::new(parts)?;
                    put("cycle_type", json!(mu.to_string()));
                    character_of_type(&l, &mu)?.to_string()
                }
                (None, Some(s)) => {
                    put("perm", json!(s.to_string()));
                    character(&l, s)?.to_string()
                }
                _ => return Err(Error::Invalid("give exactly one of --cycle, --perm".into())),
            }
        }
        What::Capelli => {
            let (r, n) = (need(&args.r, "r")?, need(&args.n, "n")?);
            put("r", json!(r));
            put("n", json!(n));
            capelli(r, n)?.to_string()
        }
        What::QuantumImmanant => {
            let (l, n) = (need(&args.lambda, "lambda")?, need(&args.n, "n")?);
            let v = args.variant.unwrap_or(Variant::GCirc);
            put("lambda", json!(l.to_string()));
            put("n", json!(n));
            put("variant", json!(qimm_variant(v).name()));
            quantum_immanant(qimm_variant(v), &l, n, None)?.to_string()
        }
        What::QuantumPreimmanant => {
            let (p, n) = (need(&args.p, "p")?, need(&args.n, "n")?);
            let v = match args.variant.unwrap_or(Variant::GCirc) {
                Variant::G => PreimmVariant::G,
                Variant::GCirc => PreimmVariant::GCirc,
                _ => {
                    return Err(Error::Invalid(
                        "quantum preimmanants come in variants g and gcirc".into(),
                    ))
                }
            };
            put("p", json!(p));
            put("n", json!(n));
            put(
                "variant",
                json!(if v == PreimmVariant::G { "G" } else { "G°" }),
            );
            quantum_preimmanant(v, p, n)?.to_string()
        }
        What::Immanant => {
            let l = need(&args.lambda, "lambda")?;
            let x = matrix(args, l.weight())?;
            let kind = match args.kind {
                Kind::Column => ImmKind::Column,
                Kind::Row => ImmKind::Row,
                Kind::Double => ImmKind::Double,
                Kind::Symm => ImmKind::Symm,
            };
            put("lambda", json!(l.to_string()));
            put("kind", json!(format!("{kind:?}").to_lowercase()));
            put("matrix", matrix_json(&x));
            imm(kind, &l, &x)?.to_string()
        }
        What::PreimmP => {
            let (p, n) = (need(&args.p, "p")?, args.n.unwrap_or(2));
            let x = matrix(args, n)?;
            let kind = match args.kind {
                Kind::Column => PreimmKind::Column,
                Kind::Row => PreimmKind::Row,
                Kind::Symm => PreimmKind::Symm,
                Kind::Double => {
                    return Err(Error::Invalid(
                        "preimm_p has column, row and symm forms".into(),
                    ))
                }
            };
            put("p", json!(p));
            put("kind", json!(format!("{kind:?}").to_lowercase()));
            put("circ", json!(args.circ));
            put("matrix", matrix_json(&x));
            preimm_p(kind, args.circ, p, &x)?.to_string()
        }
        What::HcEigenvalue => {
            let spec = need(&args.element, "element")?;
            let (n, mu) = (need(&args.n, "n")?, need(&args.mu, "mu")?);
            put("element", json!(spec));
            put("n", json!(n));
            put("mu", json!(mu.to_string()));
            hc_eigenvalue(&element(&spec, n)?, &mu, n)?.to_string()
        }
    };
    Ok((value, params))
}

fn matrix_json(x: &RingMatrix<Rat>) -> Value {
    let rows: Vec<Vec<String>> = (1..=x.rows())
        .map(|i| (1..=x.cols()).map(|j| x.get(i, j).to_string()).collect())
        .collect();
    json!(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> ComputeArgs {
        ComputeArgs::default()
    }

    #[test]
    fn documented_examples() {
        let a = ComputeArgs {
            r: Some(1),
            n: Some(3),
            ..args()
        };
        assert_eq!(compute(What::Capelli, &a).unwrap().0, "E11 + E22 + E33");
        let a = ComputeArgs {
            lambda: Some("2,1".parse().unwrap()),
            cycle: Some("3".parse().unwrap()),
            ..args()
        };
        assert_eq!(compute(What::Character, &a).unwrap().0, "-1");
        let a = ComputeArgs {
            element: Some("capelli:2".into()),
            n: Some(2),
            mu: Some("1,1".parse().unwrap()),
            ..args()
        };
        assert_eq!(compute(What::HcEigenvalue, &a).unwrap().0, "2");
    }

    #[test]
    fn matrices_and_errors() {
        let x = parse_matrix("1,2;3,1/2").unwrap();
        assert_eq!(x.get(2, 2), &rat::frac(1, 2));
        assert!(parse_matrix("1,2;3").is_err());
        let a = ComputeArgs {
            lambda: Some("1,1".parse().unwrap()),
            matrix: Some("1,2;3,4".into()),
            ..args()
        };
        assert_eq!(compute(What::Immanant, &a).unwrap().0, "-2");
        let a = ComputeArgs {
            lambda: Some("2".parse().unwrap()),
            cycle: Some("3".parse().unwrap()),
            ..args()
        };
        assert!(compute(What::Character, &a).is_err());
        // a cycle type shorter than |λ| is padded with fixed points
        let a = ComputeArgs {
            lambda: Some("2,1".parse().unwrap()),
            cycle: Some("2".parse().unwrap()),
            ..args()
        };
        assert_eq!(compute(What::Character, &a).unwrap().0, "0");
    }
}
