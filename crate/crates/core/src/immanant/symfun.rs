//! Symmetric polynomials evaluated at rational points, and Kostka numbers.

use crate::rat::{self, Rat};
use crate::symcore::tableau::semistandard;
use crate::symcore::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Schur,
    Monomial,
    PowerSum,
}

pub fn sym_eval(kind: SymKind, lambda: &Partition, values: &[Rat]) -> Rat {
    let n = values.len();
    match kind {
        SymKind::Schur => semistandard(lambda, n)
            .iter()
            .map(|t| {
                t.iter()
                    .flatten()
                    .map(|&v| values[v - 1].clone())
                    .product::<Rat>()
            })
            .sum(),
        SymKind::Monomial => lambda
            .distinct_rearrangements(n)
            .iter()
            .map(|e| {
                e.iter()
                    .zip(values)
                    .map(|(&k, x)| rat::pow(x, k as u32))
                    .product::<Rat>()
            })
            .sum(),
        SymKind::PowerSum => lambda
            .parts()
            .iter()
            .map(|&k| values.iter().map(|x| rat::pow(x, k as u32)).sum::<Rat>())
            .product(),
    }
}

/// K_{λμ}: semistandard tableaux of shape λ and content μ.
pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let m = mu.len();
    semistandard(lambda, m)
        .iter()
        .filter(|t| {
            let mut content = vec![0usize; m];
            for &v in t.iter().flatten() {
                content[v - 1] += 1;
            }
            content == mu.parts()
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{character, Perm};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn vals(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat::int(x)).collect()
    }

    #[test]
    fn small_evaluations() {
        let (a, b) = (3, -2);
        assert_eq!(
            sym_eval(SymKind::Schur, &part("1"), &vals(&[a, b])),
            rat::int(a + b)
        );
        assert_eq!(
            sym_eval(SymKind::Schur, &part("2"), &vals(&[a, b])),
            rat::int(a * a + a * b + b * b)
        );
        assert_eq!(
            sym_eval(SymKind::Schur, &part("1,1"), &vals(&[a, b])),
            rat::int(a * b)
        );
        assert_eq!(
            sym_eval(SymKind::Monomial, &part("2"), &vals(&[a, b])),
            rat::int(a * a + b * b)
        );
        assert_eq!(
            sym_eval(SymKind::PowerSum, &part("1,1"), &vals(&[a, b])),
            rat::int((a + b) * (a + b))
        );
        assert_eq!(
            sym_eval(SymKind::Schur, &part("1,1,1"), &vals(&[a, b])),
            rat::zero()
        );
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&part("2,1"), &part("1,1,1")), 2);
        assert_eq!(kostka(&part("3"), &part("2,1")), 1);
        assert_eq!(kostka(&part("1,1,1"), &part("2,1")), 0);
        // Σ_{σ∈S_μ} χ_λ(σ) = |S_μ| K_{λμ}
        for p in 1..=5 {
            for l in Partition::all(p) {
                for m in Partition::all(p) {
                    let young = Perm::young_subgroup(m.parts());
                    let s: i64 = young.iter().map(|s| character(&l, s).unwrap()).sum();
                    assert_eq!(s, young.len() as i64 * kostka(&l, &m) as i64, "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn schur_is_kostka_times_monomial() {
        let x = vals(&[2, -1, 3]);
        for p in 1..=4 {
            for l in Partition::all(p) {
                let rhs: Rat = Partition::all(p)
                    .iter()
                    .map(|m| rat::int(kostka(&l, m) as i64) * sym_eval(SymKind::Monomial, m, &x))
                    .sum();
                assert_eq!(sym_eval(SymKind::Schur, &l, &x), rhs);
            }
        }
    }
}
