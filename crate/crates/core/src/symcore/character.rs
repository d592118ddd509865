//! Irreducible characters of S_p by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::symcore::groupalg::GAElem;
use crate::symcore::partition::Partition;
use crate::symcore::perm::Perm;

type Key = (Vec<usize>, Vec<usize>);

static MEMO: LazyLock<Mutex<HashMap<Key, i64>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// χ_λ on the class of cycle type μ.
pub fn character_of_type(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::Size(format!("|{lambda}| != |{mu}|")));
    }
    Ok(mn(lambda.parts(), mu.parts()))
}

/// χ_λ(σ) for σ ∈ S_p, p = |λ|.
pub fn character(lambda: &Partition, sigma: &Perm) -> Result<i64> {
    let mu = sigma.cycle_type(lambda.weight())?;
    character_of_type(lambda, &mu)
}

/// Linear extension χ_λ(t).
pub fn chi_apply(lambda: &Partition, t: &GAElem) -> Result<Rat> {
    t.check_support(lambda.weight())?;
    let mut acc = rat::zero();
    for (s, c) in t.terms() {
        acc += c * rat::int(character(lambda, s)?);
    }
    Ok(acc)
}

// Beta-set form of MN: removing a rim hook of length r moves one bead from b to
// b − r, with sign given by the parity of beads strictly in between.
fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = MEMO.lock().unwrap().get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (l - 1 - i))
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let nl: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        total += sign * mn(&nl, rest);
    }
    MEMO.lock().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&part("1,1"), &Perm::s(1)).unwrap(), -1);
        assert_eq!(character(&part("2,1"), &Perm::identity()).unwrap(), 2);
        assert_eq!(
            character(&part("2,1"), &"(1 2 3)".parse().unwrap()).unwrap(),
            -1
        );
        assert_eq!(character(&part("2,1"), &Perm::s(1)).unwrap(), 0);
        assert!(character(&part("2"), &"(1 3)".parse().unwrap()).is_err());
    }

    #[test]
    fn dimension_matches_hook_formula() {
        for p in 1..8 {
            for l in Partition::all(p) {
                let d = character_of_type(&l, &Partition::column(p)).unwrap();
                assert_eq!(d as u64, l.dimension());
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for p in 1..7 {
            let ps = Partition::all(p);
            for a in &ps {
                for b in &ps {
                    let s: Rat = ps
                        .iter()
                        .map(|mu| {
                            rat::factorial(p) / mu.z()
                                * rat::int(character_of_type(a, mu).unwrap())
                                * rat::int(character_of_type(b, mu).unwrap())
                        })
                        .sum();
                    let expect = if a == b {
                        rat::factorial(p)
                    } else {
                        rat::zero()
                    };
                    assert_eq!(s, expect, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn linear_extension() {
        assert_eq!(
            chi_apply(&part("2,1"), &GAElem::one()).unwrap(),
            rat::int(2)
        );
        assert_eq!(
            chi_apply(&part("2"), &GAElem::perm(Perm::s(1))).unwrap(),
            rat::int(1)
        );
        let t = GAElem::sum_of([Perm::identity(), Perm::s(1)]);
        assert_eq!(chi_apply(&part("1,1"), &t).unwrap(), rat::zero());
        assert!(chi_apply(&part("2"), &GAElem::perm(Perm::s(2))).is_err());
    }
}
