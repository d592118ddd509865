//! Young's seminormal representations ρ_λ with rational entries.
//!
//! Basis vectors v_T are indexed by `std_tableaux(λ)` in its fixed order. Matrices
//! act on columns: ρ(s_i) v_T is column T. With d = c_T(i+1) − c_T(i):
//! - if s_iT is not standard, ρ(s_i) v_T = d⁻¹ v_T (d = ±1);
//! - if T precedes s_iT, ρ(s_i) v_T = d⁻¹ v_T + v_{s_iT} and
//!   ρ(s_i) v_{s_iT} = (1 − d⁻²) v_T − d⁻¹ v_{s_iT}.
//!
//! This differs from the orthogonal form by a diagonal change of basis, so all
//! diagonal entries ρ_λ(σ)_{TT} agree with the orthogonal form.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rat::{self, Rat};
use crate::symcore::{jucys_murphy, std_tableaux, GAElem, JmKind, Partition, Perm, Tableau};

type RhoCache = HashMap<(Partition, Perm), Arc<RatMatrix>>;

static RHO: LazyLock<Mutex<RhoCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static TABLEAUX: LazyLock<Mutex<HashMap<Partition, Arc<Vec<Tableau>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// STab(λ) in the basis order, cached.
pub fn basis(lambda: &Partition) -> Arc<Vec<Tableau>> {
    if let Some(b) = TABLEAUX.lock().unwrap().get(lambda) {
        return b.clone();
    }
    let b = Arc::new(std_tableaux(lambda));
    TABLEAUX.lock().unwrap().insert(lambda.clone(), b.clone());
    b
}

fn index_of(basis: &[Tableau], t: &Tableau) -> Result<usize> {
    basis
        .binary_search_by(|x| x.reading_word().cmp(&t.reading_word()))
        .ok()
        .filter(|&k| &basis[k] == t)
        .ok_or_else(|| Error::Invalid(format!("{t} is not a standard tableau of the given shape")))
}

/// ρ_λ(s_i).
pub fn rho_gen(lambda: &Partition, i: usize) -> Result<RatMatrix> {
    let p = lambda.weight();
    if i < 1 || i >= p {
        return Err(Error::Invalid(format!("s_{i} is not a generator of S_{p}")));
    }
    let b = basis(lambda);
    let dim = b.len();
    let mut m = RatMatrix::zeros(dim, dim);
    for (k, t) in b.iter().enumerate() {
        let d = rat::int(t.axial_distance(i)?);
        let dinv = rat::recip(&d);
        m.set(k, k, dinv.clone());
        if let Some(st) = t.swap(i) {
            let l = index_of(&b, &st)?;
            if k < l {
                m.set(l, k, rat::one());
            } else {
                m.set(l, k, rat::one() - &dinv * &dinv);
            }
        }
    }
    Ok(m)
}

/// ρ_λ(σ), memoized.
pub fn rho(lambda: &Partition, sigma: &Perm) -> Result<Arc<RatMatrix>> {
    let p = lambda.weight();
    if sigma.degree() > p {
        return Err(Error::Size(format!("{sigma} is not in S_{p}")));
    }
    let key = (lambda.clone(), sigma.clone());
    if let Some(m) = RHO.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let dim = basis(lambda).len();
    let mut m = RatMatrix::identity(dim);
    for i in sigma.reduced_word() {
        m = m.mul(&rho_gen(lambda, i)?);
    }
    let m = Arc::new(m);
    RHO.lock().unwrap().insert(key, m.clone());
    Ok(m)
}

/// Linear extension ρ_λ(t).
pub fn rho_elem(lambda: &Partition, t: &GAElem) -> Result<RatMatrix> {
    t.check_support(lambda.weight())?;
    let dim = basis(lambda).len();
    let mut acc = RatMatrix::zeros(dim, dim);
    for (s, c) in t.terms() {
        acc = acc.add(&rho(lambda, s)?.scale(c));
    }
    Ok(acc)
}

/// ρ_λ(σ)_{TT}.
pub fn diag_entry_perm(lambda: &Partition, t: &Tableau, sigma: &Perm) -> Result<Rat> {
    if &t.shape() != lambda {
        return Err(Error::Invalid(format!("{t} does not have shape {lambda}")));
    }
    let k = index_of(&basis(lambda), t)?;
    Ok(rho(lambda, sigma)?.get(k, k).clone())
}

/// ρ_λ(t)_{TT}.
pub fn diag_entry(lambda: &Partition, t: &Tableau, x: &GAElem) -> Result<Rat> {
    x.check_support(lambda.weight())?;
    let mut acc = rat::zero();
    for (s, c) in x.terms() {
        acc += diag_entry_perm(lambda, t, s)? * c;
    }
    Ok(acc)
}

/// Diagonal entries of ρ_λ(x_i): (T, i) ↦ entry. Fails if some ρ_λ(x_i) is not diagonal.
pub fn jm_spectrum(lambda: &Partition) -> Result<BTreeMap<(Tableau, usize), i64>> {
    let p = lambda.weight();
    let b = basis(lambda);
    let mut out = BTreeMap::new();
    for i in 1..=p {
        let m = rho_elem(lambda, &jucys_murphy(JmKind::X, i, p)?)?;
        if !m.is_diagonal() {
            return Err(Error::Invalid(format!("ρ_{lambda}(x_{i}) is not diagonal")));
        }
        for (k, t) in b.iter().enumerate() {
            let v = rat::to_i64(m.get(k, k))
                .ok_or_else(|| Error::Invalid(format!("non-integral eigenvalue of x_{i}")))?;
            out.insert((t.clone(), i), v);
        }
    }
    Ok(out)
}

pub fn spectrum_json(lambda: &Partition) -> Result<serde_json::Value> {
    let spec = jm_spectrum(lambda)?;
    let mut by_t: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for ((t, _), v) in spec {
        by_t.entry(t.to_string()).or_default().push(v);
    }
    Ok(serde_json::json!({"shape": lambda.to_string(), "spectra": by_t}))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::symcore::character;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_dimensional_representations() {
        for p in 2..5 {
            for i in 1..p {
                assert_eq!(
                    rho_gen(&Partition::row(p), i).unwrap(),
                    RatMatrix::from_ints(&[&[1]])
                );
                assert_eq!(
                    rho_gen(&Partition::column(p), i).unwrap(),
                    RatMatrix::from_ints(&[&[-1]])
                );
            }
        }
        assert!(rho_gen(&part("2,1"), 3).is_err());
    }

    #[test]
    fn shape_21_generator() {
        let m = rho_gen(&part("2,1"), 1).unwrap();
        // [1 2/3] has r(1) = 1, [1 3/2] has r(1) = −1
        assert_eq!(m.diagonal(), vec![rat::int(1), rat::int(-1)]);
        assert_eq!(m.mul(&m), RatMatrix::identity(2));
    }

    #[test]
    fn traces_are_characters() {
        for p in 1..=4 {
            for l in Partition::all(p) {
                for s in Perm::all(p) {
                    let tr = rho(&l, &s).unwrap().trace();
                    assert_eq!(tr, rat::int(character(&l, &s).unwrap()), "{l} {s}");
                }
            }
        }
    }

    #[test]
    fn homomorphism_on_s3() {
        let l = part("2,1");
        for a in Perm::all(3) {
            for b in Perm::all(3) {
                let lhs = rho(&l, &a.compose(&b)).unwrap();
                let rhs = rho(&l, &a).unwrap().mul(&rho(&l, &b).unwrap());
                assert_eq!(*lhs, rhs);
            }
        }
        assert_eq!(*rho(&l, &Perm::identity()).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn diag_entries_follow_axial_distance() {
        let l = part("2,1");
        for t in std_tableaux(&l) {
            let d = t.axial_distance(1).unwrap();
            assert_eq!(
                diag_entry(&l, &t, &GAElem::perm(Perm::s(1))).unwrap(),
                rat::frac(1, d)
            );
            assert_eq!(diag_entry(&l, &t, &GAElem::one()).unwrap(), rat::one());
        }
        let sum: Rat = std_tableaux(&l)
            .iter()
            .map(|t| diag_entry_perm(&l, t, &"(1 2 3)".parse().unwrap()).unwrap())
            .sum();
        assert_eq!(sum, rat::int(-1));
        let wrong = Tableau::new(vec![vec![1, 2, 3]]).unwrap();
        assert!(diag_entry(&l, &wrong, &GAElem::one()).is_err());
    }

    #[test]
    fn example_spectrum() {
        let l = part("2,1");
        let spec = jm_spectrum(&l).unwrap();
        let t = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        let got: Vec<i64> = (1..=3).map(|i| spec[&(t.clone(), i)]).collect();
        assert_eq!(got, vec![0, -1, 1]);
        let spec = jm_spectrum(&part("2,2")).unwrap();
        for t in std_tableaux(&part("2,2")) {
            assert_eq!(spec[&(t.clone(), 4)], t.content(4).unwrap());
            assert_eq!(spec[&(t.clone(), 1)], 0);
        }
    }
}
