//! Exact rational scalars.

use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
pub use malachite_q::Rational as Rat;

pub fn int(n: i64) -> Rat {
    Rat::from(n)
}

pub fn frac(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::from_signeds(num, den)
}

pub fn zero() -> Rat {
    Rat::ZERO
}

pub fn one() -> Rat {
    Rat::ONE
}

pub fn is_zero(x: &Rat) -> bool {
    *x == Rat::ZERO
}

pub fn recip(x: &Rat) -> Rat {
    assert!(!is_zero(x), "reciprocal of zero");
    x.clone().reciprocal()
}

pub fn factorial(n: usize) -> Rat {
    let mut acc = Rat::ONE;
    for k in 2..=n {
        acc *= Rat::from(k as u64);
    }
    acc
}

pub fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Parses "a", "-a" or "a/b".
pub fn parse_rat(s: &str) -> Option<Rat> {
    Rat::from_str(s.trim()).ok()
}

/// Integer value if the rational is integral and fits.
pub fn to_i64(x: &Rat) -> Option<i64> {
    i64::try_from(x).ok()
}

pub fn pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::ONE;
    for _ in 0..e {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let x = frac(-6, 4);
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(parse_rat("-3/2"), Some(x));
        assert_eq!(parse_rat("7"), Some(int(7)));
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial_u64(4), 24);
    }

    #[test]
    fn reciprocal_and_integrality() {
        assert_eq!(recip(&frac(2, 3)), frac(3, 2));
        assert_eq!(to_i64(&int(-4)), Some(-4));
        assert_eq!(to_i64(&frac(1, 2)), None);
    }
}
