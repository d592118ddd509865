//! The ring contract shared by all coefficient algebras, and the global term budget.

use std::fmt::Debug;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::rat::{self, Rat};

/// Associative unital algebra over the rationals with exact equality.
///
/// Method names avoid clashing with `std::ops` so that `Rat` can implement both.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    /// Whether multiplication is commutative. Generic code uses this to refuse
    /// identities that only hold over commutative rings.
    const COMMUTATIVE: bool = false;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;

    fn negate(&self) -> Self {
        self.scale(&rat::int(-1))
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// Number of stored terms, used for reporting sizes.
    fn term_count(&self) -> usize {
        usize::from(!self.is_zero())
    }

    fn commutator(&self, other: &Self) -> Self {
        self.times(other).minus(&other.times(self))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

impl Ring for Rat {
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        rat::zero()
    }
    fn one() -> Self {
        rat::one()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        rat::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Sums a sequence of ring elements.
pub fn sum<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    let mut acc = R::zero();
    for x in items {
        acc.add_assign_ref(&x);
    }
    acc
}

static TERM_BUDGET: AtomicUsize = AtomicUsize::new(usize::MAX);

/// Panic payload raised when an intermediate result exceeds the term budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermBudgetExceeded {
    pub terms: usize,
    pub budget: usize,
}

/// Sets the largest number of terms any normal-ordered intermediate may hold.
pub fn set_term_budget(max_terms: Option<usize>) {
    TERM_BUDGET.store(max_terms.unwrap_or(usize::MAX), Ordering::Relaxed);
}

pub fn term_budget() -> usize {
    TERM_BUDGET.load(Ordering::Relaxed)
}

/// Aborts the current computation with a [`TermBudgetExceeded`] payload if `terms`
/// is over budget. The CLI catches the payload and maps it to its own exit code.
#[inline]
pub fn check_terms(terms: usize) {
    let budget = TERM_BUDGET.load(Ordering::Relaxed);
    if terms > budget {
        std::panic::panic_any(TermBudgetExceeded { terms, budget });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_ring_ops() {
        let a = rat::frac(1, 2);
        let b = rat::int(3);
        assert_eq!(a.plus(&b), rat::frac(7, 2));
        assert_eq!(a.times(&b), rat::frac(3, 2));
        assert_eq!(a.minus(&b), rat::frac(-5, 2));
        assert_eq!(b.pow(3), rat::int(27));
        assert!(a.commutator(&b).is_zero());
        assert_eq!(sum(vec![a.clone(), a]), rat::int(1));
    }
}
