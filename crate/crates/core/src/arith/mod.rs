//! Exact coefficient rings.
//!
//! Three rings are used throughout: [`Int`] for plain q-expansions,
//! [`MultiPoly`] for coefficients carrying the parameters `x` and `y`, and
//! [`QuadExt`] for the rank-2 extension that holds the conjugate pair `u`,
//! `v = xy - u`.

mod int;
mod poly;
mod quadext;

use std::fmt::{Debug, Display};

pub use int::Int;
pub use poly::{Monomial, MultiPoly, Var};
pub use quadext::QuadExt;

/// A commutative ring with exact arithmetic, as needed by truncated series.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: &Int) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&Int::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn scale(&self, k: &Int) -> Self {
        self.mul_ref(&Self::from_int(k))
    }

    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn one() -> Self {
        Int::ONE
    }
    fn from_int(n: &Int) -> Self {
        n.clone()
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        Int::add_mul_assign(self, a, b)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn scale(&self, k: &Int) -> Self {
        self * k
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }
}
