//! The rank-2 extension `MultiPoly[u] / (u^2 - xy*u + (x^2 + y^2 - 4))`.
//!
//! `u` and `v = xy - u` are the two roots of `t^2 - xy*t + (x^2 + y^2 - 4)`,
//! so `u + v = xy` and `u*v = x^2 + y^2 - 4`. Only `u` is stored; `v` is
//! always formed as `xy - u`. A polynomial expression symmetric under
//! `u <-> v` reduces to an element whose `u`-coefficient vanishes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Int, MultiPoly, Ring};
use crate::error::Error;

/// `base + ucoef * u`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    pub base: MultiPoly,
    pub ucoef: MultiPoly,
}

/// `x^2 + y^2 - 4`, the product of the two roots.
pub(crate) fn root_product() -> MultiPoly {
    let x = MultiPoly::x();
    let y = MultiPoly::y();
    &(&(&x * &x) + &(&y * &y)) - &MultiPoly::constant(4)
}

/// `xy`, the sum of the two roots.
pub(crate) fn root_sum() -> MultiPoly {
    &MultiPoly::x() * &MultiPoly::y()
}

impl QuadExt {
    pub fn new(base: MultiPoly, ucoef: MultiPoly) -> Self {
        QuadExt { base, ucoef }
    }

    pub fn from_base(base: MultiPoly) -> Self {
        QuadExt {
            base,
            ucoef: MultiPoly::zero(),
        }
    }

    /// The generator `u`.
    pub fn u() -> Self {
        QuadExt::new(MultiPoly::zero(), MultiPoly::constant(1))
    }

    /// The conjugate root `v = xy - u`.
    pub fn v() -> Self {
        QuadExt::new(root_sum(), MultiPoly::constant(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ucoef.is_zero()
    }

    /// Returns the `u`-free part, failing if a `u` residue survives.
    pub fn project_base(&self) -> Result<MultiPoly, Error> {
        if self.ucoef.is_zero() {
            Ok(self.base.clone())
        } else {
            Err(Error::NonSymmetricResidue {
                residue: self.ucoef.to_string(),
            })
        }
    }

    /// Image under `u -> v`.
    pub fn conjugate(&self) -> QuadExt {
        // a + b*(xy - u) = (a + b*xy) - b*u
        QuadExt::new(&self.base + &(&self.ucoef * &root_sum()), -&self.ucoef)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ucoef.is_zero() {
            write!(f, "{}", self.base)
        } else if self.base.is_zero() {
            write!(f, "({})*u", self.ucoef)
        } else {
            write!(f, "{} + ({})*u", self.base, self.ucoef)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &'a QuadExt) -> QuadExt {
        QuadExt::new(&self.base + &rhs.base, &self.ucoef + &rhs.ucoef)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &'a QuadExt) -> QuadExt {
        QuadExt::new(&self.base - &rhs.base, &self.ucoef - &rhs.ucoef)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &'a QuadExt) -> QuadExt {
        // (a + b u)(c + d u) = ac + (ad + bc) u + bd u^2,
        // u^2 = xy u - (x^2 + y^2 - 4)
        let ac = &self.base * &rhs.base;
        let cross = &(&self.base * &rhs.ucoef) + &(&self.ucoef * &rhs.base);
        let bd = &self.ucoef * &rhs.ucoef;
        if bd.is_zero() {
            return QuadExt::new(ac, cross);
        }
        QuadExt::new(
            &ac - &(&bd * &root_product()),
            &cross + &(&bd * &root_sum()),
        )
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.base, -&self.ucoef)
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::default()
    }
    fn one() -> Self {
        QuadExt::from_base(MultiPoly::constant(1))
    }
    fn from_int(n: &Int) -> Self {
        QuadExt::from_base(MultiPoly::constant(n.clone()))
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
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
    fn add_assign_ref(&mut self, other: &Self) {
        self.base.add_assign_ref(&other.base);
        self.ucoef.add_assign_ref(&other.ucoef);
    }
    fn scale(&self, k: &Int) -> Self {
        QuadExt::new(self.base.scale(k), self.ucoef.scale(k))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if !self.ucoef.is_zero() {
            return None;
        }
        self.base.unit_inverse().map(QuadExt::from_base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn u_squared_reduces() {
        let u = QuadExt::u();
        let expected = QuadExt::new(-root_product(), root_sum());
        assert_eq!(&u * &u, expected);
    }

    #[test]
    fn root_product_and_sum() {
        let (u, v) = (QuadExt::u(), QuadExt::v());
        assert_eq!((&u * &v).project_base().unwrap(), root_product());
        assert_eq!((&u + &v).project_base().unwrap(), root_sum());
        assert_eq!(
            (&(&u + &v) * &QuadExt::one()).project_base().unwrap(),
            root_sum()
        );
    }

    #[test]
    fn projection() {
        let three = QuadExt::from_int(&Int::from(3));
        assert_eq!(three.project_base().unwrap(), MultiPoly::constant(3));
        assert!(matches!(
            QuadExt::u().project_base(),
            Err(Error::NonSymmetricResidue { .. })
        ));
    }

    #[test]
    fn power_sums_are_symmetric() {
        let (u, v) = (QuadExt::u(), QuadExt::v());
        let (mut un, mut vn) = (QuadExt::one(), QuadExt::one());
        for _ in 0..12 {
            un = &un * &u;
            vn = &vn * &v;
            let s = &un + &vn;
            assert!(s.ucoef.is_zero(), "u^n + v^n kept a u residue: {s}");
        }
    }

    #[test]
    fn conjugation_swaps_roots() {
        assert_eq!(QuadExt::u().conjugate(), QuadExt::v());
        assert_eq!(QuadExt::v().conjugate(), QuadExt::u());
    }

    fn small_elem() -> impl Strategy<Value = QuadExt> {
        let poly = prop::collection::vec(((0u32..3, 0u32..3), -9i64..9), 0..4).prop_map(|ts| {
            MultiPoly::from_terms(
                ts.into_iter()
                    .map(|((a, b), c)| (super::super::Monomial::new(a, b), c)),
            )
        });
        (poly.clone(), poly).prop_map(|(b, u)| QuadExt::new(b, u))
    }

    proptest! {
        #[test]
        fn multiplication_commutes_and_associates(a in small_elem(), b in small_elem(), c in small_elem()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn norm_and_trace_are_u_free(a in small_elem()) {
            let conj = a.conjugate();
            prop_assert!((&a * &conj).ucoef.is_zero());
            prop_assert!((&a + &conj).ucoef.is_zero());
        }

        #[test]
        fn conjugation_is_a_ring_map(a in small_elem(), b in small_elem()) {
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        }
    }
}
