//! Truncated power series in `q` over an exact coefficient ring.
//!
//! A [`TruncatedSeries`] of order `N` is known modulo `q^N`: it stores exactly
//! the coefficients of `q^0, ..., q^{N-1}`. Binary operations return the
//! minimum of the operand orders so that unknown coefficients are never
//! treated as known.

mod eta;

use std::fmt;

use crate::arith::{Int, MultiPoly, Ring, Var};
use crate::error::{Error, Result};

pub use eta::{eta_factor, eta_quotient, odd_index_product, theta_phi, theta_psi, EtaQuotient};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// Integer q-series.
pub type IntSeries = TruncatedSeries<Int>;
/// q-series with coefficients in `Z[x, y]`.
pub type PolySeries = TruncatedSeries<MultiPoly>;

impl<C: Ring> TruncatedSeries<C> {
    /// Series whose order is the number of supplied coefficients.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c * q^e` known modulo `q^order`.
    pub fn monomial(c: C, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e < order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Builds a series from sparse `(exponent, coefficient)` pairs; terms at or
    /// beyond `order` are dropped and repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, C)>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e < order {
                s.coeffs[e].add_assign_ref(&c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^e`, or `None` if `e` is beyond the known range.
    pub fn coeff(&self, e: usize) -> Option<&C> {
        self.coeffs.get(e)
    }

    pub fn coeff_mut(&mut self, e: usize) -> Option<&mut C> {
        self.coeffs.get_mut(e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].add_ref(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].sub_ref(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn scale_int(&self, k: &Int) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// Multiplies by `q^k`; the order grows by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Cauchy product modulo `q^min(N1, N2)`. Zero coefficients are skipped,
    /// which keeps products of sparse theta-type series cheap.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n];
        let rhs: Vec<(usize, &C)> = other.coeffs[..n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                if i + j >= n {
                    break;
                }
                out[i + j].add_mul_assign(a, b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Two-sided inverse modulo `q^N`; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstantTerm {
                constant: self.coeffs[0].to_string(),
            })?;
        let tail: Vec<(usize, &C)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv: Vec<C> = Vec::with_capacity(n);
        inv.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = C::zero();
            for &(j, a) in &tail {
                if j > k {
                    break;
                }
                acc.add_mul_assign(a, &inv[k - j]);
            }
            inv.push(acc.neg_ref().mul_ref(&c0_inv));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `sum_n a_{m n + j} q^n`, known modulo `q^ceil((N - j) / m)`.
    ///
    /// `dissect(f, 2, 0)` is the even-part ("huffing") operator.
    pub fn dissect(&self, m: usize, j: usize) -> Self {
        assert!(m >= 1 && j < m, "dissect requires 0 <= j < m");
        let n = self.order();
        let out_order = (n + m - 1).saturating_sub(j) / m;
        TruncatedSeries {
            coeffs: (0..out_order)
                .map(|i| self.coeffs[m * i + j].clone())
                .collect(),
        }
    }

    /// Substitutes `q -> q^k`; the result is known modulo `q^{N k}`.
    pub fn subst_qpow(&self, k: usize) -> Self {
        assert!(k >= 1, "subst_qpow requires k >= 1");
        let mut coeffs = vec![C::zero(); self.order() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Applies `f` coefficientwise, e.g. to move between coefficient rings.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Lowest power where the two series differ on their common known range.
    pub fn first_mismatch<'a>(&'a self, other: &'a Self) -> Option<(usize, &'a C, &'a C)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a, b))
    }
}

impl TruncatedSeries<Int> {
    /// Integer series from small coefficients, mostly for tests and tables.
    pub fn from_i64s(values: &[i64]) -> Self {
        TruncatedSeries::from_coeffs(values.iter().map(|&v| Int::from(v)).collect())
    }

    /// Embeds an integer series as constant polynomials.
    pub fn to_poly(&self) -> PolySeries {
        self.map(|c| MultiPoly::constant(c.clone()))
    }
}

impl TruncatedSeries<MultiPoly> {
    /// Specializes one variable to an integer in every coefficient.
    pub fn eval(&self, v: Var, value: &Int) -> PolySeries {
        self.map(|p| p.eval(v, value))
    }

    /// Coefficientwise extraction of the `x^dx y^dy` slice.
    pub fn slice(&self, dx: u32, dy: u32) -> IntSeries {
        let m = crate::arith::Monomial::new(dx, dy);
        self.map(|p| p.coeff(m))
    }
}

impl<C: Ring> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl<C: Ring> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> IntSeries {
        IntSeries::from_i64s(v)
    }

    #[test]
    fn product_of_binomials() {
        let a = s(&[1, 1, 0, 0, 0]);
        let b = s(&[1, -1, 0, 0, 0]);
        assert_eq!(a.mul(&b), s(&[1, 0, -1, 0, 0]));
        assert!(a.mul(&IntSeries::zero(5)).is_zero());
    }

    #[test]
    fn orders_take_the_minimum() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b), s(&[1, 3]));
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(s(&[1, -1, 0, 0]).inverse().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(s(&[-1, 0, 0]).inverse().unwrap(), s(&[-1, 0, 0]));
    }

    #[test]
    fn non_unit_inverse_fails() {
        assert!(matches!(
            s(&[2, 1, 0]).inverse(),
            Err(Error::NonUnitConstantTerm { .. })
        ));
    }

    #[test]
    fn dissection_by_definition() {
        let f = s(&[1, 3, 5, 7]);
        assert_eq!(f.dissect(2, 0), s(&[1, 5]));
        assert_eq!(f.dissect(2, 1), s(&[3, 7]));
        // N = 5: even indices 0,2,4 known, odd indices 1,3 known
        let g = s(&[1, 2, 3, 4, 5]);
        assert_eq!(g.dissect(2, 0), s(&[1, 3, 5]));
        assert_eq!(g.dissect(2, 1), s(&[2, 4]));
        assert_eq!(g.dissect(3, 2), s(&[3]));
        assert_eq!(s(&[7]).dissect(2, 1).order(), 0);
    }

    #[test]
    fn substitution() {
        assert_eq!(s(&[1, 1, 1]).subst_qpow(2), s(&[1, 0, 1, 0, 1, 0]));
        let f = s(&[4, -1, 9]);
        assert_eq!(f.subst_qpow(1), f);
    }

    fn series(order: usize) -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-50i64..50, order).prop_map(|v| IntSeries::from_i64s(&v))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = IntSeries> {
        (prop::bool::ANY, series(order - 1)).prop_map(|(neg, tail)| {
            let mut c = vec![Int::from(if neg { -1 } else { 1 })];
            c.extend(tail.into_coeffs());
            IntSeries::from_coeffs(c)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(f in unit_series(24)) {
            let inv = f.inverse().unwrap();
            prop_assert_eq!(f.mul(&inv), IntSeries::one(24));
            prop_assert_eq!(inv.mul(&f), IntSeries::one(24));
        }

        #[test]
        fn dissections_recombine(f in series(31), m in 1usize..5) {
            let mut total = IntSeries::zero(f.order());
            for j in 0..m {
                let part = f.dissect(m, j).subst_qpow(m).shift(j);
                prop_assert!(part.order() >= f.order());
                total = total.add(&part);
            }
            prop_assert_eq!(total, f);
        }

        #[test]
        fn huffing_pulls_out_even_factor(a in series(16), b in series(32)) {
            let lhs = a.subst_qpow(2).mul(&b).dissect(2, 0);
            let rhs = a.mul(&b.dissect(2, 0));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
