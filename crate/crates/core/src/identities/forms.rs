//! Closed-form (series-algebra) sides of the identities.
//!
//! Nothing in this file looks at individual partitions; the enumeration side
//! lives in [`crate::partitions`].

use crate::arith::{Int, Monomial, MultiPoly, QuadExt, Ring};
use crate::chebyshev::{g_even_component_at, g_odd_component_at};
use crate::error::Result;
use crate::series::{
    eta_quotient, odd_index_product, EtaQuotient, IntSeries, PolySeries, TruncatedSeries,
};

pub fn pdo_series(order: usize) -> Result<IntSeries> {
    eta_quotient(&EtaQuotient::pdo(), order)
}

pub fn quotient(num: &[(usize, u32)], den: &[(usize, u32)], order: usize) -> Result<IntSeries> {
    eta_quotient(&EtaQuotient::new(num, den)?, order)
}

/// `1 - q^a`.
fn one_minus(a: usize, order: usize) -> IntSeries {
    IntSeries::one(order).sub(&IntSeries::monomial(Int::ONE, a, order))
}

/// `q^a / (1 - q^a)^2`, by series division.
pub fn geometric_derivative(a: usize, order: usize) -> Result<IntSeries> {
    let den = one_minus(a, order).square();
    Ok(IntSeries::monomial(Int::ONE, a, order).mul(&den.inverse()?))
}

fn mono(c: i64, dx: u32, dy: u32) -> MultiPoly {
    MultiPoly::monomial(c, Monomial::new(dx, dy))
}

fn lift(s: &IntSeries, coeff: &MultiPoly) -> PolySeries {
    s.map(|c| coeff.scale(c))
}

/// `prod_m (1 + x q^{2m-1} / (1 - q^{2m-1})^2) = sum_k C_k(q) x^k`.
pub fn pdo_x_product(order: usize) -> Result<PolySeries> {
    let x = mono(1, 1, 0);
    let factors: Vec<PolySeries> = (1..)
        .map(|m: usize| 2 * m - 1)
        .take_while(|&a| a < order)
        .map(|a| Ok(PolySeries::one(order).add(&lift(&geometric_derivative(a, order)?, &x))))
        .collect::<Result<_>>()?;
    odd_index_product(|m| factors[m - 1].clone(), order)
}

/// Factor `m` of the product form of `P_1`:
/// `1 + 2x q^{2a}/(1 - q^{2a})^2 + xy q^a (1 + q^{2a})/(1 - q^{2a})^2`, `a = 2m - 1`.
pub fn p1_factor(m: usize, order: usize) -> Result<PolySeries> {
    let a = 2 * m - 1;
    let den_inv = one_minus(2 * a, order).square().inverse()?;
    let even = IntSeries::monomial(Int::from(2), 2 * a, order).mul(&den_inv);
    let odd_num = IntSeries::from_terms([(a, Int::ONE), (3 * a, Int::ONE)], order);
    let odd = odd_num.mul(&den_inv);
    Ok(PolySeries::one(order)
        .add(&lift(&even, &mono(1, 1, 0)))
        .add(&lift(&odd, &mono(1, 1, 1))))
}

/// Factor `m` of the product form of `P_2`:
/// `1 + 2x q^a/(1 - q^a)^2 + x^2 y^2 (q^a/(1 - q^a)^2)^2`, `a = 2m - 1`.
pub fn p2_factor(m: usize, order: usize) -> Result<PolySeries> {
    let g = geometric_derivative(2 * m - 1, order)?;
    Ok(PolySeries::one(order)
        .add(&lift(&g, &mono(2, 1, 0)))
        .add(&lift(&g.square(), &mono(1, 2, 2))))
}

fn product_of(factor: fn(usize, usize) -> Result<PolySeries>, order: usize) -> Result<PolySeries> {
    let factors: Vec<PolySeries> = (1..)
        .take_while(|&m: &usize| 2 * m - 1 < order)
        .map(|m| factor(m, order))
        .collect::<Result<_>>()?;
    odd_index_product(|m| factors[m - 1].clone(), order)
}

pub fn p1_product(order: usize) -> Result<PolySeries> {
    product_of(p1_factor, order)
}

pub fn p2_product(order: usize) -> Result<PolySeries> {
    product_of(p2_factor, order)
}

/// `(1 + sum D_{4n}(t) q^{4n^2}, sum D_{4n-2}(t) q^{4n^2-4n})`, the two
/// components of `G(t, q)` with `q -> q^2` applied, modulo `q^order`.
pub fn doubled_components<C: Ring>(
    arg: &C,
    order: usize,
) -> (TruncatedSeries<C>, TruncatedSeries<C>) {
    let half = order.div_ceil(2);
    (
        g_even_component_at(arg, half).subst_qpow(2).truncate(order),
        g_odd_component_at(arg, half).subst_qpow(2).truncate(order),
    )
}

/// Projects every coefficient to the base ring, reporting the first power
/// that keeps a `u` residue.
pub fn project_series(
    s: &TruncatedSeries<QuadExt>,
) -> std::result::Result<PolySeries, (usize, crate::error::Error)> {
    let mut out = Vec::with_capacity(s.order());
    for (e, c) in s.coeffs().iter().enumerate() {
        out.push(c.project_base().map_err(|err| (e, err))?);
    }
    Ok(TruncatedSeries::from_coeffs(out))
}
