//! Chebyshev machinery in integer form.
//!
//! Everything is expressed through the Dickson polynomials
//! `D_n(t) = 2 T_n(t/2)`, which satisfy `D_0 = 2`, `D_1 = t` and
//! `D_n = t D_{n-1} - D_{n-2}` and have integer coefficients. With them
//!
//! ```text
//! G(t, q) = 1 + sum_{n >= 1} D_{2n}(t) q^{n^2}
//! F(t, q) = sum_{n >= 0} D_{2n+1}(t) q^{n^2 + n}
//! ```
//!
//! The argument `t` may live in any [`Ring`]: a variable of [`MultiPoly`], an
//! integer, or the extension generator `u` of [`QuadExt`](crate::arith::QuadExt).

use crate::arith::{MultiPoly, Ring, Var};
use crate::series::TruncatedSeries;

/// `D_n` in one designated variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonPoly {
    pub n: usize,
    pub var: Var,
    pub poly: MultiPoly,
}

/// Lazily extended table of `D_0(t), D_1(t), ...` for a fixed argument.
///
/// Each caller owns its table; nothing is shared between threads.
#[derive(Clone, Debug)]
pub struct DicksonTable<C> {
    arg: C,
    values: Vec<C>,
}

impl<C: Ring> DicksonTable<C> {
    pub fn new(arg: C) -> Self {
        let values = vec![C::from_i64(2), arg.clone()];
        DicksonTable { arg, values }
    }

    pub fn get(&mut self, n: usize) -> &C {
        while self.values.len() <= n {
            let k = self.values.len();
            let next = self
                .arg
                .mul_ref(&self.values[k - 1])
                .sub_ref(&self.values[k - 2]);
            self.values.push(next);
        }
        &self.values[n]
    }
}

pub fn dickson(n: usize, var: Var) -> DicksonPoly {
    let mut table = DicksonTable::new(MultiPoly::var(var));
    DicksonPoly {
        n,
        var,
        poly: table.get(n).clone(),
    }
}

/// `sum D_{index}(t) q^{exponent}` over the given `(index, exponent)` pairs.
///
/// Pairs must have strictly increasing exponents; the sum stops at the first
/// exponent beyond `order`.
pub fn dickson_sum<C: Ring>(
    arg: &C,
    terms: impl IntoIterator<Item = (usize, usize)>,
    order: usize,
) -> TruncatedSeries<C> {
    let mut table = DicksonTable::new(arg.clone());
    let mut coeffs = vec![C::zero(); order];
    for (idx, e) in terms {
        if e >= order {
            break;
        }
        coeffs[e].add_assign_ref(table.get(idx));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

fn with_one<C: Ring>(mut s: TruncatedSeries<C>) -> TruncatedSeries<C> {
    if let Some(c) = s.coeff_mut(0) {
        c.add_assign_ref(&C::one());
    }
    s
}

/// `G(t, q)`.
pub fn g_series_at<C: Ring>(arg: &C, order: usize) -> TruncatedSeries<C> {
    with_one(dickson_sum(arg, (1..).map(|n| (2 * n, n * n)), order))
}

pub fn g_series(var: Var, order: usize) -> TruncatedSeries<MultiPoly> {
    g_series_at(&MultiPoly::var(var), order)
}

/// Even part of `G` in the dissected variable: `1 + sum D_{4n}(t) q^{2n^2}`.
pub fn g_even_component_at<C: Ring>(arg: &C, order: usize) -> TruncatedSeries<C> {
    with_one(dickson_sum(arg, (1..).map(|n| (4 * n, 2 * n * n)), order))
}

/// Odd part of `G` in the dissected variable: `sum D_{4n-2}(t) q^{2n^2-2n}`.
pub fn g_odd_component_at<C: Ring>(arg: &C, order: usize) -> TruncatedSeries<C> {
    dickson_sum(arg, (1..).map(|n| (4 * n - 2, 2 * n * n - 2 * n)), order)
}

pub fn g_even_component(var: Var, order: usize) -> TruncatedSeries<MultiPoly> {
    g_even_component_at(&MultiPoly::var(var), order)
}

pub fn g_odd_component(var: Var, order: usize) -> TruncatedSeries<MultiPoly> {
    g_odd_component_at(&MultiPoly::var(var), order)
}

/// `F(t, q)`.
pub fn f_series_at<C: Ring>(arg: &C, order: usize) -> TruncatedSeries<C> {
    dickson_sum(arg, (0..).map(|n| (2 * n + 1, n * n + n)), order)
}

pub fn f_series(var: Var, order: usize) -> TruncatedSeries<MultiPoly> {
    f_series_at(&MultiPoly::var(var), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Int, Monomial};
    use crate::series::theta_phi;

    fn xpoly(coeffs: &[(u32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(coeffs.iter().map(|&(d, c)| (Monomial::new(d, 0), c)))
    }

    /// `2 T_n(x/2)` from the closed form
    /// `T_n(x) = (n/2) sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^{n-2k}`.
    fn dickson_closed_form(n: usize) -> MultiPoly {
        if n == 0 {
            return MultiPoly::constant(2);
        }
        let fact = |k: usize| (1..=k).fold(1i128, |a, b| a * b as i128);
        let mut terms = Vec::new();
        for k in 0..=n / 2 {
            // D_n(x) = sum_k (-1)^k n/(n-k) C(n-k, k) x^{n-2k}
            let binom = fact(n - k) / (fact(k) * fact(n - 2 * k));
            let c = binom * n as i128 / (n - k) as i128;
            let c = if k % 2 == 0 { c } else { -c };
            terms.push((Monomial::new((n - 2 * k) as u32, 0), c as i64));
        }
        MultiPoly::from_terms(terms)
    }

    #[test]
    fn base_cases_and_first_steps() {
        assert_eq!(dickson(0, Var::X).poly, MultiPoly::constant(2));
        assert_eq!(dickson(1, Var::X).poly, MultiPoly::x());
        assert_eq!(dickson(2, Var::X).poly, xpoly(&[(2, 1), (0, -2)]));
        assert_eq!(dickson(4, Var::X).poly, xpoly(&[(4, 1), (2, -4), (0, 2)]));
        assert_eq!(dickson(1, Var::Y).poly, MultiPoly::y());
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 0..=30 {
            assert_eq!(dickson(n, Var::X).poly, dickson_closed_form(n), "n = {n}");
        }
    }

    #[test]
    fn degree_leading_coefficient_and_value_at_two() {
        for n in 1..=50 {
            let d = dickson(n, Var::X).poly;
            assert_eq!(d.total_degree(), Some(n as u32));
            assert_eq!(d.coeff(Monomial::new(n as u32, 0)), Int::ONE);
            assert_eq!(d.eval(Var::X, &Int::from(2)), MultiPoly::constant(2));
        }
    }

    #[test]
    fn sum_product_worked_instance() {
        let d = |n| dickson(n, Var::X).poly;
        assert_eq!(&d(3) * &d(2), xpoly(&[(5, 1), (3, -5), (1, 6)]));
        assert_eq!(&d(3) * &d(2), &d(5) + &d(1));
    }

    #[test]
    fn g_and_f_leading_coefficients() {
        let g = g_series(Var::X, 10);
        assert_eq!(g.coeff(0), Some(&MultiPoly::constant(1)));
        assert_eq!(g.coeff(1), Some(&dickson(2, Var::X).poly));
        assert_eq!(g.coeff(4), Some(&dickson(4, Var::X).poly));
        assert!(g.coeff(2).unwrap().is_zero());

        let f = f_series(Var::X, 10);
        assert_eq!(f.coeff(0), Some(&MultiPoly::x()));
        assert!(f.coeff(1).unwrap().is_zero());
        assert_eq!(f.coeff(2), Some(&xpoly(&[(3, 1), (1, -3)])));
        assert_eq!(f.coeff(6), Some(&dickson(5, Var::X).poly));
    }

    #[test]
    fn g_at_two_is_phi() {
        let two = Int::from(2);
        for order in [1, 10, 120] {
            let g = g_series(Var::X, order).eval(Var::X, &two);
            assert_eq!(g, theta_phi(order).to_poly());
            assert_eq!(g_series_at(&two, order), theta_phi(order));
        }
    }

    #[test]
    fn components_are_the_dissections() {
        let g = g_series(Var::X, 50);
        assert_eq!(g.dissect(2, 0), g_even_component(Var::X, 25));
        assert_eq!(g.dissect(2, 1), g_odd_component(Var::X, 25));
        assert_eq!(
            g_odd_component(Var::X, 5).coeff(0),
            Some(&dickson(2, Var::X).poly)
        );
        let even_at_two = g_even_component_at(&Int::from(2), 20);
        assert_eq!(
            even_at_two,
            crate::series::IntSeries::from_i64s(&[
                1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0
            ])
        );
    }
}
