//! Eta-quotient constructors, theta series and the odd-indexed product.

use std::fmt;

use super::{IntSeries, TruncatedSeries};
use crate::arith::{Int, Ring};
use crate::error::{Error, Result};

/// `f_r = prod_{k >= 1} (1 - q^{r k})` modulo `q^order`, by direct finite
/// product.
pub fn eta_factor(r: usize, order: usize) -> IntSeries {
    assert!(r >= 1, "eta_factor requires r >= 1");
    let mut c = vec![Int::ZERO; order];
    if order > 0 {
        c[0] = Int::ONE;
    }
    let mut step = r;
    while step < order {
        // multiply in place by (1 - q^step)
        for e in (step..order).rev() {
            if !c[e - step].is_zero() {
                let prev = c[e - step].clone();
                c[e] -= &prev;
            }
        }
        step += r;
    }
    TruncatedSeries::from_coeffs(c)
}

/// A quotient `prod f_{a}^{r_a} / prod f_{b}^{s_b}` of eta factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    numerator: Vec<(usize, u32)>,
    denominator: Vec<(usize, u32)>,
}

impl EtaQuotient {
    /// Each entry is `(subscript, exponent)`; subscripts and exponents must be
    /// positive and subscripts distinct within each list.
    pub fn new(numerator: &[(usize, u32)], denominator: &[(usize, u32)]) -> Result<Self> {
        for list in [numerator, denominator] {
            for (i, &(r, e)) in list.iter().enumerate() {
                if r == 0 || e == 0 {
                    return Err(Error::Parse(format!(
                        "eta factor f_{r}^{e} needs positive subscript and exponent"
                    )));
                }
                if list[..i].iter().any(|&(s, _)| s == r) {
                    return Err(Error::Parse(format!("repeated eta subscript {r}")));
                }
            }
        }
        Ok(EtaQuotient {
            numerator: numerator.to_vec(),
            denominator: denominator.to_vec(),
        })
    }

    pub fn numerator(&self) -> &[(usize, u32)] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(usize, u32)] {
        &self.denominator
    }

    /// `f_4 f_6^2 / (f_1 f_3 f_12)`, the PDO generating function.
    pub fn pdo() -> Self {
        Self::new(&[(4, 1), (6, 2)], &[(1, 1), (3, 1), (12, 1)]).unwrap()
    }

    /// `f_2 / f_1^2`, the overpartition generating function.
    pub fn overpartitions() -> Self {
        Self::new(&[(2, 1)], &[(1, 2)]).unwrap()
    }

    /// `f_2^5 / (f_1^2 f_4^2)`, the product form of `phi(q)`.
    pub fn phi() -> Self {
        Self::new(&[(2, 5)], &[(1, 2), (4, 2)]).unwrap()
    }

    /// `f_2^2 / f_1`, the product form of `psi(q)`.
    pub fn psi() -> Self {
        Self::new(&[(2, 2)], &[(1, 1)]).unwrap()
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |list: &[(usize, u32)]| -> String {
            if list.is_empty() {
                return "1".into();
            }
            list.iter()
                .map(|&(r, e)| {
                    if e == 1 {
                        format!("f{r}")
                    } else {
                        format!("f{r}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "{}", render(&self.numerator))?;
        match self.denominator.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", render(&self.denominator)),
            _ => write!(f, "/({})", render(&self.denominator)),
        }
    }
}

/// Expands an eta quotient modulo `q^order`.
pub fn eta_quotient(spec: &EtaQuotient, order: usize) -> Result<IntSeries> {
    let mut num = IntSeries::one(order);
    for &(r, e) in &spec.numerator {
        num = num.mul(&eta_factor(r, order).pow(e));
    }
    let mut den = IntSeries::one(order);
    for &(r, e) in &spec.denominator {
        den = den.mul(&eta_factor(r, order).pow(e));
    }
    Ok(num.mul(&den.inverse()?))
}

/// `phi(q) = 1 + 2 sum_{n >= 1} q^{n^2}` modulo `q^order`.
pub fn theta_phi(order: usize) -> IntSeries {
    let terms = std::iter::once((0, Int::ONE)).chain(
        (1..)
            .map(|n: usize| n * n)
            .take_while(|&e| e < order)
            .map(|e| (e, Int::from(2))),
    );
    TruncatedSeries::from_terms(terms, order)
}

/// `psi(q) = sum_{n >= 1} q^{n(n-1)/2}` modulo `q^order`.
pub fn theta_psi(order: usize) -> IntSeries {
    let terms = (1..)
        .map(|n: usize| n * (n - 1) / 2)
        .take_while(|&e| e < order)
        .map(|e| (e, Int::ONE));
    TruncatedSeries::from_terms(terms, order)
}

/// `prod_{m >= 1} factor_at(m)` modulo `q^order`.
///
/// Factor `m` must have constant term 1 and no other terms below `q^{2m-1}`,
/// so only the factors with `2m - 1 < order` contribute.
pub fn odd_index_product<C: Ring>(
    factor_at: impl Fn(usize) -> TruncatedSeries<C>,
    order: usize,
) -> Result<TruncatedSeries<C>> {
    let mut acc = TruncatedSeries::one(order);
    let mut m = 1;
    while 2 * m - 1 < order {
        let factor = factor_at(m).truncate(order);
        if factor.coeff(0).is_none_or(|c| !c.is_one()) {
            return Err(Error::FactorNotUnit { index: m });
        }
        acc = acc.mul(&factor);
        m += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler's pentagonal theorem, used as an independent oracle for `f_1`.
    fn pentagonal(order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order];
        for k in -20i64..=20 {
            let e = (k * (3 * k - 1) / 2) as usize;
            if e < order {
                c[e] += if k % 2 == 0 { 1 } else { -1 };
            }
        }
        c
    }

    #[test]
    fn euler_product_matches_pentagonal_theorem() {
        assert_eq!(
            eta_factor(1, 8),
            IntSeries::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1])
        );
        assert_eq!(eta_factor(1, 200), IntSeries::from_i64s(&pentagonal(200)));
    }

    #[test]
    fn scaled_factors() {
        assert_eq!(eta_factor(5, 4), IntSeries::one(4));
        assert_eq!(
            eta_factor(2, 7),
            IntSeries::from_i64s(&[1, 0, -1, 0, -1, 0, 0])
        );
        assert_eq!(eta_factor(3, 60), eta_factor(1, 20).subst_qpow(3));
    }

    #[test]
    fn pdo_table_values() {
        let s = eta_quotient(&EtaQuotient::pdo(), 11).unwrap();
        assert_eq!(
            s,
            IntSeries::from_i64s(&[1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42])
        );
    }

    #[test]
    fn overpartition_leading_terms() {
        let s = eta_quotient(&EtaQuotient::overpartitions(), 6).unwrap();
        assert_eq!(s, IntSeries::from_i64s(&[1, 2, 4, 8, 14, 24]));
    }

    #[test]
    fn theta_sum_forms() {
        assert_eq!(
            theta_phi(10),
            IntSeries::from_i64s(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2])
        );
        assert_eq!(theta_psi(7), IntSeries::from_i64s(&[1, 1, 0, 1, 0, 0, 1]));
        assert_eq!(theta_phi(1), IntSeries::from_i64s(&[1]));
        assert_eq!(
            theta_phi(5).subst_qpow(2).truncate(9),
            IntSeries::from_i64s(&[1, 0, 2, 0, 0, 0, 0, 0, 2])
        );
    }

    #[test]
    fn theta_product_forms() {
        for order in [1, 2, 17, 200] {
            assert_eq!(
                eta_quotient(&EtaQuotient::phi(), order).unwrap(),
                theta_phi(order)
            );
            assert_eq!(
                eta_quotient(&EtaQuotient::psi(), order).unwrap(),
                theta_psi(order)
            );
        }
    }

    #[test]
    fn spec_validation() {
        assert!(EtaQuotient::new(&[(2, 1), (2, 3)], &[]).is_err());
        assert!(EtaQuotient::new(&[(0, 1)], &[]).is_err());
        assert_eq!(EtaQuotient::pdo().to_string(), "f4*f6^2/(f1*f3*f12)");
        let c0 = eta_quotient(&EtaQuotient::new(&[(2, 1)], &[(1, 2)]).unwrap(), 1).unwrap();
        assert_eq!(c0, IntSeries::one(1));
    }

    #[test]
    fn odd_index_product_trivial_and_error() {
        let p = odd_index_product(|_| IntSeries::one(10), 10).unwrap();
        assert_eq!(p, IntSeries::one(10));
        let bad = odd_index_product(
            |m| IntSeries::monomial(Int::from(2), 0, 10).shift(m - 1),
            10,
        );
        assert!(matches!(bad, Err(Error::FactorNotUnit { .. })));
    }
}
