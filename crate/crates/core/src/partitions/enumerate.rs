//! Exhaustive enumerators. These are the ground truth that the series side
//! of every identity is compared against, so nothing here uses series
//! algebra beyond plain coefficient accumulation.

use std::collections::BTreeMap;

use super::{PartRun, PdoPartition};
use crate::arith::{Int, Monomial, MultiPoly};
use crate::series::{IntSeries, PolySeries, TruncatedSeries};

/// An ordinary partition into odd parts, as `(size, multiplicity)` runs in
/// decreasing size order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPartition {
    pub runs: Vec<(u32, u32)>,
}

impl OddPartition {
    pub fn distinct_sizes(&self) -> u32 {
        self.runs.len() as u32
    }

    pub fn odd_runs(&self) -> u32 {
        self.runs.iter().filter(|(_, m)| m % 2 == 1).count() as u32
    }

    /// Number of ways to designate one occurrence of every size.
    pub fn designations(&self) -> u64 {
        self.runs.iter().map(|&(_, m)| m as u64).product()
    }

    pub fn has_size(&self, size: u32) -> bool {
        self.runs.iter().any(|&(s, _)| s == size)
    }
}

/// All partitions of `n` into odd parts, largest sizes first.
pub fn odd_partitions(n: u32) -> Vec<OddPartition> {
    fn rec(remaining: u32, max_size: u32, runs: &mut Vec<(u32, u32)>, out: &mut Vec<OddPartition>) {
        if remaining == 0 {
            out.push(OddPartition { runs: runs.clone() });
            return;
        }
        if max_size == 0 {
            return;
        }
        let mut size = max_size.min(remaining);
        if size.is_multiple_of(2) {
            size -= 1;
        }
        while size >= 1 {
            for mult in (1..=remaining / size).rev() {
                runs.push((size, mult));
                rec(remaining - size * mult, size.saturating_sub(2), runs, out);
                runs.pop();
            }
            if size < 2 {
                break;
            }
            size -= 2;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every PDO partition of `n`, each exactly once.
///
/// Ordered by the underlying odd partition (largest sizes first), then by the
/// designation positions of the runs in the same order.
pub fn enumerate_pdo(n: u32) -> Vec<PdoPartition> {
    let mut out = Vec::new();
    for base in odd_partitions(n) {
        let mut choice = vec![1u32; base.runs.len()];
        'outer: loop {
            let parts: BTreeMap<u32, PartRun> = base
                .runs
                .iter()
                .zip(&choice)
                .map(|(&(size, multiplicity), &designated)| {
                    (
                        size,
                        PartRun {
                            multiplicity,
                            designated,
                        },
                    )
                })
                .collect();
            out.push(PdoPartition::from_map(parts));
            // odometer over designation positions, last run fastest
            let mut i = choice.len();
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                if choice[i] < base.runs[i].1 {
                    choice[i] += 1;
                    for c in &mut choice[i + 1..] {
                        *c = 1;
                    }
                    continue 'outer;
                }
            }
        }
    }
    out
}

/// `P_1(x, y, q) = sum x^{ell_d} y^{ell_d_odd} q^{|lambda|}` by enumeration.
///
/// Designation variants share the statistics of their underlying odd
/// partition, so each odd partition contributes its designation count.
pub fn p1_enumerated(order: usize) -> PolySeries {
    let mut coeffs = vec![MultiPoly::zero(); order];
    for (n, slot) in coeffs.iter_mut().enumerate() {
        let mut terms = Vec::new();
        for base in odd_partitions(n as u32) {
            terms.push((
                Monomial::new(base.distinct_sizes(), base.odd_runs()),
                Int::from(base.designations()),
            ));
        }
        *slot = MultiPoly::from_terms(terms);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `P_2(x, y, q) = sum x^{ell_d(mu) + ell_d(nu)} y^{2 ell_r} q^{|mu| + |nu|}`
/// over ordered pairs, by enumeration.
pub fn p2_enumerated(order: usize) -> PolySeries {
    let by_weight: Vec<Vec<OddPartition>> = (0..order as u32).map(odd_partitions).collect();
    let mut coeffs = vec![MultiPoly::zero(); order];
    for (w, slot) in coeffs.iter_mut().enumerate() {
        let mut terms = Vec::new();
        for k in 0..=w {
            for mu in &by_weight[k] {
                for nu in &by_weight[w - k] {
                    let shared = mu.runs.iter().filter(|(s, _)| nu.has_size(*s)).count() as u32;
                    terms.push((
                        Monomial::new(mu.distinct_sizes() + nu.distinct_sizes(), 2 * shared),
                        Int::from(mu.designations() * nu.designations()),
                    ));
                }
            }
        }
        *slot = MultiPoly::from_terms(terms);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `C_0, C_1, ...` up to the largest `k` with a nonzero coefficient below
/// `q^order`, where `c_{n,k}` sums `s_1 ... s_k` over decompositions
/// `n = s_1 (2 m_1 - 1) + ... + s_k (2 m_k - 1)` with distinct sizes.
pub fn ck_enumerated_all(order: usize) -> Vec<IntSeries> {
    let mut table: Vec<Vec<Int>> = vec![vec![Int::ZERO; order]];
    for n in 0..order {
        for base in odd_partitions(n as u32) {
            let k = base.runs.len();
            while table.len() <= k {
                table.push(vec![Int::ZERO; order]);
            }
            table[k][n] += &Int::from(base.designations());
        }
    }
    table
        .into_iter()
        .map(TruncatedSeries::from_coeffs)
        .collect()
}

pub fn ck_enumerated(k: usize, order: usize) -> IntSeries {
    ck_enumerated_all(order)
        .into_iter()
        .nth(k)
        .unwrap_or_else(|| IntSeries::zero(order))
}

/// `A_k(q) = sum_{0 < m_1 < ... < m_k} prod q^{m_i} / (1 - q^{m_i})^2`,
/// summed over every index set whose minimal exponent is below `order`.
pub fn ak_enumerated(k: usize, order: usize) -> IntSeries {
    assert!(k >= 1, "A_k is defined for k >= 1");

    // q^m / (1 - q^m)^2 = sum_{t >= 1} t q^{t m}
    fn geometric_derivative(m: usize, order: usize) -> IntSeries {
        TruncatedSeries::from_terms(
            (1..)
                .map(|t: usize| (t * m, Int::from(t)))
                .take_while(|(e, _)| *e < order),
            order,
        )
    }

    fn rec(
        next_min: usize,
        left: usize,
        low_exp: usize,
        acc: &IntSeries,
        order: usize,
        total: &mut IntSeries,
    ) {
        if left == 0 {
            *total = total.add(acc);
            return;
        }
        let mut m = next_min;
        // smallest possible exponent with the remaining `left` indices m, m+1, ...
        while low_exp + left * m + left * (left - 1) / 2 < order {
            let next = acc.mul(&geometric_derivative(m, order));
            rec(m + 1, left - 1, low_exp + m, &next, order, total);
            m += 1;
        }
    }

    let mut total = IntSeries::zero(order);
    rec(1, k, 0, &IntSeries::one(order), order, &mut total);
    total
}
