use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{enumerate_edge_directions, BirkhoffError, CycleMatrix};
use crate::slicing_basis::SlicingVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn of_entry(entry: i8) -> Option<Sign> {
        match entry {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn of(value: &BigInt) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Positive)
        } else if value.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn apply(self, value: &BigInt) -> BigInt {
        match self {
            Sign::Positive => value.clone(),
            Sign::Negative => -value,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// One signed entry of a Birkhoff cycle. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleElement {
    pub row: usize,
    pub col: usize,
    pub sign: Sign,
    pub value: BigInt,
}

impl CycleElement {
    pub fn signed_value(&self) -> BigInt {
        self.sign.apply(&self.value)
    }
}

/// The entries of a slicing matrix read along a cycle matrix, each signed
/// by the corresponding `±1`.
///
/// Elements are stored by value, so the same cycle can be re-read against
/// another slicing matrix with [`BirkhoffCycle::reevaluate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BirkhoffCycle {
    n: usize,
    elements: Vec<CycleElement>,
}

/// Reads `v` along `m`, starting at the bottom-rightmost position and
/// following the cycle (row first, then column).
pub fn birkhoff_cycle(v: &SlicingVector, m: &CycleMatrix) -> Result<BirkhoffCycle, BirkhoffError> {
    if v.n() != m.n() {
        return Err(BirkhoffError::OrderMismatch { left: v.n(), right: m.n() });
    }
    let n = m.n();
    let (r, s) = (1..=n)
        .rev()
        .flat_map(|i| (1..=n).rev().map(move |j| (i, j)))
        .find(|&(i, j)| m.get(i, j) != 0)
        .expect("cycle matrices are nonzero");
    let elements = m
        .traverse_from(r, s)
        .into_iter()
        .map(|(row, col)| CycleElement {
            row,
            col,
            sign: Sign::of_entry(m.get(row, col)).expect("support entry is ±1"),
            value: v.entry(row, col).clone(),
        })
        .collect();
    Ok(BirkhoffCycle { n, elements })
}

impl BirkhoffCycle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[CycleElement] {
        &self.elements
    }

    /// Same positions and signs, values read from `v`.
    pub fn reevaluate(&self, v: &SlicingVector) -> Result<BirkhoffCycle, BirkhoffError> {
        if v.n() != self.n {
            return Err(BirkhoffError::OrderMismatch { left: v.n(), right: self.n });
        }
        let elements = self
            .elements
            .iter()
            .map(|e| CycleElement { value: v.entry(e.row, e.col).clone(), ..e.clone() })
            .collect();
        Ok(BirkhoffCycle { n: self.n, elements })
    }

    pub fn negate(&self) -> BirkhoffCycle {
        let elements = self.elements.iter().map(|e| CycleElement { sign: e.sign.flip(), ..e.clone() }).collect();
        BirkhoffCycle { n: self.n, elements }
    }

    /// The bottom-rightmost element: largest row, then largest column.
    pub fn maximal_element(&self) -> &CycleElement {
        self.elements.iter().max_by_key(|e| (e.row, e.col)).expect("cycles are nonempty")
    }

    pub fn cycle_sign(&self) -> Sign {
        self.maximal_element().sign
    }

    /// Sum of the signed elements, i.e. `V · M`.
    pub fn cycle_sum(&self) -> BigInt {
        self.elements.iter().map(CycleElement::signed_value).sum()
    }

    /// Total value (sign dropped) of the negative elements in rows strictly
    /// above the maximal element's row.
    pub fn negative_sum_above_maximal(&self) -> BigInt {
        let r = self.maximal_element().row;
        self.elements.iter().filter(|e| e.row < r && e.sign == Sign::Negative).map(|e| e.value.clone()).sum()
    }
}

/// `Σ_{k=0}^{r-3} (n - r + k + 2) · n^k`: the largest value the negative
/// elements above row `r` can reach. Zero when `r ≤ 2`.
pub fn negative_sum_ceiling(n: usize, r: usize) -> BigInt {
    let base = BigInt::from(n);
    (0..r.saturating_sub(2))
        .map(|k| BigInt::from(n + k + 2 - r) * num_traits::pow(base.clone(), k))
        .sum()
}

/// Whether a positive cycle's negative elements above its maximal row stay
/// under [`negative_sum_ceiling`].
pub fn check_negative_sum_bound(c: &BirkhoffCycle) -> Result<bool, BirkhoffError> {
    if c.cycle_sign() != Sign::Positive {
        return Err(BirkhoffError::NegativeCycle);
    }
    let r = c.maximal_element().row;
    Ok(c.negative_sum_above_maximal() <= negative_sum_ceiling(c.n(), r))
}

/// Outcome of the exhaustive sign-coherence check over all cycles of `M_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCoherenceReport {
    pub n: usize,
    pub cycles: usize,
    pub positive_cycles: usize,
    pub violations: usize,
    /// Smallest sum over positive cycles.
    pub min_positive_sum: Option<BigInt>,
    /// Largest sum over negative cycles.
    pub max_negative_sum: Option<BigInt>,
    pub min_sum: Option<BigInt>,
    pub max_sum: Option<BigInt>,
    pub first_violation: Option<CycleMatrix>,
}

impl SignCoherenceReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Checks `sign(Σ c) = sign(c)` for every Birkhoff cycle of `V_n`.
pub fn verify_lemma12(n: usize) -> Result<SignCoherenceReport, BirkhoffError> {
    let v = SlicingVector::new(n).map_err(|_| BirkhoffError::ZeroOrder)?;
    let cycles = enumerate_edge_directions(n)?;
    let mut report = SignCoherenceReport {
        n,
        cycles: cycles.len(),
        positive_cycles: 0,
        violations: 0,
        min_positive_sum: None,
        max_negative_sum: None,
        min_sum: None,
        max_sum: None,
        first_violation: None,
    };
    for m in &cycles {
        let c = birkhoff_cycle(&v, m)?;
        let sum = c.cycle_sum();
        let sign = c.cycle_sign();
        if Sign::of(&sum) != Some(sign) {
            report.violations += 1;
            report.first_violation.get_or_insert_with(|| m.clone());
        }
        match sign {
            Sign::Positive => {
                report.positive_cycles += 1;
                update(&mut report.min_positive_sum, &sum, |new, old| new < old);
            }
            Sign::Negative => update(&mut report.max_negative_sum, &sum, |new, old| new > old),
        }
        update(&mut report.min_sum, &sum, |new, old| new < old);
        update(&mut report.max_sum, &sum, |new, old| new > old);
    }
    Ok(report)
}

/// Outcome of checking the negative-element ceiling on every positive cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeBoundReport {
    pub n: usize,
    pub positive_cycles: usize,
    pub violations: usize,
    /// Smallest `ceiling - S` seen; zero means the ceiling is attained.
    pub min_slack: Option<BigInt>,
}

impl NegativeBoundReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

pub fn verify_negative_sum_bound(n: usize) -> Result<NegativeBoundReport, BirkhoffError> {
    let v = SlicingVector::new(n).map_err(|_| BirkhoffError::ZeroOrder)?;
    let mut report = NegativeBoundReport { n, positive_cycles: 0, violations: 0, min_slack: None };
    for m in enumerate_edge_directions(n)? {
        let c = birkhoff_cycle(&v, &m)?;
        if c.cycle_sign() != Sign::Positive {
            continue;
        }
        report.positive_cycles += 1;
        if !check_negative_sum_bound(&c)? {
            report.violations += 1;
        }
        let slack = negative_sum_ceiling(n, c.maximal_element().row) - c.negative_sum_above_maximal();
        update(&mut report.min_slack, &slack, |new, old| new < old);
    }
    Ok(report)
}

fn update(slot: &mut Option<BigInt>, value: &BigInt, better: impl Fn(&BigInt, &BigInt) -> bool) {
    match slot {
        Some(old) if !better(value, old) => {}
        _ => *slot = Some(value.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn figure_cycle() -> CycleMatrix {
        #[rustfmt::skip]
        let m = CycleMatrix::from_entries(4, vec![
            0, 0, 0, 0,
            0, 1, 0, -1,
            0, 0, 0, 0,
            0, -1, 0, 1,
        ]).unwrap();
        m
    }

    fn positions(c: &BirkhoffCycle) -> Vec<(usize, usize, Sign, i64)> {
        c.elements().iter().map(|e| (e.row, e.col, e.sign, i64::try_from(&e.value).unwrap())).collect()
    }

    #[test]
    fn n4_example_cycle() {
        let v4 = SlicingVector::new(4).unwrap();
        let c = birkhoff_cycle(&v4, &figure_cycle()).unwrap();
        use Sign::*;
        assert_eq!(positions(&c), vec![(4, 4, Positive, 48), (4, 2, Negative, 16), (2, 2, Positive, 1), (2, 4, Negative, 3)]);
        let max = c.maximal_element();
        assert_eq!((max.row, max.col, max.value.clone()), (4, 4, BigInt::from(48)));
        assert_eq!(c.cycle_sign(), Positive);
        assert_eq!(c.cycle_sum(), BigInt::from(30));
        assert_eq!(c.negative_sum_above_maximal(), BigInt::from(3));
        assert_eq!(negative_sum_ceiling(4, 4), BigInt::from(14));
        assert!(check_negative_sum_bound(&c).unwrap());
    }

    #[test]
    fn n2_cycle() {
        let v2 = SlicingVector::new(2).unwrap();
        let m = CycleMatrix::from_entries(2, vec![1, -1, -1, 1]).unwrap();
        let c = birkhoff_cycle(&v2, &m).unwrap();
        let mut got = positions(&c);
        got.sort();
        use Sign::*;
        assert_eq!(got, vec![(1, 1, Positive, 0), (1, 2, Negative, 0), (2, 1, Negative, 0), (2, 2, Positive, 1)]);
        assert_eq!((c.maximal_element().row, c.maximal_element().col), (2, 2));
        assert_eq!(c.cycle_sum(), BigInt::from(1));
        // Entirely within rows {1, 2}: nothing above the maximal row counts.
        assert_eq!(c.negative_sum_above_maximal(), BigInt::from(0));
        assert_eq!(negative_sum_ceiling(2, 2), BigInt::from(0));
        assert!(check_negative_sum_bound(&c).unwrap());
    }

    #[test]
    fn negation_flips_signs_and_sum() {
        let v4 = SlicingVector::new(4).unwrap();
        let c = birkhoff_cycle(&v4, &figure_cycle()).unwrap();
        let neg = birkhoff_cycle(&v4, &-figure_cycle()).unwrap();
        assert_eq!(neg, c.negate());
        assert_eq!(neg.maximal_element().row, c.maximal_element().row);
        assert_eq!(neg.maximal_element().col, c.maximal_element().col);
        assert_eq!(neg.cycle_sign(), Sign::Negative);
        assert_eq!(neg.cycle_sum(), -c.cycle_sum());
        assert_eq!(check_negative_sum_bound(&neg), Err(BirkhoffError::NegativeCycle));
    }

    #[test]
    fn order_mismatch() {
        let v3 = SlicingVector::new(3).unwrap();
        assert!(matches!(birkhoff_cycle(&v3, &figure_cycle()), Err(BirkhoffError::OrderMismatch { .. })));
    }

    #[test]
    fn reevaluate_against_other_vector() {
        let v4 = SlicingVector::new(4).unwrap();
        let c = birkhoff_cycle(&v4, &figure_cycle()).unwrap();
        assert_eq!(c.reevaluate(&v4).unwrap(), c);
        assert!(c.reevaluate(&SlicingVector::new(3).unwrap()).is_err());
    }

    // Independent double loop over the matrix entries.
    #[test]
    fn cycle_sum_is_inner_product() {
        for n in 2..=4 {
            let v = SlicingVector::new(n).unwrap();
            for m in enumerate_edge_directions(n).unwrap() {
                let mut dot = BigInt::from(0);
                for i in 1..=n {
                    for j in 1..=n {
                        dot += BigInt::from(m.get(i, j)) * BigInt::from((j as i64 - 1) * (n as i64).pow(i.saturating_sub(2) as u32) * i64::from(i >= 2));
                    }
                }
                let c = birkhoff_cycle(&v, &m).unwrap();
                assert_eq!(c.cycle_sum(), dot);
                assert!(!c.cycle_sum().is_zero());
            }
        }
    }

    #[test]
    fn lemma12_exhaustive_small() {
        for (n, count) in [(2, 2), (3, 30), (4, 408)] {
            let report = verify_lemma12(n).unwrap();
            assert!(report.passed());
            assert_eq!(report.cycles, count);
            assert_eq!(report.positive_cycles * 2, count);
            assert!(report.min_positive_sum.unwrap() > BigInt::from(0));
            assert!(report.max_negative_sum.unwrap() < BigInt::from(0));
        }
    }

    #[test]
    fn bound_exhaustive_n3() {
        let report = verify_negative_sum_bound(3).unwrap();
        assert_eq!(report.positive_cycles, 15);
        assert!(report.passed());
    }
}
