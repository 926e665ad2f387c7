//! Exact rational simplex for the fractional packing LP
//!     max 1·λ   s.t.   Σ_{S ∋ e} λ_S ≤ 1 for every ground element e,  λ ≥ 0.
//!
//! Bland's rule throughout, so the method terminates; all arithmetic is
//! over arbitrary-precision rationals. The returned dual vector is a
//! fractional cover of the same value, which certifies optimality by weak
//! duality without trusting the pivoting itself.

use crate::graph::EdgeSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct LpResult {
    pub value: BigRational,
    /// One weight per member, in input order.
    pub primal: Vec<BigRational>,
    /// One weight per ground element 0..m.
    pub dual: Vec<BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Solve the unit-capacity packing LP over the given members.
pub fn max_unit_packing(members: &[EdgeSet], m: usize) -> LpResult {
    let n = members.len();
    if n == 0 {
        return LpResult {
            value: BigRational::zero(),
            primal: Vec::new(),
            dual: vec![BigRational::zero(); m],
        };
    }
    let cols = n + m;
    // rows[i] = constraint row, rhs at index `cols`
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for e in 0..m {
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, s) in members.iter().enumerate() {
            if s.contains(e) {
                row[j] = BigRational::one();
            }
        }
        row[n + e] = BigRational::one();
        row[cols] = BigRational::one();
        rows.push(row);
    }
    let mut obj = vec![BigRational::zero(); cols + 1];
    for j in 0..n {
        obj[j] = BigRational::one();
    }
    let mut basis: Vec<usize> = (n..cols).collect();

    loop {
        // entering column: smallest index with positive reduced cost
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            break;
        };
        // leaving row: minimum ratio, ties by smallest basis variable
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<BigRational> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rows[i][cols] / &rows[i][enter];
                let better = match &best_ratio {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            unreachable!("packing LP is bounded by the capacity constraints");
        };
        pivot(&mut rows, &mut obj, li, enter, cols);
        basis[li] = enter;
    }

    let mut primal = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            primal[b] = rows[i][cols].clone();
        }
    }
    let dual: Vec<BigRational> = (0..m).map(|e| -obj[n + e].clone()).collect();
    let value = -obj[cols].clone();
    LpResult { value, primal, dual }
}

fn pivot(rows: &mut [Vec<BigRational>], obj: &mut [BigRational], li: usize, enter: usize, cols: usize) {
    let p = rows[li][enter].clone();
    for x in rows[li].iter_mut() {
        *x = &*x / &p;
    }
    for i in 0..rows.len() {
        if i == li {
            continue;
        }
        let f = rows[i][enter].clone();
        if f.is_zero() {
            continue;
        }
        for j in 0..=cols {
            let delta = &f * &rows[li][j];
            rows[i][j] = &rows[i][j] - &delta;
        }
    }
    let f = obj[enter].clone();
    if !f.is_zero() {
        for j in 0..=cols {
            let delta = &f * &rows[li][j];
            obj[j] = &obj[j] - &delta;
        }
    }
}

/// Weak-duality certificate: primal feasible, dual feasible, equal value.
pub fn verify_certificates(members: &[EdgeSet], m: usize, sol: &LpResult) -> bool {
    if sol.primal.len() != members.len() || sol.dual.len() != m {
        return false;
    }
    if sol.primal.iter().any(|x| x.is_negative()) || sol.dual.iter().any(|y| y.is_negative()) {
        return false;
    }
    for e in 0..m {
        let load: BigRational = members
            .iter()
            .zip(&sol.primal)
            .filter(|(s, _)| s.contains(e))
            .map(|(_, x)| x.clone())
            .sum();
        if load > BigRational::one() {
            return false;
        }
    }
    for s in members {
        let covered: BigRational = s.iter().map(|e| sol.dual[e].clone()).sum();
        if covered < BigRational::one() {
            return false;
        }
    }
    let primal_val: BigRational = sol.primal.iter().cloned().sum();
    let dual_val: BigRational = sol.dual.iter().cloned().sum();
    primal_val == sol.value && dual_val == sol.value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_fractional_packing_is_seven_thirds() {
        let lines: Vec<EdgeSet> = [
            [0usize, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ]
        .iter()
        .map(|l| EdgeSet::from_ids(l.iter().copied()))
        .collect();
        let sol = max_unit_packing(&lines, 7);
        assert_eq!(sol.value, rational(7, 3));
        assert!(verify_certificates(&lines, 7, &sol));
    }

    #[test]
    fn disjoint_members_pack_integrally() {
        let members = vec![EdgeSet::from_ids([0, 1]), EdgeSet::from_ids([2])];
        let sol = max_unit_packing(&members, 3);
        assert_eq!(sol.value, rational(2, 1));
        assert!(verify_certificates(&members, 3, &sol));
    }

    #[test]
    fn empty_instance() {
        let sol = max_unit_packing(&[], 4);
        assert!(sol.value.is_zero());
        assert!(verify_certificates(&[], 4, &sol));
    }
}
