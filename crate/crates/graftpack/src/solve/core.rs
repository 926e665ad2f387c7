//! Hitting-set and disjoint-packing kernels over abstract bitset ground
//! sets; shared by the graft-level solver and the clutter layer.

use crate::graph::EdgeSet;
use std::collections::HashMap;

/// Exact minimum hitting set; lexicographically least witness among the
/// optima. None when some member is empty (uncoverable).
pub fn min_hitting_set(members: &[EdgeSet]) -> Option<(usize, EdgeSet)> {
    if members.iter().any(|m| m.is_empty()) {
        return None;
    }
    if members.is_empty() {
        return Some((0, EdgeSet::EMPTY));
    }
    let mut best = usize::MAX;
    branch(members, EdgeSet::EMPTY, &mut best);
    let support: Vec<usize> = members
        .iter()
        .fold(EdgeSet::EMPTY, |acc, &m| acc.union(m))
        .ids();
    let mut witness = EdgeSet::EMPTY;
    let found = lex_witness(members, &support, 0, best, &mut witness);
    debug_assert!(found);
    Some((best, witness))
}

fn branch(members: &[EdgeSet], chosen: EdgeSet, best: &mut usize) {
    let unhit: Vec<EdgeSet> = members
        .iter()
        .copied()
        .filter(|m| m.is_disjoint(chosen))
        .collect();
    if unhit.is_empty() {
        *best = (*best).min(chosen.len());
        return;
    }
    // lower bound: greedy pairwise-disjoint unhit members
    let mut lb = 0usize;
    let mut used = EdgeSet::EMPTY;
    for &m in &unhit {
        if m.is_disjoint(used) {
            lb += 1;
            used = used.union(m);
        }
    }
    if chosen.len() + lb >= *best {
        return;
    }
    let pivot = unhit.iter().min_by_key(|m| m.len()).copied().unwrap();
    for e in pivot.iter() {
        let mut next = chosen;
        next.insert(e);
        branch(members, next, best);
    }
}

fn lex_witness(
    members: &[EdgeSet],
    support: &[usize],
    start: usize,
    size: usize,
    acc: &mut EdgeSet,
) -> bool {
    if acc.len() == size {
        return members.iter().all(|m| !m.is_disjoint(*acc));
    }
    if support.len() - start < size - acc.len() {
        return false;
    }
    for i in start..support.len() {
        acc.insert(support[i]);
        if lex_witness(members, support, i + 1, size, acc) {
            return true;
        }
        acc.remove(support[i]);
    }
    false
}

/// Exact maximum family of pairwise disjoint members, with the
/// lexicographically least witness (as a sorted family).
pub fn max_disjoint(members: &[EdgeSet]) -> (usize, Vec<EdgeSet>) {
    let mut sorted: Vec<EdgeSet> = members.to_vec();
    sorted.sort();
    sorted.dedup();
    let universe = sorted.iter().fold(EdgeSet::EMPTY, |acc, &m| acc.union(m));
    let mut memo: HashMap<u128, usize> = HashMap::new();
    let total = best_packing(&sorted, universe, &mut memo);
    // greedy lexicographic reconstruction over the shared memo
    let mut avail = universe;
    let mut packing = Vec::with_capacity(total);
    let mut remaining = total;
    while remaining > 0 {
        for &m in &sorted {
            if m.is_subset(avail)
                && best_packing(&sorted, avail.minus(m), &mut memo) == remaining - 1
            {
                packing.push(m);
                avail = avail.minus(m);
                remaining -= 1;
                break;
            }
        }
    }
    (total, packing)
}

fn best_packing(members: &[EdgeSet], avail: EdgeSet, memo: &mut HashMap<u128, usize>) -> usize {
    if let Some(&v) = memo.get(&avail.0) {
        return v;
    }
    let mut best = 0;
    for &m in members {
        if m.is_subset(avail) {
            let v = 1 + best_packing(members, avail.minus(m), memo);
            if v > best {
                best = v;
            }
        }
    }
    memo.insert(avail.0, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hitting_set_small() {
        let members = vec![
            EdgeSet::from_ids([0, 1]),
            EdgeSet::from_ids([1, 2]),
            EdgeSet::from_ids([0, 2]),
        ];
        let (size, witness) = min_hitting_set(&members).unwrap();
        assert_eq!(size, 2);
        assert_eq!(witness, EdgeSet::from_ids([0, 1]));
    }

    #[test]
    fn hitting_set_degenerate() {
        assert_eq!(min_hitting_set(&[]), Some((0, EdgeSet::EMPTY)));
        assert_eq!(min_hitting_set(&[EdgeSet::EMPTY]), None);
    }

    #[test]
    fn packing_small() {
        let members = vec![
            EdgeSet::from_ids([0, 1]),
            EdgeSet::from_ids([2, 3]),
            EdgeSet::from_ids([1, 2]),
        ];
        let (size, packing) = max_disjoint(&members);
        assert_eq!(size, 2);
        assert_eq!(
            packing,
            vec![EdgeSet::from_ids([0, 1]), EdgeSet::from_ids([2, 3])]
        );
    }
}
