//! Brute-force oracles, independent of the library's solver paths: odd
//! T-joins by definition over all edge subsets, covers by direct parity
//! checks, packings by plain recursion.

#![allow(dead_code)]

use graftpack::graph::{EdgeSet, Multigraph, VertexSet};
use graftpack::SignedGraft;
use rand::Rng;

/// All odd T-joins by scanning every edge subset.
pub fn naive_odd_tjoins(sg: &SignedGraft) -> Vec<EdgeSet> {
    let g = sg.graph();
    assert!(g.m() <= 16, "oracle is exhaustive over subsets");
    let mut out = Vec::new();
    for mask in 0u64..1 << g.m() {
        let s = EdgeSet(mask as u128);
        if g.odd_vertices(s) == sg.terminals() && s.odd_inter(sg.sigma()) {
            out.push(s);
        }
    }
    out
}

pub fn naive_minimal_odd_tjoins(sg: &SignedGraft) -> Vec<EdgeSet> {
    let all = naive_odd_tjoins(sg);
    let mut minimal: Vec<EdgeSet> = Vec::new();
    'outer: for &cand in &all {
        for &other in &all {
            if other != cand && other.is_subset(cand) {
                continue 'outer;
            }
        }
        minimal.push(cand);
    }
    minimal.sort();
    minimal
}

/// Is `b` a cover, checked directly against every odd T-join.
pub fn naive_is_cover(_sg: &SignedGraft, b: EdgeSet, all_joins: &[EdgeSet]) -> bool {
    all_joins.iter().all(|j| b.odd_inter(*j))
}

/// Minimum cover size by ascending subset search; None when no odd
/// T-join exists.
pub fn naive_tau(sg: &SignedGraft) -> Option<usize> {
    let joins = naive_odd_tjoins(sg);
    if joins.is_empty() {
        return None;
    }
    let m = sg.m();
    for size in 0..=m {
        let mut found = false;
        subsets_of_size(m, size, &mut |b| {
            if !found && naive_is_cover(sg, b, &joins) {
                found = true;
            }
        });
        if found {
            return Some(size);
        }
    }
    unreachable!("the full edge set is hit oddly by ... some cover exists");
}

/// Maximum disjoint family of odd T-joins by plain recursion.
pub fn naive_nu(sg: &SignedGraft) -> usize {
    let joins = naive_odd_tjoins(sg);
    fn rec(joins: &[EdgeSet], start: usize, used: EdgeSet) -> usize {
        let mut best = 0;
        for i in start..joins.len() {
            if joins[i].is_disjoint(used) {
                best = best.max(1 + rec(joins, i + 1, used.union(joins[i])));
            }
        }
        best
    }
    rec(&joins, 0, EdgeSet::EMPTY)
}

pub fn subsets_of_size(m: usize, size: usize, f: &mut impl FnMut(EdgeSet)) {
    fn rec(m: usize, size: usize, start: usize, acc: EdgeSet, f: &mut impl FnMut(EdgeSet)) {
        if acc.len() == size {
            f(acc);
            return;
        }
        for e in start..m {
            if m - e < size - acc.len() {
                break;
            }
            let mut next = acc;
            next.insert(e);
            rec(m, size, e + 1, next, f);
        }
    }
    rec(m, size, 0, EdgeSet::EMPTY, f);
}

/// Random multigraph with loops and parallels.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Multigraph {
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    Multigraph::new(n, edges).unwrap()
}

pub fn random_graft<R: Rng>(rng: &mut R, n: usize, m: usize, pair: bool) -> SignedGraft {
    let g = random_graph(rng, n, m);
    let sigma = EdgeSet(rng.gen::<u128>() & EdgeSet::full(m).0);
    let t = if pair && n >= 2 {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n);
        while b == a {
            b = rng.gen_range(0..n);
        }
        VertexSet::from_ids([a, b])
    } else {
        VertexSet::EMPTY
    };
    SignedGraft::new(g, sigma, t).unwrap()
}

/// Count signed grafts up to isomorphism-and-resigning by naive double
/// generation: enumerate everything labeled and deduplicate with a
/// canonical key built from sorted (endpoint, parity) edge multisets.
pub fn naive_canonical_count(n: usize, m: usize, pair_mode: bool) -> usize {
    let mut slot_types = Vec::new();
    for u in 0..n {
        for v in u..n {
            slot_types.push((u, v));
        }
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 0, &mut perms);
    let mut keys: std::collections::BTreeSet<String> = Default::default();

    // enumerate labeled edge lists as count vectors over the slots
    let mut counts = vec![0usize; slot_types.len()];
    enumerate_counts(&mut counts, 0, m, &mut |counts| {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (i, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                edges.push(slot_types[i]);
            }
        }
        let terminals: Vec<Vec<usize>> = if pair_mode {
            let mut ts = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    ts.push(vec![a, b]);
                }
            }
            ts
        } else {
            vec![vec![]]
        };
        for t in &terminals {
            for sigma_mask in 0u64..1 << m {
                let key = canonical_key(n, &edges, sigma_mask, t, &perms);
                keys.insert(key);
            }
        }
    });
    keys.len()
}

fn permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == perm.len() {
        out.push(perm.clone());
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, out);
        perm.swap(k, i);
    }
}

fn enumerate_counts(
    counts: &mut Vec<usize>,
    idx: usize,
    left: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if idx == counts.len() {
        if left == 0 {
            f(counts);
        }
        return;
    }
    for c in 0..=left {
        counts[idx] = c;
        enumerate_counts(counts, idx + 1, left - c, f);
    }
    counts[idx] = 0;
}

fn canonical_key(
    n: usize,
    edges: &[(usize, usize)],
    sigma_mask: u64,
    terminals: &[usize],
    perms: &[Vec<usize>],
) -> String {
    let tset: std::collections::BTreeSet<usize> = terminals.iter().copied().collect();
    let mut best: Option<String> = None;
    for p in perms {
        for shore in 0u64..1 << n {
            let t_in_shore = terminals
                .iter()
                .filter(|&&t| shore >> t & 1 == 1)
                .count();
            if t_in_shore % 2 != 0 {
                continue;
            }
            let mut triples: Vec<(usize, usize, bool)> = edges
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| {
                    let crossed = u != v && ((shore >> u & 1) != (shore >> v & 1));
                    let odd = (sigma_mask >> e & 1 == 1) ^ crossed;
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    (a, b, odd)
                })
                .collect();
            triples.sort_unstable();
            let mut tt: Vec<usize> = tset.iter().map(|&t| p[t]).collect();
            tt.sort_unstable();
            let key = format!("{triples:?}|{tt:?}");
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap()
}
