//! Exhaustive generation of signed grafts up to isomorphism and
//! resigning, plus a seeded random mode for larger sizes.
//!
//! Graphs are multisets over the vertex-pair slots (loops included) and
//! are deduplicated by their minimum relabeling. For a fixed graph and
//! terminal orbit, signatures are represented by per-parallel-class odd
//! counts; the orbit of a state under (automorphism, resigning) pairs is
//! marked off so each equivalence class is emitted exactly once.

use crate::graft::SignedGraft;
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TMode {
    Empty,
    Pair,
}

/// Sorted (u ≤ v) slot list of a labeled multigraph, the canonical form
/// used throughout this module.
type Slots = Vec<(usize, usize)>;

fn slots_of(edges: &[(usize, usize)]) -> Slots {
    let mut s: Slots = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    s.sort_unstable();
    s
}

fn relabel(slots: &Slots, perm: &[usize]) -> Slots {
    let mut s: Slots = slots
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    s.sort_unstable();
    s
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 0, &mut out);
    out
}

/// All multigraphs with exactly `n` vertices and `m` edges, one per
/// isomorphism class, in canonical order.
pub fn canonical_graphs(n: usize, m: usize) -> Vec<Multigraph> {
    assert!(n >= 1 && n <= 7, "generation is desk scale");
    let mut slot_types: Slots = Vec::new();
    for u in 0..n {
        for v in u..n {
            slot_types.push((u, v));
        }
    }
    let perms = all_perms(n);
    let mut canon: std::collections::BTreeSet<Slots> = Default::default();
    // enumerate count vectors over the slot types
    fn rec(
        types: &Slots,
        idx: usize,
        left: usize,
        acc: &mut Slots,
        perms: &[Vec<usize>],
        canon: &mut std::collections::BTreeSet<Slots>,
    ) {
        if idx == types.len() {
            if left == 0 {
                let best = perms
                    .iter()
                    .map(|p| relabel(acc, p))
                    .min()
                    .expect("identity permutation exists");
                canon.insert(best);
            }
            return;
        }
        for count in 0..=left {
            let before = acc.len();
            for _ in 0..count {
                acc.push(types[idx]);
            }
            rec(types, idx + 1, left - count, acc, perms, canon);
            acc.truncate(before);
        }
    }
    let mut acc = Vec::new();
    rec(&slot_types, 0, m, &mut acc, &perms, &mut canon);
    canon
        .into_iter()
        .map(|slots| Multigraph::new(n, slots).expect("canonical slots are in range"))
        .collect()
}

fn automorphisms(slots: &Slots, n: usize) -> Vec<Vec<usize>> {
    all_perms(n)
        .into_iter()
        .filter(|p| &relabel(slots, p) == slots)
        .collect()
}

/// Distinct parallel classes of a slot-sorted edge list, as
/// (u, v, first edge id, size).
fn classes_of(slots: &Slots) -> Vec<(usize, usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (e, &(u, v)) in slots.iter().enumerate() {
        match out.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.3 += 1,
            _ => out.push((u, v, e, 1)),
        }
    }
    out
}

/// All signed grafts on exactly `n` vertices and `m` edges, one per
/// (isomorphism × resigning) class, deterministic order.
pub fn canonical_grafts(n: usize, m: usize, t_mode: TMode) -> Vec<SignedGraft> {
    let mut out = Vec::new();
    for g in canonical_graphs(n, m) {
        let slots = slots_of(g.edges());
        let auts = automorphisms(&slots, n);
        let terminal_sets: Vec<VertexSet> = match t_mode {
            TMode::Empty => vec![VertexSet::EMPTY],
            TMode::Pair => {
                if n < 2 {
                    Vec::new()
                } else {
                    // orbit representatives of vertex pairs
                    let mut seen: std::collections::BTreeSet<(usize, usize)> = Default::default();
                    let mut reps = Vec::new();
                    for a in 0..n {
                        for b in a + 1..n {
                            if seen.contains(&(a, b)) {
                                continue;
                            }
                            reps.push(VertexSet::from_ids([a, b]));
                            for p in &auts {
                                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                                seen.insert((x, y));
                            }
                        }
                    }
                    reps
                }
            }
        };
        let classes = classes_of(&slots);
        for t in terminal_sets {
            let aut_t: Vec<&Vec<usize>> = auts
                .iter()
                .filter(|p| {
                    VertexSet::from_ids(t.iter().map(|v| p[v])) == t
                })
                .collect();
            // class index map under a permutation
            let class_image: Vec<Vec<usize>> = aut_t
                .iter()
                .map(|p| {
                    classes
                        .iter()
                        .map(|&(u, v, _, _)| {
                            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                            classes
                                .iter()
                                .position(|&(x, y, _, _)| (x, y) == (a, b))
                                .expect("automorphism permutes classes")
                        })
                        .collect()
                })
                .collect();
            let shores: Vec<VertexSet> = (0..1u64 << n)
                .map(VertexSet)
                .filter(|u| u.inter(t).len() % 2 == 0)
                .collect();
            let radix: Vec<usize> = classes.iter().map(|&(_, _, _, size)| size + 1).collect();
            let total: usize = radix.iter().product();
            let mut seen = vec![false; total];
            for code in 0..total {
                if seen[code] {
                    continue;
                }
                let state = decode(code, &radix);
                // mark the orbit under (automorphism, resigning)
                for (pi, img) in class_image.iter().enumerate() {
                    let p = aut_t[pi];
                    for shore in &shores {
                        let mut next = vec![0usize; classes.len()];
                        for (ci, &(u, v, _, size)) in classes.iter().enumerate() {
                            let flipped = u != v
                                && (shore.contains(p[u]) != shore.contains(p[v]));
                            let odd = state[ci];
                            next[img[ci]] = if flipped { size - odd } else { odd };
                        }
                        seen[encode(&next, &radix)] = true;
                    }
                }
                // materialize: the first `odd` edges of each class are odd
                let mut sigma = EdgeSet::EMPTY;
                for (ci, &(_, _, first, _)) in classes.iter().enumerate() {
                    for k in 0..state[ci] {
                        sigma.insert(first + k);
                    }
                }
                out.push(
                    SignedGraft::new(g.clone(), sigma, t).expect("generated graft is valid"),
                );
            }
        }
    }
    out
}

fn decode(mut code: usize, radix: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; radix.len()];
    for (i, &r) in radix.iter().enumerate() {
        out[i] = code % r;
        code /= r;
    }
    out
}

fn encode(state: &[usize], radix: &[usize]) -> usize {
    let mut code = 0usize;
    for i in (0..radix.len()).rev() {
        code = code * radix[i] + state[i];
    }
    code
}

/// All canonical grafts with n ≤ max_n and m ≤ max_m.
pub fn canonical_grafts_upto(max_n: usize, max_m: usize, t_mode: TMode) -> Vec<SignedGraft> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 0..=max_m {
            out.extend(canonical_grafts(n, m, t_mode));
        }
    }
    out
}

/// Seeded random graft for sizes beyond the exhaustive range.
pub fn random_graft<R: Rng>(rng: &mut R, n: usize, m: usize, t_mode: TMode) -> SignedGraft {
    assert!(n >= 1);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    let g = Multigraph::new(n, edges).unwrap();
    let sigma = EdgeSet((rng.gen::<u128>()) & EdgeSet::full(m).0);
    let t = match t_mode {
        TMode::Empty => VertexSet::EMPTY,
        TMode::Pair => {
            if n < 2 {
                VertexSet::EMPTY
            } else {
                let a = rng.gen_range(0..n);
                let mut b = rng.gen_range(0..n);
                while b == a {
                    b = rng.gen_range(0..n);
                }
                VertexSet::from_ids([a, b])
            }
        }
    };
    SignedGraft::new(g, sigma, t).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_one_edge_has_two_grafts() {
        // a loop, odd or even
        let grafts = canonical_grafts(1, 1, TMode::Empty);
        assert_eq!(grafts.len(), 2);
        let parities: Vec<usize> = grafts.iter().map(|sg| sg.sigma().len()).collect();
        assert_eq!(parities, vec![0, 1]);
    }

    #[test]
    fn single_terminal_edge_odd_or_even() {
        let grafts = canonical_grafts(2, 1, TMode::Pair);
        let on_edge: Vec<&SignedGraft> = grafts
            .iter()
            .filter(|sg| {
                let (u, v) = sg.graph().ends(0);
                u != v && sg.terminals() == VertexSet::from_ids([0, 1])
            })
            .collect();
        assert_eq!(on_edge.len(), 2);
    }

    #[test]
    fn triangle_graph_count() {
        // unlabeled multigraphs on 3 vertices with 2 edges: loop+loop at
        // one vertex, loops at two vertices, loop+incident edge,
        // loop+opposite edge, parallel pair, path
        let graphs = canonical_graphs(3, 2);
        assert_eq!(graphs.len(), 6);
    }

    #[test]
    fn deterministic_order() {
        let a = canonical_grafts_upto(3, 3, TMode::Pair);
        let b = canonical_grafts_upto(3, 3, TMode::Pair);
        assert_eq!(a.len(), b.len());
        assert!(a == b);
    }
}
