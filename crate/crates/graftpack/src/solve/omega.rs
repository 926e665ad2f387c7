//! (Ω,k)-packings, k-mates, caps, and the property report for claimed
//! minimal counterexamples.

use super::{packs, Cover, Tau};
use crate::error::{Error, Result};
use crate::graft::{CoverKind, SignedGraft};
use crate::graph::{EdgeSet, VertexSet};
use std::collections::BTreeSet;

/// Sequence L1..Lk of odd T-joins with Ω ∈ L1∩L2∩L3, Ω ∉ L4∪…∪Lk,
/// pairwise Ω-disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPacking {
    pub omega: usize,
    pub joins: Vec<EdgeSet>,
}

impl OmegaPacking {
    pub fn k(&self) -> usize {
        self.joins.len()
    }

    pub fn is_valid(&self, sg: &SignedGraft) -> bool {
        let om = EdgeSet::singleton(self.omega);
        if self.joins.len() < 3 {
            return false;
        }
        for (i, &a) in self.joins.iter().enumerate() {
            if !sg.is_odd_tjoin(a) {
                return false;
            }
            let want = i < 3;
            if a.contains(self.omega) != want {
                return false;
            }
            for &b in &self.joins[i + 1..] {
                if !a.inter(b).is_subset(om) {
                    return false;
                }
            }
        }
        true
    }
}

/// First (Ω,k)-packing in lexicographic order, searching over all odd
/// T-joins, or None.
pub fn find_omega_packing(sg: &SignedGraft, omega: usize, k: usize) -> Result<Option<OmegaPacking>> {
    if omega >= sg.m() {
        return Err(Error::UnknownEdge(omega));
    }
    if k < 3 {
        return Err(Error::Precondition("an (Ω,k)-packing needs k ≥ 3".into()));
    }
    let all = sg.all_odd_tjoins()?;
    let through: Vec<EdgeSet> = all.iter().copied().filter(|j| j.contains(omega)).collect();
    let avoiding: Vec<EdgeSet> = all.iter().copied().filter(|j| !j.contains(omega)).collect();
    let om = EdgeSet::singleton(omega);

    // choose L1 < L2 < L3 from `through`, pairwise meeting exactly in Ω
    let mut first3: Vec<EdgeSet> = Vec::new();
    fn pick3(
        through: &[EdgeSet],
        om: EdgeSet,
        start: usize,
        acc: &mut Vec<EdgeSet>,
        used: EdgeSet,
        avoiding: &[EdgeSet],
        rest: usize,
    ) -> Option<Vec<EdgeSet>> {
        if acc.len() == 3 {
            let mut tail: Vec<EdgeSet> = Vec::new();
            return pick_rest(avoiding, 0, used.minus(om), rest, &mut tail)
                .map(|mut t| {
                    let mut full = acc.clone();
                    full.append(&mut t);
                    full
                });
        }
        for i in start..through.len() {
            let cand = through[i];
            if cand.inter(used).is_subset(om) || acc.is_empty() {
                acc.push(cand);
                if let Some(found) = pick3(through, om, i + 1, acc, used.union(cand), avoiding, rest)
                {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }
    fn pick_rest(
        avoiding: &[EdgeSet],
        start: usize,
        used_wo_omega: EdgeSet,
        rest: usize,
        acc: &mut Vec<EdgeSet>,
    ) -> Option<Vec<EdgeSet>> {
        if acc.len() == rest {
            return Some(acc.clone());
        }
        for i in start..avoiding.len() {
            let cand = avoiding[i];
            if cand.is_disjoint(used_wo_omega) {
                acc.push(cand);
                if let Some(found) =
                    pick_rest(avoiding, i + 1, used_wo_omega.union(cand), rest, acc)
                {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }
    let found = pick3(&through, om, 0, &mut first3, EdgeSet::EMPTY, &avoiding, k - 3);
    Ok(found.map(|joins| OmegaPacking { omega, joins }))
}

/// k-mate: a signature or T-cut B with |B − L| ≤ k − 3.
pub fn is_mate(sg: &SignedGraft, k: usize, b: EdgeSet, l: EdgeSet) -> bool {
    sg.classify_cover(b) != CoverKind::Neither && b.minus(l).len() + 3 <= k
}

/// Cap of L_ℓ in the packing: signature or T-cut containing Ω, inside the
/// packing's union, meeting L_ℓ at least thrice and every other member
/// exactly once.
pub fn is_cap(sg: &SignedGraft, packing: &OmegaPacking, b: EdgeSet, ell: usize) -> bool {
    if sg.classify_cover(b) == CoverKind::Neither {
        return false;
    }
    if !b.contains(packing.omega) {
        return false;
    }
    let union = packing
        .joins
        .iter()
        .fold(EdgeSet::EMPTY, |acc, &j| acc.union(j));
    if !b.is_subset(union) {
        return false;
    }
    for (i, &l) in packing.joins.iter().enumerate() {
        let hits = b.inter(l).len();
        if i == ell {
            if hits < 3 {
                return false;
            }
        } else if hits != 1 {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct Mate {
    pub cover: Cover,
    pub target: EdgeSet,
    pub k: usize,
    pub extremal: bool,
}

/// All k-mates of `l`, lexicographic, with extremal flags
/// (B is extremal when no other mate B' has B'∩L ⊊ B∩L).
pub fn mates_of(sg: &SignedGraft, k: usize, l: EdgeSet) -> Result<Vec<Mate>> {
    let candidates = all_cut_shaped_covers(sg)?;
    let mates: Vec<EdgeSet> = candidates
        .into_iter()
        .filter(|b| b.minus(l).len() + 3 <= k)
        .collect();
    Ok(mates
        .iter()
        .map(|&b| {
            let extremal = !mates
                .iter()
                .any(|&b2| b2.inter(l) != b.inter(l) && b2.inter(l).is_subset(b.inter(l)));
            Mate {
                cover: Cover { edges: b, kind: sg.classify_cover(b) },
                target: l,
                k,
                extremal,
            }
        })
        .collect())
}

/// Every signature and every T-cut, deduplicated and sorted.
pub fn all_cut_shaped_covers(sg: &SignedGraft) -> Result<Vec<EdgeSet>> {
    if sg.n() > 22 {
        return Err(Error::TooLarge { got: sg.n(), max: 22 });
    }
    let mut out: BTreeSet<EdgeSet> = BTreeSet::new();
    for mask in 0u64..1 << sg.n() {
        let shore = VertexSet(mask);
        let cut = sg.graph().cut(shore)?;
        if shore.inter(sg.terminals()).len() % 2 == 0 {
            out.insert(sg.sigma().symdiff(cut));
        } else {
            out.insert(cut);
        }
    }
    Ok(out.into_iter().collect())
}

/// Property report for a claimed minimal counterexample (Prop-style
/// checklist). `obstruction_free` is supplied by the caller so this
/// module stays independent of the minor search.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub connected: bool,
    pub eulerian: bool,
    pub tau: Tau,
    pub nu: usize,
    pub packs: bool,
    /// Precondition of the checklist: Eulerian, ≤ 2 terminals, does not
    /// pack, obstruction-free. None when the scan outcome is unknown.
    pub precondition_met: Option<bool>,
    /// Edges lying in no minimum cover.
    pub uncovered_edges: Vec<usize>,
    /// The same, restricted to edges at a terminal (the checklist picks Ω
    /// there when T ≠ ∅).
    pub terminal_uncovered_edges: Vec<usize>,
    /// There do not exist τ−1 pairwise disjoint odd T-joins.
    pub no_near_packing: bool,
    /// For each eligible Ω, whether an (Ω,τ)-packing exists.
    pub omega_packings: Vec<(usize, bool)>,
    /// Every odd T-join has a τ-mate.
    pub all_joins_have_mates: bool,
    pub mateless_join: Option<EdgeSet>,
}

pub fn minimality_report(
    sg: &SignedGraft,
    obstruction_free: Option<bool>,
) -> Result<MinimalityReport> {
    let r = packs(sg)?;
    let connected = sg.graph().is_connected();
    let eulerian = sg.is_eulerian();
    let base = eulerian && sg.terminals().len() <= 2 && !r.packs;
    let precondition_met = match obstruction_free {
        Some(of) => Some(base && of),
        None => {
            if base {
                None
            } else {
                Some(false)
            }
        }
    };
    let Tau::Finite(t) = r.tau else {
        return Ok(MinimalityReport {
            connected,
            eulerian,
            tau: r.tau,
            nu: r.nu,
            packs: r.packs,
            precondition_met,
            uncovered_edges: (0..sg.m()).collect(),
            terminal_uncovered_edges: Vec::new(),
            no_near_packing: false,
            omega_packings: Vec::new(),
            all_joins_have_mates: true,
            mateless_join: None,
        });
    };

    let covers = all_cut_shaped_covers(sg)?;
    let mut in_min_cover = EdgeSet::EMPTY;
    for &b in &covers {
        if b.len() == t {
            in_min_cover = in_min_cover.union(b);
        }
    }
    let uncovered: Vec<usize> = (0..sg.m()).filter(|&e| !in_min_cover.contains(e)).collect();
    let terminal_uncovered: Vec<usize> = if sg.terminals().is_empty() {
        Vec::new()
    } else {
        let mut at_terminal = EdgeSet::EMPTY;
        for v in sg.terminals().iter() {
            at_terminal = at_terminal.union(
                sg.graph()
                    .cut(VertexSet::singleton(v))
                    .expect("terminal exists"),
            );
        }
        uncovered
            .iter()
            .copied()
            .filter(|&e| at_terminal.contains(e))
            .collect()
    };

    let no_near_packing = t >= 1 && r.nu < t - 1;

    let eligible: &[usize] = if sg.terminals().is_empty() {
        &uncovered
    } else {
        &terminal_uncovered
    };
    let mut omega_packings = Vec::new();
    if t >= 3 {
        for &omega in eligible {
            let found = find_omega_packing(sg, omega, t)?.is_some();
            omega_packings.push((omega, found));
        }
    }

    let mut all_joins_have_mates = true;
    let mut mateless_join = None;
    for join in sg.all_odd_tjoins()? {
        let has = covers.iter().any(|&b| b.minus(join).len() + 3 <= t);
        if !has {
            all_joins_have_mates = false;
            mateless_join = Some(join);
            break;
        }
    }

    Ok(MinimalityReport {
        connected,
        eulerian,
        tau: r.tau,
        nu: r.nu,
        packs: r.packs,
        precondition_met,
        uncovered_edges: uncovered,
        terminal_uncovered_edges: terminal_uncovered,
        no_near_packing,
        omega_packings,
        all_joins_have_mates,
        mateless_join,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn k5tilde() -> SignedGraft {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = Multigraph::new(5, edges).unwrap();
        let all = g.all_edges();
        SignedGraft::new(g, all, VertexSet::EMPTY).unwrap()
    }

    #[test]
    fn k5tilde_omega_packing_k3_exists() {
        let sg = k5tilde();
        let p = find_omega_packing(&sg, 0, 3).unwrap().unwrap();
        assert!(p.is_valid(&sg));
        assert_eq!(p.joins.len(), 3);
    }

    #[test]
    fn omega_in_no_join_gives_none() {
        // bipartite-signed square: no odd join at all through edge 0
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::EMPTY, VertexSet::EMPTY).unwrap();
        assert!(find_omega_packing(&sg, 0, 3).unwrap().is_none());
    }

    #[test]
    fn k5tilde_report_has_no_three_disjoint_joins() {
        let sg = k5tilde();
        let rep = minimality_report(&sg, Some(false)).unwrap();
        assert_eq!(rep.tau, Tau::Finite(4));
        assert_eq!(rep.nu, 2);
        // τ − 1 = 3 pairwise disjoint odd T-joins do not exist
        assert!(rep.no_near_packing);
        assert_eq!(rep.precondition_met, Some(false));
    }
}
