//! Exact τ, ν, ν*, packing certificates, Ω-packings and mates.

pub mod core;
pub mod lp;
mod mixed;
mod nustar;
mod omega;

pub use mixed::{mixed_packing, MixedPacking};
pub use nustar::{doubled, nustar, nustar_half_integral, FractionalPacking};
pub use omega::{
    find_omega_packing, is_cap, is_mate, mates_of, minimality_report, Mate, MinimalityReport,
    OmegaPacking,
};

use crate::error::{Error, Result};
use crate::graft::{CoverKind, SignedGraft};
use crate::graph::EdgeSet;

/// Minimum cover size, with a sentinel for grafts without any odd T-join
/// (the covering problem is vacuous there).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tau {
    Finite(usize),
    NoJoin,
}

impl Tau {
    pub fn finite(self) -> Option<usize> {
        match self {
            Tau::Finite(v) => Some(v),
            Tau::NoJoin => None,
        }
    }
}

/// A verified cover and how it classifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub edges: EdgeSet,
    pub kind: CoverKind,
}

#[derive(Clone, Debug)]
pub struct PackingResult {
    pub tau: Tau,
    pub nu: usize,
    pub cover: Option<Cover>,
    pub packing: Vec<EdgeSet>,
    pub packs: bool,
}

const SHORE_LIMIT: usize = 22;

/// Exact τ with a witnessing cover.
///
/// Minimum covers are inclusion-minimal transversals of the odd T-join
/// family, hence signatures or T-cuts; both classes are cut-shaped, so
/// shore enumeration is exhaustive over the candidates.
pub fn tau(sg: &SignedGraft) -> Result<(Tau, Option<Cover>)> {
    if !sg.has_odd_tjoin() {
        return Ok((Tau::NoJoin, None));
    }
    if sg.n() > SHORE_LIMIT {
        return Err(Error::TooLarge { got: sg.n(), max: SHORE_LIMIT });
    }
    let mut best: Option<EdgeSet> = None;
    let mut consider = |cand: EdgeSet| match best {
        None => best = Some(cand),
        Some(b) => {
            if (cand.len(), cand) < (b.len(), b) {
                best = Some(cand);
            }
        }
    };
    let t = sg.terminals();
    for mask in 0u64..1 << sg.n() {
        let shore = crate::graph::VertexSet(mask);
        let cut = sg.graph().cut(shore)?;
        if shore.inter(t).len() % 2 == 0 {
            consider(sg.sigma().symdiff(cut));
        } else {
            consider(cut);
        }
    }
    let edges = best.expect("sigma itself is always a candidate");
    let kind = sg.classify_cover(edges);
    debug_assert!(kind != CoverKind::Neither);
    debug_assert!(sg.is_cover(edges));
    Ok((Tau::Finite(edges.len()), Some(Cover { edges, kind })))
}

/// Brute-force τ oracle over arbitrary edge subsets (m ≤ 20).
pub fn tau_exhaustive(sg: &SignedGraft) -> Result<(Tau, Option<Cover>)> {
    if !sg.has_odd_tjoin() {
        return Ok((Tau::NoJoin, None));
    }
    if sg.m() > 20 {
        return Err(Error::TooLarge { got: sg.m(), max: 20 });
    }
    let ids: Vec<usize> = (0..sg.m()).collect();
    for size in 0..=sg.m() {
        let mut acc = EdgeSet::EMPTY;
        if let Some(found) = combo_cover(sg, &ids, 0, size, &mut acc) {
            let kind = sg.classify_cover(found);
            let kind = if kind == CoverKind::Neither {
                // a valid cover that is not cut-shaped
                CoverKind::Neither
            } else {
                kind
            };
            return Ok((Tau::Finite(found.len()), Some(Cover { edges: found, kind })));
        }
    }
    Err(Error::Internal("a cover always exists when an odd T-join does".into()))
}

fn combo_cover(
    sg: &SignedGraft,
    ids: &[usize],
    start: usize,
    size: usize,
    acc: &mut EdgeSet,
) -> Option<EdgeSet> {
    if acc.len() == size {
        return sg.is_cover(*acc).then_some(*acc);
    }
    if ids.len() - start < size - acc.len() {
        return None;
    }
    for i in start..ids.len() {
        acc.insert(ids[i]);
        if let Some(found) = combo_cover(sg, ids, i + 1, size, acc) {
            return Some(found);
        }
        acc.remove(ids[i]);
    }
    None
}

/// Exact ν with a witnessing packing of minimal odd T-joins.
///
/// Any member of a maximum disjoint family shrinks to a minimal odd
/// T-join inside it while preserving disjointness, so the search over
/// minimal members is exact.
pub fn nu(sg: &SignedGraft) -> (usize, Vec<EdgeSet>) {
    let members = sg.minimal_odd_tjoins();
    core::max_disjoint(&members)
}

/// Brute-force ν oracle over all odd T-joins.
pub fn nu_exhaustive(sg: &SignedGraft) -> Result<(usize, Vec<EdgeSet>)> {
    let all = sg.all_odd_tjoins()?;
    Ok(core::max_disjoint(&all))
}

/// Compose τ and ν; the certificates are re-verified before returning.
pub fn packs(sg: &SignedGraft) -> Result<PackingResult> {
    let (tau_v, cover) = tau(sg)?;
    let (nu_v, packing) = nu(sg);
    let result = PackingResult {
        tau: tau_v,
        nu: nu_v,
        cover,
        packing,
        packs: matches!(tau_v, Tau::Finite(t) if t == nu_v),
    };
    check_packing_result(sg, &result).map_err(Error::Internal)?;
    Ok(result)
}

/// Independent certificate checker: covers meet every minimal odd T-join
/// oddly, packings are disjoint odd T-joins, and τ ≥ ν.
pub fn check_packing_result(sg: &SignedGraft, r: &PackingResult) -> std::result::Result<(), String> {
    let minimal = sg.minimal_odd_tjoins();
    match (r.tau, &r.cover) {
        (Tau::NoJoin, _) => {
            if !minimal.is_empty() {
                return Err("no-join status but odd T-joins exist".into());
            }
            if r.packs {
                return Err("no-join instances do not pack".into());
            }
        }
        (Tau::Finite(t), Some(cover)) => {
            if cover.edges.len() != t {
                return Err("cover size differs from tau".into());
            }
            for j in &minimal {
                if !cover.edges.odd_inter(*j) {
                    return Err(format!("cover misses join {j:?} or meets it evenly"));
                }
            }
            if sg.classify_cover(cover.edges) != cover.kind {
                return Err("cover kind mismatch".into());
            }
            if t < r.nu {
                return Err("tau below nu".into());
            }
            if r.packs != (t == r.nu) {
                return Err("packs flag inconsistent".into());
            }
        }
        (Tau::Finite(_), None) => return Err("finite tau without cover".into()),
    }
    if r.packing.len() != r.nu {
        return Err("packing size differs from nu".into());
    }
    for (i, a) in r.packing.iter().enumerate() {
        if !sg.is_odd_tjoin(*a) {
            return Err(format!("packing member {a:?} is not an odd T-join"));
        }
        for b in &r.packing[i + 1..] {
            if !a.is_disjoint(*b) {
                return Err("packing members overlap".into());
            }
        }
    }
    Ok(())
}

/// Smallest signature (as Σ△δ(U) over even-terminal shores).
pub fn min_signature(sg: &SignedGraft) -> Result<(usize, EdgeSet)> {
    if sg.n() > SHORE_LIMIT {
        return Err(Error::TooLarge { got: sg.n(), max: SHORE_LIMIT });
    }
    let mut best: Option<EdgeSet> = None;
    for mask in 0u64..1 << sg.n() {
        let shore = crate::graph::VertexSet(mask);
        if shore.inter(sg.terminals()).len() % 2 != 0 {
            continue;
        }
        let cand = sg.sigma().symdiff(sg.graph().cut(shore)?);
        if best.map_or(true, |b| (cand.len(), cand) < (b.len(), b)) {
            best = Some(cand);
        }
    }
    let b = best.expect("the empty shore is always valid");
    Ok((b.len(), b))
}

/// Smallest T-cut; errors when T = ∅.
pub fn min_tcut(sg: &SignedGraft) -> Result<(usize, EdgeSet)> {
    if sg.terminals().is_empty() {
        return Err(Error::Precondition("T-cuts need terminals".into()));
    }
    if sg.n() > SHORE_LIMIT {
        return Err(Error::TooLarge { got: sg.n(), max: SHORE_LIMIT });
    }
    let mut best: Option<EdgeSet> = None;
    for mask in 0u64..1 << sg.n() {
        let shore = crate::graph::VertexSet(mask);
        if shore.inter(sg.terminals()).len() % 2 != 1 {
            continue;
        }
        let cand = sg.graph().cut(shore)?;
        if best.map_or(true, |b| (cand.len(), cand) < (b.len(), b)) {
            best = Some(cand);
        }
    }
    let b = best.expect("a single terminal is always an odd shore");
    Ok((b.len(), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Multigraph, VertexSet};

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

    fn k4_graft() -> SignedGraft {
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let all = g.all_edges();
        SignedGraft::new(g, all, VertexSet::EMPTY).unwrap()
    }

    #[test]
    fn k5tilde_values() {
        let sg = k5tilde();
        let r = packs(&sg).unwrap();
        assert_eq!(r.tau, Tau::Finite(4));
        assert_eq!(r.nu, 2);
        assert!(!r.packs);
    }

    #[test]
    fn k4_values() {
        let sg = k4_graft();
        let r = packs(&sg).unwrap();
        assert_eq!(r.tau, Tau::Finite(2));
        assert_eq!(r.nu, 1);
        assert!(!r.packs);
        assert!(!sg.is_eulerian());
    }

    #[test]
    fn tau_routes_agree_on_fixtures() {
        for sg in [k5tilde(), k4_graft()] {
            let (a, _) = tau(&sg).unwrap();
            let (b, _) = tau_exhaustive(&sg).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn single_odd_edge_packs() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::singleton(0), VertexSet::from_ids([0, 1])).unwrap();
        let r = packs(&sg).unwrap();
        assert_eq!(r.tau, Tau::Finite(1));
        assert_eq!(r.nu, 1);
        assert!(r.packs);
    }

    #[test]
    fn no_join_sentinel() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::EMPTY, VertexSet::EMPTY).unwrap();
        let r = packs(&sg).unwrap();
        assert_eq!(r.tau, Tau::NoJoin);
        assert_eq!(r.nu, 0);
        assert!(!r.packs);
    }
}
