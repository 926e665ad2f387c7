//! The two excluded signed grafts (K̃5 and F7), bounded minor search
//! between signed grafts, and the obstruction scan.

use crate::clutter::{self, Clutter, MinorOutcome, ObstructionId};
use crate::error::{Error, Result};
use crate::graft::SignedGraft;
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use std::collections::HashSet;

/// (K5, E(K5), ∅).
pub fn k5tilde() -> SignedGraft {
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

/// The seven-edge two-terminal graft whose minimal odd T-joins are the
/// Fano lines: a unique even terminal edge st plus three odd parallel
/// pairs along the chain s–a, a–b, b–t.
///
/// Frozen from a bounded search (n ≤ 4, m = 7) against the Fano oracle;
/// the construction is re-validated on every call and panics on failure.
pub fn f7() -> SignedGraft {
    let edges = vec![
        (0, 1), // st, even
        (0, 2),
        (0, 2), // s–a pair
        (1, 3),
        (1, 3), // b–t pair
        (2, 3),
        (2, 3), // a–b pair
    ];
    let g = Multigraph::new(4, edges).unwrap();
    let sg = SignedGraft::new(g, EdgeSet::from_ids([1, 3, 5]), VertexSet::from_ids([0, 1]))
        .unwrap();
    let witness = f7_validation(&sg).expect("frozen F7 fixture failed its oracle");
    debug_assert_eq!(witness.len(), 7);
    sg
}

/// Oracle for the F7 fixture: its odd T-join clutter must be isomorphic
/// to the Fano lines, and exactly one edge joins the two terminals.
pub fn f7_validation(sg: &SignedGraft) -> Option<Vec<usize>> {
    let t = sg.terminals().ids();
    if t.len() != 2 || sg.m() != 7 {
        return None;
    }
    let terminal_edges = sg
        .graph()
        .edges()
        .iter()
        .filter(|&&(u, v)| (u == t[0] && v == t[1]) || (u == t[1] && v == t[0]))
        .count();
    if terminal_edges != 1 {
        return None;
    }
    let c = Clutter::from_signed_graft(sg).ok()?;
    c.isomorphic_to(&clutter::fano_lines())
}

/// (K4, E(K4), ∅): packs fails, Eulerian fails, no obstruction minor.
pub fn k4_graft() -> SignedGraft {
    let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let all = g.all_edges();
    SignedGraft::new(g, all, VertexSet::EMPTY).unwrap()
}

/// Cap on the deletion-subset enumeration; beyond it a search reports
/// Inconclusive instead of silently failing.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_deletion_sets: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        // covers every input with m ≤ 14
        SearchBudget { max_deletion_sets: 1 << 14 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraftWitness {
    pub delete: Vec<usize>,
    pub contract: Vec<usize>,
    /// Shore of the resigning applied between deletions and contractions.
    pub resign_shore: Vec<usize>,
    /// Vertex bijection from the (isolated-vertex-normalized) minor onto
    /// the target.
    pub iso: Vec<usize>,
}

/// Bounded exhaustive minor search: deletions first, one resigning, then
/// contractions; isomorphism respects Σ up to resigning and maps T to T.
pub fn has_graft_minor(
    sg: &SignedGraft,
    target: &SignedGraft,
    budget: &SearchBudget,
) -> MinorOutcome<GraftWitness> {
    let tgt = target.drop_isolated_nonterminals();
    let m_t = tgt.m();
    if sg.m() < m_t || sg.terminals().len() < tgt.terminals().len() {
        return MinorOutcome::Absent;
    }
    // contractions preserve terminal-count parity; deletions keep T
    if sg.terminals().len() % 2 != tgt.terminals().len() % 2 {
        return MinorOutcome::Absent;
    }
    let spare = sg.m() - m_t;
    let mut deletion_sets = 0usize;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for del_size in 0..=spare {
        let mut del = Vec::with_capacity(del_size);
        if let Some(outcome) = delete_rec(
            sg,
            &tgt,
            del_size,
            0,
            &mut del,
            spare - del_size,
            budget,
            &mut deletion_sets,
            &mut seen,
        ) {
            return outcome;
        }
        if deletion_sets > budget.max_deletion_sets {
            return MinorOutcome::Inconclusive;
        }
    }
    MinorOutcome::Absent
}

#[allow(clippy::too_many_arguments)]
fn delete_rec(
    sg: &SignedGraft,
    tgt: &SignedGraft,
    del_size: usize,
    start: usize,
    del: &mut Vec<usize>,
    con_size: usize,
    budget: &SearchBudget,
    deletion_sets: &mut usize,
    seen: &mut HashSet<Vec<u8>>,
) -> Option<MinorOutcome<GraftWitness>> {
    if del.len() == del_size {
        *deletion_sets += 1;
        if *deletion_sets > budget.max_deletion_sets {
            return Some(MinorOutcome::Inconclusive);
        }
        let delete = EdgeSet::from_ids(del.iter().copied());
        let remaining: Vec<usize> = (0..sg.m()).filter(|e| !delete.contains(*e)).collect();
        let mut con = Vec::with_capacity(con_size);
        return contract_rec(sg, tgt, delete, &remaining, con_size, 0, &mut con, seen);
    }
    for e in start..sg.m() {
        if sg.m() - e < del_size - del.len() {
            break;
        }
        del.push(e);
        if let Some(out) = delete_rec(
            sg,
            tgt,
            del_size,
            e + 1,
            del,
            con_size,
            budget,
            deletion_sets,
            seen,
        ) {
            return Some(out);
        }
        del.pop();
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn contract_rec(
    sg: &SignedGraft,
    tgt: &SignedGraft,
    delete: EdgeSet,
    remaining: &[usize],
    con_size: usize,
    start: usize,
    con: &mut Vec<usize>,
    seen: &mut HashSet<Vec<u8>>,
) -> Option<MinorOutcome<GraftWitness>> {
    if con.len() == con_size {
        let contract = EdgeSet::from_ids(con.iter().copied());
        let Ok(tracked) = sg.take_minor_tracked(delete, contract) else {
            return None;
        };
        let minor = tracked.graft.drop_isolated_nonterminals();
        if minor.n() != tgt.n()
            || minor.terminals().len() != tgt.terminals().len()
            || !degree_profiles_match(&minor, tgt)
        {
            return None;
        }
        // collapse resigning-equivalent branches
        let key = canonical_encoding(&minor);
        if !seen.insert(key) {
            return None;
        }
        if let Some(iso) = graft_isomorphism(&minor, tgt) {
            return Some(MinorOutcome::Found(GraftWitness {
                delete: delete.ids(),
                contract: contract.ids(),
                resign_shore: tracked.resign_shore.ids(),
                iso,
            }));
        }
        return None;
    }
    for i in start..remaining.len() {
        if remaining.len() - i < con_size - con.len() {
            break;
        }
        con.push(remaining[i]);
        if let Some(out) = contract_rec(sg, tgt, delete, remaining, con_size, i + 1, con, seen) {
            return Some(out);
        }
        con.pop();
    }
    None
}

fn degree_profiles_match(a: &SignedGraft, b: &SignedGraft) -> bool {
    let profile = |sg: &SignedGraft| {
        let mut v: Vec<(usize, bool)> = (0..sg.n())
            .map(|x| (sg.graph().degree(x), sg.terminals().contains(x)))
            .collect();
        v.sort_unstable();
        v
    };
    profile(a) == profile(b)
}

/// Canonical byte encoding under vertex relabeling and resigning; used to
/// memoize iso-equivalent minors.
fn canonical_encoding(sg: &SignedGraft) -> Vec<u8> {
    let n = sg.n();
    assert!(n <= 8, "canonical encoding is for small minors");
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        // relabeled parallel classes with odd counts
        let mut classes: Vec<(usize, usize, usize, usize)> = Vec::new(); // u, v, size, odd
        let mut class_of: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for (e, &(u, v)) in sg.graph().edges().iter().enumerate() {
            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
            let idx = *class_of.entry((a, b)).or_insert_with(|| {
                classes.push((a, b, 0, 0));
                classes.len() - 1
            });
            classes[idx].2 += 1;
            if sg.sigma().contains(e) {
                classes[idx].3 += 1;
            }
        }
        classes.sort_unstable();
        let terminals: Vec<usize> = {
            let mut t: Vec<usize> = sg.terminals().iter().map(|v| p[v]).collect();
            t.sort_unstable();
            t
        };
        // canonical odd counts under resigning: minimize over shores with
        // even terminal intersection
        let mut best_sig: Option<Vec<usize>> = None;
        for mask in 0u64..1 << n {
            let shore = VertexSet(mask);
            let tcount = terminals.iter().filter(|&&t| shore.contains(t)).count();
            if tcount % 2 != 0 {
                continue;
            }
            let sig: Vec<usize> = classes
                .iter()
                .map(|&(a, b, size, odd)| {
                    let flipped = a != b && (shore.contains(a) != shore.contains(b));
                    if flipped {
                        size - odd
                    } else {
                        odd
                    }
                })
                .collect();
            if best_sig.as_ref().map_or(true, |b| sig < *b) {
                best_sig = Some(sig);
            }
        }
        let mut enc: Vec<u8> = Vec::new();
        enc.push(n as u8);
        for &(a, b, size, _) in &classes {
            enc.extend_from_slice(&[a as u8, b as u8, size as u8]);
        }
        for o in best_sig.unwrap() {
            enc.push(o as u8);
        }
        enc.push(255);
        for t in &terminals {
            enc.push(*t as u8);
        }
        if best.as_ref().map_or(true, |b| enc < *b) {
            best = Some(enc);
        }
    });
    best.unwrap()
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Vertex bijection making the grafts equal up to resigning, or None.
pub fn graft_isomorphism(a: &SignedGraft, b: &SignedGraft) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() || a.terminals().len() != b.terminals().len() {
        return None;
    }
    let n = a.n();
    let mult = |sg: &SignedGraft, u: usize, v: usize| {
        sg.graph()
            .edges()
            .iter()
            .filter(|&&(x, y)| (x, y) == (u.min(v), u.max(v)) || (x, y) == (u.max(v), u.min(v)))
            .count()
    };
    let sig = |sg: &SignedGraft, v: usize| {
        let mut neigh: Vec<usize> = (0..sg.n())
            .filter(|&w| w != v)
            .map(|w| mult(sg, v, w))
            .filter(|&c| c > 0)
            .collect();
        neigh.sort_unstable();
        (
            sg.terminals().contains(v),
            sg.graph().degree(v),
            mult(sg, v, v),
            neigh,
        )
    };
    let a_sigs: Vec<_> = (0..n).map(|v| sig(a, v)).collect();
    let b_sigs: Vec<_> = (0..n).map(|v| sig(b, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        a: &SignedGraft,
        b: &SignedGraft,
        a_sigs: &[(bool, usize, usize, Vec<usize>)],
        b_sigs: &[(bool, usize, usize, Vec<usize>)],
        mult: &dyn Fn(&SignedGraft, usize, usize) -> usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> Option<()> {
        let n = a.n();
        if next == n {
            return sigma_compatible(a, b, map).then_some(());
        }
        for cand in 0..n {
            if used[cand] || a_sigs[next] != b_sigs[cand] {
                continue;
            }
            if !(0..next).all(|prev| mult(a, prev, next) == mult(b, map[prev], cand)) {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            if backtrack(a, b, a_sigs, b_sigs, mult, map, used, next + 1).is_some() {
                return Some(());
            }
            used[cand] = false;
            map[next] = usize::MAX;
        }
        None
    }
    backtrack(a, b, &a_sigs, &b_sigs, &mult, &mut map, &mut used, 0).map(|_| map)
}

/// Under a fixed vertex bijection, can the source signature be matched to
/// the target's by resigning the target?
fn sigma_compatible(a: &SignedGraft, b: &SignedGraft, map: &[usize]) -> bool {
    if b.terminals() != VertexSet::from_ids(a.terminals().iter().map(|v| map[v])) {
        return false;
    }
    // per target parallel class: (size, odd in image of Σ_a, odd in Σ_b)
    let mut classes: std::collections::BTreeMap<(usize, usize), (usize, usize, usize)> =
        Default::default();
    for (e, &(u, v)) in a.graph().edges().iter().enumerate() {
        let key = (map[u].min(map[v]), map[u].max(map[v]));
        let entry = classes.entry(key).or_insert((0, 0, 0));
        entry.0 += 1;
        if a.sigma().contains(e) {
            entry.1 += 1;
        }
    }
    for (e, &(u, v)) in b.graph().edges().iter().enumerate() {
        let key = (u.min(v), u.max(v));
        let Some(entry) = classes.get_mut(&key) else {
            return false;
        };
        if b.sigma().contains(e) {
            entry.2 += 1;
        }
    }
    // class sizes must agree (checked against b's own multiset)
    let mut total = 0usize;
    for &(size, _, _) in classes.values() {
        total += size;
    }
    if total != b.m() {
        return false;
    }
    for mask in 0u64..1 << b.n() {
        let shore = VertexSet(mask);
        if shore.inter(b.terminals()).len() % 2 != 0 {
            continue;
        }
        let ok = classes.iter().all(|(&(u, v), &(size, a_odd, b_odd))| {
            if u == v {
                a_odd == b_odd
            } else if shore.contains(u) != shore.contains(v) {
                a_odd == size - b_odd
            } else {
                a_odd == b_odd
            }
        });
        if ok {
            return true;
        }
    }
    false
}

/// Replay a minor witness.
pub fn verify_graft_witness(sg: &SignedGraft, target: &SignedGraft, w: &GraftWitness) -> bool {
    let delete = EdgeSet::from_ids(w.delete.iter().copied());
    let contract = EdgeSet::from_ids(w.contract.iter().copied());
    let Ok(tracked) = sg.take_minor_tracked(delete, contract) else {
        return false;
    };
    if tracked.resign_shore.ids() != w.resign_shore {
        return false;
    }
    let minor = tracked.graft.drop_isolated_nonterminals();
    let tgt = target.drop_isolated_nonterminals();
    if minor.n() != tgt.n() || w.iso.len() != minor.n() {
        return false;
    }
    // the recorded bijection must itself be structure-preserving
    let mult = |sg: &SignedGraft, u: usize, v: usize| {
        sg.graph()
            .edges()
            .iter()
            .filter(|&&(x, y)| (x.min(y), x.max(y)) == (u.min(v), u.max(v)))
            .count()
    };
    for u in 0..minor.n() {
        for v in u..minor.n() {
            if mult(&minor, u, v) != mult(&tgt, w.iso[u], w.iso[v]) {
                return false;
            }
        }
    }
    sigma_compatible(&minor, &tgt, &w.iso)
}

/// Scan outcome. When both obstructions embed, K̃5 is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scan {
    None,
    K5Tilde(GraftWitness),
    F7(GraftWitness),
    Inconclusive,
}

impl Scan {
    pub fn is_none(&self) -> bool {
        matches!(self, Scan::None)
    }
}

/// Run both obstruction detections; at desk scale (m ≤ 12, |T| ≤ 2) the
/// outcome is cross-checked against clutter-level O5/L7 detection.
pub fn obstruction_scan(sg: &SignedGraft, budget: &SearchBudget) -> Result<Scan> {
    let k5 = has_graft_minor(sg, &k5tilde(), budget);
    let f7r = has_graft_minor(sg, &f7(), budget);
    if sg.m() <= 12 && sg.terminals().len() <= 2 {
        cross_check(sg, &k5, &f7r)?;
    }
    Ok(match (k5, f7r) {
        (MinorOutcome::Found(w), _) => Scan::K5Tilde(w),
        (_, MinorOutcome::Found(w)) => Scan::F7(w),
        (MinorOutcome::Inconclusive, _) | (_, MinorOutcome::Inconclusive) => Scan::Inconclusive,
        (MinorOutcome::Absent, MinorOutcome::Absent) => Scan::None,
    })
}

fn cross_check(
    sg: &SignedGraft,
    k5: &MinorOutcome<GraftWitness>,
    f7r: &MinorOutcome<GraftWitness>,
) -> Result<()> {
    let h = Clutter::from_signed_graft(sg)?;
    let budget = 1 << 20;
    for (graft_side, id) in [(k5, ObstructionId::O5), (f7r, ObstructionId::L7)] {
        let clutter_side = clutter::has_clutter_minor(&h, clutter::catalog(id), budget);
        match (graft_side, &clutter_side) {
            (MinorOutcome::Found(_), MinorOutcome::Absent) => {
                return Err(Error::Internal(format!(
                    "graft-level minor found but {} absent at clutter level",
                    id.name()
                )));
            }
            (MinorOutcome::Absent, MinorOutcome::Found(_)) => {
                return Err(Error::Internal(format!(
                    "clutter-level {} found but graft-level minor absent",
                    id.name()
                )));
            }
            _ => {}
        }
    }
    Ok(())
}
