//! Signed grafts (G, Σ, T): odd T-joins, covers, signatures, resigning,
//! minors, Eulerian checks.
//!
//! The odd T-joins of (G, Σ, T) are the solutions of the GF(2) system
//! [incidence; Σ-row]·x = [T-indicator; 1]; most predicates here reduce to
//! linear algebra over that system. Resigning by a shore U with |U ∩ T|
//! even leaves the odd T-join family unchanged.

use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// Classification of a candidate cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Signature,
    TCut,
    Both,
    Neither,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraft {
    graph: Multigraph,
    sigma: EdgeSet,
    terminals: VertexSet,
}

impl std::fmt::Debug for SignedGraft {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SignedGraft(n={}, edges={:?}, sigma={:?}, T={:?})",
            self.graph.n(),
            self.graph.edges(),
            self.sigma,
            self.terminals
        )
    }
}

/// Result of a tracked minor operation: the minor plus maps back to the
/// original ids (`edge_map[new] = old`, `vertex_map[new] = old`).
#[derive(Clone, Debug)]
pub struct TrackedMinor {
    pub graft: SignedGraft,
    pub edge_map: Vec<usize>,
    pub vertex_map: Vec<usize>,
    pub resign_shore: VertexSet,
}

impl SignedGraft {
    pub fn new(graph: Multigraph, sigma: EdgeSet, terminals: VertexSet) -> Result<SignedGraft> {
        if !sigma.is_subset(graph.all_edges()) {
            return Err(Error::UnknownEdge(
                sigma.iter().find(|&e| e >= graph.m()).unwrap_or(graph.m()),
            ));
        }
        if !terminals.is_subset(graph.all_vertices()) {
            return Err(Error::UnknownVertex(
                terminals
                    .iter()
                    .find(|&v| v >= graph.n())
                    .unwrap_or(graph.n()),
            ));
        }
        if terminals.len() % 2 != 0 {
            return Err(Error::OddTerminalCount);
        }
        Ok(SignedGraft { graph, sigma, terminals })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn sigma(&self) -> EdgeSet {
        self.sigma
    }

    pub fn terminals(&self) -> VertexSet {
        self.terminals
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn is_odd(&self, s: EdgeSet) -> bool {
        s.odd_inter(self.sigma)
    }

    pub fn is_odd_tjoin(&self, s: EdgeSet) -> bool {
        self.graph.odd_vertices(s) == self.terminals && self.is_odd(s)
    }

    /// Odd circuits of the underlying signed graph.
    pub fn odd_circuits(&self) -> Vec<EdgeSet> {
        self.graph
            .circuits()
            .into_iter()
            .filter(|&c| self.is_odd(c))
            .collect()
    }

    // ---- linear algebra ----

    fn join_system_rows(&self) -> Vec<(u128, bool)> {
        let mut rows = Vec::with_capacity(self.n() + 1);
        for v in 0..self.n() {
            let mut row = 0u128;
            for (e, &(a, b)) in self.graph.edges().iter().enumerate() {
                if a == b {
                    continue;
                }
                if a == v || b == v {
                    row |= 1u128 << e;
                }
            }
            rows.push((row, self.terminals.contains(v)));
        }
        rows.push((self.sigma.0, true));
        rows
    }

    /// Basis of the cycle space of G.
    pub fn cycle_basis(&self) -> Vec<EdgeSet> {
        let rows = self
            .join_system_rows()
            .into_iter()
            .take(self.n())
            .map(|(r, _)| (r, false));
        gf2::reduce(rows, self.m())
            .kernel_basis()
            .into_iter()
            .map(EdgeSet)
            .collect()
    }

    /// Basis of the space of even cycles (cycles with even Σ-intersection).
    pub fn even_cycle_basis(&self) -> Vec<EdgeSet> {
        let rows = self.join_system_rows().into_iter().map(|(r, _)| (r, false));
        gf2::reduce(rows, self.m())
            .kernel_basis()
            .into_iter()
            .map(EdgeSet)
            .collect()
    }

    pub fn some_odd_tjoin(&self) -> Option<EdgeSet> {
        let ech = gf2::reduce(self.join_system_rows(), self.m());
        ech.particular().map(EdgeSet)
    }

    pub fn has_odd_tjoin(&self) -> bool {
        self.some_odd_tjoin().is_some()
    }

    /// Every odd T-join, sorted. The family is a coset of the even-cycle
    /// space; callers are expected to stay at desk scale.
    pub fn all_odd_tjoins(&self) -> Result<Vec<EdgeSet>> {
        let Some(j0) = self.some_odd_tjoin() else {
            return Ok(Vec::new());
        };
        let basis = self.even_cycle_basis();
        if basis.len() > 22 {
            return Err(Error::TooLarge { got: basis.len(), max: 22 });
        }
        let mut out = Vec::with_capacity(1 << basis.len());
        let mut cur = j0;
        out.push(cur);
        // Gray-code walk over the coset
        for k in 1u64..1 << basis.len() {
            let flip = (k.trailing_zeros()) as usize;
            cur = cur.symdiff(basis[flip]);
            out.push(cur);
        }
        out.sort();
        Ok(out)
    }

    /// `B` intersects every odd T-join with odd parity. Vacuously true if
    /// the graft has no odd T-join.
    pub fn is_cover(&self, b: EdgeSet) -> bool {
        let Some(j0) = self.some_odd_tjoin() else {
            return true;
        };
        if !b.odd_inter(j0) {
            return false;
        }
        self.even_cycle_basis().iter().all(|&z| !b.odd_inter(z))
    }

    // ---- minimal odd T-joins ----

    /// Inclusion-wise minimal odd T-joins, deduplicated and sorted.
    pub fn minimal_odd_tjoins(&self) -> Vec<EdgeSet> {
        match self.terminals.len() {
            0 => {
                let mut v = self.odd_circuits();
                v.sort();
                v
            }
            2 => {
                let ts = self.terminals.ids();
                let (s, t) = (ts[0], ts[1]);
                let mut out: Vec<EdgeSet> = Vec::new();
                let paths = self.graph.st_paths(s, t).expect("terminals exist");
                let circuits = self.odd_circuits();
                for &p in &paths {
                    if self.is_odd(p) {
                        out.push(p);
                    } else {
                        let pv = self.graph.support(p).union(VertexSet::from_ids([s, t]));
                        for &c in &circuits {
                            if p.is_disjoint(c)
                                && self.graph.support(c).inter(pv).len() <= 1
                            {
                                out.push(p.union(c));
                            }
                        }
                    }
                }
                out.sort();
                out.dedup();
                out
            }
            _ => self.minimal_odd_tjoins_exhaustive(),
        }
    }

    /// Fallback for |T| > 2: scan the full coset and keep minimal members.
    fn minimal_odd_tjoins_exhaustive(&self) -> Vec<EdgeSet> {
        let Ok(mut all) = self.all_odd_tjoins() else {
            panic!("odd T-join coset too large for exhaustive minimality scan");
        };
        all.sort_by_key(|s| (s.len(), *s));
        let mut minimal: Vec<EdgeSet> = Vec::new();
        'outer: for cand in all {
            for &kept in &minimal {
                if kept.is_subset(cand) {
                    continue 'outer;
                }
            }
            minimal.push(cand);
        }
        minimal.sort();
        minimal
    }

    /// Split a minimal odd T-join (|T| ≤ 2) into its path and circuit
    /// parts (P, C).
    pub fn decompose(&self, l: EdgeSet) -> Result<(EdgeSet, EdgeSet)> {
        let bad = || Error::Precondition("not a minimal odd T-join of a two-terminal graft".into());
        match self.terminals.len() {
            0 => {
                if self.graph.is_circuit(l) && self.is_odd(l) {
                    Ok((EdgeSet::EMPTY, l))
                } else {
                    Err(bad())
                }
            }
            2 => {
                if !self.is_odd_tjoin(l) {
                    return Err(bad());
                }
                if self.is_simple_st_path(l) {
                    return Ok((l, EdgeSet::EMPTY));
                }
                let c = self.graph.find_circuit_within(l).ok_or_else(bad)?;
                let p = l.minus(c);
                let shared = self.graph.support(p).inter(self.graph.support(c));
                if self.graph.is_circuit(c)
                    && self.is_odd(c)
                    && self.is_simple_st_path(p)
                    && !self.is_odd(p)
                    && shared.len() <= 1
                {
                    Ok((p, c))
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }

    /// `s` is a simple path whose ends are exactly the two terminals.
    pub fn is_simple_st_path(&self, s: EdgeSet) -> bool {
        if self.graph.odd_vertices(s) != self.terminals {
            return false;
        }
        let mut deg = vec![0usize; self.n()];
        for e in s.iter() {
            let (u, v) = self.graph.ends(e);
            if u == v {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d > 2) {
            return false;
        }
        // connected on its support
        let support = self.graph.support(s);
        let Some(start) = support.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(e, w) in self.graph.incident(u) {
                if s.contains(e) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen == support
    }

    // ---- resigning and covers ----

    pub fn resign(&self, shore: VertexSet) -> Result<SignedGraft> {
        if shore.inter(self.terminals).len() % 2 != 0 {
            return Err(Error::InvalidResign);
        }
        let cut = self.graph.cut(shore)?;
        Ok(SignedGraft {
            graph: self.graph.clone(),
            sigma: self.sigma.symdiff(cut),
            terminals: self.terminals,
        })
    }

    /// A shore U with δ(U) = d and the requested |U ∩ T| parity, if one
    /// exists. Deterministic: per component the smallest vertex is placed
    /// outside U, then parity is fixed by flipping the admissible
    /// component with the largest smallest-vertex.
    pub fn shore_for_cut(&self, d: EdgeSet, want_odd_terminals: bool) -> Option<VertexSet> {
        let g = &self.graph;
        for e in d.iter() {
            if g.is_loop(e) {
                return None;
            }
        }
        let mut label = vec![false; g.n()];
        let mut comp_of = vec![usize::MAX; g.n()];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..g.n() {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            comp_of[start] = id;
            label[start] = false;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(e, w) in g.incident(u) {
                    if w == u {
                        continue;
                    }
                    let want = label[u] ^ d.contains(e);
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        label[w] = want;
                        members.push(w);
                        stack.push(w);
                    } else if label[w] != want {
                        return None;
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        // verify every edge (BFS handled them all, but keep the invariant explicit)
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if u != v && (label[u] ^ label[v]) != d.contains(e) {
                return None;
            }
        }
        let mut shore = VertexSet::from_ids((0..g.n()).filter(|&v| label[v]));
        let parity = shore.inter(self.terminals).len() % 2 == 1;
        if parity == want_odd_terminals {
            return Some(shore);
        }
        // flip one component with odd terminal count, largest min-vertex first
        for comp in comps.iter().rev() {
            let cset = VertexSet::from_ids(comp.iter().copied());
            if cset.inter(self.terminals).len() % 2 == 1 {
                shore = shore.symdiff(cset);
                return Some(shore);
            }
        }
        None
    }

    /// Prop-style classification: signature iff B△Σ = δ(U) with |U∩T|
    /// even; T-cut iff B = δ(U) with |U∩T| odd.
    pub fn classify_cover(&self, b: EdgeSet) -> CoverKind {
        let sig = self.shore_for_cut(b.symdiff(self.sigma), false).is_some();
        let tcut = !self.terminals.is_empty() && self.shore_for_cut(b, true).is_some();
        match (sig, tcut) {
            (true, true) => CoverKind::Both,
            (true, false) => CoverKind::Signature,
            (false, true) => CoverKind::TCut,
            (false, false) => CoverKind::Neither,
        }
    }

    pub fn is_signature(&self, b: EdgeSet) -> bool {
        matches!(self.classify_cover(b), CoverKind::Signature | CoverKind::Both)
    }

    pub fn is_tcut(&self, b: EdgeSet) -> bool {
        matches!(self.classify_cover(b), CoverKind::TCut | CoverKind::Both)
    }

    /// Every circuit inside `f` is even; via parity labeling on a spanning
    /// forest of f.
    pub fn is_bipartite_part(&self, f: EdgeSet) -> bool {
        let g = &self.graph;
        for e in f.iter() {
            if g.is_loop(e) && self.sigma.contains(e) {
                return false;
            }
        }
        let mut label = vec![false; g.n()];
        let mut seen = vec![false; g.n()];
        for start in 0..g.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(e, w) in g.incident(u) {
                    if !f.contains(e) || w == u {
                        continue;
                    }
                    let want = label[u] ^ self.sigma.contains(e);
                    if !seen[w] {
                        seen[w] = true;
                        label[w] = want;
                        stack.push(w);
                    } else if label[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Lexicographically least Σ over all resignings; canonical under
    /// resigning-equivalence.
    pub fn canonical_sigma(&self) -> EdgeSet {
        let n = self.n();
        assert!(n <= 24, "canonical_sigma is desk scale");
        let mut best = self.sigma;
        for mask in 0u64..1 << n {
            let shore = VertexSet(mask);
            if shore.inter(self.terminals).len() % 2 != 0 {
                continue;
            }
            let cand = self.sigma.symdiff(self.graph.cut(shore).unwrap());
            if cand < best {
                best = cand;
            }
        }
        best
    }

    // ---- Eulerian ----

    pub fn is_eulerian(&self) -> bool {
        let g = &self.graph;
        for v in 0..g.n() {
            if !self.terminals.contains(v) && g.degree(v) % 2 != 0 {
                return false;
            }
        }
        let sig_odd = self.sigma.len() % 2 == 1;
        let all_term_odd = self.terminals.iter().all(|v| g.degree(v) % 2 == 1);
        let all_term_even = self.terminals.iter().all(|v| g.degree(v) % 2 == 0);
        (all_term_odd && sig_odd) || (all_term_even && !sig_odd)
    }

    // ---- minors ----

    pub fn delete(&self, e: usize) -> Result<SignedGraft> {
        Ok(self.delete_tracked(EdgeSet::singleton(e))?.graft)
    }

    /// Delete a set of edges; vertices are untouched, edge ids reindexed.
    pub fn delete_tracked(&self, set: EdgeSet) -> Result<TrackedMinor> {
        if !set.is_subset(self.graph.all_edges()) {
            return Err(Error::UnknownEdge(
                set.iter().find(|&e| e >= self.m()).unwrap_or(self.m()),
            ));
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        let mut sigma = EdgeSet::EMPTY;
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if set.contains(e) {
                continue;
            }
            if self.sigma.contains(e) {
                sigma.insert(edges.len());
            }
            edge_map.push(e);
            edges.push((u, v));
        }
        let graph = Multigraph::new(self.n(), edges)?;
        Ok(TrackedMinor {
            graft: SignedGraft { graph, sigma, terminals: self.terminals },
            edge_map,
            vertex_map: (0..self.n()).collect(),
            resign_shore: VertexSet::EMPTY,
        })
    }

    /// Contract an even non-loop edge, merging its endpoints and applying
    /// the terminal relabeling rule.
    pub fn contract(&self, e: usize) -> Result<SignedGraft> {
        Ok(self.contract_tracked(e)?.graft)
    }

    fn contract_tracked(&self, e: usize) -> Result<TrackedMinor> {
        if e >= self.m() {
            return Err(Error::UnknownEdge(e));
        }
        let (u, v) = self.graph.ends(e);
        if u == v {
            return Err(Error::ContractLoop(e));
        }
        if self.sigma.contains(e) {
            return Err(Error::MustResignFirst(e));
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let vmap = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut terminals = VertexSet::EMPTY;
        let tu = self.terminals.contains(u);
        let tv = self.terminals.contains(v);
        for t in self.terminals.iter() {
            if t == u || t == v {
                continue;
            }
            terminals.insert(vmap(t));
        }
        if tu != tv {
            terminals.insert(keep);
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        let mut sigma = EdgeSet::EMPTY;
        for (f, &(a, b)) in self.graph.edges().iter().enumerate() {
            if f == e {
                continue;
            }
            if self.sigma.contains(f) {
                sigma.insert(edges.len());
            }
            edge_map.push(f);
            edges.push((vmap(a), vmap(b)));
        }
        let graph = Multigraph::new(self.n() - 1, edges)?;
        let mut vertex_map = Vec::with_capacity(self.n() - 1);
        for w in 0..self.n() {
            if w != gone {
                vertex_map.push(w);
            }
        }
        // vertex keep in the minor corresponds to the merged pair; record
        // the smaller original id
        Ok(TrackedMinor {
            graft: SignedGraft { graph, sigma, terminals },
            edge_map,
            vertex_map,
            resign_shore: VertexSet::EMPTY,
        })
    }

    /// Contract an odd non-loop edge by first resigning at one endpoint
    /// when a legal shore exists (explicit opt-in; `contract` errors).
    pub fn contract_resigning(&self, e: usize) -> Result<SignedGraft> {
        if e >= self.m() {
            return Err(Error::UnknownEdge(e));
        }
        if !self.sigma.contains(e) {
            return self.contract(e);
        }
        let (u, v) = self.graph.ends(e);
        if u == v {
            return Err(Error::ContractLoop(e));
        }
        for cand in [u.min(v), u.max(v)] {
            let shore = VertexSet::singleton(cand);
            if shore.inter(self.terminals).len() % 2 == 0 {
                return self.resign(shore)?.contract(e);
            }
        }
        Err(Error::MustResignFirst(e))
    }

    /// The minor (G,Σ,T) \ delete / contract: deletions first, then the
    /// lexicographically least resigning that makes the contraction set
    /// all-even, then contractions.
    pub fn take_minor(&self, delete: EdgeSet, contract: EdgeSet) -> Result<SignedGraft> {
        Ok(self.take_minor_tracked(delete, contract)?.graft)
    }

    pub fn take_minor_tracked(&self, delete: EdgeSet, contract: EdgeSet) -> Result<TrackedMinor> {
        if !delete.is_disjoint(contract) {
            return Err(Error::MinorOverlap);
        }
        let deleted = self.delete_tracked(delete)?;
        // contract ids in the deleted graft's labeling
        let mut con = EdgeSet::EMPTY;
        for (new, &old) in deleted.edge_map.iter().enumerate() {
            if contract.contains(old) {
                con.insert(new);
            }
        }
        if contract
            .iter()
            .any(|e| e >= self.m())
        {
            return Err(Error::UnknownEdge(self.m()));
        }
        let g1 = &deleted.graft;
        let shore = g1.least_resign_shore_for(con).ok_or(Error::NotAValidMinor)?;
        let resigned = g1.resign(shore)?;
        // contract ascending; an edge that has become an even loop is
        // dropped (contraction of an even circuit leaves even loops, and
        // contracting an even loop is deleting it)
        let mut cur = TrackedMinor {
            graft: resigned,
            edge_map: deleted.edge_map.clone(),
            vertex_map: deleted.vertex_map.clone(),
            resign_shore: shore,
        };
        loop {
            let next = cur
                .graft
                .graph
                .edges()
                .iter()
                .enumerate()
                .find(|(e, _)| contract.contains(cur.edge_map[*e]))
                .map(|(e, _)| e);
            let Some(e) = next else { break };
            if cur.graft.sigma.contains(e) {
                return Err(Error::NotAValidMinor);
            }
            let step = if cur.graft.graph.is_loop(e) {
                cur.graft.delete_tracked(EdgeSet::singleton(e))?
            } else {
                cur.graft.contract_tracked(e)?
            };
            cur = TrackedMinor {
                edge_map: step.edge_map.iter().map(|&x| cur.edge_map[x]).collect(),
                vertex_map: step.vertex_map.iter().map(|&x| cur.vertex_map[x]).collect(),
                graft: step.graft,
                resign_shore: cur.resign_shore,
            };
        }
        Ok(cur)
    }

    /// Lexicographically least shore U with |U∩T| even whose resigning
    /// makes every edge of `con` even, if any.
    fn least_resign_shore_for(&self, con: EdgeSet) -> Option<VertexSet> {
        // feasibility first (labeling per component of `con`)
        if !self.resign_feasible(con) {
            return None;
        }
        let n = self.n();
        assert!(n <= 24, "minor shore search is desk scale");
        fn rec(sg: &SignedGraft, con: EdgeSet, cur: VertexSet, from: usize) -> Option<VertexSet> {
            if sg.shore_valid_for(con, cur) {
                return Some(cur);
            }
            for v in from..sg.n() {
                let mut ext = cur;
                ext.insert(v);
                if let Some(found) = rec(sg, con, ext, v + 1) {
                    return Some(found);
                }
            }
            None
        }
        rec(self, con, VertexSet::EMPTY, 0)
    }

    fn shore_valid_for(&self, con: EdgeSet, shore: VertexSet) -> bool {
        if shore.inter(self.terminals).len() % 2 != 0 {
            return false;
        }
        let cut = self.graph.cut(shore).unwrap();
        self.sigma.symdiff(cut).inter(con).is_empty()
    }

    fn resign_feasible(&self, con: EdgeSet) -> bool {
        // solvable iff `con` has no odd circuit and no odd T-join inside
        let mut rows: Vec<(u128, bool)> = Vec::new();
        for e in con.iter() {
            let (u, v) = self.graph.ends(e);
            if u == v {
                if self.sigma.contains(e) {
                    return false;
                }
                continue;
            }
            rows.push(((1u128 << u) | (1u128 << v), self.sigma.contains(e)));
        }
        let mut trow = 0u128;
        for t in self.terminals.iter() {
            trow |= 1u128 << t;
        }
        rows.push((trow, false));
        gf2::reduce(rows, self.n()).consistent()
    }

    /// Drop isolated non-terminal vertices (they carry no structure).
    pub fn drop_isolated_nonterminals(&self) -> SignedGraft {
        let g = &self.graph;
        let mut keep: Vec<usize> = Vec::new();
        for v in 0..g.n() {
            if self.terminals.contains(v) || !g.incident(v).is_empty() {
                keep.push(v);
            }
        }
        if keep.len() == g.n() {
            return self.clone();
        }
        let mut newid = vec![usize::MAX; g.n()];
        for (i, &v) in keep.iter().enumerate() {
            newid[v] = i;
        }
        let edges = g
            .edges()
            .iter()
            .map(|&(u, v)| (newid[u], newid[v]))
            .collect();
        let terminals = VertexSet::from_ids(self.terminals.iter().map(|t| newid[t]));
        SignedGraft {
            graph: Multigraph::new(keep.len(), edges).unwrap(),
            sigma: self.sigma,
            terminals,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn triangle_graft(sigma: &[usize]) -> SignedGraft {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        SignedGraft::new(g, EdgeSet::from_ids(sigma.iter().copied()), VertexSet::EMPTY).unwrap()
    }

    #[test]
    fn odd_tjoin_checks_on_k5tilde() {
        let sg = k5tilde();
        // a triangle: 3 odd edges, T = ∅
        let tri = EdgeSet::from_ids([0, 4, 1]); // 01, 12, 02
        assert!(sg.is_odd_tjoin(tri));
        // a 4-circuit has even intersection
        let quad = EdgeSet::from_ids([0, 4, 7, 2]); // 01,12,23,03
        assert!(sg.graph().is_cycle(quad));
        assert!(!sg.is_odd_tjoin(quad));
    }

    #[test]
    fn st_path_with_empty_sigma_is_not_odd() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::EMPTY, VertexSet::from_ids([0, 1])).unwrap();
        assert!(!sg.is_odd_tjoin(EdgeSet::singleton(0)));
        assert!(!sg.has_odd_tjoin());
    }

    #[test]
    fn minimal_odd_tjoins_of_k5tilde_are_triangles_and_pentagons() {
        let sg = k5tilde();
        let joins = sg.minimal_odd_tjoins();
        assert_eq!(joins.len(), 22);
        let tri = joins.iter().filter(|j| j.len() == 3).count();
        let penta = joins.iter().filter(|j| j.len() == 5).count();
        assert_eq!((tri, penta), (10, 12));
    }

    #[test]
    fn no_odd_set_when_sigma_and_terminals_empty() {
        let sg = triangle_graft(&[]);
        assert!(sg.minimal_odd_tjoins().is_empty());
        assert!(!sg.has_odd_tjoin());
    }

    #[test]
    fn resign_empty_shore_is_identity() {
        let sg = triangle_graft(&[0]);
        let r = sg.resign(VertexSet::EMPTY).unwrap();
        assert_eq!(r.sigma(), sg.sigma());
    }

    #[test]
    fn resign_triangle_at_vertex() {
        // Σ = {ab}, resign at {a}: Σ△δ(a) = {ab}△{ab,ca} = {ca}
        let sg = triangle_graft(&[0]);
        let r = sg.resign(VertexSet::singleton(0)).unwrap();
        assert_eq!(r.sigma(), EdgeSet::from_ids([2]));
    }

    #[test]
    fn resign_preserves_odd_tjoins() {
        let sg = k5tilde();
        let before = sg.minimal_odd_tjoins();
        let after = sg.resign(VertexSet::singleton(0)).unwrap().minimal_odd_tjoins();
        assert_eq!(before, after);
    }

    #[test]
    fn resign_rejects_odd_terminal_shore() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::EMPTY, VertexSet::from_ids([0, 1])).unwrap();
        assert!(matches!(
            sg.resign(VertexSet::singleton(0)),
            Err(Error::InvalidResign)
        ));
    }

    #[test]
    fn contract_terminal_rules() {
        // path a-b-c, contract even edge ab with a terminal
        let g = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::singleton(1), VertexSet::from_ids([0, 2])).unwrap();
        let c = sg.contract(0).unwrap();
        // merged vertex (0) keeps terminal status; vertex 2 shifts to 1
        assert_eq!(c.terminals(), VertexSet::from_ids([0, 1]));

        // both endpoints terminal: merged vertex is not a terminal
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::EMPTY, VertexSet::from_ids([0, 1])).unwrap();
        let c = sg.contract(0).unwrap();
        assert!(c.terminals().is_empty());
    }

    #[test]
    fn contract_rejects_odd_edge_and_loop() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 0)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::singleton(0), VertexSet::EMPTY).unwrap();
        assert!(matches!(sg.contract(0), Err(Error::MustResignFirst(0))));
        assert!(matches!(sg.contract(1), Err(Error::ContractLoop(1))));
        // opt-in auto resign succeeds on the odd edge
        assert!(sg.contract_resigning(0).is_ok());
    }

    #[test]
    fn delete_from_k5tilde() {
        let sg = k5tilde();
        let d = sg.delete(0).unwrap();
        assert_eq!(d.m(), 9);
        assert_eq!(d.sigma().len(), 9);
        assert!(d.terminals().is_empty());
    }

    #[test]
    fn take_minor_identity() {
        let sg = k5tilde();
        let m = sg.take_minor(EdgeSet::EMPTY, EdgeSet::EMPTY).unwrap();
        assert_eq!(m.m(), 10);
    }

    #[test]
    fn take_minor_contract_after_resign() {
        let sg = k5tilde();
        // every edge is odd: contracting any single edge forces a resign
        let m = sg.take_minor(EdgeSet::EMPTY, EdgeSet::singleton(0)).unwrap();
        assert_eq!(m.n(), 4);
        assert_eq!(m.m(), 9);
        let before: Vec<_> = sg.minimal_odd_tjoins();
        assert!(!before.is_empty());
        assert!(!m.minimal_odd_tjoins().is_empty());
    }

    #[test]
    fn take_minor_rejects_odd_triangle_contraction() {
        let sg = k5tilde();
        let tri = EdgeSet::from_ids([0, 4, 1]);
        assert!(sg.is_odd(tri) && sg.graph().is_circuit(tri));
        assert!(matches!(
            sg.take_minor(EdgeSet::EMPTY, tri),
            Err(Error::NotAValidMinor)
        ));
    }

    #[test]
    fn eulerian_examples() {
        assert!(k5tilde().is_eulerian());
        // K4 all odd, T = ∅: degrees are 3 at non-terminals
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let all = g.all_edges();
        let k4 = SignedGraft::new(g, all, VertexSet::EMPTY).unwrap();
        assert!(!k4.is_eulerian());
        // two parallel odd st-edges: terminals have even degree, |Σ| even
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let all = g.all_edges();
        let sg = SignedGraft::new(g, all, VertexSet::from_ids([0, 1])).unwrap();
        assert!(sg.is_eulerian());
    }

    #[test]
    fn classify_cover_examples() {
        let sg = k5tilde();
        // Σ△δ(U) is always a signature
        let shore = VertexSet::from_ids([1, 3]);
        let b = sg.sigma().symdiff(sg.graph().cut(shore).unwrap());
        assert_eq!(sg.classify_cover(b), CoverKind::Signature);

        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let sg = SignedGraft::new(g, EdgeSet::singleton(0), VertexSet::from_ids([0, 2])).unwrap();
        let tcut = sg.graph().cut(VertexSet::singleton(0)).unwrap();
        assert!(matches!(
            sg.classify_cover(tcut),
            CoverKind::TCut | CoverKind::Both
        ));
    }

    #[test]
    fn bipartite_part_checks() {
        let sg = k5tilde();
        // forests are bipartite
        let forest = EdgeSet::from_ids([0, 1, 2]);
        assert!(sg.is_bipartite_part(forest));
        // an odd triangle is not
        let tri = EdgeSet::from_ids([0, 4, 1]);
        assert!(!sg.is_bipartite_part(tri));
        // an even circuit alone is fine
        let quad = EdgeSet::from_ids([0, 4, 7, 2]);
        assert!(sg.is_bipartite_part(quad));
    }

    #[test]
    fn cover_parity_functional() {
        // |cut(U) ∩ J| is odd iff |U ∩ T| is odd, for every T-join J
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let t = VertexSet::from_ids([0, 2]);
        for mask in 0u64..1 << 4 {
            let shore = VertexSet(mask);
            let cut = g.cut(shore).unwrap();
            for emask in 0u32..1 << g.m() {
                let s = EdgeSet(emask as u128);
                if g.odd_vertices(s) != t {
                    continue;
                }
                assert_eq!(
                    cut.odd_inter(s),
                    shore.inter(t).len() % 2 == 1,
                    "shore {shore:?} join {s:?}"
                );
            }
        }
    }
}
