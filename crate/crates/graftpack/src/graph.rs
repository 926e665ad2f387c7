//! Undirected multigraph substrate: dense vertex/edge ids, loops and
//! parallel edges first class, GF(2) algebra on edge subsets.
//!
//! Edge ids, not endpoint pairs, identify edges everywhere: with parallel
//! edges an endpoint pair is ambiguous. A loop contributes 2 to its
//! endpoint's degree and lies in no cut.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on the edge ground set (edge sets are 128-bit masks).
pub const MAX_EDGES: usize = 128;
/// Hard cap on vertex count (vertex sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;

/// Subset of edge ids of one graph, with bitset semantics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> EdgeSet {
        let mut s = 0u128;
        for i in ids {
            debug_assert!(i < MAX_EDGES);
            s |= 1u128 << i;
        }
        EdgeSet(s)
    }

    pub fn full(m: usize) -> EdgeSet {
        debug_assert!(m <= MAX_EDGES);
        if m == 128 {
            EdgeSet(!0)
        } else {
            EdgeSet((1u128 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> EdgeSet {
        EdgeSet(1u128 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u128 << e);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn inter(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn minus(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symdiff(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Parity of |self ∩ other|.
    pub fn odd_inter(self, other: EdgeSet) -> bool {
        (self.0 & other.0).count_ones() % 2 == 1
    }

    pub fn ids(self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            v.push(i);
            bits &= bits - 1;
        }
        v
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

// Lexicographic on the sorted id sequence (shorter prefix first); the
// crate-wide tie-breaking order.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.0 == other.0 {
            return std::cmp::Ordering::Equal;
        }
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let ia = a.trailing_zeros();
            let ib = b.trailing_zeros();
            if ia != ib {
                return ia.cmp(&ib);
            }
            a &= a - 1;
            b &= b - 1;
        }
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, id) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

/// Subset of vertex ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> VertexSet {
        let mut s = 0u64;
        for i in ids {
            debug_assert!(i < MAX_VERTICES);
            s |= 1u64 << i;
        }
        VertexSet(s)
    }

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn inter(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn symdiff(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn ids(self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            v.push(i);
            bits &= bits - 1;
        }
        v
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.0 == other.0 {
            return std::cmp::Ordering::Equal;
        }
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let ia = a.trailing_zeros();
            let ib = b.trailing_zeros();
            if ia != ib {
                return ia.cmp(&ib);
            }
            a &= a - 1;
            b &= b - 1;
        }
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, id) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

/// Labeled undirected multigraph. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    ends: Vec<(usize, usize)>,
    // incident (edge, other endpoint); a loop appears once as (e, v)
    adj: Vec<Vec<(usize, usize)>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.ends)
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { got: n, max: MAX_VERTICES });
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::TooLarge { got: edges.len(), max: MAX_EDGES });
        }
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                adj[u].push((e, v));
            } else {
                adj[u].push((e, v));
                adj[v].push((e, u));
            }
        }
        Ok(Multigraph { n, ends: edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.ends[e];
        u == v
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Degree of `v`; a loop counts 2.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v]
            .iter()
            .map(|&(e, _)| if self.is_loop(e) { 2 } else { 1 })
            .sum()
    }

    /// δ(U): edges with exactly one endpoint in U. Loops never qualify.
    pub fn cut(&self, shore: VertexSet) -> Result<EdgeSet> {
        if !shore.is_subset(self.all_vertices()) {
            return Err(Error::UnknownVertex(
                shore.iter().find(|&v| v >= self.n).unwrap_or(self.n),
            ));
        }
        let mut out = EdgeSet::EMPTY;
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if shore.contains(u) != shore.contains(v) {
                out.insert(e);
            }
        }
        Ok(out)
    }

    /// Vertices with odd degree in the subgraph induced by `s`.
    /// Loops are degree-even and never contribute.
    pub fn odd_vertices(&self, s: EdgeSet) -> VertexSet {
        let mut parity = VertexSet::EMPTY;
        for e in s.iter() {
            let (u, v) = self.ends[e];
            if u != v {
                parity = parity.symdiff(VertexSet::singleton(u));
                parity = parity.symdiff(VertexSet::singleton(v));
            }
        }
        parity
    }

    /// Endpoints of the edges in `s`.
    pub fn support(&self, s: EdgeSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in s.iter() {
            let (u, v) = self.ends[e];
            out.insert(u);
            out.insert(v);
        }
        out
    }

    /// All vertices have even degree in the subgraph induced by `s`.
    pub fn is_cycle(&self, s: EdgeSet) -> bool {
        self.odd_vertices(s).is_empty()
    }

    /// Connected and every vertex of the induced subgraph has degree two.
    /// A single loop is a circuit; the empty set is not.
    pub fn is_circuit(&self, s: EdgeSet) -> bool {
        if s.is_empty() {
            return false;
        }
        let mut deg = vec![0usize; self.n];
        for e in s.iter() {
            let (u, v) = self.ends[e];
            deg[u] += if u == v { 2 } else { 1 };
            deg[v] += if u == v { 0 } else { 1 };
        }
        let verts = self.support(s);
        if verts.iter().any(|v| deg[v] != 2) {
            return false;
        }
        self.edge_subgraph_connected(s)
    }

    /// The odd-degree vertex set of g[s] equals `t` exactly.
    pub fn is_tjoin(&self, s: EdgeSet, t: VertexSet) -> Result<bool> {
        if t.len() % 2 != 0 {
            return Err(Error::OddTerminalCount);
        }
        Ok(self.odd_vertices(s) == t)
    }

    fn edge_subgraph_connected(&self, s: EdgeSet) -> bool {
        let verts = self.support(s);
        let Some(start) = verts.iter().next() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(e, w) in &self.adj[u] {
                if s.contains(e) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen == verts
    }

    /// Partition of all vertices into connected components, each sorted,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(_, w) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn component_labels(&self) -> Vec<usize> {
        let comps = self.components();
        let mut label = vec![0usize; self.n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                label[v] = i;
            }
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All simple s–t paths as edge sets, lexicographic by edge-id sequence.
    /// For s == t the unique path is the empty one.
    pub fn st_paths(&self, s: usize, t: usize) -> Result<Vec<EdgeSet>> {
        if s >= self.n {
            return Err(Error::UnknownVertex(s));
        }
        if t >= self.n {
            return Err(Error::UnknownVertex(t));
        }
        if s == t {
            return Ok(vec![EdgeSet::EMPTY]);
        }
        let mut out = Vec::new();
        let mut visited = VertexSet::singleton(s);
        let mut path = EdgeSet::EMPTY;
        self.path_dfs(s, t, &mut visited, &mut path, &mut out);
        Ok(out)
    }

    fn path_dfs(
        &self,
        u: usize,
        t: usize,
        visited: &mut VertexSet,
        path: &mut EdgeSet,
        out: &mut Vec<EdgeSet>,
    ) {
        let mut inc: Vec<(usize, usize)> = self.adj[u].to_vec();
        inc.sort_unstable();
        for (e, w) in inc {
            if w == u || visited.contains(w) {
                continue;
            }
            path.insert(e);
            if w == t {
                out.push(*path);
            } else {
                visited.insert(w);
                self.path_dfs(w, t, visited, path, out);
                *visited = VertexSet(visited.0 & !(1u64 << w));
            }
            path.remove(e);
        }
    }

    /// All circuits as edge sets.
    ///
    /// Each non-loop circuit is discovered once: start at its smallest
    /// vertex, walk over vertices no smaller than it, and keep the
    /// traversal whose first edge id is below its closing edge id.
    pub fn circuits(&self) -> Vec<EdgeSet> {
        let mut out: Vec<EdgeSet> = self
            .ends
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == v)
            .map(|(e, _)| EdgeSet::singleton(e))
            .collect();
        for v0 in 0..self.n {
            let mut visited = VertexSet::singleton(v0);
            let mut path = EdgeSet::EMPTY;
            self.circuit_dfs(v0, v0, usize::MAX, &mut visited, &mut path, &mut out);
        }
        out.sort();
        out
    }

    fn circuit_dfs(
        &self,
        u: usize,
        v0: usize,
        first_edge: usize,
        visited: &mut VertexSet,
        path: &mut EdgeSet,
        out: &mut Vec<EdgeSet>,
    ) {
        let mut inc: Vec<(usize, usize)> = self.adj[u].to_vec();
        inc.sort_unstable();
        for (e, w) in inc {
            if w == u || path.contains(e) {
                continue;
            }
            if w == v0 {
                if !path.is_empty() && e > first_edge {
                    let mut circ = *path;
                    circ.insert(e);
                    out.push(circ);
                }
                continue;
            }
            if w < v0 || visited.contains(w) {
                continue;
            }
            let fe = if path.is_empty() { e } else { first_edge };
            path.insert(e);
            visited.insert(w);
            self.circuit_dfs(w, v0, fe, visited, path, out);
            *visited = VertexSet(visited.0 & !(1u64 << w));
            path.remove(e);
        }
    }

    /// Greedily peel circuits off a cycle; returns the decomposition or
    /// None if `s` is not a cycle.
    pub fn peel_circuits(&self, s: EdgeSet) -> Option<Vec<EdgeSet>> {
        if !self.is_cycle(s) {
            return None;
        }
        let mut rest = s;
        let mut parts = Vec::new();
        while !rest.is_empty() {
            let circ = self.find_circuit_within(rest)?;
            parts.push(circ);
            rest = rest.minus(circ);
        }
        Some(parts)
    }

    /// Some circuit contained in `s`, if any: a spanning forest of s plus
    /// the first non-tree edge closes one.
    pub fn find_circuit_within(&self, s: EdgeSet) -> Option<EdgeSet> {
        for e in s.iter() {
            if self.is_loop(e) {
                return Some(EdgeSet::singleton(e));
            }
        }
        let mut parent_edge = vec![usize::MAX; self.n];
        let mut parent_vertex = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        let mut tree = EdgeSet::EMPTY;
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(e, w) in &self.adj[u] {
                    if !s.contains(e) || self.is_loop(e) || seen[w] {
                        continue;
                    }
                    seen[w] = true;
                    parent_edge[w] = e;
                    parent_vertex[w] = u;
                    tree.insert(e);
                    stack.push(w);
                }
            }
        }
        let path_to_root = |mut x: usize| {
            let mut path = EdgeSet::EMPTY;
            while parent_edge[x] != usize::MAX {
                path.insert(parent_edge[x]);
                x = parent_vertex[x];
            }
            path
        };
        for e in s.iter() {
            if tree.contains(e) {
                continue;
            }
            let (u, v) = self.ends[e];
            // the tree path between u and v is the symmetric difference of
            // their root paths (same component, same root)
            let mut circ = path_to_root(u).symdiff(path_to_root(v));
            circ.insert(e);
            return Some(circ);
        }
        None
    }
}
