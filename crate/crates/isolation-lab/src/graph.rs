//! Immutable small-graph representation and the structural primitives
//! (neighborhoods, connectivity, blocks, cut vertices) everything else
//! consumes. Graphs are capped at 64 vertices so a vertex set is a single
//! machine word.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Maximum supported graph order. Keeps [`VertexSet`] a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices of one graph, stored as a 64-bit mask.
///
/// All set bits must be below the order of the graph the set belongs to;
/// operations taking a `VertexSet` validate this.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Members as a sorted vector, the canonical external form.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Serializes as the sorted list of member indices.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An immutable simple undirected graph on densely indexed vertices
/// `0..n`, `n <= 64`, with one adjacency mask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize {
                what: "graph order",
                requested: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Rejects self-loops and
    /// out-of-range endpoints; duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, order: n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    /// Internal constructor from adjacency masks. Debug-asserts symmetry
    /// and the absence of self-loops.
    pub(crate) fn from_adj(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edge_count = 0;
        for (v, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & !VertexSet::full(n).bits(), 0);
            debug_assert_eq!(row & (1u64 << v), 0, "self-loop at {v}");
            edge_count += row.count_ones() as usize;
        }
        for u in 0..n {
            for v in (u + 1)..n {
                debug_assert_eq!(
                    adj[u] >> v & 1,
                    adj[v] >> u & 1,
                    "asymmetric adjacency at ({u},{v})"
                );
            }
        }
        Graph {
            n,
            adj,
            edge_count: edge_count / 2,
        }
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u] & (1u64 << v) == 0 {
            self.adj[u] |= 1u64 << v;
            self.adj[v] |= 1u64 << u;
            self.edge_count += 1;
        }
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path order within bounds")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle order within bounds")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete order within bounds")
    }

    /// The star `K_{1,k}`: vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star order within bounds")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Open neighborhood of `v` as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            let above = self.adj[u] & !VertexSet::full(u + 1).bits();
            for v in VertexSet(above).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                order: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        let stray = s.difference(self.vertex_set());
        match stray.min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                index: v,
                order: self.n,
            }),
        }
    }

    /// `N[s]`: `s` together with every neighbor of a member of `s`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, s: VertexSet) -> VertexSet {
        let mut out = s.bits();
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// `N[v]` for a single vertex.
    pub fn closed_neighborhood_of(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | (1u64 << v)))
    }

    /// True iff no edge of the graph has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_independent_unchecked(s))
    }

    pub(crate) fn is_independent_unchecked(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Connectivity by mask-expansion from vertex 0. The empty graph and
    /// the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = self.vertex_set().bits();
        let mut seen = 1u64;
        loop {
            let mut next = seen;
            for v in VertexSet(seen).iter() {
                next |= self.adj[v];
            }
            if next == seen {
                return seen == all;
            }
            seen = next;
        }
    }

    /// Connected with `|E| = n - 1`. The empty graph is rejected.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count == self.n - 1
    }

    /// Connected with exactly one cycle, i.e. `|E| = n`.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count == self.n
    }

    /// Connected and every block induces a complete graph.
    pub fn is_block_graph(&self) -> bool {
        if self.n == 0 || !self.is_connected() {
            return false;
        }
        let dec = self
            .block_decomposition()
            .expect("connectivity checked above");
        dec.blocks().iter().all(|&b| {
            let k = b.len();
            let internal: usize = b.iter().map(|v| (self.adj[v] & b.bits()).count_ones() as usize).sum();
            internal / 2 == k * (k - 1) / 2
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices of degree 1.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to a leaf.
    pub fn support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.n)
            .filter(|&v| self.adj[v] & leaves.bits() != 0)
            .collect()
    }

    /// Vertices whose closed neighborhood induces a complete graph.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| {
                let nv = self.adj[v];
                VertexSet(nv).iter().all(|u| nv & !self.adj[u] & !(1u64 << u) == 0)
            })
            .collect()
    }

    /// The standard biconnected-component decomposition of a connected
    /// graph. Fails on disconnected input. The one-vertex graph has a
    /// single vertex-only block.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                context: "block decomposition",
            });
        }
        if self.n == 0 {
            return Ok(BlockDecomposition {
                blocks: Vec::new(),
                cut_vertices: VertexSet::EMPTY,
                block_of_edge: HashMap::new(),
            });
        }
        if self.n == 1 {
            return Ok(BlockDecomposition {
                blocks: vec![VertexSet::singleton(0)],
                cut_vertices: VertexSet::EMPTY,
                block_of_edge: HashMap::new(),
            });
        }

        // Hopcroft-Tarjan with an explicit edge stack; when a child's
        // low point reaches the parent's discovery time, everything above
        // the tree edge on the stack is one block.
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            blocks: Vec<Vec<(usize, usize)>>,
        }
        impl Dfs<'_> {
            fn go(&mut self, v: usize, parent: Option<usize>) {
                self.time += 1;
                self.disc[v] = self.time;
                self.low[v] = self.time;
                for u in self.g.neighbors(v).iter() {
                    if self.disc[u] == 0 {
                        self.stack.push((v, u));
                        self.go(u, Some(v));
                        self.low[v] = self.low[v].min(self.low[u]);
                        if self.low[u] >= self.disc[v] {
                            let at = self
                                .stack
                                .iter()
                                .rposition(|&e| e == (v, u))
                                .expect("tree edge on stack");
                            self.blocks.push(self.stack.split_off(at));
                        }
                    } else if Some(u) != parent && self.disc[u] < self.disc[v] {
                        self.stack.push((v, u));
                        self.low[v] = self.low[v].min(self.disc[u]);
                    }
                }
            }
        }

        let mut dfs = Dfs {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        dfs.go(0, None);
        debug_assert!(dfs.stack.is_empty());

        let mut blocks: Vec<(VertexSet, Vec<(usize, usize)>)> = dfs
            .blocks
            .into_iter()
            .map(|edges| {
                let mut vs = VertexSet::EMPTY;
                let norm: Vec<_> = edges
                    .into_iter()
                    .map(|(u, v)| {
                        vs.insert(u);
                        vs.insert(v);
                        (u.min(v), u.max(v))
                    })
                    .collect();
                (vs, norm)
            })
            .collect();
        blocks.sort_by_key(|(vs, _)| *vs);

        let mut membership = vec![0u32; self.n];
        let mut block_of_edge = HashMap::new();
        for (i, (vs, edges)) in blocks.iter().enumerate() {
            for v in vs.iter() {
                membership[v] += 1;
            }
            for &e in edges {
                let prev = block_of_edge.insert(e, i);
                debug_assert!(prev.is_none(), "edge {e:?} in two blocks");
            }
        }
        let cut_vertices = (0..self.n).filter(|&v| membership[v] >= 2).collect();

        Ok(BlockDecomposition {
            blocks: blocks.into_iter().map(|(vs, _)| vs).collect(),
            cut_vertices,
            block_of_edge,
        })
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()` in
    /// ascending order of the original indices. Returns the graph and the
    /// new-to-old index map.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        let old: Vec<usize> = keep.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph::empty(old.len()).expect("induced order within bounds");
        for (i, &v) in old.iter().enumerate() {
            for u in VertexSet(self.adj[v] & keep.bits()).iter() {
                if new_of[u] > i {
                    g.add_edge_mut(i, new_of[u]);
                }
            }
        }
        Ok((g, old))
    }

    /// The graph with vertex `v` renamed to `perm[v]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation length {} does not match order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::InvalidArgument(format!("duplicate image {p}")));
            }
            seen.insert(p);
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in self.neighbors(v).iter() {
                adj[perm[v]] |= 1u64 << perm[u];
            }
        }
        Ok(Graph::from_adj(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Edge-list debug form, e.g. `Graph(n=3; 0-1 1-2)`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={};", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// Result of [`Graph::block_decomposition`].
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
    block_of_edge: HashMap<(usize, usize), usize>,
}

impl BlockDecomposition {
    /// The maximal biconnected pieces, each as a vertex set, sorted by
    /// their masks.
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Vertices lying in at least two blocks.
    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_vertices
    }

    /// Index into [`Self::blocks`] of the unique block containing the edge.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.block_of_edge.get(&(u.min(v), u.max(v))).copied()
    }

    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].intersection(self.cut_vertices).len() <= 1)
            .collect()
    }

    /// Number of end-blocks the vertex belongs to.
    pub fn end_block_count_at(&self, v: usize) -> usize {
        self.end_blocks()
            .into_iter()
            .filter(|&i| self.blocks[i].contains(v))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhood_on_cycle_singleton() {
        let g = Graph::cycle(5);
        for v in 0..5 {
            let n = g.closed_neighborhood(VertexSet::singleton(v)).unwrap();
            assert_eq!(n.len(), 3);
            assert!(n.contains(v));
        }
    }

    #[test]
    fn closed_neighborhood_empty_set() {
        let g = Graph::cycle(5);
        assert_eq!(
            g.closed_neighborhood(VertexSet::EMPTY).unwrap(),
            VertexSet::EMPTY
        );
    }

    #[test]
    fn closed_neighborhood_complete() {
        let g = Graph::complete(4);
        let n = g.closed_neighborhood(VertexSet::singleton(0)).unwrap();
        assert_eq!(n, g.vertex_set());
    }

    #[test]
    fn closed_neighborhood_rejects_stray_indices() {
        let g = Graph::path(3);
        let err = g
            .closed_neighborhood(VertexSet::singleton(7))
            .unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { index: 7, order: 3 });
    }

    #[test]
    fn independence_basics() {
        let k2 = Graph::complete(2);
        assert!(!k2.is_independent(VertexSet::full(2)).unwrap());
        assert!(k2.is_independent(VertexSet::EMPTY).unwrap());
        let c5 = Graph::cycle(5);
        assert!(c5
            .is_independent([0usize, 2].into_iter().collect())
            .unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(6).is_connected());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn classification_predicates() {
        let p3 = Graph::path(3);
        assert!(p3.is_tree());
        assert!(!p3.is_unicyclic());
        assert!(p3.is_block_graph());

        let mut edges = Graph::cycle(5).edges();
        edges.push((0, 5));
        let tadpole = Graph::from_edges(6, &edges).unwrap();
        assert!(tadpole.is_unicyclic());

        let mut k4e = Graph::complete(4).edges();
        k4e.push((0, 4));
        let k4_pendant = Graph::from_edges(5, &k4e).unwrap();
        assert!(k4_pendant.is_block_graph());
        assert!(!Graph::cycle(4).is_block_graph());

        let empty = Graph::empty(0).unwrap();
        assert!(!empty.is_tree());
        assert!(!empty.is_unicyclic());
        assert!(!empty.is_block_graph());
    }

    #[test]
    fn blocks_of_path() {
        let dec = Graph::path(4).block_decomposition().unwrap();
        assert_eq!(dec.blocks().len(), 3);
        assert_eq!(dec.cut_vertices().to_vec(), vec![1, 2]);
        assert!(dec.blocks().iter().all(|b| b.len() == 2));
    }

    #[test]
    fn blocks_of_complete() {
        let dec = Graph::complete(5).block_decomposition().unwrap();
        assert_eq!(dec.blocks().len(), 1);
        assert!(dec.cut_vertices().is_empty());
    }

    #[test]
    fn blocks_of_bowtie() {
        // two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let dec = g.block_decomposition().unwrap();
        assert_eq!(dec.blocks().len(), 2);
        assert_eq!(dec.cut_vertices().to_vec(), vec![0]);
        assert_eq!(dec.block_of_edge(1, 2), dec.block_of_edge(0, 1));
        assert_ne!(dec.block_of_edge(1, 2), dec.block_of_edge(3, 4));
    }

    #[test]
    fn blocks_of_single_vertex() {
        let dec = Graph::empty(1).unwrap().block_decomposition().unwrap();
        assert_eq!(dec.blocks().len(), 1);
        assert!(dec.cut_vertices().is_empty());
    }

    #[test]
    fn block_decomposition_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            g.block_decomposition(),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn leaves_supports_simplicial() {
        let star = Graph::star(3);
        assert_eq!(star.leaves().to_vec(), vec![1, 2, 3]);
        assert_eq!(star.support_vertices().to_vec(), vec![0]);

        assert!(Graph::cycle(6).leaves().is_empty());
        assert_eq!(Graph::complete(4).simplicial_vertices().len(), 4);

        // leaves are always simplicial
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(g.leaves().is_subset(g.simplicial_vertices()));
    }

    #[test]
    fn end_blocks_of_long_path() {
        let dec = Graph::path(5).block_decomposition().unwrap();
        assert_eq!(dec.end_blocks().len(), 2);
    }

    #[test]
    fn induced_subgraph_keeps_structure() {
        let g = Graph::cycle(6);
        let (sub, old) = g.induced([0usize, 1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(old, vec![0, 1, 2, 3]);
        assert_eq!(sub.edge_count(), 3); // the path 0-1-2-3
        assert!(sub.is_tree());
    }

    #[test]
    fn relabel_is_isomorphic_inverse() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let perm = vec![2, 0, 3, 1];
        let h = g.relabel(&perm).unwrap();
        assert_eq!(h.edge_count(), g.edge_count());
        let mut inv = vec![0; 4];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        assert_eq!(h.relabel(&inv).unwrap(), g);
    }

    #[test]
    fn max_order_graph() {
        let g = Graph::complete(64);
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert!(g.is_connected());
        assert_eq!(g.vertex_set().len(), 64);
    }
}
