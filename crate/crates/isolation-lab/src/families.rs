//! The rooted gadget catalog, construction of extremal family members by
//! attachment, and structural recognition of membership with a
//! decomposition witness.
//!
//! A member of the family is built by attaching exactly one rooted gadget
//! — the 3-path rooted at an end, the triangle, or one of four 6-vertex
//! pieces whose non-root vertices induce a 5-cycle — at every vertex of a
//! connected base graph, identifying the base vertex with the gadget
//! root. Trees arise from all-path attachments, unicyclic members allow
//! one triangle or one singly-attached 6-piece over a tree base, and
//! block-graph members use paths and triangles over a block-graph base.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::solver;

/// The six attachable gadget shapes.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GadgetKind {
    /// 3-path rooted at an end vertex.
    P3,
    /// Triangle, any vertex as root.
    C3,
    /// Root adjacent to one vertex of a 5-cycle.
    H6_1,
    /// Root adjacent to two adjacent vertices of a 5-cycle.
    H6_2a,
    /// Root adjacent to two non-adjacent vertices of a 5-cycle.
    H6_2b,
    /// Root adjacent to three consecutive vertices of a 5-cycle.
    H6_3,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] = [
        GadgetKind::P3,
        GadgetKind::C3,
        GadgetKind::H6_1,
        GadgetKind::H6_2a,
        GadgetKind::H6_2b,
        GadgetKind::H6_3,
    ];

    /// Number of vertices of the gadget, root included.
    pub fn order(self) -> usize {
        match self {
            GadgetKind::P3 | GadgetKind::C3 => 3,
            _ => 6,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::P3 => "P3",
            GadgetKind::C3 => "C3",
            GadgetKind::H6_1 => "H6_1",
            GadgetKind::H6_2a => "H6_2a",
            GadgetKind::H6_2b => "H6_2b",
            GadgetKind::H6_3 => "H6_3",
        }
    }
}

impl std::fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown gadget kind {s:?}")))
    }
}

/// One attachable piece with its designated root vertex.
#[derive(Debug, Clone)]
pub struct RootedGadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub root: usize,
}

fn build_gadget(kind: GadgetKind) -> RootedGadget {
    let c5_ring = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
    let edges: Vec<(usize, usize)> = match kind {
        GadgetKind::P3 => vec![(0, 1), (1, 2)],
        GadgetKind::C3 => vec![(0, 1), (0, 2), (1, 2)],
        GadgetKind::H6_1 => c5_ring.iter().copied().chain([(0, 1)]).collect(),
        GadgetKind::H6_2a => c5_ring.iter().copied().chain([(0, 1), (0, 2)]).collect(),
        GadgetKind::H6_2b => c5_ring.iter().copied().chain([(0, 1), (0, 3)]).collect(),
        GadgetKind::H6_3 => c5_ring
            .iter()
            .copied()
            .chain([(0, 1), (0, 2), (0, 3)])
            .collect(),
    };
    RootedGadget {
        kind,
        graph: Graph::from_edges(kind.order(), &edges).expect("gadget orders in bounds"),
        root: 0,
    }
}

/// The six gadgets, frozen; the four 6-vertex edge sets are exactly the
/// ones [`derive_h6_gadgets`] reproduces, which a regeneration test pins.
pub fn gadget_catalog() -> &'static [RootedGadget; 6] {
    static CATALOG: OnceLock<[RootedGadget; 6]> = OnceLock::new();
    CATALOG.get_or_init(|| GadgetKind::ALL.map(build_gadget))
}

/// Key identifying a rooted graph up to root-preserving isomorphism,
/// realized by hanging a 2-edge tail at the root and taking the plain
/// canonical form. Requires every non-root vertex to have degree at
/// least 2, which makes the tail end the unique leaf and the encoding
/// reversible.
fn rooted_key(graph: &Graph, root: usize) -> Result<CanonicalForm> {
    debug_assert!(graph
        .vertices()
        .all(|v| v == root || graph.degree(v) >= 2));
    let n = graph.n();
    let mut edges = graph.edges();
    edges.push((root, n));
    edges.push((n, n + 1));
    canonical_form(&Graph::from_edges(n + 2, &edges)?)
}

/// Re-derives the 6-vertex gadgets from first principles: enumerate all
/// rooted 6-vertex graphs whose non-root vertices induce a 5-cycle and
/// whose root has at least one neighbor, up to rooted isomorphism, and
/// keep exactly those whose attachment to every vertex of every connected
/// base of order at most 3 yields isolation number `order / 3`.
///
/// Fails if a qualifying gadget does not match the frozen catalog.
pub fn derive_h6_gadgets() -> Result<Vec<RootedGadget>> {
    let ring = [(1usize, 2usize), (2, 3), (3, 4), (4, 5), (5, 1)];
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 1u32..32 {
        let mut edges: Vec<(usize, usize)> = ring.to_vec();
        for i in 0..5 {
            if mask >> i & 1 == 1 {
                edges.push((0, i + 1));
            }
        }
        let g = Graph::from_edges(6, &edges)?;
        classes.entry(rooted_key(&g, 0)?).or_insert(g);
    }
    debug_assert_eq!(classes.len(), 7, "orbit count of nonempty C5 subsets");

    let bases = [
        Graph::empty(1)?,
        Graph::complete(2),
        Graph::path(3),
        Graph::complete(3),
    ];
    let mut out = Vec::new();
    for (key, candidate) in classes {
        let qualifies = bases.iter().all(|base| {
            let attached = attach_copies(base, &candidate, 0);
            3 * solver::isolation_number(&attached).value == attached.n()
        });
        if !qualifies {
            continue;
        }
        let matched = gadget_catalog()
            .iter()
            .filter(|g| g.kind.order() == 6)
            .find(|g| rooted_key(&g.graph, g.root).expect("catalog orders in bounds") == key)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "qualifying gadget {candidate} missing from the frozen catalog"
                ))
            })?;
        out.push(RootedGadget {
            kind: matched.kind,
            graph: candidate,
            root: 0,
        });
    }
    out.sort_by_key(|g| g.kind);
    Ok(out)
}

/// One base vertex's gadget: the root (a base vertex of the full graph),
/// the shape, and the embedding of the catalog gadget's vertices into the
/// full graph, root first, in catalog vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetPlacement {
    pub root: usize,
    pub kind: GadgetKind,
    pub vertices: Vec<usize>,
}

/// A witness that a graph is built by gadget attachment: the base graph,
/// the base vertices inside the full graph, and one placement per base
/// vertex (sorted by root index).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub base: Graph,
    pub base_vertices: VertexSet,
    pub assignment: Vec<GadgetPlacement>,
}

impl Decomposition {
    pub fn kinds(&self) -> Vec<GadgetKind> {
        self.assignment.iter().map(|p| p.kind).collect()
    }

    /// Rebuilds a graph from the base and kinds; the result is isomorphic
    /// to the decomposed graph.
    pub fn reattach(&self) -> Result<Graph> {
        Ok(attach(&self.base, &self.kinds())?.0)
    }

    /// Checks every structural invariant against the full graph: the
    /// placements partition the vertices, each embedding induces exactly
    /// its gadget, non-root gadget vertices have no outside neighbors,
    /// and the base is connected.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidArgument(format!("invalid decomposition: {msg}")));
        let roots: VertexSet = self.assignment.iter().map(|p| p.root).collect();
        if roots != self.base_vertices || roots.len() != self.assignment.len() {
            return fail("assignment roots do not match the base vertices".into());
        }

        let mut covered = VertexSet::EMPTY;
        for placement in &self.assignment {
            let gadget = &gadget_catalog()[placement.kind as usize];
            debug_assert_eq!(gadget.kind, placement.kind);
            let emb = &placement.vertices;
            if emb.len() != gadget.kind.order() || emb[gadget.root] != placement.root {
                return fail(format!("bad embedding arity at root {}", placement.root));
            }
            let mut verts = VertexSet::EMPTY;
            for &v in emb {
                g.check_vertex(v)?;
                verts.insert(v);
            }
            if verts.len() != emb.len() || !covered.intersection(verts).is_empty() {
                return fail(format!("overlapping embedding at root {}", placement.root));
            }
            covered = covered.union(verts);
            for i in 0..emb.len() {
                for j in (i + 1)..emb.len() {
                    if g.has_edge(emb[i], emb[j]) != gadget.graph.has_edge(i, j) {
                        return fail(format!(
                            "embedding at root {} does not induce a {}",
                            placement.root, placement.kind
                        ));
                    }
                }
            }
            for (i, &v) in emb.iter().enumerate() {
                if i != gadget.root && !g.neighbors(v).is_subset(verts) {
                    return fail(format!(
                        "gadget vertex {v} has a neighbor outside its gadget"
                    ));
                }
            }
        }
        if covered != g.vertex_set() {
            return fail("placements do not cover the vertex set".into());
        }

        let (induced_base, _) = g.induced(self.base_vertices)?;
        if induced_base != self.base {
            return fail("stored base does not match the induced base".into());
        }
        if self.base.n() == 0 || !self.base.is_connected() {
            return fail("base is not connected".into());
        }
        Ok(())
    }

    /// JSON form `{base_g6, assignment: [{root, kind, vertices}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base_g6": crate::graph6::write_graph6(&self.base),
            "assignment": self.assignment,
        })
    }
}

/// Glues one copy of `piece` (rooted at `piece_root`) to every vertex of
/// `base`; returns the full graph. Base vertices keep their indices.
fn attach_copies(base: &Graph, piece: &Graph, piece_root: usize) -> Graph {
    let b = base.n();
    let extra = piece.n() - 1;
    let mut g = Graph::empty(b + b * extra).expect("caller keeps order in bounds");
    for (u, v) in base.edges() {
        g.add_edge_mut(u, v);
    }
    for v in 0..b {
        let map = |p: usize| {
            if p == piece_root {
                v
            } else {
                b + v * extra + if p < piece_root { p } else { p - 1 }
            }
        };
        for (x, y) in piece.edges() {
            g.add_edge_mut(map(x), map(y));
        }
    }
    g
}

/// Attaches one gadget of the given kind at every vertex of a connected
/// base, identifying the base vertex with the gadget root. The result has
/// order `sum of gadget orders` and isolation number `order / 3`.
pub fn attach(base: &Graph, kinds: &[GadgetKind]) -> Result<(Graph, Decomposition)> {
    if base.n() == 0 {
        return Err(Error::InvalidArgument("base must have at least one vertex".into()));
    }
    if !base.is_connected() {
        return Err(Error::Disconnected {
            context: "attachment base",
        });
    }
    if kinds.len() != base.n() {
        return Err(Error::InvalidArgument(format!(
            "need one gadget kind per base vertex: got {} for order {}",
            kinds.len(),
            base.n()
        )));
    }
    let total: usize = kinds.iter().map(|k| k.order()).sum();
    if total > MAX_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "attachment result",
            requested: total,
            max: MAX_VERTICES,
        });
    }

    let b = base.n();
    let mut g = Graph::empty(total).expect("order checked above");
    for (u, v) in base.edges() {
        g.add_edge_mut(u, v);
    }
    let mut next_free = b;
    let mut assignment = Vec::with_capacity(b);
    for (v, &kind) in kinds.iter().enumerate() {
        let gadget = &gadget_catalog()[kind as usize];
        let mut emb = vec![v];
        for _ in 1..kind.order() {
            emb.push(next_free);
            next_free += 1;
        }
        for (x, y) in gadget.graph.edges() {
            g.add_edge_mut(emb[x], emb[y]);
        }
        assignment.push(GadgetPlacement {
            root: v,
            kind,
            vertices: emb,
        });
    }

    let decomposition = Decomposition {
        base: base.clone(),
        base_vertices: VertexSet::full(b),
        assignment,
    };
    debug_assert!(decomposition.validate(&g).is_ok());
    Ok((g, decomposition))
}

/// Recognizes membership in the attachment family; returns a witness
/// decomposition when one exists. Among multiple decompositions the one
/// with the lexicographically smallest base tuple (then smallest kinds
/// and embeddings) is returned.
pub fn recognize_g(g: &Graph) -> Option<Decomposition> {
    if g.n() == 0 || g.n() % 3 != 0 || !g.is_connected() {
        return None;
    }
    let mut solutions = Vec::new();
    let mut partial = Vec::new();
    search_placements(g, VertexSet::EMPTY, &mut partial, &mut solutions);
    solutions
        .into_iter()
        .min_by_key(|sol| {
            let base: Vec<usize> = sol.iter().map(|p| p.root).collect();
            let kinds: Vec<GadgetKind> = sol.iter().map(|p| p.kind).collect();
            let embs: Vec<Vec<usize>> = sol.iter().map(|p| p.vertices.clone()).collect();
            (base, kinds, embs)
        })
        .map(|mut sol| {
            sol.sort_by_key(|p| p.root);
            let base_vertices: VertexSet = sol.iter().map(|p| p.root).collect();
            let (base, _) = g.induced(base_vertices).expect("roots are vertices of g");
            let dec = Decomposition {
                base,
                base_vertices,
                assignment: sol,
            };
            debug_assert!(dec.validate(g).is_ok());
            dec
        })
}

/// Tree members: all-path attachments over a tree base.
pub fn recognize_t(g: &Graph) -> Option<Decomposition> {
    if !g.is_tree() {
        return None;
    }
    let dec = recognize_g(g)?;
    debug_assert!(dec.kinds().iter().all(|&k| k == GadgetKind::P3));
    debug_assert!(dec.base.is_tree());
    Some(dec)
}

/// Unicyclic members: either all paths over a unicyclic base, or one
/// triangle or one singly-attached 6-piece over a tree base.
pub fn recognize_u(g: &Graph) -> Option<Decomposition> {
    if !g.is_unicyclic() {
        return None;
    }
    recognize_g(g)
}

/// Block-graph members: paths and triangles over a block-graph base.
pub fn recognize_b(g: &Graph) -> Option<Decomposition> {
    if !g.is_block_graph() {
        return None;
    }
    let dec = recognize_g(g)?;
    debug_assert!(dec
        .kinds()
        .iter()
        .all(|&k| matches!(k, GadgetKind::P3 | GadgetKind::C3)));
    debug_assert!(dec.base.is_block_graph());
    Some(dec)
}

fn search_placements(
    g: &Graph,
    covered: VertexSet,
    partial: &mut Vec<GadgetPlacement>,
    out: &mut Vec<Vec<GadgetPlacement>>,
) {
    if covered == g.vertex_set() {
        let roots: VertexSet = partial.iter().map(|p| p.root).collect();
        let (base, _) = g.induced(roots).expect("roots are vertices of g");
        if base.is_connected() {
            out.push(partial.clone());
        }
        return;
    }
    // anchor on an uncovered vertex of minimum degree: leaves force their
    // gadget almost entirely, and low degree keeps the candidate list short
    let anchor = g
        .vertex_set()
        .difference(covered)
        .iter()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("cover is incomplete");
    for placement in placements_covering(g, anchor, covered) {
        let verts: VertexSet = placement.vertices.iter().copied().collect();
        partial.push(placement);
        search_placements(g, covered.union(verts), partial, out);
        partial.pop();
    }
}

/// All valid gadget placements whose vertex set contains `anchor`, with
/// every gadget vertex uncovered, deduplicated by (kind, root, vertex
/// set) keeping the smallest embedding. A placement is valid when the
/// embedding induces exactly the gadget and its non-root vertices have
/// all neighbors inside the gadget.
fn placements_covering(g: &Graph, anchor: usize, covered: VertexSet) -> Vec<GadgetPlacement> {
    let free = g.vertex_set().difference(covered);
    let is_free = |v: usize| free.contains(v);
    let mut found: BTreeMap<(GadgetKind, usize, u64), Vec<usize>> = BTreeMap::new();
    let mut add = |kind: GadgetKind, root: usize, emb: Vec<usize>| {
        let set: VertexSet = emb.iter().copied().collect();
        let entry = found.entry((kind, root, set.bits())).or_insert_with(|| emb.clone());
        if emb < *entry {
            *entry = emb;
        }
    };

    let deg = |v: usize| g.degree(v);

    // P3 with the anchor as the far end (forced when the anchor is a leaf)
    if deg(anchor) == 1 {
        let m = g.neighbors(anchor).min().expect("degree 1");
        if is_free(m) && deg(m) == 2 {
            let r = g.neighbors(m).without(anchor).min().expect("degree 2");
            if is_free(r) {
                add(GadgetKind::P3, r, vec![r, m, anchor]);
            }
        }
    }
    // P3 with the anchor in the middle
    if deg(anchor) == 2 {
        let nb: Vec<usize> = g.neighbors(anchor).to_vec();
        for (e, r) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if deg(e) == 1 && is_free(e) && is_free(r) {
                add(GadgetKind::P3, r, vec![r, anchor, e]);
            }
        }
    }
    // P3 rooted at the anchor
    for m in g.neighbors(anchor).iter() {
        if !is_free(m) || deg(m) != 2 {
            continue;
        }
        let e = g.neighbors(m).without(anchor).min().expect("degree 2");
        if deg(e) == 1 && is_free(e) {
            add(GadgetKind::P3, anchor, vec![anchor, m, e]);
        }
    }
    // C3 with the anchor as an internal vertex
    if deg(anchor) == 2 {
        let nb: Vec<usize> = g.neighbors(anchor).to_vec();
        if g.has_edge(nb[0], nb[1]) {
            for (y, r) in [(nb[0], nb[1]), (nb[1], nb[0])] {
                if deg(y) == 2 && is_free(y) && is_free(r) {
                    add(GadgetKind::C3, r, vec![r, anchor.min(y), anchor.max(y)]);
                }
            }
        }
    }
    // C3 rooted at the anchor
    let anchor_nbrs: Vec<usize> = g.neighbors(anchor).to_vec();
    for (i, &x) in anchor_nbrs.iter().enumerate() {
        for &y in &anchor_nbrs[i + 1..] {
            if g.has_edge(x, y) && deg(x) == 2 && deg(y) == 2 && is_free(x) && is_free(y) {
                add(GadgetKind::C3, anchor, vec![anchor, x, y]);
            }
        }
    }
    // 6-vertex gadgets with the anchor on the 5-cycle
    for ring in chordless_five_rings(g, anchor, free, None) {
        if let Some((kind, root, emb)) = classify_ring(g, &ring, free) {
            add(kind, root, emb);
        }
    }
    // 6-vertex gadgets rooted at the anchor
    if is_free(anchor) {
        for x in g.neighbors(anchor).iter() {
            if !is_free(x) {
                continue;
            }
            for ring in chordless_five_rings(g, x, free, Some(anchor)) {
                if let Some((kind, root, emb)) = classify_ring(g, &ring, free) {
                    if root == anchor {
                        add(kind, root, emb);
                    }
                }
            }
        }
    }

    found
        .into_iter()
        .map(|((kind, root, _), vertices)| GadgetPlacement { root, kind, vertices })
        .collect()
}

/// Chordless 5-cycles through `start` whose vertices are free, avoid
/// `exclude`, and have degree at most 3 (two ring edges plus at most one
/// root edge). Direction-deduplicated by `ring[1] < ring[4]`.
fn chordless_five_rings(
    g: &Graph,
    start: usize,
    free: VertexSet,
    exclude: Option<usize>,
) -> Vec<[usize; 5]> {
    let usable = |v: usize| free.contains(v) && g.degree(v) <= 3 && Some(v) != exclude;
    let mut out = Vec::new();
    if !usable(start) {
        return out;
    }
    let nbrs: Vec<usize> = g.neighbors(start).iter().filter(|&v| usable(v)).collect();
    for &c1 in &nbrs {
        for &c4 in &nbrs {
            if c4 <= c1 || g.has_edge(c1, c4) {
                continue;
            }
            for c2 in g.neighbors(c1).iter() {
                if !usable(c2)
                    || c2 == start
                    || c2 == c4
                    || g.has_edge(c2, start)
                    || g.has_edge(c2, c4)
                {
                    continue;
                }
                for c3 in g.neighbors(c2).intersection(g.neighbors(c4)).iter() {
                    if !usable(c3)
                        || c3 == start
                        || c3 == c1
                        || g.has_edge(c3, start)
                        || g.has_edge(c3, c1)
                    {
                        continue;
                    }
                    out.push([start, c1, c2, c3, c4]);
                }
            }
        }
    }
    out
}

/// Validates a candidate ring as the 5-cycle of a 6-vertex gadget: every
/// ring vertex's outside neighbors must be one common free root, and the
/// root's attachment pattern must be one of the four catalog shapes.
/// Returns the kind, root, and catalog-ordered embedding.
fn classify_ring(g: &Graph, ring: &[usize; 5], free: VertexSet) -> Option<(GadgetKind, usize, Vec<usize>)> {
    let ring_set: VertexSet = ring.iter().copied().collect();
    let mut ext = VertexSet::EMPTY;
    for &c in ring {
        let outside = g.neighbors(c).difference(ring_set);
        if outside.len() > 1 {
            return None;
        }
        ext = ext.union(outside);
    }
    if ext.len() != 1 {
        return None;
    }
    let root = ext.min().expect("single external vertex");
    if !free.contains(root) {
        return None;
    }

    let positions: Vec<usize> = (0..5).filter(|&i| g.has_edge(root, ring[i])).collect();
    let (kind, start) = match positions.as_slice() {
        [p] => (GadgetKind::H6_1, *p),
        [p, q] => match q - p {
            1 => (GadgetKind::H6_2a, *p),
            4 => (GadgetKind::H6_2a, *q),
            2 => (GadgetKind::H6_2b, *p),
            3 => (GadgetKind::H6_2b, *q),
            _ => unreachable!("distinct cyclic positions"),
        },
        [p, q, r] => {
            // consecutive iff the complementary pair is adjacent on the ring
            if *q == p + 1 && *r == p + 2 {
                (GadgetKind::H6_3, *p)
            } else if *q == p + 1 && *r == p + 4 {
                (GadgetKind::H6_3, *r) // run r, r+1=p(+5), p+1
            } else if *q == p + 3 && *r == p + 4 {
                (GadgetKind::H6_3, *q)
            } else {
                return None;
            }
        }
        _ => return None,
    };

    let mut emb = vec![root];
    for i in 0..5 {
        emb.push(ring[(start + i) % 5]);
    }
    Some((kind, root, emb))
}

/// The three-way vertex partition of a tree member: per vertex the 3-set
/// it belongs to, with designated attachment / support / leaf members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeSet {
    pub attachment: usize,
    pub support: usize,
    pub leaf: usize,
}

/// The leaf / support / attachment tripartition of a tree in the family.
#[derive(Debug, Clone)]
pub struct TreePartition {
    pub l_set: VertexSet,
    pub s_set: VertexSet,
    pub a_set: VertexSet,
    three_sets: Vec<ThreeSet>,
    set_index: Vec<usize>,
}

impl TreePartition {
    pub fn three_sets(&self) -> &[ThreeSet] {
        &self.three_sets
    }

    pub fn three_set_of(&self, v: usize) -> Option<&ThreeSet> {
        self.set_index.get(v).map(|&i| &self.three_sets[i])
    }
}

/// Computes the tripartition of a tree member. For order at least 6 the
/// leaves, their supports, and the remaining vertices each make up a
/// third of the tree; each 3-set is a leaf, its support, and the
/// attachment vertex at distance two. The order-3 tree splits into one
/// leaf (the smaller index), the center as support, and the other leaf
/// as attachment.
pub fn tree_partition(t: &Graph) -> Result<TreePartition> {
    if recognize_t(t).is_none() {
        return Err(Error::InvalidArgument(
            "tree partition requires a tree of the attachment family".into(),
        ));
    }
    let n = t.n();
    if n == 3 {
        let leaves = t.leaves().to_vec();
        let center = t
            .vertices()
            .find(|&v| t.degree(v) == 2)
            .expect("3-path center");
        let three = ThreeSet {
            attachment: leaves[1],
            support: center,
            leaf: leaves[0],
        };
        let mut set_index = vec![0; 3];
        set_index[leaves[0]] = 0;
        set_index[center] = 0;
        set_index[leaves[1]] = 0;
        return Ok(TreePartition {
            l_set: VertexSet::singleton(leaves[0]),
            s_set: VertexSet::singleton(center),
            a_set: VertexSet::singleton(leaves[1]),
            three_sets: vec![three],
            set_index,
        });
    }

    let l_set = t.leaves();
    let s_set = t.support_vertices();
    let a_set = t.vertex_set().difference(l_set.union(s_set));
    let mut three_sets = Vec::new();
    let mut set_index = vec![usize::MAX; n];
    for leaf in l_set.iter() {
        let support = t.neighbors(leaf).min().expect("leaf has one neighbor");
        let attachment = t
            .neighbors(support)
            .without(leaf)
            .min()
            .expect("support has degree 2 in family trees");
        debug_assert!(a_set.contains(attachment));
        let idx = three_sets.len();
        three_sets.push(ThreeSet {
            attachment,
            support,
            leaf,
        });
        set_index[leaf] = idx;
        set_index[support] = idx;
        set_index[attachment] = idx;
    }
    debug_assert!(set_index.iter().all(|&i| i != usize::MAX));
    Ok(TreePartition {
        l_set,
        s_set,
        a_set,
        three_sets,
        set_index,
    })
}

/// The unique cycle of a unicyclic graph in ring order, starting at the
/// smallest cycle vertex and moving toward its smaller ring neighbor.
pub fn cycle_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_unicyclic() {
        return Err(Error::InvalidArgument(
            "cycle extraction requires a unicyclic graph".into(),
        ));
    }
    // strip leaves until only the 2-core, i.e. the cycle, remains
    let mut alive = g.vertex_set();
    loop {
        let removable: VertexSet = alive
            .iter()
            .filter(|&v| g.neighbors(v).intersection(alive).len() <= 1)
            .collect();
        if removable.is_empty() {
            break;
        }
        alive = alive.difference(removable);
    }
    let start = alive.min().expect("a unicyclic graph has a cycle");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g
        .neighbors(start)
        .intersection(alive)
        .min()
        .expect("cycle vertex has two ring neighbors");
    while cur != start {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .intersection(alive)
            .without(prev)
            .min()
            .expect("ring continues");
        prev = cur;
        cur = next;
    }
    Ok(order)
}

/// The hanging tree `T(u)`: the component containing the cycle vertex `u`
/// after removing the two cycle edges at `u`. Over all cycle vertices the
/// hanging trees partition the vertex set.
pub fn hanging_tree(g: &Graph, u: usize) -> Result<VertexSet> {
    let cycle = cycle_vertices(g)?;
    let pos = cycle
        .iter()
        .position(|&v| v == u)
        .ok_or_else(|| Error::InvalidArgument(format!("vertex {u} is not on the cycle")))?;
    let len = cycle.len();
    let ring_nbrs = [cycle[(pos + 1) % len], cycle[(pos + len - 1) % len]];

    let mut component = VertexSet::singleton(u);
    let mut frontier = vec![u];
    while let Some(v) = frontier.pop() {
        for w in g.neighbors(v).iter() {
            if component.contains(w) {
                continue;
            }
            if v == u && ring_nbrs.contains(&w) {
                continue; // the two removed cycle edges
            }
            component.insert(w);
            frontier.push(w);
        }
    }
    Ok(component)
}

/// The corona `G ∘ K1`: one fresh pendant vertex attached to every
/// vertex; vertex `v`'s pendant is `n + v`.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if 2 * n > MAX_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "corona",
            requested: 2 * n,
            max: MAX_VERTICES,
        });
    }
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::from_edges(2 * n, &edges)
}
