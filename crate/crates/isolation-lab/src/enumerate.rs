//! Generation of all non-isomorphic connected graphs, trees, unicyclic
//! graphs, and block graphs up to a given order.
//!
//! Every stream yields exactly one representative per isomorphism class —
//! the canonically relabeled one — in ascending canonical-key order, so
//! runs are reproducible. Trees come from the Wright–Richmond–Odlyzko–
//! McKay level-sequence successor; the other classes are produced by
//! augmentation with canonical-key dedup.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Order bound for [`connected_graphs`].
pub const MAX_CONNECTED_ORDER: usize = 8;
/// Order bound for [`trees`].
pub const MAX_TREE_ORDER: usize = 16;
/// Order bound for [`unicyclic_graphs`].
pub const MAX_UNICYCLIC_ORDER: usize = 12;
/// Order bound for [`block_graphs`].
pub const MAX_BLOCK_ORDER: usize = 12;

fn check_bound(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!(
            "{what}: order must be at least 1"
        )));
    }
    if n > max {
        return Err(Error::UnsupportedSize {
            what,
            requested: n,
            max,
        });
    }
    Ok(())
}

fn into_sorted(map: BTreeMap<CanonicalForm, Graph>) -> Vec<Graph> {
    map.into_values().collect()
}

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices, `1 <= n <= 8`.
///
/// Level `k + 1` is built from level `k` by adding one vertex with every
/// nonempty neighborhood; every connected graph has a non-cut vertex, so
/// each isomorphism class is reached.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("connected graph enumeration", n, MAX_CONNECTED_ORDER)?;
    let mut current = vec![Graph::empty(1).expect("order 1 in bounds")];
    for k in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &current {
            for nbrs in 1..(1u64 << (k - 1)) {
                let h = g.with_added_vertex(nbrs);
                let key = canonical_form(&h)?;
                next.entry(key).or_insert_with(|| {
                    canonical_graph(&h).expect("order already checked")
                });
            }
        }
        current = into_sorted(next);
    }
    Ok(current)
}

/// One representative per isomorphism class of free trees on `n`
/// vertices, `1 <= n <= 16`.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check_bound("tree enumeration", n, MAX_TREE_ORDER)?;
    if n == 1 {
        return Ok(vec![Graph::empty(1).expect("order 1 in bounds")]);
    }
    let mut out: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for layout in FreeTreeLayouts::new(n) {
        let g = layout_to_graph(&layout);
        debug_assert!(g.is_tree());
        let key = canonical_form(&g)?;
        let prev = out.insert(key, canonical_graph(&g)?);
        debug_assert!(prev.is_none(), "level-sequence generator repeated a tree");
    }
    Ok(into_sorted(out))
}

/// One representative per isomorphism class of unicyclic graphs on `n`
/// vertices, `3 <= n <= 12`. Every unicyclic graph is a spanning tree
/// plus one edge, so trees plus one non-edge cover the class.
pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("unicyclic graph enumeration", n, MAX_UNICYCLIC_ORDER)?;
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut out: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for t in trees(n)? {
        for u in 0..n {
            for v in (u + 1)..n {
                if t.has_edge(u, v) {
                    continue;
                }
                let mut edges = t.edges();
                edges.push((u, v));
                let h = Graph::from_edges(n, &edges).expect("tree order in bounds");
                let key = canonical_form(&h)?;
                out.entry(key)
                    .or_insert_with(|| canonical_graph(&h).expect("order checked"));
            }
        }
    }
    Ok(into_sorted(out))
}

/// One representative per isomorphism class of connected block graphs on
/// `n` vertices, `1 <= n <= 12`.
///
/// Generated recursively: every block graph of order at least 2 has an
/// end-block, which is a complete graph glued at one vertex, so attaching
/// `K_m` (`m >= 2`) at every vertex of every smaller block graph reaches
/// every class.
pub fn block_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("block graph enumeration", n, MAX_BLOCK_ORDER)?;
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        levels[1] = vec![Graph::empty(1).expect("order 1 in bounds")];
    }
    for k in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for j in 1..k {
            let clique = k - j + 1; // attaching K_m adds m - 1 vertices
            for g in &levels[j] {
                for v in 0..j {
                    let h = g.with_attached_clique(v, clique);
                    let key = canonical_form(&h)?;
                    next.entry(key)
                        .or_insert_with(|| canonical_graph(&h).expect("order checked"));
                }
            }
        }
        levels[k] = into_sorted(next);
    }
    Ok(levels.swap_remove(n))
}

/// Deduplicates an externally supplied stream by canonical key and sorts
/// it; representatives are the first-seen graphs. Orders above the
/// canonical-form bound are rejected.
pub fn dedup_stream(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut out: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in graphs {
        let key = canonical_form(&g)?;
        out.entry(key).or_insert(g);
    }
    Ok(into_sorted(out))
}

impl Graph {
    /// This graph plus one vertex adjacent to the mask `nbrs`.
    pub(crate) fn with_added_vertex(&self, nbrs: u64) -> Graph {
        let n = self.n();
        debug_assert!(nbrs < 1u64 << n);
        let mut g = Graph::empty(n + 1).expect("caller keeps order in bounds");
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
        }
        for u in crate::graph::VertexSet::from_bits(nbrs).iter() {
            g.add_edge_mut(u, n);
        }
        g
    }

    /// This graph with a complete graph on `m` vertices glued at `v`
    /// (`m - 1` fresh vertices, all adjacent to `v` and to each other).
    pub(crate) fn with_attached_clique(&self, v: usize, m: usize) -> Graph {
        debug_assert!(m >= 2 && v < self.n());
        let n = self.n();
        let mut g = Graph::empty(n + m - 1).expect("caller keeps order in bounds");
        for (a, b) in self.edges() {
            g.add_edge_mut(a, b);
        }
        for i in 0..(m - 1) {
            g.add_edge_mut(v, n + i);
            for j in (i + 1)..(m - 1) {
                g.add_edge_mut(n + i, n + j);
            }
        }
        g
    }
}

/// Iterator over the canonical level sequences of free trees on `n >= 2`
/// vertices (Wright, Richmond, Odlyzko, McKay). `layout[i]` is the depth
/// of preorder vertex `i`; the root has depth 0.
struct FreeTreeLayouts {
    layout: Option<Vec<usize>>,
}

impl FreeTreeLayouts {
    fn new(n: usize) -> Self {
        debug_assert!(n >= 2);
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..(n + 1) / 2);
        FreeTreeLayouts {
            layout: Some(layout),
        }
    }
}

impl Iterator for FreeTreeLayouts {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.layout.take()?;
        let valid = next_free_tree(candidate);
        if let Some(ref layout) = valid {
            self.layout = next_rooted_tree(layout, None);
        }
        valid
    }
}

/// Advances a rooted level sequence to its successor by decrementing at
/// position `p` (the last entry above depth 1 when unspecified) and
/// repeating the pattern that starts at the matching shallower entry.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let q = (0..p)
        .rev()
        .find(|&q| pred[q] == pred[p] - 1)
        .expect("a shallower entry precedes p");
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the root's first subtree (re-rooted at
/// depth 0) and the remainder of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_found = false;
    let mut m = layout.len();
    for (i, &d) in layout.iter().enumerate() {
        if d == 1 {
            if one_found {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    let left = layout[1..m].iter().map(|&d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// One step of the free-tree check: a rooted sequence represents a free
/// tree when the first subtree is no taller, no larger, and no later
/// lexicographically than the rest; otherwise jump directly to the next
/// sequence that does.
fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = *rest.iter().max().expect("rest starts with the root");
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left.len() > rest.len() {
            valid = false;
        } else if left.len() == rest.len() && left > rest {
            valid = false;
        }
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_height = new_left.iter().copied().max().unwrap_or(0);
        let suffix_len = new_height + 1;
        let start = next.len() - suffix_len;
        for (i, d) in (1..=suffix_len).enumerate() {
            next[start + i] = d;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let n = layout.len();
    let mut g = Graph::empty(n).expect("layout order in bounds");
    let mut last_at_depth = vec![usize::MAX; n + 1];
    for (i, &d) in layout.iter().enumerate() {
        if d > 0 {
            g.add_edge_mut(last_at_depth[d - 1], i);
        }
        last_at_depth[d] = i;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_small() {
        // 1, 1, 2, 6, 21, 112, 853 non-isomorphic connected graphs (A001349)
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = connected_graphs(n).unwrap();
            assert_eq!(got.len(), want, "connected graphs on {n} vertices");
            assert!(got.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn connected_three_vertices_is_p3_and_k3() {
        let got = connected_graphs(3).unwrap();
        assert_eq!(got.len(), 2);
        let mut edge_counts: Vec<usize> = got.iter().map(Graph::edge_count).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![2, 3]);
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // A000055 offset 1: free trees on n vertices
        let expected = [
            1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
        ];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = trees(n).unwrap();
            assert_eq!(got.len(), want, "trees on {n} vertices");
            assert!(got.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn trees_on_four_vertices() {
        let got = trees(4).unwrap();
        assert_eq!(got.len(), 2); // the path and the star
        let mut max_deg: Vec<usize> = got
            .iter()
            .map(|g| g.vertices().map(|v| g.degree(v)).max().unwrap())
            .collect();
        max_deg.sort_unstable();
        assert_eq!(max_deg, vec![2, 3]);
    }

    #[test]
    fn unicyclic_smallest_is_triangle() {
        let got = unicyclic_graphs(3).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].edge_count(), 3);
        assert!(unicyclic_graphs(2).unwrap().is_empty());
    }

    #[test]
    fn unicyclic_counts_match_known_sequence() {
        // A001429 offset 3: unicyclic graphs on n vertices
        let expected = [1usize, 2, 5, 13, 33, 89, 240];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 3;
            let got = unicyclic_graphs(n).unwrap();
            assert_eq!(got.len(), want, "unicyclic graphs on {n} vertices");
            assert!(got.iter().all(Graph::is_unicyclic));
        }
    }

    #[test]
    fn block_graph_stream_is_sound() {
        for n in 1..=8 {
            let got = block_graphs(n).unwrap();
            assert!(got.iter().all(Graph::is_block_graph));
            let keys: std::collections::BTreeSet<_> = got
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(keys.len(), got.len(), "duplicate class at order {n}");
        }
        assert_eq!(block_graphs(3).unwrap().len(), 2); // P3 and K3
    }

    #[test]
    fn streams_are_sorted_by_canonical_key() {
        let got = trees(7).unwrap();
        let keys: Vec<_> = got.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            connected_graphs(9),
            Err(Error::UnsupportedSize { requested: 9, .. })
        ));
        assert!(matches!(trees(17), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(
            unicyclic_graphs(13),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(block_graphs(13), Err(Error::UnsupportedSize { .. })));
        assert!(trees(0).is_err());
    }

    #[test]
    fn dedup_stream_collapses_relabelings() {
        let c5 = Graph::cycle(5);
        let shifted = c5.relabel(&[2, 3, 4, 0, 1]).unwrap();
        let out = dedup_stream(vec![c5.clone(), shifted, Graph::path(5)]).unwrap();
        assert_eq!(out.len(), 2);
    }
}
