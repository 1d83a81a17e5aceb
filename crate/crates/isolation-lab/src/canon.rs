//! Canonical labeling for small graphs via iterated neighborhood
//! refinement plus individualization with backtracking. Two graphs have
//! equal canonical keys if and only if they are isomorphic.
//!
//! The search maximizes the upper-triangle adjacency bit string over all
//! vertex orderings compatible with the refined partition; interchangeable
//! twin candidates are collapsed, which keeps graphs with large symmetric
//! cells (cliques, stars, complete blocks) cheap.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Practical bound for the refinement + backtracking scheme.
pub const MAX_CANON_VERTICES: usize = 16;

/// A total-order key: equal keys exactly characterize isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "canonical form",
            requested: g.n(),
            max: MAX_CANON_VERTICES,
        });
    }
    Ok(())
}

/// Relabel-invariant key for `g`. Fails for orders above
/// [`MAX_CANON_VERTICES`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// The key together with the canonical ordering that attains it;
/// `order[i]` is the input vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_order(g)?;
    let n = g.n();
    if n == 0 {
        return Ok((CanonicalForm { bytes: vec![0] }, Vec::new()));
    }

    let colors = refine_colors(g);
    let mut cells: Vec<u64> = Vec::new();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let mask: u64 = (0..n)
            .filter(|&v| colors[v] == c)
            .fold(0, |m, v| m | 1u64 << v);
        if mask != 0 {
            cells.push(mask);
        }
    }

    let mut search = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        best_bits: 0,
        best_order: Vec::new(),
        have_best: false,
    };
    let mut placed = Vec::with_capacity(n);
    search.descend(&cells, &mut placed, 0, 0);
    debug_assert!(search.have_best);

    let mut bytes = Vec::with_capacity(1 + search.total_bits.div_ceil(8) as usize);
    bytes.push(n as u8);
    let mut i = 0u32;
    while i < search.total_bits {
        let take = (search.total_bits - i).min(8);
        let chunk = (search.best_bits >> (search.total_bits - i - take)) as u8
            & ((1u16 << take) - 1) as u8;
        bytes.push(chunk << (8 - take));
        i += take;
    }
    Ok((CanonicalForm { bytes }, search.best_order))
}

/// `g` relabeled into its canonical ordering. Isomorphic inputs yield
/// identical (not merely isomorphic) outputs.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    let mut pos_of = vec![0usize; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        pos_of[v] = pos;
    }
    g.relabel(&pos_of)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Iterated neighborhood refinement (color = rank of the pair
/// (own color, sorted neighbor colors), seeded with degrees).
fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colors: Vec<u32> = {
        let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut sorted = degs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        degs.iter_mut()
            .map(|d| sorted.binary_search(d).unwrap() as u32)
            .collect()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap() as u32)
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    best_bits: u128,
    best_order: Vec<usize>,
    have_best: bool,
}

impl Search<'_> {
    fn descend(&mut self, cells: &[u64], placed: &mut Vec<usize>, bits: u128, nbits: u32) {
        if placed.len() == self.n {
            if !self.have_best || bits > self.best_bits {
                self.best_bits = bits;
                self.best_order = placed.clone();
                self.have_best = true;
            }
            return;
        }

        // Candidates from the first cell; vertices whose adjacency agrees
        // off the pair are interchangeable by a transposition, so one
        // representative per twin class suffices.
        let cell = cells[0];
        let mut candidates: Vec<usize> = Vec::new();
        'members: for v in VertexSet::from_bits(cell).iter() {
            for &u in &candidates {
                let off_pair = !(1u64 << u | 1u64 << v);
                if self.g.adj_bits(u) & off_pair == self.g.adj_bits(v) & off_pair {
                    continue 'members;
                }
            }
            candidates.push(v);
        }

        for v in candidates {
            let mut col = 0u128;
            for &p in placed.iter() {
                col = col << 1 | u128::from(self.g.has_edge(p, v));
            }
            let new_bits = bits << placed.len() | col;
            let new_nbits = nbits + placed.len() as u32;
            if self.have_best && new_bits < self.best_bits >> (self.total_bits - new_nbits) {
                continue;
            }

            // Split every cell by adjacency to v, neighbors first. The
            // split rule is fixed, so cell order stays an isomorphism
            // invariant of the placed prefix.
            let nv = self.g.adj_bits(v);
            let mut next: Vec<u64> = Vec::with_capacity(cells.len() + 2);
            for (i, &c) in cells.iter().enumerate() {
                let c = if i == 0 { c & !(1u64 << v) } else { c };
                if c == 0 {
                    continue;
                }
                let inside = c & nv;
                let outside = c & !nv;
                if inside != 0 {
                    next.push(inside);
                }
                if outside != 0 {
                    next.push(outside);
                }
            }

            placed.push(v);
            self.descend(&next, placed, new_bits, new_nbits);
            placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    /// Exhaustive-permutation isomorphism oracle for tiny graphs.
    fn iso_by_all_permutations(g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() || g.edge_count() != h.edge_count() {
            return false;
        }
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        permute_all(&mut perm, 0, &mut |p| g.relabel(p).unwrap() == *h)
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return found(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute_all(perm, k + 1, found) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn petersen_relabelings_share_key() {
        let g = petersen();
        let key = canonical_form(&g).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), key);
        }
    }

    #[test]
    fn c6_equals_k33_minus_perfect_matching() {
        let c6 = Graph::cycle(6);
        // K_{3,3} on parts {0,1,2} / {3,4,5} minus the matching (i, i+3)
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        let h = Graph::from_edges(6, &edges).unwrap();
        assert!(iso_by_all_permutations(&c6, &h), "oracle must agree first");
        assert_eq!(canonical_form(&c6).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let c6 = Graph::cycle(6);
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_k3).unwrap());
        assert!(!are_isomorphic(&c6, &two_k3).unwrap());
    }

    #[test]
    fn exhaustive_agreement_order_4() {
        // all 64 labeled graphs on 4 vertices, full pairwise check
        let graphs: Vec<Graph> = (0u32..64)
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(4, &edges).unwrap()
            })
            .collect();
        let keys: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        for i in 0..graphs.len() {
            for j in (i + 1)..graphs.len() {
                assert_eq!(
                    keys[i] == keys[j],
                    iso_by_all_permutations(&graphs[i], &graphs[j]),
                    "mismatch on masks {i} vs {j}"
                );
            }
        }
    }

    #[test]
    fn sampled_agreement_order_up_to_7() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, n);
            // half the trials compare against a relabeling, half against a
            // fresh random graph
            let h = if rng.gen_bool(0.5) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                g.relabel(&perm).unwrap()
            } else {
                random_graph(&mut rng, n)
            };
            assert_eq!(
                canonical_form(&g).unwrap() == canonical_form(&h).unwrap(),
                iso_by_all_permutations(&g, &h)
            );
        }
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n);
            let cg = canonical_graph(&g).unwrap();
            assert_eq!(canonical_form(&cg).unwrap(), canonical_form(&g).unwrap());
            assert_eq!(canonical_graph(&cg).unwrap(), cg);
        }
    }

    #[test]
    fn rejects_oversized_input() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(Error::UnsupportedSize { requested: 17, .. })
        ));
    }

    fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }
}
