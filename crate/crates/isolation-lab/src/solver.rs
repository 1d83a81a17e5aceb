//! Exact isolation and domination numbers with certificates.
//!
//! The search is iterative deepening on the solution size. At each node it
//! picks an uncovered adjacent pair (a violated `K2`) and branches on the
//! closed neighborhoods of its endpoints — any isolating set must dominate
//! one endpoint or contain one — with sibling exclusion so no candidate
//! set is visited twice, and a greedy disjoint-zone packing as the lower
//! bound. Witnesses are the lexicographically smallest minimum solutions,
//! so outputs are reproducible.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Order guard for [`all_min_isolating_sets`].
pub const MAX_ALL_MIN_ORDER: usize = 14;

/// An exact isolation-number result: `witness` attains `value`, and
/// `exhaustive` asserts the search proved no smaller isolating set exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationCertificate {
    pub value: usize,
    pub witness: VertexSet,
    pub exhaustive: bool,
}

/// An exact domination-number result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub value: usize,
    pub witness: VertexSet,
}

/// True iff the vertices outside `N[d]` form an independent set.
pub fn is_isolating(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_set(d)?;
    let covered = g.closed_neighborhood_unchecked(d);
    let outside = g.vertex_set().difference(covered);
    Ok(g.is_independent_unchecked(outside))
}

/// True iff `N[d]` covers every vertex.
pub fn is_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_set(d)?;
    Ok(g.closed_neighborhood_unchecked(d) == g.vertex_set())
}

/// The isolation number with the lexicographically smallest minimum
/// witness.
pub fn isolation_number(g: &Graph) -> IsolationCertificate {
    let search = PairCover::isolation(g);
    let all = g.vertex_set().bits();
    let mut value = 0;
    loop {
        if search.exists(0, all, value) {
            break;
        }
        value += 1;
    }
    let witness = search.lex_min_witness(value);
    debug_assert!(is_isolating(g, witness).unwrap());
    IsolationCertificate {
        value,
        witness,
        exhaustive: true,
    }
}

/// The domination number with the lexicographically smallest minimum
/// witness.
pub fn domination_number(g: &Graph) -> DominationCertificate {
    let search = PairCover::domination(g);
    let all = g.vertex_set().bits();
    let mut value = 0;
    loop {
        if search.exists(0, all, value) {
            break;
        }
        value += 1;
    }
    let witness = search.lex_min_witness(value);
    debug_assert!(is_dominating(g, witness).unwrap());
    DominationCertificate { value, witness }
}

/// Every isolating set of minimum size, in lexicographic order of the
/// sorted index tuples. Guarded to `n <= 14`.
pub fn all_min_isolating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > MAX_ALL_MIN_ORDER {
        return Err(Error::UnsupportedSize {
            what: "enumeration of minimum isolating sets",
            requested: g.n(),
            max: MAX_ALL_MIN_ORDER,
        });
    }
    let value = isolation_number(g).value;
    let mut out = Vec::new();
    for_each_subset(g.n(), value, &mut |set| {
        if is_isolating(g, set).expect("subset of the vertex set") {
            out.push(set);
        }
    });
    Ok(out)
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order of
/// the sorted tuples.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(VertexSet)) {
    fn go(n: usize, k: usize, start: usize, acc: VertexSet, f: &mut impl FnMut(VertexSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        for v in start..=(n - k) {
            go(n, k - 1, v + 1, acc.with(v), f);
        }
    }
    if k > n {
        return;
    }
    go(n, k, 0, VertexSet::EMPTY, f);
}

/// Shared branch-and-bound over "zones": isolation mode reports a
/// violated adjacent pair and its candidate zone `N[u] ∪ N[v]`, while
/// domination mode reports an uncovered vertex with zone `N[u]`.
struct PairCover<'a> {
    g: &'a Graph,
    closed: Vec<u64>,
    full: u64,
    isolation: bool,
}

impl<'a> PairCover<'a> {
    fn isolation(g: &'a Graph) -> Self {
        Self::new(g, true)
    }

    fn domination(g: &'a Graph) -> Self {
        Self::new(g, false)
    }

    fn new(g: &'a Graph, isolation: bool) -> Self {
        let closed: Vec<u64> = (0..g.n()).map(|v| g.adj_bits(v) | 1u64 << v).collect();
        PairCover {
            g,
            closed,
            full: g.vertex_set().bits(),
            isolation,
        }
    }

    /// Is there a solution `D` with `required ⊆ D ⊆ required ∪ allowed`
    /// and `|D| <= budget`?
    fn exists(&self, required: u64, allowed: u64, budget: usize) -> bool {
        if required.count_ones() as usize > budget {
            return false;
        }
        let covered = self
            .g
            .closed_neighborhood_unchecked(VertexSet::from_bits(required))
            .bits();
        self.node(required, covered, !(required | allowed), budget)
    }

    fn node(&self, d: u64, covered: u64, mut banned: u64, budget: usize) -> bool {
        let uncovered = self.full & !covered;

        // One pass over the violations: feasibility (a zone with no
        // selectable candidate is a dead end), the packing lower bound
        // (pairwise disjoint zones each demand one vertex), and the
        // branching zone with the fewest candidates.
        let mut scan = ZoneScan::new(banned | d);
        if self.isolation {
            'outer: for u in VertexSet::from_bits(uncovered).iter() {
                let partners = self.g.adj_bits(u) & uncovered & !low_mask(u + 1);
                for v in VertexSet::from_bits(partners).iter() {
                    if !scan.visit(self.closed[u] | self.closed[v]) {
                        break 'outer;
                    }
                }
            }
        } else {
            for u in VertexSet::from_bits(uncovered).iter() {
                if !scan.visit(self.closed[u]) {
                    break;
                }
            }
        }
        if scan.dead {
            return false;
        }
        if !scan.violated {
            return true;
        }
        if d.count_ones() as usize + scan.packing > budget {
            return false;
        }

        for w in VertexSet::from_bits(scan.branch_candidates).iter() {
            if self.node(d | 1u64 << w, covered | self.closed[w], banned, budget) {
                return true;
            }
            // siblings may not reuse w: partitions the solution space
            banned |= 1u64 << w;
        }
        false
    }

    /// Greedy front-to-back construction of the lexicographically
    /// smallest witness of size exactly `value`.
    fn lex_min_witness(&self, value: usize) -> VertexSet {
        let n = self.g.n();
        let mut chosen = VertexSet::EMPTY;
        for v in 0..n {
            if chosen.len() == value {
                break;
            }
            let above = self.full & !low_mask(v + 1);
            if self.exists(chosen.with(v).bits(), above, value) {
                chosen.insert(v);
            }
        }
        debug_assert_eq!(chosen.len(), value);
        chosen
    }
}

/// Accumulator for one sweep over the violated zones of a search node.
struct ZoneScan {
    blocked: u64,
    branch_candidates: u64,
    branch_count: u32,
    packing: usize,
    packed: u64,
    violated: bool,
    dead: bool,
}

impl ZoneScan {
    fn new(blocked: u64) -> Self {
        ZoneScan {
            blocked,
            branch_candidates: 0,
            branch_count: u32::MAX,
            packing: 0,
            packed: 0,
            violated: false,
            dead: false,
        }
    }

    /// Returns `false` once the node is known dead, to stop the sweep.
    fn visit(&mut self, zone: u64) -> bool {
        self.violated = true;
        let candidates = zone & !self.blocked;
        if candidates == 0 {
            self.dead = true;
            return false;
        }
        if zone & self.packed == 0 {
            self.packing += 1;
            self.packed |= zone;
        }
        let count = candidates.count_ones();
        if count < self.branch_count {
            self.branch_candidates = candidates;
            self.branch_count = count;
        }
        true
    }
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_isolating_basics() {
        let c5 = Graph::cycle(5);
        assert!(is_isolating(&c5, c5.vertex_set()).unwrap());
        assert!(!is_isolating(&c5, VertexSet::singleton(0)).unwrap());
        let p3 = Graph::path(3);
        assert!(is_isolating(&p3, VertexSet::singleton(1)).unwrap());
        assert!(is_isolating(&p3, VertexSet::singleton(0)).unwrap());
        let k2 = Graph::complete(2);
        assert!(!is_isolating(&k2, VertexSet::EMPTY).unwrap());
    }

    #[test]
    fn iota_of_cycles() {
        assert_eq!(isolation_number(&Graph::cycle(6)).value, 2);
        assert_eq!(isolation_number(&Graph::cycle(9)).value, 3);
        assert_eq!(isolation_number(&Graph::cycle(5)).value, 2);
        assert_eq!(isolation_number(&Graph::cycle(3)).value, 1);
    }

    #[test]
    fn iota_of_complete_graphs() {
        for m in 2..=8 {
            assert_eq!(isolation_number(&Graph::complete(m)).value, 1, "K_{m}");
        }
    }

    #[test]
    fn iota_degenerate_cases() {
        // empty set isolates K1: the complement {v} is independent
        let k1 = Graph::empty(1).unwrap();
        let cert = isolation_number(&k1);
        assert_eq!(cert.value, 0);
        assert!(cert.witness.is_empty());
        // the empty set leaves K2's adjacent pair undominated
        assert_eq!(isolation_number(&Graph::complete(2)).value, 1);
        assert_eq!(isolation_number(&Graph::path(3)).value, 1);
        assert_eq!(isolation_number(&Graph::empty(0).unwrap()).value, 0);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let cert = isolation_number(&Graph::path(3));
        assert_eq!(cert.witness.to_vec(), vec![0]);
        let cert = isolation_number(&Graph::cycle(6));
        // {0,1} fails (its complement contains the edge 3-4), {0,2} works
        assert_eq!(cert.witness.to_vec(), vec![0, 2]);
        assert!(cert.exhaustive);
    }

    #[test]
    fn all_min_sets_of_p3() {
        let got = all_min_isolating_sets(&Graph::path(3)).unwrap();
        let want: Vec<VertexSet> = (0..3).map(VertexSet::singleton).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn all_min_sets_of_k3() {
        let got = all_min_isolating_sets(&Graph::complete(3)).unwrap();
        let want: Vec<VertexSet> = (0..3).map(VertexSet::singleton).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn all_min_sets_of_c6_are_the_nonadjacent_pairs() {
        // brute force over the 15 pairs leaves the 9 at cyclic distance 2 or 3
        let got = all_min_isolating_sets(&Graph::cycle(6)).unwrap();
        let want: Vec<VertexSet> = [
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 5),
        ]
        .iter()
        .map(|&(a, b)| VertexSet::singleton(a).with(b))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn all_min_guard() {
        let g = Graph::empty(15).unwrap();
        assert!(matches!(
            all_min_isolating_sets(&g),
            Err(Error::UnsupportedSize { requested: 15, .. })
        ));
    }

    #[test]
    fn gamma_small_cases() {
        assert_eq!(domination_number(&Graph::complete(4)).value, 1);
        assert_eq!(domination_number(&Graph::cycle(4)).value, 2);
        assert_eq!(domination_number(&Graph::path(4)).value, 2);
        assert_eq!(domination_number(&Graph::star(5)).value, 1);
    }

    #[test]
    fn iota_at_most_gamma_on_enumerated_graphs() {
        for n in 1..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                let iota = isolation_number(&g);
                let gamma = domination_number(&g);
                assert!(iota.value <= gamma.value, "iota > gamma on {g}");
                assert!(is_isolating(&g, gamma.witness).unwrap());
            }
        }
    }

    #[test]
    fn caro_bound_holds_up_to_six() {
        let c5_key = crate::canon::canonical_form(&Graph::cycle(5)).unwrap();
        for n in 3..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                let iota = isolation_number(&g).value;
                if n == 5 && crate::canon::canonical_form(&g).unwrap() == c5_key {
                    assert_eq!(iota, 2);
                    continue;
                }
                assert!(3 * iota <= n, "iota={iota} on {g}");
            }
        }
    }

    /// Definition-level brute force, independent of the branch-and-bound:
    /// complement of the closed neighborhood by explicit loops, then a
    /// pairwise edge scan.
    fn naive_iota(g: &Graph) -> usize {
        let n = g.n();
        for k in 0..=n {
            let mut found = false;
            for_each_subset(n, k, &mut |d| {
                if found {
                    return;
                }
                let mut covered = vec![false; n];
                for v in 0..n {
                    if d.contains(v) {
                        covered[v] = true;
                        for u in 0..n {
                            if g.has_edge(u, v) {
                                covered[u] = true;
                            }
                        }
                    }
                }
                let outside: Vec<usize> = (0..n).filter(|&v| !covered[v]).collect();
                let independent = outside
                    .iter()
                    .all(|&u| outside.iter().all(|&v| u == v || !g.has_edge(u, v)));
                if independent {
                    found = true;
                }
            });
            if found {
                return k;
            }
        }
        unreachable!("the full vertex set always isolates");
    }

    #[test]
    fn branch_and_bound_matches_naive_enumeration() {
        for n in 1..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                assert_eq!(isolation_number(&g).value, naive_iota(&g), "on {g}");
            }
        }
    }

    #[test]
    fn adding_vertices_preserves_isolation() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let cert = isolation_number(&g);
            let mut d = cert.witness;
            for v in 0..n {
                d.insert(v);
                assert!(is_isolating(&g, d).unwrap());
            }
        }
    }
}
