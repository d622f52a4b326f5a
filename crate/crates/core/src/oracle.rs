//! Brute-force reference computations and the suites that compare them
//! against the fast paths.
//!
//! Nothing here goes through block decomposition or the pruned domination
//! search: odd-cycle membership is decided by walking simple paths, and
//! domination by scanning subsets with a naive adjacency check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domination::{domination_number, minimum_odd_dominating_set};
use crate::graph::{is_bipartite, odd_cycle_vertices, PrimeGraph, VertexSet};
use crate::theorem::{condition_a, condition_b, condition_c};

/// Exhaustive mode refuses graphs larger than this.
pub const EXHAUSTIVE_LIMIT: usize = 7;

fn naive_dominates(g: &PrimeGraph, members: &[usize]) -> bool {
    (0..g.len()).all(|v| members.contains(&v) || members.iter().any(|&m| g.has_edge(m, v)))
}

/// Whether `v` lies on a simple cycle of odd length, by path search.
pub fn on_odd_cycle(g: &PrimeGraph, v: usize) -> bool {
    // a path can still close if some unused vertex route leads back to N(v)
    fn can_close(g: &PrimeGraph, from: usize, used: &[bool], start: usize) -> bool {
        let mut seen = used.to_vec();
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            if x != from && g.has_edge(x, start) {
                return true;
            }
            for (y, s) in seen.iter_mut().enumerate() {
                if g.has_edge(x, y) && !*s {
                    *s = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn walk(g: &PrimeGraph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(last, start) {
            return true;
        }
        if !can_close(g, last, used, start) {
            return false;
        }
        for next in 0..g.len() {
            if used[next] || !g.has_edge(last, next) {
                continue;
            }
            used[next] = true;
            path.push(next);
            if walk(g, path, used) {
                return true;
            }
            path.pop();
            used[next] = false;
        }
        false
    }

    let mut used = vec![false; g.len()];
    used[v] = true;
    walk(g, &mut vec![v], &mut used)
}

pub fn brute_odd_cycle_vertices(g: &PrimeGraph) -> VertexSet {
    (0..g.len()).filter(|&v| on_odd_cycle(g, v)).collect()
}

fn combinations(pool: &[usize], size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        pool: &[usize],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for k in start..pool.len() {
            cur.push(pool[k]);
            if go(pool, size, k + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(pool, size, 0, &mut Vec::new(), f)
}

/// Smallest dominating subset of `pool` with at least `min_size` members,
/// scanning sizes upward; lexicographically first within a size.
pub fn brute_min_dominating(g: &PrimeGraph, pool: &[usize], min_size: usize) -> Option<Vec<usize>> {
    for size in min_size..=pool.len() {
        let mut found = None;
        combinations(pool, size, &mut |set| {
            if naive_dominates(g, set) {
                found = Some(set.to_vec());
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn brute_domination_number(g: &PrimeGraph) -> usize {
    let all: Vec<usize> = (0..g.len()).collect();
    brute_min_dominating(g, &all, 0).expect("the full set dominates").len()
}

/// Graph on positions `0..n` whose edges are the set bits of `code` over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> PrimeGraph {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    PrimeGraph::from_masks(format!("n{n}#{code}"), adj)
}

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// All labelled graphs on exactly `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = PrimeGraph> {
    (0..1u64 << pair_count(n)).map(move |code| graph_from_code(n, code))
}

/// Random graph with `1..=max_vertices` vertices and a per-graph edge
/// density drawn uniformly.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize) -> PrimeGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let p: f64 = rng.gen();
    let mut adj = vec![VertexSet::EMPTY; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    PrimeGraph::from_masks(format!("random n{n}"), adj)
}

/// The checks a suite runs on each graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    OddCycleVertices,
    DominationNumber,
    OddDominationExistence,
    NonBipartiteIffOddVertices,
    AImpliesNonBipartiteComplement,
    BImpliesC,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::OddCycleVertices,
        Check::DominationNumber,
        Check::OddDominationExistence,
        Check::NonBipartiteIffOddVertices,
        Check::AImpliesNonBipartiteComplement,
        Check::BImpliesC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OddCycleVertices => "odd-cycle vertices vs path search",
            Check::DominationNumber => "domination number vs subset scan",
            Check::OddDominationExistence => "odd dominating set vs subset scan",
            Check::NonBipartiteIffOddVertices => "non-bipartite iff odd-cycle vertices",
            Check::AImpliesNonBipartiteComplement => "(a) implies non-bipartite complement",
            Check::BImpliesC => "(b) implies (c)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: Check,
    pub graph: String,
    pub edges: Vec<(u64, u64)>,
}

/// Runs every [`Check`] on `g`, returning the ones that fail.
pub fn check_graph(g: &PrimeGraph) -> Vec<Check> {
    let mut failed = Vec::new();

    let fast_odd = odd_cycle_vertices(g);
    let brute_odd = brute_odd_cycle_vertices(g);
    let witnesses_ok = fast_odd
        .vertices
        .iter()
        .all(|v| fast_odd.witness(v).is_some_and(|w| w.verify(g, v)));
    if fast_odd.vertices != brute_odd || !witnesses_ok {
        failed.push(Check::OddCycleVertices);
    }

    let (k, witness) = domination_number(g);
    let all: Vec<usize> = (0..g.len()).collect();
    let brute_min = brute_min_dominating(g, &all, 0).expect("the full set dominates");
    let same_witness = witness.set == brute_min.iter().copied().collect::<VertexSet>();
    if k != brute_min.len() || !same_witness || !witness.verify(g) {
        failed.push(Check::DominationNumber);
    }

    let odd_pool: Vec<usize> = brute_odd.iter().collect();
    let brute_odd_dom = if odd_pool.is_empty() {
        None
    } else {
        brute_min_dominating(g, &odd_pool, 1)
    };
    let fast_odd_dom = minimum_odd_dominating_set(g);
    let agree = match (&fast_odd_dom, &brute_odd_dom) {
        (None, None) => true,
        (Some(cert), Some(set)) => cert.verify(g) && cert.set == set.iter().copied().collect::<VertexSet>(),
        _ => false,
    };
    let existence_rule = brute_odd_dom.is_some() == (!odd_pool.is_empty() && naive_dominates(g, &odd_pool));
    if !agree || !existence_rule {
        failed.push(Check::OddDominationExistence);
    }

    if is_bipartite(g) == !brute_odd.is_empty() {
        failed.push(Check::NonBipartiteIffOddVertices);
    }

    // g plays the role of Δ here
    if condition_a(g).holds && is_bipartite(&g.complement()) {
        failed.push(Check::AImpliesNonBipartiteComplement);
    }
    if condition_b(g).holds && !condition_c(g).holds {
        failed.push(Check::BImpliesC);
    }

    failed
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleSummary {
    pub graphs: usize,
    /// Failure count per entry of [`Check::ALL`].
    pub failures: [usize; 6],
    /// The first few failing graphs.
    pub examples: Vec<Mismatch>,
}

const EXAMPLE_LIMIT: usize = 10;

impl OracleSummary {
    pub fn mismatches(&self) -> usize {
        self.failures.iter().sum()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }

    fn absorb(&mut self, g: &PrimeGraph, failed: Vec<Check>) {
        self.graphs += 1;
        for check in failed {
            let k = Check::ALL.iter().position(|&c| c == check).unwrap();
            self.failures[k] += 1;
            if self.examples.len() < EXAMPLE_LIMIT {
                self.examples.push(Mismatch {
                    check,
                    graph: g.label().to_string(),
                    edges: g.edge_labels(),
                });
            }
        }
    }

    /// One line per check, then a total line.
    pub fn render(&self, heading: &str) -> String {
        let mut out = String::new();
        for (check, fails) in Check::ALL.iter().zip(self.failures) {
            out.push_str(&format!("{:<40} {} mismatches\n", check.name(), fails));
        }
        for m in &self.examples {
            out.push_str(&format!(
                "mismatch [{}] {} edges {:?}\n",
                m.check.name(),
                m.graph,
                m.edges
            ));
        }
        out.push_str(&format!(
            "{heading}: {} graphs, {} mismatches\n",
            self.graphs,
            self.mismatches()
        ));
        out
    }
}

fn summarize(graphs: Vec<PrimeGraph>) -> OracleSummary {
    let results: Vec<Vec<Check>> = graphs.par_iter().map(check_graph).collect();
    let mut summary = OracleSummary::default();
    for (g, failed) in graphs.iter().zip(results) {
        summary.absorb(g, failed);
    }
    summary
}

/// Every labelled graph on exactly `n` vertices.
pub fn run_exhaustive(n: usize) -> OracleSummary {
    assert!(
        n <= EXHAUSTIVE_LIMIT,
        "exhaustive oracle supports at most {EXHAUSTIVE_LIMIT} vertices"
    );
    summarize(all_graphs(n).collect())
}

/// `count` seeded random graphs with at most `max_vertices` vertices.
pub fn run_random(count: usize, max_vertices: usize, seed: u64) -> OracleSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    summarize((0..count).map(|_| random_graph(&mut rng, max_vertices)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_basics() {
        let tri_pendant = PrimeGraph::new("t", 1..=4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert_eq!(
            tri_pendant.labels(brute_odd_cycle_vertices(&tri_pendant)),
            vec![1, 2, 3]
        );
        let c4 = PrimeGraph::new("c4", 1..=4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(brute_odd_cycle_vertices(&c4).is_empty());
        let c5 = PrimeGraph::new("c5", 1..=5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert_eq!(brute_domination_number(&c5), 2);
        assert_eq!(brute_domination_number(&PrimeGraph::new("e", [], []).unwrap()), 0);
    }

    #[test]
    fn graph_codes() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(1).count(), 1);
        assert_eq!(all_graphs(0).count(), 1);
        let g = graph_from_code(3, 0b101);
        assert_eq!(g.edge_labels(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn small_exhaustive_runs_are_clean() {
        for n in 0..=5 {
            let s = run_exhaustive(n);
            assert_eq!(s.graphs, 1 << pair_count(n));
            assert!(s.passed(), "{}", s.render("n"));
        }
    }

    #[test]
    fn random_runs_are_reproducible() {
        let a = run_random(200, 8, 7);
        let b = run_random(200, 8, 7);
        assert_eq!(a, b);
        assert!(a.passed(), "{}", a.render("random"));
    }
}
