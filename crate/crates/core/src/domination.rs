//! Exact dominating sets over bit-set vertex sets.
//!
//! Searches run by increasing cardinality. Within one cardinality, subsets
//! are tried in lexicographic order of their sorted vertex sequences, so the
//! first hit is the lexicographically smallest minimum witness. Vertices are
//! stored sorted by label, so position order and label order agree.

use crate::graph::{odd_cycle_vertices, BlockWitness, GraphError, PrimeGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominationKind {
    Plain,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub set: VertexSet,
    pub kind: DominationKind,
    /// For odd certificates: each member with its non-bipartite block witness.
    pub member_evidence: Vec<(usize, BlockWitness)>,
}

impl DominationCertificate {
    /// Re-checks the certificate against `g` by direct predicate evaluation.
    pub fn verify(&self, g: &PrimeGraph) -> bool {
        if is_dominating(g, self.set) != Ok(true) {
            return false;
        }
        match self.kind {
            DominationKind::Plain => true,
            DominationKind::Odd => {
                let members: VertexSet = self.member_evidence.iter().map(|(v, _)| *v).collect();
                !self.set.is_empty()
                    && members == self.set
                    && self.member_evidence.len() == self.set.len()
                    && self.member_evidence.iter().all(|(v, w)| w.verify(g, *v))
            }
        }
    }
}

/// Vertices dominated by `d`: `d` together with all its neighbours.
pub fn dominated_by(g: &PrimeGraph, d: VertexSet) -> VertexSet {
    d.iter().fold(d, |acc, v| acc.union(g.neighbors(v)))
}

/// Whether every vertex outside `d` has a neighbour in `d`.
pub fn is_dominating(g: &PrimeGraph, d: VertexSet) -> Result<bool, GraphError> {
    if !d.is_subset(g.all()) {
        return Err(GraphError::ForeignVertices);
    }
    Ok(dominated_by(g, d) == g.all())
}

/// Label-based convenience wrapper around [`is_dominating`].
pub fn is_dominating_labels(g: &PrimeGraph, labels: &[u64]) -> Result<bool, GraphError> {
    is_dominating(g, g.set_of(labels)?)
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// undominated vertices.
pub fn greedy_dominating_set(g: &PrimeGraph, candidates: VertexSet) -> Option<VertexSet> {
    let mut chosen = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while covered != g.all() {
        let best = candidates
            .difference(chosen)
            .iter()
            .max_by_key(|&v| (g.closed_neighborhood(v).difference(covered).len(), std::cmp::Reverse(v)))?;
        if g.closed_neighborhood(best).difference(covered).is_empty() {
            return None;
        }
        chosen.insert(best);
        covered = covered.union(g.closed_neighborhood(best));
    }
    Some(chosen)
}

struct Search<'g> {
    g: &'g PrimeGraph,
    /// candidates sorted ascending
    pool: Vec<usize>,
    /// reach[k]: vertices dominated by some candidate at pool index >= k
    reach: Vec<VertexSet>,
    max_cover: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g PrimeGraph, candidates: VertexSet) -> Self {
        let pool: Vec<usize> = candidates.iter().collect();
        let mut reach = vec![VertexSet::EMPTY; pool.len() + 1];
        for k in (0..pool.len()).rev() {
            reach[k] = reach[k + 1].union(g.closed_neighborhood(pool[k]));
        }
        let max_cover = pool.iter().map(|&v| g.closed_neighborhood(v).len()).max().unwrap_or(0);
        Search {
            g,
            pool,
            reach,
            max_cover,
        }
    }

    /// Lexicographically first dominating set of exactly `size` candidates.
    fn first_of_size(&self, size: usize) -> Option<VertexSet> {
        self.extend(0, size, VertexSet::EMPTY, VertexSet::EMPTY)
    }

    fn extend(&self, start: usize, left: usize, chosen: VertexSet, covered: VertexSet) -> Option<VertexSet> {
        let missing = self.g.all().difference(covered);
        if left == 0 {
            return missing.is_empty().then_some(chosen);
        }
        if !missing.is_subset(self.reach[start]) || missing.len() > left * self.max_cover {
            return None;
        }
        for k in start..=self.pool.len() - left {
            let v = self.pool[k];
            let found = self.extend(
                k + 1,
                left - 1,
                chosen.with(v),
                covered.union(self.g.closed_neighborhood(v)),
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Smallest dominating subset of `candidates` with at least `min_size`
/// members, lexicographically first among those of minimum size.
fn minimum_dominating_within(g: &PrimeGraph, candidates: VertexSet, min_size: usize) -> Option<VertexSet> {
    if !is_dominating(g, candidates).ok()? || candidates.len() < min_size {
        return None;
    }
    let search = Search::new(g, candidates);
    let upper = greedy_dominating_set(g, candidates)
        .map_or(candidates.len(), |s| s.len())
        .max(min_size);
    let n = g.len();
    let lower = if search.max_cover == 0 {
        0
    } else {
        n.div_ceil(search.max_cover)
    };
    (lower.max(min_size)..=upper).find_map(|k| search.first_of_size(k))
}

/// Domination number with a minimum witness. The empty graph has `γ = 0`.
pub fn domination_number(g: &PrimeGraph) -> (usize, DominationCertificate) {
    let set = minimum_dominating_within(g, g.all(), 0).expect("the full vertex set always dominates");
    (
        set.len(),
        DominationCertificate {
            set,
            kind: DominationKind::Plain,
            member_evidence: Vec::new(),
        },
    )
}

/// Smallest nonempty dominating set whose members all lie on odd cycles.
pub fn minimum_odd_dominating_set(g: &PrimeGraph) -> Option<DominationCertificate> {
    let odd = odd_cycle_vertices(g);
    if odd.vertices.is_empty() {
        return None;
    }
    let set = minimum_dominating_within(g, odd.vertices, 1)?;
    let member_evidence = set
        .iter()
        .map(|v| (v, odd.witness(v).expect("odd-cycle vertices have witnesses").clone()))
        .collect();
    Some(DominationCertificate {
        set,
        kind: DominationKind::Odd,
        member_evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::gen_psl2;
    use crate::graph::build_character_graph;

    fn graph(vs: &[u64], es: &[(u64, u64)]) -> PrimeGraph {
        PrimeGraph::new("t", vs.iter().copied(), es.iter().copied()).unwrap()
    }

    fn k3() -> PrimeGraph {
        graph(&[2, 3, 5], &[(2, 3), (2, 5), (3, 5)])
    }

    fn c5() -> PrimeGraph {
        graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    }

    fn l13c() -> PrimeGraph {
        build_character_graph(&gen_psl2(13).unwrap()).unwrap().complement()
    }

    #[test]
    fn domination_predicate() {
        for v in [2, 3, 5] {
            assert!(is_dominating_labels(&k3(), &[v]).unwrap());
        }
        assert!(is_dominating_labels(&c5(), &[1, 3]).unwrap());
        assert!(!is_dominating_labels(&c5(), &[1, 2]).unwrap());
        assert!(is_dominating_labels(&l13c(), &[13]).unwrap());

        assert!(!is_dominating(&k3(), VertexSet::EMPTY).unwrap());
        assert!(is_dominating(&graph(&[], &[]), VertexSet::EMPTY).unwrap());
        assert_eq!(
            is_dominating(&k3(), VertexSet::singleton(5)),
            Err(GraphError::ForeignVertices)
        );
        assert!(is_dominating_labels(&k3(), &[7]).is_err());
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&k3()).0, 1);
        let (k, w) = domination_number(&c5());
        assert_eq!(k, 2);
        assert_eq!(c5().labels(w.set), vec![1, 3]);
        assert!(w.verify(&c5()));

        let path = graph(&[2, 3, 7], &[(2, 7), (7, 3)]);
        let (k, w) = domination_number(&path);
        assert_eq!(k, 1);
        assert_eq!(path.labels(w.set), vec![7]);

        assert_eq!(domination_number(&graph(&[], &[])).0, 0);
        assert_eq!(domination_number(&graph(&[2, 3, 5], &[])).0, 3);
    }

    #[test]
    fn odd_dominating_sets() {
        let g = l13c();
        let cert = minimum_odd_dominating_set(&g).unwrap();
        assert_eq!(g.labels(cert.set), vec![13]);
        assert!(cert.verify(&g));

        let path = graph(&[2, 3, 7], &[(2, 7), (7, 3)]);
        assert!(minimum_odd_dominating_set(&path).is_none());

        let cert = minimum_odd_dominating_set(&c5()).unwrap();
        assert_eq!(c5().labels(cert.set), vec![1, 3]);
        assert!(cert.verify(&c5()));

        let cert = minimum_odd_dominating_set(&k3()).unwrap();
        assert_eq!(k3().labels(cert.set), vec![2]);
    }

    #[test]
    fn odd_cycles_that_do_not_dominate() {
        // triangle 1-2-3 with a path 3-4-5: vertex 5 is out of reach
        let g = graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]);
        assert!(minimum_odd_dominating_set(&g).is_none());
        assert_eq!(domination_number(&g).0, 2);
    }

    #[test]
    fn forged_certificates_fail() {
        let g = l13c();
        let mut cert = minimum_odd_dominating_set(&g).unwrap();
        cert.set = g.set_of(&[2]).unwrap();
        assert!(!cert.verify(&g));

        let plain = DominationCertificate {
            set: g.set_of(&[2, 3]).unwrap(),
            kind: DominationKind::Plain,
            member_evidence: Vec::new(),
        };
        assert!(plain.verify(&g));
        let odd = DominationCertificate {
            kind: DominationKind::Odd,
            ..plain
        };
        assert!(!odd.verify(&g));
    }

    #[test]
    fn greedy_bound() {
        let g = c5();
        let s = greedy_dominating_set(&g, g.all()).unwrap();
        assert!(is_dominating(&g, s).unwrap());
        assert!(greedy_dominating_set(&g, g.set_of(&[1]).unwrap()).is_none());
    }
}
