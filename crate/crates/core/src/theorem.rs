//! The three equivalent conditions on a character graph `Δ` and its
//! complement, with certificates:
//!
//! * (a) the complement has an odd dominating set;
//! * (b) the complement is non-bipartite with domination number 1;
//! * (c) `Δ` is disconnected and its complement is non-bipartite.
//!
//! For a genuine character graph the three agree. Any graph where they
//! disagree is therefore not the character graph of a finite group, which is
//! what [`check_equivalence`] reports as an obstruction.
//!
//! When the complement carries an odd cycle on a prime set `π`, the cycle can
//! be explained by a `PSL2(u^α)` section with `u ∈ π` and the other primes of
//! `π` alternately dividing `u^α + 1` and `u^α - 1`. [`find_psl2_witness`]
//! searches for such `(π, u, α)` and [`alternation_check`] validates one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::domination::{domination_number, minimum_odd_dominating_set, DominationCertificate};
use crate::graph::{
    bipartite_certificate, connected_components, BipartiteCertificate, GraphError, PrimeGraph, VertexSet,
};

pub const DEFAULT_ALPHA_CAP: u32 = 40;

/// Largest prime set considered by the witness search.
pub const MAX_WITNESS_PRIMES: usize = 9;

pub const OBSTRUCTION_PHRASE: &str = "not the character graph of any finite group";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// divides `u^α + 1`
    Plus,
    /// divides `u^α - 1`
    Minus,
}

/// A cycle in the complement of `Δ` explained by `PSL2(u^α)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub u: u64,
    pub alpha: u32,
    /// Sorted prime set.
    pub pi: Vec<u64>,
    /// The cycle, starting at `u`.
    pub ordering: Vec<u64>,
    /// Side of every prime in `pi` other than `u`.
    pub sides: BTreeMap<u64, Side>,
}

impl CycleWitness {
    pub fn field_size(&self) -> Option<u64> {
        arith::checked_prime_power(self.u, self.alpha)
    }
}

fn side_of(p: u64, q: u64) -> Option<Side> {
    if p.is_multiple_of(2) {
        None
    } else if (q + 1).is_multiple_of(p) {
        Some(Side::Plus)
    } else if (q - 1).is_multiple_of(p) {
        Some(Side::Minus)
    } else {
        None
    }
}

/// Validates a witness against the complement graph: the ordering is a cycle
/// covering exactly `π`, every prime other than `u` is odd and divides its
/// claimed side, and sides alternate along the cycle with `u` removed.
pub fn alternation_check(g_complement: &PrimeGraph, w: &CycleWitness) -> Result<bool, GraphError> {
    for &p in &w.pi {
        g_complement.index_of(p).ok_or(GraphError::UnknownVertex(p))?;
    }
    let mut pi = w.pi.clone();
    pi.sort_unstable();
    pi.dedup();
    if pi.len() != w.pi.len() || pi.len() < 3 || pi.len().is_multiple_of(2) || !pi.contains(&w.u) {
        return Ok(false);
    }
    if w.alpha == 0 || !arith::is_prime(w.u) {
        return Ok(false);
    }
    let Some(q) = w.field_size() else {
        return Ok(false);
    };

    let mut ordered = w.ordering.clone();
    ordered.sort_unstable();
    if ordered != pi {
        return Ok(false);
    }
    let positions: Vec<usize> = match w
        .ordering
        .iter()
        .map(|&p| g_complement.index_of(p))
        .collect::<Option<Vec<_>>>()
    {
        Some(p) => p,
        None => return Ok(false),
    };
    if !g_complement.is_cycle(&positions) {
        return Ok(false);
    }

    let others: Vec<u64> = pi.iter().copied().filter(|&p| p != w.u).collect();
    if w.sides.keys().copied().collect::<Vec<_>>() != others {
        return Ok(false);
    }
    for (&p, &side) in &w.sides {
        let divides = match side {
            Side::Plus => (q + 1) % p == 0,
            Side::Minus => (q - 1) % p == 0,
        };
        if p % 2 == 0 || !divides {
            return Ok(false);
        }
    }

    let start = w.ordering.iter().position(|&p| p == w.u).expect("u is in the ordering");
    let n = w.ordering.len();
    let sequence: Vec<Side> = (1..n).map(|k| w.sides[&w.ordering[(start + k) % n]]).collect();
    Ok(sequence.windows(2).all(|s| s[0] != s[1]))
}

/// DFS for an alternating cycle through all of `members`, starting at `u`,
/// neighbours tried in ascending label order.
fn alternating_cycle(g: &PrimeGraph, u: usize, members: VertexSet, side: &[Option<Side>]) -> Option<Vec<usize>> {
    fn extend(
        g: &PrimeGraph,
        members: VertexSet,
        side: &[Option<Side>],
        path: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let last = *path.last().unwrap();
        if used == members {
            return g.has_edge(last, path[0]);
        }
        for w in g.neighbors(last).intersection(members).difference(used).iter() {
            if path.len() > 1 && side[w] == side[last] {
                continue;
            }
            path.push(w);
            if extend(g, members, side, path, used.with(w)) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![u];
    extend(g, members, side, &mut path, VertexSet::singleton(u)).then_some(path)
}

/// Enumerates subsets of `pool` with `size` members, in lexicographic order.
fn for_each_subset(pool: &[usize], size: usize, mut f: impl FnMut(&[usize])) {
    fn go(pool: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for k in start..pool.len() {
            if pool.len() - k < size - cur.len() {
                break;
            }
            cur.push(pool[k]);
            go(pool, size, k + 1, cur, f);
            cur.pop();
        }
    }
    go(pool, size, 0, &mut Vec::with_capacity(size), &mut f);
}

/// Searches for a `PSL2(u^α)` cycle witness in the complement graph.
///
/// Candidates `(u, α)` are tried by increasing `u^α`; for the first field
/// size admitting any witness, the lexicographically smallest prime set `π`
/// is returned, with the lexicographically first cycle through it from `u`.
/// Labels that are not prime are never chosen as `u`.
pub fn find_psl2_witness(g_complement: &PrimeGraph, alpha_cap: u32) -> Option<CycleWitness> {
    let g = g_complement;
    let mut fields: Vec<(u64, usize, u32)> = Vec::new();
    for (ui, &u) in g.vertices().iter().enumerate() {
        if !arith::is_prime(u) || g.degree(ui) < 2 {
            continue;
        }
        for alpha in 1..=alpha_cap {
            match arith::checked_prime_power(u, alpha) {
                Some(q) => fields.push((q, ui, alpha)),
                None => break,
            }
        }
    }
    fields.sort_unstable();

    for (q, ui, alpha) in fields {
        let side: Vec<Option<Side>> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &p)| if i == ui { None } else { side_of(p, q) })
            .collect();
        let pool: Vec<usize> = (0..g.len()).filter(|&i| side[i].is_some()).collect();

        let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
        let max_others = (MAX_WITNESS_PRIMES - 1).min(pool.len());
        for size in (2..=max_others).step_by(2) {
            for_each_subset(&pool, size, |others| {
                let plus = others.iter().filter(|&&i| side[i] == Some(Side::Plus)).count();
                if 2 * plus != others.len() {
                    return;
                }
                let members: VertexSet = others.iter().copied().collect::<VertexSet>().with(ui);
                let labels = g.labels(members);
                if best.as_ref().is_some_and(|(b, _)| *b <= labels) {
                    return;
                }
                if let Some(cycle) = alternating_cycle(g, ui, members, &side) {
                    best = Some((labels, cycle));
                }
            });
        }

        if let Some((pi, cycle)) = best {
            let u = g.vertex(ui);
            let sides = cycle[1..]
                .iter()
                .map(|&i| (g.vertex(i), side[i].expect("pool members have sides")))
                .collect();
            return Some(CycleWitness {
                u,
                alpha,
                pi,
                ordering: g.labels_of(&cycle),
                sides,
            });
        }
    }
    None
}

/// Condition (a): the complement has an odd dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionA {
    pub holds: bool,
    pub certificate: Option<DominationCertificate>,
}

/// Condition (b): the complement is non-bipartite with domination number 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionB {
    pub holds: bool,
    pub domination_number: usize,
    pub domination_witness: DominationCertificate,
    pub bipartite: BipartiteCertificate,
}

/// Condition (c): `Δ` is disconnected and the complement is non-bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionC {
    pub holds: bool,
    pub components: Vec<VertexSet>,
    pub bipartite: BipartiteCertificate,
}

pub fn condition_a(delta: &PrimeGraph) -> ConditionA {
    let certificate = minimum_odd_dominating_set(&delta.complement());
    ConditionA {
        holds: certificate.is_some(),
        certificate,
    }
}

pub fn condition_b(delta: &PrimeGraph) -> ConditionB {
    let complement = delta.complement();
    let bipartite = bipartite_certificate(&complement);
    let (k, domination_witness) = domination_number(&complement);
    ConditionB {
        holds: !bipartite.is_bipartite() && k == 1,
        domination_number: k,
        domination_witness,
        bipartite,
    }
}

pub fn condition_c(delta: &PrimeGraph) -> ConditionC {
    let components = connected_components(delta);
    let bipartite = bipartite_certificate(&delta.complement());
    ConditionC {
        holds: components.len() >= 2 && !bipartite.is_bipartite(),
        components,
        bipartite,
    }
}

/// Outcome of evaluating all three conditions on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub delta: PrimeGraph,
    pub complement: PrimeGraph,
    pub a: ConditionA,
    pub b: ConditionB,
    pub c: ConditionC,
    pub equivalent: bool,
    pub obstruction: Option<String>,
    pub psl2_witness: Option<CycleWitness>,
}

impl TheoremReport {
    pub fn name(&self) -> &str {
        self.delta.label()
    }

    pub fn conditions(&self) -> (bool, bool, bool) {
        (self.a.holds, self.b.holds, self.c.holds)
    }

    /// Re-validates every stored certificate against the stored graphs.
    pub fn verify(&self) -> bool {
        let g = &self.complement;
        let (a, b, c) = self.conditions();

        let a_ok = match &self.a.certificate {
            Some(cert) => a && cert.verify(g) && !cert.set.is_empty(),
            None => !a,
        };
        let b_ok = self.b.bipartite.verify(g)
            && self.b.domination_witness.verify(g)
            && self.b.domination_witness.set.len() == self.b.domination_number
            && b == (!self.b.bipartite.is_bipartite() && self.b.domination_number == 1);

        let mut seen = VertexSet::EMPTY;
        let partition = self.c.components.iter().all(|comp| {
            let fresh = comp.intersection(seen).is_empty();
            seen = seen.union(*comp);
            fresh && !comp.is_empty()
        }) && seen == self.delta.all();
        let closed = self
            .c
            .components
            .iter()
            .all(|comp| comp.iter().all(|v| self.delta.neighbors(v).is_subset(*comp)));
        let c_ok = partition
            && closed
            && self.c.bipartite.verify(g)
            && c == (self.c.components.len() >= 2 && !self.c.bipartite.is_bipartite());

        let witness_ok = self
            .psl2_witness
            .as_ref()
            .is_none_or(|w| alternation_check(g, w) == Ok(true));

        a_ok && b_ok && c_ok && witness_ok && self.equivalent == (a == b && b == c)
    }
}

fn obstruction(a: bool, b: bool, c: bool) -> Option<String> {
    let failed = if a && !b {
        "(a) => (b)"
    } else if b && !c {
        "(b) => (c)"
    } else if c && !a {
        "(c) => (a)"
    } else {
        return None;
    };
    Some(format!(
        "{OBSTRUCTION_PHRASE}: implication {failed} fails (a={a}, b={b}, c={c})"
    ))
}

/// Evaluates (a), (b), (c) and attaches a `PSL2` witness when (c) holds.
pub fn check_equivalence(delta: &PrimeGraph, alpha_cap: u32) -> TheoremReport {
    let complement = delta.complement();
    let a = condition_a(delta);
    let b = condition_b(delta);
    let c = condition_c(delta);
    let (ha, hb, hc) = (a.holds, b.holds, c.holds);
    let psl2_witness = if hc {
        find_psl2_witness(&complement, alpha_cap)
    } else {
        None
    };
    TheoremReport {
        delta: delta.clone(),
        complement,
        a,
        b,
        c,
        equivalent: ha == hb && hb == hc,
        obstruction: obstruction(ha, hb, hc),
        psl2_witness,
    }
}

// JSON view of a report, in label space.

#[derive(Serialize)]
struct ConditionsDoc {
    a: bool,
    b: bool,
    c: bool,
}

#[derive(Serialize)]
struct EvidenceDoc {
    vertex: u64,
    block: Vec<u64>,
    odd_cycle: Vec<u64>,
}

#[derive(Serialize)]
struct OddDominatingDoc {
    vertices: Vec<u64>,
    evidence: Vec<EvidenceDoc>,
}

#[derive(Serialize)]
struct CertificatesDoc {
    odd_dominating_set: Option<OddDominatingDoc>,
    domination_witness: Vec<u64>,
    odd_cycle: Option<Vec<u64>>,
    two_coloring: Option<BTreeMap<u64, u8>>,
    components: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    name: &'a str,
    conditions: ConditionsDoc,
    equivalent: bool,
    certificates: CertificatesDoc,
    psl2_witness: Option<&'a CycleWitness>,
    obstruction: Option<&'a str>,
}

impl Serialize for TheoremReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let g = &self.complement;
        let odd_dominating_set = self.a.certificate.as_ref().map(|cert| OddDominatingDoc {
            vertices: g.labels(cert.set),
            evidence: cert
                .member_evidence
                .iter()
                .map(|(v, w)| EvidenceDoc {
                    vertex: g.vertex(*v),
                    block: g.labels(w.block),
                    odd_cycle: g.labels_of(&w.odd_cycle),
                })
                .collect(),
        });
        let doc = ReportDoc {
            name: self.name(),
            conditions: ConditionsDoc {
                a: self.a.holds,
                b: self.b.holds,
                c: self.c.holds,
            },
            equivalent: self.equivalent,
            certificates: CertificatesDoc {
                odd_dominating_set,
                domination_witness: g.labels(self.b.domination_witness.set),
                odd_cycle: self.b.bipartite.odd_cycle().map(|c| g.labels_of(c)),
                two_coloring: self
                    .b
                    .bipartite
                    .coloring()
                    .map(|colors| g.vertices().iter().copied().zip(colors.iter().copied()).collect()),
                components: self.c.components.iter().map(|&s| self.delta.labels(s)).collect(),
            },
            psl2_witness: self.psl2_witness.as_ref(),
            obstruction: self.obstruction.as_deref(),
        };
        doc.serialize(serializer)
    }
}
