//! Simple graphs on at most 64 labelled vertices.
//!
//! Vertices are stored sorted by label, and every vertex set is a single
//! `u64` bit mask over vertex positions, so subset algorithms downstream run
//! on machine words. A [`PrimeGraph`] built from a degree multiset has prime
//! labels; graphs read from edge lists may carry arbitrary positive labels.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::arith;
use crate::degrees::DegreeMultiset;

pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`odd_cycle_through`].
pub const THROUGH_CYCLE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex label {0} appears more than once")]
    DuplicateVertex(u64),
    #[error("vertex label must be a positive integer, got 0")]
    ZeroLabel,
    #[error("{0} is not a vertex of the graph")]
    UnknownVertex(u64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("vertex set contains positions outside the graph")]
    ForeignVertices,
    #[error("graph has {0} vertices; exhaustive cycle extraction supports at most {THROUGH_CYCLE_LIMIT}")]
    TooLargeForExhaustive(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A set of vertex positions packed into one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Positions `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1u64 << i)
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

    /// Smallest position, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Positions in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// Lexicographic comparison of the ascending position sequences.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Simple undirected graph on sorted, distinct positive labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    label: String,
    vertices: Vec<u64>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeGraph")
            .field("label", &self.label)
            .field("vertices", &self.vertices)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

impl PrimeGraph {
    /// Builds a graph from labels and label pairs. Labels are sorted; edges
    /// may repeat.
    pub fn new(
        label: impl Into<String>,
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, GraphError> {
        let mut vs: Vec<u64> = vertices.into_iter().collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        if vs.first() == Some(&0) {
            return Err(GraphError::ZeroLabel);
        }
        if vs.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vs.len()));
        }
        let mut g = PrimeGraph {
            label: label.into(),
            adj: vec![VertexSet::EMPTY; vs.len()],
            vertices: vs,
        };
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let i = g.index_of(a).ok_or(GraphError::UnknownVertex(a))?;
            let j = g.index_of(b).ok_or(GraphError::UnknownVertex(b))?;
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// Graph on positions `0..n` labelled `1..=n`, with adjacency masks.
    /// Used by exhaustive enumeration.
    pub fn from_masks(label: impl Into<String>, adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES);
        for (i, a) in adj.iter().enumerate() {
            assert!(!a.contains(i), "self-loop at position {i}");
            assert!(a.is_subset(VertexSet::full(n)));
            assert!(a.iter().all(|j| adj[j].contains(i)), "asymmetric adjacency");
        }
        PrimeGraph {
            label: label.into(),
            vertices: (1..=n as u64).collect(),
            adj,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex labels, ascending.
    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> u64 {
        self.vertices[i]
    }

    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.vertices.binary_search(&label).ok()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    /// `i` together with its neighbours.
    pub fn closed_neighborhood(&self, i: usize) -> VertexSet {
        self.adj[i].with(i)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn has_edge_labels(&self, a: u64, b: u64) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// Edges as position pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_labels(&self) -> Vec<(u64, u64)> {
        self.edges()
            .map(|(i, j)| (self.vertices[i], self.vertices[j]))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Labels of the positions in `set`, ascending.
    pub fn labels(&self, set: VertexSet) -> Vec<u64> {
        set.iter().map(|i| self.vertices[i]).collect()
    }

    pub fn labels_of(&self, positions: &[usize]) -> Vec<u64> {
        positions.iter().map(|&i| self.vertices[i]).collect()
    }

    /// Positions of the given labels.
    pub fn set_of(&self, labels: &[u64]) -> Result<VertexSet, GraphError> {
        labels
            .iter()
            .map(|&l| self.index_of(l).ok_or(GraphError::UnknownVertex(l)))
            .collect()
    }

    pub fn complement(&self) -> PrimeGraph {
        let all = self.all();
        PrimeGraph {
            label: format!("{}^c", self.label),
            vertices: self.vertices.clone(),
            adj: (0..self.len())
                .map(|i| all.difference(self.adj[i]).difference(VertexSet::singleton(i)))
                .collect(),
        }
    }

    /// Vertices with no neighbours.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.len()).filter(|&i| self.adj[i].is_empty()).collect()
    }

    /// Whether consecutive entries of `cycle` (wrapping around) are adjacent
    /// and all entries are distinct, with at least three of them.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let distinct: VertexSet = cycle.iter().copied().collect();
        cycle.len() >= 3
            && cycle.iter().all(|&i| i < self.len())
            && distinct.len() == cycle.len()
            && (0..cycle.len()).all(|k| self.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]))
    }
}

/// `Δ(G)`: vertices are the primes dividing some degree, and `p ~ q` when
/// `pq` divides some degree.
pub fn build_character_graph(d: &DegreeMultiset) -> Result<PrimeGraph, GraphError> {
    let per_degree: Vec<Vec<u64>> = d
        .support()
        .into_iter()
        .map(|deg| arith::prime_divisors(deg).expect("validated degrees are in range"))
        .collect();
    let mut vertices: Vec<u64> = per_degree.iter().flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges = Vec::new();
    for primes in &per_degree {
        for (k, &p) in primes.iter().enumerate() {
            for &q in &primes[k + 1..] {
                edges.push((p, q));
            }
        }
    }
    PrimeGraph::new(d.name(), vertices, edges)
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &PrimeGraph) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in 0..g.len() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = g.neighbors(v).difference(comp);
            comp = comp.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Graphs with at most one vertex count as connected.
pub fn is_connected(g: &PrimeGraph) -> bool {
    connected_components(g).len() <= 1
}

/// Witness for or against bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCertificate {
    /// Colour per vertex position (0 or 1); positions outside the examined
    /// vertex set are coloured 0.
    TwoColoring(Vec<u8>),
    /// Positions of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

impl BipartiteCertificate {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCertificate::TwoColoring(_))
    }

    pub fn odd_cycle(&self) -> Option<&[usize]> {
        match self {
            BipartiteCertificate::OddCycle(c) => Some(c),
            _ => None,
        }
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        match self {
            BipartiteCertificate::TwoColoring(c) => Some(c),
            _ => None,
        }
    }

    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &PrimeGraph) -> bool {
        match self {
            BipartiteCertificate::TwoColoring(colors) => {
                colors.len() == g.len()
                    && colors.iter().all(|&c| c <= 1)
                    && g.edges().all(|(i, j)| colors[i] != colors[j])
            }
            BipartiteCertificate::OddCycle(cycle) => cycle.len() % 2 == 1 && g.is_cycle(cycle),
        }
    }
}

/// Two-colours the subgraph induced on `within`, or returns an odd cycle in it.
pub fn bipartite_within(g: &PrimeGraph, within: VertexSet) -> BipartiteCertificate {
    const UNSEEN: usize = usize::MAX;
    let n = g.len();
    let mut color = vec![0u8; n];
    let mut depth = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut queue = VecDeque::new();
    for root in within.iter() {
        if depth[root] != UNSEEN {
            continue;
        }
        depth[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).intersection(within).iter() {
                if depth[v] == UNSEEN {
                    depth[v] = depth[u] + 1;
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    // same BFS depth parity: climb to the common ancestor
                    let (mut a, mut b) = (u, v);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while depth[a] > depth[b] {
                        a = parent[a];
                        left.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        right.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    return BipartiteCertificate::OddCycle(left);
                }
            }
        }
    }
    BipartiteCertificate::TwoColoring(color)
}

pub fn bipartite_certificate(g: &PrimeGraph) -> BipartiteCertificate {
    bipartite_within(g, g.all())
}

pub fn is_bipartite(g: &PrimeGraph) -> bool {
    bipartite_certificate(g).is_bipartite()
}

/// One biconnected component (or bridge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    pub bipartite: bool,
    /// An odd cycle inside the block when it is not bipartite.
    pub odd_cycle: Option<Vec<usize>>,
}

/// Blocks and cut vertices. Isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    pub fn block_bipartite(&self) -> Vec<bool> {
        self.blocks.iter().map(|b| b.bipartite).collect()
    }
}

struct BlockSearch<'g> {
    g: &'g PrimeGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl BlockSearch<'_> {
    const UNSEEN: usize = usize::MAX;

    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in self.g.neighbors(u).iter() {
            if self.disc[v] == Self::UNSEEN {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Hopcroft-Tarjan block decomposition, each block tagged bipartite or not.
/// Blocks are ordered by their lexicographically smallest vertex sequence.
pub fn block_decomposition(g: &PrimeGraph) -> BlockDecomposition {
    let n = g.len();
    let mut search = BlockSearch {
        g,
        disc: vec![BlockSearch::UNSEEN; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for root in 0..n {
        if search.disc[root] == BlockSearch::UNSEEN {
            search.visit(root, BlockSearch::UNSEEN);
        }
    }

    let mut blocks: Vec<Block> = search
        .blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let vertices: VertexSet = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            let cert = bipartite_within(g, vertices);
            Block {
                vertices,
                edges,
                bipartite: cert.is_bipartite(),
                odd_cycle: cert.odd_cycle().map(<[usize]>::to_vec),
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.lex_cmp(b.vertices));

    let mut count = vec![0usize; n];
    for b in &blocks {
        for v in b.vertices.iter() {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// A non-bipartite block and one odd cycle inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockWitness {
    pub block: VertexSet,
    pub odd_cycle: Vec<usize>,
}

impl BlockWitness {
    /// The cycle is odd, lies in the block, and the block is a block of `g`
    /// containing `v`.
    pub fn verify(&self, g: &PrimeGraph, v: usize) -> bool {
        let cycle_set: VertexSet = self.odd_cycle.iter().copied().collect();
        self.block.contains(v)
            && self.odd_cycle.len() % 2 == 1
            && g.is_cycle(&self.odd_cycle)
            && cycle_set.is_subset(self.block)
            && block_decomposition(g)
                .blocks
                .iter()
                .any(|b| b.vertices == self.block && !b.bipartite)
    }
}

/// Vertices lying on at least one odd cycle, with a block witness for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleVertices {
    pub vertices: VertexSet,
    pub witnesses: Vec<BlockWitness>,
    witness_of: Vec<Option<usize>>,
}

impl OddCycleVertices {
    pub fn witness(&self, v: usize) -> Option<&BlockWitness> {
        self.witness_of.get(v).copied().flatten().map(|k| &self.witnesses[k])
    }
}

/// A vertex lies on an odd cycle iff one of its blocks is non-bipartite.
pub fn odd_cycle_vertices(g: &PrimeGraph) -> OddCycleVertices {
    let decomposition = block_decomposition(g);
    let mut vertices = VertexSet::EMPTY;
    let mut witnesses = Vec::new();
    let mut witness_of = vec![None; g.len()];
    for b in decomposition.blocks {
        let Some(odd_cycle) = b.odd_cycle else { continue };
        let k = witnesses.len();
        for v in b.vertices.difference(vertices).iter() {
            witness_of[v] = Some(k);
        }
        vertices = vertices.union(b.vertices);
        witnesses.push(BlockWitness {
            block: b.vertices,
            odd_cycle,
        });
    }
    OddCycleVertices {
        vertices,
        witnesses,
        witness_of,
    }
}

/// Exhaustively finds an odd cycle passing through `v`, for graphs with at
/// most [`THROUGH_CYCLE_LIMIT`] vertices. The cycle starts at `v`.
pub fn odd_cycle_through(g: &PrimeGraph, v: usize) -> Result<Option<Vec<usize>>, GraphError> {
    if g.len() > THROUGH_CYCLE_LIMIT {
        return Err(GraphError::TooLargeForExhaustive(g.len()));
    }
    if v >= g.len() {
        return Err(GraphError::ForeignVertices);
    }
    fn extend(g: &PrimeGraph, path: &mut Vec<usize>, used: VertexSet) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(last, path[0]) {
            return true;
        }
        for w in g.neighbors(last).difference(used).iter() {
            path.push(w);
            if extend(g, path, used.with(w)) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![v];
    Ok(extend(g, &mut path, VertexSet::singleton(v)).then_some(path))
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn write_dot(out: &mut String, g: &PrimeGraph, name: &str, dashed: bool) {
    let _ = writeln!(out, "graph {} {{", quote(name));
    let _ = writeln!(out, "  node [shape=circle];");
    if dashed {
        let _ = writeln!(out, "  edge [style=dashed];");
    }
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
}

/// Undirected DOT rendering; isolated vertices are listed explicitly.
pub fn to_dot(g: &PrimeGraph) -> String {
    let mut out = String::new();
    write_dot(&mut out, g, g.label(), false);
    out
}

/// `g` and its complement as two graphs in one DOT document, the complement
/// drawn with dashed edges.
pub fn pair_to_dot(g: &PrimeGraph) -> String {
    let mut out = String::new();
    write_dot(&mut out, g, &format!("Delta({})", g.label()), false);
    write_dot(&mut out, &g.complement(), &format!("Delta({})^c", g.label()), true);
    out
}

/// Parses the edge-list format: the first non-blank line lists vertex labels,
/// every following non-blank line is a `u v` pair. Lines starting with `#`
/// are comments.
pub fn parse_edge_list(label: &str, text: &str) -> Result<PrimeGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_num = |line: usize, tok: &str| {
        tok.parse::<u64>().map_err(|e| GraphError::Parse {
            line,
            message: format!("bad vertex label '{tok}': {e}"),
        })
    };
    let vertices = match lines.next() {
        Some((line, l)) => l
            .split_whitespace()
            .map(|t| parse_num(line, t))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(GraphError::Parse {
                line,
                message: format!("expected 'u v', got '{l}'"),
            });
        };
        edges.push((parse_num(line, a)?, parse_num(line, b)?));
    }
    PrimeGraph::new(label, vertices, edges)
}

/// Inverse of [`parse_edge_list`].
pub fn to_edge_list(g: &PrimeGraph) -> String {
    let mut out = g.vertices().iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::gen_psl2;

    fn graph(vs: &[u64], es: &[(u64, u64)]) -> PrimeGraph {
        PrimeGraph::new("t", vs.iter().copied(), es.iter().copied()).unwrap()
    }

    fn comps(g: &PrimeGraph) -> Vec<Vec<u64>> {
        connected_components(g).into_iter().map(|c| g.labels(c)).collect()
    }

    fn triangle_pendant() -> PrimeGraph {
        // a=1 b=2 c=3 d=4
        graph(&[1, 2, 3, 4], &[(1, 2), (2, 3), (1, 3), (3, 4)])
    }

    fn c5() -> PrimeGraph {
        graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    }

    #[test]
    fn character_graphs_of_psl2() {
        let a5 = build_character_graph(&gen_psl2(5).unwrap()).unwrap();
        assert_eq!(a5.vertices(), &[2, 3, 5]);
        assert_eq!(a5.edge_count(), 0);

        let l7 = build_character_graph(&gen_psl2(7).unwrap()).unwrap();
        assert_eq!(l7.vertices(), &[2, 3, 7]);
        assert_eq!(l7.edge_labels(), vec![(2, 3)]);

        let l13 = build_character_graph(&gen_psl2(13).unwrap()).unwrap();
        assert_eq!(l13.vertices(), &[2, 3, 7, 13]);
        assert_eq!(l13.edge_labels(), vec![(2, 3), (2, 7)]);
        assert_eq!(l13.label(), "PSL2(13)");
    }

    #[test]
    fn complements() {
        let empty = graph(&[2, 3, 5], &[]);
        let k3 = empty.complement();
        assert_eq!(k3.edge_labels(), vec![(2, 3), (2, 5), (3, 5)]);
        assert_eq!(k3.complement().edge_count(), 0);

        let l13 = build_character_graph(&gen_psl2(13).unwrap()).unwrap();
        assert_eq!(l13.complement().edge_labels(), vec![(2, 13), (3, 7), (3, 13), (7, 13)]);
    }

    #[test]
    fn components() {
        assert_eq!(comps(&graph(&[2, 3, 5], &[])), vec![vec![2], vec![3], vec![5]]);
        let l7 = build_character_graph(&gen_psl2(7).unwrap()).unwrap();
        assert_eq!(comps(&l7), vec![vec![2, 3], vec![7]]);
        assert_eq!(comps(&graph(&[2, 3, 5], &[]).complement()), vec![vec![2, 3, 5]]);
        assert!(is_connected(&graph(&[], &[])));
        assert!(is_connected(&graph(&[7], &[])));
    }

    #[test]
    fn bipartite_certificates() {
        let path = graph(&[2, 3, 7], &[(2, 7), (7, 3)]);
        let cert = bipartite_certificate(&path);
        assert_eq!(cert, BipartiteCertificate::TwoColoring(vec![0, 0, 1]));
        assert!(cert.verify(&path));

        let tri = graph(&[3, 7, 13], &[(3, 7), (7, 13), (3, 13)]);
        let cert = bipartite_certificate(&tri);
        let cycle = cert.odd_cycle().unwrap();
        assert_eq!(tri.labels_of(cycle).len(), 3);
        assert!(cert.verify(&tri));

        let empty = graph(&[2, 3, 5], &[]);
        assert_eq!(
            bipartite_certificate(&empty),
            BipartiteCertificate::TwoColoring(vec![0, 0, 0])
        );

        let cert = bipartite_certificate(&c5());
        assert_eq!(cert.odd_cycle().unwrap().len(), 5);
        assert!(cert.verify(&c5()));

        // forged witnesses are rejected
        assert!(!BipartiteCertificate::TwoColoring(vec![0, 0, 0]).verify(&path));
        assert!(!BipartiteCertificate::OddCycle(vec![0, 1, 2]).verify(&path));
    }

    #[test]
    fn blocks() {
        let g = triangle_pendant();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(g.labels(d.blocks[0].vertices), vec![1, 2, 3]);
        assert!(!d.blocks[0].bipartite);
        assert_eq!(g.labels(d.blocks[1].vertices), vec![3, 4]);
        assert!(d.blocks[1].bipartite);
        assert_eq!(g.labels(d.cut_vertices), vec![3]);

        let tree = graph(&[1, 2, 3, 4, 5], &[(1, 2), (1, 3), (3, 4), (3, 5)]);
        let d = block_decomposition(&tree);
        assert_eq!(d.blocks.len(), 4);
        assert!(d.blocks.iter().all(|b| b.bipartite && b.edges.len() == 1));
        assert_eq!(tree.labels(d.cut_vertices), vec![1, 3]);

        let d = block_decomposition(&c5());
        assert_eq!(d.blocks.len(), 1);
        assert!(!d.blocks[0].bipartite);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn odd_cycle_membership() {
        let g = triangle_pendant();
        let odd = odd_cycle_vertices(&g);
        assert_eq!(g.labels(odd.vertices), vec![1, 2, 3]);
        for v in odd.vertices.iter() {
            assert!(odd.witness(v).unwrap().verify(&g, v));
        }
        assert!(odd.witness(3).is_none());

        let l13c = build_character_graph(&gen_psl2(13).unwrap()).unwrap().complement();
        let odd = odd_cycle_vertices(&l13c);
        assert_eq!(l13c.labels(odd.vertices), vec![3, 7, 13]);

        let path = graph(&[2, 3, 7], &[(2, 7), (7, 3)]);
        assert!(odd_cycle_vertices(&path).vertices.is_empty());
    }

    #[test]
    fn exhaustive_through_cycles() {
        // two triangles sharing vertex 3: every vertex has its own triangle
        let bowtie = graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]);
        for v in 0..5 {
            let c = odd_cycle_through(&bowtie, v).unwrap().unwrap();
            assert_eq!(c[0], v);
            assert!(c.len() % 2 == 1 && bowtie.is_cycle(&c));
        }
        let g = triangle_pendant();
        assert_eq!(odd_cycle_through(&g, 3).unwrap(), None);
        let big = PrimeGraph::new("big", 1..=13, []).unwrap();
        assert!(odd_cycle_through(&big, 0).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PrimeGraph::new("x", [2, 2], []).unwrap_err(),
            GraphError::DuplicateVertex(2)
        );
        assert_eq!(
            PrimeGraph::new("x", [2, 3], [(2, 2)]).unwrap_err(),
            GraphError::SelfLoop(2)
        );
        assert_eq!(
            PrimeGraph::new("x", [2, 3], [(2, 5)]).unwrap_err(),
            GraphError::UnknownVertex(5)
        );
        assert_eq!(PrimeGraph::new("x", [0], []).unwrap_err(), GraphError::ZeroLabel);
        assert!(PrimeGraph::new("x", 1..=64, []).is_ok());
        assert_eq!(
            PrimeGraph::new("x", 1..=65, []).unwrap_err(),
            GraphError::TooManyVertices(65)
        );
    }

    #[test]
    fn dot_output() {
        let l7 = build_character_graph(&gen_psl2(7).unwrap()).unwrap();
        assert_eq!(
            to_dot(&l7),
            "graph \"PSL2(7)\" {\n  node [shape=circle];\n  2;\n  3;\n  7;\n  2 -- 3;\n}\n"
        );
        let pair = pair_to_dot(&l7);
        assert_eq!(pair.matches("graph ").count(), 2);
        assert!(pair.contains("edge [style=dashed];"));
        assert!(pair.contains("  2 -- 7;\n  3 -- 7;\n"));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("c5", "1 2 3 4 5\n1 2\n2 3\n\n3 4\n4 5\n# closing edge\n5 1\n").unwrap();
        assert_eq!(g, {
            let mut h = c5();
            h.set_label("c5");
            h
        });
        assert_eq!(
            parse_edge_list("x", &to_edge_list(&g)).unwrap().edge_labels(),
            g.edge_labels()
        );
        assert!(parse_edge_list("e", "").unwrap().is_empty());
        let err = parse_edge_list("x", "1 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        assert!(matches!(
            parse_edge_list("x", "1 a\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert_eq!(
            parse_edge_list("x", "1 2\n1 9\n").unwrap_err(),
            GraphError::UnknownVertex(9)
        );
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0usize, 3, 5].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4) && !s.contains(200));
        assert_eq!(VertexSet::full(64).len(), 64);
        let a: VertexSet = [0usize, 3].into_iter().collect();
        let b: VertexSet = [1usize, 2].into_iter().collect();
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert!(a.bits() > b.bits());
    }
}
