//! Labeled spanning trees and the map between them and minimal separating
//! families of size `n - 1`.
//!
//! [`phi_forward`] joins two elements when exactly one member of the family
//! cuts them. On minimal separating families of size `n - 1` this yields a
//! spanning tree, and [`phi_inverse`] undoes it by taking, for each tree edge,
//! the bipartition into the two components left after deleting that edge.
//! Trees are enumerated through Prüfer sequences, which gives exactly
//! `n^(n-2)` of them.

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;

use crate::bipartition::{Bipartition, FamilyOfBipartitions, GroundSet};
use crate::error::{Error, Result};

/// Largest `n` for which full tree or family enumeration is allowed.
pub const MAX_TREE_ENUMERATION_N: usize = 9;

/// A simple undirected graph on vertices `1..n`. Edges are stored as `(i, j)`
/// with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let ground = GroundSet::new(n)?;
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            ground.check_element(a)?;
            ground.check_element(b)?;
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            let edge = (a.min(b), a.max(b));
            if !set.insert(edge) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    edge.0, edge.1
                )));
            }
        }
        Ok(Self { n, edges: set })
    }

    /// Parse `"i-j,i-j,..."`. When `n` is `None` it is the largest vertex
    /// mentioned (1 for an empty list).
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let mut edges = Vec::new();
        if !text.is_empty() {
            for token in text.split(',') {
                let token = token.trim();
                let (a, b) = token
                    .split_once('-')
                    .ok_or_else(|| Error::InvalidGraph(format!("bad edge token {token:?}")))?;
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidGraph(format!("bad vertex in {token:?}")))
                };
                edges.push((parse(a)?, parse(b)?));
            }
        }
        let inferred = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(1);
        Self::new(n.unwrap_or(inferred), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Connected, acyclic and with `n - 1` edges.
    pub fn is_spanning_tree(&self) -> bool {
        if self.edges.len() + 1 != self.n {
            return false;
        }
        // n - 1 edges plus acyclic implies connected
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// Edge-list form `1-2,2-3,3-4`.
impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// A spanning tree on `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree(LabeledGraph);

impl LabeledTree {
    pub fn new(graph: LabeledGraph) -> Result<Self> {
        if !graph.is_spanning_tree() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices do not form a spanning tree",
                graph.edge_count(),
                graph.n()
            )));
        }
        Ok(Self(graph))
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    /// Vertices on the side of `from` once edge `(from, other)` is removed.
    fn side_mask(&self, adj: &[Vec<usize>], from: usize, other: usize) -> u64 {
        let mut mask = 1u64 << (from - 1);
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                let bit = 1u64 << (w - 1);
                if (v == from && w == other) || mask & bit != 0 {
                    continue;
                }
                mask |= bit;
                stack.push(w);
            }
        }
        mask
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<LabeledGraph> for LabeledTree {
    type Error = Error;

    fn try_from(graph: LabeledGraph) -> Result<Self> {
        Self::new(graph)
    }
}

pub fn is_spanning_tree(g: &LabeledGraph) -> bool {
    g.is_spanning_tree()
}

/// A Prüfer sequence: `n - 2` entries from `1..n`, defined for `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferSequence {
    n: usize,
    seq: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::MalformedSequence(format!(
                "sequences need n >= 2, got {n}"
            )));
        }
        GroundSet::new(n)?;
        if seq.len() != n - 2 {
            return Err(Error::MalformedSequence(format!(
                "length {} but n - 2 = {}",
                seq.len(),
                n - 2
            )));
        }
        if let Some(&bad) = seq.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::MalformedSequence(format!(
                "entry {bad} outside 1..={n}"
            )));
        }
        Ok(Self { n, seq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }
}

impl fmt::Display for PruferSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn prufer_decode(s: &PruferSequence) -> LabeledTree {
    let n = s.n;
    let mut degree = vec![1usize; n + 1];
    for &v in &s.seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &s.seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    let graph = LabeledGraph::new(n, edges).expect("decoded edges are valid");
    LabeledTree(graph)
}

pub fn prufer_encode(t: &LabeledTree) -> PruferSequence {
    let n = t.n();
    let adj = t.0.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n.saturating_sub(2));
    while seq.len() + 2 < n {
        let Reverse(leaf) = leaves.pop().expect("trees with >2 vertices have leaves");
        removed[leaf] = true;
        let parent = adj[leaf]
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf has one live neighbour");
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    PruferSequence { n, seq }
}

/// The graph joining `i` and `j` whenever exactly one member of `f` cuts them.
pub fn phi_forward(f: &FamilyOfBipartitions) -> LabeledGraph {
    let n = f.n();
    let mut edges = BTreeSet::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let cutters = f
                .members()
                .iter()
                .filter(|p| p.in_coblock(i) != p.in_coblock(j))
                .count();
            if cutters == 1 {
                edges.insert((i, j));
            }
        }
    }
    LabeledGraph { n, edges }
}

/// One bipartition per tree edge: the two components left after deleting it.
pub fn phi_inverse(t: &LabeledTree) -> FamilyOfBipartitions {
    let n = t.n();
    let adj = t.0.adjacency();
    let members = t.0.edges().map(|(a, b)| {
        // traverse from the smaller endpoint
        let side = t.side_mask(&adj, a, b);
        Bipartition::from_block(n, crate::bipartition::mask_elements(side))
            .expect("component lies inside the ground set")
    });
    FamilyOfBipartitions::new(n, members).expect("all members share n")
}

fn check_enumeration_bound(n: usize) -> Result<()> {
    if !(2..=MAX_TREE_ENUMERATION_N).contains(&n) {
        return Err(Error::Capacity {
            what: "spanning-tree enumeration (2 <= n)",
            n,
            bound: MAX_TREE_ENUMERATION_N,
        });
    }
    Ok(())
}

/// All Prüfer sequences over `1..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct PruferSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for PruferSequences {
    type Item = PruferSequence;

    fn next(&mut self) -> Option<PruferSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.n {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(PruferSequence {
            n: self.n,
            seq: current,
        })
    }
}

pub fn prufer_sequences(n: usize) -> Result<PruferSequences> {
    check_enumeration_bound(n)?;
    Ok(PruferSequences {
        n,
        next: Some(vec![1; n - 2]),
    })
}

/// Every spanning tree on `1..n`, in Prüfer-lexicographic order.
pub fn spanning_trees(n: usize) -> Result<impl Iterator<Item = LabeledTree>> {
    Ok(prufer_sequences(n)?.map(|s| prufer_decode(&s)))
}

/// Every minimal separating family of size `n - 1`, as the image of each
/// spanning tree under [`phi_inverse`].
pub fn enumerate_minimal_max_families(
    n: usize,
) -> Result<impl Iterator<Item = FamilyOfBipartitions>> {
    Ok(spanning_trees(n)?.map(|t| phi_inverse(&t)))
}
