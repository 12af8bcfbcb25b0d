//! Small simple graphs: exhaustive enumeration up to isomorphism, chordal
//! graphs, and graph-only invariants used as cross-checks.

use std::collections::HashSet;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest order handled by the enumerators.
pub const MAX_GRAPH_ORDER: usize = 8;

/// A simple graph on `0..n` as adjacency bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: usize,
    adj: [u8; MAX_GRAPH_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GRAPH_ORDER, "order {n} exceeds {MAX_GRAPH_ORDER}");
        SmallGraph {
            n,
            adj: [0; MAX_GRAPH_ORDER],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn neighbors(&self, a: usize) -> u8 {
        self.adj[a]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The graph as a 2-uniform hypergraph on `1..=n`.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .edges()
            .into_iter()
            .map(|(a, b)| [a as u32 + 1, b as u32 + 1].iter().collect());
        Hypergraph::new(VertexSet::from_iter(1..=self.n as u32), edges)
            .expect("simple graphs are valid hypergraphs")
    }

    /// Inverse of `to_hypergraph` for 2-uniform hypergraphs on `1..=n`.
    pub fn from_hypergraph(c: &Hypergraph) -> Option<Self> {
        let n = c.vertex_count();
        if n > MAX_GRAPH_ORDER || c.vertices() != VertexSet::from_iter(1..=n as u32) {
            return None;
        }
        let mut g = SmallGraph::empty(n);
        for &e in c.edges() {
            if e.len() != 2 {
                return None;
            }
            let a = e.min()? as usize - 1;
            let b = e.max()? as usize - 1;
            g.add_edge(a, b);
        }
        Some(g)
    }

    fn permuted(&self, perm: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::empty(self.n);
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    /// Vertex invariant used to restrict the canonical search.
    fn signature(&self, a: usize) -> (u32, Vec<u32>) {
        let mut nd: Vec<u32> = (0..self.n)
            .filter(|&b| self.has_edge(a, b))
            .map(|b| self.adj[b].count_ones())
            .collect();
        nd.sort_unstable();
        (self.adj[a].count_ones(), nd)
    }

    /// The least relabelling among those that sort vertices by signature.
    pub fn canonical(&self) -> SmallGraph {
        let mut order: Vec<usize> = (0..self.n).collect();
        let sig: Vec<_> = (0..self.n).map(|a| self.signature(a)).collect();
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
        // Blocks of equal signature may be permuted freely.
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match blocks.last_mut() {
                Some(b) if sig[b[0]] == sig[v] => b.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        let mut best: Option<SmallGraph> = None;
        let mut perm = vec![0; self.n];
        self.canonical_rec(&blocks, 0, 0, &mut perm, &mut best);
        best.expect("at least one labelling")
    }

    fn canonical_rec(
        &self,
        blocks: &[Vec<usize>],
        block: usize,
        offset: usize,
        perm: &mut Vec<usize>,
        best: &mut Option<SmallGraph>,
    ) {
        if block == blocks.len() {
            let g = self.permuted(perm);
            if best.is_none_or(|b| g.adj < b.adj) {
                *best = Some(g);
            }
            return;
        }
        let mut items = blocks[block].clone();
        permutations(&mut items, 0, &mut |p| {
            for (i, &v) in p.iter().enumerate() {
                perm[v] = offset + i;
            }
            self.canonical_rec(blocks, block + 1, offset + p.len(), perm, best);
        });
    }

    /// Repeatedly removes simplicial vertices; chordal iff all go.
    pub fn is_chordal(&self) -> bool {
        let mut alive: u8 = if self.n == 8 { u8::MAX } else { (1u8 << self.n) - 1 };
        'outer: while alive != 0 {
            for v in 0..self.n {
                if alive >> v & 1 == 0 {
                    continue;
                }
                let nb = self.adj[v] & alive;
                let clique = (0..self.n)
                    .filter(|&u| nb >> u & 1 == 1)
                    .all(|u| nb & !(1 << u) & !self.adj[u] == 0);
                if clique {
                    alive &= !(1 << v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// Minimum size of a set whose open neighbourhoods cover every vertex;
    /// `None` when some vertex is isolated.
    pub fn total_domination_number(&self) -> Option<usize> {
        if (0..self.n).any(|v| self.adj[v] == 0) {
            return None;
        }
        let all: u16 = (1u16 << self.n) - 1;
        (0u16..=all)
            .filter(|s| {
                let covered = (0..self.n)
                    .filter(|&v| s >> v & 1 == 1)
                    .fold(0u16, |acc, v| acc | self.adj[v] as u16);
                covered == all
            })
            .map(|s| s.count_ones() as usize)
            .min()
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, emit);
        items.swap(k, i);
    }
}

/// All graphs of order `n` up to isomorphism, in canonical form.
pub fn graphs_of_order(n: usize) -> Vec<SmallGraph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut seen = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut g = SmallGraph::empty(n);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(a, b);
            }
        }
        seen.insert(g.canonical());
    }
    let mut out: Vec<SmallGraph> = seen.into_iter().collect();
    out.sort();
    out
}

/// All graphs with `1..=max_n` vertices up to isomorphism.
pub fn all_graphs(max_n: usize) -> Vec<SmallGraph> {
    (1..=max_n).flat_map(graphs_of_order).collect()
}

/// Chordal graphs of order `n` up to isomorphism, grown by attaching a new
/// vertex to a clique of a smaller chordal graph.
pub fn chordal_graphs_of_order(n: usize) -> Vec<SmallGraph> {
    assert!(n <= MAX_GRAPH_ORDER);
    let mut level: HashSet<SmallGraph> = HashSet::from([SmallGraph::empty(0)]);
    for k in 0..n {
        let mut next = HashSet::new();
        for g in &level {
            for clique in 0u16..1 << k {
                let members: Vec<usize> = (0..k).filter(|&v| clique >> v & 1 == 1).collect();
                let is_clique = members
                    .iter()
                    .all(|&a| members.iter().all(|&b| a == b || g.has_edge(a, b)));
                if !is_clique {
                    continue;
                }
                let mut h = *g;
                h.n = k + 1;
                for &a in &members {
                    h.add_edge(a, k);
                }
                next.insert(h.canonical());
            }
        }
        level = next;
    }
    let mut out: Vec<SmallGraph> = level.into_iter().collect();
    out.sort();
    out
}

pub fn all_chordal_graphs(max_n: usize) -> Vec<SmallGraph> {
    (1..=max_n).flat_map(chordal_graphs_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| graphs_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn chordal_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| chordal_graphs_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 27, 94]);
    }

    #[test]
    fn chordality() {
        let mut c4 = SmallGraph::empty(4);
        for i in 0..4 {
            c4.add_edge(i, (i + 1) % 4);
        }
        assert!(!c4.is_chordal());
        c4.add_edge(0, 2);
        assert!(c4.is_chordal());
    }

    #[test]
    fn total_domination() {
        let mut c4 = SmallGraph::empty(4);
        for i in 0..4 {
            c4.add_edge(i, (i + 1) % 4);
        }
        assert_eq!(c4.total_domination_number(), Some(2));
        assert_eq!(SmallGraph::empty(2).total_domination_number(), None);
        assert_eq!(SmallGraph::empty(0).total_domination_number(), Some(0));
    }

    #[test]
    fn hypergraph_round_trip() {
        let g = graphs_of_order(4)[5];
        assert_eq!(SmallGraph::from_hypergraph(&g.to_hypergraph()), Some(g));
    }
}
