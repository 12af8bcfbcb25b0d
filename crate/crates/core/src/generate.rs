//! Seeded random hypergraph generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::{k_subsets, Hypergraph};
use crate::vertex_set::{minimal_sets, VertexSet};

/// Vertex count uniform in `1..=max_vertices`, each candidate edge of an
/// allowed size kept with probability `edge_probability`, reduced to the
/// inclusion-minimal sets, then thinned at random to `max_edges`.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomModel {
    pub max_vertices: usize,
    pub edge_sizes: Vec<usize>,
    pub edge_probability: f64,
    pub max_edges: Option<usize>,
}

impl RandomModel {
    pub fn uniform(max_vertices: usize, d: usize, edge_probability: f64) -> Self {
        RandomModel {
            max_vertices,
            edge_sizes: vec![d],
            edge_probability,
            max_edges: None,
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Hypergraph {
        let n = rng.gen_range(1..=self.max_vertices.max(1));
        let items: Vec<u32> = (1..=n as u32).collect();
        let mut edges = Vec::new();
        for &k in &self.edge_sizes {
            k_subsets(&items, k, &mut |e| {
                if rng.gen_bool(self.edge_probability) {
                    edges.push(e);
                }
            });
        }
        let mut edges = minimal_sets(edges);
        if let Some(m) = self.max_edges {
            if edges.len() > m {
                edges.shuffle(rng);
                edges.truncate(m);
            }
        }
        Hypergraph::from_parts_unchecked(VertexSet::from_iter(1..=n as u32), edges)
    }
}

/// A `d`-uniform hypergraph grown one vertex at a time. Each new vertex `v`
/// either starts a fresh edge on new vertices or is attached to a set `S`
/// of existing vertices whose `d`-subsets are all edges, gaining the edges
/// `{v} ∪ T` for the `(d - 1)`-subsets `T ⊆ S`. Sets `S` of size `d - 1`
/// are taken inside an existing edge.
///
/// The output is not guaranteed to be properly-connected or triangulated;
/// callers filter.
pub fn grown_uniform<R: Rng>(rng: &mut R, d: usize, vertices: usize) -> Hypergraph {
    assert!(d >= 2 && vertices >= d);
    let mut edges: Vec<VertexSet> = vec![VertexSet::from_iter(1..=d as u32)];
    let mut n = d;
    while n < vertices {
        let v = n as u32 + 1;
        if vertices - n >= d && rng.gen_bool(0.1) {
            edges.push(VertexSet::from_iter(v..v + d as u32));
            n += d;
            continue;
        }
        let base = *edges.choose(rng).expect("at least one edge");
        let mut s: VertexSet = {
            let mut members: Vec<u32> = base.iter().collect();
            members.shuffle(rng);
            members[..d - 1].iter().collect()
        };
        // Greedily enlarge S while it stays complete.
        let mut others: Vec<u32> = (1..=n as u32).filter(|&u| !s.contains(u)).collect();
        others.shuffle(rng);
        for u in others {
            if !rng.gen_bool(0.5) {
                continue;
            }
            let t = s.with(u);
            let items: Vec<u32> = s.iter().collect();
            let mut complete = true;
            k_subsets(&items, d - 1, &mut |r| {
                if !edges.contains(&r.with(u)) {
                    complete = false;
                }
            });
            if complete {
                s = t;
            }
        }
        let items: Vec<u32> = s.iter().collect();
        k_subsets(&items, d - 1, &mut |r| edges.push(r.with(v)));
        n += 1;
    }
    Hypergraph::from_parts_unchecked(VertexSet::from_iter(1..=n as u32), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_model_respects_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let model = RandomModel {
            max_vertices: 6,
            edge_sizes: vec![2, 3],
            edge_probability: 0.5,
            max_edges: Some(5),
        };
        for _ in 0..100 {
            let c = model.sample(&mut rng);
            assert!(c.len() <= 5 && c.vertex_count() <= 6);
            assert!(Hypergraph::new(c.vertices(), c.edges().iter().copied()).is_ok());
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let model = RandomModel::uniform(8, 3, 0.3);
        let a: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            (0..20).map(|_| model.sample(&mut rng)).collect()
        };
        let b: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            (0..20).map(|_| model.sample(&mut rng)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn grown_hypergraphs_are_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let c = grown_uniform(&mut rng, 3, 7);
            assert_eq!(c.uniformity(), Some(3));
            assert!(Hypergraph::new(c.vertices(), c.edges().iter().copied()).is_ok());
        }
    }
}
