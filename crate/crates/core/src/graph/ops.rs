use super::{normalize, Graph, Vertex};
use crate::error::{Error, Result};

/// Partition of `V(G)` into disjoint nonempty parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<Vertex>>,
    part_of: Vec<usize>,
}

impl VertexPartition {
    /// Validates that `parts` partitions `0..n`. Each part is sorted.
    pub fn new(n: usize, parts: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(VertexPartition { parts, part_of })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            parts: (0..n).map(|v| vec![v]).collect(),
            part_of: (0..n).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v]
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// The quotient `G/P`: vertex `i` is part `i`, adjacent parts are joined by
/// one edge, and intra-part edges vanish.
pub fn contract_partition(g: &Graph, p: &VertexPartition) -> Result<Graph> {
    if p.part_of.len() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.part_of.len(),
            g.n()
        )));
    }
    for (i, part) in p.parts.iter().enumerate() {
        if !g.is_connected_set(part) {
            return Err(Error::PartNotConnected(i));
        }
    }
    let edges = g.edges().iter().filter_map(|&(u, v)| {
        let (a, b) = (p.part_of[u], p.part_of[v]);
        (a != b).then(|| normalize(a, b))
    });
    Ok(Graph::from_edges_lossy(p.len(), edges))
}

/// Strong product `H1 ⊠ H2`; vertex `(u, v)` gets label `u * |V(H2)| + v`.
pub fn strong_product(h1: &Graph, h2: &Graph) -> Graph {
    let n2 = h2.n();
    let label = |u: Vertex, v: Vertex| u * n2 + v;
    let mut edges = Vec::new();
    for u in h1.vertices() {
        // u = u', vv' in E(H2)
        for &(a, b) in h2.edges() {
            edges.push((label(u, a), label(u, b)));
        }
    }
    for &(u, w) in h1.edges() {
        for v in h2.vertices() {
            // uu' in E(H1), v = v'
            edges.push((label(u, v), label(w, v)));
            // uu' in E(H1), vv' in E(H2), both orientations
            for &x in h2.neighbors(v) {
                edges.push(normalize(label(u, v), label(w, x)));
            }
        }
    }
    Graph::from_edges_lossy(h1.n() * n2, edges)
}

/// Replaces each edge by a path with `s` new internal vertices. The internal
/// vertices of edge `i` (in [`Graph::edges`] order) are labelled
/// `n + i*s .. n + (i+1)*s`, ordered from the smaller endpoint.
pub fn subdivide(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "subdivision count must be positive".into(),
        ));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(g.m() * (s + 1));
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + i * s;
        edges.push((u, base));
        for k in 0..s - 1 {
            edges.push((base + k, base + k + 1));
        }
        edges.push(normalize(base + s - 1, v));
    }
    Graph::from_edges(n + g.m() * s, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn singleton_contraction_is_identity() {
        let g = fam(Family::Grid { rows: 3, cols: 4 });
        let c = contract_partition(&g, &VertexPartition::singletons(g.n())).unwrap();
        assert_eq!(c, g);
    }

    #[test]
    fn full_contraction_is_k1() {
        let g = fam(Family::Cycle(5));
        let p = VertexPartition::new(5, vec![(0..5).collect()]).unwrap();
        let c = contract_partition(&g, &p).unwrap();
        assert_eq!((c.n(), c.m()), (1, 0));
    }

    #[test]
    fn c6_pairs_contract_to_triangle() {
        let g = fam(Family::Cycle(6));
        let p = VertexPartition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let c = contract_partition(&g, &p).unwrap();
        assert_eq!(c, fam(Family::Cycle(3)));
    }

    #[test]
    fn disconnected_part_rejected() {
        let g = fam(Family::Path(4));
        let p = VertexPartition::new(4, vec![vec![0, 2], vec![1], vec![3]]).unwrap();
        assert_eq!(contract_partition(&g, &p), Err(Error::PartNotConnected(0)));
        assert_eq!(
            Error::PartNotConnected(0).to_string(),
            "part 0 not connected"
        );
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(2, vec![vec![0], vec![], vec![1]]).is_err());
    }

    #[test]
    fn strong_product_small_cases() {
        let p2 = fam(Family::Path(2));
        assert_eq!(strong_product(&p2, &p2), fam(Family::Clique(4)));
        let h = fam(Family::Cycle(5));
        assert_eq!(strong_product(&Graph::empty(1), &h), h);
        // King graph on 3x3: 12 orthogonal + 8 diagonal edges.
        let p3 = fam(Family::Path(3));
        let king = strong_product(&p3, &p3);
        assert_eq!((king.n(), king.m()), (9, 20));
    }

    #[test]
    fn subdivision_examples() {
        assert_eq!(subdivide(&fam(Family::Path(2)), 1).unwrap().m(), 2);
        let c6 = subdivide(&fam(Family::Cycle(3)), 1).unwrap();
        assert_eq!((c6.n(), c6.m(), c6.max_degree()), (6, 6, 2));
        assert!(c6.is_connected());
        let c8 = subdivide(&fam(Family::Biclique(2, 2)), 1).unwrap();
        assert_eq!((c8.n(), c8.m(), c8.max_degree()), (8, 8, 2));
        assert!(c8.is_connected());
        assert!(subdivide(&c8, 0).is_err());
    }
}
