//! Simple undirected graphs stored as an upper-triangle bitset.
//!
//! Pair `(i, j)` with `i < j` (0-based) lives at bit index `j(j-1)/2 + i`,
//! which is the column-major order used by graph6. An order-`n` graph with
//! `n <= 11` therefore fits its whole edge set in a single `u64` word, and
//! that word is exactly the enumeration mask used by the exhaustive sweeps.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopRejected(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Index of the unordered pair `{i, j}` (`i != j`, 0-based) in the bitset.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

/// Number of vertex pairs of an order-`n` graph.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Graph of order `n` with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidParameter("graph order must be at least 1".into()));
        }
        Ok(Self { order: n, bits: vec![0; pair_count(n).div_ceil(64)], edge_count: 0 })
    }

    /// Builds a graph from 1-based unordered pairs. Duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::IndexOutOfRange { vertex: v, order: n });
                }
            }
            if a == b {
                return Err(GraphError::LoopRejected(a));
            }
            g.insert(a - 1, b - 1);
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 0-based endpoints.
    pub fn from_edges0(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let shifted: Vec<_> = edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        Self::from_edges(n, &shifted)
    }

    /// Graph whose pair bits are the low `n(n-1)/2` bits of `mask`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let pairs = pair_count(n);
        if pairs > 64 {
            return Err(GraphError::InvalidParameter(format!(
                "order {n} has {pairs} vertex pairs, more than fit in a 64-bit mask"
            )));
        }
        let mut g = Self::empty(n)?;
        let mask = if pairs == 64 { mask } else { mask & ((1u64 << pairs) - 1) };
        if pairs > 0 {
            g.bits[0] = mask;
        }
        g.edge_count = mask.count_ones() as usize;
        Ok(g)
    }

    /// Builds from a raw pair-bit stream (graph6 order). Bits past the last
    /// pair are ignored.
    pub(crate) fn from_pair_bits(n: usize, bits: Vec<u64>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let pairs = pair_count(n);
        for (w, word) in g.bits.iter_mut().enumerate() {
            let mut value = bits.get(w).copied().unwrap_or(0);
            let hi = (w + 1) * 64;
            if hi > pairs {
                let keep = pairs - w * 64;
                value &= if keep == 64 { u64::MAX } else { (1u64 << keep) - 1 };
            }
            *word = value;
        }
        g.edge_count = g.bits.iter().map(|w| w.count_ones() as usize).sum();
        Ok(g)
    }

    fn insert(&mut self, i: usize, j: usize) {
        let idx = pair_index(i, j);
        let (w, b) = (idx / 64, idx % 64);
        if self.bits[w] >> b & 1 == 0 {
            self.bits[w] |= 1 << b;
            self.edge_count += 1;
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Whether 0-based vertices `i` and `j` are adjacent.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.order || j >= self.order {
            return false;
        }
        self.pair_bit(pair_index(i, j))
    }

    #[inline]
    pub fn pair_bit(&self, idx: usize) -> bool {
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// Edges as 0-based `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut out = Vec::with_capacity(self.edge_count);
        for i in 0..n {
            for j in i + 1..n {
                if self.pair_bit(pair_index(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for (i, j) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors().iter().map(Vec::len).collect()
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        let n = self.order;
        let mut a = vec![0.0; n * n];
        for (i, j) in self.edges() {
            a[i * n + j] = 1.0;
            a[j * n + i] = 1.0;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.order && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.neighbors();
        let mut color = vec![u8::MAX; self.order];
        for start in 0..self.order {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// `g ⊔ h`: vertices of `h` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order + other.order;
        let shift = self.order;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(i, j)| (i + shift, j + shift)));
        Graph::from_edges0(n, &edges).expect("union of valid graphs is valid")
    }

    /// Tensor product with `K_2` (the bipartite double cover). Vertex `v` maps
    /// to `v` and `v + n`; each edge `{i, j}` yields `{i, j + n}` and `{j, i + n}`,
    /// so the adjacency matrix is `[[0, A], [A, 0]]`.
    pub fn tensor_with_k2(&self) -> Graph {
        let n = self.order;
        let mut edges = Vec::with_capacity(2 * self.edge_count);
        for (i, j) in self.edges() {
            edges.push((i, j + n));
            edges.push((j, i + n));
        }
        Graph::from_edges0(2 * n, &edges).expect("double cover of a valid graph is valid")
    }

    /// Structural classifiers used to recognise extremal graphs up to relabeling.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.degrees().iter().all(|&d| d <= 2)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == pair_count(self.order)
    }

    pub fn is_star(&self) -> bool {
        self.is_tree() && (self.order <= 2 || self.degrees().contains(&(self.order - 1)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Path(usize),
    Complete(usize),
    /// `S_n = K_{n-1,1}`: one centre and `n - 1` leaves.
    Star(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
}

impl FamilyId {
    pub fn order(&self) -> usize {
        match *self {
            FamilyId::Path(n) | FamilyId::Complete(n) | FamilyId::Star(n) | FamilyId::Cycle(n) => n,
            FamilyId::CompleteBipartite(a, b) => a + b,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Path(n) => write!(f, "P{n}"),
            FamilyId::Complete(n) => write!(f, "K{n}"),
            FamilyId::Star(n) => write!(f, "S{n}"),
            FamilyId::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            FamilyId::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

impl std::str::FromStr for FamilyId {
    type Err = GraphError;

    /// Parses `P5`, `K7`, `S4`, `C6` or `K2,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidParameter(format!("unrecognised family spec {s:?}"));
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match (kind, rest.split_once(',')) {
            ('K', Some((a, b))) => Ok(FamilyId::CompleteBipartite(num(a)?, num(b)?)),
            ('P', None) => Ok(FamilyId::Path(num(rest)?)),
            ('K', None) => Ok(FamilyId::Complete(num(rest)?)),
            ('S', None) => Ok(FamilyId::Star(num(rest)?)),
            ('C', None) => Ok(FamilyId::Cycle(num(rest)?)),
            _ => Err(bad()),
        }
    }
}

pub fn family(id: FamilyId) -> Result<Graph, GraphError> {
    let invalid = |msg: &str| Err(GraphError::InvalidParameter(format!("{id}: {msg}")));
    match id {
        FamilyId::Path(n) => {
            if n < 1 {
                return invalid("order must be at least 1");
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges0(n, &edges)
        }
        FamilyId::Complete(n) => {
            if n < 1 {
                return invalid("order must be at least 1");
            }
            let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            Graph::from_edges0(n, &edges)
        }
        FamilyId::Star(n) => {
            if n < 1 {
                return invalid("order must be at least 1");
            }
            let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
            Graph::from_edges0(n, &edges)
        }
        FamilyId::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return invalid("both parts must be nonempty");
            }
            let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
            Graph::from_edges0(a + b, &edges)
        }
        FamilyId::Cycle(n) => {
            if n < 3 {
                return invalid("a cycle needs at least 3 vertices");
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges0(n, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_p3() {
        let g = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g, family(FamilyId::Path(3)).unwrap());
    }

    #[test]
    fn from_edges_single_vertex_and_dedup() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        let g = Graph::from_edges(4, &[(1, 2), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g, Graph::from_edges(4, &[(1, 2)]).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(GraphError::LoopRejected(2)));
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(GraphError::IndexOutOfRange { vertex: 4, order: 3 })
        );
        assert!(Graph::from_edges(3, &[(0, 1)]).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn family_edge_counts() {
        assert_eq!(family(FamilyId::Complete(4)).unwrap().edge_count(), 6);
        let star = family(FamilyId::Star(4)).unwrap();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(family(FamilyId::Path(2)).unwrap(), family(FamilyId::Complete(2)).unwrap());
        assert_eq!(family(FamilyId::Cycle(5)).unwrap().edge_count(), 5);
        assert!(family(FamilyId::Path(0)).is_err());
        assert!(family(FamilyId::CompleteBipartite(0, 3)).is_err());
        assert!(family(FamilyId::Cycle(2)).is_err());
    }

    #[test]
    fn star_matches_one_sided_bipartite_degrees() {
        for n in 2..8 {
            let mut a = family(FamilyId::CompleteBipartite(n - 1, 1)).unwrap().degrees();
            let mut b = family(FamilyId::Star(n)).unwrap().degrees();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn disjoint_union_shapes() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        let u = k3.disjoint_union(&k3);
        assert_eq!((u.order(), u.edge_count()), (6, 6));
        assert!(!u.is_connected());

        let p2 = family(FamilyId::Path(2)).unwrap();
        let pp = p2.disjoint_union(&p2);
        assert_eq!((pp.order(), pp.edge_count()), (4, 2));
        assert!(pp.degrees().iter().all(|&d| d <= 1));

        let single = Graph::empty(1).unwrap();
        let g = k3.disjoint_union(&single);
        assert_eq!(g.order(), 4);
        assert_eq!(g.degrees()[3], 0);
    }

    #[test]
    fn tensor_with_k2_block_structure() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        let h = k3.tensor_with_k2();
        assert_eq!((h.order(), h.edge_count()), (6, 6));
        for i in 0..3 {
            for j in 0..3 {
                assert!(!h.has_edge(i, j));
                assert!(!h.has_edge(i + 3, j + 3));
                assert_eq!(h.has_edge(i, j + 3), k3.has_edge(i, j));
            }
        }
        let single = Graph::empty(1).unwrap().tensor_with_k2();
        assert_eq!((single.order(), single.edge_count()), (2, 0));
        assert!(h.is_bipartite());
    }

    #[test]
    fn structural_predicates() {
        // five vertices, vertex 5 isolated
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(!g.is_connected());
        assert!(family(FamilyId::Star(5)).unwrap().is_tree());
        assert!(family(FamilyId::Path(5)).unwrap().is_tree());
        assert!(!family(FamilyId::Complete(3)).unwrap().is_bipartite());
        assert!(family(FamilyId::CompleteBipartite(2, 3)).unwrap().is_bipartite());
        assert!(!family(FamilyId::Cycle(5)).unwrap().is_bipartite());
        assert!(family(FamilyId::Cycle(6)).unwrap().is_bipartite());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn pair_mask_matches_edges() {
        // bits (0,1),(0,2),(1,2) -> K3
        assert_eq!(Graph::from_pair_mask(3, 0b111).unwrap(), family(FamilyId::Complete(3)).unwrap());
        assert_eq!(Graph::from_pair_mask(3, 0b101).unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::from_pair_mask(12, 0).is_err());
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!("P5".parse::<FamilyId>().unwrap(), FamilyId::Path(5));
        assert_eq!("K2,3".parse::<FamilyId>().unwrap(), FamilyId::CompleteBipartite(2, 3));
        assert_eq!("S4".parse::<FamilyId>().unwrap().to_string(), "S4");
        assert!("X3".parse::<FamilyId>().is_err());
        assert!("K".parse::<FamilyId>().is_err());
        assert!("P5,2".parse::<FamilyId>().is_err());
    }
}
