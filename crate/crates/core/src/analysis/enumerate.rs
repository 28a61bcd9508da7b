//! Exhaustive labeled enumeration of connected graphs and trees.

use crate::graph::{pair_count, Graph};

use super::AnalysisError;

pub const MAX_CONNECTED_ORDER: usize = 8;
pub const MAX_TREE_ORDER: usize = 10;

/// Residue class `index mod count` of the enumeration index space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    index: u64,
    count: u64,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: u64, count: u64) -> Result<Self, AnalysisError> {
        if count == 0 || index >= count {
            return Err(AnalysisError::InvalidShard { index, count });
        }
        Ok(Self { index, count })
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn is_all(&self) -> bool {
        self.count == 1
    }

    /// Splits this shard into `parts` finer shards whose union is `self`.
    pub fn split(&self, parts: u64) -> Vec<Shard> {
        (0..parts)
            .map(|s| Shard { index: self.index + self.count * s, count: self.count * parts })
            .collect()
    }

    fn indices(&self, total: u64) -> impl Iterator<Item = u64> {
        (self.index..total).step_by(self.count as usize)
    }
}

/// A graph paired with its position in the enumeration order.
pub type Indexed = (u64, Graph);

/// Connectivity of the graph encoded by a pair mask, without allocating.
fn mask_is_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    let mut rows = [0u64; 64];
    let mut bits = mask;
    while bits != 0 {
        let idx = bits.trailing_zeros() as usize;
        let (i, j) = pairs[idx];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        bits &= bits - 1;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= rows[v];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    // graph6 column-major order
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled connected graph of order `n`, indexed by its pair mask.
pub fn enumerate_connected_indexed(
    n: usize,
    shard: Shard,
) -> Result<impl Iterator<Item = Indexed>, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::OrderTooSmall(n));
    }
    if n > MAX_CONNECTED_ORDER {
        return Err(AnalysisError::OrderTooLarge { n, max: MAX_CONNECTED_ORDER });
    }
    let pairs = pair_list(n);
    let total = 1u64 << pair_count(n);
    Ok(shard
        .indices(total)
        .filter(move |&mask| mask_is_connected(n, mask, &pairs))
        .map(move |mask| (mask, Graph::from_pair_mask(n, mask).expect("order checked"))))
}

pub fn enumerate_connected(n: usize, shard: Shard) -> Result<impl Iterator<Item = Graph>, AnalysisError> {
    Ok(enumerate_connected_indexed(n, shard)?.map(|(_, g)| g))
}

/// Number of labeled trees, `n^{n-2}` (1 for `n = 1`).
pub fn tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Decodes the Prüfer sequence whose base-`n` digits (most significant
/// first) are given by `index`.
pub fn prufer_tree(n: usize, index: u64) -> Graph {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edges0(n, edges).expect("valid order");
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut rest = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges0(n, &edges).expect("Prüfer decoding yields a simple graph")
}

pub fn enumerate_trees_indexed(n: usize, shard: Shard) -> Result<impl Iterator<Item = Indexed>, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::OrderTooSmall(n));
    }
    if n > MAX_TREE_ORDER {
        return Err(AnalysisError::OrderTooLarge { n, max: MAX_TREE_ORDER });
    }
    Ok(shard.indices(tree_count(n)).map(move |i| (i, prufer_tree(n, i))))
}

pub fn enumerate_trees(n: usize, shard: Shard) -> Result<impl Iterator<Item = Graph>, AnalysisError> {
    Ok(enumerate_trees_indexed(n, shard)?.map(|(_, g)| g))
}
