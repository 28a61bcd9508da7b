//! Exact walk counts from powers of the adjacency matrix.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::graph::Graph;

/// Square matrix of exact walk counts, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl WalkMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of walks from `i` to `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> BigUint {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Closed-walk counts `C_1, …, C_d` (`C_k = tr A^k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCounts {
    counts: Vec<BigUint>,
}

impl WalkCounts {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        Self { counts }
    }

    /// Largest length stored.
    pub fn max_length(&self) -> usize {
        self.counts.len()
    }

    /// `C_k` for `1 <= k <= max_length()`.
    pub fn get(&self, k: usize) -> &BigUint {
        assert!(k >= 1 && k <= self.counts.len(), "walk length {k} out of range");
        &self.counts[k - 1]
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.counts
    }

    /// Termwise sum, i.e. the counts of a disjoint union.
    pub fn sum(&self, other: &WalkCounts) -> WalkCounts {
        assert_eq!(self.counts.len(), other.counts.len());
        WalkCounts { counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect() }
    }
}

/// `A^k` entrywise, `k >= 1`.
pub fn walk_count_matrix(g: &Graph, k: usize) -> WalkMatrix {
    assert!(k >= 1, "walk length must be positive");
    let n = g.order();
    let adj = g.neighbors();
    let mut power = adjacency_big(g);
    for _ in 1..k {
        power = times_adjacency(&power, &adj, n);
    }
    WalkMatrix { n, entries: power }
}

pub fn closed_walk_count(g: &Graph, k: usize) -> BigUint {
    closed_walk_counts(g, k).get(k).clone()
}

/// `C_1..C_d` in one pass. Uses native 128-bit arithmetic when nothing
/// overflows and big integers otherwise.
pub fn closed_walk_counts(g: &Graph, d: usize) -> WalkCounts {
    match closed_walk_counts_native(g, d) {
        Some(native) => WalkCounts { counts: native.into_iter().map(BigUint::from).collect() },
        None => closed_walk_counts_big(g, d),
    }
}

fn adjacency_big(g: &Graph) -> Vec<BigUint> {
    let n = g.order();
    let mut a = vec![BigUint::zero(); n * n];
    for (i, j) in g.edges() {
        a[i * n + j] = BigUint::from(1u8);
        a[j * n + i] = BigUint::from(1u8);
    }
    a
}

// (P·A)[i][l] = Σ_{w ∈ N(l)} P[i][w]
fn times_adjacency(p: &[BigUint], adj: &[Vec<usize>], n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); n * n];
    for i in 0..n {
        for l in 0..n {
            let mut acc = BigUint::zero();
            for &w in &adj[l] {
                acc += &p[i * n + w];
            }
            out[i * n + l] = acc;
        }
    }
    out
}

/// Big-integer route: iterated multiplication, trace after each step.
pub(crate) fn closed_walk_counts_big(g: &Graph, d: usize) -> WalkCounts {
    let n = g.order();
    let adj = g.neighbors();
    let mut counts = Vec::with_capacity(d);
    let mut power = adjacency_big(g);
    for k in 1..=d {
        if k > 1 {
            power = times_adjacency(&power, &adj, n);
        }
        counts.push((0..n).map(|i| &power[i * n + i]).sum());
    }
    WalkCounts { counts }
}

/// Native route. Only powers up to `A^{⌈d/2⌉}` are formed; since `A` is
/// symmetric, `tr A^{2j} = Σ (A^j)_{il}²` and `tr A^{2j+1} = Σ (A^j)_{il}(A^{j+1})_{il}`.
/// Returns `None` on overflow.
pub(crate) fn closed_walk_counts_native(g: &Graph, d: usize) -> Option<Vec<u128>> {
    let n = g.order();
    let adj = g.neighbors();
    let half = d.div_ceil(2);
    let mut powers: Vec<Vec<u128>> = Vec::with_capacity(half + 1);
    let mut identity = vec![0u128; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    powers.push(identity);
    for j in 0..half {
        let prev = &powers[j];
        let mut next = vec![0u128; n * n];
        for i in 0..n {
            let row = &prev[i * n..(i + 1) * n];
            for l in 0..n {
                let mut acc = 0u128;
                for &w in &adj[l] {
                    acc = acc.checked_add(row[w])?;
                }
                next[i * n + l] = acc;
            }
        }
        powers.push(next);
    }

    let mut counts = Vec::with_capacity(d);
    for k in 1..=d {
        let (x, y) = (&powers[k / 2], &powers[k - k / 2]);
        let mut acc = 0u128;
        for (a, b) in x.iter().zip(y) {
            if *a != 0 && *b != 0 {
                acc = acc.checked_add(a.checked_mul(*b)?)?;
            }
        }
        counts.push(acc);
    }
    Some(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId};

    // Brute-force oracle: count closed walks of length k from each vertex.
    fn brute_closed_walks_from(g: &Graph, start: usize, k: usize) -> u64 {
        fn go(g: &Graph, v: usize, target: usize, left: usize) -> u64 {
            if left == 0 {
                return u64::from(v == target);
            }
            (0..g.order()).filter(|&w| g.has_edge(v, w)).map(|w| go(g, w, target, left - 1)).sum()
        }
        go(g, start, start, k)
    }

    #[test]
    fn first_power_is_adjacency() {
        let g = family(FamilyId::Path(4)).unwrap();
        let m = walk_count_matrix(&g, 1);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*m.get(i, j), BigUint::from(u8::from(g.has_edge(i, j))));
            }
        }
    }

    #[test]
    fn squared_diagonals_match_brute_force() {
        let k4 = family(FamilyId::Complete(4)).unwrap();
        let m = walk_count_matrix(&k4, 2);
        for i in 0..4 {
            assert_eq!(*m.get(i, i), BigUint::from(brute_closed_walks_from(&k4, i, 2)));
            assert_eq!(*m.get(i, i), BigUint::from(3u8));
        }
        let p3 = family(FamilyId::Path(3)).unwrap();
        let m = walk_count_matrix(&p3, 2);
        let diag: Vec<u64> = (0..3).map(|i| brute_closed_walks_from(&p3, i, 2)).collect();
        assert_eq!(diag, vec![1, 2, 1]);
        for (i, want) in diag.into_iter().enumerate() {
            assert_eq!(*m.get(i, i), BigUint::from(want));
        }
    }

    #[test]
    fn known_counts() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        assert_eq!(closed_walk_count(&k3, 4), BigUint::from(18u8));
        let k4 = family(FamilyId::Complete(4)).unwrap();
        assert_eq!(closed_walk_count(&k4, 7), BigUint::from(2184u32));
        assert_eq!(walk_count_matrix(&k4, 7).trace(), BigUint::from(2184u32));
    }

    #[test]
    fn brute_force_agreement_small_graphs() {
        let graphs = [
            family(FamilyId::Cycle(5)).unwrap(),
            family(FamilyId::Star(5)).unwrap(),
            Graph::from_edges(5, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            let counts = closed_walk_counts(g, 7);
            for k in 1..=7 {
                let brute: u64 = (0..g.order()).map(|v| brute_closed_walks_from(g, v, k)).sum();
                assert_eq!(*counts.get(k), BigUint::from(brute));
            }
        }
    }

    #[test]
    fn native_and_big_routes_agree() {
        for n in 1..=9 {
            for id in [FamilyId::Path(n), FamilyId::Complete(n), FamilyId::Star(n)] {
                let g = family(id).unwrap();
                let native = closed_walk_counts_native(&g, 15).unwrap();
                let big = closed_walk_counts_big(&g, 15);
                let native: Vec<BigUint> = native.into_iter().map(BigUint::from).collect();
                assert_eq!(native, big.as_slice());
            }
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // C_k(K_40) ~ 39^k exceeds u128 around k = 24
        let g = family(FamilyId::Complete(40)).unwrap();
        assert!(closed_walk_counts_native(&g, 30).is_none());
        let counts = closed_walk_counts(&g, 30);
        // tr A^k for K_n is (n-1)^k + (n-1)(-1)^k
        let want = BigUint::from(39u8).pow(30) + BigUint::from(39u8);
        assert_eq!(*counts.get(30), want);
    }
}
