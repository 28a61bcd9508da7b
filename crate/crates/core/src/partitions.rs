//! Integer partitions, centralizer sizes and the partition function.

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A partition of `weight` into nonincreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts nonincreasingly. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn has_part_one(&self) -> bool {
        self.parts.last() == Some(&1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `d` in reverse lexicographic order: `(d)` first,
/// `(1,…,1)` last. `d = 0` yields the single empty partition.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(d, d, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_without_ones(d: usize) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| !p.has_part_one()).collect()
}

/// `z_π = Π_i i^{m_i} m_i!`.
pub fn z_of(p: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in p.multiplicities() {
        for k in 1..=mult {
            z *= BigUint::from(part) * BigUint::from(k);
        }
    }
    z
}

pub fn factorial(d: usize) -> BigUint {
    (1..=d).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

static PARTITION_COUNTS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// `P(d)` from the pentagonal-number recurrence
/// `P(d) = Σ_{k≠0} (-1)^{k-1} P(d - k(3k-1)/2)`, memoized across calls.
pub fn partition_count(d: usize) -> BigUint {
    if let Some(v) = PARTITION_COUNTS.read().unwrap().get(d) {
        return v.clone();
    }
    let mut table = PARTITION_COUNTS.write().unwrap();
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= d {
        let i = table.len();
        // signed accumulation: the alternating sum is always nonnegative
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g_pos = k * (3 * k - 1) / 2;
            if g_pos > i {
                break;
            }
            let g_neg = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[i - g_pos];
            if g_neg <= i {
                *acc += &table[i - g_neg];
            }
        }
        table.push(plus - minus);
    }
    table[d].clone()
}
