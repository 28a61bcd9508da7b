//! Complete homogeneous symmetric polynomials and the CHS graph norms.
//!
//! `h_d` is evaluated three ways:
//!
//! * [`h_via_partitions`]: the power-sum expansion `h_d = Σ_{π ⊢ d} p_π / z_π`.
//! * [`h_via_series`]: the coefficient of `t^d` in `Π_i 1/(1 - x_i t)`,
//!   obtained by multiplying truncated geometric series. This is the oracle.
//! * [`h_via_recurrence`]: `d·h_d = Σ_{k=1}^{d} p_k h_{d-k}`, generic over
//!   floats and exact rationals.
//!
//! For a graph, `p_k` on the adjacency spectrum is the closed-walk count
//! `C_k`, so `‖G‖_d^d` is an exact rational computed from walk counts alone.
//! Since `C_1 = 0`, only partitions without a part equal to 1 contribute.

use std::ops::{Add, Div, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::partitions::{factorial, partitions_of, partitions_without_ones, z_of, Partition};
use crate::rational::ExactRational;
use crate::spectra::{eigenvalues, SpectraError};
use crate::walks::{closed_walk_counts, WalkCounts};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChsError {
    #[error("CHS norms need an even degree, got d={0}")]
    OddDegree(usize),
    #[error("CHS norms need d >= 2, got d={0}")]
    DegreeTooSmall(usize),
    #[error("closed form only covers d in {{2, 4, 6}}, got d={0}")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Checks that `d` is an even integer `>= 2`.
pub fn validate_degree(d: usize) -> Result<(), ChsError> {
    if d < 2 {
        Err(ChsError::DegreeTooSmall(d))
    } else if d % 2 == 1 {
        Err(ChsError::OddDegree(d))
    } else {
        Ok(())
    }
}

/// Arithmetic needed by the power-sum recurrence.
pub trait Scalar: Clone + Add<Output = Self> + Mul<Output = Self> + Div<Output = Self> {
    fn from_usize(n: usize) -> Self;
}

impl Scalar for f64 {
    fn from_usize(n: usize) -> Self {
        n as f64
    }
}

impl Scalar for ExactRational {
    fn from_usize(n: usize) -> Self {
        ExactRational::from_integer(BigInt::from(n))
    }
}

fn power_sums(values: &[f64], d: usize) -> Vec<f64> {
    (1..=d).map(|k| values.iter().map(|x| x.powi(k as i32)).sum()).collect()
}

/// `Σ_{π ⊢ d} p_π(values) / z_π`. Defined for every `d`, even or not.
pub fn h_via_partitions(values: &[f64], d: usize) -> f64 {
    let p = power_sums(values, d);
    partitions_of(d)
        .iter()
        .map(|pi| {
            let prod: f64 = pi.parts().iter().map(|&k| p[k - 1]).product();
            prod / z_of(pi).to_f64().expect("z fits in f64")
        })
        .sum()
}

/// Coefficient of `t^d` in `Π_i (1 + x_i t + … + x_i^d t^d)`.
pub fn h_via_series(values: &[f64], d: usize) -> f64 {
    let mut coeffs = vec![0.0; d + 1];
    coeffs[0] = 1.0;
    for &x in values {
        let geometric: Vec<f64> = (0..=d).map(|j| x.powi(j as i32)).collect();
        let mut next = vec![0.0; d + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            for (j, &g) in geometric[..=d - i].iter().enumerate() {
                next[i + j] += c * g;
            }
        }
        coeffs = next;
    }
    coeffs[d]
}

/// `h_d` from power sums `p_1..p_d` (`power_sums[k-1] = p_k`).
pub fn h_via_recurrence<T: Scalar>(power_sums: &[T], d: usize) -> T {
    assert!(power_sums.len() >= d, "need p_1..p_{d}");
    let mut h: Vec<T> = Vec::with_capacity(d + 1);
    h.push(T::from_usize(1));
    for m in 1..=d {
        let mut acc = power_sums[0].clone() * h[m - 1].clone();
        for k in 2..=m {
            acc = acc + power_sums[k - 1].clone() * h[m - k].clone();
        }
        h.push(acc / T::from_usize(m));
    }
    h.swap_remove(d)
}

/// Power-sum expansion of `d!·h_d` restricted to partitions without a part 1.
#[derive(Debug, Clone)]
pub struct Expansion {
    d: usize,
    terms: Vec<(Partition, BigUint)>,
    denominator: BigUint,
    native: Option<Vec<u128>>,
}

impl Expansion {
    pub fn new(d: usize) -> Self {
        let denominator = factorial(d);
        let terms: Vec<(Partition, BigUint)> = partitions_without_ones(d)
            .into_iter()
            .map(|pi| {
                let coeff = &denominator / z_of(&pi);
                (pi, coeff)
            })
            .collect();
        let native = terms.iter().map(|(_, c)| c.to_u128()).collect();
        Self { d, terms, denominator, native }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// `d!`, the common denominator.
    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// `Σ_π (d!/z_π) C_π`, so that `‖G‖_d^d = numerator / d!`.
    pub fn scaled_numerator(&self, counts: &[BigUint]) -> BigUint {
        self.terms
            .iter()
            .map(|(pi, coeff)| pi.parts().iter().fold(coeff.clone(), |acc, &k| acc * &counts[k - 1]))
            .sum()
    }

    /// Native version of [`Expansion::scaled_numerator`]; `None` on overflow.
    pub fn scaled_numerator_native(&self, counts: &[u128]) -> Option<u128> {
        let native = self.native.as_ref()?;
        let mut total = 0u128;
        for ((pi, _), &coeff) in self.terms.iter().zip(native) {
            let mut term = coeff;
            for &k in pi.parts() {
                term = term.checked_mul(counts[k - 1])?;
            }
            total = total.checked_add(term)?;
        }
        Some(total)
    }

    pub fn evaluate(&self, counts: &WalkCounts) -> ExactRational {
        assert!(counts.max_length() >= self.d, "need C_1..C_{}", self.d);
        let num = self.scaled_numerator(counts.as_slice());
        ExactRational::new(BigInt::from(num), BigInt::from(self.denominator.clone()))
    }
}

/// Exact `‖G‖_d^d` from closed-walk counts.
pub fn exact_dth_power(counts: &WalkCounts, d: usize) -> ExactRational {
    Expansion::new(d).evaluate(counts)
}

/// Both routes to `‖G‖_d` for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    /// graph6 of the input.
    pub graph: String,
    pub d: usize,
    pub exact_dth_power: ExactRational,
    /// `h_d` of the floating-point eigenvalues.
    pub float_dth_power: f64,
    pub float_norm: f64,
    /// `|float_dth_power - exact_dth_power|`.
    pub route_agreement: f64,
}

impl NormReport {
    /// The exact value's `d`-th root, in floating point.
    pub fn exact_norm(&self) -> f64 {
        self.exact_dth_power.to_f64().powf(1.0 / self.d as f64)
    }

    /// Whether the two routes agree to `1e-7·(1 + exact)`.
    pub fn routes_agree(&self) -> bool {
        self.route_agreement <= ROUTE_TOLERANCE * (1.0 + self.exact_dth_power.to_f64())
    }
}

pub const ROUTE_TOLERANCE: f64 = 1e-7;

pub fn chs_norm(g: &Graph, d: usize) -> Result<NormReport, ChsError> {
    validate_degree(d)?;
    let exact = exact_dth_power(&closed_walk_counts(g, d), d);
    let spectrum = eigenvalues(g)?;
    let sums: Vec<f64> = (1..=d as u32).map(|k| spectrum.power_sum(k)).collect();
    let float_dth_power = h_via_recurrence(&sums, d);
    Ok(NormReport {
        graph: emit_graph6(g),
        d,
        route_agreement: exact.abs_diff_f64(float_dth_power),
        float_norm: float_dth_power.max(0.0).powf(1.0 / d as f64),
        float_dth_power,
        exact_dth_power: exact,
    })
}

/// `‖G‖_d^d` for `d ∈ {2, 4, 6}` from `m`, `tr A^3`, `tr A^4`, `tr A^6`.
pub fn chs_norm_246(g: &Graph, d: usize) -> Result<ExactRational, ChsError> {
    if !matches!(d, 2 | 4 | 6) {
        return Err(ChsError::UnsupportedDegree(d));
    }
    let counts = closed_walk_counts(g, d);
    let tr = |k: usize| ExactRational::from(counts.get(k).clone());
    let m = ExactRational::from_integer(g.edge_count() as i64);
    let q = |a: i64, b: i64| ExactRational::new(a, b);
    Ok(match d {
        2 => m,
        4 => &(&tr(4) * &q(1, 4)) + &(&(&m * &m) * &q(1, 2)),
        _ => {
            let t3 = tr(3);
            let a = &tr(6) * &q(1, 6);
            let b = &(&m * &tr(4)) * &q(1, 4);
            let c = &(&t3 * &t3) * &q(1, 18);
            let e = &m.pow(3) * &q(1, 6);
            &(&a + &b) + &(&c + &e)
        }
    })
}

/// Binomial that is zero outside `0 <= k <= n` and handles `n = -1`
/// through `C(k-1, k) = [k = 0]`.
fn binomial_lower(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if top < 0 {
        // only reachable as C(k-1, k) with n = 1
        return BigInt::from(u8::from(k == 0 && top == -1));
    }
    if k > top {
        return BigInt::zero();
    }
    BigInt::from(binomial(BigUint::from(top as u64), BigUint::from(k as u64)))
}

/// `‖K_n‖_d^d = Σ_{k=0}^{d} (-1)^k (n-1)^{d-k} C(k+n-2, n-2)`.
///
/// This is the coefficient of `t^d` in `(1 - (n-1)t)^{-1} (1 + t)^{-(n-1)}`.
/// Valid for every `d >= 0`; the result is always an integer.
pub fn complete_norm_closed_form(n: usize, d: usize) -> ExactRational {
    assert!(n >= 1, "K_n needs n >= 1");
    let base = BigInt::from(n as i64 - 1);
    let mut total = BigInt::zero();
    for k in 0..=d {
        // C(k+n-2, n-2) = C(k+n-2, k)
        let term = base.pow((d - k) as u32) * binomial_lower(k as i64 + n as i64 - 2, k as i64);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    ExactRational::from_integer(total)
}

/// The same sum with `C(k+n-1, n-1)` in place of `C(k+n-2, n-2)`. This
/// expands `(1+t)^{-n}` rather than `(1+t)^{-(n-1)}` and does not give
/// `‖K_n‖_d^d` (11 instead of 9 at `n = 3, d = 4`). Kept for comparison.
pub fn complete_norm_uncorrected(n: usize, d: usize) -> ExactRational {
    assert!(n >= 1);
    let base = BigInt::from(n as i64 - 1);
    let mut total = BigInt::zero();
    for k in 0..=d {
        let term = base.pow((d - k) as u32) * binomial_lower(k as i64 + n as i64 - 1, k as i64);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    ExactRational::from_integer(total)
}

/// `‖K_{m,n}‖_d = √(mn)` for every even `d >= 2`.
pub fn bipartite_norm_closed_form(m: usize, n: usize, d: usize) -> Result<f64, ChsError> {
    validate_degree(d)?;
    Ok(((m * n) as f64).sqrt())
}

/// `‖S_n‖_d = √(n-1)`.
pub fn star_norm(n: usize, d: usize) -> Result<f64, ChsError> {
    validate_degree(d)?;
    Ok((n.saturating_sub(1) as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId};

    const K3: [f64; 3] = [2.0, -1.0, -1.0];

    #[test]
    fn k3_values_all_routes() {
        for (d, want) in [(2, 3.0), (4, 9.0), (6, 31.0)] {
            assert!((h_via_partitions(&K3, d) - want).abs() < 1e-12);
            assert!((h_via_series(&K3, d) - want).abs() < 1e-12);
            let sums = power_sums(&K3, d);
            assert!((h_via_recurrence(&sums, d) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn series_special_cases() {
        let v = [1.0, 0.0, 0.0, -1.0];
        for d in 0..10 {
            let want = if d % 2 == 0 { 1.0 } else { 0.0 };
            assert_eq!(h_via_series(&v, d), want);
        }
        let r = 6f64.sqrt();
        let v = [r, 0.0, 0.0, -r];
        for d in [2, 4, 6, 8] {
            assert!((h_via_series(&v, d) - 6f64.powi(d as i32 / 2)).abs() < 1e-9);
        }
        assert_eq!(h_via_series(&[3.0, -7.5], 0), 1.0);
        assert_eq!(h_via_series(&[], 3), 0.0);
    }

    #[test]
    fn recurrence_zero_power_sums() {
        for d in 1..8 {
            assert_eq!(h_via_recurrence(&vec![0.0; d], d), 0.0);
        }
        assert_eq!(h_via_recurrence::<f64>(&[], 0), 1.0);
    }

    #[test]
    fn recurrence_exact() {
        let sums: Vec<ExactRational> = power_sums(&K3, 6).into_iter().map(|p| ExactRational::from(p as i64)).collect();
        assert_eq!(h_via_recurrence(&sums, 4), 9);
        assert_eq!(h_via_recurrence(&sums, 6), 31);
    }

    #[test]
    fn exact_norms_of_small_graphs() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        assert_eq!(chs_norm(&k3, 4).unwrap().exact_dth_power, 9);
        assert_eq!(chs_norm(&k3, 6).unwrap().exact_dth_power, 31);
        let g = k3.disjoint_union(&k3);
        let h = k3.tensor_with_k2();
        assert_eq!(chs_norm(&g, 6).unwrap().exact_dth_power, 120);
        assert_eq!(chs_norm(&h, 6).unwrap().exact_dth_power, 112);
        let report = chs_norm(&k3, 6).unwrap();
        assert!((report.float_norm - 31f64.powf(1.0 / 6.0)).abs() < 1e-12);
        assert!(report.routes_agree());
    }

    #[test]
    fn degree_validation() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        assert_eq!(chs_norm(&k3, 5), Err(ChsError::OddDegree(5)));
        assert_eq!(chs_norm(&k3, 0), Err(ChsError::DegreeTooSmall(0)));
        assert_eq!(chs_norm_246(&k3, 8), Err(ChsError::UnsupportedDegree(8)));
        assert_eq!(star_norm(4, 3), Err(ChsError::OddDegree(3)));
    }

    #[test]
    fn second_norm_counts_edges() {
        for n in 1..9 {
            let p = family(FamilyId::Path(n)).unwrap();
            let r = chs_norm(&p, 2).unwrap();
            assert_eq!(r.exact_dth_power, n as i64 - 1);
            assert!((r.float_norm - ((n - 1) as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn small_degree_identities() {
        let k3 = family(FamilyId::Complete(3)).unwrap();
        assert_eq!(chs_norm_246(&k3, 4).unwrap(), 9);
        assert_eq!(chs_norm_246(&k3, 6).unwrap(), 31);
        let empty = Graph::empty(5).unwrap();
        for d in [2, 4, 6] {
            assert!(chs_norm_246(&empty, d).unwrap().is_zero());
        }
        for g in [family(FamilyId::Cycle(5)).unwrap(), family(FamilyId::Complete(6)).unwrap()] {
            let counts = closed_walk_counts(&g, 6);
            for d in [2, 4, 6] {
                assert_eq!(chs_norm_246(&g, d).unwrap(), exact_dth_power(&counts, d));
            }
        }
    }

    #[test]
    fn complete_closed_form() {
        assert_eq!(complete_norm_closed_form(3, 4), 9);
        assert_eq!(complete_norm_closed_form(3, 6), 31);
        assert_eq!(complete_norm_uncorrected(3, 4), 11);
        assert!(complete_norm_closed_form(1, 4).is_zero());
        assert_eq!(complete_norm_closed_form(1, 0), 1);
        assert_eq!(complete_norm_closed_form(2, 4), 1);
    }

    #[test]
    fn bipartite_and_star() {
        for d in [2, 4, 6, 8] {
            assert_eq!(bipartite_norm_closed_form(2, 2, d).unwrap(), 2.0);
            assert_eq!(bipartite_norm_closed_form(1, 1, d).unwrap(), 1.0);
        }
        for n in 2..10 {
            let s = family(FamilyId::Star(n)).unwrap();
            let via_walks = chs_norm(&s, 2).unwrap().float_norm;
            assert!((star_norm(n, 2).unwrap() - via_walks).abs() < 1e-12);
        }
    }

    #[test]
    fn native_expansion_matches_big() {
        let g = family(FamilyId::Complete(7)).unwrap();
        let counts = closed_walk_counts(&g, 12);
        let native: Vec<u128> = counts.as_slice().iter().map(|c| c.to_u128().unwrap()).collect();
        for d in (2..=12).step_by(2) {
            let e = Expansion::new(d);
            assert_eq!(
                BigUint::from(e.scaled_numerator_native(&native).unwrap()),
                e.scaled_numerator(counts.as_slice())
            );
        }
    }
}
