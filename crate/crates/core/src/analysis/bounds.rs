//! Energy and spectral-norm bounds on `‖G‖_d` over all simple graphs:
//!
//! * `‖G‖_d <= ½‖G‖_*`,
//! * `(‖K_n‖_d / (n-1))·‖G‖ <= ‖G‖_d <= C(⌊(n+d)/2⌋ - 1, d/2)^{1/d}·‖G‖`.
//!
//! The upper constant is the `d`-th root of `h_d(1,…,1,[0,]-1,…,-1)`, which is
//! what the single-edge-per-vertex matching attains.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::ToPrimitive;

use crate::chs::{exact_dth_power, validate_degree, complete_norm_closed_form};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::spectra::{eigenvalues, Spectrum};
use crate::walks::closed_walk_counts;

use super::AnalysisError;

pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub graph: String,
    pub d: usize,
    pub norm: f64,
    pub energy: f64,
    pub spectral: f64,
    pub energy_bound: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub energy_bound_ok: bool,
    pub spectral_lower_ok: bool,
    pub spectral_upper_ok: bool,
    /// `½‖G‖_* - ‖G‖_d`.
    pub energy_slack: f64,
    /// `‖G‖_d - lower_bound`.
    pub lower_slack: f64,
    /// `upper_bound - ‖G‖_d`.
    pub upper_slack: f64,
}

impl BoundCheck {
    pub fn all_ok(&self) -> bool {
        self.energy_bound_ok && self.spectral_lower_ok && self.spectral_upper_ok
    }
}

/// `C(⌊(n+d)/2⌋ - 1, d/2) = h_d` of `⌊n/2⌋` ones and `⌊n/2⌋` minus ones.
pub fn matching_constant(n: usize, d: usize) -> BigUint {
    let top = (n + d) / 2;
    if top == 0 || top - 1 < d / 2 {
        return BigUint::from(0u8);
    }
    binomial(BigUint::from(top - 1), BigUint::from(d / 2))
}

/// Per-order constants reused across many graphs.
#[derive(Debug, Clone)]
pub(crate) struct BoundConstants {
    n: usize,
    d: usize,
    complete_ratio: f64,
    upper_factor: f64,
}

impl BoundConstants {
    pub(crate) fn new(n: usize, d: usize) -> Self {
        let inv_d = 1.0 / d as f64;
        let complete_ratio = if n >= 2 {
            complete_norm_closed_form(n, d).to_f64().powf(inv_d) / (n - 1) as f64
        } else {
            0.0
        };
        let upper_factor = matching_constant(n, d).to_f64().unwrap_or(f64::INFINITY).powf(inv_d);
        Self { n, d, complete_ratio, upper_factor }
    }

    pub(crate) fn check(&self, spectrum: &Spectrum, norm: f64) -> BoundCheck {
        debug_assert_eq!(spectrum.len(), self.n);
        let energy = spectrum.energy();
        let spectral = spectrum.spectral_norm();
        let energy_bound = energy / 2.0;
        let lower_bound = self.complete_ratio * spectral;
        let upper_bound = self.upper_factor * spectral;
        let tol = |scale: f64| BOUND_TOLERANCE * scale.max(1.0);
        BoundCheck {
            graph: String::new(),
            d: self.d,
            norm,
            energy,
            spectral,
            energy_bound,
            lower_bound,
            upper_bound,
            energy_bound_ok: norm <= energy_bound + tol(energy_bound),
            spectral_lower_ok: lower_bound <= norm + tol(norm),
            spectral_upper_ok: norm <= upper_bound + tol(upper_bound),
            energy_slack: energy_bound - norm,
            lower_slack: norm - lower_bound,
            upper_slack: upper_bound - norm,
        }
    }
}

/// Evaluates the three bounds for `g`; `‖G‖_d` is taken from the exact route.
pub fn check_theorem3(g: &Graph, d: usize) -> Result<BoundCheck, AnalysisError> {
    validate_degree(d)?;
    let spectrum = eigenvalues(g)?;
    let norm = exact_dth_power(&closed_walk_counts(g, d), d).to_f64().powf(1.0 / d as f64);
    let mut check = BoundConstants::new(g.order(), d).check(&spectrum, norm);
    check.graph = emit_graph6(g);
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chs::chs_norm;
    use crate::graph::{family, FamilyId};

    #[test]
    fn single_edge_meets_energy_bound() {
        for n in 2..8 {
            let g = Graph::from_edges(n, &[(1, 2)]).unwrap();
            for d in [2, 4, 6, 8] {
                let c = check_theorem3(&g, d).unwrap();
                assert!(c.all_ok());
                assert!((c.norm - 1.0).abs() < 1e-12);
                assert!((c.energy_bound - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn complete_graph_meets_lower_bound() {
        for n in 2..9 {
            let g = family(FamilyId::Complete(n)).unwrap();
            for d in [2, 4, 6, 8] {
                let c = check_theorem3(&g, d).unwrap();
                assert!(c.all_ok());
                assert!(c.lower_slack.abs() <= 1e-9, "{c:?}");
            }
        }
    }

    #[test]
    fn matching_meets_upper_bound() {
        for n in 2..11 {
            let edges: Vec<_> = (0..n / 2).map(|i| (2 * i + 1, 2 * i + 2)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            for d in [2, 4, 6, 8, 10] {
                let c = check_theorem3(&g, d).unwrap();
                assert!(c.all_ok());
                assert!(c.upper_slack.abs() <= 1e-9, "{c:?}");
                let exact = chs_norm(&g, d).unwrap().exact_dth_power;
                assert_eq!(exact, crate::rational::ExactRational::from(matching_constant(n, d)));
            }
        }
    }

    #[test]
    fn edgeless_graph_is_all_zero() {
        let g = Graph::empty(4).unwrap();
        let c = check_theorem3(&g, 4).unwrap();
        assert!(c.all_ok());
        assert_eq!((c.norm, c.energy, c.spectral), (0.0, 0.0, 0.0));
        let single = Graph::empty(1).unwrap();
        assert!(check_theorem3(&single, 2).unwrap().all_ok());
    }

    #[test]
    fn odd_degree_rejected() {
        let g = family(FamilyId::Path(3)).unwrap();
        assert!(check_theorem3(&g, 3).is_err());
    }
}
