use super::AnalysisError;

/// Outcome of testing `x ≺ y` (x is majorized by y).
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationWitness {
    /// `x` sorted nonincreasingly.
    pub x: Vec<f64>,
    /// `y` sorted nonincreasingly.
    pub y: Vec<f64>,
    /// `(Σ_{j≤k} x_j, Σ_{j≤k} y_j)` for `k = 1..=n`.
    pub prefix_sums: Vec<(f64, f64)>,
    pub holds: bool,
}

/// Tests whether `y` majorizes `x`: every partial sum of the sorted `x` is at
/// most the matching partial sum of the sorted `y`, and the totals agree,
/// all up to `tol`.
pub fn majorizes(y: &[f64], x: &[f64], tol: f64) -> Result<MajorizationWitness, AnalysisError> {
    if x.len() != y.len() {
        return Err(AnalysisError::LengthMismatch { left: y.len(), right: x.len() });
    }
    let sorted = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    };
    let (x, y) = (sorted(x), sorted(y));
    let mut prefix_sums = Vec::with_capacity(x.len());
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in x.iter().zip(&y) {
        sx += a;
        sy += b;
        prefix_sums.push((sx, sy));
    }
    let n = prefix_sums.len();
    let holds = prefix_sums.iter().enumerate().all(|(k, &(px, py))| {
        if k + 1 < n {
            px <= py + tol
        } else {
            (px - py).abs() <= tol
        }
    });
    Ok(MajorizationWitness { x, y, prefix_sums, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive() {
        let v = [3.0, -1.0, 0.5, -2.5];
        assert!(majorizes(&v, &v, 0.0).unwrap().holds);
    }

    #[test]
    fn classic_examples() {
        let uniform = [1.0, 1.0, 1.0];
        let spread = [3.0, 0.0, 0.0];
        assert!(majorizes(&spread, &uniform, 1e-12).unwrap().holds);
        assert!(!majorizes(&uniform, &spread, 1e-12).unwrap().holds);
        // unequal totals
        assert!(!majorizes(&[2.0, 0.0], &[1.0, 0.0], 1e-12).unwrap().holds);
        assert!(majorizes(&[], &[], 0.0).unwrap().holds);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            majorizes(&[1.0], &[1.0, 0.0], 0.0),
            Err(AnalysisError::LengthMismatch { left: 1, right: 2 })
        );
    }
}
