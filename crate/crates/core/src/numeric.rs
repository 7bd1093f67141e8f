//! Floating-point cross-check oracle: a cyclic-by-row Jacobi eigensolver
//! for symmetric integer matrices, deliberately independent of the exact
//! path, plus spectrum matching.

use crate::closed_form::SpectrumSpec;
use crate::linalg::IntMatrix;
use crate::poly::BigPoly;
use crate::{Error, Result};

/// Sweep termination: stop when the off-diagonal Frobenius mass falls
/// below this fraction of the full Frobenius norm.
pub const DEFAULT_SWEEP_TOL: f64 = 1e-12;

/// Default tolerance for matching a numeric spectrum against a claim.
pub const DEFAULT_MATCH_TOL: f64 = 1e-8;

/// Eigenvalues of a symmetric matrix, sorted ascending.
#[derive(Debug, Clone)]
pub struct NumericSpectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

/// Cyclic-by-row Jacobi rotations until the off-diagonal mass is below
/// tol * ||M||_F.
pub fn jacobi_spectrum(m: &IntMatrix, tol: f64) -> Result<NumericSpectrum> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.dim();
    let mut a: Vec<f64> = m.entries().iter().map(|&v| v as f64).collect();
    let frob = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = tol * frob.max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off = off_diagonal_mass(&a, n);
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(NumericSpectrum { values, tol })
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating a[p][q] (Numerical Recipes sec. 11.1).
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        1.0 / (theta - (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    for i in 0..n {
        let aip = a[i * n + p];
        let aiq = a[i * n + q];
        a[i * n + p] = c * aip - s * aiq;
        a[i * n + q] = s * aip + c * aiq;
    }
    for i in 0..n {
        let api = a[p * n + i];
        let aqi = a[q * n + i];
        a[p * n + i] = c * api - s * aqi;
        a[q * n + i] = s * api + c * aqi;
    }
}

/// Greedy sorted pairing of a numeric spectrum against a claimed one.
/// Returns whether every residual passes |numeric - claimed| <=
/// tol * max(1, |claimed|), plus the per-entry residuals.
pub fn match_spectra(
    numeric: &NumericSpectrum,
    claimed: &SpectrumSpec,
    tol: f64,
) -> Result<(bool, Vec<f64>)> {
    let mut expected = claimed.values_f64()?;
    if expected.len() != numeric.values.len() {
        return Err(Error::MultiplicityMismatch(
            expected.len(),
            numeric.values.len(),
        ));
    }
    expected.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut ok = true;
    let mut residuals = Vec::with_capacity(expected.len());
    for (got, want) in numeric.values.iter().zip(&expected) {
        let r = (got - want).abs() / want.abs().max(1.0);
        if r > tol {
            ok = false;
        }
        residuals.push(r);
    }
    Ok((ok, residuals))
}

/// Real roots of a monic integer polynomial of degree <= 3 (all roots of
/// the polynomials used here are real: they come from symmetric matrices
/// or quotient matrices of equitable partitions).
pub fn real_roots(p: &BigPoly) -> Result<Vec<f64>> {
    use num_traits::ToPrimitive;
    if !p.is_monic() {
        return Err(Error::MalformedSpectrum(format!("non-monic factor {p}")));
    }
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect();
    match p.degree() {
        0 => Ok(vec![]),
        1 => Ok(vec![-c[0]]),
        2 => {
            let (b, c0) = (c[1], c[0]);
            let disc = b * b - 4.0 * c0;
            if disc < 0.0 {
                return Err(Error::ComplexRoots(format!("{p}")));
            }
            let r = disc.sqrt();
            Ok(vec![(-b - r) / 2.0, (-b + r) / 2.0])
        }
        3 => Ok(cubic_roots(c[2], c[1], c[0]).to_vec()),
        d => Err(Error::MalformedSpectrum(format!(
            "no closed-form root path for degree {d}"
        ))),
    }
}

/// Trigonometric solution of x^3 + a x^2 + b x + c with three real roots.
fn cubic_roots(a: f64, b: f64, c: f64) -> [f64; 3] {
    // depressed cubic t^3 + pt + q with x = t - a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    if p.abs() < 1e-12 {
        let t = -q.cbrt();
        return [t + shift; 3];
    }
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let mut roots = [0.0; 3];
    for (i, r) in roots.iter_mut().enumerate() {
        *r = m * (phi - 2.0 * std::f64::consts::PI * i as f64 / 3.0).cos() + shift;
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{star_distance_spectrum, EigenvalueExpr, SpectrumSpec};
    use crate::graph::{dl_matrix, Graph};

    #[test]
    fn two_by_two() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let s = jacobi_spectrum(&m, DEFAULT_SWEEP_TOL).unwrap();
        assert!((s.values[0] + 1.0).abs() < 1e-12);
        assert!((s.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]);
        assert_eq!(
            jacobi_spectrum(&m, DEFAULT_SWEEP_TOL).unwrap_err(),
            Error::NotSymmetric
        );
    }

    #[test]
    fn star_distance_numeric() {
        let d = Graph::complete_multipartite(&[1, 3])
            .distance_matrix()
            .unwrap();
        let s = jacobi_spectrum(&d, DEFAULT_SWEEP_TOL).unwrap();
        // {-2, -2, 2 - √7, 2 + √7}
        let sqrt7 = 7f64.sqrt();
        let expect = [-2.0, -2.0, 2.0 - sqrt7, 2.0 + sqrt7];
        let mut expect = expect.to_vec();
        expect.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (got, want) in s.values.iter().zip(&expect) {
            assert!((got - want).abs() < 1e-10);
        }
        let (ok, residuals) =
            match_spectra(&s, &star_distance_spectrum(3), DEFAULT_MATCH_TOL).unwrap();
        assert!(ok);
        assert!(residuals.iter().all(|&r| r < 1e-10));
    }

    #[test]
    fn tripartite_dl_numeric() {
        let d = Graph::complete_multipartite(&[5, 10, 6])
            .distance_matrix()
            .unwrap();
        let dl = dl_matrix(&d);
        let s = jacobi_spectrum(&dl, DEFAULT_SWEEP_TOL).unwrap();
        let mut expect = vec![0.0];
        expect.extend(std::iter::repeat(21.0).take(2));
        expect.extend(std::iter::repeat(26.0).take(4));
        expect.extend(std::iter::repeat(27.0).take(5));
        expect.extend(std::iter::repeat(31.0).take(9));
        for (got, want) in s.values.iter().zip(&expect) {
            assert!((got - want).abs() < 1e-8, "{got} vs {want}");
        }
    }

    #[test]
    fn mismatch_detected() {
        let m = IntMatrix::zeros(1);
        let s = jacobi_spectrum(&m, DEFAULT_SWEEP_TOL).unwrap();
        let claim = SpectrumSpec::new("test", vec![(EigenvalueExpr::Int(1), 1)]);
        let (ok, _) = match_spectra(&s, &claim, DEFAULT_MATCH_TOL).unwrap();
        assert!(!ok);
        let claim2 = SpectrumSpec::new("test", vec![(EigenvalueExpr::Int(0), 2)]);
        assert!(matches!(
            match_spectra(&s, &claim2, DEFAULT_MATCH_TOL),
            Err(Error::MultiplicityMismatch(2, 1))
        ));
    }

    #[test]
    fn cubic_root_solver() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let r = cubic_roots(-6.0, 11.0, -6.0);
        assert!((r[0] - 1.0).abs() < 1e-9);
        assert!((r[1] - 2.0).abs() < 1e-9);
        assert!((r[2] - 3.0).abs() < 1e-9);
        // quotient cubic at k=2: roots {32, 41 ± 4√11}
        let r = cubic_roots(-114.0, 4129.0, -48160.0);
        let lo = 41.0 - 4.0 * 11f64.sqrt();
        let hi = 41.0 + 4.0 * 11f64.sqrt();
        assert!((r[0] - lo).abs() < 1e-6);
        assert!((r[1] - 32.0).abs() < 1e-6);
        assert!((r[2] - hi).abs() < 1e-6);
    }
}
