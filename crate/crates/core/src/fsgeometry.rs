//! Numerical curvature oracle for the Fubini-Study metric on `CP^n`,
//! normalized to constant holomorphic sectional curvature 4.
//!
//! In the affine chart `z in C^n` the Kahler potential is `log(1 + |z|^2)`
//! and the Hermitian metric components are its complex Hessian,
//!
//! ```text
//! g_{i jbar} = delta_ij / (1+|z|^2) - zbar_i z_j / (1+|z|^2)^2 .
//! ```
//!
//! Everything else is computed numerically, on purpose: the Ricci components
//! are `-(complex Hessian of log det g)` evaluated by central finite
//! differences of the exact metric, so this module shares no closed-form
//! shortcut with the bound engine it cross-checks. The quantities verified
//! against the normalization are
//!
//! * scalar curvature `kappa = 4n(n+1)`,
//! * the Einstein property `Ric = (n+1) g` of the Hermitian components,
//! * `||omega|| = n` for the Kahler form in a metric-orthonormal frame,
//! * `kappa = 2 ||rho||` and `rho = 2(n+1) omega` for the Ricci form,
//!   the curvature of the canonical bundle being `n+1` times that of the
//!   (dual) hyperplane bundle with `F^H = -2i omega`.
//!
//! Real 2n-dimensional data uses the coordinate order `x_1..x_n, y_1..y_n`
//! with `z_k = x_k + i y_k`. Frames come from Gram-Schmidt on the realified
//! metric; only frame-invariant outputs (norms, traces) are contract values.

use crate::comass::{ComassError, TwoForm};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use rand::Rng;
use thiserror::Error;

type CMatrix = DMatrix<Complex<f64>>;

/// Default bound on `|z|` for chart points.
pub const DEFAULT_CHART_RADIUS: f64 = 10.0;

/// Admissible finite-difference steps.
pub const MIN_STEP: f64 = 1e-5;
pub const MAX_STEP: f64 = 1e-2;

/// Default step used by [`verify_identities`].
pub const DEFAULT_STEP: f64 = 1e-3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FsError {
    #[error("chart point with |z| = {norm} exceeds the chart radius {radius}")]
    ChartOverflow { norm: f64, radius: f64 },
    #[error("finite-difference step {step:e} below the minimum {MIN_STEP:e}")]
    StepTooSmall { step: f64 },
    #[error("finite-difference step {step:e} above the maximum {MAX_STEP:e}")]
    StepTooLarge { step: f64 },
    #[error(transparent)]
    Comass(#[from] ComassError),
}

/// A point of the affine chart on `CP^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    z: Vec<Complex<f64>>,
}

impl ChartPoint {
    /// Validates against the default chart radius.
    pub fn new(z: Vec<Complex<f64>>) -> Result<Self, FsError> {
        Self::with_chart_radius(z, DEFAULT_CHART_RADIUS)
    }

    pub fn with_chart_radius(z: Vec<Complex<f64>>, radius: f64) -> Result<Self, FsError> {
        assert!(!z.is_empty(), "chart points need at least one coordinate");
        let norm = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm >= radius {
            return Err(FsError::ChartOverflow { norm, radius });
        }
        Ok(ChartPoint { z })
    }

    pub fn origin(n: usize) -> Self {
        ChartPoint {
            z: vec![Complex::new(0.0, 0.0); n],
        }
    }

    /// A seeded random point with `|z| <= max_norm`.
    pub fn random(n: usize, max_norm: f64, rng: &mut impl Rng) -> Self {
        let component_bound = max_norm / (n as f64).sqrt() / 2f64.sqrt();
        let z = (0..n)
            .map(|_| {
                Complex::new(
                    rng.random_range(-component_bound..component_bound),
                    rng.random_range(-component_bound..component_bound),
                )
            })
            .collect();
        ChartPoint { z }
    }

    pub fn coords(&self) -> &[Complex<f64>] {
        &self.z
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }
}

/// Curvature data of the Fubini-Study metric at a chart point.
#[derive(Debug, Clone)]
pub struct KahlerData {
    /// Hermitian metric components `g_{i jbar}`.
    pub metric: CMatrix,
    /// Hermitian Ricci components `R_{i jbar}`, finite-differenced.
    pub ricci: CMatrix,
    /// Scalar curvature.
    pub kappa: f64,
    /// Kahler form in a metric-orthonormal real frame.
    pub omega: TwoForm,
    /// Ricci form in the same frame.
    pub rho: TwoForm,
}

fn metric_at(z: &[Complex<f64>]) -> CMatrix {
    let n = z.len();
    let s = 1.0 + z.iter().map(|c| c.norm_sqr()).sum::<f64>();
    CMatrix::from_fn(n, n, |i, j| {
        let kron = if i == j {
            Complex::new(1.0 / s, 0.0)
        } else {
            Complex::new(0.0, 0.0)
        };
        kron - z[i].conj() * z[j] / (s * s)
    })
}

/// The exact Fubini-Study metric components at `p`: the complex Hessian of
/// `log(1 + |z|^2)`, a positive-definite Hermitian matrix equal to the
/// identity at the origin.
pub fn fs_metric(p: &ChartPoint) -> CMatrix {
    metric_at(p.coords())
}

fn log_det_metric(z: &[Complex<f64>]) -> f64 {
    let det = metric_at(z).determinant();
    debug_assert!(det.im.abs() < 1e-10 && det.re > 0.0);
    det.re.ln()
}

/// Realifies a Hermitian matrix `A + iB` to the symmetric `2n x 2n` matrix
/// `[[A, B], [-B, A]]` in `x_1..x_n, y_1..y_n` coordinates.
fn realify(h: &CMatrix) -> DMatrix<f64> {
    let n = h.nrows();
    DMatrix::from_fn(2 * n, 2 * n, |a, b| {
        let (i, x_row) = if a < n { (a, true) } else { (a - n, false) };
        let (j, x_col) = if b < n { (b, true) } else { (b - n, false) };
        match (x_row, x_col) {
            (true, true) | (false, false) => h[(i, j)].re,
            (true, false) => h[(i, j)].im,
            (false, true) => -h[(i, j)].im,
        }
    })
}

/// The complex structure `J dx_i = dy_i` in the same coordinate order.
fn complex_structure(n: usize) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = -1.0;
        j[(n + i, i)] = 1.0;
    }
    j
}

/// Columns of an orthonormal frame for the inner product `G`, by modified
/// Gram-Schmidt on the standard basis.
fn gram_schmidt_frame(g: &DMatrix<f64>) -> DMatrix<f64> {
    let d = g.nrows();
    let mut frame = DMatrix::<f64>::zeros(d, d);
    for i in 0..d {
        let mut v = DVector::zeros(d);
        v[i] = 1.0;
        for k in 0..i {
            let ek = frame.column(k);
            let proj = (ek.transpose() * g * &v)[(0, 0)];
            v -= ek * proj;
        }
        let len = (v.transpose() * g * &v)[(0, 0)].sqrt();
        frame.set_column(i, &(v / len));
    }
    frame
}

/// Ricci curvature, scalar curvature, and the associated 2-forms at `p`,
/// with the Ricci components obtained from central finite differences of
/// `log det g` at step `step`.
pub fn ricci_and_kappa(p: &ChartPoint, step: f64) -> Result<KahlerData, FsError> {
    if step < MIN_STEP {
        return Err(FsError::StepTooSmall { step });
    }
    if step > MAX_STEP {
        return Err(FsError::StepTooLarge { step });
    }
    let n = p.dim();
    let d = 2 * n;
    let base = p.coords().to_vec();

    let eval = |shifts: &[(usize, f64)]| -> f64 {
        let mut z = base.clone();
        for &(coord, delta) in shifts {
            if coord < n {
                z[coord] += Complex::new(delta, 0.0);
            } else {
                z[coord - n] += Complex::new(0.0, delta);
            }
        }
        log_det_metric(&z)
    };

    // full real Hessian of log det g
    let f0 = eval(&[]);
    let mut hess = DMatrix::zeros(d, d);
    for a in 0..d {
        let fp = eval(&[(a, step)]);
        let fm = eval(&[(a, -step)]);
        hess[(a, a)] = (fp - 2.0 * f0 + fm) / (step * step);
    }
    for a in 0..d {
        for b in a + 1..d {
            let fpp = eval(&[(a, step), (b, step)]);
            let fpm = eval(&[(a, step), (b, -step)]);
            let fmp = eval(&[(a, -step), (b, step)]);
            let fmm = eval(&[(a, -step), (b, -step)]);
            let v = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
            hess[(a, b)] = v;
            hess[(b, a)] = v;
        }
    }

    // R_{i jbar} = -d_i d_jbar log det g
    //           = -(1/4) [ (F_xx + F_yy) + i (F_xy - F_yx) ]
    let mut ricci = CMatrix::from_fn(n, n, |i, j| {
        let re = hess[(i, j)] + hess[(n + i, n + j)];
        let im = hess[(i, n + j)] - hess[(n + i, j)];
        Complex::new(re, im) * (-0.25)
    });
    // hermitize away the finite-difference noise
    ricci = (&ricci + ricci.adjoint()) * Complex::new(0.5, 0.0);

    let metric = metric_at(&base);
    let g_real = realify(&metric);
    // the real Ricci tensor doubles the realified Hermitian components
    let ric_real = realify(&ricci) * 2.0;
    let j = complex_structure(n);
    let frame = gram_schmidt_frame(&g_real);

    let kappa = g_real
        .clone()
        .lu()
        .solve(&ric_real)
        .expect("Fubini-Study metric is positive definite")
        .trace();

    let skew_in_frame = |m: &DMatrix<f64>| -> Result<TwoForm, ComassError> {
        let raw = frame.transpose() * m * &j * &frame;
        TwoForm::new(0.5 * (&raw - raw.transpose()))
    };
    let omega = skew_in_frame(&g_real)?;
    let rho = skew_in_frame(&ric_real)?;

    Ok(KahlerData {
        metric,
        ricci,
        kappa,
        omega,
        rho,
    })
}

/// Residuals of the curvature identities at one chart point.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub n: usize,
    pub kappa: f64,
    pub omega_norm: f64,
    pub rho_norm: f64,
    /// `| ||omega|| - n |`
    pub omega_residual: f64,
    /// `| kappa - 2 ||rho|| |`
    pub kappa_residual: f64,
    /// componentwise `| rho - 2(n+1) omega |`
    pub proportionality_residual: f64,
    /// componentwise `| Ric - (n+1) g |`
    pub einstein_residual: f64,
}

impl IdentityReport {
    /// The largest of the four residuals.
    pub fn max_residual(&self) -> f64 {
        self.omega_residual
            .max(self.kappa_residual)
            .max(self.proportionality_residual)
            .max(self.einstein_residual)
    }
}

/// Checks the normalization identities at `p` with the default step.
pub fn verify_identities(p: &ChartPoint) -> Result<IdentityReport, FsError> {
    verify_identities_with_step(p, DEFAULT_STEP)
}

pub fn verify_identities_with_step(p: &ChartPoint, step: f64) -> Result<IdentityReport, FsError> {
    let n = p.dim();
    let data = ricci_and_kappa(p, step)?;
    let omega_norm = data.omega.norm()?;
    let rho_norm = data.rho.norm()?;
    let factor = 2.0 * (n as f64 + 1.0);
    let proportionality_residual = (data.rho.matrix() - data.omega.matrix() * factor)
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    let einstein_residual = (&data.ricci - &data.metric * Complex::new(n as f64 + 1.0, 0.0))
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.norm()));
    Ok(IdentityReport {
        n,
        kappa: data.kappa,
        omega_norm,
        rho_norm,
        omega_residual: (omega_norm - n as f64).abs(),
        kappa_residual: (data.kappa - 2.0 * rho_norm).abs(),
        proportionality_residual,
        einstein_residual,
    })
}

/// The expected scalar curvature `4n(n+1)` under this normalization.
pub fn expected_kappa(n: usize) -> f64 {
    4.0 * n as f64 * (n as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn metric_at_origin_is_identity() {
        for n in 1..=3 {
            let g = fs_metric(&ChartPoint::origin(n));
            assert!((&g - CMatrix::identity(n, n)).norm() < 1e-15);
        }
    }

    #[test]
    fn metric_on_line_at_one() {
        let p = ChartPoint::new(vec![c(1.0, 0.0)]).unwrap();
        let g = fs_metric(&p);
        assert!((g[(0, 0)].re - 0.25).abs() < 1e-15);
        assert!(g[(0, 0)].im.abs() < 1e-15);
    }

    #[test]
    fn metric_is_hermitian_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let p = ChartPoint::random(3, 1.5, &mut rng);
            let g = fs_metric(&p);
            assert!((&g - g.adjoint()).norm() < 1e-14);
            let det = g.determinant();
            assert!(det.re > 0.0);
        }
    }

    #[test]
    fn metric_is_unitary_congruent() {
        // z -> Uz is a holomorphic isometry of the chart, so the pulled-back
        // Hermitian components U^T g(Uz) conj(U) reproduce g(z)
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = ChartPoint::new(vec![c(0.4, -0.3), c(0.1, 0.6)]).unwrap();
        for _ in 0..5 {
            let g = CMatrix::from_fn(2, 2, |_, _| {
                c(
                    rng.sample(rand_distr::StandardNormal),
                    rng.sample(rand_distr::StandardNormal),
                )
            });
            let u = g.qr().q();
            let z = DVector::from_vec(p.coords().to_vec());
            let uz = &u * z;
            let rotated = ChartPoint::new(uz.iter().copied().collect()).unwrap();
            let pulled = u.transpose() * fs_metric(&rotated) * u.conjugate();
            assert!((pulled - fs_metric(&p)).norm() < 1e-12);
        }
    }

    #[test]
    fn chart_overflow_rejected() {
        let err = ChartPoint::new(vec![c(11.0, 0.0)]).unwrap_err();
        assert!(matches!(err, FsError::ChartOverflow { .. }));
        assert!(ChartPoint::with_chart_radius(vec![c(11.0, 0.0)], 20.0).is_ok());
    }

    #[test]
    fn step_bounds_enforced() {
        let p = ChartPoint::origin(1);
        assert!(matches!(
            ricci_and_kappa(&p, 1e-6),
            Err(FsError::StepTooSmall { .. })
        ));
        assert!(matches!(
            ricci_and_kappa(&p, 0.5),
            Err(FsError::StepTooLarge { .. })
        ));
    }

    #[test]
    fn kappa_on_the_line_is_eight() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let p = ChartPoint::random(1, 1.2, &mut rng);
            let data = ricci_and_kappa(&p, DEFAULT_STEP).unwrap();
            assert!((data.kappa - 8.0).abs() < 1e-4, "kappa = {}", data.kappa);
        }
    }

    #[test]
    fn kappa_matches_4n_n_plus_1() {
        for n in 1..=3usize {
            let data = ricci_and_kappa(&ChartPoint::origin(n), DEFAULT_STEP).unwrap();
            assert!(
                (data.kappa - expected_kappa(n)).abs() < 1e-4,
                "n = {}, kappa = {}",
                n,
                data.kappa
            );
        }
    }

    #[test]
    fn einstein_property_of_hermitian_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let p = ChartPoint::random(2, 1.2, &mut rng);
            let data = ricci_and_kappa(&p, DEFAULT_STEP).unwrap();
            let residual = (&data.ricci - &data.metric * c(3.0, 0.0))
                .iter()
                .fold(0.0f64, |acc, v| acc.max(v.norm()));
            assert!(residual < 1e-4, "residual = {}", residual);
        }
    }

    #[test]
    fn identities_hold_at_sample_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=3usize {
            for _ in 0..5 {
                let p = ChartPoint::random(n, 1.2, &mut rng);
                let report = verify_identities(&p).unwrap();
                assert!(report.max_residual() < 1e-4, "n={} {:?}", n, report);
                assert!((report.kappa - expected_kappa(n)).abs() < 1e-4);
            }
        }
    }

    #[test]
    fn kappa_is_unitary_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = ChartPoint::new(vec![c(0.31, 0.12), c(-0.17, 0.23)]).unwrap();
        let kappa = ricci_and_kappa(&p, DEFAULT_STEP).unwrap().kappa;
        for _ in 0..3 {
            // Haar-ish unitary from QR of a complex Gaussian
            let g = CMatrix::from_fn(2, 2, |_, _| {
                c(
                    rng.sample(rand_distr::StandardNormal),
                    rng.sample(rand_distr::StandardNormal),
                )
            });
            let qr = g.qr();
            let q = qr.q();
            let z = DVector::from_vec(p.coords().to_vec());
            let rotated = &q * z;
            let p2 = ChartPoint::new(rotated.iter().copied().collect()).unwrap();
            let kappa2 = ricci_and_kappa(&p2, DEFAULT_STEP).unwrap().kappa;
            assert!((kappa - kappa2).abs() < 1e-6, "{} vs {}", kappa, kappa2);
        }
    }

    #[test]
    fn halving_the_step_quarters_the_error() {
        let p = ChartPoint::new(vec![c(0.31, 0.12), c(-0.17, 0.23)]).unwrap();
        let exact = expected_kappa(2);
        let err_h = (ricci_and_kappa(&p, 4e-3).unwrap().kappa - exact).abs();
        let err_h2 = (ricci_and_kappa(&p, 2e-3).unwrap().kappa - exact).abs();
        let ratio = err_h / err_h2;
        assert!(
            (3.5..=4.5).contains(&ratio),
            "ratio = {} (errors {} and {})",
            ratio,
            err_h,
            err_h2
        );
    }
}
