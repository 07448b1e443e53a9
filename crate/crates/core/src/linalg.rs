//! Dense complex matrix kernel for the kinematics: inner products, adjoints,
//! tolerance-based comparisons, DFT eigenvectors with their circulant
//! spectral projectors, involution projectors, and matrix functions through
//! the Lagrange-Sylvester formula
//!
//! ```text
//! f(A) = sum_j sum_{k=0}^{q_j - 1} f^(k)(lambda_j)/k! * (A - lambda_j I)^k * P_j.
//! ```
//!
//! Matrices are dense row-major [`ndarray`] arrays of `Complex64`; row/column
//! index `i` corresponds to the coset representative `t_i = R_i`. Products,
//! sums and scalar multiples use the ndarray operators (`a.dot(&b)`,
//! `&a + &b`, `a * z`). No general-purpose eigensolver is used anywhere:
//! every spectral decomposition in scope is available in closed form (the DFT
//! basis for circulants, `(V +/- I)/2` for involutions), which keeps results
//! reproducible across platforms up to rounding.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::{Error, Result};

/// Dense square complex matrix.
pub type ComplexMatrix = Array2<Complex64>;
/// Dense complex vector.
pub type ComplexVector = Array1<Complex64>;

/// Default equality/unitarity tolerance for dimension-n matrices.
pub fn default_tolerance(n: usize) -> f64 {
    1e-10 * n as f64
}

/// The n x n identity.
pub fn identity(n: usize) -> ComplexMatrix {
    Array2::eye(n)
}

/// The root of unity `exp(2 pi i k / n)` (k taken mod n exactly).
pub fn root_of_unity(n: usize, k: i64) -> Complex64 {
    let k = k.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, TAU * k / n as f64)
}

/// Standard inner product `<u, v> = sum_i conj(u_i) v_i`, antilinear in the
/// first argument.
pub fn inner(u: &ComplexVector, v: &ComplexVector) -> Result<Complex64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(u.len(), v.len()));
    }
    Ok(u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum())
}

/// Conjugate transpose.
pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    a.t().mapv(|z| z.conj())
}

/// Entrywise max absolute difference. Panics on shape mismatch, like the
/// ndarray arithmetic operators.
pub fn max_norm_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.dim(), b.dim(), "max_norm_diff: shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Entrywise max absolute difference of vectors.
pub fn max_norm_diff_vec(u: &ComplexVector, v: &ComplexVector) -> f64 {
    assert_eq!(u.len(), v.len(), "max_norm_diff_vec: length mismatch");
    u.iter()
        .zip(v.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Checks `A A^dagger = I` entrywise within `tol`.
pub fn is_unitary(a: &ComplexMatrix, tol: f64) -> bool {
    unitarity_deviation(a) <= tol
}

/// `max|A A^dagger - I|`.
pub fn unitarity_deviation(a: &ComplexMatrix) -> f64 {
    let n = a.nrows();
    max_norm_diff(&a.dot(&adjoint(a)), &identity(n))
}

/// Rank of an orthogonal projector, read off its trace.
pub fn projector_rank(p: &ComplexMatrix) -> usize {
    let trace: Complex64 = p.diag().iter().sum();
    trace.re.round() as usize
}

/// Normalized eigenvector `|k>` of the cyclic shift, laid out as the column
/// `(lambda_k^{n-1}, lambda_k^{n-2}, ..., lambda_k, 1) / sqrt(n)` with
/// `lambda_k = exp(2 pi i k / n)`.
pub fn dft_eigenvector(n: usize, k: usize) -> Result<ComplexVector> {
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    let scale = 1.0 / (n as f64).sqrt();
    Ok(Array1::from_iter((0..n).map(|j| {
        root_of_unity(n, (k * (n - 1 - j)) as i64) * scale
    })))
}

/// Rank-one spectral projector of the cyclic shift,
/// `(P_k)_{lm} = exp(2 pi i k (m - l) / n) / n = |k><k|`.
pub fn circulant_projector(n: usize, k: usize) -> Result<ComplexMatrix> {
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    let scale = 1.0 / n as f64;
    Ok(Array2::from_shape_fn((n, n), |(l, m)| {
        root_of_unity(n, k as i64 * (m as i64 - l as i64)) * scale
    }))
}

/// Orthogonal projectors onto the +1 and -1 eigenspaces of an involution:
/// `P_+ = (V + I)/2`, `P_- = -(V - I)/2`, so that `P_+ + P_- = I` and
/// `V = P_+ - P_-`.
pub fn involution_projectors(
    v: &ComplexMatrix,
    tol: f64,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let n = v.nrows();
    let deviation = max_norm_diff(&v.dot(v), &identity(n));
    if deviation > tol {
        return Err(Error::NotInvolution {
            deviation,
            tolerance: tol,
        });
    }
    let half = Complex64::new(0.5, 0.0);
    let eye = identity(n);
    let plus = (v + &eye).mapv(|z| z * half);
    let minus = (&eye - v).mapv(|z| z * half);
    Ok((plus, minus))
}

/// Spectral decomposition of a diagonalizable matrix: distinct eigenvalues,
/// their multiplicities, and the orthogonal projectors onto the eigenspaces.
#[derive(Debug, Clone)]
pub struct SpectralData {
    eigenvalues: Vec<Complex64>,
    multiplicities: Vec<usize>,
    projectors: Vec<ComplexMatrix>,
}

impl SpectralData {
    /// Assembles spectral data, enforcing matching list lengths, positive
    /// multiplicities summing to the dimension, and distinct eigenvalues.
    pub fn new(
        eigenvalues: Vec<Complex64>,
        multiplicities: Vec<usize>,
        projectors: Vec<ComplexMatrix>,
    ) -> Result<Self> {
        if eigenvalues.len() != multiplicities.len() || eigenvalues.len() != projectors.len() {
            return Err(Error::InvalidSpectralData(format!(
                "list lengths disagree: {} eigenvalues, {} multiplicities, {} projectors",
                eigenvalues.len(),
                multiplicities.len(),
                projectors.len()
            )));
        }
        if eigenvalues.is_empty() {
            return Err(Error::InvalidSpectralData("empty spectrum".into()));
        }
        let dim = projectors[0].nrows();
        if multiplicities.contains(&0) {
            return Err(Error::InvalidSpectralData(
                "zero multiplicity eigenvalue".into(),
            ));
        }
        if multiplicities.iter().sum::<usize>() != dim {
            return Err(Error::InvalidSpectralData(format!(
                "multiplicities sum to {} but dimension is {}",
                multiplicities.iter().sum::<usize>(),
                dim
            )));
        }
        for (i, a) in eigenvalues.iter().enumerate() {
            for b in eigenvalues.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::InvalidSpectralData(format!(
                        "repeated eigenvalue {a}"
                    )));
                }
            }
        }
        Ok(Self {
            eigenvalues,
            multiplicities,
            projectors,
        })
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    pub fn dim(&self) -> usize {
        self.projectors[0].nrows()
    }

    /// `sum_j lambda_j P_j`; equals the decomposed matrix when the data are
    /// valid.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut acc = Array2::zeros((self.dim(), self.dim()));
        for (lambda, p) in self.eigenvalues.iter().zip(&self.projectors) {
            acc = acc + p.mapv(|z| z * lambda);
        }
        acc
    }

    /// Verifies the projector identities against `a` within `tol`:
    /// completeness, idempotence, mutual orthogonality, rank = multiplicity,
    /// and `A = sum lambda_j P_j`. Returns the largest deviation observed.
    pub fn validate(&self, a: &ComplexMatrix, tol: f64) -> Result<f64> {
        let n = self.dim();
        if a.nrows() != n || a.ncols() != n {
            return Err(Error::DimensionMismatch(a.nrows(), n));
        }
        let mut worst: f64 = 0.0;
        let fail = |what: &str, deviation: f64| -> Result<()> {
            if deviation > tol {
                return Err(Error::InvalidSpectralData(format!(
                    "{what}: deviation {deviation:.3e} exceeds {tol:.3e}"
                )));
            }
            Ok(())
        };

        let sum = self
            .projectors
            .iter()
            .fold(Array2::zeros((n, n)), |acc, p| acc + p);
        let dev = max_norm_diff(&sum, &identity(n));
        worst = worst.max(dev);
        fail("projector completeness sum P_j = I", dev)?;

        for (j, p) in self.projectors.iter().enumerate() {
            let dev = max_norm_diff(&p.dot(p), p);
            worst = worst.max(dev);
            fail("projector idempotence", dev)?;
            if projector_rank(p) != self.multiplicities[j] {
                return Err(Error::InvalidSpectralData(format!(
                    "projector {j} has rank {} but multiplicity {}",
                    projector_rank(p),
                    self.multiplicities[j]
                )));
            }
            for l in self.projectors.iter().skip(j + 1) {
                let prod = p.dot(l);
                let dev = prod.iter().map(|z| z.norm()).fold(0.0, f64::max);
                worst = worst.max(dev);
                fail("projector orthogonality", dev)?;
            }
        }

        let dev = max_norm_diff(&self.reconstruct(), a);
        worst = worst.max(dev);
        fail("spectral reconstruction sum lambda_j P_j = A", dev)?;
        Ok(worst)
    }
}

/// Scalar function with derivatives, as consumed by [`lagrange_sylvester`]:
/// `f(order, z)` returns the order-th derivative of f at z, or `None` where f
/// is undefined (pole, branch cut).
pub trait ScalarFunction {
    fn eval(&self, order: usize, z: Complex64) -> Option<Complex64>;
}

impl<F> ScalarFunction for F
where
    F: Fn(usize, Complex64) -> Option<Complex64>,
{
    fn eval(&self, order: usize, z: Complex64) -> Option<Complex64> {
        self(order, z)
    }
}

/// The exponential, a fixed point of differentiation.
pub fn exp_function() -> impl ScalarFunction {
    |_, z: Complex64| Some(z.exp())
}

/// A complex logarithm with the branch chosen by `offset`: the argument is
/// reduced to the half-open interval `[offset, offset + 2 pi)`. `offset = 0`
/// gives the branch `ln(lambda) = ln|lambda| + i theta` with
/// `theta in [0, 2 pi)` used for the momentum operator; `offset = -pi` puts
/// `ln(-1) = -i pi`, the choice behind the parity generators. Undefined at 0;
/// derivatives are the usual `(-1)^(k-1) (k-1)! / z^k`.
pub fn log_function(offset: f64) -> impl ScalarFunction {
    move |order: usize, z: Complex64| {
        if z.norm() == 0.0 {
            return None;
        }
        match order {
            0 => {
                let theta = (z.arg() - offset).rem_euclid(TAU) + offset;
                Some(Complex64::new(z.norm().ln(), theta))
            }
            k => {
                let mut factorial = 1.0;
                for i in 1..k {
                    factorial *= i as f64;
                }
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                Some(Complex64::new(sign * factorial, 0.0) / z.powu(k as u32))
            }
        }
    }
}

/// Matrix function via the Lagrange-Sylvester formula. `spectrum` must be a
/// valid spectral decomposition of `a`; the nilpotent terms `k >= 1` vanish
/// for diagonalizable input but are evaluated faithfully.
pub fn lagrange_sylvester(
    f: &dyn ScalarFunction,
    spectrum: &SpectralData,
    a: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let n = spectrum.dim();
    if a.nrows() != n || a.ncols() != n {
        return Err(Error::DimensionMismatch(a.nrows(), n));
    }
    let mut result: ComplexMatrix = Array2::zeros((n, n));
    for (j, &lambda) in spectrum.eigenvalues().iter().enumerate() {
        let q = spectrum.multiplicities()[j];
        let projector = &spectrum.projectors()[j];
        let shifted = a - &identity(n).mapv(|z| z * lambda);
        let mut power = identity(n); // (A - lambda I)^k, starting at k = 0
        let mut factorial = 1.0;
        for k in 0..q {
            if k > 0 {
                power = power.dot(&shifted);
                factorial *= k as f64;
            }
            let coefficient = f
                .eval(k, lambda)
                .ok_or(Error::FunctionUndefined(lambda, k))?
                / factorial;
            let term = if k == 0 {
                projector.mapv(|z| z * coefficient)
            } else {
                power.dot(projector).mapv(|z| z * coefficient)
            };
            result = result + term;
        }
    }
    Ok(result)
}

/// Accumulates rank-one terms `|v><v|` in a fixed order. Plain summation for
/// small dimensions; Kahan-compensated entrywise summation above
/// [`COMPENSATED_SUM_THRESHOLD`] so that tolerances stay reproducible.
pub fn sum_outer_products<'a, I>(n: usize, states: I) -> ComplexMatrix
where
    I: Iterator<Item = &'a ComplexVector>,
{
    let mut acc: ComplexMatrix = Array2::zeros((n, n));
    if n <= COMPENSATED_SUM_THRESHOLD {
        for v in states {
            for l in 0..n {
                for m in 0..n {
                    acc[(l, m)] += v[l] * v[m].conj();
                }
            }
        }
        return acc;
    }
    let mut compensation: ComplexMatrix = Array2::zeros((n, n));
    for v in states {
        for l in 0..n {
            for m in 0..n {
                let term = v[l] * v[m].conj() - compensation[(l, m)];
                let next = acc[(l, m)] + term;
                compensation[(l, m)] = (next - acc[(l, m)]) - term;
                acc[(l, m)] = next;
            }
        }
    }
    acc
}

/// Dimension above which [`sum_outer_products`] switches to compensated
/// summation.
pub const COMPENSATED_SUM_THRESHOLD: usize = 64;

/// Spectral value `-pi (n-1)/n`, the diagonal momentum matrix element; kept
/// here so the branch convention lives next to [`log_function`].
pub fn momentum_diagonal(n: usize) -> f64 {
    -PI * (n as f64 - 1.0) / n as f64
}
