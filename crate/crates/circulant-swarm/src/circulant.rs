//! Factor-circulant matrices and their closed-form spectral factorization.
//!
//! A factor circulant (here a "λ-circulant") is an N×N matrix constant
//! along wrapped diagonals where every entry that wraps below the main
//! diagonal picks up an extra factor λ. It is fully described by its
//! first row `[m_0, ..., m_{N-1}]` and the factor:
//!
//! ```text
//! [ m_0     m_1     m_2   ...  m_{N-1} ]
//! [ λ m_{N-1}  m_0  m_1   ...  m_{N-2} ]
//! [ λ m_{N-2}  λ m_{N-1}  m_0 ...      ]
//! [   ...                  ...         ]
//! [ λ m_1   λ m_2   ...  λ m_{N-1} m_0 ]
//! ```
//!
//! λ = 1 recovers the ordinary circulant. For λ ≠ 0 the matrix is
//! diagonalized in closed form by a scaled Fourier transform: with
//! γ an N-th root of λ and Γ = Diag(1, γ, ..., γ^{N-1}),
//!
//! ```text
//! Φ = Γ · FT · Diag(μ_0, ..., μ_{N-1}) · FT* · Γ⁻¹
//! μ_l = Σ_k  m_k γ^k e^{-i 2π k l / N}
//! ```
//!
//! so eigenvalues, products, inverses and matrix powers all reduce to
//! O(N²) arithmetic on the compressed form. All sizes here are desk
//! scale; the direct DFT evaluation is the contract.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Principal N-th root of a nonzero complex factor.
///
/// Returns γ = |λ|^{1/n} · e^{i·Arg(λ)/n} with Arg in (−π, π], so that
/// γ^n = λ. Any N-th root would diagonalize the same matrices; the
/// principal branch is used throughout because it is deterministic.
pub fn principal_root(factor: Complex64, n: usize) -> Result<Complex64> {
    if factor.norm() == 0.0 {
        return Err(Error::DegenerateFactor);
    }
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let r = factor.norm().powf(1.0 / n as f64);
    let theta = factor.arg() / n as f64;
    Ok(Complex64::from_polar(r, theta))
}

/// Unitary discrete Fourier transform matrix of order n.
///
/// Entry (k, l) is w^{k·l} / √n with w = e^{-i 2π / n}.
pub fn dft_matrix(n: usize) -> DenseMatrix {
    assert!(n >= 1, "dft_matrix needs n >= 1");
    let scale = 1.0 / (n as f64).sqrt();
    DenseMatrix::from_fn(n, |k, l| unit_root(n, k * l) * scale)
}

/// e^{-i 2π a / n}, with the angle reduced mod n before evaluation.
fn unit_root(n: usize, a: usize) -> Complex64 {
    let angle = -2.0 * std::f64::consts::PI * ((a % n) as f64) / n as f64;
    Complex64::from_polar(1.0, angle)
}

/// γ^k evaluated in polar form (stable for negative k and |γ| ≠ 1).
fn polar_pow(gamma: Complex64, k: i32) -> Complex64 {
    Complex64::from_polar(gamma.norm().powi(k), gamma.arg() * k as f64)
}

fn check_finite(values: &[Complex64], what: &'static str) -> Result<()> {
    if values.iter().all(|z| z.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// A λ-factor circulant in compressed form: first row plus factor.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorCirculant {
    weights: Vec<Complex64>,
    factor: Complex64,
}

impl FactorCirculant {
    /// Build from the first row and the wrap factor.
    ///
    /// A zero factor is accepted here (the dense form is still well
    /// defined); spectral operations reject it.
    pub fn new(weights: Vec<Complex64>, factor: Complex64) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::TooSmall(weights.len()));
        }
        check_finite(&weights, "weights")?;
        if !factor.is_finite() {
            return Err(Error::NonFinite("factor"));
        }
        Ok(FactorCirculant { weights, factor })
    }

    /// The identity matrix as a circulant (factor 1).
    pub fn identity(n: usize) -> Result<Self> {
        let mut m = vec![Complex64::new(0.0, 0.0); n.max(1)];
        if n >= 1 {
            m[0] = Complex64::new(1.0, 0.0);
        }
        Self::new(m, Complex64::new(1.0, 0.0))
    }

    /// The factor-circulant shift: ones on the first superdiagonal and
    /// λ in the bottom-left corner. Its N-th power equals λ·I.
    pub fn shift(n: usize, factor: Complex64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        let mut m = vec![Complex64::new(0.0, 0.0); n];
        m[1] = Complex64::new(1.0, 0.0);
        Self::new(m, factor)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn factor(&self) -> Complex64 {
        self.factor
    }

    /// Entry (r, c) by the defining rule: λ^{[c−r < 0]} · m_{(c−r) mod N}.
    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        let n = self.n();
        let w = self.weights[(c + n - r) % n];
        if c < r {
            self.factor * w
        } else {
            w
        }
    }

    /// Materialize the dense N×N form.
    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n(), |r, c| self.entry(r, c))
    }

    /// Closed-form eigenvalues μ_l = Σ_k m_k γ^k e^{-i2πkl/N} in DFT
    /// index order l = 0..N−1 (never sorted by modulus).
    pub fn eigenvalues(&self) -> Result<ModalSpectrum> {
        let n = self.n();
        let gamma = principal_root(self.factor, n)?;
        let scaled: Vec<Complex64> = (0..n)
            .map(|k| self.weights[k] * polar_pow(gamma, k as i32))
            .collect();
        let mu = (0..n)
            .map(|l| {
                (0..n)
                    .map(|k| scaled[k] * unit_root(n, k * l))
                    .sum::<Complex64>()
            })
            .collect();
        Ok(ModalSpectrum { mu, gamma })
    }

    /// Closed-form diagonalization Φ = T · Diag(μ) · T⁻¹ with
    /// T = Γ·FT and T⁻¹ = FT*·Γ⁻¹.
    pub fn diagonalize(&self) -> Result<Diagonalization> {
        let n = self.n();
        let spectrum = self.eigenvalues()?;
        let gamma = spectrum.gamma;
        let scale = 1.0 / (n as f64).sqrt();
        let t = DenseMatrix::from_fn(n, |k, l| {
            polar_pow(gamma, k as i32) * unit_root(n, k * l) * scale
        });
        let t_inv = DenseMatrix::from_fn(n, |k, l| {
            unit_root(n, k * l).conj() * polar_pow(gamma, -(l as i32)) * scale
        });
        Ok(Diagonalization { t, t_inv, spectrum })
    }

    /// Express the matrix as an elementwise (Schur–Hadamard) product of
    /// a plain circulant, a circulant of γ powers and the lower-triangular
    /// λ mask.
    pub fn mask_decompose(&self) -> Result<MaskDecomposition> {
        let n = self.n();
        let gamma = principal_root(self.factor, n)?;
        let base = (0..n)
            .map(|k| self.weights[k] * polar_pow(gamma, k as i32))
            .collect();
        let gamma_row = (0..n).map(|k| polar_pow(gamma, -(k as i32))).collect();
        Ok(MaskDecomposition {
            base_circulant: base,
            gamma_circulant: gamma_row,
            factor: self.factor,
            n,
        })
    }

    /// Matrix-vector product directly off the compressed form.
    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: v.len(),
            });
        }
        Ok((0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c) * v[c]).sum())
            .collect())
    }

    /// Product of two factor circulants with the same size and the same
    /// (bitwise equal) factor. The result is again a factor circulant with
    /// that factor; its first row is row 0 of the dense product.
    pub fn multiply(&self, other: &FactorCirculant) -> Result<FactorCirculant> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: other.n(),
            });
        }
        if self.factor != other.factor {
            return Err(Error::FactorMismatch);
        }
        let row = (0..n)
            .map(|j| (0..n).map(|l| self.weights[l] * other.entry(l, j)).sum())
            .collect();
        FactorCirculant::new(row, self.factor)
    }

    /// Inverse through the modal route: a factor circulant with the same
    /// factor and reciprocal eigenvalues.
    ///
    /// Modes with |μ_l| at or below 1e−12 · max|μ| are reported as
    /// singular rather than inverted.
    pub fn inverse(&self) -> Result<FactorCirculant> {
        let n = self.n();
        let spectrum = self.eigenvalues()?;
        let max_mu = spectrum.mu.iter().map(|m| m.norm()).fold(0.0, f64::max);
        let tol = 1e-12 * max_mu;
        let vanishing: Vec<usize> = (0..n).filter(|&l| spectrum.mu[l].norm() <= tol).collect();
        if !vanishing.is_empty() {
            return Err(Error::SingularSpectrum(vanishing));
        }
        // First row of the inverse's base circulant is the inverse DFT of
        // the reciprocal spectrum; undo the γ scaling to recover weights.
        let gamma = spectrum.gamma;
        let weights = (0..n)
            .map(|j| {
                let c: Complex64 = (0..n)
                    .map(|l| unit_root(n, j * l).conj() / spectrum.mu[l])
                    .sum();
                c * polar_pow(gamma, -(j as i32)) / n as f64
            })
            .collect();
        FactorCirculant::new(weights, self.factor)
    }
}

/// Eigenvalues μ_0..μ_{N−1} together with the root γ used to scale the
/// transform that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalSpectrum {
    mu: Vec<Complex64>,
    gamma: Complex64,
}

impl ModalSpectrum {
    pub fn mu(&self) -> &[Complex64] {
        &self.mu
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// Largest eigenvalue modulus.
    pub fn spectral_radius(&self) -> f64 {
        self.mu.iter().map(|m| m.norm()).fold(0.0, f64::max)
    }
}

/// The two factors of the closed-form diagonalization, plus the spectrum.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    t: DenseMatrix,
    t_inv: DenseMatrix,
    spectrum: ModalSpectrum,
}

impl Diagonalization {
    pub fn t(&self) -> &DenseMatrix {
        &self.t
    }

    pub fn t_inv(&self) -> &DenseMatrix {
        &self.t_inv
    }

    pub fn spectrum(&self) -> &ModalSpectrum {
        &self.spectrum
    }

    pub fn n(&self) -> usize {
        self.spectrum.len()
    }

    /// T · Diag(μ) · T⁻¹, for consistency checks against the dense form.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.n();
        let scaled = DenseMatrix::from_fn(n, |r, c| self.t.get(r, c) * self.spectrum.mu[c]);
        scaled.mul(&self.t_inv)
    }
}

/// Elementwise factorization of a λ-circulant into a base circulant,
/// a circulant of γ powers and the lower-triangular λ mask.
#[derive(Debug, Clone)]
pub struct MaskDecomposition {
    base_circulant: Vec<Complex64>,
    gamma_circulant: Vec<Complex64>,
    factor: Complex64,
    n: usize,
}

impl MaskDecomposition {
    /// First row of the base circulant, c_k = m_k γ^k.
    pub fn base_circulant(&self) -> &[Complex64] {
        &self.base_circulant
    }

    /// First row of the γ-power circulant, (1, γ⁻¹, ..., γ^{-(N-1)}).
    pub fn gamma_circulant(&self) -> &[Complex64] {
        &self.gamma_circulant
    }

    pub fn factor(&self) -> Complex64 {
        self.factor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dense base circulant Circ[c].
    pub fn base_dense(&self) -> DenseMatrix {
        circulant_dense(&self.base_circulant)
    }

    /// Dense γ-power circulant.
    pub fn gamma_dense(&self) -> DenseMatrix {
        circulant_dense(&self.gamma_circulant)
    }

    /// The mask Λ: ones on and above the diagonal, λ strictly below.
    pub fn lambda_mask_dense(&self) -> DenseMatrix {
        let one = Complex64::new(1.0, 0.0);
        let factor = self.factor;
        DenseMatrix::from_fn(self.n, |r, c| if c < r { factor } else { one })
    }

    /// Elementwise product of the three factors.
    pub fn reconstruct(&self) -> DenseMatrix {
        let base = self.base_dense();
        let gamma = self.gamma_dense();
        let mask = self.lambda_mask_dense();
        DenseMatrix::from_fn(self.n, |r, c| {
            base.get(r, c) * gamma.get(r, c) * mask.get(r, c)
        })
    }
}

/// Dense circulant with the given first row.
fn circulant_dense(row: &[Complex64]) -> DenseMatrix {
    let n = row.len();
    DenseMatrix::from_fn(n, |r, c| row[(c + n - r) % n])
}

/// Row-major dense complex matrix. Plumbing for oracle computations,
/// interchange and the diagonalization factors; not a linear-algebra
/// library.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| {
            if r == c {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        DenseMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.entries[r * self.n + c] = v;
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n, "vector length must match matrix size");
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes must match");
        DenseMatrix::from_fn(self.n, |r, c| {
            (0..self.n).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }

    pub fn conj_transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    /// Row sums, each accumulated in column order.
    pub fn row_sums(&self) -> Vec<Complex64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c)).sum())
            .collect()
    }

    /// Largest entrywise |a - b|.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.n, other.n, "matrix sizes must match");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
