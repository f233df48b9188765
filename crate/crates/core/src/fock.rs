//! Truncated Fock space: state vectors, dense operators and the standard
//! oscillator matrices a, a⁺, x, p and H.
//!
//! The basis is |0⟩..|n_max⟩. Every matrix is exact within that block except
//! where a product reaches past the cutoff, e.g. the commutator [a, a⁺] whose
//! last diagonal entry is −n_max instead of 1.

use std::ops::{Add, Mul, Sub};

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::OscillatorParams;

/// Default squared-norm tolerance for "physical state" checks at unit scale.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Coefficients C_n of a state in the truncated eigenbasis, stamped with a time.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    coeffs: Array1<Complex64>,
    time: f64,
}

impl StateVector {
    /// Fails on an empty coefficient array; a truncated basis has at least |0⟩.
    pub fn new(coeffs: Array1<Complex64>, time: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::LengthMismatch { left: 0, right: 1 });
        }
        Ok(Self { coeffs, time })
    }

    pub fn from_vec(coeffs: Vec<Complex64>, time: f64) -> Result<Self> {
        Self::new(Array1::from(coeffs), time)
    }

    pub fn coeffs(&self) -> &Array1<Complex64> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Array1<Complex64> {
        self.coeffs
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn with_time(mut self, time: f64) -> Self {
        self.time = time;
        self
    }

    /// Σ|C_n|².
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tolerance: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tolerance
    }

    pub fn check_normalized(&self, tolerance: f64) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() <= tolerance {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                norm_sqr,
                tolerance,
            })
        }
    }

    /// Rescales to unit norm; a zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.mapv(|c| c / norm),
            time: self.time,
        }
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::LengthMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Embeds the state into a larger basis with zero amplitude above the
    /// current cutoff.
    pub fn padded(&self, n_max: usize) -> Result<Self> {
        if n_max < self.n_max() {
            return Err(Error::OutOfRange {
                n: self.n_max(),
                n_max,
            });
        }
        let mut coeffs = Array1::zeros(n_max + 1);
        coeffs
            .slice_mut(ndarray::s![..self.dim()])
            .assign(&self.coeffs);
        Ok(Self {
            coeffs,
            time: self.time,
        })
    }
}

/// Dense complex square matrix on the truncated basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    matrix: Array2<Complex64>,
}

impl Operator {
    pub fn new(matrix: Array2<Complex64>) -> Result<Self> {
        let (rows, cols) = matrix.dim();
        if rows != cols {
            return Err(Error::LengthMismatch {
                left: rows,
                right: cols,
            });
        }
        if rows == 0 {
            return Err(Error::LengthMismatch { left: 0, right: 1 });
        }
        Ok(Self { matrix })
    }

    pub fn identity(n_max: usize) -> Self {
        Self {
            matrix: Array2::eye(n_max + 1),
        }
    }

    pub fn zeros(n_max: usize) -> Self {
        Self {
            matrix: Array2::zeros((n_max + 1, n_max + 1)),
        }
    }

    pub fn diagonal(entries: impl IntoIterator<Item = Complex64>) -> Self {
        let entries: Vec<Complex64> = entries.into_iter().collect();
        Self {
            matrix: Array2::from_diag(&Array1::from(entries)),
        }
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    pub fn n_max(&self) -> usize {
        self.matrix.nrows() - 1
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[[row, col]]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.t().mapv(|c| c.conj()),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            matrix: self.matrix.mapv(|c| c * factor),
        }
    }

    pub fn dot(&self, other: &Operator) -> Result<Self> {
        self.check_dim(other.dim())?;
        Ok(Self {
            matrix: self.matrix.dot(&other.matrix),
        })
    }

    /// self·other − other·self.
    pub fn commutator(&self, other: &Operator) -> Result<Self> {
        Ok(&self.dot(other)? - &other.dot(self)?)
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        self.check_dim(state.dim())?;
        StateVector::new(self.matrix.dot(state.coeffs()), state.time())
    }

    /// Largest entrywise deviation from Hermiticity, max |A_ij − conj(A_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.matrix[[i, j]] - self.matrix[[j, i]].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_defect() == 0.0
    }

    /// Largest entrywise distance to another operator of the same size.
    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok(self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            });
        }
        Ok(())
    }
}

impl Add for &Operator {
    type Output = Operator;

    /// Panics on a size mismatch, like ndarray's own arithmetic.
    fn add(self, rhs: &Operator) -> Operator {
        Operator {
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        Operator {
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

impl Mul<f64> for &Operator {
    type Output = Operator;

    fn mul(self, rhs: f64) -> Operator {
        Operator {
            matrix: self.matrix.mapv(|c| c * rhs),
        }
    }
}

/// Annihilation and creation matrices, a[n−1, n] = √n and a⁺ = a†.
pub fn make_ladder(n_max: usize) -> (Operator, Operator) {
    let mut a = Array2::<Complex64>::zeros((n_max + 1, n_max + 1));
    for n in 1..=n_max {
        a[[n - 1, n]] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    let a = Operator { matrix: a };
    let a_dagger = a.adjoint();
    (a, a_dagger)
}

/// Position and momentum matrices: X = √(ħ/2Mω)(a⁺ + a), P = i√(Mħω/2)(a⁺ − a).
pub fn make_xp(params: &OscillatorParams, n_max: usize) -> (Operator, Operator) {
    let (a, a_dagger) = make_ladder(n_max);
    let x = &(&a_dagger + &a) * params.x_scale();
    let p = (&a_dagger - &a).scale(Complex64::new(0.0, params.p_scale()));
    (x, p)
}

/// H = ħω(a⁺a + 1/2), diagonal in the Fock basis.
pub fn make_hamiltonian(params: &OscillatorParams, n_max: usize) -> Operator {
    Operator::diagonal((0..=n_max).map(|n| Complex64::new(params.level_energy(n), 0.0)))
}

/// Number operator a⁺a = diag(0, 1, .., n_max).
pub fn make_number(n_max: usize) -> Operator {
    Operator::diagonal((0..=n_max).map(|n| Complex64::new(n as f64, 0.0)))
}

/// The basis vector |n⟩ at time zero.
pub fn fock_state(n: usize, n_max: usize) -> Result<StateVector> {
    if n > n_max {
        return Err(Error::OutOfRange { n, n_max });
    }
    let mut coeffs = Array1::zeros(n_max + 1);
    coeffs[n] = Complex64::new(1.0, 0.0);
    StateVector::new(coeffs, 0.0)
}

/// ⟨state|op|state⟩. Normalization is the caller's business.
pub fn expectation(op: &Operator, state: &StateVector) -> Result<Complex64> {
    if op.dim() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            found: state.dim(),
        });
    }
    let c = state.coeffs();
    let m = op.matrix();
    let mut total = Complex64::new(0.0, 0.0);
    for (i, ci) in c.iter().enumerate() {
        if *ci == Complex64::new(0.0, 0.0) {
            continue;
        }
        let row: Complex64 = m
            .row(i)
            .iter()
            .zip(c.iter())
            .map(|(mij, cj)| mij * cj)
            .sum();
        total += ci.conj() * row;
    }
    Ok(total)
}
