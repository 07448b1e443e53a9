//! Generalized Weyl operators over `Z_n x D_n`, admissible vacuum vectors,
//! and the n coherent-state families of both kinematics.
//!
//! The Weyl operator attached to a label `(a, g)` is the phase diagonal
//! `exp((2 pi i a / n) Q)` composed with the representation matrix `V(g)`.
//! Acting with all 2n^2 of them on an admissible vacuum produces an
//! overcomplete family: the sum of the rank-one projectors onto the states
//! resolves the identity as `2n * I`, with the rotation-only and mirror-only
//! partial sums each contributing `n * I`.
//!
//! Admissible vacua are the unit eigenvectors of the annihilation analogue
//! `exp((2 pi / n) Q) * U`, where `U` is the one-step rotation unitary
//! obtained as the spectral exponential of the momentum operator. There are n
//! of them, labeled by `k`, with components
//!
//! ```text
//! g_j^(k) = A_n * exp(pi j (j - n + 2) / n) * exp(-2 pi i j k / n)
//! ```
//!
//! and eigenvalues `exp(pi (n-1)/n) exp(2 pi i k / n)`.
//!
//! Restricted to rotation labels the Weyl operators close projectively; on
//! mirror labels the commutation multiplier between the phase diagonal and
//! the parity exponential varies from column to column, so no projective
//! representation of the full label set exists. [`commutation_defect`] makes
//! that failure quantitative.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::dihedral::{enumerate_group, DihedralElement, ElementKind};
use crate::kinematics::{
    mirror_spectral_data, momentum_exponential, parity_generator, rep_closed_form, RepLabel,
};
use crate::linalg::{
    inner, lagrange_sylvester, root_of_unity, sum_outer_products, ComplexMatrix, ComplexVector,
    SpectralData,
};
use crate::{Error, Result};

/// Label `(a, g)` of a generalized Weyl operator, tied to one of the two
/// kinematics. The label set has cardinality 2n^2 per representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylLabel {
    a: usize,
    g: DihedralElement,
    rep: RepLabel,
}

impl WeylLabel {
    pub fn new(a: usize, g: DihedralElement, rep: RepLabel) -> Result<Self> {
        if a >= g.order() {
            return Err(Error::IndexOutOfRange {
                index: a,
                order: g.order(),
            });
        }
        Ok(Self { a, g, rep })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn g(&self) -> DihedralElement {
        self.g
    }

    pub fn rep(&self) -> RepLabel {
        self.rep
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }
}

/// Diagonal phase operator `exp((2 pi i a / n) Q) = diag(1, w^a, ..., w^{a(n-1)})`
/// with `w = exp(2 pi i / n)`.
pub fn position_phase(n: usize, a: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, order: n });
    }
    Ok(Array2::from_diag(&Array1::from_iter(
        (0..n).map(|j| root_of_unity(n, (a * j) as i64)),
    )))
}

/// Generalized Weyl operator `W(a, g) = exp((2 pi i a / n) Q) V(g)`; unitary.
pub fn weyl_operator(label: &WeylLabel) -> Result<ComplexMatrix> {
    let n = label.order();
    let phase = position_phase(n, label.a)?;
    Ok(phase.dot(&rep_closed_form(label.rep, &label.g)))
}

/// Phase of the projective closure `W(l1) W(l2) = phase * W(l1 + l2)` when it
/// exists: returns `Some(phase)` if the product equals the Weyl operator of
/// the combined label `(a1 + a2, g1 g2)` up to one constant unimodular
/// scalar (within `tol` across the support), `None` otherwise. Rotation-only
/// labels always close; labels involving mirrors generally do not.
pub fn weyl_product_phase(
    l1: &WeylLabel,
    l2: &WeylLabel,
    tol: f64,
) -> Result<Option<Complex64>> {
    if l1.rep != l2.rep {
        return Err(Error::LabelMismatch(format!(
            "representations differ: {} vs {}",
            l1.rep, l2.rep
        )));
    }
    let n = l1.order();
    let product = weyl_operator(l1)?.dot(&weyl_operator(l2)?);
    let combined = WeylLabel::new((l1.a + l2.a) % n, l1.g.multiply(&l2.g)?, l1.rep)?;
    let target = weyl_operator(&combined)?;

    let mut phase: Option<Complex64> = None;
    for (p, t) in product.iter().zip(target.iter()) {
        if t.norm() < 0.5 {
            continue;
        }
        let ratio = p / t;
        match phase {
            None => phase = Some(ratio),
            Some(ph) if (ratio - ph).norm() <= tol => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(phase)
}

/// Multiplier matrix of the phase diagonal against the spectrally
/// reconstructed group exponential: entry `(j, k)` is the ratio
/// `(D_a U)_jk / (U D_a)_jk` on the support of `U` and 0 elsewhere, where
/// `D_a = exp((2 pi i a / n) Q)` and `U` is `exp` of the momentum generator
/// of `g` (one-step rotations composed for `R_m`, the parity generator for
/// `M_m`), computed via the Lagrange-Sylvester formula for the first
/// kinematics.
///
/// For rotations the ratio is the constant `exp(2 pi i a m / n)`; for
/// mirrors it is `exp(2 pi i a (m - 2k) / n)`, k-dependent, which is exactly
/// the obstruction to a projective representation over the full label set.
pub fn commutation_defect(n: usize, a: usize, g: &DihedralElement) -> Result<ComplexMatrix> {
    if g.order() != n {
        return Err(Error::OrderMismatch(n, g.order()));
    }
    let u = group_exponential(g)?;
    let d = position_phase(n, a)?;
    let left = d.dot(&u);
    let right = u.dot(&d);
    Ok(Array2::from_shape_fn((n, n), |(j, k)| {
        if u[(j, k)].norm() > 0.5 {
            left[(j, k)] / right[(j, k)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// Spectral exponential recovering `V_1(g)` from its self-adjoint generator:
/// `exp(-i m P)` for `g = R_m` and `exp(-i P_{M_m})` for `g = M_m`. The
/// mirror case goes through the parity generator `(pi/2)(V - I)`, whose
/// eigenprojectors are those of the mirror itself.
fn group_exponential(g: &DihedralElement) -> Result<ComplexMatrix> {
    let n = g.order();
    match g.kind() {
        ElementKind::Rotation => momentum_exponential(n, g.index() as i64),
        ElementKind::Mirror => {
            let generator = parity_generator(RepLabel::V1, n, g.index())?;
            let mirror_data = mirror_spectral_data(RepLabel::V1, n, g.index())?;
            let generator_data = SpectralData::new(
                mirror_data
                    .eigenvalues()
                    .iter()
                    .map(|l| (l - Complex64::new(1.0, 0.0)) * (PI / 2.0))
                    .collect(),
                mirror_data.multiplicities().to_vec(),
                mirror_data.projectors().to_vec(),
            )?;
            let f = |_, z: Complex64| Some((Complex64::new(0.0, -1.0) * z).exp());
            lagrange_sylvester(&f, &generator_data, &generator)
        }
    }
}

/// Normalization constant `A_n = 1 / sqrt(sum_j exp((2 pi / n) j (j - n + 2)))`
/// shared by all n vacua.
pub fn normalization_constant(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let sum: f64 = (0..n as i64)
        .map(|j| (2.0 * PI / n as f64 * (j * (j - n as i64 + 2)) as f64).exp())
        .sum();
    Ok(1.0 / sum.sqrt())
}

/// The k-labeled admissible vacuum `|0>^(k)`, a unit eigenvector of the
/// annihilation analogue. Component j is
/// `A_n exp(pi j (j - n + 2) / n) exp(-2 pi i j k / n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VacuumVector {
    n: usize,
    k: usize,
    components: ComplexVector,
}

impl VacuumVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &ComplexVector {
        &self.components
    }

    /// Component with the index taken mod n, as the shifted coherent-state
    /// formulas require.
    pub fn component_mod(&self, index: i64) -> Complex64 {
        self.components[index.rem_euclid(self.n as i64) as usize]
    }
}

/// Builds the vacuum `|0>^(k)`.
pub fn vacuum(n: usize, k: usize) -> Result<VacuumVector> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    let a_n = normalization_constant(n)?;
    let components = Array1::from_iter((0..n as i64).map(|j| {
        let magnitude = a_n * (PI * (j * (j - n as i64 + 2)) as f64 / n as f64).exp();
        root_of_unity(n, -j * k as i64) * magnitude
    }));
    Ok(VacuumVector { n, k, components })
}

/// Eigenvalue of the annihilation analogue on `|0>^(k)`:
/// `exp(pi (n-1) / n) exp(2 pi i k / n)`.
pub fn vacuum_eigenvalue(n: usize, k: usize) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    Ok(root_of_unity(n, k as i64) * (PI * (n as f64 - 1.0) / n as f64).exp())
}

/// The annihilation analogue `exp((2 pi / n) Q) * U` with `U` the one-step
/// rotation unitary built spectrally from the momentum operator. Its unit
/// eigenvectors are the n admissible vacua, with eigenvalues
/// [`vacuum_eigenvalue`].
pub fn annihilation_analog(n: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let q_scaling = Array2::from_diag(&Array1::from_iter(
        (0..n).map(|j| Complex64::new((2.0 * PI * j as f64 / n as f64).exp(), 0.0)),
    ));
    let shift = momentum_exponential(n, 1)?;
    Ok(q_scaling.dot(&shift))
}

/// A coherent state `|a, g>^(k) = W(a, g) |0>^(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentState {
    label: WeylLabel,
    k: usize,
    components: ComplexVector,
}

impl CoherentState {
    pub fn label(&self) -> &WeylLabel {
        &self.label
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.label.order()
    }

    pub fn components(&self) -> &ComplexVector {
        &self.components
    }
}

/// Coherent state from the closed component formulas: for `g = R_m`
/// component j is `w^{aj} g^(k)_{j-m}`, for `g = M_m` it is
/// `w^{aj} g^(k)_{m-j}` (indices mod n, `w = exp(2 pi i / n)`); mirror states
/// of the second kinematics carry an overall factor -1.
pub fn coherent_state(label: &WeylLabel, k: usize) -> Result<CoherentState> {
    let vac = vacuum(label.order(), k)?;
    coherent_state_with(&vac, label)
}

/// [`coherent_state`] against a prebuilt vacuum, for sweeps constructing many
/// states of the same family.
pub fn coherent_state_with(vac: &VacuumVector, label: &WeylLabel) -> Result<CoherentState> {
    let n = label.order();
    if vac.n() != n {
        return Err(Error::LabelMismatch(format!(
            "vacuum order {} does not match label order {}",
            vac.n(),
            n
        )));
    }
    let m = label.g.index() as i64;
    let sign = match (label.rep, label.g.kind()) {
        (RepLabel::V2, ElementKind::Mirror) => -1.0,
        _ => 1.0,
    };
    let components = Array1::from_iter((0..n as i64).map(|j| {
        let shifted = match label.g.kind() {
            ElementKind::Rotation => vac.component_mod(j - m),
            ElementKind::Mirror => vac.component_mod(m - j),
        };
        root_of_unity(n, label.a as i64 * j) * shifted * sign
    }));
    Ok(CoherentState {
        label: *label,
        k: vac.k(),
        components,
    })
}

/// Coherent state computed the other way, as the explicit matrix-vector
/// product `W(a, g) |0>^(k)`. Used to cross-check [`coherent_state`]; the two
/// paths must agree to machine precision.
pub fn coherent_state_via_weyl(label: &WeylLabel, k: usize) -> Result<CoherentState> {
    let w = weyl_operator(label)?;
    let vac = vacuum(label.order(), k)?;
    Ok(CoherentState {
        label: *label,
        k,
        components: w.dot(vac.components()),
    })
}

/// Which part of the label set a resolution sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelSubset {
    All,
    RotationsOnly,
    MirrorsOnly,
}

/// Sum of the rank-one projectors `|a, g><a, g|` over the chosen label
/// subset, accumulated in the fixed order a-major / group order. The full
/// sum equals `2n * I`; each half contributes `n * I`.
pub fn resolution_sum(
    n: usize,
    k: usize,
    rep: RepLabel,
    subset: LabelSubset,
) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let group = enumerate_group(n)?;
    let vac = vacuum(n, k)?;
    let mut states = Vec::with_capacity(2 * n * n);
    for a in 0..n {
        for g in &group {
            let keep = match subset {
                LabelSubset::All => true,
                LabelSubset::RotationsOnly => g.is_rotation(),
                LabelSubset::MirrorsOnly => g.is_mirror(),
            };
            if keep {
                let label = WeylLabel::new(a, *g, rep)?;
                states.push(coherent_state_with(&vac, &label)?.components().clone());
            }
        }
    }
    Ok(sum_outer_products(n, states.iter()))
}

/// Resolution of unity: the full label-set sum, contractually `2n * I`.
pub fn resolution_of_unity(n: usize, k: usize, rep: RepLabel) -> Result<ComplexMatrix> {
    resolution_sum(n, k, rep, LabelSubset::All)
}

/// Overlap `<s1 | s2>` of two coherent states of the same family (equal n, k
/// and representation), antilinear in the first argument.
pub fn overlap(s1: &CoherentState, s2: &CoherentState) -> Result<Complex64> {
    if s1.n() != s2.n() {
        return Err(Error::LabelMismatch(format!(
            "orders differ: {} vs {}",
            s1.n(),
            s2.n()
        )));
    }
    if s1.k != s2.k {
        return Err(Error::LabelMismatch(format!(
            "vacuum families differ: k={} vs k={}",
            s1.k, s2.k
        )));
    }
    if s1.label.rep() != s2.label.rep() {
        return Err(Error::LabelMismatch(format!(
            "representations differ: {} vs {}",
            s1.label.rep(),
            s2.label.rep()
        )));
    }
    inner(s1.components(), s2.components())
}

/// Overlap from the closed finite sums instead of assembled state vectors:
/// with `x(j) = j - m` for a rotation label `R_m` and `x(j) = m - j` for a
/// mirror label `M_m`,
///
/// ```text
/// <a, g1 | b, g2> = s1 s2 * sum_j w^{j (b - a)} conj(g^(k)_{x1(j)}) g^(k)_{x2(j)},
/// ```
///
/// where the signs `s` are -1 exactly for mirror labels of the second
/// kinematics. Must agree with [`overlap`] on assembled states.
pub fn overlap_formula(l1: &WeylLabel, l2: &WeylLabel, k: usize) -> Result<Complex64> {
    let vac = vacuum(l1.order(), k)?;
    overlap_formula_with(&vac, l1, l2)
}

/// [`overlap_formula`] against a prebuilt vacuum, for sweeps that evaluate
/// many label pairs of the same family.
pub fn overlap_formula_with(
    vac: &VacuumVector,
    l1: &WeylLabel,
    l2: &WeylLabel,
) -> Result<Complex64> {
    if l1.order() != l2.order() {
        return Err(Error::LabelMismatch(format!(
            "orders differ: {} vs {}",
            l1.order(),
            l2.order()
        )));
    }
    if l1.rep != l2.rep {
        return Err(Error::LabelMismatch(format!(
            "representations differ: {} vs {}",
            l1.rep, l2.rep
        )));
    }
    if l1.order() != vac.n() {
        return Err(Error::LabelMismatch(format!(
            "vacuum order {} does not match labels of order {}",
            vac.n(),
            l1.order()
        )));
    }
    let n = l1.order();
    let shift = |label: &WeylLabel, j: i64| -> Complex64 {
        let m = label.g.index() as i64;
        match label.g.kind() {
            ElementKind::Rotation => vac.component_mod(j - m),
            ElementKind::Mirror => vac.component_mod(m - j),
        }
    };
    let sign = |label: &WeylLabel| -> f64 {
        match (label.rep, label.g.kind()) {
            (RepLabel::V2, ElementKind::Mirror) => -1.0,
            _ => 1.0,
        }
    };
    let phase_step = l2.a as i64 - l1.a as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n as i64 {
        sum += root_of_unity(n, phase_step * j) * shift(l1, j).conj() * shift(l2, j);
    }
    Ok(sum * (sign(l1) * sign(l2)))
}

/// Born probability of measuring position eigenvalue j in the state `s`:
/// `|<j | s>|^2`.
pub fn position_probability(j: usize, s: &CoherentState) -> Result<f64> {
    let n = s.n();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, order: n });
    }
    Ok(s.components()[j].norm_sqr())
}

/// Closed-form position probability profile: with `x = (j - m) mod n` for a
/// rotation label `R_m` and `x = (m - j) mod n` for a mirror `M_m`,
/// `A_n^2 exp((2 pi / n) x (x - n + 2))`. Independent of the phase index a,
/// the vacuum family k, and the representation.
pub fn position_probability_formula(n: usize, g: &DihedralElement, j: usize) -> Result<f64> {
    if g.order() != n {
        return Err(Error::OrderMismatch(n, g.order()));
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, order: n });
    }
    let m = g.index() as i64;
    let x = match g.kind() {
        ElementKind::Rotation => (j as i64 - m).rem_euclid(n as i64),
        ElementKind::Mirror => (m - j as i64).rem_euclid(n as i64),
    };
    let a_n = normalization_constant(n)?;
    Ok(a_n * a_n * (2.0 * PI / n as f64 * (x * (x - n as i64 + 2)) as f64).exp())
}
