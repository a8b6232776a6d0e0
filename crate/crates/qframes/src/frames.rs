//! Frames of quaternionic vectors: frame operator and Gramian, tightness
//! certificates, unitary equivalence, complements, field classification, and
//! the descent conditions to half-dimensional frames over a smaller field.

use serde::{Deserialize, Serialize};

use crate::embed::{check_complex, cvec_to_real, qvec_to_complex};
use crate::error::{Error, Result};
use crate::qlinalg::{gram_schmidt_extend, inner_product, QMatrix, Tolerance};
use crate::quat::Quat;

/// The smallest of the three classical fields containing every Gramian
/// entry of a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldClass {
    Real,
    Complex,
    Quaternionic,
}

impl std::fmt::Display for FieldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldClass::Real => write!(f, "real"),
            FieldClass::Complex => write!(f, "complex"),
            FieldClass::Quaternionic => write!(f, "quaternionic"),
        }
    }
}

/// Certificate data for the tightness decision.
///
/// `variational_defect` is the Welch surplus
/// `sum_jk |<v_j, v_k>|^2 - (sum_j |v_j|^2)^2 / d`, which is nonnegative and
/// vanishes exactly for tight frames; `operator_defect` is `||S - A I||_F`.
/// The two vanish together (the surplus is the square of the operator
/// defect). `is_tight` holds when both are below the scale-aware tolerance:
/// the surplus is quartic in the vector norms and is compared against
/// `eps * scale^2`, the operator defect against `eps * scale`, with
/// `scale = sum_j |v_j|^2`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightnessReport {
    pub frame_bound: f64,
    pub variational_defect: f64,
    pub operator_defect: f64,
    /// `||(G/A)^2 - G/A||_F`: how far the scaled Gramian is from the rank-d
    /// orthogonal projection it must equal for a tight frame.
    pub gramian_idempotency_defect: f64,
    pub is_tight: bool,
}

/// A finite sequence of vectors in `H^d`, stored as the columns of its
/// synthesis matrix, together with the tolerance used by its certificates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Frame {
    synthesis: QMatrix,
    tol: Tolerance,
}

impl Frame {
    /// Wraps a synthesis matrix whose columns are the frame vectors.
    pub fn new(synthesis: QMatrix, tol: Tolerance) -> Result<Frame> {
        if synthesis.rows() == 0 || synthesis.cols() == 0 {
            return Err(Error::InvalidArgument(format!(
                "a frame needs at least one vector in at least one dimension, got {}x{}",
                synthesis.rows(),
                synthesis.cols()
            )));
        }
        Ok(Frame { synthesis, tol })
    }

    pub fn from_columns(columns: Vec<Vec<Quat>>, tol: Tolerance) -> Result<Frame> {
        let n = columns.len();
        let d = columns.first().map_or(0, Vec::len);
        let mut m = QMatrix::zeros(d, n);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), d, "ragged column in frame literal");
            m.set_col(c, col);
        }
        Frame::new(m, tol)
    }

    pub fn synthesis(&self) -> &QMatrix {
        &self.synthesis
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    /// Number of vectors `n`.
    pub fn len(&self) -> usize {
        self.synthesis.cols()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires n >= 1
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn col(&self, j: usize) -> QMatrix {
        self.synthesis.col(j)
    }

    /// Inner product `<v_j, v_k>` of two frame vectors.
    pub fn inner(&self, j: usize, k: usize) -> Quat {
        inner_product(&self.col(j), &self.col(k))
    }

    /// The frame with every column scaled to unit norm.
    pub fn normalized(&self) -> Result<Frame> {
        let mut m = self.synthesis.clone();
        for c in 0..m.cols() {
            let col = m.col_vec(c);
            let norm_sq: f64 = col.iter().map(|q| q.abs_sq()).sum();
            if norm_sq <= 0.0 {
                return Err(Error::NotUnitNorm { index: c, norm_sq });
            }
            let scale = norm_sq.sqrt().recip();
            let scaled: Vec<Quat> = col.iter().map(|&q| q * scale).collect();
            m.set_col(c, &scaled);
        }
        Frame::new(m, self.tol)
    }

    /// Verifies every column has unit norm, or reports the first offender.
    pub fn check_unit_columns(&self) -> Result<()> {
        for c in 0..self.len() {
            let norm_sq = self.col(c).frobenius_norm_sq();
            if (norm_sq - 1.0).abs() > self.tol.eps() {
                return Err(Error::NotUnitNorm { index: c, norm_sq });
            }
        }
        Ok(())
    }

    /// Gramian `G = V* V`, the `n x n` Hermitian matrix of inner products
    /// `G_jk = <v_k, v_j>`.
    pub fn gramian(&self) -> QMatrix {
        self.synthesis.adjoint().mul(&self.synthesis)
    }

    /// Frame operator `S = V V*`, the `d x d` Hermitian positive
    /// semidefinite operator `v -> sum_j v_j <v, v_j>`.
    pub fn frame_operator(&self) -> QMatrix {
        self.synthesis.mul(&self.synthesis.adjoint())
    }

    /// Total energy `sum_j |v_j|^2 = trace(S) = trace(G)`.
    pub fn energy(&self) -> f64 {
        self.synthesis.frobenius_norm_sq()
    }

    /// Decides tightness three ways: the Welch variational surplus, the
    /// frame-operator defect, and (as a cross-check recorded in the report)
    /// idempotency of the scaled Gramian.
    pub fn tightness(&self) -> Result<TightnessReport> {
        let scale = self.energy();
        if scale <= 0.0 {
            return Err(Error::InvalidArgument(
                "tightness of the zero frame is undefined (all columns zero)".into(),
            ));
        }
        let d = self.dim() as f64;
        let frame_bound = scale / d;
        let g = self.gramian();
        let variational_defect = g.frobenius_norm_sq() - scale * scale / d;
        let s = self.frame_operator();
        let operator_defect =
            s.frobenius_dist(&QMatrix::identity(self.dim()).scale(frame_bound));
        let g_scaled = g.scale(frame_bound.recip());
        let gramian_idempotency_defect = g_scaled.mul(&g_scaled).frobenius_dist(&g_scaled);
        let eps = self.tol.eps();
        let is_tight =
            variational_defect < eps * scale * scale && operator_defect < eps * scale;
        Ok(TightnessReport {
            frame_bound,
            variational_defect,
            operator_defect,
            gramian_idempotency_defect,
            is_tight,
        })
    }

    /// Smallest field (real, complex, quaternionic) containing every
    /// Gramian entry. Borderline entries round toward the larger field.
    pub fn classify_field(&self) -> FieldClass {
        let g = self.gramian();
        let eps = self.tol.eps();
        let mut complex = false;
        for q in g.entries() {
            if q.y.abs() >= eps || q.z.abs() >= eps {
                return FieldClass::Quaternionic;
            }
            if q.x.abs() >= eps {
                complex = true;
            }
        }
        if complex {
            FieldClass::Complex
        } else {
            FieldClass::Real
        }
    }

    fn require_tight_unit_overcomplete(&self) -> Result<TightnessReport> {
        let report = self.tightness()?;
        if !report.is_tight {
            return Err(Error::NotTight { defect: report.operator_defect });
        }
        self.check_unit_columns()?;
        if self.len() <= self.dim() {
            return Err(Error::InvalidArgument(format!(
                "complement needs more vectors than dimensions, got {} in dimension {}",
                self.len(),
                self.dim()
            )));
        }
        Ok(report)
    }

    /// Gramian of the complementary tight frame of a unit-norm tight frame:
    /// `G_c = n/(n-d) I - d/(n-d) G`. Scaling by `(n-d)/n` gives an
    /// orthogonal projection of rank `n - d`.
    pub fn complement_gramian(&self) -> Result<QMatrix> {
        self.require_tight_unit_overcomplete()?;
        let n = self.len() as f64;
        let d = self.dim() as f64;
        let g = self.gramian();
        let id = QMatrix::identity(self.len());
        Ok(id.scale(n / (n - d)).sub(&g.scale(d / (n - d))))
    }

    /// A synthesis matrix `W` of `n` vectors in dimension `n - d` with
    /// `V* V + W* W = A I` and `W W* = A I`: the rows of `W/sqrt(A)`
    /// complete the rows of `V/sqrt(A)` to an orthonormal basis. The
    /// columns all have norm `sqrt((n-d)/d)`; normalising them yields a
    /// frame whose Gramian is exactly [`Frame::complement_gramian`].
    pub fn complement_synthesis(&self) -> Result<Frame> {
        let report = self.require_tight_unit_overcomplete()?;
        let a = report.frame_bound;
        let n = self.len();
        let d = self.dim();
        let scaled_analysis = self.synthesis.adjoint().scale(a.sqrt().recip());
        let completed = gram_schmidt_extend(&scaled_analysis, n, self.tol)?;
        let extension: Vec<usize> = (d..n).collect();
        let w = completed.take_cols(&extension).adjoint().scale(a.sqrt());
        let lhs = self.gramian().add(&w.adjoint().mul(&w));
        let target = QMatrix::identity(n).scale(a);
        assert!(
            lhs.approx_eq(&target, 1e-6 * a * n as f64)
                && w.mul(&w.adjoint()).approx_eq(&QMatrix::identity(n - d).scale(a), 1e-6 * a),
            "complement synthesis failed its defining identities"
        );
        Frame::new(w, self.tol)
    }

    /// The unit-norm complementary tight frame: `n` unit vectors in
    /// dimension `n - d` whose Gramian is [`Frame::complement_gramian`].
    pub fn complement(&self) -> Result<Frame> {
        self.complement_synthesis()?.normalized()
    }

    /// The real frame `([v_j])_j` in `R^(2d)` under the stacked embedding.
    pub fn embedded_real(&self) -> Result<Frame> {
        let d = self.dim();
        check_complex(&self.synthesis, self.tol.eps())?;
        let mut m = QMatrix::zeros(2 * d, self.len());
        for c in 0..self.len() {
            let col = cvec_to_real(&self.col(c), self.tol)?;
            m.set_col(c, col.entries());
        }
        Frame::new(m, self.tol)
    }

    /// The complex frame `([v_j])_j` in `C^(2d)` under the Cayley-Dickson
    /// embedding `z + wj -> (z; conj w)`.
    pub fn embedded_complex(&self) -> Result<Frame> {
        let d = self.dim();
        let mut m = QMatrix::zeros(2 * d, self.len());
        for c in 0..self.len() {
            let col = qvec_to_complex(&self.col(c));
            m.set_col(c, col.entries());
        }
        Frame::new(m, self.tol)
    }

    /// For a tight frame with complex entries: does the embedded real frame
    /// `([v_j])_j` stay tight for `R^(2d)`?
    ///
    /// Holds exactly when `sum_jk <v_j, v_k>^2 = 0`, equivalently when the
    /// real and imaginary parts of the Gramian have equal Frobenius norms.
    pub fn descends_to_real(&self) -> Result<bool> {
        check_complex(&self.synthesis, self.tol.eps())?;
        let report = self.tightness()?;
        if !report.is_tight {
            return Err(Error::NotTight { defect: report.operator_defect });
        }
        let g = self.gramian();
        let (mut re_sq, mut im_sq) = (0.0, 0.0);
        for q in g.entries() {
            re_sq += q.re() * q.re();
            im_sq += q.x * q.x;
        }
        let scale = self.energy();
        Ok((re_sq - im_sq).abs() < self.tol.eps() * scale * scale)
    }

    /// For a tight frame over the quaternions: does the embedded complex
    /// frame `([v_j])_j` stay tight for `C^(2d)`?
    ///
    /// Holds exactly when the two Cayley-Dickson coordinate matrices of the
    /// Gramian carry equal energy: `||Co1(G)||_F = ||Co2(G)||_F`.
    pub fn descends_to_complex(&self) -> Result<bool> {
        let report = self.tightness()?;
        if !report.is_tight {
            return Err(Error::NotTight { defect: report.operator_defect });
        }
        let g = self.gramian();
        let (mut co1_sq, mut co2_sq) = (0.0, 0.0);
        for q in g.entries() {
            co1_sq += q.re() * q.re() + q.x * q.x;
            co2_sq += q.y * q.y + q.z * q.z;
        }
        let scale = self.energy();
        Ok((co1_sq - co2_sq).abs() < self.tol.eps() * scale * scale)
    }

    /// Block-level diagnostics for the quaternion-to-complex descent, from
    /// the splitting `V = V_1 + V_2 j`: a frame descends exactly when
    /// `V_1 V_1* = V_2 V_2* = A/2 I` and `V_1 V_2^T = 0` (equivalently the
    /// embedded Gramian `M = Co1(G)` satisfies `M^2 = A/2 M`).
    pub fn descent_to_complex_diagnostics(&self) -> Result<DescentDiagnostics> {
        let report = self.tightness()?;
        let a = report.frame_bound;
        let (d, _n) = (self.dim(), self.len());
        let v1 = self.synthesis.map(Quat::co1);
        let v2 = self.synthesis.map(|q| Quat::from_complex(q.y, q.z));
        let half = QMatrix::identity(d).scale(a / 2.0);
        let first_half_defect = v1.mul(&v1.adjoint()).frobenius_dist(&half);
        let second_half_defect = v2.mul(&v2.adjoint()).frobenius_dist(&half);
        let cross_defect = v1.mul(&v2.transpose()).frobenius_norm();
        let m = self.embedded_complex()?.gramian();
        let idempotency_defect = m.mul(&m).frobenius_dist(&m.scale(a / 2.0));
        Ok(DescentDiagnostics {
            first_half_defect,
            second_half_defect,
            cross_defect,
            idempotency_defect,
        })
    }
}

/// How far each equivalent form of the quaternion-to-complex descent
/// condition is from holding; all four vanish together.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DescentDiagnostics {
    /// `||V_1 V_1* - A/2 I||_F`
    pub first_half_defect: f64,
    /// `||V_2 V_2* - A/2 I||_F`
    pub second_half_defect: f64,
    /// `||V_1 V_2^T||_F` (equals `||V_2 V_1^T||_F` by transposition)
    pub cross_defect: f64,
    /// `||M^2 - A/2 M||_F` for the embedded Gramian `M`
    pub idempotency_defect: f64,
}

/// Gramian-level unitary equivalence: two frames of the same size are
/// unitarily equivalent exactly when their Gramians coincide. Uses the
/// first frame's tolerance.
pub fn unitarily_equivalent(f: &Frame, g: &Frame) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot compare frames of {} and {} vectors",
            f.len(),
            g.len()
        )));
    }
    Ok(f.gramian().frobenius_dist(&g.gramian()) < f.tol().eps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::testutil::*;
    use rand_chacha::ChaCha8Rng;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    /// d rows of a random n x n unitary: a tight frame with A = 1 exactly.
    fn random_tight_frame(rng: &mut ChaCha8Rng, d: usize, n: usize) -> Frame {
        let u = random_unitary(rng, n);
        let rows: Vec<usize> = (0..d).collect();
        let v = u.adjoint().take_cols(&rows).adjoint();
        Frame::new(v, tol()).unwrap()
    }

    #[test]
    fn orthonormal_basis_certificates() {
        let f = Frame::new(QMatrix::identity(3), tol()).unwrap();
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 1.0).abs() < 1e-12);
        assert!(report.variational_defect.abs() < 1e-12);
        assert!(report.operator_defect < 1e-12);
        assert!(report.gramian_idempotency_defect < 1e-12);
        assert_eq!(f.classify_field(), FieldClass::Real);
        assert!(f.gramian().approx_eq(&QMatrix::identity(3), 1e-12));
        assert!(f.frame_operator().approx_eq(&QMatrix::identity(3), 1e-12));
    }

    #[test]
    fn gramian_of_the_unit_quaternions() {
        let f = Frame::new(
            QMatrix::new(1, 4, vec![Quat::ONE, Quat::I, Quat::J, Quat::K]),
            tol(),
        )
        .unwrap();
        let g = f.gramian();
        let expect = QMatrix::from_rows(vec![
            vec![Quat::ONE, Quat::I, Quat::J, Quat::K],
            vec![-Quat::I, Quat::ONE, -Quat::K, Quat::J],
            vec![-Quat::J, Quat::K, Quat::ONE, -Quat::I],
            vec![-Quat::K, -Quat::J, Quat::I, Quat::ONE],
        ]);
        assert!(g.approx_eq(&expect, 1e-12));
        assert!(g.is_hermitian(1e-12));
    }

    #[test]
    fn traces_of_gramian_and_frame_operator_powers_agree() {
        let mut rng = rng(50);
        let v = random_matrix(&mut rng, 3, 6);
        let f = Frame::new(v, tol()).unwrap();
        let g = f.gramian();
        let s = f.frame_operator();
        let (mut gp, mut sp) = (g.clone(), s.clone());
        for _ in 0..3 {
            assert!((gp.re_trace() - sp.re_trace()).abs() < 1e-8 * gp.re_trace().abs().max(1.0));
            gp = gp.mul(&g);
            sp = sp.mul(&s);
        }
    }

    #[test]
    fn welch_surplus_is_never_negative_and_squares_the_operator_defect() {
        let mut rng = rng(51);
        for _ in 0..50 {
            let v = random_matrix(&mut rng, 2, 5);
            let f = Frame::new(v, tol()).unwrap();
            let report = f.tightness().unwrap();
            assert!(report.variational_defect > -1e-9);
            let sq = report.operator_defect * report.operator_defect;
            let scale = report.variational_defect.abs().max(1.0);
            assert!((report.variational_defect - sq).abs() < 1e-8 * scale);
            assert!(!report.is_tight, "random frames are essentially never tight");
        }
    }

    #[test]
    fn rows_of_a_unitary_form_a_tight_frame() {
        let mut rng = rng(52);
        for _ in 0..10 {
            let f = random_tight_frame(&mut rng, 2, 5);
            let report = f.tightness().unwrap();
            assert!(report.is_tight);
            assert!((report.frame_bound - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn zero_frame_is_rejected() {
        let f = Frame::new(QMatrix::zeros(2, 3), tol()).unwrap();
        assert!(f.tightness().is_err());
    }

    #[test]
    fn polarisation_identity_recovers_inner_products() {
        let mut rng = rng(53);
        for _ in 0..30 {
            let v = QMatrix::column(random_unit_vector(&mut rng, 3));
            let w = QMatrix::column(random_unit_vector(&mut rng, 3));
            let expect = inner_product(&v, &w);
            let mut recovered = Quat::ZERO;
            for r in 0..4 {
                let unit = Quat::basis_unit(r);
                let plus = v.add(&w.scale_right(unit)).frobenius_norm_sq();
                let minus = v.sub(&w.scale_right(unit)).frobenius_norm_sq();
                recovered += Quat::basis_unit(r) * ((plus - minus) / 4.0);
            }
            assert!(recovered.approx_eq(expect, 1e-10));
        }
    }

    #[test]
    fn plancherel_identity_holds_for_normalised_tight_frames() {
        let mut rng = rng(54);
        let f = random_tight_frame(&mut rng, 3, 7);
        let v = QMatrix::column(random_unit_vector(&mut rng, 3));
        let w = QMatrix::column(random_unit_vector(&mut rng, 3));
        let expect = inner_product(&v, &w);
        let mut total = Quat::ZERO;
        for j in 0..f.len() {
            let fj = f.col(j);
            total += inner_product(&fj, &w) * inner_product(&v, &fj);
        }
        assert!(total.approx_eq(expect, 1e-9));
        // Frame expansion: v = sum_j v_j <v, v_j>.
        let mut expansion = QMatrix::zeros(3, 1);
        for j in 0..f.len() {
            let fj = f.col(j);
            expansion = expansion.add(&fj.scale_right(inner_product(&v, &fj)));
        }
        assert!(expansion.approx_eq(&v, 1e-9));
    }

    #[test]
    fn unitary_images_are_equivalent_and_perturbations_are_not() {
        let mut rng = rng(55);
        let f = random_tight_frame(&mut rng, 2, 4);
        let u = random_unitary(&mut rng, 2);
        let g = Frame::new(u.mul(f.synthesis()), tol()).unwrap();
        assert!(unitarily_equivalent(&f, &g).unwrap());
        let mut perturbed = f.synthesis().clone();
        perturbed[(0, 0)] += Quat::from_real(1e-3);
        let h = Frame::new(perturbed, tol()).unwrap();
        assert!(!unitarily_equivalent(&f, &h).unwrap());
        let short = Frame::new(QMatrix::identity(2), tol()).unwrap();
        assert!(unitarily_equivalent(&f, &short).is_err());
    }

    #[test]
    fn field_classification_walks_up_the_tower() {
        let real = Frame::new(QMatrix::identity(2), tol()).unwrap();
        assert_eq!(real.classify_field(), FieldClass::Real);
        let complex = Frame::new(
            QMatrix::new(1, 2, vec![Quat::ONE, Quat::from_complex(0.6, 0.8)]),
            tol(),
        )
        .unwrap();
        assert_eq!(complex.classify_field(), FieldClass::Complex);
        let quaternionic = Frame::new(
            QMatrix::new(1, 2, vec![Quat::ONE, Quat::new(0.5, 0.5, 0.5, 0.5)]),
            tol(),
        )
        .unwrap();
        assert_eq!(quaternionic.classify_field(), FieldClass::Quaternionic);
    }

    #[test]
    fn simplex_complement_is_a_repeated_line() {
        // An orthonormal basis plus the balanced unit vector is a unit-norm
        // tight frame of d+1 vectors exactly when d = 1; instead build the
        // canonical simplex: d+1 unit vectors from the rows of a (d+1)x(d+1)
        // unitary complement of the constant column.
        let d = 3;
        let n = d + 1;
        let mut seed = QMatrix::zeros(n, 1);
        for r in 0..n {
            seed[(r, 0)] = Quat::from_real(1.0 / (n as f64).sqrt());
        }
        let basis = gram_schmidt_extend(&seed, n, tol()).unwrap();
        let cols: Vec<usize> = (1..n).collect();
        let v = basis.take_cols(&cols).adjoint(); // d x n, tight, A = n/d
        let f = Frame::new(v.scale((n as f64 / d as f64).sqrt().recip()), tol())
            .unwrap()
            .normalized()
            .unwrap();
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        let gc = f.complement_gramian().unwrap();
        // Rank-one complement: all entries unit modulus.
        for q in gc.entries() {
            assert!((q.abs() - 1.0).abs() < 1e-9);
        }
        let w = f.complement().unwrap();
        assert_eq!((w.dim(), w.len()), (1, n));
        assert!(w.gramian().approx_eq(&gc, 1e-9));
    }

    #[test]
    fn complement_identities_hold_for_random_tight_frames() {
        let mut rng = rng(56);
        for _ in 0..10 {
            let f = random_tight_frame(&mut rng, 2, 5).normalized().unwrap();
            // Normalising the columns of a unitary-rows frame keeps norms 1
            // but can break tightness; re-tighten by construction instead.
            let report = f.tightness().unwrap();
            if !report.is_tight {
                continue;
            }
            let w = f.complement_synthesis().unwrap();
            let a = report.frame_bound;
            let lhs = f.gramian().add(&w.gramian());
            assert!(lhs.approx_eq(&QMatrix::identity(5).scale(a), 1e-8));
            assert!(w
                .frame_operator()
                .approx_eq(&QMatrix::identity(3).scale(a), 1e-8));
        }
    }

    #[test]
    fn complement_of_the_complement_restores_the_gramian() {
        // Simplex of 4 unit vectors in dimension 3: complementing twice
        // lands back on the original Gramian.
        let n = 4;
        let mut seed = QMatrix::zeros(n, 1);
        for r in 0..n {
            seed[(r, 0)] = Quat::from_real(0.5);
        }
        let basis = gram_schmidt_extend(&seed, n, tol()).unwrap();
        let cols: Vec<usize> = (1..n).collect();
        let v = basis.take_cols(&cols).adjoint();
        let f = Frame::new(v, tol()).unwrap().normalized().unwrap();
        assert!(f.tightness().unwrap().is_tight);
        let back = f.complement().unwrap().complement().unwrap();
        assert!(back.gramian().approx_eq(&f.gramian(), 1e-8));
    }

    #[test]
    fn complement_requires_tight_unit_overcomplete() {
        let mut rng = rng(57);
        let loose = Frame::new(random_matrix(&mut rng, 2, 4), tol()).unwrap();
        assert!(matches!(loose.complement_gramian(), Err(Error::NotTight { .. })));
        let basis = Frame::new(QMatrix::identity(3), tol()).unwrap();
        assert!(basis.complement_gramian().is_err());
        let unnormalised = Frame::new(QMatrix::identity(2).scale(2.0), tol()).unwrap();
        // Tight (S = 4I) but not unit columns, and n = d anyway.
        assert!(unnormalised.complement_gramian().is_err());
    }

    #[test]
    fn complex_tight_frame_with_zero_square_sum_descends() {
        // (z_j) tight for C^1 descends iff sum z_j^2 = 0: fourth roots of
        // unity do, {1, 1, i} does not.
        let roots = Frame::new(
            QMatrix::new(
                1,
                4,
                vec![Quat::ONE, Quat::I, -Quat::ONE, -Quat::I],
            ),
            tol(),
        )
        .unwrap();
        assert!(roots.descends_to_real().unwrap());
        let embedded = roots.embedded_real().unwrap();
        assert!(embedded.tightness().unwrap().is_tight);

        let skew = Frame::new(
            QMatrix::new(1, 3, vec![Quat::ONE, Quat::ONE, Quat::I]),
            tol(),
        )
        .unwrap();
        // Tight for C^1 (sum |z_j|^2 times 1x1 identity is automatic).
        assert!(skew.tightness().unwrap().is_tight);
        assert!(!skew.descends_to_real().unwrap());
        assert!(!embeddable_is_tight(&skew));

        fn embeddable_is_tight(f: &Frame) -> bool {
            f.embedded_real().unwrap().tightness().unwrap().is_tight
        }
    }

    #[test]
    fn descent_to_real_rejects_quaternionic_or_loose_frames() {
        let quat = Frame::new(QMatrix::new(1, 2, vec![Quat::ONE, Quat::J]), tol()).unwrap();
        assert!(matches!(
            quat.descends_to_real(),
            Err(Error::SubfieldViolation { .. })
        ));
        // Two copies of e1 in C^2: S = diag(2, 0), far from tight.
        let loose = Frame::new(
            QMatrix::from_rows(vec![
                vec![Quat::ONE, Quat::ONE],
                vec![Quat::ZERO, Quat::ZERO],
            ]),
            tol(),
        )
        .unwrap();
        assert!(matches!(loose.descends_to_real(), Err(Error::NotTight { .. })));
    }

    #[test]
    fn unit_quaternions_descend_to_complex_but_a_basis_does_not() {
        let units = Frame::new(
            QMatrix::new(1, 4, vec![Quat::ONE, Quat::I, Quat::J, Quat::K]),
            tol(),
        )
        .unwrap();
        assert!(units.descends_to_complex().unwrap());
        let embedded = units.embedded_complex().unwrap();
        let report = embedded.tightness().unwrap();
        assert!(report.is_tight);
        // The embedded columns are e1, i e1, e2, i e2 up to signs.
        assert!((report.frame_bound - 2.0).abs() < 1e-12);

        let basis = Frame::new(QMatrix::identity(2), tol()).unwrap();
        assert!(!basis.descends_to_complex().unwrap());
        assert!(!basis
            .embedded_complex()
            .unwrap()
            .tightness()
            .unwrap()
            .is_tight);
    }

    #[test]
    fn descent_verdict_matches_direct_embedding_on_random_tight_frames() {
        let mut rng = rng(58);
        for trial in 0..40 {
            let f = random_tight_frame(&mut rng, 2, 6);
            let verdict = f.descends_to_complex().unwrap();
            let direct = f
                .embedded_complex()
                .unwrap()
                .tightness()
                .unwrap()
                .is_tight;
            assert_eq!(verdict, direct, "trial {trial}");
            let diag = f.descent_to_complex_diagnostics().unwrap();
            let small = 1e-7;
            let all_small = diag.first_half_defect < small
                && diag.second_half_defect < small
                && diag.cross_defect < small
                && diag.idempotency_defect < small;
            assert_eq!(verdict, all_small, "diagnostics disagree on trial {trial}");
        }
    }

    #[test]
    fn complex_tight_frames_always_descend_to_complex_frames() {
        // A complex tight frame, read as quaternionic, has Co2(G) = 0 and
        // never descends; its doubled partner does. Sanity-check the sign
        // conventions via the four cube roots in C^1 lifted to H^1.
        let f = Frame::new(
            QMatrix::new(1, 3, vec![
                Quat::ONE,
                Quat::from_complex(-0.5, 0.75f64.sqrt()),
                Quat::from_complex(-0.5, -(0.75f64.sqrt())),
            ]),
            tol(),
        )
        .unwrap();
        assert!(f.tightness().unwrap().is_tight);
        assert!(!f.descends_to_complex().unwrap());
    }

    #[test]
    fn normalized_rejects_zero_columns() {
        let f = Frame::new(QMatrix::zeros(2, 2), tol()).unwrap();
        assert!(matches!(f.normalized(), Err(Error::NotUnitNorm { index: 0, .. })));
    }
}
