//! Field-transfer maps: the real picture of a complex vector or matrix, and
//! the complex picture of a quaternionic one.
//!
//! Complex and real values are quaternions whose upper components vanish;
//! there is no separate scalar type. The vector embeddings use the stacked
//! layout: a complex vector goes to (real parts; imaginary parts), and a
//! quaternionic vector `v = z + w j` (entrywise Cayley-Dickson split) goes to
//! `(z; conj(w))`. Under these conventions both maps send matrix products to
//! matrix products and adjoints to adjoints.

use crate::error::{Error, Result};
use crate::qlinalg::{inner_product, QMatrix, Tolerance};
use crate::quat::Quat;

/// Verifies every entry is real: `|x|, |y|, |z| < eps`.
pub fn check_real(m: &QMatrix, eps: f64) -> Result<()> {
    check_subfield(m, eps, "real", Quat::is_real)
}

/// Verifies every entry is complex: `|y|, |z| < eps`.
pub fn check_complex(m: &QMatrix, eps: f64) -> Result<()> {
    check_subfield(m, eps, "complex", Quat::is_complex)
}

fn check_subfield(
    m: &QMatrix,
    eps: f64,
    expected: &'static str,
    ok: impl Fn(Quat, f64) -> bool,
) -> Result<()> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !ok(m[(r, c)], eps) {
                return Err(Error::SubfieldViolation { expected, row: r, col: c });
            }
        }
    }
    Ok(())
}

fn expect_column(v: &QMatrix) {
    assert_eq!(v.cols(), 1, "expected a column vector, got {}x{}", v.rows(), v.cols());
}

/// Embeds a complex vector in `C^d` as the real vector in `R^(2d)` that
/// stacks the real parts over the imaginary parts.
///
/// The map is an isometry onto `R^(2d)`: `Re<u, v> = <[u], [v]>` and
/// `Im<u, v> = <[u], [iv]>`, so in particular `[v]` is orthogonal to `[iv]`.
pub fn cvec_to_real(v: &QMatrix, tol: Tolerance) -> Result<QMatrix> {
    expect_column(v);
    check_complex(v, tol.eps())?;
    let d = v.rows();
    Ok(QMatrix::from_fn(2 * d, 1, |r, _| {
        let q = v[(r % d, 0)];
        Quat::from_real(if r < d { q.re() } else { q.x })
    }))
}

/// Inverse of [`cvec_to_real`]: reads a real vector of even length `2d` as a
/// complex vector in `C^d`. The roundtrip is exact in both directions.
pub fn cvec_from_real(v: &QMatrix, tol: Tolerance) -> Result<QMatrix> {
    expect_column(v);
    check_real(v, tol.eps())?;
    if v.rows() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "a real vector of odd length {} has no complex preimage",
            v.rows()
        )));
    }
    let d = v.rows() / 2;
    Ok(QMatrix::from_fn(d, 1, |r, _| Quat::from_complex(v[(r, 0)].re(), v[(r + d, 0)].re())))
}

/// Embeds a complex `m x n` matrix as the real `2m x 2n` matrix
/// `[[Re A, -Im A], [Im A, Re A]]`, the unique choice compatible with
/// [`cvec_to_real`]: `[Av] = [A][v]`, `[AB] = [A][B]`, `[A*] = [A]^T`.
pub fn cmat_to_real(a: &QMatrix, tol: Tolerance) -> Result<QMatrix> {
    check_complex(a, tol.eps())?;
    let (m, n) = (a.rows(), a.cols());
    Ok(QMatrix::from_fn(2 * m, 2 * n, |r, c| {
        let q = a[(r % m, c % n)];
        let val = match (r < m, c < n) {
            (true, true) | (false, false) => q.re(),
            (true, false) => -q.x,
            (false, true) => q.x,
        };
        Quat::from_real(val)
    }))
}

/// Embeds a quaternionic vector in `H^d` as a complex vector in `C^(2d)`:
/// with the entrywise split `v = z + w j`, the image stacks `z` over
/// `conj(w)`.
///
/// The first Cayley-Dickson component of a quaternionic inner product
/// transfers: `Co1<u, v> = <[u], [v]>`, while the second appears through the
/// right-`j` translate: the `j`-coefficient of `<u, v>` is `-<[uj], [v]>`
/// (so `Co2<u, v> = -<[v], [uj]>`), and `<[v], [vj]> = 0`.
pub fn qvec_to_complex(v: &QMatrix) -> QMatrix {
    expect_column(v);
    let d = v.rows();
    QMatrix::from_fn(2 * d, 1, |r, _| {
        let q = v[(r % d, 0)];
        if r < d {
            q.co1()
        } else {
            q.co2()
        }
    })
}

/// Inverse of [`qvec_to_complex`]: reads a complex vector of even length
/// `2d` as the quaternionic vector `z + conj(bottom) j` in `H^d`.
pub fn qvec_from_complex(v: &QMatrix, tol: Tolerance) -> Result<QMatrix> {
    expect_column(v);
    check_complex(v, tol.eps())?;
    if v.rows() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "a complex vector of odd length {} has no quaternionic preimage",
            v.rows()
        )));
    }
    let d = v.rows() / 2;
    Ok(QMatrix::from_fn(d, 1, |r, _| {
        let top = v[(r, 0)];
        let bottom = v[(r + d, 0)];
        Quat::new(top.re(), top.x, bottom.re(), -bottom.x)
    }))
}

/// Embeds a quaternionic `m x n` matrix as the complex `2m x 2n` matrix
/// `[[A, -B], [conj B, conj A]]`, where `L = A + B j` entrywise.
///
/// Compatible with [`qvec_to_complex`] (`[Lv] = [L][v]`), multiplicative,
/// adjoint-preserving, and the image is exactly characterised by the
/// relation `J [L] = conj([L]) J` with `J = [[0, -I], [I, 0]]`.
pub fn qmat_to_complex(l: &QMatrix) -> QMatrix {
    let (m, n) = (l.rows(), l.cols());
    QMatrix::from_fn(2 * m, 2 * n, |r, c| {
        let q = l[(r % m, c % n)];
        match (r < m, c < n) {
            (true, true) => q.co1(),
            (true, false) => -Quat::from_complex(q.y, q.z),
            (false, true) => Quat::from_complex(q.y, -q.z),
            (false, false) => q.co1().conj(),
        }
    })
}

/// The block matrix `[[0, -I], [I, 0]]` of size `2l x 2l` appearing in the
/// characterisation of complex images of quaternionic matrices.
pub fn j_block(l: usize) -> QMatrix {
    QMatrix::from_fn(2 * l, 2 * l, |r, c| {
        if r < l && c == r + l {
            -Quat::ONE
        } else if r >= l && c == r - l {
            Quat::ONE
        } else {
            Quat::ZERO
        }
    })
}

/// Doubles a quaternionic frame into a complex one: the columns of the
/// result are the embeddings of `v_1, ..., v_n` followed by those of
/// `v_1 j, ..., v_n j`. If `V V* = A I` over the quaternions, the doubled
/// frame is tight for `C^(2d)` with the same frame bound.
///
/// This is exactly the matrix image: the first `n` columns of
/// [`qmat_to_complex`]`(V)` are the `[v_a]` and the last `n` are the
/// `[v_a j]`.
pub fn frame_double_complex(v: &QMatrix) -> QMatrix {
    qmat_to_complex(v)
}

/// The pairwise `2x2` blocks `adjoint(V_a) V_b` of a doubled frame, where
/// `V_a = [[v_a], [v_a j]]`, together with how far each off-diagonal block
/// is from a scalar multiple of a unitary.
#[derive(Debug, Clone)]
pub struct BlockGramReport {
    /// `2n x 2n` matrix whose `(a, b)` block (rows `2a, 2a+1`, columns
    /// `2b, 2b+1`) is `adjoint(V_a) V_b`.
    pub blocks: QMatrix,
    /// Max over `a != b` of `|| adjoint(B) B - |<v_a, v_b>|^2 I ||_F`.
    pub max_defect: f64,
}

/// Computes the block Gramian of a unit-norm frame and verifies that every
/// off-diagonal block `B` satisfies `adjoint(B) B = |<v_a, v_b>|^2 I`, i.e.
/// is unitary up to the scalar given by the original quaternionic angle.
pub fn block_gram_check(v: &QMatrix, tol: Tolerance) -> Result<BlockGramReport> {
    let n = v.cols();
    for c in 0..n {
        let col = v.col(c);
        let norm_sq = inner_product(&col, &col).re();
        if (norm_sq - 1.0).abs() > tol.eps() {
            return Err(Error::NotUnitNorm { index: c, norm_sq });
        }
    }
    let doubled = frame_double_complex(v);
    let pair = |a: usize| doubled.take_cols(&[a, a + n]);
    let mut blocks = QMatrix::zeros(2 * n, 2 * n);
    let mut max_defect: f64 = 0.0;
    for a in 0..n {
        let va = pair(a);
        for b in 0..n {
            let block = va.adjoint().mul(&pair(b));
            for r in 0..2 {
                for c in 0..2 {
                    blocks[(2 * a + r, 2 * b + c)] = block[(r, c)];
                }
            }
            if a != b {
                let angle = inner_product(&v.col(b), &v.col(a)).abs_sq();
                let defect = block
                    .adjoint()
                    .mul(&block)
                    .frobenius_dist(&QMatrix::identity(2).scale(angle));
                max_defect = max_defect.max(defect);
            }
        }
    }
    Ok(BlockGramReport { blocks, max_defect })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::testutil::*;
    use crate::qlinalg::{gram_schmidt_extend, inner_product_slices};
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    const EPS: f64 = 1e-12;

    #[allow(non_snake_case)]
    fn TOL() -> Tolerance {
        Tolerance::default()
    }

    fn random_complex_vec(rng: &mut ChaCha8Rng, d: usize) -> QMatrix {
        QMatrix::from_fn(d, 1, |_, _| {
            Quat::from_complex(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    fn random_complex_mat(rng: &mut ChaCha8Rng, m: usize, n: usize) -> QMatrix {
        QMatrix::from_fn(m, n, |_, _| {
            Quat::from_complex(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    #[test]
    fn complex_basis_vector_stacks_to_real() {
        let e1 = QMatrix::column(vec![Quat::ONE, Quat::ZERO]);
        let r = cvec_to_real(&e1, TOL()).unwrap();
        let coords: Vec<f64> = r.entries().iter().map(|q| q.re()).collect();
        assert_eq!(coords, vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn real_image_of_iv_is_orthogonal_to_image_of_v() {
        let mut rng = rng(31);
        for _ in 0..30 {
            let v = random_complex_vec(&mut rng, 4);
            let rv = cvec_to_real(&v, TOL()).unwrap();
            let riv = cvec_to_real(&v.scale_left(Quat::I), TOL()).unwrap();
            assert!(inner_product(&rv, &riv).abs() < 1e-10);
        }
    }

    #[test]
    fn real_embedding_carries_complex_inner_products() {
        let mut rng = rng(32);
        for _ in 0..30 {
            let v = random_complex_vec(&mut rng, 3);
            let w = random_complex_vec(&mut rng, 3);
            let ip = inner_product(&v, &w);
            let rv = cvec_to_real(&v, TOL()).unwrap();
            let rw = cvec_to_real(&w, TOL()).unwrap();
            let riw = cvec_to_real(&w.scale_left(Quat::I), TOL()).unwrap();
            assert!((ip.re() - inner_product(&rv, &rw).re()).abs() < 1e-10);
            assert!((ip.x - inner_product(&rv, &riw).re()).abs() < 1e-10);
            assert!((rv.frobenius_norm() - v.frobenius_norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn real_roundtrip_is_exact() {
        let mut rng = rng(33);
        let v = random_complex_vec(&mut rng, 5);
        let back = cvec_from_real(&cvec_to_real(&v, TOL()).unwrap(), TOL()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn real_embedding_rejects_quaternionic_entries() {
        let v = QMatrix::column(vec![Quat::ONE, Quat::J]);
        match cvec_to_real(&v, TOL()) {
            Err(Error::SubfieldViolation { expected: "complex", row: 1, col: 0 }) => {}
            other => panic!("expected a subfield violation, got {other:?}"),
        }
        match cvec_from_real(&QMatrix::column(vec![Quat::I, Quat::ONE]), TOL()) {
            Err(Error::SubfieldViolation { expected: "real", row: 0, col: 0 }) => {}
            other => panic!("expected a subfield violation, got {other:?}"),
        }
    }

    #[test]
    fn matrix_real_image_of_identity_and_i() {
        let id = cmat_to_real(&QMatrix::identity(2), TOL()).unwrap();
        assert!(id.approx_eq(&QMatrix::identity(4), EPS));
        let i = cmat_to_real(&QMatrix::new(1, 1, vec![Quat::I]), TOL()).unwrap();
        let rot = QMatrix::from_rows(vec![
            vec![Quat::ZERO, -Quat::ONE],
            vec![Quat::ONE, Quat::ZERO],
        ]);
        assert!(i.approx_eq(&rot, EPS));
    }

    #[test]
    fn matrix_real_image_is_multiplicative_and_adjoint_preserving() {
        let mut rng = rng(34);
        for _ in 0..10 {
            let a = random_complex_mat(&mut rng, 3, 2);
            let b = random_complex_mat(&mut rng, 2, 4);
            let lhs = cmat_to_real(&a.mul(&b), TOL()).unwrap();
            let rhs = cmat_to_real(&a, TOL()).unwrap().mul(&cmat_to_real(&b, TOL()).unwrap());
            assert!(lhs.approx_eq(&rhs, 1e-10));
            let adj = cmat_to_real(&a.adjoint(), TOL()).unwrap();
            assert!(adj.approx_eq(&cmat_to_real(&a, TOL()).unwrap().transpose(), 1e-12));
        }
        // Vector compatibility: [Av] = [A][v].
        let a = random_complex_mat(&mut rng, 3, 3);
        let v = random_complex_vec(&mut rng, 3);
        let lhs = cvec_to_real(&a.mul(&v), TOL()).unwrap();
        let rhs = cmat_to_real(&a, TOL()).unwrap().mul(&cvec_to_real(&v, TOL()).unwrap());
        assert!(lhs.approx_eq(&rhs, 1e-10));
    }

    #[test]
    fn quaternion_vector_reads_off_cayley_dickson_coordinates() {
        let v = QMatrix::column(vec![Quat::new(1.0, 2.0, 3.0, 4.0)]);
        let c = qvec_to_complex(&v);
        assert_eq!(c[(0, 0)], Quat::from_complex(1.0, 2.0));
        assert_eq!(c[(1, 0)], Quat::from_complex(3.0, -4.0));
        let back = qvec_from_complex(&c, TOL()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn right_j_translate_swaps_blocks() {
        let mut rng = rng(35);
        let v = random_matrix(&mut rng, 3, 1);
        let vj = v.scale_right(Quat::J);
        let image = qvec_to_complex(&vj);
        // [vj] = (-w; conj z) when [v] = (z; conj w).
        let d = 3;
        for r in 0..d {
            let q = v[(r, 0)];
            let w_part = Quat::from_complex(q.y, q.z);
            let z_part = q.co1();
            assert!(image[(r, 0)].approx_eq(-w_part, EPS));
            assert!(image[(r + d, 0)].approx_eq(z_part.conj(), EPS));
        }
        assert!(inner_product(&qvec_to_complex(&v), &image).abs() < 1e-10);
    }

    #[test]
    fn complex_embedding_carries_cayley_dickson_inner_products() {
        let mut rng = rng(36);
        for _ in 0..30 {
            let v = random_matrix(&mut rng, 4, 1);
            let w = random_matrix(&mut rng, 4, 1);
            let ip = inner_product(&v, &w);
            let cv = qvec_to_complex(&v);
            let cw = qvec_to_complex(&w);
            let cvj = qvec_to_complex(&v.scale_right(Quat::J));
            assert!(ip.co1().approx_eq(inner_product(&cv, &cw), 1e-10));
            // The j-coefficient of <v, w> is -<[vj], [w]>; the second
            // Cayley-Dickson coordinate is its conjugate.
            assert!(ip.co2().conj().approx_eq(-inner_product(&cvj, &cw), 1e-10));
            assert!(ip.co2().approx_eq(-inner_product(&cw, &cvj), 1e-10));
            assert!((cv.frobenius_norm() - v.frobenius_norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn matrix_complex_images_of_units() {
        let i = qmat_to_complex(&QMatrix::new(1, 1, vec![Quat::I]));
        let expect_i = QMatrix::from_rows(vec![
            vec![Quat::I, Quat::ZERO],
            vec![Quat::ZERO, -Quat::I],
        ]);
        assert!(i.approx_eq(&expect_i, EPS));
        let j = qmat_to_complex(&QMatrix::new(1, 1, vec![Quat::J]));
        let expect_j = QMatrix::from_rows(vec![
            vec![Quat::ZERO, -Quat::ONE],
            vec![Quat::ONE, Quat::ZERO],
        ]);
        assert!(j.approx_eq(&expect_j, EPS));
        assert!(qmat_to_complex(&QMatrix::identity(3)).approx_eq(&QMatrix::identity(6), EPS));
    }

    #[test]
    fn matrix_complex_image_is_a_homomorphism() {
        let mut rng = rng(37);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 2, 3);
            let b = random_matrix(&mut rng, 3, 2);
            let lhs = qmat_to_complex(&a.mul(&b));
            let rhs = qmat_to_complex(&a).mul(&qmat_to_complex(&b));
            assert!(lhs.approx_eq(&rhs, 1e-10));
            assert!(qmat_to_complex(&a.adjoint()).approx_eq(&qmat_to_complex(&a).adjoint(), EPS));
            // Vector compatibility.
            let v = random_matrix(&mut rng, 3, 1);
            let av = qvec_to_complex(&a.mul(&v));
            assert!(av.approx_eq(&qmat_to_complex(&a).mul(&qvec_to_complex(&v)), 1e-10));
        }
    }

    #[test]
    fn complex_image_satisfies_the_j_relation() {
        let mut rng = rng(38);
        let l = random_matrix(&mut rng, 3, 5);
        let img = qmat_to_complex(&l);
        let lhs = j_block(3).mul(&img);
        let rhs = img.conj_entries().mul(&j_block(5));
        assert!(lhs.approx_eq(&rhs, EPS));
    }

    #[test]
    fn inverse_transfers_through_the_complex_image() {
        let mut rng = rng(39);
        let u = random_unitary(&mut rng, 3);
        let img = qmat_to_complex(&u);
        assert!(img.unitary_defect() < 1e-10);
        let inv_img = qmat_to_complex(&u.solve_inverse(Tolerance::default()).unwrap());
        let img_inv = img.solve_inverse(Tolerance::default()).unwrap();
        assert!(inv_img.approx_eq(&img_inv, 1e-8));
    }

    #[test]
    fn projections_embed_to_projections() {
        let mut rng = rng(40);
        let v = QMatrix::column(random_unit_vector(&mut rng, 3));
        let p = v.mul(&v.adjoint());
        let img = qmat_to_complex(&p);
        assert!(img.is_hermitian(1e-10));
        assert!(img.mul(&img).approx_eq(&img, 1e-10));
        assert!((img.re_trace() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn doubling_a_single_unit_gives_an_orthonormal_pair() {
        let v = QMatrix::new(1, 1, vec![Quat::ONE]);
        let doubled = frame_double_complex(&v);
        assert!(doubled.approx_eq(&QMatrix::identity(2), EPS));
    }

    #[test]
    fn doubling_the_unit_quaternions_is_tight_for_c2() {
        let v = QMatrix::new(1, 4, vec![Quat::ONE, Quat::I, Quat::J, Quat::K]);
        let doubled = frame_double_complex(&v);
        assert_eq!((doubled.rows(), doubled.cols()), (2, 8));
        let s = doubled.mul(&doubled.adjoint());
        assert!(s.approx_eq(&QMatrix::identity(2).scale(4.0), EPS));
        // Over the quaternions the frame bound is 4; per complex dimension
        // the doubled frame keeps it.
        let columns_match = (0..4).all(|a| {
            let col = v.col(a);
            doubled.col(a) == qvec_to_complex(&col)
                && doubled.col(a + 4) == qvec_to_complex(&col.scale_right(Quat::J))
        });
        assert!(columns_match);
    }

    #[test]
    fn doubling_preserves_tightness_of_random_frames() {
        let mut rng = rng(41);
        for _ in 0..10 {
            // Rows of a random unitary give a tight frame: V V* = I.
            let u = random_unitary(&mut rng, 5);
            let v = u.adjoint().take_cols(&[0, 1]).adjoint();
            let s = v.mul(&v.adjoint());
            assert!(s.approx_eq(&QMatrix::identity(2), 1e-9));
            let doubled = frame_double_complex(&v);
            let sd = doubled.mul(&doubled.adjoint());
            assert!(sd.approx_eq(&QMatrix::identity(4), 1e-9));
        }
    }

    #[test]
    fn block_gram_of_orthonormal_pair_vanishes_off_diagonal() {
        let report = block_gram_check(&QMatrix::identity(2), TOL()).unwrap();
        assert!(report.max_defect < EPS);
        for r in 0..2 {
            for c in 0..2 {
                assert!(report.blocks[(r, 2 + c)].abs() < EPS);
                assert!(report.blocks[(2 + r, c)].abs() < EPS);
            }
        }
    }

    #[test]
    fn block_gram_blocks_are_scaled_unitaries() {
        let mut rng = rng(42);
        let mut v = QMatrix::zeros(3, 4);
        for c in 0..4 {
            let col = random_unit_vector(&mut rng, 3);
            v.set_col(c, &col);
        }
        let report = block_gram_check(&v, TOL()).unwrap();
        assert!(report.max_defect < 1e-9);
    }

    #[test]
    fn block_gram_rejects_non_unit_columns() {
        let v = QMatrix::new(1, 2, vec![Quat::ONE, Quat::from_real(2.0)]);
        match block_gram_check(&v, TOL()) {
            Err(Error::NotUnitNorm { index: 1, .. }) => {}
            other => panic!("expected a unit-norm error, got {other:?}"),
        }
    }

    #[test]
    fn equiisoclinic_pairs_stay_equiisoclinic_under_embedding() {
        // For unit vectors (r = 1), P_j P_k P_j = |<v_j, v_k>|^2 P_j holds
        // automatically; check the embedded 2-dimensional projections keep
        // the same lambda.
        let mut rng = rng(43);
        let a = QMatrix::column(random_unit_vector(&mut rng, 2));
        let b = QMatrix::column(random_unit_vector(&mut rng, 2));
        let lambda = inner_product(&a, &b).abs_sq();
        let pa = qmat_to_complex(&a.mul(&a.adjoint()));
        let pb = qmat_to_complex(&b.mul(&b.adjoint()));
        let papba = pa.mul(&pb).mul(&pa);
        assert!(papba.approx_eq(&pa.scale(lambda), 1e-10));
    }

    #[test]
    fn subfield_checks_catch_the_first_violation() {
        let m = QMatrix::from_rows(vec![
            vec![Quat::ONE, Quat::I],
            vec![Quat::K, Quat::ONE],
        ]);
        assert!(check_complex(&m, 1e-9).is_err());
        match check_real(&m, 1e-9) {
            Err(Error::SubfieldViolation { expected: "real", row: 0, col: 1 }) => {}
            other => panic!("expected a subfield violation, got {other:?}"),
        }
        let ok = QMatrix::from_fn(2, 2, |r, c| Quat::from_real((r + c) as f64));
        assert!(check_real(&ok, 1e-9).is_ok());
        assert!(check_complex(&ok, 1e-9).is_ok());
    }

    #[test]
    fn unused_slice_helper_contract() {
        // inner_product_slices and the column form agree.
        let mut rng = rng(44);
        let u = random_matrix(&mut rng, 3, 1);
        let v = random_matrix(&mut rng, 3, 1);
        let a = inner_product(&u, &v);
        let b = inner_product_slices(u.entries(), v.entries());
        assert!(a.approx_eq(b, EPS));
    }

    #[test]
    fn gram_schmidt_after_embedding_stays_unitary() {
        let mut rng = rng(45);
        let m = random_matrix(&mut rng, 3, 3);
        let u = gram_schmidt_extend(&m, 3, Tolerance::default()).unwrap();
        assert!(qmat_to_complex(&u).unitary_defect() < 1e-9);
    }
}
