//! Equiangular lines: angle certificates, counting bounds, a catalog of
//! named constructions, the Hopf-map pipeline from spherical simplices, and
//! the equichordal / equi-isoclinic conditions for sets of subspaces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::{FieldClass, Frame};
use crate::qlinalg::{gram_schmidt_extend, QMatrix, Tolerance};
use crate::quat::Quat;

/// Equiangularity certificate: the common squared inner product between
/// distinct unit vectors, if there is one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AngleReport {
    /// Mean of `|<v_j, v_k>|^2` over distinct pairs; `None` for a single
    /// vector.
    pub common_lambda: Option<f64>,
    /// Largest deviation of a pair from the common value.
    pub max_deviation: f64,
    pub is_equiangular: bool,
    /// `arccos(sqrt(lambda))` in degrees: the angle between the lines.
    pub theta_degrees: Option<f64>,
}

/// Measures equiangularity of a unit-norm frame: the common angle is the
/// mean of `|<v_j, v_k>|^2` over distinct pairs, and the verdict compares
/// the worst pair against the tolerance.
pub fn angle_report(f: &Frame) -> Result<AngleReport> {
    f.check_unit_columns()?;
    let n = f.len();
    if n < 2 {
        return Ok(AngleReport {
            common_lambda: None,
            max_deviation: 0.0,
            is_equiangular: true,
            theta_degrees: None,
        });
    }
    let g = f.gramian();
    let mut values = Vec::with_capacity(n * (n - 1) / 2);
    for j in 0..n {
        for k in (j + 1)..n {
            values.push(g[(j, k)].abs_sq());
        }
    }
    let lambda = values.iter().sum::<f64>() / values.len() as f64;
    let max_deviation = values
        .iter()
        .map(|v| (v - lambda).abs())
        .fold(0.0, f64::max);
    Ok(AngleReport {
        common_lambda: Some(lambda),
        max_deviation,
        is_equiangular: max_deviation < f.tol().eps(),
        theta_degrees: Some(lambda.max(0.0).sqrt().min(1.0).acos().to_degrees()),
    })
}

/// The relative (Welch) bound `lambda >= (n - d) / (d (n - 1))` on the
/// common angle of `n > d` equiangular lines in dimension `d`, met with
/// equality exactly by tight sets.
pub fn welch_angle(n: usize, d: usize) -> Result<f64> {
    if d < 1 || n <= d {
        return Err(Error::InvalidArgument(format!(
            "the relative bound needs n > d >= 1, got n = {n}, d = {d}"
        )));
    }
    Ok((n - d) as f64 / (d as f64 * (n - 1) as f64))
}

fn real_dimension(field: FieldClass) -> f64 {
    match field {
        FieldClass::Real => 1.0,
        FieldClass::Complex => 2.0,
        FieldClass::Quaternionic => 4.0,
    }
}

/// Maximum number of equiangular lines in dimension `d > 1` over the given
/// field: `d(d+1)/2`, `d^2`, and `2d^2 - d` respectively.
pub fn max_lines(d: usize, field: FieldClass) -> Result<usize> {
    if d <= 1 {
        return Err(Error::InvalidArgument(format!(
            "line-count bounds need dimension d > 1, got {d}"
        )));
    }
    Ok(match field {
        FieldClass::Real => d * (d + 1) / 2,
        FieldClass::Complex => d * d,
        FieldClass::Quaternionic => 2 * d * d - d,
    })
}

/// Common angle of a maximal set of equiangular lines in dimension `d > 1`:
/// `1/(d+2)`, `1/(d+1)` and `1/(d+1/2)` over the three fields.
pub fn max_angle(d: usize, field: FieldClass) -> Result<f64> {
    if d <= 1 {
        return Err(Error::InvalidArgument(format!(
            "line-count bounds need dimension d > 1, got {d}"
        )));
    }
    let shift = match field {
        FieldClass::Real => 2.0,
        FieldClass::Complex => 1.0,
        FieldClass::Quaternionic => 0.5,
    };
    Ok(1.0 / (d as f64 + shift))
}

/// Admissible size range for an equiangular tight frame of `n` unit vectors
/// in dimension `d`: `n_min = d + 1/2 + sqrt((8/m) d + 1) / 2` and
/// `n_max = d + (m/2) d (d-1)`, with `m` the real dimension of the field.
/// For `d = 1` the range is empty (`n_max = d`).
pub fn etf_size_range(d: usize, field: FieldClass) -> (f64, usize) {
    let m = real_dimension(field);
    let df = d as f64;
    let n_min = df + 0.5 + ((8.0 / m) * df + 1.0).sqrt() / 2.0;
    // n_max = d + (m/2) d (d-1); d(d-1) is even, so the real case is exact.
    let n_max = match field {
        FieldClass::Real => d + d * (d - 1) / 2,
        FieldClass::Complex => d + d * (d - 1),
        FieldClass::Quaternionic => d + 2 * d * (d - 1),
    };
    (n_min, n_max)
}

/// Whether `n` vectors are admissible for an equiangular tight frame in
/// dimension `d` over the field (within the size range; existence is a
/// separate question).
pub fn etf_size_admits(n: usize, d: usize, field: FieldClass) -> bool {
    let (n_min, n_max) = etf_size_range(d, field);
    (n as f64) >= n_min && n <= n_max
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Names accepted by [`catalog`], with the parameters each expects.
pub const CATALOG_NAMES: [&str; 10] = [
    "onb",         // d: dimension
    "simplex",     // d: dimension (d+1 vectors)
    "hoggar4",     // Hoggar's four equiangular lines in H^2
    "wh_sic2",     // the Weyl-Heisenberg SIC in C^2, read inside H^2
    "five_h2",     // t in (0,1): the t-family of four lines plus e1
    "b20_five_h2", // five tight equiangular lines in H^2 at angle 3/8
    "five_h3",     // their complement: five lines in H^3 at angle 1/6
    "six_h2",      // six tight equiangular lines in H^2 at angle 2/5
    "six_h4",      // their complement: six lines in H^4 at angle 1/10
    "hopf",        // n in 3..=6: simplex lines through the Hopf map
];

fn q(w: f64, x: f64, y: f64, z: f64) -> Quat {
    Quat::new(w, x, y, z)
}

fn r(w: f64) -> Quat {
    Quat::from_real(w)
}

/// Orthonormal basis of `H^d` (real entries).
pub fn onb(d: usize, tol: Tolerance) -> Result<Frame> {
    if d == 0 {
        return Err(Error::BadCatalogParameter("onb needs d >= 1".into()));
    }
    Frame::new(QMatrix::identity(d), tol)
}

/// Vertices of the regular simplex: `d + 1` real unit vectors in dimension
/// `d` with pairwise inner products `-1/d`, a tight set at angle `1/d^2`.
pub fn simplex(d: usize, tol: Tolerance) -> Result<Frame> {
    if d == 0 {
        return Err(Error::BadCatalogParameter("simplex needs d >= 1".into()));
    }
    let n = d + 1;
    let mut seed = QMatrix::zeros(n, 1);
    for row in 0..n {
        seed[(row, 0)] = r(1.0 / (n as f64).sqrt());
    }
    let basis = gram_schmidt_extend(&seed, n, tol)?;
    let cols: Vec<usize> = (1..n).collect();
    let v = basis.take_cols(&cols).adjoint();
    Frame::new(v, tol)?.normalized()
}

/// Hoggar's four equiangular lines in `H^2` at angle `1/3`, whose Gramian
/// has only complex entries.
pub fn hoggar4(tol: Tolerance) -> Result<Frame> {
    let s2 = 2.0f64.sqrt();
    let s3 = 3.0f64.sqrt();
    let s6 = 6.0f64.sqrt();
    let c = 1.0 / (2.0 * s3);
    Frame::from_columns(
        vec![
            vec![r(1.0 / s2), q(0.0, 0.0, 1.0 / s2, 0.0)],
            vec![q(1.0 / s6, -s2 / s6, 0.0, 0.0), q(0.0, 0.0, 1.0 / s6, -s2 / s6)],
            vec![q((s2 + s3) * c, c, 0.0, 0.0), q(0.0, 0.0, (s2 - s3) * c, c)],
            vec![q((s2 - s3) * c, c, 0.0, 0.0), q(0.0, 0.0, (s2 + s3) * c, c)],
        ],
        tol,
    )
}

/// The Weyl-Heisenberg SIC in `C^2` read inside `H^2`: the orbit
/// `v, Sv, Omega v, i S Omega v` of the fiducial vector
/// `v = (sqrt((3+sqrt3)/6), (1+i) sqrt((3-sqrt3)/12))`.
pub fn wh_sic2(tol: Tolerance) -> Result<Frame> {
    let s3 = 3.0f64.sqrt();
    let a = ((3.0 + s3) / 6.0).sqrt();
    let b = ((3.0 - s3) / 12.0).sqrt();
    Frame::from_columns(
        vec![
            vec![r(a), q(b, b, 0.0, 0.0)],
            vec![q(b, b, 0.0, 0.0), r(a)],
            vec![r(a), q(-b, -b, 0.0, 0.0)],
            vec![q(b, -b, 0.0, 0.0), q(0.0, a, 0.0, 0.0)],
        ],
        tol,
    )
}

/// The one-parameter family of four equiangular lines in `H^2` at angle
/// `t^4 + (1-t^2)^2`, plus the extra line `e_1`. At `t^2 = 1/2` all five
/// are equiangular at `1/2` (not tight: `1/2 > 3/8`).
pub fn five_h2(t: f64, tol: Tolerance) -> Result<Frame> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::BadCatalogParameter(format!(
            "five_h2 needs t strictly between 0 and 1, got {t}"
        )));
    }
    let s = (1.0 - t * t).sqrt();
    Frame::from_columns(
        vec![
            vec![r(t), r(s)],
            vec![r(t), q(0.0, s, 0.0, 0.0)],
            vec![r(t), q(0.0, 0.0, s, 0.0)],
            vec![r(t), q(0.0, 0.0, 0.0, s)],
            vec![r(1.0), r(0.0)],
        ],
        tol,
    )
}

/// Five tight equiangular lines in `H^2` at angle `3/8`.
pub fn b20_five_h2(tol: Tolerance) -> Result<Frame> {
    let s2 = 2.0f64.sqrt();
    let s3 = 3.0f64.sqrt();
    let s5 = 5.0f64.sqrt();
    let top = s3 / (2.0 * s2);
    Frame::from_columns(
        vec![
            vec![r(1.0), r(0.0)],
            vec![r(top), r(s5 / (2.0 * s2))],
            vec![r(top), q(-s5 / (6.0 * s2), s5 / 3.0, 0.0, 0.0)],
            vec![r(top), q(-s5 / (6.0 * s2), -s5 / 6.0, s5 / (2.0 * s3), 0.0)],
            vec![r(top), q(-s5 / (6.0 * s2), -s5 / 6.0, -s5 / (2.0 * s3), 0.0)],
        ],
        tol,
    )
}

/// Five tight equiangular lines in `H^3` at angle `1/6`: the complementary
/// frame of [`b20_five_h2`], in its concrete upper-triangular presentation.
pub fn five_h3(tol: Tolerance) -> Result<Frame> {
    let s3 = 3.0f64.sqrt();
    let s5 = 5.0f64.sqrt();
    let s6 = 6.0f64.sqrt();
    let a = -1.0 / s6;
    let b = -s5 / (3.0 * s6);
    Frame::from_columns(
        vec![
            vec![r(1.0), r(0.0), r(0.0)],
            vec![r(a), r(s5 / s6), r(0.0)],
            vec![r(a), q(b, -s5 / (3.0 * s3), 0.0, 0.0), r(s5 / 3.0)],
            vec![
                r(a),
                q(b, s5 / (6.0 * s3), -s5 / 6.0, 0.0),
                q(-s5 / 6.0, 0.0, 0.0, s5 / (2.0 * s3)),
            ],
            vec![
                r(a),
                q(b, s5 / (6.0 * s3), s5 / 6.0, 0.0),
                q(-s5 / 6.0, 0.0, 0.0, -s5 / (2.0 * s3)),
            ],
        ],
        tol,
    )
}

/// Six tight equiangular lines in `H^2` at angle `2/5`, the maximal number.
///
/// The first five vectors follow the published presentation with one sign
/// repaired: the `j`-coefficient of `v_5` is `-1/(2 sqrt 2)` (the printed
/// `+` sign admits no sixth unit vector at the common angle, and the
/// published symmetry unitary for the swap `(12)(34)` permutes only the
/// repaired set correctly). The sixth vector is then the unique unit vector
/// at angle `2/5` to the other five; it differs from `v_5` only in the sign
/// of the `k`-coefficient.
pub fn six_h2(tol: Tolerance) -> Result<Frame> {
    let s25 = (2.0f64 / 5.0).sqrt();
    let s35 = (3.0f64 / 5.0).sqrt();
    let re = -(15.0f64.sqrt()) / 20.0; // -sqrt(3) / (4 sqrt 5)
    let half_j = 1.0 / (2.0 * 2.0f64.sqrt());
    let half_k = 3.0f64.sqrt() / (2.0 * 2.0f64.sqrt());
    Frame::from_columns(
        vec![
            vec![r(1.0), r(0.0)],
            vec![r(s25), r(s35)],
            vec![r(s25), q(re, 0.75, 0.0, 0.0)],
            vec![r(s25), q(re, -0.25, 1.0 / 2.0f64.sqrt(), 0.0)],
            vec![r(s25), q(re, -0.25, -half_j, half_k)],
            vec![r(s25), q(re, -0.25, -half_j, -half_k)],
        ],
        tol,
    )
}

/// Six tight equiangular lines in `H^4` at angle `1/10`: the complementary
/// frame of [`six_h2`].
pub fn six_h4(tol: Tolerance) -> Result<Frame> {
    six_h2(tol)?.complement()
}

/// Maps a unit vector on the sphere in `R^5` to a unit vector in `H^2`
/// (second coordinate real and nonnegative): `(a, a5)` with
/// `a = a1 + a2 i + a3 j + a4 k` goes to
/// `(a / sqrt(2 (1 - a5)); sqrt((1 - a5) / 2))`, and the north pole
/// `(0,0,0,0,1)` to `(1, 0)`.
///
/// Squared overlaps of images recover spherical geometry:
/// `|<psi(a), psi(b)>|^2 = (1 + <a, b>) / 2`.
pub fn hopf(a: &[f64; 5], tol: Tolerance) -> Result<QMatrix> {
    let norm_sq: f64 = a.iter().map(|c| c * c).sum();
    if (norm_sq - 1.0).abs() > tol.eps() {
        return Err(Error::InvalidArgument(format!(
            "the Hopf map needs a unit vector in R^5, got |a|^2 = {norm_sq}"
        )));
    }
    if 1.0 - a[4] < tol.eps() {
        return Ok(QMatrix::column(vec![Quat::ONE, Quat::ZERO]));
    }
    let denom = (2.0 * (1.0 - a[4])).sqrt();
    Ok(QMatrix::column(vec![
        q(a[0], a[1], a[2], a[3]) * denom.recip(),
        r(((1.0 - a[4]) / 2.0).sqrt()),
    ]))
}

/// Vertices of a regular `n`-point simplex on the unit sphere of `R^5`
/// (pairwise inner products `-1/(n-1)`), placed so that the Hopf images use
/// the smallest possible field: inside the `(x1, x5)`-plane for `n = 3`,
/// `(x1, x2, x5)` for `n = 4`, `(x1..x4)` for `n = 5`, all five coordinates
/// for `n = 6`.
fn simplex_on_sphere(n: usize) -> Vec<[f64; 5]> {
    // Helmert coordinates: vertex p of the centered regular simplex in
    // R^(n-1), scaled to unit norm.
    let scale = (n as f64 / (n - 1) as f64).sqrt();
    let mut raw = vec![vec![0.0; n - 1]; n];
    for k in 0..(n - 1) {
        let kk = ((k + 1) * (k + 2)) as f64;
        for (p, vertex) in raw.iter_mut().enumerate() {
            vertex[k] = if p < k + 1 {
                scale / kk.sqrt()
            } else if p == k + 1 {
                -scale * (k + 1) as f64 / kk.sqrt()
            } else {
                0.0
            };
        }
    }
    // Coordinate placement: which of the five sphere coordinates carries
    // each simplex coordinate.
    let slots: &[usize] = match n {
        3 => &[0, 4],
        4 => &[0, 1, 4],
        5 => &[0, 1, 2, 3],
        6 => &[0, 1, 2, 3, 4],
        _ => unreachable!("caller checks 3 <= n <= 6"),
    };
    raw.into_iter()
        .map(|vertex| {
            let mut a = [0.0; 5];
            for (k, &slot) in slots.iter().enumerate() {
                a[slot] = vertex[k];
            }
            a
        })
        .collect()
}

/// `n` tight equiangular lines in `H^2` at angle `(n-2)/(2(n-1))`: the Hopf
/// images of a regular `n`-vertex simplex on the sphere in `R^5`. The lines
/// are real for `n = 3`, complex for `n = 4`, and quaternionic for
/// `n = 5, 6`.
pub fn hopf_lines(n: usize, tol: Tolerance) -> Result<Frame> {
    if !(3..=6).contains(&n) {
        return Err(Error::BadCatalogParameter(format!(
            "hopf lines need 3 <= n <= 6, got {n}"
        )));
    }
    let mut columns = Vec::with_capacity(n);
    for vertex in simplex_on_sphere(n) {
        columns.push(hopf(&vertex, tol)?.col_vec(0));
    }
    Frame::from_columns(columns, tol)
}

/// Builds a catalog construction by name. Parameters: `onb` and `simplex`
/// take `d`, `five_h2` takes `t`, `hopf` takes `n`.
pub fn catalog(name: &str, params: &BTreeMap<String, f64>, tol: Tolerance) -> Result<Frame> {
    let int_param = |key: &str| -> Result<usize> {
        let raw = *params.get(key).ok_or_else(|| {
            Error::BadCatalogParameter(format!("{name} needs the parameter {key}"))
        })?;
        if raw.fract() != 0.0 || raw < 0.0 || raw > usize::MAX as f64 {
            return Err(Error::BadCatalogParameter(format!(
                "{name} needs a nonnegative integer {key}, got {raw}"
            )));
        }
        Ok(raw as usize)
    };
    match name {
        "onb" => onb(int_param("d")?, tol),
        "simplex" => simplex(int_param("d")?, tol),
        "hoggar4" => hoggar4(tol),
        "wh_sic2" => wh_sic2(tol),
        "five_h2" => {
            let t = *params.get("t").ok_or_else(|| {
                Error::BadCatalogParameter("five_h2 needs the parameter t".into())
            })?;
            five_h2(t, tol)
        }
        "b20_five_h2" => b20_five_h2(tol),
        "five_h3" => five_h3(tol),
        "six_h2" => six_h2(tol),
        "six_h4" => six_h4(tol),
        "hopf" => hopf_lines(int_param("n")?, tol),
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// Subspace packings
// ---------------------------------------------------------------------------

/// A set of orthogonal projections onto subspaces of a common dimension.
#[derive(Debug, Clone)]
pub struct ProjectionSet {
    projections: Vec<QMatrix>,
    subspace_dim: usize,
    tol: Tolerance,
}

impl ProjectionSet {
    /// Validates that every matrix is a Hermitian idempotent of real trace
    /// `r`, to tolerance.
    pub fn new(projections: Vec<QMatrix>, subspace_dim: usize, tol: Tolerance) -> Result<Self> {
        if projections.len() < 2 {
            return Err(Error::InvalidArgument(
                "a projection set needs at least two subspaces".into(),
            ));
        }
        let d = projections[0].rows();
        for (index, p) in projections.iter().enumerate() {
            if p.rows() != d || p.cols() != d {
                return Err(Error::InvalidArgument(format!(
                    "projection {index} is {}x{}, expected {d}x{d}",
                    p.rows(),
                    p.cols()
                )));
            }
            let herm = p.frobenius_dist(&p.adjoint());
            let idem = p.mul(p).frobenius_dist(p);
            let trace = (p.re_trace() - subspace_dim as f64).abs();
            let defect = herm.max(idem).max(trace);
            // Validation tolerance is looser than certificate tolerance:
            // projections often arrive from chained computations.
            if defect > tol.eps().max(1e-9) * 1e3 {
                return Err(Error::NotProjection { index, rank: subspace_dim, defect });
            }
        }
        Ok(ProjectionSet { projections, subspace_dim, tol })
    }

    /// Rank-one projections `v_j v_j*` onto the lines of a unit-norm frame.
    pub fn from_lines(f: &Frame) -> Result<Self> {
        f.check_unit_columns()?;
        let projections = (0..f.len())
            .map(|j| {
                let v = f.col(j);
                v.mul(&v.adjoint())
            })
            .collect();
        ProjectionSet::new(projections, 1, f.tol())
    }

    /// The complementary subspaces: projections `I - P_j`.
    pub fn complements(&self) -> Result<ProjectionSet> {
        let d = self.projections[0].rows();
        let id = QMatrix::identity(d);
        ProjectionSet::new(
            self.projections.iter().map(|p| id.sub(p)).collect(),
            d - self.subspace_dim,
            self.tol,
        )
    }

    pub fn projections(&self) -> &[QMatrix] {
        &self.projections
    }

    pub fn subspace_dim(&self) -> usize {
        self.subspace_dim
    }

    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projections.is_empty()
    }
}

/// Pairwise-constancy report for a subspace packing condition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceReport {
    pub holds: bool,
    /// The common parameter `lambda` (mean over pairs).
    pub lambda: f64,
    /// Worst deviation from the condition over all pairs.
    pub max_deviation: f64,
}

/// Equichordality: `Re trace(P_j P_k) = lambda r` for all `j != k`,
/// equivalently `||P_j - P_k||_F^2 = 2 (1 - lambda) r`.
pub fn is_equichordal(s: &ProjectionSet) -> SubspaceReport {
    let rr = s.subspace_dim() as f64;
    let mut values = Vec::new();
    for j in 0..s.len() {
        for k in (j + 1)..s.len() {
            let pj = &s.projections()[j];
            let pk = &s.projections()[k];
            let chord = pj.mul(pk).re_trace() / rr;
            values.push(chord);
            // Cross-check the distance form of the same condition.
            let dist_sq = pj.sub(pk).frobenius_norm_sq();
            debug_assert!((dist_sq - 2.0 * (1.0 - chord) * rr).abs() < 1e-8);
        }
    }
    let lambda = values.iter().sum::<f64>() / values.len() as f64;
    let max_deviation = values
        .iter()
        .map(|v| (v - lambda).abs() * rr)
        .fold(0.0, f64::max);
    SubspaceReport { holds: max_deviation < s.tol.eps(), lambda, max_deviation }
}

/// Equi-isoclinism: `P_j P_k P_j = lambda P_j` with one common `lambda`
/// over all pairs. One side per unordered pair suffices: each side implies
/// the other.
pub fn is_equiisoclinic(s: &ProjectionSet) -> SubspaceReport {
    let rr = s.subspace_dim() as f64;
    let mut lambdas = Vec::new();
    let mut max_residual: f64 = 0.0;
    for j in 0..s.len() {
        for k in (j + 1)..s.len() {
            let pj = &s.projections()[j];
            let pk = &s.projections()[k];
            let pjk = pj.mul(pk).mul(pj);
            let lambda_jk = pjk.re_trace() / rr;
            lambdas.push(lambda_jk);
            max_residual = max_residual.max(pjk.frobenius_dist(&pj.scale(lambda_jk)));
        }
    }
    let lambda = lambdas.iter().sum::<f64>() / lambdas.len() as f64;
    let spread = lambdas
        .iter()
        .map(|v| (v - lambda).abs())
        .fold(0.0, f64::max);
    let max_deviation = max_residual.max(spread);
    SubspaceReport { holds: max_deviation < s.tol.eps(), lambda, max_deviation }
}

/// Orthogonal projection onto the column space of a matrix with independent
/// columns: `P = X X*` for any orthonormal basis `X` of the span.
pub fn projection_of_span(b: &QMatrix, tol: Tolerance) -> Result<QMatrix> {
    let x = gram_schmidt_extend(b, b.cols(), tol)?;
    Ok(x.mul(&x.adjoint()))
}
