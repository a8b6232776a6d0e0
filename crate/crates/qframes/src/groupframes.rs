//! Finite unitary matrix groups: closure from generators, orbit frames,
//! recognition of group matrices, and the eight-character table of the
//! quaternion group with its harmonic frames.

use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::qlinalg::{QMatrix, Tolerance};
use crate::quat::Quat;

/// Deduplication radius for group elements: coarser than the working
/// tolerance, to absorb error accumulated along products.
pub const DEDUP_EPS: f64 = 1e-6;

/// A finite group of unitary matrices with a numerically built
/// multiplication table.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    elements: Vec<QMatrix>,
    mult_table: Vec<Vec<usize>>,
    identity_index: usize,
}

/// Index of the element of `elements` within `DEDUP_EPS` of `m`, erroring
/// on zero or several matches (`on_ambiguous` supplies the error indices).
fn match_element(
    elements: &[QMatrix],
    m: &QMatrix,
    on_ambiguous: (usize, usize),
) -> Result<usize> {
    let mut found: Option<usize> = None;
    for (idx, e) in elements.iter().enumerate() {
        // Cheap pre-filter on the top-left entry before the full distance.
        if (e[(0, 0)] - m[(0, 0)]).abs() > DEDUP_EPS {
            continue;
        }
        if e.frobenius_dist(m) < DEDUP_EPS {
            if found.is_some() {
                return Err(Error::AmbiguousElement {
                    a: on_ambiguous.0,
                    b: on_ambiguous.1,
                });
            }
            found = Some(idx);
        }
    }
    found.ok_or_else(|| {
        Error::InvalidArgument(format!(
            "product of elements {} and {} matches no group element: \
             the element list is not closed",
            on_ambiguous.0, on_ambiguous.1
        ))
    })
}

fn build_mult_table(elements: &[QMatrix]) -> Result<Vec<Vec<usize>>> {
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let product = elements[a].mul(&elements[b]);
            table[a][b] = match_element(elements, &product, (a, b))?;
        }
    }
    Ok(table)
}

impl MatrixGroup {
    /// Builds a group from an explicit element list (validating unitarity,
    /// closure, presence of the identity, and table unambiguity).
    pub fn from_elements(elements: Vec<QMatrix>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("a group needs elements".into()));
        }
        let d = elements[0].rows();
        for (index, e) in elements.iter().enumerate() {
            if e.rows() != d || e.cols() != d {
                return Err(Error::InvalidArgument(format!(
                    "element {index} is {}x{}, expected {d}x{d}",
                    e.rows(),
                    e.cols()
                )));
            }
            let defect = e.unitary_defect();
            if defect > 1e-8 {
                return Err(Error::NonUnitaryGenerator { index, defect });
            }
        }
        let identity_index = match_element(&elements, &QMatrix::identity(d), (0, 0))?;
        let mult_table = build_mult_table(&elements)?;
        Ok(MatrixGroup { elements, mult_table, identity_index })
    }

    pub fn elements(&self) -> &[QMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Size of the matrices.
    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    /// Index of the product of elements `a` and `b`.
    pub fn mult(&self, a: usize, b: usize) -> usize {
        self.mult_table[a][b]
    }

    /// Index of the inverse of element `a`.
    pub fn inverse(&self, a: usize) -> usize {
        self.mult_table[a]
            .iter()
            .position(|&p| p == self.identity_index)
            .expect("every group element has an inverse")
    }

    /// Order of element `a` in the group.
    pub fn element_order(&self, a: usize) -> usize {
        let mut power = a;
        let mut order = 1;
        while power != self.identity_index {
            power = self.mult_table[power][a];
            order += 1;
        }
        order
    }

    /// Index of the element within `DEDUP_EPS` of `m`, if any.
    pub fn index_of(&self, m: &QMatrix) -> Option<usize> {
        match_element(&self.elements, m, (0, 0)).ok()
    }
}

/// Closes a list of unitary generators under multiplication
/// (breadth-first, deduplicating by Frobenius distance), erroring if the
/// group would exceed `cap` elements.
pub fn group_closure(generators: &[QMatrix], cap: usize) -> Result<MatrixGroup> {
    if generators.is_empty() {
        return Err(Error::InvalidArgument("closure needs generators".into()));
    }
    let d = generators[0].rows();
    for (index, g) in generators.iter().enumerate() {
        if g.rows() != d || g.cols() != d {
            return Err(Error::InvalidArgument(format!(
                "generator {index} is {}x{}, expected {d}x{d}",
                g.rows(),
                g.cols()
            )));
        }
        let defect = g.unitary_defect();
        if defect > 1e-8 {
            return Err(Error::NonUnitaryGenerator { index, defect });
        }
    }
    let mut elements = vec![QMatrix::identity(d)];
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let product = current.mul(g);
            let is_new = !elements.iter().any(|e| {
                (e[(0, 0)] - product[(0, 0)]).abs() < DEDUP_EPS
                    && e.frobenius_dist(&product) < DEDUP_EPS
            });
            if is_new {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                elements.push(product);
            }
        }
    }
    let mult_table = build_mult_table(&elements)?;
    Ok(MatrixGroup { elements, mult_table, identity_index: 0 })
}

/// The orbit `(g v)` of a nonzero vector under the group, as a frame with
/// one column per element in element order. When the action is irreducible
/// the orbit is tight with frame bound `|G| ||v||^2 / d`.
pub fn orbit_frame(group: &MatrixGroup, v: &QMatrix, tol: Tolerance) -> Result<Frame> {
    if v.cols() != 1 || v.rows() != group.dim() {
        return Err(Error::InvalidArgument(format!(
            "orbit vector must be {}x1, got {}x{}",
            group.dim(),
            v.rows(),
            v.cols()
        )));
    }
    if v.frobenius_norm() < tol.eps() {
        return Err(Error::InvalidArgument(
            "orbit of the zero vector is not a frame".into(),
        ));
    }
    let columns: Vec<Vec<Quat>> = group
        .elements()
        .iter()
        .map(|g| g.mul(v).col_vec(0))
        .collect();
    Frame::from_columns(columns, tol)
}

/// Whether `m` (indexed by the group's element order on both axes) is a
/// group matrix: `m[g, h] = nu(g^{-1} h)` for some function `nu`.
pub fn is_group_matrix(m: &QMatrix, group: &MatrixGroup, tol: Tolerance) -> Result<bool> {
    let n = group.len();
    if m.rows() != n || m.cols() != n {
        return Err(Error::InvalidArgument(format!(
            "matrix is {}x{}, group has {n} elements",
            m.rows(),
            m.cols()
        )));
    }
    // Reference row: nu(x) = m[e, x]. Every entry must match its class.
    let e = group.identity_index();
    let scale = 1.0 + m.max_abs_entry();
    for a in 0..n {
        let a_inv = group.inverse(a);
        for b in 0..n {
            let nu = m[(e, group.mult(a_inv, b))];
            if !(m[(a, b)] - nu).is_zero(tol.eps() * scale) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The character table of the quaternion group `Q`, indexed by
/// `(1, -1, i, -i, j, -j, k, -k)`: four sign characters and four
/// quaternion-valued characters related by automorphisms of `Q`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// Group elements labelling the columns.
    pub elements: [Quat; 8],
    /// 8x8 table; row `r` holds the values of the character `chi_(r+1)`.
    pub table: QMatrix,
}

/// The eight quaternion units in table order.
pub const Q_UNITS: [Quat; 8] = [
    Quat::ONE,
    Quat::new(-1.0, 0.0, 0.0, 0.0),
    Quat::I,
    Quat::new(0.0, -1.0, 0.0, 0.0),
    Quat::J,
    Quat::new(0.0, 0.0, -1.0, 0.0),
    Quat::K,
    Quat::new(0.0, 0.0, 0.0, -1.0),
];

/// Builds the character table of the quaternion group.
pub fn q_character_table() -> CharacterTable {
    let one = Quat::ONE;
    let (i, j, k) = (Quat::I, Quat::J, Quat::K);
    let sign = |pattern: [f64; 8]| pattern.map(Quat::from_real);
    let rows: [[Quat; 8]; 8] = [
        sign([1.0; 8]),
        sign([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0]),
        sign([1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, -1.0]),
        sign([1.0, 1.0, -1.0, -1.0, -1.0, -1.0, 1.0, 1.0]),
        [one, -one, i, -i, j, -j, k, -k],
        [one, -one, j, -j, i, -i, -k, k],
        [one, -one, -i, i, k, -k, j, -j],
        [one, -one, k, -k, -i, i, -j, j],
    ];
    let table = QMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect());
    CharacterTable { elements: Q_UNITS, table }
}

/// The quaternion group as 1x1 unitary matrices in table order, with its
/// multiplication table.
pub fn quaternion_unit_group() -> MatrixGroup {
    let elements = Q_UNITS
        .iter()
        .map(|&q| QMatrix::new(1, 1, vec![q]))
        .collect();
    MatrixGroup::from_elements(elements).expect("the unit group is closed")
}

/// Harmonic frame from the quaternion-group character table: one column
/// per group element, entries the chosen character values (1-based row
/// indices), scaled by `1/sqrt(#rows)` to unit norm. Always a tight
/// group frame.
pub fn harmonic_frame(rows: &[usize], tol: Tolerance) -> Result<Frame> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument(
            "harmonic frame needs at least one character row".into(),
        ));
    }
    let mut seen = [false; 8];
    for &r in rows {
        if !(1..=8).contains(&r) {
            return Err(Error::InvalidArgument(format!(
                "character rows are numbered 1..=8, got {r}"
            )));
        }
        if seen[r - 1] {
            return Err(Error::InvalidArgument(format!(
                "character row {r} repeated"
            )));
        }
        seen[r - 1] = true;
    }
    let ct = q_character_table();
    let scale = 1.0 / (rows.len() as f64).sqrt();
    let synthesis = QMatrix::from_fn(rows.len(), 8, |r, c| {
        ct.table[(rows[r] - 1, c)] * scale
    });
    Frame::new(synthesis, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::testutil::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn assert_q_eq(a: Quat, b: Quat) {
        assert!((a - b).abs() < 1e-12, "{a} != {b}");
    }

    fn unit_mat(q: Quat) -> QMatrix {
        QMatrix::new(1, 1, vec![q])
    }

    #[test]
    fn closure_of_i_and_j_is_the_quaternion_group() {
        let group = group_closure(&[unit_mat(Quat::I), unit_mat(Quat::J)], 16).unwrap();
        assert_eq!(group.len(), 8);
        // Same set as the eight units.
        for &q in &Q_UNITS {
            assert!(group.index_of(&unit_mat(q)).is_some(), "missing {q}");
        }
        // Closure invariant: the table reproduces numeric products.
        for a in 0..8 {
            for b in 0..8 {
                let product = group.elements()[a].mul(&group.elements()[b]);
                let via_table = &group.elements()[group.mult(a, b)];
                assert!(product.frobenius_dist(via_table) < 1e-12);
            }
        }
        // Inverses and element orders behave.
        for a in 0..8 {
            assert_eq!(group.mult(a, group.inverse(a)), group.identity_index());
        }
        let orders: Vec<usize> = (0..8).map(|a| group.element_order(a)).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn closure_rejects_bad_generators_and_caps() {
        let err = group_closure(&[unit_mat(Quat::from_real(2.0))], 10);
        assert!(matches!(err, Err(Error::NonUnitaryGenerator { index: 0, .. })));
        let err = group_closure(&[unit_mat(Quat::I), unit_mat(Quat::J)], 4);
        assert!(matches!(err, Err(Error::ClosureCapExceeded { cap: 4 })));
    }

    #[test]
    fn near_duplicate_elements_are_ambiguous() {
        let eps = 1e-8f64;
        let near_one = unit_mat(Quat::new(eps.cos(), eps.sin(), 0.0, 0.0));
        let err = MatrixGroup::from_elements(vec![unit_mat(Quat::ONE), near_one]);
        assert!(matches!(err, Err(Error::AmbiguousElement { .. })));
    }

    #[test]
    fn quaternion_orbit_on_the_line_is_tight() {
        let group = quaternion_unit_group();
        let orbit = orbit_frame(&group, &unit_mat(Quat::ONE), tol()).unwrap();
        assert_eq!((orbit.dim(), orbit.len()), (1, 8));
        let report = orbit.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 8.0).abs() < 1e-12);
        // The orbit Gramian is a group matrix.
        assert!(is_group_matrix(&orbit.gramian(), &group, tol()).unwrap());
    }

    #[test]
    fn orbit_rejects_the_zero_vector() {
        let group = quaternion_unit_group();
        let err = orbit_frame(&group, &QMatrix::zeros(1, 1), tol());
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn reflection_group_of_order_128_acts_irreducibly() {
        let swap = QMatrix::from_rows(vec![
            vec![Quat::ZERO, Quat::ONE],
            vec![Quat::ONE, Quat::ZERO],
        ]);
        let diag_i = QMatrix::from_rows(vec![
            vec![Quat::ONE, Quat::ZERO],
            vec![Quat::ZERO, Quat::I],
        ]);
        let diag_j = QMatrix::from_rows(vec![
            vec![Quat::ONE, Quat::ZERO],
            vec![Quat::ZERO, Quat::J],
        ]);
        let group = group_closure(&[swap, diag_i, diag_j], 256).unwrap();
        assert_eq!(group.len(), 128);

        // Any orbit is tight: the operational check of irreducibility.
        let mut rng = rng(70);
        let v = QMatrix::column(random_unit_vector(&mut rng, 2));
        let orbit = orbit_frame(&group, &v, tol()).unwrap();
        let report = orbit.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 64.0).abs() < 1e-8);

        // The frame operator commutes with every group element.
        let s = orbit.frame_operator();
        for g in group.elements() {
            let defect = s.mul(g).frobenius_dist(&g.mul(&s));
            assert!(defect < 1e-9);
        }

        // Orbit Gramians of group frames are group matrices.
        assert!(is_group_matrix(&orbit.gramian(), &group, tol()).unwrap());
    }

    /// Sum over `t` of `u[t] * conj(v[t])` — the pairing under which
    /// orthogonality of two table rows makes the corresponding harmonic
    /// frame tight.
    fn pairing(u: impl Fn(usize) -> Quat, v: impl Fn(usize) -> Quat) -> Quat {
        (0..8).fold(Quat::ZERO, |acc, t| acc + u(t) * v(t).conj())
    }

    #[test]
    fn character_table_orthogonality_and_its_two_exceptions() {
        // Rows of the table are orthogonal for every pair except {5, 8}
        // and {6, 7} (1-based): those differ by an order-3 automorphism of
        // the quaternions, and their pairing has modulus 4, not 0. The
        // same verdicts hold with the scalar on either side.
        let ct = q_character_table();
        let exceptional = |a: usize, b: usize| {
            let (lo, hi) = (a.min(b), a.max(b));
            (lo, hi) == (4, 7) || (lo, hi) == (5, 6) // 0-based {5,8}, {6,7}
        };
        for a in 0..8 {
            for b in 0..8 {
                let forward = pairing(|t| ct.table[(a, t)], |t| ct.table[(b, t)]);
                let reversed =
                    (0..8).fold(Quat::ZERO, |acc, t| {
                        acc + ct.table[(b, t)].conj() * ct.table[(a, t)]
                    });
                if a == b {
                    assert_q_eq(forward, Quat::from_real(8.0));
                    assert_q_eq(reversed, Quat::from_real(8.0));
                } else if exceptional(a, b) {
                    assert!((forward.abs() - 4.0).abs() < 1e-12, "({a},{b})");
                    assert!((reversed.abs() - 4.0).abs() < 1e-12, "({a},{b})");
                } else {
                    assert_q_eq(forward, Quat::ZERO);
                    assert_q_eq(reversed, Quat::ZERO);
                }
            }
        }
    }

    #[test]
    fn character_table_column_orthogonality_pattern() {
        // Columns pair orthogonally exactly when they share an axis class
        // ({q, -q}), when one lies over {1, -1} and the other over
        // {k, -k}, or when one lies over {i, -i} and the other over
        // {j, -j}. The 16 remaining pairs are not orthogonal.
        let ct = q_character_table();
        let class = |c: usize| c / 2; // 0: +-1, 1: +-i, 2: +-j, 3: +-k
        for a in 0..8 {
            for b in (a + 1)..8 {
                let value = pairing(|t| ct.table[(t, a)], |t| ct.table[(t, b)]);
                let orthogonal = class(a) == class(b)
                    || (class(a) == 0 && class(b) == 3)
                    || (class(a) == 1 && class(b) == 2);
                if orthogonal {
                    assert_q_eq(value, Quat::ZERO);
                } else {
                    assert!(value.abs() > 1.0, "({a},{b}) unexpectedly orthogonal");
                }
            }
        }
    }

    #[test]
    fn character_values_multiply_along_the_group() {
        // Each table row is multiplicative: chi(p) chi(q) = chi(pq).
        let ct = q_character_table();
        let group = quaternion_unit_group();
        for r in 0..8 {
            for p in 0..8 {
                for q in 0..8 {
                    let pq = group.mult(p, q);
                    assert_q_eq(ct.table[(r, p)] * ct.table[(r, q)], ct.table[(r, pq)]);
                }
            }
        }
    }

    #[test]
    fn harmonic_rows_one_and_five_have_the_printed_gramian() {
        let f = harmonic_frame(&[1, 5], tol()).unwrap();
        assert_eq!((f.dim(), f.len()), (2, 8));
        f.check_unit_columns().unwrap();
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 4.0).abs() < 1e-12);
        // G[p, q] = (1 + p^-1 q) / 2 exactly.
        let g = f.gramian();
        for p in 0..8 {
            for q in 0..8 {
                let expected = (Quat::ONE + Q_UNITS[p].conj() * Q_UNITS[q]) * 0.5;
                assert_q_eq(g[(p, q)], expected);
            }
        }
        // Off-diagonal row multiset: the orthogonal partner once, angle
        // 1/2 to the six others.
        for p in 0..8 {
            let mut zeros = 0;
            let mut halves = 0;
            for q in 0..8 {
                if p == q {
                    continue;
                }
                let m = g[(p, q)].abs_sq();
                if m.abs() < 1e-12 {
                    zeros += 1;
                } else if (m - 0.5).abs() < 1e-12 {
                    halves += 1;
                }
            }
            assert_eq!((zeros, halves), (1, 6));
        }
        // It is a group matrix for Q.
        let group = quaternion_unit_group();
        assert!(is_group_matrix(&g, &group, tol()).unwrap());
    }

    #[test]
    fn harmonic_single_row_is_a_repeated_unit_scalar() {
        let f = harmonic_frame(&[1], tol()).unwrap();
        assert_eq!((f.dim(), f.len()), (1, 8));
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 8.0).abs() < 1e-12);
    }

    #[test]
    fn harmonic_rows_five_and_six_have_two_angles() {
        let f = harmonic_frame(&[5, 6], tol()).unwrap();
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        // Per row: the antipodal copy (same line), four at angle 1/2, two
        // orthogonal.
        let g = f.gramian();
        for p in 0..8 {
            let (mut ones, mut halves, mut zeros) = (0, 0, 0);
            for q in 0..8 {
                if p == q {
                    continue;
                }
                let m = g[(p, q)].abs_sq();
                if (m - 1.0).abs() < 1e-12 {
                    ones += 1;
                } else if (m - 0.5).abs() < 1e-12 {
                    halves += 1;
                } else if m < 1e-12 {
                    zeros += 1;
                }
            }
            assert_eq!((ones, halves, zeros), (1, 4, 2));
        }
    }

    #[test]
    fn harmonic_frame_rejects_bad_rows() {
        assert!(harmonic_frame(&[], tol()).is_err());
        assert!(harmonic_frame(&[0], tol()).is_err());
        assert!(harmonic_frame(&[9], tol()).is_err());
        assert!(harmonic_frame(&[3, 3], tol()).is_err());
    }

    /// Eight unit vectors in `H^2` read off a pair of table columns.
    fn column_pair_frame(c1: usize, c2: usize) -> Frame {
        let ct = q_character_table();
        let scale = 1.0 / 2.0f64.sqrt();
        let columns: Vec<Vec<Quat>> = (0..8)
            .map(|r| vec![ct.table[(r, c1)] * scale, ct.table[(r, c2)] * scale])
            .collect();
        Frame::from_columns(columns, tol()).unwrap()
    }

    #[test]
    fn orthogonal_column_pairs_give_tight_frames_that_are_not_group_matrices() {
        // Columns over i and j are orthogonal, so their frame is tight;
        // its Gramian is nevertheless not a group matrix.
        let f = column_pair_frame(2, 4);
        f.check_unit_columns().unwrap();
        let report = f.tightness().unwrap();
        assert!(report.is_tight);
        assert!((report.frame_bound - 4.0).abs() < 1e-12);
        let group = quaternion_unit_group();
        assert!(!is_group_matrix(&f.gramian(), &group, tol()).unwrap());
        // Same story for the columns over 1 and k.
        let g = column_pair_frame(0, 6);
        assert!(g.tightness().unwrap().is_tight);
        assert!(!is_group_matrix(&g.gramian(), &group, tol()).unwrap());
    }

    #[test]
    fn columns_one_and_three_are_unit_norm_but_not_tight() {
        // The pair (1, i) is one of the non-orthogonal column pairs: its
        // frame has frame operator 4I plus an off-diagonal -(j+k)/2, so it
        // is not tight (and its Gramian is still not a group matrix).
        let f = column_pair_frame(0, 2);
        f.check_unit_columns().unwrap();
        let report = f.tightness().unwrap();
        assert!(!report.is_tight);
        let s = f.frame_operator();
        let expected_offdiag = Quat::new(0.0, 0.0, -0.5, -0.5);
        assert!((s[(0, 1)] - expected_offdiag).abs() < 1e-12);
        let group = quaternion_unit_group();
        assert!(!is_group_matrix(&f.gramian(), &group, tol()).unwrap());
    }

    #[test]
    fn random_hermitian_matrices_are_not_group_matrices() {
        let group = quaternion_unit_group();
        let mut rng = rng(71);
        let a = random_matrix(&mut rng, 8, 8);
        let h = a.add(&a.adjoint()).scale(0.5);
        assert!(!is_group_matrix(&h, &group, tol()).unwrap());
        // Size mismatch is an error, not a verdict.
        assert!(is_group_matrix(&QMatrix::identity(3), &group, tol()).is_err());
    }
}
