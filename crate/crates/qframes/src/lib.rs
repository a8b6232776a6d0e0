//! Finite tight frames, equiangular lines, and projective symmetry over the
//! quaternions.
//!
//! The crate works with right quaternionic vector spaces: vectors are columns,
//! matrices act from the left, and scalars multiply vectors on the right. The
//! inner product `<u, v> = sum_m conj(v_m) u_m` is linear in its first
//! argument with right scalars passing through.

pub mod embed;
pub mod equiv;
pub mod error;
pub mod frames;
pub mod groupframes;
pub mod lines;
pub mod qlinalg;
pub mod qmatfile;
pub mod quat;

pub use equiv::{
    canonical_cycles, cycle_basis, equivalence_verdict, frame_graph, m_product,
    necessary_projective_equivalent,
    permutation_is_even, projective_symmetry_group, recover_phase, recover_unitary,
    reduced_m_product, symmetry_candidates, EquivalenceVerdict, FrameGraph, MProduct,
    SymmetryCertificate, SymmetryGroupReport, DEFAULT_SEARCH_CAP, MAX_CYCLE_LEN,
};
pub use error::{Error, Result};
pub use frames::{unitarily_equivalent, FieldClass, Frame, TightnessReport};
pub use groupframes::{
    group_closure, harmonic_frame, is_group_matrix, orbit_frame, q_character_table,
    quaternion_unit_group, CharacterTable, MatrixGroup,
};
pub use lines::{
    angle_report, catalog, etf_size_admits, etf_size_range, hopf, hopf_lines, is_equichordal,
    is_equiisoclinic,
    max_angle, max_lines, projection_of_span, welch_angle, AngleReport, ProjectionSet,
    SubspaceReport,
};
pub use qlinalg::{gram_schmidt_extend, inner_product, inner_product_slices, QMatrix, Tolerance};
pub use qmatfile::{QMatFile, QMAT_VERSION};
pub use quat::{ComplexPair, Quat};
