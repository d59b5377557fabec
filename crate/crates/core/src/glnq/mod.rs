//! Conjugacy classes, square roots and double cosets in `GL_n(F_q)`.

pub mod classes;
pub mod counts;
pub mod cycle_index;
pub mod factor;
pub mod field;

pub use classes::{
    c_d, class_size_inverse_z, class_square, class_type, enumerate_classes, enumerate_types,
    gl_order, gl_sq_count, gl_sq_counts, phi_squared, type_count, ClassType, GLClass,
};
pub use counts::{
    a_t_lambda_by_type, conjecture_poly, count_diagonal_double_cosets, count_double_cosets_gl,
    count_gl_young_double_cosets, count_pn_double_cosets, count_pn_self_inverse,
    count_self_inverse_gl, prime_powers, young_type_coefficient, ConjectureReport,
};
pub use cycle_index::{
    a_t_lambda, cycle_class, gl_young_order, permutation_class, zindex_gl, zindex_gl_young,
    zindex_perm_matrices, GLCycleIndex,
};
pub use factor::{factor, irreducibles, is_irreducible};
pub use field::{FieldSpec, FqPoly};
