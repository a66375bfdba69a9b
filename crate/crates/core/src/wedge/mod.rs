//! The quotient set of unordered `pi_1(M)` pairs, its group ring and the
//! universality homomorphism.

pub mod class;
pub mod gmap;
pub mod ring;

pub use class::{BaseWedgeClass, WedgeClass};
pub use gmap::{
    apply_g, apply_g_class, fiber_basis, fiber_order_index, g_matrix, kernel_check,
    kernel_check_report, FiberBasis, FiberCase, KernelReport,
};
pub use ring::InvariantValue;
