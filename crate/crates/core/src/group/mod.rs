//! Fundamental-group arithmetic for the base surface, the bundle total space
//! and the spherized tangent bundle: normal forms, the word problem,
//! conjugacy with witnesses, centralizers and fiber shifts.

pub mod context;
pub mod conj;
pub mod dehn;
pub mod elem;
pub mod word;

pub use conj::{
    are_conjugate_base, are_conjugate_total, centralizer_root, elem_conj_canon, fiber_shift,
    word_conj_canon, ConjClass,
};
pub use context::{BundleSpec, SurfaceKind, SurfaceSpec};
pub use elem::{BundleElement, Token};
pub use word::{Letter, Word};
