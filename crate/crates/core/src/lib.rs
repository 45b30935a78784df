//! Exact computation of the t-invariant (the order-5 Turaev-Viro invariant
//! restricted to integer colors) for lens spaces and small Seifert manifolds.
//!
//! Two independent routes produce every value:
//!
//! * the tensor route ([`SeifertPresentation::t_invariant`]) contracts the
//!   cubic tensor of the three-holed polyhedron with one fiber vector per
//!   singular fiber;
//! * the closed form ([`closed_form::t_closed`]) classifies the presentation
//!   mod 5 and reads the value off a small table.
//!
//! [`closed_form::reconcile`] compares them on all 364 class triples.

pub mod closed_form;
pub mod error;
pub mod fiber;
pub mod golden;
pub mod homology;
pub mod reference;
pub mod seifert;
pub mod selfcheck;
pub mod sweep;
pub mod tensors;

pub use closed_form::{classify, lens_t, reconcile, t_closed, TheoremCase, UnitConvention};
pub use error::{Error, Result};
pub use fiber::{class_of, class_vector, fiber_vector, fiber_word, FiberClass, FiberWord, Letter};
pub use golden::GoldenNum;
pub use homology::{smith_normal_form, AbelianGroup};
pub use seifert::{lens_reduce, parse_presentation, Fiber, LensParams, SeifertPresentation};
pub use sweep::{sweep_all_classes, SweepTable};
pub use tensors::{constants, contract3, mat_vec, orbit, Constants, Cubic5, Mat5, Vec5};
