//! Exact characters of simple highest-weight modules over the affine Lie
//! algebra in Deligne's category `rep(GL_t)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: partitions, bipartitions, Frobenius coordinates, hooks.
//! * [`stable_ring`]: the stable Grothendieck ring of `rep(GL_t)` (tensor
//!   products, symmetric powers of the adjoint object, PBW components).
//! * [`affine_roots`]: the infinite-rank affine weight lattices `A∞`, `D∞`, `C∞`.
//! * [`weyl_slices`]: X-reduced affine Weyl group elements labelled by slices.
//! * [`characters`]: q-series characters (Verma modules, simple modules,
//!   the denominator and Garland formulas).
//! * [`dimensions`]: categorical dimensions and the Nekrasov-Okounkov identity.
//! * [`finite_oracle`]: finite-rank `GL_n` ground truth used for validation.

pub mod affine_roots;
pub mod characters;
pub mod dimensions;
mod error;
pub mod finite_oracle;
pub mod partitions;
pub mod stable_ring;
pub mod weyl_slices;

pub use affine_roots::{CaseTag, Weight};
pub use characters::CharacterSeries;
pub use dimensions::{DimensionExpr, XPolynomial};
pub use error::{Error, Result};
pub use finite_oracle::RationalWeight;
pub use partitions::{Bipartition, FrobeniusCoords, Partition};
pub use stable_ring::KElement;
pub use weyl_slices::{RootSet, SliceGL, SliceO, SliceSp};
