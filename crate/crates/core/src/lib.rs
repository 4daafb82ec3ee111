//! Exact computations in Yokonuma–Hecke algebras `Y(d,n)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactnum`]: rationals, the cyclotomic field `Q(ζ_d)` and sparse Laurent
//!   polynomials in `u`, `v`, `γ`. The number types are generic over the
//!   underlying scalar; the aliases below fix the exact choice used elsewhere.
//! - [`permcomp`]: permutations, compositions, characters of `(Z/dZ)^n`,
//!   orbits and minimal coset representatives.
//! - [`hecke`]: the type-A Iwahori–Hecke algebra and its normalized Markov trace.
//! - [`yokonuma`]: `Y(d,n)` in the `t^k g̃_w` basis, with the idempotent view.
//! - [`isomap`]: the isomorphism with a direct sum of matrix algebras over
//!   parabolic Hecke algebras, and the inclusion `Y(d,n) ⊂ Y(d,n+1)` on the
//!   matrix side.
//! - [`traces`]: Markov traces on the tower `{Y(d,n)}` and symmetrizing forms.
//! - [`links`]: framed braid words and the resulting link invariants.

pub mod error;
pub mod exactnum;
pub mod hecke;
pub mod isomap;
pub mod links;
pub mod permcomp;
pub mod traces;
pub mod yokonuma;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Element of `Q(ζ_d)` with exact rational coordinates.
pub type Cyclo = exactnum::Cyclotomic<Rat>;

/// Laurent polynomial in `u`, `v`, `γ` over [`Cyclo`].
pub type LPoly = exactnum::LaurentPoly<Cyclo>;

/// Iwahori–Hecke algebra element over [`LPoly`].
pub type HeckeElem = hecke::HeckeElem<Cyclo>;

pub use exactnum::{cyclotomic_polynomial, root_power, Ring};
pub use hecke::ParabolicElem;
pub use isomap::BlockMatrix;
pub use links::FramedBraidWord;
pub use permcomp::{Character, Composition, Perm};
pub use traces::{ESystemParams, TraceSpec};
pub use yokonuma::{EBasisElem, Generator, Side, YElem};
