//! Exact number layer: scalar rings, `Q(ζ_d)` and Laurent polynomials in
//! `u`, `v`, `γ`.
//!
//! Everything here is generic over a scalar implementing [`Ring`]. The rest of
//! the crate works with the exact instantiation (`Cyclotomic<BigRational>`);
//! `f64` and `Ratio<i64>` instantiations are available for quick numeric
//! experiments and for cross-checking.

mod cyclotomic;
mod format;
mod laurent;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, root_power, Cyclotomic};
pub use format::{machine_lines, parse_lpoly};
pub use laurent::{Exponent, LaurentPoly};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Commutative ring operations used by the sparse containers of this crate.
///
/// Arithmetic is by reference so that big-integer scalars are not cloned on
/// every operation.
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn from_i64(value: i64) -> Self;

    /// Multiplicative inverse, `None` for zero (and for non-units).
    fn inverse(&self) -> Option<Self>;

    /// Numeric value, with `ζ_d ↦ exp(2πi/d)`.
    fn to_complex(&self) -> Complex64;
}

macro_rules! scalar_ring {
    ($t:ty, $from:expr, $f64:expr) => {
        impl Ring for $t {
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self.clone()
            }
            fn add_assign_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }
            fn from_i64(value: i64) -> Self {
                $from(value)
            }
            fn inverse(&self) -> Option<Self> {
                if self.is_zero() {
                    None
                } else {
                    Some(<$t>::one() / self.clone())
                }
            }
            fn to_complex(&self) -> Complex64 {
                Complex64::new($f64(self), 0.0)
            }
        }
    };
}

scalar_ring!(
    Ratio<BigInt>,
    |v: i64| Ratio::from_integer(BigInt::from(v)),
    |x: &Ratio<BigInt>| x.to_f64().unwrap_or(f64::NAN)
);
scalar_ring!(Ratio<i64>, Ratio::from_integer, |x: &Ratio<i64>| *x.numer()
    as f64
    / *x.denom() as f64);
scalar_ring!(f64, |v: i64| v as f64, |x: &f64| *x);

/// Adds `value` to the entry at `key`, removing the entry if it cancels.
pub(crate) fn add_into<K: Ord, R: Ring>(
    map: &mut std::collections::BTreeMap<K, R>,
    key: K,
    value: &R,
) {
    use std::collections::btree_map::Entry;
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign_ref(value);
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(value.clone());
        }
    }
}
