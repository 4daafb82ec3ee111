use super::Ring;
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponents of `(u, v, γ)`; the derived ordering is lexicographic.
pub type Exponent = [i32; 3];

const ZERO_EXP: Exponent = [0, 0, 0];

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Sparse Laurent polynomial in `u`, `v`, `γ` with coefficients in `C`.
///
/// No stored coefficient is zero, so the zero polynomial has no terms and
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Exponent, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn monomial(coeff: C, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(coeff: C) -> Self {
        Self::monomial(coeff, ZERO_EXP)
    }

    pub fn from_int(value: i64) -> Self {
        Self::constant(C::from_i64(value))
    }

    /// `u^a v^b γ^c` with coefficient 1.
    pub fn uvg(a: i32, b: i32, c: i32) -> Self {
        Self::monomial(C::one(), [a, b, c])
    }

    pub fn u() -> Self {
        Self::uvg(1, 0, 0)
    }

    pub fn v() -> Self {
        Self::uvg(0, 1, 0)
    }

    pub fn gamma() -> Self {
        Self::uvg(0, 0, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, &c);
        }
        out
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &Exponent) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// The constant coefficient, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&ZERO_EXP).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                c.add_assign_ref(coeff);
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.neg_ref());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            return rhs.mul_monomial(c, e);
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms.iter().next().unwrap();
            return self.mul_monomial(c, e);
        }
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), &ca.mul_ref(cb));
            }
        }
        out
    }

    /// Multiplication by `coeff · u^e0 v^e1 γ^e2`.
    pub fn mul_monomial(&self, coeff: &C, exp: &Exponent) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let p = c.mul_ref(coeff);
            if !p.is_zero() {
                terms.insert(add_exp(e, exp), p);
            }
        }
        LaurentPoly { terms }
    }

    pub fn scalar_mul(&self, coeff: &C) -> Self {
        self.mul_monomial(coeff, &ZERO_EXP)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(if self.terms.is_empty() {
                Error::DivisionByZero
            } else {
                Error::NotMonomial(self.terms.len())
            });
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv = c.inverse().ok_or(Error::DivisionByZero)?;
        Ok(Self::monomial(inv, [-e[0], -e[1], -e[2]]))
    }

    /// Range of the `γ` exponent over all terms, `None` for zero.
    pub fn gamma_degree_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[2]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), g| (lo.min(g), hi.max(g))))
    }

    pub fn is_gamma_free(&self) -> bool {
        self.terms.keys().all(|e| e[2] == 0)
    }

    /// The homogeneous part of degree `deg` in `γ`.
    pub fn gamma_part(&self, deg: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[2] == deg)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Numeric value at `(u0, v0, γ0)`, with `ζ_d ↦ exp(2πi/d)`.
    pub fn eval_complex(&self, u0: Complex64, v0: Complex64, g0: Complex64) -> Result<Complex64> {
        let point = [u0, v0, g0];
        let mut acc = Complex64::zero();
        for (e, c) in &self.terms {
            let mut term = c.to_complex();
            for (x, &k) in point.iter().zip(e) {
                if k < 0 && x.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                term *= x.powi(k);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<C: Ring> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<C: Ring> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<C: Ring> Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<'a, C: Ring> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        self.add_ref(rhs)
    }
}

impl<'a, C: Ring> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self.sub_ref(rhs)
    }
}

impl<'a, C: Ring> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn add_ref(&self, rhs: &Self) -> Self {
        LaurentPoly::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        LaurentPoly::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        LaurentPoly::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly::neg_ref(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        LaurentPoly::add_assign_ref(self, rhs)
    }
    fn from_i64(value: i64) -> Self {
        Self::from_int(value)
    }
    fn inverse(&self) -> Option<Self> {
        self.monomial_inverse().ok()
    }
    /// Value at `u = v = γ = 1`.
    fn to_complex(&self) -> Complex64 {
        self.terms.values().map(Ring::to_complex).sum()
    }
}
