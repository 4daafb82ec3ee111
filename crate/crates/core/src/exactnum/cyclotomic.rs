use super::Ring;
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<[i64]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Divides `num` by the monic polynomial `den` (ascending coefficients).
/// The division must be exact.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn phi_poly(d: u32) -> Arc<[i64]> {
    assert!(d >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().expect("cache poisoned").get(&d) {
        return p.clone();
    }
    let mut poly = vec![0i64; d as usize + 1];
    poly[0] = -1;
    poly[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            poly = div_exact_monic(&poly, &phi_poly(e));
        }
    }
    let poly: Arc<[i64]> = poly.into();
    phi_cache()
        .write()
        .expect("cache poisoned")
        .insert(d, poly.clone());
    poly
}

/// Coefficients (ascending powers of `x`) of the `d`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: u32) -> Vec<i64> {
    phi_poly(d).to_vec()
}

/// Euler's totient, the degree of `Q(ζ_d)` over `Q`.
pub fn euler_phi(d: u32) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

/// Reduces a polynomial in `ζ_d` modulo `Φ_d`; the result has exactly
/// `φ(d)` coefficients.
fn reduce<T: Ring>(d: u32, mut poly: Vec<T>) -> Vec<T> {
    let phi = phi_poly(d);
    let deg = phi.len() - 1;
    if poly.len() < deg {
        poly.resize(deg, T::zero());
        return poly;
    }
    for i in (deg..poly.len()).rev() {
        if poly[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[i], T::zero());
        let base = i - deg;
        for (j, &pj) in phi[..deg].iter().enumerate() {
            match pj {
                0 => {}
                1 => poly[base + j] = poly[base + j].sub_ref(&c),
                -1 => poly[base + j].add_assign_ref(&c),
                k => poly[base + j] = poly[base + j].sub_ref(&c.mul_ref(&T::from_i64(k))),
            }
        }
    }
    poly.truncate(deg);
    poly
}

/// An element of the cyclotomic field `Q(ζ_d)` stored in the power basis
/// `1, ζ, …, ζ^{φ(d)-1}`, with `ζ = exp(2πi/d)`.
///
/// Values lying in the prime field are always stored with order 1, so that a
/// rational number has a single representation regardless of the field it
/// was computed in. Arithmetic between two non-rational values of different
/// orders happens in the compositum `Q(ζ_lcm)`.
#[derive(Clone)]
pub struct Cyclotomic<T> {
    order: u32,
    coeffs: Vec<T>,
}

impl<T: Ring> Cyclotomic<T> {
    fn canonical(order: u32, mut coeffs: Vec<T>) -> Self {
        if order == 1 || coeffs.iter().skip(1).all(Zero::is_zero) {
            coeffs.truncate(1);
            if coeffs.is_empty() {
                coeffs.push(T::zero());
            }
            return Cyclotomic { order: 1, coeffs };
        }
        Cyclotomic { order, coeffs }
    }

    pub fn from_scalar(value: T) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![value],
        }
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_scalar(T::from_i64(value))
    }

    /// Builds `Σ coeffs[k] ζ_d^k`, reducing modulo `Φ_d`.
    pub fn from_coeffs(d: u32, coeffs: Vec<T>) -> Self {
        Self::canonical(d, reduce(d, coeffs))
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn zeta_power(d: u32, k: i64) -> Self {
        let e = k.rem_euclid(d as i64) as usize;
        let mut poly = vec![T::zero(); e + 1];
        poly[e] = T::one();
        Self::from_coeffs(d, poly)
    }

    /// Order of the field the value is stored in (1 for rationals).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_scalar(&self) -> Option<&T> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// Coordinates in the power basis of `Q(ζ_target)`; `target` must be a
    /// multiple of the stored order.
    pub fn coeffs_at_order(&self, target: u32) -> Vec<T> {
        assert!(
            target.is_multiple_of(self.order),
            "cannot view Q(ζ_{}) inside Q(ζ_{})",
            self.order,
            target
        );
        if self.order == target {
            return self.coeffs.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![T::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(target, poly)
    }

    fn common_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (1, b) => b,
            (a, 1) => a,
            (a, b) => a.lcm(&b),
        }
    }

    fn scale(&self, s: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.mul_ref(s)).collect();
        Self::canonical(self.order, coeffs)
    }

    fn poly_inverse(&self) -> Option<Self> {
        let d = self.order;
        let modulus: Vec<T> = phi_poly(d).iter().map(|&c| T::from_i64(c)).collect();
        let f = trim(self.coeffs.clone());
        if f.is_empty() {
            return None;
        }
        // extended Euclid in Q[x]: track s with s·f ≡ r (mod Φ_d)
        let (mut r0, mut r1) = (modulus, f);
        let (mut s0, mut s1) = (Vec::<T>::new(), vec![T::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1)?;
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c_inv = r0[0].inverse()?;
        let s: Vec<T> = s0.iter().map(|c| c.mul_ref(&c_inv)).collect();
        Some(Self::from_coeffs(d, s))
    }
}

fn trim<T: Ring>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_assign_ref(&x.mul_ref(y));
        }
    }
    trim(out)
}

fn poly_sub<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.sub_ref(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.neg_ref(),
            (None, None) => T::zero(),
        })
        .collect();
    trim(out)
}

fn poly_divmod<T: Ring>(num: &[T], den: &[T]) -> Option<(Vec<T>, Vec<T>)> {
    let lead_inv = den.last()?.inverse()?;
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return Some((Vec::new(), trim(rem)));
    }
    let dd = den.len() - 1;
    let mut quot = vec![T::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].mul_ref(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(dj));
        }
        quot[i] = c;
    }
    rem.truncate(dd);
    Some((trim(quot), trim(rem)))
}

/// `ξ_a^s` where `ξ_a = ζ_d^{a-1}`.
pub fn root_power<T: Ring>(d: u32, a: usize, s: i64) -> Result<Cyclotomic<T>> {
    if a == 0 || a > d as usize {
        return Err(Error::LetterOutOfRange { index: a, d });
    }
    Ok(Cyclotomic::zeta_power(d, (a as i64 - 1) * s))
}

impl<T: Ring> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        if self.order == 1 || other.order == 1 {
            // canonical form puts every rational at order 1
            return false;
        }
        let l = self.common_order(other);
        self.coeffs_at_order(l) == other.coeffs_at_order(l)
    }
}

impl<T: Ring> fmt::Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(d={}, {:?})", self.order, self.coeffs)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        write_zeta_sum(f, &self.coeffs)
    }
}

pub(crate) fn write_zeta_sum<T: Ring + fmt::Display>(
    f: &mut impl fmt::Write,
    coeffs: &[T],
) -> fmt::Result {
    let mut first = true;
    f.write_char('(')?;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match k {
            0 => write!(f, "{c}")?,
            1 => write!(f, "{c}*z")?,
            _ => write!(f, "{c}*z^{k}")?,
        }
    }
    if first {
        f.write_char('0')?;
    }
    f.write_char(')')
}

impl<T: Ring> Zero for Cyclotomic<T> {
    fn zero() -> Self {
        Self::from_scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<T: Ring> One for Cyclotomic<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Ring> Ring for Cyclotomic<T> {
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.order == rhs.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect();
            return Self::canonical(self.order, coeffs);
        }
        let l = self.common_order(rhs);
        let a = self.coeffs_at_order(l);
        let b = rhs.coeffs_at_order(l);
        let coeffs = a.iter().zip(&b).map(|(x, y)| x.add_ref(y)).collect();
        Self::canonical(l, coeffs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if let Some(s) = rhs.as_scalar() {
            return self.scale(s);
        }
        if let Some(s) = self.as_scalar() {
            return rhs.scale(s);
        }
        let l = self.common_order(rhs);
        let a = self.coeffs_at_order(l);
        let b = rhs.coeffs_at_order(l);
        let mut prod = vec![T::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j].add_assign_ref(&x.mul_ref(y));
                }
            }
        }
        Self::canonical(l, reduce(l, prod))
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    fn from_i64(value: i64) -> Self {
        Self::from_int(value)
    }

    fn inverse(&self) -> Option<Self> {
        match self.as_scalar() {
            Some(s) => s.inverse().map(Self::from_scalar),
            None => self.poly_inverse(),
        }
    }

    fn to_complex(&self) -> Complex64 {
        let step = std::f64::consts::TAU / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_complex() * Complex64::from_polar(1.0, step * k as f64))
            .sum()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl<T: Ring> $trait for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Self) -> Self::Output {
                self.$impl_fn(&rhs)
            }
        }
        impl<'a, T: Ring> $trait<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Self) -> Self::Output {
                self.$impl_fn(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<T: Ring> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Self::Output {
        self.neg_ref()
    }
}
