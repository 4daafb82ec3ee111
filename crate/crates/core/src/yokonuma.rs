//! The Yokonuma–Hecke algebra `Y(d,n)` over `LPoly`, stored in the basis
//! `t_1^{k_1}⋯t_n^{k_n} g̃_w`, together with the idempotent basis
//! `E_χ g̃_w`.
//!
//! Conventions: `g̃_i = u⁻¹ g_i`, `g_i² = u² + v e_i g_i`,
//! `e_i = (1/d) Σ_s t_i^s t_{i+1}^{-s}` and `g̃_w t_j = t_{w(j)} g̃_w`.

use crate::error::{Error, Result};
use crate::exactnum::{add_into, root_power};
use crate::permcomp::{Character, Composition, Perm};
use crate::{Cyclo, LPoly, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Framing exponents `(k_1, …, k_n)`, each reduced mod `d`.
pub type Framing = Vec<u8>;

/// A generator of `Y(d,n)` (or a power `t_j^k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `t_j^k`.
    T { j: usize, k: i64 },
    /// `g_i`.
    G(usize),
    /// `g_i⁻¹`.
    GInv(usize),
    /// `g̃_i = u⁻¹ g_i`.
    GTilde(usize),
    /// `e_i`.
    E(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element `Σ c_{k,w} t^k g̃_w` of `Y(d,n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct YElem {
    d: u32,
    n: usize,
    terms: BTreeMap<(Framing, Perm), LPoly>,
}

fn one_over(d: u32) -> Cyclo {
    Cyclo::from_scalar(Rat::new(1.into(), (d as i64).into()))
}

impl YElem {
    pub fn zero(d: u32, n: usize) -> Self {
        assert!(d >= 1, "d must be positive");
        YElem {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: u32, n: usize) -> Self {
        Self::scalar(d, n, LPoly::one())
    }

    pub fn scalar(d: u32, n: usize, c: LPoly) -> Self {
        Self::monomial(d, vec![0; n], Perm::identity(n), c)
    }

    /// `c · t^k g̃_w`; the framing is reduced mod `d`.
    pub fn monomial(d: u32, framing: Framing, w: Perm, c: LPoly) -> Self {
        let n = w.n();
        assert_eq!(framing.len(), n, "framing length");
        let framing = framing.into_iter().map(|k| k % d as u8).collect();
        let mut x = Self::zero(d, n);
        add_into(&mut x.terms, (framing, w), &c);
        x
    }

    /// `g̃_w`.
    pub fn g_tilde(d: u32, w: Perm) -> Self {
        let n = w.n();
        Self::monomial(d, vec![0; n], w, LPoly::one())
    }

    /// `g_w = u^{ℓ(w)} g̃_w`.
    pub fn g_word(d: u32, w: Perm) -> Self {
        let l = w.length() as i32;
        let n = w.n();
        Self::monomial(d, vec![0; n], w, LPoly::uvg(l, 0, 0))
    }

    /// The image of a single generator.
    pub fn generator(d: u32, n: usize, gen: Generator) -> Result<Self> {
        Self::one(d, n).mul_gen(gen, Side::Right)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Framing, Perm), &LPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, framing: &[u8], w: &Perm) -> LPoly {
        self.terms
            .get(&(framing.to_vec(), w.clone()))
            .cloned()
            .unwrap_or_else(LPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::OrderMismatch {
                expected: self.d,
                got: rhs.d,
            });
        }
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        Ok(())
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        debug_assert!(self.check_same(rhs).is_ok());
        for (key, c) in &rhs.terms {
            add_into(&mut self.terms, key.clone(), c);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&LPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LPoly) -> Self {
        let mut out = Self::zero(self.d, self.n);
        for (key, x) in &self.terms {
            add_into(&mut out.terms, key.clone(), &x.mul_ref(c));
        }
        out
    }

    fn check_gen(&self, gen: Generator) -> Result<()> {
        let n = self.n;
        match gen {
            Generator::T { j, .. } if j == 0 || j > n => {
                Err(Error::GeneratorOutOfRange { index: j, n })
            }
            Generator::G(i) | Generator::GInv(i) | Generator::GTilde(i) | Generator::E(i)
                if i == 0 || i >= n =>
            {
                Err(Error::GeneratorOutOfRange { index: i, n })
            }
            _ => Ok(()),
        }
    }

    fn shift(&self, k: &[u8], pos: usize, s: i64) -> Framing {
        let d = self.d as i64;
        let mut k = k.to_vec();
        k[pos - 1] = ((k[pos - 1] as i64 + s).rem_euclid(d)) as u8;
        k
    }

    /// Adds `c/d · Σ_s t^k t_p^s t_q^{-s} g̃_w` to `out`.
    fn push_e(
        &self,
        out: &mut BTreeMap<(Framing, Perm), LPoly>,
        k: &[u8],
        p: usize,
        q: usize,
        w: &Perm,
        c: &LPoly,
    ) {
        let c = c.scalar_mul(&one_over(self.d));
        for s in 0..self.d as i64 {
            let k2 = self.shift(&self.shift(k, p, s), q, -s);
            add_into(out, (k2, w.clone()), &c);
        }
    }

    /// Product with a single generator on the given side.
    pub fn mul_gen(&self, gen: Generator, side: Side) -> Result<Self> {
        self.check_gen(gen)?;
        let uinv_v = LPoly::uvg(-1, 1, 0);
        let mut out = BTreeMap::new();
        match gen {
            Generator::G(i) => {
                return Ok(self.mul_gen(Generator::GTilde(i), side)?.scale(&LPoly::u()))
            }
            Generator::GInv(i) => {
                // g_i⁻¹ = u⁻¹ g̃_i - u⁻² v e_i
                let a = self
                    .mul_gen(Generator::GTilde(i), side)?
                    .scale(&LPoly::uvg(-1, 0, 0));
                let b = self
                    .mul_gen(Generator::E(i), side)?
                    .scale(&LPoly::uvg(-2, 1, 0));
                return Ok(a.sub(&b));
            }
            Generator::T { j, k: s } => {
                for ((k, w), c) in &self.terms {
                    let pos = match side {
                        Side::Left => j,
                        Side::Right => w.image(j),
                    };
                    add_into(&mut out, (self.shift(k, pos, s), w.clone()), c);
                }
            }
            Generator::E(i) => {
                for ((k, w), c) in &self.terms {
                    let (p, q) = match side {
                        Side::Left => (i, i + 1),
                        Side::Right => (w.image(i), w.image(i + 1)),
                    };
                    self.push_e(&mut out, k, p, q, w, c);
                }
            }
            Generator::GTilde(i) => {
                for ((k, w), c) in &self.terms {
                    match side {
                        Side::Right => {
                            let ws = w.mul_simple_right(i);
                            add_into(&mut out, (k.clone(), ws), c);
                            if !w.right_ascent(i) {
                                // g̃_w g̃_i = g̃_{ws_i} + u⁻¹v g̃_w e_i
                                let cv = c.mul_ref(&uinv_v);
                                self.push_e(&mut out, k, w.image(i), w.image(i + 1), w, &cv);
                            }
                        }
                        Side::Left => {
                            let mut k2 = k.clone();
                            k2.swap(i - 1, i);
                            let sw = w.mul_simple_left(i);
                            add_into(&mut out, (k2.clone(), sw), c);
                            if !w.left_ascent(i) {
                                // g̃_i g̃_w = g̃_{s_i w} + u⁻¹v e_i g̃_w
                                let cv = c.mul_ref(&uinv_v);
                                self.push_e(&mut out, &k2, i, i + 1, w, &cv);
                            }
                        }
                    }
                }
            }
        }
        Ok(YElem {
            d: self.d,
            n: self.n,
            terms: out,
        })
    }

    /// `x · t^k` in one pass: `g̃_w t^k = t^{w(k)} g̃_w`.
    fn mul_framing_right(&self, framing: &[u8]) -> Self {
        let d = self.d as u16;
        let mut out = BTreeMap::new();
        for ((k, w), c) in &self.terms {
            let mut k2 = k.clone();
            for (j, &s) in framing.iter().enumerate() {
                let p = w.image(j + 1) - 1;
                k2[p] = ((k2[p] as u16 + s as u16) % d) as u8;
            }
            add_into(&mut out, (k2, w.clone()), c);
        }
        YElem {
            d: self.d,
            n: self.n,
            terms: out,
        }
    }

    /// `x · y`, multiplying `x` on the right by the generators of each term of
    /// `y` (framing first, then a reduced word of the permutation).
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        self.mul_with_words(rhs, Perm::reduced_word)
    }

    pub(crate) fn mul_with_words(
        &self,
        rhs: &Self,
        word: impl Fn(&Perm) -> Vec<usize>,
    ) -> Result<Self> {
        let mut out = Self::zero(self.d, self.n);
        for ((k, w), c) in &rhs.terms {
            let mut part = self.mul_framing_right(k);
            for i in word(w) {
                part = part.mul_gen(Generator::GTilde(i), Side::Right)?;
            }
            out.add_assign(&part.scale(c));
        }
        Ok(out)
    }

    /// The same element in `Y(d,m)`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((k, w), c)| {
                let mut k2 = k.clone();
                k2.resize(m, 0);
                ((k2, w.embed(m)), c.clone())
            })
            .collect();
        YElem {
            d: self.d,
            n: m,
            terms,
        }
    }

    /// `E_χ = Π_i (1/d) Σ_s χ(t_i)^s t_i^{-s}`.
    pub fn idempotent_e(chi: &Character) -> Self {
        let mut e = EBasisElem::zero(chi.d(), chi.n());
        e.add_term(chi.clone(), Perm::identity(chi.n()), &LPoly::one());
        e.to_y()
    }

    /// `E_μ = Σ_{Comp(χ) = μ} E_χ`.
    pub fn idempotent_emu(mu: &Composition) -> Self {
        let n = mu.size();
        let mut e = EBasisElem::zero(mu.d() as u32, n);
        for chi in Character::orbit(mu) {
            e.add_term(chi, Perm::identity(n), &LPoly::one());
        }
        e.to_y()
    }

    /// Rewrites `t^k = Σ_χ χ(t^k) E_χ`.
    pub fn to_e_basis(&self) -> EBasisElem {
        let d = self.d;
        let table = RootTable::new(d);
        // axis transform: new[a] = Σ_k ξ_{a+1}^k old[k]
        let m: Vec<Vec<Cyclo>> = (0..d as usize)
            .map(|a| {
                (0..d as usize)
                    .map(|k| table.pow(a + 1, k as i64))
                    .collect()
            })
            .collect();
        let mut out = EBasisElem::zero(d, self.n);
        for (w, dense) in group_dense(
            self.n,
            d,
            self.terms.iter().map(|((k, w), c)| (w, k.as_slice(), c)),
        ) {
            let dense = transform(self.n, d, dense, &m);
            for (idx, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    let letters: Vec<usize> = digits(idx, self.n, d)
                        .iter()
                        .map(|&x| x as usize + 1)
                        .collect();
                    let chi = Character::new(d, &letters).expect("letters in range");
                    out.terms.insert((chi, w.clone()), c);
                }
            }
        }
        out
    }

    /// The coefficient of `t^0 g̃_1`.
    pub fn identity_coeff(&self) -> LPoly {
        self.coeff(&vec![0; self.n], &Perm::identity(self.n))
    }
}

/// `ξ_a^s` lookups for a fixed `d`.
pub(crate) struct RootTable {
    d: u32,
    pows: Vec<Vec<Cyclo>>,
}

impl RootTable {
    pub(crate) fn new(d: u32) -> Self {
        let pows = (1..=d as usize)
            .map(|a| {
                (0..d as i64)
                    .map(|s| root_power(d, a, s).expect("letter in range"))
                    .collect()
            })
            .collect();
        RootTable { d, pows }
    }

    /// `ξ_a^s`.
    pub(crate) fn pow(&self, a: usize, s: i64) -> Cyclo {
        self.pows[a - 1][s.rem_euclid(self.d as i64) as usize].clone()
    }
}

/// Base-`d` digits of `idx`, position `i` at `digits[i]`.
fn digits(mut idx: usize, n: usize, d: u32) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for slot in out.iter_mut() {
        *slot = (idx % d as usize) as u8;
        idx /= d as usize;
    }
    out
}

fn index_of(k: &[u8], d: u32) -> usize {
    k.iter()
        .rev()
        .fold(0, |acc, &x| acc * d as usize + x as usize)
}

/// Groups sparse `(w, digits, c)` entries into dense per-`w` arrays of length `d^n`.
fn group_dense<'a>(
    n: usize,
    d: u32,
    entries: impl Iterator<Item = (&'a Perm, &'a [u8], &'a LPoly)>,
) -> BTreeMap<Perm, Vec<LPoly>> {
    let size = (d as usize).pow(n as u32);
    let mut out: BTreeMap<Perm, Vec<LPoly>> = BTreeMap::new();
    for (w, k, c) in entries {
        let dense = out
            .entry(w.clone())
            .or_insert_with(|| vec![LPoly::zero(); size]);
        dense[index_of(k, d)].add_assign_ref(c);
    }
    out
}

/// Applies the `d × d` matrix `m` along every axis of a dense `d^n` array.
fn transform(n: usize, d: u32, mut data: Vec<LPoly>, m: &[Vec<Cyclo>]) -> Vec<LPoly> {
    let d = d as usize;
    let mut stride = 1;
    for _ in 0..n {
        let mut next = vec![LPoly::zero(); data.len()];
        for base in 0..data.len() {
            if (base / stride) % d != 0 {
                continue;
            }
            for k in 0..d {
                let src = &data[base + k * stride];
                if src.is_zero() {
                    continue;
                }
                for (a, row) in m.iter().enumerate() {
                    next[base + a * stride].add_assign_ref(&src.scalar_mul(&row[k]));
                }
            }
        }
        data = next;
        stride *= d;
    }
    data
}

/// An element `Σ c_{χ,w} E_χ g̃_w` of `Y(d,n)` in the idempotent basis.
#[derive(Clone, PartialEq, Debug)]
pub struct EBasisElem {
    d: u32,
    n: usize,
    terms: BTreeMap<(Character, Perm), LPoly>,
}

impl EBasisElem {
    pub fn zero(d: u32, n: usize) -> Self {
        EBasisElem {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `E_χ g̃_w`.
    pub fn basis(chi: Character, w: Perm) -> Self {
        let mut e = Self::zero(chi.d(), chi.n());
        e.add_term(chi, w, &LPoly::one());
        e
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, chi: Character, w: Perm, c: &LPoly) {
        add_into(&mut self.terms, (chi, w), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Character, Perm), &LPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, chi: &Character, w: &Perm) -> LPoly {
        self.terms
            .get(&(chi.clone(), w.clone()))
            .cloned()
            .unwrap_or_else(LPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands `E_χ = Π_i (1/d) Σ_s ξ_{χ_i}^{-s} t_i^s` back into the `t`-basis.
    pub fn to_y(&self) -> YElem {
        let d = self.d;
        let table = RootTable::new(d);
        let inv_d = one_over(d);
        // new[k] = (1/d) Σ_a ξ_{a+1}^{-k} old[a]
        let m: Vec<Vec<Cyclo>> = (0..d as usize)
            .map(|k| {
                (0..d as usize)
                    .map(|a| table.pow(a + 1, -(k as i64)) * inv_d.clone())
                    .collect()
            })
            .collect();
        let letters: Vec<(Perm, Vec<u8>, LPoly)> = self
            .terms
            .iter()
            .map(|((chi, w), c)| {
                let digits = chi.letters().iter().map(|&a| a as u8 - 1).collect();
                (w.clone(), digits, c.clone())
            })
            .collect();
        let mut out = YElem::zero(d, self.n);
        let grouped = group_dense(
            self.n,
            d,
            letters.iter().map(|(w, k, c)| (w, k.as_slice(), c)),
        );
        for (w, dense) in grouped {
            for (idx, c) in transform(self.n, d, dense, &m).into_iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert((digits(idx, self.n, d), w.clone()), c);
                }
            }
        }
        out
    }

    /// Product computed without leaving the idempotent basis:
    /// `E_χ g̃_w · E_ψ g̃_v = δ_{χ, w(ψ)} E_χ g̃_w g̃_v`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.d != rhs.d {
            return Err(Error::OrderMismatch {
                expected: self.d,
                got: rhs.d,
            });
        }
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let table = RootTable::new(self.d);
        let mut words: BTreeMap<(Perm, Perm), YElem> = BTreeMap::new();
        let mut out = Self::zero(self.d, self.n);
        for ((chi, w), c) in &self.terms {
            for ((psi, v), c2) in &rhs.terms {
                if &psi.act(w) != chi {
                    continue;
                }
                let key = (w.clone(), v.clone());
                if !words.contains_key(&key) {
                    let p = YElem::g_tilde(self.d, w.clone())
                        .mul(&YElem::g_tilde(self.d, v.clone()))?;
                    words.insert(key.clone(), p);
                }
                let cc = c.mul_ref(c2);
                for ((k, u), c3) in words[&key].terms() {
                    // E_χ t^k = χ(t^k) E_χ
                    let mut value = Cyclo::one();
                    for (i, &ki) in k.iter().enumerate() {
                        value = value * table.pow(chi.letter(i + 1), ki as i64);
                    }
                    out.add_term(chi.clone(), u.clone(), &c3.mul_ref(&cc).scalar_mul(&value));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcomp::all_perms;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gen(d: u32, n: usize, g: Generator) -> YElem {
        YElem::generator(d, n, g).unwrap()
    }

    fn prod(xs: &[&YElem]) -> YElem {
        let mut acc = YElem::one(xs[0].d(), xs[0].n());
        for x in xs {
            acc = acc.mul(x).unwrap();
        }
        acc
    }

    fn random_elem(rng: &mut ChaCha8Rng, d: u32, n: usize, terms: usize) -> YElem {
        let perms = all_perms(n);
        let mut x = YElem::zero(d, n);
        for _ in 0..terms {
            let k: Framing = (0..n).map(|_| rng.gen_range(0..d) as u8).collect();
            let w = perms[rng.gen_range(0..perms.len())].clone();
            let c = LPoly::monomial(
                Cyclo::from_int(rng.gen_range(-3..=3)),
                [rng.gen_range(-1..=1), rng.gen_range(0..=1), 0],
            );
            x.add_assign(&YElem::monomial(d, k, w, c));
        }
        x
    }

    #[test]
    fn quadratic_relation() {
        for d in 1..=3 {
            for n in 2..=3 {
                for i in 1..n {
                    let g = gen(d, n, Generator::G(i));
                    let e = gen(d, n, Generator::E(i));
                    let lhs = g.mul(&g).unwrap();
                    let rhs = YElem::scalar(d, n, LPoly::uvg(2, 0, 0))
                        .add(&e.mul(&g).unwrap().scale(&LPoly::v()));
                    assert_eq!(lhs, rhs, "d={d} n={n} i={i}");
                    let gi = gen(d, n, Generator::GInv(i));
                    assert_eq!(g.mul(&gi).unwrap(), YElem::one(d, n));
                    assert_eq!(gi.mul(&g).unwrap(), YElem::one(d, n));
                    assert_eq!(e.mul(&e).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn defining_relations() {
        for d in 1..=3u32 {
            for n in 1..=4 {
                let one = YElem::one(d, n);
                let t = |j: usize, k: i64| gen(d, n, Generator::T { j, k });
                let g = |i: usize| gen(d, n, Generator::G(i));
                for j in 1..=n {
                    assert_eq!(t(j, d as i64), one);
                    for j2 in 1..=n {
                        assert_eq!(
                            t(j, 1).mul(&t(j2, 1)).unwrap(),
                            t(j2, 1).mul(&t(j, 1)).unwrap()
                        );
                    }
                    for i in 1..n {
                        let sj = Perm::simple(n, i).unwrap().image(j);
                        assert_eq!(g(i).mul(&t(j, 1)).unwrap(), t(sj, 1).mul(&g(i)).unwrap());
                    }
                }
                for i in 1..n {
                    for i2 in 1..n {
                        if i.abs_diff(i2) > 1 {
                            assert_eq!(prod(&[&g(i), &g(i2)]), prod(&[&g(i2), &g(i)]));
                        }
                        if i2 == i + 1 {
                            assert_eq!(
                                prod(&[&g(i), &g(i2), &g(i)]),
                                prod(&[&g(i2), &g(i), &g(i2)])
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn left_and_right_generator_products_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in 1..=3 {
            for n in 2..=3 {
                let x = random_elem(&mut rng, d, n, 4);
                let gens = [
                    Generator::T { j: 1, k: 1 },
                    Generator::T { j: n, k: -1 },
                    Generator::G(1),
                    Generator::GInv(n - 1),
                    Generator::GTilde(1),
                    Generator::E(n - 1),
                ];
                for g in gens {
                    let y = gen(d, n, g);
                    assert_eq!(x.mul_gen(g, Side::Right).unwrap(), x.mul(&y).unwrap());
                    assert_eq!(x.mul_gen(g, Side::Left).unwrap(), y.mul(&x).unwrap());
                }
            }
        }
    }

    #[test]
    fn generator_index_errors() {
        let x = YElem::one(2, 3);
        assert!(x.mul_gen(Generator::G(3), Side::Right).is_err());
        assert!(x.mul_gen(Generator::T { j: 4, k: 1 }, Side::Left).is_err());
        assert!(x.mul_gen(Generator::E(0), Side::Left).is_err());
        assert!(x.mul(&YElem::one(3, 3)).is_err());
    }

    #[test]
    fn tilde_inverse() {
        for d in 1..=3 {
            let gt = gen(d, 3, Generator::GTilde(2));
            let e = gen(d, 3, Generator::E(2));
            let inv = gt.sub(&e.scale(&LPoly::uvg(-1, 1, 0)));
            assert_eq!(gt.mul(&inv).unwrap(), YElem::one(d, 3));
        }
    }

    #[test]
    fn idempotents() {
        let chi = Character::new(1, &[1, 1]).unwrap();
        assert_eq!(YElem::idempotent_e(&chi), YElem::one(1, 2));
        for d in 2..=3 {
            let n = 2;
            let mut total = YElem::zero(d, n);
            for mu in Composition::all(d as usize, n) {
                let orbit = Character::orbit(&mu);
                for a in &orbit {
                    let ea = YElem::idempotent_e(a);
                    for b in &orbit {
                        let eb = YElem::idempotent_e(b);
                        let p = ea.mul(&eb).unwrap();
                        if a == b {
                            assert_eq!(p, ea);
                        } else {
                            assert!(p.is_zero());
                        }
                    }
                    for j in 1..=n {
                        let t = gen(d, n, Generator::T { j, k: 1 });
                        let value = RootTable::new(d).pow(a.letter(j), 1);
                        let expect = ea.scale(&LPoly::constant(value));
                        assert_eq!(t.mul(&ea).unwrap(), expect);
                        assert_eq!(ea.mul(&t).unwrap(), expect);
                    }
                }
                total.add_assign(&YElem::idempotent_emu(&mu));
            }
            assert_eq!(total, YElem::one(d, n));
        }
        // d=2, n=2: E_(1,1) = 1 - e_1
        let e11 = YElem::idempotent_emu(&Composition::new(vec![1, 1]));
        let e1 = gen(2, 2, Generator::E(1));
        assert_eq!(e11, YElem::one(2, 2).sub(&e1));
    }

    #[test]
    fn central_idempotents() {
        for d in 1..=3 {
            for n in 2..=4 {
                for mu in Composition::all(d as usize, n) {
                    let e = YElem::idempotent_emu(&mu);
                    for i in 1..n {
                        let g = Generator::G(i);
                        assert_eq!(
                            e.mul_gen(g, Side::Right).unwrap(),
                            e.mul_gen(g, Side::Left).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn g_w_moves_idempotents() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for d in 2..=3 {
            let n = 3;
            let perms = all_perms(n);
            for _ in 0..10 {
                let w = perms[rng.gen_range(0..perms.len())].clone();
                let letters: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=d as usize)).collect();
                let chi = Character::new(d, &letters).unwrap();
                let gw = YElem::g_word(d, w.clone());
                let lhs = gw.mul(&YElem::idempotent_e(&chi)).unwrap();
                let rhs = YElem::idempotent_e(&chi.act(&w)).mul(&gw).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn e_basis_examples() {
        let one = YElem::one(3, 2).to_e_basis();
        assert_eq!(one.terms().count(), 9);
        assert!(one
            .terms()
            .all(|((_, w), c)| w.is_identity() && *c == LPoly::one()));

        let t1 = gen(2, 1, Generator::T { j: 1, k: 1 }).to_e_basis();
        let c1 = Character::new(2, &[1]).unwrap();
        let c2 = Character::new(2, &[2]).unwrap();
        assert_eq!(t1.coeff(&c1, &Perm::identity(1)), LPoly::one());
        assert_eq!(t1.coeff(&c2, &Perm::identity(1)), LPoly::from_int(-1));

        let chi = Character::new(3, &[2, 3, 1]).unwrap();
        let w = Perm::from_images(&[2, 3, 1]).unwrap();
        let x = YElem::idempotent_e(&chi)
            .mul(&YElem::g_tilde(3, w.clone()))
            .unwrap();
        assert_eq!(x.to_e_basis(), EBasisElem::basis(chi, w));
    }

    #[test]
    fn reduced_word_choice_is_irrelevant() {
        // multiply through right-descent words instead of left-descent ones
        let other_word = |w: &Perm| {
            let mut word = Vec::new();
            let mut cur = w.clone();
            while let Some(i) = (1..cur.n()).find(|&i| !cur.right_ascent(i)) {
                word.push(i);
                cur = cur.mul_simple_right(i);
            }
            word.reverse();
            word
        };
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let x = random_elem(&mut rng, 2, 4, 3);
            let y = random_elem(&mut rng, 2, 4, 3);
            assert_eq!(
                x.mul(&y).unwrap(),
                x.mul_with_words(&y, other_word).unwrap()
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn associativity(seed in any::<u64>(), d in 1u32..=3, n in 1usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_elem(&mut rng, d, n, 3);
            let y = random_elem(&mut rng, d, n, 3);
            let z = random_elem(&mut rng, d, n, 3);
            prop_assert_eq!(
                x.mul(&y).unwrap().mul(&z).unwrap(),
                x.mul(&y.mul(&z).unwrap()).unwrap()
            );
        }

        #[test]
        fn e_basis_round_trip(seed in any::<u64>(), d in 1u32..=3, n in 1usize..=4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_elem(&mut rng, d, n, 5);
            prop_assert_eq!(x.to_e_basis().to_y(), x);
        }

        #[test]
        fn e_basis_product_matches(seed in any::<u64>(), d in 1u32..=3, n in 1usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_elem(&mut rng, d, n, 3);
            let y = random_elem(&mut rng, d, n, 3);
            let fast = x.to_e_basis().mul(&y.to_e_basis()).unwrap();
            prop_assert_eq!(fast.to_y(), x.mul(&y).unwrap());
        }
    }
}
