//! The type-A Iwahori–Hecke algebra `H_n` over Laurent polynomials in `u`,
//! `v`, with `T_i² = u² + v T_i`, its parabolic subalgebras `H^μ` and the
//! normalized Markov trace `τ_n`.

use crate::error::{Error, Result};
use crate::exactnum::{add_into, LaurentPoly, Ring};
use crate::permcomp::{Composition, Perm};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An element `Σ c_w T_w` of `H_n`, stored in the `T_w` basis.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElem<C> {
    n: usize,
    terms: BTreeMap<Perm, LaurentPoly<C>>,
}

/// `v⁻¹(1 - u²)`, the value `τ_2(1)`.
pub fn delta<C: Ring>() -> LaurentPoly<C> {
    LaurentPoly::uvg(0, -1, 0).sub_ref(&LaurentPoly::uvg(2, -1, 0))
}

impl<C: Ring> HeckeElem<C> {
    pub fn zero(n: usize) -> Self {
        HeckeElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, LaurentPoly::one())
    }

    pub fn scalar(n: usize, c: LaurentPoly<C>) -> Self {
        Self::monomial(Perm::identity(n), c)
    }

    pub fn monomial(w: Perm, c: LaurentPoly<C>) -> Self {
        let mut e = Self::zero(w.n());
        add_into(&mut e.terms, w, &c);
        e
    }

    /// `T_w`.
    pub fn t(w: Perm) -> Self {
        Self::monomial(w, LaurentPoly::one())
    }

    /// `T̃_w = u^{-ℓ(w)} T_w`.
    pub fn t_tilde(w: Perm) -> Self {
        let l = w.length() as i32;
        Self::monomial(w, LaurentPoly::uvg(-l, 0, 0))
    }

    /// The generator `T_i`.
    pub fn t_gen(n: usize, i: usize) -> Result<Self> {
        Ok(Self::t(Perm::simple(n, i)?))
    }

    /// `T_{i_1} ⋯ T_{i_r}`.
    pub fn t_from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut x = Self::one(n);
        for &i in word {
            check_gen(n, i)?;
            x = x.mul_gen_right(i);
        }
        Ok(x)
    }

    /// `T_i⁻¹ = u⁻² T_i - u⁻² v`.
    pub fn t_inverse_gen(n: usize, i: usize) -> Result<Self> {
        let s = Perm::simple(n, i)?;
        let mut x = Self::monomial(s, LaurentPoly::uvg(-2, 0, 0));
        add_into(
            &mut x.terms,
            Perm::identity(n),
            &LaurentPoly::uvg(-2, 1, 0).neg_ref(),
        );
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> LaurentPoly<C> {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        debug_assert_eq!(self.n, rhs.n);
        for (w, c) in &rhs.terms {
            add_into(&mut self.terms, w.clone(), c);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            add_into(&mut out.terms, w.clone(), &x.mul_ref(c));
        }
        out
    }

    /// `x · T_i`.
    pub fn mul_gen_right(&self, i: usize) -> Self {
        let u2 = LaurentPoly::uvg(2, 0, 0);
        let v = LaurentPoly::v();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if w.right_ascent(i) {
                add_into(&mut out.terms, ws, c);
            } else {
                add_into(&mut out.terms, ws, &c.mul_ref(&u2));
                add_into(&mut out.terms, w.clone(), &c.mul_ref(&v));
            }
        }
        out
    }

    /// `T_i · x`.
    pub fn mul_gen_left(&self, i: usize) -> Self {
        let u2 = LaurentPoly::uvg(2, 0, 0);
        let v = LaurentPoly::v();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.mul_simple_left(i);
            // ℓ(s_i w) > ℓ(w) iff w⁻¹(i) < w⁻¹(i+1)
            if sw.length() > w.length() {
                add_into(&mut out.terms, sw, c);
            } else {
                add_into(&mut out.terms, sw, &c.mul_ref(&u2));
                add_into(&mut out.terms, w.clone(), &c.mul_ref(&v));
            }
        }
        out
    }

    /// The product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &rhs.terms {
            let mut part = self.clone();
            for i in w.reduced_word() {
                part = part.mul_gen_right(i);
            }
            out.add_assign(&part.scale(c));
        }
        Ok(out)
    }

    /// The same element in `H_m`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        HeckeElem {
            n: m,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.embed(m), c.clone()))
                .collect(),
        }
    }

    /// The symmetrizing form `T_w ↦ δ_{w,1}` (equivalently on `T̃_w`).
    pub fn symmetrizing_form(&self) -> LaurentPoly<C> {
        self.coeff(&Perm::identity(self.n))
    }

    /// `τ_n(x)` for the normalized Markov trace.
    pub fn markov_tau(&self) -> LaurentPoly<C> {
        let mut memo = HashMap::new();
        let mut acc = LaurentPoly::zero();
        for (w, c) in &self.terms {
            acc.add_assign_ref(&c.mul_ref(&tau_basis(w, &mut memo)));
        }
        acc
    }
}

fn check_gen(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    Ok(())
}

/// `τ_n(T_w)`, `n = w.n()`.
fn tau_basis<C: Ring>(w: &Perm, memo: &mut HashMap<Perm, LaurentPoly<C>>) -> LaurentPoly<C> {
    let n = w.n();
    if n <= 1 {
        return LaurentPoly::one();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let value = if w.image(n) == n {
        let w1 = w.restrict(n - 1).expect("fixes n");
        delta::<C>().mul_ref(&tau_basis(&w1, memo))
    } else {
        // w = x · s_{n-1} · y with y = s_{n-2}⋯s_j, j = w⁻¹(n), x ∈ S_{n-1}
        let j = w.inverse().image(n);
        let r = Perm::from_word(n, &(j..n).rev().collect::<Vec<_>>()).expect("valid word");
        let x = w.compose(&r.inverse()).restrict(n - 1).expect("x fixes n");
        let y_word: Vec<usize> = (j..n - 1).rev().collect();
        assert_eq!(
            x.length() + 1 + y_word.len(),
            w.length(),
            "coset factorization of {w} is not length-additive"
        );
        let mut prod = HeckeElem::<C>::t(x);
        for i in y_word {
            prod = prod.mul_gen_right(i);
        }
        let mut acc = LaurentPoly::zero();
        for (z, c) in &prod.terms {
            acc.add_assign_ref(&c.mul_ref(&tau_basis(z, memo)));
        }
        acc
    };
    memo.insert(w.clone(), value.clone());
    value
}

impl<C: Ring + fmt::Display> fmt::Display for HeckeElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T{w}")?;
        }
        Ok(())
    }
}

/// An element of `H^μ ⊂ H_n`, `n = |μ|`, supported on the Young subgroup
/// `S^μ`.
#[derive(Clone, PartialEq, Debug)]
pub struct ParabolicElem<C> {
    mu: Composition,
    elem: HeckeElem<C>,
}

/// Splits `w ∈ S^μ` into its block permutations `(w_1, …, w_d)`.
pub fn split_blocks(mu: &Composition, w: &Perm) -> Option<Vec<Perm>> {
    let mut out = Vec::with_capacity(mu.d());
    for a in 1..=mu.d() {
        let block = mu.block(a);
        let offset = block.start - 1;
        let mut images = Vec::with_capacity(block.len());
        for i in block.clone() {
            let x = w.image(i);
            if !block.contains(&x) {
                return None;
            }
            images.push(x - offset);
        }
        out.push(Perm::from_images(&images).expect("block restriction"));
    }
    Some(out)
}

impl<C: Ring> ParabolicElem<C> {
    pub fn new(mu: Composition, elem: HeckeElem<C>) -> Result<Self> {
        if elem.n() != mu.size() {
            return Err(Error::SizeMismatch {
                expected: mu.size(),
                got: elem.n(),
            });
        }
        if let Some((w, _)) = elem.terms().find(|(w, _)| split_blocks(&mu, w).is_none()) {
            return Err(Error::NotParabolic(format!("{w} for μ={mu}")));
        }
        Ok(ParabolicElem { mu, elem })
    }

    pub fn zero(mu: Composition) -> Self {
        let n = mu.size();
        ParabolicElem {
            mu,
            elem: HeckeElem::zero(n),
        }
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn elem(&self) -> &HeckeElem<C> {
        &self.elem
    }

    pub fn into_elem(self) -> HeckeElem<C> {
        self.elem
    }

    /// `τ^μ = τ_{μ_1} ⊗ ⋯ ⊗ τ_{μ_d}`, with `τ_0 = 1`.
    pub fn tau_parabolic(&self) -> LaurentPoly<C> {
        let mut memo = HashMap::new();
        let mut acc = LaurentPoly::zero();
        for (w, c) in self.elem.terms() {
            let mut term = c.clone();
            for block in split_blocks(&self.mu, w).expect("support checked on construction") {
                term = term.mul_ref(&tau_basis(&block, &mut memo));
            }
            acc.add_assign_ref(&term);
        }
        acc
    }
}
