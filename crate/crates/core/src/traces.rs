//! Markov traces on the tower `{Y(d,n)}` and the symmetrizing forms.
//!
//! A Markov trace is fixed by one parameter `α_{μ⁰}` per composition with
//! parts in `{0,1}`:
//! `ρ_n(x) = Σ_μ α_{[μ]} (τ_{μ_1} ⊗ ⋯ ⊗ τ_{μ_d})(Tr Ψ_μ(E_μ x))`.

use crate::error::{Error, Result};
use crate::exactnum::{parse_lpoly, root_power};
use crate::hecke::{delta, ParabolicElem};
use crate::isomap::OrbitCache;
use crate::permcomp::Composition;
use crate::yokonuma::YElem;
use crate::{Cyclo, HeckeElem, LPoly, Rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Parameters `{α_{μ⁰}}` of a Markov trace. Missing keys are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct TraceSpec {
    d: u32,
    alphas: BTreeMap<Composition, LPoly>,
}

fn check_base(d: u32, mu0: &Composition) -> Result<()> {
    if mu0.d() != d as usize {
        return Err(Error::OrderMismatch {
            expected: d,
            got: mu0.d() as u32,
        });
    }
    if !mu0.is_base() || mu0.size() == 0 {
        return Err(Error::NotBaseComposition(mu0.to_string()));
    }
    Ok(())
}

impl TraceSpec {
    /// The zero trace.
    pub fn zero(d: u32) -> Self {
        TraceSpec {
            d,
            alphas: BTreeMap::new(),
        }
    }

    /// `ρ_{μ⁰}`: `α_{μ⁰} = 1` and every other parameter zero.
    pub fn basic(mu0: &Composition) -> Result<Self> {
        let d = mu0.d() as u32;
        let mut spec = Self::zero(d);
        spec.set(mu0, LPoly::one())?;
        Ok(spec)
    }

    /// All `2^d − 1` basic traces, in the order of [`Composition::all_base`].
    pub fn all_basic(d: u32) -> Vec<(Composition, TraceSpec)> {
        Composition::all_base(d as usize)
            .into_iter()
            .map(|mu0| {
                let spec = Self::basic(&mu0).expect("base composition");
                (mu0, spec)
            })
            .collect()
    }

    pub fn set(&mut self, mu0: &Composition, alpha: LPoly) -> Result<()> {
        check_base(self.d, mu0)?;
        if alpha.is_zero() {
            self.alphas.remove(mu0);
        } else {
            self.alphas.insert(mu0.clone(), alpha);
        }
        Ok(())
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn alpha(&self, mu0: &Composition) -> LPoly {
        self.alphas.get(mu0).cloned().unwrap_or_else(LPoly::zero)
    }

    /// Nonzero parameters.
    pub fn alphas(&self) -> impl Iterator<Item = (&Composition, &LPoly)> {
        self.alphas.iter()
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &LPoly, other: &TraceSpec) -> Result<TraceSpec> {
        if self.d != other.d {
            return Err(Error::OrderMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        let mut out = self.clone();
        for (mu0, a) in &other.alphas {
            let sum = out.alpha(mu0).add_ref(&c.mul_ref(a));
            out.set(mu0, sum)?;
        }
        Ok(out)
    }

    /// Reads lines `mu0 = (b_1,...,b_d) ; alpha = <polynomial>`. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse(text: &str, d: u32) -> Result<Self> {
        let mut spec = Self::zero(d);
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse(format!("trace spec line `{line}`"));
            let (lhs, rhs) = line.split_once(';').ok_or_else(bad)?;
            let mu_text = lhs.trim().strip_prefix("mu0").ok_or_else(bad)?;
            let mu_text = mu_text.trim_start().strip_prefix('=').ok_or_else(bad)?;
            let alpha_text = rhs.trim().strip_prefix("alpha").ok_or_else(bad)?;
            let alpha_text = alpha_text.trim_start().strip_prefix('=').ok_or_else(bad)?;
            let mu0: Composition = mu_text.trim().parse()?;
            let alpha = parse_lpoly(alpha_text.trim(), d)?;
            let sum = spec.alpha(&mu0).add_ref(&alpha);
            spec.set(&mu0, sum)?;
        }
        Ok(spec)
    }
}

impl fmt::Display for TraceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu0, a) in &self.alphas {
            writeln!(f, "mu0 = {mu0} ; alpha = {a}")?;
        }
        Ok(())
    }
}

/// `Tr Ψ_μ(E_μ x)` for every `μ` in the character support of `x`.
///
/// Only diagonal entries are needed, so the matrices are never formed: the
/// term `E_{χ_k} g̃_w` lands on the diagonal exactly when `w` fixes `χ_k`.
pub fn block_traces(x: &YElem) -> BTreeMap<Composition, ParabolicElem<Cyclo>> {
    let n = x.n();
    let mut cache = OrbitCache::default();
    let mut acc: BTreeMap<Composition, HeckeElem> = BTreeMap::new();
    for ((chi, w), c) in x.to_e_basis().terms() {
        if chi.act(&w.inverse()) != *chi {
            continue;
        }
        let mu = chi.composition();
        let info = cache.get(&mu);
        let k = info.index(chi).expect("χ lies in its own orbit");
        let pi = &info.reps[k];
        let y = pi.inverse().compose(w).compose(pi);
        let coeff = c.mul_monomial(&Cyclo::from_int(1), &[-(y.length() as i32), 0, 0]);
        acc.entry(mu)
            .or_insert_with(|| HeckeElem::zero(n))
            .add_assign(&HeckeElem::monomial(y, coeff));
    }
    acc.into_iter()
        .filter(|(_, h)| !h.is_zero())
        .map(|(mu, h)| {
            let p = ParabolicElem::new(mu.clone(), h).expect("diagonal entries are parabolic");
            (mu, p)
        })
        .collect()
}

/// Per-block contributions `α_{[μ]} τ^μ(Tr Ψ_μ(E_μ x))`, zero ones omitted.
pub fn rho_blocks(spec: &TraceSpec, x: &YElem) -> Result<BTreeMap<Composition, LPoly>> {
    if spec.d != x.d() {
        return Err(Error::OrderMismatch {
            expected: spec.d,
            got: x.d(),
        });
    }
    let mut out = BTreeMap::new();
    for (mu, tr) in block_traces(x) {
        let alpha = spec.alpha(&mu.base());
        if alpha.is_zero() {
            continue;
        }
        let value = alpha.mul_ref(&tr.tau_parabolic());
        if !value.is_zero() {
            out.insert(mu, value);
        }
    }
    Ok(out)
}

/// `ρ_n(x)` for the Markov trace with parameters `spec`.
pub fn rho(spec: &TraceSpec, x: &YElem) -> Result<LPoly> {
    let mut acc = LPoly::zero();
    for v in rho_blocks(spec, x)?.values() {
        acc.add_assign_ref(v);
    }
    Ok(acc)
}

/// The symmetrizing form `⊕_μ τ^μ ∘ Tr ∘ Ψ_μ` with `τ^μ(T̃_w) = δ_{w,1}`.
pub fn symmetrizing_rho(x: &YElem) -> LPoly {
    let mut acc = LPoly::zero();
    for tr in block_traces(x).values() {
        acc.add_assign_ref(&tr.elem().symmetrizing_form());
    }
    acc
}

/// `ρ̃_n(t^k g̃_w) = d^n` if every `k_i ≡ 0 (mod d)` and `w = 1`, else 0.
pub fn symmetrizing_tilde(x: &YElem) -> LPoly {
    let scale = Cyclo::from_int((x.d() as i64).pow(x.n() as u32));
    x.identity_coeff().scalar_mul(&scale)
}

/// A solution of the E-system, indexed by a non-empty `S ⊆ {1, …, d}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ESystemParams {
    d: u32,
    s: BTreeSet<usize>,
}

impl ESystemParams {
    pub fn new(d: u32, s: &[usize]) -> Result<Self> {
        if let Some(&bad) = s.iter().find(|&&a| a == 0 || a > d as usize) {
            return Err(Error::LetterOutOfRange { index: bad, d });
        }
        let s: BTreeSet<usize> = s.iter().copied().collect();
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(ESystemParams { d, s })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.s
    }

    /// `E_S = 1/|S|`.
    pub fn e_s(&self) -> Rat {
        Rat::new(1.into(), (self.s.len() as i64).into())
    }

    /// `c_b = (1/|S|) Σ_{a∈S} ξ_a^b`.
    pub fn c(&self, b: i64) -> Cyclo {
        let mut acc = Cyclo::zero();
        for &a in &self.s {
            acc = &acc + &root_power(self.d, a, b).expect("a in range");
        }
        &acc * &Cyclo::from_scalar(self.e_s())
    }

    /// `D_S` written in `u`, `v`: `|S|·v⁻¹(1−u²)`.
    pub fn d_s(&self) -> LPoly {
        delta::<Cyclo>().scalar_mul(&Cyclo::from_int(self.s.len() as i64))
    }
}

/// `c_b` for the subset `S`.
pub fn esystem_c(params: &ESystemParams, b: i64) -> Cyclo {
    params.c(b)
}

/// The parameters of the Juyumaya–Lambropoulou trace `ρ̃_S`:
/// `α_{μ⁰} = (v⁻¹(1−u²))^{|μ⁰|−1} / |S|` when `μ⁰` is supported in `S`,
/// and zero otherwise.
pub fn jl_spec(params: &ESystemParams) -> TraceSpec {
    let mut spec = TraceSpec::zero(params.d);
    let inv = Cyclo::from_scalar(params.e_s());
    for mu0 in Composition::all_base(params.d as usize) {
        let inside = (1..=mu0.d()).all(|a| mu0.part(a) == 0 || params.s.contains(&a));
        if inside {
            let alpha = delta::<Cyclo>().pow(mu0.size() as u32 - 1).scalar_mul(&inv);
            spec.set(&mu0, alpha).expect("base composition");
        }
    }
    spec
}

/// `Π_{m=1}^{n} (1 + q² + ⋯ + q^{2m−2})`.
pub fn poincare_product<R: crate::Ring>(n: usize, q: &R) -> R {
    let q2 = q.mul_ref(q);
    let mut prod = R::one();
    let mut partial = R::zero();
    let mut power = R::one();
    for _ in 1..=n {
        partial = partial.add_ref(&power);
        power = power.mul_ref(&q2);
        prod = prod.mul_ref(&partial);
    }
    prod
}

/// Whether `Y(d,n)` is split semisimple at the exact parameter `q`.
pub fn semisimple_at<R: crate::Ring>(n: usize, q: &R) -> bool {
    !poincare_product(n, q).is_zero()
}

/// Floating-point version of [`semisimple_at`]; values below `1e-12` in
/// modulus count as zero.
pub fn semisimple_at_complex(n: usize, q: Complex64) -> bool {
    let mut prod = Complex64::new(1.0, 0.0);
    let mut partial = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..=n {
        partial += power;
        power *= q * q;
        prod *= partial;
    }
    prod.norm() > 1e-12
}
