//! The isomorphism `Ψ_n : Y(d,n) → ⊕_μ Mat_{m_μ}(H^μ)`, its inverse `Φ_n`,
//! and the embedding `ι` induced on the matrix side by `Y(d,n) ⊂ Y(d,n+1)`.
//!
//! With `χ_k = χ_k^μ` and `π_k` its minimal coset representative,
//! `Ψ_μ(E_{χ_k} g̃_w) = T̃_{π_k⁻¹ w π_j} M_{k,j}` where `w(χ_j) = χ_k`.

use crate::error::{Error, Result};
use crate::hecke::{split_blocks, ParabolicElem};
use crate::permcomp::{Character, Composition, Perm};
use crate::yokonuma::{EBasisElem, YElem};
use crate::{Cyclo, HeckeElem};
use std::collections::{BTreeMap, HashMap};

/// Orbit `𝒪(μ)` with its index lookup and coset representatives.
pub struct OrbitInfo {
    pub chars: Vec<Character>,
    pub reps: Vec<Perm>,
    index: HashMap<Character, usize>,
}

impl OrbitInfo {
    pub fn new(mu: &Composition) -> Self {
        let chars = Character::orbit(mu);
        let reps = chars.iter().map(Character::min_coset_rep).collect();
        let index = chars
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();
        OrbitInfo { chars, reps, index }
    }

    /// 0-based position of `chi` in the orbit.
    pub fn index(&self, chi: &Character) -> Option<usize> {
        self.index.get(chi).copied()
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }
}

/// Orbit data cached per composition for the duration of one computation.
#[derive(Default)]
pub(crate) struct OrbitCache {
    map: HashMap<Composition, std::rc::Rc<OrbitInfo>>,
}

impl OrbitCache {
    pub(crate) fn get(&mut self, mu: &Composition) -> std::rc::Rc<OrbitInfo> {
        self.map
            .entry(mu.clone())
            .or_insert_with(|| std::rc::Rc::new(OrbitInfo::new(mu)))
            .clone()
    }
}

/// A square matrix over `H^μ` (row-major, entries embedded in `H_n`).
#[derive(Clone, PartialEq, Debug)]
pub struct Block {
    m: usize,
    entries: Vec<HeckeElem>,
}

impl Block {
    fn zero(m: usize, n: usize) -> Self {
        Block {
            m,
            entries: vec![HeckeElem::zero(n); m * m],
        }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &HeckeElem {
        &self.entries[i * self.m + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut HeckeElem {
        &mut self.entries[i * self.m + j]
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(HeckeElem::is_zero)
    }

    /// Matrix trace, an element of `H^μ`.
    pub fn trace(&self, n: usize) -> HeckeElem {
        let mut acc = HeckeElem::zero(n);
        for k in 0..self.m {
            acc.add_assign(self.get(k, k));
        }
        acc
    }
}

/// An element of `⊕_{μ ∈ Comp_d(n)} Mat_{m_μ}(H^μ)`. Blocks that are zero
/// are not stored.
#[derive(Clone, PartialEq, Debug)]
pub struct BlockMatrix {
    d: u32,
    n: usize,
    blocks: BTreeMap<Composition, Block>,
}

impl BlockMatrix {
    pub fn zero(d: u32, n: usize) -> Self {
        BlockMatrix {
            d,
            n,
            blocks: BTreeMap::new(),
        }
    }

    /// The identity of every block.
    pub fn identity(d: u32, n: usize) -> Self {
        let mut out = Self::zero(d, n);
        for mu in Composition::all(d as usize, n) {
            out.insert_identity(&mu);
        }
        out
    }

    /// The identity matrix in block `μ` only.
    pub fn block_identity(mu: &Composition) -> Self {
        let mut out = Self::zero(mu.d() as u32, mu.size());
        out.insert_identity(mu);
        out
    }

    fn insert_identity(&mut self, mu: &Composition) {
        let m = mu.multiplicity() as usize;
        let mut b = Block::zero(m, self.n);
        for k in 0..m {
            *b.get_mut(k, k) = HeckeElem::one(self.n);
        }
        self.blocks.insert(mu.clone(), b);
    }

    /// A matrix with the single entry `h` at `(i, j)` (0-based) of block `μ`.
    pub fn single_entry(mu: &Composition, i: usize, j: usize, h: HeckeElem) -> Result<Self> {
        let mut out = Self::zero(mu.d() as u32, mu.size());
        out.set_entry(mu, i, j, h)?;
        Ok(out)
    }

    /// Overwrites entry `(i, j)` of block `μ`.
    pub fn set_entry(&mut self, mu: &Composition, i: usize, j: usize, h: HeckeElem) -> Result<()> {
        let m = mu.multiplicity() as usize;
        if mu.d() != self.d as usize || mu.size() != self.n || h.n() != self.n {
            return Err(Error::BlockShape(format!(
                "block {mu} does not fit d={}, n={}",
                self.d, self.n
            )));
        }
        if i >= m || j >= m {
            return Err(Error::BlockShape(format!(
                "entry ({i},{j}) outside a {m}×{m} block"
            )));
        }
        ParabolicElem::new(mu.clone(), h.clone())?;
        let n = self.n;
        let b = self
            .blocks
            .entry(mu.clone())
            .or_insert_with(|| Block::zero(m, n));
        *b.get_mut(i, j) = h;
        if b.is_zero() {
            self.blocks.remove(mu);
        }
        Ok(())
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self, mu: &Composition) -> Option<&Block> {
        self.blocks.get(mu)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&Composition, &Block)> {
        self.blocks.iter()
    }

    /// Entry `(i, j)` (0-based) of block `μ`, zero if absent.
    pub fn entry(&self, mu: &Composition, i: usize, j: usize) -> HeckeElem {
        self.blocks
            .get(mu)
            .map(|b| b.get(i, j).clone())
            .unwrap_or_else(|| HeckeElem::zero(self.n))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mu, b) in &rhs.blocks {
            match out.blocks.get_mut(mu) {
                Some(ob) => {
                    for (x, y) in ob.entries.iter_mut().zip(&b.entries) {
                        x.add_assign(y);
                    }
                }
                None => {
                    out.blocks.insert(mu.clone(), b.clone());
                }
            }
        }
        out.blocks.retain(|_, b| !b.is_zero());
        out
    }

    /// Blockwise matrix product.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.d != rhs.d || self.n != rhs.n {
            return Err(Error::BlockShape(
                "multiplying block matrices of different shapes".into(),
            ));
        }
        let mut out = Self::zero(self.d, self.n);
        for (mu, a) in &self.blocks {
            let Some(b) = rhs.blocks.get(mu) else {
                continue;
            };
            let m = a.m;
            let mut c = Block::zero(m, self.n);
            for i in 0..m {
                for k in 0..m {
                    let x = a.get(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    for j in 0..m {
                        let y = b.get(k, j);
                        if !y.is_zero() {
                            let p = x.mul(y)?;
                            c.get_mut(i, j).add_assign(&p);
                        }
                    }
                }
            }
            if !c.is_zero() {
                out.blocks.insert(mu.clone(), c);
            }
        }
        Ok(out)
    }
}

/// `Ψ_n(x)`, computed through the idempotent basis.
pub fn psi(x: &YElem) -> BlockMatrix {
    psi_e(&x.to_e_basis())
}

/// `Ψ_n` on an element already written in the `E_χ g̃_w` basis.
pub fn psi_e(x: &EBasisElem) -> BlockMatrix {
    let (d, n) = (x.d(), x.n());
    let mut cache = OrbitCache::default();
    let mut out = BlockMatrix::zero(d, n);
    for ((chi, w), c) in x.terms() {
        let mu = chi.composition();
        let info = cache.get(&mu);
        let k = info.index(chi).expect("χ lies in its own orbit");
        let target = chi.act(&w.inverse());
        let j = info.index(&target).expect("orbit is W-stable");
        let y = info.reps[k].inverse().compose(w).compose(&info.reps[j]);
        // T̃_y = u^{-ℓ(y)} T_y
        let coeff = c.mul_monomial(&Cyclo::from_int(1), &[-(y.length() as i32), 0, 0]);
        let m = info.len();
        let block = out.blocks.entry(mu).or_insert_with(|| Block::zero(m, n));
        block
            .get_mut(k, j)
            .add_assign(&HeckeElem::monomial(y, coeff));
    }
    out.blocks.retain(|_, b| !b.is_zero());
    out
}

/// `Φ_n(M)`, the inverse of [`psi`].
pub fn phi(mat: &BlockMatrix) -> Result<YElem> {
    phi_e(mat).map(|e| e.to_y())
}

/// `Φ_n(M)` in the idempotent basis.
pub fn phi_e(mat: &BlockMatrix) -> Result<EBasisElem> {
    let (d, n) = (mat.d, mat.n);
    let mut out = EBasisElem::zero(d, n);
    for (mu, b) in &mat.blocks {
        let info = OrbitInfo::new(mu);
        if b.m != info.len() {
            return Err(Error::BlockShape(format!(
                "block {mu} has size {} but m_μ = {}",
                b.m,
                info.len()
            )));
        }
        for i in 0..b.m {
            for j in 0..b.m {
                for (x, c) in b.get(i, j).terms() {
                    if split_blocks(mu, x).is_none() {
                        return Err(Error::NotParabolic(format!("{x} in block {mu}")));
                    }
                    // T_x = u^{ℓ(x)} T̃_x ↦ u^{ℓ(x)} E_{χ_i} g̃_{π_i x π_j⁻¹}
                    let w = info.reps[i].compose(x).compose(&info.reps[j].inverse());
                    let coeff = c.mul_monomial(&Cyclo::from_int(1), &[x.length() as i32, 0, 0]);
                    out.add_term(info.chars[i].clone(), w, &coeff);
                }
            }
        }
    }
    Ok(out)
}

/// The cycle `p → p+1 → ⋯ → m → p` in `S_m`.
fn cycle_up(p: usize, m: usize) -> Perm {
    let images: Vec<usize> = (1..=m)
        .map(|i| match i {
            i if i < p => i,
            i if i == m => p,
            i => i + 1,
        })
        .collect();
    Perm::from_images(&images).expect("cycle")
}

/// `ι(M)`: the image at level `n+1` of a level-`n` block matrix.
///
/// The entry `x M_{k,j}` of block `μ` goes to `x' M_{k_a,j_a}` of block `μ^[a]`
/// for every letter `a`, where `χ_{k_a} = (χ_k, ξ_a)` and `x'` is `x`
/// conjugated by the cycle `(μ_1+…+μ_a+1, …, n+1)`.
pub fn iota(mat: &BlockMatrix) -> BlockMatrix {
    let (d, n) = (mat.d, mat.n);
    let mut out = BlockMatrix::zero(d, n + 1);
    let mut cache = OrbitCache::default();
    for (mu, b) in &mat.blocks {
        let small = cache.get(mu);
        for a in 1..=d as usize {
            let big_mu = mu.bump(a);
            let big = cache.get(&big_mu);
            let p: usize = mu.parts()[..a].iter().sum::<usize>() + 1;
            let c = cycle_up(p, n + 1);
            let c_inv = c.inverse();
            let pos: Vec<usize> = small
                .chars
                .iter()
                .map(|chi| big.index(&chi.extend(a)).expect("extended character"))
                .collect();
            let m = big.len();
            let block = out
                .blocks
                .entry(big_mu)
                .or_insert_with(|| Block::zero(m, n + 1));
            for i in 0..b.m {
                for j in 0..b.m {
                    let h = b.get(i, j);
                    if h.is_zero() {
                        continue;
                    }
                    let mut moved = HeckeElem::zero(n + 1);
                    for (x, coeff) in h.terms() {
                        let y = c.compose(&x.embed(n + 1)).compose(&c_inv);
                        moved.add_assign(&HeckeElem::monomial(y, coeff.clone()));
                    }
                    block.get_mut(pos[i], pos[j]).add_assign(&moved);
                }
            }
        }
    }
    out.blocks.retain(|_, b| !b.is_zero());
    out
}

/// `Tr(Ψ_μ(E_μ x))` as an element of `H^μ`, for every `μ` where it is nonzero.
pub fn block_traces(x: &YElem) -> BTreeMap<Composition, ParabolicElem<Cyclo>> {
    let mat = psi(x);
    mat.blocks
        .iter()
        .map(|(mu, b)| (mu, b.trace(mat.n)))
        .filter(|(_, tr)| !tr.is_zero())
        .map(|(mu, tr)| {
            let tr = ParabolicElem::new(mu.clone(), tr).expect("blocks are parabolic");
            (mu.clone(), tr)
        })
        .collect()
}
