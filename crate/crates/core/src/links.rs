//! Framed braid words and the link invariants built from Markov traces.
//!
//! Words are read from whitespace-separated tokens: a nonzero integer `K`
//! stands for `σ_{|K|}^{±1}`, and `tJ^K` for the framing generator `t_J^K`.

use crate::error::{Error, Result};
use crate::exactnum::LaurentPoly;
use crate::hecke::HeckeElem as Hecke;
use crate::permcomp::{Composition, Perm};
use crate::traces::{jl_spec, rho, rho_blocks, ESystemParams, TraceSpec};
use crate::yokonuma::{Generator, Side, YElem};
use crate::{Cyclo, HeckeElem, LPoly};
use num_complex::Complex64;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    /// `σ_i` or `σ_i⁻¹`.
    Sigma { i: usize, inverse: bool },
    /// `t_j^k` with `0 ≤ k < d`.
    Framing { j: usize, k: u32 },
}

/// A word in the framed braid group `Z/dZ ≀ B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedBraidWord {
    n: usize,
    d: u32,
    tokens: Vec<Token>,
}

fn parse_token(tok: &str, n: usize, d: u32) -> Result<Token> {
    let malformed = || Error::MalformedToken(tok.to_string());
    if let Some(rest) = tok.strip_prefix('t') {
        let (j, k) = rest.split_once('^').ok_or_else(malformed)?;
        let j: usize = j.parse().map_err(|_| malformed())?;
        let k: i64 = k.parse().map_err(|_| malformed())?;
        if j == 0 || j > n {
            return Err(Error::GeneratorOutOfRange { index: j, n });
        }
        let k = k.rem_euclid(d as i64) as u32;
        return Ok(Token::Framing { j, k });
    }
    let k: i64 = tok.parse().map_err(|_| malformed())?;
    if k == 0 {
        return Err(malformed());
    }
    let i = k.unsigned_abs() as usize;
    if i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    Ok(Token::Sigma { i, inverse: k < 0 })
}

/// Parses a braid word on `n` strands with framings in `Z/dZ`.
pub fn parse_word(text: &str, n: usize, d: u32) -> Result<FramedBraidWord> {
    if n == 0 || d == 0 {
        return Err(Error::Parse("n and d must be positive".into()));
    }
    let tokens = text
        .split_whitespace()
        .map(|t| parse_token(t, n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(FramedBraidWord { n, d, tokens })
}

impl FramedBraidWord {
    pub fn new(n: usize, d: u32, tokens: Vec<Token>) -> Result<Self> {
        for &t in &tokens {
            match t {
                Token::Sigma { i, .. } if i == 0 || i >= n => {
                    return Err(Error::GeneratorOutOfRange { index: i, n })
                }
                Token::Framing { j, .. } if j == 0 || j > n => {
                    return Err(Error::GeneratorOutOfRange { index: j, n })
                }
                _ => {}
            }
        }
        let tokens = tokens
            .into_iter()
            .map(|t| match t {
                Token::Framing { j, k } => Token::Framing { j, k: k % d },
                t => t,
            })
            .collect();
        Ok(FramedBraidWord { n, d, tokens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_unframed(&self) -> bool {
        self.tokens.iter().all(|t| matches!(t, Token::Sigma { .. }))
    }

    /// The same word on `m ≥ n` strands.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n);
        FramedBraidWord {
            n: m,
            ..self.clone()
        }
    }

    /// `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.d), (other.n, other.d));
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        FramedBraidWord {
            tokens,
            ..self.clone()
        }
    }

    /// The inverse word.
    pub fn inverse(&self) -> Self {
        let d = self.d;
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|&t| match t {
                Token::Sigma { i, inverse } => Token::Sigma {
                    i,
                    inverse: !inverse,
                },
                Token::Framing { j, k } => Token::Framing { j, k: (d - k) % d },
            })
            .collect();
        FramedBraidWord {
            tokens,
            ..self.clone()
        }
    }

    /// The image `β̄ ∈ S_n`.
    pub fn underlying_perm(&self) -> Perm {
        let word: Vec<usize> = self
            .tokens
            .iter()
            .filter_map(|t| match *t {
                Token::Sigma { i, .. } => Some(i),
                Token::Framing { .. } => None,
            })
            .collect();
        Perm::from_word(self.n, &word).expect("indices checked on construction")
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        self.underlying_perm().cycle_count()
    }
}

impl fmt::Display for FramedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.tokens.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            match *t {
                Token::Sigma { i, inverse } => write!(f, "{}{i}", if inverse { "-" } else { "" })?,
                Token::Framing { j, k } => write!(f, "t{j}^{k}")?,
            }
        }
        Ok(())
    }
}

/// `δ_H`: `σ_i ↦ T_i`.
pub fn delta_h(w: &FramedBraidWord) -> Result<HeckeElem> {
    let mut acc = HeckeElem::one(w.n);
    for t in &w.tokens {
        match *t {
            Token::Sigma { i, inverse: false } => acc = acc.mul_gen_right(i),
            Token::Sigma { i, inverse: true } => {
                acc = acc.mul(&Hecke::t_inverse_gen(w.n, i)?)?;
            }
            Token::Framing { .. } => return Err(Error::FramedToken),
        }
    }
    Ok(acc)
}

/// `δ^γ`: `σ_i ↦ (γ + (1−γ)e_i) g_i`, `t_j ↦ t_j`.
pub fn delta_gamma(w: &FramedBraidWord) -> YElem {
    let gamma = LPoly::gamma();
    let gamma_inv = LPoly::uvg(0, 0, -1);
    let mut acc = YElem::one(w.d, w.n);
    for t in &w.tokens {
        acc = match *t {
            Token::Sigma { i, inverse } => {
                let (g, c) = if inverse {
                    (Generator::GInv(i), &gamma_inv)
                } else {
                    (Generator::G(i), &gamma)
                };
                // c·x g + (1−c)·x e g = c·(x g − x e g) + x e g
                let xg = acc.mul_gen(g, Side::Right).expect("index checked");
                let xeg = acc
                    .mul_gen(Generator::E(i), Side::Right)
                    .and_then(|y| y.mul_gen(g, Side::Right))
                    .expect("index checked");
                xg.sub(&xeg).scale(c).add(&xeg)
            }
            Token::Framing { j, k } => acc
                .mul_gen(Generator::T { j, k: k as i64 }, Side::Right)
                .expect("index checked"),
        };
    }
    acc
}

fn check_order(w: &FramedBraidWord, spec: &TraceSpec) -> Result<()> {
    if w.d != spec.d() {
        return Err(Error::OrderMismatch {
            expected: spec.d(),
            got: w.d,
        });
    }
    Ok(())
}

/// `FΓ^γ_{Y,ρ}` of the closure of `w` (`Γ^γ_{Y,ρ}` when `w` is unframed).
pub fn invariant_gamma(w: &FramedBraidWord, spec: &TraceSpec) -> Result<LPoly> {
    check_order(w, spec)?;
    rho(spec, &delta_gamma(w))
}

/// The summands of [`invariant_gamma`] indexed by the block `μ`.
pub fn invariant_blocks(
    w: &FramedBraidWord,
    spec: &TraceSpec,
) -> Result<BTreeMap<Composition, LPoly>> {
    check_order(w, spec)?;
    rho_blocks(spec, &delta_gamma(w))
}

/// The HOMFLYPT polynomial `Γ_H = τ_n ∘ δ_H`.
pub fn homflypt(w: &FramedBraidWord) -> Result<LPoly> {
    Ok(delta_h(w)?.markov_tau())
}

/// `FΔ_{Y,S}` as a polynomial in `u`, `v`, `γ`, to be read at `γ = q^{-1/2}`.
pub fn jl_invariant(w: &FramedBraidWord, params: &ESystemParams) -> Result<LPoly> {
    if w.d != params.d() {
        return Err(Error::OrderMismatch {
            expected: params.d(),
            got: w.d,
        });
    }
    rho(&jl_spec(params), &delta_gamma(w))
}

/// Numeric parameters `(u₀, v₀, γ₀)` for given `q`, `z`.
///
/// `flip` chooses the other branch of both `√q` and `√λ_S`.
pub fn jl_substitution(
    params: &ESystemParams,
    q: Complex64,
    z: Complex64,
    flip: bool,
) -> Result<(Complex64, Complex64, Complex64)> {
    let e_s = 1.0 / params.subset().len() as f64;
    let denom = q * z;
    if denom.norm() < 1e-300 {
        return Err(Error::DivisionByZero);
    }
    let lambda = (z + (1.0 - q) * e_s) / denom;
    if lambda.norm() < 1e-300 {
        return Err(Error::DivisionByZero);
    }
    let sign = if flip { -1.0 } else { 1.0 };
    let sq = q.sqrt() * sign;
    let sl = lambda.sqrt() * sign;
    Ok((sq * sl, (q - 1.0) * sl, 1.0 / sq))
}

/// `FΔ_{Y,S}` evaluated at numeric `q`, `z`.
pub fn jl_numeric(
    w: &FramedBraidWord,
    params: &ESystemParams,
    q: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    let (u0, v0, g0) = jl_substitution(params, q, z, false)?;
    jl_invariant(w, params)?.eval_complex(u0, v0, g0)
}

/// Writes `c·(uγ)^k` as a polynomial, convenient for normalizations.
pub fn u_gamma_power(k: i32) -> LPoly {
    LaurentPoly::monomial(Cyclo::one(), [k, 0, k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::delta;
    use crate::permcomp::Composition;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // the tenth letter is σ_3; with σ_3⁻¹ there the closure has a different
    // HOMFLYPT polynomial from BETA_2
    const BETA_1: &str = "1 1 -2 -3 -2 1 1 1 -2 3 -2 1";
    const BETA_1_MISPRINT: &str = "1 1 -2 -3 -2 1 1 1 -2 -3 -2 1";
    const BETA_2: &str = "-1 2 2 2 -1 -3 2 2 2 -3";

    fn trefoil() -> LPoly {
        // 2u² − u⁴ + v²
        LPoly::uvg(2, 0, 0)
            .scalar_mul(&Cyclo::from_int(2))
            .sub_ref(&LPoly::uvg(4, 0, 0))
            .add_ref(&LPoly::uvg(0, 2, 0))
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec())
    }

    #[test]
    fn parsing() {
        let w = parse_word(" 1 -2  t3^5 ", 3, 2).unwrap();
        assert_eq!(
            w.tokens(),
            &[
                Token::Sigma {
                    i: 1,
                    inverse: false
                },
                Token::Sigma {
                    i: 2,
                    inverse: true
                },
                Token::Framing { j: 3, k: 1 },
            ]
        );
        assert_eq!(w.to_string(), "1 -2 t3^1");
        assert_eq!(parse_word(&w.to_string(), 3, 2).unwrap(), w);
        assert_eq!(
            parse_word("t1^-1", 2, 3).unwrap().tokens(),
            &[Token::Framing { j: 1, k: 2 }]
        );
        assert!(parse_word("0", 3, 2).is_err());
        assert!(parse_word("3", 3, 2).is_err());
        assert!(parse_word("t4^1", 3, 2).is_err());
        assert!(parse_word("x", 3, 2).is_err());
        assert!(parse_word("t1", 3, 2).is_err());
        assert!(parse_word("", 3, 2).unwrap().tokens().is_empty());
    }

    #[test]
    fn closures() {
        let b1 = parse_word(BETA_1, 4, 2).unwrap();
        let cycles = b1.underlying_perm().cycles();
        assert_eq!(cycles, vec![vec![1, 2, 4], vec![3]]);
        assert_eq!(b1.component_count(), 2);
        assert_eq!(parse_word("1 1 1", 2, 1).unwrap().component_count(), 1);
        assert_eq!(parse_word("", 3, 1).unwrap().component_count(), 3);
    }

    #[test]
    fn hecke_images() {
        let w = parse_word("1", 2, 1).unwrap();
        assert_eq!(delta_h(&w).unwrap(), Hecke::t_gen(2, 1).unwrap());
        let w = parse_word("1 -1", 2, 1).unwrap();
        assert_eq!(delta_h(&w).unwrap(), HeckeElem::one(2));
        // T_1³ = u²v + (u²+v²)T_1
        let w = parse_word("1 1 1", 2, 1).unwrap();
        let expect = HeckeElem::scalar(2, LPoly::uvg(2, 1, 0)).add(
            &Hecke::t_gen(2, 1)
                .unwrap()
                .scale(&LPoly::uvg(2, 0, 0).add_ref(&LPoly::uvg(0, 2, 0))),
        );
        assert_eq!(delta_h(&w).unwrap(), expect);
        assert_eq!(
            delta_h(&parse_word("t1^1", 2, 2).unwrap()),
            Err(Error::FramedToken)
        );
    }

    #[test]
    fn homflypt_values() {
        let unknot = parse_word("1", 2, 1).unwrap();
        assert_eq!(homflypt(&unknot).unwrap(), LPoly::one());
        let unlink = parse_word("", 2, 1).unwrap();
        assert_eq!(homflypt(&unlink).unwrap(), delta::<Cyclo>());
        let t = parse_word("1 1 1", 2, 1).unwrap();
        assert_eq!(homflypt(&t).unwrap(), trefoil());
    }

    #[test]
    fn gamma_images() {
        for d in 1..=3 {
            let w = parse_word("1 -1", 2, d).unwrap();
            assert_eq!(delta_gamma(&w), YElem::one(d, 2));
            let lhs = delta_gamma(&parse_word("1 2 1", 3, d).unwrap());
            let rhs = delta_gamma(&parse_word("2 1 2", 3, d).unwrap());
            assert_eq!(lhs, rhs);
        }
        let g = YElem::generator(1, 3, Generator::G(2)).unwrap();
        assert_eq!(delta_gamma(&parse_word("2", 3, 1).unwrap()), g);
        // σ_1 t_1 = t_2 σ_1
        let a = delta_gamma(&parse_word("1 t1^1", 2, 3).unwrap());
        let b = delta_gamma(&parse_word("t2^1 1", 2, 3).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn example_links() {
        let spec = TraceSpec::basic(&comp(&[1, 1])).unwrap();
        let expect = trefoil()
            .pow(2)
            .mul_ref(&u_gamma_power(-4))
            .scalar_mul(&Cyclo::from_int(2));
        for text in [BETA_1, BETA_2] {
            let w = parse_word(text, 4, 2).unwrap();
            assert_eq!(invariant_gamma(&w, &spec).unwrap(), expect);
        }
        let h = |t| homflypt(&parse_word(t, 4, 1).unwrap()).unwrap();
        assert_eq!(h(BETA_1), h(BETA_2));
        assert_ne!(h(BETA_1_MISPRINT), h(BETA_2));
    }

    #[test]
    fn example_blocks() {
        let spec = TraceSpec::basic(&comp(&[1, 1])).unwrap();
        let scale = u_gamma_power(-4);

        let b1 = invariant_blocks(&parse_word(BETA_1, 4, 2).unwrap(), &spec).unwrap();
        let h = delta_h(&parse_word("1 1 -2 1 1 1 2 1", 3, 1).unwrap()).unwrap();
        let expect = scale.mul_ref(&h.markov_tau());
        assert_eq!(b1.get(&comp(&[3, 1])), Some(&expect));
        assert_eq!(b1.get(&comp(&[1, 3])), Some(&expect));
        assert!(!b1.contains_key(&comp(&[2, 2])));

        let b2 = invariant_blocks(&parse_word(BETA_2, 4, 2).unwrap(), &spec).unwrap();
        let expect = scale
            .mul_ref(&trefoil().pow(2))
            .scalar_mul(&Cyclo::from_int(2));
        assert_eq!(b2.get(&comp(&[2, 2])), Some(&expect));
        assert_eq!(b2.len(), 1);
    }

    fn random_word(
        rng: &mut ChaCha8Rng,
        n: usize,
        d: u32,
        len: usize,
        framed: bool,
    ) -> FramedBraidWord {
        let mut tokens = Vec::new();
        for _ in 0..len {
            if framed && rng.gen_bool(0.25) {
                tokens.push(Token::Framing {
                    j: rng.gen_range(1..=n),
                    k: rng.gen_range(0..d),
                });
            } else if n > 1 {
                tokens.push(Token::Sigma {
                    i: rng.gen_range(1..n),
                    inverse: rng.gen_bool(0.5),
                });
            }
        }
        FramedBraidWord::new(n, d, tokens).unwrap()
    }

    #[test]
    fn markov_moves() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..12 {
            let d = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=3);
            let len = rng.gen_range(0..=6);
            let w = random_word(&mut rng, n, d, len, true);
            let bases = Composition::all_base(d as usize);
            let spec = TraceSpec::basic(&bases[rng.gen_range(0..bases.len())]).unwrap();
            let value = invariant_gamma(&w, &spec).unwrap();

            if !w.tokens().is_empty() {
                let mut rotated = w.tokens().to_vec();
                rotated.rotate_left(1);
                let r = FramedBraidWord::new(n, d, rotated).unwrap();
                assert_eq!(invariant_gamma(&r, &spec).unwrap(), value);
            }
            let g = random_word(&mut rng, n, d, 1, true);
            let conj = g.concat(&w).concat(&g.inverse());
            assert_eq!(invariant_gamma(&conj, &spec).unwrap(), value);

            for inverse in [false, true] {
                let up = w.embed(n + 1);
                let s =
                    FramedBraidWord::new(n + 1, d, vec![Token::Sigma { i: n, inverse }]).unwrap();
                assert_eq!(invariant_gamma(&up.concat(&s), &spec).unwrap(), value);
            }
        }
    }

    #[test]
    fn knots_and_single_letter_traces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = 0;
        while seen < 8 {
            let n = rng.gen_range(2..=3);
            let len = rng.gen_range(1..=7);
            let w = random_word(&mut rng, n, 2, len, false);
            let h = homflypt(&w).unwrap();
            let knot = w.component_count() == 1;
            for (mu0, spec) in TraceSpec::all_basic(2) {
                let v = invariant_gamma(&w, &spec).unwrap();
                if mu0.size() == 1 {
                    assert_eq!(v, h);
                } else if knot {
                    assert!(v.is_zero());
                }
            }
            seen += knot as usize;
        }
    }

    #[test]
    fn jl_unknot_and_branches() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let params = ESystemParams::new(3, &[1, 3]).unwrap();
        let unknot = parse_word("1", 2, 3).unwrap();
        for _ in 0..5 {
            let q = Complex64::new(rng.gen_range(0.3..2.0), rng.gen_range(-1.0..1.0));
            let z = Complex64::new(rng.gen_range(0.3..2.0), rng.gen_range(-1.0..1.0));
            let value = jl_numeric(&unknot, &params, q, z).unwrap();
            assert!((value - 1.0).norm() < 1e-9, "{value}");
        }
        let one = ESystemParams::new(1, &[1]).unwrap();
        let t = parse_word("1 1 1", 2, 1).unwrap();
        assert_eq!(jl_invariant(&t, &one).unwrap(), trefoil());
        assert!(ESystemParams::new(2, &[]).is_err());
        let zero_z = jl_numeric(
            &unknot,
            &params,
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        assert_eq!(zero_z, Err(Error::DivisionByZero));
    }

    /// Flipping `√q` changes nothing; flipping `√λ_S` multiplies the value by
    /// `(−1)^{c−1}` for a closure with `c` components.
    #[test]
    fn jl_branch_flip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let params = ESystemParams::new(2, &[1, 2]).unwrap();
        let mut parities = [0; 2];
        for len in 0..10 {
            let w = random_word(&mut rng, 3, 2, 4 + len % 2, false);
            let p = jl_invariant(&w, &params).unwrap();
            let q = Complex64::new(rng.gen_range(0.3..2.0), rng.gen_range(-1.0..1.0));
            let z = Complex64::new(rng.gen_range(0.3..2.0), rng.gen_range(-1.0..1.0));
            let (u0, v0, g0) = jl_substitution(&params, q, z, false).unwrap();
            let (u1, v1, g1) = jl_substitution(&params, q, z, true).unwrap();
            let a = p.eval_complex(u0, v0, g0).unwrap();
            let both = p.eval_complex(u1, v1, g1).unwrap();
            let only_q = p.eval_complex(-u0, v0, -g0).unwrap();
            let c = w.component_count();
            let sign = if c % 2 == 1 { 1.0 } else { -1.0 };
            let tol = 1e-9 * (1.0 + a.norm());
            assert!((only_q - a).norm() < tol, "{w}");
            assert!((both - sign * a).norm() < tol, "{w}: {a} vs {both}");
            parities[c % 2] += 1;
        }
        assert!(parities.iter().all(|&k| k > 0));
    }
}
