//! Verification suites. Each check is deterministic for a given seed.

use crate::table;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yhecke::isomap::{iota, phi, phi_e, psi, psi_e};
use yhecke::links::{jl_invariant, jl_numeric, jl_substitution, parse_word};
use yhecke::permcomp::all_perms;
use yhecke::traces::{jl_spec, rho, symmetrizing_rho, symmetrizing_tilde};
use yhecke::{
    BlockMatrix, Character, Composition, Cyclo, EBasisElem, ESystemParams, Generator, LPoly, Perm,
    Side, TraceSpec, YElem,
};

pub struct Check {
    pub id: String,
    pub failure: Option<String>,
}

impl Check {
    fn new(id: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            id: id.into(),
            failure,
        }
    }

    pub fn line(&self) -> String {
        match &self.failure {
            None => format!("PASS {}", self.id),
            Some(detail) => format!("FAIL {}: {}", self.id, detail),
        }
    }
}

fn basis(d: u32, n: usize) -> Vec<(Character, Perm)> {
    let perms = all_perms(n);
    Composition::all(d as usize, n)
        .iter()
        .flat_map(Character::orbit)
        .flat_map(|chi| perms.iter().map(move |w| (chi.clone(), w.clone())))
        .collect()
}

fn random_basis(rng: &mut ChaCha8Rng, all: &[(Character, Perm)]) -> (Character, Perm) {
    all[rng.gen_range(0..all.len())].clone()
}

fn random_elem(rng: &mut ChaCha8Rng, d: u32, n: usize, terms: usize) -> YElem {
    let perms = all_perms(n);
    let mut x = YElem::zero(d, n);
    for _ in 0..terms {
        let k: Vec<u8> = (0..n).map(|_| rng.gen_range(0..d) as u8).collect();
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let c = LPoly::uvg(rng.gen_range(-1..=1), rng.gen_range(0..=1), 0)
            .scalar_mul(&Cyclo::from_int(rng.gen_range(1..=3)));
        x.add_assign(&YElem::monomial(d, k, w, c));
    }
    x
}

pub fn iso(d: u32, n: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = basis(d, n);
    let mut checks = Vec::new();

    let bad = all.iter().find_map(|(chi, w)| {
        let e = EBasisElem::basis(chi.clone(), w.clone());
        match phi_e(&psi_e(&e)) {
            Ok(back) if back == e => None,
            Ok(_) => Some(format!("E_{chi} g~_{w} does not come back")),
            Err(err) => Some(format!("E_{chi} g~_{w}: {err}")),
        }
    });
    checks.push(Check::new("iso.phi-psi", bad));

    let one = YElem::one(d, n);
    let fail = if psi(&one) != BlockMatrix::identity(d, n) {
        Some("psi(1) is not the identity".to_string())
    } else if phi(&BlockMatrix::identity(d, n)).ok() != Some(one) {
        Some("phi(identity) is not 1".to_string())
    } else {
        None
    };
    checks.push(Check::new("iso.unit", fail));

    let mut fail = None;
    for _ in 0..200 {
        let (c1, w1) = random_basis(&mut rng, &all);
        let (c2, w2) = random_basis(&mut rng, &all);
        let x = EBasisElem::basis(c1.clone(), w1.clone());
        let y = EBasisElem::basis(c2.clone(), w2.clone());
        let lhs = x.mul(&y).map(|p| psi_e(&p));
        let rhs = psi_e(&x).mul(&psi_e(&y));
        if lhs.is_err() || lhs != rhs {
            fail = Some(format!("x = E_{c1} g~_{w1}, y = E_{c2} g~_{w2}"));
            break;
        }
    }
    checks.push(Check::new("iso.multiplicative", fail));

    let mut fail = None;
    for _ in 0..50 {
        let (chi, w) = random_basis(&mut rng, &all);
        let x = EBasisElem::basis(chi.clone(), w.clone()).to_y();
        if psi(&x.embed(n + 1)) != iota(&psi(&x)) {
            fail = Some(format!("x = E_{chi} g~_{w}"));
            break;
        }
    }
    checks.push(Check::new("iso.inclusion", fail));

    if d == 2 && n == 4 {
        for (id, failure) in table::check() {
            checks.push(Check::new(format!("iso.table.{id}"), failure));
        }
    }
    checks
}

pub fn markov(d: u32, n: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for (mu0, spec) in TraceSpec::all_basic(d) {
        let mut fail = None;
        for _ in 0..8 {
            let x = random_elem(&mut rng, d, n, 3);
            let y = random_elem(&mut rng, d, n, 3);
            let xy = x.mul(&y).and_then(|p| rho(&spec, &p));
            let yx = y.mul(&x).and_then(|p| rho(&spec, &p));
            if xy.is_err() || xy != yx {
                fail = Some(format!("rho(xy) != rho(yx) for x = {x:?}"));
                break;
            }
        }
        checks.push(Check::new(format!("markov.central.{mu0}"), fail));

        let mut fail = None;
        'outer: for _ in 0..8 {
            let x = random_elem(&mut rng, d, n, 3);
            let base = rho(&spec, &x);
            let up = x.embed(n + 1);
            for gen in [Generator::G(n), Generator::GInv(n)] {
                let moved = up.mul_gen(gen, Side::Right).and_then(|p| rho(&spec, &p));
                if base.is_err() || moved != base {
                    fail = Some(format!("{gen:?} changes the trace of {x:?}"));
                    break 'outer;
                }
            }
        }
        checks.push(Check::new(format!("markov.stabilize.{mu0}"), fail));
    }
    checks
}

pub fn schur(d: u32, n: usize) -> Vec<Check> {
    let mut equal = None;
    let mut values = None;
    for (chi, w) in basis(d, n) {
        let x = EBasisElem::basis(chi.clone(), w.clone()).to_y();
        let r = symmetrizing_rho(&x);
        if equal.is_none() && r != symmetrizing_tilde(&x) {
            equal = Some(format!("forms differ on E_{chi} g~_{w}"));
        }
        let expect = LPoly::from_int(if w.is_identity() { 1 } else { 0 });
        if values.is_none() && r != expect {
            values = Some(format!("rho(E_{chi} g~_{w}) = {r}"));
        }
    }
    vec![
        Check::new("schur.rho-equals-tilde", equal),
        Check::new("schur.basis-values", values),
    ]
}

fn subsets(d: u32) -> Vec<Vec<usize>> {
    (1u32..(1 << d))
        .map(|mask| {
            (1..=d as usize)
                .filter(|a| mask >> (a - 1) & 1 == 1)
                .collect()
        })
        .collect()
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

pub fn jl(d: u32, n: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let unknot_text: Vec<String> = (1..n).map(|i| i.to_string()).collect();
    let unknot = parse_word(&unknot_text.join(" "), n, d).expect("valid word");
    for s in subsets(d) {
        let params = ESystemParams::new(d, &s).expect("nonempty subset");
        let tag = s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let spec = jl_spec(&params);

        let fail = (0..d as i64).find_map(|b| {
            let t = YElem::generator(d, 1, Generator::T { j: 1, k: b }).ok()?;
            let got = rho(&spec, &t).ok()?;
            (got != LPoly::constant(params.c(b))).then(|| format!("b = {b}: got {got}"))
        });
        checks.push(Check::new(format!("jl.level-one.{{{tag}}}"), fail));

        let mut fail = None;
        for _ in 0..5 {
            let (q, z) = (random_complex(&mut rng), random_complex(&mut rng));
            match jl_numeric(&unknot, &params, q, z) {
                Ok(v) if (v - 1.0).norm() < 1e-9 => {}
                Ok(v) => fail = Some(format!("q = {q}, z = {z}: value {v}")),
                Err(e) => fail = Some(format!("q = {q}, z = {z}: {e}")),
            }
            if fail.is_some() {
                break;
            }
        }
        checks.push(Check::new(format!("jl.unknot.{{{tag}}}"), fail));

        // flipping both square roots multiplies the value by (-1)^(c-1)
        let mut fail = None;
        for len in [n + 2, n + 3] {
            let text: Vec<String> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n.max(2)) as i64;
                    if rng.gen_bool(0.5) { i } else { -i }.to_string()
                })
                .filter(|_| n > 1)
                .collect();
            let w = parse_word(&text.join(" "), n, d).expect("valid word");
            let (q, z) = (random_complex(&mut rng), random_complex(&mut rng));
            let sign = if w.component_count() % 2 == 1 {
                1.0
            } else {
                -1.0
            };
            let value = |flip| {
                let (u0, v0, g0) = jl_substitution(&params, q, z, flip)?;
                jl_invariant(&w, &params)?.eval_complex(u0, v0, g0)
            };
            match (value(false), value(true)) {
                (Ok(a), Ok(b)) if (b - a * sign).norm() <= 1e-9 * (1.0 + a.norm()) => {}
                _ => {
                    fail = Some(format!("word `{w}` at q = {q}, z = {z}"));
                    break;
                }
            }
        }
        checks.push(Check::new(format!("jl.branch.{{{tag}}}"), fail));
    }
    checks
}
