//! The generator images of `Y(2,4)` as printed by hand, checked against `psi`.

use std::collections::BTreeMap;
use yhecke::isomap::{psi, OrbitInfo};
use yhecke::{Character, Composition, Cyclo, Generator, HeckeElem, LPoly, YElem};

const TABLE: &str = include_str!("../../core/tests/data/psi_d2_n4.txt");
const N: usize = 4;

fn parse_generator(text: &str) -> Option<Generator> {
    let (kind, idx) = text.split_at(1);
    let idx: usize = idx.parse().ok()?;
    match kind {
        "g" => Some(Generator::G(idx)),
        "t" => Some(Generator::T { j: idx, k: 1 }),
        "e" => Some(Generator::E(idx)),
        _ => None,
    }
}

fn scalar(c: Cyclo) -> HeckeElem {
    HeckeElem::scalar(N, LPoly::constant(c))
}

fn entry(text: &str, labels: &BTreeMap<String, usize>) -> Option<HeckeElem> {
    match text {
        "u" => Some(HeckeElem::scalar(N, LPoly::u())),
        "0" => Some(HeckeElem::zero(N)),
        "1" => Some(HeckeElem::one(N)),
        "x1" => Some(scalar(Cyclo::zeta_power(2, 0))),
        "x2" => Some(scalar(Cyclo::zeta_power(2, 1))),
        sym => HeckeElem::t_gen(N, *labels.get(sym)?).ok(),
    }
}

/// One `(mu gen, failure)` pair per matrix line of the table.
pub fn check() -> Vec<(String, Option<String>)> {
    let mut orders: BTreeMap<String, Vec<Character>> = BTreeMap::new();
    let mut labels: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut out = Vec::new();

    for line in TABLE.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, body) = line.split_once(':').expect("table line has a colon");
        let head: Vec<&str> = head.split_whitespace().collect();
        match head.as_slice() {
            ["order", mu] => {
                let chars = body
                    .split_whitespace()
                    .map(|w| {
                        let letters: Vec<usize> = w.bytes().map(|b| (b - b'0') as usize).collect();
                        Character::new(2, &letters).expect("letters in range")
                    })
                    .collect();
                orders.insert(mu.to_string(), chars);
            }
            ["label", mu] => {
                let map = body
                    .split_whitespace()
                    .filter_map(|p| p.split_once('='))
                    .map(|(k, v)| (k.to_string(), v.parse().expect("index")))
                    .collect();
                labels.insert(mu.to_string(), map);
            }
            [mu, gen] => {
                let id = format!("({mu}).{gen}");
                out.push((id, compare(mu, gen, body, &orders, &labels).err()));
            }
            _ => panic!("unrecognised table line `{line}`"),
        }
    }
    out
}

fn compare(
    mu_text: &str,
    gen_text: &str,
    body: &str,
    orders: &BTreeMap<String, Vec<Character>>,
    labels: &BTreeMap<String, BTreeMap<String, usize>>,
) -> Result<(), String> {
    let mu: Composition = mu_text.parse().map_err(|e| format!("{e}"))?;
    let order = &orders[mu_text];
    let labels = &labels[mu_text];
    let m = order.len();
    let mut expect = vec![vec![HeckeElem::zero(N); m]; m];
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.first() == Some(&"diag") {
        for (k, t) in tokens[1..].iter().enumerate() {
            expect[k][k] = entry(t, labels).ok_or(format!("bad entry {t}"))?;
        }
    } else {
        for t in tokens {
            let (pos, val) = t.split_once('=').ok_or(format!("bad token {t}"))?;
            let (i, j) = pos.split_once(',').ok_or(format!("bad position {pos}"))?;
            let i: usize = i.parse().map_err(|_| format!("bad row {i}"))?;
            let j: usize = j.parse().map_err(|_| format!("bad column {j}"))?;
            expect[i - 1][j - 1] = entry(val, labels).ok_or(format!("bad entry {val}"))?;
        }
    }

    let gen = parse_generator(gen_text).ok_or(format!("bad generator {gen_text}"))?;
    let image = psi(&YElem::generator(2, N, gen).map_err(|e| e.to_string())?);
    let block = image.block(&mu).ok_or(format!("no block {mu}"))?;
    // rows of the table are in its own orbit order; find ours
    let info = OrbitInfo::new(&mu);
    let pos: Vec<usize> = order
        .iter()
        .map(|chi| {
            info.index(chi)
                .ok_or(format!("{chi} not in the orbit of {mu}"))
        })
        .collect::<Result<_, _>>()?;
    if pos.len() != block.size() {
        return Err(format!(
            "block has size {}, table {}",
            block.size(),
            pos.len()
        ));
    }
    for i in 0..m {
        for j in 0..m {
            let got = block.get(pos[i], pos[j]);
            if got != &expect[i][j] {
                return Err(format!("entry ({},{}) is {got:?}", i + 1, j + 1));
            }
        }
    }
    Ok(())
}
