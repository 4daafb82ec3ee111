use crate::error::{Error, Result};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

/// A composition `μ = (μ_1, …, μ_d)` of `n = |μ|` into `d` non-negative parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// Number of parts `d`.
    pub fn d(&self) -> usize {
        self.parts.len()
    }

    /// `|μ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `μ_a`, with `a` 1-indexed.
    pub fn part(&self, a: usize) -> usize {
        self.parts[a - 1]
    }

    /// Positions `μ_1+…+μ_{a-1}+1 ..= μ_1+…+μ_a` as a 1-indexed half-open range.
    pub fn block(&self, a: usize) -> Range<usize> {
        let start: usize = self.parts[..a - 1].iter().sum::<usize>() + 1;
        start..start + self.parts[a - 1]
    }

    /// `[μ]`: every nonzero part replaced by 1.
    pub fn base(&self) -> Composition {
        Composition {
            parts: self.parts.iter().map(|&p| usize::from(p > 0)).collect(),
        }
    }

    pub fn is_base(&self) -> bool {
        self.parts.iter().all(|&p| p <= 1) && self.size() > 0
    }

    /// `μ^[a]`: adds a box to part `a`.
    pub fn bump(&self, a: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts[a - 1] += 1;
        Composition { parts }
    }

    /// `μ_[a]`: removes a box from part `a`.
    pub fn unbump(&self, a: usize) -> Result<Composition> {
        if self.parts[a - 1] == 0 {
            return Err(Error::EmptyPart { part: a });
        }
        let mut parts = self.parts.clone();
        parts[a - 1] -= 1;
        Ok(Composition { parts })
    }

    /// `m_μ = n!/(μ_1!⋯μ_d!)`, the size of the orbit of characters.
    pub fn multiplicity(&self) -> u64 {
        // build the multinomial as a product of binomials to stay exact
        let mut total = 0u64;
        let mut m = 1u64;
        for &p in &self.parts {
            for k in 1..=p as u64 {
                total += 1;
                m = m * total / k;
            }
        }
        m
    }

    /// `I_μ = {1, …, n-1} \ {μ_1, μ_1+μ_2, …}`: generators of the Young
    /// subgroup `S^μ`.
    pub fn young_members(&self) -> Vec<usize> {
        let n = self.size();
        let mut cuts = vec![false; n + 1];
        let mut acc = 0;
        for &p in &self.parts {
            acc += p;
            cuts[acc] = true;
        }
        (1..n).filter(|&i| !cuts[i]).collect()
    }

    /// Which part the position `i` (1-indexed) falls into.
    pub fn block_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (a, &p) in self.parts.iter().enumerate() {
            acc += p;
            if i <= acc {
                return a + 1;
            }
        }
        panic!("position {i} outside a composition of {acc}");
    }

    /// `Comp_d(n)`, in decreasing lexicographic order (so `(n,0,…,0)` first).
    pub fn all(d: usize, n: usize) -> Vec<Composition> {
        fn rec(d: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if d == 1 {
                prefix.push(n);
                out.push(Composition::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=n).rev() {
                prefix.push(first);
                rec(d - 1, n - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if d == 0 {
            if n == 0 {
                out.push(Composition::new(Vec::new()));
            }
            return out;
        }
        rec(d, n, &mut Vec::new(), &mut out);
        out
    }

    /// `Comp⁰_d`: the `2^d - 1` compositions with parts in `{0,1}`, by
    /// increasing size.
    pub fn all_base(d: usize) -> Vec<Composition> {
        (1..=d)
            .flat_map(|k| Composition::all(d, k))
            .filter(|c| c.is_base())
            .collect()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `1,0,1` or `(1,0,1)`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition::new(parts))
    }
}
