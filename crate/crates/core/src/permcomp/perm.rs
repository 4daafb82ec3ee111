use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{1, …, n}` in one-line notation.
///
/// Products follow `(v·w)(i) = v(w(i))`: the right factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[i - 1] = w(i)
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n as u8).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            p.images.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n(), other.n());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = k as u8 + 1;
        }
        Perm { images: inv }
    }

    /// `w s_i`: swaps the images of `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let (a, b) = (i as u8, i as u8 + 1);
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| match x {
                    x if x == a => b,
                    x if x == b => a,
                    x => x,
                })
                .collect(),
        }
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`, i.e. `w⁻¹(i) < w⁻¹(i+1)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let pos = |v: u8| self.images.iter().position(|&x| x == v);
        pos(i as u8) < pos(i as u8 + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }

    /// A reduced word `(i_1, …, i_r)` with `w = s_{i_1} ⋯ s_{i_r}`, obtained by
    /// repeatedly splitting off the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut inv = self.inverse();
        let mut word = Vec::with_capacity(self.length());
        // s_i is a left descent of w iff w⁻¹(i) > w⁻¹(i+1)
        while let Some(i) = (1..inv.n()).find(|&i| !inv.right_ascent(i)) {
            word.push(i);
            inv = inv.mul_simple_right(i);
        }
        word
    }

    /// The same permutation in `S_m`, `m ≥ n`, fixing `n+1, …, m`.
    pub fn embed(&self, m: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.n() as u8 + 1..=m as u8);
        Perm { images }
    }

    /// The restriction to `S_m` if `w` fixes every point above `m`.
    pub fn restrict(&self, m: usize) -> Option<Perm> {
        let fixes = (m + 1..=self.n()).all(|i| self.image(i) == i);
        fixes.then(|| Perm {
            images: self.images[..m].to_vec(),
        })
    }

    /// Cycles (each starting at its smallest element), fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.image(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Perm {
        images: cur.clone(),
    }];
    while next_permutation(&mut cur) {
        out.push(Perm {
            images: cur.clone(),
        });
    }
    out
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
