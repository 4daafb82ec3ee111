use super::perm::next_permutation;
use super::{Composition, Perm};
use crate::error::{Error, Result};
use std::fmt;

/// A character `χ` of `(Z/dZ)^n`: `letters[j-1] = a` means `χ(t_j) = ξ_a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    d: u32,
    letters: Vec<u8>,
}

impl Character {
    pub fn new(d: u32, letters: &[usize]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a > d as usize) {
            return Err(Error::LetterOutOfRange { index: bad, d });
        }
        Ok(Character {
            d,
            letters: letters.iter().map(|&a| a as u8).collect(),
        })
    }

    /// `χ_1^μ`: `ξ_1` on the first `μ_1` positions, `ξ_2` on the next `μ_2`, …
    pub fn chi_one(mu: &Composition) -> Self {
        let letters = (1..=mu.d())
            .flat_map(|a| std::iter::repeat_n(a as u8, mu.part(a)))
            .collect();
        Character {
            d: mu.d() as u32,
            letters,
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// The letter `a` with `χ(t_j) = ξ_a`.
    pub fn letter(&self, j: usize) -> usize {
        self.letters[j - 1] as usize
    }

    pub fn letters(&self) -> Vec<usize> {
        self.letters.iter().map(|&a| a as usize).collect()
    }

    /// `Comp(χ)`: how many positions carry each letter.
    pub fn composition(&self) -> Composition {
        let mut parts = vec![0; self.d as usize];
        for &a in &self.letters {
            parts[a as usize - 1] += 1;
        }
        Composition::new(parts)
    }

    /// `w(χ)`, defined by `w(χ)(t_i) = χ(t_{w⁻¹(i)})`.
    pub fn act(&self, w: &Perm) -> Character {
        debug_assert_eq!(w.n(), self.n());
        let mut letters = vec![0u8; self.n()];
        for (j, &a) in self.letters.iter().enumerate() {
            letters[w.image(j + 1) - 1] = a;
        }
        Character { d: self.d, letters }
    }

    /// The character of `(Z/dZ)^{n+1}` agreeing with `χ` and sending
    /// `t_{n+1}` to `ξ_a`.
    pub fn extend(&self, a: usize) -> Character {
        let mut letters = self.letters.clone();
        letters.push(a as u8);
        Character { d: self.d, letters }
    }

    /// `𝒪(μ)`: all characters with composition `μ`, starting with `χ_1^μ` and
    /// otherwise in lexicographic order of the letter sequence.
    pub fn orbit(mu: &Composition) -> Vec<Character> {
        // χ_1^μ has sorted letters, so it is also the lexicographic minimum
        let first = Self::chi_one(mu);
        let mut cur = first.letters.clone();
        let mut out = vec![first];
        while next_permutation(&mut cur) {
            out.push(Character {
                d: mu.d() as u32,
                letters: cur.clone(),
            });
        }
        out
    }

    /// The minimal-length `π` with `π(χ_1^μ) = χ`, `μ = Comp(χ)`.
    ///
    /// Each block of `χ_1^μ` is sent, in order, onto the positions carrying the
    /// same letter in `χ`, so `π` is increasing on every block of `S^μ`.
    pub fn min_coset_rep(&self) -> Perm {
        let n = self.n();
        let mut images = vec![0usize; n];
        let mut slot = 0;
        for a in 1..=self.d as u8 {
            for (j, &b) in self.letters.iter().enumerate() {
                if b == a {
                    images[slot] = j + 1;
                    slot += 1;
                }
            }
        }
        Perm::from_images(&images).expect("block assignment is a bijection")
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcomp::all_perms;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec())
    }

    fn chi(d: u32, l: &[usize]) -> Character {
        Character::new(d, l).unwrap()
    }

    #[test]
    fn distinguished_characters() {
        assert_eq!(Character::chi_one(&comp(&[3, 1])), chi(2, &[1, 1, 1, 2]));
        assert_eq!(Character::chi_one(&comp(&[0, 4])), chi(2, &[2, 2, 2, 2]));
        assert_eq!(Character::chi_one(&comp(&[1, 1])), chi(2, &[1, 2]));
        assert!(Character::new(2, &[1, 3]).is_err());
    }

    #[test]
    fn orbits() {
        assert_eq!(
            Character::orbit(&comp(&[1, 1])),
            vec![chi(2, &[1, 2]), chi(2, &[2, 1])]
        );
        let o = Character::orbit(&comp(&[3, 1]));
        assert_eq!(o.len(), 4);
        for l in [[1, 1, 1, 2], [1, 1, 2, 1], [1, 2, 1, 1], [2, 1, 1, 1]] {
            assert!(o.contains(&chi(2, &l)));
        }
        assert_eq!(Character::orbit(&comp(&[2, 2])).len(), 6);
    }

    #[test]
    fn coset_representatives() {
        let s3 = Perm::from_word(4, &[3]).unwrap();
        assert_eq!(chi(2, &[1, 1, 2, 1]).min_coset_rep(), s3);
        let s123 = Perm::from_word(4, &[1, 2, 3]).unwrap();
        assert_eq!(chi(2, &[2, 1, 1, 1]).min_coset_rep(), s123);
        let mu = comp(&[2, 0, 1]);
        assert!(Character::chi_one(&mu).min_coset_rep().is_identity());
    }

    #[test]
    fn action() {
        let s3 = Perm::simple(4, 3).unwrap();
        assert_eq!(chi(2, &[1, 1, 1, 2]).act(&s3), chi(2, &[1, 1, 2, 1]));
        let x = chi(3, &[3, 1, 2]);
        assert_eq!(x.act(&Perm::identity(3)), x);
        // an action: (vw)(χ) = v(w(χ))
        for v in all_perms(3) {
            for w in all_perms(3) {
                assert_eq!(x.act(&v.compose(&w)), x.act(&w).act(&v));
            }
        }
    }

    /// Brute force over S_n for every orbit with n ≤ 5 (and the cheaper
    /// transitivity check up to n = 6).
    #[test]
    fn coset_reps_are_minimal() {
        for d in 1..=3 {
            for n in 1..=6 {
                let perms = if n <= 5 { all_perms(n) } else { Vec::new() };
                for mu in Composition::all(d, n) {
                    let one = Character::chi_one(&mu);
                    for x in Character::orbit(&mu) {
                        let pi = x.min_coset_rep();
                        assert_eq!(one.act(&pi), x);
                        let best = perms
                            .iter()
                            .filter(|w| one.act(w) == x)
                            .map(Perm::length)
                            .min();
                        if let Some(best) = best {
                            assert_eq!(pi.length(), best, "χ={x}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn stabilizer_is_the_young_subgroup() {
        for d in 1..=3 {
            for n in 1..=5 {
                for mu in Composition::all(d, n) {
                    let one = Character::chi_one(&mu);
                    let members = mu.young_members();
                    for w in all_perms(n) {
                        let fixes = one.act(&w) == one;
                        // w ∈ S^μ iff a reduced word uses only letters of I_μ
                        let in_young = w.reduced_word().iter().all(|i| members.contains(i));
                        assert_eq!(fixes, in_young, "μ={mu} w={w}");
                    }
                }
            }
        }
    }
}
