//! Permutations of {0..d-1} as image arrays.
//!
//! Composition convention, fixed once: (sigma . tau)(x) = sigma(tau(x)).
//! The conjugate of tau by sigma is sigma^{-1} . tau . sigma, evaluated
//! right-to-left.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u16>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Permutation> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            if (v as usize) >= d || seen[v as usize] {
                return Err(Error::InvalidParameter("image array is not a bijection".into()));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition (a b) on `degree` points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Permutation {
        let mut p = Permutation::identity(degree);
        p.images.swap(a, b);
        p
    }

    /// The cycle (points[0] points[1] ...) on `degree` points.
    pub fn cycle(degree: usize, points: &[usize]) -> Permutation {
        let mut p = Permutation::identity(degree);
        for w in points.windows(2) {
            p.images[w[0]] = w[1] as u16;
        }
        if points.len() > 1 {
            p.images[*points.last().unwrap()] = points[0] as u16;
        }
        p
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        Permutation { images: inv }
    }

    /// sigma^{-1} . self . sigma.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.inverse().compose(self).compose(sigma)
    }

    /// true = even.
    pub fn parity_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.apply(s) == s {
                seen[s] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle notation with fixed points omitted; "()" for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_owned();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", inner.join(" "))
            })
            .collect::<Vec<_>>()
            .join("")
    }

    /// Packs the image array into a single word, 4 bits per point.
    /// Only valid for degree <= 16.
    #[inline]
    pub fn pack(&self) -> u64 {
        debug_assert!(self.degree() <= 16);
        let mut key = 0u64;
        for (x, &y) in self.images.iter().enumerate() {
            key |= (y as u64) << (4 * x);
        }
        key
    }

    /// Advance to the lexicographic successor; false when already last.
    pub fn next_lex(&mut self) -> bool {
        next_lex_images(&mut self.images)
    }
}

pub(crate) fn next_lex_images(a: &mut [u16]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// Permutation with the given lexicographic rank (0-based) among the d!
/// permutations of degree d.
pub fn unrank_lex(degree: usize, mut rank: u64) -> Permutation {
    let mut available: Vec<u16> = (0..degree as u16).collect();
    let mut images = Vec::with_capacity(degree);
    for pos in 0..degree {
        let f = factorial(degree - pos - 1);
        let idx = (rank / f) as usize;
        rank %= f;
        images.push(available.remove(idx));
    }
    Permutation { images }
}

/// Lexicographic rank of a permutation, the inverse of `unrank_lex`.
pub fn rank_lex(p: &Permutation) -> u64 {
    let d = p.degree();
    let mut rank = 0u64;
    for i in 0..d {
        let smaller = (i + 1..d).filter(|&j| p.images[j] < p.images[i]).count() as u64;
        rank += smaller * factorial(d - i - 1);
    }
    rank
}
