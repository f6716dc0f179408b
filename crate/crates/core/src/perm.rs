//! Fixed-capacity permutations of `0..n`, used as the strand map of a
//! permutation braid.
//!
//! `images[k]` is the final position of the strand that starts at position
//! `k`. Reading braids left to right, the strand map of a product `ab` is
//! "apply `a`, then `b`", which is [`Perm::then`].

use std::fmt;

use crate::error::{GarsideError, Result};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    images: [u8; MAX_STRANDS],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        debug_assert!(n <= MAX_STRANDS);
        let mut images = [0u8; MAX_STRANDS];
        for (k, slot) in images.iter_mut().enumerate().take(n) {
            *slot = k as u8;
        }
        Perm { n: n as u8, images }
    }

    /// Unchecked: `images[..n]` must be a permutation of `0..n`.
    pub(crate) fn from_raw(n: usize, images: [u8; MAX_STRANDS]) -> Self {
        Perm { n: n as u8, images }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return Err(GarsideError::InvalidStrandCount(n));
        }
        let mut seen = [false; MAX_STRANDS];
        let mut out = [0u8; MAX_STRANDS];
        for (k, &img) in images.iter().enumerate() {
            if img >= n || seen[img] {
                return Err(GarsideError::NotAPermutation {
                    n,
                    detail: format!("{:?}", images.iter().map(|i| i + 1).collect::<Vec<_>>()),
                });
            }
            seen[img] = true;
            out[k] = img as u8;
        }
        Ok(Perm { n: n as u8, images: out })
    }

    /// Builds a permutation from one-line notation on `1..=n`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.iter().any(|&v| v == 0) {
            return Err(GarsideError::NotAPermutation {
                n: one_line.len(),
                detail: format!("{one_line:?}"),
            });
        }
        let zero_based: Vec<usize> = one_line.iter().map(|&v| v - 1).collect();
        Self::from_images(&zero_based)
    }

    /// Builds a permutation of `1..=n` from disjoint cycles written on
    /// `1..=n`; `(a b c)` sends `a` to `b`, `b` to `c` and `c` to `a`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &v) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                if v == 0 || v > n || next == 0 || next > n || touched[v - 1] {
                    return Err(GarsideError::NotAPermutation {
                        n,
                        detail: format!("cycles {cycles:?}"),
                    });
                }
                touched[v - 1] = true;
                images[v - 1] = next - 1;
            }
        }
        Self::from_images(&images)
    }

    /// The adjacent transposition swapping positions `i` and `i + 1` (0-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// The order-reversing permutation `k -> n - 1 - k`.
    pub fn reversal(n: usize) -> Self {
        let mut p = Self::identity(n);
        for k in 0..n {
            p.images[k] = (n - 1 - k) as u8;
        }
        p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn image(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.n()]
    }

    /// One-line notation on `1..=n`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images().iter().map(|&v| v as usize + 1).collect()
    }

    #[inline]
    pub fn swap_images(&mut self, i: usize, j: usize) {
        self.images.swap(i, j);
    }

    /// `self` followed by `other`: `k -> other(self(k))`.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for k in 0..self.n() {
            out.images[k] = other.images[self.images[k] as usize];
        }
        out
    }

    #[inline]
    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for k in 0..self.n() {
            out.images[self.images[k] as usize] = k as u8;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|k| self.images[k] as usize == k)
    }

    /// Number of pairs `i < j` with `self(i) > self(j)`.
    pub fn inversions(&self) -> u32 {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element; fixed points included as 1-cycles. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = [false; MAX_STRANDS];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.image(start);
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.image(k);
            }
            out.push(cycle);
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Perm::from_images(&current).expect("valid permutation"));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
