//! The Artin Garside structure of `B_n`: simple elements are permutation
//! braids, stored as their strand permutation.
//!
//! Strands starting at positions `i < j` cross in a simple braid `s` exactly
//! when `s(i) > s(j)`, so `σ_i ≼ s` iff `s(i) > s(i+1)`, and left division by
//! `σ_i` swaps two images.

use crate::error::{GarsideError, Result};
use crate::perm::{Perm, MAX_STRANDS};
use crate::structure::GarsideStructure;

#[derive(Debug, Clone)]
pub struct Artin {
    n: usize,
    atoms: Vec<Perm>,
    delta: Perm,
}

impl Artin {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(GarsideError::InvalidStrandCount(n));
        }
        let mut atoms: Vec<Perm> = (0..n - 1).map(|i| Perm::transposition(n, i)).collect();
        atoms.sort();
        Ok(Artin { n, atoms, delta: Perm::reversal(n) })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `σ_k` for `1 <= k < n`.
    pub fn sigma(&self, k: usize) -> Result<Perm> {
        if k == 0 || k >= self.n {
            return Err(GarsideError::IndexOutOfRange(format!("s{k} in B_{}", self.n)));
        }
        Ok(Perm::transposition(self.n, k - 1))
    }

    /// Permutation of a positive word `σ_{k_1}⋯σ_{k_m}`, if it is simple.
    pub fn word_to_perm(&self, word: &[usize]) -> Result<Perm> {
        let mut p = Perm::identity(self.n);
        let mut len = 0;
        for &k in word {
            p = p.then(&self.sigma(k)?);
            len += 1;
        }
        if p.inversions() != len {
            return Err(GarsideError::Invalid(format!(
                "word {word:?} is not a simple braid (strands cross twice)"
            )));
        }
        Ok(p)
    }

    /// Canonical reduced word of a simple element (1-based generator
    /// indices): the staircase factorization `c_1 c_2 ⋯ c_{n-1}` with
    /// `c_k = σ_k σ_{k-1} ⋯ σ_{k-m_k+1}`.
    pub fn perm_to_word(&self, s: Perm) -> Vec<usize> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        for top in (1..self.n).rev() {
            // rest fixes every position above `top`; peel the descending run
            // that moves the strand starting at `top` to its final place.
            let target = rest.image(top);
            let run: Vec<usize> = (target + 1..=top).rev().collect();
            let mut run_perm = Perm::identity(self.n);
            for &k in &run {
                run_perm = run_perm.then(&Perm::transposition(self.n, k - 1));
            }
            rest = rest.then(&run_perm.inverse());
            blocks.push(run);
        }
        debug_assert!(rest.is_identity());
        blocks.into_iter().rev().flatten().collect()
    }

    /// Left descents: `{ i : σ_i ≼ s }` as a bitmask on 0-based `i`.
    #[inline]
    fn starting_set(&self, s: &Perm) -> u32 {
        let mut mask = 0;
        for i in 0..self.n - 1 {
            if s.image(i) > s.image(i + 1) {
                mask |= 1 << i;
            }
        }
        mask
    }
}

impl GarsideStructure for Artin {
    type Simple = Perm;

    fn name(&self) -> String {
        format!("artin({})", self.n)
    }

    fn atoms(&self) -> &[Perm] {
        &self.atoms
    }

    fn identity(&self) -> Perm {
        Perm::identity(self.n)
    }

    fn delta(&self) -> Perm {
        self.delta
    }

    fn norm_delta(&self) -> u32 {
        (self.n * (self.n - 1) / 2) as u32
    }

    fn norm(&self, s: Perm) -> u32 {
        s.inversions()
    }

    fn is_prefix(&self, a: Perm, b: Perm) -> bool {
        let q = a.inverse().then(&b);
        a.inversions() + q.inversions() == b.inversions()
    }

    fn is_suffix(&self, a: Perm, b: Perm) -> bool {
        self.is_prefix(a.inverse(), b.inverse())
    }

    fn meet(&self, a: Perm, b: Perm) -> Perm {
        // Peel common left descents off both arguments; the peeled word is
        // the meet.
        let mut ra = a;
        let mut rb = b;
        loop {
            let common = self.starting_set(&ra) & self.starting_set(&rb);
            if common == 0 {
                break;
            }
            let i = common.trailing_zeros() as usize;
            ra.swap_images(i, i + 1);
            rb.swap_images(i, i + 1);
        }
        // meet = a · ra⁻¹
        a.then(&ra.inverse())
    }

    fn right_meet(&self, a: Perm, b: Perm) -> Perm {
        // Word reversal inverts the permutation and swaps prefixes with
        // suffixes.
        self.meet(a.inverse(), b.inverse()).inverse()
    }

    fn complement(&self, s: Perm) -> Perm {
        s.inverse().then(&self.delta)
    }

    fn left_complement(&self, s: Perm) -> Perm {
        self.delta.then(&s.inverse())
    }

    fn tau(&self, s: Perm) -> Perm {
        self.delta.then(&s).then(&self.delta)
    }

    fn tau_inv(&self, s: Perm) -> Perm {
        self.tau(s)
    }

    fn tau_order(&self) -> i32 {
        2
    }

    fn tau_pow(&self, s: Perm, k: i32) -> Perm {
        if k.rem_euclid(2) == 0 {
            s
        } else {
            self.tau(s)
        }
    }

    fn product(&self, a: Perm, b: Perm) -> Perm {
        a.then(&b)
    }

    fn left_quotient(&self, s: Perm, b: Perm) -> Perm {
        s.inverse().then(&b)
    }

    fn right_quotient(&self, b: Perm, s: Perm) -> Perm {
        b.then(&s.inverse())
    }

    fn simples(&self) -> Vec<Perm> {
        Perm::all(self.n)
    }

    fn is_left_weighted(&self, a: Perm, b: Perm) -> bool {
        self.starting_set(&self.complement(a)) & self.starting_set(&b) == 0
    }
}
