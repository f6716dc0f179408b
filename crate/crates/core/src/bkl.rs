//! The Birman–Ko–Lee Garside structure of `B_n`.
//!
//! Simple elements are non-crossing partitions of `{1..n}`. A block
//! `b_1 < b_2 < ⋯ < b_k` stands for the descending product
//! `a_{b_k,b_{k-1}} ⋯ a_{b_2,b_1}` of band generators, whose strand map is
//! the cycle `b_1 → b_2 → ⋯ → b_k → b_1`. Products, quotients and complements
//! are computed on strand maps and read back as partitions; the Garside
//! element is `δ = σ_{n-1}⋯σ_1`, the single block.

use std::fmt;

use crate::error::{GarsideError, Result};
use crate::perm::{Perm, MAX_STRANDS};
use crate::structure::GarsideStructure;

/// A non-crossing partition, stored as a block-index array with blocks
/// numbered in order of their smallest element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ncp {
    n: u8,
    block: [u8; MAX_STRANDS],
}

impl Ncp {
    pub fn singletons(n: usize) -> Self {
        let mut block = [0u8; MAX_STRANDS];
        for (k, slot) in block.iter_mut().enumerate().take(n) {
            *slot = k as u8;
        }
        Ncp { n: n as u8, block }
    }

    pub fn single_block(n: usize) -> Self {
        Ncp { n: n as u8, block: [0u8; MAX_STRANDS] }
    }

    /// Builds the partition from arbitrary block labels, renumbering them
    /// canonically. Does not check the non-crossing condition.
    fn from_labels(n: usize, labels: &[u8]) -> Self {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let mut block = [0u8; MAX_STRANDS];
        for k in 0..n {
            let l = labels[k] as usize;
            if map[l] == u8::MAX {
                map[l] = next;
                next += 1;
            }
            block[k] = map[l];
        }
        Ncp { n: n as u8, block }
    }

    /// Builds a partition of `{1..n}` from 1-based blocks; elements not
    /// mentioned become singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if !(1..=MAX_STRANDS).contains(&n) {
            return Err(GarsideError::InvalidStrandCount(n));
        }
        let mut labels = vec![u8::MAX; n];
        for (b, blk) in blocks.iter().enumerate() {
            for &v in blk {
                if v == 0 || v > n {
                    return Err(GarsideError::IndexOutOfRange(format!("{v} not in 1..={n}")));
                }
                if labels[v - 1] != u8::MAX {
                    return Err(GarsideError::NotNonCrossing(format!("{v} appears twice")));
                }
                labels[v - 1] = b as u8;
            }
        }
        let mut fresh = blocks.len() as u8;
        for l in labels.iter_mut() {
            if *l == u8::MAX {
                *l = fresh;
                fresh += 1;
            }
        }
        let p = Self::from_labels(n, &labels);
        if !p.is_non_crossing() {
            return Err(GarsideError::NotNonCrossing(format!("{blocks:?}")));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn block_of(&self, k: usize) -> usize {
        self.block[k] as usize
    }

    pub fn block_count(&self) -> usize {
        self.block[..self.n()].iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// 0-based blocks in canonical order, each sorted increasingly.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for k in 0..self.n() {
            out[self.block[k] as usize].push(k);
        }
        out
    }

    /// 1-based blocks.
    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|v| v + 1).collect())
            .collect()
    }

    /// Scanning left to right, a block may only be revisited while it is
    /// the innermost open one.
    pub fn is_non_crossing(&self) -> bool {
        let n = self.n();
        let mut last = [0usize; MAX_STRANDS];
        for k in 0..n {
            last[self.block[k] as usize] = k;
        }
        let mut open = [false; MAX_STRANDS];
        let mut stack = [0u8; MAX_STRANDS];
        let mut depth = 0;
        for k in 0..n {
            let b = self.block[k];
            if open[b as usize] {
                if stack[depth - 1] != b {
                    return false;
                }
            } else {
                open[b as usize] = true;
                stack[depth] = b;
                depth += 1;
            }
            if last[b as usize] == k {
                depth -= 1;
            }
        }
        true
    }

    /// The strand map: each block cycles upward.
    pub fn to_perm(&self) -> Perm {
        let n = self.n();
        let mut first = [u8::MAX; MAX_STRANDS];
        for k in 0..n {
            let b = self.block[k] as usize;
            if first[b] == u8::MAX {
                first[b] = k as u8;
            }
        }
        // walking down, each element maps to the next one up in its block,
        // and the largest wraps around to the smallest
        let mut next = first;
        let mut seen = [false; MAX_STRANDS];
        let mut images = [0u8; MAX_STRANDS];
        for k in (0..n).rev() {
            let b = self.block[k] as usize;
            images[k] = if seen[b] { next[b] } else { first[b] };
            seen[b] = true;
            next[b] = k as u8;
        }
        Perm::from_raw(n, images)
    }

    /// The partition into cycles of `p`.
    fn from_perm_cycles(p: &Perm) -> Self {
        let n = p.n();
        let mut labels = [u8::MAX; MAX_STRANDS];
        let mut count = 0u8;
        for start in 0..n {
            if labels[start] != u8::MAX {
                continue;
            }
            let mut v = start;
            while labels[v] == u8::MAX {
                labels[v] = count;
                v = p.image(v);
            }
            count += 1;
        }
        Self::from_labels(n, &labels[..n])
    }

    /// Reads a strand map back as a simple element, if it is the strand map
    /// of one: a non-crossing partition whose blocks all cycle upward.
    pub fn from_perm(p: &Perm) -> Option<Self> {
        let q = Self::from_perm_cycles(p);
        (q.is_non_crossing() && q.to_perm() == *p).then_some(q)
    }

    fn rotate(&self, shift: usize) -> Self {
        let n = self.n();
        let mut labels = [0u8; MAX_STRANDS];
        for k in 0..n {
            labels[(k + shift) % n] = self.block[k];
        }
        Self::from_labels(n, &labels[..n])
    }

    /// All non-crossing partitions of `{1..n}`, sorted.
    pub fn all(n: usize) -> Vec<Ncp> {
        // restricted growth strings, filtered
        let mut out = Vec::new();
        let mut labels = vec![0u8; n];
        fn rec(k: usize, max: u8, labels: &mut Vec<u8>, out: &mut Vec<Ncp>) {
            let n = labels.len();
            if k == n {
                let p = Ncp::from_labels(n, labels);
                if p.is_non_crossing() {
                    out.push(p);
                }
                return;
            }
            for l in 0..=max + 1 {
                labels[k] = l;
                rec(k + 1, max.max(l), labels, out);
            }
        }
        if n == 0 {
            return out;
        }
        labels[0] = 0;
        rec(1, 0, &mut labels, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Ncp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks_one_based())
    }
}

impl fmt::Display for Ncp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks_one_based()
            .into_iter()
            .filter(|b| b.len() > 1)
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

/// Direction of the label rotation realizing `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauDirection {
    /// `i ↦ i + 1 (mod n)`
    Up,
    /// `i ↦ i − 1 (mod n)`
    Down,
}

#[derive(Debug, Clone)]
pub struct Bkl {
    n: usize,
    atoms: Vec<Ncp>,
    delta: Ncp,
    delta_perm: Perm,
    tau_direction: TauDirection,
}

impl Bkl {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(GarsideError::InvalidStrandCount(n));
        }
        let delta = Ncp::single_block(n);
        let mut atoms = Vec::new();
        for t in 1..n {
            for s in 0..t {
                atoms.push(Ncp::from_blocks(n, &[vec![s + 1, t + 1]])?);
            }
        }
        atoms.sort();
        let mut g = Bkl { n, atoms, delta, delta_perm: delta.to_perm(), tau_direction: TauDirection::Up };
        g.tau_direction = g.detect_tau_direction()?;
        Ok(g)
    }

    /// Picks the rotation that agrees with conjugation by `δ` on strand maps
    /// for every atom (atoms generate, so this pins `τ` down).
    fn detect_tau_direction(&self) -> Result<TauDirection> {
        let conj = |s: &Ncp| {
            let p = self.delta_perm.inverse().then(&s.to_perm()).then(&self.delta_perm);
            Ncp::from_perm(&p)
        };
        let up_ok = self.atoms.iter().all(|a| conj(a) == Some(a.rotate(1)));
        let down_ok = self.atoms.iter().all(|a| conj(a) == Some(a.rotate(self.n - 1)));
        match (up_ok, down_ok) {
            (true, false) => Ok(TauDirection::Up),
            (false, true) => Ok(TauDirection::Down),
            // n = 2: both rotations coincide
            (true, true) => Ok(TauDirection::Up),
            (false, false) => Err(GarsideError::Invalid("no rotation realizes τ".into())),
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn tau_direction(&self) -> TauDirection {
        self.tau_direction
    }

    /// The band generator `a_{t,s}`, `1 <= s < t <= n`.
    pub fn band(&self, t: usize, s: usize) -> Result<Ncp> {
        if !(1 <= s && s < t && t <= self.n) {
            return Err(GarsideError::IndexOutOfRange(format!("a({t},{s}) in BKL_{}", self.n)));
        }
        Ncp::from_blocks(self.n, &[vec![s, t]])
    }

    /// Band word of a simple element: per block (in canonical order) the
    /// descending product `a_{b_k,b_{k-1}} ⋯ a_{b_2,b_1}`, as 1-based `(t, s)`.
    pub fn ncp_to_band_word(&self, s: Ncp) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for blk in s.blocks_one_based() {
            for w in blk.windows(2).rev() {
                out.push((w[1], w[0]));
            }
        }
        out
    }

    /// Simple element of a positive band word, if the word is simple.
    pub fn band_word_to_ncp(&self, word: &[(usize, usize)]) -> Result<Ncp> {
        let mut acc = self.identity();
        for &(t, s) in word {
            let b = self.band(t, s)?;
            if !self.is_prefix(b, self.complement(acc)) {
                return Err(GarsideError::Invalid(format!("band word {word:?} is not simple")));
            }
            acc = self.product(acc, b);
        }
        Ok(acc)
    }

    fn ncp(&self, p: &Perm) -> Ncp {
        let q = Ncp::from_perm_cycles(p);
        debug_assert!(q.is_non_crossing() && q.to_perm() == *p, "strand map {p:?} is not simple");
        q
    }
}

impl GarsideStructure for Bkl {
    type Simple = Ncp;

    fn name(&self) -> String {
        format!("bkl({})", self.n)
    }

    fn atoms(&self) -> &[Ncp] {
        &self.atoms
    }

    fn identity(&self) -> Ncp {
        Ncp::singletons(self.n)
    }

    fn delta(&self) -> Ncp {
        self.delta
    }

    fn norm_delta(&self) -> u32 {
        (self.n - 1) as u32
    }

    fn norm(&self, s: Ncp) -> u32 {
        (self.n - s.block_count()) as u32
    }

    /// Refinement.
    fn is_prefix(&self, a: Ncp, b: Ncp) -> bool {
        let mut image = [u8::MAX; MAX_STRANDS];
        for k in 0..self.n {
            let ab = a.block[k] as usize;
            if image[ab] == u8::MAX {
                image[ab] = b.block[k];
            } else if image[ab] != b.block[k] {
                return false;
            }
        }
        true
    }

    fn is_suffix(&self, a: Ncp, b: Ncp) -> bool {
        self.is_prefix(a, b)
    }

    /// Common refinement.
    fn meet(&self, a: Ncp, b: Ncp) -> Ncp {
        let mut labels = [0u8; MAX_STRANDS];
        for k in 0..self.n {
            labels[k] = a.block[k] * MAX_STRANDS as u8 + b.block[k];
        }
        Ncp::from_labels(self.n, &labels[..self.n])
    }

    fn right_meet(&self, a: Ncp, b: Ncp) -> Ncp {
        self.meet(a, b)
    }

    /// Kreweras complement.
    fn complement(&self, s: Ncp) -> Ncp {
        self.ncp(&s.to_perm().inverse().then(&self.delta_perm))
    }

    fn left_complement(&self, s: Ncp) -> Ncp {
        self.ncp(&self.delta_perm.then(&s.to_perm().inverse()))
    }

    fn tau(&self, s: Ncp) -> Ncp {
        match self.tau_direction {
            TauDirection::Up => s.rotate(1),
            TauDirection::Down => s.rotate(self.n - 1),
        }
    }

    fn tau_inv(&self, s: Ncp) -> Ncp {
        match self.tau_direction {
            TauDirection::Up => s.rotate(self.n - 1),
            TauDirection::Down => s.rotate(1),
        }
    }

    fn tau_order(&self) -> i32 {
        self.n as i32
    }

    fn tau_pow(&self, s: Ncp, k: i32) -> Ncp {
        let k = k.rem_euclid(self.n as i32) as usize;
        let shift = match self.tau_direction {
            TauDirection::Up => k,
            TauDirection::Down => (self.n - k) % self.n,
        };
        if shift == 0 {
            s
        } else {
            s.rotate(shift)
        }
    }

    fn product(&self, a: Ncp, b: Ncp) -> Ncp {
        self.ncp(&a.to_perm().then(&b.to_perm()))
    }

    fn left_quotient(&self, s: Ncp, b: Ncp) -> Ncp {
        self.ncp(&s.to_perm().inverse().then(&b.to_perm()))
    }

    fn right_quotient(&self, b: Ncp, s: Ncp) -> Ncp {
        self.ncp(&b.to_perm().then(&s.to_perm().inverse()))
    }

    fn simples(&self) -> Vec<Ncp> {
        Ncp::all(self.n)
    }
}
