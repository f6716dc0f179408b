//! Elements of a Garside group in left normal form `Δ^p x_1 ⋯ x_r`, and the
//! arithmetic on them.
//!
//! An [`Element`] does not carry its structure; every operation takes the
//! structure explicitly. Mixing elements of different structures is a logic
//! error that the type system catches whenever the simple types differ.

use crate::error::{GarsideError, Result};
use crate::reverse::Rev;
use crate::structure::GarsideStructure;

/// One letter of a word: a simple element or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter<S> {
    Pos(S),
    Neg(S),
}

/// `(a·u, u⁻¹·b)` with `u = ∂(a) ∧ b`. The result is left weighted and has
/// the same product as `(a, b)`.
pub fn local_sliding<G: GarsideStructure>(g: &G, a: G::Simple, b: G::Simple) -> (G::Simple, G::Simple) {
    let u = g.meet(g.complement(a), b);
    if g.is_trivial(u) {
        (a, b)
    } else {
        (g.product(a, u), g.left_quotient(u, b))
    }
}

/// A group element in left normal form. Equality, hashing and ordering are
/// those of the pair `(inf, factors)`, which is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<S> {
    inf: i32,
    factors: Vec<S>,
}

impl<S: Copy + Eq> Element<S> {
    pub fn identity() -> Self {
        Element { inf: 0, factors: Vec::new() }
    }

    pub fn delta_pow(k: i32) -> Self {
        Element { inf: k, factors: Vec::new() }
    }

    pub fn inf(&self) -> i32 {
        self.inf
    }

    pub fn sup(&self) -> i32 {
        self.inf + self.factors.len() as i32
    }

    /// Canonical length `ℓ`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True for powers of `Δ`.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }
}

impl<S: Copy + Eq + std::fmt::Debug> Element<S> {
    pub fn from_simple<G: GarsideStructure<Simple = S>>(g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            Self::identity()
        } else if g.is_delta(s) {
            Self::delta_pow(1)
        } else {
            Element { inf: 0, factors: vec![s] }
        }
    }

    /// Builds an element from a claimed normal form, checking it.
    pub fn from_normal_form<G: GarsideStructure<Simple = S>>(g: &G, inf: i32, factors: Vec<S>) -> Result<Self> {
        for (i, &f) in factors.iter().enumerate() {
            if g.is_trivial(f) || g.is_delta(f) {
                return Err(GarsideError::Invalid(format!("factor {i} is 1 or Δ")));
            }
        }
        for (i, w) in factors.windows(2).enumerate() {
            if !g.is_left_weighted(w[0], w[1]) {
                return Err(GarsideError::Invalid(format!("factors {i} and {} are not left weighted", i + 1)));
            }
        }
        Ok(Element { inf, factors })
    }

    /// Left normal form of a word, computed letter by letter.
    pub fn from_word<G: GarsideStructure<Simple = S>>(g: &G, word: &[Letter<S>]) -> Self {
        let mut x = Self::identity();
        for &l in word {
            x = match l {
                Letter::Pos(s) => x.mul_simple(g, s),
                // s⁻¹ = ∂(s)Δ⁻¹
                Letter::Neg(s) => x.mul_simple(g, g.complement(s)).mul_delta_pow(g, -1),
            };
        }
        x
    }

    /// The normal form read as a word: `Δ^p` first, then the factors.
    pub fn to_word<G: GarsideStructure<Simple = S>>(&self, g: &G) -> Vec<Letter<S>> {
        let d = g.delta();
        let mut out = Vec::with_capacity(self.inf.unsigned_abs() as usize + self.factors.len());
        for _ in 0..self.inf.unsigned_abs() {
            out.push(if self.inf > 0 { Letter::Pos(d) } else { Letter::Neg(d) });
        }
        out.extend(self.factors.iter().map(|&s| Letter::Pos(s)));
        out
    }

    /// The simple element this is equal to, if any.
    pub fn as_simple<G: GarsideStructure<Simple = S>>(&self, g: &G) -> Option<S> {
        match (self.inf, self.factors.len()) {
            (0, 0) => Some(g.identity()),
            (0, 1) => Some(self.factors[0]),
            (1, 0) => Some(g.delta()),
            _ => None,
        }
    }

    /// Letter length of a positive element.
    pub fn norm<G: GarsideStructure<Simple = S>>(&self, g: &G) -> Option<u64> {
        if self.inf < 0 {
            return None;
        }
        let body: u64 = self.factors.iter().map(|&s| g.norm(s) as u64).sum();
        Some(self.inf as u64 * g.norm_delta() as u64 + body)
    }

    fn normalized(mut inf: i32, mut factors: Vec<S>, delta: S, id: S) -> Self {
        let lead = factors.iter().take_while(|&&f| f == delta).count();
        if lead > 0 {
            inf += lead as i32;
            factors.drain(..lead);
        }
        while factors.last() == Some(&id) {
            factors.pop();
        }
        debug_assert!(factors.iter().all(|&f| f != id && f != delta));
        Element { inf, factors }
    }

    /// `Δ^{-k} x Δ^k`, which applies `τ^k` to every factor.
    pub fn tau_pow<G: GarsideStructure<Simple = S>>(&self, g: &G, k: i32) -> Self {
        if k.rem_euclid(g.tau_order()) == 0 {
            return self.clone();
        }
        Element { inf: self.inf, factors: self.factors.iter().map(|&s| g.tau_pow(s, k)).collect() }
    }

    /// `x Δ^k`.
    pub fn mul_delta_pow<G: GarsideStructure<Simple = S>>(&self, g: &G, k: i32) -> Self {
        let mut y = self.tau_pow(g, k);
        y.inf += k;
        y
    }

    /// `Δ^k x`.
    pub fn delta_pow_mul(&self, k: i32) -> Self {
        Element { inf: self.inf + k, factors: self.factors.clone() }
    }

    /// `x s` for a simple `s`: at most `ℓ(x)` local slidings, right to left.
    pub fn mul_simple<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        if g.is_delta(s) {
            return self.mul_delta_pow(g, 1);
        }
        let mut f = Vec::with_capacity(self.factors.len() + 1);
        f.extend_from_slice(&self.factors);
        f.push(s);
        let mut j = f.len() - 1;
        while j > 0 {
            let (a, b) = local_sliding(g, f[j - 1], f[j]);
            if a == f[j - 1] {
                break;
            }
            f[j - 1] = a;
            f[j] = b;
            j -= 1;
        }
        Self::normalized(self.inf, f, g.delta(), g.identity())
    }

    /// `s x` for a simple `s`: at most `ℓ(x)` local slidings, left to right.
    pub fn simple_mul<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        if g.is_delta(s) {
            return self.delta_pow_mul(1);
        }
        // s Δ^p = Δ^p τ^p(s)
        let mut f = Vec::with_capacity(self.factors.len() + 1);
        f.push(g.tau_pow(s, self.inf));
        f.extend_from_slice(&self.factors);
        for j in 0..f.len() - 1 {
            let (a, b) = local_sliding(g, f[j], f[j + 1]);
            if b == f[j + 1] {
                break;
            }
            f[j] = a;
            f[j + 1] = b;
        }
        Self::normalized(self.inf, f, g.delta(), g.identity())
    }

    /// `s⁻¹ x` for a simple `s`, using `s⁻¹ = Δ⁻¹ ∂⁻¹(s)`.
    pub fn simple_inv_mul<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        self.simple_mul(g, g.left_complement(s)).delta_pow_mul(-1)
    }

    /// `x s⁻¹` for a simple `s`, using `s⁻¹ = ∂(s) Δ⁻¹`.
    pub fn mul_simple_inv<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        self.mul_simple(g, g.complement(s)).mul_delta_pow(g, -1)
    }

    pub fn multiply<G: GarsideStructure<Simple = S>>(&self, g: &G, y: &Self) -> Self {
        let mut out = self.mul_delta_pow(g, y.inf);
        for &s in &y.factors {
            out = out.mul_simple(g, s);
        }
        out
    }

    /// The closed formula `Δ^{-(p+r)} ∏_{i=r..1} τ^{-(p+i)}(∂(x_i))`.
    pub fn inverse<G: GarsideStructure<Simple = S>>(&self, g: &G) -> Self {
        let p = self.inf;
        let r = self.factors.len() as i32;
        let factors = (1..=r)
            .rev()
            .map(|i| g.tau_pow(g.complement(self.factors[(i - 1) as usize]), -(p + i)))
            .collect();
        Element { inf: -(p + r), factors }
    }

    pub fn power<G: GarsideStructure<Simple = S>>(&self, g: &G, k: i64) -> Self {
        let base = if k < 0 { self.inverse(g) } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(g, &base);
        }
        out
    }

    /// `x^s = s⁻¹ x s` for a simple `s`.
    pub fn conjugate_by_simple<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        self.simple_inv_mul(g, s).mul_simple(g, s)
    }

    /// `s x s⁻¹` for a simple `s`.
    pub fn conjugate_by_simple_inv<G: GarsideStructure<Simple = S>>(&self, g: &G, s: S) -> Self {
        if g.is_trivial(s) {
            return self.clone();
        }
        self.simple_mul(g, s).mul_simple_inv(g, s)
    }

    /// `x^c = c⁻¹ x c`.
    pub fn conjugate<G: GarsideStructure<Simple = S>>(&self, g: &G, c: &Self) -> Self {
        c.inverse(g).multiply(g, self).multiply(g, c)
    }

    /// `a ≼ b`, i.e. `a⁻¹ b` is positive.
    pub fn prefix_leq<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> bool {
        self.inverse(g).multiply(g, b).is_positive()
    }

    /// `a ≽ b`, i.e. `a b⁻¹` is positive (`b` is a suffix of `a`).
    pub fn suffix_geq<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> bool {
        self.multiply(g, &b.inverse(g)).is_positive()
    }

    /// `x ∧ Δ` for positive `x`.
    fn head<G: GarsideStructure<Simple = S>>(&self, g: &G) -> S {
        debug_assert!(self.inf >= 0);
        if self.inf > 0 {
            g.delta()
        } else {
            self.factors.first().copied().unwrap_or_else(|| g.identity())
        }
    }

    /// `a ∧ b` for the prefix order. After factoring out the common `Δ`
    /// power, the meet is built one simple step at a time: the next step is
    /// the meet of the first factors of what remains.
    pub fn meet<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> Self {
        let m = self.inf.min(b.inf);
        let mut a = self.delta_pow_mul(-m);
        let mut b = b.delta_pow_mul(-m);
        let mut u = Self::delta_pow(m);
        loop {
            let s = g.meet(a.head(g), b.head(g));
            if g.is_trivial(s) {
                return u;
            }
            u = u.mul_simple(g, s);
            a = a.simple_inv_mul(g, s);
            b = b.simple_inv_mul(g, s);
        }
    }

    /// The meet by atom extension, one letter at a time. Slow; kept as an
    /// independent check of [`Element::meet`].
    pub fn meet_by_atoms<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> Self {
        let m = self.inf.min(b.inf);
        let mut u = Self::delta_pow(m);
        let ua = u.inverse(g).multiply(g, self);
        let ub = u.inverse(g).multiply(g, b);
        let (mut ra, mut rb) = (ua, ub);
        'grow: loop {
            for &t in g.atoms() {
                let ta = ra.simple_inv_mul(g, t);
                let tb = rb.simple_inv_mul(g, t);
                if ta.is_positive() && tb.is_positive() {
                    u = u.mul_simple(g, t);
                    ra = ta;
                    rb = tb;
                    continue 'grow;
                }
            }
            return u;
        }
    }

    /// `a ∨ b` for the prefix order, computed as the meet in the reverse
    /// structure, whose prefix order is the opposite of this one.
    pub fn join<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> Self {
        let rev = Rev::new(g);
        let ra = rev.to_reverse(self);
        let rb = rev.to_reverse(b);
        rev.from_reverse(&ra.meet(&rev, &rb))
    }

    /// Greatest common suffix `a ∧↰ b = (a⁻¹ ∨ b⁻¹)⁻¹`.
    pub fn right_meet<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> Self {
        self.inverse(g).join(g, &b.inverse(g)).inverse(g)
    }

    /// Least common left multiple `a ∨↰ b = (a⁻¹ ∧ b⁻¹)⁻¹`.
    pub fn right_join<G: GarsideStructure<Simple = S>>(&self, g: &G, b: &Self) -> Self {
        self.inverse(g).meet(g, &b.inverse(g)).inverse(g)
    }
}
