//! The contract a concrete Garside structure of finite type must satisfy.
//!
//! Everything above this layer (normal forms, sliding, circuits) is written
//! against [`GarsideStructure`] and never looks inside a simple element.

use std::fmt::Debug;
use std::hash::Hash;

/// A Garside structure `(G, P, Δ)` of finite type, described through its
/// simple elements `[1, Δ]`.
///
/// The lattice operations take and return simple elements. Methods whose
/// result is only simple under a precondition (`product`, the quotients)
/// document it; callers are responsible for it.
pub trait GarsideStructure: Send + Sync {
    type Simple: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    fn name(&self) -> String;

    /// Atoms in the canonical order.
    fn atoms(&self) -> &[Self::Simple];

    fn identity(&self) -> Self::Simple;

    fn delta(&self) -> Self::Simple;

    /// `‖Δ‖`.
    fn norm_delta(&self) -> u32 {
        self.norm(self.delta())
    }

    /// Letter length of a simple element.
    fn norm(&self, s: Self::Simple) -> u32;

    /// `a ≼ b`.
    fn is_prefix(&self, a: Self::Simple, b: Self::Simple) -> bool;

    /// `a` is a suffix of `b`, i.e. `b ≽ a`.
    fn is_suffix(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.is_prefix(self.left_complement(b), self.left_complement(a))
    }

    /// `a ∧ b` for the prefix order.
    fn meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `a ∧↰ b`, the greatest common suffix.
    fn right_meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `a ∨ b` for the prefix order; simple because `Δ` is a common multiple.
    fn join(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple {
        self.left_complement(self.right_meet(self.complement(a), self.complement(b)))
    }

    /// `a ∨↰ b`, the least common left multiple.
    fn right_join(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple {
        self.complement(self.meet(self.left_complement(a), self.left_complement(b)))
    }

    /// Right complement `∂(s) = s⁻¹Δ`.
    fn complement(&self, s: Self::Simple) -> Self::Simple;

    /// Left complement `∂⁻¹(s) = Δs⁻¹`.
    fn left_complement(&self, s: Self::Simple) -> Self::Simple;

    /// `τ(s) = Δ⁻¹sΔ`.
    fn tau(&self, s: Self::Simple) -> Self::Simple;

    fn tau_inv(&self, s: Self::Simple) -> Self::Simple;

    /// Order of `τ` as an automorphism (a multiple of it is fine).
    fn tau_order(&self) -> i32;

    /// `τ^k(s)` for any integer `k`.
    fn tau_pow(&self, s: Self::Simple, k: i32) -> Self::Simple {
        let k = k.rem_euclid(self.tau_order());
        let mut out = s;
        for _ in 0..k {
            out = self.tau(out);
        }
        out
    }

    /// `a·b`; requires `b ≼ ∂(a)`.
    fn product(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `s⁻¹b`; requires `s ≼ b`.
    fn left_quotient(&self, s: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `b s⁻¹`; requires `s` to be a suffix of `b`.
    fn right_quotient(&self, b: Self::Simple, s: Self::Simple) -> Self::Simple;

    /// All simple elements, sorted by the canonical order.
    fn simples(&self) -> Vec<Self::Simple>;

    fn is_trivial(&self, s: Self::Simple) -> bool {
        s == self.identity()
    }

    fn is_delta(&self, s: Self::Simple) -> bool {
        s == self.delta()
    }

    /// `∂(a) ∧ b = 1`.
    fn is_left_weighted(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.is_trivial(self.meet(self.complement(a), b))
    }

    /// The generic meet: start from 1 and extend by atoms (in canonical
    /// order) while the extension stays below both arguments. Descriptors
    /// with a native meet are validated against this.
    fn meet_by_atom_extension(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple {
        let mut u = self.identity();
        'grow: loop {
            for &t in self.atoms() {
                if !self.is_prefix(t, self.complement(u)) {
                    continue;
                }
                let ut = self.product(u, t);
                if self.is_prefix(ut, a) && self.is_prefix(ut, b) {
                    u = ut;
                    continue 'grow;
                }
            }
            return u;
        }
    }
}

/// Exhaustively checks the descriptor invariants. Returns the first
/// violation found. Intended for tests and small structures.
pub fn check_contract<G: GarsideStructure>(g: &G) -> std::result::Result<(), String> {
    let simples = g.simples();
    let delta = g.delta();
    let id = g.identity();
    if !simples.windows(2).all(|w| w[0] < w[1]) {
        return Err("simples not strictly sorted".into());
    }
    if g.norm(id) != 0 {
        return Err("norm(1) != 0".into());
    }
    for &a in g.atoms() {
        if g.norm(a) != 1 {
            return Err(format!("atom {a:?} has norm {}", g.norm(a)));
        }
    }
    let nd = g.norm_delta();
    let mut tau_images = std::collections::HashSet::new();
    for &s in &simples {
        let c = g.complement(s);
        if g.product(s, c) != delta {
            return Err(format!("s·∂(s) != Δ for {s:?}"));
        }
        if g.complement(c) != g.tau(s) {
            return Err(format!("∂²(s) != τ(s) for {s:?}"));
        }
        if g.left_complement(c) != s || g.complement(g.left_complement(s)) != s {
            return Err(format!("∂⁻¹ is not inverse to ∂ at {s:?}"));
        }
        if g.norm(s) + g.norm(c) != nd {
            return Err(format!("‖s‖ + ‖∂(s)‖ != ‖Δ‖ for {s:?}"));
        }
        if g.tau_inv(g.tau(s)) != s {
            return Err(format!("τ⁻¹τ(s) != s for {s:?}"));
        }
        if !g.is_prefix(id, s) || !g.is_prefix(s, delta) || !g.is_suffix(s, delta) {
            return Err(format!("{s:?} not between 1 and Δ"));
        }
        tau_images.insert(g.tau(s));
    }
    if tau_images.len() != simples.len() {
        return Err("τ is not a bijection".into());
    }
    for &a in &simples {
        for &b in &simples {
            let m = g.meet(a, b);
            if !g.is_prefix(m, a) || !g.is_prefix(m, b) {
                return Err(format!("meet({a:?},{b:?}) is not a common prefix"));
            }
            if m != g.meet_by_atom_extension(a, b) {
                return Err(format!("native meet disagrees with atom extension at ({a:?},{b:?})"));
            }
            if g.tau(m) != g.meet(g.tau(a), g.tau(b)) {
                return Err(format!("τ does not commute with ∧ at ({a:?},{b:?})"));
            }
            if g.is_prefix(a, b) != g.is_prefix(g.tau(a), g.tau(b)) {
                return Err(format!("τ does not preserve ≼ at ({a:?},{b:?})"));
            }
            if g.is_prefix(a, b) {
                let q = g.left_quotient(a, b);
                if g.product(a, q) != b || g.norm(a) + g.norm(q) != g.norm(b) {
                    return Err(format!("left quotient broken at ({a:?},{b:?})"));
                }
            }
            if g.is_suffix(a, b) {
                let q = g.right_quotient(b, a);
                if g.product(q, a) != b {
                    return Err(format!("right quotient broken at ({a:?},{b:?})"));
                }
            }
            let rm = g.right_meet(a, b);
            if !g.is_suffix(rm, a) || !g.is_suffix(rm, b) {
                return Err(format!("right meet({a:?},{b:?}) is not a common suffix"));
            }
            let j = g.join(a, b);
            if !g.is_prefix(a, j) || !g.is_prefix(b, j) {
                return Err(format!("join({a:?},{b:?}) is not a common multiple"));
            }
        }
    }
    Ok(())
}
