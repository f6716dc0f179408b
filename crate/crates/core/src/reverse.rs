//! The reverse Garside structure `(G, P⁻¹, Δ⁻¹)`.
//!
//! A simple element `s` of the base structure stands for the simple element
//! `s⁻¹` of the reverse one, so both share one set of values. Prefixes in the
//! reverse structure are suffixes in the base one, and vice versa.

use crate::element::{Element, Letter};
use crate::structure::GarsideStructure;

#[derive(Debug, Clone, Copy)]
pub struct Rev<'a, G> {
    base: &'a G,
}

impl<'a, G: GarsideStructure> Rev<'a, G> {
    pub fn new(base: &'a G) -> Self {
        Rev { base }
    }

    pub fn base(&self) -> &'a G {
        self.base
    }

    /// Rewrites a base element in the reverse structure: `Δ` is `(Δ⁻¹)⁻¹`
    /// and each factor `x_i` is `(x_i⁻¹)⁻¹`.
    pub fn to_reverse(&self, x: &Element<G::Simple>) -> Element<G::Simple> {
        Element::from_word(self, &self.flip(x))
    }

    /// Inverse of [`Rev::to_reverse`].
    pub fn from_reverse(&self, x: &Element<G::Simple>) -> Element<G::Simple> {
        Element::from_word(self.base, &self.flip(x))
    }

    fn flip(&self, x: &Element<G::Simple>) -> Vec<Letter<G::Simple>> {
        let d = self.base.delta();
        let mut w = Vec::new();
        for _ in 0..x.inf().unsigned_abs() {
            w.push(if x.inf() > 0 { Letter::Neg(d) } else { Letter::Pos(d) });
        }
        w.extend(x.factors().iter().map(|&s| Letter::Neg(s)));
        w
    }
}

impl<G: GarsideStructure> GarsideStructure for Rev<'_, G> {
    type Simple = G::Simple;

    fn name(&self) -> String {
        format!("rev({})", self.base.name())
    }

    fn atoms(&self) -> &[G::Simple] {
        self.base.atoms()
    }

    fn identity(&self) -> G::Simple {
        self.base.identity()
    }

    fn delta(&self) -> G::Simple {
        self.base.delta()
    }

    fn norm_delta(&self) -> u32 {
        self.base.norm_delta()
    }

    fn norm(&self, s: G::Simple) -> u32 {
        self.base.norm(s)
    }

    fn is_prefix(&self, a: G::Simple, b: G::Simple) -> bool {
        self.base.is_suffix(a, b)
    }

    fn is_suffix(&self, a: G::Simple, b: G::Simple) -> bool {
        self.base.is_prefix(a, b)
    }

    fn meet(&self, a: G::Simple, b: G::Simple) -> G::Simple {
        self.base.right_meet(a, b)
    }

    fn right_meet(&self, a: G::Simple, b: G::Simple) -> G::Simple {
        self.base.meet(a, b)
    }

    fn complement(&self, s: G::Simple) -> G::Simple {
        self.base.left_complement(s)
    }

    fn left_complement(&self, s: G::Simple) -> G::Simple {
        self.base.complement(s)
    }

    fn tau(&self, s: G::Simple) -> G::Simple {
        self.base.tau_inv(s)
    }

    fn tau_inv(&self, s: G::Simple) -> G::Simple {
        self.base.tau(s)
    }

    fn tau_order(&self) -> i32 {
        self.base.tau_order()
    }

    fn tau_pow(&self, s: G::Simple, k: i32) -> G::Simple {
        self.base.tau_pow(s, -k)
    }

    fn product(&self, a: G::Simple, b: G::Simple) -> G::Simple {
        self.base.product(b, a)
    }

    fn left_quotient(&self, s: G::Simple, b: G::Simple) -> G::Simple {
        self.base.right_quotient(b, s)
    }

    fn right_quotient(&self, b: G::Simple, s: G::Simple) -> G::Simple {
        self.base.left_quotient(s, b)
    }

    fn simples(&self) -> Vec<G::Simple> {
        self.base.simples()
    }
}
