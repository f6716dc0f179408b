//! Cyclic sliding and its relatives: cycling, decycling, the preferred
//! prefix and suffix, transport of conjugators, sliding trajectories, and
//! membership in the summit sets.

use std::collections::HashMap;
use std::collections::HashSet;

use crate::element::Element;
use crate::error::{GarsideError, Result};
use crate::structure::GarsideStructure;

type El<G> = Element<<G as GarsideStructure>::Simple>;

/// Default cap on trajectory length.
pub const DEFAULT_MAX_TRAJECTORY: usize = 1_000_000;

/// `ι(x) = τ^{-p}(x_1)`, or `1` for a power of `Δ`.
pub fn initial_factor<G: GarsideStructure>(g: &G, x: &El<G>) -> G::Simple {
    match x.factors().first() {
        Some(&x1) => g.tau_pow(x1, -x.inf()),
        None => g.identity(),
    }
}

/// `φ(x) = x_r`, or `Δ` for a power of `Δ`.
pub fn final_factor<G: GarsideStructure>(g: &G, x: &El<G>) -> G::Simple {
    x.factors().last().copied().unwrap_or_else(|| g.delta())
}

/// `𝔭(x) = ι(x) ∧ ∂(φ(x))`.
pub fn preferred_prefix<G: GarsideStructure>(g: &G, x: &El<G>) -> G::Simple {
    g.meet(initial_factor(g, x), g.complement(final_factor(g, x)))
}

/// `ι(x) ∧ ι(x⁻¹)`, the defining formula; slower than
/// [`preferred_prefix`], which must agree with it.
pub fn preferred_prefix_by_inverse<G: GarsideStructure>(g: &G, x: &El<G>) -> G::Simple {
    g.meet(initial_factor(g, x), initial_factor(g, &x.inverse(g)))
}

/// `𝔰(x) = x^{𝔭(x)}`.
pub fn cyclic_sliding<G: GarsideStructure>(g: &G, x: &El<G>) -> El<G> {
    x.conjugate_by_simple(g, preferred_prefix(g, x))
}

/// `c(x) = x^{ι(x)}`; a power of `Δ` is returned unchanged.
pub fn cycling<G: GarsideStructure>(g: &G, x: &El<G>) -> El<G> {
    if x.is_delta_power() {
        return x.clone();
    }
    x.conjugate_by_simple(g, initial_factor(g, x))
}

/// `d(x) = x_r x x_r⁻¹`; a power of `Δ` is returned unchanged.
pub fn decycling<G: GarsideStructure>(g: &G, x: &El<G>) -> El<G> {
    if x.is_delta_power() {
        return x.clone();
    }
    x.conjugate_by_simple_inv(g, final_factor(g, x))
}

/// `𝔭↰(x) = (Δ^{-inf x} x) ∧↰ (Δ^{sup x} x⁻¹) ∧↰ Δ`.
pub fn preferred_suffix<G: GarsideStructure>(g: &G, x: &El<G>) -> G::Simple {
    if x.is_delta_power() {
        return g.identity();
    }
    let a = x.delta_pow_mul(-x.inf());
    let b = x.inverse(g).delta_pow_mul(x.sup());
    let m = a.right_meet(g, &b).right_meet(g, &Element::delta_pow(1));
    m.as_simple(g).expect("a common suffix of Δ is simple")
}

/// `𝔰↰(x) = 𝔭↰(x) x 𝔭↰(x)⁻¹`.
pub fn cyclic_right_sliding<G: GarsideStructure>(g: &G, x: &El<G>) -> El<G> {
    x.conjugate_by_simple_inv(g, preferred_suffix(g, x))
}

/// `𝔰^k(x)`.
pub fn iterated_sliding<G: GarsideStructure>(g: &G, x: &El<G>, k: usize) -> El<G> {
    let mut y = x.clone();
    for _ in 0..k {
        y = cyclic_sliding(g, &y);
    }
    y
}

/// `α⁽¹⁾ = 𝔭(x)⁻¹ α 𝔭(x^α)`.
pub fn transport<G: GarsideStructure>(g: &G, alpha: &El<G>, x: &El<G>) -> El<G> {
    let y = x.conjugate(g, alpha);
    alpha.simple_inv_mul(g, preferred_prefix(g, x)).mul_simple(g, preferred_prefix(g, &y))
}

/// `α⁽ⁱ⁾`, transporting along `x, 𝔰(x), …, 𝔰^{i-1}(x)`.
pub fn iterated_transport<G: GarsideStructure>(g: &G, alpha: &El<G>, x: &El<G>, i: usize) -> El<G> {
    let mut a = alpha.clone();
    let mut y = x.clone();
    for _ in 0..i {
        a = transport(g, &a, &y);
        y = cyclic_sliding(g, &y);
    }
    a
}

/// `α^{↰(1)} = 𝔭↰(x^{α⁻¹}) α 𝔭↰(x)⁻¹`.
pub fn right_transport<G: GarsideStructure>(g: &G, alpha: &El<G>, x: &El<G>) -> El<G> {
    let y = x.conjugate(g, &alpha.inverse(g));
    alpha.simple_mul(g, preferred_suffix(g, &y)).mul_simple_inv(g, preferred_suffix(g, x))
}

/// `𝔓_i(x) = 𝔭(x) 𝔭(𝔰(x)) ⋯ 𝔭(𝔰^{i-1}(x))`.
pub fn prefix_product<G: GarsideStructure>(g: &G, x: &El<G>, i: usize) -> El<G> {
    let mut p = Element::identity();
    let mut y = x.clone();
    for _ in 0..i {
        let s = preferred_prefix(g, &y);
        p = p.mul_simple(g, s);
        y = y.conjugate_by_simple(g, s);
    }
    p
}

/// `x` is rigid when `𝔭(x) = 1`.
pub fn is_rigid<G: GarsideStructure>(g: &G, x: &El<G>) -> bool {
    g.is_trivial(preferred_prefix(g, x))
}

/// The iterates `x, 𝔰(x), 𝔰²(x), …` up to the first repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingTrajectory<S> {
    /// `states[i] = 𝔰^i(x)`; the last state repeats `states[entry]`.
    pub states: Vec<Element<S>>,
    /// `prefixes[i] = 𝔭(states[i])`, so `states[i]^{prefixes[i]} = states[i+1]`.
    pub prefixes: Vec<S>,
    /// Smallest `N` with `𝔰^N(x)` in a sliding circuit.
    pub entry: usize,
    /// Length `M` of that circuit.
    pub period: usize,
}

impl<S: Copy + Eq + std::fmt::Debug> SlidingTrajectory<S> {
    pub fn start(&self) -> &Element<S> {
        &self.states[0]
    }

    /// `𝔰^N(x)`, the first state on the circuit.
    pub fn representative(&self) -> &Element<S> {
        &self.states[self.entry]
    }

    /// The states on the circuit.
    pub fn circuit(&self) -> &[Element<S>] {
        &self.states[self.entry..self.entry + self.period]
    }

    /// `𝔓_i(x)` for `i` up to the trajectory length.
    pub fn prefix_product<G: GarsideStructure<Simple = S>>(&self, g: &G, i: usize) -> Element<S> {
        let mut p = Element::identity();
        for &s in &self.prefixes[..i] {
            p = p.mul_simple(g, s);
        }
        p
    }

    /// `𝔓_N(x)`, conjugating `x` to the representative.
    pub fn witness<G: GarsideStructure<Simple = S>>(&self, g: &G) -> Element<S> {
        self.prefix_product(g, self.entry)
    }
}

/// Slides until a state repeats. Fails if more than `cap` states are seen.
pub fn trajectory<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<SlidingTrajectory<G::Simple>> {
    let mut seen: HashMap<El<G>, usize> = HashMap::new();
    let mut states = vec![x.clone()];
    let mut prefixes = Vec::new();
    seen.insert(x.clone(), 0);
    loop {
        let y = states.last().unwrap();
        let s = preferred_prefix(g, y);
        let z = y.conjugate_by_simple(g, s);
        prefixes.push(s);
        if let Some(&entry) = seen.get(&z) {
            let period = states.len() - entry;
            states.push(z);
            return Ok(SlidingTrajectory { states, prefixes, entry, period });
        }
        if states.len() >= cap {
            return Err(GarsideError::BudgetExhausted { what: "trajectory length", limit: cap });
        }
        seen.insert(z.clone(), states.len());
        states.push(z);
    }
}

/// A conjugate in a sliding circuit, with `𝔓_N(x)` conjugating `x` to it.
pub fn slide_to_circuit<G: GarsideStructure>(
    g: &G,
    x: &El<G>,
    cap: usize,
) -> Result<(El<G>, El<G>, SlidingTrajectory<G::Simple>)> {
    let t = trajectory(g, x, cap)?;
    Ok((t.representative().clone(), t.witness(g), t))
}

/// Summit infimum, supremum and canonical length of the conjugacy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SummitInvariants {
    pub inf_s: i32,
    pub sup_s: i32,
    pub ell_s: usize,
}

impl SummitInvariants {
    pub fn of<S: Copy + Eq>(summit: &Element<S>) -> Self {
        SummitInvariants { inf_s: summit.inf(), sup_s: summit.sup(), ell_s: summit.len() }
    }

    pub fn matches<S: Copy + Eq>(&self, y: &Element<S>) -> bool {
        y.inf() == self.inf_s && y.len() == self.ell_s
    }
}

pub fn summit_invariants<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<SummitInvariants> {
    let t = trajectory(g, x, cap)?;
    Ok(SummitInvariants::of(t.representative()))
}

/// `x ∈ SC(x)`: `x` lies on its own sliding circuit.
pub fn in_sc<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<bool> {
    Ok(trajectory(g, x, cap)?.entry == 0)
}

pub fn in_sss<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<bool> {
    Ok(summit_invariants(g, x, cap)?.matches(x))
}

/// `x` recurs under the map `f`.
fn recurrent<S: Copy + Eq + std::hash::Hash>(x: &Element<S>, f: impl Fn(&Element<S>) -> Element<S>, cap: usize) -> Result<bool> {
    let mut seen = HashSet::new();
    let mut y = x.clone();
    loop {
        if !seen.insert(y.clone()) {
            return Ok(false);
        }
        if seen.len() > cap {
            return Err(GarsideError::BudgetExhausted { what: "cycling orbit", limit: cap });
        }
        y = f(&y);
        if y == *x {
            return Ok(true);
        }
    }
}

/// `x ∈ USS(x)`: super summit and recurrent under cycling.
pub fn in_uss<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<bool> {
    Ok(in_sss(g, x, cap)? && recurrent(x, |y| cycling(g, y), cap)?)
}

/// `x ∈ RSSS(x)`: super summit and recurrent under both cycling and
/// decycling.
pub fn in_rsss<G: GarsideStructure>(g: &G, x: &El<G>, cap: usize) -> Result<bool> {
    Ok(in_uss(g, x, cap)? && recurrent(x, |y| decycling(g, y), cap)?)
}
