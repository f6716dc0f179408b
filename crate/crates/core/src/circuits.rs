//! Sets of sliding circuits, the sliding circuits graph, super summit sets,
//! and the conjugacy decision and search problems.
//!
//! Arrows of the graph are found the simple way: conjugate by every simple
//! element, keep those landing in the set of sliding circuits, and reduce to
//! the minimal ones. Since the set of good conjugators is closed under `∧`,
//! the minimal one above an atom `a` is the meet of all good ones above `a`.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::element::Element;
use crate::error::{GarsideError, Result};
use crate::sliding::{preferred_prefix, slide_to_circuit, trajectory, SummitInvariants, DEFAULT_MAX_TRAJECTORY};
use crate::structure::GarsideStructure;

type El<G> = Element<<G as GarsideStructure>::Simple>;

/// Explicit limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Vertices of a graph, or elements of a super summit set.
    pub max_vertices: usize,
    /// States of a single sliding trajectory.
    pub max_trajectory: usize,
    /// Candidate conjugators tried by the minimal-conjugator searches.
    pub max_candidates: usize,
    /// Evaluate independent vertices on the rayon pool. Output is the same
    /// either way.
    pub parallel: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 1_000_000,
            max_trajectory: DEFAULT_MAX_TRAJECTORY,
            max_candidates: 1_000_000,
            parallel: false,
        }
    }
}

/// Answers "is `y` in its own sliding circuit?" for conjugates of a fixed
/// element, remembering every trajectory it has walked.
#[derive(Debug)]
pub struct ScOracle<S> {
    summit: SummitInvariants,
    memo: HashMap<Element<S>, bool>,
    cap: usize,
}

impl<S: Copy + Eq + Ord + std::hash::Hash + std::fmt::Debug> ScOracle<S> {
    pub fn new(summit: SummitInvariants, cap: usize) -> Self {
        ScOracle { summit, memo: HashMap::new(), cap }
    }

    pub fn summit(&self) -> SummitInvariants {
        self.summit
    }

    pub fn contains<G: GarsideStructure<Simple = S>>(&mut self, g: &G, y: &Element<S>) -> Result<bool> {
        sc_membership(g, y, self.summit, self.cap, Some(&mut self.memo))
    }

    /// Records the states of a circuit that is already known.
    pub fn mark_circuit(&mut self, circuit: &[Element<S>]) {
        for c in circuit {
            self.memo.insert(c.clone(), true);
        }
    }
}

/// SC membership for a conjugate `y` of an element with summit invariants
/// `summit`. Elements outside the super summit set are rejected without
/// sliding; otherwise the trajectory of `y` is followed until it meets a
/// known state or closes up.
fn sc_membership<G: GarsideStructure>(
    g: &G,
    y: &El<G>,
    summit: SummitInvariants,
    cap: usize,
    memo: Option<&mut HashMap<El<G>, bool>>,
) -> Result<bool> {
    if !summit.matches(y) {
        return Ok(false);
    }
    let Some(memo) = memo else {
        return Ok(trajectory(g, y, cap)?.entry == 0);
    };
    if let Some(&b) = memo.get(y) {
        return Ok(b);
    }
    let mut path: Vec<El<G>> = vec![y.clone()];
    let mut index: HashMap<El<G>, usize> = HashMap::new();
    index.insert(y.clone(), 0);
    loop {
        let last = path.last().unwrap();
        let z = last.conjugate_by_simple(g, preferred_prefix(g, last));
        if memo.contains_key(&z) {
            // Known states come in whole circuits or in paths leading into
            // one, so nothing on this path lies on a circuit.
            for p in path {
                memo.insert(p, false);
            }
            return Ok(false);
        }
        if let Some(&entry) = index.get(&z) {
            for (i, p) in path.into_iter().enumerate() {
                memo.insert(p, i >= entry);
            }
            return Ok(entry == 0);
        }
        if path.len() >= cap {
            return Err(GarsideError::BudgetExhausted { what: "trajectory length", limit: cap });
        }
        index.insert(z.clone(), path.len());
        path.push(z);
    }
}

/// `x^s` over all nontrivial simples `s`, keeping those in SC; then the
/// distinct minimal elements among the per-atom meets.
pub fn indecomposable_conjugators<G: GarsideStructure>(
    g: &G,
    y: &El<G>,
    oracle: &mut ScOracle<G::Simple>,
) -> Result<Vec<G::Simple>> {
    if !oracle.contains(g, y)? {
        return Err(GarsideError::NotInSlidingCircuits);
    }
    let mut good = Vec::new();
    for s in g.simples() {
        if g.is_trivial(s) {
            continue;
        }
        if oracle.contains(g, &y.conjugate_by_simple(g, s))? {
            good.push(s);
        }
    }
    Ok(minimal_by_atoms(g, &good))
}

/// For each atom, the meet of the good conjugators above it; then the
/// minimal ones among those, sorted.
fn minimal_by_atoms<G: GarsideStructure>(g: &G, good: &[G::Simple]) -> Vec<G::Simple> {
    let mut per_atom = Vec::new();
    for &a in g.atoms() {
        let mut m: Option<G::Simple> = None;
        for &s in good {
            if g.is_prefix(a, s) {
                m = Some(match m {
                    None => s,
                    Some(t) => g.meet(t, s),
                });
            }
        }
        if let Some(m) = m {
            per_atom.push(m);
        }
    }
    per_atom.sort();
    per_atom.dedup();
    let minimal: Vec<_> = per_atom
        .iter()
        .copied()
        .filter(|&m| !per_atom.iter().any(|&o| o != m && g.is_prefix(o, m)))
        .collect();
    minimal
}

/// Version of [`indecomposable_conjugators`] that shares no state, for use
/// from several threads.
fn arrows_stateless<G: GarsideStructure>(g: &G, y: &El<G>, summit: SummitInvariants, cap: usize) -> Result<Vec<G::Simple>> {
    let mut memo = HashMap::new();
    let mut good = Vec::new();
    for s in g.simples() {
        if g.is_trivial(s) {
            continue;
        }
        if sc_membership(g, &y.conjugate_by_simple(g, s), summit, cap, Some(&mut memo))? {
            good.push(s);
        }
    }
    Ok(minimal_by_atoms(g, &good))
}

/// One arrow `source --s--> target` of the graph, by vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow<S> {
    pub source: usize,
    pub conjugator: S,
    pub target: usize,
}

/// The sliding circuits graph of an element.
#[derive(Debug, Clone)]
pub struct SlidingCircuitsGraph<S> {
    pub base: Element<S>,
    /// Vertices in discovery order; the first one is where sliding the base
    /// element lands.
    pub vertices: Vec<Element<S>>,
    pub arrows: Vec<Arrow<S>>,
    /// `witness[i]` conjugates `base` to `vertices[i]`.
    pub witness: Vec<Element<S>>,
    index: HashMap<Element<S>, usize>,
}

impl<S: Copy + Eq + Ord + std::hash::Hash + std::fmt::Debug> SlidingCircuitsGraph<S> {
    pub fn vertex_index(&self, y: &Element<S>) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in the canonical element order.
    pub fn sorted_vertices(&self) -> Vec<Element<S>> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i).count()
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Builds `SCG(x)`: slide `x` into a circuit, then close up under the
/// indecomposable conjugators, breadth first. Vertices, arrows and
/// witnesses come out in the same order with or without parallelism.
pub fn compute_scg<G: GarsideStructure>(g: &G, x: &El<G>, budget: &Budget) -> Result<SlidingCircuitsGraph<G::Simple>> {
    let (rep, w, t) = slide_to_circuit(g, x, budget.max_trajectory)?;
    let summit = SummitInvariants::of(&rep);
    let mut oracle = ScOracle::new(summit, budget.max_trajectory);
    oracle.mark_circuit(t.circuit());
    let mut graph = SlidingCircuitsGraph {
        base: x.clone(),
        vertices: vec![rep.clone()],
        arrows: Vec::new(),
        witness: vec![w],
        index: HashMap::from([(rep, 0)]),
    };
    let mut next = 0;
    while next < graph.vertices.len() {
        let end = graph.vertices.len();
        let level: Vec<Vec<G::Simple>> = if budget.parallel && end - next > 1 {
            graph.vertices[next..end]
                .par_iter()
                .map(|v| arrows_stateless(g, v, summit, budget.max_trajectory))
                .collect::<Result<_>>()?
        } else {
            let mut out = Vec::with_capacity(end - next);
            for v in &graph.vertices[next..end] {
                out.push(indecomposable_conjugators(g, v, &mut oracle)?);
            }
            out
        };
        for (offset, arrows) in level.into_iter().enumerate() {
            let source = next + offset;
            for s in arrows {
                let y = graph.vertices[source].conjugate_by_simple(g, s);
                let target = match graph.index.get(&y) {
                    Some(&i) => i,
                    None => {
                        if graph.vertices.len() >= budget.max_vertices {
                            return Err(GarsideError::BudgetExhausted {
                                what: "graph vertices",
                                limit: budget.max_vertices,
                            });
                        }
                        let i = graph.vertices.len();
                        let wy = graph.witness[source].mul_simple(g, s);
                        graph.index.insert(y.clone(), i);
                        graph.vertices.push(y);
                        graph.witness.push(wy);
                        i
                    }
                };
                graph.arrows.push(Arrow { source, conjugator: s, target });
            }
        }
        next = end;
    }
    Ok(graph)
}

/// `SC(x)`, sorted.
pub fn sliding_circuits<G: GarsideStructure>(g: &G, x: &El<G>, budget: &Budget) -> Result<Vec<El<G>>> {
    Ok(compute_scg(g, x, budget)?.sorted_vertices())
}

/// A conjugating element `c` with `from^c = to`, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatorWitness<S> {
    pub from: Element<S>,
    pub to: Element<S>,
    pub conjugator: Element<S>,
}

impl<S: Copy + Eq + Ord + std::hash::Hash + std::fmt::Debug> ConjugatorWitness<S> {
    pub fn new<G: GarsideStructure<Simple = S>>(g: &G, from: Element<S>, to: Element<S>, conjugator: Element<S>) -> Result<Self> {
        if from.conjugate(g, &conjugator) != to {
            return Err(GarsideError::WitnessMismatch(format!("{from:?}^{conjugator:?} != {to:?}")));
        }
        Ok(ConjugatorWitness { from, to, conjugator })
    }
}

/// Conjugacy search: `Some(c)` with `x^c = y`, or `None`.
pub fn solve_csp<G: GarsideStructure>(
    g: &G,
    x: &El<G>,
    y: &El<G>,
    budget: &Budget,
) -> Result<Option<ConjugatorWitness<G::Simple>>> {
    let (rx, _, _) = slide_to_circuit(g, x, budget.max_trajectory)?;
    let (ry, wy, _) = slide_to_circuit(g, y, budget.max_trajectory)?;
    if SummitInvariants::of(&rx) != SummitInvariants::of(&ry) {
        return Ok(None);
    }
    let graph = compute_scg(g, x, budget)?;
    let Some(i) = graph.vertex_index(&ry) else {
        return Ok(None);
    };
    // x^{w_i} = ry = y^{wy}, so x^{w_i wy⁻¹} = y
    let c = graph.witness[i].multiply(g, &wy.inverse(g));
    ConjugatorWitness::new(g, x.clone(), y.clone(), c).map(Some)
}

/// Conjugacy decision.
pub fn solve_cdp<G: GarsideStructure>(g: &G, x: &El<G>, y: &El<G>, budget: &Budget) -> Result<bool> {
    Ok(solve_csp(g, x, y, budget)?.is_some())
}

/// `SSS(x)`, sorted: closure of a super summit conjugate under simple
/// conjugations that stay in the super summit set.
pub fn compute_sss<G: GarsideStructure>(g: &G, x: &El<G>, budget: &Budget) -> Result<Vec<El<G>>> {
    let (rep, _, _) = slide_to_circuit(g, x, budget.max_trajectory)?;
    let summit = SummitInvariants::of(&rep);
    let simples: Vec<_> = g.simples().into_iter().filter(|&s| !g.is_trivial(s)).collect();
    let mut seen: HashMap<El<G>, ()> = HashMap::from([(rep.clone(), ())]);
    let mut queue = VecDeque::from([rep]);
    while let Some(y) = queue.pop_front() {
        for &s in &simples {
            let z = y.conjugate_by_simple(g, s);
            if summit.matches(&z) && !seen.contains_key(&z) {
                if seen.len() >= budget.max_vertices {
                    return Err(GarsideError::BudgetExhausted { what: "super summit set", limit: budget.max_vertices });
                }
                seen.insert(z.clone(), ());
                queue.push_back(z);
            }
        }
    }
    let mut out: Vec<_> = seen.into_keys().collect();
    out.sort();
    Ok(out)
}

/// Smallest positive `c` (for `≼`) with `pred(x^c)`, by breadth-first search
/// over positive elements of increasing letter length. The predicate must
/// define a set closed under `∧` of conjugators, so the first success at the
/// smallest length is the unique minimum.
fn minimal_conjugator<G: GarsideStructure>(
    g: &G,
    x: &El<G>,
    budget: &Budget,
    mut pred: impl FnMut(&El<G>) -> Result<bool>,
) -> Result<El<G>> {
    let mut level: Vec<El<G>> = vec![Element::identity()];
    let mut tried = 0usize;
    loop {
        let mut hits = Vec::new();
        for c in &level {
            tried += 1;
            if tried > budget.max_candidates {
                return Err(GarsideError::BudgetExhausted { what: "conjugator candidates", limit: budget.max_candidates });
            }
            if pred(&x.conjugate(g, c))? {
                hits.push(c.clone());
            }
        }
        if let Some(first) = hits.first() {
            // all hits of minimal length coincide with their meet
            let m = hits.iter().skip(1).fold(first.clone(), |acc, h| acc.meet(g, h));
            debug_assert!(hits.iter().all(|h| *h == m));
            return Ok(m);
        }
        let mut next: Vec<El<G>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for c in &level {
            for &a in g.atoms() {
                let ca = c.mul_simple(g, a);
                if seen.insert(ca.clone()) {
                    next.push(ca);
                }
            }
        }
        next.sort();
        level = next;
    }
}

/// `c(x)`: the smallest positive conjugator into `SC(x)`.
pub fn minimal_sc_conjugator<G: GarsideStructure>(g: &G, x: &El<G>, budget: &Budget) -> Result<El<G>> {
    let (rep, _, t) = slide_to_circuit(g, x, budget.max_trajectory)?;
    let mut oracle = ScOracle::new(SummitInvariants::of(&rep), budget.max_trajectory);
    oracle.mark_circuit(t.circuit());
    minimal_conjugator(g, x, budget, |y| oracle.contains(g, y))
}

/// `ρ(x)`: the smallest positive conjugator into `SSS(x)`.
pub fn minimal_sss_conjugator<G: GarsideStructure>(g: &G, x: &El<G>, budget: &Budget) -> Result<El<G>> {
    let (rep, _, _) = slide_to_circuit(g, x, budget.max_trajectory)?;
    let summit = SummitInvariants::of(&rep);
    minimal_conjugator(g, x, budget, |y| Ok(summit.matches(y)))
}
