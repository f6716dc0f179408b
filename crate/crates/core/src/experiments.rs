//! Exhaustive statistics over conjugacy classes of summit canonical length 1.
//!
//! Every element `Δ^i s` with `s ∉ {1, Δ}` is super summit with `inf_s = i`
//! and `ℓ_s = 1` (its exponent sum rules out a conjugate that is a power of
//! `Δ`), and every such class contains one. So the classes are found by
//! walking the simples in order and skipping those already covered by the
//! super summit set of an earlier class.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::circuits::{compute_scg, compute_sss, Budget};
use crate::element::Element;
use crate::error::{GarsideError, Result};
use crate::structure::GarsideStructure;

/// One conjugacy class: its smallest sliding circuit element, and the sizes
/// of its super summit set and set of sliding circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord<S> {
    pub representative: Element<S>,
    pub sss: usize,
    pub sc: usize,
}

/// The classes, plus the seeds of any class skipped because a budget ran
/// out.
#[derive(Debug, Clone)]
pub struct Enumeration<S> {
    pub classes: Vec<ClassRecord<S>>,
    pub skipped: Vec<(Element<S>, GarsideError)>,
}

/// All conjugacy classes with summit infimum `i` and summit canonical length
/// 1, sorted by representative. The sliding circuit graphs are built on the
/// rayon pool when `budget.parallel` is set; the result does not depend on
/// it.
pub fn enumerate_length_one_classes<G: GarsideStructure>(g: &G, i: i32, budget: &Budget) -> Result<Enumeration<G::Simple>> {
    let mut covered: HashSet<G::Simple> = HashSet::new();
    let mut seeds = Vec::new();
    let mut skipped = Vec::new();
    for s in g.simples() {
        if g.is_trivial(s) || g.is_delta(s) || covered.contains(&s) {
            continue;
        }
        let x = Element::from_simple(g, s).delta_pow_mul(i);
        match compute_sss(g, &x, budget) {
            Ok(sss) => {
                for y in &sss {
                    debug_assert_eq!((y.inf(), y.len()), (i, 1));
                    covered.insert(y.factors()[0]);
                }
                seeds.push((x, sss.len()));
            }
            Err(e) if e.is_budget() => {
                covered.insert(s);
                skipped.push((x, e));
            }
            Err(e) => return Err(e),
        }
    }
    let graph = |(x, sss): &(Element<G::Simple>, usize)| -> Result<std::result::Result<ClassRecord<G::Simple>, GarsideError>> {
        match compute_scg(g, x, &Budget { parallel: false, ..*budget }) {
            Ok(scg) => {
                let representative = scg.vertices.iter().min().cloned().expect("graph has a vertex");
                Ok(Ok(ClassRecord { representative, sss: *sss, sc: scg.len() }))
            }
            Err(e) if e.is_budget() => Ok(Err(e)),
            Err(e) => Err(e),
        }
    };
    let outcomes: Vec<_> = if budget.parallel {
        seeds.par_iter().map(graph).collect::<Result<_>>()?
    } else {
        seeds.iter().map(graph).collect::<Result<_>>()?
    };
    let mut classes = Vec::new();
    for ((x, _), o) in seeds.into_iter().zip(outcomes) {
        match o {
            Ok(c) => classes.push(c),
            Err(e) => skipped.push((x, e)),
        }
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(Enumeration { classes, skipped })
}

/// One row of the statistics table.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassStatisticsRow {
    pub structure: String,
    pub n: usize,
    pub i: i32,
    pub classes: usize,
    pub max_sss: usize,
    pub max_sc: usize,
    pub max_ratio: f64,
    pub cmean_sss: f64,
    pub cmean_sc: f64,
    pub cmean_ratio: f64,
    /// Means over elements: each class weighted by its super summit set.
    pub emean_sss: f64,
    pub emean_sc: f64,
    pub emean_ratio: f64,
}

pub const CSV_HEADER: &str =
    "structure,n,i,classes,max_sss,max_sc,max_ratio,cmean_sss,cmean_sc,cmean_ratio,emean_sss,emean_sc,emean_ratio";

impl ClassStatisticsRow {
    pub fn from_classes<S>(structure: &str, n: usize, i: i32, classes: &[ClassRecord<S>]) -> Self {
        let k = classes.len() as f64;
        let ratio = |c: &ClassRecord<S>| c.sss as f64 / c.sc as f64;
        let total: f64 = classes.iter().map(|c| c.sss as f64).sum();
        let cmean = |f: &dyn Fn(&ClassRecord<S>) -> f64| classes.iter().map(f).sum::<f64>() / k;
        let emean = |f: &dyn Fn(&ClassRecord<S>) -> f64| classes.iter().map(|c| c.sss as f64 * f(c)).sum::<f64>() / total;
        ClassStatisticsRow {
            structure: structure.to_string(),
            n,
            i,
            classes: classes.len(),
            max_sss: classes.iter().map(|c| c.sss).max().unwrap_or(0),
            max_sc: classes.iter().map(|c| c.sc).max().unwrap_or(0),
            max_ratio: classes.iter().map(ratio).fold(0.0, f64::max),
            cmean_sss: cmean(&|c| c.sss as f64),
            cmean_sc: cmean(&|c| c.sc as f64),
            cmean_ratio: cmean(&ratio),
            emean_sss: emean(&|c| c.sss as f64),
            emean_sc: emean(&|c| c.sc as f64),
            emean_ratio: emean(&ratio),
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.structure,
            self.n,
            self.i,
            self.classes,
            self.max_sss,
            self.max_sc,
            sig6(self.max_ratio),
            sig6(self.cmean_sss),
            sig6(self.cmean_sc),
            sig6(self.cmean_ratio),
            sig6(self.emean_sss),
            sig6(self.emean_sc),
            sig6(self.emean_ratio),
        )
    }
}

/// CSV with header; an empty slice gives the header alone.
pub fn rows_to_csv(rows: &[ClassStatisticsRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

/// Six significant digits without trailing zeros, like C's `%g`.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.5e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let body = if (-5..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, x)
    } else {
        sci[..sci.find('e').unwrap()].to_string()
    };
    let body = if body.contains('.') { body.trim_end_matches('0').trim_end_matches('.').to_string() } else { body };
    if (-5..6).contains(&exp) {
        body
    } else {
        format!("{body}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}
