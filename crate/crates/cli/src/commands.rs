//! The subcommands, each producing text, JSON and CSV renderings.

use garside::circuits::{compute_scg, solve_csp, Budget};
use garside::experiments::{enumerate_length_one_classes, ClassStatisticsRow, CSV_HEADER};
use garside::sliding::{cyclic_sliding, is_rigid, iterated_sliding, preferred_prefix, prefix_product, trajectory};
use garside::{Element, GarsideError, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::words::{element_json, format_element, format_simple, parse_element, Dialect};

/// What a command prints, in each format.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub csv: String,
}

/// How a command ended, when it did not fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    NotConjugate,
    /// The output is partial because a budget ran out.
    Incomplete,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn nf<G: Dialect>(g: &G, word: &str) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let text = format_element(g, &x);
    Ok(Output {
        csv: format!("inf,len,word\n{},{},{}\n", x.inf(), x.len(), csv_field(&text)),
        json: element_json(g, &x),
        text,
    })
}

pub fn slide<G: Dialect>(g: &G, word: &str, k: usize) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let y = iterated_sliding(g, &x, k);
    let text = format_element(g, &y);
    Ok(Output {
        csv: format!("k,word\n{k},{}\n", csv_field(&text)),
        json: json!({ "k": k, "element": element_json(g, &y) }),
        text,
    })
}

/// The sliding trajectory with the preferred prefix used at each step; `N`
/// is the number of slides before the first element of a circuit, and `M`
/// the circuit length.
pub fn traj<G: Dialect>(g: &G, word: &str, budget: &Budget) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let t = trajectory(g, &x, budget.max_trajectory)?;
    let mut text = String::new();
    let mut csv = String::from("i,element,prefix\n");
    let mut steps = Vec::new();
    for (i, y) in t.states.iter().enumerate().take(t.entry + t.period) {
        let p = preferred_prefix(g, y);
        let (ys, ps) = (format_element(g, y), format_simple(g, p));
        text.push_str(&format!("{i}: {ys}    p = {ps}\n"));
        csv.push_str(&format!("{i},{},{}\n", csv_field(&ys), csv_field(&ps)));
        steps.push(json!({ "element": element_json(g, y), "prefix": g.simple_json(p) }));
    }
    text.push_str(&format!("N = {}, M = {}", t.entry, t.period));
    Ok(Output { text, csv, json: json!({ "states": steps, "N": t.entry, "M": t.period }) })
}

pub fn sc<G: Dialect>(g: &G, word: &str, budget: &Budget) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let vertices = compute_scg(g, &x, budget)?.sorted_vertices();
    let words: Vec<String> = vertices.iter().map(|v| format_element(g, v)).collect();
    let mut csv = String::from("index,word\n");
    for (i, w) in words.iter().enumerate() {
        csv.push_str(&format!("{i},{}\n", csv_field(w)));
    }
    Ok(Output {
        text: words.join("\n"),
        csv,
        json: json!({
            "size": vertices.len(),
            "elements": vertices.iter().map(|v| element_json(g, v)).collect::<Vec<_>>(),
        }),
    })
}

/// Vertices in canonical order, and arrows labelled by their simple
/// conjugators. With `dot`, the text rendering is a Graphviz digraph.
pub fn scg<G: Dialect>(g: &G, word: &str, budget: &Budget, dot: bool) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let graph = compute_scg(g, &x, budget)?;
    let sorted = graph.sorted_vertices();
    let rank = |i: usize| sorted.binary_search(&graph.vertices[i]).expect("vertex is in the sorted list");
    let mut arrows: Vec<(usize, String, usize)> = graph
        .arrows
        .iter()
        .map(|a| (rank(a.source), format_simple(g, a.conjugator), rank(a.target)))
        .collect();
    arrows.sort();
    let words: Vec<String> = sorted.iter().map(|v| format_element(g, v)).collect();

    let text = if dot {
        let mut s = String::from("digraph scg {\n");
        for (i, w) in words.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for (a, c, b) in &arrows {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{c}\"];\n"));
        }
        s.push('}');
        s
    } else {
        let mut s = format!("vertices ({}):\n", words.len());
        for (i, w) in words.iter().enumerate() {
            s.push_str(&format!("  v{i}: {w}\n"));
        }
        s.push_str(&format!("arrows ({}):", arrows.len()));
        for (a, c, b) in &arrows {
            s.push_str(&format!("\n  v{a} --[{c}]--> v{b}"));
        }
        s
    };
    let mut csv = String::from("source,conjugator,target\n");
    for (a, c, b) in &arrows {
        csv.push_str(&format!("{a},{},{b}\n", csv_field(c)));
    }
    let json = json!({
        "vertices": sorted.iter().map(|v| element_json(g, v)).collect::<Vec<_>>(),
        "arrows": graph.arrows.iter().map(|a| json!({
            "source": rank(a.source),
            "conjugator": g.simple_json(a.conjugator),
            "target": rank(a.target),
        })).collect::<Vec<_>>(),
    });
    Ok(Output { text, json, csv })
}

/// `YES` and a conjugator `c` with `x^c = y`, or `NO`. The conjugator is
/// checked again here before it is printed.
pub fn conj<G: Dialect>(g: &G, w1: &str, w2: &str, budget: &Budget) -> Result<(Output, Outcome), GarsideError> {
    let x = parse_element(g, w1)?;
    let y = parse_element(g, w2)?;
    match solve_csp(g, &x, &y, budget)? {
        Some(w) => {
            let c = w.conjugator;
            if c.inverse(g).multiply(g, &x).multiply(g, &c) != y {
                return Err(GarsideError::WitnessMismatch(format_element(g, &c)));
            }
            let cw = format_element(g, &c);
            Ok((
                Output {
                    text: format!("YES\n{cw}"),
                    csv: format!("conjugate,witness\nyes,{}\n", csv_field(&cw)),
                    json: json!({ "conjugate": true, "witness": element_json(g, &c) }),
                },
                Outcome::Success,
            ))
        }
        None => Ok((
            Output {
                text: "NO".into(),
                csv: "conjugate,witness\nno,\n".into(),
                json: json!({ "conjugate": false }),
            },
            Outcome::NotConjugate,
        )),
    }
}

/// Statistics over the classes with summit infimum `i` and summit canonical
/// length 1. Classes skipped for lack of budget are listed, and make the
/// result incomplete.
pub fn table<G: Dialect>(g: &G, i: i32, budget: &Budget) -> Result<(Output, Outcome), GarsideError> {
    let e = enumerate_length_one_classes(g, i, budget)?;
    let row = ClassStatisticsRow::from_classes(g.label(), g.strands(), i, &e.classes);
    let line = row.csv_line();
    let mut text = format!("{CSV_HEADER}\n{line}");
    for (x, err) in &e.skipped {
        text.push_str(&format!("\nskipped {}: {err}", format_element(g, x)));
    }
    let json = json!({
        "structure": row.structure,
        "n": row.n,
        "i": row.i,
        "classes": row.classes,
        "max_sss": row.max_sss,
        "max_sc": row.max_sc,
        "max_ratio": row.max_ratio,
        "cmean_sss": row.cmean_sss,
        "cmean_sc": row.cmean_sc,
        "cmean_ratio": row.cmean_ratio,
        "emean_sss": row.emean_sss,
        "emean_sc": row.emean_sc,
        "emean_ratio": row.emean_ratio,
        "skipped": e.skipped.iter().map(|(x, _)| element_json(g, x)).collect::<Vec<_>>(),
    });
    let outcome = if e.skipped.is_empty() { Outcome::Success } else { Outcome::Incomplete };
    Ok((Output { text, json, csv: format!("{CSV_HEADER}\n{line}\n") }, outcome))
}

/// Whether `x` is rigid, and the products `𝔓_0(x), …, 𝔓_k(x)` of
/// preferred prefixes along its sliding orbit.
pub fn rigid<G: Dialect>(g: &G, word: &str, k: usize) -> Result<Output, GarsideError> {
    let x = parse_element(g, word)?;
    let r = is_rigid(g, &x);
    let chain: Vec<Element<G::Simple>> = (0..=k).map(|i| prefix_product(g, &x, i)).collect();
    let mut text = format!("rigid: {}", if r { "yes" } else { "no" });
    let mut csv = String::from("i,prefix_product\n");
    for (i, p) in chain.iter().enumerate() {
        let w = format_element(g, p);
        text.push_str(&format!("\nP_{i} = {w}"));
        csv.push_str(&format!("{i},{}\n", csv_field(&w)));
    }
    Ok(Output {
        text,
        csv,
        json: json!({ "rigid": r, "chain": chain.iter().map(|p| element_json(g, p)).collect::<Vec<_>>() }),
    })
}

/// Self-checks on random words drawn from a seeded generator: normal forms
/// survive reparsing, inverses cancel, and sliding never lengthens.
pub fn check<G: Dialect>(g: &G, seed: u64, cases: usize) -> Result<Output, GarsideError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simples = g.simples();
    for case in 0..cases {
        let len = rng.gen_range(0..12);
        let w: Vec<_> = (0..len)
            .map(|_| {
                let s = simples[rng.gen_range(0..simples.len())];
                if rng.gen_bool(0.35) {
                    Letter::Neg(s)
                } else {
                    Letter::Pos(s)
                }
            })
            .collect();
        let x = Element::from_word(g, &w);
        let fail = |what: &str| GarsideError::Invalid(format!("case {case}: {what} fails for {}", format_element(g, &x)));
        if parse_element(g, &format_element(g, &x))? != x {
            return Err(fail("reparsing"));
        }
        if !x.multiply(g, &x.inverse(g)).is_identity() {
            return Err(fail("inverse"));
        }
        let s = cyclic_sliding(g, &x);
        if s.inf() < x.inf() || s.sup() > x.sup() {
            return Err(fail("sliding monotonicity"));
        }
    }
    Ok(Output {
        text: format!("ok: {cases} cases (seed {seed})"),
        csv: format!("seed,cases,failures\n{seed},{cases},0\n"),
        json: json!({ "seed": seed, "cases": cases, "failures": 0 }),
    })
}
