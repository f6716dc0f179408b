//! The braid word grammar, and text and JSON renderings of elements.
//!
//! Tokens are separated by whitespace:
//!
//! * `s<k>`: the Artin generator `σ_k`
//! * `a(<t>,<s>)`: the band generator `a_{t,s}`, for `s < t`
//! * `D`: the Garside element of the structure in use (`Δ` for Artin, `δ`
//!   for BKL)
//! * `[i_1,…,i_n]`: a simple element given by its strand permutation in
//!   one-line notation
//! * `1`: the identity
//! * `.`: ignored; printed between canonical factors
//!
//! Any token but `1` and `.` may carry an integer exponent, as in `s2^-1`,
//! `D^3` or `[2,1,3]^-1`.

use garside::{Artin, Bkl, Element, GarsideError, GarsideStructure, Letter, Ncp, Perm, Result};
use serde_json::{json, Value};

/// Structure-specific parts of parsing and printing.
pub trait Dialect: GarsideStructure {
    /// `artin` or `bkl`.
    fn label(&self) -> &'static str;

    fn strands(&self) -> usize;

    /// A positive word for `σ_k`.
    fn sigma_word(&self, k: usize) -> Result<Vec<Letter<Self::Simple>>>;

    /// A word for `a_{t,s}`.
    fn band_word(&self, t: usize, s: usize) -> Result<Vec<Letter<Self::Simple>>>;

    /// The simple element with the given strand permutation, one-line on
    /// `1..=n`.
    fn simple_from_one_line(&self, one_line: &[usize]) -> Result<Self::Simple>;

    /// Generator tokens spelling a simple element.
    fn simple_tokens(&self, s: Self::Simple) -> Vec<String>;

    fn simple_json(&self, s: Self::Simple) -> Value;
}

impl Dialect for Artin {
    fn label(&self) -> &'static str {
        "artin"
    }

    fn strands(&self) -> usize {
        Artin::strands(self)
    }

    fn sigma_word(&self, k: usize) -> Result<Vec<Letter<Perm>>> {
        Ok(vec![Letter::Pos(self.sigma(k)?)])
    }

    /// `a_{t,s} = (σ_{t-1}⋯σ_{s+1}) σ_s (σ_{s+1}⁻¹⋯σ_{t-1}⁻¹)`.
    fn band_word(&self, t: usize, s: usize) -> Result<Vec<Letter<Perm>>> {
        if !(1 <= s && s < t && t <= self.strands()) {
            return Err(GarsideError::IndexOutOfRange(format!("a({t},{s}) in B_{}", self.strands())));
        }
        let mut w = Vec::new();
        for k in (s + 1..t).rev() {
            w.push(Letter::Pos(self.sigma(k)?));
        }
        w.push(Letter::Pos(self.sigma(s)?));
        for k in s + 1..t {
            w.push(Letter::Neg(self.sigma(k)?));
        }
        Ok(w)
    }

    fn simple_from_one_line(&self, one_line: &[usize]) -> Result<Perm> {
        if one_line.len() != self.strands() {
            return Err(GarsideError::Invalid(format!(
                "permutation has {} entries, expected {}",
                one_line.len(),
                self.strands()
            )));
        }
        Perm::from_one_line(one_line)
    }

    fn simple_tokens(&self, s: Perm) -> Vec<String> {
        self.perm_to_word(s).into_iter().map(|k| format!("s{k}")).collect()
    }

    fn simple_json(&self, s: Perm) -> Value {
        json!(s.one_line())
    }
}

impl Dialect for Bkl {
    fn label(&self) -> &'static str {
        "bkl"
    }

    fn strands(&self) -> usize {
        Bkl::strands(self)
    }

    /// `σ_k = a_{k+1,k}`.
    fn sigma_word(&self, k: usize) -> Result<Vec<Letter<Ncp>>> {
        if k == 0 || k >= self.strands() {
            return Err(GarsideError::IndexOutOfRange(format!("s{k} in B_{}", self.strands())));
        }
        Ok(vec![Letter::Pos(self.band(k + 1, k)?)])
    }

    fn band_word(&self, t: usize, s: usize) -> Result<Vec<Letter<Ncp>>> {
        Ok(vec![Letter::Pos(self.band(t, s)?)])
    }

    fn simple_from_one_line(&self, one_line: &[usize]) -> Result<Ncp> {
        if one_line.len() != self.strands() {
            return Err(GarsideError::Invalid(format!(
                "permutation has {} entries, expected {}",
                one_line.len(),
                self.strands()
            )));
        }
        let p = Perm::from_one_line(one_line)?;
        Ncp::from_perm(&p).ok_or_else(|| GarsideError::Invalid(format!("{p} is not a BKL simple element")))
    }

    fn simple_tokens(&self, s: Ncp) -> Vec<String> {
        self.ncp_to_band_word(s).into_iter().map(|(t, s)| format!("a({t},{s})")).collect()
    }

    fn simple_json(&self, s: Ncp) -> Value {
        json!(s.blocks_one_based())
    }
}

/// Parses a braid word into its normal form.
pub fn parse_element<G: Dialect>(g: &G, text: &str) -> Result<Element<G::Simple>> {
    Ok(Element::from_word(g, &parse_letters(g, text)?))
}

/// Parses a braid word into letters, reporting 1-based character positions
/// on failure.
pub fn parse_letters<G: Dialect>(g: &G, text: &str) -> Result<Vec<Letter<G::Simple>>> {
    let mut out = Vec::new();
    for (pos, token) in tokens(text) {
        let err = |msg: String| GarsideError::Parse { pos, msg };
        let (base, exp) = split_exponent(token).map_err(|m| err(m))?;
        let word: Vec<Letter<G::Simple>> = match base {
            "." => continue,
            "1" if exp.is_none() => continue,
            "D" => vec![Letter::Pos(g.delta())],
            _ if base.starts_with('s') => {
                let k: usize = base[1..].parse().map_err(|_| err(format!("bad generator `{base}`")))?;
                g.sigma_word(k).map_err(|e| err(e.to_string()))?
            }
            _ if base.starts_with("a(") && base.ends_with(')') => {
                let inner = &base[2..base.len() - 1];
                let (t, s) = inner.split_once(',').ok_or_else(|| err(format!("bad band generator `{base}`")))?;
                let parse = |v: &str| v.trim().parse::<usize>().map_err(|_| err(format!("bad band generator `{base}`")));
                g.band_word(parse(t)?, parse(s)?).map_err(|e| err(e.to_string()))?
            }
            _ if base.starts_with('[') && base.ends_with(']') => {
                let inner = &base[1..base.len() - 1];
                let one_line = inner
                    .split(',')
                    .map(|v| v.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(format!("bad permutation `{base}`")))?;
                vec![Letter::Pos(g.simple_from_one_line(&one_line).map_err(|e| err(e.to_string()))?)]
            }
            _ => return Err(err(format!("unknown token `{token}`"))),
        };
        let e = exp.unwrap_or(1);
        let inverse: Vec<_> = word
            .iter()
            .rev()
            .map(|l| match *l {
                Letter::Pos(s) => Letter::Neg(s),
                Letter::Neg(s) => Letter::Pos(s),
            })
            .collect();
        let unit = if e < 0 { &inverse } else { &word };
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(unit);
        }
    }
    Ok(out)
}

/// Whitespace-separated tokens with their 1-based character positions.
/// Spaces inside brackets or parentheses do not split a token.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut depth = 0i32;
    for (ci, (bi, c)) in text.char_indices().enumerate() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth <= 0 {
            if let Some((p, b)) = start.take() {
                out.push((p, &text[b..bi]));
            }
        } else if start.is_none() {
            start = Some((ci + 1, bi));
        }
    }
    if let Some((p, b)) = start {
        out.push((p, &text[b..]));
    }
    out
}

fn split_exponent(token: &str) -> std::result::Result<(&str, Option<i64>), String> {
    match token.rsplit_once('^') {
        None => Ok((token, None)),
        Some((base, e)) => {
            let e: i64 = e.parse().map_err(|_| format!("bad exponent `{e}`"))?;
            if base.is_empty() {
                return Err("exponent without a base".into());
            }
            Ok((base, Some(e)))
        }
    }
}

/// Text form: `D^p` then the canonical factors spelled in generators,
/// separated by ` . `; the identity is `1`. The output parses back to the
/// same element.
pub fn format_element<G: Dialect>(g: &G, x: &Element<G::Simple>) -> String {
    let mut parts = Vec::new();
    match x.inf() {
        0 => {}
        1 => parts.push("D".to_string()),
        p => parts.push(format!("D^{p}")),
    }
    for &s in x.factors() {
        parts.push(g.simple_tokens(s).join(" "));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" . ")
    }
}

pub fn format_simple<G: Dialect>(g: &G, s: G::Simple) -> String {
    if g.is_trivial(s) {
        "1".into()
    } else {
        g.simple_tokens(s).join(" ")
    }
}

/// `{"p": inf, "factors": [...]}`, with permutations in one-line notation
/// for Artin and lists of blocks for BKL.
pub fn element_json<G: Dialect>(g: &G, x: &Element<G::Simple>) -> Value {
    json!({
        "p": x.inf(),
        "factors": x.factors().iter().map(|&s| g.simple_json(s)).collect::<Vec<_>>(),
    })
}
