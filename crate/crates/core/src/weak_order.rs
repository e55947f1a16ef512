//! Length function, the simple-reflection action, the weak-order poset and
//! its rank polynomial.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::clan::{Clan, DiiiClan, Slot};
use crate::enumeration::{checked_add, checked_mul, enumerate_diii};
use crate::error::{ClanError, Result};

/// Per-pair statistics feeding the length formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthStats {
    /// Mate pairs `(i, j)`, `i < j`, in position order.
    pub pairs: Vec<(usize, usize)>,
    /// `j - i` for each pair.
    pub spreads: Vec<usize>,
    /// Pairs `(u, t)` with `u < i < t < j`, for each pair `(i, j)`.
    pub weaves: Vec<usize>,
    /// `|Π₀| / 2`.
    pub z: usize,
    pub length: usize,
}

pub fn clan_length(c: &DiiiClan) -> LengthStats {
    let pairs = c.pairs();
    let spreads: Vec<usize> = pairs.iter().map(|&(i, j)| j - i).collect();
    let weaves: Vec<usize> = pairs
        .iter()
        .map(|&(i, j)| pairs.iter().filter(|&&(u, t)| u < i && i < t && t < j).count())
        .collect();
    let z = c.classify_pairs().z();
    let total: usize = spreads.iter().zip(&weaves).map(|(s, w)| s - w).sum();
    debug_assert!(total >= z && (total - z) % 2 == 0, "odd length numerator for {c}");
    LengthStats {
        pairs,
        spreads,
        weaves,
        z,
        length: (total - z) / 2,
    }
}

/// Shorthand for `clan_length(c).length`.
pub fn length(c: &DiiiClan) -> usize {
    clan_length(c).length
}

fn opposite_signs(a: Slot, b: Slot) -> bool {
    matches!((a, b), (Slot::Plus, Slot::Minus) | (Slot::Minus, Slot::Plus))
}

/// Raw candidates for `s_i · γ`, before the validity and length filter.
fn raw_candidates(i: usize, c: &Clan) -> Vec<Clan> {
    let n = c.n();
    let len = 2 * n;
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let slots = c.slots();
    let at = |p: usize| slots[p - 1];
    if i < n {
        out.push(c.swap_positions(&[(i, i + 1), (len - i, len + 1 - i)]));
        if opposite_signs(at(i), at(i + 1)) {
            let mut s = slots.clone();
            s[i - 1] = Slot::Mate(i + 1);
            s[i] = Slot::Mate(i);
            s[len - i - 1] = Slot::Mate(len + 1 - i);
            s[len - i] = Slot::Mate(len - i);
            if let Ok(cand) = Clan::from_slots(&s) {
                out.push(cand);
            }
        }
    } else {
        out.push(c.swap_positions(&[(n - 1, n + 1), (n, n + 2)]));
        let window = [at(n - 1), at(n), at(n + 1), at(n + 2)];
        let collapsible = matches!(
            window,
            [Slot::Plus, Slot::Plus, Slot::Minus, Slot::Minus]
                | [Slot::Minus, Slot::Minus, Slot::Plus, Slot::Plus]
        );
        if collapsible {
            let mut s = slots.clone();
            s[n - 2] = Slot::Mate(n + 1);
            s[n - 1] = Slot::Mate(n + 2);
            s[n] = Slot::Mate(n - 1);
            s[n + 1] = Slot::Mate(n);
            if let Ok(cand) = Clan::from_slots(&s) {
                out.push(cand);
            }
        }
    }
    out
}

fn check_index(i: usize, c: &DiiiClan) -> Result<()> {
    if i == 0 || i > c.n() {
        return Err(ClanError::ReflectionOutOfRange { index: i, n: c.n() });
    }
    Ok(())
}

/// Every candidate for `s_i · γ` that is DIII and one longer than `γ`.
/// At most one is expected.
pub fn ascent_candidates(i: usize, c: &DiiiClan) -> Result<Vec<DiiiClan>> {
    check_index(i, c)?;
    let target = length(c) + 1;
    let mut found: Vec<DiiiClan> = raw_candidates(i, c)
        .into_iter()
        .filter_map(|cand| DiiiClan::new(cand).ok())
        .filter(|cand| length(cand) == target)
        .collect();
    found.sort();
    found.dedup();
    Ok(found)
}

/// `s_i · γ`; returns `γ` itself when `s_i` is not an ascent.
pub fn apply_reflection(i: usize, c: &DiiiClan) -> Result<DiiiClan> {
    Ok(ascent_candidates(i, c)?
        .into_iter()
        .next()
        .unwrap_or_else(|| c.clone()))
}

/// The unique clan of length `n(n-1)/2`.
pub fn maximal_clan(n: usize) -> Result<DiiiClan> {
    if n == 0 {
        return Err(ClanError::InvalidArgument("n must be at least 1".into()));
    }
    let len = 2 * n;
    let mut slots = vec![Slot::Plus; len];
    let mut j = 0;
    while 2 * j + 2 <= n {
        let (a, b) = (2 * j + 1, len - 2 * j - 1);
        let (c, d) = (2 * j + 2, len - 2 * j);
        slots[a - 1] = Slot::Mate(b);
        slots[b - 1] = Slot::Mate(a);
        slots[c - 1] = Slot::Mate(d);
        slots[d - 1] = Slot::Mate(c);
        j += 1;
    }
    if n % 2 == 1 {
        slots[n - 1] = Slot::Plus;
        slots[n] = Slot::Minus;
    }
    let clan = DiiiClan::new(Clan::from_slots(&slots)?)?;
    debug_assert_eq!(length(&clan), n * (n - 1) / 2);
    Ok(clan)
}

/// Integer polynomial in `t`, `coeffs[k]` being the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankPolynomial {
    pub coeffs: Vec<u128>,
}

impl RankPolynomial {
    pub fn new(mut coeffs: Vec<u128>) -> RankPolynomial {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        RankPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval_at_one(&self) -> u128 {
        self.coeffs.iter().sum()
    }

    fn add(&self, other: &RankPolynomial) -> Result<RankPolynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u128; len];
        for (k, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = other.coeffs.get(k).copied().unwrap_or(0);
            *slot = checked_add(a, b, "rank polynomial")?;
        }
        Ok(RankPolynomial::new(out))
    }

    fn mul(&self, other: &RankPolynomial) -> Result<RankPolynomial> {
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            for (b, &y) in other.coeffs.iter().enumerate() {
                let term = checked_mul(x, y, "rank polynomial")?;
                out[a + b] = checked_add(out[a + b], term, "rank polynomial")?;
            }
        }
        Ok(RankPolynomial::new(out))
    }
}

impl fmt::Display for RankPolynomial {
    /// Highest power first, e.g. `t^3 + 2t^2 + 3t + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{k}"),
            });
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// `A_n(t)` from `A_n = 2A_{n-1} + (t + … + t^{n-2} + 2t^{n-1} + t^n + … + t^{2n-3}) A_{n-2}`.
pub fn rank_poly_recurrence(n: usize) -> Result<RankPolynomial> {
    if n == 0 {
        return Err(ClanError::InvalidArgument("n must be at least 1".into()));
    }
    let mut prev2 = RankPolynomial::new(vec![1]);
    if n == 1 {
        return Ok(prev2);
    }
    let mut prev1 = RankPolynomial::new(vec![2, 1]);
    for m in 3..=n {
        let mut bridge = vec![0u128; 2 * m - 2];
        for (k, b) in bridge.iter_mut().enumerate().skip(1) {
            *b = if k == m - 1 { 2 } else { 1 };
        }
        let next = prev1
            .mul(&RankPolynomial::new(vec![2]))?
            .add(&RankPolynomial::new(bridge).mul(&prev2)?)?;
        prev2 = prev1;
        prev1 = next;
    }
    Ok(prev1)
}

/// A cover `s_i · nodes[from] = nodes[to]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub reflection: usize,
}

/// Weak order on `Δ(n)`, stored as an edge list over the enumeration order.
#[derive(Clone, Debug)]
pub struct WeakOrderPoset {
    pub n: usize,
    pub nodes: Vec<DiiiClan>,
    pub lengths: Vec<usize>,
    pub covers: Vec<Cover>,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    n: usize,
    nodes: Vec<NodeJson>,
    covers: &'a [Cover],
}

#[derive(Serialize)]
struct NodeJson {
    clan: String,
    length: usize,
}

pub fn weak_order_poset(n: usize) -> Result<WeakOrderPoset> {
    let nodes = enumerate_diii(n)?.clans;
    let index: HashMap<&Clan, usize> = nodes.iter().enumerate().map(|(k, c)| (c.as_clan(), k)).collect();
    let lengths: Vec<usize> = nodes.par_iter().map(length).collect();
    let mut covers: Vec<Cover> = nodes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(from, c)| {
            let index = &index;
            (1..=n).filter_map(move |i| {
                let image = apply_reflection(i, c).expect("index in range");
                (image != *c).then(|| Cover {
                    from,
                    to: index[image.as_clan()],
                    reflection: i,
                })
            })
        })
        .collect();
    covers.sort();
    Ok(WeakOrderPoset {
        n,
        nodes,
        lengths,
        covers,
    })
}

impl WeakOrderPoset {
    pub fn rank_polynomial(&self) -> RankPolynomial {
        let top = self.lengths.iter().copied().max().unwrap_or(0);
        let mut coeffs = vec![0u128; top + 1];
        for &l in &self.lengths {
            coeffs[l] += 1;
        }
        RankPolynomial::new(coeffs)
    }

    /// Node counts by length, bottom-up.
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.rank_polynomial().coeffs.iter().map(|&c| c as usize).collect()
    }

    /// Nodes with no outgoing cover.
    pub fn maximal_nodes(&self) -> Vec<&DiiiClan> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.covers {
            has_out[e.from] = true;
        }
        self.nodes.iter().zip(has_out).filter(|(_, o)| !o).map(|(c, _)| c).collect()
    }

    /// Nodes with no incoming cover.
    pub fn minimal_nodes(&self) -> Vec<&DiiiClan> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.covers {
            has_in[e.to] = true;
        }
        self.nodes.iter().zip(has_in).filter(|(_, i)| !i).map(|(c, _)| c).collect()
    }

    /// Graphviz source with one rank per length, drawn bottom-up.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph weak_order_{} {{\n  rankdir=BT;\n  node [shape=plaintext];\n", self.n);
        for (k, c) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  c{k} [label=\"{c}\"];\n"));
        }
        let top = self.lengths.iter().copied().max().unwrap_or(0);
        for l in 0..=top {
            let ids: Vec<String> = (0..self.nodes.len())
                .filter(|&k| self.lengths[k] == l)
                .map(|k| format!("c{k}"))
                .collect();
            out.push_str(&format!("  {{ rank=same; {} }}\n", ids.join("; ")));
        }
        for e in &self.covers {
            out.push_str(&format!("  c{} -> c{} [label=\"{}\"];\n", e.from, e.to, e.reflection));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = PosetJson {
            n: self.n,
            nodes: self
                .nodes
                .iter()
                .zip(&self.lengths)
                .map(|(c, &length)| NodeJson {
                    clan: c.to_spaced(),
                    length,
                })
                .collect(),
            covers: &self.covers,
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }
}
