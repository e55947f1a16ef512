//! Sects (clans grouped by base clan), Schubert subsets and the big-sect
//! bijection with partial fixed-point-free involutions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::clan::{Clan, DiiiClan, Slot, Symbol};
use crate::enumeration::{binomial, checked_add, checked_mul, enumerate_diii};
use crate::error::{ClanError, Result};
use crate::weak_order::{length, maximal_clan};

/// An `n`-subset `I ⊂ {1..2n}` indexing a Schubert cell of the orthogonal
/// Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SchubertSubset {
    n: usize,
    elements: Vec<usize>,
}

impl SchubertSubset {
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<SchubertSubset> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        let len = 2 * n;
        if n == 0 || elements.len() != n {
            return Err(ClanError::InvalidSubset(format!("expected {n} distinct elements")));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > len) {
            return Err(ClanError::InvalidSubset(format!("{bad} is outside 1..={len}")));
        }
        if let Some(&i) = elements.iter().find(|&&i| elements.binary_search(&(len + 1 - i)).is_ok()) {
            return Err(ClanError::InvalidSubset(format!(
                "{i} and {} are both present",
                len + 1 - i
            )));
        }
        let missing = (1..=n).filter(|i| elements.binary_search(i).is_err()).count();
        if missing % 2 == 1 {
            return Err(ClanError::InvalidSubset(format!(
                "{missing} of 1..={n} are missing, which is odd"
            )));
        }
        Ok(SchubertSubset { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

/// `c_i = +` for `i ∈ I`, `-` otherwise.
pub fn subset_to_base_clan(subset: &SchubertSubset) -> DiiiClan {
    let slots: Vec<Slot> = (1..=2 * subset.n)
        .map(|i| {
            if subset.elements.binary_search(&i).is_ok() {
                Slot::Plus
            } else {
                Slot::Minus
            }
        })
        .collect();
    DiiiClan::new_unchecked(Clan::from_slots(&slots).expect("subset has n elements"))
}

/// The `+` positions of a matchless clan.
pub fn base_clan_to_subset(base: &DiiiClan) -> Result<SchubertSubset> {
    if !base.is_matchless() {
        return Err(ClanError::InvalidArgument(format!("{base} is not matchless")));
    }
    SchubertSubset::new(
        base.n(),
        (1..=base.len()).filter(|&i| base.symbol(i) == Symbol::Plus),
    )
}

/// All clans sharing one base clan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sect {
    pub base: DiiiClan,
    pub members: Vec<DiiiClan>,
}

impl Sect {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members of maximal length; a single clan in every sect.
    pub fn longest(&self) -> Vec<&DiiiClan> {
        let lengths: Vec<usize> = self.members.iter().map(length).collect();
        let top = lengths.iter().copied().max().unwrap_or(0);
        self.members
            .iter()
            .zip(lengths)
            .filter(|&(_, l)| l == top)
            .map(|(c, _)| c)
            .collect()
    }
}

fn group(clans: Vec<DiiiClan>) -> Vec<Sect> {
    let mut buckets: BTreeMap<String, Sect> = BTreeMap::new();
    for c in clans {
        let base = c.base_clan();
        buckets
            .entry(base.to_spaced())
            .or_insert_with(|| Sect {
                base,
                members: Vec::new(),
            })
            .members
            .push(c);
    }
    buckets.into_values().collect()
}

/// The partition of `Δ(n)` by base clan, ordered by base text.
pub fn sects(n: usize) -> Result<Vec<Sect>> {
    Ok(group(enumerate_diii(n)?.clans))
}

/// Base clan of the dense cell: the base of the maximal clan.
pub fn big_sect_base(n: usize) -> Result<DiiiClan> {
    Ok(maximal_clan(n)?.base_clan())
}

pub fn big_sect(n: usize) -> Result<Sect> {
    let base = big_sect_base(n)?;
    let members = enumerate_diii(n)?
        .clans
        .into_iter()
        .filter(|c| c.base_clan() == base)
        .collect();
    Ok(Sect { base, members })
}

pub fn in_big_sect(c: &DiiiClan) -> bool {
    big_sect_base(c.n()).is_ok_and(|b| c.base_clan() == b)
}

/// `ε_n = Σ_r n! / ((n-2r)! r! 2^r)`, the number of involutions of `{1..n}`.
pub fn epsilon_count(n: usize) -> Result<u128> {
    let mut total = 0u128;
    for r in 0..=n / 2 {
        // n!/((n-2r)! r! 2^r) = C(n, 2r) (2r-1)!!
        let mut double_fact = 1u128;
        for k in (1..2 * r).step_by(2) {
            double_fact = checked_mul(double_fact, k as u128, "epsilon_count")?;
        }
        let term = checked_mul(binomial(n as u128, 2 * r as u128)?, double_fact, "epsilon_count")?;
        total = checked_add(total, term, "epsilon_count")?;
    }
    Ok(total)
}

/// A symmetric partial map `x: {1..n} → {0..n}` with no fixed points,
/// `0` meaning undefined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartialFpfInvolution {
    n: usize,
    x: Vec<usize>,
}

impl PartialFpfInvolution {
    pub fn new(x: Vec<usize>) -> Result<PartialFpfInvolution> {
        let n = x.len();
        for (idx, &v) in x.iter().enumerate() {
            let i = idx + 1;
            if v > n {
                return Err(ClanError::InvalidPartialInvolution(format!("x({i}) = {v} exceeds {n}")));
            }
            if v == i {
                return Err(ClanError::InvalidPartialInvolution(format!("x({i}) = {i} is a fixed point")));
            }
            if v != 0 && x[v - 1] != i {
                return Err(ClanError::InvalidPartialInvolution(format!(
                    "x({i}) = {v} but x({v}) = {}",
                    x[v - 1]
                )));
            }
        }
        Ok(PartialFpfInvolution { n, x })
    }

    /// Builds from `"i:j,k:l"`; an empty string is the empty map.
    pub fn parse(n: usize, text: &str) -> Result<PartialFpfInvolution> {
        let mut x = vec![0usize; n];
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once(':')
                .ok_or_else(|| ClanError::Parse(format!("expected i:j, got {part:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| ClanError::Parse(format!("bad index {s:?}")))
            };
            let (a, b) = (parse(a)?, parse(b)?);
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(ClanError::InvalidPartialInvolution(format!("{v} is outside 1..={n}")));
                }
            }
            for (p, q) in [(a, b), (b, a)] {
                if x[p - 1] != 0 && x[p - 1] != q {
                    return Err(ClanError::InvalidPartialInvolution(format!("{p} is assigned twice")));
                }
                x[p - 1] = q;
            }
        }
        PartialFpfInvolution::new(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x(i)`, `0` when undefined.
    pub fn get(&self, i: usize) -> usize {
        self.x[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.x
    }

    /// Two-cycles `(i, j)` with `i < j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.x
            .iter()
            .enumerate()
            .filter(|&(idx, &v)| v > idx + 1)
            .map(|(idx, &v)| (idx + 1, v))
            .collect()
    }

    /// Every partial fixed-point-free involution of `{1..n}`.
    pub fn all(n: usize) -> Vec<PartialFpfInvolution> {
        fn go(x: &mut Vec<usize>, from: usize, out: &mut Vec<PartialFpfInvolution>) {
            let Some(p) = (from..x.len()).find(|&p| x[p] == 0) else {
                out.push(PartialFpfInvolution { n: x.len(), x: x.clone() });
                return;
            };
            go(x, p + 1, out);
            for q in (p + 1)..x.len() {
                if x[q] == 0 {
                    x[p] = q + 1;
                    x[q] = p + 1;
                    go(x, p + 1, out);
                    x[p] = 0;
                    x[q] = 0;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut vec![0; n], 0, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for PartialFpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(i, j)| format!("{i}:{j}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PartialFpfInvolution {
    type Err = ClanError;
    /// Accepts `"n;i:j,k:l"`.
    fn from_str(s: &str) -> Result<PartialFpfInvolution> {
        let (n, map) = s
            .split_once(';')
            .ok_or_else(|| ClanError::Parse("expected n;i:j,...".into()))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| ClanError::Parse(format!("bad size {n:?}")))?;
        PartialFpfInvolution::parse(n, map)
    }
}

pub fn clan_to_pfpf(c: &DiiiClan) -> Result<PartialFpfInvolution> {
    if !in_big_sect(c) {
        return Err(ClanError::NotInBigSect(c.to_string()));
    }
    let n = c.n();
    let len = 2 * n;
    let mut x = vec![0usize; n];
    for (i, j) in c.pairs() {
        if i > n {
            continue;
        }
        if j > n {
            x[i - 1] = len + 1 - j;
            x[len - j] = i;
        } else {
            x[i - 1] = j;
            x[j - 1] = i;
        }
    }
    PartialFpfInvolution::new(x)
}

pub fn pfpf_to_clan(x: &PartialFpfInvolution) -> Result<DiiiClan> {
    let n = x.n;
    if n == 0 {
        return Err(ClanError::InvalidPartialInvolution("empty domain".into()));
    }
    let len = 2 * n;
    let mut slots = vec![Slot::Plus; len];
    let mut link = |a: usize, b: usize| {
        slots[a - 1] = Slot::Mate(b);
        slots[b - 1] = Slot::Mate(a);
    };
    for i in 1..=n {
        let j = x.get(i);
        if j <= i {
            continue;
        }
        if j == n && n % 2 == 1 {
            link(i, n);
            link(n + 1, len + 1 - i);
        } else {
            link(i, len + 1 - j);
            link(j, len + 1 - i);
        }
    }
    for i in 1..=n {
        if x.get(i) == 0 {
            let plus = i == n && n % 2 == 1;
            slots[i - 1] = if plus { Slot::Plus } else { Slot::Minus };
            slots[len - i] = if plus { Slot::Minus } else { Slot::Plus };
        }
    }
    let clan = DiiiClan::new(Clan::from_slots(&slots)?)?;
    if !in_big_sect(&clan) {
        return Err(ClanError::NotInBigSect(clan.to_string()));
    }
    Ok(clan)
}
