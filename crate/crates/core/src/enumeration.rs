//! Exhaustive generation and counting of DIII `(n,n)`-clans.

use rayon::prelude::*;
use serde::Serialize;

use crate::clan::{Clan, DiiiClan, Slot};
use crate::error::{ClanError, Result};

/// Refuse to materialize more clans than this.
pub const MAX_ENUMERATION: u128 = 5_000_000;

/// All DIII clans of one half-length, sorted by spaced text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClanSet {
    pub n: usize,
    pub clans: Vec<DiiiClan>,
}

impl ClanSet {
    pub fn len(&self) -> usize {
        self.clans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clans.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DiiiClan> {
        self.clans.iter()
    }
}

impl<'a> IntoIterator for &'a ClanSet {
    type Item = &'a DiiiClan;
    type IntoIter = std::slice::Iter<'a, DiiiClan>;
    fn into_iter(self) -> Self::IntoIter {
        self.clans.iter()
    }
}

pub(crate) fn checked_mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(ClanError::Overflow(what))
}

pub(crate) fn checked_add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(ClanError::Overflow(what))
}

pub(crate) fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = checked_mul(acc, n - i, "binomial")? / (i + 1);
    }
    Ok(acc)
}

/// `δ_{r,n}`: the number of DIII clans with exactly `2r` mate pairs.
pub fn count_by_pairs(n: usize, r: usize) -> Result<u128> {
    if n == 0 {
        return Err(ClanError::InvalidArgument("n must be at least 1".into()));
    }
    if 2 * r > n {
        return Ok(0);
    }
    let (n, r) = (n as u128, r as u128);
    let positions = binomial(n, 2 * r)?;
    let mut pairings: u128 = 1;
    for k in (r + 1)..=(2 * r) {
        pairings = checked_mul(pairings, k, "count_by_pairs")?;
    }
    let signs = 2u128
        .checked_pow((n - 2 * r) as u32)
        .ok_or(ClanError::Overflow("count_by_pairs"))?;
    // 2^{n-2r-1} may be 1/2 when n = 2r; the product is still even then
    let total = checked_mul(checked_mul(positions, pairings, "count_by_pairs")?, signs, "count_by_pairs")?;
    Ok(total / 2)
}

/// `Δ_n` as the sum of `δ_{r,n}` over `r`.
pub fn count_formula(n: usize) -> Result<u128> {
    (0..=n / 2).try_fold(0u128, |acc, r| checked_add(acc, count_by_pairs(n, r)?, "count_formula"))
}

/// `Δ_n` from `Δ_n = 2Δ_{n-1} + (2n-2)Δ_{n-2}`, seeded with `Δ_0 = Δ_1 = 1`, `Δ_2 = 3`.
pub fn count_recurrence(n: usize) -> Result<u128> {
    let seeds = [1u128, 1, 3];
    if n < 3 {
        return Ok(seeds[n]);
    }
    let (mut prev2, mut prev1) = (seeds[1], seeds[2]);
    for m in 3..=n {
        let next = checked_add(
            checked_mul(2, prev1, "count_recurrence")?,
            checked_mul(2 * m as u128 - 2, prev2, "count_recurrence")?,
            "count_recurrence",
        )?;
        prev2 = prev1;
        prev1 = next;
    }
    Ok(prev1)
}

/// All perfect matchings of `items`, each as a list of `(a, b)` with `a < b`.
fn perfect_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for k in 1..items.len() {
        let rest: Vec<usize> = items[1..]
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx + 1 != k)
            .map(|(_, &v)| v)
            .collect();
        for mut m in perfect_matchings(&rest) {
            m.insert(0, (first, items[k]));
            out.push(m);
        }
    }
    out
}

/// Every DIII clan whose numbers in `c_1..c_n` occupy exactly the positions in `mask`.
fn clans_with_number_positions(n: usize, mask: u32) -> Vec<Clan> {
    let len = 2 * n;
    let anti = |p: usize| len + 1 - p;
    let numbered: Vec<usize> = (1..=n).filter(|p| mask & (1 << (p - 1)) != 0).collect();
    let free: Vec<usize> = (1..=n).filter(|p| mask & (1 << (p - 1)) == 0).collect();
    let mut out = Vec::new();
    for matching in perfect_matchings(&numbered) {
        let r = matching.len();
        for kinds in 0u32..(1 << r) {
            let mut slots = vec![Slot::Plus; len];
            let mut inner = 0;
            for (k, &(a, b)) in matching.iter().enumerate() {
                if kinds & (1 << k) != 0 {
                    // both mates in the first half, mirrored in the second
                    inner += 1;
                    slots[a - 1] = Slot::Mate(b);
                    slots[b - 1] = Slot::Mate(a);
                    slots[anti(b) - 1] = Slot::Mate(anti(a));
                    slots[anti(a) - 1] = Slot::Mate(anti(b));
                } else {
                    // a and b are first mates of two opposing straddling pairs
                    slots[a - 1] = Slot::Mate(anti(b));
                    slots[anti(b) - 1] = Slot::Mate(a);
                    slots[b - 1] = Slot::Mate(anti(a));
                    slots[anti(a) - 1] = Slot::Mate(b);
                }
            }
            for signs in 0u32..(1 << free.len()) {
                if (signs.count_ones() as usize + inner) % 2 == 1 {
                    continue;
                }
                for (k, &p) in free.iter().enumerate() {
                    let minus = signs & (1 << k) != 0;
                    slots[p - 1] = if minus { Slot::Minus } else { Slot::Plus };
                    slots[anti(p) - 1] = if minus { Slot::Plus } else { Slot::Minus };
                }
                out.push(Clan::from_slots(&slots).expect("generated layout is a valid clan"));
            }
        }
    }
    out
}

/// Generates all DIII `(n,n)`-clans.
///
/// Work is split over the choice of number positions in the first half;
/// the merged output is deduplicated and sorted by spaced text.
pub fn enumerate_diii(n: usize) -> Result<ClanSet> {
    if n == 0 {
        return Err(ClanError::InvalidArgument(
            "n must be at least 1 (the n = 0 convention exists only for counting)".into(),
        ));
    }
    let expected = count_formula(n)?;
    if expected > MAX_ENUMERATION {
        return Err(ClanError::InvalidArgument(format!(
            "Δ_{n} = {expected} clans exceeds the enumeration limit {MAX_ENUMERATION}"
        )));
    }
    let masks: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() % 2 == 0).collect();
    let mut keyed: Vec<(String, Clan)> = masks
        .par_iter()
        .flat_map_iter(|&mask| clans_with_number_positions(n, mask))
        .map(|c| (c.to_spaced(), c))
        .collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    let clans = keyed
        .into_iter()
        .map(|(_, c)| DiiiClan::new_unchecked(c))
        .collect();
    Ok(ClanSet { n, clans })
}
