//! The clan data type, DIII validity, canonical form and elementary transforms.
//!
//! Positions are 1-indexed everywhere in the public API: a clan of half-length
//! `n` has symbols `c_1..c_{2n}`, and `2n+1-i` is the position antipodal to `i`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ClanError, DiiiViolation, Result};

/// One symbol of a clan. Pair labels are canonical (1..k by first occurrence)
/// once the symbol is inside a [`Clan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Plus,
    Minus,
    Pair(u32),
}

impl Symbol {
    pub fn is_sign(self) -> bool {
        !matches!(self, Symbol::Pair(_))
    }
}

/// The signature of a position in the default signed clan: signs keep their
/// own value, first mates get `Minus` and second mates get `Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Position layout used to build clans without going through labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Slot {
    Plus,
    Minus,
    /// 1-indexed position of the mate.
    Mate(usize),
}

/// An `(n,n)`-clan in canonical form.
///
/// Two clans compare equal exactly when their sign positions and mate
/// positions coincide; labels are always renumbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    symbols: Vec<Symbol>,
    // mates[p - 1] is the 1-indexed mate of position p, or 0 for a sign.
    mates: Vec<usize>,
}

impl Clan {
    /// Builds a canonical clan from arbitrary labels.
    pub fn new(symbols: Vec<Symbol>) -> Result<Clan> {
        if symbols.is_empty() {
            return Err(ClanError::Empty);
        }
        if symbols.len() % 2 == 1 {
            return Err(ClanError::OddLength(symbols.len()));
        }
        let mut first_seen: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (idx, s) in symbols.iter().enumerate() {
            if let Symbol::Pair(label) = s {
                first_seen.entry(*label).or_default().push(idx + 1);
            }
        }
        for (label, positions) in &first_seen {
            if positions.len() != 2 {
                return Err(ClanError::LabelCount {
                    label: *label,
                    count: positions.len(),
                });
            }
        }
        let slots: Vec<Slot> = symbols
            .iter()
            .enumerate()
            .map(|(idx, s)| match s {
                Symbol::Plus => Slot::Plus,
                Symbol::Minus => Slot::Minus,
                Symbol::Pair(label) => {
                    let ps = &first_seen[label];
                    Slot::Mate(if ps[0] == idx + 1 { ps[1] } else { ps[0] })
                }
            })
            .collect();
        Clan::from_slots(&slots)
    }

    /// Builds a clan from a position layout, checking mate symmetry and sign
    /// balance, and assigning canonical labels.
    pub(crate) fn from_slots(slots: &[Slot]) -> Result<Clan> {
        let len = slots.len();
        if len == 0 {
            return Err(ClanError::Empty);
        }
        if len % 2 == 1 {
            return Err(ClanError::OddLength(len));
        }
        let (mut plus, mut minus) = (0, 0);
        let mut mates = vec![0usize; len];
        for (idx, slot) in slots.iter().enumerate() {
            match *slot {
                Slot::Plus => plus += 1,
                Slot::Minus => minus += 1,
                Slot::Mate(q) => {
                    let p = idx + 1;
                    if q == 0 || q > len || q == p || slots[q - 1] != Slot::Mate(p) {
                        return Err(ClanError::InvalidArgument(format!(
                            "inconsistent mate layout at position {p}"
                        )));
                    }
                    mates[idx] = q;
                }
            }
        }
        if plus != minus {
            return Err(ClanError::Unbalanced { plus, minus });
        }
        let mut symbols = Vec::with_capacity(len);
        let mut labels = vec![0u32; len];
        let mut next = 0u32;
        for (idx, slot) in slots.iter().enumerate() {
            symbols.push(match *slot {
                Slot::Plus => Symbol::Plus,
                Slot::Minus => Symbol::Minus,
                Slot::Mate(q) => {
                    if q > idx + 1 {
                        next += 1;
                        labels[idx] = next;
                        Symbol::Pair(next)
                    } else {
                        Symbol::Pair(labels[q - 1])
                    }
                }
            });
        }
        Ok(Clan { symbols, mates })
    }

    pub(crate) fn slots(&self) -> Vec<Slot> {
        self.symbols
            .iter()
            .zip(&self.mates)
            .map(|(s, &m)| match s {
                Symbol::Plus => Slot::Plus,
                Symbol::Minus => Slot::Minus,
                Symbol::Pair(_) => Slot::Mate(m),
            })
            .collect()
    }

    /// Half-length `n`.
    pub fn n(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at 1-indexed position `i`.
    pub fn symbol(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// Mate of 1-indexed position `i`, if it holds a number.
    pub fn mate(&self, i: usize) -> Option<usize> {
        match self.mates[i - 1] {
            0 => None,
            q => Some(q),
        }
    }

    pub fn signature(&self, i: usize) -> Sign {
        match self.symbol(i) {
            Symbol::Plus => Sign::Plus,
            Symbol::Minus => Sign::Minus,
            Symbol::Pair(_) => {
                if self.mates[i - 1] > i {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
        }
    }

    /// Mate pairs `(i, j)` with `i < j`, sorted by `i`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mates
            .iter()
            .enumerate()
            .filter(|&(idx, &q)| q > idx + 1)
            .map(|(idx, &q)| (idx + 1, q))
            .collect()
    }

    pub fn num_pairs(&self) -> usize {
        self.mates.iter().filter(|&&q| q != 0).count() / 2
    }

    pub fn is_matchless(&self) -> bool {
        self.mates.iter().all(|&q| q == 0)
    }

    fn max_label(&self) -> u32 {
        self.symbols
            .iter()
            .filter_map(|s| match s {
                Symbol::Pair(l) => Some(*l),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// One character per symbol; `None` when some label exceeds 9.
    pub fn to_compact(&self) -> Option<String> {
        if self.max_label() > 9 {
            return None;
        }
        Some(self.symbols.iter().map(|s| symbol_token(*s)).collect())
    }

    /// Whitespace-separated tokens; always available.
    pub fn to_spaced(&self) -> String {
        let tokens: Vec<String> = self.symbols.iter().map(|s| symbol_token(*s)).collect();
        tokens.join(" ")
    }

    /// `rev(γ)`, canonicalized.
    pub fn reverse(&self) -> Clan {
        let len = self.len();
        let slots: Vec<Slot> = self
            .slots()
            .into_iter()
            .rev()
            .map(|s| match s {
                Slot::Mate(q) => Slot::Mate(len + 1 - q),
                other => other,
            })
            .collect();
        Clan::from_slots(&slots).expect("reversal preserves validity")
    }

    /// `γ̄`: swaps `+` and `-`, numbers unchanged.
    pub fn negative(&self) -> Clan {
        let symbols = self
            .symbols
            .iter()
            .map(|s| match s {
                Symbol::Plus => Symbol::Minus,
                Symbol::Minus => Symbol::Plus,
                other => *other,
            })
            .collect();
        Clan {
            symbols,
            mates: self.mates.clone(),
        }
    }

    /// Swaps positions `n` and `n+1`.
    pub fn flip(&self) -> Clan {
        let n = self.n();
        self.swap_positions(&[(n, n + 1)])
    }

    /// Applies the given position transpositions in order, then canonicalizes.
    pub(crate) fn swap_positions(&self, swaps: &[(usize, usize)]) -> Clan {
        // perm maps old position -> new position
        let len = self.len();
        let mut perm: Vec<usize> = (0..=len).collect();
        for &(a, b) in swaps {
            for p in perm.iter_mut().skip(1) {
                if *p == a {
                    *p = b;
                } else if *p == b {
                    *p = a;
                }
            }
        }
        let mut slots = vec![Slot::Plus; len];
        for (old, slot) in self.slots().into_iter().enumerate() {
            slots[perm[old + 1] - 1] = match slot {
                Slot::Mate(q) => Slot::Mate(perm[q]),
                other => other,
            };
        }
        Clan::from_slots(&slots).expect("position permutation preserves validity")
    }

    /// The first DIII condition this clan fails, if any.
    pub fn diii_violation(&self) -> Option<DiiiViolation> {
        let len = self.len();
        let n = self.n();
        for p in 1..=len {
            let q = len + 1 - p;
            let ok = match (self.symbol(p), self.symbol(q)) {
                (Symbol::Plus, Symbol::Minus) | (Symbol::Minus, Symbol::Plus) => true,
                (Symbol::Pair(_), Symbol::Pair(_)) => {
                    self.mates[q - 1] == len + 1 - self.mates[p - 1]
                }
                _ => false,
            };
            if !ok {
                return Some(DiiiViolation::NotSkewSymmetric);
            }
        }
        if (1..=len).any(|p| self.mates[p - 1] == len + 1 - p) {
            return Some(DiiiViolation::AntipodalMates);
        }
        let minus = (1..=n).filter(|&p| self.symbol(p) == Symbol::Minus).count();
        let inner = (1..=n)
            .filter(|&p| self.mates[p - 1] > p && self.mates[p - 1] <= n)
            .count();
        if (minus + inner) % 2 == 1 {
            return Some(DiiiViolation::OddParity);
        }
        None
    }

    pub fn is_diii(&self) -> bool {
        self.diii_violation().is_none()
    }

    /// `σ_γ`: transposes each mate pair, fixes every sign position.
    pub fn underlying_involution(&self) -> Involution {
        let images = self
            .mates
            .iter()
            .enumerate()
            .map(|(idx, &q)| if q == 0 { idx + 1 } else { q })
            .collect();
        Involution { images }
    }
}

fn symbol_token(s: Symbol) -> String {
    match s {
        Symbol::Plus => "+".to_string(),
        Symbol::Minus => "-".to_string(),
        Symbol::Pair(l) => l.to_string(),
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_compact() {
            Some(s) => f.write_str(&s),
            None => f.write_str(&self.to_spaced()),
        }
    }
}

fn parse_token(tok: &str) -> Result<Symbol> {
    match tok {
        "+" => Ok(Symbol::Plus),
        "-" | "\u{2212}" => Ok(Symbol::Minus),
        _ => tok
            .parse::<u32>()
            .map(Symbol::Pair)
            .map_err(|_| ClanError::UnknownToken(tok.to_string())),
    }
}

/// Parses compact (`+1212-`) or spaced (`+ 1 2 1 2 -`) text into a canonical clan.
pub fn parse_clan(text: &str) -> Result<Clan> {
    let text = text.trim();
    let symbols: Vec<Symbol> = if text.contains(char::is_whitespace) {
        text.split_whitespace()
            .map(|tok| {
                let sym = parse_token(tok)?;
                match sym {
                    Symbol::Pair(0) => Err(ClanError::UnknownToken(tok.to_string())),
                    other => Ok(other),
                }
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|ch| match ch {
                // compact labels are single digits; 0 is just another identifier
                '0'..='9' => Ok(Symbol::Pair(ch as u32 - '0' as u32 + 1)),
                _ => parse_token(ch.encode_utf8(&mut [0; 4])),
            })
            .collect::<Result<_>>()?
    };
    Clan::new(symbols)
}

impl FromStr for Clan {
    type Err = ClanError;
    fn from_str(s: &str) -> Result<Clan> {
        parse_clan(s)
    }
}

impl Serialize for Clan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_spaced())
    }
}

impl<'de> Deserialize<'de> for Clan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Clan, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_clan(&text).map_err(serde::de::Error::custom)
    }
}

/// A clan satisfying the three DIII conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiiiClan(Clan);

impl DiiiClan {
    pub fn new(clan: Clan) -> Result<DiiiClan> {
        match clan.diii_violation() {
            None => Ok(DiiiClan(clan)),
            Some(v) => Err(ClanError::NotDiii(v)),
        }
    }

    pub(crate) fn new_unchecked(clan: Clan) -> DiiiClan {
        debug_assert!(clan.is_diii(), "{clan} is not DIII");
        DiiiClan(clan)
    }

    pub fn parse(text: &str) -> Result<DiiiClan> {
        DiiiClan::new(parse_clan(text)?)
    }

    pub fn as_clan(&self) -> &Clan {
        &self.0
    }

    pub fn into_clan(self) -> Clan {
        self.0
    }

    /// Splits mate pairs into those straddling the midpoint (`Π₀`) and those
    /// inside one half (`Π₁`), and lists the families.
    pub fn classify_pairs(&self) -> PairClassification {
        let n = self.n();
        let len = self.len();
        let mut pi0 = Vec::new();
        let mut pi1 = Vec::new();
        let mut families = Vec::new();
        for (i, j) in self.pairs() {
            if i <= n && j > n {
                pi0.push((i, j));
            } else {
                pi1.push((i, j));
            }
            if i < len + 1 - j {
                families.push([i, j, len + 1 - j, len + 1 - i]);
            }
        }
        PairClassification { pi0, pi1, families }
    }

    /// Replaces every first mate by `-` and every second mate by `+`.
    pub fn base_clan(&self) -> DiiiClan {
        let slots: Vec<Slot> = (1..=self.len())
            .map(|i| match self.signature(i) {
                Sign::Plus => Slot::Plus,
                Sign::Minus => Slot::Minus,
            })
            .collect();
        DiiiClan::new_unchecked(Clan::from_slots(&slots).expect("signatures are balanced"))
    }

    /// The default permutation: for `i ≤ n`, fixes `i` and `2n+1-i` when the
    /// signature of `c_i` is `+`, swaps them when it is `-`.
    pub fn default_permutation(&self) -> Involution {
        let len = self.len();
        let mut images: Vec<usize> = (1..=len).collect();
        for i in 1..=self.n() {
            if self.signature(i) == Sign::Minus {
                images[i - 1] = len + 1 - i;
                images[len - i] = i;
            }
        }
        Involution { images }
    }
}

impl Deref for DiiiClan {
    type Target = Clan;
    fn deref(&self) -> &Clan {
        &self.0
    }
}

impl fmt::Display for DiiiClan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DiiiClan {
    type Err = ClanError;
    fn from_str(s: &str) -> Result<DiiiClan> {
        DiiiClan::parse(s)
    }
}

impl TryFrom<Clan> for DiiiClan {
    type Error = ClanError;
    fn try_from(c: Clan) -> Result<DiiiClan> {
        DiiiClan::new(c)
    }
}

impl Serialize for DiiiClan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DiiiClan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<DiiiClan, D::Error> {
        let clan = Clan::deserialize(deserializer)?;
        DiiiClan::new(clan).map_err(serde::de::Error::custom)
    }
}

/// Mate pairs split by position relative to the midpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    /// Pairs `(i, j)` with `i ≤ n < j`.
    pub pi0: Vec<(usize, usize)>,
    /// Pairs with both positions in the same half.
    pub pi1: Vec<(usize, usize)>,
    /// Quadruples `(i, j, 2n+1-j, 2n+1-i)` with `i < j` and `i < 2n+1-j`.
    pub families: Vec<[usize; 4]>,
}

impl PairClassification {
    /// `|Π₀| / 2`.
    pub fn z(&self) -> usize {
        self.pi0.len() / 2
    }

    /// `|Π₁| / 2`.
    pub fn y(&self) -> usize {
        self.pi1.len() / 2
    }
}

/// A permutation of `{1..m}` that squares to the identity, stored in
/// one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    images: Vec<usize>,
}

impl Involution {
    pub fn new(images: Vec<usize>) -> Result<Involution> {
        let m = images.len();
        for (idx, &v) in images.iter().enumerate() {
            if v == 0 || v > m || images[v - 1] != idx + 1 {
                return Err(ClanError::InvalidArgument(format!(
                    "{images:?} is not an involution"
                )));
            }
        }
        Ok(Involution { images })
    }

    pub fn identity(m: usize) -> Involution {
        Involution {
            images: (1..=m).collect(),
        }
    }

    /// The longest element `w₀: i ↦ m+1-i`.
    pub fn reversal(m: usize) -> Involution {
        Involution {
            images: (1..=m).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    }

    /// Checks `σ∘σ = id`; always true for values built through this type.
    pub fn squares_to_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(idx, &v)| self.images[v - 1] == idx + 1)
    }

    /// Two-cycles `(a, b)` with `a < b`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(idx, &v)| v > idx + 1)
            .map(|(idx, &v)| (idx + 1, v))
            .collect()
    }

    pub fn cycle_notation(&self) -> String {
        let ts = self.transpositions();
        if ts.is_empty() {
            return "()".to_string();
        }
        ts.iter().map(|(a, b)| format!("({a} {b})")).collect()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.images.len() > 9;
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(if wide { " " } else { "" }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Clan {
        parse_clan(s).unwrap()
    }

    fn diii(s: &str) -> DiiiClan {
        DiiiClan::parse(s).unwrap()
    }

    #[test]
    fn parse_compact_and_spaced() {
        let c = clan("+1212-");
        assert_eq!(c.n(), 3);
        assert_eq!(
            c.symbols(),
            &[
                Symbol::Plus,
                Symbol::Pair(1),
                Symbol::Pair(2),
                Symbol::Pair(1),
                Symbol::Pair(2),
                Symbol::Minus
            ]
        );
        assert_eq!(clan("+ 7 12 7 12 -"), c);
        assert_eq!(clan("+1212\u{2212}"), c);
    }

    #[test]
    fn relabels_by_first_occurrence() {
        assert_eq!(clan("2211").to_string(), "1122");
        assert_eq!(clan("2211"), clan("1122"));
        assert_eq!(clan("0990").to_string(), "1221");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_clan("+1+1"),
            Err(ClanError::Unbalanced { plus: 2, minus: 0 })
        );
        assert!(matches!(parse_clan("+-+"), Err(ClanError::OddLength(3))));
        assert!(matches!(
            parse_clan("1112"),
            Err(ClanError::LabelCount { label: 2, count: 3 })
        ));
        assert!(matches!(parse_clan("+x"), Err(ClanError::UnknownToken(_))));
        assert!(matches!(parse_clan("+ 0"), Err(ClanError::UnknownToken(_))));
        assert!(matches!(parse_clan(""), Err(ClanError::Empty)));
    }

    #[test]
    fn unbalanced_three_to_one() {
        // "+1+1" has two plus and no minus; a three-to-one string is also rejected
        assert!(matches!(
            parse_clan("+++-"),
            Err(ClanError::Unbalanced { plus: 3, minus: 1 })
        ));
    }

    #[test]
    fn large_labels_use_spaced_form() {
        let tokens: Vec<String> = (1..=10).chain(1..=10).map(|l| l.to_string()).collect();
        let c = clan(&tokens.join(" "));
        assert_eq!(c.to_compact(), None);
        assert_eq!(c.to_string(), tokens.join(" "));
        assert_eq!(clan(&c.to_spaced()), c);
    }

    #[test]
    fn diii_examples() {
        assert!(clan("+-1122+-").is_diii());
        assert_eq!(clan("1122").diii_violation(), Some(DiiiViolation::OddParity));
        assert_eq!(
            clan("1221").diii_violation(),
            Some(DiiiViolation::AntipodalMates)
        );
        assert_eq!(
            clan("++--").diii_violation(),
            None,
        );
        assert_eq!(
            clan("+-+-").diii_violation(),
            Some(DiiiViolation::OddParity)
        );
        assert_eq!(
            clan("+--+").diii_violation(),
            Some(DiiiViolation::NotSkewSymmetric)
        );
        assert!(clan("12343412").is_diii());
        assert!(clan("+12213443-").is_diii());
    }

    #[test]
    fn reverse_negative_flip() {
        assert_eq!(clan("+1212-").negative().to_string(), "-1212+");
        assert_eq!(clan("1-1-+2+2").flip().to_string(), "1-1+-2+2");
        assert_eq!(clan("+-1122+-").reverse().to_string(), "-+1122-+");
        assert_eq!(clan("+-1122+-").reverse().negative(), clan("+-1122+-"));
        assert_eq!(clan("1+1-").reverse().to_string(), "-1+1");
    }

    #[test]
    fn classify_examples() {
        let pc = diii("++1212--").classify_pairs();
        assert_eq!(pc.pi0, vec![(3, 5), (4, 6)]);
        assert!(pc.pi1.is_empty());
        assert_eq!(pc.z(), 1);
        assert_eq!(pc.families, vec![[3, 5, 4, 6]]);

        let pc = diii("+-1122+-").classify_pairs();
        assert!(pc.pi0.is_empty());
        assert_eq!(pc.pi1, vec![(3, 4), (5, 6)]);

        let pc = diii("++--").classify_pairs();
        assert!(pc.pi0.is_empty() && pc.pi1.is_empty() && pc.families.is_empty());
    }

    #[test]
    fn base_clan_examples() {
        assert_eq!(diii("-12334412+").base_clan().to_string(), "----+-++++");
        assert_eq!(diii("+1212-").base_clan().to_string(), "+--++-");
        assert_eq!(diii("++--").base_clan(), diii("++--"));
    }

    #[test]
    fn default_permutation_examples() {
        assert_eq!(diii("+1212-").default_permutation().one_line(), &[1, 5, 4, 3, 2, 6]);
        assert!(diii("++--").default_permutation().is_identity());
        assert_eq!(diii("--++").default_permutation().one_line(), &[4, 3, 2, 1]);
    }

    #[test]
    fn underlying_involution_examples() {
        assert_eq!(clan("1212").underlying_involution().cycle_notation(), "(1 3)(2 4)");
        assert!(clan("+-").underlying_involution().is_identity());
        assert_eq!(
            clan("12343412").underlying_involution().transpositions(),
            vec![(1, 7), (2, 8), (3, 5), (4, 6)]
        );
    }

    #[test]
    fn involution_rejects_non_involutions() {
        assert!(Involution::new(vec![2, 3, 1]).is_err());
        assert!(Involution::new(vec![2, 1, 3]).is_ok());
    }

    #[test]
    fn serde_uses_spaced_text() {
        let c = diii("+1212-");
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"+ 1 2 1 2 -\"");
        let back: DiiiClan = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<DiiiClan>("\"1 1 2 2\"").is_err());
    }
}
