//! Pyramids, doubly symmetric rook placements and minimally intersecting
//! partition pairs, with their bijections to DIII clans.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, DiiiClan, Involution, Slot, Symbol};
use crate::error::{ClanError, Result};

/// Which half of the pyramid a cell lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `Left(i, j)` or `Right(i, j)` with `1 ≤ i ≤ j ≤ n`; `i` is the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub side: Side,
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn left(i: usize, j: usize) -> Cell {
        Cell { side: Side::Left, i, j }
    }

    pub fn right(i: usize, j: usize) -> Cell {
        Cell { side: Side::Right, i, j }
    }

    fn mirrored(self) -> Cell {
        Cell {
            side: self.side.other(),
            ..self
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Left => 'L',
            Side::Right => 'R',
        };
        write!(f, "{s}({},{})", self.i, self.j)
    }
}

/// A triangular board with one rook covering each `k` in `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pyramid {
    n: usize,
    rooks: Vec<Cell>,
}

#[derive(Deserialize)]
struct PyramidJson {
    n: usize,
    rooks: Vec<Cell>,
}

impl<'de> Deserialize<'de> for Pyramid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Pyramid, D::Error> {
        let raw = PyramidJson::deserialize(d)?;
        Pyramid::new(raw.n, raw.rooks).map_err(serde::de::Error::custom)
    }
}

impl Pyramid {
    /// Checks coordinates and that every `k` lies in exactly one rook's `{i, j}`.
    pub fn new(n: usize, rooks: impl IntoIterator<Item = Cell>) -> Result<Pyramid> {
        let mut rooks: Vec<Cell> = rooks.into_iter().collect();
        if n == 0 {
            return Err(ClanError::InvalidPyramid("n must be at least 1".into()));
        }
        let mut cover = vec![0usize; n];
        for r in &rooks {
            if r.i == 0 || r.i > r.j || r.j > n {
                return Err(ClanError::InvalidPyramid(format!("{r} is off the board")));
            }
            cover[r.i - 1] += 1;
            if r.j != r.i {
                cover[r.j - 1] += 1;
            }
        }
        if let Some(k) = cover.iter().position(|&c| c != 1) {
            return Err(ClanError::InvalidPyramid(format!(
                "{} is covered by {} rooks",
                k + 1,
                cover[k]
            )));
        }
        rooks.sort_by_key(|r| (std::cmp::Reverse(r.i), r.j, r.side));
        Ok(Pyramid { n, rooks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rooks ordered by decreasing row.
    pub fn rooks(&self) -> &[Cell] {
        &self.rooks
    }

    /// Swaps left and right halves.
    pub fn mirror(&self) -> Pyramid {
        Pyramid::new(self.n, self.rooks.iter().map(|r| r.mirrored())).expect("mirror keeps coverage")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pyramid serializes")
    }

    pub fn from_json(text: &str) -> Result<Pyramid> {
        serde_json::from_str(text).map_err(|e| ClanError::Parse(e.to_string()))
    }
}

impl fmt::Display for Pyramid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.rooks.iter().map(Cell::to_string).collect();
        write!(f, "{{{}}}", cells.join(", "))
    }
}

pub fn clan_to_pyramid(c: &DiiiClan) -> Pyramid {
    let n = c.n();
    let len = 2 * n;
    let mut x = Side::Left;
    let mut rooks = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        match c.symbol(i) {
            Symbol::Plus => rooks.push(Cell { side: x, i, j: i }),
            Symbol::Minus => {
                x = x.other();
                rooks.push(Cell { side: x, i, j: i });
            }
            Symbol::Pair(_) => {
                let j = c.mate(i).expect("pair has a mate");
                if j > n && len + 1 - j > i {
                    rooks.push(Cell { side: x, i, j: len + 1 - j });
                } else if i < j && j <= n {
                    x = x.other();
                    rooks.push(Cell { side: x, i, j });
                }
            }
        }
    }
    Pyramid::new(n, rooks).expect("DIII clans give valid pyramids")
}

/// Replays the scan on a pyramid. The result may fail the DIII parity
/// condition, in which case the mirror pyramid is the right one.
pub fn decode_pyramid(p: &Pyramid) -> Result<Clan> {
    let n = p.n;
    let len = 2 * n;
    let mut slots = vec![Slot::Plus; len];
    let mut x = Side::Left;
    let mut link = |a: usize, b: usize| {
        slots[a - 1] = Slot::Mate(b);
        slots[b - 1] = Slot::Mate(a);
    };
    let mut signs: Vec<(usize, bool)> = Vec::new();
    for r in &p.rooks {
        let (i, j) = (r.i, r.j);
        let same = r.side == x;
        if !same {
            x = x.other();
        }
        if i == j {
            signs.push((i, same));
        } else if same {
            link(i, len + 1 - j);
            link(j, len + 1 - i);
        } else {
            link(i, j);
            link(len + 1 - j, len + 1 - i);
        }
    }
    for (i, plus) in signs {
        slots[i - 1] = if plus { Slot::Plus } else { Slot::Minus };
        slots[len - i] = if plus { Slot::Minus } else { Slot::Plus };
    }
    Clan::from_slots(&slots)
}

pub fn pyramid_to_clan(p: &Pyramid) -> Result<DiiiClan> {
    let clan = decode_pyramid(p)?;
    if clan.is_diii() {
        Ok(DiiiClan::new_unchecked(clan))
    } else {
        Err(ClanError::ReflectPyramid(clan.to_string()))
    }
}

/// A permutation matrix on an `m × m` board, `perm[c-1]` being the row of the
/// rook in column `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RookPlacement {
    size: usize,
    perm: Vec<usize>,
}

#[derive(Deserialize)]
struct PlacementJson {
    size: usize,
    perm: Vec<usize>,
}

impl<'de> Deserialize<'de> for RookPlacement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<RookPlacement, D::Error> {
        let raw = PlacementJson::deserialize(d)?;
        if raw.size != raw.perm.len() {
            return Err(serde::de::Error::custom("size does not match perm length"));
        }
        RookPlacement::new(raw.perm).map_err(serde::de::Error::custom)
    }
}

impl RookPlacement {
    /// Any non-attacking placement, i.e. a permutation.
    pub fn new(perm: Vec<usize>) -> Result<RookPlacement> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &v in &perm {
            if v == 0 || v > m || std::mem::replace(&mut seen[v - 1], true) {
                return Err(ClanError::InvalidPlacement(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(RookPlacement { size: m, perm })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Row of the rook in column `c`.
    pub fn row(&self, c: usize) -> usize {
        self.perm[c - 1]
    }

    pub fn is_diagonally_symmetric(&self) -> bool {
        (1..=self.size).all(|c| self.row(self.row(c)) == c)
    }

    pub fn is_antidiagonally_symmetric(&self) -> bool {
        let m = self.size;
        (1..=m).all(|c| self.row(m + 1 - self.row(c)) == m + 1 - c)
    }

    pub fn is_doubly_symmetric(&self) -> bool {
        self.is_diagonally_symmetric() && self.is_antidiagonally_symmetric()
    }

    /// Invariant under the quarter turn `(c, r) ↦ (r, m+1-c)`.
    pub fn is_quarter_turn_symmetric(&self) -> bool {
        let m = self.size;
        (1..=m).all(|c| self.row(self.row(c)) == m + 1 - c)
    }

    fn require_doubly_symmetric(&self) -> Result<()> {
        if self.is_doubly_symmetric() {
            Ok(())
        } else {
            Err(ClanError::InvalidPlacement(format!(
                "{:?} is not symmetric across both diagonals",
                self.perm
            )))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("placement serializes")
    }

    pub fn from_json(text: &str) -> Result<RookPlacement> {
        serde_json::from_str(text).map_err(|e| ClanError::Parse(e.to_string()))
    }
}

/// Every placement on an `m × m` board symmetric across both diagonals.
pub fn doubly_symmetric_placements(m: usize) -> Vec<RookPlacement> {
    fn go(perm: &mut Vec<usize>, out: &mut Vec<RookPlacement>) {
        let m = perm.len();
        let Some(p) = perm.iter().position(|&v| v == 0) else {
            let r = RookPlacement { size: m, perm: perm.clone() };
            if r.is_antidiagonally_symmetric() {
                out.push(r);
            }
            return;
        };
        perm[p] = p + 1;
        go(perm, out);
        for q in (p + 1)..m {
            if perm[q] == 0 {
                perm[p] = q + 1;
                perm[q] = p + 1;
                go(perm, out);
                perm[q] = 0;
            }
        }
        perm[p] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; m], &mut out);
    out
}

/// Unfolds the pyramid by both diagonal reflections.
pub fn pyramid_to_placement(p: &Pyramid) -> RookPlacement {
    let m = 2 * p.n;
    let mut perm = vec![0usize; m];
    for rook in &p.rooks {
        let c = match rook.side {
            Side::Left => rook.j,
            Side::Right => m + 1 - rook.j,
        };
        let r = rook.i;
        perm[c - 1] = r;
        perm[r - 1] = c;
        perm[m - r] = m + 1 - c;
        perm[m - c] = m + 1 - r;
    }
    RookPlacement::new(perm).expect("unfolded pyramid is a permutation")
}

/// Reads off the bottom triangle of a doubly symmetric placement.
pub fn placement_to_pyramid(r: &RookPlacement) -> Result<Pyramid> {
    r.require_doubly_symmetric()?;
    if r.size % 2 == 1 {
        return Err(ClanError::InvalidPlacement("board size must be even".into()));
    }
    let m = r.size;
    let n = m / 2;
    let rooks = (1..=m).filter_map(|c| {
        let row = r.row(c);
        if row <= c && c <= m + 1 - row {
            Some(if c <= n {
                Cell::left(row, c)
            } else {
                Cell::right(row, m + 1 - c)
            })
        } else {
            None
        }
    });
    Pyramid::new(n, rooks).map_err(|e| ClanError::InvalidPlacement(e.to_string()))
}

/// Decodes whichever of the two pyramids of `r` gives a DIII clan.
pub fn placement_to_clan(r: &RookPlacement) -> Result<DiiiClan> {
    let p = placement_to_pyramid(r)?;
    let a = pyramid_to_clan(&p);
    let b = pyramid_to_clan(&p.mirror());
    match (a, b) {
        (Ok(c), Err(_)) | (Err(_), Ok(c)) => Ok(c),
        (Ok(x), Ok(y)) => Err(ClanError::InvalidPlacement(format!(
            "both pyramids decode to DIII clans ({x}, {y})"
        ))),
        (Err(e), Err(_)) => Err(e),
    }
}

pub fn clan_to_placement(c: &DiiiClan) -> RookPlacement {
    pyramid_to_placement(&clan_to_pyramid(c))
}

/// `w₀ · v`: `c ↦ m+1-v(c)`.
pub fn rotate_placement(r: &RookPlacement) -> RookPlacement {
    let m = r.size;
    RookPlacement {
        size: m,
        perm: r.perm.iter().map(|&v| m + 1 - v).collect(),
    }
}

/// Inserts a central row and column holding one rook.
pub fn extend_odd(r: &RookPlacement) -> Result<RookPlacement> {
    if r.size % 2 == 1 {
        return Err(ClanError::InvalidPlacement("board size must be even".into()));
    }
    let n = r.size / 2;
    let shift = |v: usize| if v > n { v + 1 } else { v };
    let mut perm: Vec<usize> = r.perm.iter().map(|&v| shift(v)).collect();
    perm.insert(n, n + 1);
    RookPlacement::new(perm)
}

/// `{v, w₀v}` as a sorted pair of involutions.
pub fn signed_involution_pair(r: &RookPlacement) -> Result<(Involution, Involution)> {
    r.require_doubly_symmetric()?;
    let v = Involution::new(r.perm.clone())?;
    let w = Involution::new(rotate_placement(r).perm)?;
    Ok(if v <= w { (v, w) } else { (w, v) })
}

/// `p = {L, R}` and `p'`, a partition of `{1..n}` into blocks of size at
/// most two, each meeting both blocks of `p` at most once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionPair {
    n: usize,
    p: [Vec<usize>; 2],
    pprime: Vec<Vec<usize>>,
}

fn normalize_blocks(blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = blocks
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort();
    blocks
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

impl PartitionPair {
    pub fn new(n: usize, p: [Vec<usize>; 2], pprime: Vec<Vec<usize>>) -> Result<PartitionPair> {
        let bad = |msg: String| Err(ClanError::InvalidPartitionPair(msg));
        let covers = |blocks: &[Vec<usize>]| {
            let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
            all.sort_unstable();
            all == (1..=n).collect::<Vec<_>>()
        };
        if p.iter().any(Vec::is_empty) {
            return bad("p needs two nonempty blocks".into());
        }
        if !covers(&p) {
            return bad("p is not a partition of 1..n".into());
        }
        if !covers(&pprime) {
            return bad("p' is not a partition of 1..n".into());
        }
        if let Some(b) = pprime.iter().find(|b| b.is_empty() || b.len() > 2) {
            return bad(format!("p' block {b:?} has size other than 1 or 2"));
        }
        for b in &pprime {
            for side in &p {
                if b.iter().filter(|k| side.contains(k)).count() > 1 {
                    return bad(format!("p' block {b:?} meets a block of p twice"));
                }
            }
        }
        let [a, b] = p;
        let mut p = normalize_blocks(vec![a, b]);
        let second = p.pop().expect("two blocks");
        let first = p.pop().expect("two blocks");
        Ok(PartitionPair {
            n,
            p: [first, second],
            pprime: normalize_blocks(pprime),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The two blocks of `p`, the one containing the smaller minimum first.
    pub fn p(&self) -> &[Vec<usize>; 2] {
        &self.p
    }

    pub fn pprime(&self) -> &[Vec<usize>] {
        &self.pprime
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p = {}, p' = {}", fmt_blocks(&self.p), fmt_blocks(&self.pprime))
    }
}

pub fn pyramid_to_partition_pair(py: &Pyramid) -> Result<PartitionPair> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut pprime = Vec::new();
    for r in &py.rooks {
        if r.i == r.j {
            match r.side {
                Side::Left => left.push(r.i),
                Side::Right => right.push(r.i),
            }
            pprime.push(vec![r.i]);
        } else {
            match r.side {
                Side::Left => {
                    left.push(r.j);
                    right.push(r.i);
                }
                Side::Right => {
                    right.push(r.j);
                    left.push(r.i);
                }
            }
            pprime.push(vec![r.i, r.j]);
        }
    }
    PartitionPair::new(py.n, [left, right], pprime)
}

pub fn partition_pair_to_pyramid(pp: &PartitionPair) -> Result<Pyramid> {
    let left: BTreeSet<usize> = pp.p[0].iter().copied().collect();
    let side = |k: usize| if left.contains(&k) { Side::Left } else { Side::Right };
    let rooks = pp.pprime.iter().map(|b| match b.as_slice() {
        [k] => Cell { side: side(*k), i: *k, j: *k },
        [i, j] => Cell { side: side(*j), i: *i, j: *j },
        _ => unreachable!("blocks have size 1 or 2"),
    });
    let py = Pyramid::new(pp.n, rooks)?;
    if decode_pyramid(&py)?.is_diii() {
        Ok(py)
    } else {
        Ok(py.mirror())
    }
}

pub fn clan_to_partition_pair(c: &DiiiClan) -> Result<PartitionPair> {
    pyramid_to_partition_pair(&clan_to_pyramid(c))
}

pub fn partition_pair_to_clan(pp: &PartitionPair) -> Result<DiiiClan> {
    pyramid_to_clan(&partition_pair_to_pyramid(pp)?)
}
