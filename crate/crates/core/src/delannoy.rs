//! Weighted Delannoy paths and their bijection with DIII clans.
//!
//! A path is read as a sequence of stages: step `s` of the first half is
//! paired with step `r+1-s` of the second half, and the stage acts on the
//! current clan of half-size `m_s = n - s + 1 - k_s`, where `k_s` counts the
//! `D` steps before position `s`. `E`/`N` stages consume one symbol from
//! each end; `D` stages consume a whole family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clan::{Clan, DiiiClan, Symbol};
use crate::error::{ClanError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    N,
    E,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledStep {
    pub dir: Dir,
    pub label: usize,
}

impl LabeledStep {
    pub const N: LabeledStep = LabeledStep { dir: Dir::N, label: 1 };
    pub const E: LabeledStep = LabeledStep { dir: Dir::E, label: 1 };

    pub fn d(label: usize) -> LabeledStep {
        LabeledStep { dir: Dir::D, label }
    }
}

impl fmt::Display for LabeledStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dir {
            Dir::N => f.write_str("N"),
            Dir::E => f.write_str("E"),
            Dir::D => write!(f, "D:{}", self.label),
        }
    }
}

impl FromStr for LabeledStep {
    type Err = ClanError;
    fn from_str(tok: &str) -> Result<LabeledStep> {
        match tok {
            "N" => Ok(LabeledStep::N),
            "E" => Ok(LabeledStep::E),
            _ => {
                let label = tok
                    .strip_prefix("D:")
                    .and_then(|l| l.parse::<usize>().ok())
                    .ok_or_else(|| ClanError::Parse(format!("bad step {tok:?}")))?;
                Ok(LabeledStep::d(label))
            }
        }
    }
}

/// A word of labeled steps; `n` is read off the step counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDelannoyPath {
    pub n: usize,
    pub steps: Vec<LabeledStep>,
}

impl WeightedDelannoyPath {
    /// Wraps a word without validating it; `n` is `#E + #D`.
    pub fn new(steps: Vec<LabeledStep>) -> WeightedDelannoyPath {
        let n = steps.iter().filter(|s| s.dir != Dir::N).count();
        WeightedDelannoyPath { n, steps }
    }

    /// Parses `"E D:4 D:3 N"`.
    pub fn parse(text: &str) -> Result<WeightedDelannoyPath> {
        let steps = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<LabeledStep>>>()?;
        Ok(WeightedDelannoyPath::new(steps))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path serializes")
    }
}

impl fmt::Display for WeightedDelannoyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(LabeledStep::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for WeightedDelannoyPath {
    type Err = ClanError;
    fn from_str(s: &str) -> Result<WeightedDelannoyPath> {
        WeightedDelannoyPath::parse(s)
    }
}

fn violation(condition: u8, detail: String) -> ClanError {
    ClanError::InvalidPath { condition, detail }
}

/// Checks the four path conditions in order and reports the first failure.
pub fn validate_path(w: &WeightedDelannoyPath) -> Result<()> {
    let steps = &w.steps;
    let n = w.n;
    let count = |d: Dir| steps.iter().filter(|s| s.dir == d).count();
    let (ns, es, ds) = (count(Dir::N), count(Dir::E), count(Dir::D));
    if steps.is_empty() || es + ds != n || ns + ds != n {
        return Err(violation(1, format!("steps do not end at ({n},{n})")));
    }
    let r = steps.len();
    for s in 0..r {
        let (a, b) = (steps[s].dir, steps[r - 1 - s].dir);
        if (a == Dir::N) != (b == Dir::E) {
            return Err(violation(
                2,
                format!("step {} is {a:?} but step {} is {b:?}", s + 1, r - s),
            ));
        }
    }
    for (s, step) in steps.iter().enumerate() {
        if step.dir != Dir::D && step.label != 1 {
            return Err(violation(3, format!("step {} is {:?} with label {}", s + 1, step.dir, step.label)));
        }
    }
    let half = r / 2;
    let mut k = 0;
    for s in 1..=half {
        let step = steps[s - 1];
        if step.dir == Dir::D {
            let m = n + 1 - s - k;
            let upper = 2 * m - 1;
            if step.label < 2 || step.label > upper {
                return Err(violation(
                    3,
                    format!("step {s} has label {} outside 2..={upper}", step.label),
                ));
            }
            let mirror = steps[r - s].label;
            if mirror != 2 * m + 1 - step.label {
                return Err(violation(
                    3,
                    format!(
                        "step {} has label {mirror}, expected {}",
                        r + 1 - s,
                        2 * m + 1 - step.label
                    ),
                ));
            }
            k += 1;
        }
    }
    if r % 2 == 1 {
        return Err(violation(4, "odd number of steps".into()));
    }
    let (mid_a, mid_b) = (steps[half - 1], steps[half]);
    let ok = (mid_a.dir == Dir::E && mid_b.dir == Dir::N)
        || (mid_a == LabeledStep::d(3) && mid_b == LabeledStep::d(2));
    if !ok {
        return Err(violation(4, format!("middle steps are {mid_a} {mid_b}")));
    }
    Ok(())
}

pub fn is_valid_path(w: &WeightedDelannoyPath) -> bool {
    validate_path(w).is_ok()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sym {
    Plus,
    Minus,
    Id(u32),
}

fn swap_middle(cur: &mut [Sym]) {
    let m = cur.len() / 2;
    if m >= 1 {
        cur.swap(m - 1, m);
    }
}

pub fn clan_to_path(c: &DiiiClan) -> WeightedDelannoyPath {
    let mut cur: Vec<Sym> = c
        .symbols()
        .iter()
        .map(|s| match *s {
            Symbol::Plus => Sym::Plus,
            Symbol::Minus => Sym::Minus,
            Symbol::Pair(l) => Sym::Id(l),
        })
        .collect();
    let mut front = Vec::new();
    let mut back = Vec::new();
    while !cur.is_empty() {
        let len = cur.len();
        let m = len / 2;
        match cur[len - 1] {
            Sym::Minus => {
                front.push(LabeledStep::E);
                back.push(LabeledStep::N);
                cur = cur[1..len - 1].to_vec();
            }
            Sym::Plus => {
                front.push(LabeledStep::N);
                back.push(LabeledStep::E);
                cur = cur[1..len - 1].to_vec();
                swap_middle(&mut cur);
            }
            last @ Sym::Id(_) => {
                let p = cur[..len - 1].iter().position(|&s| s == last).expect("mate present") + 1;
                back.push(LabeledStep::d(p));
                front.push(LabeledStep::d(len + 1 - p));
                let drop = [1, p, len + 1 - p, len];
                cur = cur
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| !drop.contains(&(idx + 1)))
                    .map(|(_, &s)| s)
                    .collect();
                if p > m {
                    swap_middle(&mut cur);
                }
            }
        }
    }
    back.reverse();
    front.extend(back);
    WeightedDelannoyPath::new(front)
}

pub fn path_to_clan(w: &WeightedDelannoyPath) -> Result<DiiiClan> {
    validate_path(w)?;
    let steps = &w.steps;
    let r = steps.len();
    let mut cur: Vec<Sym> = Vec::new();
    let mut next_id = 0u32;
    for s in (1..=r / 2).rev() {
        let (front, back) = (steps[s - 1], steps[r - s]);
        match front.dir {
            Dir::E => {
                cur.insert(0, Sym::Plus);
                cur.push(Sym::Minus);
            }
            Dir::N => {
                swap_middle(&mut cur);
                cur.insert(0, Sym::Minus);
                cur.push(Sym::Plus);
            }
            Dir::D => {
                let len = cur.len() + 4;
                let m = len / 2;
                let p = back.label;
                if p > m {
                    swap_middle(&mut cur);
                }
                let (outer, inner) = (Sym::Id(next_id + 1), Sym::Id(next_id + 2));
                next_id += 2;
                let mut rest = cur.into_iter();
                cur = (1..=len)
                    .map(|pos| {
                        if pos == 1 || pos == len + 1 - p {
                            outer
                        } else if pos == p || pos == len {
                            inner
                        } else {
                            rest.next().expect("enough inner symbols")
                        }
                    })
                    .collect();
            }
        }
    }
    let symbols = cur
        .into_iter()
        .map(|s| match s {
            Sym::Plus => Symbol::Plus,
            Sym::Minus => Symbol::Minus,
            Sym::Id(l) => Symbol::Pair(l),
        })
        .collect();
    let clan = Clan::new(symbols)?;
    DiiiClan::new(clan).map_err(|e| violation(3, format!("decoded clan is not DIII: {e}")))
}

/// Every word whose directions end at `(n,n)` and whose `D` labels lie in
/// `2..=2n`; the raw search space for the validity check.
pub fn candidate_words(n: usize) -> Vec<WeightedDelannoyPath> {
    fn go(n: usize, x: usize, y: usize, word: &mut Vec<LabeledStep>, out: &mut Vec<WeightedDelannoyPath>) {
        if x == n && y == n {
            out.push(WeightedDelannoyPath::new(word.clone()));
            return;
        }
        if x < n {
            word.push(LabeledStep::E);
            go(n, x + 1, y, word, out);
            word.pop();
        }
        if y < n {
            word.push(LabeledStep::N);
            go(n, x, y + 1, word, out);
            word.pop();
        }
        if x < n && y < n {
            for l in 2..=2 * n {
                word.push(LabeledStep::d(l));
                go(n, x + 1, y + 1, word, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_diii;
    use std::collections::BTreeSet;

    fn diii(s: &str) -> DiiiClan {
        DiiiClan::parse(s).unwrap()
    }

    #[test]
    fn figure_example() {
        let w = clan_to_path(&diii("+12213443-"));
        assert_eq!(w.to_string(), "E D:4 D:3 D:2 D:5 N");
        assert_eq!(w.n, 5);
        assert!(is_valid_path(&w));
        assert_eq!(path_to_clan(&w).unwrap().to_string(), "+12213443-");
    }

    #[test]
    fn small_examples() {
        assert_eq!(clan_to_path(&diii("+-")).to_string(), "E N");
        assert_eq!(clan_to_path(&diii("12+-12")).to_string(), "D:5 E N D:2");
        assert_eq!(clan_to_path(&diii("1212")).to_string(), "D:3 D:2");
        let w = WeightedDelannoyPath::parse("E N").unwrap();
        assert_eq!(path_to_clan(&w).unwrap().to_string(), "+-");
    }

    #[test]
    fn conditions_are_reported() {
        let cond = |text: &str| match validate_path(&WeightedDelannoyPath::parse(text).unwrap()) {
            Err(ClanError::InvalidPath { condition, .. }) => condition,
            Ok(()) => 0,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(cond("D:2 D:3"), 4);
        assert_eq!(cond("N E"), 4);
        assert_eq!(cond("E E N N"), 0);
        assert_eq!(cond("N E E N"), 2);
        assert_eq!(cond("E N N"), 1);
        assert_eq!(cond(""), 1);
        assert_eq!(cond("D:4 D:2"), 3);
        assert_eq!(cond("D:3 D:3"), 3);
        assert_eq!(cond("E D:3 D:2 N"), 0);
        // with 2n+1-2(i+2k_i) as the bound step 3 would fail
        assert_eq!(cond("E D:4 D:3 D:2 D:5 N"), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(WeightedDelannoyPath::parse("E X N").is_err());
        assert!(WeightedDelannoyPath::parse("D:x").is_err());
        assert!(WeightedDelannoyPath::parse("D").is_err());
    }

    #[test]
    fn json_shape() {
        let w = WeightedDelannoyPath::parse("E N").unwrap();
        assert_eq!(
            w.to_json(),
            r#"{"n":1,"steps":[{"dir":"E","label":1},{"dir":"N","label":1}]}"#
        );
    }

    #[test]
    fn bijection_on_small_n() {
        for n in 1..=6 {
            let mut words = BTreeSet::new();
            for c in &enumerate_diii(n).unwrap() {
                let w = clan_to_path(c);
                validate_path(&w).unwrap_or_else(|e| panic!("{c} -> {w}: {e}"));
                assert_eq!(&path_to_clan(&w).unwrap(), c);
                let r = w.len();
                let mut k = 0;
                for s in 1..=r / 2 {
                    if w.steps[s - 1].dir == Dir::D {
                        assert_eq!(w.steps[s - 1].label + w.steps[r - s].label, 2 * n + 3 - 2 * (s + k));
                        k += 1;
                    }
                }
                words.insert(w);
            }
            assert_eq!(words.len() as u128, crate::count_formula(n).unwrap());
        }
    }

    #[test]
    fn valid_words_match_clan_count() {
        for n in 1..=4 {
            let valid: Vec<_> = candidate_words(n).into_iter().filter(is_valid_path).collect();
            assert_eq!(valid.len() as u128, crate::count_formula(n).unwrap(), "n={n}");
            for w in valid {
                assert_eq!(clan_to_path(&path_to_clan(&w).unwrap()), w);
            }
        }
    }
}
