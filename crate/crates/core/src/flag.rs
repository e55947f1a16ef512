//! Representative flag matrices in `SO(2n)` with exact entries.

use serde::Serialize;

use crate::clan::DiiiClan;
use crate::qsqrt2::{QSqrt2, QSqrt2Json};

/// A square matrix over `ℚ(√2)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMatrix {
    size: usize,
    entries: Vec<Vec<QSqrt2>>,
    clan: Option<DiiiClan>,
}

#[derive(Serialize)]
struct FlagJson {
    clan: Option<String>,
    size: usize,
    entries: Vec<Vec<QSqrt2Json>>,
}

impl FlagMatrix {
    /// Panics unless `entries` is square.
    pub fn from_rows(entries: Vec<Vec<QSqrt2>>) -> FlagMatrix {
        let size = entries.len();
        assert!(entries.iter().all(|r| r.len() == size), "matrix must be square");
        FlagMatrix {
            size,
            entries,
            clan: None,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn clan(&self) -> Option<&DiiiClan> {
        self.clan.as_ref()
    }

    /// Entry at 1-indexed row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> &QSqrt2 {
        &self.entries[r - 1][c - 1]
    }

    pub fn rows(&self) -> &[Vec<QSqrt2>] {
        &self.entries
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for row in &mut self.entries {
            row.swap(a - 1, b - 1);
        }
    }

    pub fn transpose(&self) -> FlagMatrix {
        let m = self.size;
        FlagMatrix::from_rows(
            (0..m)
                .map(|c| (0..m).map(|r| self.entries[r][c].clone()).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &FlagMatrix) -> FlagMatrix {
        let m = self.size;
        let rows = (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| {
                        (0..m).fold(QSqrt2::zero(), |acc, k| {
                            let a = &self.entries[r][k];
                            let b = &other.entries[k][c];
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                &acc + &(a * b)
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        FlagMatrix::from_rows(rows)
    }

    /// Fraction-free elimination with row swaps.
    pub fn determinant(&self) -> QSqrt2 {
        let m = self.size;
        if m == 0 {
            return QSqrt2::one();
        }
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = QSqrt2::one();
        for k in 0..m - 1 {
            if a[k][k].is_zero() {
                match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return QSqrt2::zero(),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub fn to_json(&self) -> String {
        let doc = FlagJson {
            clan: self.clan.as_ref().map(|c| c.to_spaced()),
            size: self.size,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(QSqrt2::to_json_value).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("matrix serializes")
    }

    /// Aligned text grid.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(QSqrt2::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            let padded: Vec<String> = row
                .iter()
                .map(|s| format!("{}{s}", " ".repeat(width - s.chars().count())))
                .collect();
            out.push_str(&padded.join("  "));
            out.push('\n');
        }
        out
    }
}

/// Rank by exact row reduction.
pub fn rank(rows: &[Vec<QSqrt2>]) -> usize {
    let mut a: Vec<Vec<QSqrt2>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_inv = a[r][c].inverse().expect("nonzero pivot");
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &pivot_inv;
            for j in c..cols {
                let t = &factor * &a[r][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// `J₂ₙ`: ones on the antidiagonal.
pub fn antidiagonal(m: usize) -> FlagMatrix {
    FlagMatrix::from_rows(
        (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| if r + c + 1 == m { QSqrt2::one() } else { QSqrt2::zero() })
                    .collect()
            })
            .collect(),
    )
}

/// Columns are `e_{σ(i)}` at signs and `±1/√2` combinations on each family.
pub fn representative_matrix(c: &DiiiClan) -> FlagMatrix {
    let m = c.len();
    let sigma = c.default_permutation();
    let s = |i: usize| sigma.apply(i);
    let mut cols: Vec<Vec<(usize, QSqrt2)>> = vec![Vec::new(); m];
    for i in 1..=m {
        if c.symbol(i).is_sign() {
            cols[i - 1] = vec![(s(i), QSqrt2::one())];
        }
    }
    let h = QSqrt2::inv_sqrt2();
    let mh = -&h;
    for [i, j, jp, ip] in c.classify_pairs().families {
        cols[i - 1] = vec![(s(i), h.clone()), (s(j), h.clone())];
        cols[j - 1] = vec![(s(i), h.clone()), (s(j), mh.clone())];
        cols[ip - 1] = vec![(s(ip), h.clone()), (s(jp), h.clone())];
        cols[jp - 1] = vec![(s(ip), h.clone()), (s(jp), mh.clone())];
    }
    let mut entries = vec![vec![QSqrt2::zero(); m]; m];
    for (col, list) in cols.into_iter().enumerate() {
        for (row, v) in list {
            entries[row - 1][col] = v;
        }
    }
    FlagMatrix {
        size: m,
        entries,
        clan: Some(c.clone()),
    }
}

/// `gᵗ J g = J`.
pub fn preserves_form(g: &FlagMatrix) -> bool {
    let j = antidiagonal(g.size);
    g.transpose().mul(&j).mul(g) == j
}

/// `gᵗ J g = J` and `det g = 1`.
pub fn verify_special_orthogonal(g: &FlagMatrix) -> bool {
    g.size % 2 == 0 && preserves_form(g) && g.determinant() == QSqrt2::one()
}

/// `dim(⟨v_1..v_n⟩ ∩ ⟨e_1..e_n⟩)`.
pub fn intersection_dimension(g: &FlagMatrix) -> usize {
    let m = g.size;
    let n = m / 2;
    // vectors as rows: first n columns of g, then e_1..e_n
    let mut stacked: Vec<Vec<QSqrt2>> = (1..=n)
        .map(|c| (1..=m).map(|r| g.get(r, c).clone()).collect())
        .collect();
    for k in 0..n {
        stacked.push(
            (0..m)
                .map(|r| if r == k { QSqrt2::one() } else { QSqrt2::zero() })
                .collect(),
        );
    }
    2 * n - rank(&stacked)
}

pub fn intersection_parity(g: &FlagMatrix) -> usize {
    intersection_dimension(g) % 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_diii;

    fn diii(s: &str) -> DiiiClan {
        DiiiClan::parse(s).unwrap()
    }

    /// The 6×6 matrix for `+1212-`, typed in entry by entry.
    fn expected() -> FlagMatrix {
        let (o, z, h) = (QSqrt2::one(), QSqrt2::zero(), QSqrt2::inv_sqrt2());
        let m = -&h;
        FlagMatrix::from_rows(vec![
            vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), h.clone(), z.clone(), h.clone(), z.clone()],
            vec![z.clone(), h.clone(), z.clone(), m.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), m.clone(), z.clone(), h.clone(), z.clone()],
            vec![z.clone(), h.clone(), z.clone(), h.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z, o],
        ])
    }

    #[test]
    fn known_matrix_for_n3() {
        let g = representative_matrix(&diii("+1212-"));
        assert_eq!(g.rows(), expected().rows());
        assert!(verify_special_orthogonal(&expected()));
        assert_eq!(intersection_dimension(&g), 1);
    }

    #[test]
    fn matchless_and_trivial() {
        let g = representative_matrix(&diii("+-"));
        assert_eq!(g.rows(), antidiagonal(2).mul(&antidiagonal(2)).rows());
        let g = representative_matrix(&diii("--++"));
        assert_eq!(g.get(4, 1), &QSqrt2::one());
        assert_eq!(g.get(3, 2), &QSqrt2::one());
        assert_eq!(intersection_dimension(&representative_matrix(&diii("+++---"))), 3);
    }

    #[test]
    fn column_swap_flips_determinant() {
        let mut g = expected();
        g.swap_columns(1, 6);
        assert_eq!(g.determinant(), QSqrt2::from_int(-1));
        assert!(!verify_special_orthogonal(&g));
    }

    #[test]
    fn all_small_clans() {
        let allowed = [
            QSqrt2::zero(),
            QSqrt2::one(),
            QSqrt2::from_int(-1),
            QSqrt2::inv_sqrt2(),
            -QSqrt2::inv_sqrt2(),
        ];
        for n in 1..=4 {
            let mut seen = std::collections::BTreeSet::new();
            for c in &enumerate_diii(n).unwrap() {
                let g = representative_matrix(c);
                assert!(verify_special_orthogonal(&g), "{c}");
                assert_eq!(intersection_parity(&g), n % 2, "{c}");
                for col in 1..=g.size() {
                    let norm = (1..=g.size()).fold(QSqrt2::zero(), |acc, r| &acc + &(g.get(r, col) * g.get(r, col)));
                    assert_eq!(norm, QSqrt2::one());
                }
                assert!(g.rows().iter().flatten().all(|e| allowed.contains(e)));
                seen.insert(g.to_json());
            }
            assert_eq!(seen.len() as u128, crate::count_formula(n).unwrap());
        }
    }

    #[test]
    fn rank_examples() {
        let e = |k: usize| -> Vec<QSqrt2> {
            (0..3).map(|i| if i == k { QSqrt2::one() } else { QSqrt2::zero() }).collect()
        };
        assert_eq!(rank(&[e(0), e(1), e(0)]), 2);
        assert_eq!(rank(&[e(0), e(1), e(2)]), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn exports() {
        let g = representative_matrix(&diii("+1212-"));
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["entries"][1][2], serde_json::json!({"a": "0/1", "b": "1/2"}));
        assert_eq!(v["clan"], "+ 1 2 1 2 -");
        assert!(g.to_pretty().contains("-1/√2"));
    }
}
