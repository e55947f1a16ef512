//! The invariant suite behind `diii verify <n>`.

use rayon::prelude::*;
use serde::Serialize;

use crate::clan::DiiiClan;
use crate::delannoy::{candidate_words, clan_to_path, is_valid_path, path_to_clan};
use crate::enumeration::{count_by_pairs, count_formula, count_recurrence, enumerate_diii};
use crate::flag::{intersection_parity, representative_matrix, verify_special_orthogonal};
use crate::rook::{
    clan_to_partition_pair, clan_to_pyramid, doubly_symmetric_placements, partition_pair_to_clan,
    placement_to_clan, pyramid_to_clan, pyramid_to_placement, rotate_placement,
};
use crate::sect::{big_sect, clan_to_pfpf, epsilon_count, pfpf_to_clan, sects, PartialFpfInvolution};
use crate::weak_order::{apply_reflection, length, maximal_clan, rank_poly_recurrence, weak_order_poset};

/// Largest board for the brute-force placement count.
const MAX_PLACEMENT_BOARD: usize = 12;
/// Largest `n` for scanning every candidate Delannoy word.
const MAX_WORD_SCAN: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clans(n: usize) -> std::result::Result<Vec<DiiiClan>, String> {
    enumerate_diii(n).map(|s| s.clans).map_err(|e| e.to_string())
}

fn check_counts(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let listed = clans(n)?.len() as u128;
        let formula = count_formula(n).map_err(|e| e.to_string())?;
        let rec = count_recurrence(n).map_err(|e| e.to_string())?;
        let by_pairs: u128 = (0..=n / 2).map(|r| count_by_pairs(n, r).unwrap_or(0)).sum();
        ensure(listed == formula && formula == rec && rec == by_pairs, || {
            format!("n={n}: enumerated {listed}, formula {formula}, recurrence {rec}, by pairs {by_pairs}")
        })?;
    }
    Ok(format!("Δ_{max_n} = {}", count_formula(max_n).unwrap_or(0)))
}

fn check_clan_identities(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        clans(n)?.par_iter().try_for_each(|c| {
            ensure(&c.negative().reverse() == c.as_clan(), || format!("{c} is not skew-symmetric"))?;
            ensure(!c.flip().is_diii(), || format!("flip of {c} is DIII"))?;
            let b = c.base_clan();
            ensure(b.is_matchless() && b.base_clan() == b, || format!("base clan of {c}"))?;
            ensure(
                c.default_permutation().squares_to_identity() && c.underlying_involution().squares_to_identity(),
                || format!("involutions of {c}"),
            )?;
            let pc = c.classify_pairs();
            ensure(
                pc.pi0.len() % 2 == 0 && pc.pi1.len() % 2 == 0 && pc.pi0.len() + pc.pi1.len() == c.num_pairs(),
                || format!("pair classes of {c}"),
            )?;
            let again: DiiiClan = c.to_spaced().parse().map_err(|e| format!("{e}"))?;
            ensure(&again == c, || format!("spaced round trip of {c}"))
        })?;
    }
    Ok("skew-symmetry, flip, base clan, involutions, pair classes".into())
}

fn check_rank_polynomials(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let poset = weak_order_poset(n).map_err(|e| e.to_string())?;
        let rec = rank_poly_recurrence(n).map_err(|e| e.to_string())?;
        ensure(poset.rank_polynomial() == rec, || {
            format!("n={n}: poset {} vs recurrence {rec}", poset.rank_polynomial())
        })?;
    }
    Ok(format!(
        "A_{max_n}(t) = {}",
        rank_poly_recurrence(max_n).map(|p| p.to_string()).unwrap_or_default()
    ))
}

/// Type-D Coxeter matrix entry `m(i, j)` for `i ≠ j`.
pub fn coxeter_m(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = (i.min(j), i.max(j));
    let linked = if b == n { n >= 3 && a == n - 2 } else { b == a + 1 && b < n };
    if linked {
        3
    } else {
        2
    }
}

fn check_weak_order(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let poset = weak_order_poset(n).map_err(|e| e.to_string())?;
        poset.nodes.par_iter().try_for_each(|c| {
            let act = |i: usize, g: &DiiiClan| apply_reflection(i, g).expect("index in range");
            for i in 1..=n {
                let once = act(i, c);
                ensure(act(i, &once) == once, || format!("s{i} not idempotent on {c}"))?;
                for j in (i + 1)..=n {
                    let (lhs, rhs) = if coxeter_m(n, i, j) == 3 {
                        (act(i, &act(j, &act(i, c))), act(j, &act(i, &act(j, c))))
                    } else {
                        (act(i, &act(j, c)), act(j, &act(i, c)))
                    };
                    ensure(lhs == rhs, || format!("braid relation for s{i}, s{j} fails on {c}"))?;
                }
            }
            Ok::<(), String>(())
        })?;
        for e in &poset.covers {
            ensure(poset.lengths[e.to] == poset.lengths[e.from] + 1, || {
                format!("cover {} -> {} is not graded", poset.nodes[e.from], poset.nodes[e.to])
            })?;
        }
        let top = poset.maximal_nodes();
        let expected = maximal_clan(n).map_err(|e| e.to_string())?;
        ensure(top.len() == 1 && *top[0] == expected, || format!("n={n}: maximal nodes {top:?}"))?;
        ensure(length(&expected) == n * (n - 1) / 2, || format!("n={n}: length of {expected}"))?;
        let bottom = poset.minimal_nodes();
        ensure(
            bottom.len() == 1 << (n - 1) && bottom.iter().all(|c| c.is_matchless()),
            || format!("n={n}: {} minimal nodes", bottom.len()),
        )?;
    }
    Ok("idempotence, braid relations, grading, extremal nodes".into())
}

fn check_sects(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let all = sects(n).map_err(|e| e.to_string())?;
        ensure(all.len() == 1 << (n - 1), || format!("n={n}: {} sects", all.len()))?;
        let total: usize = all.iter().map(|s| s.len()).sum();
        ensure(total as u128 == count_formula(n).unwrap_or(0), || format!("n={n}: sect sizes sum to {total}"))?;
        for s in &all {
            ensure(s.longest().len() == 1, || format!("sect of {} has several longest clans", s.base))?;
        }
        let big = big_sect(n).map_err(|e| e.to_string())?;
        ensure(big.len() as u128 == epsilon_count(n).unwrap_or(0), || {
            format!("n={n}: big sect has {} clans", big.len())
        })?;
        for c in &big.members {
            let x = clan_to_pfpf(c).map_err(|e| e.to_string())?;
            ensure(pfpf_to_clan(&x).ok().as_ref() == Some(c), || format!("pfpf round trip of {c}"))?;
        }
        for x in PartialFpfInvolution::all(n) {
            let c = pfpf_to_clan(&x).map_err(|e| e.to_string())?;
            ensure(clan_to_pfpf(&c).ok().as_ref() == Some(&x), || format!("pfpf round trip of {x}"))?;
        }
    }
    Ok("sect counts, unique longest clans, big sect, pfpf round trips".into())
}

fn check_rooks(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        clans(n)?.par_iter().try_for_each(|c| {
            let py = clan_to_pyramid(c);
            ensure(pyramid_to_clan(&py).ok().as_ref() == Some(c), || format!("pyramid round trip of {c}"))?;
            ensure(pyramid_to_clan(&py.mirror()).is_err(), || format!("both pyramids of {c} decode"))?;
            let r = pyramid_to_placement(&py);
            ensure(r.is_doubly_symmetric(), || format!("placement of {c}"))?;
            ensure(placement_to_clan(&r).ok().as_ref() == Some(c), || format!("placement round trip of {c}"))?;
            ensure(
                placement_to_clan(&rotate_placement(&r)).ok().as_ref() == Some(c),
                || format!("rotated placement of {c}"),
            )
        })?;
        let delta = count_formula(n).unwrap_or(0);
        for m in [2 * n, 2 * n + 1] {
            if m <= MAX_PLACEMENT_BOARD {
                let found = doubly_symmetric_placements(m).len() as u128;
                ensure(found == 2 * delta, || format!("{found} placements on a {m}-board"))?;
            }
        }
    }
    Ok("pyramid and placement round trips, placement counts".into())
}

fn check_partitions(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let mut seen = std::collections::BTreeSet::new();
        for c in clans(n)? {
            if let Ok(pp) = clan_to_partition_pair(&c) {
                ensure(partition_pair_to_clan(&pp).ok().as_ref() == Some(&c), || format!("partition round trip of {c}"))?;
                seen.insert(pp);
            }
        }
        let delta = count_formula(n).unwrap_or(0);
        ensure(seen.len() as u128 + 1 == delta, || format!("n={n}: {} partition pairs", seen.len()))?;
    }
    Ok("partition pair round trips and counts".into())
}

fn check_delannoy(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        clans(n)?.par_iter().try_for_each(|c| {
            let w = clan_to_path(c);
            ensure(is_valid_path(&w), || format!("path {w} of {c} is invalid"))?;
            ensure(path_to_clan(&w).ok().as_ref() == Some(c), || format!("path round trip of {c}"))
        })?;
        if n <= MAX_WORD_SCAN {
            let valid = candidate_words(n).into_iter().filter(is_valid_path).count() as u128;
            ensure(valid == count_formula(n).unwrap_or(0), || format!("n={n}: {valid} valid words"))?;
        }
    }
    Ok("path round trips, valid word counts".into())
}

fn check_flags(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        clans(n)?.par_iter().try_for_each(|c| {
            let g = representative_matrix(c);
            ensure(verify_special_orthogonal(&g), || format!("g for {c} is not in SO"))?;
            ensure(intersection_parity(&g) == n % 2, || format!("intersection parity for {c}"))
        })?;
    }
    Ok("gᵗJg = J, det g = 1, intersection parity".into())
}

/// Runs every suite for sizes `1..=max_n`.
pub fn run_suite(max_n: usize) -> Vec<CheckResult> {
    let suites: [(&'static str, fn(usize) -> Outcome); 9] = [
        ("counting", check_counts),
        ("clan identities", check_clan_identities),
        ("rank polynomials", check_rank_polynomials),
        ("weak order", check_weak_order),
        ("sects", check_sects),
        ("rook bijection", check_rooks),
        ("partition pairs", check_partitions),
        ("delannoy paths", check_delannoy),
        ("flag matrices", check_flags),
    ];
    suites
        .iter()
        .map(|&(name, f)| {
            let (passed, detail) = match f(max_n) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name, passed, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_matrix() {
        assert_eq!(coxeter_m(4, 1, 2), 3);
        assert_eq!(coxeter_m(4, 2, 3), 3);
        assert_eq!(coxeter_m(4, 3, 4), 2);
        assert_eq!(coxeter_m(4, 2, 4), 3);
        assert_eq!(coxeter_m(4, 1, 4), 2);
        assert_eq!(coxeter_m(2, 1, 2), 2);
        assert_eq!(coxeter_m(3, 1, 3), 3);
    }

    #[test]
    fn suite_passes_for_small_n() {
        for r in run_suite(4) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
