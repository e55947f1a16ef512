//! Acceptance criteria 1–8, one PASS/FAIL line each.
//!
//! Run with `cargo test -p diii-core --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::panic;

use diii_core::delannoy::candidate_words;
use diii_core::verify::coxeter_m;
use diii_core::*;

type Check = std::result::Result<(), String>;

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn clans(n: usize) -> Vec<DiiiClan> {
    enumerate_diii(n).unwrap().clans
}

fn diii(s: &str) -> DiiiClan {
    DiiiClan::parse(s).unwrap()
}

const DELTA: [u128; 7] = [1, 3, 10, 38, 156, 692, 3256];

fn criterion_1() -> Check {
    for (k, &expected) in DELTA.iter().enumerate() {
        let n = k + 1;
        let formula = count_formula(n).map_err(|e| e.to_string())?;
        let rec = count_recurrence(n).map_err(|e| e.to_string())?;
        let listed = clans(n).len() as u128;
        check!(
            formula == expected && rec == expected && listed == expected,
            "n={n}: expected {expected}, formula {formula}, recurrence {rec}, enumeration {listed}"
        );
    }
    Ok(())
}

fn criterion_2() -> Check {
    for n in 3..=7 {
        let from_poset = weak_order_poset(n).unwrap().rank_polynomial();
        let from_rec = rank_poly_recurrence(n).unwrap();
        check!(from_poset == from_rec, "n={n}: poset {from_poset} vs recurrence {from_rec}");
    }
    let a4 = weak_order_poset(4).unwrap().rank_polynomial();
    check!(a4.coeffs == vec![8, 8, 7, 7, 4, 3, 1], "A_4 = {a4}");
    let a2 = weak_order_poset(2).unwrap().rank_polynomial();
    check!(a2.coeffs == vec![2, 1] && rank_poly_recurrence(2).unwrap() == a2, "A_2 = {a2}");
    Ok(())
}

fn criterion_3() -> Check {
    for n in 1..=6 {
        let poset = weak_order_poset(n).unwrap();
        let act = |i: usize, c: &DiiiClan| apply_reflection(i, c).unwrap();
        for c in &poset.nodes {
            for i in 1..=n {
                let once = act(i, c);
                check!(act(i, &once) == once, "s{i} is not idempotent on {c}");
                if once != *c {
                    check!(length(&once) == length(c) + 1, "s{i} on {c} does not raise L by one");
                }
                for j in (i + 1)..=n {
                    let (lhs, rhs) = if coxeter_m(n, i, j) == 3 {
                        (act(i, &act(j, &act(i, c))), act(j, &act(i, &act(j, c))))
                    } else {
                        (act(i, &act(j, c)), act(j, &act(i, c)))
                    };
                    check!(lhs == rhs, "braid relation s{i}, s{j} fails on {c}: {lhs} vs {rhs}");
                }
            }
        }
        let top = poset.maximal_nodes();
        let gamma0 = maximal_clan(n).unwrap();
        check!(top.len() == 1 && *top[0] == gamma0, "n={n}: maximal nodes {top:?}");
        check!(length(&gamma0) == n * (n - 1) / 2, "n={n}: L({gamma0}) = {}", length(&gamma0));
        let bottom: BTreeSet<&DiiiClan> = poset.minimal_nodes().into_iter().collect();
        let matchless: BTreeSet<&DiiiClan> = poset.nodes.iter().filter(|c| c.is_matchless()).collect();
        check!(
            bottom == matchless && bottom.len() == 1 << (n - 1),
            "n={n}: {} minimal nodes, {} matchless clans",
            bottom.len(),
            matchless.len()
        );
    }
    let sizes = weak_order_poset(4).unwrap().rank_sizes();
    check!(sizes == vec![8, 8, 7, 7, 4, 3, 1], "n=4 rank sizes {sizes:?}");
    Ok(())
}

fn criterion_4() -> Check {
    let epsilon = [1u128, 2, 4, 10, 26, 76];
    for n in 1..=6 {
        let all = sects(n).unwrap();
        check!(all.len() == 1 << (n - 1), "n={n}: {} sects", all.len());
        let total: usize = all.iter().map(Sect::len).sum();
        check!(total as u128 == DELTA[n - 1], "n={n}: sect sizes sum to {total}");
        for s in &all {
            check!(s.longest().len() == 1, "sect {} has {} longest clans", s.base, s.longest().len());
            check!(s.members.iter().all(|c| c.base_clan() == s.base), "sect {} is mixed", s.base);
        }
        let big = big_sect(n).unwrap();
        check!(big.len() as u128 == epsilon[n - 1], "n={n}: big sect size {}", big.len());
        check!(epsilon_count(n).unwrap() == epsilon[n - 1], "n={n}: ε = {}", epsilon_count(n).unwrap());
        check!(big.members.contains(&maximal_clan(n).unwrap()), "n={n}: big sect misses the maximal clan");
        for c in &big.members {
            let x = clan_to_pfpf(c).map_err(|e| e.to_string())?;
            check!(pfpf_to_clan(&x).as_ref() == Ok(c), "pfpf round trip fails on {c}");
        }
        let xs = PartialFpfInvolution::all(n);
        check!(xs.len() as u128 == epsilon[n - 1], "n={n}: {} partial involutions", xs.len());
        for x in xs {
            let c = pfpf_to_clan(&x).map_err(|e| e.to_string())?;
            check!(clan_to_pfpf(&c).as_ref() == Ok(&x), "pfpf round trip fails on {x}");
        }
    }
    Ok(())
}

/// Every permutation of `1..=m` fixed by reflection in both diagonals,
/// found by scanning all `m!` permutations.
fn brute_placements(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let c = perm.len() + 1;
        if c > m {
            let ok = (1..=m).all(|c| {
                let r = perm[c - 1];
                perm[r - 1] == c && perm[m - r] == m + 1 - c
            });
            if ok {
                out.push(perm.clone());
            }
            return;
        }
        for r in 1..=m {
            if !used[r - 1] {
                // prune: a row already placed that points back must agree
                if r < c && perm[r - 1] != c {
                    continue;
                }
                used[r - 1] = true;
                perm.push(r);
                go(m, perm, used, out);
                perm.pop();
                used[r - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn criterion_5() -> Check {
    for n in 1..=5 {
        let even = brute_placements(2 * n);
        let odd = brute_placements(2 * n + 1);
        let target = 2 * DELTA[n - 1];
        check!(even.len() as u128 == target, "{} placements on a {}-board, expected {target}", even.len(), 2 * n);
        check!(odd.len() as u128 == target, "{} placements on a {}-board, expected {target}", odd.len(), 2 * n + 1);
        let extended: BTreeSet<Vec<usize>> = even
            .iter()
            .map(|p| extend_odd(&RookPlacement::new(p.clone()).unwrap()).unwrap().perm().to_vec())
            .collect();
        check!(extended == odd.iter().cloned().collect(), "central rook map is not onto for n={n}");

        let mut hits: BTreeMap<DiiiClan, usize> = BTreeMap::new();
        for perm in &even {
            let r = RookPlacement::new(perm.clone()).unwrap();
            let py = placement_to_pyramid(&r).map_err(|e| e.to_string())?;
            let decoded = [pyramid_to_clan(&py), pyramid_to_clan(&py.mirror())];
            let valid: Vec<&DiiiClan> = decoded.iter().filter_map(|d| d.as_ref().ok()).collect();
            check!(valid.len() == 1, "placement {perm:?}: {} pyramids decode to DIII clans", valid.len());
            let c = valid[0].clone();
            check!(placement_to_clan(&r).as_ref() == Ok(&c), "placement_to_clan disagrees on {perm:?}");
            *hits.entry(c).or_default() += 1;
        }
        check!(
            hits.len() as u128 == DELTA[n - 1] && hits.values().all(|&k| k == 2),
            "n={n}: placements do not cover each clan exactly twice"
        );
        for c in clans(n) {
            let py = clan_to_pyramid(&c);
            check!(pyramid_to_clan(&py).as_ref() == Ok(&c), "pyramid round trip fails on {c}");
            let r = pyramid_to_placement(&py);
            check!(placement_to_pyramid(&r).as_ref() == Ok(&py), "placement round trip fails on {c}");
            check!(placement_to_clan(&r).as_ref() == Ok(&c), "clan round trip fails on {c}");
        }
    }
    let blue = Pyramid::new(4, [Cell::left(4, 4), Cell::right(2, 2), Cell::left(1, 3)]).unwrap();
    let c = pyramid_to_clan(&blue).map_err(|e| e.to_string())?;
    check!(c.to_string() == "1-1+-2+2", "blue pyramid decodes to {c}");
    check!(clan_to_pyramid(&c) == blue, "1-1+-2+2 does not give the blue pyramid");
    Ok(())
}

fn minimally_intersecting(pp: &PartitionPair) -> bool {
    pp.pprime()
        .iter()
        .all(|b| pp.p().iter().all(|side| b.iter().filter(|k| side.contains(k)).count() <= 1))
}

fn criterion_6() -> Check {
    for n in 1..=6 {
        let mut produced = BTreeSet::new();
        for c in clans(n) {
            let excluded = c.to_string() == format!("{}{}", "+".repeat(n), "-".repeat(n));
            match clan_to_partition_pair(&c) {
                Ok(pp) => {
                    check!(!excluded, "the excluded clan produced {pp}");
                    check!(minimally_intersecting(&pp), "{pp} is not minimally intersecting");
                    check!(pp.p().iter().all(|b| !b.is_empty()), "{pp} has an empty block");
                    check!(partition_pair_to_clan(&pp).as_ref() == Ok(&c), "round trip fails on {c}");
                    produced.insert(pp);
                }
                Err(e) => check!(excluded, "{c}: {e}"),
            }
        }
        check!(
            produced.len() as u128 + 1 == DELTA[n - 1],
            "n={n}: {} partition pairs, expected {}",
            produced.len(),
            DELTA[n - 1] - 1
        );
    }
    let blue = Pyramid::new(4, [Cell::left(4, 4), Cell::right(2, 2), Cell::left(1, 3)]).unwrap();
    let pp = pyramid_to_partition_pair(&blue).map_err(|e| e.to_string())?;
    let p: BTreeSet<Vec<usize>> = pp.p().iter().cloned().collect();
    let pprime: BTreeSet<Vec<usize>> = pp.pprime().iter().cloned().collect();
    check!(p == BTreeSet::from([vec![3, 4], vec![1, 2]]), "p = {p:?}");
    check!(pprime == BTreeSet::from([vec![1, 3], vec![2], vec![4]]), "p' = {pprime:?}");
    Ok(())
}

fn criterion_7() -> Check {
    for n in 1..=5 {
        let mut words = BTreeSet::new();
        for c in clans(n) {
            let w = clan_to_path(&c);
            validate_path(&w).map_err(|e| format!("{c} -> {w}: {e}"))?;
            check!(path_to_clan(&w).as_ref() == Ok(&c), "round trip fails on {c} -> {w}");
            words.insert(w);
        }
        check!(words.len() as u128 == DELTA[n - 1], "n={n}: {} distinct paths", words.len());
    }
    let w = clan_to_path(&diii("+12213443-"));
    let expected = vec![
        LabeledStep::E,
        LabeledStep::d(4),
        LabeledStep::d(3),
        LabeledStep::d(2),
        LabeledStep::d(5),
        LabeledStep::N,
    ];
    check!(w.steps == expected, "+12213443- maps to {w}");
    for n in 1..=4 {
        let valid = candidate_words(n).into_iter().filter(is_valid_path).count() as u128;
        check!(valid == DELTA[n - 1], "n={n}: {valid} words pass validation");
    }
    Ok(())
}

fn criterion_8() -> Check {
    for n in 1..=5 {
        for c in clans(n) {
            let g = representative_matrix(&c);
            check!(preserves_form(&g), "{c}: gᵗJg ≠ J");
            check!(g.determinant() == QSqrt2::one(), "{c}: det = {}", g.determinant());
            check!(verify_special_orthogonal(&g), "{c}: not in SO");
            check!(intersection_parity(&g) == n % 2, "{c}: intersection parity");
        }
    }
    let g = representative_matrix(&diii("+1212-"));
    let (o, z, h) = (QSqrt2::one(), QSqrt2::zero(), QSqrt2::inv_sqrt2());
    let m = -&h;
    let expected = [
        [&o, &z, &z, &z, &z, &z],
        [&z, &z, &h, &z, &h, &z],
        [&z, &h, &z, &m, &z, &z],
        [&z, &z, &m, &z, &h, &z],
        [&z, &h, &z, &h, &z, &z],
        [&z, &z, &z, &z, &z, &o],
    ];
    for r in 1..=6 {
        for c in 1..=6 {
            check!(g.get(r, c) == expected[r - 1][c - 1], "entry ({r},{c}) is {}", g.get(r, c));
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("counting", criterion_1),
        ("rank polynomials", criterion_2),
        ("weak-order structure", criterion_3),
        ("sects", criterion_4),
        ("rook bijection", criterion_5),
        ("partition pairs", criterion_6),
        ("delannoy paths", criterion_7),
        ("flag matrices", criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(f).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("[PASS] criterion {}: {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
