use std::sync::OnceLock;

use diii_core::*;
use proptest::prelude::*;

fn table() -> &'static Vec<Vec<DiiiClan>> {
    static TABLE: OnceLock<Vec<Vec<DiiiClan>>> = OnceLock::new();
    TABLE.get_or_init(|| (1..=6).map(|n| enumerate_diii(n).unwrap().clans).collect())
}

/// A uniformly chosen DIII clan with `1 ≤ n ≤ 6`.
fn any_clan() -> impl Strategy<Value = DiiiClan> {
    (1usize..=6, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let row = &table()[n - 1];
        row[idx.index(row.len())].clone()
    })
}

fn any_symbols() -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(
        prop_oneof![Just(Symbol::Plus), Just(Symbol::Minus), (1u32..5).prop_map(Symbol::Pair)],
        1..10,
    )
}

proptest! {
    #[test]
    fn skew_symmetry_and_flip(c in any_clan()) {
        prop_assert_eq!(&c.negative().reverse(), c.as_clan());
        prop_assert!(!c.flip().is_diii());
    }

    #[test]
    fn text_round_trips(c in any_clan()) {
        prop_assert_eq!(&DiiiClan::parse(&c.to_spaced()).unwrap(), &c);
        if let Some(compact) = c.to_compact() {
            prop_assert_eq!(&DiiiClan::parse(&compact).unwrap(), &c);
        }
    }

    #[test]
    fn relabeling_is_invisible(c in any_clan(), shift in 1u32..50) {
        let relabeled: Vec<Symbol> = c
            .symbols()
            .iter()
            .map(|s| match *s {
                Symbol::Pair(l) => Symbol::Pair(1000 - l * shift),
                other => other,
            })
            .collect();
        prop_assert_eq!(&Clan::new(relabeled).unwrap(), c.as_clan());
    }

    #[test]
    fn canonical_form_is_idempotent(symbols in any_symbols()) {
        if let Ok(c) = Clan::new(symbols) {
            prop_assert_eq!(&Clan::new(c.symbols().to_vec()).unwrap(), &c);
            prop_assert_eq!(&parse_clan(&c.to_spaced()).unwrap(), &c);
        }
    }

    #[test]
    fn base_clan_and_involutions(c in any_clan()) {
        let b = c.base_clan();
        prop_assert!(b.is_matchless());
        prop_assert_eq!(&b.base_clan(), &b);
        prop_assert!(c.default_permutation().squares_to_identity());
        prop_assert!(c.underlying_involution().squares_to_identity());
        let pc = c.classify_pairs();
        prop_assert_eq!(pc.pi0.len() % 2, 0);
        prop_assert_eq!(pc.pi1.len() % 2, 0);
        prop_assert_eq!(pc.pi0.len() + pc.pi1.len(), c.num_pairs());
    }

    #[test]
    fn reflections_are_idempotent_ascents(c in any_clan(), i in 1usize..=6) {
        prop_assume!(i <= c.n());
        let once = apply_reflection(i, &c).unwrap();
        prop_assert_eq!(&apply_reflection(i, &once).unwrap(), &once);
        if once != c {
            prop_assert_eq!(length(&once), length(&c) + 1);
        }
        prop_assert!(length(&c) <= c.n() * (c.n() - 1) / 2);
    }

    #[test]
    fn bijections_round_trip(c in any_clan()) {
        let py = clan_to_pyramid(&c);
        prop_assert_eq!(&pyramid_to_clan(&py).unwrap(), &c);
        prop_assert!(pyramid_to_clan(&py.mirror()).is_err());
        let r = pyramid_to_placement(&py);
        prop_assert_eq!(&placement_to_clan(&r).unwrap(), &c);
        prop_assert_eq!(&placement_to_clan(&rotate_placement(&r)).unwrap(), &c);
        let w = clan_to_path(&c);
        prop_assert_eq!(&path_to_clan(&w).unwrap(), &c);
        prop_assert_eq!(&WeightedDelannoyPath::parse(&w.to_string()).unwrap(), &w);
        if let Ok(pp) = clan_to_partition_pair(&c) {
            prop_assert_eq!(&partition_pair_to_clan(&pp).unwrap(), &c);
        }
    }

    #[test]
    fn json_round_trips(c in any_clan()) {
        let py = clan_to_pyramid(&c);
        prop_assert_eq!(&Pyramid::from_json(&py.to_json()).unwrap(), &py);
        let r = pyramid_to_placement(&py);
        prop_assert_eq!(&RookPlacement::from_json(&r.to_json()).unwrap(), &r);
        let text = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(&serde_json::from_str::<DiiiClan>(&text).unwrap(), &c);
    }

    #[test]
    fn flags_are_special_orthogonal(c in any_clan()) {
        prop_assume!(c.n() <= 5);
        let g = representative_matrix(&c);
        prop_assert!(verify_special_orthogonal(&g));
        prop_assert_eq!(intersection_parity(&g), c.n() % 2);
    }

    #[test]
    fn recurrences_agree(n in 1usize..30) {
        prop_assert_eq!(count_formula(n).unwrap(), count_recurrence(n).unwrap());
        prop_assert_eq!(rank_poly_recurrence(n).unwrap().eval_at_one(), count_recurrence(n).unwrap());
    }
}
