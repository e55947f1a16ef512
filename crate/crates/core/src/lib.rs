//! DIII `(n,n)`-clans: validation, enumeration, weak order, sects, rook and
//! path bijections, and exact representative flag matrices.

pub mod clan;
pub mod delannoy;
pub mod enumeration;
pub mod error;
pub mod flag;
pub mod qsqrt2;
pub mod rook;
pub mod sect;
pub mod verify;
pub mod weak_order;

pub use clan::{parse_clan, Clan, DiiiClan, Involution, PairClassification, Sign, Symbol};
pub use enumeration::{count_by_pairs, count_formula, count_recurrence, enumerate_diii, ClanSet};
pub use error::{ClanError, DiiiViolation, Result};
pub use weak_order::{
    apply_reflection, ascent_candidates, clan_length, length, maximal_clan, rank_poly_recurrence,
    weak_order_poset, Cover, LengthStats, RankPolynomial, WeakOrderPoset,
};
pub use sect::{
    base_clan_to_subset, big_sect, big_sect_base, clan_to_pfpf, epsilon_count, in_big_sect,
    pfpf_to_clan, sects, subset_to_base_clan, PartialFpfInvolution, SchubertSubset, Sect,
};
pub use rook::{
    clan_to_partition_pair, clan_to_placement, clan_to_pyramid, decode_pyramid,
    doubly_symmetric_placements, extend_odd, partition_pair_to_clan, partition_pair_to_pyramid,
    placement_to_clan, placement_to_pyramid, pyramid_to_clan, pyramid_to_partition_pair,
    pyramid_to_placement, rotate_placement, signed_involution_pair, Cell, PartitionPair, Pyramid,
    RookPlacement, Side,
};
pub use delannoy::{
    clan_to_path, is_valid_path, path_to_clan, validate_path, Dir, LabeledStep, WeightedDelannoyPath,
};
pub use flag::{
    intersection_dimension, intersection_parity, preserves_form, representative_matrix,
    verify_special_orthogonal, FlagMatrix,
};
pub use qsqrt2::QSqrt2;
pub use verify::{run_suite, CheckResult};
