//! Closed-form and cut-based conditions for RP: the tree characterisation,
//! the mod-`k` cut inequality, component-count bounds, the spanning spider
//! obstruction and RP spanning trees.

mod cuts;
mod spanning;
mod tree;

pub use cuts::{
    mod_cut_check, mod_cut_scan, spider_obstruction, toughness_bound_check, ModCutReport,
    ToughnessBoundReport, BOUND_MAX_N, SCAN_FREE_CUT, SCAN_MAX_N,
};
pub use spanning::{has_rp_spanning_tree, SpanningTreeResult, SPANNING_TREE_MAX_N};
pub use tree::{
    tree_is_rp, tripode_arms, tripode_is_rp, ArmRule, TreeReason, TreeRpVerdict, TRIPODE_TABLE,
};
