//! Exact kernels for NP-hard invariants, each returning a certificate.

mod coloring;
mod cycles;
mod independence;
mod transversal;

pub use coloring::{
    chromatic_number, chromatic_numbers_all_subsets, dsatur_greedy, is_k_colorable, ColoringCertificate,
    SUBSET_CHI_CAP,
};
pub use cycles::{
    cycle_order, diamond_configurations, find_diamond, find_induced_even_cycle, induced_even_cycles,
    is_cycle, is_induced_cycle, shortest_cycle, Diamond, ShortestCycle, INDUCED_CYCLE_CAP,
};
pub use independence::{
    all_maximum_independent_sets, clique_number, independence_number, independence_number_within,
    independence_numbers_all_subsets, SubsetAlphaTable, ALL_MIS_CAP, SUBSET_TABLE_CAP,
};
pub use transversal::odd_cycle_transversal;


