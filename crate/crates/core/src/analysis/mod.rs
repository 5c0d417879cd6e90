//! Checkers for the warping-degree identities, exhaustive verification,
//! table reproduction and `e(K)` bounds.

pub mod bounds;
pub mod suite;
pub mod table;
pub mod theorem;

pub use bounds::{e_torus, e_upper_bound, torus_report, TorusReport};
pub use suite::{
    check_word, lemma_suite, Counterexample, Property, PropertyTally, VerificationReport,
};
pub use table::{
    builtin_records, load_records, parse_records, reproduce_table, KnotRecord, RowStatus,
    TableReproduction, TableRow, BUILTIN_TABLE,
};
pub use theorem::{gaps_before_over, lemma26_check, theorem_check};
