//! Programmatic diagram construction.

pub mod braid;
pub mod words;

pub use braid::{braid_closure, torus_diagram, validate_torus, BraidWord};
pub use words::{
    canonical_word_count, enumerate_words, enumerate_words_capped, random_word, WordEnumerator,
    DEFAULT_ENUMERATION_CAP,
};
