//! Bundled worked-example data: a hand-listed embedding of Q_7 onto
//! C_32 × P_4 whose type sequence exercises every stage of the reduction
//! (a big-type entry, a wide-level evenize, and both unit-level steps),
//! together with the expected sequence for each stage.
//!
//! The arrangement file carries the example in its original form: the
//! vertex occupying each label, in label order. The embedding file is its
//! inverse in the standard format (labels by vertex); a test pins the two
//! to each other.

use crate::embedding::{load_embedding, EmbeddingMap};
use crate::error::Result;
use crate::typeseq::{extract_type_sequence, Reduction, TypeSeq};

/// The bundled embedding file in the standard format (0-based labels by
/// vertex; the loader normalizes to 1-based).
pub const EMBEDDING_TEXT: &str = include_str!("../data/example_embedding_n7.txt");

/// The raw transcription of the example: vertex values in label order.
pub const ARRANGEMENT_TEXT: &str = include_str!("../data/example_arrangement_n7.txt");

/// The expected reduction table: one row per stage, 16 entries per row.
pub const REDUCTION_TABLE_TEXT: &str = include_str!("../data/reduction_table.csv");

/// Loads the bundled embedding (normalized to 1-based labels).
pub fn bundled_embedding() -> EmbeddingMap {
    load_embedding(EMBEDDING_TEXT.as_bytes()).expect("bundled embedding file is a valid bijection")
}

/// The raw arrangement: entry k is the vertex occupying label k + 1.
pub fn bundled_arrangement() -> Vec<u64> {
    ARRANGEMENT_TEXT
        .lines()
        .filter(|line| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
        .flat_map(|line| line.split_whitespace().map(|f| f.parse().expect("vertex value")))
        .collect()
}

/// Parses the expected table as (row name, entries) pairs.
pub fn bundled_reduction_table() -> Vec<(String, Vec<u64>)> {
    REDUCTION_TABLE_TEXT
        .lines()
        .skip(1)
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let mut fields = line.split(',');
            let name = fields.next().expect("row name").trim().to_string();
            let entries = fields
                .map(|f| f.trim().parse().expect("table entry"))
                .collect();
            (name, entries)
        })
        .collect()
}

/// Runs the bundled embedding end to end: extract the type sequence, then
/// reduce it, returning the recorded stages for comparison against
/// [`bundled_reduction_table`].
pub fn bundled_reduction() -> Result<(TypeSeq, Reduction)> {
    let f = bundled_embedding();
    let seq = extract_type_sequence(&f)?;
    let reduction = seq.reduce_to_base()?;
    Ok((seq, reduction))
}
