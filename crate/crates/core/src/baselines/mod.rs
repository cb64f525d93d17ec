//! Comparison metrics: token-based (Jaccard, TF-IDF) and hybrid (SoftTFIDF,
//! Monge-Elkan over tokens, TagLink). None of them looks at token order.

pub mod assignment;
mod taglink;
mod tokens;

pub use taglink::{taglink, token_match, TokenMatch, EXACT_ASSIGNMENT_LIMIT};
pub use tokens::{jaccard_tokens, monge_elkan_hybrid, soft_tfidf, tfidf_cosine, CorpusStats};

/// Default SoftTFIDF token threshold.
pub const DEFAULT_SOFT_TFIDF_THETA: f64 = 0.9;
