//! Two-level hybrid string similarity.
//!
//! A multi-word string is split into tokens, each token is replaced by a
//! symbol (two tokens share a symbol when a character-level metric scores
//! them above a threshold), and a second metric then compares the two symbol
//! sequences. The nine base metrics of [`seqmetrics`] fill both roles, giving
//! the 81 `liuppa:i,j` combinations of [`hybrid`].
//!
//! The crate also ships the token-based and hybrid baselines used for
//! comparison ([`baselines`]) and a ranking-based evaluation harness with
//! average precision, candidate-pair blocking, threshold calibration and
//! lexicon alignment ([`eval`]).
//!
//! ```
//! use tokensym::hybrid::HybridConfig;
//! use tokensym::seqmetrics::MetricCode;
//!
//! let jw = MetricCode::new(1).unwrap();
//! let config = HybridConfig::new(jw, jw);
//! let score = config
//!     .score("centre de formation professionnelle des adultes", "centre de formation des adultes")
//!     .unwrap();
//! assert!((score - 0.96).abs() < 0.005);
//! ```

pub mod baselines;
pub mod error;
pub mod eval;
pub mod hybrid;
pub mod metric;
pub mod seqmetrics;
pub mod symbolizer;

pub use error::{Error, Result};
pub use metric::StringMetric;
