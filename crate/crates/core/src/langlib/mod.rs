//! Words, languages, the subsequence order, and the length-change audit.

mod audit;
mod language;
mod order;
mod word;

pub use audit::{theorem1_audit, AuditReport};
pub use language::Language;
pub use order::{growth, is_subsequence, minimal_words, stretch};
pub use word::{Symbol, Word, EPSILON};
