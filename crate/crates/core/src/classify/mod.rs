//! Classification of divisible codes up to equivalence.

pub mod canon;
pub mod db;
pub mod engine;
pub mod key;
pub mod table;

pub use db::{ClassificationRecord, Database};
pub use engine::{classify_2divisible, classify_divisible, count_table, ClassifiedCode, CountTable};
pub use key::{canonical_key, CanonicalKey};
pub use table::render_table;
