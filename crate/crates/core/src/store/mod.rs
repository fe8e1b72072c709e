//! Table emitters and the on-disk result cache.

mod cache;
mod emit;

pub use cache::{peak_memory_bytes, Cache, CacheRecord, ComputationKey, CACHE_ENV};
pub use emit::{cell_latex, cell_text, emit, parse_csv, to_csv, to_latex, to_text, EmitError, Format};
