//! Assembly layer: the level catalog, the elimination criterion, the
//! embedded reference tables, deterministic reports, and the on-disk
//! result cache.

pub mod cache;
pub mod catalog;
pub mod criterion;
pub mod report;
pub mod tables;

pub use cache::{Cache, CacheKey, CACHE_VERSION};
pub use catalog::{status, LevelStatus, CATALOG};
pub use criterion::{
    evaluate_criterion, ConditionRecord, ConditionVerdict, CriterionReport, FinalVerdict,
};
pub use report::{report_json, REPORT_VERSION};
pub use tables::{
    check_decomposition_table, check_order_table, decomposition_row, ComputedRow,
    DecompositionRow, RowCheck, DECOMPOSITION_TABLE, ORDER_TABLE,
};
