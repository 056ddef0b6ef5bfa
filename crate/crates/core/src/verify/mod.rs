//! Theorem verification over single coverings and whole covering streams.

pub mod sweep;
pub mod theorems;
pub mod zhu;

pub use sweep::{covering_count, sweep, sweep_with_cap, SweepMode, SweepReport};
pub use theorems::{verify_theorem, CoveringAnalysis, TheoremId, TheoremVerdict};
pub use zhu::{zhu_audit, zhu_condition, Classification, Reading, ZhuAuditRecord, ZhuWitness};
