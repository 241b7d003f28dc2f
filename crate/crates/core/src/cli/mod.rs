//! Input documents, named families and report rendering for the
//! `coxcarpet` binary.

pub mod family;
pub mod format;
pub mod report;

pub use family::{make_family, with_labels, FamilyError};
pub use format::{parse_document, parse_system, ParseError, SystemDocument};
pub use report::{emit_nerve, emit_report, ReportFormat};
