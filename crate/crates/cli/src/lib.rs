//! Output records shared by the `deligne` binary and its tests.

pub mod output;

pub use output::OutputRecord;
