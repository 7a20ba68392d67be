//! File formats, reports and the command-line workbench over `syzygy-core`.

pub mod commands;
pub mod examples;
pub mod format;
pub mod grid;
pub mod report;
pub mod template;
