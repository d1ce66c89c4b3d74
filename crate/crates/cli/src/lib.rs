//! Command-line companion to `rwinv-core`: file formats, tables and dispatch.

pub mod app;
pub mod dsl;
pub mod error;
pub mod names;
pub mod tables;

pub use app::run;
