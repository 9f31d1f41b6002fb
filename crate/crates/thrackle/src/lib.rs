//! File formats, parallel search and verification campaigns on top of
//! `thrackle-core`, plus the `thrackle` command-line tool.

pub mod campaign;
pub mod format;
pub mod parallel;

pub use thrackle_core as core;
