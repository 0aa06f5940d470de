//! Config files, presets, CSV output, and sweep orchestration around
//! `magnomech-core`.

pub mod config;
pub mod csvio;
pub mod preset;
pub mod sweep;
