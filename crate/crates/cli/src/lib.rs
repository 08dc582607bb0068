//! IO, file formats and command implementations for the lighting
//! health assessment engine. The algorithmic core lives in `luxcil-core`;
//! this crate adds profile/measurement parsing, output rendering and the
//! command-line surface.

pub mod commands;
pub mod config;
pub mod csvio;
pub mod emit;
pub mod error;
pub mod pipeline;
