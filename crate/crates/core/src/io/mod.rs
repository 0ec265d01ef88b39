//! Table artifacts, renderers, the on-disk cache, golden data and verification suites.

pub mod artifact;
pub mod cache;
pub mod golden;
pub mod render;
pub mod verify;

pub use artifact::{compute_table, Metadata, TableArtifact, TableKind, ORDER_VERSION, TOOL_VERSION};
pub use cache::{Cache, CacheStatus};
pub use render::{render, Format};
