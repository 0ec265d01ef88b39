pub mod seminormal;
pub mod tables;
pub mod rewriter;
