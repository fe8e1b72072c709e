pub mod cli;
pub mod closed_forms;
pub mod engine;
pub mod free_algebra;
pub mod linalg;
pub mod store;
pub mod weyl;
