//! Command-line front end for the degstir engine.

pub mod app;
pub mod output;
