//! File formats, configuration and the command-line front end for
//! [`qsub_core`].

pub mod cli;
pub mod config;
pub mod doc;
pub mod oracle;
