//! File formats, corpora, enumeration and the verification harness.

pub mod corpus;
pub mod enumerate;
pub mod io;
pub mod report;
pub mod verify;
