//! File formats, fixtures, verification suites and parallel evaluation on
//! top of `wilson-core`.

pub mod corpus;
pub mod fixtures;
pub mod loopfile;
pub mod parallel;
pub mod report;
pub mod spectrum;
pub mod suites;
