pub mod diagram;
pub mod fusion;
pub mod laurent;
pub mod report;
pub mod skein;
pub mod suites;
pub mod tlhecke;
