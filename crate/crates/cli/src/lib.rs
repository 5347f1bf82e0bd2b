//! Text formats and the seeded verification harness behind the
//! `countforge` binary. Both halves are libraries so integration tests
//! (and the Python bindings' smoke scripts) can drive them in-process.

pub mod formats;
pub mod verify;
