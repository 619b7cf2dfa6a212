//! Library half of the `tropsolve` binary: argument definitions, the matrix
//! file format, report structures, and the command runner. The binary is a
//! thin wrapper so the whole surface stays testable in-process.

pub mod args;
pub mod matfile;
pub mod report;
pub mod run;
