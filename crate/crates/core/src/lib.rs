#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod descent;
pub mod error;
pub mod groebner;
pub mod kaehler;
pub mod modules;
pub mod poly;
pub mod report;
pub mod ring;
pub mod scalars;
pub mod syntax;
pub mod transfer;

pub use error::{Error, Result};
