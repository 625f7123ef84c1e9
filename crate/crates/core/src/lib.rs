//! Kirillov–Reshetikhin crystals B^{r,s} of nonexceptional affine types,
//! built as explicit finite graphs, together with exhaustive checks of their
//! structural properties.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod builders;
pub mod cartan;
pub mod crystal;
pub mod pm;
pub mod tableaux;
pub mod verify;
