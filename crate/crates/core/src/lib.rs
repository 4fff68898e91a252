//! Generalized Mullineux involution on Kleshchev multipartitions.
//!
//! The involution is computed by a pipeline of combinatorial steps: the
//! level-one Mullineux map on each component, a lift of the multicharge into
//! the asymptotic chamber, and a crystal isomorphism along a fixed element of
//! the extended affine symmetric group, realised on symbols. An independent
//! crystal-path computation is provided as an oracle.
//!
//! ```
//! use mullineux_core::{mullineux, Modulus, Multicharge, Multipartition};
//!
//! let class = Multicharge::new(vec![0, 1, 3], Modulus::Finite(4)).unwrap();
//! let mp = Multipartition::from_parts(&[&[4], &[3], &[1, 1, 1]]).unwrap();
//! let result = mullineux(&mp, &class, None).unwrap();
//! assert_eq!(result.image.to_string(), "(∅,1.1.1,4.1.1.1)");
//! ```

pub mod affine_weyl;
pub mod crystal;
pub mod error;
pub mod export;
pub mod mullineux;
pub mod partitions;
pub mod rank1;
pub mod symbols;

pub use affine_weyl::{Generator, WeylWord};
pub use crystal::{CrystalGraph, EnumerateOptions, NodeOrder};
pub use error::{Error, Result};
pub use mullineux::{mullineux, mullineux_infinity, mullineux_oracle, verify_sweep, MullineuxResult, VerifyReport};
pub use partitions::{Modulus, Multicharge, Multipartition, Node, Partition};
pub use rank1::{m1, m1_infinity};
