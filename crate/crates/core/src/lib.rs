//! Exact counting of double cosets `H\G/K` and of self-inverse double cosets
//! in `H\G/H`, for symmetric groups, type-B Coxeter groups and general linear
//! groups over finite fields.
//!
//! Every count is driven by two class functions of the ambient group: the
//! cycle index of each subgroup (how much of the subgroup falls in each
//! conjugacy class) and, for self-inverse counts, the number of square roots
//! of an element of each class. The [`oracle`] module holds brute-force
//! enumerations used to validate all of it.

pub mod arith;
pub mod error;
pub mod glnq;
pub mod kostka;
pub mod oracle;
pub mod partition;
pub mod permgroup;
pub mod qpoly;
pub mod series;
pub mod symgroup;
pub mod typeb;

pub use arith::BigRatio;
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use partition::{partitions_of, Partition};
pub use qpoly::QPoly;
pub use series::{ClassKey, ClassVector, PartitionVector};
