//! Exact counting, enumeration and asymptotics of non-crossing path
//! partitions on convex point sets and double chains.

pub mod acceptance;
pub mod asymptotics;
pub mod doublechain;
pub mod error;
pub mod geometry;
pub mod guard;
pub mod oracle;
pub mod recurrences;
pub mod reference;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{ConvexConfig, Label, Ordered2Variant, PartitionClass, PathPartition, VertexRole};
pub use recurrences::{CountTable, Family};
