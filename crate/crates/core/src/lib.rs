//! Dyck paths whose ascents carry colours drawn from a colour system, the
//! pyramid decompositions, seven bijections onto trees, partitions,
//! dissections and lattice paths, and exact enumeration.

pub mod bijections;
pub mod colours;
pub mod enumeration;
pub mod error;
pub mod paths;
pub mod structures;

pub use colours::{ColourSystem, ColouredDyckPath};
pub use error::{Error, Result};
pub use paths::{DyckPath, Family, LittleSchroederPath, PyramidTree, SchroederPath, TPath};
pub use structures::{Dissection, EvenPartition, NcTree, NcoTree, NonCrossingPartition};
