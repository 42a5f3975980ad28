//! Exact computation of 2-modular decomposition numbers for symmetric
//! groups and their double covers, together with a battery of consistency
//! checks that cross-validate every table against independent constructions.

pub mod characters;
pub mod gf2;
pub mod modrep;
pub mod partition;
pub mod session;
pub mod spin;
pub mod tableaux;
pub mod util;
pub mod verify;

pub use characters::{character_value, specht_dimension, CharTable};
pub use gf2::{BitMatrix, BitVec, Subspace};
pub use modrep::{decomposition_matrix, ChopError, DecompositionMatrix};
pub use session::{Session, SessionError};
pub use spin::{spin_decomposition_matrix, SpinDecompositionMatrix};
pub use partition::{partitions, strict_partitions, Composition, Cut, Partition};
pub use tableaux::{lr_coefficient, shifted_lr_coefficient, ssyt_count};
pub use verify::{run_all, run_check, CheckReport, CHECK_IDS};
