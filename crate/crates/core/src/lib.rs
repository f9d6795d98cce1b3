//! Block theory of group algebras over finite fields.
//!
//! The crate computes block decompositions of `kG` for finite groups `G`
//! and finite fields `k` of characteristic `p`, together with trace maps,
//! Brauer homomorphisms, defect groups and the Brauer correspondence, and
//! checks the corresponding statements level by level on towers of finite
//! quotients of a profinite group.

pub mod algebra;
pub mod blocks;
pub mod error;
pub mod field;
pub mod group;
pub mod idempotent;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod tower;

pub use error::{AlgebraError, BlockError, FieldError, GroupError, ModuleError, TowerError};
pub use field::{FieldElement, FieldSpec, FiniteField};
pub use group::{named_group, FiniteGroup, GroupMorphism, Limits, NamedGroup, Subgroup};
pub use linalg::{Matrix, SemiEchelon, Vector};
pub use algebra::{AlgebraElement, SubalgebraBasis, SubalgebraKind};
pub use module::Rep;
pub use tower::{named_tower, thread_blocks, BlockThread, ThreadSystem, Tower, TowerSpec};
pub use idempotent::{primitive_idempotents_commutative, radical_of_commutative, CommutativeAlgebra, IdempotentDecomposition};
