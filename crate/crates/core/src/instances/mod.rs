//! Concrete instances: finite groups, matrix groupoids, monoidal structures,
//! crossed modules and lattice connections.

use thiserror::Error;

use crate::category::{CategoryError, FiniteCategory, MorId, MorRecord, ObjId};

pub mod crossed;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod tensor;

pub use crossed::CrossedModule;
pub use group::FiniteGroup;
pub use lattice::LatticeConnection;
pub use matrix::{
    graded_matrix_groupoid, matrix_groupoid, matrix_groupoid_with, Matrix, MatrixGroupoid,
};
pub use tensor::{
    corrupt_associator, direct_sum_family, direct_sum_monoidal, group_product_monoidal,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{what} has size {size}, above the limit {limit}")]
    SizeGuard {
        what: String,
        size: u128,
        limit: usize,
    },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("position ({t}, {s}) is outside the lattice")]
    OutOfRange { t: usize, s: usize },
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// Size guards applied before anything is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest hom-set (for matrix groupoids, largest `|GL(d, 𝔽_p)|`).
    pub max_hom: usize,
    pub max_objects: usize,
    /// Largest lattice extent in either direction.
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_hom: 512,
            max_objects: 16,
            max_lattice: 32,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_hom: usize::MAX,
            max_objects: usize::MAX,
            max_lattice: usize::MAX,
        }
    }
}

/// A group as a one-object groupoid on `*`. Morphism `i` is group element
/// `i`, and composition is group multiplication.
pub fn group_as_groupoid(g: &FiniteGroup) -> FiniteCategory {
    let records = (0..g.order())
        .map(|i| MorRecord {
            id: MorId(i),
            dom: ObjId(0),
            cod: ObjId(0),
            label: Some(g.label(i).to_string()),
        })
        .collect();
    FiniteCategory::from_fn(
        vec!["*".into()],
        records,
        vec![MorId(g.identity())],
        |a, b| MorId(g.mul(a.0, b.0)),
    )
    .expect("group tables are well formed")
}
