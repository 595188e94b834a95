//! Homological algebra over incidence algebras of posets and path algebras
//! of acyclic quivers: representations, minimal resolutions, Ext against
//! the regular module, grades and Iyama's grade bijection.

mod algebra;
mod invariants;
mod rep;
mod resolution;

pub use algebra::{Arrow, BQAlgebra, RelationClass};
pub use invariants::{
    cartan_matrix, cograde, coxeter_from_injectives, coxeter_matrix, grade, grade_bijection, is_auslander_regular, k0_class,
    rowmotion_coxeter_report, AuslanderVerdict, AuslanderWitness, GradeBijectionResult, RowmotionCoxeterReport,
};
pub use rep::{hom_dim, hom_space, QuiverRep, RepMorphism};
pub use resolution::{
    minimal_injective_coresolution, minimal_projective_resolution, projective_dimension, Cochains, Complex,
    InjectiveCoresolution, ProjMap, ProjectiveResolution, Subquotient,
};

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("module or map does not match the algebra")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("the zero module has no minimal resolution")]
    ZeroModule,
    #[error("not Auslander regular: I^{degree} has summand I_{vertex} of too large projective dimension")]
    NotAuslanderRegular { degree: usize, vertex: String },
    #[error("top of D Ext^g(S_{vertex}, A) is not simple (socle dimensions {socle:?})")]
    NonSimpleTop { vertex: String, socle: Vec<usize> },
    #[error("grade bijection is not a bijection")]
    NotABijection,
    #[error("grade of S_{vertex} is {grade} but the cograde of its image is {cograde}")]
    GradeMismatch { vertex: String, grade: usize, cograde: usize },
    #[error("the two Coxeter matrix computations disagree")]
    ConventionMismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
