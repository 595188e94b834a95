//! Exact rowmotion, Cartan and Coxeter matrices, and grade bijections for
//! incidence algebras of finite posets and for Auslander algebras of Dynkin
//! path algebras.

pub mod cli;
pub mod corpus;
pub mod dynkin;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod poset;
pub mod report;
pub mod search;
