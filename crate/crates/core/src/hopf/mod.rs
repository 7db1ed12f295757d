//! Presented Hopf algebras realized as structure constants on triangular
//! normal-form bases, constructors for the paper-level algebra families,
//! and the axiom / morphism checkers.

pub mod checks;
pub mod elem;
pub mod engine;
pub mod families;
pub mod structure;

pub use checks::{check_hopf_axioms, check_morphism, AxiomCheckConfig, HopfMorphismSpec, MorphismReport};
pub use elem::{Elem, Elem2, Elem3, FreeElem, FreeWord, Mono};
pub use engine::{BlockData, CrossRule, EngineError, TriangularAlgebra};
pub use families::{
    build_family, build_generic_quantum_group, build_group_algebra, build_named,
    build_small_quantum_group, BuildError, Family,
};
pub use structure::{GenKind, Generator, Relation, StructureHopfAlgebra};
