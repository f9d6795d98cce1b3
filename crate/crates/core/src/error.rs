use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("GF({p}^{m}) exceeds the supported field size 2^16")]
    TooLarge { p: u32, m: u32 },
    #[error("invalid coefficient list {0:?}")]
    BadCoefficients(Vec<u32>),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large: order exceeds the cap of {cap}")]
    TooLarge { cap: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotABijection { index: usize, degree: usize },
    #[error("generators act on different numbers of points")]
    DegreeMismatch,
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("invalid group parameters: {0}")]
    BadParameters(String),
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves the subgroup")]
    NotNormal { conjugator: usize, element: usize },
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotAHomomorphism { x: usize, y: usize },
    #[error("not a valid multiplication table: {0}")]
    BadTable(String),
    #[error("subgroups belong to different groups")]
    ParentMismatch,
    #[error("{order} is not a power of {p}")]
    NotAPGroup { p: u32, order: usize },
    #[error("p-part {p_part} exceeds the subgroup enumeration cap {cap}")]
    EnumerationCap { p_part: usize, cap: usize },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra elements live in different group algebras")]
    AmbientMismatch,
    #[error("subalgebra is not commutative: basis elements {0} and {1} do not commute")]
    NotCommutative(usize, usize),
    #[error("spanning set is not closed under multiplication")]
    NotClosed,
    #[error("subalgebra has no identity element")]
    NoIdentity,
    #[error("element is not fixed by the subgroup (moved by conjugation with {0})")]
    NotFixed(usize),
    #[error("idempotent decomposition inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("{0} is not contained in {1}")]
    NotASubgroupOf(String, String),
    #[error("subgroup of order {0} is not a p-group")]
    NotAPGroup(usize),
    #[error("non-conjugate maximal candidates for the defect group: orders {0:?}")]
    AmbiguousDefect(Vec<usize>),
    #[error("sandwich condition D*C_G(D) <= H <= N_G(D) fails")]
    Sandwich,
    #[error("expected exactly one block e with f*Br_D(e) = f, found {0}")]
    Correspondent(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("representation is not a homomorphism at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("matrix dimensions do not match the module dimension {0}")]
    Dimension(usize),
    #[error("exhaustive search of {size} vectors exceeds the feasibility cap")]
    Feasibility { size: u128 },
    #[error("non-conjugate minimal projectivity classes: orders {0:?}")]
    AmbiguousVertex(Vec<usize>),
    #[error("module is not projective relative to the whole group")]
    NoVertex,
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TowerError {
    #[error("connecting map {0} is not surjective")]
    NotSurjective(usize),
    #[error("tower needs {expected} maps between its levels, got {got}")]
    MapCount { expected: usize, got: usize },
    #[error("level {level}: expected one finer block over a coarse block, found {found}")]
    ThreadUniqueness { level: usize, found: usize },
    #[error("unknown tower kind `{0}`")]
    UnknownKind(String),
    #[error("tower depth must be positive")]
    ZeroDepth,
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
