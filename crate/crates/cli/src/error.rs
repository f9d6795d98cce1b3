use blocktower::{AlgebraError, BlockError, FieldError, GroupError, ModuleError, TowerError};
use thiserror::Error;

/// Errors are split by who is at fault: bad input exits with 2, a failed
/// computation or check with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn classify_group(e: &GroupError) -> bool {
    !matches!(e, GroupError::ParentMismatch)
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match &e {
            AlgebraError::Group(g) if classify_group(g) => CliError::Input(e.to_string()),
            AlgebraError::Field(_) => CliError::Input(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<BlockError> for CliError {
    fn from(e: BlockError) -> Self {
        match e {
            BlockError::Group(g) => g.into(),
            BlockError::Field(f) => f.into(),
            BlockError::Algebra(a) => a.into(),
            BlockError::NotASubgroupOf(..) | BlockError::NotAPGroup(_) | BlockError::NotNormal | BlockError::Sandwich => CliError::Input(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Block(b) => b.into(),
            ModuleError::Group(g) => g.into(),
            ModuleError::Algebra(a) => a.into(),
            ModuleError::Feasibility { .. } => CliError::Input(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<TowerError> for CliError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::Block(b) => b.into(),
            TowerError::Group(g) => g.into(),
            TowerError::Algebra(a) => a.into(),
            TowerError::ThreadUniqueness { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
