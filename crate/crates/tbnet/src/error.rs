use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        context: String,
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("label {label} out of range for {class_count} classes")]
    LabelOutOfRange { label: usize, class_count: usize },

    #[error("non-finite value produced in {0}")]
    NonFinite(String),

    #[error("IDX magic mismatch in {path}: expected {expected:#010x}, found {found:#010x}")]
    IdxMagic {
        path: String,
        expected: u32,
        found: u32,
    },

    #[error("IDX file {path} is truncated: {detail}")]
    IdxTruncated { path: String, detail: String },

    #[error("image/label count mismatch: {images} images vs {labels} labels")]
    IdxCountMismatch { images: usize, labels: usize },

    #[error("weight file {path} is malformed: {detail}")]
    WeightFormat { path: String, detail: String },

    #[error("unknown attack id {id:?}; valid ids: {valid}")]
    UnknownAttack { id: String, valid: String },

    #[error("empty input for {0}")]
    EmptyInput(String),

    #[error("perturbation bound violated: max-norm {max_norm} exceeds epsilon {epsilon}")]
    EpsilonViolation { max_norm: f64, epsilon: f64 },

    #[error("config file {path}, line {line}: {detail}")]
    ConfigParse {
        path: String,
        line: usize,
        detail: String,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}
