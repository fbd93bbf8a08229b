use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A slope-type operation received the zero Chern vector.
    #[error("{op}: the zero vector has no slope")]
    ZeroVector { op: &'static str },

    /// A violated hypothesis. `field` names the offending input and
    /// `hypothesis` the mathematical condition that failed.
    #[error("{field}: {hypothesis} ({message})")]
    Precondition {
        field: String,
        hypothesis: String,
        message: String,
    },

    #[error("cannot parse {field} = {value:?}: {message}")]
    Parse {
        field: String,
        value: String,
        message: String,
    },

    #[error("job file{}: {field}: {message}", line.map(|l| format!(" line {l}")).unwrap_or_default())]
    Jobfile {
        line: Option<usize>,
        field: String,
        message: String,
    },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(
        field: impl Into<String>,
        hypothesis: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Error::Precondition {
            field: field.into(),
            hypothesis: hypothesis.into(),
            message: message.into(),
        }
    }
}
