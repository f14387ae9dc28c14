use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = BenchError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot read reference front {path}: {source}")]
    Reference {
        path: PathBuf,
        #[source]
        source: molpb::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error(transparent)]
    Core(#[from] molpb::Error),
}

impl BenchError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 configuration, 3 I/O, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        use molpb::Error as E;
        match self {
            BenchError::Config(_) => 2,
            BenchError::Io { .. } | BenchError::Reference { .. } | BenchError::Json { .. } => 3,
            BenchError::Numerical(_) => 4,
            BenchError::Core(e) => match e {
                E::InvalidInput(_) | E::InvalidConfig(_) | E::Unsupported(_) => 2,
                E::Io(_) | E::Csv(_) => 3,
                E::Evaluation { .. } | E::InvalidState(_) => 4,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(BenchError::Config("x".into()).exit_code(), 2);
        assert_eq!(
            BenchError::Core(molpb::Error::InvalidInput("x".into())).exit_code(),
            2
        );
        let io = std::io::Error::new(std::io::ErrorKind::NotFound, "gone");
        assert_eq!(BenchError::io("a.csv", io).exit_code(), 3);
        let eval = molpb::Error::Evaluation {
            x: vec![0.0],
            index: 0,
            value: f64::NAN,
        };
        assert_eq!(BenchError::Core(eval).exit_code(), 4);
    }
}
