use og10_lattice::document::DocumentError;
use og10_lattice::hassett::HassettError;
use og10_lattice::lattice::LatticeError;
use og10_lattice::nikulin::NikulinError;
use og10_lattice::og10::Og10Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unparseable or out-of-range input; exit code 1.
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input that the mathematics rejects; exit code 2.
    #[error("rejected: {0}")]
    Math(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) | Self::Io(_) => 1,
            Self::Math(_) => 2,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Self::Input(msg.into())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::NotSymmetric
            | LatticeError::VectorLength { .. }
            | LatticeError::ZeroVector
            | LatticeError::ZeroScale
            | LatticeError::DependentBasis
            | LatticeError::Linalg(_) => Self::Input(e.to_string()),
            LatticeError::Degenerate
            | LatticeError::NonIntegralPairing { .. }
            | LatticeError::OddGlueSquare { .. } => Self::Math(e.to_string()),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Lattice(l) => l.into(),
            other => Self::Input(other.to_string()),
        }
    }
}

impl From<HassettError> for CliError {
    fn from(e: HassettError) -> Self {
        Self::Input(e.to_string())
    }
}

impl From<Og10Error> for CliError {
    fn from(e: Og10Error) -> Self {
        match e {
            Og10Error::OddDiscriminant(_)
            | Og10Error::DiscriminantTooSmall(_)
            | Og10Error::NotAdmissible(_) => Self::Input(e.to_string()),
            Og10Error::Lattice(l) => l.into(),
            other => Self::Math(other.to_string()),
        }
    }
}

impl From<NikulinError> for CliError {
    fn from(e: NikulinError) -> Self {
        match e {
            NikulinError::DefiniteTarget(..) | NikulinError::NoEvenUnimodular(..) => Self::Input(e.to_string()),
            NikulinError::Lattice(l) => l.into(),
            other => Self::Math(other.to_string()),
        }
    }
}
