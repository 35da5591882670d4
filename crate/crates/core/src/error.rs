use thiserror::Error;

/// Every failure the library can report. Variant names double as the stable
/// identifiers printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic polynomial does not split over Q(i)")]
    IrrationalSpectrum,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gauge leading coefficient is singular")]
    SingularGauge,
    #[error("equivalence undecidable for reducible inputs")]
    InconclusiveEquivalence,
    #[error("stability is undefined for the zero space V")]
    EmptyV,
    #[error("datum is not stable")]
    NotStable,
    #[error("pole mismatch: {0}")]
    PoleMismatch(String),
    #[error("system is not Fuchsian")]
    NotFuchsian,
    #[error("pair is equivalent to a rank-one constant pair (C, s)")]
    Exceptional,
    #[error("no normal form: {0}")]
    NoNormalForm(String),
    #[error("inconsistent rank: {0}")]
    InconsistentRank(String),
    #[error("system has a nonzero constant term or a nonzero residue at infinity")]
    NotInD0,
    #[error("pair is reducible")]
    Reducible,
    #[error("lambda vanishes and the intermediate pair is exceptional")]
    ZeroLambda,
    #[error("no rank-reducing step exists; rigidity index is {0}")]
    NotRigid(i64),
    #[error("parameter has a constant (translation) term")]
    TranslationParameter,
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable variant name.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IrrationalSpectrum => "IrrationalSpectrum",
            Error::NotNilpotent => "NotNilpotent",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::SingularGauge => "SingularGauge",
            Error::InconclusiveEquivalence => "InconclusiveEquivalence",
            Error::EmptyV => "EmptyV",
            Error::NotStable => "NotStable",
            Error::PoleMismatch(_) => "PoleMismatch",
            Error::NotFuchsian => "NotFuchsian",
            Error::Exceptional => "Exceptional",
            Error::NoNormalForm(_) => "NoNormalForm",
            Error::InconsistentRank(_) => "InconsistentRank",
            Error::NotInD0 => "NotInD0",
            Error::Reducible => "Reducible",
            Error::ZeroLambda => "ZeroLambda",
            Error::NotRigid(_) => "NotRigid",
            Error::TranslationParameter => "TranslationParameter",
            Error::InvalidSystem(_) => "InvalidSystem",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
