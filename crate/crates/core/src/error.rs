use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle through element {0}")]
    CycleDetected(usize),
    #[error("element identifier {id} out of range for a poset with {n} elements")]
    IdentifierOutOfRange { id: usize, n: usize },
    #[error("posets with more than {max} elements are not supported")]
    PosetTooLarge { max: usize },
    #[error("map is not isotone: {0}")]
    NotIsotone(String),
    #[error("domain is not a poset ideal")]
    DomainNotIdeal,
    #[error("maps do not live on the same poset")]
    MixedPosets,
    #[error("finite set of maps is not downward closed: {0}")]
    NotDownwardClosed(String),
    #[error("enumeration would exceed the cap of {cap} items")]
    ExplosionGuard { cap: usize },
    #[error("operation requires a finite poset ideal")]
    InfiniteIdeal,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("height of the zero ideal is undefined")]
    ZeroIdeal,
    #[error("height of the unit ideal is undefined")]
    UnitIdeal,
    #[error("monomial ideal is not artinian in variable {0}")]
    NotArtinian(String),
    #[error("variable {0} lies outside the source of the fiber map")]
    VariableOutsideSource(String),
    #[error("poset is not the natural chain 0 < 1 < ... < m-1")]
    NotAChain,
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("sequence is not a terrace sequence")]
    NotTerrace,
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("budget exceeded in {phase}: {detail}")]
    BudgetExceeded { phase: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Short machine-readable tag used in reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::CycleDetected(_) => "cycle_detected",
            Error::IdentifierOutOfRange { .. } => "identifier_out_of_range",
            Error::PosetTooLarge { .. } => "poset_too_large",
            Error::NotIsotone(_) => "not_isotone",
            Error::DomainNotIdeal => "domain_not_ideal",
            Error::MixedPosets => "mixed_posets",
            Error::NotDownwardClosed(_) => "not_downward_closed",
            Error::ExplosionGuard { .. } => "explosion_guard",
            Error::InfiniteIdeal => "infinite_ideal",
            Error::NotSquarefree => "not_squarefree",
            Error::ZeroIdeal => "zero_ideal",
            Error::UnitIdeal => "unit_ideal",
            Error::NotArtinian(_) => "not_artinian",
            Error::VariableOutsideSource(_) => "variable_outside_source",
            Error::NotAChain => "not_a_chain",
            Error::NotStronglyStable => "not_strongly_stable",
            Error::NotTerrace => "not_terrace",
            Error::InvalidSequence(_) => "invalid_sequence",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Parse(_) => "parse_error",
            Error::Overflow(_) => "overflow",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::ExplosionGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
