use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    /// An argument lies outside the domain of the operation (zero where a unit
    /// is required, even prime passed to a Legendre symbol, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate surface: roots {0}, {1}, {2} are not pairwise distinct")]
    DegenerateSurface(String, String, String),

    #[error("malformed rational {0:?}")]
    Parse(String),

    /// The brute-force oracle was asked to decide solvability at a
    /// precision too small to be conclusive.
    #[error("precision p^{given} is insufficient, at least p^{required} needed")]
    Precision { given: u32, required: u32 },

    #[error("could not factor {value}: {reason}")]
    Factorization { value: String, reason: String },

    /// The closed-form case classifier and the enumerated subgroup disagree.
    #[error("internal contradiction at place {place}: classifier predicts order {predicted} ({case}), enumeration found order {enumerated}")]
    Contradiction {
        place: String,
        case: String,
        predicted: u32,
        enumerated: u32,
    },
}

pub type Result<T> = std::result::Result<T, ChowError>;
