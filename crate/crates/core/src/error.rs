use crate::types::Complex;

/// Errors produced by the permanent engines and the approximation pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("work cap exceeded for {what}: needs {needed:.3e}, cap is {cap:.3e}")]
    SizeCap { what: &'static str, needed: f64, cap: f64 },

    #[error("inadmissible input: {0}")]
    Inadmissible(String),

    #[error("singular row scaling: diagonal entry {0} is zero")]
    SingularScaling(usize),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("derivative sequence is not normalized: g(0) = {0}, expected 1")]
    Normalization(Complex),
}

impl Error {
    /// True for errors that reject the input on mathematical grounds
    /// (dominance violated, singular scaling, bad base matching).
    pub fn is_inadmissible(&self) -> bool {
        matches!(
            self,
            Error::Inadmissible(_) | Error::SingularScaling(_) | Error::InvalidMatching(_)
        )
    }

    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
