use thiserror::Error;

use crate::numerics::Cx;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("leading coefficient is zero, polynomial has lower degree than requested")]
    DegenerateDegree,

    #[error("not a quartic: degree is {0:?}")]
    NotAQuartic(Option<usize>),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not centered: cubic coefficient {0}")]
    NotCentered(Cx),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial of degree {0} is too small for the iteration (need at least 2)")]
    DegreeTooSmall(usize),

    #[error("pole at {0}")]
    Pole(Cx),

    #[error("indeterminate 0/0 at {0}")]
    Indeterminate(Cx),

    #[error("no sign change on [{lo}, {hi}] while locating {what}")]
    Bracket { what: &'static str, lo: f64, hi: f64 },

    #[error("parameter {0} outside the supported range")]
    ParameterOutOfRange(Cx),

    #[error("viewport is not symmetric under z -> -z")]
    AsymmetricViewport,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
