use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("root list is empty")]
    EmptyRootList,
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("coefficient list is empty")]
    EmptyCoefficients,
    #[error("non-finite value in input")]
    NonFinite,
    #[error("degree {degree} too low: must be at least {min}")]
    DegreeTooLow { degree: usize, min: usize },
    #[error("shift point is a root of the polynomial")]
    RootAtShiftPoint,
    #[error("not a simple root to working accuracy")]
    NotASimpleRoot,
    #[error("singular Laguerre step: both denominators vanish")]
    SingularStep,
    #[error("degenerate power sums at the shift point")]
    DegenerateSums,
    #[error("seeding failed after {shifts} shifts (last estimate {last})")]
    SeedingFailed { last: Complex64, shifts: usize },
    #[error("evaluation point coincides with a root")]
    PoleAtRoot,
    #[error("roots are not pairwise distinct")]
    RepeatedRoot,
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
