use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dual generator is zero")]
    ZeroGenerator,
    #[error("bad prime {p}: need an odd prime{}", match .s { Some(s) => format!(" larger than the socle degree {s}"), None => String::new() })]
    BadPrime { p: u32, s: Option<u32> },
    #[error("ideal contains 1")]
    UnitIdeal,
    #[error("no compressed sample found after {attempts} attempts")]
    GenericSamplingFailed { attempts: u32 },
    #[error("algebra is not Gorenstein: socle has rank {socle_rank}")]
    NotGorenstein { socle_rank: usize },
    #[error("closed form requires an even socle degree, got s = {0}")]
    OddSocle(u32),
    #[error("negative power of z survived the Laurent shift (coefficient of z^{degree} is {coefficient})")]
    CancellationFailure { degree: i64, coefficient: i128 },
    #[error("chain map lift failed at homological degree {step}, internal degree {degree}")]
    LiftFailure { step: usize, degree: i32 },
    #[error("form is not of the shape x_1^t + C with C in (x_2..x_e)")]
    CoordinateForm,
    #[error("socle degree 3 lies outside the theorem's hypotheses; pass the exploration flag to run anyway")]
    SocleDegreeExcluded,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
