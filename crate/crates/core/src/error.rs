use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("composition needs an inner series with zero constant term, found {0}")]
    NonNilpotentInner(String),

    #[error("constant term {0} is not an invertible rational constant")]
    NonInvertibleConstant(String),

    #[error("series power needs constant term 1, found {0}")]
    ConstantTermNotOne(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("E[Y] = 0: t/(E[e_lambda^Y(t)] - 1) has no power-series expansion")]
    ZeroMean,

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid distribution spec `{spec}`: {reason}")]
    ParseDistribution { spec: String, reason: String },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
