use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma function (or a Pochhammer denominator) was asked to evaluate at a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// The argument lies outside the domain on which the routine is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violates the documented admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A unit-argument series whose parameter excess does not guarantee convergence.
    #[error("divergent series: {0}")]
    Divergent(String),

    /// `x` is not strictly inside the confocal ellipse through `z`.
    #[error("x lies outside the convergence ellipse: |x-1|+|x+1| = {x_sum} >= |z-1|+|z+1| = {z_sum}")]
    Region { x_sum: f64, z_sum: f64 },

    /// The requested kernel does not apply to this (d, k) pair.
    #[error("kernel branch mismatch: {0}")]
    Branch(String),

    #[error("the two points coincide")]
    CoincidentPoints,

    #[error("zero radius: {0}")]
    ZeroRadius(String),

    /// Exact integer or rational arithmetic ran out of range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),
}
