use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of a function.
    #[error("{func}: argument {arg} outside domain ({expected})")]
    Domain {
        func: &'static str,
        arg: f64,
        expected: &'static str,
    },

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    /// The best estimate reached so far is carried along.
    #[error("quadrature did not converge after {subdivisions} subdivisions (value {value:e}, error estimate {error:e})")]
    NoConvergence {
        value: f64,
        error: f64,
        subdivisions: usize,
    },

    /// The integrand returned a non-finite value.
    #[error("integrand is not finite at t = {at}")]
    NonFiniteIntegrand { at: f64 },

    /// An iterative solver failed to reach its tolerance.
    #[error("{func}: iteration did not converge for argument {arg}")]
    Iteration { func: &'static str, arg: f64 },

    /// A configuration value violates its invariants.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, arg: f64, expected: &'static str) -> Error {
    Error::Domain {
        func,
        arg,
        expected,
    }
}
