use thiserror::Error;

/// Errors raised by the polynomial toolkit, the local-algebra engine and the
/// pencil analyzer.
///
/// Variants fall into two families: input errors (bad expressions, mismatched
/// variable lists, malformed files) and mathematical refusals (non-isolated
/// singularities, incomplete enumerations). The CLI maps the latter to exit
/// code 2, see [`Error::is_refusal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },

    #[error("bad exponent at position {pos}: {msg}")]
    BadExponent { pos: usize, msg: String },

    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("zero polynomial not allowed here: {0}")]
    ZeroPolynomial(&'static str),

    #[error("both polynomials are constant in `{0}`")]
    ConstantInVariable(String),

    #[error("germ does not vanish at the origin")]
    NotVanishing,

    #[error("germ has a nonzero linear part")]
    NonzeroLinearPart,

    #[error("not isolated: {0}")]
    NonIsolated(String),

    #[error("genericity failure: {0}")]
    GenericityFailure(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("not a reduced fraction: p and q share the factor {0}")]
    NotReduced(String),

    #[error("incomplete enumeration: {0}")]
    Incomplete(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Mathematical refusals, as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NonIsolated(_)
                | Error::GenericityFailure(_)
                | Error::Degenerate(_)
                | Error::Incomplete(_)
                | Error::NotReduced(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
