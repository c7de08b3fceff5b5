use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix (determinant {determinant})")]
    Singular { determinant: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown product label `{0}`")]
    UnknownLabel(String),
    #[error("missing product `{0}`")]
    MissingProduct(String),
    #[error("missing action `{0}`")]
    MissingAction(String),
    #[error("identity needs a module but none was given")]
    MissingModule,
    #[error("sort error: {0}")]
    Sort(String),
    #[error("not multilinear: variable `{var}` in monomial {monomial}")]
    NotMultilinear { var: String, monomial: String },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("denominator {0} vanishes under the given bindings")]
    DenominatorVanishes(String),
    #[error("result is only valid when {0}")]
    Assumes(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{path}: {inner}")]
    At { path: String, inner: Box<Error> },
}

impl Error {
    /// Replace the positional names `p0, p1, ..` in a vanishing denominator
    /// by the given parameter names.
    pub fn named(self, params: &[String]) -> Error {
        match self {
            Error::DenominatorVanishes(text) => {
                let positional: Vec<String> = (0..params.len()).map(|i| format!("p{i}")).collect();
                match crate::parse_scalar(&text, &positional) {
                    Ok(s) => Error::DenominatorVanishes(s.render(params)),
                    Err(_) => Error::DenominatorVanishes(text),
                }
            }
            Error::At { path, inner } => Error::At {
                path,
                inner: Box::new(inner.named(params)),
            },
            other => other,
        }
    }

    /// Input/parse problems as opposed to mathematical failures.
    pub fn is_input_error(&self) -> bool {
        if let Error::At { inner, .. } = self {
            return inner.is_input_error();
        }
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownParameter(_)
                | Error::DuplicateLabel(_)
                | Error::UnknownLabel(_)
                | Error::MissingProduct(_)
                | Error::MissingAction(_)
                | Error::MissingModule
                | Error::Sort(_)
                | Error::NotMultilinear { .. }
                | Error::UnknownExample(_)
                | Error::Invalid(_)
                | Error::Json(_)
        )
    }
}
