use thiserror::Error;

use crate::code::Codeword;

pub type Result<T, E = CodeError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("neuron {neuron} is outside 1..={n}")]
    NeuronOutOfRange { neuron: usize, n: usize },

    #[error("codes are limited to {max} neurons, got {n}", max = crate::code::MAX_NEURONS)]
    TooManyNeurons { n: usize },

    #[error("compact notation needs n <= 9, got n = {0}; use JSON")]
    CompactNeedsSmallN(usize),

    #[error("codeword {0} is not in the code")]
    NotInCode(Codeword),

    #[error("subset is not a trunk of the code")]
    NotATrunk,

    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),

    #[error("{0}")]
    Mismatch(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(Codeword),

    #[error("{0}")]
    InvalidInput(String),

    #[error("resource cap exceeded: {what} is {count}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("cache i/o: {0}")]
    Cache(String),
}
