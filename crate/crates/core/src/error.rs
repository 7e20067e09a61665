use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term {constant} is not a unit")]
    NonUnitConstantTerm { constant: String },

    #[error("product factor {index} does not have constant term 1")]
    FactorNotUnit { index: usize },

    #[error("symmetric expression left a u residue: {residue}")]
    NonSymmetricResidue { residue: String },

    #[error("part size {size} occurs an odd number of times ({multiplicity})")]
    OddMultiplicity { size: u32, multiplicity: u32 },

    #[error("part size {size} occurs in both components")]
    SharedPartSize { size: u32 },

    #[error("({n}, {m}) is not in the domain n > m >= 1")]
    NotInDomain { n: i64, m: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
