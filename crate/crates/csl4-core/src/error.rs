use core::fmt;

use alloc::string::String;

/// Error type shared by all modules of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CslError {
    /// The zero quaternion cannot parameterise a rotation.
    ZeroQuaternion,
    /// gcd/lcm of two zero (or one zero, for lcm) ring elements.
    ZeroArgument,
    /// Division by zero in a quaternion ring.
    ZeroDivisor,
    /// A negative integer where a non-negative one is required.
    NegativeInput,
    /// Operation requires a primitive quaternion.
    NotPrimitive,
    /// The parameter does not satisfy the family's admissibility condition.
    NotAdmissible,
    /// A square root guaranteed by admissibility was missing; this signals
    /// an inconsistency in the caller's admissibility check.
    MissingSquareRoot,
    /// Parameter kind does not match the requested lattice family.
    FamilyMismatch,
    /// Quaternion coordinates do not lie in the requested ring.
    NotInRing(String),
    /// Ambient dimensions of two modules disagree.
    DimensionMismatch { left: usize, right: usize },
    /// Module ranks disagree where equal rank is required (infinite index).
    RankMismatch { sub: usize, sup: usize },
    /// The would-be submodule is not contained in the supermodule.
    NotContained,
    /// A linear map must be invertible to act on a module.
    SingularMap,
    /// An Euler product expansion produced a non-integral coefficient,
    /// which means a local factor was transcribed incorrectly.
    NonIntegralCoefficient { n: u64 },
    /// Requested enumeration exceeds the configured budget.
    BudgetExceeded { requested: u64, limit: u64 },
    /// Malformed textual input (quaternion or rational syntax).
    Parse(String),
}

impl fmt::Display for CslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CslError::ZeroQuaternion => write!(f, "zero quaternion is not a valid parameter"),
            CslError::ZeroArgument => write!(f, "zero argument not allowed here"),
            CslError::ZeroDivisor => write!(f, "division by zero"),
            CslError::NegativeInput => write!(f, "negative input where non-negative required"),
            CslError::NotPrimitive => write!(f, "quaternion is not primitive"),
            CslError::NotAdmissible => write!(f, "parameter is not admissible for this family"),
            CslError::MissingSquareRoot => {
                write!(
                    f,
                    "expected square root does not exist (admissibility inconsistency)"
                )
            }
            CslError::FamilyMismatch => write!(f, "parameter kind does not match family"),
            CslError::NotInRing(s) => write!(f, "not an element of the ring: {s}"),
            CslError::DimensionMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            CslError::RankMismatch { sub, sup } => {
                write!(
                    f,
                    "rank mismatch (infinite index): rank {sub} in rank {sup}"
                )
            }
            CslError::NotContained => {
                write!(f, "module is not contained in the claimed supermodule")
            }
            CslError::SingularMap => write!(f, "linear map is singular"),
            CslError::NonIntegralCoefficient { n } => {
                write!(f, "non-integral Dirichlet coefficient at n = {n}")
            }
            CslError::BudgetExceeded { requested, limit } => {
                write!(
                    f,
                    "enumeration budget exceeded: requested {requested}, limit {limit}"
                )
            }
            CslError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl core::error::Error for CslError {}
