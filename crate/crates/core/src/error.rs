use num::BigInt;

/// Errors shared across the pipeline.
///
/// The variants mirror the failure modes of the geometry layer (rank and
/// pointedness), the module layer (toric filtration extraction) and the
/// cross-validation layer (local duality bookkeeping).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix must have full rank {expected}, found rank {found}")]
    NotFullRank { expected: usize, found: usize },

    /// The columns do not lie in a single open half-space.  When available,
    /// `counter_certificate` is a nonzero vector u in N^n with A*u = 0.
    #[error("matrix is not pointed{}", counter_note(counter_certificate))]
    NotPointed {
        counter_certificate: Option<Vec<BigInt>>,
    },

    /// An extracted annihilator is graded but not a face ideal; the module
    /// fed to the filtration machinery was not toric.
    #[error("module is not toric: {0}")]
    NotToric(String),

    /// The Ext/duality path and the Ishida oracle disagreed at some degree.
    /// This is the designated tripwire for shift/sign bugs.
    #[error("local duality convention mismatch at {count} degree(s), first at {first}")]
    ConventionMismatch { count: usize, first: String },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// A coherence certificate found an infinite standard-monomial set at
    /// the sample point.
    #[error("quotient is infinite-dimensional at sample for face {face:?}")]
    InfiniteDimensional { face: Vec<usize> },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn counter_note(c: &Option<Vec<BigInt>>) -> String {
    match c {
        Some(u) => format!(
            ": nonzero u >= 0 with A*u = 0, u = ({})",
            u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        ),
        None => String::new(),
    }
}
