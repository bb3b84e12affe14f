use thiserror::Error;

/// Errors from constructing or manipulating lattice data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("d + a0 + b0 + c0 = {} is not divisible by 3 (d={d}, a0={a0}, b0={b0}, c0={c0})",
            d + a0 + b0 + c0)]
    Congruence { d: i64, a0: i64, b0: i64, c0: i64 },

    #[error("torsion bits must be 0 or 1")]
    TorsionBit,

    #[error("coordinate out of range: |{value}| > {limit}")]
    OutOfRange { value: i64, limit: i64 },

    #[error("mod-2 sample matrix has rank {rank}, expected 10")]
    TorsionChangeRank { rank: usize },

    #[error("mod-2 sample system is inconsistent; Table 1 transcription error")]
    TorsionChangeInconsistent,

    #[error("derived formula for {target} disagrees with the closed form")]
    TorsionChangeMismatch { target: &'static str },
}

/// Errors from Ext-dimension assembly and reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    #[error("inconsistent Ext dimensions for pair ({i},{j}): hom - ext1 + ext2 = {lhs} but chi = {chi}")]
    ChiMismatch { i: usize, j: usize, lhs: i64, chi: i64 },

    #[error("algebra report requires a fully resolved table with zero off-diagonal hom and zero ext1")]
    TableNotFormal,

    #[error("negative cohomology dimension computed for {context}; model bug")]
    NegativeDimension { context: String },
}
