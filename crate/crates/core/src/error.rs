use core::fmt;

/// A requested problem size exceeds the configured limit.
///
/// Raised by index construction, matrix allocation, and partition-matrix
/// building; every entry point that enumerates `2^n` objects or allocates a
/// `2^{n-1}`-square matrix guards its input with one of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeLimit {
    /// What was being sized (e.g. `"n"` or `"matrix dimension"`).
    pub what: &'static str,
    /// The size that was asked for.
    pub requested: usize,
    /// The largest size the call accepts.
    pub limit: usize,
}

impl fmt::Display for SizeLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} exceeds the limit {}",
            self.what, self.requested, self.limit
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SizeLimit {}
