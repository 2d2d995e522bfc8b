use std::fmt;

use serde::Serialize;

/// The first index at which an identity failed, with both sides rendered as
/// exact decimal (or fraction) strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: u64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over an inclusive index range.
///
/// `passed()` is true exactly when no failure was recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    identity: String,
    from: u64,
    to: u64,
    first_failure: Option<Failure>,
    value: Option<String>,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, from: u64, to: u64) -> Self {
        Self {
            identity: identity.into(),
            from,
            to,
            first_failure: None,
            value: None,
        }
    }

    pub fn fail(identity: impl Into<String>, from: u64, to: u64, failure: Failure) -> Self {
        Self {
            identity: identity.into(),
            from,
            to,
            first_failure: Some(failure),
            value: None,
        }
    }

    /// Checks `lhs(i) == rhs(i)` for every `i` in `from..=to`, stopping at the
    /// first mismatch.
    pub fn check_range<T, F>(identity: impl Into<String>, from: u64, to: u64, mut sides: F) -> Self
    where
        T: PartialEq + fmt::Display,
        F: FnMut(u64) -> (T, T),
    {
        let identity = identity.into();
        for i in from..=to {
            let (lhs, rhs) = sides(i);
            if lhs != rhs {
                return Self::fail(
                    identity,
                    from,
                    to,
                    Failure {
                        index: i,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    },
                );
            }
        }
        Self::pass(identity, from, to)
    }

    /// Attaches a summary value (a common count, a list of counts, ...).
    pub fn with_value(mut self, value: impl Into<String>) -> Self {
        self.value = Some(value.into());
        self
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn range(&self) -> (u64, u64) {
        (self.from, self.to)
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.first_failure.as_ref()
    }

    pub fn value(&self) -> Option<&str> {
        self.value.as_deref()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}..={}]: ", self.identity, self.from, self.to)?;
        match &self.first_failure {
            None => write!(f, "pass")?,
            Some(fl) => write!(f, "FAIL at {} ({} != {})", fl.index, fl.lhs, fl.rhs)?,
        }
        if let Some(v) = &self.value {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}
