use std::fmt;

/// One failed condition, with where it failed and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<C> {
    pub condition: C,
    pub location: String,
    pub detail: String,
}

/// Outcome of a structural check. Invalid input is a result, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation<C> {
    pub violations: Vec<Violation<C>>,
}

impl<C> Default for Validation<C> {
    fn default() -> Self {
        Self {
            violations: Vec::new(),
        }
    }
}

impl<C> Validation<C> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(
        &mut self,
        condition: C,
        location: impl Into<String>,
        detail: impl Into<String>,
    ) {
        self.violations.push(Violation {
            condition,
            location: location.into(),
            detail: detail.into(),
        });
    }

    pub fn has(&self, condition: C) -> bool
    where
        C: PartialEq,
    {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

impl<C: fmt::Display> fmt::Display for Violation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {}",
            self.condition, self.location, self.detail
        )
    }
}

impl<C: fmt::Display> fmt::Display for Validation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        Ok(())
    }
}
