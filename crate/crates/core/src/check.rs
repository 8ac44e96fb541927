use std::fmt;

/// Why a check failed: the first counterexample, rendered for a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness(pub String);

impl Witness {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `Ok(())` when the property holds.
pub type Check = std::result::Result<(), Witness>;

/// Fails with `msg` unless `cond` holds.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Witness(msg()))
    }
}
