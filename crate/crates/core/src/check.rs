//! Falsification events.
//!
//! Several operations re-verify a known theorem on the instance at hand
//! (V turns products into unions, adjoints of morphisms send primes to
//! primes, the six hyperabelian conditions agree, ...). A failure is not a
//! user error: it means the implementation is wrong somewhere. Those failures
//! are collected as [`Falsification`] values rather than panics so that a
//! report can still be produced and the CLI can signal them by exit status.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Falsification {
    /// Short identifier of the property that failed, e.g. `"V(xy)=V(x)∪V(y)"`.
    pub property: String,
    /// Human-readable witness.
    pub witness: String,
}

impl Falsification {
    pub fn new(property: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            property: property.into(),
            witness: witness.into(),
        }
    }
}

/// Accumulator used by checking routines.
#[derive(Debug, Default, Clone)]
pub struct Findings(pub Vec<Falsification>);

impl Findings {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a falsification if `ok` is false. Returns `ok`.
    pub fn require(&mut self, ok: bool, property: &str, witness: impl FnOnce() -> String) -> bool {
        if !ok {
            self.0.push(Falsification::new(property, witness()));
        }
        ok
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Falsification> {
        self.0
    }
}
