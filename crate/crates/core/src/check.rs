//! Outcome of an identity sweep: how many cases ran and the first failure.

use std::fmt;

/// First failing case of a check. Unused coordinates are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: Option<i64>,
    pub l: Option<i64>,
    /// Index of the first differing coefficient, for polynomial identities.
    pub coefficient: Option<usize>,
    pub detail: String,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>) -> Self {
        Self { n: None, l: None, coefficient: None, detail: detail.into() }
    }

    pub fn at_n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn at_l(mut self, l: i64) -> Self {
        self.l = Some(l);
        self
    }

    pub fn at_coefficient(mut self, i: usize) -> Self {
        self.coefficient = Some(i);
        self
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.n {
            write!(f, "n={n} ")?;
        }
        if let Some(l) = self.l {
            write!(f, "l={l} ")?;
        }
        if let Some(i) = self.coefficient {
            write!(f, "coeff={i} ")?;
        }
        f.write_str(&self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failure: Option<Counterexample>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), cases: 0, failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records one case; keeps only the first failure.
    pub fn record(&mut self, outcome: Result<(), Counterexample>) {
        self.cases += 1;
        if let Err(c) = outcome {
            if self.failure.is_none() {
                self.failure = Some(c);
            }
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "{}: FAIL after {} cases: {c}", self.name, self.cases),
        }
    }
}
