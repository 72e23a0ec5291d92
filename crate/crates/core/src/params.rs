//! Parameter bundles for second-order recurrences.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Signature `(r, s)` of `H(n) = r·H(n-1) + s·H(n-2)`.
///
/// Only `s ≠ 0` is enforced here: the signature of a section, `r′ = SUM(r,s;m)`,
/// can vanish even when `r` does not (e.g. `(r,s) = (2,-2)`, `m = 2`).
/// User-facing specs go through [`HoradamSpec::new`], which also rejects `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    r: BigInt,
    s: BigInt,
}

impl Signature {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let s = s.into();
        if s.is_zero() {
            return Err(Error::ZeroParameter("s"));
        }
        Ok(Self { r: r.into(), s })
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// `−s`, the determinant of the transfer matrix `[[r, s], [1, 0]]`.
    pub fn neg_s(&self) -> BigInt {
        -&self.s
    }

    /// `r² + 4s`.
    pub fn discriminant(&self) -> BigInt {
        &self.r * &self.r + BigInt::from(4) * &self.s
    }
}

/// `H(p,q;r,s;·)`: seeds `H(0) = p`, `H(1) = q` and signature `(r, s)` with
/// `r, s ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoradamSpec {
    p: BigInt,
    q: BigInt,
    sig: Signature,
}

impl HoradamSpec {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self> {
        let r = r.into();
        if r.is_zero() {
            return Err(Error::ZeroParameter("r"));
        }
        Ok(Self { p: p.into(), q: q.into(), sig: Signature::new(r, s)? })
    }

    /// Seeds over an already validated signature; `r = 0` is allowed here.
    pub fn with_signature(p: impl Into<BigInt>, q: impl Into<BigInt>, sig: Signature) -> Self {
        Self { p: p.into(), q: q.into(), sig }
    }

    /// `H01(r,s;·)`, seeds `(0, 1)`.
    pub fn fundamental(sig: Signature) -> Self {
        Self::with_signature(0, 1, sig)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        self.sig.r()
    }

    pub fn s(&self) -> &BigInt {
        self.sig.s()
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }
}
