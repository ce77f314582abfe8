use crate::error::GridError;
use serde::{Deserialize, Serialize};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parameters of the ambient lens space L(p, q).
///
/// `p >= 1` and `q` is normalized into `[0, p)`; S^1 x S^2 (p = 0) is
/// excluded, and p = 1 (the three-sphere) forces q = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LensParams {
    p: u64,
    q: u64,
}

impl LensParams {
    pub fn new(p: u64, q: u64) -> Result<LensParams, GridError> {
        if p == 0 {
            return Err(GridError::RangeViolation("p must be >= 1".into()));
        }
        if q >= p {
            return Err(GridError::RangeViolation(format!(
                "q must lie in [0, p), got q={q} with p={p}"
            )));
        }
        if p > 1 && gcd(p, q) != 1 {
            return Err(GridError::GcdViolation { p, q });
        }
        Ok(LensParams { p, q })
    }

    /// Accepts any integer q and reduces it mod p before validating.
    pub fn new_normalized(p: u64, q: i64) -> Result<LensParams, GridError> {
        if p == 0 {
            return Err(GridError::RangeViolation("p must be >= 1".into()));
        }
        let q = q.rem_euclid(p as i64) as u64;
        LensParams::new(p, q)
    }

    pub fn s3() -> LensParams {
        LensParams { p: 1, q: 0 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The parameter q* of the dual diagram's lens space: q q* = -1 mod p.
    pub fn dual_q(&self) -> u64 {
        if self.p == 1 {
            return 0;
        }
        let neg_inv = mod_inverse(self.q, self.p).expect("q invertible mod p");
        (self.p - neg_inv) % self.p
    }

    pub fn dual(&self) -> LensParams {
        LensParams {
            p: self.p,
            q: self.dual_q(),
        }
    }
}

/// Multiplicative inverse of a mod m, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i64) as u64)
}
