use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HnPair {
    pub c: u64,
    pub p: u64,
}

impl HnPair {
    pub fn new(c: u64, p: u64) -> Self {
        HnPair { c, p }
    }

    pub fn gcd(&self) -> u64 {
        self.c.gcd(&self.p)
    }

    pub fn scaled(&self, k: u64) -> Result<HnPair> {
        Ok(HnPair {
            c: self.c.checked_mul(k).ok_or(Error::Overflow("pair scaling"))?,
            p: self.p.checked_mul(k).ok_or(Error::Overflow("pair scaling"))?,
        })
    }
}

/// Number of subtractive Euclid steps taking `(c, p)` to a pair with a zero.
pub fn steps(c: u64, p: u64) -> u64 {
    let (mut a, mut b) = (c, p);
    let mut n = 0;
    while a > 0 && b > 0 {
        // Batch runs of identical subtractions.
        if a >= b {
            let q = a / b;
            n += q;
            a -= q * b;
        } else {
            let q = b / a;
            n += q;
            b -= q * a;
        }
    }
    n
}

/// Sequence of Hamburger-Noether pairs, written `(15,6)(3,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnSeq(Vec<HnPair>);

impl HnSeq {
    /// Builds a sequence without checking standardness.
    pub fn from_pairs(pairs: Vec<HnPair>) -> Self {
        HnSeq(pairs)
    }

    /// Builds a sequence and checks it is standard.
    pub fn new(pairs: Vec<HnPair>) -> Result<Self> {
        let s = HnSeq(pairs);
        s.validate().map_err(Error::NonStandard)?;
        Ok(s)
    }

    pub fn pairs(&self) -> &[HnPair] {
        &self.0
    }

    pub fn h(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> HnPair {
        self.0[0]
    }

    pub fn last(&self) -> HnPair {
        self.0[self.0.len() - 1]
    }

    /// `c^{(k+1)}` for pair `k` (zero-based), with one after the last pair.
    pub fn scale_of(&self, k: usize) -> u64 {
        self.0.get(k + 1).map_or(1, |q| q.c)
    }

    /// Pairs divided by their gcd.
    pub fn reduced(&self) -> Vec<HnPair> {
        self.0
            .iter()
            .map(|q| {
                let g = q.gcd().max(1);
                HnPair::new(q.c / g, q.p / g)
            })
            .collect()
    }

    /// Total number of vertices of the expansion.
    pub fn components(&self) -> u64 {
        self.0.iter().map(|q| steps(q.c, q.p)).sum()
    }

    /// `Ok(())` when standard, otherwise the first violated condition.
    ///
    /// On top of the gcd chain and `c1 > p1 >= 2`, the reduced pairs must
    /// satisfy `c1/g > p1/g >= 2` and `c_k / c_{k+1} >= 2` for `k >= 2`.
    /// Without these, two sequences can describe the same resolution, e.g.
    /// `(6,2)(2,1)` and `(7,2)`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let h = self.0.len();
        if h == 0 {
            return Err("empty sequence".into());
        }
        for (k, q) in self.0.iter().enumerate() {
            if q.c == 0 || q.p == 0 {
                return Err(format!("pair {} has a zero entry", k + 1));
            }
        }
        for k in 0..h {
            let q = self.0[k];
            let want = self.scale_of(k);
            if q.gcd() != want {
                return Err(if k + 1 == h {
                    format!("gcd({},{})={} != 1", q.c, q.p, q.gcd())
                } else {
                    format!("gcd({},{})={} != c{}={}", q.c, q.p, q.gcd(), k + 2, want)
                });
            }
        }
        for (k, q) in self.0.iter().enumerate().skip(1) {
            if q.c == q.p {
                return Err(format!("pair {} has c = p = {}", k + 1, q.c));
            }
        }
        let q1 = self.0[0];
        if q1.c <= q1.p {
            return Err(format!("c1={} is not greater than p1={}", q1.c, q1.p));
        }
        if q1.p < 2 {
            return Err(format!("p1={} is less than 2", q1.p));
        }
        let g1 = self.scale_of(0);
        if q1.p / g1 < 2 {
            return Err(format!("reduced first pair ({},{}) has p < 2", q1.c / g1, q1.p / g1));
        }
        for k in 1..h {
            let a = self.0[k].c / self.scale_of(k);
            if a < 2 {
                return Err(format!("reduced pair {} has c = 1", k + 1));
            }
        }
        Ok(())
    }

    pub fn is_standard(&self) -> bool {
        self.validate().is_ok()
    }
}

impl fmt::Display for HnSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.0 {
            write!(f, "({},{})", q.c, q.p)?;
        }
        Ok(())
    }
}

/// Parses `(c,p)(c,p)...`; whitespace is ignored. Standardness is not checked.
impl FromStr for HnSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected (c,p)(c,p)..., got {s:?}"));
        let mut rest = t.as_str();
        let mut pairs = Vec::new();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let (inner, tail) = body.split_once(')').ok_or_else(bad)?;
            let (c, p) = inner.split_once(',').ok_or_else(bad)?;
            pairs.push(HnPair::new(c.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?));
            rest = tail;
        }
        if pairs.is_empty() {
            return Err(bad());
        }
        Ok(HnSeq(pairs))
    }
}

impl Serialize for HnSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HnSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
