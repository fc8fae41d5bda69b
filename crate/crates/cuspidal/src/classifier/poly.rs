//! Sparse multivariate polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Variable names with positive exponents, sorted by name.
pub type Monomial = Vec<(String, u32)>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<String, u32> = a.iter().cloned().collect();
    for (v, e) in b {
        *m.entry(v.clone()).or_insert(0) += e;
    }
    m.into_iter().collect()
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c.into());
        p
    }

    pub fn var(name: &str) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(name.to_string(), 1)], BigInt::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[(&str, u32)]) -> BigInt {
        let key: Monomial = {
            let mut k: Vec<(String, u32)> = m.iter().filter(|(_, e)| *e > 0).map(|(v, e)| (v.to_string(), *e)).collect();
            k.sort();
            k
        };
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self.terms.keys().flatten().map(|(n, _)| n.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(mono_mul(a, b), x * y);
            }
        }
        p
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Substitutes a polynomial for every variable.
    pub fn compose(&self, subst: &BTreeMap<String, IntPolynomial>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (v, e) in m {
                let s = subst.get(v).ok_or_else(|| Error::MissingVariable(v.clone()))?;
                t = t.mul(&s.pow(*e));
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn derivative(&self, var: &str) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            if let Some(i) = m.iter().position(|(v, _)| v == var) {
                let e = m[i].1;
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(i);
                } else {
                    m2[i].1 = e - 1;
                }
                p.add_term(m2, c * BigInt::from(e));
            }
        }
        p
    }

    pub fn evaluate(&self, at: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let x = at.get(v).ok_or_else(|| Error::MissingVariable(v.clone()))?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            total += t;
        }
        Ok(total)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || m.is_empty() {
                parts.push(a.to_string());
            }
            for (v, e) in m {
                parts.push(if *e == 1 { v.clone() } else { format!("{v}^{e}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Accepts sums of terms such as `27 x^5 - 2x^2y^3 + 3*s*t`. Variables
/// are a letter followed by digits; juxtaposition, spaces and `*`
/// multiply.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in polynomial {s:?}"));
        let cs: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cs.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = IntPolynomial::zero();
        let mut i = 0;
        let number = |i: &mut usize| -> Option<String> {
            let st = *i;
            while *i < cs.len() && cs[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > st).then(|| cs[st..*i].iter().collect())
        };
        while i < cs.len() {
            let mut sign = BigInt::one();
            if cs[i] == '+' || cs[i] == '-' {
                if cs[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected + or -"));
            }
            let mut coef = match number(&mut i) {
                Some(n) => n.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                None => BigInt::one(),
            };
            coef *= sign;
            let mut mono: Monomial = Vec::new();
            let mut any = false;
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                let mut name = cs[i].to_string();
                i += 1;
                if let Some(d) = number(&mut i) {
                    name.push_str(&d);
                }
                let mut e = 1;
                if i < cs.len() && cs[i] == '^' {
                    i += 1;
                    e = number(&mut i).ok_or_else(|| bad("missing exponent"))?.parse().map_err(|_| bad("bad exponent"))?;
                }
                mono = mono_mul(&mono, &vec![(name, e)]);
                any = true;
            }
            if !any && i < cs.len() && cs[i] != '+' && cs[i] != '-' {
                return Err(bad("unexpected character"));
            }
            mono.retain(|(_, e)| *e > 0);
            out.add_term(mono, coef);
        }
        Ok(out)
    }
}

pub const QUINTIC: &str = "27 x^5 + 18 x^3 y z - 2 x^2 y^3 - x^2 z^3 + 2 x y^2 z^2 - y^4 z";
pub const QUINTIC_PARAMETRIZATION: [&str; 3] = ["s^4 t", "s^2 t^3 - s^5", "t^5 + 2 s^3 t^2"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticCheck {
    /// `F(phi(s,t))`, expected to be zero.
    pub composed: IntPolynomial,
    /// `phi(0,1)`.
    pub point: [BigInt; 3],
    pub value: BigInt,
    pub gradient: [BigInt; 3],
}

impl QuinticCheck {
    pub fn holds(&self) -> bool {
        self.composed.is_zero() && self.value.is_zero() && self.gradient.iter().all(Zero::is_zero)
    }
}

/// Checks that `phi` parametrizes `F = 0` and that `phi([0:1])` is singular.
pub fn check_parametrization(f: &IntPolynomial, phi: &[IntPolynomial; 3]) -> Result<QuinticCheck> {
    let names = ["x", "y", "z"];
    let subst: BTreeMap<String, IntPolynomial> = names.iter().map(|n| n.to_string()).zip(phi.iter().cloned()).collect();
    let composed = f.compose(&subst)?;
    let st: BTreeMap<String, BigInt> = [("s".to_string(), BigInt::zero()), ("t".to_string(), BigInt::one())].into();
    let point = [phi[0].evaluate(&st)?, phi[1].evaluate(&st)?, phi[2].evaluate(&st)?];
    let at: BTreeMap<String, BigInt> = names.iter().map(|n| n.to_string()).zip(point.iter().cloned()).collect();
    let value = f.evaluate(&at)?;
    let gradient = [
        f.derivative("x").evaluate(&at)?,
        f.derivative("y").evaluate(&at)?,
        f.derivative("z").evaluate(&at)?,
    ];
    Ok(QuinticCheck { composed, point, value, gradient })
}

fn parametrization() -> [IntPolynomial; 3] {
    QUINTIC_PARAMETRIZATION.map(|s| s.parse().expect("built-in polynomial"))
}

pub fn quintic() -> IntPolynomial {
    QUINTIC.parse().expect("built-in polynomial")
}

pub fn verify_quintic() -> bool {
    check_parametrization(&quintic(), &parametrization()).is_ok_and(|c| c.holds())
}

/// Same check with the leading coefficient 27 replaced by 28.
pub fn verify_perturbed_quintic() -> bool {
    let f = quintic().add(&IntPolynomial::var("x").pow(5));
    check_parametrization(&f, &parametrization()).is_ok_and(|c| c.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let subst: BTreeMap<String, IntPolynomial> = [("x".to_string(), p("s + t"))].into();
        assert_eq!(p("x^2").compose(&subst).unwrap(), p("s^2 + 2st + t^2"));
        let zero: BTreeMap<String, IntPolynomial> = [("x".to_string(), IntPolynomial::zero())].into();
        assert!(p("x").compose(&zero).unwrap().is_zero());
        assert!(matches!(p("y").compose(&zero), Err(Error::MissingVariable(_))));
        assert_eq!(p("3x^2y - y").derivative("y"), p("3x^2 - 1"));
        assert_eq!(p("x2*x2 - 1").to_string(), "-1 + x2^2");
        assert!("x ) y".parse::<IntPolynomial>().is_err());
        assert!("2x^".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn quintic_identity() {
        assert!(verify_quintic());
        assert!(!verify_perturbed_quintic());
        let c = check_parametrization(&quintic(), &parametrization()).unwrap();
        assert_eq!(c.point, [BigInt::zero(), BigInt::zero(), BigInt::one()]);
        assert!(c.gradient.iter().all(Zero::is_zero));
        assert_eq!(quintic().coefficient(&[("x", 5)]), BigInt::from(27));
    }
}
