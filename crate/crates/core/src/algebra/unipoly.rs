//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Coefficients in ascending degree, no trailing zeros. The zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial c*u^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn var() -> Self {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Order of vanishing at 0; None for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rat::from_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &Rat::from_int(i as i64 + 1));
        }
        UniPoly::new(coeffs)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let sd = match self.degree() {
            Some(sd) if sd >= dd => sd,
            _ => return (UniPoly::zero(), self.clone()),
        };
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + i] -= &t;
                }
                quot[k] = c;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Composition self(g(u)).
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Coefficients reversed: u^deg * self(1/u).
    pub fn reversed(&self) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly::new(coeffs)
    }

    /// All rational roots, with multiplicity, found by the rational root
    /// theorem plus deflation. Returns (roots, nonsplitting cofactor).
    pub fn rational_roots(&self) -> (Vec<(Rat, usize)>, UniPoly) {
        if self.is_zero() {
            return (vec![], UniPoly::zero());
        }
        let mut p = self.clone();
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        // factor out u^k
        if let Some(v) = p.valuation() {
            if v > 0 {
                roots.push((Rat::zero(), v));
                p = UniPoly::new(p.coeffs[v..].to_vec());
            }
        }
        while p.degree().unwrap_or(0) >= 1 {
            let Some(root) = find_rational_root(&p) else {
                break;
            };
            let mut mult = 0;
            let lin = UniPoly::new(vec![-&root, Rat::one()]);
            loop {
                let (q, r) = p.div_rem(&lin);
                if r.is_zero() {
                    p = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            roots.push((root, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, p)
    }

    /// Clear denominators: returns integer coefficient list and the common
    /// denominator d such that d * self has the listed integer coefficients.
    pub fn to_integer_coeffs(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }
}

/// One rational root of p, if any.
fn find_rational_root(p: &UniPoly) -> Option<Rat> {
    let (ints, _) = p.to_integer_coeffs();
    let a0 = ints.iter().find(|c| !c.is_zero())?.clone();
    let an = ints.last()?.clone();
    // candidates +-(divisor of a0)/(divisor of an)
    let num_divs = small_divisors(&a0.abs());
    let den_divs = small_divisors(&an.abs());
    for n in &num_divs {
        for d in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rat::from_big(n * BigInt::from(sign), d.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Divisors of |n|, complete when |n| factors over small primes; falls back
/// to trial division up to a bound (inputs here are tiny by construction).
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut n = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut m = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            m += 1;
        }
        if m > 0 {
            factors.push((d.clone(), m));
        }
        d += 1;
        if d > BigInt::from(1_000_000) {
            break;
        }
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, m) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=m {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "u")?;
                } else {
                    write!(f, "u^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn div_rem_exact_and_remainder() {
        let a = p(&[-1, 0, 0, 0, 1]); // u^4 - 1
        let d = p(&[-1, 1]); // u - 1
        let (q, r) = a.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1, 1, 1]));

        let (q2, r2) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q2, p(&[-1, 1]));
        assert_eq!(r2, p(&[2]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // u^2 (u-1)^2 (2u+3)
        let f = &(&p(&[0, 0, 1]) * &p(&[1, -2, 1])) * &p(&[3, 2]);
        let (roots, rest) = f.rational_roots();
        assert_eq!(
            roots,
            vec![
                (Rat::from_frac(-3, 2), 1),
                (Rat::zero(), 2),
                (Rat::one(), 2)
            ]
        );
        assert_eq!(rest.degree(), Some(0));

        let (roots, rest) = p(&[1, 0, 1]).rational_roots(); // u^2 + 1
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn composition() {
        // (u+1)^2 at u^2: u^4 + 2u^2 + 1
        let f = p(&[1, 2, 1]);
        let g = p(&[0, 0, 1]);
        assert_eq!(f.compose(&g), p(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "u^2 - 2*u + 1");
        assert_eq!(p(&[0]).to_string(), "0");
    }
}
