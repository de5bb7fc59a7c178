//! Univariate rational functions over the rationals, partial-fraction
//! decomposition at rational poles, and term-by-term antiderivatives.

use std::fmt;

use crate::error::Error;
use crate::Result;

use super::rat::Rat;
use super::series::TruncSeries;
use super::unipoly::UniPoly;

/// num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

/// Principal part at one pole: coefficients c_k of (u-a)^(-k), k = 1..=order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoleBlock {
    pub location: Rat,
    /// terms[k-1] = coefficient of (u - location)^(-k)
    pub terms: Vec<Rat>,
}

impl PoleBlock {
    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of (u-a)^(-1), the residue.
    pub fn residue(&self) -> Rat {
        self.terms.first().cloned().unwrap_or_else(Rat::zero)
    }
}

/// Polynomial part plus principal parts; re-sums exactly to the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractions {
    pub poly: UniPoly,
    pub poles: Vec<PoleBlock>,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading();
        Ok(RationalFunction {
            num: num.scale(&lead.recip()),
            den: den.monic(),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFunction::new(num, &self.den * &other.den).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den).unwrap()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RationalFunction::from_poly(UniPoly::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate; None at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) / &d)
    }

    /// Substitute u -> g(u) for a rational function g = A/B:
    /// clear denominators with the common factor B^m, m = max degree.
    pub fn compose(&self, g: &RationalFunction) -> Self {
        let m = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let mut b_pows = Vec::with_capacity(m + 1);
        b_pows.push(UniPoly::one());
        for k in 0..m {
            b_pows.push(&b_pows[k] * &g.den);
        }
        let clear = |p: &UniPoly| {
            let mut acc = UniPoly::zero();
            let mut a_pow = UniPoly::one();
            for k in 0..=m {
                let c = p.coeff(k);
                if !c.is_zero() {
                    acc = &acc + &(&a_pow.scale(&c) * &b_pows[m - k]);
                }
                if k < m {
                    a_pow = &a_pow * &g.num;
                }
            }
            acc
        };
        RationalFunction::new(clear(&self.num), clear(&self.den)).unwrap()
    }

    /// Order of vanishing at a finite point (negative = pole order).
    pub fn order_at(&self, a: &Rat) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let lin = UniPoly::new(vec![-a, Rat::one()]);
        let mut ord: i64 = 0;
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let (q, r) = num.div_rem(&lin);
            if r.is_zero() {
                num = q;
                ord += 1;
            } else {
                break;
            }
        }
        loop {
            let (q, r) = den.div_rem(&lin);
            if r.is_zero() {
                den = q;
                ord -= 1;
            } else {
                break;
            }
        }
        Some(ord)
    }

    /// Order of vanishing at infinity: deg den - deg num.
    pub fn order_at_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64)
    }

    /// Taylor expansion at 0 to the given order; requires den(0) != 0.
    pub fn taylor_at_zero(&self, order: usize) -> Result<TruncSeries> {
        if self.den.eval(&Rat::zero()).is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = TruncSeries::new(self.num.coeffs().to_vec(), order);
        let den = TruncSeries::new(self.den.coeffs().to_vec(), order);
        num.div(&den)
    }

    /// Laurent expansion at the finite point a: returns (valuation v,
    /// coefficients of (u-a)^(v+i)). `order` counts coefficients reported.
    pub fn laurent_at(&self, a: &Rat, order: usize) -> (i64, TruncSeries) {
        assert!(!self.is_zero());
        let shift = UniPoly::new(vec![a.clone(), Rat::one()]); // u + a
        let num = self.num.compose(&shift);
        let den = self.den.compose(&shift);
        laurent_of_quotient(&num, &den, order)
    }

    /// Laurent expansion at infinity in the local parameter v = 1/u:
    /// returns (valuation v0, coefficients of v^(v0+i)).
    pub fn laurent_at_infinity(&self, order: usize) -> (i64, TruncSeries) {
        assert!(!self.is_zero());
        // f(1/v) = v^(deg den - deg num) * rev(num)(v)/rev(den)(v)
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        let (v0, ser) = laurent_of_quotient(&self.num.reversed(), &self.den.reversed(), order);
        (v0 + dd - dn, ser)
    }

    /// Partial fraction decomposition over the rationals.
    /// Every denominator factor must split over Q.
    pub fn partial_fractions(&self) -> Result<PartialFractions> {
        let (poly, rest) = self.num.div_rem(&self.den);
        let (roots, cofactor) = self.den.rational_roots();
        if cofactor.degree().unwrap_or(0) > 0 {
            return Err(Error::IrrationalFactor(cofactor.to_string()));
        }
        let mut poles = Vec::new();
        for (a, k) in roots {
            // principal part at a: expand rest/(den/(u-a)^k) around a to
            // order k-1, read off coefficients.
            let lin = UniPoly::new(vec![-&a, Rat::one()]);
            let mut reduced = self.den.clone();
            for _ in 0..k {
                reduced = reduced.div_rem(&lin).0;
            }
            let shift = UniPoly::new(vec![a.clone(), Rat::one()]);
            let num_s = rest.compose(&shift);
            let den_s = reduced.compose(&shift);
            let series = TruncSeries::new(num_s.coeffs().to_vec(), k)
                .div(&TruncSeries::new(den_s.coeffs().to_vec(), k))?;
            // series coefficient of s^j is the coefficient of (u-a)^(j-k)
            let terms: Vec<Rat> = (0..k).map(|j| series.coeff(k - 1 - j)).collect();
            let mut terms = terms;
            while terms.last().is_some_and(Rat::is_zero) {
                terms.pop();
            }
            if !terms.is_empty() {
                poles.push(PoleBlock { location: a, terms });
            }
        }
        Ok(PartialFractions { poly, poles })
    }

    /// Term-by-term antiderivative. Requires every residue to vanish;
    /// a simple pole is a logarithmic term and is rejected.
    pub fn antiderivative(&self) -> Result<Antiderivative> {
        let pfd = self.partial_fractions()?;
        let mut terms = Vec::new();
        for block in &pfd.poles {
            if !block.residue().is_zero() {
                return Err(Error::LogarithmicIntegral(block.location.to_string()));
            }
            for (i, c) in block.terms.iter().enumerate() {
                let k = i + 1;
                if k == 1 || c.is_zero() {
                    continue;
                }
                // integral of c (u-a)^(-k) = -c/(k-1) (u-a)^(-(k-1))
                terms.push((
                    block.location.clone(),
                    (k - 1) as u32,
                    -&(c / &Rat::from_int((k - 1) as i64)),
                ));
            }
        }
        Ok(Antiderivative {
            poly: pfd.poly.integral(),
            terms,
        })
    }
}

/// Laurent expansion of num/den at 0: (valuation, series of that length).
fn laurent_of_quotient(num: &UniPoly, den: &UniPoly, order: usize) -> (i64, TruncSeries) {
    let vn = num.valuation().expect("zero numerator") as i64;
    let vd = den.valuation().expect("zero denominator") as i64;
    let num_shift = UniPoly::new(num.coeffs()[vn as usize..].to_vec());
    let den_shift = UniPoly::new(den.coeffs()[vd as usize..].to_vec());
    let ser = TruncSeries::new(num_shift.coeffs().to_vec(), order)
        .div(&TruncSeries::new(den_shift.coeffs().to_vec(), order))
        .expect("unit constant after valuation shift");
    (vn - vd, ser)
}

impl PartialFractions {
    /// Re-sum to a rational function (round-trip check).
    pub fn resum(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_poly(self.poly.clone());
        for block in &self.poles {
            let lin = UniPoly::new(vec![-&block.location, Rat::one()]);
            for (i, c) in block.terms.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut den = UniPoly::one();
                for _ in 0..=i {
                    den = &den * &lin;
                }
                acc = acc.add(&RationalFunction::new(UniPoly::constant(c.clone()), den).unwrap());
            }
        }
        acc
    }
}

/// Antiderivative of a residue-free rational function: a polynomial plus
/// terms c/(u-a)^k, normalized so the value at the base point can be taken
/// exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Antiderivative {
    pub poly: UniPoly,
    /// (pole location a, exponent k >= 1, coefficient c) for c (u-a)^(-k)
    pub terms: Vec<(Rat, u32, Rat)>,
}

impl Antiderivative {
    /// Evaluate; None at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let mut acc = self.poly.eval(x);
        for (a, k, c) in &self.terms {
            let d = x - a;
            if d.is_zero() {
                return None;
            }
            acc += &(c * &d.pow(*k).recip());
        }
        Some(acc)
    }

    /// As a single rational function.
    pub fn to_rational_function(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_poly(self.poly.clone());
        for (a, k, c) in &self.terms {
            let lin = UniPoly::new(vec![-a, Rat::one()]);
            let mut den = UniPoly::one();
            for _ in 0..*k {
                den = &den * &lin;
            }
            acc = acc.add(&RationalFunction::new(UniPoly::constant(c.clone()), den).unwrap());
        }
        acc
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn pfd_two_simple_poles() {
        // 1/(u^2 - u) = 1/(u-1) - 1/u
        let f = rf(&[1], &[0, -1, 1]);
        let pfd = f.partial_fractions().unwrap();
        assert!(pfd.poly.is_zero());
        assert_eq!(pfd.poles.len(), 2);
        assert_eq!(pfd.poles[0].location, Rat::zero());
        assert_eq!(pfd.poles[0].terms, vec![Rat::from_int(-1)]);
        assert_eq!(pfd.poles[1].location, Rat::one());
        assert_eq!(pfd.poles[1].terms, vec![Rat::one()]);
        assert_eq!(pfd.resum(), f);
    }

    #[test]
    fn pfd_polynomial_input() {
        let f = rf(&[1, 2, 3], &[1]);
        let pfd = f.partial_fractions().unwrap();
        assert_eq!(pfd.poly, poly(&[1, 2, 3]));
        assert!(pfd.poles.is_empty());
    }

    #[test]
    fn pfd_double_pole_no_residue() {
        // 1/(1-u)^2: pole at 1, order 2, no residue term
        let f = rf(&[1], &[1, -2, 1]);
        let pfd = f.partial_fractions().unwrap();
        assert_eq!(pfd.poles.len(), 1);
        assert_eq!(pfd.poles[0].location, Rat::one());
        assert_eq!(pfd.poles[0].terms, vec![Rat::zero(), Rat::one()]);
        assert!(pfd.poles[0].residue().is_zero());
        assert_eq!(pfd.resum(), f);
    }

    #[test]
    fn pfd_rejects_irrational_poles() {
        let f = rf(&[1], &[1, 0, 1]); // 1/(u^2+1)
        assert!(matches!(
            f.partial_fractions().unwrap_err(),
            Error::IrrationalFactor(_)
        ));
    }

    #[test]
    fn antiderivative_terms() {
        // (1-u)^{-2} integrates to (u-1)^{-1} * (-1) * (-1) = 1/(1-u) ... check
        let f = rf(&[1], &[1, -2, 1]);
        let anti = f.antiderivative().unwrap();
        assert!(anti.poly.is_zero());
        assert_eq!(anti.terms, vec![(Rat::one(), 1, Rat::from_int(-1))]);
        // value at 0: -1/(0-1) = 1; F(u)-F(0) at u=1/2: -1/(1/2-1) - 1 = 2-1 = 1
        let at0 = anti.eval(&Rat::zero()).unwrap();
        assert_eq!(at0, Rat::one());
        let at_half = anti.eval(&Rat::from_frac(1, 2)).unwrap();
        assert_eq!(&at_half - &at0, Rat::one());
    }

    #[test]
    fn antiderivative_rejects_simple_pole() {
        let f = rf(&[1], &[0, 1]); // 1/u
        assert!(matches!(
            f.antiderivative().unwrap_err(),
            Error::LogarithmicIntegral(_)
        ));
    }

    #[test]
    fn laurent_expansions() {
        // (1-u)^{-2} at infinity: v^2 (1 + ...) in v = 1/u
        let f = rf(&[1], &[1, -2, 1]);
        let (v0, ser) = f.laurent_at_infinity(3);
        assert_eq!(v0, 2);
        assert_eq!(ser.coeff(0), Rat::one());
        // at u=1: (u-1)^{-2}
        let (w0, ser1) = f.laurent_at(&Rat::one(), 2);
        assert_eq!(w0, -2);
        assert_eq!(ser1.coeff(0), Rat::one());
        assert_eq!(ser1.coeff(1), Rat::zero());
    }

    #[test]
    fn orders() {
        let f = rf(&[0, 0, 3, 1], &[1, 1]); // (3u^2+u^3)/(u+1)
        assert_eq!(f.order_at(&Rat::zero()), Some(2));
        assert_eq!(f.order_at(&Rat::from_int(-1)), Some(-1));
        assert_eq!(f.order_at_infinity(), Some(-2));
    }

    #[test]
    fn composition_of_quotients() {
        // f = u^2/(u+1), g = 1/u: f(g) = (1/u^2)/((1+u)/u) = 1/(u(1+u))
        let f = rf(&[0, 0, 1], &[1, 1]);
        let g = rf(&[1], &[0, 1]);
        let h = f.compose(&g);
        assert_eq!(h, rf(&[1], &[0, 1, 1]));
    }
}
