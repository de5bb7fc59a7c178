//! Truncated univariate power series over the rationals.
//!
//! A series of order bound N stores the coefficients c_0..c_{N-1}; no
//! operation reports coefficients at or beyond the bound. Truncation orders
//! are always explicit.

use crate::error::Error;
use crate::Result;

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<Rat>, // length = order bound
}

impl TruncSeries {
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order, Rat::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rat::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if order > 0 {
            s.coeffs[0] = Rat::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncSeries::new(self.coeffs[..order.min(self.coeffs.len())].to_vec(), order)
    }

    pub fn add(&self, other: &TruncSeries) -> Self {
        let n = self.order().min(other.order());
        TruncSeries::new(
            (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
            n,
        )
    }

    pub fn sub(&self, other: &TruncSeries) -> Self {
        let n = self.order().min(other.order());
        TruncSeries::new(
            (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
            n,
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiply by t^k, shifting coefficients up (top ones fall off).
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n];
        for i in 0..n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 || self.coeffs[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c0_inv = self.coeffs[0].recip();
        let mut inv = vec![Rat::zero(); n];
        inv[0] = c0_inv.clone();
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                let t = &self.coeffs[j] * &inv[k - j];
                acc += &t;
            }
            inv[k] = -&(&acc * &c0_inv);
        }
        Ok(TruncSeries { coeffs: inv })
    }

    pub fn div(&self, other: &TruncSeries) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(TruncSeries::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitLog(self.coeffs[0].to_string()));
        }
        // e' = s' e  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
        let mut e = vec![Rat::zero(); n];
        e[0] = Rat::one();
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                let t = &(&self.coeffs[j] * &Rat::from_int(j as i64)) * &e[k - j];
                acc += &t;
            }
            e[k] = &acc / &Rat::from_int(k as i64);
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// log of a series with constant term 1; the inverse of `exp` up to the
    /// order bound. A zero constant term is an error.
    pub fn log(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(TruncSeries::zero(0));
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnitLog("0".into()));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitLog(self.coeffs[0].to_string()));
        }
        // l' = s'/s  =>  k s_0 l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}
        let mut l = vec![Rat::zero(); n];
        for k in 1..n {
            let mut acc = &self.coeffs[k] * &Rat::from_int(k as i64);
            for j in 1..k {
                let t = &(&l[j] * &Rat::from_int(j as i64)) * &self.coeffs[k - j];
                acc -= &t;
            }
            l[k] = &acc / &Rat::from_int(k as i64);
        }
        Ok(TruncSeries { coeffs: l })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64], n: usize) -> TruncSeries {
        TruncSeries::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect(), n)
    }

    #[test]
    fn log_of_one_is_zero() {
        let one = TruncSeries::one(5);
        assert!(one.log().unwrap().is_zero());
    }

    #[test]
    fn mercator() {
        // log(1+t) to order 3: t - t^2/2
        let l = s(&[1, 1], 3).log().unwrap();
        assert_eq!(l.coeff(0), Rat::zero());
        assert_eq!(l.coeff(1), Rat::one());
        assert_eq!(l.coeff(2), Rat::from_frac(-1, 2));
    }

    #[test]
    fn log_rejects_non_unit() {
        assert!(matches!(
            s(&[0, 1], 3).log().unwrap_err(),
            Error::NonUnitLog(_)
        ));
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = TruncSeries::new(
            vec![
                Rat::zero(),
                Rat::from_frac(2, 3),
                Rat::from_int(-1),
                Rat::from_frac(5, 7),
                Rat::from_int(4),
            ],
            8,
        );
        assert_eq!(f.exp().unwrap().log().unwrap(), f.truncate(8));
        let g = TruncSeries::new(
            vec![Rat::one(), Rat::from_frac(-3, 5), Rat::from_int(2)],
            8,
        );
        assert_eq!(g.log().unwrap().exp().unwrap(), g.truncate(8));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = s(&[2, 1, -3, 5], 6);
        let inv = f.inverse().unwrap();
        let mut expect = TruncSeries::one(6);
        expect = expect.truncate(6);
        assert_eq!(f.mul(&inv), expect);
    }
}
