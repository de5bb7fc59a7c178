//! Sparse multivariate polynomials over the rationals, with a per-variable
//! positive integer weight attached to the ring.
//!
//! The default ring `x` carries wt(x_i) = i, matching the grading in which
//! every Schur-Weierstrass polynomial is homogeneous. Serialization orders
//! monomials by (weighted degree descending, exponent vector ascending
//! lexicographically); this ordering is the stable contract used by golden
//! tests.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;



use crate::error::Error;
use crate::Result;

use super::rat::Rat;

/// Ordered variables with weights. Shared by all polynomials of a ring.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl PolyRing {
    pub fn new(names: Vec<String>, weights: Vec<u64>) -> Arc<Self> {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(PolyRing { names, weights })
    }

    /// Ring x_1..x_n with wt(x_i) = i.
    pub fn x_ring(n: usize) -> Arc<Self> {
        PolyRing::new(
            (1..=n).map(|i| format!("x{i}")).collect(),
            (1..=n as u64).collect(),
        )
    }

    /// Ring of n variables named `prefix1..prefixn`, all of weight 1.
    pub fn uniform(prefix: &str, n: usize) -> Arc<Self> {
        PolyRing::new(
            (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            vec![1; n],
        )
    }

    /// Ring z_1..z_n with explicit weights.
    pub fn z_ring(weights: Vec<u64>) -> Arc<Self> {
        PolyRing::new(
            (1..=weights.len()).map(|i| format!("z{i}")).collect(),
            weights,
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn weighted_degree_of(&self, expo: &[u32]) -> u64 {
        expo.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rat) -> Self {
        let mut p = MultiPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.len()], c);
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        MultiPoly::constant(ring, Rat::one())
    }

    /// The variable with 0-based index i.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.len());
        let mut expo = vec![0; ring.len()];
        expo[i] = 1;
        let mut p = MultiPoly::zero(ring);
        p.terms.insert(expo, Rat::one());
        p
    }

    pub fn from_terms<I>(ring: &Arc<PolyRing>, it: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MultiPoly::zero(ring);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expo: &[u32]) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.ring.len()])
    }

    fn add_term(&mut self, expo: Vec<u32>, c: Rat) {
        assert_eq!(expo.len(), self.ring.len(), "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.mul_capped(other, None)
    }

    /// Product, dropping terms of weighted degree above `cap` when given.
    pub fn mul_capped(&self, other: &MultiPoly, cap: Option<u64>) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = MultiPoly::zero(&self.ring);
        for (ea, ca) in &self.terms {
            let wa = self.ring.weighted_degree_of(ea);
            for (eb, cb) in &other.terms {
                if let Some(cap) = cap {
                    if wa + self.ring.weighted_degree_of(eb) > cap {
                        continue;
                    }
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        self.pow_capped(e, None)
    }

    pub fn pow_capped(&self, e: u32, cap: Option<u64>) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_capped(self, cap);
        }
        acc
    }

    /// Maximum weighted degree over all terms. Error on the zero polynomial.
    pub fn weighted_degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(|e| self.ring.weighted_degree_of(e))
            .max()
            .ok_or(Error::ZeroPolynomialDegree)
    }

    /// Minimum weighted degree over all terms.
    pub fn weighted_valuation(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(|e| self.ring.weighted_degree_of(e))
            .min()
            .ok_or(Error::ZeroPolynomialDegree)
    }

    /// Maximum total degree (all weights treated as 1).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Maximum total degree restricted to the listed variables.
    pub fn degree_in_vars(&self, vars: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|&v| e[v]).sum())
            .max()
            .unwrap_or(0)
    }

    /// True if every term has weighted degree exactly w.
    pub fn is_weighted_homogeneous(&self, w: u64) -> bool {
        self.terms
            .keys()
            .all(|e| self.ring.weighted_degree_of(e) == w)
    }

    /// Terms of weighted degree exactly w.
    pub fn weighted_piece(&self, w: u64) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.weighted_degree_of(e) == w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop terms of weighted degree above cap.
    pub fn truncate_weight(&self, cap: u64) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.weighted_degree_of(e) <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop terms of total degree above cap.
    pub fn truncate_total_degree(&self, cap: u32) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of total degree exactly d.
    pub fn total_degree_piece(&self, d: u32) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// 0-based indices of variables that occur.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    /// Substitute every variable by its image; all images must live in the
    /// same target ring and there must be one per variable.
    pub fn substitute(&self, images: &[MultiPoly], target: &Arc<PolyRing>) -> Result<MultiPoly> {
        self.substitute_capped(images, target, None)
    }

    /// Substitution dropping intermediate terms above a weighted-degree cap.
    pub fn substitute_capped(
        &self,
        images: &[MultiPoly],
        target: &Arc<PolyRing>,
        cap: Option<u64>,
    ) -> Result<MultiPoly> {
        if images.len() != self.ring.len() {
            let missing = self
                .ring
                .names
                .get(images.len())
                .cloned()
                .unwrap_or_else(|| "?".into());
            return Err(Error::UnassignedVariable(missing));
        }
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul_capped(&images[i].pow_capped(k, cap), cap);
                }
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Set the listed variables to zero.
    pub fn set_vars_zero(&self, vars: &BTreeSet<usize>) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| vars.iter().all(|&v| e[v] == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Move the polynomial into another ring via a variable index map:
    /// exponent of variable i goes to variable `var_map[i]` of the target.
    /// Weights may differ; coefficients are untouched.
    pub fn map_variables(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> MultiPoly {
        assert_eq!(var_map.len(), self.ring.len());
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    ne[var_map[i]] += k;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Embed into a larger ring whose first variables match this ring.
    pub fn extend_to(&self, target: &Arc<PolyRing>) -> MultiPoly {
        assert!(target.len() >= self.ring.len());
        let map: Vec<usize> = (0..self.ring.len()).collect();
        self.map_variables(target, &map)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= &point[i].pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Partial derivative in variable i.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * &Rat::from_int(e[i] as i64));
        }
        out
    }

    /// Monomials ordered by the serialization contract:
    /// weighted degree descending, then exponent vector descending (lex),
    /// so earlier variables with higher powers print first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let wa = self.ring.weighted_degree_of(ea);
            let wb = self.ring.weighted_degree_of(eb);
            match wb.cmp(&wa) {
                Ordering::Equal => eb.cmp(ea),
                o => o,
            }
        });
        v
    }

    /// The leading term under the serialization order, if any.
    pub fn leading_term(&self) -> Option<(Vec<u32>, Rat)> {
        self.sorted_terms()
            .first()
            .map(|(e, c)| ((*e).clone(), (*c).clone()))
    }

    /// Proportionality test: self == c * other for a nonzero constant c.
    /// Returns the constant.
    pub fn proportionality(&self, other: &MultiPoly) -> Option<Rat> {
        self.assert_same_ring(other);
        if self.is_zero() && other.is_zero() {
            return Some(Rat::one());
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (e0, c0) = self.terms.iter().next()?;
        let d0 = other.terms.get(e0)?;
        let ratio = c0 / d0;
        if self
            .terms
            .iter()
            .all(|(e, c)| other.terms.get(e).map(|d| &(d * &ratio) == c) == Some(true))
        {
            Some(ratio)
        } else {
            None
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
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
            let is_const = e.iter().all(|&k| k == 0);
            if is_const {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first_var = true;
                for (i, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    if !first_var {
                        write!(f, "*")?;
                    }
                    first_var = false;
                    if k == 1 {
                        write!(f, "{}", self.ring.name(i))?;
                    } else {
                        write!(f, "{}^{}", self.ring.name(i), k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact division; None if the divisor does not divide evenly.
/// Uses lex leading-term elimination, so it terminates on any input.
pub fn div_exact(num: &MultiPoly, den: &MultiPoly) -> Option<MultiPoly> {
    assert!(!den.is_zero(), "division by zero polynomial");
    let ring = num.ring().clone();
    let den_lead = den.terms.iter().next_back()?; // lex-largest
    let (dl_e, dl_c) = (den_lead.0.clone(), den_lead.1.clone());
    let mut rem = num.clone();
    let mut quot = MultiPoly::zero(&ring);
    while !rem.is_zero() {
        let (re, rc) = {
            let t = rem.terms.iter().next_back().unwrap();
            (t.0.clone(), t.1.clone())
        };
        if !re.iter().zip(&dl_e).all(|(a, b)| a >= b) {
            return None;
        }
        let qe: Vec<u32> = re.iter().zip(&dl_e).map(|(a, b)| a - b).collect();
        let qc = &rc / &dl_c;
        let mut qt = MultiPoly::zero(&ring);
        qt.add_term(qe, qc);
        rem = rem.sub(&qt.mul(den));
        quot = quot.add(&qt);
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xring(n: usize) -> Arc<PolyRing> {
        PolyRing::x_ring(n)
    }

    #[test]
    fn weighted_degree_examples() {
        let r = xring(2); // wt(x1)=1, wt(x2)=2
        let x1 = MultiPoly::var(&r, 0);
        assert_eq!(x1.weighted_degree().unwrap(), 1);
        assert_eq!(x1.pow(7).weighted_degree().unwrap(), 7);
        // x1^3 * x2^2 with weights (1,2) -> 7
        let p = x1.pow(3).mul(&MultiPoly::var(&r, 1).pow(2));
        assert_eq!(p.weighted_degree().unwrap(), 7);
        assert!(MultiPoly::zero(&r).weighted_degree().is_err());
    }

    #[test]
    fn substitution_binomial() {
        let r = xring(1);
        let u = PolyRing::uniform("u", 2);
        let u1 = MultiPoly::var(&u, 0);
        let u2 = MultiPoly::var(&u, 1);
        let img = u1.add(&u2);
        let p = MultiPoly::var(&r, 0).pow(2);
        let q = p.substitute(&[img], &u).unwrap();
        let expect = u1
            .pow(2)
            .add(&u1.mul(&u2).scale(&Rat::from_int(2)))
            .add(&u2.pow(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn substitution_missing_variable_errors() {
        let r = xring(2);
        let p = MultiPoly::var(&r, 1);
        let u = PolyRing::uniform("u", 1);
        let err = p.substitute(&[MultiPoly::one(&u)], &u).unwrap_err();
        assert!(matches!(err, Error::UnassignedVariable(v) if v == "x2"));
    }

    #[test]
    fn display_contract() {
        let r = PolyRing::z_ring(vec![1, 2, 3, 7]);
        let z = |i: usize| MultiPoly::var(&r, i);
        // z1^7 + 21 z1^4 z3 - 84 z1^3 z2^2 + 252 z1 z3^2 + 252 z2^2 z3 - 252 z4
        let p = z(0)
            .pow(7)
            .add(&z(0).pow(4).mul(&z(2)).scale(&Rat::from_int(21)))
            .add(&z(0).pow(3).mul(&z(1).pow(2)).scale(&Rat::from_int(-84)))
            .add(&z(0).mul(&z(2).pow(2)).scale(&Rat::from_int(252)))
            .add(&z(1).pow(2).mul(&z(2)).scale(&Rat::from_int(252)))
            .add(&z(3).scale(&Rat::from_int(-252)));
        assert_eq!(
            p.to_string(),
            "z1^7 + 21*z1^4*z3 - 84*z1^3*z2^2 + 252*z1*z3^2 + 252*z2^2*z3 - 252*z4"
        );
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::uniform("u", 2);
        let u1 = MultiPoly::var(&r, 0);
        let u2 = MultiPoly::var(&r, 1);
        let d = u1.sub(&u2);
        let n = u1.pow(3).sub(&u2.pow(3));
        let q = div_exact(&n, &d).unwrap();
        let expect = u1.pow(2).add(&u1.mul(&u2)).add(&u2.pow(2));
        assert_eq!(q, expect);
        assert!(div_exact(&u1, &d).is_none());
    }

    #[test]
    fn proportionality_detects_scalar() {
        let r = xring(2);
        let p = MultiPoly::var(&r, 0).add(&MultiPoly::var(&r, 1).scale(&Rat::from_int(3)));
        let q = p.scale(&Rat::from_frac(-7, 2));
        assert_eq!(q.proportionality(&p), Some(Rat::from_frac(-7, 2)));
        let bad = p.add(&MultiPoly::one(&r));
        assert_eq!(bad.proportionality(&p), None);
    }
}
