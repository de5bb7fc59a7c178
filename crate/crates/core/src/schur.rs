//! Elementary Schur-Weierstrass polynomials, the determinant construction
//! for a partition, and the power-sum specialization to symmetric Schur
//! polynomials.
//!
//! The elementary polynomials sigma_k are the coefficients of the
//! generating series exp(sum_i x_i t^i); sigma_lambda is the determinant
//! det(sigma_{lambda_i + j - i}). Giving x_i weight i makes sigma_lambda
//! weighted-homogeneous of weight |lambda|.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{MultiPoly, PolyRing, Rat};
use crate::semigroup::Partition;

/// sigma_lambda together with its partition.
#[derive(Clone, Debug)]
pub struct SchurWeierstrass {
    pub partition: Partition,
    pub poly: MultiPoly,
}

/// sigma_k in the ring x_1..x_num_vars (variables beyond num_vars are
/// treated as zero). By convention sigma_k = 0 for k < 0 and sigma_0 = 1.
///
/// Computed by the derivative recurrence k sigma_k = sum_{i<=k} i x_i
/// sigma_{k-i}, which stays exact over the rationals.
pub fn elementary_sw(k: i64, num_vars: usize, ring: &Arc<PolyRing>) -> MultiPoly {
    assert!(ring.len() >= num_vars);
    if k < 0 {
        return MultiPoly::zero(ring);
    }
    let k = k as usize;
    let mut sigma: Vec<MultiPoly> = Vec::with_capacity(k + 1);
    sigma.push(MultiPoly::one(ring));
    for m in 1..=k {
        let mut acc = MultiPoly::zero(ring);
        for i in 1..=m.min(num_vars) {
            let xi = MultiPoly::var(ring, i - 1).scale(&Rat::from_int(i as i64));
            acc = acc.add(&xi.mul(&sigma[m - i]));
        }
        sigma.push(acc.scale(&Rat::from_frac(1, m as i64)));
    }
    sigma.pop().unwrap()
}

/// The Schur-Weierstrass polynomial sigma_lambda as the m x m determinant of
/// elementary polynomials, expanded by cofactors. The ring is x_1..x_n with
/// n = lambda_1 + len(lambda) - 1, the largest index that can occur.
pub fn schur_weierstrass(lambda: &Partition) -> SchurWeierstrass {
    let m = lambda.len();
    if m == 0 {
        let ring = PolyRing::x_ring(1);
        return SchurWeierstrass {
            partition: lambda.clone(),
            poly: MultiPoly::one(&ring),
        };
    }
    let n = (lambda.part(1) as usize + m - 1).max(1);
    let ring = PolyRing::x_ring(n);
    // cache sigma_k for all indices that appear
    let max_idx = lambda.part(1) as i64 + m as i64 - 1;
    let sigmas: Vec<MultiPoly> = (0..=max_idx.max(0))
        .map(|k| elementary_sw(k, n, &ring))
        .collect();
    let entry = |i: usize, j: usize| -> MultiPoly {
        let idx = lambda.part(i + 1) as i64 + j as i64 - i as i64;
        if idx < 0 {
            MultiPoly::zero(&ring)
        } else {
            sigmas[idx as usize].clone()
        }
    };
    let poly = poly_det(&ring, m, &entry);
    SchurWeierstrass {
        partition: lambda.clone(),
        poly,
    }
}

/// Cofactor-expansion determinant of a matrix of polynomials.
fn poly_det(
    ring: &Arc<PolyRing>,
    m: usize,
    entry: &dyn Fn(usize, usize) -> MultiPoly,
) -> MultiPoly {
    fn rec(
        ring: &Arc<PolyRing>,
        rows: &[usize],
        cols: &[usize],
        entry: &dyn Fn(usize, usize) -> MultiPoly,
    ) -> MultiPoly {
        if rows.is_empty() {
            return MultiPoly::one(ring);
        }
        let r = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        let mut acc = MultiPoly::zero(ring);
        for (pos, &c) in cols.iter().enumerate() {
            let e = entry(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let minor = rec(ring, &rest, &sub_cols, entry);
            let signed = if pos % 2 == 0 { minor } else { minor.neg() };
            acc = acc.add(&e.mul(&signed));
        }
        acc
    }
    let rows: Vec<usize> = (0..m).collect();
    let cols: Vec<usize> = (0..m).collect();
    rec(ring, &rows, &cols, entry)
}

/// sigma_lambda(p_1, p_2/2, p_3/3, ...) with p_i the power sums in
/// u_1..u_n: the symmetric Schur polynomial when len(lambda) <= n, and 0
/// otherwise.
pub fn to_symmetric_schur(lambda: &Partition, n: usize) -> MultiPoly {
    assert!(n >= 1);
    let uring = PolyRing::uniform("u", n);
    let sw = schur_weierstrass(lambda);
    let xn = sw.poly.ring().len();
    let images: Vec<MultiPoly> = (1..=xn)
        .map(|i| power_sum(i as u32, n, &uring).scale(&Rat::from_frac(1, i as i64)))
        .collect();
    sw.poly.substitute(&images, &uring).unwrap()
}

/// p_k = u_1^k + ... + u_n^k.
pub fn power_sum(k: u32, n: usize, uring: &Arc<PolyRing>) -> MultiPoly {
    let mut acc = MultiPoly::zero(uring);
    for i in 0..n {
        acc = acc.add(&MultiPoly::var(uring, i).pow(k));
    }
    acc
}

/// 1-based indices of the variables that occur in sigma.
pub fn variable_support(sigma: &SchurWeierstrass) -> BTreeSet<usize> {
    sigma.poly.support().iter().map(|&i| i + 1).collect()
}

/// Product of the hook lengths of the partition.
pub fn hook_product(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut prod = 1u64;
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            let arm = lambda.part(i) - j;
            let leg = conj.part(j as usize) - i as u64;
            prod *= arm + leg + 1;
        }
    }
    prod
}

/// Symmetric Schur polynomial by the bialternant formula:
/// det(u_j^(lambda_i + n - i)) / det(u_j^(n - i)). Exact polynomial
/// division; used as the independent oracle in tests.
pub fn bialternant_schur(lambda: &Partition, n: usize) -> MultiPoly {
    use crate::algebra::multipoly::div_exact;
    assert!(n >= 1);
    let uring = PolyRing::uniform("u", n);
    if lambda.len() > n {
        return MultiPoly::zero(&uring);
    }
    let alternant = |shift: &dyn Fn(usize) -> u32| -> MultiPoly {
        let rows: Vec<Vec<MultiPoly>> = (1..=n)
            .map(|i| {
                (0..n)
                    .map(|j| MultiPoly::var(&uring, j).pow(shift(i)))
                    .collect()
            })
            .collect();
        poly_det(&uring, n, &|i, j| rows[i][j].clone())
    };
    let num = alternant(&|i| (lambda.part(i) + (n - i) as u64) as u32);
    let den = alternant(&|i| (n - i) as u32);
    if num.is_zero() {
        return MultiPoly::zero(&uring);
    }
    div_exact(&num, &den).expect("Vandermonde divides the alternant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_gorenstein, NumericalSemigroup};

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn elementary_low_orders() {
        let ring = PolyRing::x_ring(3);
        assert_eq!(elementary_sw(0, 3, &ring), MultiPoly::one(&ring));
        assert_eq!(elementary_sw(1, 3, &ring), MultiPoly::var(&ring, 0));
        assert!(elementary_sw(-2, 3, &ring).is_zero());
        // sigma_3 = x3 + x1 x2 + x1^3/6
        let x1 = MultiPoly::var(&ring, 0);
        let x2 = MultiPoly::var(&ring, 1);
        let x3 = MultiPoly::var(&ring, 2);
        let expect = x3
            .add(&x1.mul(&x2))
            .add(&x1.pow(3).scale(&Rat::from_frac(1, 6)));
        assert_eq!(elementary_sw(3, 3, &ring), expect);
    }

    #[test]
    fn elementary_matches_generating_series() {
        // independent route: expand exp(sum x_i t^i) as a polynomial-valued
        // series by repeated truncated multiplication
        let n = 5usize;
        let ring = PolyRing::x_ring(n);
        let mut series: Vec<MultiPoly> = vec![MultiPoly::one(&ring)];
        series.resize(n + 1, MultiPoly::zero(&ring));
        // exp via sum of powers of s = sum x_i t^i, truncated at t^n
        let mut factorial = Rat::one();
        let mut power: Vec<MultiPoly> = vec![MultiPoly::one(&ring)];
        power.resize(n + 1, MultiPoly::zero(&ring));
        for m in 1..=n {
            factorial = &factorial * &Rat::from_int(m as i64);
            // power <- power * s
            let mut next = vec![MultiPoly::zero(&ring); n + 1];
            for d in 0..=n {
                if power[d].is_zero() {
                    continue;
                }
                for i in 1..=n - d {
                    let term = power[d].mul(&MultiPoly::var(&ring, i - 1));
                    next[d + i] = next[d + i].add(&term);
                }
            }
            power = next;
            for d in 0..=n {
                series[d] = series[d].add(&power[d].scale(&factorial.recip()));
            }
        }
        for k in 0..=n {
            assert_eq!(series[k], elementary_sw(k as i64, n, &ring), "sigma_{k}");
        }
    }

    #[test]
    fn sw_single_box() {
        let sw = schur_weierstrass(&part(&[1]));
        assert_eq!(sw.poly, MultiPoly::var(sw.poly.ring(), 0));
    }

    #[test]
    fn sw_4111_matches_closed_form() {
        let sw = schur_weierstrass(&part(&[4, 1, 1, 1]));
        let ring = sw.poly.ring().clone();
        assert_eq!(ring.len(), 7);
        let x = |i: usize| MultiPoly::var(&ring, i - 1);
        // (1/252)(x1^7 + 21 x1^4 x3 - 84 x1^3 x2^2 + 252 x2^2 x3
        //         + 252 x1 x3^2 - 252 x7)
        let expect = x(1)
            .pow(7)
            .add(&x(1).pow(4).mul(&x(3)).scale(&Rat::from_int(21)))
            .add(&x(1).pow(3).mul(&x(2).pow(2)).scale(&Rat::from_int(-84)))
            .add(&x(2).pow(2).mul(&x(3)).scale(&Rat::from_int(252)))
            .add(&x(1).mul(&x(3).pow(2)).scale(&Rat::from_int(252)))
            .add(&x(7).scale(&Rat::from_int(-252)))
            .scale(&Rat::from_frac(1, 252));
        assert_eq!(sw.poly, expect);
    }

    #[test]
    fn sw_empty_partition_is_one() {
        let sw = schur_weierstrass(&Partition::empty());
        assert!(sw.poly.proportionality(&MultiPoly::one(sw.poly.ring())).is_some());
    }

    #[test]
    fn weighted_homogeneity_up_to_8() {
        for w in 1..=8u64 {
            for lam in Partition::all_of_weight(w) {
                let sw = schur_weierstrass(&lam);
                assert!(
                    sw.poly.is_weighted_homogeneous(w),
                    "sigma_{lam} not homogeneous of weight {w}"
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_is_hook_reciprocal() {
        for w in 1..=8u64 {
            for lam in Partition::all_of_weight(w) {
                let sw = schur_weierstrass(&lam);
                let mut e = vec![0u32; sw.poly.ring().len()];
                e[0] = w as u32;
                let lead = sw.poly.coeff(&e);
                let hooks = hook_product(&lam);
                assert_eq!(
                    lead,
                    Rat::from_frac(1, hooks as i64),
                    "x1^{w} coefficient of sigma_{lam}"
                );
            }
        }
    }

    #[test]
    fn power_sum_substitution_examples() {
        // lambda = (1), n = 2: u1 + u2
        let s = to_symmetric_schur(&part(&[1]), 2);
        let uring = s.ring().clone();
        let u1 = MultiPoly::var(&uring, 0);
        let u2 = MultiPoly::var(&uring, 1);
        assert_eq!(s, u1.add(&u2));
        // lambda = (1,1,1), n = 2: zero (more parts than variables)
        assert!(to_symmetric_schur(&part(&[1, 1, 1]), 2).is_zero());
        // lambda = (2,1), n = 2: u1 u2 (u1 + u2)
        let s21 = to_symmetric_schur(&part(&[2, 1]), 2);
        let expect = u1.mul(&u2).mul(&u1.add(&u2));
        assert_eq!(s21, expect);
    }

    #[test]
    fn matches_bialternant_oracle() {
        for w in 0..=6u64 {
            for lam in Partition::all_of_weight(w) {
                for n in 1..=4usize {
                    let via_sw = to_symmetric_schur(&lam, n);
                    let via_alt = bialternant_schur(&lam, n);
                    assert_eq!(via_sw, via_alt, "lambda={lam}, n={n}");
                    if lam.len() > n {
                        assert!(via_sw.is_zero());
                    } else {
                        assert!(!via_sw.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn gorenstein_support_inside_gaps() {
        for s in enumerate_gorenstein(6).unwrap() {
            let lam = s.partition_from_gaps();
            let sw = schur_weierstrass(&lam);
            let support = variable_support(&sw);
            for v in &support {
                assert!(
                    s.gaps().contains(&(*v as u64)),
                    "variable x{v} of sigma_{lam} outside gaps of {s}"
                );
            }
        }
    }

    #[test]
    fn support_of_2_9_partition() {
        let s = NumericalSemigroup::from_generators(&[2, 9]).unwrap();
        let sw = schur_weierstrass(&s.partition_from_gaps());
        let support: Vec<usize> = variable_support(&sw).into_iter().collect();
        assert_eq!(support, vec![1, 3, 5, 7]);
    }

    #[test]
    fn hook_products() {
        assert_eq!(hook_product(&part(&[4, 1, 1, 1])), 252);
        assert_eq!(hook_product(&part(&[4, 3, 2, 1])), 4725);
        assert_eq!(hook_product(&part(&[1])), 1);
    }
}
