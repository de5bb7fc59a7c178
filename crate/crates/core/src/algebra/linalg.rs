//! Small exact linear algebra over the rationals: determinants by
//! fraction-free Bareiss elimination, reduced row echelon form, and
//! nullspace bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Determinant of a square rational matrix. Rows are scaled to integers,
/// then eliminated fraction-free (Bareiss), and the scale is divided back.
pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut scale = Rat::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut den = BigInt::one();
        for c in row {
            den = den.lcm(c.denom());
        }
        scale = &scale * &Rat::from_big(BigInt::one(), den.clone());
        a.push(
            row.iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
    }
    let det = bareiss(&mut a);
    &Rat::from_big(det, BigInt::one()) * &scale
}

/// Fraction-free elimination; consumes the matrix, returns the determinant.
fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(m: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.retain(|row| row.iter().any(|c| !c.is_zero()));
    pivots
}

/// Basis of the right nullspace of the matrix (rows are equations).
pub fn nullspace(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[ri][f];
        }
        basis.push(v);
    }
    basis
}

/// Rank of the matrix.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Chinese remainder combination of residues modulo coprime moduli.
pub fn crt(residues: &[(u64, u64)]) -> (BigInt, BigInt) {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(r, p) in residues {
        let p_big = BigInt::from(p);
        // solve x' = x mod m, x' = r mod p
        let (g, inv_m, _) = extended_gcd(&m, &p_big);
        debug_assert!(g.is_one());
        let diff = (BigInt::from(r) - &x) % &p_big;
        let t = (diff * inv_m) % &p_big;
        x = &x + &m * t;
        m *= &p_big;
        x = ((x % &m) + &m) % &m;
    }
    (x, m)
}

fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        return (a.clone(), BigInt::one(), BigInt::zero());
    }
    let (g, x, y) = extended_gcd(b, &(a % b));
    (g, y.clone(), x - (a / b) * y)
}

/// Rational reconstruction of r mod m: p/q with |p|, q <= sqrt(m/2).
pub fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / BigInt::from(2)).sqrt();
    let bound = if bound.is_zero() { BigInt::one() } else { bound };
    let (mut r0, mut r1) = (m.clone(), ((r % m) + m) % m);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 >= bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (num, den) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if den.abs() > bound {
        return None;
    }
    if num.gcd(&den) != BigInt::one() {
        return None;
    }
    Some(Rat::from_big(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| Rat::from_int(c)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), Rat::from_int(-2));
        assert_eq!(
            determinant(&m(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])),
            Rat::from_int(5)
        );
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), Rat::zero());
        assert_eq!(determinant(&[]), Rat::one());
    }

    #[test]
    fn determinant_rational_entries() {
        let a = vec![
            vec![Rat::from_frac(1, 2), Rat::from_frac(1, 3)],
            vec![Rat::from_frac(1, 4), Rat::from_frac(1, 5)],
        ];
        assert_eq!(determinant(&a), Rat::from_frac(1, 60));
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        // x + y + z = 0, x - z = 0 -> kernel spanned by (1, -2, 1)
        let a = m(&[&[1, 1, 1], &[1, 0, -1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        for row in &a {
            let dot = row
                .iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (r, x)| &acc + &(r * x));
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn rational_reconstruction_roundtrip() {
        let p = BigInt::from(1_000_003u64);
        // encode 22/7 mod p
        let r = (BigInt::from(22) * BigInt::from(7).modpow(&(p.clone() - 2), &p)) % &p;
        let rec = rational_reconstruct(&r, &p).unwrap();
        assert_eq!(rec, Rat::from_frac(22, 7));
    }

    #[test]
    fn crt_combines() {
        let (x, m) = crt(&[(2, 3), (3, 5)]);
        assert_eq!(m, BigInt::from(15));
        assert_eq!(x, BigInt::from(8));
    }
}
