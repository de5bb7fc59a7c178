//! Deciding whether a parametrized rational curve has an algebraic theta
//! divisor: the parametrization must be set-theoretically injective (every
//! singular point unibranch). Coincident parameter values are located by
//! eliminating one variable from the pairwise 2x2 minors of the
//! parametrization, with all arithmetic over the rationals.

use crate::algebra::{Rat, RationalFunction, UniPoly};
use crate::error::Error;
use crate::Result;

use super::ParamPoint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Algebraic,
    NotAlgebraic { fibers: Vec<Vec<ParamPoint>> },
}

pub fn format_fibers(fibers: &[Vec<ParamPoint>]) -> String {
    fibers
        .iter()
        .map(|f| {
            let pts: Vec<String> = f.iter().map(|p| p.to_string()).collect();
            format!("{{{}}}", pts.join(", "))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Clear denominators and remove the content gcd, giving a polynomial tuple
/// defining the same projective map.
fn clear_denominators(components: &[RationalFunction]) -> Result<Vec<UniPoly>> {
    if components.len() < 2 {
        return Err(Error::ConstantMap);
    }
    let mut lcm = UniPoly::one();
    for c in components {
        let g = lcm.gcd(c.den());
        lcm = &lcm.div_rem(&g).0 * c.den();
    }
    let mut polys: Vec<UniPoly> = components
        .iter()
        .map(|c| c.num() * &lcm.div_rem(c.den()).0)
        .collect();
    let mut content = UniPoly::zero();
    for p in &polys {
        content = content.gcd(p);
    }
    if content.degree().unwrap_or(0) > 0 {
        polys = polys.iter().map(|p| p.div_rem(&content).0).collect();
    }
    // non-constant check: some pair of components must be non-proportional
    let d = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    if d == 0 {
        return Err(Error::ConstantMap);
    }
    let independent = polys.iter().enumerate().any(|(i, p)| {
        polys.iter().skip(i + 1).any(|q| {
            let cross = &(p * &UniPoly::constant(q.leading())) - &(q * &UniPoly::constant(p.leading()));
            !cross.is_zero() || p.degree() != q.degree()
        })
    });
    if !independent {
        return Err(Error::ConstantMap);
    }
    Ok(polys)
}

/// Bivariate polynomial in (a, b), stored as coefficients of powers of b.
type Biv = Vec<UniPoly>;

fn biv_is_zero(m: &Biv) -> bool {
    m.iter().all(UniPoly::is_zero)
}

/// N_kl = (p_k(a) p_l(b) - p_l(a) p_k(b)) / (a - b); the quotient is exact.
fn coincidence_minor(pk: &UniPoly, pl: &UniPoly) -> Biv {
    let deg = pk.degree().unwrap_or(0).max(pl.degree().unwrap_or(0));
    // M as coefficients of b^j: m_j(a) = p_k(a) c_{l,j} - p_l(a) c_{k,j}
    let m: Biv = (0..=deg)
        .map(|j| {
            let t1 = pk.scale(&pl.coeff(j));
            let t2 = pl.scale(&pk.coeff(j));
            &t1 - &t2
        })
        .collect();
    divide_by_a_minus_b(&m)
}

/// Exact division of M(a,b) by (a - b): with M = sum m_j(a) b^j and
/// N = sum n_j b^j, matching coefficients of M = a N - b N gives
/// n_{j-1} = a n_j - m_j, solved top-down.
fn divide_by_a_minus_b(m: &Biv) -> Biv {
    let mut top = m.len();
    while top > 0 && m[top - 1].is_zero() {
        top -= 1;
    }
    if top == 0 {
        return vec![];
    }
    let cap = top - 1; // deg_b N = deg_b M - 1
    let mut n: Vec<UniPoly> = vec![UniPoly::zero(); cap.max(1)];
    if cap == 0 {
        debug_assert!(biv_is_zero(m));
        return vec![];
    }
    n[cap - 1] = -&m[cap];
    for j in (1..cap).rev() {
        let a_nj = &UniPoly::var() * &n[j];
        n[j - 1] = &a_nj - &m[j];
    }
    debug_assert_eq!(&UniPoly::var() * &n[0], m[0], "division not exact");
    n
}

fn biv_specialize_a(m: &Biv, a: &Rat) -> UniPoly {
    UniPoly::new(m.iter().map(|c| c.eval(a)).collect())
}

fn biv_deg_a(m: &Biv) -> usize {
    m.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

fn biv_deg_b(m: &Biv) -> usize {
    m.len().saturating_sub(1)
}

fn biv_lead_b(m: &Biv) -> &UniPoly {
    m.last().expect("nonzero bivariate")
}

/// Resultant of two univariate polynomials (Euclidean chain).
fn resultant(f: &UniPoly, g: &UniPoly) -> Rat {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut acc = Rat::one();
    loop {
        let (df, dg) = (f.degree(), g.degree());
        match (df, dg) {
            (None, _) | (_, None) => return Rat::zero(),
            (Some(_), Some(0)) => {
                return &acc * &g.coeff(0).pow(f.degree().unwrap() as u32);
            }
            (Some(0), Some(_)) => {
                return &acc * &f.coeff(0).pow(g.degree().unwrap() as u32);
            }
            (Some(m), Some(n)) => {
                if m < n {
                    if (m * n) % 2 == 1 {
                        acc = -acc;
                    }
                    std::mem::swap(&mut f, &mut g);
                    continue;
                }
                let (_, r) = f.div_rem(&g);
                let dr = r.degree().map(|d| d as i64).unwrap_or(-1);
                if dr < 0 {
                    return Rat::zero();
                }
                acc = &acc * &g.leading().pow((m as i64 - dr) as u32);
                if (m * n) % 2 == 1 {
                    acc = -acc;
                }
                f = g;
                g = r;
            }
        }
    }
}

/// Res_b of two bivariate polynomials, as a polynomial in a, computed by
/// evaluation at points where neither leading b-coefficient vanishes and
/// Lagrange interpolation through them.
fn resultant_in_b(f: &Biv, g: &Biv) -> UniPoly {
    let bound = biv_deg_a(f) * biv_deg_b(g) + biv_deg_a(g) * biv_deg_b(f);
    let lf = biv_lead_b(f);
    let lg = biv_lead_b(g);
    let mut points: Vec<(Rat, Rat)> = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while points.len() <= bound {
        let a = Rat::from_int(k);
        k = if k >= 0 { -(k + 1) } else { -k };
        if lf.eval(&a).is_zero() || lg.eval(&a).is_zero() {
            continue;
        }
        let r = resultant(&biv_specialize_a(f, &a), &biv_specialize_a(g, &a));
        points.push((a, r));
    }
    lagrange(&points)
}

fn lagrange(points: &[(Rat, Rat)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = UniPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            term = &term * &UniPoly::new(vec![-&(xj / &denom), denom.recip().pow(0)]);
            // (u - xj)/(xi - xj)
            let _ = &denom;
        }
        acc = &acc + &term;
    }
    acc
}

/// All pairwise coincidence minors, nonzero ones only.
fn all_minors(polys: &[UniPoly]) -> Vec<Biv> {
    let mut out = Vec::new();
    for k in 0..polys.len() {
        for l in k + 1..polys.len() {
            let n = coincidence_minor(&polys[k], &polys[l]);
            if !biv_is_zero(&n) {
                out.push(n);
            }
        }
    }
    out
}

/// Partner values b of a fixed parameter a: common rational roots of all
/// minors specialized at a.
fn partners_at(minors: &[Biv], a: &Rat) -> Vec<Rat> {
    let mut g = UniPoly::zero();
    for m in minors {
        g = g.gcd(&biv_specialize_a(m, a));
        if g.degree() == Some(0) {
            return vec![];
        }
    }
    if g.is_zero() {
        return vec![];
    }
    let (roots, _) = g.rational_roots();
    roots
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| r != a)
        .collect()
}

/// Partner values b of the point at infinity: common rational roots of the
/// minors lc_k p_l(b) - lc_l p_k(b), where lc is the top homogeneous
/// coefficient.
fn partners_of_infinity(polys: &[UniPoly]) -> Vec<Rat> {
    let d = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let lead: Vec<Rat> = polys
        .iter()
        .map(|p| {
            if p.degree() == Some(d) {
                p.leading()
            } else {
                Rat::zero()
            }
        })
        .collect();
    let mut g = UniPoly::zero();
    for k in 0..polys.len() {
        for l in k + 1..polys.len() {
            let m = &polys[l].scale(&lead[k]) - &polys[k].scale(&lead[l]);
            g = g.gcd(&m);
            if g.degree() == Some(0) {
                return vec![];
            }
        }
    }
    if g.is_zero() {
        return vec![];
    }
    let (roots, _) = g.rational_roots();
    roots.into_iter().map(|(r, _)| r).collect()
}

/// ALGEBRAIC iff no two distinct parameter values map to the same point.
/// Coincidence fibers over the rationals are reported; the input must be a
/// birational parametrization (a multiple cover is rejected).
pub fn classify_algebraic(components: &[RationalFunction]) -> Result<Verdict> {
    let polys = clear_denominators(components)?;
    let minors = all_minors(&polys);
    if minors.is_empty() {
        return Err(Error::ConstantMap);
    }

    // birationality screen: generic fibers must be singletons
    let mut generic_extra = usize::MAX;
    for probe in [17i64, 23, 31] {
        let a = Rat::from_int(probe);
        let extra = partners_count_all_roots(&minors, &a);
        generic_extra = generic_extra.min(extra);
    }
    if generic_extra > 0 {
        return Err(Error::NotBirational(generic_extra + 1));
    }

    // eliminate b: rational roots of the first nonzero pairwise resultant
    let mut candidates: Vec<Rat> = Vec::new();
    let mut found_resultant = false;
    'outer: for i in 0..minors.len() {
        for j in i + 1..minors.len() {
            let r = resultant_in_b(&minors[i], &minors[j]);
            if r.is_zero() {
                continue;
            }
            found_resultant = true;
            let (roots, _) = r.rational_roots();
            candidates = roots.into_iter().map(|(a, _)| a).collect();
            break 'outer;
        }
    }
    if !found_resultant {
        if minors.len() == 1 {
            // a single independent minor means the coincidence locus is a
            // whole curve: not a birational parametrization
            return Err(Error::NotBirational(2));
        }
        return Err(Error::NotBirational(2));
    }

    // group coincidences into fibers
    let mut fibers: Vec<Vec<ParamPoint>> = Vec::new();
    let mut used: Vec<ParamPoint> = Vec::new();
    for a in &candidates {
        let pa = ParamPoint::Finite(a.clone());
        if used.contains(&pa) {
            continue;
        }
        let partners = partners_at(&minors, a);
        if partners.is_empty() {
            continue;
        }
        let mut fiber = vec![pa.clone()];
        for b in partners {
            let pb = ParamPoint::Finite(b);
            if !fiber.contains(&pb) {
                fiber.push(pb);
            }
        }
        fiber.sort_by(|x, y| match (x, y) {
            (ParamPoint::Finite(a), ParamPoint::Finite(b)) => a.cmp(b),
            (ParamPoint::Finite(_), ParamPoint::Infinity) => std::cmp::Ordering::Less,
            (ParamPoint::Infinity, ParamPoint::Finite(_)) => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        });
        used.extend(fiber.iter().cloned());
        fibers.push(fiber);
    }
    let inf_partners = partners_of_infinity(&polys);
    if !inf_partners.is_empty() {
        let mut fiber: Vec<ParamPoint> = inf_partners
            .into_iter()
            .map(ParamPoint::Finite)
            .collect();
        fiber.push(ParamPoint::Infinity);
        // merge with an existing fiber when they share a point
        if let Some(existing) = fibers
            .iter_mut()
            .find(|f| f.iter().any(|p| fiber.contains(p)))
        {
            for p in fiber {
                if !existing.contains(&p) {
                    existing.push(p);
                }
            }
        } else {
            fibers.push(fiber);
        }
    }

    if fibers.is_empty() {
        Ok(Verdict::Algebraic)
    } else {
        Ok(Verdict::NotAlgebraic { fibers })
    }
}

/// Number of partner roots (over the complex numbers, via gcd degree) of a
/// generic specialization; used only as a birationality screen.
fn partners_count_all_roots(minors: &[Biv], a: &Rat) -> usize {
    let mut g = UniPoly::zero();
    for m in minors {
        g = g.gcd(&biv_specialize_a(m, a));
        if g.degree() == Some(0) {
            return 0;
        }
    }
    g.degree().unwrap_or(0)
}

/// Critical parameter values of the map (where every projective derivative
/// minor vanishes): exactly the unibranch singular branch points once
/// coincidences are excluded. Rational ones are returned; an irrational
/// critical locus is an error.
pub fn discover_singular_points(components: &[RationalFunction]) -> Result<Vec<ParamPoint>> {
    let polys = clear_denominators(components)?;
    let mut g = UniPoly::zero();
    for k in 0..polys.len() {
        for l in k + 1..polys.len() {
            let w = &(&polys[k].derivative() * &polys[l]) - &(&polys[k] * &polys[l].derivative());
            g = g.gcd(&w);
            if g.degree() == Some(0) {
                break;
            }
        }
    }
    let mut points = Vec::new();
    if g.degree().unwrap_or(0) > 0 {
        let (roots, cofactor) = g.rational_roots();
        if cofactor.degree().unwrap_or(0) > 0 {
            return Err(Error::IrrationalSingularPoint(cofactor.to_string()));
        }
        points.extend(roots.into_iter().map(|(a, _)| ParamPoint::Finite(a)));
    }
    // chart at infinity: v = 1/u, components homogenized to common degree
    let d = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let flipped: Vec<UniPoly> = polys
        .iter()
        .map(|p| {
            let mut coeffs = vec![Rat::zero(); d + 1];
            for i in 0..=p.degree().unwrap_or(0) {
                coeffs[d - i] = p.coeff(i);
            }
            UniPoly::new(coeffs)
        })
        .collect();
    let critical_at_zero = {
        let mut all = true;
        'pairs: for k in 0..flipped.len() {
            for l in k + 1..flipped.len() {
                let w = &(&flipped[k].derivative() * &flipped[l])
                    - &(&flipped[k] * &flipped[l].derivative());
                if !w.eval(&Rat::zero()).is_zero() {
                    all = false;
                    break 'pairs;
                }
            }
        }
        all
    };
    if critical_at_zero {
        points.push(ParamPoint::Infinity);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::new(
            coeffs.iter().map(|&c| Rat::from_int(c)).collect(),
        ))
    }

    #[test]
    fn monomial_curve_is_algebraic() {
        // (1 : u : u^2 : u^6)
        let comps = vec![poly(&[1]), poly(&[0, 1]), poly(&[0, 0, 1]), {
            let mut c = vec![0i64; 7];
            c[6] = 1;
            poly(&c)
        }];
        assert_eq!(classify_algebraic(&comps).unwrap(), Verdict::Algebraic);
        let sing = discover_singular_points(&comps).unwrap();
        assert_eq!(sing, vec![ParamPoint::Infinity]);
    }

    #[test]
    fn triple_point_quartic_rejected() {
        // (u(u^2-1)(u+1) : u^2(u^2-1) : 1) has a triple point over u = -1,0,1
        let comps = vec![
            poly(&[0, -1, -1, 1, 1]),
            poly(&[0, 0, -1, 0, 1]),
            poly(&[1]),
        ];
        match classify_algebraic(&comps).unwrap() {
            Verdict::NotAlgebraic { fibers } => {
                assert_eq!(fibers.len(), 1);
                let expect: Vec<ParamPoint> = [-1i64, 0, 1]
                    .iter()
                    .map(|&v| ParamPoint::Finite(Rat::from_int(v)))
                    .collect();
                assert_eq!(fibers[0], expect);
            }
            v => panic!("expected rejection, got {v:?}"),
        }
    }

    #[test]
    fn smooth_conic_is_algebraic() {
        let comps = vec![poly(&[0, 0, 1]), poly(&[0, 1]), poly(&[1])];
        assert_eq!(classify_algebraic(&comps).unwrap(), Verdict::Algebraic);
        assert!(discover_singular_points(&comps).unwrap().is_empty());
    }

    #[test]
    fn constant_map_rejected() {
        let comps = vec![poly(&[1]), poly(&[2])];
        assert!(matches!(
            classify_algebraic(&comps).unwrap_err(),
            Error::ConstantMap
        ));
    }

    #[test]
    fn double_cover_rejected() {
        // (u^2 : 1) covers the line twice
        let comps = vec![poly(&[0, 0, 1]), poly(&[1])];
        assert!(matches!(
            classify_algebraic(&comps).unwrap_err(),
            Error::NotBirational(_)
        ));
    }

    #[test]
    fn node_reported_with_fiber() {
        // nodal cubic (u^2 - 1 : u(u^2-1) : 1): u = 1 and u = -1 coincide
        let comps = vec![poly(&[-1, 0, 1]), poly(&[0, -1, 0, 1]), poly(&[1])];
        match classify_algebraic(&comps).unwrap() {
            Verdict::NotAlgebraic { fibers } => {
                assert_eq!(fibers.len(), 1);
                assert_eq!(
                    fibers[0],
                    vec![
                        ParamPoint::Finite(Rat::from_int(-1)),
                        ParamPoint::Finite(Rat::from_int(1))
                    ]
                );
            }
            v => panic!("expected rejection, got {v:?}"),
        }
    }

    #[test]
    fn cusp_at_infinity_discovered() {
        // (u : u^3 : 1): cusp at infinity only
        let comps = vec![poly(&[0, 1]), poly(&[0, 0, 0, 1]), poly(&[1])];
        assert_eq!(classify_algebraic(&comps).unwrap(), Verdict::Algebraic);
        assert_eq!(
            discover_singular_points(&comps).unwrap(),
            vec![ParamPoint::Infinity]
        );
    }

    #[test]
    fn two_sings_parametrization() {
        // ((1-u)^2 : u(1-u)^2 : u^4 (1-u)^2 : 1), singular at inf and u=1
        let comps = vec![
            poly(&[1, -2, 1]),
            poly(&[0, 1, -2, 1]),
            poly(&[0, 0, 0, 0, 1, -2, 1]),
            poly(&[1]),
        ];
        assert_eq!(classify_algebraic(&comps).unwrap(), Verdict::Algebraic);
        let sing = discover_singular_points(&comps).unwrap();
        assert_eq!(
            sing,
            vec![
                ParamPoint::Finite(Rat::from_int(1)),
                ParamPoint::Infinity
            ]
        );
    }
}
