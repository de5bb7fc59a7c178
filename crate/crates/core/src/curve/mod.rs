//! Rational-curve model: parametrizations, explicit differential bases,
//! singular branch points, value semigroups, canonical (Rosenlicht)
//! differential bases, and abelian-integral data.
//!
//! A curve enters in one of three forms: a monomial curve given by a
//! Gorenstein semigroup, an explicit basis of canonical differentials with
//! declared singular branch points, or a parametrization. `resolve` brings
//! each to a common form (differential basis plus per-singularity data).

mod canonical;
mod classify;
mod local;
mod spec;

pub use canonical::canonical_basis;
pub use classify::{classify_algebraic, discover_singular_points, Verdict};
pub use local::base_point_partition;
pub use spec::CurveSpec;

use std::fmt;

use crate::algebra::{Antiderivative, Rat, RationalFunction, UniPoly};
use crate::error::Error;
use crate::semigroup::{NumericalSemigroup, Partition};
use crate::Result;

/// A point on the parameter line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamPoint {
    Finite(Rat),
    Infinity,
}

impl ParamPoint {
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            Ok(ParamPoint::Infinity)
        } else {
            Ok(ParamPoint::Finite(s.parse()?))
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamPoint::Finite(a) => write!(f, "{a}"),
            ParamPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// How the curve was specified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurveKind {
    Monomial(NumericalSemigroup),
    Explicit {
        differentials: Vec<RationalFunction>,
    },
    Parametrized {
        components: Vec<RationalFunction>,
    },
}

/// Per-singularity invariants.
#[derive(Clone, Debug)]
pub struct SingularityData {
    pub location: ParamPoint,
    pub semigroup: NumericalSemigroup,
    pub delta: u64,
    pub gaps: Vec<u64>,
    pub partition: Partition,
}

/// A curve with its canonical differential basis and singularity data in
/// hand; every downstream stage works from this.
#[derive(Clone, Debug)]
pub struct ResolvedCurve {
    pub spec: CurveSpec,
    pub differentials: Vec<RationalFunction>,
    pub singularities: Vec<SingularityData>,
}

impl ResolvedCurve {
    pub fn genus(&self) -> usize {
        self.differentials.len()
    }

    /// Index of the singularity owning each differential: the unique
    /// declared point where it has a pole (differentials from
    /// `canonical_basis` have poles at exactly one singularity; explicit
    /// bases are required to satisfy the same discipline for the grouped
    /// degree report, falling back to the dominant pole otherwise).
    pub fn differential_owners(&self) -> Vec<usize> {
        self.differentials
            .iter()
            .map(|w| {
                let mut owner = 0;
                let mut best = 0i64;
                for (j, s) in self.singularities.iter().enumerate() {
                    let ord = pole_order_at(w, &s.location);
                    if ord > best {
                        best = ord;
                        owner = j;
                    }
                }
                owner
            })
            .collect()
    }

    /// Gap weight of each differential: pole order at its singularity - 1.
    pub fn differential_gaps(&self) -> Vec<u64> {
        let owners = self.differential_owners();
        self.differentials
            .iter()
            .zip(&owners)
            .map(|(w, &j)| {
                let ord = pole_order_at(w, &self.singularities[j].location);
                (ord - 1).max(0) as u64
            })
            .collect()
    }
}

/// Pole order of F du at a point (0 when regular there).
pub fn pole_order_at(f: &RationalFunction, p: &ParamPoint) -> i64 {
    if f.is_zero() {
        return 0;
    }
    match p {
        ParamPoint::Finite(a) => (-f.order_at(a).unwrap()).max(0),
        // F du in v = 1/u has order ord_inf(F) - 2
        ParamPoint::Infinity => (2 - f.order_at_infinity().unwrap()).max(0),
    }
}

/// The monomial curve of a Gorenstein semigroup: differentials u^(w-1) du
/// for each gap w, one singularity at infinity, base point 0.
pub fn monomial_curve(s: &NumericalSemigroup) -> Result<CurveSpec> {
    if !s.is_gorenstein() {
        return Err(Error::NotGorenstein {
            location: "inf".into(),
            generators: join(s.generators()),
        });
    }
    if s.delta() == 0 {
        return Err(Error::SmoothSemigroup);
    }
    Ok(CurveSpec {
        kind: CurveKind::Monomial(s.clone()),
        singular_points: vec![ParamPoint::Infinity],
        base_point: Rat::zero(),
    })
}

fn join(xs: &[u64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Bring any curve specification to resolved form, validating as we go.
pub fn resolve(spec: &CurveSpec) -> Result<ResolvedCurve> {
    let spec = spec.normalized_base()?;
    match &spec.kind {
        CurveKind::Monomial(s) => {
            if !s.is_gorenstein() {
                return Err(Error::NotGorenstein {
                    location: "inf".into(),
                    generators: join(s.generators()),
                });
            }
            if s.delta() == 0 {
                return Err(Error::SmoothSemigroup);
            }
            let differentials = s
                .gaps()
                .iter()
                .map(|&w| {
                    RationalFunction::from_poly(UniPoly::monomial(Rat::one(), w as usize - 1))
                })
                .collect();
            let sing = SingularityData {
                location: ParamPoint::Infinity,
                semigroup: s.clone(),
                delta: s.delta(),
                gaps: s.gaps().to_vec(),
                partition: s.partition_from_gaps(),
            };
            Ok(ResolvedCurve {
                spec: spec.clone(),
                differentials,
                singularities: vec![sing],
            })
        }
        CurveKind::Explicit { differentials } => {
            let singularities = analyze_explicit(differentials, &spec.singular_points)?;
            Ok(ResolvedCurve {
                spec: spec.clone(),
                differentials: differentials.clone(),
                singularities,
            })
        }
        CurveKind::Parametrized { components } => {
            match classify_algebraic(components)? {
                Verdict::Algebraic => {}
                Verdict::NotAlgebraic { fibers } => {
                    return Err(Error::NotAlgebraic {
                        fiber: classify::format_fibers(&fibers),
                    });
                }
            }
            let discovered = discover_singular_points(components)?;
            if !spec.singular_points.is_empty() {
                for p in &spec.singular_points {
                    if !discovered.contains(p) {
                        return Err(Error::NotSingular(p.to_string()));
                    }
                }
                for p in &discovered {
                    if !spec.singular_points.contains(p) {
                        return Err(Error::NotSingular(format!(
                            "{p} is singular but was not declared"
                        )));
                    }
                }
            }
            for p in &discovered {
                if let ParamPoint::Finite(a) = p {
                    if a == &spec.base_point {
                        return Err(Error::BasePointCollision(a.to_string()));
                    }
                }
            }
            let (singularities, rings) = local::analyze_parametrized(components, &discovered)?;
            let differentials = canonical_basis_grouped(&singularities, &rings)?;
            let mut spec = spec.clone();
            spec.singular_points = discovered;
            Ok(ResolvedCurve {
                spec,
                differentials,
                singularities,
            })
        }
    }
}

fn canonical_basis_grouped(
    singularities: &[SingularityData],
    rings: &[local::LocalRing],
) -> Result<Vec<RationalFunction>> {
    let mut out = Vec::new();
    for (s, ring) in singularities.iter().zip(rings) {
        out.extend(canonical::block_basis(s, ring)?);
    }
    Ok(out)
}

/// Validate an explicit differential basis and read off the per-singularity
/// value semigroups from achievable pole orders.
fn analyze_explicit(
    differentials: &[RationalFunction],
    declared: &[ParamPoint],
) -> Result<Vec<SingularityData>> {
    let g = differentials.len();
    if g == 0 {
        return Ok(vec![]);
    }
    for w in differentials {
        if w.is_zero() {
            return Err(Error::GenusMismatch {
                expected: g,
                found: g - 1,
            });
        }
    }
    // every pole must be declared
    for w in differentials {
        let (roots, cofactor) = w.den().rational_roots();
        if cofactor.degree().unwrap_or(0) > 0 {
            return Err(Error::IrrationalSingularPoint(cofactor.to_string()));
        }
        for (a, _) in roots {
            let p = ParamPoint::Finite(a);
            if pole_order_at(w, &p) > 0 && !declared.contains(&p) {
                return Err(Error::PoleOutsideDeclared(p.to_string()));
            }
        }
        if pole_order_at(w, &ParamPoint::Infinity) > 0
            && !declared.contains(&ParamPoint::Infinity)
        {
            return Err(Error::PoleOutsideDeclared("inf".into()));
        }
    }

    let mut singularities = Vec::new();
    let mut stacked: Vec<Vec<Rat>> = vec![vec![]; g];
    for p in declared {
        let blocks: Vec<Vec<Rat>> = differentials
            .iter()
            .map(|w| principal_part(w, p))
            .collect();
        let width = blocks.iter().map(Vec::len).max().unwrap_or(0);
        if width == 0 {
            return Err(Error::NotSingular(p.to_string()));
        }
        // pad on the left so columns align by pole order: column j holds the
        // coefficient of order (width - j); the last column is the residue
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(g);
        for b in &blocks {
            let mut row = vec![Rat::zero(); width - b.len()];
            row.extend(b.iter().cloned());
            rows.push(row);
        }
        for row in &rows {
            if !row[width - 1].is_zero() {
                return Err(Error::NonzeroResidue {
                    location: p.to_string(),
                    residue: row[width - 1].to_string(),
                });
            }
        }
        let mut echelon = rows.clone();
        let pivots = crate::algebra::linalg::rref(&mut echelon);
        let orders: Vec<u64> = pivots.iter().map(|&c| (width - c) as u64).collect();
        let gaps: Vec<u64> = orders.iter().map(|&o| o - 1).collect();
        let semigroup = NumericalSemigroup::from_gaps(&gaps)
            .map_err(|_| Error::NotSingular(format!("{p}: pole orders {orders:?}")))?;
        if !semigroup.is_gorenstein() {
            return Err(Error::NotGorenstein {
                location: p.to_string(),
                generators: join(semigroup.generators()),
            });
        }
        if semigroup.delta() == 0 {
            return Err(Error::NotSingular(p.to_string()));
        }
        for (i, row) in rows.iter().enumerate() {
            stacked[i].extend(row.iter().cloned());
        }
        singularities.push(SingularityData {
            location: p.clone(),
            delta: semigroup.delta(),
            gaps: semigroup.gaps().to_vec(),
            partition: semigroup.partition_from_gaps(),
            semigroup,
        });
    }

    // independence and genus consistency
    if crate::algebra::linalg::rank(&stacked) != g {
        return Err(Error::GenusMismatch {
            expected: g,
            found: crate::algebra::linalg::rank(&stacked),
        });
    }
    let total: u64 = singularities.iter().map(|s| s.delta).sum();
    if total != g as u64 {
        return Err(Error::CanonicalDimension {
            expected: g,
            found: total as usize,
        });
    }
    Ok(singularities)
}

/// Principal-part coefficients of F du at p, ordered from the highest pole
/// order down to order 1 (so the residue is last). Empty when regular.
pub fn principal_part(f: &RationalFunction, p: &ParamPoint) -> Vec<Rat> {
    if f.is_zero() {
        return vec![];
    }
    match p {
        ParamPoint::Finite(a) => {
            let ord = f.order_at(a).unwrap();
            if ord >= 0 {
                return vec![];
            }
            let k = (-ord) as usize;
            let (v0, ser) = f.laurent_at(a, k);
            debug_assert_eq!(v0, ord);
            (0..k).map(|i| ser.coeff(i)).collect()
        }
        ParamPoint::Infinity => {
            // F du = -F(1/v) v^{-2} dv
            let ord = f.order_at_infinity().unwrap() - 2;
            if ord >= 0 {
                return vec![];
            }
            let k = (-ord) as usize;
            let (v0, ser) = f.laurent_at_infinity(k);
            debug_assert_eq!(v0 - 2, ord);
            (0..k).map(|i| -&ser.coeff(i)).collect()
        }
    }
}

/// Abelian-integral data: antiderivatives of the canonical basis and the
/// Taylor matrix of the Abel map at the base point.
#[derive(Clone, Debug)]
pub struct AbelData {
    pub antiderivatives: Vec<Antiderivative>,
    base_values: Vec<Rat>,
    pub max_gap: u64,
}

pub fn abel_data(curve: &ResolvedCurve) -> Result<AbelData> {
    let mut antiderivatives = Vec::with_capacity(curve.genus());
    for w in &curve.differentials {
        antiderivatives.push(w.antiderivative()?);
    }
    let base_values: Vec<Rat> = antiderivatives
        .iter()
        .map(|f| f.eval(&Rat::zero()).expect("base point is not a pole"))
        .collect();
    let max_gap = curve
        .singularities
        .iter()
        .flat_map(|s| s.gaps.iter().copied())
        .max()
        .unwrap_or(1);
    Ok(AbelData {
        antiderivatives,
        base_values,
        max_gap,
    })
}

impl AbelData {
    pub fn genus(&self) -> usize {
        self.antiderivatives.len()
    }

    /// Abel coordinates of a single point: z_j(u) = F_j(u) - F_j(0).
    /// None when u hits a pole.
    pub fn coords_at(&self, u: &Rat) -> Option<Vec<Rat>> {
        self.antiderivatives
            .iter()
            .zip(&self.base_values)
            .map(|(f, b)| f.eval(u).map(|v| &v - b))
            .collect()
    }

    /// The matrix A with z_j = sum_k A[j][k-1] * x_k, where x_k = p_k / k:
    /// A[j][k-1] is the Taylor coefficient of u^(k-1) in the integrand F_j,
    /// read off by differentiating the antiderivative's expansion.
    pub fn x_matrix(&self, cols: usize) -> Vec<Vec<Rat>> {
        self.antiderivatives
            .iter()
            .map(|f| {
                let anti_series = f
                    .to_rational_function()
                    .taylor_at_zero(cols + 1)
                    .expect("antiderivative regular at base");
                (1..=cols)
                    .map(|k| &anti_series.coeff(k) * &Rat::from_int(k as i64))
                    .collect()
            })
            .collect()
    }

    /// Same matrix in power-sum columns: z_j = sum A_p[j][k-1] * p_k.
    pub fn p_matrix(&self, cols: usize) -> Vec<Vec<Rat>> {
        self.x_matrix(cols)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .map(|(i, c)| &c * &Rat::from_frac(1, i as i64 + 1))
                    .collect()
            })
            .collect()
    }
}

/// Moebius change of coordinates u = a^2 v / (a v - 1), which fixes the base
/// point 0, moves the finite point a to infinity, and moves infinity to 1/a.
/// Differentials transform by F(u) du = F(m(v)) m'(v) dv.
pub fn move_singularity_to_infinity(curve: &ResolvedCurve, index: usize) -> Result<CurveSpec> {
    let a = match &curve.singularities[index].location {
        ParamPoint::Finite(a) => a.clone(),
        ParamPoint::Infinity => return Ok(curve.spec.clone()),
    };
    if a.is_zero() {
        return Err(Error::BasePointCollision("0".into()));
    }
    let a2 = &a * &a;
    // m(v) = a^2 v / (a v - 1), m'(v) = -a^2 / (a v - 1)^2
    let num = UniPoly::monomial(a2.clone(), 1);
    let den = UniPoly::new(vec![-&Rat::one(), a.clone()]);
    let moebius = RationalFunction::new(num, den.clone()).unwrap();
    let dm = RationalFunction::new(
        UniPoly::constant(-&a2),
        &den * &den,
    )
    .unwrap();
    let differentials: Vec<RationalFunction> = curve
        .differentials
        .iter()
        .map(|f| f.compose(&moebius).mul(&dm))
        .collect();
    let singular_points: Vec<ParamPoint> = curve
        .singularities
        .iter()
        .map(|s| match &s.location {
            ParamPoint::Finite(b) if *b == a => ParamPoint::Infinity,
            ParamPoint::Finite(b) => {
                // v = b / (a (b - a))
                ParamPoint::Finite(&b.clone() / &(&a * &(b - &a)))
            }
            ParamPoint::Infinity => ParamPoint::Finite(a.recip()),
        })
        .collect();
    Ok(CurveSpec {
        kind: CurveKind::Explicit { differentials },
        singular_points,
        base_point: Rat::zero(),
    })
}
