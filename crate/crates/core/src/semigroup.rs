//! Numerical semigroups, gap sets, the symmetry (Gorenstein) test, and the
//! gap-to-partition map, plus Maya diagrams of partitions.
//!
//! A numerical semigroup is stored by its minimal generating set together
//! with a membership bitmap reaching past the conductor, so membership
//! queries are O(1).

use std::fmt;

use crate::error::Error;
use crate::Result;

/// Additively closed subset of the naturals containing 0 with finite
/// complement (the gaps).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    /// membership[n] for n < membership.len(); beyond that everything is in.
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// Build from any generating set with gcd 1.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens.iter().fold(0u64, |a, &b| gcd(a, b)) != 1 {
            return Err(Error::NotNumericalSemigroup(gens));
        }
        let min_gen = gens[0];
        // sieve, growing the bound until a full run of min_gen members shows
        // everything beyond is attained
        let mut bound = (gens.last().unwrap() * min_gen + 2) as usize;
        loop {
            let mut member = vec![false; bound];
            member[0] = true;
            for n in 0..bound {
                if member[n] {
                    for &g in &gens {
                        let m = n + g as usize;
                        if m < bound {
                            member[m] = true;
                        }
                    }
                }
            }
            if let Some(c) = run_start(&member, min_gen as usize) {
                return Ok(Self::from_bitmap(member, c as u64));
            }
            bound *= 2;
        }
    }

    /// Build from the gap set; validates that the complement is closed.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.contains(&0) {
            return Err(Error::InvalidGapSet(gaps));
        }
        if gaps.is_empty() {
            return Ok(NumericalSemigroup {
                generators: vec![1],
                gaps: vec![],
                conductor: 0,
                membership: vec![true, true],
            });
        }
        let frobenius = *gaps.last().unwrap() as usize;
        let size = frobenius + 2;
        let mut member = vec![true; size];
        for &g in &gaps {
            member[g as usize] = false;
        }
        // closure check: sums of members must be members
        for a in 1..size {
            if !member[a] {
                continue;
            }
            for b in a..size {
                if a + b > frobenius {
                    break;
                }
                if member[b] && !member[a + b] {
                    return Err(Error::InvalidGapSet(gaps));
                }
            }
        }
        Ok(Self::from_bitmap(member, frobenius as u64 + 1))
    }

    fn from_bitmap(mut member: Vec<bool>, conductor: u64) -> Self {
        let min_gen = (1..member.len())
            .find(|&n| member[n])
            .unwrap_or(member.len());
        let needed = conductor as usize + min_gen + 2;
        if member.len() < needed {
            member.resize(needed, true);
        }
        let gaps: Vec<u64> = (1..conductor as usize)
            .filter(|&n| !member[n])
            .map(|n| n as u64)
            .collect();
        // minimal generators: members not expressible as a sum of two
        // positive members; all lie below conductor + min_gen
        let mut generators = Vec::new();
        for n in 1..needed {
            if !member[n] {
                continue;
            }
            let decomposable = (1..n).any(|a| member[a] && member[n - a] && n - a > 0);
            if !decomposable {
                generators.push(n as u64);
            }
            if n as u64 >= conductor + min_gen as u64 {
                break;
            }
        }
        NumericalSemigroup {
            generators,
            gaps,
            conductor,
            membership: member,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        if n as usize >= self.membership.len() {
            n >= self.conductor
        } else {
            self.membership[n as usize]
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Gaps in ascending order.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Least c with c + N contained in the semigroup.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The symmetry test: w not in H iff 2*delta - 1 - w in H, for all
    /// 0 <= w < 2*delta. Equivalent to the singularity being Gorenstein.
    pub fn is_gorenstein(&self) -> bool {
        let d = self.delta();
        if d == 0 {
            return true;
        }
        let top = 2 * d - 1;
        (0..=top).all(|w| self.contains(w) != self.contains(top - w))
    }

    /// The partition (w_d, .., w_1) - (d-1, .., 0), componentwise.
    pub fn partition_from_gaps(&self) -> Partition {
        let d = self.gaps.len();
        let parts: Vec<u64> = (0..d)
            .map(|i| self.gaps[d - 1 - i] - (d - 1 - i) as u64)
            .collect();
        Partition::new(parts).expect("gap partition is weakly decreasing")
    }

    fn fmt_generators(&self) -> String {
        let strs: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", strs.join(","))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_generators())
    }
}

/// All symmetric (Gorenstein) numerical semigroups with 1 <= delta <=
/// delta_max, enumerated by choosing symmetric gap sets directly and
/// validating closure. Guarded at delta_max <= 8.
pub fn enumerate_gorenstein(delta_max: u64) -> Result<Vec<NumericalSemigroup>> {
    const GUARD: u64 = 8;
    if delta_max > GUARD {
        return Err(Error::DeltaBoundExceeded(delta_max, GUARD));
    }
    let mut out = Vec::new();
    for d in 1..=delta_max {
        // pairs (w, 2d-1-w): exactly one side is a gap; 0 in H forces
        // 2d-1 to be a gap; remaining d-1 pairs are free bits
        let free = (d - 1) as u32;
        for mask in 0u32..(1 << free) {
            let mut gaps = vec![2 * d - 1];
            for (bit, w) in (1..d).enumerate() {
                if mask >> bit & 1 == 0 {
                    gaps.push(w);
                } else {
                    gaps.push(2 * d - 1 - w);
                }
            }
            if let Ok(s) = NumericalSemigroup::from_gaps(&gaps) {
                debug_assert!(s.is_gorenstein());
                out.push(s);
            }
        }
    }
    out.sort_by(|a, b| {
        (a.delta(), a.gaps.clone()).cmp(&(b.delta(), b.gaps.clone()))
    });
    out.dedup();
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// First index c such that member[c..c+run] is all true.
fn run_start(member: &[bool], run: usize) -> Option<usize> {
    let mut count = 0;
    let mut start = 0;
    for (i, &m) in member.iter().enumerate() {
        if m {
            if count == 0 {
                start = i;
            }
            count += 1;
            if count >= run {
                return Some(start);
            }
        } else {
            count = 0;
        }
    }
    None
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("invalid partition {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based index i, 0 beyond the end.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// |lambda|, the sum of parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c as u64).count() as u64)
            .collect();
        Partition { parts }
    }

    /// Componentwise containment (Young diagram inclusion).
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Maya diagram entries m_i = lambda_i - i, stored up to the point where
    /// m_i = -i for good.
    pub fn maya(&self) -> MayaDiagram {
        let prefix = (1..=self.parts.len())
            .map(|i| self.parts[i - 1] as i64 - i as i64)
            .collect();
        MayaDiagram { prefix }
    }

    /// All partitions of weight exactly n.
    pub fn all_of_weight(n: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = remaining.min(max_part);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Strictly decreasing integers m_1 > m_2 > ..., with m_i = -i beyond the
/// stored prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MayaDiagram {
    prefix: Vec<i64>,
}

impl MayaDiagram {
    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// Entry m_i for any 1-based index.
    pub fn entry(&self, i: usize) -> i64 {
        if i <= self.prefix.len() {
            self.prefix[i - 1]
        } else {
            -(i as i64)
        }
    }

    /// Inverse of `Partition::maya`.
    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u64> = self
            .prefix
            .iter()
            .enumerate()
            .map(|(i, &m)| (m + i as i64 + 1) as u64)
            .take_while(|&p| p > 0)
            .collect();
        Partition { parts }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn semigroup_456() {
        let s = sg(&[4, 5, 6]);
        assert_eq!(s.gaps(), &[1, 2, 3, 7]);
        assert_eq!(s.delta(), 4);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.generators(), &[4, 5, 6]);
        assert!(s.is_gorenstein());
    }

    #[test]
    fn semigroup_trivial() {
        let s = sg(&[1]);
        assert!(s.gaps().is_empty());
        assert_eq!(s.delta(), 0);
        assert!(s.is_gorenstein());
    }

    #[test]
    fn semigroup_2_9() {
        let s = sg(&[2, 9]);
        assert_eq!(s.gaps(), &[1, 3, 5, 7]);
        assert_eq!(s.delta(), 4);
        assert!(s.is_gorenstein());
    }

    #[test]
    fn rejects_gcd_not_one() {
        assert!(matches!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotNumericalSemigroup(_))
        ));
    }

    #[test]
    fn gorenstein_hyperelliptic_g3() {
        // <2, 2g+1> for g = 3
        let s = sg(&[2, 7]);
        assert_eq!(s.gaps(), &[1, 3, 5]);
        assert!(s.is_gorenstein());
    }

    #[test]
    fn not_gorenstein_357() {
        let s = sg(&[3, 5, 7]);
        assert_eq!(s.gaps(), &[1, 2, 4]);
        assert!(!s.is_gorenstein());
    }

    #[test]
    fn partitions_from_gaps() {
        assert_eq!(
            sg(&[4, 5, 6]).partition_from_gaps(),
            Partition::new(vec![4, 1, 1, 1]).unwrap()
        );
        assert_eq!(
            sg(&[2, 9]).partition_from_gaps(),
            Partition::new(vec![4, 3, 2, 1]).unwrap()
        );
        assert_eq!(
            sg(&[2, 3]).partition_from_gaps(),
            Partition::new(vec![1]).unwrap()
        );
        assert_eq!(sg(&[1]).partition_from_gaps(), Partition::empty());
    }

    #[test]
    fn maya_examples() {
        let p = Partition::new(vec![1]).unwrap();
        assert_eq!(p.maya().prefix(), &[0]);
        let p = Partition::new(vec![4, 1, 1, 1]).unwrap();
        assert_eq!(p.maya().prefix(), &[3, -1, -2, -3]);
        assert_eq!(Partition::empty().maya().prefix(), &[] as &[i64]);
        assert_eq!(p.maya().to_partition(), p);
    }

    #[test]
    fn enumerate_small() {
        let one = enumerate_gorenstein(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].generators(), &[2, 3]);

        let two = enumerate_gorenstein(2).unwrap();
        let delta2: Vec<_> = two.iter().filter(|s| s.delta() == 2).collect();
        assert_eq!(delta2.len(), 1);
        assert_eq!(delta2[0].generators(), &[2, 5]);

        // counts of symmetric semigroups by genus: 1, 1, 2, 3, 3
        let five = enumerate_gorenstein(5).unwrap();
        let counts: Vec<usize> = (1..=5)
            .map(|d| five.iter().filter(|s| s.delta() == d).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 3]);
        assert!(five.iter().all(|s| s.is_gorenstein()));
        assert!(enumerate_gorenstein(9).is_err());
    }

    #[test]
    fn gorenstein_gap_extremes() {
        for s in enumerate_gorenstein(8).unwrap() {
            let d = s.delta();
            assert_eq!(s.gaps()[0], 1);
            assert_eq!(*s.gaps().last().unwrap(), 2 * d - 1);
            assert_eq!(s.conductor(), 2 * d);
        }
    }

    #[test]
    fn gorenstein_partition_shape() {
        for s in enumerate_gorenstein(6).unwrap() {
            let lam = s.partition_from_gaps();
            assert_eq!(lam.conjugate(), lam, "self-conjugate: {s}");
            let d = s.delta();
            let staircase = Partition::new((1..=d).rev().collect()).unwrap();
            assert!(staircase.contains(&lam), "staircase contains {lam}");
        }
    }

    #[test]
    fn weight_identity_all_semigroups() {
        // |partition| = sum(gaps) - d(d-1)/2 over every numerical semigroup
        // with delta <= 8, enumerated independently by gap-set search.
        let all = enumerate_all_semigroups(8);
        assert_eq!(all.iter().filter(|s| s.delta() == 8).count(), 67);
        for s in &all {
            let d = s.delta();
            let w: u64 = s.gaps().iter().sum();
            assert_eq!(s.partition_from_gaps().weight(), w - d * (d - 1) / 2);
            assert!(s.conductor() <= 2 * d);
        }
    }

    /// Exhaustive oracle: all numerical semigroups with delta <= dmax, by
    /// brute force over gap sets inside [1, 2*dmax - 1].
    fn enumerate_all_semigroups(dmax: u64) -> Vec<NumericalSemigroup> {
        let mut out = vec![];
        for d in 1..=dmax {
            let top = 2 * d - 1;
            // choose d gaps among 1..=top (the Frobenius number is < 2*delta)
            let candidates: Vec<u64> = (1..=top).collect();
            fn rec(
                cands: &[u64],
                d: usize,
                start: usize,
                cur: &mut Vec<u64>,
                out: &mut Vec<NumericalSemigroup>,
            ) {
                if cur.len() == d {
                    if let Ok(s) = NumericalSemigroup::from_gaps(cur) {
                        if s.delta() == d as u64 {
                            out.push(s);
                        }
                    }
                    return;
                }
                for i in start..cands.len() {
                    cur.push(cands[i]);
                    rec(cands, d, i + 1, cur, out);
                    cur.pop();
                }
            }
            let mut cur = Vec::new();
            rec(&candidates, d as usize, 0, &mut cur, &mut out);
        }
        out
    }

    #[test]
    fn maya_roundtrip_random_shapes() {
        for n in 0..=10u64 {
            for p in Partition::all_of_weight(n) {
                assert_eq!(p.maya().to_partition(), p);
                let m = p.maya();
                for i in 1..m.prefix().len() {
                    assert!(m.prefix()[i - 1] > m.prefix()[i]);
                }
            }
        }
    }
}
