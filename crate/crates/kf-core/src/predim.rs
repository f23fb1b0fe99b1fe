//! Predimension calculus: the control function with exact comparisons, class
//! membership, d-closedness, self-sufficiency, closure and dimension.
//!
//! Class checks never materialize irrational control values; every comparison
//! against the control function routes through exact integer or rational
//! arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::Signed;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{q, q_str, Q};

/// Hard cap for exhaustive subset scans (closure, d-closedness and friends
/// are exponential in the ambient size).
pub const SUBSET_SCAN_CAP: usize = 20;

/// Tail of the control function for sizes beyond the last breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// `f(n) = 6 + log_3(n / 6)`; requires the last breakpoint to be `(6, 6)`.
    LogBase3,
    /// Explicit monotone values at consecutive integer sizes after the last
    /// breakpoint. Makes no slow-growth promise.
    RationalTable(Vec<(u64, Q)>),
    /// Explicit monotone values whose slow-growth bound
    /// `f(3t) <= f(t) + 1` is verified on construction for every covered `t`
    /// at or beyond the junction.
    SlowTable(Vec<(u64, Q)>),
}

/// The control function: a positive rational `alpha`, piecewise-linear
/// breakpoints, and a tail specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFunction {
    alpha: Q,
    breakpoints: Vec<(u64, Q)>,
    tail: Tail,
}

impl Default for GoodFunction {
    fn default() -> Self {
        GoodFunction::standard()
    }
}

impl GoodFunction {
    /// The standard configuration: `alpha = 2`, breakpoints
    /// `f(1)=2, f(4)=5, f(6)=6` interpolated linearly, logarithmic tail.
    pub fn standard() -> GoodFunction {
        GoodFunction {
            alpha: q(2),
            breakpoints: vec![(1, q(2)), (4, q(5)), (6, q(6))],
            tail: Tail::LogBase3,
        }
    }

    pub fn new(alpha: Q, breakpoints: Vec<(u64, Q)>, tail: Tail) -> Result<GoodFunction> {
        let bad = |msg: String| Err(Error::InvalidControlFunction(msg));
        if !alpha.is_positive() {
            return bad(format!("alpha must be positive, got {}", q_str(&alpha)));
        }
        if breakpoints.is_empty() {
            return bad("at least one breakpoint is required".into());
        }
        if breakpoints[0].0 != 1 {
            return bad("the first breakpoint must be at size 1".into());
        }
        for w in breakpoints.windows(2) {
            if w[1].0 <= w[0].0 {
                return bad("breakpoint sizes must be strictly increasing".into());
            }
            if w[1].1 < w[0].1 {
                return bad("breakpoint values must be non-decreasing".into());
            }
        }
        let (last_n, last_v) = breakpoints.last().cloned().expect("non-empty");
        match &tail {
            Tail::LogBase3 => {
                // The logarithmic tail is anchored at (6, 6); the junction is
                // continuous only for that breakpoint.
                if last_n != 6 || last_v != q(6) {
                    return bad(
                        "the log tail requires the last breakpoint to be exactly (6, 6)".into(),
                    );
                }
            }
            Tail::RationalTable(entries) | Tail::SlowTable(entries) => {
                if entries.is_empty() {
                    return bad("a table tail needs at least one entry".into());
                }
                if entries[0].0 != last_n + 1 {
                    return bad(format!(
                        "table tail must start at size {} (one past the last breakpoint)",
                        last_n + 1
                    ));
                }
                for w in entries.windows(2) {
                    if w[1].0 != w[0].0 + 1 {
                        return bad("table tail sizes must be consecutive integers".into());
                    }
                    if w[1].1 < w[0].1 {
                        return bad("table tail values must be non-decreasing".into());
                    }
                }
                if entries[0].1 < last_v {
                    return bad("table tail must not drop below the last breakpoint value".into());
                }
            }
        }
        let cfg = GoodFunction {
            alpha,
            breakpoints,
            tail,
        };
        if let Tail::SlowTable(entries) = &cfg.tail {
            // The declared slow-growth witness: f(3t) <= f(t) + 1 for every
            // covered t at or past the junction.
            let max_n = entries.last().expect("non-empty").0;
            for t in last_n..=max_n / 3 {
                match cfg.growth_at(&q(1), t)? {
                    GrowthPoint::Exact { holds: false } | GrowthPoint::Analytic { holds: false } => {
                        return Err(Error::InvalidControlFunction(format!(
                            "slow tail violates f(3t) <= f(t) + 1 at t = {t}"
                        )));
                    }
                    _ => {}
                }
            }
        }
        Ok(cfg)
    }

    pub fn alpha(&self) -> &Q {
        &self.alpha
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn breakpoints_cloned(&self) -> Vec<(u64, Q)> {
        self.breakpoints.clone()
    }

    /// Largest size with a represented control value; `None` when the tail
    /// covers every size (the logarithmic tail).
    pub fn covered_up_to(&self) -> Option<u64> {
        match &self.tail {
            Tail::LogBase3 => None,
            Tail::RationalTable(v) | Tail::SlowTable(v) => {
                Some(v.last().expect("validated non-empty").0)
            }
        }
    }

    pub fn junction(&self) -> u64 {
        self.breakpoints.last().expect("non-empty").0
    }

    /// Exact value `f(n)` when it is rational and representable: breakpoint
    /// region and table tails give `Some`, the logarithmic region gives
    /// `None` (the value is irrational there).
    pub fn value_at(&self, n: u64) -> Result<Option<Q>> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let (last_n, last_v) = self.breakpoints.last().expect("non-empty");
        if n <= *last_n {
            for w in self.breakpoints.windows(2) {
                let ((n0, v0), (n1, v1)) = (&w[0], &w[1]);
                if n >= *n0 && n <= *n1 {
                    let t = (q(n as i64) - q(*n0 as i64)) / (q(*n1 as i64) - q(*n0 as i64));
                    return Ok(Some(v0 + (v1 - v0) * t));
                }
            }
            // Single breakpoint at size 1.
            return Ok(Some(last_v.clone()));
        }
        match &self.tail {
            Tail::LogBase3 => {
                if n == 6 {
                    Ok(Some(q(6)))
                } else {
                    Ok(None)
                }
            }
            Tail::RationalTable(entries) | Tail::SlowTable(entries) => entries
                .iter()
                .find(|(m, _)| *m == n)
                .map(|(_, v)| Some(v.clone()))
                .ok_or(Error::TailNotCovered(n)),
        }
    }

    /// Exact three-way comparison of `d` against `f(n)`.
    pub fn compare(&self, d: &Q, n: u64) -> Result<Ordering> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if let Some(v) = self.value_at(n)? {
            return Ok(d.cmp(&v));
        }
        // Logarithmic region: d vs 6 + log_3(n / 6) for n > 6, decided by
        // comparing 3^(p - 6q) * 6^q with n^q in exact integer arithmetic,
        // where d = p / q.
        let p = d.numer().clone();
        let qd = d.denom().clone();
        let a = &p - BigInt::from(6) * &qd;
        let qd_u = u32::try_from(&qd % BigInt::from(u32::MAX)).unwrap_or(u32::MAX);
        let qd_u = if BigInt::from(qd_u) == qd {
            qd_u
        } else {
            return Err(Error::UnsupportedBound(format!(
                "denominator of {} too large for the exact log comparison",
                q_str(d)
            )));
        };
        let exp_ok = |e: &BigInt| -> Result<u32> {
            u32::try_from(e.clone()).map_err(|_| {
                Error::UnsupportedBound(format!("exponent {e} too large for exact comparison"))
            })
        };
        let n_big = BigInt::from(n);
        let (lhs, rhs) = if !a.is_negative() {
            let e = exp_ok(&a)?;
            (
                BigInt::from(3).pow(e) * BigInt::from(6).pow(qd_u),
                n_big.pow(qd_u),
            )
        } else {
            let e = exp_ok(&(-&a))?;
            (
                BigInt::from(6).pow(qd_u),
                n_big.pow(qd_u) * BigInt::from(3).pow(e),
            )
        };
        Ok(lhs.cmp(&rhs))
    }

    /// Largest `n` with `f(n) <= d`.
    pub fn max_size_at(&self, d: &Q) -> Result<u64> {
        if self.compare(d, 1)? == Ordering::Less {
            return Err(Error::BelowMinimum(q_str(d)));
        }
        let (last_n, last_v) = self.breakpoints.last().expect("non-empty");
        if d < last_v {
            // Strictly inside the breakpoint region.
            let mut best = 1u64;
            for w in self.breakpoints.windows(2) {
                let ((n0, v0), (n1, v1)) = (&w[0], &w[1]);
                if d >= v1 {
                    best = best.max(*n1);
                    continue;
                }
                if d >= v0 {
                    // v0 <= d < v1 forces v1 > v0 on this segment.
                    let span = q(*n1 as i64) - q(*n0 as i64);
                    let frac = (d - v0) / (v1 - v0) * span;
                    let extra = u64::try_from(frac.floor().to_integer()).unwrap_or(0);
                    best = best.max(n0 + extra);
                }
            }
            return Ok(best);
        }
        match &self.tail {
            Tail::LogBase3 => {
                // n_max = floor((6^q * 3^(p - 6q))^(1/q)) for d = p/q >= 6.
                let p = d.numer().clone();
                let qd = d.denom().clone();
                let a = &p - BigInt::from(6) * &qd;
                let qd_u = u32::try_from(qd.clone()).map_err(|_| {
                    Error::UnsupportedBound("denominator too large".to_string())
                })?;
                let a_u = u32::try_from(a)
                    .map_err(|_| Error::UnsupportedBound("value too large".to_string()))?;
                let radicand = BigInt::from(6).pow(qd_u) * BigInt::from(3).pow(a_u);
                let root = radicand.nth_root(qd_u);
                let mut best = u64::try_from(root).map_err(|_| {
                    Error::UnsupportedBound(format!("no finite bound at {}", q_str(d)))
                })?;
                // Exact floor already, but keep the invariant airtight.
                while self.compare(d, best + 1)? != Ordering::Less {
                    best += 1;
                }
                while best > 1 && self.compare(d, best)? == Ordering::Less {
                    best -= 1;
                }
                Ok(best)
            }
            Tail::RationalTable(entries) | Tail::SlowTable(entries) => {
                let (max_n, max_v) = entries.last().expect("non-empty");
                if d >= max_v {
                    // f may stay below d past the covered range.
                    return Err(Error::TailNotCovered(max_n + 1));
                }
                let mut best = *last_n;
                for (n, v) in entries {
                    if v <= d {
                        best = best.max(*n);
                    }
                }
                Ok(best)
            }
        }
    }

    /// Checks `f(3t) <= f(t) + k` at a single `t`.
    pub fn growth_at(&self, k: &Q, t: u64) -> Result<GrowthPoint> {
        if t == 0 {
            return Err(Error::ZeroSize);
        }
        match self.value_at(t)? {
            Some(ft) => {
                let bound = ft + k;
                let holds = self.compare(&bound, 3 * t)? != Ordering::Less;
                Ok(GrowthPoint::Exact { holds })
            }
            None => {
                // Both t and 3t sit in the logarithmic region, where
                // f(3t) = f(t) + 1 identically.
                Ok(GrowthPoint::Analytic { holds: *k >= q(1) })
            }
        }
    }
}

/// Outcome of a single slow-growth check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthPoint {
    /// Decided by exact rational comparison of represented values.
    Exact { holds: bool },
    /// Decided by the identity `log_3(3t) = log_3(t) + 1`.
    Analytic { holds: bool },
}

impl GrowthPoint {
    pub fn holds(&self) -> bool {
        match self {
            GrowthPoint::Exact { holds } | GrowthPoint::Analytic { holds } => *holds,
        }
    }
}

// ---------------------------------------------------------------------------
// Predimension and subset scans
// ---------------------------------------------------------------------------

/// `alpha * |V| - |E|`, exactly.
pub fn predimension(g: &Graph, cfg: &GoodFunction) -> Q {
    cfg.alpha.clone() * q(g.n() as i64) - q(g.edge_count() as i64)
}

/// Per-mask predimension numerators over a fixed denominator, with a
/// min-over-strict-supersets table for the closedness predicates.
pub(crate) struct DeltaTable {
    n: usize,
    den: i64,
    nums: Vec<i64>,
    min_strict_sup: Vec<i64>,
}

impl DeltaTable {
    pub(crate) fn new(g: &Graph, cfg: &GoodFunction) -> Result<DeltaTable> {
        let n = g.n();
        if n > SUBSET_SCAN_CAP {
            return Err(Error::TooLarge {
                n,
                cap: SUBSET_SCAN_CAP,
            });
        }
        let p: i64 = i64::try_from(cfg.alpha.numer().clone())
            .map_err(|_| Error::UnsupportedBound("alpha numerator too large".into()))?;
        let den: i64 = i64::try_from(cfg.alpha.denom().clone())
            .map_err(|_| Error::UnsupportedBound("alpha denominator too large".into()))?;
        let size = 1usize << n;
        let mut nums = vec![0i64; size];
        for mask in 1..size {
            let v = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let new_edges = (g.adj_mask(v) & rest as u64).count_ones() as i64;
            nums[mask] = nums[rest] + p - den * new_edges;
        }
        // min over supersets including the mask itself
        let mut incl = nums.clone();
        for b in 0..n {
            let bit = 1usize << b;
            for mask in 0..size {
                if mask & bit == 0 {
                    incl[mask] = incl[mask].min(incl[mask | bit]);
                }
            }
        }
        let mut min_strict_sup = vec![i64::MAX; size];
        for mask in 0..size {
            for b in 0..n {
                let bit = 1usize << b;
                if mask & bit == 0 {
                    min_strict_sup[mask] = min_strict_sup[mask].min(incl[mask | bit]);
                }
            }
        }
        Ok(DeltaTable {
            n,
            den,
            nums,
            min_strict_sup,
        })
    }

    pub(crate) fn delta(&self, mask: u64) -> Q {
        Q::new(
            BigInt::from(self.nums[mask as usize]),
            BigInt::from(self.den),
        )
    }

    pub(crate) fn is_d_closed(&self, mask: u64) -> bool {
        self.min_strict_sup[mask as usize] > self.nums[mask as usize]
    }

    pub(crate) fn is_self_sufficient(&self, mask: u64) -> bool {
        self.min_strict_sup[mask as usize] >= self.nums[mask as usize]
    }

    /// Smallest d-closed superset, scanning supersets by size then value.
    pub(crate) fn closure(&self, mask: u64) -> u64 {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let comp = full & !mask;
        let mut supersets: Vec<u64> = Vec::with_capacity(1 << comp.count_ones());
        let mut s = comp;
        loop {
            supersets.push(mask | s);
            if s == 0 {
                break;
            }
            s = (s - 1) & comp;
        }
        supersets.sort_by_key(|m| (m.count_ones(), *m));
        for sup in supersets {
            if self.is_d_closed(sup) {
                return sup;
            }
        }
        full // the full set is vacuously d-closed
    }
}

/// `A` is d-closed in `d`: every strict superset inside `d` has strictly
/// larger predimension. Exhaustive over all supersets.
pub fn is_d_closed(a: &VertexSet, d: &Graph, cfg: &GoodFunction) -> Result<bool> {
    let mask = d.mask_of(a)?;
    let table = DeltaTable::new(d, cfg)?;
    Ok(table.is_d_closed(mask))
}

/// `A` is self-sufficient in `d`: every superset has predimension at least
/// `delta(A)`.
pub fn is_self_sufficient(a: &VertexSet, d: &Graph, cfg: &GoodFunction) -> Result<bool> {
    let mask = d.mask_of(a)?;
    let table = DeltaTable::new(d, cfg)?;
    Ok(table.is_self_sufficient(mask))
}

/// The unique smallest d-closed subset of `d` containing `a`.
pub fn closure(a: &VertexSet, d: &Graph, cfg: &GoodFunction) -> Result<VertexSet> {
    let mask = d.mask_of(a)?;
    let table = DeltaTable::new(d, cfg)?;
    Ok(d.set_of(table.closure(mask)))
}

/// Predimension of the closure.
pub fn dimension(a: &VertexSet, d: &Graph, cfg: &GoodFunction) -> Result<Q> {
    let mask = d.mask_of(a)?;
    let table = DeltaTable::new(d, cfg)?;
    Ok(table.delta(table.closure(mask)))
}

/// Smallest violating induced subgraph, if any: the first subset (by size,
/// then by position order) whose predimension drops below the control value.
pub fn class_violation(g: &Graph, cfg: &GoodFunction) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let table = DeltaTable::new(g, cfg)?;
    // Minimal admissible numerator per subset size: the smallest integer m
    // with m / den >= f(s).
    let den = i64::try_from(cfg.alpha.denom().clone()).expect("validated in DeltaTable");
    let mut min_num = vec![0i64; n + 1];
    for (s, slot) in min_num.iter_mut().enumerate().skip(1) {
        *slot = match cfg.value_at(s as u64)? {
            Some(v) => {
                let need = v * q(den);
                i64::try_from(need.ceil().to_integer())
                    .map_err(|_| Error::UnsupportedBound("control value too large".into()))?
            }
            None => {
                // Logarithmic region: binary search the threshold.
                let (mut lo, mut hi) = (6 * den, 6 * den + 128 * den.max(1));
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    let d = Q::new(BigInt::from(mid), BigInt::from(den));
                    if cfg.compare(&d, s as u64)? == Ordering::Less {
                        lo = mid + 1;
                    } else {
                        hi = mid;
                    }
                }
                lo
            }
        };
    }
    for size in 1..=n {
        for mask in 1u64..1 << n {
            if mask.count_ones() as usize != size {
                continue;
            }
            if table.nums[mask as usize] < min_num[size] {
                return Ok(Some(g.set_of(mask)));
            }
        }
    }
    Ok(None)
}

/// Membership: every nonempty induced subgraph clears the control function.
/// The empty graph is in the class by convention.
pub fn in_class(g: &Graph, cfg: &GoodFunction) -> Result<bool> {
    Ok(class_violation(g, cfg)?.is_none())
}

/// All class members on at most `max_n` vertices, one per isomorphism class.
/// Generated by edge augmentation: the class is closed under edge deletion,
/// so every member is reachable from an edgeless graph.
pub fn kf_members_up_to_iso(cfg: &GoodFunction, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let start = Graph::build(&refs, &[]);
        if !in_class(&start, cfg)? {
            continue;
        }
        let mut seen: BTreeSet<crate::graph::CanonicalForm> = BTreeSet::new();
        seen.insert(start.canonical_form());
        out.push(start.clone());
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for i in 0..n {
                    for j in i + 1..n {
                        if g.adjacent(i, j) {
                            continue;
                        }
                        let vs = g.labels().to_vec();
                        let mut es = g.edge_labels();
                        es.push((g.label(i).to_string(), g.label(j).to_string()));
                        let h = Graph::from_parts(vs, es).expect("augmentation valid");
                        if !in_class(&h, cfg)? {
                            continue;
                        }
                        if seen.insert(h.canonical_form()) {
                            out.push(h.clone());
                            next.push(h);
                        }
                    }
                }
            }
            frontier = next;
        }
    }
    Ok(out)
}

/// Distinct lattice points `(|X|, delta(X))` realized by class members of
/// size at most `max_n`, including `(0, 0)` for the empty graph.
pub fn realizable_points(cfg: &GoodFunction, max_n: usize) -> Result<Vec<(u64, Q)>> {
    let mut set: BTreeSet<(u64, String)> = BTreeSet::new();
    let mut out = Vec::new();
    for g in kf_members_up_to_iso(cfg, max_n)? {
        let p = (g.n() as u64, predimension(&g, cfg));
        if set.insert((p.0, q_str(&p.1))) {
            out.push(p);
        }
    }
    out.sort_by(|a, b| (a.0, a.1.clone()).cmp(&(b.0, b.1.clone())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::rational::q_ratio;

    fn cfg() -> GoodFunction {
        GoodFunction::standard()
    }

    fn c6() -> Graph {
        Graph::cycle(&["v1", "v2", "v3", "v4", "v5", "v6"])
    }

    #[test]
    fn predimension_examples() {
        let one = Graph::build(&["a"], &[]);
        assert_eq!(predimension(&one, &cfg()), q(2));
        let edge = Graph::build(&["a", "b"], &[("a", "b")]);
        assert_eq!(predimension(&edge, &cfg()), q(3));
        assert_eq!(predimension(&c6(), &cfg()), q(6));
    }

    #[test]
    fn compare_examples() {
        // Interpolation between (4, 5) and (6, 6).
        assert_eq!(cfg().compare(&q_ratio(11, 2), 5).unwrap(), Ordering::Equal);
        // 6 * 3^(7-6) = 18 exactly.
        assert_eq!(cfg().compare(&q(7), 18).unwrap(), Ordering::Equal);
        assert_eq!(cfg().compare(&q(7), 17).unwrap(), Ordering::Greater);
        assert_eq!(cfg().compare(&q(7), 19).unwrap(), Ordering::Less);
        assert_eq!(cfg().compare(&q(2), 1).unwrap(), Ordering::Equal);
        // Non-integer d in the logarithmic region: f(10) vs 13/2, i.e.
        // 3^(1/2) vs 10/6: 3 * 36 > 100.
        assert_eq!(cfg().compare(&q_ratio(13, 2), 10).unwrap(), Ordering::Greater);
        assert!(matches!(cfg().compare(&q(2), 0), Err(Error::ZeroSize)));
        // f(2) = 3 by interpolation.
        assert_eq!(cfg().compare(&q(3), 2).unwrap(), Ordering::Equal);
        assert_eq!(cfg().compare(&q(4), 3).unwrap(), Ordering::Equal);
    }

    #[test]
    fn max_size_examples() {
        assert_eq!(cfg().max_size_at(&q(4)).unwrap(), 3);
        assert_eq!(cfg().max_size_at(&q(5)).unwrap(), 4);
        assert_eq!(cfg().max_size_at(&q(6)).unwrap(), 6);
        assert_eq!(cfg().max_size_at(&q(7)).unwrap(), 18);
        assert_eq!(cfg().max_size_at(&q(8)).unwrap(), 54);
        assert!(matches!(
            cfg().max_size_at(&q(1)),
            Err(Error::BelowMinimum(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let triangle = Graph::cycle(&["a", "b", "c"]);
        assert!(!in_class(&triangle, &cfg()).unwrap());
        assert!(in_class(&c6(), &cfg()).unwrap());
        let c5 = Graph::cycle(&["a", "b", "c", "d", "e"]);
        assert!(!in_class(&c5, &cfg()).unwrap());
        // The violation witness for a triangle is the triangle itself.
        let w = class_violation(&triangle, &cfg()).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert!(in_class(&Graph::empty(), &cfg()).unwrap());
        assert!(in_class(&Graph::path(&["a", "b", "c", "d"]), &cfg()).unwrap());
    }

    #[test]
    fn d_closed_examples() {
        let g = c6();
        assert!(is_d_closed(&vset(["v1", "v4"]), &g, &cfg()).unwrap());
        assert!(!is_d_closed(&vset(["v1", "v3"]), &g, &cfg()).unwrap());
        assert!(is_d_closed(&g.vertex_set(), &g, &cfg()).unwrap());
    }

    #[test]
    fn self_sufficiency_examples_from_oracle() {
        let g = c6();
        assert!(is_self_sufficient(&vset(["v1", "v3"]), &g, &cfg()).unwrap());
        // Oracle-settled small cases: a vertex inside a triangle or a 4-cycle
        // is self-sufficient (every superset keeps predimension >= 2); inside
        // a 5-clique it is not (the clique itself has predimension 0).
        let triangle = Graph::cycle(&["v1", "v2", "v3"]);
        assert!(is_self_sufficient(&vset(["v1"]), &triangle, &cfg()).unwrap());
        let c4 = Graph::cycle(&["v1", "v2", "v3", "v4"]);
        assert!(is_self_sufficient(&vset(["v1"]), &c4, &cfg()).unwrap());
        let k5 = Graph::from_parts(
            ["v1", "v2", "v3", "v4", "v5"],
            (1..=5).flat_map(|i| ((i + 1)..=5).map(move |j| (format!("v{i}"), format!("v{j}")))),
        )
        .unwrap();
        assert!(!is_self_sufficient(&vset(["v1"]), &k5, &cfg()).unwrap());
    }

    #[test]
    fn closure_examples() {
        let g = c6();
        assert_eq!(
            closure(&vset(["v1", "v3"]), &g, &cfg()).unwrap(),
            vset(["v1", "v2", "v3"])
        );
        assert_eq!(
            closure(&vset(["v1", "v4"]), &g, &cfg()).unwrap(),
            vset(["v1", "v4"])
        );
        assert_eq!(closure(&g.vertex_set(), &g, &cfg()).unwrap(), g.vertex_set());
    }

    #[test]
    fn dimension_examples() {
        let g = c6();
        assert_eq!(dimension(&vset(["v1", "v3"]), &g, &cfg()).unwrap(), q(4));
        assert_eq!(dimension(&vset(["v1"]), &g, &cfg()).unwrap(), q(2));
        assert_eq!(dimension(&VertexSet::new(), &g, &cfg()).unwrap(), q(0));
    }

    #[test]
    fn growth_points() {
        assert!(cfg().growth_at(&q(1), 6).unwrap().holds());
        assert_eq!(
            cfg().growth_at(&q(1), 6).unwrap(),
            GrowthPoint::Exact { holds: true }
        );
        assert_eq!(
            cfg().growth_at(&q(1), 7).unwrap(),
            GrowthPoint::Analytic { holds: true }
        );
        assert!(!cfg().growth_at(&q(0), 7).unwrap().holds());
    }

    #[test]
    fn config_validation() {
        assert!(GoodFunction::new(q(2), vec![(1, q(2)), (4, q(5))], Tail::LogBase3).is_err());
        assert!(GoodFunction::new(
            q(2),
            vec![(1, q(2)), (4, q(5)), (6, q(6))],
            Tail::RationalTable(vec![(8, q(7))])
        )
        .is_err());
        assert!(GoodFunction::new(
            q(2),
            vec![(1, q(2)), (4, q(3))],
            Tail::RationalTable(vec![(5, q(3))])
        )
        .is_ok());
        // A slow table that breaks the growth bound is rejected; the same
        // table as a plain rational table is accepted.
        let vals: Vec<(u64, Q)> = (7..=18)
            .map(|n| (n, if n < 18 { q(6) } else { q(8) }))
            .collect();
        assert!(GoodFunction::new(
            q(2),
            vec![(1, q(2)), (4, q(5)), (6, q(6))],
            Tail::SlowTable(vals.clone())
        )
        .is_err());
        assert!(GoodFunction::new(
            q(2),
            vec![(1, q(2)), (4, q(5)), (6, q(6))],
            Tail::RationalTable(vals)
        )
        .is_ok());
    }

    #[test]
    fn scan_cap_is_enforced() {
        let labels: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let g = Graph::build(&refs, &[]);
        assert!(matches!(
            closure(&vset(["x0"]), &g, &cfg()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn member_enumeration_small() {
        let members = kf_members_up_to_iso(&cfg(), 4).unwrap();
        // Size <= 4 members are exactly the forests with <= 4 vertices:
        // 1 empty + 1 + 2 + 3 + 6.
        assert_eq!(members.len(), 13);
        let pts = realizable_points(&cfg(), 3).unwrap();
        assert!(pts.contains(&(0, q(0))));
        assert!(pts.contains(&(2, q(3))));
        assert!(pts.contains(&(3, q(4))));
    }
}
