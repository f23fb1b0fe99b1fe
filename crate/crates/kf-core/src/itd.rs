//! Independence-theorem diagrams: validation, exhaustive enumeration of the
//! proper diagrams at bounded predimension, and the discrete growth checks
//! that feed the supersimplicity argument.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::amalgam::{eventual_closures, AmalgamDiagram};
use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph, VertexSet};
use crate::predim::{
    in_class, kf_members_up_to_iso, predimension, DeltaTable, GoodFunction, GrowthPoint,
};
use crate::rational::{q, q_floor, q_str, Q};

/// Index pairs of the three two-sided parts, in the fixed order
/// `(1,2), (1,3), (2,3)` (0-based here).
pub const PAIR_SLOTS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A graph with the seven marked subsets of an independence-theorem diagram.
#[derive(Clone, Debug)]
pub struct ItDiagram {
    pub ambient: Graph,
    pub base: VertexSet,
    /// The three one-sided parts.
    pub singles: [VertexSet; 3],
    /// The three two-sided parts, ordered as in [`PAIR_SLOTS`].
    pub pairs: [VertexSet; 3],
}

/// Cached predimensions of the marked parts.
#[derive(Clone, Debug)]
pub struct ItdPredims {
    pub base: Q,
    pub singles: [Q; 3],
    pub pairs: [Q; 3],
    pub total: Q,
}

/// Per-axiom outcome of a validation run.
#[derive(Clone, Debug)]
pub struct ItdReport {
    pub axioms: Vec<(String, bool)>,
    pub passed: bool,
}

impl ItdReport {
    fn from_axioms(axioms: Vec<(String, bool)>) -> ItdReport {
        let passed = axioms.iter().all(|(_, ok)| *ok);
        ItdReport { axioms, passed }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "axioms": self
                .axioms
                .iter()
                .map(|(name, ok)| serde_json::json!({"axiom": name, "passed": ok}))
                .collect::<Vec<_>>(),
            "passed": self.passed,
        })
    }
}

impl ItDiagram {
    pub fn predims(&self, cfg: &GoodFunction) -> Result<ItdPredims> {
        let delta = |s: &VertexSet| -> Result<Q> {
            Ok(predimension(&self.ambient.induced(s)?, cfg))
        };
        Ok(ItdPredims {
            base: delta(&self.base)?,
            singles: [
                delta(&self.singles[0])?,
                delta(&self.singles[1])?,
                delta(&self.singles[2])?,
            ],
            pairs: [
                delta(&self.pairs[0])?,
                delta(&self.pairs[1])?,
                delta(&self.pairs[2])?,
            ],
            total: predimension(&self.ambient, cfg),
        })
    }

    /// Canonical form of the diagram as a part-colored graph, minimized over
    /// the six permutations of the single-part indices. Two diagrams get the
    /// same form iff some isomorphism matches all marked parts setwise,
    /// possibly permuting the indices 1..3.
    pub fn marked_canonical_form(&self) -> Result<CanonicalForm> {
        let n = self.ambient.n();
        let single_masks: Vec<u64> = self
            .singles
            .iter()
            .map(|s| self.ambient.mask_of(s))
            .collect::<Result<_>>()?;
        let pair_masks: Vec<u64> = self
            .pairs
            .iter()
            .map(|s| self.ambient.mask_of(s))
            .collect::<Result<_>>()?;
        let mut best: Option<CanonicalForm> = None;
        for perm in (0..3).permutations(3) {
            let mut colors = vec![0u32; n];
            for (v, color) in colors.iter_mut().enumerate() {
                let bit = 1u64 << v;
                for (slot, &orig) in perm.iter().enumerate() {
                    if single_masks[orig] & bit != 0 {
                        *color |= 1 << slot;
                    }
                }
                for (slot, &(i, j)) in PAIR_SLOTS.iter().enumerate() {
                    // The pair containing original singles perm[i], perm[j].
                    let (oi, oj) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    let orig_slot = PAIR_SLOTS
                        .iter()
                        .position(|&(a, b)| (a, b) == (oi, oj))
                        .expect("pair slot exists");
                    if pair_masks[orig_slot] & bit != 0 {
                        *color |= 1 << (3 + slot);
                    }
                }
            }
            let cert = self.ambient.canonical_form_colored(&colors);
            if best.as_ref().is_none_or(|b| cert < *b) {
                best = Some(cert);
            }
        }
        Ok(best.expect("six permutations considered"))
    }

    pub fn to_json(&self, cfg: &GoodFunction) -> serde_json::Value {
        let set = |s: &VertexSet| s.iter().cloned().collect::<Vec<_>>();
        let predims = self.predims(cfg).ok();
        let report = validate_proper_itd(self, cfg).ok();
        serde_json::json!({
            "ambient": self.ambient.to_json(),
            "D0": set(&self.base),
            "D1": set(&self.singles[0]),
            "D2": set(&self.singles[1]),
            "D3": set(&self.singles[2]),
            "D12": set(&self.pairs[0]),
            "D13": set(&self.pairs[1]),
            "D23": set(&self.pairs[2]),
            "predimensions": predims.map(|p| serde_json::json!({
                "d0": q_str(&p.base),
                "d": [q_str(&p.singles[0]), q_str(&p.singles[1]), q_str(&p.singles[2])],
                "dij": [q_str(&p.pairs[0]), q_str(&p.pairs[1]), q_str(&p.pairs[2])],
                "total": q_str(&p.total),
            })),
            "validation": report.map(|r| r.to_json()),
        })
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

fn masks_of(diag: &ItDiagram) -> Result<(u64, [u64; 3], [u64; 3])> {
    let g = &diag.ambient;
    Ok((
        g.mask_of(&diag.base)?,
        [
            g.mask_of(&diag.singles[0])?,
            g.mask_of(&diag.singles[1])?,
            g.mask_of(&diag.singles[2])?,
        ],
        [
            g.mask_of(&diag.pairs[0])?,
            g.mask_of(&diag.pairs[1])?,
            g.mask_of(&diag.pairs[2])?,
        ],
    ))
}

/// Checks the defining conditions of an independence-theorem diagram, one
/// verdict per axiom. The overall result passes iff every axiom does.
pub fn validate_itd(diag: &ItDiagram, cfg: &GoodFunction) -> Result<ItdReport> {
    let g = &diag.ambient;
    let (base, singles, pairs) = masks_of(diag)?;
    let mut axioms: Vec<(String, bool)> = Vec::new();

    let mut in_kf = in_class(&g.induced_mask(base), cfg)?;
    for m in singles.iter().chain(pairs.iter()) {
        in_kf &= in_class(&g.induced_mask(*m), cfg)?;
    }
    axioms.push(("parts_are_class_members".into(), in_kf));

    let meet_base = PAIR_SLOTS
        .iter()
        .all(|&(i, j)| singles[i] & singles[j] == base);
    axioms.push(("singles_intersect_in_base".into(), meet_base));

    let mut closed = true;
    let mut independent = true;
    for (slot, &(i, j)) in PAIR_SLOTS.iter().enumerate() {
        let pm = pairs[slot];
        if singles[i] & !pm != 0 || singles[j] & !pm != 0 {
            closed = false;
            independent = false;
            continue;
        }
        let side = g.induced_mask(pm);
        let table = DeltaTable::new(&side, cfg)?;
        let si = side.mask_of(&diag.singles[i])?;
        let sj = side.mask_of(&diag.singles[j])?;
        closed &= table.is_d_closed(si) && table.is_d_closed(sj);

        // Independence over the base inside the pair part: freely
        // amalgamated, and the union has the predimension of its closure.
        let sb = side.mask_of(&diag.base)?;
        let mut free = true;
        for (x, y) in side.edge_indices() {
            let (mx, my) = (1u64 << x, 1u64 << y);
            if (mx & si & !sb != 0 && my & sj & !sb != 0)
                || (my & si & !sb != 0 && mx & sj & !sb != 0)
            {
                free = false;
            }
        }
        let union = si | sj;
        let closure_delta = table.delta(table.closure(union));
        independent &= free && table.delta(union) == closure_delta;
    }
    axioms.push(("singles_closed_in_pairs".into(), closed));

    // D_ij ∩ D_jk = D_j: the shared single index of pair slots.
    let shared = [(0usize, 1usize, 0usize), (0, 2, 1), (1, 2, 2)];
    let pairs_meet = shared
        .iter()
        .all(|&(s1, s2, single)| pairs[s1] & pairs[s2] == singles[single]);
    axioms.push(("pairs_intersect_in_singles".into(), pairs_meet));

    axioms.push(("sides_independent_over_base".into(), independent));

    let mut edges_covered = true;
    for (i, j) in g.edge_indices() {
        let e = (1u64 << i) | (1u64 << j);
        if !pairs.iter().any(|pm| e & pm == e) {
            edges_covered = false;
        }
    }
    axioms.push(("edges_covered_by_pairs".into(), edges_covered));

    let vertices_covered = pairs[0] | pairs[1] | pairs[2] == g.full_mask();
    axioms.push(("vertices_covered_by_pairs".into(), vertices_covered));

    Ok(ItdReport::from_axioms(axioms))
}

/// Validation of a proper diagram: the base axioms plus strictness of the
/// one-sided parts and the requirement that each two-sided part is exactly
/// the closure of its two sides inside the whole diagram.
pub fn validate_proper_itd(diag: &ItDiagram, cfg: &GoodFunction) -> Result<ItdReport> {
    let base_report = validate_itd(diag, cfg)?;
    let mut axioms = base_report.axioms;
    let (base, singles, pairs) = masks_of(diag)?;
    let g = &diag.ambient;

    let strict = singles.iter().all(|&s| base & s == base && base != s);
    axioms.push(("base_proper_in_singles".into(), strict));

    let table = DeltaTable::new(g, cfg)?;
    let mut closures_ok = true;
    for (slot, &(i, j)) in PAIR_SLOTS.iter().enumerate() {
        let union = singles[i] | singles[j];
        let strict_ext = union | pairs[slot] == pairs[slot] && union != pairs[slot];
        closures_ok &= strict_ext && table.closure(union) == pairs[slot];
    }
    axioms.push(("pairs_are_proper_closures".into(), closures_ok));

    Ok(ItdReport::from_axioms(axioms))
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Extensions of `base` usable as a one-sided part: strict supersets in the
/// class with the base d-closed and predimension at most `max_delta`,
/// deduplicated up to isomorphism fixing the base pointwise. Fresh vertices
/// are labeled with the given prefix.
fn single_part_candidates(
    base: &Graph,
    cfg: &GoodFunction,
    max_delta: &Q,
    max_size: u64,
    prefix: &str,
) -> Result<Vec<Graph>> {
    let base_labels: Vec<String> = base.labels().to_vec();
    let mut out = Vec::new();
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let room = (max_size as usize).saturating_sub(base.n());
    for m in 1..=room {
        let fresh: Vec<String> = (1..=m).map(|k| format!("{prefix}{k}")).collect();
        // Candidate edges touch at least one fresh vertex.
        let mut slots: Vec<(String, String)> = Vec::new();
        for x in &fresh {
            for b in &base_labels {
                slots.push((x.clone(), b.clone()));
            }
        }
        for (xi, x) in fresh.iter().enumerate() {
            for y in fresh.iter().skip(xi + 1) {
                slots.push((x.clone(), y.clone()));
            }
        }
        for pick in 0u64..1 << slots.len() {
            let vs: Vec<String> = base_labels.iter().cloned().chain(fresh.clone()).collect();
            let es: Vec<(String, String)> = base
                .edge_labels()
                .into_iter()
                .chain(
                    slots
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| pick >> k & 1 == 1)
                        .map(|(_, e)| e.clone()),
                )
                .collect();
            let cand = Graph::from_parts(vs, es)?;
            if !in_class(&cand, cfg)? {
                continue;
            }
            if &predimension(&cand, cfg) > max_delta {
                continue;
            }
            let table = DeltaTable::new(&cand, cfg)?;
            if !table.is_d_closed(cand.mask_of(&base.vertex_set())?) {
                continue;
            }
            if seen.insert(cand.canonical_form_fixing(&base_labels)?) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// Exhaustive enumeration of proper independence-theorem diagrams whose
/// two-sided parts all have predimension at most `d12_max`, up to
/// isomorphism matching the marked parts setwise (index permutations
/// allowed). Supported for `d12_max <= 5`; the larger regime is covered by
/// the growth condition, not by enumeration.
pub fn enumerate_proper_itds(cfg: &GoodFunction, d12_max: &Q) -> Result<Vec<ItDiagram>> {
    if *cfg.alpha() != q(2) {
        return Err(Error::UnsupportedAlpha(q_str(cfg.alpha())));
    }
    if *d12_max > q(5) {
        return Err(Error::UnsupportedBound(format!(
            "two-sided predimension bound {} exceeds 5, the regime where exhaustive \
             size bounds close",
            q_str(d12_max)
        )));
    }
    let d12 = q_floor(d12_max);
    let d12: i64 = match i64::try_from(d12) {
        Ok(v) => v,
        Err(_) => return Ok(Vec::new()),
    };
    // Part predimensions are integers (alpha = 2): d0 < d_i < d_ij forces
    // d_i <= d12 - 1 and d0 <= d12 - 2.
    let single_cap_delta = q(d12 - 1);
    if d12 - 1 < 2 {
        return Ok(Vec::new());
    }
    let single_cap_size = cfg.max_size_at(&single_cap_delta)?;
    let base_candidates: Vec<Graph> = {
        let mut out = vec![Graph::empty()];
        if d12 - 2 >= 2 {
            let cap = cfg.max_size_at(&q(d12 - 2))?;
            for g in kf_members_up_to_iso(cfg, cap as usize)? {
                if g.n() > 0 && predimension(&g, cfg) <= q(d12 - 2) {
                    out.push(g);
                }
            }
        }
        out
    };

    let mut found: BTreeMap<CanonicalForm, ItDiagram> = BTreeMap::new();
    for base in base_candidates {
        // Relabel the base away from the generated v1, v2, ... names.
        let rename: BTreeMap<String, String> = base
            .labels()
            .iter()
            .enumerate()
            .map(|(k, l)| (l.clone(), format!("o{}", k + 1)))
            .collect();
        let base = base.relabel(&rename)?;
        let d0 = predimension(&base, cfg);

        let mut slot_candidates: Vec<Vec<Graph>> = Vec::with_capacity(3);
        for slot in 0..3 {
            let generic = single_part_candidates(
                &base,
                cfg,
                &single_cap_delta,
                single_cap_size,
                &format!("s{}_", slot + 1),
            )?;
            slot_candidates.push(generic);
        }

        for s1 in &slot_candidates[0] {
            for s2 in &slot_candidates[1] {
                for s3 in &slot_candidates[2] {
                    let parts = [s1, s2, s3];
                    let deltas: Vec<Q> =
                        parts.iter().map(|g| predimension(g, cfg)).collect();
                    if PAIR_SLOTS.iter().any(|&(i, j)| {
                        deltas[i].clone() + &deltas[j] - &d0 > q(d12)
                    }) {
                        continue;
                    }
                    // Candidate two-sided parts per slot: proper eventual
                    // closures of the pairwise amalgam whose union closure is
                    // the whole extension.
                    let mut pair_exts: Vec<Vec<Graph>> = Vec::with_capacity(3);
                    let mut dead = false;
                    for (slot, &(i, j)) in PAIR_SLOTS.iter().enumerate() {
                        let union = Graph::union_by_labels(parts[i], parts[j])?;
                        let diag = AmalgamDiagram::new(
                            union.clone(),
                            base.vertex_set(),
                            parts[i].vertex_set(),
                            parts[j].vertex_set(),
                            cfg,
                        )?;
                        let mut exts = Vec::new();
                        for closure in eventual_closures(&diag, cfg)? {
                            if !closure.is_proper() {
                                continue;
                            }
                            let ext = &closure.extension;
                            let table = DeltaTable::new(ext, cfg)?;
                            let union_mask = ext.mask_of(&union.vertex_set())?;
                            if table.closure(union_mask) != ext.full_mask() {
                                continue;
                            }
                            // Freshen the added vertices per pair slot.
                            let mut rename: BTreeMap<String, String> = BTreeMap::new();
                            let mut k = 0usize;
                            for l in ext.labels() {
                                if !union.has_vertex(l) {
                                    k += 1;
                                    rename.insert(l.clone(), format!("p{}_{k}", slot + 1));
                                }
                            }
                            exts.push(ext.relabel(&rename)?);
                        }
                        if exts.is_empty() {
                            dead = true;
                            break;
                        }
                        pair_exts.push(exts);
                    }
                    if dead {
                        continue;
                    }
                    for e12 in &pair_exts[0] {
                        for e13 in &pair_exts[1] {
                            for e23 in &pair_exts[2] {
                                let ambient = Graph::union_by_labels(
                                    &Graph::union_by_labels(e12, e13)?,
                                    e23,
                                )?;
                                let diag = ItDiagram {
                                    ambient,
                                    base: base.vertex_set(),
                                    singles: [
                                        s1.vertex_set(),
                                        s2.vertex_set(),
                                        s3.vertex_set(),
                                    ],
                                    pairs: [
                                        e12.vertex_set(),
                                        e13.vertex_set(),
                                        e23.vertex_set(),
                                    ],
                                };
                                if validate_proper_itd(&diag, cfg)?.passed {
                                    found
                                        .entry(diag.marked_canonical_form()?)
                                        .or_insert(diag);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

// ---------------------------------------------------------------------------
// Growth checks and the closure report
// ---------------------------------------------------------------------------

/// Result of checking `f(3t) <= f(t) + k` over a range of `t`.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub k: u64,
    pub t_from: u64,
    pub t_to: u64,
    /// Number of points settled by the logarithmic identity rather than by
    /// table lookups.
    pub analytic_points: u64,
    pub failures: Vec<u64>,
    pub passed: bool,
}

impl GrowthReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "from": self.t_from,
            "to": self.t_to,
            "analytic_points": self.analytic_points,
            "failures": self.failures,
            "passed": self.passed,
        })
    }
}

/// Verifies `f(3t) <= f(t) + k` exactly for every integer `t` in the range.
/// Points where both sizes live in the logarithmic tail are settled by the
/// identity `log_3(3t) = log_3(t) + 1` and counted as analytic.
pub fn sitd_growth_check(
    cfg: &GoodFunction,
    k: u64,
    t_from: u64,
    t_to: u64,
) -> Result<GrowthReport> {
    if t_from == 0 {
        return Err(Error::ZeroSize);
    }
    let mut failures = Vec::new();
    let mut analytic_points = 0u64;
    for t in t_from..=t_to {
        match cfg.growth_at(&q(k as i64), t)? {
            GrowthPoint::Analytic { holds } => {
                analytic_points += 1;
                if !holds {
                    failures.push(t);
                }
            }
            GrowthPoint::Exact { holds } => {
                if !holds {
                    failures.push(t);
                }
            }
        }
    }
    let passed = failures.is_empty();
    Ok(GrowthReport {
        k,
        t_from,
        t_to,
        analytic_points,
        failures,
        passed,
    })
}

/// One row of the closure report: a proper diagram and whether its total
/// size stays within the class bound for its predimension.
#[derive(Clone, Debug)]
pub struct ItdClosureRow {
    pub diagram: ItDiagram,
    pub size: u64,
    pub delta: Q,
    pub within_class_bound: bool,
}

/// Evidence report for closure under proper diagrams at small predimension,
/// combined with the slow-growth check that covers the large regime.
#[derive(Clone, Debug)]
pub struct ItdClosureReport {
    pub d12_max: Q,
    pub rows: Vec<ItdClosureRow>,
    pub growth: GrowthReport,
    pub passed: bool,
}

impl ItdClosureReport {
    pub fn to_json(&self, cfg: &GoodFunction) -> serde_json::Value {
        serde_json::json!({
            "d12_max": q_str(&self.d12_max),
            "diagrams": self
                .rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "size": r.size,
                        "delta": q_str(&r.delta),
                        "within_class_bound": r.within_class_bound,
                        "diagram": r.diagram.to_json(cfg),
                    })
                })
                .collect::<Vec<_>>(),
            "growth": self.growth.to_json(),
            "passed": self.passed,
        })
    }
}

/// Enumerates the proper diagrams up to `d12_max` and asserts
/// `f(|D|) <= delta(D)` for each, then attaches the slow-growth check
/// (`k = 1`) for the tail regime.
pub fn check_itd_closure(cfg: &GoodFunction, d12_max: &Q) -> Result<ItdClosureReport> {
    let diagrams = enumerate_proper_itds(cfg, d12_max)?;
    let mut rows = Vec::with_capacity(diagrams.len());
    for diagram in diagrams {
        let size = diagram.ambient.n() as u64;
        let delta = predimension(&diagram.ambient, cfg);
        let within = cfg.compare(&delta, size)? != Ordering::Less;
        rows.push(ItdClosureRow {
            diagram,
            size,
            delta,
            within_class_bound: within,
        });
    }
    let junction = cfg.junction();
    let t_to = match cfg.covered_up_to() {
        None => 1000,
        Some(max_n) => (max_n / 3).max(junction),
    };
    let growth = sitd_growth_check(cfg, 1, junction, t_to)?;
    let passed = rows.iter().all(|r| r.within_class_bound) && growth.passed;
    Ok(ItdClosureReport {
        d12_max: d12_max.clone(),
        rows,
        growth,
        passed,
    })
}
