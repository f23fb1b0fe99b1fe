//! Free amalgamation, one-point extensions and eventual-closure enumeration.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph, VertexSet};
use crate::predim::{in_class, predimension, realizable_points, DeltaTable, GoodFunction};
use crate::rational::{q, q_str, Q};

/// A free amalgam `B ⨿_A C` with its three marked parts.
///
/// Invariants checked on construction: `A = B ∩ C`, `B ∪ C` is the whole
/// vertex set, no edge joins `B \ A` to `C \ A`, the induced copies of `B`
/// and `C` are class members, and `A` is d-closed in both.
#[derive(Clone, Debug)]
pub struct AmalgamDiagram {
    ambient: Graph,
    part_a: VertexSet,
    part_b: VertexSet,
    part_c: VertexSet,
}

impl AmalgamDiagram {
    pub fn new(
        ambient: Graph,
        part_a: VertexSet,
        part_b: VertexSet,
        part_c: VertexSet,
        cfg: &GoodFunction,
    ) -> Result<AmalgamDiagram> {
        let a = ambient.mask_of(&part_a)?;
        let b = ambient.mask_of(&part_b)?;
        let c = ambient.mask_of(&part_c)?;
        let bad = |msg: String| Err(Error::InvalidAmalgam(msg));
        if b & c != a {
            return bad("A must be exactly B ∩ C".into());
        }
        if b | c != ambient.full_mask() {
            return bad("B ∪ C must cover the ambient vertex set".into());
        }
        for (i, j) in ambient.edge_indices() {
            let (mi, mj) = (1u64 << i, 1u64 << j);
            let cross = (mi & b & !a != 0 && mj & c & !a != 0)
                || (mj & b & !a != 0 && mi & c & !a != 0);
            if cross {
                return bad(format!(
                    "edge {}-{} joins B \\ A to C \\ A; the amalgam is not free",
                    ambient.label(i),
                    ambient.label(j)
                ));
            }
        }
        let side_b = ambient.induced_mask(b);
        let side_c = ambient.induced_mask(c);
        if !in_class(&side_b, cfg)? || !in_class(&side_c, cfg)? {
            return bad("both sides must be class members".into());
        }
        for side in [&side_b, &side_c] {
            let table = DeltaTable::new(side, cfg)?;
            let mask = side.mask_of(&part_a)?;
            if !table.is_d_closed(mask) {
                return Err(Error::Precondition(
                    "the base is not d-closed in one of the sides".into(),
                ));
            }
        }
        Ok(AmalgamDiagram {
            ambient,
            part_a,
            part_b,
            part_c,
        })
    }

    pub fn ambient(&self) -> &Graph {
        &self.ambient
    }

    pub fn part_a(&self) -> &VertexSet {
        &self.part_a
    }

    pub fn part_b(&self) -> &VertexSet {
        &self.part_b
    }

    pub fn part_c(&self) -> &VertexSet {
        &self.part_c
    }

    pub fn delta(&self, cfg: &GoodFunction) -> Q {
        predimension(&self.ambient, cfg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ambient": self.ambient.to_json(),
            "A": self.part_a.iter().collect::<Vec<_>>(),
            "B": self.part_b.iter().collect::<Vec<_>>(),
            "C": self.part_c.iter().collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value, cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let ambient =
            Graph::from_json(obj.get("ambient").ok_or_else(|| bad("missing `ambient`"))?)?;
        let set = |key: &str| -> Result<VertexSet> {
            obj.get(key)
                .and_then(|x| x.as_array())
                .ok_or_else(|| bad(&format!("missing `{key}` array")))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad("labels must be strings"))
                })
                .collect()
        };
        AmalgamDiagram::new(ambient, set("A")?, set("B")?, set("C")?, cfg)
    }
}

/// Glues `b` and `c` along an identification (a partial bijection given as
/// `(label in b, label in c)` pairs). The identified vertices keep their
/// `b`-side labels; every other label must be distinct across the two sides.
pub fn free_amalgam(
    b: &Graph,
    c: &Graph,
    identification: &[(String, String)],
    cfg: &GoodFunction,
) -> Result<AmalgamDiagram> {
    let dom: Vec<&String> = identification.iter().map(|(u, _)| u).collect();
    let img: Vec<&String> = identification.iter().map(|(_, v)| v).collect();
    if dom.iter().collect::<BTreeSet<_>>().len() != dom.len()
        || img.iter().collect::<BTreeSet<_>>().len() != img.len()
    {
        return Err(Error::InvalidAmalgam(
            "identification must be a bijection (repeated labels)".into(),
        ));
    }
    for u in &dom {
        b.index_of(u)?;
    }
    for v in &img {
        c.index_of(v)?;
    }
    // The identification must embed the same graph in both sides.
    for (x, (u1, v1)) in identification.iter().enumerate() {
        for (u2, v2) in identification.iter().skip(x + 1) {
            let eb = b.adjacent(b.index_of(u1)?, b.index_of(u2)?);
            let ec = c.adjacent(c.index_of(v1)?, c.index_of(v2)?);
            if eb != ec {
                return Err(Error::InvalidAmalgam(format!(
                    "identification is not edge-preserving on ({u1}, {u2})"
                )));
            }
        }
    }
    if !in_class(b, cfg)? || !in_class(c, cfg)? {
        return Err(Error::Precondition(
            "both sides must be class members".into(),
        ));
    }
    let dom_set: VertexSet = dom.iter().map(|s| s.to_string()).collect();
    let img_set: VertexSet = img.iter().map(|s| s.to_string()).collect();
    for (side, base) in [(b, &dom_set), (c, &img_set)] {
        let table = DeltaTable::new(side, cfg)?;
        if !table.is_d_closed(side.mask_of(base)?) {
            return Err(Error::Precondition(
                "the identification base is not d-closed in one of the sides".into(),
            ));
        }
    }
    // Label hygiene: outside the identification the two sides must not share
    // labels, otherwise the gluing would be ambiguous.
    let c_rename: BTreeMap<String, String> = identification
        .iter()
        .map(|(u, v)| (v.clone(), u.clone()))
        .collect();
    for l in c.labels() {
        if !c_rename.contains_key(l) && b.has_vertex(l) {
            return Err(Error::InvalidAmalgam(format!(
                "label `{l}` appears on both sides but is not identified"
            )));
        }
    }
    for l in b.labels() {
        if !dom_set.contains(l) && c_rename.values().any(|w| w == l) {
            return Err(Error::InvalidAmalgam(format!(
                "identified label `{l}` collides with a non-identified vertex"
            )));
        }
    }
    let c_glued = c.relabel(&c_rename)?;
    let ambient = Graph::union_by_labels(b, &c_glued)?;
    AmalgamDiagram::new(ambient, dom_set, b.vertex_set(), c_glued.vertex_set(), cfg)
}

/// Convenience form of [`free_amalgam`]: glue along equal labels.
pub fn free_amalgam_over(
    b: &Graph,
    c: &Graph,
    shared: &VertexSet,
    cfg: &GoodFunction,
) -> Result<AmalgamDiagram> {
    let ident: Vec<(String, String)> = shared.iter().map(|l| (l.clone(), l.clone())).collect();
    free_amalgam(b, c, &ident, cfg)
}

// ---------------------------------------------------------------------------
// One-point extensions and towers
// ---------------------------------------------------------------------------

/// One step of a one-point tower: the fresh vertex and its attachment pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    pub vertex: String,
    pub attach: (String, String),
}

/// An extension reached by a one-point tower from some base graph.
#[derive(Clone, Debug)]
pub struct EventualClosure {
    pub extension: Graph,
    pub tower: Vec<TowerStep>,
}

impl EventualClosure {
    pub fn is_proper(&self) -> bool {
        !self.tower.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": self.extension.to_json(),
            "tower": self
                .tower
                .iter()
                .map(|s| {
                    serde_json::json!({"vertex": s.vertex, "attach": [s.attach.0, s.attach.1]})
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Whether a cycle of length `len` can never occur inside a class member:
/// already the predimension of its vertex set drops below the control value.
/// Used as a sound pruning test; membership filtering stays authoritative.
fn cycle_is_forbidden(cfg: &GoodFunction, len: u64) -> Result<bool> {
    let bound = cfg.alpha().clone() * q(len as i64) - q(len as i64);
    Ok(cfg.compare(&bound, len)? == Ordering::Less)
}

fn one_point_extensions_impl(
    g: &Graph,
    cfg: &GoodFunction,
    prune: bool,
) -> Result<Vec<(Graph, (String, String))>> {
    if *cfg.alpha() != q(2) {
        return Err(Error::UnsupportedAlpha(q_str(cfg.alpha())));
    }
    let mut out = Vec::new();
    let fresh = g.fresh_label("w");
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let (u, v) = (g.label(i).to_string(), g.label(j).to_string());
            if prune {
                // The only new cycles pass through the fresh degree-2 vertex,
                // so the shortest one has length distance + 2.
                if let Some(d) = g.distance(&u, &v)? {
                    if cycle_is_forbidden(cfg, d + 2)? {
                        continue;
                    }
                }
            }
            let cand = g.with_new_vertex(&fresh, &[&u, &v])?;
            if in_class(&cand, cfg)? {
                out.push((cand, (u, v)));
            }
        }
    }
    Ok(out)
}

/// All one-point extensions of `g`: one new vertex joined by exactly two
/// edges, with the result still in the class. One entry per unordered
/// attachment pair. Requires `alpha = 2` (the attachment arity is
/// `alpha`-dependent) and `g` in the class.
pub fn one_point_extensions(
    g: &Graph,
    cfg: &GoodFunction,
) -> Result<Vec<(Graph, (String, String))>> {
    if !in_class(g, cfg)? {
        return Err(Error::Precondition(
            "one-point extensions are defined for class members only".into(),
        ));
    }
    one_point_extensions_impl(g, cfg, true)
}

/// Breadth-first search over one-point towers from `start`, keeping nodes
/// accepted by `keep`. Every condition used with this search is
/// anti-hereditary (once broken along a tower it stays broken), so rejected
/// nodes are dropped together with their subtrees. Results are deduplicated
/// up to isomorphism fixing `start` pointwise and sorted canonically.
pub(crate) fn tower_search<F>(
    start: &Graph,
    cfg: &GoodFunction,
    depth_max: u64,
    prune: bool,
    mut keep: F,
) -> Result<Vec<EventualClosure>>
where
    F: FnMut(&Graph) -> Result<bool>,
{
    let pinned: Vec<String> = start.labels().to_vec();
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out: Vec<EventualClosure> = Vec::new();
    let mut queue: VecDeque<EventualClosure> = VecDeque::new();

    seen.insert(start.canonical_form_fixing(&pinned)?);
    if keep(start)? {
        let node = EventualClosure {
            extension: start.clone(),
            tower: Vec::new(),
        };
        out.push(node.clone());
        queue.push_back(node);
    }
    while let Some(node) = queue.pop_front() {
        if node.tower.len() as u64 >= depth_max {
            continue;
        }
        for (ext, attach) in one_point_extensions_impl(&node.extension, cfg, prune)? {
            let cert = ext.canonical_form_fixing(&pinned)?;
            if !seen.insert(cert) {
                continue;
            }
            if !keep(&ext)? {
                continue;
            }
            let new_vertex = ext
                .labels()
                .iter()
                .find(|l| !node.extension.has_vertex(l))
                .expect("extension adds exactly one vertex")
                .clone();
            let mut tower = node.tower.clone();
            tower.push(TowerStep {
                vertex: new_vertex,
                attach,
            });
            let child = EventualClosure {
                extension: ext,
                tower,
            };
            out.push(child.clone());
            queue.push_back(child);
        }
    }
    out.sort_by_key(|c| {
        c.extension
            .canonical_form_fixing(&pinned)
            .expect("pinned labels present")
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Eventual closures
// ---------------------------------------------------------------------------

/// The defining conditions of an eventual closure, each checked directly
/// from the definitions against the extension graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureConditions {
    pub freely_amalgamated: bool,
    pub base_self_sufficient: bool,
    pub predimension_preserved: bool,
    pub parts_d_closed: bool,
    pub in_class: bool,
}

impl ClosureConditions {
    pub fn all(&self) -> bool {
        self.freely_amalgamated
            && self.base_self_sufficient
            && self.predimension_preserved
            && self.parts_d_closed
            && self.in_class
    }
}

/// Re-checks the eventual-closure conditions for `ext` over `diag`,
/// independently of how `ext` was produced. `ext` must contain the amalgam
/// as an induced subgraph.
pub fn eventual_closure_conditions(
    diag: &AmalgamDiagram,
    ext: &Graph,
    cfg: &GoodFunction,
) -> Result<ClosureConditions> {
    let base_labels = diag.ambient().vertex_set();
    let base_mask = ext.mask_of(&base_labels).map_err(|_| {
        Error::InvalidAmalgam("extension does not contain the amalgam's vertices".into())
    })?;
    if &ext.induced_mask(base_mask) != diag.ambient() {
        return Err(Error::InvalidAmalgam(
            "extension does not induce the amalgam on its base vertices".into(),
        ));
    }
    let a = ext.mask_of(diag.part_a())?;
    let b = ext.mask_of(diag.part_b())?;
    let c = ext.mask_of(diag.part_c())?;
    let mut free = true;
    for (i, j) in ext.edge_indices() {
        let (mi, mj) = (1u64 << i, 1u64 << j);
        if (mi & b & !a != 0 && mj & c & !a != 0) || (mj & b & !a != 0 && mi & c & !a != 0) {
            free = false;
        }
    }
    let table = DeltaTable::new(ext, cfg)?;
    Ok(ClosureConditions {
        freely_amalgamated: free,
        base_self_sufficient: table.is_self_sufficient(base_mask),
        predimension_preserved: predimension(ext, cfg) == diag.delta(cfg),
        parts_d_closed: table.is_d_closed(a) && table.is_d_closed(b) && table.is_d_closed(c),
        in_class: in_class(ext, cfg)?,
    })
}

/// Complete list of eventual closures of the amalgam, up to isomorphism
/// fixing `B ∪ C` pointwise. Includes the improper closure (the amalgam
/// itself) whenever it satisfies the defining conditions.
///
/// Preconditions: `alpha = 2` and the size window
/// `max_size_at(delta) - |ambient| < 6`, outside of which one-point towers
/// no longer account for all closures.
pub fn eventual_closures(
    diag: &AmalgamDiagram,
    cfg: &GoodFunction,
) -> Result<Vec<EventualClosure>> {
    if *cfg.alpha() != q(2) {
        return Err(Error::UnsupportedAlpha(q_str(cfg.alpha())));
    }
    let delta = diag.delta(cfg);
    let n_max = cfg.max_size_at(&delta)?;
    let gap = n_max.saturating_sub(diag.ambient().n() as u64);
    if gap >= 6 {
        return Err(Error::WindowExceeded { gap });
    }
    tower_search(diag.ambient(), cfg, gap, true, |ext| {
        Ok(eventual_closure_conditions(diag, ext, cfg)?.all())
    })
}

/// Sufficient-condition fast path plus the full enumeration. The fast check
/// fires when no pair from `B \ A` and `C \ A` is further apart than 3 (a
/// one-point closure would have to create a short cycle); whenever it fires
/// the enumeration must agree. The enumeration is the returned authority.
pub fn has_no_proper_eventual_closure(diag: &AmalgamDiagram, cfg: &GoodFunction) -> Result<bool> {
    let closures = eventual_closures(diag, cfg)?;
    let only_improper = closures.iter().all(|c| !c.is_proper());
    let amb = diag.ambient();
    let a = amb.mask_of(diag.part_a())?;
    let b = amb.mask_of(diag.part_b())?;
    let c = amb.mask_of(diag.part_c())?;
    let fast = matches!(
        amb.max_distance_between_masks(b & !a, c & !a),
        Some(d) if d <= 3
    );
    if fast && !only_improper {
        return Err(Error::Inconsistency(
            "distance-based sufficient condition fired but a proper closure was enumerated".into(),
        ));
    }
    Ok(only_improper)
}

/// All extensions `B ⊇ g` (up to isomorphism fixing `g` pointwise) with `g`
/// self-sufficient in `B`, equal predimension, `B` in the class, and every
/// constraint subset still d-closed in `B`. Built by one-point towers of
/// depth at most `depth_bound` (which must stay below 6). The base graph
/// itself is always part of the result list.
pub fn enumerate_zero_extensions(
    g: &Graph,
    closed_constraints: &[VertexSet],
    cfg: &GoodFunction,
    depth_bound: u64,
) -> Result<Vec<EventualClosure>> {
    if depth_bound > 5 {
        return Err(Error::UnsupportedBound(format!(
            "depth bound {depth_bound} is outside the one-point tower window (max 5)"
        )));
    }
    if !in_class(g, cfg)? {
        return Err(Error::Precondition(
            "the base graph must be a class member".into(),
        ));
    }
    {
        let table = DeltaTable::new(g, cfg)?;
        for s in closed_constraints {
            if !table.is_d_closed(g.mask_of(s)?) {
                return Err(Error::Precondition(format!(
                    "constraint {{{}}} is not d-closed in the base graph",
                    s.iter().cloned().collect::<Vec<_>>().join(", ")
                )));
            }
        }
    }
    let base_delta = predimension(g, cfg);
    let base_set = g.vertex_set();
    tower_search(g, cfg, depth_bound, true, |ext| {
        let table = DeltaTable::new(ext, cfg)?;
        if !table.is_self_sufficient(ext.mask_of(&base_set)?) {
            return Ok(false);
        }
        if predimension(ext, cfg) != base_delta {
            return Ok(false);
        }
        for s in closed_constraints {
            if !table.is_d_closed(ext.mask_of(s)?) {
                return Ok(false);
            }
        }
        in_class(ext, cfg)
    })
}

// ---------------------------------------------------------------------------
// Free amalgamation property of the whole class
// ---------------------------------------------------------------------------

/// A parallelogram of lattice points violating the class check.
#[derive(Clone, Debug)]
pub struct ParallelogramWitness {
    pub p: (u64, Q),
    pub q: (u64, Q),
    pub r: (u64, Q),
    pub fourth: (u64, Q),
}

/// Report of [`verify_free_amalgamation_property`].
#[derive(Clone, Debug)]
pub struct AmalgReport {
    pub size_bound: u64,
    pub point_count: usize,
    pub parallelogram_ok: bool,
    pub counterexample: Option<ParallelogramWitness>,
    /// Slow-growth headroom at the bound: `f(3t) <= f(t) + 1` for
    /// `t = size_bound`, the single tail fact the finite scan leans on.
    pub tail_growth_t: u64,
    pub tail_growth_ok: bool,
    pub passed: bool,
}

impl AmalgReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "size_bound": self.size_bound,
            "points": self.point_count,
            "parallelogram_ok": self.parallelogram_ok,
            "counterexample": self.counterexample.as_ref().map(|w| serde_json::json!({
                "p": [w.p.0, q_str(&w.p.1)],
                "q": [w.q.0, q_str(&w.q.1)],
                "r": [w.r.0, q_str(&w.r.1)],
                "fourth": [w.fourth.0, q_str(&w.fourth.1)],
            })),
            "tail_growth_t": self.tail_growth_t,
            "tail_growth_ok": self.tail_growth_ok,
            "passed": self.passed,
        })
    }
}

/// Checks the finite half of the free-amalgamation property: for all lattice
/// points `p, q, r` realizable by class members up to `size_bound` (possibly
/// `q = r`) with `p` strictly below both in size and predimension, the
/// fourth parallelogram vertex stays above the control function. Also
/// records the slow-growth headroom `f(3 * size_bound) <= f(size_bound) + 1`
/// that covers sizes beyond the scan.
pub fn verify_free_amalgamation_property(
    cfg: &GoodFunction,
    size_bound: u64,
) -> Result<AmalgReport> {
    if size_bound == 0 || size_bound > 8 {
        return Err(Error::UnsupportedBound(format!(
            "size bound {size_bound} not in 1..=8"
        )));
    }
    let points = realizable_points(cfg, size_bound as usize)?;
    let mut counterexample = None;
    'outer: for p in &points {
        for (qi, pt_q) in points.iter().enumerate() {
            if !(p.0 < pt_q.0 && p.1 < pt_q.1) {
                continue;
            }
            for pt_r in points.iter().skip(qi) {
                if !(p.0 < pt_r.0 && p.1 < pt_r.1) {
                    continue;
                }
                let fourth = (pt_q.0 + pt_r.0 - p.0, pt_q.1.clone() + &pt_r.1 - &p.1);
                if cfg.compare(&fourth.1, fourth.0)? == Ordering::Less {
                    counterexample = Some(ParallelogramWitness {
                        p: p.clone(),
                        q: pt_q.clone(),
                        r: pt_r.clone(),
                        fourth,
                    });
                    break 'outer;
                }
            }
        }
    }
    let tail_growth_ok = cfg.growth_at(&q(1), size_bound)?.holds();
    let parallelogram_ok = counterexample.is_none();
    Ok(AmalgReport {
        size_bound,
        point_count: points.len(),
        parallelogram_ok,
        counterexample,
        tail_growth_t: size_bound,
        tail_growth_ok,
        passed: parallelogram_ok && tail_growth_ok,
    })
}

// ---------------------------------------------------------------------------
// Standard diagrams
// ---------------------------------------------------------------------------

/// The small amalgams driving the measure identities, named by shape.
pub mod standard {
    use super::*;
    use crate::graph::vset;

    /// Path of length two as two edges glued at the middle vertex.
    pub fn two_edges_over_vertex(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::path(&["v1", "v2", "v3"]),
            vset(["v2"]),
            vset(["v1", "v2"]),
            vset(["v2", "v3"]),
            cfg,
        )
    }

    /// Two isolated vertices over the empty base.
    pub fn two_vertices_over_empty(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::build(&["v1", "v2"], &[]),
            VertexSet::new(),
            vset(["v1"]),
            vset(["v2"]),
            cfg,
        )
    }

    /// Path of length three as two length-two paths glued along an edge.
    pub fn two_paths_over_edge(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::path(&["v1", "v2", "v3", "v4"]),
            vset(["v2", "v3"]),
            vset(["v1", "v2", "v3"]),
            vset(["v2", "v3", "v4"]),
            cfg,
        )
    }

    /// Edge plus isolated vertex: two vertices and an edge glued over a
    /// single shared vertex.
    pub fn edge_and_vertex_over_vertex(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::build(&["v1", "v2", "v3"], &[("v1", "v2")]),
            vset(["v1"]),
            vset(["v1", "v3"]),
            vset(["v1", "v2"]),
            cfg,
        )
    }

    /// Length-two path plus isolated vertex, as two copies of
    /// edge-plus-vertex glued over two isolated vertices.
    pub fn two_links_over_two_vertices(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::build(&["v1", "v2", "v3", "v4"], &[("v1", "v2"), ("v2", "v3")]),
            vset(["v2", "v4"]),
            vset(["v1", "v2", "v4"]),
            vset(["v2", "v3", "v4"]),
            cfg,
        )
    }

    /// The 5-vertex spider (legs 1, 1, 2) as two length-three paths glued
    /// along a length-two path.
    pub fn two_long_paths_over_path(cfg: &GoodFunction) -> Result<AmalgamDiagram> {
        AmalgamDiagram::new(
            Graph::build(
                &["v1", "v2", "v3", "v4", "v5"],
                &[("v1", "v2"), ("v3", "v2"), ("v2", "v4"), ("v4", "v5")],
            ),
            vset(["v2", "v4", "v5"]),
            vset(["v1", "v2", "v4", "v5"]),
            vset(["v3", "v2", "v4", "v5"]),
            cfg,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, vset};

    fn cfg() -> GoodFunction {
        GoodFunction::standard()
    }

    #[test]
    fn free_amalgam_examples() {
        let e1 = Graph::build(&["v1", "v2"], &[("v1", "v2")]);
        let e2 = Graph::build(&["v2", "v3"], &[("v2", "v3")]);
        let d = free_amalgam_over(&e1, &e2, &vset(["v2"]), &cfg()).unwrap();
        assert!(are_isomorphic(d.ambient(), &Graph::path(&["a", "b", "c"])));

        let p1 = Graph::build(&["v1"], &[]);
        let p2 = Graph::build(&["v2"], &[]);
        let d = free_amalgam_over(&p1, &p2, &VertexSet::new(), &cfg()).unwrap();
        assert_eq!(d.ambient().n(), 2);
        assert_eq!(d.ambient().edge_count(), 0);

        let b = Graph::build(&["v1", "v2", "v4"], &[("v1", "v2")]);
        let c = Graph::build(&["v2", "v3", "v4"], &[("v2", "v3")]);
        let d = free_amalgam_over(&b, &c, &vset(["v2", "v4"]), &cfg()).unwrap();
        let expect = Graph::build(&["x", "y", "z", "w"], &[("x", "y"), ("y", "z")]);
        assert!(are_isomorphic(d.ambient(), &expect));
    }

    #[test]
    fn free_amalgam_rejects_bad_input() {
        // The two endpoints of a 2-path are not d-closed in it.
        let p = Graph::path(&["v1", "v2", "v3"]);
        let other = Graph::build(&["v1", "v3", "v9"], &[]);
        let err = free_amalgam_over(&p, &other, &vset(["v1", "v3"]), &cfg());
        assert!(matches!(err, Err(Error::Precondition(_))));

        // Non-identified shared label.
        let a = Graph::build(&["x", "y"], &[("x", "y")]);
        let b = Graph::build(&["x", "z"], &[("x", "z")]);
        assert!(matches!(
            free_amalgam(&a, &b, &[("y".into(), "z".into())], &cfg()),
            Err(Error::InvalidAmalgam(_))
        ));
    }

    #[test]
    fn one_point_extension_examples() {
        let two = Graph::build(&["v1", "v2"], &[]);
        let exts = one_point_extensions(&two, &cfg()).unwrap();
        assert_eq!(exts.len(), 1);
        assert!(are_isomorphic(&exts[0].0, &Graph::path(&["a", "b", "c"])));

        // Edge plus vertex: two admissible attachment pairs (each free end
        // with the isolated vertex); the pair inside the edge would create a
        // triangle.
        let g = Graph::build(&["v1", "v2", "v3"], &[("v1", "v2")]);
        let exts = one_point_extensions(&g, &cfg()).unwrap();
        assert_eq!(exts.len(), 2);
        for (ext, _) in &exts {
            assert!(are_isomorphic(ext, &Graph::path(&["a", "b", "c", "d"])));
            assert!(in_class(ext, &cfg()).unwrap());
        }

        // Attachment pairs at distance 3 close a 5-cycle (excluded); at
        // distance 4 they close a 6-cycle (included).
        let p4 = Graph::path(&["v1", "v2", "v3", "v4"]);
        let pairs: Vec<_> = one_point_extensions(&p4, &cfg())
            .unwrap()
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        assert!(!pairs.contains(&("v1".to_string(), "v4".to_string())));
        let p5 = Graph::path(&["v1", "v2", "v3", "v4", "v5"]);
        let exts = one_point_extensions(&p5, &cfg()).unwrap();
        let closes_c6 = exts.iter().any(|(ext, pair)| {
            pair == &("v1".to_string(), "v5".to_string()) && ext.edge_count() == 6
        });
        assert!(closes_c6);
    }

    #[test]
    fn pruned_and_unpruned_extension_search_agree() {
        for g in [
            Graph::build(&["v1", "v2"], &[]),
            Graph::build(&["v1", "v2", "v3"], &[("v1", "v2")]),
            Graph::path(&["v1", "v2", "v3", "v4", "v5"]),
            Graph::cycle(&["v1", "v2", "v3", "v4", "v5", "v6"]),
        ] {
            let pruned = one_point_extensions_impl(&g, &cfg(), true).unwrap();
            let full = one_point_extensions_impl(&g, &cfg(), false).unwrap();
            let key = |v: &Vec<(Graph, (String, String))>| {
                v.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>()
            };
            assert_eq!(key(&pruned), key(&full));
        }
    }

    #[test]
    fn eventual_closures_of_standard_diagrams() {
        let cases: Vec<(AmalgamDiagram, usize)> = vec![
            (standard::two_edges_over_vertex(&cfg()).unwrap(), 1),
            (standard::two_vertices_over_empty(&cfg()).unwrap(), 2),
            (standard::two_paths_over_edge(&cfg()).unwrap(), 1),
            (standard::edge_and_vertex_over_vertex(&cfg()).unwrap(), 2),
            (standard::two_links_over_two_vertices(&cfg()).unwrap(), 1),
            (standard::two_long_paths_over_path(&cfg()).unwrap(), 1),
        ];
        for (diag, want) in cases {
            let closures = eventual_closures(&diag, &cfg()).unwrap();
            assert_eq!(closures.len(), want, "diagram {:?}", diag.ambient());
            for c in &closures {
                let conds = eventual_closure_conditions(&diag, &c.extension, &cfg()).unwrap();
                assert!(conds.all(), "conditions {conds:?} on {:?}", c.extension);
            }
        }
    }

    #[test]
    fn proper_closure_of_vertex_pair_is_the_short_path() {
        let diag = standard::two_vertices_over_empty(&cfg()).unwrap();
        let closures = eventual_closures(&diag, &cfg()).unwrap();
        let proper: Vec<_> = closures.iter().filter(|c| c.is_proper()).collect();
        assert_eq!(proper.len(), 1);
        assert!(are_isomorphic(
            &proper[0].extension,
            &Graph::path(&["a", "b", "c"])
        ));
        assert_eq!(proper[0].tower.len(), 1);
    }

    #[test]
    fn no_proper_closure_checks() {
        let c = cfg();
        assert!(has_no_proper_eventual_closure(
            &standard::two_long_paths_over_path(&c).unwrap(),
            &c
        )
        .unwrap());
        assert!(!has_no_proper_eventual_closure(
            &standard::two_vertices_over_empty(&c).unwrap(),
            &c
        )
        .unwrap());
        assert!(
            has_no_proper_eventual_closure(&standard::two_paths_over_edge(&c).unwrap(), &c)
                .unwrap()
        );
    }

    #[test]
    fn window_is_enforced() {
        // Six isolated vertices have predimension 12; the logarithmic tail
        // puts the maximal size at 6 * 3^6, far beyond the window.
        let six = Graph::build(&["a", "b", "c", "d", "e", "f"], &[]);
        let diag = AmalgamDiagram::new(
            six,
            vset(["a"]),
            vset(["a", "b", "c"]),
            vset(["a", "d", "e", "f"]),
            &cfg(),
        )
        .unwrap();
        assert!(matches!(
            eventual_closures(&diag, &cfg()),
            Err(Error::WindowExceeded { .. })
        ));
    }

    #[test]
    fn zero_extensions_of_constrained_base() {
        // Base: path v2 - u - v3 plus isolated v1, with the pair closures and
        // singletons pinned d-closed.
        let base = Graph::build(&["v1", "v2", "v3", "u"], &[("v2", "u"), ("u", "v3")]);
        let constraints = vec![
            vset(["v1", "v2"]),
            vset(["v1", "v3"]),
            vset(["v2", "u", "v3"]),
            vset(["v1"]),
            vset(["v2"]),
            vset(["v3"]),
        ];
        let exts = enumerate_zero_extensions(&base, &constraints, &cfg(), 5).unwrap();
        assert_eq!(exts.len(), 2);
        let proper: Vec<_> = exts.iter().filter(|e| e.is_proper()).collect();
        assert_eq!(proper.len(), 1);
        // The unique proper extension joins the new vertex to u and v1.
        let spider = Graph::build(
            &["v1", "v2", "v3", "u", "w"],
            &[("v2", "u"), ("u", "v3"), ("w", "u"), ("w", "v1")],
        );
        assert!(are_isomorphic(&proper[0].extension, &spider));
        let step = &proper[0].tower[0];
        assert!(
            step.attach == ("u".into(), "v1".into()) || step.attach == ("v1".into(), "u".into())
        );

        // That extension admits nothing further: it is its own only result.
        let again = enumerate_zero_extensions(&proper[0].extension, &[], &cfg(), 5).unwrap();
        assert_eq!(again.len(), 1);
        assert!(!again[0].is_proper());
    }

    #[test]
    fn zero_extensions_respect_blocking_constraints() {
        // Two isolated vertices with the pair pinned d-closed: the only
        // admissible extension (the 2-path) breaks that pin, so only the
        // base survives.
        let base = Graph::build(&["v1", "v2"], &[]);
        let exts = enumerate_zero_extensions(&base, &[vset(["v1", "v2"])], &cfg(), 5).unwrap();
        assert_eq!(exts.len(), 1);
        assert!(!exts[0].is_proper());

        assert!(matches!(
            enumerate_zero_extensions(&base, &[], &cfg(), 6),
            Err(Error::UnsupportedBound(_))
        ));
    }

    #[test]
    fn amalgamation_property_scan() {
        let report = verify_free_amalgamation_property(&cfg(), 6).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.tail_growth_ok);

        // Raising the tail above the slow-growth bound breaks the check.
        let vals: Vec<(u64, Q)> = (7..=18)
            .map(|n| {
                (
                    n,
                    if n < 18 {
                        crate::rational::q_ratio(13, 2)
                    } else {
                        crate::rational::q_ratio(15, 2)
                    },
                )
            })
            .collect();
        let broken = GoodFunction::new(
            q(2),
            vec![(1, q(2)), (4, q(5)), (6, q(6))],
            crate::predim::Tail::RationalTable(vals),
        )
        .unwrap();
        let report = verify_free_amalgamation_property(&broken, 6).unwrap();
        assert!(!report.passed);
        assert!(!report.tail_growth_ok);
    }
}
