//! Finite simple graphs with opaque string labels.
//!
//! Vertices are identified by their labels; this keeps marked subsets stable
//! across every operation. Adjacency is stored as per-vertex bitmasks, which
//! caps graphs at 64 vertices (orders of magnitude above anything the
//! exhaustive scans can absorb anyway).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertex labels. Operations taking a `VertexSet` validate that it
/// is contained in the ambient graph.
pub type VertexSet = BTreeSet<String>;

/// Convenience constructor for a [`VertexSet`].
pub fn vset<I, S>(items: I) -> VertexSet
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    items.into_iter().map(|s| s.as_ref().to_string()).collect()
}

const MAX_VERTICES: usize = 64;

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>, // sorted, unique
    adj: Vec<u64>,       // adj[i] bit j set iff {i, j} is an edge
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices: ", self.n())?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "; edges:")?;
        for (i, j) in self.edge_indices() {
            write!(f, " {}-{}", self.labels[i], self.labels[j])?;
        }
        write!(f, ")")
    }
}

impl Graph {
    /// Builds a graph from labels and label pairs. Duplicate vertices and
    /// edges collapse (sets, not multisets); loops are rejected.
    pub fn from_parts<I, S, E, T>(vertices: I, edges: E) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let labels: BTreeSet<String> = vertices
            .into_iter()
            .map(|s| s.as_ref().to_string())
            .collect();
        let labels: Vec<String> = labels.into_iter().collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{} vertices exceeds the supported maximum of {MAX_VERTICES}",
                labels.len()
            )));
        }
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adj = vec![0u64; labels.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at `{a}`")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Graph { labels, adj })
    }

    /// Shorthand used throughout the tests.
    pub fn build(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::from_parts(vertices.iter().copied(), edges.iter().copied())
            .expect("static graph literal must be valid")
    }

    /// The empty graph.
    pub fn empty() -> Graph {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// Path `p_0 - p_1 - ... - p_{k-1}` over the given labels.
    pub fn path(labels: &[&str]) -> Graph {
        let edges: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        Graph::build(labels, &edges)
    }

    /// Cycle over the given labels (needs at least 3).
    pub fn cycle(labels: &[&str]) -> Graph {
        assert!(labels.len() >= 3);
        let mut edges: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        edges.push((labels[labels.len() - 1], labels[0]));
        Graph::build(labels, &edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().cloned().collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownVertex(label.to_string()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index_of(label).is_ok()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn adj_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn full_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Edge list as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n() {
            let mut m = self.adj[i] >> (i + 1) << (i + 1);
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                out.push((i, j));
                m &= m - 1;
            }
        }
        out
    }

    /// Edge list as label pairs, each pair sorted.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Bitmask of a label set; errors when a member is outside the graph.
    pub fn mask_of(&self, set: &VertexSet) -> Result<u64> {
        let mut m = 0u64;
        for l in set {
            let i = self
                .index_of(l)
                .map_err(|_| Error::SubsetNotInAmbient(l.clone()))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn set_of(&self, mask: u64) -> VertexSet {
        let mut out = VertexSet::new();
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.insert(self.labels[i].clone());
            m &= m - 1;
        }
        out
    }

    /// Induced subgraph on a bitmask of vertex indices.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let kept: Vec<usize> = (0..self.n()).filter(|i| mask >> i & 1 == 1).collect();
        let labels: Vec<String> = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let mut adj = vec![0u64; kept.len()];
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                if self.adjacent(i, j) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Graph { labels, adj }
    }

    /// Induced subgraph on a set of labels.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        let mask = self.mask_of(set)?;
        Ok(self.induced_mask(mask))
    }

    /// Graph with one extra vertex attached to the given labels.
    pub fn with_new_vertex(&self, label: &str, attach: &[&str]) -> Result<Graph> {
        if self.has_vertex(label) {
            return Err(Error::InvalidGraph(format!(
                "vertex `{label}` already present"
            )));
        }
        let mut vs: Vec<String> = self.labels.clone();
        vs.push(label.to_string());
        let mut es = self.edge_labels();
        for a in attach {
            self.index_of(a)?;
            es.push((label.to_string(), a.to_string()));
        }
        Graph::from_parts(vs, es)
    }

    /// Smallest `"{stem}{k}"` not already used as a label.
    pub fn fresh_label(&self, stem: &str) -> String {
        let mut k = 1usize;
        loop {
            let cand = format!("{stem}{k}");
            if !self.has_vertex(&cand) {
                return cand;
            }
            k += 1;
        }
    }

    /// Union of two graphs glued along shared labels; edge sets are unioned.
    pub fn union_by_labels(a: &Graph, b: &Graph) -> Result<Graph> {
        let vs: Vec<String> = a.labels.iter().chain(b.labels.iter()).cloned().collect();
        let es: Vec<(String, String)> = a
            .edge_labels()
            .into_iter()
            .chain(b.edge_labels())
            .collect();
        Graph::from_parts(vs, es)
    }

    /// Applies an injective relabeling; labels missing from the map stay.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Graph> {
        let f = |l: &String| map.get(l).cloned().unwrap_or_else(|| l.clone());
        let vs: Vec<String> = self.labels.iter().map(f).collect();
        let uniq: BTreeSet<&String> = vs.iter().collect();
        if uniq.len() != vs.len() {
            return Err(Error::InvalidGraph("relabeling is not injective".into()));
        }
        let es: Vec<(String, String)> = self
            .edge_labels()
            .into_iter()
            .map(|(x, y)| (f(&x), f(&y)))
            .collect();
        Graph::from_parts(vs, es)
    }

    /// Shortest-path distance between two labels; `None` when disconnected.
    pub fn distance(&self, u: &str, v: &str) -> Result<Option<u64>> {
        let s = self.index_of(u)?;
        let t = self.index_of(v)?;
        if s == t {
            return Ok(Some(0));
        }
        let mut dist = vec![u64::MAX; self.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let mut m = self.adj[x];
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                if dist[y] == u64::MAX {
                    dist[y] = dist[x] + 1;
                    if y == t {
                        return Ok(Some(dist[y]));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// Shortest-path distance between two index masks (min over pairs);
    /// `None` when every pair is disconnected or a side is empty.
    pub fn distance_between_masks(&self, a: u64, b: u64) -> Option<u64> {
        let mut best: Option<u64> = None;
        let mut m = a;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut w = b;
            while w != 0 {
                let j = w.trailing_zeros() as usize;
                w &= w - 1;
                if let Some(d) = self
                    .distance(&self.labels[i].clone(), &self.labels[j].clone())
                    .expect("indices in range")
                {
                    best = Some(best.map_or(d, |x| x.min(d)));
                }
            }
        }
        best
    }

    /// Maximum over pairs of the shortest-path distance; `None` encodes an
    /// infinite (disconnected) pair, `Some(0)` an empty side.
    pub fn max_distance_between_masks(&self, a: u64, b: u64) -> Option<u64> {
        let mut worst: Option<u64> = Some(0);
        let mut m = a;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut w = b;
            while w != 0 {
                let j = w.trailing_zeros() as usize;
                w &= w - 1;
                match self
                    .distance(&self.labels[i].clone(), &self.labels[j].clone())
                    .expect("indices in range")
                {
                    Some(d) => {
                        if let Some(cur) = worst {
                            worst = Some(cur.max(d));
                        }
                    }
                    None => return None,
                }
            }
        }
        worst
    }
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Canonical certificate of a graph, optionally with a pinned vertex prefix
/// and per-vertex colors.
///
/// Two graphs get equal certificates iff there is an isomorphism between them
/// that is the identity on the pinned prefix (matched by position) and
/// respects colors. The certificate is computed by exhaustive minimization
/// over vertex orderings with branch-and-bound pruning; this is factorial in
/// the number of free vertices, which is fine at the scales handled here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    pinned: u8,
    colors: Vec<u32>,
    rows: Vec<u64>, // rows[i] bit j (j < i) set iff positions i, j adjacent
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Compact stable text key, usable as a JSON map key.
    pub fn key(&self) -> String {
        let mut s = format!("{}p{}", self.n, self.pinned);
        if !self.colors.is_empty() {
            s.push('c');
            for c in &self.colors {
                s.push_str(&format!("{c:x}."));
            }
        }
        s.push(':');
        for r in &self.rows {
            s.push_str(&format!("{r:x}."));
        }
        s
    }

    /// Rebuilds a concrete representative graph with labels `c0, c1, ...`.
    pub fn to_graph(&self) -> Graph {
        let labels: Vec<String> = (0..self.n).map(|i| format!("c{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let mut edges: Vec<(&str, &str)> = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut m = *r;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                edges.push((refs[i], refs[j]));
            }
        }
        Graph::build(&refs, &edges)
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    group_of_pos: Vec<usize>,
    groups: Vec<Vec<usize>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl<'a> CanonSearch<'a> {
    fn run(mut self, start: usize) -> Vec<u64> {
        let n = self.g.n();
        self.descend(start, n);
        self.best.expect("at least one ordering exists")
    }

    fn descend(&mut self, i: usize, n: usize) {
        if i == n {
            let better = match &self.best {
                None => true,
                Some(b) => self.cur.as_slice() < b.as_slice(),
            };
            if better {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let group = self.group_of_pos[i].min(self.groups.len().saturating_sub(1));
        let candidates: Vec<usize> = self.groups[group].clone();
        for v in candidates {
            if self.used[v] {
                continue;
            }
            let mut row = 0u64;
            for (j, &u) in self.assigned.iter().enumerate() {
                if self.g.adjacent(v, u) {
                    row |= 1 << j;
                }
            }
            // Prefix pruning against the best certificate found so far.
            if let Some(b) = &self.best {
                let mut skip = false;
                for j in 0..=i {
                    let cand = if j < i { self.cur[j] } else { row };
                    match cand.cmp(&b[j]) {
                        std::cmp::Ordering::Less => break,
                        std::cmp::Ordering::Equal => continue,
                        std::cmp::Ordering::Greater => {
                            skip = true;
                            break;
                        }
                    }
                }
                if skip {
                    continue;
                }
            }
            self.used[v] = true;
            self.assigned.push(v);
            self.cur.push(row);
            self.descend(i + 1, n);
            self.cur.pop();
            self.assigned.pop();
            self.used[v] = false;
        }
    }
}

impl Graph {
    fn canonical_with(&self, pinned: &[usize], colors: Option<&[u32]>) -> CanonicalForm {
        let n = self.n();
        let pinned_set: BTreeSet<usize> = pinned.iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|i| !pinned_set.contains(i)).collect();

        // Free vertices grouped by ascending color; positions inherit the
        // sorted color sequence, so equal color multisets align.
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut pos_colors: Vec<u32> = Vec::new();
        let mut group_of_pos: Vec<usize> = vec![usize::MAX; n];
        match colors {
            Some(cols) => {
                let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
                for &v in &free {
                    by_color.entry(cols[v]).or_default().push(v);
                }
                for &p in pinned {
                    pos_colors.push(cols[p]);
                }
                let mut pos = pinned.len();
                for (color, members) in by_color {
                    let gi = groups.len();
                    for _ in 0..members.len() {
                        group_of_pos[pos] = gi;
                        pos_colors.push(color);
                        pos += 1;
                    }
                    groups.push(members);
                }
            }
            None => {
                for pos in pinned.len()..n {
                    group_of_pos[pos] = 0;
                }
                groups.push(free);
            }
        }

        let mut cur = Vec::with_capacity(n);
        for (i, &v) in pinned.iter().enumerate() {
            let mut row = 0u64;
            for (j, &u) in pinned[..i].iter().enumerate() {
                if self.adjacent(v, u) {
                    row |= 1 << j;
                }
            }
            cur.push(row);
        }
        let search = CanonSearch {
            g: self,
            group_of_pos,
            groups,
            used: {
                let mut u = vec![false; n];
                for &p in pinned {
                    u[p] = true;
                }
                u
            },
            assigned: pinned.to_vec(),
            cur,
            best: None,
        };
        let rows = search.run(pinned.len());
        CanonicalForm {
            n: n as u8,
            pinned: pinned.len() as u8,
            colors: if colors.is_some() { pos_colors } else { Vec::new() },
            rows,
        }
    }

    /// Plain canonical form: equal certificates iff isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_with(&[], None)
    }

    /// Canonical form where the listed labels are pinned pointwise, in the
    /// given order. Certificates agree iff there is an isomorphism fixing the
    /// pinned vertices pointwise.
    pub fn canonical_form_fixing(&self, pinned: &[String]) -> Result<CanonicalForm> {
        let idx: Vec<usize> = pinned
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<_>>()?;
        Ok(self.canonical_with(&idx, None))
    }

    /// Canonical form of a vertex-colored graph (isomorphisms must preserve
    /// colors).
    pub fn canonical_form_colored(&self, colors: &[u32]) -> CanonicalForm {
        assert_eq!(colors.len(), self.n());
        self.canonical_with(&[], Some(colors))
    }
}

/// Edge-preserving bijection test via canonical certificates.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && g.canonical_form() == h.canonical_form()
}

/// Number of automorphisms of `g` fixing `base` pointwise, by exhaustive
/// search over assignments of the remaining vertices.
pub fn count_automorphisms_fixing(g: &Graph, base: &VertexSet) -> Result<u64> {
    let base_mask = g.mask_of(base)?;
    let free: Vec<usize> = (0..g.n()).filter(|i| base_mask >> i & 1 == 0).collect();
    fn rec(
        g: &Graph,
        free: &[usize],
        base_mask: u64,
        i: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> u64 {
        if i == free.len() {
            return 1;
        }
        let src = free[i];
        let mut total = 0;
        for (k, &cand) in free.iter().enumerate() {
            if used[k] {
                continue;
            }
            // Base vertices are fixed, so adjacency into the base must match
            // exactly; adjacency among already-mapped free vertices likewise.
            if g.adj_mask(src) & base_mask != g.adj_mask(cand) & base_mask {
                continue;
            }
            let ok = (0..i).all(|j| g.adjacent(src, free[j]) == g.adjacent(cand, image[j]));
            if !ok {
                continue;
            }
            used[k] = true;
            image.push(cand);
            total += rec(g, free, base_mask, i + 1, image, used);
            image.pop();
            used[k] = false;
        }
        total
    }
    let mut image = Vec::with_capacity(free.len());
    let mut used = vec![false; free.len()];
    Ok(rec(g, &free, base_mask, 0, &mut image, &mut used))
}

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, generated by edge augmentation with canonical deduplication.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let start = Graph::build(&refs, &[]);
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    seen.insert(start.canonical_form());
    let mut out = vec![start.clone()];
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for i in 0..n {
                for j in i + 1..n {
                    if g.adjacent(i, j) {
                        continue;
                    }
                    let mut vs = g.labels().to_vec();
                    let mut es = g.edge_labels();
                    es.push((g.label(i).to_string(), g.label(j).to_string()));
                    let h = Graph::from_parts(vs.drain(..), es).expect("augmented graph valid");
                    if seen.insert(h.canonical_form()) {
                        out.push(h.clone());
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

// ---------------------------------------------------------------------------
// Text / JSON formats
// ---------------------------------------------------------------------------

impl Graph {
    /// Parses the line format: `v <label>`, `e <label> <label>`, with blank
    /// lines and `#` comments ignored. A leading `{` switches to the JSON
    /// form `{"vertices": [...], "edges": [[a, b], ...]}`.
    pub fn parse(input: &str) -> Result<Graph> {
        if input.trim_start().starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(input).map_err(|e| Error::Parse {
                line: e.line(),
                msg: e.to_string(),
            })?;
            return Graph::from_json(&v);
        }
        let mut vs: Vec<String> = Vec::new();
        let mut es: Vec<(String, String, usize)> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let tok: Vec<&str> = t.split_whitespace().collect();
            match tok[0] {
                "v" if tok.len() == 2 => vs.push(tok[1].to_string()),
                "e" if tok.len() == 3 => {
                    es.push((tok[1].to_string(), tok[2].to_string(), line));
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unrecognized line `{t}`"),
                    })
                }
            }
        }
        let declared: BTreeSet<&String> = vs.iter().collect();
        for (a, b, line) in &es {
            for end in [a, b] {
                if !declared.contains(end) {
                    return Err(Error::Parse {
                        line: *line,
                        msg: format!("edge endpoint `{end}` was never declared"),
                    });
                }
            }
            if a == b {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("loop at `{a}`"),
                });
            }
        }
        Graph::from_parts(vs, es.into_iter().map(|(a, b, _)| (a, b)))
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Graph> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let vs = obj
            .get("vertices")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing `vertices` array"))?;
        let vs: Vec<String> = vs
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("vertex labels must be strings"))
            })
            .collect::<Result<_>>()?;
        let es = match obj.get("edges") {
            None => Vec::new(),
            Some(e) => e
                .as_array()
                .ok_or_else(|| bad("`edges` must be an array"))?
                .iter()
                .map(|pair| {
                    let p = pair
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| bad("each edge must be a 2-element array"))?;
                    let a = p[0].as_str().ok_or_else(|| bad("edge endpoints must be strings"))?;
                    let b = p[1].as_str().ok_or_else(|| bad("edge endpoints must be strings"))?;
                    Ok((a.to_string(), b.to_string()))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Graph::from_parts(vs, es)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.labels {
            s.push_str(&format!("v {l}\n"));
        }
        for (a, b) in self.edge_labels() {
            s.push_str(&format!("e {a} {b}\n"));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.labels,
            "edges": self
                .edge_labels()
                .into_iter()
                .map(|(a, b)| serde_json::json!([a, b]))
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6() -> Graph {
        Graph::cycle(&["v1", "v2", "v3", "v4", "v5", "v6"])
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = c6();
        let p = g.induced(&vset(["v1", "v2", "v3"])).unwrap();
        assert!(are_isomorphic(&p, &Graph::path(&["a", "b", "c"])));

        let e = g.induced(&vset::<[&str; 0], &str>([])).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(e.edge_count(), 0);

        let two = g.induced(&vset(["v1", "v4"])).unwrap();
        assert_eq!(two.n(), 2);
        assert_eq!(two.edge_count(), 0);

        assert!(matches!(
            g.induced(&vset(["v1", "zz"])),
            Err(Error::SubsetNotInAmbient(_))
        ));
    }

    #[test]
    fn induced_is_monotone() {
        let g = c6();
        let s = vset(["v1", "v2"]);
        let t = vset(["v1", "v2", "v3", "v5"]);
        let gs = g.induced(&s).unwrap();
        let gt = g.induced(&t).unwrap();
        let gs_via_t = gt.induced(&s).unwrap();
        assert_eq!(gs, gs_via_t);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(
            &Graph::path(&["v1", "v2", "v3"]),
            &Graph::path(&["a", "b", "c"])
        ));
        assert!(!are_isomorphic(
            &Graph::cycle(&["a", "b", "c"]),
            &Graph::path(&["a", "b", "c"])
        ));
        // 5-vertex star-with-tail in two different presentations.
        let b_prime = Graph::build(
            &["v1", "v2", "v3", "u", "w"],
            &[("u", "v2"), ("u", "v3"), ("u", "w"), ("w", "v1")],
        );
        let t_graph = Graph::build(
            &["v1", "v2", "v3", "v4", "v5"],
            &[("v1", "v2"), ("v3", "v2"), ("v2", "v4"), ("v4", "v5")],
        );
        assert!(are_isomorphic(&b_prime, &t_graph));
    }

    #[test]
    fn canonical_form_examples() {
        let g = c6();
        let h = Graph::cycle(&["x", "q", "m", "a", "z", "k"]);
        assert_eq!(g.canonical_form(), h.canonical_form());

        assert_eq!(Graph::empty().canonical_form().vertex_count(), 0);

        let p2 = Graph::path(&["a", "b", "c"]);
        let edge_plus = Graph::build(&["a", "b", "c"], &[("a", "b")]);
        assert_ne!(p2.canonical_form(), edge_plus.canonical_form());
    }

    #[test]
    fn canonical_form_round_trips_through_representative() {
        let g = Graph::build(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("b", "e")],
        );
        let c = g.canonical_form();
        assert!(are_isomorphic(&g, &c.to_graph()));
        assert_eq!(c.to_graph().canonical_form(), c);
    }

    #[test]
    fn pinned_canonical_distinguishes_attachments() {
        // Extensions of the fixed base {a, b, c}: new vertex joined to a vs b.
        let base = ["a".to_string(), "b".to_string(), "c".to_string()];
        let g1 = Graph::build(&["a", "b", "c", "w"], &[("a", "b"), ("w", "a")]);
        let g2 = Graph::build(&["a", "b", "c", "w"], &[("a", "b"), ("w", "b")]);
        let g3 = Graph::build(&["a", "b", "c", "x"], &[("a", "b"), ("x", "a")]);
        assert_ne!(
            g1.canonical_form_fixing(&base).unwrap(),
            g2.canonical_form_fixing(&base).unwrap()
        );
        assert_eq!(
            g1.canonical_form_fixing(&base).unwrap(),
            g3.canonical_form_fixing(&base).unwrap()
        );
    }

    #[test]
    fn automorphism_counts() {
        let path = Graph::path(&["v1", "w", "v3"]);
        assert_eq!(
            count_automorphisms_fixing(&path, &vset(["v1", "v3"])).unwrap(),
            1
        );
        assert_eq!(
            count_automorphisms_fixing(&path, &VertexSet::new()).unwrap(),
            2
        );
        let b_prime = Graph::build(
            &["v1", "v2", "v3", "u", "w"],
            &[("u", "v2"), ("u", "v3"), ("u", "w"), ("w", "v1")],
        );
        assert_eq!(
            count_automorphisms_fixing(&b_prime, &vset(["v1", "v2", "v3"])).unwrap(),
            1
        );
        // Full automorphism groups of familiar graphs.
        assert_eq!(
            count_automorphisms_fixing(&c6(), &VertexSet::new()).unwrap(),
            12
        );
    }

    #[test]
    fn distance_examples() {
        let g = c6();
        assert_eq!(g.distance("v1", "v4").unwrap(), Some(3));
        let two = Graph::build(&["a", "b"], &[]);
        assert_eq!(two.distance("a", "b").unwrap(), None);
        let p = Graph::path(&["v1", "v2", "v3"]);
        assert_eq!(p.distance("v1", "v3").unwrap(), Some(2));
        assert!(p.distance("v1", "zz").is_err());
    }

    #[test]
    fn parse_text_and_json() {
        let g = Graph::parse("# comment\nv a\nv b\nv c\n\ne a b\ne b c\n").unwrap();
        assert!(are_isomorphic(&g, &Graph::path(&["x", "y", "z"])));
        let again = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(again, g);

        let j = Graph::parse(r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#).unwrap();
        assert_eq!(j.edge_count(), 1);
        let again = Graph::from_json(&j.to_json()).unwrap();
        assert_eq!(again, j);

        assert!(matches!(
            Graph::parse("v a\ne a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("e a b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(Graph::parse("v a\ne a a\n").is_err());
    }

    #[test]
    fn enumeration_counts_match_oeis() {
        // Graphs on n nodes up to isomorphism: 1, 1, 2, 4, 11, 34, 156.
        for (n, want) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            assert_eq!(all_graphs_up_to_iso(n).len(), want, "n = {n}");
        }
    }
}
