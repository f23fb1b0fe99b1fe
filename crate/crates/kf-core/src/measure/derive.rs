//! Derivation of the measure identities: amalgamation equations from
//! eventual closures, and the triangle equation from triple gluings of
//! independent 2-types.

use std::collections::BTreeMap;

use crate::amalgam::{
    enumerate_zero_extensions, eventual_closures, standard, AmalgamDiagram,
};
use crate::error::{Error, Result};
use crate::graph::{count_automorphisms_fixing, vset, Graph, VertexSet};
use crate::measure::mpoly::{MPoly, MVar};
use crate::predim::{closure, dimension, GoodFunction};
use crate::rational::{q, Q};

/// A class member together with an ordered tuple of distinguished vertices
/// whose closure is the whole graph. This is the graph-side picture of a
/// complete type: the tuple realizes the type, the graph is its closure.
#[derive(Clone, Debug)]
pub struct TypedGraph {
    graph: Graph,
    tuple: Vec<String>,
}

impl TypedGraph {
    pub fn new(graph: Graph, tuple: Vec<String>, cfg: &GoodFunction) -> Result<TypedGraph> {
        let set: VertexSet = tuple.iter().cloned().collect();
        let cl = closure(&set, &graph, cfg)?;
        if cl != graph.vertex_set() {
            return Err(Error::InvalidTypedGraph(
                "the tuple's closure must be the whole graph".into(),
            ));
        }
        Ok(TypedGraph { graph, tuple })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tuple(&self) -> &[String] {
        &self.tuple
    }

    fn tuple_set(&self) -> VertexSet {
        self.tuple.iter().cloned().collect()
    }
}

/// The 2-type of a pair at distance two: a length-two path with the two
/// endpoints distinguished.
pub fn distance_two_type(cfg: &GoodFunction) -> Result<TypedGraph> {
    TypedGraph::new(
        Graph::path(&["x", "m", "y"]),
        vec!["x".into(), "y".into()],
        cfg,
    )
}

/// The 2-type of a distant (independent, non-interacting) pair: two isolated
/// vertices, both distinguished.
pub fn far_pair_type(cfg: &GoodFunction) -> Result<TypedGraph> {
    TypedGraph::new(
        Graph::build(&["x", "y"], &[]),
        vec!["x".into(), "y".into()],
        cfg,
    )
}

/// An equation between two measure polynomials, kept raw: the unit variable
/// (single vertex) appears explicitly and denominators are cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureEquation {
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub label: String,
    pub provenance: String,
}

impl MeasureEquation {
    pub fn difference(&self) -> MPoly {
        self.lhs.sub(&self.rhs)
    }

    /// Substitutes the unit variable by 1 on both sides.
    pub fn normalized(&self, unit: &MVar) -> MeasureEquation {
        MeasureEquation {
            lhs: self.lhs.substitute(unit, &MPoly::one()),
            rhs: self.rhs.substitute(unit, &MPoly::one()),
            label: self.label.clone(),
            provenance: self.provenance.clone(),
        }
    }

    /// Every monomial on both raw sides must carry the same
    /// predimension-weighted degree (the dimension half of the bookkeeping).
    pub fn degree_balanced(&self, alpha: &Q) -> bool {
        let mut expected: Option<Q> = None;
        for side in [&self.lhs, &self.rhs] {
            for (m, _) in side.terms() {
                let d = m.weighted_degree(alpha);
                match &expected {
                    None => expected = Some(d),
                    Some(e) => {
                        if *e != d {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The measure contribution of a typed graph: the class variable of its
/// graph, weighted by the reciprocal of the number of automorphisms fixing
/// the tuple pointwise. The empty graph contributes the constant 1.
pub fn type_measure_expression(t: &TypedGraph, cfg: &GoodFunction) -> Result<MPoly> {
    if t.graph.n() == 0 {
        return Ok(MPoly::one());
    }
    let aut = count_automorphisms_fixing(&t.graph, &t.tuple_set())?;
    let var = MVar::new(&t.graph, cfg)?;
    Ok(MPoly::var(var).scale(&(q(1) / q(aut as i64))))
}

fn class_measure(g: &Graph, cfg: &GoodFunction) -> Result<MPoly> {
    if g.n() == 0 {
        return Ok(MPoly::one());
    }
    Ok(MPoly::var(MVar::new(g, cfg)?))
}

/// The amalgamation identity of a diagram:
/// `m(B) * m(C) = m(A) * sum_i m(D_i) / |Aut(D_i / B ∪ C)|`,
/// with the sum over all eventual closures and the empty class read as 1.
pub fn derive_amalgam_equation(
    diag: &AmalgamDiagram,
    cfg: &GoodFunction,
) -> Result<MeasureEquation> {
    let amb = diag.ambient();
    let side_b = amb.induced(diag.part_b())?;
    let side_c = amb.induced(diag.part_c())?;
    let side_a = amb.induced(diag.part_a())?;
    let lhs = class_measure(&side_b, cfg)?.mul(&class_measure(&side_c, cfg)?);

    let mut sum = MPoly::zero();
    let base = amb.vertex_set();
    for cl in eventual_closures(diag, cfg)? {
        let aut = count_automorphisms_fixing(&cl.extension, &base)?;
        let term = class_measure(&cl.extension, cfg)?.scale(&(q(1) / q(aut as i64)));
        sum = sum.add(&term);
    }
    let rhs = class_measure(&side_a, cfg)?.mul(&sum);
    Ok(MeasureEquation {
        lhs,
        rhs,
        label: String::new(),
        provenance: format!(
            "amalgam of {} and {} over {}",
            describe(&side_b),
            describe(&side_c),
            describe(&side_a)
        ),
    })
}

fn describe(g: &Graph) -> String {
    format!("{}v/{}e", g.n(), g.edge_count())
}

/// The identity of the two-component amalgam (two copies of edge-plus-vertex
/// over two isolated vertices): `m(P2 ⊔ pt) * m(2 pt) = m(edge ⊔ pt)^2`
/// before normalization, derived from its closure list (which is a single
/// improper closure).
pub fn derive_two_links_equation(cfg: &GoodFunction) -> Result<MeasureEquation> {
    let diag = standard::two_links_over_two_vertices(cfg)?;
    let mut eq = derive_amalgam_equation(&diag, cfg)?;
    eq.label = "two-links".into();
    Ok(eq)
}

/// Derives the triangle identity for three pairwise 2-types over the empty
/// set: glue the three typed pairs on a triple `(x1, x2, x3)`, enumerate all
/// predimension-preserving extensions of the glued base (keeping each pair
/// closure and each singleton closure d-closed), and equate the resulting
/// type sum with the product of the pair measures over the singleton
/// measures (denominators cleared).
pub fn derive_triangle_equation(
    p12: &TypedGraph,
    p23: &TypedGraph,
    p13: &TypedGraph,
    cfg: &GoodFunction,
) -> Result<MeasureEquation> {
    for (name, t) in [("p12", p12), ("p23", p23), ("p13", p13)] {
        if t.tuple.len() != 2 {
            return Err(Error::InvalidTypedGraph(format!(
                "{name} must distinguish exactly two vertices"
            )));
        }
        if t.tuple[0] == t.tuple[1] {
            return Err(Error::PairsNotIndependent(format!(
                "{name} repeats a distinguished vertex"
            )));
        }
        // Independence of the pair: the dimension of the pair must be the
        // sum of the singleton dimensions.
        let du = dimension(&vset([t.tuple[0].as_str()]), &t.graph, cfg)?;
        let dv = dimension(&vset([t.tuple[1].as_str()]), &t.graph, cfg)?;
        let dpair = dimension(&t.tuple_set(), &t.graph, cfg)?;
        if dpair != du + dv {
            return Err(Error::PairsNotIndependent(format!(
                "{name}: pair dimension differs from the sum of its singleton dimensions"
            )));
        }
    }

    // Glue the three pairs on x1, x2, x3, freshening the interior vertices.
    let corners = ["x1", "x2", "x3"];
    let assignments: [(&TypedGraph, usize, usize, &str); 3] = [
        (p12, 0, 1, "u12_"),
        (p23, 1, 2, "u23_"),
        (p13, 0, 2, "u13_"),
    ];
    let mut glued: Option<Graph> = None;
    let mut pair_parts: Vec<VertexSet> = Vec::new();
    for (t, i, j, prefix) in assignments {
        let mut rename: BTreeMap<String, String> = BTreeMap::new();
        rename.insert(t.tuple[0].clone(), corners[i].to_string());
        rename.insert(t.tuple[1].clone(), corners[j].to_string());
        let mut k = 0usize;
        for l in t.graph.labels() {
            if !rename.contains_key(l) {
                k += 1;
                rename.insert(l.clone(), format!("{prefix}{k}"));
            }
        }
        let part = t.graph.relabel(&rename)?;
        pair_parts.push(part.vertex_set());
        glued = Some(match glued {
            None => part,
            Some(g) => Graph::union_by_labels(&g, &part)?,
        });
    }
    let base = glued.expect("three parts glued");

    let mut constraints = pair_parts;
    for c in corners {
        constraints.push(vset([c]));
    }
    let extensions = enumerate_zero_extensions(&base, &constraints, cfg, 5)?;

    let tuple: Vec<String> = corners.iter().map(|s| s.to_string()).collect();
    let mut lhs = MPoly::zero();
    for ext in &extensions {
        let typed = TypedGraph::new(ext.extension.clone(), tuple.clone(), cfg)?;
        lhs = lhs.add(&type_measure_expression(&typed, cfg)?);
    }

    // Right-hand side: product of the three pair measures over the three
    // singleton measures; cleared, the singletons multiply the left side.
    let mut rhs = MPoly::one();
    for t in [p12, p23, p13] {
        rhs = rhs.mul(&type_measure_expression(t, cfg)?);
    }
    let mut singleton_product = MPoly::one();
    for (t, idx) in [(p12, 0), (p23, 0), (p13, 1)] {
        // One singleton per corner: x1 from p12, x2 from p23, x3 from p13.
        let v = &t.tuple[idx];
        let cl = closure(&vset([v.as_str()]), &t.graph, cfg)?;
        let single = TypedGraph::new(t.graph.induced(&cl)?, vec![v.clone()], cfg)?;
        singleton_product = singleton_product.mul(&type_measure_expression(&single, cfg)?);
    }
    let lhs = lhs.mul(&singleton_product);

    Ok(MeasureEquation {
        lhs,
        rhs,
        label: "triangle".into(),
        provenance: format!(
            "triangle gluing on (x1, x2, x3); {} admissible extensions",
            extensions.len()
        ),
    })
}

/// The full raw system in elimination order: the six amalgamation identities
/// of the standard diagrams followed by the triangle identity for
/// (far, far, distance-two).
pub fn standard_equation_system(cfg: &GoodFunction) -> Result<Vec<MeasureEquation>> {
    let mut eqs = Vec::new();
    let diagrams: Vec<(&str, AmalgamDiagram)> = vec![
        ("two-edges", standard::two_edges_over_vertex(cfg)?),
        ("vertex-pair", standard::two_vertices_over_empty(cfg)?),
        ("two-paths", standard::two_paths_over_edge(cfg)?),
        ("edge-vertex", standard::edge_and_vertex_over_vertex(cfg)?),
        ("two-links", standard::two_links_over_two_vertices(cfg)?),
        ("two-long-paths", standard::two_long_paths_over_path(cfg)?),
    ];
    for (label, diag) in diagrams {
        let mut eq = derive_amalgam_equation(&diag, cfg)?;
        eq.label = label.to_string();
        eqs.push(eq);
    }
    let far = far_pair_type(cfg)?;
    let near = distance_two_type(cfg)?;
    eqs.push(derive_triangle_equation(&far, &far, &near, cfg)?);
    Ok(eqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::rational::q_ratio;

    fn cfg() -> GoodFunction {
        GoodFunction::standard()
    }

    fn unit() -> MVar {
        MVar::new(&Graph::build(&["v"], &[]), &cfg()).unwrap()
    }

    fn v(g: &Graph) -> MVar {
        MVar::new(g, &cfg()).unwrap()
    }

    fn edge_graph() -> Graph {
        Graph::build(&["a", "b"], &[("a", "b")])
    }

    #[test]
    fn type_measure_examples() {
        // Path with fixed endpoints: one automorphism, plain class variable.
        let t = TypedGraph::new(
            Graph::path(&["v1", "w", "v3"]),
            vec!["v1".into(), "v3".into()],
            &cfg(),
        )
        .unwrap();
        let p = type_measure_expression(&t, &cfg()).unwrap();
        assert_eq!(p, MPoly::var(v(&Graph::path(&["a", "b", "c"]))));

        // Single distinguished vertex: the unit variable; normalized it is 1.
        let one = TypedGraph::new(Graph::build(&["v"], &[]), vec!["v".into()], &cfg()).unwrap();
        let p = type_measure_expression(&one, &cfg()).unwrap();
        assert_eq!(p.substitute(&unit(), &MPoly::one()), MPoly::one());

        // The 5-vertex spider with three fixed tips: still a single
        // automorphism.
        let spider = Graph::build(
            &["v1", "v2", "v3", "u", "w"],
            &[("u", "v2"), ("u", "v3"), ("u", "w"), ("w", "v1")],
        );
        let t = TypedGraph::new(
            spider.clone(),
            vec!["v1".into(), "v2".into(), "v3".into()],
            &cfg(),
        )
        .unwrap();
        let p = type_measure_expression(&t, &cfg()).unwrap();
        assert_eq!(p, MPoly::var(v(&spider)));

        // Tuple whose closure is not everything is rejected.
        assert!(matches!(
            TypedGraph::new(Graph::path(&["a", "b", "c"]), vec!["a".into()], &cfg()),
            Err(Error::InvalidTypedGraph(_))
        ));
    }

    #[test]
    fn amalgam_equation_for_two_edges() {
        let eq =
            derive_amalgam_equation(&standard::two_edges_over_vertex(&cfg()).unwrap(), &cfg())
                .unwrap();
        // m(edge)^2 = m(pt) * m(P2)
        let edge = MPoly::var(v(&edge_graph()));
        let want_lhs = edge.mul(&edge);
        let want_rhs =
            MPoly::var(unit()).mul(&MPoly::var(v(&Graph::path(&["a", "b", "c"]))));
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
        assert!(eq.degree_balanced(&q(2)));
    }

    #[test]
    fn amalgam_equation_for_vertex_pair() {
        let eq =
            derive_amalgam_equation(&standard::two_vertices_over_empty(&cfg()).unwrap(), &cfg())
                .unwrap();
        // m(pt)^2 = m(2pt) + m(P2)
        let want_lhs = MPoly::var(unit()).mul(&MPoly::var(unit()));
        let want_rhs = MPoly::var(v(&Graph::build(&["a", "b"], &[])))
            .add(&MPoly::var(v(&Graph::path(&["a", "b", "c"]))));
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
        assert!(eq.degree_balanced(&q(2)));
    }

    #[test]
    fn amalgam_equation_for_edge_vertex() {
        let eq = derive_amalgam_equation(
            &standard::edge_and_vertex_over_vertex(&cfg()).unwrap(),
            &cfg(),
        )
        .unwrap();
        // m(2pt) * m(edge) = m(pt) * (m(edge ⊔ pt) + m(P3))
        let elle = Graph::build(&["a", "b", "c"], &[("a", "b")]);
        let want_lhs =
            MPoly::var(v(&Graph::build(&["a", "b"], &[]))).mul(&MPoly::var(v(&edge_graph())));
        let want_rhs = MPoly::var(unit()).mul(
            &MPoly::var(v(&elle)).add(&MPoly::var(v(&Graph::path(&["a", "b", "c", "d"])))),
        );
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
        assert!(eq.degree_balanced(&q(2)));
    }

    #[test]
    fn two_links_equation_matches_its_shape() {
        let eq = derive_two_links_equation(&cfg()).unwrap();
        let p2_pt = Graph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        let elle = Graph::build(&["a", "b", "c"], &[("a", "b")]);
        let two = Graph::build(&["a", "b"], &[]);
        let want_lhs = MPoly::var(v(&elle)).mul(&MPoly::var(v(&elle)));
        let want_rhs = MPoly::var(v(&two)).mul(&MPoly::var(v(&p2_pt)));
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
    }

    #[test]
    fn triangle_equation_for_far_far_near() {
        let far = far_pair_type(&cfg()).unwrap();
        let near = distance_two_type(&cfg()).unwrap();
        let eq = derive_triangle_equation(&far, &far, &near, &cfg()).unwrap();
        // (m(P2 ⊔ pt) + m(spider)) * m(pt)^3 = m(2pt)^2 * m(P2)
        let p2_pt = Graph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        let spider = Graph::build(
            &["1", "2", "3", "4", "5"],
            &[("1", "2"), ("3", "2"), ("2", "4"), ("4", "5")],
        );
        let unit_cubed = MPoly::var(unit())
            .mul(&MPoly::var(unit()))
            .mul(&MPoly::var(unit()));
        let want_lhs = MPoly::var(v(&p2_pt))
            .add(&MPoly::var(v(&spider)))
            .mul(&unit_cubed);
        let two = MPoly::var(v(&Graph::build(&["a", "b"], &[])));
        let want_rhs = two
            .mul(&two)
            .mul(&MPoly::var(v(&Graph::path(&["a", "b", "c"]))));
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
        assert!(eq.degree_balanced(&q(2)));
    }

    #[test]
    fn triangle_equation_rejects_dependent_pairs() {
        // A pair at distance one (an edge with both ends distinguished) is
        // not independent: dimension 3 differs from 2 + 2.
        let dependent = TypedGraph::new(edge_graph(), vec!["a".into(), "b".into()], &cfg()).unwrap();
        let far = far_pair_type(&cfg()).unwrap();
        assert!(matches!(
            derive_triangle_equation(&dependent, &far, &far, &cfg()),
            Err(Error::PairsNotIndependent(_))
        ));
        let degenerate = TypedGraph::new(
            Graph::build(&["x"], &[]),
            vec!["x".into(), "x".into()],
            &cfg(),
        );
        // A repeated distinguished vertex is either rejected on construction
        // or on the independence check.
        if let Ok(t) = degenerate {
            assert!(derive_triangle_equation(&t, &far, &far, &cfg()).is_err());
        }
    }

    #[test]
    fn triangle_equation_for_three_near_types_is_the_hexagon_sum() {
        // Gluing three distance-two types produces a 6-cycle base; it has no
        // admissible extensions, so the sum is the single 6-cycle type.
        let near = distance_two_type(&cfg()).unwrap();
        let eq = derive_triangle_equation(&near, &near, &near, &cfg()).unwrap();
        let c6 = Graph::cycle(&["1", "2", "3", "4", "5", "6"]);
        let unit_cubed = MPoly::var(unit())
            .mul(&MPoly::var(unit()))
            .mul(&MPoly::var(unit()));
        let want_lhs = MPoly::var(v(&c6)).mul(&unit_cubed);
        let p2 = MPoly::var(v(&Graph::path(&["a", "b", "c"])));
        let want_rhs = p2.mul(&p2).mul(&p2);
        assert_eq!(eq.lhs, want_lhs);
        assert_eq!(eq.rhs, want_rhs);
    }

    #[test]
    fn relabeling_inputs_leaves_equations_unchanged() {
        let diag = standard::edge_and_vertex_over_vertex(&cfg()).unwrap();
        let eq1 = derive_amalgam_equation(&diag, &cfg()).unwrap();
        // Same diagram with all fresh labels.
        let relabeled = AmalgamDiagram::new(
            Graph::build(&["q", "r", "s"], &[("q", "r")]),
            vset(["q"]),
            vset(["q", "s"]),
            vset(["q", "r"]),
            &cfg(),
        )
        .unwrap();
        let eq2 = derive_amalgam_equation(&relabeled, &cfg()).unwrap();
        assert_eq!(eq1.lhs, eq2.lhs);
        assert_eq!(eq1.rhs, eq2.rhs);
    }

    #[test]
    fn aut_weights_show_up_in_closures() {
        // Sanity check on the reciprocal automorphism weight: a typed graph
        // with a symmetric pendant pair admits two automorphisms.
        let star = Graph::build(&["c", "l1", "l2"], &[("c", "l1"), ("c", "l2")]);
        let t = TypedGraph::new(star.clone(), vec!["c".into()], &cfg());
        // The closure of the center is itself, not the whole star, so the
        // typed graph is invalid; go through the raw helper instead.
        assert!(t.is_err());
        let aut = count_automorphisms_fixing(&star, &vset(["c"])).unwrap();
        assert_eq!(aut, 2);
        let _ = q_ratio(1, 2);
    }
}
