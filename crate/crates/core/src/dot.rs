//! Graphviz output for reduction artifacts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::VertexId;
use crate::reduction::{EdgeRole, ReductionArtifact};

fn color(role: EdgeRole) -> &'static str {
    match role {
        EdgeRole::VertexGadget => "red",
        EdgeRole::EdgeGadget => "blue",
        EdgeRole::Linking => "green",
        EdgeRole::Pendant => "gray",
    }
}

fn labels(art: &ReductionArtifact) -> BTreeMap<VertexId, String> {
    let mut out = BTreeMap::from([(art.hub(), "a".to_string()), (art.sink(), "b".to_string())]);
    for g in art.vertex_gadgets() {
        for i in 0..3 {
            out.insert(g.p[i], format!("p{i}_{}", g.vertex));
            out.insert(g.q[i], format!("q{i}_{}", g.vertex));
        }
    }
    for g in art.edge_gadgets() {
        out.insert(g.x, format!("x_{}", g.edge));
        out.insert(g.y, format!("y_{}", g.edge));
        for (i, &z) in g.z.iter().enumerate() {
            out.insert(z, format!("z{}_{}", i + 1, g.edge));
        }
    }
    for &w in art.pendants() {
        out.insert(w, format!("w_{}", w.0));
    }
    out
}

/// Undirected DOT graph with one node per vertex and one edge per edge of
/// the artifact, colored by role.
pub fn to_dot(art: &ReductionArtifact) -> String {
    let labels = labels(art);
    let mut out = String::from("graph reduction {\n");
    for v in art.graph().vertices() {
        writeln!(out, "  {} [label=\"{}\"];", v.0, labels[&v]).expect("string write");
    }
    for (e, u, v) in art.graph().edges() {
        let role = art.role(e).expect("every edge has a role");
        writeln!(out, "  {} -- {} [color={}];", u.0, v.0, color(role)).expect("string write");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::generate::theta;
    use crate::reduction::{build_ubbbo, CvcInstance};

    #[test]
    fn theta_counts() {
        let art = crate::reduction::build_ubwbo(&CvcInstance::new(theta(), 1).unwrap()).unwrap();
        let dot = to_dot(&art);
        assert_eq!(dot.matches("[label=").count(), 32);
        assert_eq!(dot.matches(" -- ").count(), 65);
        assert_eq!(dot.matches("color=red").count(), 10);
        assert_eq!(dot.matches("color=blue").count(), 15);
        assert!(dot.contains("0 [label=\"a\"]"));
    }

    #[test]
    fn pendants_are_gray() {
        let art = build_ubbbo(&CvcInstance::new(theta(), 2).unwrap()).unwrap();
        assert_eq!(to_dot(&art).matches("color=gray").count(), 4);
    }
}
