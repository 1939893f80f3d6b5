//! Deterministic DOT and JSON emitters. All output is byte-stable for a
//! fixed input: vertices and edges are emitted in sorted order and JSON maps
//! are plain structs.

use serde::{Deserialize, Serialize};

use crate::coxeter::{DiagramAutomorphism, Elt, SimpleSubset, WeylGroup};
use crate::decomposition::{CycCertificate, InductionDatum, PartialDecomposition};
use crate::pieces::{Piece, ShiftStep};
use crate::shift_graph::ShiftGraph;
use crate::Result;

/// Figure-style label: `1` for the identity, otherwise `s_{123}` built from
/// the ShortLex reduced word (single-digit labels require rank ≤ 9).
pub fn element_label(g: &WeylGroup, w: Elt) -> String {
    if w == g.identity() {
        return "1".to_string();
    }
    let word = g.word(w);
    if g.rank() <= 9 {
        let digits: String = word.letters().iter().map(|s| s.label().to_string()).collect();
        format!("s_{{{digits}}}")
    } else {
        format!("s_{{{word}}}")
    }
}

/// Machine form of an element: its ShortLex reduced word as comma-separated
/// labels; the identity is the empty string.
pub fn word_string(g: &WeylGroup, w: Elt) -> String {
    g.word(w).to_string()
}

fn subset_labels(set: SimpleSubset) -> Vec<usize> {
    set.labels()
}

/// DOT rendering of the conjugacy graph restricted to `vertices`.
/// Length-equal mutual edges appear as two separate arcs.
pub fn graph_dot(g: &WeylGroup, graph: &ShiftGraph, vertices: &[Elt]) -> String {
    let mut vertices: Vec<Elt> = vertices.to_vec();
    vertices.sort();
    vertices.dedup();
    let inside = |w: Elt| vertices.binary_search(&w).is_ok();
    let mut out = String::from("digraph shift {\n  rankdir=BT;\n");
    for &w in &vertices {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\"];\n",
            word_string(g, w),
            element_label(g, w)
        ));
    }
    for &w in &vertices {
        for &(s, next) in graph.edges(w) {
            if inside(next) {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"s{}\"];\n",
                    word_string(g, w),
                    word_string(g, next),
                    s.label()
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the `(ʲW, ≤_{J,δ})` Hasse diagram: covers that already
/// hold in Bruhat order are solid, the extra ones dashed.
pub fn hasse_dot(g: &WeylGroup, reps: &[Elt], covers: &[(Elt, Elt)]) -> String {
    let mut out = String::from("graph hasse {\n  rankdir=BT;\n");
    for &w in reps {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\"];\n",
            word_string(g, w),
            element_label(g, w)
        ));
    }
    for &(lo, hi) in covers {
        let style = if g.bruhat_leq(lo, hi) { "solid" } else { "dashed" };
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [style={style}];\n",
            word_string(g, lo),
            word_string(g, hi)
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PieceJson {
    pub w: String,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
}

impl PieceJson {
    pub fn new(g: &WeylGroup, piece: Piece) -> PieceJson {
        PieceJson {
            w: word_string(g, piece.w),
            k: subset_labels(piece.k),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphEdgeJson {
    pub from: String,
    pub label: usize,
    pub to: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdgeJson>,
}

impl GraphJson {
    pub fn new(g: &WeylGroup, graph: &ShiftGraph, vertices: &[Elt]) -> GraphJson {
        let mut vertices: Vec<Elt> = vertices.to_vec();
        vertices.sort();
        vertices.dedup();
        let inside = |w: Elt| vertices.binary_search(&w).is_ok();
        let mut edges = Vec::new();
        for &w in &vertices {
            for &(s, next) in graph.edges(w) {
                if inside(next) {
                    edges.push(GraphEdgeJson {
                        from: word_string(g, w),
                        label: s.label(),
                        to: word_string(g, next),
                    });
                }
            }
        }
        GraphJson {
            cartan_type: g.cartan_type().to_string(),
            delta: graph.delta().to_string(),
            j: subset_labels(graph.label_set()),
            vertices: vertices.iter().map(|&w| word_string(g, w)).collect(),
            edges,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BlockJson {
    pub w_prime: String,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub orbit: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub blocks: Vec<BlockJson>,
}

impl DecompositionJson {
    pub fn new(
        g: &WeylGroup,
        delta: &DiagramAutomorphism,
        dec: &PartialDecomposition,
    ) -> DecompositionJson {
        DecompositionJson {
            cartan_type: g.cartan_type().to_string(),
            delta: delta.to_string(),
            j: subset_labels(dec.j),
            blocks: dec
                .blocks
                .iter()
                .map(|b| BlockJson {
                    w_prime: word_string(g, b.w_prime),
                    i: subset_labels(b.i),
                    orbit: b.orbit.iter().map(|&w| word_string(g, w)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoverJson {
    pub lower: String,
    pub upper: String,
    pub bruhat: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HasseJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub vertices: Vec<String>,
    pub covers: Vec<CoverJson>,
}

impl HasseJson {
    pub fn new(
        g: &WeylGroup,
        delta: &DiagramAutomorphism,
        j: SimpleSubset,
        reps: &[Elt],
        covers: &[(Elt, Elt)],
    ) -> HasseJson {
        HasseJson {
            cartan_type: g.cartan_type().to_string(),
            delta: delta.to_string(),
            j: subset_labels(j),
            vertices: reps.iter().map(|&w| word_string(g, w)).collect(),
            covers: covers
                .iter()
                .map(|&(lo, hi)| CoverJson {
                    lower: word_string(g, lo),
                    upper: word_string(g, hi),
                    bruhat: g.bruhat_leq(lo, hi),
                })
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepJson {
    pub x: String,
    pub from: PieceJson,
    pub to: PieceJson,
}

impl StepJson {
    pub fn new(g: &WeylGroup, step: &ShiftStep) -> StepJson {
        StepJson {
            x: word_string(g, step.x),
            from: PieceJson::new(g, step.from),
            to: PieceJson::new(g, step.to),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuadrupleJson {
    #[serde(rename = "J_n")]
    pub j_n: Vec<usize>,
    pub w_n: String,
    pub x_n: String,
    pub y_n: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub piece: PieceJson,
    pub w_prime: String,
    pub x: String,
    pub u: String,
    #[serde(rename = "K_prime")]
    pub k_prime: Vec<usize>,
    pub chain: Vec<StepJson>,
    pub trace: Vec<QuadrupleJson>,
}

impl CertificateJson {
    pub fn new(
        g: &WeylGroup,
        delta: &DiagramAutomorphism,
        cert: &CycCertificate,
    ) -> CertificateJson {
        CertificateJson {
            cartan_type: g.cartan_type().to_string(),
            delta: delta.to_string(),
            j: subset_labels(cert.j),
            piece: PieceJson::new(g, cert.piece),
            w_prime: word_string(g, cert.w_prime),
            x: word_string(g, cert.x),
            u: word_string(g, cert.u),
            k_prime: subset_labels(cert.k_prime),
            chain: cert.chain.iter().map(|s| StepJson::new(g, s)).collect(),
            trace: cert
                .trace
                .iter()
                .map(|q| QuadrupleJson {
                    j_n: subset_labels(q.j_n),
                    w_n: word_string(g, q.w_n),
                    x_n: word_string(g, q.x_n),
                    y_n: word_string(g, q.y_n),
                })
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "J_prime")]
    pub j_prime: Vec<usize>,
    pub w: String,
    pub w_prime: String,
    pub x: String,
    pub u: String,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    #[serde(rename = "K_1")]
    pub k1: Vec<usize>,
    #[serde(rename = "K_prime")]
    pub k_prime: Vec<usize>,
}

impl DatumJson {
    pub fn new(g: &WeylGroup, delta: &DiagramAutomorphism, d: &InductionDatum) -> DatumJson {
        DatumJson {
            cartan_type: g.cartan_type().to_string(),
            delta: delta.to_string(),
            j: subset_labels(d.j),
            j_prime: subset_labels(d.j_prime),
            w: word_string(g, d.w),
            w_prime: word_string(g, d.w_prime),
            x: word_string(g, d.x),
            u: word_string(g, d.u),
            k: subset_labels(d.k),
            k1: subset_labels(d.k1),
            k_prime: subset_labels(d.k_prime),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IotaPairJson {
    pub w: String,
    pub image: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IotaJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub delta: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub pairs: Vec<IotaPairJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

/// Serializes any of the JSON payloads with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| crate::Error::Internal(
        format!("serialization failed: {e}"),
    ))?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterDatum;
    use crate::shift_graph::build_graph;

    fn group(ty: &str) -> WeylGroup {
        WeylGroup::build(CoxeterDatum::new(ty.parse().unwrap())).unwrap()
    }

    fn id(g: &WeylGroup) -> DiagramAutomorphism {
        DiagramAutomorphism::identity(g.rank())
    }

    #[test]
    fn labels() {
        let g = group("A3");
        assert_eq!(element_label(&g, g.identity()), "1");
        assert_eq!(element_label(&g, g.elt(&[1, 2, 3])), "s_{123}");
        assert_eq!(word_string(&g, g.elt(&[1, 2, 3])), "1,2,3");
        assert_eq!(word_string(&g, g.identity()), "");
    }

    #[test]
    fn dot_is_deterministic() {
        let g = group("A3");
        let d = id(&g);
        let graph = build_graph(&g, &d, g.full_set());
        let comp = graph.weak_component_of(g.elt(&[1, 2, 3]));
        let a = graph_dot(&g, &graph, &comp);
        let b = graph_dot(&g, &graph, &comp);
        assert_eq!(a, b);
        assert!(a.starts_with("digraph shift {"));
        assert!(a.contains("\"1,2,3\" -> \"2,1,3\" [label=\"s1\"];"));
    }

    #[test]
    fn json_round_trips() {
        let g = group("A3");
        let d = id(&g);
        let dec = crate::decomposition::decompose(&g, SimpleSubset::parse("1", 3).unwrap(), &d)
            .unwrap();
        let json = DecompositionJson::new(&g, &d, &dec);
        let text = to_json(&json).unwrap();
        let back: DecompositionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, back);

        let j = SimpleSubset::parse("1,3", 3).unwrap();
        let cert = crate::decomposition::theorem_cyc(
            &g,
            j,
            &d,
            crate::pieces::Piece { w: g.elt(&[2, 1, 3, 2]), k: j },
        )
        .unwrap();
        let json = CertificateJson::new(&g, &d, &cert);
        let text = to_json(&json).unwrap();
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, back);
    }

    #[test]
    fn hasse_dot_styles() {
        let g = group("A3");
        let d = id(&g);
        let j = SimpleSubset::parse("3", 3).unwrap();
        let reps = crate::parabolic::j_w(&g, j);
        let covers = crate::decomposition::hasse(&g, j, &d).unwrap();
        let dot = hasse_dot(&g, &reps, &covers);
        assert_eq!(dot.matches("style=dashed").count(), 1);
        assert!(dot.contains("\"1,2,3\" -- \"2,1,3,2\" [style=dashed];"));
    }
}
