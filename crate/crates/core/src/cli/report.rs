//! Rendering verdicts and nerves for people and for goldens.

use std::fmt::Write;

use serde::Serialize;

use crate::complex::LabelledNerve;
use crate::decider::{Diagnostics, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Json,
}

/// Pretty JSON, keys in declaration order, with a trailing newline.
pub fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("reports serialize");
    s.push('\n');
    s
}

pub fn parse_report(json: &str) -> Result<Verdict, serde_json::Error> {
    serde_json::from_str(json)
}

fn set(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

fn sets(v: &[Vec<String>]) -> String {
    v.iter().map(|c| set(c)).collect::<Vec<_>>().join(" ")
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::NerveIsSimplex { vertices } => format!("nerve is the simplex {}", set(vertices)),
        Witness::Nonplanar { reason } => reason.clone(),
        Witness::SphereTriangulation { vertices, triangles } => {
            format!("nerve triangulates the 2-sphere ({vertices} vertices, {triangles} triangles)")
        }
        Witness::AffineSubset { generators } => format!("affine special subgroup on {}", set(generators)),
        Witness::ProductOfInfinites { left, right } => {
            format!("commuting infinite special subgroups on {} and {}", set(left), set(right))
        }
        Witness::EmptySquare { vertices } => format!("empty square {}", vertices.join(" - ")),
        Witness::CircleTriangulation { cycle } => format!("nerve is the circle {}", cycle.join(" - ")),
        Witness::LabelledWheel { apex, rim } => format!("labelled wheel with apex {apex} over {}", rim.join(" - ")),
        Witness::Disconnected { components } => format!("nerve is disconnected: {}", sets(components)),
        Witness::Simplex { removed, components } => {
            format!("separating simplex {} leaves {}", set(removed), sets(components))
        }
        Witness::NonadjacentPair { removed, components } => {
            format!("separating nonadjacent pair {} leaves {}", set(removed), sets(components))
        }
        Witness::LabelledSuspension { poles, base, removed, components } => format!(
            "separating labelled suspension with poles {} over {}: removing {} leaves {}",
            set(poles),
            set(base),
            set(removed),
            sets(components)
        ),
    }
}

fn diagnostic_rows(d: &Diagnostics) -> Vec<(&'static str, Option<String>, &'static str)> {
    let b = |x: Option<bool>| x.map(|x| if x { "yes" } else { "no" }.to_owned());
    vec![
        ("simplex", b(d.simplex), "nerve is a simplex, so W is finite"),
        ("nerve_planar", b(d.nerve_planar), "nerve embeds in the 2-sphere"),
        ("boundary_planar", b(d.boundary_planar), "planar nerve, so the boundary embeds in the 2-sphere"),
        ("sphere_tri", b(d.sphere_tri), "nerve triangulates the 2-sphere"),
        ("hyperbolic", b(d.hyperbolic), "no affine subset and no commuting infinite pair"),
        ("circle_tri", b(d.circle_tri), "nerve triangulates the circle"),
        ("wheel", b(d.wheel), "nerve is a labelled wheel"),
        ("connected_1ended", b(d.connected_1ended), "connected without separating simplex, so W is one-ended"),
        ("unseparable", b(d.unseparable), "no separating simplex, pair or labelled suspension"),
        ("vcd", d.vcd.map(|v| v.to_string()), "virtual cohomological dimension"),
        ("dim_one", b(d.dim_one), "vcd is 2, so the boundary is 1-dimensional"),
        ("torsion_flag", b(d.torsion_flag), "2-torsion in some deletion; rational vcd may be low"),
    ]
}

pub fn emit_report(v: &Verdict, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => to_json(v),
        ReportFormat::Human => {
            let mut s = String::new();
            let boundary = serde_json::to_value(v.boundary).expect("serializes");
            let mode = serde_json::to_value(v.mode).expect("serializes");
            let _ = writeln!(s, "boundary: {}", boundary.as_str().unwrap_or_default());
            let _ = writeln!(s, "mode: {}{}", mode.as_str().unwrap_or_default(), if v.conjectural { " (conjectural)" } else { "" });
            if !v.witnesses.is_empty() {
                let _ = writeln!(s, "witnesses:");
                for w in &v.witnesses {
                    let kind = serde_json::to_value(w).expect("serializes");
                    let kind = kind["kind"].as_str().unwrap_or_default().to_owned();
                    let _ = writeln!(s, "  {kind}: {}", describe(w));
                }
            }
            let _ = writeln!(s, "diagnostics:");
            for (name, value, meaning) in diagnostic_rows(&v.diagnostics) {
                let value = value.unwrap_or_else(|| "-".into());
                let _ = writeln!(s, "  {name:<17} {value:<4} {meaning}");
            }
            for n in &v.notes {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
    }
}

#[derive(Serialize)]
struct NerveDocument<'a> {
    vertices: &'a [String],
    faces: Vec<Vec<&'a str>>,
    labels: Vec<(&'a str, &'a str, u32)>,
}

/// Maximal faces and edge labels of a nerve.
pub fn emit_nerve(l: &LabelledNerve, format: ReportFormat) -> String {
    let k = l.complex();
    let doc = NerveDocument {
        vertices: k.names(),
        faces: k.maximal_faces().iter().map(|f| f.iter().map(|&v| k.name(v)).collect()).collect(),
        labels: l.labels().iter().map(|(&(u, v), &m)| (k.name(u), k.name(v), m)).collect(),
    };
    match format {
        ReportFormat::Json => to_json(&doc),
        ReportFormat::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices: {}", doc.vertices.join(" "));
            let _ = writeln!(s, "dimension: {}", k.dimension());
            let _ = writeln!(s, "maximal faces:");
            for f in &doc.faces {
                let _ = writeln!(s, "  {}", f.join(" "));
            }
            let _ = writeln!(s, "labels:");
            for (a, b, m) in &doc.labels {
                let _ = writeln!(s, "  {a} {b} {m}");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::family::make_family;
    use crate::decider::{classify_boundary, Mode};
    use crate::nerve::nerve;

    #[test]
    fn pentagon_json() {
        let v = classify_boundary(&make_family("cycle", Some(5)).unwrap(), Mode::Theorem2);
        let j: serde_json::Value = serde_json::from_str(&emit_report(&v, ReportFormat::Json)).unwrap();
        assert_eq!(j["boundary"], "CIRCLE");
        assert_eq!(j["witnesses"][0]["kind"], "CIRCLE_TRIANGULATION");
    }

    #[test]
    fn antiprism_has_no_witnesses() {
        let v = classify_boundary(&make_family("antiprism", Some(5)).unwrap(), Mode::Theorem2);
        let json = emit_report(&v, ReportFormat::Json);
        let j: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(j["boundary"], "SIERPINSKI_CARPET");
        assert_eq!(j["witnesses"], serde_json::json!([]));
        let at: Vec<usize> = ["boundary", "mode", "conjectural", "witnesses", "diagnostics", "notes"]
            .iter()
            .map(|k| json.find(&format!("\n  \"{k}\"")).unwrap())
            .collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(emit_report(&parse_report(&json).unwrap(), ReportFormat::Json), json);
    }

    #[test]
    fn square_witness() {
        let v = classify_boundary(&make_family("cycle", Some(4)).unwrap(), Mode::Theorem2);
        let j: serde_json::Value = serde_json::from_str(&emit_report(&v, ReportFormat::Json)).unwrap();
        assert_eq!(j["boundary"], "OUT_OF_SCOPE");
        assert_eq!(j["witnesses"][0]["kind"], "EMPTY_SQUARE");
        assert_eq!(j["witnesses"][0]["vertices"].as_array().unwrap().len(), 4);
        let h = emit_report(&v, ReportFormat::Human);
        assert!(h.starts_with("boundary: OUT_OF_SCOPE\nmode: THEOREM2\nwitnesses:\n  EMPTY_SQUARE: empty square v1 - v2 - v3 - v4\n"), "{h}");
    }

    #[test]
    fn nerve_dump() {
        let l = nerve(&make_family("wheel", Some(4)).unwrap());
        let h = emit_nerve(&l, ReportFormat::Human);
        assert!(h.contains("dimension: 2\n"));
        assert!(h.contains("  v1 v2 c\n"), "{h}");
        let j: serde_json::Value = serde_json::from_str(&emit_nerve(&l, ReportFormat::Json)).unwrap();
        assert_eq!(j["labels"].as_array().unwrap().len(), 8);
    }
}
