//! Serialization of crystals, walls and energy tables: DOT for graph
//! rendering, JSON for machine consumption, CSV for flat tables.

use crate::cartan;
use crate::energy::EnergyTable;
use crate::graph::Crystal;
use crate::path::{Path, PathModel};
use crate::wall::{Wall, WallModel};
use serde_json::{json, Value};

fn weight_json(w: &crate::weight::Weight) -> Value {
    json!({ "lambda": w.lambda, "delta": w.delta })
}

/// DOT digraph with one edge color per arrow color.
pub fn crystal_dot(b: &Crystal, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{name}\" {{\n"));
    out.push_str("  rankdir=TB;\n  node [shape=box, fontsize=10];\n");
    for x in 0..b.len() as u32 {
        out.push_str(&format!(
            "  n{x} [label=\"{}\\n{}\"];\n",
            b.label(x),
            b.wt(x)
        ));
    }
    for (i, from, to) in b.arrows() {
        out.push_str(&format!(
            "  n{from} -> n{to} [color={}, label=\"{i}\"];\n",
            cartan::color_name(i)
        ));
    }
    out.push_str("}\n");
    out
}

/// JSON document: elements with ids, weights and labels, plus colored arrows.
pub fn crystal_json(b: &Crystal) -> Value {
    let elements: Vec<Value> = (0..b.len() as u32)
        .map(|x| {
            json!({
                "id": x,
                "weight": weight_json(b.wt(x)),
                "label": b.label(x),
            })
        })
        .collect();
    let arrows: Vec<Value> = b
        .arrows()
        .into_iter()
        .map(|(i, from, to)| json!({ "color": i, "from": from, "to": to }))
        .collect();
    json!({ "type": b.ty.name(), "elements": elements, "arrows": arrows })
}

/// JSON document for one wall: the head columns with their class labels
/// (under the isomorphism onto the perfect crystal) and z-powers.
pub fn wall_json(wm: &WallModel, w: &Wall, model: &str) -> Value {
    let columns: Vec<Value> = w
        .head()
        .iter()
        .enumerate()
        .map(|(r, &(c, u))| {
            json!({
                "r": r,
                "class_label": wm.cm.b.label(wm.cm.psi[c as usize]),
                "shift": u,
            })
        })
        .collect();
    json!({
        "lambda": format!("L{}", wm.node),
        "columns": columns,
        "model": model,
        "weight": weight_json(&wm.weight(w)),
    })
}

/// JSON document for one path, tagged with the same schema as walls.
pub fn path_json(pm: &PathModel, p: &Path) -> Value {
    let columns: Vec<Value> = p
        .head()
        .iter()
        .enumerate()
        .map(|(r, &x)| {
            json!({
                "r": r,
                "class_label": pm.b.label(x),
                "shift": Value::Null,
            })
        })
        .collect();
    json!({
        "lambda": format!("L{}", pm.node),
        "columns": columns,
        "model": "path",
        "weight": weight_json(&pm.weight(p)),
    })
}

/// CSV rows (left label, right label, H) covering the full tensor square.
pub fn energy_csv(b: &Crystal, et: &EnergyTable) -> String {
    let mut out = String::from("left,right,h\n");
    for x in 0..b.len() as u32 {
        for y in 0..b.len() as u32 {
            out.push_str(&format!("{},{},{}\n", b.label(x), b.label(y), et.h(x, y)));
        }
    }
    out
}

/// The same energy table as JSON rows.
pub fn energy_json(b: &Crystal, et: &EnergyTable) -> Value {
    let rows: Vec<Value> = (0..b.len() as u32)
        .flat_map(|x| {
            (0..b.len() as u32).map(move |y| (x, y))
        })
        .map(|(x, y)| json!({ "left": b.label(x), "right": b.label(y), "h": et.h(x, y) }))
        .collect();
    json!({ "type": b.ty.name(), "rows": rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect;

    #[test]
    fn dot_and_json_cover_all_elements_and_arrows() {
        let b = perfect::level_one_crystal(crate::AffineType::E6);
        let dot = crystal_dot(&b, "B6");
        assert_eq!(dot.matches("\\n").count(), 27);
        let doc = crystal_json(&b);
        assert_eq!(doc["elements"].as_array().unwrap().len(), 27);
        assert_eq!(doc["arrows"].as_array().unwrap().len(), b.arrows().len());
        let first = &doc["elements"][0];
        assert!(first["weight"]["lambda"].is_array());
    }
}
