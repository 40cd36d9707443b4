//! Static drawings of circularly ordered graphs: vertices on the unit
//! circle in clockwise order, edges as straight chords.

use circord::circular_order::CircOrderedGraph;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 160.0;
const LABEL_RADIUS: f64 = 184.0;

/// Fixed three-decimal formatting with negative zero folded into zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Screen coordinates of every vertex. The embedding's `y` axis points up;
/// SVG's points down, hence the sign flip.
fn layout(cog: &CircOrderedGraph, r: f64) -> Vec<(f64, f64)> {
    let mut at = vec![(0.0, 0.0); cog.n()];
    for (v, x, y) in cog.unit_circle_embedding() {
        at[v] = (SIZE / 2.0 + r * x, SIZE / 2.0 - r * y);
    }
    at
}

pub fn svg(cog: &CircOrderedGraph) -> String {
    let at = layout(cog, RADIUS);
    let labels = layout(cog, LABEL_RADIUS);
    let mut out = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n\
         <circle cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"#bbbbbb\"/>\n",
        s = SIZE,
        c = num(SIZE / 2.0),
        r = num(RADIUS),
    );
    for (u, v) in cog.graph().edges() {
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
            num(at[u].0),
            num(at[u].1),
            num(at[v].0),
            num(at[v].1)
        ));
    }
    for v in 0..cog.n() {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>\n",
            num(at[v].0),
            num(at[v].1)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"14\">{v}</text>\n",
            num(labels[v].0),
            num(labels[v].1)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// DOT with pinned positions (in points), for `neato -n`.
pub fn dot(cog: &CircOrderedGraph) -> String {
    let at = layout(cog, RADIUS);
    let mut out = String::from("graph G {\n  layout=neato;\n  node [shape=circle];\n");
    for (v, &(x, y)) in at.iter().enumerate() {
        // DOT's y axis points up.
        out.push_str(&format!("  {v} [pos=\"{},{}!\"];\n", num(x), num(SIZE - y)));
    }
    for (u, v) in cog.graph().edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
