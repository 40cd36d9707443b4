//! Instance files and the role-map sidecar.
//!
//! ```text
//! # comment
//! elements a b c d
//! triple a b c
//! triple b d c
//! ```

use std::collections::HashMap;

use super::{CyclicOrderingInstance, ReductionOutput};
use crate::error::{parse_err, Result};

pub fn parse_instance(text: &str) -> Result<CyclicOrderingInstance> {
    let mut elements: Option<Vec<String>> = None;
    let mut index = HashMap::new();
    let mut triples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut words = line.split_whitespace();
        match words.next() {
            None => continue,
            Some("elements") => {
                if elements.is_some() {
                    return Err(parse_err(ln, "second elements line"));
                }
                let names: Vec<String> = words.map(str::to_string).collect();
                for (k, name) in names.iter().enumerate() {
                    index.insert(name.clone(), k);
                }
                elements = Some(names);
            }
            Some("triple") => {
                if elements.is_none() {
                    return Err(parse_err(ln, "triple before the elements line"));
                }
                let ids = words
                    .map(|w| {
                        index
                            .get(w)
                            .copied()
                            .ok_or_else(|| parse_err(ln, format!("unknown element {w}")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                let t: [usize; 3] = ids
                    .try_into()
                    .map_err(|_| parse_err(ln, "a triple needs three elements"))?;
                triples.push(t);
            }
            Some(other) => return Err(parse_err(ln, format!("unexpected keyword {other}"))),
        }
    }
    let elements = elements.ok_or_else(|| parse_err(0, "missing elements line"))?;
    CyclicOrderingInstance::new(elements, triples)
}

pub fn write_instance(inst: &CyclicOrderingInstance) -> String {
    let mut out = format!("elements {}\n", inst.elements().join(" "));
    for t in inst.triples() {
        let names: Vec<&str> = t.iter().map(|&i| inst.elements()[i].as_str()).collect();
        out.push_str(&format!("triple {}\n", names.join(" ")));
    }
    out
}

/// One line per element (`element <name> <vertex>`) and per triple
/// (`gadget <index> <v1> ... <v6>` in gadget role order).
pub fn write_role_map(inst: &CyclicOrderingInstance, red: &ReductionOutput) -> String {
    let mut out = String::new();
    for (name, id) in inst.elements().iter().zip(&red.a_ids) {
        out.push_str(&format!("element {name} {id}\n"));
    }
    for (j, roles) in red.role_map().iter().enumerate() {
        let ids: Vec<String> = roles.iter().map(ToString::to_string).collect();
        out.push_str(&format!("gadget {j} {}\n", ids.join(" ")));
    }
    out
}
