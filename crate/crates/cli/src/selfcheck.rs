//! Exhaustive cross-checks between independent procedures on small inputs.

use anyhow::Result;
use itertools::Itertools;
use serde_json::json;

use circord::chromatic::{chi_c_min, chi_c_orientation, chromatic_number};
use circord::circular_order::{enumerate_catalog, CircOrderedGraph};
use circord::families::{avoids, by_name, family_fco, family_h, BUILTIN_NAMES};
use circord::graph::oracle::{is_outerplanar_oracle, tucker_condition};
use circord::graph::{enumerate_graphs, is_caterpillar_forest, is_forest, is_linear_forest};
use circord::reduction::{build_reduction, solve_cyclic_ordering, CyclicOrderingInstance};
use circord::search::{find_free_circular_ordering, SearchOptions};
use circord::{Graph, Rational};

use crate::Report;

/// Every circular ordering of `0..n` as a sequence starting at 0.
fn circular_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..n)
        .permutations(n - 1)
        .map(|rest| std::iter::once(0).chain(rest).collect())
        .collect()
}

fn graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k, true)?);
    }
    Ok(out)
}

fn found(g: &Graph, name: &str) -> Result<bool> {
    let opts = SearchOptions::default();
    Ok(find_free_circular_ordering(g, &by_name(name)?, &opts)?.found)
}

fn class_equivalences(graphs: &[Graph]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for g in graphs {
        let checks = [
            ("forest", is_forest(g)),
            ("lf", is_linear_forest(g)),
            ("cf", is_caterpillar_forest(g)),
            ("cr", is_outerplanar_oracle(g)?),
            (
                "ca",
                circular_sequences(g.n())
                    .iter()
                    .any(|s| tucker_condition(g, s)),
            ),
        ];
        for (name, expected) in checks {
            if found(g, name)? != expected {
                bad.push(format!("{name} on {g:?}"));
            }
        }
    }
    Ok(bad)
}

fn search_matches_naive(graphs: &[Graph]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for name in BUILTIN_NAMES {
        let fam = by_name(name)?;
        for g in graphs {
            let naive = circular_sequences(g.n()).iter().any(|s| {
                let cog = CircOrderedGraph::from_sequence(g.clone(), s).expect("permutation");
                avoids(&cog, &fam)
            });
            if found(g, name)? != naive {
                bad.push(format!("{name} on {g:?}"));
            }
        }
    }
    Ok(bad)
}

fn chi_c_agreement(graphs: &[Graph]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for g in graphs {
        let a = chi_c_min(g)?;
        let b = chi_c_orientation(g)?;
        let chi = chromatic_number(g)? as u64;
        // chi - 1 < a <= chi, cross-multiplied.
        let above = a.numer() > (chi - 1) * a.denom();
        if a != b || !above || a > Rational::integer(chi)? {
            bad.push(format!("{g:?}: {a} vs {b}, chi {chi}"));
        }
    }
    Ok(bad)
}

fn reduction_agreement(max_a: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let fco = family_fco();
    for na in 3..=max_a {
        let triples: Vec<[usize; 3]> = (0..na)
            .permutations(3)
            .map(|t| [t[0], t[1], t[2]])
            .collect();
        for r in 0..=2 {
            for pick in triples.iter().combinations(r) {
                let inst =
                    CyclicOrderingInstance::numbered(na, pick.into_iter().copied().collect())?;
                let red = build_reduction(&inst)?;
                let opts = SearchOptions {
                    max_n: red.graph.n(),
                    ..SearchOptions::default()
                };
                let via_search = find_free_circular_ordering(&red.graph, &fco, &opts)?.found;
                if solve_cyclic_ordering(&inst)?.is_some() != via_search {
                    bad.push(format!("{:?}", inst.triples()));
                }
            }
        }
    }
    Ok(bad)
}

pub fn run(n: usize) -> Result<Report> {
    let graphs = graphs_up_to(n)?;
    let catalog: Vec<usize> = (0..=n.min(4))
        .map(|k| enumerate_catalog(k).map(|c| c.len()))
        .collect::<Result<_, _>>()?;
    let expected_catalog = [1, 1, 2, 4, 22];
    let mut results: Vec<(&str, Vec<String>)> = vec![(
        "catalog counts",
        if catalog[..] == expected_catalog[..catalog.len()] {
            Vec::new()
        } else {
            vec![format!("{catalog:?}")]
        },
    )];
    let h_sizes = (family_h(3)?.len(), family_h(4)?.len());
    results.push((
        "H3 and H4 sizes",
        if h_sizes == (1, 3) {
            Vec::new()
        } else {
            vec![format!("{h_sizes:?}")]
        },
    ));
    results.push(("class equivalences", class_equivalences(&graphs)?));
    results.push((
        "search agrees with generate-and-test",
        search_matches_naive(&graphs)?,
    ));
    results.push((
        "circular chromatic number methods",
        chi_c_agreement(&graphs)?,
    ));
    results.push((
        "reduction agrees with brute force",
        reduction_agreement(n.min(4))?,
    ));

    let mut text = String::new();
    let mut rows = Vec::new();
    for (name, bad) in &results {
        let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{verdict} {name}"));
        if let Some(first) = bad.first() {
            text.push_str(&format!(" ({} failures, first: {first})", bad.len()));
        }
        text.push('\n');
        rows.push(json!({ "check": name, "pass": bad.is_empty(), "failures": bad }));
    }
    Ok(Report {
        yes: results.iter().all(|(_, bad)| bad.is_empty()),
        text,
        json: json!({ "n": n, "checks": rows }),
    })
}
