//! `circord`: recognition, ordering search, constructions, circular
//! chromatic number and reduction tooling from the command line.
//!
//! Exit codes: 0 when the answer is yes (or the command succeeded), 1 when it
//! is no, 2 on usage, input or cap errors.

mod render;
mod selfcheck;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use circord::chromatic::{chi_c_min, chi_c_orientation};
use circord::circular_order::io::{parse_ordering, write_ordering};
use circord::circular_order::{enumerate_catalog, CircOrderedGraph};
use circord::constructive::{
    order_caterpillar, order_forest, order_outerplanar, order_tree, zigzag, OUTERPLANAR_CAP,
};
use circord::families::{
    avoids, by_name, family_ca, family_cf, family_cr, family_forest, family_lf, ForbiddenFamily,
    OrderKind, Semantics, BUILTIN_NAMES,
};
use circord::graph::io::{parse_graph, to_graph6};
use circord::graph::oracle::is_outerplanar_oracle;
use circord::graph::{is_caterpillar_forest, is_forest, is_linear_forest};
use circord::patterns::io::{parse_linear_ordering, parse_patterns, write_linear_ordering};
use circord::patterns::{lin_avoids, LinOrderedGraph};
use circord::reduction::{
    build_reduction, extract_cyclic_order, parse_instance, solve_cyclic_ordering, write_role_map,
    CyclicOrderingInstance,
};
use circord::search::{find_free_circular_ordering, find_free_linear_ordering, SearchOptions};
use circord::Graph;

#[derive(Parser)]
#[command(
    name = "circord",
    version,
    about = "Circularly ordered graphs and forbidden patterns"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel search (0: library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest graph the search accepts.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find a circular ordering avoiding a family.
    Search {
        #[command(flatten)]
        family: FamilyArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Graph file (graph6 or edge list; `-` for stdin).
        #[arg(long = "in")]
        input: String,
        /// Write the witness ordering here.
        #[arg(long)]
        out: Option<String>,
    },
    /// Find a linear ordering avoiding a linear family.
    SearchLinear {
        #[command(flatten)]
        family: FamilyArg,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long = "in")]
        input: String,
        /// Override the family's matching semantics.
        #[arg(long, value_enum)]
        semantics: Option<SemanticsArg>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide class membership through its forbidden family.
    Recognize {
        #[arg(long, value_enum)]
        class: Class,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Build an ordering directly.
    Construct {
        #[arg(long, value_enum)]
        alg: Alg,
        /// Input graph (all algorithms except zigzag).
        #[arg(long = "in")]
        input: Option<String>,
        /// Root for the tree construction.
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Path length for the zigzag.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Circular chromatic number.
    ChiC {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Hom)]
        method: Method,
    },
    /// Circularly ordered graphs on `n` vertices up to isomorphism.
    Catalog {
        #[arg(long)]
        n: usize,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
    },
    /// Built-in forbidden families.
    Families {
        #[command(subcommand)]
        action: FamiliesCmd,
    },
    /// Build the gadget graph of a cyclic ordering instance.
    Reduce {
        #[arg(long = "in")]
        input: String,
        /// Write graph6 here instead of standard output.
        #[arg(long)]
        out: Option<String>,
        /// Write the vertex role map here.
        #[arg(long)]
        roles: Option<String>,
    },
    /// Solve a cyclic ordering instance.
    SolveCyclic {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = SolveMethod::Brute)]
        method: SolveMethod,
    },
    /// Draw an ordering on the unit circle.
    Render {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Re-check that an ordering file avoids a family.
    Verify {
        #[command(flatten)]
        family: FamilyArg,
        /// Ordering file (for linear families the sequence is read by rank).
        #[arg(long)]
        ordering: String,
    },
    /// Exhaustive consistency checks at small sizes.
    Selfcheck {
        /// Largest graph size to check.
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum FamiliesCmd {
    List,
    /// Members as ordering files separated by `---`.
    Dump {
        name: String,
    },
    /// A bundled pattern file (`ca`, `lca` or `cr`), usable with `--patterns`.
    Patterns {
        name: String,
    },
}

/// Pattern files bundled with the binary.
const PATTERN_ASSETS: [(&str, &str); 3] = [
    ("ca", include_str!("../assets/ca.pat")),
    ("lca", include_str!("../assets/lca.pat")),
    ("cr", include_str!("../assets/cr.pat")),
];

#[derive(clap::Args)]
struct FamilyArg {
    /// Built-in family: forest, lf, cf, ca, cr, fco, h<k>, ph<k>, st<k>, lin-<name>.
    #[arg(long, required_unless_present = "patterns")]
    family: Option<String>,
    /// Pattern file defining the family instead.
    #[arg(long, conflicts_with = "family")]
    patterns: Option<String>,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Split the search across threads.
    #[arg(long)]
    parallel: bool,
    /// In parallel mode, return whichever witness is found first.
    #[arg(long)]
    any: bool,
    /// Stop after this many search nodes.
    #[arg(long)]
    node_limit: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Induced,
    Subgraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    CircularArc,
    Outerplanar,
    Forest,
    LinearForest,
    CaterpillarForest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Tree,
    Forest,
    Zigzag,
    Caterpillar,
    Outerplanar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Hom,
    Orientation,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Brute,
    Search,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Dot,
}

/// Result of a command: the exit status and what to print.
struct Report {
    yes: bool,
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let json = cli.json;
    let result = if threads > 0 {
        circord::par::with_threads(threads, || run(&cli))
    } else {
        run(&cli)
    };
    match result {
        Ok(r) => {
            if json {
                println!("{}", r.json);
            } else if !r.text.is_empty() {
                print!("{}", r.text);
                if !r.text.ends_with('\n') {
                    println!();
                }
            }
            if r.yes {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json {
                println!("{}", json!({ "error": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: &str, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {path}"))
}

fn read_graph(path: &str) -> Result<Graph> {
    parse_graph(&read_input(path)?).with_context(|| format!("parsing graph {path}"))
}

fn load_family(arg: &FamilyArg) -> Result<ForbiddenFamily> {
    if let Some(name) = &arg.family {
        return Ok(by_name(name)?);
    }
    let path = arg
        .patterns
        .as_deref()
        .expect("clap requires one of the two");
    let patterns = parse_patterns(&read_input(path)?)?;
    let kind = patterns.first().map_or(OrderKind::Circular, |p| p.kind());
    if patterns.iter().any(|p| p.kind() != kind) {
        bail!("patterns in {path} mix cyclic and linear orders");
    }
    let members = patterns.iter().flat_map(|p| p.represented()).collect();
    Ok(ForbiddenFamily::new(
        path,
        kind,
        Semantics::Induced,
        members,
    )?)
}

fn search_options(cli: &Cli, args: &SearchArgs) -> SearchOptions {
    let mut opts = SearchOptions {
        parallel: args.parallel,
        deterministic: !args.any,
        node_limit: args.node_limit,
        ..SearchOptions::default()
    };
    if let Some(m) = cli.max_n {
        opts.max_n = m;
    }
    opts
}

fn seq_text(seq: &[usize]) -> String {
    seq.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn circular_report(
    g: &Graph,
    name: &str,
    witness: Option<CircOrderedGraph>,
    nodes: u64,
    exhaustive: bool,
    out: Option<&str>,
) -> Result<Report> {
    match witness {
        Some(cog) => {
            if let Some(path) = out {
                write_output(path, &write_ordering(&cog))?;
            }
            Ok(Report {
                yes: true,
                text: format!("{name}-free circular ordering: {}\n", seq_text(cog.seq())),
                json: json!({
                    "found": true,
                    "family": name,
                    "n": g.n(),
                    "witness": cog.seq(),
                    "nodes": nodes,
                    "exhaustive": true,
                }),
            })
        }
        None if exhaustive => Ok(Report {
            yes: false,
            text: format!("no {name}-free circular ordering (exhaustive)\n"),
            json: json!({
                "found": false,
                "family": name,
                "n": g.n(),
                "witness": null,
                "nodes": nodes,
                "exhaustive": true,
            }),
        }),
        None => bail!("undecided: node limit reached after {nodes} nodes"),
    }
}

fn cmd_search(
    cli: &Cli,
    fam: &FamilyArg,
    args: &SearchArgs,
    input: &str,
    out: Option<&str>,
) -> Result<Report> {
    let g = read_graph(input)?;
    let family = load_family(fam)?;
    if family.kind() != OrderKind::Circular {
        bail!("family {} is linear; use search-linear", family.name());
    }
    let res = find_free_circular_ordering(&g, &family, &search_options(cli, args))?;
    let witness = match &res.witness {
        Some(seq) => Some(CircOrderedGraph::from_sequence(g.clone(), seq)?),
        None => None,
    };
    circular_report(
        &g,
        family.name(),
        witness,
        res.nodes_explored,
        res.exhaustive,
        out,
    )
}

fn cmd_search_linear(
    cli: &Cli,
    fam: &FamilyArg,
    args: &SearchArgs,
    input: &str,
    semantics: Option<SemanticsArg>,
    out: Option<&str>,
) -> Result<Report> {
    let g = read_graph(input)?;
    let family = load_family(fam)?;
    if family.kind() != OrderKind::Linear {
        bail!(
            "family {} is circular; use search or lin-{0}",
            family.name()
        );
    }
    let sem = match semantics {
        Some(SemanticsArg::Induced) => Semantics::Induced,
        Some(SemanticsArg::Subgraph) => Semantics::Subgraph,
        None => family.semantics(),
    };
    let res = find_free_linear_ordering(&g, &family, sem, &search_options(cli, args))?;
    let name = family.name();
    match res.witness {
        Some(seq) => {
            if let Some(path) = out {
                let lin = LinOrderedGraph::new(g.clone(), seq.clone())?;
                write_output(path, &write_linear_ordering(&lin))?;
            }
            Ok(Report {
                yes: true,
                text: format!("{name}-free linear ordering: {}\n", seq_text(&seq)),
                json: json!({
                    "found": true,
                    "family": name,
                    "n": g.n(),
                    "witness": seq,
                    "nodes": res.nodes_explored,
                    "exhaustive": true,
                }),
            })
        }
        None if res.exhaustive => Ok(Report {
            yes: false,
            text: format!("no {name}-free linear ordering (exhaustive)\n"),
            json: json!({
                "found": false,
                "family": name,
                "n": g.n(),
                "witness": null,
                "nodes": res.nodes_explored,
                "exhaustive": true,
            }),
        }),
        None => bail!(
            "undecided: node limit reached after {} nodes",
            res.nodes_explored
        ),
    }
}

fn cmd_recognize(
    cli: &Cli,
    class: Class,
    args: &SearchArgs,
    input: &str,
    out: Option<&str>,
) -> Result<Report> {
    let g = read_graph(input)?;
    let (family, fast) = match class {
        Class::CircularArc => (family_ca(), None),
        Class::Outerplanar => {
            let fast = if g.n() <= OUTERPLANAR_CAP && is_outerplanar_oracle(&g)? {
                Some(order_outerplanar(&g)?)
            } else {
                None
            };
            (family_cr(), fast)
        }
        Class::Forest => {
            let fast = is_forest(&g).then(|| order_forest(&g)).transpose()?;
            (family_forest(), fast)
        }
        Class::LinearForest => {
            let fast = is_linear_forest(&g)
                .then(|| order_caterpillar(&g))
                .transpose()?;
            (family_lf(), fast)
        }
        Class::CaterpillarForest => {
            let fast = is_caterpillar_forest(&g)
                .then(|| order_caterpillar(&g))
                .transpose()?;
            (family_cf(), fast)
        }
    };
    if let Some(cog) = fast {
        if !avoids(&cog, &family) {
            bail!(
                "constructed ordering contains a member of {}",
                family.name()
            );
        }
        return circular_report(&g, family.name(), Some(cog), 0, true, out);
    }
    let res = find_free_circular_ordering(&g, &family, &search_options(cli, args))?;
    let witness = match &res.witness {
        Some(seq) => Some(CircOrderedGraph::from_sequence(g.clone(), seq)?),
        None => None,
    };
    circular_report(
        &g,
        family.name(),
        witness,
        res.nodes_explored,
        res.exhaustive,
        out,
    )
}

fn cmd_construct(
    alg: Alg,
    input: Option<&str>,
    root: usize,
    k: Option<usize>,
    out: Option<&str>,
) -> Result<Report> {
    let graph = || -> Result<Graph> {
        read_graph(input.ok_or_else(|| anyhow!("--in is required for this algorithm"))?)
    };
    let cog = match alg {
        Alg::Tree => order_tree(&graph()?, root)?,
        Alg::Forest => order_forest(&graph()?)?,
        Alg::Zigzag => zigzag(k.ok_or_else(|| anyhow!("--k is required for zigzag"))?)?,
        Alg::Caterpillar => order_caterpillar(&graph()?)?,
        Alg::Outerplanar => order_outerplanar(&graph()?)?,
    };
    let text = write_ordering(&cog);
    if let Some(path) = out {
        write_output(path, &text)?;
    }
    Ok(Report {
        yes: true,
        text: if out.is_some() { String::new() } else { text },
        json: json!({ "n": cog.n(), "sequence": cog.seq(), "edges": cog.graph().edges() }),
    })
}

fn cmd_chi_c(input: &str, method: Method) -> Result<Report> {
    let g = read_graph(input)?;
    let hom = (method != Method::Orientation)
        .then(|| chi_c_min(&g))
        .transpose()?;
    let orient = (method != Method::Hom)
        .then(|| chi_c_orientation(&g))
        .transpose()?;
    let agree = match (hom, orient) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let mut text = String::new();
    if let Some(v) = hom {
        text.push_str(&format!("hom: {v}\n"));
    }
    if let Some(v) = orient {
        text.push_str(&format!("orientation: {v}\n"));
    }
    if let Some(a) = agree {
        text.push_str(&format!("agree: {a}\n"));
    }
    Ok(Report {
        yes: agree != Some(false),
        text,
        json: json!({
            "hom": hom.map(|v| v.to_string()),
            "orientation": orient.map(|v| v.to_string()),
            "agree": agree,
        }),
    })
}

fn cmd_catalog(n: usize, count: bool) -> Result<Report> {
    let classes = enumerate_catalog(n)?;
    let text = if count {
        format!("{}\n", classes.len())
    } else {
        classes
            .iter()
            .map(write_ordering)
            .collect::<Vec<_>>()
            .join("---\n")
    };
    Ok(Report {
        yes: true,
        text,
        json: json!({
            "n": n,
            "count": classes.len(),
            "classes": classes.iter().map(|c| c.graph().edges()).collect::<Vec<_>>(),
        }),
    })
}

fn family_names() -> Vec<String> {
    let mut names: Vec<String> = BUILTIN_NAMES.iter().map(ToString::to_string).collect();
    names.extend((3..=6).map(|k| format!("h{k}")));
    names.extend((4..=6).map(|k| format!("ph{k}")));
    names.extend((2..=4).map(|k| format!("st{k}")));
    names
}

fn cmd_families(action: &FamiliesCmd) -> Result<Report> {
    match action {
        FamiliesCmd::List => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for name in family_names() {
                let f = by_name(&name)?;
                text.push_str(&format!(
                    "{name:<8} {:<8} {:<9} {}\n",
                    format!("{:?}", f.kind()).to_lowercase(),
                    format!("{:?}", f.semantics()).to_lowercase(),
                    f.len()
                ));
                rows.push(json!({
                    "name": name,
                    "kind": format!("{:?}", f.kind()).to_lowercase(),
                    "semantics": format!("{:?}", f.semantics()).to_lowercase(),
                    "members": f.len(),
                }));
            }
            Ok(Report {
                yes: true,
                text,
                json: Value::Array(rows),
            })
        }
        FamiliesCmd::Patterns { name } => {
            let lower = name.to_ascii_lowercase();
            let (_, text) = PATTERN_ASSETS
                .iter()
                .find(|(n, _)| *n == lower)
                .ok_or_else(|| anyhow!("no bundled patterns named {name:?}"))?;
            let patterns = parse_patterns(text)?;
            Ok(Report {
                yes: true,
                text: text.to_string(),
                json: json!({ "name": lower, "patterns": patterns.len(), "text": text }),
            })
        }
        FamiliesCmd::Dump { name } => {
            let f = by_name(name)?;
            let blocks: Vec<String> = match f.kind() {
                OrderKind::Circular => f.circular_members().iter().map(write_ordering).collect(),
                OrderKind::Linear => f
                    .linear_members()
                    .iter()
                    .map(write_linear_ordering)
                    .collect(),
            };
            Ok(Report {
                yes: true,
                text: blocks.join("---\n"),
                json: json!({
                    "name": f.name(),
                    "members": f.members().iter().map(|g| json!({
                        "n": g.n(),
                        "edges": g.edges(),
                    })).collect::<Vec<_>>(),
                }),
            })
        }
    }
}

fn read_instance(path: &str) -> Result<CyclicOrderingInstance> {
    parse_instance(&read_input(path)?).with_context(|| format!("parsing instance {path}"))
}

fn cmd_reduce(input: &str, out: Option<&str>, roles: Option<&str>) -> Result<Report> {
    let inst = read_instance(input)?;
    let red = build_reduction(&inst)?;
    let g6 = to_graph6(&red.graph);
    if let Some(path) = roles {
        write_output(path, &write_role_map(&inst, &red))?;
    }
    let text = match out {
        Some(path) => {
            write_output(path, &format!("{g6}\n"))?;
            format!(
                "{} vertices, {} edges written to {path}\n",
                red.graph.n(),
                red.graph.edge_count()
            )
        }
        None => format!("{g6}\n"),
    };
    Ok(Report {
        yes: true,
        text,
        json: json!({
            "graph6": g6,
            "vertices": red.graph.n(),
            "edges": red.graph.edge_count(),
            "gadgets": red.role_map(),
        }),
    })
}

fn cmd_solve_cyclic(cli: &Cli, input: &str, method: SolveMethod) -> Result<Report> {
    let inst = read_instance(input)?;
    let brute = (method != SolveMethod::Search)
        .then(|| solve_cyclic_ordering(&inst))
        .transpose()?;
    let via_search = if method == SolveMethod::Brute {
        None
    } else {
        let red = build_reduction(&inst)?;
        let mut opts = SearchOptions {
            max_n: red.graph.n().max(SearchOptions::default().max_n),
            ..SearchOptions::default()
        };
        if let Some(m) = cli.max_n {
            opts.max_n = m;
        }
        let res = find_free_circular_ordering(&red.graph, &circord::families::family_fco(), &opts)?;
        Some(match res.witness {
            Some(seq) => {
                let ord = circord::circular_order::circular_closure(&seq)?;
                Some(extract_cyclic_order(&red, &ord)?)
            }
            None => None,
        })
    };
    if let (Some(a), Some(b)) = (&brute, &via_search) {
        if a.is_some() != b.is_some() {
            bail!("brute force and reduction search disagree");
        }
    }
    let answer = brute.or(via_search).expect("at least one method ran");
    let names =
        |o: &[usize]| -> Vec<String> { o.iter().map(|&i| inst.elements()[i].clone()).collect() };
    Ok(match answer {
        Some(order) => Report {
            yes: true,
            text: format!("satisfiable: {}\n", names(&order).join(" ")),
            json: json!({ "satisfiable": true, "order": names(&order) }),
        },
        None => Report {
            yes: false,
            text: "unsatisfiable\n".into(),
            json: json!({ "satisfiable": false, "order": null }),
        },
    })
}

fn cmd_render(input: &str, format: Format, out: Option<&str>) -> Result<Report> {
    let cog = parse_ordering(&read_input(input)?)?;
    let doc = match format {
        Format::Svg => render::svg(&cog),
        Format::Dot => render::dot(&cog),
    };
    if let Some(path) = out {
        write_output(path, &doc)?;
    }
    Ok(Report {
        yes: true,
        text: if out.is_some() {
            String::new()
        } else {
            doc.clone()
        },
        json: json!({ "document": doc }),
    })
}

fn cmd_verify(fam: &FamilyArg, ordering: &str) -> Result<Report> {
    let family = load_family(fam)?;
    let text = read_input(ordering)?;
    let ok = match family.kind() {
        OrderKind::Circular => avoids(&parse_ordering(&text)?, &family),
        OrderKind::Linear => {
            lin_avoids(&parse_linear_ordering(&text)?, &family, family.semantics())
        }
    };
    let name = family.name();
    Ok(Report {
        yes: ok,
        text: if ok {
            format!("ordering avoids {name}\n")
        } else {
            format!("ordering contains a member of {name}\n")
        },
        json: json!({ "family": name, "avoids": ok }),
    })
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.cmd {
        Cmd::Search {
            family,
            search,
            input,
            out,
        } => cmd_search(cli, family, search, input, out.as_deref()),
        Cmd::SearchLinear {
            family,
            search,
            input,
            semantics,
            out,
        } => cmd_search_linear(cli, family, search, input, *semantics, out.as_deref()),
        Cmd::Recognize {
            class,
            search,
            input,
            out,
        } => cmd_recognize(cli, *class, search, input, out.as_deref()),
        Cmd::Construct {
            alg,
            input,
            root,
            k,
            out,
        } => cmd_construct(*alg, input.as_deref(), *root, *k, out.as_deref()),
        Cmd::ChiC { input, method } => cmd_chi_c(input, *method),
        Cmd::Catalog { n, count } => cmd_catalog(*n, *count),
        Cmd::Families { action } => cmd_families(action),
        Cmd::Reduce { input, out, roles } => cmd_reduce(input, out.as_deref(), roles.as_deref()),
        Cmd::SolveCyclic { input, method } => cmd_solve_cyclic(cli, input, *method),
        Cmd::Render { input, format, out } => cmd_render(input, *format, out.as_deref()),
        Cmd::Verify { family, ordering } => cmd_verify(family, ordering),
        Cmd::Selfcheck { n } => selfcheck::run(*n),
    }
}
