//! Command-line interface.
//!
//! Query subcommands answer one question about one graph and print a small
//! JSON object; `verify` runs a sweep and prints a full report. Exit codes:
//! 0 for success or a verified property, 1 when a tested property fails or a
//! sweep finds violations, 2 for usage and format errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use p3c_core::radon::VertexMultiset;
use p3c_core::{convexity, families, radon, tree_dp, Graph, VertexSet};
use serde_json::json;

use crate::input::{self, FamilySpec};
use crate::verify;
use crate::{graph6, Error};

#[derive(Parser)]
#[command(
    name = "p3c",
    version,
    about = "Exact invariants of two-neighbor graph convexity",
    long_about = "Exact computation of hulls, free sets, and Radon numbers for the \
                  convexity in which a set absorbs every vertex with two neighbors \
                  inside it, plus exhaustive verification sweeps over small trees."
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the convex hull of a vertex set.
    Hull {
        #[command(flatten)]
        graph: GraphArgs,
        /// Seed vertices, comma-separated.
        #[arg(long, value_name = "VERTS")]
        set: String,
        /// Also report the vertices absorbed in each round.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Test whether a vertex set is convex.
    Convex {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "VERTS")]
        set: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Test whether a vertex set is free, i.e. no vertex has two neighbors
    /// in it.
    Free {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "VERTS")]
        set: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the largest free set, or the largest one avoiding a vertex.
    Alpha {
        #[command(flatten)]
        graph: GraphArgs,
        /// Compute the vertex-avoiding variant for this vertex.
        #[arg(long, value_name = "V")]
        star: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the largest anti-Radon multiset, or test a given multiset.
    Radon {
        #[command(flatten)]
        graph: GraphArgs,
        /// Number of parts in the sought partitions.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Test this multiset instead of maximizing. Items are `v` or `v:m`.
        #[arg(long, value_name = "ITEMS")]
        multiset: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Like radon, but the multiset hull must also avoid a vertex.
    RadonStar {
        #[command(flatten)]
        graph: GraphArgs,
        /// The vertex the hull must avoid.
        #[arg(long, value_name = "V")]
        vertex: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_name = "ITEMS")]
        multiset: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print a built-in family graph.
    Family {
        /// Family name: "g1" or "tm:<m>".
        #[arg(long, value_name = "NAME")]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate all unlabeled trees of one order as graph6 strings.
    Enumerate {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Report only the count.
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a verification sweep over all trees up to an order.
    Verify {
        /// Which sweep to run.
        #[arg(value_enum)]
        which: Which,
        /// Largest tree order included.
        #[arg(long = "max-n", value_name = "N")]
        max_n: usize,
        /// Part count; defaults to 3 for thm1 and 2 for recursions.
        #[arg(long)]
        k: Option<u32>,
        /// Worker threads; 0 means all available. Overridden by P3C_JOBS.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Extra tree files appended to the sweep (repeatable).
        #[arg(long = "include", value_name = "FILE")]
        include: Vec<PathBuf>,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Thm1,
    Thm2,
    Recursions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Graph source; exactly one must be given.
#[derive(Args)]
struct GraphArgs {
    /// Graph file; "-" reads stdin.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long = "graph6", value_name = "STR")]
    graph6: Option<String>,
    /// Built-in family: "g1" or "tm:<m>".
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// File format; by default the first data byte decides (a digit or '#'
    /// means edge list, anything else graph6).
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct CommonArgs {
    /// Read and write vertices one-indexed instead of zero-indexed.
    #[arg(long)]
    one_indexed: bool,
    /// Write the result to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

impl GraphArgs {
    fn load(&self, one_indexed: bool) -> Result<Graph, Error> {
        match (&self.graph, &self.graph6, &self.family) {
            (Some(path), None, None) => {
                let text = input::read_graph_text(path)?;
                match self.input_format {
                    InputFormat::Auto => input::parse_graph_text(&text, one_indexed),
                    InputFormat::Graph6 => graph6::decode(&text),
                    InputFormat::EdgeList => crate::edgelist::parse(&text, one_indexed),
                }
            }
            (None, Some(s), None) => graph6::decode(s),
            (None, None, Some(name)) => FamilySpec::parse(name)?.build(),
            _ => Err(Error::Usage(
                "give exactly one of --graph, --graph6, --family".into(),
            )),
        }
    }
}

impl CommonArgs {
    fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => {
                std::fs::write(path, format!("{text}\n"))?;
            }
            None => println!("{text}"),
        }
        Ok(())
    }

    /// Maps internal vertex labels to the output convention.
    fn verts(&self, vs: &[usize]) -> Vec<usize> {
        let shift = usize::from(self.one_indexed);
        vs.iter().map(|&v| v + shift).collect()
    }

    fn set(&self, s: &VertexSet) -> Vec<usize> {
        self.verts(&s.elements())
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Hull {
            graph,
            set,
            trace,
            common,
        } => {
            let g = graph.load(common.one_indexed)?;
            let s = input::parse_set(&set, g.n(), common.one_indexed)?;
            let t = convexity::hull_trace(&g, &s);
            let body = if trace {
                json!({
                    "hull": common.set(&t.hull),
                    "rounds": t.rounds.iter().map(|r| common.set(r)).collect::<Vec<_>>(),
                })
            } else {
                json!({ "hull": common.set(&t.hull) })
            };
            common.emit(&body.to_string())?;
            Ok(0)
        }
        Cmd::Convex { graph, set, common } => {
            let g = graph.load(common.one_indexed)?;
            let s = input::parse_set(&set, g.n(), common.one_indexed)?;
            let ok = convexity::is_convex(&g, &s);
            common.emit(&json!({ "convex": ok }).to_string())?;
            Ok(i32::from(!ok))
        }
        Cmd::Free { graph, set, common } => {
            let g = graph.load(common.one_indexed)?;
            let s = input::parse_set(&set, g.n(), common.one_indexed)?;
            let ok = convexity::is_free(&g, &s);
            common.emit(&json!({ "free": ok }).to_string())?;
            Ok(i32::from(!ok))
        }
        Cmd::Alpha {
            graph,
            star,
            common,
        } => {
            let g = graph.load(common.one_indexed)?;
            let body = match star {
                None => {
                    let (value, witness) = if g.is_tree() {
                        tree_dp::alpha_tree(&g)?
                    } else {
                        convexity::max_free_set(&g)?
                    };
                    json!({ "alpha": value, "witness": common.set(&witness) })
                }
                Some(v) => {
                    let v = input::parse_vertex(&v, g.n(), common.one_indexed)?;
                    let avoid = VertexSet::from_elements(g.n(), &[v]);
                    let (value, witness) = convexity::max_free_set_excluding(&g, &avoid)?;
                    let mut body = json!({
                        "vertex": common.verts(&[v])[0],
                        "alpha_star": value,
                        "witness": common.set(&witness),
                    });
                    if g.is_tree() {
                        // Cross-check the component recursion in the output.
                        body["recursion"] = json!(tree_dp::alpha_star_tree(&g, v)?);
                    }
                    body
                }
            };
            common.emit(&body.to_string())?;
            Ok(0)
        }
        Cmd::Radon {
            graph,
            k,
            multiset,
            common,
        } => {
            let g = graph.load(common.one_indexed)?;
            match multiset {
                Some(items) => {
                    let ms = input::parse_multiset(&items, g.n(), common.one_indexed)?;
                    let partition = radon::find_k_radon_partition(&g, &ms, k)?;
                    emit_anti_radon_test(&common, partition.as_ref())
                }
                None => {
                    let result = radon::max_anti_radon_multiset(&g, k)?;
                    let body = json!({
                        "k": k,
                        "value": result.value,
                        "witness": common.verts(&result.witness.expanded()),
                        "certified": result.certificate_checked,
                    });
                    common.emit(&body.to_string())?;
                    Ok(0)
                }
            }
        }
        Cmd::RadonStar {
            graph,
            vertex,
            k,
            multiset,
            common,
        } => {
            let g = graph.load(common.one_indexed)?;
            let v = input::parse_vertex(&vertex, g.n(), common.one_indexed)?;
            match multiset {
                Some(items) => {
                    let ms = input::parse_multiset(&items, g.n(), common.one_indexed)?;
                    let hull = convexity::hull(&g, &ms.support());
                    let avoids = !hull.contains(v);
                    let partition = radon::find_k_radon_partition(&g, &ms, k)?;
                    let ok = avoids && partition.is_none();
                    let body = json!({
                        "anti_radon": partition.is_none(),
                        "avoids_vertex": avoids,
                        "ok": ok,
                    });
                    common.emit(&body.to_string())?;
                    Ok(i32::from(!ok))
                }
                None => {
                    let result = radon::radon_star(&g, v, k)?;
                    let mut body = json!({
                        "vertex": common.verts(&[v])[0],
                        "k": k,
                        "value": result.value,
                        "witness": common.verts(&result.witness.expanded()),
                        "certified": result.certificate_checked,
                    });
                    if g.is_tree() {
                        body["recursion"] = json!(tree_dp::radon_star_tree(&g, v, k)?);
                    }
                    common.emit(&body.to_string())?;
                    Ok(0)
                }
            }
        }
        Cmd::Family { family, common } => {
            let spec = FamilySpec::parse(&family)?;
            let g = spec.build()?;
            let edges: Vec<Vec<usize>> = g
                .edges()
                .iter()
                .map(|&(u, v)| common.verts(&[u, v]))
                .collect();
            let body = json!({
                "family": spec.name(),
                "n": g.n(),
                "graph6": graph6::encode(&g),
                "edges": edges,
            });
            common.emit(&body.to_string())?;
            Ok(0)
        }
        Cmd::Enumerate {
            n,
            count_only,
            common,
        } => {
            let body = if count_only {
                json!({ "n": n, "count": families::enumerate_trees(n)?.count() })
            } else {
                let trees: Vec<String> = families::enumerate_trees(n)?
                    .map(|g| graph6::encode(&g))
                    .collect();
                json!({ "n": n, "count": trees.len(), "trees": trees })
            };
            common.emit(&body.to_string())?;
            Ok(0)
        }
        Cmd::Verify {
            which,
            max_n,
            k,
            jobs,
            include,
            format,
            common,
        } => {
            let jobs = std::env::var("P3C_JOBS")
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or(jobs);
            let mut extras = Vec::new();
            for path in &include {
                extras.push(input::load_graph_file(path, common.one_indexed)?);
            }
            let report = match which {
                Which::Thm2 => {
                    if k.is_some() {
                        return Err(Error::Usage("the thm2 sweep takes no --k".into()));
                    }
                    verify::verify_theorem2(max_n, jobs, &extras)?
                }
                Which::Thm1 => verify::verify_theorem1(max_n, k.unwrap_or(3), jobs, &extras)?,
                Which::Recursions => {
                    verify::verify_recursions(max_n, k.unwrap_or(2), jobs, &extras)?
                }
            };
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv().trim_end().to_string(),
            };
            common.emit(&text)?;
            Ok(i32::from(!report.summary.violations.is_empty()))
        }
    }
}

/// Prints the outcome of an anti-Radon membership test.
fn emit_anti_radon_test(
    common: &CommonArgs,
    partition: Option<&radon::RadonPartition>,
) -> Result<i32, Error> {
    match partition {
        None => {
            common.emit(&json!({ "anti_radon": true }).to_string())?;
            Ok(0)
        }
        Some(p) => {
            let parts: Vec<Vec<usize>> = p
                .parts
                .iter()
                .map(|part: &VertexMultiset| common.verts(&part.expanded()))
                .collect();
            let body = json!({
                "anti_radon": false,
                "partition": parts,
                "common": common.verts(&[p.common])[0],
            });
            common.emit(&body.to_string())?;
            Ok(1)
        }
    }
}
