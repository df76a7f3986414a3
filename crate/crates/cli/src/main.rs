use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use jetgraph::groebner::PolyIdeal;
use jetgraph::{betti, graph, io, jets, verify};
use jetgraph::{Corpus, Error, Graph, JetsRing, Limits, MonomialIdeal, Status, Suite};

/// Jets of graphs and edge ideals: covers, principal components, Betti
/// tables and verification suites.
#[derive(Parser)]
#[command(name = "jetgraph", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Jet order, or a comma-separated list of orders.
    #[arg(short = 's', long = "order", global = true, value_delimiter = ',')]
    s: Vec<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON file overriding resource limits.
    #[arg(long, global = true)]
    limits: Option<String>,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Read input from this file instead of stdin.
    #[arg(long, short = 'i', global = true)]
    input: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    ClosedForm,
    Intersection,
    Saturation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Edge,
    Jets,
    JetsRadical,
    Pc,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal vertex covers of the input graph.
    Covers,
    /// The jets graph J_s(G).
    JetsGraph,
    /// Complement of the input graph, or of its jets graph.
    Complement {
        #[arg(long)]
        jets: bool,
    },
    /// Chordality test with a chordless-cycle witness.
    Chordal {
        /// Test the complement instead.
        #[arg(long)]
        cochordal: bool,
    },
    /// The edge ideal of the input graph.
    EdgeIdeal,
    /// Jets of the edge ideal, or of an ideal file with --ideal.
    JetsIdeal {
        #[arg(long)]
        ideal: bool,
    },
    /// Radical of the jets of the edge ideal, or of a monomial ideal file.
    JetsRadical {
        #[arg(long)]
        ideal: bool,
    },
    /// The principal component ideal PC_s.
    Pc {
        #[arg(long, value_enum, default_value_t = Route::ClosedForm)]
        route: Route,
    },
    /// Singular locus of V(I(G)) on order-zero jets variables.
    SingularLocus,
    /// Graded Betti table.
    Betti(BettiArgs),
    /// Whether the ideal has a linear resolution.
    LinearRes(BettiArgs),
    /// Run a verification suite over a corpus.
    Verify {
        suite: String,
        /// Corpus description, e.g. `all-connected:5` or `path:3+cycle:5`.
        #[arg(long, default_value = "all-connected:4")]
        corpus: String,
    },
    /// Macaulay2 source for an ideal derived from the input graph.
    ExportM2 {
        #[arg(long, value_enum, default_value_t = Source::Jets)]
        ideal: Source,
    },
}

#[derive(Args)]
struct BettiArgs {
    /// Use the principal component ideal PC_s.
    #[arg(long, conflicts_with = "jets_radical")]
    pc: bool,
    /// Use the radical of the jets ideal.
    #[arg(long)]
    jets_radical: bool,
    /// Read a monomial ideal file instead of a graph.
    #[arg(long)]
    ideal: bool,
    /// Betti numbers of S/I (the default); `--quotient false` reports I.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    quotient: bool,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = std::result::Result<Option<Status>, Failure>;

struct Ctx {
    global: Global,
    limits: Limits,
    out: String,
}

impl Ctx {
    fn orders(&self, default: &[usize]) -> Vec<usize> {
        if self.global.s.is_empty() {
            default.to_vec()
        } else {
            self.global.s.clone()
        }
    }

    fn structured(&self) -> bool {
        self.global.format == Format::Structured
    }

    fn read_input(&self) -> Result<String, Failure> {
        match &self.global.input {
            Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
            None => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        Ok(Graph::parse_auto(&self.read_input()?)?)
    }

    /// Runs `body` once per jet order, separating blocks when several
    /// orders were requested.
    fn per_order(
        &mut self,
        default: &[usize],
        mut body: impl FnMut(&mut Ctx, usize) -> Result<String, Failure>,
    ) -> Result<(), Failure> {
        let orders = self.orders(default);
        let several = orders.len() > 1;
        for s in orders {
            let block = body(self, s)?;
            if several && !self.structured() {
                self.out.push_str(&format!("-- s = {s}\n"));
            }
            self.out.push_str(&block);
            if !block.ends_with('\n') {
                self.out.push('\n');
            }
        }
        Ok(())
    }

    fn graph_out(&self, g: &Graph) -> String {
        if self.structured() {
            g.to_structured()
        } else {
            g.to_edge_list()
        }
    }

    fn monomial_out(&self, i: &MonomialIdeal) -> String {
        if self.structured() {
            io::monomial_ideal_to_structured(i)
        } else {
            io::monomial_ideal_to_text(i)
        }
    }

    fn poly_out(&self, i: &PolyIdeal) -> String {
        if self.structured() {
            io::ideal_to_structured(i.ring(), i.generators())
        } else {
            io::ideal_to_text(i.ring(), i.generators())
        }
    }
}

fn source_ideal(args: &BettiArgs, s: usize, text: &str) -> Result<MonomialIdeal, Failure> {
    if args.ideal {
        let i = io::parse_monomial_ideal(text)?;
        return Ok(if args.jets_radical {
            jets::radical_of_jets(&i, s)?
        } else {
            i
        });
    }
    let g = Graph::parse_auto(text)?;
    Ok(if args.pc {
        jets::principal_component_ideal(&g, s)
    } else if args.jets_radical {
        graph::edge_ideal(&jets::jets_of_graph(&g, s))
    } else {
        graph::edge_ideal(&g)
    })
}

/// `β_i(I) = β_{i+1}(S/I)`.
fn ideal_table(t: &betti::BettiTable) -> betti::BettiTable {
    betti::BettiTable::from_entries(
        t.entries()
            .iter()
            .filter(|(&(i, _), _)| i > 0)
            .map(|(&(i, j), &v)| ((i - 1, j), v)),
    )
}

fn run(ctx: &mut Ctx, command: &Command) -> Outcome {
    match command {
        Command::Covers => {
            let g = ctx.graph()?;
            let covers = graph::minimal_vertex_covers(&g, &ctx.limits)?;
            ctx.out = if ctx.structured() {
                let list: Vec<Vec<&str>> = covers.iter().map(|c| c.names(&g)).collect();
                format!("{}\n", serde_json::to_string_pretty(&json!({ "covers": list })).unwrap())
            } else {
                covers
                    .iter()
                    .map(|c| format!("{{{}}}\n", c.names(&g).join(", ")))
                    .collect()
            };
        }
        Command::JetsGraph => {
            let g = ctx.graph()?;
            ctx.per_order(&[1], |c, s| Ok(c.graph_out(&jets::jets_of_graph(&g, s))))?;
        }
        Command::Complement { jets: lift } => {
            let g = ctx.graph()?;
            if *lift {
                ctx.per_order(&[1], |c, s| Ok(c.graph_out(&jets::jets_complement_edges(&g, s))))?;
            } else {
                ctx.out = ctx.graph_out(&graph::complement(&g));
            }
        }
        Command::Chordal { cochordal } => {
            let g = ctx.graph()?;
            let target = if *cochordal { graph::complement(&g) } else { g };
            let (ok, cycle) = graph::is_chordal(&target);
            let witness: Option<Vec<&str>> = cycle.as_ref().map(|c| c.names(&target));
            let label = if *cochordal { "cochordal" } else { "chordal" };
            ctx.out = if ctx.structured() {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({ label: ok, "chordless_cycle": witness })).unwrap()
                )
            } else {
                let mut s = format!("{label}: {}\n", if ok { "yes" } else { "no" });
                if let Some(w) = witness {
                    s.push_str(&format!("chordless cycle: {}\n", w.join(" ")));
                }
                s
            };
        }
        Command::EdgeIdeal => {
            let g = ctx.graph()?;
            ctx.out = ctx.monomial_out(&graph::edge_ideal(&g));
        }
        Command::JetsIdeal { ideal } => {
            let text = ctx.read_input()?;
            let base = if *ideal {
                io::parse_ideal(&text)?
            } else {
                graph::edge_ideal(&Graph::parse_auto(&text)?).to_poly_ideal()
            };
            ctx.per_order(&[1], |c, s| {
                let jr = JetsRing::new(base.ring(), s)?;
                Ok(c.poly_out(&jr.jets_of_ideal(&base)?))
            })?;
        }
        Command::JetsRadical { ideal } => {
            let text = ctx.read_input()?;
            let base = if *ideal {
                io::parse_monomial_ideal(&text)?
            } else {
                graph::edge_ideal(&Graph::parse_auto(&text)?)
            };
            ctx.per_order(&[1], |c, s| Ok(c.monomial_out(&jets::radical_of_jets(&base, s)?)))?;
        }
        Command::Pc { route } => {
            let g = ctx.graph()?;
            let route = *route;
            ctx.per_order(&[1], |c, s| {
                Ok(match route {
                    Route::ClosedForm => c.monomial_out(&jets::principal_component_ideal(&g, s)),
                    Route::Intersection => c.monomial_out(&jets::pc_as_cover_intersection(&g, s, &c.limits)?),
                    Route::Saturation => {
                        let i = jets::principal_component_via_saturation(&g, s, &c.limits)?;
                        c.poly_out(&i.groebner_basis(&c.limits)?.as_ideal())
                    }
                })
            })?;
        }
        Command::SingularLocus => {
            let g = ctx.graph()?;
            ctx.per_order(&[0], |c, s| Ok(c.monomial_out(&jets::singular_locus_ideal(&g, s, &c.limits)?)))?;
        }
        Command::Betti(args) => {
            let text = ctx.read_input()?;
            let jet = args.pc || args.jets_radical;
            ctx.per_order(if jet { &[1] } else { &[0] }, |c, s| {
                let ideal = source_ideal(args, s, &text)?;
                let mut table = betti::betti_table(&ideal, &c.limits)?;
                if !args.quotient {
                    table = ideal_table(&table);
                }
                Ok(if c.structured() { table.to_structured() } else { table.to_string() })
            })?;
        }
        Command::LinearRes(args) => {
            let text = ctx.read_input()?;
            let jet = args.pc || args.jets_radical;
            ctx.per_order(if jet { &[1] } else { &[0] }, |c, s| {
                let ideal = source_ideal(args, s, &text)?;
                let linear = betti::has_linear_resolution(&ideal, &c.limits)?;
                Ok(if c.structured() {
                    format!("{}\n", json!({ "linear_resolution": linear }))
                } else {
                    format!("linear resolution: {}\n", if linear { "yes" } else { "no" })
                })
            })?;
        }
        Command::Verify { suite, corpus } => return verify_command(ctx, suite, corpus),
        Command::ExportM2 { ideal } => {
            let g = ctx.graph()?;
            let which = *ideal;
            ctx.per_order(&[1], |_, s| {
                Ok(match which {
                    Source::Edge => io::monomial_ideal_to_macaulay2(&graph::edge_ideal(&g), "I")?,
                    Source::Jets => {
                        let jr = JetsRing::for_graph(&g, s);
                        let j = jr.jets_of_ideal(&graph::edge_ideal(&g).to_poly_ideal())?;
                        io::to_macaulay2(j.ring(), j.generators(), "J")?
                    }
                    Source::JetsRadical => {
                        io::monomial_ideal_to_macaulay2(&jets::radical_of_jets(&graph::edge_ideal(&g), s)?, "RJ")?
                    }
                    Source::Pc => io::monomial_ideal_to_macaulay2(&jets::principal_component_ideal(&g, s), "PC")?,
                })
            })?;
        }
    }
    Ok(None)
}

fn verify_command(ctx: &mut Ctx, suite: &str, corpus: &str) -> Outcome {
    let suite: Suite = suite.parse()?;
    let instances = Corpus::parse(corpus)?.instances(ctx.global.seed)?;
    let orders = ctx.orders(&[0, 1, 2]);
    let reports = verify::run_suite(suite, &instances, &orders, &ctx.limits);
    let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
    let (pass, fail, skipped, na) = (
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped),
        count(Status::NotApplicable),
    );
    ctx.out = if ctx.structured() {
        format!("{}\n", serde_json::to_string_pretty(&reports).unwrap())
    } else {
        let mut s = format!("# {suite}: {}\n", suite.description());
        for r in &reports {
            s.push_str(&format!("{r}\n"));
        }
        s.push_str(&format!("{suite}: {pass} pass, {fail} fail, {skipped} skipped, {na} n/a\n"));
        s
    };
    Ok(Some(if fail > 0 {
        Status::Fail
    } else if skipped > 0 {
        Status::Skipped
    } else {
        Status::Pass
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match &cli.global.limits {
        None => Ok(Limits::default()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("{path}: {e}"))
            .and_then(|t| Limits::from_json(&t).map_err(|e| e.to_string())),
    };
    let limits = match limits {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut ctx = Ctx {
        global: cli.global,
        limits,
        out: String::new(),
    };
    let result = run(&mut ctx, &cli.command);
    print!("{}", ctx.out);
    match result {
        Ok(Some(Status::Fail)) => ExitCode::from(1),
        Ok(Some(Status::Skipped)) => ExitCode::from(3),
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
