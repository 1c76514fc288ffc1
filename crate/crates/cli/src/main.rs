use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hamred_core::gadgets::gadget_data;
use hamred_core::generate::{antiprism, k4, medial, octahedron, prism, truncate};
use hamred_core::reductions::{replay_trace, run_pipeline, Target};
use hamred_core::solvers::{three_color, two_factor, vertex_connectivity};
use hamred_core::verify::{
    check_coloring, check_equiv_small, check_ham_cycle, check_plane, check_two_factor,
};
use hamred_core::{
    builtin_contract, builtin_gadget, digest, parse_instance, serialize_instance, verify_gadget,
    Budget, GadgetName, Instance, ReductionTrace,
};

#[derive(Parser)]
#[command(name = "hamred", version, about = "3-colouring reductions onto Hamiltonian graph classes")]
struct Cli {
    /// Input instance (default: stdin)
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Largest graph handed to the colouring and connectivity oracles
    #[arg(long, global = true, env = "HAMRED_BUDGET")]
    budget: Option<usize>,
    /// Largest graph a construction may build
    #[arg(long, global = true)]
    max_vertices: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a 3-colouring; exit 1 if there is none
    Solve3col,
    /// Attach a 2-factor to a connected 4-regular graph
    Twofactor,
    /// Run a reduction pipeline
    Reduce(ReduceArgs),
    /// Check a claim about the input
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Built-in gadgets
    Gadget {
        #[command(subcommand)]
        what: GadgetCmd,
    },
    /// Generate instances
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Reduction traces
    Trace {
        #[command(subcommand)]
        what: TraceCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "4reg-planar-ham")]
    FourRegPlanarHam,
    #[value(name = "even-4reg-planar-ham")]
    EvenFourRegPlanarHam,
    #[value(name = "5reg-planar-ham")]
    FiveRegPlanarHam,
    #[value(name = "preg-ham")]
    PRegHam,
    #[value(name = "ordered")]
    Ordered,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    to: TargetArg,
    /// Target degree (preg-ham) or order (ordered)
    #[arg(long)]
    p: Option<usize>,
    /// Write the reduction trace (JSON) here
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Regular of degree p, or of any degree
    Regular {
        #[arg(long)]
        p: Option<usize>,
    },
    /// The rotation system passes the Euler face check
    Plane,
    /// The h line is a Hamiltonian cycle
    Ham,
    /// The c lines form a proper 3-colouring
    Coloring,
    /// The q block is a 2-factor
    Twofactor,
    /// Vertex connectivity, optionally against a lower bound
    Connectivity {
        #[arg(long)]
        k: Option<usize>,
    },
    /// Both graphs are 3-colourable or neither is
    Equiv {
        #[arg(long, value_name = "FILE")]
        other: PathBuf,
    },
}

#[derive(Subcommand)]
enum GadgetCmd {
    List,
    /// Check the gadget contracts (all gadgets if no name is given)
    Verify { name: Option<GadgetName> },
    /// Print a gadget in the instance format
    Dump { name: GadgetName },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Medial graph of the cubic plane input
    Medial,
    /// Truncation of the cubic plane input
    Truncate,
    Prism {
        #[arg(long)]
        k: usize,
    },
    Antiprism {
        #[arg(long)]
        k: usize,
    },
    K4,
    Octahedron,
}

#[derive(Subcommand)]
enum TraceCmd {
    /// Re-run a trace on the input and check every digest
    Replay {
        #[arg(long, value_name = "FILE")]
        trace: PathBuf,
    },
}

/// Verdict of a run: 0 yes, 1 no.
struct Verdict(bool);

struct Io {
    input: Option<PathBuf>,
    out: Option<PathBuf>,
}

impl Io {
    fn read_text(&self) -> anyhow::Result<String> {
        match &self.input {
            Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).context("reading stdin")?;
                Ok(s)
            }
        }
    }

    fn read(&self) -> anyhow::Result<Instance> {
        Ok(parse_instance(&self.read_text()?)?)
    }

    fn write(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }

    fn report(&self, ok: bool, line: String) -> anyhow::Result<Verdict> {
        self.write(&format!("{line}\n"))?;
        Ok(Verdict(ok))
    }
}

fn yes_no(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn verify(io: &Io, what: &VerifyCmd, budget: &Budget) -> anyhow::Result<Verdict> {
    let inst = io.read()?;
    let g = inst.graph();
    match what {
        VerifyCmd::Regular { p } => {
            let d = g.regular_degree();
            let ok = match p {
                Some(p) => d == Some(*p),
                None => d.is_some(),
            };
            let detail = d.map_or("irregular".to_string(), |d| format!("degree {d}"));
            io.report(ok, format!("regular: {} ({detail})", yes_no(ok)))
        }
        VerifyCmd::Plane => {
            let ok = check_plane(inst.require_plane()?)?;
            io.report(ok, format!("plane: {}", yes_no(ok)))
        }
        VerifyCmd::Ham => {
            let ok = check_ham_cycle(g, inst.require_cycle()?);
            io.report(ok, format!("hamiltonian cycle: {}", yes_no(ok)))
        }
        VerifyCmd::Coloring => {
            let f = inst.coloring()?.ok_or_else(|| anyhow!("instance has no colour lines"))?;
            let ok = check_coloring(g, &f)?;
            io.report(ok, format!("3-colouring: {}", yes_no(ok)))
        }
        VerifyCmd::Twofactor => {
            let tf = inst
                .two_factor
                .as_ref()
                .ok_or_else(|| anyhow!("instance has no 2-factor block"))?;
            let ok = check_two_factor(g, tf);
            io.report(ok, format!("2-factor: {} ({} cycles)", yes_no(ok), tf.len()))
        }
        VerifyCmd::Connectivity { k } => {
            budget.check_oracle(g.n())?;
            let kappa = vertex_connectivity(g);
            let ok = k.is_none_or(|k| kappa >= k);
            io.report(ok, format!("connectivity: {kappa}"))
        }
        VerifyCmd::Equiv { other } => {
            let text = fs::read_to_string(other)
                .with_context(|| format!("reading {}", other.display()))?;
            let h = parse_instance(&text)?;
            let ok = check_equiv_small(g, h.graph(), budget)?;
            io.report(ok, format!("colourability equivalent: {}", yes_no(ok)))
        }
    }
}

fn gadget(io: &Io, what: &GadgetCmd, budget: &Budget) -> anyhow::Result<Verdict> {
    match what {
        GadgetCmd::List => {
            let mut s = String::new();
            for name in GadgetName::ALL {
                let g = builtin_gadget(name);
                let labels: Vec<&str> = g.labels.keys().map(String::as_str).collect();
                s.push_str(&format!(
                    "{name}\t{} vertices\t{} edges\t{}\n",
                    g.plane.n(),
                    g.plane.m(),
                    labels.join(" ")
                ));
            }
            io.write(&s)?;
            Ok(Verdict(true))
        }
        GadgetCmd::Verify { name } => {
            let names = match name {
                Some(n) => vec![*n],
                None => GadgetName::ALL.to_vec(),
            };
            let mut all = true;
            let mut refused = false;
            let mut s = String::new();
            for n in names {
                let report = verify_gadget(&builtin_gadget(n), &builtin_contract(n), budget)?;
                all &= report.passed();
                refused |= report.refused();
                s.push_str(&format!("{report}\n"));
            }
            io.write(&s)?;
            if refused && !all {
                bail!(hamred_core::Error::BudgetExceeded {
                    what: "gadget verification",
                    size: budget.enumeration as u128 + 1,
                    cap: budget.enumeration as u128,
                });
            }
            Ok(Verdict(all))
        }
        GadgetCmd::Dump { name } => {
            io.write(gadget_data(*name))?;
            Ok(Verdict(true))
        }
    }
}

fn generate(io: &Io, what: &GenCmd) -> anyhow::Result<Verdict> {
    let pg = match what {
        GenCmd::Medial => medial(io.read()?.require_plane()?)?,
        GenCmd::Truncate => truncate(io.read()?.require_plane()?)?,
        GenCmd::Prism { k } => prism(*k)?,
        GenCmd::Antiprism { k } => antiprism(*k)?,
        GenCmd::K4 => k4(),
        GenCmd::Octahedron => octahedron(),
    };
    io.write(&serialize_instance(&Instance::from_plane(pg)))?;
    Ok(Verdict(true))
}

fn run(cli: &Cli) -> anyhow::Result<Verdict> {
    let mut budget = Budget::default();
    if let Some(b) = cli.budget {
        budget.oracle = b;
    }
    if let Some(m) = cli.max_vertices {
        budget.build = m;
    }
    let io = Io {
        input: cli.input.clone(),
        out: cli.out.clone(),
    };
    match &cli.command {
        Command::Solve3col => {
            let inst = io.read()?;
            budget.check_oracle(inst.graph().n())?;
            match three_color(inst.graph()) {
                Some(f) => {
                    io.write(&serialize_instance(&inst.with_coloring(&f)))?;
                    Ok(Verdict(true))
                }
                None => io.report(false, "# not 3-colourable".into()),
            }
        }
        Command::Twofactor => {
            let mut inst = io.read()?;
            inst.two_factor = Some(two_factor(inst.graph())?);
            io.write(&serialize_instance(&inst))?;
            Ok(Verdict(true))
        }
        Command::Reduce(args) => {
            let inst = io.read()?;
            let target = match args.to {
                TargetArg::FourRegPlanarHam => Target::FourRegPlanarHam,
                TargetArg::EvenFourRegPlanarHam => Target::EvenFourRegPlanarHam,
                TargetArg::FiveRegPlanarHam => Target::FiveRegPlanarHam,
                TargetArg::PRegHam => Target::parse("preg-ham", args.p)?,
                TargetArg::Ordered => Target::parse("ordered", args.p)?,
            };
            let (out, trace) = run_pipeline(&inst, target, &budget)?;
            if let Some(path) = &args.trace {
                fs::write(path, trace.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            for note in &trace.notes {
                eprintln!("# {note}");
            }
            io.write(&serialize_instance(&out))?;
            Ok(Verdict(true))
        }
        Command::Verify { what } => verify(&io, what, &budget),
        Command::Gadget { what } => gadget(&io, what, &budget),
        Command::Gen { what } => generate(&io, what),
        Command::Trace {
            what: TraceCmd::Replay { trace },
        } => {
            let text = fs::read_to_string(trace)
                .with_context(|| format!("reading {}", trace.display()))?;
            let trace = ReductionTrace::from_json(&text)?;
            let inst = io.read()?;
            let out = replay_trace(&inst, &trace, &budget)?;
            eprintln!("# replayed {} steps, output digest {}", trace.steps.len(), digest(&out));
            io.write(&serialize_instance(&out))?;
            Ok(Verdict(true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict(true)) => ExitCode::SUCCESS,
        Ok(Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e
                .downcast_ref::<hamred_core::Error>()
                .map_or(1, hamred_core::Error::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
