use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use wbo_core::balance::{is_ell_bounded, BalanceChecker};
use wbo_core::dot::to_dot;
use wbo_core::oracle::{min_vertex_cover, perturb_by_eulerian, random_cubic_multigraph};
use wbo_core::reduction::{
    build_ubbbo, build_ubwbo, convenientize, cover_to_orientation, decide_ubbbo, decide_ubwbo_with_limit,
    is_convenient, lift_orientation, orientation_to_cover, restrict_orientation, CvcInstance, ReductionArtifact,
    Variant, DEFAULT_MAX_N,
};
use wbo_core::{Error, Orientation, VertexSet};

/// Cubic vertex cover to bounded balanced orientation: build, transform and
/// check reduction instances.
#[derive(Parser)]
#[command(name = "wbo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the orientation instance for a cubic vertex cover instance.
    Reduce {
        input: PathBuf,
        /// Build the best-balanced variant (pendant vertices on the hub).
        #[arg(long)]
        best_balanced: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check properties of an orientation against an artifact.
    Check {
        orientation: PathBuf,
        artifact: PathBuf,
        #[arg(long)]
        well_balanced: bool,
        #[arg(long)]
        best_balanced: bool,
        #[arg(long)]
        bounded: bool,
        #[arg(long)]
        convenient: bool,
        /// The properties of the artifact's problem: well- or best-balanced,
        /// and bounded.
        #[arg(long)]
        all: bool,
    },
    /// Orientation of a well-balanced artifact from a vertex cover.
    Forward {
        artifact: PathBuf,
        cover: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Vertex cover from a convenient bounded well-balanced orientation.
    Extract {
        artifact: PathBuf,
        orientation: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Make a bounded well-balanced orientation convenient.
    Convenientize {
        artifact: PathBuf,
        orientation: PathBuf,
        #[command(flatten)]
        out: Output,
        /// Write the intermediate sets and circuits as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Extend an orientation of G to the best-balanced artifact's graph.
    Lift {
        artifact: PathBuf,
        orientation: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Restrict an orientation of the best-balanced artifact's graph to G.
    Restrict {
        artifact: PathBuf,
        orientation: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Decide an instance; exit 0 for yes, 1 for no.
    Decide {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Search)]
        via: Via,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Search the best-balanced variant instead.
        #[arg(long)]
        best_balanced: bool,
        /// Write the witness orientation found by the search.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Random connected cubic multigraph instance in text form.
    Gen {
        n: usize,
        seed: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Graphviz rendering of an artifact.
    Dot {
        artifact: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Reverse a random directed circuit of an orientation.
    Perturb {
        orientation: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph reference for orientation files that do not inline it.
        #[arg(long)]
        artifact: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> anyhow::Result<()> {
        self.write(&(serde_json::to_string(value)? + "\n"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Search,
    Cover,
}

#[derive(Serialize, Deserialize)]
struct CoverFile {
    cover: VertexSet,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_instance(path: &Path) -> anyhow::Result<CvcInstance> {
    Ok(CvcInstance::parse(&read(path)?)?)
}

fn read_artifact(path: &Path) -> anyhow::Result<ReductionArtifact> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing artifact {}", path.display()))
}

/// Orientation files carry the graph inline, or a string in its place when
/// the graph is the artifact's.
fn read_orientation(path: &Path, art: Option<&ReductionArtifact>) -> anyhow::Result<Orientation> {
    let mut doc: Value =
        serde_json::from_str(&read(path)?).with_context(|| format!("parsing orientation {}", path.display()))?;
    if doc.get("graph").is_some_and(Value::is_string) {
        let art = art.ok_or_else(|| anyhow!("{}: graph given by reference, no artifact", path.display()))?;
        doc["graph"] = serde_json::to_value(&**art.graph())?;
    }
    serde_json::from_value(doc).with_context(|| format!("parsing orientation {}", path.display()))
}

fn require_graph(o: &Orientation, art: &ReductionArtifact) -> anyhow::Result<()> {
    if **o.base() != **art.graph() {
        return Err(Error::GraphMismatch.into());
    }
    Ok(o.check_total()?)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn decision(yes: bool) -> ExitCode {
    println!("{}", if yes { "YES" } else { "NO" });
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(
    o_path: &Path,
    a_path: &Path,
    mut well_balanced: bool,
    mut best_balanced: bool,
    mut bounded: bool,
    convenient: bool,
    all: bool,
) -> anyhow::Result<ExitCode> {
    let art = read_artifact(a_path)?;
    let o = read_orientation(o_path, Some(&art))?;
    require_graph(&o, &art)?;
    if all || !(well_balanced || best_balanced || bounded || convenient) {
        match art.variant() {
            Variant::WellBalanced => well_balanced = true,
            Variant::BestBalanced => best_balanced = true,
        }
        bounded = true;
    }
    let checker = BalanceChecker::new(art.graph().clone());
    let mut results = Vec::new();
    if well_balanced {
        results.push(("well-balanced", checker.is_well_balanced(&o)?));
    }
    if best_balanced {
        results.push(("best-balanced", checker.is_best_balanced(&o)?));
    }
    if bounded {
        results.push(("bounded", is_ell_bounded(&o, art.ell())?));
    }
    if convenient {
        results.push(("convenient", is_convenient(&o, &art)?));
    }
    for (name, ok) in &results {
        println!("{name}: {}", verdict(*ok));
    }
    Ok(if results.iter().all(|r| r.1) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Reduce {
            input,
            best_balanced,
            out,
        } => {
            let inst = read_instance(&input)?;
            let art = if best_balanced {
                build_ubbbo(&inst)?
            } else {
                build_ubwbo(&inst)?
            };
            out.json(&art)?;
            if out.out.is_some() {
                println!("{}", art.summary());
            } else {
                eprintln!("{}", art.summary());
            }
        }
        Command::Check {
            orientation,
            artifact,
            well_balanced,
            best_balanced,
            bounded,
            convenient,
            all,
        } => {
            return check(
                &orientation,
                &artifact,
                well_balanced,
                best_balanced,
                bounded,
                convenient,
                all,
            )
        }
        Command::Forward { artifact, cover, out } => {
            let art = read_artifact(&artifact)?;
            let cover: CoverFile =
                serde_json::from_str(&read(&cover)?).with_context(|| format!("parsing cover {}", cover.display()))?;
            out.json(&cover_to_orientation(&art, &cover.cover)?)?;
        }
        Command::Extract {
            artifact,
            orientation,
            out,
        } => {
            let art = read_artifact(&artifact)?;
            let o = read_orientation(&orientation, Some(&art))?;
            out.json(&CoverFile {
                cover: orientation_to_cover(&o, &art)?,
            })?;
        }
        Command::Convenientize {
            artifact,
            orientation,
            out,
            trace,
        } => {
            let art = read_artifact(&artifact)?;
            let o = read_orientation(&orientation, Some(&art))?;
            let (c, t) = convenientize(&o, &art)?;
            out.json(&c)?;
            if let Some(p) = trace {
                fs::write(&p, serde_json::to_string(&t)? + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
        }
        Command::Lift {
            artifact,
            orientation,
            out,
        } => {
            let art = read_artifact(&artifact)?;
            let o = read_orientation(&orientation, None)?;
            out.json(&lift_orientation(&o, &art)?)?;
        }
        Command::Restrict {
            artifact,
            orientation,
            out,
        } => {
            let art = read_artifact(&artifact)?;
            let o = read_orientation(&orientation, Some(&art))?;
            out.json(&restrict_orientation(&o, &art)?)?;
        }
        Command::Decide {
            input,
            via,
            max_n,
            best_balanced,
            witness,
        } => {
            let inst = read_instance(&input)?;
            let yes = match via {
                Via::Cover => {
                    if witness.is_some() {
                        bail!("--witness needs --via search");
                    }
                    min_vertex_cover(inst.graph())?.0 <= inst.k()
                }
                Via::Search => {
                    let d = if best_balanced {
                        decide_ubbbo(&inst, max_n)?
                    } else {
                        decide_ubwbo_with_limit(&inst, max_n)?
                    };
                    if let (Some(p), Some(w)) = (witness, &d.witness) {
                        fs::write(&p, serde_json::to_string(w)? + "\n")
                            .with_context(|| format!("writing {}", p.display()))?;
                    }
                    d.positive
                }
            };
            return Ok(decision(yes));
        }
        Command::Gen { n, seed, k, json, out } => {
            let inst = CvcInstance::new(random_cubic_multigraph(n, seed)?, k)?;
            if json {
                out.json(&inst)?;
            } else {
                out.write(&inst.to_text()?)?;
            }
        }
        Command::Dot { artifact, out } => out.write(&to_dot(&read_artifact(&artifact)?))?,
        Command::Perturb {
            orientation,
            seed,
            artifact,
            out,
        } => {
            let art = artifact.as_deref().map(read_artifact).transpose()?;
            let o = read_orientation(&orientation, art.as_ref())?;
            let p = perturb_by_eulerian(&o, seed)?;
            out.json(&p)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Internal(_))));
            ExitCode::from(if internal { 3 } else { 2 })
        }
    }
}
