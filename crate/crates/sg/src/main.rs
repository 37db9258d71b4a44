use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sg::bound10::{
    control_plain_vertex_pin, control_swapped_neighbourhoods, ten_colouring, verify_extension_lemmas,
};
use sg::colouring::{chromatic_number, validate_colouring, Colouring};
use sg::formats::{parse_signed_graph, serialize_signed_graph};
use sg::harness::{run_survey, to_jsonl, SurveyOptions};
use sg::hom::{count_homomorphisms, find_homomorphism, PinSet};
use sg::targets::{catalog, derive_k4s_obstructions, verify_sp9_adjacency};

#[derive(Parser)]
#[command(name = "sg", about = "Homomorphisms and colourings of 2-edge-coloured graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one of the fixed target graphs in .sg format
    Targets {
        #[command(subcommand)]
        action: TargetsAction,
    },
    /// Decide a sign-preserving homomorphism G -> H
    Hom {
        /// Source graph (.sg file)
        g: PathBuf,
        /// Target graph (.sg file)
        h: PathBuf,
        /// Pin a source vertex to a target vertex, e.g. --pin 3=7
        #[arg(long = "pin", value_name = "u=a")]
        pins: Vec<String>,
        /// Count all homomorphisms instead of finding one
        #[arg(long)]
        count: bool,
    },
    /// Exact chromatic number, or validate a supplied labelling
    Chi {
        /// Graph (.sg file)
        g: PathBuf,
        /// Validate this labelling (JSON {"k": .., "labels": [..]}) instead
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Constructive 10-colouring of a connected cubic graph
    Bound10 {
        /// Graph (.sg file)
        g: PathBuf,
        /// Also emit the branch trace as JSON
        #[arg(long)]
        trace: bool,
    },
    /// Sweep all connected cubic instances and report chi statistics
    Survey {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        /// Sweep all signatures instead of orbit representatives
        #[arg(long = "no-reduce")]
        no_reduce: bool,
        #[arg(long = "exact-chi", default_value_t = true)]
        exact_chi: bool,
        /// Also check membership in the 11-vertex target
        #[arg(long)]
        sp9star: bool,
        /// Write the line-delimited JSON report here (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the lemma suites; exits nonzero on any failure
    Verify,
}

#[derive(Subcommand)]
enum TargetsAction {
    Dump {
        #[arg(long, value_parser = ["sp9", "sp9dagger", "sp9star", "k4s+", "k4s-"])]
        which: String,
    },
}

fn load(path: &PathBuf) -> Result<sg::SignedGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_signed_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Targets { action: TargetsAction::Dump { which } } => {
            let cat = catalog();
            let (g, header) = match which.as_str() {
                "sp9" => (&cat.sp9, "# SP_9: complete on 9 vertices, positive part = 3x3 rook's graph".to_string()),
                "sp9dagger" => (
                    &cat.sp9_dagger,
                    format!(
                        "# SP_9 plus z = {}; positive attachments {:?}, negative {:?}",
                        cat.z, cat.nplus, cat.nminus
                    ),
                ),
                "sp9star" => (
                    &cat.sp9_star,
                    format!(
                        "# SP_9 plus 0' = {} and 1' = {}; base roles (0, 1, excluded) = {:?}",
                        cat.zero_prime, cat.one_prime, cat.star_base
                    ),
                ),
                "k4s+" => (
                    &cat.k4s_plus,
                    "# derived canonical obstruction (mostly positive); roles x1..x5 = vertices 0..4"
                        .to_string(),
                ),
                "k4s-" => (
                    &cat.k4s_minus,
                    "# derived canonical obstruction (mostly negative); roles x1..x5 = vertices 0..4"
                        .to_string(),
                ),
                _ => unreachable!(),
            };
            println!("{header}");
            print!("{}", serialize_signed_graph(g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { g, h, pins, count } => {
            let g = load(&g)?;
            let h = load(&h)?;
            let mut pairs = Vec::new();
            for p in &pins {
                let (a, b) = p
                    .split_once('=')
                    .ok_or_else(|| format!("bad pin `{p}`, expected u=a"))?;
                let a: usize = a.trim().parse().map_err(|_| format!("bad pin `{p}`"))?;
                let b: usize = b.trim().parse().map_err(|_| format!("bad pin `{p}`"))?;
                pairs.push((a, b));
            }
            let pins = PinSet::from_pairs(&pairs).map_err(|e| e.to_string())?;
            if count {
                println!("{}", count_homomorphisms(&g, &h, &pins));
                return Ok(ExitCode::SUCCESS);
            }
            match find_homomorphism(&g, &h, &pins) {
                Some(m) => {
                    let images: Vec<String> = m.images.iter().map(|i| i.to_string()).collect();
                    println!("found {}", images.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not found");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Chi { g, check } => {
            let g = load(&g)?;
            if let Some(path) = check {
                let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                let c: Colouring =
                    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                if validate_colouring(&g, &c) {
                    println!("valid");
                    Ok(ExitCode::SUCCESS)
                } else {
                    println!("invalid");
                    Ok(ExitCode::from(1))
                }
            } else {
                let (chi, witness) = chromatic_number(&g);
                let labels: Vec<String> = witness.labels.iter().map(|l| l.to_string()).collect();
                println!("chi {chi}");
                println!("labels {}", labels.join(" "));
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Bound10 { g, trace } => {
            let g = load(&g)?;
            match ten_colouring(&g) {
                Ok((c, t)) => {
                    let labels: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
                    println!("colours {}", labels.join(" "));
                    if trace {
                        println!("{}", serde_json::to_string(&t).unwrap());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ sg::bound10::Bound10Error::Falsification(_)) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Survey { max_n, no_reduce, exact_chi, sp9star, out } => {
            let opts = SurveyOptions {
                max_n,
                reduce: !no_reduce,
                exact_chi,
                sp9star,
                ..Default::default()
            };
            let result = run_survey(&opts).map_err(|e| e.to_string())?;
            let text = to_jsonl(&result);
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            if result.summary.falsifications > 0 {
                eprintln!("falsifications: {}", result.summary.falsifications);
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let cat = catalog();
            let mut ok = true;
            let rep = verify_sp9_adjacency(&cat.sp9).map_err(|e| e.to_string())?;
            println!("lemma: sp9 adjacency profile ........ {}", pass(rep.passed()));
            ok &= rep.passed();

            let derived = derive_k4s_obstructions(&cat.sp9).is_ok();
            println!("lemma: obstruction derivation ....... {}", pass(derived));
            ok &= derived;

            let ext = verify_extension_lemmas(cat);
            let passing = ext.cases.iter().filter(|c| c.ok).count();
            println!(
                "lemma: extension (36 pinned cases) .. {} ({passing}/{})",
                pass(ext.all_pass()),
                ext.cases.len()
            );
            ok &= ext.all_pass();

            let c1 = !control_swapped_neighbourhoods(cat).plus_cases_all_pass();
            println!("control: swapped z neighbourhoods ... {}", pass(c1));
            ok &= c1;
            let c2 = !control_plain_vertex_pin(cat).plus_cases_all_pass();
            println!("control: x5 pinned off z ............ {}", pass(c2));
            ok &= c2;

            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
