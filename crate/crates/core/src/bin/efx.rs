use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use efx_online::adversaries::{build_adversary, AdversarySpec, ConstructionId};
use efx_online::bounds::{eval_bound, grid, invert_bound, sweep_curves, BoundId, BoundParams};
use efx_online::harness::{
    gen_random_instance, perturb, run_duel, run_instance, verify_claims, AllocatorChoice, PerturbMode, Source, Suite,
};
use efx_online::offline::{brute_force_best_factor, minimax_online_factor};
use efx_online::rational::{format_rational, parse_rational, to_decimal, Rational};
use efx_online::valuation::{Instance, InstanceFile};
use efx_online::{Error, Result};

#[derive(Parser)]
#[command(name = "efx", version, about = "Online EFX allocation with predictions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an allocator on an instance file and print the transcript.
    Run {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        allocator: String,
        #[arg(long, value_parser = parse_rational)]
        a: Option<Rational>,
        /// Fail unless the EFX factor reaches this value.
        #[arg(long, value_parser = parse_rational)]
        min_factor: Option<Rational>,
    },
    /// Play an allocator against a lower-bound construction.
    Duel {
        #[command(flatten)]
        adversary: AdversaryArgs,
        /// Defaults to the construction's natural target.
        #[arg(long)]
        allocator: Option<String>,
        /// Fail unless the allocator ends strictly below `a`.
        #[arg(long)]
        expect_defeat: bool,
    },
    /// Best factor over all allocations of an instance, or the minimax value of an adversary.
    Oracle {
        #[arg(long, conflicts_with = "construction")]
        instance: Option<String>,
        #[command(flatten)]
        adversary: OptAdversaryArgs,
    },
    /// Evaluate, invert or sweep the error bounds.
    Bounds {
        #[command(subcommand)]
        action: BoundsAction,
    },
    /// Generate a random instance; truths equal predictions unless `--d` is given.
    Gen {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "goods", short = 't')]
        t: usize,
        #[arg(long)]
        identical: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_rational)]
        d: Option<Rational>,
        #[arg(long, default_value = "shift")]
        mode: PerturbMode,
    },
    /// Replace an instance's truths by a perturbation of its predictions.
    Perturb {
        #[arg(long)]
        instance: String,
        /// One distance for all agents, or a comma-separated list.
        #[arg(long)]
        d: String,
        #[arg(long, default_value = "shift")]
        mode: PerturbMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run claim-verification suites (all when none are named).
    Verify {
        suites: Vec<Suite>,
    },
}

#[derive(Args)]
struct AdversaryArgs {
    /// Construction number 1-9 or name.
    #[arg(long)]
    construction: ConstructionId,
    #[arg(long, value_parser = parse_rational)]
    a: Rational,
    #[arg(long)]
    n: Option<usize>,
    /// Free parameter override such as `eps=11/100`.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Args)]
struct OptAdversaryArgs {
    #[arg(long)]
    construction: Option<ConstructionId>,
    #[arg(long, value_parser = parse_rational, requires = "construction")]
    a: Option<Rational>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum BoundsAction {
    /// `D(a)` for one bound.
    Eval {
        #[arg(long)]
        bound: BoundId,
        #[arg(long, value_parser = parse_rational)]
        a: Rational,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Largest `a` with `D(a) >= d`.
    Invert {
        #[arg(long)]
        bound: BoundId,
        #[arg(long, value_parser = parse_rational)]
        d: Rational,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// CSV of several bounds over a grid of `a`.
    Sweep {
        #[arg(long, value_delimiter = ',', default_value = "follower-sufficient,main-sufficient,id-2-lb")]
        bounds: Vec<BoundId>,
        #[arg(long, value_parser = parse_rational, default_value = "0.62")]
        start: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        stop: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "0.03")]
        step: Rational,
        /// Decimal places; exact `p/q` when absent.
        #[arg(long)]
        places: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    a_tilde: Rational,
}

impl ParamArgs {
    fn bound_params(&self) -> BoundParams {
        BoundParams { n: self.n, a_tilde: self.a_tilde.clone() }
    }
}

fn spec_from(id: ConstructionId, a: Rational, n: Option<usize>, params: &[String]) -> Result<AdversarySpec> {
    let mut spec = AdversarySpec::new(id, a);
    spec.n = n;
    for kv in params {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("parameter {kv:?} is not name=value")))?;
        spec = spec.with_param(k, &parse_rational(v)?);
    }
    Ok(spec)
}

fn read_instance(path: &str) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| Error::Json(format!("{path}: {e}")))?;
    serde_json::from_str::<InstanceFile>(&text)?.into_instance()
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn execute(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Run { instance, allocator, a, min_factor } => {
            let inst = read_instance(&instance)?;
            let mut choice = AllocatorChoice::new(&allocator);
            choice.a = a;
            let mut tr = run_instance(&choice, &inst)?;
            tr.source = Source::Instance { path: Some(instance) };
            print_json(&tr)?;
            Ok(min_factor.is_none_or(|m| tr.efx_factor() >= &m))
        }
        Command::Duel { adversary: args, allocator, expect_defeat } => {
            let spec = spec_from(args.construction, args.a, args.n, &args.params)?;
            let adv = build_adversary(&spec)?;
            let name = allocator.unwrap_or_else(|| spec.id.natural_target().to_string());
            let tr = run_duel(&AllocatorChoice::new(&name), &adv)?;
            print_json(&tr)?;
            let defeated = tr.efx_factor() < adv.a();
            Ok(tr.error_consistent != Some(false) && (!expect_defeat || defeated))
        }
        Command::Oracle { instance, adversary } => {
            if let Some(path) = instance {
                let inst = read_instance(&path)?;
                let (factor, witness) = brute_force_best_factor(&inst.truths)?;
                print_json(&json!({ "factor": format_rational(&factor), "witness": witness.bundles() }))?;
                return Ok(true);
            }
            let id = adversary
                .construction
                .ok_or_else(|| Error::Domain("oracle needs --instance or --construction".into()))?;
            let a = adversary.a.ok_or_else(|| Error::Domain("--construction needs --a".into()))?;
            let spec = spec_from(id, a, adversary.n, &adversary.params)?;
            let adv = build_adversary(&spec)?;
            let r = minimax_online_factor(&adv)?;
            print_json(&json!({
                "factor": format_rational(&r.factor),
                "witness": r.witness.bundles(),
                "horizon": adv.horizon(),
                "nodes": r.nodes,
                "unbeatable": r.factor < *adv.a(),
            }))?;
            Ok(true)
        }
        Command::Bounds { action } => match action {
            BoundsAction::Eval { bound, a, params } => {
                let d = eval_bound(bound, &a, &params.bound_params())?;
                print_json(&json!({ "bound": bound.name(), "a": format_rational(&a), "d": format_rational(&d), "decimal": to_decimal(&d, 6) }))?;
                Ok(true)
            }
            BoundsAction::Invert { bound, d, params } => {
                let a = invert_bound(bound, &d, &params.bound_params())?;
                print_json(&json!({ "bound": bound.name(), "d": format_rational(&d), "a": format_rational(&a), "decimal": to_decimal(&a, 6) }))?;
                Ok(true)
            }
            BoundsAction::Sweep { bounds, start, stop, step, places, params } => {
                let points = grid(&start, &stop, &step)?;
                let table = sweep_curves(&bounds, &points, &params.bound_params())?;
                print!("{}", table.to_csv(places));
                Ok(true)
            }
        },
        Command::Gen { n, t, identical, seed, d, mode } => {
            let p = gen_random_instance(n, t, identical, seed)?;
            let v = match d {
                Some(d) => perturb(&p, &vec![d; n], mode, seed)?,
                None => p.clone(),
            };
            print_json(&Instance::with_realized_accuracy(p, v)?.to_file())?;
            Ok(true)
        }
        Command::Perturb { instance, d, mode, seed } => {
            let inst = read_instance(&instance)?;
            let ds = d.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
            let ds = if ds.len() == 1 { vec![ds[0].clone(); inst.n()] } else { ds };
            let v = perturb(&inst.predictions, &ds, mode, seed)?;
            print_json(&Instance::with_realized_accuracy(inst.predictions, v)?.to_file())?;
            Ok(true)
        }
        Command::Verify { suites } => {
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
            let mut all = true;
            let mut reports = Vec::new();
            for s in suites {
                let r = verify_claims(s);
                eprintln!("{} {} ({} cases)", if r.passed { "PASS" } else { "FAIL" }, s, r.cases);
                all &= r.passed;
                reports.push(r);
            }
            print_json(&reports)?;
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
