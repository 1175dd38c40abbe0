use std::fs::File;
use std::io::{BufReader, Write};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use domset_algos::{
    alg1, alg2, carowei_ds, carowei_tds, mod1, mod2, AlgoError, RngPolicy, Scope,
};
use domset_ext::{is_k_dominating, k_dominating, set_cover, ExtError, SetCoverInstance};
use domset_graph::io::{load_edge_list, load_metis, LoadError, LoadedGraph};
use domset_graph::oracle::{brute_force_mds, brute_force_mtds, brute_force_mvc, OracleError};
use domset_graph::{is_dominating, is_total_dominating, Graph, LoopMultigraph, VertexSet};
use domset_sim::{alg1_program, carowei_program, run_sync_with, NodeProgram, SimConfig};

use crate::args::*;
use crate::record::{BenchRow, RunRecord, BENCH_CSV_HEADER, RECORD_CSV_HEADER};

/// Failure with the process exit code it maps to: 1 unreadable input,
/// 2 failed verification, 3 infeasible or over an enforced size cap.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::new(1, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(1, e.to_string())
    }
}

impl From<AlgoError> for CliError {
    fn from(e: AlgoError) -> Self {
        let code = match e {
            AlgoError::IsolatedVertex { .. } => 3,
            AlgoError::Cover(_) => 3,
            _ => 1,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ExtError> for CliError {
    fn from(e: ExtError) -> Self {
        let code = match &e {
            ExtError::UncoveredElement { .. }
            | ExtError::EmptyConstraint { .. }
            | ExtError::PowerGraphTooDense { .. }
            | ExtError::Cover(_) => 3,
            ExtError::Algo(inner) => return CliError::from_inner_algo(inner, e.to_string()),
            _ => 1,
        };
        CliError::new(code, e.to_string())
    }
}

impl CliError {
    fn from_inner_algo(inner: &AlgoError, message: String) -> CliError {
        let code = match inner {
            AlgoError::IsolatedVertex { .. } | AlgoError::Cover(_) => 3,
            _ => 1,
        };
        CliError::new(code, message)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::new(3, e.to_string())
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_graph(path: &Path, format: InputFormat) -> Result<LoadedGraph, CliError> {
    let reader = BufReader::new(File::open(path)?);
    let loaded = match format {
        InputFormat::Edgelist => load_edge_list(reader)?,
        InputFormat::Metis => load_metis(reader)?,
    };
    for warning in &loaded.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(loaded)
}

/// A solved instance before it is shaped into a record.
struct Solved {
    set: VertexSet,
    verified: bool,
    wall_ms: f64,
}

fn run_graph_algo(
    g: &Graph,
    algo: Algo,
    m: usize,
    seed: u64,
    vc: VcBackend,
    k: usize,
    check: bool,
) -> Result<Solved, CliError> {
    let policy = RngPolicy::new(seed);
    let solver = vc.solver();
    let start = Instant::now();
    let set = match algo {
        Algo::Alg1 => alg1(g, m, &policy, Scope::Closed)?.0,
        Algo::Alg2 => alg2(g, m, &policy, Scope::Closed, solver)?,
        Algo::Mod1 => mod1(g, m, &policy, solver)?,
        Algo::Mod2 => mod2(g, m, &policy, solver)?,
        Algo::CaroweiDs => carowei_ds(g, &policy),
        Algo::CaroweiTds => carowei_tds(g, &policy)?,
        Algo::Kdom => k_dominating(g, k, m, &policy, solver, Scope::Closed)?,
        Algo::Setcover => unreachable!("set cover takes a different instance type"),
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = check && verify_set(g, algo, &set, k);
    Ok(Solved { set, verified, wall_ms })
}

fn verify_set(g: &Graph, algo: Algo, set: &VertexSet, k: usize) -> bool {
    match algo {
        Algo::Mod1 | Algo::CaroweiTds => is_total_dominating(g, set),
        Algo::Kdom => is_k_dominating(g, set, k),
        Algo::Setcover => unreachable!(),
        _ => is_dominating(g, set),
    }
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let record = if args.algo == Algo::Setcover {
        solve_setcover_record(args)?
    } else {
        let loaded = load_graph(&args.input, args.format)?;
        let solved = run_graph_algo(
            &loaded.graph,
            args.algo,
            args.m,
            args.seed,
            args.vc,
            args.k,
            args.verify,
        )?;
        RunRecord {
            instance: instance_name(&args.input),
            n: loaded.graph.vertex_count(),
            edge_count: loaded.graph.edge_count(),
            algorithm: args.algo.name().to_string(),
            scope: args.algo.scope_name().to_string(),
            m: args.m,
            seed: args.seed,
            vc: args.vc.name().to_string(),
            k: (args.algo == Algo::Kdom).then_some(args.k),
            size: solved.set.len(),
            rounds: None,
            wall_ms: if args.stable { 0.0 } else { solved.wall_ms },
            verified: solved.verified,
            solution: Some(solved.set.iter().collect()),
        }
    };

    match args.out {
        OutputFormat::Json => println!("{}", serde_json::to_string(&record).expect("serializable")),
        OutputFormat::Csv => {
            println!("{RECORD_CSV_HEADER}");
            println!("{}", record.to_csv_row());
        }
    }
    if args.verify && !record.verified {
        return Err(CliError::new(2, "verification failed"));
    }
    Ok(())
}

fn solve_setcover_record(args: &SolveArgs) -> Result<RunRecord, CliError> {
    let reader = BufReader::new(File::open(&args.input)?);
    let inst = SetCoverInstance::from_reader(reader)?;
    let policy = RngPolicy::new(args.seed);
    let start = Instant::now();
    let chosen = set_cover(&inst, args.m, &policy, args.vc.solver())?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = args.verify && inst.covers(&chosen);
    Ok(RunRecord {
        instance: instance_name(&args.input),
        n: inst.n_elements(),
        edge_count: inst.n_subsets(),
        algorithm: args.algo.name().to_string(),
        scope: args.algo.scope_name().to_string(),
        m: args.m,
        seed: args.seed,
        vc: args.vc.name().to_string(),
        k: None,
        size: chosen.len(),
        rounds: None,
        wall_ms: if args.stable { 0.0 } else { wall_ms },
        verified,
        solution: Some(chosen),
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    if args.algos.contains(&Algo::Setcover) {
        return Err(CliError::new(
            64,
            "setcover instances are not sweepable; use `domset solve --algo setcover`",
        ));
    }
    if args.repeat == 0 {
        return Err(CliError::new(64, "--repeat must be at least 1"));
    }
    let mut paths: Vec<_> = std::fs::read_dir(&args.dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    paths.sort();

    let tasks: Vec<(usize, Algo)> = (0..paths.len())
        .flat_map(|i| args.algos.iter().map(move |&a| (i, a)))
        .collect();
    let rows: Mutex<Vec<BenchRow>> = Mutex::new(Vec::new());
    let jsonl: Option<Mutex<File>> = match &args.jsonl {
        Some(path) => Some(Mutex::new(
            std::fs::OpenOptions::new().create(true).append(true).open(path)?,
        )),
        None => None,
    };
    let next_task = AtomicUsize::new(0);
    let workers: usize = std::env::var("DOMSET_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let t = next_task.fetch_add(1, Ordering::Relaxed);
                let Some(&(path_idx, algo)) = tasks.get(t) else {
                    break;
                };
                let row = bench_one(args, &paths[path_idx], algo, jsonl.as_ref());
                rows.lock().expect("no poisoned writers").push(row);
            });
        }
    });

    let mut rows = rows.into_inner().expect("workers joined");
    rows.sort_by(|a, b| (&a.instance, &a.algorithm).cmp(&(&b.instance, &b.algorithm)));
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{BENCH_CSV_HEADER}")?;
    for row in &rows {
        writeln!(out, "{}", row.to_csv_row())?;
    }
    Ok(())
}

fn bench_one(
    args: &BenchArgs,
    path: &Path,
    algo: Algo,
    jsonl: Option<&Mutex<File>>,
) -> BenchRow {
    let name = instance_name(path);
    let format = match args.format {
        AutoFormat::Edgelist => InputFormat::Edgelist,
        AutoFormat::Metis => InputFormat::Metis,
        AutoFormat::Auto => match path.extension().and_then(|e| e.to_str()) {
            Some("graph") | Some("metis") => InputFormat::Metis,
            _ => InputFormat::Edgelist,
        },
    };
    let loaded = match load_graph(path, format) {
        Ok(l) => l,
        Err(e) => return BenchRow::error_row(&name, algo.name(), &e.message),
    };
    let g = &loaded.graph;
    let mut sizes = Vec::with_capacity(args.repeat);
    let mut walls = Vec::with_capacity(args.repeat);
    let mut all_verified = true;
    for rep in 0..args.repeat {
        let seed = args.seed + rep as u64;
        match run_graph_algo(g, algo, args.m, seed, args.vc, args.k, true) {
            Ok(solved) => {
                all_verified &= solved.verified;
                sizes.push(solved.set.len());
                walls.push(solved.wall_ms);
                if let Some(file) = jsonl {
                    let record = RunRecord {
                        instance: name.clone(),
                        n: g.vertex_count(),
                        edge_count: g.edge_count(),
                        algorithm: algo.name().to_string(),
                        scope: algo.scope_name().to_string(),
                        m: args.m,
                        seed,
                        vc: args.vc.name().to_string(),
                        k: (algo == Algo::Kdom).then_some(args.k),
                        size: solved.set.len(),
                        rounds: None,
                        wall_ms: if args.stable { 0.0 } else { solved.wall_ms },
                        verified: solved.verified,
                        solution: None,
                    };
                    let mut file = file.lock().expect("no poisoned writers");
                    let _ = writeln!(file, "{}", serde_json::to_string(&record).unwrap());
                }
            }
            Err(e) => return BenchRow::error_row(&name, algo.name(), &e.message),
        }
    }
    let size_min = sizes.iter().copied().min().unwrap_or(0);
    let size_mean = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
    let wall_ms_mean = if args.stable {
        0.0
    } else {
        walls.iter().sum::<f64>() / walls.len() as f64
    };
    BenchRow {
        instance: name,
        n: g.vertex_count(),
        edge_count: g.edge_count(),
        algorithm: algo.name().to_string(),
        scope: algo.scope_name().to_string(),
        m: args.m,
        seed: args.seed,
        vc: args.vc.name().to_string(),
        repeat: args.repeat,
        size_min,
        size_mean,
        wall_ms_mean,
        verified: all_verified,
        error: None,
    }
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let loaded = load_graph(&args.input, args.format)?;
    let g = &loaded.graph;
    let start = Instant::now();
    let mut gamma = None;
    let mut gamma_t = None;
    let mut gamma_t_note = None;
    let mut beta = None;
    if matches!(args.what, OracleWhat::Gamma | OracleWhat::All) {
        gamma = Some(brute_force_mds(g)?.len());
    }
    if matches!(args.what, OracleWhat::GammaT | OracleWhat::All) {
        match brute_force_mtds(g) {
            Ok(s) => gamma_t = Some(s.len()),
            Err(e @ OracleError::IsolatedVertex { .. }) => {
                if args.what == OracleWhat::GammaT {
                    return Err(e.into());
                }
                gamma_t_note = Some(e.to_string());
            }
            Err(e) => return Err(e.into()),
        }
    }
    if matches!(args.what, OracleWhat::Beta | OracleWhat::All) {
        let h = LoopMultigraph::new(g.vertex_count(), g.edges())
            .expect("graph edges are valid multigraph edges");
        beta = Some(brute_force_mvc(&h)?.len());
    }
    let wall_ms = if args.stable {
        0.0
    } else {
        start.elapsed().as_secs_f64() * 1e3
    };
    let value = serde_json::json!({
        "instance": instance_name(&args.input),
        "n": g.vertex_count(),
        "edge_count": g.edge_count(),
        "gamma": gamma,
        "gamma_t": gamma_t,
        "gamma_t_note": gamma_t_note,
        "beta": beta,
        "wall_ms": wall_ms,
    });
    println!("{value}");
    Ok(())
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let loaded = load_graph(&args.input, args.format)?;
    let g = &loaded.graph;
    let policy = RngPolicy::new(args.seed);
    let config = SimConfig {
        payload_cap_bits: args.payload_cap,
    };
    let start = Instant::now();
    let (trace, kind) = match args.algo {
        SimAlgo::Alg1 => {
            let program = alg1_program(args.m, policy, Scope::Closed);
            (
                run_sync_with(g, &program, program.round_budget(), config),
                "alg1",
            )
        }
        SimAlgo::Carowei => {
            let program = carowei_program(policy);
            (
                run_sync_with(g, &program, program.round_budget(), config),
                "carowei",
            )
        }
    };
    let wall_ms = if args.stable {
        0.0
    } else {
        start.elapsed().as_secs_f64() * 1e3
    };

    let lines: Vec<String> = trace.round_lines().collect();
    match &args.trace {
        Some(path) => {
            let mut file = File::create(path)?;
            for line in &lines {
                writeln!(file, "{line}")?;
            }
        }
        None => {
            for line in &lines {
                println!("{line}");
            }
        }
    }

    let members: Vec<u32> = trace
        .outputs
        .iter()
        .enumerate()
        .filter(|(_, o)| o.unwrap_or(false))
        .map(|(v, _)| v as u32)
        .collect();
    let set = VertexSet::new(domset_graph::SetKind::Dominating, members);
    let verified = is_dominating(g, &set);
    let summary = serde_json::json!({
        "instance": instance_name(&args.input),
        "algorithm": kind,
        "m": args.m,
        "seed": args.seed,
        "rounds": trace.rounds,
        "total_messages": trace.total_messages(),
        "max_payload_bits": trace.max_payload_bits,
        "payload_cap_bits": args.payload_cap,
        "payload_violations": trace.payload_violations,
        "audit_ok": trace.audit_ok(),
        "size": set.len(),
        "verified": verified,
        "wall_ms": wall_ms,
    });
    println!("{summary}");
    Ok(())
}
