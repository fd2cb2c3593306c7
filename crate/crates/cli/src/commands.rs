use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use kforce_core::format::{read_graph_file, write_graph_file};
use kforce_core::generators::{self, StandardFamily};
use kforce_core::propagation::closure;
use kforce_core::solvers::solve_parameter;
use kforce_core::transforms::{
    build_xhat, pd_contraction_bounds, pd_contraction_monotone_k1, pd_low_degree_bounds, pd_partition_bound,
    zf_contraction_bounds, zf_low_degree_bounds, zf_partition_bound, PartitionSpec,
};
use kforce_core::verifier::{
    check_sierpinski_formula, check_surgery_equivalences, check_xhat_block_equality, run_inequality_suite,
    SierpinskiMode, Verdict,
};
use kforce_core::{Graph, Mode, Parameter, SearchConfig, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::*;

pub fn run(cli: &Cli) -> Result<Status> {
    let start = Instant::now();
    let g = &cli.global;
    let cfg = SearchConfig::default().with_budget(g.budget).with_workers(g.workers as usize);
    let (mut value, text, status) = match &cli.command {
        Command::Gen(a) => gen(a, g.seed)?,
        Command::Closure(a) => closure_cmd(a)?,
        Command::Solve(a) => solve(a, &cfg)?,
        Command::Contract(a) => contract(a)?,
        Command::Xhat(a) => xhat(a)?,
        Command::Bound(b) => bound(b, &cfg, g.timings)?,
        Command::Verify(a) => verify(a, &cfg, g.seed)?,
    };
    if g.timings {
        if let Value::Object(map) = &mut value {
            map.insert("elapsed_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
        }
    }
    match g.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value)?),
        Format::Text => print!("{text}"),
    }
    Ok(status)
}

type Output = (Value, String, Status);

/// `data` as a JSON object tagged with its schema id.
fn tagged(schema: &str, data: impl Serialize) -> Result<Value> {
    let mut v = serde_json::to_value(data)?;
    match &mut v {
        Value::Object(map) => {
            map.insert("schema".into(), json!(format!("kforce/{schema}/v1")));
            Ok(v)
        }
        _ => bail!("internal: {schema} output is not an object"),
    }
}

fn load(path: &Path) -> Result<Graph> {
    read_graph_file(path).with_context(|| format!("reading {}", path.display()))
}

fn ids(text: &str) -> Result<VertexSet> {
    VertexSet::parse_ids(text).map_err(|e| anyhow!("bad vertex list {text:?}: {e}"))
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value.ok_or_else(|| anyhow!("family {family:?} needs --{flag}"))
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

#[derive(Serialize)]
struct GenMeta {
    family: String,
    params: serde_json::Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<VertexSet>,
    order: usize,
    size: usize,
    max_degree: usize,
    min_degree: usize,
}

fn gen(a: &GenArgs, seed: u64) -> Result<Output> {
    use Family::*;
    let f = a.family;
    let mut params = serde_json::Map::new();
    let mut param = |name: &str, v: Option<usize>| -> Result<usize> {
        let v = need(v, name, f)?;
        params.insert(name.into(), json!(v));
        Ok(v)
    };
    let (graph, x) = match f {
        Sierpinski => (generators::sierpinski(param("p", a.p)?, param("n", a.n)?)?, None),
        Uq => {
            let (g, x) = generators::gadget_uq(param("k", a.k)?, param("q", a.q)?)?;
            (g, Some(x))
        }
        Lq => {
            let (g, x) = generators::gadget_lq(param("k", a.k)?, param("q", a.q)?)?;
            (g, Some(x))
        }
        Tkc => {
            let (g, x) = generators::gadget_tkc(param("k", a.k)?, param("c", a.c)?)?;
            (g, Some(x))
        }
        Gpr => (generators::gadget_gpr(param("k", a.k)?, param("p", a.p)?, param("r", a.r)?)?, None),
        Path => (generators::standard_family(StandardFamily::Path(param("n", a.n)?))?, None),
        Cycle => (generators::standard_family(StandardFamily::Cycle(param("n", a.n)?))?, None),
        Complete => (generators::standard_family(StandardFamily::Complete(param("n", a.n)?))?, None),
        Star => (generators::standard_family(StandardFamily::Star(param("n", a.n)?))?, None),
        CompleteBipartite => {
            let fam = StandardFamily::CompleteBipartite(param("a", a.a)?, param("b", a.b)?);
            (generators::standard_family(fam)?, None)
        }
        Random => {
            let n = param("n", a.n)?;
            let prob = a.prob.ok_or_else(|| anyhow!("family Random needs --prob"))?;
            params.insert("prob".into(), json!(prob));
            params.insert("seed".into(), json!(seed));
            (generators::random_connected(n, prob, seed)?, None)
        }
    };
    let family = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let meta = GenMeta {
        family,
        params,
        x,
        order: graph.order(),
        size: graph.size(),
        max_degree: graph.max_degree(),
        min_degree: graph.min_degree(),
    };
    write_graph_file(&a.output, &graph).with_context(|| format!("writing {}", a.output.display()))?;
    let value = tagged("gen", &meta)?;
    let sidecar = sidecar_path(&a.output);
    std::fs::write(&sidecar, serde_json::to_string_pretty(&value)? + "\n")
        .with_context(|| format!("writing {}", sidecar.display()))?;
    let text =
        format!("{} n={} m={} Δ={} -> {}\n", meta.family, meta.order, meta.size, meta.max_degree, a.output.display());
    Ok((value, text, Status::Ok))
}

fn closure_cmd(a: &ClosureArgs) -> Result<Output> {
    let g = load(&a.file)?;
    let seed = ids(&a.seed_set)?;
    let mode = match a.mode {
        ModeArg::Forcing => Mode::Forcing,
        ModeArg::Power => Mode::Power,
    };
    let trace = closure(&g, a.k, mode, &seed)?;
    let mut text = String::new();
    for (i, round) in trace.rounds.iter().enumerate() {
        text += &format!("round {i}: {} observed\n", round.len());
        if let Some(forces) = trace.forcers.get(i) {
            for (u, v) in forces {
                text += &format!("  {u} -> {v}\n");
            }
        }
    }
    text += &format!("success: {}\n", trace.success);
    let mut value = tagged("closure", &trace)?;
    value["seed_set"] = json!(seed);
    value["order"] = json!(g.order());
    Ok((value, text, Status::Ok))
}

fn solve(a: &SolveArgs, cfg: &SearchConfig) -> Result<Output> {
    let g = load(&a.file)?;
    let param = match a.param {
        ParamArg::Zk => Parameter::ForcingNumber,
        ParamArg::Pdk => Parameter::PowerDomination,
        ParamArg::Gamma => Parameter::Domination,
    };
    let r = solve_parameter(&g, param, a.k, cfg)?;
    let text = format!("value: {}\nwitness: {}\nnodes explored: {}\n", r.value, r.witness, r.nodes_explored);
    Ok((tagged("solve", &r)?, text, Status::Ok))
}

fn contract(a: &SetTransformArgs) -> Result<Output> {
    let g = load(&a.file)?;
    let x = ids(&a.set)?;
    let c = g.contract(&x)?;
    write_graph_file(&a.output, &c.graph).with_context(|| format!("writing {}", a.output.display()))?;
    let value = tagged(
        "contract",
        json!({
            "order": c.graph.order(),
            "size": c.graph.size(),
            "contracted_vertex": c.contracted_vertex,
            "id_map": c.id_map,
        }),
    )?;
    let text = format!(
        "n={} m={} contracted vertex {} -> {}\n",
        c.graph.order(),
        c.graph.size(),
        c.contracted_vertex,
        a.output.display()
    );
    Ok((value, text, Status::Ok))
}

fn xhat(a: &SetTransformArgs) -> Result<Output> {
    let g = load(&a.file)?;
    let x = ids(&a.set)?;
    let h = build_xhat(&g, &x)?;
    write_graph_file(&a.output, &h.graph).with_context(|| format!("writing {}", a.output.display()))?;
    let value = tagged(
        "xhat",
        json!({
            "order": h.graph.order(),
            "size": h.graph.size(),
            "core_to_original": h.core_to_original,
            "pendant_map": h.pendant_map,
        }),
    )?;
    let text = format!(
        "n={} m={} pendants={} -> {}\n",
        h.graph.order(),
        h.graph.size(),
        h.pendant_count(),
        a.output.display()
    );
    Ok((value, text, Status::Ok))
}

fn bound(b: &BoundCommand, cfg: &SearchConfig, timings: bool) -> Result<Output> {
    match b {
        BoundCommand::Contraction(a) => {
            let g = load(&a.file)?;
            let x = ids(&a.set)?;
            match (a.param, a.low_degree) {
                (BoundParam::Pdk, low) => {
                    let r = if low {
                        pd_low_degree_bounds(&g, a.k, &x, cfg)?
                    } else {
                        pd_contraction_bounds(&g, a.k, &x, cfg)?
                    };
                    let i = &r.interval;
                    let text = format!(
                        "{} <= gammaPk <= {} (G/X: {}, additive term: {})\n",
                        i.lower, i.upper, r.contracted_value, r.side_value
                    );
                    Ok((tagged("bound-contraction", &r)?, text, Status::Ok))
                }
                (BoundParam::Zk, low) => {
                    let r = if low {
                        zf_low_degree_bounds(&g, a.k, &x, cfg)?
                    } else {
                        zf_contraction_bounds(&g, a.k, &x, cfg)?
                    };
                    let (text, status) = match &r.interval {
                        Some(i) => (format!("{} <= Zk <= {}\n", i.lower, i.upper), Status::Ok),
                        None => (format!("hypothesis not met: {}\n", r.hypothesis_detail), Status::HypothesisNotMet),
                    };
                    Ok((tagged("bound-contraction-zk", &r)?, text, status))
                }
            }
        }
        BoundCommand::Partition(a) => {
            let g = load(&a.file)?;
            let raw = std::fs::read_to_string(&a.parts).with_context(|| format!("reading {}", a.parts.display()))?;
            let spec = PartitionSpec::from_json(&raw)?;
            let mut r = match a.param {
                BoundParam::Pdk => pd_partition_bound(&g, a.k, &spec, cfg)?,
                BoundParam::Zk => zf_partition_bound(&g, a.k, &spec, cfg)?,
            };
            if !timings {
                r.strip_timings();
            }
            let mut text = String::new();
            for p in &r.parts {
                text += &format!("part {}: |X|={} value={}\n", p.index, p.part_size, p.value);
            }
            let status = match r.bound {
                Some(b) => {
                    text += &format!("bound: {b} (witness verified: {})\n", r.witness_verified);
                    if r.witness_verified {
                        Status::Ok
                    } else {
                        Status::Fail
                    }
                }
                None => {
                    text += "hypothesis not met: some part has no minimum forcing set inside it\n";
                    Status::HypothesisNotMet
                }
            };
            Ok((tagged("bound-partition", &r)?, text, status))
        }
        BoundCommand::Monotone(a) => {
            let g = load(&a.file)?;
            let r = pd_contraction_monotone_k1(&g, &ids(&a.set)?, cfg)?;
            let text = format!("gammaP(G/X) = {} <= gammaP(G) = {}: {}\n", r.value_gx, r.value_g, r.holds);
            let status = if r.holds { Status::Ok } else { Status::Fail };
            Ok((tagged("bound-monotone", r)?, text, status))
        }
    }
}

fn verdict_status(v: Verdict) -> Status {
    if v == Verdict::Fail {
        Status::Fail
    } else {
        Status::Ok
    }
}

fn verify(a: &VerifyArgs, cfg: &SearchConfig, seed: u64) -> Result<Output> {
    match &a.target {
        Some(VerifyTarget::Sierpinski(s)) => {
            let mode = match s.mode {
                Some(SierpinskiModeArg::Exact) => SierpinskiMode::Exact,
                Some(SierpinskiModeArg::Witness) => SierpinskiMode::Witness,
                None if s.n == 3 => SierpinskiMode::Exact,
                None => SierpinskiMode::Witness,
            };
            let r = check_sierpinski_formula(s.p, s.n, s.k, mode, cfg)?;
            let text = format!(
                "S_{}^{} k={} {:?}: value {} formula {} witness verified {} -> {:?}\n",
                s.p, s.n, s.k, r.mode, r.value, r.formula, r.witness_verified, r.verdict
            );
            Ok((tagged("verify-sierpinski", &r)?, text, verdict_status(r.verdict)))
        }
        Some(VerifyTarget::Block(b)) => {
            let r = check_xhat_block_equality(b.p, b.n, b.k, &b.prefix, cfg)?;
            let text = format!(
                "block {}: augmented {} vs base {}, shape {:?} ({} pendants) -> {:?}\n",
                r.prefix, r.xhat_value, r.base_value, r.shape, r.pendant_count, r.verdict
            );
            Ok((tagged("verify-block", &r)?, text, verdict_status(r.verdict)))
        }
        Some(VerifyTarget::Surgery(s)) => {
            let g = load(&s.file)?;
            let r = check_surgery_equivalences(&g, s.k, s.trials, seed)?;
            let text = format!(
                "{} comparisons, {} positive, {} failures -> {:?}\n",
                r.comparisons,
                r.positives,
                r.failures.len(),
                r.verdict
            );
            Ok((tagged("verify-surgery", &r)?, text, verdict_status(r.verdict)))
        }
        None => {
            let k = a.k.ok_or_else(|| anyhow!("verify needs -k"))?;
            let file = a.file.as_ref().ok_or_else(|| anyhow!("verify needs a graph file"))?;
            let g = load(file)?;
            let r = run_inequality_suite(&g, k, seed, cfg)?;
            let status = if r.all_passed() { Status::Ok } else { Status::Fail };
            Ok((tagged("verify", &r)?, r.to_table(), status))
        }
    }
}
