use std::collections::BTreeMap;
use std::io::Read;

use jetloci::census::{
    codim_exponents, determinant_multiplicity_at_zero, run_census_sharded, snf_is_sound, CensusSpec,
    CSV_HEADER, DEFAULT_BUDGET,
};
use jetloci::format::{matrix_to_json, parse_matrix_any};
use jetloci::jetlinalg::{minors_vanish, smith_normal_form, type_of};
use jetloci::loci::{
    classify_singularities, lct_closed_form, lct_lp_oracle, martens_bound, minors_vanish_by_type,
    mustata_lct, stratum_dim_bound_theta, theta_sing_fiber_bound, theta_sing_jet_dims,
    wrd_member, wrd_stratum_dim_bound, BNParams, BoundsQuery, DeterminantalModel, SingularityKind,
};
use jetloci::partitions::all_partitions;
use jetloci::{JetMatrix, Partition, Signature};

use crate::output::{Format, Record};
use crate::{BoundsCommand, Command, Failure, Kind, MatrixInput};

type Outcome = Result<String, Failure>;

const BUDGET_VAR: &str = "JETLOCI_BUDGET";

pub fn dispatch(cmd: Command, format: Format) -> Outcome {
    let record = match cmd {
        Command::Snf { input } => snf(&input)?,
        Command::Type { input } => type_cmd(&input)?,
        Command::Member { input, g, d, r, e } => member(&input, g, d, r, e)?,
        Command::H0 { lambda, level, input } => h0(lambda.as_deref(), level, &input)?,
        Command::Lct {
            g,
            d,
            r,
            l,
            ambient,
            jet_dims,
        } => lct(g, d, r, l, ambient, jet_dims)?,
        Command::Bounds { which } => bounds(which)?,
        Command::Census {
            p,
            rows,
            cols,
            m,
            s,
            random,
            seed,
            shards,
            budget,
            csv,
        } => {
            let specs = census_specs(&p, rows, cols, m, s, random, seed, budget)?;
            return census(specs, shards, csv, format);
        }
        Command::Mult {
            n,
            p,
            horizon,
            exhaustive_limit,
        } => {
            let report = determinant_multiplicity_at_zero(n, p, horizon, exhaustive_limit)?;
            Record::new("mult", "jet-fiber-levels", &report)
                .input("n", n)
                .input("p", p)
                .input("exhaustive_limit", exhaustive_limit.to_string())
                .horizon(horizon as u64)
                .named("multiplicity", report.multiplicity)
        }
        Command::Identity { l_max, part_max } => identity(l_max, part_max)?,
        Command::Classify {
            n,
            dims,
            kind,
            theta_g,
            hyperelliptic,
            horizon,
        } => classify(n, dims, kind, theta_g, hyperelliptic, horizon)?,
    };
    Ok(record.render(format))
}

fn read_matrix(input: &MatrixInput) -> Result<JetMatrix, Failure> {
    let text = if let Some(path) = &input.file {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
    } else if let Some(inline) = &input.matrix {
        inline.replace(';', "\n")
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        buf
    };
    Ok(parse_matrix_any(&text)?)
}

fn by_size(f: impl Fn(usize) -> jetloci::Result<bool>, steps: usize) -> Result<BTreeMap<String, bool>, Failure> {
    (1..=steps)
        .map(|s| Ok((s.to_string(), f(s)?)))
        .collect()
}

fn snf(input: &MatrixInput) -> Result<Record, Failure> {
    let a = read_matrix(input)?;
    let snf = smith_normal_form(&a);
    let diagonal: Vec<String> = (0..a.rows().min(a.cols()))
        .map(|i| snf.d.get(i, i).to_string())
        .collect();
    let value = serde_json::json!({
        "d": matrix_to_json(&snf.d),
        "u": matrix_to_json(&snf.u),
        "v": matrix_to_json(&snf.v),
        "diagonal": diagonal,
        "diagonal_orders": snf.diagonal_orders(),
        "unit_count": snf.unit_count,
    });
    Ok(Record::new("snf", "pivot-elimination", value)
        .input("matrix", matrix_to_json(&a))
        .oracle(serde_json::json!({ "sound": snf_is_sound(&a, &snf) }))
        .named("type", snf.partition.to_string()))
}

fn type_cmd(input: &MatrixInput) -> Result<Record, Failure> {
    let a = read_matrix(input)?;
    let snf = smith_normal_form(&a);
    let steps = a.rows().min(a.cols());
    let by_type = by_size(|s| minors_vanish_by_type(&snf, s), steps)?;
    let by_minors = by_size(|s| minors_vanish(&a, s), steps)?;
    let value = serde_json::json!({
        "type": snf.partition.to_string(),
        "length": snf.partition.len(),
        "unit_count": snf.unit_count,
        "minors_vanish": by_type,
    });
    Ok(Record::new("type", "normal-form-orders", value)
        .input("matrix", matrix_to_json(&a))
        .oracle(serde_json::json!({ "minors_vanish": by_minors }))
        .named("type", snf.partition.to_string()))
}

fn member(input: &MatrixInput, g: u32, d: u32, r: u32, e: Option<u32>) -> Result<Record, Failure> {
    let a = read_matrix(input)?;
    let params = BNParams::new(g, d, r, r + 1)?;
    let e = e.unwrap_or(a.rows().max(a.cols()) as u32);
    let model = DeterminantalModel::with_degree(params, e)?;
    let member = wrd_member(&a, &model)?;
    let oracle = minors_vanish(&a, model.minor_size)?;
    Ok(Record::new("member", "type-criterion", member)
        .input("g", g)
        .input("d", d)
        .input("r", r)
        .input("e", e)
        .input("matrix", matrix_to_json(&a))
        .oracle(oracle)
        .named("member", member)
        .named("minor_size", model.minor_size)
        .named("type", type_of(&a).to_string()))
}

fn h0(lambda: Option<&str>, level: Option<u32>, input: &MatrixInput) -> Result<Record, Failure> {
    if let Some(text) = lambda {
        let lambda: Partition = text.parse()?;
        let j = level.unwrap_or(lambda.cap() - 1);
        let h = lambda.h0_at(j)?;
        return Ok(Record::new("h0", "section-count", h)
            .input("type", lambda.to_string())
            .input("level", j)
            .named("h0", h));
    }
    let a = read_matrix(input)?;
    let j = level.unwrap_or(a.order());
    let at_level = a.truncate(j)?;
    let lambda = type_of(&at_level);
    let h = lambda.h0_at(j)?;
    let kernel = if at_level.cols() <= at_level.rows() {
        at_level.module_kernel_dim()
    } else {
        at_level.transpose().module_kernel_dim()
    };
    Ok(Record::new("h0", "section-count", h)
        .input("matrix", matrix_to_json(&a))
        .input("level", j)
        .oracle(kernel)
        .named("h0", h)
        .named("type", lambda.to_string()))
}

fn lct(
    g: Option<u32>,
    d: Option<u32>,
    r: Option<u32>,
    l: Option<u32>,
    ambient: Option<u32>,
    jet_dims: Option<Vec<i64>>,
) -> Result<Record, Failure> {
    if let (Some(g), Some(d), Some(r), Some(l)) = (g, d, r, l) {
        let params = BNParams::new(g, d, r, l)?;
        let value = lct_closed_form(&params)?.to_string();
        let oracle = lct_lp_oracle(&params)?.to_string();
        return Ok(Record::new("lct", "closed-form", &value)
            .input("g", g)
            .input("d", d)
            .input("r", r)
            .input("l", l)
            .oracle(oracle)
            .named("lct", value));
    }
    match (ambient, jet_dims) {
        (Some(n), Some(dims)) => {
            let est = mustata_lct(n, &dims)?;
            let value = est.value.to_string();
            Ok(Record::new("lct", "jet-formula", &est)
                .input("ambient", n)
                .input("jet_dims", &dims)
                .horizon(est.horizon as u64)
                .named("lct", value))
        }
        _ => Err(Failure::Usage(
            "lct needs --g --d --r --l, or --ambient with --jet-dims".into(),
        )),
    }
}

fn bounds(which: BoundsCommand) -> Result<Record, Failure> {
    Ok(match which {
        BoundsCommand::ThetaFiber { g, m } => {
            let b = theta_sing_fiber_bound(g, m)?;
            Record::new("bounds", "theta-fiber-maximization", &b)
                .input("g", g)
                .input("m", m)
                .named("bound", b.bound)
        }
        BoundsCommand::ThetaStratum { g, m, lambda } => {
            let lambda: Partition = lambda.parse()?;
            let b = stratum_dim_bound_theta(&lambda, g, m)?;
            Record::new("bounds", "theta-stratum", b)
                .input("g", g)
                .input("m", m)
                .input("type", lambda.to_string())
                .named("bound", b)
        }
        BoundsCommand::Stratum {
            bn,
            m,
            lambda,
            defects,
            signature,
        } => {
            let params = BNParams::new(bn.g, bn.d, bn.r, bn.l)?;
            let lambda: Partition = lambda.parse()?;
            let mut q = BoundsQuery::new(params, m);
            q.defects = defects.clone();
            q.signature = signature.clone().map(Signature::new).transpose()?;
            let b = wrd_stratum_dim_bound(&q, &lambda)?;
            Record::new("bounds", "wrd-stratum", b)
                .input("g", bn.g)
                .input("d", bn.d)
                .input("r", bn.r)
                .input("l", bn.l)
                .input("m", m)
                .input("type", lambda.to_string())
                .input("defects", defects)
                .input("signature", signature)
                .named("bound", b)
        }
        BoundsCommand::Martens {
            g,
            d,
            r,
            hyperelliptic,
        } => {
            let b = martens_bound(g, d, r, hyperelliptic)?;
            Record::new("bounds", "martens", b)
                .input("g", g)
                .input("d", d)
                .input("r", r)
                .input("hyperelliptic", hyperelliptic)
                .named("bound", b)
        }
    })
}

fn budget(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[allow(clippy::too_many_arguments)]
fn census_specs(
    primes: &[u64],
    rows: usize,
    cols: usize,
    m: u32,
    s: Option<usize>,
    random: Option<u64>,
    seed: u64,
    budget_flag: Option<u128>,
) -> Result<Vec<CensusSpec>, Failure> {
    let budget = budget(budget_flag)?;
    Ok(primes
        .iter()
        .map(|&p| {
            let spec = match random {
                Some(count) => CensusSpec::random(p, rows, cols, m, count, seed),
                None => CensusSpec::exhaustive(p, rows, cols, m),
            };
            let spec = spec.with_budget(budget);
            match s {
                Some(s) => spec.with_minor_size(s),
                None => spec,
            }
        })
        .collect())
}

fn census(specs: Vec<CensusSpec>, shards: Option<usize>, csv: bool, format: Format) -> Outcome {
    let shards = shards.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()) * 4);
    let reports = specs
        .iter()
        .map(|spec| run_census_sharded(spec, shards))
        .collect::<jetloci::Result<Vec<_>>>()?;
    if csv {
        let mut out = String::from(CSV_HEADER);
        for r in &reports {
            out.push_str(&r.csv_rows());
        }
        return Ok(out);
    }
    let exhaustive = specs.iter().all(|s| s.mode == jetloci::census::CensusMode::Exhaustive);
    let exponents = if reports.len() >= 2 && exhaustive {
        Some(codim_exponents(&reports)?)
    } else {
        None
    };
    let clean = reports.iter().all(|r| r.is_clean());
    let first = &specs[0];
    let record = Record::new(
        "census",
        if exhaustive { "exhaustive" } else { "random" },
        serde_json::json!({ "reports": reports, "exponents": exponents }),
    )
    .input("p", specs.iter().map(|s| s.p).collect::<Vec<_>>())
    .input("rows", first.rows)
    .input("cols", first.cols)
    .input("m", first.order)
    .input("s", first.minor_size)
    .input("mode", first.mode)
    .named("clean", clean);
    Ok(record.render(format))
}

fn identity(l_max: usize, part_max: u32) -> Result<Record, Failure> {
    if part_max == 0 {
        return Err(Failure::Domain("out of range: --part-max must be positive".into()));
    }
    let mut checked = 0u64;
    let mut failures = 0u64;
    for l in 0..=l_max {
        for lambda in all_partitions(l, part_max) {
            let (lhs, rhs) = lambda.square_identity();
            checked += 1;
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    Ok(Record::new(
        "identity",
        "exhaustive",
        serde_json::json!({ "checked": checked, "failures": failures }),
    )
    .input("l_max", l_max)
    .input("part_max", part_max)
    .named("checked", checked)
    .named("failures", failures))
}

fn classify(
    n: Option<u32>,
    dims: Vec<i64>,
    kind: Kind,
    theta_g: Option<u32>,
    hyperelliptic: bool,
    horizon: u32,
) -> Result<Record, Failure> {
    let (n, dims, kind, method) = match theta_g {
        Some(g) => (
            g,
            theta_sing_jet_dims(g, hyperelliptic, horizon)?,
            SingularityKind::Divisor,
            "theta-singular-locus",
        ),
        None => (
            n.expect("clap requires --n"),
            dims,
            match kind {
                Kind::Divisor => SingularityKind::Divisor,
                Kind::Lci => SingularityKind::Lci,
            },
            "jet-dimension-criteria",
        ),
    };
    let tag = classify_singularities(n, &dims, kind)?;
    Ok(Record::new("classify", method, tag)
        .input("n", n)
        .input("dims", &dims)
        .input("kind", kind)
        .input("theta_g", theta_g)
        .input("hyperelliptic", hyperelliptic)
        .horizon(dims.len() as u64)
        .named("tag", tag))
}
