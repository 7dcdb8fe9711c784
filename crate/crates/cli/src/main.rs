mod output;

use anyhow::{anyhow, Context, Result};
use cfk_core::bounds::{
    bounds_report, fmt_exact, lt_signature_of_expr, signature_extrema, upsilon_of_expr,
    upsilon_ratio_bound, ClaspInputs, Q,
};
use cfk_core::builders::{load_complex, parse_knot_expr, realize_expr, KnotExpr};
use cfk_core::invariants::{is_knotlike, tower_ranks, InvariantTable, TableOptions};
use cfk_core::involutive::{realize_with_iota, v0_bar_under, verify_iota, IotaOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{Format, Report};
use std::ops::RangeInclusive;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cfk",
    version,
    about = "Knot Floer concordance invariants over GF(2)[U,V]"
)]
struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, env = "CFK_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of K and -K and every slice genus and clasp bound.
    Report(ReportArgs),
    /// Exact breakpoint table of Upsilon and Upsilon(t)/t.
    Plotdata(PlotArgs),
    /// Check a complex file and its involution.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct Input {
    /// Knot expression, e.g. `T(2,3)#-T(5,6)` or `@file.cfk`.
    #[arg(long, group = "input")]
    expr: Option<String>,
    /// Complex file; same as `--expr @PATH`.
    #[arg(long, group = "input")]
    file: Option<String>,
}

impl Input {
    fn expression(&self) -> Result<KnotExpr> {
        match (&self.expr, &self.file) {
            (Some(s), None) => Ok(parse_knot_expr(s)?),
            (None, Some(p)) => Ok(KnotExpr::File(p.clone())),
            _ => Err(anyhow!(Usage(
                "exactly one of --expr and --file is required".into()
            ))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Involutive {
    On,
    Off,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    IotaLast,
    IotaFirst,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: Input,
    /// Indices of V_s to report, `A..B` inclusive.
    #[arg(long = "v", value_parser = parse_range, default_value = "0..3")]
    v: RangeInclusive<u32>,
    /// Indices of Y_n to report, `A..B` inclusive.
    #[arg(long = "y", value_parser = parse_range, default_value = "0..3")]
    y: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value = "auto")]
    involutive: Involutive,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Iteration cap for the nu+ and omega+ searches.
    #[arg(long)]
    cap: Option<i64>,
    #[arg(long, value_enum, default_value = "iota-last")]
    iota_order: OrderArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Panel {
    Upsilon,
    Ratio,
    Both,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "both")]
    panel: Panel,
    /// Cover [0,2] instead of [0,1] in the Upsilon panel.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    input: Input,
}

/// A command-line usage problem, reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Runtime consistency failure, exit code 4.
#[derive(Debug)]
struct Inconsistent(Vec<String>);

impl std::fmt::Display for Inconsistent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal consistency failure: {}", self.0.join("; "))
    }
}

impl std::error::Error for Inconsistent {}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in `{s}`"))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in `{s}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    use cfk_core::Error as E;
    if e.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    if e.downcast_ref::<Inconsistent>().is_some() {
        return 4;
    }
    match e.downcast_ref::<E>() {
        Some(E::Parse { .. }) => 2,
        Some(E::NotTorusSum) => 5,
        Some(
            E::Invalid(_)
            | E::File { .. }
            | E::BadTorusParameters { .. }
            | E::UnknownName(_)
            | E::NotKnotLike(_)
            | E::BadIota(_)
            | E::MissingIota(_),
        ) => 3,
        _ => 4,
    }
}

fn report(args: &ReportArgs) -> Result<String> {
    let e = args.input.expression()?;
    let m = e.clone().mirror();
    let opts = TableOptions {
        v_range: *args.v.start() as i64..=*args.v.end() as i64,
        y_range: args.y.clone(),
        cap: args.cap,
    };
    let order = match args.iota_order {
        OrderArg::IotaLast => IotaOrder::IotaLast,
        OrderArg::IotaFirst => IotaOrder::IotaFirst,
    };

    let c = realize_expr(&e)?;
    let cm = realize_expr(&m)?;
    let (k, km) = rayon::join(
        || InvariantTable::compute(&c, &opts),
        || InvariantTable::compute(&cm, &opts),
    );
    let (k, km) = (k?, km?);

    let involutive = match args.involutive {
        Involutive::Off => None,
        mode => match realize_with_iota(&e, order) {
            Ok(d) => Some((v0_bar_under(&d)?, d.provenance)),
            Err(cfk_core::Error::MissingIota(_)) if mode == Involutive::Auto => None,
            Err(err) => return Err(err.into()),
        },
    };

    let upsilon = match upsilon_of_expr(&e) {
        Ok(f) => Some(f),
        Err(cfk_core::Error::NotTorusSum) => None,
        Err(err) => return Err(err.into()),
    };
    let signature = match lt_signature_of_expr(&e) {
        Ok(s) => Some(s),
        Err(cfk_core::Error::NotTorusSum) => None,
        Err(err) => return Err(err.into()),
    };

    let mut problems: Vec<String> = k
        .consistency_violations()
        .into_iter()
        .map(|s| format!("K: {s}"))
        .chain(
            km.consistency_violations()
                .into_iter()
                .map(|s| format!("-K: {s}")),
        )
        .collect();
    if k.tau != -km.tau {
        problems.push(format!("tau(K) = {} but tau(-K) = {}", k.tau, km.tau));
    }
    if let Some(((vbar, vunder), _)) = involutive {
        if !(vbar <= k.v[&0] && k.v[&0] <= vunder) {
            problems.push(format!(
                "Vbar_0 <= V_0 <= Vunder_0 fails: {vbar}, {}, {vunder}",
                k.v[&0]
            ));
        }
    }
    if let Some(f) = &upsilon {
        if f.slope_at_zero() != Q::from_integer(-k.tau) {
            problems.push(format!(
                "Upsilon slope {} differs from -tau",
                fmt_exact(f.slope_at_zero())
            ));
        }
        if !f.is_symmetric() {
            problems.push("Upsilon is not symmetric about t = 1".into());
        }
    }
    if let Some(s) = &signature {
        if !s.is_symmetric() {
            problems.push("signature function is not symmetric".into());
        }
    }
    if !problems.is_empty() {
        return Err(Inconsistent(problems).into());
    }

    let extra = ClaspInputs {
        upsilon: upsilon.as_ref().map(upsilon_ratio_bound),
        signature: signature.as_ref().map(signature_extrema),
        involutive: involutive.map(|(v, _)| v),
    };
    let bounds = bounds_report(&k, &km, &extra);
    let r = Report {
        expression: e.to_string(),
        generators: (c.len(), cm.len()),
        v_range: args.v.clone(),
        y_range: args.y.clone(),
        knot: &k,
        mirror: &km,
        knot_complex: &c,
        mirror_complex: &cm,
        involutive: involutive.map(|(v, p)| (v, p.to_string(), order)),
        upsilon: upsilon.as_ref(),
        signature: signature.as_ref(),
        extra: &extra,
        bounds: &bounds,
    };
    Ok(r.render(args.format))
}

fn plotdata(args: &PlotArgs) -> Result<String> {
    let e = args.input.expression()?;
    let f = upsilon_of_expr(&e)?;
    let mut out = String::new();
    if args.panel != Panel::Ratio {
        out.push_str("t\tupsilon\n");
        let rows = if args.full {
            f.points().to_vec()
        } else {
            f.samples_on_unit_interval()
        };
        for (t, v) in rows {
            out.push_str(&format!("{}\t{}\n", fmt_exact(t), fmt_exact(v)));
        }
    }
    if args.panel == Panel::Both {
        out.push('\n');
    }
    if args.panel != Panel::Upsilon {
        out.push_str("t\tupsilon_over_t\n");
        for (t, v) in f.ratio_samples() {
            out.push_str(&format!("{}\t{}\n", fmt_exact(t), fmt_exact(v)));
        }
    }
    Ok(out)
}

fn validate(args: &ValidateArgs) -> Result<String> {
    let e = args.input.expression()?;
    let mut out = String::new();
    let (c, iota) = match &e {
        KnotExpr::File(p) => {
            let l = load_complex(p)?;
            (l.complex, l.iota)
        }
        other => (realize_expr(other)?, None),
    };
    out.push_str(&format!(
        "complex `{}`: {} generators, valid\n",
        c.name(),
        c.len()
    ));
    if !is_knotlike(&c) {
        let (v, u) = tower_ranks(&c);
        return Err(cfk_core::Error::NotKnotLike(format!(
            "{}: localized ranks {v} (V) and {u} (U)",
            c.name()
        ))
        .into());
    }
    out.push_str("knot-like: yes\n");
    match iota {
        Some(i) => {
            verify_iota(&c, &i)?;
            out.push_str("iota: skew chain map of bidegree (0,0)\n");
        }
        None => out.push_str("iota: none\n"),
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<String> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Report(a) => report(a),
        Command::Plotdata(a) => plotdata(a),
        Command::Validate(a) => validate(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
