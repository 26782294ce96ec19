//! `kaxes`: relative K-groups of the coordinate axes, and the tools behind
//! them, from the command line.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kaxes_core::drw::{big_decompose, Symbol};
use kaxes_core::kgroups::{self, exponent_check, ExponentCheck};
use kaxes_core::nerve::{self, CyclicWord, PointedMonoid};
use kaxes_core::selftest::{self, Limits};
use kaxes_core::trtc::{self, Representation};
use kaxes_core::witt::{self, WittRing};
use kaxes_core::{arith, BaseRing, Evaluation, FinAbGroup, GradedSum};

mod render;

use render::{Rendered, TextTable};

#[derive(Parser, Debug)]
#[command(
    name = "kaxes",
    version,
    about = "Relative K-theory of k[x,y]/(xy) over finite fields"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputMode::Json, global = true)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relative K-groups K_q(A, I)
    Kgroup(KgroupArgs),
    /// Relative topological cyclic homology TC_q(A, B, I; p)
    Tc(TcArgs),
    /// Equivariant TR groups
    Tr(TrArgs),
    /// Big de Rham-Witt decompositions
    Drw {
        #[command(subcommand)]
        action: DrwAction,
    },
    /// p-typical Witt vectors over finite fields
    Witt {
        #[command(subcommand)]
        action: WittAction,
    },
    /// Cyclic bar construction of the coordinate-axes monoid
    Nerve {
        #[command(subcommand)]
        action: NerveAction,
    },
    /// Run the invariant suite
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct KgroupArgs {
    #[command(subcommand)]
    action: Option<KgroupAction>,

    /// Degree q
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,

    /// Base ring: fq:P:F, sym-fp:P or sym-q
    #[arg(long, default_value = "fq:2:1")]
    base: String,

    /// Emit the formal sum of big de Rham-Witt groups instead of a group
    #[arg(long)]
    symbolic: bool,

    /// With --symbolic, expand big symbols into p-typical ones
    #[arg(long, requires = "symbolic")]
    expand: bool,
}

#[derive(Subcommand, Debug)]
enum KgroupAction {
    /// K_0 through K_N
    Table {
        #[arg(long)]
        qmax: i64,
        #[arg(long, default_value = "fq:2:1")]
        base: String,
    },
    /// Compare the exponent of K_{2n} over F_p with p^s, p^{s-1} ≤ n < p^s
    Exponent {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        nmax: u64,
    },
}

#[derive(Args, Debug)]
struct TcArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    /// Base ring fq:P:F; defaults to the prime field
    #[arg(long)]
    base: Option<String>,
}

#[derive(Args, Debug)]
struct TrArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    /// Level n of TR^n
    #[arg(long)]
    n: u32,
    /// Compute TR^n_{q-λ_I}(k; p) for λ_I = C(1) ⊕ … ⊕ C(I) instead of the
    /// birelative group
    #[arg(long)]
    lambda: Option<u64>,
    #[arg(long)]
    base: Option<String>,
}

#[derive(Subcommand, Debug)]
enum DrwAction {
    /// Split 𝐖_mΩ^j into p-typical factors W_{s(m,d)}Ω^j
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        j: i64,
    },
}

#[derive(Subcommand, Debug)]
enum WittAction {
    /// Additive group of W_s(F_{p^f}) by enumeration
    Group {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        f: u32,
        #[arg(long)]
        s: usize,
        /// Maximum number of ring elements to enumerate
        #[arg(long, default_value_t = witt::DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
    },
    /// Sum of two vectors of W_s(F_p): the first s values are a, the next s are b
    Add(WittBinary),
    /// Product of two vectors of W_s(F_p)
    Mul(WittBinary),
}

#[derive(Args, Debug)]
struct WittBinary {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: usize,
    /// Coordinates a_0 … a_{s-1} b_0 … b_{s-1}
    #[arg(num_args = 1.., allow_negative_numbers = true)]
    coords: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum NerveAction {
    /// Integral homology of the component of one cyclical word
    Homology {
        #[arg(long)]
        word: String,
    },
    /// Cyclical words of a given length with their periods
    Words {
        #[arg(long)]
        length: usize,
    },
    /// Compare every component of length ≤ M with its predicted homology
    Check {
        #[arg(long)]
        maxlen: usize,
    },
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Ranges to sweep
    #[arg(long, value_enum, default_value_t = Budget::Full)]
    budget: Budget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Budget {
    Full,
    Quick,
}

fn parse_base(s: &str) -> Result<BaseRing> {
    Ok(s.parse()?)
}

fn base_or_prime_field(base: &Option<String>, p: u64) -> Result<BaseRing> {
    match base {
        Some(s) => parse_base(s),
        None => Ok(BaseRing::prime_field(p)?),
    }
}

fn render_evaluation(eval: Evaluation) -> Rendered {
    match eval {
        Evaluation::Group(g) => Rendered::new(&g, g.to_string()),
        Evaluation::Symbolic(s) => Rendered::new(&s, s.to_string()),
    }
}

#[derive(Serialize)]
struct GroupWithTerms<'a> {
    group: &'a FinAbGroup,
    graded: &'a GradedSum,
}

fn group_with_terms(eval: Evaluation, graded: GradedSum) -> Result<Rendered> {
    let group = eval.into_group()?;
    let text = format!("{group}\n  = {graded}");
    Ok(Rendered::new(
        &GroupWithTerms {
            group: &group,
            graded: &graded,
        },
        text,
    ))
}

fn kgroup(args: KgroupArgs) -> Result<Rendered> {
    if let Some(action) = args.action {
        return match action {
            KgroupAction::Table { qmax, base } => kgroup_table(qmax, &parse_base(&base)?),
            KgroupAction::Exponent { p, nmax } => kgroup_exponent(p, nmax),
        };
    }
    let q = args
        .q
        .ok_or_else(|| anyhow!("kgroup needs --q (or one of the subcommands table, exponent)"))?;
    let base = parse_base(&args.base)?;
    if args.symbolic {
        let sum = kgroups::k_relative_symbolic(q);
        let sum = match (args.expand, base.characteristic()) {
            (false, _) => sum,
            (true, Some(p)) => sum.expand_big(p)?,
            (true, None) => bail!("--expand needs a base of positive characteristic"),
        };
        return Ok(Rendered::new(&sum, sum.to_string()));
    }
    Ok(render_evaluation(kgroups::k_relative(q, &base)?))
}

#[derive(Serialize)]
struct TableRow {
    q: i64,
    group: FinAbGroup,
}

#[derive(Serialize)]
struct KTable {
    base: String,
    groups: Vec<TableRow>,
}

fn kgroup_table(qmax: i64, base: &BaseRing) -> Result<Rendered> {
    if qmax < 0 {
        bail!("--qmax must be non-negative");
    }
    let groups = (0..=qmax)
        .map(|q| {
            Ok(TableRow {
                q,
                group: kgroups::k_relative(q, base)?.into_group()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut text = TextTable::new(["q", "K_q(A, I)"]);
    for row in &groups {
        text.row([row.q.to_string(), row.group.to_string()]);
    }
    Ok(Rendered::new(
        &KTable {
            base: base.to_string(),
            groups,
        },
        text.finish(),
    ))
}

#[derive(Serialize)]
struct ExponentReport {
    p: u64,
    nmax: u64,
    all_match: bool,
    checks: Vec<ExponentCheck>,
}

fn kgroup_exponent(p: u64, nmax: u64) -> Result<Rendered> {
    arith::require_prime(p)?;
    if nmax == 0 {
        bail!("--nmax must be positive");
    }
    let checks = (1..=nmax)
        .map(|n| exponent_check(n, p))
        .collect::<kaxes_core::Result<Vec<_>>>()?;
    let all_match = checks.iter().all(|c| c.matches);
    let mut text = TextTable::new(["n", "claimed", "computed", "match"]);
    for c in &checks {
        text.row([
            c.n.to_string(),
            c.claimed.to_string(),
            c.computed.to_string(),
            c.matches.to_string(),
        ]);
    }
    Ok(Rendered::new(
        &ExponentReport {
            p,
            nmax,
            all_match,
            checks,
        },
        text.finish(),
    ))
}

fn tc(args: TcArgs) -> Result<Rendered> {
    let base = base_or_prime_field(&args.base, args.p)?;
    let eval = trtc::tc(args.q, args.p, &base)?;
    group_with_terms(eval, trtc::tc_graded(args.q, args.p)?)
}

fn tr(args: TrArgs) -> Result<Rendered> {
    let base = base_or_prime_field(&args.base, args.p)?;
    let graded = match args.lambda {
        Some(i) => trtc::tr_graded(args.q, &Representation::lambda(i), args.n, args.p)?,
        None => trtc::tr_birelative_graded(args.q, args.n, args.p)?,
    };
    let eval = match args.lambda {
        // the graded sum is p-primary by construction; evaluate it directly
        Some(_) => {
            if base.characteristic() != Some(args.p)
                || matches!(base, BaseRing::SymbolicRegularFp { .. })
            {
                bail!("--lambda needs a finite field of characteristic {}", args.p);
            }
            kaxes_core::drw::evaluate(&graded, &base)?
        }
        None => trtc::tr_birelative(args.q, args.n, args.p, &base)?,
    };
    group_with_terms(eval, graded)
}

#[derive(Serialize)]
struct Factor {
    d: u64,
    s: i64,
    j: i64,
}

fn drw(action: DrwAction) -> Result<Rendered> {
    let DrwAction::Decompose { p, m, j } = action;
    let factors: Vec<Factor> = big_decompose(m, j, p)?
        .into_iter()
        .map(|(d, sym)| match sym {
            Symbol::PTypical { s, j } => Ok(Factor { d, s, j }),
            other => Err(anyhow!("unexpected factor {other}")),
        })
        .collect::<Result<_>>()?;
    let mut text = TextTable::new(["d", "factor"]);
    for f in &factors {
        text.row([
            f.d.to_string(),
            Symbol::PTypical { s: f.s, j: f.j }.to_string(),
        ]);
    }
    Ok(Rendered::new(&factors, text.finish()))
}

fn witt(action: WittAction) -> Result<Rendered> {
    match action {
        WittAction::Group { p, f, s, budget } => {
            if budget == 0 {
                bail!("--budget must be positive");
            }
            let g = WittRing::new(p, f, s)?.group_structure(budget)?;
            Ok(Rendered::new(&g, g.to_string()))
        }
        WittAction::Add(args) => witt_binary(args, |r, a, b| r.add(a, b)),
        WittAction::Mul(args) => witt_binary(args, |r, a, b| r.mul(a, b)),
    }
}

fn witt_binary(
    args: WittBinary,
    op: impl Fn(&WittRing, &witt::WittVector, &witt::WittVector) -> kaxes_core::Result<witt::WittVector>,
) -> Result<Rendered> {
    let ring = WittRing::prime_field(args.p, args.s)?;
    if args.coords.len() != 2 * args.s {
        bail!(
            "expected {} coordinates (a then b), got {}",
            2 * args.s,
            args.coords.len()
        );
    }
    let (a, b) = args.coords.split_at(args.s);
    let c = op(&ring, &ring.from_residues(a)?, &ring.from_residues(b)?)?.residues();
    let text = c
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    Ok(Rendered::new(&c, format!("({text})")))
}

#[derive(Serialize)]
struct ComponentReport {
    word: String,
    length: usize,
    period: usize,
    homology: Vec<FinAbGroup>,
    prediction: Option<Vec<FinAbGroup>>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

impl ComponentReport {
    fn of(word: &CyclicWord) -> Result<Self> {
        let complex = nerve::component_complex(word)?;
        complex.check_boundary_squared()?;
        let homology = complex.homology()?;
        let prediction = if word.period() >= 2 {
            Some(nerve::predicted_homology(word)?)
        } else {
            None
        };
        let matches = prediction.as_ref().map(|p| *p == homology);
        Ok(ComponentReport {
            word: word.representative(),
            length: word.len(),
            period: word.period(),
            homology,
            prediction,
            matches,
        })
    }

    fn text(&self) -> String {
        let mut text = TextTable::new(["degree", "homology", "predicted"]);
        for (n, h) in self.homology.iter().enumerate() {
            let predicted = self
                .prediction
                .as_ref()
                .map_or("-".to_string(), |p| p[n].to_string());
            text.row([n.to_string(), h.to_string(), predicted]);
        }
        let verdict = match self.matches {
            Some(true) => "matches prediction",
            Some(false) => "DIFFERS from prediction",
            None => "no prediction for period 1",
        };
        format!(
            "{} (length {}, period {}): {verdict}\n{}",
            self.word,
            self.length,
            self.period,
            text.finish()
        )
    }
}

#[derive(Serialize)]
struct WordEntry {
    word: String,
    period: usize,
}

#[derive(Serialize)]
struct CheckSummary {
    word: String,
    period: usize,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct NerveCheck {
    maxlen: usize,
    components: Vec<CheckSummary>,
    wedge_decomposition: bool,
    hochschild: bool,
    all_match: bool,
}

fn nerve(action: NerveAction) -> Result<(Rendered, bool)> {
    match action {
        NerveAction::Homology { word } => {
            let report = ComponentReport::of(&CyclicWord::parse(&word)?)?;
            Ok((Rendered::new(&report, report.text()), true))
        }
        NerveAction::Words { length } => {
            if length == 0 {
                bail!("--length must be positive");
            }
            let words: Vec<WordEntry> = nerve::enumerate_cyclic_words(length)?
                .iter()
                .map(|w| WordEntry {
                    word: w.representative(),
                    period: w.period(),
                })
                .collect();
            let mut text = TextTable::new(["word", "period"]);
            for w in &words {
                text.row([w.word.clone(), w.period.to_string()]);
            }
            Ok((Rendered::new(&words, text.finish()), true))
        }
        NerveAction::Check { maxlen } => {
            if maxlen == 0 {
                bail!("--maxlen must be positive");
            }
            let mut components = Vec::new();
            for m in 1..=maxlen {
                for w in nerve::enumerate_cyclic_words(m)?
                    .iter()
                    .filter(|w| w.period() >= 2)
                {
                    let r = ComponentReport::of(w)?;
                    components.push(CheckSummary {
                        word: r.word,
                        period: r.period,
                        matches: r.matches == Some(true),
                    });
                }
            }
            let small = maxlen.min(4);
            let wedge_decomposition = nerve::wedge_decomposition_check(maxlen.min(6))?;
            let hochschild = hochschild_matches(small)?;
            let all_match =
                components.iter().all(|c| c.matches) && wedge_decomposition && hochschild;
            let mut text = TextTable::new(["word", "period", "match"]);
            for c in &components {
                text.row([c.word.clone(), c.period.to_string(), c.matches.to_string()]);
            }
            let text = format!(
                "{}\nwedge decomposition (length ≤ {}): {wedge_decomposition}\nHochschild oracle (N = {small}): {hochschild}",
                text.finish(),
                maxlen.min(6)
            );
            let report = NerveCheck {
                maxlen,
                components,
                wedge_decomposition,
                hochschild,
                all_match,
            };
            Ok((Rendered::new(&report, text), all_match))
        }
    }
}

fn hochschild_matches(n: usize) -> Result<bool> {
    let hh = nerve::hochschild_homology(&PointedMonoid::pi2(n as u32), n, Some(n as u32))?;
    let mut sum = vec![FinAbGroup::zero(); n + 1];
    let mut words = vec![CyclicWord::empty()];
    for m in 1..=n {
        words.extend(nerve::enumerate_cyclic_words(m)?);
    }
    for w in &words {
        for (deg, g) in nerve::component_homology(w)?
            .into_iter()
            .enumerate()
            .take(n + 1)
        {
            sum[deg] = sum[deg].direct_sum(&g);
        }
    }
    Ok(hh == sum)
}

fn run_selftest(args: SelftestArgs) -> (Rendered, bool) {
    let limits = match args.budget {
        Budget::Full => Limits::full(),
        Budget::Quick => Limits::quick(),
    };
    let report = selftest::run(&limits);
    let text = report
        .checks
        .iter()
        .map(|c| {
            format!(
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let ok = report.all_passed();
    (Rendered::new(&report, text), ok)
}

fn dispatch(command: Command) -> Result<(Rendered, bool)> {
    let ok = |r: Rendered| (r, true);
    Ok(match command {
        Command::Kgroup(args) => ok(kgroup(args)?),
        Command::Tc(args) => ok(tc(args)?),
        Command::Tr(args) => ok(tr(args)?),
        Command::Drw { action } => ok(drw(action)?),
        Command::Witt { action } => ok(witt(action)?),
        Command::Nerve { action } => nerve(action)?,
        Command::Selftest(args) => run_selftest(args),
    })
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<kaxes_core::Error>() {
        Some(e) if e.is_internal() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok((rendered, passed)) => {
            let body = match cli.output {
                OutputMode::Json => &rendered.json,
                OutputMode::Text => &rendered.text,
            };
            // a closed pipe on the reading side is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if passed {
                ExitCode::SUCCESS
            } else {
                // a failed invariant is reported like an internal error
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
