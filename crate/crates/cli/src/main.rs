use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chaingroup::braid::{flip_delta, garside, generator};
use chaingroup::finite::ln::{
    ln_cardinality_formula, ln_expected_structure, ln_group, validate_params, LnParams,
};
use chaingroup::finite::perm::{enum_perm_reps, DEFAULT_BUDGET};
use chaingroup::graph::{brute_enumerate, classify, generate, genus_audit, GraphClass};
use chaingroup::hom::{cabling_b3, cyclic_test, twisted_endo};
use chaingroup::homology::{
    build_chain, chain_product_square, extract_triple, lift_adjust, monodromy_rep, satisfies_lifted_relations,
    ExtractOutcome, SkewLattice,
};
use chaingroup::oracle::{are_equal, is_central};
use chaingroup::periodic::{abelian_image_audit, fixed_bound, order_bounds, rh_check, rh_enumerate, RamificationData};
use chaingroup::suite::run_suite;
use chaingroup::text;
use chaingroup::Error;

/// Exact checks on braid words, surface homology, finite quotients, graph
/// actions and branching data.
#[derive(Parser)]
#[command(name = "chaingroup", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Braid(BraidCmd),
    #[command(subcommand)]
    Hom(HomCmd),
    #[command(subcommand)]
    Homology(HomologyCmd),
    #[command(subcommand)]
    Ln(LnCmd),
    #[command(subcommand)]
    Perm(PermCmd),
    #[command(subcommand)]
    Graph(GraphCmd),
    #[command(subcommand)]
    Rh(RhCmd),
    /// Run a named bundle of checks.
    Suite { name: String },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Half twist Δ_n.
    Garside {
        #[arg(long)]
        n: usize,
    },
    /// δ = τ_1 ⋯ τ_{n-1}.
    Delta {
        #[arg(long)]
        n: usize,
    },
    /// τ_k with k read mod n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Equality of two words.
    Eq {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Whether a word is central.
    Central {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Exponent sum.
    Exp {
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
}

#[derive(Subcommand)]
enum HomCmd {
    /// Check the relations for a homomorphism file.
    Verify { file: String },
    /// τ_i ↦ γ τ_i^ε γ⁻¹ Δ_n^{2k}.
    Twist {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        gamma: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        k: i64,
    },
    /// Cabling map B_3 → B_{3k}.
    Cable {
        #[arg(long)]
        k: usize,
    },
    /// Whether all generator images coincide.
    Cyclic { file: String },
}

#[derive(Args)]
struct ChainArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand)]
enum HomologyCmd {
    /// Standard chain of k curves in genus g.
    Chain(ChainArgs),
    /// Transvections along the standard chain.
    Rep {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        eps: i8,
    },
    /// (T_1 ⋯ T_k)^{k+1} along the standard chain.
    Square(ChainArgs),
    /// Recover (chain, ε, V) from a matrix file.
    Extract { file: String },
    /// Equalize the twists of lifted generators.
    Lift { file: String },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    r: usize,
    #[arg(long = "M")]
    big_m: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    s: u64,
}

impl ParamArgs {
    fn params(&self) -> LnParams {
        LnParams::new(self.r, self.big_m, self.m, self.d, self.s)
    }
}

#[derive(Subcommand)]
enum LnCmd {
    Validate(ParamArgs),
    Card(ParamArgs),
    Snf(ParamArgs),
}

#[derive(Subcommand)]
enum PermCmd {
    /// All actions of B_n on k points.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep one representative per conjugacy class.
        #[arg(long)]
        dedup: bool,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    Classify {
        file: String,
    },
    /// Build the template graph, e.g. `--m 12 B 3 4 1`.
    Generate {
        #[arg(long)]
        m: usize,
        kind: String,
        a: usize,
        b: usize,
        c: usize,
    },
    /// Exhaustive list for m ≤ 8 edges.
    Brute {
        #[arg(long)]
        m: usize,
    },
    Audit {
        file: String,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand)]
enum RhCmd {
    Check {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        m: u64,
        /// Comma-separated preimage counts.
        #[arg(long, default_value = "")]
        branch: String,
        #[arg(long, allow_hyphen_values = true)]
        chiq: i64,
    },
    Enum {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        m: u64,
        /// Comma-separated quotient characteristics.
        #[arg(long, allow_hyphen_values = true)]
        chiq: String,
        #[arg(long)]
        max_points: Option<usize>,
    },
    Bounds {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        b: u64,
    },
    /// Fixed-point bound 2 + 2g/(m - 1).
    Fixed {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        m: u64,
    },
    /// Order and image inequalities for an abelian image of given shape.
    ImageAudit {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
    },
}

struct Report {
    lines: Vec<String>,
    ok: bool,
}

impl Report {
    fn new(ok: bool) -> Self {
        Report { lines: Vec::new(), ok }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.lines.push(s.into());
        self
    }

    fn block(mut self, s: &str) -> Self {
        self.lines.extend(s.lines().map(str::to_string));
        self
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn payload(path: &str) -> Result<String, Error> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn budget() -> Result<u64, Error> {
    match std::env::var("CHAINGROUP_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("CHAINGROUP_BUDGET={v} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn comma_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad list entry `{t}`"))))
        .collect()
}

fn braid(cmd: BraidCmd) -> Result<Report, Error> {
    Ok(match cmd {
        BraidCmd::Garside { n } => Report::new(true).line(format!("check=half-twist word={}", garside(n)?)),
        BraidCmd::Delta { n } => Report::new(true).line(format!("check=flip word={}", flip_delta(n)?)),
        BraidCmd::Gen { n, k } => Report::new(true).line(format!("check=generator k={k} word={}", generator(n, k)?)),
        BraidCmd::Eq { n, u, v } => {
            let (a, b) = (text::parse_word(n, &u)?, text::parse_word(n, &v)?);
            let eq = are_equal(&a, &b)?;
            Report::new(eq)
                .line(if eq { "equal" } else { "not-equal" })
                .line(format!("check=word-equality u=\"{u}\" v=\"{v}\" n={n} result={}", verdict(eq)))
        }
        BraidCmd::Central { n, w } => {
            let c = is_central(&text::parse_word(n, &w)?);
            Report::new(c)
                .line(if c { "central" } else { "not-central" })
                .line(format!("check=centrality w=\"{w}\" n={n} result={}", verdict(c)))
        }
        BraidCmd::Exp { n, w } => {
            let e = text::parse_word(n, &w)?.exponent();
            Report::new(true).line(format!("check=exponent-sum w=\"{w}\" n={n} exponent={e}"))
        }
    })
}

fn hom(cmd: HomCmd) -> Result<Report, Error> {
    Ok(match cmd {
        HomCmd::Verify { file } => {
            let h = text::parse_hom(&payload(&file)?)?;
            let ok = h.verify()?;
            Report::new(ok).line(format!(
                "check=homomorphism-relations n={} m={} result={}",
                h.source(),
                h.target(),
                verdict(ok)
            ))
        }
        HomCmd::Twist { n, gamma, eps, k } => {
            let g = text::parse_word(n, &gamma)?;
            let h = twisted_endo(n, &g, eps, k)?;
            let cyclic = cyclic_test(&h);
            Report::new(true).block(&h.to_string()).line(format!(
                "check=twisted-endo gamma=\"{gamma}\" eps={eps} k={k} relations=pass cyclic={cyclic}"
            ))
        }
        HomCmd::Cable { k } => {
            let h = cabling_b3(k)?;
            let sent = h.apply(&garside(3)?)?;
            let ok = are_equal(&sent, &garside(3 * k)?)?;
            Report::new(ok)
                .block(&h.to_string())
                .line(format!("check=cabling-half-twist k={k} relations=pass half_twist={}", verdict(ok)))
        }
        HomCmd::Cyclic { file } => {
            let h = text::parse_hom(&payload(&file)?)?;
            let c = cyclic_test(&h);
            Report::new(c).line(format!("check=cyclic-images result={}", verdict(c)))
        }
    })
}

fn homology(cmd: HomologyCmd) -> Result<Report, Error> {
    let lattice_chain = |a: &ChainArgs| -> Result<_, Error> {
        let l = SkewLattice::standard(a.g)?;
        let chain = build_chain(&l, a.k)?;
        Ok((l, chain))
    };
    Ok(match cmd {
        HomologyCmd::Chain(a) => {
            let (_, chain) = lattice_chain(&a)?;
            Report::new(true)
                .block(&text::format_chain(&chain))
                .line(format!("check=standard-chain g={} k={}", a.g, a.k))
        }
        HomologyCmd::Rep { chain: a, eps } => {
            let (l, chain) = lattice_chain(&a)?;
            let mut r = Report::new(true);
            for m in monodromy_rep(&l, &chain, eps)? {
                r = r.block(&text::format_matrix(&m));
            }
            r.line(format!("check=chain-transvections g={} k={} eps={eps}", a.g, a.k))
        }
        HomologyCmd::Square(a) => {
            let (l, chain) = lattice_chain(&a)?;
            Report::new(true)
                .block(&text::format_matrix(&chain_product_square(&l, &chain)?))
                .line(format!("check=chain-square g={} k={}", a.g, a.k))
        }
        HomologyCmd::Extract { file } => {
            let ms = text::parse_matrices(&payload(&file)?)?;
            let rank = ms.first().map_or(0, |m| m.rows());
            if rank == 0 || rank % 2 != 0 {
                return Err(Error::DimensionMismatch(format!("rank {rank} is not a positive even number")));
            }
            let l = SkewLattice::standard(rank / 2)?;
            match extract_triple(&l, &ms) {
                ExtractOutcome::Triple(t) => Report::new(true)
                    .block(&text::format_chain(&t.chain))
                    .line(format!("epsilon={}", t.epsilon))
                    .block(&text::format_matrix(&t.direction))
                    .line("check=transvection-triple result=triple"),
                ExtractOutcome::Cyclic => Report::new(true).line("check=transvection-triple result=cyclic"),
                ExtractOutcome::NotRecognized => {
                    Report::new(false).line("check=transvection-triple result=not-recognized")
                }
            }
        }
        HomologyCmd::Lift { file } => {
            let xs = text::parse_lifted(&payload(&file)?)?;
            let adjusted = lift_adjust(&xs)?;
            let ok = satisfies_lifted_relations(&adjusted);
            let mut r = Report::new(ok);
            for x in &adjusted {
                r = r.block(&text::format_lifted(x));
            }
            r.line(format!("check=lifted-relations result={}", verdict(ok)))
        }
    })
}

fn ln(cmd: LnCmd) -> Result<Report, Error> {
    Ok(match cmd {
        LnCmd::Validate(a) => {
            let p = a.params();
            let ok = validate_params(&p);
            Report::new(ok).line(format!("check=quotient-params params=\"{p}\" result={}", verdict(ok)))
        }
        LnCmd::Card(a) => {
            let p = a.params();
            let card = ln_group(&p)?.cardinality();
            let shown = card.as_ref().map_or("infinite".to_string(), ToString::to_string);
            let formula = ln_cardinality_formula(&p);
            let ok = card.as_ref() == Some(&formula);
            Report::new(ok)
                .line(shown.clone())
                .line(format!(
                    "check=quotient-order params=\"{p}\" order={shown} formula={formula} result={}",
                    verdict(ok)
                ))
        }
        LnCmd::Snf(a) => {
            let p = a.params();
            let inv = ln_group(&p)?;
            let expected = ln_expected_structure(&p);
            let ok = inv == expected;
            Report::new(ok).line(format!(
                "check=quotient-structure params=\"{p}\" {inv} expected=\"{expected}\" result={}",
                verdict(ok)
            ))
        }
    })
}

fn perm(cmd: PermCmd) -> Result<Report, Error> {
    let PermCmd::Enum { n, k, dedup } = cmd;
    let reps = enum_perm_reps(n, k, dedup, budget()?)?;
    let noncyclic = reps.iter().filter(|r| !r.is_cyclic()).count();
    let mut r = Report::new(true);
    for rep in &reps {
        let tag = if rep.is_cyclic() { "cyclic" } else { "noncyclic" };
        r = r.line(format!("{rep} tag={tag}"));
    }
    Ok(r.line(format!(
        "check=braid-actions n={n} k={k} dedup={dedup} count={} noncyclic={noncyclic}",
        reps.len()
    )))
}

fn graph(cmd: GraphCmd) -> Result<Report, Error> {
    Ok(match cmd {
        GraphCmd::Classify { file } => {
            let g = text::parse_graph(&payload(&file)?)?;
            let c = classify(&g)?;
            Report::new(true).line(format!("check=edge-transitive-class class=({c}) normalized=({})", c.normalized()))
        }
        GraphCmd::Generate { m, kind, a, b, c } => {
            let class = match kind.as_str() {
                "A" | "a" => GraphClass::TypeA { k: a, p: b, d: c },
                "B" | "b" => GraphClass::TypeB { k: a, l: b, d: c },
                _ => return Err(Error::Parse(format!("graph kind must be A or B, got `{kind}`"))),
            };
            let g = generate(&class, m)?;
            Report::new(true)
                .block(&text::format_graph(&g))
                .line(format!("check=template-graph class=({class}) m={m}"))
        }
        GraphCmd::Brute { m } => {
            let gs = brute_enumerate(m)?;
            let mut r = Report::new(true);
            for g in &gs {
                let c = classify(g)?;
                r = r.line(format!("class=({c}) vertices={}", g.vertices));
            }
            r.line(format!("check=exhaustive-graphs m={m} count={}", gs.len()))
        }
        GraphCmd::Audit { file, genus, b } => {
            let g = text::parse_graph(&payload(&file)?)?;
            let a = genus_audit(&g, genus, b)?;
            Report::new(a.feasible).line(format!("check=curve-system-genus genus={genus} b={b} {a}"))
        }
    })
}

fn rh(cmd: RhCmd) -> Result<Report, Error> {
    Ok(match cmd {
        RhCmd::Check { chi, m, branch, chiq } => {
            let d = RamificationData {
                chi_total: chi,
                m,
                branch: comma_list(&branch)?,
                chi_quotient: chiq,
            };
            let ok = rh_check(&d)?;
            Report::new(ok)
                .line(if ok { "feasible" } else { "infeasible" })
                .line(format!("check=branching-equation {d} result={}", verdict(ok)))
        }
        RhCmd::Enum { chi, m, chiq, max_points } => {
            let chis = comma_list(&chiq)?.into_iter().collect();
            let found = rh_enumerate(chi, m, &chis, max_points)?;
            let mut r = Report::new(true);
            for d in &found {
                r = r.line(d.to_string());
            }
            r.line(format!("check=branching-solutions chi={chi} m={m} count={}", found.len()))
        }
        RhCmd::Bounds { g, b } => {
            let o = order_bounds(g, b)?;
            Report::new(true).line(format!("check=order-bounds g={g} b={b} {o}"))
        }
        RhCmd::Fixed { g, m } => {
            Report::new(true).line(format!("check=fixed-point-bound g={g} m={m} bound={}", fixed_bound(g, m)?))
        }
        RhCmd::ImageAudit { r, m, d } => {
            let a = abelian_image_audit(r, m, d)?;
            let ok = a.order_contradiction();
            Report::new(ok)
                .block(&a.to_string())
                .line(format!("check=abelian-image r={r} m={m} d={d} contradiction={ok}"))
        }
    })
}

fn suite(name: &str) -> Result<Report, Error> {
    let lines = run_suite(name, budget()?)?;
    let passed = lines.iter().filter(|l| l.pass).count();
    let ok = passed == lines.len();
    let mut r = Report::new(ok);
    for l in &lines {
        r = r.line(l.to_string());
    }
    Ok(r.line(format!("suite={name} passed={passed} total={} result={}", lines.len(), verdict(ok))))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidStrandCount(_)
        | Error::IndexOutOfRange { .. }
        | Error::InvalidParameter(_)
        | Error::InvalidParams(_)
        | Error::DimensionMismatch(_)
        | Error::OutOfDomain(_)
        | Error::ChainTooLong { .. }
        | Error::Unsupported(_) => 2,
        Error::BudgetExceeded(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Braid(c) => braid(c),
        Cmd::Hom(c) => hom(c),
        Cmd::Homology(c) => homology(c),
        Cmd::Ln(c) => ln(c),
        Cmd::Perm(c) => perm(c),
        Cmd::Graph(c) => graph(c),
        Cmd::Rh(c) => rh(c),
        Cmd::Suite { name } => suite(&name),
    };
    match result {
        Ok(r) => {
            for l in r.lines {
                println!("{l}");
            }
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
