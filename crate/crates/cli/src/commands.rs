//! Argument handling and the subcommands.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use syzcalc_core::division::divide;
use syzcalc_core::groebner::{buchberger, buchberger_criterion, pseudo_reduce, Criterion, GroebnerError, GroebnerOptions};
use syzcalc_core::polynomials::{ModuleMonomial, PolyVector, Term};
use syzcalc_core::resolutions::{free_resolution, schreyer_syzygies, syzygies_of_generators, ResolutionError};
use syzcalc_core::syzygies::{
    iterated_s_list, position_level_sets, s_list_with, syzygies_of_terms, syzygies_of_terms_bezout, IndexSet,
    LevelSetSyzygies, SyzygyError,
};

use crate::context::{
    parse_module_order, parse_order, parse_ring, parse_vars, Backend, Basis, ContextError, ModuleOrderKind,
    PolyContext,
};
use crate::format::format_polynomial;
use crate::problem::{parse_sources, read_problem, Headers, ProblemFile, Report, Section};
use crate::{EXIT_NONTERMINATION, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
use syzcalc_core::orders::BaseOrderKind;

#[derive(Parser, Debug)]
#[command(
    name = "syzcalc",
    version,
    about = "Gröbner bases, syzygies and free resolutions over ZZ, QQ and ZZ/n",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Coefficient ring: ZZ, QQ or ZZ/n.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Comma-separated variable names, most significant first.
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Rank m of the free module R[X]^m.
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Monomial order: lex, grlex or grevlex.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Module order: top or pot.
    #[arg(long = "module-order", global = true)]
    module_order: Option<String>,
    /// Emit JSON instead of a problem file.
    #[arg(long, global = true)]
    json: bool,
    /// Read the problem from this file instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Round limit for Buchberger's algorithm.
    #[arg(long = "max-rounds", global = true)]
    max_rounds: Option<usize>,
    /// Limit on the number of position level sets.
    #[arg(long = "level-set-cap", global = true)]
    level_set_cap: Option<usize>,
    /// Use only pair and annihilator syzygies of leading terms.
    #[arg(long, global = true)]
    bezout: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gröbner basis of the input vectors.
    Groebner {
        /// Pseudo-reduce the basis afterwards.
        #[arg(long = "pseudo-reduce")]
        pseudo_reduce: bool,
    },
    /// Divides the first vector by the rest.
    Divide,
    /// Generators of the syzygies of single-term inputs.
    SyzygiesOfTerms,
    /// The S-list of the inputs.
    Slist {
        /// Iterate q times instead: S^0 = f, S^(k+1) = S^k followed by S(S^k).
        #[arg(long, value_name = "Q")]
        iterate: Option<usize>,
    },
    /// Schreyer syzygies of a Gröbner basis.
    Schreyer {
        /// Treat the inputs as arbitrary generators and return their syzygies.
        #[arg(long)]
        generators: bool,
    },
    /// Free resolution of the quotient by the inputs.
    Resolution {
        /// Stage limit; defaults to the number of variables plus 2.
        #[arg(long = "max-stage")]
        max_stage: Option<usize>,
    },
    /// Tests Buchberger's criterion on the inputs.
    Check,
}

enum Failure {
    Usage(String),
    Parse(String),
    NonTermination { message: String, partial: Option<Report> },
}

impl From<SyzygyError> for Failure {
    fn from(e: SyzygyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn flag_or_header<T>(
    flag: Option<&str>,
    header: Option<&str>,
    parse: impl Fn(&str) -> Result<T, ContextError>,
) -> Result<Option<T>, Failure> {
    match (flag, header) {
        (Some(f), _) => parse(f).map(Some).map_err(|e| Failure::Usage(e.to_string())),
        (None, Some(h)) => parse(h).map(Some).map_err(|e| Failure::Parse(e.to_string())),
        (None, None) => Ok(None),
    }
}

fn build_context(common: &Common, h: &Headers) -> Result<PolyContext, Failure> {
    let ring = flag_or_header(common.ring.as_deref(), h.ring.as_deref(), parse_ring)?
        .ok_or_else(|| Failure::Usage("no ring given; use --ring or a `ring:` header".into()))?;
    let vars = flag_or_header(common.vars.as_deref(), h.vars.as_deref(), parse_vars)?.unwrap_or_default();
    let rank_flag = common.rank.map(|r| r.to_string());
    let rank = flag_or_header(rank_flag.as_deref(), h.rank.as_deref(), |s| {
        s.trim()
            .parse::<usize>()
            .ok()
            .filter(|&r| r >= 1)
            .ok_or_else(|| ContextError(format!("rank must be a positive integer, got `{s}`")))
    })?
    .unwrap_or(1);
    let order = flag_or_header(common.order.as_deref(), h.order.as_deref(), parse_order)?.unwrap_or(BaseOrderKind::Grlex);
    let module_order = flag_or_header(common.module_order.as_deref(), h.module_order.as_deref(), parse_module_order)?
        .unwrap_or(ModuleOrderKind::Top);
    let basis = match h.basis.as_deref().map(str::trim) {
        None | Some("e") => Basis::E,
        Some("s") => Basis::S,
        Some(b) => return Err(Failure::Parse(format!("unknown basis `{b}` (expected e or s)"))),
    };
    Ok(PolyContext {
        ring,
        vars,
        rank,
        order,
        module_order,
        basis,
    })
}

/// Runs `syzcalc` with the given arguments (program name first).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            } else {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(report) => {
            let _ = stdout.write_all(render(&report, cli.common.json).as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Parse(m)) => {
            let _ = writeln!(stderr, "parse error: {m}");
            EXIT_PARSE
        }
        Err(Failure::NonTermination { message, partial }) => {
            if let Some(r) = partial {
                let _ = stdout.write_all(render(&r, cli.common.json).as_bytes());
            }
            let _ = writeln!(stderr, "did not terminate: {message}");
            EXIT_NONTERMINATION
        }
    }
}

fn render(r: &Report, json: bool) -> String {
    if json {
        r.to_json()
    } else {
        r.to_text()
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let text = match &cli.common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let file = read_problem(&text).map_err(|e| Failure::Parse(e.to_string()))?;
    let ctx = build_context(&cli.common, &file.headers)?;
    with_backend!(ctx.ring, |ring| Job { ring, cli, ctx: &ctx, file: &file }.run())
}

struct Job<'a, R: Backend> {
    ring: R,
    cli: &'a Cli,
    ctx: &'a PolyContext,
    file: &'a ProblemFile,
}

fn syzygy_label<T: std::fmt::Display>(l: Option<&T>) -> Option<String> {
    l.map(|l| l.to_string())
}

impl<R: Backend> Job<'_, R> {
    fn options(&self) -> GroebnerOptions<R> {
        let c = &self.cli.common;
        let mut o = GroebnerOptions::<R>::default();
        if let Some(r) = c.max_rounds {
            o = o.max_rounds(r);
        }
        if let Some(cap) = c.level_set_cap {
            o.level_set_cap = cap;
        }
        if c.bezout {
            o = o.bezout();
        }
        o
    }

    fn inputs(&self) -> Result<Vec<PolyVector<R::Elem>>, Failure> {
        let h = self.ctx.module(self.ring.clone());
        parse_sources(&self.file.polynomials, self.ctx, &h).map_err(|e| Failure::Parse(e.to_string()))
    }

    fn run(&self) -> Result<Report, Failure> {
        match &self.cli.command {
            Command::Groebner { pseudo_reduce } => self.groebner(*pseudo_reduce),
            Command::Divide => self.divide(),
            Command::SyzygiesOfTerms => self.syzygies_of_terms(),
            Command::Slist { iterate } => self.slist(*iterate),
            Command::Schreyer { generators } => self.schreyer(*generators),
            Command::Resolution { max_stage } => self.resolution(*max_stage),
            Command::Check => self.check(),
        }
    }

    fn section_of(&self, name: &str, ctx: &PolyContext, vs: &[PolyVector<R::Elem>]) -> Section {
        let mut s = Section::new(name, ctx.clone());
        for v in vs {
            s.push(v, None);
        }
        s
    }

    fn groebner_failure(&self, e: GroebnerError<R::Elem>) -> Failure {
        match e {
            GroebnerError::RoundLimitExceeded { partial, report } => {
                let mut r = Report::new("groebner-partial", self.section_of("basis", self.ctx, &partial.elements));
                r.note(format!(
                    "round limit reached after {} rounds; partial basis of {} elements",
                    report.rounds,
                    partial.elements.len()
                ));
                r.info.insert("rounds".into(), report.rounds.into());
                r.info.insert("terminated".into(), false.into());
                Failure::NonTermination {
                    message: e_text(report.rounds),
                    partial: Some(r),
                }
            }
            other => Failure::Usage(other.to_string()),
        }
    }

    fn resolution_failure(&self, e: ResolutionError<R>) -> Failure {
        match e {
            ResolutionError::Groebner(g) => self.groebner_failure(g),
            ResolutionError::StageLimitExceeded { partial } => {
                let message = format!("stage limit reached after {} stages", partial.stages.len());
                let mut r = self.resolution_report("resolution-partial", &partial);
                r.info.insert("terminated".into(), false.into());
                Failure::NonTermination {
                    message,
                    partial: Some(r),
                }
            }
            other => Failure::Usage(other.to_string()),
        }
    }

    fn groebner(&self, reduce: bool) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let (gb, rep) = buchberger(&h, &fs, &self.options()).map_err(|e| self.groebner_failure(e))?;
        let gb = if reduce { pseudo_reduce(&h, &gb) } else { gb };
        let mut r = Report::new("groebner", self.section_of("basis", self.ctx, &gb.elements));
        r.note(format!(
            "gröbner basis: {} elements after {} rounds{}",
            gb.elements.len(),
            rep.rounds,
            if reduce { ", pseudo-reduced" } else { "" }
        ));
        r.info.insert("rounds".into(), rep.rounds.into());
        r.info.insert("terminated".into(), true.into());
        Ok(r)
    }

    fn divide(&self) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let (u, divisors) = fs
            .split_first()
            .filter(|(_, d)| !d.is_empty())
            .ok_or_else(|| Failure::Usage("divide needs a dividend followed by at least one divisor".into()))?;
        let d = divide(&h, u, divisors).map_err(|e| Failure::Usage(e.to_string()))?;
        let mut main = Section::new("remainder", self.ctx.clone());
        main.push(&d.remainder, Some("remainder".into()));
        let scalar_ctx = self.ctx.with_rank(1, Basis::E);
        let mut qs = Section::new("quotients", scalar_ctx);
        for (j, q) in d.quotients.iter().enumerate() {
            qs.push(q, Some(format!("q{}", j + 1)));
        }
        let mut r = Report::new("division", main);
        r.sections.push(qs);
        Ok(r)
    }

    fn terms(&self, fs: &[PolyVector<R::Elem>]) -> Result<Vec<Term<R::Elem>>, Failure> {
        fs.iter()
            .enumerate()
            .map(|(j, f)| match f.terms() {
                [t] => Ok(t.clone()),
                _ => Err(Failure::Usage(format!("input {} is not a single nonzero term", j + 1))),
            })
            .collect()
    }

    fn lcm_text(&self, m: &ModuleMonomial) -> String {
        let h = self.ctx.module(self.ring.clone());
        format_polynomial(&h.monomial_vector(self.ring.one(), m.monomial.clone(), m.position), self.ctx)
    }

    fn syzygies_of_terms(&self) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let terms = self.terms(&self.inputs()?)?;
        let opts = self.options();
        let ms: Vec<ModuleMonomial> = terms.iter().map(|t| t.monomial.clone()).collect();
        let sets = position_level_sets(&ms, opts.level_set_cap)?;
        let levels: Vec<LevelSetSyzygies<R::Elem>> = if self.cli.common.bezout {
            syzygies_of_terms_bezout(&h, &terms, opts.level_set_cap)?
        } else {
            syzygies_of_terms(&h, &terms, opts.level_set_cap)?
        };
        let syz_ctx = self.ctx.with_rank(terms.len(), Basis::S);
        let syz = syz_ctx.module(self.ring.clone());
        let mut main = Section::new("syzygies", syz_ctx);
        for l in &levels {
            for v in &l.vectors {
                main.push(&syz.from_components(&v.entries), syzygy_label(v.label.as_ref()));
            }
        }
        let mut r = Report::new("syzygies-of-terms", main);
        let names: Vec<String> = sets.iter().map(IndexSet::to_string).collect();
        r.note(format!("position level sets: {}", names.join(", ")));
        for l in &levels {
            r.note(format!("{}: lcm {}, {} syzygies", l.set, self.lcm_text(&l.lcm), l.vectors.len()));
        }
        r.info.insert("level_sets".into(), serde_json::json!(names));
        Ok(r)
    }

    fn slist(&self, iterate: Option<usize>) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let opts = self.options();
        let items = match iterate {
            Some(q) => iterated_s_list(&h, q, &fs, opts.level_set_cap)?,
            None => s_list_with(&h, &fs, opts.level_set_cap, opts.term_syzygies)?,
        };
        let mut main = Section::new("s-list", self.ctx.clone());
        for it in &items {
            main.push(&it.vector, syzygy_label(it.label.as_ref()));
        }
        let mut r = Report::new("s-list", main);
        r.note(match iterate {
            Some(q) => format!("iterated s-list S^{q}: {} items", items.len()),
            None => format!("s-list: {} items", items.len()),
        });
        Ok(r)
    }

    fn schreyer(&self, generators: bool) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let opts = self.options();
        let syz_ctx = self.ctx.with_rank(fs.len().max(1), Basis::S);
        let syz = syz_ctx.module(self.ring.clone());
        let mut main = Section::new("syzygies", syz_ctx.clone());
        let mut r;
        if generators {
            let out = syzygies_of_generators(&h, &fs, &opts).map_err(|e| self.resolution_failure(e))?;
            for v in &out {
                main.push(&syz.from_components(&v.entries), syzygy_label(v.label.as_ref()));
            }
            r = Report::new("syzygies-of-generators", main);
            r.note(format!("{} generators of the syzygies of the inputs", out.len()));
        } else {
            let out = schreyer_syzygies(&h, &fs, &opts).map_err(|e| self.resolution_failure(e))?;
            let mut lts = Section::new("leading terms", syz_ctx);
            for s in &out.syzygies {
                main.push(&syz.resort(&s.vector), Some(s.label.to_string()));
                let lt = s.vector.leading_term().expect("syzygies are nonzero");
                lts.push(
                    &syz.monomial_vector(lt.coeff.clone(), lt.monomial.monomial.clone(), lt.monomial.position),
                    Some(s.label.to_string()),
                );
            }
            r = Report::new("schreyer", main);
            r.note(format!("{} schreyer syzygies; leading terms are taken in the schreyer order", out.syzygies.len()));
            r.sections.push(lts);
        }
        Ok(r)
    }

    fn stage_ctx(&self, k: usize, rank: usize) -> PolyContext {
        if k == 0 {
            self.ctx.clone()
        } else {
            self.ctx.with_rank(rank, Basis::S)
        }
    }

    fn resolution_report(&self, kind: &str, res: &syzcalc_core::resolutions::Resolution<R>) -> Report {
        let mut sections = Vec::new();
        for (k, stage) in res.stages.iter().enumerate() {
            let ctx = self.stage_ctx(k, stage.module.rank());
            let m = ctx.module(self.ring.clone());
            let gens: Vec<_> = stage.generators.iter().map(|g| m.resort(g)).collect();
            sections.push(self.section_of(&format!("stage {k}"), &ctx, &gens));
        }
        let last = sections.last().cloned().expect("at least one stage");
        let mut main = last;
        main.name = "V".into();
        let mut r = Report::new(kind, main);
        let ranks = res.ranks();
        r.note(format!(
            "ranks: {}",
            ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
        ));
        r.note(format!("length: {}", res.length()));
        for (k, stage) in res.stages.iter().enumerate() {
            if let Some(v) = stage.eliminated {
                r.note(format!("stage {k}: {} eliminated from the leading terms", self.ctx.vars[v]));
            }
        }
        r.note(if res.v_generators().is_empty() {
            "V = 0".to_string()
        } else {
            format!("V is generated by the {} vectors below", res.v_generators().len())
        });
        r.info.insert("ranks".into(), serde_json::json!(ranks));
        r.info.insert("length".into(), res.length().into());
        r.sections = sections;
        r
    }

    fn resolution(&self, max_stage: Option<usize>) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let limit = max_stage.unwrap_or(self.ctx.nvars() + 2);
        let res = free_resolution(&h, &fs, limit, &self.options()).map_err(|e| self.resolution_failure(e))?;
        let mut r = self.resolution_report("resolution", &res);
        r.info.insert("terminated".into(), true.into());
        Ok(r)
    }

    fn check(&self) -> Result<Report, Failure> {
        let h = self.ctx.module(self.ring.clone());
        let fs = self.inputs()?;
        let c = buchberger_criterion(&h, &fs, &self.options()).map_err(|e| self.groebner_failure(e))?;
        let mut main = Section::new("remainder", self.ctx.clone());
        let verdict = match &c {
            Criterion::Holds => "PASS",
            Criterion::Fails { label, remainder } => {
                main.push(remainder, syzygy_label(label.as_ref()));
                "FAIL"
            }
        };
        let mut r = Report::new("criterion", main);
        r.headline = Some(format!("criterion: {verdict}"));
        if let Criterion::Fails { label, .. } = &c {
            r.note(match label {
                Some(l) => format!("the S-list item from {l} leaves a nonzero remainder"),
                None => "an input leaves a nonzero remainder".to_string(),
            });
        }
        r.info.insert("criterion".into(), verdict.into());
        Ok(r)
    }
}

fn e_text(rounds: usize) -> String {
    format!("no Gröbner basis within {rounds} rounds")
}
