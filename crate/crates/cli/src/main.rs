//! `codecat`: command-line access to the neural-code toolkit.
//!
//! Exit codes: 0 success, 1 negative answer to a yes/no question, 2 usage or
//! input error, 3 refused because a resource cap would be exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use codecat::code::{parse_code, parse_codeword, Code};
use codecat::constructions::{
    coproduct, is_intersection_complete, is_max_intersection_complete, product,
};
use codecat::enumeration::{
    enumerate_cached, image_set_difference, verify_image_membership, EnumerationConfig, ImageCache,
    ImageSet, DEFAULT_MAX_TRUNKS,
};
use codecat::error::CodeError;
use codecat::golden::run_golden;
use codecat::morphism::{
    decompose, is_morphism, ExplicitMap, ExplicitMapJson, Morphism, MorphismJson,
};
use codecat::reduction::{canonical_form, is_isomorphic, minimum_neuron_number, reduce};
use codecat::ring::{coordinate, morphism_to_monomial_map, MonomialImage};
use codecat::topology::{local_obstruction_report, Tristate, Verdict};
use codecat::trunks::{all_trunks, irreducible_trunks, simple_trunks, Trunk};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "codecat",
    version,
    about = "Morphisms, trunks, reduction and image enumeration for combinatorial neural codes"
)]
#[command(
    after_help = "Codes are written compactly, e.g. \"{12,23,1,3,0}\" (0 is the empty word), \
optionally prefixed by \"n=K\", or as JSON lists such as [[1,2],[10]]. \
Arguments starting with @ are read from the named file.\n\n\
Exit codes: 0 success, 1 negative answer, 2 usage or input error, 3 resource cap exceeded."
)]
struct Cli {
    /// Write all output as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EnumArgs {
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Cache directory for image sets (default: $CODECAT_CACHE_DIR, else the user cache directory).
    #[arg(long, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Do not read or write the image-set cache.
    #[arg(long, conflicts_with = "cache")]
    no_cache: bool,
    /// Refuse codes with more trunks than this.
    #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_TRUNKS)]
    max_trunks: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a code and print it normalized.
    Parse { code: String },
    /// List the trunks of a code with their generators.
    Trunks {
        code: String,
        /// Only the simple trunks Tk(i).
        #[arg(long)]
        simple: bool,
    },
    /// List the irreducible trunks of a code.
    Irreducible { code: String },
    /// Reduce a code (drop trivial and redundant neurons).
    Reduce {
        code: String,
        /// Print the canonical form and its witness permutation instead.
        #[arg(long)]
        canonical: bool,
    },
    /// Minimum neuron number of a code.
    Minn { code: String },
    /// Decide whether two codes are isomorphic.
    Iso { a: String, b: String },
    /// Apply a morphism (JSON) to a codeword.
    Apply { morphism: String, word: String },
    /// Image of a morphism (JSON).
    Image { morphism: String },
    /// Decide whether an explicit map (JSON) is a morphism.
    IsMorphism { map: String },
    /// Trunk normal form of an explicit map (JSON).
    Decompose { map: String },
    /// Product of two codes.
    Product { a: String, b: String },
    /// Coproduct of two codes.
    Coproduct {
        a: String,
        b: String,
        /// Also include the empty word.
        #[arg(long)]
        with_empty: bool,
    },
    /// Decide whether a code is intersection complete.
    Intcomplete { code: String },
    /// Decide whether a code is max-intersection complete.
    Maxint { code: String },
    /// All reduced images of a code, up to isomorphism.
    Images {
        code: String,
        #[command(flatten)]
        opts: EnumArgs,
    },
    /// Reduced images of the target that are images of no baseline.
    DiffImages {
        target: String,
        #[arg(required = true)]
        baselines: Vec<String>,
        #[command(flatten)]
        opts: EnumArgs,
    },
    /// Find a morphism from SOURCE onto a code isomorphic to TARGET.
    Member {
        source: String,
        target: String,
        #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_TRUNKS)]
        max_trunks: usize,
    },
    /// Local obstruction report: links of missing faces.
    LocalObs { code: String },
    /// Coordinate functions and evaluation table of the neural ring.
    Ring { code: String },
    /// Monomial map (pullback) of a morphism (JSON).
    Functor {
        morphism: String,
        /// Codomain code (default: the image).
        #[arg(long)]
        codomain: Option<String>,
    },
    /// Run the built-in table of worked examples.
    Selftest,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::ResourceCap { .. } => Failure::Cap(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// A command's answer in both renderings; `negative` selects exit code 1.
struct Reply {
    text: String,
    json: Value,
    negative: bool,
}

impl Reply {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Reply {
            text: text.into(),
            json,
            negative: false,
        }
    }

    fn predicate(answer: bool) -> Self {
        Reply {
            text: answer.to_string(),
            json: Value::Bool(answer),
            negative: !answer,
        }
    }
}

type Outcome = Result<Reply, Failure>;

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
        }
        None => Ok(arg.to_string()),
    }
}

fn code_arg(arg: &str) -> Result<Code, Failure> {
    Ok(parse_code(&read_arg(arg)?)?)
}

fn json_arg<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, Failure> {
    let text = read_arg(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("bad {what} JSON: {e}")))
}

fn morphism_arg(arg: &str) -> Result<Morphism, Failure> {
    Ok(Morphism::from_json(json_arg::<MorphismJson>(
        arg, "morphism",
    )?)?)
}

fn map_arg(arg: &str) -> Result<ExplicitMap, Failure> {
    Ok(json_arg::<ExplicitMapJson>(arg, "map")?.into_map()?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn code_json(c: &Code) -> Value {
    to_json(c)
}

fn codes_text(codes: &[Code]) -> String {
    codes
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn generator_text(t: &Trunk) -> String {
    t.generator().map_or("-".to_string(), |g| g.to_string())
}

fn trunk_table(code: &Code, trunks: &[Trunk], labels: Option<&[usize]>) -> Reply {
    let mut text = String::new();
    for (k, t) in trunks.iter().enumerate() {
        let members: Vec<String> = t.words(code).map(|w| w.to_string()).collect();
        let members = format!("{{{}}}", members.join(","));
        match labels {
            Some(l) => writeln!(
                text,
                "Tk({}) = {members}  generator {}",
                l[k],
                generator_text(t)
            ),
            None => writeln!(text, "{}: {members}", generator_text(t)),
        }
        .unwrap();
    }
    let json: Vec<Value> = trunks.iter().map(|t| to_json(&t.to_json(code))).collect();
    Reply::new(text.trim_end(), Value::Array(json))
}

fn morphism_text(f: &Morphism) -> String {
    let mut text = String::new();
    for (j, t) in f.trunks().iter().enumerate() {
        match t.generator() {
            Some(g) => writeln!(text, "T{} = Tk({g})", j + 1),
            None => writeln!(text, "T{} = empty", j + 1),
        }
        .unwrap();
    }
    text.trim_end().to_string()
}

fn enumeration_setup(opts: &EnumArgs) -> (EnumerationConfig, Option<ImageCache>) {
    let cfg = EnumerationConfig {
        max_trunks: opts.max_trunks,
        jobs: opts.jobs,
    };
    let cache = if opts.no_cache {
        None
    } else {
        opts.cache
            .clone()
            .or_else(ImageCache::default_dir)
            .map(ImageCache::new)
    };
    (cfg, cache)
}

/// Runs `f` with the cache, retrying without it if the cache is unusable.
fn with_cache<T>(
    cache: Option<ImageCache>,
    f: impl Fn(Option<&ImageCache>) -> codecat::error::Result<T>,
) -> Result<T, Failure> {
    match f(cache.as_ref()) {
        Err(CodeError::Cache(msg)) => {
            eprintln!("warning: image cache unavailable ({msg}); continuing without it");
            Ok(f(None)?)
        }
        other => Ok(other?),
    }
}

fn monomial_text(a: &MonomialImage) -> String {
    match a {
        MonomialImage::Zero => "0".into(),
        MonomialImage::Mono(s) if s.is_empty() => "1".into(),
        MonomialImage::Mono(s) => format!("x_{s}"),
    }
}

fn run(cmd: Command) -> Outcome {
    Ok(match cmd {
        Command::Parse { code } => {
            let c = code_arg(&code)?;
            Reply::new(c.to_string(), code_json(&c))
        }
        Command::Trunks { code, simple } => {
            let c = code_arg(&code)?;
            if simple {
                let (labels, trunks): (Vec<usize>, Vec<Trunk>) =
                    simple_trunks(&c).into_iter().unzip();
                trunk_table(&c, &trunks, Some(&labels))
            } else {
                trunk_table(&c, &all_trunks(&c), None)
            }
        }
        Command::Irreducible { code } => {
            let c = code_arg(&code)?;
            trunk_table(&c, &irreducible_trunks(&c), None)
        }
        Command::Reduce { code, canonical } => {
            let c = code_arg(&code)?;
            if canonical {
                let cf = canonical_form(&c);
                let text = format!("{}\nwitness {:?}", cf.code, cf.witness.to_one_based());
                Reply::new(text, to_json(&cf))
            } else {
                let r = reduce(&c);
                Reply::new(r.reduced.to_string(), to_json(&r))
            }
        }
        Command::Minn { code } => {
            let n = minimum_neuron_number(&code_arg(&code)?);
            Reply::new(n.to_string(), json!(n))
        }
        Command::Iso { a, b } => Reply::predicate(is_isomorphic(&code_arg(&a)?, &code_arg(&b)?)),
        Command::Apply { morphism, word } => {
            let f = morphism_arg(&morphism)?;
            let w = f.apply(parse_codeword(&word)?)?;
            Reply::new(w.to_string(), to_json(&w))
        }
        Command::Image { morphism } => {
            let image = morphism_arg(&morphism)?.image();
            Reply::new(image.to_string(), code_json(&image))
        }
        Command::IsMorphism { map } => Reply::predicate(is_morphism(&map_arg(&map)?)),
        Command::Decompose { map } => {
            let f = decompose(&map_arg(&map)?)?;
            Reply::new(morphism_text(&f), to_json(&f))
        }
        Command::Product { a, b } => {
            let p = product(&code_arg(&a)?, &code_arg(&b)?)?;
            Reply::new(p.to_string(), code_json(&p))
        }
        Command::Coproduct { a, b, with_empty } => {
            let p = coproduct(&code_arg(&a)?, &code_arg(&b)?, with_empty)?;
            Reply::new(p.to_string(), code_json(&p))
        }
        Command::Intcomplete { code } => {
            Reply::predicate(is_intersection_complete(&code_arg(&code)?))
        }
        Command::Maxint { code } => {
            Reply::predicate(is_max_intersection_complete(&code_arg(&code)?))
        }
        Command::Images { code, opts } => {
            let c = code_arg(&code)?;
            let (cfg, cache) = enumeration_setup(&opts);
            let set: ImageSet = with_cache(cache, |cache| enumerate_cached(&c, &cfg, cache))?;
            eprintln!(
                "{} images; {} subsets explored, {} pruned, {} ms",
                set.images.len(),
                set.stats.subsets_explored,
                set.stats.subsets_pruned,
                set.stats.wall_time_ms
            );
            Reply::new(codes_text(&set.images), to_json(&set))
        }
        Command::DiffImages {
            target,
            baselines,
            opts,
        } => {
            let t = code_arg(&target)?;
            let bs = baselines
                .iter()
                .map(|b| code_arg(b))
                .collect::<Result<Vec<_>, _>>()?;
            let (cfg, cache) = enumeration_setup(&opts);
            let diff = with_cache(cache, |cache| image_set_difference(&t, &bs, &cfg, cache))?;
            eprintln!(
                "{} images of the target are images of no baseline",
                diff.len()
            );
            Reply::new(
                codes_text(&diff),
                Value::Array(diff.iter().map(code_json).collect()),
            )
        }
        Command::Member {
            source,
            target,
            max_trunks,
        } => {
            let cfg = EnumerationConfig {
                max_trunks,
                jobs: None,
            };
            match verify_image_membership(&code_arg(&source)?, &code_arg(&target)?, &cfg)? {
                Some(f) => {
                    let text = format!("{}\nimage {}", morphism_text(&f), f.image());
                    Reply::new(text, to_json(&f))
                }
                None => Reply::predicate(false),
            }
        }
        Command::LocalObs { code } => {
            let report = local_obstruction_report(&code_arg(&code)?)?;
            let mut text = String::new();
            for l in &report.missing {
                let facets: Vec<String> = l.link_facets.iter().map(|f| f.to_string()).collect();
                let mut betti = vec![l.betti.minus_one.to_string()];
                betti.extend(l.betti.ranks.iter().map(|r| r.to_string()));
                let verdict = match l.verdict {
                    Verdict::ObstructionFirstKind => "obstruction (first kind)",
                    Verdict::NoObstruction => "no obstruction",
                    Verdict::ContractibilityUnknown => {
                        "obstruction (second kind), contractibility unknown"
                    }
                };
                writeln!(
                    text,
                    "σ={:<8} link facets {{{}}}  collapsible={}  betti(-1..)=[{}]  {verdict}",
                    l.sigma,
                    facets.join(","),
                    l.collapsible,
                    betti.join(",")
                )
                .unwrap();
            }
            let good = match report.locally_good {
                Tristate::Yes => "yes",
                Tristate::No => "no",
                Tristate::Unknown => "unknown",
            };
            write!(
                text,
                "{} missing faces; locally great: {}; locally good: {good}",
                report.missing.len(),
                report.locally_great
            )
            .unwrap();
            Reply::new(text, to_json(&report))
        }
        Command::Ring { code } => {
            let c = code_arg(&code)?;
            let mut text = String::new();
            let mut coords = Vec::new();
            for i in 1..=c.n() {
                let x = coordinate(&c, i)?;
                let support = x.support();
                let shown: Vec<String> = support.iter().map(|w| w.to_string()).collect();
                writeln!(text, "x_{i} = 1 on {{{}}}", shown.join(",")).unwrap();
                coords.push(json!({ "neuron": i, "support": support }));
            }
            // Evaluation table: row c lists x_i(c); ρ_c is the row's indicator.
            let header: Vec<String> = (1..=c.n()).map(|i| format!("x_{i}")).collect();
            writeln!(text, "{:<10} {}", "word", header.join(" ")).unwrap();
            let mut rows = Vec::new();
            for &w in c.words() {
                let vals: Vec<u8> = (1..=c.n()).map(|i| w.contains(i) as u8).collect();
                let cells: Vec<String> = vals
                    .iter()
                    .zip(&header)
                    .map(|(v, h)| format!("{v:<width$}", width = h.len()))
                    .collect();
                writeln!(
                    text,
                    "{:<10} {}",
                    format!("ρ_{w}"),
                    cells.join(" ").trim_end()
                )
                .unwrap();
                rows.push(json!({ "word": w, "values": vals }));
            }
            Reply::new(
                text.trim_end(),
                json!({ "coordinates": coords, "indicators": rows }),
            )
        }
        Command::Functor { morphism, codomain } => {
            let f = morphism_arg(&morphism)?;
            let d = codomain.as_deref().map(code_arg).transpose()?;
            let phi = morphism_to_monomial_map(&f, d.as_ref())?;
            let mut text = String::new();
            for (j, a) in phi.assignment().iter().enumerate() {
                writeln!(text, "y_{} ↦ {}", j + 1, monomial_text(a)).unwrap();
            }
            Reply::new(text.trim_end(), to_json(&phi))
        }
        Command::Selftest => {
            let outcomes = run_golden();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let mut text = String::new();
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                writeln!(text, "{status}  {:<28} {}", o.id, o.description).unwrap();
                if let Some(d) = &o.detail {
                    writeln!(text, "      {d}").unwrap();
                }
            }
            write!(text, "{} passed, {failed} failed", outcomes.len() - failed).unwrap();
            Reply {
                text,
                json: to_json(&outcomes),
                negative: failed > 0,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(reply) => {
            if cli.json {
                println!("{}", reply.json);
            } else if !reply.text.is_empty() {
                println!("{}", reply.text);
            }
            ExitCode::from(if reply.negative { 1 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
