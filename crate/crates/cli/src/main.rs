use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use kabelian::cardinality::{build_graph, class_members, class_size};
use kabelian::factors::{k_abelian_equivalent, psi};
use kabelian::fixtures::{cycle_labels, fixtures};
use kabelian::necklace::{
    enumerate_necklaces, gray_decode, gray_encode, gray_search, gray_verify, hamiltonian_path,
    longest_path, necklace_count, necklace_graph, quotient, validate_decomposition, DeBruijn,
    GrayCode, PathSearch, QuotientGraph, SearchOptions,
};
use kabelian::periodicity::min_rotation;
use kabelian::scan::DEFAULT_GUARD;
use kabelian::singletons::{enumerate_types, factorize_singleton, is_singleton, singleton_count, singleton_list};
use kabelian::switching::{apply_switching, enumerate_switchings, parse_indices, switching_class};
use kabelian::{Alphabet, Word};

const DEFAULT_BUDGET: u64 = kabelian::necklace::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "kabelian", version, about = "k-abelian equivalence, singletons, necklaces and Gray codes")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Factor length k.
    #[arg(long, global = true, default_value_t = 2)]
    k: usize,
    /// Word length or graph order.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Alphabet symbols, e.g. "ab". Defaults to the symbols of the input
    /// words, or "01" when there are none.
    #[arg(long, global = true)]
    alphabet: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest number of words an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    guard: u128,
    /// Worker threads for enumerations.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Node budget for path searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counts of the length-k factors of a word.
    Psi {
        word: String,
        /// List zero counts too.
        #[arg(long)]
        dense: bool,
    },
    /// Whether two words are k-abelian equivalent.
    Equiv { u: String, v: String },
    #[command(subcommand)]
    Switch(SwitchCmd),
    #[command(subcommand)]
    Class(ClassCmd),
    #[command(subcommand)]
    Singleton(SingletonCmd),
    #[command(subcommand)]
    Necklace(NecklaceCmd),
    #[command(subcommand)]
    Db(DbCmd),
    #[command(subcommand)]
    Decomp(DecompCmd),
    #[command(subcommand)]
    Ng(NgCmd),
    #[command(subcommand)]
    Gray(GrayCmd),
    /// Replays the built-in reference cases.
    Selftest,
}

/// k-switchings.
#[derive(Subcommand)]
enum SwitchCmd {
    /// Applies the switching "i,j,l,m".
    Apply { word: String, indices: String },
    /// Lists every valid switching and its result.
    Enum { word: String },
    /// The closure of a word under switchings.
    Class { word: String },
}

/// k-abelian classes.
#[derive(Subcommand)]
enum ClassCmd {
    /// Exact class sizes; "-" reads words from stdin.
    Size { words: Vec<String> },
    /// Members of the class in lexicographic order.
    Enum { word: String },
    /// The factor multigraph of a word.
    Graph { word: String },
}

/// k-abelian singletons.
#[derive(Subcommand)]
enum SingletonCmd {
    /// Whether each word is a singleton; "-" reads words from stdin.
    Check { words: Vec<String> },
    /// Number of singletons of length n.
    Count,
    /// Singletons of length n.
    List,
    /// Run factorization of singletons; "-" reads words from stdin.
    Factorize { words: Vec<String> },
    /// Distinct types of singletons of length n.
    Types,
}

#[derive(Subcommand)]
enum NecklaceCmd {
    /// Number of necklaces of length n over the alphabet.
    Count,
    /// Least representatives of the necklaces of length n.
    List,
}

#[derive(Subcommand)]
enum DbCmd {
    /// The de Bruijn graph of order n.
    Export,
}

#[derive(Subcommand)]
enum DecompCmd {
    /// Checks a list of cycle labels, separated by commas or spaces, as a
    /// vertex-disjoint cycle set of the de Bruijn graph of order n.
    Verify { labels: Vec<String> },
}

/// Binary necklace graphs.
#[derive(Subcommand)]
enum NgCmd {
    Build,
    /// Searches for a Hamiltonian path.
    Ham,
    /// Searches for a longest path.
    Longest,
}

/// Gray codes for binary necklaces, as hex flip positions.
#[derive(Subcommand)]
enum GrayCmd {
    Decode { code: String },
    /// Encodes necklaces given in order; "-" reads them from stdin.
    Encode { necklaces: Vec<String> },
    Verify { code: String },
    /// Searches for a code of order n starting at 0^n.
    Search,
}

enum Failure {
    Domain(String),
    Limit(String),
    Fixture(String),
}

impl From<kabelian::Error> for Failure {
    fn from(e: kabelian::Error) -> Self {
        match e {
            kabelian::Error::GuardExceeded { .. } | kabelian::Error::BudgetExceeded(_) => Failure::Limit(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(w) = cli.opts.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let (out, code) = match run(&cli) {
        Ok(out) => (out, 0),
        Err(Failure::Domain(msg)) => (format!("error: {msg}\n"), 1),
        Err(Failure::Limit(msg)) => (format!("error: {msg}\n"), 2),
        Err(Failure::Fixture(report)) => (report, 3),
    };
    if code == 0 || code == 3 {
        let _ = io::stdout().write_all(out.as_bytes());
    } else {
        let _ = io::stderr().write_all(out.as_bytes());
    }
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome {
    let o = &cli.opts;
    if o.guard == 0 {
        return Err(domain("--guard must be positive"));
    }
    if o.k == 0 {
        return Err(kabelian::Error::ZeroK.into());
    }
    match &cli.cmd {
        Cmd::Psi { word, dense } => cmd_psi(o, word, *dense),
        Cmd::Equiv { u, v } => {
            let a = alphabet(o, [u.as_str(), v.as_str()])?;
            let eq = k_abelian_equivalent(&a.parse(u)?, &a.parse(v)?, o.k)?;
            Ok(emit_scalar(o, eq))
        }
        Cmd::Switch(c) => cmd_switch(o, c),
        Cmd::Class(c) => cmd_class(o, c),
        Cmd::Singleton(c) => cmd_singleton(o, c),
        Cmd::Necklace(c) => cmd_necklace(o, c),
        Cmd::Db(DbCmd::Export) => {
            let n = need_n(o)?;
            let g = DeBruijn::new(&alphabet(o, [])?, n, o.guard)?;
            match o.format {
                Format::Json => {
                    let vertices: Vec<String> = (0..g.vertex_count()).map(|v| g.word(v).to_string()).collect();
                    let edges: Vec<Value> = (0..g.vertex_count())
                        .flat_map(|v| g.successors(v).map(move |w| (v, w)).collect::<Vec<_>>())
                        .map(|(v, w)| json!([g.word(v).to_string(), g.word(w).to_string()]))
                        .collect();
                    Ok(json_line(&json!({"vertices": vertices, "edges": edges})))
                }
                Format::Dot | Format::Plain => Ok(g.to_dot()),
                Format::Csv => {
                    let mut out = String::from("from,to\n");
                    for v in 0..g.vertex_count() {
                        for w in g.successors(v) {
                            out.push_str(&format!("{},{}\n", g.word(v), g.word(w)));
                        }
                    }
                    Ok(out)
                }
            }
        }
        Cmd::Decomp(DecompCmd::Verify { labels }) => cmd_decomp(o, labels),
        Cmd::Ng(c) => cmd_ng(o, c),
        Cmd::Gray(c) => cmd_gray(o, c),
        Cmd::Selftest => {
            let mut out = String::new();
            let mut failed = 0;
            for f in fixtures() {
                match (f.check)() {
                    Ok(()) => out.push_str(&format!("ok    {}\n", f.name)),
                    Err(e) => {
                        failed += 1;
                        out.push_str(&format!("FAIL  {}: {e}\n", f.name));
                    }
                }
            }
            if failed > 0 {
                out.push_str(&format!("{failed} fixture(s) failed\n"));
                Err(Failure::Fixture(out))
            } else {
                Ok(out)
            }
        }
    }
}

fn need_n(o: &Opts) -> Result<usize, Failure> {
    o.n.ok_or_else(|| domain("this command needs --n"))
}

fn alphabet<'a>(o: &Opts, texts: impl IntoIterator<Item = &'a str>) -> Result<Alphabet, Failure> {
    if let Some(symbols) = &o.alphabet {
        return Ok(Alphabet::new(symbols.chars())?);
    }
    let texts: Vec<&str> = texts.into_iter().collect();
    if texts.iter().all(|t| t.is_empty()) {
        return Ok(Alphabet::binary());
    }
    Ok(Alphabet::inferred(texts)?)
}

/// Positional words, or stdin lines when the only argument is "-".
fn read_words(args: &[String]) -> Result<Vec<String>, Failure> {
    if args.len() == 1 && args[0] == "-" {
        let mut out = Vec::new();
        for line in io::stdin().lock().lines() {
            let line = line.map_err(|e| domain(e.to_string()))?;
            let line = line.trim();
            if !line.is_empty() {
                out.push(line.to_string());
            }
        }
        return Ok(out);
    }
    if args.is_empty() {
        return Err(domain("no words given"));
    }
    Ok(args.to_vec())
}

fn parse_all(a: &Alphabet, words: &[String]) -> Result<Vec<Word>, Failure> {
    words.iter().map(|w| a.parse(w).map_err(Failure::from)).collect()
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn emit_scalar(o: &Opts, value: impl ToString + Into<Value>) -> String {
    match o.format {
        Format::Json => json_line(&value.into()),
        _ => format!("{}\n", value.to_string()),
    }
}

fn emit_list<T: ToString>(o: &Opts, header: &str, items: impl IntoIterator<Item = T>) -> Outcome {
    let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    match o.format {
        Format::Json => Ok(json_line(&json!(items))),
        Format::Csv => Ok(format!("{header}\n{}", lines(&items))),
        Format::Plain => Ok(lines(&items)),
        Format::Dot => Err(domain("dot output is not available for this command")),
    }
}

fn lines(items: &[String]) -> String {
    items.iter().map(|s| format!("{s}\n")).collect()
}

fn big_value(x: &num_bigint::BigUint) -> Value {
    match x.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn cmd_psi(o: &Opts, word: &str, dense: bool) -> Outcome {
    let a = alphabet(o, [word])?;
    let f = psi(&a.parse(word)?, o.k)?;
    let entries = if dense { f.dense(o.guard)? } else { f.iter().collect() };
    match o.format {
        Format::Json => Ok(json_line(&f.to_json(dense, o.guard)?)),
        Format::Csv => Ok(std::iter::once("factor,count".to_string())
            .chain(entries.iter().map(|(w, c)| format!("{w},{c}")))
            .map(|l| l + "\n")
            .collect()),
        Format::Plain => Ok(entries.iter().map(|(w, c)| format!("{w} {c}\n")).collect()),
        Format::Dot => Ok(build_graph(&f).to_dot()),
    }
}

fn cmd_switch(o: &Opts, c: &SwitchCmd) -> Outcome {
    match c {
        SwitchCmd::Apply { word, indices } => {
            let a = alphabet(o, [word.as_str()])?;
            let s = parse_indices(indices, o.k)?;
            let v = apply_switching(&a.parse(word)?, &s)?;
            Ok(emit_scalar(o, v.to_string()))
        }
        SwitchCmd::Enum { word } => {
            let a = alphabet(o, [word.as_str()])?;
            let u = a.parse(word)?;
            let mut rows = Vec::new();
            for s in enumerate_switchings(&u, o.k)? {
                rows.push((format!("{},{},{},{}", s.i, s.j, s.l, s.m), apply_switching(&u, &s)?.to_string()));
            }
            match o.format {
                Format::Json => Ok(json_line(&Value::Array(
                    rows.iter().map(|(s, r)| json!({"indices": s, "result": r})).collect(),
                ))),
                Format::Csv => Ok(std::iter::once("i,j,l,m,result\n".to_string())
                    .chain(rows.iter().map(|(s, r)| format!("{s},{r}\n")))
                    .collect()),
                Format::Plain => Ok(rows.iter().map(|(s, r)| format!("{s} {r}\n")).collect()),
                Format::Dot => Err(domain("dot output is not available for this command")),
            }
        }
        SwitchCmd::Class { word } => {
            let a = alphabet(o, [word.as_str()])?;
            emit_list(o, "word", switching_class(&a.parse(word)?, o.k)?)
        }
    }
}

fn cmd_class(o: &Opts, c: &ClassCmd) -> Outcome {
    match c {
        ClassCmd::Size { words } => {
            let words = read_words(words)?;
            let a = alphabet(o, words.iter().map(String::as_str))?;
            let parsed = parse_all(&a, &words)?;
            let sizes = parsed.iter().map(|w| class_size(w, o.k)).collect::<kabelian::Result<Vec<_>>>()?;
            match o.format {
                Format::Json => Ok(json_line(&Value::Array(
                    words.iter().zip(&sizes).map(|(w, s)| json!({"word": w, "size": big_value(s)})).collect(),
                ))),
                Format::Csv => Ok(std::iter::once("word,size\n".to_string())
                    .chain(words.iter().zip(&sizes).map(|(w, s)| format!("{w},{s}\n")))
                    .collect()),
                Format::Plain if words.len() == 1 => Ok(format!("{}\n", sizes[0])),
                Format::Plain => Ok(words.iter().zip(&sizes).map(|(w, s)| format!("{w} {s}\n")).collect()),
                Format::Dot => Err(domain("dot output is not available for this command")),
            }
        }
        ClassCmd::Enum { word } => {
            let a = alphabet(o, [word.as_str()])?;
            emit_list(o, "word", class_members(&a.parse(word)?, o.k, o.guard)?)
        }
        ClassCmd::Graph { word } => {
            let a = alphabet(o, [word.as_str()])?;
            let g = build_graph(&psi(&a.parse(word)?, o.k)?);
            match o.format {
                Format::Json => Ok(json_line(&g.to_json())),
                Format::Dot | Format::Plain => Ok(g.to_dot()),
                Format::Csv => Ok(std::iter::once("from,to,mult\n".to_string())
                    .chain(g.edges().map(|(x, y, m)| format!("{},{},{m}\n", g.vertices()[x], g.vertices()[y])))
                    .collect()),
            }
        }
    }
}

fn cmd_singleton(o: &Opts, c: &SingletonCmd) -> Outcome {
    match c {
        SingletonCmd::Check { words } => {
            let words = read_words(words)?;
            let a = alphabet(o, words.iter().map(String::as_str))?;
            let parsed = parse_all(&a, &words)?;
            let flags = parsed.iter().map(|w| is_singleton(w, o.k)).collect::<kabelian::Result<Vec<_>>>()?;
            match o.format {
                Format::Json => Ok(json_line(&Value::Array(
                    words.iter().zip(&flags).map(|(w, f)| json!({"word": w, "singleton": f})).collect(),
                ))),
                Format::Csv => Ok(std::iter::once("word,singleton\n".to_string())
                    .chain(words.iter().zip(&flags).map(|(w, f)| format!("{w},{f}\n")))
                    .collect()),
                Format::Plain if words.len() == 1 => Ok(format!("{}\n", flags[0])),
                Format::Plain => Ok(words.iter().zip(&flags).map(|(w, f)| format!("{w} {f}\n")).collect()),
                Format::Dot => Err(domain("dot output is not available for this command")),
            }
        }
        SingletonCmd::Count => {
            let n = need_n(o)?;
            let count = singleton_count(n, o.k, &alphabet(o, [])?, o.guard)?;
            Ok(emit_scalar(o, count as u64))
        }
        SingletonCmd::List => {
            let n = need_n(o)?;
            emit_list(o, "word", singleton_list(n, o.k, &alphabet(o, [])?, o.guard)?)
        }
        SingletonCmd::Factorize { words } => {
            let words = read_words(words)?;
            let a = alphabet(o, words.iter().map(String::as_str))?;
            let parsed = parse_all(&a, &words)?;
            let fs = parsed.iter().map(|w| factorize_singleton(w, o.k)).collect::<kabelian::Result<Vec<_>>>()?;
            match o.format {
                Format::Json if fs.len() == 1 => Ok(json_line(&fs[0].to_json())),
                Format::Json => Ok(json_line(&Value::Array(fs.iter().map(|f| f.to_json()).collect()))),
                Format::Csv => Ok(std::iter::once("word,factorization\n".to_string())
                    .chain(words.iter().zip(&fs).map(|(w, f)| format!("{w},{f}\n")))
                    .collect()),
                Format::Plain => Ok(fs.iter().map(|f| format!("{f}\n")).collect()),
                Format::Dot => Err(domain("dot output is not available for this command")),
            }
        }
        SingletonCmd::Types => {
            let n = need_n(o)?;
            let types = enumerate_types(n, o.k, &alphabet(o, [])?, o.guard)?;
            match o.format {
                Format::Json => Ok(json_line(&Value::Array(types.iter().map(|t| t.to_json()).collect()))),
                _ => emit_list(o, "type", &types),
            }
        }
    }
}

fn cmd_necklace(o: &Opts, c: &NecklaceCmd) -> Outcome {
    let n = need_n(o)?;
    let a = alphabet(o, [])?;
    match c {
        NecklaceCmd::Count => {
            let count = necklace_count(a.size(), n);
            match o.format {
                Format::Json => Ok(json_line(&big_value(&count))),
                _ => Ok(format!("{count}\n")),
            }
        }
        NecklaceCmd::List => emit_list(o, "necklace", enumerate_necklaces(&a, n, o.guard)?),
    }
}

fn cmd_decomp(o: &Opts, labels: &[String]) -> Outcome {
    let n = need_n(o)?;
    let raw = read_words(labels)?;
    let texts: Vec<&str> = raw
        .iter()
        .flat_map(|l| l.split([',', ' ', '\t']))
        .filter(|t| !t.is_empty())
        .collect();
    let a = match &o.alphabet {
        Some(_) => alphabet(o, [])?,
        None => Alphabet::binary(),
    };
    let labels = cycle_labels(&texts.join(","), &a)?;
    let d = validate_decomposition(&a, &labels, n, o.guard)?;
    let q = quotient(&d);
    let listed: Vec<usize> = (0..labels.len()).collect();
    let ordered = d.is_maximal() && q.is_hamiltonian_path(&listed);
    match o.format {
        Format::Json => {
            let mut v = d.to_json();
            v["maximal"] = json!(d.is_maximal());
            v["listed_order_is_path"] = json!(ordered);
            Ok(json_line(&v))
        }
        Format::Dot => Ok(q.to_dot()),
        Format::Csv => Ok(format!(
            "cycles,leftover,maximal,listed_order_is_path\n{},{},{},{ordered}\n",
            d.cycles().len(),
            d.leftover().len(),
            d.is_maximal()
        )),
        Format::Plain => Ok(format!(
            "cycles: {}\nleftover: {}\nmaximal: {}\nlisted order is a path: {ordered}\n",
            d.cycles().len(),
            d.leftover().len(),
            d.is_maximal()
        )),
    }
}

fn path_names(g: &QuotientGraph, path: &[usize]) -> Vec<String> {
    path.iter().map(|&b| g.name(b).to_string()).collect()
}

fn cmd_ng(o: &Opts, c: &NgCmd) -> Outcome {
    let n = need_n(o)?;
    let g = necklace_graph(&Alphabet::binary(), n, o.guard)?;
    let options = SearchOptions {
        budget: o.budget,
        start: None,
    };
    match c {
        NgCmd::Build => match o.format {
            Format::Json => Ok(json_line(&g.to_json())),
            Format::Dot => Ok(g.to_dot()),
            Format::Csv => Ok(std::iter::once("a,b\n".to_string())
                .chain(g.edges().iter().map(|&(x, y)| format!("{},{}\n", g.name(x), g.name(y))))
                .collect()),
            Format::Plain => Ok(g.edges().iter().map(|&(x, y)| format!("{} {}\n", g.name(x), g.name(y))).collect()),
        },
        NgCmd::Ham => match hamiltonian_path(&g, options) {
            PathSearch::Found(p) => match o.format {
                Format::Json => Ok(json_line(&json!({"status": "found", "path": path_names(&g, &p)}))),
                _ => emit_list(o, "necklace", path_names(&g, &p)),
            },
            PathSearch::Absent => match o.format {
                Format::Json => Ok(json_line(&json!({"status": "absent"}))),
                _ => Ok("absent\n".into()),
            },
            PathSearch::BudgetExceeded => Err(kabelian::Error::BudgetExceeded(o.budget).into()),
        },
        NgCmd::Longest => {
            let found = longest_path(&g, options);
            let names = path_names(&g, &found.path);
            let out = match o.format {
                Format::Json => json_line(&json!({
                    "path": names,
                    "length": found.path.len(),
                    "complete": found.complete,
                    "upper_bound": found.upper_bound,
                    "nodes": found.nodes,
                })),
                _ => emit_list(o, "necklace", &names)?,
            };
            if found.complete {
                Ok(out)
            } else {
                let _ = io::stdout().write_all(out.as_bytes());
                Err(Failure::Limit(format!(
                    "search budget of {} nodes exhausted; best path has {} vertices",
                    o.budget,
                    found.path.len()
                )))
            }
        }
    }
}

fn cmd_gray(o: &Opts, c: &GrayCmd) -> Outcome {
    match c {
        GrayCmd::Decode { code } => {
            let n = need_n(o)?;
            let order = gray_decode(&GrayCode::parse(code, n)?)?;
            emit_list(o, "necklace", order)
        }
        GrayCmd::Encode { necklaces } => {
            let words = read_words(necklaces)?;
            let a = Alphabet::binary();
            let order = parse_all(&a, &words)?
                .iter()
                .map(min_rotation)
                .collect::<kabelian::Result<Vec<_>>>()?;
            Ok(emit_scalar(o, gray_encode(&order)?.to_string()))
        }
        GrayCmd::Verify { code } => {
            let n = need_n(o)?;
            let ok = GrayCode::parse(code, n)
                .and_then(|c| gray_decode(&c))
                .map(|order| gray_verify(&order))
                .unwrap_or(false);
            Ok(emit_scalar(o, ok))
        }
        GrayCmd::Search => {
            let n = need_n(o)?;
            Ok(emit_scalar(o, gray_search(n, o.budget)?.to_string()))
        }
    }
}
