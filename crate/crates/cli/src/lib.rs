//! The `modrep` command line: argument parsing, dispatch to `modrep-core`,
//! and canonical JSON / aligned text rendering.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modrep_core::{
    frobenius_twist, Character, Context, Coroot, KElement, LatticeMode, Series, Weight,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Library operation → the one subcommand that exposes it.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("build_root_system", "rs info"),
    ("pairing", "rs info"),
    ("is_dominant", "rs info"),
    ("is_restricted", "rs info"),
    ("in_root_lattice", "rs info"),
    ("dot_multiply", "rs info"),
    ("steinberg_split", "rs info"),
    ("generate", "rs info"),
    ("act", "rs info"),
    ("dot_act", "rs info"),
    ("dominant_representative", "rs info"),
    ("weyl_character", "char weyl"),
    ("class_to_char", "char weyl"),
    ("steinberg_char", "char weyl"),
    ("tensor", "char tensor"),
    ("frobenius_twist", "char twist"),
    ("euler_characteristic", "char euler"),
    ("contract_weights", "char contract"),
    ("char_to_class", "class decompose"),
    ("char_to_class_peeling", "class decompose"),
    ("tensor_delta_expansion", "class tensor-delta"),
    ("steinberg_forward", "class st-forward"),
    ("steinberg_inverse", "class st-inverse"),
    ("frobenius_contract_class", "class contract"),
    ("steinberg_delta_multiplicity", "class contract"),
    ("pr_block", "class pr-block"),
    ("linked", "linkage test"),
    ("fundamental_alcove_rep", "linkage rep"),
    ("alcove_position", "linkage rep"),
    ("block_decompose", "linkage blocks"),
    ("is_special_point", "linkage special"),
    ("st_level", "linkage special"),
    ("simple_character_a1", "simple a1"),
    ("decompose_in_simple_basis_a1", "simple a1"),
];

#[derive(Debug, Parser)]
#[command(name = "modrep", version, about = "Characters and Grothendieck-group classes for the Steinberg block")]
pub struct Cli {
    #[command(subcommand)]
    group: Group,
    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Alternating sum over the Weyl group.
    Alt,
    /// Highest-weight peeling.
    Peel,
}

fn parse_series(s: &str) -> Result<Series, String> {
    s.parse().map_err(|e: modrep_core::Error| e.to_string())
}

fn parse_lattice(s: &str) -> Result<LatticeMode, String> {
    s.parse().map_err(|e: modrep_core::Error| e.to_string())
}

#[derive(Debug, Args)]
struct Options {
    /// Root system series (A–G).
    #[arg(long = "type", global = true, default_value = "A", value_parser = parse_series)]
    series: Series,
    #[arg(long, global = true, default_value_t = 1)]
    rank: usize,
    /// The characteristic; must be prime.
    #[arg(long, global = true)]
    p: Option<i64>,
    /// `sc` (weight lattice) or `adj` (root lattice).
    #[arg(long, global = true, default_value = "sc", value_parser = parse_lattice)]
    lattice: LatticeMode,
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: OutputFormat,
    /// Weight as `1,2` or `[1,2]`; repeat where two weights are needed.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Vec<String>,
    /// Class JSON: `{"terms":[{"w":[..],"coeff":k}]}`.
    #[arg(long = "class", global = true)]
    class: Option<String>,
    /// Character JSON: `{"weights":[{"w":[..],"mult":k}]}`; repeat for tensor.
    #[arg(long = "char", global = true)]
    chars: Vec<String>,
    /// Twist or functor degree.
    #[arg(long, global = true)]
    r: Option<u32>,
    /// Weyl group word, 1-based simple reflection indices, e.g. `1,2,1`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    word: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "alt")]
    method: Method,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Root system and Weyl group data.
    Rs {
        #[command(subcommand)]
        cmd: RsCmd,
    },
    /// Operations on characters.
    Char {
        #[command(subcommand)]
        cmd: CharCmd,
    },
    /// Grothendieck-group classes in the Weyl-module basis.
    Class {
        #[command(subcommand)]
        cmd: ClassCmd,
    },
    /// Affine Weyl group linkage and alcoves.
    Linkage {
        #[command(subcommand)]
        cmd: LinkageCmd,
    },
    /// Simple characters (type A1 only).
    Simple {
        #[command(subcommand)]
        cmd: SimpleCmd,
    },
}

#[derive(Debug, Subcommand)]
enum RsCmd {
    /// Root datum, |W|, ℓ(w₀); with --weight also pairings and orbit data.
    Info,
}

#[derive(Debug, Subcommand)]
enum CharCmd {
    /// ch Δ(λ) for --weight, the character of --class, or ch St_r with only --p.
    Weyl,
    /// Product of two --char values.
    Tensor,
    /// Frobenius twist by p^r.
    Twist,
    /// Euler characteristic of induction from --weight.
    Euler,
    /// Keep the weights divisible by p and divide them.
    Contract,
}

#[derive(Debug, Subcommand)]
enum ClassCmd {
    /// Decompose --char in the Weyl-module basis.
    Decompose,
    /// [Δ(--weight) ⊗ M] for M with character --char.
    TensorDelta,
    /// Steinberg functor 𝓕^r.
    StForward,
    /// Inverse functor Hom_{G₁}(St, −)^{(−1)}.
    StInverse,
    /// Class of the Frobenius contraction; with --weight the single Steinberg multiplicity.
    Contract,
    /// Projection onto the block of --weight.
    PrBlock,
}

#[derive(Debug, Subcommand)]
enum LinkageCmd {
    /// Whether two --weight values are linked.
    Test,
    /// Closed-alcove representative and alcove position.
    Rep,
    /// Split --class into blocks.
    Blocks,
    /// Special-point test and Steinberg level.
    Special,
}

#[derive(Debug, Subcommand)]
enum SimpleCmd {
    /// ch L(--weight), or the simple-basis decomposition of --char.
    A1,
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<modrep_core::Error> for Failure {
    fn from(e: modrep_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CmdResult = Result<Rendered, Failure>;

struct Rendered {
    json: Value,
    text: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

fn render_char(ch: &Character) -> Rendered {
    Rendered { json: to_value(ch), text: ch.to_string() }
}

fn render_class(c: &KElement) -> Rendered {
    Rendered { json: to_value(c), text: c.to_string() }
}

fn render_fields(fields: Vec<(&str, Value)>) -> Rendered {
    let mut text = String::new();
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut map = serde_json::Map::new();
    for (k, v) in fields {
        let shown = match &v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let _ = writeln!(text, "{k:<width$}  {shown}");
        map.insert(k.to_owned(), v);
    }
    Rendered { json: Value::Object(map), text }
}

pub fn parse_weight(raw: &str, rank: usize) -> Result<Weight, String> {
    let trimmed = raw.trim();
    let coords: Vec<i64> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| format!("malformed weight {raw:?}: {e}"))?
    } else {
        trimmed
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("malformed weight {raw:?}: {e}"))?
    };
    if coords.len() != rank {
        return Err(format!("weight {raw:?} has {} coordinates, expected {rank}", coords.len()));
    }
    Ok(Weight::from(coords))
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

struct Session {
    ctx: Context,
    opts: Options,
}

impl Session {
    fn p(&self) -> Result<i64, Failure> {
        self.opts.p.ok_or_else(|| Failure::Usage("this subcommand needs --p".into()))
    }

    fn weights(&self) -> Result<Vec<Weight>, Failure> {
        self.opts
            .weight
            .iter()
            .map(|w| parse_weight(w, self.ctx.rank()).map_err(Failure::Usage))
            .collect()
    }

    fn weight(&self) -> Result<Weight, Failure> {
        match self.weights()?.as_slice() {
            [w] => Ok(w.clone()),
            [] => Err(Failure::Usage("this subcommand needs --weight".into())),
            _ => Err(Failure::Usage("expected exactly one --weight".into())),
        }
    }

    fn check_rank(&self, weights: impl IntoIterator<Item = Weight>) -> Result<(), Failure> {
        for w in weights {
            if w.rank() != self.ctx.rank() {
                return Err(Failure::Usage(format!(
                    "weight {w} has {} coordinates, expected {}",
                    w.rank(),
                    self.ctx.rank()
                )));
            }
        }
        Ok(())
    }

    fn class(&self) -> Result<KElement, Failure> {
        let raw = self.opts.class.as_deref().ok_or_else(|| Failure::Usage("this subcommand needs --class".into()))?;
        let c: KElement =
            serde_json::from_str(raw).map_err(|e| Failure::Usage(format!("malformed --class: {e}")))?;
        self.check_rank(c.weights().cloned())?;
        Ok(c)
    }

    fn chars(&self) -> Result<Vec<Character>, Failure> {
        let out: Vec<Character> = self
            .opts
            .chars
            .iter()
            .map(|raw| serde_json::from_str(raw).map_err(|e| Failure::Usage(format!("malformed --char: {e}"))))
            .collect::<Result<_, _>>()?;
        for c in &out {
            self.check_rank(c.weights().cloned())?;
        }
        Ok(out)
    }

    fn one_char(&self) -> Result<Character, Failure> {
        let mut v = self.chars()?;
        match v.len() {
            1 => Ok(v.remove(0)),
            0 => Err(Failure::Usage("this subcommand needs --char".into())),
            _ => Err(Failure::Usage("expected exactly one --char".into())),
        }
    }

    fn word(&self) -> Result<Option<Vec<usize>>, Failure> {
        let Some(raw) = self.opts.word.as_deref() else { return Ok(None) };
        let raw = raw.trim();
        if raw.is_empty() || raw == "[]" {
            return Ok(Some(Vec::new()));
        }
        let rank = self.ctx.rank();
        raw.trim_matches(|c| c == '[' || c == ']')
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
                _ => Err(Failure::Usage(format!("malformed --word {raw:?}: indices run from 1 to {rank}"))),
            })
            .collect::<Result<_, _>>()
            .map(Some)
    }

    fn rs_info(&self) -> CmdResult {
        let rs = self.ctx.root_system();
        let w = self.ctx.weyl_group();
        let mut fields = vec![
            ("root_system", to_value(&rs.id())),
            ("lattice", to_value(&self.ctx.lattice())),
            ("cartan", to_value(&rs.cartan())),
            ("positive_roots", to_value(&rs.positive_roots())),
            ("rho", to_value(rs.rho())),
            ("num_positive_roots", json!(rs.num_positive_roots())),
            ("weyl_group_order", json!(w.order())),
            ("longest_element_length", json!(w.longest().length)),
            ("longest_element_word", json!(one_based(&w.longest().word))),
        ];
        let weights = self.weights()?;
        if weights.len() > 1 {
            return Err(Failure::Usage("rs info takes at most one --weight".into()));
        }
        if let Some(l) = weights.first() {
            let simple: Vec<i64> = (0..rs.rank())
                .map(|i| rs.pairing(l, Coroot::Simple(i)))
                .collect::<Result<_, _>>()?;
            fields.push(("weight", to_value(l)));
            fields.push(("simple_pairings", json!(simple)));
            fields.push(("positive_pairings", json!(rs.positive_pairings(l))));
            fields.push(("dominant", json!(l.is_dominant())));
            fields.push(("in_root_lattice", json!(rs.in_root_lattice(l))));
            let (el, dom) = w.dominant_representative(rs, l);
            fields.push((
                "dominant_representative",
                json!({ "word": one_based(&el.word), "weight": to_value(&dom) }),
            ));
            if let Some(p) = self.opts.p {
                let n = p.pow(self.opts.r.unwrap_or(1));
                fields.push(("restricted", json!(l.is_restricted(p))));
                fields.push(("dot_multiply", to_value(&l.dot_multiply(n))));
                if l.is_dominant() {
                    let (low, high) = rs.steinberg_split(l, p)?;
                    fields.push(("steinberg_split", json!({ "restricted": to_value(&low), "dominant": to_value(&high) })));
                }
            }
            if let Some(word) = self.word()? {
                let el = w.from_word(&word).expect("validated simple reflection indices");
                fields.push(("act", to_value(&el.act(l))));
                fields.push(("dot_act", to_value(&el.dot_act(l))));
                fields.push(("element_length", json!(el.length)));
            }
        }
        Ok(render_fields(fields))
    }

    fn char_weyl(&self) -> CmdResult {
        if self.opts.class.is_some() {
            return Ok(render_char(&self.ctx.class_to_char(&self.class()?)?));
        }
        if !self.opts.weight.is_empty() {
            return Ok(render_char(&self.ctx.weyl_character(&self.weight()?)?));
        }
        if self.opts.p.is_some() {
            let r = self.opts.r.unwrap_or(1);
            return Ok(render_char(&self.ctx.steinberg_char(self.p()?, r)?));
        }
        Err(Failure::Usage("char weyl needs --weight, --class, or --p (Steinberg character)".into()))
    }

    fn char_tensor(&self) -> CmdResult {
        match self.chars()?.as_slice() {
            [a, b] => Ok(render_char(&self.ctx.tensor(a, b))),
            _ => Err(Failure::Usage("char tensor needs exactly two --char values".into())),
        }
    }

    fn run(&self, group: &Group) -> CmdResult {
        let ctx = &self.ctx;
        match group {
            Group::Rs { cmd: RsCmd::Info } => self.rs_info(),
            Group::Char { cmd } => match cmd {
                CharCmd::Weyl => self.char_weyl(),
                CharCmd::Tensor => self.char_tensor(),
                CharCmd::Twist => {
                    let r = self.opts.r.unwrap_or(1);
                    Ok(render_char(&frobenius_twist(&self.one_char()?, r, self.p()?)))
                }
                CharCmd::Euler => Ok(render_char(&ctx.euler_characteristic(&self.weight()?)?)),
                CharCmd::Contract => Ok(render_char(&ctx.contract_weights(&self.one_char()?, self.p()?)?)),
            },
            Group::Class { cmd } => match cmd {
                ClassCmd::Decompose => {
                    let ch = self.one_char()?;
                    let class = match self.opts.method {
                        Method::Alt => ctx.char_to_class(&ch)?,
                        Method::Peel => ctx.char_to_class_peeling(&ch)?,
                    };
                    Ok(render_class(&class))
                }
                ClassCmd::TensorDelta => {
                    Ok(render_class(&ctx.tensor_delta_expansion(&self.weight()?, &self.one_char()?)?))
                }
                ClassCmd::StForward => {
                    let r = self.opts.r.unwrap_or(1);
                    Ok(render_class(&ctx.steinberg_forward(&self.class()?, self.p()?, r)?))
                }
                ClassCmd::StInverse => Ok(render_class(&ctx.steinberg_inverse(&self.class()?, self.p()?)?)),
                ClassCmd::Contract => {
                    let ch = self.one_char()?;
                    let p = self.p()?;
                    if self.opts.weight.is_empty() {
                        Ok(render_class(&ctx.frobenius_contract_class(&ch, p)?))
                    } else {
                        let l = self.weight()?;
                        let m = ctx.steinberg_delta_multiplicity(&ch, &l, p)?;
                        Ok(render_fields(vec![
                            ("weight", to_value(&l)),
                            ("steinberg_weight", to_value(&l.dot_multiply(p))),
                            ("multiplicity", json!(m)),
                        ]))
                    }
                }
                ClassCmd::PrBlock => {
                    Ok(render_class(&ctx.pr_block(&self.class()?, &self.weight()?, self.p()?)?))
                }
            },
            Group::Linkage { cmd } => match cmd {
                LinkageCmd::Test => match self.weights()?.as_slice() {
                    [a, b] => {
                        let linked = ctx.linked(a, b, self.p()?)?;
                        Ok(render_fields(vec![("linked", json!(linked))]))
                    }
                    _ => Err(Failure::Usage("linkage test needs exactly two --weight values".into())),
                },
                LinkageCmd::Rep => {
                    let l = self.weight()?;
                    let p = self.p()?;
                    let rep = ctx.fundamental_alcove_rep(&l, p)?;
                    let pos = ctx.alcove_position(&rep, p)?;
                    Ok(render_fields(vec![
                        ("weight", to_value(&l)),
                        ("representative", to_value(&rep)),
                        ("wall_pairings", to_value(&pos.wall_pairings)),
                        ("status", to_value(&pos.status)),
                    ]))
                }
                LinkageCmd::Blocks => {
                    let blocks = ctx.block_decompose(&self.class()?, self.p()?)?;
                    let mut text = String::new();
                    let json_blocks: Vec<Value> = blocks
                        .iter()
                        .map(|(rep, comp)| {
                            let _ = writeln!(text, "block {rep}:");
                            for line in comp.to_string().lines() {
                                let _ = writeln!(text, "  {line}");
                            }
                            json!({ "representative": to_value(rep), "component": to_value(comp) })
                        })
                        .collect();
                    Ok(Rendered { json: json!({ "blocks": json_blocks }), text })
                }
                LinkageCmd::Special => {
                    let l = self.weight()?;
                    let p = self.p()?;
                    let special = ctx.is_special_point(&l, p)?;
                    let level = if l.is_dominant() { Some(ctx.st_level(&l, p)?) } else { None };
                    Ok(render_fields(vec![
                        ("weight", to_value(&l)),
                        ("special", json!(special)),
                        ("st_level", json!(level)),
                    ]))
                }
            },
            Group::Simple { cmd: SimpleCmd::A1 } => {
                let p = self.p()?;
                if !self.opts.chars.is_empty() {
                    let dec = ctx.decompose_in_simple_basis_a1(&self.one_char()?, p)?;
                    Ok(Rendered { json: to_value(&dec), text: dec.to_string() })
                } else {
                    Ok(render_char(&ctx.simple_character_a1(&self.weight()?, p)?))
                }
            }
        }
    }
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn fail(code: u8, msg: &str) -> Outcome {
    let line = msg.lines().next().unwrap_or("error");
    Outcome { code, stdout: String::new(), stderr: format!("modrep: {line}\n") }
}

/// Parse arguments, run one subcommand, and render its result.
///
/// Exit codes: 0 success, 1 domain or configuration error, 2 usage error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let opts = cli.opts;
    if let Some(p) = opts.p {
        if !is_prime(p) {
            return fail(1, &format!("configuration error: p must be prime, got {p}"));
        }
    }
    let ctx = match Context::new(opts.series, opts.rank, opts.lattice) {
        Ok(ctx) => ctx,
        Err(e) => return fail(1, &e.to_string()),
    };
    if let Some(p) = opts.p {
        if let Err(e) = ctx.root_system().check_prime(p, opts.lattice) {
            return fail(1, &e.to_string());
        }
    }
    let output = opts.output;
    let session = Session { ctx, opts };
    match session.run(&cli.group) {
        Ok(r) => {
            let stdout = match output {
                OutputFormat::Json => format!("{}\n", r.json),
                OutputFormat::Text if r.text.is_empty() => "0\n".to_owned(),
                OutputFormat::Text => r.text,
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => fail(2, &msg),
        Err(Failure::Domain(msg)) => fail(1, &msg),
    }
}

/// Every leaf subcommand as a space-separated path, e.g. `"class st-forward"`.
pub fn subcommand_paths() -> Vec<String> {
    use clap::CommandFactory;
    let cmd = Cli::command();
    let mut out = Vec::new();
    for group in cmd.get_subcommands() {
        for leaf in group.get_subcommands() {
            out.push(format!("{} {}", group.get_name(), leaf.get_name()));
        }
    }
    out
}
