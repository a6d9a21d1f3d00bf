use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use lmalg::clifford::{self, CliffordAlgebra, DiagonalForm};
use lmalg::exactnum::CycloField;
use lmalg::genclifford::{self, GCParams};
use lmalg::json::{matrix_doc, ChainDoc, FormDoc, GCElementDoc, JsonError, MultivectorDoc, SteinitzDoc, SteinitzInput};
use lmalg::locmat;
use lmalg::profile::AlgebraProfile;
use lmalg::report::{self, Report};

#[derive(Parser)]
#[command(name = "lmalg", version, about = "Exact computations with locally matrix algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Read operands from a file, or `-` for stdin, when none are given inline
    #[arg(long, global = true, value_name = "PATH|-")]
    input: Option<String>,
    /// Write the result to a file, or `-` for stdout
    #[arg(long, global = true, value_name = "PATH|-")]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Steinitz number arithmetic
    #[command(subcommand)]
    Steinitz(SteinitzCmd),
    /// Clifford algebras of diagonal forms
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Generalized Clifford algebras Clg(l, m)
    #[command(subcommand)]
    Gclifford(GcCmd),
    /// Embedding chains of locally matrix algebras
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Fixed-grid batch checks with a pass/fail table
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Args)]
struct Operands {
    /// Operands as inline JSON; with none, `--input` supplies one value or an array of values
    values: Vec<String>,
}

#[derive(Args)]
struct LmArgs {
    #[arg(long)]
    l: u32,
    #[arg(long)]
    m: usize,
}

#[derive(Subcommand)]
enum SteinitzCmd {
    /// Product of two or more values
    Mul(Operands),
    /// Whether the first value divides the second
    Divides(Operands),
    /// Least common multiple of two or more values
    Lcm(Operands),
    /// Greatest common divisor of two or more values
    Gcd(Operands),
    /// Steinitz number of an embedding chain
    OfChain(Operands),
}

#[derive(Subcommand)]
enum CliffordCmd {
    /// Product of two or more multivectors over the same form
    Mul(Operands),
    /// Basis of the center of Cl(V, f) for a form document
    Center(Operands),
    /// Basis of the centralizer of one or more multivectors
    Centralizer(Operands),
    /// Wedderburn profile of Cl(V, f) for a split form
    Structure(Operands),
    /// Compare the centralizer of e_i (i in the index list) with the product side
    Lemma22 {
        /// Unit form over Q(i) of this dimension, when no form operand is given
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        indices: Vec<usize>,
        #[command(flatten)]
        operands: Operands,
    },
}

#[derive(Subcommand)]
enum GcCmd {
    /// Product of two or more elements of the same Clg(l, m)
    Mul(Operands),
    /// Central monomials
    Center(LmArgs),
    /// Wedderburn profile
    Wedderburn(LmArgs),
    /// Clock and shift matrices for even m
    Clockshift(LmArgs),
    /// Dimension of the radical
    Radical(LmArgs),
    /// Components x_i^k v_k of an element along generator i
    Extract {
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        operands: Operands,
    },
}

#[derive(Subcommand)]
enum ChainCmd {
    /// Tensor product of two or more chains
    Tensor(Operands),
    /// Universal equivalence, cross-checked on probe sizes
    Equiv {
        #[arg(long = "probe-set", value_delimiter = ',')]
        probe_set: Option<Vec<u64>>,
        #[command(flatten)]
        operands: Operands,
    },
    /// Isomorphism of countable-dimensional direct limits
    Iso(Operands),
    /// Whether M_n embeds unitally into a profile
    Embeds {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        operands: Operands,
    },
    /// A chain with a given Steinitz number
    Realize(Operands),
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Clifford algebra structure on split diagonal forms
    Theorem4,
    /// Generalized Clifford algebra structure
    Theorem5,
    /// Steinitz multiplicativity of tensor products on random chains
    Prop2 {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Centralizer identity for odd sets of orthonormal generators
    Lemma22,
}

enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
        }
    }
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn domain(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

/// Raw JSON texts of the operands.
struct Inputs {
    texts: Vec<(String, String)>,
}

impl Inputs {
    fn gather(ops: &Operands, input: Option<&str>, arity: Option<usize>) -> Result<Self, CliError> {
        let texts: Vec<(String, String)> = if !ops.values.is_empty() {
            ops.values.iter().enumerate().map(|(i, v)| (format!("operand {}", i + 1), v.clone())).collect()
        } else if let Some(path) = input {
            let raw = read_input(path)?;
            if arity == Some(1) {
                vec![("input".to_string(), raw)]
            } else {
                let value: Value = serde_json::from_str(&raw).map_err(|e| CliError::Parse(format!("input: {e}")))?;
                let Value::Array(items) = value else {
                    return Err(CliError::Parse("input: expected a JSON array of operands".into()));
                };
                items.iter().enumerate().map(|(i, v)| (format!("input[{i}]"), v.to_string())).collect()
            }
        } else {
            vec![]
        };
        if let Some(k) = arity {
            if texts.len() != k {
                return Err(CliError::Parse(format!("expected {k} operand(s), got {}", texts.len())));
            }
        }
        Ok(Inputs { texts })
    }

    fn parse<T: DeserializeOwned>(&self) -> Result<Vec<T>, CliError> {
        self.texts.iter().map(|(name, text)| parse_named(name, text)).collect()
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

/// Parses with the path of the offending field in the error message.
fn parse_named<T: DeserializeOwned>(name: &str, text: &str) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let at = if path == "." { String::new() } else { format!(" at `{path}`") };
        CliError::Parse(format!("{name}{at}: {}", e.inner()))
    })?;
    de.end().map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
    Ok(value)
}

fn two<T>(mut v: Vec<T>) -> (T, T) {
    let b = v.pop().expect("arity checked");
    let a = v.pop().expect("arity checked");
    (a, b)
}

fn steinitz_values(inputs: &Inputs) -> Result<Vec<lmalg::steinitz::SteinitzNumber>, CliError> {
    inputs.parse::<SteinitzInput>()?.into_iter().map(|s| s.into_domain().map_err(CliError::from)).collect()
}

fn chains(inputs: &Inputs) -> Result<Vec<locmat::EmbeddingChain>, CliError> {
    inputs.parse::<ChainDoc>()?.into_iter().map(|c| c.into_domain().map_err(CliError::from)).collect()
}

fn steinitz_json(s: &lmalg::steinitz::SteinitzNumber) -> Value {
    serde_json::to_value(SteinitzDoc::from(s)).expect("serializable")
}

fn report_json(r: &Report) -> Result<Value, CliError> {
    let v = serde_json::to_value(r).expect("serializable");
    if r.pass {
        Ok(v)
    } else {
        Err(CliError::Domain(format!("suite {} failed: {v}", r.suite)))
    }
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let input = cli.input.as_deref();
    match &cli.command {
        Command::Steinitz(cmd) => match cmd {
            SteinitzCmd::Mul(ops) | SteinitzCmd::Lcm(ops) | SteinitzCmd::Gcd(ops) => {
                let values = steinitz_values(&Inputs::gather(ops, input, None)?)?;
                if values.len() < 2 {
                    return Err(CliError::Parse(format!("expected at least 2 operands, got {}", values.len())));
                }
                let fold = |f: fn(&_, &_) -> _| values[1..].iter().fold(values[0].clone(), |acc, v| f(&acc, v));
                let out = match cmd {
                    SteinitzCmd::Mul(_) => fold(lmalg::steinitz::SteinitzNumber::mul),
                    SteinitzCmd::Lcm(_) => fold(lmalg::steinitz::SteinitzNumber::lcm),
                    _ => fold(lmalg::steinitz::SteinitzNumber::gcd),
                };
                Ok(steinitz_json(&out))
            }
            SteinitzCmd::Divides(ops) => {
                let (a, b) = two(steinitz_values(&Inputs::gather(ops, input, Some(2))?)?);
                Ok(json!({ "divides": a.divides(&b) }))
            }
            SteinitzCmd::OfChain(ops) => {
                let c = chains(&Inputs::gather(ops, input, Some(1))?)?.remove(0);
                Ok(steinitz_json(&locmat::steinitz_of_chain(&c)))
            }
        },
        Command::Clifford(cmd) => run_clifford(cmd, input),
        Command::Gclifford(cmd) => run_gclifford(cmd, input),
        Command::Chain(cmd) => match cmd {
            ChainCmd::Tensor(ops) => {
                let (a, b) = two(chains(&Inputs::gather(ops, input, Some(2))?)?);
                let t = locmat::tensor(&a, &b).map_err(domain)?;
                Ok(serde_json::to_value(ChainDoc::from(&t)).expect("serializable"))
            }
            ChainCmd::Equiv { probe_set, operands } => {
                let (a, b) = two(chains(&Inputs::gather(operands, input, Some(2))?)?);
                let probes = probe_set.clone().unwrap_or_else(locmat::default_probes);
                let r = locmat::equivalence_report(&a, &b, &probes).map_err(domain)?;
                let mut out = json!({ "equivalent": r.equivalent });
                if let Some(n) = r.separating_probe {
                    out["separating_probe"] = json!(n);
                }
                Ok(out)
            }
            ChainCmd::Iso(ops) => {
                let (a, b) = two(chains(&Inputs::gather(ops, input, Some(2))?)?);
                Ok(json!({ "isomorphic": locmat::isomorphic_countable(&a, &b) }))
            }
            ChainCmd::Embeds { n, operands } => {
                let profile = Inputs::gather(operands, input, Some(1))?.parse::<AlgebraProfile>()?.remove(0);
                Ok(json!({ "embeds": locmat::unital_embedding_exists(*n, &profile).map_err(domain)? }))
            }
            ChainCmd::Realize(ops) => {
                let tau = steinitz_values(&Inputs::gather(ops, input, Some(1))?)?.remove(0);
                let c = locmat::steinitz_realization(&tau).map_err(domain)?;
                Ok(serde_json::to_value(ChainDoc::from(&c)).expect("serializable"))
            }
        },
        Command::Report(cmd) => {
            let r = match cmd {
                ReportCmd::Theorem4 => report::clifford_structure_suite(),
                ReportCmd::Theorem5 => report::generalized_clifford_suite(),
                ReportCmd::Prop2 { seed, count } => report::tensor_multiplicativity_suite(*seed, *count),
                ReportCmd::Lemma22 => report::centralizer_identity_suite(),
            };
            report_json(&r)
        }
    }
}

fn multivectors(inputs: &Inputs) -> Result<Vec<clifford::Multivector>, CliError> {
    inputs.parse::<MultivectorDoc>()?.into_iter().map(|m| m.into_domain().map_err(CliError::from)).collect()
}

fn form(inputs: &Inputs) -> Result<DiagonalForm, CliError> {
    Ok(inputs.parse::<FormDoc>()?.remove(0).into_domain()?)
}

fn mv_json(m: &clifford::Multivector) -> Value {
    serde_json::to_value(MultivectorDoc::from(m)).expect("serializable")
}

fn basis_json(basis: &[clifford::Multivector]) -> Value {
    json!({ "dim": basis.len(), "basis": basis.iter().map(mv_json).collect::<Vec<_>>() })
}

fn run_clifford(cmd: &CliffordCmd, input: Option<&str>) -> Result<Value, CliError> {
    match cmd {
        CliffordCmd::Mul(ops) => {
            let (a, b) = two(multivectors(&Inputs::gather(ops, input, Some(2))?)?);
            Ok(mv_json(&a.mul(&b).map_err(domain)?))
        }
        CliffordCmd::Center(ops) => {
            let alg = CliffordAlgebra::new(form(&Inputs::gather(ops, input, Some(1))?)?);
            Ok(basis_json(&alg.center().map_err(domain)?))
        }
        CliffordCmd::Centralizer(ops) => {
            let set = multivectors(&Inputs::gather(ops, input, None)?)?;
            let first = set.first().ok_or_else(|| CliError::Parse("expected at least 1 operand".into()))?;
            let alg = CliffordAlgebra::new(first.form().as_ref().clone());
            Ok(basis_json(&alg.centralizer(&set).map_err(domain)?))
        }
        CliffordCmd::Structure(ops) => {
            let f = Arc::new(form(&Inputs::gather(ops, input, Some(1))?)?);
            let r = clifford::structure_id(&f).map_err(domain)?;
            Ok(serde_json::to_value(&r.profile).expect("serializable"))
        }
        CliffordCmd::Lemma22 { n, indices, operands } => {
            let f = match n {
                Some(n) if operands.values.is_empty() && input.is_none() => {
                    DiagonalForm::from_ints(CycloField::gaussian(), &vec![1; *n]).map_err(domain)?
                }
                _ => form(&Inputs::gather(operands, input, Some(1))?)?,
            };
            let r = clifford::lemma22_check(&Arc::new(f), indices).map_err(domain)?;
            Ok(json!({
                "n": r.n,
                "indices": r.indices,
                "centralizer_dim": r.centralizer_dim,
                "product_side_dim": r.product_side_dim,
                "equal": r.equal,
            }))
        }
    }
}

fn gc_json(a: &genclifford::GCElement) -> Value {
    serde_json::to_value(GCElementDoc::from(a)).expect("serializable")
}

fn gc_elements(inputs: &Inputs) -> Result<Vec<genclifford::GCElement>, CliError> {
    inputs.parse::<GCElementDoc>()?.into_iter().map(|d| d.into_domain().map_err(CliError::from)).collect()
}

fn run_gclifford(cmd: &GcCmd, input: Option<&str>) -> Result<Value, CliError> {
    let params = |a: &LmArgs| GCParams::new(a.l, a.m).map_err(domain);
    match cmd {
        GcCmd::Mul(ops) => {
            let (a, b) = two(gc_elements(&Inputs::gather(ops, input, Some(2))?)?);
            Ok(gc_json(&a.mul(&b).map_err(domain)?))
        }
        GcCmd::Center(a) => {
            let basis = genclifford::center_basis(params(a)?).map_err(domain)?;
            Ok(json!({ "dim": basis.len(), "basis": basis.iter().map(gc_json).collect::<Vec<_>>() }))
        }
        GcCmd::Wedderburn(a) => {
            let profile = genclifford::wedderburn(params(a)?).map_err(domain)?;
            Ok(serde_json::to_value(&profile).expect("serializable"))
        }
        GcCmd::Clockshift(a) => {
            let mats = genclifford::clock_shift_rep(params(a)?).map_err(domain)?;
            Ok(json!({ "matrices": mats.iter().map(|m| matrix_doc(m)).collect::<Vec<_>>() }))
        }
        GcCmd::Radical(a) => Ok(json!({ "radical_dim": genclifford::radical_dim(params(a)?).map_err(domain)? })),
        GcCmd::Extract { index, operands } => {
            let a = gc_elements(&Inputs::gather(operands, input, Some(1))?)?.remove(0);
            let parts = genclifford::extract_components(&a, *index).map_err(domain)?;
            Ok(json!({ "components": parts.iter().map(gc_json).collect::<Vec<_>>() }))
        }
    }
}

fn write_output(path: Option<&str>, text: &str) -> io::Result<()> {
    match path {
        Some(p) if p != "-" => fs::write(p, format!("{text}\n")),
        _ => writeln!(io::stdout().lock(), "{text}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            let text = serde_json::to_string(&value).expect("serializable");
            if let Err(e) = write_output(cli.output.as_deref(), &text) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (CliError::Parse(msg) | CliError::Domain(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
