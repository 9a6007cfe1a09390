//! Graph documents and the `lspace` command line.
//!
//! Every command reads one JSON graph document and prints one record per line.
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{check_relations, convolution_trials, parse_generators};
use crate::error::{Error, Result};
use crate::family::{AccommodatingFamily, LabelledSpace};
use crate::filters::{enumerate_tight, TightFilter};
use crate::graph::{LabelledGraph, VertexSet};
use crate::groupoid::{compose, phi, Germ, GroupoidElement};
use crate::semigroup::{multiply, natural_leq, SemigroupElement, Triple};
use crate::surgery::sigma_pow;

/// The input document: vertex names, labelled edges and an optional family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub src: String,
    pub dst: String,
    pub label: String,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed graph document: {e}")))
    }

    pub fn from_graph(g: &LabelledGraph) -> Self {
        let names = g.vertex_names();
        GraphDocument {
            vertices: names.to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    src: names[e.source].clone(),
                    dst: names[e.target].clone(),
                    label: g.letter_name(e.label).to_string(),
                })
                .collect(),
            family: None,
        }
    }

    pub fn graph(&self) -> Result<LabelledGraph> {
        let edges: Vec<(&str, &str, &str)> =
            self.edges.iter().map(|e| (e.src.as_str(), e.dst.as_str(), e.label.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        LabelledGraph::new(&vertices, &edges)
    }

    /// The declared family, checked for closure against `g`.
    pub fn declared_family(&self, g: &LabelledGraph) -> Result<Option<AccommodatingFamily>> {
        let Some(sets) = &self.family else { return Ok(None) };
        let sets = sets
            .iter()
            .enumerate()
            .map(|(k, names)| {
                g.vertex_set(names)
                    .map_err(|e| Error::input(format!("family entry #{k}: {e}")))
            })
            .collect::<Result<Vec<VertexSet>>>()?;
        AccommodatingFamily::from_sets(g, sets).map(Some)
    }
}

/// Parsed input: the graph and the family declared with it, if any.
pub fn parse_input(text: &str) -> Result<(LabelledGraph, Option<AccommodatingFamily>)> {
    let doc = GraphDocument::from_json(text)?;
    let g = doc.graph()?;
    let family = doc.declared_family(&g)?;
    Ok((g, family))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyFlag {
    Minimal,
    Powerset,
    /// The `family` field of the document.
    File,
}

#[derive(Debug, Parser)]
#[command(name = "lspace", version, about = "Labelled spaces, tight filters, groupoids and their algebras")]
pub struct Cli {
    /// Enumeration bound on word lengths.
    #[arg(long, global = true, default_value_t = 3)]
    pub depth: usize,
    /// Family to use; defaults to the document's family if present, else the minimal one.
    #[arg(long, global = true, value_enum)]
    pub family: Option<FamilyFlag>,
    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural report: sinks, left-resolving, weakly left-resolving.
    Validate { graph: PathBuf },
    /// Members of the family, or of `B_α` with its atoms when `--word` is given.
    Family {
        graph: PathBuf,
        #[arg(long)]
        word: Option<String>,
    },
    /// Inverse semigroup operations on triples `(α,{..},β)`.
    Semigroup {
        #[command(subcommand)]
        op: SemigroupOp,
    },
    /// Tight filters with words of length at most `--depth`.
    Tight { graph: PathBuf },
    /// The shift `σ^k` on a tight filter.
    Sigma {
        graph: PathBuf,
        filter: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Boundary-path groupoid operations.
    Groupoid {
        #[command(subcommand)]
        op: GroupoidOp,
    },
    /// Checks the four families of defining relations and seeded convolution trials.
    AlgebraCheck {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        trials: usize,
    },
    /// Algebra operations on generator words over `P{A}`, `S{a}`, `S{a}*`.
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum SemigroupOp {
    Mul { graph: PathBuf, s: String, t: String },
    Star { graph: PathBuf, s: String },
    /// Natural order on idempotents.
    Leq { graph: PathBuf, p: String, q: String },
}

#[derive(Debug, Subcommand)]
pub enum GroupoidOp {
    /// Product of `(η,m,ξ)` and `(ξ,n,ζ)`.
    Compose { graph: PathBuf, x: String, y: String },
    /// Image of the germ `[t, ξ]`.
    Phi { graph: PathBuf, t: String, xi: String },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraOp {
    Mul { graph: PathBuf, x: String, y: String },
}

/// What a command printed and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Runs `lspace` with `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: match e {
                Error::NotWeaklyLeftResolving(_) => 1,
                _ => 2,
            },
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
    }
}

fn graph_path(cmd: &Command) -> &PathBuf {
    match cmd {
        Command::Validate { graph }
        | Command::Family { graph, .. }
        | Command::Tight { graph }
        | Command::Sigma { graph, .. }
        | Command::AlgebraCheck { graph, .. } => graph,
        Command::Semigroup { op } => match op {
            SemigroupOp::Mul { graph, .. } | SemigroupOp::Star { graph, .. } | SemigroupOp::Leq { graph, .. } => graph,
        },
        Command::Groupoid { op } => match op {
            GroupoidOp::Compose { graph, .. } | GroupoidOp::Phi { graph, .. } => graph,
        },
        Command::Algebra { op: AlgebraOp::Mul { graph, .. } } => graph,
    }
}

fn load(cli: &Cli) -> Result<(LabelledGraph, Option<AccommodatingFamily>)> {
    let path = graph_path(&cli.command);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        Error::Family(m) => Error::Family(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn choose_family(cli: &Cli, g: &LabelledGraph, declared: Option<AccommodatingFamily>) -> Result<AccommodatingFamily> {
    match (cli.family, declared) {
        (Some(FamilyFlag::Minimal), _) | (None, None) => Ok(AccommodatingFamily::minimal(g)),
        (Some(FamilyFlag::Powerset), _) => AccommodatingFamily::power_set(g),
        (Some(FamilyFlag::File) | None, Some(f)) => Ok(f),
        (Some(FamilyFlag::File), None) => Err(Error::input("--family file given but the document has no `family` field")),
    }
}

/// Sorted by the increasing list of vertex ids.
fn sorted_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = sets.into_iter().collect();
    v.sort_by_key(|s| s.ids().collect::<Vec<_>>());
    v
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let (g, declared) = load(cli)?;
    let family = choose_family(cli, &g, declared)?;

    if let Command::Validate { .. } = cli.command {
        return Ok(validate_report(&g, &family));
    }
    let space = LabelledSpace::new(g, family)?;
    let g = space.graph();
    let mut out = String::new();
    match &cli.command {
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Family { word: None, .. } => {
            for set in sorted_sets(space.family().sets().iter().copied()) {
                let _ = writeln!(out, "{}", g.render_set(set));
            }
        }
        Command::Family { word: Some(w), .. } => {
            let word = g.parse_word(w)?;
            let restricted = space.restrict(&word);
            let _ = writeln!(out, "range {}", g.render_set(restricted.range));
            for set in sorted_sets(restricted.carrier.iter().copied()) {
                let _ = writeln!(out, "member {}", g.render_set(set));
            }
            for atom in sorted_sets(space.atoms_of(&word)) {
                let _ = writeln!(out, "atom {}", g.render_set(atom));
            }
        }
        Command::Semigroup { op } => match op {
            SemigroupOp::Mul { s, t, .. } => {
                let p = multiply(&space, &SemigroupElement::parse(&space, s)?, &SemigroupElement::parse(&space, t)?);
                let _ = writeln!(out, "{}", p.render(&space));
            }
            SemigroupOp::Star { s, .. } => {
                let _ = writeln!(out, "{}", SemigroupElement::parse(&space, s)?.star().render(&space));
            }
            SemigroupOp::Leq { p, q, .. } => {
                let leq = natural_leq(&SemigroupElement::parse(&space, p)?, &SemigroupElement::parse(&space, q)?, &space)?;
                let _ = writeln!(out, "{leq}");
            }
        },
        Command::Tight { .. } => {
            for xi in enumerate_tight(&space, cli.depth) {
                let _ = writeln!(out, "{}", xi.render(&space));
            }
        }
        Command::Sigma { filter, power, .. } => {
            let xi = TightFilter::parse(&space, filter)?;
            let _ = writeln!(out, "{}", sigma_pow(&space, &xi, *power)?.render(&space));
        }
        Command::Groupoid { op } => match op {
            GroupoidOp::Compose { x, y, .. } => {
                let x = GroupoidElement::parse(&space, x)?;
                let y = GroupoidElement::parse(&space, y)?;
                let _ = writeln!(out, "{}", compose(&space, &x, &y)?.render(&space));
            }
            GroupoidOp::Phi { t, xi, .. } => {
                let germ = Germ::new(&space, Triple::parse(&space, t)?, TightFilter::parse(&space, xi)?)?;
                let _ = writeln!(out, "{}", phi(&space, &germ)?.render(&space));
            }
        },
        Command::AlgebraCheck { trials, .. } => {
            let report = check_relations(&space);
            let names = ["i", "ii", "iii", "iv"];
            for (k, name) in names.iter().enumerate() {
                let failed = &report.failures[k];
                let _ = writeln!(out, "{name}: {} checked, {} failed", report.checked[k], failed.len());
                for f in failed {
                    let _ = writeln!(out, "  fails: {f}");
                }
            }
            let mut ok = report.all_pass();
            if *trials > 0 {
                let t = convolution_trials(&space, cli.seed, *trials, cli.depth.min(3));
                let _ = writeln!(out, "convolution: {} trials, {} discrepancies", t.trials, t.discrepancies);
                ok &= t.discrepancies == 0;
            }
            let _ = writeln!(out, "{}", report.summary());
            return Ok(Outcome { code: if ok { 0 } else { 1 }, stdout: out, stderr: String::new() });
        }
        Command::Algebra { op: AlgebraOp::Mul { x, y, .. } } => {
            let p = parse_generators(&space, x)?.multiply(&space, &parse_generators(&space, y)?);
            let _ = writeln!(out, "{}", p.render(&space));
        }
    }
    Ok(Outcome::ok(out))
}

fn validate_report(g: &LabelledGraph, family: &AccommodatingFamily) -> Outcome {
    let r = g.validate();
    let alphabet: Vec<String> = r.alphabet.iter().map(char::to_string).collect();
    let violation = family.weakly_left_resolving_violation(g);
    let mut out = String::new();
    let _ = writeln!(out, "vertices: {}", r.vertices);
    let _ = writeln!(out, "edges: {}", r.edges);
    let _ = writeln!(out, "alphabet: {}", alphabet.join(","));
    let _ = writeln!(out, "sinks: {}", g.render_set(r.sinks));
    let _ = writeln!(out, "left-resolving: {}", r.left_resolving);
    let _ = writeln!(out, "labelling surjective: {}", r.labelling_surjective);
    let _ = writeln!(out, "family size: {}", family.len());
    let _ = writeln!(out, "weakly left-resolving: {}", violation.is_none());
    if let Some((a, b, l)) = violation {
        let _ = writeln!(
            out,
            "  witness: r({}∩{},{}) != r({},{})∩r({},{})",
            g.render_set(a),
            g.render_set(b),
            g.letter_name(l),
            g.render_set(a),
            g.letter_name(l),
            g.render_set(b),
            g.letter_name(l)
        );
    }
    Outcome { code: if violation.is_none() { 0 } else { 1 }, stdout: out, stderr: String::new() }
}
