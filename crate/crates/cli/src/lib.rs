//! Command-line front end for `hyperbraid`.
//!
//! [`run`] parses an argument vector, executes one subcommand and returns the
//! text destined for stdout and stderr together with the exit code: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperbraid::arnold::{parse_class, Ring};
use hyperbraid::arrangement::{
    betti_numbers, boolean_arrangement, braid_arrangement, intersection_poset, parse_arrangement, Arrangement,
    PosetJson,
};
use hyperbraid::burau::{
    burau, check_braid_relations, format_exact_matrix, parse_gaussian_list, permutation_at_1, specialize,
    vandermonde_report, BraidWord, Permutation, RationalComplexConfiguration,
};
use hyperbraid::charclass::{
    is_stably_trivial, ku_rep_is_trivial, pairing_witness, parse_f2_matrix, realize_sw, sw_total, F2Class,
    PairingWitness, ToralRep,
};
use hyperbraid::exact::GaussianRational;
use hyperbraid::heisenberg::{check_triple_lift, verify_all_lifts, LiftReport, TripleReport};
use hyperbraid::ktheory::{ktheory_report, Hypothesis, KTheoryReport};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "hyperbraid", version, about = "Exact invariants of hyperplane arrangements and pure braid groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Intersection poset with Moebius values and cover relations.
    Poset(SourceArgs),
    /// Betti numbers of the complement.
    Betti(SourceArgs),
    /// Reduced KU^0 and KO^0 and their representation subgroups.
    Ktheory(SourceArgs),
    /// Stiefel-Whitney classes and triviality of a toral representation.
    Sw(SwArgs),
    /// A representation of P_n with prescribed w1 and w2.
    RealizeSw(RealizeArgs),
    /// Burau matrix of a braid word.
    Burau(BurauArgs),
    /// Heisenberg and Spin(7) lifting obstructions over triples.
    Heisenberg(HeisenbergArgs),
    /// Vandermonde trivialization check at one configuration.
    Vandermonde(VandermondeArgs),
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub json: bool,
}

/// Exactly one arrangement.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Braid arrangement z_i = z_j in C^n.
    #[arg(long, value_name = "N")]
    pub braid: Option<usize>,
    /// Coordinate hyperplanes in C^n.
    #[arg(long, value_name = "N")]
    pub boolean: Option<usize>,
    /// Arrangement file (`a1 ... al | b` per line).
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SwArgs {
    /// F2 matrix file, one row of 0/1 digits per line bundle.
    #[arg(long, value_name = "PATH")]
    pub rep: PathBuf,
    /// Read columns as the generators A[i,j] of P_n.
    #[arg(long, value_name = "N")]
    pub strands: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    #[arg(long, value_name = "N")]
    pub strands: usize,
    /// Degree-1 class over F2, e.g. `A[2,1] + A[3,2]`.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub zeta1: String,
    /// Degree-2 class over F2, e.g. `A[2,1]*A[3,2]`.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub zeta2: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct BurauArgs {
    #[arg(long, value_name = "N")]
    pub n: usize,
    /// Word such as `s1 s2^-1`.
    #[arg(long, value_name = "WORD", default_value = "", allow_hyphen_values = true)]
    pub word: String,
    /// Substitute `t = VALUE` (a Gaussian rational such as `1/2+i`).
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    pub eval: Option<String>,
    /// Verify the braid relations for B_n.
    #[arg(long)]
    pub check_relations: bool,
    /// Print the permutation at t = 1 in cycle notation.
    #[arg(long)]
    pub at_one: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct HeisenbergArgs {
    #[arg(long, value_name = "N")]
    pub n: usize,
    /// A single triple `i t j` with j < t < i.
    #[arg(long, num_args = 3, value_names = ["I", "T", "J"])]
    pub triple: Option<Vec<usize>>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VandermondeArgs {
    /// Distinct points, comma separated, e.g. `0,1,1/2+i`.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub points: String,
    /// Permutation in 1-based cycle notation, e.g. `(1 2)`.
    #[arg(long, value_name = "CYCLES")]
    pub perm: String,
    /// Coordinates of the fibre vector, comma separated.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiOutput {
    pub betti: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwOutput {
    pub rank: usize,
    pub summands: usize,
    pub strands: Option<usize>,
    pub w1: String,
    pub w2: String,
    pub stably_trivial: bool,
    pub witness: PairingWitness,
    pub ku_class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeOutput {
    pub strands: usize,
    pub rows: Vec<String>,
    pub w1: String,
    pub w2: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurauOutput {
    pub n: usize,
    pub word: String,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub eval: Option<Vec<Vec<String>>>,
    pub relations_hold: Option<bool>,
    pub permutation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VandermondeOutput {
    pub y: Vec<String>,
    pub y_permuted: Vec<String>,
    pub determinant: String,
    pub equivariant: bool,
    pub holds: bool,
}

/// What the process should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A domain error rendered for the user.
#[derive(Debug)]
pub struct Failure(pub String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(msg.into()))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

pub fn execute(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Poset(a) => poset(a),
        Command::Betti(a) => betti(a),
        Command::Ktheory(a) => ktheory(a),
        Command::Sw(a) => sw(a),
        Command::RealizeSw(a) => realize(a),
        Command::Burau(a) => burau_cmd(a),
        Command::Heisenberg(a) => heisenberg(a),
        Command::Vandermonde(a) => vandermonde(a),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn load_arrangement(a: &SourceArgs) -> Result<(Arrangement, Hypothesis), Failure> {
    let a = &a.source;
    if let Some(n) = a.braid {
        Ok((braid_arrangement(n).map_err(|e| Failure(format!("--braid: {e}")))?, Hypothesis::ToroidalClassifyingSpace))
    } else if let Some(n) = a.boolean {
        Ok((boolean_arrangement(n).map_err(|e| Failure(format!("--boolean: {e}")))?, Hypothesis::ToroidalClassifyingSpace))
    } else if let Some(path) = &a.file {
        let text = read_file(path)?;
        let arr = parse_arrangement(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        Ok((arr, Hypothesis::ArrangementComplement))
    } else {
        fail("one of --braid, --boolean or --file is required")
    }
}

fn poset(a: &SourceArgs) -> Result<String, Failure> {
    let (arr, _) = load_arrangement(a)?;
    let json: PosetJson = intersection_poset(&arr).to_json();
    if a.json {
        return to_json(&json);
    }
    let mut out = String::new();
    for f in &json.flats {
        let def: Vec<String> = f.defining_set.iter().map(ToString::to_string).collect();
        writeln!(out, "flat {}: rank {}, hyperplanes {{{}}}, mobius {}", f.id, f.rank, def.join(", "), f.mobius).unwrap();
    }
    let covers: Vec<String> = json.cover_relations.iter().map(|(x, y)| format!("{x}<{y}")).collect();
    writeln!(out, "covers: {}", covers.join(" ")).unwrap();
    Ok(out)
}

fn format_list(values: &[u64]) -> String {
    let items: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn betti(a: &SourceArgs) -> Result<String, Failure> {
    let (arr, _) = load_arrangement(a)?;
    let out = BettiOutput { betti: betti_numbers(&arr) };
    if a.json {
        to_json(&out)
    } else {
        Ok(format!("{}\n", format_list(&out.betti)))
    }
}

fn hypothesis_label(h: Hypothesis) -> &'static str {
    match h {
        Hypothesis::ArrangementComplement => "arrangement complement (cohomology of the space)",
        Hypothesis::ToroidalClassifyingSpace => "classifying space of a homologically toroidal group",
    }
}

fn ktheory(a: &SourceArgs) -> Result<String, Failure> {
    let (arr, hyp) = load_arrangement(a)?;
    let report: KTheoryReport = ktheory_report(&betti_numbers(&arr), hyp);
    if a.json {
        return to_json(&report);
    }
    Ok(format!(
        "KU^0 = {}, KO^0 = {}, KO^0_rep = {}, KU^0_rep = {}\nhypothesis: {}\n",
        report.ku0,
        report.ko0,
        report.ko0_rep,
        report.ku0_rep,
        hypothesis_label(report.hypothesis)
    ))
}

/// `s` with `C(s, 2) = rank`, if any.
fn strands_for_rank(rank: usize) -> Option<usize> {
    (2..).take_while(|s| s * (s - 1) / 2 <= rank).find(|s| s * (s - 1) / 2 == rank)
}

fn render_class(class: &F2Class, strands: Option<usize>) -> Result<String, Failure> {
    match strands {
        Some(s) => Ok(class.to_arnold(s)?.to_string()),
        None => Ok(class.to_string()),
    }
}

fn describe_witness(w: &PairingWitness) -> String {
    let pairs = |p: &[(usize, usize)]| p.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
    let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    match w {
        PairingWitness::Paired { pairs: p, zero_rows } => {
            format!("rows pair up as [{}], zero rows [{}]", pairs(p), list(zero_rows))
        }
        PairingWitness::Obstructed(o) => format!("obstructed by {}", match o {
            hyperbraid::charclass::Obstruction::W1(_) => "w1",
            hyperbraid::charclass::Obstruction::W2(_) => "w2",
        }),
        PairingWitness::Unpaired { pairs: p, zero_rows, unmatched } => format!(
            "classes vanish without a row pairing: pairs [{}], zero rows [{}], unmatched [{}]",
            pairs(p),
            list(zero_rows),
            list(unmatched)
        ),
    }
}

fn sw(a: &SwArgs) -> Result<String, Failure> {
    let text = read_file(&a.rep)?;
    let rep: ToralRep = parse_f2_matrix(&text).map_err(|e| Failure(format!("{}: {e}", a.rep.display())))?;
    let strands = match a.strands {
        Some(s) => {
            let expected = s * s.saturating_sub(1) / 2;
            if s < 2 || expected != rep.n() {
                return fail(format!(
                    "--strands {s}: the matrix has {} columns but P_{s} has {expected} generators",
                    rep.n()
                ));
            }
            Some(s)
        }
        None => strands_for_rank(rep.n()),
    };
    let out = SwOutput {
        rank: rep.n(),
        summands: rep.q(),
        strands,
        w1: render_class(&sw_total(&rep, 1), strands)?,
        w2: render_class(&sw_total(&rep, 2), strands)?,
        stably_trivial: is_stably_trivial(&rep),
        witness: pairing_witness(&rep),
        ku_class: if ku_rep_is_trivial() { "0".into() } else { "nonzero".into() },
    };
    if a.json {
        return to_json(&out);
    }
    Ok(format!(
        "w1 = {}\nw2 = {}\nstably trivial: {}\nwitness: {}\nKU class of the complexification: {}\n",
        out.w1,
        out.w2,
        if out.stably_trivial { "yes" } else { "no" },
        describe_witness(&out.witness),
        out.ku_class
    ))
}

fn realize(a: &RealizeArgs) -> Result<String, Failure> {
    if a.strands < 2 {
        return fail(format!("--strands must be at least 2, got {}", a.strands));
    }
    let z1 = parse_class(a.strands, Ring::F2, &a.zeta1).map_err(|e| Failure(format!("--zeta1: {e}")))?;
    let z2 = parse_class(a.strands, Ring::F2, &a.zeta2).map_err(|e| Failure(format!("--zeta2: {e}")))?;
    let rep = realize_sw(a.strands, &z1, &z2)?;
    let out = RealizeOutput {
        strands: a.strands,
        rows: rep.to_text().lines().map(str::to_string).collect(),
        w1: sw_total(&rep, 1).to_arnold(a.strands)?.to_string(),
        w2: sw_total(&rep, 2).to_arnold(a.strands)?.to_string(),
    };
    if a.json {
        return to_json(&out);
    }
    let mut s = String::new();
    for row in &out.rows {
        writeln!(s, "{row}").unwrap();
    }
    writeln!(s, "w1 = {}\nw2 = {}", out.w1, out.w2).unwrap();
    Ok(s)
}

fn strings(m: &[Vec<impl ToString>]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

fn burau_cmd(a: &BurauArgs) -> Result<String, Failure> {
    let word = BraidWord::parse(a.n, &a.word).map_err(|e| Failure(format!("--word: {e}")))?;
    let m = burau(&word);
    let eval = match &a.eval {
        Some(v) => {
            let value: GaussianRational = v.parse().map_err(|e| Failure(format!("--eval: {e}")))?;
            Some(specialize(&m, &value).map_err(|e| Failure(format!("--eval: {e}")))?)
        }
        None => None,
    };
    let relations_hold = if a.check_relations { Some(check_braid_relations(a.n)?) } else { None };
    let permutation = if a.at_one { Some(permutation_at_1(&word)?.to_string()) } else { None };
    let out = BurauOutput {
        n: a.n,
        word: word.to_string(),
        matrix: strings(m.rows()),
        determinant: m.determinant().to_string(),
        eval: eval.as_ref().map(|e| strings(e)),
        relations_hold,
        permutation,
    };
    if a.json {
        return to_json(&out);
    }
    let mut s = String::new();
    match &eval {
        Some(e) => writeln!(s, "{}", format_exact_matrix(e)).unwrap(),
        None if !a.check_relations && !a.at_one => writeln!(s, "{m}").unwrap(),
        None => {}
    }
    if let Some(ok) = out.relations_hold {
        writeln!(s, "braid relations for B_{}: {}", a.n, if ok { "hold" } else { "FAIL" }).unwrap();
    }
    if let Some(p) = &out.permutation {
        writeln!(s, "{p}").unwrap();
    }
    Ok(s)
}

fn triple_line(r: &TripleReport) -> String {
    let state = |b: bool| if b { "0" } else { "nonzero" };
    format!(
        "({},{},{}): pullback {} relator, over Z {}, over F2 {}, {}",
        r.i,
        r.t,
        r.j,
        if r.matches_relator { "=" } else { "!=" },
        state(r.vanishes_over_z),
        state(r.vanishes_over_f2),
        if r.spin7_liftable { "Spin(7)-liftable" } else { "not liftable" }
    )
}

fn heisenberg(a: &HeisenbergArgs) -> Result<String, Failure> {
    if let Some(t) = &a.triple {
        let r = check_triple_lift(a.n, t[0], t[1], t[2])?;
        return if a.json { to_json(&r) } else { Ok(format!("{}\n", r.pullback)) };
    }
    let report: LiftReport = verify_all_lifts(a.n)?;
    if a.json {
        return to_json(&report);
    }
    let mut s = String::new();
    for r in &report.triples {
        writeln!(s, "{}", triple_line(r)).unwrap();
    }
    writeln!(s, "span dimension: {} of {}", report.span_dim, report.h1_dim).unwrap();
    writeln!(s, "all triples lift: {}", if report.all_lift { "yes" } else { "no" }).unwrap();
    if let Some(inj) = &report.monomorphism_n3 {
        writeln!(
            s,
            "mod-2 graded map: abelian {}/{}, commutator {}/{}, {}",
            inj.abelian_image_rank,
            inj.abelian_dim,
            inj.commutator_image_rank,
            inj.commutator_dim,
            if inj.injective() { "injective" } else { "not injective" }
        )
        .unwrap();
    }
    Ok(s)
}

fn vandermonde(a: &VandermondeArgs) -> Result<String, Failure> {
    let config = RationalComplexConfiguration::parse(&a.points).map_err(|e| Failure(format!("--points: {e}")))?;
    let perm = Permutation::parse_cycles(config.len(), &a.perm).map_err(|e| Failure(format!("--perm: {e}")))?;
    let x = parse_gaussian_list(&a.x).map_err(|e| Failure(format!("--x: {e}")))?;
    let r = vandermonde_report(&config, &perm, &x)?;
    let join = |v: &[GaussianRational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let out = VandermondeOutput {
        y: join(&r.y),
        y_permuted: join(&r.y_permuted),
        determinant: r.determinant.to_string(),
        equivariant: r.equivariant,
        holds: r.holds(),
    };
    if a.json {
        return to_json(&out);
    }
    Ok(format!(
        "y = ({})\ny(permuted) = ({})\ndet V = {}\nequivariant: {}\n",
        out.y.join(", "),
        out.y_permuted.join(", "),
        out.determinant,
        if out.equivariant { "yes" } else { "no" }
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strand_detection() {
        assert_eq!(strands_for_rank(1), Some(2));
        assert_eq!(strands_for_rank(3), Some(3));
        assert_eq!(strands_for_rank(6), Some(4));
        assert_eq!(strands_for_rank(4), None);
        assert_eq!(strands_for_rank(0), None);
    }

    #[test]
    fn spec_examples() {
        assert_eq!(run(["hyperbraid", "betti", "--braid", "4"]).stdout, "[1, 6, 11, 6]\n");
        let k = run(["hyperbraid", "ktheory", "--braid", "3"]);
        assert_eq!(k.stdout.lines().next().unwrap(), "KU^0 = Z^2, KO^0 = (Z/2)^5, KO^0_rep = (Z/2)^5, KU^0_rep = 0");
        assert_eq!(run(["hyperbraid", "burau", "--n", "2", "--word", "s1", "--eval", "1"]).stdout, "[[0,1],[1,0]]\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["hyperbraid", "betti"]).code, 2);
        assert_eq!(run(["hyperbraid", "betti", "--braid", "3", "--boolean", "2"]).code, 2);
        assert_eq!(run(["hyperbraid", "betti", "--braid", "1"]).code, 1);
        assert_eq!(run(["hyperbraid", "betti", "--json", "--braid", "3"]).code, 0);
        assert_eq!(run(["hyperbraid", "heisenberg", "--n", "4", "--triple", "1", "2", "3"]).code, 1);
    }
}
