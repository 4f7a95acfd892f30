//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 failed verification or violated
//! claim.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bezout::{self, ShiftedProduct};
use crate::error::Error;
use crate::json;
use crate::mat2::Mat2;
use crate::modring::{self, Convention, ModMat, OracleReport};
use crate::zdecider::{self, Decision, DecisionRecord};

/// Seed for sampled `X` matrices when neither `--seed` nor `ISR1_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_260_101;
pub const SEED_ENV: &str = "ISR1_SEED";
/// Sampled `X` entries are uniform in `[-X_BOUND, X_BOUND]`.
pub const X_BOUND: i64 = 100;
pub const SCAN_MAX: u64 = 2000;

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 1;
const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "isr1", version, about = "Idempotent stable range one for 2x2 integer matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    C1,
    C2,
    Both,
}

impl ConventionArg {
    fn conventions(self) -> Vec<Convention> {
        match self {
            ConventionArg::C1 => vec![Convention::C1],
            ConventionArg::C2 => vec![Convention::C2],
            ConventionArg::Both => Convention::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide idempotent stable range one for a matrix "a11,a12;a21,a22".
    Decide {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bézout data for a·x + b·z = gcd(a, b).
    Bezout {
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
        #[arg(allow_hyphen_values = true)]
        b: BigInt,
        /// List the minimal pairs (requires coprime positive a, b).
        #[arg(long)]
        minimal: bool,
        /// Decide whether some solution has z | x−1 or z | x+1.
        #[arg(long)]
        divisibility: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the Euclidean and divisibility criteria on [a b; 0 0] for all
    /// coprime 1 ≤ a, b ≤ MAX.
    ///
    /// CSV columns: a,b,euclidean,divisibility,agree,witness
    Scan {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Evaluate the definitions over M2(Z/n) by enumeration.
    ///
    /// Full mode (n ≤ 4) always classifies under both conventions so that
    /// they can be compared; targeted mode (n ≤ 12) uses --convention.
    Oracle {
        #[arg(long = "mod")]
        modulus: u32,
        #[arg(long, conflicts_with = "matrix")]
        full: bool,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Vec<String>,
        #[arg(long, value_enum, default_value = "c1")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build and check the witness, unitizer and clean decomposition.
    Witness {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        /// Number of random X to test the unitizer against.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// ChaCha8 seed; overrides ISR1_SEED.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type CmdResult = std::result::Result<i32, CliError>;

#[derive(Debug)]
enum CliError {
    Input(String),
    Verify(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_) => CliError::Verify(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let env_seed = std::env::var(SEED_ENV).ok();
    let mut io = Io { out, err };
    let result = dispatch(cli.command, env_seed.as_deref(), &mut io);
    match result {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Verify(msg)) => {
            let _ = writeln!(io.err, "verification failed: {msg}");
            EXIT_VERIFY
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(io.err, "i/o error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cmd: Command, env_seed: Option<&str>, io: &mut Io) -> CmdResult {
    match cmd {
        Command::Decide { matrix, format } => cmd_decide(&matrix, format, io),
        Command::Bezout { a, b, minimal, divisibility, format } => cmd_bezout(&a, &b, minimal, divisibility, format, io),
        Command::Scan { max, format } => cmd_scan(max, format, io),
        Command::Oracle { modulus, full, matrix, convention, format } => {
            cmd_oracle(modulus, full, &matrix, convention, format, io)
        }
        Command::Witness { matrix, samples, seed, format } => {
            let seed = match (seed, env_seed) {
                (Some(s), _) => s,
                (None, Some(s)) => s
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Input(format!("{SEED_ENV}={s:?} is not an unsigned integer")))?,
                (None, None) => DEFAULT_SEED,
            };
            cmd_witness(&matrix, samples, seed, format, io)
        }
    }
}

fn parse_matrix(s: &str) -> std::result::Result<Mat2, CliError> {
    s.parse::<Mat2>().map_err(CliError::from)
}

fn reject_csv(format: Format) -> std::result::Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Input("csv output is only available for scan".into()));
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::result::Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn opt_mat(m: &Option<[[serde_json::Number; 2]; 2]>) -> String {
    match m {
        Some([[a, b], [c, d]]) => format!("{a},{b};{c},{d}"),
        None => "-".into(),
    }
}

fn cmd_decide(matrix: &str, format: Format, io: &mut Io) -> CmdResult {
    reject_csv(format)?;
    let a = parse_matrix(matrix)?;
    let decision = zdecider::decide_isr1(&a);
    if let Some(w) = decision.witness() {
        zdecider::verify_witness(&a, w, &[Mat2::zero(), Mat2::identity()])?;
    }
    let rec = DecisionRecord::new(&a, &decision);
    match format {
        Format::Json => write_json(io.out, &rec)?,
        _ => {
            writeln!(io.out, "input: {a}")?;
            writeln!(io.out, "status: {}", rec.status.as_str())?;
            writeln!(io.out, "det: {}", rec.det)?;
            writeln!(io.out, "content: {}", rec.content)?;
            writeln!(io.out, "witness E: {}", opt_mat(&rec.witness_e))?;
            writeln!(io.out, "unitizer Y: {}", opt_mat(&rec.unitizer_y))?;
            if let Some(s) = rec.sign {
                writeln!(io.out, "sign: {s}")?;
            }
            if let Some(r) = &rec.reason {
                writeln!(io.out, "reason: {r}")?;
            }
            if let Some([p, q]) = &rec.terminal_pair {
                writeln!(io.out, "terminal pair: ({p}, {q}); {p} is not ±1 modulo {q}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BezoutJson {
    a: serde_json::Number,
    b: serde_json::Number,
    gcd: serde_json::Number,
    x0: serde_json::Number,
    z0: serde_json::Number,
    minimal_pairs: Option<Vec<[serde_json::Number; 2]>>,
    divisibility: Option<DivisibilityJson>,
}

#[derive(Serialize)]
struct DivisibilityJson {
    holds: bool,
    /// `(k, l)` with `(a·k − z0)(a·l + b) = a − 1`.
    minus_solutions: Vec<[serde_json::Number; 2]>,
    /// `(k, l)` with `(a·k − z0)(a·l + b) = −(a + 1)`.
    plus_solutions: Vec<[serde_json::Number; 2]>,
    solution: Option<[serde_json::Number; 2]>,
}

fn kl_list(sp: &ShiftedProduct<BigInt>) -> Vec<[serde_json::Number; 2]> {
    match sp {
        ShiftedProduct::Finite(v) => v.iter().map(|(k, l)| [json::num(k), json::num(l)]).collect(),
        ShiftedProduct::ZeroTarget { .. } => Vec::new(),
    }
}

fn describe_sp(sp: &ShiftedProduct<BigInt>) -> String {
    match sp {
        ShiftedProduct::Finite(v) if v.is_empty() => "no solutions".into(),
        ShiftedProduct::Finite(v) => {
            v.iter().map(|(k, l)| format!("(k,l)=({k},{l})")).collect::<Vec<_>>().join(" ")
        }
        ShiftedProduct::ZeroTarget { k_fixed, l_fixed } => {
            let mut parts = Vec::new();
            if let Some(k) = k_fixed {
                parts.push(format!("k={k}, any l"));
            }
            if let Some(l) = l_fixed {
                parts.push(format!("l={l}, any k"));
            }
            if parts.is_empty() {
                "no solutions".into()
            } else {
                parts.join("; ")
            }
        }
    }
}

fn cmd_bezout(a: &BigInt, b: &BigInt, minimal: bool, divisibility: bool, format: Format, io: &mut Io) -> CmdResult {
    reject_csv(format)?;
    let fam = bezout::ext_gcd(a.clone(), b.clone());
    let pairs = if minimal { Some(bezout::minimal_pairs(a.clone(), b.clone())?) } else { None };
    let div = if divisibility { Some(bezout::divisibility_search(a.clone(), b.clone())?) } else { None };
    match format {
        Format::Json => {
            let rec = BezoutJson {
                a: json::num(a),
                b: json::num(b),
                gcd: json::num(&fam.g),
                x0: json::num(&fam.x0),
                z0: json::num(&fam.z0),
                minimal_pairs: pairs.as_ref().map(|ps| ps.iter().map(|p| [json::num(&p.x), json::num(&p.z)]).collect()),
                divisibility: div.as_ref().map(|d| DivisibilityJson {
                    holds: d.holds(),
                    minus_solutions: kl_list(&d.minus),
                    plus_solutions: kl_list(&d.plus),
                    solution: d.solution.as_ref().map(|(x, z)| [json::num(x), json::num(z)]),
                }),
            };
            write_json(io.out, &rec)?;
        }
        _ => {
            writeln!(io.out, "gcd({a}, {b}) = {}", fam.g)?;
            writeln!(io.out, "base solution: {a}·({}) + {b}·({}) = {}", fam.x0, fam.z0, fam.g)?;
            if let Some(ps) = &pairs {
                let shown: Vec<String> = ps.iter().map(|p| format!("({},{})", p.x, p.z)).collect();
                writeln!(io.out, "minimal pairs: {}", shown.join(", "))?;
            }
            if let Some(d) = &div {
                writeln!(io.out, "divisibility: {}", d.holds())?;
                writeln!(io.out, "  ({a}k - ({}))({a}l + {b}) = {}: {}", fam.z0, a - 1u32, describe_sp(&d.minus))?;
                writeln!(io.out, "  ({a}k - ({}))({a}l + {b}) = {}: {}", fam.z0, -(a + 1u32), describe_sp(&d.plus))?;
                if let Some((x, z)) = &d.solution {
                    writeln!(io.out, "  solution (x,z) = ({x},{z})")?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// One row of the criterion comparison table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub a: u64,
    pub b: u64,
    pub euclidean: bool,
    pub divisibility: bool,
    pub agree: bool,
    pub witness: bool,
}

pub fn scan_rows(max: u64) -> crate::Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            if a.gcd(&b) != 1 {
                continue;
            }
            let euclidean = zdecider::euclidean_criterion(&BigInt::from(a), &BigInt::from(b))?.accepted;
            let divisibility = bezout::divisibility_isr1(a as i64, b as i64)?;
            let m = Mat2::new(a, b, 0, 0);
            let witness = match zdecider::decide_isr1(&m) {
                Decision::Isr1(zdecider::Certificate::Witness(w)) => zdecider::verify_witness(&m, &w, &[]).is_ok(),
                _ => false,
            };
            rows.push(ScanRow { a, b, euclidean, divisibility, agree: euclidean == divisibility, witness });
        }
    }
    Ok(rows)
}

fn cmd_scan(max: u64, format: Format, io: &mut Io) -> CmdResult {
    if !(2..=SCAN_MAX).contains(&max) {
        return Err(CliError::Input(format!("--max must be in [2, {SCAN_MAX}], got {max}")));
    }
    let rows = scan_rows(max)?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *io.out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => write_json(io.out, &rows)?,
        Format::Text => {
            for r in &rows {
                writeln!(
                    io.out,
                    "({}, {}): euclidean {} divisibility {} witness {}{}",
                    r.a,
                    r.b,
                    r.euclidean,
                    r.divisibility,
                    r.witness,
                    if r.agree { "" } else { "  DISAGREE" }
                )?;
            }
        }
    }
    let bad: Vec<&ScanRow> = rows.iter().filter(|r| !r.agree || r.witness != r.euclidean).collect();
    if let Some(first) = bad.first() {
        writeln!(io.err, "{} disagreement(s), first at ({}, {})", bad.len(), first.a, first.b)?;
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn parse_mod_matrix(s: &str, n: u32) -> std::result::Result<ModMat, CliError> {
    let m = parse_matrix(s)?;
    let r = |v: &BigInt| -> i64 {
        let n = BigInt::from(n);
        i64::try_from(v.mod_floor(&n)).expect("residue fits")
    };
    Ok(ModMat::new(n, r(&m.a11), r(&m.a12), r(&m.a21), r(&m.a22)))
}

fn write_report_text(report: &OracleReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "modulus: {}", report.n)?;
    if let Some(c) = &report.counts {
        writeln!(
            out,
            "elements {} units {} idempotents {} clean {} strongly_clean {} sr1 {} thm1_sr1 {}",
            c.elements, c.units, c.idempotents, c.clean, c.strongly_clean, c.sr1, c.thm1_sr1
        )?;
        for cc in &c.by_convention {
            writeln!(
                out,
                "{}: left_isr1 {} right_isr1 {} thm1_isr1 {}",
                cc.convention, cc.left_isr1, cc.right_isr1, cc.thm1_isr1
            )?;
        }
    }
    for m in &report.matrices {
        writeln!(
            out,
            "matrix {}: unit {} clean {} strongly_clean {} sr1 {}",
            m.matrix, m.unit, m.clean, m.strongly_clean, m.sr1
        )?;
        for v in &m.isr1 {
            let fx = |x: &Option<ModMat>| x.map(|x| format!(" (fails at X = {x})")).unwrap_or_default();
            writeln!(
                out,
                "  {}: left_isr1 {}{} right_isr1 {}{}",
                v.convention,
                v.left_isr1,
                fx(&v.left_failing_x),
                v.right_isr1,
                fx(&v.right_failing_x)
            )?;
        }
    }
    for c in &report.claims {
        let tag = match (c.holds, c.open_question) {
            (true, _) => "ok",
            (false, true) => "DIVERGES (open comparison)",
            (false, false) => "VIOLATED",
        };
        writeln!(out, "claim {}: {tag}", c.id)?;
        for v in &c.violations {
            let cert = v.certificate.map(|x| format!(" X = {x}")).unwrap_or_default();
            writeln!(out, "  {} {}{cert}", v.matrix, v.note)?;
        }
    }
    Ok(())
}

fn cmd_oracle(
    n: u32,
    full: bool,
    matrices: &[String],
    convention: ConventionArg,
    format: Format,
    io: &mut Io,
) -> CmdResult {
    reject_csv(format)?;
    let report = if full {
        modring::oracle_full(n, &Convention::ALL)?
    } else {
        if matrices.is_empty() {
            return Err(CliError::Input("oracle needs --full or at least one --matrix".into()));
        }
        let ms = matrices.iter().map(|s| parse_mod_matrix(s, n)).collect::<std::result::Result<Vec<_>, _>>()?;
        modring::oracle_targeted(n, &ms, &convention.conventions())?
    };
    match format {
        Format::Json => write_json(io.out, &report)?,
        _ => write_report_text(&report, io.out)?,
    }
    if report.unexpected_violations().next().is_some() {
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

/// `count` matrices with entries uniform in `[-X_BOUND, X_BOUND]` from a
/// ChaCha8 stream seeded with `seed`.
pub fn sample_matrices(seed: u64, count: usize) -> Vec<Mat2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut e = || rng.gen_range(-X_BOUND..=X_BOUND);
            Mat2::new(e(), e(), e(), e())
        })
        .collect()
}

#[derive(Serialize)]
struct SampleCheck {
    x: [[serde_json::Number; 2]; 2],
    det: serde_json::Number,
    ok: bool,
}

#[derive(Serialize)]
struct WitnessTranscript {
    input: [[serde_json::Number; 2]; 2],
    seed: u64,
    #[serde(rename = "witness_E")]
    witness_e: [[serde_json::Number; 2]; 2],
    #[serde(rename = "unitizer_Y")]
    unitizer_y: [[serde_json::Number; 2]; 2],
    sign: i8,
    clean_idempotent: [[serde_json::Number; 2]; 2],
    clean_unit: [[serde_json::Number; 2]; 2],
    samples: Vec<SampleCheck>,
    all_ok: bool,
}

fn cmd_witness(matrix: &str, samples: usize, seed: u64, format: Format, io: &mut Io) -> CmdResult {
    reject_csv(format)?;
    let a = parse_matrix(matrix)?;
    let decision = zdecider::decide_isr1(&a);
    let Some(w) = decision.witness() else {
        return Err(CliError::Input(format!(
            "not applicable: {a} has status {} and no nontrivial witness",
            decision.status().as_str()
        )));
    };
    w.check(&a)?;
    let clean = zdecider::clean_decompose(&a)?;
    let expected = BigInt::from(-w.sign);
    let id = Mat2::identity();
    let checks: Vec<(Mat2, BigInt)> = sample_matrices(seed, samples)
        .into_iter()
        .map(|x| {
            let d = (&a + &(&w.y * &(&(&x * &a) - &id))).det();
            (x, d)
        })
        .collect();
    let all_ok = checks.iter().all(|(_, d)| *d == expected);
    match format {
        Format::Json => {
            let t = WitnessTranscript {
                input: json::mat(&a),
                seed,
                witness_e: json::mat(&w.e),
                unitizer_y: json::mat(&w.y),
                sign: w.sign,
                clean_idempotent: json::mat(&clean.idempotent),
                clean_unit: json::mat(&clean.unit),
                samples: checks
                    .iter()
                    .map(|(x, d)| SampleCheck { x: json::mat(x), det: json::num(d), ok: *d == expected })
                    .collect(),
                all_ok,
            };
            write_json(io.out, &t)?;
        }
        _ => {
            writeln!(io.out, "input: {a}")?;
            writeln!(io.out, "witness E: {}", w.e)?;
            writeln!(io.out, "unitizer Y: {}", w.y)?;
            writeln!(io.out, "sign: {}", w.sign)?;
            writeln!(io.out, "clean decomposition: {} = ({}) + ({})", a, clean.idempotent, clean.unit)?;
            writeln!(io.out, "seed: {seed}")?;
            for (x, d) in &checks {
                let mark = if *d == expected { "ok" } else { "FAIL" };
                writeln!(io.out, "X = {x}: det(A + Y(XA - I)) = {d} {mark}")?;
            }
            writeln!(io.out, "{} of {} samples give det = {expected}", checks.iter().filter(|(_, d)| *d == expected).count(), checks.len())?;
        }
    }
    if !all_ok {
        return Err(CliError::Verify("some sampled X gave the wrong determinant".into()));
    }
    Ok(EXIT_OK)
}
