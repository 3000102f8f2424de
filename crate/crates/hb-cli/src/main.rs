//! `hb`: command-line surface for higher Bruhat orders `B(n,d)`, higher
//! Stasheff–Tamari posets `S(n,d)`, and the maps between them.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 budget
//! exhausted, 4 absent result (e.g. `g-inverse` of a non-superconsistent
//! element). Identical invocations produce byte-identical standard output.

use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use higher_bruhat::bruhat::{
    bruhat_leq, canonical_cmp, covers_up, enumerate_bruhat, is_superconsistent, BruhatElement,
    BruhatError,
};
use higher_bruhat::cube::{complex_of, face_of, vandermonde_map, verify_tiling};
use higher_bruhat::cube::{maxprefix_image_labels, maxprefix_preserves_dim, vertex_figure_ones};
use higher_bruhat::cyclic::{
    bottom_top, covers_up_t, enumerate_tamari, enumerate_tamari_flip, extension, link,
    snug_to_triangulation, triangulation_to_snug, CyclicError, Triangulation,
};
use higher_bruhat::maps::{
    element_to_perm, f_def1, f_def2, f_def3, fiber_f, g, g_inverse, g_via_ascending,
    g_via_chain, inverse_perm, min_max_fiber, perm_to_element, psi, surjectivity_witness,
    theta_inverse, MapsError,
};
use higher_bruhat::poset::{build_hasse, export, moebius, ExportFormat, HasseDiagram};
use higher_bruhat::subsets::{k_subsets, LabelSet};

#[derive(Parser)]
#[command(name = "hb", version, about = "Exact combinatorics of higher Bruhat orders and higher Stasheff-Tamari posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PosetKind {
    /// Higher Bruhat order B(n,d).
    Bruhat,
    /// Higher Stasheff-Tamari poset S(n,d).
    Tamari,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    /// One canonical JSON element per line.
    Json,
    /// Compact digit notation (labels must not exceed 9).
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// JSON with keys and cover pairs.
    Json,
    /// Graphviz DOT.
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapKind {
    /// B(n,d) -> S([0,n+1],d+1).
    F,
    /// S(n,d) -> B(n-1,d).
    G,
    /// Preimage under g, when the element is superconsistent.
    GInverse,
    /// Link at the smallest ground vertex.
    Link0,
    /// Link at the largest ground vertex.
    LinkTop,
    /// Link at both extreme ground vertices.
    LinkBoth,
    /// Canonical lift S(n,d) -> S([0,n],d+1).
    Extension,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all elements of a poset in canonical order.
    Enum {
        poset: PosetKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
        /// Abort (exit 3) after discovering this many elements.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Apply a map to a single element.
    Map {
        which: MapKind,
        /// Element as canonical JSON, or compact inversion sets like
        /// "123,124,456,356" (requires --n/--d; labels up to 9).
        #[arg(long)]
        element: Option<String>,
        /// Read the element payload from standard input instead.
        #[arg(long)]
        stdin: bool,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// The fiber of f over a triangulation of C([0,n+1], d+1).
    Fiber {
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        stdin: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Export the Hasse diagram of a poset.
    Hasse {
        poset: PosetKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Möbius function values on a poset.
    Moebius {
        poset: PosetKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        /// Canonical JSON key of the lower endpoint (default: the minimum).
        #[arg(long)]
        from: Option<String>,
        /// Canonical JSON key of the upper endpoint (default: the maximum).
        #[arg(long)]
        to: Option<String>,
        /// Additionally check the delta-sum identity on this many random
        /// intervals.
        #[arg(long)]
        check_delta: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification suite; exits 1 on the first failure per suite.
    Verify {
        /// all | thm2.1 | thm4.x | prop5.x | prop6.1 | prop7.x | thm8.1 |
        /// thm9.1 | thm10.1 | thm11.1 | prop12.x
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 2)]
        max_d: usize,
        #[arg(long)]
        budget: Option<usize>,
        /// Seed for randomized spot checks (reserved; suites are exhaustive).
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// A failure routed to a specific process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn verification(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
    fn budget(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
    fn absent(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<BruhatError> for Failure {
    fn from(e: BruhatError) -> Self {
        match e {
            BruhatError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<CyclicError> for Failure {
    fn from(e: CyclicError) -> Self {
        match e {
            CyclicError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<MapsError> for Failure {
    fn from(e: MapsError) -> Self {
        match e {
            MapsError::Bruhat(inner) => inner.into(),
            MapsError::Cyclic(inner) => inner.into(),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enum { poset, n, d, format, budget } => cmd_enum(poset, n, d, format, budget),
        Command::Map { which, element, stdin, n, d } => {
            let payload = read_payload(element, stdin)?;
            cmd_map(which, &payload, n, d)
        }
        Command::Fiber { element, stdin, budget } => {
            let payload = read_payload(element, stdin)?;
            cmd_fiber(&payload, budget)
        }
        Command::Hasse { poset, n, d, format, budget } => cmd_hasse(poset, n, d, format, budget),
        Command::Moebius { poset, n, d, from, to, check_delta, seed, budget } => {
            cmd_moebius(poset, n, d, from, to, check_delta, seed, budget)
        }
        Command::Verify { suite, max_n, max_d, budget, seed: _ } => {
            cmd_verify(&suite, max_n, max_d, budget)
        }
    }
}

// ---------------------------------------------------------------- elements

enum Element {
    Bruhat(BruhatElement),
    Tamari(Triangulation),
}

fn read_payload(element: Option<String>, stdin: bool) -> Result<String, Failure> {
    match (element, stdin) {
        (Some(_), true) => Err(Failure::invalid("pass --element or --stdin, not both")),
        (Some(text), false) => Ok(text),
        (None, true) => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::invalid(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        (None, false) => Err(Failure::invalid("an element is required (--element or --stdin)")),
    }
}

/// Parses a canonical JSON element, or the compact inversion-set form
/// (digit strings, so labels at most 9) with `--n`/`--d` supplying the
/// ambient parameters.
fn parse_element(text: &str, n: Option<u32>, d: Option<usize>) -> Result<Element, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Failure::invalid(format!("bad JSON: {e}")))?;
        return match v["type"].as_str() {
            Some("bruhat") => Ok(Element::Bruhat(BruhatElement::from_json(&v)?)),
            Some("tamari") => Ok(Element::Tamari(Triangulation::from_json(&v)?)),
            _ => Err(Failure::invalid("JSON element needs \"type\": \"bruhat\" or \"tamari\"")),
        };
    }
    let n = n.ok_or_else(|| Failure::invalid("compact input requires --n"))?;
    let d = d.ok_or_else(|| Failure::invalid("compact input requires --d"))?;
    if n > 9 {
        return Err(Failure::invalid("compact input supports labels up to 9; use JSON"));
    }
    let mut inversions = BTreeSet::new();
    for chunk in text.split(',').map(str::trim).filter(|c| !c.is_empty() && *c != "-") {
        let labels: Vec<u32> = chunk
            .chars()
            .map(|c| {
                c.to_digit(10).ok_or_else(|| {
                    Failure::invalid(format!("compact sets are digit strings, got {chunk:?}"))
                })
            })
            .collect::<Result<_, _>>()?;
        let set = LabelSet::from_slice(&labels)
            .map_err(|e| Failure::invalid(format!("bad set {chunk:?}: {e}")))?;
        inversions.insert(set);
    }
    Ok(Element::Bruhat(BruhatElement::new(n, d, inversions)?))
}

fn expect_bruhat(e: Element) -> Result<BruhatElement, Failure> {
    match e {
        Element::Bruhat(b) => Ok(b),
        Element::Tamari(_) => Err(Failure::invalid("this map expects a Bruhat element")),
    }
}

fn expect_tamari(e: Element) -> Result<Triangulation, Failure> {
    match e {
        Element::Tamari(t) => Ok(t),
        Element::Bruhat(_) => Err(Failure::invalid("this map expects a triangulation")),
    }
}

// ------------------------------------------------------------- subcommands

fn sorted_bruhat(n: u32, d: usize, budget: Option<usize>) -> Result<Vec<BruhatElement>, Failure> {
    let mut elements = enumerate_bruhat(n, d, budget)?;
    elements.sort_by(canonical_cmp);
    Ok(elements)
}

fn sorted_tamari(n: u32, d: usize, budget: Option<usize>) -> Result<Vec<Triangulation>, Failure> {
    let mut elements = enumerate_tamari(n, d, budget)?;
    elements.sort();
    Ok(elements)
}

fn compact_sets<'a>(sets: impl Iterator<Item = &'a LabelSet>) -> String {
    let parts: Vec<String> = sets.map(|s| s.compact()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(",")
    }
}

fn cmd_enum(
    poset: PosetKind,
    n: u32,
    d: usize,
    format: ListFormat,
    budget: Option<usize>,
) -> Result<(), Failure> {
    if format == ListFormat::Text && n > 9 {
        return Err(Failure::invalid("text format supports labels up to 9; use --format json"));
    }
    let count = match poset {
        PosetKind::Bruhat => {
            let elements = sorted_bruhat(n, d, budget)?;
            for e in &elements {
                match format {
                    ListFormat::Json => println!("{}", e.to_json()),
                    ListFormat::Text => println!("{}", compact_sets(e.inversions.iter())),
                }
            }
            elements.len()
        }
        PosetKind::Tamari => {
            let elements = sorted_tamari(n, d, budget)?;
            for t in &elements {
                match format {
                    ListFormat::Json => println!("{}", t.to_json()),
                    ListFormat::Text => println!("{}", compact_sets(t.simplices.iter())),
                }
            }
            elements.len()
        }
    };
    eprintln!("{count}");
    Ok(())
}

fn cmd_map(
    which: MapKind,
    payload: &str,
    n: Option<u32>,
    d: Option<usize>,
) -> Result<(), Failure> {
    let element = parse_element(payload, n, d)?;
    let output = match which {
        MapKind::F => f_def2(&expect_bruhat(element)?)?.to_json(),
        MapKind::G => g(&expect_tamari(element)?)?.to_json(),
        MapKind::GInverse => {
            let e = expect_bruhat(element)?;
            match g_inverse(&e)? {
                Some(t) => t.to_json(),
                None => {
                    return Err(Failure::absent(
                        "element is not superconsistent; no preimage under g",
                    ))
                }
            }
        }
        MapKind::Link0 | MapKind::LinkTop | MapKind::LinkBoth => {
            let t = expect_tamari(element)?;
            let ground = t.ground();
            let lo = ground.min().ok_or_else(|| Failure::invalid("empty ground set"))?;
            let hi = ground.max().expect("nonempty");
            let at = match which {
                MapKind::Link0 => LabelSet::singleton(lo),
                MapKind::LinkTop => LabelSet::singleton(hi),
                _ => LabelSet::singleton(lo).with(hi),
            };
            link(&t, at)?.to_json()
        }
        MapKind::Extension => extension(&expect_tamari(element)?)?.to_json(),
    };
    println!("{output}");
    Ok(())
}

fn cmd_fiber(payload: &str, budget: Option<usize>) -> Result<(), Failure> {
    let t = expect_tamari(parse_element(payload, None, None)?)?;
    let m = t.labels.len() as u32;
    if m < 2 || !t.labels.iter().copied().eq(0..m) || t.d == 0 {
        return Err(Failure::invalid("fiber expects a triangulation on ground [0..n+1] with d >= 1"));
    }
    let (n, d) = (m - 2, t.d - 1);
    let fiber = fiber_f(&t, n, d, budget)?;
    for e in &fiber {
        println!("{}", e.to_json());
    }
    eprintln!("{}", fiber.len());
    Ok(())
}

fn build_poset_hasse(
    poset: PosetKind,
    n: u32,
    d: usize,
    budget: Option<usize>,
) -> Result<HasseDiagram, Failure> {
    let h = match poset {
        PosetKind::Bruhat => {
            let elements = sorted_bruhat(n, d, budget)?;
            build_hasse("bruhat", &elements, |e| e.to_json().to_string(), covers_up)
        }
        PosetKind::Tamari => {
            let elements = sorted_tamari(n, d, budget)?;
            build_hasse("tamari", &elements, |t| t.to_json().to_string(), covers_up_t)
        }
    };
    h.map_err(|e| Failure::invalid(e.to_string()))
}

fn cmd_hasse(
    poset: PosetKind,
    n: u32,
    d: usize,
    format: GraphFormat,
    budget: Option<usize>,
) -> Result<(), Failure> {
    let h = build_poset_hasse(poset, n, d, budget)?;
    let format = match format {
        GraphFormat::Json => ExportFormat::Json,
        GraphFormat::Dot => ExportFormat::Dot,
    };
    print!("{}", export(&h, format));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_moebius(
    poset: PosetKind,
    n: u32,
    d: usize,
    from: Option<String>,
    to: Option<String>,
    check_delta: Option<usize>,
    seed: u64,
    budget: Option<usize>,
) -> Result<(), Failure> {
    let h = build_poset_hasse(poset, n, d, budget)?;
    let index_for = |key: Option<String>, fallback: Vec<usize>, what: &str| {
        match key {
            Some(k) => h.index_of(&k).map_err(|e| Failure::invalid(e.to_string())),
            None => match fallback.as_slice() {
                [only] => Ok(*only),
                _ => Err(Failure::invalid(format!("poset has no unique {what}; pass a key"))),
            },
        }
    };
    let a = index_for(from, h.sources(), "minimum")?;
    let b = index_for(to, h.sinks(), "maximum")?;
    let value = moebius(&h, a, b).map_err(|e| Failure::invalid(e.to_string()))?;
    println!("{value}");

    if let Some(count) = check_delta {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        while checked < count {
            let x = rng.gen_range(0..h.len());
            let y = rng.gen_range(0..h.len());
            if !h.leq(x, y) {
                continue;
            }
            let total: i64 = h
                .interval(x, y)
                .into_iter()
                .map(|z| moebius(&h, x, z).expect("comparable"))
                .sum();
            if total != i64::from(x == y) {
                return Err(Failure::verification(format!(
                    "delta-sum identity fails on interval [{x}, {y}]"
                )));
            }
            checked += 1;
        }
        eprintln!("delta-sum identity verified on {count} random intervals");
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

type SuiteResult = Result<(), String>;

fn cmd_verify(suite: &str, max_n: u32, max_d: usize, budget: Option<usize>) -> Result<(), Failure> {
    let all: &[(&str, fn(u32, usize, Option<usize>) -> SuiteResult)] = &[
        ("prop12.x", suite_prop12x),
        ("prop5.x", suite_prop5x),
        ("prop6.1", suite_prop61),
        ("prop7.x", suite_prop7x),
        ("thm10.1", suite_thm101),
        ("thm11.1", suite_thm111),
        ("thm2.1", suite_thm21),
        ("thm4.x", suite_thm4x),
        ("thm8.1", suite_thm81),
        ("thm9.1", suite_thm91),
    ];
    let selected: Vec<_> = if suite == "all" {
        all.to_vec()
    } else {
        let found = all.iter().find(|(id, _)| *id == suite);
        match found {
            Some(entry) => vec![*entry],
            None => {
                let ids: Vec<&str> = all.iter().map(|(id, _)| *id).collect();
                return Err(Failure::invalid(format!(
                    "unknown suite {suite:?}; expected all or one of {}",
                    ids.join(", ")
                )));
            }
        }
    };

    let mut failed = false;
    for (id, run) in selected {
        match run(max_n, max_d, budget) {
            Ok(()) => println!("{id}: pass"),
            Err(witness) => {
                failed = true;
                println!("{id}: FAIL — {witness}");
            }
        }
    }
    if failed {
        Err(Failure::verification("some suites failed"))
    } else {
        Ok(())
    }
}

fn dims(max_n: u32, max_d: usize) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in (d as u32 + 1)..=max_n {
            out.push((n, d));
        }
    }
    out
}

/// Face complexes tile the projected cube with free boundary `K(0̂) ∪ K(1̂)`.
fn suite_thm21(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for (n, d) in dims(max_n, max_d) {
        let projection = vandermonde_map(n, d);
        for e in enumerate_bruhat(n, d, budget).map_err(|e| e.to_string())? {
            let report = verify_tiling(&complex_of(&e), &projection)
                .map_err(|e| e.to_string())?;
            if !report.ok() {
                return Err(format!(
                    "B({n},{d}) element {} does not tile: {:?}",
                    compact_sets(e.inversions.iter()),
                    report.violations
                ));
            }
        }
    }
    Ok(())
}

/// The three constructions of `f` agree elementwise.
fn suite_thm4x(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for (n, d) in dims(max_n, max_d) {
        for e in enumerate_bruhat(n, d, budget).map_err(|e| e.to_string())? {
            let a = f_def1(&e).map_err(|e| e.to_string())?;
            let b = f_def2(&e).map_err(|e| e.to_string())?;
            let c = f_def3(&e).map_err(|e| e.to_string())?;
            if a != b || b != c {
                return Err(format!(
                    "definitions of f disagree on B({n},{d}) element {}",
                    compact_sets(e.inversions.iter())
                ));
            }
        }
    }
    Ok(())
}

/// `d = 1`: factorial counts, binary-tree factorization, interval fibers.
fn suite_prop5x(max_n: u32, _max_d: usize, budget: Option<usize>) -> SuiteResult {
    for n in 1..=max_n {
        let elements = enumerate_bruhat(n, 1, budget).map_err(|e| e.to_string())?;
        let expected: usize = (1..=n as usize).product();
        if elements.len() != expected {
            return Err(format!("|B({n},1)| = {} != {expected}", elements.len()));
        }
        for e in &elements {
            let word = element_to_perm(e).map_err(|e| e.to_string())?;
            let via_trees = psi(&inverse_perm(&word));
            let direct =
                theta_inverse(&f_def2(e).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if direct != via_trees {
                return Err(format!("tree factorization fails for word {word:?}"));
            }
        }
        let labels: Vec<u32> = (0..=n + 1).collect();
        for t in enumerate_tamari_flip(&labels, 2, budget).map_err(|e| e.to_string())? {
            let fiber: BTreeSet<BTreeSet<LabelSet>> = fiber_f(&t, n, 1, budget)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|e| e.inversions)
                .collect();
            let (min_w, max_w) = min_max_fiber(&t).map_err(|e| e.to_string())?;
            let lo = perm_to_element(&min_w).map_err(|e| e.to_string())?;
            let hi = perm_to_element(&max_w).map_err(|e| e.to_string())?;
            let interval: BTreeSet<BTreeSet<LabelSet>> = elements
                .iter()
                .filter(|e| bruhat_leq(&lo, e) && bruhat_leq(e, &hi))
                .map(|e| e.inversions.clone())
                .collect();
            if fiber != interval {
                return Err(format!(
                    "fiber over {} is not the interval [Min, Max]",
                    compact_sets(t.simplices.iter())
                ));
            }
        }
    }
    Ok(())
}

/// Every triangulation of `C([0,n+1],3)` has an explicit preimage under `f`.
fn suite_prop61(max_n: u32, _max_d: usize, budget: Option<usize>) -> SuiteResult {
    for n in 2..=max_n {
        let labels: Vec<u32> = (0..=n + 1).collect();
        for t in enumerate_tamari_flip(&labels, 3, budget).map_err(|e| e.to_string())? {
            let e = surjectivity_witness(&t).map_err(|e| e.to_string())?;
            if f_def2(&e).map_err(|e| e.to_string())? != t {
                return Err(format!(
                    "witness misses the triangulation {}",
                    compact_sets(t.simplices.iter())
                ));
            }
        }
    }
    Ok(())
}

/// Link identities between cube faces and the image triangulation.
fn suite_prop7x(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for (n, d) in dims(max_n, max_d) {
        for e in enumerate_bruhat(n, d, budget).map_err(|e| e.to_string())? {
            let image = f_def2(&e).map_err(|e| e.to_string())?;
            let witness = || compact_sets(e.inversions.iter());

            let figure: BTreeSet<LabelSet> = vertex_figure_ones(&e).into_iter().collect();
            let ends = LabelSet::singleton(0).with(n + 1);
            let lk_ends = link(&image, ends).map_err(|e| e.to_string())?;
            if figure != lk_ends.simplices {
                return Err(format!("vertex-figure identity fails at B({n},{d}) {}", witness()));
            }

            let preserved: BTreeSet<LabelSet> = k_subsets(LabelSet::interval(1, n), d)
                .into_iter()
                .filter_map(|x| {
                    let face = face_of(&e, x);
                    maxprefix_preserves_dim(&face).then(|| maxprefix_image_labels(&face))
                })
                .collect();
            let lk_zero = link(&image, LabelSet::singleton(0)).map_err(|e| e.to_string())?;
            if preserved != lk_zero.simplices {
                return Err(format!("prefix-map identity fails at B({n},{d}) {}", witness()));
            }
        }
    }
    Ok(())
}

/// The snug-partition bijection, cross-checked against flip enumeration.
fn suite_thm81(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for d in 1..=max_d {
        for n in (d as u32 + 2)..=max_n {
            let by_cover = enumerate_tamari(n, d, budget).map_err(|e| e.to_string())?;
            let labels: Vec<u32> = (1..=n).collect();
            let by_flip: BTreeSet<Triangulation> = enumerate_tamari_flip(&labels, d, budget)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            if by_cover.iter().cloned().collect::<BTreeSet<_>>() != by_flip {
                return Err(format!("enumerations of S({n},{d}) disagree"));
            }
            for t in &by_cover {
                let p = triangulation_to_snug(t).map_err(|e| e.to_string())?;
                if &snug_to_triangulation(&p).map_err(|e| e.to_string())? != t {
                    return Err(format!(
                        "snug round trip fails on {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Image of `g` = superconsistent elements; `g_inverse` is two-sided there.
fn suite_thm91(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for d in 1..=max_d {
        for n in (d as u32 + 2)..=max_n {
            let tamari = enumerate_tamari(n, d, budget).map_err(|e| e.to_string())?;
            let image: BTreeSet<BTreeSet<LabelSet>> = tamari
                .iter()
                .map(|t| g(t).map(|e| e.inversions))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for e in enumerate_bruhat(n - 1, d, budget).map_err(|e| e.to_string())? {
                let superconsistent = is_superconsistent(&e.inversions, n - 1, d);
                if superconsistent != image.contains(&e.inversions) {
                    return Err(format!(
                        "image of g mischaracterized at B({},{d}) element {}",
                        n - 1,
                        compact_sets(e.inversions.iter())
                    ));
                }
                match g_inverse(&e).map_err(|e| e.to_string())? {
                    Some(t) if superconsistent => {
                        if g(&t).map_err(|e| e.to_string())? != e {
                            return Err(format!(
                                "g_inverse is not a right inverse at {}",
                                compact_sets(e.inversions.iter())
                            ));
                        }
                    }
                    None if !superconsistent => {}
                    _ => {
                        return Err(format!(
                            "g_inverse presence disagrees with superconsistency at {}",
                            compact_sets(e.inversions.iter())
                        ))
                    }
                }
            }
            for t in &tamari {
                let e = g(t).map_err(|e| e.to_string())?;
                if g_inverse(&e).map_err(|e| e.to_string())?.as_ref() != Some(t) {
                    return Err(format!(
                        "g_inverse is not a left inverse on {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
            }
        }
    }
    Ok(())
}

/// `g` is an injective order-preserving map fixing the extremes.
fn suite_thm101(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for d in 1..=max_d {
        for n in (d as u32 + 2)..=max_n {
            let tamari = enumerate_tamari(n, d, budget).map_err(|e| e.to_string())?;
            let images: Vec<BruhatElement> = tamari
                .iter()
                .map(g)
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let distinct: BTreeSet<&BTreeSet<LabelSet>> =
                images.iter().map(|e| &e.inversions).collect();
            if distinct.len() != tamari.len() {
                return Err(format!("g is not injective on S({n},{d})"));
            }
            for (t, e) in tamari.iter().zip(&images) {
                for up in covers_up_t(t) {
                    let e_up = g(&up).map_err(|e| e.to_string())?;
                    if !bruhat_leq(e, &e_up) {
                        return Err(format!("g is not order-preserving on S({n},{d})"));
                    }
                }
            }
            let (bottom, top) = bottom_top(&(1..=n).collect::<Vec<_>>(), d);
            if g(&bottom).map_err(|e| e.to_string())? != BruhatElement::bottom(n - 1, d)
                || g(&top).map_err(|e| e.to_string())? != BruhatElement::top(n - 1, d)
            {
                return Err(format!("g does not fix the extremes of S({n},{d})"));
            }
        }
    }
    Ok(())
}

/// `f ∘ g` is the canonical extension, inverted by the link at `0`.
fn suite_thm111(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for d in 1..=max_d {
        for n in (d as u32 + 2)..=max_n {
            for t in enumerate_tamari(n, d, budget).map_err(|e| e.to_string())? {
                let ext = extension(&t).map_err(|e| e.to_string())?;
                let composed =
                    f_def2(&g(&t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                if composed != ext {
                    return Err(format!(
                        "f(g(S)) differs from the extension on {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
                if link(&ext, LabelSet::singleton(0)).map_err(|e| e.to_string())? != t {
                    return Err(format!(
                        "link at 0 does not recover {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The ascending-concatenation and chain constructions agree with `g`.
fn suite_prop12x(max_n: u32, max_d: usize, budget: Option<usize>) -> SuiteResult {
    for d in 1..=max_d {
        for n in (d as u32 + 2)..=max_n {
            for t in enumerate_tamari(n, d, budget).map_err(|e| e.to_string())? {
                let reference = g(&t).map_err(|e| e.to_string())?;
                if g_via_ascending(&t).map_err(|e| e.to_string())? != reference {
                    return Err(format!(
                        "ascending construction of g disagrees on {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
                if d >= 2 && g_via_chain(&t).map_err(|e| e.to_string())? != reference {
                    return Err(format!(
                        "chain construction of g disagrees on {}",
                        compact_sets(t.simplices.iter())
                    ));
                }
            }
        }
    }
    Ok(())
}
