use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fideal_core::census::{sample_fideals, CensusRecord};
use fideal_core::duality::generalized_newton_dual;
use fideal_core::{
    certify, complement_fvector, degree_partition, dimension, enumerate_all_fideals, enumerate_v,
    exists_complex_oracle, f_vector, facet_complex, generator_degree_implications, is_f_ideal, kk_valid,
    kk_valid_dual, macaulay_bound, macaulay_expansion, minimal_primes, necessary_conditions, newton_dual_with,
    nonface_complex, orbit_count, partition_sizes, search_degree_gap, verify_duality_pairing, Applicability,
    BetaVector, CandidateFVector, CensusConfig, DegreeSpec, ExponentIdeal, FVector, IdealOptions, Method, MonomialIdeal,
    Outcome, SimplicialComplex, SquareFreeMonomial,
};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::document::{parse_ideal, render_record, render_text, ParseError, Parsed};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] fideal_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "fideal", version, about = "Square-free monomial ideals, f-ideals and their duals")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Human-readable table or one JSON record per line
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Census worker threads (0 = one per core)
    #[arg(long, default_value_t = 0, global = true)]
    pub workers: usize,
    /// Maximum number of census candidates to test
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Maximum number of census witnesses printed
    #[arg(long, default_value_t = 100, global = true)]
    pub witness_cap: usize,
    /// Exit with status 1 on a mathematical negative
    #[arg(long, global = true)]
    pub strict: bool,
    /// Accept the unit monomial `1` as a generator
    #[arg(long, global = true)]
    pub allow_unit: bool,
    /// Seed for randomized searches
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Write the full census (one ideal per line) to this file
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Records,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Ideal given inline, e.g. "n=3; x1*x2"
    #[arg(long, short = 'i')]
    pub ideal: Option<String>,
    /// File holding the ideal; stdin when omitted or `-`
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-vectors of the facet and non-face complexes
    Fvector(Input),
    /// Facets, f-vectors and dimensions of both complexes
    Complexes(Input),
    /// Newton complementary dual (generalized with --beta)
    Dual {
        #[command(flatten)]
        input: Input,
        /// Exponent bound, comma separated
        #[arg(long, value_delimiter = ',')]
        beta: Option<Vec<u32>>,
    },
    /// Whether the ideal is an f-ideal
    Check(Input),
    /// Full f-ideal certificate with the necessary-condition reports
    Certify(Input),
    /// Sizes of the A/B/C/D blocks of each degree
    Partition {
        #[command(flatten)]
        input: Input,
        /// List the members of one degree
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Minimal primes (minimal vertex covers)
    Primes(Input),
    /// Kruskal-Katona criteria for a vector such as 1,5,8,2
    Kk {
        fvector: String,
        /// Ambient vertex count for the complement criteria (default f_0)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Macaulay expansion of A in base J and its shift A^(J)
    KkExpand { a: u64, j: u32 },
    /// (C(n,i) - f_{n-i-1}) for i = 0..n
    Complement {
        fvector: String,
        #[arg(long)]
        n: usize,
    },
    /// Census of f-ideals: V(n,d) with --d, all f-ideals otherwise
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Test this many seeded random ideals instead of enumerating
        #[arg(long)]
        sample: Option<u64>,
        /// Also count classes under permutations of the variables
        #[arg(long)]
        orbits: bool,
    },
    /// Check |V(n,d)| = |V(n,n-d)| with the dual as explicit bijection
    Pair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// f-ideals whose generator degrees span exactly GAP
    GapSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gap: usize,
    },
}

enum Verdict {
    Positive,
    Negative,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Positive
        } else {
            Verdict::Negative
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit
/// status: 0 on success, 1 on a mathematical negative under `--strict`, 2 on bad input.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let mut session = Session { global: &cli.global, stdin, out, err };
    match session.execute(&cli.command) {
        Ok(Verdict::Negative) if cli.global.strict => 1,
        Ok(_) => 0,
        Err(e) => {
            let _ = writeln!(session.err, "error: {e}");
            2
        }
    }
}

struct Session<'a> {
    global: &'a Global,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type Status = Result<Verdict, CliError>;

impl Session<'_> {
    fn records(&self) -> bool {
        self.global.format == Format::Records
    }

    fn read(&mut self, input: &Input) -> Result<Parsed, CliError> {
        let text = match (&input.ideal, &input.file) {
            (Some(text), None) => text.clone(),
            (None, Some(path)) if path.as_os_str() != "-" => fs::read_to_string(path)?,
            (None, _) => {
                let mut buf = String::new();
                self.stdin.read_to_string(&mut buf)?;
                buf
            }
            (Some(_), Some(_)) => return Err(CliError::Usage("give either --ideal or a file, not both".into())),
        };
        let parsed = parse_ideal(&text, self.global.allow_unit)?;
        if let Some(w) = &parsed.warning {
            writeln!(self.err, "warning: {w}")?;
        }
        Ok(parsed)
    }

    fn line(&mut self, text: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.out, "{}", text.as_ref())
    }

    fn record<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let text = serde_json::to_string(value).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(self.line(text)?)
    }

    fn census_config(&self) -> CensusConfig {
        let mut cfg = CensusConfig {
            witness_cap: self.global.witness_cap,
            workers: self.global.workers,
            ..CensusConfig::default()
        };
        if let Some(b) = self.global.budget {
            cfg.budget = b;
        }
        if self.global.output.is_some() {
            cfg.witness_cap = usize::MAX;
        }
        cfg
    }

    fn execute(&mut self, command: &Command) -> Status {
        match command {
            Command::Fvector(input) => self.fvector(input),
            Command::Complexes(input) => self.complexes(input),
            Command::Dual { input, beta } => self.dual(input, beta.as_deref()),
            Command::Check(input) => self.check(input),
            Command::Certify(input) => self.certify(input),
            Command::Partition { input, degree } => self.partition(input, *degree),
            Command::Primes(input) => self.primes(input),
            Command::Kk { fvector, n } => self.kk(fvector, *n),
            Command::KkExpand { a, j } => self.kk_expand(*a, *j),
            Command::Complement { fvector, n } => self.complement(fvector, *n),
            Command::Enumerate { n, d, sample, orbits } => self.enumerate(*n, *d, *sample, *orbits),
            Command::Pair { n, d } => self.pair(*n, *d),
            Command::GapSearch { n, gap } => {
                let record = search_degree_gap(*n, *gap, &self.census_config())?;
                self.census(&record, false)
            }
        }
    }

    fn fvector(&mut self, input: &Input) -> Status {
        let ideal = self.read(input)?.ideal;
        let facet = f_vector(&facet_complex(&ideal)?);
        let nonface = f_vector(&nonface_complex(&ideal));
        if self.records() {
            self.record(&json!({ "facet": facet, "nonface": nonface }))?;
        } else {
            self.line(format!("facet:   {facet}"))?;
            self.line(format!("nonface: {nonface}"))?;
        }
        Ok(Verdict::Positive)
    }

    fn complexes(&mut self, input: &Input) -> Status {
        let ideal = self.read(input)?.ideal;
        let facet = facet_complex(&ideal)?;
        let nonface = nonface_complex(&ideal);
        if self.records() {
            let describe = |cx: &SimplicialComplex| -> Result<serde_json::Value, CliError> {
                Ok(json!({
                    "facets": cx.facets().iter().map(|f| f.vars().collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "fvector": f_vector(cx),
                    "dimension": dimension(cx)?,
                }))
            };
            self.record(&json!({ "facet": describe(&facet)?, "nonface": describe(&nonface)? }))?;
        } else {
            for (name, cx) in [("facet", &facet), ("nonface", &nonface)] {
                self.line(format!("{name} complex: {cx}"))?;
                self.line(format!("  f = {}, dim = {}", f_vector(cx), dimension(cx)?))?;
            }
        }
        Ok(Verdict::Positive)
    }

    fn dual(&mut self, input: &Input, beta: Option<&[u32]>) -> Status {
        let parsed = self.read(input)?;
        match beta {
            None => {
                let options = IdealOptions { allow_unit: self.global.allow_unit };
                let dual = newton_dual_with(&parsed.ideal, options)?;
                if self.records() {
                    self.line(render_record(&dual, parsed.label.as_deref()))?;
                } else {
                    self.line(render_text(&dual))?;
                }
            }
            Some(beta) => {
                let beta = BetaVector::new(beta.to_vec())?;
                let dual = generalized_newton_dual(&ExponentIdeal::from(&parsed.ideal), &beta)?;
                if self.records() {
                    let gens: Vec<&[u32]> = dual.generators().iter().map(|g| g.exponents()).collect();
                    self.record(&json!({ "n": dual.ambient(), "beta": beta.bounds(), "exponents": gens }))?;
                } else {
                    let gens: Vec<String> = dual.generators().iter().map(|g| g.to_string()).collect();
                    self.line(format!("n={}; {}", dual.ambient(), gens.join(", ")))?;
                }
            }
        }
        Ok(Verdict::Positive)
    }

    fn check(&mut self, input: &Input) -> Status {
        let ideal = self.read(input)?.ideal;
        let verdict = is_f_ideal(&ideal, Method::default())?;
        let facet = f_vector(&facet_complex(&ideal)?);
        let nonface = f_vector(&nonface_complex(&ideal));
        if self.records() {
            self.record(&json!({ "f_ideal": verdict, "facet": facet, "nonface": nonface }))?;
        } else if verdict {
            self.line(format!("f-ideal: true; f = {facet}"))?;
        } else {
            self.line(format!("f-ideal: false; f(facet) = {facet}, f(nonface) = {nonface}"))?;
        }
        Ok(verdict.into())
    }

    fn certify(&mut self, input: &Input) -> Status {
        let ideal = self.read(input)?.ideal;
        let cert = certify(&ideal)?;
        let conditions = necessary_conditions(&ideal)?;
        let generators = generator_degree_implications(&ideal)?;
        if self.records() {
            self.record(&json!({
                "certificate": cert,
                "necessary_conditions": conditions,
                "generator_implications": generators,
            }))?;
            return Ok(cert.is_f_ideal.into());
        }
        self.line(format!("f-ideal: {}", cert.is_f_ideal))?;
        self.line(format!("facet f-vector:   {}", cert.facet_fvector))?;
        self.line(format!("nonface f-vector: {}", cert.nonface_fvector))?;
        self.partition_table(&cert.partition)?;
        match cert.first_failure {
            None => self.line("first failure: none")?,
            Some(f) => self.line(format!("first failure: degree {} (|A| = {}, |C| = {})", f.degree, f.a, f.c))?,
        }
        for w in &cert.warnings {
            self.line(format!("warning: {}", serde_json::to_string(w).unwrap_or_default()))?;
        }
        if let Applicability::Applicable(c) = &conditions {
            let names = [
                "f_i = C(n,i+1) below alpha-1",
                "f_(alpha-1) >= C(n,alpha)/2",
                "f_(omega-1) <= C(n,omega)/2",
                "f_(alpha-1) = C(n,alpha)/2 if equigenerated",
                "dim = omega-1 <= n-2",
            ];
            self.line(format!("necessary conditions (alpha = {}, omega = {}):", c.alpha, c.omega))?;
            for (k, (name, outcome)) in names.iter().zip(c.items()).enumerate() {
                self.line(format!("  ({}) {name}: {}", k + 1, outcome_name(outcome)))?;
            }
        }
        if let Applicability::Applicable(g) = &generators {
            for (name, imp) in [
                (format!("generator of degree {}", g.alpha + 1), g.above_alpha),
                (format!("generator of degree {}", g.omega - 1), g.below_omega),
            ] {
                let status = match imp.conclusion_verified {
                    None => "hypothesis not met".to_string(),
                    Some(ok) => format!("hypothesis met, conclusion {}", if ok { "holds" } else { "FAILS" }),
                };
                self.line(format!("implied {name}: {status}"))?;
            }
        }
        Ok(cert.is_f_ideal.into())
    }

    fn partition_table(&mut self, sizes: &[fideal_core::PartitionSizes]) -> io::Result<()> {
        self.line(" d  |A|  |B|  |C|  |D|")?;
        for s in sizes {
            self.line(format!("{:>2} {:>4} {:>4} {:>4} {:>4}", s.degree, s.a, s.b, s.c, s.d))?;
        }
        Ok(())
    }

    fn partition(&mut self, input: &Input, degree: Option<usize>) -> Status {
        let ideal = self.read(input)?.ideal;
        match degree {
            None if self.records() => {
                for s in partition_sizes(&ideal) {
                    self.record(&s)?;
                }
            }
            None => self.partition_table(&partition_sizes(&ideal))?,
            Some(d) => {
                if d > ideal.ambient() {
                    return Err(CliError::Usage(format!("degree {d} exceeds n = {}", ideal.ambient())));
                }
                let p = degree_partition(&ideal, d);
                let blocks = [("A", &p.a), ("B", &p.b), ("C", &p.c), ("D", &p.d)];
                if self.records() {
                    let sets = |ms: &[SquareFreeMonomial]| -> Vec<Vec<usize>> {
                        ms.iter().map(|m| m.vars().collect()).collect()
                    };
                    self.record(&json!({
                        "degree": d, "a": sets(&p.a), "b": sets(&p.b), "c": sets(&p.c), "d": sets(&p.d)
                    }))?;
                } else {
                    for (name, block) in blocks {
                        let members: Vec<String> = block.iter().map(|m| m.to_string()).collect();
                        self.line(format!("{name} ({}):{}", block.len(), prefixed(&members.join(", "))))?;
                    }
                }
            }
        }
        Ok(Verdict::Positive)
    }

    fn primes(&mut self, input: &Input) -> Status {
        let ideal = self.read(input)?.ideal;
        let primes = minimal_primes(&ideal)?;
        if self.records() {
            let sets: Vec<Vec<usize>> = primes.primes.iter().map(|p| p.vars().collect()).collect();
            self.record(&json!({ "primes": sets, "height": primes.height, "unmixed": primes.unmixed }))?;
        } else {
            self.line(format!("height {}, unmixed: {}", primes.height, primes.unmixed))?;
            for p in &primes.primes {
                let vars: Vec<String> = p.vars().map(|v| format!("x{v}")).collect();
                self.line(format!("<{}>", vars.join(", ")))?;
            }
        }
        Ok(Verdict::Positive)
    }

    fn kk(&mut self, text: &str, n: Option<usize>) -> Status {
        let f = parse_fvector(text)?;
        let n = n.unwrap_or(f.vertices() as usize);
        let oracle = exists_complex_oracle(&f).ok();
        let macaulay = kk_valid(&f);
        let complement = complement_fvector(&f, n)?;
        let dual = kk_valid_dual(&f, n)?;
        if self.records() {
            self.record(&json!({
                "fvector": f,
                "n": n,
                "oracle": oracle,
                "macaulay": macaulay,
                "complement": complement.trimmed,
                "complement_valid": complement.is_fvector(),
                "dual_bounds": dual,
            }))?;
        } else {
            self.line(format!("f = {f}, n = {n}"))?;
            let oracle = oracle.map_or("unavailable".to_string(), |b| b.to_string());
            self.line(format!("(i)   some complex has this f-vector: {oracle}"))?;
            self.line(format!("(ii)  Macaulay bounds hold: {macaulay}"))?;
            self.line(format!(
                "(iii) complement {} is an f-vector: {}",
                FVector::new(complement.trimmed.clone())?,
                complement.is_fvector()
            ))?;
            self.line(format!("(iv)  complementary bounds hold: {dual}"))?;
        }
        Ok(macaulay.into())
    }

    fn kk_expand(&mut self, a: u64, j: u32) -> Status {
        let bound = macaulay_bound(a, j)?;
        let expansion = if a == 0 { None } else { Some(macaulay_expansion(a, j)?) };
        if self.records() {
            let terms = expansion.as_ref().map(|e| e.terms.clone()).unwrap_or_default();
            self.record(&json!({ "value": a, "index": j, "terms": terms, "bound": bound }))?;
        } else {
            match &expansion {
                Some(e) => self.line(e.to_string())?,
                None => self.line("0 = (empty sum)")?,
            }
            self.line(format!("{a}^({j}) = {bound}"))?;
        }
        Ok(Verdict::Positive)
    }

    fn complement(&mut self, text: &str, n: usize) -> Status {
        let f = parse_fvector(text)?;
        let c = complement_fvector(&f, n)?;
        if self.records() {
            self.record(&json!({
                "fvector": f,
                "n": n,
                "raw": c.raw,
                "complement": c.trimmed,
                "nominal_vertices": c.nominal_vertices,
                "is_fvector": c.is_fvector(),
            }))?;
        } else {
            let raw: Vec<String> = c.raw.iter().map(u64::to_string).collect();
            self.line(format!("slots: ({})", raw.join(",")))?;
            self.line(format!(
                "complement: {} on {} nominal vertices; f-vector: {}",
                FVector::new(c.trimmed.clone())?,
                c.nominal_vertices,
                c.is_fvector()
            ))?;
        }
        Ok(c.is_fvector().into())
    }

    fn enumerate(&mut self, n: usize, d: Option<usize>, sample: Option<u64>, orbits: bool) -> Status {
        let mut cfg = self.census_config();
        if orbits {
            cfg.witness_cap = usize::MAX;
        }
        let record = match (sample, d) {
            (Some(_), Some(_)) => return Err(CliError::Usage("--sample cannot be combined with --d".into())),
            (Some(samples), None) => sample_fideals(n, samples, self.global.seed, &cfg)?,
            (None, Some(d)) => enumerate_v(n, d, &cfg)?,
            (None, None) => enumerate_all_fideals(n, &cfg)?,
        };
        self.census(&record, orbits)
    }

    fn census(&mut self, record: &CensusRecord, orbits: bool) -> Status {
        let ideals: Vec<MonomialIdeal> = record.ideals().cloned().collect();
        let orbit_total = (orbits && !record.budget_exhausted && record.count as usize == ideals.len())
            .then(|| orbit_count(&ideals));
        if orbits && orbit_total.is_none() {
            writeln!(self.err, "warning: orbits need a complete census; raise --budget")?;
        }
        if let Some(path) = &self.global.output {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write_census(record, &mut file)?;
            file.flush()?;
        }
        writeln!(self.err, "elapsed: {:.3}s", record.elapsed.as_secs_f64())?;
        let shown = &record.witnesses[..record.witnesses.len().min(self.global.witness_cap)];
        if self.records() {
            let mut summary = json!({
                "n": record.n,
                "degree": degree_value(record.degree),
                "count": record.count,
                "candidates_tested": record.candidates_tested,
                "budget_exhausted": record.budget_exhausted,
            });
            if let Some(o) = orbit_total {
                summary["orbits"] = json!(o);
            }
            self.record(&summary)?;
            for w in shown {
                let doc = crate::document::IdealDocument::from_ideal(&w.ideal, None);
                self.record(&json!({
                    "n": doc.n, "generators": doc.generators, "alpha": w.alpha, "omega": w.omega
                }))?;
            }
        } else {
            self.line(format!(
                "{}: count {}, candidates {}, budget exhausted: {}",
                census_title(record),
                record.count,
                record.candidates_tested,
                record.budget_exhausted
            ))?;
            if let Some(o) = orbit_total {
                self.line(format!("orbits under variable permutations: {o}"))?;
            }
            for w in shown {
                if w.is_mixed() {
                    self.line(format!("{}  [alpha={}, omega={}]", render_text(&w.ideal), w.alpha, w.omega))?;
                } else {
                    self.line(render_text(&w.ideal))?;
                }
            }
            if shown.len() < record.count as usize {
                self.line(format!("... {} more", record.count as usize - shown.len()))?;
            }
        }
        Ok(Verdict::Positive)
    }

    fn pair(&mut self, n: usize, d: usize) -> Status {
        let report = verify_duality_pairing(n, d, &self.census_config())?;
        if self.records() {
            self.record(&report)?;
        } else {
            self.line(format!(
                "|V({n},{d})| = {}, |V({n},{})| = {}, equal: {}, dual bijection verified: {}",
                report.count,
                n - d,
                report.dual_count,
                report.equal,
                report.bijection_checked
            ))?;
            if report.inconclusive {
                self.line("inconclusive: budget exhausted")?;
            }
        }
        Ok((report.equal && report.bijection_checked).into())
    }
}

fn prefixed(text: &str) -> String {
    if text.is_empty() {
        String::new()
    } else {
        format!(" {text}")
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "FAIL",
        Outcome::Vacuous => "vacuous",
    }
}

fn degree_value(d: DegreeSpec) -> serde_json::Value {
    match d {
        DegreeSpec::Exact(d) => json!(d),
        DegreeSpec::Mixed => json!("mixed"),
        DegreeSpec::Gap(g) => json!({ "gap": g }),
    }
}

fn census_title(record: &CensusRecord) -> String {
    match record.degree {
        DegreeSpec::Exact(d) => format!("V({},{d})", record.n),
        DegreeSpec::Mixed => format!("f-ideals on {} variables", record.n),
        DegreeSpec::Gap(g) => format!("f-ideals on {} variables with omega - alpha = {g}", record.n),
    }
}

/// Census file: a `#` summary header, then one ideal per line in text form.
pub fn write_census(record: &CensusRecord, out: &mut dyn Write) -> io::Result<()> {
    let degree = match record.degree {
        DegreeSpec::Exact(d) => d.to_string(),
        DegreeSpec::Mixed => "mixed".into(),
        DegreeSpec::Gap(g) => format!("gap{g}"),
    };
    writeln!(
        out,
        "# n={} d={degree} count={} budget_exhausted={} candidates={}",
        record.n, record.count, record.budget_exhausted, record.candidates_tested
    )?;
    for ideal in record.ideals() {
        writeln!(out, "{}", render_text(ideal))?;
    }
    Ok(())
}

/// `1,5,8,2` or `(1,5,8,2)`.
pub fn parse_fvector(text: &str) -> Result<CandidateFVector, CliError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let counts = inner
        .split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("not a count: `{}`", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CandidateFVector::new(counts)?)
}
