//! `thompson`: command-line front end for the thompson-f library.
//!
//! Every subcommand prints one report to standard output. JSON reports share
//! the envelope `{schema_version, command, parameters, results, exact_values}`
//! where `exact_values` maps result names to exact `num/den` strings.
//!
//! Exit codes: 0 success, 1 validation error, 2 size or resource cap,
//! 64 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use thompson_f::cayley::{dead_search_capped, enumerate_ball_capped, ratio_report, DEFAULT_CAP};
use thompson_f::diagrams::{from_word, to_normal_form};
use thompson_f::gamma_family::{
    bar, catalan, closed_a, closed_b, closed_density_bar, closed_nu, degree_histogram, edge_label_counts, gamma,
    gamma_nm_concrete, rank_counts, recursions_hold,
};
use thompson_f::growth_lang::{is_l_word, run_automaton, series};
use thompson_f::metric::{geodesic, norm, special_vertices};
use thompson_f::plmaps::from_word_pl;
use thompson_f::scalar::{rational_string, rational_to_f64};
use thompson_f::subgraphs::full_subgraph2;
use thompson_f::{parse_word, Count, Diagram, Error, GenWord, Rational};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "thompson", version, about = "Exact computation in Thompson's group F")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Nf { word: String },
    /// Word length in x0, x1 via the norm formula.
    Norm { word: String },
    /// Product of two words.
    Mul { left: String, right: String },
    /// A geodesic word in x0, x1 (greedy descent on the norm).
    Geodesic { word: String },
    /// Sphere and ball sizes of the Cayley graph.
    Spheres {
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Elements all of whose neighbors are closer to the identity.
    DeadSearch {
        #[arg(long)]
        max_norm: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Growth series of the normal-form language.
    Series {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Membership of a word in the normal-form language.
    Lword { word: String },
    /// Piecewise-linear map of a word.
    Pl { word: String },
    /// Counts for the density witness family, and optionally a concrete
    /// realization in F.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Emit the JSON report (the default).
        #[arg(long)]
        report: bool,
        /// Print the concrete vertex words, one per line (needs --m).
        #[arg(long)]
        emit_words: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Isoperimetric report for the full subgraph on a list of words, one
    /// per line (an empty line is the identity).
    Subgraph {
        #[arg(long)]
        input: PathBuf,
        /// Emit the JSON report (the default).
        #[arg(long)]
        report: bool,
    },
}

enum Failure {
    Validation(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::ResourceCap { .. } | Error::SizeLimit { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

/// Accumulates a report envelope.
struct Report {
    command: &'static str,
    parameters: Map<String, Value>,
    results: Map<String, Value>,
    exact: Map<String, Value>,
}

impl Report {
    fn new(command: &'static str, parameters: Value) -> Report {
        let parameters = match parameters {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report { command, parameters, results: Map::new(), exact: Map::new() }
    }

    fn put(&mut self, key: &str, value: Value) {
        self.results.insert(key.into(), value);
    }

    /// Stores a rational as `{exact, decimal}` and records it in `exact_values`.
    fn put_rational(&mut self, key: &str, r: &Rational) {
        self.results.insert(key.into(), rational_value(r));
        self.exact.insert(key.into(), Value::String(rational_string(r)));
    }

    fn render(self) -> String {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "exact_values": self.exact,
        })
        .to_string()
    }
}

fn rational_value(r: &Rational) -> Value {
    json!({ "exact": rational_string(r), "decimal": rational_to_f64(r) })
}

/// A count as a JSON number when it fits in `u64`, otherwise a string.
fn count_value(c: &Count) -> Value {
    match c.to_u64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn word_arg(text: &str) -> Result<GenWord, Failure> {
    Ok(parse_word(text)?)
}

fn element(text: &str) -> Result<Diagram, Failure> {
    Ok(from_word(&word_arg(text)?))
}

fn set_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(t) = threads {
        if t == 0 {
            return Err(Failure::Validation("--threads must be positive".into()));
        }
        // The global pool can be built only once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    Ok(())
}

fn ratio_cells(r: Option<&Rational>) -> (String, String) {
    match r {
        Some(r) => (rational_string(r), format!("{:.10}", rational_to_f64(r))),
        None => (String::new(), String::new()),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Nf { word } => {
            let d = element(&word)?;
            let nf = to_normal_form(&d);
            let mut r = Report::new("nf", json!({ "word": word }));
            r.put("normal_form", json!(nf.to_string()));
            r.put("pos", json!(nf.pos));
            r.put("neg", json!(nf.neg));
            r.put("length", json!(nf.len()));
            r.put("key", json!(d.key()));
            Ok(r.render())
        }
        Command::Norm { word } => {
            let d = element(&word)?;
            let mut r = Report::new("norm", json!({ "word": word }));
            r.put("norm", json!(norm(&d)));
            r.put("cells", json!(d.cell_count()));
            r.put("special", json!(special_vertices(&d)));
            r.put("normal_form", json!(to_normal_form(&d).to_string()));
            Ok(r.render())
        }
        Command::Mul { left, right } => {
            let p = element(&left)?.compose(&element(&right)?);
            let mut r = Report::new("mul", json!({ "left": left, "right": right }));
            r.put("normal_form", json!(to_normal_form(&p).to_string()));
            r.put("norm", json!(norm(&p)));
            r.put("key", json!(p.key()));
            Ok(r.render())
        }
        Command::Geodesic { word } => {
            let d = element(&word)?;
            let g = geodesic(&d);
            let mut r = Report::new("geodesic", json!({ "word": word }));
            r.put("geodesic", json!(g.to_string()));
            r.put("length", json!(g.len()));
            r.put("method", json!("greedy descent on the norm"));
            Ok(r.render())
        }
        Command::Spheres { radius, format, cap, threads } => {
            set_threads(threads)?;
            let table = enumerate_ball_capped(radius, cap)?;
            let ratios: Vec<Rational> = ratio_report(&table);
            let (s, b) = (table.sphere_sizes(), table.ball_sizes());
            match format {
                Format::Csv => {
                    let mut out = String::from("n,s_n,b_n,ratio,ratio_decimal\n");
                    for n in 0..=radius {
                        let (exact, dec) = ratio_cells(n.checked_sub(1).map(|i| &ratios[i]));
                        out += &format!("{n},{},{},{exact},{dec}\n", s[n], b[n]);
                    }
                    Ok(out.trim_end().to_string())
                }
                Format::Json => {
                    let mut r = Report::new("spheres", json!({ "radius": radius, "cap": cap }));
                    let rows: Vec<Value> = (0..=radius)
                        .map(|n| {
                            json!({
                                "n": n, "s_n": s[n], "b_n": b[n],
                                "ratio": n.checked_sub(1).map(|i| rational_value(&ratios[i])),
                            })
                        })
                        .collect();
                    r.put("rows", Value::Array(rows));
                    r.put("submultiplicative", json!(table.is_submultiplicative()));
                    let exact: Vec<String> = ratios.iter().map(rational_string).collect();
                    r.exact.insert("ratios".into(), json!(exact));
                    Ok(r.render())
                }
            }
        }
        Command::DeadSearch { max_norm, cap, threads } => {
            set_threads(threads)?;
            let keys = dead_search_capped(max_norm, cap)?;
            let mut r = Report::new("dead-search", json!({ "max_norm": max_norm, "cap": cap }));
            let elements: Result<Vec<Value>, Failure> = keys
                .iter()
                .map(|k| {
                    let d = Diagram::from_key(k)?;
                    Ok(json!({ "normal_form": to_normal_form(&d).to_string(), "key": k }))
                })
                .collect();
            r.put("count", json!(keys.len()));
            r.put("elements", Value::Array(elements?));
            Ok(r.render())
        }
        Command::Series { max_n, format } => {
            let c = series(max_n);
            let ratio = |n: usize| -> Option<Rational> {
                (n > 0).then(|| Rational::new(c[n].clone().into(), c[n - 1].clone().into()))
            };
            match format {
                Format::Csv => {
                    let mut out = String::from("n,c_n,ratio,ratio_decimal\n");
                    for (n, cn) in c.iter().enumerate() {
                        let (exact, dec) = ratio_cells(ratio(n).as_ref());
                        out += &format!("{n},{cn},{exact},{dec}\n");
                    }
                    Ok(out.trim_end().to_string())
                }
                Format::Json => {
                    let mut r = Report::new("series", json!({ "max_n": max_n }));
                    let rows: Vec<Value> = (0..=max_n)
                        .map(|n| json!({ "n": n, "c_n": count_value(&c[n]), "ratio": ratio(n).as_ref().map(rational_value) }))
                        .collect();
                    r.put("rows", Value::Array(rows));
                    let exact: Vec<String> = (1..=max_n).map(|n| rational_string(&ratio(n).expect("n > 0"))).collect();
                    r.exact.insert("ratios".into(), json!(exact));
                    Ok(r.render())
                }
            }
        }
        Command::Lword { word } => {
            let w = word_arg(&word)?;
            let accepted = is_l_word(&w)?;
            let mut r = Report::new("lword", json!({ "word": word }));
            r.put("accepted", json!(accepted));
            r.put("final_class", json!(run_automaton(&w).map(|s| s.number())));
            Ok(r.render())
        }
        Command::Pl { word } => {
            let f = from_word_pl(&word_arg(&word)?);
            let mut r = Report::new("pl", json!({ "word": word }));
            let points: Vec<Value> =
                f.breakpoints().iter().map(|(x, y)| json!([x.to_string(), y.to_string()])).collect();
            r.put("breakpoints", Value::Array(points));
            r.put("tail_offset", json!(f.tail_offset()));
            r.put("slopes", json!(f.slopes()));
            Ok(r.render())
        }
        Command::Gamma { n, m, report: _, emit_words, threads } => {
            set_threads(threads)?;
            if n < 2 {
                return Err(Failure::Validation(format!("gamma needs --n >= 2, got {n}")));
            }
            if emit_words {
                let m = m.ok_or_else(|| Failure::Validation("--emit-words needs --m".into()))?;
                let c = gamma_nm_concrete(n, m)?;
                return Ok(c.words().iter().map(|w| w.to_string()).collect::<Vec<_>>().join("\n"));
            }
            gamma_report(n, m)
        }
        Command::Subgraph { input, report: _ } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", input.display())))?;
            let elems: Vec<Diagram> = text.lines().map(element).collect::<Result<_, _>>()?;
            let y = full_subgraph2(&elems);
            let density: Rational = y.density()?;
            let doubling = y.doubling_check();
            let mut r = Report::new("subgraph", json!({ "input": input.display().to_string(), "words": elems.len() }));
            r.put("vertices", json!(y.len()));
            r.put_rational("density", &density);
            r.put("q", json!(y.q_value()?));
            r.put("boundary_size", json!(y.boundary().len()));
            r.put("doubling", json!(doubling));
            r.put("matching_found", json!(y.two_one_matching().is_found()));
            r.put("min_degree", json!(y.min_degree()?));
            Ok(r.render())
        }
    }
}

fn gamma_report(n: usize, m: Option<usize>) -> Outcome {
    let g = gamma(n)?;
    let prev = gamma(n - 1)?;
    let a_row = rank_counts(&g);
    let b_row = edge_label_counts(&g);
    let nu = degree_histogram(&bar(&g));
    let measured: Rational = bar(&g).density()?;
    let closed: Rational = closed_density_bar(n)?;
    let big = |v: usize| BigUint::from(v);
    let a_ok = (1..=n).all(|k| closed_a(n, k).is_ok_and(|c| c == big(a_row[k])));
    let b_ok = (0..=n).all(|k| closed_b(n, k).is_ok_and(|c| c == big(b_row[k])));
    let nu_ok = (n >= 5).then(|| {
        nu.iter().enumerate().all(|(d, &v)| match d {
            2..=4 => closed_nu(n, d).is_ok_and(|c| c == big(v)),
            _ => v == 0,
        })
    });
    let cat = catalan(n);
    let mut r = Report::new("gamma", json!({ "n": n, "m": m }));
    r.put("catalan", count_value(&cat));
    r.put("a_row", json!(a_row));
    r.put("b_row", json!(b_row));
    r.put_rational("density", &measured);
    r.put("nu", json!(nu));
    let mut checks = json!({
        "vertex_count_is_catalan": big(g.vertex_count()) == cat,
        "a_row_matches_closed_form": a_ok,
        "b_row_matches_closed_form": b_ok,
        "density_matches_closed_form": measured == closed,
        "nu_matches_closed_form": nu_ok,
        "recursions": recursions_hold(&prev, &g),
    });
    if let Some(m) = m {
        let c = gamma_nm_concrete(n, m)?;
        let sub = c.bar_subgraph();
        let concrete_density: Rational = sub.density()?;
        let blocks = c.column_partition::<Rational>(&sub);
        let interior_equal = blocks.len() < 3 || blocks[1..m].windows(2).all(|w| w[0].rho == w[1].rho);
        let cc = c.checks();
        checks["concrete"] = json!(cc);
        checks["interior_rho_equal"] = json!(interior_equal);
        let columns: Vec<Value> = blocks
            .iter()
            .map(|b| json!({ "origin": b.origin, "size": b.size, "rho": rational_value(&b.rho) }))
            .collect();
        r.put(
            "concrete",
            json!({
                "vertices": c.diagrams().len(),
                "edges": c.graph().edges().len(),
                "density_bar": rational_value(&concrete_density),
                "min_degree": sub.min_degree()?,
                "columns": columns,
            }),
        );
        r.exact.insert("concrete_density_bar".into(), json!(rational_string(&concrete_density)));
    }
    r.put("checks", checks);
    Ok(r.render())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
