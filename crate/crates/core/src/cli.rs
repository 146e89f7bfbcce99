//! The `sftkit` command line. `run` takes the full argument list and returns
//! the exit status with everything written to stdout and stderr, so tests
//! can drive it without spawning a process.

use crate::cyclic::reduced_cyclic_homology;
use crate::czindex::{cz_crossing, cz_direct_sum, cz_gamma_orbit, cz_rotation_signed, normal_index_data, rs_shear, CzError, Ellipticity, GammaKind, GeneratorPath};
use crate::dga::{augment, homology, linearize, word_complex, ChainComplex, Dga, DgaError, FormatError, HomologyGroup, WordFilter};
use crate::energy::{admissible, type_a_energy, EnergyError, TypeADecomposition};
use crate::machine::MachineDoc;
use crate::models::{
    hc_window, interior_orbit_bound, linearized_ranks, model_chords, model_orbits, parity_obstruction, ranks_from_homology, surgery_cone_ranks, ModelError, ModelGenerator, ModelParams,
};
use crate::ring::{format_rational, parse_rational, Rational, UPoly};
use crate::trees::{aut_order, check_positivity, psi_full, psi_mixed, psi_reduced, DecoratedForest, TreeError};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::json;
use std::collections::BTreeMap;
use std::ffi::OsString;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Machine,
}

#[derive(Parser)]
#[command(name = "sftkit", version, about = "Exact algebra for deformed contact homology")]
struct Cli {
    /// Output as aligned text or as line-delimited machine records.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conley–Zehnder and Robbin–Salamon indices.
    Cz(CzArgs),
    /// Intersection numbers and twisting maps of a decorated forest.
    Trees(TreesArgs),
    /// Cobordism energy and the admissibility gate.
    Energy(EnergyArgs),
    /// Check, linearize and compute homology of a dg-algebra document.
    Dga(DgaArgs),
    /// Reduced cyclic homology of an associative dg-algebra document.
    Cyclic(CyclicArgs),
    /// Tables of the open-book model.
    #[command(subcommand)]
    Model(ModelCommand),
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("index").required(true).multiple(false).args(["rotation", "shear", "crossing", "gamma1", "normal", "sum"])))]
struct CzArgs {
    /// 1 + 2⌊λ⌋ for a rotation by λ.
    #[arg(long, value_name = "LAMBDA")]
    rotation: Option<String>,
    /// Use the negative-elliptic sign.
    #[arg(long)]
    negative: bool,
    /// Robbin–Salamon index of the shear with this many blocks.
    #[arg(long, value_name = "BLOCKS")]
    shear: Option<u32>,
    #[arg(long = "loop", value_name = "K", default_value_t = 0)]
    loop_k: i64,
    /// Count integer crossings of λ(t) = t·λ(1) by bisection.
    #[arg(long, value_name = "LAMBDA1")]
    crossing: Option<String>,
    #[arg(long, default_value_t = 64)]
    subdivisions: usize,
    /// Index of the central orbit of the tubular model.
    #[arg(long, requires_all = ["period", "a"])]
    gamma1: bool,
    #[arg(long)]
    period: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    cz_base: i64,
    /// Parity and α± of a normal index.
    #[arg(long, allow_negative_numbers = true)]
    normal: Option<i64>,
    /// Index of a direct sum.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    sum: Option<Vec<i64>>,
}

#[derive(Args)]
struct TreesArgs {
    /// Forest document (JSON).
    path: String,
    /// Contract this interior edge first.
    #[arg(long, value_name = "EDGE")]
    contract: Option<u32>,
    /// Evaluate the mixed twisting map at r⁺,r⁻,E,R_min.
    #[arg(long, value_name = "R+,R-,E,RMIN", value_delimiter = ',')]
    mixed: Option<Vec<String>>,
}

#[derive(Args)]
struct EnergyArgs {
    #[arg(long)]
    r_plus: String,
    #[arg(long)]
    r_minus: String,
    /// Energy of the cobordism; or give --c-minus and --c-plus.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["c_minus", "c_plus"])]
    energy: Option<String>,
    #[arg(long, allow_negative_numbers = true, requires = "c_plus")]
    c_minus: Option<String>,
    #[arg(long, allow_negative_numbers = true, requires = "c_minus")]
    c_plus: Option<String>,
    /// Use r⁺ ≥ e^E r⁻ instead of the strict inequality.
    #[arg(long)]
    relaxed: bool,
}

#[derive(Args)]
struct DgaArgs {
    /// Algebra document (JSON).
    path: String,
    /// Verify d² = 0 and the bidegree of the differential.
    #[arg(long)]
    check: bool,
    /// Augmentation values, e.g. `a1=-1,a3=0`; `0` for the zero augmentation.
    #[arg(long, value_name = "EPS", allow_hyphen_values = true)]
    linearize: Option<String>,
    /// Homology in degrees LO..HI, of the linearization if one is given.
    #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
    homology: Option<String>,
    /// Drop the unit from the word complex.
    #[arg(long)]
    reduced: bool,
    /// Restrict the word complex to one link degree.
    #[arg(long, allow_negative_numbers = true)]
    link: Option<i64>,
    /// Substitute U = S before anything else.
    #[arg(long, value_name = "S", allow_hyphen_values = true)]
    set_u: Option<String>,
}

#[derive(Args)]
struct CyclicArgs {
    path: String,
    #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
    window: String,
    #[arg(long, allow_negative_numbers = true)]
    link: Option<i64>,
    #[arg(long, value_name = "S", allow_hyphen_values = true)]
    set_u: Option<String>,
}

#[derive(Subcommand)]
enum ModelCommand {
    /// Orbit generators below the index window.
    Orbits(OrbitArgs),
    /// Chord generators up to a link degree.
    Chords {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        max_link: i64,
    },
    /// The linearized rank table, checked against homology.
    Ranks {
        #[arg(long)]
        n: i64,
        #[arg(long = "N")]
        window: i64,
    },
    /// The index–winding congruence and the vanishing differential.
    Parity(OrbitArgs),
    /// Reduced cyclic homology of the chord algebra at link 2.
    Hc {
        #[arg(long)]
        n: i64,
    },
    /// Ranks of the subcritical surgery cone.
    Cone {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        top: i64,
    },
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    a: f64,
    #[arg(long = "N")]
    window: i64,
    #[arg(long, default_value_t = 1.0)]
    rho: f64,
}

enum Failure {
    Input(String),
    Domain(String),
}

macro_rules! domain {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Domain(e.to_string())
            }
        }
    )*};
}
domain!(CzError, EnergyError, TreeError, DgaError, ModelError);

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Syntax(s) => Failure::Input(s),
            FormatError::Domain(d) => d.into(),
        }
    }
}

type Res = Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let f = cli.format;
    let result = match cli.command {
        Command::Cz(a) => cz(&a, f),
        Command::Trees(a) => trees(&a, f),
        Command::Energy(a) => energy(&a, f),
        Command::Dga(a) => dga(&a, f),
        Command::Cyclic(a) => cyclic(&a, f),
        Command::Model(m) => model(&m, f),
    };
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Input(s)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {s}\n") },
        Err(Failure::Domain(s)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {s}\n") },
    }
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| Failure::Input(e.to_string()))
}

fn window(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Input(format!("expected a window LO..HI, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// Left-aligned columns separated by two spaces.
fn table(head: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = head.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(widths[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(head.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn pairs(rows: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = rows.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    let width = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
    rows.iter().map(|r| format!("{:width$}  {}\n", r[0], r[1])).collect()
}

fn cz(a: &CzArgs, f: Format) -> Res {
    let (text, record) = if let Some(l) = &a.rotation {
        let lambda = rational(l)?;
        let e = if a.negative { Ellipticity::Negative } else { Ellipticity::Positive };
        let v = cz_rotation_signed(&lambda, e)?;
        (v.to_string(), json!({"method": "rotation", "lambda": format_rational(&lambda), "negative": a.negative, "cz": v}))
    } else if let Some(b) = a.shear {
        let v = rs_shear(b, a.loop_k);
        (v.to_string(), json!({"method": "shear", "blocks": b, "loop": a.loop_k, "index": v.to_string()}))
    } else if let Some(l) = &a.crossing {
        let lambda = rational(l)?;
        let v = cz_crossing(&GeneratorPath::Linear(lambda.clone()), a.subdivisions)?;
        (v.to_string(), json!({"method": "crossing", "lambda": format_rational(&lambda), "cz": v}))
    } else if a.gamma1 {
        let (p, av) = (a.period.unwrap_or_default(), a.a.unwrap_or_default());
        let g = cz_gamma_orbit(GammaKind::Gamma1, p, av, a.cz_base)?;
        (
            pairs(&[("cz", g.cz.to_string()), ("period", g.period.to_string()), ("rotation", g.rotation.to_string())]),
            json!({"method": "gamma1", "period_u": p, "a": av, "cz_base": a.cz_base, "cz": g.cz, "period": g.period, "rotation": g.rotation}),
        )
    } else if let Some(c) = a.normal {
        let d = normal_index_data(c);
        (
            pairs(&[("parity", d.p_n.to_string()), ("alpha_minus", d.alpha_minus.to_string()), ("alpha_plus", d.alpha_plus.to_string())]),
            json!({"method": "normal", "cz": c, "parity": d.p_n, "alpha_minus": d.alpha_minus, "alpha_plus": d.alpha_plus}),
        )
    } else {
        let parts = a.sum.clone().unwrap_or_default();
        let v = cz_direct_sum(&parts);
        (v.to_string(), json!({"method": "sum", "parts": parts, "cz": v}))
    };
    Ok(match f {
        Format::Table if text.ends_with('\n') => text,
        Format::Table => text + "\n",
        Format::Machine => MachineDoc::new("cz").with(&record).emit(),
    })
}

fn trees(a: &TreesArgs, f: Format) -> Res {
    let mut t = DecoratedForest::from_json(&read(&a.path)?).map_err(|e| Failure::Input(e.to_string()))?;
    if let Some(e) = a.contract {
        t = t.contract_edge(e)?;
    }
    let full = psi_full(&t)?;
    let reduced = psi_reduced(&t);
    let aut = aut_order(&t).map(|n| n.to_string()).unwrap_or_else(|_| "too large".into());
    let pos = check_positivity(&t);
    let mixed = match &a.mixed {
        Some(v) => {
            let q: Vec<Rational> = v.iter().map(|s| rational(s)).collect::<Result<_, _>>()?;
            if q.len() != 4 {
                return Err(Failure::Input("--mixed takes four values r+,r-,E,R_min".into()));
            }
            Some(psi_mixed(&t, &q[0], &q[1], &q[2], &q[3])?)
        }
        None => None,
    };
    match f {
        Format::Table => {
            let mut rows = vec![
                ("vertices", t.vertices().len().to_string()),
                ("intersection", t.intersection_number().to_string()),
                ("psi_full", full.to_string()),
                ("psi_reduced", reduced.to_string()),
            ];
            if let Some(m) = mixed {
                rows.push(("psi_mixed", m.to_string()));
            }
            rows.push(("aut_order", aut));
            rows.push(("per_vertex", if pos.per_vertex_ok() { "pass" } else { "fail" }.into()));
            rows.push(("global", if pos.global_ok() { "pass" } else { "fail" }.into()));
            Ok(pairs(&rows))
        }
        Format::Machine => Ok(MachineDoc::new("trees")
            .with(&json!({
                "vertices": t.vertices().len(),
                "intersection": t.intersection_number(),
                "psi_full": full.to_string(),
                "psi_reduced": reduced,
                "psi_mixed": mixed,
                "aut_order": aut,
                "per_vertex": pos.per_vertex_ok(),
                "global": pos.global_ok(),
            }))
            .emit()),
    }
}

fn energy(a: &EnergyArgs, f: Format) -> Res {
    let (rp, rm) = (rational(&a.r_plus)?, rational(&a.r_minus)?);
    let e = match (&a.energy, &a.c_minus, &a.c_plus) {
        (Some(e), _, _) => rational(e)?,
        (None, Some(cm), Some(cp)) => type_a_energy(&TypeADecomposition::new(rational(cm)?, rational(cp)?, false)?).value,
        _ => return Err(Failure::Input("give --energy or both --c-minus and --c-plus".into())),
    };
    let ok = admissible(&rp, &rm, &e, a.relaxed)?;
    let verdict = if ok { "admissible" } else { "inadmissible" };
    Ok(match f {
        Format::Table => pairs(&[("energy", format_rational(&e)), ("gate", if a.relaxed { "relaxed" } else { "strict" }.into()), ("verdict", verdict.into())]),
        Format::Machine => MachineDoc::new("energy")
            .with(&json!({"r_plus": format_rational(&rp), "r_minus": format_rational(&rm), "energy": format_rational(&e), "relaxed": a.relaxed, "admissible": ok}))
            .emit(),
    })
}

fn load_dga(path: &str, set_u: &Option<String>) -> Result<Dga, Failure> {
    let a = Dga::from_json(&read(path)?)?;
    Ok(match set_u {
        Some(s) => a.evaluate_u(&rational(s)?),
        None => a,
    })
}

fn augmentation_values(spec: &str) -> Result<BTreeMap<String, UPoly>, Failure> {
    let mut map = BTreeMap::new();
    if spec.trim() == "0" {
        return Ok(map);
    }
    for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Failure::Input(format!("expected NAME=VALUE, got `{part}`")))?;
        map.insert(k.trim().to_string(), UPoly::constant(rational(v.trim())?));
    }
    Ok(map)
}

fn homology_rows(h: &[HomologyGroup]) -> (String, Vec<serde_json::Value>) {
    let rows: Vec<Vec<String>> = h
        .iter()
        .map(|g| {
            let torsion: Vec<String> = g.torsion.iter().map(|p| format!("({p})")).collect();
            vec![g.degree.to_string(), g.free_rank.to_string(), if torsion.is_empty() { "-".into() } else { torsion.join(" ") }]
        })
        .collect();
    let records = h
        .iter()
        .map(|g| json!({"degree": g.degree, "free_rank": g.free_rank, "torsion": g.torsion.iter().map(|p| p.to_string()).collect::<Vec<_>>()}))
        .collect();
    (table(&["degree", "rank", "torsion"], &rows), records)
}

fn complex_rows(c: &ChainComplex) -> Vec<(String, String)> {
    (0..c.basis().len())
        .map(|j| {
            let mut out = String::new();
            for (i, p) in c.column(j) {
                let label = &c.basis()[*i].label;
                let (neg, coeff) = if p.is_constant() {
                    let q = p.coeff(0);
                    (q < Rational::from_integer(0.into()), format_rational(&q.abs()))
                } else {
                    (false, format!("({p})"))
                };
                let term = if coeff == "1" { label.clone() } else { format!("{coeff} {label}") };
                match (out.is_empty(), neg) {
                    (true, true) => out = format!("-{term}"),
                    (true, false) => out = term,
                    (false, true) => out = format!("{out} - {term}"),
                    (false, false) => out = format!("{out} + {term}"),
                }
            }
            (c.basis()[j].label.clone(), if out.is_empty() { "0".into() } else { out })
        })
        .collect()
}

fn dga(a: &DgaArgs, f: Format) -> Res {
    let alg = load_dga(&a.path, &a.set_u)?;
    let mut text = String::new();
    let mut doc = MachineDoc::new("dga");
    if a.check {
        if let Some((g, r)) = alg.check_d_squared().into_iter().next() {
            return Err(DgaError::DSquaredNonzero { generator: g, residue: alg.format_element(&r) }.into());
        }
        if let Some((g, w)) = alg.check_bidegree().into_iter().next() {
            return Err(DgaError::DegreeMismatch(format!("d{g} contains `{}` of a different link degree", alg.format_word(&w))).into());
        }
        text.push_str(&pairs(&[
            ("generators", alg.generators().len().to_string()),
            ("d_squared", "0".into()),
            ("bidegree", if alg.is_bigraded() { "(-1,0)" } else { "not bigraded" }.into()),
        ]));
        doc.push(&json!({"check": "ok", "generators": alg.generators().len(), "bigraded": alg.is_bigraded()}));
    }
    let lin = match &a.linearize {
        Some(spec) => {
            let eps = augment(&alg, &augmentation_values(spec)?)?;
            let c = linearize(&alg, &eps);
            let rows = complex_rows(&c);
            text.push_str(&pairs(&rows.iter().map(|(k, v)| (k.as_str(), format!("d = {v}"))).collect::<Vec<_>>()));
            for (k, v) in &rows {
                doc.push(&json!({"generator": k, "linearized": v}));
            }
            Some(c)
        }
        None => None,
    };
    if let Some(w) = &a.homology {
        let (lo, hi) = window(w)?;
        let c = match lin {
            Some(c) => c,
            None => word_complex(&alg, lo, hi, WordFilter { link: a.link, reduced: a.reduced })?,
        };
        let (t, records) = homology_rows(&homology(&c, lo, hi));
        text.push_str(&t);
        doc.records.extend(records);
    }
    if !a.check && a.linearize.is_none() && a.homology.is_none() {
        let rows: Vec<Vec<String>> = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                vec![
                    g.name.clone(),
                    g.degree.to_string(),
                    g.link.map_or("-".into(), |l| l.to_string()),
                    alg.format_element(alg.differential_of(i)),
                ]
            })
            .collect();
        text.push_str(&table(&["generator", "degree", "link", "d"], &rows));
        doc = MachineDoc::new("dga").with(&serde_json::from_str::<serde_json::Value>(&alg.to_json()).expect("documents are JSON"));
    }
    Ok(match f {
        Format::Table => text,
        Format::Machine => doc.emit(),
    })
}

fn cyclic(a: &CyclicArgs, f: Format) -> Res {
    let alg = load_dga(&a.path, &a.set_u)?;
    let (lo, hi) = window(&a.window)?;
    let h = reduced_cyclic_homology(&alg, lo, hi, a.link)?;
    let route = format!("{:?}", h.route).to_lowercase();
    let (t, records) = homology_rows(&h.groups);
    Ok(match f {
        Format::Table => t,
        Format::Machine => {
            let mut doc = MachineDoc::new("cyclic").with(&json!({"route": route, "link": a.link}));
            doc.records.extend(records);
            doc.emit()
        }
    })
}

fn generator_table(kind: &str, gens: &[ModelGenerator], f: Format) -> String {
    match f {
        Format::Table => {
            let rows: Vec<Vec<String>> = gens
                .iter()
                .map(|g| vec![g.name.clone(), g.cover.to_string(), g.cz.map_or("-".into(), |c| c.to_string()), g.degree.to_string(), g.link.to_string()])
                .collect();
            table(&["name", "k", "cz", "degree", "link"], &rows)
        }
        Format::Machine => {
            let mut doc = MachineDoc::new(kind);
            for g in gens {
                doc.push(g);
            }
            doc.emit()
        }
    }
}

fn params(o: &OrbitArgs) -> ModelParams {
    ModelParams { n: o.n, a: o.a, window: o.window, rho: o.rho }
}

fn module(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        r => vec!["Q"; r].join("+"),
    }
}

fn model(m: &ModelCommand, f: Format) -> Res {
    match m {
        ModelCommand::Orbits(o) => Ok(generator_table("orbits", &model_orbits(&params(o))?, f)),
        ModelCommand::Chords { n, max_link } => Ok(generator_table("chords", &model_chords(*n, *max_link)?, f)),
        ModelCommand::Parity(o) => {
            let p = params(o);
            let t = model_orbits(&p)?;
            let r = parity_obstruction(p.n, &t);
            Ok(match f {
                Format::Table => pairs(&[
                    ("generators", t.len().to_string()),
                    ("interior_bound", interior_orbit_bound(p.a, p.rho)?.to_string()),
                    ("violations", if r.violations.is_empty() { "none".into() } else { r.violations.join(" ") }),
                    ("differential", if r.zero_differential { "vanishes".into() } else { "not certified".into() }),
                ]),
                Format::Machine => MachineDoc::new("parity").with(&r).emit(),
            })
        }
        ModelCommand::Ranks { n, window } => {
            let t = linearized_ranks(*n, *window)?;
            let ab = ModelParams { n: *n, a: crate::models::window_threshold(*window, 1.0), window: *window, rho: 1.0 };
            let from_h = ranks_from_homology(*n, *window, &model_orbits(&ab)?);
            if from_h != t {
                return Err(Failure::Domain("RankMismatch: the rank table disagrees with the homology of the orbit complex".into()));
            }
            Ok(match f {
                Format::Table => {
                    let rows: Vec<Vec<String>> =
                        t.ranks.iter().map(|&(k, r)| vec![k.to_string(), (k + n - 3).to_string(), module(r)]).collect();
                    table(&["cz", "degree", "rank"], &rows)
                }
                Format::Machine => MachineDoc::new("ranks").with(&t).emit(),
            })
        }
        ModelCommand::Hc { n } => {
            let w = hc_window(*n)?;
            Ok(match f {
                Format::Table => pairs(&[
                    ("bidegree", format!("({},{})", w.degree, w.link)),
                    ("rank", w.rank.to_string()),
                    ("class", w.classes.join(", ")),
                    ("chains_below", w.below.to_string()),
                    ("chains_above", w.above.to_string()),
                ]),
                Format::Machine => MachineDoc::new("hc").with(&w).emit(),
            })
        }
        ModelCommand::Cone { k, n, top } => {
            let r = surgery_cone_ranks(*k, *n, *top)?;
            Ok(match f {
                Format::Table => {
                    let rows: Vec<Vec<String>> = r.iter().map(|&(d, x)| vec![d.to_string(), module(x)]).collect();
                    table(&["degree", "rank"], &rows)
                }
                Format::Machine => {
                    let mut doc = MachineDoc::new("cone");
                    for (d, x) in r {
                        doc.push(&json!({"degree": d, "rank": x}));
                    }
                    doc.emit()
                }
            })
        }
    }
}
