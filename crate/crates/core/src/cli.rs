//! Command driver shared by the `rowcox` binary, the examples and the tests.
//!
//! [`run`] turns a [`RunConfig`] into a [`Report`]. Input and configuration
//! problems are returned as [`CliError`] (exit code 2); a report whose
//! checks fail exits with 1.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dynkin::{
    ar_formula_violations, auslander_coxeter, endomorphism_grade_bijection, knit, verify_nrf_identity, DynkinError, DynkinFile,
    DynkinSpec, NrfData, NrfFile,
};
use crate::field::{Field, Fp, Rational};
use crate::homology::{
    cartan_matrix, coxeter_from_injectives, grade_bijection, is_auslander_regular, rowmotion_coxeter_report, BQAlgebra,
    HomologyError, RowmotionCoxeterReport,
};
use crate::linalg::{check_nilpotent_shift, coxeter_from_cartan, minimal_polynomial, PermutationMatrix};
use crate::poset::{join_irreducibles, order_ideals_with_cap, Poset, PosetError, PosetFile, DEFAULT_IDEAL_CAP};
use crate::report::{Check, Report};
use crate::search::{run_search, SearchError, SearchPlan};

/// Characteristics accepted by `--char`; 0 selects the rationals.
pub const SUPPORTED_CHARACTERISTICS: [u32; 9] = [0, 2, 3, 5, 7, 11, 13, 101, 32003];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("invalid poset: {0}")]
    Poset(#[from] PosetError),
    #[error("invalid Dynkin input: {0}")]
    Dynkin(DynkinError),
    #[error("invalid search: {0}")]
    Search(SearchError),
    #[error("unsupported characteristic {0} (supported: {list})", list = supported_list())]
    UnsupportedCharacteristic(u32),
    #[error("computation failed: {0}")]
    Internal(String),
}

fn supported_list() -> String {
    SUPPORTED_CHARACTERISTICS.map(|p| p.to_string()).join(", ")
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            _ => 2,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Poset(p) => CliError::Poset(p),
            SearchError::Linalg(l) => CliError::Internal(l.to_string()),
            other => CliError::Search(other),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Human,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// List the order ideals of a poset.
    Ideals { input: PathBuf },
    /// Rowmotion on the order ideals of a poset, with its orbits.
    Rowmotion { input: PathBuf },
    /// Cartan and Coxeter matrices, grade bijection and `R^-1 C`.
    Coxeter { input: PathBuf, ideals: bool },
    /// Auslander regularity and grade data.
    Auslander { input: PathBuf, ideals: bool },
    HopkinsSearch { plan: SearchPlan },
    /// A Dynkin spec, either inline text or a JSON file.
    Dynkin { spec: String, emit_nrf: Option<PathBuf> },
    VerifyNrf { input: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ideals { .. } => "ideals",
            Command::Rowmotion { .. } => "rowmotion",
            Command::Coxeter { .. } => "coxeter",
            Command::Auslander { .. } => "auslander",
            Command::HopkinsSearch { .. } => "hopkins-search",
            Command::Dynkin { .. } => "dynkin",
            Command::VerifyNrf { .. } => "verify-nrf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub characteristic: u32,
    pub ideal_cap: usize,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, characteristic: 0, ideal_cap: DEFAULT_IDEAL_CAP, format: OutputFormat::Human }
    }

    fn arguments(&self) -> BTreeMap<String, Value> {
        let mut args = BTreeMap::new();
        let path = |p: &Path| json!(p.display().to_string());
        match &self.command {
            Command::Ideals { input } | Command::Rowmotion { input } | Command::VerifyNrf { input } => {
                args.insert("input".into(), path(input));
            }
            Command::Coxeter { input, ideals } | Command::Auslander { input, ideals } => {
                args.insert("input".into(), path(input));
                args.insert("ideals".into(), json!(ideals));
            }
            Command::HopkinsSearch { plan } => {
                args.insert("plan".into(), to_value(plan));
            }
            Command::Dynkin { spec, emit_nrf } => {
                args.insert("spec".into(), json!(spec));
                args.insert("emit_nrf".into(), emit_nrf.as_deref().map_or(Value::Null, path));
            }
        }
        args.insert("characteristic".into(), json!(self.characteristic));
        args.insert("ideal_cap".into(), json!(self.ideal_cap));
        args
    }
}

/// Renders a report in the configured format.
pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Human => report.to_human(),
        OutputFormat::Structured => report.to_json(),
    }
}

macro_rules! with_field {
    ($p:expr, $f:ident => $body:expr) => {
        match $p {
            0 => {
                type $f = Rational;
                $body
            }
            2 => {
                type $f = Fp<2>;
                $body
            }
            3 => {
                type $f = Fp<3>;
                $body
            }
            5 => {
                type $f = Fp<5>;
                $body
            }
            7 => {
                type $f = Fp<7>;
                $body
            }
            11 => {
                type $f = Fp<11>;
                $body
            }
            13 => {
                type $f = Fp<13>;
                $body
            }
            101 => {
                type $f = Fp<101>;
                $body
            }
            32003 => {
                type $f = Fp<32003>;
                $body
            }
            p => Err(CliError::UnsupportedCharacteristic(p)),
        }
    };
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    if !SUPPORTED_CHARACTERISTICS.contains(&config.characteristic) {
        return Err(CliError::UnsupportedCharacteristic(config.characteristic));
    }
    let (results, checks) = match &config.command {
        Command::Ideals { input } => ideals(&load_poset(input)?, config.ideal_cap)?,
        Command::Rowmotion { input } => rowmotion(&load_poset(input)?, config.ideal_cap)?,
        Command::Coxeter { input, ideals } => {
            let (vertices, alg) = poset_algebra(input, *ideals, config.ideal_cap)?;
            with_field!(config.characteristic, F => coxeter::<F>(&vertices, &alg))?
        }
        Command::Auslander { input, ideals } => {
            let (vertices, alg) = poset_algebra(input, *ideals, config.ideal_cap)?;
            with_field!(config.characteristic, F => auslander::<F>(&vertices, &alg))?
        }
        Command::HopkinsSearch { plan } => hopkins(plan, config.ideal_cap)?,
        Command::Dynkin { spec, emit_nrf } => {
            let spec = load_dynkin(spec)?;
            with_field!(config.characteristic, F => dynkin::<F>(&spec, emit_nrf.as_deref()))?
        }
        Command::VerifyNrf { input } => verify_nrf(input)?,
    };
    Ok(Report::new(config.command.name(), config.arguments(), results, checks))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn check(name: &str, passed: bool) -> Check {
    Check { name: name.to_string(), passed }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

pub fn load_poset(path: &Path) -> Result<Poset, CliError> {
    let file: PosetFile = read_json(path)?;
    Ok(Poset::from_file(&file)?)
}

/// A spec naming an existing file is read as JSON, anything else is parsed
/// as inline text such as `D4:alternating`.
pub fn load_dynkin(spec: &str) -> Result<DynkinSpec, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        let file: DynkinFile = read_json(path)?;
        DynkinSpec::try_from(file).map_err(CliError::Dynkin)
    } else {
        spec.parse().map_err(CliError::Dynkin)
    }
}

/// The poset whose incidence algebra is studied: the input itself, or its
/// lattice of order ideals.
fn poset_algebra(path: &Path, ideals: bool, cap: usize) -> Result<(Poset, BQAlgebra), CliError> {
    let p = load_poset(path)?;
    let vertices = if ideals { order_ideals_with_cap(&p, cap)?.as_poset() } else { p };
    let alg = BQAlgebra::incidence(&vertices);
    Ok((vertices, alg))
}

fn ideals(p: &Poset, cap: usize) -> Result<(Value, Vec<Check>), CliError> {
    let lattice = order_ideals_with_cap(p, cap)?;
    let rows: Vec<Value> = (0..lattice.len())
        .map(|i| {
            let ideal = lattice.ideal(i);
            json!({
                "ideal": lattice.label(i),
                "size": ideal.len(),
                "maximal": p.format_set(ideal.max_antichain(p).members()),
            })
        })
        .collect();
    Ok((json!({"elements": p.labels(), "count": lattice.len(), "ideals": rows}), Vec::new()))
}

fn rowmotion(p: &Poset, cap: usize) -> Result<(Value, Vec<Check>), CliError> {
    let lattice = order_ideals_with_cap(p, cap)?;
    let rho = lattice.rowmotion_matrix();
    let images: Vec<Value> =
        (0..lattice.len()).map(|i| json!({"ideal": lattice.label(i), "image": lattice.label(rho.apply(i))})).collect();
    let orbits: Vec<Vec<String>> = rho.cycles().iter().map(|c| c.iter().map(|&i| lattice.label(i)).collect()).collect();
    let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    let results = json!({
        "count": lattice.len(),
        "permutation": rho.image(),
        "order": rho.order(),
        "images": images,
        "orbit_sizes": sizes,
        "orbits": orbits,
    });
    Ok((results, Vec::new()))
}

fn labelled_images(labels: &[String], perm: &PermutationMatrix) -> Value {
    Value::Object((0..perm.len()).map(|i| (labels[i].clone(), json!(labels[perm.apply(i)]))).collect())
}

fn rowmotion_coxeter_value(r: &RowmotionCoxeterReport) -> Value {
    json!({
        "product": to_value(&r.product),
        "minimal_polynomial": to_value(&r.minimal_polynomial),
        "minimal_polynomial_text": r.minimal_polynomial.to_string(),
        "involution": r.involution,
    })
}

/// Rowmotion on the vertices when they form a distributive lattice.
fn lattice_rowmotion(vertices: &Poset) -> Option<PermutationMatrix> {
    join_irreducibles(vertices).ok().map(|b| b.rowmotion_on_lattice())
}

fn failed(results: &mut Map<String, Value>, checks: &mut Vec<Check>, stage: &str, err: HomologyError) {
    checks.push(check(stage, false));
    results.insert("error".into(), json!(format!("{stage}: {err}")));
}

fn coxeter<F: Field>(vertices: &Poset, alg: &BQAlgebra) -> Result<(Value, Vec<Check>), CliError> {
    let mut results = Map::new();
    let mut checks = Vec::new();
    let lattice = vertices.lattice_tests();
    results.insert("vertices".into(), json!(alg.labels()));
    results.insert("lattice".into(), to_value(&lattice));
    let cartan = cartan_matrix::<F>(alg).map_err(|e| CliError::Internal(e.to_string()))?;
    let coxeter = coxeter_from_cartan(&cartan).map_err(|e| CliError::Internal(e.to_string()))?;
    let by_injectives = coxeter_from_injectives::<F>(alg).map_err(|e| CliError::Internal(e.to_string()))?;
    checks.push(check("coxeter_cartan_equals_injectives", coxeter == by_injectives));
    results.insert("cartan".into(), to_value(&cartan));
    results.insert("coxeter".into(), to_value(&coxeter));
    results.insert("coxeter_minimal_polynomial".into(), json!(minimal_polynomial(&coxeter).map(|m| m.to_string()).ok()));

    let distributive_rho = if lattice.is_distributive { lattice_rowmotion(vertices) } else { None };
    results.insert("lattice_rowmotion".into(), json!(distributive_rho.as_ref().map(|r| r.image())));
    let verdict = is_auslander_regular::<F>(alg).map_err(|e| CliError::Internal(e.to_string()))?;
    results.insert("auslander_regular".into(), json!(verdict.regular));
    if lattice.is_distributive {
        checks.push(check("distributive_lattice_is_auslander_regular", verdict.regular));
    }
    let mut hopkins = Value::Null;
    let mut bijection = Value::Null;
    let mut report = Value::Null;
    if verdict.regular {
        match grade_bijection::<F>(alg) {
            Ok(gb) => {
                checks.push(check("grade_equals_cograde", true));
                bijection = json!({
                    "permutation": gb.permutation.image(),
                    "images": labelled_images(alg.labels(), &gb.permutation),
                });
                if let Some(rho) = &distributive_rho {
                    checks.push(check("grade_bijection_is_rowmotion", *rho == gb.permutation));
                }
                match rowmotion_coxeter_report(&coxeter, &gb.permutation) {
                    Ok(r) => {
                        if lattice.is_distributive {
                            checks.push(check("hopkins_identity", r.involution));
                        }
                        hopkins = json!(r.involution);
                        report = rowmotion_coxeter_value(&r);
                    }
                    Err(e) => failed(&mut results, &mut checks, "rowmotion_coxeter", e),
                }
            }
            Err(e) => failed(&mut results, &mut checks, "grade_equals_cograde", e),
        }
    }
    results.insert("grade_bijection".into(), bijection);
    results.insert("rowmotion_coxeter".into(), report);
    results.insert("hopkins_identity".into(), hopkins);
    Ok((Value::Object(results), checks))
}

fn auslander<F: Field>(vertices: &Poset, alg: &BQAlgebra) -> Result<(Value, Vec<Check>), CliError> {
    let mut results = Map::new();
    let mut checks = Vec::new();
    let labels = alg.labels();
    let lattice = vertices.lattice_tests();
    let verdict = is_auslander_regular::<F>(alg).map_err(|e| CliError::Internal(e.to_string()))?;
    results.insert("vertices".into(), json!(labels));
    results.insert("lattice".into(), to_value(&lattice));
    results.insert("regular".into(), json!(verdict.regular));
    results.insert("global_dimension".into(), json!(verdict.global_dimension));
    results.insert(
        "witness".into(),
        json!(verdict.witness.as_ref().map(|w| json!({
            "degree": w.degree,
            "injective": format!("I{}", labels[w.vertex]),
            "projective_dimension": w.projective_dimension,
        }))),
    );
    let pdims: Map<String, Value> =
        verdict.injective_pdims.iter().enumerate().map(|(v, d)| (format!("I{}", labels[v]), json!(d))).collect();
    results.insert("injective_projective_dimensions".into(), Value::Object(pdims));
    let terms: Vec<Vec<String>> =
        verdict.coresolution.iter().map(|t| t.iter().map(|&v| format!("I{}", labels[v])).collect()).collect();
    results.insert("regular_module_coresolution".into(), json!(terms));
    if lattice.is_distributive {
        checks.push(check("distributive_lattice_is_auslander_regular", verdict.regular));
    }
    let mut simples = Value::Null;
    if verdict.regular {
        match grade_bijection::<F>(alg) {
            Ok(gb) => {
                checks.push(check("grade_equals_cograde", gb.grades == gb.cogrades));
                simples = Value::Array(
                    (0..alg.len())
                        .map(|v| {
                            json!({
                                "simple": labels[v],
                                "image": labels[gb.permutation.apply(v)],
                                "grade": gb.grades[v],
                                "cograde": gb.cogrades[v],
                            })
                        })
                        .collect(),
                );
                if let Some(rho) = lattice_rowmotion(vertices) {
                    checks.push(check("grade_bijection_is_rowmotion", rho == gb.permutation));
                }
            }
            Err(e) => failed(&mut results, &mut checks, "grade_equals_cograde", e),
        }
    }
    results.insert("grade_bijection".into(), simples);
    Ok((Value::Object(results), checks))
}

fn hopkins(plan: &SearchPlan, cap: usize) -> Result<(Value, Vec<Check>), CliError> {
    let outcome = run_search(plan, cap)?;
    let checks = vec![check("identity_holds_for_all", outcome.violations.is_empty())];
    Ok((to_value(&outcome), checks))
}

fn dynkin<F: Field>(spec: &DynkinSpec, emit_nrf: Option<&Path>) -> Result<(Value, Vec<Check>), CliError> {
    let alg = spec.algebra().map_err(CliError::Dynkin)?;
    let mut results = Map::new();
    let mut checks = Vec::new();
    results.insert("spec".into(), json!(spec.to_string()));
    results.insert("positive_roots".into(), json!(spec.kind.positive_roots()));
    let data = match knit::<F>(&alg) {
        Ok(d) => d,
        Err(e) => {
            checks.push(check("knitting", false));
            results.insert("error".into(), json!(e.to_string()));
            return Ok((Value::Object(results), checks));
        }
    };
    checks.push(check("knitting", true));
    checks.push(check("module_count_is_positive_roots", data.len() == spec.kind.positive_roots()));
    let tau = data.tau();
    let label = |i: Option<usize>| json!(i.map(|i| data.labels[i].clone()));
    let modules: Vec<Value> = (0..data.len())
        .map(|i| {
            json!({
                "label": data.labels[i],
                "dim_vector": data.modules[i].dims(),
                "projective": data.is_projective[i],
                "injective": data.is_injective[i],
                "tau": label(tau[i]),
                "nu": label(data.nu[i]),
            })
        })
        .collect();
    results.insert("modules".into(), Value::Array(modules));
    results.insert("hom_dims".into(), json!(data.hom_dims));
    let violations = ar_formula_violations(&alg, &data).map_err(|e| CliError::Internal(e.to_string()))?;
    checks.push(check("ar_formula", violations.is_empty()));
    match auslander_coxeter(&alg, &data) {
        Ok(ac) => {
            checks.push(check("coxeter_expansion", true));
            results.insert("cartan".into(), to_value(&ac.cartan));
            results.insert("coxeter".into(), to_value(&ac.coxeter));
            let gb = endomorphism_grade_bijection(&data).map_err(|e| CliError::Internal(e.to_string()))?;
            let product = gb.permutation.times_inverse(&ac.coxeter).map_err(|e| CliError::Internal(e.to_string()))?;
            let nilpotent = check_nilpotent_shift(&product).map_err(|e| CliError::Internal(e.to_string()))?;
            checks.push(check("grade_bijection_identity", nilpotent));
            let minpoly = minimal_polynomial(&product).map_err(|e| CliError::Internal(e.to_string()))?;
            results.insert("grade_bijection".into(), labelled_images(&data.labels, &gb.permutation));
            results.insert("grades".into(), json!(gb.grades));
            results.insert("identity".into(), json!("(CR^-1 + id)^2 = 0"));
            results.insert("product".into(), to_value(&product));
            results.insert("minimal_polynomial".into(), to_value(&minpoly));
            results.insert("minimal_polynomial_text".into(), json!(minpoly.to_string()));
        }
        Err(e) => {
            checks.push(check("coxeter_expansion", false));
            results.insert("error".into(), json!(e.to_string()));
        }
    }
    if let Some(path) = emit_nrf {
        let text = serde_json::to_string_pretty(&data.to_nrf()).expect("plain data serializes") + "\n";
        fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    Ok((Value::Object(results), checks))
}

fn verify_nrf(input: &Path) -> Result<(Value, Vec<Check>), CliError> {
    let file: NrfFile = read_json(input)?;
    let data = NrfData::from_file(&file).map_err(CliError::Dynkin)?;
    let report = verify_nrf_identity(&data).map_err(CliError::Dynkin)?;
    let mut results = Map::new();
    results.insert("labels".into(), json!(data.labels));
    results.insert("images".into(), labelled_images(&data.labels, &data.grade_bijection));
    results.insert("minimal_polynomial_text".into(), json!(report.minimal_polynomial.to_string()));
    if let Value::Object(fields) = to_value(&report) {
        results.extend(fields);
    }
    Ok((Value::Object(results), vec![check("identity", report.passed)]))
}
