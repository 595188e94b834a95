//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::Command as Process;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use rowcox::cli::{run, Command, RunConfig};
use rowcox::corpus;
use rowcox::dynkin::{
    auslander_coxeter, endomorphism_grade_bijection, knit, DynkinFile, DynkinSpec, DynkinType,
};
use rowcox::field::Rational;
use rowcox::homology::{
    cartan_matrix, cograde, grade, grade_bijection, is_auslander_regular, minimal_projective_resolution, BQAlgebra,
    QuiverRep,
};
use rowcox::linalg::{check_nilpotent_shift, coxeter_from_cartan, minimal_polynomial};
use rowcox::poset::{labeled_posets, order_ideals, Poset, PosetFile};
use rowcox::search::{run_search, SearchPlan};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn structured(command: Command) -> Result<(String, Value, i32), String> {
    let report = run(&RunConfig::new(command)).map_err(|e| e.to_string())?;
    let text = report.to_json();
    let value: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Ok((text, value, report.exit_code()))
}

fn poset_file(name: &str) -> Result<Poset, String> {
    let text = corpus::get(name).ok_or_else(|| format!("missing corpus file {name}"))?;
    let file: PosetFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    Poset::from_file(&file).map_err(|e| e.to_string())
}

fn ideal_algebras(max_size: usize) -> Vec<(Poset, BQAlgebra)> {
    (0..=max_size)
        .flat_map(labeled_posets)
        .map(|p| {
            let alg = BQAlgebra::incidence(&order_ideals(&p).expect("small poset").as_poset());
            (p, alg)
        })
        .collect()
}

fn tables_reproduction() -> Outcome {
    let (text, v, code) = structured(Command::Coxeter { input: corpus::path("posets/example6.json"), ideals: false })?;
    let r = &v["results"];
    let table2 = json!([
        [-1, -1, -1, -1, -1, -1],
        [1, 0, 1, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [-1, 0, 0, 0, 1, 0],
        [-1, 0, 0, 1, 0, 0],
        [1, 0, 0, 0, 0, 0],
    ]);
    ensure(code == 0, || format!("exit code {code}"))?;
    ensure(r["auslander_regular"] == json!(true), || "not Auslander regular".into())?;
    ensure(r["grade_bijection"]["permutation"] == json!([5, 2, 1, 4, 3, 0]), || {
        format!("grade bijection {}", r["grade_bijection"]["permutation"])
    })?;
    ensure(r["coxeter"] == table2, || format!("coxeter {}", r["coxeter"]))?;
    ensure(r["rowmotion_coxeter"]["minimal_polynomial"] == json!([1, -1, -1, 1]), || {
        format!("minimal polynomial {}", r["rowmotion_coxeter"]["minimal_polynomial_text"])
    })?;
    ensure(r["hopkins_identity"] == json!(false), || "identity unexpectedly holds".into())?;
    Ok(text)
}

fn boolean_resolution() -> Outcome {
    let p = Poset::antichain(&["x1", "x2", "x3"]);
    let alg = BQAlgebra::incidence(&order_ideals(&p).map_err(|e| e.to_string())?.as_poset());
    let at = |l: &str| alg.vertex(l).map_err(|e| e.to_string());
    let support = |labels: &[&str]| -> Result<Vec<usize>, String> {
        let mut dims = vec![0; alg.len()];
        for l in labels {
            dims[at(l)?] = 1;
        }
        Ok(dims)
    };
    let module = QuiverRep::<Rational>::injective(&alg, at("{x1,x2}")?);
    let res = minimal_projective_resolution(&alg, &module).map_err(|e| e.to_string())?;
    ensure(res.to_complex(&alg).is_exact(), || "resolution is not exact".into())?;
    ensure(module.dims() == support(&["{x1,x2}", "{x1,x2,x3}"])?, || format!("module {:?}", module.dims()))?;
    let all = ["∅", "{x1}", "{x2}", "{x3}", "{x1,x2}", "{x1,x3}", "{x2,x3}", "{x1,x2,x3}"];
    let expected: Vec<Vec<(&str, Vec<&str>)>> = vec![
        vec![("{x1,x2,x3}", all.to_vec())],
        vec![("{x1,x3}", vec!["∅", "{x1}", "{x3}", "{x1,x3}"]), ("{x2,x3}", vec!["∅", "{x2}", "{x3}", "{x2,x3}"])],
        vec![("{x3}", vec!["∅", "{x3}"])],
    ];
    ensure(res.terms().len() == expected.len(), || format!("{} terms", res.terms().len()))?;
    let mut record = Vec::new();
    for (k, (term, want)) in res.terms().iter().zip(&expected).enumerate() {
        let mut got: Vec<&str> = term.iter().map(|&x| alg.label(x)).collect();
        got.sort();
        let names: Vec<&str> = want.iter().map(|(n, _)| *n).collect();
        ensure(got == names, || format!("term {k}: {got:?}"))?;
        for (name, supp) in want {
            let dims = QuiverRep::<Rational>::projective(&alg, at(name)?).dims().to_vec();
            ensure(dims == support(supp)?, || format!("term {k}, summand {name}: {dims:?}"))?;
        }
        record.push(got);
    }
    Ok(json!({"module": module.dims(), "terms": record}).to_string())
}

fn hopkins_identity() -> Outcome {
    let mut texts = Vec::new();
    for plan in [
        SearchPlan::Enumerate { max_size: 5 },
        SearchPlan::Random { count: 1000, min_size: 6, max_size: 7, seed: 20240611 },
    ] {
        let (text, v, code) = structured(Command::HopkinsSearch { plan: plan.clone() })?;
        let r = &v["results"];
        ensure(code == 0, || format!("{plan:?}: exit {code}, violations {}", r["violations"]))?;
        ensure(r["tested"] == r["passed"], || format!("{plan:?}: {} of {} passed", r["passed"], r["tested"]))?;
        if let SearchPlan::Enumerate { .. } = plan {
            ensure(r["tested"].as_u64().unwrap_or(0) > 4000, || format!("only {} posets", r["tested"]))?;
        }
        texts.push(text);
    }
    Ok(texts.concat())
}

fn corollary_cross_check() -> Outcome {
    let mut checked = 0;
    for p in (0..=4).flat_map(labeled_posets) {
        let lattice = order_ideals(&p).map_err(|e| e.to_string())?;
        let alg = BQAlgebra::incidence(&lattice.as_poset());
        let cartan = cartan_matrix::<Rational>(&alg).map_err(|e| e.to_string())?;
        ensure(cartan == lattice.zeta(), || format!("{p:?}: Cartan differs from zeta"))?;
        let c = coxeter_from_cartan(&cartan).map_err(|e| e.to_string())?;
        ensure(c == lattice.coxeter_by_antichains(), || format!("{p:?}: Coxeter columns differ"))?;
        checked += 1;
    }
    Ok(json!({"lattices": checked}).to_string())
}

fn grade_bijection_is_rowmotion() -> Outcome {
    let mut images = Vec::new();
    for (p, alg) in ideal_algebras(4) {
        let gb = grade_bijection::<Rational>(&alg).map_err(|e| format!("{p:?}: {e}"))?;
        let rho = order_ideals(&p).map_err(|e| e.to_string())?.rowmotion_matrix();
        ensure(gb.permutation == rho, || format!("{p:?}: {:?} vs {:?}", gb.permutation.image(), rho.image()))?;
        images.push(gb.permutation.image().to_vec());
    }
    Ok(json!(images).to_string())
}

fn grade_equals_cograde() -> Outcome {
    let mut algebras: Vec<(String, BQAlgebra)> =
        ideal_algebras(4).into_iter().map(|(p, a)| (format!("J({p:?})"), a)).collect();
    algebras.push(("example6".into(), BQAlgebra::incidence(&poset_file("posets/example6.json")?)));
    let mut simples = 0;
    let mut grades = Vec::new();
    for (name, alg) in &algebras {
        let gb = grade_bijection::<Rational>(alg).map_err(|e| format!("{name}: {e}"))?;
        for v in 0..alg.len() {
            let g = grade(alg, &QuiverRep::<Rational>::simple(alg, v)).map_err(|e| e.to_string())?;
            let c = cograde(alg, &QuiverRep::<Rational>::simple(alg, gb.permutation.apply(v))).map_err(|e| e.to_string())?;
            ensure(g == c && g == gb.grades[v] && c == gb.cogrades[v], || {
                format!("{name}, simple {}: grade {g}, cograde of image {c}", alg.label(v))
            })?;
            simples += 1;
        }
        grades.push(gb.grades);
    }
    for name in ["posets/m3.json", "posets/n5.json"] {
        let alg = BQAlgebra::incidence(&poset_file(name)?);
        let verdict = is_auslander_regular::<Rational>(&alg).map_err(|e| e.to_string())?;
        ensure(!verdict.regular, || format!("{name} reported Auslander regular"))?;
        ensure(grade_bijection::<Rational>(&alg).is_err(), || format!("{name}: grade bijection accepted"))?;
    }
    Ok(json!({"simples": simples, "grades": grades}).to_string())
}

fn dynkin_identity() -> Outcome {
    let mut specs: Vec<DynkinSpec> = (1..=5).flat_map(|n| DynkinSpec::all_orientations(DynkinType::A(n))).collect();
    for name in ["dynkin/d4.json", "dynkin/d5.json", "dynkin/e6.json"] {
        let file: DynkinFile = serde_json::from_str(corpus::get(name).unwrap_or_default()).map_err(|e| e.to_string())?;
        specs.push(DynkinSpec::try_from(file).map_err(|e| e.to_string())?);
    }
    let mut rows = Vec::new();
    for spec in &specs {
        let alg = spec.algebra().map_err(|e| e.to_string())?;
        let data = knit::<Rational>(&alg).map_err(|e| format!("{spec}: {e}"))?;
        ensure(data.len() == spec.kind.positive_roots(), || format!("{spec}: {} modules", data.len()))?;
        let ac = auslander_coxeter(&alg, &data).map_err(|e| format!("{spec}: {e}"))?;
        let gb = endomorphism_grade_bijection(&data).map_err(|e| format!("{spec}: {e}"))?;
        let product = gb.permutation.times_inverse(&ac.coxeter).map_err(|e| e.to_string())?;
        ensure(check_nilpotent_shift(&product).map_err(|e| e.to_string())?, || format!("{spec}: (CR^-1 + id)^2 != 0"))?;
        let minpoly = minimal_polynomial(&product).map_err(|e| e.to_string())?;
        rows.push(json!({"spec": spec.to_string(), "modules": data.len(), "minimal_polynomial": minpoly.to_string()}));
    }
    ensure(specs.len() == 31 + 3, || format!("{} specs", specs.len()))?;
    Ok(json!(rows).to_string())
}

fn binary(args: &[&str]) -> Result<(String, i32), String> {
    let out = Process::new(env!("CARGO_BIN_EXE_rowcox")).args(args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("terminated by signal")?;
    Ok((String::from_utf8_lossy(&out.stdout).into_owned(), code))
}

fn negative_controls() -> Outcome {
    let mut texts = Vec::new();
    for name in ["posets/m3.json", "posets/n5.json"] {
        let path = corpus::path(name);
        let (text, code) = binary(&["auslander", path.to_str().unwrap_or_default(), "--format", "structured"])?;
        ensure(code == 0, || format!("{name}: exit {code}"))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let r = &v["results"];
        ensure(r["regular"] == json!(false), || format!("{name}: regular"))?;
        let w = &r["witness"];
        ensure(w["degree"].is_u64() && w["injective"].is_string(), || format!("{name}: witness {w}"))?;
        texts.push(text);
    }
    let path = corpus::path("nrf/a3_corrupted.json");
    let (text, code) = binary(&["verify-nrf", path.to_str().unwrap_or_default(), "--format", "structured"])?;
    ensure(code == 1, || format!("corrupted NRF: exit {code}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    ensure(v["results"]["witness"].is_array(), || "corrupted NRF: no witness".into())?;
    texts.push(text);
    Ok(texts.concat())
}

struct Criterion {
    number: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 8] = [
    Criterion { number: 1, name: "tables reproduction", limit: Duration::from_secs(1), run: tables_reproduction },
    Criterion { number: 2, name: "boolean lattice resolution", limit: Duration::from_secs(1), run: boolean_resolution },
    Criterion { number: 3, name: "rowmotion Coxeter identity", limit: Duration::from_secs(300), run: hopkins_identity },
    Criterion { number: 4, name: "antichain Coxeter formula", limit: Duration::from_secs(60), run: corollary_cross_check },
    Criterion { number: 5, name: "grade bijection = rowmotion", limit: Duration::from_secs(120), run: grade_bijection_is_rowmotion },
    Criterion { number: 6, name: "grade = cograde", limit: Duration::from_secs(120), run: grade_equals_cograde },
    Criterion { number: 7, name: "Dynkin identity", limit: Duration::from_secs(120), run: dynkin_identity },
    Criterion { number: 8, name: "negative controls", limit: Duration::from_secs(60), run: negative_controls },
];

fn line(number: usize, name: &str, result: &Result<(), String>, elapsed: Duration) {
    match result {
        Ok(()) => println!("criterion {number} ({name}): PASS in {elapsed:.2?}"),
        Err(e) => println!("criterion {number} ({name}): FAIL in {elapsed:.2?}: {e}"),
    }
}

fn main() {
    let mut failures = 0;
    let mut reports = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let result = match outcome {
            Ok(text) => {
                reports.push(text);
                ensure(elapsed < c.limit, || format!("exceeded the {:?} limit", c.limit))
            }
            Err(e) => {
                reports.push(String::new());
                Err(e)
            }
        };
        failures += result.is_err() as usize;
        line(c.number, c.name, &result, elapsed);
    }

    let start = Instant::now();
    let determinism = CRITERIA.iter().zip(&reports).try_for_each(|(c, first)| {
        let again = (c.run)().unwrap_or_default();
        ensure(&again == first, || format!("criterion {} output changed between runs", c.number))
    });
    let determinism = determinism.and_then(|()| {
        let plan = SearchPlan::Random { count: 200, min_size: 5, max_size: 7, seed: 99 };
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
        let a = single.install(|| run_search(&plan, 1 << 20)).map_err(|e| e.to_string())?;
        let b = run_search(&plan, 1 << 20).map_err(|e| e.to_string())?;
        ensure(a == b, || "search outcome depends on thread count".into())
    });
    failures += determinism.is_err() as usize;
    line(9, "determinism", &determinism, start.elapsed());

    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
