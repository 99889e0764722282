use pi_core::algebra::BuildOptions;
use pi_core::canon::{canonical_form, grassmann_witness};
use pi_core::pitest::{
    self, CentralClass, Comparison, Counterexample, ScanConfig, ScanMode, TruncationNote, Verdict,
};
use pi_core::regular::{
    builtin_decomposition, epsilon_sigma, kronecker, transform_f_a, verify_p1, verify_p2, P1Outcome,
    Theta,
};
use pi_core::{build_algebra_with, parse_poly, Algebra, Error, Poly, Result};
use serde_json::{json, Value};

pub struct Outcome {
    pub code: u8,
    pub text: Vec<String>,
    pub json: Value,
}

fn limits(allow_large: bool) -> (ScanConfig, usize) {
    if allow_large {
        let cfg = ScanConfig {
            max_degree: 8,
            max_tuples: u128::MAX,
            ..ScanConfig::default()
        };
        (cfg, 1 << 16)
    } else {
        (ScanConfig::default(), BuildOptions::default().dim_cap)
    }
}

/// Builds the algebra with `n` (or `n_default`) for the placeholder and
/// records the Grassmann truncation actually used.
fn load(
    desc: &str,
    n: Option<u32>,
    n_default: u32,
    dim_cap: usize,
) -> Result<(Algebra, Option<TruncationNote>)> {
    let opts = BuildOptions {
        dim_cap,
        truncation: Some(n.unwrap_or(n_default)),
    };
    let alg = build_algebra_with(desc, &opts)?;
    let counts = alg.descriptor().grassmann_counts();
    let note = counts.iter().max().map(|&used| TruncationNote {
        n: used,
        n_default,
        overridden: counts.iter().any(|&c| c != n_default),
    });
    Ok((alg, note))
}

fn estimate(alg: &Algebra, arity: usize, cfg: &ScanConfig, allow_large: bool) {
    if allow_large {
        eprintln!(
            "estimated cost: {} basis tuples of arity {arity} over dim {}",
            pitest::tuple_count(alg, arity, cfg.tuples),
            alg.dim()
        );
    }
}

fn truncation_line(note: &Option<TruncationNote>) -> Option<String> {
    note.as_ref().map(|t| {
        format!(
            "truncation: n = {} (default {}{})",
            t.n,
            t.n_default,
            if t.overridden { ", overridden" } else { "" }
        )
    })
}

fn truncation_json(note: &Option<TruncationNote>) -> Value {
    serde_json::to_value(note).expect("serializable")
}

fn counterexample_lines(alg: &Algebra, f: &Poly, w: &Counterexample, text: &mut Vec<String>) {
    if w.poly != *f {
        text.push(format!("linearization: {}", w.poly));
    }
    text.push(format!("witness: {}", w.describe(alg)));
    text.push(format!("value: {}", alg.display(&w.value)));
}

fn counterexample_json(alg: &Algebra, w: &Counterexample) -> Value {
    json!({
        "poly": w.poly.to_string(),
        "assignment": w.assignment.iter().map(|&(v, i)| json!({
            "var": format!("x{v}"),
            "value": alg.label(i),
        })).collect::<Vec<_>>(),
        "value": alg.display(&w.value).to_string(),
    })
}

fn default_n(degree: usize) -> u32 {
    (2 * degree.max(1)) as u32
}

pub fn check_identity(desc: &str, poly: &str, n: Option<u32>, allow_large: bool) -> Result<Outcome> {
    let f = parse_poly(poly)?;
    let (cfg, cap) = limits(allow_large);
    let (alg, note) = load(desc, n, default_n(f.degree()), cap)?;
    estimate(&alg, f.degree(), &cfg, allow_large);
    let res = pitest::is_identity(&f, &alg, &cfg)?;
    let mut text = vec![
        if res.holds { "identity" } else { "not an identity" }.to_string(),
        format!("algebra: {}", alg.descriptor()),
        format!("poly: {f}"),
    ];
    if let Some(w) = &res.counterexample {
        counterexample_lines(&alg, &f, w, &mut text);
    }
    text.extend(truncation_line(&note));
    Ok(Outcome {
        code: if res.holds { 0 } else { 1 },
        text,
        json: json!({
            "algebra": alg.descriptor().to_string(),
            "poly": f.to_string(),
            "holds": res.holds,
            "counterexample": res.counterexample.as_ref().map(|w| counterexample_json(&alg, w)),
            "truncation": truncation_json(&note),
        }),
    })
}

pub fn check_central(desc: &str, poly: &str, n: Option<u32>, allow_large: bool) -> Result<Outcome> {
    let f = parse_poly(poly)?;
    let (cfg, cap) = limits(allow_large);
    let (alg, note) = load(desc, n, default_n(f.degree()), cap)?;
    estimate(&alg, f.degree(), &cfg, allow_large);
    let class = pitest::classify_central(&f, &alg, &cfg)?;
    let mut text = vec![
        class.name().to_string(),
        format!("algebra: {}", alg.descriptor()),
        format!("poly: {f}"),
    ];
    let witness = match &class {
        CentralClass::Identity => None,
        CentralClass::ProperCentral(w) | CentralClass::NonCentral(w) => Some(w),
    };
    if let Some(w) = witness {
        counterexample_lines(&alg, &f, w, &mut text);
    }
    text.extend(truncation_line(&note));
    Ok(Outcome {
        code: if matches!(class, CentralClass::NonCentral(_)) { 1 } else { 0 },
        text,
        json: json!({
            "algebra": alg.descriptor().to_string(),
            "poly": f.to_string(),
            "class": class.name(),
            "witness": witness.map(|w| counterexample_json(&alg, w)),
            "truncation": truncation_json(&note),
        }),
    })
}

pub fn canon(poly: &str) -> Result<Outcome> {
    let f = parse_poly(poly)?;
    let cf = canonical_form(&f)?;
    let mut text = vec![format!("poly: {f}")];
    if cf.is_zero() {
        text.push("canonical form: 0 (identity of E)".into());
    } else {
        text.push("canonical form (J, beta):".into());
        text.extend(cf.to_string().lines().map(|l| format!("  {l}")));
        text.push(format!("expansion: {}", cf.to_poly()));
    }
    Ok(Outcome {
        code: 0,
        text,
        json: json!({
            "poly": f.to_string(),
            "vars": cf.vars,
            "terms": cf.coeffs.iter().map(|(j, c)| json!({
                "J": j.0,
                "beta": c.to_string(),
            })).collect::<Vec<_>>(),
            "identity_of_E": cf.is_zero(),
        }),
    })
}

pub fn witness(poly: &str) -> Result<Outcome> {
    let f = parse_poly(poly)?;
    match grassmann_witness(&f) {
        Ok(w) => Ok(Outcome {
            code: 0,
            text: w.to_string().lines().map(String::from).collect(),
            json: json!({
                "poly": f.to_string(),
                "p": w.p,
                "J": w.j.0,
                "substitution": w.substitution.iter().map(|(v, x)| json!({
                    "var": format!("x{v}"),
                    "value": x.to_string(),
                })).collect::<Vec<_>>(),
                "value": w.value.to_string(),
            }),
        }),
        Err(Error::ZeroCanonicalForm) => Ok(Outcome {
            code: 1,
            text: vec!["identity of E: no witness".into()],
            json: json!({ "poly": f.to_string(), "identity_of_E": true }),
        }),
        Err(e) => Err(e),
    }
}

fn numbers(what: &str, s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("{what}: `{t}` is not a non-negative integer"),
            })
        })
        .collect()
}

fn theta_lines(theta: &Theta) -> Vec<String> {
    theta
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect()
}

fn theta_json(theta: &Theta) -> Value {
    json!(theta
        .iter()
        .map(|row| row.iter().map(|s| s.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn epsilon(decomp: &str, degrees: &str, perm: &str) -> Result<Outcome> {
    let d = builtin_decomposition(decomp)?;
    let degrees = numbers("degrees", degrees)?;
    let one_based = numbers("perm", perm)?;
    if one_based.contains(&0) {
        return Err(Error::BadPermutation(one_based));
    }
    let sigma: Vec<usize> = one_based.iter().map(|i| i - 1).collect();
    let eps = epsilon_sigma(d.theta(), &degrees, &sigma)?;
    Ok(Outcome {
        code: 0,
        text: vec![format!("epsilon = {eps}")],
        json: json!({
            "decomposition": d.name(),
            "degrees": degrees,
            "perm": one_based,
            "epsilon": eps.to_string(),
        }),
    })
}

pub fn transform(decomp: &str, poly: &str, degrees: &str) -> Result<Outcome> {
    let d = builtin_decomposition(decomp)?;
    let f = parse_poly(poly)?;
    let degrees = numbers("degrees", degrees)?;
    let fa = transform_f_a(&f, d.theta(), &degrees)?;
    Ok(Outcome {
        code: 0,
        text: vec![format!("f_a = {fa}")],
        json: json!({
            "decomposition": d.name(),
            "poly": f.to_string(),
            "degrees": degrees,
            "f_a": fa.to_string(),
        }),
    })
}

pub fn regular_verify(decomp: &str, degrees: Option<&str>) -> Result<Outcome> {
    let d = match builtin_decomposition(decomp) {
        Err(e @ Error::P2Violation { .. }) => {
            return Ok(Outcome {
                code: 1,
                text: vec![format!("P2 fails: {e}")],
                json: json!({ "decomposition": decomp, "p2": false, "error": e.to_string() }),
            })
        }
        other => other?,
    };
    let alg = d.algebra();
    let report = verify_p2(alg, d.components())?;
    let agrees = report.theta == *d.theta();
    let mut text = vec![
        format!("decomposition: {}", d.name()),
        format!("algebra: {}", alg.descriptor()),
        format!(
            "components: {}",
            d.labels()
                .iter()
                .zip(d.components())
                .map(|(l, c)| format!("{l} ({})", c.len()))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        "theta:".into(),
    ];
    text.extend(theta_lines(&report.theta));
    let undetermined: Vec<String> = report
        .undetermined
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect();
    text.push(format!(
        "undetermined: {}",
        if undetermined.is_empty() {
            "none".to_string()
        } else {
            format!("{} (set to the stored value)", undetermined.join(" "))
        }
    ));
    text.push(format!("P2: {}", if agrees { "ok" } else { "differs from the stored matrix" }));
    let mut code = if agrees { 0 } else { 1 };
    let mut p1 = Value::Null;
    if let Some(seq) = degrees {
        let seq = numbers("degrees", seq)?;
        let shown: Vec<String> = seq.iter().map(usize::to_string).collect();
        match verify_p1(&d, &seq)? {
            P1Outcome::Found { witness, product } => {
                text.push(format!("P1 ({}): found", shown.join(" ")));
                for (i, x) in witness.iter().enumerate() {
                    text.push(format!("  x{} = {}", i + 1, alg.display(x)));
                }
                text.push(format!("  product = {}", alg.display(&product)));
                p1 = json!({
                    "degrees": seq,
                    "found": true,
                    "witness": witness.iter().map(|x| alg.display(x).to_string()).collect::<Vec<_>>(),
                    "product": alg.display(&product).to_string(),
                });
            }
            P1Outcome::Inconclusive { nodes } => {
                text.push(format!("P1 ({}): inconclusive after {nodes} nodes", shown.join(" ")));
                code = code.max(3);
                p1 = json!({ "degrees": seq, "found": false, "nodes": nodes });
            }
        }
    }
    Ok(Outcome {
        code,
        text,
        json: json!({
            "decomposition": d.name(),
            "algebra": alg.descriptor().to_string(),
            "labels": d.labels(),
            "dims": d.components().iter().map(Vec::len).collect::<Vec<_>>(),
            "theta": theta_json(&report.theta),
            "undetermined": report.undetermined,
            "p2": agrees,
            "p1": p1,
        }),
    })
}

pub fn tensor_regular(da: &str, db: &str) -> Result<Outcome> {
    let a = builtin_decomposition(da)?;
    let b = builtin_decomposition(db)?;
    let t = pi_core::regular::tensor_decomposition(&a, &b)?;
    let kron = kronecker(a.theta(), b.theta())?;
    let inferred = verify_p2(t.algebra(), t.components())?;
    let lifted: Theta = kron
        .iter()
        .map(|row| row.iter().map(|s| s.lift(t.algebra().conductor())).collect())
        .collect::<Result<_>>()?;
    let equal = lifted == inferred.theta;
    let mut text = vec![
        format!("decomposition: {}", t.name()),
        format!("algebra: {}", t.algebra().descriptor()),
        format!("components: {}", t.labels().join(", ")),
        "kronecker:".into(),
    ];
    text.extend(theta_lines(&lifted));
    text.push("inferred:".into());
    text.extend(theta_lines(&inferred.theta));
    text.push(format!("equal: {}", if equal { "yes" } else { "no" }));
    Ok(Outcome {
        code: if equal { 0 } else { 1 },
        text,
        json: json!({
            "decomposition": t.name(),
            "algebra": t.algebra().descriptor().to_string(),
            "labels": t.labels(),
            "kronecker": theta_json(&lifted),
            "inferred": theta_json(&inferred.theta),
            "undetermined": inferred.undetermined,
            "equal": equal,
        }),
    })
}

pub fn primeness_scan(
    desc: &str,
    r: usize,
    g: &str,
    mode: ScanMode,
    n: Option<u32>,
    allow_large: bool,
    seed: u64,
) -> Result<Outcome> {
    let g = parse_poly(g)?;
    let (mut cfg, cap) = limits(allow_large);
    cfg.seed = seed;
    let n_default = (2 * (r + g.variables().len())) as u32;
    let (alg, note) = load(desc, n, n_default, cap)?;
    estimate(&alg, r + g.variables().len(), &cfg, allow_large);
    let mut report = pitest::primeness_scan(&alg, r, &g, mode, &cfg)?;
    report.truncation = note;
    let code = match (report.verdict, report.verified) {
        (Verdict::Contained, true) => 0,
        (Verdict::Counterexample, _) => 1,
        (Verdict::Contained, false) => 3,
    };
    let mut text = vec![
        format!(
            "verdict: {}",
            match report.verdict {
                Verdict::Contained => "contained",
                Verdict::Counterexample => "counterexample",
            }
        ),
        format!("algebra: {}", report.algebra),
        format!("mode: {}", report.mode),
        format!("r: {}", report.r),
        format!("g: {}", report.g),
        format!("dimV: {}", report.dim_v),
        format!("dimC: {}", report.dim_c),
    ];
    if let Some(f) = &report.counterexample {
        text.push(format!("counterexample: {f}"));
    }
    for f in &report.v_basis {
        text.push(format!("  V: {f}"));
    }
    text.push(format!("verified: {}", if report.verified { "yes" } else { "no" }));
    text.push(format!(
        "tuples: {} ({} samples, rank {} after sampling, final rank {})",
        report.stats.tuples, report.stats.samples, report.stats.rank_after_sampling, report.stats.rank
    ));
    text.extend(truncation_line(&report.truncation));
    Ok(Outcome {
        code,
        text,
        json: serde_json::to_value(&report).expect("serializable"),
    })
}

pub fn compare_identities(
    da: &str,
    db: &str,
    m: usize,
    n: Option<u32>,
    allow_large: bool,
) -> Result<Outcome> {
    let (cfg, cap) = limits(allow_large);
    let (a, na) = load(da, n, default_n(m), cap)?;
    let (b, nb) = load(db, n, default_n(m), cap)?;
    estimate(&a, m, &cfg, allow_large);
    estimate(&b, m, &cfg, allow_large);
    let cmp = pitest::compare_identity_spaces(&a, &b, m, &cfg)?;
    let mut text = vec![];
    let body = match &cmp {
        Comparison::Equal { dim } => {
            text.push(format!("equal: identities of degree {m} span a space of dimension {dim}"));
            json!({ "equal": true, "dim": dim })
        }
        Comparison::Differing {
            poly,
            identity_of,
            fails_on,
            counterexample,
        } => {
            let other = if *fails_on == a.descriptor().to_string() { &a } else { &b };
            text.push("differing".into());
            text.push(format!("identity of {identity_of}: {poly}"));
            text.push(format!("fails on {fails_on}: {}", counterexample.describe(other)));
            text.push(format!("value: {}", other.display(&counterexample.value)));
            json!({
                "equal": false,
                "poly": poly.to_string(),
                "identity_of": identity_of,
                "fails_on": fails_on,
                "counterexample": counterexample_json(other, counterexample),
            })
        }
    };
    text.insert(0, format!("algebras: {} vs {}", a.descriptor(), b.descriptor()));
    for t in [&na, &nb] {
        text.extend(truncation_line(t));
    }
    let mut doc = json!({
        "algebras": [a.descriptor().to_string(), b.descriptor().to_string()],
        "degree": m,
        "truncation": [truncation_json(&na), truncation_json(&nb)],
    });
    if let (Value::Object(d), Value::Object(extra)) = (&mut doc, body) {
        d.extend(extra);
    }
    Ok(Outcome {
        code: if matches!(cmp, Comparison::Equal { .. }) { 0 } else { 1 },
        text,
        json: doc,
    })
}
