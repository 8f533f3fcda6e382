//! Frozen reference values from the worked examples and the desk-scale
//! theorem corpora.

use serde::Serialize;

use orbitdual::checker::{mild_check_classical, CheckOptions, Verdict};
use orbitdual::corpus::{
    antisymmetric_corpus, metaplectic_corpus, q_unipotent_corpus, rtuple_corpus, type_a_corpus, Instance,
    RTUPLE_COUNT, RTUPLE_SEED,
};
use orbitdual::dualities::f_dc;
use orbitdual::induction::{induce_zero, induce_zero_factor, orbit_tuple_leq, OrbitTuple};
use orbitdual::infchar::{q_unipotent_infchar, rho_plus, QUnipotentSpec, Variant};
use orbitdual::rootsys::{
    build_root_system, centralizer_levi, integral_pseudo_levi, lattice_preset, LatticePreset, LeviDecomposition,
};
use orbitdual::{ClassicalFamily, Epsilon, LieType, Partition, Result, Vector};

#[derive(Debug, Serialize)]
pub struct Row {
    pub group: &'static str,
    pub case: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

struct Case {
    group: &'static str,
    case: String,
    expected: String,
    run: Box<dyn Fn() -> Result<String>>,
}

fn case(group: &'static str, name: &str, expected: &str, run: impl Fn() -> Result<String> + 'static) -> Case {
    Case { group, case: name.to_string(), expected: expected.to_string(), run: Box::new(run) }
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn v(s: &str) -> Vector {
    s.parse().expect("literal vector")
}

fn ty(s: &str) -> LieType {
    s.parse().expect("literal type")
}

fn orbit_tuple(lambda: &Vector, t: LieType) -> Result<OrbitTuple> {
    let factors = integral_pseudo_levi(lambda, t)?;
    let levis: Vec<_> = factors.iter().map(|f| (f.clone(), centralizer_levi(&f.local(lambda), f))).collect();
    induce_zero(&levis)
}

fn show_tuple(t: &OrbitTuple) -> String {
    let parts: Vec<String> = t.entries.iter().map(|(f, p)| format!("{} [{}]: [{p}]", f.name(), f.label)).collect();
    parts.join(", ")
}

fn check(lambda: &str, t: &str, preset: LatticePreset) -> Result<String> {
    let t = ty(t);
    let r = mild_check_classical(&v(lambda), t, &lattice_preset(t, preset)?, &CheckOptions::default())?;
    Ok(match r.witnesses.first() {
        Some(w) => format!("{:?} ({})", r.verdict, w.nu),
        None => format!("{:?}", r.verdict),
    })
}

fn induced(family: ClassicalFamily, blocks: &[usize], residual: usize) -> Result<String> {
    Ok(induce_zero_factor(&LeviDecomposition::from_sizes(family, blocks, residual)?)?.to_string())
}

fn desk(name: &'static str, corpus: fn() -> Result<Vec<Instance>>) -> Case {
    case("desk", name, "all Pass", move || {
        let instances = corpus()?;
        let mut fails = Vec::new();
        for inst in &instances {
            let r = mild_check_classical(&inst.lambda, inst.lie_type, &inst.lattice, &CheckOptions::default())?;
            if r.verdict != Verdict::Pass {
                fails.push(inst.label.clone());
            }
        }
        Ok(if fails.is_empty() {
            "all Pass".to_string()
        } else {
            format!("{} of {} fail: {}", fails.len(), instances.len(), fails.join("; "))
        })
    })
}

fn rtuples() -> Result<Vec<Instance>> {
    rtuple_corpus(RTUPLE_COUNT, RTUPLE_SEED)
}

const L1: &str = "9/2,7/2,5/2,3/2,1/2,2,1,2,1,0";
const L2: &str = "5/2,3/2,1/2,3/2,1/2,4,3,2,1,0";

fn cases() -> Vec<Case> {
    vec![
        case("counterexample1", "[9,1] in P_D^sp(10)", "true", || {
            Ok(p("9,1").is_special_class(Epsilon::Orthogonal, 0).to_string())
        }),
        case("counterexample1", "[6,4] in P_C^ms(10)", "true", || {
            Ok(p("6,4").is_special_class(Epsilon::Symplectic, 1).to_string())
        }),
        case("counterexample1", "f_DC([9,1])", "10", || Ok(f_dc(&p("9,1"))?.to_string())),
        case("counterexample1", "f_DC([5,5])", "6,4", || Ok(f_dc(&p("5,5"))?.to_string())),
        case("counterexample1", "rho+([10,5,5])", L1, || Ok(rho_plus(&[10, 5, 5], 20)?.to_string())),
        case("counterexample1", "rho+([6,4,9,1])", L2, || Ok(rho_plus(&[6, 4, 9, 1], 20)?.to_string())),
        case("counterexample1", "q-unipotent [10,5,5] in D10", L1, || {
            let spec = QUnipotentSpec { rows: vec![10, 5, 5], g_type: ty("D10"), variant: Variant::Default };
            Ok(q_unipotent_infchar(&spec)?.raw.to_string())
        }),
        case("counterexample1", "norms", "205/4 > 165/4", || {
            let rs = build_root_system(ty("D10"));
            let (a, b) = (rs.norm_sq(&v(L1)), rs.norm_sq(&v(L2)));
            Ok(format!("{a} {} {b}", if a > b { ">" } else { "<=" }))
        }),
        case("counterexample1", "pseudo-Levi of lambda1", "so(10) + so(10)", || {
            let names: Vec<String> = integral_pseudo_levi(&v(L1), ty("D10"))?.iter().map(|f| f.name()).collect();
            Ok(names.join(" + "))
        }),
        case("counterexample1", "tuple of lambda1", "so(10) [half-integer]: [9,1], so(10) [integer]: [5,5]", || {
            Ok(show_tuple(&orbit_tuple(&v(L1), ty("D10"))?))
        }),
        case("counterexample1", "tuple of lambda2", "so(10) [half-integer]: [5,5], so(10) [integer]: [9,1]", || {
            Ok(show_tuple(&orbit_tuple(&v(L2), ty("D10"))?))
        }),
        case("counterexample1", "tuples comparable", "false false", || {
            let (a, b) = (orbit_tuple(&v(L1), ty("D10"))?, orbit_tuple(&v(L2), ty("D10"))?);
            Ok(format!("{} {}", orbit_tuple_leq(&a, &b)?, orbit_tuple_leq(&b, &a)?))
        }),
        case("counterexample1", "lambda1 in D10, root lattice", "Pass", || check(L1, "D10", LatticePreset::Root)),
        case("root_vs_weight", "D3 weight lattice", "Fail (2,1,0)", || {
            check("5/2,3/2,1/2", "D3", LatticePreset::Weight)
        }),
        case("root_vs_weight", "D3 root lattice", "Pass", || check("5/2,3/2,1/2", "D3", LatticePreset::Root)),
        case("root_vs_weight", "Ind from Cartan of so(6)", "5,1", || induced(ClassicalFamily::D, &[1, 1, 1], 0)),
        case("root_vs_weight", "Ind from Cartan of so(7)", "7", || induced(ClassicalFamily::B, &[1, 1, 1], 0)),
        case("root_vs_weight", "Ind from so(3)+gl(1)^2 in so(7)", "5,1,1", || {
            induced(ClassicalFamily::B, &[1, 1], 1)
        }),
        desk("q-unipotent N'=5..9", q_unipotent_corpus),
        desk("metaplectic n<=4", metaplectic_corpus),
        desk("type A n<=6", type_a_corpus),
        desk("type A r-tuples", rtuples),
        desk("antisymmetric rank<=4", antisymmetric_corpus),
    ]
}

pub fn group_names() -> Vec<&'static str> {
    let mut g: Vec<&'static str> = cases().iter().map(|c| c.group).collect();
    g.dedup();
    g
}

/// Runs the cases whose group or name contains `filter`. With
/// `inject_fault` the first selected expectation is corrupted.
pub fn run(filter: Option<&str>, inject_fault: bool) -> Vec<Row> {
    let mut rows = Vec::new();
    for c in cases() {
        if let Some(f) = filter {
            if !c.group.contains(f) && !c.case.contains(f) {
                continue;
            }
        }
        let mut expected = c.expected;
        if inject_fault && rows.is_empty() {
            expected.push_str(" (injected fault)");
        }
        let got = match (c.run)() {
            Ok(s) => s,
            Err(e) => format!("error: {e}"),
        };
        rows.push(Row { group: c.group, case: c.case, ok: got == expected, expected, got });
    }
    rows
}

pub fn table(rows: &[Row]) -> String {
    let headers = ["group", "case", "expected", "got", "status"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.group.to_string(),
                r.case.clone(),
                r.expected.clone(),
                r.got.clone(),
                if r.ok { "ok".into() } else { "MISMATCH".into() },
            ]
        })
        .collect();
    let mut width = headers.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let padded: Vec<String> =
            row.iter().zip(&width).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(&headers.map(String::from))];
    out.push(width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
    out.extend(cells.iter().map(|r| line(r)));
    let failed = rows.iter().filter(|r| !r.ok).count();
    out.push(format!("{} cases, {} mismatches", rows.len(), failed));
    out.join("\n")
}
