use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use super::report::{int_json, opt_int_json, rat_json, RunReport};
use super::{read_polytope, Check, CliError, Method};
use crate::birkhoff::{adjacent_pairs, enumerate_vertices, verify_lemma12, verify_negative_sum_bound, CycleMatrix};
use crate::geometry::{
    birkhoff_polytope, build_lattice_chart, triangulation_oracle, volume_by_slicing, HullLimits, SlicingVolume,
    VPolytope,
};
use crate::linalg::{fmt_fraction, int_to_rat, IntMatrix, Rational};
use crate::slicing_basis::{
    build_basis, check_unimodular, is_1_general_position, transform_vertex, verify_theorem4, SlicingVector,
};

const BASIS_MAX: usize = 8;
const ENUMERATION_MAX: usize = 5;
const UNIMODULAR_MAX: usize = 8;
const GENPOS_MAX: usize = 4;
const VERTICES_MAX: usize = 5;
const VOLUME_DEFAULT_MAX: usize = 3;
/// `B_n` has dimension `(n-1)²`; the hull cap of 9 stops at `n = 4`.
const VOLUME_HARD_MAX: usize = 4;

fn check_range(what: &str, n: usize, min: usize, max: usize, force: bool) -> Result<(), CliError> {
    if n < min {
        return Err(CliError::Usage(format!("{what}: n must be at least {min}, got {n}")));
    }
    if n > max && !force {
        return Err(CliError::Usage(format!(
            "{what}: n = {n} exceeds the default limit of {max}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| ((*k).to_owned(), v.clone())).collect()
}

fn int_rows(m: &IntMatrix) -> Value {
    Value::Array(m.row_iter().map(|r| Value::Array(r.iter().map(int_json).collect())).collect())
}

fn cycle_json(m: &Option<CycleMatrix>) -> Value {
    m.as_ref().map_or(Value::Null, |m| {
        let n = m.n();
        Value::Array((1..=n).map(|i| (1..=n).map(|j| m.get(i, j)).collect::<Vec<_>>().into()).collect())
    })
}

fn opt_str(v: &Option<BigInt>) -> String {
    v.as_ref().map_or_else(|| "-".to_owned(), ToString::to_string)
}

pub fn cmd_basis(n: usize, force: bool) -> Result<RunReport, CliError> {
    check_range("basis", n, 2, BASIS_MAX, force)?;
    let basis = build_basis(n)?;
    let mut report = RunReport::new("basis", params(&[("n", n.into())]));
    let kinds = basis_kinds(n);
    let vectors: Vec<Value> = basis
        .vectors()
        .iter()
        .zip(&kinds)
        .enumerate()
        .map(|(k, (m, kind))| json!({ "index": k + 1, "kind": kind, "matrix": int_rows(m) }))
        .collect();
    let det = basis.determinant();
    report.result = json!({
        "n": n,
        "vectors": vectors,
        "matrix": int_rows(basis.matrix()),
        "determinant": int_json(&det),
        "unimodular": check_unimodular(&basis),
        "offset_index": basis.offset_index() + 1,
    });

    let mut header = vec!["index".to_owned(), "kind".to_owned()];
    header.extend((1..=n).flat_map(|i| (1..=n).map(move |j| format!("a{i}_{j}"))));
    report.table.push(header);
    for (k, (m, kind)) in basis.vectors().iter().zip(&kinds).enumerate() {
        let mut row = vec![(k + 1).to_string(), (*kind).to_owned()];
        row.extend(m.entries().iter().map(ToString::to_string));
        report.table.push(row);
    }
    report.table.push(vec!["determinant".to_owned(), det.to_string()]);
    Ok(report)
}

fn basis_kinds(n: usize) -> Vec<&'static str> {
    let mut kinds = vec!["top_row"; n];
    kinds.extend(std::iter::repeat_n("left_column", n - 1));
    kinds.extend(std::iter::repeat_n("two_entry", (n - 1) * (n - 1) - 1));
    kinds.push("offset");
    kinds
}

pub fn cmd_verify(n: usize, checks: &[Check], force: bool) -> Result<RunReport, CliError> {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    if checks.is_empty() {
        return Err(CliError::Usage("verify: no checks selected".to_owned()));
    }
    for &check in &checks {
        let max = match check {
            Check::Theorem4 | Check::Lemma12 | Check::Bound => ENUMERATION_MAX,
            Check::Unimodular => UNIMODULAR_MAX,
            Check::Genpos => GENPOS_MAX,
        };
        check_range(check.name(), n, 2, max, force)?;
    }

    let names: Vec<Value> = checks.iter().map(|c| c.name().into()).collect();
    let mut report = RunReport::new("verify", params(&[("n", n.into()), ("checks", names.into())]));
    report.table.push(["check", "passed", "count", "detail"].map(str::to_owned).to_vec());
    let mut results = Vec::new();
    for check in checks {
        let (passed, count, detail, value) = run_check(n, check)?;
        report.passed &= passed;
        report.table.push(vec![check.name().to_owned(), passed.to_string(), count.to_string(), detail]);
        results.push(value);
    }
    report.result = json!({ "n": n, "checks": results });
    Ok(report)
}

fn run_check(n: usize, check: Check) -> Result<(bool, usize, String, Value), CliError> {
    Ok(match check {
        Check::Theorem4 => {
            let r = verify_theorem4(n)?;
            let detail = format!("zero_products={};min_abs_product={}", r.zero_products, opt_str(&r.min_abs_product));
            let value = json!({
                "check": "theorem4",
                "passed": r.passed(),
                "cycles": r.cycles,
                "zero_products": r.zero_products,
                "min_abs_product": opt_int_json(&r.min_abs_product),
                "witness": cycle_json(&r.witness),
            });
            (r.passed(), r.cycles, detail, value)
        }
        Check::Lemma12 => {
            let r = verify_lemma12(n)?;
            let detail = format!(
                "violations={};positive_cycles={};min_positive_sum={};max_negative_sum={}",
                r.violations,
                r.positive_cycles,
                opt_str(&r.min_positive_sum),
                opt_str(&r.max_negative_sum)
            );
            let value = json!({
                "check": "lemma12",
                "passed": r.passed(),
                "cycles": r.cycles,
                "positive_cycles": r.positive_cycles,
                "violations": r.violations,
                "min_positive_sum": opt_int_json(&r.min_positive_sum),
                "max_negative_sum": opt_int_json(&r.max_negative_sum),
                "min_sum": opt_int_json(&r.min_sum),
                "max_sum": opt_int_json(&r.max_sum),
                "first_violation": cycle_json(&r.first_violation),
            });
            (r.passed(), r.cycles, detail, value)
        }
        Check::Bound => {
            let r = verify_negative_sum_bound(n)?;
            let detail = format!("violations={};min_slack={}", r.violations, opt_str(&r.min_slack));
            let value = json!({
                "check": "bound",
                "passed": r.passed(),
                "positive_cycles": r.positive_cycles,
                "violations": r.violations,
                "min_slack": opt_int_json(&r.min_slack),
            });
            (r.passed(), r.positive_cycles, detail, value)
        }
        Check::Unimodular => {
            let b = build_basis(n)?;
            let det = b.determinant();
            let passed = check_unimodular(&b);
            let value = json!({ "check": "unimodular", "passed": passed, "determinant": int_json(&det) });
            (passed, 1, format!("determinant={det}"), value)
        }
        Check::Genpos => {
            let b = build_basis(n)?;
            let perms = enumerate_vertices(n)?;
            let edges = adjacent_pairs(&perms)?;
            let transformed =
                perms.iter().map(|p| transform_vertex(&b, p)).collect::<Result<Vec<_>, _>>()?;
            let coords: Vec<Vec<Rational>> =
                transformed.iter().map(|t| t.coordinates.iter().map(int_to_rat).collect()).collect();
            let passed = is_1_general_position(&coords, &edges, b.offset_index())?;
            let gaps: Vec<BigInt> = edges
                .iter()
                .map(|&(a, c)| (&transformed[a].slicing_coordinate - &transformed[c].slicing_coordinate).abs())
                .collect();
            let parallel = gaps.iter().filter(|g| g.is_zero()).count();
            let min_gap = gaps.iter().min().cloned();
            let detail = format!("parallel_edges={parallel};min_gap={}", opt_str(&min_gap));
            let value = json!({
                "check": "genpos",
                "passed": passed,
                "vertices": perms.len(),
                "edges": edges.len(),
                "parallel_edges": parallel,
                "min_gap": opt_int_json(&min_gap),
            });
            (passed, edges.len(), detail, value)
        }
    })
}

pub fn cmd_vertices(n: usize, transformed: bool, force: bool) -> Result<RunReport, CliError> {
    check_range("vertices", n, 2, VERTICES_MAX, force)?;
    let mut report =
        RunReport::new("vertices", params(&[("n", n.into()), ("transformed", transformed.into())]));
    let perms = enumerate_vertices(n)?;
    let basis = if transformed { Some(build_basis(n)?) } else { None };

    let mut header = vec!["sigma".to_owned()];
    header.extend((1..=n * n).map(|k| format!("x{k}")));
    if transformed {
        header.push("slicing".to_owned());
    }
    report.table.push(header);

    let mut rows = Vec::with_capacity(perms.len());
    for p in &perms {
        let sigma: Vec<Value> = p.sigma().iter().map(|&s| s.into()).collect();
        let sigma_text = p.sigma().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let (coords, slicing): (Vec<BigInt>, Option<BigInt>) = match &basis {
            Some(b) => {
                let t = transform_vertex(b, p)?;
                (t.coordinates, Some(t.slicing_coordinate))
            }
            None => (p.vectorize().into_iter().map(BigInt::from).collect(), None),
        };
        let mut row = vec![sigma_text];
        row.extend(coords.iter().map(ToString::to_string));
        let mut entry = json!({ "sigma": sigma, "coordinates": coords.iter().map(int_json).collect::<Vec<_>>() });
        if let Some(s) = &slicing {
            row.push(s.to_string());
            entry["slicing_coordinate"] = int_json(s);
        }
        report.table.push(row);
        rows.push(entry);
    }
    report.result = json!({ "n": n, "transformed": transformed, "vertices": rows });
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VolumeTarget {
    Birkhoff(usize),
    File(PathBuf),
}

pub fn cmd_volume(target: &VolumeTarget, method: Method, force: bool) -> Result<RunReport, CliError> {
    let method_name = match method {
        Method::Slice => "slice",
        Method::Oracle => "oracle",
        Method::Both => "both",
    };
    let needs_slicing = method != Method::Oracle;
    let (polytope, functional, mut report) = match target {
        VolumeTarget::Birkhoff(n) => {
            let n = *n;
            if n < 3 {
                return Err(CliError::Usage(format!(
                    "volume: B_{n} has dimension at most 1, too small for slicing; n must be at least 3"
                )));
            }
            if n > VOLUME_HARD_MAX {
                return Err(CliError::Usage(format!(
                    "volume: B_{n} has dimension {}, above the hull dimension limit of {}",
                    (n - 1) * (n - 1),
                    HullLimits::default().max_dim
                )));
            }
            check_range("volume", n, 3, VOLUME_DEFAULT_MAX, force)?;
            let p = birkhoff_polytope(n)?;
            let v = SlicingVector::new(n)?;
            let params = params(&[("target", "birkhoff".into()), ("n", n.into()), ("method", method_name.into())]);
            (p, v.vectorized().to_vec(), RunReport::new("volume", params))
        }
        VolumeTarget::File(path) => {
            let mut p = read_polytope(path)?;
            let limits = HullLimits::default();
            p.check_extreme(&limits)?;
            if needs_slicing && p.edges().is_none() {
                p = p.with_computed_edges(&limits)?;
            }
            let functional: Vec<BigInt> = (0..p.ambient_dim()).map(|i| BigInt::from(u8::from(i == 0))).collect();
            let name = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
            let params = params(&[("target", "file".into()), ("input", name.into()), ("method", method_name.into())]);
            (p, functional, RunReport::new("volume", params))
        }
    };

    let slicing = if needs_slicing { Some(slice_volume(&polytope, &functional)?) } else { None };
    let oracle = if method != Method::Slice { Some(triangulation_oracle(&polytope)?) } else { None };
    let equal = match (&slicing, &oracle) {
        (Some(s), Some(o)) => Some(&s.total == o),
        _ => None,
    };
    report.passed = equal.unwrap_or(true);
    let total = slicing.as_ref().map(|s| &s.total).or(oracle.as_ref()).expect("one method ran");

    report.table.push(["level", "volume", "slice_vertices"].map(str::to_owned).to_vec());
    let slicing_json = slicing.as_ref().map_or(Value::Null, |s| {
        let slices: Vec<Value> = s
            .slices
            .iter()
            .map(|r| {
                let count = r.slice.as_ref().map_or(0, |q| q.vertices().len());
                report.table.push(vec![r.level.to_string(), fmt_fraction(&r.volume), count.to_string()]);
                json!({ "level": int_json(&r.level), "volume": rat_json(&r.volume), "slice_vertices": count })
            })
            .collect();
        json!({ "total": rat_json(&s.total), "levels": s.slices.len(), "slices": slices })
    });
    if let Some(s) = &slicing {
        report.table.push(vec!["total_slice".to_owned(), fmt_fraction(&s.total)]);
    }
    if let Some(o) = &oracle {
        report.table.push(vec!["total_oracle".to_owned(), fmt_fraction(o)]);
    }
    if let Some(e) = equal {
        report.table.push(vec!["equal".to_owned(), e.to_string()]);
    }
    report.result = json!({
        "dimension": polytope.dim(),
        "ambient_dimension": polytope.ambient_dim(),
        "vertices": polytope.vertices().len(),
        "total": rat_json(total),
        "slicing": slicing_json,
        "oracle": oracle.as_ref().map_or(Value::Null, rat_json),
        "equal": equal,
    });
    Ok(report)
}

fn slice_volume(p: &VPolytope, functional: &[BigInt]) -> Result<SlicingVolume, CliError> {
    let chart = build_lattice_chart(p, functional)?;
    Ok(volume_by_slicing(p, &chart)?)
}
