use std::path::Path;
use std::sync::Arc;

use serde_json::json;

use hecke_core::algebra::{induced_module, invariants, LeftModule};
use hecke_core::brst::{brst_element, brst_isomorphism_check, build_brst_complex, BrstError};
use hecke_core::complexes::{build_end_complex, cohomology_groups, DgAlgebra};
use hecke_core::hecke::{
    bar_model_consistency, compare_hk0, ext_a_selfext, ext_b, freeness_certificate, hecke_algebra,
    hk0_direct, structure_triangle, HeckeOptions, HeckeResult, Resolution,
};
use hecke_core::input::{read_input, read_resolution, Problem, Side};
use hecke_core::linalg::{format_scalar, parse_scalar};
use hecke_core::reduction::{
    act_on_cohomology, act_on_homology, dirac_observables, module_cohomology, module_homology,
    universal_reduction_check, ModuleCohomology, ModuleHomology,
};
use hecke_core::resolutions::ce_complex;
use hecke_core::SparseVec;

use crate::report::{self, dims_map, format_class, vector, Report};
use crate::{CliError, Common, ModuleArgs};

fn load(c: &Common) -> Result<Problem, CliError> {
    Ok(read_input(&c.input)?)
}

fn options(c: &Common) -> HeckeOptions {
    HeckeOptions {
        window: c.window,
        min_degree: c.min_degree,
        max_degree: c.max_degree,
        stability_passes: c.stability_passes,
    }
}

fn resolution(c: &Common, p: &Problem) -> Result<Resolution, CliError> {
    match c.resolution.as_str() {
        "bar" => Ok(Resolution::Bar(p.pair()?.clone())),
        "ce" => Ok(Resolution::Ce(p.lie_action()?.clone())),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let pair = p.pair()?.clone();
                let complex = read_resolution(Path::new(path), &pair)?;
                Ok(Resolution::File { pair, complex })
            }
            None => Err(CliError::Usage(format!(
                "unknown resolution {other:?}; expected bar, ce or file:<path>"
            ))),
        },
    }
}

fn start(command: &str, c: &Common, p: &Problem) -> Report {
    let mut r = Report::new(command, p.name.as_deref());
    if let Some(name) = &p.name {
        r.line(format!("input: {name}"));
    }
    r.set("window", json!(c.window));
    r
}

fn dims_line(label: &str, dims: &[usize]) -> String {
    format!(
        "{label}: {}",
        dims.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn list(dims: &[usize]) -> serde_json::Value {
    json!(dims)
}

fn hecke_section(r: &mut Report, h: &HeckeResult) {
    r.line(format!("resolution: {}", h.resolution_used));
    r.line(format!("window: {}", h.window));
    for (n, d) in &h.table.dims {
        let stable = h.stability.get(n).copied().unwrap_or(false);
        r.line(format!(
            "Hk^{n}: dim {d}{}",
            if stable { "" } else { " (unstable)" }
        ));
    }
    r.line(format!(
        "product convention: {}",
        report::convention(h.table.convention)
    ));
    report::table(r, "h", &h.table);
    if let Some(t) = &h.tor {
        r.line(dims_line("Tor^B_n(A,K)", &t.dims));
        r.set("tor", json!({ "dims": t.dims, "vanishes": t.vanishes }));
    }
    if h.advisory {
        r.line("advisory: Tor^B_n(A,K) does not vanish for some n > 0");
    }
    r.set("resolution", json!(h.resolution_used.to_string()));
    r.set("dims", dims_map(&h.table.dims));
    r.set(
        "stability",
        json!(h
            .stability
            .iter()
            .map(|(n, s)| (n.to_string(), json!(s)))
            .collect::<serde_json::Map<_, _>>()),
    );
    r.set(
        "dims_by_window",
        json!(h
            .dims_by_window
            .iter()
            .map(|(w, d)| (w.to_string(), dims_map(d)))
            .collect::<serde_json::Map<_, _>>()),
    );
    r.set("advisory", json!(h.advisory));
    let unstable: Vec<i64> = h
        .stability
        .iter()
        .filter(|(_, s)| !**s)
        .map(|(n, _)| *n)
        .collect();
    r.set("unstable", json!(unstable));
    r.unstable |= !unstable.is_empty();
}

pub fn hecke(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let res = resolution(c, &p)?;
    let h = hecke_algebra(&res, &options(c))?;
    let mut r = start("hecke", c, &p);
    hecke_section(&mut r, &h);
    Ok(r)
}

pub fn hk0(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let b = p.pair()?;
    let direct = hk0_direct(b);
    let mut r = start("hk0", c, &p);
    r.line(format!("dim Hk^0: {}", direct.dim()));
    let basis: Vec<String> = (0..direct.dim())
        .map(|i| format!("[{}]", p.algebra.format_element(&direct.lift(i))))
        .collect();
    r.line(format!("basis: {}", basis.join(", ")));
    r.line(format!(
        "product convention: {}",
        report::convention(direct.table.convention)
    ));
    report::table(&mut r, "k", &direct.table);
    if let Some(u) = &direct.table.unit {
        let lift = u.iter().fold(SparseVec::new(), |acc, (i, x)| {
            acc.add(&direct.lift(i).scale(x))
        });
        r.line(format!("unit class: [{}]", p.algebra.format_element(&lift)));
        r.set("unit_representative", vector(&lift));
    }
    r.set("dim", json!(direct.dim()));
    r.set("basis", json!(basis));
    r.check("representative independence", direct.well_defined);
    let opts = HeckeOptions {
        min_degree: 0,
        max_degree: 0,
        ..options(c)
    };
    let h = hecke_algebra(&resolution(c, &p)?, &opts)?;
    match compare_hk0(&h.end, &h.table, &direct) {
        Some(cmp) => {
            r.set(
                "comparison",
                json!({
                    "dims_equal": cmp.dims_equal,
                    "bijective": cmp.bijective,
                    "anti_multiplicative": cmp.anti_multiplicative,
                    "unit_matches": cmp.unit_matches,
                }),
            );
            r.check(
                "matches Hk^0 as an algebra (opposite product)",
                cmp.passed(),
            );
        }
        None => r.line("comparison skipped: resolution has more than one generator in degree 0"),
    }
    Ok(r)
}

pub fn ext(c: &Common, module: Option<&str>) -> Result<Report, CliError> {
    let p = load(c)?;
    let b = p.pair()?;
    let mut r = start("ext", c, &p);
    match module {
        Some(name) => {
            let v = left_module(&p, name)?;
            let dims = ext_b(b, &v.restrict(b), c.window);
            r.line(dims_line(&format!("Ext_B^n(K,{name})"), &dims));
            r.set("ext_b", list(&dims));
        }
        None => {
            let induced = induced_module(b).module;
            let eb = ext_b(b, &induced.restrict(b), c.window);
            let ea = ext_a_selfext(b, c.window);
            r.line(dims_line("Ext_B^n(K,A⊗_B K)", &eb));
            r.line(dims_line("Ext_A^n(A⊗_B K,A⊗_B K)", &ea.dims));
            if ea.advisory {
                r.line("advisory: Tor^B_n(A,K) does not vanish, so the Ext_A complex is not a resolution");
            }
            r.set("ext_b", list(&eb));
            r.set("ext_a", list(&ea.dims));
            r.set("advisory", json!(ea.advisory));
            if !ea.advisory {
                r.check("Ext_A and Ext_B agree", ea.dims == eb);
            }
        }
    }
    Ok(r)
}

pub fn tor(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let t = hecke_core::hecke::tor(p.pair()?, c.window);
    let mut r = start("tor", c, &p);
    r.line(dims_line("Tor^B_n(A,K)", &t.dims));
    r.line(format!("vanishes in positive degrees: {}", t.vanishes));
    r.set("dims", list(&t.dims));
    r.set("tensor_dims", list(&t.tensor_dims));
    r.set("vanishes", json!(t.vanishes));
    r.check("induced complex and tensor product agree", t.routes_agree());
    Ok(r)
}

fn parse_candidate(s: &str, dim: usize) -> Result<SparseVec, CliError> {
    let bad = || CliError::Usage(format!("bad candidate {s:?}; expected `i` or `i:c,j:c`"));
    let mut pairs = Vec::new();
    for part in s.split(',') {
        let (i, c) = match part.split_once(':') {
            Some((i, c)) => (i, parse_scalar(c).map_err(|_| bad())?),
            None => (part, hecke_core::linalg::one()),
        };
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        if i >= dim {
            return Err(bad());
        }
        pairs.push((i, c));
    }
    Ok(SparseVec::from_pairs(pairs))
}

pub fn free_cert(c: &Common, candidates: &[String]) -> Result<Report, CliError> {
    let p = load(c)?;
    let b = p.pair()?;
    let cands = candidates
        .iter()
        .map(|s| parse_candidate(s, p.algebra.dim()))
        .collect::<Result<Vec<_>, _>>()?;
    let cert = freeness_certificate(b, &cands);
    let mut r = start("free-cert", c, &p);
    let names: Vec<String> = cands.iter().map(|v| p.algebra.format_element(v)).collect();
    r.line(format!("candidates: {}", names.join(", ")));
    r.line(format!(
        "products: {}, rank {}, dim A {}",
        cert.products, cert.rank, cert.dim_a
    ));
    r.set("candidates", json!(names));
    r.set("products", json!(cert.products));
    r.set("rank", json!(cert.rank));
    r.set("dim_a", json!(cert.dim_a));
    r.check("A is free over B on the candidates", cert.passed);
    Ok(r)
}

pub fn thm3(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let rep = bar_model_consistency(p.pair()?, c.window);
    let mut r = start("thm3", c, &p);
    r.line(dims_line("fiber dims", &rep.fiber_dims));
    r.set("fiber_dims", list(&rep.fiber_dims));
    r.set("via_a", json!(rep.via_a));
    r.set("via_b", json!(rep.via_b));
    r.check("identical complexes", rep.passed());
    Ok(r)
}

pub fn triangle(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let t = structure_triangle(p.pair()?, &options(c))?;
    let mut r = start("triangle", c, &p);
    r.line(dims_line("Hk^n", &t.hecke_dims));
    r.line(dims_line("Ext_A^n(A⊗_B K,A⊗_B K)", &t.ext_a_dims));
    r.line(dims_line("Ext_B^n(K,A⊗_B K)", &t.ext_b_dims));
    r.line(dims_line("Tor^B_n(A,K)", &t.tor.dims));
    r.set("hecke", list(&t.hecke_dims));
    r.set("ext_a", list(&t.ext_a_dims));
    r.set("ext_b", list(&t.ext_b_dims));
    r.set("tor", list(&t.tor.dims));
    r.set("tor_vanishes", json!(t.tor.vanishes));
    if t.tor.vanishes {
        r.check("dimensions agree", t.dims_agree());
        r.check("negative degrees vanish", t.negative_vanish);
        if let Some(h) = &t.hk0 {
            r.check("Hk^0 matches the invariants algebra", h.passed());
        }
    } else {
        r.line("Tor^B_n(A,K) does not vanish; the comparison does not apply");
    }
    let unstable: Vec<i64> = t
        .hecke
        .stability
        .iter()
        .filter(|(_, s)| !**s)
        .map(|(n, _)| *n)
        .collect();
    r.unstable |= !unstable.is_empty();
    r.set("unstable", json!(unstable));
    Ok(r)
}

fn left_module(p: &Problem, name: &str) -> Result<LeftModule, CliError> {
    match p.module(name)? {
        (Side::Left, m) => Ok(m.clone()),
        (Side::Right, _) => Err(CliError::Usage(format!(
            "module {name:?} is a right module; a left module is needed"
        ))),
    }
}

pub fn reduce(a: &ModuleArgs) -> Result<Report, CliError> {
    let c = &a.common;
    let p = load(c)?;
    let b = p.pair()?;
    let (side, m) = p.module(&a.module)?.clone();
    let mut r = start("reduce", c, &p);
    r.set("module", json!(a.module));
    match side {
        Side::Left => {
            let h = module_cohomology(b, &m, c.window)?;
            let inv = invariants(&m, b);
            r.line(dims_line(&format!("H^n({})", a.module), &h.dims()));
            r.line(format!("dim V^B: {}", inv.dim()));
            r.set("cohomology", list(&h.dims()));
            r.set("invariants", json!(inv.dim()));
            r.check(
                "H^0 equals V^B",
                h.groups.get(&0).is_some_and(|g| g.cycles == inv),
            );
            let opts = HeckeOptions {
                min_degree: 0,
                max_degree: 0,
                ..options(c)
            };
            let hk = hecke_algebra(&resolution(c, &p)?, &opts)?;
            let u = universal_reduction_check(b, &m, &hk.end, &hk.table.representatives[&0])?;
            r.line(format!(
                "Hk^0 operators: {} (rank {}), observables rank {}",
                u.hecke_operators, u.hecke_rank, u.observable_rank
            ));
            r.set(
                "universal_reduction",
                json!({
                    "hecke_operators": u.hecke_operators,
                    "hecke_rank": u.hecke_rank,
                    "observable_rank": u.observable_rank,
                    "contained": u.contained,
                }),
            );
            r.check("Hk^0 acts on V^B through observables", u.passed());
        }
        Side::Right => {
            let h = module_homology(b, &m, c.window)?;
            r.line(dims_line(&format!("H_n({})", a.module), &h.dims()));
            r.set("homology", list(&h.dims()));
        }
    }
    Ok(r)
}

pub fn act(
    a: &ModuleArgs,
    hk_degree: i64,
    hk_class: usize,
    degree: usize,
    class: usize,
) -> Result<Report, CliError> {
    let c = &a.common;
    let p = load(c)?;
    let (side, m) = p.module(&a.module)?.clone();
    let opts = HeckeOptions {
        min_degree: hk_degree.min(0),
        max_degree: hk_degree.max(0),
        ..options(c)
    };
    let hk = hecke_algebra(&resolution(c, &p)?, &opts)?;
    let f = hk
        .table
        .representatives
        .get(&hk_degree)
        .and_then(|reps| reps.get(hk_class))
        .cloned()
        .ok_or_else(|| CliError::Usage(format!("Hk^{hk_degree} has no class {hk_class}")))?;
    let source = hk.end.source().clone();
    let pick = |reps: &[SparseVec], what: &str| {
        reps.get(class)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("{what} has no class {class}")))
    };
    let mut r = start("act", c, &p);
    r.set("module", json!(a.module));
    r.set("hk", json!([hk_degree, hk_class]));
    let (outcome, prefix) = match side {
        Side::Left => {
            let h = ModuleCohomology::new(source, m)?;
            let phi = pick(
                h.groups
                    .get(&degree)
                    .map(|g| g.quotient.representatives())
                    .unwrap_or(&[]),
                &format!("H^{degree}"),
            )?;
            (
                act_on_cohomology(&h, degree, &phi, &hk.end, hk_degree, &f)?,
                "v",
            )
        }
        Side::Right => {
            let h = ModuleHomology::new(source, m)?;
            let z = pick(
                h.groups
                    .get(&degree)
                    .map(|g| g.quotient.representatives())
                    .unwrap_or(&[]),
                &format!("H_{degree}"),
            )?;
            (
                act_on_homology(&h, &hk.end, hk_degree, &f, degree, &z)?,
                "w",
            )
        }
    };
    let verb = if side == Side::Left {
        "[v] . [h]"
    } else {
        "[h] . [w]"
    };
    r.line(format!(
        "{verb} with h = {} and class {} in degree {degree}: {}",
        report::class_name("h", hk_degree, hk_class),
        class,
        format_class(prefix, outcome.degree, &outcome.class)
    ));
    r.line(format!("result degree: {}", outcome.degree));
    r.set("degree", json!(outcome.degree));
    r.set("class", vector(&outcome.class));
    r.check(
        "independent of representatives",
        outcome.representative_independent,
    );
    Ok(r)
}

pub fn observables(a: &ModuleArgs) -> Result<Report, CliError> {
    let c = &a.common;
    let p = load(c)?;
    let b = p.pair()?;
    let v = left_module(&p, &a.module)?;
    let obs = dirac_observables(b, &v);
    let mut r = start("observables", c, &p);
    let basis: Vec<String> = obs
        .subspace
        .basis()
        .iter()
        .map(|x| p.algebra.format_element(x))
        .collect();
    r.line(format!("dim V^B: {}", obs.invariants.dim()));
    r.line(format!(
        "observables (dim {}): {}",
        obs.subspace.dim(),
        basis.join(", ")
    ));
    r.set("module", json!(a.module));
    r.set("invariants", json!(obs.invariants.dim()));
    r.set("observables", json!(basis));
    r.check("closed under multiplication", obs.closed);
    Ok(r)
}

pub fn brst(c: &Common) -> Result<Report, CliError> {
    let p = load(c)?;
    let act = p.lie_action()?;
    let el = brst_element(act)?;
    let complex = build_brst_complex(act)?;
    let mut r = start("brst", c, &p);
    r.line(format!("D = {}", el.d));
    r.set("element", json!(el.d.to_string()));
    match (&el.lambda, el.normalization_ratio()) {
        (Some(l), Some(ratio)) => {
            r.line(format!(
                "bracket coefficient: {} (literal {}, ratio {})",
                format_scalar(l),
                format_scalar(&el.literal_coefficient),
                format_scalar(&ratio)
            ));
            r.set("bracket_coefficient", json!(format_scalar(l)));
            r.set("normalization_ratio", json!(format_scalar(&ratio)));
        }
        _ => r.line("bracket coefficient: none (abelian action)"),
    }
    let degrees = complex.degrees();
    let groups = cohomology_groups(&complex, &degrees).map_err(BrstError::from)?;
    let x = Arc::new(ce_complex(act)?);
    let top = x.top();
    let end = build_end_complex(x, top).map_err(BrstError::from)?;
    let end_groups = cohomology_groups(&end, &degrees).map_err(BrstError::from)?;
    let dims: Vec<(i64, usize, usize, usize)> = degrees
        .iter()
        .map(|n| {
            (
                *n,
                complex.degree_dim(*n).unwrap_or(0),
                groups[n].dim(),
                end_groups[n].dim(),
            )
        })
        .collect();
    for (n, d, h, e) in &dims {
        r.line(format!(
            "degree {n}: dim {d}, H^{n} = {h} (End complex: {e})"
        ));
    }
    r.set(
        "dims",
        json!(dims
            .iter()
            .map(|(n, d, _, _)| (n.to_string(), json!(d)))
            .collect::<serde_json::Map<_, _>>()),
    );
    r.set(
        "cohomology",
        json!(dims
            .iter()
            .map(|(n, _, h, _)| (n.to_string(), json!(h)))
            .collect::<serde_json::Map<_, _>>()),
    );
    r.set(
        "end_cohomology",
        json!(dims
            .iter()
            .map(|(n, _, _, e)| (n.to_string(), json!(e)))
            .collect::<serde_json::Map<_, _>>()),
    );
    r.check("operator of D equals the CE differential", el.matches_ce);
    r.check("d^2 = 0", complex.find_d_squared_failure().is_none());
    r.check("superderivation", complex.find_leibniz_failure().is_none());
    let iso = brst_isomorphism_check(act)?;
    r.check("isomorphism with the End complex", iso.passed());
    if let Some(f) = &iso.first_failure {
        r.line(format!("first failure: {f}"));
        r.set("first_failure", json!(f));
    }
    r.check(
        "cohomology dims match the End complex",
        dims.iter().all(|(_, _, h, e)| h == e),
    );
    Ok(r)
}
