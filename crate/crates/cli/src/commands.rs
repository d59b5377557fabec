use std::path::{Path, PathBuf};

use clap::ValueEnum;
use dcosets::glnq::{
    conjecture_poly, count_double_cosets_gl, count_gl_young_double_cosets, count_pn_double_cosets,
    count_pn_self_inverse, count_self_inverse_gl, prime_powers, zindex_gl_young,
    zindex_perm_matrices, FieldSpec, GLCycleIndex,
};
use dcosets::kostka::{seq_a068313, seq_a178718, seq_a321652};
use dcosets::permgroup::{
    construct_polytope, cycle_index, hypercube_group, load_polytope, load_polytope_file, PermGroup,
    POLYTOPES,
};
use dcosets::symgroup::{
    count_double_cosets, count_self_inverse, zindex_cyclic, zindex_dihedral,
    zindex_hyperoctahedral, zindex_young,
};
use dcosets::typeb::{b_count_double_cosets, b_count_self_inverse, ParabolicSubset};
use dcosets::{Partition, PartitionVector};

use crate::report::Report;
use crate::CliError;

pub const DATASET_DIR_ENV: &str = "DCOSETS_DATASET_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Cyclic,
    Dihedral,
    Hypercube,
    Polytopes,
    KostkaSeqs,
    PermMatrices,
}

impl Table {
    fn name(self) -> &'static str {
        match self {
            Table::Cyclic => "cyclic",
            Table::Dihedral => "dihedral",
            Table::Hypercube => "hypercube",
            Table::Polytopes => "polytopes",
            Table::KostkaSeqs => "kostka-seqs",
            Table::PermMatrices => "perm-matrices",
        }
    }
}

fn s(x: impl ToString) -> String {
    x.to_string()
}

fn pv_pair(z: &PartitionVector) -> Result<(String, String), CliError> {
    Ok((s(count_double_cosets(z, z)?), s(count_self_inverse(z))))
}

pub fn table(which: Table, max: Option<usize>, q: u64) -> Result<Report, CliError> {
    let pair_cols = ["n", "double_cosets", "self_inverse"];
    let mut report;
    match which {
        Table::Cyclic | Table::Dihedral => {
            let (lo, top) = if which == Table::Cyclic {
                (2, 12)
            } else {
                (3, 12)
            };
            report = Report::new(format!("table {}", which.name()), &pair_cols);
            for n in lo..=max.unwrap_or(top) {
                let z = if which == Table::Cyclic {
                    zindex_cyclic(n)?
                } else {
                    zindex_dihedral(n)?
                };
                let (c, t) = pv_pair(&z)?;
                report.row(vec![s(n), c, t]);
            }
        }
        Table::Hypercube => {
            report = Report::new("table hypercube", &pair_cols);
            for n in 1..=max.unwrap_or(5) {
                let (c, t) = pv_pair(&cycle_index(&hypercube_group(n)?)?)?;
                report.row(vec![s(n), c, t]);
            }
        }
        Table::Polytopes => {
            report = Report::new(
                "table polytopes",
                &["polytope", "vertices", "double_cosets", "self_inverse"],
            );
            for (name, _, _) in POLYTOPES {
                eprintln!("{name}...");
                let g = polytope(name)?;
                let (c, t) = pv_pair(&cycle_index(&g)?)?;
                report.row(vec![s(name), s(g.degree()), c, t]);
            }
        }
        Table::KostkaSeqs => {
            report = Report::new("table kostka-seqs", &["n", "A321652", "A178718", "A068313"]);
            for n in 1..=max.unwrap_or(10) {
                report.row(vec![
                    s(n),
                    s(seq_a321652(n)),
                    s(seq_a178718(n)),
                    s(seq_a068313(n)),
                ]);
            }
        }
        Table::PermMatrices => {
            let field = FieldSpec::new(q)?;
            report = Report::new("table perm-matrices", &pair_cols).param("q", q);
            for n in 1..=max.unwrap_or(9) {
                report.row(vec![
                    s(n),
                    s(count_pn_double_cosets(n, &field)),
                    s(count_pn_self_inverse(n, &field)),
                ]);
            }
        }
    }
    Ok(report)
}

/// Packaged polytope, or the copy under the dataset directory when the
/// override is set.
fn polytope(name: &str) -> Result<PermGroup, CliError> {
    match std::env::var_os(DATASET_DIR_ENV) {
        Some(dir) => Ok(load_polytope_file(
            &Path::new(&dir).join(format!("{name}.json")),
        )?),
        None => Ok(load_polytope(name)?),
    }
}

/// Resolves a subgroup spec of `S_n` to its degree and cycle index.
fn subgroup(spec: &str, n: Option<usize>) -> Result<(usize, PartitionVector), CliError> {
    let need_n = || n.ok_or_else(|| CliError::Spec(format!("`{spec}` needs --n")));
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "cyclic" => {
            let n = need_n()?;
            Ok((n, zindex_cyclic(n)?))
        }
        "dihedral" => {
            let n = need_n()?;
            Ok((n, zindex_dihedral(n)?))
        }
        "young" => {
            let l: Partition = arg.parse()?;
            Ok((l.size(), zindex_young(&l)))
        }
        "hypercube" => {
            let n = need_n()?;
            if !n.is_power_of_two() || n < 2 {
                return Err(CliError::Spec(format!(
                    "the hypercube acts on 2^d points, not {n}"
                )));
            }
            Ok((
                n,
                cycle_index(&hypercube_group(n.trailing_zeros() as usize)?)?,
            ))
        }
        "hyperoct" => {
            let n = need_n()?;
            if n % 2 == 1 {
                return Err(CliError::Spec(format!(
                    "the hyperoctahedron acts on an even number of points, not {n}"
                )));
            }
            Ok((n, zindex_hyperoctahedral(n / 2)))
        }
        "polytope" => {
            let g = polytope(arg)?;
            Ok((g.degree(), cycle_index(&g)?))
        }
        "genfile" => {
            let g = load_polytope_file(&PathBuf::from(arg))?;
            Ok((g.degree(), cycle_index(&g)?))
        }
        _ => Err(CliError::Spec(format!("unknown subgroup spec `{spec}`"))),
    }
}

pub fn symmetric(n: Option<usize>, left: &str, right: Option<&str>) -> Result<Report, CliError> {
    let right = right.unwrap_or(left);
    let (dl, zl) = subgroup(left, n)?;
    let (dr, zr) = if right == left {
        (dl, zl.clone())
    } else {
        subgroup(right, n)?
    };
    if dl != dr {
        return Err(CliError::Spec(format!(
            "subgroups live in different symmetric groups ({left}: S_{dl}, {right}: S_{dr})"
        )));
    }
    if let Some(n) = n.filter(|&n| n != dl) {
        return Err(CliError::Spec(format!("{left} lives in S_{dl}, not S_{n}")));
    }
    let mut report = Report::new(
        "symmetric",
        &["n", "left", "right", "double_cosets", "self_inverse"],
    )
    .param("n", dl)
    .param("left", left)
    .param("right", right);
    let theta = if left == right {
        s(count_self_inverse(&zl))
    } else {
        String::new()
    };
    report.row(vec![
        s(dl),
        s(left),
        s(right),
        s(count_double_cosets(&zl, &zr)?),
        theta,
    ]);
    Ok(report)
}

fn index_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Spec(format!("bad index `{t}`")))
        })
        .collect()
}

pub fn typeb(n: usize, i: &str, j: Option<&str>) -> Result<Report, CliError> {
    let pi = ParabolicSubset::new(n, index_list(i)?)?;
    let pj = match j {
        Some(j) => ParabolicSubset::new(n, index_list(j)?)?,
        None => pi.clone(),
    };
    let show = |p: &ParabolicSubset| {
        p.indices()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut report = Report::new("typeb", &["n", "I", "J", "double_cosets", "self_inverse"])
        .param("n", n)
        .param("I", show(&pi))
        .param("J", show(&pj));
    let theta = if pi == pj {
        s(b_count_self_inverse(&pi))
    } else {
        String::new()
    };
    report.row(vec![
        s(n),
        show(&pi),
        show(&pj),
        s(b_count_double_cosets(&pi, &pj)?),
        theta,
    ]);
    Ok(report)
}

enum GlSpec {
    Perm,
    Young(Partition),
}

fn gl_spec(spec: &str, n: usize) -> Result<GlSpec, CliError> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let g = match kind {
        "perm" => GlSpec::Perm,
        "diag" => GlSpec::Young(Partition::column(n)),
        "young" => GlSpec::Young(arg.parse()?),
        _ => return Err(CliError::Spec(format!("unknown subgroup spec `{spec}`"))),
    };
    if let GlSpec::Young(l) = &g {
        if l.size() != n {
            return Err(CliError::Spec(format!("{l} is not a partition of {n}")));
        }
    }
    Ok(g)
}

fn gl_index(spec: &GlSpec, n: usize, field: &FieldSpec) -> GLCycleIndex {
    match spec {
        GlSpec::Perm => zindex_perm_matrices(n, field),
        GlSpec::Young(l) => zindex_gl_young(l, field),
    }
}

pub fn gl(n: usize, q: u64, left: &str, right: Option<&str>) -> Result<Report, CliError> {
    let right = right.unwrap_or(left);
    let field = FieldSpec::new(q)?;
    let (sl, sr) = (gl_spec(left, n)?, gl_spec(right, n)?);
    let count = match (&sl, &sr) {
        (GlSpec::Perm, GlSpec::Perm) => count_pn_double_cosets(n, &field),
        (GlSpec::Young(l), GlSpec::Young(m)) => count_gl_young_double_cosets(l, m, q)?,
        _ => count_double_cosets_gl(&gl_index(&sl, n, &field), &gl_index(&sr, n, &field), q)?,
    };
    let theta = if left != right {
        String::new()
    } else if let GlSpec::Perm = sl {
        s(count_pn_self_inverse(n, &field))
    } else {
        s(count_self_inverse_gl(&gl_index(&sl, n, &field), &field))
    };
    let mut report = Report::new(
        "gl",
        &["n", "q", "left", "right", "double_cosets", "self_inverse"],
    )
    .param("n", n)
    .param("q", q)
    .param("left", left)
    .param("right", right);
    report.row(vec![s(n), s(q), s(left), s(right), s(count), theta]);
    Ok(report)
}

pub fn gl_conjecture(
    n: Option<usize>,
    lambda: &str,
    mu: &str,
    points: Option<usize>,
    held_out: usize,
) -> Result<Report, CliError> {
    let (l, m): (Partition, Partition) = (lambda.parse()?, mu.parse()?);
    if l.size() != m.size() || n.is_some_and(|n| n != l.size()) {
        return Err(CliError::Spec(format!(
            "{l} and {m} must both be partitions of the same n"
        )));
    }
    let size = l.size();
    let points = points.unwrap_or((size.max(1) - 1).pow(2) + 2);
    let qs = prime_powers(points + held_out);
    let r = conjecture_poly(&l, &m, &qs[..points], &qs[points..])?;
    let mut report = Report::new("gl-conjecture", &["q", "double_cosets", "role"])
        .param("n", size)
        .param("lambda", &l)
        .param("mu", &m)
        .param("points", points)
        .param("held_out", held_out);
    for (q, v) in &r.nodes {
        report.row(vec![s(q), s(v), s("node")]);
    }
    for (q, v) in &r.held_out {
        report.row(vec![s(q), s(v), s("held-out")]);
    }
    report.summary.insert("polynomial".into(), s(&r.polynomial));
    report.summary.insert("monic".into(), s(r.monic));
    report
        .summary
        .insert("positive_coefficients".into(), s(r.positive_coefficients));
    Ok(report)
}

pub fn dataset_export(dir: &Path) -> Result<Report, CliError> {
    std::fs::create_dir_all(dir).map_err(dcosets::Error::from)?;
    let mut report = Report::new(
        "dataset export",
        &["polytope", "vertices", "generators", "path"],
    )
    .param("dir", dir.display());
    for (name, _, _) in POLYTOPES {
        let ds = construct_polytope(name)?;
        let path = dir.join(format!("{name}.json"));
        let text = serde_json::to_string(&ds).map_err(dcosets::Error::from)? + "\n";
        std::fs::write(&path, text).map_err(dcosets::Error::from)?;
        report.row(vec![
            s(name),
            s(ds.degree),
            s(ds.generators.len()),
            s(path.display()),
        ]);
    }
    Ok(report)
}
