//! File formats. Everything is JSON with rational coefficients written as
//! strings, "p" or "p/q", and 0-based indices. Emission is deterministic:
//! fixed field order, sparse entries in row-major order, maps sorted by
//! key. Readers reject malformed shape or coefficients with a parse error;
//! semantic validation (Jacobi, Hopf axioms, grading compatibility) stays
//! with the library types.

use crate::action::{
    ComoduleStructure, GroupBackend, GroupElement, Grading, ModuleStructure,
};
use crate::cohomology::Cochain2;
use crate::exactmat::{format_rational, parse_rational, Matrix, Rational, Subspace};
use crate::hopf::HopfAlgebra;
use crate::levi::{CheckResult, LeviDecomposition};
use crate::liealg::LieAlgebra;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse: {0}")]
    Parse(String),
}

fn parse_err<T: std::fmt::Display>(e: T) -> IoError {
    IoError::Parse(e.to_string())
}

fn rt(s: &str) -> Result<Rational, IoError> {
    parse_rational(s).map_err(parse_err)
}

fn fmt_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_vec(v: &[String]) -> Result<Vec<Rational>, IoError> {
    v.iter().map(|s| rt(s)).collect()
}

fn fmt_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| (0..m.cols).map(|j| format_rational(&m[(i, j)])).collect()).collect()
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix, IoError> {
    let data: Result<Vec<Vec<Rational>>, IoError> = rows.iter().map(|r| parse_vec(r)).collect();
    let data = data?;
    if let Some(first) = data.first() {
        let w = first.len();
        if data.iter().any(|r| r.len() != w) {
            return Err(IoError::Parse("ragged matrix rows".into()));
        }
    }
    Ok(Matrix::from_rows(data))
}

/// A sparse tensor entry: indices and a coefficient, serialized [i,j,k,"c"].
#[derive(Serialize, Deserialize)]
struct SparseEntry(usize, usize, usize, String);

fn sparse_tensor(
    n1: usize,
    n2: usize,
    n3: usize,
    at: impl Fn(usize, usize, usize) -> Rational,
) -> Vec<SparseEntry> {
    let mut out = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n3 {
                let v = at(i, j, k);
                if !v.is_zero() {
                    out.push(SparseEntry(i, j, k, format_rational(&v)));
                }
            }
        }
    }
    out
}

fn dense_tensor(
    entries: &[SparseEntry],
    n1: usize,
    n2: usize,
    n3: usize,
    what: &str,
) -> Result<Vec<Rational>, IoError> {
    let mut out = vec![Rational::zero(); n1 * n2 * n3];
    for SparseEntry(i, j, k, c) in entries {
        if *i >= n1 || *j >= n2 || *k >= n3 {
            return Err(IoError::Parse(format!("{what} index ({i},{j},{k}) out of range")));
        }
        out[(i * n2 + j) * n3 + k] = rt(c)?;
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    bracket: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    c: BTreeMap<usize, String>,
}

/// Brackets list only pairs i < j; the antisymmetric completion is implicit.
pub fn algebra_to_string(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mut bracket = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut c = BTreeMap::new();
            for (k, v) in l.bracket_basis(i, j).iter().enumerate() {
                if !v.is_zero() {
                    c.insert(k, format_rational(v));
                }
            }
            if !c.is_empty() {
                bracket.push(BracketEntry { i, j, c });
            }
        }
    }
    let file = AlgebraFile { dim: n, labels: l.labels.clone(), bracket };
    to_json(&file)
}

pub fn algebra_from_str(s: &str) -> Result<LieAlgebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(s).map_err(parse_err)?;
    let n = file.dim;
    let mut entries = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for e in &file.bracket {
        if e.i >= e.j || e.j >= n {
            return Err(IoError::Parse(format!("bracket pair ({}, {}) out of range", e.i, e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(IoError::Parse(format!("duplicate bracket pair ({}, {})", e.i, e.j)));
        }
        for (k, c) in &e.c {
            if *k >= n {
                return Err(IoError::Parse(format!("bracket component {k} out of range")));
            }
            entries.push((e.i, e.j, *k, rt(c)?));
        }
    }
    let mut l = LieAlgebra::from_pairs(n, &entries);
    if let Some(ls) = file.labels {
        if ls.len() != n {
            return Err(IoError::Parse("label count mismatch".into()));
        }
        l.labels = Some(ls);
    }
    Ok(l)
}

#[derive(Serialize, Deserialize)]
struct HopfFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    mult: Vec<SparseEntry>,
    unit: Vec<String>,
    comult: Vec<SparseEntry>,
    counit: Vec<String>,
    antipode: Vec<Vec<String>>,
}

/// mult entries (i,j,k): coefficient of e_k in e_i e_j; comult entries
/// (i,j,k): coefficient of e_j (x) e_k in Delta(e_i); antipode is dense,
/// column j the image of e_j.
pub fn hopf_to_string(h: &HopfAlgebra) -> String {
    let n = h.dim();
    let file = HopfFile {
        dim: n,
        labels: h.labels().map(|ls| ls.to_vec()),
        mult: sparse_tensor(n, n, n, |i, j, k| h.mul_at(i, j, k).clone()),
        unit: fmt_vec(h.unit_vector()),
        comult: sparse_tensor(n, n, n, |i, j, k| h.comul_at(i, j, k).clone()),
        counit: fmt_vec(h.counit_vector()),
        antipode: fmt_matrix(h.antipode_matrix()),
    };
    to_json(&file)
}

pub fn hopf_from_str(s: &str) -> Result<HopfAlgebra, IoError> {
    let file: HopfFile = serde_json::from_str(s).map_err(parse_err)?;
    let n = file.dim;
    if file.unit.len() != n || file.counit.len() != n {
        return Err(IoError::Parse("unit/counit length mismatch".into()));
    }
    let antipode = parse_matrix(&file.antipode)?;
    if antipode.rows != n || antipode.cols != n {
        return Err(IoError::Parse("antipode shape mismatch".into()));
    }
    HopfAlgebra::new(
        n,
        dense_tensor(&file.mult, n, n, n, "mult")?,
        dense_tensor(&file.comult, n, n, n, "comult")?,
        parse_vec(&file.unit)?,
        parse_vec(&file.counit)?,
        antipode,
        file.labels,
    )
    .map_err(parse_err)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum GroupRepr {
    #[serde(rename = "finite_table")]
    FiniteTable {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    #[serde(rename = "free_abelian")]
    FreeAbelian { rank: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DegreeRepr {
    Finite(usize),
    Lattice(Vec<i64>),
}

#[derive(Serialize, Deserialize)]
struct GradingFile {
    group: GroupRepr,
    degrees: Vec<DegreeRepr>,
}

fn grading_to_repr(g: &Grading) -> GradingFile {
    let group = match &g.group {
        GroupBackend::FiniteTable { table, labels } => {
            GroupRepr::FiniteTable { table: table.clone(), labels: labels.clone() }
        }
        GroupBackend::FreeAbelian { rank } => GroupRepr::FreeAbelian { rank: *rank },
    };
    let degrees = g
        .degrees
        .iter()
        .map(|d| match d {
            GroupElement::Finite(i) => DegreeRepr::Finite(*i),
            GroupElement::Lattice(v) => DegreeRepr::Lattice(v.clone()),
        })
        .collect();
    GradingFile { group, degrees }
}

fn grading_from_repr(file: GradingFile) -> Result<Grading, IoError> {
    let group = match file.group {
        GroupRepr::FiniteTable { table, labels } => {
            GroupBackend::finite(table, labels).map_err(parse_err)?
        }
        GroupRepr::FreeAbelian { rank } => GroupBackend::free_abelian(rank),
    };
    let degrees: Vec<GroupElement> = file
        .degrees
        .into_iter()
        .map(|d| match d {
            DegreeRepr::Finite(i) => GroupElement::Finite(i),
            DegreeRepr::Lattice(v) => GroupElement::Lattice(v),
        })
        .collect();
    for d in &degrees {
        if !group.contains(d) {
            return Err(IoError::Parse("degree outside the group".into()));
        }
    }
    Ok(Grading { group, degrees })
}

pub fn grading_to_string(g: &Grading) -> String {
    to_json(&grading_to_repr(g))
}

pub fn grading_from_str(s: &str) -> Result<Grading, IoError> {
    grading_from_repr(serde_json::from_str(s).map_err(parse_err)?)
}

#[derive(Serialize, Deserialize)]
struct ActionFile {
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hopf: Option<String>,
    tensor: Vec<SparseEntry>,
}

fn comodule_to_repr(c: &ComoduleStructure, hopf_ref: Option<&str>) -> ActionFile {
    let (n, hd) = (c.dim, c.hopf.dim());
    ActionFile {
        kind: "comodule".into(),
        dim: n,
        hopf: hopf_ref.map(str::to_string),
        tensor: sparse_tensor(n, n, hd, |i, j, k| c.rho_at(i, j, k).clone()),
    }
}

fn comodule_from_repr(file: ActionFile, hopf: HopfAlgebra) -> Result<ComoduleStructure, IoError> {
    if file.kind != "comodule" {
        return Err(IoError::Parse(format!("expected a comodule file, found kind {:?}", file.kind)));
    }
    let n = file.dim;
    let rho = dense_tensor(&file.tensor, n, n, hopf.dim(), "coaction")?;
    ComoduleStructure::new(hopf, n, rho).map_err(parse_err)
}

/// Coaction entries (i,j,k): rho(e_i) = sum e_j (x) h_k. The `hopf` field
/// names the Hopf file the tensor refers to; loading resolves it relative
/// to the action file unless an explicit path overrides it.
pub fn comodule_to_string(c: &ComoduleStructure, hopf_ref: Option<&str>) -> String {
    to_json(&comodule_to_repr(c, hopf_ref))
}

/// Action entries (i,j,k): h_i . e_j = sum_k c e_k.
pub fn module_to_string(m: &ModuleStructure, hopf_ref: Option<&str>) -> String {
    let (n, hd) = (m.dim, m.hopf.dim());
    let file = ActionFile {
        kind: "module".into(),
        dim: n,
        hopf: hopf_ref.map(str::to_string),
        tensor: sparse_tensor(hd, n, n, |i, j, k| m.act_at(i, j, k).clone()),
    };
    to_json(&file)
}

pub fn comodule_from_str(s: &str, hopf: HopfAlgebra) -> Result<ComoduleStructure, IoError> {
    comodule_from_repr(serde_json::from_str(s).map_err(parse_err)?, hopf)
}

pub fn module_from_str(s: &str, hopf: HopfAlgebra) -> Result<ModuleStructure, IoError> {
    let file: ActionFile = serde_json::from_str(s).map_err(parse_err)?;
    if file.kind != "module" {
        return Err(IoError::Parse(format!("expected a module file, found kind {:?}", file.kind)));
    }
    let n = file.dim;
    let act = dense_tensor(&file.tensor, hopf.dim(), n, n, "action")?;
    ModuleStructure::new(hopf, n, act).map_err(parse_err)
}

/// The Hopf file an action file refers to, if any.
pub fn action_hopf_reference(s: &str) -> Result<Option<String>, IoError> {
    let file: ActionFile = serde_json::from_str(s).map_err(parse_err)?;
    Ok(file.hopf)
}

#[derive(Serialize, Deserialize)]
struct AutomorphismFile {
    dim: usize,
    matrix: Vec<Vec<String>>,
}

/// Column j of the matrix is the image of e_j.
pub fn automorphism_to_string(phi: &Matrix) -> String {
    to_json(&AutomorphismFile { dim: phi.rows, matrix: fmt_matrix(phi) })
}

pub fn automorphism_from_str(s: &str) -> Result<Matrix, IoError> {
    let file: AutomorphismFile = serde_json::from_str(s).map_err(parse_err)?;
    let m = parse_matrix(&file.matrix)?;
    if m.rows != file.dim || m.cols != file.dim {
        return Err(IoError::Parse("automorphism shape mismatch".into()));
    }
    Ok(m)
}

/// The module side of a representation: one dense operator per algebra
/// basis element, plus the optional structure on the module space itself
/// (the algebra side travels separately).
pub struct ModuleSpace {
    pub psi: Vec<Matrix>,
    pub grading: Option<Grading>,
    pub coaction: Option<ComoduleStructure>,
}

#[derive(Serialize, Deserialize)]
struct ModuleSpaceFile {
    dim: usize,
    psi: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grading: Option<GradingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coaction: Option<ActionFile>,
}

pub fn module_space_to_string(ms: &ModuleSpace, hopf_ref: Option<&str>) -> String {
    let dim = ms.psi.first().map_or(0, |m| m.rows);
    let file = ModuleSpaceFile {
        dim,
        psi: ms.psi.iter().map(fmt_matrix).collect(),
        grading: ms.grading.as_ref().map(grading_to_repr),
        coaction: ms.coaction.as_ref().map(|c| comodule_to_repr(c, hopf_ref)),
    };
    to_json(&file)
}

pub fn module_space_from_str(s: &str, hopf: Option<HopfAlgebra>) -> Result<ModuleSpace, IoError> {
    let file: ModuleSpaceFile = serde_json::from_str(s).map_err(parse_err)?;
    let mut psi = Vec::with_capacity(file.psi.len());
    for m in &file.psi {
        let m = parse_matrix(m)?;
        if m.rows != file.dim || m.cols != file.dim {
            return Err(IoError::Parse("module operator shape mismatch".into()));
        }
        psi.push(m);
    }
    let grading = file.grading.map(grading_from_repr).transpose()?;
    let coaction = match file.coaction {
        None => None,
        Some(c) => {
            let hopf = hopf.ok_or_else(|| {
                IoError::Parse("module space carries a coaction but no Hopf algebra was supplied".into())
            })?;
            Some(comodule_from_repr(c, hopf)?)
        }
    };
    Ok(ModuleSpace { psi, grading, coaction })
}

/// The Hopf file a module-space coaction refers to, if any.
pub fn module_space_hopf_reference(s: &str) -> Result<Option<String>, IoError> {
    let file: ModuleSpaceFile = serde_json::from_str(s).map_err(parse_err)?;
    Ok(file.coaction.and_then(|c| c.hopf))
}

#[derive(Serialize, Deserialize)]
struct CochainEntry(usize, usize, Vec<String>);

#[derive(Serialize, Deserialize)]
struct CochainFile {
    algebra_dim: usize,
    module_dim: usize,
    values: Vec<CochainEntry>,
}

/// Alternating 2-cochain: entries [i, j, value] with i < j; omitted pairs
/// are zero and the antisymmetric completion is implicit.
pub fn cochain_to_string(c: &Cochain2) -> String {
    let mut values = Vec::new();
    for i in 0..c.algebra_dim {
        for j in (i + 1)..c.algebra_dim {
            let v = c.get(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                values.push(CochainEntry(i, j, fmt_vec(&v)));
            }
        }
    }
    to_json(&CochainFile { algebra_dim: c.algebra_dim, module_dim: c.module_dim, values })
}

pub fn cochain_from_str(s: &str) -> Result<Cochain2, IoError> {
    let file: CochainFile = serde_json::from_str(s).map_err(parse_err)?;
    let mut out = Cochain2::zero(file.algebra_dim, file.module_dim);
    for CochainEntry(i, j, v) in &file.values {
        if *i >= *j || *j >= file.algebra_dim {
            return Err(IoError::Parse(format!("cochain pair ({i}, {j}) out of range")));
        }
        if v.len() != file.module_dim {
            return Err(IoError::Parse("cochain value length mismatch".into()));
        }
        out.set(*i, *j, parse_vec(v)?);
    }
    Ok(out)
}

pub fn read_cochain(path: &Path) -> Result<Cochain2, IoError> {
    cochain_from_str(&read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
struct CheckRepr {
    check: String,
    pass: bool,
}

#[derive(Serialize, Deserialize)]
struct DecompositionFile {
    dim: usize,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
    #[serde(rename = "S")]
    s: Vec<Vec<String>>,
    #[serde(rename = "N")]
    n: Vec<Vec<String>>,
    #[serde(rename = "R")]
    r: Vec<Vec<String>>,
    components: Vec<Vec<Vec<String>>>,
    report: Vec<CheckRepr>,
}

fn subspace_rows(w: &Subspace) -> Vec<Vec<String>> {
    w.basis_rows().iter().map(|r| fmt_vec(r)).collect()
}

fn subspace_from_rows(ambient: usize, rows: &[Vec<String>]) -> Result<Subspace, IoError> {
    let parsed: Result<Vec<Vec<Rational>>, IoError> = rows.iter().map(|r| parse_vec(r)).collect();
    let parsed = parsed?;
    if parsed.iter().any(|r| r.len() != ambient) {
        return Err(IoError::Parse("basis row length mismatch".into()));
    }
    Ok(Subspace::from_rows(ambient, parsed))
}

pub fn decomposition_to_string(d: &LeviDecomposition) -> String {
    let file = DecompositionFile {
        dim: d.b.ambient(),
        b: subspace_rows(&d.b),
        s: subspace_rows(&d.s),
        n: subspace_rows(&d.n),
        r: subspace_rows(&d.r),
        components: d.components.iter().map(subspace_rows).collect(),
        report: d
            .report
            .iter()
            .map(|c| CheckRepr { check: c.check.clone(), pass: c.pass })
            .collect(),
    };
    to_json(&file)
}

pub fn decomposition_from_str(s: &str) -> Result<LeviDecomposition, IoError> {
    let file: DecompositionFile = serde_json::from_str(s).map_err(parse_err)?;
    let n = file.dim;
    let components: Result<Vec<Subspace>, IoError> =
        file.components.iter().map(|c| subspace_from_rows(n, c)).collect();
    Ok(LeviDecomposition {
        b: subspace_from_rows(n, &file.b)?,
        r: subspace_from_rows(n, &file.r)?,
        s: subspace_from_rows(n, &file.s)?,
        n: subspace_from_rows(n, &file.n)?,
        components: components?,
        report: file
            .report
            .into_iter()
            .map(|c| CheckResult { check: c.check, pass: c.pass })
            .collect(),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn annotate(path: &Path, e: std::io::Error) -> IoError {
    IoError::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

pub fn read_to_string(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|e| annotate(path, e))
}

pub fn write_string(path: &Path, contents: &str) -> Result<(), IoError> {
    std::fs::write(path, contents).map_err(|e| annotate(path, e))
}

pub fn read_algebra(path: &Path) -> Result<LieAlgebra, IoError> {
    algebra_from_str(&read_to_string(path)?)
}

pub fn read_hopf(path: &Path) -> Result<HopfAlgebra, IoError> {
    hopf_from_str(&read_to_string(path)?)
}

pub fn read_grading(path: &Path) -> Result<Grading, IoError> {
    grading_from_str(&read_to_string(path)?)
}

pub fn read_automorphism(path: &Path) -> Result<Matrix, IoError> {
    automorphism_from_str(&read_to_string(path)?)
}

/// Resolve the Hopf algebra an action file needs: an explicit path wins,
/// otherwise the file's own reference is read relative to its directory.
pub fn resolve_hopf(
    action_path: &Path,
    hopf_path: Option<&Path>,
    reference: Option<String>,
) -> Result<HopfAlgebra, IoError> {
    if let Some(p) = hopf_path {
        return read_hopf(p);
    }
    let Some(name) = reference else {
        return Err(IoError::Parse(format!(
            "{} names no Hopf file and none was supplied",
            action_path.display()
        )));
    };
    let base = action_path.parent().unwrap_or_else(|| Path::new("."));
    read_hopf(&base.join(name))
}

pub fn read_comodule(path: &Path, hopf_path: Option<&Path>) -> Result<ComoduleStructure, IoError> {
    let text = read_to_string(path)?;
    let hopf = resolve_hopf(path, hopf_path, action_hopf_reference(&text)?)?;
    comodule_from_str(&text, hopf)
}

pub fn read_module(path: &Path, hopf_path: Option<&Path>) -> Result<ModuleStructure, IoError> {
    let text = read_to_string(path)?;
    let hopf = resolve_hopf(path, hopf_path, action_hopf_reference(&text)?)?;
    module_from_str(&text, hopf)
}

pub fn read_module_space(path: &Path, hopf_path: Option<&Path>) -> Result<ModuleSpace, IoError> {
    let text = read_to_string(path)?;
    let hopf = match module_space_hopf_reference(&text)? {
        None => match hopf_path {
            None => None,
            Some(p) => Some(read_hopf(p)?),
        },
        Some(name) => Some(resolve_hopf(path, hopf_path, Some(name))?),
    };
    module_space_from_str(&text, hopf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::grading_to_comodule;
    use crate::levi::{full_decomposition, verify_decomposition};
    use crate::samples;

    #[test]
    fn algebra_round_trip() {
        for l in [samples::sl2(), samples::gl2(), samples::sl2_torus_plane()] {
            let text = algebra_to_string(&l);
            let back = algebra_from_str(&text).unwrap();
            assert_eq!(back, l);
            assert_eq!(algebra_to_string(&back), text, "emission must be stable");
        }
    }

    #[test]
    fn algebra_rejects_bad_entries() {
        assert!(matches!(
            algebra_from_str(r#"{"dim": 2, "bracket": [{"i": 1, "j": 1, "c": {"0": "1"}}]}"#),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            algebra_from_str(r#"{"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"5": "1"}}]}"#),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            algebra_from_str(r#"{"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"0": "x"}}]}"#),
            Err(IoError::Parse(_))
        ));
    }

    #[test]
    fn rationals_accept_both_spellings() {
        let l = algebra_from_str(
            r#"{"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"0": "-3/2", "1": "2"}}]}"#,
        )
        .unwrap();
        let br = l.bracket_basis(0, 1);
        assert_eq!(format_rational(&br[0]), "-3/2");
        assert_eq!(format_rational(&br[1]), "2");
    }

    #[test]
    fn hopf_round_trip() {
        let (h, _) = HopfAlgebra::group_algebra(&samples::s3_table(), Some(samples::s3_labels()))
            .unwrap();
        for h in [h, HopfAlgebra::sweedler4()] {
            let text = hopf_to_string(&h);
            let back = hopf_from_str(&text).unwrap();
            assert_eq!(back, h);
            back.validate().unwrap();
        }
    }

    #[test]
    fn grading_round_trip() {
        let finite = samples::s3_block_grading();
        let free = samples::sl2_z_grading();
        for g in [finite, free] {
            let text = grading_to_string(&g);
            assert_eq!(grading_from_str(&text).unwrap(), g);
        }
        assert!(matches!(
            grading_from_str(r#"{"group": {"kind": "free_abelian", "rank": 1}, "degrees": [3]}"#),
            Err(IoError::Parse(_))
        ));
    }

    #[test]
    fn action_files_round_trip() {
        let m = samples::sweedler_action();
        let text = module_to_string(&m, Some("h4.hopf"));
        assert_eq!(action_hopf_reference(&text).unwrap().as_deref(), Some("h4.hopf"));
        let back = module_from_str(&text, m.hopf.clone()).unwrap();
        assert_eq!(back, m);
        // Kind mismatch is a parse error.
        assert!(matches!(
            comodule_from_str(&text, m.hopf.clone()),
            Err(IoError::Parse(_))
        ));

        let l = samples::sl2_torus_plane();
        let g = Grading {
            group: crate::action::GroupBackend::finite(samples::cyclic_table(2), None).unwrap(),
            degrees: vec![crate::action::GroupElement::Finite(0); 6],
        };
        let c = grading_to_comodule(&l, &g).unwrap();
        let text = comodule_to_string(&c, None);
        assert_eq!(comodule_from_str(&text, c.hopf.clone()).unwrap(), c);
    }

    #[test]
    fn automorphism_round_trip() {
        let phi = samples::shear_automorphism();
        let text = automorphism_to_string(&phi);
        assert_eq!(automorphism_from_str(&text).unwrap(), phi);
    }

    #[test]
    fn module_space_round_trip() {
        let l = samples::sl2();
        let psi: Vec<Matrix> = (0..3).map(|i| l.ad_basis(i)).collect();
        let ms = ModuleSpace { psi: psi.clone(), grading: Some(Grading::trivial(3)), coaction: None };
        let text = module_space_to_string(&ms, None);
        let back = module_space_from_str(&text, None).unwrap();
        assert_eq!(back.psi, psi);
        assert_eq!(back.grading, Some(Grading::trivial(3)));
        assert!(back.coaction.is_none());
    }

    #[test]
    fn cochain_round_trip() {
        let mut c = Cochain2::zero(3, 2);
        c.set(0, 2, vec![rt("1/3").unwrap(), rt("-2").unwrap()]);
        let text = cochain_to_string(&c);
        assert_eq!(cochain_from_str(&text).unwrap(), c);
        assert!(matches!(
            cochain_from_str(r#"{"algebra_dim": 2, "module_dim": 1, "values": [[1, 1, ["1"]]]}"#),
            Err(IoError::Parse(_))
        ));
    }

    #[test]
    fn decomposition_file_reverifies() {
        let l = samples::sl2_torus_plane();
        let d = full_decomposition(&l, None).unwrap();
        let text = decomposition_to_string(&d);
        let back = decomposition_from_str(&text).unwrap();
        assert_eq!(back.b, d.b);
        assert_eq!(back.s, d.s);
        assert_eq!(back.n, d.n);
        assert_eq!(back.r, d.r);
        assert_eq!(back.components, d.components);
        assert!(verify_decomposition(&l, None, &back).iter().all(|c| c.pass));
        assert_eq!(decomposition_to_string(&back), text);
    }

    #[test]
    fn file_reads_resolve_referenced_hopf() {
        let dir = std::env::temp_dir().join(format!("levikit-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let m = samples::sweedler_action();
        write_string(&dir.join("h4.hopf"), &hopf_to_string(&m.hopf)).unwrap();
        write_string(&dir.join("sweedler.act"), &module_to_string(&m, Some("h4.hopf"))).unwrap();
        let back = read_module(&dir.join("sweedler.act"), None).unwrap();
        assert_eq!(back, m);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
