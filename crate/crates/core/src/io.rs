//! Problem and moment-map file formats (JSON, or TOML by extension).
//!
//! Indices in files are zero-based. Rationals are strings such as `"-3/4"`.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::derham::{Poly, PolyForm, PolyVectorField};
use crate::error::{Error, Result};
use crate::kernel::{ext_basis, format_rational, parse_rational, ExtIndex, Matrix, Rational};
use crate::lie::Cochain;
use crate::momentmap::MomentMapCandidate;

pub(crate) fn ser_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

pub(crate) fn ser_vec_vec<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = v.iter().map(|r| r.iter().map(format_rational).collect()).collect();
    s.collect_seq(rows)
}

pub(crate) fn ser_opt_vec<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_vec(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub lie_algebra: LieAlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle_c: Option<Vec<VectorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega3_direct: Option<Vec<ScalarEntry>>,
    /// Whether `H¹(M) = 0` may be assumed for a directly given `ω_3p`.
    #[serde(default)]
    pub assume_h1_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometrySpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    /// `[i, j, k, "v"]`: the `e_k` coefficient of `[e_i, e_j]` is `v`.
    /// Only `i < j` need be listed; `[e_j, e_i]` follows by antisymmetry.
    #[serde(default)]
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    pub dim: usize,
    /// One `dim × dim` matrix per basis element of `g`, as rows.
    pub matrices: Vec<Vec<Vec<String>>>,
}

/// A value of a vector-valued 3-cochain on a basis triple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorEntry {
    pub indices: Vec<usize>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarEntry {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySpec {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<String>>,
    pub point_p: Vec<String>,
    #[serde(alias = "omega_coefficients")]
    pub omega: Vec<FormTerm>,
    /// One vector field per basis element of `g`, as `n` polynomials.
    pub action_fields: Vec<Vec<PolySpec>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

pub type PolySpec = Vec<TermSpec>;

/// `polynomial · dx^{indices}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTerm {
    pub indices: Vec<usize>,
    pub polynomial: PolySpec,
}

/// `mu2[i]` lists `μ₂(e_i, e_j)` for `j = i+1, …, dim - 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentMapFile {
    pub mu1_g: Vec<Vec<FormTerm>>,
    pub mu1_h: Vec<PolySpec>,
    pub mu2: Vec<Vec<PolySpec>>,
}

/// Deserialize JSON or TOML (chosen by the `.toml` extension) with the
/// failing field path in the error.
pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    let ctx = path.display().to_string();
    parse_str(&text, path.extension().is_some_and(|e| e == "toml"), &ctx)
}

pub fn parse_str<T: DeserializeOwned>(text: &str, toml_syntax: bool, ctx: &str) -> Result<T> {
    if toml_syntax {
        let de = toml::Deserializer::parse(text).map_err(|e| Error::parse(ctx, e.to_string()))?;
        serde_path_to_error::deserialize(de).map_err(|e| Error::parse(format!("{ctx} at {}", e.path()), e.inner().to_string()))
    } else {
        let mut de = serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(&mut de).map_err(|e| Error::parse(format!("{ctx} at {}", e.path()), e.inner().to_string()))
    }
}

fn rat(s: &str, ctx: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| Error::parse(ctx, format!("not a rational: {s:?}")))
}

fn rats(v: &[String], ctx: &str) -> Result<Vec<Rational>> {
    v.iter().enumerate().map(|(i, s)| rat(s, &format!("{ctx}[{i}]"))).collect()
}

fn check_len(ctx: &str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::parse(ctx, format!("expected {expected} entries, got {got}")))
    }
}

impl LieAlgebraSpec {
    pub fn names(&self) -> Vec<String> {
        self.basis_names.clone().unwrap_or_else(|| (1..=self.dim).map(|i| format!("e{i}")).collect())
    }

    /// Dense structure constants `sc[i][j][k]`, antisymmetrised from the
    /// listed `i < j` entries. Listing both orders is accepted as long as
    /// they agree; the Lie algebra constructor re-checks antisymmetry.
    pub fn dense(&self) -> Result<Vec<Vec<Vec<Rational>>>> {
        let n = self.dim;
        if let Some(names) = &self.basis_names {
            check_len("lie_algebra.basis_names", n, names.len())?;
        }
        let zero = Rational::from_integer(0.into());
        let mut sc = vec![vec![vec![zero.clone(); n]; n]; n];
        let mut set = vec![vec![vec![false; n]; n]; n];
        for (pos, (i, j, k, v)) in self.structure_constants.iter().enumerate() {
            let ctx = format!("lie_algebra.structure_constants[{pos}]");
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::parse(ctx, format!("index out of range for dim {n}")));
            }
            let v = rat(v, &ctx)?;
            if set[*i][*j][*k] {
                return Err(Error::parse(ctx, "entry listed twice"));
            }
            set[*i][*j][*k] = true;
            sc[*i][*j][*k] = v.clone();
            if !set[*j][*i][*k] {
                sc[*j][*i][*k] = -v;
            }
        }
        Ok(sc)
    }
}

impl RepresentationSpec {
    pub fn matrices(&self, dim_g: usize) -> Result<Vec<Matrix>> {
        check_len("representation.matrices", dim_g, self.matrices.len())?;
        self.matrices
            .iter()
            .enumerate()
            .map(|(a, rows)| {
                let ctx = format!("representation.matrices[{a}]");
                check_len(&ctx, self.dim, rows.len())?;
                let rows = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        let c = format!("{ctx}[{r}]");
                        check_len(&c, self.dim, row.len())?;
                        rats(row, &c)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(rows)
            })
            .collect()
    }
}

/// Signed sorted triple, or an error for repeated or out-of-range indices.
fn triple(indices: &[usize], dim: usize, ctx: &str) -> Result<(i64, ExtIndex)> {
    check_len(&format!("{ctx}.indices"), 3, indices.len())?;
    if indices.iter().any(|&i| i >= dim) {
        return Err(Error::parse(ctx, format!("index out of range for dim {dim}")));
    }
    ExtIndex::from_unsorted(indices).ok_or_else(|| Error::parse(ctx, "repeated index in a 3-cochain entry"))
}

/// `V`-valued 3-cochain from entries; unlisted triples are zero.
pub fn vector_cochain(entries: &[VectorEntry], dim_g: usize, dim_v: usize, field: &str) -> Result<Cochain> {
    let mut c = Cochain::zero(dim_g, dim_v, 3);
    let mut seen = std::collections::BTreeSet::new();
    for (pos, e) in entries.iter().enumerate() {
        let ctx = format!("{field}[{pos}]");
        let (s, idx) = triple(&e.indices, dim_g, &ctx)?;
        if !seen.insert(idx.clone()) {
            return Err(Error::parse(ctx, "triple listed twice"));
        }
        check_len(&format!("{ctx}.value"), dim_v, e.value.len())?;
        let v = rats(&e.value, &format!("{ctx}.value"))?;
        c.set(&idx, v.into_iter().map(|x| x * Rational::from_integer(s.into())).collect());
    }
    Ok(c)
}

pub fn scalar_cochain(entries: &[ScalarEntry], dim_g: usize, field: &str) -> Result<Cochain> {
    let v: Vec<VectorEntry> = entries.iter().map(|e| VectorEntry { indices: e.indices.clone(), value: vec![e.value.clone()] }).collect();
    vector_cochain(&v, dim_g, 1, field)
}

pub fn poly_from_spec(p: &PolySpec, n: usize, ctx: &str) -> Result<Poly> {
    let mut out = Poly::zero();
    for (pos, t) in p.iter().enumerate() {
        let c = format!("{ctx}[{pos}]");
        if t.exponents.len() > n {
            return Err(Error::parse(&c, format!("{} exponents for {n} coordinates", t.exponents.len())));
        }
        out.add_term(t.exponents.clone(), rat(&t.coefficient, &c)?);
    }
    Ok(out)
}

pub fn poly_to_spec(p: &Poly, n: usize) -> PolySpec {
    p.terms()
        .map(|(e, c)| {
            let mut e = e.clone();
            e.resize(n.max(e.len()), 0);
            TermSpec { exponents: e, coefficient: format_rational(c) }
        })
        .collect()
}

pub fn form_from_spec(terms: &[FormTerm], n: usize, ctx: &str) -> Result<PolyForm> {
    let mut out = PolyForm::zero();
    for (pos, t) in terms.iter().enumerate() {
        let c = format!("{ctx}[{pos}]");
        if t.indices.iter().any(|&i| i >= n) {
            return Err(Error::parse(&c, format!("form index out of range for n = {n}")));
        }
        let f = poly_from_spec(&t.polynomial, n, &format!("{c}.polynomial"))?;
        out = out.add(&PolyForm::basic(f, &t.indices));
    }
    Ok(out)
}

pub fn form_to_spec(f: &PolyForm, n: usize) -> Vec<FormTerm> {
    f.terms().map(|(idx, p)| FormTerm { indices: idx.as_slice().to_vec(), polynomial: poly_to_spec(p, n) }).collect()
}

pub fn point_from_spec(v: &[String], n: usize, ctx: &str) -> Result<Vec<Rational>> {
    check_len(ctx, n, v.len())?;
    rats(v, ctx)
}

pub fn fields_from_spec(g: &GeometrySpec, dim_g: usize) -> Result<Vec<PolyVectorField>> {
    check_len("geometry.action_fields", dim_g, g.action_fields.len())?;
    g.action_fields
        .iter()
        .enumerate()
        .map(|(i, comps)| {
            let ctx = format!("geometry.action_fields[{i}]");
            check_len(&ctx, g.n, comps.len())?;
            let comps = comps.iter().enumerate().map(|(k, p)| poly_from_spec(p, g.n, &format!("{ctx}[{k}]"))).collect::<Result<_>>()?;
            Ok(PolyVectorField::new(comps))
        })
        .collect()
}

impl MomentMapFile {
    pub fn from_candidate(mu: &MomentMapCandidate, n: usize) -> Self {
        let dim = mu.dim_g();
        MomentMapFile {
            mu1_g: mu.mu1_g.iter().map(|a| form_to_spec(a, n)).collect(),
            mu1_h: mu.mu1_h.iter().map(|p| poly_to_spec(p, n)).collect(),
            mu2: (0..dim).map(|i| (i + 1..dim).map(|j| poly_to_spec(&mu.mu2(i, j), n)).collect()).collect(),
        }
    }

    pub fn to_candidate(&self, dim_g: usize, dim_h: usize, n: usize) -> Result<MomentMapCandidate> {
        check_len("mu1_g", dim_g, self.mu1_g.len())?;
        check_len("mu1_h", dim_h, self.mu1_h.len())?;
        check_len("mu2", dim_g, self.mu2.len())?;
        let mu1_g = self.mu1_g.iter().enumerate().map(|(i, t)| form_from_spec(t, n, &format!("mu1_g[{i}]"))).collect::<Result<_>>()?;
        let mu1_h = self.mu1_h.iter().enumerate().map(|(a, p)| poly_from_spec(p, n, &format!("mu1_h[{a}]"))).collect::<Result<_>>()?;
        let mut mu2 = Vec::with_capacity(ext_basis(dim_g, 2).len());
        for (i, row) in self.mu2.iter().enumerate() {
            check_len(&format!("mu2[{i}]"), dim_g - i - 1, row.len())?;
            for (off, p) in row.iter().enumerate() {
                mu2.push(poly_from_spec(p, n, &format!("mu2[{i}][{off}]"))?);
            }
        }
        MomentMapCandidate::new(dim_g, mu1_g, mu1_h, mu2).map_err(|e| Error::parse("moment map", e.to_string()))
    }
}

/// A moment map given on its own or embedded under `moment_map` in a report.
#[derive(Deserialize)]
#[serde(untagged)]
enum MomentMapDoc {
    Bare(MomentMapFile),
    Report { moment_map: MomentMapFile },
}

pub fn load_moment_map(path: &Path) -> Result<MomentMapFile> {
    let text = std::fs::read_to_string(path)?;
    let ctx = path.display().to_string();
    let toml_syntax = path.extension().is_some_and(|e| e == "toml");
    // try the strict schema first so field errors carry a path
    match parse_str::<MomentMapFile>(&text, toml_syntax, &ctx) {
        Ok(m) => Ok(m),
        Err(strict) => match parse_str::<MomentMapDoc>(&text, toml_syntax, &ctx) {
            Ok(MomentMapDoc::Bare(m)) | Ok(MomentMapDoc::Report { moment_map: m }) => Ok(m),
            Err(_) => Err(strict),
        },
    }
}
