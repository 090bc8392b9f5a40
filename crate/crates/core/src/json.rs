//! JSON encodings of domains, elements, matrices, subspaces and reports.
//!
//! Rationals are strings in lowest terms (`"3"`, `"-3/4"`), residues are
//! integers, quaternions are arrays of four rational strings. Object keys
//! come out sorted, so identical values serialize to identical bytes.

use serde_json::{json, Map, Value};

use crate::centralizer::ZSubspace;
use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::field::{parse_rational, rational_to_string, BaseField, Scalar};
use crate::oracle::{EnumerationMode, EnumerationReport, RingEntry, TheoremCheck};
use crate::scalar::{make_domain, DElem, Domain, DomainSpec};
use crate::subalgebra::{DecompositionReport, LocalFactor, SplitStep, Subalgebra};

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Parse(format!("missing key `{key}`")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err("a nonnegative integer", v))
}

fn as_bool(v: &Value) -> Result<bool> {
    v.as_bool().ok_or_else(|| parse_err("a boolean", v))
}

fn as_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err("an array", v))
}

pub fn domain_to_json(domain: &Domain) -> Value {
    serde_json::to_value(domain.spec()).expect("domain spec serializes")
}

/// Accepts the object form or a short string such as `"F2"`, `"Q"`, `"H"`.
pub fn domain_from_json(v: &Value) -> Result<Domain> {
    match v {
        Value::String(s) => s.parse(),
        _ => {
            let spec: DomainSpec = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            make_domain(&spec)
        }
    }
}

fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(r) => Value::String(rational_to_string(r)),
        Scalar::Mod(v) => json!(v),
    }
}

fn scalar_from_json(f: BaseField, v: &Value) -> Result<Scalar> {
    match (f, v) {
        (BaseField::Prime(p), Value::Number(num)) => {
            let x = num.as_i64().ok_or_else(|| parse_err("an integer residue", v))?;
            Ok(BaseField::Prime(p).from_i64(x))
        }
        (_, Value::Number(num)) => {
            let x = num.as_i64().ok_or_else(|| parse_err("an integer", v))?;
            Ok(f.from_i64(x))
        }
        (_, Value::String(s)) => {
            let r = parse_rational(s).ok_or_else(|| parse_err("a rational string", v))?;
            f.from_rational(&r).ok_or(Error::DivisionByZero)
        }
        _ => Err(parse_err("a scalar", v)),
    }
}

pub fn elem_to_json(domain: &Domain, x: &DElem) -> Value {
    match domain {
        Domain::Quaternion(_) => Value::Array(x.coords().iter().map(scalar_to_json).collect()),
        _ => scalar_to_json(&x.coords()[0]),
    }
}

pub fn elem_from_json(domain: &Domain, v: &Value) -> Result<DElem> {
    let f = domain.base_field();
    match (domain, v) {
        (Domain::Quaternion(_), Value::Array(items)) => {
            let coords: Vec<Scalar> = items.iter().map(|c| scalar_from_json(f, c)).collect::<Result<_>>()?;
            domain.element(&coords)
        }
        (Domain::Quaternion(_), _) => Ok(domain.from_scalar(scalar_from_json(f, v)?)),
        _ => domain.element(&[scalar_from_json(f, v)?]),
    }
}

fn entries_to_json(m: &DMat) -> Value {
    let d = m.domain();
    Value::Array(
        m.rows().iter().map(|row| Value::Array(row.iter().map(|x| elem_to_json(d, x)).collect())).collect(),
    )
}

fn entries_from_json(domain: &Domain, v: &Value) -> Result<DMat> {
    let rows = as_array(v)?
        .iter()
        .map(|row| as_array(row)?.iter().map(|x| elem_from_json(domain, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    DMat::from_entries(domain, &rows)
}

pub fn mat_to_json(m: &DMat) -> Value {
    json!({ "domain": domain_to_json(m.domain()), "n": m.n(), "entries": entries_to_json(m) })
}

/// Reads either a full matrix object or a bare `entries` array over
/// `domain`. A full object must agree with `domain` when one is given.
pub fn mat_from_json(v: &Value, domain: Option<&Domain>) -> Result<DMat> {
    match v {
        Value::Array(_) => {
            let d = domain.ok_or_else(|| Error::Parse("bare matrix entries need a domain".into()))?;
            entries_from_json(d, v)
        }
        Value::Object(_) => {
            let own = domain_from_json(field(v, "domain")?)?;
            if domain.is_some_and(|d| *d != own) {
                return Err(Error::DomainMismatch);
            }
            let m = entries_from_json(&own, field(v, "entries")?)?;
            if let Some(n) = v.get("n") {
                if as_usize(n)? != m.n() {
                    return Err(Error::ShapeMismatch(as_usize(n)?, m.n()));
                }
            }
            Ok(m)
        }
        _ => Err(parse_err("a matrix", v)),
    }
}

pub fn subspace_to_json(s: &ZSubspace) -> Value {
    json!({
        "domain": domain_to_json(s.domain()),
        "n": s.n(),
        "dimZ": s.dim_z(),
        "basis": s.basis().iter().map(entries_to_json).collect::<Vec<_>>(),
    })
}

pub fn subspace_from_json(v: &Value) -> Result<ZSubspace> {
    let domain = domain_from_json(field(v, "domain")?)?;
    let n = as_usize(field(v, "n")?)?;
    let mut out = ZSubspace::zero(&domain, n);
    for b in as_array(field(v, "basis")?)? {
        let m = entries_from_json(&domain, b)?;
        if m.n() != n {
            return Err(Error::ShapeMismatch(m.n(), n));
        }
        out.insert(&m);
    }
    Ok(out)
}

fn factor_to_json(f: &LocalFactor) -> Value {
    json!({
        "idempotent": mat_to_json(&f.idempotent),
        "dimZ": f.dim_z(),
        "nilDimZ": f.nilradical_basis.dim_z(),
        "blockRange": [f.block_range.start, f.block_range.end],
        "residueFieldDimZ": f.residue_field_dim_z,
        "factorBasis": subspace_to_json(&f.factor_basis),
        "nilradicalBasis": subspace_to_json(&f.nilradical_basis),
    })
}

fn factor_from_json(v: &Value) -> Result<LocalFactor> {
    let range = as_array(field(v, "blockRange")?)?;
    if range.len() != 2 {
        return Err(parse_err("a [start, end] pair", field(v, "blockRange")?));
    }
    Ok(LocalFactor {
        idempotent: mat_from_json(field(v, "idempotent")?, None)?,
        block_range: as_usize(&range[0])?..as_usize(&range[1])?,
        factor_basis: subspace_from_json(field(v, "factorBasis")?)?,
        nilradical_basis: subspace_from_json(field(v, "nilradicalBasis")?)?,
        residue_field_dim_z: as_usize(field(v, "residueFieldDimZ")?)?,
    })
}

fn split_to_json(s: &SplitStep) -> Value {
    json!({
        "depth": s.depth,
        "offset": s.offset,
        "witness": mat_to_json(&s.witness),
        "rank": s.rank,
        "leftDimZ": s.left_dim_z,
        "rightDimZ": s.right_dim_z,
    })
}

fn split_from_json(v: &Value) -> Result<SplitStep> {
    Ok(SplitStep {
        depth: as_usize(field(v, "depth")?)?,
        offset: as_usize(field(v, "offset")?)?,
        witness: mat_from_json(field(v, "witness")?, None)?,
        rank: as_usize(field(v, "rank")?)?,
        left_dim_z: as_usize(field(v, "leftDimZ")?)?,
        right_dim_z: as_usize(field(v, "rightDimZ")?)?,
    })
}

fn optional_usize(v: Option<usize>) -> Value {
    v.map_or(Value::Null, |k| json!(k))
}

fn optional_usize_from(v: &Value) -> Result<Option<usize>> {
    if v.is_null() {
        Ok(None)
    } else {
        as_usize(v).map(Some)
    }
}

pub fn decomposition_to_json(r: &DecompositionReport) -> Value {
    json!({
        "factors": r.factors.iter().map(factor_to_json).collect::<Vec<_>>(),
        "factorCount": r.factor_count(),
        "jEqualsN": r.j_equals_n,
        "nilIndexAtMostN": r.nil_index_at_most_n,
        "factorCountAtMostN": r.factor_count_at_most_n,
        "reducedImpliesFields": r.reduced_implies_fields,
        "maximal": r.maximal,
        "nilradical": subspace_to_json(&r.nilradical),
        "nilIndex": optional_usize(r.nil_index),
        "basisChange": mat_to_json(&r.basis_change),
        "splits": r.splits.iter().map(split_to_json).collect::<Vec<_>>(),
    })
}

pub fn decomposition_from_json(v: &Value) -> Result<DecompositionReport> {
    let factors: Vec<LocalFactor> = as_array(field(v, "factors")?)?.iter().map(factor_from_json).collect::<Result<_>>()?;
    if as_usize(field(v, "factorCount")?)? != factors.len() {
        return Err(Error::Parse("factorCount disagrees with the factor list".into()));
    }
    Ok(DecompositionReport {
        factors,
        basis_change: mat_from_json(field(v, "basisChange")?, None)?,
        nilradical: subspace_from_json(field(v, "nilradical")?)?,
        nil_index: optional_usize_from(field(v, "nilIndex")?)?,
        j_equals_n: as_bool(field(v, "jEqualsN")?)?,
        nil_index_at_most_n: as_bool(field(v, "nilIndexAtMostN")?)?,
        factor_count_at_most_n: as_bool(field(v, "factorCountAtMostN")?)?,
        reduced_implies_fields: as_bool(field(v, "reducedImpliesFields")?)?,
        maximal: as_bool(field(v, "maximal")?)?,
        splits: as_array(field(v, "splits")?)?.iter().map(split_from_json).collect::<Result<_>>()?,
    })
}

fn ring_to_json(e: &RingEntry) -> Value {
    json!({
        "canonicalBasis": e.canonical_basis().iter().map(entries_to_json).collect::<Vec<_>>(),
        "dimZ": e.ring.dim_z(),
        "factorCount": e.check.factor_count,
        "jEqualsN": e.check.j_equals_n,
        "nilIndex": optional_usize(e.check.nil_index),
        "checks": serde_json::to_value(&e.check).expect("checks serialize"),
        "passed": e.check.passed(),
    })
}

pub fn enumeration_to_json(r: &EnumerationReport) -> Value {
    let mut obj = Map::new();
    obj.insert("p".into(), json!(r.p));
    obj.insert("n".into(), json!(r.n));
    match r.mode {
        EnumerationMode::Exhaustive => {
            obj.insert("mode".into(), json!("exhaustive"));
        }
        EnumerationMode::Sweep { max_gens } => {
            obj.insert("mode".into(), json!("sweep"));
            obj.insert("maxGens".into(), json!(max_gens));
        }
    }
    if let Some(agrees) = r.non_unital_pass_agrees {
        obj.insert("nonUnitalPassAgrees".into(), json!(agrees));
    }
    obj.insert("ringsFound".into(), json!(r.rings_found()));
    obj.insert("allTheoremChecksPassed".into(), json!(r.all_theorem_checks_passed()));
    obj.insert("perRing".into(), Value::Array(r.per_ring.iter().map(ring_to_json).collect()));
    Value::Object(obj)
}

pub fn enumeration_from_json(v: &Value) -> Result<EnumerationReport> {
    let p = as_usize(field(v, "p")?)? as u32;
    let n = as_usize(field(v, "n")?)?;
    let domain = Domain::prime(p as u64)?;
    let mode = match field(v, "mode")?.as_str() {
        Some("exhaustive") => EnumerationMode::Exhaustive,
        Some("sweep") => EnumerationMode::Sweep { max_gens: as_usize(field(v, "maxGens")?)? },
        _ => return Err(parse_err("mode exhaustive or sweep", field(v, "mode")?)),
    };
    let per_ring = as_array(field(v, "perRing")?)?
        .iter()
        .map(|e| {
            let mut space = ZSubspace::zero(&domain, n);
            for b in as_array(field(e, "canonicalBasis")?)? {
                space.insert(&entries_from_json(&domain, b)?);
            }
            let check: TheoremCheck =
                serde_json::from_value(field(e, "checks")?.clone()).map_err(|err| Error::Parse(err.to_string()))?;
            Ok(RingEntry { ring: Subalgebra::from_space(space)?, check })
        })
        .collect::<Result<_>>()?;
    Ok(EnumerationReport {
        p,
        n,
        mode,
        per_ring,
        non_unital_pass_agrees: v.get("nonUnitalPassAgrees").map(as_bool).transpose()?,
    })
}

/// Parses a generator: a matrix (object or bare entries) or a name such as
/// `"I"`, `"N"`, `"M"` (the corner unit `E_{1,n}`), `"E1,2"`, optionally
/// prefixed by a left scalar, as in `"i*N"` or `"-1/2*E2,3"`.
pub fn generator_from_json(domain: &Domain, n: usize, v: &Value) -> Result<DMat> {
    let Value::String(s) = v else {
        let m = mat_from_json(v, Some(domain))?;
        if m.n() != n {
            return Err(Error::ShapeMismatch(m.n(), n));
        }
        return Ok(m);
    };
    let (scalar, name) = match s.rsplit_once('*') {
        Some((c, name)) => (Some(parse_scalar_name(domain, c.trim())?), name.trim()),
        None => (None, s.trim()),
    };
    let m = match name {
        "I" => DMat::identity(domain, n),
        "N" => DMat::jordan_nilpotent(domain, n),
        "M" => DMat::corner(domain, n),
        _ => {
            let idx = name
                .strip_prefix('E')
                .and_then(|r| r.trim_start_matches('_').split_once(','))
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))?;
            DMat::elementary(domain, n, idx.0, idx.1)?
        }
    };
    Ok(match scalar {
        Some(c) => m.scale_left(&c),
        None => m,
    })
}

/// A scalar written as a rational, or (for quaternions) `i`, `j`, `k` with an
/// optional sign.
fn parse_scalar_name(domain: &Domain, s: &str) -> Result<DElem> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let unit = match (domain, body) {
        (Domain::Quaternion(_), "i") => Some(1),
        (Domain::Quaternion(_), "j") => Some(2),
        (Domain::Quaternion(_), "k") => Some(3),
        _ => None,
    };
    let x = match unit {
        Some(k) => domain.unit(k),
        None => {
            let r = parse_rational(body).ok_or_else(|| Error::Parse(format!("bad scalar `{s}`")))?;
            let c = domain.base_field().from_rational(&r).ok_or(Error::DivisionByZero)?;
            domain.from_scalar(c)
        }
    };
    Ok(if neg { domain.neg(&x) } else { x })
}
