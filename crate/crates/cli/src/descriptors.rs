//! Text forms accepted on the command line besides plain element expressions.

use std::collections::BTreeMap;
use std::sync::Arc;

use lpa_core::morphisms::build_anick;
use lpa_core::{
    parse_element, AlgMatrix, Element, Field, GenMap, IrrPoly, LeavittAlgebra, Path, Poly, SfcSpec,
    SfcTwist,
};

use crate::CliError;

/// `Q`, `Fp:<prime>`.
pub fn parse_field(text: &str) -> Result<Field, CliError> {
    if text == "Q" {
        return Ok(Field::Rational);
    }
    let Some(p) = text.strip_prefix("Fp:") else {
        return Err(CliError::Parse(format!("unknown field `{text}`; use Q or Fp:<prime>")));
    };
    let p: u64 = p
        .parse()
        .map_err(|_| CliError::Parse(format!("`{p}` is not a number")))?;
    Ok(Field::prime(p)?)
}

/// `key=value` pairs after a `kind:` prefix.
fn key_values<'a>(
    text: &'a str,
    kind: &str,
    keys: &[&str],
) -> Result<BTreeMap<&'a str, &'a str>, CliError> {
    let Some(body) = text.strip_prefix(kind).and_then(|r| r.strip_prefix(':')) else {
        return Err(CliError::Parse(format!("expected `{kind}:...`, found `{text}`")));
    };
    let mut out = BTreeMap::new();
    for part in body.split(',') {
        let Some((k, v)) = part.split_once('=') else {
            return Err(CliError::Parse(format!("expected key=value, found `{part}`")));
        };
        let k = k.trim();
        if !keys.contains(&k) {
            return Err(CliError::Parse(format!("unknown key `{k}` in `{kind}:` descriptor")));
        }
        if out.insert(k, v.trim()).is_some() {
            return Err(CliError::Parse(format!("key `{k}` given twice")));
        }
    }
    Ok(out)
}

fn required<'a>(map: &BTreeMap<&str, &'a str>, key: &str) -> Result<&'a str, CliError> {
    map.get(key)
        .copied()
        .ok_or_else(|| CliError::Parse(format!("missing `{key}=`")))
}

/// A path written as a product of edges, such as `e1*e2`.
pub fn parse_path(text: &str, alg: &Arc<LeavittAlgebra>) -> Result<Path, CliError> {
    let x = parse_element(text, alg)?;
    match x.as_single_term() {
        Some((m, c)) if c.is_one() && m.ghost.is_vertex() => Ok(m.real.clone()),
        _ => Err(CliError::Domain(format!("`{text}` is not a path"))),
    }
}

pub fn parse_poly(text: &str, field: Field, assume: bool) -> Result<IrrPoly, CliError> {
    let f = Poly::parse(text, field).map_err(CliError::Parse)?;
    Ok(if assume { IrrPoly::assume(f)? } else { IrrPoly::new(f)? })
}

pub struct ModuleDesc {
    pub spec: Arc<SfcSpec>,
    pub twist: Option<SfcTwist>,
}

/// `sfc:c=<path>,f=<poly>[,twist=<expr>]`; a `--twist` flag fills in a
/// missing `twist=`.
pub fn parse_module(
    text: &str,
    alg: &Arc<LeavittAlgebra>,
    assume: bool,
    twist_flag: Option<&str>,
) -> Result<ModuleDesc, CliError> {
    let map = key_values(text, "sfc", &["c", "f", "twist"])?;
    let c = parse_path(required(&map, "c")?, alg)?;
    let f = parse_poly(required(&map, "f")?, alg.field(), assume)?;
    let spec = SfcSpec::new(alg, c, f)?;
    let twist_text = match (map.get("twist"), twist_flag) {
        (Some(_), Some(_)) => return Err(CliError::Parse("twist given twice".into())),
        (Some(t), None) => Some(*t),
        (None, t) => t,
    };
    let twist = match twist_text {
        Some(t) => Some(SfcTwist::new(&spec, &parse_element(t, alg)?)?),
        None => None,
    };
    Ok(ModuleDesc { spec, twist })
}

/// `anick:p=<expr>,e1=<name>,e2=<name>` or the path of an automorphism file.
/// A file map is returned unverified together with its relation report.
pub fn parse_hom(text: &str, alg: &Arc<LeavittAlgebra>) -> Result<GenMap, CliError> {
    if text.starts_with("anick:") {
        let map = key_values(text, "anick", &["p", "e1", "e2"])?;
        let p = parse_element(required(&map, "p")?, alg)?;
        let edge = |k: &str| -> Result<_, CliError> {
            let name = required(&map, k)?;
            alg.graph()
                .edge_id(name)
                .ok_or_else(|| CliError::Parse(format!("unknown edge `{name}`")))
        };
        let (sigma, _) = build_anick(&p, edge("e1")?, edge("e2")?)?;
        return Ok(sigma);
    }
    let body = std::fs::read_to_string(text)
        .map_err(|e| CliError::Parse(format!("cannot read `{text}`: {e}")))?;
    parse_hom_file(&body, alg)
}

/// Lines `vertex|edge|ghost <name> = <expr>`; `#` starts a comment.
pub fn parse_hom_file(body: &str, alg: &Arc<LeavittAlgebra>) -> Result<GenMap, CliError> {
    let g = alg.graph();
    let (mut vs, mut es, mut gs) = (Vec::new(), Vec::new(), Vec::new());
    for (i, raw) in body.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| CliError::Parse(format!("line {}: {msg}", i + 1));
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad("expected `<kind> <name> = <expr>`"))?;
        let words: Vec<&str> = lhs.split_whitespace().collect();
        let [kind, name] = words.as_slice() else {
            return Err(bad("expected `<kind> <name> = <expr>`"));
        };
        let image = parse_element(rhs.trim(), alg).map_err(|e| bad(&e.to_string()))?;
        match *kind {
            "vertex" => {
                let v = g.vertex_id(name).ok_or_else(|| bad(&format!("unknown vertex `{name}`")))?;
                vs.push((v, image));
            }
            "edge" | "ghost" => {
                let e = g.edge_id(name).ok_or_else(|| bad(&format!("unknown edge `{name}`")))?;
                if *kind == "edge" { es.push((e, image)) } else { gs.push((e, image)) }
            }
            other => return Err(bad(&format!("unknown generator kind `{other}`"))),
        }
    }
    Ok(GenMap::with_images(alg, vs, es, gs)?)
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_matrix(text: &str, alg: &Arc<LeavittAlgebra>) -> Result<AlgMatrix, CliError> {
    let rows = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| parse_element(x.trim(), alg).map_err(CliError::from))
                .collect::<Result<Vec<Element>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgMatrix::from_rows(rows)?)
}
