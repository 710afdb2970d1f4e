//! Invariant suite run by `magogkit verify`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bijection::{fpl_to_vertex, vertex_to_fpl};
use crate::class::{Family, ObjectClass, Representation};
use crate::enumerate::{
    count_formula, count_matrices, enumerate_class, enumerate_magog, max_minus_ones, observed_max_minus_ones,
};
use crate::error::{Error, Result};
use crate::io::json::{parse, render_json};
use crate::matrix::{permutation_avoids_132, MatrixKind};
use crate::object::{convert, Object};

/// Largest order accepted by [`verify`].
pub const MAX_VERIFY_ORDER: usize = 7;
/// Orders up to which the bijection round trips are checked.
pub const ROUNDTRIP_ORDER: usize = 5;
/// Orders up to which classes are enumerated independently and compared.
pub const DIRECT_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, n: usize, passed: bool, detail: impl Into<String>) -> Self {
        Check { name, n, passed, detail: detail.into() }
    }
}

pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

fn canonical_set(xs: &[Object]) -> BTreeSet<String> {
    xs.iter().map(render_json).collect()
}

fn count_check(n: usize, kind: MatrixKind, name: &'static str) -> Result<Check> {
    let observed = count_matrices(n, kind)?;
    let expected = count_formula(n);
    Ok(Check::new(name, n, observed == expected, format!("observed {observed}, formula {expected}")))
}

fn catalan_check(n: usize) -> Result<Check> {
    let perms: Vec<Vec<usize>> = enumerate_magog(n)?.iter().filter_map(|m| m.matrix().permutation()).collect();
    let all_avoid = perms.iter().all(|p| permutation_avoids_132(p));
    let expected = catalan(n);
    let passed = all_avoid && BigUint::from(perms.len()) == expected;
    Ok(Check::new(
        "catalan",
        n,
        passed,
        format!("{} permutation matrices, Catalan {expected}, all 132-avoiding: {all_avoid}", perms.len()),
    ))
}

fn minus_ones_check(n: usize) -> Result<Check> {
    let observed = observed_max_minus_ones(n)?;
    let expected = max_minus_ones(n);
    Ok(Check::new("max-minus-ones", n, observed == expected, format!("observed {observed}, formula {expected}")))
}

fn roundtrip_check(n: usize) -> Result<Check> {
    let mut failures = 0usize;
    let mut total = 0usize;
    for m in enumerate_magog(n)? {
        let x = Object::Matrix(m);
        for r in Representation::ALL {
            total += 1;
            let back = convert(&x, r).and_then(|y| convert(&y, Representation::Matrix));
            if !matches!(back, Ok(ref y) if *y == x) {
                failures += 1;
            }
        }
    }
    Ok(Check::new("roundtrip", n, failures == 0, format!("{failures} failures in {total} round trips")))
}

fn direct_check(n: usize, family: Family) -> Result<Vec<Check>> {
    let matrices: Vec<Object> =
        enumerate_class(n, ObjectClass::new(Representation::Matrix, family))?;
    let mut out = Vec::new();
    for r in Representation::ALL {
        let class = ObjectClass::new(r, family);
        let direct = enumerate_class(n, class)?;
        let image = matrices.iter().map(|x| convert(x, r)).collect::<Result<Vec<_>>>()?;
        let (a, b) = (canonical_set(&direct), canonical_set(&image));
        let passed = direct.len() == matrices.len() && a.len() == direct.len() && a == b;
        out.push(Check::new(
            match family {
                Family::Magog => "direct-magog",
                Family::Asm => "direct-asm",
            },
            n,
            passed,
            format!("{class}: {} direct, {} via bijection, sets equal: {}", direct.len(), image.len(), a == b),
        ));
    }
    Ok(out)
}

fn ice_check(n: usize) -> Result<Check> {
    let fpls = enumerate_class(n, ObjectClass::new(Representation::Fpl, Family::Asm))?;
    let ice = enumerate_class(n, ObjectClass::new(Representation::VertexModel, Family::Asm))?;
    let mut image = Vec::new();
    let mut inverse_ok = true;
    for f in &fpls {
        let Object::Fpl(f) = f else { return Err(Error::Internal("expected an FPL".into())) };
        let v = fpl_to_vertex(f)?;
        inverse_ok &= vertex_to_fpl(&v)? == *f;
        image.push(Object::Vertex(v));
    }
    let image = canonical_set(&image);
    let passed = inverse_ok && image.len() == fpls.len() && image == canonical_set(&ice);
    Ok(Check::new(
        "asm-ice",
        n,
        passed,
        format!("{} FPLs, {} ice states, distinct images {}, inverse ok: {inverse_ok}", fpls.len(), ice.len(), image.len()),
    ))
}

fn serialization_check(n: usize) -> Result<Check> {
    let mut failures = 0usize;
    let mut total = 0usize;
    for class in ObjectClass::all() {
        for x in enumerate_class(n, class)? {
            total += 1;
            let s = render_json(&x);
            match parse(&s) {
                Ok(y) if y == x && render_json(&y) == s => {}
                _ => failures += 1,
            }
        }
    }
    Ok(Check::new("serialization", n, failures == 0, format!("{failures} failures in {total} documents")))
}

/// Runs every check for orders `1..=max_n`.
pub fn verify(max_n: usize) -> Result<Vec<Check>> {
    if max_n < 1 {
        return Err(Error::Range(format!("max order must be at least 1, got {max_n}")));
    }
    if max_n > MAX_VERIFY_ORDER {
        return Err(Error::ResourceLimit(format!("verify is limited to max-n <= {MAX_VERIFY_ORDER}, got {max_n}")));
    }
    let mut checks = Vec::new();
    for n in 1..=max_n {
        checks.push(count_check(n, MatrixKind::Magog, "magog-count")?);
        checks.push(count_check(n, MatrixKind::Asm, "asm-count")?);
        checks.push(catalan_check(n)?);
        checks.push(minus_ones_check(n)?);
        if n <= ROUNDTRIP_ORDER {
            checks.push(roundtrip_check(n)?);
        }
        if n <= DIRECT_ORDER {
            checks.extend(direct_check(n, Family::Magog)?);
            checks.extend(direct_check(n, Family::Asm)?);
            checks.push(ice_check(n)?);
            checks.push(serialization_check(n)?);
        }
    }
    Ok(checks)
}
