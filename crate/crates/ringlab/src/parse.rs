//! Text formats: RINGSPEC ring files plus the `nring` and `endo` sub-formats.
//!
//! RINGSPEC v1 is line oriented, UTF-8, `#` starts a comment:
//!
//! ```text
//! ring <name>
//! orders d1 d2 ... dk
//! one c1 ... ck
//! mul i j : c1 ... ck     # one line per basis pair, 1-based indices
//! end
//! ```
//!
//! Elements serialize as `(c1,...,ck)`. Serialization is canonical: parsing a
//! serialized ring and serializing again is byte-identical.

use crate::construct::{Endomorphism, NonUnitalRing};
use crate::error::{Result, RingError};
use crate::ring::FiniteRing;
use std::fmt::Write as _;

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// Next non-blank line with comments stripped, with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (n, raw) in self.iter.by_ref() {
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let line = line.trim();
            if !line.is_empty() {
                return Some((n + 1, line));
            }
        }
        None
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> RingError {
    RingError::MalformedLine {
        line,
        msg: msg.into(),
    }
}

fn parse_numbers(line: usize, parts: &[&str]) -> Result<Vec<u64>> {
    parts
        .iter()
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| malformed(line, format!("expected a number, got {p:?}")))
        })
        .collect()
}

fn expect_arity(line: usize, got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(RingError::BadArity {
            line,
            expected,
            got,
        });
    }
    Ok(())
}

/// Reads a `mul i j : c1 ... ck`-style line. Returns 1-based `(i, j)` and the
/// coordinate vector.
fn parse_indexed_row(
    line: usize,
    parts: &[&str],
    keyword: &str,
    arity: usize,
) -> Result<(usize, usize, Vec<u64>)> {
    if parts.len() < 4 || parts[3] != ":" {
        return Err(malformed(
            line,
            format!("expected `{keyword} i j : c1 ... ck`"),
        ));
    }
    let idx = parse_numbers(line, &parts[1..3])?;
    let (i, j) = (idx[0] as usize, idx[1] as usize);
    if i == 0 || j == 0 {
        return Err(malformed(line, "indices are 1-based"));
    }
    let coords = parse_numbers(line, &parts[4..])?;
    expect_arity(line, coords.len(), arity)?;
    Ok((i, j, coords))
}

/// Parses RINGSPEC text into an unvalidated ring.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    let mut lines = Lines::new(text);

    let (n, header) = lines.next().ok_or_else(|| malformed(0, "empty file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("ring") {
        return Err(malformed(n, "expected `ring <name>`"));
    }
    let name = parts
        .next()
        .ok_or_else(|| malformed(n, "missing ring name"))?
        .to_string();
    if parts.next().is_some() {
        return Err(malformed(n, "trailing tokens after ring name"));
    }

    let (n, line) = lines
        .next()
        .ok_or_else(|| malformed(0, "missing `orders` line"))?;
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts[0] != "orders" {
        return Err(malformed(n, "expected `orders d1 ... dk`"));
    }
    let orders64 = parse_numbers(n, &parts[1..])?;
    if orders64.iter().any(|&d| d == 0 || d > u32::MAX as u64) {
        return Err(malformed(n, "orders must be between 1 and 2^32-1"));
    }
    let orders: Vec<u32> = orders64.iter().map(|&d| d as u32).collect();
    let k = orders.len();

    let (n, line) = lines
        .next()
        .ok_or_else(|| malformed(0, "missing `one` line"))?;
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts[0] != "one" {
        return Err(malformed(n, "expected `one c1 ... ck`"));
    }
    let one = parse_numbers(n, &parts[1..])?;
    expect_arity(n, one.len(), k)?;

    let mut products: Vec<Option<Vec<u64>>> = vec![None; k * k];
    loop {
        let (n, line) = lines
            .next()
            .ok_or_else(|| malformed(0, "missing `end` line"))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "end" => break,
            "mul" => {
                let (i, j, coords) = parse_indexed_row(n, &parts, "mul", k)?;
                if i > k || j > k {
                    return Err(malformed(
                        n,
                        format!("basis index out of range in `mul {i} {j}`"),
                    ));
                }
                let slot = &mut products[(i - 1) * k + (j - 1)];
                if slot.is_some() {
                    return Err(RingError::DuplicateProduct { i, j, line: n });
                }
                *slot = Some(coords);
            }
            other => return Err(malformed(n, format!("unexpected keyword {other:?}"))),
        }
    }
    if let Some((n, _)) = lines.next() {
        return Err(malformed(n, "content after `end`"));
    }

    let mut table = Vec::with_capacity(k * k);
    for (pos, slot) in products.into_iter().enumerate() {
        match slot {
            Some(v) => table.push(v),
            None => {
                return Err(RingError::MissingProduct {
                    i: pos / k + 1,
                    j: pos % k + 1,
                })
            }
        }
    }
    FiniteRing::new(name, orders, one, table)
}

/// Canonical RINGSPEC serialization.
pub fn serialize_ring(ring: &FiniteRing) -> String {
    let k = ring.basis_count();
    let mut out = String::new();
    let _ = writeln!(out, "ring {}", ring.name());
    out.push_str("orders");
    for &d in ring.orders() {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
    out.push_str("one");
    for &c in ring.one().coords() {
        let _ = write!(out, " {c}");
    }
    out.push('\n');
    for i in 0..k {
        for j in 0..k {
            let _ = write!(out, "mul {} {} :", i + 1, j + 1);
            for &c in ring.basis_product(i, j).coords() {
                let _ = write!(out, " {c}");
            }
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

/// Parses the `nring` sub-format for non-unital rings with bimodule actions:
///
/// ```text
/// nring <name>
/// orders d1 ... dm
/// mul i j : c1 ... cm      # internal product on the S-basis
/// lact i j : c1 ... cm     # companion generator e_i acting on s_j
/// ract i j : c1 ... cm     # s_i acted on by companion generator e_j
/// end
/// ```
///
/// The companion ring's arity is inferred from the action tables and checked
/// against the actual ring when the extension is built.
pub fn parse_nonunital(text: &str) -> Result<NonUnitalRing> {
    let mut lines = Lines::new(text);

    let (n, header) = lines.next().ok_or_else(|| malformed(0, "empty file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("nring") {
        return Err(malformed(n, "expected `nring <name>`"));
    }
    let name = parts
        .next()
        .ok_or_else(|| malformed(n, "missing name"))?
        .to_string();

    let (n, line) = lines
        .next()
        .ok_or_else(|| malformed(0, "missing `orders` line"))?;
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts[0] != "orders" {
        return Err(malformed(n, "expected `orders d1 ... dm`"));
    }
    let orders64 = parse_numbers(n, &parts[1..])?;
    if orders64.iter().any(|&d| d == 0 || d > u32::MAX as u64) {
        return Err(malformed(n, "orders must be between 1 and 2^32-1"));
    }
    let orders: Vec<u32> = orders64.iter().map(|&d| d as u32).collect();
    let m = orders.len();

    let mut muls: Vec<(usize, usize, Vec<u64>)> = Vec::new();
    let mut lacts: Vec<(usize, usize, Vec<u64>)> = Vec::new();
    let mut racts: Vec<(usize, usize, Vec<u64>)> = Vec::new();
    loop {
        let (n, line) = lines
            .next()
            .ok_or_else(|| malformed(0, "missing `end` line"))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "end" => break,
            "mul" => muls.push(parse_indexed_row(n, &parts, "mul", m)?),
            "lact" => lacts.push(parse_indexed_row(n, &parts, "lact", m)?),
            "ract" => racts.push(parse_indexed_row(n, &parts, "ract", m)?),
            other => return Err(malformed(n, format!("unexpected keyword {other:?}"))),
        }
    }

    let companion = lacts
        .iter()
        .map(|&(i, _, _)| i)
        .chain(racts.iter().map(|&(_, j, _)| j))
        .max()
        .unwrap_or(0);

    let fill = |rows: Vec<(usize, usize, Vec<u64>)>,
                ni: usize,
                nj: usize,
                what: &str|
     -> Result<Vec<Vec<u64>>> {
        let mut table: Vec<Option<Vec<u64>>> = vec![None; ni * nj];
        for (i, j, coords) in rows {
            if i > ni || j > nj {
                return Err(malformed(
                    0,
                    format!("{what} index ({i}, {j}) out of range"),
                ));
            }
            let slot = &mut table[(i - 1) * nj + (j - 1)];
            if slot.is_some() {
                return Err(RingError::DuplicateProduct { i, j, line: 0 });
            }
            *slot = Some(coords);
        }
        table
            .into_iter()
            .enumerate()
            .map(|(pos, slot)| {
                slot.ok_or(RingError::MissingProduct {
                    i: pos / nj.max(1) + 1,
                    j: pos % nj.max(1) + 1,
                })
            })
            .collect()
    };

    let products = fill(muls, m, m, "mul")?;
    let lact = fill(lacts, companion, m, "lact")?;
    let ract = fill(racts, m, companion, "ract")?;
    NonUnitalRing::new(name, orders, products, companion, lact, ract)
}

pub fn serialize_nonunital(s: &NonUnitalRing) -> String {
    let m = s.basis_count();
    let kr = s.companion_basis_count();
    let mut out = String::new();
    let _ = writeln!(out, "nring {}", s.name());
    out.push_str("orders");
    for &d in s.orders() {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
    let row = |out: &mut String, kw: &str, i: usize, j: usize, coords: &[u32]| {
        let _ = write!(out, "{kw} {} {} :", i + 1, j + 1);
        for &c in coords {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    };
    for i in 0..m {
        for j in 0..m {
            row(&mut out, "mul", i, j, s.product(i, j));
        }
    }
    for i in 0..kr {
        for j in 0..m {
            row(&mut out, "lact", i, j, s.left_action(i, j));
        }
    }
    for i in 0..m {
        for j in 0..kr {
            row(&mut out, "ract", i, j, s.right_action(i, j));
        }
    }
    out.push_str("end\n");
    out
}

/// Parses the `endo` sub-format: one `map i : c1 ... ck` line per generator.
pub fn parse_endomorphism(text: &str) -> Result<Endomorphism> {
    let mut lines = Lines::new(text);

    let (n, header) = lines.next().ok_or_else(|| malformed(0, "empty file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("endo") {
        return Err(malformed(n, "expected `endo <name>`"));
    }
    let name = parts
        .next()
        .ok_or_else(|| malformed(n, "missing name"))?
        .to_string();

    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut arity = None;
    loop {
        let (n, line) = lines
            .next()
            .ok_or_else(|| malformed(0, "missing `end` line"))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "end" => break,
            "map" => {
                if parts.len() < 3 || parts[2] != ":" {
                    return Err(malformed(n, "expected `map i : c1 ... ck`"));
                }
                let i = parse_numbers(n, &parts[1..2])?[0] as usize;
                if i == 0 {
                    return Err(malformed(n, "indices are 1-based"));
                }
                let coords = parse_numbers(n, &parts[3..])?;
                if let Some(a) = arity {
                    expect_arity(n, coords.len(), a)?;
                } else {
                    arity = Some(coords.len());
                }
                rows.push((i, coords));
            }
            other => return Err(malformed(n, format!("unexpected keyword {other:?}"))),
        }
    }

    let k = rows.iter().map(|&(i, _)| i).max().unwrap_or(0);
    let mut images: Vec<Option<Vec<u64>>> = vec![None; k];
    for (i, coords) in rows {
        if images[i - 1].is_some() {
            return Err(RingError::DuplicateProduct { i, j: i, line: 0 });
        }
        images[i - 1] = Some(coords);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, slot)| slot.ok_or(RingError::MissingProduct { i: i + 1, j: i + 1 }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Endomorphism::new(name, images))
}

pub fn serialize_endomorphism(f: &Endomorphism) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "endo {}", f.name());
    for (i, img) in f.images().iter().enumerate() {
        let _ = write!(out, "map {} :", i + 1);
        for &c in img {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
