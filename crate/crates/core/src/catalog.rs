//! Group specifications: named families, explicit generators, and the
//! built-in catalog used by tests and the benchmark.
//!
//! Accepted forms:
//!
//! - `S<n>`, `A<n>`, `C<n>`, `D<n>`, `trivial<n>`;
//! - `n:(1 2 3)(4 5);(1 2)`: degree, then `;`-separated generators in
//!   1-based cycle notation (`()` is the identity; the `n:` prefix may be
//!   omitted when the largest point is the degree);
//! - JSON `{"degree":4,"generators":[[[1,2,3,4]]]}`: each generator a list
//!   of 1-based cycles.
//!
//! Named generators:
//!
//! | family | generators |
//! |---|---|
//! | `Sₙ` | `(1 2)`, `(1 2 … n)` |
//! | `Aₙ` | `(1 2 3)`, and `(1 2 … n)` for odd `n` or `(2 3 … n)` for even `n` |
//! | `Cₙ` | `(1 2 … n)` |
//! | `Dₙ` | `(1 2 … n)`, `i ↦ n + 1 − i` |
//! | `trivialₙ` | none |

use serde::Deserialize;

use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses a group specification and closes its generators into a group.
pub fn parse_group(text: &str) -> Result<PermGroup> {
    let (degree, generators) = parse_generators(text)?;
    PermGroup::closure(degree, generators)
}

/// Parses a group specification into its degree and generator list.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let offset = text.len() - text.trim_start().len();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(parse_error(0, "empty group specification"));
    }
    if trimmed.starts_with('{') {
        return parse_json(trimmed, offset);
    }
    if let Some(named) = parse_named(trimmed, offset)? {
        return Ok(named);
    }
    parse_cycle_text(trimmed, offset)
}

fn parse_named(text: &str, offset: usize) -> Result<Option<(usize, Vec<Permutation>)>> {
    let split = text.find(|c: char| c.is_ascii_digit()).unwrap_or(text.len());
    let (family, digits) = text.split_at(split);
    if !matches!(family, "S" | "A" | "C" | "D" | "trivial") {
        return Ok(None);
    }
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(parse_error(offset + split, format!("expected a degree after {family:?}")));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| parse_error(offset + split, "degree out of range"))?;
    if n == 0 {
        return Err(parse_error(offset + split, "degree must be at least 1"));
    }
    let cycle = |points: std::ops::Range<usize>| -> Result<Permutation> {
        Permutation::from_cycles(n, &[points.collect()])
    };
    let mut gens = Vec::new();
    match family {
        "S" => {
            if n >= 2 {
                gens.push(cycle(0..2)?);
                gens.push(cycle(0..n)?);
            }
        }
        "A" => {
            if n >= 3 {
                gens.push(cycle(0..3)?);
                gens.push(if n % 2 == 1 { cycle(0..n)? } else { cycle(1..n)? });
            }
        }
        "C" => gens.push(cycle(0..n)?),
        "D" => {
            gens.push(cycle(0..n)?);
            gens.push(Permutation::new((0..n).rev().collect())?);
        }
        _ => {}
    }
    gens.retain(|g| !g.is_identity());
    Ok(Some((n, gens)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGroup {
    degree: usize,
    generators: Vec<Vec<Vec<usize>>>,
}

fn parse_json(text: &str, offset: usize) -> Result<(usize, Vec<Permutation>)> {
    let spec: JsonGroup = serde_json::from_str(text).map_err(|e| {
        let line_start: usize = text.split_inclusive('\n').take(e.line().saturating_sub(1)).map(str::len).sum();
        parse_error(offset + line_start + e.column().saturating_sub(1), e.to_string())
    })?;
    let n = spec.degree;
    let mut gens = Vec::with_capacity(spec.generators.len());
    for (k, cycles) in spec.generators.iter().enumerate() {
        let mut used = vec![false; n];
        let mut zero_based = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            let mut c = Vec::with_capacity(cycle.len());
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(parse_error(offset, format!("generator {k}: point {p} outside 1..={n}")));
                }
                if used[p - 1] {
                    return Err(parse_error(offset, format!("generator {k}: point {p} repeated")));
                }
                used[p - 1] = true;
                c.push(p - 1);
            }
            zero_based.push(c);
        }
        gens.push(Permutation::from_cycles(n, &zero_based)?);
    }
    Ok((n, gens))
}

struct CycleParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
}

impl CycleParser<'_> {
    fn err(&self, at: usize, message: impl Into<String>) -> Error {
        parse_error(self.offset + at, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<(usize, usize)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("{:?}", c as char));
            return Err(self.err(start, format!("expected a point, found {found}")));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let v = s.parse().map_err(|_| self.err(start, "number out of range"))?;
        Ok((v, start))
    }

    /// One generator: a run of cycles, each cycle's points 1-based with positions.
    fn generator(&mut self) -> Result<Vec<Vec<(usize, usize)>>> {
        let mut cycles = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b'(') {
            return Err(self.err(self.pos, "expected '('"));
        }
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(b',') if !cycle.is_empty() => self.pos += 1,
                    None => return Err(self.err(self.pos, "unterminated cycle")),
                    _ => cycle.push(self.number()?),
                }
            }
            cycles.push(cycle);
            self.skip_ws();
        }
        Ok(cycles)
    }
}

fn parse_cycle_text(text: &str, offset: usize) -> Result<(usize, Vec<Permutation>)> {
    let mut p = CycleParser {
        bytes: text.as_bytes(),
        pos: 0,
        offset,
    };
    p.skip_ws();
    let mut declared = None;
    if p.peek().is_some_and(|c| c.is_ascii_digit()) {
        let (n, at) = p.number()?;
        p.skip_ws();
        if p.peek() != Some(b':') {
            return Err(p.err(p.pos, "expected ':' after the degree"));
        }
        p.pos += 1;
        if n == 0 {
            return Err(p.err(at, "degree must be at least 1"));
        }
        declared = Some(n);
    } else if p.peek() != Some(b'(') {
        return Err(p.err(p.pos, format!("unknown group name {text:?}")));
    }

    let mut raw = Vec::new();
    loop {
        p.skip_ws();
        if p.peek().is_none() && declared.is_some() && raw.is_empty() {
            break;
        }
        raw.push(p.generator()?);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b';') => p.pos += 1,
            Some(c) => return Err(p.err(p.pos, format!("unexpected {:?}", c as char))),
        }
    }

    let largest = raw.iter().flatten().flatten().map(|&(v, _)| v).max().unwrap_or(0);
    let n = declared.unwrap_or(largest.max(1));
    let mut gens = Vec::with_capacity(raw.len());
    for cycles in &raw {
        let mut used = vec![false; n];
        let mut zero_based = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            let mut c = Vec::with_capacity(cycle.len());
            for &(v, at) in cycle {
                if v == 0 || v > n {
                    return Err(p.err(at, format!("point {v} outside 1..={n}")));
                }
                if used[v - 1] {
                    return Err(p.err(at, format!("point {v} repeated in one generator")));
                }
                used[v - 1] = true;
                c.push(v - 1);
            }
            zero_based.push(c);
        }
        gens.push(Permutation::from_cycles(n, &zero_based)?);
    }
    Ok((n, gens))
}

/// Specifications of the built-in test catalog, in a fixed order.
///
/// Symmetric and alternating groups for `n ≤ 7`, cyclic groups for
/// `3 ≤ n ≤ 6`, dihedral groups for `4 ≤ n ≤ 7`, trivial groups for
/// `n ≤ 5`, and a few intransitive or small explicit groups.
pub fn catalog() -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=7 {
        out.push(format!("S{n}"));
    }
    for n in 3..=7 {
        out.push(format!("A{n}"));
    }
    for n in 3..=6 {
        out.push(format!("C{n}"));
    }
    for n in 4..=7 {
        out.push(format!("D{n}"));
    }
    for n in 1..=5 {
        out.push(format!("trivial{n}"));
    }
    out.extend(
        [
            "4:(1 2)(3 4);(1 3)(2 4)",
            "4:(1 2);(3 4)",
            "5:(1 2 3 4 5);(2 3 5 4)",
            "6:(1 2 3)(4 5 6);(1 4)(2 5)(3 6)",
        ]
        .map(String::from),
    );
    out
}

/// Catalog entries of degree at most `max_n`.
pub fn catalog_up_to(max_n: usize) -> Result<Vec<(String, PermGroup)>> {
    catalog()
        .into_iter()
        .map(|s| parse_group(&s).map(|g| (s, g)))
        .filter(|r| r.as_ref().map_or(true, |(_, g)| g.degree() <= max_n))
        .collect()
}
