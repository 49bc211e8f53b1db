//! Plain-text formats for posets, graphs and certificates.
//!
//! All three formats are line based, UTF-8 with LF endings; `#` starts a
//! comment that runs to the end of the line.
//!
//! ```text
//! poset <n>          graph <n>          certificate <n>
//! <name> x n         <name> x n         L: e1 e2 ... en
//! <u> <v>   u ≺ v    <u> <v>  edge      interval <name> <left> <right> / <n>
//! ```
//!
//! Poset relation lines may name any generating set; the parser takes the
//! transitive closure. Serialization writes the transitive reduction, so
//! parse-serialize round trips are byte stable.

use thiserror::Error;

use crate::poset::{Graph, LinearOrder, PartialOrder, PosetError};
use crate::semiorder::{Certificate, ProperIntervalRep};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment tokens per line, with 1-based line numbers.
fn token_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect()
}

fn parse_header(lines: &[(usize, Vec<&str>)], keyword: &str) -> Result<usize, IoError> {
    let (line, tokens) = lines.first().ok_or_else(|| err(0, "empty input"))?;
    if tokens.len() != 2 || tokens[0] != keyword {
        return Err(err(*line, format!("expected header `{keyword} <n>`")));
    }
    tokens[1]
        .parse::<usize>()
        .map_err(|_| err(*line, format!("bad element count `{}`", tokens[1])))
}

fn parse_names(lines: &[(usize, Vec<&str>)], n: usize) -> Result<Vec<String>, IoError> {
    if lines.len() < n {
        let last = lines.last().map_or(0, |(l, _)| *l);
        return Err(err(last, format!("expected {n} name lines")));
    }
    let mut names = Vec::with_capacity(n);
    for (line, tokens) in &lines[..n] {
        if tokens.len() != 1 {
            return Err(err(*line, "expected a single name per line"));
        }
        names.push(tokens[0].to_string());
    }
    Ok(names)
}

pub fn parse_poset(text: &str) -> Result<PartialOrder, IoError> {
    let lines = token_lines(text);
    let n = parse_header(&lines, "poset")?;
    let names = parse_names(&lines[1..], n)?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (line, tokens) in &lines[1 + n..] {
        if tokens.len() != 2 {
            return Err(err(*line, "expected `<u> <v>`"));
        }
        pairs.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Ok(PartialOrder::from_name_pairs(names, &pairs)?)
}

pub fn serialize_poset(p: &PartialOrder) -> String {
    let mut out = format!("poset {}\n", p.n());
    for name in p.names() {
        out.push_str(name);
        out.push('\n');
    }
    for (u, v) in p.pairs() {
        // transitive reduction: skip pairs with an intermediate element
        let covered = (0..p.n()).any(|w| p.less(u, w) && p.less(w, v));
        if !covered {
            out.push_str(&format!("{} {}\n", p.name(u), p.name(v)));
        }
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let lines = token_lines(text);
    let n = parse_header(&lines, "graph")?;
    let names = parse_names(&lines[1..], n)?;
    let index = |line: usize, s: &str| {
        names
            .iter()
            .position(|x| x == s)
            .ok_or_else(|| err(line, format!("unknown vertex `{s}`")))
    };
    let mut edges = Vec::new();
    for (line, tokens) in &lines[1 + n..] {
        if tokens.len() != 2 {
            return Err(err(*line, "expected `<u> <v>`"));
        }
        let u = index(*line, tokens[0])?;
        let v = index(*line, tokens[1])?;
        if u == v {
            return Err(err(*line, "loops are not allowed"));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(names, &edges)?)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for name in g.names() {
        out.push_str(name);
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate, IoError> {
    let lines = token_lines(text);
    let n = parse_header(&lines, "certificate")?;
    let (l_line, l_tokens) = lines.get(1).ok_or_else(|| err(0, "missing `L:` line"))?;
    if l_tokens.first() != Some(&"L:") || l_tokens.len() != n + 1 {
        return Err(err(*l_line, format!("expected `L:` followed by {n} names")));
    }
    let extension: Vec<String> = l_tokens[1..].iter().map(|s| s.to_string()).collect();

    let mut names = Vec::with_capacity(n);
    let mut intervals = Vec::with_capacity(n);
    let mut denom: Option<u64> = None;
    let interval_lines = &lines[2..];
    if interval_lines.len() != n {
        let last = lines.last().map_or(0, |(l, _)| *l);
        return Err(err(last, format!("expected {n} interval lines")));
    }
    for (line, tokens) in interval_lines {
        if tokens.len() != 6 || tokens[0] != "interval" || tokens[4] != "/" {
            return Err(err(
                *line,
                "expected `interval <name> <left> <right> / <n>`",
            ));
        }
        let name = tokens[1].to_string();
        if names.contains(&name) {
            return Err(err(*line, format!("duplicate interval for `{name}`")));
        }
        let left: i64 = tokens[2]
            .parse()
            .map_err(|_| err(*line, "bad left endpoint"))?;
        let right: i64 = tokens[3]
            .parse()
            .map_err(|_| err(*line, "bad right endpoint"))?;
        let d: u64 = tokens[5]
            .parse()
            .map_err(|_| err(*line, "bad denominator"))?;
        match denom {
            None => denom = Some(d),
            Some(prev) if prev != d => {
                return Err(err(*line, "denominators must agree across intervals"))
            }
            _ => {}
        }
        if left > right {
            return Err(err(*line, "interval endpoints out of order"));
        }
        names.push(name);
        intervals.push((left, right));
    }
    let denom = denom.unwrap_or(1.max(n as u64));

    let mut perm = Vec::with_capacity(n);
    for (i, e) in extension.iter().enumerate() {
        match names.iter().position(|x| x == e) {
            Some(v) => {
                if perm.contains(&v) {
                    return Err(err(*l_line, format!("element `{e}` repeats in L")));
                }
                perm.push(v)
            }
            None => {
                return Err(err(
                    *l_line,
                    format!("element `{e}` at position {i} has no interval"),
                ))
            }
        }
    }
    let rep = ProperIntervalRep::from_parts(names.clone(), denom, intervals);
    Ok(Certificate::from_parts(names, LinearOrder::new(perm), rep))
}

pub fn serialize_certificate(cert: &Certificate) -> String {
    let n = cert.names().len();
    let mut out = format!("certificate {n}\n");
    let l: Vec<&str> = cert
        .extension()
        .iter()
        .map(|v| cert.names()[v].as_str())
        .collect();
    out.push_str(&format!("L: {}\n", l.join(" ")));
    let rep = cert.representation();
    for (v, name) in cert.names().iter().enumerate() {
        let (left, right) = rep.interval(v);
        out.push_str(&format!(
            "interval {} {} {} / {}\n",
            name,
            left,
            right,
            rep.denominator()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn poset_round_trip() {
        let p = samples::chevron_dual();
        let text = serialize_poset(&p);
        assert_eq!(parse_poset(&text).unwrap(), p);
    }

    #[test]
    fn poset_parse_tolerates_comments_and_blanks() {
        let text = "# example\nposet 3\na\nb\nc\n\na b # cover\nb c\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.n(), 3);
        assert!(p.less(0, 2)); // closure of a<b<c
    }

    #[test]
    fn poset_parse_rejects_unknown_element() {
        let text = "poset 2\na\nb\na q\n";
        assert!(parse_poset(text).is_err());
    }

    #[test]
    fn poset_parse_rejects_cycle() {
        let text = "poset 2\na\nb\na b\nb a\n";
        assert!(matches!(
            parse_poset(text),
            Err(IoError::Poset(PosetError::Cycle(_)))
        ));
    }

    #[test]
    fn graph_round_trip() {
        let g = samples::chevron_dual().incomparability_graph();
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_header_is_reported() {
        assert!(parse_poset("graph 2\na\nb\n").is_err());
        assert!(parse_graph("graph two\n").is_err());
    }
}
