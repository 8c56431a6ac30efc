//! graph6 codec, the plain edge-list format, and result documents.

use std::fmt::Write as _;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";
/// Largest order representable without the 8-byte size form.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut bytes = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err("empty graph6 record")),
        [126, 126, ..] => {
            let digits = bytes.get(2..8).ok_or_else(|| parse_err("truncated order"))?;
            let n = digits.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            return Err(Error::UnsupportedOrder(n));
        }
        [126, rest @ ..] => {
            let digits = rest.get(..3).ok_or_else(|| parse_err("truncated order"))?;
            let n = digits.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!("order {n} needs {expected} data bytes, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(parse_err("nonzero padding bit"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` under its own labeling (no canonization), without header or
/// newline.
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // column-major upper triangle: bit index of (u, v) with u < v
        let k = v * (v - 1) / 2 + u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    Ok(out)
}

pub fn encode_graph6_string(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(encode_graph6(g)?).expect("graph6 is ASCII"))
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let pair = |no: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse { line: no, msg: format!("not a nonnegative integer: {s:?}") })
        };
        match fields.as_slice() {
            [a, b] => Ok((num(a)?, num(b)?)),
            _ => Err(Error::Parse { line: no, msg: "expected two integers".into() }),
        }
    };
    let (no, header) = lines.next().ok_or_else(|| parse_err("missing header line"))?;
    let (n, m) = pair(no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (no, l) in lines {
        edges.push(pair(no, l)?);
    }
    if edges.len() != m {
        return Err(parse_err(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

/// Edge-list rendering accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// `p/q` for proper fractions, `p` for integers.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    r.to_string()
}

pub fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let bad = || parse_err(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p.parse().map_err(|_| bad())?, q))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// One decomposition, as written by the CLI. Field order is the JSON key
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub input_name: String,
    pub n: usize,
    /// `I`..`IV`, `BALANCED` or `TWO_REGULAR`.
    pub statement: String,
    pub target_profile: Vec<usize>,
    pub achieved_profile: Vec<usize>,
    pub subgraph_edges: Vec<(usize, usize)>,
    /// Exact rational, `p/q` or an integer.
    pub max_deviation: String,
    pub branch_trace: Vec<String>,
    pub fallback_used: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

pub const TSV_HEADER: &str =
    "input_name\tn\tstatement\ttarget_profile\tachieved_profile\tmax_deviation\tfallback_used\tsubgraph_edges\tbranch_trace";

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// One line per document, no trailing newline.
pub fn render_result(r: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("plain data serializes"),
        Format::Tsv => {
            let edges: Vec<String> = r.subgraph_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            [
                r.input_name.clone(),
                r.n.to_string(),
                r.statement.clone(),
                join(&r.target_profile, ","),
                join(&r.achieved_profile, ","),
                r.max_deviation.clone(),
                r.fallback_used.to_string(),
                edges.join(","),
                r.branch_trace.join(";"),
            ]
            .join("\t")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight transcription of the published byte layout, kept apart from
    /// the encoder above: walk the upper triangle column by column, collect
    /// bits, cut into sextets.
    fn reference_graph6(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn golden_k4_and_empty() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(reference_graph6(4, &k4), "C~");
        let g = Graph::new(4, k4).unwrap();
        assert_eq!(encode_graph6_string(&g).unwrap(), "C~");
        assert_eq!(parse_graph6(b"C~").unwrap(), g);
        assert_eq!(parse_graph6(b">>graph6<<C~\n").unwrap(), g);
        let empty = parse_graph6(b"?").unwrap();
        assert_eq!(empty.order(), 0);
        assert_eq!(encode_graph6_string(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn matches_reference_on_petersen() {
        let g = crate::gen::named("petersen").unwrap();
        assert_eq!(encode_graph6_string(&g).unwrap(), reference_graph6(10, g.edges()));
    }

    #[test]
    fn long_form_order() {
        let g = crate::gen::random_cubic(100, 3).unwrap();
        let enc = encode_graph6(&g).unwrap();
        assert_eq!(&enc[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6(b"C}").is_ok());
        // K4 bits fill the byte exactly; a 3-vertex graph leaves 3 padding bits
        assert!(parse_graph6(b"Bw").is_ok());
        assert!(matches!(parse_graph6(b"Bx"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6(b"C~~"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6(b"C"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6(b"C\x7f"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6(b"~~??????"), Err(Error::UnsupportedOrder(_))));
        assert_eq!(encode_graph6(&Graph::empty(GRAPH6_MAX_ORDER + 1)), Err(Error::UnsupportedOrder(258_048)));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g, crate::gen::named("k4").unwrap());
        assert_eq!(parse_edge_list("2 1\n0 0"), Err(Error::LoopEdge(0)));
        let iso = parse_edge_list("3 0").unwrap();
        assert_eq!((iso.order(), iso.edge_count()), (3, 0));
        assert!(matches!(parse_edge_list("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn ratios() {
        assert_eq!(format_ratio(&Ratio::new(3, 2)), "3/2");
        assert_eq!(format_ratio(&Ratio::new(2, 2)), "1");
        assert_eq!(parse_ratio("1/2").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_ratio("0").unwrap(), Ratio::from_integer(0));
        assert!(parse_ratio("1/0").is_err());
    }

    #[test]
    fn json_key_order_is_fixed() {
        let doc = ResultDocument {
            input_name: "prism".into(),
            n: 6,
            statement: "III".into(),
            target_profile: vec![1, 2, 1, 2],
            achieved_profile: vec![1, 2, 1, 2],
            subgraph_edges: vec![(0, 1)],
            max_deviation: "1/2".into(),
            branch_trace: vec!["connected:base".into()],
            fallback_used: false,
        };
        let json = render_result(&doc, Format::Json);
        assert!(json.starts_with(r#"{"input_name":"prism","n":6,"statement":"III","target_profile""#));
        assert!(json.contains(r#""achieved_profile":[1,2,1,2]"#));
        assert!(json.contains(r#""subgraph_edges":[[0,1]]"#));
        let back: ResultDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        let tsv = render_result(&doc, Format::Tsv);
        assert_eq!(tsv.split('\t').count(), TSV_HEADER.split('\t').count());
    }
}
