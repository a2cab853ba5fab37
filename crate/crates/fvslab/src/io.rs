//! graph6 and the plain `n m` / `u v` adjacency text format.

use std::fs;
use std::path::Path;

use fvslab_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}")]
    File { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6 encodes simple graphs only")]
    NotSimple,
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

pub fn parse_graph6(s: &str) -> Result<Graph, IoError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, r @ ..] if r.len() >= 6 => (sixes(&r[..6]), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (sixes(&r[..3]), &r[3..]),
        [126, ..] => return Err(parse_err(1, "truncated graph6 size")),
        [b, r @ ..] => ((*b - 63) as usize, r),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != need {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {need}", rest.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

fn sixes(b: &[u8]) -> usize {
    b.iter().fold(0, |acc, &x| (acc << 6) | (x - 63) as usize)
}

/// graph6 of a simple graph, vertices taken in increasing id order.
pub fn to_graph6(g: &Graph) -> Result<String, IoError> {
    if !g.is_simple() {
        return Err(IoError::NotSimple);
    }
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let vs = g.vertices();
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(vs[i], vs[j]) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// `n m` then `m` lines `u v`; repeated lines are parallel edges, `u u` a loop.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_adjacency(text: &str) -> Result<Graph, IoError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = two_numbers(hl, header)?;
    let mut g = Graph::from_edges(n, &[]);
    let mut count = 0;
    for (k, l) in lines {
        let [u, v] = two_numbers(k, l)?;
        if u >= n || v >= n {
            return Err(parse_err(k, format!("vertex out of range 0..{n}")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(k, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(hl, format!("header says {m} edges, found {count}")));
    }
    Ok(g)
}

fn two_numbers(line: usize, s: &str) -> Result<[usize; 2], IoError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(parse_err(line, "expected two integers"));
    }
    let a = parts[0].parse().map_err(|_| parse_err(line, format!("bad integer `{}`", parts[0])))?;
    let b = parts[1].parse().map_err(|_| parse_err(line, format!("bad integer `{}`", parts[1])))?;
    Ok([a, b])
}

/// Adjacency text with vertices renumbered `0..n` in id order.
pub fn to_adjacency(g: &Graph) -> String {
    let h = g.compacted();
    let mut s = format!("{} {}\n", h.n(), h.m());
    for (u, v) in h.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// One adjacency-text graph, or one graph6 string per line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, IoError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.split_whitespace().count() == 2 => Ok(vec![parse_adjacency(text)?]),
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(k, l)| parse_graph6(l).map_err(|e| match e {
                IoError::Parse { msg, .. } => parse_err(k + 1, msg),
                other => other,
            }))
            .collect(),
    }
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::File { path: path.display().to_string(), source })?;
    parse_graphs(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fvslab_core::named::*;

    #[test]
    fn graph6_known_strings() {
        // Standard encodings.
        assert_eq!(to_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&path(3)).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::from_edges(1, &[])).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::new()).unwrap(), "?");
        assert_eq!(to_graph6(&petersen().compacted()).unwrap().len(), 1 + 8);
        assert!(to_graph6(&loop_graph()).is_err());
    }

    #[test]
    fn graph6_round_trip() {
        for g in [petersen(), dodecahedron(), cube(), complete(9), Graph::from_edges(70, &[(0, 69), (3, 4)])] {
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g.compacted());
        }
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn adjacency_round_trip_with_multigraphs() {
        let text = "3 4\n0 1\n0 1\n1 2\n2 2\n";
        let g = parse_adjacency(text).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(2, 2), 1);
        assert_eq!(to_adjacency(&g), text);
        assert!(parse_adjacency("3 2\n0 1\n").is_err());
        assert!(parse_adjacency("2 1\n0 5\n").is_err());
        assert!(parse_adjacency("x y\n").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graphs("# c5\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap(), vec![cycle(5)]);
        let many = parse_graphs("C~\nBg\n").unwrap();
        assert_eq!(many.len(), 2);
        assert!(parse_graphs("").unwrap().is_empty());
    }
}
