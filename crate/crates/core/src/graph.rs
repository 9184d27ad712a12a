//! Finite simple undirected graphs over the vertices `0..n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex index in `0..n`.
pub type Vertex = usize;

/// A finite simple undirected graph.
///
/// Neighbor lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of the order edges were supplied in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Graph { n, neighbors: vec![Vec::new(); n] })
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        match self.neighbors[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(at) => {
                self.neighbors[u].insert(at, v);
                let back = self.neighbors[v].binary_search(&u).unwrap_err();
                self.neighbors[v].insert(back, u);
                Ok(())
            }
        }
    }

    fn check_vertex(&self, u: Vertex) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Panics if either vertex is out of range.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        assert!(v < self.n, "vertex {v} out of range");
        self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, u: Vertex) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.neighbors[u].len())
    }

    /// `N(u)`: the neighbors of `u`, ascending, excluding `u` itself.
    pub fn open_neighborhood(&self, u: Vertex) -> Result<&[Vertex]> {
        self.check_vertex(u)?;
        Ok(&self.neighbors[u])
    }

    /// `N[u] = {u} ∪ N(u)`, ascending.
    pub fn closed_neighborhood(&self, u: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(u)?;
        let ns = &self.neighbors[u];
        let at = ns.binary_search(&u).unwrap_err();
        let mut closed = Vec::with_capacity(ns.len() + 1);
        closed.extend_from_slice(&ns[..at]);
        closed.push(u);
        closed.extend_from_slice(&ns[at..]);
        Ok(closed)
    }

    pub(crate) fn neighbors_unchecked(&self, u: Vertex) -> &[Vertex] {
        &self.neighbors[u]
    }

    /// Whether `v ∈ N[u]`.
    pub(crate) fn in_closed_neighborhood(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.neighbors[u].binary_search(&v).is_ok()
    }
}

impl fmt::Display for Graph {
    /// Renders the graph file format: `n <N>` followed by one `u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_graph(text)
    }
}

/// Non-comment, non-blank lines paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses the `n <N>` header shared by the graph and table formats.
pub(crate) fn parse_header<'a, I>(lines: &mut I) -> Result<usize>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let Some((line, header)) = lines.next() else {
        return Err(parse_error(1, "missing `n <N>` header"));
    };
    let mut words = header.split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some("n"), Some(count), None) => {
            let n = count
                .parse::<usize>()
                .map_err(|_| parse_error(line, format!("invalid vertex count `{count}`")))?;
            if n == 0 {
                return Err(parse_error(line, "vertex count must be at least 1"));
            }
            Ok(n)
        }
        _ => Err(parse_error(line, format!("expected `n <N>`, found `{header}`"))),
    }
}

/// Parses the graph file format. Errors carry the offending line number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut g = Graph::edgeless(n)?;
    for (line, content) in lines {
        let ends: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = ends[..] else {
            return Err(parse_error(line, format!("expected `<u> <v>`, found `{content}`")));
        };
        let parse_end = |s: &str| {
            s.parse::<Vertex>()
                .map_err(|_| parse_error(line, format!("invalid vertex `{s}`")))
        };
        let (u, v) = (parse_end(u)?, parse_end(v)?);
        g.insert_edge(u, v).map_err(|e| parse_error(line, e.to_string()))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        parse_graph("n 4\n0 1\n1 2\n2 3\n0 3\n").unwrap()
    }

    #[test]
    fn parses_the_four_cycle() {
        let g = c4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let reordered = parse_graph("# C4\nn 4\n3 0\n\n2 1\n0 1\n3 2\n").unwrap();
        assert_eq!(g, reordered);
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph("n 1").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        let loop_err = parse_graph("n 2\n0 0\n").unwrap_err();
        assert!(matches!(loop_err, Error::Parse { line: 2, .. }), "{loop_err}");
        assert!(loop_err.to_string().contains("loop"));

        let dup = parse_graph("n 3\n0 1\n# c\n1 0\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 4, .. }), "{dup}");

        let range = parse_graph("n 2\n0 2\n").unwrap_err();
        assert!(matches!(range, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("n 0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("m 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("n 3\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("n 3\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("n 3\n-1 0"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn empty_vertex_set_is_rejected() {
        assert_eq!(Graph::edgeless(0), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn neighborhoods() {
        let g = c4();
        assert_eq!(g.closed_neighborhood(0).unwrap(), vec![0, 1, 3]);
        assert_eq!(g.closed_neighborhood(2).unwrap(), vec![1, 2, 3]);
        assert_eq!(g.open_neighborhood(0).unwrap(), &[1, 3]);

        let k1 = Graph::edgeless(1).unwrap();
        assert_eq!(k1.closed_neighborhood(0).unwrap(), vec![0]);
        assert!(k1.open_neighborhood(0).unwrap().is_empty());

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.open_neighborhood(1).unwrap(), &[0, 2]);

        assert_eq!(
            g.closed_neighborhood(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
        assert!(g.open_neighborhood(9).is_err());
    }

    #[test]
    fn render_is_parseable() {
        let g = c4();
        assert_eq!(g.to_string(), "n 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
    }
}
