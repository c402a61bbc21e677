//! Text formats: triangulation lines, edge lists, copy lists, vectors and census CSV.
//!
//! A triangulation line lists its diagonals as `i-j` pairs (vertices `1..=n`, `i < j`)
//! separated by commas, e.g. `1-3,1-4,1-5`. The triangle has the empty line.
//!
//! An edge list starts with `# vertices=N degree=D` (`D` is `-` for irregular graphs)
//! followed by one `u v` line per edge, 0-based, `u < v`, ascending.

use std::io::{BufRead, Write};

use assoc_core::census::CensusReport;
use assoc_core::{Diagonal, Graph, Triangulation};

use crate::error::{input, CliResult};

pub fn format_triangulation(t: &Triangulation) -> String {
    t.to_string()
}

pub fn parse_triangulation(n: usize, line: &str) -> CliResult<Triangulation> {
    let line = line.trim();
    let mut diagonals = Vec::new();
    if !line.is_empty() {
        for part in line.split(',') {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| input(format!("expected i-j, got {part:?}")))?;
            let a: usize = a.trim().parse().map_err(|_| input(format!("bad vertex {a:?}")))?;
            let b: usize = b.trim().parse().map_err(|_| input(format!("bad vertex {b:?}")))?;
            diagonals.push(Diagonal::new(n, a, b)?);
        }
    }
    Ok(Triangulation::new(n, diagonals)?)
}

pub fn write_triangulations<'a>(mut w: impl Write, ts: impl IntoIterator<Item = &'a Triangulation>) -> CliResult<()> {
    for t in ts {
        writeln!(w, "{t}")?;
    }
    Ok(())
}

pub fn read_triangulations(n: usize, r: impl BufRead) -> CliResult<Vec<Triangulation>> {
    r.lines().map(|line| parse_triangulation(n, &line?)).collect()
}

pub fn write_edge_list(mut w: impl Write, g: &Graph) -> CliResult<()> {
    let degree = g.degree_tag().map_or_else(|| "-".to_string(), |d| d.to_string());
    writeln!(w, "# vertices={} degree={degree}", g.vertex_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list(r: impl BufRead) -> CliResult<Graph> {
    let mut lines = r.lines();
    let header = lines.next().ok_or_else(|| input("empty edge list"))??;
    let count = header
        .split_whitespace()
        .find_map(|f| f.strip_prefix("vertices="))
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| input("edge list header lacks vertices=N"))?;
    let mut edges = Vec::new();
    for line in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = parse_indices(line)?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(input(format!("expected two vertices, got {line:?}"))),
        }
    }
    Ok(Graph::from_edges(count, &edges)?)
}

fn parse_indices(line: &str) -> CliResult<Vec<usize>> {
    line.split_whitespace()
        .map(|x| x.parse::<usize>().map_err(|_| input(format!("bad vertex index {x:?}"))))
        .collect()
}

/// One copy per line: host vertices listed in pattern-vertex order. `#` starts a comment.
pub fn read_copy_maps(r: impl BufRead) -> CliResult<Vec<Vec<usize>>> {
    let mut maps = Vec::new();
    for line in r.lines() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if !body.is_empty() {
            maps.push(parse_indices(body)?);
        }
    }
    Ok(maps)
}

/// One real number per line.
pub fn read_vector(r: impl BufRead) -> CliResult<Vec<f64>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(line.parse().map_err(|_| input(format!("bad number {line:?}")))?);
    }
    Ok(out)
}

/// Vertex rows: index, triangulation, ears, pentagon counts, hexagon counts.
pub fn write_vertex_census(w: impl Write, report: &CensusReport, ts: &[Triangulation]) -> CliResult<()> {
    let mut out = csv::Writer::from_writer(w);
    let oracle = report.pentagon_oracle.is_some();
    let mut header = vec!["vertex", "triangulation", "ears", "pentagon_formula"];
    if oracle {
        header.push("pentagon_oracle");
    }
    header.extend(["hexagon_paths", "hexagon_stars", "hexagon_total"]);
    if oracle {
        header.push("hexagon_oracle");
    }
    out.write_record(&header)?;
    for (v, t) in ts.iter().enumerate() {
        let mut row = vec![v.to_string(), t.to_string(), report.ears[v].to_string(), report.pentagon_formula[v].to_string()];
        if let Some(o) = &report.pentagon_oracle {
            row.push(o[v].to_string());
        }
        match report.hexagon_formula.get(v) {
            Some(h) => row.extend([h.paths.to_string(), h.stars.to_string(), h.total().to_string()]),
            None => row.extend(["0".into(), "0".into(), "0".into()]),
        }
        if oracle {
            row.push(report.hexagon_oracle.as_ref().map_or(0, |o| o[v]).to_string());
        }
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}

/// Edge rows: endpoints, pentagon and hexagon counts through the edge.
pub fn write_edge_census(w: impl Write, report: &CensusReport) -> CliResult<()> {
    let mut out = csv::Writer::from_writer(w);
    let oracle = report.edge_pentagon_oracle.is_some();
    let mut header = vec!["u", "v", "pentagon"];
    if oracle {
        header.push("pentagon_oracle");
    }
    header.push("hexagon");
    if oracle {
        header.push("hexagon_oracle");
    }
    out.write_record(&header)?;
    for (i, &(u, v)) in report.edges.iter().enumerate() {
        let mut row = vec![u.to_string(), v.to_string(), report.edge_pentagon[i].to_string()];
        if let Some(o) = &report.edge_pentagon_oracle {
            row.push(o[i].to_string());
        }
        row.push(report.edge_hexagon.get(i).copied().unwrap_or(0).to_string());
        if oracle {
            row.push(report.edge_hexagon_oracle.as_ref().map_or(0, |o| o[i]).to_string());
        }
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use assoc_core::enumerate_triangulations;

    #[test]
    fn triangulation_lines_round_trip() {
        for n in 3..=8 {
            let ts = enumerate_triangulations(n).unwrap();
            let mut buf = Vec::new();
            write_triangulations(&mut buf, &ts).unwrap();
            let back = read_triangulations(n, buf.as_slice()).unwrap();
            assert_eq!(back, ts);
        }
        assert_eq!(format_triangulation(&Triangulation::fan(5).unwrap()), "1-3,1-4");
        assert_eq!(parse_triangulation(5, " 1-4 , 1-3").unwrap(), Triangulation::fan(5).unwrap());
    }

    #[test]
    fn triangulation_lines_reject_garbage() {
        assert!(parse_triangulation(5, "1-3").is_err());
        assert!(parse_triangulation(5, "1-3,2-4").is_err());
        assert!(parse_triangulation(5, "1-2,1-3").is_err());
        assert!(parse_triangulation(5, "1/3,1-4").is_err());
        assert!(parse_triangulation(5, "1-x,1-4").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &g).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# vertices=10 degree=3\n"));
        assert_eq!(text.lines().count(), 16);
        let back = read_edge_list(buf.as_slice()).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &Graph::path(3)).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("# vertices=3 degree=-"));
        assert!(read_edge_list("0 1\n".as_bytes()).is_err());
        assert!(read_edge_list("# vertices=2\n0 1 1\n".as_bytes()).is_err());
    }

    #[test]
    fn copy_maps_and_vectors() {
        let maps = read_copy_maps("# triangles\n0 1 2\n\n1 2 3 # tail\n".as_bytes()).unwrap();
        assert_eq!(maps, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(read_vector("1\n-2.5\n\n3e-1\n".as_bytes()).unwrap(), vec![1.0, -2.5, 0.3]);
        assert!(read_vector("one\n".as_bytes()).is_err());
    }
}
