//! Combinatorial string-type diagrams: vertices plus x- and y-edges.
//!
//! A diagram describes a module with 0/1 action matrices (basis = vertices,
//! x and y act along the edges). Valid shapes embed in a planar grid where an
//! x-edge moves one column right and a y-edge one row down; this is also the
//! layout used by the ASCII renderer ('—' horizontal x-edges, '|' vertical
//! y-edges).

use std::collections::BTreeMap;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    pub vertices: usize,
    pub x_edges: Vec<(usize, usize)>,
    pub y_edges: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(
        vertices: usize,
        x_edges: Vec<(usize, usize)>,
        y_edges: Vec<(usize, usize)>,
    ) -> Self {
        Diagram {
            vertices,
            x_edges,
            y_edges,
        }
    }

    /// At most one outgoing and one incoming edge per letter per vertex, and
    /// all endpoints in range.
    pub fn check_shape(&self) -> Result<(), Error> {
        for edges in [&self.x_edges, &self.y_edges] {
            let mut out_seen = vec![false; self.vertices];
            let mut in_seen = vec![false; self.vertices];
            for &(s, t) in edges.iter() {
                if s >= self.vertices || t >= self.vertices {
                    return Err(Error::BadDiagram(format!("edge ({s},{t}) out of range")));
                }
                if out_seen[s] {
                    return Err(Error::BadDiagram(format!(
                        "vertex {s} has two outgoing edges of one letter"
                    )));
                }
                if in_seen[t] {
                    return Err(Error::BadDiagram(format!(
                        "vertex {t} has two incoming edges of one letter"
                    )));
                }
                out_seen[s] = true;
                in_seen[t] = true;
            }
        }
        Ok(())
    }

    pub fn x_target(&self, v: usize) -> Option<usize> {
        self.x_edges.iter().find(|&&(s, _)| s == v).map(|&(_, t)| t)
    }

    pub fn y_target(&self, v: usize) -> Option<usize> {
        self.y_edges.iter().find(|&&(s, _)| s == v).map(|&(_, t)| t)
    }

    pub fn x_source(&self, v: usize) -> Option<usize> {
        self.x_edges.iter().find(|&&(_, t)| t == v).map(|&(s, _)| s)
    }

    pub fn y_source(&self, v: usize) -> Option<usize> {
        self.y_edges.iter().find(|&&(_, t)| t == v).map(|&(s, _)| s)
    }

    /// Reverse all edges (the diagram of the dual module).
    pub fn reversed(&self) -> Diagram {
        Diagram {
            vertices: self.vertices,
            x_edges: self.x_edges.iter().map(|&(s, t)| (t, s)).collect(),
            y_edges: self.y_edges.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    /// Number of commuting squares: v →x→ a, v →y→ b, a →y→ z, b →x→ z.
    pub fn square_count(&self) -> usize {
        let mut count = 0;
        for v in 0..self.vertices {
            if let (Some(a), Some(b)) = (self.x_target(v), self.y_target(v)) {
                if let (Some(z1), Some(z2)) = (self.y_target(a), self.x_target(b)) {
                    if z1 == z2 {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Assign each vertex a grid position (column, row): x-edges go +1
    /// column, y-edges +1 row. Fails when the constraints are inconsistent or
    /// two vertices of one connected component collide.
    pub fn grid_positions(&self) -> Result<Vec<(i64, i64)>, Error> {
        let mut pos: Vec<Option<(i64, i64)>> = vec![None; self.vertices];
        let mut comp: Vec<usize> = vec![usize::MAX; self.vertices];
        let neighbors = |v: usize| -> Vec<(usize, (i64, i64))> {
            let mut out = Vec::new();
            for &(s, t) in &self.x_edges {
                if s == v {
                    out.push((t, (1, 0)));
                }
                if t == v {
                    out.push((s, (-1, 0)));
                }
            }
            for &(s, t) in &self.y_edges {
                if s == v {
                    out.push((t, (0, 1)));
                }
                if t == v {
                    out.push((s, (0, -1)));
                }
            }
            out
        };
        let mut comp_id = 0;
        for start in 0..self.vertices {
            if pos[start].is_some() {
                continue;
            }
            pos[start] = Some((0, 0));
            comp[start] = comp_id;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let (vc, vr) = pos[v].unwrap();
                for (w, (dc, dr)) in neighbors(v) {
                    let want = (vc + dc, vr + dr);
                    match pos[w] {
                        None => {
                            pos[w] = Some(want);
                            comp[w] = comp_id;
                            queue.push(w);
                        }
                        Some(have) => {
                            if have != want {
                                return Err(Error::BadDiagram(format!(
                                    "vertex {w} has conflicting grid positions"
                                )));
                            }
                        }
                    }
                }
            }
            comp_id += 1;
        }
        // positions must be distinct within each component
        let mut seen: BTreeMap<(usize, i64, i64), usize> = BTreeMap::new();
        for v in 0..self.vertices {
            let (c, r) = pos[v].unwrap();
            if let Some(&w) = seen.get(&(comp[v], c, r)) {
                return Err(Error::BadDiagram(format!(
                    "vertices {w} and {v} collide on the grid"
                )));
            }
            seen.insert((comp[v], c, r), v);
        }
        Ok(pos.into_iter().map(|p| p.unwrap()).collect())
    }

    /// Deterministic ASCII rendering on the grid. One cell per vertex; '—'
    /// marks a horizontal x-edge, '|' a vertical y-edge. Connected components
    /// are rendered side by side.
    pub fn render(&self) -> String {
        if self.vertices == 0 {
            return "(zero module)\n".to_string();
        }
        let pos = match self.grid_positions() {
            Ok(p) => p,
            Err(_) => return "(diagram does not embed in the grid)\n".to_string(),
        };
        // normalize components: component id by first vertex, offset columns
        let mut comp: Vec<usize> = vec![usize::MAX; self.vertices];
        let mut comp_order = Vec::new();
        for v in 0..self.vertices {
            if comp[v] != usize::MAX {
                continue;
            }
            let id = comp_order.len();
            // flood fill via shared positions graph
            let mut queue = vec![v];
            comp[v] = id;
            while let Some(u) = queue.pop() {
                for &(s, t) in self.x_edges.iter().chain(self.y_edges.iter()) {
                    for (a, b) in [(s, t), (t, s)] {
                        if a == u && comp[b] == usize::MAX {
                            comp[b] = id;
                            queue.push(b);
                        }
                    }
                }
            }
            comp_order.push(v);
        }
        let ncomp = comp_order.len();
        let mut col_shift = vec![0i64; ncomp];
        let mut row_shift = vec![0i64; ncomp];
        let mut next_col = 0i64;
        for id in 0..ncomp {
            let min_c = (0..self.vertices)
                .filter(|&v| comp[v] == id)
                .map(|v| pos[v].0)
                .min()
                .unwrap();
            let max_c = (0..self.vertices)
                .filter(|&v| comp[v] == id)
                .map(|v| pos[v].0)
                .max()
                .unwrap();
            let min_r = (0..self.vertices)
                .filter(|&v| comp[v] == id)
                .map(|v| pos[v].1)
                .min()
                .unwrap();
            col_shift[id] = next_col - min_c;
            row_shift[id] = -min_r;
            next_col += max_c - min_c + 2; // one blank column between components
        }
        let cell = |v: usize| -> (usize, usize) {
            let id = comp[v];
            let c = (pos[v].0 + col_shift[id]) as usize;
            let r = (pos[v].1 + row_shift[id]) as usize;
            (2 * c, 2 * r)
        };
        let mut width = 0;
        let mut height = 0;
        for v in 0..self.vertices {
            let (c, r) = cell(v);
            width = width.max(c + 1);
            height = height.max(r + 1);
        }
        let mut grid = vec![vec![' '; width]; height];
        for v in 0..self.vertices {
            let (c, r) = cell(v);
            grid[r][c] = '*';
        }
        for &(s, t) in &self.x_edges {
            let (cs, rs) = cell(s);
            let (ct, _) = cell(t);
            grid[rs][(cs + ct) / 2] = '—';
        }
        for &(s, t) in &self.y_edges {
            let (cs, rs) = cell(s);
            let (_, rt) = cell(t);
            grid[(rs + rt) / 2][cs] = '|';
        }
        let mut out = String::new();
        for row in grid {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// All single-vertex top extensions used by the inductive recipe: a new
    /// vertex with one or two outgoing edges into the old diagram, placed in
    /// or above the top row of the grid, still a grid shape, with no new
    /// commuting square. Relation checking against a concrete algebra
    /// happens in the caller (the letters alone do not know the algebra).
    pub fn vertex_extensions(&self) -> Vec<Diagram> {
        let mut out = Vec::new();
        let v = self.vertices;
        let base_squares = self.square_count();
        let Ok(pos) = self.grid_positions() else {
            return out;
        };
        let min_row = pos.iter().map(|p| p.1).min().unwrap_or(0);
        let mut push_checked = |d: Diagram, new_row: i64| {
            if new_row > min_row {
                return; // not "on top"
            }
            if d.check_shape().is_err() {
                return;
            }
            if d.grid_positions().is_err() {
                return;
            }
            if d.square_count() > base_squares {
                return;
            }
            out.push(d);
        };
        for w in 0..self.vertices {
            if self.x_source(w).is_none() {
                let mut d = self.clone();
                d.vertices += 1;
                d.x_edges.push((v, w));
                push_checked(d, pos[w].1);
            }
            if self.y_source(w).is_none() {
                let mut d = self.clone();
                d.vertices += 1;
                d.y_edges.push((v, w));
                push_checked(d, pos[w].1 - 1);
            }
        }
        for w1 in 0..self.vertices {
            if self.x_source(w1).is_some() {
                continue;
            }
            for w2 in 0..self.vertices {
                if w2 == w1 || self.y_source(w2).is_some() {
                    continue;
                }
                // the new vertex sits left of w1 and above w2; both edges
                // must agree on its position
                if pos[w1].1 != pos[w2].1 - 1 || pos[w1].0 - 1 != pos[w2].0 {
                    continue;
                }
                let mut d = self.clone();
                d.vertices += 1;
                d.x_edges.push((v, w1));
                d.y_edges.push((v, w2));
                push_checked(d, pos[w1].1);
            }
        }
        out
    }
}
