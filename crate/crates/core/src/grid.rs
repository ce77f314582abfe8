//! Twisted toroidal grid diagrams for links in lens spaces.
//!
//! A diagram with grid number `n` for L(p, q) is drawn in a straightened
//! fundamental rectangle with `n` rows and `p*n` cell-columns.  The left and
//! right edges are identified directly; crossing the top edge re-enters the
//! bottom with a horizontal shift, so that the p-fold lift to an S^3 grid of
//! size `p*n` places the k-th vertical copy of the rectangle shifted by
//! `k*q*n` cell-columns.  Column annulus `i` consists of the cell-columns
//! congruent to `i` mod `n`; a full beta circle passes through all p of them.

use crate::error::GridError;
use crate::params::{mod_inverse, LensParams};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A lens-space grid diagram: one O and one X per row and per column annulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDiagram {
    params: LensParams,
    n: usize,
    /// cell-column of the O marking in row r (rows indexed bottom to top)
    o_col: Vec<u64>,
    /// cell-column of the X marking in row r
    x_col: Vec<u64>,
}

/// A classical S^3 grid diagram of size N, stored as a pair of row-to-column
/// bijections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct S3Grid {
    size: usize,
    o_perm: Vec<usize>,
    x_perm: Vec<usize>,
}

/// Generator of the Z_p deck group acting on the lifted S^3 grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeckAction {
    pub row_shift: usize,
    pub col_shift: usize,
    pub order: u64,
    pub grid_size: usize,
}

/// Outcome of checking every structural invariant of a raw diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<GridError>,
    /// (row, cell-column) pairs where an O and an X share a cell; each is a
    /// trivial unknot component contributing tb = -1.
    pub trivial_cells: Vec<(usize, u64)>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Checks raw diagram data against every invariant and reports all failures.
pub fn validate(p: u64, q: u64, n: usize, o_col: &[u64], x_col: &[u64]) -> ValidationReport {
    let mut errors = Vec::new();
    match LensParams::new(p, q) {
        Ok(_) => {}
        Err(e) => errors.push(e),
    }
    if n == 0 {
        errors.push(GridError::RangeViolation("grid number n must be >= 1".into()));
        return ValidationReport { errors, trivial_cells: vec![] };
    }
    let width = p * n as u64;
    for (name, cols) in [("O", o_col), ("X", x_col)] {
        if cols.len() != n {
            errors.push(GridError::RangeViolation(format!(
                "{name} row has {} entries, expected n={n}",
                cols.len()
            )));
            return ValidationReport { errors, trivial_cells: vec![] };
        }
        if let Some(c) = cols.iter().find(|&&c| c >= width) {
            errors.push(GridError::RangeViolation(format!(
                "{name} cell-column {c} out of range [0, {width})"
            )));
        }
        // one marking per column annulus: c mod n must be a bijection
        let mut seen = vec![false; n];
        let mut collision = false;
        for &c in cols {
            let a = (c as usize) % n;
            if seen[a] {
                collision = true;
            }
            seen[a] = true;
        }
        if collision {
            errors.push(GridError::NotBijection { axis: if name == "O" { "O column annulus" } else { "X column annulus" } });
        }
    }
    let trivial_cells = if errors.is_empty() {
        (0..n).filter(|&r| o_col[r] == x_col[r]).map(|r| (r, o_col[r])).collect()
    } else {
        vec![]
    };
    ValidationReport { errors, trivial_cells }
}

impl GridDiagram {
    pub fn new(
        params: LensParams,
        o_col: Vec<u64>,
        x_col: Vec<u64>,
    ) -> Result<GridDiagram, GridError> {
        let n = o_col.len();
        let report = validate(params.p(), params.q(), n, &o_col, &x_col);
        if let Some(e) = report.errors.into_iter().next() {
            return Err(e);
        }
        Ok(GridDiagram { params, n, o_col, x_col })
    }

    pub fn params(&self) -> LensParams {
        self.params
    }

    pub fn grid_number(&self) -> usize {
        self.n
    }

    /// Number of cell-columns in the fundamental rectangle, p*n.
    pub fn width(&self) -> u64 {
        self.params.p() * self.n as u64
    }

    pub fn o_col(&self) -> &[u64] {
        &self.o_col
    }

    pub fn x_col(&self) -> &[u64] {
        &self.x_col
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self.params.p(), self.params.q(), self.n, &self.o_col, &self.x_col)
    }

    /// Rows whose O and X coincide in a single cell (trivial unknot
    /// components).
    pub fn trivial_rows(&self) -> Vec<usize> {
        (0..self.n).filter(|&r| self.o_col[r] == self.x_col[r]).collect()
    }

    /// Exchanges the O and X sets, reversing the orientation of every
    /// component.
    pub fn reverse_orientation(&self) -> GridDiagram {
        GridDiagram {
            params: self.params,
            n: self.n,
            o_col: self.x_col.clone(),
            x_col: self.o_col.clone(),
        }
    }

    /// Translates the diagram by `dx` cell-columns and `dy` rows.
    ///
    /// Vertical translation acts through the twisted gluing: a marking that
    /// wraps past the top of the rectangle re-enters with its cell-column
    /// shifted so that the translated diagram has the same p-fold lift, up to
    /// translation of the covering grid.
    pub fn translate(&self, dx: i64, dy: i64) -> GridDiagram {
        let n = self.n as i64;
        let width = self.width() as i64;
        let qn = (self.params.q() * self.n as u64) as i64;
        let mut o_col = vec![0u64; self.n];
        let mut x_col = vec![0u64; self.n];
        for r in 0..self.n {
            let shifted = r as i64 + dy;
            let new_row = shifted.rem_euclid(n) as usize;
            let wraps = shifted.div_euclid(n);
            // each upward wrap subtracts q*n, matching the lift convention
            let delta = dx - wraps * qn;
            o_col[new_row] = (self.o_col[r] as i64 + delta).rem_euclid(width) as u64;
            x_col[new_row] = (self.x_col[r] as i64 + delta).rem_euclid(width) as u64;
        }
        GridDiagram { params: self.params, n: self.n, o_col, x_col }
    }

    /// Rotation of the twisted torus by pi; an exact involution that
    /// preserves the represented link but is not a translation.
    pub fn pi_rotate(&self) -> GridDiagram {
        let width = self.width() as i64;
        let qn = (self.params.q() * self.n as u64) as i64;
        let flip = |c: u64| (qn - 1 - c as i64).rem_euclid(width) as u64;
        let mut o_col = vec![0u64; self.n];
        let mut x_col = vec![0u64; self.n];
        for r in 0..self.n {
            let new_row = self.n - 1 - r;
            o_col[new_row] = flip(self.o_col[r]);
            x_col[new_row] = flip(self.x_col[r]);
        }
        GridDiagram { params: self.params, n: self.n, o_col, x_col }
    }

    fn encoding(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(2 * self.n);
        v.extend_from_slice(&self.o_col);
        v.extend_from_slice(&self.x_col);
        v
    }

    /// The lexicographically minimal translate of this diagram.
    ///
    /// Canonicalization quotients by translations only; the pi-rotation
    /// symmetry is exposed separately via [`GridDiagram::link_class_form`].
    pub fn canonical_form(&self) -> GridDiagram {
        let mut best = self.clone();
        let mut best_key = self.encoding();
        for dy in 0..self.n as i64 {
            for dx in 0..self.width() as i64 {
                let cand = self.translate(dx, dy);
                let key = cand.encoding();
                if key < best_key {
                    best_key = key;
                    best = cand;
                }
            }
        }
        best
    }

    /// Canonical representative under translations and the pi rotation.
    /// Two diagrams with equal link-class forms present the same link via a
    /// grid-symmetry of the twisted torus.
    pub fn link_class_form(&self) -> GridDiagram {
        let a = self.canonical_form();
        let b = self.pi_rotate().canonical_form();
        if a.encoding() <= b.encoding() {
            a
        } else {
            b
        }
    }

    /// The dual grid diagram: rotate the fundamental domain 90 degrees
    /// clockwise, re-cut it into a straightened rectangle, exchange the roles
    /// of rows and column annuli, and swap X with O.  The result presents the
    /// mirror link in L(p, q*) with q q* = -1 mod p.
    pub fn dual(&self) -> GridDiagram {
        let p = self.params.p();
        let n = self.n as u64;
        let width = self.width();
        let dual_params = self.params.dual();
        let map = |c: u64, r: usize| -> (usize, u64) {
            // rotated strip of old cell-column c lands in dual row rho;
            // its horizontal offset k solves k*(-q*n) = c + 1 + rho (mod p*n)
            let rho = (-(c as i64) - 1).rem_euclid(n as i64) as u64;
            debug_assert_eq!((c + 1 + rho) % n, 0);
            let m = (c + 1 + rho) / n; // in [0, p]
            let k = if p == 1 {
                0
            } else {
                let q_inv = mod_inverse(self.params.q(), p).expect("q invertible");
                ((p - m % p) % p * q_inv) % p
            };
            let col = (k * n + r as u64) % width;
            (rho as usize, col)
        };
        let mut o_col = vec![0u64; self.n];
        let mut x_col = vec![0u64; self.n];
        // old X markings become dual O markings and vice versa
        for r in 0..self.n {
            let (rho, col) = map(self.x_col[r], r);
            o_col[rho] = col;
            let (rho, col) = map(self.o_col[r], r);
            x_col[rho] = col;
        }
        GridDiagram { params: dual_params, n: self.n, o_col, x_col }
    }

    /// Lifts the diagram to its p-fold cover, an S^3 grid of size p*n, along
    /// with the deck transformation that fixes the lift.
    pub fn lift_to_cover(&self) -> (S3Grid, DeckAction) {
        let p = self.params.p() as usize;
        let n = self.n;
        let size = p * n;
        let qn = self.params.q() * n as u64;
        let mut o_perm = vec![0usize; size];
        let mut x_perm = vec![0usize; size];
        for r in 0..n {
            for k in 0..p {
                let shift = (k as u64 * qn) % size as u64;
                o_perm[r + k * n] = ((self.o_col[r] + shift) % size as u64) as usize;
                x_perm[r + k * n] = ((self.x_col[r] + shift) % size as u64) as usize;
            }
        }
        let deck = DeckAction {
            row_shift: n % size,
            col_shift: (qn % size as u64) as usize,
            order: self.params.p(),
            grid_size: size,
        };
        (S3Grid { size, o_perm, x_perm }, deck)
    }

    /// Components of the link, each as the cyclic sequence of rows visited:
    /// row r stands for the oriented pair X_r -> O_r, followed by the
    /// vertical arc from O_r to the X in its column annulus.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        // row of the X lying in column annulus a
        let mut x_row = vec![0usize; n];
        for r in 0..n {
            x_row[(self.x_col[r] as usize) % n] = r;
        }
        let next = |r: usize| x_row[(self.o_col[r] as usize) % n];
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut r = start;
            while !seen[r] {
                seen[r] = true;
                cycle.push(r);
                r = next(r);
            }
            comps.push(cycle);
        }
        comps
    }

    /// Order d_i of each component's homology class: p divided by the number
    /// of lift components lying over it.  Ordering matches `components()`.
    pub fn component_orders(&self) -> Vec<u64> {
        let comps = self.components();
        let (lift, _) = self.lift_to_cover();
        let lift_comps = lift.components();
        // lens component id of each row
        let mut comp_of_row = vec![0usize; self.n];
        for (i, c) in comps.iter().enumerate() {
            for &r in c {
                comp_of_row[r] = i;
            }
        }
        let mut covers = vec![0u64; comps.len()];
        for lc in &lift_comps {
            let lens_row = lc[0] % self.n;
            covers[comp_of_row[lens_row]] += 1;
        }
        covers.iter().map(|&c| self.params.p() / c).collect()
    }

    /// Serializes in the grid text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("lens {} {}\n", self.params.p(), self.params.q()));
        s.push_str(&format!("n {}\n", self.n));
        s.push('O');
        for c in &self.o_col {
            s.push_str(&format!(" {c}"));
        }
        s.push_str("\nX");
        for c in &self.x_col {
            s.push_str(&format!(" {c}"));
        }
        s.push('\n');
        s
    }

    /// Parses the grid text format: `lens p q`, `n N`, `O c0 .. c{n-1}`,
    /// `X c0 ..`; `#` starts a comment.  Negative q is reduced mod p.
    pub fn parse(text: &str) -> Result<GridDiagram, GridError> {
        let mut fields: Vec<(usize, Vec<&str>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            fields.push((idx + 1, line.split_whitespace().collect()));
        }
        if fields.len() != 4 {
            return Err(GridError::Parse {
                line: fields.last().map(|f| f.0).unwrap_or(0),
                msg: format!("expected 4 data lines (lens/n/O/X), found {}", fields.len()),
            });
        }
        let int = |line: usize, tok: &str| -> Result<i64, GridError> {
            tok.parse::<i64>().map_err(|_| GridError::Parse {
                line,
                msg: format!("expected integer, got `{tok}`"),
            })
        };
        let (l0, ref t0) = fields[0];
        if t0.len() != 3 || t0[0] != "lens" {
            return Err(GridError::Parse { line: l0, msg: "expected `lens <p> <q>`".into() });
        }
        let p = int(l0, t0[1])?;
        if p < 1 {
            return Err(GridError::Parse { line: l0, msg: "p must be >= 1".into() });
        }
        let q = int(l0, t0[2])?;
        let params = LensParams::new_normalized(p as u64, q)
            .map_err(|e| GridError::Parse { line: l0, msg: e.to_string() })?;
        let (l1, ref t1) = fields[1];
        if t1.len() != 2 || t1[0] != "n" {
            return Err(GridError::Parse { line: l1, msg: "expected `n <grid number>`".into() });
        }
        let n = int(l1, t1[1])?;
        if n < 1 {
            return Err(GridError::Parse { line: l1, msg: "n must be >= 1".into() });
        }
        let n = n as usize;
        let width = params.p() * n as u64;
        let mut cols = |want: &str, item: &(usize, Vec<&str>)| -> Result<Vec<u64>, GridError> {
            let (line, toks) = item;
            if toks.is_empty() || toks[0] != want {
                return Err(GridError::Parse { line: *line, msg: format!("expected `{want} ...`") });
            }
            if toks.len() != n + 1 {
                return Err(GridError::Parse {
                    line: *line,
                    msg: format!("{want} line needs {n} cell-columns, found {}", toks.len() - 1),
                });
            }
            toks[1..]
                .iter()
                .map(|tok| {
                    let v = int(*line, tok)?;
                    if v < 0 || v as u64 >= width {
                        return Err(GridError::Parse {
                            line: *line,
                            msg: format!("cell-column {v} out of range [0, {width})"),
                        });
                    }
                    Ok(v as u64)
                })
                .collect()
        };
        let o_col = cols("O", &fields[2])?;
        let x_col = cols("X", &fields[3])?;
        GridDiagram::new(params, o_col, x_col)
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl S3Grid {
    pub fn new(o_perm: Vec<usize>, x_perm: Vec<usize>) -> Result<S3Grid, GridError> {
        let size = o_perm.len();
        if size == 0 || x_perm.len() != size {
            return Err(GridError::RangeViolation("permutations must be nonempty and equal length".into()));
        }
        for (axis, perm) in [("O row", &o_perm), ("X row", &x_perm)] {
            let mut seen = vec![false; size];
            for &c in perm.iter() {
                if c >= size || seen[c] {
                    return Err(GridError::NotBijection { axis });
                }
                seen[c] = true;
            }
        }
        Ok(S3Grid { size, o_perm, x_perm })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn o_perm(&self) -> &[usize] {
        &self.o_perm
    }

    pub fn x_perm(&self) -> &[usize] {
        &self.x_perm
    }

    pub fn trivial_rows(&self) -> Vec<usize> {
        (0..self.size).filter(|&r| self.o_perm[r] == self.x_perm[r]).collect()
    }

    /// Views the S^3 grid as a lens grid with p = 1.
    pub fn as_grid_diagram(&self) -> GridDiagram {
        GridDiagram {
            params: LensParams::s3(),
            n: self.size,
            o_col: self.o_perm.iter().map(|&c| c as u64).collect(),
            x_col: self.x_perm.iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn from_grid_diagram(g: &GridDiagram) -> Option<S3Grid> {
        if g.params().p() != 1 {
            return None;
        }
        Some(S3Grid {
            size: g.grid_number(),
            o_perm: g.o_col().iter().map(|&c| c as usize).collect(),
            x_perm: g.x_col().iter().map(|&c| c as usize).collect(),
        })
    }

    pub fn translate(&self, dx: i64, dy: i64) -> S3Grid {
        S3Grid::from_grid_diagram(&self.as_grid_diagram().translate(dx, dy)).unwrap()
    }

    pub fn canonical_form(&self) -> S3Grid {
        S3Grid::from_grid_diagram(&self.as_grid_diagram().canonical_form()).unwrap()
    }

    /// The 90-degree-rotation-with-swap dual (the p = 1 dual).
    pub fn dual(&self) -> S3Grid {
        S3Grid::from_grid_diagram(&self.as_grid_diagram().dual()).unwrap()
    }

    /// Applies a deck transformation to the marking set.
    pub fn apply_deck(&self, deck: &DeckAction) -> S3Grid {
        let size = self.size;
        let mut o_perm = vec![0usize; size];
        let mut x_perm = vec![0usize; size];
        for r in 0..size {
            let nr = (r + deck.row_shift) % size;
            o_perm[nr] = (self.o_perm[r] + deck.col_shift) % size;
            x_perm[nr] = (self.x_perm[r] + deck.col_shift) % size;
        }
        S3Grid { size, o_perm, x_perm }
    }

    /// Cycle decomposition of the link: each component lists the rows it
    /// visits (row r stands for X_r -> O_r followed by the vertical arc).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut x_row = vec![0usize; self.size];
        for r in 0..self.size {
            x_row[self.x_perm[r]] = r;
        }
        let next = |r: usize| x_row[self.o_perm[r]];
        let mut seen = vec![false; self.size];
        let mut comps = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut r = start;
            while !seen[r] {
                seen[r] = true;
                cycle.push(r);
                r = next(r);
            }
            comps.push(cycle);
        }
        comps
    }

    pub fn to_text(&self) -> String {
        self.as_grid_diagram().to_text()
    }
}

impl DeckAction {
    /// The identity must be recovered after `order` applications.
    pub fn is_identity_power(&self, grid: &S3Grid) -> bool {
        let mut g = grid.clone();
        for _ in 0..self.order {
            g = g.apply_deck(self);
        }
        g == *grid
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::LensParams;

    pub(crate) fn u2() -> GridDiagram {
        GridDiagram::new(LensParams::s3(), vec![1, 0], vec![0, 1]).unwrap()
    }

    pub(crate) fn t1() -> GridDiagram {
        GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0], vec![3]).unwrap()
    }

    #[test]
    fn validates_examples() {
        assert!(u2().validate().ok());
        let bad = validate(4, 2, 1, &[0], &[3]);
        assert!(bad.errors.contains(&GridError::GcdViolation { p: 4, q: 2 }));
        let triv = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0], vec![0]).unwrap();
        let rep = triv.validate();
        assert!(rep.ok());
        assert_eq!(rep.trivial_cells, vec![(0, 0)]);
    }

    #[test]
    fn partial_coincidence_is_fine() {
        // O and X in the same row and same column annulus but different cells
        let g = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0], vec![2]).unwrap();
        assert!(g.validate().ok());
        assert!(g.validate().trivial_cells.is_empty());
    }

    #[test]
    fn translate_full_period_is_identity() {
        let g = t1();
        assert_eq!(g.translate(5, 0), g);
        let g = u2();
        assert_eq!(g.translate(2, 0), g);
        assert_eq!(g.translate(0, 2), g);
    }

    #[test]
    fn translate_example_t1() {
        let g = t1().translate(1, 0);
        assert_eq!(g.o_col(), &[1]);
        assert_eq!(g.x_col(), &[4]);
        assert!(g.validate().ok());
    }

    #[test]
    fn vertical_cycle_equals_horizontal_twist() {
        // translating up by n equals a horizontal shift by -q*n
        let g = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0, 3], vec![4, 7]).unwrap();
        assert_eq!(g.translate(0, 2), g.translate(-4, 0));
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant() {
        let g = t1();
        let c = g.canonical_form();
        assert_eq!(c.canonical_form(), c);
        for dx in 0..5 {
            assert_eq!(g.translate(dx, 0).canonical_form(), c);
        }
        // brute-force minimum over the orbit of 5 horizontal translates
        let min = (0..5)
            .map(|dx| {
                let t = g.translate(dx, 0);
                (t.o_col().to_vec(), t.x_col().to_vec())
            })
            .min()
            .unwrap();
        assert_eq!((c.o_col().to_vec(), c.x_col().to_vec()), min);
    }

    #[test]
    fn lift_t1_matches_shear_formula() {
        let (lift, deck) = t1().lift_to_cover();
        assert_eq!(lift.size(), 5);
        for k in 0..5usize {
            assert_eq!(lift.o_perm()[k], (2 * k) % 5);
            assert_eq!(lift.x_perm()[k], (3 + 2 * k) % 5);
        }
        assert_eq!(lift.apply_deck(&deck), lift);
        assert!(deck.is_identity_power(&lift));
    }

    #[test]
    fn lift_p1_is_identity() {
        let g = u2();
        let (lift, _) = g.lift_to_cover();
        assert_eq!(lift.as_grid_diagram(), g);
    }

    #[test]
    fn dual_params_and_u2() {
        let d = t1().dual();
        assert_eq!(d.params().p(), 5);
        assert_eq!(d.params().q(), 2);
        assert_eq!(d.o_col(), &[3]);
        assert_eq!(d.x_col(), &[2]);
        // U2 is its own dual up to translation
        let du = u2().dual();
        assert_eq!(du.canonical_form(), u2().canonical_form());
    }

    #[test]
    fn dual_square_is_pi_rotation_up_to_translation() {
        let g = t1();
        let dd = g.dual().dual();
        assert_eq!(dd.canonical_form(), g.pi_rotate().canonical_form());
        assert_eq!(dd.link_class_form(), g.link_class_form());
        let g = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0, 3], vec![4, 7]).unwrap();
        let dd = g.dual().dual();
        assert_eq!(dd.canonical_form(), g.pi_rotate().canonical_form());
        assert_eq!(dd.link_class_form(), g.link_class_form());
    }

    #[test]
    fn pi_rotation_is_involutive() {
        let g = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0, 3], vec![4, 7]).unwrap();
        assert_eq!(g.pi_rotate().pi_rotate(), g);
        assert!(g.pi_rotate().validate().ok());
    }

    #[test]
    fn lift_dual_compatibility() {
        for g in [t1(), GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0, 3], vec![4, 7]).unwrap()] {
            let (lift, _) = g.lift_to_cover();
            let (lift_of_dual, _) = g.dual().lift_to_cover();
            assert_eq!(
                lift_of_dual.canonical_form(),
                lift.dual().canonical_form(),
                "lift/dual compatibility failed"
            );
        }
    }

    #[test]
    fn components_and_orders() {
        assert_eq!(u2().components().len(), 1);
        assert_eq!(t1().components().len(), 1);
        assert_eq!(t1().component_orders(), vec![5]);
        assert_eq!(u2().component_orders(), vec![1]);
        // split two-component diagram in S^3
        let split = GridDiagram::new(
            LensParams::s3(),
            vec![1, 0, 3, 2],
            vec![0, 1, 2, 3],
        )
        .unwrap();
        assert_eq!(split.components().len(), 2);
        assert_eq!(split.component_orders(), vec![1, 1]);
    }

    #[test]
    fn order_two_class_in_l42() {
        // doubled GN1 pattern in L(4,1): lift splits into 2 components
        let g = GridDiagram::new(LensParams::new(4, 1).unwrap(), vec![0], vec![2]).unwrap();
        assert_eq!(g.components().len(), 1);
        assert_eq!(g.component_orders(), vec![2]);
        let (lift, _) = g.lift_to_cover();
        assert_eq!(lift.components().len(), 2);
    }

    #[test]
    fn text_round_trip() {
        let g = GridDiagram::new(LensParams::new(5, 2).unwrap(), vec![0, 3], vec![4, 7]).unwrap();
        let parsed = GridDiagram::parse(&g.to_text()).unwrap();
        assert_eq!(parsed, g);
        let with_comments = "# a diagram\nlens 5 2\n n 1 # grid number\nO 0\nX 3\n";
        assert_eq!(GridDiagram::parse(with_comments).unwrap(), t1());
    }

    #[test]
    fn parser_rejects_out_of_range() {
        assert!(GridDiagram::parse("lens 5 2\nn 1\nO 5\nX 3\n").is_err());
        assert!(GridDiagram::parse("lens 4 2\nn 1\nO 0\nX 3\n").is_err());
        // negative q is normalized
        let g = GridDiagram::parse("lens 5 -3\nn 1\nO 0\nX 3\n").unwrap();
        assert_eq!(g.params().q(), 2);
    }
}
