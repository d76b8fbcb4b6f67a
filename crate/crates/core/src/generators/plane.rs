//! A small builder for plane maps with dangling half-edges.
//!
//! A map is a rotation system: each vertex keeps its half-edges in
//! counter-clockwise order, `σ` moves to the next one, and the involution
//! `α` pairs the two halves of an edge. A half-edge without a partner is a
//! *dangling* edge and is a fixed point of `α`. Faces are the cycles of
//! `φ = σ ∘ α`.
//!
//! Reading `(α, φ)` as `(σ_b, σ_w)` turns the map into a dessin whose black
//! vertices are the edges (valency 2) and danglings (valency 1), whose white
//! vertices are the faces of the map, and whose faces are the map's vertices
//! (since `(α ∘ σ ∘ α)⁻¹` is conjugate to `σ⁻¹`). Darts are numbered in the
//! order half-edges are created, so the output is reproducible.

use std::cmp::Ordering;

use crate::hypermap::Dessin;
use crate::perm::Permutation;

/// Which end of a half-edge `u → w` gets the dangling edge of a new digon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Tail,
    Head,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct PlaneMap {
    rot: Vec<Vec<usize>>,
    vert: Vec<usize>,
    partner: Vec<Option<usize>>,
}

/// Counter-clockwise order of directions, starting just after the negative
/// x-axis, computed exactly on integer vectors.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| match (y.cmp(&0), x.cmp(&0)) {
        (Ordering::Less, _) => 0,
        (Ordering::Equal, Ordering::Greater) => 1,
        (Ordering::Greater, _) => 2,
        _ => 3,
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&(a.0 * b.1 - a.1 * b.0)))
}

impl PlaneMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Straight-line embedding of a graph with integer vertex positions.
    pub fn from_coords(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> Self {
        let mut m = PlaneMap::new();
        for _ in coords {
            m.add_vertex();
        }
        let mut dir = Vec::new();
        for &(u, w) in edges {
            let a = m.new_half_edge(u);
            let b = m.new_half_edge(w);
            m.link(a, b);
            let (du, dw) = (coords[u], coords[w]);
            dir.push((dw.0 - du.0, dw.1 - du.1));
            dir.push((du.0 - dw.0, du.1 - dw.1));
            m.rot[u].push(a);
            m.rot[w].push(b);
        }
        for r in &mut m.rot {
            r.sort_by(|&a, &b| angle_cmp(dir[a], dir[b]));
        }
        m
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// A fresh half-edge at `v`, not yet placed in the rotation.
    fn new_half_edge(&mut self, v: usize) -> usize {
        self.vert.push(v);
        self.partner.push(None);
        self.vert.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = Some(b);
        self.partner[b] = Some(a);
    }

    pub fn vertex(&self, h: usize) -> usize {
        self.vert[h]
    }

    fn alpha(&self, h: usize) -> usize {
        self.partner[h].unwrap_or(h)
    }

    pub fn head(&self, h: usize) -> usize {
        self.vert[self.alpha(h)]
    }

    fn position(&self, h: usize) -> usize {
        self.rot[self.vert[h]]
            .iter()
            .position(|&x| x == h)
            .expect("half-edge is placed in its rotation")
    }

    fn insert_after(&mut self, h: usize, new: usize) {
        let v = self.vert[h];
        let i = self.position(h);
        self.rot[v].insert(i + 1, new);
    }

    fn insert_before(&mut self, h: usize, new: usize) {
        let v = self.vert[h];
        let i = self.position(h);
        self.rot[v].insert(i, new);
    }

    fn sigma_table(&self) -> Vec<usize> {
        let mut s = vec![0; self.vert.len()];
        for r in &self.rot {
            for (i, &h) in r.iter().enumerate() {
                s[h] = r[(i + 1) % r.len()];
            }
        }
        s
    }

    fn phi_table(&self) -> Vec<usize> {
        let s = self.sigma_table();
        (0..self.vert.len()).map(|h| s[self.alpha(h)]).collect()
    }

    fn walk(phi: &[usize], start: usize) -> Vec<usize> {
        let mut face = vec![start];
        let mut x = phi[start];
        while x != start {
            face.push(x);
            x = phi[x];
        }
        face
    }

    pub fn face(&self, h: usize) -> Vec<usize> {
        Self::walk(&self.phi_table(), h)
    }

    fn face_lengths(&self) -> Vec<usize> {
        let phi = self.phi_table();
        let mut len = vec![0; phi.len()];
        for h in 0..phi.len() {
            if len[h] == 0 {
                let f = Self::walk(&phi, h);
                for &x in &f {
                    len[x] = f.len();
                }
            }
        }
        len
    }

    /// The largest face, walked from its smallest half-edge.
    pub fn outer_face(&self) -> Vec<usize> {
        let len = self.face_lengths();
        let start = (0..len.len())
            .max_by(|&a, &b| len[a].cmp(&len[b]).then(b.cmp(&a)))
            .expect("map has half-edges");
        self.face(start)
    }

    /// A half-edge of some `u`–`w` edge lying on the largest face incident
    /// to such an edge.
    pub fn side(&self, u: usize, w: usize) -> usize {
        let len = self.face_lengths();
        let mut cands: Vec<usize> = self.rot[u]
            .iter()
            .copied()
            .filter(|&h| self.partner[h].is_some() && self.head(h) == w)
            .collect();
        let partners: Vec<usize> = cands.iter().map(|&h| self.alpha(h)).collect();
        cands.extend(partners);
        cands
            .into_iter()
            .min_by(|&a, &b| len[b].cmp(&len[a]))
            .unwrap_or_else(|| panic!("no edge between {u} and {w}"))
    }

    /// A half-edge at `v` whose face carries no dangling edge.
    pub fn bare_corner(&self, v: usize) -> usize {
        let phi = self.phi_table();
        self.rot[v]
            .iter()
            .copied()
            .find(|&h| {
                self.partner[h].is_some()
                    && Self::walk(&phi, h)
                        .iter()
                        .all(|&x| self.partner[x].is_some())
            })
            .unwrap_or_else(|| panic!("vertex {v} has no bare face"))
    }

    /// Adds an edge parallel to `h: u → w` inside the face of `h`, closing
    /// off a digon; optionally a dangling edge at one end is put inside it.
    pub fn digon(&mut self, h: usize, owner: Option<End>) {
        let ah = self.alpha(h);
        let (u, w) = (self.vert[h], self.vert[ah]);
        let x = self.new_half_edge(w);
        self.insert_after(ah, x);
        let y = self.new_half_edge(u);
        self.insert_before(h, y);
        self.link(x, y);
        match owner {
            Some(End::Tail) => {
                let d = self.new_half_edge(u);
                self.insert_after(y, d);
            }
            Some(End::Head) => {
                let d = self.new_half_edge(w);
                self.insert_after(ah, d);
            }
            None => {}
        }
    }

    /// Digon on the `u`–`w` edge's larger side with the dangling at `owner`.
    pub fn digon_owned(&mut self, u: usize, w: usize, owner: usize) {
        let h = self.side(u, w);
        let end = if self.vert[h] == owner {
            End::Tail
        } else {
            End::Head
        };
        self.digon(h, Some(end));
    }

    /// Digon on the `u`–`w` edge inside a face without danglings.
    pub fn bare_digon(&mut self, u: usize, w: usize, owner: usize) {
        let h = self.bare_corner(u);
        let h = if self.head(h) == w {
            h
        } else {
            let phi = self.phi_table();
            Self::walk(&phi, h)
                .into_iter()
                .find(|&x| self.vert[x] == u && self.partner[x].is_some() && self.head(x) == w)
                .unwrap_or_else(|| panic!("no bare {u}->{w} side"))
        };
        let end = if self.vert[h] == owner {
            End::Tail
        } else {
            End::Head
        };
        self.digon(h, Some(end));
    }

    /// A dangling edge at the tail of `h`, in the corner just before `h`.
    pub fn dangle(&mut self, h: usize) {
        let d = self.new_half_edge(self.vert[h]);
        self.insert_before(h, d);
    }

    /// Adds a new vertex joined to every corner of the face of `h`.
    pub fn cone(&mut self, h: usize) -> usize {
        let face = self.face(h);
        let hub = self.add_vertex();
        let mut spokes = Vec::with_capacity(face.len());
        for g in face {
            let x = self.new_half_edge(self.vert[g]);
            self.insert_before(g, x);
            let y = self.new_half_edge(hub);
            self.link(x, y);
            spokes.push(y);
        }
        spokes.reverse();
        self.rot[hub] = spokes;
        hub
    }

    /// The half-edge `u → w` on the outer face.
    pub fn outer(&self, u: usize, w: usize) -> usize {
        self.outer_face()
            .into_iter()
            .find(|&h| self.vert[h] == u && self.head(h) == w)
            .unwrap_or_else(|| panic!("no outer half-edge {u}->{w}"))
    }

    /// Where the outer walk passes `u → x → w`, joins `u` and `w` by a new
    /// edge cutting off the corner at `x`.
    pub fn chord(&mut self, u: usize, x: usize, w: usize) {
        let f = self.outer_face();
        let k = f.len();
        let i = (0..k)
            .find(|&i| {
                self.vert[f[i]] == u
                    && self.vert[f[(i + 1) % k]] == x
                    && self.vert[f[(i + 2) % k]] == w
            })
            .unwrap_or_else(|| panic!("no outer path {u}->{x}->{w}"));
        let (hi, hj) = (f[i], f[(i + 2) % k]);
        let a = self.new_half_edge(self.vert[hi]);
        self.insert_before(hi, a);
        let b = self.new_half_edge(self.vert[hj]);
        self.insert_before(hj, b);
        self.link(a, b);
    }

    /// Digon on the outer side of `u → w`, dangling at `owner`.
    pub fn outer_digon(&mut self, u: usize, w: usize, owner: usize) {
        let h = self.outer(u, w);
        let end = if owner == u { End::Tail } else { End::Head };
        self.digon(h, Some(end));
    }

    /// Dangling edge at `u` in the outer corner before `u → w`.
    pub fn outer_dangle(&mut self, u: usize, w: usize) {
        let h = self.outer(u, w);
        self.dangle(h);
    }

    /// Dangling edge at `v` in the corner before its first half-edge.
    pub fn dangle_at(&mut self, v: usize) {
        let d = self.new_half_edge(v);
        self.rot[v].insert(0, d);
    }

    /// A loop at `v` (two half-edges appended to its rotation).
    pub fn add_loop(&mut self, v: usize) -> (usize, usize) {
        let a = self.new_half_edge(v);
        let b = self.new_half_edge(v);
        self.link(a, b);
        self.rot[v].push(a);
        self.rot[v].push(b);
        (a, b)
    }

    pub fn add_edge(&mut self, u: usize, w: usize) -> (usize, usize) {
        let a = self.new_half_edge(u);
        let b = self.new_half_edge(w);
        self.link(a, b);
        self.rot[u].push(a);
        self.rot[w].push(b);
        (a, b)
    }

    /// `(σ_b, σ_w) = (α, φ)`.
    pub fn into_dessin(self) -> Dessin {
        let alpha: Vec<usize> = (0..self.vert.len()).map(|h| self.alpha(h)).collect();
        let phi = self.phi_table();
        let n = alpha.len();
        let black = Permutation::from_images(alpha).expect("alpha is an involution");
        let white = Permutation::from_images(phi).expect("phi is a permutation");
        Dessin::new(n, black, white).expect("plane maps are connected")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Partition;

    #[test]
    fn angular_order_is_counter_clockwise() {
        let mut dirs = vec![
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (1, 1),
            (-1, -1),
            (1, -1),
            (-1, 1),
        ];
        dirs.sort_by(|&a, &b| angle_cmp(a, b));
        assert_eq!(
            dirs,
            [
                (-1, -1),
                (0, -1),
                (1, -1),
                (1, 0),
                (1, 1),
                (0, 1),
                (-1, 1),
                (-1, 0)
            ]
        );
    }

    #[test]
    fn triangle_has_two_faces() {
        let m = PlaneMap::from_coords(&[(0, 0), (1, 0), (0, 1)], &[(0, 1), (1, 2), (2, 0)]);
        let d = m.into_dessin();
        assert_eq!(d.white().cycle_type(), Partition::new(vec![3, 3]));
        assert_eq!(
            d.face_permutation().cycle_type(),
            Partition::new(vec![2, 2, 2])
        );
        assert_eq!(d.genus(), Ok(0));
    }

    #[test]
    fn digon_and_cone_stay_planar() {
        let mut m = PlaneMap::from_coords(&[(0, 0), (1, 1), (2, 0)], &[(0, 1), (1, 2)]);
        let h = m.side(0, 1);
        m.digon(h, Some(End::Tail));
        let hub = m.cone(m.outer_face()[0]);
        assert_eq!(hub, 3);
        let d = m.into_dessin();
        assert_eq!(d.genus(), Ok(0));
    }
}
