//! Explicit genus-zero dessins realizing the four specialized tables for
//! every parameter.
//!
//! Each family is drawn as a plane map (see the `plane` submodule) whose vertices become
//! the faces of the dessin, whose edges become black vertices of valency 2,
//! whose dangling edges become the black leaves carrying `0, 1, λ`, and
//! whose faces become white vertices. Every construction uses a constant
//! number of local operations on a strip of triangles, so it runs in linear
//! time.
//!
//! | case        | map vertices           | map faces              | leaves |
//! |-------------|------------------------|------------------------|--------|
//! | `oct_half`  | one of degree `2k+3`, `k` of degree 4 | triangles | 3 |
//! | `oct_third` | one of degree 2, `k` of degree 4 | one `(k+2)`-gon, triangles | 2 |
//! | `ico_third` | all of degree 5        | one `(k+2)`-gon, triangles | 3 |
//! | `ico_fifth` | one of degree `k+3`, `k` of degree 5 | triangles | 3 |

pub(crate) mod plane;

use crate::hypermap::{Dessin, MarkLabel, MarkedDessin};
use crate::tables::{table_for_case, CaseId, RamificationTable};

use plane::PlaneMap;

/// Triangulated strip `s_1 .. s_n` zig-zagging between two rows, with
/// triangles `(s_i, s_{i+1}, s_{i+2})`. Vertex `s_i` has index `i - 1`.
fn strip(n: usize) -> PlaneMap {
    let coords: Vec<(i64, i64)> = (1..=n as i64).map(|i| (i, i % 2)).collect();
    let mut edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    edges.extend((0..n.saturating_sub(2)).map(|i| (i, i + 2)));
    PlaneMap::from_coords(&coords, &edges)
}

fn path(n: usize) -> PlaneMap {
    let coords: Vec<(i64, i64)> = (1..=n as i64).map(|i| (i, 0)).collect();
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    PlaneMap::from_coords(&coords, &edges)
}

/// A single vertex with `d` dangling edges.
fn star(d: usize) -> PlaneMap {
    let mut m = PlaneMap::new();
    let v = m.add_vertex();
    for _ in 0..d {
        m.dangle_at(v);
    }
    m
}

/// Two vertices joined by one edge, ready for parallel edges.
fn edge() -> (PlaneMap, usize, usize) {
    let mut m = PlaneMap::new();
    let u = m.add_vertex();
    let w = m.add_vertex();
    m.add_edge(u, w);
    (m, u, w)
}

/// Three rows of vertices: a middle path `m_lo..m_hi` at height 0, a top
/// row `T_0..T_{p-1}` above the odd middle vertices and a bottom row
/// `B_lo..B_hi` below the even ones. Every `T_j` sees `m_{2j..2j+2}`, every
/// `B_j` sees `m_{2j+1..2j+3}`, and consecutive top (bottom) vertices are
/// joined, so the interior is triangulated and interior vertices have
/// degree 5.
struct ThreeRow {
    map: PlaneMap,
    mid: Vec<usize>,
    top: Vec<usize>,
    bottom: Vec<usize>,
    bottom_lo: usize,
}

impl ThreeRow {
    fn new(p: usize, mid_hi: usize, bottom_hi: usize) -> Self {
        let mut coords = Vec::new();
        let mut mid = Vec::new();
        for i in 0..=mid_hi {
            mid.push(coords.len());
            coords.push((i as i64, 0));
        }
        let mut top = Vec::new();
        for j in 0..p {
            top.push(coords.len());
            coords.push((2 * j as i64 + 1, 1));
        }
        let bottom_lo = 0;
        let mut bottom = Vec::new();
        for j in bottom_lo..=bottom_hi {
            bottom.push(coords.len());
            coords.push((2 * j as i64 + 2, -1));
        }
        let mut edges = Vec::new();
        for i in 0..mid_hi {
            edges.push((mid[i], mid[i + 1]));
        }
        for j in 0..p {
            for i in [2 * j, 2 * j + 1, 2 * j + 2] {
                if i <= mid_hi {
                    edges.push((top[j], mid[i]));
                }
            }
            if j + 1 < p {
                edges.push((top[j], top[j + 1]));
            }
        }
        for j in bottom_lo..=bottom_hi {
            for i in [2 * j + 1, 2 * j + 2, 2 * j + 3] {
                if i <= mid_hi {
                    edges.push((bottom[j - bottom_lo], mid[i]));
                }
            }
            if j < bottom_hi {
                edges.push((bottom[j - bottom_lo], bottom[j + 1 - bottom_lo]));
            }
        }
        ThreeRow {
            map: PlaneMap::from_coords(&coords, &edges),
            mid,
            top,
            bottom,
            bottom_lo,
        }
    }

    fn b(&self, j: usize) -> usize {
        self.bottom[j - self.bottom_lo]
    }
}

/// Map vertices: one of degree `2N + 3` (the hub) and `N` of degree 4; all
/// faces are triangles.
fn octahedral_half_map(n: usize) -> PlaneMap {
    match n {
        0 => star(3),
        1 => {
            let (mut m, hub, s) = edge();
            m.bare_digon(hub, s, hub);
            m.bare_digon(hub, s, hub);
            let h = m.bare_corner(s);
            m.dangle(h);
            m
        }
        _ => {
            let mut m = path(n);
            let hub = m.cone(0);
            let (first, last) = (0, n - 1);
            m.digon_owned(hub, first, hub);
            m.digon_owned(hub, first, hub);
            m.digon_owned(last, hub, last);
            m
        }
    }
}

/// Map vertices: one of degree 2 and `N` of degree 4; faces: one of degree
/// `N + 2`, the rest triangles.
fn octahedral_third_map(n: usize) -> PlaneMap {
    match n {
        0 => star(2),
        1 => {
            let (mut m, _, s) = edge();
            let h = m.side(s, 0);
            m.digon(h, Some(plane::End::Tail));
            let h = m.bare_corner(s);
            m.dangle(h);
            m
        }
        _ => {
            // s_1 .. s_{N+1}; s_1 and s_{N+1} have degree 2, the rest 3 or 4.
            let mut m = strip(n + 1);
            m.digon_owned(n - 1, n, n);
            let corner = m.outer_face().into_iter().find(|&h| m.vertex(h) == 1);
            m.dangle(corner.expect("s_2 lies on the outer face"));
            m
        }
    }
}

/// Map vertices: one of degree `N + 3` (the hub) and `N` of degree 5; all
/// faces are triangles.
fn icosahedral_fifth_map(n: usize) -> PlaneMap {
    match n {
        0 => star(3),
        1 => {
            let (mut m, hub, s) = edge();
            m.bare_digon(s, hub, s);
            m.bare_digon(s, hub, s);
            let h = m.bare_corner(hub);
            m.dangle(h);
            m
        }
        2 => {
            let mut m = strip(2);
            let hub = m.cone(0);
            m.digon_owned(0, 1, 0);
            m.digon_owned(1, hub, 1);
            m.digon_owned(hub, 0, hub);
            m
        }
        _ => {
            let mut m = strip(n);
            let start = m.outer_face()[0];
            let hub = m.cone(start);
            if n == 3 {
                for s in 0..3 {
                    m.digon_owned(s, hub, s);
                }
            } else {
                m.digon_owned(0, hub, 0);
                m.digon_owned(n - 1, n - 2, n - 1);
                m.digon_owned(hub, 1, hub);
            }
            m
        }
    }
}

/// All map vertices of degree 5; faces: one of degree `M + 2`, the rest
/// triangles.
fn icosahedral_third_map(big_m: usize) -> PlaneMap {
    match big_m {
        0 => {
            let mut m = PlaneMap::new();
            let v = m.add_vertex();
            let (a, b) = m.add_loop(v);
            m.dangle(a);
            m.dangle(b);
            m.dangle(b);
            m
        }
        1 => {
            let mut m = PlaneMap::from_coords(&[(0, 0), (1, 0), (0, 1)], &[(0, 1), (1, 2), (2, 0)]);
            m.digon_owned(0, 1, 0);
            m.digon_owned(1, 2, 1);
            m.digon_owned(2, 0, 2);
            m
        }
        _ if big_m.is_multiple_of(2) => {
            let p = big_m / 2;
            let mut r = ThreeRow::new(p, 2 * p, p - 1);
            let (m0, m1, b0) = (r.mid[0], r.mid[1], r.b(0));
            r.map.outer_digon(m0, m1, m0);
            r.map.chord(m0, m1, b0);
            let (t0, tl, bl, ml) = (r.top[0], r.top[p - 1], r.b(p - 1), r.mid[2 * p]);
            r.map.outer_dangle(t0, m0);
            r.map.outer_digon(bl, ml, ml);
            r.map.chord(bl, ml, tl);
            r.map
        }
        _ => {
            let p = (big_m - 1) / 2;
            let mut r = ThreeRow::new(p, 2 * p + 1, p);
            let (m0, m1, b0) = (r.mid[0], r.mid[1], r.b(0));
            r.map.outer_digon(m0, m1, m0);
            r.map.chord(m0, m1, b0);
            let (t0, tl, bl) = (r.top[0], r.top[p - 1], r.b(p));
            let (ma, mb) = (r.mid[2 * p], r.mid[2 * p + 1]);
            r.map.outer_dangle(mb, ma);
            r.map.chord(bl, mb, mb);
            r.map.chord(bl, mb, ma);
            r.map.chord(bl, ma, tl);
            r.map.outer_dangle(t0, m0);
            r.map
        }
    }
}

/// Marks each of `0, 1, λ, ∞` on the first unused feature (in dart order)
/// of the kind and length the table prescribes.
pub fn mark_by_table(dessin: Dessin, table: &RamificationTable) -> Option<MarkedDessin> {
    let mut chosen = Vec::with_capacity(4);
    for label in MarkLabel::ALL {
        let (fiber, index) = table.fiber_of(label)?;
        let f = dessin
            .features(fiber.kind())
            .into_iter()
            .find(|f| f.len() as u64 == index && !chosen.contains(f))?;
        chosen.push(f);
    }
    let marks: [_; 4] = chosen.try_into().ok()?;
    MarkedDessin::new(dessin, marks).ok()
}

fn realize(case: CaseId, k: u64, map: PlaneMap) -> MarkedDessin {
    let table = table_for_case(case, k);
    mark_by_table(map.into_dessin(), &table)
        .unwrap_or_else(|| panic!("{case} at k = {k} does not carry the marks of its table"))
}

/// Degree `6N + 3`; leaves `0, 1, λ`, and `∞` on the face of degree `2N + 3`.
pub fn generate_octahedral_half(n: u64) -> MarkedDessin {
    realize(CaseId::OctHalf, n, octahedral_half_map(n as usize))
}

/// Degree `4N + 2`; leaves `0, 1`, `∞` on the white vertex of valency
/// `N + 2` and `λ` on the face of degree 2.
pub fn generate_octahedral_third(n: u64) -> MarkedDessin {
    realize(CaseId::OctThird, n, octahedral_third_map(n as usize))
}

/// Degree `10M + 5`; leaves `0, 1, λ`, and `∞` on the white vertex of
/// valency `M + 2`.
pub fn generate_icosahedral_third(m: u64) -> MarkedDessin {
    realize(CaseId::IcoThird, m, icosahedral_third_map(m as usize))
}

/// Degree `6N + 3`; leaves `0, 1, λ`, and `∞` on the face of degree `N + 3`.
pub fn generate_icosahedral_fifth(n: u64) -> MarkedDessin {
    realize(CaseId::IcoFifth, n, icosahedral_fifth_map(n as usize))
}

pub fn generate(case: CaseId, k: u64) -> MarkedDessin {
    match case {
        CaseId::OctHalf => generate_octahedral_half(k),
        CaseId::OctThird => generate_octahedral_third(k),
        CaseId::IcoThird => generate_icosahedral_third(k),
        CaseId::IcoFifth => generate_icosahedral_fifth(k),
    }
}
